//! Exhaustive backtracking computation of the plain, odd, strong and
//! strong-odd chromatic numbers, plus precoloring extension.
//!
//! This is the ground-truth oracle the rest of the crate is validated
//! against, so it favors obviousness over speed: iterative deepening on
//! the palette size with a backtracking decision search. The search
//! orders vertices by descending degree, breaks color symmetry by
//! allowing at most one fresh color per step, and in odd mode prunes as
//! soon as some vertex's neighborhood is fully colored without an odd
//! color.

use crate::coloring::{verify_odd_coloring, Coloring, Value};
use crate::graph::Graph;
use std::fmt;

pub const DEFAULT_GUARD_N: usize = 24;

/// Which extension the search looks for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtendMode {
    /// Proper coloring only.
    Proper,
    /// Proper coloring where every vertex has an odd color.
    Odd,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    /// The instance exceeds the exhaustive-search guard.
    GuardExceeded { n: usize, guard: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::GuardExceeded { n, guard } => {
                write!(f, "instance has {n} vertices, exhaustive guard is {guard}")
            }
        }
    }
}

impl std::error::Error for OracleError {}

/// Result of an exact computation: the value and, when finite, a witness
/// coloring that passes the corresponding verifier at exactly that many
/// colors.
#[derive(Clone, Debug)]
pub struct OracleResult {
    pub value: Value,
    pub witness: Option<Coloring>,
}

/// Exhaustive solver with a configurable instance-size guard.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    guard_n: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            guard_n: DEFAULT_GUARD_N,
        }
    }
}

impl Oracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_guard(guard_n: usize) -> Self {
        Oracle { guard_n }
    }

    pub fn guard(&self) -> usize {
        self.guard_n
    }

    fn check_guard(&self, g: &Graph) -> Result<(), OracleError> {
        if g.n() > self.guard_n {
            Err(OracleError::GuardExceeded {
                n: g.n(),
                guard: self.guard_n,
            })
        } else {
            Ok(())
        }
    }

    /// Chromatic number with witness.
    pub fn chi(&self, g: &Graph) -> Result<OracleResult, OracleError> {
        self.check_guard(g)?;
        if g.n() == 0 {
            return Ok(OracleResult {
                value: Value::Finite(0),
                witness: Some(Coloring::empty(0, 0)),
            });
        }
        for k in 1..=g.n() {
            let pre = Coloring::empty(g.n(), k);
            if let Some(f) = search(g, k, &pre, ExtendMode::Proper, false) {
                return Ok(OracleResult {
                    value: Value::Finite(k),
                    witness: Some(f),
                });
            }
        }
        unreachable!("every graph is n-colorable")
    }

    /// Odd chromatic number; `Unbounded` iff the graph has an isolated
    /// vertex.
    pub fn chi_odd(&self, g: &Graph) -> Result<OracleResult, OracleError> {
        self.check_guard(g)?;
        if g.n() == 0 {
            return Ok(OracleResult {
                value: Value::Finite(0),
                witness: Some(Coloring::empty(0, 0)),
            });
        }
        if g.has_isolated_vertex() {
            return Ok(OracleResult {
                value: Value::Unbounded,
                witness: None,
            });
        }
        for k in 1..=g.n() {
            let pre = Coloring::empty(g.n(), k);
            if let Some(f) = search(g, k, &pre, ExtendMode::Odd, false) {
                debug_assert!(verify_odd_coloring(g, &f).is_valid());
                return Ok(OracleResult {
                    value: Value::Finite(k),
                    witness: Some(f),
                });
            }
        }
        unreachable!("all-distinct colors odd-color any graph without isolated vertices")
    }

    /// Minimum palette admitting a proper coloring with at least one
    /// odd-size global color class.
    pub fn chi_strong(&self, g: &Graph) -> Result<OracleResult, OracleError> {
        self.check_guard(g)?;
        if g.n() == 0 {
            return Ok(OracleResult {
                value: Value::Unbounded,
                witness: None,
            });
        }
        let base = self.chi(g)?;
        let c = base.value.finite().expect("chi is always finite");
        // Class sizes summing to an odd total always include an odd class.
        if g.n() % 2 == 1 {
            return Ok(base);
        }
        for k in [c, c + 1] {
            let pre = Coloring::empty(g.n(), k);
            if let Some(f) = search(g, k, &pre, ExtendMode::Proper, true) {
                return Ok(OracleResult {
                    value: Value::Finite(k),
                    witness: Some(f),
                });
            }
        }
        unreachable!("recoloring one vertex with a fresh color yields an odd class")
    }

    /// Minimum palette admitting an odd coloring with at least one
    /// odd-size global color class.
    pub fn chi_odd_strong(&self, g: &Graph) -> Result<OracleResult, OracleError> {
        self.check_guard(g)?;
        if g.n() == 0 || g.has_isolated_vertex() {
            return Ok(OracleResult {
                value: Value::Unbounded,
                witness: None,
            });
        }
        let base = self.chi_odd(g)?;
        let c = base.value.finite().expect("no isolated vertex");
        if g.n() % 2 == 1 {
            return Ok(base);
        }
        for k in [c, c + 1] {
            let pre = Coloring::empty(g.n(), k);
            if let Some(f) = search(g, k, &pre, ExtendMode::Odd, true) {
                debug_assert!(verify_odd_coloring(g, &f).is_valid());
                return Ok(OracleResult {
                    value: Value::Finite(k),
                    witness: Some(f),
                });
            }
        }
        unreachable!("a fresh singleton class preserves oddness and has odd size")
    }

    /// Extends the partial coloring `pre` to a total coloring of `g`
    /// within palette `1..=k`, in the requested mode. Returns `None` when
    /// no extension exists (including when `pre` itself is improper).
    pub fn colorable_with(
        &self,
        g: &Graph,
        k: usize,
        pre: &Coloring,
        mode: ExtendMode,
    ) -> Result<Option<Coloring>, OracleError> {
        self.check_guard(g)?;
        assert_eq!(pre.n(), g.n(), "precoloring size mismatch");
        assert!(pre.k() <= k, "precoloring palette exceeds k");
        let mut pre = pre.clone();
        pre.set_palette(k);
        Ok(search(g, k, &pre, mode, false))
    }

    /// Decision form of [`Oracle::colorable_with`] with an empty
    /// precoloring.
    pub fn decide(&self, g: &Graph, k: usize, mode: ExtendMode) -> Result<bool, OracleError> {
        let pre = Coloring::empty(g.n(), k);
        Ok(self.colorable_with(g, k, &pre, mode)?.is_some())
    }
}

/// Backtracking search for a total coloring of `g` in `1..=k` extending
/// `pre`. In `Odd` mode every vertex must end up with an odd color; with
/// `strong` some global color class must have odd size.
fn search(g: &Graph, k: usize, pre: &Coloring, mode: ExtendMode, strong: bool) -> Option<Coloring> {
    let n = g.n();
    // The precoloring must already be proper.
    for (u, v) in g.edges() {
        if let (Some(a), Some(b)) = (pre.get(u), pre.get(v)) {
            if a == b {
                return None;
            }
        }
    }

    let mut colors: Vec<usize> = (0..n).map(|v| pre.get(v).unwrap_or(0)).collect();
    let mut order: Vec<usize> = (0..n).filter(|&v| colors[v] == 0).collect();
    order.sort_by_key(|&v| (usize::MAX - g.degree(v), v));

    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }

    // finalize[i]: vertices whose last uncolored neighbor sits at order[i];
    // their odd-color condition becomes checkable right after step i.
    let mut finalize: Vec<Vec<usize>> = vec![Vec::new(); order.len()];
    if mode == ExtendMode::Odd {
        for u in 0..n {
            let last = g
                .neighbors(u)
                .iter()
                .filter(|&&w| pos[w] != usize::MAX)
                .map(|&w| pos[w])
                .max();
            match last {
                Some(p) => finalize[p].push(u),
                None => {
                    // Entire neighborhood precolored (or empty): check now.
                    if !has_odd_color(g, &colors, u) {
                        return None;
                    }
                }
            }
        }
    }

    let mut fixed = vec![false; k + 1];
    for v in 0..n {
        if colors[v] != 0 {
            fixed[colors[v]] = true;
        }
    }
    let mut used = vec![0usize; k + 1];

    fn backtrack(
        g: &Graph,
        k: usize,
        order: &[usize],
        finalize: &[Vec<usize>],
        fixed: &[bool],
        used: &mut [usize],
        colors: &mut [usize],
        mode: ExtendMode,
        strong: bool,
        depth: usize,
    ) -> bool {
        if depth == order.len() {
            if strong {
                let mut counts = vec![0usize; k + 1];
                for &c in colors.iter() {
                    counts[c] += 1;
                }
                return counts[1..].iter().any(|&c| c % 2 == 1);
            }
            return true;
        }
        let v = order[depth];
        // Colors symmetric to an untouched non-fixed color are skipped:
        // besides fixed and already-used colors, only the smallest fresh
        // one is tried.
        let fresh = (1..=k).find(|&c| !fixed[c] && used[c] == 0);
        for c in 1..=k {
            if !fixed[c] && used[c] == 0 && Some(c) != fresh {
                continue;
            }
            if g.neighbors(v).iter().any(|&u| colors[u] == c) {
                continue;
            }
            colors[v] = c;
            used[c] += 1;
            let ok = mode != ExtendMode::Odd
                || finalize[depth].iter().all(|&u| has_odd_color(g, colors, u));
            if ok
                && backtrack(
                    g,
                    k,
                    order,
                    finalize,
                    fixed,
                    used,
                    colors,
                    mode,
                    strong,
                    depth + 1,
                )
            {
                return true;
            }
            used[c] -= 1;
            colors[v] = 0;
        }
        false
    }

    if backtrack(
        g,
        k,
        &order,
        &finalize,
        &fixed,
        &mut used,
        &mut colors,
        mode,
        strong,
        0,
    ) {
        Some(Coloring::total(colors, k))
    } else {
        None
    }
}

fn has_odd_color(g: &Graph, colors: &[usize], u: usize) -> bool {
    let nbrs = g.neighbors(u);
    nbrs.iter().any(|&w| {
        let c = colors[w];
        debug_assert!(c != 0);
        nbrs.iter().filter(|&&x| colors[x] == c).count() % 2 == 1
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{color_class_parities, is_proper, Parity};
    use crate::graph::Graph;

    fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>())
    }

    /// Definition-direct enumeration over all k^n colorings, independent
    /// of the backtracking path.
    fn naive_odd_decision(g: &Graph, k: usize) -> bool {
        let n = g.n();
        let mut assign = vec![1usize; n];
        loop {
            let f = Coloring::total(assign.clone(), k);
            if verify_odd_coloring(g, &f).is_valid() {
                return true;
            }
            // Odometer increment; stop after wrapping all the way around.
            let mut i = 0;
            while i < n {
                assign[i] += 1;
                if assign[i] <= k {
                    break;
                }
                assign[i] = 1;
                i += 1;
            }
            if i == n {
                return false;
            }
        }
    }

    fn naive_chi_odd(g: &Graph) -> Value {
        if g.has_isolated_vertex() {
            return Value::Unbounded;
        }
        Value::Finite((1..=g.n()).find(|&k| naive_odd_decision(g, k)).unwrap())
    }

    #[test]
    fn chi_basics() {
        let o = Oracle::new();
        assert_eq!(o.chi(&complete(4)).unwrap().value, Value::Finite(4));
        assert_eq!(o.chi(&cycle(5)).unwrap().value, Value::Finite(3));
        assert_eq!(o.chi(&path(6)).unwrap().value, Value::Finite(2));
    }

    #[test]
    fn chi_odd_cliques() {
        let o = Oracle::new();
        for n in 2..=8 {
            let r = o.chi_odd(&complete(n)).unwrap();
            assert_eq!(r.value, Value::Finite(n));
            assert!(verify_odd_coloring(&complete(n), &r.witness.unwrap()).is_valid());
        }
    }

    #[test]
    fn chi_odd_c4_and_p3() {
        let o = Oracle::new();
        assert_eq!(o.chi_odd(&cycle(4)).unwrap().value, Value::Finite(4));
        assert_eq!(o.chi_odd(&path(3)).unwrap().value, Value::Finite(3));
        // Cross-check against the definition-direct enumeration.
        assert_eq!(naive_chi_odd(&cycle(4)), Value::Finite(4));
        assert_eq!(naive_chi_odd(&path(3)), Value::Finite(3));
    }

    #[test]
    fn chi_odd_isolated_vertex_unbounded() {
        let o = Oracle::new();
        let mut g = complete(3);
        g.add_vertex();
        assert_eq!(o.chi_odd(&g).unwrap().value, Value::Unbounded);
        assert_eq!(o.chi_odd(&Graph::new(1)).unwrap().value, Value::Unbounded);
    }

    #[test]
    fn chi_strong_examples() {
        let o = Oracle::new();
        assert_eq!(o.chi_strong(&complete(3)).unwrap().value, Value::Finite(3));
        // Every proper 2-coloring of C4 has classes 2+2.
        assert_eq!(o.chi_strong(&cycle(4)).unwrap().value, Value::Finite(3));
        // Odd vertex count: strong equals plain.
        let g = cycle(5);
        assert_eq!(o.chi_strong(&g).unwrap().value, o.chi(&g).unwrap().value);
    }

    #[test]
    fn chi_odd_strong_examples() {
        let o = Oracle::new();
        assert_eq!(
            o.chi_odd_strong(&complete(3)).unwrap().value,
            Value::Finite(3)
        );
        assert_eq!(
            o.chi_odd_strong(&Graph::new(1)).unwrap().value,
            Value::Unbounded
        );
        let k2 = complete(2);
        let r = o.chi_odd_strong(&k2).unwrap();
        assert_eq!(r.value, Value::Finite(2));
        let w = r.witness.unwrap();
        assert!(color_class_parities(&k2, &w)
            .values()
            .any(|&p| p == Parity::Odd));
    }

    #[test]
    fn extension_examples() {
        let o = Oracle::new();
        let k3 = complete(3);
        let mut pre = Coloring::empty(3, 3);
        pre.set(0, 1);
        assert!(o
            .colorable_with(&k3, 3, &pre, ExtendMode::Odd)
            .unwrap()
            .is_some());
        assert!(o
            .colorable_with(&k3, 2, &Coloring::empty(3, 2), ExtendMode::Odd)
            .unwrap()
            .is_none());
        assert!(o
            .colorable_with(&cycle(4), 3, &Coloring::empty(4, 3), ExtendMode::Odd)
            .unwrap()
            .is_none());
    }

    #[test]
    fn improper_precoloring_has_no_extension() {
        let o = Oracle::new();
        let g = path(2);
        let mut pre = Coloring::empty(2, 3);
        pre.set(0, 1);
        pre.set(1, 1);
        assert!(o
            .colorable_with(&g, 3, &pre, ExtendMode::Proper)
            .unwrap()
            .is_none());
    }

    #[test]
    fn decreasing_k_below_value_fails() {
        let o = Oracle::new();
        let g = cycle(4);
        let v = o.chi_odd(&g).unwrap().value.finite().unwrap();
        assert!(o.decide(&g, v, ExtendMode::Odd).unwrap());
        assert!(!o.decide(&g, v - 1, ExtendMode::Odd).unwrap());
    }

    #[test]
    fn witness_uses_exactly_value_colors() {
        let o = Oracle::new();
        let g = cycle(7);
        let r = o.chi_odd(&g).unwrap();
        let w = r.witness.unwrap();
        assert_eq!(Value::Finite(w.colors_used()), r.value);
        assert_eq!(w.k(), r.value.finite().unwrap());
        assert!(is_proper(&g, &w));
    }

    #[test]
    fn guard_refuses_large_instances() {
        let o = Oracle::with_guard(4);
        let g = complete(5);
        assert!(matches!(
            o.chi(&g),
            Err(OracleError::GuardExceeded { n: 5, guard: 4 })
        ));
    }

    #[test]
    fn invariant_under_relabeling() {
        let o = Oracle::new();
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]);
        let perm = vec![3, 5, 0, 1, 4, 2];
        let h = g.relabel(&perm);
        assert_eq!(o.chi_odd(&g).unwrap().value, o.chi_odd(&h).unwrap().value);
        assert_eq!(o.chi(&g).unwrap().value, o.chi(&h).unwrap().value);
    }
}
