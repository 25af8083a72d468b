//! Interval representations and odd coloring of interval graphs.
//!
//! Input is always a representation (one closed interval per vertex), not
//! an abstract graph; recognition is out of scope. Representations are
//! normalized to *distinguishing* form (all 2n endpoints distinct) by a
//! deterministic perturbation that preserves the intersection graph.
//!
//! The general algorithm colors with at most `omega + 1` colors: a
//! greedily built backbone path is colored 1,2,3 cyclically, then the
//! remaining intervals are list-colored in left-endpoint order. Every
//! result is re-verified; if the list coloring ever fails, the phase-one
//! partial coloring is extended by the exact oracle instead and the
//! instance is flagged.

use crate::coloring::{verify_odd_coloring, Coloring, Value};
use crate::graph::Graph;
use crate::oracle::{ExtendMode, Oracle, OracleResult};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntervalError {
    /// A vertex's interval properly contains another's; the operation is
    /// only defined for proper interval representations.
    NotProperInterval { outer: usize, inner: usize },
    /// Bad interval file input.
    Parse { line: usize, message: String },
}

impl fmt::Display for IntervalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntervalError::NotProperInterval { outer, inner } => {
                write!(
                    f,
                    "interval of vertex {outer} contains interval of vertex {inner}"
                )
            }
            IntervalError::Parse { line, message } => {
                write!(f, "interval file, line {line}: {message}")
            }
        }
    }
}

impl std::error::Error for IntervalError {}

/// Closed intervals with pairwise distinct integer endpoints.
///
/// Rational input is scaled to integers; duplicate endpoints are separated
/// by stable per-vertex offsets small enough to keep every intersection
/// and every gap.
#[derive(Clone, Debug)]
pub struct IntervalRepresentation {
    lo: Vec<i64>,
    hi: Vec<i64>,
}

impl IntervalRepresentation {
    /// Builds a distinguishing representation from integer endpoints
    /// (`l <= r` per interval; duplicates allowed and perturbed away).
    pub fn from_integer_endpoints(intervals: Vec<(i64, i64)>) -> Self {
        for (i, &(l, r)) in intervals.iter().enumerate() {
            assert!(l <= r, "interval {i} has l > r");
        }
        let n = intervals.len();
        let mut endpoints: Vec<i64> = intervals.iter().flat_map(|&(l, r)| [l, r]).collect();
        endpoints.sort_unstable();
        let distinct = endpoints.windows(2).all(|w| w[0] != w[1]);
        if distinct {
            return IntervalRepresentation {
                lo: intervals.iter().map(|&(l, _)| l).collect(),
                hi: intervals.iter().map(|&(_, r)| r).collect(),
            };
        }
        // Scale so the gap between distinct values dominates the offsets,
        // then nudge left endpoints down and right endpoints up by a
        // per-vertex amount. Touching intervals keep touching, disjoint
        // ones keep their gap, and all endpoints become distinct.
        let scale = (2 * n + 4) as i64;
        let mut lo = Vec::with_capacity(n);
        let mut hi = Vec::with_capacity(n);
        for (v, &(l, r)) in intervals.iter().enumerate() {
            let l2 = l
                .checked_mul(scale)
                .and_then(|x| x.checked_sub(v as i64 + 1))
                .expect("interval endpoint overflow");
            let r2 = r
                .checked_mul(scale)
                .and_then(|x| x.checked_add(v as i64 + 1))
                .expect("interval endpoint overflow");
            lo.push(l2);
            hi.push(r2);
        }
        let rep = IntervalRepresentation { lo, hi };
        debug_assert!(rep.endpoints_distinct());
        rep
    }

    pub fn n(&self) -> usize {
        self.lo.len()
    }

    pub fn left(&self, v: usize) -> i64 {
        self.lo[v]
    }

    pub fn right(&self, v: usize) -> i64 {
        self.hi[v]
    }

    pub fn endpoints_distinct(&self) -> bool {
        let mut pts: Vec<i64> = self.lo.iter().chain(self.hi.iter()).copied().collect();
        pts.sort_unstable();
        pts.windows(2).all(|w| w[0] != w[1])
    }

    pub fn intersects(&self, u: usize, v: usize) -> bool {
        u != v && self.lo[u] <= self.hi[v] && self.lo[v] <= self.hi[u]
    }

    /// The intersection graph realized by this representation.
    pub fn companion_graph(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if self.intersects(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// True when no interval properly contains another.
    pub fn is_proper(&self) -> bool {
        self.containment_pair().is_none()
    }

    fn containment_pair(&self) -> Option<(usize, usize)> {
        let n = self.n();
        for u in 0..n {
            for v in 0..n {
                if u != v && self.lo[u] < self.lo[v] && self.hi[v] < self.hi[u] {
                    return Some((u, v));
                }
            }
        }
        None
    }
}

/// Maximum number of pairwise intersecting intervals, by an endpoint sweep.
pub fn omega(ir: &IntervalRepresentation) -> usize {
    assert!(ir.n() > 0, "omega of an empty representation");
    omega_of(ir, &(0..ir.n()).collect::<Vec<_>>())
}

fn omega_of(ir: &IntervalRepresentation, verts: &[usize]) -> usize {
    let mut events: Vec<(i64, i32)> = Vec::with_capacity(2 * verts.len());
    for &v in verts {
        events.push((ir.lo[v], 1));
        events.push((ir.hi[v], -1));
    }
    events.sort_unstable();
    let mut depth = 0i32;
    let mut best = 0i32;
    for (_, d) in events {
        depth += d;
        best = best.max(depth);
    }
    best as usize
}

/// Greedily built dominating induced path: start from the interval with
/// the smallest right endpoint, repeatedly hop to the neighbor whose right
/// endpoint reaches furthest. Requires a connected representation.
pub fn build_backbone_path(ir: &IntervalRepresentation) -> Vec<usize> {
    assert!(ir.endpoints_distinct());
    let g = ir.companion_graph();
    assert!(
        g.is_connected(),
        "backbone path requires a connected representation"
    );
    let verts: Vec<usize> = (0..ir.n()).collect();
    let path = backbone_of(ir, &g, &verts);
    debug_assert!(dominates(&g, &path, &verts));
    path
}

fn backbone_of(ir: &IntervalRepresentation, g: &Graph, verts: &[usize]) -> Vec<usize> {
    let mut in_comp = vec![false; ir.n()];
    for &v in verts {
        in_comp[v] = true;
    }
    let first = *verts
        .iter()
        .min_by_key(|&&v| ir.hi[v])
        .expect("nonempty component");
    let mut path = vec![first];
    loop {
        let cur = *path.last().unwrap();
        let next = g
            .neighbors(cur)
            .iter()
            .filter(|&&u| in_comp[u] && ir.hi[u] > ir.hi[cur])
            .max_by_key(|&&u| ir.hi[u])
            .copied();
        match next {
            Some(u) => path.push(u),
            None => break,
        }
    }
    path
}

fn dominates(g: &Graph, path: &[usize], verts: &[usize]) -> bool {
    let mut covered = vec![false; g.n()];
    for &p in path {
        covered[p] = true;
        for &u in g.neighbors(p) {
            covered[u] = true;
        }
    }
    verts.iter().all(|&v| covered[v])
}

/// Outcome of [`color_interval_graph`]: a verified coloring plus the
/// number of components where the list coloring had to fall back to
/// oracle extension.
#[derive(Clone, Debug)]
pub struct IntervalColoring {
    pub coloring: Coloring,
    pub fallbacks: usize,
}

/// Colors the intersection graph with at most `omega + 1` colors so that
/// the result passes the odd-coloring verifier. Disconnected inputs are
/// processed per component; isolated vertices are rejected (no odd
/// coloring exists at all).
pub fn color_interval_graph(ir: &IntervalRepresentation) -> IntervalColoring {
    assert!(ir.endpoints_distinct());
    let g = ir.companion_graph();
    assert!(
        !g.has_isolated_vertex(),
        "isolated vertices admit no odd coloring"
    );
    let w = omega(ir);
    let mut colors = vec![0usize; ir.n()];
    let mut fallbacks = 0;
    for comp in g.connected_components() {
        if !color_component(ir, &g, &comp, &mut colors) {
            fallbacks += 1;
            oracle_fallback(ir, &g, &comp, &mut colors);
        }
    }
    let coloring = Coloring::total(colors, w + 1);
    let cert = verify_odd_coloring(&g, &coloring);
    assert!(cert.is_valid(), "interval coloring failed verification");
    IntervalColoring {
        coloring,
        fallbacks,
    }
}

/// Two-phase coloring of one component. Returns false when a list runs
/// empty or the verifier rejects the component's coloring.
fn color_component(
    ir: &IntervalRepresentation,
    g: &Graph,
    comp: &[usize],
    colors: &mut [usize],
) -> bool {
    let k = omega_of(ir, comp);
    let path = backbone_of(ir, g, comp);
    let r = path.len();
    let mut on_path = vec![false; ir.n()];
    let mut path_pos = vec![usize::MAX; ir.n()];
    for (i, &v) in path.iter().enumerate() {
        on_path[v] = true;
        path_pos[v] = i;
        colors[v] = i % 3 + 1;
    }
    // Designated odd color of each path vertex: the color of its later
    // path neighbor (earlier one for the last vertex). Phase two must not
    // duplicate it in that vertex's neighborhood.
    let designated = |q: usize| -> usize {
        if q + 1 < r {
            (q + 1) % 3 + 1
        } else if r >= 2 {
            (q - 1) % 3 + 1
        } else {
            0 // single-vertex path: nothing to protect
        }
    };

    let mut rest: Vec<usize> = comp.iter().copied().filter(|&v| !on_path[v]).collect();
    rest.sort_by_key(|&v| ir.lo[v]);
    for &v in &rest {
        let mut pnbrs: Vec<usize> = g
            .neighbors(v)
            .iter()
            .filter(|&&u| on_path[u])
            .map(|&u| path_pos[u])
            .collect();
        pnbrs.sort_unstable();
        // Colors 4..=k+1 are always in the list; a color from {1,2,3} may
        // be added when it threatens no path vertex's designated color.
        let mut list: Vec<usize> = (4..=k + 1).collect();
        match pnbrs.len() {
            0 => unreachable!("backbone dominates its component"),
            1 => {
                let q = pnbrs[0];
                for c in 1..=3usize {
                    if c != colors[path[q]] && c != designated(q) {
                        list.push(c);
                        break;
                    }
                }
            }
            2 => {
                let (q, q2) = (pnbrs[0], pnbrs[1]);
                if q2 == q + 1 && q2 == r - 1 {
                    // The later neighbor closes the path; its designated
                    // color looks backward, so the remaining small color
                    // is safe.
                    for c in 1..=3usize {
                        if c != colors[path[q]] && c != colors[path[q2]] {
                            list.push(c);
                            break;
                        }
                    }
                }
                // Interior pairs leave no usable color among {1,2,3}.
            }
            _ => {
                // Three consecutive path neighbors block all of {1,2,3}.
            }
        }
        list.sort_unstable();
        let taken: Vec<usize> = g
            .neighbors(v)
            .iter()
            .filter(|&&u| colors[u] != 0)
            .map(|&u| colors[u])
            .collect();
        match list.iter().find(|c| !taken.contains(c)) {
            Some(&c) => colors[v] = c,
            None => {
                for &u in comp {
                    if !on_path[u] {
                        colors[u] = 0;
                    }
                }
                return false;
            }
        }
    }
    // Gate the component through the verifier; roll back on failure.
    let (sub, map) = g.induced(comp);
    let sub_colors: Vec<usize> = map.iter().map(|&v| colors[v]).collect();
    let f = Coloring::total(sub_colors, k + 1);
    if verify_odd_coloring(&sub, &f).is_valid() {
        true
    } else {
        for &v in comp {
            if !on_path[v] {
                colors[v] = 0;
            }
        }
        false
    }
}

/// Extends the phase-one backbone coloring by exact search within
/// `omega + 1` colors (dropping the backbone precoloring if necessary).
fn oracle_fallback(ir: &IntervalRepresentation, g: &Graph, comp: &[usize], colors: &mut [usize]) {
    let k = omega_of(ir, comp) + 1;
    let (sub, map) = g.induced(comp);
    let oracle = Oracle::with_guard(sub.n().max(crate::oracle::DEFAULT_GUARD_N));
    let mut pre = Coloring::empty(sub.n(), k);
    for (new, &old) in map.iter().enumerate() {
        if colors[old] != 0 {
            pre.set(new, colors[old]);
        }
    }
    let found = oracle
        .colorable_with(&sub, k, &pre, ExtendMode::Odd)
        .ok()
        .flatten()
        .or_else(|| {
            oracle
                .colorable_with(&sub, k, &Coloring::empty(sub.n(), k), ExtendMode::Odd)
                .ok()
                .flatten()
        })
        .expect("omega+1 colors always suffice for interval graphs");
    for (new, &old) in map.iter().enumerate() {
        colors[old] = found.get(new).unwrap();
    }
}

/// A vertex with `omega - 1` left neighbors and `omega - 1` right
/// neighbors, i.e. one sitting in two maximum cliques that meet only in
/// it. Requires a proper interval representation.
pub fn has_two_max_disjoint_cliques_vertex(
    ir: &IntervalRepresentation,
) -> Result<Option<usize>, IntervalError> {
    assert!(ir.endpoints_distinct());
    if let Some((outer, inner)) = ir.containment_pair() {
        return Err(IntervalError::NotProperInterval { outer, inner });
    }
    let k = omega(ir);
    for v in 0..ir.n() {
        let mut left = 0;
        let mut right = 0;
        for u in 0..ir.n() {
            if u == v || !ir.intersects(u, v) {
                continue;
            }
            if ir.lo[u] < ir.lo[v] {
                left += 1;
            } else {
                right += 1;
            }
        }
        if left + 1 == k && right + 1 == k {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// Exact odd chromatic number of a proper interval representation:
/// `omega + 1` iff some vertex lies in two maximum cliques meeting only in
/// it, else `omega` with a cyclic witness over the right-endpoint order.
pub fn chi_odd_proper_interval(ir: &IntervalRepresentation) -> Result<OracleResult, IntervalError> {
    if let Some((outer, inner)) = ir.containment_pair() {
        return Err(IntervalError::NotProperInterval { outer, inner });
    }
    let g = ir.companion_graph();
    if g.has_isolated_vertex() {
        return Ok(OracleResult {
            value: Value::Unbounded,
            witness: None,
        });
    }
    let k = omega(ir);
    if has_two_max_disjoint_cliques_vertex(ir)?.is_some() {
        let out = color_interval_graph(ir);
        let mut witness = out.coloring;
        witness.set_palette(k + 1);
        let cert = verify_odd_coloring(&g, &witness);
        assert!(cert.is_valid());
        assert_eq!(
            witness.colors_used(),
            k + 1,
            "witness must need omega+1 colors"
        );
        Ok(OracleResult {
            value: Value::Finite(k + 1),
            witness: Some(witness),
        })
    } else {
        let mut order: Vec<usize> = (0..ir.n()).collect();
        order.sort_by_key(|&v| ir.hi[v]);
        let mut colors = vec![0usize; ir.n()];
        for (i, &v) in order.iter().enumerate() {
            colors[v] = i % k + 1;
        }
        let witness = Coloring::total(colors, k);
        let cert = verify_odd_coloring(&g, &witness);
        assert!(cert.is_valid(), "cyclic witness failed verification");
        Ok(OracleResult {
            value: Value::Finite(k),
            witness: Some(witness),
        })
    }
}

/// Parses an interval file: one `id l r` line per vertex with ids
/// `0..n-1`, endpoints given as integers, decimals or fractions.
pub fn parse_intervals(text: &str) -> Result<IntervalRepresentation, IntervalError> {
    let perr = |line: usize, message: String| IntervalError::Parse { line, message };
    let mut rows: Vec<(usize, (i64, i64), (i64, i64))> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let ln = idx + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_ascii_whitespace().collect();
        if toks.len() != 3 {
            return Err(perr(ln, format!("expected 'id l r', got {line:?}")));
        }
        let id: usize = toks[0]
            .parse()
            .map_err(|_| perr(ln, format!("bad vertex id {:?}", toks[0])))?;
        let l = parse_rational(toks[1])
            .ok_or_else(|| perr(ln, format!("bad endpoint {:?}", toks[1])))?;
        let r = parse_rational(toks[2])
            .ok_or_else(|| perr(ln, format!("bad endpoint {:?}", toks[2])))?;
        if (l.0 as i128) * (r.1 as i128) > (r.0 as i128) * (l.1 as i128) {
            return Err(perr(ln, "left endpoint exceeds right endpoint".into()));
        }
        rows.push((id, l, r));
    }
    let n = rows.len();
    let mut seen = vec![false; n];
    for &(id, _, _) in &rows {
        if id >= n || seen[id] {
            return Err(perr(
                0,
                format!("vertex ids must be 0..{} without repeats", n.max(1) - 1),
            ));
        }
        seen[id] = true;
    }
    // Common denominator, then integer endpoints.
    let mut den: i128 = 1;
    for &(_, (_, ld), (_, rd)) in &rows {
        den = lcm(den, ld as i128);
        den = lcm(den, rd as i128);
        assert!(den < i64::MAX as i128 / 4, "denominators too large");
    }
    let mut intervals = vec![(0i64, 0i64); n];
    for &(id, (ln_, ld), (rn_, rd)) in &rows {
        let l = (ln_ as i128) * (den / ld as i128);
        let r = (rn_ as i128) * (den / rd as i128);
        assert!(l.abs() < i64::MAX as i128 / 1024 && r.abs() < i64::MAX as i128 / 1024);
        intervals[id] = (l as i64, r as i64);
    }
    Ok(IntervalRepresentation::from_integer_endpoints(intervals))
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: i128, b: i128) -> i128 {
    a / gcd(a, b) * b
}

/// `"3"`, `"-2"`, `"1.25"` or `"3/4"` to a (numerator, denominator) pair.
fn parse_rational(s: &str) -> Option<(i64, i64)> {
    if let Some((a, b)) = s.split_once('/') {
        let num: i64 = a.parse().ok()?;
        let den: i64 = b.parse().ok()?;
        if den <= 0 {
            return None;
        }
        return Some((num, den));
    }
    if let Some((a, b)) = s.split_once('.') {
        if b.is_empty() || !b.bytes().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let whole: i64 = a.parse().ok()?;
        let frac: i64 = b.parse().ok()?;
        let den = 10i64.checked_pow(b.len() as u32)?;
        let sign = if a.starts_with('-') { -1 } else { 1 };
        return Some((whole.checked_mul(den)?.checked_add(sign * frac)?, den));
    }
    s.parse().ok().map(|v| (v, 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::Oracle;

    fn rep(iv: &[(i64, i64)]) -> IntervalRepresentation {
        IntervalRepresentation::from_integer_endpoints(iv.to_vec())
    }

    /// Brute-force maximum clique of the companion graph.
    fn brute_omega(g: &Graph) -> usize {
        fn grow(g: &Graph, cand: &[usize], size: usize, best: &mut usize) {
            *best = (*best).max(size);
            for (i, &v) in cand.iter().enumerate() {
                let next: Vec<usize> = cand[i + 1..]
                    .iter()
                    .copied()
                    .filter(|&u| g.has_edge(u, v))
                    .collect();
                if size + 1 + next.len() > *best {
                    grow(g, &next, size + 1, best);
                }
            }
        }
        let all: Vec<usize> = g.vertices().collect();
        let mut best = 0;
        grow(g, &all, 0, &mut best);
        best
    }

    #[test]
    fn omega_disjoint_and_nested() {
        let disjoint = rep(&[(0, 1), (2, 3), (4, 5)]);
        assert_eq!(omega(&disjoint), 1);
        let nested = rep(&[(0, 9), (1, 8), (2, 7), (3, 6)]);
        assert_eq!(omega(&nested), 4);
    }

    #[test]
    fn omega_matches_brute_force() {
        let mut rng = crate::gen::Rng::new(99);
        for _ in 0..40 {
            let ir = crate::gen::random_intervals(12, &mut rng);
            assert_eq!(omega(&ir), brute_omega(&ir.companion_graph()));
        }
    }

    #[test]
    fn perturbation_preserves_intersections() {
        // Touching, overlapping, point and disjoint cases with duplicates.
        let ir = rep(&[(0, 2), (2, 4), (4, 4), (5, 7), (0, 2)]);
        assert!(ir.endpoints_distinct());
        assert!(ir.intersects(0, 1));
        assert!(ir.intersects(1, 2));
        assert!(!ir.intersects(2, 3));
        assert!(ir.intersects(0, 4));
        assert!(!ir.intersects(0, 2));
    }

    #[test]
    fn backbone_single_and_chain() {
        let single = rep(&[(0, 1)]);
        assert_eq!(build_backbone_path(&single), vec![0]);
        let chain = rep(&[(0, 10), (8, 18), (16, 26), (24, 34)]);
        assert_eq!(build_backbone_path(&chain), vec![0, 1, 2, 3]);
    }

    #[test]
    fn backbone_nested_family() {
        let nested = rep(&[(0, 10), (1, 9), (2, 8)]);
        let path = build_backbone_path(&nested);
        assert_eq!(path, vec![2, 0]);
    }

    #[test]
    fn backbone_induces_a_path() {
        let mut rng = crate::gen::Rng::new(5);
        for _ in 0..30 {
            let ir = crate::gen::random_intervals(10, &mut rng);
            let g = ir.companion_graph();
            if !g.is_connected() {
                continue;
            }
            let path = build_backbone_path(&ir);
            for i in 0..path.len() {
                for j in i + 1..path.len() {
                    assert_eq!(g.has_edge(path[i], path[j]), j == i + 1);
                }
            }
        }
    }

    #[test]
    fn coloring_small_cases() {
        // Triangle of mutually overlapping intervals.
        let k3 = rep(&[(0, 10), (5, 15), (8, 20)]);
        let out = color_interval_graph(&k3);
        assert!(out.coloring.k() <= 4);
        // P5 as intervals: omega = 2, at most 3 colors.
        let p5 = rep(&[(0, 10), (8, 18), (16, 26), (24, 34), (32, 42)]);
        let out = color_interval_graph(&p5);
        assert!(out.coloring.colors_used() <= 3);
    }

    #[test]
    fn coloring_random_instances_verify_within_bound() {
        let mut rng = crate::gen::Rng::new(2024);
        let mut done = 0;
        while done < 60 {
            let ir = crate::gen::random_intervals(18, &mut rng);
            if ir.companion_graph().has_isolated_vertex() {
                continue;
            }
            let w = omega(&ir);
            let out = color_interval_graph(&ir);
            assert!(out.coloring.colors_used() <= w + 1);
            done += 1;
        }
    }

    #[test]
    fn two_max_cliques_vertex_examples() {
        // Two crossing unit intervals: no such vertex.
        let k2 = rep(&[(0, 10), (5, 15)]);
        assert_eq!(has_two_max_disjoint_cliques_vertex(&k2).unwrap(), None);
        // P3 of unit intervals: the center qualifies (k = 2).
        let p3 = rep(&[(0, 10), (8, 18), (16, 26)]);
        assert_eq!(has_two_max_disjoint_cliques_vertex(&p3).unwrap(), Some(1));
        // Containment is rejected.
        let nested = rep(&[(0, 10), (2, 5)]);
        assert!(matches!(
            has_two_max_disjoint_cliques_vertex(&nested),
            Err(IntervalError::NotProperInterval { .. })
        ));
    }

    #[test]
    fn proper_interval_exact_values() {
        let oracle = Oracle::new();
        // P3: omega + 1.
        let p3 = rep(&[(0, 10), (8, 18), (16, 26)]);
        let r = chi_odd_proper_interval(&p3).unwrap();
        assert_eq!(r.value, Value::Finite(3));
        assert_eq!(
            oracle.chi_odd(&p3.companion_graph()).unwrap().value,
            Value::Finite(3)
        );
        // K2: omega.
        let k2 = rep(&[(0, 10), (5, 15)]);
        assert_eq!(
            chi_odd_proper_interval(&k2).unwrap().value,
            Value::Finite(2)
        );
        // Disjoint intervals: isolated vertices, unbounded.
        let disjoint = rep(&[(0, 1), (5, 6)]);
        assert_eq!(
            chi_odd_proper_interval(&disjoint).unwrap().value,
            Value::Unbounded
        );
    }

    #[test]
    fn proper_interval_matches_oracle_on_random_unit_instances() {
        let oracle = Oracle::new();
        let mut rng = crate::gen::Rng::new(77);
        for _ in 0..40 {
            let ir = crate::gen::random_unit_intervals(9, 14, &mut rng);
            let g = ir.companion_graph();
            let r = chi_odd_proper_interval(&ir).unwrap();
            if g.has_isolated_vertex() {
                assert_eq!(r.value, Value::Unbounded);
            } else {
                assert_eq!(r.value, oracle.chi_odd(&g).unwrap().value);
            }
        }
    }

    #[test]
    fn interval_file_round_trip() {
        let text = "0 0 1.5\n1 1 3\n2 5/2 4\n";
        let ir = parse_intervals(text).unwrap();
        assert_eq!(ir.n(), 3);
        assert!(ir.intersects(0, 1));
        assert!(ir.intersects(1, 2));
        assert!(!ir.intersects(0, 2));
    }
}
