//! Colorings, the odd-coloring verifier, and the unbounded-value sentinel.

use crate::graph::Graph;
use std::collections::BTreeMap;
use std::fmt;

/// A chromatic quantity: a finite number of colors, or the sentinel for
/// graphs with an isolated vertex, whose odd variants have no finite value.
///
/// The derived order puts every finite value below `Unbounded`, so `min`
/// drops the sentinel and `max` propagates it.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Finite(usize),
    Unbounded,
}

impl Value {
    /// Sentinel-absorbing addition.
    pub fn plus(self, other: Value) -> Value {
        match (self, other) {
            (Value::Finite(a), Value::Finite(b)) => Value::Finite(a + b),
            _ => Value::Unbounded,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Value::Finite(_))
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Value::Finite(v) => Some(v),
            Value::Unbounded => None,
        }
    }

    /// True when the value fits within a budget of `k` colors.
    pub fn at_most(self, k: usize) -> bool {
        matches!(self, Value::Finite(v) if v <= k)
    }
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Finite(v) => write!(f, "{v}"),
            Value::Unbounded => write!(f, "unbounded"),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(count: usize) -> Parity {
        if count % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

/// A total or partial vertex coloring with colors from `1..=k`.
///
/// Color 0 stands for "unassigned". Totality is a precondition of the
/// verification operations, never an invariant of the type: the FPT
/// solvers build colorings incrementally.
#[derive(Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    /// Empty (fully unassigned) coloring over palette `1..=k`.
    pub fn empty(n: usize, k: usize) -> Self {
        Coloring {
            colors: vec![0; n],
            k,
        }
    }

    /// Total coloring from explicit 1-based colors.
    pub fn total(colors: Vec<usize>, k: usize) -> Self {
        assert!(
            colors.iter().all(|&c| c >= 1 && c <= k),
            "colors must lie in 1..={k}"
        );
        Coloring { colors, k }
    }

    /// Coloring from 1-based colors where 0 marks unassigned vertices.
    pub fn partial(colors: Vec<usize>, k: usize) -> Self {
        assert!(colors.iter().all(|&c| c <= k), "colors must lie in 0..={k}");
        Coloring { colors, k }
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    /// Declared palette size.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        match self.colors[v] {
            0 => None,
            c => Some(c),
        }
    }

    pub fn set(&mut self, v: usize, color: usize) {
        assert!(
            color >= 1 && color <= self.k,
            "color {color} outside 1..={}",
            self.k
        );
        self.colors[v] = color;
    }

    pub fn clear(&mut self, v: usize) {
        self.colors[v] = 0;
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(|&c| c != 0)
    }

    pub fn assigned(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(v, &c)| (v, c))
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        let mut seen = vec![false; self.k + 1];
        let mut count = 0;
        for &c in &self.colors {
            if c != 0 && !seen[c] {
                seen[c] = true;
                count += 1;
            }
        }
        count
    }

    /// Shrinks or grows the declared palette. Panics if an assigned color
    /// would fall outside the new palette.
    pub fn set_palette(&mut self, k: usize) {
        assert!(self.colors.iter().all(|&c| c <= k));
        self.k = k;
    }

    /// Raw color slice (0 = unassigned).
    pub fn raw(&self) -> &[usize] {
        &self.colors
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring(k={}, {:?})", self.k, self.colors)
    }
}

/// Per-vertex odd-color witnesses plus the violating vertex sets.
///
/// Valid iff no vertex lacks an odd color and no edge is monochromatic.
/// Each witnessed color appears an odd number of times in the vertex's
/// open neighborhood and is the smallest color doing so.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddCertificate {
    /// Smallest odd color per vertex, where one exists.
    pub odd_colors: Vec<Option<usize>>,
    /// Vertices with no odd color (isolated vertices always appear here).
    pub missing_odd: Vec<usize>,
    /// Endpoints of improperly colored edges, flagged separately.
    pub improper: Vec<usize>,
}

impl OddCertificate {
    pub fn is_valid(&self) -> bool {
        self.missing_odd.is_empty() && self.improper.is_empty()
    }

    /// All violating vertices, merged and sorted.
    pub fn violations(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self
            .missing_odd
            .iter()
            .chain(self.improper.iter())
            .copied()
            .collect();
        all.sort_unstable();
        all.dedup();
        all
    }
}

/// True iff every edge of `g` has distinctly colored endpoints.
///
/// Requires `f` total on `V(g)`.
pub fn is_proper(g: &Graph, f: &Coloring) -> bool {
    assert_eq!(g.n(), f.n(), "coloring size mismatch");
    assert!(f.is_total(), "is_proper requires a total coloring");
    g.vertices().all(|u| {
        g.neighbors(u)
            .iter()
            .all(|&v| u > v || f.get(u) != f.get(v))
    })
}

/// The smallest color with odd multiplicity in the open neighborhood of
/// `v`, or `None` if every color there has even multiplicity (in
/// particular for an empty neighborhood).
///
/// Requires `f` assigned on all of `N(v)`.
pub fn odd_color_of(g: &Graph, f: &Coloring, v: usize) -> Option<usize> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &u in g.neighbors(v) {
        let c = f
            .get(u)
            .expect("odd_color_of requires the neighborhood to be colored");
        *counts.entry(c).or_insert(0) += 1;
    }
    counts
        .into_iter()
        .find(|&(_, cnt)| cnt % 2 == 1)
        .map(|(c, _)| c)
}

/// Checks whether `f` is an odd coloring of `g` and reports per-vertex
/// witnesses and violations. Requires `f` total.
pub fn verify_odd_coloring(g: &Graph, f: &Coloring) -> OddCertificate {
    assert_eq!(g.n(), f.n(), "coloring size mismatch");
    assert!(
        f.is_total(),
        "verify_odd_coloring requires a total coloring"
    );
    let mut odd_colors = Vec::with_capacity(g.n());
    let mut missing_odd = Vec::new();
    let mut improper = Vec::new();
    for v in g.vertices() {
        let w = odd_color_of(g, f, v);
        if w.is_none() {
            missing_odd.push(v);
        }
        odd_colors.push(w);
    }
    let mut improper_mask = vec![false; g.n()];
    for (u, v) in g.edges() {
        if f.get(u) == f.get(v) {
            improper_mask[u] = true;
            improper_mask[v] = true;
        }
    }
    for v in g.vertices() {
        if improper_mask[v] {
            improper.push(v);
        }
    }
    OddCertificate {
        odd_colors,
        missing_odd,
        improper,
    }
}

/// Parity of each global color-class size, over the colors actually used.
/// Requires `f` total.
pub fn color_class_parities(g: &Graph, f: &Coloring) -> BTreeMap<usize, Parity> {
    assert_eq!(g.n(), f.n(), "coloring size mismatch");
    assert!(
        f.is_total(),
        "color_class_parities requires a total coloring"
    );
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for (_, c) in f.assigned() {
        *counts.entry(c).or_insert(0) += 1;
    }
    counts
        .into_iter()
        .map(|(c, cnt)| (c, Parity::of(cnt)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn k3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)])
    }

    fn p3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)])
    }

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])
    }

    #[test]
    fn proper_examples() {
        assert!(is_proper(&k3(), &Coloring::total(vec![1, 2, 3], 3)));
        assert!(!is_proper(&k3(), &Coloring::total(vec![1, 1, 2], 2)));
        assert!(is_proper(&p3(), &Coloring::total(vec![1, 2, 1], 2)));
    }

    #[test]
    fn odd_color_picks_smallest() {
        let g = p3();
        // Center vertex 1 sees the two leaves.
        let f = Coloring::total(vec![1, 2, 1], 2);
        assert_eq!(odd_color_of(&g, &f, 1), None);
        let f = Coloring::total(vec![1, 2, 3], 3);
        assert_eq!(odd_color_of(&g, &f, 1), Some(1));
        let lonely = Graph::new(1);
        let f = Coloring::total(vec![1], 1);
        assert_eq!(odd_color_of(&lonely, &f, 0), None);
    }

    #[test]
    fn verify_c4_two_coloring_fails_everywhere() {
        let cert = verify_odd_coloring(&c4(), &Coloring::total(vec![1, 2, 1, 2], 2));
        assert!(!cert.is_valid());
        assert_eq!(cert.missing_odd, vec![0, 1, 2, 3]);
        assert!(cert.improper.is_empty());
    }

    #[test]
    fn verify_k3_rainbow_is_valid() {
        let cert = verify_odd_coloring(&k3(), &Coloring::total(vec![1, 2, 3], 3));
        assert!(cert.is_valid());
        assert_eq!(cert.odd_colors, vec![Some(2), Some(1), Some(1)]);
    }

    #[test]
    fn verify_c4_rainbow_is_valid() {
        let cert = verify_odd_coloring(&c4(), &Coloring::total(vec![1, 2, 3, 4], 4));
        assert!(cert.is_valid());
    }

    #[test]
    fn valid_certificate_implies_proper() {
        let g = c4();
        let f = Coloring::total(vec![1, 2, 3, 4], 4);
        let cert = verify_odd_coloring(&g, &f);
        assert!(cert.is_valid());
        assert!(is_proper(&g, &f));
        // An improper coloring is flagged through `improper`.
        let f = Coloring::total(vec![1, 1, 2, 3], 3);
        let cert = verify_odd_coloring(&g, &f);
        assert!(!cert.is_valid());
        assert_eq!(cert.improper, vec![0, 1]);
    }

    #[test]
    fn isolated_vertex_is_always_a_violation() {
        let mut g = Graph::from_edges(2, &[(0, 1)]);
        g.add_vertex();
        let cert = verify_odd_coloring(&g, &Coloring::total(vec![1, 2, 3], 3));
        assert!(cert.missing_odd.contains(&2));
    }

    #[test]
    fn class_parities() {
        let f = Coloring::total(vec![1, 2, 3], 3);
        let p = color_class_parities(&k3(), &f);
        assert!(p.values().all(|&x| x == Parity::Odd));
        let f = Coloring::total(vec![1, 2, 1, 2], 2);
        let p = color_class_parities(&c4(), &f);
        assert!(p.values().all(|&x| x == Parity::Even));
        let f = Coloring::total(vec![1, 2, 3], 3);
        let p = color_class_parities(&p3(), &f);
        assert!(p.values().all(|&x| x == Parity::Odd));
    }

    #[test]
    fn value_arithmetic() {
        use Value::*;
        assert_eq!(Finite(2).plus(Finite(3)), Finite(5));
        assert_eq!(Finite(2).plus(Unbounded), Unbounded);
        assert_eq!(Finite(2).min(Unbounded), Finite(2));
        assert_eq!(Finite(2).max(Unbounded), Unbounded);
        assert!(Finite(7) < Unbounded);
    }
}
