//! Hardness constructions as deterministic instance generators, each with
//! an executable equivalence contract.
//!
//! Every generator records a role per produced vertex and asserts the
//! structural property its target class demands (all degrees odd,
//! bipartiteness, an executable edge elimination scheme, a star-convexity
//! witness). The equivalence contracts are checked against the exact
//! oracle by [`verify_reduction_equivalence`].

use crate::coloring::Coloring;
use crate::graph::Graph;
use crate::oracle::{ExtendMode, Oracle, OracleError};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    Original,
    /// Vertex of an isolated triangle added to fix the vertex-count parity.
    ParityTriangle,
    /// Vertex of an isolated edge added to fix the odd-set parity.
    ParityEdge,
    Pendant,
    EdgeVertex,
    /// Hub adjacent to the odd-degree independent vertices.
    HubZ,
    /// Universal vertex over the source graph.
    UniversalU,
    /// Universal vertex added inside the source graph before splitting
    /// edges.
    UniversalX,
    /// Star center adjacent to one whole side.
    CenterW,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fixup {
    IsolatedTriangle,
    IsolatedEdge,
}

#[derive(Clone, Debug)]
pub struct ReductionOutput {
    pub graph: Graph,
    /// Budget for the produced instance; `None` when the reduction
    /// preserves the budget unchanged.
    pub k_out: Option<usize>,
    pub roles: Vec<Role>,
    pub fixups: Vec<Fixup>,
    /// Measured vertex cover of the output, where the construction
    /// tracks one.
    pub cover: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionError {
    NotACover { u: usize, v: usize },
    KTooSmall { k: usize, min: usize },
}

impl fmt::Display for ReductionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionError::NotACover { u, v } => {
                write!(f, "edge ({u},{v}) is not covered by the given set")
            }
            ReductionError::KTooSmall { k, min } => {
                write!(f, "reduction requires k >= {min}, got {k}")
            }
        }
    }
}

impl std::error::Error for ReductionError {}

/// Proper-coloring-to-odd-coloring transformation around a vertex cover:
/// parity fixups, a hub over the odd-degree independent vertices,
/// pendants on odd-degree cover vertices, and a universal vertex. Every
/// output vertex has odd degree, and the source admits a proper
/// k-coloring iff the output admits an odd (k+1)-coloring (for k >= 3
/// whenever a triangle fixup fires; see the tests for the contract).
pub fn reduce_vc_coloring_to_odd(
    g: &Graph,
    cover: &[usize],
    k: usize,
) -> Result<ReductionOutput, ReductionError> {
    for (u, v) in g.edges() {
        if !cover.contains(&u) && !cover.contains(&v) {
            return Err(ReductionError::NotACover { u, v });
        }
    }
    let mut h = g.clone();
    let mut roles = vec![Role::Original; g.n()];
    let mut fixups = Vec::new();
    let mut cover: Vec<usize> = cover.to_vec();
    cover.sort_unstable();
    cover.dedup();

    // The argument wants an odd number of vertices in the source copy.
    if h.n() % 2 == 0 {
        let a = h.add_vertex();
        let b = h.add_vertex();
        let c = h.add_vertex();
        h.add_edge(a, b);
        h.add_edge(b, c);
        h.add_edge(a, c);
        roles.extend([Role::ParityTriangle; 3]);
        cover.extend([a, b]);
        fixups.push(Fixup::IsolatedTriangle);
    }
    // And an odd number of odd-degree vertices outside the cover.
    let odd_outside = |h: &Graph, roles: &[Role], cover: &[usize]| -> Vec<usize> {
        h.vertices()
            .filter(|&v| roles[v] != Role::Pendant)
            .filter(|v| !cover.contains(v))
            .filter(|&v| h.degree(v) % 2 == 1)
            .collect()
    };
    if odd_outside(&h, &roles, &cover).len() % 2 == 0 {
        let a = h.add_vertex();
        let b = h.add_vertex();
        h.add_edge(a, b);
        roles.extend([Role::ParityEdge; 2]);
        cover.push(a);
        fixups.push(Fixup::IsolatedEdge);
    }
    let base_n = h.n();
    let odd_set = odd_outside(&h, &roles, &cover);
    assert!(odd_set.len() % 2 == 1, "fixups leave an odd odd-degree set");

    // Pendants on odd-degree cover vertices (degrees measured now).
    let odd_cover: Vec<usize> = cover
        .iter()
        .copied()
        .filter(|&v| h.degree(v) % 2 == 1)
        .collect();
    for &v in &odd_cover {
        let p = h.add_vertex();
        h.add_edge(p, v);
        roles.push(Role::Pendant);
    }
    // Hub over the odd-degree vertices outside the cover.
    let z = h.add_vertex();
    roles.push(Role::HubZ);
    for &v in &odd_set {
        h.add_edge(z, v);
    }
    // Universal vertex over the source copy.
    let u = h.add_vertex();
    roles.push(Role::UniversalU);
    for v in 0..base_n {
        h.add_edge(u, v);
    }

    for v in h.vertices() {
        assert!(h.degree(v) % 2 == 1, "vertex {v} has even degree");
    }
    cover.push(z);
    cover.push(u);
    cover.sort_unstable();
    for (a, b) in h.edges() {
        assert!(
            cover.binary_search(&a).is_ok() || cover.binary_search(&b).is_ok(),
            "tracked set must cover the output"
        );
    }
    Ok(ReductionOutput {
        graph: h,
        k_out: Some(k + 1),
        roles,
        fixups,
        cover: Some(cover),
    })
}

/// Pendant on every even-degree vertex; all output degrees are odd, so
/// the chromatic number of the input equals the odd chromatic number of
/// the output (for inputs with at least one edge).
pub fn reduce_cw_coloring_to_odd(g: &Graph) -> ReductionOutput {
    let mut h = g.clone();
    let mut roles = vec![Role::Original; g.n()];
    for v in 0..g.n() {
        if g.degree(v) % 2 == 0 {
            let p = h.add_vertex();
            h.add_edge(p, v);
            roles.push(Role::Pendant);
        }
    }
    for v in h.vertices() {
        assert!(h.degree(v) % 2 == 1, "vertex {v} has even degree");
    }
    ReductionOutput {
        graph: h,
        k_out: None,
        roles,
        fixups: Vec::new(),
        cover: None,
    }
}

/// Splits every edge through a fresh middle vertex and hangs a pendant on
/// every original vertex. The output is perfect elimination bipartite and
/// k-odd-colorable iff the input is properly k-colorable (k >= 3).
pub fn reduce_to_perfect_elim_bipartite(
    g: &Graph,
    k: usize,
) -> Result<ReductionOutput, ReductionError> {
    if k < 3 {
        return Err(ReductionError::KTooSmall { k, min: 3 });
    }
    let n = g.n();
    let mut h = Graph::new(n);
    let mut roles = vec![Role::Original; n];
    for (u, v) in g.edges() {
        let e = h.add_vertex();
        roles.push(Role::EdgeVertex);
        h.add_edge(e, u);
        h.add_edge(e, v);
    }
    let mut pendant_edges = Vec::new();
    for v in 0..n {
        let y = h.add_vertex();
        roles.push(Role::Pendant);
        h.add_edge(y, v);
        pendant_edges.push((y, v));
    }
    assert!(h.bipartition().is_some(), "output must be bipartite");
    assert!(
        elimination_scheme_executes(&h, &pendant_edges),
        "pendant edges must form a perfect edge elimination scheme"
    );
    Ok(ReductionOutput {
        graph: h,
        k_out: Some(k),
        roles,
        fixups: Vec::new(),
        cover: None,
    })
}

/// Simulates the edge elimination order: each listed edge must be
/// bisimplicial in the remaining graph, and nothing but isolated vertices
/// may survive.
fn elimination_scheme_executes(h: &Graph, order: &[(usize, usize)]) -> bool {
    let mut removed = vec![false; h.n()];
    for &(x, y) in order {
        if removed[x] || removed[y] || !h.has_edge(x, y) {
            return false;
        }
        let nx: Vec<usize> = h
            .neighbors(x)
            .iter()
            .copied()
            .filter(|&w| !removed[w] && w != y)
            .collect();
        let ny: Vec<usize> = h
            .neighbors(y)
            .iter()
            .copied()
            .filter(|&w| !removed[w] && w != x)
            .collect();
        for &a in &nx {
            for &b in &ny {
                if a != b && !h.has_edge(a, b) {
                    return false;
                }
            }
        }
        removed[x] = true;
        removed[y] = true;
    }
    h.edges().iter().all(|&(u, v)| removed[u] || removed[v])
}

/// Adds a universal vertex to the source, splits every edge of the
/// enlarged graph through a fresh vertex, and joins a star center to the
/// whole original side. The output is star-convex bipartite, and
/// chi(source) <= k iff chi_odd(output) <= k + 2 (k >= 3).
pub fn reduce_to_star_convex_bipartite(
    g: &Graph,
    k: usize,
) -> Result<ReductionOutput, ReductionError> {
    if k < 3 {
        return Err(ReductionError::KTooSmall { k, min: 3 });
    }
    let n = g.n();
    let mut gp = g.clone();
    let x = gp.add_vertex();
    for v in 0..n {
        gp.add_edge(x, v);
    }
    let np = gp.n();
    let mut h = Graph::new(np);
    let mut roles = vec![Role::Original; n];
    roles.push(Role::UniversalX);
    for (u, v) in gp.edges() {
        let e = h.add_vertex();
        roles.push(Role::EdgeVertex);
        h.add_edge(e, u);
        h.add_edge(e, v);
    }
    let w = h.add_vertex();
    roles.push(Role::CenterW);
    for v in 0..np {
        h.add_edge(w, v);
    }
    assert!(h.bipartition().is_some(), "output must be bipartite");
    // Star-convexity witness: with the star centered at w over the
    // edge-vertex side, every original-side vertex's neighborhood
    // contains the center, hence induces a substar.
    for v in 0..np {
        assert!(h.has_edge(v, w));
        assert!(h
            .neighbors(v)
            .iter()
            .all(|&t| t == w || roles[t] == Role::EdgeVertex));
    }
    Ok(ReductionOutput {
        graph: h,
        k_out: Some(k + 2),
        roles,
        fixups: Vec::new(),
        cover: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionKind {
    VertexCover,
    CliqueWidth,
    PerfectElimBipartite,
    StarConvexBipartite,
}

/// Checks a reduction's equivalence contract on one instance by exact
/// decisions on both sides. For the clique-width reduction the contract
/// is value equality instead of a k-decision.
pub fn verify_reduction_equivalence(
    g: &Graph,
    k: usize,
    which: ReductionKind,
) -> Result<bool, OracleError> {
    let oracle = Oracle::new();
    let decide = |h: &Graph, k: usize, mode: ExtendMode| -> Result<bool, OracleError> {
        Ok(oracle
            .colorable_with(h, k.min(h.n()), &Coloring::empty(h.n(), k.min(h.n())), mode)?
            .is_some())
    };
    match which {
        ReductionKind::VertexCover => {
            let cover = minimum_vertex_cover(g);
            let out = reduce_vc_coloring_to_odd(g, &cover, k).expect("valid cover");
            let src = decide(g, k, ExtendMode::Proper)?;
            let dst = decide(&out.graph, out.k_out.unwrap(), ExtendMode::Odd)?;
            Ok(src == dst)
        }
        ReductionKind::CliqueWidth => {
            let out = reduce_cw_coloring_to_odd(g);
            let src = oracle.chi(g)?.value;
            let dst = oracle.chi_odd(&out.graph)?.value;
            Ok(src == dst)
        }
        ReductionKind::PerfectElimBipartite => {
            let out = reduce_to_perfect_elim_bipartite(g, k).expect("k >= 3");
            let src = decide(g, k, ExtendMode::Proper)?;
            let dst = decide(&out.graph, out.k_out.unwrap(), ExtendMode::Odd)?;
            Ok(src == dst)
        }
        ReductionKind::StarConvexBipartite => {
            let out = reduce_to_star_convex_bipartite(g, k).expect("k >= 3");
            let src = decide(g, k, ExtendMode::Proper)?;
            let dst = decide(&out.graph, out.k_out.unwrap(), ExtendMode::Odd)?;
            Ok(src == dst)
        }
    }
}

/// Smallest vertex cover by bounded branching; test-scale inputs only.
pub fn minimum_vertex_cover(g: &Graph) -> Vec<usize> {
    fn decide(g: &Graph, picked: &mut Vec<usize>, budget: usize) -> bool {
        let uncovered = g
            .edges()
            .into_iter()
            .find(|&(u, v)| !picked.contains(&u) && !picked.contains(&v));
        let Some((u, v)) = uncovered else { return true };
        if budget == 0 {
            return false;
        }
        for pick in [u, v] {
            picked.push(pick);
            if decide(g, picked, budget - 1) {
                return true;
            }
            picked.pop();
        }
        false
    }
    for size in 0..=g.n() {
        let mut picked = Vec::new();
        if decide(g, &mut picked, size) {
            picked.sort_unstable();
            return picked;
        }
    }
    unreachable!("the full vertex set always covers")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::Value;
    use crate::gen;

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

    #[test]
    fn minimum_cover_on_small_graphs() {
        assert_eq!(minimum_vertex_cover(&complete(3)).len(), 2);
        assert_eq!(minimum_vertex_cover(&cycle(5)).len(), 3);
        assert_eq!(minimum_vertex_cover(&Graph::new(3)).len(), 0);
    }

    #[test]
    fn vc_reduction_structure() {
        let g = cycle(5);
        let cover = minimum_vertex_cover(&g);
        let out = reduce_vc_coloring_to_odd(&g, &cover, 3).unwrap();
        assert!(out.graph.vertices().all(|v| out.graph.degree(v) % 2 == 1));
        assert_eq!(out.k_out, Some(4));
        assert!(out.cover.is_some());
        // Odd vertex count: no triangle fixup.
        assert!(!out.fixups.contains(&Fixup::IsolatedTriangle));
    }

    #[test]
    fn vc_reduction_equivalence_examples() {
        // chi(C5) = 3: yes at k = 3 maps to yes.
        assert!(verify_reduction_equivalence(&cycle(5), 3, ReductionKind::VertexCover).unwrap());
        // K3 at k = 2: no maps to no (checked through the contract).
        let g = complete(3);
        let cover = minimum_vertex_cover(&g);
        let out = reduce_vc_coloring_to_odd(&g, &cover, 2).unwrap();
        let oracle = Oracle::new();
        assert!(!oracle
            .colorable_with(
                &out.graph,
                3,
                &Coloring::empty(out.graph.n(), 3),
                ExtendMode::Odd
            )
            .unwrap()
            .is_some());
    }

    #[test]
    fn vc_rejects_non_cover() {
        let g = complete(3);
        assert!(matches!(
            reduce_vc_coloring_to_odd(&g, &[0], 3),
            Err(ReductionError::NotACover { .. })
        ));
    }

    #[test]
    fn cw_reduction_examples() {
        let oracle = Oracle::new();
        // C4: all degrees even, four pendants appear.
        let out = reduce_cw_coloring_to_odd(&cycle(4));
        assert_eq!(out.graph.n(), 8);
        assert_eq!(
            oracle.chi_odd(&out.graph).unwrap().value,
            oracle.chi(&cycle(4)).unwrap().value
        );
        // K4: all degrees odd, identity.
        let out = reduce_cw_coloring_to_odd(&complete(4));
        assert_eq!(out.graph.n(), 4);
        // Random graphs with an edge.
        let mut rng = gen::Rng::new(11);
        for _ in 0..15 {
            let g = gen::connected_gnp(6, 1, 2, &mut rng);
            assert!(
                verify_reduction_equivalence(&g, 0, ReductionKind::CliqueWidth).unwrap(),
                "value identity failed on {g:?}"
            );
        }
    }

    #[test]
    fn peb_reduction_structure_and_equivalence() {
        let out = reduce_to_perfect_elim_bipartite(&complete(3), 3).unwrap();
        assert!(out.graph.bipartition().is_some());
        assert!(
            verify_reduction_equivalence(&complete(3), 3, ReductionKind::PerfectElimBipartite)
                .unwrap()
        );
        // K4 at k = 3 is a no-instance on both sides.
        assert!(
            verify_reduction_equivalence(&complete(4), 3, ReductionKind::PerfectElimBipartite)
                .unwrap()
        );
        assert!(matches!(
            reduce_to_perfect_elim_bipartite(&complete(3), 2),
            Err(ReductionError::KTooSmall { .. })
        ));
    }

    #[test]
    fn elimination_scheme_on_random_inputs() {
        let mut rng = gen::Rng::new(21);
        for _ in 0..15 {
            let g = gen::gnp(6, 1, 2, &mut rng);
            // The constructor asserts the scheme internally.
            let _ = reduce_to_perfect_elim_bipartite(&g, 3).unwrap();
        }
    }

    #[test]
    fn scb_reduction_structure_and_equivalence() {
        let out = reduce_to_star_convex_bipartite(&complete(3), 3).unwrap();
        assert!(out.graph.bipartition().is_some());
        assert_eq!(out.k_out, Some(5));
        assert!(
            verify_reduction_equivalence(&complete(3), 3, ReductionKind::StarConvexBipartite)
                .unwrap()
        );
        assert!(
            verify_reduction_equivalence(&complete(4), 3, ReductionKind::StarConvexBipartite)
                .unwrap()
        );
    }

    #[test]
    fn sweep_all_connected_graphs_n4() {
        for g in gen::all_graphs(4) {
            if !g.is_connected() {
                continue;
            }
            for k in [3usize, 4] {
                for kind in [
                    ReductionKind::VertexCover,
                    ReductionKind::CliqueWidth,
                    ReductionKind::PerfectElimBipartite,
                    ReductionKind::StarConvexBipartite,
                ] {
                    assert!(
                        verify_reduction_equivalence(&g, k, kind).unwrap(),
                        "contract {kind:?} failed at k={k} on {g:?}"
                    );
                }
            }
        }
    }
}
