//! Odd coloring by neighborhood diversity: partition the vertices into
//! types (same neighborhood up to each other), guess which independent
//! types share an odd color and where that color lands with which parity,
//! place and flood those colors in two phases, then properly color the
//! rest with fresh colors.
//!
//! Clique types need no bookkeeping: in any proper coloring a clique-type
//! vertex sees each clique-mate's color exactly once. Independent types
//! are covered by the guessed parities; the leftover vertices form a
//! residual graph whose chromatic number (exact search) completes the
//! value as `r + chi(residual)`.

use crate::coloring::{verify_odd_coloring, Coloring, Parity, Value};
use crate::graph::Graph;
use crate::oracle::{Oracle, OracleResult};
use std::fmt;

/// Type-count cap for the exhaustive guess enumeration.
pub const ND_T_GUARD: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NdError {
    TGuard { t: usize, guard: usize },
}

impl fmt::Display for NdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NdError::TGuard { t, guard } => {
                write!(f, "neighborhood diversity {t} exceeds solver guard {guard}")
            }
        }
    }
}

impl std::error::Error for NdError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TypeKind {
    Clique,
    Independent,
}

/// The coarsest partition into same-type classes. Between two types,
/// adjacency is all-or-nothing; singleton types count as independent.
#[derive(Clone, Debug)]
pub struct NDPartition {
    /// Vertex sets, each ascending, ordered by smallest vertex.
    pub types: Vec<Vec<usize>>,
    pub kinds: Vec<TypeKind>,
    /// Type-level adjacency matrix.
    pub adjacency: Vec<Vec<bool>>,
}

impl NDPartition {
    pub fn t(&self) -> usize {
        self.types.len()
    }

    pub fn independent_types(&self) -> Vec<usize> {
        (0..self.t())
            .filter(|&i| self.kinds[i] == TypeKind::Independent)
            .collect()
    }
}

/// Groups vertices by neighborhood signature: same open neighborhood
/// (non-adjacent twins) or same closed neighborhood (adjacent twins).
pub fn compute_nd_partition(g: &Graph) -> NDPartition {
    let n = g.n();
    let mut class = (0..n).collect::<Vec<usize>>();
    fn find(class: &mut Vec<usize>, v: usize) -> usize {
        if class[v] != v {
            let root = find(class, class[v]);
            class[v] = root;
        }
        class[v]
    }
    let union = |class: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(class, a), find(class, b));
        if ra != rb {
            class[ra.max(rb)] = ra.min(rb);
        }
    };
    use std::collections::HashMap;
    let mut by_open: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut by_closed: HashMap<Vec<usize>, usize> = HashMap::new();
    for v in 0..n {
        let open = g.neighbors(v).to_vec();
        let mut closed = open.clone();
        let pos = closed.binary_search(&v).unwrap_err();
        closed.insert(pos, v);
        if let Some(&u) = by_open.get(&open) {
            union(&mut class, u, v);
        } else {
            by_open.insert(open, v);
        }
        if let Some(&u) = by_closed.get(&closed) {
            union(&mut class, u, v);
        } else {
            by_closed.insert(closed, v);
        }
    }
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for v in 0..n {
        let r = find(&mut class, v);
        groups.entry(r).or_default().push(v);
    }
    let mut types: Vec<Vec<usize>> = groups.into_values().collect();
    types.sort_by_key(|t| t[0]);
    let kinds: Vec<TypeKind> = types
        .iter()
        .map(|t| {
            if t.len() >= 2 && g.is_clique(t) {
                TypeKind::Clique
            } else {
                assert!(
                    g.is_independent_set(t),
                    "type is neither clique nor independent"
                );
                TypeKind::Independent
            }
        })
        .collect();
    let t = types.len();
    let mut adjacency = vec![vec![false; t]; t];
    for i in 0..t {
        for j in i + 1..t {
            let adj = g.has_edge(types[i][0], types[j][0]);
            debug_assert!(types[i]
                .iter()
                .all(|&u| types[j].iter().all(|&v| g.has_edge(u, v) == adj)));
            adjacency[i][j] = adj;
            adjacency[j][i] = adj;
        }
    }
    NDPartition {
        types,
        kinds,
        adjacency,
    }
}

/// One guess: a partition of the independent types into groups sharing an
/// odd color (group i gets color i+1), and for each group the types that
/// carry that color together with the parity of how often.
#[derive(Clone, Debug)]
pub struct NDGuess {
    /// `groups[i]` = independent type indices whose odd color is `i + 1`.
    pub groups: Vec<Vec<usize>>,
    /// `placements[i]` = (type, parity of the count of color `i + 1`).
    pub placements: Vec<Vec<(usize, Parity)>>,
}

impl NDGuess {
    pub fn r(&self) -> usize {
        self.groups.len()
    }
}

/// Phase one: place each group's color into its chosen types, one vertex
/// for odd parity, two for even, lowest-index-first. `None` when a type
/// runs out of uncolored vertices or a clique type would repeat a color.
pub fn phase1_color(part: &NDPartition, guess: &NDGuess) -> Option<Vec<usize>> {
    let n: usize = part.types.iter().map(|t| t.len()).sum();
    let mut colors = vec![0usize; n];
    for (i, placements) in guess.placements.iter().enumerate() {
        let color = i + 1;
        for &(ty, parity) in placements {
            let want = match parity {
                Parity::Odd => 1,
                Parity::Even => 2,
            };
            if part.kinds[ty] == TypeKind::Clique && want >= 2 {
                return None; // a repeated color inside a clique
            }
            let mut placed = 0;
            for &v in &part.types[ty] {
                if placed == want {
                    break;
                }
                if colors[v] == 0 {
                    colors[v] = color;
                    placed += 1;
                }
            }
            if placed < want {
                return None; // the tuple is invalid: vertices ran out
            }
        }
    }
    Some(colors)
}

/// Phase-two outcome: the extended partial coloring and, per type, how
/// many vertices remain for phase three.
#[derive(Clone, Debug)]
pub struct Phase2 {
    pub colors: Vec<usize>,
    pub deferred: Vec<usize>,
}

/// Phase two: every partially colored independent type is flooded with
/// one of its own colors; when the uncolored count is odd one vertex is
/// deferred instead, so every placed color keeps its guessed parity.
/// Untouched independent types and clique-type leftovers defer entirely.
pub fn phase2_fill(part: &NDPartition, phase1: &[usize]) -> Phase2 {
    let mut colors = phase1.to_vec();
    let mut deferred = vec![0usize; part.t()];
    for (ty, verts) in part.types.iter().enumerate() {
        let uncolored: Vec<usize> = verts.iter().copied().filter(|&v| colors[v] == 0).collect();
        if part.kinds[ty] == TypeKind::Clique {
            deferred[ty] = uncolored.len();
            continue;
        }
        let d = verts.len() - uncolored.len();
        if d == 0 || uncolored.is_empty() {
            deferred[ty] = uncolored.len();
            continue;
        }
        let flood = *verts
            .iter()
            .filter(|&&v| colors[v] != 0)
            .map(|v| &colors[*v])
            .min()
            .expect("type is partially colored");
        if uncolored.len() % 2 == 0 {
            for &v in &uncolored {
                colors[v] = flood;
            }
        } else {
            for &v in &uncolored[..uncolored.len() - 1] {
                colors[v] = flood;
            }
            deferred[ty] = 1;
        }
    }
    Phase2 { colors, deferred }
}

#[derive(Clone, Debug)]
pub struct NdSolve {
    pub result: OracleResult,
    pub t: usize,
    /// Number of shared odd colors in the best guess.
    pub r_used: usize,
    pub guesses_tried: usize,
    pub residual_size: usize,
}

/// Exact odd chromatic number by guess enumeration over the type
/// partition. The budget in `k` only enters through the caller's
/// decision; the minimum is computed outright.
pub fn solve_neighborhood_diversity(g: &Graph, _k: usize) -> Result<NdSolve, NdError> {
    let part = compute_nd_partition(g);
    let t = part.t();
    if t > ND_T_GUARD {
        return Err(NdError::TGuard {
            t,
            guard: ND_T_GUARD,
        });
    }
    if g.has_isolated_vertex() {
        return Ok(NdSolve {
            result: OracleResult {
                value: Value::Unbounded,
                witness: None,
            },
            t,
            r_used: 0,
            guesses_tried: 0,
            residual_size: 0,
        });
    }
    let ind = part.independent_types();
    let oracle = Oracle::with_guard(g.n());

    let mut best: Option<(usize, Coloring, usize, usize)> = None; // value, witness, r, residual
    let mut guesses_tried = 0usize;

    for groups in set_partitions(&ind) {
        let r = groups.len();
        if best.as_ref().map(|b| r >= b.0).unwrap_or(false) {
            continue;
        }
        // Valid placements per group, independently enumerable.
        let per_group: Vec<Vec<Vec<(usize, Parity)>>> = groups
            .iter()
            .map(|members| valid_placements(&part, members))
            .collect();
        if per_group.iter().any(|v| v.is_empty()) {
            continue;
        }
        // Product over groups, pruned by per-type capacity.
        fn product(
            g: &Graph,
            part: &NDPartition,
            groups: &[Vec<usize>],
            per_group: &[Vec<Vec<(usize, Parity)>>],
            choice: &mut Vec<usize>,
            demand: &mut Vec<usize>,
            oracle: &Oracle,
            best: &mut Option<(usize, Coloring, usize, usize)>,
            guesses_tried: &mut usize,
        ) {
            let i = choice.len();
            if i == groups.len() {
                *guesses_tried += 1;
                let guess = NDGuess {
                    groups: groups.to_vec(),
                    placements: choice
                        .iter()
                        .enumerate()
                        .map(|(gi, &ci)| per_group[gi][ci].clone())
                        .collect(),
                };
                try_guess(g, part, &guess, oracle, best);
                return;
            }
            for ci in 0..per_group[i].len() {
                let mut fits = true;
                for &(ty, parity) in &per_group[i][ci] {
                    demand[ty] += match parity {
                        Parity::Odd => 1,
                        Parity::Even => 2,
                    };
                    if demand[ty] > part.types[ty].len() {
                        fits = false;
                    }
                }
                if fits {
                    choice.push(ci);
                    product(
                        g,
                        part,
                        groups,
                        per_group,
                        choice,
                        demand,
                        oracle,
                        best,
                        guesses_tried,
                    );
                    choice.pop();
                }
                for &(ty, parity) in &per_group[i][ci] {
                    demand[ty] -= match parity {
                        Parity::Odd => 1,
                        Parity::Even => 2,
                    };
                }
            }
        }
        let mut choice = Vec::with_capacity(r);
        let mut demand = vec![0usize; part.t()];
        product(
            g,
            &part,
            &groups,
            &per_group,
            &mut choice,
            &mut demand,
            &oracle,
            &mut best,
            &mut guesses_tried,
        );
    }

    let (value, witness, r_used, residual_size) =
        best.expect("no isolated vertex, so some guess succeeds");
    let cert = verify_odd_coloring(g, &witness);
    assert!(
        cert.is_valid(),
        "neighborhood-diversity witness failed verification"
    );
    assert_eq!(witness.colors_used(), value);
    Ok(NdSolve {
        result: OracleResult {
            value: Value::Finite(value),
            witness: Some(witness),
        },
        t,
        r_used,
        guesses_tried,
        residual_size,
    })
}

fn try_guess(
    g: &Graph,
    part: &NDPartition,
    guess: &NDGuess,
    oracle: &Oracle,
    best: &mut Option<(usize, Coloring, usize, usize)>,
) {
    let r = guess.r();
    let Some(phase1) = phase1_color(part, guess) else {
        return;
    };
    let p2 = phase2_fill(part, &phase1);
    let uncolored: Vec<usize> = g.vertices().filter(|&v| p2.colors[v] == 0).collect();
    let residual_size = uncolored.len();
    let (sub, map) = g.induced(&uncolored);
    let chi = if sub.n() == 0 {
        OracleResult {
            value: Value::Finite(0),
            witness: Some(Coloring::empty(0, 0)),
        }
    } else {
        oracle.chi(&sub).expect("guard sized to the graph")
    };
    let s = chi.value.finite().expect("chi is finite");
    let total = r + s;
    if best.as_ref().map(|b| b.0 <= total).unwrap_or(false) {
        return;
    }
    let mut colors = p2.colors.clone();
    if let Some(w) = chi.witness {
        for (new, &old) in map.iter().enumerate() {
            colors[old] = w.get(new).unwrap() + r;
        }
    }
    let witness = Coloring::total(colors, total);
    debug_assert!(
        verify_odd_coloring(g, &witness).is_valid(),
        "assembled coloring must be odd for guess {guess:?}"
    );
    if verify_odd_coloring(g, &witness).is_valid() {
        *best = Some((total, witness, r, residual_size));
    }
}

/// All placements (A_i, g_i) valid for a group: pairwise non-adjacent
/// carrier types (properness), odd parity on clique carriers, and every
/// member type must see the color an odd number of times in total.
fn valid_placements(part: &NDPartition, members: &[usize]) -> Vec<Vec<(usize, Parity)>> {
    let t = part.t();
    let mut out = Vec::new();
    // state per type: 0 absent, 1 odd, 2 even
    let mut state = vec![0u8; t];
    fn rec(
        part: &NDPartition,
        members: &[usize],
        state: &mut Vec<u8>,
        ty: usize,
        out: &mut Vec<Vec<(usize, Parity)>>,
    ) {
        let t = part.t();
        if ty == t {
            // Each member must accumulate odd parity over adjacent carriers.
            for &m in members {
                let sum: u8 = (0..t)
                    .filter(|&c| part.adjacency[m][c] && state[c] == 1)
                    .count() as u8;
                if sum % 2 == 0 {
                    return;
                }
            }
            out.push(
                (0..t)
                    .filter(|&c| state[c] != 0)
                    .map(|c| {
                        (
                            c,
                            if state[c] == 1 {
                                Parity::Odd
                            } else {
                                Parity::Even
                            },
                        )
                    })
                    .collect(),
            );
            return;
        }
        // Absent.
        state[ty] = 0;
        rec(part, members, state, ty + 1, out);
        // Carrier: must avoid adjacency with earlier carriers.
        let clash = (0..ty).any(|c| state[c] != 0 && part.adjacency[ty][c]);
        if !clash {
            state[ty] = 1;
            rec(part, members, state, ty + 1, out);
            if part.kinds[ty] == TypeKind::Independent && part.types[ty].len() >= 2 {
                state[ty] = 2;
                rec(part, members, state, ty + 1, out);
            }
            state[ty] = 0;
        }
    }
    rec(part, members, &mut state, 0, &mut out);
    out
}

/// Set partitions of `items`, blocks ordered by smallest member.
fn set_partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    fn rec(
        items: &[usize],
        pos: usize,
        blocks: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if pos == items.len() {
            out.push(blocks.clone());
            return;
        }
        let item = items[pos];
        for bi in 0..blocks.len() {
            blocks[bi].push(item);
            rec(items, pos + 1, blocks, out);
            blocks[bi].pop();
        }
        blocks.push(vec![item]);
        rec(items, pos + 1, blocks, out);
        blocks.pop();
    }
    rec(items, 0, &mut blocks, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    fn k23() -> Graph {
        let mut g = Graph::new(5);
        for u in 0..2 {
            for v in 2..5 {
                g.add_edge(u, v);
            }
        }
        g
    }

    fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    #[test]
    fn partition_examples() {
        let p = compute_nd_partition(&k23());
        assert_eq!(p.t(), 2);
        assert_eq!(p.kinds, vec![TypeKind::Independent, TypeKind::Independent]);
        assert_eq!(p.types[0].len(), 2);
        assert_eq!(p.types[1].len(), 3);

        let p = compute_nd_partition(&complete(4));
        assert_eq!(p.t(), 1);
        assert_eq!(p.kinds, vec![TypeKind::Clique]);

        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let p = compute_nd_partition(&p3);
        assert_eq!(p.t(), 2);
        assert_eq!(p.types, vec![vec![0, 2], vec![1]]);
        assert!(p.kinds.iter().all(|&k| k == TypeKind::Independent));
    }

    #[test]
    fn phase1_examples() {
        let part = compute_nd_partition(&k23());
        // Empty guess colors nothing.
        let g0 = NDGuess {
            groups: Vec::new(),
            placements: Vec::new(),
        };
        assert_eq!(phase1_color(&part, &g0), Some(vec![0; 5]));
        // Even parity demanded from a singleton type is invalid.
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let part3 = compute_nd_partition(&p3);
        let bad = NDGuess {
            groups: vec![vec![0]],
            placements: vec![vec![(1, Parity::Even)]],
        };
        assert_eq!(phase1_color(&part3, &bad), None);
        // One odd color aimed at the big side colors one vertex.
        let g1 = NDGuess {
            groups: vec![vec![0]],
            placements: vec![vec![(1, Parity::Odd)]],
        };
        let c = phase1_color(&part, &g1).unwrap();
        assert_eq!(c.iter().filter(|&&x| x != 0).count(), 1);
    }

    #[test]
    fn phase2_preserves_parities() {
        // Type of size 4 with two same-colored vertices: flooding keeps
        // the count even.
        let mut g = Graph::new(6);
        for u in 0..2 {
            for v in 2..6 {
                g.add_edge(u, v);
            }
        }
        let part = compute_nd_partition(&g);
        let big = if part.types[0].len() == 4 { 0 } else { 1 };
        let guess = NDGuess {
            groups: vec![vec![1 - big]],
            placements: vec![vec![(big, Parity::Even)]],
        };
        let p1 = phase1_color(&part, &guess).unwrap();
        let p2 = phase2_fill(&part, &p1);
        let count = part.types[big]
            .iter()
            .filter(|&&v| p2.colors[v] == 1)
            .count();
        assert_eq!(count % 2, 0);
        assert_eq!(p2.deferred[big], 0);

        // Size 3 with one colored vertex: the remaining two flood and the
        // odd parity survives.
        let part3 = compute_nd_partition(&k23());
        let guess = NDGuess {
            groups: vec![vec![0]],
            placements: vec![vec![(1, Parity::Odd)]],
        };
        let p1 = phase1_color(&part3, &guess).unwrap();
        let p2 = phase2_fill(&part3, &p1);
        let count = part3.types[1]
            .iter()
            .filter(|&&v| p2.colors[v] == 1)
            .count();
        assert_eq!(count, 3);
        assert_eq!(p2.deferred[1], 0);
    }

    #[test]
    fn solve_examples() {
        let s = solve_neighborhood_diversity(&k23(), 5).unwrap();
        assert_eq!(s.result.value, Value::Finite(3));
        let s = solve_neighborhood_diversity(&complete(4), 5).unwrap();
        assert_eq!(s.result.value, Value::Finite(4));
        let mut g = complete(3);
        g.add_vertex();
        let s = solve_neighborhood_diversity(&g, 5).unwrap();
        assert_eq!(s.result.value, Value::Unbounded);
    }

    #[test]
    fn guard_fires_on_many_types() {
        let p7 = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]);
        assert!(matches!(
            solve_neighborhood_diversity(&p7, 5),
            Err(NdError::TGuard { .. })
        ));
    }

    #[test]
    fn random_nd_graphs_match_oracle() {
        let oracle = Oracle::new();
        let mut rng = gen::Rng::new(606);
        let mut done = 0;
        while done < 25 {
            let t = rng.range(1, 4);
            let n = rng.range(t.max(2), 11);
            if n < t {
                continue;
            }
            let g = gen::random_nd_graph(t, n, &mut rng);
            let s = match solve_neighborhood_diversity(&g, n) {
                Ok(s) => s,
                Err(NdError::TGuard { .. }) => continue,
            };
            let expected = oracle.chi_odd(&g).unwrap().value;
            assert_eq!(s.result.value, expected, "mismatch on {g:?}");
            done += 1;
        }
    }

    #[test]
    fn independent_type_shares_odd_colors() {
        // In any verified odd coloring, all vertices of an independent
        // type see the same multiset outside the type, hence share their
        // odd-color set.
        let mut rng = gen::Rng::new(707);
        for _ in 0..10 {
            let g = gen::random_nd_graph(3, 9, &mut rng);
            if g.has_isolated_vertex() {
                continue;
            }
            let s = solve_neighborhood_diversity(&g, 9).unwrap();
            let w = s.result.witness.unwrap();
            let part = compute_nd_partition(&g);
            for (ty, verts) in part.types.iter().enumerate() {
                if part.kinds[ty] != TypeKind::Independent || verts.len() < 2 {
                    continue;
                }
                let odd_set = |v: usize| -> Vec<usize> {
                    let mut counts = std::collections::BTreeMap::new();
                    for &u in g.neighbors(v) {
                        *counts.entry(w.get(u).unwrap()).or_insert(0usize) += 1;
                    }
                    counts
                        .into_iter()
                        .filter(|&(_, c)| c % 2 == 1)
                        .map(|(c, _)| c)
                        .collect()
                };
                let first = odd_set(verts[0]);
                for &v in &verts[1..] {
                    assert_eq!(odd_set(v), first);
                }
            }
        }
    }
}
