//! Deterministic instance generators for tests, benchmarks and sweeps.
//!
//! All randomness flows through [`Rng`], a SplitMix64 generator, so a seed
//! reproduces the same instances on every platform.

use crate::graph::Graph;
use crate::interval::IntervalRepresentation;

/// SplitMix64. Small, fast, and good enough for instance generation.
#[derive(Clone, Debug)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` (`bound > 0`).
    pub fn below(&mut self, bound: usize) -> usize {
        assert!(bound > 0);
        (self.next_u64() % bound as u64) as usize
    }

    /// Uniform value in `lo..=hi`.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below(hi - lo + 1)
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.next_u64() % den < num
    }

    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            xs.swap(i, self.below(i + 1));
        }
    }
}

/// Erdős–Rényi graph: each edge present with probability `num/den`.
pub fn gnp(n: usize, num: u64, den: u64, rng: &mut Rng) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(num, den) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random connected graph: a random spanning tree plus G(n, p) noise.
pub fn connected_gnp(n: usize, num: u64, den: u64, rng: &mut Rng) -> Graph {
    let mut g = gnp(n, num, den, rng);
    let mut order: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut order);
    for i in 1..n {
        let j = rng.below(i);
        g.add_edge(order[i], order[j]);
    }
    g
}

/// Uniform random labeled tree via a Prüfer sequence.
pub fn random_tree(n: usize, rng: &mut Rng) -> Graph {
    let mut g = Graph::new(n);
    if n <= 1 {
        return g;
    }
    if n == 2 {
        g.add_edge(0, 1);
        return g;
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.below(n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &seq {
        degree[v] += 1;
    }
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    for &v in &seq {
        let std::cmp::Reverse(leaf) = leaves.pop().unwrap();
        g.add_edge(leaf, v);
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(std::cmp::Reverse(v));
        }
    }
    let std::cmp::Reverse(a) = leaves.pop().unwrap();
    let std::cmp::Reverse(b) = leaves.pop().unwrap();
    g.add_edge(a, b);
    g
}

/// Random cograph realized from a random union/join tree on `n` leaves.
pub fn random_cograph(n: usize, rng: &mut Rng) -> Graph {
    fn build(g: &mut Graph, leaves: &[usize], join: bool, rng: &mut Rng) {
        if leaves.len() <= 1 {
            return;
        }
        let blocks = rng.range(2, leaves.len());
        let mut parts: Vec<Vec<usize>> = vec![Vec::new(); blocks];
        for (i, &v) in leaves.iter().enumerate() {
            if i < blocks {
                parts[i].push(v);
            } else {
                parts[rng.below(blocks)].push(v);
            }
        }
        if join {
            for i in 0..blocks {
                for j in i + 1..blocks {
                    for &u in &parts[i] {
                        for &v in &parts[j] {
                            g.add_edge(u, v);
                        }
                    }
                }
            }
        }
        for part in &parts {
            build(g, part, !join, rng);
        }
    }
    let mut g = Graph::new(n);
    let leaves: Vec<usize> = (0..n).collect();
    build(&mut g, &leaves, rng.chance(1, 2), rng);
    g
}

/// Random connected cograph.
pub fn random_connected_cograph(n: usize, rng: &mut Rng) -> Graph {
    loop {
        let g = random_cograph(n, rng);
        if g.is_connected() {
            return g;
        }
    }
}

/// Random split graph: clique of size `k`, independent set of size `l`,
/// each independent vertex picks a random subset of the clique.
pub fn random_split(k: usize, l: usize, rng: &mut Rng) -> Graph {
    let mut g = Graph::new(k + l);
    for u in 0..k {
        for v in u + 1..k {
            g.add_edge(u, v);
        }
    }
    for i in 0..l {
        for u in 0..k {
            if rng.chance(1, 2) {
                g.add_edge(k + i, u);
            }
        }
    }
    g
}

/// Random instance whose last `d` vertices form a modulator to a clique:
/// vertices `0..n-d` are a clique, the rest attach arbitrarily.
pub fn random_clique_plus(n: usize, d: usize, rng: &mut Rng) -> (Graph, Vec<usize>) {
    assert!(d <= n);
    let c = n - d;
    let mut g = Graph::new(n);
    for u in 0..c {
        for v in u + 1..c {
            g.add_edge(u, v);
        }
    }
    for x in c..n {
        for v in 0..c {
            if rng.chance(1, 2) {
                g.add_edge(x, v);
            }
        }
        for y in c..x {
            if rng.chance(1, 2) {
                g.add_edge(x, y);
            }
        }
    }
    (g, (c..n).collect())
}

/// Random instance whose last `t` vertices form a modulator to a cluster
/// graph (disjoint cliques).
pub fn random_cluster_plus(
    cluster_sizes: &[usize],
    t: usize,
    num: u64,
    den: u64,
    rng: &mut Rng,
) -> (Graph, Vec<usize>) {
    let base: usize = cluster_sizes.iter().sum();
    let mut g = Graph::new(base + t);
    let mut start = 0;
    for &s in cluster_sizes {
        for u in start..start + s {
            for v in u + 1..start + s {
                g.add_edge(u, v);
            }
        }
        start += s;
    }
    for x in base..base + t {
        for v in 0..base {
            if rng.chance(num, den) {
                g.add_edge(x, v);
            }
        }
        for y in base..x {
            if rng.chance(num, den) {
                g.add_edge(x, y);
            }
        }
    }
    (g, (base..base + t).collect())
}

/// Random instance whose last `t` vertices form a modulator to a
/// co-cluster (complete multipartite) graph.
pub fn random_cocluster_plus(
    part_sizes: &[usize],
    t: usize,
    num: u64,
    den: u64,
    rng: &mut Rng,
) -> (Graph, Vec<usize>) {
    let base: usize = part_sizes.iter().sum();
    let mut g = Graph::new(base + t);
    let mut bounds = Vec::new();
    let mut start = 0;
    for &s in part_sizes {
        bounds.push((start, start + s));
        start += s;
    }
    for (i, &(a, b)) in bounds.iter().enumerate() {
        for &(c, d) in &bounds[i + 1..] {
            for u in a..b {
                for v in c..d {
                    g.add_edge(u, v);
                }
            }
        }
    }
    for x in base..base + t {
        for v in 0..base {
            if rng.chance(num, den) {
                g.add_edge(x, v);
            }
        }
        for y in base..x {
            if rng.chance(num, den) {
                g.add_edge(x, y);
            }
        }
    }
    (g, (base..base + t).collect())
}

/// Random graph built from an explicit type structure: at most `t` types,
/// each a clique or independent set, with all-or-nothing adjacency between
/// types. Its neighborhood diversity is at most `t`.
pub fn random_nd_graph(t: usize, n: usize, rng: &mut Rng) -> Graph {
    assert!(t >= 1 && n >= t);
    let mut sizes = vec![1usize; t];
    for _ in t..n {
        sizes[rng.below(t)] += 1;
    }
    let clique_kind: Vec<bool> = (0..t).map(|_| rng.chance(1, 2)).collect();
    let mut adj = vec![vec![false; t]; t];
    for i in 0..t {
        for j in i + 1..t {
            if rng.chance(2, 3) {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
    }
    let mut g = Graph::new(n);
    let mut start = Vec::new();
    let mut acc = 0;
    for &s in &sizes {
        start.push(acc);
        acc += s;
    }
    for i in 0..t {
        if clique_kind[i] {
            for u in start[i]..start[i] + sizes[i] {
                for v in u + 1..start[i] + sizes[i] {
                    g.add_edge(u, v);
                }
            }
        }
        for j in i + 1..t {
            if adj[i][j] {
                for u in start[i]..start[i] + sizes[i] {
                    for v in start[j]..start[j] + sizes[j] {
                        g.add_edge(u, v);
                    }
                }
            }
        }
    }
    g
}

/// Random interval representation: endpoints drawn as a shuffled
/// permutation of `0..2n`, paired into intervals.
pub fn random_intervals(n: usize, rng: &mut Rng) -> IntervalRepresentation {
    let mut points: Vec<i64> = (0..2 * n as i64).collect();
    rng.shuffle(&mut points);
    let mut iv = Vec::with_capacity(n);
    for i in 0..n {
        let a = points[2 * i];
        let b = points[2 * i + 1];
        iv.push((a.min(b), a.max(b)));
    }
    IntervalRepresentation::from_integer_endpoints(iv)
}

/// Random unit-interval representation: distinct even left endpoints with
/// a common odd length, so all endpoints are distinct and no interval
/// contains another.
pub fn random_unit_intervals(n: usize, span: usize, rng: &mut Rng) -> IntervalRepresentation {
    assert!(span >= n, "span must admit n distinct starts");
    let mut starts: Vec<i64> = (0..span as i64).collect();
    rng.shuffle(&mut starts);
    let len = 2 * (span as i64 / 3).max(1) + 1;
    let iv: Vec<(i64, i64)> = starts[..n].iter().map(|&s| (2 * s, 2 * s + len)).collect();
    IntervalRepresentation::from_integer_endpoints(iv)
}

/// All graphs on `n` labeled vertices, as an iterator over edge-subset
/// masks. `n` must be small (at most 7 is sensible).
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rng_is_deterministic() {
        let mut a = Rng::new(42);
        let mut b = Rng::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn tree_has_right_edge_count() {
        let mut rng = Rng::new(7);
        for n in 2..12 {
            let t = random_tree(n, &mut rng);
            assert_eq!(t.m(), n - 1);
            assert!(t.is_connected());
        }
    }

    #[test]
    fn split_generator_yields_split_partitions() {
        let mut rng = Rng::new(3);
        let g = random_split(4, 5, &mut rng);
        assert!(g.is_clique(&[0, 1, 2, 3]));
        assert!(g.is_independent_set(&[4, 5, 6, 7, 8]));
    }

    #[test]
    fn clique_plus_modulator_leaves_clique() {
        let mut rng = Rng::new(11);
        let (g, x) = random_clique_plus(10, 3, &mut rng);
        let (rest, _) = g.induced_without(&x);
        assert!(rest.is_clique(&rest.vertices().collect::<Vec<_>>()));
    }

    #[test]
    fn all_graphs_counts() {
        assert_eq!(all_graphs(3).count(), 8);
        assert_eq!(all_graphs(4).count(), 64);
    }
}
