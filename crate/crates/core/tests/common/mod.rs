//! Shared helpers for the acceptance suite: definition-direct reference
//! computations kept independent of the library's search paths.

use oddchrom::coloring::{verify_odd_coloring, Coloring, Value};
use oddchrom::graph::Graph;

/// Exhaustive decision by odometer enumeration of all k^n colorings,
/// checked directly against the odd-coloring definition.
pub fn naive_odd_decision(g: &Graph, k: usize) -> bool {
    let n = g.n();
    let mut assign = vec![1usize; n];
    loop {
        let f = Coloring::total(assign.clone(), k);
        if verify_odd_coloring(g, &f).is_valid() {
            return true;
        }
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

pub fn naive_chi_odd(g: &Graph) -> Value {
    if g.has_isolated_vertex() {
        return Value::Unbounded;
    }
    Value::Finite((1..=g.n()).find(|&k| naive_odd_decision(g, k)).unwrap())
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>())
}
