//! Simple undirected graphs with canonical 0-based vertex indexing.

use std::fmt;

/// A finite simple undirected graph on vertices `0..n`.
///
/// No self-loops, no parallel edges. Adjacency lists are sorted and
/// mutually consistent. Disconnected graphs are allowed everywhere;
/// algorithms that need connectivity check it themselves.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, collapsing duplicates.
    ///
    /// Panics on self-loops or out-of-range endpoints; use the parsers for
    /// untrusted input.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Appends a fresh isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Inserts the edge `uv`. Returns false if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "self-loop {u}");
        assert!(u < self.n() && v < self.n(), "edge ({u},{v}) out of range");
        match self.adj[u].binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.m += 1;
                true
            }
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in self.vertices() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        self.vertices()
            .filter(|&v| self.adj[v].is_empty())
            .collect()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|a| a.is_empty())
    }

    /// Number of neighbors of `v` inside `set` (`set` given as a membership mask).
    pub fn degree_into(&self, v: usize, mask: &[bool]) -> usize {
        self.adj[v].iter().filter(|&&u| mask[u]).count()
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if !self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_independent_set(&self, vs: &[usize]) -> bool {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// Induced subgraph on `keep` (in the given order).
    ///
    /// Returns the subgraph together with the map `new index -> old index`.
    pub fn induced(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut old_to_new = vec![usize::MAX; self.n()];
        for (new, &old) in keep.iter().enumerate() {
            assert!(old_to_new[old] == usize::MAX, "duplicate vertex in keep");
            old_to_new[old] = new;
        }
        let mut g = Graph::new(keep.len());
        for (new_u, &old_u) in keep.iter().enumerate() {
            for &old_v in &self.adj[old_u] {
                let new_v = old_to_new[old_v];
                if new_v != usize::MAX && new_u < new_v {
                    g.add_edge(new_u, new_v);
                }
            }
        }
        (g, keep.to_vec())
    }

    /// Induced subgraph on all vertices except `drop` (ascending order kept).
    pub fn induced_without(&self, drop: &[usize]) -> (Graph, Vec<usize>) {
        let mut dropped = vec![false; self.n()];
        for &v in drop {
            dropped[v] = true;
        }
        let keep: Vec<usize> = self.vertices().filter(|&v| !dropped[v]).collect();
        self.induced(&keep)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Connected components, each sorted ascending; components ordered by
    /// smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.connected_components().len() == 1
    }

    /// Two-coloring of a bipartite graph, or None if an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.n();
        let mut side = vec![None; n];
        for start in 0..n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].unwrap();
                for &u in &self.adj[v] {
                    match side[u] {
                        None => {
                            side[u] = Some(!sv);
                            queue.push_back(u);
                        }
                        Some(su) if su == sv => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap()).collect())
    }

    /// Relabels vertices by `perm` (old vertex `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::new(self.n());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// DIMACS `.col` serialization (1-indexed `e` lines).
    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p edge {} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            s.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.n(),
            self.m(),
            self.edges()
        )
    }
}

/// Input formats understood by [`parse_graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    /// DIMACS `.col`: `c` comments, `p edge <n> <m>`, `e <u> <v>` (1-indexed).
    Dimacs,
    /// One `u v` pair per line, 0-indexed; `#` starts a comment.
    EdgeList,
}

/// Parse failure with the offending 1-based line number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

/// Parses a graph from text. Duplicate edges collapse silently; self-loops
/// and out-of-range endpoints are errors naming the line.
pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, ParseError> {
    match format {
        GraphFormat::Dimacs => parse_dimacs(text),
        GraphFormat::EdgeList => parse_edgelist(text),
    }
}

fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut g: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let ln = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix('p') {
            if g.is_some() {
                return Err(err(ln, "duplicate problem line"));
            }
            let mut it = rest.split_ascii_whitespace();
            match it.next() {
                Some("edge") | Some("col") => {}
                other => return Err(err(ln, format!("expected 'p edge', got {other:?}"))),
            }
            let n: usize = it
                .next()
                .ok_or_else(|| err(ln, "missing vertex count"))?
                .parse()
                .map_err(|_| err(ln, "bad vertex count"))?;
            let _m: usize = it
                .next()
                .ok_or_else(|| err(ln, "missing edge count"))?
                .parse()
                .map_err(|_| err(ln, "bad edge count"))?;
            g = Some(Graph::new(n));
        } else if let Some(rest) = line.strip_prefix('e') {
            let g = g
                .as_mut()
                .ok_or_else(|| err(ln, "edge before problem line"))?;
            let mut it = rest.split_ascii_whitespace();
            let u: usize = it
                .next()
                .ok_or_else(|| err(ln, "missing endpoint"))?
                .parse()
                .map_err(|_| err(ln, "bad endpoint"))?;
            let v: usize = it
                .next()
                .ok_or_else(|| err(ln, "missing endpoint"))?
                .parse()
                .map_err(|_| err(ln, "bad endpoint"))?;
            if u == 0 || v == 0 || u > g.n() || v > g.n() {
                return Err(err(ln, format!("vertex out of range 1..={}", g.n())));
            }
            if u == v {
                return Err(err(ln, format!("self-loop at vertex {u}")));
            }
            g.add_edge(u - 1, v - 1);
        } else {
            return Err(err(ln, format!("unrecognized line: {line:?}")));
        }
    }
    g.ok_or_else(|| err(text.lines().count().max(1), "missing problem line"))
}

fn parse_edgelist(text: &str) -> Result<Graph, ParseError> {
    let mut edges = Vec::new();
    let mut max_v = None::<usize>;
    for (idx, raw) in text.lines().enumerate() {
        let ln = idx + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_ascii_whitespace();
        let u: usize = it
            .next()
            .unwrap()
            .parse()
            .map_err(|_| err(ln, "bad endpoint"))?;
        let v: usize = it
            .next()
            .ok_or_else(|| err(ln, "missing second endpoint"))?
            .parse()
            .map_err(|_| err(ln, "bad endpoint"))?;
        if it.next().is_some() {
            return Err(err(ln, "trailing tokens"));
        }
        if u == v {
            return Err(err(ln, format!("self-loop at vertex {u}")));
        }
        max_v = Some(max_v.map_or(u.max(v), |m| m.max(u).max(v)));
        edges.push((u, v));
    }
    let n = max_v.map_or(0, |m| m + 1);
    Ok(Graph::from_edges(n, &edges))
}
