//! Cotree construction and linear-style computation of four chromatic
//! invariants on cographs.
//!
//! A cograph decomposes into single vertices, disjoint unions and joins.
//! The invariants chi, strong chi, odd chi and strong odd chi compose
//! over joins by closed formulas; unions take maxima for the plain and
//! odd numbers, while the strong variants are decided by a parity-profile
//! recursion: for each subtree and palette size we track exactly which
//! odd-size-class counts are achievable by proper (resp. odd) colorings.
//! The same profiles drive witness reconstruction.

use crate::coloring::{verify_odd_coloring, Coloring, Value};
use crate::graph::Graph;
use std::collections::HashMap;
use std::rc::Rc;

/// Canonical cotree: no union child of a union, no join child of a join.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cotree {
    Leaf(usize),
    Union(Vec<Cotree>),
    Join(Vec<Cotree>),
}

impl Cotree {
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out.sort_unstable();
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Cotree::Leaf(v) => out.push(*v),
            Cotree::Union(cs) | Cotree::Join(cs) => {
                for c in cs {
                    c.collect_leaves(out);
                }
            }
        }
    }

    /// The graph realized by this cotree, over `n` vertices.
    pub fn realize(&self, n: usize) -> Graph {
        let mut g = Graph::new(n);
        self.realize_into(&mut g);
        g
    }

    fn realize_into(&self, g: &mut Graph) {
        match self {
            Cotree::Leaf(_) => {}
            Cotree::Union(cs) => {
                for c in cs {
                    c.realize_into(g);
                }
            }
            Cotree::Join(cs) => {
                for c in cs {
                    c.realize_into(g);
                }
                for i in 0..cs.len() {
                    let li = {
                        let mut v = Vec::new();
                        cs[i].collect_leaves(&mut v);
                        v
                    };
                    for cj in &cs[i + 1..] {
                        let mut lj = Vec::new();
                        cj.collect_leaves(&mut lj);
                        for &u in &li {
                            for &v in &lj {
                                g.add_edge(u, v);
                            }
                        }
                    }
                }
            }
        }
    }
}

/// Builds the canonical cotree of `g`, or returns an induced P4 (as a
/// path `a-b-c-d`) witnessing that `g` is not a cograph.
pub fn build_cotree(g: &Graph) -> Result<Cotree, Vec<usize>> {
    assert!(g.n() >= 1, "cotree of an empty graph");
    let verts: Vec<usize> = g.vertices().collect();
    build_rec(g, &verts)
}

fn build_rec(g: &Graph, verts: &[usize]) -> Result<Cotree, Vec<usize>> {
    if verts.len() == 1 {
        return Ok(Cotree::Leaf(verts[0]));
    }
    let (sub, map) = g.induced(verts);
    let comps = sub.connected_components();
    if comps.len() >= 2 {
        let mut children = Vec::new();
        for comp in comps {
            let orig: Vec<usize> = comp.iter().map(|&v| map[v]).collect();
            children.push(build_rec(g, &orig)?);
        }
        return Ok(Cotree::Union(children));
    }
    let co_comps = sub.complement().connected_components();
    if co_comps.len() >= 2 {
        let mut children = Vec::new();
        for comp in co_comps {
            let orig: Vec<usize> = comp.iter().map(|&v| map[v]).collect();
            children.push(build_rec(g, &orig)?);
        }
        return Ok(Cotree::Join(children));
    }
    // Connected and co-connected with >1 vertex: an induced P4 exists.
    Err(find_induced_p4(&sub)
        .map(|p| p.into_iter().map(|v| map[v]).collect())
        .expect("connected co-connected graph contains an induced P4"))
}

fn find_induced_p4(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    for a in 0..n {
        for b in 0..n {
            if a == b || !g.has_edge(a, b) {
                continue;
            }
            for c in 0..n {
                if c == a || c == b || !g.has_edge(b, c) || g.has_edge(a, c) {
                    continue;
                }
                for d in 0..n {
                    if d == a || d == b || d == c {
                        continue;
                    }
                    if g.has_edge(c, d) && !g.has_edge(b, d) && !g.has_edge(a, d) {
                        return Some(vec![a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

/// The four invariants of a cograph subtree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvariantTuple {
    pub chi: Value,
    pub chi_strong: Value,
    pub chi_odd: Value,
    pub chi_odd_strong: Value,
}

// Internal binary decomposition used for the recursion; n-ary nodes are
// folded left, which is sound because union and join are associative.
enum BinKind {
    Leaf(usize),
    Union(usize, usize),
    Join(usize, usize),
}

struct Arena {
    nodes: Vec<BinKind>,
    leaves: Vec<Vec<usize>>,
    // achievable odd-class counts, by (node, palette, odd-mode)
    profiles: HashMap<(usize, usize, bool), Rc<Vec<bool>>>,
}

impl Arena {
    fn from_cotree(t: &Cotree) -> (Arena, usize) {
        let mut arena = Arena {
            nodes: Vec::new(),
            leaves: Vec::new(),
            profiles: HashMap::new(),
        };
        let root = arena.add(t);
        (arena, root)
    }

    fn add(&mut self, t: &Cotree) -> usize {
        match t {
            Cotree::Leaf(v) => self.push(BinKind::Leaf(*v), vec![*v]),
            Cotree::Union(cs) | Cotree::Join(cs) => {
                let join = matches!(t, Cotree::Join(_));
                assert!(cs.len() >= 2, "internal cotree nodes have >= 2 children");
                let mut acc = self.add(&cs[0]);
                for c in &cs[1..] {
                    let rhs = self.add(c);
                    let mut lv = self.leaves[acc].clone();
                    lv.extend_from_slice(&self.leaves[rhs]);
                    lv.sort_unstable();
                    let kind = if join {
                        BinKind::Join(acc, rhs)
                    } else {
                        BinKind::Union(acc, rhs)
                    };
                    acc = self.push(kind, lv);
                }
                acc
            }
        }
    }

    fn push(&mut self, kind: BinKind, leaves: Vec<usize>) -> usize {
        self.nodes.push(kind);
        self.leaves.push(leaves);
        self.nodes.len() - 1
    }

    /// Which odd-class counts are achievable by a proper (odd = false) or
    /// odd (odd = true) coloring of `node` into palette `1..=k`.
    fn profile(&mut self, node: usize, k: usize, odd: bool) -> Rc<Vec<bool>> {
        if let Some(p) = self.profiles.get(&(node, k, odd)) {
            return Rc::clone(p);
        }
        let mut out = vec![false; k + 1];
        match self.nodes[node] {
            BinKind::Leaf(_) => {
                if !odd && k >= 1 {
                    out[1] = true;
                }
                // An isolated vertex never has an odd color.
            }
            BinKind::Union(a, b) => {
                let pa = self.profile(a, k, odd);
                let pb = self.profile(b, k, odd);
                for oa in ones(&pa) {
                    for ob in ones(&pb) {
                        // Overlap j odd classes; both flip to even there.
                        let jlo = (oa + ob).saturating_sub(k);
                        for j in jlo..=oa.min(ob) {
                            out[oa + ob - 2 * j] = true;
                        }
                    }
                }
            }
            BinKind::Join(a, b) => {
                for ka in 1..k {
                    let kb = k - ka;
                    if !odd {
                        let pa = self.profile(a, ka, false);
                        let pb = self.profile(b, kb, false);
                        for oa in ones(&pa) {
                            for ob in ones(&pb) {
                                out[oa + ob] = true;
                            }
                        }
                    } else {
                        // Sides use disjoint palettes. A side that is not
                        // itself odd needs an odd class on the other side.
                        let qa = self.profile(a, ka, true);
                        let qb = self.profile(b, kb, true);
                        let pa = self.profile(a, ka, false);
                        let pb = self.profile(b, kb, false);
                        for (fa, fb) in [(true, true), (true, false), (false, true), (false, false)]
                        {
                            let sa = if fa { &qa } else { &pa };
                            let sb = if fb { &qb } else { &pb };
                            for oa in ones(sa) {
                                for ob in ones(sb) {
                                    if (fa || ob >= 1) && (fb || oa >= 1) {
                                        out[oa + ob] = true;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        let rc = Rc::new(out);
        self.profiles.insert((node, k, odd), Rc::clone(&rc));
        rc
    }

    fn tuple(&mut self, node: usize) -> InvariantTuple {
        match self.nodes[node] {
            BinKind::Leaf(_) => InvariantTuple {
                chi: Value::Finite(1),
                chi_strong: Value::Finite(1),
                chi_odd: Value::Unbounded,
                chi_odd_strong: Value::Unbounded,
            },
            BinKind::Join(a, b) => {
                let ta = self.tuple(a);
                let tb = self.tuple(b);
                let chi = ta.chi.plus(tb.chi);
                let chi_strong = ta.chi_strong.plus(tb.chi).min(ta.chi.plus(tb.chi_strong));
                let chi_odd = ta
                    .chi_odd
                    .plus(tb.chi_odd)
                    .min(ta.chi_strong.plus(tb.chi_strong))
                    .min(ta.chi_odd_strong.plus(tb.chi))
                    .min(ta.chi.plus(tb.chi_odd_strong));
                let chi_odd_strong = ta
                    .chi_odd_strong
                    .plus(tb.chi)
                    .min(ta.chi.plus(tb.chi_odd_strong))
                    .min(ta.chi_strong.plus(tb.chi_strong));
                InvariantTuple {
                    chi,
                    chi_strong,
                    chi_odd,
                    chi_odd_strong,
                }
            }
            BinKind::Union(a, b) => {
                let ta = self.tuple(a);
                let tb = self.tuple(b);
                let chi = ta.chi.max(tb.chi);
                let chi_odd = ta.chi_odd.max(tb.chi_odd);
                let chi_strong = self.strong_from_profiles(node, chi, false);
                let chi_odd_strong = match chi_odd {
                    Value::Unbounded => Value::Unbounded,
                    Value::Finite(_) => self.strong_from_profiles(node, chi_odd, true),
                };
                InvariantTuple {
                    chi,
                    chi_strong,
                    chi_odd,
                    chi_odd_strong,
                }
            }
        }
    }

    fn strong_from_profiles(&mut self, node: usize, base: Value, odd: bool) -> Value {
        let b = base.finite().expect("strong value needs a finite base");
        for k in [b, b + 1] {
            let p = self.profile(node, k, odd);
            if p.iter().skip(1).any(|&x| x) {
                return Value::Finite(k);
            }
        }
        unreachable!("a strong coloring exists with one extra color")
    }

    /// Builds a coloring of the node's leaves into `1..=k` with exactly
    /// `o` odd-size classes, proper or odd per `odd`.
    fn materialize(&mut self, node: usize, k: usize, o: usize, odd: bool) -> Option<Vec<usize>> {
        if !*self.profile(node, k, odd).get(o)? {
            return None;
        }
        match self.nodes[node] {
            BinKind::Leaf(v) => {
                let mut colors = vec![(v, 1)];
                Some(assemble(&mut colors))
            }
            BinKind::Union(a, b) => {
                let pa = self.profile(a, k, odd);
                let pb = self.profile(b, k, odd);
                for oa in ones(&pa) {
                    for ob in ones(&pb) {
                        let jlo = (oa + ob).saturating_sub(k);
                        for j in jlo..=oa.min(ob) {
                            if oa + ob - 2 * j != o {
                                continue;
                            }
                            let ca = self.materialize(a, k, oa, odd)?;
                            let cb = self.materialize(b, k, ob, odd)?;
                            return Some(merge_union(
                                &self.leaves[a],
                                &ca,
                                &self.leaves[b],
                                &cb,
                                k,
                                j,
                            ));
                        }
                    }
                }
                None
            }
            BinKind::Join(a, b) => {
                for ka in 1..k {
                    let kb = k - ka;
                    let combos: &[(bool, bool)] = if odd {
                        &[(true, true), (true, false), (false, true), (false, false)]
                    } else {
                        &[(false, false)]
                    };
                    for &(fa, fb) in combos {
                        let sa = self.profile(a, ka, if odd { fa } else { false });
                        let sb = self.profile(b, kb, if odd { fb } else { false });
                        for oa in ones(&sa) {
                            for ob in ones(&sb) {
                                if oa + ob != o {
                                    continue;
                                }
                                if odd && !((fa || ob >= 1) && (fb || oa >= 1)) {
                                    continue;
                                }
                                let ca = self.materialize(a, ka, oa, odd && fa)?;
                                let cb = self.materialize(b, kb, ob, odd && fb)?;
                                let mut merged: Vec<(usize, usize)> = Vec::new();
                                for (i, &v) in self.leaves[a].iter().enumerate() {
                                    merged.push((v, ca[i]));
                                }
                                for (i, &v) in self.leaves[b].iter().enumerate() {
                                    merged.push((v, cb[i] + ka));
                                }
                                return Some(assemble(&mut merged));
                            }
                        }
                    }
                }
                None
            }
        }
    }
}

fn ones(p: &[bool]) -> Vec<usize> {
    p.iter()
        .enumerate()
        .filter(|(_, &x)| x)
        .map(|(i, _)| i)
        .collect()
}

/// Sorts (vertex, color) pairs by vertex and strips the vertices; the
/// leaf lists are sorted, so positions line up.
fn assemble(pairs: &mut Vec<(usize, usize)>) -> Vec<usize> {
    pairs.sort_unstable();
    pairs.iter().map(|&(_, c)| c).collect()
}

/// Combines union-side colorings, permuting the right side's colors so
/// exactly `j` odd classes land on odd classes of the left side.
fn merge_union(
    la: &[usize],
    ca: &[usize],
    lb: &[usize],
    cb: &[usize],
    k: usize,
    j: usize,
) -> Vec<usize> {
    let class_parity = |colors: &[usize]| -> Vec<usize> {
        let mut cnt = vec![0usize; k + 1];
        for &c in colors {
            cnt[c] += 1;
        }
        (1..=k).filter(|&c| cnt[c] % 2 == 1).collect()
    };
    let odd_a: Vec<usize> = class_parity(ca);
    let odd_b: Vec<usize> = class_parity(cb);
    let mut perm = vec![0usize; k + 1];
    let mut target_used = vec![false; k + 1];
    // j odd B-classes cancel odd A-classes; the rest land on even columns.
    for (i, &c) in odd_b.iter().enumerate() {
        let t = if i < j {
            odd_a[i]
        } else {
            (1..=k)
                .find(|&t| !target_used[t] && !odd_a.contains(&t))
                .expect("profile bounds guarantee room")
        };
        perm[c] = t;
        target_used[t] = true;
    }
    for c in 1..=k {
        if perm[c] == 0 {
            let t = (1..=k).find(|&t| !target_used[t]).unwrap();
            perm[c] = t;
            target_used[t] = true;
        }
    }
    let mut merged: Vec<(usize, usize)> = Vec::new();
    for (i, &v) in la.iter().enumerate() {
        merged.push((v, ca[i]));
    }
    for (i, &v) in lb.iter().enumerate() {
        merged.push((v, perm[cb[i]]));
    }
    assemble(&mut merged)
}

/// Computes the four invariants of the cograph realized by `t`.
pub fn cograph_invariants(t: &Cotree) -> InvariantTuple {
    let (mut arena, root) = Arena::from_cotree(t);
    let tup = arena.tuple(root);
    debug_assert!(tup.chi <= tup.chi_strong && tup.chi_strong <= tup.chi.plus(Value::Finite(1)));
    debug_assert!(tup.chi <= tup.chi_odd);
    debug_assert!(
        tup.chi_odd <= tup.chi_odd_strong
            && tup.chi_odd_strong <= tup.chi_odd.plus(Value::Finite(1))
    );
    tup
}

/// A verified odd coloring of `g` using exactly `chi_odd` colors, or
/// `None` when the value is unbounded.
pub fn cograph_chi_odd_coloring(t: &Cotree, g: &Graph) -> Option<Coloring> {
    let (mut arena, root) = Arena::from_cotree(t);
    let tup = arena.tuple(root);
    let k = tup.chi_odd.finite()?;
    let q = arena.profile(root, k, true);
    let o = ones(&q)
        .into_iter()
        .next()
        .expect("finite value has a profile entry");
    let colors = arena
        .materialize(root, k, o, true)
        .expect("profile entries are constructive");
    let leaves = arena.leaves[root].clone();
    let mut full = vec![0usize; g.n()];
    for (i, &v) in leaves.iter().enumerate() {
        full[v] = colors[i];
    }
    let f = Coloring::total(full, k);
    let cert = verify_odd_coloring(g, &f);
    assert!(cert.is_valid(), "cograph witness failed verification");
    f.into()
}
