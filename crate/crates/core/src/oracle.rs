//! Exhaustive reference implementations for small graphs.
//!
//! Everything here enumerates simple paths and is exponential in the worst
//! case. Graphs above the vertex cap (12 by default) are refused with
//! [`Error::OracleCap`]. The cap can be raised up to [`HARD_VERTEX_LIMIT`]
//! for sparse gadget graphs, where separation pruning keeps the search small.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Length, Path, VertexId};

pub const DEFAULT_VERTEX_CAP: usize = 12;
/// Connectivity checks use 128-bit vertex sets.
pub const HARD_VERTEX_LIMIT: usize = 128;

/// A directed simple path whose edge set is a minimal separating set among
/// its contiguous subpaths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeparatorPath {
    pub path: Path,
    /// `(r_0, r_1)`
    pub head: EdgeId,
    /// `(r_{k-2}, r_{k-1})`
    pub tail: EdgeId,
}

impl SeparatorPath {
    pub fn vertices(&self) -> &[VertexId] {
        self.path.vertices()
    }

    pub fn edge_count(&self) -> usize {
        self.path.edge_count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Flags {
    pub useful: bool,
    pub traversable: bool,
    pub normal: bool,
}

/// Adjacency bitsets with edges switched off and on during a search.
#[derive(Clone)]
struct BitGraph {
    adj: Vec<u128>,
    all: u128,
}

impl BitGraph {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        assert!(n <= HARD_VERTEX_LIMIT);
        let mut adj = vec![0u128; n];
        for e in g.edges() {
            adj[e.u] |= 1 << e.v;
            adj[e.v] |= 1 << e.u;
        }
        let all = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
        BitGraph { adj, all }
    }

    fn remove(&mut self, u: VertexId, v: VertexId) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    fn restore(&mut self, u: VertexId, v: VertexId) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    fn connected(&self) -> bool {
        if self.all == 0 {
            return true;
        }
        let mut seen: u128 = 1;
        let mut frontier: u128 = 1;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.all
    }
}

/// Exhaustive searches over one graph.
pub struct Oracle<'g> {
    g: &'g Graph,
    bits: BitGraph,
}

impl<'g> Oracle<'g> {
    pub fn new(g: &'g Graph) -> Result<Self> {
        Self::with_cap(g, DEFAULT_VERTEX_CAP)
    }

    pub fn with_cap(g: &'g Graph, cap: usize) -> Result<Self> {
        if cap > HARD_VERTEX_LIMIT {
            return Err(Error::Config(format!("oracle cap {cap} exceeds {HARD_VERTEX_LIMIT}")));
        }
        if g.vertex_count() > cap {
            return Err(Error::OracleCap { vertices: g.vertex_count(), cap });
        }
        Ok(Oracle { g, bits: BitGraph::new(g) })
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    /// Whether deleting the edges between consecutive vertices disconnects
    /// the graph.
    pub fn separates(&self, vertices: &[VertexId]) -> bool {
        let mut bits = self.bits.clone();
        for w in vertices.windows(2) {
            bits.remove(w[0], w[1]);
        }
        !bits.connected()
    }

    pub fn is_separating_path(&self, p: &Path) -> bool {
        self.separates(p.vertices())
    }

    /// Shortest simple s→t path that is not separating. Ties go to the path
    /// found first in adjacency-order depth-first search.
    pub fn shortest_nonseparating(&self, s: VertexId, t: VertexId) -> Result<Option<Path>> {
        self.shortest_nonseparating_where(s, t, |_| true)
    }

    /// Like [`Oracle::shortest_nonseparating`], restricted to paths accepted
    /// by `accept`.
    pub fn shortest_nonseparating_where(
        &self,
        s: VertexId,
        t: VertexId,
        accept: impl Fn(&[VertexId]) -> bool,
    ) -> Result<Option<Path>> {
        self.check_terminals(s, t)?;
        let mut search = Search {
            g: self.g,
            bits: self.bits.clone(),
            on_path: vec![false; self.g.vertex_count()],
            stack: vec![s],
            best: None,
        };
        search.on_path[s] = true;
        search.run(t, 0, &accept);
        Ok(search.best.map(|(_, v)| Path::new(self.g, v).expect("search follows edges")))
    }

    /// Existence of any non-separating simple s→t path.
    pub fn has_nonseparating(&self, s: VertexId, t: VertexId) -> Result<bool> {
        Ok(self.shortest_nonseparating(s, t)?.is_some())
    }

    /// All directed separator paths, sorted.
    pub fn separator_paths(&self) -> Vec<SeparatorPath> {
        let n = self.g.vertex_count();
        let mut out = Vec::new();
        let mut bits = self.bits.clone();
        let mut on_path = vec![false; n];
        let mut stack = Vec::new();
        for start in 0..n {
            on_path[start] = true;
            stack.push(start);
            self.grow_separators(&mut bits, &mut on_path, &mut stack, &mut out);
            stack.pop();
            on_path[start] = false;
        }
        out.sort();
        out
    }

    fn grow_separators(
        &self,
        bits: &mut BitGraph,
        on_path: &mut [bool],
        stack: &mut Vec<VertexId>,
        out: &mut Vec<SeparatorPath>,
    ) {
        let u = *stack.last().unwrap();
        for nb in self.g.neighbors(u) {
            let w = nb.vertex;
            if on_path[w] {
                continue;
            }
            bits.remove(u, w);
            stack.push(w);
            if !bits.connected() {
                // every proper contiguous subpath lies in the prefix (not
                // separating, or we would have stopped) or in the suffix
                if !self.separates(&stack[1..]) {
                    let path = Path::new(self.g, stack.clone()).expect("search follows edges");
                    let ids = path.edge_ids(self.g);
                    out.push(SeparatorPath { head: ids[0], tail: ids[ids.len() - 1], path });
                }
            } else {
                on_path[w] = true;
                self.grow_separators(bits, on_path, stack, out);
                on_path[w] = false;
            }
            stack.pop();
            bits.restore(u, w);
        }
    }

    /// All simple s→t paths in depth-first adjacency order.
    pub fn simple_paths(&self, s: VertexId, t: VertexId) -> Vec<Path> {
        enumerate_simple_paths(self.g, s, t, None)
    }

    /// Flags of a separator path for terminals `s`, `t`.
    pub fn classify(&self, s: VertexId, t: VertexId, r: &Path) -> Flags {
        let traversable = self.simple_paths(s, t).iter().any(|p| p.contains_subpath(r));
        flags_from(self.g, r, traversable)
    }

    /// Flags for many separator paths sharing one s→t path enumeration.
    pub fn classify_all(&self, s: VertexId, t: VertexId, rs: &[SeparatorPath]) -> Vec<Flags> {
        let paths = self.simple_paths(s, t);
        rs.iter()
            .map(|r| {
                let traversable = paths.iter().any(|p| p.contains_subpath(&r.path));
                flags_from(self.g, &r.path, traversable)
            })
            .collect()
    }

    /// Middle vertices of traversable two-edge separator paths.
    pub fn bad_vertices(&self, s: VertexId, t: VertexId) -> Vec<VertexId> {
        let short: Vec<SeparatorPath> =
            self.separator_paths().into_iter().filter(|r| r.edge_count() == 2).collect();
        let flags = self.classify_all(s, t, &short);
        let mut bad: Vec<VertexId> = short
            .iter()
            .zip(flags)
            .filter(|(_, f)| f.traversable)
            .map(|(r, _)| r.path.get(1))
            .collect();
        bad.sort_unstable();
        bad.dedup();
        bad
    }

    fn check_terminals(&self, s: VertexId, t: VertexId) -> Result<()> {
        self.g.check_vertex(s)?;
        self.g.check_vertex(t)?;
        if s == t {
            return Err(Error::SameTerminals(s));
        }
        Ok(())
    }
}

fn flags_from(g: &Graph, r: &Path, traversable: bool) -> Flags {
    let useful = is_useful(g, r.vertices());
    Flags { useful, traversable, normal: useful && traversable && r.edge_count() > 2 }
}

/// Every two-step detour `r_i, r_{i+1}, r_{i+2}` is strictly shorter than a
/// direct edge `r_i r_{i+2}` (a missing edge counts as infinitely long).
pub fn is_useful(g: &Graph, r: &[VertexId]) -> bool {
    r.windows(3).all(|w| {
        let detour = g.length_between(w[0], w[1]).unwrap() + g.length_between(w[1], w[2]).unwrap();
        g.length_between(w[0], w[2]).is_none_or(|direct| detour < direct)
    })
}

struct Search<'g> {
    g: &'g Graph,
    bits: BitGraph,
    on_path: Vec<bool>,
    stack: Vec<VertexId>,
    best: Option<(Length, Vec<VertexId>)>,
}

impl Search<'_> {
    fn run(&mut self, t: VertexId, length: Length, accept: &impl Fn(&[VertexId]) -> bool) {
        let u = *self.stack.last().unwrap();
        if u == t {
            if accept(&self.stack) && self.best.as_ref().is_none_or(|(b, _)| length < *b) {
                self.best = Some((length, self.stack.clone()));
            }
            return;
        }
        for nb in self.g.neighbors(u) {
            let w = nb.vertex;
            let next = length + nb.length;
            if self.on_path[w] || self.best.as_ref().is_some_and(|(b, _)| next >= *b) {
                continue;
            }
            self.bits.remove(u, w);
            // removing more edges never reconnects, so prune separated prefixes
            if self.bits.connected() {
                self.on_path[w] = true;
                self.stack.push(w);
                self.run(t, next, accept);
                self.stack.pop();
                self.on_path[w] = false;
            }
            self.bits.restore(u, w);
        }
    }
}

/// All simple s→t paths in depth-first adjacency order, optionally limited
/// to paths with at most `max_vertices` vertices.
pub fn enumerate_simple_paths(g: &Graph, s: VertexId, t: VertexId, max_vertices: Option<usize>) -> Vec<Path> {
    fn walk(
        g: &Graph,
        t: VertexId,
        limit: usize,
        on_path: &mut [bool],
        stack: &mut Vec<VertexId>,
        out: &mut Vec<Path>,
    ) {
        let u = *stack.last().unwrap();
        if u == t {
            out.push(Path::new(g, stack.clone()).expect("walk follows edges"));
            return;
        }
        if stack.len() == limit {
            return;
        }
        for nb in g.neighbors(u) {
            if !on_path[nb.vertex] {
                on_path[nb.vertex] = true;
                stack.push(nb.vertex);
                walk(g, t, limit, on_path, stack, out);
                stack.pop();
                on_path[nb.vertex] = false;
            }
        }
    }
    let mut out = Vec::new();
    if s == t {
        return out;
    }
    let mut on_path = vec![false; g.vertex_count()];
    on_path[s] = true;
    let mut stack = vec![s];
    walk(g, t, max_vertices.unwrap_or(usize::MAX), &mut on_path, &mut stack, &mut out);
    out
}

/// Whether deleting the edges of `p` disconnects `g`.
pub fn is_separating_path(g: &Graph, p: &Path) -> bool {
    let mut active = vec![true; g.edge_count()];
    for e in p.edge_ids(g) {
        active[e] = false;
    }
    let labels = crate::connectivity::component_labels(g, Some(&active));
    labels.iter().any(|&c| c != 0)
}

pub fn enumerate_separator_paths(g: &Graph) -> Result<Vec<SeparatorPath>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(Oracle::new(g)?.separator_paths())
}

pub fn classify(g: &Graph, s: VertexId, t: VertexId, r: &Path) -> Result<Flags> {
    Ok(Oracle::new(g)?.classify(s, t, r))
}

pub fn brute_shortest_nonseparating(g: &Graph, s: VertexId, t: VertexId) -> Result<Option<Path>> {
    Oracle::new(g)?.shortest_nonseparating(s, t)
}

/// A u–v path that shares no edge with `p`.
pub fn weakly_connected(g: &Graph, p: &Path, u: VertexId, v: VertexId) -> bool {
    connected_avoiding(g, p, u, v, false)
}

/// A u–v path that shares no edge with `p` and whose inner vertices are
/// not on `p`.
pub fn strongly_connected(g: &Graph, p: &Path, u: VertexId, v: VertexId) -> bool {
    connected_avoiding(g, p, u, v, true)
}

fn connected_avoiding(g: &Graph, p: &Path, u: VertexId, v: VertexId, avoid_vertices: bool) -> bool {
    if u == v {
        return true;
    }
    let mut blocked_edge = vec![false; g.edge_count()];
    for e in p.edge_ids(g) {
        blocked_edge[e] = true;
    }
    let mut on_p = vec![false; g.vertex_count()];
    if avoid_vertices {
        for &x in p.vertices() {
            on_p[x] = true;
        }
    }
    let mut seen = vec![false; g.vertex_count()];
    seen[u] = true;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        for nb in g.neighbors(x) {
            if blocked_edge[nb.edge] || seen[nb.vertex] {
                continue;
            }
            if nb.vertex == v {
                return true;
            }
            seen[nb.vertex] = true;
            if !on_p[nb.vertex] {
                queue.push_back(nb.vertex);
            }
        }
    }
    false
}

/// Shortest simple s→t path that avoids the `forbidden` vertices and does
/// not contain any of `avoid` as a contiguous subpath in the same direction.
/// Separation is not considered.
pub fn brute_shortest_avoiding(
    g: &Graph,
    s: VertexId,
    t: VertexId,
    forbidden: &[VertexId],
    avoid: &[Path],
) -> Option<Path> {
    enumerate_simple_paths(g, s, t, None)
        .into_iter()
        .filter(|p| {
            !p.vertices().iter().any(|v| forbidden.contains(v)) && !avoid.iter().any(|r| p.contains_subpath(r))
        })
        .min_by_key(|p| p.length())
}
