//! Separator paths that run along the shortest bad-free path P.
//!
//! An S-separator path has everything from its third vertex on lying on P;
//! a T-separator path has everything up to its third-to-last vertex on P.
//! Both visit their shared vertices with P in P's order.
//!
//! To find S-separator paths whose fourth vertex has index parity `q` on
//! P, vertices are contracted so that r₁, r₃, r₅, … land in one fat vertex
//! while r₀, r₂, … stay apart. The edges of r then all touch that fat vertex
//! inside one biconnected block of the contracted multigraph, and every
//! (block, vertex) pair is tested as a candidate edge set. T-separator paths
//! are the S-separator paths of the reversed instance.

use std::collections::BTreeMap;

use crate::connectivity::{biconnected, DisjointSet};
use crate::error::Result;
use crate::graph::{EdgeId, Graph, Path, VertexId};
use crate::oracle::is_useful;

use super::Separator;

pub const OFF_PATH: usize = usize::MAX;

/// Positions on P and the smallest P-index adjacent to each vertex.
#[derive(Debug, Clone)]
pub struct PathIndex {
    pub pos: Vec<usize>,
    pub min_adjacent: Vec<usize>,
}

impl PathIndex {
    pub fn new(g: &Graph, p: &[VertexId]) -> Self {
        let mut pos = vec![OFF_PATH; g.vertex_count()];
        for (i, &v) in p.iter().enumerate() {
            pos[v] = i;
        }
        let min_adjacent = (0..g.vertex_count())
            .map(|u| g.neighbors(u).map(|nb| pos[nb.vertex]).min().unwrap_or(OFF_PATH))
            .collect();
        PathIndex { pos, min_adjacent }
    }

    pub fn on_path(&self, v: VertexId) -> bool {
        self.pos[v] != OFF_PATH
    }

    /// Vertices of `r` that lie on P appear in increasing P order.
    pub fn order_consistent(&self, r: &[VertexId]) -> bool {
        let mut last = None;
        for &v in r {
            if self.on_path(v) {
                if last.is_some_and(|l| self.pos[v] <= l) {
                    return false;
                }
                last = Some(self.pos[v]);
            }
        }
        true
    }

    /// Order-consistent with `r[2..]` on P.
    pub fn s_shaped(&self, r: &[VertexId]) -> bool {
        r.len() >= 3 && r[2..].iter().all(|&v| self.on_path(v)) && self.order_consistent(r)
    }

    /// Order-consistent with `r[..len-2]` on P.
    pub fn t_shaped(&self, r: &[VertexId]) -> bool {
        r.len() >= 3 && r[..r.len() - 2].iter().all(|&v| self.on_path(v)) && self.order_consistent(r)
    }

    /// Traversability of an S-shaped separator path: r₀ is on P, or adjacent
    /// to P, before the position of r₂. Adjacency only counts when r₁ is off
    /// P too; otherwise the P-neighbor before r₂ may be r₁ itself.
    pub fn s_traversable(&self, r: &[VertexId]) -> bool {
        let j = self.pos[r[2]];
        if self.on_path(r[0]) {
            return self.pos[r[0]] < j;
        }
        !self.on_path(r[1]) && self.min_adjacent[r[0]] < j
    }
}

/// Whether the edge set `edges` forms a normal S-separator path with
/// respect to the path indexed by `index`; returns its vertex sequence.
/// Both orientations are tried.
pub fn candidate_check(g: &Graph, edges: &[EdgeId], index: &PathIndex) -> Option<Vec<VertexId>> {
    check_with(g, edges, index, &mut PathScratch::new(g.vertex_count()))
}

fn check_with(g: &Graph, edges: &[EdgeId], index: &PathIndex, scratch: &mut PathScratch) -> Option<Vec<VertexId>> {
    if edges.len() < 3 {
        return None;
    }
    let seq = scratch.edges_as_path(g, edges)?;
    let mut rev = seq.clone();
    rev.reverse();
    [seq, rev]
        .into_iter()
        .find(|r| index.s_shaped(r) && is_useful(g, r) && index.s_traversable(r))
}

/// The vertex sequence of a simple path with exactly these edges, starting
/// from the smaller end vertex.
pub fn edges_as_path(g: &Graph, edges: &[EdgeId]) -> Option<Vec<VertexId>> {
    PathScratch::new(g.vertex_count()).edges_as_path(g, edges)
}

/// Per-vertex incidence slots reused across many small edge sets.
struct PathScratch {
    count: Vec<u8>,
    slots: Vec<[EdgeId; 2]>,
    touched: Vec<VertexId>,
}

impl PathScratch {
    fn new(n: usize) -> Self {
        PathScratch { count: vec![0; n], slots: vec![[0; 2]; n], touched: Vec::new() }
    }

    fn edges_as_path(&mut self, g: &Graph, edges: &[EdgeId]) -> Option<Vec<VertexId>> {
        let result = self.walk(g, edges);
        for &v in &self.touched {
            self.count[v] = 0;
        }
        self.touched.clear();
        result
    }

    fn walk(&mut self, g: &Graph, edges: &[EdgeId]) -> Option<Vec<VertexId>> {
        for &e in edges {
            let edge = g.edge(e);
            for x in [edge.u, edge.v] {
                let c = self.count[x] as usize;
                if c == 0 {
                    self.touched.push(x);
                }
                if c == 2 {
                    return None;
                }
                self.slots[x][c] = e;
                self.count[x] += 1;
            }
        }
        if self.touched.len() != edges.len() + 1 {
            return None;
        }
        let mut ends = self.touched.iter().copied().filter(|&v| self.count[v] == 1);
        let (a, b) = (ends.next()?, ends.next()?);
        let start = a.min(b);
        let mut seq = Vec::with_capacity(edges.len() + 1);
        seq.push(start);
        let mut current = start;
        let mut came_by = usize::MAX;
        for _ in 0..edges.len() {
            let [e0, e1] = self.slots[current];
            let e = if self.count[current] == 1 || e0 != came_by { e0 } else { e1 };
            if e == came_by {
                return None;
            }
            current = g.edge(e).other(current);
            came_by = e;
            seq.push(current);
        }
        // a path plus disjoint cycles has more vertices than edges + 1
        // only when counted; the walk must end at the other end
        (current == a.max(b)).then_some(seq)
    }
}

/// S-separator candidates for the path `p` whose fourth vertex has index
/// parity `parity` on `p`.
fn s_candidates(g: &Graph, p: &[VertexId], index: &PathIndex, parity: usize, out: &mut Vec<Vec<VertexId>>) {
    let n = g.vertex_count();
    let mut sets = DisjointSet::new(n);
    for i in (parity..p.len().saturating_sub(2)).step_by(2) {
        if g.are_adjacent(p[i], p[i + 2]) {
            sets.union(p[i], p[i + 2]);
        }
    }
    for u in 0..n {
        if index.on_path(u) {
            continue;
        }
        let smallest = index.min_adjacent[u];
        for nb in g.neighbors(u) {
            let k = index.pos[nb.vertex];
            if k != OFF_PATH && k != smallest && k % 2 == parity {
                sets.union(u, nb.vertex);
            }
        }
    }
    let mut merged: Vec<(VertexId, VertexId)> = Vec::with_capacity(g.edge_count());
    let mut original: Vec<EdgeId> = Vec::with_capacity(g.edge_count());
    for (e, edge) in g.edges().iter().enumerate() {
        let (a, b) = (sets.find(edge.u), sets.find(edge.v));
        if a != b {
            merged.push((a, b));
            original.push(e);
        }
    }
    let bc = biconnected(n, &merged, None);
    let mut scratch = PathScratch::new(n);
    let mut groups = IncidenceBuckets::new(n);
    let mut edges: Vec<EdgeId> = Vec::new();
    for block in &bc.blocks {
        if block.edges.len() < 3 {
            continue;
        }
        groups.fill(block.edges.iter().map(|&m| (merged[m], original[m])));
        for group in groups.groups() {
            if group.len() < 3 {
                continue;
            }
            edges.clear();
            edges.extend_from_slice(group);
            if let Some(r) = check_with(g, &edges, index, &mut scratch) {
                out.push(r);
            }
        }
    }
}

/// Edges of one block grouped by merged end vertex (a counting sort over
/// the touched vertices only, so each block costs time linear in its size).
struct IncidenceBuckets {
    start: Vec<u32>,
    touched: Vec<VertexId>,
    slots: Vec<EdgeId>,
    bounds: Vec<(usize, usize)>,
}

impl IncidenceBuckets {
    fn new(n: usize) -> Self {
        IncidenceBuckets { start: vec![0; n], touched: Vec::new(), slots: Vec::new(), bounds: Vec::new() }
    }

    fn fill(&mut self, edges: impl Iterator<Item = ((VertexId, VertexId), EdgeId)> + Clone) {
        for &v in &self.touched {
            self.start[v] = 0;
        }
        self.touched.clear();
        for ((a, b), _) in edges.clone() {
            for x in [a, b] {
                if self.start[x] == 0 {
                    self.touched.push(x);
                }
                self.start[x] += 1;
            }
        }
        self.bounds.clear();
        let mut offset = 0;
        for &v in &self.touched {
            let count = self.start[v] as usize;
            self.bounds.push((offset, offset + count));
            self.start[v] = offset as u32 + 1;
            offset += count;
        }
        self.slots.clear();
        self.slots.resize(offset, 0);
        // `start[x] - 1` is the next free slot of x
        for ((a, b), e) in edges {
            for x in [a, b] {
                let at = self.start[x] as usize - 1;
                self.slots[at] = e;
                self.start[x] += 1;
            }
        }
    }

    fn groups(&self) -> impl Iterator<Item = &[EdgeId]> {
        self.bounds.iter().map(|&(lo, hi)| &self.slots[lo..hi])
    }
}

/// All S- and T-separator paths with respect to `p`, each oriented from
/// the s side to the t side and flagged with the sides it satisfies.
/// Candidates through a bad vertex are dropped: no admissible path walks
/// them, and keeping one would cut its tail or head out of G₀ for nothing.
pub fn compute_st_separators(g: &Graph, p: &Path, bad: &[VertexId]) -> Result<Vec<Separator>> {
    let forward = PathIndex::new(g, p.vertices());
    let reversed_p: Vec<VertexId> = p.vertices().iter().rev().copied().collect();
    let backward = PathIndex::new(g, &reversed_p);

    let mut found = Vec::new();
    for parity in 0..2 {
        s_candidates(g, p.vertices(), &forward, parity, &mut found);
    }
    let mut from_t = Vec::new();
    for parity in 0..2 {
        s_candidates(g, &reversed_p, &backward, parity, &mut from_t);
    }
    for mut r in from_t {
        r.reverse();
        found.push(r);
    }

    let mut unique: BTreeMap<Vec<VertexId>, ()> = BTreeMap::new();
    for r in found {
        if r.iter().any(|v| bad.contains(v)) {
            continue;
        }
        unique.insert(r, ());
    }
    let mut out = Vec::with_capacity(unique.len());
    for (r, ()) in unique {
        let s_side = forward.s_shaped(&r);
        let t_side = forward.t_shaped(&r);
        let path = Path::new(g, r)?;
        let interval = inner_interval(&forward, &path);
        out.push(Separator { path, s_side, t_side, extra: false, p_interval: interval });
    }
    Ok(out)
}

/// Range of P-indices of the inner vertices of `r` that lie on P, if any
/// do.
pub fn inner_interval(index: &PathIndex, r: &Path) -> Option<(usize, usize)> {
    let positions: Vec<usize> =
        r.inner_vertices().iter().map(|&v| index.pos[v]).filter(|&k| k != OFF_PATH).collect();
    Some((*positions.iter().min()?, *positions.iter().max()?))
}

/// Whether the P-indices of the inner vertices of `r` on P are exactly the
/// integers of an interval.
pub fn inner_indices_contiguous(index: &PathIndex, r: &Path) -> bool {
    let mut positions: Vec<usize> =
        r.inner_vertices().iter().map(|&v| index.pos[v]).filter(|&k| k != OFF_PATH).collect();
    positions.sort_unstable();
    positions.windows(2).all(|w| w[1] == w[0] + 1)
}

/// Vertex and edge masks describing G₀: no bad vertex, no tail of an
/// S-separator path, no head of a T-separator path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphMask {
    pub vertex_ok: Vec<bool>,
    pub edge_ok: Vec<bool>,
}

impl SubgraphMask {
    pub fn view<'a>(&'a self, g: &'a Graph) -> crate::dijkstra::Masked<'a> {
        crate::dijkstra::Masked { graph: g, vertex_ok: Some(&self.vertex_ok), edge_ok: Some(&self.edge_ok) }
    }

    pub fn removed_edges(&self) -> Vec<EdgeId> {
        (0..self.edge_ok.len()).filter(|&e| !self.edge_ok[e]).collect()
    }
}

pub fn build_g0(g: &Graph, bad: &[VertexId], x_st: &[Separator]) -> SubgraphMask {
    let mut vertex_ok = vec![true; g.vertex_count()];
    for &v in bad {
        vertex_ok[v] = false;
    }
    let mut edge_ok = vec![true; g.edge_count()];
    for r in x_st {
        let v = r.path.vertices();
        if r.s_side {
            edge_ok[g.edge_between(v[v.len() - 2], v[v.len() - 1]).expect("path edge")] = false;
        }
        if r.t_side {
            edge_ok[g.edge_between(v[0], v[1]).expect("path edge")] = false;
        }
    }
    SubgraphMask { vertex_ok, edge_ok }
}
