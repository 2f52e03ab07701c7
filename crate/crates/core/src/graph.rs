//! Immutable weighted undirected graphs and paths over them.
//!
//! Adjacency lists keep the insertion order of the edge list. Every derived
//! graph in the crate is built by filtering edges in that order, so the
//! relative order of two edges at a vertex never changes between the input
//! graph and any subgraph or auxiliary graph built from it.

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;
pub type Length = u64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub length: Length,
}

impl Edge {
    /// The endpoint that is not `x`. `x` must be an endpoint.
    #[inline]
    pub fn other(&self, x: VertexId) -> VertexId {
        debug_assert!(x == self.u || x == self.v);
        self.u ^ self.v ^ x
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Neighbor {
    pub vertex: VertexId,
    pub edge: EdgeId,
    pub length: Length,
}

/// Adjacency entry as stored: 32-bit ids keep the hot arrays small enough
/// to stay in cache on large graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Packed {
    vertex: u32,
    edge: u32,
    length: Length,
}

impl Packed {
    #[inline]
    fn unpack(self) -> Neighbor {
        Neighbor { vertex: self.vertex as VertexId, edge: self.edge as EdgeId, length: self.length }
    }
}

/// Iterator over the neighbors of one vertex, in edge id order.
#[derive(Debug, Clone)]
pub struct Neighbors<'g>(std::slice::Iter<'g, Packed>);

impl Iterator for Neighbors<'_> {
    type Item = Neighbor;

    #[inline]
    fn next(&mut self) -> Option<Neighbor> {
        self.0.next().map(|p| p.unpack())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.0.size_hint()
    }
}

impl DoubleEndedIterator for Neighbors<'_> {
    fn next_back(&mut self) -> Option<Neighbor> {
        self.0.next_back().map(|p| p.unpack())
    }
}

impl ExactSizeIterator for Neighbors<'_> {}

/// Bound on vertex and adjacency-entry counts. Ids are stored in 32 bits,
/// and the auxiliary graph doubles the vertex count.
pub const MAX_ELEMENTS: usize = i32::MAX as usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    edges: Vec<Edge>,
    // CSR: the neighbors of v are adjacency[offsets[v]..offsets[v + 1]],
    // in edge id order
    offsets: Vec<u32>,
    adjacency: Vec<Packed>,
    // same ranges, sorted by neighbor, for edge lookups
    lookup: Vec<(u32, u32)>,
}

impl Graph {
    /// Builds a simple graph on `n` vertices. Edge ids follow list position.
    pub fn new(n: usize, edge_list: &[(VertexId, VertexId, Length)]) -> Result<Self> {
        if n >= MAX_ELEMENTS || 2 * edge_list.len() >= MAX_ELEMENTS {
            return Err(Error::Config(format!("graph with {n} vertices and {} edges is too large", edge_list.len())));
        }
        let mut edges = Vec::with_capacity(edge_list.len());
        let mut degree = vec![0usize; n + 1];
        let mut total: u128 = 0;
        for &(u, v, length) in edge_list {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, count: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if length == 0 {
                return Err(Error::NonPositiveLength(u, v));
            }
            total += u128::from(length);
            edges.push(Edge { u, v, length });
            degree[u + 1] += 1;
            degree[v + 1] += 1;
        }
        if total > u128::from(u64::MAX) {
            return Err(Error::LengthOverflow);
        }
        let mut offsets = degree;
        for v in 0..n {
            offsets[v + 1] += offsets[v];
        }
        let mut fill = offsets.clone();
        let placeholder = Packed { vertex: 0, edge: 0, length: 0 };
        let mut adjacency = vec![placeholder; 2 * edges.len()];
        for (id, e) in edges.iter().enumerate() {
            adjacency[fill[e.u]] = Packed { vertex: e.v as u32, edge: id as u32, length: e.length };
            fill[e.u] += 1;
            adjacency[fill[e.v]] = Packed { vertex: e.u as u32, edge: id as u32, length: e.length };
            fill[e.v] += 1;
        }
        let mut lookup: Vec<(u32, u32)> = adjacency.iter().map(|nb| (nb.vertex, nb.edge)).collect();
        for u in 0..n {
            let list = &mut lookup[offsets[u]..offsets[u + 1]];
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0].0 == w[1].0) {
                return Err(Error::ParallelEdge(u, w[0].0 as VertexId));
            }
        }
        let offsets = offsets.into_iter().map(|o| o as u32).collect();
        Ok(Graph { edges, offsets, adjacency, lookup })
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Edge {
        self.edges[id]
    }

    #[inline]
    fn range(&self, v: VertexId) -> std::ops::Range<usize> {
        self.offsets[v] as usize..self.offsets[v + 1] as usize
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> Neighbors<'_> {
        Neighbors(self.adjacency[self.range(v)].iter())
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.range(v).len()
    }

    /// Id of the edge joining `u` and `v`, found by binary search.
    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        if u >= self.vertex_count() {
            return None;
        }
        let list = &self.lookup[self.range(u)];
        let v = u32::try_from(v).ok()?;
        list.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| list[i].1 as EdgeId)
    }

    pub fn are_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_between(u, v).is_some()
    }

    pub fn length_between(&self, u: VertexId, v: VertexId) -> Option<Length> {
        self.edge_between(u, v).map(|e| self.edges[e].length)
    }

    /// Edge list in the `(u, v, length)` form accepted by [`Graph::new`].
    pub fn edge_triples(&self) -> Vec<(VertexId, VertexId, Length)> {
        self.edges.iter().map(|e| (e.u, e.v, e.length)).collect()
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, count: self.vertex_count() })
        }
    }

    /// Subgraph induced by the vertices with `keep[v]`, restricted to edges
    /// with `keep_edge[e]` when given. Vertices are renumbered in increasing
    /// order of their old ids; the returned vector maps new ids to old ones.
    pub fn induced(&self, keep: &[bool], keep_edge: Option<&[bool]>) -> (Graph, Vec<VertexId>) {
        let mut new_id = vec![usize::MAX; self.vertex_count()];
        let mut old_id = Vec::new();
        for v in 0..self.vertex_count() {
            if keep[v] {
                new_id[v] = old_id.len();
                old_id.push(v);
            }
        }
        let edge_list: Vec<_> = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(e, edge)| {
                keep[edge.u] && keep[edge.v] && keep_edge.is_none_or(|k| k[e])
            })
            .map(|(_, edge)| (new_id[edge.u], new_id[edge.v], edge.length))
            .collect();
        let g = Graph::new(old_id.len(), &edge_list).expect("subgraph of a valid graph");
        (g, old_id)
    }

    /// Whether every vertex can reach every other one.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for nb in self.neighbors(u) {
                if !seen[nb.vertex] {
                    seen[nb.vertex] = true;
                    count += 1;
                    stack.push(nb.vertex);
                }
            }
        }
        count == n
    }
}

/// A walk through a graph given by its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    vertices: Vec<VertexId>,
    length: Length,
}

impl Path {
    /// Validates adjacency of consecutive vertices and caches the length.
    pub fn new(g: &Graph, vertices: Vec<VertexId>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyPath);
        }
        for &v in &vertices {
            g.check_vertex(v)?;
        }
        let mut length: Length = 0;
        for w in vertices.windows(2) {
            let l = g.length_between(w[0], w[1]).ok_or(Error::NotAdjacent(w[0], w[1]))?;
            length += l;
        }
        Ok(Path { vertices, length })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<VertexId> {
        self.vertices
    }

    pub fn length(&self) -> Length {
        self.length
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn first(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn last(&self) -> VertexId {
        self.vertices[self.vertices.len() - 1]
    }

    pub fn get(&self, i: usize) -> VertexId {
        self.vertices[i]
    }

    /// Position of `v` on the path, scanning from the start.
    pub fn index_of(&self, v: VertexId) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn inner_vertices(&self) -> &[VertexId] {
        if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }

    /// The subpath from index `i` to index `j`, both inclusive.
    pub fn subpath(&self, g: &Graph, i: usize, j: usize) -> Path {
        assert!(i <= j && j < self.vertices.len(), "bad subpath range {i}..={j}");
        Path::new(g, self.vertices[i..=j].to_vec()).expect("subpath of a valid path")
    }

    pub fn reversed(&self) -> Path {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Path { vertices, length: self.length }
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = self.vertices.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// Edge ids in path order.
    pub fn edge_ids(&self, g: &Graph) -> Vec<EdgeId> {
        self.vertices
            .windows(2)
            .map(|w| g.edge_between(w[0], w[1]).expect("consecutive path vertices are adjacent"))
            .collect()
    }

    /// Whether `other` occurs as a contiguous subsequence of this path, in
    /// the same direction.
    pub fn contains_subpath(&self, other: &Path) -> bool {
        contains_run(&self.vertices, &other.vertices)
    }
}

pub(crate) fn contains_run(haystack: &[VertexId], needle: &[VertexId]) -> bool {
    needle.len() <= haystack.len() && haystack.windows(needle.len()).any(|w| w == needle)
}
