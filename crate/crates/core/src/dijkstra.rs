//! Deterministic Dijkstra.
//!
//! The queue is ordered by `(distance, node id)`, arcs are relaxed in stored
//! order and a relaxation only replaces a parent on a strict improvement.
//! For a fixed graph this always produces the same tree, and among several
//! equally short paths to a node it keeps preferring the same one.
//!
//! Arc lengths are positive, so popped keys only grow and a radix heap can
//! replace the binary heap; it pops in the same `(distance, id)` order
//! while touching memory mostly sequentially.

use crate::error::{Error, Result};
use crate::graph::{Graph, Length, Path, VertexId};

pub const UNREACHABLE: Length = Length::MAX;

/// Something Dijkstra can run on: nodes `0..node_count()` with ordered,
/// weighted out-arcs.
pub trait Network {
    fn node_count(&self) -> usize;
    fn for_each_arc(&self, u: usize, f: impl FnMut(usize, Length));
}

impl Network for Graph {
    fn node_count(&self) -> usize {
        self.vertex_count()
    }

    fn for_each_arc(&self, u: usize, mut f: impl FnMut(usize, Length)) {
        for nb in self.neighbors(u) {
            f(nb.vertex, nb.length);
        }
    }
}

/// A graph with some vertices and edges hidden.
#[derive(Debug, Clone, Copy)]
pub struct Masked<'a> {
    pub graph: &'a Graph,
    pub vertex_ok: Option<&'a [bool]>,
    pub edge_ok: Option<&'a [bool]>,
}

impl<'a> Masked<'a> {
    pub fn new(graph: &'a Graph) -> Self {
        Masked { graph, vertex_ok: None, edge_ok: None }
    }

    pub fn vertex_allowed(&self, v: VertexId) -> bool {
        self.vertex_ok.is_none_or(|ok| ok[v])
    }
}

impl Network for Masked<'_> {
    fn node_count(&self) -> usize {
        self.graph.vertex_count()
    }

    fn for_each_arc(&self, u: usize, mut f: impl FnMut(usize, Length)) {
        for nb in self.graph.neighbors(u) {
            if self.vertex_allowed(nb.vertex) && self.edge_ok.is_none_or(|ok| ok[nb.edge]) {
                f(nb.vertex, nb.length);
            }
        }
    }
}

const NO_PARENT: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortestPathTree {
    pub source: usize,
    pub dist: Vec<Length>,
    parent: Vec<u32>,
}

impl ShortestPathTree {
    pub fn parent(&self, v: usize) -> Option<usize> {
        let p = self.parent[v];
        (p != NO_PARENT).then_some(p as usize)
    }

    pub fn reachable(&self, v: usize) -> bool {
        self.dist[v] != UNREACHABLE
    }

    pub fn distance(&self, v: usize) -> Option<Length> {
        self.reachable(v).then_some(self.dist[v])
    }

    /// Node sequence from the source to `v`.
    pub fn nodes_to(&self, v: usize) -> Option<Vec<usize>> {
        if !self.reachable(v) {
            return None;
        }
        let mut nodes = vec![v];
        let mut x = v;
        while let Some(p) = self.parent(x) {
            nodes.push(p);
            x = p;
        }
        nodes.reverse();
        Some(nodes)
    }

    /// The tree path to `v` as a [`Path`] of `g`.
    pub fn path_to(&self, g: &Graph, v: VertexId) -> Option<Path> {
        self.nodes_to(v).map(|nodes| Path::new(g, nodes).expect("tree path follows graph edges"))
    }
}

/// Monotone priority queue over `(distance, id)` keys packed into one
/// integer. Bucket `i > 0` holds keys whose highest bit differing from the
/// last popped key is bit `i - 1`.
struct RadixHeap {
    last: u128,
    buckets: Vec<Vec<u128>>,
    len: usize,
}

impl RadixHeap {
    fn new() -> Self {
        RadixHeap { last: 0, buckets: vec![Vec::new(); 129], len: 0 }
    }

    fn key(d: Length, id: usize) -> u128 {
        u128::from(d) << 32 | id as u128
    }

    fn bucket(&self, key: u128) -> usize {
        128 - (key ^ self.last).leading_zeros() as usize
    }

    fn push(&mut self, d: Length, id: usize) {
        let key = Self::key(d, id);
        debug_assert!(key >= self.last, "keys must not decrease");
        let b = self.bucket(key);
        self.buckets[b].push(key);
        self.len += 1;
    }

    fn pop(&mut self) -> Option<(Length, usize)> {
        if self.len == 0 {
            return None;
        }
        if self.buckets[0].is_empty() {
            let i = (1..self.buckets.len()).find(|&i| !self.buckets[i].is_empty()).expect("len > 0");
            let moved = std::mem::take(&mut self.buckets[i]);
            self.last = *moved.iter().min().expect("bucket is non-empty");
            for &key in &moved {
                let b = self.bucket(key);
                self.buckets[b].push(key);
            }
            // hand the allocation back for reuse
            let mut moved = moved;
            moved.clear();
            self.buckets[i] = moved;
        }
        self.len -= 1;
        let key = self.buckets[0].pop().expect("bucket 0 holds the minimum");
        Some(((key >> 32) as Length, (key & 0xFFFF_FFFF) as usize))
    }
}

/// Single-source shortest paths. Stops early once `target` is settled.
pub fn shortest_path_tree<N: Network>(net: &N, source: usize, target: Option<usize>) -> ShortestPathTree {
    let n = net.node_count();
    assert!(n < NO_PARENT as usize, "node ids must fit in 32 bits");
    let mut dist = vec![UNREACHABLE; n];
    let mut parent = vec![NO_PARENT; n];
    let mut done = vec![false; n];
    let mut heap = RadixHeap::new();
    dist[source] = 0;
    heap.push(0, source);
    while let Some((d, u)) = heap.pop() {
        if done[u] {
            continue;
        }
        done[u] = true;
        if Some(u) == target {
            break;
        }
        net.for_each_arc(u, |w, len| {
            let nd = d + len;
            if !done[w] && nd < dist[w] {
                dist[w] = nd;
                parent[w] = u as u32;
                heap.push(nd, w);
            }
        });
    }
    ShortestPathTree { source, dist, parent }
}

/// Shortest paths from `source` in `g` avoiding the `forbidden` vertices.
pub fn dijkstra(g: &Graph, source: VertexId, forbidden: &[VertexId]) -> Result<ShortestPathTree> {
    g.check_vertex(source)?;
    let mut ok = vec![true; g.vertex_count()];
    for &v in forbidden {
        g.check_vertex(v)?;
        ok[v] = false;
    }
    if !ok[source] {
        return Err(Error::ForbiddenSource(source));
    }
    let view = Masked { graph: g, vertex_ok: Some(&ok), edge_ok: None };
    Ok(shortest_path_tree(&view, source, None))
}
