//! Connected components, bridges, biconnected components and block-cut trees.
//!
//! The biconnected decomposition works on multigraphs given as plain edge
//! lists, since the separator search contracts vertices and may create
//! parallel edges.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

pub const NO_BLOCK: usize = usize::MAX;

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct DisjointSet {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSet {
    pub fn new(n: usize) -> Self {
        DisjointSet { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}

/// Component label per vertex, using only edges with `active[e]` (all edges
/// when `active` is `None`). Labels are assigned in order of the smallest
/// vertex of each component.
pub fn component_labels(g: &Graph, active: Option<&[bool]>) -> Vec<usize> {
    let n = g.vertex_count();
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    let mut queue = VecDeque::new();
    for root in 0..n {
        if label[root] != usize::MAX {
            continue;
        }
        label[root] = next;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for nb in g.neighbors(u) {
                if active.is_none_or(|a| a[nb.edge]) && label[nb.vertex] == usize::MAX {
                    label[nb.vertex] = next;
                    queue.push_back(nb.vertex);
                }
            }
        }
        next += 1;
    }
    label
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

/// Biconnected components of a multigraph.
#[derive(Debug, Clone)]
pub struct Biconnected {
    /// Block id of every edge, [`NO_BLOCK`] for masked-out edges.
    pub edge_block: Vec<usize>,
    pub blocks: Vec<Block>,
    pub is_cut: Vec<bool>,
    /// Some block containing each vertex; the only one unless the vertex is
    /// a cut vertex. A vertex without active edges gets a singleton block.
    pub home_block: Vec<usize>,
}

struct Frame {
    vertex: u32,
    parent_edge: u32,
    cursor: u32,
}

const UNSEEN: u32 = u32::MAX;

/// Hopcroft–Tarjan decomposition. Parallel edges are allowed, self-loops
/// are not. Only edges with `active[e]` take part.
pub fn biconnected(n: usize, edges: &[(VertexId, VertexId)], active: Option<&[bool]>) -> Biconnected {
    assert!(n < u32::MAX as usize && edges.len() < u32::MAX as usize, "graph too large");
    let is_active = |e: usize| active.is_none_or(|a| a[e]);
    // CSR adjacency over the active edges
    let mut offsets = vec![0u32; n + 1];
    for (e, &(u, v)) in edges.iter().enumerate() {
        if is_active(e) {
            debug_assert_ne!(u, v, "self-loop in biconnected decomposition");
            offsets[u + 1] += 1;
            offsets[v + 1] += 1;
        }
    }
    for v in 0..n {
        offsets[v + 1] += offsets[v];
    }
    let mut fill = offsets[..n].to_vec();
    let mut adjacency = vec![(0u32, 0u32); offsets[n] as usize];
    for (e, &(u, v)) in edges.iter().enumerate() {
        if is_active(e) {
            adjacency[fill[u] as usize] = (v as u32, e as u32);
            fill[u] += 1;
            adjacency[fill[v] as usize] = (u as u32, e as u32);
            fill[v] += 1;
        }
    }
    drop(fill);
    let neighbors = |v: usize| &adjacency[offsets[v] as usize..offsets[v + 1] as usize];

    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0u32; n];
    let mut is_cut = vec![false; n];
    let mut edge_block = vec![NO_BLOCK; edges.len()];
    let mut blocks: Vec<Block> = Vec::new();
    let mut edge_stack: Vec<u32> = Vec::new();
    let mut stack: Vec<Frame> = Vec::new();
    let mut mark = vec![usize::MAX; n];
    let mut clock = 0u32;

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        if neighbors(root).is_empty() {
            blocks.push(Block { vertices: vec![root], edges: Vec::new() });
            continue;
        }
        let mut root_children = 0;
        stack.push(Frame { vertex: root as u32, parent_edge: UNSEEN, cursor: 0 });
        while let Some(frame) = stack.last_mut() {
            let v = frame.vertex as usize;
            let around = neighbors(v);
            if (frame.cursor as usize) < around.len() {
                let (w, e) = around[frame.cursor as usize];
                frame.cursor += 1;
                if e == frame.parent_edge {
                    continue;
                }
                let w = w as usize;
                if disc[w] == UNSEEN {
                    edge_stack.push(e);
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push(Frame { vertex: w as u32, parent_edge: e, cursor: 0 });
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            let done = stack.pop().expect("frame present");
            let Some(parent) = stack.last() else { break };
            let p = parent.vertex as usize;
            low[p] = low[p].min(low[v]);
            if low[v] >= disc[p] {
                if p != root {
                    is_cut[p] = true;
                }
                let id = blocks.len();
                let mut block = Block { vertices: Vec::new(), edges: Vec::new() };
                loop {
                    let e = edge_stack.pop().expect("edge stack underflow");
                    edge_block[e as usize] = id;
                    block.edges.push(e as usize);
                    let (a, b) = edges[e as usize];
                    for x in [a, b] {
                        if mark[x] != id {
                            mark[x] = id;
                            block.vertices.push(x);
                        }
                    }
                    if e == done.parent_edge {
                        break;
                    }
                }
                block.edges.reverse();
                block.vertices.sort_unstable();
                blocks.push(block);
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }

    let mut home_block = vec![NO_BLOCK; n];
    for (id, block) in blocks.iter().enumerate() {
        for &v in &block.vertices {
            home_block[v] = id;
        }
    }
    Biconnected { edge_block, blocks, is_cut, home_block }
}

/// Edges whose removal disconnects their component, in increasing id order.
pub fn bridges(g: &Graph) -> Vec<EdgeId> {
    let edges: Vec<_> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    let bc = biconnected(g.vertex_count(), &edges, None);
    let mut out: Vec<EdgeId> = bc
        .blocks
        .iter()
        .filter(|b| b.edges.len() == 1)
        .map(|b| b.edges[0])
        .collect();
    out.sort_unstable();
    out
}

/// Bipartite tree of blocks and cut vertices of a connected graph.
///
/// Tree nodes `0..blocks.len()` are blocks; node `blocks.len() + k` is the
/// `k`-th cut vertex in increasing vertex order.
#[derive(Debug, Clone)]
pub struct BlockCutTree {
    pub decomposition: Biconnected,
    pub cut_vertices: Vec<VertexId>,
    cut_node: Vec<usize>,
    tree: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeNode {
    Block(usize),
    Cut(VertexId),
}

impl BlockCutTree {
    pub fn new(g: &Graph) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let edges: Vec<_> = g.edges().iter().map(|e| (e.u, e.v)).collect();
        let decomposition = biconnected(g.vertex_count(), &edges, None);
        let nb = decomposition.blocks.len();
        let mut cut_node = vec![usize::MAX; g.vertex_count()];
        let mut cut_vertices = Vec::new();
        for v in 0..g.vertex_count() {
            if decomposition.is_cut[v] {
                cut_node[v] = nb + cut_vertices.len();
                cut_vertices.push(v);
            }
        }
        let mut tree = vec![Vec::new(); nb + cut_vertices.len()];
        for (b, block) in decomposition.blocks.iter().enumerate() {
            for &c in block.vertices.iter().filter(|&&v| decomposition.is_cut[v]) {
                tree[cut_node[c]].push(b);
                tree[b].push(cut_node[c]);
            }
        }
        Ok(BlockCutTree { decomposition, cut_vertices, cut_node, tree })
    }

    pub fn block_count(&self) -> usize {
        self.decomposition.blocks.len()
    }

    pub fn blocks(&self) -> &[Block] {
        &self.decomposition.blocks
    }

    pub fn is_cut_vertex(&self, v: VertexId) -> bool {
        self.decomposition.is_cut[v]
    }

    pub fn node_count(&self) -> usize {
        self.tree.len()
    }

    pub fn tree_neighbors(&self, node: usize) -> &[usize] {
        &self.tree[node]
    }

    pub fn node_kind(&self, node: usize) -> TreeNode {
        let nb = self.block_count();
        if node < nb {
            TreeNode::Block(node)
        } else {
            TreeNode::Cut(self.cut_vertices[node - nb])
        }
    }

    /// The cut-vertex node of `v` if it is an articulation vertex, otherwise
    /// the node of the only block containing it.
    pub fn node_of_vertex(&self, v: VertexId) -> usize {
        if self.decomposition.is_cut[v] {
            self.cut_node[v]
        } else {
            self.decomposition.home_block[v]
        }
    }

    /// Tree nodes on the path from `from` to `to`, both included.
    pub fn tree_path(&self, from: usize, to: usize) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.tree.len()];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                break;
            }
            for &y in &self.tree[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let mut path = vec![to];
        let mut x = to;
        while x != from {
            x = parent[x];
            path.push(x);
        }
        path.reverse();
        path
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        let list: Vec<_> = edges.iter().map(|&(u, v)| (u, v, 1)).collect();
        Graph::new(n, &list).unwrap()
    }

    fn brute_bridges(g: &Graph) -> Vec<EdgeId> {
        let base = component_labels(g, None).into_iter().max().map_or(0, |m| m + 1);
        (0..g.edge_count())
            .filter(|&e| {
                let mut active = vec![true; g.edge_count()];
                active[e] = false;
                let parts = component_labels(g, Some(&active)).into_iter().max().unwrap() + 1;
                parts > base
            })
            .collect()
    }

    fn brute_cut_vertices(g: &Graph) -> Vec<VertexId> {
        (0..g.vertex_count())
            .filter(|&v| {
                let keep: Vec<bool> = (0..g.vertex_count()).map(|x| x != v).collect();
                let (h, _) = g.induced(&keep, None);
                h.vertex_count() > 0 && !h.is_connected()
            })
            .collect()
    }

    #[test]
    fn single_edge_is_a_bridge() {
        assert_eq!(bridges(&graph(2, &[(0, 1)])), vec![0]);
    }

    #[test]
    fn triangle_has_no_bridges() {
        assert!(bridges(&graph(3, &[(0, 1), (1, 2), (0, 2)])).is_empty());
    }

    #[test]
    fn joined_triangles_have_one_bridge() {
        let g = graph(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]);
        assert_eq!(brute_bridges(&g), vec![3]);
        assert_eq!(bridges(&g), vec![3]);
    }

    #[test]
    fn triangle_is_one_block() {
        let t = BlockCutTree::new(&graph(3, &[(0, 1), (1, 2), (0, 2)])).unwrap();
        assert_eq!(t.block_count(), 1);
        assert!(t.cut_vertices.is_empty());
    }

    #[test]
    fn path_has_middle_cut_vertex() {
        let t = BlockCutTree::new(&graph(3, &[(0, 1), (1, 2)])).unwrap();
        assert_eq!(t.block_count(), 2);
        assert_eq!(t.cut_vertices, vec![1]);
        let from = t.node_of_vertex(0);
        let to = t.node_of_vertex(2);
        assert_eq!(t.tree_path(from, to).len(), 3);
    }

    #[test]
    fn bowtie_has_two_blocks() {
        let g = graph(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        assert_eq!(brute_cut_vertices(&g), vec![2]);
        let t = BlockCutTree::new(&g).unwrap();
        assert_eq!(t.block_count(), 2);
        assert_eq!(t.cut_vertices, vec![2]);
    }

    #[test]
    fn disconnected_input_is_rejected() {
        assert!(matches!(BlockCutTree::new(&graph(3, &[(0, 1)])), Err(Error::Disconnected)));
    }

    #[test]
    fn parallel_edges_share_a_block() {
        let bc = biconnected(3, &[(0, 1), (0, 1), (1, 2)], None);
        assert_eq!(bc.edge_block[0], bc.edge_block[1]);
        assert_ne!(bc.edge_block[0], bc.edge_block[2]);
        assert!(bc.is_cut[1]);
    }

    #[test]
    fn masked_edges_are_skipped() {
        let bc = biconnected(3, &[(0, 1), (1, 2), (0, 2)], Some(&[true, true, false]));
        assert_eq!(bc.edge_block[2], NO_BLOCK);
        assert_eq!(bc.blocks.len(), 2);
    }

    #[test]
    fn agrees_with_brute_force_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(2..9);
            let mut list = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.35) {
                        list.push((u, v));
                    }
                }
            }
            let g = graph(n, &list);
            assert_eq!(bridges(&g), brute_bridges(&g));
            if g.is_connected() {
                let t = BlockCutTree::new(&g).unwrap();
                assert_eq!(t.cut_vertices, brute_cut_vertices(&g));
                let mut seen = vec![0; g.edge_count()];
                for b in t.blocks() {
                    for &e in &b.edges {
                        seen[e] += 1;
                    }
                }
                assert!(seen.iter().all(|&c| c == 1));
                // a tree: nodes - 1 edges and connected
                let tree_edges: usize =
                    (0..t.node_count()).map(|x| t.tree_neighbors(x).len()).sum::<usize>() / 2;
                assert_eq!(tree_edges + 1, t.node_count());
            }
        }
    }
}
