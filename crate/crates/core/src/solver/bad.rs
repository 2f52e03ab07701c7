//! Bad vertices and the shortest path that avoids them.

use crate::connectivity::{BlockCutTree, TreeNode};
use crate::dijkstra::{shortest_path_tree, Masked};
use crate::error::{Error, Result};
use crate::graph::{Graph, Path, VertexId};

/// Vertices that no non-separating s→t path can visit: inside each block
/// on the block-cut-tree route from s to t, the vertices of degree two in
/// the block other than the block's entry and exit vertices.
///
/// `g` must be connected and bridge-free.
pub fn compute_bad_vertices(g: &Graph, s: VertexId, t: VertexId) -> Result<Vec<VertexId>> {
    let tree = BlockCutTree::new(g)?;
    let route = tree.tree_path(tree.node_of_vertex(s), tree.node_of_vertex(t));
    let cut_at = |k: usize| match tree.node_kind(route[k]) {
        TreeNode::Cut(v) => v,
        TreeNode::Block(_) => unreachable!("block-cut tree alternates"),
    };
    let mut degree = vec![0usize; g.vertex_count()];
    let mut bad = Vec::new();
    for (k, &node) in route.iter().enumerate() {
        let TreeNode::Block(b) = tree.node_kind(node) else { continue };
        let block = &tree.blocks()[b];
        let entry = if k == 0 { s } else { cut_at(k - 1) };
        let exit = if k + 1 == route.len() { t } else { cut_at(k + 1) };
        for &e in &block.edges {
            let edge = g.edge(e);
            degree[edge.u] += 1;
            degree[edge.v] += 1;
        }
        for &v in &block.vertices {
            if degree[v] == 2 && v != entry && v != exit {
                bad.push(v);
            }
        }
        for &v in &block.vertices {
            degree[v] = 0;
        }
    }
    bad.sort_unstable();
    bad.dedup();
    Ok(bad)
}

/// Shortest s→t path in the subgraph induced by the vertices that are not
/// bad. `None` when t cannot be reached.
pub fn shortest_path_avoiding_bad(g: &Graph, bad: &[VertexId], s: VertexId, t: VertexId) -> Result<Option<Path>> {
    let mut ok = vec![true; g.vertex_count()];
    for &v in bad {
        ok[v] = false;
    }
    if !ok[s] || !ok[t] {
        return Err(Error::Internal(format!("terminal is a bad vertex (s={s}, t={t})")));
    }
    let view = Masked { graph: g, vertex_ok: Some(&ok), edge_ok: None };
    Ok(shortest_path_tree(&view, s, Some(t)).path_to(g, t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        let list: Vec<_> = edges.iter().map(|&(u, v)| (u, v, 1)).collect();
        Graph::new(n, &list).unwrap()
    }

    #[test]
    fn triangle() {
        let g = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(compute_bad_vertices(&g, 0, 2).unwrap(), vec![1]);
        let p = shortest_path_avoiding_bad(&g, &[1], 0, 2).unwrap().unwrap();
        assert_eq!((p.vertices(), p.length()), (&[0, 2][..], 1));
    }

    #[test]
    fn k4_has_none() {
        let g = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        for s in 0..4 {
            for t in 0..4 {
                if s != t {
                    assert!(compute_bad_vertices(&g, s, t).unwrap().is_empty());
                }
            }
        }
    }

    #[test]
    fn bowtie() {
        let g = graph(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        assert_eq!(compute_bad_vertices(&g, 0, 4).unwrap(), vec![1, 3]);
        // off-route block contributes nothing
        assert_eq!(compute_bad_vertices(&g, 0, 1).unwrap(), vec![2]);
    }

    #[test]
    fn square_with_chord() {
        let g = Graph::new(4, &[(0, 1, 1), (1, 2, 1), (0, 3, 10), (3, 2, 10), (1, 3, 1)]).unwrap();
        let bad = compute_bad_vertices(&g, 0, 2).unwrap();
        assert!(bad.is_empty());
        let p = shortest_path_avoiding_bad(&g, &bad, 0, 2).unwrap().unwrap();
        assert_eq!(p.vertices(), &[0, 1, 2]);
    }

    #[test]
    fn bad_terminal_is_internal_error() {
        let g = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        assert!(matches!(shortest_path_avoiding_bad(&g, &[0], 0, 2), Err(Error::Internal(_))));
    }
}
