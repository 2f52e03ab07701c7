//! Existence of a non-separating s–t path on a connected chordal graph.
//!
//! Such a path exists exactly when t can be reached from s without crossing
//! a bridge, and then any path with the fewest edges inside that
//! bridge-free region is non-separating.

use std::collections::VecDeque;

use crate::connectivity::bridges;
use crate::error::{Error, Result};
use crate::graph::{Graph, Path, VertexId};

/// The part of a graph reachable from a vertex without crossing a bridge,
/// renumbered in BFS order from that vertex (which becomes 0) so later
/// passes touch memory roughly in order.
#[derive(Debug, Clone)]
pub struct PrunedGraph {
    pub graph: Graph,
    /// Original id of each vertex of `graph`.
    pub to_old: Vec<VertexId>,
    /// New id of each original vertex, if kept.
    pub to_new: Vec<Option<VertexId>>,
}

impl PrunedGraph {
    pub fn map_path_to_old(&self, g: &Graph, p: &Path) -> Path {
        let vertices = p.vertices().iter().map(|&v| self.to_old[v]).collect();
        Path::new(g, vertices).expect("pruned graph is an induced subgraph")
    }
}

pub fn prune_to_bridge_free_region(g: &Graph, s: VertexId) -> Result<PrunedGraph> {
    g.check_vertex(s)?;
    let mut is_bridge = vec![false; g.edge_count()];
    for e in bridges(g) {
        is_bridge[e] = true;
    }
    let mut to_new = vec![None; g.vertex_count()];
    let mut to_old = vec![s];
    to_new[s] = Some(0);
    let mut head = 0;
    while head < to_old.len() {
        let u = to_old[head];
        head += 1;
        for nb in g.neighbors(u) {
            if !is_bridge[nb.edge] && to_new[nb.vertex].is_none() {
                to_new[nb.vertex] = Some(to_old.len());
                to_old.push(nb.vertex);
            }
        }
    }
    let mut edges = Vec::new();
    for (new, &old) in to_old.iter().enumerate() {
        for nb in g.neighbors(old) {
            if let Some(w) = to_new[nb.vertex].filter(|&w| w > new && !is_bridge[nb.edge]) {
                edges.push((new, w, nb.length));
            }
        }
    }
    let graph = Graph::new(to_old.len(), &edges).expect("subgraph of a valid graph");
    Ok(PrunedGraph { graph, to_old, to_new })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    /// A fewest-edges non-separating s→t path, if any path exists.
    pub witness: Option<Path>,
}

impl Decision {
    pub fn exists(&self) -> bool {
        self.witness.is_some()
    }
}

/// Checks the preconditions shared by [`decide`] and the solver.
pub(crate) fn validate(g: &Graph, s: VertexId, t: VertexId) -> Result<()> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(Error::SameTerminals(s));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !crate::chordal::is_chordal(g) {
        return Err(Error::NotChordal);
    }
    Ok(())
}

pub fn decide(g: &Graph, s: VertexId, t: VertexId) -> Result<Decision> {
    validate(g, s, t)?;
    let pruned = prune_to_bridge_free_region(g, s)?;
    let Some(t_new) = pruned.to_new[t] else {
        return Ok(Decision { witness: None });
    };
    let s_new = pruned.to_new[s].expect("s is kept");
    let h = &pruned.graph;
    let mut parent = vec![usize::MAX; h.vertex_count()];
    parent[s_new] = s_new;
    let mut queue = VecDeque::from([s_new]);
    while let Some(u) = queue.pop_front() {
        if u == t_new {
            break;
        }
        for nb in h.neighbors(u) {
            if parent[nb.vertex] == usize::MAX {
                parent[nb.vertex] = u;
                queue.push_back(nb.vertex);
            }
        }
    }
    let mut vertices = vec![t_new];
    let mut x = t_new;
    while x != s_new {
        x = parent[x];
        vertices.push(x);
    }
    vertices.reverse();
    let path = Path::new(h, vertices)?;
    Ok(Decision { witness: Some(pruned.map_path_to_old(g, &path)) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::is_separating_path;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        let list: Vec<_> = edges.iter().map(|&(u, v)| (u, v, 1)).collect();
        Graph::new(n, &list).unwrap()
    }

    #[test]
    fn triangle_region_is_whole_graph() {
        let p = prune_to_bridge_free_region(&graph(3, &[(0, 1), (1, 2), (0, 2)]), 0).unwrap();
        assert_eq!(p.to_old, vec![0, 1, 2]);
    }

    #[test]
    fn joined_triangles_keep_one_side() {
        let g = graph(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]);
        let p = prune_to_bridge_free_region(&g, 0).unwrap();
        assert_eq!(p.to_old, vec![0, 1, 2]);
        assert_eq!(p.graph.edge_count(), 3);
        assert_eq!(p.to_new[4], None);
    }

    #[test]
    fn single_edge_keeps_source_only() {
        let p = prune_to_bridge_free_region(&graph(2, &[(0, 1)]), 0).unwrap();
        assert_eq!(p.to_old, vec![0]);
    }

    #[test]
    fn decide_examples() {
        assert!(!decide(&graph(2, &[(0, 1)]), 0, 1).unwrap().exists());
        let d = decide(&graph(3, &[(0, 1), (1, 2), (0, 2)]), 0, 2).unwrap();
        assert_eq!(d.witness.unwrap().vertices(), &[0, 2]);
        let bowtie = graph(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        let w = decide(&bowtie, 0, 4).unwrap().witness.unwrap();
        assert_eq!(w.vertices(), &[0, 2, 4]);
        assert!(!is_separating_path(&bowtie, &w));
    }

    #[test]
    fn rejects_invalid_input() {
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(decide(&c4, 0, 2), Err(Error::NotChordal));
        assert_eq!(decide(&graph(3, &[(0, 1)]), 0, 1), Err(Error::Disconnected));
        assert_eq!(decide(&graph(2, &[(0, 1)]), 1, 1), Err(Error::SameTerminals(1)));
    }
}
