//! The layered directed graph used to find the shortest path that avoids a
//! set X of normal separator paths and all bad vertices.
//!
//! Every non-bad vertex v has a low copy (v, 0); inner vertices of members
//! of X also get a high copy (v, 1), meaning "everything of r up to here has
//! been walked". Node ids are `2 * v + level`.

use crate::dijkstra::{shortest_path_tree, Network};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Length, Path, VertexId};

use super::lr::{LrOracle, XIndex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxGraph {
    exists: Vec<bool>,
    offsets: Vec<usize>,
    targets: Vec<usize>,
    lengths: Vec<Length>,
    /// Original edge behind every arc.
    edges: Vec<EdgeId>,
}

pub const fn aux_node(v: VertexId, level: usize) -> usize {
    2 * v + level
}

impl AuxGraph {
    pub fn node_exists(&self, node: usize) -> bool {
        self.exists[node]
    }

    /// Number of copies that exist.
    pub fn node_count(&self) -> usize {
        self.exists.iter().filter(|&&e| e).count()
    }

    pub fn arc_count(&self) -> usize {
        self.targets.len()
    }

    /// `(target, length, original edge)` of the arcs leaving `node`.
    pub fn arcs(&self, node: usize) -> impl Iterator<Item = (usize, Length, EdgeId)> + '_ {
        let range = self.offsets[node]..self.offsets[node + 1];
        range.map(move |k| (self.targets[k], self.lengths[k], self.edges[k]))
    }

    pub fn has_arc(&self, from: usize, to: usize) -> bool {
        self.arcs(from).any(|(t, _, _)| t == to)
    }
}

impl Network for AuxGraph {
    fn node_count(&self) -> usize {
        self.exists.len()
    }

    fn for_each_arc(&self, u: usize, mut f: impl FnMut(usize, Length)) {
        for k in self.offsets[u]..self.offsets[u + 1] {
            f(self.targets[k], self.lengths[k]);
        }
    }
}

pub fn build_auxiliary(g: &Graph, bad: &[bool], x: &XIndex, lr: &LrOracle) -> Result<AuxGraph> {
    let n = g.vertex_count();
    let high = |v: VertexId| !bad[v] && x.owner_of_inner(v).is_some();
    let mut exists = vec![false; 2 * n];
    for v in 0..n {
        exists[aux_node(v, 0)] = !bad[v];
        exists[aux_node(v, 1)] = high(v);
    }

    let mut offsets = Vec::with_capacity(2 * n + 1);
    let mut arcs: Vec<(usize, Length, EdgeId)> = Vec::new();

    for u in 0..n {
        // arcs out of (u, 0)
        offsets.push(arcs.len());
        if !bad[u] {
            for nb in g.neighbors(u) {
                let v = nb.vertex;
                if bad[v] {
                    continue;
                }
                let v_owner = x.owner_of_inner(v);
                // (r₀, r₁) enters r at the high copy; so does stepping onto
                // r_{|r|-3} from off r
                let enters_high = v_owner.is_some_and(|r| {
                    let p = &x.paths[r];
                    let i = x.inner_pos[v];
                    (i == 1 && p[0] == u) || (i + 3 == p.len() && !x.contains(r, u))
                });
                if enters_high && high(v) {
                    arcs.push((aux_node(v, 1), nb.length, nb.edge));
                }
                let head = v_owner.is_some_and(|r| x.inner_pos[v] == 1 && x.paths[r][0] == u);
                if !head && !l_blocked(x, lr, u, v)? {
                    arcs.push((aux_node(v, 0), nb.length, nb.edge));
                }
            }
        }
        // arcs out of (u, 1)
        offsets.push(arcs.len());
        if high(u) {
            let r = x.owner_of_inner(u).expect("high copy belongs to an inner vertex");
            let p = &x.paths[r];
            let i = x.inner_pos[u];
            for nb in g.neighbors(u) {
                let v = nb.vertex;
                if bad[v] {
                    continue;
                }
                let back_skip = i >= 2 && p[i - 2] == v;
                let back_step = i >= 2 && p[i - 1] == v;
                let tail = i + 2 == p.len() && p[i + 1] == v;
                let r_blocked = !x.contains(r, v) && lr.r_is(r, v, u)?;
                if high(v) && !(tail || back_skip || back_step || r_blocked) {
                    arcs.push((aux_node(v, 1), nb.length, nb.edge));
                }
                let on_x = x.edge_owner[nb.edge] != super::lr::NONE;
                if !(on_x || back_skip || r_blocked || l_blocked(x, lr, u, v)?) {
                    arcs.push((aux_node(v, 0), nb.length, nb.edge));
                }
            }
        }
    }
    offsets.push(arcs.len());
    let targets = arcs.iter().map(|a| a.0).collect();
    let lengths = arcs.iter().map(|a| a.1).collect();
    let edges = arcs.iter().map(|a| a.2).collect();
    Ok(AuxGraph { exists, offsets, targets, lengths, edges })
}

/// Arriving at the low copy of v from u is forbidden when v is inner to
/// some r ∌ u with L(r, u) = v.
fn l_blocked(x: &XIndex, lr: &LrOracle, u: VertexId, v: VertexId) -> Result<bool> {
    match x.owner_of_inner(v) {
        Some(r) if !x.contains(r, u) => lr.l_is(r, u, v),
        _ => Ok(false),
    }
}

/// Shortest s→t path on the auxiliary graph, projected to original
/// vertices.
pub fn shortest_aux_path(g: &Graph, aux: &AuxGraph, s: VertexId, t: VertexId) -> Result<Option<Path>> {
    let source = aux_node(s, 0);
    let target = aux_node(t, 0);
    if !aux.node_exists(source) || !aux.node_exists(target) {
        return Err(Error::Internal(format!("terminal copy missing (s={s}, t={t})")));
    }
    // a walk that stops at t cannot complete a member running past t, so
    // arriving at the high copy is as good as the low one
    let tree = shortest_path_tree(aux, source, None);
    let high = aux_node(t, 1);
    let target = if aux.node_exists(high) && tree.dist[high] < tree.dist[target] { high } else { target };
    let Some(nodes) = tree.nodes_to(target) else { return Ok(None) };
    let vertices: Vec<VertexId> = nodes.iter().map(|&node| node / 2).collect();
    let path = Path::new(g, vertices)?;
    if !path.is_simple() {
        return Err(Error::Internal(format!("projected path {:?} is not simple", path.vertices())));
    }
    Ok(Some(path))
}

/// Shortest s→t path of `g` that visits no bad vertex and contains no
/// member of `x` as a contiguous subpath.
pub fn avoid(g: &Graph, bad: &[VertexId], x: &[Path], s: VertexId, t: VertexId) -> Result<Option<Path>> {
    let mut is_bad = vec![false; g.vertex_count()];
    for &v in bad {
        is_bad[v] = true;
    }
    let index = XIndex::new(g, x)?;
    let lr = LrOracle::new(g, &index);
    let aux = build_auxiliary(g, &is_bad, &index, &lr)?;
    shortest_aux_path(g, &aux, s, t)
}
