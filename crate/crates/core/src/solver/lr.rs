//! Strong connectivity to separator-path vertices, answered with the
//! biconnected blocks of the graph with every edge of every member of X
//! removed.
//!
//! For r in X and a vertex u ∉ r adjacent to the inner vertex rᵢ, the
//! vertices of r strongly r-connected to u are rᵢ and possibly one of
//! rᵢ₋₂, rᵢ₊₂. The lowest of them is L(r, u), the highest R(r, u).

use std::collections::BTreeMap;

use crate::connectivity::{biconnected, Biconnected, NO_BLOCK};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Path, VertexId};

pub const NONE: usize = usize::MAX;

/// Ownership lookups for a set X of separator paths that pairwise share no
/// edge and no inner vertex.
#[derive(Debug, Clone)]
pub struct XIndex {
    pub paths: Vec<Vec<VertexId>>,
    /// Path having the vertex as an inner vertex.
    pub inner_owner: Vec<usize>,
    /// Position of the vertex on its inner owner.
    pub inner_pos: Vec<usize>,
    pub edge_owner: Vec<usize>,
}

impl XIndex {
    /// Fails when two members share an edge or an inner vertex.
    pub fn new(g: &Graph, x: &[Path]) -> Result<Self> {
        let mut inner_owner = vec![NONE; g.vertex_count()];
        let mut inner_pos = vec![NONE; g.vertex_count()];
        let mut edge_owner = vec![NONE; g.edge_count()];
        for (id, r) in x.iter().enumerate() {
            if r.edge_count() < 3 || !r.is_simple() {
                return Err(Error::Internal(format!("X member {:?} is not a simple path with more than two edges", r.vertices())));
            }
            for (i, &v) in r.vertices().iter().enumerate() {
                if i == 0 || i + 1 == r.len() {
                    continue;
                }
                if inner_owner[v] != NONE {
                    return Err(Error::Internal(format!(
                        "X members {:?} and {:?} share inner vertex {v}",
                        x[inner_owner[v]].vertices(),
                        r.vertices()
                    )));
                }
                inner_owner[v] = id;
                inner_pos[v] = i;
            }
            for e in r.edge_ids(g) {
                if edge_owner[e] != NONE {
                    return Err(Error::Internal(format!(
                        "X members {:?} and {:?} share edge {e}",
                        x[edge_owner[e]].vertices(),
                        r.vertices()
                    )));
                }
                edge_owner[e] = id;
            }
        }
        let paths = x.iter().map(|r| r.vertices().to_vec()).collect();
        Ok(XIndex { paths, inner_owner, inner_pos, edge_owner })
    }

    pub fn owner_of_inner(&self, v: VertexId) -> Option<usize> {
        (self.inner_owner[v] != NONE).then_some(self.inner_owner[v])
    }

    pub fn contains(&self, r: usize, v: VertexId) -> bool {
        let p = &self.paths[r];
        self.inner_owner[v] == r || p[0] == v || p[p.len() - 1] == v
    }

    pub fn edge_mask(&self) -> Vec<bool> {
        self.edge_owner.iter().map(|&o| o == NONE).collect()
    }
}

/// L/R queries against the blocks of G′ = G minus all X edges.
pub struct LrOracle<'a> {
    g: &'a Graph,
    x: &'a XIndex,
    blocks: Biconnected,
}

impl<'a> LrOracle<'a> {
    pub fn new(g: &'a Graph, x: &'a XIndex) -> Self {
        let edges: Vec<_> = g.edges().iter().map(|e| (e.u, e.v)).collect();
        let mask = x.edge_mask();
        let blocks = biconnected(g.vertex_count(), &edges, Some(&mask));
        LrOracle { g, x, blocks }
    }

    fn block_of(&self, a: VertexId, b: VertexId) -> Result<usize> {
        let e = self
            .g
            .edge_between(a, b)
            .ok_or_else(|| Error::Internal(format!("expected edge {a}-{b} is missing")))?;
        match self.blocks.edge_block[e] {
            NO_BLOCK => Err(Error::Internal(format!("skip edge {a}-{b} lies on a member of X"))),
            block => Ok(block),
        }
    }

    /// Whether u (adjacent to `r[i]`, not on r) is strongly r-connected to
    /// `r[k]`, where k = i ± 2.
    fn strongly(&self, r: usize, u: VertexId, i: usize, k: usize) -> Result<bool> {
        let path = &self.x.paths[r];
        let (ri, rk) = (path[i], path[k]);
        let e: EdgeId = self.g.edge_between(u, ri).expect("query on an edge");
        let owner = self.x.edge_owner[e];
        if owner == NONE {
            return Ok(self.blocks.edge_block[e] == self.block_of(ri, rk)?);
        }
        // u–rᵢ is the head or tail of another member r′; step to r′₂ (or
        // r′ from the other end), which is adjacent to rᵢ off X
        let other = &self.x.paths[owner];
        let m = other.len();
        let w = if other[0] == ri && other[1] == u {
            other[2]
        } else if other[m - 1] == ri && other[m - 2] == u {
            other[m - 3]
        } else {
            return Err(Error::Internal(format!(
                "edge {u}-{ri} is inside X member {other:?} while {ri} is inner to {path:?}"
            )));
        };
        if self.x.contains(r, w) {
            return Ok(w == rk);
        }
        Ok(self.block_of(ri, w)? == self.block_of(ri, rk)?)
    }

    /// L(r, u) = v for v an inner vertex of r adjacent to u ∉ r.
    pub fn l_is(&self, r: usize, u: VertexId, v: VertexId) -> Result<bool> {
        let i = self.x.inner_pos[v];
        Ok(i < 2 || !self.strongly(r, u, i, i - 2)?)
    }

    /// R(r, v) = u for u an inner vertex of r adjacent to v ∉ r.
    pub fn r_is(&self, r: usize, v: VertexId, u: VertexId) -> Result<bool> {
        let i = self.x.inner_pos[u];
        Ok(i + 2 >= self.x.paths[r].len() || !self.strongly(r, v, i, i + 2)?)
    }
}

/// Materialized L/R values for every (member index, vertex) pair where the
/// vertex is off the member and adjacent to one of its inner vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LrTable {
    pub entries: BTreeMap<(usize, VertexId), (VertexId, VertexId)>,
}

impl LrTable {
    pub fn l(&self, r: usize, u: VertexId) -> Option<VertexId> {
        self.entries.get(&(r, u)).map(|&(l, _)| l)
    }

    pub fn r(&self, r: usize, u: VertexId) -> Option<VertexId> {
        self.entries.get(&(r, u)).map(|&(_, r)| r)
    }
}

pub fn compute_lr(g: &Graph, x: &XIndex) -> Result<LrTable> {
    let oracle = LrOracle::new(g, x);
    let mut span: BTreeMap<(usize, VertexId), (usize, usize)> = BTreeMap::new();
    for (id, path) in x.paths.iter().enumerate() {
        for i in 1..path.len() - 1 {
            for nb in g.neighbors(path[i]) {
                if x.contains(id, nb.vertex) {
                    continue;
                }
                let entry = span.entry((id, nb.vertex)).or_insert((i, i));
                entry.0 = entry.0.min(i);
                entry.1 = entry.1.max(i);
            }
        }
    }
    let mut table = LrTable::default();
    for ((id, u), (lo, hi)) in span {
        let path = &x.paths[id];
        let l = if lo >= 2 && oracle.strongly(id, u, lo, lo - 2)? { path[lo - 2] } else { path[lo] };
        let r = if hi + 2 < path.len() && oracle.strongly(id, u, hi, hi + 2)? { path[hi + 2] } else { path[hi] };
        table.entries.insert((id, u), (l, r));
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shared_inner_vertex_is_rejected() {
        let g = Graph::new(
            5,
            &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (0, 2, 1), (2, 4, 1), (1, 3, 1)],
        )
        .unwrap();
        let a = Path::new(&g, vec![0, 1, 2, 3]).unwrap();
        let b = Path::new(&g, vec![4, 2, 0, 1]).unwrap();
        assert!(matches!(XIndex::new(&g, &[a, b]), Err(Error::Internal(_))));
    }
}
