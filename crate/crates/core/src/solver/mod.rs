//! Shortest non-separating s–t path on a connected chordal graph.
//!
//! Pipeline, all on the bridge-free region H of s:
//!
//! 1. bad vertices (middles of traversable two-edge separator paths);
//! 2. P, the shortest s→t path avoiding them;
//! 3. X_ST, the separator paths hugging P from the s side or the t side;
//! 4. G₀ = H without bad vertices, S-side tails and T-side heads, and P₀,
//!    its shortest s→t path;
//! 5. X_EXTRA, the normal separator paths contained in P₀;
//! 6. the shortest path avoiding X = X_ST ∪ X_EXTRA and every bad vertex.

pub mod aux;
pub mod bad;
pub mod extra;
pub mod lr;
pub mod st_separators;

use std::time::Instant;

use crate::decision::{prune_to_bridge_free_region, validate};
use crate::dijkstra::shortest_path_tree;
use crate::error::{Error, Result};
use crate::graph::{Graph, Path, VertexId};

pub use aux::{avoid, build_auxiliary, AuxGraph};
pub use bad::{compute_bad_vertices, shortest_path_avoiding_bad};
pub use extra::separator_paths_on_path;
pub use lr::{compute_lr, LrOracle, LrTable, XIndex};
pub use st_separators::{build_g0, candidate_check, compute_st_separators, PathIndex, SubgraphMask};

/// A member of X.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separator {
    pub path: Path,
    pub s_side: bool,
    pub t_side: bool,
    /// Found on P₀ rather than along P.
    pub extra: bool,
    /// Smallest and largest P-index among inner vertices on P.
    pub p_interval: Option<(usize, usize)>,
}

impl Separator {
    fn map(&self, g: &Graph, to_old: &[VertexId]) -> Separator {
        let vertices = self.path.vertices().iter().map(|&v| to_old[v]).collect();
        Separator { path: Path::new(g, vertices).expect("mapped separator"), ..self.clone() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuxStats {
    pub nodes: usize,
    pub arcs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageTiming {
    pub stage: &'static str,
    pub micros: u64,
}

/// Result of [`solve_detailed`] with every intermediate artifact. All
/// vertex ids refer to the input graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SolveReport {
    pub path: Option<Path>,
    pub region_vertices: usize,
    pub region_edges: usize,
    pub bad_vertices: Vec<VertexId>,
    pub p: Option<Path>,
    pub x_st: Vec<Separator>,
    pub p0: Option<Path>,
    pub x_extra: Vec<Separator>,
    pub x: Vec<Separator>,
    pub aux: Option<AuxStats>,
    pub timings: Vec<StageTiming>,
}

struct Clock {
    last: Instant,
    timings: Vec<StageTiming>,
}

impl Clock {
    fn new() -> Self {
        Clock { last: Instant::now(), timings: Vec::new() }
    }

    fn lap(&mut self, stage: &'static str) {
        let now = Instant::now();
        let micros = now.duration_since(self.last).as_micros() as u64;
        self.timings.push(StageTiming { stage, micros });
        self.last = now;
    }
}

pub fn solve(g: &Graph, s: VertexId, t: VertexId) -> Result<Option<Path>> {
    Ok(solve_detailed(g, s, t)?.path)
}

pub fn solve_detailed(g: &Graph, s: VertexId, t: VertexId) -> Result<SolveReport> {
    let mut clock = Clock::new();
    validate(g, s, t)?;
    clock.lap("validate");
    let pruned = prune_to_bridge_free_region(g, s)?;
    clock.lap("prune");
    let mut report = SolveReport {
        region_vertices: pruned.graph.vertex_count(),
        region_edges: pruned.graph.edge_count(),
        ..SolveReport::default()
    };
    let Some(t_h) = pruned.to_new[t] else {
        report.timings = clock.timings;
        return Ok(report);
    };
    let s_h = pruned.to_new[s].expect("s is kept");
    let h = &pruned.graph;
    let to_old = &pruned.to_old;
    let old_path = |p: &Path| pruned.map_path_to_old(g, p);

    let bad = compute_bad_vertices(h, s_h, t_h)?;
    report.bad_vertices = bad.iter().map(|&v| to_old[v]).collect();
    report.bad_vertices.sort_unstable();
    clock.lap("bad_vertices");
    if bad.contains(&s_h) || bad.contains(&t_h) {
        return Err(Error::Internal("a terminal is bad although t is reachable without bridges".into()));
    }

    let p = shortest_path_avoiding_bad(h, &bad, s_h, t_h)?
        .ok_or_else(|| Error::Internal("every s-t path in the bridge-free region visits a bad vertex".into()))?;
    report.p = Some(old_path(&p));
    clock.lap("p");

    let x_st = compute_st_separators(h, &p, &bad)?;
    report.x_st = x_st.iter().map(|r| r.map(g, to_old)).collect();
    clock.lap("x_st");

    let g0 = build_g0(h, &bad, &x_st);
    let p0 = shortest_path_tree(&g0.view(h), s_h, Some(t_h))
        .path_to(h, t_h)
        .ok_or_else(|| Error::Internal("t is unreachable in G0".into()))?;
    report.p0 = Some(old_path(&p0));
    clock.lap("p0");

    let x_extra: Vec<Separator> = separator_paths_on_path(h, &p0)
        .into_iter()
        .map(|path| Separator { path, s_side: false, t_side: false, extra: true, p_interval: None })
        .collect();
    report.x_extra = x_extra.iter().map(|r| r.map(g, to_old)).collect();
    clock.lap("x_extra");

    let mut x: Vec<Separator> = x_st;
    for r in x_extra {
        if !x.iter().any(|q| q.path.vertices() == r.path.vertices()) {
            x.push(r);
        }
    }
    report.x = x.iter().map(|r| r.map(g, to_old)).collect();

    let mut is_bad = vec![false; h.vertex_count()];
    for &v in &bad {
        is_bad[v] = true;
    }
    let paths: Vec<Path> = x.iter().map(|r| r.path.clone()).collect();
    let index = XIndex::new(h, &paths)?;
    let lr = LrOracle::new(h, &index);
    let aux_graph = build_auxiliary(h, &is_bad, &index, &lr)?;
    report.aux = Some(AuxStats { nodes: aux_graph.node_count(), arcs: aux_graph.arc_count() });
    clock.lap("aux");

    let found = aux::shortest_aux_path(h, &aux_graph, s_h, t_h)?
        .ok_or_else(|| Error::Internal("no path avoids X although one must exist".into()))?;
    report.path = Some(old_path(&found));
    clock.lap("avoid");
    report.timings = clock.timings;
    Ok(report)
}
