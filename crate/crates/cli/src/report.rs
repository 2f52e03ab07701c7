//! The JSON record emitted by `solve --json` and `decide --json`.

use nonsep::{solver, Path, SolveReport};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub n: usize,
    pub m: usize,
    pub s: usize,
    pub t: usize,
    pub result: RunResult,
    pub timings: Vec<Timing>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub artifacts: Option<Artifacts>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RunResult {
    Path { vertices: Vec<usize>, length: u64 },
    None,
    Decision { exists: bool, witness: Option<Vec<usize>> },
}

impl RunResult {
    pub fn from_path(p: Option<&Path>) -> Self {
        match p {
            Some(p) => RunResult::Path { vertices: p.vertices().to_vec(), length: p.length() },
            None => RunResult::None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub stage: String,
    pub micros: u64,
}

/// Intermediate solver state, in input vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Artifacts {
    pub region_vertices: usize,
    pub region_edges: usize,
    pub bad_vertices: Vec<usize>,
    pub p: Option<Vec<usize>>,
    pub p0: Option<Vec<usize>>,
    pub x: Vec<Member>,
    pub aux: Option<AuxSizes>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Member {
    pub vertices: Vec<usize>,
    pub s_side: bool,
    pub t_side: bool,
    pub extra: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuxSizes {
    pub nodes: usize,
    pub arcs: usize,
}

impl Artifacts {
    pub fn from_report(r: &SolveReport) -> Self {
        let verts = |p: &Option<Path>| p.as_ref().map(|p| p.vertices().to_vec());
        let member = |x: &solver::Separator| Member {
            vertices: x.path.vertices().to_vec(),
            s_side: x.s_side,
            t_side: x.t_side,
            extra: x.extra,
        };
        Artifacts {
            region_vertices: r.region_vertices,
            region_edges: r.region_edges,
            bad_vertices: r.bad_vertices.clone(),
            p: verts(&r.p),
            p0: verts(&r.p0),
            x: r.x.iter().map(member).collect(),
            aux: r.aux.map(|a| AuxSizes { nodes: a.nodes, arcs: a.arcs }),
        }
    }
}

pub fn timings(r: &SolveReport) -> Vec<Timing> {
    r.timings.iter().map(|t| Timing { stage: t.stage.to_string(), micros: t.micros }).collect()
}
