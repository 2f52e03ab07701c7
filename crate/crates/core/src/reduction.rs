//! 3-SAT to non-separating path existence on general graphs.
//!
//! Every variable gets two parallel lanes between consecutive chain vertices
//! b_{i-1} and b_i. Walking the a-lane sets the variable true. Clause
//! vertices hang off lane vertices through fat edges (a degree-2 dummy), so
//! a clause is cut off exactly when the path walks every lane it hangs from.

use crate::error::{Error, Result};
use crate::graph::{Graph, Path, VertexId};

pub const SAT_VARIABLE_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn holds(&self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }
}

pub type Clause = [Literal; 3];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf {
    num_vars: usize,
    clauses: Vec<Clause>,
}

impl Cnf {
    pub fn new(num_vars: usize, clauses: Vec<Clause>) -> Result<Self> {
        for (k, c) in clauses.iter().enumerate() {
            for (a, lit) in c.iter().enumerate() {
                if lit.var >= num_vars {
                    return Err(Error::VariableOutOfRange { clause: k, var: lit.var, num_vars });
                }
                if c[..a].iter().any(|other| other.var == lit.var) {
                    return Err(Error::RepeatedVariable { clause: k, var: lit.var });
                }
            }
        }
        Ok(Cnf { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        assert_eq!(assignment.len(), self.num_vars, "assignment length");
        self.clauses.iter().all(|c| c.iter().any(|l| l.holds(assignment)))
    }

    /// Index of the first clause the assignment falsifies.
    pub fn first_violated(&self, assignment: &[bool]) -> Option<usize> {
        self.clauses.iter().position(|c| !c.iter().any(|l| l.holds(assignment)))
    }
}

/// Truth-table search in counting order (bit i of the counter is variable i).
pub fn brute_sat(cnf: &Cnf) -> Result<Option<Vec<bool>>> {
    let n = cnf.num_vars();
    if n > SAT_VARIABLE_CAP {
        return Err(Error::SatCap { vars: n, cap: SAT_VARIABLE_CAP });
    }
    for mask in 0u32..(1u32 << n) {
        let assignment: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
        if cnf.evaluate(&assignment) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}

/// Gadget vertices of one variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarLanes {
    /// Walked when the variable is true; one vertex per negative occurrence.
    pub a: Vec<VertexId>,
    /// Walked when the variable is false; one vertex per positive occurrence.
    pub a_bar: Vec<VertexId>,
    pub b: VertexId,
    /// Extra vertex forming a triangle with the previous chain vertex and b
    /// when the variable occurs nowhere. Without it the single direct edge
    /// would be a bridge.
    pub bypass: Option<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedInstance {
    pub graph: Graph,
    pub s: VertexId,
    pub t: VertexId,
    pub var_lanes: Vec<VarLanes>,
    pub clause_vertices: Vec<VertexId>,
    /// Sorted.
    pub fat_edge_dummies: Vec<VertexId>,
}

impl ReducedInstance {
    /// Chain vertex before variable i's gadget.
    pub fn chain_start(&self, i: usize) -> VertexId {
        if i == 0 {
            self.s
        } else {
            self.var_lanes[i - 1].b
        }
    }
}

pub fn reduce(cnf: &Cnf) -> Result<ReducedInstance> {
    if cnf.num_vars() == 0 {
        return Err(Error::Config("a formula without variables has no gadget chain".into()));
    }
    let mut next = 0;
    let mut fresh = || {
        next += 1;
        next - 1
    };
    let s = fresh();
    let mut negatives = vec![0usize; cnf.num_vars()];
    let mut positives = vec![0usize; cnf.num_vars()];
    for lit in cnf.clauses().iter().flatten() {
        if lit.positive {
            positives[lit.var] += 1;
        } else {
            negatives[lit.var] += 1;
        }
    }

    let mut edges = Vec::new();
    let mut var_lanes = Vec::with_capacity(cnf.num_vars());
    let mut prev = s;
    for i in 0..cnf.num_vars() {
        let a: Vec<VertexId> = (0..negatives[i]).map(|_| fresh()).collect();
        let a_bar: Vec<VertexId> = (0..positives[i]).map(|_| fresh()).collect();
        let b = fresh();
        for lane in [&a, &a_bar] {
            if lane.is_empty() {
                continue;
            }
            edges.push((prev, lane[0], 1));
            edges.extend(lane.windows(2).map(|w| (w[0], w[1], 1)));
            edges.push((lane[lane.len() - 1], b, 1));
        }
        if a.is_empty() || a_bar.is_empty() {
            edges.push((prev, b, 1));
        }
        let bypass = (a.is_empty() && a_bar.is_empty()).then(|| {
            let y = fresh();
            edges.push((prev, y, 1));
            edges.push((y, b, 1));
            y
        });
        var_lanes.push(VarLanes { a, a_bar, b, bypass });
        prev = b;
    }

    let mut used_neg = vec![0usize; cnf.num_vars()];
    let mut used_pos = vec![0usize; cnf.num_vars()];
    let mut clause_vertices = Vec::with_capacity(cnf.clauses().len());
    let mut fat_edge_dummies = Vec::new();
    for clause in cnf.clauses() {
        let c = fresh();
        clause_vertices.push(c);
        for lit in clause {
            let lanes = &var_lanes[lit.var];
            let anchor = if lit.positive {
                used_pos[lit.var] += 1;
                lanes.a_bar[used_pos[lit.var] - 1]
            } else {
                used_neg[lit.var] += 1;
                lanes.a[used_neg[lit.var] - 1]
            };
            let w = fresh();
            fat_edge_dummies.push(w);
            edges.push((anchor, w, 1));
            edges.push((w, c, 1));
        }
    }
    let t = prev;
    let graph = Graph::new(next, &edges)?;
    Ok(ReducedInstance { graph, s, t, var_lanes, clause_vertices, fat_edge_dummies })
}

/// The lane path of an assignment: a-lane for true, ā-lane for false, the
/// direct edge when the chosen lane is empty.
pub fn assignment_to_path(inst: &ReducedInstance, assignment: &[bool]) -> Result<Path> {
    if assignment.len() != inst.var_lanes.len() {
        return Err(Error::Config(format!(
            "assignment covers {} variables, formula has {}",
            assignment.len(),
            inst.var_lanes.len()
        )));
    }
    let mut vertices = vec![inst.s];
    for (lanes, &value) in inst.var_lanes.iter().zip(assignment) {
        let lane = if value { &lanes.a } else { &lanes.a_bar };
        vertices.extend_from_slice(lane);
        vertices.push(lanes.b);
    }
    Path::new(&inst.graph, vertices)
}

/// Reads the assignment back from a simple S→T path. A crossing over the
/// direct edge means the empty lane was chosen; with both lanes empty the
/// variable is set false.
pub fn path_to_assignment(inst: &ReducedInstance, p: &Path) -> Result<Vec<bool>> {
    if p.first() != inst.s || p.last() != inst.t || !p.is_simple() {
        return Err(Error::NotLanePath("not a simple S-T path".into()));
    }
    let verts = p.vertices();
    let mut pos = 1;
    let mut assignment = Vec::with_capacity(inst.var_lanes.len());
    for (i, lanes) in inst.var_lanes.iter().enumerate() {
        let rest = &verts[pos..];
        let crossed = |lane: &[VertexId]| rest.len() > lane.len() && rest[..lane.len()] == *lane && rest[lane.len()] == lanes.b;
        let value = if !lanes.a.is_empty() && crossed(&lanes.a) {
            pos += lanes.a.len();
            true
        } else if !lanes.a_bar.is_empty() && crossed(&lanes.a_bar) {
            pos += lanes.a_bar.len();
            false
        } else if rest.first() == Some(&lanes.b) && (lanes.a.is_empty() || lanes.a_bar.is_empty()) {
            lanes.a.is_empty() && !lanes.a_bar.is_empty()
        } else if lanes.bypass.is_some() && rest.len() > 1 && rest[0] == lanes.bypass.unwrap() && rest[1] == lanes.b {
            pos += 1;
            false
        } else {
            return Err(Error::NotLanePath(format!("path leaves the gadget of variable {i}")));
        };
        pos += 1;
        assignment.push(value);
    }
    Ok(assignment)
}
