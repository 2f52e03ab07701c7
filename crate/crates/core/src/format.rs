//! Text formats: the graph instance format and DIMACS CNF.
//!
//! Graph instances look like
//!
//! ```text
//! p nsp 3 3
//! s 0
//! t 2
//! e 0 1 1
//! e 1 2 1
//! e 0 2 1
//! ```
//!
//! with 0-based vertex ids. Blank lines and lines starting with `#` are
//! ignored. The terminal lines are optional so that plain graphs can be
//! stored in the same format.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Length, VertexId};
use crate::reduction::{Cnf, Literal};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub s: Option<VertexId>,
    pub t: Option<VertexId>,
}

impl Instance {
    /// Both terminals, or a configuration error naming the missing one.
    pub fn terminals(&self) -> Result<(VertexId, VertexId)> {
        let s = self.s.ok_or_else(|| Error::Config("instance has no `s` line".into()))?;
        let t = self.t.ok_or_else(|| Error::Config("instance has no `t` line".into()))?;
        if s == t {
            return Err(Error::SameTerminals(s));
        }
        Ok((s, t))
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        (!line.is_empty() && !line.starts_with('#') && !line.starts_with('c'))
            .then(|| (i + 1, line.split_whitespace().collect()))
    })
}

fn number<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Result<T> {
    token.parse().map_err(|_| Error::parse(line, format!("invalid {what} `{token}`")))
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut header: Option<(usize, usize)> = None;
    let mut s = None;
    let mut t = None;
    let mut edges: Vec<(VertexId, VertexId, Length)> = Vec::new();
    let mut last_line = 0;
    for (line, tokens) in content_lines(text) {
        last_line = line;
        match tokens[0] {
            "p" => {
                if header.is_some() {
                    return Err(Error::parse(line, "duplicate `p` line"));
                }
                if tokens.len() != 4 || tokens[1] != "nsp" {
                    return Err(Error::parse(line, "expected `p nsp <n> <m>`"));
                }
                header = Some((number(line, tokens[2], "vertex count")?, number(line, tokens[3], "edge count")?));
            }
            "s" | "t" => {
                let Some((n, _)) = header else {
                    return Err(Error::parse(line, "terminal before `p` line"));
                };
                if tokens.len() != 2 {
                    return Err(Error::parse(line, format!("expected `{} <vertex>`", tokens[0])));
                }
                let v: VertexId = number(line, tokens[1], "vertex")?;
                if v >= n {
                    return Err(Error::parse(line, format!("vertex {v} out of range")));
                }
                let slot = if tokens[0] == "s" { &mut s } else { &mut t };
                if slot.replace(v).is_some() {
                    return Err(Error::parse(line, format!("duplicate `{}` line", tokens[0])));
                }
            }
            "e" => {
                if header.is_none() {
                    return Err(Error::parse(line, "edge before `p` line"));
                }
                if tokens.len() != 4 {
                    return Err(Error::parse(line, "expected `e <u> <v> <w>`"));
                }
                let u = number(line, tokens[1], "vertex")?;
                let v = number(line, tokens[2], "vertex")?;
                let w = number(line, tokens[3], "length")?;
                edges.push((u, v, w));
            }
            other => return Err(Error::parse(line, format!("unknown record `{other}`"))),
        }
    }
    let (n, m) = header.ok_or_else(|| Error::parse(last_line.max(1), "missing `p nsp` header"))?;
    if edges.len() != m {
        return Err(Error::parse(last_line, format!("header declares {m} edges, found {}", edges.len())));
    }
    let graph = Graph::new(n, &edges)?;
    Ok(Instance { graph, s, t })
}

pub fn write_instance(g: &Graph, s: Option<VertexId>, t: Option<VertexId>) -> String {
    let mut out = String::new();
    writeln!(out, "p nsp {} {}", g.vertex_count(), g.edge_count()).unwrap();
    if let Some(s) = s {
        writeln!(out, "s {s}").unwrap();
    }
    if let Some(t) = t {
        writeln!(out, "t {t}").unwrap();
    }
    for e in g.edges() {
        writeln!(out, "e {} {} {}", e.u, e.v, e.length).unwrap();
    }
    out
}

/// DIMACS CNF with exactly three literals per clause.
pub fn parse_dimacs(text: &str) -> Result<Cnf> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut last_line = 0;
    for (line, tokens) in content_lines(text) {
        last_line = line;
        if tokens[0] == "p" {
            if header.is_some() {
                return Err(Error::parse(line, "duplicate `p` line"));
            }
            if tokens.len() != 4 || tokens[1] != "cnf" {
                return Err(Error::parse(line, "expected `p cnf <vars> <clauses>`"));
            }
            header = Some((number(line, tokens[2], "variable count")?, number(line, tokens[3], "clause count")?));
            continue;
        }
        let Some((num_vars, _)) = header else {
            return Err(Error::parse(line, "clause before `p` line"));
        };
        let values: Vec<i64> =
            tokens.iter().map(|tok| number(line, tok, "literal")).collect::<Result<_>>()?;
        if values.len() != 4 || values[3] != 0 || values[..3].contains(&0) {
            return Err(Error::parse(line, "a clause is three nonzero literals followed by 0"));
        }
        let mut clause = [Literal { var: 0, positive: true }; 3];
        for (slot, &x) in clause.iter_mut().zip(&values[..3]) {
            let var = x.unsigned_abs() as usize - 1;
            if var >= num_vars {
                return Err(Error::parse(line, format!("variable {} out of range", var + 1)));
            }
            *slot = Literal { var, positive: x > 0 };
        }
        clauses.push(clause);
    }
    let (num_vars, num_clauses) =
        header.ok_or_else(|| Error::parse(last_line.max(1), "missing `p cnf` header"))?;
    if clauses.len() != num_clauses {
        return Err(Error::parse(
            last_line,
            format!("header declares {num_clauses} clauses, found {}", clauses.len()),
        ));
    }
    Cnf::new(num_vars, clauses)
}

pub fn write_dimacs(cnf: &Cnf) -> String {
    let mut out = String::new();
    writeln!(out, "p cnf {} {}", cnf.num_vars(), cnf.clauses().len()).unwrap();
    for clause in cnf.clauses() {
        for lit in clause {
            let x = lit.var as i64 + 1;
            write!(out, "{} ", if lit.positive { x } else { -x }).unwrap();
        }
        out.push_str("0\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIANGLE: &str = "# triangle\np nsp 3 3\ns 0\nt 2\n\ne 0 1 1\ne 1 2 1\ne 0 2 1\n";

    #[test]
    fn parses_triangle() {
        let inst = parse_instance(TRIANGLE).unwrap();
        assert_eq!(inst.graph.edge_count(), 3);
        assert_eq!(inst.terminals().unwrap(), (0, 2));
    }

    #[test]
    fn round_trips() {
        let inst = parse_instance(TRIANGLE).unwrap();
        let text = write_instance(&inst.graph, inst.s, inst.t);
        assert_eq!(parse_instance(&text).unwrap(), inst);
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_instance("p nsp 2 1\ne 0 x 1\n").unwrap_err();
        assert_eq!(err, Error::parse(2, "invalid vertex `x`"));
    }

    #[test]
    fn edge_count_must_match() {
        assert!(matches!(parse_instance("p nsp 2 2\ne 0 1 1\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn graph_errors_pass_through() {
        assert_eq!(parse_instance("p nsp 2 1\ne 0 1 0\n"), Err(Error::NonPositiveLength(0, 1)));
    }

    #[test]
    fn dimacs_round_trip() {
        let text = "c example\np cnf 3 2\n1 -2 3 0\n-1 2 3 0\n";
        let cnf = parse_dimacs(text).unwrap();
        assert_eq!(cnf.clauses()[0][1], Literal { var: 1, positive: false });
        assert_eq!(parse_dimacs(&write_dimacs(&cnf)).unwrap(), cnf);
    }

    #[test]
    fn dimacs_rejects_short_clause() {
        assert!(parse_dimacs("p cnf 3 1\n1 2 0\n").is_err());
    }
}
