#![allow(dead_code)]

use nonsep::generator::{gen_chordal, GenConfig};
use nonsep::reduction::{Clause, Cnf, Literal};
use nonsep::Graph;

/// Small seeded chordal instance with terminals derived from the seed.
pub fn instance(seed: u64, max_n: usize) -> (Graph, usize, usize) {
    let n = 4 + (seed as usize % (max_n - 3));
    let cfg = GenConfig {
        vertex_count: n,
        attachment_clique_max: 1 + (seed as usize / 7) % 4,
        seed,
        ..GenConfig::default()
    };
    let g = gen_chordal(&cfg).unwrap();
    let s = (seed as usize / 3) % n;
    let t = (s + 1 + (seed as usize / 11) % (n - 1)) % n;
    (g, s, t)
}

/// Connectivity after deleting one edge or one vertex, by plain DFS.
pub fn connected_without(g: &Graph, skip_edge: Option<usize>, skip_vertex: Option<usize>) -> bool {
    let n = g.vertex_count();
    let Some(start) = (0..n).find(|&v| Some(v) != skip_vertex) else { return true };
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for nb in g.neighbors(u) {
            if Some(nb.edge) == skip_edge || Some(nb.vertex) == skip_vertex || seen[nb.vertex] {
                continue;
            }
            seen[nb.vertex] = true;
            stack.push(nb.vertex);
        }
    }
    (0..n).all(|v| seen[v] || Some(v) == skip_vertex)
}

/// Two chordal pieces joined by a single bridge, terminals anywhere.
pub fn bridge_instance(seed: u64) -> (Graph, usize, usize) {
    let piece = |n: usize, salt: u64| {
        gen_chordal(&GenConfig {
            vertex_count: n,
            attachment_clique_max: 1 + (seed as usize + salt as usize) % 3,
            seed: seed.wrapping_mul(31).wrapping_add(salt),
            ..GenConfig::default()
        })
        .unwrap()
    };
    let (na, nb) = (2 + seed as usize % 5, 2 + (seed as usize / 5) % 5);
    let (a, b) = (piece(na, 1), piece(nb, 2));
    let mut edges = a.edge_triples();
    edges.extend(b.edge_triples().into_iter().map(|(u, v, w)| (u + na, v + na, w)));
    let (ja, jb) = ((seed as usize / 25) % na, na + (seed as usize / 3) % nb);
    edges.push((ja, jb, 1 + seed % 32));
    let n = na + nb;
    let g = Graph::new(n, &edges).unwrap();
    let s = (seed as usize / 7) % n;
    let t = (s + 1 + (seed as usize / 13) % (n - 1)) % n;
    (g, s, t)
}

/// Formulas at the edge of satisfiability, 4 to 6 variables and 7 or 8
/// clauses. Even `i` gives an unsatisfiable formula: either every sign
/// pattern over three variables, or a split on a fourth variable `d` with
/// all patterns over (a, b) when d is false and over (a, c) when d is true.
/// Odd `i` drops one clause, which leaves exactly the falsified corner.
pub fn structured_cnf(i: u64) -> Cnf {
    let vars = 4 + (i / 2 % 3) as usize;
    let pick = |k: u64| ((i / 6 + k * (1 + i % 5)) % vars as u64) as usize;
    // four distinct variables
    let mut chosen: Vec<usize> = Vec::new();
    let mut k = 0;
    while chosen.len() < 4 {
        let v = pick(k);
        if !chosen.contains(&v) {
            chosen.push(v);
        }
        k += 1;
        if k > 64 {
            chosen = (0..4).collect();
        }
    }
    let (a, b, c, d) = (chosen[0], chosen[1], chosen[2], chosen[3]);
    let lit = |var, positive| Literal { var, positive };
    let mut clauses: Vec<Clause> = Vec::new();
    for m in 0..8u32 {
        let bit = |j: u32| m >> j & 1 == 1;
        clauses.push(if (i / 2).is_multiple_of(2) {
            [lit(a, bit(0)), lit(b, bit(1)), lit(c, bit(2))]
        } else if bit(2) {
            [lit(a, bit(0)), lit(b, bit(1)), lit(d, true)]
        } else {
            [lit(a, bit(0)), lit(c, bit(1)), lit(d, false)]
        });
    }
    clauses.rotate_left((i / 4 % 8) as usize);
    if i % 2 == 1 {
        clauses.remove((i / 3 % 8) as usize);
    }
    Cnf::new(vars, clauses).unwrap()
}
