//! Seeded generators for connected chordal graphs, k-trees and 3-CNF
//! formulas.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Length, VertexId};
use crate::reduction::{Cnf, Literal};

pub const DEFAULT_WEIGHTS: (Length, Length) = (1, 32);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenConfig {
    pub vertex_count: usize,
    pub attachment_clique_max: usize,
    pub weight_min: Length,
    pub weight_max: Length,
    pub seed: u64,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            vertex_count: 10,
            attachment_clique_max: 3,
            weight_min: DEFAULT_WEIGHTS.0,
            weight_max: DEFAULT_WEIGHTS.1,
            seed: 0,
        }
    }
}

fn check_weights(min: Length, max: Length) -> Result<()> {
    if min == 0 || min > max {
        return Err(Error::Config(format!("weight range [{min}, {max}] must satisfy 1 <= min <= max")));
    }
    Ok(())
}

/// Connected chordal graph grown one vertex at a time. Each new vertex picks
/// an existing vertex v and joins v plus a random part of the clique v was
/// attached to, so it is simplicial when added. Attachments of size one
/// create bridges.
pub fn gen_chordal(cfg: &GenConfig) -> Result<Graph> {
    if cfg.vertex_count == 0 {
        return Err(Error::Config("vertex_count must be at least 1".into()));
    }
    if cfg.attachment_clique_max == 0 {
        return Err(Error::Config("attachment_clique_max must be at least 1".into()));
    }
    check_weights(cfg.weight_min, cfg.weight_max)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut attached: Vec<Vec<VertexId>> = vec![Vec::new()];
    let mut edges = Vec::new();
    for x in 1..cfg.vertex_count {
        let v = rng.gen_range(0..x);
        let size = rng.gen_range(1..=cfg.attachment_clique_max);
        let pool = &attached[v];
        let extra = (size - 1).min(pool.len());
        let mut clique: Vec<VertexId> = vec![v];
        clique.extend(sample(&mut rng, pool.len(), extra).into_iter().map(|k| pool[k]));
        clique.sort_unstable();
        for &y in &clique {
            edges.push((y, x, rng.gen_range(cfg.weight_min..=cfg.weight_max)));
        }
        attached.push(clique);
    }
    Graph::new(cfg.vertex_count, &edges)
}

/// Random k-tree: a (k+1)-clique, then every new vertex joins a uniformly
/// chosen existing k-clique.
pub fn gen_ktree(n: usize, k: usize, weights: (Length, Length), seed: u64) -> Result<Graph> {
    if k == 0 || n <= k {
        return Err(Error::Config(format!("a k-tree needs n > k >= 1 (n={n}, k={k})")));
    }
    check_weights(weights.0, weights.1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity(k * n);
    for v in 1..=k {
        for u in 0..v {
            edges.push((u, v, rng.gen_range(weights.0..=weights.1)));
        }
    }
    let mut cliques: Vec<Vec<VertexId>> = (0..=k)
        .map(|skip| (0..=k).filter(|&v| v != skip).collect())
        .collect();
    for x in k + 1..n {
        let base = cliques[rng.gen_range(0..cliques.len())].clone();
        for &y in &base {
            edges.push((y, x, rng.gen_range(weights.0..=weights.1)));
        }
        for skip in 0..k {
            let mut c: Vec<VertexId> = base.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
            c.push(x);
            cliques.push(c);
        }
    }
    Graph::new(n, &edges)
}

/// Random 3-CNF: every clause has three distinct variables with uniform
/// polarities.
pub fn gen_cnf(num_vars: usize, num_clauses: usize, seed: u64) -> Result<Cnf> {
    if num_vars < 3 {
        return Err(Error::Config(format!("need at least 3 variables, got {num_vars}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let clauses = (0..num_clauses)
        .map(|_| {
            let vars = sample(&mut rng, num_vars, 3);
            let mut clause = [Literal { var: 0, positive: true }; 3];
            for (slot, var) in clause.iter_mut().zip(vars) {
                *slot = Literal { var, positive: rng.gen_bool(0.5) };
            }
            clause
        })
        .collect();
    Cnf::new(num_vars, clauses)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::is_chordal;

    #[test]
    fn single_vertex() {
        let g = gen_chordal(&GenConfig { vertex_count: 1, ..GenConfig::default() }).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
    }

    #[test]
    fn three_vertices() {
        for seed in 0..20 {
            let cfg = GenConfig { vertex_count: 3, attachment_clique_max: 2, seed, ..GenConfig::default() };
            let g = gen_chordal(&cfg).unwrap();
            assert!(g.edge_count() == 2 || g.edge_count() == 3);
        }
    }

    #[test]
    fn chordal_and_connected_over_many_seeds() {
        for seed in 0..1000 {
            let cfg = GenConfig {
                vertex_count: 1 + (seed as usize % 30),
                attachment_clique_max: 1 + (seed as usize % 5),
                seed,
                ..GenConfig::default()
            };
            let g = gen_chordal(&cfg).unwrap();
            assert!(is_chordal(&g) && g.is_connected(), "seed {seed}");
            assert!(g.edges().iter().all(|e| (1..=32).contains(&e.length)));
        }
    }

    #[test]
    fn deterministic() {
        let cfg = GenConfig { vertex_count: 40, seed: 9, ..GenConfig::default() };
        assert_eq!(gen_chordal(&cfg).unwrap(), gen_chordal(&cfg).unwrap());
        assert_eq!(gen_ktree(50, 3, (1, 5), 4).unwrap(), gen_ktree(50, 3, (1, 5), 4).unwrap());
        assert_eq!(gen_cnf(4, 8, 3).unwrap(), gen_cnf(4, 8, 3).unwrap());
    }

    #[test]
    fn ktree_edge_counts() {
        assert_eq!(gen_ktree(3, 1, (1, 1), 0).unwrap().edge_count(), 2);
        assert_eq!(gen_ktree(4, 2, (1, 1), 0).unwrap().edge_count(), 5);
        for (n, k) in [(10, 3), (57, 4), (200, 3)] {
            let g = gen_ktree(n, k, DEFAULT_WEIGHTS, n as u64).unwrap();
            assert_eq!(g.edge_count(), k * n - k * (k + 1) / 2);
            assert!(is_chordal(&g));
        }
    }

    #[test]
    fn cnf_clauses_have_distinct_variables() {
        assert_eq!(gen_cnf(3, 1, 0).unwrap().clauses().len(), 1);
        let cnf = gen_cnf(6, 10, 1).unwrap();
        assert_eq!(cnf.clauses().len(), 10);
        for c in cnf.clauses() {
            assert!(c[0].var != c[1].var && c[0].var != c[2].var && c[1].var != c[2].var);
        }
    }

    #[test]
    fn rejects_bad_config() {
        assert!(gen_chordal(&GenConfig { weight_min: 0, ..GenConfig::default() }).is_err());
        assert!(gen_ktree(3, 3, DEFAULT_WEIGHTS, 0).is_err());
        assert!(gen_cnf(2, 1, 0).is_err());
    }
}
