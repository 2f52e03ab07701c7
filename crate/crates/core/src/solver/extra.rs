//! Normal separator paths contained in a given simple path.
//!
//! With the edges of the path removed, the vertices of a contained
//! separator path alternate between two components. A two-pointer scan over
//! the component labels finds the maximal alternating stretches, which are
//! exactly the separator paths on the path.

use crate::connectivity::component_labels;
use crate::graph::{Graph, Path, VertexId};
use crate::oracle::is_useful;

/// Index ranges `(i, j)` of the maximal alternating stretches of `p`.
pub fn alternating_stretches(g: &Graph, p: &Path) -> Vec<(usize, usize)> {
    let mut active = vec![true; g.edge_count()];
    for e in p.edge_ids(g) {
        active[e] = false;
    }
    let labels = component_labels(g, Some(&active));
    let bel: Vec<usize> = p.vertices().iter().map(|&v| labels[v]).collect();
    let mut out = Vec::new();
    let mut i = 0;
    for j in 1..bel.len() {
        if j > 1 && bel[j] != bel[j - 2] {
            if i < j - 1 {
                out.push((i, j - 1));
            }
            i = j - 1;
        }
        if bel[j] == bel[j - 1] {
            i = j;
        }
    }
    if i + 1 < bel.len() {
        out.push((i, bel.len() - 1));
    }
    out
}

/// Separator paths on `p` that are useful and have more than two edges,
/// oriented along `p`.
pub fn separator_paths_on_path(g: &Graph, p: &Path) -> Vec<Path> {
    alternating_stretches(g, p)
        .into_iter()
        .filter(|&(i, j)| j - i > 2 && is_useful(g, &p.vertices()[i..=j]))
        .map(|(i, j)| p.subpath(g, i, j))
        .collect()
}

/// Vertex sequences of [`separator_paths_on_path`].
pub fn separator_sequences_on_path(g: &Graph, p: &Path) -> Vec<Vec<VertexId>> {
    separator_paths_on_path(g, p).into_iter().map(Path::into_vertices).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::Oracle;

    #[test]
    fn single_edge_has_none() {
        let g = Graph::new(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap();
        let p = Path::new(&g, vec![0, 2]).unwrap();
        assert!(separator_paths_on_path(&g, &p).is_empty());
    }

    #[test]
    fn triangle_stretch_is_too_short() {
        let g = Graph::new(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap();
        let p = Path::new(&g, vec![0, 1, 2]).unwrap();
        assert_eq!(alternating_stretches(&g, &p), vec![(0, 2)]);
        assert!(separator_paths_on_path(&g, &p).is_empty());
    }

    #[test]
    fn stretches_are_the_contained_separator_paths() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for seed in 0..150u64 {
            let cfg = crate::generator::GenConfig {
                vertex_count: rng.gen_range(4..=9),
                attachment_clique_max: 3,
                weight_min: 1,
                weight_max: 4,
                seed,
            };
            let full = crate::generator::gen_chordal(&cfg).unwrap();
            let g = crate::decision::prune_to_bridge_free_region(&full, 0).unwrap().graph;
            if g.vertex_count() < 3 {
                continue;
            }
            let oracle = Oracle::new(&g).unwrap();
            let seps = oracle.separator_paths();
            let n = g.vertex_count();
            for p in oracle.simple_paths(0, n - 1).into_iter().take(20) {
                let mut expected: Vec<(usize, usize)> = seps
                    .iter()
                    .filter_map(|r| {
                        let k = r.vertices().len();
                        p.vertices()
                            .windows(k)
                            .position(|w| w == r.vertices())
                            .map(|i| (i, i + k - 1))
                    })
                    .filter(|&(i, j)| j - i >= 2)
                    .collect();
                expected.sort_unstable();
                let got: Vec<_> =
                    alternating_stretches(&g, &p).into_iter().filter(|&(i, j)| j - i >= 2).collect();
                assert_eq!(got, expected, "seed {seed} path {:?}", p.vertices());
            }
        }
    }
}
