//! Chordality recognition by lexicographic breadth-first search.
//!
//! Lex-BFS is run with partition refinement; the reverse of its visit order
//! is a perfect elimination ordering exactly when the graph is chordal, which
//! is then verified directly.

use crate::graph::{Graph, VertexId};

/// Lex-BFS visit order starting at vertex 0 (then at the first unvisited
/// vertex of each further component).
pub fn lex_bfs(g: &Graph) -> Vec<VertexId> {
    let n = g.vertex_count();
    // `order` holds the unvisited vertices grouped into contiguous classes;
    // earlier classes have lexicographically larger labels.
    let mut order: Vec<VertexId> = (0..n).collect();
    let mut pos: Vec<usize> = (0..n).collect();
    let mut class_of = vec![0usize; n];
    let mut classes: Vec<(usize, usize)> = vec![(0, n)];
    let mut split_into: Vec<usize> = vec![usize::MAX];
    let mut split_stamp: Vec<usize> = vec![usize::MAX];
    let mut visited = vec![false; n];

    for i in 0..n {
        let v = order[i];
        visited[v] = true;
        classes[class_of[v]].0 += 1;
        for nb in g.neighbors(v) {
            let w = nb.vertex;
            if visited[w] {
                continue;
            }
            let c = class_of[w];
            if split_stamp[c] != i {
                split_stamp[c] = i;
                let start = classes[c].0;
                split_into[c] = classes.len();
                classes.push((start, start));
                split_into.push(usize::MAX);
                split_stamp.push(usize::MAX);
            }
            let nc = split_into[c];
            let front = classes[c].0;
            let x = order[front];
            order.swap(front, pos[w]);
            pos[x] = pos[w];
            pos[w] = front;
            classes[c].0 += 1;
            classes[nc].1 += 1;
            class_of[w] = nc;
        }
    }
    order
}

/// Whether `order` (first eliminated first) is a perfect elimination
/// ordering: the later neighbours of every vertex form a clique.
///
/// Linear check: `follow[v]` is the first later neighbour of v. Every other
/// later neighbour w of v must be adjacent to `follow[v]`; when w is
/// processed, its earlier neighbours are stamped, so this is one lookup.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[VertexId]) -> bool {
    let n = g.vertex_count();
    if order.len() != n {
        return false;
    }
    let mut rank = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || rank[v] != usize::MAX {
            return false;
        }
        rank[v] = i;
    }
    let mut follow: Vec<VertexId> = (0..n).collect();
    let mut stamp = vec![usize::MAX; n];
    for (i, &w) in order.iter().enumerate() {
        stamp[w] = i;
        for nb in g.neighbors(w) {
            let v = nb.vertex;
            if rank[v] < i {
                stamp[v] = i;
                if follow[v] == v {
                    follow[v] = w;
                }
            }
        }
        for nb in g.neighbors(w) {
            if rank[nb.vertex] < i && stamp[follow[nb.vertex]] != i {
                return false;
            }
        }
    }
    true
}

/// A perfect elimination ordering when the graph is chordal.
pub fn perfect_elimination_ordering(g: &Graph) -> Option<Vec<VertexId>> {
    let mut order = lex_bfs(g);
    order.reverse();
    is_perfect_elimination_ordering(g, &order).then_some(order)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_ordering(g).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        let list: Vec<_> = edges.iter().map(|&(u, v)| (u, v, 1)).collect();
        Graph::new(n, &list).unwrap()
    }

    /// Looks for an induced cycle on at least four vertices.
    fn has_chordless_cycle(g: &Graph) -> bool {
        let n = g.vertex_count();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() < 4 {
                continue;
            }
            let keep: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
            let (h, _) = g.induced(&keep, None);
            if h.is_connected() && (0..h.vertex_count()).all(|v| h.degree(v) == 2) {
                return true;
            }
        }
        false
    }

    #[test]
    fn triangle_is_chordal() {
        let g = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        let peo = perfect_elimination_ordering(&g).unwrap();
        assert!(is_perfect_elimination_ordering(&g, &peo));
    }

    #[test]
    fn four_cycle_is_not_chordal() {
        assert!(!is_chordal(&graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])));
    }

    #[test]
    fn four_cycle_with_chord_is_chordal() {
        assert!(is_chordal(&graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])));
    }

    #[test]
    fn lex_bfs_visits_every_vertex_once() {
        let g = graph(5, &[(0, 1), (1, 2), (3, 4)]);
        let mut order = lex_bfs(&g);
        order.sort_unstable();
        assert_eq!(order, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn rejects_bad_ordering() {
        // eliminating a path's middle vertex first leaves non-adjacent neighbours
        let g = graph(3, &[(0, 1), (1, 2)]);
        assert!(!is_perfect_elimination_ordering(&g, &[1, 0, 2]));
        assert!(is_perfect_elimination_ordering(&g, &[0, 1, 2]));
    }

    #[test]
    fn agrees_with_chordless_cycle_search() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..400 {
            let n = rng.gen_range(1..=8);
            let p = rng.gen_range(0.2..0.8);
            let mut list = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        list.push((u, v));
                    }
                }
            }
            let g = graph(n, &list);
            assert_eq!(is_chordal(&g), !has_chordless_cycle(&g), "edges {list:?}");
        }
    }
}
