mod common;

use nonsep::oracle::{brute_shortest_avoiding, is_separating_path, strongly_connected, Oracle};
use nonsep::solver::{avoid, compute_bad_vertices, compute_lr, Separator, XIndex};
use nonsep::{prune_to_bridge_free_region, solve, solve_detailed, Graph, Path, SolveReport};
use proptest::prelude::*;

use common::instance;

fn inner(p: &Path) -> &[usize] {
    &p.vertices()[1..p.edge_count()]
}

fn without_timings(mut r: SolveReport) -> SolveReport {
    r.timings.clear();
    r
}

/// Re-express a path of `g` in the ids of the bridge-free region.
fn to_region(region: &nonsep::PrunedGraph, p: &Path) -> Path {
    let vs = p.vertices().iter().map(|&v| region.to_new[v].unwrap()).collect();
    Path::new(&region.graph, vs).unwrap()
}

#[test]
fn report_stages_are_timed_in_order() {
    let (g, s, t) = instance(5, 10);
    let report = solve_detailed(&g, s, t).unwrap();
    let stages: Vec<&str> = report.timings.iter().map(|x| x.stage).collect();
    assert_eq!(stages[..2], ["validate", "prune"]);
    if report.path.is_some() {
        assert_eq!(stages.last(), Some(&"avoid"));
    }
}

#[test]
fn bridge_only_target_has_no_path() {
    // triangle 0-1-2 with a pendant 3 off 2
    let g = Graph::new(4, &[(0, 1, 1), (1, 2, 1), (0, 2, 1), (2, 3, 1)]).unwrap();
    let report = solve_detailed(&g, 0, 3).unwrap();
    assert_eq!(report.path, None);
    assert_eq!((report.region_vertices, report.region_edges), (3, 3));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn solve_matches_oracle(seed in 0u64..1_000_000) {
        let (g, s, t) = instance(seed, 10);
        let expected = Oracle::new(&g).unwrap().shortest_nonseparating(s, t).unwrap();
        let found = solve(&g, s, t).unwrap();
        prop_assert_eq!(found.as_ref().map(Path::length), expected.as_ref().map(Path::length));
        if let Some(p) = found {
            prop_assert!(p.is_simple());
            prop_assert_eq!((p.first(), p.last()), (s, t));
            prop_assert!(!is_separating_path(&g, &p));
        }
    }

    #[test]
    fn pipeline_invariants(seed in 0u64..1_000_000) {
        let (g, s, t) = instance(seed, 10);
        let report = solve_detailed(&g, s, t).unwrap();
        let Some(path) = &report.path else { return Ok(()) };
        let oracle = Oracle::new(&g).unwrap();

        // X: normal, pairwise disjoint
        for (a, x) in report.x.iter().enumerate() {
            prop_assert!(oracle.classify(s, t, &x.path).normal, "{:?}", x.path.vertices());
            let edges = x.path.edge_ids(&g);
            for y in &report.x[a + 1..] {
                prop_assert!(y.path.edge_ids(&g).iter().all(|e| !edges.contains(e)));
                prop_assert!(inner(&y.path).iter().all(|v| !inner(&x.path).contains(v)));
            }
        }

        // every normal separator path inside P0 is in X
        let p0 = report.p0.as_ref().unwrap();
        for r in oracle.separator_paths() {
            if p0.contains_subpath(&r.path) && oracle.classify(s, t, &r.path).normal {
                prop_assert!(report.x.iter().any(|x| x.path == r.path), "{:?} missing", r.vertices());
            }
        }

        let aux = report.aux.unwrap();
        prop_assert!(aux.nodes <= 2 * report.region_vertices);
        prop_assert!(aux.arcs <= 8 * report.region_edges);

        prop_assert!(path.vertices().iter().all(|v| !report.bad_vertices.contains(v)));
        prop_assert!(report.x.iter().all(|x| !path.contains_subpath(&x.path)));

        // inner vertices of X_ST members that are on P sit at consecutive P indices
        let p = report.p.as_ref().unwrap();
        for Separator { path: r, .. } in &report.x_st {
            let mut at: Vec<usize> = inner(r)
                .iter()
                .filter_map(|v| p.vertices().iter().position(|w| w == v))
                .collect();
            at.sort_unstable();
            prop_assert!(at.windows(2).all(|w| w[1] == w[0] + 1), "{:?} on {:?}", r.vertices(), p.vertices());
        }
    }

    #[test]
    fn bad_vertices_match_oracle_on_region(seed in 0u64..1_000_000) {
        let (g, s, t) = instance(seed, 10);
        let region = prune_to_bridge_free_region(&g, s).unwrap();
        let Some(th) = region.to_new[t] else { return Ok(()) };
        let sh = region.to_new[s].unwrap();
        let fast = compute_bad_vertices(&region.graph, sh, th).unwrap();
        prop_assert_eq!(fast, Oracle::new(&region.graph).unwrap().bad_vertices(sh, th));
    }

    #[test]
    fn solve_is_deterministic(seed in 0u64..1_000_000) {
        let (g, s, t) = instance(seed, 12);
        let a = without_timings(solve_detailed(&g, s, t).unwrap());
        let b = without_timings(solve_detailed(&g, s, t).unwrap());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn avoid_matches_brute_force(seed in 0u64..1_000_000) {
        let (g, s, t) = instance(seed, 10);
        let report = solve_detailed(&g, s, t).unwrap();
        prop_assume!(report.path.is_some());
        let region = prune_to_bridge_free_region(&g, s).unwrap();
        let h = &region.graph;
        let x: Vec<Path> = report.x.iter().map(|r| to_region(&region, &r.path)).collect();
        let bad: Vec<usize> = report.bad_vertices.iter().map(|&v| region.to_new[v].unwrap()).collect();
        let (sh, th) = (region.to_new[s].unwrap(), region.to_new[t].unwrap());
        // every sub-collection of X, not only the full one
        for mask in 0u32..1 << x.len().min(4) {
            let subset: Vec<Path> = x.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| p.clone()).collect();
            let fast = avoid(h, &bad, &subset, sh, th).unwrap();
            let slow = brute_shortest_avoiding(h, sh, th, &bad, &subset);
            prop_assert_eq!(fast.as_ref().map(Path::length), slow.as_ref().map(Path::length));
            if let Some(p) = fast {
                prop_assert!(p.is_simple() && subset.iter().all(|r| !p.contains_subpath(r)));
            }
        }
    }

    #[test]
    fn lr_matches_strong_connectivity(seed in 0u64..1_000_000) {
        let (g, s, t) = instance(seed, 10);
        let report = solve_detailed(&g, s, t).unwrap();
        let paths: Vec<Path> = report.x.iter().map(|r| r.path.clone()).collect();
        let index = XIndex::new(&g, &paths).unwrap();
        let table = compute_lr(&g, &index).unwrap();
        for (&(id, u), &(l, r)) in &table.entries {
            let member = &paths[id];
            let reach: Vec<usize> = member
                .vertices()
                .iter()
                .copied()
                .filter(|&w| strongly_connected(&g, member, u, w))
                .collect();
            prop_assert_eq!(Some(&l), reach.first(), "member {:?} u {}", member.vertices(), u);
            prop_assert_eq!(Some(&r), reach.last(), "member {:?} u {}", member.vertices(), u);
        }
    }
}
