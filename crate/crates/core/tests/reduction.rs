use nonsep::format::{parse_dimacs, write_dimacs};
use nonsep::generator::gen_cnf;
use nonsep::oracle::{is_separating_path, Oracle, HARD_VERTEX_LIMIT};
use nonsep::reduction::{assignment_to_path, brute_sat, path_to_assignment, reduce, Cnf};
use proptest::prelude::*;

mod common;
use common::structured_cnf;

fn corpus_cnf(seed: u64) -> Cnf {
    if seed.is_multiple_of(3) {
        return structured_cnf(seed / 3);
    }
    let vars = 3 + seed as usize % 4;
    let clauses = 1 + (seed as usize / 4) % 8;
    gen_cnf(vars, clauses, seed).unwrap()
}

#[test]
fn structured_formulas_split_evenly() {
    for i in 0..40 {
        let cnf = structured_cnf(i);
        assert_eq!(brute_sat(&cnf).unwrap().is_some(), i % 2 == 1, "formula {i}");
    }
}

#[test]
fn unsatisfiable_formulas_have_no_nonseparating_path() {
    for i in (0..40).step_by(2) {
        let inst = reduce(&structured_cnf(i)).unwrap();
        let oracle = Oracle::with_cap(&inst.graph, HARD_VERTEX_LIMIT).unwrap();
        assert!(!oracle.has_nonseparating(inst.s, inst.t).unwrap(), "formula {i}");
    }
}

fn assignments(n: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u32..1 << n).map(move |m| (0..n).map(|i| m >> i & 1 == 1).collect())
}

#[test]
fn dimacs_round_trip_on_corpus() {
    for seed in 0..50 {
        let cnf = corpus_cnf(seed);
        assert_eq!(parse_dimacs(&write_dimacs(&cnf)).unwrap(), cnf);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn satisfiable_iff_nonseparating_path_exists(seed in 0u64..1_000_000) {
        let cnf = corpus_cnf(seed);
        let inst = reduce(&cnf).unwrap();
        let oracle = Oracle::with_cap(&inst.graph, HARD_VERTEX_LIMIT).unwrap();
        let found = oracle.shortest_nonseparating(inst.s, inst.t).unwrap();
        prop_assert_eq!(brute_sat(&cnf).unwrap().is_some(), found.is_some());
        if let Some(p) = found {
            // the oracle's path reads back as a satisfying assignment
            prop_assert!(cnf.evaluate(&path_to_assignment(&inst, &p).unwrap()));
        }
    }

    #[test]
    fn lane_paths_separate_exactly_when_falsifying(seed in 0u64..1_000_000) {
        let cnf = corpus_cnf(seed);
        let inst = reduce(&cnf).unwrap();
        for a in assignments(cnf.num_vars()) {
            let p = assignment_to_path(&inst, &a).unwrap();
            prop_assert_eq!(is_separating_path(&inst.graph, &p), !cnf.evaluate(&a), "{:?}", a);
            // a variable that occurs nowhere reads back as false either way
            let expected: Vec<bool> = a
                .iter()
                .zip(&inst.var_lanes)
                .map(|(&v, lanes)| v && !(lanes.a.is_empty() && lanes.a_bar.is_empty()))
                .collect();
            prop_assert_eq!(path_to_assignment(&inst, &p).unwrap(), expected);
        }
    }

    #[test]
    fn reduced_size_is_linear(seed in 0u64..1_000_000) {
        let cnf = corpus_cnf(seed);
        let inst = reduce(&cnf).unwrap();
        let size = inst.graph.vertex_count() + inst.graph.edge_count();
        // per variable: b, bypass and 4 edges at most; per clause: c, 3 dummies, 3 lane vertices, 12 edges
        prop_assert!(size <= 6 * cnf.num_vars() + 19 * cnf.clauses().len() + 1);
        prop_assert!(inst.graph.is_connected());
    }
}
