mod common;

use nonsep::oracle::{is_separating_path, Oracle};
use nonsep::{decide, Error, Graph};
use proptest::prelude::*;

use common::{bridge_instance, instance};

#[test]
fn decide_examples() {
    let tri = Graph::new(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap();
    assert_eq!(decide(&tri, 0, 2).unwrap().witness.unwrap().vertices(), &[0, 2]);
    let edge = Graph::new(2, &[(0, 1, 1)]).unwrap();
    assert!(!decide(&edge, 0, 1).unwrap().exists());
    let square = Graph::new(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]).unwrap();
    assert_eq!(decide(&square, 0, 2), Err(Error::NotChordal));
    assert_eq!(decide(&tri, 1, 1), Err(Error::SameTerminals(1)));
}

fn check(g: &Graph, s: usize, t: usize) -> Result<(), TestCaseError> {
    let decision = decide(g, s, t).unwrap();
    let expected = Oracle::new(g).unwrap().has_nonseparating(s, t).unwrap();
    prop_assert_eq!(decision.exists(), expected);
    if let Some(w) = decision.witness {
        prop_assert!(w.is_simple());
        prop_assert_eq!((w.first(), w.last()), (s, t));
        prop_assert!(!is_separating_path(g, &w));
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn decide_matches_oracle(seed in 0u64..1_000_000) {
        let (g, s, t) = instance(seed, 10);
        check(&g, s, t)?;
    }

    #[test]
    fn decide_matches_oracle_across_bridges(seed in 0u64..1_000_000) {
        let (g, s, t) = bridge_instance(seed);
        check(&g, s, t)?;
    }
}
