mod common;

use common::{all_graphs, arb_graph};
use excessive_core::excessive::excessive_lm_index;
use excessive_core::matching::{
    is_lm_coverable, matching_number, max_matching_with_forced, maximum_matching,
};
use excessive_core::oracle::matching_number_bruteforce;
use excessive_core::{Matching, SimpleGraph};
use proptest::prelude::*;

fn check_maximum(g: &SimpleGraph) {
    let m = maximum_matching(g);
    assert!(m.is_subgraph_of(g));
    assert_eq!(m.len(), matching_number_bruteforce(g), "{g:?}");
}

#[test]
fn blossom_matches_brute_force_exhaustive() {
    for g in all_graphs(5) {
        check_maximum(&g);
    }
}

#[test]
fn coverability_matches_finiteness() {
    for g in all_graphs(5) {
        for l in 1..=4 {
            for m in l..=5 {
                let finite = excessive_lm_index(&g, l, m).unwrap().value().is_finite();
                assert_eq!(finite, is_lm_coverable(&g, l) || g.is_edgeless());
            }
        }
    }
}

proptest! {
    #[test]
    fn blossom_matches_brute_force_random(g in arb_graph(6, 12)) {
        check_maximum(&g);
    }

    #[test]
    fn forcing_nothing_changes_nothing(g in arb_graph(1, 10)) {
        prop_assert_eq!(
            max_matching_with_forced(&g, &Matching::empty()).unwrap(),
            matching_number(&g)
        );
    }

    #[test]
    fn forcing_more_never_helps(g in arb_graph(2, 10), take in 0usize..5, skip in 0usize..5) {
        // a prefix of a maximal matching is a sub-matching of the whole
        let full = maximum_matching(&g);
        let big: Vec<_> = full.edges().iter().copied().skip(skip).collect();
        let small: Vec<_> = big.iter().copied().take(take).collect();
        let small = Matching::new(small).unwrap();
        let big = Matching::new(big).unwrap();
        prop_assert!(
            max_matching_with_forced(&g, &small).unwrap()
                >= max_matching_with_forced(&g, &big).unwrap()
        );
    }

    #[test]
    fn coverability_is_antitone(g in arb_graph(1, 9)) {
        prop_assume!(!g.is_edgeless());
        let nu = matching_number(&g);
        prop_assert!(!is_lm_coverable(&g, nu + 1));
        for l in 1..=nu {
            if is_lm_coverable(&g, l + 1) {
                prop_assert!(is_lm_coverable(&g, l));
            }
        }
    }
}
