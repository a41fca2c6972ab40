mod common;

use std::collections::HashSet;

use biorder::{
    backtracking_orders, brute_force_orders, catalog, derive_betweenness, satisfies, Chain,
};
use common::random_constraints;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const INFEASIBLE: [&str; 5] = ["6_3", "8_7", "8_8", "8_10", "8_16"];

#[test]
fn catalog_feasibility_split() {
    for p in catalog() {
        let chains = backtracking_orders(&derive_betweenness(p), p.generator_count());
        assert_eq!(
            chains.is_empty(),
            INFEASIBLE.contains(&p.name()),
            "{}: {} chains",
            p.name(),
            chains.len()
        );
    }
}

#[test]
fn every_returned_chain_satisfies_every_constraint() {
    for p in catalog() {
        let cs = derive_betweenness(p);
        for ch in backtracking_orders(&cs, p.generator_count()) {
            assert_eq!(ch.len(), p.generator_count());
            for c in cs.constraints() {
                assert!(satisfies(&ch, c).unwrap(), "{}", p.name());
            }
        }
    }
}

#[test]
fn runs_are_identical() {
    for p in catalog() {
        let cs = derive_betweenness(p);
        let n = p.generator_count();
        assert_eq!(backtracking_orders(&cs, n), backtracking_orders(&cs, n));
        assert_eq!(brute_force_orders(&cs, n).unwrap(), brute_force_orders(&cs, n).unwrap());
    }
}

fn no_reversal_pairs(chains: &[Chain]) -> bool {
    let set: HashSet<&Chain> = chains.iter().collect();
    chains
        .iter()
        .all(|c| c.is_canonical() && (c.len() < 2 || !set.contains(&c.reversed())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn adding_a_constraint_never_enlarges(seed in any::<u64>(), n in 4usize..=7, k in 0usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let base = random_constraints(&mut rng, n, k);
        let extra = random_constraints(&mut rng, n, 1).constraints()[0];
        let before = backtracking_orders(&base, n);
        let after = backtracking_orders(&base.with(extra), n);
        prop_assert!(after.iter().all(|c| before.contains(c)));
    }

    #[test]
    fn reversal_is_quotiented_and_sorted(seed in any::<u64>(), n in 3usize..=7, k in 0usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cs = random_constraints(&mut rng, n, k);
        let chains = backtracking_orders(&cs, n);
        prop_assert!(no_reversal_pairs(&chains));
        prop_assert!(chains.windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(chains, brute_force_orders(&cs, n).unwrap());
    }
}
