#![allow(dead_code)]

mod published;

use biorder::{BetweennessConstraint, Chain, ConstraintSet, GenId, KnotPresentation};
use rand::Rng;

#[allow(unused_imports)]
pub use published::PUBLISHED_CHAINS;

/// A constraint set on `n` generators with `count` random distinct triples.
pub fn random_constraints<R: Rng>(rng: &mut R, n: usize, count: usize) -> ConstraintSet {
    let items: Vec<BetweennessConstraint> = (0..count)
        .map(|_| loop {
            let (m, a, b) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            if let Some(c) = BetweennessConstraint::new(GenId(m), GenId(a), GenId(b)) {
                break c;
            }
        })
        .collect();
    ConstraintSet::from_constraints(items)
}

/// Every permutation of `0..n`, by recursive swapping.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(v: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == v.len() {
            out.push(v.clone());
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            go(v, k + 1, out);
            v.swap(k, i);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), 0, &mut out);
    out
}

/// Chain from a label string such as `"adbc"`.
pub fn chain_from_labels(p: &KnotPresentation, labels: &str) -> Chain {
    let ids = labels
        .chars()
        .map(|c| p.find(&c.to_string()).expect("label in presentation"))
        .collect();
    Chain::new(ids).expect("labels form a permutation")
}

pub fn trefoil() -> KnotPresentation {
    KnotPresentation::from_labels(
        "3_1",
        &["a", "b", "c"],
        &[("a", "b", "c"), ("b", "c", "a"), ("c", "a", "b")],
    )
    .unwrap()
}
