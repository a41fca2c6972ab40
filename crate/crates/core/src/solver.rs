//! Search for strict total orders on the generators that satisfy every
//! betweenness constraint.
//!
//! Two independent routes are provided: [`brute_force_orders`] walks every
//! permutation and is used as an oracle, [`backtracking_orders`] grows chains
//! one generator at a time and prunes as soon as a constraint breaks.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::DistinctnessCertificate;
use crate::constraints::{derive_betweenness, BetweennessConstraint, ConstraintSet};
use crate::error::{Error, Result};
use crate::presentation::{GenId, KnotPresentation};

/// Generator limit for the exhaustive oracle.
pub const MAX_BRUTE_FORCE_GENERATORS: usize = 12;

/// A strict total order, read as increasing from left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain(Vec<GenId>);

impl Chain {
    /// Returns `None` unless `sequence` is a permutation of `0..len`.
    pub fn new(sequence: Vec<GenId>) -> Option<Self> {
        let mut seen = vec![false; sequence.len()];
        for g in &sequence {
            if g.0 >= seen.len() || std::mem::replace(&mut seen[g.0], true) {
                return None;
            }
        }
        Some(Chain(sequence))
    }

    pub fn sequence(&self) -> &[GenId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn position(&self, g: GenId) -> Result<usize> {
        self.0
            .iter()
            .position(|&x| x == g)
            .ok_or(Error::GeneratorNotInChain(g.0))
    }

    pub fn reversed(&self) -> Chain {
        Chain(self.0.iter().rev().copied().collect())
    }

    pub fn is_canonical(&self) -> bool {
        self.0.first() <= self.0.last()
    }

    /// The lexicographically smaller of the chain and its reversal.
    pub fn canonical(self) -> Chain {
        if self.is_canonical() {
            self
        } else {
            self.reversed()
        }
    }

    pub fn labels<'a>(&self, p: &'a KnotPresentation) -> Vec<&'a str> {
        self.0.iter().map(|&g| p.label(g)).collect()
    }

    /// Joins the labels with `sep`, e.g. `a<>d<>b<>c`.
    pub fn render(&self, p: &KnotPresentation, sep: &str) -> String {
        self.labels(p).join(sep)
    }
}

pub fn canonical_chain(ch: Chain) -> Chain {
    ch.canonical()
}

fn all_hold(constraints: &[BetweennessConstraint], pos: &[usize]) -> bool {
    constraints.iter().all(|c| c.holds_at(|g| pos[g.0]))
}

fn check_generator_count(cs: &ConstraintSet, generator_count: usize) {
    assert!(
        cs.min_generator_count() <= generator_count,
        "constraint set references generator {} but only {} generators given",
        cs.min_generator_count().saturating_sub(1),
        generator_count
    );
}

/// Every canonical chain satisfying all constraints, by enumerating permutations.
///
/// The permutation space is split by first element and searched in parallel;
/// the merged result is sorted.
pub fn brute_force_orders(cs: &ConstraintSet, generator_count: usize) -> Result<Vec<Chain>> {
    if generator_count > MAX_BRUTE_FORCE_GENERATORS {
        return Err(Error::TooManyGenerators {
            count: generator_count,
            max: MAX_BRUTE_FORCE_GENERATORS,
        });
    }
    check_generator_count(cs, generator_count);
    if cs.has_contradiction() {
        return Ok(Vec::new());
    }
    let n = generator_count;
    if n <= 1 {
        return Ok(vec![Chain((0..n).map(GenId).collect())]);
    }

    let mut found: Vec<Chain> = (0..n)
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut rest: Vec<usize> = (0..n).filter(|&g| g != first).collect();
            let mut out = Vec::new();
            let mut pos = vec![0usize; n];
            loop {
                // canonical representatives start below where they end
                if first < *rest.last().unwrap() {
                    pos[first] = 0;
                    for (i, &g) in rest.iter().enumerate() {
                        pos[g] = i + 1;
                    }
                    if all_hold(cs.constraints(), &pos) {
                        let mut seq = Vec::with_capacity(n);
                        seq.push(GenId(first));
                        seq.extend(rest.iter().map(|&g| GenId(g)));
                        out.push(Chain(seq));
                    }
                }
                if !next_permutation(&mut rest) {
                    break;
                }
            }
            out
        })
        .collect();
    found.sort();
    Ok(found)
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Every canonical chain satisfying all constraints, by inserting generators
/// one at a time into every gap of a partial chain.
///
/// Generators are inserted by descending constraint degree (ties by index) and
/// each constraint is checked as soon as its last generator is placed. The
/// worst case is still factorial in the number of generators.
pub fn backtracking_orders(cs: &ConstraintSet, generator_count: usize) -> Vec<Chain> {
    check_generator_count(cs, generator_count);
    if cs.has_contradiction() {
        return Vec::new();
    }
    let n = generator_count;
    if n <= 1 {
        return vec![Chain((0..n).map(GenId).collect())];
    }

    let mut degree = vec![0usize; n];
    for c in cs.constraints() {
        for g in c.generators() {
            degree[g.0] += 1;
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&g| (std::cmp::Reverse(degree[g]), g));
    let mut rank = vec![0usize; n];
    for (k, &g) in order.iter().enumerate() {
        rank[g] = k;
    }
    let mut due: Vec<Vec<BetweennessConstraint>> = vec![Vec::new(); n];
    for c in cs.constraints() {
        let last = c.generators().iter().map(|g| rank[g.0]).max().unwrap();
        due[last].push(*c);
    }

    let mut search = Backtrack {
        order: &order,
        due: &due,
        partial: Vec::with_capacity(n),
        pos: vec![0; n],
        found: Vec::new(),
    };
    search.partial.push(order[0]);
    search.extend(1);

    let mut found: Vec<Chain> = search.found.into_iter().map(Chain::canonical).collect();
    found.sort();
    found
}

struct Backtrack<'a> {
    order: &'a [usize],
    due: &'a [Vec<BetweennessConstraint>],
    partial: Vec<usize>,
    pos: Vec<usize>,
    found: Vec<Chain>,
}

impl Backtrack<'_> {
    fn extend(&mut self, depth: usize) {
        if depth == self.order.len() {
            self.found
                .push(Chain(self.partial.iter().map(|&g| GenId(g)).collect()));
            return;
        }
        let g = self.order[depth];
        // the second generator only goes after the first: this picks one of
        // each chain/reversal pair
        let gaps = if depth == 1 { 1..=1 } else { 0..=self.partial.len() };
        for gap in gaps {
            self.partial.insert(gap, g);
            for (i, &x) in self.partial.iter().enumerate() {
                self.pos[x] = i;
            }
            if all_hold(&self.due[depth], &self.pos) {
                self.extend(depth + 1);
            }
            self.partial.remove(gap);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    NotBiorderable,
    PossiblyBiorderable,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::NotBiorderable => "NOT_BIORDERABLE",
            Status::PossiblyBiorderable => "POSSIBLY_BIORDERABLE",
            Status::Inconclusive => "INCONCLUSIVE",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub chains: Vec<Chain>,
    pub distinctness: Option<DistinctnessCertificate>,
}

impl Verdict {
    pub fn is_certified(&self) -> bool {
        self.distinctness
            .as_ref()
            .is_some_and(DistinctnessCertificate::is_certified)
    }
}

fn verdict_from(chains: Vec<Chain>, cert: Option<&DistinctnessCertificate>) -> Verdict {
    let certified = cert.is_some_and(DistinctnessCertificate::is_certified);
    // an empty chain set only rules out biorders once the generators are
    // known to be pairwise distinct
    let status = if !chains.is_empty() {
        Status::PossiblyBiorderable
    } else if certified {
        Status::NotBiorderable
    } else {
        Status::Inconclusive
    };
    Verdict {
        status,
        chains,
        distinctness: cert.cloned(),
    }
}

pub fn analyze(p: &KnotPresentation, cert: Option<&DistinctnessCertificate>) -> Verdict {
    let cs = derive_betweenness(p);
    verdict_from(backtracking_orders(&cs, p.generator_count()), cert)
}

/// Like [`analyze`], but also runs the exhaustive oracle and fails on any
/// disagreement. Presentations beyond the oracle's size limit are only
/// solved by backtracking.
pub fn analyze_self_checked(
    p: &KnotPresentation,
    cert: Option<&DistinctnessCertificate>,
) -> Result<Verdict> {
    let cs = derive_betweenness(p);
    let chains = backtracking_orders(&cs, p.generator_count());
    if p.generator_count() <= MAX_BRUTE_FORCE_GENERATORS {
        let oracle = brute_force_orders(&cs, p.generator_count())?;
        if oracle != chains {
            return Err(Error::SolverDisagreement {
                knot: p.name().to_string(),
                exhaustive: oracle.len(),
                backtracking: chains.len(),
            });
        }
    }
    Ok(verdict_from(chains, cert))
}
