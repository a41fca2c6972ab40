//! Betweenness constraints derived from crossing relations.
//!
//! In a biordered quandle with distinct `x`, `y`, the product `x*y` lies strictly
//! between `x` and `y`. A relation `x*y=z` therefore forces the chain `x<>z<>y`:
//! either `x<z<y` or `x>z>y`.

use crate::presentation::{GenId, KnotPresentation};
use crate::solver::Chain;
use crate::error::Result;

/// `middle` lies strictly between the two ends. Ends are stored with the
/// smaller generator index first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BetweennessConstraint {
    middle: GenId,
    ends: (GenId, GenId),
}

impl BetweennessConstraint {
    /// Returns `None` when the three generators are not pairwise distinct.
    pub fn new(middle: GenId, end_a: GenId, end_b: GenId) -> Option<Self> {
        if middle == end_a || middle == end_b || end_a == end_b {
            return None;
        }
        let ends = if end_a <= end_b {
            (end_a, end_b)
        } else {
            (end_b, end_a)
        };
        Some(BetweennessConstraint { middle, ends })
    }

    pub fn middle(&self) -> GenId {
        self.middle
    }

    pub fn ends(&self) -> (GenId, GenId) {
        self.ends
    }

    pub fn generators(&self) -> [GenId; 3] {
        [self.ends.0, self.middle, self.ends.1]
    }

    /// True if `middle` sits strictly between the ends, given a position lookup.
    pub(crate) fn holds_at(&self, pos: impl Fn(GenId) -> usize) -> bool {
        let (a, m, b) = (pos(self.ends.0), pos(self.middle), pos(self.ends.1));
        (a < m && m < b) || (a > m && m > b)
    }

    /// Renders as `x<>z<>y` with the given separator.
    pub fn render(&self, p: &KnotPresentation, sep: &str) -> String {
        format!(
            "{}{sep}{}{sep}{}",
            p.label(self.ends.0),
            p.label(self.middle),
            p.label(self.ends.1)
        )
    }
}

/// A relation that forces a generator to lie between itself and another one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Contradiction {
    pub relation_index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintSet {
    constraints: Vec<BetweennessConstraint>,
    /// Relation indices that produced each constraint, parallel to `constraints`.
    origins: Vec<Vec<usize>>,
    tautologies: Vec<usize>,
    contradictions: Vec<Contradiction>,
}

impl ConstraintSet {
    /// Builds a set directly from constraints, deduplicating.
    pub fn from_constraints(items: impl IntoIterator<Item = BetweennessConstraint>) -> Self {
        let mut set = ConstraintSet::empty();
        for (i, c) in items.into_iter().enumerate() {
            set.insert(c, i);
        }
        set
    }

    fn empty() -> Self {
        ConstraintSet {
            constraints: Vec::new(),
            origins: Vec::new(),
            tautologies: Vec::new(),
            contradictions: Vec::new(),
        }
    }

    fn insert(&mut self, c: BetweennessConstraint, origin: usize) {
        match self.constraints.iter().position(|x| *x == c) {
            Some(k) => self.origins[k].push(origin),
            None => {
                self.constraints.push(c);
                self.origins.push(vec![origin]);
            }
        }
    }

    pub fn constraints(&self) -> &[BetweennessConstraint] {
        &self.constraints
    }

    pub fn origins(&self) -> &[Vec<usize>] {
        &self.origins
    }

    pub fn tautologies(&self) -> &[usize] {
        &self.tautologies
    }

    pub fn contradictions(&self) -> &[Contradiction] {
        &self.contradictions
    }

    pub fn has_contradiction(&self) -> bool {
        !self.contradictions.is_empty()
    }

    pub fn len(&self) -> usize {
        self.constraints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }

    /// Relations accounted for: constraint origins, tautologies and contradictions.
    pub fn relation_count(&self) -> usize {
        self.origins.iter().map(Vec::len).sum::<usize>()
            + self.tautologies.len()
            + self.contradictions.len()
    }

    /// Largest generator index referenced, plus one.
    pub fn min_generator_count(&self) -> usize {
        self.constraints
            .iter()
            .flat_map(|c| c.generators())
            .map(|g| g.0 + 1)
            .max()
            .unwrap_or(0)
    }

    /// Returns a copy with one more constraint.
    pub fn with(&self, c: BetweennessConstraint) -> Self {
        let mut next = self.clone();
        let origin = next.relation_count();
        next.insert(c, origin);
        next
    }
}

/// Translates every relation `x*y=z` into the constraint `x<>z<>y`.
pub fn derive_betweenness(p: &KnotPresentation) -> ConstraintSet {
    let mut set = ConstraintSet::empty();
    for (i, rel) in p.relations().iter().enumerate() {
        if rel.is_tautology() {
            set.tautologies.push(i);
            continue;
        }
        match BetweennessConstraint::new(rel.result, rel.operand, rel.operator) {
            Some(c) => set.insert(c, i),
            None => set.contradictions.push(Contradiction { relation_index: i }),
        }
    }
    set
}

/// True iff the chain places `c.middle` strictly between the ends.
pub fn satisfies(chain: &Chain, c: &BetweennessConstraint) -> Result<bool> {
    let mut pos = [0usize; 3];
    for (slot, g) in pos.iter_mut().zip(c.generators()) {
        *slot = chain.position(g)?;
    }
    Ok((pos[0] < pos[1] && pos[1] < pos[2]) || (pos[0] > pos[1] && pos[1] > pos[2]))
}
