//! Fox colorings, the knot determinant and distinctness certificates.
//!
//! A coloring mod `n` is a quandle homomorphism to `Core(Z_n)`, where
//! `x*y = 2y - x`. At a crossing `x*y=z` this reads `2y - x - z = 0 (mod n)`,
//! one row of the coloring matrix. All colorings mod `n` are read off the
//! integer Smith decomposition `L * M * R = D`: with `v = R w`, the system
//! becomes `d_i w_i = 0 (mod n)` coordinate by coordinate.

mod matrix;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::presentation::{GenId, KnotPresentation};

pub use matrix::{
    bareiss_determinant, smith_decomposition, smith_normal_form, IntMatrix, InvariantFactors,
    SmithDecomposition,
};

/// Full enumeration of a coloring space is skipped above this many colorings.
pub const ENUMERATION_CAP: u64 = 100_000;

/// Number of sample colorings kept when a space is too large to enumerate.
pub const SAMPLE_COUNT: usize = 64;

/// Default upper bound of the small-modulus sweep in distinctness search.
pub const DEFAULT_MAX_MODULUS: u64 = 64;

/// Crossing-by-arc matrix: the row for `x*y=z` has `+2` at `y` and `-1` at `x`
/// and `z`, accumulated where columns coincide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringMatrix(IntMatrix);

impl ColoringMatrix {
    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn rows_sum_to_zero(&self) -> bool {
        (0..self.0.rows()).all(|i| self.0.row(i).iter().sum::<BigInt>().is_zero())
    }
}

pub fn coloring_matrix(p: &KnotPresentation) -> ColoringMatrix {
    let mut m = IntMatrix::zeros(p.relations().len(), p.generator_count());
    for (i, rel) in p.relations().iter().enumerate() {
        m[(i, rel.operator.0)] += 2;
        m[(i, rel.operand.0)] -= 1;
        m[(i, rel.result.0)] -= 1;
    }
    ColoringMatrix(m)
}

/// `|det|` of the coloring matrix with one row and one column removed.
pub fn knot_determinant_minor(p: &KnotPresentation, row: usize, col: usize) -> Result<BigUint> {
    let m = coloring_matrix(p).0;
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok(bareiss_determinant(&m.minor(row, col)).magnitude().clone())
}

pub fn knot_determinant(p: &KnotPresentation) -> Result<BigUint> {
    knot_determinant_minor(p, 0, 0)
}

/// `x*y` in `Core(Z_n)`: `(2y - x) mod n`.
pub fn core_op(x: u64, y: u64, n: u64) -> u64 {
    let n = n as u128;
    ((2 * (y as u128) + n - (x as u128) % n) % n) as u64
}

/// Residues mod `modulus`, one per generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    pub modulus: u64,
    pub values: Vec<u64>,
}

impl Coloring {
    pub fn new(modulus: u64, values: Vec<u64>) -> Self {
        Coloring { modulus, values }
    }

    pub fn constant(modulus: u64, value: u64, generators: usize) -> Self {
        Coloring::new(modulus, vec![value % modulus; generators])
    }

    pub fn value(&self, g: GenId) -> u64 {
        self.values[g.0]
    }

    pub fn separates(&self, a: GenId, b: GenId) -> bool {
        self.values[a.0] % self.modulus != self.values[b.0] % self.modulus
    }

    /// `label=value` pairs, e.g. `a=1 b=21`.
    pub fn render(&self, p: &KnotPresentation) -> String {
        p.generators()
            .iter()
            .map(|g| format!("{}={}", g.label, self.values[g.id.0]))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(u64::to_string).collect();
        write!(f, "({})", vals.join(","))
    }
}

pub fn verify_coloring(p: &KnotPresentation, c: &Coloring) -> Result<bool> {
    if c.values.len() != p.generator_count() {
        return Err(Error::MissingAssignment {
            expected: p.generator_count(),
            got: c.values.len(),
        });
    }
    if c.modulus == 0 {
        return Err(Error::BadModulus { got: 0, min: 1 });
    }
    let n = c.modulus;
    Ok(p.relations().iter().all(|r| {
        core_op(c.value(r.operand) % n, c.value(r.operator) % n, n) == c.value(r.result) % n
    }))
}

/// One generator of the coloring group mod `n`, of the given additive order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisColoring {
    pub order: u64,
    pub coloring: Coloring,
}

/// All colorings mod `n`: the group `sum_i Z_{order_i} * basis_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringSpace {
    pub modulus: u64,
    /// Generators with order > 1; every coloring is a unique combination.
    pub basis: Vec<BasisColoring>,
    pub count: BigUint,
    /// Every coloring when `complete`, otherwise a sample.
    pub colorings: Vec<Coloring>,
    pub complete: bool,
}

impl ColoringSpace {
    pub fn contains(&self, values: &[u64]) -> bool {
        self.colorings.iter().any(|c| c.values == values)
    }

    /// Number of colorings that are not constant.
    pub fn nontrivial_count(&self) -> BigUint {
        &self.count - BigUint::from(self.modulus)
    }
}

/// Precomputed Smith decomposition of a presentation's coloring matrix.
#[derive(Debug, Clone)]
pub struct ColoringSystem {
    generators: usize,
    smith: SmithDecomposition,
}

impl ColoringSystem {
    pub fn new(p: &KnotPresentation) -> Self {
        ColoringSystem {
            generators: p.generator_count(),
            smith: smith_decomposition(coloring_matrix(p).matrix()),
        }
    }

    pub fn invariant_factors(&self) -> InvariantFactors {
        self.smith.invariant_factors()
    }

    pub fn basis(&self, n: u64) -> Vec<BasisColoring> {
        let nb = BigInt::from(n);
        let mut out = Vec::new();
        for i in 0..self.generators {
            let d = self.smith.diagonal_entry(i);
            let order = d.gcd(&nb).to_u64().expect("order divides modulus");
            if order <= 1 {
                continue;
            }
            let step = BigInt::from(n / order);
            let values = self
                .smith
                .right
                .column(i)
                .iter()
                .map(|v| (v * &step).mod_floor(&nb).to_u64().unwrap())
                .collect();
            out.push(BasisColoring {
                order,
                coloring: Coloring::new(n, values),
            });
        }
        out
    }

    pub fn space(&self, n: u64) -> Result<ColoringSpace> {
        if n < 2 {
            return Err(Error::BadModulus { got: n, min: 2 });
        }
        let basis = self.basis(n);
        let count = basis
            .iter()
            .fold(BigUint::one(), |acc, b| acc * BigUint::from(b.order));
        let complete = count <= BigUint::from(ENUMERATION_CAP);
        let limit = if complete {
            count.to_usize().unwrap()
        } else {
            SAMPLE_COUNT
        };
        let mut colorings = enumerate(&basis, n, self.generators, limit);
        colorings.sort();
        Ok(ColoringSpace {
            modulus: n,
            basis,
            count,
            colorings,
            complete,
        })
    }
}

/// The first `limit` combinations of the basis, in mixed-radix order.
fn enumerate(basis: &[BasisColoring], n: u64, generators: usize, limit: usize) -> Vec<Coloring> {
    let mut out = Vec::with_capacity(limit);
    let mut coeffs = vec![0u64; basis.len()];
    'outer: while out.len() < limit {
        let mut values = vec![0u64; generators];
        for (k, b) in coeffs.iter().zip(basis) {
            for (v, x) in values.iter_mut().zip(&b.coloring.values) {
                *v = ((*v as u128 + (*k as u128) * (*x as u128)) % n as u128) as u64;
            }
        }
        out.push(Coloring::new(n, values));
        for (k, b) in coeffs.iter_mut().zip(basis) {
            *k += 1;
            if *k < b.order {
                continue 'outer;
            }
            *k = 0;
        }
        break;
    }
    out
}

pub fn solve_colorings_mod(p: &KnotPresentation, n: u64) -> Result<ColoringSpace> {
    ColoringSystem::new(p).space(n)
}

/// Witness that two generators are distinct: a coloring giving them different values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairWitness {
    pub first: GenId,
    pub second: GenId,
    /// Index into [`DistinctnessCertificate::colorings`], `None` if unwitnessed.
    pub witness: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinctnessCertificate {
    colorings: Vec<Coloring>,
    pairs: Vec<PairWitness>,
}

impl DistinctnessCertificate {
    fn unwitnessed(generators: usize) -> Self {
        let pairs = (0..generators)
            .flat_map(|i| (i + 1..generators).map(move |j| (i, j)))
            .map(|(i, j)| PairWitness {
                first: GenId(i),
                second: GenId(j),
                witness: None,
            })
            .collect();
        DistinctnessCertificate {
            colorings: Vec::new(),
            pairs,
        }
    }

    /// Tries to witness every open pair with a basis coloring mod `n`.
    fn absorb(&mut self, basis: &[BasisColoring]) {
        for pair in self.pairs.iter_mut().filter(|p| p.witness.is_none()) {
            let Some(b) = basis
                .iter()
                .find(|b| b.coloring.separates(pair.first, pair.second))
            else {
                continue;
            };
            let idx = match self.colorings.iter().position(|c| *c == b.coloring) {
                Some(i) => i,
                None => {
                    self.colorings.push(b.coloring.clone());
                    self.colorings.len() - 1
                }
            };
            pair.witness = Some(idx);
        }
    }

    pub fn pairs(&self) -> &[PairWitness] {
        &self.pairs
    }

    pub fn colorings(&self) -> &[Coloring] {
        &self.colorings
    }

    pub fn is_certified(&self) -> bool {
        self.pairs.iter().all(|p| p.witness.is_some())
    }

    pub fn unwitnessed_pairs(&self) -> impl Iterator<Item = &PairWitness> {
        self.pairs.iter().filter(|p| p.witness.is_none())
    }

    /// Distinct moduli of the witness colorings, ascending.
    pub fn witness_moduli(&self) -> Vec<u64> {
        self.colorings
            .iter()
            .map(|c| c.modulus)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// Checks every witness against the presentation.
    pub fn verify(&self, p: &KnotPresentation) -> bool {
        self.colorings
            .iter()
            .all(|c| verify_coloring(p, c).unwrap_or(false))
            && self.pairs.iter().all(|pair| match pair.witness {
                Some(i) => self.colorings[i].separates(pair.first, pair.second),
                None => true,
            })
    }

    pub fn summary(&self) -> String {
        if !self.is_certified() {
            let open = self.unwitnessed_pairs().count();
            return format!("not certified: {open} of {} pairs unwitnessed", self.pairs.len());
        }
        match self.colorings.as_slice() {
            [] => "certified (no generator pairs)".to_string(),
            [c] => format!("certified via single coloring mod {}", c.modulus),
            many => {
                let moduli: Vec<String> = self.witness_moduli().iter().map(u64::to_string).collect();
                format!("certified via {} colorings mod {}", many.len(), moduli.join(", "))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistinctnessOptions {
    /// Small moduli `2..=max_modulus` are tried after the determinant and its prime factors.
    pub max_modulus: u64,
}

impl Default for DistinctnessOptions {
    fn default() -> Self {
        DistinctnessOptions {
            max_modulus: DEFAULT_MAX_MODULUS,
        }
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Determinant, then its prime factors ascending, then `2..=max_modulus`.
pub fn candidate_moduli(p: &KnotPresentation, opts: &DistinctnessOptions) -> Vec<u64> {
    let mut out = Vec::new();
    if let Some(det) = knot_determinant(p).ok().and_then(|d| d.to_u64()) {
        if det >= 2 {
            out.push(det);
            out.extend(prime_factors(det));
        }
    }
    out.extend(2..=opts.max_modulus);
    let mut seen = BTreeSet::new();
    out.retain(|n| seen.insert(*n));
    out
}

/// Accumulates witnesses over `moduli` in the given order.
pub fn certify_with_moduli(p: &KnotPresentation, moduli: &[u64]) -> DistinctnessCertificate {
    let system = ColoringSystem::new(p);
    let mut cert = DistinctnessCertificate::unwitnessed(p.generator_count());
    for &n in moduli.iter().filter(|&&n| n >= 2) {
        if cert.is_certified() {
            break;
        }
        cert.absorb(&system.basis(n));
    }
    cert
}

pub fn distinctness_certificate(p: &KnotPresentation) -> DistinctnessCertificate {
    distinctness_certificate_with(p, &DistinctnessOptions::default())
}

/// Prefers the smallest single candidate modulus whose colorings separate
/// every pair on their own. If there is none, witnesses are accumulated over
/// all candidates in order (determinant, its prime factors, small moduli).
pub fn distinctness_certificate_with(
    p: &KnotPresentation,
    opts: &DistinctnessOptions,
) -> DistinctnessCertificate {
    let system = ColoringSystem::new(p);
    let candidates = candidate_moduli(p, opts);
    let mut ascending = candidates.clone();
    ascending.sort_unstable();
    for &n in &ascending {
        let mut cert = DistinctnessCertificate::unwitnessed(p.generator_count());
        cert.absorb(&system.basis(n));
        if cert.is_certified() {
            return cert;
        }
    }
    let mut cert = DistinctnessCertificate::unwitnessed(p.generator_count());
    for &n in &candidates {
        if cert.is_certified() {
            break;
        }
        cert.absorb(&system.basis(n));
    }
    cert
}
