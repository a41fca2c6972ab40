//! Dense integer matrices with arbitrary-precision entries.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r.iter().map(|&x| x.into()));
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// The matrix with row `r` and column `c` removed.
    pub fn minor(&self, r: usize, c: usize) -> IntMatrix {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != r) {
            for j in (0..self.cols).filter(|&j| j != c) {
                data.push(self[(i, j)].clone());
            }
        }
        IntMatrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            data,
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(src, j)] * k;
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, src)] * k;
            self[(i, dst)] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -&self[(r, j)];
            self[(r, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| format!("{x:>3}")).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Diagonal of the Smith normal form: `d1 | d2 | ... | dr` followed by zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantFactors {
    factors: Vec<BigUint>,
}

impl InvariantFactors {
    pub fn factors(&self) -> &[BigUint] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().filter(|d| !d.is_zero()).count()
    }

    pub fn nonzero_product(&self) -> BigUint {
        self.factors
            .iter()
            .filter(|d| !d.is_zero())
            .fold(BigUint::one(), |acc, d| acc * d)
    }

    pub fn is_divisibility_chain(&self) -> bool {
        self.factors
            .windows(2)
            .all(|w| w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero()))
    }
}

impl fmt::Display for InvariantFactors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `left * m * right == diagonal`, with `left` and `right` unimodular.
#[derive(Debug, Clone)]
pub struct SmithDecomposition {
    pub left: IntMatrix,
    pub right: IntMatrix,
    pub diagonal: IntMatrix,
}

impl SmithDecomposition {
    pub fn invariant_factors(&self) -> InvariantFactors {
        let k = self.diagonal.rows.min(self.diagonal.cols);
        InvariantFactors {
            factors: (0..k)
                .map(|i| self.diagonal[(i, i)].magnitude().clone())
                .collect(),
        }
    }

    /// The `i`-th diagonal entry, or zero past the diagonal.
    pub fn diagonal_entry(&self, i: usize) -> BigInt {
        if i < self.diagonal.rows.min(self.diagonal.cols) {
            self.diagonal[(i, i)].clone()
        } else {
            BigInt::zero()
        }
    }
}

fn smallest_nonzero(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let v = &a[(i, j)];
            if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < a[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

pub fn smith_decomposition(m: &IntMatrix) -> SmithDecomposition {
    let mut a = m.clone();
    let mut left = IntMatrix::identity(m.rows);
    let mut right = IntMatrix::identity(m.cols);

    for t in 0..m.rows.min(m.cols) {
        loop {
            let Some((pi, pj)) = smallest_nonzero(&a, t) else {
                return SmithDecomposition {
                    left,
                    right,
                    diagonal: a,
                };
            };
            a.swap_rows(t, pi);
            left.swap_rows(t, pi);
            a.swap_cols(t, pj);
            right.swap_cols(t, pj);

            let pivot = a[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..a.rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -a[(i, t)].div_floor(&pivot);
                a.add_row(i, t, &q);
                left.add_row(i, t, &q);
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..a.cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -a[(t, j)].div_floor(&pivot);
                a.add_col(j, t, &q);
                right.add_col(j, t, &q);
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // pivot must divide the rest of the block; otherwise pull an
            // offending row up and reduce again
            let offending = (t + 1..a.rows)
                .find(|&i| (t + 1..a.cols).any(|j| !a[(i, j)].is_multiple_of(&pivot)));
            match offending {
                Some(i) => {
                    a.add_row(t, i, &BigInt::one());
                    left.add_row(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if a[(t, t)].sign() == Sign::Minus {
            a.negate_row(t);
            left.negate_row(t);
        }
    }
    SmithDecomposition {
        left,
        right,
        diagonal: a,
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> InvariantFactors {
    smith_decomposition(m).invariant_factors()
}

/// Fraction-free Gaussian elimination. Panics on a non-square matrix.
pub fn bareiss_determinant(m: &IntMatrix) -> BigInt {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows;
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                a[(i, j)] = v;
            }
        }
        prev = a[(k, k)].clone();
    }
    sign * &a[(n - 1, n - 1)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Leibniz expansion: independent of elimination.
    fn leibniz(m: &IntMatrix) -> BigInt {
        let n = m.rows();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = BigInt::zero();
        permute(&mut perm, 0, m, &mut total);
        total
    }

    fn permute(perm: &mut Vec<usize>, k: usize, m: &IntMatrix, total: &mut BigInt) {
        if k == perm.len() {
            let inversions = (0..perm.len())
                .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| perm[i] > perm[j])
                .count();
            let mut prod = BigInt::one();
            for (i, &j) in perm.iter().enumerate() {
                prod *= &m[(i, j)];
            }
            if inversions % 2 == 1 {
                prod = -prod;
            }
            *total += prod;
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            permute(perm, k + 1, m, total);
            perm.swap(k, i);
        }
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if n < k {
            return vec![];
        }
        let mut out = subsets(n - 1, k);
        for mut s in subsets(n - 1, k - 1) {
            s.push(n - 1);
            out.push(s);
        }
        out
    }

    /// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1},
    /// with D_k the gcd of all k x k minors.
    fn determinantal_oracle(m: &IntMatrix) -> Vec<BigUint> {
        let kmax = m.rows().min(m.cols());
        let mut divisors = vec![BigInt::one()];
        for k in 1..=kmax {
            let mut g = BigInt::zero();
            for rs in subsets(m.rows(), k) {
                for cs in subsets(m.cols(), k) {
                    let mut sub = IntMatrix::zeros(k, k);
                    for (a, &i) in rs.iter().enumerate() {
                        for (b, &j) in cs.iter().enumerate() {
                            sub[(a, b)] = m[(i, j)].clone();
                        }
                    }
                    g = g.gcd(&leibniz(&sub));
                }
            }
            divisors.push(g);
        }
        (1..=kmax)
            .map(|k| {
                if divisors[k].is_zero() {
                    BigUint::zero()
                } else {
                    (&divisors[k] / &divisors[k - 1]).magnitude().clone()
                }
            })
            .collect()
    }

    fn factors(v: &[u32]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn identity_and_zero() {
        assert_eq!(
            smith_normal_form(&IntMatrix::identity(3)).factors(),
            factors(&[1, 1, 1])
        );
        assert_eq!(
            smith_normal_form(&IntMatrix::zeros(2, 2)).factors(),
            factors(&[0, 0])
        );
    }

    #[test]
    fn diag_two_three() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(determinantal_oracle(&m), factors(&[1, 6]));
        assert_eq!(smith_normal_form(&m).factors(), factors(&[1, 6]));
    }

    #[test]
    fn rectangular() {
        let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12]]);
        let oracle = determinantal_oracle(&m);
        assert_eq!(oracle, factors(&[2, 6]));
        assert_eq!(smith_normal_form(&m).factors(), oracle);
    }

    #[test]
    fn empty_matrix_determinant_is_one() {
        assert_eq!(bareiss_determinant(&IntMatrix::zeros(0, 0)), BigInt::one());
    }

    #[test]
    fn bareiss_needs_pivoting() {
        let m = IntMatrix::from_rows(&[vec![0, 1, 2], vec![1, 0, 3], vec![4, -3, 8]]);
        assert_eq!(bareiss_determinant(&m), leibniz(&m));
        assert_eq!(bareiss_determinant(&m), BigInt::from(-2));
    }

    #[test]
    fn large_entries_do_not_overflow() {
        let big = i64::MAX;
        let m = IntMatrix::from_rows(&[vec![big, big - 1], vec![big - 1, big]]);
        assert_eq!(bareiss_determinant(&m), leibniz(&m));
        let snf = smith_normal_form(&m);
        assert_eq!(snf.nonzero_product(), leibniz(&m).magnitude().clone());
    }

    fn small_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-6i64..=6, c), r)
                .prop_map(|rows| IntMatrix::from_rows(&rows))
        })
    }

    fn square_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..=5).prop_flat_map(|n| {
            proptest::collection::vec(proptest::collection::vec(-9i64..=9, n), n)
                .prop_map(|rows| IntMatrix::from_rows(&rows))
        })
    }

    proptest! {
        #[test]
        fn snf_matches_determinantal_divisors(m in small_matrix()) {
            let dec = smith_decomposition(&m);
            let inv = dec.invariant_factors();
            prop_assert!(inv.is_divisibility_chain());
            prop_assert_eq!(inv.factors().to_vec(), determinantal_oracle(&m));
            prop_assert_eq!(dec.left.mul(&m).mul(&dec.right), dec.diagonal.clone());
            prop_assert_eq!(bareiss_determinant(&dec.left).magnitude().clone(), BigUint::one());
            prop_assert_eq!(bareiss_determinant(&dec.right).magnitude().clone(), BigUint::one());
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    if i != j {
                        prop_assert!(dec.diagonal[(i, j)].is_zero());
                    }
                }
            }
        }

        #[test]
        fn bareiss_matches_leibniz(m in square_matrix()) {
            prop_assert_eq!(bareiss_determinant(&m), leibniz(&m));
        }
    }
}
