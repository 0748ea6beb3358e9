//! Exact integer linear algebra for abelianization.
//!
//! The Smith normal form of an integer matrix `A` is a diagonal matrix `D`
//! with `D = L * A * R` for unimodular `L`, `R` and `d_i | d_{i+1}` along the
//! diagonal. Applied to the relation matrix of a presentation (entry
//! `(i, j)` = exponent sum of generator `j` in relator `i`), the diagonal
//! gives the abelian invariants of the presented group: entries > 1 are the
//! torsion orders and zero columns contribute free rank.
//!
//! Arithmetic is exact. The elimination runs over `i64` with checked
//! operations and transparently restarts over arbitrary-precision integers
//! if anything would overflow; results are always reported exactly.

use crate::presentation::Presentation;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A rectangular integer matrix. Rows index relators, columns generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map(Vec::len).unwrap_or(0);
        assert!(rows.iter().all(|r| r.len() == ncols), "rows must have equal length");
        IntMatrix { rows: nrows, cols: ncols, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }
}

/// A matrix over arbitrary-precision integers, used for SNF transforms.
#[derive(Clone, PartialEq, Eq)]
pub struct BigMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl BigMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        BigMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_int_matrix(m: &IntMatrix) -> Self {
        BigMatrix {
            rows: m.rows,
            cols: m.cols,
            data: m.data.iter().map(|&v| BigInt::from(v)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &BigMatrix) -> BigMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = BigMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.data.clone();
        let at = |a: &[BigInt], i: usize, j: usize| a[i * n + j].clone();
        let mut prev = BigInt::one();
        let mut sign = BigInt::one();
        for k in 0..n - 1 {
            if at(&a, k, k).is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !at(&a, i, k).is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..n {
                    a.swap(k * n + j, swap * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (at(&a, i, j) * at(&a, k, k) - at(&a, i, k) * at(&a, k, j)) / &prev;
                    a[i * n + j] = v;
                }
                a[i * n + k] = BigInt::zero();
            }
            prev = at(&a, k, k);
        }
        sign * at(&a, n - 1, n - 1)
    }
}

impl fmt::Debug for BigMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        write!(f, "{:?}", rows)
    }
}

/// Result of a Smith normal form computation: `left * input * right` equals
/// the diagonal matrix described by `diagonal` (padded with zeros to the
/// input's shape).
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub diagonal: Vec<BigInt>,
    pub left: BigMatrix,
    pub right: BigMatrix,
}

/// Abelian invariants of a presented group: `Z^free_rank` plus cyclic
/// factors of the listed torsion orders in divisibility order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "trivial");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{}", r)),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{}", t));
        }
        write!(f, "{}", parts.join(" x "))
    }
}

/// Exponent-sum matrix of a presentation: rows are relators, columns
/// generators.
pub fn relation_matrix(p: &Presentation) -> IntMatrix {
    let mut m = IntMatrix::new(p.relator_count(), p.generator_count());
    for (i, r) in p.relators().iter().enumerate() {
        for j in 1..=p.generator_count() {
            m.set(i, j - 1, r.exponent_sum(j));
        }
    }
    m
}

/// Smith normal form with transforms. Diagonal entries are nonnegative and
/// satisfy the divisibility chain; the result is re-verified by multiplying
/// back before returning.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let result = match snf_generic(&I64Mat::from(m)) {
        Some(r) => r.into_big(),
        // i64 overflowed somewhere: redo the whole computation in BigInt.
        None => snf_generic(&BigIntMat::from(m)).expect("bigint arithmetic cannot overflow").into_big(),
    };
    verify_snf(m, &result);
    result
}

/// Abelianization of the presented group, read off the SNF diagonal.
pub fn abelian_invariants(p: &Presentation) -> AbelianInvariants {
    let snf = smith_normal_form(&relation_matrix(p));
    let nonzero = snf.diagonal.iter().filter(|d| !d.is_zero()).count();
    AbelianInvariants {
        free_rank: p.generator_count() - nonzero,
        torsion: snf.diagonal.iter().filter(|d| **d > BigInt::one()).cloned().collect(),
    }
}

/// True iff the presented group has trivial abelianization.
pub fn is_perfect(p: &Presentation) -> bool {
    abelian_invariants(p).is_trivial()
}

fn verify_snf(input: &IntMatrix, r: &SnfResult) {
    let product = r.left.mul(&BigMatrix::from_int_matrix(input)).mul(&r.right);
    for i in 0..product.rows() {
        for j in 0..product.cols() {
            let expected =
                if i == j && i < r.diagonal.len() { r.diagonal[i].clone() } else { BigInt::zero() };
            assert_eq!(*product.get(i, j), expected, "SNF reconstruction failed at ({i}, {j})");
        }
    }
    for w in r.diagonal.windows(2) {
        assert!(
            w[1].is_zero() && w[0].is_zero() || !w[0].is_zero() && (&w[1] % &w[0]).is_zero(),
            "SNF divisibility chain violated"
        );
    }
}

// ---------------------------------------------------------------------------
// Generic elimination core, instantiated at i64 (checked) and BigInt.
// ---------------------------------------------------------------------------

trait SnfScalar: Clone + Ord {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn abs(&self) -> Self;
    fn neg(&self) -> Option<Self>;
    fn add(&self, other: &Self) -> Option<Self>;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn sub(&self, other: &Self) -> Option<Self>;
    /// Truncated division: `self = q * d + r` with `|r| < |d|`.
    fn div_rem(&self, d: &Self) -> Option<(Self, Self)>;
    fn to_big(&self) -> BigInt;
}

impl SnfScalar for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn abs(&self) -> Self {
        i64::wrapping_abs(*self)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn add(&self, other: &Self) -> Option<Self> {
        self.checked_add(*other)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other)
    }
    fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        if *d == 0 {
            return None;
        }
        Some((self.checked_div(*d)?, self.checked_rem(*d)?))
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl SnfScalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        if Zero::is_zero(d) {
            return None;
        }
        Some(Integer::div_rem(self, d))
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

type I64Mat = Mat<i64>;
type BigIntMat = Mat<BigInt>;

impl<T: SnfScalar> Mat<T> {
    fn identity(n: usize) -> Self {
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = T::one();
        }
        Mat { rows: n, cols: n, data }
    }

    fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[a] -= q * row[b]
    fn row_axpy(&mut self, a: usize, b: usize, q: &T) -> Option<()> {
        for j in 0..self.cols {
            let v = self.get(a, j).sub(&q.mul(self.get(b, j))?)?;
            self.set(a, j, v);
        }
        Some(())
    }

    /// col[a] -= q * col[b]
    fn col_axpy(&mut self, a: usize, b: usize, q: &T) -> Option<()> {
        for i in 0..self.rows {
            let v = self.get(i, a).sub(&q.mul(self.get(i, b))?)?;
            self.set(i, a, v);
        }
        Some(())
    }

    fn negate_row(&mut self, i: usize) -> Option<()> {
        for j in 0..self.cols {
            let v = self.get(i, j).neg()?;
            self.set(i, j, v);
        }
        Some(())
    }

    fn into_big(self) -> BigMatrix {
        BigMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(SnfScalar::to_big).collect(),
        }
    }
}

impl From<&IntMatrix> for I64Mat {
    fn from(m: &IntMatrix) -> Self {
        Mat { rows: m.rows, cols: m.cols, data: m.data.clone() }
    }
}

impl From<&IntMatrix> for BigIntMat {
    fn from(m: &IntMatrix) -> Self {
        Mat { rows: m.rows, cols: m.cols, data: m.data.iter().map(|&v| BigInt::from(v)).collect() }
    }
}

struct SnfWork<T> {
    a: Mat<T>,
    left: Mat<T>,
    right: Mat<T>,
}

impl<T: SnfScalar> SnfWork<T> {
    fn into_big(self) -> SnfResult {
        let n = self.a.rows.min(self.a.cols);
        let diagonal = (0..n).map(|i| self.a.get(i, i).to_big()).collect();
        SnfResult { diagonal, left: self.left.into_big(), right: self.right.into_big() }
    }
}

/// Diagonalizes by repeated pivot-and-reduce; returns `None` on arithmetic
/// overflow in the scalar type.
///
/// Pivot rule: smallest nonzero absolute value in the remaining submatrix,
/// ties broken by lowest (row, column). This keeps entry growth down and is
/// deterministic.
fn snf_generic<T: SnfScalar>(input: &Mat<T>) -> Option<SnfWork<T>> {
    let mut a = Mat { rows: input.rows, cols: input.cols, data: input.data.clone() };
    let mut left = Mat::identity(input.rows);
    let mut right = Mat::identity(input.cols);
    let n = a.rows.min(a.cols);

    for k in 0..n {
        loop {
            let Some((pi, pj)) = pivot(&a, k) else {
                // Remaining submatrix is zero; diagonalization below k is done.
                break;
            };
            a.swap_rows(k, pi);
            left.swap_rows(k, pi);
            a.swap_cols(k, pj);
            right.swap_cols(k, pj);

            let mut dirty = false;
            for i in k + 1..a.rows {
                if !a.get(i, k).is_zero() {
                    let (q, _) = a.get(i, k).div_rem(a.get(k, k))?;
                    a.row_axpy(i, k, &q)?;
                    left.row_axpy(i, k, &q)?;
                    if !a.get(i, k).is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in k + 1..a.cols {
                if !a.get(k, j).is_zero() {
                    let (q, _) = a.get(k, j).div_rem(a.get(k, k))?;
                    a.col_axpy(j, k, &q)?;
                    right.col_axpy(j, k, &q)?;
                    if !a.get(k, j).is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // Row and column k are clear. The pivot must also divide every
            // remaining entry for the invariant-factor chain; if not, fold
            // the offending row in and keep reducing.
            let offender = (k + 1..a.rows)
                .flat_map(|i| (k + 1..a.cols).map(move |j| (i, j)))
                .find(|&(i, j)| {
                    !a.get(i, j).is_zero()
                        && !a.get(i, j).div_rem(a.get(k, k)).map_or(true, |(_, r)| r.is_zero())
                });
            match offender {
                Some((i, _)) => {
                    // Add row i to row k (q = -1), creating entries the
                    // smaller pivot search will pick up.
                    let minus_one = T::zero().sub(&T::one())?;
                    a.row_axpy(k, i, &minus_one)?;
                    left.row_axpy(k, i, &minus_one)?;
                }
                None => break,
            }
        }
    }

    // Normalize signs so the diagonal is nonnegative.
    for k in 0..n {
        if *a.get(k, k) < T::zero() {
            a.negate_row(k)?;
            left.negate_row(k)?;
        }
    }
    Some(SnfWork { a, left, right })
}

fn pivot<T: SnfScalar>(a: &Mat<T>, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(T, usize, usize)> = None;
    for i in k..a.rows {
        for j in k..a.cols {
            let v = a.get(i, j);
            if v.is_zero() {
                continue;
            }
            let mag = v.abs();
            match &best {
                Some((m, _, _)) if *m <= mag => {}
                _ => best = Some((mag, i, j)),
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    fn w(letters: &[i32]) -> Word {
        Word::from_letters(letters.to_vec()).unwrap()
    }

    fn diag_i64(r: &SnfResult) -> Vec<i64> {
        r.diagonal.iter().map(|d| i64::try_from(d).unwrap()).collect()
    }

    #[test]
    fn relation_matrix_of_knot_exterior_presentation() {
        let p = Presentation::new(
            ["x1", "x2", "x3"],
            vec![w(&[1, 2, 1, -2, -1, -2]), w(&[-2, -3, -2, 3, 2, 3]), w(&[-1, 2, -3])],
        )
        .unwrap();
        let m = relation_matrix(&p);
        let rows: Vec<Vec<i64>> =
            (0..3).map(|i| (0..3).map(|j| m.get(i, j)).collect()).collect();
        assert_eq!(rows, vec![vec![1, -1, 0], vec![0, -1, 1], vec![-1, 1, -1]]);
        assert_eq!(BigMatrix::from_int_matrix(&m).determinant(), BigInt::from(1));
    }

    #[test]
    fn relation_matrix_first_row_of_two_generator_form() {
        let p = Presentation::new(["a", "b"], vec![w(&[1, 1, -2, -2, -2])]).unwrap();
        let m = relation_matrix(&p);
        assert_eq!((m.get(0, 0), m.get(0, 1)), (2, -3));
    }

    #[test]
    fn relation_matrix_with_no_relators_is_empty() {
        let p = Presentation::new(["a", "b"], vec![]).unwrap();
        let m = relation_matrix(&p);
        assert_eq!((m.rows(), m.cols()), (0, 2));
    }

    #[test]
    fn snf_of_identity_is_identity() {
        let m = IntMatrix::from_rows(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let r = smith_normal_form(&m);
        assert_eq!(diag_i64(&r), vec![1, 1, 1]);
        assert_eq!(r.left, BigMatrix::identity(3));
        assert_eq!(r.right, BigMatrix::identity(3));
    }

    #[test]
    fn snf_of_triangle_relation_matrix() {
        // gcd of entries is 1 and gcd of the 2x2 minors {6, 10, -15} is 1,
        // so both invariant factors are 1.
        let m = IntMatrix::from_rows(vec![vec![2, 0], vec![0, 3], vec![5, 5]]);
        let r = smith_normal_form(&m);
        assert_eq!(diag_i64(&r), vec![1, 1]);
    }

    #[test]
    fn snf_of_determinant_one_matrix_is_all_ones() {
        let m = IntMatrix::from_rows(vec![vec![1, -1, 0], vec![0, -1, 1], vec![-1, 1, -1]]);
        let r = smith_normal_form(&m);
        assert_eq!(diag_i64(&r), vec![1, 1, 1]);
    }

    #[test]
    fn transforms_are_unimodular() {
        let m = IntMatrix::from_rows(vec![vec![4, 6], vec![10, 16]]);
        let r = smith_normal_form(&m);
        assert_eq!(r.left.determinant().abs(), BigInt::one().into());
        assert_eq!(r.right.determinant().abs(), BigInt::one().into());
        assert_eq!(diag_i64(&r), vec![2, 2]);
    }

    #[test]
    fn snf_survives_i64_overflow_by_promoting() {
        let big = i64::MAX / 2;
        let m = IntMatrix::from_rows(vec![vec![big, big - 1], vec![3, 5]]);
        let r = smith_normal_form(&m);
        assert!(!r.diagonal[0].is_zero());
    }

    #[test]
    fn abelian_invariants_of_cyclic_group() {
        let p = Presentation::new(["a"], vec![w(&[1, 1, 1, 1, 1])]).unwrap();
        let inv = abelian_invariants(&p);
        assert_eq!(inv, AbelianInvariants { free_rank: 0, torsion: vec![BigInt::from(5)] });
        assert!(!is_perfect(&p));
        assert_eq!(inv.to_string(), "Z/5");
    }

    #[test]
    fn knot_exterior_presentation_is_perfect() {
        let p = Presentation::new(
            ["x1", "x2", "x3"],
            vec![w(&[1, 2, 1, -2, -1, -2]), w(&[-2, -3, -2, 3, 2, 3]), w(&[-1, 2, -3])],
        )
        .unwrap();
        assert!(abelian_invariants(&p).is_trivial());
        assert!(is_perfect(&p));
    }

    #[test]
    fn triangle_presentation_is_perfect() {
        let p = Presentation::new(
            ["a", "b"],
            vec![w(&[1, 1]), w(&[2, 2, 2]), w(&[1, 2]).repeat(5)],
        )
        .unwrap();
        assert!(is_perfect(&p));
    }

    #[test]
    fn free_group_is_not_perfect() {
        let p = Presentation::new(["a"], vec![]).unwrap();
        let inv = abelian_invariants(&p);
        assert_eq!(inv, AbelianInvariants { free_rank: 1, torsion: vec![] });
        assert_eq!(inv.to_string(), "Z");
    }
}
