//! Exact integer and rational linear algebra.
//!
//! Normal forms work on arbitrary-precision integers. Pivots are chosen
//! deterministically (smallest nonzero absolute value, then lowest index), so
//! every decomposition is reproducible.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Dense integer matrix with row-major storage.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from `i64` rows. Panics on ragged input.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        Self {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(BigInt::zero(), |acc, k| {
                acc + self.get(i, k) * other.get(k, j)
            })
        })
    }

    /// Multiplies the matrix by an integer column vector.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Entries as `i64` rows, if they all fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(ToPrimitive::to_i64).collect())
            .collect()
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

    /// row[target] -= factor * row[source]
    fn sub_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let delta = &self.data[source * self.cols + j] * factor;
            self.data[target * self.cols + j] -= delta;
        }
    }

    /// col[target] -= factor * col[source]
    fn sub_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let delta = &self.data[i * self.cols + source] * factor;
            self.data[i * self.cols + target] -= delta;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let x = std::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = -x;
        }
    }

    /// Rank over the rationals, by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        bareiss(self.clone()).0
    }

    /// Determinant of a square matrix, by fraction-free elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        if self.rows == 0 {
            return BigInt::one();
        }
        let (rank, det) = bareiss(self.clone());
        if rank < self.rows {
            BigInt::zero()
        } else {
            det
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Returns (rank, signed determinant of the leading minor when full rank).
fn bareiss(mut m: IntMatrix) -> (usize, BigInt) {
    let (rows, cols) = (m.rows, m.cols);
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m.get(r, col).is_zero()) else {
            continue;
        };
        if p != rank {
            m.swap_rows(p, rank);
            sign = -sign;
        }
        let pivot = m.get(rank, col).clone();
        for r in rank + 1..rows {
            let factor = m.get(r, col).clone();
            for c in col..cols {
                let v = (&pivot * m.get(r, c) - &factor * m.get(rank, c)) / &prev;
                m.set(r, c, v);
            }
        }
        prev = pivot;
        rank += 1;
    }
    (rank, sign * prev)
}

/// Index of the nonzero entry of smallest absolute value among `candidates`,
/// lowest position first on ties.
fn smallest_nonzero<'a, I>(candidates: I) -> Option<usize>
where
    I: Iterator<Item = (usize, &'a BigInt)>,
{
    let mut best: Option<(usize, BigInt)> = None;
    for (idx, x) in candidates {
        if x.is_zero() {
            continue;
        }
        let a = x.abs();
        if best.as_ref().is_none_or(|(_, b)| a < *b) {
            best = Some((idx, a));
        }
    }
    best.map(|(i, _)| i)
}

/// Row Hermite normal form: returns `(H, U)` with `U` unimodular and `U·A = H`.
///
/// `H` is in row echelon form with positive pivots and the entries above each
/// pivot reduced into `[0, pivot)`.
pub fn hnf_decompose(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = a.clone();
    let mut u = IntMatrix::identity(a.rows);
    let mut pivot_row = 0;
    for col in 0..a.cols {
        if pivot_row == a.rows {
            break;
        }
        let mut found = false;
        loop {
            let Some(best) = smallest_nonzero((pivot_row..a.rows).map(|r| (r, h.get(r, col))))
            else {
                break;
            };
            found = true;
            h.swap_rows(best, pivot_row);
            u.swap_rows(best, pivot_row);
            let pivot = h.get(pivot_row, col).clone();
            let mut clean = true;
            for r in pivot_row + 1..a.rows {
                if h.get(r, col).is_zero() {
                    continue;
                }
                let q = h.get(r, col).div_floor(&pivot);
                h.sub_row_multiple(r, pivot_row, &q);
                u.sub_row_multiple(r, pivot_row, &q);
                if !h.get(r, col).is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if !found {
            continue;
        }
        if h.get(pivot_row, col).is_negative() {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        let pivot = h.get(pivot_row, col).clone();
        for r in 0..pivot_row {
            let q = h.get(r, col).div_floor(&pivot);
            h.sub_row_multiple(r, pivot_row, &q);
            u.sub_row_multiple(r, pivot_row, &q);
        }
        pivot_row += 1;
    }
    (h, u)
}

/// Smith normal form `U·A·V = S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// Nonzero diagonal entries of `S`, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.s.rows.min(self.s.cols))
            .map(|i| self.s.get(i, i).clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

pub fn snf_decompose(a: &IntMatrix) -> SnfResult {
    let (rows, cols) = (a.rows, a.cols);
    let mut s = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    for t in 0..rows.min(cols) {
        loop {
            let width = cols - t;
            let best = smallest_nonzero(
                (t..rows)
                    .flat_map(|r| (t..cols).map(move |c| (r, c)))
                    .enumerate()
                    .map(|(idx, (r, c))| (idx, s.get(r, c))),
            );
            let Some(idx) = best else {
                return SnfResult { s, u, v };
            };
            let (r, c) = (t + idx / width, t + idx % width);
            s.swap_rows(r, t);
            u.swap_rows(r, t);
            s.swap_cols(c, t);
            v.swap_cols(c, t);

            let pivot = s.get(t, t).clone();
            let mut clean = true;
            for r in t + 1..rows {
                if s.get(r, t).is_zero() {
                    continue;
                }
                let q = s.get(r, t).div_floor(&pivot);
                s.sub_row_multiple(r, t, &q);
                u.sub_row_multiple(r, t, &q);
                clean &= s.get(r, t).is_zero();
            }
            for c in t + 1..cols {
                if s.get(t, c).is_zero() {
                    continue;
                }
                let q = s.get(t, c).div_floor(&pivot);
                s.sub_col_multiple(c, t, &q);
                v.sub_col_multiple(c, t, &q);
                clean &= s.get(t, c).is_zero();
            }
            if !clean {
                continue;
            }
            let offender =
                (t + 1..rows).find(|&r| (t + 1..cols).any(|c| !s.get(r, c).is_multiple_of(&pivot)));
            match offender {
                Some(r) => {
                    let minus_one = -BigInt::one();
                    s.sub_row_multiple(t, r, &minus_one);
                    u.sub_row_multiple(t, r, &minus_one);
                }
                None => break,
            }
        }
        if s.get(t, t).is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    SnfResult { s, u, v }
}

/// Inverse of a unimodular matrix, or `None` if `m` is not unimodular.
pub fn inverse_unimodular(m: &IntMatrix) -> Option<IntMatrix> {
    if m.rows != m.cols {
        return None;
    }
    let (h, u) = hnf_decompose(m);
    (h == IntMatrix::identity(m.rows)).then_some(u)
}

/// Z-basis (as rows) of the integer kernel `{x : A·x = 0}`.
pub fn integer_kernel(a: &IntMatrix) -> IntMatrix {
    let (h, u) = hnf_decompose(&a.transpose());
    let zero_rows: Vec<usize> = (0..h.rows)
        .filter(|&i| h.row(i).iter().all(Zero::is_zero))
        .collect();
    IntMatrix::from_fn(zero_rows.len(), u.cols, |i, j| {
        u.get(zero_rows[i], j).clone()
    })
}

/// Z-basis, in Hermite normal form, of the saturation `span_Q(rows) ∩ Z^n`.
pub fn saturated_row_basis(a: &IntMatrix) -> IntMatrix {
    let snf = snf_decompose(a);
    let rank = snf.rank();
    let v_inv = inverse_unimodular(&snf.v).expect("SNF column transform is unimodular");
    let basis = IntMatrix::from_fn(rank, a.cols, |i, j| v_inv.get(i, j).clone());
    let (h, _) = hnf_decompose(&basis);
    IntMatrix::from_fn(rank, a.cols, |i, j| h.get(i, j).clone())
}

/// Solves `Σ x_i·columns[i] = target` over the rationals.
///
/// Returns `None` when the system is inconsistent. When the columns are
/// dependent the free variables are set to zero.
pub fn solve_rational(
    columns: &[Vec<BigRational>],
    target: &[BigRational],
) -> Option<Vec<BigRational>> {
    let n = target.len();
    let k = columns.len();
    // augmented n x (k+1)
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..n).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..n {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=k {
                    let delta = &f * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == n {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); k];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][k].clone();
    }
    Some(x)
}

pub fn to_rational(v: &[i64]) -> Vec<BigRational> {
    v.iter()
        .map(|&x| BigRational::from_integer(BigInt::from(x)))
        .collect()
}

/// Rank of a list of `i64` vectors over the rationals.
pub fn rank_of(vectors: &[Vec<i64>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    IntMatrix::from_rows(vectors).rank()
}

pub fn gcd_of(values: &[i64]) -> i64 {
    values.iter().fold(0i64, |g, &x| g.gcd(&x))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinationError {
    #[error("generators are linearly dependent")]
    DependentGenerators,
    #[error("rational solution is not integral")]
    NonIntegralSolution,
    #[error("coefficient {0} is not positive")]
    NonPositive(i64),
}

/// Writes `target` as a positive integer combination of linearly independent
/// `generators`.
///
/// `Ok(None)` means `target` is not in the span of the generators.
pub fn positive_integer_combination(
    target: &[i64],
    generators: &[Vec<i64>],
) -> Result<Option<Vec<i64>>, CombinationError> {
    if rank_of(generators) < generators.len() {
        return Err(CombinationError::DependentGenerators);
    }
    let cols: Vec<Vec<BigRational>> = generators.iter().map(|g| to_rational(g)).collect();
    let Some(sol) = solve_rational(&cols, &to_rational(target)) else {
        return Ok(None);
    };
    let mut out = Vec::with_capacity(sol.len());
    for q in &sol {
        if !q.is_integer() {
            return Err(CombinationError::NonIntegralSolution);
        }
        out.push(
            q.to_integer()
                .to_i64()
                .ok_or(CombinationError::NonIntegralSolution)?,
        );
    }
    if let Some(&bad) = out.iter().find(|&&b| b <= 0) {
        return Err(CombinationError::NonPositive(bad));
    }
    Ok(Some(out))
}
