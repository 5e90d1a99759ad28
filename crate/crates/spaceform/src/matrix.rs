//! Dense arbitrary-precision integer matrices, certified Smith normal form,
//! fraction-free determinants, and mod-2 rank.
//!
//! The Smith normal form routine maintains the unimodular transforms `U`, `V`
//! *and their inverses* through every elementary operation. Correctness never
//! rests on the elimination strategy: each call re-multiplies `U·A·V` and the
//! inverse pairs and fails loudly if anything disagrees. Holding exact integer
//! inverses proves `|det U| = |det V| = 1` without computing determinants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Errors from integer-matrix computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    /// Re-multiplication of the claimed decomposition failed (internal bug).
    #[error("Smith normal form certification failed: {0}")]
    SnfCertificationFailure(&'static str),
    /// A square-matrix operation received a non-square input.
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    /// Dimensions do not line up for the requested operation.
    #[error("dimension mismatch: ({0}x{1}) vs ({2}x{3})")]
    DimensionMismatch(usize, usize, usize, usize),
}

/// A dense `rows × cols` matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    /// The zero matrix.
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    /// The identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds from machine-integer rows (test and fixture convenience).
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows.iter().flatten().map(|&x| BigInt::from(x)).collect();
        Self { rows: r, cols: c, data }
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

    /// Adds `v` into entry `(i, j)`.
    pub fn add_at(&mut self, i: usize, j: usize, v: &BigInt) {
        let idx = i * self.cols + j;
        self.data[idx] = &self.data[idx] + v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    /// Exact matrix product. Falls back from a fixed-width fast path to full
    /// arbitrary precision when entries are large.
    pub fn mul(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.cols != rhs.rows {
            return Err(MatrixError::DimensionMismatch(self.rows, self.cols, rhs.rows, rhs.cols));
        }
        // Fast path: with all entries below 2³¹ and inner dimension ≤ 2²⁰,
        // every dot product fits comfortably in an i128.
        let small_bound = BigInt::from(1i64 << 31);
        let all_small = |m: &Self| m.data.iter().all(|x| x.abs() < small_bound);
        if self.cols <= (1 << 20) && all_small(self) && all_small(rhs) {
            let a: Vec<i64> = self.data.iter().map(|x| x.to_i64().unwrap()).collect();
            let b: Vec<i64> = rhs.data.iter().map(|x| x.to_i64().unwrap()).collect();
            let mut out = Vec::with_capacity(self.rows * rhs.cols);
            for i in 0..self.rows {
                for j in 0..rhs.cols {
                    let mut acc: i128 = 0;
                    for l in 0..self.cols {
                        acc += a[i * self.cols + l] as i128 * b[l * rhs.cols + j] as i128;
                    }
                    out.push(BigInt::from(acc));
                }
            }
            return Ok(Self { rows: self.rows, cols: rhs.cols, data: out });
        }
        let mut out = Self::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(l, j);
                    if !b.is_zero() {
                        out.add_at(i, j, &(a * b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Entrywise reduction mod 2 into a bit matrix.
    pub fn mod2(&self) -> BitMatrix {
        let mut m = BitMatrix::zero(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j).is_odd() {
                    m.set(i, j, true);
                }
            }
        }
        m
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

    /// `row[dst] += q · row[src]`.
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(src, j);
            if !v.is_zero() {
                let add = v * q;
                self.add_at(dst, j, &add);
            }
        }
    }

    /// `col[dst] += q · col[src]`.
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.get(i, src);
            if !v.is_zero() {
                let add = v * q;
                self.add_at(i, dst, &add);
            }
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            let v = -&self.data[idx];
            self.data[idx] = v;
        }
    }

    fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            let idx = i * self.cols + c;
            let v = -&self.data[idx];
            self.data[idx] = v;
        }
    }
}

/// A certified Smith normal form `U · A · V = D`.
///
/// `divisors` lists the nonzero diagonal `d₁ | d₂ | … | d_r` (all positive);
/// `rank` is `r`. The inverses `u_inv`, `v_inv` are exact integer inverses of
/// `u`, `v`, which certifies unimodularity.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub divisors: Vec<BigInt>,
    pub rank: usize,
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SnfResult {
    /// Torsion coefficients: the divisors exceeding 1.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.divisors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

/// Quotient minimizing the remainder `a − q·b` in absolute value.
fn nearest_quotient(a: &BigInt, b: &BigInt) -> BigInt {
    let q = a.div_floor(b);
    let r = a - &q * b;
    // r has the sign of b (floor division); compare against |b|/2.
    if &r * 2i32 > b.abs() {
        q + 1
    } else {
        q
    }
}

/// Smith normal form over the integers, with certification.
///
/// Strategy: repeatedly pivot on a minimal-absolute-value entry, clear its row
/// and column by nearest-quotient reduction, and enforce that the pivot
/// divides the whole remaining submatrix before moving on — that yields the
/// divisibility chain directly. All row operations are mirrored on `U`/`U⁻¹`
/// and column operations on `V`/`V⁻¹`, and the final decomposition is
/// re-multiplied exactly before being returned.
pub fn smith_normal_form(a: &IntMatrix) -> Result<SnfResult, MatrixError> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut m = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut u_inv = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut v_inv = IntMatrix::identity(cols);

    // Row op `row[i] += q·row[t]` on M is `E·M` with E = I + q·e_{it}:
    // U ← E·U is the same row op; U⁻¹ ← U⁻¹·E⁻¹ subtracts q·col[i] from col[t].
    // Column ops mirror on V from the right and on V⁻¹ by row operations.
    macro_rules! row_op {
        ($dst:expr, $src:expr, $q:expr) => {{
            let q = $q;
            m.add_row($dst, $src, &q);
            u.add_row($dst, $src, &q);
            u_inv.add_col($src, $dst, &(-&q));
        }};
    }
    macro_rules! col_op {
        ($dst:expr, $src:expr, $q:expr) => {{
            let q = $q;
            m.add_col($dst, $src, &q);
            v.add_col($dst, $src, &q);
            v_inv.add_row($src, $dst, &(-&q));
        }};
    }

    let limit = rows.min(cols);
    let mut t = 0;
    while t < limit {
        // Minimal nonzero entry of the trailing submatrix becomes the pivot.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !m.get(i, j).is_zero()
                    && pivot.is_none_or(|(pi, pj)| m.get(i, j).abs() < m.get(pi, pj).abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap_rows(t, pi);
        u.swap_rows(t, pi);
        u_inv.swap_cols(t, pi);
        m.swap_cols(t, pj);
        v.swap_cols(t, pj);
        v_inv.swap_rows(t, pj);

        // Reduce the pivot column and row; a nonzero remainder becomes the
        // new (smaller) pivot on the next pass, so this terminates.
        let mut clean = true;
        for i in t + 1..rows {
            if !m.get(i, t).is_zero() {
                let q = -nearest_quotient(m.get(i, t), m.get(t, t));
                row_op!(i, t, q);
                if !m.get(i, t).is_zero() {
                    clean = false;
                }
            }
        }
        for j in t + 1..cols {
            if !m.get(t, j).is_zero() {
                let q = -nearest_quotient(m.get(t, j), m.get(t, t));
                col_op!(j, t, q);
                if !m.get(t, j).is_zero() {
                    clean = false;
                }
            }
        }
        if !clean {
            continue;
        }
        // Divisibility: the pivot must divide every remaining entry. Folding
        // an offending row into row t lets the next pass shrink the pivot.
        let mut offender = None;
        'scan: for i in t + 1..rows {
            for j in t + 1..cols {
                if !m.get(i, j).mod_floor(m.get(t, t)).is_zero() {
                    offender = Some(i);
                    break 'scan;
                }
            }
        }
        if let Some(i) = offender {
            row_op!(t, i, BigInt::one());
            continue;
        }
        if m.get(t, t).is_negative() {
            m.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
        t += 1;
    }

    let rank = t;
    let divisors: Vec<BigInt> = (0..rank).map(|i| m.get(i, i).clone()).collect();

    // Certification: the decomposition and both inverse pairs are
    // re-multiplied exactly; nothing about the elimination is trusted.
    let uav = u.mul(a)?.mul(&v)?;
    if uav != m {
        return Err(MatrixError::SnfCertificationFailure("U·A·V does not equal D"));
    }
    for i in 0..rank {
        for j in 0..cols.min(rows) {
            // D must be diagonal with the divisibility chain.
            if i != j && i < rows && j < cols && !m.get(i, j).is_zero() {
                return Err(MatrixError::SnfCertificationFailure("D is not diagonal"));
            }
        }
        if i + 1 < rank && !divisors[i + 1].mod_floor(&divisors[i]).is_zero() {
            return Err(MatrixError::SnfCertificationFailure("divisor chain broken"));
        }
        if !divisors[i].is_positive() {
            return Err(MatrixError::SnfCertificationFailure("non-positive divisor"));
        }
    }
    for i in 0..rows {
        for j in 0..cols {
            if (i >= rank || j >= rank) && !m.get(i, j).is_zero() {
                return Err(MatrixError::SnfCertificationFailure("nonzero beyond the rank"));
            }
        }
    }
    if !u.mul(&u_inv)?.is_identity() {
        return Err(MatrixError::SnfCertificationFailure("U·U⁻¹ is not the identity"));
    }
    if !v.mul(&v_inv)?.is_identity() {
        return Err(MatrixError::SnfCertificationFailure("V·V⁻¹ is not the identity"));
    }

    Ok(SnfResult { divisors, rank, u, u_inv, v, v_inv })
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(a: &IntMatrix) -> Result<BigInt, MatrixError> {
    if a.rows() != a.cols() {
        return Err(MatrixError::NonSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut m = a.clone();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for t in 0..n - 1 {
        if m.get(t, t).is_zero() {
            let Some(swap) = (t + 1..n).find(|&i| !m.get(i, t).is_zero()) else {
                return Ok(BigInt::zero());
            };
            m.swap_rows(t, swap);
            sign = -sign;
        }
        for i in t + 1..n {
            for j in t + 1..n {
                let num = m.get(t, t) * m.get(i, j) - m.get(i, t) * m.get(t, j);
                // Exact division is the Bareiss invariant.
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero());
                m.set(i, j, q);
            }
            m.set(i, t, BigInt::zero());
        }
        prev = m.get(t, t).clone();
    }
    let det = m.get(n - 1, n - 1).clone();
    Ok(if sign < 0 { -det } else { det })
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Invariant factors via greatest common divisors of `k × k` minors — an
/// independent oracle for [`smith_normal_form`], practical up to about 6×6.
///
/// With `d_k` the gcd of all `k × k` minors (`d₀ = 1`), the k-th invariant
/// factor is `d_k / d_{k−1}`.
pub fn minor_gcd_divisors(a: &IntMatrix) -> Result<Vec<BigInt>, MatrixError> {
    let limit = a.rows().min(a.cols());
    let mut divisors = Vec::new();
    let mut prev = BigInt::one();
    for k in 1..=limit {
        let mut g = BigInt::zero();
        for row_set in combinations(a.rows(), k) {
            for col_set in combinations(a.cols(), k) {
                let mut sub = IntMatrix::zero(k, k);
                for (si, &i) in row_set.iter().enumerate() {
                    for (sj, &j) in col_set.iter().enumerate() {
                        sub.set(si, sj, a.get(i, j).clone());
                    }
                }
                g = g.gcd(&determinant(&sub)?);
            }
        }
        if g.is_zero() {
            break; // rank is k−1
        }
        divisors.push(&g / &prev);
        prev = g;
    }
    Ok(divisors)
}

/// A matrix over the two-element field, rows packed into 64-bit words.
#[derive(Clone, Debug)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: Vec<Vec<u64>>,
}

impl BitMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols, words: vec![vec![0; cols.div_ceil(64)]; rows] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.words[i][j / 64] >> (j % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        if v {
            self.words[i][j / 64] |= 1 << (j % 64);
        } else {
            self.words[i][j / 64] &= !(1 << (j % 64));
        }
    }

    /// Appends one extra column holding the given bits.
    pub fn with_column(&self, column: &[bool]) -> Self {
        assert_eq!(column.len(), self.rows);
        let mut out = Self::zero(self.rows, self.cols + 1);
        for (i, (&bit, src)) in column.iter().zip(&self.words).enumerate() {
            out.words[i][..src.len()].copy_from_slice(src);
            if bit {
                out.set(i, self.cols, true);
            }
        }
        out
    }

    /// Rank over the two-element field by Gaussian elimination on rows.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<u64>> = self.words.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let (w, b) = (col / 64, col % 64);
            let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][w] >> b & 1 == 1) else {
                continue;
            };
            rows.swap(rank, pivot);
            let pivot_row = rows[rank].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != rank && row[w] >> b & 1 == 1 {
                    for (x, p) in row.iter_mut().zip(&pivot_row) {
                        *x ^= p;
                    }
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snf_of_coprime_diagonal() {
        let a = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let snf = smith_normal_form(&a).unwrap();
        assert_eq!(snf.divisors, vec![BigInt::from(1), BigInt::from(6)]);
        assert_eq!(snf.rank, 2);
    }

    #[test]
    fn snf_of_circulant_incidence() {
        let a = IntMatrix::from_rows(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        let snf = smith_normal_form(&a).unwrap();
        assert_eq!(
            snf.divisors,
            vec![BigInt::from(1), BigInt::from(1), BigInt::from(2)]
        );
    }

    #[test]
    fn snf_handles_zero_and_rectangular() {
        let z = IntMatrix::zero(3, 2);
        let snf = smith_normal_form(&z).unwrap();
        assert_eq!(snf.rank, 0);
        assert!(snf.divisors.is_empty());

        let a = IntMatrix::from_rows(&[vec![4, 6, 8], vec![2, 4, 6]]);
        let snf = smith_normal_form(&a).unwrap();
        assert_eq!(snf.divisors, vec![BigInt::from(2), BigInt::from(2)]);
    }

    #[test]
    fn snf_agrees_with_minor_gcd_oracle() {
        let samples = [
            vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]],
            vec![vec![0, 0], vec![0, 0]],
            vec![vec![3, 3, 3], vec![3, 3, 3]],
            vec![vec![1, 2], vec![3, 4], vec![5, 6]],
            vec![vec![-3, 1, 2, 0], vec![0, 0, 5, 1], vec![2, 2, 2, 2], vec![1, -1, 1, -1]],
        ];
        for rows in samples {
            let a = IntMatrix::from_rows(&rows);
            let snf = smith_normal_form(&a).unwrap();
            let oracle = minor_gcd_divisors(&a).unwrap();
            assert_eq!(snf.divisors, oracle, "mismatch for {a:?}");
        }
    }

    #[test]
    fn determinant_matches_cofactor_values() {
        let a = IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(determinant(&a).unwrap(), BigInt::from(-2));
        let b = IntMatrix::from_rows(&[vec![2, 0, 1], vec![1, 1, 0], vec![0, 3, 1]]);
        // 2·(1·1−0·3) − 0 + 1·(1·3−1·0) = 2 + 3 = 5
        assert_eq!(determinant(&b).unwrap(), BigInt::from(5));
        let singular = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(determinant(&singular).unwrap(), BigInt::zero());
    }

    #[test]
    fn determinant_with_zero_leading_pivot() {
        let a = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(determinant(&a).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn matmul_fast_and_slow_paths_agree() {
        let a = IntMatrix::from_rows(&[vec![1, 2, 3], vec![4, 5, 6]]);
        let b = IntMatrix::from_rows(&[vec![7, 8], vec![9, 10], vec![11, 12]]);
        let small = a.mul(&b).unwrap();
        // Force the arbitrary-precision path with a huge entry.
        let mut big_a = a.clone();
        big_a.set(0, 0, BigInt::from(1i64 << 40) * BigInt::from(1i64 << 40));
        let big = big_a.mul(&b).unwrap();
        assert_eq!(small.get(1, 0), big.get(1, 0));
        assert_eq!(small.get(0, 0), &BigInt::from(7 + 18 + 33));
        assert_ne!(big.get(0, 0), small.get(0, 0));
    }

    #[test]
    fn bit_rank() {
        let a = IntMatrix::from_rows(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        // Mod 2 the three rows sum to zero: rank 2.
        assert_eq!(a.mod2().rank(), 2);
        assert_eq!(IntMatrix::identity(5).mod2().rank(), 5);
        assert_eq!(IntMatrix::zero(4, 7).mod2().rank(), 0);
    }

    #[test]
    fn bit_matrix_membership_via_extra_column() {
        // Column space membership: [1,1,0] is the sum of the two rows of A.
        let a = IntMatrix::from_rows(&[vec![1, 0], vec![0, 1], vec![0, 0]]).mod2();
        let in_span = a.with_column(&[true, true, false]);
        assert_eq!(a.rank(), in_span.rank());
        let out_of_span = a.with_column(&[false, false, true]);
        assert_eq!(a.rank() + 1, out_of_span.rank());
    }
}
