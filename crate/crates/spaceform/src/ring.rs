//! Integral group rings `Z[G]` and matrices over them.
//!
//! Elements are sparse maps from group-element indices to arbitrary-precision
//! integer coefficients. Matrices carry a [`Side`] tag recording which module
//! convention their chain complex uses:
//!
//! * `Left` — chains are **row vectors**, the boundary acts by `v ↦ v·M`, and
//!   a boundary out of a rank-`a` module into a rank-`b` module is `a × b`.
//! * `Right` — chains are **column vectors**, the boundary acts by `v ↦ M·v`,
//!   and the same boundary is `b × a`.
//!
//! The tag changes nothing about entrywise arithmetic — `mat_mul` is the
//! usual `(i,j) = Σ_l A[i,l]·B[l,j]` with ring products taken in that order —
//! but it drives composition order in chain-complex checks and the block
//! layout of [`RingMatrix::regular_representation`].

use crate::group::{Group, GroupTag};
use crate::matrix::IntMatrix;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

/// Errors from group-ring arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    /// Operands live over different groups.
    #[error("group mismatch: {left} vs {right}")]
    GroupMismatch { left: GroupTag, right: GroupTag },
    /// Operands carry different module-side tags.
    #[error("module side mismatch: {left} vs {right}")]
    SideMismatch { left: Side, right: Side },
    /// Matrix dimensions do not line up.
    #[error("dimension mismatch: ({0}x{1}) vs ({2}x{3})")]
    DimensionMismatch(usize, usize, usize, usize),
    /// An element index is outside the group's order.
    #[error("element index {index} out of range for a group of order {order}")]
    BadIndex { index: u16, order: usize },
    /// A homomorphism table has the wrong length for its source group.
    #[error("homomorphism table has length {got}, expected {expected}")]
    MapLengthMismatch { expected: usize, got: usize },
}

/// Module-side convention for matrices over a group ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Row-vector chains, `v ↦ v·M`.
    Left,
    /// Column-vector chains, `v ↦ M·v`.
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// An element of the integral group ring `Z[G]`, stored sparsely.
///
/// The coefficient map never holds explicit zeros, so structural equality is
/// ring equality (given equal groups).
#[derive(Clone)]
pub struct RingElem {
    group: Arc<Group>,
    coeffs: BTreeMap<u16, BigInt>,
}

impl PartialEq for RingElem {
    fn eq(&self, other: &Self) -> bool {
        self.group.tag() == other.group.tag() && self.coeffs == other.coeffs
    }
}

impl Eq for RingElem {}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (pos, (&idx, c)) in self.coeffs.iter().enumerate() {
            let mag = c.abs();
            if pos == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let name = self.group.element_name(idx);
            if mag.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{mag}*{name}")?;
            }
        }
        Ok(())
    }
}

impl RingElem {
    /// The zero element.
    pub fn zero(group: &Arc<Group>) -> Self {
        Self { group: Arc::clone(group), coeffs: BTreeMap::new() }
    }

    /// The multiplicative identity `1·e`.
    pub fn one(group: &Arc<Group>) -> Self {
        Self::element(group, 0)
    }

    /// The basis element `1·g` for the group element with the given index.
    pub fn element(group: &Arc<Group>, idx: u16) -> Self {
        Self::term(group, BigInt::one(), idx)
    }

    /// The single term `c·g`.
    pub fn term(group: &Arc<Group>, c: impl Into<BigInt>, idx: u16) -> Self {
        assert!((idx as usize) < group.order(), "element index out of range");
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(idx, c);
        }
        Self { group: Arc::clone(group), coeffs }
    }

    /// The integer `n` embedded as `n·e`.
    pub fn from_int(group: &Arc<Group>, n: i64) -> Self {
        Self::term(group, n, 0)
    }

    /// The norm element `N = Σ_{g∈G} g`.
    pub fn norm(group: &Arc<Group>) -> Self {
        let coeffs = (0..group.order() as u16).map(|g| (g, BigInt::one())).collect();
        Self { group: Arc::clone(group), coeffs }
    }

    /// Rebuilds an element from `(coefficient, index)` pairs; repeated indices
    /// accumulate.
    pub fn from_support(
        group: &Arc<Group>,
        items: impl IntoIterator<Item = (BigInt, u16)>,
    ) -> Result<Self, RingError> {
        let mut out = Self::zero(group);
        for (c, idx) in items {
            if (idx as usize) >= group.order() {
                return Err(RingError::BadIndex { index: idx, order: group.order() });
            }
            out.add_term(&c, idx);
        }
        Ok(out)
    }

    /// The support as `(coefficient, index)` pairs in increasing index order.
    pub fn to_support(&self) -> Vec<(BigInt, u16)> {
        self.coeffs.iter().map(|(&idx, c)| (c.clone(), idx)).collect()
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    /// The coefficient of the group element with the given index.
    pub fn coeff(&self, idx: u16) -> BigInt {
        self.coeffs.get(&idx).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of group elements with nonzero coefficient.
    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    fn add_term(&mut self, c: &BigInt, idx: u16) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(idx).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&idx);
        }
    }

    fn check_group(&self, other: &Self) -> Result<(), RingError> {
        if self.group.tag() != other.group.tag() {
            return Err(RingError::GroupMismatch {
                left: self.group.tag(),
                right: other.group.tag(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, RingError> {
        self.check_group(other)?;
        let mut out = self.clone();
        for (&idx, c) in &other.coeffs {
            out.add_term(c, idx);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.check_group(other)?;
        let mut out = self.clone();
        for (&idx, c) in &other.coeffs {
            out.add_term(&-c, idx);
        }
        Ok(out)
    }

    /// Convolution product: `(Σ a_g g)·(Σ b_h h) = Σ a_g b_h (gh)`.
    pub fn try_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check_group(other)?;
        let mut out = Self::zero(&self.group);
        for (&g, a) in &self.coeffs {
            for (&h, b) in &other.coeffs {
                out.add_term(&(a * b), self.group.mul(g, h));
            }
        }
        Ok(out)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(&self.group);
        }
        Self {
            group: Arc::clone(&self.group),
            coeffs: self.coeffs.iter().map(|(&idx, x)| (idx, x * c)).collect(),
        }
    }

    /// The augmentation `ε(Σ a_g g) = Σ a_g` — the ring map to `Z` collapsing
    /// every group element to 1.
    pub fn augment(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// The antipode `Σ a_g g ↦ Σ a_g g⁻¹` (an anti-automorphism).
    pub fn antipode(&self) -> Self {
        let mut out = Self::zero(&self.group);
        for (&g, a) in &self.coeffs {
            out.add_term(a, self.group.inv(g));
        }
        out
    }

    /// Pushes the element through a group homomorphism given as an index
    /// table over the source group: `Σ a_g g ↦ Σ a_g π(g)`.
    pub fn pushforward(&self, map: &[u16], target: &Arc<Group>) -> Result<Self, RingError> {
        if map.len() != self.group.order() {
            return Err(RingError::MapLengthMismatch {
                expected: self.group.order(),
                got: map.len(),
            });
        }
        let mut out = Self::zero(target);
        for (&g, a) in &self.coeffs {
            let img = map[g as usize];
            if (img as usize) >= target.order() {
                return Err(RingError::BadIndex { index: img, order: target.order() });
            }
            out.add_term(a, img);
        }
        Ok(out)
    }
}

macro_rules! ring_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait for &RingElem {
            type Output = RingElem;
            fn $method(self, rhs: &RingElem) -> RingElem {
                self.$try(rhs).expect("group ring operands over different groups")
            }
        }
        impl $trait for RingElem {
            type Output = RingElem;
            fn $method(self, rhs: RingElem) -> RingElem {
                (&self).$method(&rhs)
            }
        }
    };
}

ring_binop!(Add, add, try_add);
ring_binop!(Sub, sub, try_sub);
ring_binop!(Mul, mul, try_mul);

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem {
            group: Arc::clone(&self.group),
            coeffs: self.coeffs.iter().map(|(&idx, c)| (idx, -c)).collect(),
        }
    }
}

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        -&self
    }
}

/// A dense matrix over `Z[G]` with a module-side tag, row-major.
#[derive(Clone)]
pub struct RingMatrix {
    group: Arc<Group>,
    side: Side,
    rows: usize,
    cols: usize,
    entries: Vec<RingElem>,
}

impl PartialEq for RingMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.group.tag() == other.group.tag()
            && self.side == other.side
            && self.rows == other.rows
            && self.cols == other.cols
            && self.entries == other.entries
    }
}

impl Eq for RingMatrix {}

impl fmt::Debug for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "RingMatrix {}x{} over Z[{}] ({}) [",
            self.rows,
            self.cols,
            self.group.tag(),
            self.side
        )?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(" | "))?;
        }
        write!(f, "]")
    }
}

impl RingMatrix {
    /// The zero matrix.
    pub fn zero(group: &Arc<Group>, side: Side, rows: usize, cols: usize) -> Self {
        Self {
            group: Arc::clone(group),
            side,
            rows,
            cols,
            entries: vec![RingElem::zero(group); rows * cols],
        }
    }

    /// The identity matrix.
    pub fn identity(group: &Arc<Group>, side: Side, n: usize) -> Self {
        let mut m = Self::zero(group, side, n, n);
        for i in 0..n {
            m.set(i, i, RingElem::one(group));
        }
        m
    }

    /// Builds from nested rows (all rows must have equal length).
    pub fn from_rows(group: &Arc<Group>, side: Side, rows: Vec<Vec<RingElem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_entries(group, side, r, c, rows.into_iter().flatten().collect())
    }

    /// Builds from a row-major entry list (length must be `rows·cols`).
    pub fn from_entries(
        group: &Arc<Group>,
        side: Side,
        rows: usize,
        cols: usize,
        entries: Vec<RingElem>,
    ) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        assert!(
            entries.iter().all(|e| e.group.tag() == group.tag()),
            "entry over the wrong group"
        );
        Self { group: Arc::clone(group), side, rows, cols, entries }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElem {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, e: RingElem) {
        assert_eq!(e.group.tag(), self.group.tag(), "entry over the wrong group");
        self.entries[i * self.cols + j] = e;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RingElem::is_zero)
    }

    /// Position of the first nonzero entry in row-major order, if any.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.entries
            .iter()
            .position(|e| !e.is_zero())
            .map(|p| (p / self.cols, p % self.cols))
    }

    /// Matrix product `(i,j) = Σ_l self[i,l]·rhs[l,j]`, ring products taken in
    /// that order. Requires matching groups and side tags.
    pub fn mat_mul(&self, rhs: &Self) -> Result<Self, RingError> {
        if self.group.tag() != rhs.group.tag() {
            return Err(RingError::GroupMismatch {
                left: self.group.tag(),
                right: rhs.group.tag(),
            });
        }
        if self.side != rhs.side {
            return Err(RingError::SideMismatch { left: self.side, right: rhs.side });
        }
        if self.cols != rhs.rows {
            return Err(RingError::DimensionMismatch(self.rows, self.cols, rhs.rows, rhs.cols));
        }
        let mut out = Self::zero(&self.group, self.side, self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(l, j);
                    if !b.is_zero() {
                        let prod = a.try_mul(b)?;
                        let idx = i * out.cols + j;
                        out.entries[idx] = out.entries[idx].try_add(&prod)?;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, RingError> {
        if self.group.tag() != rhs.group.tag() {
            return Err(RingError::GroupMismatch {
                left: self.group.tag(),
                right: rhs.group.tag(),
            });
        }
        if self.side != rhs.side {
            return Err(RingError::SideMismatch { left: self.side, right: rhs.side });
        }
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(RingError::DimensionMismatch(self.rows, self.cols, rhs.rows, rhs.cols));
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.try_add(b))
            .collect::<Result<_, _>>()?;
        Ok(Self {
            group: Arc::clone(&self.group),
            side: self.side,
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn neg(&self) -> Self {
        Self {
            group: Arc::clone(&self.group),
            side: self.side,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    /// Entrywise augmentation: the integer matrix `ε(M)`.
    pub fn augmented(&self) -> IntMatrix {
        let mut out = IntMatrix::zero(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).augment());
            }
        }
        out
    }

    /// Realizes the matrix as an integer matrix on the free abelian group
    /// underlying `Z[G]^rows` and `Z[G]^cols`, with coordinates indexed by
    /// `(module slot, group element)` in blocks of size `|G|`.
    ///
    /// * `Left` (row vectors `v ↦ v·M`): the coordinate of a vector at
    ///   `(i, h)` is the coefficient of `h` in `v_i`, and the realized matrix
    ///   satisfies `realize(v·M) = realize(v)·R`, so
    ///   `R[(i,g), (j,h)] = coefficient of h in g·M[i,j]`.
    /// * `Right` (column vectors `v ↦ M·v`): `realize(M·v) = R·realize(v)`, so
    ///   `R[(i,h), (j,g)] = coefficient of h in M[i,j]·g`.
    ///
    /// Both satisfy `realize(A·B) = realize(A)·realize(B)`.
    pub fn regular_representation(&self) -> IntMatrix {
        let n = self.group.order();
        let mut out = IntMatrix::zero(self.rows * n, self.cols * n);
        for i in 0..self.rows {
            for j in 0..self.cols {
                for (c, u) in self.get(i, j).to_support() {
                    for g in 0..n as u16 {
                        match self.side {
                            Side::Left => {
                                // g·u lands in column block j at position g·u.
                                let h = self.group.mul(g, u);
                                out.add_at(i * n + g as usize, j * n + h as usize, &c);
                            }
                            Side::Right => {
                                // u·g lands in row block i at position u·g.
                                let h = self.group.mul(u, g);
                                out.add_at(i * n + h as usize, j * n + g as usize, &c);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Applies an entrywise map through a group homomorphism `π` (an index
    /// table over this matrix's group), optionally inverting each group
    /// element first and optionally transposing the matrix.
    ///
    /// With `invert` and `transpose` both set this is the standard way to
    /// carry a left-module boundary to a right-module boundary over the image
    /// group (the inversion is an anti-automorphism and the transpose
    /// restores composition order), so the side tag flips exactly in that
    /// case.
    pub fn apply_antihom(
        &self,
        map: &[u16],
        target: &Arc<Group>,
        invert: bool,
        transpose: bool,
    ) -> Result<Self, RingError> {
        if map.len() != self.group.order() {
            return Err(RingError::MapLengthMismatch {
                expected: self.group.order(),
                got: map.len(),
            });
        }
        let side = if invert && transpose {
            match self.side {
                Side::Left => Side::Right,
                Side::Right => Side::Left,
            }
        } else {
            self.side
        };
        let (rows, cols) = if transpose { (self.cols, self.rows) } else { (self.rows, self.cols) };
        let mut out = Self::zero(target, side, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let src = if invert { self.get(i, j).antipode() } else { self.get(i, j).clone() };
                let img = src.pushforward(map, target)?;
                if transpose {
                    out.set(j, i, img);
                } else {
                    out.set(i, j, img);
                }
            }
        }
        Ok(out)
    }
}
