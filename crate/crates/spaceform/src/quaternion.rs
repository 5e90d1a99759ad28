//! Exact quaternions over [`QuadScalar`] coefficients.
//!
//! A quaternion `w + x·i + y·j + z·k` multiplies by the Hamilton rules
//! `i² = j² = k² = −1`, `ij = k`, `jk = i`, `ki = j`. All the finite groups
//! constructed in this crate live on the unit sphere `w² + x² + y² + z² = 1`,
//! where inversion is plain conjugation; a general inverse divides the
//! conjugate by the norm.

use crate::scalar::{QuadScalar, ScalarError};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A quaternion with exact quadratic-field coefficients.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Quaternion {
    /// Coefficient of `1`.
    pub w: QuadScalar,
    /// Coefficient of `i`.
    pub x: QuadScalar,
    /// Coefficient of `j`.
    pub y: QuadScalar,
    /// Coefficient of `k`.
    pub z: QuadScalar,
}

impl Quaternion {
    /// Builds a quaternion from its four coefficients.
    pub fn new(w: QuadScalar, x: QuadScalar, y: QuadScalar, z: QuadScalar) -> Self {
        Self { w, x, y, z }
    }

    /// The multiplicative identity `1`.
    pub fn one() -> Self {
        Self::new(QuadScalar::one(), QuadScalar::zero(), QuadScalar::zero(), QuadScalar::zero())
    }

    /// The basis unit `i`.
    pub fn i() -> Self {
        Self::new(QuadScalar::zero(), QuadScalar::one(), QuadScalar::zero(), QuadScalar::zero())
    }

    /// The basis unit `j`.
    pub fn j() -> Self {
        Self::new(QuadScalar::zero(), QuadScalar::zero(), QuadScalar::one(), QuadScalar::zero())
    }

    /// The basis unit `k`.
    pub fn k() -> Self {
        Self::new(QuadScalar::zero(), QuadScalar::zero(), QuadScalar::zero(), QuadScalar::one())
    }

    /// Convenience constructor from integer quadruples divided by a common
    /// denominator: `(w + x·i + y·j + z·k)/den`.
    pub fn from_ints(w: i64, x: i64, y: i64, z: i64, den: i64) -> Self {
        Self::new(
            QuadScalar::from_ratio(w, den),
            QuadScalar::from_ratio(x, den),
            QuadScalar::from_ratio(y, den),
            QuadScalar::from_ratio(z, den),
        )
    }

    /// Quaternion conjugate `w − x·i − y·j − z·k`.
    pub fn conj(&self) -> Self {
        Self::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    /// Squared Euclidean norm `w² + x² + y² + z²` (the reduced norm).
    pub fn norm_sq(&self) -> QuadScalar {
        &(&self.w * &self.w) + &(&self.x * &self.x)
            + (&(&self.y * &self.y) + &(&self.z * &self.z))
    }

    /// Exact test for membership in the unit sphere.
    pub fn is_unit(&self) -> bool {
        self.norm_sq().is_one()
    }

    /// Multiplicative inverse `conj(q)/‖q‖²`; fails only at zero.
    pub fn inv(&self) -> Result<Self, ScalarError> {
        let n = self.norm_sq();
        let n_inv = n.inv()?;
        let c = self.conj();
        Ok(Self::new(&c.w * &n_inv, &c.x * &n_inv, &c.y * &n_inv, &c.z * &n_inv))
    }

    /// The four coefficients as a coordinate vector in `R⁴`.
    pub fn coords(&self) -> [QuadScalar; 4] {
        [self.w.clone(), self.x.clone(), self.y.clone(), self.z.clone()]
    }

    /// Rebuilds a quaternion from an R⁴ coordinate vector (inverse of
    /// [`Quaternion::coords`]).
    pub fn from_coords(c: [QuadScalar; 4]) -> Self {
        let [w, x, y, z] = c;
        Self { w, x, y, z }
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;

    /// Hamilton product with `ij = k`, `jk = i`, `ki = j`.
    fn mul(self, q: &Quaternion) -> Quaternion {
        let p = self;
        Quaternion::new(
            &(&p.w * &q.w) - &(&p.x * &q.x) - (&(&p.y * &q.y) + &(&p.z * &q.z)),
            &(&p.w * &q.x) + &(&p.x * &q.w) + (&(&p.y * &q.z) - &(&p.z * &q.y)),
            &(&p.w * &q.y) - &(&p.x * &q.z) + (&(&p.y * &q.w) + &(&p.z * &q.x)),
            &(&p.w * &q.z) + &(&p.x * &q.y) - (&(&p.y * &q.x) - &(&p.z * &q.w)),
        )
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, q: Quaternion) -> Quaternion {
        &self * &q
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, q: &Quaternion) -> Quaternion {
        Quaternion::new(&self.w + &q.w, &self.x + &q.x, &self.y + &q.y, &self.z + &q.z)
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, q: &Quaternion) -> Quaternion {
        Quaternion::new(&self.w - &q.w, &self.x - &q.x, &self.y - &q.y, &self.z - &q.z)
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        -&self
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})i + ({})j + ({})k", self.w, self.x, self.y, self.z)
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamilton_relations() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
        assert_eq!(&i * &i, -Quaternion::one());
        assert_eq!(&j * &i, -Quaternion::k());
    }

    #[test]
    fn tau_product_gives_omega() {
        // ((1+i)/√2)·((1+j)/√2) = (1 + i + j + k)/2.
        let inv_r2 = QuadScalar::sqrt(2).unwrap().inv().unwrap();
        let scale = |q: &Quaternion| Quaternion::new(&q.w * &inv_r2, &q.x * &inv_r2, &q.y * &inv_r2, &q.z * &inv_r2);
        let tau_i = scale(&(&Quaternion::one() + &Quaternion::i()));
        let tau_j = scale(&(&Quaternion::one() + &Quaternion::j()));
        assert_eq!(&tau_i * &tau_j, Quaternion::from_ints(1, 1, 1, 1, 2));
        assert!(tau_i.is_unit());
    }

    #[test]
    fn omega_zero_has_order_six() {
        let w0 = Quaternion::from_ints(1, 1, 1, 1, 2);
        let w0_cubed = &(&w0 * &w0) * &w0;
        assert_eq!(w0_cubed, -Quaternion::one());
        let sixth = &w0_cubed * &w0_cubed;
        assert_eq!(sixth, Quaternion::one());
    }

    #[test]
    fn unit_inverse_is_conjugate() {
        let varpi = Quaternion::from_ints(-1, 1, 1, 1, 2);
        assert!(varpi.is_unit());
        assert_eq!(varpi.inv().unwrap(), varpi.conj());
        assert_eq!(&varpi * &varpi.conj(), Quaternion::one());
    }

    #[test]
    fn general_inverse_divides_by_norm() {
        let q = Quaternion::from_ints(2, 0, 2, 0, 1); // norm 8
        let qi = q.inv().unwrap();
        assert_eq!(&q * &qi, Quaternion::one());
    }

    #[test]
    fn norm_is_multiplicative() {
        let p = Quaternion::from_ints(1, 2, 3, 4, 1);
        let q = Quaternion::from_ints(-2, 1, 0, 5, 1);
        assert_eq!((&p * &q).norm_sq(), &p.norm_sq() * &q.norm_sq());
    }
}
