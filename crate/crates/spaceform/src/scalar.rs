//! Exact arithmetic in the real quadratic fields `Q(√d)` for `d ∈ {1, 2, 5}`.
//!
//! Every value is stored as `a + b·√d` with `a`, `b` arbitrary-precision
//! rationals, so all geometric and group-theoretic predicates built on top of
//! this module are exactly decidable — no floating point is involved anywhere.
//! `d = 1` encodes the rationals themselves; `d = 2` hosts coordinates such as
//! `(1+i)/√2`, and `d = 5` hosts the golden ratio `φ = (1+√5)/2`.
//!
//! A value never mixes two irrational radicands: the binary tetrahedral
//! constructions are rational, the octahedral ones live in `Q(√2)`, and the
//! icosahedral ones in `Q(√5)`. Combining `√2`- and `√5`-values is therefore a
//! programming error, reported as [`ScalarError::MixedRadicand`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// Errors arising from exact scalar arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    /// Two values with distinct irrational radicands were combined.
    #[error("cannot combine values from Q(sqrt({0})) and Q(sqrt({1}))")]
    MixedRadicand(u8, u8),
    /// Inversion or division by zero.
    #[error("division by zero")]
    DivisionByZero,
    /// The radicand is not one of the supported square-free tags 1, 2, 5.
    #[error("unsupported radicand {0}; expected 1, 2 or 5")]
    UnsupportedRadicand(u8),
    /// A text literal did not match the `p/q+r/s*sqrt(d)` grammar.
    #[error("invalid scalar literal {0:?}")]
    Parse(String),
}

/// An element `a + b·√d` of `Q(√d)`, `d ∈ {1, 2, 5}`.
///
/// Canonical form: fractions are reduced with positive denominator (enforced
/// by [`BigRational`]), and `b = 0` forces `d = 1`, so each rational number has
/// exactly one representation. Equality, hashing and the total order are all
/// consistent with the numeric value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadScalar {
    a: BigRational,
    b: BigRational,
    d: u8,
}

fn ratio_of(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl QuadScalar {
    /// Builds `a + b·√d`, canonicalizing `b = 0` to the rational field.
    pub fn new(a: BigRational, b: BigRational, d: u8) -> Result<Self, ScalarError> {
        if !matches!(d, 1 | 2 | 5) {
            return Err(ScalarError::UnsupportedRadicand(d));
        }
        Ok(Self { a, b, d }.canonicalized())
    }

    /// Embeds a rational number.
    pub fn rational(a: BigRational) -> Self {
        Self { a, b: BigRational::zero(), d: 1 }
    }

    /// Embeds an integer.
    pub fn from_int(n: i64) -> Self {
        Self::rational(BigRational::from(BigInt::from(n)))
    }

    /// Embeds the fraction `num/den`. Panics if `den = 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::rational(ratio_of(num, den))
    }

    /// The square root `√d` itself, for `d ∈ {1, 2, 5}`.
    pub fn sqrt(d: u8) -> Result<Self, ScalarError> {
        Self::new(BigRational::zero(), BigRational::one(), d)
    }

    /// The golden ratio `φ = (1 + √5)/2`; its inverse is `φ − 1`.
    pub fn phi() -> Self {
        Self { a: ratio_of(1, 2), b: ratio_of(1, 2), d: 5 }
    }

    /// General constructor from small integers: `(an/ad) + (bn/bd)·√d`.
    pub fn quad(an: i64, ad: i64, bn: i64, bd: i64, d: u8) -> Self {
        Self::new(ratio_of(an, ad), ratio_of(bn, bd), d)
            .expect("radicand must be one of 1, 2, 5")
    }

    /// Rational part `a`.
    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    /// Radical coefficient `b` (of `√d`).
    pub fn radical_part(&self) -> &BigRational {
        &self.b
    }

    /// The radicand tag `d` (1 for rational values).
    pub fn radicand(&self) -> u8 {
        self.d
    }

    /// Whether the value lies in `Q`.
    pub fn is_rational(&self) -> bool {
        self.d == 1
    }

    fn canonicalized(mut self) -> Self {
        if self.d == 1 && !self.b.is_zero() {
            // √1 = 1: fold the radical coefficient into the rational part.
            self.a = &self.a + &self.b;
            self.b = BigRational::zero();
        }
        if self.b.is_zero() {
            self.d = 1;
        }
        self
    }

    /// The common field both operands live in, or `MixedRadicand`.
    fn joined_radicand(&self, rhs: &Self) -> Result<u8, ScalarError> {
        match (self.d, rhs.d) {
            (x, y) if x == y => Ok(x),
            (1, y) => Ok(y),
            (x, 1) => Ok(x),
            (x, y) => Err(ScalarError::MixedRadicand(x, y)),
        }
    }

    /// Exact sum; fails on mixed radicands.
    pub fn try_add(&self, rhs: &Self) -> Result<Self, ScalarError> {
        let d = self.joined_radicand(rhs)?;
        Ok(Self { a: &self.a + &rhs.a, b: &self.b + &rhs.b, d }.canonicalized())
    }

    /// Exact difference; fails on mixed radicands.
    pub fn try_sub(&self, rhs: &Self) -> Result<Self, ScalarError> {
        let d = self.joined_radicand(rhs)?;
        Ok(Self { a: &self.a - &rhs.a, b: &self.b - &rhs.b, d }.canonicalized())
    }

    /// Exact product; fails on mixed radicands.
    ///
    /// `(a₁ + b₁√d)(a₂ + b₂√d) = a₁a₂ + b₁b₂·d + (a₁b₂ + b₁a₂)·√d`.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self, ScalarError> {
        let d = self.joined_radicand(rhs)?;
        let rad = BigRational::from(BigInt::from(i64::from(d)));
        let a = &self.a * &rhs.a + (&self.b * &rhs.b) * rad;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Ok(Self { a, b, d }.canonicalized())
    }

    /// Exact multiplicative inverse via the field conjugate:
    /// `(a + b√d)⁻¹ = (a − b√d) / (a² − b²d)`.
    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let rad = BigRational::from(BigInt::from(i64::from(self.d)));
        // a² − b²d is the field norm; it vanishes only at 0 because √d is
        // irrational for d ∈ {2, 5}.
        let norm = &self.a * &self.a - (&self.b * &self.b) * rad;
        debug_assert!(!norm.is_zero());
        Ok(Self { a: &self.a / &norm, b: -(&self.b / &norm), d: self.d }.canonicalized())
    }

    /// Exact quotient; fails on mixed radicands or a zero divisor.
    pub fn try_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        self.try_mul(&rhs.inv()?)
    }

    /// Exact sign of the real number `a + b·√d`: −1, 0 or +1.
    ///
    /// When `a` and `b` agree in sign (or one vanishes) the sign is immediate;
    /// otherwise it is `sign(a)·sign(a² − b²d)`, since `|a| ≷ |b|√d` exactly
    /// when `a² ≷ b²d`.
    pub fn sign(&self) -> i32 {
        let sa = ipsign(&self.a);
        let sb = ipsign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        let rad = BigRational::from(BigInt::from(i64::from(self.d)));
        let norm = &self.a * &self.a - (&self.b * &self.b) * rad;
        sa * ipsign(&norm)
    }

    /// Absolute value.
    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Numeric comparison that is total across all three fields.
    ///
    /// Same-field values compare through the sign of their difference. For the
    /// genuinely mixed case `x ∈ Q(√2)`, `y ∈ Q(√5)` the difference is not
    /// representable, so write `x − y = u − v` with `u := (x.a − y.a) + x.b·√2`
    /// and `v := y.b·√5` purely radical; if `u` and `v` agree in nonzero sign
    /// `σ`, then `sign(u − v) = σ·sign(u² − v²)` and `u² − v²` lies in `Q(√2)`.
    fn cmp_numeric(&self, other: &Self) -> Ordering {
        if let Ok(diff) = self.try_sub(other) {
            return diff.sign().cmp(&0);
        }
        let u = Self { a: &self.a - &other.a, b: self.b.clone(), d: self.d }.canonicalized();
        let v = Self { a: BigRational::zero(), b: other.b.clone(), d: other.d }.canonicalized();
        let (su, sv) = (u.sign(), v.sign());
        if su != sv {
            return su.cmp(&sv);
        }
        if su == 0 {
            return Ordering::Equal;
        }
        // u² ∈ Q(√d_self) and v² ∈ Q, so the comparison lands in one field.
        let u2 = u.try_mul(&u).expect("square stays in its own field");
        let v2 = v.try_mul(&v).expect("square of a pure radical is rational");
        let d2 = u2.try_sub(&v2).expect("v² is rational");
        (su * d2.sign()).cmp(&0)
    }
}

fn ipsign(q: &BigRational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident, $what:expr) => {
        impl $trait for &QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: &QuadScalar) -> QuadScalar {
                self.$try(rhs)
                    .unwrap_or_else(|e| panic!("{} of exact scalars failed: {e}", $what))
            }
        }
        impl $trait for QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: QuadScalar) -> QuadScalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QuadScalar> for QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: &QuadScalar) -> QuadScalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add, "addition");
forward_binop!(Sub, sub, try_sub, "subtraction");
forward_binop!(Mul, mul, try_mul, "multiplication");
forward_binop!(Div, div, try_div, "division");

impl Neg for &QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        QuadScalar { a: -&self.a, b: -&self.b, d: self.d }
    }
}

impl Neg for QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        -&self
    }
}

impl Zero for QuadScalar {
    fn zero() -> Self {
        Self::rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadScalar {
    fn one() -> Self {
        Self::rational(BigRational::one())
    }
    fn is_one(&self) -> bool {
        self.d == 1 && self.a.is_one() && self.b.is_zero()
    }
}

impl Sum for QuadScalar {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl PartialOrd for QuadScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_numeric(other)
    }
}

fn ratio_str(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for QuadScalar {
    /// Canonical text form `p/q+r/s*sqrt(d)` with zero parts omitted:
    /// `"0"`, `"-3/2"`, `"1/2+1/2*sqrt(5)"`, `"-1*sqrt(2)"`, `"2-1*sqrt(2)"`.
    /// Round-trips bit-exactly through [`FromStr`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.b.is_zero() {
            return write!(f, "{}", ratio_str(&self.a));
        }
        if self.a.is_zero() {
            return write!(f, "{}*sqrt({})", ratio_str(&self.b), self.d);
        }
        let sep = if self.b.is_positive() { '+' } else { '-' };
        write!(f, "{}{}{}*sqrt({})", ratio_str(&self.a), sep, ratio_str(&self.b.abs()), self.d)
    }
}

impl fmt::Debug for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_ratio(s: &str) -> Option<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    // Reject empty parts and embedded whitespace; BigInt::from_str would allow
    // a leading '+', which the canonical form never emits.
    if num.is_empty() || den.is_empty() || num.starts_with('+') {
        return None;
    }
    let num = BigInt::from_str(num).ok()?;
    let den = BigInt::from_str(den).ok()?;
    if den <= BigInt::zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Splits `r*sqrt(d)` into its coefficient and radicand.
fn parse_radical_term(s: &str) -> Option<(BigRational, u8)> {
    let (coeff, rest) = s.split_once("*sqrt(")?;
    let d_str = rest.strip_suffix(')')?;
    let d = match d_str {
        "2" => 2,
        "5" => 5,
        _ => return None,
    };
    Some((parse_ratio(coeff)?, d))
}

impl FromStr for QuadScalar {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ScalarError::Parse(s.to_string());
        // Split at the first '+' or '-' after position 0; the canonical form
        // carries at most two terms and only a leading sign inside a term.
        let split = s.char_indices().skip(1).find(|&(_, c)| c == '+' || c == '-');
        let (first, second) = match split {
            Some((i, c)) => (&s[..i], Some((c, &s[i + 1..]))),
            None => (s, None),
        };
        match second {
            None => {
                if let Some((b, d)) = parse_radical_term(first) {
                    Self::new(BigRational::zero(), b, d).map_err(|_| err())
                } else {
                    let a = parse_ratio(first).ok_or_else(err)?;
                    Ok(Self::rational(a))
                }
            }
            Some((sep, rest)) => {
                // Two-term form: rational, then radical; the second term is
                // rendered unsigned and the separator carries its sign.
                if first.contains("*sqrt(") || rest.starts_with('-') {
                    return Err(err());
                }
                let a = parse_ratio(first).ok_or_else(err)?;
                let (b_abs, d) = parse_radical_term(rest).ok_or_else(err)?;
                let b = if sep == '-' { -b_abs } else { b_abs };
                Self::new(a, b, d).map_err(|_| err())
            }
        }
    }
}

impl Serialize for QuadScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for QuadScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(an: i64, ad: i64, bn: i64, bd: i64, d: u8) -> QuadScalar {
        QuadScalar::quad(an, ad, bn, bd, d)
    }

    #[test]
    fn golden_ratio_from_halves() {
        let half = QuadScalar::from_ratio(1, 2);
        let half_sqrt5 = q(0, 1, 1, 2, 5);
        assert_eq!(half + half_sqrt5, QuadScalar::phi());
    }

    #[test]
    fn add_zero_is_identity() {
        let x = q(3, 7, -2, 5, 2);
        assert_eq!(&x + &QuadScalar::zero(), x);
    }

    #[test]
    fn sqrt2_terms_collapse_to_rational() {
        // (2 − √2) + (√2 − 1) = 1, and the result canonicalizes to d = 1.
        let x = q(2, 1, -1, 1, 2);
        let y = q(-1, 1, 1, 1, 2);
        let s = x + y;
        assert!(s.is_one());
        assert_eq!(s.radicand(), 1);
    }

    #[test]
    fn phi_squares_to_phi_plus_one() {
        let phi = QuadScalar::phi();
        assert_eq!(&phi * &phi, &phi + &QuadScalar::one());
    }

    #[test]
    fn inverse_of_sqrt2() {
        let r = QuadScalar::sqrt(2).unwrap();
        assert_eq!(r.inv().unwrap(), q(0, 1, 1, 2, 2));
    }

    #[test]
    fn inverse_of_phi_is_phi_minus_one() {
        let phi = QuadScalar::phi();
        let inv = phi.inv().unwrap();
        assert_eq!(inv, &phi - &QuadScalar::one());
        assert!((&phi * &inv).is_one());
    }

    #[test]
    fn signs_with_opposed_parts() {
        assert_eq!(q(3, 1, -2, 1, 2).sign(), 1); // 3 − 2√2 > 0 since 9 > 8
        assert_eq!(QuadScalar::zero().sign(), 0);
        let phi_minus_two = QuadScalar::phi() - QuadScalar::from_int(2);
        assert_eq!(phi_minus_two.sign(), -1); // −3/2 + 1/2·√5 < 0 since 9/4 > 5/4
    }

    #[test]
    fn mixed_radicands_refuse_to_combine() {
        let r2 = QuadScalar::sqrt(2).unwrap();
        let r5 = QuadScalar::sqrt(5).unwrap();
        assert_eq!(r2.try_add(&r5), Err(ScalarError::MixedRadicand(2, 5)));
        assert_eq!(r2.try_mul(&r5), Err(ScalarError::MixedRadicand(2, 5)));
    }

    #[test]
    fn rationals_coerce_into_either_field() {
        let two = QuadScalar::from_int(2);
        let r2 = QuadScalar::sqrt(2).unwrap();
        let r5 = QuadScalar::sqrt(5).unwrap();
        assert_eq!(&two * &r2, q(0, 1, 2, 1, 2));
        assert_eq!(&two * &r5, q(0, 1, 2, 1, 5));
    }

    #[test]
    fn inversion_of_zero_fails() {
        assert_eq!(QuadScalar::zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn cross_field_order_is_numeric() {
        let r2 = QuadScalar::sqrt(2).unwrap(); // ≈ 1.414
        let phi = QuadScalar::phi(); // ≈ 1.618
        let r5 = QuadScalar::sqrt(5).unwrap(); // ≈ 2.236
        assert!(r2 < phi);
        assert!(phi < r5);
        assert!(r2 < r5);
        assert!(QuadScalar::from_ratio(3, 2) > r2);
        assert!(QuadScalar::from_ratio(3, 2) < phi);
        // Negative mixed comparison: −√5 < −√2.
        assert!(-&r5 < -&r2);
    }

    #[test]
    fn display_forms() {
        assert_eq!(QuadScalar::zero().to_string(), "0");
        assert_eq!(QuadScalar::from_ratio(-3, 2).to_string(), "-3/2");
        assert_eq!(QuadScalar::phi().to_string(), "1/2+1/2*sqrt(5)");
        assert_eq!(q(0, 1, -1, 1, 2).to_string(), "-1*sqrt(2)");
        assert_eq!(q(2, 1, -1, 1, 2).to_string(), "2-1*sqrt(2)");
        assert_eq!(QuadScalar::from_int(7).to_string(), "7");
    }

    #[test]
    fn parse_round_trips_canonical_forms() {
        for text in ["0", "-3/2", "1/2+1/2*sqrt(5)", "-1*sqrt(2)", "2-1*sqrt(2)", "7", "1/2-1/2*sqrt(5)"] {
            let v: QuadScalar = text.parse().unwrap();
            assert_eq!(v.to_string(), text, "round-trip failed for {text}");
        }
    }

    #[test]
    fn parse_rejects_malformed_literals() {
        for text in ["", "+1", "1/0", "sqrt(2)", "1*sqrt(3)", "1+-1*sqrt(2)", "1*sqrt(2)+1", "1/2+1/2", "2 - 1*sqrt(2)"] {
            assert!(text.parse::<QuadScalar>().is_err(), "accepted malformed {text:?}");
        }
    }
}
