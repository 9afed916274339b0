//! Quaternions stored as a complex pair `q = z1 + z2·j`.
//!
//! With `z1 = x0 + x1·i` and `z2 = x2 + x3·i` this is the usual
//! `x0 + x1·i + x2·j + x3·k`. The product rule
//!
//! ```text
//! (p1 + p2 j)(q1 + q2 j) = (p1 q1 − p2 q̄2) + (p1 q2 + p2 q̄1) j
//! ```
//!
//! follows from `j z = z̄ j` for complex `z`.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::conformal::inverse_stereographic;
use crate::error::{Error, Result};
use crate::{Complex, ZERO_NORM_SQ};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Quaternion {
    z1: Complex,
    z2: Complex,
}

const C0: Complex = Complex::new(0.0, 0.0);
const C1: Complex = Complex::new(1.0, 0.0);
const CI: Complex = Complex::new(0.0, 1.0);

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::from_pair(C0, C0);
    pub const ONE: Quaternion = Quaternion::from_pair(C1, C0);
    pub const I: Quaternion = Quaternion::from_pair(CI, C0);
    pub const J: Quaternion = Quaternion::from_pair(C0, C1);
    pub const K: Quaternion = Quaternion::from_pair(C0, CI);

    /// `z1 + z2·j`, rejecting non-finite parts.
    pub fn new(z1: Complex, z2: Complex) -> Result<Self> {
        if z1.re.is_finite() && z1.im.is_finite() && z2.re.is_finite() && z2.im.is_finite() {
            Ok(Self { z1, z2 })
        } else {
            Err(Error::NonFinite)
        }
    }

    /// `x0 + x1·i + x2·j + x3·k`.
    pub fn from_reals(x0: f64, x1: f64, x2: f64, x3: f64) -> Result<Self> {
        Self::new(Complex::new(x0, x1), Complex::new(x2, x3))
    }

    pub(crate) const fn from_pair(z1: Complex, z2: Complex) -> Self {
        Self { z1, z2 }
    }

    pub(crate) const fn from_complex(z: Complex) -> Self {
        Self { z1: z, z2: C0 }
    }

    pub(crate) const fn real(r: f64) -> Self {
        Self::from_complex(Complex::new(r, 0.0))
    }

    /// Complex part `z1`.
    pub fn z1(&self) -> Complex {
        self.z1
    }

    /// `j`-part `z2`.
    pub fn z2(&self) -> Complex {
        self.z2
    }

    /// `[x0, x1, x2, x3]`.
    pub fn to_reals(&self) -> [f64; 4] {
        [self.z1.re, self.z1.im, self.z2.re, self.z2.im]
    }

    pub fn conj(&self) -> Self {
        Self::from_pair(self.z1.conj(), -self.z2)
    }

    /// `|q|² = q q̄ = |z1|² + |z2|²`.
    pub fn norm_sq(&self) -> f64 {
        self.z1.norm_sqr() + self.z2.norm_sqr()
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.norm_sq())
    }

    /// True when `|q|²` is below the inversion threshold.
    pub fn is_zero(&self) -> bool {
        self.norm_sq() < ZERO_NORM_SQ
    }

    /// `q⁻¹ = q̄ / |q|²`.
    pub fn inv(&self) -> Result<Self> {
        let n = self.norm_sq();
        if n < ZERO_NORM_SQ {
            return Err(Error::DivisionByZero);
        }
        Ok(self.conj() * (1.0 / n))
    }

    /// Multiplication by a complex scalar from the left, `c·q = c z1 + c z2 j`.
    pub fn left_scale(&self, c: Complex) -> Self {
        Self::from_pair(c * self.z1, c * self.z2)
    }

    /// Euclidean distance in ℝ⁴.
    pub fn distance(&self, other: &Self) -> f64 {
        (*self - *other).norm()
    }
}

impl Add for Quaternion {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::from_pair(self.z1 + rhs.z1, self.z2 + rhs.z2)
    }
}

impl Sub for Quaternion {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::from_pair(self.z1 - rhs.z1, self.z2 - rhs.z2)
    }
}

impl Neg for Quaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::from_pair(-self.z1, -self.z2)
    }
}

impl Mul for Quaternion {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::from_pair(
            self.z1 * rhs.z1 - self.z2 * rhs.z2.conj(),
            self.z1 * rhs.z2 + self.z2 * rhs.z1.conj(),
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        Self::from_pair(self.z1 * rhs, self.z2 * rhs)
    }
}

impl Mul<Quaternion> for Complex {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        rhs.left_scale(self)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x0, x1, x2, x3] = self.to_reals();
        write!(f, "{x0}{x1:+}i{x2:+}j{x3:+}k")
    }
}

/// A point of `ℚ ∪ {∞}`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum ExtendedQuaternion {
    Finite(Quaternion),
    Infinity,
}

impl ExtendedQuaternion {
    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedQuaternion::Infinity)
    }

    pub fn finite(&self) -> Option<Quaternion> {
        match self {
            ExtendedQuaternion::Finite(q) => Some(*q),
            ExtendedQuaternion::Infinity => None,
        }
    }

    /// Chordal distance: Euclidean distance between the images on the unit
    /// 4-sphere. Bounded by 2, with `0` and `∞` antipodal.
    pub fn chordal_distance(&self, other: &Self) -> f64 {
        inverse_stereographic(self).distance(&inverse_stereographic(other))
    }
}

impl From<Quaternion> for ExtendedQuaternion {
    fn from(q: Quaternion) -> Self {
        ExtendedQuaternion::Finite(q)
    }
}

/// `p·q⁻¹` on the extended line: a zero denominator gives `∞`.
pub fn right_quotient(p: Quaternion, q: Quaternion) -> Result<ExtendedQuaternion> {
    match (p.is_zero(), q.is_zero()) {
        (true, true) => Err(Error::Indeterminate),
        (false, true) => Ok(ExtendedQuaternion::Infinity),
        _ => Ok(ExtendedQuaternion::Finite(p * q.inv()?)),
    }
}

/// `q⁻¹·p` on the extended line.
pub fn left_quotient(q: Quaternion, p: Quaternion) -> Result<ExtendedQuaternion> {
    match (p.is_zero(), q.is_zero()) {
        (true, true) => Err(Error::Indeterminate),
        (false, true) => Ok(ExtendedQuaternion::Infinity),
        _ => Ok(ExtendedQuaternion::Finite(q.inv()? * p)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x0: f64, x1: f64, x2: f64, x3: f64) -> Quaternion {
        Quaternion::from_reals(x0, x1, x2, x3).unwrap()
    }

    #[test]
    fn from_reals_reads_off_components() {
        assert_eq!(q(1.0, 0.0, 0.0, 0.0), Quaternion::ONE);
        assert_eq!(q(0.0, 0.0, 1.0, 0.0).z2(), Complex::new(1.0, 0.0));
        let p = q(1.0, 2.0, 3.0, 4.0);
        assert_eq!(p.z1(), Complex::new(1.0, 2.0));
        assert_eq!(p.z2(), Complex::new(3.0, 4.0));
        assert_eq!(p.to_reals(), [1.0, 2.0, 3.0, 4.0]);
    }

    #[test]
    fn rejects_non_finite() {
        assert_eq!(
            Quaternion::from_reals(f64::NAN, 0.0, 0.0, 0.0),
            Err(Error::NonFinite)
        );
        assert_eq!(
            Quaternion::from_reals(0.0, 0.0, f64::INFINITY, 0.0),
            Err(Error::NonFinite)
        );
    }

    #[test]
    fn unit_products() {
        let (i, j, k) = (Quaternion::I, Quaternion::J, Quaternion::K);
        assert_eq!(i * j, k);
        assert_eq!(j * i, -k);
        assert_eq!(j * k, i);
        assert_eq!(k * i, j);
        for u in [i, j, k] {
            assert_eq!(u * u, -Quaternion::ONE);
        }
        assert_eq!(i * j * k, -Quaternion::ONE);
        assert_ne!(i * j, j * i);
    }

    #[test]
    fn j_conjugates_complex_scalars() {
        let z = Quaternion::from_complex(Complex::new(3.0, 4.0));
        let zbar = Quaternion::from_complex(Complex::new(3.0, -4.0));
        assert_eq!(Quaternion::J * z, zbar * Quaternion::J);
    }

    #[test]
    fn one_is_identity() {
        let p = q(1.0, 2.0, 3.0, 4.0);
        assert_eq!(Quaternion::ONE * p, p);
        assert_eq!(p * Quaternion::ONE, p);
    }

    #[test]
    fn conjugation_and_norm() {
        assert_eq!(q(1.0, 2.0, 3.0, 4.0).conj(), q(1.0, -2.0, -3.0, -4.0));
        assert_eq!(q(2.5, 0.0, 0.0, 0.0).conj(), q(2.5, 0.0, 0.0, 0.0));
        assert_eq!(Quaternion::J.norm_sq(), 1.0);
        assert_eq!(q(1.0, 2.0, 3.0, 4.0).norm_sq(), 30.0);
        assert_eq!(Quaternion::ZERO.norm_sq(), 0.0);
    }

    #[test]
    fn inverses() {
        assert_eq!(Quaternion::J.inv().unwrap(), -Quaternion::J);
        assert_eq!(q(1.0, 1.0, 0.0, 0.0).inv().unwrap(), q(0.5, -0.5, 0.0, 0.0));
        assert_eq!(Quaternion::ZERO.inv(), Err(Error::DivisionByZero));
        assert_eq!(q(1e-13, 0.0, 0.0, 0.0).inv(), Err(Error::DivisionByZero));
        assert!(q(1e-11, 0.0, 0.0, 0.0).inv().is_ok());
    }

    #[test]
    fn right_quotient_conventions() {
        assert_eq!(
            right_quotient(Quaternion::ONE, Quaternion::J).unwrap(),
            ExtendedQuaternion::Finite(-Quaternion::J)
        );
        assert_eq!(
            right_quotient(Quaternion::J, Quaternion::ZERO).unwrap(),
            ExtendedQuaternion::Infinity
        );
        let p = q(0.3, -1.0, 2.0, 0.5);
        assert_eq!(
            right_quotient(p, Quaternion::ONE).unwrap(),
            ExtendedQuaternion::Finite(p)
        );
        assert_eq!(
            right_quotient(Quaternion::ZERO, Quaternion::ZERO),
            Err(Error::Indeterminate)
        );
    }

    #[test]
    fn chordal_distance_reference_points() {
        let inf = ExtendedQuaternion::Infinity;
        let zero = ExtendedQuaternion::Finite(Quaternion::ZERO);
        assert_eq!(inf.chordal_distance(&inf), 0.0);
        assert_eq!(zero.chordal_distance(&inf), 2.0);
        let p = ExtendedQuaternion::Finite(q(0.3, -1.0, 2.0, 0.5));
        assert_eq!(p.chordal_distance(&p), 0.0);
        assert!(inf == ExtendedQuaternion::Infinity);
    }
}
