//! Conformal maps onto the extended lines `ℂ ∪ {∞}` and `ℚ ∪ {∞}`.

use crate::error::{Error, Result};
use crate::quaternion::{left_quotient, right_quotient, ExtendedQuaternion, Quaternion};
use crate::state::{concurrence_term, schmidt_term, OneQubitState, Quaterbit, TwoQubitState};
use crate::{Complex, ZERO_NORM_SQ};

/// A point of `ℂ ∪ {∞}`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum ExtendedComplex {
    Finite(Complex),
    Infinity,
}

impl ExtendedComplex {
    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedComplex::Infinity)
    }

    /// Embedding `z ↦ z + 0·j`.
    pub fn to_quaternion(&self) -> ExtendedQuaternion {
        match self {
            ExtendedComplex::Finite(z) => ExtendedQuaternion::Finite(Quaternion::from_complex(*z)),
            ExtendedComplex::Infinity => ExtendedQuaternion::Infinity,
        }
    }

    /// Chordal distance on the Riemann sphere (the equatorial S² of the S⁴ chart).
    pub fn chordal_distance(&self, other: &Self) -> f64 {
        self.to_quaternion()
            .chordal_distance(&other.to_quaternion())
    }
}

/// A point on the unit 4-sphere in ℝ⁵.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct S4Point(pub [f64; 5]);

impl S4Point {
    pub const NORTH: S4Point = S4Point([0.0, 0.0, 0.0, 0.0, 1.0]);

    pub fn coords(&self) -> [f64; 5] {
        self.0
    }

    pub fn norm_sq(&self) -> f64 {
        self.0.iter().map(|u| u * u).sum()
    }

    pub fn distance(&self, other: &Self) -> f64 {
        let d: f64 = self
            .0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b) * (a - b))
            .sum();
        libm::sqrt(d)
    }
}

/// Inverse stereographic chart `ℚ ∪ {∞} → S⁴`, north pole at `∞`:
/// `q ↦ (2x0, 2x1, 2x2, 2x3, |q|² − 1) / (|q|² + 1)`.
pub fn inverse_stereographic(p: &ExtendedQuaternion) -> S4Point {
    match p {
        ExtendedQuaternion::Infinity => S4Point::NORTH,
        ExtendedQuaternion::Finite(q) => {
            let n = q.norm_sq();
            let s = 1.0 / (n + 1.0);
            let [x0, x1, x2, x3] = q.to_reals();
            S4Point([
                2.0 * x0 * s,
                2.0 * x1 * s,
                2.0 * x2 * s,
                2.0 * x3 * s,
                (n - 1.0) * s,
            ])
        }
    }
}

/// One-qubit map `α1 α2⁻¹ ∈ ℂ ∪ {∞}`.
pub fn conformal_one_qubit(psi: &OneQubitState) -> Result<ExtendedComplex> {
    let [a1, a2] = psi.amplitudes();
    let (n1, n2) = (a1.norm_sqr(), a2.norm_sqr());
    match (n1 < ZERO_NORM_SQ, n2 < ZERO_NORM_SQ) {
        (true, true) => Err(Error::Indeterminate),
        (false, true) => Ok(ExtendedComplex::Infinity),
        _ => Ok(ExtendedComplex::Finite(a1 * a2.conj() / n2)),
    }
}

/// Quaternionic conformal map `P(q1, q2) = q1 q2⁻¹`.
pub fn conformal_p(qb: &Quaterbit) -> Result<ExtendedQuaternion> {
    right_quotient(qb.q1, qb.q2)
}

/// Dual map `P′(q1, q2) = q2⁻¹ q1`.
pub fn conformal_p_dual(qb: &Quaterbit) -> Result<ExtendedQuaternion> {
    left_quotient(qb.q2, qb.q1)
}

/// `((S + C j)/|q2|², |q2|²)`, with `∞` when `q2 = 0`.
pub fn sc_form(psi: &TwoQubitState) -> (ExtendedQuaternion, f64) {
    let n2 = psi.gamma().norm_sqr() + psi.delta().norm_sqr();
    if n2 < ZERO_NORM_SQ {
        return (ExtendedQuaternion::Infinity, n2);
    }
    let q = Quaternion::from_pair(schmidt_term(psi), concurrence_term(psi)) * (1.0 / n2);
    (ExtendedQuaternion::Finite(q), n2)
}
