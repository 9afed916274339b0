//! Complex and quaternionic Möbius transformations.
//!
//! The canonical quaternionic action puts coefficients on the right and the
//! inverse denominator on the right:
//!
//! ```text
//! F_M(q) = (q m11 + m12)(q m21 + m22)⁻¹,   F_M(∞) = m11 m21⁻¹,   F_M(−m22 m21⁻¹) = ∞
//! ```
//!
//! Two reorderings are kept behind [`Action`] for comparison.
//!
//! Composition only follows the matrix product, `F_{MM′} = F_M ∘ F_{M′}`,
//! for coefficient matrices of the form `(real 2×2)·s` with a common right
//! unit quaternion `s` (the family built by [`MoebiusQ::from_b`]). For
//! generic quaternionic entries the canonical action does not compose this
//! way; the left-coefficient form [`Action::LeftCoefficients`] does.

use crate::conformal::ExtendedComplex;
use crate::error::{Error, Result};
use crate::local::{complexify, LocalUnitary, QuatMat2, Su2, Variant};
use crate::quaternion::{ExtendedQuaternion, Quaternion};
use crate::{Complex, ZERO_NORM_SQ};

const SINGULAR_DET: f64 = 1e-12;

/// `z ↦ (az + b)/(cz + d)` on the Riemann sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MoebiusC {
    pub a: Complex,
    pub b: Complex,
    pub c: Complex,
    pub d: Complex,
}

impl MoebiusC {
    pub fn new(a: Complex, b: Complex, c: Complex, d: Complex) -> Result<Self> {
        if ![a, b, c, d]
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
        {
            return Err(Error::NonFinite);
        }
        if (a * d - b * c).norm_sqr() < ZERO_NORM_SQ {
            return Err(Error::SingularMatrix);
        }
        Ok(Self { a, b, c, d })
    }

    /// The transformation of the SU(2) matrix `(a b; −b̄ ā)`.
    pub fn from_su2(u: &Su2) -> Self {
        let [[a, b], [c, d]] = u.matrix();
        Self { a, b, c, d }
    }

    pub fn apply(&self, z: &ExtendedComplex) -> Result<ExtendedComplex> {
        let (num, den) = match z {
            ExtendedComplex::Infinity => (self.a, self.c),
            ExtendedComplex::Finite(z) => (self.a * z + self.b, self.c * z + self.d),
        };
        match (num.norm_sqr() < ZERO_NORM_SQ, den.norm_sqr() < ZERO_NORM_SQ) {
            (true, true) => Err(Error::DegenerateMap),
            (false, true) => Ok(ExtendedComplex::Infinity),
            _ => Ok(ExtendedComplex::Finite(num / den)),
        }
    }
}

/// Order of factors in the quaternionic fractional-linear action.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Action {
    /// `(q m11 + m12)(q m21 + m22)⁻¹`, the canonical form.
    RightCoefficients,
    /// `(q m21 + m22)⁻¹(q m11 + m12)`; `∞ ↦ m21⁻¹ m11`.
    LeftDenominator,
    /// `(m11 q + m12)(m21 q + m22)⁻¹`; `∞ ↦ m11 m21⁻¹`.
    LeftCoefficients,
}

/// Quaternionic Möbius transformation with an invertible coefficient matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MoebiusQ {
    m: QuatMat2,
}

impl MoebiusQ {
    /// Rejects matrices whose complexification is singular.
    pub fn new(m: QuatMat2) -> Result<Self> {
        let finite =
            m.0.iter()
                .flatten()
                .all(|q| q.to_reals().iter().all(|x| x.is_finite()));
        if !finite {
            return Err(Error::NonFinite);
        }
        if complexify(&m).det().norm() < SINGULAR_DET {
            return Err(Error::SingularMatrix);
        }
        Ok(Self { m })
    }

    pub fn identity() -> Self {
        Self {
            m: QuatMat2::IDENTITY,
        }
    }

    pub fn matrix(&self) -> &QuatMat2 {
        &self.m
    }

    /// QMT of an element of `𝓑`: `m_ij = R(θ)_ij·(a − bj)`.
    pub fn from_b(b: &LocalUnitary) -> Result<Self> {
        if b.variant() != Variant::So2xSu2 {
            return Err(Error::WrongVariant {
                expected: Variant::So2xSu2,
            });
        }
        let [a, bb] = b.su2().params();
        let s = Quaternion::from_pair(a, -bb);
        Self::new(QuatMat2::from_real(&b.rotation()).right_scaled(s))
    }

    /// The same construction for `𝓑′`: `m_ij = A_ij·(cos θ − sin θ j)`.
    pub fn from_bprime(bp: &LocalUnitary) -> Result<Self> {
        if bp.variant() != Variant::Su2xSo2 {
            return Err(Error::WrongVariant {
                expected: Variant::Su2xSo2,
            });
        }
        Self::new(bp.quat_matrix())
    }

    /// The canonical action.
    pub fn apply(&self, q: &ExtendedQuaternion) -> Result<ExtendedQuaternion> {
        self.apply_with(Action::RightCoefficients, q)
    }

    pub fn apply_with(&self, action: Action, q: &ExtendedQuaternion) -> Result<ExtendedQuaternion> {
        let [[m11, m12], [m21, m22]] = self.m.0;
        let (num, den) = match (q, action) {
            (ExtendedQuaternion::Infinity, _) => (m11, m21),
            (ExtendedQuaternion::Finite(q), Action::RightCoefficients)
            | (ExtendedQuaternion::Finite(q), Action::LeftDenominator) => {
                (*q * m11 + m12, *q * m21 + m22)
            }
            (ExtendedQuaternion::Finite(q), Action::LeftCoefficients) => {
                (m11 * *q + m12, m21 * *q + m22)
            }
        };
        match (num.is_zero(), den.is_zero()) {
            (true, true) => Err(Error::DegenerateMap),
            (false, true) => Ok(ExtendedQuaternion::Infinity),
            _ => {
                let inv = den.inv()?;
                Ok(ExtendedQuaternion::Finite(match action {
                    Action::LeftDenominator => inv * num,
                    _ => num * inv,
                }))
            }
        }
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            m: self.m * other.m,
        }
    }

    /// All entries negated; acts identically.
    pub fn negated(&self) -> Self {
        Self { m: -self.m }
    }
}
