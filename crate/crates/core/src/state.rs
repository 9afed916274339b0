//! One- and two-qubit pure states and their quaternionic images.
//!
//! Two-qubit amplitudes are stored in the basis order `|00⟩, |01⟩, |10⟩,
//! |11⟩`; the first qubit indexes rows of [`StateMatrix`]. The map
//! `Q(ψ) = (α + βj, γ + δj)` is complex linear when complex scalars act on
//! quaterbits from the left.

use core::ops::Add;

use crate::error::{Error, Result};
use crate::local::ComplexMat4;
use crate::quaternion::Quaternion;
use crate::{Complex, NORMALIZATION_TOLERANCE};

fn all_finite(zs: &[Complex]) -> bool {
    zs.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

fn check_normalized(norm_sq: f64) -> Result<()> {
    if (norm_sq - 1.0).abs() <= NORMALIZATION_TOLERANCE {
        Ok(())
    } else {
        Err(Error::NotNormalized { norm_sq })
    }
}

/// `α1|0⟩ + α2|1⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct OneQubitState {
    a1: Complex,
    a2: Complex,
}

impl OneQubitState {
    pub fn new(a1: Complex, a2: Complex) -> Result<Self> {
        let s = Self::unnormalized(a1, a2)?;
        check_normalized(s.norm_sq())?;
        Ok(s)
    }

    /// Rescales onto the unit sphere.
    pub fn normalized(a1: Complex, a2: Complex) -> Result<Self> {
        let s = Self::unnormalized(a1, a2)?;
        let n = s.norm_sq();
        if n < crate::ZERO_NORM_SQ {
            return Err(Error::ZeroVector);
        }
        let r = 1.0 / libm::sqrt(n);
        Ok(Self {
            a1: a1 * r,
            a2: a2 * r,
        })
    }

    pub fn unnormalized(a1: Complex, a2: Complex) -> Result<Self> {
        if all_finite(&[a1, a2]) {
            Ok(Self { a1, a2 })
        } else {
            Err(Error::NonFinite)
        }
    }

    pub fn amplitudes(&self) -> [Complex; 2] {
        [self.a1, self.a2]
    }

    pub fn norm_sq(&self) -> f64 {
        self.a1.norm_sqr() + self.a2.norm_sqr()
    }

    /// `M·ψ` for a 2×2 complex matrix.
    pub fn apply(&self, m: &[[Complex; 2]; 2]) -> Self {
        Self {
            a1: m[0][0] * self.a1 + m[0][1] * self.a2,
            a2: m[1][0] * self.a1 + m[1][1] * self.a2,
        }
    }
}

/// `α|00⟩ + β|01⟩ + γ|10⟩ + δ|11⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TwoQubitState {
    #[cfg_attr(feature = "serde", serde(rename = "amplitudes"))]
    amps: [Complex; 4],
}

impl TwoQubitState {
    /// Validates finiteness and unit norm (within `NORMALIZATION_TOLERANCE`).
    pub fn new(amps: [Complex; 4]) -> Result<Self> {
        let s = Self::unnormalized(amps)?;
        check_normalized(s.norm_sq())?;
        Ok(s)
    }

    pub fn normalized(amps: [Complex; 4]) -> Result<Self> {
        let s = Self::unnormalized(amps)?;
        let n = s.norm_sq();
        if n < crate::ZERO_NORM_SQ {
            return Err(Error::ZeroVector);
        }
        Ok(s.scaled(Complex::new(1.0 / libm::sqrt(n), 0.0)))
    }

    /// Any finite vector of ℂ⁴. Linear maps are defined on the whole space,
    /// so normalization is only enforced by [`TwoQubitState::new`].
    pub fn unnormalized(amps: [Complex; 4]) -> Result<Self> {
        if all_finite(&amps) {
            Ok(Self { amps })
        } else {
            Err(Error::NonFinite)
        }
    }

    pub(crate) const fn from_amps(amps: [Complex; 4]) -> Self {
        Self { amps }
    }

    /// Computational basis state `|xy⟩`, `index = 2x + y`.
    pub fn basis(index: usize) -> Self {
        let mut amps = [Complex::new(0.0, 0.0); 4];
        amps[index] = Complex::new(1.0, 0.0);
        Self { amps }
    }

    /// `(|00⟩ + |11⟩)/√2`.
    pub fn bell() -> Self {
        let h = Complex::new(core::f64::consts::FRAC_1_SQRT_2, 0.0);
        let z = Complex::new(0.0, 0.0);
        Self { amps: [h, z, z, h] }
    }

    /// `|φ⟩ ⊗ |χ⟩`.
    pub fn product(first: &OneQubitState, second: &OneQubitState) -> Self {
        let [a, b] = first.amplitudes();
        let [c, d] = second.amplitudes();
        Self {
            amps: [a * c, a * d, b * c, b * d],
        }
    }

    pub fn amplitudes(&self) -> [Complex; 4] {
        self.amps
    }

    pub fn alpha(&self) -> Complex {
        self.amps[0]
    }

    pub fn beta(&self) -> Complex {
        self.amps[1]
    }

    pub fn gamma(&self) -> Complex {
        self.amps[2]
    }

    pub fn delta(&self) -> Complex {
        self.amps[3]
    }

    pub fn norm_sq(&self) -> f64 {
        self.amps.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn scaled(&self, c: Complex) -> Self {
        Self {
            amps: self.amps.map(|z| c * z),
        }
    }

    /// Largest amplitude-wise modulus of the difference.
    pub fn distance(&self, other: &Self) -> f64 {
        self.amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn matrix(&self) -> StateMatrix {
        state_matrix(self)
    }
}

impl Add for TwoQubitState {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut amps = self.amps;
        for (a, b) in amps.iter_mut().zip(rhs.amps) {
            *a += b;
        }
        Self { amps }
    }
}

/// Quaternionic spinor `q1|0̃⟩ + q2|1̃⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Quaterbit {
    pub q1: Quaternion,
    pub q2: Quaternion,
}

impl Quaterbit {
    pub fn new(q1: Quaternion, q2: Quaternion) -> Self {
        Self { q1, q2 }
    }

    pub fn norm_sq(&self) -> f64 {
        self.q1.norm_sq() + self.q2.norm_sq()
    }

    /// Complex scalar acting from the left on both components.
    pub fn left_scale(&self, c: Complex) -> Self {
        Self::new(self.q1.left_scale(c), self.q2.left_scale(c))
    }

    /// Quaternion scalar acting from the right, `(q1 s, q2 s)`.
    pub fn right_scale(&self, s: Quaternion) -> Self {
        Self::new(self.q1 * s, self.q2 * s)
    }

    /// Componentwise conjugate, the bra of the spinor.
    pub fn conj(&self) -> Self {
        Self::new(self.q1.conj(), self.q2.conj())
    }

    /// Largest component-wise quaternion distance.
    pub fn distance(&self, other: &Self) -> f64 {
        self.q1.distance(&other.q1).max(self.q2.distance(&other.q2))
    }
}

impl Add for Quaterbit {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.q1 + rhs.q1, self.q2 + rhs.q2)
    }
}

/// `Ψ = (α β; γ δ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateMatrix(pub [[Complex; 2]; 2]);

impl StateMatrix {
    pub fn det(&self) -> Complex {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn row(&self, i: usize) -> [Complex; 2] {
        self.0[i]
    }

    /// `Σ_k a_k · conj(b_k)`, linear in the first argument.
    pub fn row_inner(&self, a: usize, b: usize) -> Complex {
        let (ra, rb) = (self.0[a], self.0[b]);
        ra[0] * rb[0].conj() + ra[1] * rb[1].conj()
    }

    pub fn to_state(&self) -> TwoQubitState {
        let m = &self.0;
        TwoQubitState::from_amps([m[0][0], m[0][1], m[1][0], m[1][1]])
    }
}

/// `Q(ψ) = (α + βj, γ + δj)`.
pub fn quaternionify(psi: &TwoQubitState) -> Quaterbit {
    let [a, b, c, d] = psi.amps;
    Quaterbit::new(Quaternion::from_pair(a, b), Quaternion::from_pair(c, d))
}

/// Inverse of [`quaternionify`].
pub fn dequaternionify(qb: &Quaterbit) -> TwoQubitState {
    TwoQubitState::from_amps([qb.q1.z1(), qb.q1.z2(), qb.q2.z1(), qb.q2.z2()])
}

pub fn state_matrix(psi: &TwoQubitState) -> StateMatrix {
    let [a, b, c, d] = psi.amps;
    StateMatrix([[a, b], [c, d]])
}

/// `S = αγ̄ + βδ̄`.
pub fn schmidt_term(psi: &TwoQubitState) -> Complex {
    let [a, b, c, d] = psi.amps;
    a * c.conj() + b * d.conj()
}

/// `C = βγ − αδ`, which is `−det Ψ`.
pub fn concurrence_term(psi: &TwoQubitState) -> Complex {
    let [a, b, c, d] = psi.amps;
    b * c - a * d
}

/// `⟨ψ|σy⊗σy|ψ̄⟩`, evaluated with the explicit 4×4 operator.
pub fn wootters_preconcurrence(psi: &TwoQubitState) -> Complex {
    let i = Complex::new(0.0, 1.0);
    let z = Complex::new(0.0, 0.0);
    let sigma_y = [[z, -i], [i, z]];
    let yy = ComplexMat4::kron(&sigma_y, &sigma_y);
    let conj = psi.amps.map(|a| a.conj());
    let image = yy.apply(&conj);
    conj.iter()
        .zip(image.iter())
        .map(|(bra, ket)| bra * ket)
        .sum()
}

/// `|C| < tol`.
pub fn is_separable(psi: &TwoQubitState, tol: f64) -> bool {
    concurrence_term(psi).norm() < tol
}
