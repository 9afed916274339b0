//! Local unitary subgroups of Sp(2) and the matrix machinery around them.
//!
//! `𝓑 ≅ SO(2)⊗SU(2)` rotates the first qubit by a real rotation and the
//! second by an SU(2) element; `𝓑′ ≅ SU(2)⊗SO(2)` swaps the roles. On
//! quaterbits, `𝓑` acts as `R(θ)·(q1, q2)·(a − b̄j)` and `𝓑′` as
//! `A·(q1, q2)·(cos θ − sin θ j)` with complex entries multiplying from the left.

use core::fmt;
use core::ops::{Add, Mul, Neg};

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;
use crate::state::{state_matrix, Quaterbit, StateMatrix, TwoQubitState};
use crate::{Complex, NORMALIZATION_TOLERANCE};

const C0: Complex = Complex::new(0.0, 0.0);
const C1: Complex = Complex::new(1.0, 0.0);

/// Which local subgroup a [`LocalUnitary`] belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Variant {
    /// `SO(2)` on the first qubit, `SU(2)` on the second.
    So2xSu2,
    /// `SU(2)` on the first qubit, `SO(2)` on the second.
    Su2xSo2,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::So2xSu2 => "so2xsu2",
            Variant::Su2xSo2 => "su2xso2",
        })
    }
}

/// `(a b; −b̄ ā)` with `|a|² + |b|² = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Su2 {
    a: Complex,
    b: Complex,
}

impl Su2 {
    pub const IDENTITY: Su2 = Su2 { a: C1, b: C0 };

    pub fn new(a: Complex, b: Complex) -> Result<Self> {
        if ![a.re, a.im, b.re, b.im].iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite);
        }
        let norm_sq = a.norm_sqr() + b.norm_sqr();
        if (norm_sq - 1.0).abs() > NORMALIZATION_TOLERANCE {
            return Err(Error::NotNormalized { norm_sq });
        }
        Ok(Self { a, b })
    }

    pub fn normalized(a: Complex, b: Complex) -> Result<Self> {
        let n = a.norm_sqr() + b.norm_sqr();
        if !n.is_finite() {
            return Err(Error::NonFinite);
        }
        if n < crate::ZERO_NORM_SQ {
            return Err(Error::ZeroVector);
        }
        let r = 1.0 / libm::sqrt(n);
        Self::new(a * r, b * r)
    }

    pub(crate) const fn from_unit(a: Complex, b: Complex) -> Self {
        Self { a, b }
    }

    /// `[a, b]`.
    pub fn params(&self) -> [Complex; 2] {
        [self.a, self.b]
    }

    pub fn matrix(&self) -> [[Complex; 2]; 2] {
        [[self.a, self.b], [-self.b.conj(), self.a.conj()]]
    }
}

/// `R(θ) = (cos θ  sin θ; −sin θ  cos θ)`.
pub fn rotation(theta: f64) -> [[f64; 2]; 2] {
    let (s, c) = (libm::sin(theta), libm::cos(theta));
    [[c, s], [-s, c]]
}

fn complexify2(m: &[[f64; 2]; 2]) -> [[Complex; 2]; 2] {
    m.map(|row| row.map(|x| Complex::new(x, 0.0)))
}

/// An element of `𝓑` or `𝓑′`, stored as its parameters `(θ, a, b)`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LocalUnitary {
    variant: Variant,
    theta: f64,
    su2: Su2,
}

impl LocalUnitary {
    pub fn new(variant: Variant, theta: f64, su2: Su2) -> Self {
        Self {
            variant,
            theta,
            su2,
        }
    }

    /// As [`LocalUnitary::new`], rejecting a non-finite angle.
    pub fn try_new(variant: Variant, theta: f64, su2: Su2) -> Result<Self> {
        if theta.is_finite() {
            Ok(Self::new(variant, theta, su2))
        } else {
            Err(Error::NonFinite)
        }
    }

    pub fn identity(variant: Variant) -> Self {
        Self::new(variant, 0.0, Su2::IDENTITY)
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn su2(&self) -> Su2 {
        self.su2
    }

    pub fn rotation(&self) -> [[f64; 2]; 2] {
        rotation(self.theta)
    }

    fn expect(&self, variant: Variant) -> Result<()> {
        if self.variant == variant {
            Ok(())
        } else {
            Err(Error::WrongVariant { expected: variant })
        }
    }

    /// The complex 4×4 form: `R(θ)⊗A` for `𝓑`, `A⊗R(θ)` for `𝓑′`.
    pub fn complex_matrix(&self) -> ComplexMat4 {
        let r = complexify2(&self.rotation());
        let a = self.su2.matrix();
        match self.variant {
            Variant::So2xSu2 => ComplexMat4::kron(&r, &a),
            Variant::Su2xSo2 => ComplexMat4::kron(&a, &r),
        }
    }

    /// Unit quaternion multiplying quaterbits from the right:
    /// `a − b̄j` for `𝓑`, `cos θ − sin θ j` for `𝓑′`.
    pub fn right_factor(&self) -> Quaternion {
        match self.variant {
            Variant::So2xSu2 => Quaternion::from_pair(self.su2.a, -self.su2.b.conj()),
            Variant::Su2xSo2 => Quaternion::from_pair(
                Complex::new(libm::cos(self.theta), 0.0),
                Complex::new(-libm::sin(self.theta), 0.0),
            ),
        }
    }

    /// Quaternionic 2×2 matrix with entries `L_ij · s`, where `L` is the
    /// left factor (`R(θ)` or `A`) and `s` the right factor.
    pub fn quat_matrix(&self) -> QuatMat2 {
        let left = match self.variant {
            Variant::So2xSu2 => complexify2(&self.rotation()),
            Variant::Su2xSo2 => self.su2.matrix(),
        };
        let s = self.right_factor();
        QuatMat2(left.map(|row| row.map(|z| Quaternion::from_complex(z) * s)))
    }
}

/// 2×2 matrix over the quaternions.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct QuatMat2(pub [[Quaternion; 2]; 2]);

impl QuatMat2 {
    pub const IDENTITY: QuatMat2 = QuatMat2([
        [Quaternion::ONE, Quaternion::ZERO],
        [Quaternion::ZERO, Quaternion::ONE],
    ]);

    pub fn new(m11: Quaternion, m12: Quaternion, m21: Quaternion, m22: Quaternion) -> Self {
        Self([[m11, m12], [m21, m22]])
    }

    pub fn diag(p: Quaternion, q: Quaternion) -> Self {
        Self::new(p, Quaternion::ZERO, Quaternion::ZERO, q)
    }

    pub fn from_real(m: &[[f64; 2]; 2]) -> Self {
        Self(m.map(|row| row.map(Quaternion::real)))
    }

    /// Every entry multiplied on the right by `s`.
    pub fn right_scaled(&self, s: Quaternion) -> Self {
        Self(self.0.map(|row| row.map(|m| m * s)))
    }

    /// `(M†)_ij = conj(m_ji)`.
    pub fn dagger(&self) -> Self {
        let m = &self.0;
        Self::new(
            m[0][0].conj(),
            m[1][0].conj(),
            m[0][1].conj(),
            m[1][1].conj(),
        )
    }

    /// Largest entry-wise quaternion distance.
    pub fn distance(&self, other: &Self) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                d = d.max(self.0[i][j].distance(&other.0[i][j]));
            }
        }
        d
    }
}

impl Mul for QuatMat2 {
    type Output = Self;
    /// `(MM′)_ij = m_i1 m′_1j + m_i2 m′_2j`.
    fn mul(self, rhs: Self) -> Self {
        let (a, b) = (&self.0, &rhs.0);
        Self(core::array::from_fn(|i| {
            core::array::from_fn(|j| a[i][0] * b[0][j] + a[i][1] * b[1][j])
        }))
    }
}

impl Add for QuatMat2 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(core::array::from_fn(|i| {
            core::array::from_fn(|j| self.0[i][j] + rhs.0[i][j])
        }))
    }
}

impl Neg for QuatMat2 {
    type Output = Self;
    fn neg(self) -> Self {
        Self(self.0.map(|row| row.map(|m| -m)))
    }
}

/// 4×4 complex matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMat4(pub [[Complex; 4]; 4]);

impl ComplexMat4 {
    pub const ZERO: ComplexMat4 = ComplexMat4([[C0; 4]; 4]);

    pub fn identity() -> Self {
        Self(core::array::from_fn(|i| {
            core::array::from_fn(|j| if i == j { C1 } else { C0 })
        }))
    }

    pub fn diag(d: [Complex; 4]) -> Self {
        Self(core::array::from_fn(|i| {
            core::array::from_fn(|j| if i == j { d[i] } else { C0 })
        }))
    }

    pub fn from_real(m: &[[f64; 4]; 4]) -> Self {
        Self(m.map(|row| row.map(|x| Complex::new(x, 0.0))))
    }

    /// Kronecker product `A ⊗ B`, row index `2i + k`, column index `2j + l`.
    pub fn kron(a: &[[Complex; 2]; 2], b: &[[Complex; 2]; 2]) -> Self {
        Self(core::array::from_fn(|r| {
            core::array::from_fn(|c| a[r / 2][c / 2] * b[r % 2][c % 2])
        }))
    }

    /// Assembles `(TL TR; BL BR)` from 2×2 blocks.
    pub fn from_blocks(blocks: [[[[Complex; 2]; 2]; 2]; 2]) -> Self {
        Self(core::array::from_fn(|r| {
            core::array::from_fn(|c| blocks[r / 2][c / 2][r % 2][c % 2])
        }))
    }

    pub fn transpose(&self) -> Self {
        Self(core::array::from_fn(|i| {
            core::array::from_fn(|j| self.0[j][i])
        }))
    }

    pub fn conj(&self) -> Self {
        Self(self.0.map(|row| row.map(|z| z.conj())))
    }

    pub fn dagger(&self) -> Self {
        self.transpose().conj()
    }

    pub fn apply(&self, v: &[Complex; 4]) -> [Complex; 4] {
        core::array::from_fn(|i| (0..4).map(|j| self.0[i][j] * v[j]).sum())
    }

    /// Largest entry-wise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                d = d.max((self.0[i][j] - other.0[i][j]).norm());
            }
        }
        d
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        (self.dagger() * *self).max_abs_diff(&Self::identity()) < tol
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn det(&self) -> Complex {
        let mut m = self.0;
        let mut det = C1;
        for col in 0..4 {
            let pivot = (col..4)
                .max_by(|&a, &b| m[a][col].norm_sqr().total_cmp(&m[b][col].norm_sqr()))
                .unwrap_or(col);
            if m[pivot][col].norm_sqr() == 0.0 {
                return C0;
            }
            if pivot != col {
                m.swap(pivot, col);
                det = -det;
            }
            let p = m[col][col];
            det *= p;
            let pivot_row = m[col];
            for row in m.iter_mut().skip(col + 1) {
                let f = row[col] / p;
                for (x, v) in row.iter_mut().zip(pivot_row).skip(col) {
                    *x -= f * v;
                }
            }
        }
        det
    }
}

impl Mul for ComplexMat4 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self(core::array::from_fn(|i| {
            core::array::from_fn(|j| (0..4).map(|k| self.0[i][k] * rhs.0[k][j]).sum())
        }))
    }
}

impl Add for ComplexMat4 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(core::array::from_fn(|i| {
            core::array::from_fn(|j| self.0[i][j] + rhs.0[i][j])
        }))
    }
}

impl Neg for ComplexMat4 {
    type Output = Self;
    fn neg(self) -> Self {
        Self(self.0.map(|row| row.map(|z| -z)))
    }
}

/// `ε = −iσ2 = (0 −1; 1 0)`.
pub fn epsilon() -> [[Complex; 2]; 2] {
    [[C0, -C1], [C1, C0]]
}

/// `J = I ⊗ ε`.
pub fn symplectic_form() -> ComplexMat4 {
    ComplexMat4::kron(&[[C1, C0], [C0, C1]], &epsilon())
}

/// `J′ = ε ⊗ I`.
pub fn symplectic_form_swapped() -> ComplexMat4 {
    ComplexMat4::kron(&epsilon(), &[[C1, C0], [C0, C1]])
}

/// `R(θ) ⊗ A` for an element of `𝓑`.
pub fn cb_matrix(b: &LocalUnitary) -> Result<ComplexMat4> {
    b.expect(Variant::So2xSu2)?;
    Ok(b.complex_matrix())
}

/// The complex 4×4 form of `g` applied to the amplitude vector.
pub fn apply_cb(g: &LocalUnitary, psi: &TwoQubitState) -> TwoQubitState {
    TwoQubitState::from_amps(g.complex_matrix().apply(&psi.amplitudes()))
}

/// `(A ⊗ R(θ))ψ` for an element of `𝓑′`.
pub fn apply_cbprime(bp: &LocalUnitary, psi: &TwoQubitState) -> Result<TwoQubitState> {
    bp.expect(Variant::Su2xSo2)?;
    Ok(apply_cb(bp, psi))
}

fn mul2(a: &[[Complex; 2]; 2], b: &[[Complex; 2]; 2]) -> [[Complex; 2]; 2] {
    core::array::from_fn(|i| core::array::from_fn(|j| a[i][0] * b[0][j] + a[i][1] * b[1][j]))
}

/// `Ψ ↦ A′ Ψ Aᵀ`, the matrix form of `(A′ ⊗ A)|ψ⟩`.
pub fn apply_local_pair(
    a_prime: &[[Complex; 2]; 2],
    a: &Su2,
    psi: &TwoQubitState,
) -> TwoQubitState {
    let m = a.matrix();
    let a_t = [[m[0][0], m[1][0]], [m[0][1], m[1][1]]];
    let StateMatrix(psi_m) = state_matrix(psi);
    StateMatrix(mul2(&mul2(a_prime, &psi_m), &a_t)).to_state()
}

/// `R(θ)·(q1, q2)·(a − b̄j)`.
pub fn apply_b_quaterbit(b: &LocalUnitary, qb: &Quaterbit) -> Result<Quaterbit> {
    b.expect(Variant::So2xSu2)?;
    let [[r11, r12], [r21, r22]] = b.rotation();
    let rotated = Quaterbit::new(qb.q1 * r11 + qb.q2 * r12, qb.q1 * r21 + qb.q2 * r22);
    Ok(rotated.right_scale(b.right_factor()))
}

/// `(a q1 + b q2, −b̄ q1 + ā q2)·(cos θ − sin θ j)`.
pub fn apply_bprime_quaterbit(bp: &LocalUnitary, qb: &Quaterbit) -> Result<Quaterbit> {
    bp.expect(Variant::Su2xSo2)?;
    let [[a11, a12], [a21, a22]] = bp.su2.matrix();
    let left = Quaterbit::new(
        qb.q1.left_scale(a11) + qb.q2.left_scale(a12),
        qb.q1.left_scale(a21) + qb.q2.left_scale(a22),
    );
    Ok(left.right_scale(bp.right_factor()))
}

/// `M†M = I` entry-wise within `tol`.
pub fn sp2_check_quaternionic(m: &QuatMat2, tol: f64) -> bool {
    (m.dagger() * *m).distance(&QuatMat2::IDENTITY) < tol
}

/// `U` unitary and `U J Uᵀ = J` with `J = I ⊗ ε`.
pub fn sp2_check_complex(u: &ComplexMat4, tol: f64) -> bool {
    let j = symplectic_form();
    u.is_unitary(tol) && (*u * j * u.transpose()).max_abs_diff(&j) < tol
}

/// `U` unitary and `Uᵀ J′ U = J′` with `J′ = ε ⊗ I`.
pub fn sp2_check_complex_swapped(u: &ComplexMat4, tol: f64) -> bool {
    let j = symplectic_form_swapped();
    u.is_unitary(tol) && (u.transpose() * j * *u).max_abs_diff(&j) < tol
}

/// Block of the quaternion `z1 + z2 j` in the complex representation.
fn quaternion_block(q: &Quaternion) -> [[Complex; 2]; 2] {
    let (z1, z2) = (q.z1(), q.z2());
    [[z1, -z2], [z2.conj(), z1.conj()]]
}

/// Entry-wise complexification: each `m_ij = z1 + z2 j` becomes the 2×2
/// block `(z1 −z2; z̄2 z̄1)`, and the blocks keep the layout of `M`.
///
/// This is an injective `*`-homomorphism `M(2,ℚ) → M(4,ℂ)` whose image is
/// `{U : J U J⁻¹ = Ū}` for `J = I ⊗ ε`.
pub fn complexify(m: &QuatMat2) -> ComplexMat4 {
    let b = |i: usize, j: usize| quaternion_block(&m.0[i][j]);
    ComplexMat4::from_blocks([[b(0, 0), b(0, 1)], [b(1, 0), b(1, 1)]])
}

/// Quartered complexification: writing `M = Z1 + Z2 j` with complex 2×2
/// `Z1`, `Z2`, returns `(Z1 −Z2; Z̄2 Z̄1)`. The image preserves `J′ = ε ⊗ I`.
pub fn complexify_swapped(m: &QuatMat2) -> ComplexMat4 {
    let z1: [[Complex; 2]; 2] = m.0.map(|row| row.map(|q| q.z1()));
    let z2: [[Complex; 2]; 2] = m.0.map(|row| row.map(|q| q.z2()));
    let neg = |x: [[Complex; 2]; 2]| x.map(|row| row.map(|z| -z));
    let conj = |x: [[Complex; 2]; 2]| x.map(|row| row.map(|z| z.conj()));
    ComplexMat4::from_blocks([[z1, neg(z2)], [conj(z2), conj(z1)]])
}

/// `J U J⁻¹ = Ū` within `tol`.
pub fn is_quaternionic_complex_matrix(u: &ComplexMat4, tol: f64) -> bool {
    let j = symplectic_form();
    // J⁻¹ = −J
    (j * *u * -j).max_abs_diff(&u.conj()) < tol
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{sample_local_unitary, sample_quaternion, sample_state, trial_rng};
    use crate::state::{concurrence_term, quaternionify};
    use core::f64::consts::{FRAC_PI_2, PI};

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn random_quat_mat(rng: &mut crate::sampling::TrialRng) -> QuatMat2 {
        QuatMat2(core::array::from_fn(|_| {
            core::array::from_fn(|_| sample_quaternion(rng))
        }))
    }

    #[test]
    fn cb_matrix_examples() {
        let id = LocalUnitary::identity(Variant::So2xSu2);
        assert_eq!(
            cb_matrix(&id)
                .unwrap()
                .max_abs_diff(&ComplexMat4::identity()),
            0.0
        );
        let quarter = LocalUnitary::new(Variant::So2xSu2, FRAC_PI_2, Su2::IDENTITY);
        let expected = ComplexMat4::from_real(&[
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [-1.0, 0.0, 0.0, 0.0],
            [0.0, -1.0, 0.0, 0.0],
        ]);
        assert!(cb_matrix(&quarter).unwrap().max_abs_diff(&expected) < 1e-16);
        let bp = LocalUnitary::identity(Variant::Su2xSo2);
        assert_eq!(
            cb_matrix(&bp),
            Err(Error::WrongVariant {
                expected: Variant::So2xSu2
            })
        );
    }

    #[test]
    fn cb_matrix_is_unitary() {
        let mut rng = trial_rng(1, 0);
        for _ in 0..100 {
            let b = sample_local_unitary(Variant::So2xSu2, &mut rng);
            assert!(cb_matrix(&b).unwrap().is_unitary(1e-12));
        }
    }

    #[test]
    fn apply_cb_examples() {
        let psi = TwoQubitState::bell();
        assert_eq!(
            apply_cb(&LocalUnitary::identity(Variant::So2xSu2), &psi),
            psi
        );
        let quarter = LocalUnitary::new(Variant::So2xSu2, FRAC_PI_2, Su2::IDENTITY);
        let out = apply_cb(&quarter, &TwoQubitState::basis(0));
        let expected = TwoQubitState::basis(2).scaled(c(-1.0, 0.0));
        assert!(out.distance(&expected) < 1e-16);
        let mut rng = trial_rng(2, 0);
        for _ in 0..50 {
            let b = sample_local_unitary(Variant::So2xSu2, &mut rng);
            let cterm = concurrence_term(&apply_cb(&b, &psi));
            assert!((cterm.norm() - 0.5).abs() < 1e-14);
        }
    }

    #[test]
    fn local_pair_matches_kronecker() {
        let mut rng = trial_rng(3, 0);
        for _ in 0..200 {
            let b = sample_local_unitary(Variant::So2xSu2, &mut rng);
            let psi = sample_state(&mut rng);
            let r = b.rotation().map(|row| row.map(|x| c(x, 0.0)));
            let pair = apply_local_pair(&r, &b.su2(), &psi);
            assert!(pair.distance(&apply_cb(&b, &psi)) < 1e-13);
        }
        let psi = TwoQubitState::basis(0);
        let id2 = [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]];
        assert_eq!(apply_local_pair(&id2, &Su2::IDENTITY, &psi), psi);
        let r_pi = rotation(PI).map(|row| row.map(|x| c(x, 0.0)));
        let out = apply_local_pair(&r_pi, &Su2::IDENTITY, &psi);
        assert!(out.distance(&psi.scaled(c(-1.0, 0.0))) < 1e-15);
    }

    #[test]
    fn quaterbit_actions_reduce_to_right_scalars() {
        let mut rng = trial_rng(4, 0);
        let qb = quaternionify(&sample_state(&mut rng));
        let id = LocalUnitary::identity(Variant::So2xSu2);
        assert_eq!(apply_b_quaterbit(&id, &qb).unwrap(), qb);
        let idp = LocalUnitary::identity(Variant::Su2xSo2);
        assert_eq!(apply_bprime_quaterbit(&idp, &qb).unwrap(), qb);

        let su2 = crate::sampling::sample_su2(&mut rng);
        let [a, b] = su2.params();
        let g = LocalUnitary::new(Variant::So2xSu2, 0.0, su2);
        let s = Quaternion::from_pair(a, -b.conj());
        let out = apply_b_quaterbit(&g, &qb).unwrap();
        assert!(out.distance(&qb.right_scale(s)) < 1e-15);

        let theta = 0.7;
        let gp = LocalUnitary::new(Variant::Su2xSo2, theta, Su2::IDENTITY);
        let t = Quaternion::from_reals(libm::cos(theta), 0.0, -libm::sin(theta), 0.0).unwrap();
        let out = apply_bprime_quaterbit(&gp, &qb).unwrap();
        assert!(out.distance(&qb.right_scale(t)) < 1e-15);

        assert!(apply_b_quaterbit(&gp, &qb).is_err());
        assert!(apply_bprime_quaterbit(&g, &qb).is_err());
    }

    #[test]
    fn cbprime_examples() {
        let psi = sample_state(&mut trial_rng(5, 0));
        let idp = LocalUnitary::identity(Variant::Su2xSo2);
        assert_eq!(apply_cbprime(&idp, &psi).unwrap(), psi);
        let theta = 1.1;
        let gp = LocalUnitary::new(Variant::Su2xSo2, theta, Su2::IDENTITY);
        let id2 = [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]];
        let r = complexify2(&rotation(theta));
        let expected = ComplexMat4::kron(&id2, &r).apply(&psi.amplitudes());
        let out = apply_cbprime(&gp, &psi).unwrap();
        assert!(out.distance(&TwoQubitState::unnormalized(expected).unwrap()) < 1e-16);
        let c_before = concurrence_term(&psi).norm();
        let mut rng = trial_rng(5, 1);
        for _ in 0..100 {
            let g = sample_local_unitary(Variant::Su2xSo2, &mut rng);
            let c_after = concurrence_term(&apply_cbprime(&g, &psi).unwrap()).norm();
            assert!((c_before - c_after).abs() < 1e-12);
        }
        assert!(apply_cbprime(&LocalUnitary::identity(Variant::So2xSu2), &psi).is_err());
    }

    #[test]
    fn sp2_quaternionic_examples() {
        assert!(sp2_check_quaternionic(&QuatMat2::IDENTITY, 1e-12));
        let two = Quaternion::from_reals(2.0, 0.0, 0.0, 0.0).unwrap();
        assert!(!sp2_check_quaternionic(
            &QuatMat2::diag(two, Quaternion::ONE),
            1e-12
        ));
        let mut rng = trial_rng(6, 0);
        for _ in 0..100 {
            let b = sample_local_unitary(Variant::So2xSu2, &mut rng);
            assert!(sp2_check_quaternionic(&b.quat_matrix(), 1e-12));
        }
    }

    #[test]
    fn sp2_complex_examples() {
        assert!(sp2_check_complex(&ComplexMat4::identity(), 1e-12));
        let d = ComplexMat4::diag([c(1.0, 0.0), c(0.0, 1.0), c(1.0, 0.0), c(1.0, 0.0)]);
        assert!(d.is_unitary(1e-12));
        assert!(!sp2_check_complex(&d, 1e-12));
        let mut rng = trial_rng(7, 0);
        for _ in 0..100 {
            let b = sample_local_unitary(Variant::So2xSu2, &mut rng);
            assert!(sp2_check_complex(&cb_matrix(&b).unwrap(), 1e-12));
            let bp = sample_local_unitary(Variant::Su2xSo2, &mut rng);
            assert!(sp2_check_complex_swapped(&bp.complex_matrix(), 1e-12));
        }
    }

    #[test]
    fn complexify_reference_images() {
        assert_eq!(complexify(&QuatMat2::IDENTITY), ComplexMat4::identity());
        let jj = QuatMat2::diag(Quaternion::J, Quaternion::J);
        let displayed_j = ComplexMat4::from_real(&[
            [0.0, -1.0, 0.0, 0.0],
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, -1.0],
            [0.0, 0.0, 1.0, 0.0],
        ]);
        assert_eq!(complexify(&jj), displayed_j);
        assert_eq!(symplectic_form(), displayed_j);
        assert_eq!(
            complexify_swapped(&QuatMat2::IDENTITY),
            ComplexMat4::identity()
        );
        assert_eq!(complexify_swapped(&jj), symplectic_form_swapped());
    }

    #[test]
    fn complexify_is_a_star_homomorphism() {
        let mut rng = trial_rng(8, 0);
        for _ in 0..500 {
            let m = random_quat_mat(&mut rng);
            let n = random_quat_mat(&mut rng);
            for f in [complexify, complexify_swapped] {
                assert!((f(&(m * n))).max_abs_diff(&(f(&m) * f(&n))) < 1e-12);
                assert!((f(&(m + n))).max_abs_diff(&(f(&m) + f(&n))) < 1e-12);
                assert!((f(&m.dagger())).max_abs_diff(&f(&m).dagger()) < 1e-12);
            }
            assert!(is_quaternionic_complex_matrix(&complexify(&m), 1e-12));
        }
    }

    #[test]
    fn quaternionic_characterization() {
        assert!(is_quaternionic_complex_matrix(&symplectic_form(), 1e-12));
        let d = ComplexMat4::diag([c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0), c(4.0, 0.0)]);
        assert!(!is_quaternionic_complex_matrix(&d, 1e-12));
    }

    #[test]
    fn sp2_definitions_agree_on_complexified_images() {
        let mut rng = trial_rng(9, 0);
        for i in 0..200 {
            let m = if i % 2 == 0 {
                sample_local_unitary(Variant::So2xSu2, &mut rng).quat_matrix()
            } else {
                random_quat_mat(&mut rng)
            };
            assert_eq!(
                sp2_check_quaternionic(&m, 1e-10),
                sp2_check_complex(&complexify(&m), 1e-10)
            );
        }
    }

    #[test]
    fn swapped_complexification_of_bprime_preserves_swapped_form() {
        let mut rng = trial_rng(10, 0);
        for _ in 0..200 {
            let bp = sample_local_unitary(Variant::Su2xSo2, &mut rng);
            assert!(sp2_check_complex_swapped(
                &complexify_swapped(&bp.quat_matrix()),
                1e-12
            ));
        }
    }

    #[test]
    fn determinant() {
        assert_eq!(ComplexMat4::identity().det(), c(1.0, 0.0));
        let d = ComplexMat4::diag([c(1.0, 0.0), c(2.0, 0.0), c(0.0, 3.0), c(4.0, 0.0)]);
        assert!((d.det() - c(0.0, 24.0)).norm() < 1e-14);
        assert!((symplectic_form().det() - c(1.0, 0.0)).norm() < 1e-15);
        assert_eq!(ComplexMat4::ZERO.det(), c(0.0, 0.0));
    }
}
