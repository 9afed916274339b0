//! Seeded samplers for states and group elements.
//!
//! Every draw comes from a ChaCha8 stream keyed by `(seed, stream)`, so a
//! trial's randomness depends only on its index and never on the order in
//! which trials run.

use core::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::local::{LocalUnitary, Su2, Variant};
use crate::quaternion::Quaternion;
use crate::state::{OneQubitState, TwoQubitState};
use crate::Complex;

pub type TrialRng = ChaCha8Rng;

pub fn trial_rng(seed: u64, stream: u64) -> TrialRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Standard complex Gaussian (independent N(0,1) real and imaginary parts).
pub fn gaussian_complex<R: Rng + ?Sized>(rng: &mut R) -> Complex {
    Complex::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

fn normalize<const N: usize>(mut v: [Complex; N]) -> [Complex; N] {
    let n: f64 = v.iter().map(|z| z.norm_sqr()).sum();
    let r = 1.0 / libm::sqrt(n);
    for z in v.iter_mut() {
        *z *= r;
    }
    v
}

fn gaussian_unit<const N: usize, R: Rng + ?Sized>(rng: &mut R) -> [Complex; N] {
    loop {
        let v: [Complex; N] = core::array::from_fn(|_| gaussian_complex(rng));
        // a draw this close to the origin has probability ~1e-300
        if v.iter().map(|z| z.norm_sqr()).sum::<f64>() > 1e-200 {
            return normalize(v);
        }
    }
}

/// Unitarily invariant state on the unit sphere of ℂ⁴.
pub fn sample_state<R: Rng + ?Sized>(rng: &mut R) -> TwoQubitState {
    TwoQubitState::from_amps(gaussian_unit::<4, _>(rng))
}

pub fn sample_one_qubit<R: Rng + ?Sized>(rng: &mut R) -> OneQubitState {
    let [a1, a2] = gaussian_unit::<2, _>(rng);
    OneQubitState::unnormalized(a1, a2).expect("gaussian draws are finite")
}

/// Haar-uniform SU(2) element `(a b; −b̄ ā)`.
pub fn sample_su2<R: Rng + ?Sized>(rng: &mut R) -> Su2 {
    let [a, b] = gaussian_unit::<2, _>(rng);
    Su2::from_unit(a, b)
}

/// θ uniform on `[0, 2π)` and a Haar SU(2) factor.
pub fn sample_local_unitary<R: Rng + ?Sized>(variant: Variant, rng: &mut R) -> LocalUnitary {
    let theta = TAU * rng.random::<f64>();
    let su2 = sample_su2(rng);
    LocalUnitary::new(variant, theta, su2)
}

/// Quaternion with standard Gaussian components.
pub fn sample_quaternion<R: Rng + ?Sized>(rng: &mut R) -> Quaternion {
    Quaternion::from_pair(gaussian_complex(rng), gaussian_complex(rng))
}

pub fn sample_unit_quaternion<R: Rng + ?Sized>(rng: &mut R) -> Quaternion {
    let [z1, z2] = gaussian_unit::<2, _>(rng);
    Quaternion::from_pair(z1, z2)
}

pub fn haar_random_state(seed: u64) -> TwoQubitState {
    sample_state(&mut trial_rng(seed, 0))
}

pub fn random_local_unitary(variant: Variant, seed: u64) -> LocalUnitary {
    sample_local_unitary(variant, &mut trial_rng(seed, 0))
}
