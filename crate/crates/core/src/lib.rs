//! Quaternionic geometry of two-qubit pure states.
//!
//! A two-qubit state `α|00⟩ + β|01⟩ + γ|10⟩ + δ|11⟩` is carried to the
//! quaterbit `(α + βj, γ + δj)` and from there to the extended quaternion
//! line by `q1 q2⁻¹`. The local unitary subgroup `SO(2)⊗SU(2)` of Sp(2)
//! acts on that line by quaternionic Möbius transformations, and
//! [`harness`] checks every square of that picture on random inputs.
//!
//! The crate is `no_std` and needs only `alloc` (for reports).

#![no_std]

extern crate alloc;

pub mod conformal;
pub mod error;
pub mod harness;
pub mod local;
pub mod moebius;
pub mod quaternion;
pub mod sampling;
pub mod state;

pub use conformal::{
    conformal_one_qubit, conformal_p, conformal_p_dual, inverse_stereographic, sc_form,
    ExtendedComplex, S4Point,
};
pub use error::{Error, Result};
pub use local::{ComplexMat4, LocalUnitary, QuatMat2, Su2, Variant};
pub use moebius::{Action, MoebiusC, MoebiusQ};
pub use quaternion::{right_quotient, ExtendedQuaternion, Quaternion};
pub use state::{OneQubitState, Quaterbit, StateMatrix, TwoQubitState};

pub type Complex = num_complex::Complex64;

/// Squared norms below this count as zero when inverting.
pub const ZERO_NORM_SQ: f64 = 1e-24;

/// Default absolute tolerance for comparisons.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Allowed deviation of a squared norm from 1 at construction.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-9;
