use core::fmt;

use crate::local::Variant;

/// Failures of the geometric primitives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// A constructor received NaN or an infinite component.
    NonFinite,
    /// Inversion of a quaternion (or complex number) below the zero threshold.
    DivisionByZero,
    /// A quotient `0 · 0⁻¹`, which has no value on the extended line.
    Indeterminate,
    /// A state or group parameter is off the unit sphere by more than the tolerance.
    NotNormalized { norm_sq: f64 },
    /// The zero vector cannot be normalized.
    ZeroVector,
    /// The operation is only defined for the other local subgroup.
    WrongVariant { expected: Variant },
    /// Numerator and denominator of a fractional-linear map vanished together.
    DegenerateMap,
    /// The coefficient matrix of a fractional-linear map is not invertible.
    SingularMatrix,
    /// A recorded case does not carry the inputs its check needs.
    MismatchedInputs,
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFinite => f.write_str("non-finite component"),
            Error::DivisionByZero => f.write_str("division by a zero quaternion"),
            Error::Indeterminate => f.write_str("indeterminate quotient 0/0"),
            Error::NotNormalized { norm_sq } => {
                write!(f, "vector is not normalized (squared norm {norm_sq})")
            }
            Error::ZeroVector => f.write_str("zero vector"),
            Error::WrongVariant { expected } => {
                write!(f, "operation requires a {expected} local unitary")
            }
            Error::DegenerateMap => f.write_str("numerator and denominator vanish simultaneously"),
            Error::SingularMatrix => f.write_str("coefficient matrix is singular"),
            Error::MismatchedInputs => f.write_str("inputs do not match the check"),
        }
    }
}

impl core::error::Error for Error {}
