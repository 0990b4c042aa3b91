//! Error type shared by every module in the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in this crate.
///
/// All operations are exact; there are no rounding or approximation errors.
/// Failures are either domain violations (invalid modulus, branch index out
/// of range, mismatched lengths) or `i64` overflow, which is always detected
/// and reported instead of wrapping.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A modulus smaller than 2 was supplied.
    #[error("modulus must be an integer >= 2, got {0}")]
    InvalidModulus(i64),

    /// A root degree smaller than 1 was supplied.
    #[error("root degree must be a positive integer, got {0}")]
    InvalidRootDegree(i64),

    /// `gcd(0, 0)` has no greatest common divisor.
    #[error("gcd(0, 0) is undefined")]
    GcdUndefined,

    /// Modular inverse requested for a non-unit; carries the offending gcd.
    #[error("{value} is not invertible mod {modulus}: gcd({value}, {modulus}) = {gcd}")]
    NotInvertible {
        /// The value that has no inverse.
        value: i64,
        /// The modulus it was to be inverted against.
        modulus: i64,
        /// The shared factor that blocks inversion.
        gcd: i64,
    },

    /// An intermediate value left the representable `i64` range.
    #[error("integer overflow during {op}")]
    Overflow {
        /// The operation in which the overflow occurred.
        op: &'static str,
    },

    /// A list argument did not have the required number of entries.
    #[error("expected {expected} elements, got {actual}")]
    LengthMismatch {
        /// Required length.
        expected: usize,
        /// Supplied length.
        actual: usize,
    },

    /// A branch index outside `{0, ..., degree - 1}` was supplied.
    #[error("branch index {index} is out of range for a degree-{degree} root")]
    BranchIndexOutOfRange {
        /// The offending branch index.
        index: i64,
        /// The root degree that bounds valid indices.
        degree: i64,
    },

    /// An exhaustive search was requested beyond the caller's budget.
    #[error(
        "exhaustive search over {degree}^{modulus} = {candidates} branch vectors \
         exceeds the enumeration budget of {cap}"
    )]
    BudgetExceeded {
        /// Branches per element (the base of the count).
        degree: i64,
        /// Number of elements (the exponent of the count).
        modulus: i64,
        /// Total candidate count, saturating at `u128::MAX`.
        candidates: u128,
        /// The caller-supplied budget.
        cap: u64,
    },

    /// A power collapsed a root set below the size its index vector needs.
    #[error("set collapsed under the power map: gcd with the modulus is {gcd}, positional indexing undefined")]
    CollapsedSet {
        /// The gcd that forced the collapse.
        gcd: i64,
    },

    /// A serialized unit-circle point was not in canonical form.
    #[error("{num}/{den} is not a canonical turn fraction (need 0 <= num < den in lowest terms)")]
    NotCanonical {
        /// Supplied numerator.
        num: i64,
        /// Supplied denominator.
        den: i64,
    },
}
