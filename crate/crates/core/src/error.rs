use std::error;
use std::fmt;

use crate::semiring::DomainKind;

/// Errors raised by algebra operations.
///
/// Every fallible operation in this crate reports one of these variants
/// rather than panicking, so callers can surface precise diagnostics for
/// user-supplied data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands were built over different ranks.
    RankMismatch { left: usize, right: usize },
    /// The ambient rank is too small for the requested operation.
    RankTooSmall { rank: usize, min: usize },
    /// The ambient rank exceeds what the word representation supports.
    RankTooLarge { rank: usize, max: usize },
    /// A basis index does not exist in rank `rank`.
    IndexOutOfRange { index: usize, rank: usize },
    /// A word was supplied whose indices are not strictly increasing.
    WordNotIncreasing,
    /// Negation was requested on a term of degree 0 or 1, where the
    /// symmetrized structure provides none.
    NegationUndefined { degree: usize },
    /// A degree-0 or degree-1 coefficient carried a nonzero negated slot.
    NegSlotBelowDegreeTwo { degree: usize },
    /// The operation requires a pure-degree input but the terms mix degrees.
    MixedDegrees { op: &'static str },
    /// The input degree falls outside the range the operation supports.
    DegreeOutOfRange {
        op: &'static str,
        degree: usize,
        min: usize,
        max: usize,
    },
    /// The degrees of the two factors exceed the ambient rank.
    DegreeSumExceedsRank {
        left: usize,
        right: usize,
        rank: usize,
    },
    /// A balanced multivector was supplied where a nondegenerate one is
    /// required.
    BalancedInput,
    /// The requested truncation order is too small to carry the check.
    TruncationTooSmall { trunc: usize, needed: usize },
    /// The operation is only defined over some scalar domains.
    UnsupportedDomain {
        op: &'static str,
        domain: DomainKind,
    },
    /// A derivation order outside the supported range was requested.
    OrderOutOfRange { order: usize },
    /// A matrix row has the wrong number of entries.
    MatrixShape { row: usize, len: usize, rank: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RankMismatch { left, right } => {
                write!(f, "rank mismatch: {left} vs {right}")
            }
            Error::RankTooSmall { rank, min } => {
                write!(f, "rank {rank} is too small: need at least {min}")
            }
            Error::RankTooLarge { rank, max } => {
                write!(f, "rank {rank} is too large: at most {max} is supported")
            }
            Error::IndexOutOfRange { index, rank } => {
                write!(f, "basis index {index} out of range for rank {rank}")
            }
            Error::WordNotIncreasing => {
                write!(f, "word indices must be strictly increasing")
            }
            Error::NegationUndefined { degree } => {
                write!(
                    f,
                    "negation is undefined on degree {degree}: only terms of degree >= 2 \
                     have a negated companion"
                )
            }
            Error::NegSlotBelowDegreeTwo { degree } => {
                write!(
                    f,
                    "coefficient of degree {degree} carries a nonzero negated slot, \
                     but negation only exists in degree >= 2"
                )
            }
            Error::MixedDegrees { op } => {
                write!(f, "{op} requires a pure-degree input, got mixed degrees")
            }
            Error::DegreeOutOfRange {
                op,
                degree,
                min,
                max,
            } => {
                write!(
                    f,
                    "{op} supports degrees {min}..={max}, got degree {degree}"
                )
            }
            Error::DegreeSumExceedsRank { left, right, rank } => {
                write!(f, "degrees {left} + {right} exceed the ambient rank {rank}")
            }
            Error::BalancedInput => {
                write!(
                    f,
                    "input is balanced (pos = neg), so the check is degenerate"
                )
            }
            Error::TruncationTooSmall { trunc, needed } => {
                write!(
                    f,
                    "truncation order {trunc} too small: need at least {needed}"
                )
            }
            Error::UnsupportedDomain { op, domain } => {
                write!(f, "{op} is not supported over the {domain} domain")
            }
            Error::OrderOutOfRange { order } => {
                write!(
                    f,
                    "derivation order {order} out of range: supported orders are 1..=4"
                )
            }
            Error::MatrixShape { row, len, rank } => {
                write!(f, "matrix row {row} has {len} entries, expected {rank}")
            }
        }
    }
}

impl error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Error raised while decoding matrices, scalars, or multivectors from
/// JSON or CSV input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    message: String,
}

impl ParseError {
    pub fn new(message: impl Into<String>) -> Self {
        ParseError {
            message: message.into(),
        }
    }

    /// Wraps the message with the surrounding field, for nested decoders.
    pub fn in_field(self, field: impl fmt::Display) -> Self {
        ParseError {
            message: format!("{field}: {}", self.message),
        }
    }

    pub fn message(&self) -> &str {
        &self.message
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error: {}", self.message)
    }
}

impl error::Error for ParseError {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_names_the_operation_and_bounds() {
        let err = Error::DegreeOutOfRange {
            op: "quasi_inverse",
            degree: 1,
            min: 2,
            max: 5,
        };
        assert_eq!(
            err.to_string(),
            "quasi_inverse supports degrees 2..=5, got degree 1"
        );
    }

    #[test]
    fn parse_error_nests_field_context() {
        let err = ParseError::new("expected an integer").in_field("row 2, column 0");
        assert_eq!(
            err.to_string(),
            "parse error: row 2, column 0: expected an integer"
        );
    }

    #[test]
    fn errors_are_std_errors() {
        fn takes_error(_: &dyn error::Error) {}
        takes_error(&Error::WordNotIncreasing);
        takes_error(&ParseError::new("x"));
    }
}
