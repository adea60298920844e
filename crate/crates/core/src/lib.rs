//! Exterior semialgebra over exact semirings, with signs carried by
//! symmetrized coefficient pairs instead of subtraction.
//!
//! The crate builds the reduced exterior algebra on `n` generators
//! (`n ≤ 16`) over a pluggable scalar domain: arbitrary-precision
//! integers, rationals, naturals, the two-element boolean semiring, or
//! the max-plus semiring. Coefficients are [`Pair`]s `(pos, neg)`
//! multiplied with the twist rule, so negation is the slot swap and
//! "equals up to cancellation" becomes the surpassing relation tested
//! by [`Pair::surpass_witness`] and [`MultiVector::surpasses`].
//!
//! On top of the algebra sit the derivation series of an endomorphism
//! ([`hs_coefficient`], [`hs_series`], [`schur_higher_derivation`]),
//! quasi-inverses of that series ([`quasi_inverse`], [`ovd_step`]), and
//! the Cayley-Hamilton style balance checks ([`eigen_data`],
//! [`check_precheh`], [`check_cayley_hamilton`],
//! [`ch_corollary_residual`]) together with the verification routines
//! [`check_quasi_inverse`] and [`check_prech`].

pub mod cayley_hamilton;
pub mod derivation;
pub mod endo;
pub mod error;
pub mod multivector;
pub mod pair;
pub mod quasi_inverse;
pub mod semiring;
pub mod series;
pub mod word;

pub use cayley_hamilton::{
    ch_corollary_residual, check_cayley_hamilton, check_precheh, eigen_data, ChOutcome, EigenData,
    PrechehOutcome,
};
pub use derivation::{compositions, hs_coefficient, hs_series, schur_higher_derivation};
pub use endo::Endomorphism;
pub use error::{Error, ParseError, Result};
pub use multivector::MultiVector;
pub use pair::Pair;
pub use quasi_inverse::{check_prech, check_quasi_inverse, ovd_step, quasi_inverse};
pub use semiring::{Boolean, DomainKind, MaxPlus, Semiring};
pub use series::ZPoly;
pub use word::{sort_word, SortedWord, Word, MAX_RANK};

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;

/// Multivector over arbitrary-precision integers.
pub type IntMultiVector = MultiVector<BigInt>;
/// Multivector over arbitrary-precision rationals.
pub type RatMultiVector = MultiVector<BigRational>;
/// Multivector over arbitrary-precision naturals.
pub type NatMultiVector = MultiVector<BigUint>;
/// Multivector over the two-element boolean semiring.
pub type BoolMultiVector = MultiVector<Boolean>;
/// Multivector over the max-plus semiring.
pub type MaxPlusMultiVector = MultiVector<MaxPlus>;

/// Endomorphism over arbitrary-precision integers.
pub type IntEndomorphism = Endomorphism<BigInt>;
/// Endomorphism over arbitrary-precision rationals.
pub type RatEndomorphism = Endomorphism<BigRational>;
/// Endomorphism over arbitrary-precision naturals.
pub type NatEndomorphism = Endomorphism<BigUint>;
/// Endomorphism over the two-element boolean semiring.
pub type BoolEndomorphism = Endomorphism<Boolean>;
/// Endomorphism over the max-plus semiring.
pub type MaxPlusEndomorphism = Endomorphism<MaxPlus>;
