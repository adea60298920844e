use std::fmt;

use crate::error::{Error, Result};
use crate::multivector::MultiVector;
use crate::pair::Pair;
use crate::semiring::Semiring;

/// A polynomial in a formal variable `z` with multivector coefficients,
/// truncated at `z^trunc`.
///
/// Exactly `trunc + 1` coefficient slots are stored (zeros included), so
/// equality compares both the coefficients and the truncation order.
/// Derivation series and quasi-inverses both live here: the former are
/// genuinely truncated series, the latter exact polynomials whose degree
/// happens to be known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZPoly<S: Semiring> {
    rank: usize,
    coeffs: Vec<MultiVector<S>>,
}

impl<S: Semiring> ZPoly<S> {
    pub fn zero(rank: usize, trunc: usize) -> Self {
        ZPoly {
            rank,
            coeffs: vec![MultiVector::zero(rank); trunc + 1],
        }
    }

    /// Builds a polynomial from the coefficients of `z^0, z^1, ...`,
    /// padding with zeros up to `trunc`.
    pub fn from_coeffs(rank: usize, trunc: usize, coeffs: Vec<MultiVector<S>>) -> Result<Self> {
        assert!(
            coeffs.len() <= trunc + 1,
            "more coefficients than the truncation order admits"
        );
        for c in &coeffs {
            if c.rank() != rank {
                return Err(Error::RankMismatch {
                    left: rank,
                    right: c.rank(),
                });
            }
        }
        let mut out = ZPoly::zero(rank, trunc);
        for (k, c) in coeffs.into_iter().enumerate() {
            out.coeffs[k] = c;
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The coefficient of `z^k`, or `None` beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Option<&MultiVector<S>> {
        self.coeffs.get(k)
    }

    pub fn coeffs(&self) -> &[MultiVector<S>] {
        &self.coeffs
    }

    pub(crate) fn set_coeff(&mut self, k: usize, value: MultiVector<S>) {
        debug_assert!(k < self.coeffs.len());
        debug_assert_eq!(value.rank(), self.rank);
        self.coeffs[k] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MultiVector::is_zero)
    }

    /// Largest `k` with a nonzero `z^k` coefficient.
    pub fn z_degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Adds two polynomials; the result is reliable only up to the
    /// smaller truncation order, so that is where it truncates.
    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.rank != rhs.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: rhs.rank,
            });
        }
        let trunc = self.trunc().min(rhs.trunc());
        let mut out = ZPoly::zero(self.rank, trunc);
        for k in 0..=trunc {
            out.coeffs[k] = self.coeffs[k].add(&rhs.coeffs[k])?;
        }
        Ok(out)
    }

    /// Multiplies by `z^k`: coefficients move up and the truncation order
    /// rises with them, so no information is lost.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![MultiVector::zero(self.rank); k];
        coeffs.extend(self.coeffs.iter().cloned());
        ZPoly {
            rank: self.rank,
            coeffs,
        }
    }

    /// Scales every coefficient by a pair scalar.
    pub fn scale(&self, c: &Pair<S>) -> Result<Self> {
        let mut out = ZPoly::zero(self.rank, self.trunc());
        for (k, mv) in self.coeffs.iter().enumerate() {
            out.coeffs[k] = mv.scale(c)?;
        }
        Ok(out)
    }

    /// Wedges every coefficient by a fixed multivector on the right.
    pub fn wedge_mv(&self, rhs: &MultiVector<S>) -> Result<Self> {
        let mut out = ZPoly::zero(self.rank, self.trunc());
        for (k, mv) in self.coeffs.iter().enumerate() {
            out.coeffs[k] = mv.wedge(rhs)?;
        }
        Ok(out)
    }

    /// Wedges every coefficient by a fixed multivector on the left.
    pub fn mv_wedge(lhs: &MultiVector<S>, rhs: &Self) -> Result<Self> {
        let mut out = ZPoly::zero(rhs.rank, rhs.trunc());
        for (k, mv) in rhs.coeffs.iter().enumerate() {
            out.coeffs[k] = lhs.wedge(mv)?;
        }
        Ok(out)
    }

    /// Negates every coefficient (all must have degree >= 2).
    pub fn negate(&self) -> Result<Self> {
        let mut out = ZPoly::zero(self.rank, self.trunc());
        for (k, mv) in self.coeffs.iter().enumerate() {
            out.coeffs[k] = mv.negate()?;
        }
        Ok(out)
    }

    /// The convolution product, truncated where the sparser information
    /// runs out.
    pub fn series_wedge(&self, rhs: &Self) -> Result<Self> {
        if self.rank != rhs.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: rhs.rank,
            });
        }
        let trunc = self.trunc().min(rhs.trunc());
        let mut out = ZPoly::zero(self.rank, trunc);
        for i in 0..=trunc {
            for j in 0..=(trunc - i) {
                let product = self.coeffs[i].wedge(&rhs.coeffs[j])?;
                let mut acc =
                    std::mem::replace(&mut out.coeffs[i + j], MultiVector::zero(self.rank));
                acc = acc.add(&product)?;
                out.coeffs[i + j] = acc;
            }
        }
        Ok(out)
    }
}

impl<S: Semiring> fmt::Display for ZPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                f.write_str(" + ")?;
            }
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})·z")?,
                _ => write!(f, "({c})·z^{k}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}
