use num_traits::Zero;

use crate::derivation::{hs_with_table, PowerTable};
use crate::endo::Endomorphism;
use crate::error::{Error, Result};
use crate::multivector::MultiVector;
use crate::pair::Pair;
use crate::quasi_inverse::quasi_inverse;
use crate::semiring::Semiring;
use crate::word::Word;

/// The eigen pairs `e_0, …, e_n` and derived pairs `h_0, …, h_n` of an
/// endomorphism on a rank-`n` semialgebra.
///
/// `e_i` is the coefficient of the top word in the `z^i` slot of the
/// quasi-inverse of the top word; `h_i` is the analogous coefficient of
/// the order-`i` derivation of the top word. Over a ring the formal
/// difference `e_i.pos - e_i.neg` equals the `λ^{n-i}` coefficient of
/// the characteristic polynomial `det(λI - f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenData<S: Semiring> {
    rank: usize,
    /// Eigen pairs, indexed `0..=rank`.
    pub e: Vec<Pair<S>>,
    /// Derived pairs, indexed `0..=rank`.
    pub h: Vec<Pair<S>>,
}

impl<S: Semiring> EigenData<S> {
    /// Rank of the endomorphism the data was computed from.
    pub fn rank(&self) -> usize {
        self.rank
    }
}

/// Verdict of [`check_precheh`]: the convolution pair and whether it is
/// balanced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrechehOutcome<S: Semiring> {
    /// Whether `combined` has equal slots.
    pub balanced: bool,
    /// `Σ_i e_i · h_{n-i}`.
    pub combined: Pair<S>,
}

/// Verdict of a Cayley-Hamilton style check: the residual multivector
/// and whether it is balanced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChOutcome<S: Semiring> {
    /// Whether `residual` is balanced, i.e. the relation holds.
    pub holds: bool,
    /// The combined left-plus-negated-right multivector.
    pub residual: MultiVector<S>,
}

fn top_word<S: Semiring>(rank: usize) -> Result<(Word, MultiVector<S>)> {
    let indices: Vec<usize> = (0..rank).collect();
    let word = Word::from_increasing(&indices, rank)?;
    let mv = MultiVector::basis_word(rank, &indices)?;
    Ok((word, mv))
}

/// Computes the eigen pairs and derived pairs of `f` by expanding the
/// quasi-inverse and the derivation series of the top word.
pub fn eigen_data<S: Semiring>(f: &Endomorphism<S>) -> Result<EigenData<S>> {
    let rank = f.rank();
    if rank < 2 {
        return Err(Error::RankTooSmall { rank, min: 2 });
    }
    let (word, mv) = top_word::<S>(rank)?;
    let q = quasi_inverse(f, &mv)?;
    let table = PowerTable::new(f, rank);
    let mut e = Vec::with_capacity(rank + 1);
    let mut h = Vec::with_capacity(rank + 1);
    for i in 0..=rank {
        let ei = match q.coeff(i) {
            Some(c) => c.coeff(&word),
            None => Pair::zero(),
        };
        e.push(ei);
        h.push(hs_with_table(&table, i, &mv).coeff(&word));
    }
    Ok(EigenData { rank, e, h })
}

/// Checks that the convolution `Σ_i e_i · h_{n-i}` of the eigen pairs
/// against the derived pairs is balanced.
pub fn check_precheh<S: Semiring>(f: &Endomorphism<S>) -> Result<PrechehOutcome<S>> {
    let data = eigen_data(f)?;
    let n = data.rank;
    let mut combined = Pair::zero();
    for i in 0..=n {
        combined = combined.ref_add(&data.e[i].ref_mul(&data.h[n - i]));
    }
    let balanced = combined.is_balanced();
    Ok(PrechehOutcome { balanced, combined })
}

fn check_word_indices(word: Word, rank: usize) -> Result<()> {
    for index in word.indices() {
        if index >= rank {
            return Err(Error::IndexOutOfRange { index, rank });
        }
    }
    Ok(())
}

/// Evaluates the Cayley-Hamilton relation on the split word `u ∧ v`:
/// forms `X = Σ_k e_k.pos · D_{n-k}(u) ∧ v` and the same sum `Y` built
/// from the `neg` slots, and reports whether `X + negate(Y)` is
/// balanced.
///
/// `u` must have degree at least 1 and `v` degree exactly
/// `rank - degree(u)`; the words need not be disjoint (shared indices
/// annihilate the wedges involved).
pub fn check_cayley_hamilton<S: Semiring>(
    f: &Endomorphism<S>,
    u: Word,
    v: Word,
) -> Result<ChOutcome<S>> {
    let rank = f.rank();
    if rank < 2 {
        return Err(Error::RankTooSmall { rank, min: 2 });
    }
    check_word_indices(u, rank)?;
    check_word_indices(v, rank)?;
    let du = u.degree();
    if du < 1 {
        return Err(Error::DegreeOutOfRange {
            op: "check_cayley_hamilton",
            degree: du,
            min: 1,
            max: rank,
        });
    }
    let expected = rank - du;
    if v.degree() != expected {
        return Err(Error::DegreeOutOfRange {
            op: "check_cayley_hamilton",
            degree: v.degree(),
            min: expected,
            max: expected,
        });
    }

    let data = eigen_data(f)?;
    let u_mv = MultiVector::basis_word(rank, &u.indices())?;
    let v_mv = MultiVector::basis_word(rank, &v.indices())?;
    let table = PowerTable::new(f, rank);

    let mut x = MultiVector::zero(rank);
    let mut y = MultiVector::zero(rank);
    for k in 0..=rank {
        let wedge_k = hs_with_table(&table, rank - k, &u_mv).wedge(&v_mv)?;
        if wedge_k.is_zero() {
            continue;
        }
        x.add_assign_unchecked(&wedge_k.scale(&Pair::embed(data.e[k].pos.clone()))?);
        y.add_assign_unchecked(&wedge_k.scale(&Pair::embed(data.e[k].neg.clone()))?);
    }
    let residual = x.add(&y.negate()?)?;
    let holds = residual.is_balanced();
    Ok(ChOutcome { holds, residual })
}

/// Evaluates the Cayley-Hamilton corollary on a full multivector `u` of
/// pure degree at least 2: the combination
/// `Σ_k e_k.pos · D_{n-k}(u) + negate(e_k.neg · D_{n-k}(u))` must be
/// balanced.
pub fn ch_corollary_residual<S: Semiring>(
    f: &Endomorphism<S>,
    u: &MultiVector<S>,
) -> Result<ChOutcome<S>> {
    let rank = f.rank();
    if rank < 2 {
        return Err(Error::RankTooSmall { rank, min: 2 });
    }
    if rank != u.rank() {
        return Err(Error::RankMismatch {
            left: rank,
            right: u.rank(),
        });
    }
    if u.is_zero() {
        return Ok(ChOutcome {
            holds: true,
            residual: MultiVector::zero(rank),
        });
    }
    let degree = match u.pure_degree() {
        Some(d) => d,
        None => {
            return Err(Error::MixedDegrees {
                op: "ch_corollary_residual",
            })
        }
    };
    if degree < 2 {
        return Err(Error::DegreeOutOfRange {
            op: "ch_corollary_residual",
            degree,
            min: 2,
            max: rank,
        });
    }

    let data = eigen_data(f)?;
    let table = PowerTable::new(f, rank);
    let mut residual = MultiVector::zero(rank);
    for k in 0..=rank {
        let derived = hs_with_table(&table, rank - k, u);
        if derived.is_zero() {
            continue;
        }
        let positive = derived.scale(&Pair::embed(data.e[k].pos.clone()))?;
        let negative = derived
            .scale(&Pair::embed(data.e[k].neg.clone()))?
            .negate()?;
        residual.add_assign_unchecked(&positive);
        residual.add_assign_unchecked(&negative);
    }
    let holds = residual.is_balanced();
    Ok(ChOutcome { holds, residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    use crate::semiring::Boolean;

    type IntMv = MultiVector<BigInt>;
    type IntEndo = Endomorphism<BigInt>;

    fn p(pos: i64, neg: i64) -> Pair<BigInt> {
        Pair::new(BigInt::from(pos), BigInt::from(neg))
    }

    fn int_matrix(rows: &[&[i64]]) -> IntEndo {
        IntEndo::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn word(indices: &[usize], rank: usize) -> Word {
        Word::from_increasing(indices, rank).unwrap()
    }

    #[test]
    fn eigen_pairs_of_the_swap() {
        let f = int_matrix(&[&[0, 1], &[1, 0]]);
        let data = eigen_data(&f).unwrap();
        assert_eq!(data.e, vec![p(1, 0), p(0, 0), p(0, 1)]);
        assert_eq!(data.h, vec![p(1, 0), p(0, 0), p(2, 1)]);
    }

    #[test]
    fn eigen_pairs_match_the_characteristic_polynomial_of_a_diagonal() {
        // det(λI - diag(2,3)) = λ² - 5λ + 6.
        let f = int_matrix(&[&[2, 0], &[0, 3]]);
        let data = eigen_data(&f).unwrap();
        assert_eq!(data.e, vec![p(1, 0), p(0, 5), p(6, 0)]);
    }

    #[test]
    fn eigen_pairs_of_the_zero_endomorphism() {
        let data = eigen_data(&IntEndo::zero(3)).unwrap();
        assert_eq!(data.e[0], p(1, 0));
        assert_eq!(data.h[0], p(1, 0));
        for i in 1..=3 {
            assert_eq!(data.e[i], Pair::zero());
            assert_eq!(data.h[i], Pair::zero());
        }
    }

    #[test]
    fn eigen_pairs_over_the_booleans() {
        let ones = Endomorphism::new(vec![
            vec![Boolean(true), Boolean(true)],
            vec![Boolean(true), Boolean(true)],
        ])
        .unwrap();
        let data = eigen_data(&ones).unwrap();
        assert_eq!(
            data.e,
            vec![
                Pair::new(Boolean(true), Boolean(false)),
                Pair::new(Boolean(false), Boolean(true)),
                Pair::new(Boolean(true), Boolean(true)),
            ]
        );
    }

    #[test]
    fn eigen_data_requires_rank_two() {
        assert_eq!(
            eigen_data(&IntEndo::identity(1)),
            Err(Error::RankTooSmall { rank: 1, min: 2 })
        );
    }

    #[test]
    fn convolution_of_eigen_and_derived_pairs_balances() {
        let swap = int_matrix(&[&[0, 1], &[1, 0]]);
        let outcome = check_precheh(&swap).unwrap();
        assert!(outcome.balanced);
        assert_eq!(outcome.combined, p(2, 2));

        let zero = IntEndo::zero(3);
        let outcome = check_precheh(&zero).unwrap();
        assert!(outcome.balanced);
        assert_eq!(outcome.combined, Pair::zero());

        let dense = int_matrix(&[&[1, -2, 0], &[3, 0, 1], &[-1, 1, 2]]);
        assert!(check_precheh(&dense).unwrap().balanced);
    }

    #[test]
    fn cayley_hamilton_on_the_swap() {
        let swap = int_matrix(&[&[0, 1], &[1, 0]]);
        let out = check_cayley_hamilton(&swap, word(&[0], 2), word(&[1], 2)).unwrap();
        assert!(out.holds);
        let expected = IntMv::from_terms(2, [(vec![0usize, 1], p(1, 1))]).unwrap();
        assert_eq!(out.residual, expected);
    }

    #[test]
    fn cayley_hamilton_with_the_zero_endomorphism_has_zero_residual() {
        let f = IntEndo::zero(3);
        let out = check_cayley_hamilton(&f, word(&[0], 3), word(&[1, 2], 3)).unwrap();
        assert!(out.holds);
        assert!(out.residual.is_zero());
    }

    #[test]
    fn cayley_hamilton_on_dense_integer_matrices() {
        let dense = int_matrix(&[&[1, -2, 0], &[3, 0, 1], &[-1, 1, 2]]);
        for (u, v) in [
            (word(&[0], 3), word(&[1, 2], 3)),
            (word(&[1], 3), word(&[0, 2], 3)),
            (word(&[0, 1], 3), word(&[2], 3)),
            (word(&[0, 1, 2], 3), word(&[], 3)),
        ] {
            let out = check_cayley_hamilton(&dense, u, v).unwrap();
            assert!(out.holds, "residual not balanced for u={u}, v={v}");
        }
    }

    #[test]
    fn cayley_hamilton_with_overlapping_words_is_balanced() {
        let swap = int_matrix(&[&[0, 1], &[1, 0]]);
        let out = check_cayley_hamilton(&swap, word(&[0], 2), word(&[0], 2)).unwrap();
        assert!(out.holds);
    }

    #[test]
    fn cayley_hamilton_guards() {
        let swap = int_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(
            check_cayley_hamilton(&swap, word(&[], 2), word(&[0, 1], 2)),
            Err(Error::DegreeOutOfRange {
                op: "check_cayley_hamilton",
                degree: 0,
                min: 1,
                max: 2
            })
        );
        assert_eq!(
            check_cayley_hamilton(&swap, word(&[0], 2), word(&[0, 1], 2)),
            Err(Error::DegreeOutOfRange {
                op: "check_cayley_hamilton",
                degree: 2,
                min: 1,
                max: 1
            })
        );
    }

    #[test]
    fn corollary_residual_is_balanced_on_a_companion_matrix() {
        // Companion matrix of λ³ - 3λ² + λ - 2.
        let f = int_matrix(&[&[0, 0, 2], &[1, 0, -1], &[0, 1, 3]]);
        let u = IntMv::from_terms(3, [(vec![0usize, 1], p(1, 0))]).unwrap();
        let out = ch_corollary_residual(&f, &u).unwrap();
        assert!(out.holds);
    }

    #[test]
    fn corollary_residual_guards() {
        let f = IntEndo::identity(3);
        assert_eq!(
            ch_corollary_residual(&f, &IntMv::basis(3, 0).unwrap()),
            Err(Error::DegreeOutOfRange {
                op: "ch_corollary_residual",
                degree: 1,
                min: 2,
                max: 3
            })
        );
        let out = ch_corollary_residual(&f, &IntMv::zero(3)).unwrap();
        assert!(out.holds);
        assert!(out.residual.is_zero());
    }
}
