use crate::endo::Endomorphism;
use crate::error::{Error, Result};
use crate::multivector::MultiVector;
use crate::pair::Pair;
use crate::semiring::{DomainKind, Semiring};
use crate::series::ZPoly;

/// All ways to write `total` as an ordered sum of `parts` nonnegative
/// integers. There are C(total + parts - 1, parts - 1) of them.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn rec(
        remaining: usize,
        parts_left: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if parts_left == 0 {
            if remaining == 0 {
                out.push(current.clone());
            }
            return;
        }
        if parts_left == 1 {
            current.push(remaining);
            out.push(current.clone());
            current.pop();
            return;
        }
        for first in (0..=remaining).rev() {
            current.push(first);
            rec(remaining - first, parts_left - 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}

/// Precomputed matrix powers of an endomorphism, with each power's
/// columns ready as degree-1 multivectors. Shared across the many
/// derivation coefficients of one check so the powers are computed once.
pub(crate) struct PowerTable<S: Semiring> {
    rank: usize,
    /// `cols[p][i]` is `f^p(b_i)`.
    cols: Vec<Vec<MultiVector<S>>>,
}

impl<S: Semiring> PowerTable<S> {
    pub(crate) fn new(f: &Endomorphism<S>, max_power: usize) -> Self {
        let rank = f.rank();
        let powers = f.powers(max_power);
        let cols = powers
            .iter()
            .map(|matrix| {
                (0..rank)
                    .map(|i| {
                        let entries = (0..rank).filter_map(|r| {
                            let s = &matrix[r][i];
                            if s.is_zero() {
                                None
                            } else {
                                Some((vec![r], Pair::embed(s.clone())))
                            }
                        });
                        MultiVector::from_terms(rank, entries)
                            .expect("power columns are canonical degree-1 terms")
                    })
                    .collect()
            })
            .collect();
        PowerTable { rank, cols }
    }

    pub(crate) fn max_power(&self) -> usize {
        self.cols.len() - 1
    }

    pub(crate) fn column(&self, power: usize, i: usize) -> &MultiVector<S> {
        &self.cols[power][i]
    }
}

/// The `k`-th derivation coefficient `D_k x` of the derivation series
/// induced by `f`.
///
/// On a word it is the sum over all compositions `k_1 + ... + k_r = k`
/// of the wedges `f^{k_1}(b_{i_1}) ∧ ... ∧ f^{k_r}(b_{i_r})`, extended
/// linearly with the word's pair coefficient multiplied through. `D_0`
/// is the identity.
pub fn hs_coefficient<S: Semiring>(
    f: &Endomorphism<S>,
    k: usize,
    x: &MultiVector<S>,
) -> Result<MultiVector<S>> {
    if f.rank() != x.rank() {
        return Err(Error::RankMismatch {
            left: f.rank(),
            right: x.rank(),
        });
    }
    let table = PowerTable::new(f, k);
    Ok(hs_with_table(&table, k, x))
}

pub(crate) fn hs_with_table<S: Semiring>(
    table: &PowerTable<S>,
    k: usize,
    x: &MultiVector<S>,
) -> MultiVector<S> {
    debug_assert!(k <= table.max_power());
    debug_assert_eq!(table.rank, x.rank());
    let rank = table.rank;
    let mut acc = MultiVector::zero(rank);
    for (word, coeff) in x.terms() {
        let indices = word.indices();
        let mut word_sum = MultiVector::zero(rank);
        for comp in compositions(k, indices.len()) {
            let mut prod = MultiVector::unit(rank);
            for (slot, &i) in indices.iter().enumerate() {
                prod = prod
                    .wedge(table.column(comp[slot], i))
                    .expect("equal ranks");
                if prod.is_zero() {
                    break;
                }
            }
            word_sum.add_assign_unchecked(&prod);
        }
        let scaled = word_sum
            .scale(coeff)
            .expect("derivation preserves the word's degree");
        acc.add_assign_unchecked(&scaled);
    }
    acc
}

/// The derivation series `D(z) x = Σ_k D_k x · z^k`, truncated at
/// `z^trunc`.
pub fn hs_series<S: Semiring>(
    f: &Endomorphism<S>,
    x: &MultiVector<S>,
    trunc: usize,
) -> Result<ZPoly<S>> {
    if f.rank() != x.rank() {
        return Err(Error::RankMismatch {
            left: f.rank(),
            right: x.rank(),
        });
    }
    let table = PowerTable::new(f, trunc);
    let coeffs = (0..=trunc).map(|k| hs_with_table(&table, k, x)).collect();
    ZPoly::from_coeffs(f.rank(), trunc, coeffs)
}

/// Evaluates the `r`-th Schur-style higher derivation of the single
/// derivation `delta` on a degree-1 multivector, for `r` in `1..=4`:
///
/// ```text
/// D_1 = δ
/// D_2 = δ²/2 + δ
/// D_3 = δ³/6 + δ² + δ
/// D_4 = δ⁴/24 + δ³/2 + 3δ²/2 + δ
/// ```
///
/// The fractions require the rationals; every other domain is rejected.
pub fn schur_higher_derivation<S: Semiring>(
    delta: &Endomorphism<S>,
    r: usize,
    x: &MultiVector<S>,
) -> Result<MultiVector<S>> {
    if S::kind() != DomainKind::Rationals {
        return Err(Error::UnsupportedDomain {
            op: "schur_higher_derivation",
            domain: S::kind(),
        });
    }
    if !(1..=4).contains(&r) {
        return Err(Error::OrderOutOfRange { order: r });
    }
    if delta.rank() != x.rank() {
        return Err(Error::RankMismatch {
            left: delta.rank(),
            right: x.rank(),
        });
    }
    if x.is_zero() {
        return Ok(MultiVector::zero(delta.rank()));
    }
    match x.pure_degree() {
        Some(1) => {}
        Some(d) => {
            return Err(Error::DegreeOutOfRange {
                op: "schur_higher_derivation",
                degree: d,
                min: 1,
                max: 1,
            })
        }
        None => {
            return Err(Error::MixedDegrees {
                op: "schur_higher_derivation",
            })
        }
    }
    // (numerator, denominator, power of delta) per summand.
    let summands: &[(u64, u64, usize)] = match r {
        1 => &[(1, 1, 1)],
        2 => &[(1, 2, 2), (1, 1, 1)],
        3 => &[(1, 6, 3), (1, 1, 2), (1, 1, 1)],
        4 => &[(1, 24, 4), (1, 2, 3), (3, 2, 2), (1, 1, 1)],
        _ => unreachable!("r validated above"),
    };
    let rank = delta.rank();
    let table = PowerTable::new(delta, r);
    let mut acc = MultiVector::zero(rank);
    for &(num, den, power) in summands {
        let c = S::from_ratio(num, den).ok_or(Error::UnsupportedDomain {
            op: "schur_higher_derivation",
            domain: S::kind(),
        })?;
        let mut image = MultiVector::zero(rank);
        for (w, coeff) in x.terms() {
            let j = w.smallest().expect("degree-1 word");
            image.add_assign_unchecked(&table.column(power, j).scale(coeff)?);
        }
        acc.add_assign_unchecked(&image.scale_scalar(&c));
    }
    Ok(acc)
}
