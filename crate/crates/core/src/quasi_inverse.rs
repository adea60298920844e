use crate::derivation::{hs_coefficient, hs_with_table, PowerTable};
use crate::endo::Endomorphism;
use crate::error::{Error, Result};
use crate::multivector::MultiVector;
use crate::semiring::Semiring;
use crate::series::ZPoly;
use crate::word::Word;

/// One step of the quasi-inverse recursion: extends a quasi-inverse `P`
/// of some factor to the quasi-inverse of `b_u ∧ factor` via
///
/// ```text
/// b_u ∧ P + z · negate(f(b_u) ∧ P)
/// ```
///
/// Linear in `P`; the truncation order rises by exactly one.
pub fn ovd_step<S: Semiring>(
    f: &Endomorphism<S>,
    u_index: usize,
    p: &ZPoly<S>,
) -> Result<ZPoly<S>> {
    let rank = f.rank();
    if rank != p.rank() {
        return Err(Error::RankMismatch {
            left: rank,
            right: p.rank(),
        });
    }
    if u_index >= rank {
        return Err(Error::IndexOutOfRange {
            index: u_index,
            rank,
        });
    }
    for coeff in p.coeffs() {
        if coeff.min_degree() == Some(0) {
            // Degree-0 content would wedge to degree 1, where negation
            // does not exist.
            return Err(Error::DegreeOutOfRange {
                op: "ovd_step",
                degree: 0,
                min: 1,
                max: rank,
            });
        }
    }
    let bu = MultiVector::basis(rank, u_index)?;
    let fu = f.column_mv(u_index);
    let mut out = ZPoly::zero(rank, p.trunc() + 1);
    for k in 0..=p.trunc() + 1 {
        let mut value = match p.coeff(k) {
            Some(c) => bu.wedge(c)?,
            None => MultiVector::zero(rank),
        };
        if k >= 1 {
            if let Some(prev) = p.coeff(k - 1) {
                let correction = fu.wedge(prev)?.negate()?;
                value = value.add(&correction)?;
            }
        }
        out.set_coeff(k, value);
    }
    Ok(out)
}

fn word_quasi_inverse<S: Semiring>(f: &Endomorphism<S>, w: Word) -> Result<ZPoly<S>> {
    let rank = f.rank();
    let indices = w.indices();
    debug_assert!(indices.len() >= 2);
    if indices.len() == 2 {
        let (i, j) = (indices[0], indices[1]);
        // u∧v + z·D_1(v∧u) + z²·(f(u)∧f(v)).
        let z0 = MultiVector::basis_word(rank, &[i, j])?;
        let vu = MultiVector::basis_word(rank, &[j, i])?;
        let z1 = hs_coefficient(f, 1, &vu)?;
        let z2 = f.column_mv(i).wedge(&f.column_mv(j))?;
        ZPoly::from_coeffs(rank, 2, vec![z0, z1, z2])
    } else {
        let (u1, rest) = w.split_smallest().expect("degree >= 3");
        let inner = word_quasi_inverse(f, rest)?;
        ovd_step(f, u1, &inner)
    }
}

/// The canonical quasi-inverse polynomial `D̄{z} x` of the derivation
/// series induced by `f`, for `x` of pure degree `m ≥ 2`.
///
/// A degree-2 word gets the closed form
/// `u∧v + z·D_1(v∧u) + z²·(f(u)∧f(v))`; higher-degree words peel off
/// their smallest factor through [`ovd_step`]. The result is extended
/// linearly with the pair coefficients multiplied through, and its
/// z-degree never exceeds `m`.
pub fn quasi_inverse<S: Semiring>(f: &Endomorphism<S>, x: &MultiVector<S>) -> Result<ZPoly<S>> {
    let rank = f.rank();
    if rank != x.rank() {
        return Err(Error::RankMismatch {
            left: rank,
            right: x.rank(),
        });
    }
    if x.is_zero() {
        return Ok(ZPoly::zero(rank, 0));
    }
    let m = match x.pure_degree() {
        Some(m) => m,
        None => {
            return Err(Error::MixedDegrees {
                op: "quasi_inverse",
            })
        }
    };
    if m < 2 {
        return Err(Error::DegreeOutOfRange {
            op: "quasi_inverse",
            degree: m,
            min: 2,
            max: rank,
        });
    }
    let mut acc = ZPoly::zero(rank, m);
    for (w, c) in x.terms() {
        let base = word_quasi_inverse(f, *w)?;
        acc = acc.add(&base.scale(c)?)?;
    }
    Ok(acc)
}

/// Verifies that the quasi-inverse deserves its name on `x`: both
/// composites `D̄{z} ∘ D(z)` and `D(z) ∘ D̄{z}` must surpass the
/// identity, coefficient by coefficient.
///
/// Concretely the `z^0` coefficient of each composite must surpass `x`
/// and every `z^k` coefficient for `1 ≤ k ≤ trunc − n` must surpass
/// zero. The top `n` orders are discarded as a guard band, so `trunc`
/// must be at least `degree(x) + n`.
pub fn check_quasi_inverse<S: Semiring>(
    f: &Endomorphism<S>,
    x: &MultiVector<S>,
    trunc: usize,
) -> Result<bool> {
    let rank = f.rank();
    if rank != x.rank() {
        return Err(Error::RankMismatch {
            left: rank,
            right: x.rank(),
        });
    }
    if x.is_zero() {
        return Ok(true);
    }
    let m = match x.pure_degree() {
        Some(m) => m,
        None => {
            return Err(Error::MixedDegrees {
                op: "check_quasi_inverse",
            })
        }
    };
    if m < 2 {
        return Err(Error::DegreeOutOfRange {
            op: "check_quasi_inverse",
            degree: m,
            min: 2,
            max: rank,
        });
    }
    if trunc < m + rank {
        return Err(Error::TruncationTooSmall {
            trunc,
            needed: m + rank,
        });
    }

    let table = PowerTable::new(f, trunc);
    let derived: Vec<MultiVector<S>> = (0..=trunc).map(|k| hs_with_table(&table, k, x)).collect();

    // D̄{z} ∘ D(z): quasi-invert each derivation coefficient, collect
    // matching powers of z.
    let mut left = vec![MultiVector::zero(rank); trunc + 1];
    for (j, hj) in derived.iter().enumerate() {
        if hj.is_zero() {
            continue;
        }
        let q = quasi_inverse(f, hj)?;
        for i in 0..=q.trunc().min(trunc - j) {
            let coeff = q.coeff(i).expect("within truncation");
            left[i + j].add_assign_unchecked(coeff);
        }
    }

    // D(z) ∘ D̄{z}: derive each quasi-inverse coefficient.
    let q = quasi_inverse(f, x)?;
    let mut right = vec![MultiVector::zero(rank); trunc + 1];
    for j in 0..=q.trunc().min(trunc) {
        let qj = q.coeff(j).expect("within truncation");
        if qj.is_zero() {
            continue;
        }
        for i in 0..=(trunc - j) {
            right[i + j].add_assign_unchecked(&hs_with_table(&table, i, qj));
        }
    }

    let zero_mv = MultiVector::zero(rank);
    for series in [&left, &right] {
        if !series[0].surpasses(x)? {
            return Ok(false);
        }
        for coeff in series.iter().take(trunc - rank + 1).skip(1) {
            if !coeff.surpasses(&zero_mv)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Verifies the interchange relation
/// `D̄{z}(D(z)u ∧ v) ⪰ u ∧ D̄{z}v` coefficientwise at every retained
/// power of `z`.
pub fn check_prech<S: Semiring>(
    f: &Endomorphism<S>,
    u: &MultiVector<S>,
    v: &MultiVector<S>,
    trunc: usize,
) -> Result<bool> {
    let rank = f.rank();
    for operand in [u, v] {
        if rank != operand.rank() {
            return Err(Error::RankMismatch {
                left: rank,
                right: operand.rank(),
            });
        }
    }
    if u.is_zero() || v.is_zero() {
        return Ok(true);
    }
    let du = match u.pure_degree() {
        Some(d) => d,
        None => return Err(Error::MixedDegrees { op: "check_prech" }),
    };
    if du < 1 {
        return Err(Error::DegreeOutOfRange {
            op: "check_prech",
            degree: du,
            min: 1,
            max: rank,
        });
    }
    let dv = match v.pure_degree() {
        Some(d) => d,
        None => return Err(Error::MixedDegrees { op: "check_prech" }),
    };
    if dv < 2 {
        return Err(Error::DegreeOutOfRange {
            op: "check_prech",
            degree: dv,
            min: 2,
            max: rank,
        });
    }
    if du + dv > rank {
        return Err(Error::DegreeSumExceedsRank {
            left: du,
            right: dv,
            rank,
        });
    }
    if trunc < rank + du {
        return Err(Error::TruncationTooSmall {
            trunc,
            needed: rank + du,
        });
    }

    let table = PowerTable::new(f, trunc);
    let mut left = vec![MultiVector::zero(rank); trunc + 1];
    for j in 0..=trunc {
        let wedge_j = hs_with_table(&table, j, u).wedge(v)?;
        if wedge_j.is_zero() {
            continue;
        }
        let q = quasi_inverse(f, &wedge_j)?;
        for i in 0..=q.trunc().min(trunc - j) {
            let coeff = q.coeff(i).expect("within truncation");
            left[i + j].add_assign_unchecked(coeff);
        }
    }

    let qv = quasi_inverse(f, v)?;
    let zero_mv = MultiVector::zero(rank);
    for (k, left_coeff) in left.iter().enumerate() {
        let right_coeff = match qv.coeff(k) {
            Some(c) => u.wedge(c)?,
            None => zero_mv.clone(),
        };
        if !left_coeff.surpasses(&right_coeff)? {
            return Ok(false);
        }
    }
    Ok(true)
}
