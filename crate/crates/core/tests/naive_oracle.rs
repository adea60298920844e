//! Cross-checks the fast bitmask implementation against a deliberately
//! naive formal-tensor model: words as index sequences reduced by
//! bubble sort with sign tracking, matrix powers by repeated
//! matrix-vector products, and the characteristic polynomial by signed
//! permutation expansion.

use num_bigint::BigInt;
use proptest::prelude::*;

use semiwedge_core::{
    eigen_data, hs_coefficient, Endomorphism, MaxPlus, MultiVector, Pair, Semiring,
};

type Terms<S> = Vec<(Vec<usize>, Pair<S>)>;

/// Bubble-sorts an index sequence in place, returning whether the
/// permutation applied was odd, or `None` if an index repeats.
fn bubble_sign(seq: &mut [usize]) -> Option<bool> {
    let mut odd = false;
    let n = seq.len();
    for _ in 0..n {
        for j in 0..n.saturating_sub(1) {
            if seq[j] > seq[j + 1] {
                seq.swap(j, j + 1);
                odd = !odd;
            }
        }
    }
    if seq.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(odd)
}

fn naive_reduce<S: Semiring>(rank: usize, terms: Terms<S>) -> MultiVector<S> {
    let mut canonical = Vec::new();
    for (mut word, coeff) in terms {
        match bubble_sign(&mut word) {
            None => continue,
            Some(false) => canonical.push((word, coeff)),
            Some(true) => canonical.push((word, coeff.swap())),
        }
    }
    MultiVector::from_terms(rank, canonical).unwrap()
}

fn naive_wedge<S: Semiring>(a: &Terms<S>, b: &Terms<S>) -> Terms<S> {
    let mut out = Vec::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            let mut word = wa.clone();
            word.extend_from_slice(wb);
            out.push((word, ca.ref_mul(cb)));
        }
    }
    out
}

fn to_terms<S: Semiring>(x: &MultiVector<S>) -> Terms<S> {
    x.terms().map(|(w, c)| (w.indices(), c.clone())).collect()
}

/// Applies the matrix to a coordinate vector, the schoolbook way.
fn naive_apply<S: Semiring>(matrix: &[Vec<S>], v: &[S]) -> Vec<S> {
    let rank = matrix.len();
    let mut out = vec![S::zero(); rank];
    for (i, row) in matrix.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            out[i] = out[i].ref_add(&entry.ref_mul(&v[j]));
        }
    }
    out
}

/// The column of the p-th matrix power at index `j`, as a degree-1
/// term list.
fn naive_power_column<S: Semiring>(matrix: &[Vec<S>], p: usize, j: usize) -> Terms<S> {
    let rank = matrix.len();
    let mut v = vec![S::zero(); rank];
    v[j] = S::one();
    for _ in 0..p {
        v = naive_apply(matrix, &v);
    }
    v.into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (vec![i], Pair::embed(c)))
        .collect()
}

/// All ways to write `total` as an ordered sum of `parts` nonnegative
/// integers, enumerated by an odometer over the full box.
fn odometer_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    let mut counter = vec![0usize; parts];
    loop {
        if counter.iter().sum::<usize>() == total {
            out.push(counter.clone());
        }
        let mut pos = 0;
        loop {
            counter[pos] += 1;
            if counter[pos] <= total {
                break;
            }
            counter[pos] = 0;
            pos += 1;
            if pos == parts {
                return out;
            }
        }
    }
}

/// Order-`k` derivation of a canonical multivector, computed entirely
/// through the naive model.
fn naive_derivation<S: Semiring>(
    matrix: &[Vec<S>],
    k: usize,
    x: &MultiVector<S>,
) -> MultiVector<S> {
    let rank = matrix.len();
    let mut total: Terms<S> = Vec::new();
    for (word, coeff) in x.terms() {
        let indices = word.indices();
        for split in odometer_compositions(k, indices.len()) {
            let mut product: Terms<S> = vec![(vec![], coeff.clone())];
            for (pow, &j) in split.iter().zip(&indices) {
                product = naive_wedge(&product, &naive_power_column(matrix, *pow, j));
            }
            total.extend(product);
        }
    }
    naive_reduce(rank, total)
}

fn int_matrix(rows: &[Vec<i64>]) -> Endomorphism<BigInt> {
    Endomorphism::new(
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect(),
    )
    .unwrap()
}

/// Signed permutations of `0..n` together with their parity.
fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    let mut perms = vec![(Vec::new(), false)];
    for next in 0..n {
        let mut grown = Vec::new();
        for (perm, odd) in &perms {
            for pos in 0..=perm.len() {
                let mut p = perm.clone();
                p.insert(pos, next);
                let flips = (perm.len() - pos) % 2 == 1;
                grown.push((p, odd ^ flips));
            }
        }
        perms = grown;
    }
    perms
}

fn poly_mul_linear(poly: &[BigInt], constant: &BigInt, linear: &BigInt) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); poly.len() + 1];
    for (k, c) in poly.iter().enumerate() {
        out[k] += c * constant;
        out[k + 1] += c * linear;
    }
    out
}

/// Coefficients of det(λI − M), index `k` holding the λ^k coefficient,
/// by direct expansion over all permutations.
fn naive_char_poly(matrix: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = matrix.len();
    let mut chi = vec![BigInt::from(0); n + 1];
    for (perm, odd) in permutations(n) {
        let mut term = vec![BigInt::from(1)];
        for (i, &j) in perm.iter().enumerate() {
            let linear = if i == j {
                BigInt::from(1)
            } else {
                BigInt::from(0)
            };
            term = poly_mul_linear(&term, &(-&matrix[i][j]), &linear);
        }
        for (k, c) in term.into_iter().enumerate() {
            if odd {
                chi[k] -= c;
            } else {
                chi[k] += c;
            }
        }
    }
    chi
}

fn arb_int_mv(rank: usize) -> BoxedStrategy<MultiVector<BigInt>> {
    let words: Vec<Vec<usize>> = (0u32..(1 << rank))
        .map(|mask| (0..rank).filter(|i| mask >> i & 1 == 1).collect())
        .collect();
    proptest::collection::vec((0..words.len(), -5i64..=5, -5i64..=5), 0..6)
        .prop_map(move |picks| {
            let terms = picks.into_iter().map(|(wi, p, q)| {
                let word = words[wi].clone();
                let coeff = if word.len() < 2 {
                    Pair::embed(BigInt::from(p))
                } else {
                    Pair::new(BigInt::from(p), BigInt::from(q))
                };
                (word, coeff)
            });
            MultiVector::from_terms(rank, terms).unwrap()
        })
        .boxed()
}

fn arb_int_rows(rank: usize, bound: i64) -> BoxedStrategy<Vec<Vec<i64>>> {
    proptest::collection::vec(proptest::collection::vec(-bound..=bound, rank), rank).boxed()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn wedge_agrees_with_naive_tensor_reduction(
        x in arb_int_mv(5),
        y in arb_int_mv(5),
    ) {
        let fast = x.wedge(&y).unwrap();
        let naive = naive_reduce(5, naive_wedge(&to_terms(&x), &to_terms(&y)));
        prop_assert_eq!(fast, naive);
    }

    #[test]
    fn derivation_agrees_with_naive_composition_expansion(
        rows in arb_int_rows(3, 2),
        x in arb_int_mv(3),
        k in 0usize..=3,
    ) {
        let f = int_matrix(&rows);
        let fast = hs_coefficient(&f, k, &x).unwrap();
        let matrix: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        let naive = naive_derivation(&matrix, k, &x);
        prop_assert_eq!(fast, naive);
    }

    #[test]
    fn eigen_pairs_match_the_permutation_expanded_characteristic_polynomial(
        rows in arb_int_rows(3, 3),
    ) {
        let f = int_matrix(&rows);
        let matrix: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        let chi = naive_char_poly(&matrix);
        let data = eigen_data(&f).unwrap();
        for i in 0..=3 {
            prop_assert_eq!(&data.e[i].pos - &data.e[i].neg, chi[3 - i].clone());
        }
    }

    #[test]
    fn derived_pairs_match_the_naive_top_word_derivation(
        rows in arb_int_rows(3, 3),
    ) {
        let f = int_matrix(&rows);
        let matrix: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        let zeta = MultiVector::basis_word(3, &[0, 1, 2]).unwrap();
        let zeta_word = *zeta.terms().next().unwrap().0;
        let data = eigen_data(&f).unwrap();
        for i in 0..=3 {
            let naive = naive_derivation(&matrix, i, &zeta);
            prop_assert_eq!(&data.h[i], &naive.coeff(&zeta_word));
        }
    }
}

#[test]
fn eigen_pairs_match_frozen_characteristic_polynomials() {
    // det(λI − swap) = λ² − 1.
    let swap = int_matrix(&[vec![0, 1], vec![1, 0]]);
    let data = eigen_data(&swap).unwrap();
    let diffs: Vec<BigInt> = data.e.iter().map(|p| &p.pos - &p.neg).collect();
    assert_eq!(
        diffs,
        vec![BigInt::from(1), BigInt::from(0), BigInt::from(-1)]
    );

    // Companion matrix of λ³ − 3λ² + λ − 2.
    let companion = int_matrix(&[vec![0, 0, 2], vec![1, 0, -1], vec![0, 1, 3]]);
    let data = eigen_data(&companion).unwrap();
    let diffs: Vec<BigInt> = data.e.iter().map(|p| &p.pos - &p.neg).collect();
    assert_eq!(
        diffs,
        vec![
            BigInt::from(1),
            BigInt::from(-3),
            BigInt::from(1),
            BigInt::from(-2)
        ]
    );
}

#[test]
fn max_plus_derived_pairs_match_the_naive_expansion() {
    let entries = [
        [Some(2), None, Some(0)],
        [Some(-1), Some(1), None],
        [Some(3), Some(0), Some(-2)],
    ];
    let rows: Vec<Vec<MaxPlus>> = entries
        .iter()
        .map(|r| {
            r.iter()
                .map(|e| match e {
                    Some(v) => MaxPlus::finite(*v),
                    None => MaxPlus::neg_inf(),
                })
                .collect()
        })
        .collect();
    let f = Endomorphism::new(rows.clone()).unwrap();
    let zeta = MultiVector::<MaxPlus>::basis_word(3, &[0, 1, 2]).unwrap();
    let zeta_word = *zeta.terms().next().unwrap().0;
    let data = eigen_data(&f).unwrap();
    for i in 0..=3 {
        let naive = naive_derivation(&rows, i, &zeta);
        assert_eq!(data.h[i], naive.coeff(&zeta_word), "order {i}");
    }
}
