//! Seeded random generation of matrices and pure multivectors.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use semiwedge_core::{
    BigInt, BigRational, BigUint, Boolean, Endomorphism, MaxPlus, MultiVector, Pair, Semiring,
};

/// Semirings that know how to draw a random entry from their CLI distribution.
pub trait RandomScalar: Semiring {
    fn random_entry(rng: &mut ChaCha8Rng) -> Self;
}

impl RandomScalar for BigInt {
    fn random_entry(rng: &mut ChaCha8Rng) -> Self {
        BigInt::from(rng.random_range(-3i64..=3))
    }
}

impl RandomScalar for BigRational {
    fn random_entry(rng: &mut ChaCha8Rng) -> Self {
        BigRational::from_integer(BigInt::from(rng.random_range(-3i64..=3)))
    }
}

impl RandomScalar for BigUint {
    fn random_entry(rng: &mut ChaCha8Rng) -> Self {
        BigUint::from(rng.random_range(0u64..=1))
    }
}

impl RandomScalar for Boolean {
    fn random_entry(rng: &mut ChaCha8Rng) -> Self {
        Boolean(rng.random_range(0u8..=1) == 1)
    }
}

impl RandomScalar for MaxPlus {
    fn random_entry(rng: &mut ChaCha8Rng) -> Self {
        if rng.random_range(0u8..8) == 0 {
            MaxPlus::neg_inf()
        } else {
            MaxPlus::finite(rng.random_range(-5i64..=5))
        }
    }
}

/// Draws a uniform random `n x n` matrix entrywise.
pub fn random_matrix<S: RandomScalar>(rng: &mut ChaCha8Rng, n: usize) -> Endomorphism<S> {
    let rows = (0..n)
        .map(|_| (0..n).map(|_| S::random_entry(rng)).collect())
        .collect();
    Endomorphism::new(rows).expect("generated matrix is square and within rank bounds")
}

/// Draws a random pure multivector of the given degree whose words use only
/// the listed support indices. One or two terms, random pair coefficients
/// (the negative slot stays zero in degree < 2).
pub fn random_pure<S: RandomScalar>(
    rng: &mut ChaCha8Rng,
    rank: usize,
    support: &[usize],
    degree: usize,
) -> MultiVector<S> {
    assert!(degree >= 1 && degree <= support.len());
    let words = index_words(support, degree);
    let term_count = 1 + rng.random_range(0usize..=1).min(words.len() - 1);
    let mut terms = Vec::new();
    for _ in 0..term_count {
        let word = words[rng.random_range(0..words.len())].clone();
        let pos = S::random_entry(rng);
        let pair = if degree >= 2 {
            Pair::new(pos, S::random_entry(rng))
        } else {
            Pair::embed(pos)
        };
        terms.push((word, pair));
    }
    MultiVector::from_terms(rank, terms).expect("generated terms are valid for the rank")
}

/// All increasing index lists of the given length over the support.
pub fn index_words(support: &[usize], degree: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    pick(support, degree, 0, &mut chosen, &mut out);
    out
}

fn pick(
    support: &[usize],
    degree: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if chosen.len() == degree {
        out.push(chosen.clone());
        return;
    }
    for i in start..support.len() {
        chosen.push(support[i]);
        pick(support, degree, i + 1, chosen, out);
        chosen.pop();
    }
}

/// Splits `0..n` into two disjoint nonempty index sets, uniformly over the
/// proper nonempty subsets.
pub fn random_disjoint_split(rng: &mut ChaCha8Rng, n: usize) -> (Vec<usize>, Vec<usize>) {
    assert!(n >= 2);
    let mask = rng.random_range(1u32..(1u32 << n) - 1);
    let mut left = Vec::new();
    let mut right = Vec::new();
    for i in 0..n {
        if mask & (1 << i) != 0 {
            left.push(i);
        } else {
            right.push(i);
        }
    }
    (left, right)
}
