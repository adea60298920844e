use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, ParseError, Result};
use crate::pair::Pair;
use crate::semiring::Semiring;
use crate::word::{sort_word, SortedWord, Word, MAX_RANK};

/// An element of the reduced exterior semialgebra of rank `n`: a finite
/// sum of basis words with [`Pair`] coefficients.
///
/// Only strictly increasing words are stored. A term like `b_1 ∧ b_0`,
/// which classically would be `-b_0 ∧ b_1`, is carried as the word
/// `(0, 1)` with its coefficient in the negated slot. Coefficients of
/// degree-0 and degree-1 terms always have a zero negated slot: in those
/// degrees the reduction never produces an odd permutation, so no negated
/// companion exists. Constructors enforce this and every operation
/// preserves it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiVector<S: Semiring> {
    rank: usize,
    terms: BTreeMap<Word, Pair<S>>,
}

impl<S: Semiring> MultiVector<S> {
    pub fn zero(rank: usize) -> Self {
        debug_assert!(rank <= MAX_RANK);
        MultiVector {
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// The degree-0 unit: the empty word with coefficient 1.
    pub fn unit(rank: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Word::empty(), Pair::one());
        MultiVector { rank, terms }
    }

    /// The degree-1 basis vector `b_i`.
    pub fn basis(rank: usize, i: usize) -> Result<Self> {
        Self::basis_word(rank, &[i])
    }

    /// The basis word on the given indices, in any order: the result is
    /// the canonical sorted word, with the coefficient landing in the
    /// negated slot when sorting takes an odd permutation, and the zero
    /// multivector when an index repeats.
    pub fn basis_word(rank: usize, indices: &[usize]) -> Result<Self> {
        match sort_word(indices, rank)? {
            SortedWord::Zero => Ok(MultiVector::zero(rank)),
            SortedWord::Sorted { word, odd } => {
                let one: Pair<S> = Pair::one();
                let coeff = if odd { one.swap() } else { one };
                let mut terms = BTreeMap::new();
                terms.insert(word, coeff);
                Ok(MultiVector { rank, terms })
            }
        }
    }

    /// Builds a multivector from canonical terms. Words must be strictly
    /// increasing; coefficients on degree-0/1 words must have a zero
    /// negated slot. Duplicate words accumulate.
    pub fn from_terms<I>(rank: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Pair<S>)>,
    {
        let mut out = MultiVector::zero(rank);
        for (indices, coeff) in entries {
            let word = Word::from_increasing(&indices, rank)?;
            if word.degree() < 2 && !coeff.neg.is_zero() {
                return Err(Error::NegSlotBelowDegreeTwo {
                    degree: word.degree(),
                });
            }
            out.accumulate(word, coeff);
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Pair<S>)> {
        self.terms.iter()
    }

    /// The coefficient of a word (zero when absent).
    pub fn coeff(&self, word: &Word) -> Pair<S> {
        self.terms.get(word).cloned().unwrap_or_else(Pair::zero)
    }

    /// The common degree of all terms, when the terms agree on one.
    /// Returns `None` for the zero multivector and for mixed degrees.
    pub fn pure_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(Word::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::degree).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::degree).max()
    }

    /// True when every coefficient is a quasi-zero. The zero multivector
    /// is balanced.
    pub fn is_balanced(&self) -> bool {
        self.terms.values().all(Pair::is_balanced)
    }

    /// Adds `coeff` onto the coefficient of `word`, dropping the term if
    /// it becomes zero. The word must already be valid for this rank.
    pub(crate) fn accumulate(&mut self, word: Word, coeff: Pair<S>) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(word).or_insert_with(Pair::zero);
        *entry = entry.ref_add(&coeff);
        if entry.is_zero() {
            self.terms.remove(&word);
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.rank != rhs.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: rhs.rank,
            });
        }
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.accumulate(*w, c.clone());
        }
        Ok(out)
    }

    pub(crate) fn add_assign_unchecked(&mut self, rhs: &Self) {
        debug_assert_eq!(self.rank, rhs.rank);
        for (w, c) in &rhs.terms {
            self.accumulate(*w, c.clone());
        }
    }

    /// The wedge product. Coefficients multiply by the twist product,
    /// and merging the two words into sorted form swaps the coefficient
    /// slots when the merge permutation is odd.
    pub fn wedge(&self, rhs: &Self) -> Result<Self> {
        if self.rank != rhs.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: rhs.rank,
            });
        }
        let mut out = MultiVector::zero(self.rank);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                if !w1.is_disjoint(w2) {
                    continue;
                }
                let mut c = c1.ref_mul(c2);
                if w1.merge_parity(w2) {
                    c = c.swap();
                }
                out.accumulate(w1.union(w2), c);
            }
        }
        Ok(out)
    }

    /// The negation map: swaps the coefficient slots of every term.
    /// Defined only when every term has degree at least 2.
    pub fn negate(&self) -> Result<Self> {
        if let Some(w) = self.terms.keys().find(|w| w.degree() < 2) {
            return Err(Error::NegationUndefined { degree: w.degree() });
        }
        let terms = self.terms.iter().map(|(w, c)| (*w, c.swap())).collect();
        Ok(MultiVector {
            rank: self.rank,
            terms,
        })
    }

    /// Multiplies every coefficient by a pair scalar. When the scalar has
    /// a nonzero negated slot this is only defined on terms of degree at
    /// least 2, for the same reason negation is.
    pub fn scale(&self, c: &Pair<S>) -> Result<Self> {
        if !c.neg.is_zero() {
            if let Some(w) = self.terms.keys().find(|w| w.degree() < 2) {
                return Err(Error::NegSlotBelowDegreeTwo { degree: w.degree() });
            }
        }
        let mut out = MultiVector::zero(self.rank);
        for (w, coeff) in &self.terms {
            out.accumulate(*w, coeff.ref_mul(c));
        }
        Ok(out)
    }

    /// Multiplies both coefficient slots by a plain scalar.
    pub fn scale_scalar(&self, s: &S) -> Self {
        let mut out = MultiVector::zero(self.rank);
        for (w, coeff) in &self.terms {
            out.accumulate(*w, coeff.scale(s));
        }
        out
    }

    /// True when `self ⪰ lower`: every word's coefficient in `self`
    /// differs from its coefficient in `lower` by a diagonal quasi-zero
    /// (absent coefficients count as zero). Each word gets its own shift.
    pub fn surpasses(&self, lower: &Self) -> Result<bool> {
        if self.rank != lower.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: lower.rank,
            });
        }
        let words: std::collections::BTreeSet<&Word> =
            self.terms.keys().chain(lower.terms.keys()).collect();
        Ok(words
            .into_iter()
            .all(|w| Pair::surpass_witness(&lower.coeff(w), &self.coeff(w)).is_some()))
    }

    /// Decides whether some complementary basis word `v` makes
    /// `self ∧ v` unbalanced, by searching all of them. Requires a pure
    /// degree `k` with `2 ≤ k < rank` and an unbalanced input.
    pub fn nondegenerate(&self) -> Result<bool> {
        if self.is_balanced() {
            // Covers the zero multivector too: balanced inputs stay
            // balanced against every complement, so the question is
            // degenerate.
            return Err(Error::BalancedInput);
        }
        let k = match self.pure_degree() {
            Some(k) => k,
            None => {
                return Err(Error::MixedDegrees {
                    op: "nondegeneracy_check",
                })
            }
        };
        if k < 2 || k >= self.rank {
            return Err(Error::DegreeOutOfRange {
                op: "nondegeneracy_check",
                degree: k,
                min: 2,
                max: self.rank.saturating_sub(1),
            });
        }
        for v in Word::all_of_degree(self.rank, self.rank - k) {
            let candidate = MultiVector::from_terms(self.rank, [(v.indices(), Pair::one())])?;
            if !self.wedge(&candidate)?.is_balanced() {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(w, c)| {
                json!({
                    "word": w.indices(),
                    "pos": c.pos.to_json(),
                    "neg": c.neg.to_json(),
                })
            })
            .collect();
        json!({
            "n": self.rank,
            "domain": S::kind().name(),
            "terms": terms,
        })
    }

    pub fn from_json(value: &Value) -> std::result::Result<Self, ParseError> {
        let obj = value
            .as_object()
            .ok_or_else(|| ParseError::new("expected a multivector object"))?;
        for key in obj.keys() {
            if !matches!(key.as_str(), "n" | "domain" | "terms") {
                return Err(ParseError::new(format!(
                    "unexpected key \"{key}\" in multivector object"
                )));
            }
        }
        let rank = obj
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| ParseError::new("field \"n\": expected a nonnegative integer"))?
            as usize;
        if rank > MAX_RANK {
            return Err(ParseError::new(format!(
                "field \"n\": rank {rank} is too large, at most {MAX_RANK} is supported"
            )));
        }
        if let Some(domain) = obj.get("domain") {
            let name = domain
                .as_str()
                .ok_or_else(|| ParseError::new("field \"domain\": expected a string"))?;
            if name != S::kind().name() {
                return Err(ParseError::new(format!(
                    "field \"domain\": expected \"{}\", got \"{name}\"",
                    S::kind().name()
                )));
            }
        }
        let terms = obj
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| ParseError::new("field \"terms\": expected an array"))?;
        let mut entries = Vec::new();
        for (idx, term) in terms.iter().enumerate() {
            let in_term = |e: ParseError| e.in_field(format!("terms[{idx}]"));
            let term_obj = term
                .as_object()
                .ok_or_else(|| in_term(ParseError::new("expected a term object")))?;
            for key in term_obj.keys() {
                if !matches!(key.as_str(), "word" | "pos" | "neg") {
                    return Err(in_term(ParseError::new(format!(
                        "unexpected key \"{key}\""
                    ))));
                }
            }
            let word_val = term_obj
                .get("word")
                .and_then(Value::as_array)
                .ok_or_else(|| in_term(ParseError::new("field \"word\": expected an array")))?;
            let mut indices = Vec::with_capacity(word_val.len());
            for v in word_val {
                let i = v.as_u64().ok_or_else(|| {
                    in_term(ParseError::new(
                        "field \"word\": expected nonnegative integer indices",
                    ))
                })?;
                indices.push(i as usize);
            }
            let pos = match term_obj.get("pos") {
                Some(v) => S::from_json(v).map_err(|e| in_term(e.in_field("pos")))?,
                None => S::zero(),
            };
            let neg = match term_obj.get("neg") {
                Some(v) => S::from_json(v).map_err(|e| in_term(e.in_field("neg")))?,
                None => S::zero(),
            };
            entries.push((indices, Pair::new(pos, neg)));
        }
        MultiVector::from_terms(rank, entries).map_err(|e| ParseError::new(e.to_string()))
    }

    fn render_term(out: &mut String, coeff: &S, word: &Word, transposed: bool) {
        let show_word = if word.is_empty() {
            None
        } else {
            let mut indices = word.indices();
            if transposed {
                debug_assert!(indices.len() >= 2);
                indices.swap(0, 1);
            }
            Some(
                indices
                    .iter()
                    .map(|i| format!("b_{i}"))
                    .collect::<Vec<_>>()
                    .join("∧"),
            )
        };
        match show_word {
            None => out.push_str(&coeff.to_string()),
            Some(w) => {
                if coeff != &S::one() {
                    out.push_str(&coeff.to_string());
                    out.push('·');
                }
                out.push_str(&w);
            }
        }
    }
}

impl<S: Semiring> fmt::Display for MultiVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts: Vec<String> = Vec::new();
        for (w, c) in &self.terms {
            if !c.pos.is_zero() {
                let mut s = String::new();
                Self::render_term(&mut s, &c.pos, w, false);
                parts.push(s);
            }
            if !c.neg.is_zero() {
                let mut s = String::new();
                Self::render_term(&mut s, &c.neg, w, true);
                parts.push(s);
            }
        }
        f.write_str(&parts.join(" + "))
    }
}
