use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::ParseError;
use crate::semiring::Semiring;

/// A symmetrized scalar: a formal difference `pos (-) neg` of two
/// semiring elements.
///
/// The base domains have no subtraction, so "negative" contributions are
/// carried in a second slot instead. Addition is componentwise and
/// multiplication is the twist product, which is exactly the sign rule
/// `(+)(+) = (-)(-) = (+)` spelled out without signs:
///
/// ```text
/// (a0, a1)(b0, b1) = (a0 b0 + a1 b1, a0 b1 + a1 b0)
/// ```
///
/// Swapping the slots plays the role of negation, and the diagonal pairs
/// `(t, t)` are the quasi-zeros: everything that would cancel to zero if
/// subtraction existed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pair<S: Semiring> {
    pub pos: S,
    pub neg: S,
}

impl<S: Semiring> Pair<S> {
    pub fn new(pos: S, neg: S) -> Self {
        Pair { pos, neg }
    }

    /// Embeds a plain scalar as `(s, 0)`.
    pub fn embed(s: S) -> Self {
        Pair {
            pos: s,
            neg: S::zero(),
        }
    }

    /// The negation map: exchanges the two slots.
    pub fn swap(&self) -> Self {
        Pair {
            pos: self.neg.clone(),
            neg: self.pos.clone(),
        }
    }

    /// True when both slots agree, i.e. the pair is a quasi-zero.
    pub fn is_balanced(&self) -> bool {
        self.pos == self.neg
    }

    /// Returns a `t` with `upper = lower + (t, t)` when one exists.
    ///
    /// Existence of such a diagonal shift is the surpassing relation
    /// `upper ⪰ lower`.
    pub fn surpass_witness(lower: &Self, upper: &Self) -> Option<S> {
        S::shift_witness(&lower.pos, &lower.neg, &upper.pos, &upper.neg)
    }

    /// True when `self ⪰ lower`, i.e. `self` differs from `lower` by a
    /// diagonal quasi-zero.
    pub fn surpasses(&self, lower: &Self) -> bool {
        Pair::surpass_witness(lower, self).is_some()
    }

    /// `self + rhs` without consuming the operands.
    pub fn ref_add(&self, rhs: &Self) -> Self {
        Pair {
            pos: self.pos.ref_add(&rhs.pos),
            neg: self.neg.ref_add(&rhs.neg),
        }
    }

    /// Twist product without consuming the operands.
    pub fn ref_mul(&self, rhs: &Self) -> Self {
        Pair {
            pos: self
                .pos
                .ref_mul(&rhs.pos)
                .ref_add(&self.neg.ref_mul(&rhs.neg)),
            neg: self
                .pos
                .ref_mul(&rhs.neg)
                .ref_add(&self.neg.ref_mul(&rhs.pos)),
        }
    }

    /// Multiplies both slots by a plain scalar.
    pub fn scale(&self, s: &S) -> Self {
        Pair {
            pos: self.pos.ref_mul(s),
            neg: self.neg.ref_mul(s),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "pos": self.pos.to_json(), "neg": self.neg.to_json() })
    }

    pub fn from_json(value: &Value) -> Result<Self, ParseError> {
        let obj = value
            .as_object()
            .ok_or_else(|| ParseError::new("expected an object with \"pos\" and \"neg\""))?;
        for key in obj.keys() {
            if key != "pos" && key != "neg" {
                return Err(ParseError::new(format!(
                    "unexpected key \"{key}\" in coefficient object"
                )));
            }
        }
        let pos = match obj.get("pos") {
            Some(v) => S::from_json(v).map_err(|e| e.in_field("pos"))?,
            None => S::zero(),
        };
        let neg = match obj.get("neg") {
            Some(v) => S::from_json(v).map_err(|e| e.in_field("neg"))?,
            None => S::zero(),
        };
        Ok(Pair { pos, neg })
    }
}

impl<S: Semiring> Add for Pair<S> {
    type Output = Pair<S>;
    fn add(self, rhs: Pair<S>) -> Pair<S> {
        Pair {
            pos: self.pos + rhs.pos,
            neg: self.neg + rhs.neg,
        }
    }
}

impl<S: Semiring> Mul for Pair<S> {
    type Output = Pair<S>;
    fn mul(self, rhs: Pair<S>) -> Pair<S> {
        self.ref_mul(&rhs)
    }
}

impl<S: Semiring> Zero for Pair<S> {
    fn zero() -> Self {
        Pair {
            pos: S::zero(),
            neg: S::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.pos.is_zero() && self.neg.is_zero()
    }
}

impl<S: Semiring> One for Pair<S> {
    fn one() -> Self {
        Pair::embed(S::one())
    }
}

impl<S: Semiring> fmt::Display for Pair<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.neg.is_zero() {
            write!(f, "{}", self.pos)
        } else {
            write!(f, "({} (-) {})", self.pos, self.neg)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::{BigInt, BigUint};
    use num_rational::BigRational;
    use proptest::prelude::*;

    use crate::semiring::{Boolean, MaxPlus};

    fn ip(pos: i64, neg: i64) -> Pair<BigInt> {
        Pair::new(BigInt::from(pos), BigInt::from(neg))
    }

    fn mp(v: i64) -> MaxPlus {
        MaxPlus::finite(v)
    }

    #[test]
    fn twist_product_examples() {
        assert_eq!(ip(2, 0).ref_mul(&ip(3, 0)), ip(6, 0));
        assert_eq!(ip(1, 0).ref_mul(&ip(0, 1)), ip(0, 1));
        // With add=max, mul=+: ((3,-inf))((2,5)) = (max(5, -inf), max(8, 2)).
        let a = Pair::new(mp(3), MaxPlus::neg_inf());
        let b = Pair::new(mp(2), mp(5));
        assert_eq!(a.ref_mul(&b), Pair::new(mp(5), mp(8)));
    }

    #[test]
    fn swap_is_an_involution() {
        let x = ip(2, 1);
        assert_eq!(x.swap(), ip(1, 2));
        assert_eq!(x.swap().swap(), x);
        assert_eq!(ip(0, 0).swap(), ip(0, 0));
    }

    #[test]
    fn surpass_examples() {
        assert!(ip(5, 4).surpasses(&ip(2, 1)));
        assert_eq!(
            Pair::surpass_witness(&ip(2, 1), &ip(5, 4)),
            Some(BigInt::from(3))
        );
        assert!(!ip(5, 3).surpasses(&ip(2, 1)));
        let x = Pair::new(mp(3), MaxPlus::finite(0));
        assert!(Pair::new(mp(5), mp(5)).surpasses(&x));
        assert!(!Pair::new(mp(5), mp(4)).surpasses(&x));
    }

    #[test]
    fn mutual_surpass_over_a_ring_does_not_force_equality() {
        // Over the integers the diagonal shift may be negative, so the
        // relation is an equivalence (equal formal differences), not a
        // partial order: these two pairs surpass each other yet differ.
        let x = ip(2, 1);
        let y = ip(5, 4);
        assert!(y.surpasses(&x) && x.surpasses(&y));
        assert_ne!(x, y);
    }

    fn any_int() -> BoxedStrategy<BigInt> {
        (-30i64..=30).prop_map(BigInt::from).boxed()
    }

    fn any_nat() -> BoxedStrategy<BigUint> {
        (0u64..=30).prop_map(BigUint::from).boxed()
    }

    fn any_rat() -> BoxedStrategy<BigRational> {
        ((-24i64..=24), (1i64..=9))
            .prop_map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
            .boxed()
    }

    fn any_boolean() -> BoxedStrategy<Boolean> {
        any::<bool>().prop_map(Boolean).boxed()
    }

    fn any_maxplus() -> BoxedStrategy<MaxPlus> {
        prop_oneof![
            1 => Just(MaxPlus::neg_inf()),
            7 => (-10i64..=10).prop_map(MaxPlus::finite),
        ]
        .boxed()
    }

    fn pair_of<S: Semiring>(
        scalar: impl Strategy<Value = S> + Clone,
    ) -> impl Strategy<Value = Pair<S>> {
        (scalar.clone(), scalar).prop_map(|(p, n)| Pair::new(p, n))
    }

    macro_rules! pair_law_suite {
        ($name:ident, $scalar:expr) => {
            mod $name {
                use super::*;

                proptest! {
                    #![proptest_config(ProptestConfig::with_cases(1000))]

                    #[test]
                    fn mul_is_associative_and_commutative_and_distributive(
                        a in pair_of($scalar),
                        b in pair_of($scalar),
                        c in pair_of($scalar),
                    ) {
                        let ab_c = a.ref_mul(&b).ref_mul(&c);
                        let a_bc = a.ref_mul(&b.ref_mul(&c));
                        prop_assert_eq!(&ab_c, &a_bc);
                        prop_assert_eq!(a.ref_mul(&b), b.ref_mul(&a));
                        let lhs = a.ref_add(&b).ref_mul(&c);
                        let rhs = a.ref_mul(&c).ref_add(&b.ref_mul(&c));
                        prop_assert_eq!(lhs, rhs);
                    }

                    #[test]
                    fn formal_difference_with_itself_is_balanced(x in pair_of($scalar)) {
                        // x (-) x is x + swap(x), which must be a quasi-zero.
                        prop_assert!(x.ref_add(&x.swap()).is_balanced());
                    }

                    #[test]
                    fn surpass_is_reflexive(x in pair_of($scalar)) {
                        prop_assert!(x.surpasses(&x));
                    }

                    #[test]
                    fn surpass_is_transitive_along_shift_chains(
                        x in pair_of($scalar),
                        t1 in $scalar,
                        t2 in $scalar,
                    ) {
                        let y = x.ref_add(&Pair::new(t1.clone(), t1));
                        let z = y.ref_add(&Pair::new(t2.clone(), t2));
                        prop_assert!(y.surpasses(&x));
                        prop_assert!(z.surpasses(&y));
                        prop_assert!(z.surpasses(&x));
                    }

                    #[test]
                    fn one_and_zero_behave(x in pair_of($scalar)) {
                        prop_assert_eq!(x.ref_mul(&Pair::one()), x.clone());
                        prop_assert_eq!(x.ref_mul(&Pair::zero()), Pair::zero());
                        prop_assert_eq!(x.ref_add(&Pair::zero()), x.clone());
                    }
                }
            }
        };
    }

    pair_law_suite!(integer_laws, any_int());
    pair_law_suite!(natural_laws, any_nat());
    pair_law_suite!(rational_laws, any_rat());
    pair_law_suite!(boolean_laws, any_boolean());
    pair_law_suite!(maxplus_laws, any_maxplus());

    // Antisymmetry holds exactly in the domains where diagonal shifts can
    // only grow a pair: naturals (no additive inverses), booleans and
    // max-plus (addition is idempotent and monotone). Over the integers
    // and rationals mutual surpassing instead characterizes equal formal
    // differences, checked below.
    proptest! {
        #[test]
        fn surpass_is_antisymmetric_for_naturals(
            x in pair_of(any_nat()),
            y in pair_of(any_nat()),
        ) {
            if y.surpasses(&x) && x.surpasses(&y) {
                prop_assert_eq!(x, y);
            }
        }

        #[test]
        fn surpass_is_antisymmetric_for_booleans(
            x in pair_of(any_boolean()),
            y in pair_of(any_boolean()),
        ) {
            if y.surpasses(&x) && x.surpasses(&y) {
                prop_assert_eq!(x, y);
            }
        }

        #[test]
        fn surpass_is_antisymmetric_for_maxplus(
            x in pair_of(any_maxplus()),
            y in pair_of(any_maxplus()),
        ) {
            if y.surpasses(&x) && x.surpasses(&y) {
                prop_assert_eq!(x, y);
            }
        }

        #[test]
        fn mutual_surpass_over_rings_is_equal_formal_difference(
            x in pair_of(any_int()),
            y in pair_of(any_int()),
        ) {
            let mutual = y.surpasses(&x) && x.surpasses(&y);
            let same_difference =
                x.pos.clone() + y.neg.clone() == y.pos.clone() + x.neg.clone();
            prop_assert_eq!(mutual, same_difference);
        }
    }

    #[test]
    fn json_round_trip() {
        let x = ip(7, 2);
        let v = x.to_json();
        assert_eq!(Pair::<BigInt>::from_json(&v).unwrap(), x);
        let sparse: Value = serde_json::json!({ "pos": 4 });
        assert_eq!(Pair::<BigInt>::from_json(&sparse).unwrap(), ip(4, 0));
        let bad: Value = serde_json::json!({ "pos": 1, "sign": -1 });
        assert!(Pair::<BigInt>::from_json(&bad).is_err());
    }

    #[test]
    fn display_hides_a_zero_negative_slot() {
        assert_eq!(ip(3, 0).to_string(), "3");
        assert_eq!(ip(3, 2).to_string(), "(3 (-) 2)");
    }
}
