use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{CheckedSub, One, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::ParseError;

/// Tag identifying one of the supported coefficient domains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DomainKind {
    Integers,
    Rationals,
    Naturals,
    Booleans,
    MaxPlus,
}

impl DomainKind {
    /// Short token used in JSON payloads and on the command line.
    pub fn name(self) -> &'static str {
        match self {
            DomainKind::Integers => "int",
            DomainKind::Rationals => "rat",
            DomainKind::Naturals => "nat",
            DomainKind::Booleans => "bool",
            DomainKind::MaxPlus => "maxplus",
        }
    }

    pub fn from_name(name: &str) -> Option<DomainKind> {
        match name {
            "int" => Some(DomainKind::Integers),
            "rat" => Some(DomainKind::Rationals),
            "nat" => Some(DomainKind::Naturals),
            "bool" => Some(DomainKind::Booleans),
            "maxplus" => Some(DomainKind::MaxPlus),
            _ => None,
        }
    }
}

impl fmt::Display for DomainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A commutative semiring with exact arithmetic.
///
/// Addition and multiplication come from the `Zero`/`One` supertraits
/// (which bundle `Add` and `Mul`). There is no subtraction anywhere in
/// this trait: domains without additive inverses (naturals, booleans,
/// max-plus) are first-class citizens, and signed bookkeeping is handled
/// one level up by [`crate::pair::Pair`].
pub trait Semiring: Clone + Eq + fmt::Debug + fmt::Display + Zero + One {
    fn kind() -> DomainKind;

    /// `self + rhs` without consuming the operands.
    fn ref_add(&self, rhs: &Self) -> Self {
        self.clone() + rhs.clone()
    }

    /// `self * rhs` without consuming the operands.
    fn ref_mul(&self, rhs: &Self) -> Self {
        self.clone() * rhs.clone()
    }

    /// Decides whether the pair `(y0, y1)` equals `(x0 + t, x1 + t)` for
    /// some scalar `t`, returning such a `t` when one exists.
    ///
    /// This is the scalar engine behind the surpassing relation: `y`
    /// surpasses `x` exactly when `y` differs from `x` by a diagonal
    /// shift. Each domain gets its own decision procedure because the
    /// solvability of `x + t = y` looks very different with and without
    /// cancellation.
    fn shift_witness(x0: &Self, x1: &Self, y0: &Self, y1: &Self) -> Option<Self>;

    /// Builds `num / den` when the domain contains it. Only the rationals
    /// return values for non-unit denominators; everything else yields
    /// `None` and lets callers raise an unsupported-domain error.
    fn from_ratio(num: u64, den: u64) -> Option<Self> {
        let _ = (num, den);
        None
    }

    /// Parses a scalar from its text form (CSV cells, JSON strings).
    fn parse_literal(text: &str) -> Result<Self, ParseError>;

    /// Decodes a scalar from its JSON form.
    fn from_json(value: &Value) -> Result<Self, ParseError>;

    /// Encodes a scalar into its JSON form.
    fn to_json(&self) -> Value;
}

fn reject_minus_inf(text: &str, domain: DomainKind) -> Result<(), ParseError> {
    if text == "-inf" {
        return Err(ParseError::new(format!(
            "the \"-inf\" literal is only valid in the maxplus domain, not {domain}"
        )));
    }
    Ok(())
}

fn json_type_name(value: &Value) -> &'static str {
    match value {
        Value::Null => "null",
        Value::Bool(_) => "a boolean",
        Value::Number(_) => "a number",
        Value::String(_) => "a string",
        Value::Array(_) => "an array",
        Value::Object(_) => "an object",
    }
}

/// Decodes a JSON value into a `BigInt`, accepting integer-valued numbers
/// and decimal strings. Fractional JSON numbers are rejected so that no
/// inexact value can sneak in through the wire format.
fn bigint_from_json(value: &Value, domain: DomainKind) -> Result<BigInt, ParseError> {
    match value {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(ParseError::new(format!(
                    "non-integer number {n} is not exact; write the value as a string"
                )))
            }
        }
        Value::String(s) => {
            reject_minus_inf(s.trim(), domain)?;
            BigInt::from_str(s.trim())
                .map_err(|_| ParseError::new(format!("expected an integer, got \"{s}\"")))
        }
        other => Err(ParseError::new(format!(
            "expected an integer, got {}",
            json_type_name(other)
        ))),
    }
}

fn bigint_to_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(i) => Value::from(i),
        None => Value::from(v.to_string()),
    }
}

impl Semiring for BigInt {
    fn kind() -> DomainKind {
        DomainKind::Integers
    }

    fn shift_witness(x0: &Self, x1: &Self, y0: &Self, y1: &Self) -> Option<Self> {
        let t = y0 - x0;
        if y1 - x1 == t {
            Some(t)
        } else {
            None
        }
    }

    fn parse_literal(text: &str) -> Result<Self, ParseError> {
        let t = text.trim();
        reject_minus_inf(t, DomainKind::Integers)?;
        BigInt::from_str(t)
            .map_err(|_| ParseError::new(format!("expected an integer, got \"{text}\"")))
    }

    fn from_json(value: &Value) -> Result<Self, ParseError> {
        bigint_from_json(value, DomainKind::Integers)
    }

    fn to_json(&self) -> Value {
        bigint_to_json(self)
    }
}

impl Semiring for BigUint {
    fn kind() -> DomainKind {
        DomainKind::Naturals
    }

    fn shift_witness(x0: &Self, x1: &Self, y0: &Self, y1: &Self) -> Option<Self> {
        let t = y0.checked_sub(x0)?;
        if y1.checked_sub(x1)? == t {
            Some(t)
        } else {
            None
        }
    }

    fn parse_literal(text: &str) -> Result<Self, ParseError> {
        let t = text.trim();
        reject_minus_inf(t, DomainKind::Naturals)?;
        BigUint::from_str(t)
            .map_err(|_| ParseError::new(format!("expected a nonnegative integer, got \"{text}\"")))
    }

    fn from_json(value: &Value) -> Result<Self, ParseError> {
        let v = bigint_from_json(value, DomainKind::Naturals)?;
        v.to_biguint()
            .ok_or_else(|| ParseError::new(format!("expected a nonnegative integer, got {v}")))
    }

    fn to_json(&self) -> Value {
        match self.to_u64() {
            Some(u) => Value::from(u),
            None => Value::from(self.to_string()),
        }
    }
}

impl Semiring for BigRational {
    fn kind() -> DomainKind {
        DomainKind::Rationals
    }

    fn shift_witness(x0: &Self, x1: &Self, y0: &Self, y1: &Self) -> Option<Self> {
        let t = y0 - x0;
        if y1 - x1 == t {
            Some(t)
        } else {
            None
        }
    }

    fn from_ratio(num: u64, den: u64) -> Option<Self> {
        if den == 0 {
            return None;
        }
        Some(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    fn parse_literal(text: &str) -> Result<Self, ParseError> {
        let t = text.trim();
        reject_minus_inf(t, DomainKind::Rationals)?;
        if let Some((num, den)) = t.split_once('/') {
            let n = BigInt::from_str(num.trim()).map_err(|_| {
                ParseError::new(format!("expected an integer numerator, got \"{num}\""))
            })?;
            let d = BigInt::from_str(den.trim()).map_err(|_| {
                ParseError::new(format!("expected an integer denominator, got \"{den}\""))
            })?;
            if d.is_zero() {
                return Err(ParseError::new(format!("zero denominator in \"{text}\"")));
            }
            return Ok(BigRational::new(n, d));
        }
        if let Some((int_part, frac_part)) = t.split_once('.') {
            // Exact decimal form, e.g. "2.5" or "-0.125".
            let (negative, int_digits) = match int_part.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, int_part.strip_prefix('+').unwrap_or(int_part)),
            };
            let digits_ok = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
            if !digits_ok(int_digits)
                || !digits_ok(frac_part)
                || (int_digits.is_empty() && frac_part.is_empty())
            {
                return Err(ParseError::new(format!(
                    "expected a rational (\"p/q\", decimal, or integer), got \"{text}\""
                )));
            }
            let int_value = if int_digits.is_empty() {
                BigInt::zero()
            } else {
                BigInt::from_str(int_digits).expect("digits checked")
            };
            let frac_value = if frac_part.is_empty() {
                BigInt::zero()
            } else {
                BigInt::from_str(frac_part).expect("digits checked")
            };
            let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
            let mut numer = int_value * &scale + frac_value;
            if negative {
                numer = -numer;
            }
            return Ok(BigRational::new(numer, scale));
        }
        BigInt::from_str(t).map(BigRational::from).map_err(|_| {
            ParseError::new(format!(
                "expected a rational (\"p/q\", decimal, or integer), got \"{text}\""
            ))
        })
    }

    fn from_json(value: &Value) -> Result<Self, ParseError> {
        match value {
            Value::Number(n) => {
                if let Some(i) = n.as_i64() {
                    Ok(BigRational::from(BigInt::from(i)))
                } else if let Some(u) = n.as_u64() {
                    Ok(BigRational::from(BigInt::from(u)))
                } else {
                    Err(ParseError::new(format!(
                        "non-integer number {n} is not exact; write the rational as \"p/q\""
                    )))
                }
            }
            Value::String(s) => Self::parse_literal(s),
            other => Err(ParseError::new(format!(
                "expected a rational, got {}",
                json_type_name(other)
            ))),
        }
    }

    fn to_json(&self) -> Value {
        if self.is_integer() {
            bigint_to_json(&self.to_integer())
        } else {
            Value::from(format!("{}/{}", self.numer(), self.denom()))
        }
    }
}

/// The two-element semiring with `or` as addition and `and` as
/// multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Boolean(pub bool);

impl Add for Boolean {
    type Output = Boolean;
    // Semiring addition on Booleans is logical or by definition.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Boolean) -> Boolean {
        Boolean(self.0 | rhs.0)
    }
}

impl Mul for Boolean {
    type Output = Boolean;
    // Semiring multiplication on Booleans is logical and by definition.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Boolean) -> Boolean {
        Boolean(self.0 & rhs.0)
    }
}

impl Zero for Boolean {
    fn zero() -> Self {
        Boolean(false)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
}

impl One for Boolean {
    fn one() -> Self {
        Boolean(true)
    }
}

impl fmt::Display for Boolean {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.0 { "1" } else { "0" })
    }
}

impl Semiring for Boolean {
    fn kind() -> DomainKind {
        DomainKind::Booleans
    }

    fn shift_witness(x0: &Self, x1: &Self, y0: &Self, y1: &Self) -> Option<Self> {
        // Only two candidate shifts exist; try both.
        [Boolean(false), Boolean(true)]
            .into_iter()
            .find(|&t| *x0 + t == *y0 && *x1 + t == *y1)
    }

    fn parse_literal(text: &str) -> Result<Self, ParseError> {
        match text.trim() {
            "0" | "false" => Ok(Boolean(false)),
            "1" | "true" => Ok(Boolean(true)),
            other => Err(ParseError::new(format!(
                "expected a boolean (0, 1, true, or false), got \"{other}\""
            ))),
        }
    }

    fn from_json(value: &Value) -> Result<Self, ParseError> {
        match value {
            Value::Bool(b) => Ok(Boolean(*b)),
            Value::String(s) => Self::parse_literal(s),
            other => Err(ParseError::new(format!(
                "expected a boolean, got {}",
                json_type_name(other)
            ))),
        }
    }

    fn to_json(&self) -> Value {
        Value::Bool(self.0)
    }
}

/// The max-plus semiring: addition is `max`, multiplication is numeric
/// `+`, and the additive identity is minus infinity.
///
/// Finite values are arbitrary-precision integers; `None` encodes the
/// minus-infinity bottom element. The derived ordering (with `None`
/// smallest) agrees with the max-plus order, so `max` is just `Ord::max`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MaxPlus(Option<BigInt>);

impl MaxPlus {
    pub fn neg_inf() -> Self {
        MaxPlus(None)
    }

    pub fn finite(v: impl Into<BigInt>) -> Self {
        MaxPlus(Some(v.into()))
    }

    pub fn as_finite(&self) -> Option<&BigInt> {
        self.0.as_ref()
    }
}

impl Add for MaxPlus {
    type Output = MaxPlus;
    fn add(self, rhs: MaxPlus) -> MaxPlus {
        MaxPlus(self.0.max(rhs.0))
    }
}

impl Mul for MaxPlus {
    type Output = MaxPlus;
    // Tropical multiplication is ordinary addition; -infinity absorbs.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: MaxPlus) -> MaxPlus {
        match (self.0, rhs.0) {
            (Some(a), Some(b)) => MaxPlus(Some(a + b)),
            _ => MaxPlus(None),
        }
    }
}

impl Zero for MaxPlus {
    fn zero() -> Self {
        MaxPlus(None)
    }
    fn is_zero(&self) -> bool {
        self.0.is_none()
    }
}

impl One for MaxPlus {
    fn one() -> Self {
        MaxPlus(Some(BigInt::zero()))
    }
}

impl fmt::Display for MaxPlus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Some(v) => write!(f, "{v}"),
            None => f.write_str("-inf"),
        }
    }
}

impl Semiring for MaxPlus {
    fn kind() -> DomainKind {
        DomainKind::MaxPlus
    }

    fn shift_witness(x0: &Self, x1: &Self, y0: &Self, y1: &Self) -> Option<Self> {
        // y_i = max(x_i, t) can only raise a coordinate, and raises it to
        // exactly t; a strictly raised coordinate therefore pins t.
        if y0 < x0 || y1 < x1 {
            return None;
        }
        match (y0 > x0, y1 > x1) {
            (false, false) => Some(MaxPlus::neg_inf()),
            (true, false) => (y0 <= y1).then(|| y0.clone()),
            (false, true) => (y1 <= y0).then(|| y1.clone()),
            (true, true) => (y0 == y1).then(|| y0.clone()),
        }
    }

    fn parse_literal(text: &str) -> Result<Self, ParseError> {
        let t = text.trim();
        if t == "-inf" {
            return Ok(MaxPlus::neg_inf());
        }
        BigInt::from_str(t).map(MaxPlus::finite).map_err(|_| {
            ParseError::new(format!(
                "expected a max-plus value (integer or \"-inf\"), got \"{text}\""
            ))
        })
    }

    fn from_json(value: &Value) -> Result<Self, ParseError> {
        match value {
            Value::String(s) if s.trim() == "-inf" => Ok(MaxPlus::neg_inf()),
            other => bigint_from_json(other, DomainKind::MaxPlus).map(MaxPlus::finite),
        }
    }

    fn to_json(&self) -> Value {
        match &self.0 {
            Some(v) => bigint_to_json(v),
            None => Value::from("-inf"),
        }
    }
}
