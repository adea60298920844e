use serde_json::Value;

use crate::error::{Error, ParseError, Result};
use crate::multivector::MultiVector;
use crate::semiring::Semiring;
use crate::word::MAX_RANK;

/// A semiring-linear endomorphism of the rank-`n` space of degree-1
/// vectors, stored as a dense matrix.
///
/// Entry `[i][j]` is the `b_i`-coefficient of the image of `b_j`, so a
/// column holds the image of one basis vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Endomorphism<S: Semiring> {
    rank: usize,
    matrix: Vec<Vec<S>>,
}

impl<S: Semiring> Endomorphism<S> {
    pub fn new(matrix: Vec<Vec<S>>) -> Result<Self> {
        let rank = matrix.len();
        if rank == 0 {
            return Err(Error::RankTooSmall { rank, min: 1 });
        }
        if rank > MAX_RANK {
            return Err(Error::RankTooLarge {
                rank,
                max: MAX_RANK,
            });
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::MatrixShape {
                    row: i,
                    len: row.len(),
                    rank,
                });
            }
        }
        Ok(Endomorphism { rank, matrix })
    }

    /// The zero endomorphism.
    pub fn zero(rank: usize) -> Self {
        assert!((1..=MAX_RANK).contains(&rank));
        Endomorphism {
            rank,
            matrix: vec![vec![S::zero(); rank]; rank],
        }
    }

    /// The identity endomorphism.
    pub fn identity(rank: usize) -> Self {
        let mut out = Self::zero(rank);
        for i in 0..rank {
            out.matrix[i][i] = S::one();
        }
        out
    }

    /// The shift endomorphism `b_j -> b_{j+1}` (and `b_{n-1} -> 0`).
    pub fn shift(rank: usize) -> Self {
        let mut out = Self::zero(rank);
        for j in 0..rank.saturating_sub(1) {
            out.matrix[j + 1][j] = S::one();
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, i: usize, j: usize) -> &S {
        &self.matrix[i][j]
    }

    pub fn rows(&self) -> &[Vec<S>] {
        &self.matrix
    }

    /// Applies the endomorphism to a pure degree-1 multivector.
    pub fn apply(&self, v: &MultiVector<S>) -> Result<MultiVector<S>> {
        if self.rank != v.rank() {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: v.rank(),
            });
        }
        if v.is_zero() {
            return Ok(MultiVector::zero(self.rank));
        }
        match v.pure_degree() {
            Some(1) => {}
            Some(d) => {
                return Err(Error::DegreeOutOfRange {
                    op: "endo_apply",
                    degree: d,
                    min: 1,
                    max: 1,
                })
            }
            None => return Err(Error::MixedDegrees { op: "endo_apply" }),
        }
        let mut out = MultiVector::zero(self.rank);
        for (w, c) in v.terms() {
            let j = w.smallest().expect("degree-1 word");
            let image = column_to_multivector(&self.matrix, self.rank, j);
            out.add_assign_unchecked(&image.scale(c)?);
        }
        Ok(out)
    }

    /// The image of `b_j` as a multivector.
    pub(crate) fn column_mv(&self, j: usize) -> MultiVector<S> {
        debug_assert!(j < self.rank);
        column_to_multivector(&self.matrix, self.rank, j)
    }

    /// The matrix powers `f^0, f^1, ..., f^up_to`, computed once so that
    /// repeated derivation coefficients share them.
    pub(crate) fn powers(&self, up_to: usize) -> Vec<Vec<Vec<S>>> {
        let mut out = Vec::with_capacity(up_to + 1);
        out.push(Self::identity(self.rank).matrix);
        for k in 1..=up_to {
            let next = mat_mul(&out[k - 1], &self.matrix, self.rank);
            out.push(next);
        }
        out
    }

    /// Encodes the matrix as a row-major JSON array.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.matrix
                .iter()
                .map(|row| Value::Array(row.iter().map(S::to_json).collect()))
                .collect(),
        )
    }

    /// Decodes a matrix from JSON: either a bare row-major array, or an
    /// object `{"n": ..., "domain": ..., "matrix": [...]}` whose extra
    /// fields are cross-checked.
    pub fn from_json(value: &Value) -> std::result::Result<Self, ParseError> {
        let (array, declared_rank) = match value {
            Value::Array(rows) => (rows, None),
            Value::Object(obj) => {
                for key in obj.keys() {
                    if !matches!(key.as_str(), "n" | "domain" | "matrix") {
                        return Err(ParseError::new(format!(
                            "unexpected key \"{key}\" in matrix object"
                        )));
                    }
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
                let declared = match obj.get("n") {
                    Some(n) => Some(n.as_u64().ok_or_else(|| {
                        ParseError::new("field \"n\": expected a nonnegative integer")
                    })? as usize),
                    None => None,
                };
                let rows = obj.get("matrix").and_then(Value::as_array).ok_or_else(|| {
                    ParseError::new("field \"matrix\": expected a row-major array")
                })?;
                (rows, declared)
            }
            other => {
                return Err(ParseError::new(format!(
                    "expected a matrix (array of rows), got {}",
                    match other {
                        Value::Null => "null",
                        Value::Bool(_) => "a boolean",
                        Value::Number(_) => "a number",
                        Value::String(_) => "a string",
                        _ => "a value",
                    }
                )))
            }
        };
        let rank = array.len();
        if let Some(declared) = declared_rank {
            if declared != rank {
                return Err(ParseError::new(format!(
                    "field \"n\" declares rank {declared} but the matrix has {rank} rows"
                )));
            }
        }
        let mut matrix = Vec::with_capacity(rank);
        for (i, row_val) in array.iter().enumerate() {
            let row = row_val
                .as_array()
                .ok_or_else(|| ParseError::new(format!("row {i}: expected an array of scalars")))?;
            if row.len() != rank {
                return Err(ParseError::new(format!(
                    "row {i} has {} entries, expected {rank} (matrix must be square)",
                    row.len()
                )));
            }
            let mut parsed = Vec::with_capacity(rank);
            for (j, cell) in row.iter().enumerate() {
                let s =
                    S::from_json(cell).map_err(|e| e.in_field(format!("row {i}, column {j}")))?;
                parsed.push(s);
            }
            matrix.push(parsed);
        }
        Endomorphism::new(matrix).map_err(|e| ParseError::new(e.to_string()))
    }

    /// Decodes a matrix from CSV: one row per line, comma-separated
    /// scalar literals.
    pub fn from_csv(text: &str) -> std::result::Result<Self, ParseError> {
        let mut rows: Vec<(usize, Vec<S>)> = Vec::new();
        for (line_no, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let mut row = Vec::new();
            for (col, cell) in line.split(',').enumerate() {
                let s = S::parse_literal(cell)
                    .map_err(|e| e.in_field(format!("line {}, field {}", line_no + 1, col + 1)))?;
                row.push(s);
            }
            rows.push((line_no + 1, row));
        }
        let rank = rows.len();
        for (line_no, row) in &rows {
            if row.len() != rank {
                return Err(ParseError::new(format!(
                    "line {line_no} has {} fields, expected {rank} (matrix must be square)",
                    row.len()
                )));
            }
        }
        let matrix = rows.into_iter().map(|(_, row)| row).collect();
        Endomorphism::new(matrix).map_err(|e| ParseError::new(e.to_string()))
    }
}

fn column_to_multivector<S: Semiring>(matrix: &[Vec<S>], rank: usize, j: usize) -> MultiVector<S> {
    let entries = (0..rank).filter_map(|i| {
        let s = &matrix[i][j];
        if s.is_zero() {
            None
        } else {
            Some((vec![i], crate::pair::Pair::embed(s.clone())))
        }
    });
    MultiVector::from_terms(rank, entries).expect("columns are canonical degree-1 terms")
}

pub(crate) fn mat_mul<S: Semiring>(a: &[Vec<S>], b: &[Vec<S>], rank: usize) -> Vec<Vec<S>> {
    let mut out = vec![vec![S::zero(); rank]; rank];
    for i in 0..rank {
        for k in 0..rank {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..rank {
                if b[k][j].is_zero() {
                    continue;
                }
                out[i][j] = out[i][j].ref_add(&a[i][k].ref_mul(&b[k][j]));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pair::Pair;
    use num_bigint::BigInt;

    type IntEndo = Endomorphism<BigInt>;
    type IntMv = MultiVector<BigInt>;

    fn int_matrix(rows: &[&[i64]]) -> IntEndo {
        IntEndo::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn shift_sends_basis_vectors_up() {
        let f = IntEndo::shift(4);
        let b1 = IntMv::basis(4, 1).unwrap();
        assert_eq!(f.apply(&b1).unwrap(), IntMv::basis(4, 2).unwrap());
        let top = IntMv::basis(4, 3).unwrap();
        assert!(f.apply(&top).unwrap().is_zero());
    }

    #[test]
    fn apply_is_linear_over_columns() {
        let f = int_matrix(&[&[1, 2], &[3, 4]]);
        // f(2 b_0 + b_1) = 2(b_0 + 3 b_1) + (2 b_0 + 4 b_1).
        let v = MultiVector::from_terms(
            2,
            [
                (vec![0], Pair::embed(BigInt::from(2))),
                (vec![1], Pair::embed(BigInt::from(1))),
            ],
        )
        .unwrap();
        let expected = MultiVector::from_terms(
            2,
            [
                (vec![0], Pair::embed(BigInt::from(4))),
                (vec![1], Pair::embed(BigInt::from(10))),
            ],
        )
        .unwrap();
        assert_eq!(f.apply(&v).unwrap(), expected);
    }

    #[test]
    fn apply_rejects_higher_degrees() {
        let f = IntEndo::identity(3);
        let w = IntMv::basis_word(3, &[0, 1]).unwrap();
        assert_eq!(
            f.apply(&w),
            Err(Error::DegreeOutOfRange {
                op: "endo_apply",
                degree: 2,
                min: 1,
                max: 1
            })
        );
        let mixed = IntMv::basis(3, 0)
            .unwrap()
            .add(&IntMv::basis_word(3, &[0, 1]).unwrap())
            .unwrap();
        assert_eq!(
            f.apply(&mixed),
            Err(Error::MixedDegrees { op: "endo_apply" })
        );
    }

    #[test]
    fn powers_of_the_shift_nilpotent() {
        let f = IntEndo::shift(3);
        let pow = f.powers(3);
        assert_eq!(pow[0], IntEndo::identity(3).matrix);
        assert_eq!(pow[1], f.matrix);
        // shift^2 maps b_0 -> b_2 only.
        assert_eq!(pow[2][2][0], BigInt::from(1));
        assert!(pow[3].iter().flatten().all(|v| v == &BigInt::from(0)));
    }

    #[test]
    fn json_round_trip_and_cross_checks() {
        let f = int_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(IntEndo::from_json(&f.to_json()).unwrap(), f);

        let wrapped = serde_json::json!({
            "n": 2, "domain": "int", "matrix": [[0, 1], [1, 0]]
        });
        assert_eq!(IntEndo::from_json(&wrapped).unwrap(), f);

        let bad_rank = serde_json::json!({
            "n": 3, "matrix": [[0, 1], [1, 0]]
        });
        assert!(IntEndo::from_json(&bad_rank).is_err());

        let ragged = serde_json::json!([[1, 2], [3]]);
        let err = IntEndo::from_json(&ragged).unwrap_err();
        assert!(err.message().contains("row 1"), "{err}");

        let inexact = serde_json::json!([[0.5, 0], [0, 1]]);
        let err = IntEndo::from_json(&inexact).unwrap_err();
        assert!(err.message().contains("row 0, column 0"), "{err}");
    }

    #[test]
    fn csv_parsing_reports_line_and_field() {
        let f = IntEndo::from_csv("0,1\n1,0\n").unwrap();
        assert_eq!(f, int_matrix(&[&[0, 1], &[1, 0]]));

        let err = IntEndo::from_csv("0,1\n1,x\n").unwrap_err();
        assert!(err.message().contains("line 2, field 2"), "{err}");

        let err = IntEndo::from_csv("0,1,2\n1,0\n3,4,5\n").unwrap_err();
        assert!(err.message().contains("line 2"), "{err}");
    }

    #[test]
    fn maxplus_csv_accepts_minus_inf() {
        use crate::semiring::MaxPlus;
        let f = Endomorphism::<MaxPlus>::from_csv("-inf,3\n0,-inf\n").unwrap();
        assert_eq!(f.entry(0, 0), &MaxPlus::neg_inf());
        assert_eq!(f.entry(0, 1), &MaxPlus::finite(3));
    }
}
