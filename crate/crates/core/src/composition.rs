//! The direct problem `b = x ∘ A` and its comparison machinery.
//!
//! `compose_max_t` evaluates `b_j = max_i t(x_i, a_ij)`; `compose_s_t`
//! generalizes the outer max to any implemented t-conorm aggregate;
//! `compose_similarity` evaluates the reference `b_j = max_i (1 − |x_i − a_ij|)`;
//! and `compose_adaptive` blends max-min with the drastic-sum aggregate using
//! a per-column weight chosen so the blend reproduces the reference wherever
//! a column has at least two nonzero minima.

use serde::{Deserialize, Serialize};

use crate::algebra::{TConormKind, TNormKind, UnitValue};
use crate::error::{Error, Result};

/// A non-empty membership vector with optional entry labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyVector {
    entries: Vec<UnitValue>,
    labels: Option<Vec<String>>,
}

impl FuzzyVector {
    pub fn new(entries: Vec<UnitValue>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyVector);
        }
        Ok(FuzzyVector {
            entries,
            labels: None,
        })
    }

    /// Validates raw degrees and builds a vector.
    pub fn from_degrees(values: &[f64]) -> Result<Self> {
        let entries = values
            .iter()
            .map(|&v| UnitValue::new(v))
            .collect::<Result<Vec<_>>>()?;
        FuzzyVector::new(entries)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.entries.len() {
            return Err(Error::LabelMismatch {
                what: "vector labels",
                expected: self.entries.len(),
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the constructor rejects empty vectors
    }

    pub fn get(&self, index: usize) -> UnitValue {
        self.entries[index]
    }

    pub fn entries(&self) -> &[UnitValue] {
        &self.entries
    }

    pub fn degrees(&self) -> Vec<f64> {
        self.entries.iter().map(|v| v.get()).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, index: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[index].as_str())
    }
}

impl Serialize for FuzzyVector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RawVector {
            values: self.degrees(),
            labels: self.labels.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FuzzyVector {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawVector::deserialize(deserializer)?;
        let mut vector = FuzzyVector::from_degrees(&raw.values).map_err(serde::de::Error::custom)?;
        if let Some(labels) = raw.labels {
            vector = vector.with_labels(labels).map_err(serde::de::Error::custom)?;
        }
        Ok(vector)
    }
}

#[derive(Serialize, Deserialize)]
struct RawVector {
    values: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

/// A non-empty relation matrix over rows × columns, stored row-major, with
/// optional row and column labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyRelation {
    entries: Vec<UnitValue>,
    rows: usize,
    cols: usize,
    row_labels: Option<Vec<String>>,
    col_labels: Option<Vec<String>>,
}

impl FuzzyRelation {
    pub fn from_rows(rows: Vec<Vec<UnitValue>>) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::EmptyRelation);
        }
        let cols = rows[0].len();
        for (index, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::RaggedRow {
                    row: index + 1,
                    expected: cols,
                    found: row.len(),
                });
            }
        }
        Ok(FuzzyRelation {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
            row_labels: None,
            col_labels: None,
        })
    }

    /// Validates raw degrees and builds a relation.
    pub fn from_degrees(rows: &[Vec<f64>]) -> Result<Self> {
        let converted = rows
            .iter()
            .map(|row| row.iter().map(|&v| UnitValue::new(v)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        FuzzyRelation::from_rows(converted)
    }

    pub fn with_row_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.rows {
            return Err(Error::LabelMismatch {
                what: "row labels",
                expected: self.rows,
                found: labels.len(),
            });
        }
        self.row_labels = Some(labels);
        Ok(self)
    }

    pub fn with_col_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.cols {
            return Err(Error::LabelMismatch {
                what: "column labels",
                expected: self.cols,
                found: labels.len(),
            });
        }
        self.col_labels = Some(labels);
        Ok(self)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> UnitValue {
        self.entries[row * self.cols + col]
    }

    pub fn column(&self, col: usize) -> impl Iterator<Item = UnitValue> + '_ {
        (0..self.rows).map(move |row| self.get(row, col))
    }

    pub fn to_degrees(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).get()).collect())
            .collect()
    }

    pub fn row_labels(&self) -> Option<&[String]> {
        self.row_labels.as_deref()
    }

    pub fn col_labels(&self) -> Option<&[String]> {
        self.col_labels.as_deref()
    }
}

impl Serialize for FuzzyRelation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RawRelation {
            values: (0..self.rows)
                .map(|i| (0..self.cols).map(|j| self.get(i, j).get()).collect())
                .collect(),
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FuzzyRelation {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawRelation::deserialize(deserializer)?;
        let mut relation =
            FuzzyRelation::from_degrees(&raw.values).map_err(serde::de::Error::custom)?;
        if let Some(labels) = raw.row_labels {
            relation = relation.with_row_labels(labels).map_err(serde::de::Error::custom)?;
        }
        if let Some(labels) = raw.col_labels {
            relation = relation.with_col_labels(labels).map_err(serde::de::Error::custom)?;
        }
        Ok(relation)
    }
}

#[derive(Serialize, Deserialize)]
struct RawRelation {
    values: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    row_labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    col_labels: Option<Vec<String>>,
}

pub(crate) fn check_dims(x: &FuzzyVector, a: &FuzzyRelation) -> Result<()> {
    if x.len() != a.rows() {
        return Err(Error::DimensionMismatch {
            vector: x.len(),
            rows: a.rows(),
        });
    }
    Ok(())
}

fn output_vector(values: Vec<UnitValue>, a: &FuzzyRelation) -> FuzzyVector {
    let vector = FuzzyVector::new(values).expect("relation has at least one column");
    match a.col_labels() {
        Some(labels) => vector
            .with_labels(labels.to_vec())
            .expect("label count matches column count"),
        None => vector,
    }
}

/// Per-entry similarity `1 − |x − a|`, computed as `min + (1 − max)`.
///
/// The two forms are algebraically identical; this one is exact whenever
/// `max(x, a) = 1`, which keeps the saturated-instance equality with max-min
/// bit-for-bit instead of merely close.
pub(crate) fn similarity_term(x: f64, a: f64) -> f64 {
    x.min(a) + (1.0 - x.max(a))
}

/// `b_j = max_i t(x_i, a_ij)`.
pub fn compose_max_t(x: &FuzzyVector, a: &FuzzyRelation, tnorm: TNormKind) -> Result<FuzzyVector> {
    check_dims(x, a)?;
    let values = (0..a.cols())
        .map(|j| {
            (0..a.rows())
                .map(|i| tnorm.eval(x.get(i), a.get(i, j)))
                .max()
                .expect("relation has at least one row")
        })
        .collect();
    Ok(output_vector(values, a))
}

/// The reference composition `b_j = max_i (1 − |x_i − a_ij|)`.
pub fn compose_similarity(x: &FuzzyVector, a: &FuzzyRelation) -> Result<FuzzyVector> {
    check_dims(x, a)?;
    let values = (0..a.cols())
        .map(|j| {
            let best = (0..a.rows())
                .map(|i| similarity_term(x.get(i).get(), a.get(i, j).get()))
                .fold(0.0f64, f64::max);
            UnitValue::trusted(best)
        })
        .collect();
    Ok(output_vector(values, a))
}

/// `b_j = S_i t(x_i, a_ij)` for any implemented t-conorm aggregate `S`.
pub fn compose_s_t(
    x: &FuzzyVector,
    a: &FuzzyRelation,
    tnorm: TNormKind,
    sconorm: TConormKind,
) -> Result<FuzzyVector> {
    check_dims(x, a)?;
    let values = (0..a.cols())
        .map(|j| {
            let terms: Vec<UnitValue> = (0..a.rows())
                .map(|i| tnorm.eval(x.get(i), a.get(i, j)))
                .collect();
            sconorm.aggregate(&terms).expect("at least one row")
        })
        .collect();
    Ok(output_vector(values, a))
}

/// Per-column ingredients of the adaptive blend.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LambdaColumn {
    pub column: usize,
    /// Blend weight on the drastic-sum side; 1 for degenerate columns.
    pub lambda: f64,
    /// True when the blend equation pins nothing down: the drastic-sum
    /// aggregate of the column minima equals max-min (at most one nonzero
    /// minimum, or a minimum of 1), so the weight is fixed at 1 and the
    /// output falls back to max-min.
    pub degenerate: bool,
    pub max_min: UnitValue,
    pub similarity: UnitValue,
    pub drastic_sum: UnitValue,
    /// How far the raw weight fell outside [0, 1] before clamping; stays at
    /// rounding scale (≤ 1e-12) on non-degenerate columns.
    pub clamp: f64,
}

/// The column-by-column weights `λ_j = (sim_j − maxmin_j) / (sdagg_j − maxmin_j)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LambdaProfile {
    pub columns: Vec<LambdaColumn>,
}

impl LambdaProfile {
    pub fn lambdas(&self) -> Vec<f64> {
        self.columns.iter().map(|c| c.lambda).collect()
    }

    pub fn degenerate_columns(&self) -> Vec<usize> {
        self.columns
            .iter()
            .filter(|c| c.degenerate)
            .map(|c| c.column)
            .collect()
    }
}

/// Computes the blend weights for every column.
pub fn lambda_profile(x: &FuzzyVector, a: &FuzzyRelation) -> Result<LambdaProfile> {
    check_dims(x, a)?;
    let columns = (0..a.cols())
        .map(|j| {
            let mins: Vec<UnitValue> = (0..a.rows())
                .map(|i| TNormKind::Min.eval(x.get(i), a.get(i, j)))
                .collect();
            let max_min = mins.iter().copied().max().expect("at least one row");
            let similarity = (0..a.rows())
                .map(|i| similarity_term(x.get(i).get(), a.get(i, j).get()))
                .fold(0.0f64, f64::max);
            let drastic_sum = TConormKind::DrasticSum
                .aggregate(&mins)
                .expect("at least one row");

            let degenerate = drastic_sum == max_min;
            let (lambda, clamp) = if degenerate {
                (1.0, 0.0)
            } else {
                let raw = (similarity - max_min.get()) / (drastic_sum.get() - max_min.get());
                let clamped = raw.clamp(0.0, 1.0);
                (clamped, (raw - clamped).abs())
            };
            LambdaColumn {
                column: j,
                lambda,
                degenerate,
                max_min,
                similarity: UnitValue::trusted(similarity),
                drastic_sum,
                clamp,
            }
        })
        .collect();
    Ok(LambdaProfile { columns })
}

/// An adaptive composition result together with the weights that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdaptiveComposition {
    pub output: FuzzyVector,
    pub profile: LambdaProfile,
}

/// Blends max-min with the drastic-sum aggregate per column:
/// `b_j = λ_j · sdagg_j + (1 − λ_j) · maxmin_j`.
///
/// On columns with at least two nonzero minima (and max-min below 1) the
/// result equals the similarity reference up to rounding; degenerate columns
/// fall back to max-min and are flagged in the profile.
pub fn compose_adaptive(x: &FuzzyVector, a: &FuzzyRelation) -> Result<AdaptiveComposition> {
    let profile = lambda_profile(x, a)?;
    let values = profile
        .columns
        .iter()
        .map(|col| {
            let value = if col.degenerate {
                col.max_min.get()
            } else {
                col.lambda * col.drastic_sum.get() + (1.0 - col.lambda) * col.max_min.get()
            };
            UnitValue::trusted(value)
        })
        .collect();
    Ok(AdaptiveComposition {
        output: output_vector(values, a),
        profile,
    })
}

/// A descending ordering of columns with explicit tie groups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ranking {
    /// Column indices from best to worst; ties broken by ascending index.
    pub order: Vec<usize>,
    /// Maximal runs of equal membership, in rank order.
    pub groups: Vec<Vec<usize>>,
}

impl Ranking {
    /// The top-ranked column (first of the leading tie group).
    pub fn argmax(&self) -> usize {
        self.order[0]
    }

    /// The top column if it is strictly ahead of every other, else `None`.
    pub fn strictly_first(&self) -> Option<usize> {
        (self.groups[0].len() == 1).then(|| self.order[0])
    }
}

/// Orders the entries of `b` from largest to smallest.
pub fn rank_alternatives(b: &FuzzyVector) -> Ranking {
    let mut order: Vec<usize> = (0..b.len()).collect();
    order.sort_by(|&i, &j| b.get(j).cmp(&b.get(i)).then(i.cmp(&j)));

    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &index in &order {
        match groups.last_mut() {
            Some(group) if b.get(group[0]) == b.get(index) => group.push(index),
            _ => groups.push(vec![index]),
        }
    }
    Ranking { order, groups }
}

/// How a composition result stacks up against the similarity reference.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    /// `max_j |b_j − oracle_j|`.
    pub linf_error: f64,
    /// Whether both vectors put the same column on top (ties resolved by
    /// ascending index on each side).
    pub argmax_agrees: bool,
    /// Column pairs ordered the same way on both sides; a tie counts as
    /// agreement only when both sides tie.
    pub concordant_pairs: usize,
    pub total_pairs: usize,
    /// `concordant_pairs / total_pairs` (1.0 when there are no pairs).
    pub order_agreement: f64,
}

/// Compares a composition result against the similarity reference.
pub fn compare_to_oracle(b: &FuzzyVector, oracle: &FuzzyVector) -> Result<ComparisonReport> {
    if b.len() != oracle.len() {
        return Err(Error::LengthMismatch {
            left: b.len(),
            right: oracle.len(),
        });
    }
    let linf_error = (0..b.len())
        .map(|j| (b.get(j).get() - oracle.get(j).get()).abs())
        .fold(0.0f64, f64::max);
    let argmax_agrees = rank_alternatives(b).argmax() == rank_alternatives(oracle).argmax();

    let mut concordant = 0usize;
    let mut total = 0usize;
    for j in 0..b.len() {
        for k in (j + 1)..b.len() {
            total += 1;
            if b.get(j).cmp(&b.get(k)) == oracle.get(j).cmp(&oracle.get(k)) {
                concordant += 1;
            }
        }
    }
    Ok(ComparisonReport {
        linf_error,
        argmax_agrees,
        concordant_pairs: concordant,
        total_pairs: total,
        order_agreement: if total == 0 {
            1.0
        } else {
            concordant as f64 / total as f64
        },
    })
}
