//! Per-column and whole-instance accuracy diagnostics.
//!
//! For a given instance `(x, A)` these checks decide, column by column, how
//! the max-t compositions relate to the similarity reference:
//!
//! * when every pair of a column is saturated (`max(x_i, a_ij) = 1`), the
//!   max-min composition equals the similarity degree exactly;
//! * without any saturated pair, max-min provably falls short of it;
//! * with at least two nonzero column minima, the adaptive blend reproduces
//!   the similarity degree exactly;
//! * with at most one nonzero minimum, every aggregate-of-t-norm composition
//!   is bounded above by the similarity degree;
//! * under the strict-gap conditions below, the shortfall is provably strict.
//!
//! [`classify_regime`] condenses the column facts into one label per column
//! plus a global label for the instance.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::composition::{check_dims, FuzzyRelation, FuzzyVector};
use crate::error::{Error, Result};

/// Raw per-column facts the checks below are built from.
struct ColumnFacts {
    nonzero_min_count: usize,
    saturated_rows: usize,
    rows: usize,
    maxt_strict_gap: bool,
    universal_strict_gap: bool,
}

fn column_facts(x: &FuzzyVector, a: &FuzzyRelation, column: usize) -> ColumnFacts {
    let mut facts = ColumnFacts {
        nonzero_min_count: 0,
        saturated_rows: 0,
        rows: a.rows(),
        maxt_strict_gap: true,
        universal_strict_gap: true,
    };
    for i in 0..a.rows() {
        let xi = x.get(i).get();
        let aij = a.get(i, column).get();
        let min = xi.min(aij);
        let max = xi.max(aij);
        if min > 0.0 {
            facts.nonzero_min_count += 1;
        }
        if max == 1.0 {
            facts.saturated_rows += 1;
        }
        // The pair is closer to itself than its larger side is to 1; the
        // similarity term then strictly exceeds any min-bounded term.
        facts.maxt_strict_gap &= min > 2.0 * max - 1.0;
        facts.universal_strict_gap &= min == 0.0 && max < 1.0;
    }
    facts
}

fn check_column(a: &FuzzyRelation, column: usize) -> Result<()> {
    if column >= a.cols() {
        return Err(Error::ColumnOutOfRange {
            index: column,
            columns: a.cols(),
        });
    }
    Ok(())
}

/// True iff every pair `(x_i, a_ij)` of the instance is saturated,
/// i.e. `max(x_i, a_ij) = 1` for all `i, j`.
///
/// Sufficiency: each similarity term `min + (1 − max)` then collapses to the
/// bare minimum, so the max-min composition equals the similarity
/// composition exactly (bit-for-bit under this crate's term factoring).
pub fn all_pairs_saturated(x: &FuzzyVector, a: &FuzzyRelation) -> Result<bool> {
    check_dims(x, a)?;
    Ok((0..a.cols()).all(|j| {
        let facts = column_facts(x, a, j);
        facts.saturated_rows == facts.rows
    }))
}

/// Per column: true iff some row has `max(x_i, a_ij) = 1`.
///
/// Necessity: on a column with no saturated pair, the max-min composition
/// provably differs from the similarity composition, because every
/// similarity term strictly exceeds its minimum by `1 − max > 0`.
pub fn saturated_columns(x: &FuzzyVector, a: &FuzzyRelation) -> Result<Vec<bool>> {
    check_dims(x, a)?;
    Ok((0..a.cols())
        .map(|j| column_facts(x, a, j).saturated_rows > 0)
        .collect())
}

/// True iff `min(x_i, a_ij) > 2·max(x_i, a_ij) − 1` for every row of the
/// column — equivalently, each pair lies closer together than its larger
/// side lies to 1.
///
/// Under this condition every max-t composition (the max-min in particular)
/// falls strictly below the similarity degree on the column.
pub fn check_maxt_gap(x: &FuzzyVector, a: &FuzzyRelation, column: usize) -> Result<bool> {
    check_dims(x, a)?;
    check_column(a, column)?;
    Ok(column_facts(x, a, column).maxt_strict_gap)
}

/// True iff the column has `min(x_i, a_ij) = 0` for every row and no
/// saturated row (`max(x_i, a_ij) < 1` for every row).
///
/// Under this condition every implemented aggregate-of-t-norm composition
/// evaluates to 0 on the column while the similarity degree stays strictly
/// positive, so all of them fall strictly short. The no-saturated-row
/// requirement is deliberately conservative: it keeps the gap witnessed by
/// every row's similarity term, not just one.
pub fn check_universal_gap(x: &FuzzyVector, a: &FuzzyRelation, column: usize) -> Result<bool> {
    check_dims(x, a)?;
    check_column(a, column)?;
    Ok(column_facts(x, a, column).universal_strict_gap)
}

/// Accuracy label for a column or a whole instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Regime {
    /// Every pair saturated: max-min already equals the similarity degree.
    #[serde(rename = "EXACT_MAXMIN")]
    ExactMaxmin,
    /// At least two nonzero minima: the adaptive blend is exact.
    #[serde(rename = "EXACT_ADAPTIVE")]
    ExactAdaptive,
    /// Every implemented (t-norm, t-conorm) composition strictly undershoots.
    #[serde(rename = "GAP_ALL_S_T")]
    GapAllST,
    /// Every max-t composition strictly undershoots.
    #[serde(rename = "GAP_ALL_TNORMS")]
    GapAllTnorms,
    /// None of the clean conditions applies.
    #[serde(rename = "MIXED")]
    Mixed,
}

impl Regime {
    pub fn name(&self) -> &'static str {
        match self {
            Regime::ExactMaxmin => "EXACT_MAXMIN",
            Regime::ExactAdaptive => "EXACT_ADAPTIVE",
            Regime::GapAllST => "GAP_ALL_S_T",
            Regime::GapAllTnorms => "GAP_ALL_TNORMS",
            Regime::Mixed => "MIXED",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Everything the diagnostics know about one column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnDiagnosis {
    pub column: usize,
    /// Rows with `min(x_i, a_ij) > 0`.
    pub nonzero_min_count: usize,
    /// Some row has `max(x_i, a_ij) = 1`.
    pub has_saturated_row: bool,
    /// Every row has `max(x_i, a_ij) = 1`.
    pub all_rows_saturated: bool,
    /// `nonzero_min_count ≥ 2`: the adaptive blend reproduces the similarity
    /// degree on this column.
    pub adaptive_exact: bool,
    /// `nonzero_min_count ≤ 1`: every aggregate-of-t-norm composition is
    /// bounded above by the similarity degree on this column.
    pub similarity_dominates: bool,
    /// Strict max-t gap condition (see [`check_maxt_gap`]).
    pub maxt_strict_gap: bool,
    /// Strict universal gap condition (see [`check_universal_gap`]).
    pub universal_strict_gap: bool,
    pub regime: Regime,
}

/// Column-by-column diagnoses plus a global label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegimeReport {
    pub columns: Vec<ColumnDiagnosis>,
    pub global: Regime,
}

fn column_regime(facts: &ColumnFacts) -> Regime {
    // Exactness labels outrank gap labels; the universal gap outranks the
    // max-t-only gap because its conclusion covers strictly more
    // compositions (all minima being zero forces the max-t gap as well).
    if facts.saturated_rows == facts.rows {
        Regime::ExactMaxmin
    } else if facts.nonzero_min_count >= 2 {
        Regime::ExactAdaptive
    } else if facts.universal_strict_gap {
        Regime::GapAllST
    } else if facts.maxt_strict_gap {
        Regime::GapAllTnorms
    } else {
        Regime::Mixed
    }
}

/// Diagnoses a single column.
pub fn diagnose_column(x: &FuzzyVector, a: &FuzzyRelation, column: usize) -> Result<ColumnDiagnosis> {
    check_dims(x, a)?;
    check_column(a, column)?;
    let facts = column_facts(x, a, column);
    Ok(ColumnDiagnosis {
        column,
        nonzero_min_count: facts.nonzero_min_count,
        has_saturated_row: facts.saturated_rows > 0,
        all_rows_saturated: facts.saturated_rows == facts.rows,
        adaptive_exact: facts.nonzero_min_count >= 2,
        similarity_dominates: facts.nonzero_min_count <= 1,
        maxt_strict_gap: facts.maxt_strict_gap,
        universal_strict_gap: facts.universal_strict_gap,
        regime: column_regime(&facts),
    })
}

/// Diagnoses every column and derives the global label.
///
/// The global label applies the same precedence to conditions quantified
/// over all columns: `EXACT_MAXMIN` when every pair of the instance is
/// saturated; else `EXACT_ADAPTIVE` when every column has two nonzero
/// minima; else `GAP_ALL_S_T` when every column meets the universal gap
/// condition; else `GAP_ALL_TNORMS` when every column meets the max-t gap
/// condition; else `MIXED`.
pub fn classify_regime(x: &FuzzyVector, a: &FuzzyRelation) -> Result<RegimeReport> {
    check_dims(x, a)?;
    let columns: Vec<ColumnDiagnosis> = (0..a.cols())
        .map(|j| diagnose_column(x, a, j))
        .collect::<Result<_>>()?;
    let global = if columns.iter().all(|c| c.all_rows_saturated) {
        Regime::ExactMaxmin
    } else if columns.iter().all(|c| c.adaptive_exact) {
        Regime::ExactAdaptive
    } else if columns.iter().all(|c| c.universal_strict_gap) {
        Regime::GapAllST
    } else if columns.iter().all(|c| c.maxt_strict_gap) {
        Regime::GapAllTnorms
    } else {
        Regime::Mixed
    };
    Ok(RegimeReport { columns, global })
}
