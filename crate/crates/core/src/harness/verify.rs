//! Column-level verifiers for the inequality and equality claims, with
//! replayable check identities.
//!
//! Every check is named by a [`CheckId`] that can recompute both sides of
//! its comparison from a serialized instance, so any recorded failure can be
//! replayed bit for bit.

use serde::{Deserialize, Serialize};

use crate::algebra::{TConormKind, TNormKind};
use crate::composition::{
    check_dims, compose_adaptive, compose_max_t, compose_s_t, compose_similarity, FuzzyRelation,
    FuzzyVector,
};
use crate::diagnostics::diagnose_column;
use crate::error::Result;

use super::generators::ProfileKind;

/// The t-conorm sweep used by the dominance and strict-gap verifiers:
/// plain max, drastic sum, and the convex blend at λ ∈ {0, ½, 1}.
pub fn sconorm_sweep() -> Vec<TConormKind> {
    vec![
        TConormKind::Max,
        TConormKind::DrasticSum,
        TConormKind::convex(0.0).expect("0 is a valid weight"),
        TConormKind::convex(0.5).expect("0.5 is a valid weight"),
        TConormKind::convex(1.0).expect("1 is a valid weight"),
    ]
}

/// Identifies one verifiable comparison on a column of an instance.
///
/// `sides` recomputes the two compared quantities from scratch;
/// `satisfied_by` states the relation they must obey. Both are pure, so a
/// recorded violation replays to the identical floating-point values.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum CheckId {
    /// max-t composition ≤ max-min composition.
    TnormBelowMaxMin { tnorm: TNormKind },
    /// max-min composition ≤ similarity composition.
    MaxMinBelowSimilarity,
    /// max-min equals similarity, bit for bit (saturated instances).
    SaturatedEquality,
    /// max-min strictly below similarity (no saturated pair anywhere).
    UnsaturatedStrictGap,
    /// similarity ≤ the drastic-sum aggregate of the column minima.
    SimilarityBelowDrasticAggregate,
    /// |adaptive − similarity| within tolerance.
    AdaptiveMatchesSimilarity { tolerance: f64 },
    /// S-T composition ≤ similarity.
    CompositionBelowSimilarity {
        tnorm: TNormKind,
        sconorm: TConormKind,
    },
    /// max-t composition strictly below similarity.
    MaxTStrictGap { tnorm: TNormKind },
    /// S-T composition strictly below similarity.
    CompositionStrictGap {
        tnorm: TNormKind,
        sconorm: TConormKind,
    },
    /// A generated instance satisfies its profile's condition
    /// (sides are 1 for "condition holds" vs the constant 1).
    GeneratorSound { profile: ProfileKind },
}

impl CheckId {
    /// Recomputes the two compared values for `column` of `(x, a)`.
    pub fn sides(&self, x: &FuzzyVector, a: &FuzzyRelation, column: usize) -> Result<(f64, f64)> {
        let value = |b: &FuzzyVector| b.get(column).get();
        match self {
            CheckId::TnormBelowMaxMin { tnorm } => Ok((
                value(&compose_max_t(x, a, *tnorm)?),
                value(&compose_max_t(x, a, TNormKind::Min)?),
            )),
            CheckId::MaxMinBelowSimilarity
            | CheckId::SaturatedEquality
            | CheckId::UnsaturatedStrictGap => Ok((
                value(&compose_max_t(x, a, TNormKind::Min)?),
                value(&compose_similarity(x, a)?),
            )),
            CheckId::SimilarityBelowDrasticAggregate => Ok((
                value(&compose_similarity(x, a)?),
                value(&compose_s_t(
                    x,
                    a,
                    TNormKind::Min,
                    TConormKind::DrasticSum,
                )?),
            )),
            CheckId::AdaptiveMatchesSimilarity { .. } => Ok((
                value(&compose_adaptive(x, a)?.output),
                value(&compose_similarity(x, a)?),
            )),
            CheckId::CompositionBelowSimilarity { tnorm, sconorm }
            | CheckId::CompositionStrictGap { tnorm, sconorm } => Ok((
                value(&compose_s_t(x, a, *tnorm, *sconorm)?),
                value(&compose_similarity(x, a)?),
            )),
            CheckId::MaxTStrictGap { tnorm } => Ok((
                value(&compose_max_t(x, a, *tnorm)?),
                value(&compose_similarity(x, a)?),
            )),
            CheckId::GeneratorSound { profile } => Ok((
                if profile.condition_holds(x, a)? { 1.0 } else { 0.0 },
                1.0,
            )),
        }
    }

    /// The relation the two sides must satisfy.
    pub fn satisfied_by(&self, lhs: f64, rhs: f64) -> bool {
        match self {
            CheckId::TnormBelowMaxMin { .. }
            | CheckId::MaxMinBelowSimilarity
            | CheckId::SimilarityBelowDrasticAggregate
            | CheckId::CompositionBelowSimilarity { .. } => lhs <= rhs,
            CheckId::SaturatedEquality | CheckId::GeneratorSound { .. } => lhs == rhs,
            CheckId::UnsaturatedStrictGap
            | CheckId::MaxTStrictGap { .. }
            | CheckId::CompositionStrictGap { .. } => lhs < rhs,
            CheckId::AdaptiveMatchesSimilarity { tolerance } => (lhs - rhs).abs() <= *tolerance,
        }
    }

    /// Convenience: recompute the sides and evaluate the relation.
    pub fn verify(&self, x: &FuzzyVector, a: &FuzzyRelation, column: usize) -> Result<bool> {
        let (lhs, rhs) = self.sides(x, a, column)?;
        Ok(self.satisfied_by(lhs, rhs))
    }
}

/// Result of one check on one column.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ColumnOutcome {
    Holds,
    Violated { check: CheckId, lhs: f64, rhs: f64 },
    /// The column does not satisfy the check's precondition.
    Skipped,
}

impl ColumnOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, ColumnOutcome::Holds)
    }

    pub fn skipped(&self) -> bool {
        matches!(self, ColumnOutcome::Skipped)
    }
}

fn first_violation(
    outcome: &mut ColumnOutcome,
    check: CheckId,
    lhs: f64,
    rhs: f64,
) {
    if outcome.holds() && !check.satisfied_by(lhs, rhs) {
        *outcome = ColumnOutcome::Violated { check, lhs, rhs };
    }
}

/// Checks, per column, the two-link chain
/// `max-t ≤ max-min ≤ similarity` for the given t-norm.
pub fn verify_inequality_chain(
    x: &FuzzyVector,
    a: &FuzzyRelation,
    tnorm: TNormKind,
) -> Result<Vec<ColumnOutcome>> {
    check_dims(x, a)?;
    let b_t = compose_max_t(x, a, tnorm)?;
    let b_min = compose_max_t(x, a, TNormKind::Min)?;
    let sim = compose_similarity(x, a)?;
    Ok((0..a.cols())
        .map(|j| {
            let mut outcome = ColumnOutcome::Holds;
            first_violation(
                &mut outcome,
                CheckId::TnormBelowMaxMin { tnorm },
                b_t.get(j).get(),
                b_min.get(j).get(),
            );
            first_violation(
                &mut outcome,
                CheckId::MaxMinBelowSimilarity,
                b_min.get(j).get(),
                sim.get(j).get(),
            );
            outcome
        })
        .collect())
}

/// Checks, per qualifying column (at least two nonzero minima), the sandwich
/// `max-min ≤ similarity ≤ drastic-sum aggregate`; other columns are skipped.
pub fn verify_sandwich_bound(x: &FuzzyVector, a: &FuzzyRelation) -> Result<Vec<ColumnOutcome>> {
    check_dims(x, a)?;
    let b_min = compose_max_t(x, a, TNormKind::Min)?;
    let sim = compose_similarity(x, a)?;
    let upper = compose_s_t(x, a, TNormKind::Min, TConormKind::DrasticSum)?;
    (0..a.cols())
        .map(|j| {
            if !diagnose_column(x, a, j)?.adaptive_exact {
                return Ok(ColumnOutcome::Skipped);
            }
            let mut outcome = ColumnOutcome::Holds;
            first_violation(
                &mut outcome,
                CheckId::MaxMinBelowSimilarity,
                b_min.get(j).get(),
                sim.get(j).get(),
            );
            first_violation(
                &mut outcome,
                CheckId::SimilarityBelowDrasticAggregate,
                sim.get(j).get(),
                upper.get(j).get(),
            );
            Ok(outcome)
        })
        .collect()
}

/// Checks, per qualifying column (at least two nonzero minima), that the
/// adaptive blend matches the similarity composition within `tolerance`.
pub fn verify_adaptive_exactness(
    x: &FuzzyVector,
    a: &FuzzyRelation,
    tolerance: f64,
) -> Result<Vec<ColumnOutcome>> {
    check_dims(x, a)?;
    let adaptive = compose_adaptive(x, a)?;
    let sim = compose_similarity(x, a)?;
    let check = CheckId::AdaptiveMatchesSimilarity { tolerance };
    (0..a.cols())
        .map(|j| {
            if !diagnose_column(x, a, j)?.adaptive_exact {
                return Ok(ColumnOutcome::Skipped);
            }
            let mut outcome = ColumnOutcome::Holds;
            first_violation(
                &mut outcome,
                check,
                adaptive.output.get(j).get(),
                sim.get(j).get(),
            );
            Ok(outcome)
        })
        .collect()
}

/// Checks, per qualifying column (at most one nonzero minimum), that every
/// implemented (t-norm, t-conorm) composition stays at or below the
/// similarity composition.
pub fn verify_similarity_dominance(
    x: &FuzzyVector,
    a: &FuzzyRelation,
) -> Result<Vec<ColumnOutcome>> {
    check_dims(x, a)?;
    let sim = compose_similarity(x, a)?;
    let mut outcomes: Vec<ColumnOutcome> = (0..a.cols())
        .map(|j| {
            Ok(if diagnose_column(x, a, j)?.similarity_dominates {
                ColumnOutcome::Holds
            } else {
                ColumnOutcome::Skipped
            })
        })
        .collect::<Result<_>>()?;
    for tnorm in TNormKind::ALL {
        for sconorm in sconorm_sweep() {
            let b = compose_s_t(x, a, tnorm, sconorm)?;
            for (j, outcome) in outcomes.iter_mut().enumerate() {
                if outcome.skipped() {
                    continue;
                }
                first_violation(
                    outcome,
                    CheckId::CompositionBelowSimilarity { tnorm, sconorm },
                    b.get(j).get(),
                    sim.get(j).get(),
                );
            }
        }
    }
    Ok(outcomes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::FuzzyRelation;

    fn demo_relation() -> FuzzyRelation {
        FuzzyRelation::from_degrees(&[
            vec![0.0, 0.3, 0.98, 0.7],
            vec![0.001, 0.01, 0.1, 0.99],
            vec![0.004, 0.042, 0.3, 1.0],
        ])
        .unwrap()
    }

    fn probe_one() -> FuzzyVector {
        FuzzyVector::from_degrees(&[0.004, 0.002, 0.003]).unwrap()
    }

    #[test]
    fn chain_holds_on_the_demo_instance() {
        for t in TNormKind::ALL {
            let outcomes = verify_inequality_chain(&probe_one(), &demo_relation(), t).unwrap();
            assert!(outcomes.iter().all(ColumnOutcome::holds), "{t}");
        }
    }

    #[test]
    fn chain_holds_with_an_exact_match_row() {
        // Column j of A matches x at row j, driving similarity to 1 there.
        let x = FuzzyVector::from_degrees(&[0.25, 0.5, 0.75]).unwrap();
        let a = FuzzyRelation::from_degrees(&[
            vec![0.25, 0.1, 0.9],
            vec![0.3, 0.5, 0.2],
            vec![0.8, 0.6, 0.75],
        ])
        .unwrap();
        for t in TNormKind::ALL {
            let outcomes = verify_inequality_chain(&x, &a, t).unwrap();
            assert!(outcomes.iter().all(ColumnOutcome::holds));
        }
    }

    #[test]
    fn sandwich_holds_on_the_demo_instance() {
        let outcomes = verify_sandwich_bound(&probe_one(), &demo_relation()).unwrap();
        assert_eq!(outcomes.len(), 4);
        assert!(outcomes.iter().all(ColumnOutcome::holds));
        // The upper bound is the saturated drastic-sum aggregate.
        let upper = compose_s_t(
            &probe_one(),
            &demo_relation(),
            TNormKind::Min,
            TConormKind::DrasticSum,
        )
        .unwrap();
        assert!(upper.entries().iter().all(|v| v.get() == 1.0));
    }

    #[test]
    fn sandwich_skips_columns_without_two_nonzero_minima() {
        let x = FuzzyVector::from_degrees(&[0.5, 0.6]).unwrap();
        let a = FuzzyRelation::from_degrees(&[vec![0.4, 0.0], vec![0.7, 0.2]]).unwrap();
        let outcomes = verify_sandwich_bound(&x, &a).unwrap();
        assert!(outcomes[0].holds());
        assert!(outcomes[1].skipped());
    }

    #[test]
    fn adaptive_exactness_holds_on_the_demo_instance() {
        let outcomes = verify_adaptive_exactness(&probe_one(), &demo_relation(), 1e-12).unwrap();
        assert!(outcomes.iter().all(ColumnOutcome::holds));
    }

    #[test]
    fn dominance_holds_on_single_minimum_columns() {
        let x = FuzzyVector::from_degrees(&[0.0, 0.0, 0.5]).unwrap();
        let a = FuzzyRelation::from_degrees(&[vec![0.9], vec![0.0], vec![0.4]]).unwrap();
        let outcomes = verify_similarity_dominance(&x, &a).unwrap();
        assert!(outcomes.iter().all(ColumnOutcome::holds));
    }

    #[test]
    fn dominance_is_tight_at_a_saturated_match() {
        // One saturated pair with x_i = a_ij = 1: the aggregate reaches the
        // similarity degree exactly, and the non-strict bound still holds.
        let x = FuzzyVector::from_degrees(&[1.0, 0.0]).unwrap();
        let a = FuzzyRelation::from_degrees(&[vec![1.0], vec![0.3]]).unwrap();
        let outcomes = verify_similarity_dominance(&x, &a).unwrap();
        assert!(outcomes.iter().all(ColumnOutcome::holds));
        let (lhs, rhs) = CheckId::CompositionBelowSimilarity {
            tnorm: TNormKind::Min,
            sconorm: TConormKind::Max,
        }
        .sides(&x, &a, 0)
        .unwrap();
        assert_eq!((lhs, rhs), (1.0, 1.0));
    }

    #[test]
    fn dominance_skips_dense_columns() {
        let x = FuzzyVector::from_degrees(&[0.5, 0.6]).unwrap();
        let a = FuzzyRelation::from_degrees(&[vec![0.4], vec![0.7]]).unwrap();
        let outcomes = verify_similarity_dominance(&x, &a).unwrap();
        assert!(outcomes[0].skipped());
    }

    #[test]
    fn strict_gap_check_fails_on_a_saturated_instance() {
        // Saturation forces equality, so the strict-gap check must report a
        // violation whose sides replay bit for bit.
        let x = FuzzyVector::from_degrees(&[1.0, 1.0]).unwrap();
        let a = FuzzyRelation::from_degrees(&[vec![0.3], vec![0.6]]).unwrap();
        let check = CheckId::UnsaturatedStrictGap;
        let (lhs, rhs) = check.sides(&x, &a, 0).unwrap();
        assert_eq!(lhs, rhs);
        assert!(!check.satisfied_by(lhs, rhs));
        let replay = check.sides(&x, &a, 0).unwrap();
        assert_eq!(lhs.to_bits(), replay.0.to_bits());
        assert_eq!(rhs.to_bits(), replay.1.to_bits());
    }

    #[test]
    fn check_sides_match_the_verifier_values() {
        let x = probe_one();
        let a = demo_relation();
        for t in TNormKind::ALL {
            let b_t = compose_max_t(&x, &a, t).unwrap();
            let b_min = compose_max_t(&x, &a, TNormKind::Min).unwrap();
            for j in 0..a.cols() {
                let (lhs, rhs) = CheckId::TnormBelowMaxMin { tnorm: t }.sides(&x, &a, j).unwrap();
                assert_eq!(lhs.to_bits(), b_t.get(j).get().to_bits());
                assert_eq!(rhs.to_bits(), b_min.get(j).get().to_bits());
            }
        }
        let (lhs, rhs) = CheckId::GeneratorSound {
            profile: ProfileKind::Uniform,
        }
        .sides(&x, &a, 0)
        .unwrap();
        assert_eq!((lhs, rhs), (1.0, 1.0));
    }

    #[test]
    fn check_ids_round_trip_through_json() {
        let checks = vec![
            CheckId::TnormBelowMaxMin {
                tnorm: TNormKind::Lukasiewicz,
            },
            CheckId::AdaptiveMatchesSimilarity { tolerance: 1e-12 },
            CheckId::CompositionStrictGap {
                tnorm: TNormKind::Product,
                sconorm: TConormKind::convex(0.5).unwrap(),
            },
            CheckId::GeneratorSound {
                profile: ProfileKind::ZeroMin,
            },
        ];
        for check in checks {
            let json = serde_json::to_string(&check).unwrap();
            let back: CheckId = serde_json::from_str(&json).unwrap();
            assert_eq!(check, back);
        }
    }
}
