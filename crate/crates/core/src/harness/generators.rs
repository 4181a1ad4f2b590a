//! Seeded instance generators targeting the preconditions of the
//! verification properties.
//!
//! Every profile guarantees a structural condition by construction, and
//! [`ProfileKind::condition_holds`] re-checks that condition through the
//! diagnostics module, so generator soundness is itself a testable property.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::composition::{FuzzyRelation, FuzzyVector};
use crate::diagnostics::{all_pairs_saturated, check_maxt_gap, check_universal_gap, diagnose_column};
use crate::error::{Error, Result};

/// Families of random instances, each pinned to a structural condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProfileKind {
    /// Entries drawn uniformly from [0, 1); no structural condition.
    Uniform,
    /// Every pair `(x_i, a_ij)` saturated: per row, either `x_i = 1` or the
    /// whole row of `A` is ones. Max-min equals similarity here.
    Saturated,
    /// Every entry in [0.01, 1), so each column has at least two nonzero
    /// minima (requires at least two rows).
    Dense,
    /// `x` positive, but each column of `A` is zero except one row, leaving
    /// at most one nonzero minimum per column.
    Sparse,
    /// Every entry below 0.5, which forces the strict max-t gap condition
    /// on every column.
    SmallValues,
    /// A saturated draw rescaled by 0.9: no pair is saturated, with margin
    /// at least 0.1, so max-min falls strictly below similarity everywhere.
    Unsaturated,
    /// Rows with a positive `x` entry get an all-zero row of `A`, and all
    /// values stay below 0.95: every column meets the universal strict-gap
    /// condition.
    ZeroMin,
}

impl ProfileKind {
    pub const ALL: [ProfileKind; 7] = [
        ProfileKind::Uniform,
        ProfileKind::Saturated,
        ProfileKind::Dense,
        ProfileKind::Sparse,
        ProfileKind::SmallValues,
        ProfileKind::Unsaturated,
        ProfileKind::ZeroMin,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ProfileKind::Uniform => "uniform",
            ProfileKind::Saturated => "saturated",
            ProfileKind::Dense => "dense",
            ProfileKind::Sparse => "sparse",
            ProfileKind::SmallValues => "small-values",
            ProfileKind::Unsaturated => "unsaturated",
            ProfileKind::ZeroMin => "zero-min",
        }
    }

    /// Smallest row count the profile can satisfy.
    pub fn min_rows(&self) -> usize {
        match self {
            ProfileKind::Dense => 2,
            _ => 1,
        }
    }

    /// Re-checks, via the diagnostics module, the structural condition the
    /// profile promises for its instances.
    pub fn condition_holds(&self, x: &FuzzyVector, a: &FuzzyRelation) -> Result<bool> {
        match self {
            ProfileKind::Uniform => Ok(true),
            ProfileKind::Saturated => all_pairs_saturated(x, a),
            ProfileKind::Dense => {
                for j in 0..a.cols() {
                    if !diagnose_column(x, a, j)?.adaptive_exact {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            ProfileKind::Sparse => {
                for j in 0..a.cols() {
                    if !diagnose_column(x, a, j)?.similarity_dominates {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            ProfileKind::SmallValues => {
                let below_half = x.entries().iter().all(|v| v.get() < 0.5)
                    && (0..a.rows())
                        .all(|i| (0..a.cols()).all(|j| a.get(i, j).get() < 0.5));
                if !below_half {
                    return Ok(false);
                }
                for j in 0..a.cols() {
                    if !check_maxt_gap(x, a, j)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            ProfileKind::Unsaturated => {
                for j in 0..a.cols() {
                    if diagnose_column(x, a, j)?.has_saturated_row {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            ProfileKind::ZeroMin => {
                for j in 0..a.cols() {
                    if !check_universal_gap(x, a, j)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }
}

/// A fully specified generation request.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorProfile {
    pub kind: ProfileKind,
    pub rows: usize,
    pub cols: usize,
    pub seed: u64,
}

/// Draws a deterministic instance satisfying the profile's condition.
///
/// The same profile (kind, dimensions, and seed) always yields the same
/// instance, bit for bit.
pub fn sample_instance(profile: &GeneratorProfile) -> Result<(FuzzyVector, FuzzyRelation)> {
    if profile.cols == 0 {
        return Err(Error::EmptyRelation);
    }
    if profile.rows < profile.kind.min_rows() {
        return Err(Error::InfeasibleProfile {
            profile: profile.kind.name().to_string(),
            rows: profile.rows,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(profile.seed);
    let n = profile.rows;
    let m = profile.cols;

    let (x, a): (Vec<f64>, Vec<Vec<f64>>) = match profile.kind {
        ProfileKind::Uniform => draw_plain(&mut rng, n, m, 1.0),
        ProfileKind::SmallValues => draw_plain(&mut rng, n, m, 0.5),
        ProfileKind::Saturated => draw_saturated(&mut rng, n, m),
        ProfileKind::Unsaturated => {
            let (x, a) = draw_saturated(&mut rng, n, m);
            (
                x.into_iter().map(|v| v * 0.9).collect(),
                a.into_iter()
                    .map(|row| row.into_iter().map(|v| v * 0.9).collect())
                    .collect(),
            )
        }
        ProfileKind::Dense => {
            let positive = |rng: &mut ChaCha8Rng| 0.01 + 0.99 * rng.random::<f64>();
            let x = (0..n).map(|_| positive(&mut rng)).collect();
            let a = (0..n)
                .map(|_| (0..m).map(|_| positive(&mut rng)).collect())
                .collect();
            (x, a)
        }
        ProfileKind::Sparse => {
            let x = (0..n).map(|_| 0.01 + 0.99 * rng.random::<f64>()).collect();
            let picks: Vec<usize> = (0..m).map(|_| rng.random_range(0..n)).collect();
            let values: Vec<f64> = (0..m).map(|_| rng.random()).collect();
            let a = (0..n)
                .map(|i| {
                    (0..m)
                        .map(|j| if picks[j] == i { values[j] } else { 0.0 })
                        .collect()
                })
                .collect();
            (x, a)
        }
        ProfileKind::ZeroMin => {
            let keep_x: Vec<bool> = (0..n).map(|_| rng.random()).collect();
            let x = keep_x
                .iter()
                .map(|&keep| {
                    let v = rng.random::<f64>() * 0.95;
                    if keep {
                        v
                    } else {
                        0.0
                    }
                })
                .collect();
            let a = keep_x
                .iter()
                .map(|&keep| {
                    (0..m)
                        .map(|_| {
                            let v = rng.random::<f64>() * 0.95;
                            if keep {
                                0.0
                            } else {
                                v
                            }
                        })
                        .collect()
                })
                .collect();
            (x, a)
        }
    };

    Ok((
        FuzzyVector::from_degrees(&x)?,
        FuzzyRelation::from_degrees(&a)?,
    ))
}

fn draw_plain(rng: &mut ChaCha8Rng, n: usize, m: usize, scale: f64) -> (Vec<f64>, Vec<Vec<f64>>) {
    let x = (0..n).map(|_| rng.random::<f64>() * scale).collect();
    let a = (0..n)
        .map(|_| (0..m).map(|_| rng.random::<f64>() * scale).collect())
        .collect();
    (x, a)
}

fn draw_saturated(rng: &mut ChaCha8Rng, n: usize, m: usize) -> (Vec<f64>, Vec<Vec<f64>>) {
    let mut x = Vec::with_capacity(n);
    let mut a = Vec::with_capacity(n);
    for _ in 0..n {
        if rng.random::<bool>() {
            x.push(1.0);
            a.push((0..m).map(|_| rng.random::<f64>()).collect());
        } else {
            x.push(rng.random::<f64>());
            a.push(vec![1.0; m]);
        }
    }
    (x, a)
}
