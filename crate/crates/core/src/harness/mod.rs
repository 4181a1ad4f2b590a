//! Seeded property suite: randomized instance generators, replayable
//! column-level checks, and a deterministic runner.
//!
//! [`run_suite`] draws instances from the profile matching each property's
//! precondition, evaluates the property's checks on every column, and
//! aggregates the outcomes into a [`SuiteReport`]. Trial seeds derive only
//! from the master seed, the property's position, and the trial number, so
//! a report is a pure function of its [`SuiteConfig`] and any recorded
//! counterexample replays bit for bit.

pub mod generators;
pub mod verify;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{
    check_axioms, Axiom, AxiomCheckConfig, AxiomViolation, OperatorSpec, TConormKind, TNormKind,
};
use crate::composition::{compose_max_t, compose_s_t, compose_similarity, FuzzyRelation, FuzzyVector};
use crate::diagnostics::{check_maxt_gap, check_universal_gap};
use crate::error::{Error, Result};

pub use generators::{sample_instance, GeneratorProfile, ProfileKind};
pub use verify::{
    sconorm_sweep, verify_adaptive_exactness, verify_inequality_chain, verify_sandwich_bound,
    verify_similarity_dominance, CheckId, ColumnOutcome,
};

/// Master seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x5EED_0001;

/// Knobs for one suite run. The report is a pure function of this value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    /// Randomized instances per property.
    pub trials: u32,
    /// Master seed; every trial seed derives from it.
    pub seed: u64,
    /// Largest row count drawn for an instance. Must be at least 2 so the
    /// dense profile stays feasible.
    pub max_rows: usize,
    /// Largest column count drawn for an instance. Must be at least 1.
    pub max_cols: usize,
    /// Random triples per operator in the axiom probes. Must be at least 1.
    pub axiom_samples: u32,
    /// Slack allowed between the adaptive blend and the similarity
    /// composition; the agreement is exact up to rounding, so a few ulps
    /// suffice.
    pub adaptive_tolerance: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            trials: 10_000,
            seed: DEFAULT_SEED,
            max_rows: 6,
            max_cols: 6,
            axiom_samples: 2_000,
            adaptive_tolerance: 1e-12,
        }
    }
}

impl SuiteConfig {
    fn validate(&self) -> Result<()> {
        if self.max_rows < 2 {
            return Err(Error::InvalidSuiteConfig("max_rows must be at least 2"));
        }
        if self.max_cols == 0 {
            return Err(Error::InvalidSuiteConfig("max_cols must be at least 1"));
        }
        if self.axiom_samples == 0 {
            return Err(Error::InvalidSuiteConfig("axiom_samples must be at least 1"));
        }
        if self.adaptive_tolerance.is_nan() || self.adaptive_tolerance < 0.0 {
            return Err(Error::InvalidSuiteConfig(
                "adaptive_tolerance must be a nonnegative number",
            ));
        }
        Ok(())
    }
}

/// A replayable witness for a failed check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Counterexample {
    /// A column check failed on a generated instance. Rebuilding the vector
    /// and the matrix from the recorded degrees and replaying `check`
    /// reproduces `lhs` and `rhs` bit for bit.
    Instance {
        trial: u32,
        profile: ProfileKind,
        x: Vec<f64>,
        matrix: Vec<Vec<f64>>,
        column: usize,
        check: CheckId,
        lhs: f64,
        rhs: f64,
    },
    /// An operator law failed; the violation replays through the axiom
    /// checker's witness machinery.
    Axiom {
        operator: String,
        violation: AxiomViolation,
    },
}

/// Aggregated outcome of one property.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PropertyReport {
    pub name: String,
    /// Informational properties document expected violations (a deliberate
    /// law break) and never fail the suite.
    pub informational: bool,
    pub trials: u32,
    /// Number of violated checks across all trials and columns.
    pub failures: u64,
    /// Number of columns whose precondition did not hold, so no check ran.
    pub skipped: u64,
    /// First violation encountered, if any.
    pub counterexample: Option<Counterexample>,
    /// Wall-clock time; excluded from serialized reports so equal
    /// configurations produce byte-identical output.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.informational || self.failures == 0
    }
}

/// Outcome of a whole suite run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub properties: Vec<PropertyReport>,
    /// True when every non-informational property recorded zero failures.
    pub passed: bool,
}

impl SuiteReport {
    /// Names of the non-informational properties that recorded failures.
    pub fn failing_properties(&self) -> Vec<&str> {
        self.properties
            .iter()
            .filter(|p| !p.passed())
            .map(|p| p.name.as_str())
            .collect()
    }

    /// Total wall-clock time across all properties.
    pub fn elapsed(&self) -> Duration {
        self.properties.iter().map(|p| p.elapsed).sum()
    }
}

/// Derives the per-trial generator stream from the master seed, the
/// property's position in the suite, and the trial number — nothing else.
fn trial_rng(master: u64, property_index: u64, trial: u32) -> ChaCha8Rng {
    let mut seed = [0u8; 32];
    seed[0..8].copy_from_slice(&master.to_le_bytes());
    seed[8..16].copy_from_slice(&property_index.to_le_bytes());
    seed[16..24].copy_from_slice(&u64::from(trial).to_le_bytes());
    ChaCha8Rng::from_seed(seed)
}

fn judge(check: CheckId, lhs: f64, rhs: f64) -> ColumnOutcome {
    if check.satisfied_by(lhs, rhs) {
        ColumnOutcome::Holds
    } else {
        ColumnOutcome::Violated { check, lhs, rhs }
    }
}

fn indexed(outcomes: Vec<ColumnOutcome>) -> Vec<(usize, ColumnOutcome)> {
    outcomes.into_iter().enumerate().collect()
}

/// Runs one instance-backed property: `trials` seeded draws from `kind`,
/// with `checks` producing `(column, outcome)` pairs per instance.
fn run_instance_property<F>(
    config: &SuiteConfig,
    property_index: u64,
    name: &str,
    kind: ProfileKind,
    checks: F,
) -> Result<PropertyReport>
where
    F: Fn(&FuzzyVector, &FuzzyRelation) -> Result<Vec<(usize, ColumnOutcome)>>,
{
    let start = Instant::now();
    let mut failures = 0u64;
    let mut skipped = 0u64;
    let mut counterexample = None;
    for trial in 0..config.trials {
        let mut rng = trial_rng(config.seed, property_index, trial);
        let rows = rng.random_range(kind.min_rows()..=config.max_rows);
        let cols = rng.random_range(1..=config.max_cols);
        let profile = GeneratorProfile {
            kind,
            rows,
            cols,
            seed: rng.random(),
        };
        let (x, a) = sample_instance(&profile)?;
        for (column, outcome) in checks(&x, &a)? {
            match outcome {
                ColumnOutcome::Holds => {}
                ColumnOutcome::Skipped => skipped += 1,
                ColumnOutcome::Violated { check, lhs, rhs } => {
                    failures += 1;
                    if counterexample.is_none() {
                        counterexample = Some(Counterexample::Instance {
                            trial,
                            profile: kind,
                            x: x.degrees(),
                            matrix: a.to_degrees(),
                            column,
                            check,
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
    }
    Ok(PropertyReport {
        name: name.to_string(),
        informational: false,
        trials: config.trials,
        failures,
        skipped,
        counterexample,
        elapsed: start.elapsed(),
    })
}

/// Runs the generator-soundness property: every profile kind must produce
/// instances satisfying its own structural condition.
fn run_generator_soundness(config: &SuiteConfig, property_index: u64) -> Result<PropertyReport> {
    let start = Instant::now();
    let mut failures = 0u64;
    let mut counterexample = None;
    for trial in 0..config.trials {
        let mut rng = trial_rng(config.seed, property_index, trial);
        for kind in ProfileKind::ALL {
            let rows = rng.random_range(kind.min_rows()..=config.max_rows);
            let cols = rng.random_range(1..=config.max_cols);
            let profile = GeneratorProfile {
                kind,
                rows,
                cols,
                seed: rng.random(),
            };
            let (x, a) = sample_instance(&profile)?;
            let check = CheckId::GeneratorSound { profile: kind };
            let (lhs, rhs) = check.sides(&x, &a, 0)?;
            if !check.satisfied_by(lhs, rhs) {
                failures += 1;
                if counterexample.is_none() {
                    counterexample = Some(Counterexample::Instance {
                        trial,
                        profile: kind,
                        x: x.degrees(),
                        matrix: a.to_degrees(),
                        column: 0,
                        check,
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    Ok(PropertyReport {
        name: "generator-soundness".to_string(),
        informational: false,
        trials: config.trials,
        failures,
        skipped: 0,
        counterexample,
        elapsed: start.elapsed(),
    })
}

#[derive(Clone, Copy, PartialEq)]
enum AxiomScope {
    All,
    ExceptAssociativity,
    AssociativityOnly,
}

/// Runs the axiom checker for one operator and scores the selected laws.
fn run_axiom_property(
    config: &SuiteConfig,
    name: &str,
    spec: OperatorSpec,
    scope: AxiomScope,
    informational: bool,
) -> Result<PropertyReport> {
    let start = Instant::now();
    let axiom_config = AxiomCheckConfig {
        samples: config.axiom_samples,
        seed: config.seed,
        ..AxiomCheckConfig::default()
    };
    let report = check_axioms(spec, &axiom_config)?;
    let selected: Vec<&AxiomViolation> = report
        .counterexamples
        .iter()
        .filter(|v| match scope {
            AxiomScope::All => true,
            AxiomScope::ExceptAssociativity => v.axiom != Axiom::Associativity,
            AxiomScope::AssociativityOnly => v.axiom == Axiom::Associativity,
        })
        .collect();
    Ok(PropertyReport {
        name: name.to_string(),
        informational,
        trials: config.axiom_samples,
        failures: selected.len() as u64,
        skipped: 0,
        counterexample: selected.first().map(|&violation| Counterexample::Axiom {
            operator: report.operator.clone(),
            violation: violation.clone(),
        }),
        elapsed: start.elapsed(),
    })
}

/// Runs the full property suite for `config`.
///
/// Instance properties pair each claim with the generator profile matching
/// its precondition; axiom properties probe every operator's laws, and the
/// final informational probe documents that the convex blend deliberately
/// gives up associativity. With `trials == 0` the report is empty and
/// passes vacuously.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    config.validate()?;
    let mut properties = Vec::new();
    if config.trials > 0 {
        properties.push(run_instance_property(
            config,
            0,
            "composition-chain",
            ProfileKind::Uniform,
            |x, a| {
                let b_min = compose_max_t(x, a, TNormKind::Min)?;
                let sim = compose_similarity(x, a)?;
                let mut out = Vec::new();
                for tnorm in TNormKind::ALL {
                    let b_t = compose_max_t(x, a, tnorm)?;
                    for j in 0..a.cols() {
                        out.push((
                            j,
                            judge(
                                CheckId::TnormBelowMaxMin { tnorm },
                                b_t.get(j).get(),
                                b_min.get(j).get(),
                            ),
                        ));
                    }
                }
                for j in 0..a.cols() {
                    out.push((
                        j,
                        judge(
                            CheckId::MaxMinBelowSimilarity,
                            b_min.get(j).get(),
                            sim.get(j).get(),
                        ),
                    ));
                }
                Ok(out)
            },
        )?);
        properties.push(run_instance_property(
            config,
            1,
            "saturated-equality",
            ProfileKind::Saturated,
            |x, a| {
                let b_min = compose_max_t(x, a, TNormKind::Min)?;
                let sim = compose_similarity(x, a)?;
                Ok((0..a.cols())
                    .map(|j| {
                        (
                            j,
                            judge(
                                CheckId::SaturatedEquality,
                                b_min.get(j).get(),
                                sim.get(j).get(),
                            ),
                        )
                    })
                    .collect())
            },
        )?);
        properties.push(run_instance_property(
            config,
            2,
            "unsaturated-strict-inequality",
            ProfileKind::Unsaturated,
            |x, a| {
                let b_min = compose_max_t(x, a, TNormKind::Min)?;
                let sim = compose_similarity(x, a)?;
                Ok((0..a.cols())
                    .map(|j| {
                        (
                            j,
                            judge(
                                CheckId::UnsaturatedStrictGap,
                                b_min.get(j).get(),
                                sim.get(j).get(),
                            ),
                        )
                    })
                    .collect())
            },
        )?);
        properties.push(run_instance_property(
            config,
            3,
            "sandwich-bound",
            ProfileKind::Dense,
            |x, a| Ok(indexed(verify_sandwich_bound(x, a)?)),
        )?);
        properties.push(run_instance_property(
            config,
            4,
            "adaptive-exactness",
            ProfileKind::Dense,
            |x, a| {
                Ok(indexed(verify_adaptive_exactness(
                    x,
                    a,
                    config.adaptive_tolerance,
                )?))
            },
        )?);
        properties.push(run_instance_property(
            config,
            5,
            "similarity-dominance",
            ProfileKind::Sparse,
            |x, a| Ok(indexed(verify_similarity_dominance(x, a)?)),
        )?);
        properties.push(run_instance_property(
            config,
            6,
            "max-t-strict-gap",
            ProfileKind::SmallValues,
            |x, a| {
                let sim = compose_similarity(x, a)?;
                let mut gated = Vec::with_capacity(a.cols());
                let mut out = Vec::new();
                for j in 0..a.cols() {
                    let gate = check_maxt_gap(x, a, j)?;
                    if !gate {
                        out.push((j, ColumnOutcome::Skipped));
                    }
                    gated.push(gate);
                }
                for tnorm in TNormKind::ALL {
                    let b_t = compose_max_t(x, a, tnorm)?;
                    for (j, &gate) in gated.iter().enumerate() {
                        if gate {
                            out.push((
                                j,
                                judge(
                                    CheckId::MaxTStrictGap { tnorm },
                                    b_t.get(j).get(),
                                    sim.get(j).get(),
                                ),
                            ));
                        }
                    }
                }
                Ok(out)
            },
        )?);
        properties.push(run_instance_property(
            config,
            7,
            "universal-strict-gap",
            ProfileKind::ZeroMin,
            |x, a| {
                let sim = compose_similarity(x, a)?;
                let mut gated = Vec::with_capacity(a.cols());
                let mut out = Vec::new();
                for j in 0..a.cols() {
                    let gate = check_universal_gap(x, a, j)?;
                    if !gate {
                        out.push((j, ColumnOutcome::Skipped));
                    }
                    gated.push(gate);
                }
                for tnorm in TNormKind::ALL {
                    for sconorm in sconorm_sweep() {
                        let b = compose_s_t(x, a, tnorm, sconorm)?;
                        for (j, &gate) in gated.iter().enumerate() {
                            if gate {
                                out.push((
                                    j,
                                    judge(
                                        CheckId::CompositionStrictGap { tnorm, sconorm },
                                        b.get(j).get(),
                                        sim.get(j).get(),
                                    ),
                                ));
                            }
                        }
                    }
                }
                Ok(out)
            },
        )?);
        properties.push(run_generator_soundness(config, 8)?);

        for spec in OperatorSpec::all() {
            let name = format!("axioms-{}", spec.name());
            properties.push(run_axiom_property(
                config,
                &name,
                spec,
                AxiomScope::All,
                false,
            )?);
        }
        let convex = OperatorSpec::TConorm(TConormKind::convex(0.5)?);
        properties.push(run_axiom_property(
            config,
            "axioms-convex",
            convex,
            AxiomScope::ExceptAssociativity,
            false,
        )?);
        properties.push(run_axiom_property(
            config,
            "convex-associativity-probe",
            convex,
            AxiomScope::AssociativityOnly,
            true,
        )?);
    }
    let passed = properties.iter().all(PropertyReport::passed);
    Ok(SuiteReport {
        config: config.clone(),
        properties,
        passed,
    })
}
