//! Fuzzy relational compositions on the unit interval.
//!
//! Given a membership vector `x` over rows and a relation matrix `A` over
//! rows × columns, the crate evaluates the direct composition
//! `b_j = S_i t(x_i, a_ij)` for pluggable t-norms `t` and aggregating
//! t-conorms `S`, alongside a similarity reference `b_j = max_i (1 − |x_i − a_ij|)`
//! and an adaptive blend that reproduces the reference exactly where its
//! preconditions hold. Diagnostics classify, per column, which compositions
//! can agree with the reference and which provably cannot, and a seeded
//! property harness re-verifies the underlying inequalities on randomized
//! instances.

pub mod algebra;
pub mod composition;
pub mod diagnostics;
pub mod error;
pub mod harness;
pub mod io;

pub use algebra::{
    axiom_sides, check_axioms, unit, units, Axiom, AxiomCheckConfig, AxiomReport, AxiomViolation,
    OperatorFamily, OperatorSpec, TConormKind, TNormKind, UnitValue,
};
pub use composition::{
    compare_to_oracle, compose_adaptive, compose_max_t, compose_s_t, compose_similarity,
    lambda_profile, rank_alternatives, AdaptiveComposition, ComparisonReport, FuzzyRelation,
    FuzzyVector, LambdaColumn, LambdaProfile, Ranking,
};
pub use diagnostics::{
    all_pairs_saturated, check_maxt_gap, check_universal_gap, classify_regime, diagnose_column,
    saturated_columns, ColumnDiagnosis, Regime, RegimeReport,
};
pub use error::{Error, Result};
pub use harness::{
    run_suite, sample_instance, sconorm_sweep, verify_adaptive_exactness, verify_inequality_chain,
    verify_sandwich_bound, verify_similarity_dominance, CheckId, ColumnOutcome, Counterexample,
    GeneratorProfile, ProfileKind, PropertyReport, SuiteConfig, SuiteReport, DEFAULT_SEED,
};
pub use io::{
    build_compose_report, demo_instances, demo_relation, demo_reports, detect_format, emit_regime,
    emit_report, emit_suite, load_csv_instance, load_json_instance, render_suite_text, render_text,
    ComposeMode, CompositionRecord, Instance, InstanceFormat, LoadError, ReportFormat, RunReport,
};
