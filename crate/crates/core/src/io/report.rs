//! Run reports: structured results of compositions on one instance, with
//! JSON (stable, lossless) and plain-text (6-decimal, labeled) emitters.

use serde::{Deserialize, Serialize};

use crate::algebra::{TConormKind, TNormKind};
use crate::composition::{
    compare_to_oracle, compose_adaptive, compose_max_t, compose_s_t, compose_similarity,
    rank_alternatives, ComparisonReport, FuzzyVector, LambdaProfile, Ranking,
};
use crate::diagnostics::{classify_regime, RegimeReport};
use crate::error::Result;
use crate::harness::SuiteReport;
use crate::io::{demo_instances, Instance};

/// Output encodings for reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Text,
}

/// One composition run: the operator pair, its output, and optional
/// comparison against the similarity reference.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompositionRecord {
    pub tnorm: String,
    pub sconorm: String,
    pub output: FuzzyVector,
    pub ranking: Ranking,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comparison: Option<ComparisonReport>,
}

/// Everything one invocation computed for one instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub results: Vec<CompositionRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<FuzzyVector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_ranking: Option<Ranking>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<LambdaProfile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regime: Option<RegimeReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Which composition a single `compose` invocation runs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ComposeMode {
    /// `b_j = S_i t(x_i, a_ij)` for a fixed operator pair.
    Standard {
        tnorm: TNormKind,
        sconorm: TConormKind,
    },
    /// The per-column blend with automatically chosen weights.
    Adaptive,
}

/// Runs one composition on an instance and assembles its report.
pub fn build_compose_report(
    instance: &Instance,
    mode: ComposeMode,
    include_oracle: bool,
) -> Result<RunReport> {
    let oracle = if include_oracle {
        Some(compose_similarity(&instance.x, &instance.a)?)
    } else {
        None
    };
    let mut lambda = None;
    let (record_tnorm, record_sconorm, output) = match mode {
        ComposeMode::Standard { tnorm, sconorm } => {
            let output = compose_s_t(&instance.x, &instance.a, tnorm, sconorm)?;
            (tnorm.name().to_string(), sconorm.name(), output)
        }
        ComposeMode::Adaptive => {
            let adaptive = compose_adaptive(&instance.x, &instance.a)?;
            lambda = Some(adaptive.profile);
            (
                TNormKind::Min.name().to_string(),
                "adaptive".to_string(),
                adaptive.output,
            )
        }
    };
    let comparison = oracle
        .as_ref()
        .map(|oracle| compare_to_oracle(&output, oracle))
        .transpose()?;
    let mut notes = Vec::new();
    if let Some(profile) = &lambda {
        let degenerate = profile.degenerate_columns();
        if !degenerate.is_empty() {
            notes.push(format!(
                "degenerate blend on column(s) {}: at most one nonzero minimum (or a minimum of 1) \
                 leaves the weight unconstrained, so the output falls back to max-min there",
                degenerate
                    .iter()
                    .map(|j| column_name(output.labels(), *j))
                    .collect::<Vec<_>>()
                    .join(", ")
            ));
        }
    }
    Ok(RunReport {
        name: instance.name.clone(),
        description: instance.description.clone(),
        results: vec![CompositionRecord {
            tnorm: record_tnorm,
            sconorm: record_sconorm,
            ranking: rank_alternatives(&output),
            comparison,
            output,
        }],
        oracle_ranking: oracle.as_ref().map(rank_alternatives),
        oracle,
        lambda,
        regime: None,
        notes,
    })
}

/// Builds the full report for one built-in demo instance: all four max-t
/// compositions, the adaptive blend, the similarity reference, weights,
/// regimes, and explanatory notes.
fn demo_report(instance: &Instance, notes: Vec<String>) -> Result<RunReport> {
    let oracle = compose_similarity(&instance.x, &instance.a)?;
    let mut results = Vec::new();
    for tnorm in TNormKind::ALL {
        let output = compose_max_t(&instance.x, &instance.a, tnorm)?;
        results.push(CompositionRecord {
            tnorm: tnorm.name().to_string(),
            sconorm: TConormKind::Max.name(),
            ranking: rank_alternatives(&output),
            comparison: Some(compare_to_oracle(&output, &oracle)?),
            output,
        });
    }
    let adaptive = compose_adaptive(&instance.x, &instance.a)?;
    results.push(CompositionRecord {
        tnorm: TNormKind::Min.name().to_string(),
        sconorm: "adaptive".to_string(),
        ranking: rank_alternatives(&adaptive.output),
        comparison: Some(compare_to_oracle(&adaptive.output, &oracle)?),
        output: adaptive.output,
    });
    Ok(RunReport {
        name: instance.name.clone(),
        description: instance.description.clone(),
        results,
        oracle_ranking: Some(rank_alternatives(&oracle)),
        oracle: Some(oracle),
        lambda: Some(adaptive.profile),
        regime: Some(classify_regime(&instance.x, &instance.a)?),
        notes,
    })
}

/// Reports for both built-in probes.
pub fn demo_reports() -> Result<Vec<RunReport>> {
    let instances = demo_instances();
    let notes = [
        vec![
            "every max-t composition puts column M in its top group, while the similarity \
             reference ranks column P strictly first — faint inputs wash out under t-norms \
             but not under the similarity view"
                .to_string(),
        ],
        vec![
            "the similarity value for column B evaluates to 0.901000; a sometimes-quoted \
             0.974 does not follow from the definition and is not reproduced here"
                .to_string(),
        ],
    ];
    instances
        .iter()
        .zip(notes)
        .map(|(instance, notes)| demo_report(instance, notes))
        .collect()
}

/// Serializes a report: pretty JSON (stable keys, lossless values) or the
/// plain-text rendering of [`render_text`].
pub fn emit_report(report: &RunReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => pretty_json(report),
        ReportFormat::Text => render_text(report),
    }
}

/// Serializes a standalone regime report; `labels` name the columns in the
/// text rendering.
pub fn emit_regime(regime: &RegimeReport, labels: Option<&[String]>, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => pretty_json(regime),
        ReportFormat::Text => {
            let mut out = String::new();
            render_regime(&mut out, regime, labels);
            out
        }
    }
}

/// Serializes a property-suite report.
pub fn emit_suite(report: &SuiteReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => pretty_json(report),
        ReportFormat::Text => render_suite_text(report),
    }
}

fn pretty_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("reports serialize");
    out.push('\n');
    out
}

fn column_name(labels: Option<&[String]>, index: usize) -> String {
    match labels.and_then(|l| l.get(index)) {
        Some(label) => label.clone(),
        None => format!("#{}", index + 1),
    }
}

fn format_vector(v: &FuzzyVector) -> String {
    let values = v
        .degrees()
        .iter()
        .map(|value| format!("{value:.6}"))
        .collect::<Vec<_>>()
        .join(", ");
    match v.labels() {
        Some(labels) => format!("[{values}] ({})", labels.join(", ")),
        None => format!("[{values}]"),
    }
}

fn format_ranking(ranking: &Ranking, labels: Option<&[String]>) -> String {
    ranking
        .groups
        .iter()
        .map(|group| {
            group
                .iter()
                .map(|&j| column_name(labels, j))
                .collect::<Vec<_>>()
                .join(" = ")
        })
        .collect::<Vec<_>>()
        .join(" > ")
}

fn render_regime(out: &mut String, regime: &RegimeReport, labels: Option<&[String]>) {
    out.push_str(&format!("regimes (global: {}):\n", regime.global));
    for column in &regime.columns {
        let mut facts = vec![format!("nonzero minima {}", column.nonzero_min_count)];
        if column.all_rows_saturated {
            facts.push("all rows saturated".to_string());
        } else if column.has_saturated_row {
            facts.push("saturated row".to_string());
        }
        if column.maxt_strict_gap {
            facts.push("max-t gap".to_string());
        }
        if column.universal_strict_gap {
            facts.push("universal gap".to_string());
        }
        out.push_str(&format!(
            "  column {}: {} ({})\n",
            column_name(labels, column.column),
            column.regime,
            facts.join(", ")
        ));
    }
}

/// Renders a report as labeled plain text with degrees to 6 decimal places.
pub fn render_text(report: &RunReport) -> String {
    let labels: Option<Vec<String>> = report
        .oracle
        .as_ref()
        .and_then(|v| v.labels())
        .or_else(|| report.results.first().and_then(|r| r.output.labels()))
        .map(<[String]>::to_vec);
    let labels = labels.as_deref();

    let mut out = String::new();
    out.push_str(&format!("instance: {}\n", report.name));
    if let Some(description) = &report.description {
        out.push_str(&format!("description: {description}\n"));
    }

    if !report.results.is_empty() {
        out.push_str("\ncompositions:\n");
        for record in &report.results {
            out.push_str(&format!("  [t={}, s={}]\n", record.tnorm, record.sconorm));
            out.push_str(&format!("    b = {}\n", format_vector(&record.output)));
            out.push_str(&format!(
                "    ranking: {}\n",
                format_ranking(&record.ranking, labels)
            ));
            if let Some(comparison) = &record.comparison {
                out.push_str(&format!(
                    "    vs similarity reference: linf {:.6}, argmax {}, concordant pairs {}/{}\n",
                    comparison.linf_error,
                    if comparison.argmax_agrees {
                        "agrees"
                    } else {
                        "differs"
                    },
                    comparison.concordant_pairs,
                    comparison.total_pairs,
                ));
            }
        }
    }

    if let Some(oracle) = &report.oracle {
        out.push_str("\nsimilarity reference:\n");
        out.push_str(&format!("  b = {}\n", format_vector(oracle)));
        if let Some(ranking) = &report.oracle_ranking {
            out.push_str(&format!("  ranking: {}\n", format_ranking(ranking, labels)));
        }
    }

    if let Some(profile) = &report.lambda {
        out.push_str("\nadaptive weights:\n");
        for column in &profile.columns {
            let marker = if column.degenerate {
                " [degenerate: falls back to max-min]"
            } else {
                ""
            };
            out.push_str(&format!(
                "  column {}: lambda = {:.6} (max-min {:.6}, similarity {:.6}, drastic-sum {:.6}){}\n",
                column_name(labels, column.column),
                column.lambda,
                column.max_min.get(),
                column.similarity.get(),
                column.drastic_sum.get(),
                marker,
            ));
        }
    }

    if let Some(regime) = &report.regime {
        out.push('\n');
        render_regime(&mut out, regime, labels);
    }

    if !report.notes.is_empty() {
        out.push_str("\nnotes:\n");
        for note in &report.notes {
            out.push_str(&format!("  - {note}\n"));
        }
    }
    out
}

/// Renders a suite report as a per-property table.
pub fn render_suite_text(report: &SuiteReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "property suite: {} (trials {}, seed {}, rows <= {}, cols <= {})\n",
        if report.passed { "PASSED" } else { "FAILED" },
        report.config.trials,
        report.config.seed,
        report.config.max_rows,
        report.config.max_cols,
    ));
    for property in &report.properties {
        out.push_str(&format!(
            "  {:32} trials {:>6}  failures {:>6}  skipped {:>6}{}\n",
            property.name,
            property.trials,
            property.failures,
            property.skipped,
            if property.informational {
                "  (informational)"
            } else {
                ""
            },
        ));
    }
    out
}
