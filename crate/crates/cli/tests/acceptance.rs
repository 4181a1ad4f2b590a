//! Acceptance gate: eight end-to-end checks over the worked example, the
//! randomized property suite, the axiom scans, and the shipped binary.
//! Each test prints one `[N/8] PASS/FAIL — name` line.

use std::process::Command;
use std::time::Instant;

use frelkit_core::{
    axiom_sides, check_axioms, compose_adaptive, compose_max_t, compose_similarity,
    demo_instances, demo_relation, demo_reports, rank_alternatives, run_suite, Axiom,
    AxiomCheckConfig, FuzzyVector, Instance, OperatorSpec, SuiteConfig, TConormKind, TNormKind,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOLERANCE: f64 = 1e-12;

fn report(number: usize, name: &str, problems: &[String]) {
    let status = if problems.is_empty() { "PASS" } else { "FAIL" };
    println!("[{number}/8] {status} — {name}");
    assert!(problems.is_empty(), "criterion {number} ({name}): {problems:?}");
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= TOLERANCE
}

fn check_vector(problems: &mut Vec<String>, label: &str, got: &FuzzyVector, want: &[f64]) {
    let got = got.degrees();
    if got.len() != want.len() {
        problems.push(format!("{label}: length {} vs {}", got.len(), want.len()));
        return;
    }
    for (j, (g, w)) in got.iter().zip(want).enumerate() {
        if !close(*g, *w) {
            problems.push(format!("{label}[{j}]: got {g}, want {w}"));
        }
    }
}

fn probes() -> (Instance, Instance) {
    let mut instances = demo_instances();
    let second = instances.pop().expect("two probes");
    let first = instances.pop().expect("two probes");
    (first, second)
}

#[test]
fn criterion_1_max_t_compositions_match_the_worked_example() {
    let (first, second) = probes();
    let mut problems = Vec::new();
    let cases = [
        (
            &first,
            "probe-1",
            [
                (TNormKind::Min, [0.003, 0.004, 0.004, 0.004]),
                (TNormKind::Product, [0.000012, 0.0012, 0.00392, 0.003]),
                (TNormKind::Lukasiewicz, [0.0, 0.0, 0.0, 0.003]),
                (TNormKind::DrasticProduct, [0.0, 0.0, 0.0, 0.003]),
            ],
        ),
        (
            &second,
            "probe-2",
            [
                (TNormKind::Min, [0.004, 0.004, 0.004, 0.004]),
                (TNormKind::Product, [0.000016, 0.000168, 0.0012, 0.004]),
                (TNormKind::Lukasiewicz, [0.0, 0.0, 0.0, 0.004]),
                (TNormKind::DrasticProduct, [0.0, 0.0, 0.0, 0.004]),
            ],
        ),
    ];
    for (instance, tag, rows) in &cases {
        for (tnorm, want) in rows {
            match compose_max_t(&instance.x, &instance.a, *tnorm) {
                Ok(b) => check_vector(
                    &mut problems,
                    &format!("{tag} {}", tnorm.name()),
                    &b,
                    want,
                ),
                Err(err) => problems.push(format!("{tag} {}: {err}", tnorm.name())),
            }
        }
    }
    report(1, "max-t compositions on both probes", &problems);
}

#[test]
fn criterion_2_similarity_reference_matches_the_worked_example() {
    let (first, second) = probes();
    let mut problems = Vec::new();
    match compose_similarity(&first.x, &first.a) {
        Ok(b) => check_vector(&mut problems, "probe-1 similarity", &b, &[0.999, 0.992, 0.902, 0.304]),
        Err(err) => problems.push(format!("probe-1 similarity: {err}")),
    }
    match compose_similarity(&second.x, &second.a) {
        Ok(b) => check_vector(&mut problems, "probe-2 similarity", &b, &[1.0, 0.991, 0.901, 0.3]),
        Err(err) => problems.push(format!("probe-2 similarity: {err}")),
    }
    // The probe-2 column-B value is 0.901; the demo report must carry the
    // note calling out the sometimes-quoted 0.974 as not reproducible.
    match demo_reports() {
        Ok(reports) => {
            let documented = reports
                .iter()
                .flat_map(|r| r.notes.iter())
                .any(|note| note.contains("0.974") && note.contains("0.901"));
            if !documented {
                problems.push("missing the 0.974-vs-0.901 note in the demo reports".to_string());
            }
        }
        Err(err) => problems.push(format!("demo reports: {err}")),
    }
    report(2, "similarity reference on both probes", &problems);
}

#[test]
fn criterion_3_adaptive_blend_reproduces_the_reference_with_the_known_weight() {
    let (first, _) = probes();
    let mut problems = Vec::new();
    match (compose_adaptive(&first.x, &first.a), compose_similarity(&first.x, &first.a)) {
        (Ok(adaptive), Ok(reference)) => {
            check_vector(&mut problems, "adaptive vs reference", &adaptive.output, &reference.degrees());
            let lambda_first = adaptive.profile.columns[0].lambda;
            let expected = 0.996 / 0.997;
            if !close(lambda_first, expected) {
                problems.push(format!("lambda for column P: got {lambda_first}, want {expected}"));
            }
            if !adaptive.profile.degenerate_columns().is_empty() {
                problems.push("no column of probe-1 should be degenerate".to_string());
            }
        }
        (Err(err), _) | (_, Err(err)) => problems.push(err.to_string()),
    }
    report(3, "adaptive blend equals the similarity reference", &problems);
}

#[test]
fn criterion_4_rankings_invert_between_max_t_and_the_reference() {
    let (first, _) = probes();
    let mut problems = Vec::new();
    match compose_similarity(&first.x, &first.a) {
        Ok(reference) => {
            if rank_alternatives(&reference).strictly_first() != Some(0) {
                problems.push("the reference must rank column P strictly first".to_string());
            }
        }
        Err(err) => problems.push(err.to_string()),
    }
    for tnorm in TNormKind::ALL {
        match compose_max_t(&first.x, &first.a, tnorm) {
            Ok(b) => {
                if rank_alternatives(&b).strictly_first() == Some(0) {
                    problems.push(format!(
                        "max-{} must not rank column P strictly first",
                        tnorm.name()
                    ));
                }
            }
            Err(err) => problems.push(err.to_string()),
        }
    }
    report(4, "max-t and the reference disagree on the top column", &problems);
}

#[test]
fn criterion_5_first_output_never_exceeds_the_saturated_column() {
    // Column M of the demo relation dominates column P row by row, so
    // b_P ≤ b_M must hold for every input and every t-norm.
    let a = demo_relation();
    let mut rng = ChaCha8Rng::seed_from_u64(0x00D0_4115);
    let mut problems = Vec::new();
    let mut violations = 0u32;
    for _ in 0..10_000 {
        let x = FuzzyVector::from_degrees(&[rng.random(), rng.random(), rng.random()])
            .expect("draws lie in [0, 1)");
        for tnorm in TNormKind::ALL {
            let b = compose_max_t(&x, &a, tnorm).expect("composition must succeed").degrees();
            if b[0] > b[3] {
                violations += 1;
            }
        }
    }
    if violations > 0 {
        problems.push(format!("{violations} dominance violations in 40,000 compositions"));
    }
    report(5, "dominated column stays below the dominating one", &problems);
}

#[test]
fn criterion_6_default_property_suite_passes_within_budget() {
    let mut problems = Vec::new();
    let started = Instant::now();
    match run_suite(&SuiteConfig::default()) {
        Ok(suite) => {
            let elapsed = started.elapsed();
            if !suite.passed {
                problems.push(format!("failing properties: {:?}", suite.failing_properties()));
            }
            if elapsed.as_secs_f64() >= 30.0 {
                problems.push(format!("suite took {:.1}s, budget is 30s", elapsed.as_secs_f64()));
            }
            if suite.config.trials != 10_000 {
                problems.push(format!("default trials: {}", suite.config.trials));
            }
        }
        Err(err) => problems.push(err.to_string()),
    }
    report(6, "default randomized suite passes in under 30s", &problems);
}

#[test]
fn criterion_7_axiom_scans_separate_the_standard_operators_from_the_blend() {
    let mut problems = Vec::new();
    let config = AxiomCheckConfig::default();
    for spec in OperatorSpec::all() {
        match check_axioms(spec, &config) {
            Ok(scan) => {
                if !scan.all_ok() {
                    problems.push(format!("{}: unexpected violations", scan.operator));
                }
            }
            Err(err) => problems.push(err.to_string()),
        }
    }
    let blend = OperatorSpec::TConorm(TConormKind::convex(0.5).expect("0.5 is a valid weight"));
    match check_axioms(blend, &config) {
        Ok(scan) => {
            if !(scan.boundary_ok && scan.commutative_ok && scan.monotone_ok) {
                problems.push("convex(0.5) must keep boundary/commutativity/monotonicity".into());
            }
            if scan.associative_ok {
                problems.push("convex(0.5) must fail associativity".into());
            }
            if !scan.counterexamples.iter().any(|v| v.axiom == Axiom::Associativity) {
                problems.push("no associativity witness recorded".into());
            }
        }
        Err(err) => problems.push(err.to_string()),
    }
    // The fixed witness triple: both association orders, 0.025 apart.
    match axiom_sides(blend, Axiom::Associativity, [0.3, 0.4, 0.5]) {
        Ok((lhs, rhs)) => {
            if !(close(lhs, 0.85) && close(rhs, 0.875)) {
                problems.push(format!("witness sides: got ({lhs}, {rhs}), want (0.85, 0.875)"));
            }
        }
        Err(err) => problems.push(err.to_string()),
    }
    // The suite reports the blend's associativity break informationally:
    // the probe records failures, yet the suite still passes.
    let small = SuiteConfig { trials: 5, axiom_samples: 50, ..SuiteConfig::default() };
    match run_suite(&small) {
        Ok(suite) => {
            let probe = suite
                .properties
                .iter()
                .find(|p| p.name == "convex-associativity-probe");
            match probe {
                Some(probe) if probe.informational && probe.failures > 0 && suite.passed => {}
                Some(probe) => problems.push(format!(
                    "probe handling: informational {}, failures {}, suite passed {}",
                    probe.informational, probe.failures, suite.passed
                )),
                None => problems.push("convex-associativity-probe missing from suite".into()),
            }
        }
        Err(err) => problems.push(err.to_string()),
    }
    report(7, "axioms hold for standard operators, blend break is informational", &problems);
}

#[test]
fn criterion_8_verification_runs_are_reproducible_byte_for_byte() {
    let mut problems = Vec::new();
    let args = ["verify", "--trials", "500", "--seed", "77", "--max-n", "5", "--max-m", "5"];
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_frelkit"))
            .args(args)
            .output()
            .expect("failed to spawn frelkit")
    };
    let first = run();
    let second = run();
    if first.status.code() != Some(0) {
        problems.push(format!(
            "first run exited with {:?}: {}",
            first.status.code(),
            String::from_utf8_lossy(&first.stderr)
        ));
    }
    if second.status.code() != Some(0) {
        problems.push(format!("second run exited with {:?}", second.status.code()));
    }
    if first.stdout != second.stdout {
        problems.push("stdout differs between identical invocations".to_string());
    }
    if first.stdout.is_empty() {
        problems.push("verification report is empty".to_string());
    }
    report(8, "repeat verification is byte-identical", &problems);
}
