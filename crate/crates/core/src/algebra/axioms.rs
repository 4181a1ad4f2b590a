//! Empirical axiom probes for the operator evaluators.
//!
//! The checker exercises boundary identity, commutativity, monotonicity in
//! each argument, and associativity on a fixed 0.1-step grid over `[0, 1]`
//! (endpoints included) plus a seeded batch of random triples, and records
//! every violation with a replayable witness.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{OperatorSpec, UnitValue};
use crate::error::{Error, Result};

/// One of the probed laws. Monotonicity is split by argument position so a
/// witness triple replays unambiguously.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    /// `op(a, e) = a` with `e` the family identity (1 for t-norms, 0 for t-conorms).
    Boundary,
    /// `op(a, b) = op(b, a)`.
    Commutativity,
    /// `a ≤ b ⇒ op(a, c) ≤ op(b, c)`.
    MonotonicityLeft,
    /// `a ≤ b ⇒ op(c, a) ≤ op(c, b)`.
    MonotonicityRight,
    /// `op(op(a, b), c) = op(a, op(b, c))`.
    Associativity,
}

/// A recorded violation. `args` replays through [`axiom_sides`] to the same
/// `lhs`/`rhs` pair, bit for bit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    /// Argument triple; the slots an axiom ignores are fixed by [`axiom_sides`].
    pub args: [f64; 3],
    pub lhs: f64,
    pub rhs: f64,
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AxiomCheckConfig {
    /// Number of random triples sampled on top of the fixed grid. Must be ≥ 1.
    pub samples: u32,
    pub seed: u64,
    /// Comparison slack. Identities such as `max(0, a + 1 − 1) = a` or
    /// `λ·a + (1 − λ)·a = a` are not bit-exact in `f64`, so equality laws are
    /// accepted up to this tolerance; real violations sit far above it.
    pub tolerance: f64,
}

impl Default for AxiomCheckConfig {
    fn default() -> Self {
        AxiomCheckConfig {
            samples: 2000,
            seed: 0,
            tolerance: 1e-9,
        }
    }
}

/// Outcome of probing one operator: a flag per law plus every witness found.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub operator: String,
    pub boundary_ok: bool,
    pub commutative_ok: bool,
    pub monotone_ok: bool,
    pub associative_ok: bool,
    pub counterexamples: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn all_ok(&self) -> bool {
        self.boundary_ok && self.commutative_ok && self.monotone_ok && self.associative_ok
    }
}

/// Recomputes both sides of an axiom for a witness triple.
///
/// - `Boundary`: `args = [a, e, 0]`, sides `(op(a, e), a)`;
/// - `Commutativity`: `args = [a, b, 0]`, sides `(op(a, b), op(b, a))`;
/// - `MonotonicityLeft`: `args = [lo, hi, c]` with `lo ≤ hi`, sides `(op(lo, c), op(hi, c))`;
/// - `MonotonicityRight`: same triple, sides `(op(c, lo), op(c, hi))`;
/// - `Associativity`: `args = [a, b, c]`, sides `(op(op(a, b), c), op(a, op(b, c)))`.
pub fn axiom_sides(spec: OperatorSpec, axiom: Axiom, args: [f64; 3]) -> Result<(f64, f64)> {
    let [a, b, c] = args;
    let (a, b, c) = (UnitValue::new(a)?, UnitValue::new(b)?, UnitValue::new(c)?);
    let sides = match axiom {
        Axiom::Boundary => (spec.apply(a, b).get(), a.get()),
        Axiom::Commutativity => (spec.apply(a, b).get(), spec.apply(b, a).get()),
        Axiom::MonotonicityLeft => (spec.apply(a, c).get(), spec.apply(b, c).get()),
        Axiom::MonotonicityRight => (spec.apply(c, a).get(), spec.apply(c, b).get()),
        Axiom::Associativity => (
            spec.apply(spec.apply(a, b), c).get(),
            spec.apply(a, spec.apply(b, c)).get(),
        ),
    };
    Ok(sides)
}

/// Probes all four laws for one operator.
pub fn check_axioms(spec: OperatorSpec, config: &AxiomCheckConfig) -> Result<AxiomReport> {
    if config.samples == 0 {
        return Err(Error::EmptySampleBudget);
    }

    let grid: Vec<f64> = (0..=10).map(|i| f64::from(i) / 10.0).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let sampled: Vec<[f64; 3]> = (0..config.samples)
        .map(|_| [rng.random(), rng.random(), rng.random()])
        .collect();

    let mut report = AxiomReport {
        operator: spec.name(),
        boundary_ok: true,
        commutative_ok: true,
        monotone_ok: true,
        associative_ok: true,
        counterexamples: Vec::new(),
    };
    let identity = spec.identity().get();
    let tol = config.tolerance;

    let record =
        |report: &mut AxiomReport, axiom: Axiom, args: [f64; 3], lhs: f64, rhs: f64, gap: f64| {
            match axiom {
                Axiom::Boundary => report.boundary_ok = false,
                Axiom::Commutativity => report.commutative_ok = false,
                Axiom::MonotonicityLeft | Axiom::MonotonicityRight => report.monotone_ok = false,
                Axiom::Associativity => report.associative_ok = false,
            }
            report.counterexamples.push(AxiomViolation {
                axiom,
                args,
                lhs,
                rhs,
                gap,
            });
        };

    let check_equality = |report: &mut AxiomReport, axiom: Axiom, args: [f64; 3]| {
        let (lhs, rhs) = axiom_sides(spec, axiom, args).expect("probe arguments are in range");
        let gap = (lhs - rhs).abs();
        if gap > tol {
            record(report, axiom, args, lhs, rhs, gap);
        }
    };

    // Boundary on grid points and on the first component of each sample.
    for &a in grid.iter().chain(sampled.iter().map(|t| &t[0])) {
        check_equality(&mut report, Axiom::Boundary, [a, identity, 0.0]);
    }

    // Commutativity on grid pairs and sampled pairs.
    for &a in &grid {
        for &b in &grid {
            check_equality(&mut report, Axiom::Commutativity, [a, b, 0.0]);
        }
    }
    for t in &sampled {
        check_equality(&mut report, Axiom::Commutativity, [t[0], t[1], 0.0]);
    }

    // Monotonicity and associativity on grid triples and sampled triples.
    let check_triple = |report: &mut AxiomReport, a: f64, b: f64, c: f64| {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        for axiom in [Axiom::MonotonicityLeft, Axiom::MonotonicityRight] {
            let args = [lo, hi, c];
            let (lhs, rhs) = axiom_sides(spec, axiom, args).expect("probe arguments are in range");
            if lhs > rhs + tol {
                let gap = lhs - rhs;
                record(report, axiom, args, lhs, rhs, gap);
            }
        }
        check_equality(report, Axiom::Associativity, [a, b, c]);
    };
    for &a in &grid {
        for &b in &grid {
            for &c in &grid {
                check_triple(&mut report, a, b, c);
            }
        }
    }
    for t in &sampled {
        check_triple(&mut report, t[0], t[1], t[2]);
    }

    Ok(report)
}
