//! Triangular norms and conorms on the unit interval.
//!
//! A t-norm models fuzzy conjunction: it is commutative, associative,
//! monotone in each argument, and has 1 as its identity. A t-conorm is the
//! dual disjunction with identity 0. Every evaluator here maps `[0, 1]²`
//! (or a list, for the aggregate forms) back into `[0, 1]`, and
//! [`check_axioms`](axioms::check_axioms) probes the laws empirically on a
//! fixed grid plus seeded samples.

mod axioms;

pub use axioms::{
    axiom_sides, check_axioms, Axiom, AxiomCheckConfig, AxiomReport, AxiomViolation,
};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A membership degree: a finite `f64` in `[0, 1]`.
///
/// Construction validates the range and rejects NaN; there is no clamping.
/// Because NaN can never get in, the type carries a total order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitValue(f64);

impl UnitValue {
    pub const ZERO: UnitValue = UnitValue(0.0);
    pub const ONE: UnitValue = UnitValue(1.0);

    pub fn new(value: f64) -> Result<Self> {
        if value.is_nan() || !(0.0..=1.0).contains(&value) {
            return Err(Error::InvalidUnitValue(value));
        }
        // Normalize -0.0 so equality and the total order agree.
        Ok(UnitValue(if value == 0.0 { 0.0 } else { value }))
    }

    pub fn get(self) -> f64 {
        self.0
    }

    /// Wraps a value an evaluator has already proven to be in range.
    pub(crate) fn trusted(value: f64) -> Self {
        debug_assert!(
            !value.is_nan() && (0.0..=1.0).contains(&value),
            "evaluator produced {value} outside [0, 1]"
        );
        UnitValue(if value == 0.0 { 0.0 } else { value })
    }
}

impl Eq for UnitValue {}

impl Ord for UnitValue {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl PartialOrd for UnitValue {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<f64> for UnitValue {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        UnitValue::new(value)
    }
}

impl fmt::Display for UnitValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for UnitValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_f64(self.0)
    }
}

impl<'de> Deserialize<'de> for UnitValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = f64::deserialize(deserializer)?;
        UnitValue::new(raw).map_err(serde::de::Error::custom)
    }
}

/// The four implemented t-norms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TNormKind {
    /// `min(a, b)`.
    Min,
    /// `a · b`.
    Product,
    /// `max(0, a + b − 1)`.
    Lukasiewicz,
    /// `min(a, b)` when `max(a, b) = 1`, else 0. Comparisons with 1 are exact.
    DrasticProduct,
}

impl TNormKind {
    pub const ALL: [TNormKind; 4] = [
        TNormKind::Min,
        TNormKind::Product,
        TNormKind::Lukasiewicz,
        TNormKind::DrasticProduct,
    ];

    pub fn eval(self, a: UnitValue, b: UnitValue) -> UnitValue {
        let (a, b) = (a.get(), b.get());
        let value = match self {
            TNormKind::Min => a.min(b),
            TNormKind::Product => a * b,
            TNormKind::Lukasiewicz => (a + b - 1.0).max(0.0),
            TNormKind::DrasticProduct => {
                if a == 1.0 {
                    b
                } else if b == 1.0 {
                    a
                } else {
                    0.0
                }
            }
        };
        UnitValue::trusted(value)
    }

    pub fn name(self) -> &'static str {
        match self {
            TNormKind::Min => "min",
            TNormKind::Product => "product",
            TNormKind::Lukasiewicz => "lukasiewicz",
            TNormKind::DrasticProduct => "drastic-product",
        }
    }
}

impl fmt::Display for TNormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TNormKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "min" => Ok(TNormKind::Min),
            "product" => Ok(TNormKind::Product),
            "lukasiewicz" => Ok(TNormKind::Lukasiewicz),
            "drastic-product" => Ok(TNormKind::DrasticProduct),
            other => Err(format!(
                "unknown t-norm `{other}` (expected min, product, lukasiewicz, or drastic-product)"
            )),
        }
    }
}

/// The implemented t-conorms.
///
/// `Convex(λ)` blends the two extremes: `λ · S_D(a, b) + (1 − λ) · max(a, b)`,
/// where `S_D` is the drastic sum. λ = 0 recovers `max`, λ = 1 the drastic
/// sum, and intermediate weights sweep the whole band between them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TConormKind {
    /// `max(a, b)`.
    Max,
    /// `b` when `a = 0`, `a` when `b = 0`, and 1 otherwise (exact zero tests).
    DrasticSum,
    /// `λ · S_D(a, b) + (1 − λ) · max(a, b)`.
    Convex(UnitValue),
}

impl TConormKind {
    /// Builds `Convex(λ)`, validating `λ ∈ [0, 1]`.
    pub fn convex(lambda: f64) -> Result<Self> {
        UnitValue::new(lambda).map(TConormKind::Convex)
    }

    pub fn eval(self, a: UnitValue, b: UnitValue) -> UnitValue {
        let (a, b) = (a.get(), b.get());
        let value = match self {
            TConormKind::Max => a.max(b),
            TConormKind::DrasticSum => drastic_sum(a, b),
            TConormKind::Convex(lambda) => {
                let l = lambda.get();
                l * drastic_sum(a, b) + (1.0 - l) * a.max(b)
            }
        };
        UnitValue::trusted(value)
    }

    /// Aggregates a non-empty list of degrees.
    ///
    /// `Max` and `DrasticSum` fold naturally; the drastic sum of a list is 0
    /// when every entry is 0, the unique nonzero entry when exactly one is
    /// nonzero, and 1 as soon as two entries are nonzero. `Convex(λ)` is
    /// evaluated directly as `λ · S_D(values) + (1 − λ) · max(values)` —
    /// the binary form is not associative, so folding it would depend on
    /// the argument order.
    pub fn aggregate(self, values: &[UnitValue]) -> Result<UnitValue> {
        if values.is_empty() {
            return Err(Error::EmptyAggregate);
        }
        let max = values.iter().copied().max().expect("non-empty").get();
        let value = match self {
            TConormKind::Max => max,
            TConormKind::DrasticSum => drastic_sum_aggregate(values),
            TConormKind::Convex(lambda) => {
                let l = lambda.get();
                l * drastic_sum_aggregate(values) + (1.0 - l) * max
            }
        };
        Ok(UnitValue::trusted(value))
    }

    pub fn name(self) -> String {
        match self {
            TConormKind::Max => "max".to_string(),
            TConormKind::DrasticSum => "drastic-sum".to_string(),
            TConormKind::Convex(lambda) => format!("convex({})", lambda.get()),
        }
    }
}

impl fmt::Display for TConormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn drastic_sum(a: f64, b: f64) -> f64 {
    if a == 0.0 {
        b
    } else if b == 0.0 {
        a
    } else {
        1.0
    }
}

fn drastic_sum_aggregate(values: &[UnitValue]) -> f64 {
    let mut nonzero = values.iter().filter(|v| v.get() != 0.0);
    match (nonzero.next(), nonzero.next()) {
        (None, _) => 0.0,
        (Some(only), None) => only.get(),
        (Some(_), Some(_)) => 1.0,
    }
}

/// Which side of the duality an operator lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OperatorFamily {
    TNorm,
    TConorm,
}

impl fmt::Display for OperatorFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OperatorFamily::TNorm => "t-norm",
            OperatorFamily::TConorm => "t-conorm",
        })
    }
}

/// A tagged operator: either a t-norm or a t-conorm.
///
/// The typed entry points ([`OperatorSpec::tnorm_eval`] and friends) reject a
/// spec from the wrong family instead of silently evaluating it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OperatorSpec {
    TNorm(TNormKind),
    TConorm(TConormKind),
}

impl OperatorSpec {
    /// Every implemented operator, in a stable order.
    pub fn all() -> Vec<OperatorSpec> {
        let mut ops: Vec<OperatorSpec> = TNormKind::ALL.into_iter().map(OperatorSpec::TNorm).collect();
        ops.push(OperatorSpec::TConorm(TConormKind::Max));
        ops.push(OperatorSpec::TConorm(TConormKind::DrasticSum));
        ops
    }

    pub fn family(self) -> OperatorFamily {
        match self {
            OperatorSpec::TNorm(_) => OperatorFamily::TNorm,
            OperatorSpec::TConorm(_) => OperatorFamily::TConorm,
        }
    }

    /// The identity element: 1 for a t-norm, 0 for a t-conorm.
    pub fn identity(self) -> UnitValue {
        match self {
            OperatorSpec::TNorm(_) => UnitValue::ONE,
            OperatorSpec::TConorm(_) => UnitValue::ZERO,
        }
    }

    /// Evaluates the operator whatever its family.
    pub fn apply(self, a: UnitValue, b: UnitValue) -> UnitValue {
        match self {
            OperatorSpec::TNorm(kind) => kind.eval(a, b),
            OperatorSpec::TConorm(kind) => kind.eval(a, b),
        }
    }

    /// Evaluates a t-norm; errors when this operator is a t-conorm.
    pub fn tnorm_eval(self, a: UnitValue, b: UnitValue) -> Result<UnitValue> {
        match self {
            OperatorSpec::TNorm(kind) => Ok(kind.eval(a, b)),
            OperatorSpec::TConorm(_) => Err(Error::OperatorMisuse {
                expected: OperatorFamily::TNorm,
                found: OperatorFamily::TConorm,
            }),
        }
    }

    /// Evaluates a t-conorm; errors when this operator is a t-norm.
    pub fn tconorm_eval(self, a: UnitValue, b: UnitValue) -> Result<UnitValue> {
        match self {
            OperatorSpec::TConorm(kind) => Ok(kind.eval(a, b)),
            OperatorSpec::TNorm(_) => Err(Error::OperatorMisuse {
                expected: OperatorFamily::TConorm,
                found: OperatorFamily::TNorm,
            }),
        }
    }

    /// Aggregates a non-empty list under a t-conorm spec.
    pub fn aggregate_tconorm(self, values: &[UnitValue]) -> Result<UnitValue> {
        match self {
            OperatorSpec::TConorm(kind) => kind.aggregate(values),
            OperatorSpec::TNorm(_) => Err(Error::OperatorMisuse {
                expected: OperatorFamily::TConorm,
                found: OperatorFamily::TNorm,
            }),
        }
    }

    pub fn name(self) -> String {
        match self {
            OperatorSpec::TNorm(kind) => kind.name().to_string(),
            OperatorSpec::TConorm(kind) => kind.name(),
        }
    }
}

impl fmt::Display for OperatorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Convenience constructor for test and harness code.
pub fn unit(value: f64) -> UnitValue {
    UnitValue::new(value).expect("value within [0, 1]")
}

/// Validates a slice of raw degrees.
pub fn units(values: &[f64]) -> Result<Vec<UnitValue>> {
    values.iter().map(|&v| UnitValue::new(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn u(v: f64) -> UnitValue {
        unit(v)
    }

    #[test]
    fn unit_value_rejects_out_of_range_and_nan() {
        assert!(UnitValue::new(-0.1).is_err());
        assert!(UnitValue::new(1.1).is_err());
        assert!(UnitValue::new(f64::NAN).is_err());
        assert!(UnitValue::new(f64::INFINITY).is_err());
        assert_eq!(UnitValue::new(0.0).unwrap(), UnitValue::ZERO);
        assert_eq!(UnitValue::new(1.0).unwrap(), UnitValue::ONE);
        // -0.0 is in range and normalizes to +0.0.
        assert_eq!(UnitValue::new(-0.0).unwrap().get().to_bits(), 0);
    }

    #[test]
    fn min_keeps_identity_at_one() {
        for v in [0.0, 0.2, 0.7, 1.0] {
            assert_eq!(TNormKind::Min.eval(u(v), UnitValue::ONE), u(v));
        }
    }

    #[test]
    fn lukasiewicz_matches_hand_values() {
        let got = TNormKind::Lukasiewicz.eval(u(0.003), u(1.0)).get();
        assert!((got - 0.003).abs() <= 1e-12);
        assert_eq!(TNormKind::Lukasiewicz.eval(u(0.3), u(0.4)), UnitValue::ZERO);
    }

    #[test]
    fn drastic_product_is_zero_off_the_boundary() {
        assert_eq!(TNormKind::DrasticProduct.eval(u(0.7), u(0.9)), UnitValue::ZERO);
        assert_eq!(TNormKind::DrasticProduct.eval(u(0.7), u(1.0)), u(0.7));
        assert_eq!(TNormKind::DrasticProduct.eval(u(1.0), u(0.9)), u(0.9));
        assert_eq!(TNormKind::DrasticProduct.eval(u(1.0), u(1.0)), UnitValue::ONE);
    }

    #[test]
    fn drastic_sum_cases() {
        assert_eq!(TConormKind::DrasticSum.eval(u(0.001), u(0.003)), UnitValue::ONE);
        assert_eq!(TConormKind::DrasticSum.eval(u(0.0), u(0.4)), u(0.4));
        assert_eq!(TConormKind::DrasticSum.eval(u(0.4), u(0.0)), u(0.4));
        assert_eq!(TConormKind::DrasticSum.eval(u(0.0), u(0.0)), UnitValue::ZERO);
    }

    #[test]
    fn convex_blend_at_half() {
        let s = TConormKind::convex(0.5).unwrap();
        // 0.5 · S_D(0.3, 0.4) + 0.5 · max(0.3, 0.4) = 0.5 + 0.2
        let got = s.eval(u(0.3), u(0.4)).get();
        assert!((got - 0.7).abs() <= 1e-15);
    }

    #[test]
    fn convex_rejects_bad_lambda() {
        assert!(TConormKind::convex(-0.01).is_err());
        assert!(TConormKind::convex(1.01).is_err());
        assert!(TConormKind::convex(f64::NAN).is_err());
    }

    #[test]
    fn aggregate_drastic_sum_counts_nonzeros() {
        let two = units(&[0.0, 0.001, 0.003]).unwrap();
        assert_eq!(TConormKind::DrasticSum.aggregate(&two).unwrap(), UnitValue::ONE);
        let one = units(&[0.0, 0.0, 0.4]).unwrap();
        assert_eq!(TConormKind::DrasticSum.aggregate(&one).unwrap(), u(0.4));
        let none = units(&[0.0, 0.0]).unwrap();
        assert_eq!(TConormKind::DrasticSum.aggregate(&none).unwrap(), UnitValue::ZERO);
    }

    #[test]
    fn aggregate_max_picks_largest() {
        let values = units(&[0.003, 0.001, 0.0]).unwrap();
        assert_eq!(TConormKind::Max.aggregate(&values).unwrap(), u(0.003));
    }

    #[test]
    fn aggregate_convex_blends_the_column_profile() {
        // One of the worked columns: λ = 0.996/0.997 over mins [0, 0.001, 0.003]
        // gives λ · 1 + (1 − λ) · 0.003 = 0.999.
        let s = TConormKind::convex(0.996 / 0.997).unwrap();
        let mins = units(&[0.0, 0.001, 0.003]).unwrap();
        let got = s.aggregate(&mins).unwrap().get();
        assert!((got - 0.999).abs() <= 1e-12);
    }

    #[test]
    fn aggregate_rejects_empty_input() {
        assert_eq!(
            TConormKind::Max.aggregate(&[]).unwrap_err(),
            Error::EmptyAggregate
        );
    }

    #[test]
    fn family_mismatch_is_an_error() {
        let t = OperatorSpec::TNorm(TNormKind::Min);
        let s = OperatorSpec::TConorm(TConormKind::Max);
        assert!(matches!(
            s.tnorm_eval(u(0.1), u(0.2)),
            Err(Error::OperatorMisuse { .. })
        ));
        assert!(matches!(
            t.tconorm_eval(u(0.1), u(0.2)),
            Err(Error::OperatorMisuse { .. })
        ));
        assert!(matches!(
            t.aggregate_tconorm(&[u(0.1)]),
            Err(Error::OperatorMisuse { .. })
        ));
        assert_eq!(t.tnorm_eval(u(0.1), u(0.2)).unwrap(), u(0.1));
        assert_eq!(s.tconorm_eval(u(0.1), u(0.2)).unwrap(), u(0.2));
    }

    #[test]
    fn operator_names_round_trip() {
        for kind in TNormKind::ALL {
            assert_eq!(kind.name().parse::<TNormKind>().unwrap(), kind);
        }
        assert_eq!(TConormKind::convex(0.5).unwrap().name(), "convex(0.5)");
        assert!("bogus".parse::<TNormKind>().is_err());
    }

    fn degree() -> impl Strategy<Value = UnitValue> {
        (0.0..=1.0f64).prop_map(unit)
    }

    proptest! {
        #[test]
        fn tnorms_never_exceed_min(a in degree(), b in degree()) {
            for kind in TNormKind::ALL {
                prop_assert!(kind.eval(a, b) <= TNormKind::Min.eval(a, b));
            }
        }

        #[test]
        fn convex_sits_between_max_and_drastic_sum(
            a in degree(),
            b in degree(),
            lambda in 0.0..=1.0f64,
        ) {
            let convex = TConormKind::convex(lambda).unwrap().eval(a, b);
            prop_assert!(TConormKind::Max.eval(a, b) <= convex);
            prop_assert!(convex <= TConormKind::DrasticSum.eval(a, b));
        }

        #[test]
        fn evaluators_are_commutative(a in degree(), b in degree()) {
            for kind in TNormKind::ALL {
                prop_assert_eq!(kind.eval(a, b), kind.eval(b, a));
            }
            for kind in [TConormKind::Max, TConormKind::DrasticSum, TConormKind::convex(0.3).unwrap()] {
                prop_assert_eq!(kind.eval(a, b), kind.eval(b, a));
            }
        }

        #[test]
        fn evaluators_are_monotone(a in degree(), b in degree(), c in degree()) {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            for kind in TNormKind::ALL {
                prop_assert!(kind.eval(lo, c) <= kind.eval(hi, c));
            }
            for kind in [TConormKind::Max, TConormKind::DrasticSum, TConormKind::convex(0.7).unwrap()] {
                prop_assert!(kind.eval(lo, c) <= kind.eval(hi, c));
            }
        }

        #[test]
        fn boundary_identities_hold(a in degree()) {
            for kind in TNormKind::ALL {
                prop_assert!((kind.eval(a, UnitValue::ONE).get() - a.get()).abs() <= 1e-9);
            }
            for kind in [TConormKind::Max, TConormKind::DrasticSum, TConormKind::convex(0.4).unwrap()] {
                prop_assert!((kind.eval(a, UnitValue::ZERO).get() - a.get()).abs() <= 1e-9);
            }
        }

        #[test]
        fn aggregates_are_permutation_invariant(values in proptest::collection::vec(degree(), 1..8), rot in 0usize..8) {
            let mut rotated = values.clone();
            rotated.rotate_left(rot % values.len());
            for kind in [TConormKind::Max, TConormKind::DrasticSum, TConormKind::convex(0.25).unwrap()] {
                prop_assert_eq!(
                    kind.aggregate(&values).unwrap(),
                    kind.aggregate(&rotated).unwrap()
                );
            }
        }

        #[test]
        fn drastic_aggregate_matches_binary_fold(values in proptest::collection::vec(degree(), 1..8)) {
            let folded = values
                .iter()
                .copied()
                .reduce(|acc, v| TConormKind::DrasticSum.eval(acc, v))
                .unwrap();
            prop_assert_eq!(TConormKind::DrasticSum.aggregate(&values).unwrap(), folded);
        }
    }
}
