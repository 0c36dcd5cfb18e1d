//! Machine-readable report, schema version 1. Exact integers are written as
//! decimal strings.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::bounds::{Bounds, SingularComponent};
use crate::detector::{DetectionReport, RunCoefficients, RunRecord, StepRecord};
use crate::nonproper::{ValueFlag, ValueSet};
use crate::polyalg::Rational;
use crate::univar::UnivariatePolynomial;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonReport {
    pub schema: u32,
    pub input: String,
    pub variables: Vec<String>,
    pub degree: u32,
    pub method: String,
    pub config: JsonConfig,
    pub singular_locus_finite: bool,
    pub general_case: bool,
    pub runs: Vec<JsonRun>,
    pub s_final: JsonValueSet,
    pub critical_values: JsonValueSet,
    /// Roots of `s_final` not matching a critical value numerically.
    pub s_minus_critical_approx: Vec<[f64; 2]>,
    pub bounds: JsonBounds,
    pub warnings: Vec<String>,
}

/// Several reports in one document (`--method both`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonReports {
    pub schema: u32,
    pub reports: Vec<JsonReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonConfig {
    pub seed: String,
    pub runs: usize,
    pub coeff_bound: u32,
    pub force_general: bool,
    pub tolerance: f64,
    pub sing_components: Vec<SingularComponent>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonRoots {
    pub rational: Vec<String>,
    pub approx: Vec<[f64; 2]>,
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonValueSet {
    /// Integer coefficients of `rho`, constant term first.
    pub rho: Vec<String>,
    pub roots: JsonRoots,
    pub flags: Vec<ValueFlag>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum JsonCoefficients {
    SuperPolar {
        a: Vec<Vec<i64>>,
        b: Vec<Vec<Vec<i64>>>,
        beta: Option<Vec<i64>>,
    },
    IteratedPolar {
        matrix: Vec<Vec<i64>>,
        betas: Vec<Vec<i64>>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonStep {
    pub step: usize,
    pub dimension: i64,
    #[serde(flatten)]
    pub values: JsonValueSet,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonRun {
    pub seed: String,
    pub coefficients: JsonCoefficients,
    pub rejected_dimensions: Vec<i64>,
    pub dimension: i64,
    #[serde(flatten)]
    pub values: JsonValueSet,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub steps: Vec<JsonStep>,
    pub millis: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonBounds {
    pub nk: Option<String>,
    /// Valid when the set of non-trivial values is nonempty.
    pub superpolar: Option<String>,
    pub kinf: Option<String>,
}

impl JsonValueSet {
    pub fn from_values(v: &ValueSet) -> Self {
        JsonValueSet {
            rho: v
                .rho()
                .integer_coeffs()
                .iter()
                .map(BigInt::to_string)
                .collect(),
            roots: JsonRoots {
                rational: v.rational_roots().iter().map(Rational::to_string).collect(),
                approx: v.approx_roots().iter().map(|c| [c.re, c.im]).collect(),
                converged: v.approx_converged(),
            },
            flags: v.flags().iter().copied().collect(),
        }
    }

    /// Exact `rho`; `None` if a coefficient is not an integer string.
    pub fn rho_polynomial(&self) -> Option<UnivariatePolynomial> {
        let coeffs = self
            .rho
            .iter()
            .map(|c| c.parse::<BigInt>().ok())
            .collect::<Option<Vec<_>>>()?;
        Some(UnivariatePolynomial::from_integers(&coeffs))
    }

    pub fn flag_set(&self) -> BTreeSet<ValueFlag> {
        self.flags.iter().copied().collect()
    }
}

fn coefficients(c: &RunCoefficients) -> JsonCoefficients {
    match c {
        RunCoefficients::SuperPolar(c) => JsonCoefficients::SuperPolar {
            a: c.a.clone(),
            b: c.b.clone(),
            beta: c.beta.clone(),
        },
        RunCoefficients::IteratedPolar(c) => JsonCoefficients::IteratedPolar {
            matrix: c.matrix.clone(),
            betas: c.betas.clone(),
        },
    }
}

fn step(s: &StepRecord) -> JsonStep {
    JsonStep {
        step: s.step,
        dimension: s.dimension,
        values: JsonValueSet::from_values(&s.values),
    }
}

fn run(r: &RunRecord) -> JsonRun {
    JsonRun {
        seed: r.seed.to_string(),
        coefficients: coefficients(&r.coefficients),
        rejected_dimensions: r.rejected_dimensions.clone(),
        dimension: r.dimension,
        values: JsonValueSet::from_values(&r.values),
        steps: r.steps.iter().map(step).collect(),
        millis: r.millis,
    }
}

fn bounds(b: &Bounds) -> JsonBounds {
    JsonBounds {
        nk: b.nk.map(|v| v.to_string()),
        superpolar: b.superpolar.map(|v| v.to_string()),
        kinf: b.kinf.map(|v| v.to_string()),
    }
}

impl JsonReport {
    pub fn from_report(r: &DetectionReport) -> Self {
        JsonReport {
            schema: SCHEMA_VERSION,
            input: r.input.clone(),
            variables: r.variables.clone(),
            degree: r.degree,
            method: r.method.as_str().to_string(),
            config: JsonConfig {
                seed: r.config.seed.to_string(),
                runs: r.config.runs,
                coeff_bound: r.config.coeff_bound,
                force_general: r.config.force_general,
                tolerance: r.config.tolerance,
                sing_components: r.config.sing.components().to_vec(),
            },
            singular_locus_finite: r.singular_locus_finite,
            general_case: r.general_case,
            runs: r.runs.iter().map(run).collect(),
            s_final: JsonValueSet::from_values(&r.s_final),
            critical_values: JsonValueSet::from_values(&r.critical_values),
            s_minus_critical_approx: r
                .s_minus_critical_approx
                .iter()
                .map(|c| [c.re, c.im])
                .collect(),
            bounds: bounds(&r.bounds),
            warnings: r.warnings.clone(),
        }
    }
}

/// Pretty-printed JSON: a single report, or a `reports` array when there are
/// several.
pub fn render(reports: &[DetectionReport]) -> String {
    let mut docs: Vec<JsonReport> = reports.iter().map(JsonReport::from_report).collect();
    let text = if docs.len() == 1 {
        serde_json::to_string_pretty(&docs.remove(0))
    } else {
        serde_json::to_string_pretty(&JsonReports {
            schema: SCHEMA_VERSION,
            reports: docs,
        })
    };
    text.expect("report types serialize")
}
