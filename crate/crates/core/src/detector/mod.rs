//! Detection of the non-trivial asymptotic non-regular values `NK∞(f)`.
//!
//! Both methods return a [`DetectionReport`] whose `s_final` is a finite
//! superset of `NK∞(f)` (with high probability over the random choices):
//!
//! * [`run_super_polar`]: non-properness values of `f` on one super-polar
//!   curve per run, intersected over runs;
//! * [`iterated_polar_run`] / [`run_iterated_polar`]: union over the polar
//!   curves of successive hyperplane slices in random coordinates,
//!   intersected over runs.

mod iterated;
pub mod sampling;
mod superpolar;

use std::collections::BTreeSet;

use num_complex::Complex64;
use thiserror::Error;

use crate::bounds::{all_bounds, Bounds, SingularComponentData};
use crate::groebner::{
    buchberger, dimension_of, elimination_ideal, graded_basis, lowest_element_modular,
    GroebnerError, Ideal,
};
use crate::nonproper::{graph_ideal, NonproperError, ValueFlag, ValueSet, DEFAULT_TOLERANCE};
use crate::polyalg::{MonomialOrder, PolyError, Polynomial, Rational};
use crate::univar::{gcd_univar, UnivarError, UnivariatePolynomial};

pub use iterated::{iterated_polar_run, run_iterated_polar, IteratedPolarCoefficients, StepRecord};
pub use superpolar::{run_super_polar, super_polar_ideal, SuperPolarCoefficients};

/// Resamples allowed after the first attempt when the dimension guard fails.
pub const RETRY_BUDGET: usize = 5;

/// Tolerance of the approximate subtraction of critical values.
pub const SUBTRACTION_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DetectorError {
    #[error("f is constant")]
    ConstantPolynomial,
    #[error("at least two variables are required, got {0}")]
    TooFewVariables(usize),
    #[error("at least one run is required")]
    NoRuns,
    #[error(
        "dimension guard failed after {} attempts (dimensions {dims:?}, expected <= 1)",
        dims.len()
    )]
    GuardExhausted { dims: Vec<i64> },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Nonproper(#[from] NonproperError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Univar(#[from] UnivarError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    SuperPolar,
    IteratedPolar,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::SuperPolar => "super_polar",
            Method::IteratedPolar => "iterated_polar",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DetectorConfig {
    pub seed: u64,
    pub runs: usize,
    pub coeff_bound: u32,
    pub force_general: bool,
    pub tolerance: f64,
    pub sing: SingularComponentData,
    /// Record wall-clock time per run. Off by default so that reports are
    /// reproducible byte for byte.
    pub timings: bool,
}

impl Default for DetectorConfig {
    fn default() -> Self {
        DetectorConfig {
            seed: 0,
            runs: 3,
            coeff_bound: 9999,
            force_general: false,
            tolerance: DEFAULT_TOLERANCE,
            sing: SingularComponentData::none(),
            timings: false,
        }
    }
}

impl DetectorConfig {
    pub fn with_seed(seed: u64) -> Self {
        DetectorConfig {
            seed,
            ..Self::default()
        }
    }
}

/// Random data that determined one run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RunCoefficients {
    SuperPolar(SuperPolarCoefficients),
    IteratedPolar(IteratedPolarCoefficients),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub seed: u64,
    pub coefficients: RunCoefficients,
    /// Dimensions of the rejected samples, in order.
    pub rejected_dimensions: Vec<i64>,
    /// Dimension of the accepted curve (largest over steps for the iterated
    /// method).
    pub dimension: i64,
    pub values: ValueSet,
    /// Per-slice results of the iterated method; empty for super-polar runs.
    pub steps: Vec<StepRecord>,
    pub millis: Option<u64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DetectionReport {
    pub input: String,
    pub variables: Vec<String>,
    pub degree: u32,
    pub method: Method,
    pub config: DetectorConfig,
    pub singular_locus_finite: bool,
    pub general_case: bool,
    pub runs: Vec<RunRecord>,
    pub s_final: ValueSet,
    pub critical_values: ValueSet,
    /// Approximate roots of `s_final` that do not match any critical value
    /// within [`SUBTRACTION_TOLERANCE`].
    pub s_minus_critical_approx: Vec<Complex64>,
    pub bounds: Bounds,
    pub warnings: Vec<String>,
}

pub(crate) fn check_input(
    f: &Polynomial<Rational>,
    config: &DetectorConfig,
) -> Result<(), DetectorError> {
    if f.nvars() < 2 {
        return Err(DetectorError::TooFewVariables(f.nvars()));
    }
    if f.is_constant() {
        return Err(DetectorError::ConstantPolynomial);
    }
    if config.runs == 0 {
        return Err(DetectorError::NoRuns);
    }
    Ok(())
}

pub(crate) fn gradient(f: &Polynomial<Rational>) -> Vec<Polynomial<Rational>> {
    (0..f.nvars()).map(|j| f.partial_derivative(j)).collect()
}

/// `Sing f` is finite (possibly empty).
pub fn is_singular_locus_finite(f: &Polynomial<Rational>) -> Result<bool, DetectorError> {
    let ideal = Ideal::new(f.ring(), gradient(f))?;
    Ok(dimension_of(&ideal)? <= 0)
}

/// Largest degree in `z` searched by linear algebra before falling back to
/// a lex basis.
const CRITICAL_DEGREE_CAP: u32 = 512;

/// Generator of `<df/dx_1, ..., df/dx_n, f - z> ∩ Q[z]`: its roots are the
/// critical values of `f`.
pub fn critical_values(
    f: &Polynomial<Rational>,
    tolerance: f64,
) -> Result<ValueSet, DetectorError> {
    if f.is_constant() {
        return Err(DetectorError::ConstantPolynomial);
    }
    let ideal = Ideal::new(f.ring(), gradient(f))?;
    let g = graph_ideal(&ideal, f)?;
    let z = g.z_index();
    let gb = graded_basis(g.ideal())?;
    if gb.is_unit() {
        return Ok(ValueSet::empty(BTreeSet::new()));
    }
    let mut found = lowest_element_modular(g.ideal(), &gb, &[z], CRITICAL_DEGREE_CAP)?;
    if found.is_none() {
        let gb = buchberger(g.ideal(), &MonomialOrder::lex(g.ring().nvars()))?;
        found = elimination_ideal(&gb, &[z])?.into_iter().next();
    }
    let Some(p) = found.as_ref() else {
        return Err(DetectorError::Invariant(
            "critical values do not form a finite set".into(),
        ));
    };
    let rho = UnivariatePolynomial::from_multivariate(p, z)
        .map_err(|e| DetectorError::Invariant(e.to_string()))?;
    Ok(ValueSet::from_rho(&rho, BTreeSet::new(), tolerance)?)
}

/// Squarefree canonical gcd of all inputs.
pub fn intersect_runs(
    rhos: &[UnivariatePolynomial],
) -> Result<UnivariatePolynomial, DetectorError> {
    let (first, rest) = rhos.split_first().ok_or(DetectorError::NoRuns)?;
    if rhos.iter().any(UnivariatePolynomial::is_zero) {
        return Err(UnivarError::ZeroInput.into());
    }
    let mut acc = first.canonical();
    for r in rest {
        acc = gcd_univar(&acc, r)?;
    }
    Ok(crate::univar::squarefree_part(&acc)?)
}

/// Approximate roots of `s` that are not within `tol` of a root of `c`.
pub fn subtract_approx(s: &ValueSet, c: &ValueSet, tol: f64) -> Vec<Complex64> {
    s.approx_roots()
        .iter()
        .filter(|r| {
            c.approx_roots()
                .iter()
                .all(|w| (*r - w).norm() > tol * (1.0 + w.norm()))
        })
        .copied()
        .collect()
}

/// Executes `runs` independent runs on scoped threads and returns them in
/// run-index order.
pub(crate) fn run_parallel<T: Send>(
    runs: usize,
    job: impl Fn(usize) -> Result<T, DetectorError> + Sync,
) -> Result<Vec<T>, DetectorError> {
    let job = &job;
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..runs).map(|k| scope.spawn(move || job(k))).collect();
        handles
            .into_iter()
            .map(|h| {
                h.join()
                    .unwrap_or_else(|_| Err(DetectorError::Invariant("run panicked".into())))
            })
            .collect()
    })
}

/// Intersects the runs and attaches critical values, bounds and warnings.
pub(crate) fn assemble(
    f: &Polynomial<Rational>,
    method: Method,
    config: &DetectorConfig,
    singular_locus_finite: bool,
    general_case: bool,
    runs: Vec<RunRecord>,
    mut warnings: Vec<String>,
) -> Result<DetectionReport, DetectorError> {
    let rhos: Vec<UnivariatePolynomial> = runs.iter().map(|r| r.values.rho().clone()).collect();
    let s_rho = intersect_runs(&rhos)?;
    for (k, r) in rhos.iter().enumerate() {
        if !s_rho.divides(r) {
            return Err(DetectorError::Invariant(format!(
                "intersection does not divide the polynomial of run {k}"
            )));
        }
    }
    let mut flags = BTreeSet::new();
    if runs
        .iter()
        .any(|r| r.values.has_flag(ValueFlag::VerticalComponent))
    {
        flags.insert(ValueFlag::VerticalComponent);
    }
    if runs
        .iter()
        .all(|r| r.values.has_flag(ValueFlag::EmptyCurve))
    {
        flags.insert(ValueFlag::EmptyCurve);
    }
    let s_final = ValueSet::from_rho(&s_rho, flags, config.tolerance)?;
    let critical = critical_values(f, config.tolerance)?;
    let degree = f.total_degree().finite().unwrap_or(0);
    let n = f.nvars() as u32;
    let bounds = all_bounds(degree, n, &config.sing);
    if let Some(b) = bounds.superpolar {
        if s_final.len() as i128 > b {
            warnings.push(format!(
                "{} values exceed the super-polar bound {b}; vertical components may inflate the set",
                s_final.len()
            ));
        }
    }
    if !s_final.approx_converged() || !critical.approx_converged() {
        warnings.push(
            "numeric root approximation did not converge; approximate roots are unverified".into(),
        );
    }
    let s_minus_critical_approx = subtract_approx(&s_final, &critical, SUBTRACTION_TOLERANCE);
    Ok(DetectionReport {
        input: f.to_string(),
        variables: f.ring().names().to_vec(),
        degree,
        method,
        config: config.clone(),
        singular_locus_finite,
        general_case,
        runs,
        s_final,
        critical_values: critical,
        s_minus_critical_approx,
        bounds,
        warnings,
    })
}
