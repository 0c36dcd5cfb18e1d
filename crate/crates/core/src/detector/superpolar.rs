use std::time::Instant;

use crate::groebner::{dimension_of, with_rabinowitsch, Ideal};
use crate::nonproper::{nonproperness_values_in, ValueSet};
use crate::polyalg::{Polynomial, Rational};

use super::sampling::{run_seed, Sampler};
use super::{
    assemble, check_input, gradient, is_singular_locus_finite, run_parallel, DetectionReport,
    DetectorConfig, DetectorError, Method, RunCoefficients, RunRecord, RETRY_BUDGET,
};

/// Coefficients of one super-polar curve
/// `g_i = Σ_j a_ij df/dx_j + Σ_{j,k} b_ijk x_k df/dx_j`, `i = 1..n-1`, and of
/// the localization `h = Σ_j beta_j df/dx_j` in the general case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperPolarCoefficients {
    /// `(n-1) x n`
    pub a: Vec<Vec<i64>>,
    /// `(n-1) x n x n`, indexed `[i][j][k]`
    pub b: Vec<Vec<Vec<i64>>>,
    pub beta: Option<Vec<i64>>,
    pub seed: u64,
}

impl SuperPolarCoefficients {
    pub fn sample(n: usize, general: bool, sampler: &mut Sampler, seed: u64) -> Self {
        let a = (0..n - 1).map(|_| sampler.nonzero_vec(n)).collect();
        let b = (0..n - 1)
            .map(|_| (0..n).map(|_| sampler.nonzero_vec(n)).collect())
            .collect();
        let beta = general.then(|| sampler.nonzero_vec(n));
        SuperPolarCoefficients { a, b, beta, seed }
    }
}

/// `<g_1, ..., g_{n-1}>`.
pub fn super_polar_ideal(
    f: &Polynomial<Rational>,
    coeffs: &SuperPolarCoefficients,
) -> Result<Ideal<Rational>, DetectorError> {
    let n = f.nvars();
    if n < 2 {
        return Err(DetectorError::TooFewVariables(n));
    }
    let bad_shape = coeffs.a.len() != n - 1
        || coeffs.b.len() != n - 1
        || coeffs.a.iter().any(|row| row.len() != n)
        || coeffs
            .b
            .iter()
            .any(|m| m.len() != n || m.iter().any(|row| row.len() != n));
    if bad_shape {
        return Err(DetectorError::Invariant(
            "coefficient shapes do not match the number of variables".into(),
        ));
    }
    let ring = f.ring();
    let grad = gradient(f);
    let vars: Vec<Polynomial<Rational>> = (0..n).map(|k| Polynomial::var(ring, k)).collect();
    let mut gens = Vec::with_capacity(n - 1);
    for i in 0..n - 1 {
        let mut g = Polynomial::zero(ring);
        for (j, dj) in grad.iter().enumerate() {
            // (a_ij + Σ_k b_ijk x_k) * df/dx_j
            let mut factor =
                Polynomial::constant(ring, Rational::from_integer(coeffs.a[i][j].into()));
            for (xk, &b) in vars.iter().zip(&coeffs.b[i][j]) {
                factor = factor.add(&xk.scale(&Rational::from_integer(b.into())))?;
            }
            g = g.add(&factor.mul(dj)?)?;
        }
        gens.push(g);
    }
    Ok(Ideal::new(ring, gens)?)
}

fn localizer(
    f: &Polynomial<Rational>,
    beta: &[i64],
) -> Result<Polynomial<Rational>, DetectorError> {
    let mut h = Polynomial::zero(f.ring());
    for (j, d) in gradient(f).iter().enumerate() {
        h = h.add(&d.scale(&Rational::from_integer(beta[j].into())))?;
    }
    Ok(h)
}

fn one_run(
    f: &Polynomial<Rational>,
    config: &DetectorConfig,
    general: bool,
    k: usize,
) -> Result<RunRecord, DetectorError> {
    let start = Instant::now();
    let seed = run_seed(config.seed, k);
    let n = f.nvars();
    let mut sampler = Sampler::new(seed, config.coeff_bound);
    let mut rejected = Vec::new();
    while rejected.len() <= RETRY_BUDGET {
        let coeffs = SuperPolarCoefficients::sample(n, general, &mut sampler, seed);
        let attempt = || -> Result<(Option<ValueSet>, i64), DetectorError> {
            let w = super_polar_ideal(f, &coeffs)?;
            let (w, f_in, coords) = match &coeffs.beta {
                Some(beta) => {
                    let h = localizer(f, beta)?;
                    if h.is_zero() {
                        return Ok((None, i64::MAX));
                    }
                    let (w, t) = with_rabinowitsch(&w, &h)?;
                    let map: Vec<usize> = (0..n).map(|j| if j >= t { j + 1 } else { j }).collect();
                    let f_in = f.embed(w.ring(), &map)?;
                    (w, f_in, map)
                }
                None => (w, f.clone(), (0..n).collect()),
            };
            let dim = dimension_of(&w)?;
            if dim > 1 {
                return Ok((None, dim));
            }
            let values = nonproperness_values_in(&w, &f_in, &coords, config.tolerance)?;
            Ok((Some(values), dim))
        };
        let (values, dimension) = attempt()?;
        match values {
            Some(values) => {
                return Ok(RunRecord {
                    seed,
                    coefficients: RunCoefficients::SuperPolar(coeffs),
                    rejected_dimensions: rejected,
                    dimension,
                    values,
                    steps: Vec::new(),
                    millis: config.timings.then(|| start.elapsed().as_millis() as u64),
                });
            }
            None => rejected.push(dimension),
        }
    }
    Err(DetectorError::GuardExhausted { dims: rejected })
}

/// Super-polar method with `config.runs` independent runs, intersected.
pub fn run_super_polar(
    f: &Polynomial<Rational>,
    config: &DetectorConfig,
) -> Result<DetectionReport, DetectorError> {
    check_input(f, config)?;
    let finite = is_singular_locus_finite(f)?;
    let general = config.force_general || !finite;
    let runs = run_parallel(config.runs, |k| one_run(f, config, general, k))?;
    assemble(
        f,
        Method::SuperPolar,
        config,
        finite,
        general,
        runs,
        Vec::new(),
    )
}
