use std::collections::BTreeSet;
use std::time::Instant;

use crate::groebner::{dimension_of, with_rabinowitsch, Ideal};
use crate::nonproper::{nonproperness_values_in, ValueFlag, ValueSet};
use crate::polyalg::{Matrix, Polynomial, Rational};
use crate::univar::{lcm_univar, UnivariatePolynomial};

use super::sampling::{run_seed, Sampler};
use super::{
    assemble, check_input, gradient, is_singular_locus_finite, run_parallel, DetectionReport,
    DetectorConfig, DetectorError, Method, RunCoefficients, RunRecord, RETRY_BUDGET,
};

/// Entry bound of the random coordinate change.
pub const MATRIX_ENTRY_BOUND: i64 = 9;

/// Random data of one iterated-polar run: the coordinate change `T` (so the
/// method works with `f ∘ T`) and one localization vector per slice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IteratedPolarCoefficients {
    pub matrix: Vec<Vec<i64>>,
    /// `betas[s]` has `n - s` entries.
    pub betas: Vec<Vec<i64>>,
    pub seed: u64,
}

impl IteratedPolarCoefficients {
    pub fn sample(n: usize, sampler: &mut Sampler, seed: u64) -> Self {
        let matrix = sampler.invertible_matrix(n, MATRIX_ENTRY_BOUND);
        let betas = (0..n - 1).map(|s| sampler.nonzero_vec(n - s)).collect();
        IteratedPolarCoefficients {
            matrix,
            betas,
            seed,
        }
    }
}

/// Result of slice `step` (1-based): the polar curve of `f_{step-1}` with
/// respect to its first coordinate.
#[derive(Debug, Clone, PartialEq)]
pub struct StepRecord {
    pub step: usize,
    /// Dimension of the localized polar ideal; `-1` when it is the unit ideal.
    pub dimension: i64,
    pub values: ValueSet,
}

enum StepOutcome {
    Done(StepRecord),
    TooLarge(i64),
}

fn polar_step(
    slice: &Polynomial<Rational>,
    beta: &[i64],
    step: usize,
    tolerance: f64,
) -> Result<StepOutcome, DetectorError> {
    let m = slice.nvars();
    if slice.is_constant() {
        return Ok(StepOutcome::Done(StepRecord {
            step,
            dimension: -1,
            values: ValueSet::empty(BTreeSet::from([ValueFlag::EmptyCurve])),
        }));
    }
    let grad = gradient(slice);
    let polar = Ideal::new(slice.ring(), grad[1..].to_vec())?;
    let mut h = Polynomial::zero(slice.ring());
    for (j, d) in grad.iter().enumerate() {
        h = h.add(&d.scale(&Rational::from_integer(beta[j].into())))?;
    }
    if h.is_zero() {
        return Ok(StepOutcome::TooLarge(i64::MAX));
    }
    let (w, t) = with_rabinowitsch(&polar, &h)?;
    let dimension = dimension_of(&w)?;
    if dimension > 1 {
        return Ok(StepOutcome::TooLarge(dimension));
    }
    let values = if dimension < 0 {
        ValueSet::empty(BTreeSet::from([ValueFlag::EmptyCurve]))
    } else {
        let map: Vec<usize> = (0..m).map(|j| if j >= t { j + 1 } else { j }).collect();
        let f_in = slice.embed(w.ring(), &map)?;
        nonproperness_values_in(&w, &f_in, &map, tolerance)?
    };
    Ok(StepOutcome::Done(StepRecord {
        step,
        dimension,
        values,
    }))
}

fn one_run(
    f: &Polynomial<Rational>,
    config: &DetectorConfig,
    seed: u64,
) -> Result<RunRecord, DetectorError> {
    let start = Instant::now();
    let n = f.nvars();
    let mut sampler = Sampler::new(seed, config.coeff_bound);
    let mut rejected = Vec::new();
    'attempt: while rejected.len() <= RETRY_BUDGET {
        let coeffs = IteratedPolarCoefficients::sample(n, &mut sampler, seed);
        let t = Matrix::<Rational>::from_i64_rows(&coeffs.matrix)?;
        let mut slice = f.substitute_linear(&t)?;
        let mut steps = Vec::with_capacity(n - 1);
        for s in 0..n - 1 {
            if s > 0 {
                slice = slice.restrict_hyperplane(0);
            }
            match polar_step(&slice, &coeffs.betas[s], s + 1, config.tolerance)? {
                StepOutcome::Done(rec) => steps.push(rec),
                StepOutcome::TooLarge(dim) => {
                    rejected.push(dim);
                    continue 'attempt;
                }
            }
        }
        let mut rho = UnivariatePolynomial::one();
        let mut flags = BTreeSet::new();
        for rec in &steps {
            rho = lcm_univar(&rho, rec.values.rho())?;
            if rec.values.has_flag(ValueFlag::VerticalComponent) {
                flags.insert(ValueFlag::VerticalComponent);
            }
        }
        if steps
            .iter()
            .all(|r| r.values.has_flag(ValueFlag::EmptyCurve))
        {
            flags.insert(ValueFlag::EmptyCurve);
        }
        let values = ValueSet::from_rho(&rho, flags, config.tolerance)?;
        return Ok(RunRecord {
            seed,
            dimension: steps.iter().map(|r| r.dimension).max().unwrap_or(-1),
            coefficients: RunCoefficients::IteratedPolar(coeffs),
            rejected_dimensions: rejected,
            values,
            steps,
            millis: config.timings.then(|| start.elapsed().as_millis() as u64),
        });
    }
    Err(DetectorError::GuardExhausted { dims: rejected })
}

/// One iterated-polar run with the given seed.
pub fn iterated_polar_run(
    f: &Polynomial<Rational>,
    seed: u64,
    config: &DetectorConfig,
) -> Result<DetectionReport, DetectorError> {
    let config = DetectorConfig {
        seed,
        runs: 1,
        ..config.clone()
    };
    run_iterated_polar(f, &config)
}

/// Iterated-polar method with `config.runs` independent coordinate changes;
/// each run unions its slices, and runs are intersected.
pub fn run_iterated_polar(
    f: &Polynomial<Rational>,
    config: &DetectorConfig,
) -> Result<DetectionReport, DetectorError> {
    check_input(f, config)?;
    let finite = is_singular_locus_finite(f)?;
    let runs = run_parallel(config.runs, |k| {
        one_run(f, config, run_seed(config.seed, k))
    })?;
    assemble(
        f,
        Method::IteratedPolar,
        config,
        finite,
        true,
        runs,
        Vec::new(),
    )
}
