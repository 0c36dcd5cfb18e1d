mod common;

use common::poly;
use nkdetect::detector::sampling::Sampler;
use nkdetect::detector::{
    critical_values, intersect_runs, iterated_polar_run, run_iterated_polar, run_super_polar,
    DetectionReport, DetectorConfig, DetectorError,
};
use nkdetect::nonproper::{ValueFlag, DEFAULT_TOLERANCE};
use nkdetect::polyalg::{q, Matrix, Polynomial, Rational};
use nkdetect::univar::UnivariatePolynomial;

fn up(c: &[i64]) -> UnivariatePolynomial {
    UnivariatePolynomial::from_i64(c)
}

fn config(seed: u64) -> DetectorConfig {
    DetectorConfig::with_seed(seed)
}

fn assert_report_invariants(r: &DetectionReport) {
    assert!(!r.runs.is_empty());
    for run in &r.runs {
        assert!(run.dimension <= 1, "accepted dimension {}", run.dimension);
        assert!(run.rejected_dimensions.iter().all(|&d| d > 1));
        assert!(r.s_final.rho().divides(run.values.rho()));
        assert!(run.millis.is_none());
    }
    assert!(r.s_final.rho().is_canonical());
}

fn transformed(f: &Polynomial<Rational>, seed: u64) -> Polynomial<Rational> {
    let rows = Sampler::new(seed, 9).invertible_matrix(f.nvars(), 4);
    f.substitute_linear(&Matrix::from_i64_rows(&rows).unwrap())
        .unwrap()
}

#[test]
fn two_variable_example_any_seed() {
    let f = poly("x + x^2*y", "x,y");
    for seed in [0, 1, 42, 0xDEAD_BEEF] {
        let r = run_super_polar(&f, &config(seed)).unwrap();
        assert_report_invariants(&r);
        assert_eq!(r.s_final.rho(), &up(&[0, 1]), "seed {seed}");
        assert_eq!(r.s_final.rational_roots(), [q(0)]);
        assert!(r.singular_locus_finite);
        assert!(!r.general_case);
        assert!(r.critical_values.is_empty());
        assert_eq!(r.bounds.nk, Some(3));
        assert!(r.warnings.is_empty());
    }
}

#[test]
fn two_variable_example_iterated() {
    let f = poly("x + x^2*y", "x,y");
    let r = iterated_polar_run(&f, 3, &config(0)).unwrap();
    assert_eq!(r.runs.len(), 1);
    assert_eq!(r.runs[0].steps.len(), 1);
    assert_eq!(r.runs[0].steps[0].values.rho(), &up(&[0, 1]));
    assert_eq!(r.s_final.rho(), &up(&[0, 1]));
}

#[test]
fn three_variable_example() {
    let f = poly("x + x^2*y", "x,y,z");
    let it = run_iterated_polar(&f, &config(0)).unwrap();
    assert_report_invariants(&it);
    for run in &it.runs {
        let [first, second] = run.steps.as_slice() else {
            panic!("two slices expected");
        };
        assert!(first.values.is_empty());
        assert!(first.values.has_flag(ValueFlag::EmptyCurve));
        assert_eq!(second.values.rho(), &up(&[0, 1]));
    }
    assert_eq!(it.s_final.rho(), &up(&[0, 1]));

    let sp = run_super_polar(&f, &config(0)).unwrap();
    assert_report_invariants(&sp);
    assert!(sp.s_final.rational_roots().contains(&q(0)));
}

#[test]
fn negative_fixtures() {
    for (text, crit) in [("x", up(&[1])), ("x^2 + y^2", up(&[0, 1]))] {
        let f = poly(text, "x,y");
        for report in [
            run_super_polar(&f, &config(5)).unwrap(),
            run_iterated_polar(&f, &config(5)).unwrap(),
        ] {
            assert_report_invariants(&report);
            assert!(
                report.s_final.is_empty(),
                "{text}: {}",
                report.s_final.rho()
            );
            assert_eq!(report.critical_values.rho(), &crit, "{text}");
        }
    }
}

#[test]
fn critical_value_fixtures() {
    let cases: [(&str, &[i64]); 4] = [
        ("x^3 - 3*x + y^2", &[-4, 0, 1]),
        ("x^2 + y^2", &[0, 1]),
        ("x + x^2*y", &[1]),
        ("x^2*y^2 + x*y - 1", &[5, 9, 4]),
    ];
    for (text, rho) in cases {
        let v = critical_values(&poly(text, "x,y"), DEFAULT_TOLERANCE).unwrap();
        assert_eq!(v.rho(), &up(rho), "{text}");
    }
    assert!(matches!(
        critical_values(&poly("3", "x,y"), DEFAULT_TOLERANCE),
        Err(DetectorError::ConstantPolynomial)
    ));
}

#[test]
fn invalid_inputs_are_rejected() {
    assert_eq!(
        run_super_polar(&poly("4", "x,y"), &config(0)).unwrap_err(),
        DetectorError::ConstantPolynomial
    );
    assert_eq!(
        run_iterated_polar(&poly("x^2", "x"), &config(0)).unwrap_err(),
        DetectorError::TooFewVariables(1)
    );
    let none = DetectorConfig {
        runs: 0,
        ..config(0)
    };
    assert_eq!(
        run_super_polar(&poly("x*y", "x,y"), &none).unwrap_err(),
        DetectorError::NoRuns
    );
}

#[test]
fn values_are_invariant_under_linear_changes() {
    for text in ["x + x^2*y", "x", "x^2 + y^2", "x*y^2 + y"] {
        let f = poly(text, "x,y");
        let base = run_super_polar(&f, &config(1)).unwrap();
        for t in 0..3 {
            let g = transformed(&f, 100 + t);
            let r = run_super_polar(&g, &config(7 + t)).unwrap();
            assert_eq!(
                r.s_final.rho(),
                base.s_final.rho(),
                "{text} after change {t}"
            );
            let it = run_iterated_polar(&g, &config(7 + t)).unwrap();
            assert_eq!(
                it.s_final.rho(),
                base.s_final.rho(),
                "{text} iterated, change {t}"
            );
        }
    }
}

#[test]
fn values_shift_with_f() {
    for text in ["x + x^2*y", "x*y^2 + y", "x^3 - 3*x + y^2"] {
        let f = poly(text, "x,y");
        let g = f.add(&Polynomial::constant(f.ring(), q(5))).unwrap();
        for run in [run_super_polar, run_iterated_polar] {
            let a = run(&f, &config(2)).unwrap();
            let b = run(&g, &config(2)).unwrap();
            assert_eq!(
                b.s_final.rho(),
                &a.s_final.rho().shift_roots(&q(5)).canonical(),
                "{text}"
            );
            assert_eq!(
                b.critical_values.rho(),
                &a.critical_values.rho().shift_roots(&q(5)).canonical(),
                "{text}"
            );
        }
    }
}

#[test]
fn reports_are_deterministic() {
    let f = poly("x*y^2 + y", "x,y");
    let a = run_super_polar(&f, &config(9)).unwrap();
    let b = run_super_polar(&f, &config(9)).unwrap();
    assert_eq!(a, b);
    let c = run_iterated_polar(&f, &config(9)).unwrap();
    let d = run_iterated_polar(&f, &config(9)).unwrap();
    assert_eq!(c, d);
}

#[test]
fn timings_are_opt_in() {
    let f = poly("x + x^2*y", "x,y");
    let timed = DetectorConfig {
        timings: true,
        ..config(0)
    };
    let r = run_super_polar(&f, &timed).unwrap();
    assert!(r.runs.iter().all(|run| run.millis.is_some()));
}

#[test]
fn general_case_when_singular_locus_is_a_curve() {
    // Sing f = {x = 0} and f(0, y) = 0 is a curve of critical points
    let f = poly("x^2*y + x^2", "x,y");
    let r = run_super_polar(&f, &config(4)).unwrap();
    assert_report_invariants(&r);
    assert!(!r.singular_locus_finite);
    assert!(r.general_case);
    let forced = DetectorConfig {
        force_general: true,
        ..config(4)
    };
    let g = poly("x + x^2*y", "x,y");
    let a = run_super_polar(&g, &forced).unwrap();
    assert!(a.general_case);
    assert_eq!(a.s_final.rho(), &up(&[0, 1]));
}

#[test]
fn intersection_of_runs() {
    let rhos = [up(&[0, -1, 1]), up(&[0, -2, 1]), up(&[0, 0, 1])];
    assert_eq!(intersect_runs(&rhos).unwrap(), up(&[0, 1]));
    assert_eq!(intersect_runs(&[up(&[0, 0, 2])]).unwrap(), up(&[0, 1]));
    assert!(intersect_runs(&[]).is_err());
    assert!(intersect_runs(&[UnivariatePolynomial::zero()]).is_err());
}
