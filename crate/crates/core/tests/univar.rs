use nkdetect::polyalg::{q, Rational};
use nkdetect::univar::{
    approx_roots, gcd_univar, is_squarefree, lcm_univar, rational_roots, squarefree_part,
    UnivariatePolynomial,
};
use num_complex::Complex64;
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn up(c: &[i64]) -> UnivariatePolynomial {
    UnivariatePolynomial::from_i64(c)
}

fn nonzero_poly() -> impl Strategy<Value = UnivariatePolynomial> {
    prop::collection::vec(-9i64..=9, 1..=6)
        .prop_map(|c| up(&c))
        .prop_filter("nonzero", |p| !p.is_zero())
}

/// Product of `(z - r)^k` for small integer roots with multiplicities.
fn with_roots() -> impl Strategy<Value = (UnivariatePolynomial, Vec<i64>)> {
    prop::collection::vec((-6i64..=6, 1usize..=3), 1..=4).prop_map(|rs| {
        let mut p = UnivariatePolynomial::one();
        let mut roots: Vec<i64> = Vec::new();
        for (r, k) in rs {
            for _ in 0..k {
                p = p.mul(&up(&[-r, 1]));
            }
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
        roots.sort();
        (p, roots)
    })
}

/// `sum |a_i| |r|^i`, the scale against which residuals are measured.
fn scale_at(p: &UnivariatePolynomial, r: Complex64) -> f64 {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| c.to_f64().unwrap().abs() * r.norm().powi(i as i32))
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn gcd_divides_both(a in nonzero_poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let (a, b) = (a.mul(&c), b.mul(&c));
        let g = gcd_univar(&a, &b).unwrap();
        prop_assert!(g.divides(&a));
        prop_assert!(g.divides(&b));
        prop_assert!(c.divides(&g));
        prop_assert!(g.is_canonical());
        let l = lcm_univar(&a, &b).unwrap();
        prop_assert!(a.divides(&l) && b.divides(&l));
    }

    #[test]
    fn squarefree_part_is_idempotent((p, roots) in with_roots()) {
        let s = squarefree_part(&p).unwrap();
        prop_assert!(is_squarefree(&s));
        prop_assert_eq!(squarefree_part(&s).unwrap(), s.clone());
        prop_assert!(s.divides(&p));
        prop_assert_eq!(s.degree(), Some(roots.len()));
        let exact: Vec<Rational> = roots.iter().map(|&r| q(r)).collect();
        prop_assert_eq!(rational_roots(&s).unwrap(), exact.clone());
        prop_assert_eq!(rational_roots(&p).unwrap(), exact);
    }

    #[test]
    fn approximate_roots_have_small_residuals(p in nonzero_poly()) {
        prop_assume!(p.degree().unwrap_or(0) >= 1);
        let s = squarefree_part(&p).unwrap();
        let tol = 1e-10;
        let approx = approx_roots(&s, tol);
        prop_assert_eq!(approx.roots.len(), s.degree().unwrap());
        prop_assert!(approx.converged);
        for r in &approx.roots {
            prop_assert!(s.eval_complex(*r).norm() <= tol * scale_at(&s, *r));
        }
    }

    #[test]
    fn shifting_moves_rational_roots((p, roots) in with_roots(), c in -5i64..=5) {
        let shifted = squarefree_part(&p.shift_roots(&q(c))).unwrap();
        let expected: Vec<Rational> = roots.iter().map(|&r| q(r + c)).collect();
        prop_assert_eq!(rational_roots(&shifted).unwrap(), expected);
    }

    #[test]
    fn canonical_form_is_idempotent(p in nonzero_poly(), k in 1i64..20) {
        let c = p.scale(&Rational::new((-k).into(), 7.into())).canonical();
        prop_assert_eq!(c.canonical(), c.clone());
        prop_assert_eq!(c.clone(), p.canonical());
        prop_assert!(c.leading().unwrap() > &q(0));
    }
}

#[test]
fn documented_examples() {
    assert_eq!(
        gcd_univar(&up(&[0, -1, 1]), &up(&[0, -2, 1])).unwrap(),
        up(&[0, 1])
    );
    assert_eq!(
        gcd_univar(&up(&[2, 0, -4]), &UnivariatePolynomial::zero()).unwrap(),
        up(&[-1, 0, 2])
    );
    assert_eq!(
        gcd_univar(&up(&[-2, 0, 1]), &up(&[-3, 0, 1])).unwrap(),
        up(&[1])
    );
    assert!(gcd_univar(&UnivariatePolynomial::zero(), &UnivariatePolynomial::zero()).is_err());

    assert_eq!(squarefree_part(&up(&[0, 0, 1])).unwrap(), up(&[0, 1]));
    assert_eq!(
        squarefree_part(&up(&[0, 0, -1, 1])).unwrap(),
        up(&[0, -1, 1])
    );
    assert_eq!(squarefree_part(&up(&[-1, 0, 1])).unwrap(), up(&[-1, 0, 1]));
    assert!(squarefree_part(&UnivariatePolynomial::zero()).is_err());

    assert_eq!(
        rational_roots(&up(&[-1, 2])).unwrap(),
        [Rational::new(1.into(), 2.into())]
    );
    assert!(rational_roots(&up(&[-2, 0, 1])).unwrap().is_empty());
    assert_eq!(rational_roots(&up(&[0, -3, 1])).unwrap(), [q(0), q(3)]);

    let sqrt2 = approx_roots(&up(&[-2, 0, 1]), 1e-10);
    assert!(sqrt2.converged);
    let mut re: Vec<f64> = sqrt2.roots.iter().map(|r| r.re).collect();
    re.sort_by(f64::total_cmp);
    assert!((re[0] + std::f64::consts::SQRT_2).abs() < 1e-10);
    assert!((re[1] - std::f64::consts::SQRT_2).abs() < 1e-10);
    assert!(sqrt2.roots.iter().all(|r| r.im.abs() < 1e-10));

    let zero = approx_roots(&up(&[0, 1]), 1e-10);
    assert_eq!(zero.roots.len(), 1);
    assert!(zero.roots[0].norm() < 1e-10);

    let i = approx_roots(&up(&[1, 0, 1]), 1e-10);
    let mut im: Vec<f64> = i.roots.iter().map(|r| r.im).collect();
    im.sort_by(f64::total_cmp);
    assert!((im[0] + 1.0).abs() < 1e-10 && (im[1] - 1.0).abs() < 1e-10);
    assert!(i.roots.iter().all(|r| r.re.abs() < 1e-10));
}
