#![allow(dead_code)]

use std::sync::Arc;

use nkdetect::cli::read_polynomial;
use nkdetect::groebner::{eliminate, Ideal};
use nkdetect::polyalg::{q, Monomial, Polynomial, Rational, Ring};
use nkdetect::univar::{rational_roots, UnivariatePolynomial};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn ring(names: &[&str]) -> Arc<Ring> {
    Ring::new(names.iter().copied()).unwrap()
}

pub fn poly(text: &str, vars: &str) -> Polynomial<Rational> {
    read_polynomial(text, Some(vars)).unwrap()
}

pub fn from_terms(r: &Arc<Ring>, terms: &[(Vec<u32>, i64)]) -> Polynomial<Rational> {
    Polynomial::from_terms(
        r,
        terms
            .iter()
            .map(|(e, c)| (Monomial::from_exponents(e.clone()), q(*c))),
    )
    .unwrap()
}

/// Terms with exponents below `max_exp` in each of `nvars` variables.
pub fn terms(
    nvars: usize,
    max_exp: u32,
    max_terms: usize,
    coeff: i64,
) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec(
        (prop::collection::vec(0..max_exp, nvars), -coeff..=coeff),
        0..=max_terms,
    )
}

/// Terms of total degree at most `deg`.
pub fn bounded_terms(
    nvars: usize,
    deg: u32,
    max_terms: usize,
    coeff: i64,
) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec(
        (prop::collection::vec(0..=deg, nvars), -coeff..=coeff),
        1..=max_terms,
    )
    .prop_map(move |ts| {
        ts.into_iter()
            .filter(|(e, _)| e.iter().sum::<u32>() <= deg)
            .collect()
    })
}

/// Determinant by fraction-free Bareiss elimination.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m[k][k] == BigInt::from(0) {
            let Some(r) = (k + 1..n).find(|&r| m[r][k] != BigInt::from(0)) else {
                return BigInt::from(0);
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Coefficients of a univariate integer polynomial, constant term first.
pub type IntPoly = Vec<BigInt>;

fn ip_trim(mut p: IntPoly) -> IntPoly {
    while p.last().is_some_and(|c| *c == BigInt::from(0)) {
        p.pop();
    }
    p
}

fn ip_add(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let n = a.len().max(b.len());
    ip_trim(
        (0..n)
            .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default())
            .collect(),
    )
}

fn ip_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::from(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ip_trim(out)
}

/// Determinant with entries in `Z[t]` by cofactor expansion; fine for the
/// small Sylvester matrices used in tests.
pub fn poly_det(m: &[Vec<IntPoly>]) -> IntPoly {
    let n = m.len();
    if n == 0 {
        return vec![BigInt::from(1)];
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc: IntPoly = Vec::new();
    for j in 0..n {
        if m[0][j].is_empty() {
            continue;
        }
        let minor: Vec<Vec<IntPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let mut term = ip_mul(&m[0][j], &poly_det(&minor));
        if j % 2 == 1 {
            term = term.into_iter().map(|c| -c).collect();
        }
        acc = ip_add(&acc, &term);
    }
    acc
}

/// `res_x(a, b)` for `a, b` in `Z[x, y]` given as `(deg_x, deg_y, coeff)`
/// triples, returned as a polynomial in `y`.
pub fn sylvester_resultant(a: &[(u32, u32, i64)], b: &[(u32, u32, i64)]) -> IntPoly {
    let coeffs = |p: &[(u32, u32, i64)]| -> Vec<IntPoly> {
        let dx = p
            .iter()
            .filter(|t| t.2 != 0)
            .map(|t| t.0)
            .max()
            .unwrap_or(0) as usize;
        let mut out = vec![Vec::new(); dx + 1];
        for &(i, j, c) in p {
            let mut mono = vec![BigInt::from(0); j as usize + 1];
            mono[j as usize] = BigInt::from(c);
            out[i as usize] = ip_add(&out[i as usize], &ip_trim(mono));
        }
        while out.len() > 1 && out.last().is_some_and(Vec::is_empty) {
            out.pop();
        }
        out
    };
    let ca = coeffs(a);
    let cb = coeffs(b);
    let (m, n) = (ca.len() - 1, cb.len() - 1);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for k in 0..n {
        let mut row = vec![Vec::new(); size];
        for (i, c) in ca.iter().rev().enumerate() {
            row[k + i] = c.clone();
        }
        rows.push(row);
    }
    for k in 0..m {
        let mut row = vec![Vec::new(); size];
        for (i, c) in cb.iter().rev().enumerate() {
            row[k + i] = c.clone();
        }
        rows.push(row);
    }
    poly_det(&rows)
}

/// Random polynomial of total degree at most `deg` with at most `nterms` terms.
pub fn random_poly(
    rng: &mut ChaCha8Rng,
    r: &Arc<Ring>,
    deg: u32,
    nterms: usize,
    coeff: i64,
) -> Polynomial<Rational> {
    let n = r.nvars();
    loop {
        let terms: Vec<(Vec<u32>, i64)> = (0..rng.gen_range(1..=nterms))
            .map(|_| {
                let mut e = vec![0u32; n];
                for _ in 0..rng.gen_range(0..=deg) {
                    e[rng.gen_range(0..n)] += 1;
                }
                (e, rng.gen_range(-coeff..=coeff))
            })
            .collect();
        let p = from_terms(r, &terms);
        if !p.is_constant() {
            return p;
        }
    }
}

pub fn random_ideal(rng: &mut ChaCha8Rng) -> Ideal<Rational> {
    let names = ["x", "y", "z"];
    let r = Ring::new(names[..rng.gen_range(1..=3)].iter().copied()).unwrap();
    let gens = (0..rng.gen_range(1..=3))
        .map(|_| random_poly(rng, &r, 3, 4, 5))
        .collect();
    Ideal::new(&r, gens).unwrap()
}

/// Bivariate pair of degree at most 3 with coefficients in `[-5, 5]`,
/// both involving `x` (variable 0).
pub fn random_pair(
    rng: &mut ChaCha8Rng,
    r: &Arc<Ring>,
) -> (Polynomial<Rational>, Polynomial<Rational>) {
    loop {
        let a = random_poly(rng, r, 3, 5, 5);
        let b = random_poly(rng, r, 3, 5, 5);
        if a.involves(0) && b.involves(0) {
            return (a, b);
        }
    }
}

fn triples(p: &Polynomial<Rational>) -> Vec<(u32, u32, i64)> {
    p.terms()
        .map(|(m, c)| {
            let c: i64 = c.to_integer().try_into().unwrap();
            (m.exponent(0), m.exponent(1), c)
        })
        .collect()
}

/// Checks that the generator of `<a, b> ∩ Q[y]` divides `res_x(a, b)` and
/// that its rational roots are roots of the resultant. `Ok(false)` when the
/// resultant vanishes (common factor), so there is nothing to compare.
pub fn check_against_resultant(
    a: &Polynomial<Rational>,
    b: &Polynomial<Rational>,
) -> Result<bool, String> {
    let res = UnivariatePolynomial::from_integers(&sylvester_resultant(&triples(a), &triples(b)));
    if res.is_zero() {
        return Ok(false);
    }
    let ideal = Ideal::new(a.ring(), vec![a.clone(), b.clone()]).map_err(|e| e.to_string())?;
    let elim = eliminate(&ideal, &[1]).map_err(|e| e.to_string())?;
    let [g] = elim.as_slice() else {
        return Err(format!("{a}, {b}: {} elimination generators", elim.len()));
    };
    let g = UnivariatePolynomial::from_multivariate(g, 1).map_err(|e| e.to_string())?;
    if !g.divides(&res) {
        return Err(format!("{a}, {b}: {g} does not divide {res}"));
    }
    for z in rational_roots(&g).map_err(|e| e.to_string())? {
        if !res.eval(&z).is_zero() {
            return Err(format!("{a}, {b}: root {z} of {g} is not a root of {res}"));
        }
    }
    Ok(true)
}
