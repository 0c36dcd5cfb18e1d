//! Univariate polynomials over `Q`: gcd, squarefree part, rational roots and
//! numeric complex roots.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::polyalg::{Field, Monomial, Polynomial, Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UnivarError {
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("operation undefined on the zero polynomial")]
    ZeroInput,
    #[error("polynomial has degree < 1")]
    ConstantInput,
    #[error("polynomial involves variables other than the chosen one")]
    NotUnivariate,
}

/// Dense univariate polynomial, ascending coefficients, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UnivariatePolynomial {
    coeffs: Vec<Rational>,
}

impl UnivariatePolynomial {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = UnivariatePolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_i64(c)).collect())
    }

    pub fn zero() -> Self {
        UnivariatePolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `z - r`
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r.clone(), Rational::one()])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_i64(i as i64))
                .collect(),
        )
    }

    /// Euclidean division over `Q`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self), UnivarError> {
        let dd = d.degree().ok_or(UnivarError::ZeroInput)?;
        let lead_inv = d.leading().expect("nonzero").recip();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if sd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn eval(&self, z: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * z + c)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + to_f64(c))
    }

    /// `p(z - c)`: the roots move by `+c`.
    pub fn shift_roots(&self, c: &Rational) -> Self {
        let lin = Self::new(vec![-c.clone(), Rational::one()]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, a| {
            acc.mul(&lin).add(&Self::new(vec![a.clone()]))
        })
    }

    /// Primitive integer coefficients with positive leading coefficient.
    /// Nonzero constants become `1`; zero stays zero.
    pub fn canonical(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().expect("nonzero").is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        Self::new(
            ints.into_iter()
                .map(|c| Rational::from_integer(c / &g * &sign))
                .collect(),
        )
    }

    pub fn is_canonical(&self) -> bool {
        self == &self.canonical()
    }

    /// Integer coefficients of the canonical form, ascending.
    pub fn integer_coeffs(&self) -> Vec<BigInt> {
        self.canonical()
            .coeffs
            .iter()
            .map(|c| c.to_integer())
            .collect()
    }

    pub fn from_integers(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn divides(&self, other: &Self) -> bool {
        match other.div_rem(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }

    /// Converts a multivariate polynomial involving only `var`.
    pub fn from_multivariate(p: &Polynomial<Rational>, var: usize) -> Result<Self, UnivarError> {
        let mut coeffs = vec![Rational::zero(); p.degree_in(var).unwrap_or(0) as usize + 1];
        for (m, c) in p.terms() {
            if m.support().any(|v| v != var) {
                return Err(UnivarError::NotUnivariate);
            }
            coeffs[m.exponent(var) as usize] = c.clone();
        }
        Ok(Self::new(coeffs))
    }

    pub fn to_multivariate(&self, ring: &std::sync::Arc<Ring>, var: usize) -> Polynomial<Rational> {
        Polynomial::from_terms(
            ring,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(ring.nvars(), var, i as u32), c.clone())),
        )
        .expect("variable index in range")
    }
}

fn to_f64(c: &Rational) -> f64 {
    c.to_f64().unwrap_or_else(|| {
        // very large numerators/denominators: go through the exponent
        let n = c.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = c.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

impl fmt::Debug for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("z"))
    }
}

impl UnivariatePolynomial {
    pub fn display_in(&self, var: &str) -> String {
        let ring = Ring::new([var]).expect("single variable");
        self.to_multivariate(&ring, 0).to_string()
    }
}

/// Renders in the variable `z`.
impl fmt::Display for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("z"))
    }
}

/// Canonical greatest common divisor.
pub fn gcd_univar(
    p: &UnivariatePolynomial,
    q: &UnivariatePolynomial,
) -> Result<UnivariatePolynomial, UnivarError> {
    if p.is_zero() && q.is_zero() {
        return Err(UnivarError::BothZero);
    }
    let (mut a, mut b) = (p.canonical(), q.canonical());
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b)?;
        a = b;
        b = r.canonical();
    }
    Ok(a.canonical())
}

/// Least common multiple, canonical.
pub fn lcm_univar(
    p: &UnivariatePolynomial,
    q: &UnivariatePolynomial,
) -> Result<UnivariatePolynomial, UnivarError> {
    if p.is_zero() || q.is_zero() {
        return Err(UnivarError::ZeroInput);
    }
    let g = gcd_univar(p, q)?;
    let (quot, _) = p.mul(q).div_rem(&g)?;
    Ok(quot.canonical())
}

/// `p / gcd(p, p')`, canonical.
pub fn squarefree_part(p: &UnivariatePolynomial) -> Result<UnivariatePolynomial, UnivarError> {
    if p.is_zero() {
        return Err(UnivarError::ZeroInput);
    }
    if p.is_constant() {
        return Ok(UnivariatePolynomial::one());
    }
    let g = gcd_univar(p, &p.derivative())?;
    let (quot, _) = p.div_rem(&g)?;
    Ok(quot.canonical())
}

pub fn is_squarefree(p: &UnivariatePolynomial) -> bool {
    !p.is_zero()
        && gcd_univar(p, &p.derivative())
            .map(|g| g.is_constant())
            .unwrap_or(false)
}

/// Divisors of `|n|` if `n` factors completely by trial division up to
/// `limit`, positive and sorted.
fn divisors(n: &BigInt, limit: u64) -> Option<Vec<BigInt>> {
    let mut n = n.abs();
    if n.is_zero() {
        return None;
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut p = 2u64;
    while p <= limit {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        let mut e = 0;
        while (&n % &bp).is_zero() {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            factors.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !n.is_one() {
        let bp = BigInt::from(p);
        if &bp * &bp <= n {
            return None; // cofactor may be composite
        }
        factors.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (f, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..e {
                acc *= &f;
                next.push(acc.clone());
            }
        }
        divs = next;
    }
    divs.sort();
    Some(divs)
}

const TRIAL_LIMIT: u64 = 1_000_000;
const MAX_CANDIDATES: usize = 200_000;

/// All rational roots (each listed once, ascending).
pub fn rational_roots(p: &UnivariatePolynomial) -> Result<Vec<Rational>, UnivarError> {
    if p.is_zero() {
        return Err(UnivarError::ZeroInput);
    }
    let mut sq = squarefree_part(p)?;
    let mut roots = Vec::new();
    if sq.coeff(0).is_zero() {
        roots.push(Rational::zero());
        sq = sq
            .div_rem(&UnivariatePolynomial::from_i64(&[0, 1]))?
            .0
            .canonical();
    }
    if sq.degree().unwrap_or(0) >= 1 {
        let ints = sq.integer_coeffs();
        let a0 = &ints[0];
        let an = ints.last().expect("nonzero");
        let exact = match (divisors(a0, TRIAL_LIMIT), divisors(an, TRIAL_LIMIT)) {
            (Some(ps), Some(qs)) if ps.len().saturating_mul(qs.len()) <= MAX_CANDIDATES => {
                let mut found = Vec::new();
                for num in &ps {
                    for den in &qs {
                        if !num.gcd(den).is_one() {
                            continue;
                        }
                        for s in [1i32, -1] {
                            let r = Rational::new(num * BigInt::from(s), den.clone());
                            if sq.eval(&r).is_zero() {
                                found.push(r);
                            }
                        }
                    }
                }
                Some(found)
            }
            _ => None,
        };
        match exact {
            Some(found) => roots.extend(found),
            None => roots.extend(numeric_rational_candidates(&sq)),
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

/// Fallback when the end coefficients cannot be factored: round each real
/// numeric root to a rational with denominator dividing the leading
/// coefficient and keep exact hits.
fn numeric_rational_candidates(p: &UnivariatePolynomial) -> Vec<Rational> {
    let ints = p.integer_coeffs();
    let an = ints.last().expect("nonzero").abs();
    let approx = approx_roots(p, 1e-12);
    let mut out = Vec::new();
    for r in approx.roots {
        if r.im.abs() > 1e-6 * (1.0 + r.re.abs()) {
            continue;
        }
        let scaled = r.re * an.to_f64().unwrap_or(f64::INFINITY);
        if !scaled.is_finite() {
            continue;
        }
        for delta in [-1.0, 0.0, 1.0] {
            let Some(num) = BigInt::from_f64_round(scaled.round() + delta) else {
                continue;
            };
            let cand = Rational::new(num, an.clone());
            if p.eval(&cand).is_zero() {
                out.push(cand);
            }
        }
    }
    out
}

trait FromF64Round: Sized {
    fn from_f64_round(v: f64) -> Option<Self>;
}

impl FromF64Round for BigInt {
    fn from_f64_round(v: f64) -> Option<Self> {
        num_traits::FromPrimitive::from_f64(v)
    }
}

/// Numeric roots and whether the iteration converged.
#[derive(Clone, Debug, PartialEq)]
pub struct ApproxRoots {
    pub roots: Vec<Complex64>,
    pub converged: bool,
}

pub const ABERTH_MAX_ITER: usize = 200;

/// Simultaneous (Aberth-Ehrlich) iteration. Starting points sit on a circle
/// of radius `1 + max |a_i / a_n|` at fixed angular offsets, so the output is
/// deterministic. Roots are sorted by real then imaginary part.
pub fn approx_roots(p: &UnivariatePolynomial, tolerance: f64) -> ApproxRoots {
    let Some(deg) = p.degree() else {
        return ApproxRoots {
            roots: Vec::new(),
            converged: true,
        };
    };
    if deg == 0 {
        return ApproxRoots {
            roots: Vec::new(),
            converged: true,
        };
    }
    let monic = p.scale(&p.leading().expect("nonzero").recip());
    let coeffs: Vec<Complex64> = monic
        .coeffs
        .iter()
        .map(|c| Complex64::new(to_f64(c), 0.0))
        .collect();
    let deriv: Vec<Complex64> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * i as f64)
        .collect();
    let horner = |cs: &[Complex64], z: Complex64| {
        cs.iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |a, c| a * z + c)
    };
    let radius = 1.0
        + coeffs[..deg]
            .iter()
            .map(|c| c.norm())
            .fold(0.0f64, f64::max);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (deg as f64) + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect();
    let scale_at = |w: Complex64| {
        coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.norm() * w.norm().powi(i as i32))
            .sum::<f64>()
    };
    let mut converged = false;
    for _ in 0..ABERTH_MAX_ITER {
        let mut max_step = 0.0f64;
        for i in 0..deg {
            let pv = horner(&coeffs, z[i]);
            if pv.norm() == 0.0 {
                continue;
            }
            let ratio = pv / horner(&deriv, z[i]);
            let repulsion: Complex64 = (0..deg)
                .filter(|&j| j != i)
                .map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j]))
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / (1.0 + z[i].norm()));
            }
        }
        let residual_ok = z
            .iter()
            .all(|&w| horner(&coeffs, w).norm() <= tolerance * scale_at(w).max(1.0));
        if max_step <= tolerance * 1e-2 || (residual_ok && max_step <= tolerance) {
            converged = residual_ok;
            break;
        }
    }
    if !converged {
        converged = z
            .iter()
            .all(|&w| horner(&coeffs, w).norm() <= tolerance * scale_at(w).max(1.0));
    }
    for w in z.iter_mut() {
        // snap negligible parts so that real roots print as real
        if w.im.abs() <= tolerance * (1.0 + w.re.abs()) {
            w.im = 0.0;
        }
        if w.re.abs() <= tolerance * (1.0 + w.im.abs()) {
            w.re = 0.0;
        }
    }
    z.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.im.partial_cmp(&b.im).unwrap_or(std::cmp::Ordering::Equal))
    });
    ApproxRoots {
        roots: z,
        converged,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(c: &[i64]) -> UnivariatePolynomial {
        UnivariatePolynomial::from_i64(c)
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn gcd_examples() {
        // z(z-1), z(z-2)
        assert_eq!(
            gcd_univar(&up(&[0, -1, 1]), &up(&[0, -2, 1])).unwrap(),
            up(&[0, 1])
        );
        let p = up(&[6, 0, -3]);
        assert_eq!(
            gcd_univar(&p, &UnivariatePolynomial::zero()).unwrap(),
            up(&[-2, 0, 1])
        );
        assert_eq!(
            gcd_univar(&up(&[-2, 0, 1]), &up(&[-3, 0, 1])).unwrap(),
            up(&[1])
        );
        assert_eq!(
            gcd_univar(&UnivariatePolynomial::zero(), &UnivariatePolynomial::zero()),
            Err(UnivarError::BothZero)
        );
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_part(&up(&[0, 0, 1])).unwrap(), up(&[0, 1]));
        // z^2 (z - 1) = z^3 - z^2
        assert_eq!(
            squarefree_part(&up(&[0, 0, -1, 1])).unwrap(),
            up(&[0, -1, 1])
        );
        assert_eq!(squarefree_part(&up(&[-1, 0, 1])).unwrap(), up(&[-1, 0, 1]));
        assert_eq!(
            squarefree_part(&UnivariatePolynomial::zero()),
            Err(UnivarError::ZeroInput)
        );
    }

    #[test]
    fn rational_root_examples() {
        assert_eq!(rational_roots(&up(&[-1, 2])).unwrap(), vec![r(1, 2)]);
        assert!(rational_roots(&up(&[-2, 0, 1])).unwrap().is_empty());
        assert_eq!(
            rational_roots(&up(&[0, -3, 1])).unwrap(),
            vec![r(0, 1), r(3, 1)]
        );
        assert_eq!(
            rational_roots(&up(&[-4, 0, 1])).unwrap(),
            vec![r(-2, 1), r(2, 1)]
        );
    }

    #[test]
    fn rational_roots_with_unfactorable_constant() {
        // (z - p/3)(z^2 + 1) with p a prime far above the trial bound squared
        let p: i64 = 1_000_000_000_039;
        let lin = UnivariatePolynomial::new(vec![r(-p, 3), Rational::one()]);
        let poly = lin.mul(&up(&[1, 0, 1]));
        // the large prime makes |a0| = p, fully factorable as a single large
        // cofactor only if it exceeds the trial limit squared, which it does
        let roots = rational_roots(&poly).unwrap();
        assert_eq!(roots, vec![r(p, 3)]);
    }

    #[test]
    fn approx_root_examples() {
        let s2 = approx_roots(&up(&[-2, 0, 1]), 1e-10);
        assert!(s2.converged);
        assert_eq!(s2.roots.len(), 2);
        assert!((s2.roots[0].re + std::f64::consts::SQRT_2).abs() < 1e-10);
        assert!((s2.roots[1].re - std::f64::consts::SQRT_2).abs() < 1e-10);

        let z = approx_roots(&up(&[0, 1]), 1e-10);
        assert_eq!(z.roots, vec![Complex64::new(0.0, 0.0)]);

        let i = approx_roots(&up(&[1, 0, 1]), 1e-10);
        assert!(i.converged);
        assert!((i.roots[0] - Complex64::new(0.0, -1.0)).norm() < 1e-10);
        assert!((i.roots[1] - Complex64::new(0.0, 1.0)).norm() < 1e-10);
    }

    #[test]
    fn shift_moves_roots() {
        // z(z-1) shifted by 5 -> (z-5)(z-6)
        let p = up(&[0, -1, 1]).shift_roots(&r(5, 1));
        assert_eq!(p, up(&[30, -11, 1]));
    }

    #[test]
    fn multivariate_roundtrip() {
        let ring = Ring::new(["x", "z"]).unwrap();
        let p = up(&[3, 0, -2]);
        let m = p.to_multivariate(&ring, 1);
        assert_eq!(UnivariatePolynomial::from_multivariate(&m, 1).unwrap(), p);
        let x = Polynomial::<Rational>::var(&ring, 0);
        assert_eq!(
            UnivariatePolynomial::from_multivariate(&x, 1),
            Err(UnivarError::NotUnivariate)
        );
    }
}
