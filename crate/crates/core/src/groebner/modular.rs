//! Multi-modular search for the lowest element of an elimination ideal over
//! the rationals: images modulo word-size primes are combined by Chinese
//! remaindering, lifted by rational reconstruction and checked exactly.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::polyalg::{Fp, Monomial, Polynomial, Rational};

use super::{graded_basis, lowest_element_in, GroebnerBasis, GroebnerError, Ideal};

const PRIMES: [u64; 16] = [
    0x3FFFFFFFFFFFFFC7,
    0x3FFFFFFFFFFFFFA9,
    0x3FFFFFFFFFFFFF8B,
    0x3FFFFFFFFFFFFF71,
    0x3FFFFFFFFFFFFF67,
    0x3FFFFFFFFFFFFF59,
    0x3FFFFFFFFFFFFF55,
    0x3FFFFFFFFFFFFF3D,
    0x3FFFFFFFFFFFFF35,
    0x3FFFFFFFFFFFFEEF,
    0x3FFFFFFFFFFFFEE1,
    0x3FFFFFFFFFFFFEC3,
    0x3FFFFFFFFFFFFE45,
    0x3FFFFFFFFFFFFE1D,
    0x3FFFFFFFFFFFFE11,
    0x3FFFFFFFFFFFFDC1,
];

/// Primes in a row without any relation after which the search gives up.
const NO_RELATION_LIMIT: usize = 3;

enum Image {
    /// A denominator of the input vanishes modulo the prime.
    Bad,
    NoRelation,
    /// Monic relation as `(monomial, residue)` pairs, ascending.
    Relation(Vec<(Monomial, u64)>),
}

fn image<const P: u64>(
    ideal: &Ideal<Rational>,
    vars: &[usize],
    max_degree: u32,
) -> Result<Image, GroebnerError> {
    let mut gens = Vec::with_capacity(ideal.generators().len());
    for g in ideal.generators() {
        match g.map_coefficients(Fp::<P>::from_rational) {
            Some(p) => gens.push(p),
            None => return Ok(Image::Bad),
        }
    }
    let basis = graded_basis(&Ideal::new(ideal.ring(), gens)?)?;
    Ok(match lowest_element_in(&basis, vars, max_degree)? {
        None => Image::NoRelation,
        Some(p) => Image::Relation(p.terms().map(|(m, c)| (m.clone(), c.residue())).collect()),
    })
}

fn image_at(
    index: usize,
    ideal: &Ideal<Rational>,
    vars: &[usize],
    max_degree: u32,
) -> Result<Image, GroebnerError> {
    macro_rules! dispatch {
        ($($i:literal)*) => {
            match index {
                $($i => image::<{ PRIMES[$i] }>(ideal, vars, max_degree),)*
                _ => unreachable!("prime index out of range"),
            }
        };
    }
    dispatch!(0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15)
}

/// Residues of one support pattern combined over several primes.
struct Lift {
    support: Vec<Monomial>,
    values: Vec<BigInt>,
    modulus: BigInt,
    primes: usize,
    last: Option<Vec<Rational>>,
}

impl Lift {
    fn add(&mut self, residues: &[u64], p: u64) {
        let pb = BigInt::from(p);
        let inv = self.modulus.mod_floor(&pb).modpow(&(&pb - 2u32), &pb);
        for (v, &r) in self.values.iter_mut().zip(residues) {
            let delta = (BigInt::from(r) - &*v).mod_floor(&pb) * &inv % &pb;
            *v += &self.modulus * delta;
        }
        self.modulus *= &pb;
        self.primes += 1;
    }

    fn reconstruct(&self) -> Option<Vec<Rational>> {
        self.values
            .iter()
            .map(|v| rational_reconstruction(v, &self.modulus))
            .collect()
    }
}

/// `n/d ≡ a (mod m)` with `|n|, |d| <= sqrt(m/2)`, if it exists.
pub fn rational_reconstruction(a: &BigInt, m: &BigInt) -> Option<Rational> {
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if s1.is_zero() || s1.abs() > bound || !r1.gcd(&s1).is_one() {
        return None;
    }
    if s1.sign() == Sign::Minus {
        r1 = -r1;
        s1 = -s1;
    }
    Some(Rational::new(r1, s1))
}

/// Lowest element of `ideal ∩ Q[vars]` computed modulo several primes and
/// lifted to the rationals. A lifted candidate is only returned once it is
/// stable under an extra prime and lies in the ideal, which is checked
/// exactly with `basis` (a Gröbner basis of `ideal` in any order).
/// `Ok(None)` when the images show no relation of degree at most
/// `max_degree` or the coefficients are too large for the available primes.
pub fn lowest_element_modular(
    ideal: &Ideal<Rational>,
    basis: &GroebnerBasis<Rational>,
    vars: &[usize],
    max_degree: u32,
) -> Result<Option<Polynomial<Rational>>, GroebnerError> {
    if basis.ring() != ideal.ring() {
        return Err(crate::polyalg::PolyError::RingMismatch.into());
    }
    if basis.is_unit() {
        return Ok(Some(Polynomial::one(ideal.ring())));
    }
    let mut lifts: Vec<Lift> = Vec::new();
    let mut no_relation = 0;
    for (index, &prime) in PRIMES.iter().enumerate() {
        let terms = match image_at(index, ideal, vars, max_degree)? {
            Image::Bad => continue,
            Image::NoRelation => {
                no_relation += 1;
                if lifts.is_empty() && no_relation >= NO_RELATION_LIMIT {
                    return Ok(None);
                }
                continue;
            }
            Image::Relation(terms) => terms,
        };
        let support: Vec<Monomial> = terms.iter().map(|(m, _)| m.clone()).collect();
        let residues: Vec<u64> = terms.iter().map(|(_, r)| *r).collect();
        let k = match lifts.iter().position(|l| l.support == support) {
            Some(k) => k,
            None => {
                lifts.push(Lift {
                    values: vec![BigInt::zero(); support.len()],
                    support,
                    modulus: BigInt::one(),
                    primes: 0,
                    last: None,
                });
                lifts.len() - 1
            }
        };
        lifts[k].add(&residues, prime);
        // unlucky primes are rare, so follow the most frequent pattern
        let best = (0..lifts.len())
            .max_by_key(|&i| (lifts[i].primes, std::cmp::Reverse(lifts[i].support.len())))
            .expect("nonempty");
        let lift = &mut lifts[best];
        let Some(candidate) = lift.reconstruct() else {
            continue;
        };
        if lift.last.as_ref() != Some(&candidate) {
            lift.last = Some(candidate);
            continue;
        }
        let p = Polynomial::from_terms(ideal.ring(), lift.support.iter().cloned().zip(candidate))?;
        if basis.contains(&p) {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn reconstructs_small_fractions() {
        let m = BigInt::from(PRIMES[0]);
        for r in [q(3, 7), q(-5, 11), q(0, 1), q(123456, 1), q(-1, 9999)] {
            let image = BigInt::from(Fp::<{ PRIMES[0] }>::from_rational(&r).unwrap().residue());
            assert_eq!(rational_reconstruction(&image, &m), Some(r));
        }
    }

    #[test]
    fn large_fraction_needs_more_primes() {
        let big = Rational::new(BigInt::from(3u32).pow(60), BigInt::from(7u32).pow(20));
        let m = BigInt::from(PRIMES[0]);
        let image = BigInt::from(Fp::<{ PRIMES[0] }>::from_rational(&big).unwrap().residue());
        assert_ne!(rational_reconstruction(&image, &m), Some(big.clone()));
        let mut lift = Lift {
            support: vec![Monomial::one(1)],
            values: vec![BigInt::zero()],
            modulus: BigInt::one(),
            primes: 0,
            last: None,
        };
        macro_rules! add {
            ($($i:literal)*) => {
                $(lift.add(&[Fp::<{ PRIMES[$i] }>::from_rational(&big).unwrap().residue()], PRIMES[$i]);)*
            };
        }
        add!(0 1 2 3 4 5);
        assert_eq!(lift.reconstruct(), Some(vec![big]));
    }
}
