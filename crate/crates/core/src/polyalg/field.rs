//! Coefficient fields.
//!
//! Two instances are provided: exact rationals ([`Rational`]) and prime
//! fields ([`Fp`]). Every algorithm above this layer is generic over
//! [`Field`], so the same code paths run over `Q` and over `F_p`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// A commutative field usable as polynomial coefficients.
///
/// `Integral` is the coefficient ring the reduction engine actually works
/// in: for `Q` that is `Z` (fraction-free reduction on primitive integer
/// polynomials), for a prime field it is the field itself.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    type Integral: Integral;

    fn inv(&self) -> Option<Self>;

    fn from_i64(v: i64) -> Self;

    /// Scales a coefficient list by a common nonzero factor so that every
    /// entry lands in the integral ring.
    fn clear_denominators(coeffs: &[Self]) -> Vec<Self::Integral>;

    fn from_integral(c: &Self::Integral) -> Self;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }

    /// Used only for rendering (`x - y` rather than `x + -1*y`).
    fn is_negative(&self) -> bool {
        false
    }
}

/// Coefficient ring of the fraction-free reduction engine.
pub trait Integral: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;

    /// Returns `(a, b)` such that `a * target - b * reducer == 0`, with `a`
    /// as small as possible.
    fn cofactors(target: &Self, reducer: &Self) -> (Self, Self);

    fn mul(&self, other: &Self) -> Self;

    /// `a * x - b * y`
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Self;

    /// `-(self * y)`
    fn neg_mul(&self, y: &Self) -> Self;

    /// Brings a coefficient list (leading coefficient first) into canonical
    /// form: primitive with positive leading coefficient over `Z`, monic over
    /// a field.
    fn normalize(coeffs: &mut [Self]);

    /// Common factor that could be stripped from the list without changing
    /// the ideal; `None` when it is trivial.
    fn content(coeffs: &[Self]) -> Option<Self>;

    fn div_exact(&self, d: &Self) -> Self;
}

impl Field for Rational {
    type Integral = BigInt;

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn clear_denominators(coeffs: &[Self]) -> Vec<BigInt> {
        let lcm = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect()
    }

    fn from_integral(c: &BigInt) -> Self {
        Rational::from_integer(c.clone())
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

impl Integral for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    fn cofactors(target: &Self, reducer: &Self) -> (Self, Self) {
        let g = target.gcd(reducer);
        let (mut a, mut b) = (reducer / &g, target / &g);
        if a.is_negative() {
            a = -a;
            b = -b;
        }
        (a, b)
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Self {
        let ax = if One::is_one(a) { x.clone() } else { a * x };
        if One::is_one(b) {
            ax - y
        } else {
            ax - b * y
        }
    }

    fn neg_mul(&self, y: &Self) -> Self {
        -(self * y)
    }

    fn normalize(coeffs: &mut [Self]) {
        if coeffs.is_empty() {
            return;
        }
        let negate = coeffs[0].is_negative();
        let g = Self::content(coeffs);
        for c in coeffs.iter_mut() {
            if let Some(g) = &g {
                *c = &*c / g;
            }
            if negate {
                *c = -&*c;
            }
        }
    }

    fn content(coeffs: &[Self]) -> Option<Self> {
        let mut g = BigInt::zero();
        for c in coeffs {
            g = g.gcd(c);
            if One::is_one(&g) {
                return None;
            }
        }
        if Zero::is_zero(&g) || One::is_one(&g) {
            None
        } else {
            Some(g)
        }
    }

    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

/// Element of the prime field `Z/PZ` for an odd prime `P < 2^62`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u64> {
    residue: u64,
}

impl<const P: u64> Fp<P> {
    pub const MODULUS: u64 = P;

    pub fn new(v: u64) -> Self {
        Fp { residue: v % P }
    }

    pub fn residue(self) -> u64 {
        self.residue
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Image of a rational under reduction mod `P`; `None` when the
    /// denominator vanishes mod `P`.
    pub fn from_rational(r: &Rational) -> Option<Self> {
        let p = BigInt::from(P);
        let num = r.numer().mod_floor(&p);
        let den = r.denom().mod_floor(&p);
        let den = Fp::<P>::new(u64::try_from(den).ok()?);
        let num = Fp::<P>::new(u64::try_from(num).ok()?);
        den.inv().map(|d| num * d)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.residue, P)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp { residue: 0 }
    }
    fn is_zero(&self) -> bool {
        self.residue == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp { residue: 1 }
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.residue + rhs.residue;
        Fp {
            residue: if s >= P { s - P } else { s },
        }
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        if self.residue >= rhs.residue {
            Fp {
                residue: self.residue - rhs.residue,
            }
        } else {
            Fp {
                residue: self.residue + P - rhs.residue,
            }
        }
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp {
            residue: ((self.residue as u128 * rhs.residue as u128) % P as u128) as u64,
        }
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        if self.residue == 0 {
            self
        } else {
            Fp {
                residue: P - self.residue,
            }
        }
    }
}

impl<const P: u64> Field for Fp<P> {
    type Integral = Fp<P>;

    fn inv(&self) -> Option<Self> {
        if self.residue == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn from_i64(v: i64) -> Self {
        let r = (v as i128).rem_euclid(P as i128) as u64;
        Fp { residue: r }
    }

    fn clear_denominators(coeffs: &[Self]) -> Vec<Self> {
        coeffs.to_vec()
    }

    fn from_integral(c: &Self) -> Self {
        *c
    }
}

impl<const P: u64> Integral for Fp<P> {
    fn is_zero(&self) -> bool {
        self.residue == 0
    }

    fn is_one(&self) -> bool {
        self.residue == 1
    }

    fn cofactors(target: &Self, reducer: &Self) -> (Self, Self) {
        let inv = Field::inv(reducer).expect("reducer leading coefficient is nonzero");
        (Self::one(), *target * inv)
    }

    fn mul(&self, other: &Self) -> Self {
        *self * *other
    }

    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Self {
        *a * *x - *b * *y
    }

    fn neg_mul(&self, y: &Self) -> Self {
        -(*self * *y)
    }

    fn normalize(coeffs: &mut [Self]) {
        if let Some(lead) = coeffs.first().copied() {
            if lead.residue != 1 {
                let inv = Field::inv(&lead).expect("leading coefficient is nonzero");
                for c in coeffs.iter_mut() {
                    *c = *c * inv;
                }
            }
        }
    }

    fn content(_coeffs: &[Self]) -> Option<Self> {
        None
    }

    fn div_exact(&self, d: &Self) -> Self {
        *self * Field::inv(d).expect("nonzero divisor")
    }
}
