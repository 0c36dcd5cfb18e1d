use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Field, Matrix, Monomial, MonomialOrder, PolyError, Rational};

/// Variable names of a polynomial ring. Coefficients are carried by the type
/// parameter of [`Polynomial`].
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
}

impl Ring {
    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
    ) -> Result<Arc<Ring>, PolyError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(PolyError::DuplicateVariable(n.clone()));
            }
        }
        Ok(Arc::new(Ring { names }))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `base`, or `base` with a numeric suffix, whichever is not yet taken.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        (1..)
            .map(|k| format!("{base}{k}"))
            .find(|n| self.index_of(n).is_none())
            .expect("unbounded search")
    }

    pub fn with_prepended(&self, name: &str) -> Result<Arc<Ring>, PolyError> {
        Ring::new(std::iter::once(name.to_string()).chain(self.names.iter().cloned()))
    }

    pub fn with_appended(&self, name: &str) -> Result<Arc<Ring>, PolyError> {
        Ring::new(
            self.names
                .iter()
                .cloned()
                .chain(std::iter::once(name.to_string())),
        )
    }

    pub fn without(&self, index: usize) -> Arc<Ring> {
        let mut names = self.names.clone();
        names.remove(index);
        Arc::new(Ring { names })
    }
}

/// Total degree; the zero polynomial has degree minus infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::MinusInfinity => None,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Sparse multivariate polynomial. Terms are keyed by exponent vector and
/// never carry a zero coefficient.
#[derive(Clone)]
pub struct Polynomial<C> {
    ring: Arc<Ring>,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Field> PartialEq for Polynomial<C> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<C: Field> Eq for Polynomial<C> {}

fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl<C: Field> Polynomial<C> {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: C) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.nvars()), c);
        }
        p
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, C::one())
    }

    pub fn var(ring: &Arc<Ring>, index: usize) -> Self {
        assert!(index < ring.nvars(), "variable index out of range");
        let mut p = Self::zero(ring);
        p.terms
            .insert(Monomial::var(ring.nvars(), index, 1), C::one());
        p
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: C) -> Result<Self, PolyError> {
        Self::from_terms(ring, [(m, c)])
    }

    /// Builds a polynomial from possibly repeated monomials; like terms are
    /// merged and zero coefficients dropped.
    pub fn from_terms(
        ring: &Arc<Ring>,
        terms: impl IntoIterator<Item = (Monomial, C)>,
    ) -> Result<Self, PolyError> {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            if m.nvars() != ring.nvars() {
                return Err(PolyError::DimensionMismatch {
                    expected: ring.nvars(),
                    found: m.nvars(),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    /// Terms in ascending default (lex) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_value(&self) -> Option<C> {
        if self.is_constant() {
            Some(self.terms.values().next().cloned().unwrap_or_else(C::zero))
        } else {
            None
        }
    }

    fn check_ring(&self, other: &Self) -> Result<(), PolyError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        let mut out = Self::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.clone() * s.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone() * s.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        acc
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .keys()
            .map(Monomial::degree)
            .max()
            .map_or(Degree::MinusInfinity, Degree::Finite)
    }

    /// Highest power of one variable; `None` for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(var)).max()
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(var) > 0)
    }

    /// Indices of the variables occurring in some term.
    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&v| self.involves(v)).collect()
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &C)> {
        self.terms.iter().max_by(|a, b| order.compare(a.0, b.0))
    }

    /// Leading term under the ring's default (lex) order.
    pub fn default_leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn partial_derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] -= 1;
            out.add_term(
                Monomial::from_exponents(exps),
                c.clone() * C::from_i64(i64::from(e)),
            );
        }
        out
    }

    /// Composes with the linear change `x_i -> sum_j m[i][j] x_j`.
    pub fn substitute_linear(&self, m: &Matrix<C>) -> Result<Self, PolyError> {
        let n = self.nvars();
        if m.size() != n {
            return Err(PolyError::DimensionMismatch {
                expected: n,
                found: m.size(),
            });
        }
        if !m.is_invertible() {
            return Err(PolyError::SingularMatrix);
        }
        let forms: Vec<Self> = (0..n)
            .map(|i| {
                Self::from_terms(
                    &self.ring,
                    (0..n).map(|j| (Monomial::var(n, j, 1), m.get(i, j).clone())),
                )
                .expect("dimensions match")
            })
            .collect();
        // powers[i][k] = forms[i]^k, filled lazily
        let mut powers: Vec<Vec<Self>> =
            forms.iter().map(|_| vec![Self::one(&self.ring)]).collect();
        let mut out = Self::zero(&self.ring);
        for (mono, c) in &self.terms {
            let mut term = Self::constant(&self.ring, c.clone());
            for (i, &e) in mono.exponents().iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().mul(&forms[i])?;
                    powers[i].push(next);
                }
                if e > 0 {
                    term = term.mul(&powers[i][e])?;
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Sets one variable to zero and drops it from the ring.
    pub fn restrict_hyperplane(&self, var: usize) -> Self {
        let ring = self.ring.without(var);
        let mut out = Self::zero(&ring);
        for (m, c) in &self.terms {
            if m.exponent(var) == 0 {
                out.add_term(m.remove_var(var), c.clone());
            }
        }
        out
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to
    /// variable `map[i]`.
    pub fn embed(&self, target: &Arc<Ring>, map: &[usize]) -> Result<Self, PolyError> {
        if map.len() != self.nvars() || map.iter().any(|&j| j >= target.nvars()) {
            return Err(PolyError::DimensionMismatch {
                expected: self.nvars(),
                found: map.len(),
            });
        }
        Self::from_terms(
            target,
            self.terms
                .iter()
                .map(|(m, c)| (m.remap(target.nvars(), map), c.clone())),
        )
    }

    /// Coefficients with respect to one variable: entry `k` multiplies
    /// `var^k`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Self> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![Self::zero(&self.ring); deg + 1];
        if self.is_zero() {
            return Vec::new();
        }
        for (m, c) in &self.terms {
            let e = m.exponent(var) as usize;
            let mut exps = m.exponents().to_vec();
            exps[var] = 0;
            out[e].add_term(Monomial::from_exponents(exps), c.clone());
        }
        out
    }

    pub fn map_coefficients<D: Field>(&self, f: impl Fn(&C) -> Option<D>) -> Option<Polynomial<D>> {
        let mut out = Polynomial::<D>::zero(&self.ring);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Some(out)
    }

    pub fn evaluate(&self, point: &[C]) -> C {
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Makes the leading coefficient (default order) equal to one.
    pub fn monic(&self) -> Self {
        match self.default_leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero")),
        }
    }
}

impl Polynomial<Rational> {
    /// Splits `p` as `content * primitive`, where `primitive` has coprime
    /// integer coefficients and a positive leading coefficient under the
    /// ring's default order.
    pub fn make_primitive(&self) -> Result<(Rational, Polynomial<Rational>), PolyError> {
        let Some((_, lead)) = self.default_leading_term() else {
            return Err(PolyError::ZeroPolynomial);
        };
        let den_lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num_gcd = self
            .terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c.numer()));
        let mut content = Rational::new(num_gcd, den_lcm);
        if Field::is_negative(lead) {
            content = -content;
        }
        let inv = content.recip();
        Ok((content, self.scale(&inv)))
    }

    /// Primitive part only; zero stays zero.
    pub fn primitive_part(&self) -> Polynomial<Rational> {
        self.make_primitive()
            .map(|(_, p)| p)
            .unwrap_or_else(|_| self.clone())
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

impl<C: Field> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders with terms in descending default order, e.g. `x^2*y - 1/2*x + 3`.
/// The output is accepted back by the textual polynomial parser.
impl<C: Field> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.name(i).to_string()),
                    _ => factors.push(format!("{}^{}", self.ring.name(i), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Compares two polynomials up to a nonzero scalar factor.
pub fn equal_up_to_scalar<C: Field>(p: &Polynomial<C>, q: &Polynomial<C>) -> bool {
    if p.is_zero() || q.is_zero() {
        return p.is_zero() && q.is_zero();
    }
    p.monic() == q.monic()
}
