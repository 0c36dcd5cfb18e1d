//! Non-properness values of a polynomial restricted to an affine curve.
//!
//! For a curve `X = V(I)` and a polynomial `f`, the value `y` is a
//! non-properness value when some sequence on `X` tends to infinity while
//! `f` tends to `y`. The set is read off the graph ideal
//! `I + <f - z>`: for each coordinate `x_i` the elimination ideal in
//! `Q[x_i, z]` has a generator `a_0(z) x_i^m + ...`, and the roots of the
//! leading coefficients `a_0` cover all such values.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groebner::{
    buchberger, eliminate, graded_basis, lowest_element_in, lowest_element_modular, GroebnerBasis,
    GroebnerError, Ideal,
};
use crate::polyalg::{MonomialOrder, PolyError, Polynomial, Rational, Ring};
use crate::univar::{
    approx_roots, lcm_univar, rational_roots, squarefree_part, UnivarError, UnivariatePolynomial,
};

pub const DEFAULT_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NonproperError {
    #[error("the ideal is not a curve: elimination onto ({var}, z) is zero")]
    NotACurve { var: String },
    #[error("{0} does not occur in the ring of the ideal")]
    UnknownVariable(usize),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Univar(#[from] UnivarError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ValueFlag {
    /// `f` is constant on some component; its value is kept in the set.
    VerticalComponent,
    /// The curve is empty.
    EmptyCurve,
}

impl fmt::Display for ValueFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ValueFlag::VerticalComponent => "vertical_component",
            ValueFlag::EmptyCurve => "empty_curve",
        })
    }
}

/// Finite subset of `C` given by the roots of a squarefree `rho(z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ValueSet {
    rho: UnivariatePolynomial,
    rational_roots: Vec<Rational>,
    approx_roots: Vec<Complex64>,
    approx_converged: bool,
    flags: BTreeSet<ValueFlag>,
}

impl ValueSet {
    /// Canonicalizes `rho` to its squarefree part and computes its roots.
    pub fn from_rho(
        rho: &UnivariatePolynomial,
        flags: BTreeSet<ValueFlag>,
        tolerance: f64,
    ) -> Result<Self, UnivarError> {
        let rho = squarefree_part(rho)?;
        let rational_roots = rational_roots(&rho)?;
        let approx = approx_roots(&rho, tolerance);
        Ok(ValueSet {
            rho,
            rational_roots,
            approx_roots: approx.roots,
            approx_converged: approx.converged,
            flags,
        })
    }

    pub fn empty(flags: BTreeSet<ValueFlag>) -> Self {
        ValueSet {
            rho: UnivariatePolynomial::one(),
            rational_roots: Vec::new(),
            approx_roots: Vec::new(),
            approx_converged: true,
            flags,
        }
    }

    pub fn rho(&self) -> &UnivariatePolynomial {
        &self.rho
    }

    pub fn rational_roots(&self) -> &[Rational] {
        &self.rational_roots
    }

    pub fn approx_roots(&self) -> &[Complex64] {
        &self.approx_roots
    }

    pub fn approx_converged(&self) -> bool {
        self.approx_converged
    }

    pub fn flags(&self) -> &BTreeSet<ValueFlag> {
        &self.flags
    }

    pub fn has_flag(&self, flag: ValueFlag) -> bool {
        self.flags.contains(&flag)
    }

    pub fn is_empty(&self) -> bool {
        self.rho.is_constant()
    }

    /// Number of (distinct, complex) values.
    pub fn len(&self) -> usize {
        self.rho.degree().unwrap_or(0)
    }

    /// Every root of `rho` is rational.
    pub fn is_fully_rational(&self) -> bool {
        self.rational_roots.len() == self.len()
    }
}

/// `I + <f - z>` in the ring extended by a fresh last variable `z`.
#[derive(Clone, Debug)]
pub struct GraphIdeal {
    ideal: Ideal<Rational>,
    z: usize,
}

impl GraphIdeal {
    pub fn ideal(&self) -> &Ideal<Rational> {
        &self.ideal
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.ideal.ring()
    }

    /// Index of `z` (the last variable).
    pub fn z_index(&self) -> usize {
        self.z
    }
}

pub fn graph_ideal(
    ideal: &Ideal<Rational>,
    f: &Polynomial<Rational>,
) -> Result<GraphIdeal, NonproperError> {
    if f.ring() != ideal.ring() {
        return Err(PolyError::RingMismatch.into());
    }
    let base = ideal.ring();
    let ring = base.with_appended(&base.fresh_name("z"))?;
    let z = base.nvars();
    let map: Vec<usize> = (0..z).collect();
    let mut gens = ideal
        .generators()
        .iter()
        .map(|g| g.embed(&ring, &map))
        .collect::<Result<Vec<_>, _>>()?;
    gens.push(f.embed(&ring, &map)?.sub(&Polynomial::var(&ring, z))?);
    Ok(GraphIdeal {
        ideal: Ideal::new(&ring, gens)?,
        z,
    })
}

/// Result of eliminating everything except `x_i` and `z`.
#[derive(Clone, Debug, PartialEq)]
pub enum FiberRelation {
    /// The graph ideal is the unit ideal.
    Empty,
    /// Generator of the elimination ideal in `Q[x_i, z]`.
    Relation(Polynomial<Rational>),
}

/// Graph ideal of a curve together with its graded basis, shared by the
/// relations of every coordinate.
#[derive(Clone, Debug)]
pub struct CurveBasis {
    graph: GraphIdeal,
    basis: GroebnerBasis<Rational>,
    degree_cap: u32,
}

impl CurveBasis {
    pub fn new(ideal: &Ideal<Rational>, f: &Polynomial<Rational>) -> Result<Self, NonproperError> {
        let graph = graph_ideal(ideal, f)?;
        let basis = graded_basis(&graph.ideal)?;
        // Bezout-type bound on the degree of a plane projection of the curve
        let degree_cap = graph
            .ideal
            .generators()
            .iter()
            .map(|g| g.total_degree().finite().unwrap_or(0).max(1))
            .fold(1u32, |acc, d| acc.saturating_mul(d))
            .min(MAX_RELATION_DEGREE);
        Ok(CurveBasis {
            graph,
            basis,
            degree_cap,
        })
    }

    pub fn graph(&self) -> &GraphIdeal {
        &self.graph
    }

    pub fn is_unit(&self) -> bool {
        self.basis.is_unit()
    }

    /// Generator of the elimination ideal of the graph ideal in
    /// `Q[x_var, z]`.
    pub fn relation(&self, var: usize) -> Result<FiberRelation, NonproperError> {
        let g = &self.graph;
        if var >= g.z {
            return Err(NonproperError::UnknownVariable(var));
        }
        if self.basis.is_unit() {
            return Ok(FiberRelation::Empty);
        }
        let keep = [var, g.z];
        if let Some(p) = lowest_element_modular(&g.ideal, &self.basis, &keep, self.degree_cap)? {
            return Ok(FiberRelation::Relation(p));
        }
        if let Some(p) = lowest_element_in(&self.basis, &keep, self.degree_cap)? {
            return Ok(FiberRelation::Relation(p));
        }
        fiber_relation(g, var)
    }
}

/// Largest degree searched by linear algebra before falling back to
/// block elimination.
const MAX_RELATION_DEGREE: u32 = 64;

/// Eliminates all variables but `var` and `z` with a block order and returns
/// the lowest element of the lex basis (`var > z`) of the result.
pub fn fiber_relation(g: &GraphIdeal, var: usize) -> Result<FiberRelation, NonproperError> {
    let n = g.ring().nvars();
    if var >= n || var == g.z {
        return Err(NonproperError::UnknownVariable(var));
    }
    let keep = [var, g.z];
    let elim = eliminate(&g.ideal, &keep)?;
    if elim.iter().any(Polynomial::is_constant) {
        return Ok(FiberRelation::Empty);
    }
    let mut perm: Vec<usize> = (0..n).filter(|v| !keep.contains(v)).collect();
    perm.extend_from_slice(&keep);
    let gb = buchberger(
        &Ideal::new(g.ring(), elim)?,
        &MonomialOrder::lex_with(perm)?,
    )?;
    // basis elements are sorted ascending, so the first one is the lowest
    gb.elements()
        .first()
        .cloned()
        .map(FiberRelation::Relation)
        .ok_or_else(|| NonproperError::NotACurve {
            var: g.ring().name(var).to_string(),
        })
}

/// Leading coefficient of `p` in `var` as a polynomial in `z`, and whether
/// `p` does not involve `var` at all (in which case `p` itself is returned).
pub fn leading_coeff_in(
    p: &Polynomial<Rational>,
    var: usize,
    z: usize,
) -> Result<(UnivariatePolynomial, bool), NonproperError> {
    let coeffs = p.coefficients_in(var);
    let vertical = coeffs.len() <= 1;
    let lead = coeffs.last().cloned().unwrap_or_else(|| p.clone());
    Ok((UnivariatePolynomial::from_multivariate(&lead, z)?, vertical))
}

/// Non-properness values of `f` on `V(ideal)`, measured in the coordinates
/// `coords` (variables not listed, such as a localization variable, are
/// eliminated but never used to detect escape to infinity).
pub fn nonproperness_values_in(
    ideal: &Ideal<Rational>,
    f: &Polynomial<Rational>,
    coords: &[usize],
    tolerance: f64,
) -> Result<ValueSet, NonproperError> {
    let g = CurveBasis::new(ideal, f)?;
    let z = g.graph().z;
    let mut flags = BTreeSet::new();
    let mut rho = UnivariatePolynomial::one();
    for &var in coords {
        if var >= ideal.ring().nvars() {
            return Err(NonproperError::UnknownVariable(var));
        }
        match g.relation(var)? {
            FiberRelation::Empty => {
                flags.insert(ValueFlag::EmptyCurve);
                return Ok(ValueSet::empty(flags));
            }
            FiberRelation::Relation(p) => {
                let (a0, vertical) = leading_coeff_in(&p, var, z)?;
                if vertical {
                    flags.insert(ValueFlag::VerticalComponent);
                }
                if !a0.is_constant() {
                    rho = lcm_univar(&rho, &squarefree_part(&a0)?)?;
                }
            }
        }
    }
    Ok(ValueSet::from_rho(&rho, flags, tolerance)?)
}

/// Non-properness values of `f` on `V(ideal)` over all coordinates.
pub fn nonproperness_values(
    ideal: &Ideal<Rational>,
    f: &Polynomial<Rational>,
) -> Result<ValueSet, NonproperError> {
    let coords: Vec<usize> = (0..ideal.ring().nvars()).collect();
    nonproperness_values_in(ideal, f, &coords, DEFAULT_TOLERANCE)
}
