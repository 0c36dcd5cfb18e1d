//! Gröbner bases: Buchberger's algorithm, normal forms, elimination ideals,
//! Krull dimension and the Rabinowitsch localization.

mod engine;
mod modular;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use thiserror::Error;

use crate::polyalg::{Field, Monomial, MonomialOrder, OrderKind, PolyError, Polynomial, Ring};

use engine::{EPoly, Engine, EngineOrder, MAX_VARS};
pub use engine::{EngineStats, Strategy};
pub use modular::{lowest_element_modular, rational_reconstruction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("zero polynomial where a nonzero one is required")]
    ZeroInput,
    #[error("the monomial order has {order} variables but the ring has {ring}")]
    OrderMismatch { order: usize, ring: usize },
    #[error("the basis order does not end with the requested block of variables")]
    NotAnEliminationOrder,
    #[error("at most {MAX_VARS} variables are supported, got {0}")]
    TooManyVariables(usize),
    #[error("exponent too large for the Gröbner engine")]
    ExponentOverflow,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Finitely generated ideal. Zero generators are dropped on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal<C: Field> {
    ring: Arc<Ring>,
    generators: Vec<Polynomial<C>>,
}

impl<C: Field> Ideal<C> {
    pub fn new(ring: &Arc<Ring>, generators: Vec<Polynomial<C>>) -> Result<Self, GroebnerError> {
        for g in &generators {
            if g.ring() != ring {
                return Err(PolyError::RingMismatch.into());
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<C>] {
        &self.generators
    }
}

/// Reduced Gröbner basis together with the order it was computed for.
///
/// Elements are sorted by ascending leading monomial. Over `Q` each element
/// is primitive in `Z[x]` with positive leading coefficient; over a prime
/// field each element is monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<C: Field> {
    ring: Arc<Ring>,
    order: MonomialOrder,
    elements: Vec<Polynomial<C>>,
    stats: EngineStats,
}

impl<C: Field> GroebnerBasis<C> {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial<C>] {
        &self.elements
    }

    pub fn stats(&self) -> EngineStats {
        self.stats
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_term(&self.order).expect("nonzero").0.clone())
            .collect()
    }

    pub fn normal_form(&self, p: &Polynomial<C>) -> Polynomial<C> {
        normal_form(p, &self.elements, &self.order)
    }

    /// Ideal membership, decided with fraction-free reduction.
    pub fn contains(&self, p: &Polynomial<C>) -> bool {
        if p.ring() != &self.ring {
            return false;
        }
        let engine_form = || -> Option<bool> {
            let ord = EngineOrder::new(&self.order)?;
            let basis = self
                .elements
                .iter()
                .map(|g| to_engine::<C>(&ord, g).ok())
                .collect::<Option<Vec<_>>>()?;
            let reducers: Vec<&EPoly<C::Integral>> = basis.iter().collect();
            let target = to_engine::<C>(&ord, p).ok()?;
            Some(engine::reduce_full(&ord, target, &reducers).is_empty())
        };
        engine_form().unwrap_or_else(|| self.normal_form(p).is_zero())
    }
}

fn check_order(ring: &Arc<Ring>, order: &MonomialOrder) -> Result<EngineOrder, GroebnerError> {
    if order.nvars() != ring.nvars() {
        return Err(GroebnerError::OrderMismatch {
            order: order.nvars(),
            ring: ring.nvars(),
        });
    }
    EngineOrder::new(order).ok_or(GroebnerError::TooManyVariables(ring.nvars()))
}

fn to_engine<C: Field>(
    ord: &EngineOrder,
    p: &Polynomial<C>,
) -> Result<EPoly<C::Integral>, GroebnerError> {
    let coeffs: Vec<C> = p.terms().map(|(_, c)| c.clone()).collect();
    let ints = C::clear_denominators(&coeffs);
    let mut out = Vec::with_capacity(ints.len());
    for ((m, _), c) in p.terms().zip(ints) {
        out.push((ord.pack(m).ok_or(GroebnerError::ExponentOverflow)?, c));
    }
    out.sort_by(|a, b| ord.cmp(&b.0, &a.0));
    engine::normalize(&mut out);
    Ok(out)
}

fn from_engine<C: Field>(
    ring: &Arc<Ring>,
    ord: &EngineOrder,
    p: &EPoly<C::Integral>,
) -> Polynomial<C> {
    Polynomial::from_terms(
        ring,
        p.iter().map(|(m, c)| (ord.unpack(m), C::from_integral(c))),
    )
    .expect("engine output matches ring")
}

/// S-polynomial `(L / lt(p)) * p - (L / lt(q)) * q`, `L = lcm(lm p, lm q)`,
/// with leading coefficients divided out.
pub fn s_polynomial<C: Field>(
    p: &Polynomial<C>,
    q: &Polynomial<C>,
    order: &MonomialOrder,
) -> Result<Polynomial<C>, GroebnerError> {
    let (lp, cp) = p.leading_term(order).ok_or(GroebnerError::ZeroInput)?;
    let (lq, cq) = q.leading_term(order).ok_or(GroebnerError::ZeroInput)?;
    if p.ring() != q.ring() {
        return Err(PolyError::RingMismatch.into());
    }
    let l = lp.lcm(lq);
    let mp = lp.quotient_of(&l).expect("lcm is a multiple");
    let mq = lq.quotient_of(&l).expect("lcm is a multiple");
    let a = p.mul_monomial(&mp, &cp.inv().expect("nonzero"));
    let b = q.mul_monomial(&mq, &cq.inv().expect("nonzero"));
    Ok(a.sub(&b)?)
}

/// Remainder of multivariate division of `p` by `basis`: no term of the
/// result is divisible by any leading monomial of `basis`, and `p` minus the
/// result lies in the ideal spanned by `basis`. Exact field arithmetic.
pub fn normal_form<C: Field>(
    p: &Polynomial<C>,
    basis: &[Polynomial<C>],
    order: &MonomialOrder,
) -> Polynomial<C> {
    let leads: Vec<(Monomial, C, &Polynomial<C>)> = basis
        .iter()
        .filter_map(|g| {
            g.leading_term(order)
                .map(|(m, c)| (m.clone(), c.clone(), g))
        })
        .collect();
    let mut rest = p.clone();
    let mut rem = Polynomial::zero(p.ring());
    while let Some((lm, lc)) = rest
        .leading_term(order)
        .map(|(m, c)| (m.clone(), c.clone()))
    {
        let reducer = leads.iter().find(|(gm, _, _)| gm.divides(&lm));
        match reducer {
            Some((gm, gc, g)) => {
                let q = gm.quotient_of(&lm).expect("divides");
                let factor = lc.div(gc).expect("nonzero leading coefficient");
                rest = rest.sub(&g.mul_monomial(&q, &factor)).expect("same ring");
            }
            None => {
                let t = Polynomial::monomial(p.ring(), lm.clone(), lc.clone()).expect("same ring");
                rem = rem.add(&t).expect("same ring");
                rest = rest.sub(&t).expect("same ring");
            }
        }
    }
    rem
}

/// Reduced Gröbner basis of `ideal` under `order`, computed with the
/// default pair selection strategy.
pub fn buchberger<C: Field>(
    ideal: &Ideal<C>,
    order: &MonomialOrder,
) -> Result<GroebnerBasis<C>, GroebnerError> {
    buchberger_with(ideal, order, Strategy::default())
}

pub fn buchberger_with<C: Field>(
    ideal: &Ideal<C>,
    order: &MonomialOrder,
    strategy: Strategy,
) -> Result<GroebnerBasis<C>, GroebnerError> {
    let ord = check_order(&ideal.ring, order)?;
    let gens = ideal
        .generators
        .iter()
        .map(|g| to_engine::<C>(&ord, g))
        .collect::<Result<Vec<_>, _>>()?;
    let (basis, stats) = Engine::new(&ord, strategy).run(gens);
    Ok(GroebnerBasis {
        ring: ideal.ring.clone(),
        order: order.clone(),
        elements: basis
            .iter()
            .map(|p| from_engine::<C>(&ideal.ring, &ord, p))
            .collect(),
        stats,
    })
}

/// Elements of a basis that only involve the variables in `keep`. When
/// `keep` is exactly the least significant block of a lex or block basis
/// order these form a Gröbner basis of the elimination ideal `I ∩ k[keep]`.
pub fn elimination_ideal<C: Field>(
    basis: &GroebnerBasis<C>,
    keep: &[usize],
) -> Result<Vec<Polynomial<C>>, GroebnerError> {
    let order = basis.order();
    let n = order.nvars();
    let tail = match order.kind() {
        OrderKind::Lex if keep.len() <= n => &order.permutation()[n - keep.len()..],
        OrderKind::Block { head } if n - head == keep.len() => &order.permutation()[head..],
        _ => return Err(GroebnerError::NotAnEliminationOrder),
    };
    if !keep.iter().all(|k| tail.contains(k)) {
        return Err(GroebnerError::NotAnEliminationOrder);
    }
    Ok(basis
        .elements
        .iter()
        .filter(|g| g.support().iter().all(|v| keep.contains(v)))
        .cloned()
        .collect())
}

/// Generators of `I ∩ k[keep]`, computed with a block order that eliminates
/// all other variables.
pub fn eliminate<C: Field>(
    ideal: &Ideal<C>,
    keep: &[usize],
) -> Result<Vec<Polynomial<C>>, GroebnerError> {
    let order = MonomialOrder::block_elimination(ideal.ring.nvars(), keep)?;
    let gb = buchberger(ideal, &order)?;
    elimination_ideal(&gb, keep)
}

/// Nonzero element of least total degree in `I ∩ k[vars]`, or `Ok(None)`
/// if there is none of degree at most `max_degree`. When the elimination
/// ideal is principal this is its generator. The unit ideal yields `1`.
pub fn lowest_element_in<C: Field>(
    basis: &GroebnerBasis<C>,
    vars: &[usize],
    max_degree: u32,
) -> Result<Option<Polynomial<C>>, GroebnerError> {
    let ring = basis.ring.clone();
    if vars.iter().any(|&v| v >= ring.nvars()) {
        return Err(GroebnerError::NotAnEliminationOrder);
    }
    let images: Vec<Polynomial<C>> = vars.iter().map(|&v| Polynomial::var(&ring, v)).collect();
    lowest_relation(basis, &images, &ring, vars, max_degree)
}

/// Monic polynomial `P` of least total degree with `P(images) ∈ I`, found by
/// linear algebra on normal forms modulo `basis`: monomials are enumerated
/// by total degree and the first linear dependency among the normal forms
/// of their images gives `P`. `P` is returned in `target` with variable
/// `slots[k]` standing for `images[k]`. `Ok(None)` if no relation of degree
/// at most `max_degree` exists; the unit ideal yields `1`.
pub fn lowest_relation<C: Field>(
    basis: &GroebnerBasis<C>,
    images: &[Polynomial<C>],
    target: &Arc<Ring>,
    slots: &[usize],
    max_degree: u32,
) -> Result<Option<Polynomial<C>>, GroebnerError> {
    let distinct: BTreeSet<usize> = slots.iter().copied().collect();
    if images.is_empty()
        || slots.len() != images.len()
        || distinct.len() != slots.len()
        || slots.iter().any(|&v| v >= target.nvars())
    {
        return Err(GroebnerError::NotAnEliminationOrder);
    }
    if images.iter().any(|p| p.ring() != &basis.ring) {
        return Err(PolyError::RingMismatch.into());
    }
    if basis.is_unit() {
        return Ok(Some(Polynomial::one(target)));
    }
    let n = target.nvars();
    let images: Vec<Polynomial<C>> = images.iter().map(|p| basis.normal_form(p)).collect();
    // echelon rows keyed by leading monomial: (normal form, combination)
    let mut rows: BTreeMap<Monomial, (Polynomial<C>, Polynomial<C>)> = BTreeMap::new();
    let mut forms: HashMap<Vec<u32>, Polynomial<C>> = HashMap::new();
    for degree in 0..=max_degree {
        for exps in exponent_tuples(slots.len(), degree) {
            let nf = match exps.iter().position(|&e| e > 0) {
                None => basis.normal_form(&Polynomial::one(&basis.ring)),
                Some(k) => {
                    let mut prev = exps.clone();
                    prev[k] -= 1;
                    basis.normal_form(&forms[&prev].mul(&images[k])?)
                }
            };
            let mut e = vec![0u32; n];
            for (k, &v) in slots.iter().enumerate() {
                e[v] = exps[k];
            }
            forms.insert(exps, nf.clone());
            let mut v = nf;
            let mut comb = Polynomial::monomial(target, Monomial::from_exponents(e), C::one())?;
            while let Some((lead, c)) = v
                .default_leading_term()
                .map(|(m, c)| (m.clone(), c.clone()))
            {
                let Some((row, row_comb)) = rows.get(&lead) else {
                    break;
                };
                let factor = c.div(&row.coefficient(&lead)).expect("pivot is nonzero");
                v = v.sub(&row.scale(&factor))?;
                comb = comb.sub(&row_comb.scale(&factor))?;
            }
            if v.is_zero() {
                return Ok(Some(comb.monic()));
            }
            let lead = v.default_leading_term().expect("nonzero").0.clone();
            rows.insert(lead, (v, comb));
        }
    }
    Ok(None)
}

/// All exponent vectors of length `k` with the given sum, first entry
/// descending.
fn exponent_tuples(k: usize, sum: u32) -> Vec<Vec<u32>> {
    if k == 1 {
        return vec![vec![sum]];
    }
    let mut out = Vec::new();
    for first in (0..=sum).rev() {
        for mut rest in exponent_tuples(k - 1, sum - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Krull dimension of `V(I)`: the largest number of variables such that no
/// leading monomial of the basis is supported inside them. The empty variety
/// has dimension `-1`.
pub fn ideal_dimension<C: Field>(basis: &GroebnerBasis<C>) -> i64 {
    if basis.is_unit() {
        return -1;
    }
    let n = basis.ring.nvars();
    let masks: Vec<u32> = basis
        .leading_monomials()
        .iter()
        .map(|m| m.support().fold(0u32, |acc, v| acc | (1 << v)))
        .collect();
    (0u32..(1u32 << n))
        .filter(|u| masks.iter().all(|m| m & !u != 0))
        .map(|u| i64::from(u.count_ones()))
        .max()
        .unwrap_or(-1)
}

/// Reduced degrevlex basis, computed with the sugar strategy.
pub fn graded_basis<C: Field>(ideal: &Ideal<C>) -> Result<GroebnerBasis<C>, GroebnerError> {
    buchberger_with(
        ideal,
        &MonomialOrder::degrevlex(ideal.ring.nvars()),
        Strategy::Sugar,
    )
}

/// Dimension of `V(I)` computed from a graded basis.
pub fn dimension_of<C: Field>(ideal: &Ideal<C>) -> Result<i64, GroebnerError> {
    Ok(ideal_dimension(&graded_basis(ideal)?))
}

/// Ideal `I + <t*h - 1>` in the ring extended by a fresh first variable `t`.
/// Its variety is isomorphic to `V(I) \ V(h)`. Returns the new ideal and
/// the index of `t` (always 0).
pub fn with_rabinowitsch<C: Field>(
    ideal: &Ideal<C>,
    h: &Polynomial<C>,
) -> Result<(Ideal<C>, usize), GroebnerError> {
    if h.is_zero() {
        return Err(GroebnerError::ZeroInput);
    }
    if h.ring() != &ideal.ring {
        return Err(PolyError::RingMismatch.into());
    }
    let name = ideal.ring.fresh_name("t");
    let ring = ideal.ring.with_prepended(&name)?;
    let map: Vec<usize> = (1..=ideal.ring.nvars()).collect();
    let mut gens = ideal
        .generators
        .iter()
        .map(|g| g.embed(&ring, &map))
        .collect::<Result<Vec<_>, _>>()?;
    let t = Polynomial::var(&ring, 0);
    gens.push(
        t.mul(&h.embed(&ring, &map)?)?
            .sub(&Polynomial::one(&ring))?,
    );
    Ok((Ideal::new(&ring, gens)?, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{q, Rational};

    fn ring(names: &[&str]) -> Arc<Ring> {
        Ring::new(names.iter().copied()).unwrap()
    }

    fn p(r: &Arc<Ring>, terms: &[(i64, &[u32])]) -> Polynomial<Rational> {
        Polynomial::from_terms(
            r,
            terms
                .iter()
                .map(|(c, e)| (Monomial::from_exponents(e.to_vec()), q(*c))),
        )
        .unwrap()
    }

    #[test]
    fn s_polynomial_examples() {
        let r = ring(&["x", "y"]);
        let lex = MonomialOrder::lex(2);
        let f = p(&r, &[(1, &[2, 0]), (-1, &[0, 1])]);
        let g = p(&r, &[(1, &[1, 1]), (-1, &[0, 0])]);
        assert_eq!(
            s_polynomial(&f, &g, &lex).unwrap(),
            p(&r, &[(1, &[1, 0]), (-1, &[0, 2])])
        );
        let x = p(&r, &[(1, &[1, 0])]);
        let y = p(&r, &[(1, &[0, 1])]);
        assert!(s_polynomial(&x, &x, &lex).unwrap().is_zero());
        assert!(s_polynomial(&x, &y, &lex).unwrap().is_zero());
        assert_eq!(
            s_polynomial(&x, &Polynomial::zero(&r), &lex),
            Err(GroebnerError::ZeroInput)
        );
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(&["x", "y"]);
        let lex = MonomialOrder::lex(2);
        let g = p(&r, &[(1, &[2, 0]), (-1, &[0, 1])]);
        let f = p(&r, &[(1, &[2, 1])]);
        assert_eq!(
            normal_form(&f, std::slice::from_ref(&g), &lex),
            p(&r, &[(1, &[0, 2])])
        );
        assert_eq!(normal_form(&f, &[], &lex), f);
        assert!(normal_form(&g, std::slice::from_ref(&g), &lex).is_zero());
    }

    #[test]
    fn buchberger_examples() {
        let r = ring(&["x", "y"]);
        let lex = MonomialOrder::lex(2);
        let i = Ideal::new(
            &r,
            vec![
                p(&r, &[(1, &[1, 0]), (1, &[0, 1])]),
                p(&r, &[(1, &[1, 0]), (-1, &[0, 1])]),
            ],
        )
        .unwrap();
        let gb = buchberger(&i, &lex).unwrap();
        assert_eq!(
            gb.elements(),
            &[p(&r, &[(1, &[0, 1])]), p(&r, &[(1, &[1, 0])])]
        );

        let circle = Ideal::new(
            &r,
            vec![
                p(&r, &[(1, &[2, 0]), (1, &[0, 2]), (-1, &[0, 0])]),
                p(&r, &[(1, &[1, 0]), (-1, &[0, 1])]),
            ],
        )
        .unwrap();
        let gb = buchberger(&circle, &lex).unwrap();
        assert!(gb
            .elements()
            .contains(&p(&r, &[(2, &[0, 2]), (-1, &[0, 0])])));

        let unit = Ideal::new(&r, vec![Polynomial::<Rational>::one(&r)]).unwrap();
        let gb = buchberger(&unit, &lex).unwrap();
        assert!(gb.is_unit());
        assert_eq!(gb.elements(), &[Polynomial::one(&r)]);

        let empty = Ideal::<Rational>::new(&r, vec![]).unwrap();
        assert!(buchberger(&empty, &lex).unwrap().is_zero_ideal());
    }

    #[test]
    fn elimination_examples() {
        let r = ring(&["x", "y"]);
        let lex = MonomialOrder::lex(2);
        let circle = Ideal::new(
            &r,
            vec![
                p(&r, &[(1, &[2, 0]), (1, &[0, 2]), (-1, &[0, 0])]),
                p(&r, &[(1, &[1, 0]), (-1, &[0, 1])]),
            ],
        )
        .unwrap();
        let gb = buchberger(&circle, &lex).unwrap();
        assert_eq!(
            elimination_ideal(&gb, &[1]).unwrap(),
            vec![p(&r, &[(2, &[0, 2]), (-1, &[0, 0])])]
        );
        assert_eq!(elimination_ideal(&gb, &[0, 1]).unwrap(), gb.elements());
        assert_eq!(
            eliminate(&circle, &[1]).unwrap(),
            vec![p(&r, &[(2, &[0, 2]), (-1, &[0, 0])])]
        );

        let rz = ring(&["x", "z"]);
        let line = Ideal::new(&rz, vec![p(&rz, &[(1, &[1, 0]), (-1, &[0, 1])])]).unwrap();
        let gb = buchberger(&line, &MonomialOrder::lex(2)).unwrap();
        assert!(elimination_ideal(&gb, &[1]).unwrap().is_empty());
        // x is not the least significant variable under lex x > z
        assert_eq!(
            elimination_ideal(&gb, &[0]),
            Err(GroebnerError::NotAnEliminationOrder)
        );
    }

    #[test]
    fn dimension_examples() {
        let r = ring(&["x", "y"]);
        let lex = MonomialOrder::lex(2);
        let gb = |gens| buchberger(&Ideal::new(&r, gens).unwrap(), &lex).unwrap();
        assert_eq!(ideal_dimension(&gb(vec![p(&r, &[(1, &[1, 0])])])), 1);
        assert_eq!(
            ideal_dimension(&gb(vec![p(&r, &[(1, &[1, 0])]), p(&r, &[(1, &[0, 1])])])),
            0
        );
        assert_eq!(ideal_dimension(&gb(vec![Polynomial::one(&r)])), -1);
        assert_eq!(ideal_dimension(&gb(vec![])), 2);
    }

    #[test]
    fn rabinowitsch_examples() {
        let r = ring(&["x", "y"]);
        // <xy>, h = x  ->  after eliminating t: <y>
        let i = Ideal::new(&r, vec![p(&r, &[(1, &[1, 1])])]).unwrap();
        let (w, t) = with_rabinowitsch(&i, &Polynomial::var(&r, 0)).unwrap();
        assert_eq!(t, 0);
        assert_eq!(w.ring().names(), &["t", "x", "y"]);
        let gb = buchberger(&w, &MonomialOrder::lex(3)).unwrap();
        let elim = elimination_ideal(&gb, &[1, 2]).unwrap();
        let r3 = w.ring().clone();
        assert_eq!(elim, vec![p(&r3, &[(1, &[0, 0, 1])])]);

        // <0>, h = 1 -> <t - 1>
        let zero = Ideal::<Rational>::new(&r, vec![]).unwrap();
        let (w, _) = with_rabinowitsch(&zero, &Polynomial::one(&r)).unwrap();
        assert_eq!(
            w.generators(),
            &[p(w.ring(), &[(1, &[1, 0, 0]), (-1, &[0, 0, 0])])]
        );
        assert_eq!(dimension_of(&w).unwrap(), 2);

        // <x>, h = x -> unit
        let i = Ideal::new(&r, vec![p(&r, &[(1, &[1, 0])])]).unwrap();
        let (w, _) = with_rabinowitsch(&i, &Polynomial::var(&r, 0)).unwrap();
        assert!(buchberger(&w, &MonomialOrder::lex(3)).unwrap().is_unit());

        assert_eq!(
            with_rabinowitsch(&i, &Polynomial::zero(&r)).map(|_| ()),
            Err(GroebnerError::ZeroInput)
        );
    }

    #[test]
    fn lowest_element_matches_elimination() {
        // <x - t^2, y - t^3> eliminates to y^2 - x^3
        let r = ring(&["t", "x", "y"]);
        let ideal = Ideal::new(
            &r,
            vec![
                p(&r, &[(1, &[0, 1, 0]), (-1, &[2, 0, 0])]),
                p(&r, &[(1, &[0, 0, 1]), (-1, &[3, 0, 0])]),
            ],
        )
        .unwrap();
        let gb = buchberger(&ideal, &MonomialOrder::degrevlex(3)).unwrap();
        let found = lowest_element_in(&gb, &[1, 2], 6).unwrap().unwrap();
        let expected = p(&r, &[(1, &[0, 3, 0]), (-1, &[0, 0, 2])]);
        assert!(crate::polyalg::equal_up_to_scalar(&found, &expected));
        assert!(lowest_element_in(&gb, &[1, 2], 2).unwrap().is_none());
        assert!(lowest_element_in(&gb, &[1, 1], 2).is_err());
    }

    #[test]
    fn lowest_element_of_unit_ideal_is_one() {
        let r = ring(&["x", "y"]);
        let ideal = Ideal::new(
            &r,
            vec![p(&r, &[(1, &[1, 0])]), p(&r, &[(1, &[1, 0]), (1, &[0, 0])])],
        )
        .unwrap();
        let gb = buchberger(&ideal, &MonomialOrder::degrevlex(2)).unwrap();
        assert!(lowest_element_in(&gb, &[1], 3)
            .unwrap()
            .unwrap()
            .is_constant());
    }
}
