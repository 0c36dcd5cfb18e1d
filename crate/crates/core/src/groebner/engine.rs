//! Buchberger's algorithm on packed exponent vectors.
//!
//! Exponents are stored permuted into significance order, so lex comparison
//! is a plain array comparison. Coefficients live in the field's integral
//! ring: over `Q` every polynomial is kept primitive in `Z[x]` and reduction
//! is fraction-free.

use std::cmp::Ordering;

use crate::polyalg::{Integral, Monomial, MonomialOrder, OrderKind};

pub(crate) const MAX_VARS: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub(crate) struct PMono {
    e: [u16; MAX_VARS],
    deg: u32,
    mask: u32,
}

impl PMono {
    fn from_exps(e: [u16; MAX_VARS]) -> Self {
        let mut deg = 0u32;
        let mut mask = 0u32;
        for (i, &x) in e.iter().enumerate() {
            deg += u32::from(x);
            if x > 0 {
                mask |= 1 << i;
            }
        }
        PMono { e, deg, mask }
    }

    #[inline]
    fn divides(&self, other: &PMono) -> bool {
        if self.mask & !other.mask != 0 || self.deg > other.deg {
            return false;
        }
        self.e.iter().zip(&other.e).all(|(a, b)| a <= b)
    }

    fn mul(&self, other: &PMono) -> PMono {
        let mut e = [0u16; MAX_VARS];
        for (i, slot) in e.iter_mut().enumerate() {
            *slot = self.e[i]
                .checked_add(other.e[i])
                .expect("exponent overflow in Gröbner engine");
        }
        PMono {
            e,
            deg: self.deg + other.deg,
            mask: self.mask | other.mask,
        }
    }

    /// `self / other`, assuming divisibility.
    fn div(&self, other: &PMono) -> PMono {
        let mut e = [0u16; MAX_VARS];
        for (i, slot) in e.iter_mut().enumerate() {
            *slot = self.e[i] - other.e[i];
        }
        PMono::from_exps(e)
    }

    fn lcm(&self, other: &PMono) -> PMono {
        let mut e = [0u16; MAX_VARS];
        for (i, slot) in e.iter_mut().enumerate() {
            *slot = self.e[i].max(other.e[i]);
        }
        PMono::from_exps(e)
    }

    fn coprime(&self, other: &PMono) -> bool {
        self.mask & other.mask == 0
    }

    pub(crate) fn is_one(&self) -> bool {
        self.deg == 0
    }
}

/// Reverse lexicographic tie-break of a graded comparison.
#[inline]
fn revlex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

/// Monomial order on significance-permuted exponent vectors.
#[derive(Clone, Debug)]
pub(crate) struct EngineOrder {
    kind: OrderKind,
    permutation: Vec<usize>,
}

impl EngineOrder {
    pub(crate) fn new(order: &MonomialOrder) -> Option<Self> {
        if order.nvars() > MAX_VARS {
            return None;
        }
        Some(EngineOrder {
            kind: order.kind(),
            permutation: order.permutation().to_vec(),
        })
    }

    #[inline]
    pub(crate) fn cmp(&self, a: &PMono, b: &PMono) -> Ordering {
        match self.kind {
            OrderKind::Lex => a.e.cmp(&b.e),
            OrderKind::DegRevLex => a.deg.cmp(&b.deg).then_with(|| {
                revlex(
                    &a.e[..self.permutation.len()],
                    &b.e[..self.permutation.len()],
                )
            }),
            OrderKind::Block { head } => {
                let n = self.permutation.len();
                let da: u32 = a.e[..head].iter().map(|&v| u32::from(v)).sum();
                let db: u32 = b.e[..head].iter().map(|&v| u32::from(v)).sum();
                da.cmp(&db)
                    .then_with(|| revlex(&a.e[..head], &b.e[..head]))
                    .then_with(|| (a.deg - da).cmp(&(b.deg - db)))
                    .then_with(|| revlex(&a.e[head..n], &b.e[head..n]))
            }
        }
    }

    pub(crate) fn pack(&self, m: &Monomial) -> Option<PMono> {
        let mut e = [0u16; MAX_VARS];
        for (k, &v) in self.permutation.iter().enumerate() {
            e[k] = u16::try_from(m.exponent(v)).ok()?;
        }
        Some(PMono::from_exps(e))
    }

    pub(crate) fn unpack(&self, p: &PMono) -> Monomial {
        let mut e = vec![0u32; self.permutation.len()];
        for (k, &v) in self.permutation.iter().enumerate() {
            e[v] = u32::from(p.e[k]);
        }
        Monomial::from_exponents(e)
    }
}

/// Terms sorted strictly descending under the engine order.
pub(crate) type EPoly<I> = Vec<(PMono, I)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Pair with the smallest lcm first.
    #[default]
    Normal,
    /// Smallest sugar degree first, ties by lcm.
    Sugar,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: PMono,
    sugar: u32,
}

struct Element<I> {
    poly: EPoly<I>,
    sugar: u32,
    active: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EngineStats {
    pub pairs_considered: usize,
    pub zero_reductions: usize,
    pub basis_insertions: usize,
}

pub(crate) struct Engine<'o, I> {
    ord: &'o EngineOrder,
    strategy: Strategy,
    elems: Vec<Element<I>>,
    pairs: Vec<Pair>,
    pub(crate) stats: EngineStats,
}

/// `a * p - b * (m * g)` where the leading terms are known to cancel; both
/// leading terms are skipped.
fn sub_mul<I: Integral>(
    ord: &EngineOrder,
    p: &[(PMono, I)],
    a: &I,
    b: &I,
    m: &PMono,
    g: &[(PMono, I)],
) -> EPoly<I> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let (mut i, mut j) = (1, 1);
    let a_one = a.is_one();
    while i < p.len() && j < g.len() {
        let gm = g[j].0.mul(m);
        match ord.cmp(&p[i].0, &gm) {
            Ordering::Greater => {
                let c = if a_one {
                    p[i].1.clone()
                } else {
                    a.mul(&p[i].1)
                };
                out.push((p[i].0, c));
                i += 1;
            }
            Ordering::Less => {
                let c = b.neg_mul(&g[j].1);
                out.push((gm, c));
                j += 1;
            }
            Ordering::Equal => {
                let c = I::mul_sub(a, &p[i].1, b, &g[j].1);
                if !c.is_zero() {
                    out.push((gm, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    for t in &p[i.min(p.len())..] {
        let c = if a_one { t.1.clone() } else { a.mul(&t.1) };
        out.push((t.0, c));
    }
    for t in &g[j.min(g.len())..] {
        let c = b.neg_mul(&t.1);
        out.push((t.0.mul(m), c));
    }
    out
}

pub(crate) fn normalize<I: Integral>(p: &mut EPoly<I>) {
    let mut cs: Vec<I> = p.iter().map(|t| t.1.clone()).collect();
    I::normalize(&mut cs);
    for (t, c) in p.iter_mut().zip(cs) {
        t.1 = c;
    }
}

fn strip_content<I: Integral>(p: &mut [(PMono, I)], rem: &mut [(PMono, I)]) {
    let cs: Vec<I> = p.iter().chain(rem.iter()).map(|t| t.1.clone()).collect();
    if let Some(g) = I::content(&cs) {
        for t in p.iter_mut().chain(rem.iter_mut()) {
            t.1 = t.1.div_exact(&g);
        }
    }
}

/// Full reduction of `p` by `reducers`; the result is determined up to a
/// nonzero scalar and is returned normalized.
pub(crate) fn reduce_full<I: Integral>(
    ord: &EngineOrder,
    mut p: EPoly<I>,
    reducers: &[&EPoly<I>],
) -> EPoly<I> {
    let mut rem: EPoly<I> = Vec::new();
    let mut start = 0usize;
    let mut steps = 0usize;
    while start < p.len() {
        let lm = p[start].0;
        let reducer = reducers
            .iter()
            .filter(|g| g[0].0.divides(&lm))
            .min_by_key(|g| g.len());
        match reducer {
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
            Some(g) => {
                let (a, b) = I::cofactors(&p[start].1, &g[0].1);
                let m = lm.div(&g[0].0);
                p = sub_mul(ord, &p[start..], &a, &b, &m, g);
                start = 0;
                if !a.is_one() {
                    for t in rem.iter_mut() {
                        t.1 = a.mul(&t.1);
                    }
                }
                steps += 1;
                if steps.is_multiple_of(8) {
                    strip_content(&mut p, &mut rem);
                }
            }
        }
    }
    normalize(&mut rem);
    rem
}

impl<'o, I: Integral> Engine<'o, I> {
    pub(crate) fn new(ord: &'o EngineOrder, strategy: Strategy) -> Self {
        Engine {
            ord,
            strategy,
            elems: Vec::new(),
            pairs: Vec::new(),
            stats: EngineStats::default(),
        }
    }

    fn reducers(&self) -> Vec<&EPoly<I>> {
        self.elems
            .iter()
            .filter(|e| e.active)
            .map(|e| &e.poly)
            .collect()
    }

    /// Runs Buchberger on `gens`; returns the reduced basis sorted ascending,
    /// each element normalized. The unit ideal yields `[1]`.
    pub(crate) fn run(mut self, gens: Vec<EPoly<I>>) -> (Vec<EPoly<I>>, EngineStats) {
        let mut gens: Vec<EPoly<I>> = gens.into_iter().filter(|g| !g.is_empty()).collect();
        gens.sort_by(|a, b| self.ord.cmp(&a[0].0, &b[0].0));
        for g in gens {
            let sugar = g.iter().map(|t| t.0.deg).max().unwrap_or(0);
            let h = reduce_full(self.ord, g, &self.reducers());
            if h.is_empty() {
                continue;
            }
            if h[0].0.is_one() {
                return (vec![h], self.stats);
            }
            self.insert(h, sugar);
        }
        while let Some(pair) = self.select() {
            self.stats.pairs_considered += 1;
            let s = self.s_poly(&pair);
            let h = reduce_full(self.ord, s, &self.reducers());
            if h.is_empty() {
                self.stats.zero_reductions += 1;
                continue;
            }
            if h[0].0.is_one() {
                return (vec![h], self.stats);
            }
            self.insert(h, pair.sugar);
        }
        let stats = self.stats;
        (self.interreduce(), stats)
    }

    fn select(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let ord = self.ord;
        let key = |p: &Pair| (p.sugar, p.lcm);
        let best = match self.strategy {
            Strategy::Normal => (0..self.pairs.len()).min_by(|&x, &y| {
                let (a, b) = (&self.pairs[x], &self.pairs[y]);
                ord.cmp(&a.lcm, &b.lcm)
                    .then(a.i.cmp(&b.i))
                    .then(a.j.cmp(&b.j))
            }),
            Strategy::Sugar => (0..self.pairs.len()).min_by(|&x, &y| {
                let (a, b) = (&self.pairs[x], &self.pairs[y]);
                let ((sa, la), (sb, lb)) = (key(a), key(b));
                sa.cmp(&sb)
                    .then_with(|| ord.cmp(&la, &lb))
                    .then(a.i.cmp(&b.i))
                    .then(a.j.cmp(&b.j))
            }),
        }?;
        Some(self.pairs.swap_remove(best))
    }

    fn s_poly(&self, pair: &Pair) -> EPoly<I> {
        let f = &self.elems[pair.i].poly;
        let g = &self.elems[pair.j].poly;
        let (a, b) = I::cofactors(&f[0].1, &g[0].1);
        // a*mf*f - b*mg*g
        let mf = pair.lcm.div(&f[0].0);
        let mg = pair.lcm.div(&g[0].0);
        let shifted: EPoly<I> = f.iter().map(|t| (t.0.mul(&mf), t.1.clone())).collect();
        let mut s = sub_mul(self.ord, &shifted, &a, &b, &mg, g);
        normalize(&mut s);
        s
    }

    /// Gebauer-Möller installation of a new basis element.
    fn insert(&mut self, h: EPoly<I>, sugar: u32) {
        self.stats.basis_insertions += 1;
        let hi = self.elems.len();
        let hl = h[0].0;
        let hdeg = hl.deg;

        // candidate pairs (g, h)
        let mut cands: Vec<(usize, PMono, bool)> = self
            .elems
            .iter()
            .enumerate()
            .filter(|(_, e)| e.active)
            .map(|(i, e)| {
                let gl = e.poly[0].0;
                (i, gl.lcm(&hl), gl.coprime(&hl))
            })
            .collect();

        // chain criterion among the new pairs
        let mut kept: Vec<(usize, PMono, bool)> = Vec::new();
        while let Some(c) = cands.pop() {
            let dominated = !c.2 && cands.iter().chain(kept.iter()).any(|o| o.1.divides(&c.1));
            if !dominated {
                kept.push(c);
            }
        }

        // prune old pairs whose lcm is a proper multiple through h
        let elems = &self.elems;
        self.pairs.retain(|p| {
            if !hl.divides(&p.lcm) {
                return true;
            }
            let li = elems[p.i].poly[0].0.lcm(&hl);
            let lj = elems[p.j].poly[0].0.lcm(&hl);
            li == p.lcm || lj == p.lcm
        });

        for (i, lcm, coprime) in kept {
            if coprime {
                continue;
            }
            let gl = self.elems[i].poly[0].0;
            let s = (self.elems[i].sugar + lcm.deg - gl.deg).max(sugar + lcm.deg - hdeg);
            self.pairs.push(Pair {
                i,
                j: hi,
                lcm,
                sugar: s,
            });
        }

        for e in self.elems.iter_mut() {
            if e.active && hl.divides(&e.poly[0].0) {
                e.active = false;
            }
        }
        self.elems.push(Element {
            poly: h,
            sugar,
            active: true,
        });
    }

    fn interreduce(self) -> Vec<EPoly<I>> {
        let ord = self.ord;
        let mut basis: Vec<EPoly<I>> = self
            .elems
            .into_iter()
            .filter(|e| e.active)
            .map(|e| e.poly)
            .collect();
        basis.sort_by(|a, b| ord.cmp(&a[0].0, &b[0].0));
        for k in 0..basis.len() {
            let p = std::mem::take(&mut basis[k]);
            let others: Vec<&EPoly<I>> = basis
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != k)
                .map(|(_, g)| g)
                .collect();
            // the leading term cannot be reduced by a minimal basis
            let lead = p[0].clone();
            let tail = reduce_tail(ord, p, &others);
            debug_assert_eq!(tail[0].0, lead.0);
            basis[k] = tail;
        }
        basis
    }
}

/// Reduces every non-leading term; keeps the leading monomial.
fn reduce_tail<I: Integral>(ord: &EngineOrder, p: EPoly<I>, reducers: &[&EPoly<I>]) -> EPoly<I> {
    let mut it = p.into_iter();
    let lead = it.next().expect("nonzero");
    let mut rest: EPoly<I> = it.collect();
    if rest.is_empty()
        || !rest
            .iter()
            .any(|t| reducers.iter().any(|g| g[0].0.divides(&t.0)))
    {
        let mut out = vec![lead];
        out.append(&mut rest);
        normalize(&mut out);
        return out;
    }
    // reduce lead + tail where the lead is irreducible: reduce_full keeps
    // irreducible terms in place and preserves the scalar relation
    let mut full = vec![lead];
    full.extend(rest);
    reduce_full(ord, full, reducers)
}
