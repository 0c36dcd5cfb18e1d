use std::cmp::Ordering;
use std::fmt;

use super::PolyError;

/// Exponent vector. Its length is the variable count of the owning ring,
/// auxiliary variables included.
///
/// The derived `Ord` is lexicographic with variable 0 most significant,
/// which is the default order of every ring.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn var(nvars: usize, index: usize, power: u32) -> Self {
        let mut e = vec![0; nvars];
        e[index] = power;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.0[index]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if it exists.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(
                other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub(crate) fn remove_var(&self, index: usize) -> Monomial {
        let mut e = self.0.clone();
        e.remove(index);
        Monomial(e)
    }

    pub(crate) fn remap(&self, nvars: usize, map: &[usize]) -> Monomial {
        let mut e = vec![0; nvars];
        for (i, &x) in self.0.iter().enumerate() {
            e[map[i]] = x;
        }
        Monomial(e)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    /// Graded reverse lexicographic. Only used where no elimination property
    /// is needed (dimension and finiteness checks).
    DegRevLex,
    /// Two blocks, each graded reverse lexicographic: the first `head`
    /// variables of the permutation are compared first. Eliminates the head
    /// block like lex does, with much smaller intermediate bases.
    Block {
        head: usize,
    },
}

/// A monomial order given by a kind and a significance permutation:
/// `permutation[0]` is the most significant variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    permutation: Vec<usize>,
}

impl MonomialOrder {
    /// Lex with `x_0 > x_1 > ... > x_{n-1}`; the default order of a ring.
    pub fn lex(nvars: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            permutation: (0..nvars).collect(),
        }
    }

    pub fn degrevlex(nvars: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::DegRevLex,
            permutation: (0..nvars).collect(),
        }
    }

    pub fn lex_with(permutation: Vec<usize>) -> Result<Self, PolyError> {
        Self::with_kind(OrderKind::Lex, permutation)
    }

    pub fn with_kind(kind: OrderKind, permutation: Vec<usize>) -> Result<Self, PolyError> {
        let n = permutation.len();
        if let OrderKind::Block { head } = kind {
            if head > n {
                return Err(PolyError::InvalidPermutation);
            }
        }
        let mut seen = vec![false; n];
        for &p in &permutation {
            if p >= n || seen[p] {
                return Err(PolyError::InvalidPermutation);
            }
            seen[p] = true;
        }
        Ok(MonomialOrder { kind, permutation })
    }

    /// Lex order whose least significant block is `tail`, in the given
    /// order; every other variable precedes it in natural order.
    pub fn elimination(nvars: usize, tail: &[usize]) -> Result<Self, PolyError> {
        let mut perm: Vec<usize> = (0..nvars).filter(|i| !tail.contains(i)).collect();
        perm.extend_from_slice(tail);
        Self::lex_with(perm)
    }

    /// Block order eliminating every variable outside `tail`, which forms
    /// the second block.
    pub fn block_elimination(nvars: usize, tail: &[usize]) -> Result<Self, PolyError> {
        let mut perm: Vec<usize> = (0..nvars).filter(|i| !tail.contains(i)).collect();
        let head = perm.len();
        perm.extend_from_slice(tail);
        Self::with_kind(OrderKind::Block { head }, perm)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    pub fn nvars(&self) -> usize {
        self.permutation.len()
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::Lex => {
                for &i in &self.permutation {
                    match a.0[i].cmp(&b.0[i]) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            OrderKind::DegRevLex => grevlex(&self.permutation, a, b),
            OrderKind::Block { head } => {
                let (first, second) = self.permutation.split_at(head);
                grevlex(first, a, b).then_with(|| grevlex(second, a, b))
            }
        }
    }
}

/// Graded reverse lexicographic comparison on the variables `vars`.
fn grevlex(vars: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    let deg = |m: &Monomial| vars.iter().map(|&i| m.0[i]).sum::<u32>();
    match deg(a).cmp(&deg(b)) {
        Ordering::Equal => {}
        other => return other,
    }
    for &i in vars.iter().rev() {
        match a.0[i].cmp(&b.0[i]) {
            Ordering::Equal => continue,
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}
