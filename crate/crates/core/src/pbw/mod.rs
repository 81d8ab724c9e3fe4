//! The reduced enveloping superalgebra U_χ(g) as a rewriting system.
//!
//! Elements are combinations of PBW monomials. A monomial records one
//! exponent per basis element and is read as the ordered product along an
//! [`Order`]. The default triangular order is the basis order itself
//! (n⁻, h, n⁺), so [`reduce_mod_n_plus`] is a filter on terms.
//!
//! Products go through [`Straightener`], a memoized left multiplication by
//! one generator. [`rewrite_word`] is an independent worklist rewriter over
//! raw words, used to cross-check the straightener.

mod rewrite;
mod straighten;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem};
use crate::liesuper::SuperAlgebra;
use crate::rootdata::Weight;

pub use rewrite::{rewrite_word, Strategy};
pub use straighten::Straightener;

/// A total order on the basis used to read monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Order {
    seq: Vec<usize>,
    pos: Vec<usize>,
}

impl Order {
    pub fn from_sequence(seq: Vec<usize>) -> Order {
        let mut pos = vec![usize::MAX; seq.len()];
        for (k, &i) in seq.iter().enumerate() {
            pos[i] = k;
        }
        assert!(
            pos.iter().all(|&p| p != usize::MAX),
            "order must be a permutation"
        );
        Order { seq, pos }
    }

    /// n⁻, h, n⁺ in basis order.
    pub fn triangular(a: &SuperAlgebra) -> Order {
        Order::from_sequence((0..a.dim()).collect())
    }

    /// g₋₁, then g₀̄ in basis order, then g₁.
    pub fn psi(a: &SuperAlgebra) -> Order {
        let mut seq: Vec<usize> = a.neg_odd_range().collect();
        seq.extend(a.even_indices());
        seq.extend(a.pos_odd_range());
        Order::from_sequence(seq)
    }

    pub fn sequence(&self) -> &[usize] {
        &self.seq
    }

    pub fn position(&self, i: usize) -> usize {
        self.pos[i]
    }
}

/// Exponents indexed by basis element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u8>);

impl Monomial {
    pub fn one(dim: usize) -> Monomial {
        Monomial(vec![0; dim])
    }

    pub fn from_exponents(e: Vec<u8>) -> Monomial {
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u8] {
        &self.0
    }

    pub fn exp(&self, i: usize) -> u8 {
        self.0[i]
    }

    pub fn with(&self, i: usize, e: u8) -> Monomial {
        let mut m = self.clone();
        m.0[i] = e;
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    /// Leftmost factor along `order`.
    pub fn first(&self, order: &Order) -> Option<usize> {
        order.seq.iter().copied().find(|&i| self.0[i] > 0)
    }

    /// The word this monomial stands for.
    pub fn word(&self, order: &Order) -> Vec<usize> {
        order
            .seq
            .iter()
            .flat_map(|&i| std::iter::repeat_n(i, self.0[i] as usize))
            .collect()
    }

    /// `X[-e1+d1]^1 * h1^2`; `1` for the empty product.
    pub fn format(&self, a: &SuperAlgebra, order: &Order) -> String {
        let parts: Vec<String> = order
            .seq
            .iter()
            .filter(|&&i| self.0[i] > 0)
            .map(|&i| format!("{}^{}", a.label(i), self.0[i]))
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" * ")
        }
    }
}

/// A finite combination of PBW monomials with nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElem {
    terms: BTreeMap<Monomial, FieldElem>,
}

impl AlgebraElem {
    pub fn zero() -> AlgebraElem {
        AlgebraElem::default()
    }

    pub fn one(dim: usize) -> AlgebraElem {
        AlgebraElem::monomial(Monomial::one(dim), FieldElem::ONE)
    }

    pub fn monomial(m: Monomial, c: FieldElem) -> AlgebraElem {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        AlgebraElem { terms }
    }

    /// A single generator `b_i`.
    pub fn generator(dim: usize, i: usize) -> AlgebraElem {
        AlgebraElem::monomial(Monomial::one(dim).with(i, 1), FieldElem::ONE)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, FieldElem)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> FieldElem {
        self.terms.get(m).copied().unwrap_or(FieldElem::ZERO)
    }

    pub fn add_term(&mut self, f: &FieldCtx, m: Monomial, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = f.add(*o.get(), c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, f: &FieldCtx, c: FieldElem, other: &AlgebraElem) {
        if c.is_zero() {
            return;
        }
        for (m, &d) in &other.terms {
            self.add_term(f, m.clone(), f.mul(c, d));
        }
    }

    pub fn sub(&self, f: &FieldCtx, other: &AlgebraElem) -> AlgebraElem {
        let mut out = self.clone();
        out.add_scaled(f, f.neg(FieldElem::ONE), other);
        out
    }

    pub fn format(&self, a: &SuperAlgebra, order: &Order) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let f = a.field();
        self.terms
            .iter()
            .map(|(m, &c)| format!("({})*{}", f.format(c), m.format(a, order)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// An element of U_χ(h): toral exponent tuples to coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HPolynomial {
    #[serde(skip)]
    terms: BTreeMap<Vec<u8>, FieldElem>,
}

impl HPolynomial {
    pub fn constant(rank: usize, c: FieldElem) -> HPolynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; rank], c);
        }
        HPolynomial { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, FieldElem)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Substitutes `λ(h_i)` for `h_i`.
    pub fn eval(&self, f: &FieldCtx, lambda: &Weight) -> Result<FieldElem> {
        let mut acc = FieldElem::ZERO;
        for (e, &c) in &self.terms {
            if e.len() != lambda.len() {
                return Err(Error::Dimension(format!(
                    "polynomial in {} variables, weight of length {}",
                    e.len(),
                    lambda.len()
                )));
            }
            let mut t = c;
            for (&x, &k) in lambda.coords().iter().zip(e) {
                t = f.mul(t, f.pow(x, k as u64));
            }
            acc = f.add(acc, t);
        }
        Ok(acc)
    }

    /// `(exponents, coefficient)` pairs with coefficients in text form.
    pub fn to_pairs(&self, f: &FieldCtx) -> Vec<(Vec<u8>, String)> {
        self.terms
            .iter()
            .map(|(e, &c)| (e.clone(), f.format(c)))
            .collect()
    }
}

/// Keeps the terms lying in U(h): drops every term with a root vector factor.
pub fn reduce_mod_n_plus(a: &SuperAlgebra, x: &AlgebraElem) -> HPolynomial {
    let toral = a.toral_range();
    let mut out = HPolynomial::default();
    for (m, c) in x.terms() {
        let pure = m
            .exponents()
            .iter()
            .enumerate()
            .all(|(i, &e)| e == 0 || toral.contains(&i));
        if pure {
            out.terms.insert(m.exponents()[toral.clone()].to_vec(), c);
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TKind {
    Plus,
    Minus,
    PlusMinus,
}

/// `T₊`, `T₋` (ordered products of the positive / negative odd root vectors) or `T₊T₋`.
pub fn build_t(s: &mut Straightener, which: TKind) -> AlgebraElem {
    let a = s.algebra();
    let plus: Vec<usize> = a.pos_odd_range().collect();
    let minus: Vec<usize> = a.neg_odd_range().collect();
    match which {
        TKind::Plus => s.word(&plus),
        TKind::Minus => s.word(&minus),
        TKind::PlusMinus => {
            let mut w = plus;
            w.extend(minus);
            s.word(&w)
        }
    }
}

/// Every canonical monomial of U_χ(g), or of U_χ(g₀̄) when `even_only`.
pub fn pbw_basis(a: &SuperAlgebra, even_only: bool) -> Vec<Monomial> {
    let p = a.field().p() as u8;
    let gens: Vec<usize> = if even_only {
        a.even_indices()
    } else {
        (0..a.dim()).collect()
    };
    let mut out = vec![Monomial::one(a.dim())];
    for &i in &gens {
        let top = if a.parity(i) == 1 { 2 } else { p };
        let mut next = Vec::with_capacity(out.len() * top as usize);
        for m in &out {
            for e in 0..top {
                next.push(m.with(i, e));
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests;
