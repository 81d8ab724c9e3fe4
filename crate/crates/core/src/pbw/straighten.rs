use std::collections::HashMap;
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem};
use crate::liesuper::{PChar, SuperAlgebra};

use super::{AlgebraElem, Monomial, Order};

/// Memoized left multiplication `b_i · m` in U_χ(g), for one order and one χ.
///
/// With m = x_j · m' and x_j the leftmost factor of m:
/// - `i` before `j`: prepend;
/// - `i == j`: raise the exponent, reducing `x²` (odd) or `x^p` (even);
/// - otherwise `x_i x_j m' = ± x_j (x_i m') + [x_i, x_j] m'`.
pub struct Straightener<'a> {
    a: &'a SuperAlgebra,
    chi: PChar,
    order: Order,
    chi_pow: Vec<FieldElem>,
    memo: HashMap<(usize, Monomial), Rc<AlgebraElem>>,
}

impl<'a> Straightener<'a> {
    pub fn new(a: &'a SuperAlgebra, chi: PChar, order: Order) -> Straightener<'a> {
        let f = a.field();
        let chi_pow = (0..a.dim()).map(|i| f.frobenius(chi.value(i))).collect();
        Straightener {
            a,
            chi,
            order,
            chi_pow,
            memo: HashMap::new(),
        }
    }

    pub fn triangular(a: &'a SuperAlgebra, chi: PChar) -> Straightener<'a> {
        let order = Order::triangular(a);
        Straightener::new(a, chi, order)
    }

    pub fn algebra(&self) -> &'a SuperAlgebra {
        self.a
    }

    pub fn chi(&self) -> &PChar {
        &self.chi
    }

    pub fn order(&self) -> &Order {
        &self.order
    }

    fn f(&self) -> &'a FieldCtx {
        self.a.field()
    }

    pub fn left_mul(&mut self, i: usize, m: &Monomial) -> Rc<AlgebraElem> {
        let key = (i, m.clone());
        if let Some(r) = self.memo.get(&key) {
            return r.clone();
        }
        let r = Rc::new(self.compute(i, m));
        self.memo.insert(key, r.clone());
        r
    }

    fn compute(&mut self, i: usize, m: &Monomial) -> AlgebraElem {
        let f = self.f();
        let a = self.a;
        let p = f.p() as u8;
        let Some(j) = m.first(&self.order) else {
            return AlgebraElem::monomial(m.with(i, 1), FieldElem::ONE);
        };
        let (qi, qj) = (self.order.position(i), self.order.position(j));
        if qi < qj {
            return AlgebraElem::monomial(m.with(i, 1), FieldElem::ONE);
        }
        let mut out = AlgebraElem::zero();
        if qi == qj {
            let e = m.exp(i) + 1;
            let rest = m.with(i, 0);
            if a.parity(i) == 1 {
                // x² = ½[x, x]
                let br = a.bracket_basis(i, i).clone();
                for (k, c) in br {
                    let t = self.left_mul(k, &rest);
                    out.add_scaled(f, f.mul(f.half(), c), &t);
                }
            } else if e < p {
                out.add_term(f, m.with(i, e), FieldElem::ONE);
            } else {
                // x^p = x^{[p]} + χ(x)^p
                let pp = a.p_power_basis(i).expect("even").clone();
                for (k, c) in pp {
                    let t = self.left_mul(k, &rest);
                    out.add_scaled(f, c, &t);
                }
                out.add_term(f, rest, self.chi_pow[i]);
            }
            return out;
        }
        let mprime = m.with(j, m.exp(j) - 1);
        let inner = self.left_mul(i, &mprime);
        let sign = if a.parity(i) & a.parity(j) == 1 {
            f.neg(FieldElem::ONE)
        } else {
            FieldElem::ONE
        };
        for (n, c) in inner.terms() {
            let t = self.left_mul(j, n);
            out.add_scaled(f, f.mul(sign, c), &t);
        }
        let br = a.bracket_basis(i, j).clone();
        for (k, c) in br {
            let t = self.left_mul(k, &mprime);
            out.add_scaled(f, c, &t);
        }
        out
    }

    /// `b_i · x` for an element.
    pub fn left_mul_elem(&mut self, i: usize, x: &AlgebraElem) -> AlgebraElem {
        let f = self.f();
        let mut out = AlgebraElem::zero();
        for (m, c) in x.terms() {
            let t = self.left_mul(i, m);
            out.add_scaled(f, c, &t);
        }
        out
    }

    /// The ordered product of a word of generators.
    pub fn word(&mut self, w: &[usize]) -> AlgebraElem {
        let mut acc = AlgebraElem::one(self.a.dim());
        for &i in w.iter().rev() {
            acc = self.left_mul_elem(i, &acc);
        }
        acc
    }

    /// Product of two elements.
    pub fn multiply(&mut self, x: &AlgebraElem, y: &AlgebraElem) -> AlgebraElem {
        let f = self.f();
        let mut out = AlgebraElem::zero();
        for (m, c) in x.terms() {
            let mut acc = y.clone();
            for &i in m.word(&self.order).iter().rev() {
                acc = self.left_mul_elem(i, &acc);
            }
            out.add_scaled(f, c, &acc);
        }
        out
    }

    /// Product checked against a second straightener's χ.
    pub fn multiply_checked(
        &mut self,
        other_chi: &PChar,
        x: &AlgebraElem,
        y: &AlgebraElem,
    ) -> Result<AlgebraElem> {
        if other_chi != &self.chi {
            return Err(Error::ChiMismatch);
        }
        Ok(self.multiply(x, y))
    }

    /// Supercommutator with a homogeneous element of parity `py`.
    pub fn commutator(&mut self, i: usize, y: &AlgebraElem, py: u8) -> AlgebraElem {
        let f = self.f();
        let xi = AlgebraElem::generator(self.a.dim(), i);
        let xy = self.multiply(&xi, y);
        let yx = self.multiply(y, &xi);
        let mut out = xy;
        let sign = if self.a.parity(i) & py == 1 {
            FieldElem::ONE
        } else {
            f.neg(FieldElem::ONE)
        };
        out.add_scaled(f, sign, &yx);
        out
    }
}
