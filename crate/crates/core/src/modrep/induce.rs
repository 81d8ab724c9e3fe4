//! Induced modules by in-module straightening, and the functors built on it.
//!
//! An induced module is `U ⊗_{U(s)} B` where `s` is spanned by the
//! non-free generators and acts on the base module `B`, and the free
//! generators (taken in a fixed order) span a complementary subalgebra.
//! Its basis is ordered free monomials tensored with the base basis.

use std::rc::Rc;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{Echelon, FieldElem, Matrix};
use crate::liesuper::{PChar, SuperAlgebra};
use crate::rootdata::Weight;

use super::{part_indices, FDModule, Part, Provenance};

struct Induction<'a> {
    a: &'a SuperAlgebra,
    chi_pow: Vec<FieldElem>,
    free_pos: Vec<Option<usize>>,
    free: Vec<usize>,
    radix: Vec<usize>,
    stride: Vec<usize>,
    base_dim: usize,
    base: Vec<Option<Matrix>>,
    dim: usize,
    memo: Vec<Option<Rc<Vec<FieldElem>>>>,
    busy: Vec<bool>,
}

impl<'a> Induction<'a> {
    fn new(
        a: &'a SuperAlgebra,
        chi: &PChar,
        free: Vec<usize>,
        base_dim: usize,
        base: Vec<Option<Matrix>>,
    ) -> Induction<'a> {
        let f = a.field();
        let p = f.p() as usize;
        let mut free_pos = vec![None; a.dim()];
        for (k, &i) in free.iter().enumerate() {
            free_pos[i] = Some(k);
        }
        let radix: Vec<usize> = free
            .iter()
            .map(|&i| if a.parity(i) == 1 { 2 } else { p })
            .collect();
        let mut stride = vec![1; free.len()];
        for k in (0..free.len().saturating_sub(1)).rev() {
            stride[k] = stride[k + 1] * radix[k + 1];
        }
        let nmono: usize = radix.iter().product();
        let dim = nmono * base_dim;
        Induction {
            a,
            chi_pow: (0..a.dim()).map(|i| f.frobenius(chi.value(i))).collect(),
            free_pos,
            free,
            radix,
            stride,
            base_dim,
            base,
            dim,
            memo: vec![None; a.dim() * dim],
            busy: vec![false; a.dim() * dim],
        }
    }

    fn exp(&self, mono: usize, k: usize) -> usize {
        (mono / self.stride[k]) % self.radix[k]
    }

    fn add_scaled(&self, out: &mut [FieldElem], c: FieldElem, v: &[FieldElem]) {
        let f = self.a.field();
        if c.is_zero() {
            return;
        }
        for (o, &x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *o = f.add(*o, f.mul(c, x));
            }
        }
    }

    fn act(&mut self, g: usize, b: usize) -> Rc<Vec<FieldElem>> {
        let key = g * self.dim + b;
        if let Some(v) = &self.memo[key] {
            return v.clone();
        }
        assert!(!self.busy[key], "induction recursion revisited ({g}, {b})");
        self.busy[key] = true;
        let v = Rc::new(self.compute(g, b));
        self.busy[key] = false;
        self.memo[key] = Some(v.clone());
        v
    }

    fn compute(&mut self, g: usize, b: usize) -> Vec<FieldElem> {
        let a = self.a;
        let f = a.field();
        let (mono, u) = (b / self.base_dim, b % self.base_dim);
        let first = (0..self.free.len()).find(|&k| self.exp(mono, k) > 0);
        let mut out = vec![FieldElem::ZERO; self.dim];
        match (self.free_pos[g], first) {
            (None, None) => {
                let m = self.base[g]
                    .as_ref()
                    .expect("base action for non-free generator");
                for w in 0..self.base_dim {
                    out[w] = m.get(w, u);
                }
            }
            (Some(qg), None) => out[(mono + self.stride[qg]) * self.base_dim + u] = FieldElem::ONE,
            (Some(qg), Some(qf)) if qg < qf => {
                out[(mono + self.stride[qg]) * self.base_dim + u] = FieldElem::ONE
            }
            (Some(qg), Some(qf)) if qg == qf => {
                let e = self.exp(mono, qg);
                let rest = (mono - e * self.stride[qg]) * self.base_dim + u;
                if a.parity(g) == 1 {
                    // x² = ½[x, x]
                    for (k, c) in a.bracket_basis(g, g).clone() {
                        let t = self.act(k, rest);
                        self.add_scaled(&mut out, f.mul(f.half(), c), &t);
                    }
                } else if e + 1 < self.radix[qg] {
                    out[(mono + self.stride[qg]) * self.base_dim + u] = FieldElem::ONE;
                } else {
                    // x^p = x^{[p]} + χ(x)^p
                    for (k, c) in a.p_power_basis(g).expect("even").clone() {
                        let t = self.act(k, rest);
                        self.add_scaled(&mut out, c, &t);
                    }
                    out[rest] = f.add(out[rest], self.chi_pow[g]);
                }
            }
            (_, Some(qf)) => {
                // x_g x_j m' = ± x_j (x_g m') + [x_g, x_j] m'
                let j = self.free[qf];
                let bprime = (mono - self.stride[qf]) * self.base_dim + u;
                let inner = self.act(g, bprime);
                let sign = if a.parity(g) & a.parity(j) == 1 {
                    f.neg(FieldElem::ONE)
                } else {
                    FieldElem::ONE
                };
                for (n, &c) in inner.iter().enumerate() {
                    if !c.is_zero() {
                        let t = self.act(j, n);
                        self.add_scaled(&mut out, f.mul(sign, c), &t);
                    }
                }
                for (k, c) in a.bracket_basis(g, j).clone() {
                    let t = self.act(k, bprime);
                    self.add_scaled(&mut out, c, &t);
                }
            }
        }
        out
    }

    fn matrices(&mut self, gens: &[usize]) -> Vec<Option<Matrix>> {
        let mut out = vec![None; self.a.dim()];
        for &g in gens {
            let mut m = Matrix::zeros(self.dim, self.dim);
            for b in 0..self.dim {
                let col = self.act(g, b);
                for (r, &x) in col.iter().enumerate() {
                    if !x.is_zero() {
                        m.set(r, b, x);
                    }
                }
            }
            out[g] = Some(m);
        }
        out
    }

    /// Parity of each basis vector, given parities on the base.
    fn parity(&self, base: &[u8]) -> Vec<u8> {
        (0..self.dim)
            .map(|b| {
                let (mono, u) = (b / self.base_dim, b % self.base_dim);
                let odd = (0..self.free.len())
                    .filter(|&k| self.a.parity(self.free[k]) == 1)
                    .map(|k| self.exp(mono, k) as u8)
                    .sum::<u8>();
                (odd + base[u]) % 2
            })
            .collect()
    }
}

fn check_weight(a: &SuperAlgebra, chi: &PChar, lambda: &Weight) -> Result<()> {
    if !chi.kills_positive_even(a) {
        return Err(Error::ChiNotNormalized);
    }
    a.root_data()
        .check_in_lambda_chi(a.field(), &chi.toral_values(a), lambda)
}

fn highest_weight_base(a: &SuperAlgebra, part: Part, lambda: &Weight) -> Vec<Option<Matrix>> {
    let mut base = vec![None; a.dim()];
    for i in part_indices(a, part) {
        if a.is_toral(i) {
            base[i] = Some(Matrix::from_rows(
                vec![vec![lambda.coords()[i - a.toral_range().start]]],
                1,
            ));
        } else if a.is_positive(i) {
            base[i] = Some(Matrix::zeros(1, 1));
        }
    }
    base
}

/// `Z_χ(λ) = U_χ(g) ⊗_{U_χ(b)} K_λ`; basis `X_{−α}^a X_{−β}^c v` in triangular order.
pub fn baby_verma(a: &Arc<SuperAlgebra>, chi: &PChar, lambda: &Weight) -> Result<FDModule> {
    check_weight(a, chi, lambda)?;
    let base = highest_weight_base(a, Part::Full, lambda);
    let mut ind = Induction::new(a, chi, a.negative_range().collect(), 1, base);
    let actions = ind.matrices(&part_indices(a, Part::Full));
    let parity = ind.parity(&[0]);
    FDModule::new(
        a.clone(),
        Part::Full,
        chi.clone(),
        actions,
        Some(parity),
        Provenance::Verma,
    )
}

/// `Z⁰_χ(λ) = U_χ(g₀̄) ⊗_{U_χ(b₀̄)} K_λ`.
pub fn baby_verma_even(a: &Arc<SuperAlgebra>, chi: &PChar, lambda: &Weight) -> Result<FDModule> {
    check_weight(a, chi, lambda)?;
    let base = highest_weight_base(a, Part::Even, lambda);
    let mut ind = Induction::new(a, chi, a.neg_even_range().collect(), 1, base);
    let actions = ind.matrices(&part_indices(a, Part::Even));
    let parity = ind.parity(&[0]);
    FDModule::new(
        a.clone(),
        Part::Even,
        chi.clone(),
        actions,
        Some(parity),
        Provenance::Verma,
    )
}

/// `ψ(M⁰) = U_χ(g) ⊗_{U_χ(g₀̄ ⊕ g₁)} M⁰` with g₁ acting by zero; basis `X_{−β}^c ⊗ m`.
pub fn induce_psi(m0: &FDModule) -> Result<FDModule> {
    if m0.part() != Part::Even {
        return Err(Error::WrongPart(
            "induction needs a module over the even part".into(),
        ));
    }
    let a = m0.algebra();
    let d = m0.dim();
    let mut base = m0.actions().to_vec();
    for i in a.pos_odd_range() {
        base[i] = Some(Matrix::zeros(d, d));
    }
    let mut ind = Induction::new(a, m0.chi(), a.neg_odd_range().collect(), d, base);
    let actions = ind.matrices(&part_indices(a, Part::Full));
    let parity = m0.parity().map(|p| ind.parity(p));
    FDModule::new(
        a.clone(),
        Part::Full,
        m0.chi().clone(),
        actions,
        parity,
        Provenance::Induced,
    )
}

/// `ψ(T) = id ⊗ T` for an intertwiner `T: M⁰ → N⁰` (a `dim N⁰ × dim M⁰` matrix).
pub fn psi_map(a: &SuperAlgebra, t: &Matrix) -> Matrix {
    let blocks = 1usize << a.pos_odd_range().len();
    let (r, c) = (t.rows(), t.cols());
    Matrix::from_fn(blocks * r, blocks * c, |i, j| {
        if i / r == j / c {
            t.get(i % r, j % c)
        } else {
            FieldElem::ZERO
        }
    })
}

/// `M^{g₁}` with the restricted g₀̄-action.
pub fn invariants_phi(m: &FDModule) -> Result<FDModule> {
    if m.part() != Part::Full {
        return Err(Error::WrongPart(
            "invariants need a module over the full algebra".into(),
        ));
    }
    let a = m.algebra();
    let f = m.field();
    let d = m.dim();
    let odd: Vec<usize> = a.pos_odd_range().collect();
    let stacked = Matrix::from_fn(odd.len() * d, d, |r, c| m.act(odd[r / d]).get(r % d, c));
    let ker = stacked.kernel(f).columns();
    let ech = Echelon::from_vectors(f, d, ker.iter());
    let mut inv = m.restrict_even().submodule(&ech)?;
    inv.provenance = Provenance::Invariants;
    Ok(inv)
}

/// Super dual, a module for `U_{−χ}`: `x ↦ −xᵀ` on even `x`, and the transpose
/// twisted by the parity sign on odd `x`.
pub fn dual_module(m: &FDModule) -> Result<FDModule> {
    let par = m.parity().ok_or(crate::error::Error::NoParity)?.to_vec();
    let a = m.algebra();
    let f = m.field();
    let mut actions = vec![None; a.dim()];
    for i in m.part_indices() {
        let t = m.act(i).transpose();
        let odd = a.parity(i) == 1;
        actions[i] = Some(Matrix::from_fn(m.dim(), m.dim(), |r, c| {
            let x = f.neg(t.get(r, c));
            if odd && par[c] == 1 {
                f.neg(x)
            } else {
                x
            }
        }));
    }
    FDModule::new(
        a.clone(),
        m.part(),
        m.chi().neg(f),
        actions,
        Some(par),
        Provenance::Dual,
    )
}
