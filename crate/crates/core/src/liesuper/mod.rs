//! Type I Lie superalgebras in their defining matrix realization.
//!
//! The basis is ordered negative even roots, negative odd roots, toral
//! elements, positive odd roots, positive even roots. Inside each root group
//! the order is that of [`RootData`]'s positive root lists. Brackets and the
//! p-power map are computed from matrices once and kept as sparse tables.

mod realize;

use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem, Matrix};
use crate::rootdata::{Family, Root, RootData};

use realize::{CoordSolver, Realization};

/// Sparse coordinate vector: `(basis index, coefficient)` with nonzero coefficients, sorted by index.
pub type Sparse = Vec<(usize, FieldElem)>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    Root(Root),
    Toral(usize),
}

#[derive(Clone, Debug)]
pub struct BasisElem {
    pub label: Label,
    pub parity: u8,
    pub zdeg: i8,
    pub matrix: Matrix,
}

pub struct SuperAlgebra {
    rd: RootData,
    f: Arc<FieldCtx>,
    real: Realization,
    solver: CoordSolver,
    basis: Vec<BasisElem>,
    brackets: Vec<Vec<Sparse>>,
    ppow: Vec<Option<Sparse>>,
    coroots: Vec<Vec<FieldElem>>,
}

impl fmt::Debug for SuperAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({}|{}) over {:?}",
            self.rd.family(),
            self.rd.m(),
            self.rd.n(),
            self.f
        )
    }
}

fn sparse(v: &[FieldElem]) -> Sparse {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, &c)| (i, c))
        .collect()
}

impl SuperAlgebra {
    pub fn new(family: Family, m: usize, n: usize, f: Arc<FieldCtx>) -> Result<SuperAlgebra> {
        let rd = RootData::new(family, m, n)?;
        let real = Realization::new(&f, &rd);
        let neg = |r: &Root| r.iter().map(|c| -c).collect::<Root>();

        let mut pos_even = Vec::new();
        for a in rd.even_positive() {
            pos_even.push(real.root_vector(&f, a, 0)?);
        }
        let mut pos_odd = Vec::new();
        for b in rd.odd_positive() {
            pos_odd.push(real.root_vector(&f, b, 1)?);
        }
        let mut neg_even = Vec::new();
        for (a, x) in rd.even_positive().iter().zip(&pos_even) {
            neg_even.push(Self::paired_negative(&f, &rd, &real, a, x, 0)?);
        }
        let mut neg_odd = Vec::new();
        for (b, x) in rd.odd_positive().iter().zip(&pos_odd) {
            neg_odd.push(Self::paired_negative(&f, &rd, &real, b, x, 1)?);
        }
        let toral: Vec<Matrix> = rd
            .toral_pairing()
            .iter()
            .map(|row| real.diag_combination(&f, &rd.root_to_field(&f, row)))
            .collect();

        let mut basis = Vec::new();
        for (a, x) in rd.even_positive().iter().zip(neg_even) {
            basis.push(BasisElem {
                label: Label::Root(neg(a)),
                parity: 0,
                zdeg: 0,
                matrix: x,
            });
        }
        for (b, x) in rd.odd_positive().iter().zip(neg_odd) {
            basis.push(BasisElem {
                label: Label::Root(neg(b)),
                parity: 1,
                zdeg: -1,
                matrix: x,
            });
        }
        for (i, x) in toral.into_iter().enumerate() {
            basis.push(BasisElem {
                label: Label::Toral(i),
                parity: 0,
                zdeg: 0,
                matrix: x,
            });
        }
        for (b, x) in rd.odd_positive().iter().zip(pos_odd) {
            basis.push(BasisElem {
                label: Label::Root(b.clone()),
                parity: 1,
                zdeg: 1,
                matrix: x,
            });
        }
        for (a, x) in rd.even_positive().iter().zip(pos_even) {
            basis.push(BasisElem {
                label: Label::Root(a.clone()),
                parity: 0,
                zdeg: 0,
                matrix: x,
            });
        }
        for b in &basis {
            if !real.preserves_form(&f, &b.matrix, b.parity) {
                return Err(Error::Relation(format!(
                    "basis element {:?} leaves the algebra",
                    b.label
                )));
            }
        }

        let mats: Vec<Matrix> = basis.iter().map(|b| b.matrix.clone()).collect();
        let solver = CoordSolver::new(&f, &mats);
        let d = basis.len();
        let mut brackets = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                let (bi, bj) = (&basis[i], &basis[j]);
                let c = real.super_bracket(&f, &bi.matrix, bi.parity, &bj.matrix, bj.parity);
                let coords = solver.coords(&f, &c).ok_or_else(|| {
                    Error::Relation(format!("bracket of basis {i}, {j} is outside the algebra"))
                })?;
                brackets[i][j] = sparse(&coords);
            }
        }
        let mut ppow = vec![None; d];
        for (i, b) in basis.iter().enumerate() {
            if b.parity == 0 {
                let xp = b.matrix.pow(&f, f.p() as u64);
                let coords = solver.coords(&f, &xp).ok_or_else(|| {
                    Error::Relation(format!("p-th power of basis {i} is outside the algebra"))
                })?;
                ppow[i] = Some(sparse(&coords));
            }
        }

        let mut alg = SuperAlgebra {
            rd,
            f,
            real,
            solver,
            basis,
            brackets,
            ppow,
            coroots: Vec::new(),
        };
        alg.coroots = alg.compute_coroots();
        Ok(alg)
    }

    /// `X_{−α}` from the kernel computation, rescaled so that `[X_α, X_{−α}] = H_α`.
    fn paired_negative(
        f: &FieldCtx,
        rd: &RootData,
        real: &Realization,
        root: &Root,
        xpos: &Matrix,
        parity: u8,
    ) -> Result<Matrix> {
        let negr: Root = root.iter().map(|c| -c).collect();
        let xneg = real.root_vector(f, &negr, parity)?;
        let got = real.super_bracket(f, xpos, parity, &xneg, parity);
        let target = Self::coroot_matrix(f, rd, real, root, parity);
        let (idx, t) = target
            .data()
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
            .map(|(i, &c)| (i, c))
            .ok_or_else(|| Error::Relation("zero coroot".into()))?;
        let scale = f
            .div(got.data()[idx], t)
            .filter(|c| !c.is_zero())
            .ok_or_else(|| {
                Error::Relation(format!(
                    "[X_a, X_-a] not proportional to the coroot for {root:?}"
                ))
            })?;
        if got != target.scale(f, scale) {
            return Err(Error::Relation(format!(
                "[X_a, X_-a] not proportional to the coroot for {root:?}"
            )));
        }
        Ok(xneg.scale(f, f.inv(scale).expect("nonzero")))
    }

    fn coroot_matrix(
        f: &FieldCtx,
        rd: &RootData,
        real: &Realization,
        root: &Root,
        parity: u8,
    ) -> Matrix {
        let dual: Vec<FieldElem> = root
            .iter()
            .zip(rd.signature())
            .map(|(&a, &s)| f.from_int(a * s))
            .collect();
        let h = real.diag_combination(f, &dual);
        if parity == 1 {
            return h;
        }
        let norm: i64 = root
            .iter()
            .zip(rd.signature())
            .map(|(&a, &s)| a * a * s)
            .sum();
        let factor = f
            .div(f.from_int(2), f.from_int(norm))
            .expect("even roots are anisotropic");
        h.scale(f, factor)
    }

    fn compute_coroots(&self) -> Vec<Vec<FieldElem>> {
        let mut out = Vec::new();
        for idx in self.positive_range() {
            let neg = self.negative_of(idx);
            let mut v = vec![FieldElem::ZERO; self.rank()];
            for &(k, c) in &self.brackets[idx][neg] {
                let t = k - self.toral_range().start;
                v[t] = c;
            }
            out.push(v);
        }
        out
    }

    pub fn root_data(&self) -> &RootData {
        &self.rd
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.f
    }

    pub fn family(&self) -> Family {
        self.rd.family()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn rank(&self) -> usize {
        self.rd.rank()
    }

    /// Size of the defining matrices.
    pub fn defining_size(&self) -> usize {
        self.real.size
    }

    pub fn basis(&self) -> &[BasisElem] {
        &self.basis
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.basis[i].parity
    }

    pub fn zdeg(&self, i: usize) -> i8 {
        self.basis[i].zdeg
    }

    fn n_even_pos(&self) -> usize {
        self.rd.even_positive().len()
    }

    fn n_odd_pos(&self) -> usize {
        self.rd.odd_positive().len()
    }

    pub fn neg_even_range(&self) -> Range<usize> {
        0..self.n_even_pos()
    }

    pub fn neg_odd_range(&self) -> Range<usize> {
        let s = self.n_even_pos();
        s..s + self.n_odd_pos()
    }

    pub fn toral_range(&self) -> Range<usize> {
        let s = self.n_even_pos() + self.n_odd_pos();
        s..s + self.rank()
    }

    pub fn pos_odd_range(&self) -> Range<usize> {
        let s = self.toral_range().end;
        s..s + self.n_odd_pos()
    }

    pub fn pos_even_range(&self) -> Range<usize> {
        let s = self.pos_odd_range().end;
        s..s + self.n_even_pos()
    }

    /// Indices of positive root vectors (odd then even).
    pub fn positive_range(&self) -> Range<usize> {
        self.pos_odd_range().start..self.dim()
    }

    pub fn negative_range(&self) -> Range<usize> {
        0..self.toral_range().start
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i >= self.pos_odd_range().start
    }

    pub fn is_negative(&self, i: usize) -> bool {
        i < self.toral_range().start
    }

    pub fn is_toral(&self, i: usize) -> bool {
        self.toral_range().contains(&i)
    }

    /// Index of the root vector for `−α` when `i` is the root vector for α.
    pub fn negative_of(&self, i: usize) -> usize {
        let (e, o, r) = (self.n_even_pos(), self.n_odd_pos(), self.rank());
        if i < e {
            self.pos_even_range().start + i
        } else if i < e + o {
            self.pos_odd_range().start + (i - e)
        } else if i < e + o + r {
            panic!("toral elements have no opposite root")
        } else if i < e + 2 * o + r {
            e + (i - e - o - r)
        } else {
            i - e - 2 * o - r
        }
    }

    pub fn even_indices(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.basis[i].parity == 0)
            .collect()
    }

    pub fn odd_indices(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.basis[i].parity == 1)
            .collect()
    }

    pub fn root_of(&self, i: usize) -> Option<&Root> {
        match &self.basis[i].label {
            Label::Root(r) => Some(r),
            Label::Toral(_) => None,
        }
    }

    pub fn index_of_root(&self, root: &[i64]) -> Option<usize> {
        self.basis
            .iter()
            .position(|b| matches!(&b.label, Label::Root(r) if r.as_slice() == root))
    }

    /// `X[e1-d1]` or `h1`.
    pub fn label(&self, i: usize) -> String {
        match &self.basis[i].label {
            Label::Root(r) => format!("X[{}]", self.rd.format_root(r)),
            Label::Toral(t) => format!("h{}", t + 1),
        }
    }

    /// Coordinates of `[b_i, b_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &Sparse {
        &self.brackets[i][j]
    }

    pub fn bracket(&self, x: &[FieldElem], y: &[FieldElem]) -> Result<Vec<FieldElem>> {
        let d = self.dim();
        if x.len() != d || y.len() != d {
            return Err(Error::Dimension(format!(
                "algebra vectors must have length {d}"
            )));
        }
        let f = &self.f;
        let mut out = vec![FieldElem::ZERO; d];
        for (i, &a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = f.mul(a, b);
                for &(k, c) in &self.brackets[i][j] {
                    out[k] = f.add(out[k], f.mul(ab, c));
                }
            }
        }
        Ok(out)
    }

    /// Coordinates of `b_i^{[p]}`; `None` for odd basis elements.
    pub fn p_power_basis(&self, i: usize) -> Option<&Sparse> {
        self.ppow[i].as_ref()
    }

    /// `x^{[p]}` for an even vector, by the p-th matrix power.
    pub fn p_power(&self, x: &[FieldElem]) -> Result<Vec<FieldElem>> {
        if x.iter()
            .enumerate()
            .any(|(i, c)| !c.is_zero() && self.basis[i].parity == 1)
        {
            return Err(Error::OddPPower);
        }
        let m = self.to_matrix(x)?;
        let mp = m.pow(&self.f, self.f.p() as u64);
        self.coords(&mp)
            .ok_or_else(|| Error::Relation("p-th power left the algebra".into()))
    }

    pub fn to_matrix(&self, x: &[FieldElem]) -> Result<Matrix> {
        if x.len() != self.dim() {
            return Err(Error::Dimension(format!(
                "algebra vectors must have length {}",
                self.dim()
            )));
        }
        let s = self.real.size;
        let mut out = Matrix::zeros(s, s);
        for (b, &c) in self.basis.iter().zip(x) {
            if !c.is_zero() {
                out.add_scaled(&self.f, c, &b.matrix);
            }
        }
        Ok(out)
    }

    /// Coordinates of a matrix in the basis, if it lies in the algebra.
    pub fn coords(&self, m: &Matrix) -> Option<Vec<FieldElem>> {
        self.solver.coords(&self.f, m)
    }

    pub fn unit_vector(&self, i: usize) -> Vec<FieldElem> {
        let mut v = vec![FieldElem::ZERO; self.dim()];
        v[i] = FieldElem::ONE;
        v
    }

    /// Toral coordinates of `H_α = [X_α, X_{−α}]` for the positive root vector at index `i`.
    pub fn coroot(&self, i: usize) -> &[FieldElem] {
        &self.coroots[i - self.positive_range().start]
    }

    /// Weight of the basis element `i` on the toral basis (zero for toral elements).
    pub fn basis_weight(&self, i: usize) -> Vec<FieldElem> {
        match self.root_of(i) {
            Some(r) => self.rd.root_weight(&self.f, r).coords().to_vec(),
            None => vec![FieldElem::ZERO; self.rank()],
        }
    }

    /// Super Jacobi identity on all basis triples.
    pub fn check_jacobi(&self) -> Result<()> {
        let f = &self.f;
        let d = self.dim();
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    let lhs = self.bracket_sparse_left(x, &self.brackets[y][z]);
                    let mut rhs = self.bracket_sparse_right(&self.brackets[x][y], z);
                    let sign = if self.parity(x) & self.parity(y) == 1 {
                        f.neg(FieldElem::ONE)
                    } else {
                        FieldElem::ONE
                    };
                    let t = self.bracket_sparse_left(y, &self.brackets[x][z]);
                    for (r, v) in rhs.iter_mut().zip(t) {
                        *r = f.add(*r, f.mul(sign, v));
                    }
                    if lhs != rhs {
                        return Err(Error::Relation(format!(
                            "super Jacobi fails on ({x}, {y}, {z})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn bracket_sparse_left(&self, i: usize, y: &Sparse) -> Vec<FieldElem> {
        let f = &self.f;
        let mut out = vec![FieldElem::ZERO; self.dim()];
        for &(j, b) in y {
            for &(k, c) in &self.brackets[i][j] {
                out[k] = f.add(out[k], f.mul(b, c));
            }
        }
        out
    }

    fn bracket_sparse_right(&self, x: &Sparse, j: usize) -> Vec<FieldElem> {
        let f = &self.f;
        let mut out = vec![FieldElem::ZERO; self.dim()];
        for &(i, a) in x {
            for &(k, c) in &self.brackets[i][j] {
                out[k] = f.add(out[k], f.mul(a, c));
            }
        }
        out
    }

    /// `g₁` and `g₋₁` are abelian.
    pub fn check_abelian(&self) -> Result<()> {
        for range in [self.pos_odd_range(), self.neg_odd_range()] {
            for i in range.clone() {
                for j in range.clone() {
                    if !self.brackets[i][j].is_empty() {
                        return Err(Error::Relation(format!(
                            "odd part not abelian at ({i}, {j})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A p-character χ ∈ g₀̄*, stored over the full basis with zeros on odd elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PChar {
    #[serde(skip)]
    values: Vec<FieldElem>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChiClass {
    pub nilpotent_normal_form: bool,
    pub semisimple_normal_form: bool,
    pub regular_semisimple: bool,
    pub regular_nilpotent: bool,
}

impl PChar {
    pub fn zero(a: &SuperAlgebra) -> PChar {
        PChar {
            values: vec![FieldElem::ZERO; a.dim()],
        }
    }

    /// Values on the even basis elements, in basis order.
    pub fn from_even_values(a: &SuperAlgebra, even: &[FieldElem]) -> Result<PChar> {
        let idx = a.even_indices();
        if even.len() != idx.len() {
            return Err(Error::Dimension(format!(
                "p-character needs {} even values",
                idx.len()
            )));
        }
        let mut values = vec![FieldElem::ZERO; a.dim()];
        for (&i, &c) in idx.iter().zip(even) {
            values[i] = c;
        }
        Ok(PChar { values })
    }

    /// Semisimple normal form with the given values on the toral basis.
    pub fn semisimple(a: &SuperAlgebra, toral: &[FieldElem]) -> Result<PChar> {
        if toral.len() != a.rank() {
            return Err(Error::Dimension(format!(
                "expected {} toral values",
                a.rank()
            )));
        }
        let mut chi = PChar::zero(a);
        for (i, &c) in a.toral_range().zip(toral) {
            chi.values[i] = c;
        }
        Ok(chi)
    }

    /// Nilpotent normal form: values on `X_{−α}` for the simple even roots α, in order.
    pub fn nilpotent(a: &SuperAlgebra, simple_values: &[FieldElem]) -> Result<PChar> {
        let simple = a.root_data().simple_even_roots();
        if simple_values.len() != simple.len() {
            return Err(Error::Dimension(format!(
                "expected {} values on negative simple even roots",
                simple.len()
            )));
        }
        let mut chi = PChar::zero(a);
        for (alpha, &c) in simple.iter().zip(simple_values) {
            let neg: Root = alpha.iter().map(|x| -x).collect();
            let i = a
                .index_of_root(&neg)
                .expect("negative simple root is a basis element");
            chi.values[i] = c;
        }
        Ok(chi)
    }

    /// χ(X_{−α}) = 1 on each simple even α, zero elsewhere.
    pub fn regular_nilpotent(a: &SuperAlgebra) -> PChar {
        let ones = vec![FieldElem::ONE; a.root_data().simple_even_roots().len()];
        PChar::nilpotent(a, &ones).expect("lengths agree")
    }

    pub fn value(&self, i: usize) -> FieldElem {
        self.values[i]
    }

    pub fn values(&self) -> &[FieldElem] {
        &self.values
    }

    pub fn even_values(&self, a: &SuperAlgebra) -> Vec<FieldElem> {
        a.even_indices()
            .into_iter()
            .map(|i| self.values[i])
            .collect()
    }

    pub fn toral_values(&self, a: &SuperAlgebra) -> Vec<FieldElem> {
        a.toral_range().map(|i| self.values[i]).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|c| c.is_zero())
    }

    pub fn neg(&self, f: &FieldCtx) -> PChar {
        PChar {
            values: self.values.iter().map(|&c| f.neg(c)).collect(),
        }
    }

    /// χ(x) for an algebra vector.
    pub fn eval(&self, f: &FieldCtx, x: &[FieldElem]) -> FieldElem {
        x.iter()
            .zip(&self.values)
            .fold(FieldElem::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
    }

    /// χ(H_α) for the positive root vector at index `i`.
    pub fn on_coroot(&self, a: &SuperAlgebra, i: usize) -> FieldElem {
        let f = a.field();
        a.coroot(i)
            .iter()
            .zip(a.toral_range())
            .fold(FieldElem::ZERO, |acc, (&c, t)| {
                f.add(acc, f.mul(c, self.values[t]))
            })
    }

    /// Vanishes on the positive even root vectors.
    pub fn kills_positive_even(&self, a: &SuperAlgebra) -> bool {
        a.pos_even_range().all(|i| self.values[i].is_zero())
    }

    pub fn classify(&self, a: &SuperAlgebra) -> ChiClass {
        let roots_vanish = a
            .pos_even_range()
            .chain(a.neg_even_range())
            .all(|i| self.values[i].is_zero());
        let nilpotent_normal_form =
            self.kills_positive_even(a) && a.toral_range().all(|i| self.values[i].is_zero());
        let regular_semisimple =
            roots_vanish && a.positive_range().all(|i| !self.on_coroot(a, i).is_zero());
        let regular_nilpotent = nilpotent_normal_form
            && a.root_data().simple_even_roots().iter().all(|alpha| {
                let neg: Root = alpha.iter().map(|x| -x).collect();
                !self.values[a.index_of_root(&neg).expect("basis element")].is_zero()
            });
        ChiClass {
            nilpotent_normal_form,
            semisimple_normal_form: roots_vanish,
            regular_semisimple,
            regular_nilpotent,
        }
    }

    /// Basis of `g_χ = {y : χ([y, g]) = 0}` as coordinate vectors.
    pub fn centralizer(&self, a: &SuperAlgebra) -> Vec<Vec<FieldElem>> {
        let f = a.field();
        let d = a.dim();
        let m = Matrix::from_fn(d, d, |j, i| {
            a.bracket_basis(i, j)
                .iter()
                .fold(FieldElem::ZERO, |acc, &(k, c)| {
                    f.add(acc, f.mul(c, self.values[k]))
                })
        });
        m.kernel(f).columns()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn alg(family: Family, m: usize, n: usize, p: u32, k: i64) -> SuperAlgebra {
        SuperAlgebra::new(family, m, n, FieldCtx::new(p, k).unwrap()).unwrap()
    }

    fn e(f: &FieldCtx, x: i64) -> FieldElem {
        f.from_int(x)
    }

    #[test]
    fn gl11_basis_and_brackets() {
        let a = alg(Family::Gl, 1, 1, 3, 1);
        let labels: Vec<String> = (0..a.dim()).map(|i| a.label(i)).collect();
        assert_eq!(labels, ["X[-e1+d1]", "h1", "h2", "X[e1-d1]"]);
        let (xm, xp) = (0, 3);
        // [X_b, X_-b] = E11 + E22
        let br = a.bracket_basis(xp, xm);
        assert_eq!(br, &vec![(1, FieldElem::ONE), (2, FieldElem::ONE)]);
        assert!(a.bracket_basis(xp, xp).is_empty());
        assert_eq!(a.coroot(xp), &[FieldElem::ONE, FieldElem::ONE]);
    }

    #[test]
    fn dimensions() {
        let a = alg(Family::Gl, 2, 1, 3, 1);
        assert_eq!(a.even_indices().len(), 5);
        assert_eq!(a.odd_indices().len(), 4);
        let o = alg(Family::Osp2, 0, 1, 3, 1);
        assert_eq!(o.dim(), 8);
        assert_eq!(o.even_indices().len(), 4);
        let o2 = alg(Family::Osp2, 0, 2, 3, 1);
        assert_eq!(o2.even_indices().len(), 1 + 10);
        assert_eq!(o2.odd_indices().len(), 8);
        let s = alg(Family::Sl, 2, 1, 3, 1);
        assert_eq!(s.dim(), 8);
    }

    #[test]
    fn structure_checks() {
        for (fam, m, n) in [
            (Family::Gl, 1, 1),
            (Family::Gl, 2, 1),
            (Family::Osp2, 0, 1),
            (Family::Sl, 2, 1),
            (Family::Osp2, 0, 2),
            (Family::Gl, 2, 2),
        ] {
            let a = alg(fam, m, n, 3, 1);
            a.check_jacobi().unwrap();
            a.check_abelian().unwrap();
            let f = a.field().clone();
            for i in 0..a.dim() {
                // z-degree is zero exactly on even elements
                assert_eq!(a.zdeg(i) == 0, a.parity(i) == 0);
                if a.is_toral(i) {
                    assert_eq!(a.p_power_basis(i).unwrap(), &vec![(i, FieldElem::ONE)]);
                } else if a.parity(i) == 0 {
                    assert!(a.p_power_basis(i).unwrap().is_empty());
                }
                // [h, X_a] = a(h) X_a
                if let Some(r) = a.root_of(i) {
                    let w = a.root_data().root_weight(&f, r);
                    for (t, &wt) in a.toral_range().zip(w.coords()) {
                        let expect = if wt.is_zero() { vec![] } else { vec![(i, wt)] };
                        assert_eq!(a.bracket_basis(t, i), &expect);
                    }
                }
                for j in 0..a.dim() {
                    let dz = a.zdeg(i) + a.zdeg(j);
                    for &(k, _) in a.bracket_basis(i, j) {
                        assert_eq!(a.zdeg(k), dz);
                    }
                }
            }
            // even coroots are Chevalley: a(H_a) = 2; odd coroots pair via the form
            for i in a.positive_range() {
                let r = a.root_of(i).unwrap().clone();
                let w = a.root_data().root_weight(&f, &r);
                let val = w
                    .coords()
                    .iter()
                    .zip(a.coroot(i))
                    .fold(FieldElem::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)));
                if a.parity(i) == 0 {
                    assert_eq!(val, e(&f, 2));
                } else {
                    assert_eq!(val, FieldElem::ZERO);
                }
            }
        }
    }

    #[test]
    fn coroot_is_form_dual_on_weights() {
        let a = alg(Family::Osp2, 0, 2, 5, 1);
        let f = a.field().clone();
        let rd = a.root_data();
        for i in a.positive_range() {
            let r = rd.root_to_field(&f, a.root_of(i).unwrap());
            for probe in [[1, 0, 0], [0, 1, 0], [0, 0, 1], [2, 3, 4]] {
                let lam = crate::rootdata::Weight::new(probe.iter().map(|&x| e(&f, x)).collect());
                let lhs = lam
                    .coords()
                    .iter()
                    .zip(a.coroot(i))
                    .fold(FieldElem::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)));
                let mut form = rd.bilinear(&f, &rd.lift(&f, &lam).unwrap(), &r).unwrap();
                if a.parity(i) == 0 {
                    let rr = rd.bilinear(&f, &r, &r).unwrap();
                    form = f.mul(form, f.div(e(&f, 2), rr).unwrap());
                }
                assert_eq!(lhs, form);
            }
        }
    }

    #[test]
    fn p_power_rejects_odd() {
        let a = alg(Family::Gl, 1, 1, 3, 1);
        assert_eq!(a.p_power(&a.unit_vector(0)).unwrap_err(), Error::OddPPower);
        assert_eq!(a.p_power(&a.unit_vector(1)).unwrap(), a.unit_vector(1));
    }

    #[test]
    fn chi_classification_gl11() {
        let a = alg(Family::Gl, 1, 1, 3, 3);
        let f = a.field().clone();
        let chi = PChar::semisimple(&a, &[e(&f, 1), e(&f, 1)]).unwrap();
        let c = chi.classify(&a);
        assert!(c.semisimple_normal_form && c.regular_semisimple);
        assert_eq!(chi.centralizer(&a).len(), 2);
        let chi = PChar::semisimple(&a, &[e(&f, 1), e(&f, 2)]).unwrap();
        let c = chi.classify(&a);
        assert!(c.semisimple_normal_form && !c.regular_semisimple);
        assert_eq!(chi.centralizer(&a).len(), 4);
        // g₀̄ is abelian here, so χ = 0 is vacuously regular nilpotent
        let z = PChar::zero(&a).classify(&a);
        assert!(z.nilpotent_normal_form && z.regular_nilpotent);
        assert_eq!(PChar::zero(&a).centralizer(&a).len(), 4);
        let b = alg(Family::Gl, 2, 1, 3, 1);
        let z = PChar::zero(&b).classify(&b);
        assert!(z.nilpotent_normal_form && !z.regular_nilpotent);
    }

    #[test]
    fn centralizer_tracks_regularity() {
        // semisimple normal form: dim g_χ = r iff χ(H_α) ≠ 0 for all positive α
        for (fam, m, n) in [(Family::Gl, 2, 1), (Family::Osp2, 0, 1)] {
            let a = alg(fam, m, n, 3, 1);
            let f = a.field().clone();
            let r = a.rank();
            let mut values = vec![FieldElem::ZERO; r];
            loop {
                let chi = PChar::semisimple(&a, &values).unwrap();
                let regular = chi.classify(&a).regular_semisimple;
                assert_eq!(chi.centralizer(&a).len() == r, regular, "{values:?}");
                let mut pos = 0;
                loop {
                    if pos == r {
                        break;
                    }
                    values[pos] = f.add(values[pos], FieldElem::ONE);
                    if !values[pos].is_zero() {
                        break;
                    }
                    pos += 1;
                }
                if pos == r {
                    break;
                }
            }
        }
    }

    #[test]
    fn regular_nilpotent_gl21() {
        let a = alg(Family::Gl, 2, 1, 3, 1);
        let chi = PChar::regular_nilpotent(&a);
        let c = chi.classify(&a);
        assert!(c.nilpotent_normal_form && c.regular_nilpotent && !c.semisimple_normal_form);
    }

    fn even_vec(a: &SuperAlgebra, seed: &[u32]) -> Vec<FieldElem> {
        let f = a.field();
        let mut v = vec![FieldElem::ZERO; a.dim()];
        for (k, &i) in a.even_indices().iter().enumerate() {
            v[i] = f.from_int(seed[k % seed.len()] as i64);
        }
        v
    }

    proptest! {
        #[test]
        fn jacobson_formula_p3(xs in proptest::collection::vec(0u32..3, 5), ys in proptest::collection::vec(0u32..3, 5)) {
            // (x+y)^[3] = x^[3] + y^[3] + [y,[y,x]] + ½[x,[y,x]]
            let a = alg(Family::Gl, 2, 1, 3, 1);
            let f = a.field().clone();
            let x = even_vec(&a, &xs);
            let y = even_vec(&a, &ys);
            let sum: Vec<FieldElem> = x.iter().zip(&y).map(|(&u, &v)| f.add(u, v)).collect();
            let lhs = a.p_power(&sum).unwrap();
            let yx = a.bracket(&y, &x).unwrap();
            let s1 = a.bracket(&y, &yx).unwrap();
            let s2 = a.bracket(&x, &yx).unwrap();
            let px = a.p_power(&x).unwrap();
            let py = a.p_power(&y).unwrap();
            let rhs: Vec<FieldElem> = (0..a.dim())
                .map(|i| f.add(f.add(px[i], py[i]), f.add(s1[i], f.mul(f.half(), s2[i]))))
                .collect();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn bracket_super_skew(i in 0usize..9, j in 0usize..9) {
            let a = alg(Family::Gl, 2, 1, 3, 1);
            let f = a.field().clone();
            let xy = a.bracket(&a.unit_vector(i), &a.unit_vector(j)).unwrap();
            let yx = a.bracket(&a.unit_vector(j), &a.unit_vector(i)).unwrap();
            let odd = a.parity(i) & a.parity(j) == 1;
            for (u, v) in xy.iter().zip(&yx) {
                prop_assert_eq!(*u, if odd { *v } else { f.neg(*v) });
            }
        }
    }
}
