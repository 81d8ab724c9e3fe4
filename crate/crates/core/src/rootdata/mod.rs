//! Root data of the distinguished Borel subalgebra for gl(m|n), sl(m|n) and
//! osp(2|2n).
//!
//! Roots and ρ live in "ambient" integer coordinates: ε_1..ε_m, δ_1..δ_n for
//! gl and sl, and ε, δ_1..δ_n for osp(2|2n). The bilinear form is
//! `(ε_i|ε_j) = δ_ij`, `(δ_i|δ_j) = -δ_ij`, `(ε|δ) = 0`.
//!
//! A [`Weight`] is recorded by its values on the toral basis of the Cartan
//! subalgebra. For gl and osp those values are exactly the ambient
//! coordinates. For sl the toral basis is `E_ii - E_{i+1,i+1}` (even blocks)
//! and `E_mm + E_{m+1,m+1}`, and a weight is lifted to ambient coordinates
//! before it is paired with roots; every pairing used here is independent of
//! the lift.

mod weyl;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem, Matrix};

pub use weyl::WeylElement;

/// Integer vector in ambient ε/δ coordinates.
pub type Root = Vec<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Gl,
    Sl,
    Osp2,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s.to_ascii_lowercase().as_str() {
            "gl" => Ok(Family::Gl),
            "sl" => Ok(Family::Sl),
            "osp2" | "osp" => Ok(Family::Osp2),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Gl => "gl",
            Family::Sl => "sl",
            Family::Osp2 => "osp2",
        })
    }
}

/// Which polynomial [`RootData::eval_p`] evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyKind {
    P0,
    P1,
    P,
}

/// Values of a weight on the toral basis of the Cartan subalgebra.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    coords: Vec<FieldElem>,
}

impl Weight {
    pub fn new(coords: Vec<FieldElem>) -> Weight {
        Weight { coords }
    }

    pub fn coords(&self) -> &[FieldElem] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Comma separated field elements, e.g. `t+1,2,0`.
    pub fn format(&self, f: &FieldCtx) -> String {
        self.coords
            .iter()
            .map(|&c| f.format(c))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse(f: &FieldCtx, s: &str) -> Result<Weight> {
        let coords = s
            .split(',')
            .map(|part| f.parse(part))
            .collect::<Result<Vec<_>>>()?;
        Ok(Weight { coords })
    }

    pub fn add(&self, f: &FieldCtx, other: &Weight) -> Weight {
        Weight::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        )
    }

    pub fn neg(&self, f: &FieldCtx) -> Weight {
        Weight::new(self.coords.iter().map(|&a| f.neg(a)).collect())
    }
}

/// Root system, form, ρ's and Weyl group for one `(family, m, n)`.
#[derive(Clone, Debug)]
pub struct RootData {
    family: Family,
    m: usize,
    n: usize,
    eps: usize,
    rank: usize,
    even_pos: Vec<Root>,
    odd_pos: Vec<Root>,
    simple: Vec<Root>,
    simple_even: Vec<Root>,
    rho0_twice: Root,
    rho_twice: Root,
    signature: Vec<i64>,
    toral: Vec<Vec<i64>>,
    coxeter: usize,
    weyl: Vec<WeylElement>,
}

fn unit(len: usize, i: usize, c: i64) -> Root {
    let mut v = vec![0; len];
    v[i] = c;
    v
}

fn combine(a: &Root, b: &Root, sb: i64) -> Root {
    a.iter().zip(b).map(|(x, y)| x + sb * y).collect()
}

impl RootData {
    /// Distinguished root data. For `Osp2` the algebra is osp(2|2n) and `m` is ignored.
    pub fn new(family: Family, m: usize, n: usize) -> Result<RootData> {
        match family {
            Family::Gl | Family::Sl => {
                if m == 0 || n == 0 {
                    return Err(Error::BadSize(format!("{family}({m}|{n}) needs m, n >= 1")));
                }
                Ok(Self::type_a(family, m, n))
            }
            Family::Osp2 => {
                if n == 0 {
                    return Err(Error::BadSize("osp(2|2n) needs n >= 1".into()));
                }
                Ok(Self::osp(n))
            }
        }
    }

    fn type_a(family: Family, m: usize, n: usize) -> RootData {
        let len = m + n;
        let e = |i: usize| unit(len, i, 1);
        let d = |j: usize| unit(len, m + j, 1);
        let mut even_pos = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                even_pos.push(combine(&e(i), &e(j), -1));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                even_pos.push(combine(&d(i), &d(j), -1));
            }
        }
        let mut odd_pos = Vec::new();
        for i in 0..m {
            for j in 0..n {
                odd_pos.push(combine(&e(i), &d(j), -1));
            }
        }
        let mut simple_even = Vec::new();
        for i in 0..m.saturating_sub(1) {
            simple_even.push(combine(&e(i), &e(i + 1), -1));
        }
        for j in 0..n.saturating_sub(1) {
            simple_even.push(combine(&d(j), &d(j + 1), -1));
        }
        let mut simple = Vec::new();
        for i in 0..m - 1 {
            simple.push(combine(&e(i), &e(i + 1), -1));
        }
        simple.push(combine(&e(m - 1), &d(0), -1));
        for j in 0..n - 1 {
            simple.push(combine(&d(j), &d(j + 1), -1));
        }
        let signature = (0..len).map(|a| if a < m { 1 } else { -1 }).collect();
        let toral = match family {
            Family::Sl => {
                let mut rows = Vec::new();
                for i in 0..m - 1 {
                    rows.push(combine(&e(i), &e(i + 1), -1));
                }
                rows.push(combine(&e(m - 1), &d(0), 1));
                for j in 0..n - 1 {
                    rows.push(combine(&d(j), &d(j + 1), -1));
                }
                rows
            }
            _ => (0..len).map(|a| unit(len, a, 1)).collect(),
        };
        let rank = toral.len();
        let mut rd = RootData {
            family,
            m,
            n,
            eps: m,
            rank,
            even_pos,
            odd_pos,
            simple,
            simple_even,
            rho0_twice: Vec::new(),
            rho_twice: Vec::new(),
            signature,
            toral,
            coxeter: m.max(n),
            weyl: weyl::symmetric_pair(m, n),
        };
        rd.fill_rho();
        rd
    }

    fn osp(n: usize) -> RootData {
        let len = 1 + n;
        let eps = unit(len, 0, 1);
        let d = |j: usize| unit(len, 1 + j, 1);
        let mut even_pos = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                even_pos.push(combine(&d(i), &d(j), -1));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                even_pos.push(combine(&d(i), &d(j), 1));
            }
        }
        for i in 0..n {
            even_pos.push(unit(len, 1 + i, 2));
        }
        let mut odd_pos = Vec::new();
        for i in 0..n {
            odd_pos.push(combine(&eps, &d(i), -1));
        }
        for i in 0..n {
            odd_pos.push(combine(&eps, &d(i), 1));
        }
        let mut simple_even = Vec::new();
        for j in 0..n - 1 {
            simple_even.push(combine(&d(j), &d(j + 1), -1));
        }
        simple_even.push(unit(len, n, 2));
        let mut simple = vec![combine(&eps, &d(0), -1)];
        simple.extend(simple_even.iter().cloned());
        let signature = (0..len).map(|a| if a == 0 { 1 } else { -1 }).collect();
        let mut rd = RootData {
            family: Family::Osp2,
            m: 2,
            n,
            eps: 1,
            rank: len,
            even_pos,
            odd_pos,
            simple,
            simple_even,
            rho0_twice: Vec::new(),
            rho_twice: Vec::new(),
            signature,
            toral: (0..len).map(|a| unit(len, a, 1)).collect(),
            coxeter: 2 * n,
            weyl: weyl::hyperoctahedral(n),
        };
        rd.fill_rho();
        rd
    }

    fn fill_rho(&mut self) {
        let len = self.ambient_dim();
        let sum = |roots: &[Root]| {
            roots
                .iter()
                .fold(vec![0i64; len], |acc, r| combine(&acc, r, 1))
        };
        self.rho0_twice = sum(&self.even_pos);
        self.rho_twice = combine(&self.rho0_twice, &sum(&self.odd_pos), -1);
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of ε coordinates in the ambient space.
    pub fn eps_count(&self) -> usize {
        self.eps
    }

    /// Dimension of the Cartan subalgebra.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.signature.len()
    }

    pub fn even_positive(&self) -> &[Root] {
        &self.even_pos
    }

    pub fn odd_positive(&self) -> &[Root] {
        &self.odd_pos
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple
    }

    /// Simple roots of the even part.
    pub fn simple_even_roots(&self) -> &[Root] {
        &self.simple_even
    }

    /// `2ρ₀` as an integer vector.
    pub fn rho0_twice(&self) -> &Root {
        &self.rho0_twice
    }

    /// `2ρ = Σ Δ₀⁺ − Σ Δ₁⁺` as an integer vector.
    pub fn rho_twice(&self) -> &Root {
        &self.rho_twice
    }

    /// Signs of the form on the ambient coordinates.
    pub fn signature(&self) -> &[i64] {
        &self.signature
    }

    /// Rows: the toral basis elements as diagonal vectors in ambient coordinates.
    pub fn toral_pairing(&self) -> &[Vec<i64>] {
        &self.toral
    }

    pub fn coxeter_number(&self) -> usize {
        self.coxeter
    }

    pub fn weyl_group(&self) -> &[WeylElement] {
        &self.weyl
    }

    /// sl(m|n) with p | (m - n) has a degenerate form.
    pub fn check_form(&self, f: &FieldCtx) -> Result<()> {
        if self.family == Family::Sl
            && (self.m as i64 - self.n as i64).rem_euclid(f.p() as i64) == 0
        {
            return Err(Error::DegenerateForm {
                m: self.m,
                n: self.n,
            });
        }
        Ok(())
    }

    /// `e1-d1` style label.
    pub fn format_root(&self, root: &[i64]) -> String {
        let mut out = String::new();
        for (a, &c) in root.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let name = if a < self.eps {
                if self.family == Family::Osp2 {
                    "e".to_string()
                } else {
                    format!("e{}", a + 1)
                }
            } else {
                format!("d{}", a - self.eps + 1)
            };
            let sign = if c < 0 {
                "-"
            } else if out.is_empty() {
                ""
            } else {
                "+"
            };
            let mag = if c.abs() == 1 {
                String::new()
            } else {
                c.abs().to_string()
            };
            out.push_str(&format!("{sign}{mag}{name}"));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn root_to_field(&self, f: &FieldCtx, root: &[i64]) -> Vec<FieldElem> {
        root.iter().map(|&c| f.from_int(c)).collect()
    }

    /// Half of an integer vector, reduced into the field.
    pub fn half_to_field(&self, f: &FieldCtx, twice: &[i64]) -> Vec<FieldElem> {
        twice
            .iter()
            .map(|&c| f.mul(f.from_int(c), f.half()))
            .collect()
    }

    pub fn rho(&self, f: &FieldCtx) -> Vec<FieldElem> {
        self.half_to_field(f, &self.rho_twice)
    }

    pub fn rho0(&self, f: &FieldCtx) -> Vec<FieldElem> {
        self.half_to_field(f, &self.rho0_twice)
    }

    /// Ambient coordinates of a weight.
    pub fn lift(&self, f: &FieldCtx, w: &Weight) -> Result<Vec<FieldElem>> {
        if w.len() != self.rank {
            return Err(Error::Dimension(format!(
                "weight has {} coordinates, rank is {}",
                w.len(),
                self.rank
            )));
        }
        if self.family != Family::Sl {
            return Ok(w.coords.clone());
        }
        let a = Matrix::from_rows(
            self.toral
                .iter()
                .map(|row| row.iter().map(|&c| f.from_int(c)).collect())
                .collect(),
            self.ambient_dim(),
        );
        let rhs = Matrix::from_columns(std::slice::from_ref(&w.coords), self.rank);
        let x = a.solve(f, &rhs).expect("toral pairing has full row rank");
        Ok(x.column(0))
    }

    /// Restriction of an ambient vector to the toral basis.
    pub fn restrict(&self, f: &FieldCtx, x: &[FieldElem]) -> Weight {
        Weight::new(
            self.toral
                .iter()
                .map(|row| {
                    row.iter().zip(x).fold(FieldElem::ZERO, |acc, (&c, &v)| {
                        f.add(acc, f.mul(f.from_int(c), v))
                    })
                })
                .collect(),
        )
    }

    /// Value of an integer root on the toral basis.
    pub fn root_weight(&self, f: &FieldCtx, root: &[i64]) -> Weight {
        self.restrict(f, &self.root_to_field(f, root))
    }

    /// The form on ambient coordinate vectors.
    pub fn bilinear(&self, f: &FieldCtx, x: &[FieldElem], y: &[FieldElem]) -> Result<FieldElem> {
        let len = self.ambient_dim();
        if x.len() != len || y.len() != len {
            return Err(Error::Dimension(format!(
                "form expects {len} ambient coordinates, got {} and {}",
                x.len(),
                y.len()
            )));
        }
        Ok(x.iter()
            .zip(y)
            .zip(&self.signature)
            .fold(FieldElem::ZERO, |acc, ((&a, &b), &s)| {
                let t = f.mul(a, b);
                if s > 0 {
                    f.add(acc, t)
                } else {
                    f.sub(acc, t)
                }
            }))
    }

    /// `(λ + shift | root)` for a weight, an ambient shift vector and an integer root.
    fn shifted_pairing(
        &self,
        f: &FieldCtx,
        lambda: &Weight,
        shift: &[FieldElem],
        root: &[i64],
    ) -> Result<FieldElem> {
        let x = self.lift(f, lambda)?;
        let xs: Vec<FieldElem> = x.iter().zip(shift).map(|(&a, &b)| f.add(a, b)).collect();
        self.bilinear(f, &xs, &self.root_to_field(f, root))
    }

    /// `(λ+ρ | α)`.
    pub fn rho_pairing(&self, f: &FieldCtx, lambda: &Weight, root: &[i64]) -> Result<FieldElem> {
        self.shifted_pairing(f, lambda, &self.rho(f), root)
    }

    /// `w.λ = w(λ+ρ₀) − ρ₀`.
    pub fn dot_action(&self, f: &FieldCtx, w: &WeylElement, lambda: &Weight) -> Result<Weight> {
        self.dot_with(f, w, lambda, &self.rho0(f))
    }

    /// `w(λ+ρ) − ρ`; agrees with [`RootData::dot_action`] because W fixes ρ₁.
    pub fn dot_action_via_rho(
        &self,
        f: &FieldCtx,
        w: &WeylElement,
        lambda: &Weight,
    ) -> Result<Weight> {
        self.dot_with(f, w, lambda, &self.rho(f))
    }

    fn dot_with(
        &self,
        f: &FieldCtx,
        w: &WeylElement,
        lambda: &Weight,
        shift: &[FieldElem],
    ) -> Result<Weight> {
        let x = self.lift(f, lambda)?;
        let xs: Vec<FieldElem> = x.iter().zip(shift).map(|(&a, &b)| f.add(a, b)).collect();
        let wx = w.apply(&xs, |v| f.neg(v));
        let out: Vec<FieldElem> = wx.iter().zip(shift).map(|(&a, &b)| f.sub(a, b)).collect();
        Ok(self.restrict(f, &out))
    }

    /// Dot orbit of λ, sorted and deduplicated.
    pub fn weyl_orbit(&self, f: &FieldCtx, lambda: &Weight) -> Result<Vec<Weight>> {
        let mut orbit = self
            .weyl
            .iter()
            .map(|w| self.dot_action(f, w, lambda))
            .collect::<Result<Vec<_>>>()?;
        orbit.sort();
        orbit.dedup();
        Ok(orbit)
    }

    /// `(λ+ρ|β) ≠ 0` for every positive odd root β.
    pub fn is_typical(&self, f: &FieldCtx, lambda: &Weight) -> Result<bool> {
        self.check_form(f)?;
        for beta in &self.odd_pos {
            if self.rho_pairing(f, lambda, beta)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Typical and p-regular: `(λ+ρ|α) ≠ 0` for every positive root of either parity.
    pub fn is_typical_regular(&self, f: &FieldCtx, lambda: &Weight) -> Result<bool> {
        if !self.is_typical(f, lambda)? {
            return Ok(false);
        }
        for alpha in &self.even_pos {
            if self.rho_pairing(f, lambda, alpha)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `P₁(λ) = ∏(λ+ρ|β)`, `P₀(λ) = ∏((λ+ρ₀|α)^{p−1} − 1)` and their product.
    pub fn eval_p(&self, f: &FieldCtx, lambda: &Weight, which: PolyKind) -> Result<FieldElem> {
        self.check_form(f)?;
        let p1 = || -> Result<FieldElem> {
            self.odd_pos.iter().try_fold(FieldElem::ONE, |acc, beta| {
                Ok(f.mul(acc, self.rho_pairing(f, lambda, beta)?))
            })
        };
        let p0 = || -> Result<FieldElem> {
            let rho0 = self.rho0(f);
            self.even_pos.iter().try_fold(FieldElem::ONE, |acc, alpha| {
                let v = self.shifted_pairing(f, lambda, &rho0, alpha)?;
                let factor = f.sub(f.pow(v, f.p() as u64 - 1), FieldElem::ONE);
                Ok(f.mul(acc, factor))
            })
        };
        match which {
            PolyKind::P0 => p0(),
            PolyKind::P1 => p1(),
            PolyKind::P => Ok(f.mul(p0()?, p1()?)),
        }
    }

    /// Λ_χ for χ given on the toral basis: coordinatewise solutions of
    /// `μ^p − μ = χ^p`, in lexicographic order.
    pub fn lambda_chi(&self, f: &FieldCtx, chi_h: &[FieldElem]) -> Result<Vec<Weight>> {
        if chi_h.len() != self.rank {
            return Err(Error::Dimension(format!(
                "expected {} toral values",
                self.rank
            )));
        }
        let mut per_coord = Vec::with_capacity(self.rank);
        for (i, &c) in chi_h.iter().enumerate() {
            let sols = f.artin_schreier_solve(f.frobenius(c));
            if sols.is_empty() {
                return Err(Error::ExtendField { coord: i + 1 });
            }
            per_coord.push(sols);
        }
        let mut out = vec![Vec::new()];
        for sols in &per_coord {
            let mut next = Vec::with_capacity(out.len() * sols.len());
            for prefix in &out {
                for &s in sols {
                    let mut v = prefix.clone();
                    v.push(s);
                    next.push(v);
                }
            }
            out = next;
        }
        Ok(out.into_iter().map(Weight::new).collect())
    }

    /// Whether λ satisfies `λ_i^p − λ_i = χ_i^p`; reports the first failing (1-based) coordinate.
    pub fn check_in_lambda_chi(
        &self,
        f: &FieldCtx,
        chi_h: &[FieldElem],
        lambda: &Weight,
    ) -> Result<()> {
        if lambda.len() != self.rank || chi_h.len() != self.rank {
            return Err(Error::Dimension(
                "weight or p-character has the wrong rank".into(),
            ));
        }
        for (i, (&l, &c)) in lambda.coords().iter().zip(chi_h).enumerate() {
            if f.sub(f.frobenius(l), l) != f.frobenius(c) {
                return Err(Error::NotInLambdaChi { coord: i + 1 });
            }
        }
        Ok(())
    }
}
