//! Finite-dimensional modules over U_χ(g) and U_χ(g₀̄).
//!
//! A module is a list of action matrices, one per basis element of the
//! acting part, checked against every defining relation when it is built.
//! Vectors are columns; `act(x)` is applied on the left.

mod character;
mod cohom;
mod hom;
mod induce;
mod structure;

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Echelon, FieldCtx, FieldElem, Matrix};
use crate::liesuper::{PChar, SuperAlgebra};
use crate::rootdata::Root;

pub use character::{
    character_tsv, formal_character, graded_character_tsv, graded_verma_character,
    graded_verma_character_by_basis, times_odd_factor, CharacterVector, GradedCharacter,
};
pub use cohom::{h1_from_actions, h1_g1, is_free_from_actions, is_free_over_g1, lambda_g1_actions};
pub use hom::{hom_space, is_isomorphic, IsoOptions};
pub use induce::{baby_verma, baby_verma_even, dual_module, induce_psi, invariants_phi, psi_map};
pub use structure::{
    composition_factors, for_each_line, head, is_irreducible, proper_submodule, socle_seeds, spin,
    weight_spaces, Seed,
};

/// Default projective enumeration cap on seed eigenspace dimension.
pub const DEFAULT_CAP: usize = 3;

/// Which algebra acts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Part {
    Full,
    Even,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Verma,
    Induced,
    Invariants,
    Dual,
    Quotient,
    Sub,
    Sum,
    Custom,
}

#[derive(Clone, Debug)]
pub struct FDModule {
    alg: Arc<SuperAlgebra>,
    part: Part,
    dim: usize,
    actions: Vec<Option<Matrix>>,
    chi: PChar,
    parity: Option<Vec<u8>>,
    provenance: Provenance,
}

fn minus_one(f: &FieldCtx) -> FieldElem {
    f.neg(FieldElem::ONE)
}

/// Basis indices acting on a module of the given part.
pub fn part_indices(a: &SuperAlgebra, part: Part) -> Vec<usize> {
    match part {
        Part::Full => (0..a.dim()).collect(),
        Part::Even => a.even_indices(),
    }
}

/// Toral elements and `X_{±α}` for the simple roots of the part; these generate it.
pub fn generators(a: &SuperAlgebra, part: Part) -> Vec<usize> {
    let rd = a.root_data();
    let simple: &[Root] = match part {
        Part::Full => rd.simple_roots(),
        Part::Even => rd.simple_even_roots(),
    };
    let mut out: Vec<usize> = a.toral_range().collect();
    for r in simple {
        let neg: Root = r.iter().map(|x| -x).collect();
        out.push(a.index_of_root(r).expect("simple root vector"));
        out.push(a.index_of_root(&neg).expect("negative simple root vector"));
    }
    out
}

impl FDModule {
    /// Checks the bracket, p-power and odd-square relations exhaustively.
    pub fn new(
        alg: Arc<SuperAlgebra>,
        part: Part,
        chi: PChar,
        actions: Vec<Option<Matrix>>,
        parity: Option<Vec<u8>>,
        provenance: Provenance,
    ) -> Result<FDModule> {
        let idx = part_indices(&alg, part);
        if actions.len() != alg.dim() {
            return Err(Error::Dimension(format!(
                "need one action slot per basis element ({})",
                alg.dim()
            )));
        }
        let dim = idx
            .first()
            .and_then(|&i| actions[i].as_ref())
            .map_or(0, |m| m.rows());
        for i in 0..alg.dim() {
            match (&actions[i], idx.contains(&i)) {
                (Some(m), true) if m.rows() == dim && m.cols() == dim => {}
                (None, false) => {}
                _ => {
                    return Err(Error::Dimension(format!(
                        "action slot {i} has the wrong shape or part"
                    )))
                }
            }
        }
        if let Some(par) = &parity {
            if par.len() != dim {
                return Err(Error::Dimension("parity vector length".into()));
            }
        }
        let m = FDModule {
            alg,
            part,
            dim,
            actions,
            chi,
            parity,
            provenance,
        };
        m.check_relations()?;
        Ok(m)
    }

    fn check_relations(&self) -> Result<()> {
        let a = &*self.alg;
        let f = a.field();
        let idx = part_indices(a, self.part);
        for (n, &i) in idx.iter().enumerate() {
            let ai = self.act(i);
            for &j in &idx[n..] {
                let aj = self.act(j);
                let lhs = self.combination(a.bracket_basis(i, j));
                let mut rhs = ai.mul(f, aj);
                let c = if a.parity(i) & a.parity(j) == 1 {
                    FieldElem::ONE
                } else {
                    minus_one(f)
                };
                rhs.add_scaled(f, c, &aj.mul(f, ai));
                if lhs != rhs {
                    return Err(Error::Relation(format!(
                        "[{}, {}] is not represented",
                        a.label(i),
                        a.label(j)
                    )));
                }
            }
            if a.parity(i) == 0 {
                let mut lhs = ai.pow(f, f.p() as u64);
                lhs = lhs.sub(f, &self.combination(a.p_power_basis(i).expect("even")));
                let want = Matrix::identity(self.dim).scale(f, f.frobenius(self.chi.value(i)));
                if lhs != want {
                    return Err(Error::Relation(format!(
                        "p-power relation fails for {}",
                        a.label(i)
                    )));
                }
            }
            // odd squares: x² = ½[x, x] is the bracket relation with i = j above
            if let Some(par) = &self.parity {
                for r in 0..self.dim {
                    for c in 0..self.dim {
                        if !ai.get(r, c).is_zero() && par[r] != (par[c] ^ a.parity(i)) {
                            return Err(Error::Relation(format!(
                                "{} does not respect the parity grading",
                                a.label(i)
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn combination(&self, coeffs: &[(usize, FieldElem)]) -> Matrix {
        let f = self.alg.field();
        let mut out = Matrix::zeros(self.dim, self.dim);
        for &(k, c) in coeffs {
            out.add_scaled(f, c, self.act(k));
        }
        out
    }

    pub fn algebra(&self) -> &Arc<SuperAlgebra> {
        &self.alg
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        self.alg.field()
    }

    pub fn part(&self) -> Part {
        self.part
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn chi(&self) -> &PChar {
        &self.chi
    }

    pub fn parity(&self) -> Option<&[u8]> {
        self.parity.as_deref()
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Action of basis element `i`; panics outside the acting part.
    pub fn act(&self, i: usize) -> &Matrix {
        self.actions[i]
            .as_ref()
            .expect("basis element acts on this module")
    }

    pub fn actions(&self) -> &[Option<Matrix>] {
        &self.actions
    }

    pub fn part_indices(&self) -> Vec<usize> {
        part_indices(&self.alg, self.part)
    }

    pub fn generators(&self) -> Vec<usize> {
        generators(&self.alg, self.part)
    }

    /// Whether `other` is over the same algebra, part and χ.
    pub fn compatible(&self, other: &FDModule) -> Result<()> {
        if !Arc::ptr_eq(&self.alg, &other.alg)
            && format!("{:?}", self.alg) != format!("{:?}", other.alg)
        {
            return Err(Error::WrongPart("modules over different algebras".into()));
        }
        if self.part != other.part {
            return Err(Error::WrongPart(format!(
                "{:?} vs {:?}",
                self.part, other.part
            )));
        }
        if self.chi != other.chi {
            return Err(Error::ChiMismatch);
        }
        Ok(())
    }

    /// Restriction to g₀̄.
    pub fn restrict_even(&self) -> FDModule {
        let a = &self.alg;
        let actions = (0..a.dim())
            .map(|i| {
                if a.parity(i) == 0 {
                    self.actions[i].clone()
                } else {
                    None
                }
            })
            .collect();
        FDModule {
            actions,
            part: Part::Even,
            ..self.clone()
        }
    }

    /// Submodule with the given basis (rows of an echelon form, in M coordinates).
    pub fn submodule(&self, sub: &Echelon) -> Result<FDModule> {
        let f = self.field();
        let basis = sub.basis();
        let s = basis.len();
        let bmat = Matrix::from_columns(&basis, self.dim);
        let mut actions = vec![None; self.alg.dim()];
        for i in self.part_indices() {
            let img = self.act(i).mul(f, &bmat);
            let mut m = Matrix::zeros(s, s);
            for c in 0..s {
                let coords = sub
                    .coordinates(f, &img.column(c))
                    .ok_or_else(|| Error::Relation("subspace is not a submodule".into()))?;
                for (r, x) in coords.into_iter().enumerate() {
                    m.set(r, c, x);
                }
            }
            actions[i] = Some(m);
        }
        let parity = self.graded_parity(&basis);
        FDModule::new(
            self.alg.clone(),
            self.part,
            self.chi.clone(),
            actions,
            parity,
            Provenance::Sub,
        )
    }

    /// Quotient by a submodule; the basis is the images of the non-pivot standard vectors.
    pub fn quotient(&self, sub: &Echelon) -> Result<FDModule> {
        let f = self.field();
        let pivots = sub.pivots();
        let keep: Vec<usize> = (0..self.dim).filter(|c| !pivots.contains(c)).collect();
        let q = keep.len();
        let mut actions = vec![None; self.alg.dim()];
        for i in self.part_indices() {
            let a = self.act(i);
            let mut m = Matrix::zeros(q, q);
            for (c, &kc) in keep.iter().enumerate() {
                let r = sub.reduce(f, a.column(kc));
                for (row, &kr) in keep.iter().enumerate() {
                    m.set(row, c, r[kr]);
                }
            }
            actions[i] = Some(m);
        }
        // only a graded submodule leaves a grading on the quotient
        let parity = match &self.parity {
            Some(par) if self.graded_parity(&sub.basis()).is_some() => {
                Some(keep.iter().map(|&k| par[k]).collect())
            }
            _ => None,
        };
        FDModule::new(
            self.alg.clone(),
            self.part,
            self.chi.clone(),
            actions,
            parity,
            Provenance::Quotient,
        )
    }

    /// Parities of a list of vectors if each is homogeneous.
    fn graded_parity(&self, vs: &[Vec<FieldElem>]) -> Option<Vec<u8>> {
        let par = self.parity.as_ref()?;
        vs.iter()
            .map(|v| {
                let mut it = v
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(k, _)| par[k]);
                let first = it.next().unwrap_or(0);
                it.all(|q| q == first).then_some(first)
            })
            .collect()
    }

    /// `self ⊕ other`, block diagonal.
    pub fn direct_sum(&self, other: &FDModule) -> Result<FDModule> {
        self.compatible(other)?;
        let (d1, d2) = (self.dim, other.dim);
        let mut actions = vec![None; self.alg.dim()];
        for i in self.part_indices() {
            let (x, y) = (self.act(i), other.act(i));
            actions[i] = Some(Matrix::from_fn(d1 + d2, d1 + d2, |r, c| {
                if r < d1 && c < d1 {
                    x.get(r, c)
                } else if r >= d1 && c >= d1 {
                    y.get(r - d1, c - d1)
                } else {
                    FieldElem::ZERO
                }
            }));
        }
        let parity = match (&self.parity, &other.parity) {
            (Some(p1), Some(p2)) => Some(p1.iter().chain(p2).copied().collect()),
            _ => None,
        };
        FDModule::new(
            self.alg.clone(),
            self.part,
            self.chi.clone(),
            actions,
            parity,
            Provenance::Sum,
        )
    }

    /// JSON export with matrices as row-major field element strings.
    pub fn to_json(&self) -> serde_json::Value {
        let a = &*self.alg;
        let f = self.field();
        let mats: Vec<serde_json::Value> = self
            .part_indices()
            .into_iter()
            .map(|i| {
                let m = self.act(i);
                serde_json::json!({
                    "generator": a.label(i),
                    "rows": (0..m.rows()).map(|r| m.row(r).iter().map(|&x| f.format(x)).collect::<Vec<_>>()).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({
            "algebra": format!("{}({}|{})", a.family(), a.root_data().m(), a.root_data().n()),
            "field": { "p": f.p(), "k": f.k() },
            "part": self.part,
            "dim": self.dim,
            "chi": self.chi.even_values(a).iter().map(|&x| f.format(x)).collect::<Vec<_>>(),
            "parity": self.parity,
            "provenance": self.provenance,
            "actions": mats,
        })
    }
}

#[cfg(test)]
mod tests;
