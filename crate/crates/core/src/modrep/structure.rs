//! Weight spaces, singular vectors, spinning and the submodule lattice.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::gf::{Echelon, FieldCtx, FieldElem, Matrix};
use crate::rootdata::Weight;

use super::{FDModule, Part};

/// Weight vectors killed by the positive root vectors of the acting part.
#[derive(Clone, Debug)]
pub struct Seed {
    pub weight: Weight,
    pub space: Echelon,
}

fn toral_candidates(m: &FDModule) -> Vec<Vec<FieldElem>> {
    let a = m.algebra();
    let f = m.field();
    a.toral_range()
        .map(|t| f.artin_schreier_solve(f.frobenius(m.chi().value(t))))
        .collect()
}

/// Splits the span of `basis` (a toral-stable subspace) into joint eigenspaces.
fn eigen_split(
    m: &FDModule,
    basis: Vec<Vec<FieldElem>>,
) -> Result<Vec<(Weight, Vec<Vec<FieldElem>>)>> {
    let a = m.algebra();
    let f = m.field();
    let total = basis.len();
    let mut parts: Vec<(Vec<FieldElem>, Vec<Vec<FieldElem>>)> = vec![(Vec::new(), basis)];
    for (t, cands) in a.toral_range().zip(toral_candidates(m)) {
        let h = m.act(t);
        let mut next = Vec::new();
        for (prefix, b) in parts {
            if b.is_empty() {
                continue;
            }
            let bm = Matrix::from_columns(&b, m.dim());
            let hb = h.mul(f, &bm);
            for &mu in &cands {
                let mut shifted = hb.clone();
                shifted.add_scaled(f, f.neg(mu), &bm);
                let ker = shifted.kernel(f);
                if ker.cols() == 0 {
                    continue;
                }
                let vs: Vec<Vec<FieldElem>> = bm.mul(f, &ker).columns();
                let mut w = prefix.clone();
                w.push(mu);
                next.push((w, vs));
            }
        }
        parts = next;
    }
    let found: usize = parts.iter().map(|(_, v)| v.len()).sum();
    if found != total {
        return Err(Error::Dimension(format!(
            "toral action is not diagonalizable over the field ({found} of {total})"
        )));
    }
    let mut out: Vec<(Weight, Vec<Vec<FieldElem>>)> = parts
        .into_iter()
        .map(|(w, v)| (Weight::new(w), v))
        .collect();
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}

/// Joint eigenspaces of the toral elements, sorted by weight.
pub fn weight_spaces(m: &FDModule) -> Result<Vec<(Weight, Echelon)>> {
    let f = m.field();
    let all = Matrix::identity(m.dim()).columns();
    Ok(eigen_split(m, all)?
        .into_iter()
        .map(|(w, vs)| (w, Echelon::from_vectors(f, m.dim(), vs.iter())))
        .collect())
}

fn positive_indices(m: &FDModule) -> Vec<usize> {
    let a = m.algebra();
    match m.part() {
        Part::Full => a.positive_range().collect(),
        Part::Even => a.pos_even_range().collect(),
    }
}

/// The joint kernel of the positive root vectors, split by weight.
pub fn socle_seeds(m: &FDModule) -> Result<Vec<Seed>> {
    if !m.chi().kills_positive_even(m.algebra()) {
        return Err(Error::ChiNotNormalized);
    }
    let f = m.field();
    let d = m.dim();
    let pos = positive_indices(m);
    let stacked = Matrix::from_fn(pos.len() * d, d, |r, c| m.act(pos[r / d]).get(r % d, c));
    let ker = if pos.is_empty() {
        Matrix::identity(d)
    } else {
        stacked.kernel(f)
    };
    Ok(eigen_split(m, ker.columns())?
        .into_iter()
        .map(|(weight, vs)| Seed {
            weight,
            space: Echelon::from_vectors(f, d, vs.iter()),
        })
        .collect())
}

/// Smallest submodule containing the given vectors.
pub fn spin(m: &FDModule, vs: &[Vec<FieldElem>]) -> Echelon {
    let f = m.field();
    let gens = m.generators();
    let mut ech = Echelon::new(m.dim());
    let mut queue = VecDeque::new();
    for v in vs {
        if ech.insert(f, v.clone()) {
            queue.push_back(v.clone());
        }
    }
    while let Some(v) = queue.pop_front() {
        if ech.dim() == m.dim() {
            break;
        }
        for &g in &gens {
            let w = m.act(g).mul_vec(f, &v);
            if ech.insert(f, w.clone()) {
                queue.push_back(w);
            }
        }
    }
    ech
}

/// Calls `visit` on one representative of each line in the span of `basis`
/// (first nonzero coordinate equal to one) until it returns true.
pub fn for_each_line(
    f: &FieldCtx,
    basis: &[Vec<FieldElem>],
    mut visit: impl FnMut(Vec<FieldElem>) -> bool,
) -> bool {
    let elems: Vec<FieldElem> = f.elements().collect();
    let q = elems.len();
    let d = basis.len();
    let len = basis.first().map_or(0, |b| b.len());
    for lead in 0..d {
        let free = d - lead - 1;
        let mut digits = vec![0usize; free];
        loop {
            let mut v = basis[lead].clone();
            for (k, &dg) in digits.iter().enumerate() {
                let c = elems[dg];
                if !c.is_zero() {
                    for (x, &y) in v.iter_mut().zip(&basis[lead + 1 + k]) {
                        *x = f.add(*x, f.mul(c, y));
                    }
                }
            }
            debug_assert_eq!(v.len(), len);
            if visit(v) {
                return true;
            }
            let mut k = 0;
            while k < free {
                digits[k] += 1;
                if digits[k] < q {
                    break;
                }
                digits[k] = 0;
                k += 1;
            }
            if k == free {
                break;
            }
        }
    }
    false
}

/// A nonzero proper submodule, if one exists. Every nonzero submodule meets
/// the seed spaces, so it suffices to spin each seed line.
pub fn proper_submodule(m: &FDModule, cap: usize) -> Result<Option<Echelon>> {
    if m.dim() <= 1 {
        return Ok(None);
    }
    let f = m.field();
    let seeds = socle_seeds(m)?;
    for s in &seeds {
        if s.space.dim() > cap {
            return Err(Error::CapExceeded {
                dim: s.space.dim(),
                cap,
            });
        }
    }
    for s in &seeds {
        let mut found = None;
        for_each_line(f, &s.space.basis(), |v| {
            let sub = spin(m, &[v]);
            if sub.dim() < m.dim() {
                found = Some(sub);
                true
            } else {
                false
            }
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

pub fn is_irreducible(m: &FDModule, cap: usize) -> Result<bool> {
    Ok(m.dim() > 0 && proper_submodule(m, cap)?.is_none())
}

/// Simple head of a module generated by its first basis vector, when that
/// vector spans its weight space in a weight basis.
///
/// The radical is the common kernel of the functionals `e₀* ∘ u`.
pub fn head(m: &FDModule, cap: usize) -> Result<FDModule> {
    let f = m.field();
    let d = m.dim();
    let gens = m.generators();
    let dual: Vec<Matrix> = gens.iter().map(|&g| m.act(g).transpose()).collect();
    let mut e0 = vec![FieldElem::ZERO; d];
    e0[0] = FieldElem::ONE;
    let mut funcs = Echelon::new(d);
    funcs.insert(f, e0.clone());
    let mut queue = VecDeque::from([e0]);
    while let Some(v) = queue.pop_front() {
        for t in &dual {
            let w = t.mul_vec(f, &v);
            if funcs.insert(f, w.clone()) {
                queue.push_back(w);
            }
        }
    }
    let rows = funcs.basis();
    let fm = Matrix::from_rows(rows, d);
    let radical = fm.kernel(f).columns();
    let rad = Echelon::from_vectors(f, d, radical.iter());
    let q = m.quotient(&rad)?;
    if !is_irreducible(&q, cap)? {
        return Err(Error::HeadNotSimple);
    }
    Ok(q)
}

/// Sort key for composition factors: dimension, then seed weights.
pub(super) fn factor_key(m: &FDModule) -> Result<(usize, Vec<Weight>)> {
    Ok((
        m.dim(),
        socle_seeds(m)?.into_iter().map(|s| s.weight).collect(),
    ))
}

/// Composition factors, sorted by dimension and seed weights.
pub fn composition_factors(m: &FDModule, cap: usize) -> Result<Vec<FDModule>> {
    let mut out = Vec::new();
    let mut stack = vec![m.clone()];
    while let Some(x) = stack.pop() {
        if x.dim() == 0 {
            continue;
        }
        match proper_submodule(&x, cap)? {
            Some(sub) => {
                stack.push(x.quotient(&sub)?);
                stack.push(x.submodule(&sub)?);
            }
            None => out.push(x),
        }
    }
    let mut keyed = out
        .into_iter()
        .map(|x| Ok((factor_key(&x)?, x)))
        .collect::<Result<Vec<_>>>()?;
    keyed.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(keyed.into_iter().map(|(_, x)| x).collect())
}
