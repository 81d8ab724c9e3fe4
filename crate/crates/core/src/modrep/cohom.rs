//! First cohomology and freeness over g₁, where g₁ acts through Λ(g₁).

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem, Matrix};
use crate::liesuper::SuperAlgebra;

use super::{FDModule, Part};

fn g1_actions(m: &FDModule) -> Result<Vec<Matrix>> {
    if m.part() != Part::Full {
        return Err(Error::WrongPart(
            "g1 acts only on modules over the full algebra".into(),
        ));
    }
    Ok(m.algebra()
        .pos_odd_range()
        .map(|i| m.act(i).clone())
        .collect())
}

/// `dim H¹(g₁, M)` from the matrices of a basis of g₁ on M.
///
/// Cocycles are linear maps f with `y f(y') + y' f(y) = 0` for all basis pairs;
/// coboundaries are `y ↦ y·m`.
pub fn h1_from_actions(f: &FieldCtx, actions: &[Matrix]) -> usize {
    let o = actions.len();
    if o == 0 {
        return 0;
    }
    let d = actions[0].rows();
    let pairs: Vec<(usize, usize)> = (0..o).flat_map(|b| (b..o).map(move |c| (b, c))).collect();
    // unknown f(y_b)_r sits in column b*d + r
    let eqs = Matrix::from_fn(pairs.len() * d, o * d, |row, col| {
        let (b, c) = pairs[row / d];
        let r = row % d;
        let (blk, k) = (col / d, col % d);
        let mut x = FieldElem::ZERO;
        if blk == c {
            x = f.add(x, actions[b].get(r, k));
        }
        if blk == b {
            x = f.add(x, actions[c].get(r, k));
        }
        x
    });
    let z1 = o * d - eqs.rank(f);
    let stacked = Matrix::from_fn(o * d, d, |r, c| actions[r / d].get(r % d, c));
    z1 - stacked.rank(f)
}

pub fn h1_g1(m: &FDModule) -> Result<usize> {
    Ok(h1_from_actions(m.field(), &g1_actions(m)?))
}

/// The regular representation of Λ(g₁) on itself, basis indexed by subsets
/// (bitmasks) of the positive odd roots.
pub fn lambda_g1_actions(a: &SuperAlgebra) -> Vec<Matrix> {
    let f = a.field();
    let o = a.pos_odd_range().len();
    let d = 1usize << o;
    (0..o)
        .map(|b| {
            let mut m = Matrix::zeros(d, d);
            for s in 0..d {
                if s & (1 << b) == 0 {
                    let below = (s & ((1 << b) - 1)).count_ones();
                    let c = if below % 2 == 0 {
                        FieldElem::ONE
                    } else {
                        f.neg(FieldElem::ONE)
                    };
                    m.set(s | (1 << b), s, c);
                }
            }
            m
        })
        .collect()
}

/// Freeness over Λ(g₁): `dim M = 2^o · dim(M / g₁M)`.
pub fn is_free_from_actions(f: &FieldCtx, actions: &[Matrix], dim: usize) -> bool {
    let o = actions.len();
    let image = Matrix::from_fn(dim, o * dim, |r, c| actions[c / dim].get(r, c % dim));
    let top = dim - if o == 0 { 0 } else { image.rank(f) };
    dim == (1usize << o) * top
}

pub fn is_free_over_g1(m: &FDModule) -> Result<bool> {
    Ok(is_free_from_actions(m.field(), &g1_actions(m)?, m.dim()))
}
