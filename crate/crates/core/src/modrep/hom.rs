//! Intertwiners and isomorphism tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf::{FieldElem, Matrix};
use crate::rootdata::Weight;

use super::structure::for_each_line;
use super::{formal_character, weight_spaces, FDModule};

#[derive(Clone, Copy, Debug)]
pub struct IsoOptions {
    /// Enumerate every line of the hom space when it has at most this many.
    pub max_lines: usize,
    /// Random combinations tried otherwise.
    pub samples: usize,
    pub seed: u64,
}

impl Default for IsoOptions {
    fn default() -> IsoOptions {
        IsoOptions {
            max_lines: 10_000,
            samples: 256,
            seed: 0,
        }
    }
}

/// Weight basis: the columns of P, grouped by weight, plus the weight of each column.
fn weight_basis(m: &FDModule) -> Result<(Matrix, Vec<Weight>)> {
    let mut cols = Vec::new();
    let mut wts = Vec::new();
    for (w, e) in weight_spaces(m)? {
        for v in e.basis() {
            cols.push(v);
            wts.push(w.clone());
        }
    }
    Ok((Matrix::from_columns(&cols, m.dim()), wts))
}

/// A basis of `Hom(M, N)`, each map a `dim N × dim M` matrix.
///
/// Maps commute with the toral part, so they are block diagonal in weight
/// bases; the remaining conditions come from the simple root vectors.
pub fn hom_space(m: &FDModule, n: &FDModule) -> Result<Vec<Matrix>> {
    m.compatible(n)?;
    let f = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    let (pm, wm) = weight_basis(m)?;
    let (pn, wn) = weight_basis(n)?;
    let pm_inv = pm
        .solve(f, &Matrix::identity(dm))
        .expect("weight basis is a basis");
    let pn_inv = pn
        .solve(f, &Matrix::identity(dn))
        .expect("weight basis is a basis");
    // variable index of T'[r, c] when the weights agree
    let mut var = vec![None; dn * dm];
    let mut nvars = 0;
    for r in 0..dn {
        for c in 0..dm {
            if wn[r] == wm[c] {
                var[r * dm + c] = Some(nvars);
                nvars += 1;
            }
        }
    }
    if nvars == 0 {
        return Ok(Vec::new());
    }
    let a = m.algebra();
    let mut rows: Vec<Vec<FieldElem>> = Vec::new();
    for g in m.generators() {
        if a.is_toral(g) {
            continue;
        }
        let am = pm_inv.mul(f, &m.act(g).mul(f, &pm));
        let an = pn_inv.mul(f, &n.act(g).mul(f, &pn));
        // (T' am − an T')[r, c] = 0
        for r in 0..dn {
            for c in 0..dm {
                let mut row = vec![FieldElem::ZERO; nvars];
                let mut any = false;
                for k in 0..dm {
                    if let Some(v) = var[r * dm + k] {
                        let x = am.get(k, c);
                        if !x.is_zero() {
                            row[v] = f.add(row[v], x);
                            any = true;
                        }
                    }
                }
                for k in 0..dn {
                    if let Some(v) = var[k * dm + c] {
                        let x = an.get(r, k);
                        if !x.is_zero() {
                            row[v] = f.sub(row[v], x);
                            any = true;
                        }
                    }
                }
                if any {
                    rows.push(row);
                }
            }
        }
    }
    let sol = if rows.is_empty() {
        Matrix::identity(nvars)
    } else {
        Matrix::from_rows(rows, nvars).kernel(f)
    };
    Ok(sol
        .columns()
        .into_iter()
        .map(|x| {
            let t = Matrix::from_fn(dn, dm, |r, c| {
                var[r * dm + c].map_or(FieldElem::ZERO, |v| x[v])
            });
            pn.mul(f, &t).mul(f, &pm_inv)
        })
        .collect())
}

fn flatten(t: &Matrix) -> Vec<FieldElem> {
    t.data().to_vec()
}

fn combine(homs: &[Matrix], coeffs: &[FieldElem], f: &crate::gf::FieldCtx) -> Matrix {
    let mut out = Matrix::zeros(homs[0].rows(), homs[0].cols());
    for (t, &c) in homs.iter().zip(coeffs) {
        out.add_scaled(f, c, t);
    }
    out
}

/// Whether `M ≅ N`; decided exactly when the hom space has few lines.
pub fn is_isomorphic(m: &FDModule, n: &FDModule, opts: IsoOptions) -> Result<bool> {
    m.compatible(n)?;
    if m.dim() != n.dim() || formal_character(m)? != formal_character(n)? {
        return Ok(false);
    }
    let f = m.field();
    let d = m.dim();
    let homs = hom_space(m, n)?;
    if homs.is_empty() {
        return Ok(false);
    }
    let q = f.order() as f64;
    let lines = (q.powi(homs.len() as i32) - 1.0) / (q - 1.0);
    if lines <= opts.max_lines as f64 {
        let flat: Vec<Vec<FieldElem>> = homs.iter().map(flatten).collect();
        let found = for_each_line(f, &flat, |v| {
            Matrix::from_fn(n.dim(), d, |r, c| v[r * d + c]).rank(f) == d
        });
        return Ok(found);
    }
    let elems: Vec<FieldElem> = f.elements().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.samples {
        let coeffs: Vec<FieldElem> = homs
            .iter()
            .map(|_| elems[rng.gen_range(0..elems.len())])
            .collect();
        if combine(&homs, &coeffs, f).rank(f) == d {
            return Ok(true);
        }
    }
    Err(Error::IsoUndecided)
}
