//! Defining matrix realizations.
//!
//! Every root space is found as a kernel inside the matrix units of that
//! weight, so gl, sl and osp share one code path. Negative root vectors are
//! rescaled so that `[X_α, X_{−α}]` is the coroot `H_α`: the form dual of α
//! for odd α, and `2/(α|α)` times it for even α.

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem, Matrix};
use crate::rootdata::{Family, RootData};

pub(super) struct Realization {
    pub size: usize,
    /// Parity of each standard basis vector of the superspace.
    pub index_parity: Vec<u8>,
    /// Ambient weight of each standard basis vector.
    pub index_weight: Vec<Vec<i64>>,
    /// Diagonal matrix whose eigenvalue on a weight vector is that weight's ambient coordinate `a`.
    pub coord_diag: Vec<Matrix>,
    /// Gram matrix of the even supersymmetric form (osp only).
    pub form: Option<Matrix>,
}

impl Realization {
    pub fn new(f: &FieldCtx, rd: &RootData) -> Realization {
        let amb = rd.ambient_dim();
        match rd.family() {
            Family::Gl | Family::Sl => {
                let (m, n) = (rd.m(), rd.n());
                let size = m + n;
                let index_parity = (0..size).map(|a| u8::from(a >= m)).collect();
                let index_weight = (0..size)
                    .map(|a| {
                        let mut w = vec![0; amb];
                        w[a] = 1;
                        w
                    })
                    .collect();
                let coord_diag = (0..size)
                    .map(|a| {
                        Matrix::from_fn(size, size, |i, j| {
                            if i == j && i == a {
                                FieldElem::ONE
                            } else {
                                FieldElem::ZERO
                            }
                        })
                    })
                    .collect();
                Realization {
                    size,
                    index_parity,
                    index_weight,
                    coord_diag,
                    form: None,
                }
            }
            Family::Osp2 => {
                let n = rd.n();
                let size = 2 + 2 * n;
                let index_parity = (0..size).map(|a| u8::from(a >= 2)).collect();
                let mut index_weight = vec![vec![0; amb]; size];
                index_weight[0][0] = 1;
                index_weight[1][0] = -1;
                for i in 0..n {
                    index_weight[2 + i][1 + i] = 1;
                    index_weight[2 + n + i][1 + i] = -1;
                }
                let mut coord_diag = Vec::with_capacity(amb);
                for a in 0..amb {
                    coord_diag.push(Matrix::from_fn(size, size, |i, j| {
                        if i == j {
                            f.from_int(index_weight[i][a])
                        } else {
                            FieldElem::ZERO
                        }
                    }));
                }
                // swap on the even pair, standard symplectic J on the odd block
                let mut g = Matrix::zeros(size, size);
                g.set(0, 1, FieldElem::ONE);
                g.set(1, 0, FieldElem::ONE);
                for i in 0..n {
                    g.set(2 + i, 2 + n + i, FieldElem::ONE);
                    g.set(2 + n + i, 2 + i, f.neg(FieldElem::ONE));
                }
                Realization {
                    size,
                    index_parity,
                    index_weight,
                    coord_diag,
                    form: Some(g),
                }
            }
        }
    }

    fn unit_weight(&self, a: usize, b: usize) -> Vec<i64> {
        self.index_weight[a]
            .iter()
            .zip(&self.index_weight[b])
            .map(|(x, y)| x - y)
            .collect()
    }

    /// `Σ c_a D_a` for integer coefficients on the ambient coordinates.
    pub fn diag_combination(&self, f: &FieldCtx, coeffs: &[FieldElem]) -> Matrix {
        let mut out = Matrix::zeros(self.size, self.size);
        for (d, &c) in self.coord_diag.iter().zip(coeffs) {
            if !c.is_zero() {
                out.add_scaled(f, c, d);
            }
        }
        out
    }

    /// A nonzero vector spanning the root space of `root`, first nonzero entry 1.
    pub fn root_vector(&self, f: &FieldCtx, root: &[i64], parity: u8) -> Result<Matrix> {
        let units: Vec<(usize, usize)> = (0..self.size)
            .flat_map(|a| (0..self.size).map(move |b| (a, b)))
            .filter(|&(a, b)| self.unit_weight(a, b) == root)
            .collect();
        let Some(g) = &self.form else {
            if units.len() != 1 {
                return Err(Error::Relation(format!(
                    "root {root:?} has {} matrix units",
                    units.len()
                )));
            }
            let (a, b) = units[0];
            let mut x = Matrix::zeros(self.size, self.size);
            x.set(a, b, FieldElem::ONE);
            return Ok(x);
        };
        // X ∈ osp iff (XᵀG)_ab + (−1)^{|X||a|} (GX)_ab = 0 for all a, b
        let s = self.size;
        let mut sys = Matrix::zeros(s * s, units.len());
        for (col, &(ua, ub)) in units.iter().enumerate() {
            let mut x = Matrix::zeros(s, s);
            x.set(ua, ub, FieldElem::ONE);
            let xtg = x.transpose().mul(f, g);
            let gx = g.mul(f, &x);
            for a in 0..s {
                let sign = if parity & self.index_parity[a] == 1 {
                    f.neg(FieldElem::ONE)
                } else {
                    FieldElem::ONE
                };
                for b in 0..s {
                    let v = f.add(xtg.get(a, b), f.mul(sign, gx.get(a, b)));
                    sys.set(a * s + b, col, v);
                }
            }
        }
        let ker = sys.kernel(f);
        if ker.cols() != 1 {
            return Err(Error::Relation(format!(
                "root space of {root:?} has dimension {}",
                ker.cols()
            )));
        }
        let v = ker.column(0);
        let lead = v
            .iter()
            .copied()
            .find(|c| !c.is_zero())
            .expect("kernel vector is nonzero");
        let inv = f.inv(lead).expect("nonzero");
        let mut x = Matrix::zeros(s, s);
        for (&(a, b), &c) in units.iter().zip(&v) {
            x.set(a, b, f.mul(inv, c));
        }
        Ok(x)
    }

    /// Whether a homogeneous matrix of parity `parity` preserves the form (always true without one).
    pub fn preserves_form(&self, f: &FieldCtx, x: &Matrix, parity: u8) -> bool {
        let Some(g) = &self.form else { return true };
        let xtg = x.transpose().mul(f, g);
        let gx = g.mul(f, x);
        (0..self.size).all(|a| {
            (0..self.size).all(|b| {
                let t = gx.get(a, b);
                let t = if parity & self.index_parity[a] == 1 {
                    f.neg(t)
                } else {
                    t
                };
                f.add(xtg.get(a, b), t).is_zero()
            })
        })
    }

    /// Supercommutator of two homogeneous matrices.
    pub fn super_bracket(&self, f: &FieldCtx, x: &Matrix, px: u8, y: &Matrix, py: u8) -> Matrix {
        let xy = x.mul(f, y);
        let yx = y.mul(f, x);
        if px & py == 1 {
            xy.add(f, &yx)
        } else {
            xy.sub(f, &yx)
        }
    }
}

/// Solves for coordinates in a fixed linearly independent family of matrices.
pub(super) struct CoordSolver {
    rows: Vec<usize>,
    inverse: Matrix,
    basis: Vec<Matrix>,
}

impl CoordSolver {
    pub fn new(f: &FieldCtx, basis: &[Matrix]) -> CoordSolver {
        let d = basis.len();
        let len = basis[0].rows() * basis[0].cols();
        let at = Matrix::from_fn(d, len, |i, j| basis[i].data()[j]);
        let (_, rows) = at.rref(f);
        assert_eq!(rows.len(), d, "basis matrices are linearly dependent");
        let sub = Matrix::from_fn(d, d, |i, j| basis[j].data()[rows[i]]);
        let inverse = sub
            .solve(f, &Matrix::identity(d))
            .expect("square and invertible");
        CoordSolver {
            rows,
            inverse,
            basis: basis.to_vec(),
        }
    }

    /// Coordinates of `x`, or `None` when it is outside the span.
    pub fn coords(&self, f: &FieldCtx, x: &Matrix) -> Option<Vec<FieldElem>> {
        let picked: Vec<FieldElem> = self.rows.iter().map(|&r| x.data()[r]).collect();
        let c = self.inverse.mul_vec(f, &picked);
        let mut back = Matrix::zeros(x.rows(), x.cols());
        for (b, &ci) in self.basis.iter().zip(&c) {
            if !ci.is_zero() {
                back.add_scaled(f, ci, b);
            }
        }
        (back == *x).then_some(c)
    }
}
