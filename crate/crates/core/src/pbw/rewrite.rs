use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gf::FieldElem;
use crate::liesuper::{PChar, SuperAlgebra};

use super::{AlgebraElem, Monomial, Order};

/// Which redex the word rewriter applies next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
    Random(u64),
}

#[derive(Clone, Copy, Debug)]
enum Redex {
    Swap(usize),
    OddSquare(usize),
    Power(usize),
}

fn redexes(a: &SuperAlgebra, order: &Order, w: &[usize]) -> Vec<Redex> {
    let p = a.field().p() as usize;
    let mut out = Vec::new();
    for k in 0..w.len().saturating_sub(1) {
        let (x, y) = (w[k], w[k + 1]);
        if order.position(x) > order.position(y) {
            out.push(Redex::Swap(k));
        } else if x == y && a.parity(x) == 1 {
            out.push(Redex::OddSquare(k));
        } else if x == y && k + p <= w.len() && w[k..k + p].iter().all(|&z| z == x) {
            out.push(Redex::Power(k));
        }
    }
    out
}

/// Rewrites a word of generators to PBW normal form by repeatedly applying
/// one rule at a time to raw words:
/// `xy → ±yx + [x,y]`, `xx → ½[x,x]` (odd), `x^p → x^{[p]} + χ(x)^p` (even).
pub fn rewrite_word(
    a: &SuperAlgebra,
    chi: &PChar,
    order: &Order,
    word: &[usize],
    strategy: Strategy,
) -> AlgebraElem {
    let f = a.field();
    let mut rng = match strategy {
        Strategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut pending: BTreeMap<Vec<usize>, FieldElem> = BTreeMap::new();
    pending.insert(word.to_vec(), FieldElem::ONE);
    let mut done = AlgebraElem::zero();
    let add = |map: &mut BTreeMap<Vec<usize>, FieldElem>, w: Vec<usize>, c: FieldElem| {
        if c.is_zero() {
            return;
        }
        let e = map.entry(w).or_insert(FieldElem::ZERO);
        *e = f.add(*e, c);
    };
    while let Some((w, c)) = pending.pop_first() {
        if c.is_zero() {
            continue;
        }
        let rs = redexes(a, order, &w);
        if rs.is_empty() {
            let mut e = vec![0u8; a.dim()];
            for &x in &w {
                e[x] += 1;
            }
            done.add_term(f, Monomial::from_exponents(e), c);
            continue;
        }
        let r = match (&mut rng, strategy) {
            (Some(g), _) => rs[g.gen_range(0..rs.len())],
            (None, Strategy::Rightmost) => *rs.last().expect("nonempty"),
            _ => rs[0],
        };
        match r {
            Redex::Swap(k) => {
                let (x, y) = (w[k], w[k + 1]);
                let sign = if a.parity(x) & a.parity(y) == 1 {
                    f.neg(c)
                } else {
                    c
                };
                let mut sw = w.clone();
                sw.swap(k, k + 1);
                add(&mut pending, sw, sign);
                for &(z, d) in a.bracket_basis(x, y) {
                    let mut nw = w[..k].to_vec();
                    nw.push(z);
                    nw.extend_from_slice(&w[k + 2..]);
                    add(&mut pending, nw, f.mul(c, d));
                }
            }
            Redex::OddSquare(k) => {
                let x = w[k];
                for &(z, d) in a.bracket_basis(x, x) {
                    let mut nw = w[..k].to_vec();
                    nw.push(z);
                    nw.extend_from_slice(&w[k + 2..]);
                    add(&mut pending, nw, f.mul(c, f.mul(f.half(), d)));
                }
            }
            Redex::Power(k) => {
                let x = w[k];
                let p = f.p() as usize;
                let rest: Vec<usize> = w[..k].iter().chain(&w[k + p..]).copied().collect();
                add(&mut pending, rest, f.mul(c, f.frobenius(chi.value(x))));
                for &(z, d) in a.p_power_basis(x).expect("even") {
                    let mut nw = w[..k].to_vec();
                    nw.push(z);
                    nw.extend_from_slice(&w[k + p..]);
                    add(&mut pending, nw, f.mul(c, d));
                }
            }
        }
    }
    done
}
