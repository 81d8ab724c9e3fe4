//! Formal characters, and graded characters computed from root data.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::liesuper::SuperAlgebra;
use crate::rootdata::{RootData, Weight};

use super::{weight_spaces, FDModule};

/// Joint toral eigenvalues and their multiplicities.
pub type CharacterVector = BTreeMap<Weight, usize>;

/// Integer ambient weights and multiplicities.
pub type GradedCharacter = BTreeMap<Vec<i64>, u64>;

pub fn formal_character(m: &FDModule) -> Result<CharacterVector> {
    Ok(weight_spaces(m)?
        .into_iter()
        .map(|(w, e)| (w, e.dim()))
        .collect())
}

/// TSV with a header row; weights are space separated field elements.
pub fn character_tsv(a: &SuperAlgebra, ch: &CharacterVector) -> String {
    let f = a.field();
    let mut out = String::from("weight\tmultiplicity\n");
    for (w, n) in ch {
        out.push_str(&format!("{}\t{}\n", w.format(f), n));
    }
    out
}

pub fn graded_character_tsv(ch: &GradedCharacter) -> String {
    let mut out = String::from("weight\tmultiplicity\n");
    for (w, n) in ch {
        let s: Vec<String> = w.iter().map(|x| x.to_string()).collect();
        out.push_str(&format!("{}\t{}\n", s.join(" "), n));
    }
    out
}

fn times_geometric(ch: &GradedCharacter, root: &[i64], terms: i64) -> GradedCharacter {
    let mut out = GradedCharacter::new();
    for (w, &n) in ch {
        for j in 0..terms {
            let v: Vec<i64> = w.iter().zip(root).map(|(x, r)| x - j * r).collect();
            *out.entry(v).or_insert(0) += n;
        }
    }
    out
}

fn start(rd: &RootData, p: u32, lambda: &[i64], shifted: bool) -> Result<Vec<i64>> {
    if lambda.len() != rd.ambient_dim() {
        return Err(Error::NonIntegral);
    }
    Ok(if shifted {
        lambda
            .iter()
            .zip(rd.rho0_twice())
            .map(|(l, r)| l - (p as i64 - 1) * r)
            .collect()
    } else {
        lambda.to_vec()
    })
}

/// `e^λ ∏_{α>0 even}(1 + e^{−α} + … + e^{−(p−1)α}) ∏_{β>0 odd}(1 + e^{−β})`,
/// with `λ ↦ λ − 2(p−1)ρ₀` when shifted; the odd factor is dropped for the even Verma.
pub fn graded_verma_character(
    rd: &RootData,
    p: u32,
    lambda: &[i64],
    shifted: bool,
    even_only: bool,
) -> Result<GradedCharacter> {
    let mut ch = GradedCharacter::from([(start(rd, p, lambda, shifted)?, 1)]);
    for r in rd.even_positive() {
        ch = times_geometric(&ch, r, p as i64);
    }
    if !even_only {
        for r in rd.odd_positive() {
            ch = times_geometric(&ch, r, 2);
        }
    }
    Ok(ch)
}

/// Multiplies a graded character by `∏_{β>0 odd}(1 + e^{−β})`.
pub fn times_odd_factor(rd: &RootData, ch: &GradedCharacter) -> GradedCharacter {
    rd.odd_positive()
        .iter()
        .fold(ch.clone(), |acc, r| times_geometric(&acc, r, 2))
}

/// The same character, summed over the ordered monomials in the negative root vectors.
pub fn graded_verma_character_by_basis(
    a: &SuperAlgebra,
    lambda: &[i64],
    shifted: bool,
    even_only: bool,
) -> Result<GradedCharacter> {
    let rd = a.root_data();
    let base = start(rd, a.field().p(), lambda, shifted)?;
    let neg: Vec<usize> = if even_only {
        a.neg_even_range().collect()
    } else {
        a.negative_range().collect()
    };
    let p = a.field().p() as usize;
    let radix: Vec<usize> = neg
        .iter()
        .map(|&i| if a.parity(i) == 1 { 2 } else { p })
        .collect();
    let total: usize = radix.iter().product();
    let mut ch = GradedCharacter::new();
    for mut code in 0..total {
        let mut w = base.clone();
        for (&i, &r) in neg.iter().zip(&radix) {
            let e = (code % r) as i64;
            code /= r;
            for (x, y) in w.iter_mut().zip(a.root_of(i).expect("root vector")) {
                *x += e * y;
            }
        }
        *ch.entry(w).or_insert(0) += 1;
    }
    Ok(ch)
}
