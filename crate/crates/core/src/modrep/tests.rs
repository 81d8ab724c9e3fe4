use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use super::*;
use crate::gf::FieldCtx;
use crate::pbw::Straightener;
use crate::rootdata::{Family, Weight};

fn alg(family: Family, m: usize, n: usize, p: u32, k: i64) -> Arc<SuperAlgebra> {
    Arc::new(SuperAlgebra::new(family, m, n, FieldCtx::new(p, k).unwrap()).unwrap())
}

fn w(a: &SuperAlgebra, xs: &[i64]) -> Weight {
    Weight::new(xs.iter().map(|&x| a.field().from_int(x)).collect())
}

/// Matrices of `Z_χ(λ)` computed by straightening `g · m` in U_χ(g), dropping
/// terms with a positive factor and evaluating toral factors at λ.
fn verma_by_straightening(a: &SuperAlgebra, chi: &PChar, lambda: &Weight) -> Vec<Matrix> {
    let f = a.field();
    let p = f.p() as usize;
    let neg: Vec<usize> = a.negative_range().collect();
    let radix: Vec<usize> = neg
        .iter()
        .map(|&i| if a.parity(i) == 1 { 2 } else { p })
        .collect();
    let total: usize = radix.iter().product();
    let mut monos = Vec::new();
    let mut index = HashMap::new();
    for code in 0..total {
        let mut e = vec![0u8; a.dim()];
        let mut rest = code;
        for k in (0..neg.len()).rev() {
            e[neg[k]] = (rest % radix[k]) as u8;
            rest /= radix[k];
        }
        index.insert(e.clone(), code);
        monos.push(crate::pbw::Monomial::from_exponents(e));
    }
    let mut s = Straightener::triangular(a, chi.clone());
    (0..a.dim())
        .map(|g| {
            let mut m = Matrix::zeros(total, total);
            for (col, mono) in monos.iter().enumerate() {
                for (t, c) in s.left_mul(g, mono).terms() {
                    if a.positive_range().any(|i| t.exp(i) > 0) {
                        continue;
                    }
                    let mut c = c;
                    for (k, i) in a.toral_range().enumerate() {
                        c = f.mul(c, f.pow(lambda.coords()[k], t.exp(i) as u64));
                    }
                    let mut key = t.exponents().to_vec();
                    for i in a.toral_range() {
                        key[i] = 0;
                    }
                    let row = index[&key];
                    m.set(row, col, f.add(m.get(row, col), c));
                }
            }
            m
        })
        .collect()
}

#[test]
fn verma_matches_straightening() {
    for (fam, m, n, k) in [
        (Family::Gl, 1, 1, 1),
        (Family::Gl, 2, 1, 1),
        (Family::Osp2, 0, 1, 1),
        (Family::Sl, 2, 1, 1),
    ] {
        let a = alg(fam, m, n, 3, k);
        let f = a.field().clone();
        for chi in [PChar::zero(&a), PChar::regular_nilpotent(&a)] {
            let lam = a.root_data().lambda_chi(&f, &chi.toral_values(&a)).unwrap();
            for l in lam.iter().step_by(5) {
                let z = baby_verma(&a, &chi, l).unwrap();
                let oracle = verma_by_straightening(&a, &chi, l);
                for i in 0..a.dim() {
                    assert_eq!(
                        z.act(i),
                        &oracle[i],
                        "{fam}({m}|{n}) generator {}",
                        a.label(i)
                    );
                }
            }
        }
    }
}

#[test]
fn gl11_verma_simple_iff_typical() {
    let a = alg(Family::Gl, 1, 1, 3, 1);
    let chi = PChar::zero(&a);
    let f = a.field().clone();
    for l in a.root_data().lambda_chi(&f, &chi.toral_values(&a)).unwrap() {
        let z = baby_verma(&a, &chi, &l).unwrap();
        assert_eq!(z.dim(), 2);
        let typical = f.add(l.coords()[0], l.coords()[1]) != FieldElem::ZERO;
        assert_eq!(is_irreducible(&z, DEFAULT_CAP).unwrap(), typical);
        assert_eq!(a.root_data().is_typical(&f, &l).unwrap(), typical);
        let factors = composition_factors(&z, DEFAULT_CAP).unwrap();
        assert_eq!(factors.len(), if typical { 1 } else { 2 });
        assert_eq!(
            head(&z, DEFAULT_CAP).unwrap().dim(),
            if typical { 2 } else { 1 }
        );
    }
}

#[test]
fn psi_of_even_verma_is_verma() {
    let a = alg(Family::Gl, 2, 1, 3, 1);
    let chi = PChar::zero(&a);
    for l in [w(&a, &[1, 0, 0]), w(&a, &[0, 0, 0]), w(&a, &[2, 1, 1])] {
        let z0 = baby_verma_even(&a, &chi, &l).unwrap();
        let z = baby_verma(&a, &chi, &l).unwrap();
        let psi = induce_psi(&z0).unwrap();
        assert_eq!(psi.dim(), z.dim());
        assert_eq!(
            formal_character(&psi).unwrap(),
            formal_character(&z).unwrap()
        );
        assert!(is_isomorphic(&psi, &z, IsoOptions::default()).unwrap());
    }
}

#[test]
fn phi_psi_recovers_simple_even_module() {
    let a = alg(Family::Osp2, 0, 1, 3, 1);
    let chi = PChar::zero(&a);
    let l = w(&a, &[1, 1]);
    let l0 = head(&baby_verma_even(&a, &chi, &l).unwrap(), DEFAULT_CAP).unwrap();
    let back = invariants_phi(&induce_psi(&l0).unwrap()).unwrap();
    assert_eq!(back.part(), Part::Even);
    assert!(is_isomorphic(&back, &l0, IsoOptions::default()).unwrap());
}

#[test]
fn psi_map_intertwines() {
    let a = alg(Family::Gl, 2, 1, 3, 1);
    let f = a.field().clone();
    let chi = PChar::zero(&a);
    let z0 = baby_verma_even(&a, &chi, &w(&a, &[0, 1, 0])).unwrap();
    let homs = hom_space(&z0, &z0).unwrap();
    assert!(!homs.is_empty());
    let pz = induce_psi(&z0).unwrap();
    for t in &homs {
        let big = psi_map(&a, t);
        for i in 0..a.dim() {
            assert_eq!(big.mul(&f, pz.act(i)), pz.act(i).mul(&f, &big));
        }
    }
}

#[test]
fn dual_is_a_module_for_minus_chi() {
    let a = alg(Family::Gl, 2, 1, 3, 2);
    let chi = PChar::regular_nilpotent(&a);
    let f = a.field().clone();
    let l = a.root_data().lambda_chi(&f, &chi.toral_values(&a)).unwrap()[4].clone();
    let z = baby_verma(&a, &chi, &l).unwrap();
    let d = dual_module(&z).unwrap();
    assert_eq!(d.chi(), &chi.neg(&f));
    // the double dual differs from the original by the parity automorphism
    let dd = dual_module(&d).unwrap();
    for i in 0..a.dim() {
        let want = if a.parity(i) == 1 {
            z.act(i).scale(&f, f.neg(FieldElem::ONE))
        } else {
            z.act(i).clone()
        };
        assert_eq!(dd.act(i), &want);
    }
}

#[test]
fn hom_spaces_of_vermas() {
    let a = alg(Family::Gl, 2, 1, 3, 1);
    let chi = PChar::zero(&a);
    let z1 = baby_verma(&a, &chi, &w(&a, &[1, 0, 0])).unwrap();
    let z2 = baby_verma(&a, &chi, &w(&a, &[0, 1, 0])).unwrap();
    assert_eq!(hom_space(&z1, &z1).unwrap().len(), 1);
    assert!(!is_isomorphic(&z1, &z2, IsoOptions::default()).unwrap());
    let sum = z1.direct_sum(&z2).unwrap();
    assert_eq!(
        hom_space(&sum, &sum).unwrap().len(),
        2 + hom_space(&z2, &z1).unwrap().len() + hom_space(&z1, &z2).unwrap().len()
    );
}

#[test]
fn exterior_algebra_cohomology() {
    for (fam, m, n) in [(Family::Gl, 1, 1), (Family::Gl, 2, 1), (Family::Osp2, 0, 1)] {
        let a = alg(fam, m, n, 3, 1);
        let f = a.field().clone();
        let lam = lambda_g1_actions(&a);
        assert_eq!(h1_from_actions(&f, &lam), 0);
        assert!(is_free_from_actions(&f, &lam, 1 << lam.len()));
        // the trivial module: every map is a cocycle, none a coboundary
        let triv: Vec<Matrix> = lam.iter().map(|_| Matrix::zeros(1, 1)).collect();
        assert_eq!(h1_from_actions(&f, &triv), lam.len());
        assert!(!is_free_from_actions(&f, &triv, 1));
    }
}

#[test]
fn graded_character_identity() {
    for (fam, m, n) in [(Family::Gl, 2, 1), (Family::Osp2, 0, 1), (Family::Gl, 1, 1)] {
        let a = alg(fam, m, n, 3, 1);
        let rd = a.root_data();
        let lam: Vec<i64> = (0..rd.ambient_dim() as i64).map(|i| 2 - i).collect();
        for shifted in [false, true] {
            let full = graded_verma_character(rd, 3, &lam, shifted, false).unwrap();
            let even = graded_verma_character(rd, 3, &lam, shifted, true).unwrap();
            assert_eq!(
                full,
                graded_verma_character_by_basis(&a, &lam, shifted, false).unwrap()
            );
            assert_eq!(
                even,
                graded_verma_character_by_basis(&a, &lam, shifted, true).unwrap()
            );
            assert_eq!(full, times_odd_factor(rd, &even));
        }
        assert!(graded_verma_character(rd, 3, &[1], false, false).is_err());
    }
}

#[test]
fn formal_character_reduces_graded_character() {
    let a = alg(Family::Gl, 2, 1, 3, 1);
    let f = a.field().clone();
    let rd = a.root_data();
    let lam = [1, 0, 2];
    let z = baby_verma(
        &a,
        &PChar::zero(&a),
        &rd.restrict(&f, &rd.root_to_field(&f, &lam)),
    )
    .unwrap();
    let mut reduced: BTreeMap<Weight, usize> = BTreeMap::new();
    for (x, n) in graded_verma_character(rd, 3, &lam, false, false).unwrap() {
        *reduced
            .entry(rd.restrict(&f, &rd.root_to_field(&f, &x)))
            .or_insert(0) += n as usize;
    }
    assert_eq!(formal_character(&z).unwrap(), reduced);
    assert!(character_tsv(&a, &reduced).starts_with("weight\tmultiplicity\n"));
}

#[test]
fn input_validation() {
    let a = alg(Family::Gl, 2, 1, 3, 1);
    let f = a.field().clone();
    let mut even = vec![FieldElem::ZERO; a.even_indices().len()];
    let pos = a
        .even_indices()
        .iter()
        .position(|&i| a.is_positive(i))
        .unwrap();
    even[pos] = FieldElem::ONE;
    let bad = PChar::from_even_values(&a, &even).unwrap();
    assert_eq!(
        baby_verma(&a, &bad, &w(&a, &[0, 0, 0])).unwrap_err(),
        Error::ChiNotNormalized
    );
    let ss = PChar::semisimple(&a, &[FieldElem::ONE, FieldElem::ZERO, FieldElem::ZERO]).unwrap();
    assert_eq!(
        baby_verma(&a, &ss, &w(&a, &[0, 0, 0])).unwrap_err(),
        Error::NotInLambdaChi { coord: 1 }
    );
    let z = baby_verma(&a, &PChar::zero(&a), &w(&a, &[0, 0, 0])).unwrap();
    assert!(matches!(induce_psi(&z), Err(Error::WrongPart(_))));
    assert!(matches!(
        invariants_phi(&z.restrict_even()),
        Err(Error::WrongPart(_))
    ));
    let mut e1 = vec![FieldElem::ZERO; z.dim()];
    e1[1] = FieldElem::ONE;
    assert!(z
        .submodule(&Echelon::from_vectors(&f, z.dim(), [e1].iter()))
        .is_err());
    let mut acts = z.actions().to_vec();
    acts[a.toral_range().start] = Some(Matrix::zeros(z.dim(), z.dim()));
    assert!(matches!(
        FDModule::new(
            a.clone(),
            Part::Full,
            PChar::zero(&a),
            acts,
            None,
            Provenance::Custom
        ),
        Err(Error::Relation(_))
    ));
}

#[test]
fn submodule_and_quotient_of_atypical_verma() {
    let a = alg(Family::Gl, 2, 1, 3, 1);
    let f = a.field().clone();
    let chi = PChar::zero(&a);
    let rd = a.root_data();
    let l = rd
        .lambda_chi(&f, &chi.toral_values(&a))
        .unwrap()
        .into_iter()
        .find(|l| !rd.is_typical(&f, l).unwrap())
        .unwrap();
    let z = baby_verma(&a, &chi, &l).unwrap();
    let sub = proper_submodule(&z, DEFAULT_CAP)
        .unwrap()
        .expect("atypical Verma is reducible");
    let s = z.submodule(&sub).unwrap();
    let q = z.quotient(&sub).unwrap();
    assert_eq!(s.dim() + q.dim(), z.dim());
    assert!(s.parity().is_some());
    let factors = composition_factors(&z, DEFAULT_CAP).unwrap();
    assert_eq!(factors.iter().map(|x| x.dim()).sum::<usize>(), z.dim());
    assert!(factors.windows(2).all(|p| p[0].dim() <= p[1].dim()));
    let total: usize = weight_spaces(&z)
        .unwrap()
        .iter()
        .map(|(_, e)| e.dim())
        .sum();
    assert_eq!(total, z.dim());
}

#[test]
fn generators_generate() {
    for (fam, m, n) in [(Family::Gl, 2, 2), (Family::Sl, 2, 1), (Family::Osp2, 0, 2)] {
        let a = alg(fam, m, n, 3, 1);
        let f = a.field().clone();
        let mut span = Echelon::new(a.dim());
        let gens: Vec<Vec<FieldElem>> = generators(&a, Part::Full)
            .iter()
            .map(|&i| a.unit_vector(i))
            .collect();
        let mut frontier = Vec::new();
        for g in &gens {
            if span.insert(&f, g.clone()) {
                frontier.push(g.clone());
            }
        }
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y = a.bracket(g, &x).unwrap();
                if span.insert(&f, y.clone()) {
                    frontier.push(y);
                }
            }
        }
        assert_eq!(span.dim(), a.dim(), "{fam}({m}|{n})");
    }
}

#[test]
fn gl11_module_examples() {
    let a = alg(Family::Gl, 1, 1, 3, 1);
    let f = a.field().clone();
    let chi = PChar::zero(&a);
    let typ = baby_verma(&a, &chi, &w(&a, &[1, 0])).unwrap();
    let atyp = baby_verma(&a, &chi, &w(&a, &[0, 0])).unwrap();
    let xb = a.pos_odd_range().start;
    // X_β (X_{−β} v) = (λ₁ + λ₂) v
    assert_eq!(typ.act(xb).get(0, 1), FieldElem::ONE);
    assert_eq!(baby_verma_even(&a, &chi, &w(&a, &[1, 0])).unwrap().dim(), 1);

    let seeds = socle_seeds(&typ).unwrap();
    assert_eq!(seeds.len(), 1);
    assert_eq!(
        (seeds[0].weight.clone(), seeds[0].space.dim()),
        (w(&a, &[1, 0]), 1)
    );
    let seeds: Vec<Weight> = socle_seeds(&atyp)
        .unwrap()
        .into_iter()
        .map(|s| s.weight)
        .collect();
    assert_eq!(seeds, vec![w(&a, &[0, 0]), w(&a, &[2, 1])]);

    assert_eq!(invariants_phi(&typ).unwrap().dim(), 1);
    assert_eq!(invariants_phi(&atyp).unwrap().dim(), 2);
    assert_eq!(h1_g1(&typ).unwrap(), 0);
    assert_eq!(h1_g1(&atyp).unwrap(), 2);
    assert!(is_free_over_g1(&typ).unwrap());
    let k00 = head(&atyp, DEFAULT_CAP).unwrap();
    assert_eq!(k00.dim(), 1);
    assert!(!is_free_over_g1(&k00).unwrap());

    assert_eq!(spin(&typ, &[vec![FieldElem::ZERO; 2]]).dim(), 0);
    assert_eq!(
        spin(&typ, &[vec![FieldElem::ONE, FieldElem::ZERO]]).dim(),
        2
    );

    let other = baby_verma(&a, &chi, &w(&a, &[0, 1])).unwrap();
    assert!(hom_space(&typ, &other).unwrap().is_empty());
    assert_eq!(
        hom_space(&typ, &typ.direct_sum(&typ).unwrap())
            .unwrap()
            .len(),
        2
    );

    let factors = composition_factors(&atyp, DEFAULT_CAP).unwrap();
    let wts: Vec<Weight> = factors
        .iter()
        .map(|x| socle_seeds(x).unwrap()[0].weight.clone())
        .collect();
    assert_eq!(wts, vec![w(&a, &[0, 0]), w(&a, &[2, 1])]);

    // K_λ* has weight −λ
    let k = baby_verma_even(&a, &chi, &w(&a, &[1, 2])).unwrap();
    let kd = dual_module(&k).unwrap();
    assert_eq!(socle_seeds(&kd).unwrap()[0].weight, w(&a, &[1, 2]).neg(&f));
    // the dual of a typical simple is typical
    let d = dual_module(&typ).unwrap();
    assert!(is_irreducible(&d, DEFAULT_CAP).unwrap());
    assert!(a
        .root_data()
        .is_typical(&f, &socle_seeds(&d).unwrap()[0].weight)
        .unwrap());
    let json = typ.to_json();
    assert_eq!(json["dim"], 2);
    assert_eq!(json["provenance"], "verma");
}

#[test]
fn psi_is_additive() {
    let a = alg(Family::Gl, 2, 1, 3, 1);
    let chi = PChar::zero(&a);
    let m = baby_verma_even(&a, &chi, &w(&a, &[1, 0, 0])).unwrap();
    let n = baby_verma_even(&a, &chi, &w(&a, &[0, 2, 1])).unwrap();
    let lhs = induce_psi(&m.direct_sum(&n).unwrap()).unwrap();
    let rhs = induce_psi(&m)
        .unwrap()
        .direct_sum(&induce_psi(&n).unwrap())
        .unwrap();
    assert_eq!(lhs.dim(), 4 * (m.dim() + n.dim()));
    assert!(is_isomorphic(&lhs, &rhs, IsoOptions::default()).unwrap());
    // exactness on a short exact sequence 0 → S → M → M/S → 0
    let l = a
        .root_data()
        .lambda_chi(a.field(), &chi.toral_values(&a))
        .unwrap()
        .into_iter()
        .map(|l| baby_verma_even(&a, &chi, &l).unwrap())
        .find(|z| !is_irreducible(z, DEFAULT_CAP).unwrap())
        .unwrap();
    let sub = proper_submodule(&l, DEFAULT_CAP).unwrap().unwrap();
    let (s, q) = (l.submodule(&sub).unwrap(), l.quotient(&sub).unwrap());
    assert_eq!(
        induce_psi(&l).unwrap().dim(),
        induce_psi(&s).unwrap().dim() + induce_psi(&q).unwrap().dim()
    );
}
