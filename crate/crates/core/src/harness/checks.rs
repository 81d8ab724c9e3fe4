use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gf::{Echelon, FieldElem, Matrix};
use crate::liesuper::{PChar, SuperAlgebra};
use crate::modrep::{self, FDModule, IsoOptions};
use crate::pbw::{self, AlgebraElem, Order, Straightener, TKind};
use crate::rootdata::{PolyKind, Weight};

use super::config::{LambdaSelection, ScenarioConfig};
use super::{CheckRecord, Status};

pub(super) struct Outcome {
    pub status: Status,
    pub detail: String,
    pub counterexample: Option<Value>,
    pub stats: BTreeMap<String, Value>,
}

impl Outcome {
    fn new(status: Status, detail: impl Into<String>) -> Outcome {
        Outcome {
            status,
            detail: detail.into(),
            counterexample: None,
            stats: BTreeMap::new(),
        }
    }

    fn pass(detail: impl Into<String>) -> Outcome {
        Outcome::new(Status::Pass, detail)
    }

    fn fail(detail: impl Into<String>, cex: Value) -> Outcome {
        Outcome {
            counterexample: Some(cex),
            ..Outcome::new(Status::Fail, detail)
        }
    }

    fn skip(reason: impl Into<String>) -> Outcome {
        Outcome::new(Status::Skipped, reason)
    }

    fn stat(mut self, key: &str, v: impl Into<Value>) -> Outcome {
        self.stats.insert(key.to_string(), v.into());
        self
    }
}

/// Data for one simple even module `L⁰ = head Z⁰_χ(λ)`.
pub(super) struct SimpleData {
    pub lambda: Weight,
    pub l0: FDModule,
    pub typical: bool,
    pub mixed: bool,
    pub psi: FDModule,
    pub psi_simple: bool,
}

type Vermas = Vec<(Weight, FDModule, bool)>;

pub(super) struct Ctx<'c> {
    pub cfg: &'c ScenarioConfig,
    pub a: Arc<SuperAlgebra>,
    pub chi: PChar,
    pub lambdas: std::result::Result<Vec<Weight>, String>,
    simples: OnceLock<std::result::Result<Vec<SimpleData>, String>>,
    vermas: OnceLock<std::result::Result<Vermas, String>>,
    pool: rayon::ThreadPool,
    pub sigma: OnceLock<Option<i64>>,
}

fn weight_json(a: &SuperAlgebra, w: &Weight) -> Value {
    Value::String(w.format(a.field()))
}

impl<'c> Ctx<'c> {
    pub fn new(cfg: &'c ScenarioConfig) -> Result<Ctx<'c>> {
        let a = Arc::new(cfg.algebra()?);
        let chi = cfg.chi.build(&a)?;
        if !chi.kills_positive_even(&a) {
            return Err(Error::ChiNotNormalized);
        }
        let f = a.field().clone();
        let rd = a.root_data();
        let lambdas = match rd.lambda_chi(&f, &chi.toral_values(&a)) {
            Err(e) => Err(e.to_string()),
            Ok(all) => match cfg.single_weight(&a)? {
                Some(w) => {
                    rd.check_in_lambda_chi(&f, &chi.toral_values(&a), &w)?;
                    Ok(vec![w])
                }
                None if cfg.lambda == LambdaSelection::TypicalOnly => {
                    let mut out = Vec::new();
                    for w in all {
                        if rd.is_typical(&f, &w)? {
                            out.push(w);
                        }
                    }
                    Ok(out)
                }
                None => Ok(all),
            },
        };
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.threads)
            .build()
            .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
        Ok(Ctx {
            cfg,
            a,
            chi,
            lambdas,
            simples: OnceLock::new(),
            vermas: OnceLock::new(),
            pool,
            sigma: OnceLock::new(),
        })
    }

    fn par_map<T: Sync, R: Send>(&self, items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
        self.pool.install(|| items.par_iter().map(f).collect())
    }

    fn weights(&self) -> std::result::Result<&[Weight], Outcome> {
        self.lambdas
            .as_deref()
            .map_err(|e| Outcome::skip(format!("Lambda_chi unavailable: {e}")))
    }

    fn simples(&self) -> std::result::Result<&[SimpleData], Outcome> {
        let r = self.simples.get_or_init(|| {
            let ws = self
                .lambdas
                .as_ref()
                .map_err(|e| format!("Lambda_chi unavailable: {e}"))?;
            let built: Vec<Result<SimpleData>> = self.par_map(ws, |w| self.simple_data(w));
            built
                .into_iter()
                .collect::<Result<Vec<_>>>()
                .map_err(|e| e.to_string())
        });
        r.as_deref().map_err(|e| Outcome::skip(e.clone()))
    }

    fn simple_data(&self, w: &Weight) -> Result<SimpleData> {
        let f = self.a.field();
        let rd = self.a.root_data();
        let l0 = modrep::head(
            &modrep::baby_verma_even(&self.a, &self.chi, w)?,
            self.cfg.cap,
        )?;
        let flags = modrep::socle_seeds(&l0)?
            .iter()
            .map(|s| rd.is_typical(f, &s.weight))
            .collect::<Result<Vec<bool>>>()?;
        let typical = flags.iter().all(|&t| t);
        let mixed = flags.iter().any(|&t| t) && !typical;
        let psi = modrep::induce_psi(&l0)?;
        let psi_simple = modrep::is_irreducible(&psi, self.cfg.cap)?;
        Ok(SimpleData {
            lambda: w.clone(),
            l0,
            typical,
            mixed,
            psi,
            psi_simple,
        })
    }

    /// Every `Z_χ(λ)` with its irreducibility.
    fn vermas(&self) -> std::result::Result<&[(Weight, FDModule, bool)], Outcome> {
        let r = self.vermas.get_or_init(|| {
            let ws = self
                .lambdas
                .as_ref()
                .map_err(|e| format!("Lambda_chi unavailable: {e}"))?;
            let built: Vec<Result<(Weight, FDModule, bool)>> = self.par_map(ws, |w| {
                let z = modrep::baby_verma(&self.a, &self.chi, w)?;
                let simple = modrep::is_irreducible(&z, self.cfg.cap)?;
                Ok((w.clone(), z, simple))
            });
            built
                .into_iter()
                .collect::<Result<Vec<_>>>()
                .map_err(|e| e.to_string())
        });
        r.as_deref().map_err(|e| Outcome::skip(e.clone()))
    }

    fn wj(&self, w: &Weight) -> Value {
        weight_json(&self.a, w)
    }
}

/// First failure of a per-item predicate, as a counterexample.
fn first_failure<T>(items: Vec<(T, Result<bool>)>) -> std::result::Result<Option<T>, Error> {
    for (x, r) in items {
        if !r? {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

fn inconclusive(e: Error) -> Outcome {
    Outcome::skip(format!("inconclusive: {e}"))
}

macro_rules! try_skip {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(o) => return o,
        }
    };
}

macro_rules! try_err {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return inconclusive(e),
        }
    };
}

pub(super) fn kac_criterion(cx: &Ctx) -> Outcome {
    let sims = try_skip!(cx.simples());
    if let Some(s) = sims.iter().find(|s| s.mixed) {
        return Outcome::fail(
            "seed weights of one simple even module mix typical and atypical",
            cx.wj(&s.lambda),
        );
    }
    let typical = sims.iter().filter(|s| s.typical).count();
    match sims.iter().find(|s| s.psi_simple != s.typical) {
        Some(s) => Outcome::fail(
            format!(
                "psi(L0) simple = {}, L0 typical = {}",
                s.psi_simple, s.typical
            ),
            cx.wj(&s.lambda),
        ),
        None => Outcome::pass(format!(
            "{} simple even modules, {typical} typical",
            sims.len()
        ))
        .stat("modules", sims.len())
        .stat("typical", typical),
    }
}

pub(super) fn equivalence(cx: &Ctx) -> Outcome {
    let sims = try_skip!(cx.simples());
    let opts = IsoOptions::default();
    let typ: Vec<&SimpleData> = sims.iter().filter(|s| s.typical && s.psi_simple).collect();
    let res = cx.par_map(&typ, |s| {
        let back = modrep::invariants_phi(&s.psi)?;
        let ok0 = modrep::is_isomorphic(&back, &s.l0, opts)?;
        let ok1 = modrep::is_isomorphic(&modrep::induce_psi(&back)?, &s.psi, opts)?;
        Ok(ok0 && ok1)
    });
    let bad = try_err!(first_failure(
        typ.iter().map(|s| s.lambda.clone()).zip(res).collect()
    ));
    if let Some(w) = bad {
        return Outcome::fail(
            "phi psi or psi phi is not the identity on a typical simple",
            cx.wj(&w),
        );
    }
    // reducible typical Vermas: factors survive psi phi one to one
    let vermas = try_skip!(cx.vermas());
    let f = cx.a.field();
    let rd = cx.a.root_data();
    let odd = cx.a.pos_odd_range().len();
    let reducible: Vec<&(Weight, FDModule, bool)> = vermas
        .iter()
        .filter(|(w, _, simple)| !simple && rd.is_typical(f, w).unwrap_or(false))
        .collect();
    let res = cx.par_map(&reducible, |(_, z, _)| {
        let inv = modrep::invariants_phi(z)?;
        if inv.dim() << odd != z.dim() {
            return Ok(false);
        }
        let back = modrep::induce_psi(&inv)?;
        if !modrep::is_isomorphic(&back, z, opts)? {
            return Ok(false);
        }
        let (fa, fb) = (
            modrep::composition_factors(z, cx.cfg.cap)?,
            modrep::composition_factors(&back, cx.cfg.cap)?,
        );
        if fa.len() != fb.len() {
            return Ok(false);
        }
        for (x, y) in fa.iter().zip(&fb) {
            if !modrep::is_isomorphic(x, y, opts)? {
                return Ok(false);
            }
        }
        Ok(true)
    });
    let bad = try_err!(first_failure(
        reducible.iter().map(|v| v.0.clone()).zip(res).collect()
    ));
    if let Some(w) = bad {
        return Outcome::fail(
            "psi phi changes a reducible typical Verma or its factors",
            cx.wj(&w),
        );
    }
    Outcome::pass(format!(
        "{} typical simples, {} reducible typical Vermas",
        typ.len(),
        reducible.len()
    ))
    .stat("typical_simples", typ.len())
    .stat("reducible_typical_vermas", reducible.len())
}

pub(super) fn p1_formula(cx: &Ctx) -> Outcome {
    let ws = try_skip!(cx.weights());
    let a = &*cx.a;
    let f = a.field();
    let rd = a.root_data();
    let mut s = Straightener::triangular(a, cx.chi.clone());
    let h = pbw::reduce_mod_n_plus(a, &pbw::build_t(&mut s, TKind::PlusMinus));
    let mut sigma: Option<i64> = None;
    for w in ws {
        let got = try_err!(h.eval(f, w));
        let want = try_err!(rd.eval_p(f, w, PolyKind::P1));
        if want.is_zero() && got.is_zero() {
            continue;
        }
        let this = if got == want {
            1
        } else if got == f.neg(want) {
            -1
        } else {
            return Outcome::fail(
                format!(
                    "T+T- gives {}, product gives {}",
                    f.format(got),
                    f.format(want)
                ),
                cx.wj(w),
            );
        };
        if *sigma.get_or_insert(this) != this {
            return Outcome::fail("the sign changes between weights", cx.wj(w));
        }
    }
    let _ = cx.sigma.set(sigma);
    let out = Outcome::pass(format!("{} weights evaluated", ws.len())).stat("weights", ws.len());
    match sigma {
        Some(sg) => out.stat("sigma", sg),
        None => out,
    }
}

fn is_multiple(f: &crate::gf::FieldCtx, x: &AlgebraElem, of: &AlgebraElem) -> bool {
    let Some((m0, c0)) = of.terms().next() else {
        return x.is_zero();
    };
    let Some(ratio) = f.div(x.coeff(m0), c0) else {
        return false;
    };
    let mut scaled = AlgebraElem::zero();
    scaled.add_scaled(f, ratio, of);
    &scaled == x
}

pub(super) fn t_commute(cx: &Ctx) -> Outcome {
    let a = &*cx.a;
    let f = a.field();
    let mut s = Straightener::triangular(a, cx.chi.clone());
    let tp = pbw::build_t(&mut s, TKind::Plus);
    let tm = pbw::build_t(&mut s, TKind::Minus);
    let tt = pbw::build_t(&mut s, TKind::PlusMinus);
    let par = (a.pos_odd_range().len() % 2) as u8;
    for x in a.even_indices() {
        if !s.commutator(x, &tt, 0).is_zero() {
            return Outcome::fail("[x, T+T-] != 0", json!(a.label(x)));
        }
        if !is_multiple(f, &s.commutator(x, &tp, par), &tp)
            || !is_multiple(f, &s.commutator(x, &tm, par), &tm)
        {
            return Outcome::fail("[x, T+-] is not a multiple of T+-", json!(a.label(x)));
        }
    }
    Outcome::pass(format!("{} even basis elements", a.even_indices().len()))
}

/// Matrix of an element of U_χ on a module.
fn act_elem(m: &FDModule, x: &AlgebraElem, order: &Order) -> Matrix {
    let f = m.field();
    let mut out = Matrix::zeros(m.dim(), m.dim());
    for (mono, c) in x.terms() {
        let mut prod = Matrix::identity(m.dim());
        for i in mono.word(order) {
            prod = prod.mul(f, m.act(i));
        }
        out.add_scaled(f, c, &prod);
    }
    out
}

pub(super) fn spin_down(cx: &Ctx) -> Outcome {
    let sims = try_skip!(cx.simples());
    let a = &*cx.a;
    let order = Order::triangular(a);
    let tm = {
        let mut s = Straightener::triangular(a, cx.chi.clone());
        pbw::build_t(&mut s, TKind::Minus)
    };
    let res = cx.par_map(sims, |sd| {
        let f = sd.psi.field();
        let t = act_elem(&sd.psi, &tm, &order);
        let d0 = sd.l0.dim();
        let image: Vec<Vec<FieldElem>> = (0..d0).map(|c| t.column(c)).collect();
        let mut ok = true;
        for seed in modrep::socle_seeds(&sd.psi)? {
            if seed.space.dim() > cx.cfg.cap {
                return Err(Error::CapExceeded {
                    dim: seed.space.dim(),
                    cap: cx.cfg.cap,
                });
            }
            modrep::for_each_line(f, &seed.space.basis(), |u| {
                let sub = modrep::spin(&sd.psi, &[u]);
                if !image.iter().all(|v| sub.contains(f, v)) {
                    ok = false;
                }
                !ok
            });
        }
        Ok(ok)
    });
    let bad = try_err!(first_failure(
        sims.iter().map(|s| s.lambda.clone()).zip(res).collect()
    ));
    match bad {
        Some(w) => Outcome::fail("a seed spins to a submodule missing T- L0", cx.wj(&w)),
        None => Outcome::pass(format!("{} modules psi(L0)", sims.len())),
    }
}

pub(super) fn type_m(cx: &Ctx) -> Outcome {
    let sims = try_skip!(cx.simples());
    let simple: Vec<&SimpleData> = sims.iter().filter(|s| s.psi_simple).collect();
    let res = cx.par_map(&simple, |s| {
        Ok(modrep::hom_space(&s.psi, &s.psi)?.len() == 1)
    });
    match try_err!(first_failure(
        simple.iter().map(|s| s.lambda.clone()).zip(res).collect()
    )) {
        Some(w) => Outcome::fail("endomorphism space is not one-dimensional", cx.wj(&w)),
        None => Outcome::pass(format!("{} simple modules psi(L0)", simple.len())),
    }
}

pub(super) fn invariants_simple(cx: &Ctx) -> Outcome {
    let vermas = try_skip!(cx.vermas());
    let res = cx.par_map(vermas, |(_, z, _)| {
        let l = modrep::head(z, cx.cfg.cap)?;
        modrep::is_irreducible(&modrep::invariants_phi(&l)?, cx.cfg.cap)
    });
    match try_err!(first_failure(
        vermas.iter().map(|v| v.0.clone()).zip(res).collect()
    )) {
        Some(w) => Outcome::fail("g1-invariants of the simple head are reducible", cx.wj(&w)),
        None => Outcome::pass(format!("{} simple heads", vermas.len())),
    }
}

fn typical_simples<'s>(cx: &Ctx, sims: &'s [SimpleData]) -> Vec<&'s SimpleData> {
    let _ = cx;
    sims.iter().filter(|s| s.typical && s.psi_simple).collect()
}

pub(super) fn g1_free(cx: &Ctx) -> Outcome {
    let sims = try_skip!(cx.simples());
    let typ = typical_simples(cx, sims);
    let res = cx.par_map(&typ, |s| modrep::is_free_over_g1(&s.psi));
    match try_err!(first_failure(
        typ.iter().map(|s| s.lambda.clone()).zip(res).collect()
    )) {
        Some(w) => Outcome::fail("typical simple is not free over g1", cx.wj(&w)),
        None => Outcome::pass(format!("{} typical simples", typ.len())),
    }
}

pub(super) fn h1(cx: &Ctx) -> Outcome {
    let f = cx.a.field();
    let ext = modrep::h1_from_actions(f, &modrep::lambda_g1_actions(&cx.a));
    if ext != 0 {
        return Outcome::fail("H^1(g1, exterior algebra) != 0", json!(ext));
    }
    let sims = try_skip!(cx.simples());
    let typ = typical_simples(cx, sims);
    let res = cx.par_map(&typ, |s| Ok(modrep::h1_g1(&s.psi)? == 0));
    match try_err!(first_failure(
        typ.iter().map(|s| s.lambda.clone()).zip(res).collect()
    )) {
        Some(w) => Outcome::fail("H^1(g1, L) != 0 for a typical simple", cx.wj(&w)),
        None => Outcome::pass(format!(
            "{} typical simples and the exterior algebra",
            typ.len()
        )),
    }
}

pub(super) fn dual_typical(cx: &Ctx) -> Outcome {
    let sims = try_skip!(cx.simples());
    let typ = typical_simples(cx, sims);
    let rd = cx.a.root_data();
    let res = cx.par_map(&typ, |s| {
        let f = s.psi.field();
        let d = modrep::dual_module(&s.psi)?;
        if !modrep::is_irreducible(&d, cx.cfg.cap)? {
            return Ok(false);
        }
        for seed in modrep::socle_seeds(&modrep::invariants_phi(&d)?)? {
            if !rd.is_typical(f, &seed.weight)? {
                return Ok(false);
            }
        }
        Ok(true)
    });
    match try_err!(first_failure(
        typ.iter().map(|s| s.lambda.clone()).zip(res).collect()
    )) {
        Some(w) => Outcome::fail(
            "dual of a typical simple is not a typical simple",
            cx.wj(&w),
        ),
        None => Outcome::pass(format!("{} typical simples", typ.len())),
    }
}

pub(super) fn verma_simplicity(cx: &Ctx) -> Outcome {
    if !cx.chi.classify(&cx.a).semisimple_normal_form {
        return Outcome::skip("needs a semisimple p-character");
    }
    let vermas = try_skip!(cx.vermas());
    let rd = cx.a.root_data();
    let res = cx.par_map(vermas, |(w, z, simple)| {
        let f = z.field();
        let p = rd.eval_p(f, w, PolyKind::P)?;
        let p0 = rd.eval_p(f, w, PolyKind::P0)?;
        let z0 = modrep::baby_verma_even(&cx.a, &cx.chi, w)?;
        if modrep::is_irreducible(&z0, cx.cfg.cap)? == p0.is_zero() || *simple == p.is_zero() {
            return Ok(false);
        }
        Ok(!*simple || modrep::hom_space(z, z)?.len() == 1)
    });
    let simple = vermas.iter().filter(|v| v.2).count();
    match try_err!(first_failure(
        vermas.iter().map(|v| v.0.clone()).zip(res).collect()
    )) {
        Some(w) => Outcome::fail(
            "simplicity disagrees with P(lambda), or a simple Verma is not of type M",
            cx.wj(&w),
        ),
        None => Outcome::pass(format!("{} Vermas, {simple} simple", vermas.len()))
            .stat("vermas", vermas.len())
            .stat("simple", simple),
    }
}

/// Whether g_χ is exactly the toral subalgebra.
fn centralizer_is_cartan(a: &SuperAlgebra, chi: &PChar) -> bool {
    let f = a.field();
    let c = chi.centralizer(a);
    if c.len() != a.rank() {
        return false;
    }
    let span = Echelon::from_vectors(f, a.dim(), c.iter());
    a.toral_range().all(|t| span.contains(f, &a.unit_vector(t)))
}

pub(super) fn centralizer(cx: &Ctx) -> Outcome {
    let a = &*cx.a;
    let f = a.field();
    let p = f.p() as usize;
    let r = a.rank();
    let mut chis = Vec::new();
    if cx.chi.classify(a).semisimple_normal_form {
        chis.push(cx.chi.clone());
    }
    for code in 0..p.pow(r as u32) {
        let vals: Vec<FieldElem> = (0..r)
            .map(|i| f.from_int(((code / p.pow(i as u32)) % p) as i64))
            .collect();
        chis.push(PChar::semisimple(a, &vals).expect("rank values"));
    }
    let mut regular = 0;
    for chi in &chis {
        let by_coroots = a.positive_range().all(|i| !chi.on_coroot(a, i).is_zero());
        if by_coroots != centralizer_is_cartan(a, chi)
            || by_coroots != chi.classify(a).regular_semisimple
        {
            let vals: Vec<String> = chi.toral_values(a).iter().map(|&x| f.format(x)).collect();
            return Outcome::fail(
                "centralizer test disagrees with the coroot test",
                json!(vals),
            );
        }
        regular += by_coroots as usize;
    }
    Outcome::pass(format!(
        "{} semisimple p-characters, {regular} regular",
        chis.len()
    ))
    .stat("characters", chis.len())
    .stat("regular", regular)
}

/// Gram matrix rank of the trace form of the regular representation of U_χ.
pub fn regular_trace_form_rank(a: &SuperAlgebra, chi: &PChar) -> (usize, usize) {
    let f = a.field();
    let basis = pbw::pbw_basis(a, false);
    let index: BTreeMap<&pbw::Monomial, usize> =
        basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut s = Straightener::triangular(a, chi.clone());
    let elems: Vec<AlgebraElem> = basis
        .iter()
        .map(|m| AlgebraElem::monomial(m.clone(), FieldElem::ONE))
        .collect();
    let n = basis.len();
    // products[i][j] = b_i b_j
    let mut products = vec![Vec::with_capacity(n); n];
    for i in 0..n {
        for j in 0..n {
            products[i].push(s.multiply(&elems[i], &elems[j]));
        }
    }
    // Tr(L_{b_i}) = Σ_j coefficient of b_j in b_i b_j
    let tr: Vec<FieldElem> = (0..n)
        .map(|i| {
            (0..n).fold(FieldElem::ZERO, |acc, j| {
                f.add(acc, products[i][j].coeff(&basis[j]))
            })
        })
        .collect();
    let gram = Matrix::from_fn(n, n, |i, j| {
        products[i][j].terms().fold(FieldElem::ZERO, |acc, (m, c)| {
            f.add(acc, f.mul(c, tr[index[m]]))
        })
    });
    (gram.rank(f), n)
}

pub(super) fn semisimplicity(cx: &Ctx) -> Outcome {
    let a = &*cx.a;
    let class = cx.chi.classify(a);
    if !class.semisimple_normal_form {
        return Outcome::skip("needs a semisimple p-character");
    }
    let vermas = try_skip!(cx.vermas());
    let p = a.field().p() as u64;
    let even = a.even_indices().len() as u32;
    let odd = a.odd_indices().len() as u32;
    let dim_u = p.pow(even) << odd;
    if !class.regular_semisimple {
        return match vermas.iter().find(|v| !v.2) {
            Some((w, z, _)) => Outcome::pass(format!(
                "reducible Verma of dimension {} at a non-regular chi",
                z.dim()
            ))
            .stat("witness", cx.wj(w))
            .stat("regular", false),
            None => Outcome::fail("non-regular chi but every Verma is simple", Value::Null),
        };
    }
    if let Some((w, _, _)) = vermas.iter().find(|v| !v.2) {
        return Outcome::fail("regular chi with a reducible Verma", cx.wj(w));
    }
    let res = cx.par_map(vermas, |(_, z, _)| Ok(modrep::hom_space(z, z)?.len() == 1));
    if let Some(w) = try_err!(first_failure(
        vermas.iter().map(|v| v.0.clone()).zip(res).collect()
    )) {
        return Outcome::fail("a simple Verma is not of type M", cx.wj(&w));
    }
    let pairs: Vec<(usize, usize)> = (0..vermas.len())
        .flat_map(|i| (i + 1..vermas.len()).map(move |j| (i, j)))
        .collect();
    let res = cx.par_map(&pairs, |&(i, j)| {
        Ok(!modrep::is_isomorphic(
            &vermas[i].1,
            &vermas[j].1,
            IsoOptions::default(),
        )?)
    });
    if let Some((i, j)) = try_err!(first_failure(pairs.iter().copied().zip(res).collect())) {
        return Outcome::fail(
            "two Vermas are isomorphic",
            json!([cx.wj(&vermas[i].0), cx.wj(&vermas[j].0)]),
        );
    }
    let sum: u64 = vermas.iter().map(|v| (v.1.dim() as u64).pow(2)).sum();
    if sum != dim_u {
        return Outcome::fail(
            format!("sum of squares {sum} != dim U = {dim_u}"),
            json!(sum),
        );
    }
    let mut out = Outcome::pass(format!(
        "{} simple Vermas, sum of squared dimensions {sum}",
        vermas.len()
    ))
    .stat("vermas", vermas.len())
    .stat("sum_of_squares", sum)
    .stat("dim_u", dim_u)
    .stat("regular", true);
    if dim_u <= 100_000 {
        let count = pbw::pbw_basis(a, false).len() as u64;
        if count != dim_u {
            return Outcome::fail(format!("PBW basis has {count} elements"), json!(count));
        }
        out = out.stat("pbw_basis", count);
    }
    if dim_u <= 64 {
        let (rank, n) = regular_trace_form_rank(a, &cx.chi);
        if rank != n {
            return Outcome::fail(
                format!("trace form of the regular representation has rank {rank} < {n}"),
                json!(rank),
            );
        }
        out = out.stat("radical_dim", 0);
    }
    out
}

pub(super) fn regular_nilpotent(cx: &Ctx) -> Outcome {
    let a = &*cx.a;
    if !cx.chi.classify(a).regular_nilpotent {
        return Outcome::skip("needs a regular nilpotent p-character");
    }
    let rd = a.root_data();
    if rd.check_form(a.field()).is_err() {
        return Outcome::skip("p divides m - n");
    }
    let vermas = try_skip!(cx.vermas());
    let f = a.field();
    let mut typical = 0;
    for (w, _, simple) in vermas {
        if try_err!(rd.is_typical(f, w)) {
            typical += 1;
            if !simple {
                return Outcome::fail("typical weight with a reducible Verma", cx.wj(w));
            }
        }
    }
    Outcome::pass(format!("{typical} typical weights")).stat("typical", typical)
}

pub(super) fn block_count_surrogate(cx: &Ctx) -> Outcome {
    let a = &*cx.a;
    if !cx.chi.is_zero() {
        return Outcome::skip("only chi = 0 is covered");
    }
    let f = a.field();
    let rd = a.root_data();
    if f.p() as usize <= rd.coxeter_number() {
        return Outcome::skip(format!(
            "p = {} does not exceed the Coxeter number {}",
            f.p(),
            rd.coxeter_number()
        ));
    }
    let ws = try_skip!(cx.weights());
    let w_order = rd.weyl_group().len();
    let mut checked = 0;
    for w in ws {
        if !try_err!(rd.is_typical_regular(f, w)) {
            continue;
        }
        let orbit = try_err!(rd.weyl_orbit(f, w));
        let in_lambda = orbit
            .iter()
            .filter(|x| x.coords().iter().all(|&c| f.in_prime_field(c)))
            .count();
        if in_lambda != w_order {
            return Outcome::fail(
                format!("orbit meets Lambda_0 in {in_lambda} weights, |W| = {w_order}"),
                cx.wj(w),
            );
        }
        checked += 1;
    }
    if checked == 0 {
        return Outcome::skip("no typical p-regular weight selected");
    }
    Outcome::pass(format!("{checked} typical p-regular weights, orbits of size {w_order}; geometric side not computed"))
        .stat("weights", checked)
        .stat("weyl_order", w_order)
}

pub(super) fn graded_characters(cx: &Ctx) -> Outcome {
    let a = &*cx.a;
    if !cx.chi.is_zero() {
        return Outcome::skip("graded characters need chi = 0");
    }
    let f = a.field();
    let rd = a.root_data();
    let p = f.p();
    let amb = rd.ambient_dim();
    let mass = (p as u64).pow(rd.even_positive().len() as u32) << rd.odd_positive().len();
    let count = (p as usize).pow(amb as u32).min(32);
    let lams: Vec<Vec<i64>> = (0..count)
        .map(|c| {
            (0..amb)
                .map(|i| ((c / (p as usize).pow(i as u32)) % p as usize) as i64)
                .collect()
        })
        .collect();
    let res = cx.par_map(&lams, |lam| {
        for shifted in [false, true] {
            let full = modrep::graded_verma_character(rd, p, lam, shifted, false)?;
            let even = modrep::graded_verma_character(rd, p, lam, shifted, true)?;
            if full != modrep::times_odd_factor(rd, &even)
                || full != modrep::graded_verma_character_by_basis(a, lam, shifted, false)?
                || full.values().sum::<u64>() != mass
            {
                return Ok(false);
            }
        }
        let w = rd.restrict(f, &rd.root_to_field(f, lam));
        let z = modrep::baby_verma(&cx.a, &cx.chi, &w)?;
        let mut reduced = modrep::CharacterVector::new();
        for (x, n) in modrep::graded_verma_character(rd, p, lam, false, false)? {
            *reduced
                .entry(rd.restrict(f, &rd.root_to_field(f, &x)))
                .or_insert(0) += n as usize;
        }
        Ok(modrep::formal_character(&z)? == reduced)
    });
    match try_err!(first_failure(lams.iter().cloned().zip(res).collect())) {
        Some(l) => Outcome::fail("graded character identity fails", json!(l)),
        None => Outcome::pass(format!("{} integral weights, mass {mass}", lams.len()))
            .stat("weights", lams.len()),
    }
}

pub(super) fn record(id: super::CheckId, o: Outcome, elapsed_ms: Option<u64>) -> CheckRecord {
    CheckRecord {
        id,
        statement: id.statement(),
        status: o.status,
        detail: o.detail,
        counterexample: o.counterexample,
        stats: o.stats,
        elapsed_ms,
    }
}
