//! Scenario runner: checks, reports and tables.

mod checks;
mod config;

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::error::Result;
use crate::modrep;
use crate::rootdata::{Family, PolyKind};

pub use checks::regular_trace_form_rank;
pub use config::{parse_checks, CheckId, ChiSpec, LambdaSelection, ScenarioConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub id: CheckId,
    pub statement: &'static str,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    pub stats: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: &'static str,
    pub scenario: String,
    pub config: ScenarioConfig,
    pub sigma: Option<i64>,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn get(&self, id: CheckId) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Runs the configured checks in id order.
pub fn run(cfg: &ScenarioConfig) -> Result<Report> {
    let cx = checks::Ctx::new(cfg)?;
    let mut ids = cfg.checks.clone();
    ids.sort();
    ids.dedup();
    let mut out = Vec::new();
    for id in ids {
        let start = Instant::now();
        let o = match id {
            CheckId::KacCriterion => checks::kac_criterion(&cx),
            CheckId::Equivalence => checks::equivalence(&cx),
            CheckId::P1Formula => checks::p1_formula(&cx),
            CheckId::TCommute => checks::t_commute(&cx),
            CheckId::SpinDown => checks::spin_down(&cx),
            CheckId::TypeM => checks::type_m(&cx),
            CheckId::InvariantsSimple => checks::invariants_simple(&cx),
            CheckId::G1Free => checks::g1_free(&cx),
            CheckId::H1 => checks::h1(&cx),
            CheckId::DualTypical => checks::dual_typical(&cx),
            CheckId::VermaSimplicity => checks::verma_simplicity(&cx),
            CheckId::Centralizer => checks::centralizer(&cx),
            CheckId::Semisimplicity => checks::semisimplicity(&cx),
            CheckId::RegularNilpotent => checks::regular_nilpotent(&cx),
            CheckId::BlockCountSurrogate => checks::block_count_surrogate(&cx),
            CheckId::GradedCharacters => checks::graded_characters(&cx),
        };
        let ms = cfg.timing.then(|| start.elapsed().as_millis() as u64);
        out.push(checks::record(id, o, ms));
    }
    Ok(Report {
        version: env!("CARGO_PKG_VERSION"),
        scenario: cfg.label(),
        config: cfg.clone(),
        sigma: cx.sigma.get().copied().flatten(),
        checks: out,
    })
}

/// Per-weight table: the three polynomials, typicality and the dimension of
/// the simple head of `Z_χ(λ)`.
pub fn typicality_table(cfg: &ScenarioConfig) -> Result<String> {
    let a = std::sync::Arc::new(cfg.algebra()?);
    let chi = cfg.chi.build(&a)?;
    let f = a.field();
    let rd = a.root_data();
    let ws = match cfg.single_weight(&a)? {
        Some(w) => vec![w],
        None => rd.lambda_chi(f, &chi.toral_values(&a))?,
    };
    let mut out = String::from("lambda\tP0\tP1\tP\ttypical\thead_dim\n");
    for w in ws {
        let typical = rd.is_typical(f, &w)?;
        if cfg.lambda == LambdaSelection::TypicalOnly && !typical {
            continue;
        }
        let head = modrep::head(&modrep::baby_verma(&a, &chi, &w)?, cfg.cap)?;
        let p = |k| rd.eval_p(f, &w, k).map(|x| f.format(x));
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\n",
            w.format(f),
            p(PolyKind::P0)?,
            p(PolyKind::P1)?,
            p(PolyKind::P)?,
            typical,
            head.dim()
        ));
    }
    Ok(out)
}

/// Scenarios run by `superverma audit`.
pub fn default_audit() -> Vec<ScenarioConfig> {
    let semi = |v: &[&str]| ChiSpec::Semisimple(v.iter().map(|x| x.to_string()).collect());
    vec![
        ScenarioConfig::new(Family::Gl, 1, 1, 3, 1),
        ScenarioConfig::new(Family::Gl, 2, 1, 3, 1),
        ScenarioConfig::new(Family::Osp2, 0, 1, 3, 1),
        ScenarioConfig::new(Family::Gl, 1, 1, 5, 1),
        ScenarioConfig::new(Family::Gl, 1, 1, 3, 3).with_chi(semi(&["1", "1"])),
        ScenarioConfig::new(Family::Gl, 1, 1, 3, 3).with_chi(semi(&["1", "2"])),
        ScenarioConfig::new(Family::Gl, 2, 1, 3, 3).with_chi(semi(&["1", "0", "1"])),
        ScenarioConfig::new(Family::Gl, 2, 1, 3, 3).with_chi(semi(&["1", "1", "1"])),
        ScenarioConfig::new(Family::Gl, 2, 1, 3, 1).with_chi(ChiSpec::RegularNilpotent),
    ]
}

/// Opt-in scenarios; Vermas of dimension 144, minutes rather than seconds.
pub fn extended_audit() -> Vec<ScenarioConfig> {
    vec![ScenarioConfig::new(Family::Gl, 2, 2, 3, 1)]
}
