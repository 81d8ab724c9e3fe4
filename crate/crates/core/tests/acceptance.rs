//! One line per acceptance criterion, each with a pinned wall-clock budget.

use std::time::{Duration, Instant};

use superverma::harness::{self, CheckId, ChiSpec, Report, ScenarioConfig, Status};
use superverma::pbw;
use superverma::rootdata::Family;

type Outcome = Result<String, String>;

/// Name, body and budget in seconds.
type Criterion = (&'static str, fn() -> Outcome, u64);

fn sweeps() -> Vec<ScenarioConfig> {
    vec![
        ScenarioConfig::new(Family::Gl, 1, 1, 3, 1),
        ScenarioConfig::new(Family::Gl, 2, 1, 3, 1),
        ScenarioConfig::new(Family::Osp2, 0, 1, 3, 1),
    ]
}

fn semi(v: &[&str]) -> ChiSpec {
    ChiSpec::Semisimple(v.iter().map(|x| x.to_string()).collect())
}

fn run(cfg: ScenarioConfig, ids: &[CheckId]) -> Result<Report, String> {
    let label = cfg.label();
    harness::run(&cfg.with_checks(ids)).map_err(|e| format!("{label}: {e}"))
}

/// Every listed check passed; returns the records in order.
fn passed<'r>(r: &'r Report, ids: &[CheckId]) -> Result<Vec<&'r harness::CheckRecord>, String> {
    ids.iter()
        .map(|&id| {
            let c = r.get(id).ok_or(format!("{}: {id} missing", r.scenario))?;
            match c.status {
                Status::Pass => Ok(c),
                _ => Err(format!("{}: {id} {:?}: {}", r.scenario, c.status, c.detail)),
            }
        })
        .collect()
}

fn c1_dimension_formula() -> Outcome {
    let mut seen = Vec::new();
    for (m, want) in [(1, 36), (2, 3888)] {
        let a = ScenarioConfig::new(Family::Gl, m, 1, 3, 1)
            .algebra()
            .map_err(|e| e.to_string())?;
        let formula = 3usize.pow(a.even_indices().len() as u32) << a.odd_indices().len();
        let count = pbw::pbw_basis(&a, false).len();
        if count != want || formula != want {
            return Err(format!(
                "gl({m}|1): {count} monomials, formula {formula}, expected {want}"
            ));
        }
        seen.push(count.to_string());
    }
    Ok(format!("PBW bases of size {}", seen.join(" and ")))
}

fn c2_p1_formula() -> Outcome {
    let mut signs = Vec::new();
    for cfg in sweeps() {
        let r = run(cfg, &[CheckId::P1Formula])?;
        passed(&r, &[CheckId::P1Formula])?;
        let s = r.sigma.ok_or(format!("{}: no sign recorded", r.scenario))?;
        signs.push(format!(
            "{} sigma={s:+}",
            r.scenario.split(' ').next().unwrap()
        ));
    }
    Ok(signs.join(", "))
}

fn c3_kac_sweep() -> Outcome {
    let mut total = 0;
    for cfg in sweeps() {
        let r = run(cfg, &[CheckId::KacCriterion])?;
        total += passed(&r, &[CheckId::KacCriterion])?[0].stats["modules"]
            .as_u64()
            .unwrap();
    }
    Ok(format!("{total} simple even modules, no discrepancy"))
}

fn c4_equivalence() -> Outcome {
    let mut simples = 0;
    for cfg in sweeps() {
        let r = run(cfg, &[CheckId::Equivalence])?;
        simples += passed(&r, &[CheckId::Equivalence])?[0].stats["typical_simples"]
            .as_u64()
            .unwrap();
    }
    let r = run(
        ScenarioConfig::new(Family::Gl, 2, 1, 3, 3).with_chi(semi(&["1", "1", "1"])),
        &[CheckId::Equivalence],
    )?;
    let c = passed(&r, &[CheckId::Equivalence])?[0];
    let reducible = c.stats["reducible_typical_vermas"].as_u64().unwrap();
    if reducible == 0 {
        return Err("no reducible typical Verma at chi = (1,1|1)".into());
    }
    Ok(format!("{simples} typical simples in the sweeps; {reducible} reducible typical Vermas keep their factors"))
}

fn c5_semisimplicity() -> Outcome {
    let ids = [
        CheckId::VermaSimplicity,
        CheckId::Semisimplicity,
        CheckId::Centralizer,
    ];
    let r = run(
        ScenarioConfig::new(Family::Gl, 2, 1, 3, 3).with_chi(semi(&["1", "0", "1"])),
        &ids,
    )?;
    let s = passed(&r, &ids)?[1];
    if s.stats["regular"] != true || s.stats["vermas"] != 27 || s.stats["sum_of_squares"] != 3888 {
        return Err(format!("regular case: {:?}", s.stats));
    }
    let r = run(
        ScenarioConfig::new(Family::Gl, 2, 1, 3, 3).with_chi(semi(&["1", "1", "1"])),
        &ids,
    )?;
    let w = passed(&r, &ids)?[1];
    if w.stats["regular"] != false || !w.stats.contains_key("witness") {
        return Err(format!("non-regular case: {:?}", w.stats));
    }
    let r = run(
        ScenarioConfig::new(Family::Gl, 1, 1, 3, 3).with_chi(semi(&["1", "1"])),
        &ids,
    )?;
    let g = passed(&r, &ids)?[1];
    if g.stats.get("radical_dim") != Some(&0.into()) || g.stats["dim_u"] != 36 {
        return Err(format!("gl(1|1): {:?}", g.stats));
    }
    Ok(format!(
        "27 simple Vermas, 27*144 = 3888, witness {} at (1,1|1), gl(1|1) radical 0",
        w.stats["witness"]
    ))
}

fn c6_cohomology() -> Outcome {
    let ids = [CheckId::G1Free, CheckId::H1, CheckId::DualTypical];
    let mut n = 0;
    for cfg in sweeps() {
        let r = run(cfg, &ids)?;
        passed(&r, &ids)?;
        n += r
            .get(CheckId::G1Free)
            .unwrap()
            .detail
            .split(' ')
            .next()
            .unwrap()
            .parse::<usize>()
            .unwrap();
    }
    Ok(format!(
        "{n} typical simples: H1 = 0, free over the exterior algebra, duals typical"
    ))
}

fn c7_regular_nilpotent() -> Outcome {
    let r = run(
        ScenarioConfig::new(Family::Gl, 2, 1, 3, 1).with_chi(ChiSpec::RegularNilpotent),
        &[CheckId::RegularNilpotent],
    )?;
    let c = passed(&r, &[CheckId::RegularNilpotent])?[0];
    Ok(format!(
        "{} typical weights, all Vermas simple",
        c.stats["typical"]
    ))
}

fn c8_orbits_and_graded() -> Outcome {
    let ids = [CheckId::BlockCountSurrogate, CheckId::GradedCharacters];
    let mut out = Vec::new();
    for cfg in [
        ScenarioConfig::new(Family::Gl, 2, 1, 3, 1),
        ScenarioConfig::new(Family::Osp2, 0, 1, 3, 1),
    ] {
        let r = run(cfg, &ids)?;
        let c = passed(&r, &ids)?;
        let w = c[0].stats["weyl_order"].as_u64().unwrap();
        if w != 2 {
            return Err(format!("{}: |W| = {w}", r.scenario));
        }
        out.push(format!(
            "{} orbit size {w}",
            r.scenario.split(' ').next().unwrap()
        ));
    }
    Ok(format!("{}; graded identity holds", out.join(", ")))
}

fn c9_determinism() -> Outcome {
    let once = || -> Result<String, String> {
        let mut s = String::new();
        for cfg in harness::default_audit() {
            s += &harness::run(&cfg).map_err(|e| e.to_string())?.to_json();
        }
        Ok(s)
    };
    let (a, b) = (once()?, once()?);
    if a != b {
        return Err("reports differ between runs".into());
    }
    Ok(format!("{} bytes, identical", a.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("dimension formula", c1_dimension_formula, 1),
        ("T+T- sign", c2_p1_formula, 10),
        ("Kac criterion sweep", c3_kac_sweep, 60),
        ("phi/psi equivalence", c4_equivalence, 120),
        ("semisimplicity", c5_semisimplicity, 300),
        ("H1, freeness, duals", c6_cohomology, 60),
        ("regular nilpotent", c7_regular_nilpotent, 60),
        ("orbit count, graded characters", c8_orbits_and_graded, 5),
        ("determinism", c9_determinism, 300),
    ];
    let mut failed = 0;
    for (i, (name, f, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let res = f();
        let took = start.elapsed();
        let res = match res {
            Ok(d) if took > Duration::from_secs(budget) => Err(format!("{d}; over budget")),
            r => r,
        };
        let (tag, detail) = match &res {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!(
            "{tag} {} {name}: {detail} [{:.3}s / {budget}s]",
            i + 1,
            took.as_secs_f64()
        );
        failed += res.is_err() as usize;
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
