use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use superverma::harness::{self, ScenarioConfig};
use superverma::modrep;

#[derive(Parser)]
#[command(
    name = "superverma",
    version,
    about = "Baby Verma modules of type I Lie superalgebras over finite fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run named checks on one scenario and print a JSON report
    Check(Scenario),
    /// Typicality table over Lambda_chi as TSV
    Table(Scenario),
    /// Character of a baby Verma module as TSV
    Char {
        #[command(flatten)]
        scenario: Scenario,
        /// Graded character; lambda is then an integral vector in ambient coordinates
        #[arg(long)]
        graded: bool,
        /// With --graded, shift lambda by -(p-1)*2rho0
        #[arg(long, requires = "graded")]
        shifted: bool,
        /// With --graded, the even Verma only
        #[arg(long, requires = "graded")]
        even: bool,
    },
    /// Export the action matrices of Z_chi(lambda) as JSON
    Verma {
        #[command(flatten)]
        scenario: Scenario,
        /// Export the even Verma Z0 instead
        #[arg(long)]
        even: bool,
    },
    /// Run the built-in scenario list and print a JSON array of reports
    Audit {
        /// Also run gl(2|2) at p = 3
        #[arg(long)]
        extended: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        threads: usize,
        /// Record per-check wall time (makes reports run dependent)
        #[arg(long)]
        timing: bool,
    },
}

/// Scenario keys; each overrides the value read from `--config`.
#[derive(Args)]
struct Scenario {
    /// Flat `key = value` file with the same keys
    #[arg(long)]
    config: Option<PathBuf>,
    /// gl, sl or osp (osp(2|2n) uses n)
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    m: Option<String>,
    #[arg(long)]
    n: Option<String>,
    #[arg(long)]
    p: Option<String>,
    #[arg(long)]
    k: Option<String>,
    /// zero | semisimple(a,b,..) | nilpotent(..) | regular-nilpotent | explicit(..)
    #[arg(long)]
    chi: Option<String>,
    /// sweep | typical | comma separated coordinates
    #[arg(long)]
    lambda: Option<String>,
    /// all or a comma separated list of check ids
    #[arg(long)]
    checks: Option<String>,
    #[arg(long)]
    out: Option<String>,
    /// Largest seed space whose lines are enumerated
    #[arg(long)]
    cap: Option<String>,
    #[arg(long)]
    threads: Option<String>,
    #[arg(long)]
    timing: bool,
}

impl Scenario {
    fn build(&self) -> anyhow::Result<ScenarioConfig> {
        let mut cfg = match &self.config {
            Some(path) => {
                let text = fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                ScenarioConfig::parse_kv(&text)?
            }
            None => ScenarioConfig::parse_kv("")?,
        };
        let keys = [
            ("family", &self.family),
            ("m", &self.m),
            ("n", &self.n),
            ("p", &self.p),
            ("k", &self.k),
            ("chi", &self.chi),
            ("lambda", &self.lambda),
            ("checks", &self.checks),
            ("out", &self.out),
            ("cap", &self.cap),
            ("threads", &self.threads),
        ];
        for (key, value) in keys {
            if let Some(v) = value {
                cfg.set(key, v)?;
            }
        }
        if self.timing {
            cfg.timing = true;
        }
        Ok(cfg)
    }
}

fn emit(out: Option<&str>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {path}")),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn with_newline(mut s: String) -> String {
    s.push('\n');
    s
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Check(sc) => {
            let cfg = sc.build()?;
            let report = harness::run(&cfg)?;
            emit(cfg.out.as_deref(), &with_newline(report.to_json()))?;
            Ok(ExitCode::from(report.exit_code() as u8))
        }
        Command::Table(sc) => {
            let cfg = sc.build()?;
            emit(cfg.out.as_deref(), &harness::typicality_table(&cfg)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Char {
            scenario,
            graded,
            shifted,
            even,
        } => {
            let cfg = scenario.build()?;
            let a = Arc::new(cfg.algebra()?);
            let text = if graded {
                let harness::LambdaSelection::Single(coords) = &cfg.lambda else {
                    bail!("--graded needs --lambda with integral coordinates");
                };
                let lam = coords
                    .iter()
                    .map(|x| {
                        x.parse::<i64>()
                            .with_context(|| format!("{x:?} is not an integer"))
                    })
                    .collect::<anyhow::Result<Vec<i64>>>()?;
                let ch = modrep::graded_verma_character(a.root_data(), cfg.p, &lam, shifted, even)?;
                modrep::graded_character_tsv(&ch)
            } else {
                let Some(w) = cfg.single_weight(&a)? else {
                    bail!("char needs --lambda");
                };
                let z = modrep::baby_verma(&a, &cfg.chi.build(&a)?, &w)?;
                modrep::character_tsv(&a, &modrep::formal_character(&z)?)
            };
            emit(cfg.out.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verma { scenario, even } => {
            let cfg = scenario.build()?;
            let a = Arc::new(cfg.algebra()?);
            let Some(w) = cfg.single_weight(&a)? else {
                bail!("verma needs --lambda");
            };
            let chi = cfg.chi.build(&a)?;
            let z = if even {
                modrep::baby_verma_even(&a, &chi, &w)?
            } else {
                modrep::baby_verma(&a, &chi, &w)?
            };
            emit(
                cfg.out.as_deref(),
                &with_newline(serde_json::to_string_pretty(&z.to_json())?),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Audit {
            extended,
            out,
            threads,
            timing,
        } => {
            let mut scenarios = harness::default_audit();
            if extended {
                scenarios.extend(harness::extended_audit());
            }
            let mut reports = Vec::new();
            for mut cfg in scenarios {
                cfg.threads = threads;
                cfg.timing = timing;
                let r = harness::run(&cfg)?;
                eprintln!(
                    "{:<40} {}",
                    r.scenario,
                    if r.passed() { "pass" } else { "FAIL" }
                );
                reports.push(r);
            }
            let failed = reports.iter().any(|r| !r.passed());
            let text = with_newline(serde_json::to_string_pretty(&reports)?);
            emit(out.as_ref().and_then(|p| p.to_str()), &text)?;
            Ok(if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
