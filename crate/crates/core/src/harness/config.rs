use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::FieldCtx;
use crate::liesuper::{PChar, SuperAlgebra};
use crate::rootdata::{Family, Weight};

/// How χ is given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChiSpec {
    Zero,
    /// Values on the toral basis.
    Semisimple(Vec<String>),
    /// Values on `X_{−α}` for the simple even roots.
    Nilpotent(Vec<String>),
    RegularNilpotent,
    /// Values on every even basis element, in basis order.
    Explicit(Vec<String>),
}

fn split_args(s: &str) -> Vec<String> {
    s.split(',')
        .map(|x| x.trim().to_string())
        .filter(|x| !x.is_empty())
        .collect()
}

impl FromStr for ChiSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<ChiSpec> {
        let s = s.trim();
        let call = |name: &str| {
            s.strip_prefix(name)
                .and_then(|r| r.strip_prefix('('))
                .and_then(|r| r.strip_suffix(')'))
        };
        if s == "zero" || s == "0" {
            Ok(ChiSpec::Zero)
        } else if s == "regular-nilpotent" {
            Ok(ChiSpec::RegularNilpotent)
        } else if let Some(args) = call("semisimple") {
            Ok(ChiSpec::Semisimple(split_args(args)))
        } else if let Some(args) = call("nilpotent") {
            Ok(ChiSpec::Nilpotent(split_args(args)))
        } else if let Some(args) = call("explicit") {
            Ok(ChiSpec::Explicit(split_args(args)))
        } else {
            Err(Error::Config(format!("unrecognized p-character {s:?}")))
        }
    }
}

impl fmt::Display for ChiSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChiSpec::Zero => write!(f, "zero"),
            ChiSpec::RegularNilpotent => write!(f, "regular-nilpotent"),
            ChiSpec::Semisimple(v) => write!(f, "semisimple({})", v.join(",")),
            ChiSpec::Nilpotent(v) => write!(f, "nilpotent({})", v.join(",")),
            ChiSpec::Explicit(v) => write!(f, "explicit({})", v.join(",")),
        }
    }
}

impl Serialize for ChiSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl ChiSpec {
    pub fn build(&self, a: &SuperAlgebra) -> Result<PChar> {
        let f = a.field();
        let parse = |v: &[String]| v.iter().map(|x| f.parse(x)).collect::<Result<Vec<_>>>();
        match self {
            ChiSpec::Zero => Ok(PChar::zero(a)),
            ChiSpec::RegularNilpotent => Ok(PChar::regular_nilpotent(a)),
            ChiSpec::Semisimple(v) => PChar::semisimple(a, &parse(v)?),
            ChiSpec::Nilpotent(v) => PChar::nilpotent(a, &parse(v)?),
            ChiSpec::Explicit(v) => PChar::from_even_values(a, &parse(v)?),
        }
    }
}

/// Which weights of Λ_χ a scenario visits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LambdaSelection {
    Sweep,
    TypicalOnly,
    Single(Vec<String>),
}

impl FromStr for LambdaSelection {
    type Err = Error;

    fn from_str(s: &str) -> Result<LambdaSelection> {
        match s.trim() {
            "sweep" | "all" => Ok(LambdaSelection::Sweep),
            "typical" => Ok(LambdaSelection::TypicalOnly),
            other => {
                let v = split_args(other);
                if v.is_empty() {
                    return Err(Error::Config("empty weight".into()));
                }
                Ok(LambdaSelection::Single(v))
            }
        }
    }
}

impl fmt::Display for LambdaSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LambdaSelection::Sweep => write!(f, "sweep"),
            LambdaSelection::TypicalOnly => write!(f, "typical"),
            LambdaSelection::Single(v) => write!(f, "{}", v.join(",")),
        }
    }
}

impl Serialize for LambdaSelection {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Check identifiers, in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckId {
    KacCriterion,
    Equivalence,
    P1Formula,
    TCommute,
    SpinDown,
    TypeM,
    InvariantsSimple,
    G1Free,
    H1,
    DualTypical,
    VermaSimplicity,
    Centralizer,
    Semisimplicity,
    RegularNilpotent,
    BlockCountSurrogate,
    GradedCharacters,
}

impl CheckId {
    pub const ALL: [CheckId; 16] = [
        CheckId::KacCriterion,
        CheckId::Equivalence,
        CheckId::P1Formula,
        CheckId::TCommute,
        CheckId::SpinDown,
        CheckId::TypeM,
        CheckId::InvariantsSimple,
        CheckId::G1Free,
        CheckId::H1,
        CheckId::DualTypical,
        CheckId::VermaSimplicity,
        CheckId::Centralizer,
        CheckId::Semisimplicity,
        CheckId::RegularNilpotent,
        CheckId::BlockCountSurrogate,
        CheckId::GradedCharacters,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::KacCriterion => "kac-criterion",
            CheckId::Equivalence => "equivalence",
            CheckId::P1Formula => "p1-formula",
            CheckId::TCommute => "t-commute",
            CheckId::SpinDown => "spin-down",
            CheckId::TypeM => "type-m",
            CheckId::InvariantsSimple => "invariants-simple",
            CheckId::G1Free => "g1-free",
            CheckId::H1 => "h1",
            CheckId::DualTypical => "dual-typical",
            CheckId::VermaSimplicity => "verma-simplicity",
            CheckId::Centralizer => "centralizer",
            CheckId::Semisimplicity => "semisimplicity",
            CheckId::RegularNilpotent => "regular-nilpotent",
            CheckId::BlockCountSurrogate => "block-count-surrogate",
            CheckId::GradedCharacters => "graded-characters",
        }
    }

    /// What the check asserts.
    pub fn statement(self) -> &'static str {
        match self {
            CheckId::KacCriterion => "psi(L0) is simple iff the simple even module L0 is typical",
            CheckId::Equivalence => "phi and psi are mutually inverse on typical modules",
            CheckId::P1Formula => "T+T- reduces mod n+ to a fixed sign times the product of (lambda+rho|beta) over positive odd roots",
            CheckId::TCommute => "even elements scale T+ and T- and commute with T+T-",
            CheckId::SpinDown => "every nonzero submodule of psi(L0) contains T- L0",
            CheckId::TypeM => "a simple psi(L0) has one-dimensional endomorphisms",
            CheckId::InvariantsSimple => "the g1-invariants of a simple module form a simple even module",
            CheckId::G1Free => "typical simple modules are free over the exterior algebra of g1",
            CheckId::H1 => "H^1(g1, L) vanishes for typical simple L and for the exterior algebra of g1",
            CheckId::DualTypical => "the dual of a typical simple module is typical and simple",
            CheckId::VermaSimplicity => "for semisimple chi, Z(lambda) is simple iff P(lambda) != 0, and then of type M",
            CheckId::Centralizer => "semisimple chi is regular iff chi(H_alpha) != 0 for every positive root",
            CheckId::Semisimplicity => "for semisimple chi, U_chi is semisimple iff chi is regular",
            CheckId::RegularNilpotent => "for regular nilpotent chi, Z(lambda) is simple when lambda is typical",
            CheckId::BlockCountSurrogate => "at chi = 0 the dot orbit of a typical p-regular weight has |W| elements",
            CheckId::GradedCharacters => "graded character of Z equals that of Z0 times the odd factor",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<CheckId> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.as_str() == s.trim())
            .ok_or_else(|| Error::UnknownCheck(s.trim().to_string()))
    }
}

impl Serialize for CheckId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// `all` or a comma separated list of check ids.
pub fn parse_checks(s: &str) -> Result<Vec<CheckId>> {
    if s.trim() == "all" {
        return Ok(CheckId::ALL.to_vec());
    }
    let mut out = split_args(s)
        .iter()
        .map(|x| x.parse())
        .collect::<Result<Vec<CheckId>>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct ScenarioConfig {
    pub family: Family,
    pub m: usize,
    pub n: usize,
    pub p: u32,
    pub k: i64,
    pub chi: ChiSpec,
    pub lambda: LambdaSelection,
    pub checks: Vec<CheckId>,
    #[serde(skip)]
    pub out: Option<String>,
    pub cap: usize,
    #[serde(skip)]
    pub threads: usize,
    #[serde(skip)]
    pub timing: bool,
}

impl ScenarioConfig {
    pub fn new(family: Family, m: usize, n: usize, p: u32, k: i64) -> ScenarioConfig {
        ScenarioConfig {
            family,
            m,
            n,
            p,
            k,
            chi: ChiSpec::Zero,
            lambda: LambdaSelection::Sweep,
            checks: CheckId::ALL.to_vec(),
            out: None,
            cap: crate::modrep::DEFAULT_CAP,
            threads: 0,
            timing: false,
        }
    }

    pub fn with_chi(mut self, chi: ChiSpec) -> ScenarioConfig {
        self.chi = chi;
        self
    }

    pub fn with_checks(mut self, checks: &[CheckId]) -> ScenarioConfig {
        self.checks = checks.to_vec();
        self
    }

    /// Sets one key; the same keys are used by config files and the CLI.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let bad = |what: &str| Error::Config(format!("invalid {what}: {value:?}"));
        let value = value.trim();
        match key.trim() {
            "family" => self.family = value.parse()?,
            "m" => self.m = value.parse().map_err(|_| bad("m"))?,
            "n" => self.n = value.parse().map_err(|_| bad("n"))?,
            "p" => self.p = value.parse().map_err(|_| bad("p"))?,
            "k" => self.k = value.parse().map_err(|_| bad("k"))?,
            "chi" => self.chi = value.parse()?,
            "lambda" => self.lambda = value.parse()?,
            "checks" => self.checks = parse_checks(value)?,
            "out" => self.out = Some(value.to_string()),
            "cap" => self.cap = value.parse().map_err(|_| bad("cap"))?,
            "threads" => self.threads = value.parse().map_err(|_| bad("threads"))?,
            "timing" => self.timing = value.parse().map_err(|_| bad("timing"))?,
            other => return Err(Error::Config(format!("unknown key {other:?}"))),
        }
        Ok(())
    }

    /// Flat `key = value` text; `#` starts a comment.
    pub fn parse_kv(text: &str) -> Result<ScenarioConfig> {
        let mut cfg = ScenarioConfig::new(Family::Gl, 1, 1, 3, 1);
        for (no, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key = value", no + 1)))?;
            cfg.set(k, v)?;
        }
        Ok(cfg)
    }

    pub fn algebra(&self) -> Result<SuperAlgebra> {
        SuperAlgebra::new(self.family, self.m, self.n, FieldCtx::new(self.p, self.k)?)
    }

    pub fn label(&self) -> String {
        let name = match self.family {
            Family::Osp2 => format!("osp(2|{})", 2 * self.n),
            fam => format!("{fam}({}|{})", self.m, self.n),
        };
        format!("{name} p={} k={} chi={}", self.p, self.k, self.chi)
    }

    /// The weight named by `lambda`, if it names one.
    pub fn single_weight(&self, a: &SuperAlgebra) -> Result<Option<Weight>> {
        match &self.lambda {
            LambdaSelection::Single(v) => {
                let f = a.field();
                let coords = v.iter().map(|x| f.parse(x)).collect::<Result<Vec<_>>>()?;
                if coords.len() != a.rank() {
                    return Err(Error::Config(format!(
                        "lambda needs {} coordinates",
                        a.rank()
                    )));
                }
                Ok(Some(Weight::new(coords)))
            }
            _ => Ok(None),
        }
    }
}
