//! Batch sessions: the versioned input document, command dispatch and the
//! JSON reports emitted by the `equires` binary.
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "config": {"rows": 1, "field": "rational", "category": "oi"},
//!   "ambient": [{"d": 0, "shift": 0}],
//!   "generators": [{"width": 1, "terms": [{"coeff": [["1", [[1, 1, 2]]]], "summand": 1, "pi": []}]}]
//! }
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::free::{restrict_fi_to_oi, Category, FreeElement, FreeElementDoc, FreePresentation, ModuleOrder, Summand};
use crate::groebner::{buchberger, is_groebner, GroebnerLog, GroebnerSettings, DEFAULT_MAX_ADJOINED};
use crate::maps::MapDoc;
use crate::poly::Polynomial;
use crate::resolution::{
    prune, resolve_fi, resolve_inc, resolve_oi, resolve_sym, ColimitElement, Resolution, ResolutionCategory, ResolveOptions,
};
use crate::widthwise::{specialize, WidthComplex};

pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable overriding `config.max_adjoined`.
pub const MAX_GENERATORS_ENV: &str = "EQUIRES_MAX_GENERATORS";

/// Module order on the ambient module.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderOption {
    /// Position-over-term with graded-lex on monomials.
    #[default]
    Pot,
}

fn default_max_adjoined() -> usize {
    DEFAULT_MAX_ADJOINED
}

fn default_max_width() -> usize {
    6
}

fn default_max_degree() -> i64 {
    8
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SessionConfig {
    /// Number `c` of variable rows.
    pub rows: usize,
    pub field: Field,
    pub category: ResolutionCategory,
    #[serde(default)]
    pub order: OrderOption,
    /// Cap on generators adjoined by one Buchberger run.
    #[serde(default = "default_max_adjoined")]
    pub max_adjoined: usize,
    /// Largest width accepted by `specialize`, `minimize` and `verify`.
    #[serde(default = "default_max_width")]
    pub max_width: usize,
    /// Default degree bound of `verify`.
    #[serde(default = "default_max_degree")]
    pub max_degree: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AmbientSummandDoc {
    pub d: usize,
    #[serde(default)]
    pub shift: i64,
}

fn default_ambient() -> Vec<AmbientSummandDoc> {
    vec![AmbientSummandDoc { d: 0, shift: 0 }]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub schema_version: u32,
    pub config: SessionConfig,
    #[serde(default = "default_ambient")]
    pub ambient: Vec<AmbientSummandDoc>,
    /// For `inc` and `sym` the width may be omitted; it defaults to the norm.
    pub generators: Vec<FreeElementDoc>,
}

/// Generators after validation against the ambient presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generators {
    Free(Vec<FreeElement>),
    Colimit(Vec<ColimitElement>),
}

impl InputDocument {
    pub fn ambient_presentation(&self) -> FreePresentation {
        FreePresentation::new(
            self.config.category.base(),
            self.config.rows,
            self.ambient.iter().map(|s| Summand::new(s.d, -s.shift)).collect(),
        )
    }

    /// Enforces every invariant of the document and parses its generators.
    pub fn validate(&self) -> Result<Generators> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::schema(
                "schema_version",
                format!("unsupported version {} (expected {SCHEMA_VERSION})", self.schema_version),
            ));
        }
        let c = &self.config;
        c.field.checked()?;
        if c.rows == 0 {
            return Err(Error::Config("rows must be at least 1".into()));
        }
        if c.max_adjoined == 0 || c.max_width == 0 || c.max_degree < 0 {
            return Err(Error::Config("caps must be positive".into()));
        }
        if self.ambient.is_empty() {
            return Err(Error::schema("ambient", "the ambient module needs at least one summand"));
        }
        let pres = self.ambient_presentation();
        match c.category {
            ResolutionCategory::Oi | ResolutionCategory::Fi => self
                .generators
                .iter()
                .enumerate()
                .map(|(k, g)| FreeElement::from_doc(c.field, &pres, g, None).map_err(|e| at(k, e)))
                .collect::<Result<Vec<_>>>()
                .map(Generators::Free),
            ResolutionCategory::Inc | ResolutionCategory::Sym => self
                .generators
                .iter()
                .enumerate()
                .map(|(k, g)| self.colimit(&pres, g).map_err(|e| at(k, e)))
                .collect::<Result<Vec<_>>>()
                .map(Generators::Colimit),
        }
    }

    fn colimit(&self, pres: &FreePresentation, g: &FreeElementDoc) -> Result<ColimitElement> {
        let field = self.config.field;
        let mut terms = Vec::with_capacity(g.terms.len());
        for (k, t) in g.terms.iter().enumerate() {
            if t.summand == 0 || t.summand > pres.rank() {
                return Err(Error::schema(
                    format!("terms[{k}].summand"),
                    format!("summand {} out of range 1..={}", t.summand, pres.rank()),
                ));
            }
            terms.push((Polynomial::from_doc(field, &t.coeff)?, t.summand - 1, t.pi.clone()));
        }
        let x = ColimitElement::new(field, terms);
        if let Some(w) = g.width {
            if w < x.norm() {
                return Err(Error::schema("width", format!("width {w} is below the norm {}", x.norm())));
            }
        }
        pres.validate(&x.lift())?;
        Ok(x)
    }
}

fn at(k: usize, e: Error) -> Error {
    match e {
        Error::Schema { path, message } => Error::schema(format!("generators[{k}].{path}"), message),
        Error::Parse(m) => Error::schema(format!("generators[{k}]"), m),
        other => other,
    }
}

/// Parses and validates an input document.
pub fn parse_input_str(text: &str) -> Result<(InputDocument, Generators)> {
    let doc: InputDocument = serde_json::from_str(text).map_err(|e| {
        let place = format!("line {} column {}", e.line(), e.column());
        match e.classify() {
            serde_json::error::Category::Data => Error::schema(place, e.to_string()),
            _ => Error::Parse(format!("{place}: {e}")),
        }
    })?;
    let gens = doc.validate()?;
    Ok((doc, gens))
}

pub fn parse_input(path: &std::path::Path) -> Result<(InputDocument, Generators)> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_input_str(&text)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Gb,
    Resolve,
    Specialize,
    Minimize,
    Verify,
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "gb" => Command::Gb,
            "resolve" => Command::Resolve,
            "specialize" => Command::Specialize,
            "minimize" => Command::Minimize,
            "verify" => Command::Verify,
            _ => return Err(Error::Config(format!("unknown command {s:?}"))),
        })
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Command::Gb => "gb",
            Command::Resolve => "resolve",
            Command::Specialize => "specialize",
            Command::Minimize => "minimize",
            Command::Verify => "verify",
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunFlags {
    pub steps: Option<usize>,
    pub width: Option<usize>,
    pub max_degree: Option<i64>,
    pub prune: bool,
    pub equivariant: bool,
}

/// Default number of resolution steps.
pub const DEFAULT_STEPS: usize = 2;

/// A finished command: the report and whether its checks passed.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub report: Value,
    /// False only when `verify` found nonzero homology.
    pub verified: bool,
}

impl Outcome {
    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.report).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// Process exit status of an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Schema { .. } => 2,
        Error::Config(_)
        | Error::FieldMismatch(..)
        | Error::Width(_)
        | Error::Category(_)
        | Error::Grading(_)
        | Error::ModularCharacteristic { .. } => 3,
        Error::ResourceCap(_) => 4,
        Error::ZeroElement | Error::Internal(_) => 1,
    }
}

/// Exit status of a failed verification.
pub const EXIT_VERIFICATION_FAILED: i32 = 5;

/// Structured diagnostic for an error.
pub fn diagnostic(e: &Error) -> Value {
    let kind = match e {
        Error::Parse(_) => "parse",
        Error::Schema { .. } => "schema",
        Error::ResourceCap(_) => "resource_cap",
        Error::ZeroElement | Error::Internal(_) => "internal",
        _ => "config",
    };
    let mut v = json!({"error": kind, "message": e.to_string(), "exit_code": exit_code(e)});
    if let Error::Schema { path, .. } = e {
        v["path"] = json!(path);
    }
    v
}

/// Applies the resource-cap override, if any.
pub fn apply_env_override(config: &mut SessionConfig, value: Option<&str>) -> Result<()> {
    if let Some(v) = value {
        let cap: usize = v
            .trim()
            .parse()
            .map_err(|_| Error::Config(format!("{MAX_GENERATORS_ENV}={v:?} is not a positive integer")))?;
        if cap == 0 {
            return Err(Error::Config(format!("{MAX_GENERATORS_ENV} must be positive")));
        }
        config.max_adjoined = cap;
    }
    Ok(())
}

/// Runs one command on a validated document.
pub fn run(command: Command, doc: &InputDocument, gens: &Generators, flags: &RunFlags) -> Result<Outcome> {
    let header = json!({
        "schema_version": SCHEMA_VERSION,
        "command": command.to_string(),
        "config": doc.config,
        "ambient": doc.ambient,
        "flags": flags,
    });
    let (body, verified) = match command {
        Command::Gb => (gb(doc, gens)?, true),
        Command::Resolve => {
            let res = resolution(doc, gens, flags)?;
            (
                json!({"summand_tables": res.summand_tables(), "resolution": res.to_doc()}),
                true,
            )
        }
        Command::Specialize => {
            let w = widthwise(doc, gens, flags)?;
            (json!({"complex": w.to_doc()}), true)
        }
        Command::Minimize => {
            let w = widthwise(doc, gens, flags)?;
            let m = if flags.equivariant { w.equivariant_minimize()? } else { w.minimize()? };
            (json!({"ranks": m.ranks(), "complex": m.to_doc()}), true)
        }
        Command::Verify => {
            let w = widthwise(doc, gens, flags)?;
            let d = flags.max_degree.unwrap_or(doc.config.max_degree);
            let report = w.verify_exactness(d)?;
            let ok = report.is_exact() && w.composition_is_zero()?;
            (json!({"exact": ok, "ranks": w.ranks(), "homology": report}), ok)
        }
    };
    let mut report = header;
    for (k, v) in body.as_object().expect("object body") {
        report[k] = v.clone();
    }
    Ok(Outcome { report, verified })
}

fn settings(doc: &InputDocument) -> GroebnerSettings {
    GroebnerSettings {
        max_adjoined: doc.config.max_adjoined,
    }
}

/// Resolution requested by the flags, pruned on demand.
pub fn resolution(doc: &InputDocument, gens: &Generators, flags: &RunFlags) -> Result<Resolution> {
    let ambient = doc.ambient_presentation();
    let opts = ResolveOptions {
        groebner: settings(doc),
        ..ResolveOptions::default()
    };
    let p = flags.steps.unwrap_or(DEFAULT_STEPS);
    let res = match (doc.config.category, gens) {
        (ResolutionCategory::Oi, Generators::Free(g)) => resolve_oi(&ambient, g, p, &opts)?,
        (ResolutionCategory::Fi, Generators::Free(g)) => resolve_fi(&ambient, g, p, &opts)?,
        (ResolutionCategory::Inc, Generators::Colimit(g)) => resolve_inc(&ambient, g, p, &opts)?,
        (ResolutionCategory::Sym, Generators::Colimit(g)) => resolve_sym(&ambient, g, p, &opts)?,
        _ => return Err(Error::Category("generators do not match the configured category".into())),
    };
    res.verify()?;
    if flags.prune {
        prune(&res)
    } else {
        Ok(res)
    }
}

fn widthwise(doc: &InputDocument, gens: &Generators, flags: &RunFlags) -> Result<WidthComplex> {
    let n = flags.width.ok_or_else(|| Error::Config("this command needs --width".into()))?;
    if n > doc.config.max_width {
        return Err(Error::Config(format!("width {n} exceeds max_width {}", doc.config.max_width)));
    }
    specialize(&resolution(doc, gens, flags)?, n)
}

fn gb(doc: &InputDocument, gens: &Generators) -> Result<Value> {
    let ambient = doc.ambient_presentation();
    let elements: Vec<FreeElement> = match gens {
        Generators::Free(g) => g.clone(),
        Generators::Colimit(g) => g.iter().map(ColimitElement::lift).collect(),
    };
    // FI generators are completed on the OI restriction
    let restricted = ambient.category == Category::Fi;
    let (pres, elements) = if restricted {
        let (oi, dict) = restrict_fi_to_oi(&ambient)?;
        let converted = elements.iter().map(|x| dict.to_oi(x)).collect::<Result<Vec<_>>>()?;
        (oi, converted)
    } else {
        (ambient, elements)
    };
    let order = ModuleOrder::pot(pres.rows);
    let log = buchberger(&elements, &order, &settings(doc))?;
    let check = is_groebner(&log.basis, &order)?;
    if !check.is_groebner() {
        return Err(Error::Internal("completed basis fails the Buchberger criterion".into()));
    }
    Ok(json!({
        "restricted_to_oi": restricted,
        "oi_ambient": pres.summands.iter().map(|s| AmbientSummandDoc { d: s.arity, shift: s.shift() }).collect::<Vec<_>>(),
        "log": log_doc(&log),
    }))
}

fn log_doc(log: &GroebnerLog) -> Value {
    json!({
        "initial": log.initial,
        "adjoined": log.adjoined_count(),
        "basis": log.basis.iter().map(FreeElement::to_doc).collect::<Vec<_>>(),
        "pairs": log.pairs.iter().map(|p| json!({
            "i": p.i + 1,
            "j": p.j + 1,
            "width": p.width,
            "sigma": MapDoc::from(&p.sigma),
            "tau": MapDoc::from(&p.tau),
            "m_ij": p.m_ij.to_doc(),
            "m_ji": p.m_ji.to_doc(),
            "quotients": p.division.quotients.iter().map(|q| json!({
                "coeff": q.coeff.to_doc(),
                "generator": q.generator + 1,
                "rho": MapDoc::from(&q.rho),
            })).collect::<Vec<_>>(),
            "remainder": p.division.remainder.to_doc(),
            "adjoined": p.adjoined.map(|a| a + 1),
        })).collect::<Vec<_>>(),
    })
}
