//! Command-line surface for the workspace: argument types, command
//! implementations and the reproduction suite.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use cellular_engine::{
    assign_degrees, certify_basis_rank, export, simple_dimensions, tensor_power_datum, verify_cell_axioms, BasisChoice,
    CellDatum, CellError,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use scalar_arith::text::to_text;
use scalar_arith::ScalarContext;
use serde_json::{json, Value};
use temperley_lieb::{
    generalized_jw, graham_lehrer_basis, jones_wenzl, pullback_cell_datum, SchurWeyl, TLElement, Tangle, TlError,
};
use thiserror::Error;
use tilting_combinatorics::{decompose_tilting, tilting_tensor_character, TiltingMultiset};
use uq_modules::forms::{is_invariant_form, tensor_form};
use uq_modules::{decompose_module, natural_module, tensor, tensor_power, tensor_power_form, TiltingCache, UqError};

pub mod golden;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    /// The computation finished but a check failed; the output is still printed.
    #[error("verification failed: {reason}")]
    Verification { output: String, reason: String },
    #[error(transparent)]
    Cell(#[from] CellError),
    #[error(transparent)]
    Uq(#[from] UqError),
    #[error(transparent)]
    Tl(#[from] TlError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Verification { .. } => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "tilting-cells",
    version,
    about = "Tilting modules, cellular bases and Temperley-Lieb algebras for quantum sl2"
)]
pub struct Cli {
    #[command(flatten)]
    pub context: ContextArgs,
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
    /// Directory for persisted tilting models.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Default, Args)]
pub struct ContextArgs {
    /// Order of the root of unity q (odd, at least 3).
    #[arg(long, global = true, conflicts_with_all = ["generic", "q"])]
    pub l: Option<u32>,
    /// Work over Q(v) (the default).
    #[arg(long, global = true)]
    pub generic: bool,
    /// Specialize q to a nonzero rational that is not a root of unity.
    #[arg(long, global = true, conflicts_with = "generic")]
    pub q: Option<String>,
}

impl ContextArgs {
    pub fn context(&self) -> Result<ScalarContext, CliError> {
        if let Some(l) = self.l {
            if l < 3 || l.is_multiple_of(2) {
                return Err(CliError::Invalid(format!("--l must be odd and at least 3, got {l}")));
            }
            return ScalarContext::cyclotomic(l).map_err(|e| CliError::Invalid(e.to_string()));
        }
        if let Some(q) = &self.q {
            let q = BigRational::from_str(q.trim()).map_err(|e| CliError::Invalid(format!("--q {q}: {e}")))?;
            return ScalarContext::rational(q).map_err(|e| CliError::Invalid(e.to_string()));
        }
        Ok(ScalarContext::Generic)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BasisKind {
    Echelon,
    SummandAdapted,
}

impl From<BasisKind> for BasisChoice {
    fn from(k: BasisKind) -> Self {
        match k {
            BasisKind::Echelon => BasisChoice::Echelon,
            BasisKind::SummandAdapted => BasisChoice::SummandAdapted,
        }
    }
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct Target {
    /// Decompose V^(x)d.
    #[arg(long)]
    pub power: Option<u32>,
    /// Decompose T(a) (x) T(b) (x) ... for a comma-separated weight list.
    #[arg(long, value_delimiter = ',')]
    pub tensor: Option<Vec<i64>>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tilting multiplicities of a tensor power or tensor product.
    Decompose(Target),
    /// Cellular basis of End(V^(x)d) with its verification report.
    Cellbasis {
        #[arg(long)]
        power: u32,
        #[arg(long, value_enum, default_value_t = BasisKind::SummandAdapted)]
        basis: BasisKind,
    },
    /// Simple module dimensions of End(V^(x)d).
    Simples {
        #[arg(long)]
        power: u32,
    },
    /// Run every reference example and report mismatches.
    Reproduce,
    /// Temperley-Lieb diagram computations.
    #[command(subcommand)]
    Tl(TlCommand),
    /// Weight and alcove combinatorics.
    #[command(subcommand)]
    Roots(RootsCommand),
}

#[derive(Debug, Subcommand)]
pub enum TlCommand {
    /// Compose two diagrams, X o Y (Y on the bottom).
    Compose { x: String, y: String },
    /// Jones-Wenzl projector on d strands, or a generalized one for a sign list such as +,+,-.
    Jw {
        #[arg(long, conflicts_with = "signs")]
        power: Option<usize>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        signs: Option<Vec<String>>,
    },
    /// The diagram cellular basis indexed by pairs of standard tableaux.
    GlBasis {
        #[arg(long)]
        power: usize,
    },
    /// The cellular basis of End(V^(x)d) pulled back to diagrams.
    Pullback {
        #[arg(long)]
        power: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum RootsCommand {
    /// Alcove data and linkage class of an sl2 weight (requires --l).
    Sl2 {
        #[arg(long, allow_hyphen_values = true)]
        weight: i64,
        #[arg(long, default_value_t = 20)]
        bound: i64,
    },
    /// The sl3 fixtures at l = 3.
    A2,
}

/// Execute a parsed command line and return the text to print.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let ctx = cli.context.context()?;
    let cache = match &cli.cache_dir {
        Some(dir) => TiltingCache::with_dir(ctx.clone(), dir)?,
        None => TiltingCache::new(ctx.clone()),
    };
    let out = match &cli.command {
        Command::Decompose(target) => cmd_decompose(target, &cache, cli.format),
        Command::Cellbasis { power, basis } => cmd_cellbasis(*power, (*basis).into(), &cache, cli.format),
        Command::Simples { power } => cmd_simples(*power, &cache, cli.format),
        Command::Reproduce => cmd_reproduce(cli.cache_dir.as_ref(), cli.format),
        Command::Tl(tl) => cmd_tl(tl, &cache, cli.format),
        Command::Roots(r) => cmd_roots(r, &ctx, cli.format),
    };
    for msg in cache.messages() {
        eprintln!("{msg}");
    }
    out
}

fn positive(d: u32) -> Result<u32, CliError> {
    if d == 0 {
        return Err(CliError::Invalid("--power must be at least 1".into()));
    }
    Ok(d)
}

fn json_text(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

/// Decompose V^(x)d or a tensor product of tilting modules by peeling
/// summands off the module itself, cross-checked against characters.
pub fn decompose(target: &Target, cache: &TiltingCache) -> Result<TiltingMultiset, CliError> {
    let ctx = cache.ctx();
    let (module, form, weights) = match (&target.power, &target.tensor) {
        (Some(d), None) => {
            let d = positive(*d)?;
            let m = tensor_power(&natural_module(ctx), d)?;
            (m, tensor_power_form(d, ctx), vec![1; d as usize])
        }
        (None, Some(ws)) if !ws.is_empty() => {
            if let Some(w) = ws.iter().find(|&&w| w < 0) {
                return Err(CliError::Invalid(format!("weights must be nonnegative, got {w}")));
            }
            let models = ws.iter().map(|&w| cache.get(w as u32)).collect::<Result<Vec<_>, _>>()?;
            let mut module = models[0].module.clone();
            let mut form = models[0].form.clone();
            for m in &models[1..] {
                module = tensor(&module, &m.module)?;
                form = tensor_form(&form, &m.form);
            }
            if !is_invariant_form(&form, &module) {
                return Err(CliError::Uq(UqError::AsymmetricForm));
            }
            (module, form, ws.clone())
        }
        _ => return Err(CliError::Invalid("give exactly one of --power or --tensor".into())),
    };
    let mut entries = BTreeMap::new();
    for s in decompose_module(&module, &form, cache)? {
        *entries.entry(s.mu as i64).or_insert(0u64) += 1;
    }
    let found = TiltingMultiset { entries };
    let predicted = decompose_tilting(&tilting_tensor_character(&weights, ctx.order()), ctx.order())
        .map_err(|e| CliError::Invalid(e.to_string()))?;
    // rational specializations share the generic character theory
    if found != predicted {
        return Err(CliError::Verification {
            output: format_multiset(&found, Format::Json),
            reason: format!(
                "module decomposition {:?} disagrees with characters {:?}",
                found.entries, predicted.entries
            ),
        });
    }
    Ok(found)
}

pub fn format_multiset(m: &TiltingMultiset, format: Format) -> String {
    match format {
        Format::Json => json_text(&json!(m)),
        Format::Csv => {
            let mut s = String::from("lambda,multiplicity\n");
            for (k, v) in m.entries.iter().rev() {
                writeln!(s, "{k},{v}").unwrap();
            }
            s
        }
        Format::Pretty => {
            let parts: Vec<String> = m
                .entries
                .iter()
                .rev()
                .map(|(k, &v)| {
                    if v == 1 {
                        format!("T({k})")
                    } else {
                        format!("{v}T({k})")
                    }
                })
                .collect();
            parts.join(" + ") + "\n"
        }
    }
}

fn cmd_decompose(target: &Target, cache: &TiltingCache, format: Format) -> Result<String, CliError> {
    Ok(format_multiset(&decompose(target, cache)?, format))
}

/// Full export of the cell datum with its verification data.
pub fn cellbasis_json(cd: &CellDatum, cache: &TiltingCache) -> Result<(Value, bool), CliError> {
    let degrees = match cd.ctx() {
        // an echelon basis need not be adapted to the summands
        ScalarContext::Cyclotomic(_) | ScalarContext::Generic => assign_degrees(cd, cache).ok(),
        ScalarContext::Rational(_) => None,
    };
    let report = verify_cell_axioms(cd);
    let certificate = certify_basis_rank(cd, 0);
    let ok = report.pass() && certificate.full_rank();
    let mut v = serde_json::to_value(export::export(cd, degrees.as_ref())).expect("serializable");
    v["verification"] = json!(report);
    v["certificate"] = json!(certificate);
    Ok((v, ok))
}

fn cmd_cellbasis(d: u32, choice: BasisChoice, cache: &TiltingCache, format: Format) -> Result<String, CliError> {
    let cd = tensor_power_datum(positive(d)?, cache, choice)?;
    let (v, ok) = cellbasis_json(&cd, cache)?;
    let out = match format {
        Format::Json => json_text(&v),
        Format::Csv | Format::Pretty => {
            let mut s = format!("End(V^{d}) over {}: {} basis elements\n", cd.ctx(), cd.len());
            for (lambda, n) in cd.index_sets().into_iter().rev() {
                writeln!(s, "  cell {lambda}: {n} x {n}").unwrap();
            }
            let degs: Vec<String> = v["elements"]
                .as_array()
                .unwrap()
                .iter()
                .filter_map(|e| e.get("degree").map(|x| x.to_string()))
                .collect();
            if !degs.is_empty() {
                writeln!(s, "  degrees: {}", degs.join(",")).unwrap();
            }
            writeln!(s, "  verification: {}", if ok { "pass" } else { "FAIL" }).unwrap();
            s
        }
    };
    if ok {
        Ok(out)
    } else {
        Err(CliError::Verification {
            output: out,
            reason: format!("{}", v["verification"]["witnesses"]),
        })
    }
}

fn cmd_simples(d: u32, cache: &TiltingCache, format: Format) -> Result<String, CliError> {
    let cd = tensor_power_datum(positive(d)?, cache, BasisChoice::Echelon)?;
    let rows = simple_dimensions(&cd)?;
    let out = match format {
        Format::Json => json_text(&json!(rows)),
        Format::Csv | Format::Pretty => {
            let mut s = String::from("lambda,dimC,gramRank,m_lambda,agree\n");
            for r in &rows {
                writeln!(
                    s,
                    "{},{},{},{},{}",
                    r.lambda,
                    r.cell_dim,
                    r.gram_rank,
                    r.multiplicity,
                    r.consistent()
                )
                .unwrap();
            }
            s
        }
    };
    if rows.iter().all(|r| r.consistent()) {
        Ok(out)
    } else {
        Err(CliError::Verification {
            output: out,
            reason: "Gram rank differs from the summand multiplicity".into(),
        })
    }
}

fn cmd_reproduce(cache_dir: Option<&PathBuf>, format: Format) -> Result<String, CliError> {
    let checks = golden::run_all(cache_dir)?;
    let out = match format {
        Format::Json => json_text(&json!(checks)),
        Format::Csv | Format::Pretty => checks.iter().map(|c| c.line() + "\n").collect(),
    };
    let failed = checks.iter().filter(|c| !c.pass).count();
    if failed == 0 {
        Ok(out)
    } else {
        Err(CliError::Verification {
            output: out,
            reason: format!("{failed} reference checks differ"),
        })
    }
}

fn element_json(x: &TLElement) -> Value {
    Value::Array(
        x.terms()
            .iter()
            .map(|(t, c)| json!({ "coefficient": to_text(c), "diagram": t.to_text() }))
            .collect(),
    )
}

fn element_out(x: &TLElement, format: Format) -> String {
    match format {
        Format::Json => json_text(&element_json(x)),
        Format::Csv | Format::Pretty => x.to_text() + "\n",
    }
}

fn parse_signs(signs: &[String]) -> Result<Vec<i8>, CliError> {
    signs
        .iter()
        .map(|s| match s.trim() {
            "+" | "+1" | "1" => Ok(1),
            "-" | "-1" => Ok(-1),
            other => Err(CliError::Invalid(format!("not a sign: {other}"))),
        })
        .collect()
}

fn cmd_tl(cmd: &TlCommand, cache: &TiltingCache, format: Format) -> Result<String, CliError> {
    let ctx = cache.ctx();
    match cmd {
        TlCommand::Compose { x, y } => {
            let parse = |s: &str| Tangle::from_text(s).map_err(|e| CliError::Invalid(e.to_string()));
            let (x, y) = (parse(x)?, parse(y)?);
            let prod = TLElement::from_tangle(ctx, x).compose(&TLElement::from_tangle(ctx, y))?;
            Ok(element_out(&prod, format))
        }
        TlCommand::Jw { power, signs } => {
            let x = match (power, signs) {
                (Some(d), None) if *d >= 1 => jones_wenzl(*d, ctx)?,
                (None, Some(s)) => generalized_jw(&parse_signs(s)?, ctx)?,
                _ => return Err(CliError::Invalid("give --power d (d >= 1) or --signs".into())),
            };
            Ok(element_out(&x, format))
        }
        TlCommand::GlBasis { power } => {
            if *power == 0 {
                return Err(CliError::Invalid("--power must be at least 1".into()));
            }
            let gl = graham_lehrer_basis(*power);
            let report = gl.verify();
            let rows: Vec<Value> = gl
                .labels()
                .into_iter()
                .map(|(k, s, t)| {
                    let tabs = &gl.cells.iter().find(|c| c.0 == k).unwrap().1;
                    json!({
                        "k": k,
                        "s": tabs[s].to_string(),
                        "t": tabs[t].to_string(),
                        "diagram": gl.element((k, s, t)).to_text(),
                    })
                })
                .collect();
            let out = match format {
                Format::Json => json_text(&json!({ "elements": rows, "verified": report.pass() })),
                Format::Csv | Format::Pretty => rows
                    .iter()
                    .map(|r| {
                        format!(
                            "{}\t{}\t{}\t{}\n",
                            r["k"],
                            r["s"].as_str().unwrap(),
                            r["t"].as_str().unwrap(),
                            r["diagram"].as_str().unwrap()
                        )
                    })
                    .collect(),
            };
            if report.pass() {
                Ok(out)
            } else {
                Err(CliError::Verification {
                    output: out,
                    reason: report.witnesses.join("; "),
                })
            }
        }
        TlCommand::Pullback { power } => {
            let d = positive(*power as u32)?;
            let cd = tensor_power_datum(d, cache, BasisChoice::SummandAdapted)?;
            let degrees = match ctx {
                ScalarContext::Rational(_) => None,
                _ => Some(assign_degrees(&cd, cache)?),
            };
            let pb = pullback_cell_datum(&cd, &SchurWeyl::new(d as usize, ctx))?;
            let rows: Vec<Value> = pb
                .labels
                .iter()
                .zip(&pb.elements)
                .map(|(l, x)| {
                    let mut v = json!({ "lambda": l.0, "i": l.1 + 1, "j": l.2 + 1, "terms": element_json(x) });
                    if let Some(deg) = &degrees {
                        v["degree"] = json!(deg.element(l));
                    }
                    v
                })
                .collect();
            let ok = pb.flip_is_involution();
            let out = match format {
                Format::Json => {
                    json_text(&json!({ "context": ctx.label(), "elements": rows, "flip_is_involution": ok }))
                }
                Format::Csv | Format::Pretty => {
                    let mut s = String::new();
                    for (r, x) in rows.iter().zip(&pb.elements) {
                        let deg = r.get("degree").map(|d| format!(" degree {d}")).unwrap_or_default();
                        writeln!(s, "c[{}]({},{}){deg}", r["lambda"], r["i"], r["j"]).unwrap();
                        for line in x.to_text().lines() {
                            writeln!(s, "  {line}").unwrap();
                        }
                    }
                    s
                }
            };
            if ok {
                Ok(out)
            } else {
                Err(CliError::Verification {
                    output: out,
                    reason: "diagram flip does not permute the pulled back basis".into(),
                })
            }
        }
    }
}

fn cmd_roots(cmd: &RootsCommand, ctx: &ScalarContext, format: Format) -> Result<String, CliError> {
    match cmd {
        RootsCommand::Sl2 { weight, bound } => {
            let Some(l) = ctx.order() else {
                return Err(CliError::Invalid("roots sl2 needs --l".into()));
            };
            let k = *weight;
            let v = json!({
                "weight": k,
                "l": l,
                "fundamental_alcove": root_data::in_fundamental_alcove(k, l),
                "singular": root_data::is_singular(k, l),
                "alcove": root_data::alcove_index(k, l),
                "weyl_module_simple": root_data::weyl_module_is_simple(k, Some(l)),
                "linkage_class": root_data::linkage_class(k, l, *bound),
            });
            Ok(match format {
                Format::Json => json_text(&v),
                Format::Csv | Format::Pretty => v
                    .as_object()
                    .unwrap()
                    .iter()
                    .map(|(key, val)| format!("{key}: {val}\n"))
                    .collect(),
            })
        }
        RootsCommand::A2 => {
            let report = root_data::a2::a2_fixture_checks();
            let out = match format {
                Format::Json => json_text(&json!(report)),
                Format::Csv | Format::Pretty => report
                    .checks
                    .iter()
                    .map(|c| format!("{} {}: {}\n", if c.pass { "ok  " } else { "FAIL" }, c.name, c.detail))
                    .collect(),
            };
            if report.all_pass() {
                Ok(out)
            } else {
                Err(CliError::Verification {
                    output: out,
                    reason: "sl3 fixture mismatch".into(),
                })
            }
        }
    }
}
