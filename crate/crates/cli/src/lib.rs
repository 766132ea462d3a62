//! Command-line front end for `weakhopf`.
//!
//! Exit statuses: 0 when every check passes, 1 on a mathematical failure
//! (the report names the failed check and carries a witness), 2 on input
//! errors such as malformed JSON, schema violations or unsupported fields.

pub mod doc;
pub mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use weakhopf::duality::{certify_smash, iterated_smash, semisimplicity_radical, IsomorphismCertificate};
use weakhopf::exactlin::Field;
use weakhopf::groupoid::{groupoid_algebra, validate_groupoid};
use weakhopf::report::{AxiomReport, Check, Witness};
use weakhopf::smash::{dual_action, smash_product, trivial_action, verify_module_algebra, ActionPresentation};
use weakhopf::wha::{
    classify_ordinary_hopf, counital_data, dualize, verify_algebra_map, verify_antipode_properties,
    verify_counital_identities, verify_weak_hopf, AlgebraPresentation, WeakHopfPresentation,
};

use doc::{canonical, hopf_of, load, matrix_json, vector_json, Document, Loaded};
use report::RunReport;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}:{line}:{column}: invalid JSON: {message}", path.display())]
    Syntax { path: PathBuf, line: usize, column: usize, message: String },
    #[error("{}: {message}", path.display())]
    Schema { path: PathBuf, message: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Math(#[from] weakhopf::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Math(
                weakhopf::Error::Precondition { .. } | weakhopf::Error::Inconsistency { .. },
            ) => 1,
            _ => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Selector {
    /// `H_t` with `h·z = ε_t(hz)`.
    Trivial,
    /// `H*` with `h ⇀ φ = φ₁⟨φ₂, h⟩`.
    Dual,
    /// An action document given by `--action`.
    File,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BuiltinAction {
    Trivial,
    Dual,
}

#[derive(Debug, Parser)]
#[command(name = "weakhopf", version, about = "Exact verification of finite quantum groupoids")]
pub struct Cli {
    /// Ground field, `Q` or `Fp:<prime>`; overrides the field recorded in input files.
    #[arg(long, global = true)]
    pub field: Option<Field>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Include wall-clock time in the report (makes output nondeterministic).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the weak Hopf axiom, antipode and counital suites.
    Check { file: PathBuf },
    /// Write the dual weak Hopf algebra.
    Dual {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convert a groupoid document into its groupoid algebra.
    GroupoidAlgebra {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build `A#H` from an action document, or from a weak Hopf algebra and a built-in action.
    Smash {
        file: PathBuf,
        #[arg(long, value_enum)]
        action: Option<BuiltinAction>,
        /// Write `A#H` as an algebra document.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify `(A#H)#H* ≅ End(A#H)_A`.
    Certify {
        hopf: PathBuf,
        #[arg(value_enum)]
        selector: Selector,
        /// Action document for the `file` selector.
        #[arg(long)]
        action: Option<PathBuf>,
        /// Write the certificate here instead of embedding it in the report.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the trace-form radical of an algebra (characteristic zero only).
    Radical { file: PathBuf },
}

/// What a command prints and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub exit: i32,
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let mut result = match &cli.command {
        Command::Check { file } => cmd_check(&load(file, cli.field)?),
        Command::Dual { file, out } => cmd_dual(&load(file, cli.field)?, out.as_deref()),
        Command::GroupoidAlgebra { file, out } => cmd_groupoid_algebra(&load(file, cli.field)?, out.as_deref()),
        Command::Smash { file, action, out } => cmd_smash(&load(file, cli.field)?, *action, out.as_deref()),
        Command::Certify { hopf, selector, action, out } => {
            let hopf = load(hopf, cli.field)?;
            let action = match (selector, action) {
                (Selector::File, Some(p)) => Some(load(p, cli.field)?),
                (Selector::File, None) => return Err(CliError::Usage("the file selector needs --action <FILE>".into())),
                (_, Some(_)) => return Err(CliError::Usage("--action is only used with the file selector".into())),
                (_, None) => None,
            };
            cmd_certify(&hopf, *selector, action.as_ref(), out.as_deref())
        }
        Command::Radical { file } => cmd_radical(&load(file, cli.field)?),
    }?;
    if cli.timing {
        result.report.timing_ms = Some(start.elapsed().as_millis());
    }
    let stdout = match (&result.document, cli.format) {
        (Some(d), _) => canonical(d),
        (None, Format::Json) => canonical(&result.report.to_json()),
        (None, Format::Text) => result.report.to_text(),
    };
    Ok(Outcome { stdout, exit: result.report.exit_code() })
}

/// A report, plus a document to print instead of it when no `--out` was given.
pub struct CommandResult {
    pub report: RunReport,
    pub document: Option<Value>,
}

impl From<RunReport> for CommandResult {
    fn from(report: RunReport) -> Self {
        CommandResult { report, document: None }
    }
}

fn write_file(path: &Path, v: &Value) -> Result<(), CliError> {
    fs::write(path, canonical(v)).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn schema(loaded: &Loaded, message: impl Into<String>) -> CliError {
    CliError::Schema { path: loaded.path.clone(), message: message.into() }
}

fn failed(name: &str, e: &weakhopf::Error) -> Check {
    let witness = match e {
        weakhopf::Error::Inconsistency { witness, .. } => witness.clone(),
        _ => Witness::at(vec![]),
    };
    Check::fail(name, witness)
}

fn new_report(command: &str, inputs: &[&Loaded]) -> RunReport {
    let mut r = RunReport::new(command, inputs[0].field);
    r.input_digest = inputs.iter().map(|l| l.digest.clone()).collect();
    r
}

/// Resolves a groupoid or weak_hopf input; groupoids are validated first.
/// `None` means validation failed and the report says why.
fn resolve_hopf(loaded: &Loaded, report: &mut RunReport) -> Result<Option<WeakHopfPresentation>, CliError> {
    match &loaded.doc {
        Document::Groupoid(g) => {
            if !report.suite("groupoid", validate_groupoid(g)) {
                return Ok(None);
            }
            Ok(Some(groupoid_algebra(g, loaded.field)?))
        }
        Document::WeakHopf(h) => Ok(Some(h.clone())),
        other => Err(schema(loaded, format!("expected a weak_hopf or groupoid document, found {}", other.kind()))),
    }
}

/// The three verification suites plus the ordinary-Hopf classification.
fn check_suites(h: &WeakHopfPresentation, report: &mut RunReport) -> bool {
    report.dim("H", h.dim());
    let axioms = report.suite("weak_hopf", verify_weak_hopf(h));
    let antipode = report.suite("antipode", verify_antipode_properties(h));
    let counital = report.suite("counital", verify_counital_identities(h));
    if axioms {
        match counital_data(h) {
            Ok(c) => report.dim("H_t", c.target.dim()),
            Err(e) => report.push("counital", failed("counital_data", &e)),
        }
        match classify_ordinary_hopf(h) {
            Ok(c) => {
                report.flags.insert("ordinary_hopf".into(), c.ordinary);
            }
            Err(e) => report.push("classification", failed("hopf_classification", &e)),
        }
    }
    axioms && antipode && counital && report.passed()
}

pub fn cmd_check(loaded: &Loaded) -> Result<CommandResult, CliError> {
    let mut report = new_report("check", &[loaded]);
    if let Some(h) = resolve_hopf(loaded, &mut report)? {
        check_suites(&h, &mut report);
    }
    Ok(report.into())
}

pub fn cmd_dual(loaded: &Loaded, out: Option<&Path>) -> Result<CommandResult, CliError> {
    let mut report = new_report("dual", &[loaded]);
    let Some(h) = resolve_hopf(loaded, &mut report)? else { return Ok(report.into()) };
    if !check_suites(&h, &mut report) {
        return Ok(report.into());
    }
    let dual = dualize(&h)?;
    let document = doc::weak_hopf_document(&dual);
    emit(report, document, out)
}

fn emit(report: RunReport, document: Value, out: Option<&Path>) -> Result<CommandResult, CliError> {
    match out {
        Some(path) => {
            write_file(path, &document)?;
            Ok(report.into())
        }
        None => Ok(CommandResult { report, document: Some(document) }),
    }
}

pub fn cmd_groupoid_algebra(loaded: &Loaded, out: Option<&Path>) -> Result<CommandResult, CliError> {
    let mut report = new_report("groupoid-algebra", &[loaded]);
    let Document::Groupoid(g) = &loaded.doc else {
        return Err(schema(loaded, format!("expected a groupoid document, found {}", loaded.doc.kind())));
    };
    if !report.suite("groupoid", validate_groupoid(g)) {
        return Ok(report.into());
    }
    let h = groupoid_algebra(g, loaded.field)?;
    report.dim("H", h.dim());
    emit(report, doc::weak_hopf_document(&h), out)
}

/// Builds the action for `smash` and `certify`; `None` when a built-in
/// construction failed (recorded in the report).
fn builtin_action(h: &WeakHopfPresentation, which: BuiltinAction, report: &mut RunReport) -> Option<ActionPresentation> {
    let built = match which {
        BuiltinAction::Trivial => trivial_action(h),
        BuiltinAction::Dual => dual_action(h),
    };
    match built {
        Ok(a) => Some(a),
        Err(e) => {
            report.push("action", failed("action", &e));
            None
        }
    }
}

fn smash_stage(a: &ActionPresentation, report: &mut RunReport) -> Option<weakhopf::smash::SmashAlgebra> {
    report.dim("A", a.algebra.dim());
    if !report.suite("module_algebra", verify_module_algebra(a)) {
        return None;
    }
    match smash_product(a) {
        Ok(s) => {
            report.dim("A#H", s.dim());
            report.push("smash", Check::pass("smash_product"));
            Some(s)
        }
        Err(e) => {
            report.push("smash", failed("smash_product", &e));
            None
        }
    }
}

pub fn cmd_smash(loaded: &Loaded, which: Option<BuiltinAction>, out: Option<&Path>) -> Result<CommandResult, CliError> {
    let mut report = new_report("smash", &[loaded]);
    let action = match (&loaded.doc, which) {
        (Document::Action(a), None) => {
            if !report.suite("weak_hopf", verify_weak_hopf(&a.hopf)) {
                return Ok(report.into());
            }
            a.clone()
        }
        (Document::Action(_), Some(_)) => {
            return Err(CliError::Usage("--action cannot be combined with an action document".into()))
        }
        (_, None) => return Err(CliError::Usage("a weak_hopf or groupoid input needs --action trivial|dual".into())),
        (_, Some(which)) => {
            let Some(h) = resolve_hopf(loaded, &mut report)? else { return Ok(report.into()) };
            if !report.suite("weak_hopf", verify_weak_hopf(&h)) {
                return Ok(report.into());
            }
            let Some(a) = builtin_action(&h, which, &mut report) else { return Ok(report.into()) };
            a
        }
    };
    report.dim("H", action.hopf.dim());
    if let Ok(c) = counital_data(&action.hopf) {
        report.dim("H_t", c.target.dim());
    }
    let Some(s) = smash_stage(&action, &mut report) else { return Ok(report.into()) };
    if let Some(path) = out {
        write_file(path, &doc::algebra_document(&s.algebra))?;
    }
    Ok(report.into())
}

fn certificate_json(cert: &IsomorphismCertificate, report: &RunReport) -> Value {
    let checks: Vec<(String, Check)> = cert.report.checks.iter().map(|c| ("duality".to_string(), c.clone())).collect();
    let mut sub = RunReport::new("certificate", report.field);
    sub.checks = checks;
    json!({
        "input_digest": report.input_digest,
        "field": report.field.to_string(),
        "alpha": cert.alpha.as_ref().map(matrix_json),
        "beta": cert.beta.as_ref().map(matrix_json),
        "checks": sub.checks_json(),
        "dimensions": {
            "A#H": cert.smash_dim,
            "(A#H)#H*": cert.iterated_dim,
            "commutant": cert.commutant_dim,
        },
        "errors": cert.errors.iter().map(|(stage, msg)| json!({ "stage": stage, "message": msg })).collect::<Vec<_>>(),
        "valid": cert.is_valid() && report.passed(),
    })
}

pub fn cmd_certify(
    hopf_file: &Loaded,
    selector: Selector,
    action_file: Option<&Loaded>,
    out: Option<&Path>,
) -> Result<CommandResult, CliError> {
    let inputs: Vec<&Loaded> = std::iter::once(hopf_file).chain(action_file).collect();
    let mut report = new_report("certify", &inputs);
    report.extra.insert("selector".into(), json!(format!("{selector:?}").to_lowercase()));
    let finish = |mut report: RunReport, cert: Option<&IsomorphismCertificate>| -> Result<CommandResult, CliError> {
        let empty;
        let cert = match cert {
            Some(c) => c,
            None => {
                empty = IsomorphismCertificate::new(None);
                &empty
            }
        };
        let cj = certificate_json(cert, &report);
        match out {
            Some(path) => write_file(path, &cj)?,
            None => {
                report.extra.insert("certificate".into(), cj);
            }
        }
        Ok(report.into())
    };

    let Some(h) = resolve_hopf(hopf_file, &mut report)? else { return finish(report, None) };
    report.dim("H", h.dim());
    if !report.suite("weak_hopf", verify_weak_hopf(&h)) {
        return finish(report, None);
    }
    if let Ok(c) = counital_data(&h) {
        report.dim("H_t", c.target.dim());
    }
    let action = match (selector, action_file) {
        (Selector::File, Some(af)) => {
            let Document::Action(a) = &af.doc else {
                return Err(schema(af, format!("expected an action document, found {}", af.doc.kind())));
            };
            if a.hopf != h {
                return Err(schema(af, "the action's hopf differs from the weak Hopf algebra being certified"));
            }
            Some(a.clone())
        }
        (Selector::Trivial, _) => builtin_action(&h, BuiltinAction::Trivial, &mut report),
        (Selector::Dual, _) => builtin_action(&h, BuiltinAction::Dual, &mut report),
        (Selector::File, None) => unreachable!("checked by the caller"),
    };
    let Some(action) = action else { return finish(report, None) };
    let Some(s) = smash_stage(&action, &mut report) else { return finish(report, None) };

    let cert = certify_smash(&s);
    for c in &cert.report.checks {
        report.push("duality", c.clone());
    }
    if let Some(d) = cert.iterated_dim {
        report.dim("(A#H)#H*", d);
    }
    if let Some(d) = cert.commutant_dim {
        report.dim("commutant", d);
    }
    if selector == Selector::Trivial && h.field() == Field::Rationals && cert.is_valid() {
        target_smash(&h, &s, &mut report)?;
    }
    report.flags.insert("certificate_valid".into(), cert.is_valid());
    finish(report, Some(&cert))
}

/// `H ≅ H_t#H` through `h ↦ 1#h`, and the radical of `(H_t#H)#H*`.
fn target_smash(h: &WeakHopfPresentation, s: &weakhopf::smash::SmashAlgebra, report: &mut RunReport) -> Result<(), CliError> {
    let iso = verify_algebra_map(&h.algebra, &s.algebra, &s.embed_h);
    report.suite("target_smash", prefixed("target_smash_", iso));
    let iterated = iterated_smash(s)?;
    let radical = semisimplicity_radical(&iterated.algebra)?;
    report.push(
        "target_smash",
        Check::from_bool("iterated_semisimple", radical.is_zero(), || {
            Witness::new(vec![radical.dim()], radical.basis()[0].clone(), vec![])
        }),
    );
    Ok(())
}

fn prefixed(prefix: &str, mut r: AxiomReport) -> AxiomReport {
    for c in &mut r.checks {
        c.name = format!("{prefix}{}", c.name);
    }
    r
}

fn algebra_of(loaded: &Loaded) -> Result<AlgebraPresentation, CliError> {
    match &loaded.doc {
        Document::Algebra(a) => Ok(a.clone()),
        Document::Action(a) => Ok(a.algebra.clone()),
        other => hopf_of(other, loaded.field).map(|h| h.algebra).map_err(|m| schema(loaded, m)),
    }
}

pub fn cmd_radical(loaded: &Loaded) -> Result<CommandResult, CliError> {
    let mut report = new_report("radical", &[loaded]);
    let a = algebra_of(loaded)?;
    report.dim("A", a.dim());
    report.push("algebra", a.check_associativity());
    report.push("algebra", a.check_unit());
    if !report.passed() {
        return Ok(report.into());
    }
    let radical = semisimplicity_radical(&a)?;
    report.push(
        "radical",
        Check::from_bool("semisimple", radical.is_zero(), || {
            Witness::new(vec![radical.dim()], radical.basis()[0].clone(), vec![])
        }),
    );
    report.extra.insert(
        "radical".into(),
        json!({
            "dim": radical.dim(),
            "basis": radical.basis().iter().map(|v| vector_json(v)).collect::<Vec<_>>(),
        }),
    );
    Ok(report.into())
}
