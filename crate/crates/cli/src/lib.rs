//! The `cutkosky` command line: positivity queries over JSON model files.
//!
//! Every command produces a [`Report`]; `--json` prints it as
//! `{"query", "inputs", "result", "certificates"?}` with all numbers as exact
//! rational text, otherwise a short human-readable rendering is printed.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use cutkosky_core::instances::{catalog, find_example, verify_expectations};
use cutkosky_core::{
    read_model, BundleClass, BundleModel, Certificate, DocumentError, Error, MultiplicityResult,
    NefCodim, ParsedModel, PsefResult, RatVector, Rational, Stratum,
};
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(
    name = "cutkosky",
    version,
    about = "Exact positivity invariants on split projective bundles"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Print the machine-readable result document.
    #[arg(long, global = true)]
    json: bool,

    /// Attach and verify the LP certificate behind every answer.
    #[arg(long, global = true)]
    certificates: bool,
}

#[derive(Debug, Args)]
struct ClassArgs {
    /// Name of a class declared in the model file.
    #[arg(long, required_unless_present = "coeffs", conflicts_with = "coeffs")]
    class: Option<String>,

    /// Inline class as "b1,b2,...;lambda".
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExampleAction {
    Emit,
    Selftest,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Psef, nef and big tests plus the nef codimension.
    Check {
        model: PathBuf,
        #[command(flatten)]
        class: ClassArgs,
    },
    /// Minimal multiplicity along one stratum.
    Mult {
        model: PathBuf,
        #[command(flatten)]
        class: ClassArgs,
        /// Comma-separated hypersurface indices, e.g. "1,2".
        #[arg(long)]
        stratum: String,
    },
    /// Minimal multiplicities along every proper stratum.
    Table {
        model: PathBuf,
        #[command(flatten)]
        class: ClassArgs,
    },
    /// Divisorial Zariski decomposition.
    Zariski {
        model: PathBuf,
        #[command(flatten)]
        class: ClassArgs,
    },
    /// The cone of classes nef in codimension k.
    Cone {
        model: PathBuf,
        #[arg(long)]
        codim: usize,
        /// Print facet inequalities (the default).
        #[arg(long, conflicts_with = "generators")]
        facets: bool,
        /// Print generators instead of facets.
        #[arg(long)]
        generators: bool,
    },
    /// Built-in worked examples.
    Example {
        /// Instance name; `list` prints the catalogue.
        name: String,
        action: Option<ExampleAction>,
        #[arg(long, conflicts_with_all = ["selftest", "action"])]
        emit: bool,
        #[arg(long, conflicts_with = "action")]
        selftest: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 1,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Validation(_) => 2,
            _ => 1,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<DocumentError> for CliError {
    fn from(e: DocumentError) -> Self {
        CliError {
            code: e.exit_code(),
            message: e.to_string(),
        }
    }
}

/// The outcome of one command.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub query: &'static str,
    pub inputs: Value,
    pub result: Value,
    pub certificates: Vec<Value>,
    pub human: String,
    /// Exit code for a completed run; nonzero only for a failed self-test.
    pub code: i32,
    /// Raw text printed instead of the report (`example emit`).
    pub raw: Option<String>,
}

impl Report {
    fn new(query: &'static str, inputs: Value, result: Value, human: String) -> Self {
        Report {
            query,
            inputs,
            result,
            certificates: Vec::new(),
            human,
            code: 0,
            raw: None,
        }
    }

    pub fn to_json(&self, with_certificates: bool) -> Value {
        let mut doc = json!({
            "query": self.query,
            "inputs": self.inputs,
            "result": self.result,
        });
        if with_certificates {
            doc["certificates"] = Value::Array(self.certificates.clone());
        }
        doc
    }
}

fn text<T: fmt::Display>(x: T) -> Value {
    Value::String(x.to_string())
}

/// Checks `c` before it is allowed into the output.
fn lp_certificate(label: String, c: &Certificate) -> Result<Value, CliError> {
    if !c.verify() {
        return Err(CliError::usage(format!(
            "internal error: certificate for {label} failed verification"
        )));
    }
    Ok(json!({
        "for": label,
        "kind": "lp",
        "program": c.program,
        "outcome": c.outcome,
        "verified": true,
    }))
}

pub fn parse_coeffs(arg: &str) -> Result<BundleClass, CliError> {
    let (beta, lambda) = arg
        .split_once(';')
        .ok_or_else(|| CliError::usage(format!("--coeffs {arg:?}: expected \"b1,...;lambda\"")))?;
    let parse = |s: &str| {
        s.trim()
            .parse::<Rational>()
            .map_err(|e| CliError::usage(format!("--coeffs {arg:?}: {e}")))
    };
    let beta = beta.split(',').map(parse).collect::<Result<Vec<_>, _>>()?;
    Ok(BundleClass::new(RatVector::new(beta), parse(lambda)?))
}

pub fn parse_stratum(arg: &str, r: usize) -> Result<Stratum, CliError> {
    let indices = arg
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| CliError::usage(format!("--stratum {arg:?}: bad index {s:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Stratum::new(indices, r)?)
}

struct Query {
    parsed: ParsedModel,
    label: String,
    class: BundleClass,
}

impl Query {
    fn load(path: &Path, args: &ClassArgs) -> Result<Query, CliError> {
        let parsed = read_model(path)?;
        let (label, class) = match (&args.class, &args.coeffs) {
            (Some(name), _) => {
                let class = parsed.classes.get(name).cloned().ok_or_else(|| {
                    let known: Vec<&str> = parsed.classes.keys().map(String::as_str).collect();
                    CliError::usage(format!(
                        "unknown class {name:?}; model declares [{}]",
                        known.join(", ")
                    ))
                })?;
                (name.clone(), class)
            }
            (None, Some(arg)) => {
                let class = parse_coeffs(arg)?;
                (class.to_string(), class)
            }
            (None, None) => return Err(CliError::usage("one of --class or --coeffs is required")),
        };
        if class.beta.len() != parsed.model.base().rank() {
            return Err(CliError::usage(format!(
                "class {label} has {} base coefficients, model base has rank {}",
                class.beta.len(),
                parsed.model.base().rank()
            )));
        }
        Ok(Query {
            parsed,
            label,
            class,
        })
    }

    fn model(&self) -> &BundleModel {
        &self.parsed.model
    }

    fn inputs(&self) -> Value {
        json!({ "class": self.label, "coefficients": self.class })
    }
}

fn nef_codim_value(c: NefCodim) -> Value {
    match c {
        NefCodim::Codim(k) => text(k),
        NefCodim::NotPsef => Value::String("not_psef".into()),
    }
}

fn check(q: &Query) -> Result<Report, CliError> {
    let m = q.model();
    let psef = m.is_psef(&q.class)?;
    let nef = m.is_nef(&q.class)?;
    let big = m.is_big(&q.class)?;
    let mut certificates = vec![lp_certificate("psef".into(), psef.certificate())?];

    certificates.push(match m.nef_violation(&q.class)? {
        None => {
            let points: Vec<RatVector> = m
                .fibers()
                .iter()
                .map(|l| q.class.beta.add_scaled(&q.class.lambda, l))
                .collect();
            json!({ "for": "nef", "kind": "vertex_points", "points": points })
        }
        Some((fiber, facet)) => {
            let value = match fiber {
                Some(i) => facet.dot(&q.class.beta.add_scaled(&q.class.lambda, &m.fibers()[i])),
                None => q.class.lambda.clone(),
            };
            json!({
                "for": "nef",
                "kind": "violated_facet",
                "fiber": fiber.map(text),
                "facet": facet,
                "value": value,
            })
        }
    });

    let point = q.class.to_vector();
    let facets = m.psef_cone().facets();
    let values: Vec<Rational> = facets.iter().map(|f| f.dot(&point)).collect();
    certificates.push(json!({
        "for": "big",
        "kind": "psef_facet_values",
        "full_dimensional": m.psef_cone().is_full_dimensional(),
        "facets": facets,
        "values": values,
    }));

    let codim = match m.non_nef_sweep(&q.class) {
        Ok(sweep) => {
            for (s, res) in &sweep {
                certificates.push(lp_certificate(format!("nu {s}"), res.certificate())?);
            }
            match sweep
                .iter()
                .find(|(_, r)| r.value().is_some_and(Rational::is_positive))
            {
                Some((s, _)) => NefCodim::Codim(s.codim() - 1),
                None => NefCodim::Codim(m.n()),
            }
        }
        Err(Error::NotPsef) => NefCodim::NotPsef,
        Err(e) => return Err(e.into()),
    };
    debug_assert_eq!(codim, m.nef_codim(&q.class)?);

    let result = json!({
        "psef": psef.is_psef(),
        "nef": nef,
        "big": big,
        "nef_codim": nef_codim_value(codim),
    });
    let human = format!(
        "class      {}\npsef       {}\nnef        {}\nbig        {}\nnef_codim  {}\n",
        q.class,
        psef.is_psef(),
        nef,
        big,
        codim
    );
    let mut report = Report::new("check", q.inputs(), result, human);
    report.certificates = certificates;
    Ok(report)
}

fn mult(q: &Query, stratum: &str) -> Result<Report, CliError> {
    let s = parse_stratum(stratum, q.model().r())?;
    let res = q.model().min_multiplicity(&q.class, &s)?;
    let mut inputs = q.inputs();
    inputs["stratum"] = text(&s);
    let (result, human) = match &res {
        MultiplicityResult::Value { nu, witness, .. } => (
            json!({ "status": "value", "nu": nu, "witness": witness }),
            format!(
                "nu({}, V{s}) = {nu}\nweights    {}\nnef point  {}\n",
                q.label,
                RatVector::new(witness.weights.clone()),
                witness.nef_point
            ),
        ),
        MultiplicityResult::NotPsef { .. } => (
            json!({ "status": "not_psef" }),
            format!("{} is not psef\n", q.label),
        ),
    };
    let mut report = Report::new("mult", inputs, result, human);
    report.certificates = vec![lp_certificate(format!("nu {s}"), res.certificate())?];
    Ok(report)
}

fn not_psef_report(query: &'static str, q: &Query) -> Result<Report, CliError> {
    let psef = q.model().is_psef(&q.class)?;
    debug_assert!(matches!(psef, PsefResult::NotPsef { .. }));
    let mut report = Report::new(
        query,
        q.inputs(),
        json!({ "status": "not_psef" }),
        format!("{} is not psef\n", q.label),
    );
    report.certificates = vec![lp_certificate("psef".into(), psef.certificate())?];
    Ok(report)
}

fn table(q: &Query) -> Result<Report, CliError> {
    let sweep = match q.model().non_nef_sweep(&q.class) {
        Ok(s) => s,
        Err(Error::NotPsef) => return not_psef_report("table", q),
        Err(e) => return Err(e.into()),
    };
    let mut rows = Vec::new();
    let mut certificates = Vec::new();
    let mut human = format!("{:<12} {:<6} nu\n", "stratum", "codim");
    for (s, res) in &sweep {
        let nu = res.value().expect("psef class has finite multiplicities");
        rows.push(json!({ "stratum": text(s), "codim": text(s.codim()), "nu": nu }));
        human.push_str(&format!("{:<12} {:<6} {nu}\n", s.to_string(), s.codim()));
        certificates.push(lp_certificate(format!("nu {s}"), res.certificate())?);
    }
    let mut report = Report::new(
        "table",
        q.inputs(),
        json!({ "status": "psef", "rows": rows }),
        human,
    );
    report.certificates = certificates;
    Ok(report)
}

fn zariski(q: &Query) -> Result<Report, CliError> {
    let z = match q.model().zariski(&q.class) {
        Ok(z) => z,
        Err(Error::NotPsef) => return not_psef_report("zariski", q),
        Err(e) => return Err(e.into()),
    };
    let projection_nef = q.model().is_nef(&z.projection)?;
    let result = json!({
        "status": "psef",
        "coefficients": z.coefficients,
        "negative_part": z.negative_part,
        "projection": z.projection,
        "projection_nef": projection_nef,
    });
    let human = format!(
        "coefficients  {}\nN             {}\nZ             {}\nZ nef         {}\n",
        RatVector::new(z.coefficients.clone()),
        z.negative_part,
        z.projection,
        projection_nef
    );
    let mut report = Report::new("zariski", q.inputs(), result, human);
    report.certificates = z
        .certificates
        .iter()
        .enumerate()
        .map(|(i, c)| lp_certificate(format!("nu {{{i}}}"), c))
        .collect::<Result<_, _>>()?;
    Ok(report)
}

fn cone(path: &Path, codim: usize, generators: bool) -> Result<Report, CliError> {
    let parsed = read_model(path)?;
    let cone = parsed.model.positivity_cone(codim)?;
    let (key, vectors) = if generators {
        ("generators", cone.generators())
    } else {
        ("facets", cone.facets())
    };
    let mut human = format!("N_{codim} {key}:\n");
    for v in &vectors {
        human.push_str(&format!("  {v}\n"));
    }
    Ok(Report::new(
        "cone",
        json!({ "codim": text(codim), "representation": key }),
        json!({ key: vectors, "dimension": text(cone.dimension()) }),
        human,
    ))
}

fn example(name: &str, action: ExampleAction) -> Result<Report, CliError> {
    if name == "list" {
        let names: Vec<String> = catalog().into_iter().map(|e| e.name).collect();
        let human = names.iter().map(|n| format!("{n}\n")).collect();
        return Ok(Report::new(
            "example",
            json!({ "name": "list" }),
            json!(names),
            human,
        ));
    }
    let e = find_example(name).ok_or_else(|| {
        let names: Vec<String> = catalog().into_iter().map(|e| e.name).collect();
        CliError::usage(format!(
            "unknown example {name:?}; available: {}",
            names.join(", ")
        ))
    })?;
    match action {
        ExampleAction::Emit => {
            let mut report = Report::new(
                "example",
                json!({ "name": name }),
                Value::Null,
                String::new(),
            );
            report.raw = Some(format!("{}\n", e.to_document().to_json()));
            Ok(report)
        }
        ExampleAction::Selftest => {
            let outcome = verify_expectations(&e);
            let mut report = Report::new(
                "example",
                json!({ "name": name, "action": "selftest" }),
                json!({ "passed": outcome.passed(), "checks": outcome.outcomes }),
                outcome.to_string(),
            );
            report.code = if outcome.passed() { 0 } else { 1 };
            Ok(report)
        }
    }
}

fn execute(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Check { model, class } => check(&Query::load(model, class)?),
        Command::Mult {
            model,
            class,
            stratum,
        } => mult(&Query::load(model, class)?, stratum),
        Command::Table { model, class } => table(&Query::load(model, class)?),
        Command::Zariski { model, class } => zariski(&Query::load(model, class)?),
        Command::Cone {
            model,
            codim,
            generators,
            ..
        } => cone(model, *codim, *generators),
        Command::Example {
            name,
            action,
            emit,
            selftest,
        } => {
            let action = match (action, emit, selftest) {
                (Some(a), _, _) => *a,
                (None, _, true) => ExampleAction::Selftest,
                (None, _, false) => ExampleAction::Emit,
            };
            example(name, action)
        }
    }
}

fn render(report: &Report, cli: &Cli) -> String {
    if let Some(raw) = &report.raw {
        return raw.clone();
    }
    if cli.json {
        let doc = report.to_json(cli.certificates);
        return format!(
            "{}\n",
            serde_json::to_string_pretty(&doc).expect("json value")
        );
    }
    let mut out = report.human.clone();
    if cli.certificates {
        for c in &report.certificates {
            let status = c["outcome"]["status"].as_str().unwrap_or("witness");
            out.push_str(&format!(
                "certificate {}: {} ({})\n",
                c["for"].as_str().unwrap_or("?"),
                status,
                if c["verified"] == Value::Bool(true) {
                    "verified"
                } else {
                    "checkable"
                }
            ));
        }
    }
    out
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let to_stdout = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let rendered = e.render().to_string();
            if to_stdout {
                let _ = out.write_all(rendered.as_bytes());
                return 0;
            }
            let _ = err.write_all(rendered.as_bytes());
            return 1;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let _ = out.write_all(render(&report, &cli).as_bytes());
            report.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code
        }
    }
}
