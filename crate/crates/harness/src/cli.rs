//! `gradelie` command line. Exit codes: 0 all checks pass, 1 violation found, 2 input error.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use gradelie_core::spectral::{decide_irreducible, triangularize_solvable, verify_flag, FlagBasis, Witness};
use gradelie_core::structures::triple_envelope;
use gradelie_core::{Error, LieAlgebra};
use serde_json::{json, Value};

use crate::analyze::{analyze, group_label};
use crate::document::{AlgebraDocument, Instance};
use crate::examples::{build_example, EXAMPLE_NAMES};
use crate::fuzz::{run_campaign, Lemma};
use crate::report::{pretty, render_analysis, render_campaign, ReportFormat};
use crate::HarnessError;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "gradelie", version, about = "Graded Lie algebras of matrices: checks, certificates and fuzzing")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Input document (JSON); may also be given positionally
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Tolerance for numeric certificates
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 100)]
    trials: u64,
    #[arg(long = "dim-max", global = true, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..=6))]
    dim_max: u64,
    #[arg(long, global = true, value_enum, default_value_t = ReportFormat::Text)]
    report: ReportFormat,
    /// Print the document itself instead of a report
    #[arg(long, global = true)]
    emit: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Structural report plus every applicable lemma check
    Analyze { file: Option<PathBuf> },
    /// Verify the grading law of a subgraded document
    GradeCheck { file: Option<PathBuf> },
    /// Flag certificate for a solvable algebra
    Triangularize { file: Option<PathBuf> },
    /// Decide irreducibility of the generated algebra
    Irreducible { file: Option<PathBuf> },
    /// Seeded campaign for one lemma
    Fuzz {
        #[arg(long, value_enum)]
        lemma: Lemma,
    },
    /// Build a worked example (analyzed, or printed with --emit)
    Example { name: String },
}

struct Output {
    text: String,
    code: i32,
}

fn input_path(cli: &Cli, file: &Option<PathBuf>) -> Result<PathBuf, HarnessError> {
    file.clone()
        .or_else(|| cli.input.clone())
        .ok_or_else(|| HarnessError::Structure("no input file given (use --input FILE)".into()))
}

fn load(path: &PathBuf) -> Result<AlgebraDocument, HarnessError> {
    let text = std::fs::read_to_string(path).map_err(|e| HarnessError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    AlgebraDocument::parse(&text).map_err(|mut e| {
        e.message = format!("{}: {}", path.display(), e.message);
        HarnessError::Input(e)
    })
}

fn emit(doc: &AlgebraDocument) -> String {
    let mut s = doc.to_json_pretty();
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

/// The Lie algebra a document stands for: its closure, or the envelope of a triple system.
fn underlying_algebra(inst: &Instance) -> Result<LieAlgebra, HarnessError> {
    Ok(match inst {
        Instance::Lie(l) => l.clone(),
        Instance::Subgraded(s) => s.algebra().clone(),
        Instance::Triple(m) | Instance::Jordan(m) => triple_envelope(m)?,
    })
}

fn text_or_json(fmt: ReportFormat, items: Vec<(&str, Value)>) -> String {
    match fmt {
        ReportFormat::Json => pretty(&Value::Object(items.into_iter().map(|(k, v)| (k.to_string(), v)).collect())),
        ReportFormat::Text => items
            .into_iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}: {s}\n"),
                other => format!("{k}: {other}\n"),
            })
            .collect(),
    }
}

fn run_analyze(cli: &Cli, doc: &AlgebraDocument) -> Result<Output, HarnessError> {
    if cli.emit {
        return Ok(Output {
            text: emit(doc),
            code: EXIT_PASS,
        });
    }
    let inst = doc.instance()?;
    let a = analyze(doc, &inst, cli.tol)?;
    Ok(Output {
        text: render_analysis(&a, cli.report),
        code: if a.all_passed() { EXIT_PASS } else { EXIT_VIOLATION },
    })
}

fn run_grade_check(cli: &Cli, doc: &AlgebraDocument) -> Result<Output, HarnessError> {
    let moduli = doc
        .group
        .clone()
        .ok_or_else(|| HarnessError::Structure("grade-check needs a subgraded document".into()))?;
    match doc.instance() {
        Ok(Instance::Subgraded(s)) => {
            let dims: Vec<Value> = s.dims().into_iter().map(|(g, d)| json!(format!("{}:{d}", g.key()))).collect();
            let items = vec![
                ("group", json!(group_label(&moduli))),
                ("grading law verified", json!(true)),
                ("direct", json!(s.is_direct())),
                ("algebra dim", json!(s.algebra().dim())),
                ("component dims", Value::Array(dims)),
            ];
            Ok(Output {
                text: text_or_json(cli.report, items),
                code: EXIT_PASS,
            })
        }
        Ok(_) => Err(HarnessError::Structure("grade-check needs a subgraded document".into())),
        Err(HarnessError::Core(e @ (Error::GradingLaw { .. } | Error::ComponentSum { .. } | Error::NotContained))) => {
            let items = vec![("group", json!(group_label(&moduli))), ("grading law verified", json!(false)), ("violation", json!(e.to_string()))];
            Ok(Output {
                text: text_or_json(cli.report, items),
                code: EXIT_VIOLATION,
            })
        }
        Err(e) => Err(e),
    }
}

fn run_triangularize(cli: &Cli, doc: &AlgebraDocument) -> Result<Output, HarnessError> {
    let l = underlying_algebra(&doc.instance()?)?;
    let solvable = gradelie_core::lie::is_solvable(&l)?;
    let mut items = vec![("dim", json!(l.dim())), ("solvable", json!(solvable))];
    let mut code = EXIT_PASS;
    if solvable {
        let flag = triangularize_solvable(&l)?;
        let report = verify_flag(l.basis(), &flag, cli.tol)?;
        let basis = match &flag.basis_change {
            FlagBasis::Exact(p) => (0..p.n_cols())
                .map(|j| json!(p.col(j).iter().map(ToString::to_string).collect::<Vec<_>>()))
                .collect::<Vec<_>>(),
            FlagBasis::Numeric(p) => (0..p.n_cols())
                .map(|j| {
                    json!((0..p.n_rows())
                        .map(|i| {
                            let z = p.inner()[(i, j)];
                            format!("{:.12}{:+.12}i", z.re, z.im)
                        })
                        .collect::<Vec<_>>())
                })
                .collect(),
        };
        items.push(("flag", json!(if flag.is_exact() { "exact" } else { "numeric" })));
        items.push(("flag basis columns", Value::Array(basis)));
        items.push(("max residual", json!(report.residuals.iter().cloned().fold(0.0, f64::max))));
        items.push(("flag verified", json!(report.pass)));
        if !report.pass {
            code = EXIT_VIOLATION;
        }
    }
    Ok(Output {
        text: text_or_json(cli.report, items),
        code,
    })
}

fn run_irreducible(cli: &Cli, doc: &AlgebraDocument) -> Result<Output, HarnessError> {
    let l = underlying_algebra(&doc.instance()?)?;
    let v = decide_irreducible(l.n(), l.basis())?;
    let mut items = vec![
        ("irreducible", json!(v.irreducible)),
        ("associative closure dim", json!(v.assoc_dim)),
        ("full matrix algebra dim", json!(l.n() * l.n())),
    ];
    match &v.witness {
        Some(Witness::Exact(w)) => {
            items.push(("witness", json!("exact")));
            let vecs: Vec<Value> = w
                .basis()
                .iter()
                .map(|r| json!(r.iter().map(ToString::to_string).collect::<Vec<_>>()))
                .collect();
            items.push(("invariant subspace basis", Value::Array(vecs)));
        }
        Some(Witness::Numeric(w)) => {
            items.push(("witness", json!("numeric")));
            items.push(("invariant subspace dim", json!(w.dim())));
        }
        None => {}
    }
    Ok(Output {
        text: text_or_json(cli.report, items),
        code: EXIT_PASS,
    })
}

fn dispatch(cli: &Cli) -> Result<Output, HarnessError> {
    match &cli.command {
        Command::Analyze { file } => run_analyze(cli, &load(&input_path(cli, file)?)?),
        Command::GradeCheck { file } => run_grade_check(cli, &load(&input_path(cli, file)?)?),
        Command::Triangularize { file } => run_triangularize(cli, &load(&input_path(cli, file)?)?),
        Command::Irreducible { file } => run_irreducible(cli, &load(&input_path(cli, file)?)?),
        Command::Fuzz { lemma } => {
            let c = run_campaign(*lemma, cli.seed, cli.trials, cli.dim_max as usize);
            Ok(Output {
                text: render_campaign(&c, cli.report),
                code: if c.clean() { EXIT_PASS } else { EXIT_VIOLATION },
            })
        }
        Command::Example { name } => {
            let doc = build_example(name).ok_or_else(|| {
                HarnessError::Structure(format!("unknown example {name:?}; known: {}", EXAMPLE_NAMES.join(", ")))
            })?;
            run_analyze(cli, &doc)
        }
    }
}

/// Runs the CLI, writing the report to stdout and diagnostics to stderr.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let (out, err, code) = run_cli_captured(args);
    print!("{out}");
    eprint!("{err}");
    code
}

/// Like [`run_cli`], returning stdout, stderr and the exit code instead of printing.
pub fn run_cli_captured<I, T>(args: I) -> (String, String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_PASS,
                _ => EXIT_INPUT,
            };
            let rendered = e.render().to_string();
            return if code == EXIT_PASS {
                (rendered, String::new(), code)
            } else {
                (String::new(), rendered, code)
            };
        }
    };
    match dispatch(&cli) {
        Ok(o) => (o.text, String::new(), o.code),
        Err(e) => {
            let code = match e {
                HarnessError::Core(_) => EXIT_VIOLATION,
                _ => EXIT_INPUT,
            };
            (String::new(), format!("error: {e}\n"), code)
        }
    }
}
