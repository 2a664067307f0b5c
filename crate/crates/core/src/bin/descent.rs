use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use descent_core::coxeter::{CoxeterDatum, CoxeterType, Gate, DEFAULT_GATE};
use descent_core::descent::{Basis, DescentAlgebra, DescentVector};
use descent_core::golden::{self, CheckReport};
use descent_core::presentation::{Part, QuiverPresentation};
use descent_core::render;
use descent_core::Error;

#[derive(Parser)]
#[command(name = "descent", version, about = "Quiver presentations of descent algebras of finite Coxeter groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, global = true, value_enum, default_value_t = Parts::Full)]
    parts: Parts,
    /// Largest group order that may be enumerated element by element.
    #[arg(long, global = true, default_value_t = DEFAULT_GATE)]
    gate: u128,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Vertices and arrows of the quiver.
    Quiver { ctype: String },
    /// Cartan matrix.
    Cartan { ctype: String },
    /// Loewy series of the indecomposable projectives.
    Loewy { ctype: String },
    /// Minimal relations.
    Relations { ctype: String },
    /// Whether the algebra is a path algebra and whether it is commutative.
    Classify { ctype: String },
    /// Compare with the embedded reference tables.
    Check {
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        ctype: Option<String>,
        #[arg(long)]
        all: bool,
        /// With --all, include E8.
        #[arg(long, requires = "all")]
        long: bool,
        /// Require the enumeration cross-checks instead of skipping them above the gate.
        #[arg(long)]
        oracle: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Parts {
    Full,
    Even,
    Odd,
}

impl From<Parts> for Part {
    fn from(p: Parts) -> Part {
        match p {
            Parts::Full => Part::Full,
            Parts::Even => Part::Even,
            Parts::Odd => Part::Odd,
        }
    }
}

enum Failure {
    Usage(String),
    Mismatch,
    Gate(Error),
    Other(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ParseType(_) | Error::UnsupportedType(_) => Failure::Usage(e.to_string()),
            Error::GateExceeded { .. } => Failure::Gate(e),
            e => Failure::Other(e),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n");
            eprintln!("{}", Cli::command().render_usage());
            ExitCode::from(2)
        }
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Gate(e)) => {
            eprintln!("error: {e}; raise it with --gate");
            ExitCode::from(3)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(4)
        }
    }
}

fn presentation(label: &str) -> Result<QuiverPresentation, Failure> {
    let t: CoxeterType = label.parse()?;
    Ok(QuiverPresentation::new(CoxeterDatum::new(t)?)?)
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let part = Part::from(cli.parts);
    let gate = Gate::new(cli.gate);
    let table = |label: &str, text: fn(&QuiverPresentation, Part) -> String| -> Result<(), Failure> {
        let q = presentation(label)?;
        match cli.format {
            Format::Text => print!("{}", text(&q, part)),
            Format::Json => println!("{}", render::render_json(&q, part)),
            Format::Dot => return Err(Failure::Usage("--format dot applies to `quiver` only".into())),
        }
        Ok(())
    };
    match &cli.command {
        Command::Quiver { ctype } => {
            let q = presentation(ctype)?;
            match cli.format {
                Format::Text => print!("{}", render::quiver_text(&q, part)),
                Format::Json => println!("{}", render::render_json(&q, part)),
                Format::Dot => print!("{}", render::render_dot(&q, part)),
            }
        }
        Command::Cartan { ctype } => table(ctype, render::cartan_text)?,
        Command::Loewy { ctype } => table(ctype, render::loewy_text)?,
        Command::Relations { ctype } => table(ctype, render::relations_text)?,
        Command::Classify { ctype } => {
            let q = presentation(ctype)?;
            match cli.format {
                Format::Text => print!("{}", render::classify_text(&q)),
                Format::Json => {
                    let c = q.classify();
                    let v = serde_json::json!({
                        "type": q.type_label(),
                        "is_path_algebra": c.is_path_algebra,
                        "is_commutative": c.is_commutative,
                        "central": q.parity().is_central(),
                    });
                    println!("{}", serde_json::to_string_pretty(&v).expect("json value serializes"));
                }
                Format::Dot => return Err(Failure::Usage("--format dot applies to `quiver` only".into())),
            }
        }
        Command::Check { ctype, all, long, oracle } => {
            let labels = match ctype {
                Some(t) => vec![t.clone()],
                None => golden::golden_types(*long),
            };
            let mut ok = true;
            for label in &labels {
                let report = check(label, gate, *oracle)?;
                print!("{report}");
                ok &= report.passed();
            }
            if *all {
                for label in golden::classification_types() {
                    let q = presentation(&label)?;
                    let mut report = CheckReport::new(q.type_label());
                    golden::compare_classification(&q, &mut report);
                    oracle_checks(&q, gate, *oracle, &mut report)?;
                    print!("{report}");
                    ok &= report.passed();
                }
            }
            if !ok {
                return Err(Failure::Mismatch);
            }
        }
    }
    Ok(())
}

fn check(label: &str, gate: Gate, oracle: bool) -> Result<CheckReport, Failure> {
    let q = presentation(label)?;
    let mut report = match golden::record_for(q.datum().ctype()) {
        Some(rec) => golden::compare(&q, rec),
        None => CheckReport::new(q.type_label()),
    };
    golden::compare_classification(&q, &mut report);
    oracle_checks(&q, gate, oracle, &mut report)?;
    Ok(report)
}

/// Dimension certificates, plus the checks that enumerate `W` when it fits
/// under the gate.
fn oracle_checks(q: &QuiverPresentation, gate: Gate, force: bool, report: &mut CheckReport) -> Result<(), Failure> {
    let n = q.datum().rank();
    let dim = q.algebra().dim();
    report.push("dimension", dim == 1 << n, format!("rank of Δ over streets {dim}, 2^{n} = {}", 1 << n));
    report.push(
        "relations certificate",
        q.quotient_dim() == 1 << n,
        format!("path algebra modulo relations has dimension {}", q.quotient_dim()),
    );
    let alg = DescentAlgebra::new(q.datum().clone(), gate);
    if !alg.oracle_available() {
        if force {
            gate.check("enumerate W", q.datum().group_order_u128())?;
        }
        report.push("enumeration", true, format!("skipped, |W| = {} exceeds the gate {}", q.datum().group_order(), gate.bound));
        return Ok(());
    }
    let rank = alg.y_basis_rank()?;
    report.push("y basis", rank == 1 << n, format!("rank of {{y_K}} in the group algebra {rank}"));
    let w0 = alg.convert(&DescentVector::basis_element(Basis::Y, n, Default::default()), Basis::E)?;
    let ok = w0 == alg.w0_vector() && q.algebra().sigma_product(&w0, &w0)? == alg.identity(Basis::E);
    report.push("w0", ok, "y_∅ = Σ (-1)^|L| e_L and squares to 1");
    Ok(())
}
