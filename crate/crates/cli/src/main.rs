//! `quandle`: coloring counts, Φ polynomials and comparison reports for
//! oriented link diagrams.

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use quandle_core::diagram::{
    parse_pd_code, parse_relations_file_with, CatalogEntry, CATALOG_NAMES,
};
use quandle_core::invariants::colorings;
use quandle_core::solver::build_system;
use quandle_core::{
    compare, counting_invariant, phi_polynomial, AlexanderParams, DiagramError, Error,
    FiniteQuandle, LinkDiagram, QuandleError, QuandlePresentation, SolverError, TPolicy,
    Validation, DEFAULT_CAP,
};

#[derive(Parser)]
#[command(
    name = "quandle",
    version,
    about = "Quandle coloring invariants of link diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in diagrams.
    Catalog(Common),
    /// Print the crossing relations of a diagram.
    Relations {
        link: String,
        #[command(flatten)]
        common: Common,
    },
    /// Check that a table file satisfies the quandle axioms.
    ValidateQuandle {
        file: String,
        #[command(flatten)]
        common: Common,
    },
    /// Count (and optionally list) colorings.
    Colorings {
        link: String,
        #[command(flatten)]
        target: Target,
        /// Also list the colorings.
        #[arg(long)]
        enumerate: bool,
        #[command(flatten)]
        common: Common,
    },
    /// The Φ polynomial, Σ q^|Im f| over all colorings.
    Phi {
        link: String,
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        common: Common,
    },
    /// Compare two diagrams over a grid of Alexander quandles.
    Compare {
        link_a: String,
        link_b: String,
        /// Moduli, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<u64>,
        /// `all-units`, `involutory`, or a single integer.
        #[arg(long, default_value = "all-units")]
        t: TPolicy,
        #[command(flatten)]
        common: Common,
    },
    /// Dump the coloring system and its Smith form.
    Matrix {
        link: String,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        t: i64,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Largest number of colorings to materialize.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u64,
    /// Accept relation files whose arcs do not form closed strands.
    #[arg(long)]
    lenient: bool,
}

#[derive(Args)]
struct Target {
    #[arg(long, requires = "t", conflicts_with = "quandle_file")]
    n: Option<u64>,
    #[arg(long, requires = "n", allow_hyphen_values = true)]
    t: Option<i64>,
    /// Quandle table file instead of an Alexander quandle.
    #[arg(long, required_unless_present = "n")]
    quandle_file: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Serialize)]
struct OutputDocument {
    command: Vec<String>,
    inputs: Value,
    results: Value,
    exit_status: u8,
}

/// What a subcommand produced: text for people, a value for machines.
struct Report {
    inputs: Value,
    human: String,
    results: Value,
}

struct Failure {
    inputs: Value,
    code: u8,
    message: String,
}

impl Failure {
    fn new(inputs: &Value, err: impl Into<Error>) -> Self {
        let err = err.into();
        Failure {
            inputs: inputs.clone(),
            code: exit_code(&err),
            message: err.to_string(),
        }
    }

    fn io(inputs: &Value, path: &str, err: std::io::Error) -> Self {
        Failure {
            inputs: inputs.clone(),
            code: 2,
            message: format!("{path}: {err}"),
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Quandle(QuandleError::NotAUnit { .. }) => 4,
        Error::Solver(SolverError::CapExceeded { .. }) => 3,
        _ => 2,
    }
}

fn plural(count: usize, word: &str) -> String {
    if count == 1 {
        format!("{count} {word}")
    } else {
        format!("{count} {word}s")
    }
}

fn big(v: &BigUint) -> Value {
    Value::String(v.to_string())
}

fn load_link(name: &str, lenient: bool) -> Result<LinkDiagram, Failure> {
    let inputs = json!({ "link": name });
    if CATALOG_NAMES.contains(&name) {
        return CatalogEntry::get(name)
            .map(|e| e.diagram)
            .map_err(|e| Failure::new(&inputs, e));
    }
    let path = Path::new(name);
    if !path.exists() {
        return Err(Failure::new(
            &inputs,
            DiagramError::UnknownLink(name.to_string()),
        ));
    }
    let text = fs::read_to_string(path).map_err(|e| Failure::io(&inputs, name, e))?;
    let parsed = if path.extension().is_some_and(|e| e == "pd") {
        parse_pd_code(&text)
    } else {
        let validation = if lenient {
            Validation::Lenient
        } else {
            Validation::Strict
        };
        parse_relations_file_with(&text, validation)
    };
    parsed.map_err(|e| Failure::new(&inputs, e))
}

fn load_quandle(target: &Target, inputs: &Value) -> Result<FiniteQuandle, Failure> {
    match (&target.quandle_file, target.n, target.t) {
        (Some(file), _, _) => {
            let text = fs::read_to_string(file).map_err(|e| Failure::io(inputs, file, e))?;
            FiniteQuandle::parse_table_file(&text).map_err(|e| Failure::new(inputs, e))
        }
        (None, Some(n), Some(t)) => {
            FiniteQuandle::alexander(n, t).map_err(|e| Failure::new(inputs, e))
        }
        _ => unreachable!("clap enforces either --n/--t or --quandle-file"),
    }
}

fn target_inputs(link: &str, target: &Target, common: &Common) -> Value {
    json!({
        "link": link,
        "n": target.n,
        "t": target.t,
        "quandle_file": target.quandle_file,
        "cap": common.cap,
    })
}

fn cmd_catalog() -> Report {
    let mut human = String::new();
    let mut rows = Vec::new();
    for entry in CatalogEntry::all() {
        let d = &entry.diagram;
        human.push_str(&format!(
            "{} {} {} {}\n",
            entry.name,
            plural(d.arc_count(), "arc"),
            plural(d.crossing_count(), "crossing"),
            plural(d.component_count(), "component"),
        ));
        rows.push(json!({
            "name": entry.name,
            "arcs": d.arc_count(),
            "crossings": d.crossing_count(),
            "components": d.component_count(),
        }));
    }
    Report {
        inputs: json!({}),
        human,
        results: json!({ "links": rows }),
    }
}

fn cmd_relations(link: &str, common: &Common) -> Result<Report, Failure> {
    let d = load_link(link, common.lenient)?;
    let text = QuandlePresentation::extract(&d).to_relations_text();
    let results = json!({
        "arcs": d.arc_count(),
        "crossings": d.crossing_count(),
        "components": d.component_count(),
        "free_circles": d.free_circles(),
        "relations": text.lines().collect::<Vec<_>>(),
    });
    Ok(Report {
        inputs: json!({ "link": link }),
        human: text,
        results,
    })
}

fn cmd_validate_quandle(file: &str) -> Result<Report, Failure> {
    let inputs = json!({ "file": file });
    let text = fs::read_to_string(file).map_err(|e| Failure::io(&inputs, file, e))?;
    let q = FiniteQuandle::parse_table_file(&text).map_err(|e| Failure::new(&inputs, e))?;
    let involutory = q.is_involutory();
    let human = format!(
        "valid quandle of order {}\ninvolutory: {}\n",
        q.order(),
        if involutory { "yes" } else { "no" }
    );
    let results = json!({ "valid": true, "order": q.order(), "involutory": involutory });
    Ok(Report {
        inputs,
        human,
        results,
    })
}

fn cmd_colorings(
    link: &str,
    target: &Target,
    enumerate: bool,
    common: &Common,
) -> Result<Report, Failure> {
    let mut inputs = target_inputs(link, target, common);
    inputs["enumerate"] = json!(enumerate);
    let d = load_link(link, common.lenient).map_err(|f| Failure {
        inputs: inputs.clone(),
        ..f
    })?;
    let q = load_quandle(target, &inputs)?;
    let p = QuandlePresentation::extract(&d);
    let count = counting_invariant(&p, &q);
    let mut human = format!("{count}\n");
    let mut results = json!({ "count": big(&count) });
    if enumerate {
        let listed = colorings(&p, &q, common.cap).map_err(|e| Failure::new(&inputs, e))?;
        for c in &listed {
            human.push_str(&format!("{c}\n"));
        }
        results["colorings"] = json!(listed.iter().map(|c| &c.assignment).collect::<Vec<_>>());
    }
    Ok(Report {
        inputs,
        human,
        results,
    })
}

fn cmd_phi(link: &str, target: &Target, common: &Common) -> Result<Report, Failure> {
    let inputs = target_inputs(link, target, common);
    let d = load_link(link, common.lenient).map_err(|f| Failure {
        inputs: inputs.clone(),
        ..f
    })?;
    let q = load_quandle(target, &inputs)?;
    let p = QuandlePresentation::extract(&d);
    let phi = phi_polynomial(&p, &q, common.cap).map_err(|e| Failure::new(&inputs, e))?;
    let terms: Vec<Value> = phi
        .terms()
        .iter()
        .map(|(e, c)| json!({ "exponent": e, "coefficient": big(c) }))
        .collect();
    let results = json!({
        "polynomial": phi.to_string(),
        "terms": terms,
        "count": big(&phi.total()),
    });
    Ok(Report {
        inputs,
        human: format!("{phi}\n"),
        results,
    })
}

fn cmd_compare(
    link_a: &str,
    link_b: &str,
    moduli: &[u64],
    policy: TPolicy,
    common: &Common,
) -> Result<Report, Failure> {
    let inputs = json!({
        "link_a": link_a,
        "link_b": link_b,
        "n": moduli,
        "t": policy.to_string(),
        "cap": common.cap,
    });
    let with_inputs = |f: Failure| Failure {
        inputs: inputs.clone(),
        ..f
    };
    let a = QuandlePresentation::extract(&load_link(link_a, common.lenient).map_err(with_inputs)?);
    let b = QuandlePresentation::extract(&load_link(link_b, common.lenient).map_err(with_inputs)?);
    let report = compare((link_a, &a), (link_b, &b), moduli, policy, common.cap)
        .map_err(|e| Failure::new(&inputs, e))?;
    let results = serde_json::to_value(&report).expect("report serializes");
    Ok(Report {
        inputs,
        human: report.to_text(),
        results,
    })
}

fn cmd_matrix(link: &str, n: u64, t: i64, common: &Common) -> Result<Report, Failure> {
    let inputs = json!({ "link": link, "n": n, "t": t });
    let d = load_link(link, common.lenient).map_err(|f| Failure {
        inputs: inputs.clone(),
        ..f
    })?;
    let params = AlexanderParams::new(n, t).map_err(|e| Failure::new(&inputs, e))?;
    let sys = build_system(&QuandlePresentation::extract(&d), params);
    let smith = sys.smith();
    let strings = |rows: Vec<Vec<num_bigint::BigInt>>| -> Vec<Vec<String>> {
        rows.iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect()
    };
    let results = json!({
        "rows": sys.rows(),
        "cols": sys.cols(),
        "t": params.t(),
        "matrix": strings(sys.matrix().to_rows()),
        "reduced": strings(smith.reduced().to_rows()),
        "invariant_factors": smith.invariant_factors().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "count": big(&quandle_core::solver::count_solutions(&sys, n)),
    });
    Ok(Report {
        inputs,
        human: sys.dump(),
        results,
    })
}

fn run(command: &Command) -> Result<Report, Failure> {
    match command {
        Command::Catalog(_) => Ok(cmd_catalog()),
        Command::Relations { link, common } => cmd_relations(link, common),
        Command::ValidateQuandle { file, .. } => cmd_validate_quandle(file),
        Command::Colorings {
            link,
            target,
            enumerate,
            common,
        } => cmd_colorings(link, target, *enumerate, common),
        Command::Phi {
            link,
            target,
            common,
        } => cmd_phi(link, target, common),
        Command::Compare {
            link_a,
            link_b,
            n,
            t,
            common,
        } => cmd_compare(link_a, link_b, n, *t, common),
        Command::Matrix { link, n, t, common } => cmd_matrix(link, *n, *t, common),
    }
}

fn common(command: &Command) -> &Common {
    match command {
        Command::Catalog(common)
        | Command::Relations { common, .. }
        | Command::ValidateQuandle { common, .. }
        | Command::Colorings { common, .. }
        | Command::Phi { common, .. }
        | Command::Compare { common, .. }
        | Command::Matrix { common, .. } => common,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let format = common(&cli.command).format;
    let (doc, human, error) = match run(&cli.command) {
        Ok(r) => {
            let doc = OutputDocument {
                command: argv,
                inputs: r.inputs,
                results: r.results,
                exit_status: 0,
            };
            (doc, r.human, None)
        }
        Err(f) => {
            let doc = OutputDocument {
                command: argv,
                inputs: f.inputs,
                results: json!({ "error": f.message }),
                exit_status: f.code,
            };
            (doc, String::new(), Some(f.message))
        }
    };
    match format {
        Format::Human => print!("{human}"),
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("document serializes")
            )
        }
    }
    if let Some(message) = error {
        eprintln!("error: {message}");
    }
    ExitCode::from(doc.exit_status)
}
