//! The nilgraph command line: analyze Cayley tables, export the associated
//! graphs, enumerate small semigroups, search for graph realizations, and
//! run the verification suite.
//!
//! Exit codes: 0 success, 1 check failure, 2 input error.

mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use nilgraph::constructions::{fixture_by_name, fixture_names};
use nilgraph::enumeration::{
    enumerate_semigroups_with, realizability_search_with, EnumerateOptions,
};
use nilgraph::graphs::{
    complete_graph, cycle_graph, empty_graph, path_graph, star_graph, SimpleGraph,
};
use nilgraph::io::{emit_cayley_table, parse_cayley_table};
use nilgraph::verify;
use nilgraph::{Error, FiniteSemigroup, IsoModulus};

#[derive(Parser)]
#[command(
    name = "nilgraph",
    version,
    about = "Nilpotency and graph analysis of finite semigroups"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphKind {
    Upper,
    Lower,
    Noncommuting,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphOut {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Modulo {
    Iso,
    Isoanti,
}

impl From<Modulo> for IsoModulus {
    fn from(m: Modulo) -> Self {
        match m {
            Modulo::Iso => IsoModulus::Iso,
            Modulo::Isoanti => IsoModulus::IsoAnti,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Level {
    Fast,
    Full,
}

#[derive(Subcommand)]
enum Cmd {
    /// Analyze a semigroup: structure flags, nilpotency, Engel-type
    /// conditions, graph summaries, and a non-nilpotency witness.
    Analyze {
        /// A table file path, or fixture:NAME for a built-in example.
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Export one of the three graphs of a semigroup.
    Graph {
        /// A table file path, or fixture:NAME for a built-in example.
        input: String,
        #[arg(long, value_enum)]
        kind: GraphKind,
        #[arg(long, value_enum, default_value_t = GraphOut::Dot)]
        out: GraphOut,
        /// Write to a file instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List all semigroups of a small order, one canonical representative
    /// per class.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Modulo::Isoanti)]
        modulo: Modulo,
        /// Write one table file per class into this directory.
        #[arg(long)]
        emit: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Allow the hard cap of order 6 (slow).
        #[arg(long)]
        allow_order_6: bool,
    },
    /// Search the enumeration stream for a semigroup whose upper
    /// non-nilpotent graph matches the given one.
    Realize {
        /// A named family (p4, c5, k4, star5, empty3) or a JSON edge list
        /// {"order":N,"edges":[[i,j],...]}.
        #[arg(long)]
        graph: String,
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Run the verification suite: fixture facts, corpus invariants,
    /// enumeration counts, realizability facts, and (at the full level) the
    /// order-5 batch check.
    VerifyPaper {
        #[arg(long, value_enum, default_value_t = Level::Fast)]
        level: Level,
        /// Seed for the sampled cross-checks.
        #[arg(long, default_value_t = 20260810)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn load_input(input: &str) -> Result<(String, FiniteSemigroup), Error> {
    if let Some(name) = input.strip_prefix("fixture:") {
        let s = fixture_by_name(name).ok_or_else(|| Error::Parse {
            line: 1,
            column: 1,
            message: format!(
                "unknown fixture '{name}'; available: {}",
                fixture_names().join(", ")
            ),
        })?;
        Ok((input.to_string(), s))
    } else {
        let text = fs::read_to_string(input).map_err(|e| Error::Parse {
            line: 1,
            column: 1,
            message: format!("cannot read '{input}': {e}"),
        })?;
        Ok((input.to_string(), parse_cayley_table(&text)?))
    }
}

fn parse_graph_spec(spec: &str) -> Result<SimpleGraph, String> {
    let named = |family: &str, n: usize| -> Result<SimpleGraph, String> {
        if n == 0 {
            return Err("graph families need at least one vertex".into());
        }
        match family {
            "p" => Ok(path_graph(n)),
            "c" if n >= 3 => Ok(cycle_graph(n)),
            "c" => Err("cycle graphs need at least 3 vertices".into()),
            "k" => Ok(complete_graph(n)),
            "star" | "s" => Ok(star_graph(n)),
            "empty" | "e" => Ok(empty_graph(n)),
            _ => Err(format!("unknown graph family '{family}'")),
        }
    };
    let spec = spec.trim();
    if spec.starts_with('{') {
        let v: serde_json::Value =
            serde_json::from_str(spec).map_err(|e| format!("bad graph JSON: {e}"))?;
        let order = v["order"]
            .as_u64()
            .ok_or("graph JSON needs an integer 'order'")? as usize;
        if order == 0 {
            return Err("graph order must be positive".into());
        }
        let mut g = SimpleGraph::new(order);
        let edges = v["edges"].as_array().ok_or("graph JSON needs 'edges'")?;
        for e in edges {
            let pair = e.as_array().filter(|p| p.len() == 2).ok_or("edges are [i,j] pairs")?;
            let (i, j) = (
                pair[0].as_u64().ok_or("edge endpoints are integers")? as usize,
                pair[1].as_u64().ok_or("edge endpoints are integers")? as usize,
            );
            if i == j || i >= order || j >= order {
                return Err(format!("bad edge [{i},{j}] for order {order}"));
            }
            g.add_edge(i, j);
        }
        return Ok(g);
    }
    let split = spec.find(|c: char| c.is_ascii_digit()).ok_or_else(|| {
        format!("graph spec '{spec}' is neither a named family nor JSON")
    })?;
    let (family, digits) = spec.split_at(split);
    let n: usize = digits
        .parse()
        .map_err(|_| format!("bad vertex count in '{spec}'"))?;
    named(&family.to_ascii_lowercase(), n)
}

fn write_or_print(output: Option<&PathBuf>, content: &str) -> std::io::Result<()> {
    match output {
        Some(path) => fs::write(path, content),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn input_error(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(2)
}

fn run() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Analyze { input, format } => {
            let (name, s) = match load_input(&input) {
                Ok(x) => x,
                Err(e) => return input_error(&e),
            };
            let rep = report::analyze(&name, &s);
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&rep).expect("report serializes")
                ),
                Format::Text => print!("{}", report::render_text(&rep)),
            }
            ExitCode::SUCCESS
        }
        Cmd::Graph {
            input,
            kind,
            out,
            output,
        } => {
            let (_, s) = match load_input(&input) {
                Ok(x) => x,
                Err(e) => return input_error(&e),
            };
            let g = match kind {
                GraphKind::Upper => s.upper_graph(),
                GraphKind::Lower => s.lower_graph(),
                GraphKind::Noncommuting => s.noncommuting_graph(),
            };
            let content = match out {
                GraphOut::Dot => g.to_dot(),
                GraphOut::Json => format!("{}\n", g.to_edge_list_json()),
            };
            match write_or_print(output.as_ref(), &content) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Cmd::Enumerate {
            order,
            modulo,
            emit,
            jobs,
            allow_order_6,
        } => {
            let opts = EnumerateOptions {
                jobs,
                allow_order_six: allow_order_6,
            };
            let stream = match enumerate_semigroups_with(order, modulo.into(), &opts) {
                Ok(s) => s,
                Err(e) => return input_error(&e),
            };
            if let Some(dir) = &emit {
                if let Err(e) = fs::create_dir_all(dir) {
                    eprintln!("error: cannot create '{}': {e}", dir.display());
                    return ExitCode::from(2);
                }
                for (i, s) in stream.iter().enumerate() {
                    let path = dir.join(format!("{i:04}.txt"));
                    if let Err(e) = fs::write(&path, emit_cayley_table(s)) {
                        eprintln!("error: cannot write '{}': {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
            }
            println!("{}", report::enumeration_summary(order, modulo.into(), &stream));
            ExitCode::SUCCESS
        }
        Cmd::Realize { graph, order, jobs } => {
            let g = match parse_graph_spec(&graph) {
                Ok(g) => g,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    return ExitCode::from(2);
                }
            };
            let opts = EnumerateOptions {
                jobs,
                allow_order_six: false,
            };
            match realizability_search_with(&g, order, &opts) {
                Ok(Some(s)) => {
                    print!("{}", emit_cayley_table(&s));
                    ExitCode::SUCCESS
                }
                Ok(None) => {
                    println!("none");
                    ExitCode::SUCCESS
                }
                Err(e) => input_error(&e),
            }
        }
        Cmd::VerifyPaper { level, seed, jobs } => {
            let suite = match level {
                Level::Fast => verify::fast_suite(seed),
                Level::Full => verify::full_suite(seed, jobs),
            };
            let suite = match suite {
                Ok(s) => s,
                Err(e) => return input_error(&e),
            };
            for c in &suite.checks {
                if c.passed() {
                    println!("PASS {} ({} checked)", c.name, c.passes);
                } else {
                    println!("FAIL {} ({} failures)", c.name, c.failures);
                }
            }
            if suite.all_passed() {
                println!("all {} checks passed", suite.checks.len());
                ExitCode::SUCCESS
            } else {
                println!("{}", report::failures_json(&suite));
                ExitCode::from(1)
            }
        }
    }
}

fn main() -> ExitCode {
    run()
}
