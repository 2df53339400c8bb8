//! `signet`: build signed graphs, take products and line graphs, compute
//! spectra and energies, and run the verification suites.

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgMatches, Args, CommandFactory, FromArgMatches, Parser, Subcommand};
use serde_json::{json, Value};
use signet::families::FamilySpec;
use signet::verify::{self, VerifyConfig};
use signet::{balance_report, io as gio, line_graph, products, spectra, Basis, SignedGraph, SymMatrix};

#[derive(Parser)]
#[command(name = "signet", version, about = "Build signed graphs, take NEPS products and line graphs, compute spectra and energies")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spectrum, Laplacian spectrum, energies and balance of a graph.
    Spectrum {
        #[command(flatten)]
        input: Input,
        /// Use the line graph of the input instead.
        #[arg(long)]
        line: bool,
        /// Adjacency eigenvalues only, one per line.
        #[arg(long)]
        csv: bool,
        /// Include the adjacency, degree and Laplacian matrices.
        #[arg(long)]
        matrix: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// NEPS product of two or more graphs, as canonical graph JSON.
    Product {
        #[command(flatten)]
        input: Input,
        /// `cartesian`, `strong`, `p=<k>` or comma-separated bit strings such as `10,01,11`.
        #[arg(long, default_value = "cartesian")]
        basis: String,
        #[arg(long)]
        matrix: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Signed line graph, as canonical graph JSON.
    Line {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        matrix: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run property suites; all of them when none is named.
    Verify {
        suites: Vec<String>,
        /// Size cap: corpus order, family parameter or product order, by suite.
        #[arg(long)]
        max: Option<usize>,
        /// Defaults to $SIGNET_SEED, then to the built-in seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Emit the reports as JSON.
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Graph sources, taken in command-line order.
#[derive(Args)]
struct Input {
    /// Family string such as `torus:m=4,r1=1,n=5,r2=0`.
    #[arg(long)]
    family: Vec<String>,
    /// Graph JSON file; `-` reads standard input.
    #[arg(long)]
    file: Vec<PathBuf>,
    /// Family strings or file paths.
    inputs: Vec<String>,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Numerical(String),
    /// Verification ran and something failed; the report is already out.
    Verify,
}

impl From<signet::Error> for Failure {
    fn from(e: signet::Error) -> Self {
        if e.is_numerical() {
            Failure::Numerical(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

type CliResult<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let matches = Cli::command().get_matches();
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    let sub = matches.subcommand().map(|(_, m)| m).expect("subcommand is required");
    match run(cli.command, sub) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Numerical(msg)) => {
            eprintln!("numerical failure: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command, matches: &ArgMatches) -> CliResult<()> {
    match command {
        Command::Spectrum { input, line, csv, matrix, out } => {
            let mut g = single(read_inputs(&input, matches)?)?;
            if line {
                g = line_graph(&g).graph;
            }
            let text = if csv {
                spectra::spectrum(&g)?.values().iter().map(|&x| format!("{}\n", sig12(x))).collect()
            } else {
                let mut report = spectrum_report(&g)?;
                if matrix {
                    report["matrices"] = matrices(&g);
                }
                pretty(&report)
            };
            emit(&text, out)
        }
        Command::Product { input, basis, matrix, out } => {
            let factors = read_inputs(&input, matches)?;
            if factors.len() < 2 {
                return Err(Failure::Input(format!("product needs at least two graphs, got {}", factors.len())));
            }
            let basis = parse_basis(&basis, factors.len())?;
            let g = products::neps(&factors, &basis)?.canonical();
            emit(&graph_output(&g, matrix), out)
        }
        Command::Line { input, matrix, out } => {
            let g = line_graph(&single(read_inputs(&input, matches)?)?).graph.canonical();
            emit(&graph_output(&g, matrix), out)
        }
        Command::Verify { suites, max, seed, json, out } => {
            for s in &suites {
                if !verify::SUITES.contains(&s.as_str()) {
                    return Err(signet::Error::UnknownSuite(s.clone()).into());
                }
            }
            let mut names: Vec<&str> = if suites.is_empty() {
                verify::SUITES.to_vec()
            } else {
                verify::SUITES.iter().copied().filter(|s| suites.iter().any(|x| x == s)).collect()
            };
            names.dedup();
            let config = VerifyConfig { max, seed: seed.unwrap_or_else(signet::random::seed_from_env) };
            let reports = run_parallel(&names, &config)?;
            let text = if json {
                pretty(&json!({ "seed": config.seed, "max": config.max, "suites": reports }))
            } else {
                reports.iter().map(ToString::to_string).collect()
            };
            emit(&text, out)?;
            if reports.iter().all(verify::SuiteReport::passed) {
                Ok(())
            } else {
                Err(Failure::Verify)
            }
        }
    }
}

/// Suites run on their own threads; results come back in name order.
fn run_parallel(names: &[&str], config: &VerifyConfig) -> CliResult<Vec<verify::SuiteReport>> {
    let results: Vec<signet::Result<verify::SuiteReport>> = std::thread::scope(|scope| {
        let handles: Vec<_> = names.iter().map(|&n| scope.spawn(move || verify::run_suite(n, config))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    });
    results.into_iter().map(|r| r.map_err(Failure::from)).collect()
}

fn read_inputs(input: &Input, matches: &ArgMatches) -> CliResult<Vec<SignedGraph>> {
    // Interleave the three sources by their position on the command line.
    let mut tagged: Vec<(usize, Source)> = Vec::new();
    let positions = |id: &str| matches.indices_of(id).map(Iterator::collect::<Vec<_>>).unwrap_or_default();
    for (s, i) in input.family.iter().zip(positions("family")) {
        tagged.push((i, Source::Family(s.clone())));
    }
    for (p, i) in input.file.iter().zip(positions("file")) {
        tagged.push((i, Source::File(p.clone())));
    }
    for (s, i) in input.inputs.iter().zip(positions("inputs")) {
        let src = if FamilySpec::looks_like(s) { Source::Family(s.clone()) } else { Source::File(s.into()) };
        tagged.push((i, src));
    }
    tagged.sort_by_key(|t| t.0);
    tagged.into_iter().map(|(_, s)| s.load()).collect()
}

enum Source {
    Family(String),
    File(PathBuf),
}

impl Source {
    fn load(self) -> CliResult<SignedGraph> {
        match self {
            Source::Family(s) => Ok(s.parse::<FamilySpec>()?.build()?),
            Source::File(p) => {
                let text = if p.as_os_str() == "-" {
                    let mut s = String::new();
                    io::stdin().read_to_string(&mut s).map_err(|e| Failure::Input(format!("stdin: {e}")))?;
                    s
                } else {
                    fs::read_to_string(&p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?
                };
                gio::from_json_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))
            }
        }
    }
}

fn single(mut graphs: Vec<SignedGraph>) -> CliResult<SignedGraph> {
    match graphs.len() {
        1 => Ok(graphs.remove(0)),
        0 => Err(Failure::Input("no input graph; use --family or --file".into())),
        k => Err(Failure::Input(format!("expected one input graph, got {k}"))),
    }
}

fn parse_basis(s: &str, nu: usize) -> CliResult<Basis> {
    let b = match s.trim() {
        "cartesian" => Basis::cartesian(nu)?,
        "strong" => Basis::strong(nu)?,
        t => match t.strip_prefix("p=") {
            Some(p) => {
                let p = p.parse().map_err(|_| Failure::Input(format!("bad p in basis {s:?}")))?;
                Basis::symmetric(nu, p)?
            }
            None => t.parse::<Basis>()?,
        },
    };
    if b.nu() != nu {
        return Err(signet::Error::FactorCount { basis: b.nu(), factors: nu }.into());
    }
    Ok(b)
}

fn spectrum_report(g: &SignedGraph) -> CliResult<Value> {
    let s = spectra::spectrum(g)?;
    let ls = spectra::laplacian_spectrum(g)?;
    let lap_energy = if g.order() == 0 { 0.0 } else { spectra::laplacian_energy_of(&ls, g.average_degree()) };
    let b = balance_report(g);
    Ok(json!({
        "spectrum": rounded(s.values()),
        "laplacian_spectrum": rounded(ls.values()),
        "energy": sig12(s.sum_abs()),
        "laplacian_energy": sig12(lap_energy),
        "balance": { "b": b.b(), "c": b.c(), "c_b": b.c_b(), "balanced": b.is_balanced() },
    }))
}

fn matrices(g: &SignedGraph) -> Value {
    let rows = |m: SymMatrix| m.into_matrix().to_rows();
    json!({
        "adjacency": rows(g.adjacency()),
        "degree": rows(g.degree_matrix()),
        "laplacian": rows(g.laplacian()),
    })
}

/// Canonical graph JSON, or graph plus matrices when asked.
fn graph_output(g: &SignedGraph, with_matrices: bool) -> String {
    if with_matrices {
        let graph: Value = serde_json::from_str(&gio::to_json_string(g)).expect("own output parses");
        let mut v = json!({ "graph": graph });
        if let (Value::Object(o), Value::Object(m)) = (&mut v, matrices(g)) {
            o.extend(m);
        }
        pretty(&v)
    } else {
        format!("{}\n", gio::to_json_string(g))
    }
}

/// Below this, output values are solver noise around zero.
const ZERO_SNAP: f64 = 1e-10;

/// Rounds to 12 significant digits and prints the shortest decimal form.
fn sig12(x: f64) -> f64 {
    let r: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    if r.abs() < ZERO_SNAP {
        0.0
    } else {
        r
    }
}

fn rounded(xs: &[f64]) -> Vec<f64> {
    xs.iter().map(|&x| sig12(x)).collect()
}

fn pretty(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("JSON values serialise"))
}

fn emit(text: &str, out: Option<PathBuf>) -> CliResult<()> {
    match out {
        Some(p) => fs::write(&p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(sig12(0.999_999_999_999_9).to_string(), "1");
        assert_eq!(sig12(-1e-17).to_string(), "0");
        assert_eq!(sig12(1.234_567_890_123_4).to_string(), "1.23456789012");
        assert_eq!(sig12(-2.0).to_string(), "-2");
    }

    #[test]
    fn bases() {
        assert_eq!(parse_basis("p=1", 3).unwrap(), Basis::cartesian(3).unwrap());
        assert_eq!(parse_basis("strong", 2).unwrap().to_string(), "11");
        assert!(matches!(parse_basis("11", 3), Err(Failure::Input(_))));
        assert!(matches!(parse_basis("p=x", 2), Err(Failure::Input(_))));
    }
}
