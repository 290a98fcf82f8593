//! `p3conv`: analyze graphs with the closed-form P3-convexity formulas,
//! generate instance corpora and run formula-versus-oracle cross-validation.

mod analyze;
mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use p3_convexity::crossval::{run_suite, CrossvalConfig, Suite, ValidationReport};
use p3_convexity::generate::{self, seeded};
use p3_convexity::hereditary::{crosscheck_property_p, CrosscheckReport};
use p3_convexity::io::{parse_graph, to_graph6, GraphDocument};
use p3_convexity::{Error, Oracle, OracleCaps};
use serde_json::json;

use output::{Format, Record};

const EXIT_DISAGREEMENT: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "p3conv", version, about = "P3-convexity formulas for caterpillars and unit interval graphs")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,

    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Largest number of enumerated vertices the brute-force oracles accept.
    #[arg(long, global = true, default_value_t = 18)]
    max_oracle_n: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Recognize a graph document and evaluate the formulas for its class.
    Analyze {
        path: PathBuf,
        /// Also compute g, h and τ by exhaustive search.
        #[arg(long)]
        oracle: bool,
    },
    /// Write a stream of graph documents.
    Generate {
        #[arg(value_enum)]
        kind: Kind,
        /// Spine length, vertex count or upper bound, depending on the kind.
        #[arg(long)]
        size: usize,
        /// Number of random instances.
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Compare formulas with the oracles over a generated corpus.
    Crossval {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Random instances per suite.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Also write the report to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compare the forbidden-pattern test of property P with the direct check.
    Propcheck {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Random graphs per order above the exhaustive range.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    CaterpillarExhaustive,
    CaterpillarRandom,
    UigRandom,
    #[value(name = "uig-2connected-random")]
    Uig2connectedRandom,
    AllConnected,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

/// Failures mapped to exit codes: 1 for usage and input errors, 3 for caps.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => Failure::Cap(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_CAP)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let oracle = Oracle::new(OracleCaps::uniform(cli.max_oracle_n));
    match &cli.command {
        Command::Analyze { path, oracle: with_oracle } => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            let doc = parse_graph(&text)?;
            let result = analyze::analyze(&doc, with_oracle.then_some(&oracle))?;
            print!("{}", result.record.render(cli.format));
            Ok(if result.disagreement { EXIT_DISAGREEMENT } else { 0 })
        }
        Command::Generate { kind, size, count } => {
            print!("{}", generate_documents(*kind, *size, *count, cli.seed)?);
            Ok(0)
        }
        Command::Crossval { suite, max_n, samples, output } => {
            let cfg = CrossvalConfig { max_n: *max_n, seed: cli.seed, oracle, samples: *samples };
            let report = run_suite(*suite, &cfg)?;
            let text = render_report(&report, cli.format);
            emit(&text, output.as_ref())?;
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            Ok(if report.summary.disagreements > 0 {
                EXIT_DISAGREEMENT
            } else if report.summary.skipped > 0 {
                EXIT_CAP
            } else {
                0
            })
        }
        Command::Propcheck { max_n, samples, output } => {
            if *max_n > 9 {
                return Err(Failure::Usage("propcheck supports --max-n up to 9".into()));
            }
            let report = crosscheck_property_p(&oracle, *max_n, *samples, &mut seeded(cli.seed))?;
            emit(&render_crosscheck(&report, cli.format), output.as_ref())?;
            Ok(if report.findings.is_empty() { 0 } else { EXIT_DISAGREEMENT })
        }
    }
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<(), Failure> {
    print!("{text}");
    if let Some(path) = output {
        fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn generate_documents(kind: Kind, size: usize, count: usize, seed: u64) -> Result<String, Failure> {
    let mut rng = seeded(seed);
    let mut docs: Vec<(String, GraphDocument)> = Vec::new();
    let unsupported = |what: &str| Failure::Usage(format!("unsupported size {size} for {what}"));
    match kind {
        Kind::CaterpillarExhaustive => {
            if !(2..=12).contains(&size) {
                return Err(unsupported("caterpillar-exhaustive (spine length 2..=12)"));
            }
            for (r, g) in generate::all_rds(size).iter().zip(generate::caterpillar_exhaustive(size)) {
                docs.push((format!("rds {r}"), GraphDocument::from_graph(&g)));
            }
        }
        Kind::CaterpillarRandom => {
            for i in 0..count {
                let g = generate::random_caterpillar(&mut rng, size)?;
                docs.push((format!("caterpillar {i}"), GraphDocument::from_graph(&g)));
            }
        }
        Kind::UigRandom | Kind::Uig2connectedRandom => {
            for i in 0..count {
                let m = if matches!(kind, Kind::UigRandom) {
                    generate::random_uig(&mut rng, size)?
                } else {
                    generate::random_uig_2connected(&mut rng, size)?
                };
                docs.push((format!("unit interval graph {i}"), GraphDocument::from_graph(m.graph()).with_order(m.order())));
            }
        }
        Kind::AllConnected => {
            if !(1..=8).contains(&size) {
                return Err(unsupported("all-connected (1..=8)"));
            }
            for (i, g) in generate::all_connected_graphs(size).iter().enumerate() {
                docs.push((format!("connected {i} {}", to_graph6(g)), GraphDocument::from_graph(g)));
            }
        }
    }
    Ok(docs.iter().map(|(id, d)| format!("# {id}\n{d}")).collect::<Vec<_>>().join("---\n"))
}

fn render_report(report: &ValidationReport, format: Format) -> String {
    match format {
        Format::Object => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
        Format::Text => {
            let mut out = String::new();
            for r in &report.rows {
                let show = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
                let flag = match (r.oracle, r.agree) {
                    (None, _) => "skip",
                    (_, true) => "ok",
                    _ => "DIFF",
                };
                out.push_str(&format!(
                    "{flag:4} {} {} formula={} oracle={} {}us\n",
                    r.instance,
                    r.parameter,
                    show(r.formula),
                    show(r.oracle),
                    r.runtime_us
                ));
            }
            let s = &report.summary;
            let mut rec = Record::new();
            rec.put("rows", s.rows).put("agreements", s.agreements).put("disagreements", s.disagreements);
            rec.put("skipped", s.skipped);
            out.push_str(&rec.render(Format::Text));
            out
        }
    }
}

fn render_crosscheck(report: &CrosscheckReport, format: Format) -> String {
    let mut rec = Record::new();
    rec.put("max_n", report.max_n);
    rec.put("graphs_checked", report.graphs_checked());
    rec.put("forward_violations", report.forward_violations());
    rec.put("reverse_findings", report.reverse_findings());
    let coverage: Vec<_> = report
        .coverage
        .iter()
        .map(|&(n, count, exhaustive)| json!({ "n": n, "graphs": count, "exhaustive": exhaustive }))
        .collect();
    rec.put("coverage", coverage);
    let findings: Vec<_> = report
        .findings
        .iter()
        .map(|f| {
            let mut adjacency = vec![Vec::new(); f.n];
            for &(a, b) in &f.edges {
                adjacency[a].push(b);
                adjacency[b].push(a);
            }
            json!({
                "kind": format!("{:?}", f.kind),
                "graph6": f.graph6,
                "n": f.n,
                "minimal": f.minimal,
                "patterns": f.patterns.iter().map(|p| p.name()).collect::<Vec<_>>(),
                "witness": f.witness,
                "adjacency": adjacency,
            })
        })
        .collect();
    rec.put("findings", findings);
    rec.render(format)
}
