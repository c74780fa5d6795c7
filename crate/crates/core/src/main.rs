use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use egr::harness::{self, SuiteOptions, Verdict, VerificationResult};
use egr::report::{self, ReportDocument, Timing};
use egr::solvers::{compute_invariants, SolverOptions, DEFAULT_NODE_BUDGET};
use egr::{parse_ring_spec, Error, Limits, Structure};

#[derive(Parser)]
#[command(
    name = "egr",
    version,
    about = "Essential annihilating-ideal graphs of finite rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone, Copy)]
struct CapArgs {
    /// Largest ring order accepted.
    #[arg(long, default_value_t = egr::ring::DEFAULT_ORDER_CAP)]
    order_cap: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Build the graph and print it.
    Graph {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Compute omega, chi, twin-free omega and the edge class.
    Invariants {
        spec: String,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
        /// Include per-phase timings (makes output run-dependent).
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Run the structural checks on one ring or a corpus.
    Verify {
        spec: Option<String>,
        /// Corpus file, or `default` for the built-in corpus.
        #[arg(long)]
        corpus: Option<String>,
        /// Comma-separated check tags (default: all).
        #[arg(long, default_value = "")]
        tags: String,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Smallest n for which the degree criterion applies, per even t.
    Threshold {
        /// Comma-separated values or an inclusive range `a-b`.
        #[arg(long = "t")]
        t: String,
        #[arg(long)]
        json: bool,
    },
    /// Dump the ideal lattice.
    Lattice {
        spec: String,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        caps: CapArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
    Edgelist,
}

enum Failure {
    Input(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_resource_cap() {
            Failure::Cap(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn build(spec: &str, caps: CapArgs) -> Result<Structure, Failure> {
    let limits = Limits {
        order_cap: caps.order_cap,
        ..Limits::default()
    };
    Ok(Structure::from_spec(&parse_ring_spec(spec)?, limits)?)
}

fn run(cmd: Command) -> Result<u8, Failure> {
    match cmd {
        Command::Graph { spec, format, caps } => {
            let s = build(&spec, caps)?;
            let out = match format {
                Format::Edgelist => s.graph().to_edge_list(),
                Format::Dot => s.eg.to_dot(&s.vertex_labels(), &spec),
                Format::Json => json(&report::graph_document(spec.clone(), &s)),
            };
            print!("{out}");
            Ok(0)
        }
        Command::Invariants {
            spec,
            json: as_json,
            node_budget,
            timing,
            caps,
        } => {
            let t0 = Instant::now();
            let s = build(&spec, caps)?;
            let t1 = Instant::now();
            let opts = SolverOptions {
                node_budget,
                ..SolverOptions::default()
            };
            let inv = compute_invariants(s.graph(), &opts);
            let t2 = Instant::now();
            let mut doc = ReportDocument::new(spec, &s, inv, Vec::new());
            if timing {
                doc.timing = Some(Timing {
                    build_ms: (t1 - t0).as_millis() as u64,
                    solve_ms: (t2 - t1).as_millis() as u64,
                    verify_ms: 0,
                });
            }
            if as_json {
                print!("{}", json(&doc));
            } else {
                print!("{}", invariants_table(&doc));
            }
            Ok(0)
        }
        Command::Verify {
            spec,
            corpus,
            tags,
            json: as_json,
            node_budget,
            caps,
        } => {
            let selection = harness::parse_tags(&tags)?;
            let rings = match (spec, corpus) {
                (Some(s), None) => vec![s],
                (None, c) => load_corpus(c.as_deref().unwrap_or("default"))?,
                (Some(_), Some(_)) => {
                    return Err(Failure::Input(
                        "give either a spec or --corpus, not both".into(),
                    ))
                }
            };
            let opts = SuiteOptions {
                limits: Limits {
                    order_cap: caps.order_cap,
                    ..Limits::default()
                },
                solver: SolverOptions {
                    node_budget,
                    ..SolverOptions::default()
                },
            };
            let results = harness::run_suite(&rings, &selection, &opts);
            if as_json {
                print!("{}", json(&results));
            } else {
                print!("{}", verify_table(&results));
            }
            let bad = results
                .iter()
                .any(|r| matches!(r.verdict, Verdict::Fail | Verdict::Error));
            Ok(if bad { 1 } else { 0 })
        }
        Command::Threshold { t, json: as_json } => {
            let values = parse_t_values(&t)?;
            let mut rows = Vec::new();
            for t in values {
                rows.push((t, harness::threshold_n_for_t(t)?));
            }
            if as_json {
                let v: Vec<serde_json::Value> = rows
                    .iter()
                    .map(|(t, n)| serde_json::json!({ "t": t, "n": n }))
                    .collect();
                print!("{}", json(&v));
            } else {
                for (t, n) in rows {
                    println!("t={t} n>={n}");
                }
            }
            Ok(0)
        }
        Command::Lattice {
            spec,
            json: as_json,
            caps,
        } => {
            let s = build(&spec, caps)?;
            let doc = report::lattice_document(spec, &s);
            if as_json {
                print!("{}", json(&doc));
            } else {
                for e in &doc.ideals {
                    println!(
                        "{:>3}  ({})  size={} ann={} essential={} nilpotent={}",
                        e.id,
                        e.generators.join(", "),
                        e.size,
                        e.annihilator,
                        e.essential,
                        e.nilpotent
                    );
                }
            }
            Ok(0)
        }
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn load_corpus(name: &str) -> Result<Vec<String>, Failure> {
    let path = if name == "default" {
        match std::env::var("EGR_CORPUS") {
            Ok(p) if !p.is_empty() => p,
            _ => return Ok(harness::default_corpus()),
        }
    } else {
        name.to_string()
    };
    std::fs::read_to_string(&path)
        .map(|text| harness::parse_corpus(&text))
        .map_err(|e| Failure::Input(format!("cannot read corpus {path}: {e}")))
}

fn parse_t_values(text: &str) -> Result<Vec<u64>, Failure> {
    let bad = || Failure::Input(format!("cannot parse t values {text:?}"));
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once('-') {
            Some((a, b)) => {
                let a: u64 = a.trim().parse().map_err(|_| bad())?;
                let b: u64 = b.trim().parse().map_err(|_| bad())?;
                // ranges list the even values only
                out.extend((a..=b).filter(|t| t % 2 == 0));
            }
            None => out.push(part.parse().map_err(|_| bad())?),
        }
    }
    if out.is_empty() {
        return Err(bad());
    }
    Ok(out)
}

fn invariants_table(doc: &ReportDocument) -> String {
    let inv = &doc.invariants;
    let r = &doc.ring_summary;
    let g = &doc.graph_summary;
    let mut s = String::new();
    let _ = writeln!(s, "ring            {}", doc.ring_spec);
    let _ = writeln!(s, "order           {}", r.order);
    let _ = writeln!(s, "reduced         {}", r.reduced);
    let _ = writeln!(s, "|Min| / |Max|   {} / {}", r.min_primes, r.max_ideals);
    let _ = writeln!(s, "Nil generators  {}", r.nil_generators.join(", "));
    let _ = writeln!(s, "vertices        {}", g.vertices);
    let _ = writeln!(s, "edges           {}", g.edges);
    if g.vertices == 0 {
        let _ = writeln!(s, "note            empty graph");
    }
    let _ = writeln!(s, "omega           {}", inv.omega);
    let _ = writeln!(s, "chi             {}", inv.chi);
    let _ = writeln!(s, "twin-free omega {}", inv.twin_free_omega);
    let _ = writeln!(s, "Delta           {}", inv.delta);
    let _ = writeln!(
        s,
        "edge class      {:?} (chi' = {}, via {:?})",
        inv.edge_class,
        inv.chi_prime.map_or("?".into(), |c| c.to_string()),
        inv.edge_decision
    );
    let _ = writeln!(s, "overfull        {}", inv.overfull);
    if let Some(t) = &doc.timing {
        let _ = writeln!(
            s,
            "timing          build {} ms, solve {} ms",
            t.build_ms, t.solve_ms
        );
    }
    s
}

fn verify_table(results: &[VerificationResult]) -> String {
    let mut s = String::new();
    let mut counts = [0usize; 4];
    for r in results {
        let tag = match r.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::VacuousHypothesis => "VACUOUS",
            Verdict::Error => "ERROR",
        };
        counts[r.verdict as usize] += 1;
        let _ = writeln!(
            s,
            "{tag:<8} {:<26} {:<22} {}",
            r.theorem_id, r.ring_spec, r.computed
        );
        if let Some(cx) = &r.counterexample {
            let _ = writeln!(s, "         counterexample: {}", cx.description);
        }
    }
    let _ = writeln!(
        s,
        "{} pass, {} fail, {} vacuous, {} error",
        counts[0], counts[1], counts[2], counts[3]
    );
    s
}
