use clap::{Args, Parser, Subcommand, ValueEnum};
use domeq::catalog;
use domeq::engine;
use domeq::equiv::{self, ClassifyOptions};
use domeq::families::FamilySpec;
use domeq::g6;
use domeq::graph::Graph;
use domeq::io;
use domeq::report::{class_report_json, Report};
use domeq::verify::{self, CheckStatus, VerifyOptions};
use std::error::Error;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "domeq",
    about = "Exact domination polynomials, closed-form families, and D-equivalence sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct GraphInput {
    /// Family spec, e.g. `barbell:8`, `genbarbell:3:0-0,1-1`, `book_c:4`,
    /// `chain:K3,K4,K3:t=2`, or a `+`-joined disjoint union
    #[arg(long)]
    family: Option<String>,
    /// A single graph6 line
    #[arg(long)]
    graph6: Option<String>,
    /// Path to an edge-list file (`n <count>` header, then `u v` lines)
    #[arg(long)]
    edges: Option<PathBuf>,
}

impl GraphInput {
    fn resolve(&self) -> Result<(String, Graph, Option<FamilySpec>), Box<dyn Error>> {
        match (&self.family, &self.graph6, &self.edges) {
            (Some(spec_text), None, None) => {
                let spec: FamilySpec = spec_text.parse()?;
                let g = spec.build()?;
                Ok((spec.to_string(), g, Some(spec)))
            }
            (None, Some(line), None) => {
                Ok((format!("graph6:{line}"), g6::decode_graph6(line)?, None))
            }
            (None, None, Some(path)) => {
                let text = std::fs::read_to_string(path)?;
                Ok((path.display().to_string(), io::parse_edge_list(&text)?, None))
            }
            _ => Err("provide exactly one of --family, --graph6, --edges".into()),
        }
    }
}

#[derive(Args)]
struct CommonOpts {
    /// Enumeration guard override (default 30)
    #[arg(long, value_name = "K")]
    max_n: Option<usize>,
    /// Worker threads for catalog sweeps
    #[arg(long, value_name = "W")]
    workers: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the domination polynomial (enumeration and closed form)
    Poly {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        common: CommonOpts,
        /// Print descending powers instead of the canonical ascending order
        #[arg(long)]
        descending: bool,
    },
    /// Emit a family instance as graph6 or an edge list
    Family {
        #[command(flatten)]
        input: GraphInput,
        /// Output encoding
        #[arg(long, value_enum, default_value_t = FamilyOut::G6)]
        out: FamilyOut,
    },
    /// List the domination-covered vertices
    Covered {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// List the irrelevant edges
    Irrelevant {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Verify the contraction recurrence at every vertex
    RecurrenceCheck {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Group a graph6 catalog into D-equivalence classes
    Classify {
        /// Path to a graph6 catalog file
        #[arg(long)]
        catalog: PathBuf,
        /// Keep only connected graphs
        #[arg(long)]
        connected: bool,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Find the catalog members sharing a target family's polynomial
    Members {
        /// Family spec whose polynomial is the class key
        #[arg(long)]
        target: String,
        #[arg(long)]
        catalog: PathBuf,
        #[arg(long)]
        connected: bool,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Run the full theorem verification suite
    Verify {
        /// Optional external order-<=6 graph6 catalog; otherwise the suite
        /// derives the catalog itself
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Seed for the randomized property suites
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        common: CommonOpts,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum FamilyOut {
    G6,
    Edges,
}

fn init_workers(workers: Option<usize>) {
    #[cfg(feature = "parallel")]
    if let Some(w) = workers {
        // ignore the error if a global pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w).build_global();
    }
    #[cfg(not(feature = "parallel"))]
    if workers.is_some() {
        eprintln!("note: built without the `parallel` feature; --workers ignored");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<bool, Box<dyn Error>> {
    match cli.command {
        Command::Poly {
            input,
            common,
            descending,
        } => {
            init_workers(common.workers);
            let (label, g, spec) = input.resolve()?;
            let max_n = common.max_n.unwrap_or(engine::DEFAULT_MAX_N);
            let enumerated = match engine::domination_polynomial_guarded(&g, max_n) {
                Ok(p) => Some(p),
                Err(engine::EngineError::GuardExceeded { .. })
                | Err(engine::EngineError::TooLarge { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            let closed = spec.as_ref().and_then(|s| s.closed_form().ok());
            let shown = enumerated
                .clone()
                .or_else(|| closed.clone())
                .ok_or("graph exceeds the enumeration guard and has no closed form")?;
            let status = match (&enumerated, &closed) {
                (Some(e), Some(c)) => Some(e == c),
                _ => None,
            };
            let display = if descending {
                shown.to_display_descending()
            } else {
                shown.to_display()
            };
            match common.format {
                Format::Text => {
                    println!("{display}");
                    match status {
                        Some(true) => println!("closed-form: MATCH"),
                        Some(false) => println!("closed-form: MISMATCH"),
                        None => {
                            if enumerated.is_none() {
                                println!("closed-form only (enumeration guard exceeded)");
                            }
                        }
                    }
                }
                Format::Json | Format::Csv => {
                    let mut report = Report::new("poly", vec![label.clone()]);
                    report.results.push(serde_json::json!({
                        "source_id": label,
                        "polynomial_key": shown.to_coeff_csv(),
                        "display": display,
                        "closed_form_match": status,
                        "domination_number": shown.min_degree(),
                    }));
                    if status == Some(false) {
                        report.failures.push(serde_json::json!({
                            "source_id": label,
                            "error": "closed form disagrees with enumeration",
                        }));
                    }
                    emit(&report, common.format);
                }
            }
            Ok(status != Some(false))
        }
        Command::Family { input, out } => {
            let (_, g, _) = input.resolve()?;
            match out {
                FamilyOut::G6 => println!("{}", g6::encode_graph6(&g)?),
                FamilyOut::Edges => print!("{}", io::format_edge_list(&g)),
            }
            Ok(true)
        }
        Command::Covered { input, common } => {
            let (label, g, _) = input.resolve()?;
            let covered: Vec<usize> = (0..g.n())
                .filter(|&v| engine::is_domination_covered(&g, v).unwrap_or(false))
                .collect();
            match common.format {
                Format::Text => {
                    println!(
                        "{}",
                        covered
                            .iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    );
                }
                _ => {
                    let mut report = Report::new("covered", vec![label]);
                    report.results.push(serde_json::json!({ "covered": covered }));
                    emit(&report, common.format);
                }
            }
            Ok(true)
        }
        Command::Irrelevant { input, common } => {
            let (label, g, _) = input.resolve()?;
            let edges = engine::irrelevant_edges(&g)?;
            match common.format {
                Format::Text => {
                    for (u, v) in &edges {
                        println!("{u} {v}");
                    }
                }
                _ => {
                    let mut report = Report::new("irrelevant", vec![label]);
                    report.results.push(serde_json::json!({ "irrelevant_edges": edges }));
                    emit(&report, common.format);
                }
            }
            Ok(true)
        }
        Command::RecurrenceCheck { input, common } => {
            let (label, g, _) = input.resolve()?;
            let max_n = common.max_n.unwrap_or(engine::DEFAULT_MAX_N);
            let d = engine::domination_polynomial_guarded(&g, max_n)?;
            let mut bad = Vec::new();
            for u in 0..g.n() {
                if engine::recurrence_rhs_guarded(&g, u, max_n)? != d {
                    bad.push(u);
                }
            }
            match common.format {
                Format::Text => {
                    if bad.is_empty() {
                        println!("recurrence OK at all {} vertices", g.n());
                    } else {
                        println!("recurrence FAILED at vertices {bad:?}");
                    }
                }
                _ => {
                    let mut report = Report::new("recurrence-check", vec![label]);
                    report.results.push(serde_json::json!({
                        "vertices": g.n(),
                        "failing_vertices": bad,
                    }));
                    emit(&report, common.format);
                }
            }
            Ok(bad.is_empty())
        }
        Command::Classify {
            catalog: path,
            connected,
            common,
        } => {
            init_workers(common.workers);
            let records = catalog::read_graph6_catalog(&path)?;
            let opts = ClassifyOptions {
                max_n: common.max_n.unwrap_or(engine::DEFAULT_MAX_N),
                connected_only: connected,
            };
            let (reports, failures) = equiv::classify_catalog(records, &opts);
            let mut report = Report::new("classify", vec![path.display().to_string()]);
            report.push_class_reports(&reports);
            report.push_failure_records(&failures);
            match common.format {
                Format::Text => {
                    for r in &reports {
                        println!(
                            "class {} : {} members, {} iso-classes",
                            r.key,
                            r.members.len(),
                            r.iso_classes
                                .as_ref()
                                .map_or("?".to_string(), |c| c.len().to_string())
                        );
                    }
                    for f in &failures {
                        eprintln!("skipped {}: {}", f.source_id, f.error);
                    }
                }
                f => emit(&report, f),
            }
            Ok(failures.is_empty())
        }
        Command::Members {
            target,
            catalog: path,
            connected,
            common,
        } => {
            init_workers(common.workers);
            let spec: FamilySpec = target.parse()?;
            let target_poly = match spec.closed_form() {
                Ok(p) => p,
                Err(_) => engine::domination_polynomial(&spec.build()?)?,
            };
            let records = catalog::read_graph6_catalog(&path)?;
            let opts = ClassifyOptions {
                max_n: common.max_n.unwrap_or(engine::DEFAULT_MAX_N),
                connected_only: connected,
            };
            let (class, failures) = equiv::find_class_members(&target_poly, records, &opts);
            match common.format {
                Format::Text => {
                    println!("class key: {}", class.key);
                    for m in &class.members {
                        println!("  {}", m.source_id);
                    }
                    println!(
                        "iso-classes: {} (connected: {})",
                        class.iso_classes.as_ref().map_or("?".into(), |c| c.len().to_string()),
                        class.connected_count.map_or("?".into(), |c| c.to_string()),
                    );
                    for f in &failures {
                        eprintln!("skipped {}: {}", f.source_id, f.error);
                    }
                }
                f => {
                    let mut report =
                        Report::new("members", vec![spec.to_string(), path.display().to_string()]);
                    report.results.push(class_report_json(&class));
                    report.push_failure_records(&failures);
                    emit(&report, f);
                }
            }
            Ok(failures.is_empty())
        }
        Command::Verify {
            catalog: path,
            seed,
            common,
        } => {
            init_workers(common.workers);
            let catalog_records = match path {
                Some(p) => Some(catalog::read_graph6_catalog(&p)?),
                None => None,
            };
            let opts = VerifyOptions {
                seed,
                catalog: catalog_records,
                max_n: common.max_n.unwrap_or(engine::DEFAULT_MAX_N),
            };
            let results = verify::run_all(&opts);
            let mut ok = true;
            match common.format {
                Format::Text => {
                    for r in &results {
                        println!("[{}] {} — {}", r.status, r.name, r.detail);
                    }
                }
                f => {
                    let mut report = Report::new("verify", vec![]);
                    for r in &results {
                        report.results.push(serde_json::json!({
                            "name": r.name,
                            "status": r.status.to_string(),
                            "detail": r.detail,
                        }));
                        if r.status == CheckStatus::Fail {
                            report.failures.push(serde_json::json!({
                                "source_id": r.name,
                                "error": r.detail,
                            }));
                        }
                    }
                    emit(&report, f);
                }
            }
            for r in &results {
                if r.status == CheckStatus::Fail {
                    ok = false;
                }
            }
            Ok(ok)
        }
    }
}

fn emit(report: &Report, format: Format) {
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Csv => print!("{}", report.to_csv()),
        Format::Text => unreachable!("text output is handled per command"),
    }
}
