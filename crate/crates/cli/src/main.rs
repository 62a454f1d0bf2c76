use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use modgraph::harness::{list_checks, run_suite, SuiteOptions, Verdict};
use modgraph::{
    build_graph, enumerate_submodules_with, export_graph, graph_metrics, module_properties,
    parse_descriptor, Error, ExportFormat, GraphKind, SizeGuard, SubmoduleLattice,
};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(
    name = "modgraph",
    version,
    about = "Submodule lattices, SSI/PSS graphs and exhaustive statement checks over Z_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every submodule of a module.
    Enumerate {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Flags, colon ideal and annihilator of every nonzero proper submodule.
    Classify {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build one of the graphs and export it.
    Graph {
        #[command(flatten)]
        target: Target,
        /// ssi, pss, pis, sii, pss_tilde or ssi_tilde
        #[arg(long)]
        kind: String,
        /// dot, json, or metrics (invariants as JSON)
        #[arg(long, default_value = "dot")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run checks over a module family and print the report.
    Check {
        /// Family descriptor, e.g. `cyclic:2..30;product:ab<=64;vector:2^3`
        #[arg(long, default_value = "")]
        family: String,
        /// `all`, `strict`, `report` or a comma-separated list of ids
        #[arg(long, default_value = "all")]
        checks: String,
        /// Exit with status 1 when a strict check fails.
        #[arg(long)]
        strict: bool,
        /// Treat report-mode findings as failures.
        #[arg(long)]
        fail_on_findings: bool,
        /// Record per-check wall-clock times (makes output nondeterministic).
        #[arg(long)]
        timing: bool,
        /// Print the check registry instead of running anything.
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
        #[arg(long)]
        max_order: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct Target {
    /// Module descriptor such as `Z12` or `Z2xZ4`.
    #[arg(long)]
    module: String,
    /// Ring descriptor `Z<n>`; defaults to the lcm of the invariant factors.
    #[arg(long)]
    ring: Option<String>,
    /// Largest module order accepted.
    #[arg(long)]
    max_order: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Text,
    Json,
}

fn guard(max_order: Option<u64>) -> SizeGuard {
    let default = SizeGuard::default();
    SizeGuard {
        max_order: max_order.unwrap_or(default.max_order),
        ..default
    }
}

impl Target {
    fn lattice(&self) -> Result<SubmoduleLattice, Error> {
        let (_, module) = parse_descriptor(&self.module, self.ring.as_deref())?;
        enumerate_submodules_with(&module, guard(self.max_order))
    }
}

enum Failure {
    Lib(Error),
    Io(std::io::Error),
    ChecksFailed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(Failure::Io),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json_text(value: &serde_json::Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("JSON values serialize");
    text.push('\n');
    text
}

fn enumerate(lattice: &SubmoduleLattice, format: TableFormat) -> String {
    let module = lattice.module();
    match format {
        TableFormat::Json => {
            let rows: Vec<_> = (0..lattice.len())
                .map(|i| {
                    let s = lattice.get(i);
                    json!({
                        "label": lattice.label(i),
                        "order": s.order(),
                        "generators": s.format_generators(),
                        "elements": s.format_elements(),
                    })
                })
                .collect();
            json_text(&json!({
                "module": module.descriptor(),
                "ring": module.ring().to_string(),
                "order": module.order(),
                "submodules": rows,
            }))
        }
        TableFormat::Text => {
            let mut out = format!(
                "{} over {}: {} submodules\n",
                module.descriptor(),
                module.ring(),
                lattice.len()
            );
            for i in 0..lattice.len() {
                let _ = writeln!(
                    out,
                    "{:>4}  {:<16} order {:<5} {{{}}}",
                    i,
                    lattice.label(i),
                    lattice.order(i),
                    lattice.get(i).format_elements().join(",")
                );
            }
            out
        }
    }
}

fn classify(lattice: &SubmoduleLattice, format: TableFormat) -> String {
    let module = lattice.module();
    let props = module_properties(lattice);
    let vertices = lattice.vertices();
    match format {
        TableFormat::Json => {
            let rows: Vec<_> = vertices
                .iter()
                .map(|&i| {
                    json!({
                        "label": lattice.label(i),
                        "order": lattice.order(i),
                        "flags": lattice.flags(i),
                        "colon": lattice.colon(i).label(),
                        "annihilator": lattice.annihilator(i).label(),
                    })
                })
                .collect();
            json_text(&json!({
                "module": module.descriptor(),
                "ring": module.ring().to_string(),
                "properties": props,
                "submodules": rows,
            }))
        }
        TableFormat::Text => {
            let mark = |b: bool| if b { "yes" } else { "no" };
            let mut out = format!(
                "{:<16} {:>5}  {:<5} {:<6} {:<7} {:<7} {:<5} {:<5} {:<10} {:<10}\n",
                "submodule",
                "order",
                "prime",
                "second",
                "minimal",
                "maximal",
                "large",
                "small",
                "(N:M)",
                "Ann(N)"
            );
            for &i in &vertices {
                let f = lattice.flags(i);
                let _ = writeln!(
                    out,
                    "{:<16} {:>5}  {:<5} {:<6} {:<7} {:<7} {:<5} {:<5} {:<10} {:<10}",
                    lattice.label(i),
                    lattice.order(i),
                    mark(f.is_prime),
                    mark(f.is_second),
                    mark(f.is_minimal),
                    mark(f.is_maximal),
                    mark(f.is_large),
                    mark(f.is_small),
                    lattice.colon(i).label(),
                    lattice.annihilator(i).label(),
                );
            }
            out.lines().map(|l| format!("{}\n", l.trim_end())).collect()
        }
    }
}

fn graph(target: &Target, kind: &str, format: &str) -> Result<String, Failure> {
    let kind: GraphKind = kind.parse()?;
    let lattice = target.lattice()?;
    let g = build_graph(kind, &lattice)?;
    if format.trim().eq_ignore_ascii_case("metrics") {
        let metrics = graph_metrics(&g);
        let names = |list: &[usize]| -> Vec<String> {
            list.iter().map(|&p| g.vertices[p].label.clone()).collect()
        };
        return Ok(json_text(&json!({
            "kind": kind.name(),
            "ring": g.ring.to_string(),
            "module": g.module,
            "metrics": metrics,
            "dominating_set": names(&metrics.dominating_set),
            "universal_vertices": names(&metrics.universal_vertices),
            "isolated_vertices": names(&metrics.isolated_vertices),
            "star_centers": names(&metrics.star_centers),
        })));
    }
    let format: ExportFormat = format.parse()?;
    Ok(export_graph(&g, format))
}

fn registry_text() -> String {
    let mut out = String::new();
    for c in list_checks() {
        let mode = match c.mode {
            modgraph::harness::Mode::Strict => "strict",
            modgraph::harness::Mode::Report => "report",
        };
        let _ = writeln!(out, "{:<4} {:<7} {}", c.id, mode, c.name);
    }
    out
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Enumerate {
            target,
            format,
            out,
        } => emit(&enumerate(&target.lattice()?, format), out.as_ref()),
        Command::Classify {
            target,
            format,
            out,
        } => emit(&classify(&target.lattice()?, format), out.as_ref()),
        Command::Graph {
            target,
            kind,
            format,
            out,
        } => emit(&graph(&target, &kind, &format)?, out.as_ref()),
        Command::Check {
            family,
            checks,
            strict,
            fail_on_findings,
            timing,
            list,
            format,
            max_order,
            out,
        } => {
            if list {
                return emit(&registry_text(), out.as_ref());
            }
            let options = SuiteOptions {
                guard: guard(max_order),
                fail_on_findings,
                timing,
            };
            let report = run_suite(&family, &checks, options)?;
            let text = match format {
                TableFormat::Json => report.to_json(),
                TableFormat::Text => {
                    let mut text = String::new();
                    for r in report.results.iter().filter(|r| r.verdict == Verdict::Fail) {
                        let kind = if r.is_finding() { "finding" } else { "FAIL" };
                        let note = r.witness.as_ref().map_or("", |w| w.note.as_str());
                        let _ = writeln!(text, "{kind} {} on {}: {note}", r.check, r.instance);
                    }
                    let s = report.summary;
                    let _ = writeln!(
                        text,
                        "pass={} fail={} findings={} not_applicable={} status={}",
                        s.pass, s.fail, s.findings, s.not_applicable, report.status
                    );
                    text
                }
            };
            emit(&text, out.as_ref())?;
            if strict && !report.passed() {
                return Err(Failure::ChecksFailed);
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::ChecksFailed) => ExitCode::from(1),
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_size_guard() { 3 } else { 2 })
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
