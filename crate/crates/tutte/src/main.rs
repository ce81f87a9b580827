//! Command line for the exact Tutte polynomial toolkit: compute polynomials
//! of family members or graph files, count spanning trees, and run the
//! self-check suites.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::One;

use tutte::benzenoid::{build_chain, closed_chain, tau_chain, ChainFamily};
use tutte::engine::{
    count_spanning_trees_kirchhoff, tutte_delcon, tutte_subset_with_limit, EngineError,
    DEFAULT_SUBSET_EDGE_LIMIT,
};
use tutte::fanlike::{
    build_family, closed_family, transfer_coeffs, Family, FamilyError, MarkedGraph,
};
use tutte::graph::MultiGraph;
use tutte::poly::Poly;
use tutte::verify::{run_scope, Scope};

/// Overrides the edge limit of the subset-expansion method.
const SUBSET_LIMIT_VAR: &str = "TUTTE_SUBSET_EDGE_LIMIT";

/// Kirchhoff counting builds the graph and eliminates its Laplacian; past
/// this many vertices the elimination is not worth attempting exactly.
const KIRCHHOFF_VERTEX_LIMIT: u32 = 600;

const EXIT_CHECKS_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INFEASIBLE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "tutte",
    version,
    about = "Exact Tutte polynomials of recursive graph families",
    after_help = "Exit codes: 0 success, 1 failed verification, 2 bad input, 3 infeasible method."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Tutte polynomial of a family member or a graph file.
    Compute(ComputeArgs),
    /// Print the number of spanning trees of a family member.
    Tau(TauArgs),
    /// Run self-check suites and report one pass/fail line per check.
    Verify(VerifyArgs),
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("source")
    .required(true)
    .args(["family", "graph", "base"]))]
struct ComputeArgs {
    /// Named family; requires --n.
    #[arg(long, value_enum)]
    family: Option<NamedFamily>,
    /// Family member index.
    #[arg(long, conflicts_with = "graph")]
    n: Option<usize>,
    /// Graph file: a `vertices N` header, then one `u v` line per edge.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Base graph file for a custom fan-like family; requires --marks,
    /// --shape, and --n.
    #[arg(long, requires = "marks", requires = "shape")]
    base: Option<PathBuf>,
    /// Marked base vertices `v,u` or `v,u,w`.
    #[arg(long, requires = "base")]
    marks: Option<String>,
    /// Custom family shape: F, F++, W, G, or +G+.
    #[arg(long, requires = "base")]
    shape: Option<String>,
    /// `auto` uses the closed form for families and delcon for graph files.
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    #[arg(long, value_enum, default_value_t = OutputArg::Text)]
    output: OutputArg,
}

#[derive(Args)]
struct TauArgs {
    #[arg(long, value_enum)]
    family: NamedFamily,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = TauMethodArg::Recurrence)]
    method: TauMethodArg,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check suite to run.
    #[arg(value_enum, default_value_t = ScopeArg::All)]
    scope: ScopeArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum NamedFamily {
    Linear,
    Pyrene,
    Triphenylene,
    Fan,
    Wheel,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Closed,
    Delcon,
    Subset,
}

#[derive(Clone, Copy, ValueEnum)]
enum TauMethodArg {
    /// Integer recurrence at (1, 1).
    Recurrence,
    /// Closed-form polynomial evaluated at (1, 1).
    Eval,
    /// Laplacian cofactor of the built graph.
    Kirchhoff,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputArg {
    /// Canonical one-line polynomial.
    Text,
    /// `[[x_exp, y_exp, "coefficient"], ...]` in canonical term order.
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    All,
    Oracles,
    Appendix,
    Duality,
    Corollaries,
}

enum Failure {
    Input(String),
    Infeasible(String),
}

impl Failure {
    fn exit(self) -> ExitCode {
        let (code, msg) = match self {
            Failure::Input(msg) => (EXIT_INPUT, msg),
            Failure::Infeasible(msg) => (EXIT_INFEASIBLE, msg),
        };
        eprintln!("error: {msg}");
        ExitCode::from(code)
    }
}

fn engine_failure(e: EngineError) -> Failure {
    match e {
        EngineError::TooManyEdges { .. } => Failure::Infeasible(e.to_string()),
        _ => Failure::Input(e.to_string()),
    }
}

fn family_failure(e: FamilyError) -> Failure {
    match e {
        FamilyError::NoClosedForm => Failure::Infeasible(e.to_string()),
        FamilyError::Engine(inner) => engine_failure(inner),
        _ => Failure::Input(e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(args) => cmd_compute(&args),
        Command::Tau(args) => cmd_tau(&args),
        Command::Verify(args) => return cmd_verify(args.scope),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => failure.exit(),
    }
}

// ---- compute ----

/// What --family/--graph/--base resolve to.
enum SourceSpec {
    Named(NamedFamily, usize),
    Custom(MarkedGraph, Family, usize),
    File(MultiGraph),
}

fn cmd_compute(args: &ComputeArgs) -> Result<(), Failure> {
    let source = resolve_source(args)?;
    let method = match (args.method, &source) {
        (MethodArg::Auto, SourceSpec::File(_)) => MethodArg::Delcon,
        (MethodArg::Auto, _) => MethodArg::Closed,
        (m, _) => m,
    };
    let poly = match method {
        MethodArg::Closed => closed_polynomial(&source)?,
        MethodArg::Delcon => tutte_delcon(&source_graph(&source)?).map_err(engine_failure)?,
        MethodArg::Subset => {
            let limit = subset_limit_from_env()?;
            tutte_subset_with_limit(&source_graph(&source)?, limit).map_err(engine_failure)?
        }
        MethodArg::Auto => unreachable!("auto resolved above"),
    };
    match args.output {
        OutputArg::Text => println!("{}", poly.to_canonical_text()),
        OutputArg::Json => println!("{}", poly.to_json()),
    }
    Ok(())
}

fn resolve_source(args: &ComputeArgs) -> Result<SourceSpec, Failure> {
    if let Some(family) = args.family {
        let n = require_n(args.n)?;
        return Ok(SourceSpec::Named(family, n));
    }
    if let Some(path) = &args.graph {
        return Ok(SourceSpec::File(read_graph(path)?));
    }
    let path = args.base.as_ref().expect("clap enforces one source");
    let n = require_n(args.n)?;
    let base = read_graph(path)?;
    let (v, u, w) = parse_marks(args.marks.as_deref().expect("clap ties marks to base"))?;
    let shape = parse_shape(args.shape.as_deref().expect("clap ties shape to base"))?;
    if shape.needs_w() && w.is_none() {
        return Err(Failure::Input(format!(
            "shape {} needs three marks v,u,w",
            args.shape.as_deref().unwrap_or_default()
        )));
    }
    let marked = MarkedGraph::new(base, v, u, w).map_err(family_failure)?;
    Ok(SourceSpec::Custom(marked, shape, n))
}

fn require_n(n: Option<usize>) -> Result<usize, Failure> {
    n.ok_or_else(|| Failure::Input("--n is required for a family".to_string()))
}

fn read_graph(path: &Path) -> Result<MultiGraph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {}", path.display(), e)))?;
    MultiGraph::parse_text(&text).map_err(|e| Failure::Input(format!("{}: {}", path.display(), e)))
}

fn parse_marks(text: &str) -> Result<(u32, u32, Option<u32>), Failure> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let parse = |s: &str| -> Result<u32, Failure> {
        s.parse()
            .map_err(|_| Failure::Input(format!("bad mark {s:?} in --marks")))
    };
    match parts.as_slice() {
        [v, u] => Ok((parse(v)?, parse(u)?, None)),
        [v, u, w] => Ok((parse(v)?, parse(u)?, Some(parse(w)?))),
        _ => Err(Failure::Input(
            "--marks takes two or three comma-separated vertices".to_string(),
        )),
    }
}

fn parse_shape(text: &str) -> Result<Family, Failure> {
    match text {
        "F" => Ok(Family::F),
        "F++" => Ok(Family::FPlusPlus),
        "W" => Ok(Family::W),
        "G" => Ok(Family::G),
        "+G+" => Ok(Family::PlusGPlus),
        other => Err(Failure::Input(format!(
            "unknown shape {other:?}; expected F, F++, W, G, or +G+"
        ))),
    }
}

fn k2_marked() -> MarkedGraph {
    MarkedGraph::new(MultiGraph::path(1), 0, 1, None).expect("K2 marks are valid")
}

fn named_chain(family: NamedFamily) -> Option<ChainFamily> {
    match family {
        NamedFamily::Linear => Some(ChainFamily::Linear),
        NamedFamily::Pyrene => Some(ChainFamily::Pyrene),
        NamedFamily::Triphenylene => Some(ChainFamily::Triphenylene),
        NamedFamily::Fan | NamedFamily::Wheel => None,
    }
}

fn closed_polynomial(source: &SourceSpec) -> Result<Poly, Failure> {
    match source {
        SourceSpec::Named(family, n) => match named_chain(*family) {
            Some(chain) => closed_chain(chain, *n).map_err(family_failure),
            None => {
                let shape = match family {
                    NamedFamily::Fan => Family::F,
                    _ => Family::W,
                };
                closed_family(&k2_marked(), shape, *n).map_err(family_failure)
            }
        },
        SourceSpec::Custom(marked, shape, n) => {
            closed_family(marked, *shape, *n).map_err(family_failure)
        }
        SourceSpec::File(_) => Err(Failure::Infeasible(
            "no closed form for an arbitrary graph; use --method delcon or subset".to_string(),
        )),
    }
}

fn source_graph(source: &SourceSpec) -> Result<MultiGraph, Failure> {
    match source {
        SourceSpec::Named(family, n) => named_graph(*family, *n),
        SourceSpec::Custom(marked, shape, n) => {
            build_family(marked, *shape, *n).map_err(family_failure)
        }
        SourceSpec::File(g) => Ok(g.clone()),
    }
}

fn named_graph(family: NamedFamily, n: usize) -> Result<MultiGraph, Failure> {
    match named_chain(family) {
        Some(chain) => build_chain(chain, n).map_err(family_failure),
        None => {
            let shape = match family {
                NamedFamily::Fan => Family::F,
                _ => Family::W,
            };
            build_family(&k2_marked(), shape, n).map_err(family_failure)
        }
    }
}

fn subset_limit_from_env() -> Result<usize, Failure> {
    match std::env::var(SUBSET_LIMIT_VAR) {
        Ok(text) => text.trim().parse().map_err(|_| {
            Failure::Input(format!(
                "{SUBSET_LIMIT_VAR} must be an unsigned integer, got {text:?}"
            ))
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_SUBSET_EDGE_LIMIT),
        Err(e) => Err(Failure::Input(format!("{SUBSET_LIMIT_VAR}: {e}"))),
    }
}

// ---- tau ----

fn cmd_tau(args: &TauArgs) -> Result<(), Failure> {
    let count = match args.method {
        TauMethodArg::Recurrence => tau_by_recurrence(args.family, args.n)?,
        TauMethodArg::Eval => {
            let one = BigInt::one();
            closed_polynomial(&SourceSpec::Named(args.family, args.n))?.eval(&one, &one)
        }
        TauMethodArg::Kirchhoff => {
            let g = named_graph(args.family, args.n)?;
            if g.vertex_count() > KIRCHHOFF_VERTEX_LIMIT {
                return Err(Failure::Infeasible(format!(
                    "n = {} builds a {}-vertex graph; the Kirchhoff method is capped at {} vertices",
                    args.n,
                    g.vertex_count(),
                    KIRCHHOFF_VERTEX_LIMIT
                )));
            }
            count_spanning_trees_kirchhoff(&g).map_err(engine_failure)?
        }
    };
    println!("{count}");
    Ok(())
}

fn tau_by_recurrence(family: NamedFamily, n: usize) -> Result<BigInt, Failure> {
    if let Some(chain) = named_chain(family) {
        return tau_chain(chain, n).map_err(family_failure);
    }
    if matches!(family, NamedFamily::Wheel) {
        return Err(Failure::Infeasible(
            "the wheel count is not a plain two-term recurrence; use eval or kirchhoff".to_string(),
        ));
    }
    // Fan: the closed form collapses to an integer recurrence at (1, 1),
    // seeded from the first two members.
    if n < 1 {
        return Err(Failure::Input("--n must be at least 1".to_string()));
    }
    let one = BigInt::one();
    let base = k2_marked();
    let kernel = transfer_coeffs(&base, Family::F)
        .map_err(family_failure)?
        .kernel();
    let trace = kernel.trace.eval(&one, &one);
    let det = kernel.det.eval(&one, &one);
    let mut prev = closed_family(&base, Family::F, 1)
        .map_err(family_failure)?
        .eval(&one, &one);
    if n == 1 {
        return Ok(prev);
    }
    let mut cur = closed_family(&base, Family::F, 2)
        .map_err(family_failure)?
        .eval(&one, &one);
    for _ in 2..n {
        let next = &trace * &cur - &det * &prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

// ---- verify ----

fn cmd_verify(scope: ScopeArg) -> ExitCode {
    let scope = match scope {
        ScopeArg::All => Scope::All,
        ScopeArg::Oracles => Scope::Oracles,
        ScopeArg::Appendix => Scope::Appendix,
        ScopeArg::Duality => Scope::Duality,
        ScopeArg::Corollaries => Scope::Corollaries,
    };
    let reports = run_scope(scope);
    let mut failed = 0usize;
    for report in &reports {
        if report.passed {
            println!("PASS {}", report.name);
        } else {
            failed += 1;
            match &report.detail {
                Some(detail) => println!("FAIL {}: {}", report.name, detail),
                None => println!("FAIL {}", report.name),
            }
        }
    }
    println!(
        "checks: {} passed, {} failed",
        reports.len() - failed,
        failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECKS_FAILED)
    }
}
