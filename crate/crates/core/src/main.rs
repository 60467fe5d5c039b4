//! `invdiam`: exact and constructive (≤p)-inversion distances on the
//! command line.
//!
//! Thin wrapper over the library: every command loads its files, calls one
//! library entry point and prints the result as JSON. Exit status 1 means a
//! check failed (plan invalid, certificate rejected, corpus failures);
//! 2 means an error (bad input, search too large).
//!
//! Usage: invdiam <oracle|plan|decompose|generate|bound|verify|corpus> --help

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use inversion_diameter::bounds::generate::{generate, Family};
use inversion_diameter::bounds::{check_weight_certificate, lower_bound, WeightCertificate};
use inversion_diameter::corpus::{run_corpus, CorpusSpec, FamilySpec};
use inversion_diameter::decompose::{
    degeneracy_ordering, find_good5, find_induced_matching, kotzig_p3, min_triangle_transversal,
    strong_edge_colouring, tree4_decomposition, tree_extract_set, triangle_packing,
};
use inversion_diameter::oracle::{self, OracleConfig, OracleResult};
use inversion_diameter::plan::{plan_with, PlanOptions, Strategy};
use inversion_diameter::{io, verify_plan, Error, LabelledGraph, Orientation, Result};

/// Exact and constructive (≤p)-inversion distances of oriented graphs.
///
/// Results are printed as JSON on stdout. Thread count follows
/// RAYON_NUM_THREADS unless --threads is given.
#[derive(Parser)]
#[command(name = "invdiam", version)]
struct Cli {
    /// Worker threads for parallel searches.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact distance, diameter or converse number by exhaustive search.
    Oracle(OracleArgs),
    /// Constructive plan from --o1 to --o2.
    Plan(PlanArgs),
    /// Run one decomposition subroutine.
    Decompose(DecomposeArgs),
    /// Write a member of a graph family.
    Generate(GenerateArgs),
    /// Lower bounds and weight certificates.
    Bound(BoundArgs),
    /// Check a plan file.
    Verify(VerifyArgs),
    /// Run the cross-check corpus.
    Corpus(CorpusArgs),
}

#[derive(Args)]
struct PairArgs {
    /// Graph file (`n m`, then `u v` per edge).
    #[arg(long)]
    graph: PathBuf,
    /// Source orientation (default: all zeros).
    #[arg(long)]
    o1: Option<PathBuf>,
    /// Target orientation (default: the converse of the source).
    #[arg(long)]
    o2: Option<PathBuf>,
}

impl PairArgs {
    fn load(&self) -> Result<(LabelledGraph, Orientation, Orientation)> {
        let g = io::read_graph(&self.graph)?;
        let o1 = match &self.o1 {
            Some(p) => io::read_orientation(p, Some(g.m()))?,
            None => Orientation::zeros(g.m()),
        };
        let o2 = match &self.o2 {
            Some(p) => io::read_orientation(p, Some(g.m()))?,
            None => o1.converse(),
        };
        Ok((g, o1, o2))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleQuery {
    Distance,
    Diameter,
    Converse,
}

#[derive(Args)]
struct OracleArgs {
    query: OracleQuery,
    #[command(flatten)]
    pair: PairArgs,
    /// Inversion cap: every step inverts at most this many vertices.
    #[arg(long, default_value_t = 3)]
    p: usize,
    /// Largest edge count for the full search.
    #[arg(long, default_value_t = 22)]
    max_edges: usize,
    /// Write the witness plan here.
    #[arg(long)]
    emit_plan: Option<PathBuf>,
}

#[derive(Args)]
struct PlanArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Inversion cap: every step inverts at most this many vertices.
    #[arg(long)]
    p: usize,
    #[arg(long, value_enum, default_value_t = Strategy::Auto)]
    strategy: Strategy,
    /// The graph is planar (enables the planar planners and bounds).
    #[arg(long)]
    planar: bool,
    /// Do not finish stalled reductions with the exact oracle.
    #[arg(long)]
    no_residue_oracle: bool,
    /// Write the plan here.
    #[arg(long)]
    emit_plan: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecomposeKind {
    Kotzig,
    StrongColouring,
    TriangleTransversal,
    TrianglePacking,
    InducedMatching,
    Degeneracy,
    Tree4,
    Good5,
    Extract,
}

#[derive(Args)]
struct DecomposeArgs {
    kind: DecomposeKind,
    /// Graph file (`n m`, then `u v` per edge).
    #[arg(long)]
    graph: PathBuf,
    /// Exact triangle transversal / packing (at most 40 edges).
    #[arg(long)]
    exact: bool,
    /// Matching size for induced-matching.
    #[arg(long, default_value_t = 2)]
    size: usize,
    /// Cap for extract.
    #[arg(long, default_value_t = 6)]
    p: usize,
    /// Root for extract.
    #[arg(long, default_value_t = 0)]
    root: usize,
}

#[derive(Args)]
struct GenerateArgs {
    /// One of: matching, complete, path, cycle, star, spider4, spider5, g2,
    /// double-wheel, odd-triangulation, random-tree, random-connected,
    /// random-triangulation.
    family: String,
    /// `n`, `k` or `q`, as the family uses.
    #[arg(long)]
    size: usize,
    /// Edge count (random-connected).
    #[arg(long)]
    m: Option<usize>,
    /// Seed for the random families.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output graph file (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CertificateKind {
    Uniform,
    Matching,
    DoubleWheel,
    Spider4,
}

#[derive(Subcommand)]
enum BoundCommand {
    /// Best lower bound on conv^{≤p} (hence on id^{≤p}).
    Lower {
        /// Graph file.
        #[arg(long)]
        graph: PathBuf,
        /// Inversion cap.
        #[arg(long)]
        p: usize,
    },
    /// Emit a certificate for a graph (double-wheel and spider4 take the
    /// family size instead).
    Certificate {
        kind: CertificateKind,
        /// Graph file (uniform, matching).
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Family size `n` (double-wheel, spider4).
        #[arg(long)]
        size: Option<usize>,
        /// Inversion cap.
        #[arg(long, default_value_t = 3)]
        p: usize,
        /// Write the certificate here (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate exactly against a graph.
    Check {
        /// Graph file.
        #[arg(long)]
        graph: PathBuf,
        /// Inversion cap.
        #[arg(long)]
        p: usize,
        /// Certificate file (JSON, as written by `bound certificate`).
        #[arg(long)]
        certificate: PathBuf,
    },
}

#[derive(Args)]
struct BoundArgs {
    #[command(subcommand)]
    command: BoundCommand,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Plan file (JSON).
    #[arg(long)]
    plan: PathBuf,
    /// Cap to check against (default: the plan's own).
    #[arg(long)]
    p: Option<usize>,
}

#[derive(Args)]
struct CorpusArgs {
    /// JSON corpus specification.
    #[arg(long, conflicts_with_all = ["family"])]
    spec: Option<PathBuf>,
    /// A single family instead of the standard corpus.
    #[arg(long)]
    family: Option<String>,
    /// Sizes for --family, comma separated.
    #[arg(long, value_delimiter = ',')]
    sizes: Vec<usize>,
    /// Edge counts for --family random-connected, parallel to --sizes.
    #[arg(long, value_delimiter = ',')]
    edges: Vec<usize>,
    /// Graphs per size.
    #[arg(long, default_value_t = 1)]
    samples: usize,
    /// Caps, comma separated (default 2..=10).
    #[arg(long, value_delimiter = ',')]
    p: Vec<usize>,
    /// Seed for the corpus graphs and random orientation pairs.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest edge count for which the oracle runs [default: 18].
    #[arg(long)]
    max_edges: Option<usize>,
    /// Only plan the converse pair.
    #[arg(long)]
    no_random_pairs: bool,
    /// Write the CSV table here.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Write the JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
}

/// Pretty JSON on stdout; a closed pipe (`| head`) is not an error.
fn print<T: Serialize>(value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match writeln!(std::io::stdout().lock(), "{text}") {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn oracle_json(r: &OracleResult) -> Value {
    json!({
        "value": r.value,
        "source": r.source.bits().to_string(),
        "target": r.target.bits().to_string(),
        "witness_plan": r.witness_plan,
        "stats": r.stats,
    })
}

fn run_oracle(a: &OracleArgs) -> Result<ExitCode> {
    let (g, o1, o2) = a.pair.load()?;
    let cfg = OracleConfig::with_max_edges(a.max_edges);
    let r = match a.query {
        OracleQuery::Distance => oracle::distance(&g, a.p, &o1, &o2, &cfg)?,
        OracleQuery::Diameter => oracle::diameter(&g, a.p, &cfg)?,
        OracleQuery::Converse => oracle::converse_number(&g, a.p, &cfg)?,
    };
    if let (Some(path), Some(plan)) = (&a.emit_plan, &r.witness_plan) {
        io::write_plan(path, plan)?;
    }
    print(&oracle_json(&r))?;
    Ok(ExitCode::SUCCESS)
}

fn run_plan(a: &PlanArgs) -> Result<ExitCode> {
    let (g, o1, o2) = a.pair.load()?;
    let mut opts = PlanOptions {
        planar: a.planar,
        ..PlanOptions::default()
    };
    opts.reduction.residue_oracle = !a.no_residue_oracle;
    let r = plan_with(a.strategy, &g, a.p, &o1, &o2, &opts)?;
    if let Some(path) = &a.emit_plan {
        io::write_plan(path, &r.plan)?;
    }
    print(&json!({
        "length": r.plan.len(),
        "bound": r.bound,
        "route": r.route,
        "plan": r.plan,
        "details": r.details,
    }))?;
    Ok(ExitCode::SUCCESS)
}

fn run_decompose(a: &DecomposeArgs) -> Result<ExitCode> {
    let g = io::read_graph(&a.graph)?;
    let edge_list = |es: &mut dyn Iterator<Item = usize>| es.map(|e| g.edge(e)).collect::<Vec<_>>();
    let out = match a.kind {
        DecomposeKind::Kotzig => {
            let d = kotzig_p3(&g)?;
            json!({ "count": d.len(), "parts": d.parts })
        }
        DecomposeKind::StrongColouring => {
            let c = strong_edge_colouring(&g);
            let classes: Vec<_> = c.classes.iter().map(|cl| edge_list(&mut cl.iter().copied())).collect();
            json!({ "count": classes.len(), "max_degree": g.max_degree(), "classes": classes })
        }
        DecomposeKind::TriangleTransversal => {
            let f = min_triangle_transversal(&g, a.exact)?;
            json!({ "size": f.count(), "exact": a.exact, "edges": edge_list(&mut f.iter()) })
        }
        DecomposeKind::TrianglePacking => {
            let t = triangle_packing(&g, a.exact)?;
            json!({ "size": t.len(), "exact": a.exact, "triangles": t })
        }
        DecomposeKind::InducedMatching => match find_induced_matching(&g, a.size) {
            Some(m) => json!({ "found": true, "edges": edge_list(&mut m.into_iter()) }),
            None => json!({ "found": false }),
        },
        DecomposeKind::Degeneracy => serde_json::to_value(degeneracy_ordering(&g))?,
        DecomposeKind::Tree4 => {
            let parts = tree4_decomposition(&g)?;
            json!({ "count": parts.len(), "parts": parts })
        }
        DecomposeKind::Good5 => serde_json::to_value(find_good5(&g)?)?,
        DecomposeKind::Extract => serde_json::to_value(tree_extract_set(&g, a.root, a.p)?)?,
    };
    print(&out)?;
    Ok(ExitCode::SUCCESS)
}

fn run_generate(a: &GenerateArgs) -> Result<ExitCode> {
    let family = Family::parse(&a.family, a.size, a.m, a.seed)?;
    let g = generate(&family)?;
    match &a.out {
        Some(path) => {
            io::write_graph(path, &g)?;
            print(&json!({ "family": family, "n": g.n(), "m": g.m(), "planar": family.is_planar() }))?;
        }
        None => print!("{}", io::format_graph(&g)),
    }
    Ok(ExitCode::SUCCESS)
}

fn need<T>(x: Option<T>, what: &str) -> Result<T> {
    x.ok_or_else(|| Error::InvalidParameter(format!("--{what} is required for this certificate")))
}

fn run_bound(a: &BoundArgs) -> Result<ExitCode> {
    match &a.command {
        BoundCommand::Lower { graph, p } => {
            let g = io::read_graph(graph)?;
            print(&lower_bound(&g, *p)?)?;
        }
        BoundCommand::Certificate {
            kind,
            graph,
            size,
            p,
            out,
        } => {
            let load = || -> Result<LabelledGraph> { io::read_graph(need(graph.as_deref(), "graph")?) };
            let cert = match kind {
                CertificateKind::Uniform => WeightCertificate::uniform(&load()?, *p)?,
                CertificateKind::Matching => WeightCertificate::matching(&load()?, *p),
                CertificateKind::DoubleWheel => WeightCertificate::double_wheel(need(*size, "size")?, *p)?,
                CertificateKind::Spider4 => WeightCertificate::spider4(need(*size, "size")?)?,
            };
            let text = serde_json::to_string_pretty(&cert)?;
            match out {
                Some(path) => fs::write(path, text + "\n")?,
                None => println!("{text}"),
            }
        }
        BoundCommand::Check { graph, p, certificate } => {
            let g = io::read_graph(graph)?;
            let cert: WeightCertificate = serde_json::from_str(&fs::read_to_string(certificate)?)?;
            let check = check_weight_certificate(&g, *p, &cert)?;
            print(&check)?;
            if !check.valid {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(a: &VerifyArgs) -> Result<ExitCode> {
    let (g, o1, o2) = a.pair.load()?;
    let plan = io::read_plan(&a.plan)?;
    let report = verify_plan(&g, &o1, &o2, &plan, a.p.unwrap_or(plan.p));
    print(&report)?;
    Ok(if report.valid { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run_corpus_cmd(a: &CorpusArgs) -> Result<ExitCode> {
    let mut spec = match (&a.spec, &a.family) {
        (Some(path), _) => serde_json::from_str(&fs::read_to_string(path)?)?,
        (None, Some(family)) => CorpusSpec {
            families: vec![FamilySpec {
                family: family.clone(),
                sizes: a.sizes.clone(),
                edges: a.edges.clone(),
                samples: a.samples,
            }],
            ..CorpusSpec::standard(a.seed)
        },
        (None, None) => CorpusSpec::standard(a.seed),
    };
    if a.spec.is_none() {
        spec.seed = a.seed;
        spec.random_pairs = !a.no_random_pairs;
        if !a.p.is_empty() {
            spec.p_values = a.p.clone();
        }
    }
    if let Some(m) = a.max_edges {
        spec.max_edges = m;
    }
    let report = run_corpus(&spec)?;
    if let Some(path) = &a.csv {
        report.write_csv(fs::File::create(path)?)?;
    }
    if let Some(path) = &a.json {
        fs::write(path, report.to_json()? + "\n")?;
    }
    let failures: Vec<_> = report
        .rows
        .iter()
        .filter(|r| !r.failures.is_empty())
        .map(|r| json!({ "instance": r.instance, "family": r.family, "n": r.n, "p": r.p, "pair": r.pair, "failures": r.failures }))
        .collect();
    print(&json!({ "summary": report.summary, "failures": failures }))?;
    Ok(if report.ok() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn dispatch(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Oracle(a) => run_oracle(a),
        Command::Plan(a) => run_plan(a),
        Command::Decompose(a) => run_decompose(a),
        Command::Generate(a) => run_generate(a),
        Command::Bound(a) => run_bound(a),
        Command::Verify(a) => run_verify(a),
        Command::Corpus(a) => run_corpus_cmd(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("invdiam: {e}");
            return ExitCode::from(2);
        }
    }
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("invdiam: {e}");
            ExitCode::from(2)
        }
    }
}
