//! Seeded cross-check corpus: for every generated graph and cap `p`, the
//! lower bound, the exact oracle (when the graph is small enough) and every
//! applicable planner are run and compared.
//!
//! A row fails when a planner errors or returns an invalid or over-bound
//! plan, when the lower bound exceeds the exact converse number, when a
//! planner beats the exact distance, or when the exact diameter exceeds
//! `⌈m/⌊p/2⌋⌉ + Ψ_p` for a known `Ψ_p`. Graphs above the oracle budget are
//! marked `skipped` in the oracle column and never count as a pass.

use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::BitVector;
use crate::bounds::generate::{generate, Family};
use crate::bounds::lower_bound;
use crate::error::{Error, Result};
use crate::graph::{disagreement, verify_plan, LabelledGraph, Orientation};
use crate::oracle::{Oracle, OracleConfig};
use crate::plan::{applicable_planners, psi, run_planner, PlanOptions};

/// Planner columns of the CSV, in order.
pub const PLANNERS: [&str; 7] = [
    "uppergen",
    "procedure1",
    "connected3",
    "degenerate",
    "tree",
    "planar-small",
    "planar-general",
];

/// One family with the sizes to generate (`n`, `k` or `q`, as the family
/// uses) and the number of seeded samples per size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: String,
    pub sizes: Vec<usize>,
    /// Edge counts, parallel to `sizes`; used by `random-connected` only.
    #[serde(default)]
    pub edges: Vec<usize>,
    #[serde(default = "one")]
    pub samples: usize,
}

fn one() -> usize {
    1
}

fn default_max_edges() -> usize {
    18
}

fn default_true() -> bool {
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub families: Vec<FamilySpec>,
    pub p_values: Vec<usize>,
    #[serde(default)]
    pub seed: u64,
    /// Largest edge count handed to the exact oracle.
    #[serde(default = "default_max_edges")]
    pub max_edges: usize,
    /// Besides the converse pair, also plan one random orientation pair.
    #[serde(default = "default_true")]
    pub random_pairs: bool,
}

impl CorpusSpec {
    pub fn empty() -> CorpusSpec {
        CorpusSpec {
            families: Vec::new(),
            p_values: Vec::new(),
            seed: 0,
            max_edges: default_max_edges(),
            random_pairs: true,
        }
    }

    /// The soundness corpus: random trees up to 200 vertices, random
    /// connected graphs up to 60 edges and random triangulations up to 40
    /// vertices, two samples per size, `p ∈ {2..10}`; 540 (graph, p)
    /// instances, a third of them small enough for the oracle.
    pub fn standard(seed: u64) -> CorpusSpec {
        let fam = |family: &str, sizes: &[usize], edges: &[usize]| FamilySpec {
            family: family.into(),
            sizes: sizes.to_vec(),
            edges: edges.to_vec(),
            samples: 2,
        };
        CorpusSpec {
            families: vec![
                fam("random-tree", &[5, 9, 13, 17, 19, 40, 80, 120, 160, 200], &[]),
                fam(
                    "random-connected",
                    &[6, 7, 8, 10, 12, 20, 25, 30, 40, 50],
                    &[9, 12, 15, 18, 18, 30, 40, 45, 55, 60],
                ),
                fam("random-triangulation", &[4, 5, 6, 7, 8, 12, 20, 28, 36, 40], &[]),
            ],
            p_values: (2..=10).collect(),
            seed,
            max_edges: default_max_edges(),
            random_pairs: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlannerOutcome {
    pub name: String,
    pub length: Option<usize>,
    pub bound: Option<usize>,
    pub route: Option<String>,
    pub error: Option<String>,
}

/// What a failed check was about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureKind {
    /// A planner errored, or returned an invalid or over-bound plan.
    Planner,
    /// The lower bound exceeds the exact converse number.
    LowerBound,
    /// A planner is shorter than the exact distance.
    BelowExact,
    /// The exact diameter exceeds `⌈m/⌊p/2⌋⌉ + Ψ_p`.
    Psi,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub kind: FailureKind,
    pub message: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// No failure, but the oracle cross-checks were not run.
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub instance: usize,
    pub family: String,
    pub size: usize,
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub p: usize,
    /// `converse` or `random`.
    pub pair: String,
    pub lower_bound: usize,
    pub lb_method: String,
    /// `exact` or `skipped`.
    pub oracle: String,
    pub oracle_diameter: Option<usize>,
    pub oracle_converse: Option<usize>,
    pub oracle_distance: Option<usize>,
    pub planners: Vec<PlannerOutcome>,
    pub best_length: Option<usize>,
    pub best_planner: Option<String>,
    pub status: Status,
    pub failures: Vec<Failure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub graphs: usize,
    pub instances: usize,
    pub rows: usize,
    pub passed: usize,
    pub skipped: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub spec: CorpusSpec,
    pub summary: Summary,
    pub rows: Vec<Row>,
}

impl RunReport {
    pub fn ok(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn csv_header() -> Vec<String> {
        let mut h: Vec<String> = [
            "instance",
            "family",
            "size",
            "seed",
            "n",
            "m",
            "p",
            "pair",
            "lower_bound",
            "lb_method",
            "oracle",
            "oracle_diameter",
            "oracle_converse",
            "oracle_distance",
        ]
        .map(String::from)
        .to_vec();
        for name in PLANNERS {
            h.push(format!("{name}_len"));
            h.push(format!("{name}_bound"));
        }
        h.extend(["best_len", "best_planner", "status", "failures"].map(String::from));
        h
    }

    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(Self::csv_header()).map_err(csv_err)?;
        let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
        for r in &self.rows {
            let mut rec = vec![
                r.instance.to_string(),
                r.family.clone(),
                r.size.to_string(),
                r.seed.to_string(),
                r.n.to_string(),
                r.m.to_string(),
                r.p.to_string(),
                r.pair.clone(),
                r.lower_bound.to_string(),
                r.lb_method.clone(),
                r.oracle.clone(),
                opt(r.oracle_diameter),
                opt(r.oracle_converse),
                opt(r.oracle_distance),
            ];
            for name in PLANNERS {
                let o = r.planners.iter().find(|o| o.name == name);
                rec.push(opt(o.and_then(|o| o.length)));
                rec.push(opt(o.and_then(|o| o.bound)));
            }
            rec.push(opt(r.best_length));
            rec.push(r.best_planner.clone().unwrap_or_default());
            rec.push(r.status.as_str().into());
            rec.push(r.failures.iter().map(|f| f.message.as_str()).collect::<Vec<_>>().join("; "));
            out.write_record(&rec).map_err(csv_err)?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

fn csv_err(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        other => Error::Io(std::io::Error::other(format!("{other:?}"))),
    }
}

struct Instance {
    family: String,
    size: usize,
    seed: u64,
    graph: LabelledGraph,
    planar: bool,
}

fn instances(spec: &CorpusSpec) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for (fi, fs) in spec.families.iter().enumerate() {
        if !fs.edges.is_empty() && fs.edges.len() != fs.sizes.len() {
            return Err(Error::InvalidParameter(format!(
                "family {}: {} edge counts for {} sizes",
                fs.family,
                fs.edges.len(),
                fs.sizes.len()
            )));
        }
        for (si, &size) in fs.sizes.iter().enumerate() {
            for sample in 0..fs.samples {
                let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
                rng.set_stream(((fi as u64) << 48) | ((si as u64) << 24) | sample as u64);
                let seed: u64 = rng.gen();
                let family = Family::parse(&fs.family, size, fs.edges.get(si).copied(), seed)?;
                let graph = generate(&family)?;
                out.push(Instance {
                    family: fs.family.clone(),
                    size,
                    seed,
                    planar: family.is_planar(),
                    graph,
                });
            }
        }
    }
    Ok(out)
}

fn random_orientation(m: usize, rng: &mut ChaCha8Rng) -> Orientation {
    Orientation::new(BitVector::from_bools((0..m).map(|_| rng.gen::<bool>())))
}

struct Exact {
    diameter: usize,
    converse: usize,
    oracle: Oracle,
}

fn exact(g: &LabelledGraph, p: usize, max_edges: usize) -> Option<Exact> {
    if g.m() > max_edges {
        return None;
    }
    let oracle = Oracle::new(g, p, &OracleConfig::with_max_edges(max_edges)).ok()?;
    let diameter = oracle.exploration().eccentricity();
    let all = if g.m() == 64 { u64::MAX } else { (1u64 << g.m()) - 1 };
    let converse = oracle.distance_mask(all)?;
    Some(Exact {
        diameter,
        converse,
        oracle,
    })
}

fn rows_for(index: usize, inst: &Instance, p: usize, spec: &CorpusSpec) -> Result<Vec<Row>> {
    let g = &inst.graph;
    let lb = lower_bound(g, p)?;
    let ex = exact(g, p, spec.max_edges);
    let mut pairs = vec![("converse", Orientation::zeros(g.m()), Orientation::zeros(g.m()).converse())];
    if spec.random_pairs {
        let mut rng = ChaCha8Rng::seed_from_u64(inst.seed ^ p as u64);
        pairs.push(("random", random_orientation(g.m(), &mut rng), random_orientation(g.m(), &mut rng)));
    }
    let opts = PlanOptions {
        planar: inst.planar,
        ..PlanOptions::default()
    };
    let mut rows = Vec::new();
    for (pair, o1, o2) in pairs {
        let mut failures = Vec::new();
        let mut fail = |kind, message: String| failures.push(Failure { kind, message });
        let distance = ex
            .as_ref()
            .and_then(|e| e.oracle.distance_mask(disagreement(&o1, &o2).ok()?.bits().to_u64()));
        if let Some(e) = &ex {
            if lb.value > e.converse {
                fail(FailureKind::LowerBound, format!("lower bound {} above converse number {}", lb.value, e.converse));
            }
            if let Some(c) = psi(p) {
                let cap = g.m().div_ceil(p / 2) + c;
                if e.diameter > cap {
                    fail(FailureKind::Psi, format!("diameter {} above ⌈m/⌊p/2⌋⌉ + Ψ_p = {cap}", e.diameter));
                }
            }
        }
        let mut planners = Vec::new();
        for name in applicable_planners(g, p, inst.planar) {
            let outcome = match run_planner(name, g, p, &o1, &o2, &opts) {
                Ok(r) => {
                    let report = verify_plan(g, &o1, &o2, &r.plan, p);
                    if !report.valid {
                        fail(FailureKind::Planner, format!("{name}: invalid plan {:?}", report.violations));
                    }
                    if r.plan.len() > r.bound {
                        fail(FailureKind::Planner, format!("{name}: length {} above bound {}", r.plan.len(), r.bound));
                    }
                    if let Some(d) = distance {
                        if r.plan.len() < d {
                            fail(FailureKind::BelowExact, format!("{name}: length {} below exact distance {d}", r.plan.len()));
                        }
                    }
                    PlannerOutcome {
                        name: name.into(),
                        length: Some(r.plan.len()),
                        bound: Some(r.bound),
                        route: Some(r.route),
                        error: None,
                    }
                }
                Err(e) => {
                    fail(FailureKind::Planner, format!("{name}: {e}"));
                    PlannerOutcome {
                        name: name.into(),
                        length: None,
                        bound: None,
                        route: None,
                        error: Some(e.to_string()),
                    }
                }
            };
            planners.push(outcome);
        }
        let best = planners
            .iter()
            .filter_map(|o| o.length.map(|l| (l, o.name.clone())))
            .min();
        let status = if !failures.is_empty() {
            Status::Fail
        } else if ex.is_none() {
            Status::Skipped
        } else {
            Status::Pass
        };
        rows.push(Row {
            instance: index,
            family: inst.family.clone(),
            size: inst.size,
            seed: inst.seed,
            n: g.n(),
            m: g.m(),
            p,
            pair: pair.into(),
            lower_bound: lb.value,
            lb_method: lb.method.clone(),
            oracle: if ex.is_some() { "exact" } else { "skipped" }.into(),
            oracle_diameter: ex.as_ref().map(|e| e.diameter),
            oracle_converse: ex.as_ref().map(|e| e.converse),
            oracle_distance: distance,
            planners,
            best_length: best.as_ref().map(|b| b.0),
            best_planner: best.map(|b| b.1),
            status,
            failures,
        });
    }
    Ok(rows)
}

/// Runs the whole matrix. Instances run concurrently; rows come back in
/// instance order, so the report does not depend on the worker count.
pub fn run_corpus(spec: &CorpusSpec) -> Result<RunReport> {
    let graphs = instances(spec)?;
    let jobs: Vec<(usize, usize)> = (0..graphs.len())
        .flat_map(|i| spec.p_values.iter().filter(|&&p| p >= 2).map(move |&p| (i, p)))
        .collect();
    let chunks: Vec<Vec<Row>> = jobs
        .par_iter()
        .enumerate()
        .map(|(k, &(i, p))| rows_for(k, &graphs[i], p, spec))
        .collect::<Result<_>>()?;
    let rows: Vec<Row> = chunks.into_iter().flatten().collect();
    let count = |s: Status| rows.iter().filter(|r| r.status == s).count();
    let summary = Summary {
        graphs: graphs.len(),
        instances: jobs.len(),
        rows: rows.len(),
        passed: count(Status::Pass),
        skipped: count(Status::Skipped),
        failed: count(Status::Fail),
    };
    Ok(RunReport {
        spec: spec.clone(),
        summary,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_spec_gives_empty_report() {
        let r = run_corpus(&CorpusSpec::empty()).unwrap();
        assert!(r.rows.is_empty());
        assert!(r.ok());
    }

    #[test]
    fn small_trees_are_exact() {
        let spec = CorpusSpec {
            families: vec![FamilySpec {
                family: "random-tree".into(),
                sizes: (2..=9).collect(),
                edges: Vec::new(),
                samples: 3,
            }],
            p_values: vec![3],
            seed: 5,
            max_edges: 18,
            random_pairs: false,
        };
        let r = run_corpus(&spec).unwrap();
        assert!(r.ok(), "{:?}", r.rows.iter().find(|r| r.status == Status::Fail));
        for row in &r.rows {
            let want = (row.n - 1).div_ceil(2);
            assert_eq!(row.oracle_converse, Some(want));
            assert_eq!(row.oracle_diameter, Some(want));
            let tree = row.planners.iter().find(|o| o.name == "tree").unwrap();
            assert_eq!(tree.length, Some(want));
        }
    }

    #[test]
    fn deterministic_csv() {
        let mut spec = CorpusSpec::standard(3);
        for f in &mut spec.families {
            f.sizes.truncate(3);
            f.edges.truncate(3);
            f.samples = 1;
        }
        spec.p_values = vec![3, 6];
        let render = || {
            let mut buf = Vec::new();
            run_corpus(&spec).unwrap().write_csv(&mut buf).unwrap();
            buf
        };
        let a = render();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let b = pool.install(render);
        assert_eq!(a, b);
        let text = String::from_utf8(a).unwrap();
        assert_eq!(text.lines().count(), 1 + 9 * 2 * 2);
        assert!(text.starts_with("instance,family,size,seed,n,m,p,pair,"));
    }
}
