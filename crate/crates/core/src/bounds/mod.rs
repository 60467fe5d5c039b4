//! Lower bounds on converse numbers (hence on inversion diameters) with
//! exactly verified weight certificates.
//!
//! A weight certificate assigns a nonnegative rational weight to each edge
//! and a cap such that no set of at most `p` vertices spans more than the
//! cap. Reversing every edge needs every edge inside some step, so at least
//! `⌈total / cap⌉` steps are needed.

pub mod generate;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{InversionPlan, LabelledGraph};

pub type Weight = Ratio<i64>;

/// Largest vertex count verified by plain subset enumeration.
pub const EXHAUSTIVE_MAX_VERTICES: usize = 24;
/// Search-node budget for branch-and-bound verification on larger graphs.
pub const BRANCH_AND_BOUND_BUDGET: u64 = 200_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightCertificate {
    pub weights: Vec<Weight>,
    pub cap: Weight,
}

impl WeightCertificate {
    pub fn total(&self) -> Weight {
        self.weights.iter().copied().fold(Weight::zero(), |a, w| a + w)
    }

    /// `⌈total / cap⌉`, the number of steps the certificate forces.
    pub fn implied_bound(&self) -> usize {
        if self.cap <= Weight::zero() {
            return 0;
        }
        (self.total() / self.cap).ceil().to_integer().max(0) as usize
    }

    /// Weight `1 / C(p, 2)` on every edge, cap 1.
    pub fn uniform(g: &LabelledGraph, p: usize) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidParameter(format!("p must be at least 2, got {p}")));
        }
        let pairs = (p * (p - 1) / 2) as i64;
        Ok(WeightCertificate {
            weights: vec![Weight::new(1, pairs); g.m()],
            cap: Weight::from_integer(1),
        })
    }

    /// Weight 1 on every edge, cap `⌊p/2⌋`; valid for matchings.
    pub fn matching(g: &LabelledGraph, p: usize) -> Self {
        WeightCertificate {
            weights: vec![Weight::from_integer(1); g.m()],
            cap: Weight::from_integer((p / 2) as i64),
        }
    }

    /// Double wheel on `n` vertices (hubs `n-2`, `n-1`): hub edges weigh
    /// `1/((p-2)²+1)`, rim edges `(p-3)/((p-2)²+1)`, cap 1.
    ///
    /// Needs `n >= p + 2`. For `p >= 6` the rim must also be longer than
    /// `p` (so `n >= p + 3`): a set holding the whole rim would span
    /// `p(p-3) > (p-2)²+1` units of rim weight.
    pub fn double_wheel(n: usize, p: usize) -> Result<Self> {
        if p < 3 || n < Self::double_wheel_min_n(p) {
            return Err(Error::InvalidParameter(format!(
                "double wheel certificate needs p >= 3 and n >= {}, got n = {n}, p = {p}",
                Self::double_wheel_min_n(p)
            )));
        }
        let g = generate::double_wheel(n)?;
        let d = ((p - 2) * (p - 2) + 1) as i64;
        let hubs = [n - 2, n - 1];
        let weights = g
            .edges()
            .iter()
            .map(|&(a, b)| {
                if hubs.contains(&a) || hubs.contains(&b) {
                    Weight::new(1, d)
                } else {
                    Weight::new(p as i64 - 3, d)
                }
            })
            .collect();
        Ok(WeightCertificate {
            weights,
            cap: Weight::from_integer(1),
        })
    }

    /// Smallest `n` for which [`Self::double_wheel`] is defined.
    pub fn double_wheel_min_n(p: usize) -> usize {
        if p <= 5 {
            (p + 2).max(5)
        } else {
            p + 3
        }
    }

    /// Spider of [`generate::spider4`], `p = 4`: weight 1 on centre edges,
    /// 2 on pendant edges, cap 4.
    pub fn spider4(n: usize) -> Result<Self> {
        let g = generate::spider4(n)?;
        let weights = g
            .edges()
            .iter()
            .map(|&(a, _)| Weight::from_integer(if a == 0 { 1 } else { 2 }))
            .collect();
        Ok(WeightCertificate {
            weights,
            cap: Weight::from_integer(4),
        })
    }
}

/// Heaviest set of at most `p` vertices: its weight and the lexicographically
/// least such set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeaviestSet {
    pub weight: Weight,
    pub set: Vec<usize>,
}

/// Integer-scaled weights: `w(e) · lcm(denominators)`.
fn scale(weights: &[Weight]) -> Result<(Vec<u64>, i64)> {
    let mut l: i64 = 1;
    for w in weights {
        if *w < Weight::zero() {
            return Err(Error::InvalidParameter("certificate weights must be nonnegative".into()));
        }
        let d = *w.denom();
        l = num_integer_lcm(l, d).ok_or_else(|| Error::BudgetExceeded("weight denominators overflow".into()))?;
    }
    let ints = weights
        .iter()
        .map(|w| (w * l).to_integer().to_u64().expect("nonnegative"))
        .collect();
    Ok((ints, l))
}

fn num_integer_lcm(a: i64, b: i64) -> Option<i64> {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    (a / x).checked_mul(b)
}

struct Weighted {
    n: usize,
    k: usize,
    w: Vec<u64>,
}

impl Weighted {
    fn at(&self, a: usize, b: usize) -> u64 {
        self.w[a * self.n + b]
    }

    /// Depth-first enumeration of all `k`-subsets extending `chosen`.
    fn exhaustive(&self, chosen: &mut Vec<usize>, next: usize, acc: u64, best: &mut (u64, Vec<usize>)) {
        if chosen.len() == self.k {
            if acc > best.0 || best.1.is_empty() {
                *best = (acc, chosen.clone());
            }
            return;
        }
        let need = self.k - chosen.len();
        for v in next..=self.n - need {
            let gain: u64 = chosen.iter().map(|&u| self.at(u, v)).sum();
            chosen.push(v);
            self.exhaustive(chosen, v + 1, acc + gain, best);
            chosen.pop();
        }
    }

    /// Branch and bound: the remaining slots can add at most the sum of the
    /// largest per-candidate potentials, where a candidate's potential is
    /// its weight to the chosen set plus its weight to later candidates.
    fn branch(
        &self,
        chosen: &mut Vec<usize>,
        next: usize,
        acc: u64,
        best: &mut (u64, Vec<usize>),
        nodes: &mut u64,
    ) -> Result<()> {
        *nodes += 1;
        if *nodes > BRANCH_AND_BOUND_BUDGET {
            return Err(Error::BudgetExceeded(format!(
                "certificate verification exceeded {BRANCH_AND_BOUND_BUDGET} search nodes"
            )));
        }
        if chosen.len() == self.k {
            if acc > best.0 || best.1.is_empty() {
                *best = (acc, chosen.clone());
            }
            return Ok(());
        }
        let need = self.k - chosen.len();
        if next + need > self.n {
            return Ok(());
        }
        let mut pot: Vec<u64> = (next..self.n)
            .map(|v| {
                chosen.iter().map(|&u| self.at(u, v)).sum::<u64>()
                    + ((v + 1)..self.n).map(|u| self.at(u, v)).sum::<u64>()
            })
            .collect();
        pot.sort_unstable_by(|a, b| b.cmp(a));
        let bound = acc + pot.iter().take(need).sum::<u64>();
        if !best.1.is_empty() && bound <= best.0 {
            return Ok(());
        }
        let gain: u64 = chosen.iter().map(|&u| self.at(u, next)).sum();
        chosen.push(next);
        self.branch(chosen, next + 1, acc + gain, best, nodes)?;
        chosen.pop();
        self.branch(chosen, next + 1, acc, best, nodes)
    }
}

/// Exact maximum total weight spanned by a set of at most `p` vertices.
/// Weights are nonnegative, so sets of exactly `min(p, n)` vertices
/// suffice. Exhaustive (in parallel) for `n ≤ 24`, branch and bound with a
/// node budget above.
pub fn heaviest_set(g: &LabelledGraph, p: usize, weights: &[Weight]) -> Result<HeaviestSet> {
    if weights.len() != g.m() {
        return Err(Error::LengthMismatch {
            expected: g.m(),
            got: weights.len(),
        });
    }
    let (ints, l) = scale(weights)?;
    let n = g.n();
    let k = p.min(n);
    let mut w = vec![0u64; n * n];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        w[a * n + b] = ints[e];
        w[b * n + a] = ints[e];
    }
    let wt = Weighted { n, k, w };
    let best = if k == 0 {
        (0, Vec::new())
    } else if n <= EXHAUSTIVE_MAX_VERTICES {
        (0..=n - k)
            .into_par_iter()
            .map(|first| {
                let mut best = (0, Vec::new());
                wt.exhaustive(&mut vec![first], first + 1, 0, &mut best);
                best
            })
            .reduce(|| (0, Vec::new()), pick_better)
    } else {
        let mut best = (0, Vec::new());
        wt.branch(&mut Vec::new(), 0, 0, &mut best, &mut 0)?;
        best
    };
    Ok(HeaviestSet {
        weight: Weight::new(best.0 as i64, l),
        set: best.1,
    })
}

fn pick_better(a: (u64, Vec<usize>), b: (u64, Vec<usize>)) -> (u64, Vec<usize>) {
    match (a.1.is_empty(), b.1.is_empty()) {
        (true, _) => b,
        (_, true) => a,
        _ if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) => b,
        _ => a,
    }
}

/// Outcome of verifying a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateCheck {
    pub valid: bool,
    pub heaviest: HeaviestSet,
    pub implied_bound: usize,
}

/// Checks that every set of at most `p` vertices spans weight at most the
/// cap. When valid, `conv^{≤p}(g) ≥ ⌈total/cap⌉`.
pub fn check_weight_certificate(g: &LabelledGraph, p: usize, cert: &WeightCertificate) -> Result<CertificateCheck> {
    let heaviest = heaviest_set(g, p, &cert.weights)?;
    let valid = heaviest.weight <= cert.cap && cert.cap > Weight::zero();
    Ok(CertificateCheck {
        valid,
        implied_bound: if valid { cert.implied_bound() } else { 0 },
        heaviest,
    })
}

pub fn verify_weight_certificate(g: &LabelledGraph, p: usize, cert: &WeightCertificate) -> Result<bool> {
    Ok(check_weight_certificate(g, p, cert)?.valid)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowerBoundReport {
    pub value: usize,
    pub method: String,
    pub certificate: Option<WeightCertificate>,
}

/// `⌈m/3 + n_o/6⌉` for `p = 3`, `n_o` the number of odd-degree vertices.
pub fn lb_odd_degree(g: &LabelledGraph) -> LowerBoundReport {
    let odd = (0..g.n()).filter(|&v| g.degree(v) % 2 == 1).count();
    LowerBoundReport {
        value: (2 * g.m() + odd).div_ceil(6),
        method: "odd-degree".into(),
        certificate: None,
    }
}

/// `2⌊(n-1)/7⌋` for the five-vertex spider tree on `n` vertices.
pub fn lb_tree5_spider(n: usize) -> LowerBoundReport {
    LowerBoundReport {
        value: 2 * (n.saturating_sub(1) / 7),
        method: "trace-weighting".into(),
        certificate: None,
    }
}

/// Weight of the trace (edges of one branch inside one step) of the
/// five-vertex spider: indexed by trace size and whether the edge to the
/// root is included.
pub fn tree5_trace_weight(size: usize, has_root_edge: bool) -> Weight {
    match (size, has_root_edge) {
        (0, _) => Weight::zero(),
        (1, false) => Weight::new(5, 3),
        (1, true) => Weight::new(5, 4),
        (2, false) => Weight::new(10, 3),
        (2, true) => Weight::new(9, 4),
        (3, false) => Weight::from_integer(5),
        (3, true) => Weight::new(7, 2),
        _ => Weight::from_integer(5),
    }
}

/// Trace weights of a plan on [`generate::spider5`]`(q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tree5Audit {
    pub set_weights: Vec<Weight>,
    pub branch_weights: Vec<Weight>,
    /// Every set weighs at most 5.
    pub sets_ok: bool,
    /// Every branch weighs at least 10.
    pub branches_ok: bool,
}

/// Audits a plan on the five-vertex spider: the lower-bound argument needs
/// each (≤5)-set to weigh at most 5 and each branch at least 10 when the
/// plan reverses every edge.
pub fn audit_tree5_plan(q: usize, plan: &InversionPlan) -> Result<Tree5Audit> {
    let g = generate::spider5(q)?;
    let mut set_weights = Vec::with_capacity(plan.len());
    let mut branch_weights = vec![Weight::zero(); q];
    for step in &plan.steps {
        let inside = |v: usize| step.vertices().binary_search(&v).is_ok();
        let mut total = Weight::zero();
        for (j, bw) in branch_weights.iter_mut().enumerate() {
            let b = 1 + 7 * j;
            let mut size = 0;
            let mut root_edge = false;
            for &(a, c) in g.edges() {
                let in_branch = a == 0 && c == b || (b..b + 7).contains(&a);
                if in_branch && inside(a) && inside(c) {
                    size += 1;
                    root_edge |= a == 0;
                }
            }
            let w = tree5_trace_weight(size, root_edge);
            total += w;
            *bw += w;
        }
        set_weights.push(total);
    }
    let five = Weight::from_integer(5);
    let ten = Weight::from_integer(10);
    Ok(Tree5Audit {
        sets_ok: set_weights.iter().all(|w| *w <= five),
        branches_ok: branch_weights.iter().all(|w| *w >= ten),
        set_weights,
        branch_weights,
    })
}

/// Best verified lower bound on `conv^{≤p}(g)` (and so on the diameter):
/// the edge-count bound `⌈m / C(p,2)⌉`, the odd-degree bound for `p = 3`,
/// the densest-set certificate (weight 1 per edge, cap the exact maximum
/// number of edges inside a `p`-set) when `n ≤ 24`, and any `extra`
/// certificates that verify. Ties keep the earlier method.
pub fn lower_bound_with(g: &LabelledGraph, p: usize, extra: &[WeightCertificate]) -> Result<LowerBoundReport> {
    if p < 2 {
        return Err(Error::InvalidParameter(format!("p must be at least 2, got {p}")));
    }
    let pairs = p * (p - 1) / 2;
    let mut best = LowerBoundReport {
        value: g.m().div_ceil(pairs),
        method: "edge-count".into(),
        certificate: None,
    };
    let mut consider = |r: LowerBoundReport| {
        if r.value > best.value {
            best = r;
        }
    };
    if p == 3 {
        consider(lb_odd_degree(g));
    }
    if g.m() > 0 && g.n() <= EXHAUSTIVE_MAX_VERTICES {
        let ones = vec![Weight::from_integer(1); g.m()];
        let cap = heaviest_set(g, p, &ones)?.weight;
        let cert = WeightCertificate { weights: ones, cap };
        consider(LowerBoundReport {
            value: cert.implied_bound(),
            method: "densest-set".into(),
            certificate: Some(cert),
        });
    }
    for cert in extra {
        if verify_weight_certificate(g, p, cert)? {
            consider(LowerBoundReport {
                value: cert.implied_bound(),
                method: "certificate".into(),
                certificate: Some(cert.clone()),
            });
        }
    }
    Ok(best)
}

pub fn lower_bound(g: &LabelledGraph, p: usize) -> Result<LowerBoundReport> {
    let extra = if g.m() > 0 && g.max_degree() <= 1 {
        vec![WeightCertificate::matching(g, p)]
    } else {
        Vec::new()
    };
    lower_bound_with(g, p, &extra)
}

#[cfg(test)]
mod tests {
    use super::generate::*;
    use super::*;
    use crate::oracle::{converse_number, OracleConfig};

    #[test]
    fn certificate_examples() {
        let dw = double_wheel(7).unwrap();
        let cert = WeightCertificate::double_wheel(7, 3).unwrap();
        assert!(verify_weight_certificate(&dw, 3, &cert).unwrap());
        assert_eq!(cert.implied_bound(), 5);

        let sp = spider4(9).unwrap();
        let cert = WeightCertificate::spider4(9).unwrap();
        let check = check_weight_certificate(&sp, 4, &cert).unwrap();
        assert!(check.valid);
        assert_eq!(check.heaviest.weight, Weight::from_integer(4));
        let mut lowered = cert.clone();
        lowered.cap -= Weight::new(1, 1000);
        assert!(!verify_weight_certificate(&sp, 4, &lowered).unwrap());

        let k5 = complete(5);
        let u = WeightCertificate::uniform(&k5, 3).unwrap();
        assert!(verify_weight_certificate(&k5, 3, &u).unwrap());
        assert_eq!(u.implied_bound(), 4);
    }

    #[test]
    fn double_wheel_needs_a_long_rim_from_p6() {
        // the whole rim of DW8 fits in a 6-set: 6 · 3/17 > 1
        let dw = double_wheel(8).unwrap();
        assert!(WeightCertificate::double_wheel(8, 6).is_err());
        let d = Weight::new(1, 17);
        let weights = dw.edges().iter().map(|&(_, b)| if b >= 6 { d } else { d * 3 }).collect();
        let cert = WeightCertificate { weights, cap: Weight::from_integer(1) };
        assert!(!verify_weight_certificate(&dw, 6, &cert).unwrap());
        for p in 3..=8 {
            let n = WeightCertificate::double_wheel_min_n(p);
            let cert = WeightCertificate::double_wheel(n, p).unwrap();
            assert!(verify_weight_certificate(&double_wheel(n).unwrap(), p, &cert).unwrap());
        }
    }

    #[test]
    fn double_wheel_bound_matches_formula() {
        let dw = double_wheel(20).unwrap();
        let cert = WeightCertificate::double_wheel(20, 4).unwrap();
        assert_eq!(cert.implied_bound(), 11);
        let r = lower_bound_with(&dw, 4, &[cert]).unwrap();
        assert!(r.value >= 11);
    }

    #[test]
    fn branch_and_bound_agrees_with_enumeration() {
        for seed in 0..6 {
            let g = random_connected(26, 50, seed).unwrap();
            let ones = vec![Weight::from_integer(1); g.m()];
            let bb = heaviest_set(&g, 5, &ones).unwrap();
            // enumeration on the same graph, forced through the exhaustive path
            let n = g.n();
            let mut w = vec![0u64; n * n];
            for &(a, b) in g.edges() {
                w[a * n + b] = 1;
                w[b * n + a] = 1;
            }
            let wt = Weighted { n, k: 5, w };
            let mut best = (0, Vec::new());
            wt.exhaustive(&mut Vec::new(), 0, 0, &mut best);
            assert_eq!(bb.weight, Weight::from_integer(best.0 as i64));
        }
    }

    #[test]
    fn odd_degree_examples() {
        assert_eq!(lb_odd_degree(&complete(4)).value, 3);
        let c6 = cycle(6).unwrap();
        assert_eq!(lb_odd_degree(&c6).value, 2);
        for q in 1..=6 {
            let g = odd_triangulation(q).unwrap();
            let n = g.n();
            assert_eq!(lb_odd_degree(&g).value, (7 * n).div_ceil(6) - 2);
        }
    }

    #[test]
    fn tree5_spider() {
        assert_eq!(lb_tree5_spider(8).value, 2);
        assert_eq!(lb_tree5_spider(15).value, 4);
        assert_eq!(lb_tree5_spider(7).value, 0);
        let g = spider5(1).unwrap();
        let conv = converse_number(&g, 5, &OracleConfig::default()).unwrap();
        assert_eq!(conv.value, Some(2));
        let audit = audit_tree5_plan(1, conv.witness_plan.as_ref().unwrap()).unwrap();
        assert!(audit.sets_ok && audit.branches_ok);
    }

    #[test]
    fn lower_bounds_sit_below_the_oracle() {
        let cfg = OracleConfig::default();
        for (g, p) in [(complete(4), 3), (matching(5, 0), 4), (g2(5).unwrap(), 3), (double_wheel(7).unwrap(), 4)] {
            let lb = lower_bound(&g, p).unwrap();
            let conv = converse_number(&g, p, &cfg).unwrap().value.unwrap();
            assert!(lb.value <= conv, "{lb:?} > {conv}");
        }
        assert_eq!(lower_bound(&matching(5, 0), 4).unwrap().value, 3);
    }
}
