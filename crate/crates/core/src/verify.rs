//! Named property suites run over generated corpora.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};

use serde::{Deserialize, Serialize};

use crate::bc::{bc_fvector, EdgeOrdering};
use crate::classify;
use crate::ears::{ear_decomposition, nest_analysis, EarDecomposition};
use crate::error::{Error, Result};
use crate::generator::{enumerate_blocks, enumerate_sp, MAX_BLOCK_EDGES};
use crate::graph::{EdgeSet, Multigraph};
use crate::hvector::{delta_vector, f_vector, h2_simple, h_vector};
use crate::sp;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Suite {
    Delta1EqP2,
    P1EqFbar,
    OrderingInvariance,
    S0Equivalences,
    S0Excluded,
    Outerplanar,
    AGraph,
    Delta2Nonneg,
    S1Nonneg,
    Bounds,
    ContractionLaw,
    EarCount,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Delta1EqP2,
        Suite::P1EqFbar,
        Suite::OrderingInvariance,
        Suite::S0Equivalences,
        Suite::S0Excluded,
        Suite::Outerplanar,
        Suite::AGraph,
        Suite::Delta2Nonneg,
        Suite::S1Nonneg,
        Suite::Bounds,
        Suite::ContractionLaw,
        Suite::EarCount,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Delta1EqP2 => "delta1-eq-p2",
            Suite::P1EqFbar => "p1-eq-fbar",
            Suite::OrderingInvariance => "ordering-invariance",
            Suite::S0Equivalences => "s0-equivalences",
            Suite::S0Excluded => "s0-excluded",
            Suite::Outerplanar => "outerplanar",
            Suite::AGraph => "a-graph",
            Suite::Delta2Nonneg => "delta2-nonneg",
            Suite::S1Nonneg => "s1-nonneg",
            Suite::Bounds => "bounds",
            Suite::ContractionLaw => "contraction-law",
            Suite::EarCount => "ear-count",
        }
    }

    /// Series-parallel closure only, or closure plus all small blocks.
    fn uses_blocks(self) -> bool {
        matches!(
            self,
            Suite::OrderingInvariance
                | Suite::S0Equivalences
                | Suite::S0Excluded
                | Suite::Outerplanar
                | Suite::AGraph
                | Suite::EarCount
        )
    }

    fn check(self, g: &Multigraph, seeds: u64) -> Result<Outcome> {
        match self {
            Suite::Delta1EqP2 => delta1_eq_p2(g, seeds),
            Suite::P1EqFbar => p1_eq_fbar(g, seeds),
            Suite::OrderingInvariance => ordering_invariance(g, seeds),
            Suite::S0Equivalences => s0_equivalences(g),
            Suite::S0Excluded => s0_excluded(g),
            Suite::Outerplanar => outerplanar(g),
            Suite::AGraph => a_graph(g),
            Suite::Delta2Nonneg => delta2_nonneg(g),
            Suite::S1Nonneg => s1_nonneg(g),
            Suite::Bounds => bounds(g),
            Suite::ContractionLaw => contraction_law(g),
            Suite::EarCount => ear_count(g, seeds),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
            format!("unknown suite {s:?}; expected one of {}", names.join(", "))
        })
    }
}

/// Result of one suite on one graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    /// Individual property instances checked (pairs, seeds, subsets, ...).
    pub samples: usize,
    pub problems: Vec<String>,
}

impl Outcome {
    fn expect(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.samples += 1;
        if !ok {
            self.problems.push(msg());
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph: Multigraph,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub graphs: usize,
    pub samples: usize,
    /// Graphs past an oracle size bound.
    pub skipped: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Runner {
    Sequential,
    /// Rayon pool with the given number of threads (0 = rayon's default).
    /// Without the `parallel` feature this runs sequentially.
    Parallel { jobs: usize },
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Operation bound for the series-parallel closure; the block corpus uses
    /// `min(max, 9)` edges.
    pub max: usize,
    pub seeds: u64,
    pub stop_on_fail: bool,
    pub runner: Runner,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            max: 6,
            seeds: 5,
            stop_on_fail: false,
            runner: Runner::Parallel { jobs: 0 },
        }
    }
}

/// Graphs the suite runs over.
pub fn corpus(suite: Suite, max: usize) -> Result<Vec<Multigraph>> {
    let mut out: Vec<Multigraph> = enumerate_sp(max)?.collect();
    if suite.uses_blocks() {
        out.extend(enumerate_blocks(max.min(MAX_BLOCK_EDGES))?.filter(|g| !is_sp_block(g)));
    }
    Ok(out)
}

fn is_sp_block(g: &Multigraph) -> bool {
    sp::is_series_parallel(g).unwrap_or(false)
}

enum Verdict {
    Checked(Outcome),
    Skipped,
    Failed(Counterexample),
}

fn run_one(suite: Suite, g: &Multigraph, seeds: u64) -> Verdict {
    match suite.check(g, seeds) {
        Ok(o) if o.problems.is_empty() => Verdict::Checked(o),
        Ok(o) => Verdict::Failed(Counterexample {
            graph: g.clone(),
            detail: o.problems.join("; "),
        }),
        Err(Error::SizeBound { .. }) => Verdict::Skipped,
        Err(e) => Verdict::Failed(Counterexample {
            graph: g.clone(),
            detail: format!("error: {e}"),
        }),
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<SuiteReport> {
    let graphs = corpus(suite, cfg.max)?;
    run_suite_on(suite, &graphs, cfg)
}

pub fn run_suite_on(suite: Suite, graphs: &[Multigraph], cfg: &VerifyConfig) -> Result<SuiteReport> {
    let stop = AtomicBool::new(false);
    let step = |g: &Multigraph| -> Option<Verdict> {
        if cfg.stop_on_fail && stop.load(Ordering::Relaxed) {
            return None;
        }
        let v = run_one(suite, g, cfg.seeds);
        if matches!(v, Verdict::Failed(_)) {
            stop.store(true, Ordering::Relaxed);
        }
        Some(v)
    };
    let verdicts: Vec<Verdict> = match cfg.runner {
        Runner::Sequential => graphs.iter().map_while(step).collect(),
        Runner::Parallel { jobs } => parallel_map(graphs, jobs, &step)?,
    };

    let mut report = SuiteReport {
        suite: suite.name().to_string(),
        graphs: 0,
        samples: 0,
        skipped: 0,
        counterexamples: Vec::new(),
    };
    for v in verdicts {
        match v {
            Verdict::Checked(o) => {
                report.graphs += 1;
                report.samples += o.samples;
            }
            Verdict::Skipped => report.skipped += 1,
            Verdict::Failed(c) => {
                report.graphs += 1;
                report.counterexamples.push(c);
            }
        }
    }
    report
        .counterexamples
        .sort_by_key(|c| (c.graph.edge_count(), c.graph.to_triples()));
    Ok(report)
}

#[cfg(feature = "parallel")]
fn parallel_map<F>(graphs: &[Multigraph], jobs: usize, step: &F) -> Result<Vec<Verdict>>
where
    F: Fn(&Multigraph) -> Option<Verdict> + Sync,
{
    use rayon::prelude::*;
    if jobs == 0 {
        return Ok(graphs.par_iter().filter_map(step).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    Ok(pool.install(|| graphs.par_iter().filter_map(step).collect()))
}

#[cfg(not(feature = "parallel"))]
fn parallel_map<F>(graphs: &[Multigraph], _jobs: usize, step: &F) -> Result<Vec<Verdict>>
where
    F: Fn(&Multigraph) -> Option<Verdict>,
{
    Ok(graphs.iter().map_while(step).collect())
}

fn delta1_eq_p2(g: &Multigraph, seeds: u64) -> Result<Outcome> {
    let mut o = Outcome::default();
    if g.edge_count() < 2 {
        return Ok(o);
    }
    let d1 = classify::delta1(g)?;
    for seed in 0..seeds {
        let d = ear_decomposition(g, seed)?;
        let rep = nest_analysis(g, &d)?;
        o.expect(rep.p2 as i64 == d1, || format!("seed {seed}: delta1 = {d1}, p2 = {}", rep.p2));
        // an ear of length >= 2 raises delta1 by 0 or 1; a single-edge ear
        // can also lower it by 1 (a hub chord added to K_{2,3})
        let mut prev = 0i64;
        for k in 1..d.ears.len() {
            let prefix: EdgeSet = d.ears[..=k].iter().flat_map(|e| e.edges.iter().copied()).collect();
            let cur = classify::delta1(&g.edge_subgraph(&prefix)?)?;
            let ok = if d.ears[k].len() >= 2 {
                cur == prev || cur == prev + 1
            } else {
                (cur - prev).abs() <= 1
            };
            o.expect(ok, || {
                format!("seed {seed}: ear {k} of length {} moves delta1 from {prev} to {cur}", d.ears[k].len())
            });
            prev = cur;
        }
    }
    Ok(o)
}

fn p1_eq_fbar(g: &Multigraph, seeds: u64) -> Result<Outcome> {
    let mut o = Outcome::default();
    if g.edge_count() < 2 {
        return Ok(o);
    }
    let fbar = sp::f_bar(g)?.len();
    let d1 = classify::delta1(g)?;
    let irreducible = sp::is_parallel_irreducible(g)?;
    let mut first: Option<(usize, usize)> = None;
    for seed in 0..seeds {
        let rep = nest_analysis(g, &ear_decomposition(g, seed)?)?;
        o.expect(rep.p1 == fbar, || format!("seed {seed}: p1 = {}, |F-bar| = {fbar}", rep.p1));
        let pair = (rep.p1, rep.p2);
        let base = *first.get_or_insert(pair);
        o.expect(pair == base, || format!("seed {seed}: (p1, p2) = {pair:?}, seed 0 gave {base:?}"));
        let p = rep.interval_count() as i64;
        o.expect(d1 <= p && ((d1 == p) == irreducible), || {
            format!("seed {seed}: delta1 = {d1}, p = {p}, irreducible = {irreducible}")
        });
    }
    Ok(o)
}

fn ordering_invariance(g: &Multigraph, seeds: u64) -> Result<Outcome> {
    let mut o = Outcome::default();
    if g.has_loops() || g.edge_count() > 12 {
        return Ok(o);
    }
    let f = f_vector(g)?;
    let mut orders = vec![EdgeOrdering::natural(g)];
    orders.extend((0..seeds.min(3)).map(|s| EdgeOrdering::random(g, s)));
    for ord in orders {
        let bc = bc_fvector(g, &ord)?;
        o.expect(bc == f, || format!("ordering {:?}: bc f = {bc:?}, from h = {f:?}", ord.as_slice()));
    }
    Ok(o)
}

fn oracle_ok(g: &Multigraph) -> bool {
    g.edge_count() > 0
        && !g.has_loops()
        && g.without_isolated_vertices().vertex_count() <= crate::limits::subdivision_vertices().min(10)
}

fn s0_equivalences(g: &Multigraph) -> Result<Outcome> {
    let mut o = Outcome::default();
    let a = classify::in_s0(g)?;
    let b = classify::in_s0_structural(g)?;
    o.expect(a == b, || format!("symmetric h = {a}, cycle leaves = {b}"));
    if oracle_ok(g) {
        let c = classify::in_s0_excluded_subgraph(g)?;
        o.expect(a == c, || format!("symmetric h = {a}, excluded subgraphs = {c}"));
    }
    Ok(o)
}

fn s0_excluded(g: &Multigraph) -> Result<Outcome> {
    let mut o = Outcome::default();
    if !oracle_ok(g) {
        return Err(Error::SizeBound {
            what: "excluded subgraph oracle",
            limit: crate::limits::subdivision_vertices(),
            actual: g.vertex_count(),
        });
    }
    let a = classify::in_s0(g)?;
    let c = classify::in_s0_excluded_subgraph(g)?;
    o.expect(a == c, || format!("in S0 = {a}, excluded subgraphs = {c}"));
    Ok(o)
}

fn outerplanar(g: &Multigraph) -> Result<Outcome> {
    let mut o = Outcome::default();
    let a = classify::is_outerplanar(g)?;
    let b = classify::is_outerplanar_oracle(g)?;
    o.expect(a == b, || format!("structural = {a}, subdivision oracle = {b}"));
    if b {
        let s0 = classify::in_s0(g)?;
        o.expect(s0, || "outerplanar but not in S0".into());
    }
    Ok(o)
}

fn a_graph(g: &Multigraph) -> Result<Outcome> {
    let mut o = Outcome::default();
    let a = classify::is_a_graph(g)?;
    let b = classify::is_a_graph_oracle(g)?;
    o.expect(a == b, || format!("structural = {a}, excluded subgraphs = {b}"));
    Ok(o)
}

fn delta2_nonneg(g: &Multigraph) -> Result<Outcome> {
    let mut o = Outcome::default();
    let r = classify::delta_nonneg_report(g)?;
    o.expect(r.delta2_nonneg, || format!("delta = {:?}", r.delta.0));
    if let Some(ok) = r.symmetric_unimodal {
        o.expect(ok, || format!("in S0 but h = {:?}", h_vector(g).map(|h| h.h)));
    }
    if g.is_simple() && g.is_connected() {
        let h = h_vector(g)?;
        let h2 = h2_simple(g)?;
        o.expect(h2 == h.get(2), || format!("h2 from triangles = {h2}, h = {:?}", h.h));
    }
    Ok(o)
}

fn s1_nonneg(g: &Multigraph) -> Result<Outcome> {
    let mut o = Outcome::default();
    let r = classify::delta_nonneg_report(g)?;
    if let Some(ok) = r.all_nonneg {
        o.expect(ok, || format!("in S1 with delta = {:?}", r.delta.0));
    }
    let a = classify::in_s1(g)?;
    let b = classify::in_s1_structural(g)?;
    o.expect(a == b, || format!("delta route = {a}, structural = {b}"));
    let c = classify::in_s1plus(g)?;
    let d = classify::in_s1plus_structural(g)?;
    o.expect(c == d, || format!("delta1 >= 1 is {c}, minor witness found = {d}"));
    Ok(o)
}

fn bounds(g: &Multigraph) -> Result<Outcome> {
    let mut o = Outcome::default();
    if g.rank() < 2 {
        return Ok(o);
    }
    for b in classify::bounds_report(g)?.iter().filter(|b| b.is_applicable()) {
        o.expect(b.passed(), || b.to_string());
    }
    Ok(o)
}

/// Every valid `(G, X)` with `X` inside a series class, and every edge `e`
/// with `G - e` separable.
fn contraction_law(g: &Multigraph) -> Result<Outcome> {
    let mut o = Outcome::default();
    if g.edge_count() < 2 {
        return Ok(o);
    }
    let d1 = classify::delta1(g)?;
    for class in sp::series_classes(g)? {
        let items: Vec<_> = class.iter().copied().collect();
        if items.len() < 2 || items.len() > 10 {
            continue;
        }
        for mask in 1u32..(1 << items.len()) {
            if mask.count_ones() < 2 {
                continue;
            }
            let x: EdgeSet = (0..items.len()).filter(|i| mask >> i & 1 == 1).map(|i| items[i]).collect();
            let t = match sp::contract_series_subset(g, &x) {
                Ok(t) => t,
                Err(Error::Precondition(_)) => continue,
                Err(e) => return Err(e),
            };
            let removable = sp::is_removable(g, &x)?;
            let dt = classify::delta1(&t)?;
            let expected = if removable { dt + 1 } else { dt };
            o.expect(d1 == expected, || {
                format!("X = {x:?}: delta1(G) = {d1}, delta1(G~) = {dt}, removable = {removable}")
            });
        }
    }
    if g.rank() >= 2 {
        for e in g.edge_ids() {
            let rest = g.delete_edge(e)?.without_isolated_vertices();
            if rest.edge_count() == 0 || rest.matroid_connected()? {
                continue;
            }
            let c = g.contract_edge(e)?;
            if c.has_loops() {
                continue;
            }
            let dc = delta_vector(&c)?.get(1);
            o.expect(dc <= d1, || format!("contracting {e}: delta1 {dc} > {d1}"));
        }
    }
    Ok(o)
}

fn ear_count(g: &Multigraph, seeds: u64) -> Result<Outcome> {
    let mut o = Outcome::default();
    if g.edge_count() < 2 {
        return Ok(o);
    }
    for seed in 0..seeds {
        let d: EarDecomposition = ear_decomposition(g, seed)?;
        d.validate(g)?;
        o.expect(d.len() == g.nullity(), || {
            format!("seed {seed}: {} ears, nullity {}", d.len(), g.nullity())
        });
    }
    Ok(o)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(runner: Runner) -> VerifyConfig {
        VerifyConfig {
            max: 4,
            seeds: 2,
            stop_on_fail: false,
            runner,
        }
    }

    #[test]
    fn chord_ear_can_lower_delta1() {
        let k23 = crate::fixtures::k2m(3);
        let mut g = k23.clone();
        g.add_edge(crate::EdgeId(7), crate::VertexId(1), crate::VertexId(2)).unwrap();
        let d = EarDecomposition::from_edge_sets(&g, &[vec![1, 2, 3, 4], vec![5, 6], vec![7]]).unwrap();
        assert_eq!(d.ears[2].len(), 1);
        assert_eq!(classify::delta1(&k23).unwrap(), 1);
        assert_eq!(classify::delta1(&g).unwrap(), 0);
    }

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn every_suite_passes_on_a_small_corpus() {
        for s in Suite::ALL {
            let r = run_suite(s, &small(Runner::Sequential)).unwrap();
            assert!(r.passed(), "{s}: {:?}", r.counterexamples);
            assert!(r.graphs > 0, "{s}");
        }
    }

    #[test]
    fn runners_agree() {
        for s in [Suite::Delta1EqP2, Suite::AGraph] {
            let a = run_suite(s, &small(Runner::Sequential)).unwrap();
            let b = run_suite(s, &small(Runner::Parallel { jobs: 2 })).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn errors_become_counterexamples() {
        let k4 = crate::fixtures::k4();
        let r = run_suite_on(Suite::Bounds, &[k4], &small(Runner::Sequential)).unwrap();
        assert_eq!(r.counterexamples.len(), 1);
        assert!(r.counterexamples[0].detail.contains("not series-parallel"));
    }
}
