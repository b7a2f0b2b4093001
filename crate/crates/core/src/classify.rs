//! Class membership (`S`, `S0`, `S1`, `S1+`, outerplanar, A-graph) and the
//! δ1 bounds, each decided two independent ways where possible.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ears::{ear_decomposition, nest_analysis};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Multigraph, VertexId};
use crate::hvector::{delta_vector, h_vector, DeltaVector, HVector};
use crate::sp::{self, k2m_subdivision_order, parallel_decomposition};
use crate::subdivision;

/// Subgraphs spanned by the connected components of the cycle matroid.
pub fn blocks(g: &Multigraph) -> Vec<Multigraph> {
    g.matroid_components()
        .iter()
        .map(|c| g.edge_subgraph(c).expect("component edges belong to g"))
        .collect()
}

fn no_loops(g: &Multigraph) -> Result<()> {
    if g.has_loops() {
        Err(Error::LoopsPresent)
    } else {
        Ok(())
    }
}

/// `M(G) ∈ S`: loopless with every block series-parallel.
pub fn in_s(g: &Multigraph) -> Result<bool> {
    if g.has_loops() {
        return Ok(false);
    }
    for b in blocks(g) {
        if !sp::is_series_parallel(&b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn require_s(g: &Multigraph) -> Result<()> {
    no_loops(g)?;
    if in_s(g)? {
        Ok(())
    } else {
        Err(Error::NotSeriesParallel)
    }
}

pub fn delta1(g: &Multigraph) -> Result<i64> {
    Ok(delta_vector(g)?.get(1))
}

/// δ1 summed over blocks.
pub fn delta1_by_blocks(g: &Multigraph) -> Result<i64> {
    no_loops(g)?;
    blocks(g).iter().map(delta1).sum()
}

/// `(p1, p2)` summed over blocks, each block with the ear decomposition
/// drawn from `seed`. Single-edge blocks contribute nothing.
pub fn nest_counts(g: &Multigraph, seed: u64) -> Result<(usize, usize)> {
    require_s(g)?;
    let (mut p1, mut p2) = (0, 0);
    for b in blocks(g) {
        if b.edge_count() < 2 {
            continue;
        }
        let rep = nest_analysis(&b, &ear_decomposition(&b, seed)?)?;
        p1 += rep.p1;
        p2 += rep.p2;
    }
    Ok((p1, p2))
}

/// δ1 as the number of nest intervals with `ℓ > 1`.
pub fn delta1_ears(g: &Multigraph, seed: u64) -> Result<i64> {
    Ok(nest_counts(g, seed)?.1 as i64)
}

pub fn in_s0(g: &Multigraph) -> Result<bool> {
    no_loops(g)?;
    Ok(h_vector(g)?.is_symmetric())
}

fn is_cycle_graph(g: &Multigraph) -> bool {
    g.edge_count() >= 2 && g.is_circuit(&g.edge_ids())
}

/// Every block is a single edge or splits into cycles.
pub fn in_s0_structural(g: &Multigraph) -> Result<bool> {
    no_loops(g)?;
    for b in blocks(g) {
        if b.edge_count() == 1 {
            continue;
        }
        if !sp::is_series_parallel(&b)? {
            return Ok(false);
        }
        if !parallel_decomposition(&b)?.components.iter().all(is_cycle_graph) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn in_s1(g: &Multigraph) -> Result<bool> {
    no_loops(g)?;
    let d = delta_vector(g)?;
    Ok(d.get(0) == 0 && d.get(1) == 1 && !d.0.is_empty())
}

/// Exactly one decomposition leaf over all blocks is a `K_{2,m}`
/// subdivision with `m >= 3`; every other leaf is a cycle.
pub fn in_s1_structural(g: &Multigraph) -> Result<bool> {
    no_loops(g)?;
    let mut k2m = 0;
    for b in blocks(g) {
        if b.edge_count() == 1 {
            continue;
        }
        if !sp::is_series_parallel(&b)? {
            return Ok(false);
        }
        for c in parallel_decomposition(&b)?.components {
            if k2m_subdivision_order(&c).is_some() {
                k2m += 1;
            } else if !is_cycle_graph(&c) {
                return Ok(false);
            }
        }
    }
    Ok(k2m == 1)
}

pub fn in_s1plus(g: &Multigraph) -> Result<bool> {
    require_s(g)?;
    Ok(delta1(g)? >= 1)
}

pub fn in_s1plus_structural(g: &Multigraph) -> Result<bool> {
    Ok(s1plus_witness(g)?.is_some())
}

/// A `K_{2,m}` subdivision (`m >= 3`) appearing as a decomposition leaf of a
/// minor reached by repeatedly deleting the ears over a lined nest interval
/// and contracting that interval to one edge. Edge ids are those of `g`.
pub fn s1plus_witness(g: &Multigraph) -> Result<Option<Multigraph>> {
    require_s(g)?;
    for b in blocks(g) {
        let mut h = b;
        loop {
            if h.edge_count() < 2 {
                break;
            }
            let d = parallel_decomposition(&h)?;
            if let Some(w) = d.components.into_iter().find(|c| k2m_subdivision_order(c).is_some()) {
                return Ok(Some(w));
            }
            if h.nullity() <= 1 {
                break;
            }
            match strip_lined_interval(&h)? {
                Some(next) if next.is_block() => h = next,
                _ => break,
            }
        }
    }
    Ok(None)
}

/// Deletes the ears sharing a lined nest interval `I` and contracts all
/// but one edge of `I`.
fn strip_lined_interval(g: &Multigraph) -> Result<Option<Multigraph>> {
    let d = ear_decomposition(g, 0)?;
    let rep = nest_analysis(g, &d)?;
    let deg = g.degrees();
    let inner_deg2 = |vs: &[VertexId]| vs.iter().all(|v| deg[v] == 2);
    for iv in &rep.intervals {
        let (a, b) = iv.endpoints;
        let path = g.edge_subgraph(&iv.edge_set())?;
        let inner: Vec<VertexId> = path.vertices().filter(|&v| v != a && v != b).collect();
        if !inner_deg2(&inner) || !iv.sigma.iter().all(|&k| inner_deg2(d.ears[k].internal())) {
            continue;
        }
        let drop: EdgeSet = iv.sigma.iter().flat_map(|&k| d.ears[k].edges.iter().copied()).collect();
        let rest = g.delete_edges(&drop)?.without_isolated_vertices();
        let tail: EdgeSet = iv.edge_set().into_iter().skip(1).collect();
        return Ok(Some(rest.contract_edges(&tail)?));
    }
    Ok(None)
}

/// No `K4` subdivision, and no vertex-induced `K_{2,3}` subdivision in the
/// simplification.
pub fn in_s0_excluded_subgraph(g: &Multigraph) -> Result<bool> {
    no_loops(g)?;
    Ok(!subdivision::has_k4_subdivision(g)? && !subdivision::has_induced_k23_subdivision(g)?)
}

/// In `S0`, and every block of the simplification splits with pairwise
/// distinct baseedges.
pub fn is_outerplanar(g: &Multigraph) -> Result<bool> {
    if !in_s0(g)? {
        return Ok(false);
    }
    let (s, _) = g.simplify();
    for b in blocks(&s) {
        if b.edge_count() == 1 {
            continue;
        }
        let base = parallel_decomposition(&b)?.baseedges;
        if base.iter().copied().collect::<EdgeSet>().len() != base.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// No subdivision of `K4` or `K_{2,3}`.
pub fn is_outerplanar_oracle(g: &Multigraph) -> Result<bool> {
    no_loops(g)?;
    Ok(!subdivision::has_k4_subdivision(g)? && !subdivision::has_k23_subdivision(g)?)
}

fn without_loops(g: &Multigraph) -> Result<Multigraph> {
    let loops: EdgeSet = g.edges().filter(|e| e.is_loop()).map(|e| e.id).collect();
    g.delete_edges(&loops)
}

/// Every block other than a single edge (or loop) splits into non-loop
/// cycles, and the set of all baseedges is a forest.
pub fn is_a_graph(g: &Multigraph) -> Result<bool> {
    let g = without_loops(g)?;
    let mut base = EdgeSet::new();
    for b in blocks(&g) {
        if b.edge_count() == 1 {
            continue;
        }
        if !sp::is_series_parallel(&b)? {
            return Ok(false);
        }
        let d = parallel_decomposition(&b)?;
        if !d.components.iter().all(is_cycle_graph) {
            return Ok(false);
        }
        base.extend(d.baseedges);
    }
    Ok(g.is_forest(&base))
}

/// No subdivision of `K4` or of `C²_m` (`m >= 3`), and no vertex-induced
/// `K_{2,3}` subdivision in the simplification.
pub fn is_a_graph_oracle(g: &Multigraph) -> Result<bool> {
    let g = without_loops(g)?;
    Ok(!subdivision::has_k4_subdivision(&g)?
        && !subdivision::has_doubled_cycle_subdivision(&g)?
        && !subdivision::has_induced_k23_subdivision(&g)?)
}

/// Exact rational `num / den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub num: i64,
    pub den: i64,
}

impl Fraction {
    pub fn int(n: i64) -> Self {
        Self { num: n, den: 1 }
    }

    fn cmp_to(&self, other: &Fraction) -> std::cmp::Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }

    fn max(self, other: Fraction) -> Fraction {
        if self.cmp_to(&other).is_ge() {
            self
        } else {
            other
        }
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Le,
    Ge,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum BoundStatus {
    Holds { equality: bool },
    Fails,
    Inapplicable { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub name: String,
    pub lhs: Option<Fraction>,
    pub rhs: Option<Fraction>,
    pub relation: Relation,
    pub status: BoundStatus,
    /// For bounds whose equality case forces parallel irreducibility: whether
    /// that consequence holds (`None` when there is no equality or the
    /// clause does not apply).
    pub equality_implies_irreducible: Option<bool>,
}

impl BoundCheck {
    fn evaluate(name: &str, lhs: Fraction, rel: Relation, rhs: Fraction, irreducible: Option<bool>) -> Self {
        let ord = lhs.cmp_to(&rhs);
        let ok = match rel {
            Relation::Le => ord.is_le(),
            Relation::Ge => ord.is_ge(),
        };
        let equality = ord.is_eq();
        let status = if ok {
            BoundStatus::Holds { equality }
        } else {
            BoundStatus::Fails
        };
        Self {
            name: name.into(),
            lhs: Some(lhs),
            rhs: Some(rhs),
            relation: rel,
            status,
            equality_implies_irreducible: irreducible.filter(|_| equality),
        }
    }

    fn inapplicable(name: &str, rel: Relation, reason: &str) -> Self {
        Self {
            name: name.into(),
            lhs: None,
            rhs: None,
            relation: rel,
            status: BoundStatus::Inapplicable { reason: reason.into() },
            equality_implies_irreducible: None,
        }
    }

    pub fn is_applicable(&self) -> bool {
        !matches!(self.status, BoundStatus::Inapplicable { .. })
    }

    /// Not failed, and the equality consequence (if any) holds.
    pub fn passed(&self) -> bool {
        self.status != BoundStatus::Fails && self.equality_implies_irreducible != Some(false)
    }
}

impl fmt::Display for BoundCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = match self.relation {
            Relation::Le => "<=",
            Relation::Ge => ">=",
        };
        match (&self.status, self.lhs, self.rhs) {
            (BoundStatus::Inapplicable { reason }, _, _) => write!(f, "{}: n/a ({reason})", self.name),
            (status, Some(l), Some(r)) => {
                let verdict = if *status == BoundStatus::Fails { "FAIL" } else { "ok" };
                write!(f, "{}: {l} {rel} {r} {verdict}", self.name)
            }
            _ => write!(f, "{}", self.name),
        }
    }
}

/// The δ1 upper and lower bounds and `δ2 >= 0` for a series-parallel block of
/// rank at least 2. Bounds whose hypotheses fail are marked inapplicable.
pub fn bounds_report(g: &Multigraph) -> Result<Vec<BoundCheck>> {
    if !sp::is_series_parallel(g)? {
        return Err(Error::NotSeriesParallel);
    }
    let r = g.rank();
    if r < 2 {
        return Err(Error::Precondition("rank must be at least 2".into()));
    }
    let h = h_vector(g)?;
    let d = h.delta();
    let d1 = d.get(1);
    let h1 = h.get(1);
    let nu = g.nu() as i64;
    let irreducible = sp::is_parallel_irreducible(g)?;
    // the equality clauses of the first two bounds need a simple matroid:
    // a triangle with a doubled edge has delta1 = h1 - 1 and is reducible
    let simple_irreducible = g.is_simple().then_some(irreducible);
    let mut out = vec![BoundCheck::evaluate(
        "delta1 <= h1 - 1",
        Fraction::int(d1),
        Relation::Le,
        Fraction::int(h1 - 1),
        simple_irreducible,
    )];
    out.push(if r >= 3 {
        BoundCheck::evaluate(
            "h_{r-2} <= 2 h1 - 1",
            Fraction::int(h.get(r - 2)),
            Relation::Le,
            Fraction::int(2 * h1 - 1),
            simple_irreducible,
        )
    } else {
        BoundCheck::inapplicable("h_{r-2} <= 2 h1 - 1", Relation::Le, "rank < 3")
    });
    out.push(if nu > 0 {
        BoundCheck::evaluate(
            "delta1 <= 2 nu - 3",
            Fraction::int(d1),
            Relation::Le,
            Fraction::int(2 * nu - 3),
            Some(irreducible),
        )
    } else {
        BoundCheck::inapplicable("delta1 <= 2 nu - 3", Relation::Le, "nu = 0")
    });
    out.push(if irreducible {
        let mu = sp::mu(g)? as i64;
        let rhs = Fraction::int(mu).max(Fraction { num: nu, den: 2 });
        BoundCheck::evaluate("delta1 >= max(mu, nu/2)", Fraction::int(d1), Relation::Ge, rhs, None)
    } else {
        BoundCheck::inapplicable("delta1 >= max(mu, nu/2)", Relation::Ge, "not parallel irreducible")
    });
    out.push(BoundCheck::evaluate(
        "delta2 >= 0",
        Fraction::int(d.get(2)),
        Relation::Ge,
        Fraction::int(0),
        None,
    ));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaNonnegReport {
    pub delta: DeltaVector,
    pub delta2_nonneg: bool,
    pub in_s1: bool,
    /// Every δ_i >= 0; checked only in `S1`.
    pub all_nonneg: Option<bool>,
    pub in_s0: bool,
    /// Symmetric and unimodal h; checked only in `S0`.
    pub symmetric_unimodal: Option<bool>,
}

impl DeltaNonnegReport {
    pub fn passed(&self) -> bool {
        self.delta2_nonneg && self.all_nonneg != Some(false) && self.symmetric_unimodal != Some(false)
    }
}

pub fn delta_nonneg_report(g: &Multigraph) -> Result<DeltaNonnegReport> {
    require_s(g)?;
    let h = h_vector(g)?;
    let delta = h.delta();
    let in_s1 = in_s1(g)?;
    let in_s0 = h.is_symmetric();
    Ok(DeltaNonnegReport {
        delta2_nonneg: delta.get(2) >= 0,
        all_nonneg: in_s1.then(|| delta.is_nonnegative()),
        symmetric_unimodal: in_s0.then(|| h.is_symmetric() && h.is_unimodal_at_middle()),
        delta,
        in_s1,
        in_s0,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub vertices: usize,
    pub edges: usize,
    pub rank: usize,
    pub nullity: usize,
    pub nu: usize,
    pub is_block: bool,
    /// Every block series-parallel.
    pub is_sp: bool,
    pub h_vector: HVector,
    pub delta_vector: DeltaVector,
    pub p1: Option<usize>,
    pub p2: Option<usize>,
    pub f_bar: Option<usize>,
    pub mu: Option<usize>,
    pub in_s0: bool,
    pub in_s1: bool,
    pub in_s1plus: Option<bool>,
    pub parallel_irreducible: Option<bool>,
    pub outerplanar: bool,
    pub a_graph: bool,
    pub bounds: Option<Vec<BoundCheck>>,
}

/// Everything above for a loopless graph, using the structural routes.
pub fn classify(g: &Multigraph) -> Result<ClassReport> {
    no_loops(g)?;
    let h = h_vector(g)?;
    let is_sp = in_s(g)?;
    let is_block = g.is_block();
    let (p1, p2) = match is_sp {
        true => {
            let (a, b) = nest_counts(g, 0)?;
            (Some(a), Some(b))
        }
        false => (None, None),
    };
    let sp_block = is_block && is_sp;
    let f_bar = match sp_block {
        true => Some(sp::f_bar(g)?.len()),
        false => None,
    };
    let mu = match is_block {
        true => Some(sp::mu(g)?),
        false => None,
    };
    let parallel_irreducible = match is_block {
        true => Some(sp::is_parallel_irreducible(g)?),
        false => None,
    };
    let bounds = match sp_block && g.rank() >= 2 {
        true => Some(bounds_report(g)?),
        false => None,
    };
    Ok(ClassReport {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        rank: g.rank(),
        nullity: g.nullity(),
        nu: g.nu(),
        is_block,
        is_sp,
        delta_vector: h.delta(),
        in_s0: h.is_symmetric(),
        in_s1: in_s1(g)?,
        in_s1plus: is_sp.then(|| delta1(g).map(|d| d >= 1)).transpose()?,
        h_vector: h,
        p1,
        p2,
        f_bar,
        mu,
        parallel_irreducible,
        outerplanar: is_outerplanar(g)?,
        a_graph: is_a_graph(g)?,
        bounds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn k23_plus_hub_edge() -> Multigraph {
        let mut g = fixtures::k2m(3);
        let next = crate::graph::EdgeId(g.max_edge_id().unwrap().0 + 1);
        g.add_edge(next, VertexId(1), VertexId(2)).unwrap();
        g
    }

    #[test]
    fn delta1_two_ways() {
        let g = fixtures::fig2();
        assert_eq!(delta1(&g).unwrap(), 1);
        for seed in 0..5 {
            assert_eq!(delta1_ears(&g, seed).unwrap(), 1);
            assert_eq!(nest_counts(&g, seed).unwrap(), (2, 1));
        }
        for n in 2..8 {
            assert_eq!(delta1(&fixtures::cycle(n)).unwrap(), 0);
            assert_eq!(delta1_ears(&fixtures::cycle(n), 3).unwrap(), 0);
        }
        for m in 3..6 {
            assert_eq!(delta1(&fixtures::k2m(m)).unwrap(), 1);
            assert_eq!(delta1_ears(&fixtures::k2m(m), 1).unwrap(), 1);
        }
        assert_eq!(delta1_ears(&fixtures::k4(), 0), Err(Error::NotSeriesParallel));
        let b = fixtures::bowtie();
        assert_eq!(delta1(&b).unwrap(), delta1_by_blocks(&b).unwrap());
    }

    #[test]
    fn s0_membership() {
        let t3 = fixtures::triangles_sharing_edge(3);
        let k23 = fixtures::k2m(3);
        let edge = Multigraph::from_edges(&[(1, 2)]);
        for (g, expected) in [(&t3, true), (&k23, false), (&edge, true), (&fixtures::k4(), false)] {
            assert_eq!(in_s0(g).unwrap(), expected);
            assert_eq!(in_s0_structural(g).unwrap(), expected);
            assert_eq!(in_s0_excluded_subgraph(g).unwrap(), expected);
        }
        let g = k23_plus_hub_edge();
        assert!(in_s0(&g).unwrap());
        assert!(in_s0_excluded_subgraph(&g).unwrap());
        assert!(subdivision::has_k23_subdivision(&g).unwrap());
        assert_eq!(in_s0(&Multigraph::from_edges(&[(1, 1)])), Err(Error::LoopsPresent));
    }

    #[test]
    fn s1_membership() {
        for (g, expected) in [
            (fixtures::fig2(), true),
            (fixtures::theta(&[2, 2, 2]), true),
            (fixtures::triangles_sharing_edge(3), false),
            (fixtures::k4(), false),
        ] {
            assert_eq!(in_s1(&g).unwrap(), expected);
            assert_eq!(in_s1_structural(&g).unwrap(), expected);
        }
    }

    #[test]
    fn s1plus_membership() {
        let w = s1plus_witness(&fixtures::theta(&[2, 2, 2])).unwrap().unwrap();
        assert_eq!(k2m_subdivision_order(&w), Some(3));
        assert!(in_s1plus(&fixtures::fig2()).unwrap());
        assert!(in_s1plus_structural(&fixtures::fig2()).unwrap());
        let t3 = fixtures::triangles_sharing_edge(3);
        assert!(!in_s1plus(&t3).unwrap());
        assert!(!in_s1plus_structural(&t3).unwrap());
        assert_eq!(in_s1plus(&fixtures::k4()), Err(Error::NotSeriesParallel));

        // nest a K_{2,3} inside another: δ1 = 2, irreducible, no K_{2,m} leaf
        let g = Multigraph::from_edges(&[
            (1, 8),
            (8, 3),
            (3, 2),
            (1, 4),
            (4, 2),
            (1, 5),
            (5, 2),
            (1, 6),
            (6, 3),
            (1, 7),
            (7, 3),
        ]);
        assert!(sp::is_series_parallel(&g).unwrap());
        assert_eq!(delta1(&g).unwrap(), 2);
        assert!(sp::is_parallel_irreducible(&g).unwrap());
        assert!(k2m_subdivision_order(&g).is_none());
        assert!(in_s1plus_structural(&g).unwrap());
    }

    #[test]
    fn outerplanarity() {
        let t3 = fixtures::triangles_sharing_edge(3);
        assert!(!is_outerplanar(&t3).unwrap());
        assert!(!is_outerplanar_oracle(&t3).unwrap());
        assert!(in_s0(&t3).unwrap());
        for g in [fixtures::cycle(5), fixtures::triangles_sharing_edge(1), fixtures::doubled_cycle(3), fixtures::fig3_g1()] {
            assert_eq!(is_outerplanar(&g).unwrap(), is_outerplanar_oracle(&g).unwrap());
        }
        assert!(is_outerplanar(&fixtures::cycle(6)).unwrap());
        assert!(!is_outerplanar(&fixtures::k4()).unwrap());
        assert!(!is_outerplanar_oracle(&fixtures::k4()).unwrap());
    }

    #[test]
    fn a_graphs() {
        let g = k23_plus_hub_edge();
        assert!(is_a_graph(&g).unwrap());
        assert!(is_a_graph_oracle(&g).unwrap());
        let c23 = fixtures::doubled_cycle(3);
        assert!(!is_a_graph(&c23).unwrap());
        assert!(!is_a_graph_oracle(&c23).unwrap());
        let k23 = fixtures::k2m(3);
        assert!(!is_a_graph(&k23).unwrap());
        assert!(!is_a_graph_oracle(&k23).unwrap());
        let looped = Multigraph::from_edges(&[(1, 2), (2, 3), (3, 1), (1, 1)]);
        assert!(is_a_graph(&looped).unwrap());
        assert!(is_a_graph_oracle(&looped).unwrap());
    }

    #[test]
    fn k23_attains_every_bound() {
        let k23 = fixtures::k2m(3);
        let b = bounds_report(&k23).unwrap();
        assert!(b.iter().all(BoundCheck::passed));
        let vals: Vec<(Fraction, Fraction)> = b.iter().map(|c| (c.lhs.unwrap(), c.rhs.unwrap())).collect();
        assert_eq!(vals[0], (Fraction::int(1), Fraction::int(1)));
        assert_eq!(vals[1], (Fraction::int(3), Fraction::int(3)));
        assert_eq!(vals[2], (Fraction::int(1), Fraction::int(1)));
        assert_eq!(vals[3].1.cmp_to(&Fraction::int(1)), std::cmp::Ordering::Equal);
        assert_eq!(sp::mu(&k23).unwrap(), 1);
    }

    #[test]
    fn equality_clause_needs_simplicity() {
        let g = Multigraph::from_edges(&[(1, 2), (2, 3), (3, 1), (1, 2)]);
        let h = h_vector(&g).unwrap();
        assert_eq!(h.h, vec![1, 1, 0]);
        assert_eq!(delta1(&g).unwrap(), h.get(1) - 1);
        assert!(!sp::is_parallel_irreducible(&g).unwrap());
        let b = bounds_report(&g).unwrap();
        assert_eq!(b[0].status, BoundStatus::Holds { equality: true });
        assert_eq!(b[0].equality_implies_irreducible, None);
    }

    #[test]
    fn fig2_bounds() {
        let b = bounds_report(&fixtures::fig2()).unwrap();
        assert_eq!(b[0].lhs, Some(Fraction::int(1)));
        assert_eq!(b[0].rhs, Some(Fraction::int(3)));
        assert_eq!(b[2].rhs, Some(Fraction::int(5)));
        assert!(!b[3].is_applicable());
        assert!(b.iter().all(BoundCheck::passed));
        for n in 3..7 {
            assert!(bounds_report(&fixtures::cycle(n)).unwrap().iter().all(BoundCheck::passed));
        }
    }

    #[test]
    fn delta_nonnegativity() {
        let r = delta_nonneg_report(&fixtures::fig2()).unwrap();
        assert_eq!(r.delta, DeltaVector(vec![0, 1, 1, 0]));
        assert!(r.passed());
        let r = delta_nonneg_report(&fixtures::theta(&[2, 2, 2])).unwrap();
        assert_eq!(r.delta, DeltaVector(vec![0, 1]));
        let r = delta_nonneg_report(&fixtures::triangles_sharing_edge(4)).unwrap();
        assert_eq!(r.symmetric_unimodal, Some(true));
    }

    #[test]
    fn fig2_report() {
        let r = classify(&fixtures::fig2()).unwrap();
        assert_eq!((r.p1, r.p2, r.f_bar), (Some(2), Some(1), Some(2)));
        assert!(r.in_s1 && !r.in_s0 && r.is_sp);
        assert_eq!(r.in_s1plus, Some(true));
        assert_eq!(r.parallel_irreducible, Some(false));
        assert!(!r.outerplanar && !r.a_graph);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<ClassReport>(&json).unwrap(), r);
    }
}
