//! Series-parallel structure: recognition, series classes and lines, the
//! edge sets `F(G)` and `F̄(G)`, μ, and parallel-irreducible decomposition.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, Multigraph, VertexId};

fn require_block(g: &Multigraph) -> Result<()> {
    if g.is_block() {
        Ok(())
    } else {
        Err(Error::NotABlock)
    }
}

/// Reduces the block to a single edge by merging parallel pairs and
/// suppressing degree-2 vertices. A lone loop is not series-parallel.
pub fn is_series_parallel(g: &Multigraph) -> Result<bool> {
    require_block(g)?;
    let mut edges: Vec<(VertexId, VertexId)> = g.edges().map(|e| (e.u, e.v)).collect();
    loop {
        if edges.len() == 1 {
            return Ok(edges[0].0 != edges[0].1);
        }
        edges.sort_unstable();
        if let Some(i) = (1..edges.len()).find(|&i| edges[i] == edges[i - 1]) {
            edges.remove(i);
            continue;
        }
        let mut inc: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
        for (i, &(a, b)) in edges.iter().enumerate() {
            inc.entry(a).or_default().push(i);
            inc.entry(b).or_default().push(i);
        }
        let Some((&v, pair)) = inc.iter().find(|(_, es)| es.len() == 2) else {
            return Ok(false);
        };
        let (i, j) = (pair[0], pair[1]);
        let far = |k: usize| {
            let (a, b) = edges[k];
            if a == v {
                b
            } else {
                a
            }
        };
        let (a, b) = (far(i), far(j));
        edges.remove(j.max(i));
        edges.remove(j.min(i));
        edges.push((a.min(b), a.max(b)));
    }
}

/// Oracle form: a block is series-parallel iff it has no `K4` subdivision.
pub fn is_series_parallel_oracle(g: &Multigraph) -> Result<bool> {
    require_block(g)?;
    let limit = crate::limits::k4_oracle_edges();
    if g.edge_count() > limit {
        return Err(Error::SizeBound {
            what: "K4 subdivision oracle",
            limit,
            actual: g.edge_count(),
        });
    }
    if g.has_loops() {
        return Ok(false);
    }
    // a K4 subdivision needs nullity 3 and four vertices of degree 3
    if g.nullity() < 3 || g.nu() < 4 {
        return Ok(true);
    }
    Ok(!crate::subdivision::has_k4_subdivision(g)?)
}

/// Partition into series classes: `e` and `f` share a class iff deleting
/// both drops the rank.
pub fn series_classes(g: &Multigraph) -> Result<Vec<EdgeSet>> {
    require_block(g)?;
    let ids: Vec<EdgeId> = g.edges().map(|e| e.id).collect();
    let r = g.rank();
    let mut class: Vec<usize> = (0..ids.len()).collect();
    for i in 0..ids.len() {
        if class[i] != i {
            continue;
        }
        for j in i + 1..ids.len() {
            let rest = g.delete_edges(&EdgeSet::from([ids[i], ids[j]]))?;
            if rest.rank() < r {
                class[j] = i;
            }
        }
    }
    let mut out: BTreeMap<usize, EdgeSet> = BTreeMap::new();
    for (i, &c) in class.iter().enumerate() {
        out.entry(c).or_default().insert(ids[i]);
    }
    Ok(out.into_values().collect())
}

/// `G - X` (isolated vertices dropped) is a nonempty block.
pub fn is_removable(g: &Multigraph, x: &EdgeSet) -> Result<bool> {
    let rest = g.delete_edges(x)?.without_isolated_vertices();
    Ok(rest.edge_count() > 0 && rest.matroid_connected()?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Line {
    /// Edges in path order.
    pub edges: Vec<EdgeId>,
    /// End vertices; `None` when the whole graph is a cycle.
    pub ends: Option<(VertexId, VertexId)>,
    pub removable: bool,
}

impl Line {
    pub fn edge_set(&self) -> EdgeSet {
        self.edges.iter().copied().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineSet {
    pub lines: Vec<Line>,
    pub series_classes: Vec<EdgeSet>,
    pub removable_classes: Vec<EdgeSet>,
}

/// Maximal paths through degree-2 vertices, with series classes alongside.
pub fn lines(g: &Multigraph) -> Result<LineSet> {
    require_block(g)?;
    let adj = g.adjacency();
    let deg = g.degrees();
    let mut seen = EdgeSet::new();
    let mut out = Vec::new();
    for e in g.edges() {
        if !seen.insert(e.id) {
            continue;
        }
        // extend in both directions through degree-2 vertices
        let mut path = std::collections::VecDeque::from([e.id]);
        let mut ends = [e.u, e.v];
        let mut closed = false;
        for side in 0..2 {
            let mut prev = e.id;
            let mut at = ends[side];
            while deg[&at] == 2 && !e.is_loop() {
                let &(next, w) = adj[&at].iter().find(|&&(f, _)| f != prev).unwrap();
                if next == e.id || !seen.insert(next) {
                    closed = true;
                    break;
                }
                if side == 0 {
                    path.push_front(next);
                } else {
                    path.push_back(next);
                }
                prev = next;
                at = w;
            }
            ends[side] = at;
            if closed {
                break;
            }
        }
        let edges: Vec<EdgeId> = path.into_iter().collect();
        let set: EdgeSet = edges.iter().copied().collect();
        let removable = !closed && is_removable(g, &set)?;
        let ends = (!closed).then(|| (ends[0].min(ends[1]), ends[0].max(ends[1])));
        out.push(Line { edges, ends, removable });
    }
    let series_classes = series_classes(g)?;
    let mut removable_classes = Vec::new();
    for c in &series_classes {
        if is_removable(g, c)? {
            removable_classes.push(c.clone());
        }
    }
    Ok(LineSet {
        lines: out,
        series_classes,
        removable_classes,
    })
}

/// Number of classes of removable series classes under `X ~ Y` iff `X ∪ Y`
/// is a circuit.
pub fn mu(g: &Multigraph) -> Result<usize> {
    let ls = lines(g)?;
    let r = &ls.removable_classes;
    let mut parent: Vec<usize> = (0..r.len()).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    for i in 0..r.len() {
        for j in i + 1..r.len() {
            let union: EdgeSet = r[i].union(&r[j]).copied().collect();
            if g.is_circuit(&union) {
                let (a, b) = (root(&mut parent, i), root(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    Ok((0..r.len()).filter(|&i| root(&mut parent, i) == i).count())
}

/// μ counted as vertex pairs joined by a removable line.
pub fn mu_by_pairs(g: &Multigraph) -> Result<usize> {
    let ls = lines(g)?;
    let pairs: BTreeSet<(VertexId, VertexId)> = ls
        .lines
        .iter()
        .filter(|l| l.removable)
        .filter_map(|l| l.ends)
        .collect();
    Ok(pairs.len())
}

/// Edges whose contraction leaves a graph that is not a block.
pub fn f_edges(g: &Multigraph) -> Result<EdgeSet> {
    require_block(g)?;
    if g.edge_count() == 1 {
        return Ok(EdgeSet::new());
    }
    let mut out = EdgeSet::new();
    for e in g.edges() {
        let c = g.contract_edge(e.id)?.without_isolated_vertices();
        if !c.matroid_connected()? {
            out.insert(e.id);
        }
    }
    Ok(out)
}

/// `F(G)` restricted to the simplification (minimum-id representatives).
pub fn f_bar(g: &Multigraph) -> Result<EdgeSet> {
    let f = f_edges(g)?;
    let (s, _) = g.simplify();
    Ok(f.into_iter().filter(|&e| s.has_edge(e)).collect())
}

pub fn is_parallel_irreducible(g: &Multigraph) -> Result<bool> {
    Ok(g.edge_count() == 1 || f_edges(g)?.is_empty())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DecompositionNode {
    Leaf { component: usize },
    Split { baseedge: EdgeId, parts: Vec<DecompositionNode> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParallelDecomposition {
    pub components: Vec<Multigraph>,
    /// One entry per gluing; a baseedge shared by `k` parts appears `k - 1` times.
    pub baseedges: Vec<EdgeId>,
    pub tree: DecompositionNode,
}

impl ParallelDecomposition {
    pub fn baseedge_set(&self) -> EdgeSet {
        self.baseedges.iter().copied().collect()
    }

    /// Union of the components, which must give back the original graph.
    pub fn reassemble(&self) -> Result<Multigraph> {
        let mut g = Multigraph::new();
        for c in &self.components {
            for e in c.edges() {
                if !g.has_edge(e.id) {
                    g.add_edge(e.id, e.u, e.v)?;
                }
            }
        }
        Ok(g)
    }

    /// Graphviz rendering: one cluster per component, baseedges in bold red.
    pub fn to_dot(&self) -> String {
        let base = self.baseedge_set();
        let mut s = String::from("graph decomposition {\n  node [shape=circle];\n");
        for (i, c) in self.components.iter().enumerate() {
            let _ = writeln!(s, "  subgraph cluster_{i} {{\n    label=\"component {i}\";");
            for v in c.vertices() {
                let _ = writeln!(s, "    c{i}_{v} [label=\"{v}\"];");
            }
            for e in c.edges() {
                let style = if base.contains(&e.id) {
                    ", color=red, penwidth=2"
                } else {
                    ""
                };
                let _ = writeln!(s, "    c{i}_{} -- c{i}_{} [label=\"{}\"{style}];", e.u, e.v, e.id);
            }
            s.push_str("  }\n");
        }
        s.push_str("}\n");
        s
    }
}

/// Splits a block at the smallest edge of `F̄` until every part is parallel
/// irreducible. A baseedge with parallel mates first sheds them as 2-cycles;
/// otherwise the matroid components of `G/e` are lifted back by adding `e`.
pub fn parallel_decomposition(g: &Multigraph) -> Result<ParallelDecomposition> {
    require_block(g)?;
    let mut components = Vec::new();
    let tree = split(g, &mut components)?;
    let mut baseedges = Vec::new();
    collect_baseedges(&tree, &mut baseedges);
    Ok(ParallelDecomposition {
        components,
        baseedges,
        tree,
    })
}

fn collect_baseedges(node: &DecompositionNode, out: &mut Vec<EdgeId>) {
    if let DecompositionNode::Split { baseedge, parts } = node {
        for _ in 1..parts.len() {
            out.push(*baseedge);
        }
        for p in parts {
            collect_baseedges(p, out);
        }
    }
}

fn split(h: &Multigraph, components: &mut Vec<Multigraph>) -> Result<DecompositionNode> {
    let fbar = f_bar(h)?;
    let Some(&e) = fbar.iter().next() else {
        components.push(h.clone());
        return Ok(DecompositionNode::Leaf {
            component: components.len() - 1,
        });
    };
    let mates: EdgeSet = h.parallel_class(e)?.into_iter().filter(|&f| f != e).collect();
    let mut pieces: Vec<Multigraph> = Vec::new();
    if !mates.is_empty() {
        for &m in &mates {
            pieces.push(h.edge_subgraph(&EdgeSet::from([e, m]))?);
        }
        let rest = h.delete_edges(&mates)?;
        if rest.edge_count() > 1 {
            pieces.push(rest);
        }
    } else {
        let c = h.contract_edge(e)?;
        for comp in c.matroid_components() {
            let mut set = comp;
            set.insert(e);
            pieces.push(h.edge_subgraph(&set)?);
        }
    }
    let mut parts = Vec::new();
    for p in &pieces {
        match split(p, components)? {
            // flatten repeated splits on the same baseedge
            DecompositionNode::Split { baseedge, parts: inner } if baseedge == e => parts.extend(inner),
            node => parts.push(node),
        }
    }
    Ok(DecompositionNode::Split { baseedge: e, parts })
}

/// Contracts all but the smallest edge of `X`, after checking that `X` lies
/// in one series class, has at least two edges, and `X ∪ {f}` is a circuit
/// for no edge `f`.
pub fn contract_series_subset(g: &Multigraph, x: &EdgeSet) -> Result<Multigraph> {
    if x.len() < 2 {
        return Err(Error::Precondition("X needs at least two edges".into()));
    }
    for &e in x {
        if !g.has_edge(e) {
            return Err(Error::UnknownEdge(e));
        }
    }
    let classes = series_classes(g)?;
    if !classes.iter().any(|c| x.is_subset(c)) {
        return Err(Error::Precondition("X is not inside one series class".into()));
    }
    for f in g.edge_ids() {
        let mut y = x.clone();
        y.insert(f);
        if g.is_circuit(&y) {
            return Err(Error::Precondition(format!("X together with edge {f} is a circuit")));
        }
    }
    let keep = *x.iter().next().unwrap();
    let rest: EdgeSet = x.iter().copied().filter(|&e| e != keep).collect();
    g.contract_edges(&rest)
}

/// Vertex pairs joined by three or more internally disjoint paths after all
/// degree-2 vertices are suppressed, i.e. whether `g` is a subdivision of
/// `K_{2,m}` with `m >= 3`; returns `m`.
pub fn k2m_subdivision_order(g: &Multigraph) -> Option<usize> {
    if g.has_loops() || !g.is_connected() {
        return None;
    }
    let deg = g.degrees();
    let hubs: Vec<VertexId> = deg.iter().filter(|&(_, &d)| d != 2).map(|(&v, _)| v).collect();
    let [a, b] = hubs[..] else { return None };
    let m = deg[&a];
    if m < 3 || deg[&b] != m {
        return None;
    }
    // every branch from a must reach b through at least one inner vertex
    let adj = g.adjacency();
    let mut inner = 0usize;
    for &(e0, w0) in &adj[&a] {
        let (mut prev, mut at) = (e0, w0);
        if at == b {
            return None;
        }
        while at != b {
            if at == a {
                return None;
            }
            inner += 1;
            let &(next, w) = adj[&at].iter().find(|&&(f, _)| f != prev)?;
            prev = next;
            at = w;
        }
    }
    (inner + 2 == g.vertex_count()).then_some(m)
}
