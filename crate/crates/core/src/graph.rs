//! Multigraphs with stable edge ids and the deletion/contraction calculus of
//! their cycle matroids.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A set of edges; circuits, series and parallel classes, lines and
/// baseedge sets are all represented this way.
pub type EdgeSet = BTreeSet<EdgeId>;

/// Convenience constructor used heavily in tests.
pub fn edge_set<I: IntoIterator<Item = u32>>(ids: I) -> EdgeSet {
    ids.into_iter().map(EdgeId).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// The endpoint opposite to `x`. For a loop this is `x` itself.
    pub fn other(&self, x: VertexId) -> VertexId {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

/// Undirected multigraph. Loops and parallel edges are allowed; edge ids are
/// never renumbered by the operations below.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "GraphRepr", try_from = "GraphRepr")]
pub struct Multigraph {
    vertices: BTreeSet<VertexId>,
    // endpoints stored with u <= v
    edges: BTreeMap<EdgeId, (VertexId, VertexId)>,
}

impl Multigraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from `(u, v)` pairs, assigning edge ids `1..=m` in order.
    pub fn from_edges(pairs: &[(u32, u32)]) -> Self {
        let mut g = Self::new();
        for (i, &(u, v)) in pairs.iter().enumerate() {
            g.add_edge(EdgeId(i as u32 + 1), VertexId(u), VertexId(v))
                .expect("fresh ids are unique");
        }
        g
    }

    /// Builds a graph from `(id, u, v)` triples.
    pub fn from_labeled_edges(triples: &[(u32, u32, u32)]) -> Result<Self> {
        let mut g = Self::new();
        for &(id, u, v) in triples {
            g.add_edge(EdgeId(id), VertexId(u), VertexId(v))?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: VertexId) {
        self.vertices.insert(v);
    }

    /// Adds an edge, declaring its endpoints as vertices if needed.
    pub fn add_edge(&mut self, id: EdgeId, u: VertexId, v: VertexId) -> Result<()> {
        if self.edges.contains_key(&id) {
            return Err(Error::DuplicateEdge(id));
        }
        self.vertices.insert(u);
        self.vertices.insert(v);
        self.edges.insert(id, if u <= v { (u, v) } else { (v, u) });
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().copied()
    }

    /// Edges in ascending id order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().map(|(&id, &(u, v))| Edge { id, u, v })
    }

    pub fn edge_ids(&self) -> EdgeSet {
        self.edges.keys().copied().collect()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.edges.contains_key(&e)
    }

    pub fn edge(&self, e: EdgeId) -> Result<Edge> {
        self.edges
            .get(&e)
            .map(|&(u, v)| Edge { id: e, u, v })
            .ok_or(Error::UnknownEdge(e))
    }

    pub fn max_edge_id(&self) -> Option<EdgeId> {
        self.edges.keys().next_back().copied()
    }

    pub fn max_vertex_id(&self) -> Option<VertexId> {
        self.vertices.iter().next_back().copied()
    }

    pub fn has_loops(&self) -> bool {
        self.edges.values().any(|(u, v)| u == v)
    }

    /// Loopless and without parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.values().all(|&(u, v)| u != v && seen.insert((u, v)))
    }

    /// Degree of `v`; a loop contributes 2.
    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .values()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    pub fn degrees(&self) -> BTreeMap<VertexId, usize> {
        let mut deg: BTreeMap<VertexId, usize> = self.vertices.iter().map(|&v| (v, 0)).collect();
        for &(u, v) in self.edges.values() {
            *deg.get_mut(&u).unwrap() += 1;
            *deg.get_mut(&v).unwrap() += 1;
        }
        deg
    }

    /// Edges incident to `v` (loops listed once).
    pub fn incident(&self, v: VertexId) -> Vec<Edge> {
        self.edges().filter(|e| e.u == v || e.v == v).collect()
    }

    /// Adjacency lists `vertex -> [(edge, other endpoint)]`; loops appear twice.
    pub fn adjacency(&self) -> BTreeMap<VertexId, Vec<(EdgeId, VertexId)>> {
        let mut adj: BTreeMap<VertexId, Vec<(EdgeId, VertexId)>> =
            self.vertices.iter().map(|&v| (v, Vec::new())).collect();
        for e in self.edges() {
            adj.get_mut(&e.u).unwrap().push((e.id, e.v));
            adj.get_mut(&e.v).unwrap().push((e.id, e.u));
        }
        adj
    }

    pub fn delete_edge(&self, e: EdgeId) -> Result<Self> {
        if !self.has_edge(e) {
            return Err(Error::UnknownEdge(e));
        }
        let mut g = self.clone();
        g.edges.remove(&e);
        Ok(g)
    }

    pub fn delete_edges(&self, set: &EdgeSet) -> Result<Self> {
        let mut g = self.clone();
        for e in set {
            if g.edges.remove(e).is_none() {
                return Err(Error::UnknownEdge(*e));
            }
        }
        Ok(g)
    }

    /// Contracts `e`. A loop is simply deleted; otherwise the larger endpoint
    /// is merged into the smaller one and parallel mates of `e` become loops.
    pub fn contract_edge(&self, e: EdgeId) -> Result<Self> {
        let edge = self.edge(e)?;
        if edge.is_loop() {
            return self.delete_edge(e);
        }
        let (keep, gone) = (edge.u, edge.v);
        let mut g = self.clone();
        g.edges.remove(&e);
        g.vertices.remove(&gone);
        for ends in g.edges.values_mut() {
            let mut a = ends.0;
            let mut b = ends.1;
            if a == gone {
                a = keep;
            }
            if b == gone {
                b = keep;
            }
            *ends = if a <= b { (a, b) } else { (b, a) };
        }
        Ok(g)
    }

    pub fn contract_edges(&self, set: &EdgeSet) -> Result<Self> {
        let mut g = self.clone();
        for &e in set {
            g = g.contract_edge(e)?;
        }
        Ok(g)
    }

    /// Deletes loops and keeps the minimum-id edge of every parallel class.
    /// The returned map sends every non-loop edge of `self` to its
    /// representative.
    pub fn simplify(&self) -> (Self, BTreeMap<EdgeId, EdgeId>) {
        let mut rep_of_pair: BTreeMap<(VertexId, VertexId), EdgeId> = BTreeMap::new();
        let mut class_map = BTreeMap::new();
        let mut g = Self {
            vertices: self.vertices.clone(),
            edges: BTreeMap::new(),
        };
        for e in self.edges() {
            if e.is_loop() {
                continue;
            }
            // edges iterate in ascending id, so the first one seen is the minimum
            let rep = *rep_of_pair.entry((e.u, e.v)).or_insert(e.id);
            if rep == e.id {
                g.edges.insert(e.id, (e.u, e.v));
            }
            class_map.insert(e.id, rep);
        }
        (g, class_map)
    }

    /// The parallel class of a non-loop edge, including the edge itself.
    pub fn parallel_class(&self, e: EdgeId) -> Result<EdgeSet> {
        let edge = self.edge(e)?;
        if edge.is_loop() {
            return Ok(EdgeSet::from([e]));
        }
        Ok(self
            .edges()
            .filter(|f| f.u == edge.u && f.v == edge.v)
            .map(|f| f.id)
            .collect())
    }

    /// Subgraph on the given edges; its vertices are their endpoints.
    pub fn edge_subgraph(&self, set: &EdgeSet) -> Result<Self> {
        let mut g = Self::new();
        for &e in set {
            let edge = self.edge(e)?;
            g.add_edge(e, edge.u, edge.v)?;
        }
        Ok(g)
    }

    /// Vertex-induced subgraph.
    pub fn induced_subgraph(&self, keep: &BTreeSet<VertexId>) -> Self {
        let mut g = Self {
            vertices: keep.intersection(&self.vertices).copied().collect(),
            edges: BTreeMap::new(),
        };
        for e in self.edges() {
            if keep.contains(&e.u) && keep.contains(&e.v) {
                g.edges.insert(e.id, (e.u, e.v));
            }
        }
        g
    }

    /// Removes a vertex together with all incident edges.
    pub fn remove_vertex(&self, v: VertexId) -> Self {
        let mut keep = self.vertices.clone();
        keep.remove(&v);
        self.induced_subgraph(&keep)
    }

    pub fn without_isolated_vertices(&self) -> Self {
        let mut g = Self {
            vertices: BTreeSet::new(),
            edges: self.edges.clone(),
        };
        for &(u, v) in self.edges.values() {
            g.vertices.insert(u);
            g.vertices.insert(v);
        }
        g
    }

    /// Number of connected components ω, counting isolated vertices.
    pub fn component_count(&self) -> usize {
        let mut dsu = Dsu::new(self.vertices.iter().copied());
        for &(u, v) in self.edges.values() {
            dsu.union(u, v);
        }
        dsu.count()
    }

    /// Connected (as a graph, isolated vertices included). The empty graph
    /// counts as connected.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn rank(&self) -> usize {
        self.vertex_count() - self.component_count()
    }

    pub fn nullity(&self) -> usize {
        self.edge_count() + self.component_count() - self.vertex_count()
    }

    /// Number of vertices of degree at least 3.
    pub fn nu(&self) -> usize {
        self.degrees().values().filter(|&&d| d >= 3).count()
    }

    /// Partition of the edges into the connected components of the cycle
    /// matroid: biconnected edge classes, bridges and loops as singletons.
    /// Classes are sorted by their minimum edge id.
    pub fn matroid_components(&self) -> Vec<EdgeSet> {
        let mut classes = blocks(self);
        classes.sort_by_key(|c| *c.iter().next().unwrap());
        classes
    }

    /// Whether the cycle matroid is connected. A single edge (or single loop)
    /// is a trivial, connected matroid.
    pub fn matroid_connected(&self) -> Result<bool> {
        if self.edges.is_empty() {
            return Err(Error::EmptyEdgeSet);
        }
        Ok(blocks(self).len() == 1)
    }

    /// A connected graph whose cycle matroid is connected (isolated vertices
    /// are not allowed).
    pub fn is_block(&self) -> bool {
        !self.edges.is_empty()
            && self.without_isolated_vertices().vertex_count() == self.vertex_count()
            && blocks(self).len() == 1
    }

    /// All circuits of the cycle matroid, sorted by size and then
    /// lexicographically. Exponential; bounded by [`crate::limits::cycle_edges`].
    pub fn all_cycles(&self) -> Result<Vec<EdgeSet>> {
        let limit = crate::limits::cycle_edges();
        if self.edge_count() > limit {
            return Err(Error::SizeBound {
                what: "all_cycles",
                limit,
                actual: self.edge_count(),
            });
        }
        let adj = self.adjacency();
        let mut out = Vec::new();
        for e in self.edges() {
            if e.is_loop() {
                out.push(EdgeSet::from([e.id]));
                continue;
            }
            // cycles whose minimum edge is e: e plus a path v -> u over larger ids
            let mut path = vec![e.id];
            let mut visited = BTreeSet::from([e.v]);
            cycle_paths(&adj, e.id, e.v, e.u, &mut visited, &mut path, &mut out);
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// Whether `set` is the edge set of a cycle (a circuit of the cycle matroid).
    pub fn is_circuit(&self, set: &EdgeSet) -> bool {
        let Ok(sub) = self.edge_subgraph(set) else {
            return false;
        };
        if set.len() == 1 {
            return sub.has_loops();
        }
        !sub.has_loops() && sub.is_connected() && sub.degrees().values().all(|&d| d == 2)
    }

    /// Whether the edges form a forest (contain no circuit).
    pub fn is_forest(&self, set: &EdgeSet) -> bool {
        let mut dsu = Dsu::new(self.vertices.iter().copied());
        for &e in set {
            match self.edges.get(&e) {
                Some(&(u, v)) => {
                    if !dsu.union(u, v) {
                        return false;
                    }
                }
                None => return false,
            }
        }
        true
    }

    /// Edges in ascending id order as `(id, u, v)` triples.
    pub fn to_triples(&self) -> Vec<(u32, u32, u32)> {
        self.edges().map(|e| (e.id.0, e.u.0, e.v.0)).collect()
    }
}

/// JSON shape `{"vertices": [..], "edges": [{"id", "u", "v"}, ..]}`.
#[derive(Serialize, Deserialize)]
struct GraphRepr {
    #[serde(default)]
    vertices: Vec<VertexId>,
    edges: Vec<Edge>,
}

impl From<Multigraph> for GraphRepr {
    fn from(g: Multigraph) -> Self {
        Self {
            vertices: g.vertices().collect(),
            edges: g.edges().collect(),
        }
    }
}

impl TryFrom<GraphRepr> for Multigraph {
    type Error = Error;

    fn try_from(r: GraphRepr) -> Result<Self> {
        let mut g = Multigraph::new();
        for v in r.vertices {
            g.add_vertex(v);
        }
        for e in r.edges {
            g.add_edge(e.id, e.u, e.v)?;
        }
        Ok(g)
    }
}

impl fmt::Display for Multigraph {
    /// Edge-list text format, one `u v id` line per edge.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in self.edges() {
            writeln!(f, "{} {} {}", e.u, e.v, e.id)?;
        }
        let isolated: Vec<_> = self
            .degrees()
            .into_iter()
            .filter(|&(_, d)| d == 0)
            .map(|(v, _)| v.to_string())
            .collect();
        if !isolated.is_empty() {
            writeln!(f, "# isolated: {}", isolated.join(" "))?;
        }
        Ok(())
    }
}

fn cycle_paths(
    adj: &BTreeMap<VertexId, Vec<(EdgeId, VertexId)>>,
    min_edge: EdgeId,
    at: VertexId,
    target: VertexId,
    visited: &mut BTreeSet<VertexId>,
    path: &mut Vec<EdgeId>,
    out: &mut Vec<EdgeSet>,
) {
    for &(f, w) in &adj[&at] {
        if f <= min_edge || w == at || path.contains(&f) {
            continue;
        }
        if w == target {
            path.push(f);
            out.push(path.iter().copied().collect());
            path.pop();
        } else if visited.insert(w) {
            path.push(f);
            cycle_paths(adj, min_edge, w, target, visited, path, out);
            path.pop();
            visited.remove(&w);
        }
    }
}

/// Edge classes of the biconnected components of `g`.
fn blocks(g: &Multigraph) -> Vec<EdgeSet> {
    let index: BTreeMap<VertexId, usize> = g.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let ids: Vec<EdgeId> = g.edges.keys().copied().collect();
    let pairs: Vec<(usize, usize)> = g.edges.values().map(|(u, v)| (index[u], index[v])).collect();
    biconnected_classes(index.len(), &pairs)
        .into_iter()
        .map(|class| class.into_iter().map(|i| ids[i]).collect())
        .collect()
}

/// Biconnected edge classes of a multigraph on vertices `0..n`, returned as
/// lists of edge indices. Keyed on edge indices so parallel edges land in the
/// same class; every loop is its own class.
pub(crate) fn biconnected_classes(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        if a == b {
            out.push(vec![i]);
        } else {
            adj[a].push((i, b));
            adj[b].push((i, a));
        }
    }
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut time = 0usize;
    // frames: (vertex, entering edge, next adjacency index)
    let mut frames: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != UNSEEN || adj[root].is_empty() {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        frames.push((root, UNSEEN, 0));
        while let Some(frame) = frames.last_mut() {
            let (v, via, idx) = *frame;
            if idx < adj[v].len() {
                frame.2 += 1;
                let (e, w) = adj[v][idx];
                if e == via {
                    continue;
                }
                if disc[w] == UNSEEN {
                    stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if let Some(&(parent, _, _)) = frames.last() {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        let mut class = Vec::new();
                        while let Some(f) = stack.pop() {
                            class.push(f);
                            if f == via {
                                break;
                            }
                        }
                        out.push(class);
                    }
                }
            }
        }
    }
    out
}

/// Union-find keyed by vertex ids.
pub(crate) struct Dsu {
    parent: BTreeMap<VertexId, VertexId>,
    count: usize,
}

impl Dsu {
    pub(crate) fn new<I: IntoIterator<Item = VertexId>>(vs: I) -> Self {
        let parent: BTreeMap<_, _> = vs.into_iter().map(|v| (v, v)).collect();
        let count = parent.len();
        Self { parent, count }
    }

    pub(crate) fn find(&mut self, v: VertexId) -> VertexId {
        let mut root = v;
        while self.parent[&root] != root {
            root = self.parent[&root];
        }
        let mut cur = v;
        while cur != root {
            let next = self.parent[&cur];
            self.parent.insert(cur, root);
            cur = next;
        }
        root
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: VertexId, b: VertexId) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent.insert(ra.max(rb), ra.min(rb));
        self.count -= 1;
        true
    }

    pub(crate) fn count(&self) -> usize {
        self.count
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn delete_from_triangle_gives_path() {
        let g = fixtures::cycle(3).delete_edge(EdgeId(3)).unwrap();
        assert_eq!(g.edge_ids(), edge_set([1, 2]));
        assert_eq!(g.vertex_count(), 3);
        assert!(fixtures::cycle(3).delete_edge(EdgeId(9)).is_err());
    }

    #[test]
    fn delete_from_two_cycle() {
        let g = fixtures::cycle(2).delete_edge(EdgeId(2)).unwrap();
        assert_eq!(g.edge_ids(), edge_set([1]));
    }

    #[test]
    fn k4_minus_edge_counts() {
        for e in 1..=6 {
            let g = fixtures::k4().delete_edge(EdgeId(e)).unwrap();
            assert_eq!((g.edge_count(), g.vertex_count(), g.nullity()), (5, 4, 2));
        }
    }

    #[test]
    fn contract_two_cycle_leaves_loop() {
        let g = fixtures::cycle(2).contract_edge(EdgeId(1)).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_ids(), edge_set([2]));
        assert!(g.edge(EdgeId(2)).unwrap().is_loop());
    }

    #[test]
    fn contract_triangle_gives_two_cycle() {
        for e in 1..=3 {
            let g = fixtures::cycle(3).contract_edge(EdgeId(e)).unwrap();
            assert_eq!(g.edge_count(), 2);
            assert_eq!(g.vertex_count(), 2);
            assert!(!g.has_loops());
            assert!(!g.is_simple());
        }
    }

    #[test]
    fn contract_keeps_smaller_vertex() {
        let g = Multigraph::from_edges(&[(5, 2), (5, 7)]);
        let c = g.contract_edge(EdgeId(1)).unwrap();
        assert!(c.has_vertex(VertexId(2)) && !c.has_vertex(VertexId(5)));
        let e = c.edge(EdgeId(2)).unwrap();
        assert_eq!((e.u, e.v), (VertexId(2), VertexId(7)));
    }

    #[test]
    fn contracting_a_loop_deletes_it() {
        let mut g = fixtures::cycle(3);
        g.add_edge(EdgeId(4), VertexId(1), VertexId(1)).unwrap();
        assert_eq!(
            g.contract_edge(EdgeId(4)).unwrap(),
            g.delete_edge(EdgeId(4)).unwrap()
        );
    }

    #[test]
    fn simplify_doubled_triangle() {
        let g = fixtures::doubled_cycle(3);
        let (s, map) = g.simplify();
        assert_eq!(s.edge_ids(), edge_set([1, 2, 3]));
        assert_eq!(map[&EdgeId(4)], EdgeId(1));
        assert_eq!(map[&EdgeId(6)], EdgeId(3));
        assert_eq!(map.len(), 6);
    }

    #[test]
    fn simplify_simple_graph_is_identity() {
        let g = fixtures::k4();
        let (s, map) = g.simplify();
        assert_eq!(s, g);
        assert!(map.iter().all(|(a, b)| a == b));
    }

    #[test]
    fn simplify_single_loop() {
        let g = Multigraph::from_edges(&[(1, 1)]);
        let (s, map) = g.simplify();
        assert_eq!(s.edge_count(), 0);
        assert!(map.is_empty());
    }

    #[test]
    fn matroid_connectivity_examples() {
        for n in 2..8 {
            assert!(fixtures::cycle(n).matroid_connected().unwrap());
        }
        assert!(!fixtures::bowtie().matroid_connected().unwrap());
        assert!(Multigraph::from_edges(&[(1, 2)]).matroid_connected().unwrap());
        assert!(Multigraph::from_edges(&[(1, 1)]).matroid_connected().unwrap());
        assert!(Multigraph::new().matroid_connected().is_err());
    }

    #[test]
    fn components_examples() {
        let bow = fixtures::bowtie().matroid_components();
        assert_eq!(bow, vec![edge_set([1, 2, 3]), edge_set([4, 5, 6])]);

        let mut g = fixtures::cycle(3);
        g.add_edge(EdgeId(4), VertexId(3), VertexId(9)).unwrap();
        assert_eq!(
            g.matroid_components(),
            vec![edge_set([1, 2, 3]), edge_set([4])]
        );

        let fig2 = fixtures::fig2().matroid_components();
        assert_eq!(fig2.len(), 1);
        assert_eq!(fig2[0].len(), 12);

        let mut looped = fixtures::cycle(2);
        looped.add_edge(EdgeId(3), VertexId(1), VertexId(1)).unwrap();
        assert_eq!(
            looped.matroid_components(),
            vec![edge_set([1, 2]), edge_set([3])]
        );
    }

    #[test]
    fn cycles_examples() {
        assert_eq!(fixtures::cycle(3).all_cycles().unwrap(), vec![edge_set([1, 2, 3])]);
        assert_eq!(fixtures::cycle(2).all_cycles().unwrap(), vec![edge_set([1, 2])]);
        let theta = fixtures::theta(&[2, 2, 2]).all_cycles().unwrap();
        assert_eq!(theta.len(), 3);
        assert!(theta.iter().all(|c| c.len() == 4));
        assert_eq!(fixtures::k4().all_cycles().unwrap().len(), 7);
    }

    #[test]
    fn cycles_respect_size_bound() {
        let g = fixtures::cycle(crate::limits::cycle_edges() + 1);
        assert!(matches!(g.all_cycles(), Err(Error::SizeBound { .. })));
    }

    #[test]
    fn counts() {
        let fig2 = fixtures::fig2();
        assert_eq!((fig2.nullity(), fig2.rank()), (5, 7));
        let k23 = fixtures::theta(&[2, 2, 2]);
        assert_eq!((k23.rank(), k23.nullity(), k23.nu()), (4, 2, 2));
        assert_eq!(fixtures::fig3_g1().nu(), 4);
        assert_eq!(fixtures::fig3_g2().nu(), 3);
        let looped = Multigraph::from_edges(&[(1, 1)]);
        assert_eq!(looped.degree(VertexId(1)), 2);
    }

    #[test]
    fn circuit_test() {
        let k4 = fixtures::k4();
        for c in k4.all_cycles().unwrap() {
            assert!(k4.is_circuit(&c));
        }
        assert!(!k4.is_circuit(&k4.edge_ids()));
    }
}
