//! Ear decompositions of blocks and their nest intervals.
//!
//! Ears are indexed from 0 here, so `ears[0]` is the initial cycle.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, Multigraph, VertexId};

/// A path, or for the first ear a cycle. `edges[k]` joins `vertices[k]` and
/// `vertices[k + 1]`, cyclically for a cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ear {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Ear {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_cycle(&self) -> bool {
        self.vertices.len() == self.edges.len()
    }

    /// End vertices of a path ear.
    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    /// Every vertex of a cycle; the inner vertices of a path.
    pub fn internal(&self) -> &[VertexId] {
        if self.is_cycle() {
            &self.vertices
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges.iter().copied().collect()
    }

    fn position(&self, v: VertexId) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EarDecomposition {
    pub ears: Vec<Ear>,
}

impl EarDecomposition {
    /// Orders the given edge sets into ears and validates the result. The
    /// first set must form a cycle, the others paths.
    pub fn from_edge_sets(g: &Multigraph, sets: &[Vec<u32>]) -> Result<Self> {
        let mut ears = Vec::with_capacity(sets.len());
        for (i, set) in sets.iter().enumerate() {
            let ids: Vec<EdgeId> = set.iter().map(|&e| EdgeId(e)).collect();
            ears.push(walk(g, &ids, i == 0)?);
        }
        let d = Self { ears };
        d.validate(g)?;
        Ok(d)
    }

    pub fn len(&self) -> usize {
        self.ears.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ears.is_empty()
    }

    /// Checks that the ears partition the edges, the first ear is a cycle
    /// with at least two edges, and every later ear is a path whose ends are
    /// old vertices and whose inner vertices are new.
    pub fn validate(&self, g: &Multigraph) -> Result<()> {
        let bad = |msg: String| Err(Error::MalformedEars(msg));
        let Some(first) = self.ears.first() else {
            return bad("no ears".into());
        };
        let mut used = EdgeSet::new();
        for (i, ear) in self.ears.iter().enumerate() {
            for &e in &ear.edges {
                if !g.has_edge(e) {
                    return Err(Error::UnknownEdge(e));
                }
                if !used.insert(e) {
                    return bad(format!("edge {e} appears twice"));
                }
            }
            let k = ear.edges.len();
            let closed = i == 0;
            if k == 0 || ear.vertices.len() != if closed { k } else { k + 1 } {
                return bad(format!("ear {i} has inconsistent length"));
            }
            let distinct: BTreeSet<VertexId> = ear.vertices.iter().copied().collect();
            if distinct.len() != ear.vertices.len() {
                return bad(format!("ear {i} repeats a vertex"));
            }
            for (j, &e) in ear.edges.iter().enumerate() {
                let a = ear.vertices[j];
                let b = ear.vertices[(j + 1) % ear.vertices.len()];
                let edge = g.edge(e)?;
                if !((edge.u == a && edge.v == b) || (edge.u == b && edge.v == a)) {
                    return bad(format!("edge {e} does not join {a} and {b}"));
                }
            }
        }
        if first.edges.len() < 2 {
            return bad("first ear must be a cycle with at least two edges".into());
        }
        if used != g.edge_ids() {
            return bad("ears do not cover every edge".into());
        }
        let mut seen: BTreeSet<VertexId> = first.vertices.iter().copied().collect();
        for (i, ear) in self.ears.iter().enumerate().skip(1) {
            let (a, b) = ear.endpoints();
            if !seen.contains(&a) || !seen.contains(&b) {
                return bad(format!("ear {i} has an end vertex not in an earlier ear"));
            }
            for v in ear.internal() {
                if !seen.insert(*v) {
                    return bad(format!("inner vertex {v} of ear {i} is not new"));
                }
            }
        }
        Ok(())
    }
}

// Puts an edge set in walking order, starting at its smallest vertex (a cycle)
// or at its smaller end vertex (a path).
fn walk(g: &Multigraph, ids: &[EdgeId], closed: bool) -> Result<Ear> {
    if ids.is_empty() {
        return Err(Error::MalformedEars("empty ear".into()));
    }
    let mut inc: BTreeMap<VertexId, Vec<(EdgeId, VertexId)>> = BTreeMap::new();
    for &e in ids {
        let edge = g.edge(e)?;
        inc.entry(edge.u).or_default().push((e, edge.v));
        if !edge.is_loop() {
            inc.entry(edge.v).or_default().push((e, edge.u));
        }
    }
    let start = if closed {
        *inc.keys().next().unwrap()
    } else {
        *inc.iter()
            .find(|(_, es)| es.len() == 1)
            .ok_or_else(|| Error::MalformedEars("path ear has no end vertex".into()))?
            .0
    };
    let mut vertices = vec![start];
    let mut edges = Vec::new();
    let mut used = BTreeSet::new();
    let mut cur = start;
    while let Some(&(e, next)) = inc[&cur].iter().find(|(e, _)| !used.contains(e)) {
        used.insert(e);
        edges.push(e);
        cur = next;
        if closed && cur == start {
            break;
        }
        vertices.push(cur);
    }
    if used.len() != ids.len() {
        return Err(Error::MalformedEars("ear edges are not a single path or cycle".into()));
    }
    Ok(Ear { vertices, edges })
}

/// A random ear decomposition of a block: a DFS tree with shuffled root and
/// neighbour order, then one chain per back edge, taken in preorder of its
/// upper end and walked up the tree until it meets an earlier chain.
pub fn ear_decomposition(g: &Multigraph, seed: u64) -> Result<EarDecomposition> {
    if !g.is_block() {
        return Err(Error::NotABlock);
    }
    if g.edge_count() < 2 {
        return Err(Error::Precondition("a single edge has no ear decomposition".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let adj = g.adjacency();
    let verts: Vec<VertexId> = adj.keys().copied().collect();
    let root = *verts.choose(&mut rng).unwrap();

    let mut pre: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut order = Vec::new();
    let mut parent: BTreeMap<VertexId, (VertexId, EdgeId)> = BTreeMap::new();
    let mut tree = EdgeSet::new();
    let shuffled = |v: VertexId, rng: &mut ChaCha8Rng| {
        let mut n = adj[&v].clone();
        n.shuffle(rng);
        n
    };
    pre.insert(root, 0);
    order.push(root);
    let mut stack = vec![(root, shuffled(root, &mut rng), 0usize)];
    while let Some((v, nbrs, idx)) = stack.last_mut() {
        let v = *v;
        if *idx == nbrs.len() {
            stack.pop();
            continue;
        }
        let (e, w) = nbrs[*idx];
        *idx += 1;
        if !pre.contains_key(&w) {
            pre.insert(w, order.len());
            order.push(w);
            parent.insert(w, (v, e));
            tree.insert(e);
            let n = shuffled(w, &mut rng);
            stack.push((w, n, 0));
        }
    }

    let mut back: BTreeMap<VertexId, Vec<(EdgeId, VertexId)>> = BTreeMap::new();
    for e in g.edges() {
        if tree.contains(&e.id) {
            continue;
        }
        let (up, down) = if pre[&e.u] < pre[&e.v] { (e.u, e.v) } else { (e.v, e.u) };
        back.entry(up).or_default().push((e.id, down));
    }

    let mut visited = BTreeSet::new();
    let mut ears = Vec::new();
    for &v in &order {
        let Some(list) = back.get_mut(&v) else { continue };
        list.shuffle(&mut rng);
        for &(e, w) in list.iter() {
            visited.insert(v);
            let mut vertices = vec![v, w];
            let mut edges = vec![e];
            let mut cur = w;
            while visited.insert(cur) {
                let (p, te) = parent[&cur];
                edges.push(te);
                vertices.push(p);
                cur = p;
            }
            if ears.is_empty() {
                // the first chain closes up at the root
                vertices.pop();
            }
            ears.push(Ear { vertices, edges });
        }
    }
    let d = EarDecomposition { ears };
    d.validate(g)?;
    Ok(d)
}

/// The subpath of a host ear between two of its vertices, together with the
/// ears that share it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NestInterval {
    pub host: usize,
    pub edges: Vec<EdgeId>,
    pub endpoints: (VertexId, VertexId),
    pub sigma: Vec<usize>,
    pub ell: usize,
}

impl NestInterval {
    pub fn edge_set(&self) -> EdgeSet {
        self.edges.iter().copied().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NestReport {
    pub ears: Vec<Vec<EdgeId>>,
    pub intervals: Vec<NestInterval>,
    pub p1: usize,
    pub p2: usize,
    pub nested: bool,
    /// An ear without a host, or one whose interval crosses another.
    pub offending_ear: Option<usize>,
}

impl NestReport {
    pub fn interval_count(&self) -> usize {
        self.intervals.len()
    }
}

/// Locates each ear's host and interval, groups ears sharing an interval and
/// counts intervals with `ℓ = 1` (`p1`) and `ℓ > 1` (`p2`).
pub fn nest_analysis(g: &Multigraph, d: &EarDecomposition) -> Result<NestReport> {
    d.validate(g)?;
    let ears = &d.ears;
    let mut owner: BTreeMap<VertexId, usize> = BTreeMap::new();
    for (i, ear) in ears.iter().enumerate() {
        for &v in ear.internal() {
            owner.insert(v, i);
        }
    }

    let mut offending = None;
    // (host, sorted interval edges) -> (interval in host order, ends, sigma)
    let mut groups: BTreeMap<(usize, Vec<EdgeId>), (Vec<EdgeId>, (VertexId, VertexId), Vec<usize>)> =
        BTreeMap::new();
    for (i, ear) in ears.iter().enumerate().skip(1) {
        let (a, b) = ear.endpoints();
        let (oa, ob) = (owner[&a], owner[&b]);
        let host = if oa == ob {
            Some(oa)
        } else if ears[oa].position(b).is_some() {
            Some(oa)
        } else if ears[ob].position(a).is_some() {
            Some(ob)
        } else {
            None
        };
        let Some(host) = host else {
            offending.get_or_insert(i);
            continue;
        };
        let interval = interval_in(&ears[host], a, b);
        let mut key = interval.clone();
        key.sort();
        let (pa, pb) = (ears[host].position(a).unwrap(), ears[host].position(b).unwrap());
        let ends = if pa <= pb { (a, b) } else { (b, a) };
        groups
            .entry((host, key))
            .or_insert_with(|| (interval, ends, Vec::new()))
            .2
            .push(i);
    }

    let mut intervals: Vec<NestInterval> = groups
        .into_iter()
        .map(|((host, _), (edges, endpoints, sigma))| {
            let ell = sigma
                .iter()
                .map(|&i| ears[i].len())
                .chain([edges.len()])
                .min()
                .unwrap();
            NestInterval {
                host,
                edges,
                endpoints,
                sigma,
                ell,
            }
        })
        .collect();
    intervals.sort_by_key(|iv| iv.sigma[0]);

    // intervals in one host must be edge-disjoint or nested
    for (x, ix) in intervals.iter().enumerate() {
        for iy in &intervals[x + 1..] {
            if ix.host != iy.host {
                continue;
            }
            let (sx, sy) = (ix.edge_set(), iy.edge_set());
            if !sx.is_disjoint(&sy) && !sx.is_subset(&sy) && !sy.is_subset(&sx) {
                let late = ix.sigma[0].max(iy.sigma[0]);
                offending = Some(offending.map_or(late, |o: usize| o.min(late)));
            }
        }
    }

    let p1 = intervals.iter().filter(|iv| iv.ell == 1).count();
    Ok(NestReport {
        ears: ears.iter().map(|e| e.edges.clone()).collect(),
        p2: intervals.len() - p1,
        p1,
        intervals,
        nested: offending.is_none(),
        offending_ear: offending,
    })
}

// The subpath of `host` between `a` and `b`. On the initial cycle this is the
// shorter arc, or on a tie the arc holding the smallest edge id.
fn interval_in(host: &Ear, a: VertexId, b: VertexId) -> Vec<EdgeId> {
    let pa = host.position(a).unwrap();
    let pb = host.position(b).unwrap();
    let (lo, hi) = (pa.min(pb), pa.max(pb));
    let inner = host.edges[lo..hi].to_vec();
    if !host.is_cycle() {
        return inner;
    }
    let outer: Vec<EdgeId> = host.edges[hi..].iter().chain(&host.edges[..lo]).copied().collect();
    match inner.len().cmp(&outer.len()) {
        std::cmp::Ordering::Less => inner,
        std::cmp::Ordering::Greater => outer,
        std::cmp::Ordering::Equal => {
            if inner.iter().min() < outer.iter().min() {
                inner
            } else {
                outer
            }
        }
    }
}

/// Rewrites the decomposition so that every interval with `ℓ = 1` is a single
/// edge: the host gives up the interval and takes a length-1 ear of `σ(I)`
/// instead, and the old interval becomes a new ear right after the host.
pub fn interchange_normalize(g: &Multigraph, d: &EarDecomposition) -> Result<EarDecomposition> {
    let before = nest_analysis(g, d)?;
    if !before.nested {
        return Err(Error::NotNested);
    }
    let mut cur = d.clone();
    for _ in 0..=d.len() {
        let report = nest_analysis(g, &cur)?;
        let Some(iv) = report.intervals.iter().find(|iv| iv.ell == 1 && iv.edges.len() > 1) else {
            if (report.p1, report.p2) != (before.p1, before.p2) {
                return Err(Error::Precondition("interchange changed p1 or p2".into()));
            }
            return Ok(cur);
        };
        let short = *iv.sigma.iter().find(|&&i| cur.ears[i].len() == 1).unwrap();
        cur = interchange(&cur, iv.host, short, &iv.edges)?;
        cur.validate(g)?;
    }
    Err(Error::Precondition("interchange did not terminate".into()))
}

fn interchange(d: &EarDecomposition, host: usize, short: usize, interval: &[EdgeId]) -> Result<EarDecomposition> {
    let h = &d.ears[host];
    let e = d.ears[short].edges[0];
    let first = interval[0];
    let start = h.edges.iter().position(|&x| x == first).unwrap();
    let k = interval.len();
    let n = h.edges.len();

    // the interval's edges sit at positions start..start+k (cyclically for a cycle)
    let (new_host, new_ear) = if h.is_cycle() {
        let rot_v: Vec<VertexId> = (0..n).map(|j| h.vertices[(start + j) % n]).collect();
        let rot_e: Vec<EdgeId> = (0..n).map(|j| h.edges[(start + j) % n]).collect();
        let ear = Ear {
            vertices: rot_v[..=k].to_vec(),
            edges: rot_e[..k].to_vec(),
        };
        let mut vertices = vec![rot_v[0]];
        vertices.extend_from_slice(&rot_v[k..]);
        // e joins rot_v[0] and rot_v[k]
        let mut edges = vec![e];
        edges.extend_from_slice(&rot_e[k..]);
        (Ear { vertices, edges }, ear)
    } else {
        let ear = Ear {
            vertices: h.vertices[start..=start + k].to_vec(),
            edges: h.edges[start..start + k].to_vec(),
        };
        let mut vertices = h.vertices[..=start].to_vec();
        vertices.extend_from_slice(&h.vertices[start + k..]);
        let mut edges = h.edges[..start].to_vec();
        edges.push(e);
        edges.extend_from_slice(&h.edges[start + k..]);
        (Ear { vertices, edges }, ear)
    };

    let mut ears = Vec::with_capacity(d.len());
    for (i, ear) in d.ears.iter().enumerate() {
        if i == short {
            continue;
        }
        if i == host {
            ears.push(new_host.clone());
            ears.push(new_ear.clone());
        } else {
            ears.push(ear.clone());
        }
    }
    Ok(EarDecomposition { ears })
}
