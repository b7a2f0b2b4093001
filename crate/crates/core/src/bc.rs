//! Brute-force broken circuit complexes from an explicit edge ordering.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, Multigraph, VertexId};

/// A total order on the edges of a graph, smallest first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeOrdering(Vec<EdgeId>);

impl EdgeOrdering {
    pub fn new(order: Vec<EdgeId>, g: &Multigraph) -> Result<Self> {
        let set: EdgeSet = order.iter().copied().collect();
        if set.len() != order.len() || set != g.edge_ids() {
            return Err(Error::BadOrdering);
        }
        Ok(Self(order))
    }

    /// Ascending edge ids.
    pub fn natural(g: &Multigraph) -> Self {
        Self(g.edge_ids().into_iter().collect())
    }

    pub fn random(g: &Multigraph, seed: u64) -> Self {
        let mut order: Vec<EdgeId> = g.edge_ids().into_iter().collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        Self(order)
    }

    pub fn as_slice(&self) -> &[EdgeId] {
        &self.0
    }

    fn positions(&self) -> BTreeMap<EdgeId, usize> {
        self.0.iter().enumerate().map(|(i, &e)| (e, i)).collect()
    }
}

fn check(g: &Multigraph, ord: &EdgeOrdering) -> Result<()> {
    if g.has_loops() {
        return Err(Error::LoopsPresent);
    }
    let limit = crate::limits::bc_edges();
    if g.edge_count() > limit {
        return Err(Error::SizeBound {
            what: "broken circuit complex",
            limit,
            actual: g.edge_count(),
        });
    }
    EdgeOrdering::new(ord.0.clone(), g).map(|_| ())
}

/// Every circuit with its least element (under `ord`) removed.
pub fn broken_circuits(g: &Multigraph, ord: &EdgeOrdering) -> Result<Vec<EdgeSet>> {
    check(g, ord)?;
    let pos = ord.positions();
    let mut out: Vec<EdgeSet> = g
        .all_cycles()?
        .into_iter()
        .map(|mut c| {
            let least = *c.iter().min_by_key(|e| pos[e]).unwrap();
            c.remove(&least);
            c
        })
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out.dedup();
    Ok(out)
}

/// Face counts `(f_0, ..., f_r)` of the broken circuit complex.
pub fn bc_fvector(g: &Multigraph, ord: &EdgeOrdering) -> Result<Vec<i64>> {
    let faces = bc_faces(g, ord)?;
    let mut f = vec![0i64; g.rank() + 1];
    for face in faces {
        f[face.count_ones() as usize] += 1;
    }
    Ok(f)
}

/// All faces as bitmasks over positions in `ord`.
pub fn bc_faces(g: &Multigraph, ord: &EdgeOrdering) -> Result<Vec<u64>> {
    let bcs = broken_circuits(g, ord)?;
    let pos = ord.positions();
    let masks: Vec<u64> = bcs
        .iter()
        .map(|s| s.iter().fold(0u64, |m, e| m | 1 << pos[e]))
        .collect();
    let index: BTreeMap<VertexId, usize> = g.vertices().enumerate().map(|(i, v)| (v, i)).collect();
    let ends: Vec<(usize, usize)> = ord
        .0
        .iter()
        .map(|&e| {
            let edge = g.edge(e).unwrap();
            (index[&edge.u], index[&edge.v])
        })
        .collect();

    let mut faces = Vec::new();
    let mut parent: Vec<usize> = (0..index.len()).collect();
    extend(0, 0, &ends, &masks, &mut parent, &mut faces);
    Ok(faces)
}

fn root(parent: &[usize], mut x: usize) -> usize {
    while parent[x] != x {
        x = parent[x];
    }
    x
}

// Faces are forests avoiding every broken circuit. Union-find without path
// compression so that a union can be undone on backtrack.
fn extend(
    from: usize,
    face: u64,
    ends: &[(usize, usize)],
    masks: &[u64],
    parent: &mut Vec<usize>,
    faces: &mut Vec<u64>,
) {
    faces.push(face);
    for i in from..ends.len() {
        let (a, b) = ends[i];
        let (ra, rb) = (root(parent, a), root(parent, b));
        if ra == rb {
            continue;
        }
        let next = face | 1 << i;
        if masks.iter().any(|&m| m & next == m) {
            continue;
        }
        parent[ra] = rb;
        extend(i + 1, next, ends, masks, parent, faces);
        parent[ra] = ra;
    }
}
