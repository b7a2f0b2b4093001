//! Test corpora: series-parallel networks by closure from a single edge,
//! seeded random walks, and all small blocks.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexId};
use crate::hvector::h_poly;

pub const MAX_SP_OPS: usize = 12;
pub const MAX_BLOCK_EDGES: usize = 9;

/// Cheap isomorphism invariant. Distinct graphs may collide.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Fingerprint {
    pub degrees: Vec<usize>,
    /// For each vertex, its degree followed by its neighbours' degrees; sorted.
    pub neighbourhoods: Vec<Vec<usize>>,
    pub cycle_lengths: Vec<usize>,
    pub h_poly: Vec<i64>,
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        let h: Vec<String> = self.h_poly.iter().map(|x| x.to_string()).collect();
        write!(
            f,
            "d{}|c{}|h{}",
            join(&self.degrees),
            join(&self.cycle_lengths),
            h.join(",")
        )
    }
}

pub fn fingerprint(g: &Multigraph) -> Result<Fingerprint> {
    let deg = g.degrees();
    let mut degrees: Vec<usize> = deg.values().copied().collect();
    degrees.sort_unstable();
    let adj = g.adjacency();
    let mut neighbourhoods: Vec<Vec<usize>> = adj
        .iter()
        .map(|(v, list)| {
            let mut n: Vec<usize> = list.iter().map(|(_, w)| deg[w]).collect();
            n.sort_unstable();
            n.insert(0, deg[v]);
            n
        })
        .collect();
    neighbourhoods.sort();
    let mut cycle_lengths: Vec<usize> = g.all_cycles()?.iter().map(|c| c.len()).collect();
    cycle_lengths.sort_unstable();
    let h_poly = if g.has_loops() {
        Vec::new()
    } else {
        h_poly(g)?.coeffs().to_vec()
    };
    Ok(Fingerprint {
        degrees,
        neighbourhoods,
        cycle_lengths,
        h_poly,
    })
}

fn next_edge(g: &Multigraph) -> EdgeId {
    EdgeId(g.max_edge_id().map_or(1, |e| e.0 + 1))
}

fn next_vertex(g: &Multigraph) -> VertexId {
    VertexId(g.max_vertex_id().map_or(1, |v| v.0 + 1))
}

/// Splits `e = uv` into `uw` (keeping the id of `e`) and a new edge `wv`.
pub fn subdivide(g: &Multigraph, e: EdgeId) -> Result<Multigraph> {
    let edge = g.edge(e)?;
    let w = next_vertex(g);
    let f = next_edge(g);
    let mut out = g.delete_edge(e)?;
    out.add_edge(e, edge.u, w)?;
    out.add_edge(f, w, edge.v)?;
    Ok(out)
}

/// Adds a new edge parallel to `e`.
pub fn duplicate(g: &Multigraph, e: EdgeId) -> Result<Multigraph> {
    let edge = g.edge(e)?;
    let mut out = g.clone();
    out.add_edge(next_edge(g), edge.u, edge.v)?;
    Ok(out)
}

fn single_edge() -> Multigraph {
    Multigraph::from_edges(&[(1, 2)])
}

/// Lazily yields `K2`, then breadth-first every graph reachable by at most
/// `max_ops` subdivisions and duplications whose result is a block.
/// Subdividing `K2` first gives a path, which never becomes a block, so that
/// branch is not explored.
pub fn enumerate_sp(max_ops: usize) -> Result<SpStream> {
    if max_ops > MAX_SP_OPS {
        return Err(Error::GeneratorBound {
            what: "max_ops",
            limit: MAX_SP_OPS,
            actual: max_ops,
        });
    }
    Ok(SpStream {
        max_ops,
        level: 0,
        current: vec![single_edge()].into_iter(),
        next: Vec::new(),
        seen: HashSet::new(),
    })
}

pub struct SpStream {
    max_ops: usize,
    level: usize,
    current: std::vec::IntoIter<Multigraph>,
    next: Vec<Multigraph>,
    seen: HashSet<Fingerprint>,
}

impl SpStream {
    fn expand(&mut self, g: &Multigraph) {
        if self.level >= self.max_ops {
            return;
        }
        for e in g.edge_ids() {
            let children = if g.edge_count() == 1 {
                vec![duplicate(g, e)]
            } else {
                vec![subdivide(g, e), duplicate(g, e)]
            };
            for child in children.into_iter().flatten() {
                let fp = fingerprint(&child).expect("generated graphs stay within size bounds");
                if self.seen.insert(fp) {
                    self.next.push(child);
                }
            }
        }
    }
}

impl Iterator for SpStream {
    type Item = Multigraph;

    fn next(&mut self) -> Option<Multigraph> {
        loop {
            if let Some(g) = self.current.next() {
                self.expand(&g);
                return Some(g);
            }
            if self.next.is_empty() {
                return None;
            }
            self.level += 1;
            self.current = std::mem::take(&mut self.next).into_iter();
        }
    }
}

/// A seeded random walk of `ops` extensions from `K2`. The first step from
/// `K2` is always a duplication so the result is a block.
pub fn random_sp(seed: u64, ops: usize) -> Multigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = single_edge();
    for _ in 0..ops {
        let ids: Vec<EdgeId> = g.edge_ids().into_iter().collect();
        let e = ids[rng.gen_range(0..ids.len())];
        let series = g.edge_count() > 1 && rng.gen_bool(0.5);
        g = if series { subdivide(&g, e) } else { duplicate(&g, e) }.expect("edge exists");
    }
    g
}

/// All loopless blocks with at most `max_edges` edges, up to fingerprint:
/// `K2`, then every cycle extended by ears (paths between two distinct
/// existing vertices through new vertices).
pub fn enumerate_blocks(max_edges: usize) -> Result<BlockStream> {
    if max_edges > MAX_BLOCK_EDGES {
        return Err(Error::GeneratorBound {
            what: "max_edges",
            limit: MAX_BLOCK_EDGES,
            actual: max_edges,
        });
    }
    let mut start = Vec::new();
    if max_edges >= 1 {
        start.push(single_edge());
    }
    let mut seen = HashSet::new();
    for n in 2..=max_edges {
        let c = crate::fixtures::cycle(n);
        seen.insert(fingerprint(&c)?);
        start.push(c);
    }
    Ok(BlockStream {
        max_edges,
        queue: start.into(),
        seen,
    })
}

pub struct BlockStream {
    max_edges: usize,
    queue: std::collections::VecDeque<Multigraph>,
    seen: HashSet<Fingerprint>,
}

impl BlockStream {
    fn expand(&mut self, g: &Multigraph) {
        if g.edge_count() < 2 {
            return;
        }
        let room = self.max_edges - g.edge_count();
        let vs: Vec<VertexId> = g.vertices().collect();
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                for len in 1..=room {
                    let child = add_ear(g, a, b, len);
                    let fp = fingerprint(&child).expect("generated graphs stay within size bounds");
                    if self.seen.insert(fp) {
                        self.queue.push_back(child);
                    }
                }
            }
        }
    }
}

fn add_ear(g: &Multigraph, a: VertexId, b: VertexId, len: usize) -> Multigraph {
    let mut out = g.clone();
    let mut at = a;
    for k in 0..len {
        let to = if k + 1 == len { b } else { next_vertex(&out) };
        let id = next_edge(&out);
        out.add_edge(id, at, to).expect("fresh edge id");
        at = to;
    }
    out
}

impl Iterator for BlockStream {
    type Item = Multigraph;

    fn next(&mut self) -> Option<Multigraph> {
        let g = self.queue.pop_front()?;
        self.expand(&g);
        Some(g)
    }
}

/// Counts emitted graphs per edge count.
pub fn size_profile<I: IntoIterator<Item = Multigraph>>(it: I) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for g in it {
        *out.entry(g.edge_count()).or_default() += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::sp::is_series_parallel;

    fn fps<I: IntoIterator<Item = Multigraph>>(it: I) -> HashSet<Fingerprint> {
        it.into_iter().map(|g| fingerprint(&g).unwrap()).collect()
    }

    #[test]
    fn sp_closure_small_levels() {
        let one: Vec<Multigraph> = enumerate_sp(1).unwrap().collect();
        assert_eq!(one.len(), 2);
        assert_eq!(one[1], fixtures::cycle(2));
        let two = fps(enumerate_sp(2).unwrap());
        assert!(two.contains(&fingerprint(&fixtures::cycle(3)).unwrap()));
        assert!(two.contains(&fingerprint(&Multigraph::from_edges(&[(1, 2), (1, 2), (1, 2)])).unwrap()));
        assert_eq!(two.len(), 4);
    }

    #[test]
    fn sp_closure_outputs_are_sp() {
        for g in enumerate_sp(6).unwrap() {
            assert!(is_series_parallel(&g).unwrap(), "{g}");
        }
        assert!(matches!(enumerate_sp(13), Err(Error::GeneratorBound { .. })));
    }

    #[test]
    fn random_walks() {
        assert_eq!(random_sp(1, 0), single_edge());
        for seed in 0..20 {
            let g = random_sp(seed, 8);
            assert_eq!(g, random_sp(seed, 8));
            assert_eq!(g.edge_count(), 9);
            assert!(is_series_parallel(&g).unwrap());
        }
    }

    #[test]
    fn blocks_stream() {
        let three = fps(enumerate_blocks(3).unwrap());
        let triple = Multigraph::from_edges(&[(1, 2), (1, 2), (1, 2)]);
        assert!(three.contains(&fingerprint(&fixtures::cycle(3)).unwrap()));
        assert!(three.contains(&fingerprint(&triple).unwrap()));
        assert_eq!(three.len(), 4);
        let six: Vec<Multigraph> = enumerate_blocks(6).unwrap().collect();
        assert!(six.iter().all(Multigraph::is_block));
        let k4 = fingerprint(&fixtures::k4()).unwrap();
        assert!(six.iter().any(|g| fingerprint(g).unwrap() == k4));
        assert!(matches!(enumerate_blocks(10), Err(Error::GeneratorBound { .. })));
    }

    #[test]
    fn sp_blocks_appear_in_closure() {
        let closure = fps(enumerate_sp(6).unwrap());
        for g in enumerate_blocks(7).unwrap() {
            if is_series_parallel(&g).unwrap() {
                assert!(closure.contains(&fingerprint(&g).unwrap()), "{g}");
            }
        }
    }
}
