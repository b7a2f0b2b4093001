//! Exhaustive topological-subgraph searches used as oracles: subdivisions of
//! `K4`, `K_{2,3}` and doubled cycles, and vertex-induced `K_{2,3}`
//! subdivisions. All are exponential and refuse inputs above
//! [`crate::limits::subdivision_vertices`] vertices.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexId};

/// A pattern graph: `branch` vertices and edges `(a, b, min_len)` that must be
/// realised by internally disjoint paths of at least `min_len` edges.
#[derive(Clone, Debug)]
pub struct Pattern {
    pub branch: usize,
    pub edges: Vec<(usize, usize, usize)>,
    /// Branch images must increase within each group (pattern symmetries).
    pub increasing: Vec<Vec<usize>>,
}

impl Pattern {
    pub fn k4() -> Self {
        Self {
            branch: 4,
            edges: vec![(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)],
            increasing: vec![vec![0, 1, 2, 3]],
        }
    }

    /// Two hubs joined by three paths of length at least 2.
    pub fn k23() -> Self {
        Self {
            branch: 2,
            edges: vec![(0, 1, 2), (0, 1, 2), (0, 1, 2)],
            increasing: vec![vec![0, 1]],
        }
    }

    fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.branch];
        for &(a, b, _) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }
}

// Loopless index form of a graph.
struct Compact {
    adj: Vec<Vec<(usize, usize)>>,
    edges: usize,
}

impl Compact {
    fn new(g: &Multigraph) -> Self {
        let index: BTreeMap<VertexId, usize> = g
            .vertices()
            .filter(|&v| g.degree(v) > 0)
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        let mut adj = vec![Vec::new(); index.len()];
        let mut m = 0;
        for e in g.edges().filter(|e| !e.is_loop()) {
            let (a, b) = (index[&e.u], index[&e.v]);
            adj[a].push((m, b));
            adj[b].push((m, a));
            m += 1;
        }
        Self { adj, edges: m }
    }

    fn n(&self) -> usize {
        self.adj.len()
    }
}

fn check_size(g: &Multigraph, what: &'static str) -> Result<()> {
    let n = g.vertices().filter(|&v| g.degree(v) > 0).count();
    let limit = crate::limits::subdivision_vertices();
    if n > limit {
        return Err(Error::SizeBound { what, limit, actual: n });
    }
    Ok(())
}

struct Packing<'a> {
    c: &'a Compact,
    pat: &'a Pattern,
    branch: Vec<usize>,
    used_v: Vec<bool>,
    used_e: Vec<bool>,
}

impl Packing<'_> {
    fn pack(&mut self, k: usize) -> bool {
        let Some(&(a, b, min)) = self.pat.edges.get(k) else {
            return true;
        };
        let (s, t) = (self.branch[a], self.branch[b]);
        self.route(s, t, min, 0, k)
    }

    fn route(&mut self, v: usize, t: usize, min: usize, len: usize, k: usize) -> bool {
        for i in 0..self.c.adj[v].len() {
            let (e, w) = self.c.adj[v][i];
            if self.used_e[e] {
                continue;
            }
            if w == t {
                if len + 1 >= min {
                    self.used_e[e] = true;
                    if self.pack(k + 1) {
                        return true;
                    }
                    self.used_e[e] = false;
                }
                continue;
            }
            if self.used_v[w] {
                continue;
            }
            self.used_v[w] = true;
            self.used_e[e] = true;
            if self.route(w, t, min, len + 1, k) {
                return true;
            }
            self.used_v[w] = false;
            self.used_e[e] = false;
        }
        false
    }
}

/// Whether `g` (loops ignored) has a subgraph that is a subdivision of `pat`.
pub fn contains_subdivision(g: &Multigraph, pat: &Pattern) -> Result<bool> {
    check_size(g, "subdivision search")?;
    let c = Compact::new(g);
    let need = pat.degrees();
    let mut branch = Vec::with_capacity(pat.branch);
    Ok(assign(&c, pat, &need, &mut branch))
}

fn assign(c: &Compact, pat: &Pattern, need: &[usize], branch: &mut Vec<usize>) -> bool {
    let k = branch.len();
    if k == pat.branch {
        let mut used_v = vec![false; c.n()];
        for &b in branch.iter() {
            used_v[b] = true;
        }
        let mut p = Packing {
            c,
            pat,
            branch: branch.clone(),
            used_v,
            used_e: vec![false; c.edges],
        };
        return p.pack(0);
    }
    // lower bound from symmetry groups: image must exceed the previous member's
    let floor = pat
        .increasing
        .iter()
        .filter_map(|grp| {
            let pos = grp.iter().position(|&x| x == k)?;
            (pos > 0).then(|| branch[grp[pos - 1]] + 1)
        })
        .max()
        .unwrap_or(0);
    for v in floor..c.n() {
        if branch.contains(&v) || c.adj[v].len() < need[k] {
            continue;
        }
        branch.push(v);
        if assign(c, pat, need, branch) {
            return true;
        }
        branch.pop();
    }
    false
}

pub fn has_k4_subdivision(g: &Multigraph) -> Result<bool> {
    contains_subdivision(g, &Pattern::k4())
}

pub fn has_k23_subdivision(g: &Multigraph) -> Result<bool> {
    contains_subdivision(g, &Pattern::k23())
}

/// Whether `g` (loops ignored) contains a subdivision of `C²_m` for some
/// `m >= 3`: a cyclic sequence of branch vertices, consecutive ones joined by
/// two internally disjoint paths.
pub fn has_doubled_cycle_subdivision(g: &Multigraph) -> Result<bool> {
    check_size(g, "doubled cycle search")?;
    let c = Compact::new(g);
    let mut s = Ring {
        c: &c,
        used_v: vec![false; c.n()],
        used_e: vec![false; c.edges],
        start: 0,
    };
    for b0 in 0..c.n() {
        if c.adj[b0].len() < 4 {
            continue;
        }
        s.start = b0;
        s.used_v[b0] = true;
        if s.first_path(b0, 1) {
            return Ok(true);
        }
        s.used_v[b0] = false;
    }
    Ok(false)
}

// Grows the ring from `start`, the smallest branch vertex. Each link is a
// pair of paths from the current branch vertex; the first path chooses the
// next branch vertex, the second must reach it too.
struct Ring<'a> {
    c: &'a Compact,
    used_v: Vec<bool>,
    used_e: Vec<bool>,
    start: usize,
}

impl Ring<'_> {
    // `count` branch vertices placed so far, the last being `from`.
    fn first_path(&mut self, from: usize, count: usize) -> bool {
        self.walk_first(from, from, count)
    }

    fn walk_first(&mut self, from: usize, v: usize, count: usize) -> bool {
        for i in 0..self.c.adj[v].len() {
            let (e, w) = self.c.adj[v][i];
            if self.used_e[e] {
                continue;
            }
            if w == self.start {
                if count >= 3 {
                    self.used_e[e] = true;
                    if self.second_path(from, from, w, count) {
                        return true;
                    }
                    self.used_e[e] = false;
                }
                continue;
            }
            if self.used_v[w] {
                continue;
            }
            self.used_e[e] = true;
            self.used_v[w] = true;
            // stop here and make w the next branch vertex
            if w > self.start && self.c.adj[w].len() >= 4 && self.second_path(from, from, w, count) {
                return true;
            }
            // or pass through w
            if self.walk_first(from, w, count) {
                return true;
            }
            self.used_e[e] = false;
            self.used_v[w] = false;
        }
        false
    }

    fn second_path(&mut self, from: usize, v: usize, target: usize, count: usize) -> bool {
        for i in 0..self.c.adj[v].len() {
            let (e, w) = self.c.adj[v][i];
            if self.used_e[e] {
                continue;
            }
            if w == target {
                self.used_e[e] = true;
                let done = if target == self.start {
                    true
                } else {
                    self.first_path(target, count + 1)
                };
                if done {
                    return true;
                }
                self.used_e[e] = false;
                continue;
            }
            if self.used_v[w] {
                continue;
            }
            self.used_e[e] = true;
            self.used_v[w] = true;
            if self.second_path(from, w, target, count) {
                return true;
            }
            self.used_e[e] = false;
            self.used_v[w] = false;
        }
        false
    }
}

/// Whether `simplify(g)` has a vertex set inducing a subdivision of `K_{2,3}`.
pub fn has_induced_k23_subdivision(g: &Multigraph) -> Result<bool> {
    check_size(g, "induced subgraph search")?;
    let (s, _) = g.simplify();
    let c = Compact::new(&s);
    let n = c.n();
    let mut nbr = vec![0u32; n];
    for (v, list) in c.adj.iter().enumerate() {
        for &(_, w) in list {
            nbr[v] |= 1 << w;
        }
    }
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() >= 5 && induces_theta(&nbr, mask) {
            return Ok(true);
        }
    }
    Ok(false)
}

// Exactly two vertices of degree 3, the rest of degree 2, non-adjacent hubs,
// and every branch from one hub runs to the other.
fn induces_theta(nbr: &[u32], mask: u32) -> bool {
    let mut hubs = Vec::new();
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        match (nbr[v] & mask).count_ones() {
            2 => {}
            3 => hubs.push(v),
            _ => return false,
        }
    }
    let [h1, h2] = hubs[..] else { return false };
    if nbr[h1] >> h2 & 1 == 1 {
        return false;
    }
    let mut seen = 1u32 << h1;
    let mut start_mask = nbr[h1] & mask;
    while start_mask != 0 {
        let mut prev = h1;
        let mut cur = start_mask.trailing_zeros() as usize;
        start_mask &= start_mask - 1;
        while cur != h2 {
            if cur == h1 || seen >> cur & 1 == 1 {
                return false;
            }
            seen |= 1 << cur;
            let next = nbr[cur] & mask & !(1 << prev);
            prev = cur;
            cur = next.trailing_zeros() as usize;
        }
    }
    // every vertex lies on one of the three branches
    (seen | 1 << h2) == mask
}
