//! h-polynomials of broken circuit complexes, computed as `t(M; x, 0)` by
//! deletion–contraction with block factorization at every level.
//!
//! For a loopless graph of rank `r` the h-polynomial is
//! `h(x) = h_0 x^r + h_1 x^(r-1) + ... + h_r`, so the h-vector is the
//! coefficient list read from the top degree down. The recursion:
//!
//! * a loop makes the polynomial zero;
//! * parallel edges are collapsed (the complex of a loopless matroid equals
//!   that of its simplification);
//! * the polynomial is the product over matroid components, a bridge
//!   contributing `x` and a cycle with `k` edges contributing `x^(k-1)+...+x`;
//! * any other block `B` splits as `h(B - e) + h(B / e)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{biconnected_classes, Multigraph, VertexId};
use crate::poly::{binomial, BigPolynomial, Coeff, IntPolynomial, Poly};

/// `h(M(G); x)` with checked 64-bit coefficients.
pub fn h_poly(g: &Multigraph) -> Result<IntPolynomial> {
    h_poly_with::<i64>(g)
}

/// Arbitrary-precision variant of [`h_poly`].
pub fn h_poly_wide(g: &Multigraph) -> Result<BigPolynomial> {
    h_poly_with::<BigInt>(g)
}

pub fn h_poly_with<C: Coeff>(g: &Multigraph) -> Result<Poly<C>> {
    let index: BTreeMap<VertexId, usize> = g.vertices().enumerate().map(|(i, v)| (v, i)).collect();
    let edges: Vec<(usize, usize)> = g.edges().map(|e| (index[&e.u], index[&e.v])).collect();
    h_compact(index.len(), &edges)
}

fn h_compact<C: Coeff>(n: usize, edges: &[(usize, usize)]) -> Result<Poly<C>> {
    if edges.iter().any(|&(a, b)| a == b) {
        return Ok(Poly::zero());
    }
    let mut simple: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    simple.sort_unstable();
    simple.dedup();

    let mut acc = Poly::one();
    for class in biconnected_classes(n, &simple) {
        let h = if class.len() == 1 {
            Poly::monomial(1)
        } else {
            h_block(class.iter().map(|&i| simple[i]).collect())?
        };
        acc = acc.checked_mul(&h)?;
    }
    Ok(acc)
}

/// A simple 2-connected block with at least three edges.
fn h_block<C: Coeff>(edges: Vec<(usize, usize)>) -> Result<Poly<C>> {
    let mut relabel: BTreeMap<usize, usize> = BTreeMap::new();
    for &(a, b) in &edges {
        let next = relabel.len();
        relabel.entry(a).or_insert(next);
        let next = relabel.len();
        relabel.entry(b).or_insert(next);
    }
    let n = relabel.len();
    let edges: Vec<(usize, usize)> = edges.iter().map(|(a, b)| (relabel[a], relabel[b])).collect();

    if edges.len() == n {
        return Ok(Poly::ones_between(1, n - 1));
    }

    // pivot on an edge at a minimum-degree vertex: along a line this peels off
    // one edge at a time and keeps the recursion linear in the line length
    let mut deg = vec![0usize; n];
    for &(a, b) in &edges {
        deg[a] += 1;
        deg[b] += 1;
    }
    let v = (0..n).min_by_key(|&v| deg[v]).unwrap();
    let pivot = edges.iter().position(|&(a, b)| a == v || b == v).unwrap();
    let (keep, gone) = edges[pivot];

    let deleted: Vec<(usize, usize)> = edges
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != pivot)
        .map(|(_, &e)| e)
        .collect();
    let contracted: Vec<(usize, usize)> = deleted
        .iter()
        .map(|&(a, b)| {
            let a = if a == gone { keep } else { a };
            let b = if b == gone { keep } else { b };
            (a, b)
        })
        .collect();

    h_compact::<C>(n, &deleted)?.checked_add(&h_compact(n, &contracted)?)
}

/// `(h_0, ..., h_r)` for a loopless graph of rank `r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HVector {
    pub rank: usize,
    pub h: Vec<i64>,
}

impl HVector {
    /// Reads the h-vector off an h-polynomial of a rank-`rank` matroid.
    pub fn from_poly(poly: &IntPolynomial, rank: usize) -> Self {
        let h = (0..=rank).map(|i| poly.coeff(rank - i)).collect();
        Self { rank, h }
    }

    pub fn get(&self, i: usize) -> i64 {
        self.h.get(i).copied().unwrap_or(0)
    }

    /// Largest index with a nonzero entry.
    pub fn top(&self) -> Option<usize> {
        self.h.iter().rposition(|&c| c != 0)
    }

    /// `h_i = h_{s-i}` for all `i <= s`.
    pub fn is_symmetric(&self) -> bool {
        match self.top() {
            None => true,
            Some(s) => (0..=s).all(|i| self.h[i] == self.h[s - i]),
        }
    }

    /// Nondecreasing up to `floor(s/2)` and nonincreasing afterwards.
    pub fn is_unimodal_at_middle(&self) -> bool {
        let Some(s) = self.top() else { return true };
        let mid = s / 2;
        (0..mid).all(|i| self.h[i] <= self.h[i + 1]) && (mid..s).all(|i| self.h[i] >= self.h[i + 1])
    }

    /// `sum_{j<=i} h_j <= sum_{j<=i} h_{s-j}` for every `i <= s`.
    pub fn partial_sums_dominated(&self) -> bool {
        let Some(s) = self.top() else { return true };
        let (mut lo, mut hi) = (0i64, 0i64);
        (0..=s).all(|i| {
            lo += self.h[i];
            hi += self.h[s - i];
            lo <= hi
        })
    }

    pub fn delta(&self) -> DeltaVector {
        let Some(s) = self.top() else {
            return DeltaVector(Vec::new());
        };
        DeltaVector((0..=s / 2).map(|i| self.h[s - i] - self.h[i]).collect())
    }
}

/// `(δ_0, ..., δ_⌊s/2⌋)` with `δ_i = h_{s-i} - h_i`; entries past the end are 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DeltaVector(pub Vec<i64>);

impl DeltaVector {
    pub fn get(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&d| d >= 0)
    }
}

pub fn h_vector(g: &Multigraph) -> Result<HVector> {
    if g.has_loops() {
        return Err(Error::LoopsPresent);
    }
    Ok(HVector::from_poly(&h_poly(g)?, g.rank()))
}

/// The δ-vector; empty for a graph without edges.
pub fn delta_vector(g: &Multigraph) -> Result<DeltaVector> {
    if g.edge_count() == 0 {
        if g.has_loops() {
            return Err(Error::LoopsPresent);
        }
        return Ok(DeltaVector(Vec::new()));
    }
    Ok(h_vector(g)?.delta())
}

/// `f_i = sum_{j<=i} C(r-j, i-j) h_j`.
pub fn f_from_h(h: &HVector) -> Result<Vec<i64>> {
    let r = h.rank;
    (0..=r)
        .map(|i| {
            (0..=i).try_fold(0i64, |acc, j| {
                let term = binomial::<i64>(r - j, i - j)?
                    .checked_mul(h.h[j])
                    .ok_or(Error::Overflow)?;
                acc.checked_add(term).ok_or(Error::Overflow)
            })
        })
        .collect()
}

pub fn f_vector(g: &Multigraph) -> Result<Vec<i64>> {
    f_from_h(&h_vector(g)?)
}

/// Crapo's β read off the h-vector as `h_{r-1}` (0 when the rank is 0).
pub fn beta(g: &Multigraph) -> Result<i64> {
    let h = h_vector(g)?;
    Ok(if h.rank == 0 { 0 } else { h.h[h.rank - 1] })
}

/// β evaluated directly as `(-1)^r(E) * sum_X (-1)^|X| r(X)`.
pub fn beta_oracle(g: &Multigraph) -> Result<i64> {
    let m = g.edge_count();
    let limit = crate::limits::cycle_edges();
    if m > limit {
        return Err(Error::SizeBound {
            what: "beta_oracle",
            limit,
            actual: m,
        });
    }
    let index: BTreeMap<VertexId, usize> = g.vertices().enumerate().map(|(i, v)| (v, i)).collect();
    let edges: Vec<(usize, usize)> = g.edges().map(|e| (index[&e.u], index[&e.v])).collect();
    let n = index.len();
    let mut total: i64 = 0;
    let mut parent = vec![0usize; n];
    for mask in 0u64..(1u64 << m) {
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i;
        }
        let mut rank = 0i64;
        for (i, &(a, b)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                    rank += 1;
                }
            }
        }
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        total += sign * rank;
    }
    Ok(if g.rank() % 2 == 0 { total } else { -total })
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// `h_2` of a simple connected graph as `C(n - r + 1, 2) - #triangles`.
pub fn h2_simple(g: &Multigraph) -> Result<i64> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.edge_count();
    let r = g.rank();
    Ok(binomial::<i64>(n + 1 - r, 2)? - triangle_count(g) as i64)
}

fn triangle_count(g: &Multigraph) -> usize {
    let adj = g.adjacency();
    let mut count = 0;
    for e in g.edges() {
        let (a, b) = (e.u, e.v);
        // third vertex above both endpoints counts each triangle once
        for &(_, w) in &adj[&a] {
            if w > a && w > b && adj[&b].iter().any(|&(_, x)| x == w) {
                count += 1;
            }
        }
    }
    count
}

/// `x^{-1} h_1 h_2`, the h-polynomial of a parallel connection.
pub fn parallel_connection_h<C: Coeff>(h1: &Poly<C>, h2: &Poly<C>) -> Result<Poly<C>> {
    if !h1.coeff(0).is_zero() || !h2.coeff(0).is_zero() {
        return Err(Error::NotDivisibleByX);
    }
    h1.checked_mul(h2)?.div_x()
}

/// Number of matroid components as read off the h-vector: the smallest `k`
/// with `h_{r-k} > 0`.
pub fn components_from_h(h: &HVector) -> usize {
    (0..=h.rank).find(|&k| h.h[h.rank - k] > 0).unwrap_or(h.rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::{EdgeId, VertexId};

    fn coeffs(p: &IntPolynomial) -> Vec<i64> {
        p.coeffs().to_vec()
    }

    #[test]
    fn cycles() {
        for n in 1..=12usize {
            let h = h_poly(&fixtures::cycle(n + 1)).unwrap();
            assert_eq!(h, Poly::ones_between(1, n));
        }
    }

    #[test]
    fn fig2_h_polynomial() {
        let h = h_poly(&fixtures::fig2()).unwrap();
        assert_eq!(coeffs(&h), vec![0, 1, 5, 10, 12, 9, 4, 1]);
        assert_eq!(h.to_string(), "x^7+4x^6+9x^5+12x^4+10x^3+5x^2+x");
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(coeffs(&h_poly(&fixtures::k4()).unwrap()), vec![0, 2, 3, 1]);
        assert_eq!(coeffs(&h_poly(&Multigraph::from_edges(&[(1, 2)])).unwrap()), vec![0, 1]);
        assert_eq!(coeffs(&h_poly(&Multigraph::new()).unwrap()), vec![1]);
        assert!(h_poly(&Multigraph::from_edges(&[(1, 2), (2, 2)])).unwrap().is_zero());
    }

    #[test]
    fn vectors() {
        let h = h_vector(&fixtures::fig2()).unwrap();
        assert_eq!(h.h, vec![1, 4, 9, 12, 10, 5, 1, 0]);
        assert_eq!(h.delta().0, vec![0, 1, 1, 0]);

        let k23 = h_vector(&fixtures::k2m(3)).unwrap();
        assert_eq!(k23.h, vec![1, 2, 3, 1, 0]);
        assert_eq!(k23.delta().0, vec![0, 1]);

        for n in 2..10 {
            assert!(delta_vector(&fixtures::cycle(n)).unwrap().is_zero());
        }
        assert!(h_vector(&Multigraph::from_edges(&[(1, 1)])).is_err());
        assert_eq!(delta_vector(&Multigraph::new()).unwrap().0, Vec::<i64>::new());
    }

    #[test]
    fn f_vectors() {
        assert_eq!(f_vector(&fixtures::cycle(3)).unwrap(), vec![1, 3, 2]);
        assert_eq!(f_vector(&Multigraph::from_edges(&[(1, 2)])).unwrap(), vec![1, 1]);
        assert_eq!(f_vector(&fixtures::k4()).unwrap(), vec![1, 6, 11, 6]);
    }

    #[test]
    fn beta_values() {
        for n in 2..9 {
            assert_eq!(beta(&fixtures::cycle(n)).unwrap(), 1);
            assert_eq!(beta_oracle(&fixtures::cycle(n)).unwrap(), 1);
        }
        assert_eq!(beta(&fixtures::k4()).unwrap(), 2);
        assert_eq!(beta_oracle(&fixtures::k4()).unwrap(), 2);
        assert_eq!(beta(&fixtures::bowtie()).unwrap(), 0);
        assert_eq!(beta_oracle(&fixtures::bowtie()).unwrap(), 0);
        assert_eq!(beta_oracle(&Multigraph::from_edges(&[(1, 2)])).unwrap(), 1);
    }

    #[test]
    fn h2_formula() {
        assert_eq!(h2_simple(&fixtures::k2m(3)).unwrap(), 3);
        assert_eq!(h2_simple(&fixtures::k4()).unwrap(), 2);
        assert_eq!(h2_simple(&fixtures::cycle(3)).unwrap(), 0);
        for n in 4..9 {
            assert_eq!(h2_simple(&fixtures::cycle(n)).unwrap(), 1);
        }
        assert_eq!(h2_simple(&fixtures::cycle(2)), Err(Error::NotSimple));
        assert_eq!(h2_simple(&fixtures::bowtie().remove_vertex(VertexId(1))), Err(Error::NotConnected));
    }

    #[test]
    fn parallel_connection() {
        let tri = h_poly(&fixtures::cycle(3)).unwrap();
        let glued = parallel_connection_h(&tri, &tri).unwrap();
        assert_eq!(coeffs(&glued), vec![0, 1, 2, 1]);
        assert_eq!(glued, h_poly(&fixtures::triangles_sharing_edge(2)).unwrap());

        let k2 = h_poly(&Multigraph::from_edges(&[(1, 2)])).unwrap();
        let c2 = h_poly(&fixtures::cycle(2)).unwrap();
        let fig2 = h_poly(&fixtures::fig2()).unwrap();
        assert_eq!(parallel_connection_h(&k2, &fig2).unwrap(), fig2);
        assert_eq!(parallel_connection_h(&c2, &fig2).unwrap(), fig2);
        assert_eq!(
            parallel_connection_h(&Poly::one(), &fig2),
            Err(Error::NotDivisibleByX)
        );
    }

    #[test]
    fn component_count_from_h() {
        let h = h_vector(&fixtures::bowtie()).unwrap();
        assert_eq!(components_from_h(&h), 2);
        let mut g = fixtures::fig2();
        g.add_edge(EdgeId(13), VertexId(2), VertexId(20)).unwrap();
        assert_eq!(components_from_h(&h_vector(&g).unwrap()), 2);
    }

    #[test]
    fn wide_mode_agrees() {
        let g = fixtures::fig2();
        let narrow = h_poly(&g).unwrap();
        assert_eq!(h_poly_wide(&g).unwrap(), BigPolynomial::from(&narrow));
    }
}
