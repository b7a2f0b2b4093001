//! Named graphs used throughout the tests, benches and CLI examples.

use crate::graph::Multigraph;

/// `C_n` on vertices `1..=n`, edge `i` joining `i` and `i+1` (mod n).
/// `n = 1` is a loop and `n = 2` a pair of parallel edges.
pub fn cycle(n: usize) -> Multigraph {
    assert!(n >= 1);
    let n = n as u32;
    let pairs: Vec<_> = (1..=n).map(|i| (i, if i == n { 1 } else { i + 1 })).collect();
    Multigraph::from_edges(&pairs)
}

/// `C_m^2`: edges `1..=m` form the cycle and edge `m+i` is parallel to `i`.
pub fn doubled_cycle(m: usize) -> Multigraph {
    let base = cycle(m);
    let mut pairs: Vec<_> = base.edges().map(|e| (e.u.0, e.v.0)).collect();
    pairs.extend(pairs.clone());
    Multigraph::from_edges(&pairs)
}

pub fn k4() -> Multigraph {
    Multigraph::from_edges(&[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
}

/// Two hubs `1` and `2` joined by internally disjoint paths of the given
/// lengths; edges are numbered consecutively along each path.
pub fn theta(lengths: &[usize]) -> Multigraph {
    let mut pairs = Vec::new();
    let mut next = 3u32;
    for &len in lengths {
        assert!(len >= 1);
        let mut at = 1u32;
        for step in 0..len {
            let to = if step + 1 == len {
                2
            } else {
                next += 1;
                next - 1
            };
            pairs.push((at, to));
            at = to;
        }
    }
    Multigraph::from_edges(&pairs)
}

/// `K_{2,m}`.
pub fn k2m(m: usize) -> Multigraph {
    theta(&vec![2; m])
}

/// Two triangles sharing the vertex `1`.
pub fn bowtie() -> Multigraph {
    Multigraph::from_edges(&[(1, 2), (2, 3), (3, 1), (1, 4), (4, 5), (5, 1)])
}

/// `k` triangles glued along the common edge `1` between vertices 1 and 2
/// (`k = 3` is `K_{2,3}` plus an edge joining its hubs).
pub fn triangles_sharing_edge(k: usize) -> Multigraph {
    let mut pairs = vec![(1, 2)];
    for i in 0..k as u32 {
        pairs.push((1, 3 + i));
        pairs.push((3 + i, 2));
    }
    Multigraph::from_edges(&pairs)
}

/// The 12-edge series-parallel network with vertices A..H numbered 1..8:
/// 1:A-B 2:A-C 3:C-D 4:D-E 5:E-B 6:C-D 7:D-B 8:D-F 9:F-H 10:H-B 11:F-G 12:G-B.
pub fn fig2() -> Multigraph {
    Multigraph::from_edges(&[
        (1, 2),
        (1, 3),
        (3, 4),
        (4, 5),
        (5, 2),
        (3, 4),
        (4, 2),
        (4, 6),
        (6, 8),
        (8, 2),
        (6, 7),
        (7, 2),
    ])
}

/// First graph of the pair with isomorphic cycle matroids but four vertices
/// of degree at least 3.
pub fn fig3_g1() -> Multigraph {
    Multigraph::from_edges(&[
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 7),
        (7, 5),
        (5, 6),
        (6, 1),
        (1, 8),
        (8, 3),
        (5, 9),
        (9, 4),
    ])
}

/// Second graph of the pair; three vertices of degree at least 3.
pub fn fig3_g2() -> Multigraph {
    Multigraph::from_edges(&[
        (1, 3),
        (3, 6),
        (6, 5),
        (5, 4),
        (4, 7),
        (7, 2),
        (2, 1),
        (8, 7),
        (8, 5),
        (5, 9),
        (3, 9),
    ])
}
