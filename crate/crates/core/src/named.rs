//! Small named graphs used throughout the examples and tests.

use crate::multigraph::Multigraph;

/// `P_n`: the path on `n` vertices.
pub fn path(n: usize) -> Multigraph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Multigraph::new(n, &edges).unwrap()
}

/// `C_n` for `n >= 3`.
pub fn cycle(n: usize) -> Multigraph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Multigraph::new(n, &edges).unwrap()
}

pub fn complete(n: usize) -> Multigraph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            edges.push((i, j));
        }
    }
    Multigraph::new(n, &edges).unwrap()
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Multigraph {
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            edges.push((i, a + j));
        }
    }
    Multigraph::new(a + b, &edges).unwrap()
}

/// `K_{1,k}` with center 0.
pub fn star(k: usize) -> Multigraph {
    complete_bipartite(1, k)
}

pub fn k33() -> Multigraph {
    complete_bipartite(3, 3)
}

/// The 3-cube: vertices are 3-bit words, adjacent when they differ in one bit.
pub fn q3() -> Multigraph {
    let mut edges = Vec::new();
    for u in 0..8usize {
        for bit in 0..3 {
            let v = u ^ (1 << bit);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Multigraph::new(8, &edges).unwrap()
}

pub fn petersen() -> Multigraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Multigraph::new(10, &edges).unwrap()
}

/// `C_4` plus the chord `0-2`.
pub fn diamond() -> Multigraph {
    Multigraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap()
}

/// A triangle `0,1,2` with a pendant vertex 3 on 0.
pub fn paw() -> Multigraph {
    Multigraph::new(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap()
}

/// `k` parallel edges on two vertices.
pub fn fat_edge(k: usize) -> Multigraph {
    Multigraph::new_uncapped(2, &vec![(0, 1); k]).unwrap()
}

/// The triangular prism `C_3 x K_2`.
pub fn prism() -> Multigraph {
    Multigraph::new(
        6,
        &[
            (0, 1),
            (1, 2),
            (2, 0),
            (3, 4),
            (4, 5),
            (5, 3),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
    .unwrap()
}
