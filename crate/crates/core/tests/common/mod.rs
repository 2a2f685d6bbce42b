#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use starline::Multigraph;

/// Random loopless multigraph with maximum degree 3 and multiplicity at most
/// 3 (or simple), built by repeated random edge attempts.
pub fn random_subcubic(rng: &mut ChaCha8Rng, n: usize, simple: bool) -> Multigraph {
    let mut deg = vec![0usize; n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    if n >= 2 {
        let attempts = rng.gen_range(0..=3 * n);
        for _ in 0..attempts {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            let mult = edges
                .iter()
                .filter(|&&(a, b)| (a, b) == (u.min(v), u.max(v)))
                .count();
            if u == v || deg[u] == 3 || deg[v] == 3 || (simple && mult > 0) {
                continue;
            }
            deg[u] += 1;
            deg[v] += 1;
            edges.push((u.min(v), u.max(v)));
        }
    }
    Multigraph::new(n, &edges).expect("random graph respects bounds")
}

pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    p
}

/// Star-coloring test written from the definition: adjacent edges differ,
/// and no walk of four distinct edges through five distinct vertices, or
/// around four distinct vertices, alternates two colors.
pub fn oracle_is_star(g: &Multigraph, colors: &[u32]) -> bool {
    let edges = g.edges();
    let m = edges.len();
    let other = |e: usize, v: usize| {
        if edges[e].0 == v {
            edges[e].1
        } else {
            edges[e].0
        }
    };
    let touches = |e: usize, v: usize| edges[e].0 == v || edges[e].1 == v;
    for a in 0..m {
        for b in a + 1..m {
            let (x, y) = edges[a];
            if (touches(b, x) || touches(b, y)) && colors[a] == colors[b] {
                return false;
            }
        }
    }
    for e1 in 0..m {
        for start in [edges[e1].0, edges[e1].1] {
            let v1 = other(e1, start);
            for e2 in (0..m).filter(|&e| e != e1 && touches(e, v1)) {
                let v2 = other(e2, v1);
                if v2 == start {
                    continue;
                }
                for e3 in (0..m).filter(|&e| e != e1 && e != e2 && touches(e, v2)) {
                    let v3 = other(e3, v2);
                    if v3 == start || v3 == v1 {
                        continue;
                    }
                    for e4 in (0..m).filter(|&e| e != e1 && e != e2 && e != e3 && touches(e, v3)) {
                        let v4 = other(e4, v3);
                        if v4 == v1 || v4 == v2 {
                            continue;
                        }
                        if colors[e1] == colors[e3] && colors[e2] == colors[e4] {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Whether some coloring in `[k]^m` passes [`oracle_is_star`]. The first
/// edge is fixed to color 1, which loses nothing by symmetry.
pub fn oracle_colorable(g: &Multigraph, k: u32) -> bool {
    let m = g.m();
    if m == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let mut colors = vec![1u32; m];
    loop {
        if oracle_is_star(g, &colors) {
            return true;
        }
        let mut i = 1;
        while i < m && colors[i] == k {
            colors[i] = 1;
            i += 1;
        }
        if i >= m {
            return false;
        }
        colors[i] += 1;
    }
}

/// Smallest `k` with [`oracle_colorable`].
pub fn oracle_chi(g: &Multigraph) -> usize {
    (0..)
        .find(|&k| oracle_colorable(g, k as u32))
        .expect("m colors suffice")
}
