//! Covering maps onto the 3-cube.
//!
//! `G` covers `H` through `f: V(G) -> V(H)` when every edge maps to an edge
//! and, at every vertex `u`, `f` restricted to `N_G(u)` is a bijection onto
//! `N_H(f(u))`.

use crate::multigraph::Multigraph;
use crate::named;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", content = "detail", rename_all = "kebab-case")]
pub enum CubeCover {
    /// `mapping[v]` is the cube vertex (a 3-bit word) of `v`.
    Cover(Vec<usize>),
    NoCover,
    /// The input is not simple, connected and cubic.
    NotApplicable(String),
}

impl CubeCover {
    pub fn mapping(&self) -> Option<&[usize]> {
        match self {
            CubeCover::Cover(f) => Some(f),
            _ => None,
        }
    }
}

/// Checks both covering conditions for `f: V(g) -> V(h)` directly.
pub fn verify_cover(g: &Multigraph, h: &Multigraph, f: &[usize]) -> bool {
    if f.len() != g.n() || f.iter().any(|&x| x >= h.n()) {
        return false;
    }
    if !g.edges().iter().all(|&(u, v)| h.is_adjacent(f[u], f[v])) {
        return false;
    }
    (0..g.n()).all(|u| {
        let mut image: Vec<usize> = g.neighbors(u).iter().map(|&w| f[w]).collect();
        image.sort_unstable();
        let before = image.len();
        image.dedup();
        image.len() == before && image == h.neighbors(f[u])
    })
}

struct CoverSearch<'a> {
    nbrs: Vec<Vec<usize>>,
    order: &'a [usize],
    image: Vec<Option<usize>>,
}

const PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

impl CoverSearch<'_> {
    fn extend(&mut self, idx: usize) -> bool {
        let Some(&u) = self.order.get(idx) else {
            return true;
        };
        let fu = self.image[u].expect("vertices are visited after one of their neighbors");
        let targets = [fu ^ 1, fu ^ 2, fu ^ 4];
        let nu = self.nbrs[u].clone();
        for perm in PERMS {
            let consistent = (0..3).all(|i| {
                let t = targets[perm[i]];
                match self.image[nu[i]] {
                    Some(x) => x == t,
                    None => true,
                }
            });
            if !consistent {
                continue;
            }
            let fresh: Vec<usize> = (0..3).filter(|&i| self.image[nu[i]].is_none()).collect();
            for &i in &fresh {
                self.image[nu[i]] = Some(targets[perm[i]]);
            }
            if self.extend(idx + 1) {
                return true;
            }
            for &i in &fresh {
                self.image[nu[i]] = None;
            }
        }
        false
    }
}

/// Searches for a covering map from `g` onto `Q_3`. Each vertex's
/// neighborhood is matched bijectively onto the cube neighborhood of its
/// image, processing vertices in BFS order from vertex 0.
pub fn covers_cube(g: &Multigraph) -> CubeCover {
    if g.n() == 0 || !g.is_simple() || !g.is_cubic() || !g.is_connected() {
        return CubeCover::NotApplicable("requires a simple, connected, cubic graph".into());
    }
    let n = g.n();
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v)).collect();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &w in &nbrs[u] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    let cube = named::q3();
    for start in 0..8 {
        let mut search = CoverSearch {
            nbrs: nbrs.clone(),
            order: &order,
            image: vec![None; n],
        };
        search.image[0] = Some(start);
        if search.extend(0) {
            let f: Vec<usize> = search
                .image
                .into_iter()
                .map(|x| x.expect("connected"))
                .collect();
            debug_assert!(verify_cover(g, &cube, &f));
            return CubeCover::Cover(f);
        }
    }
    CubeCover::NoCover
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_covers_itself() {
        let q3 = named::q3();
        let f = covers_cube(&q3);
        let f = f.mapping().unwrap();
        assert!(verify_cover(&q3, &q3, f));
        assert!(verify_cover(&q3, &q3, &(0..8).collect::<Vec<_>>()));
    }

    /// Exhaustive check over all 8^n vertex maps.
    fn any_cover_brute(g: &Multigraph) -> bool {
        let q3 = named::q3();
        let n = g.n();
        let mut f = vec![0usize; n];
        loop {
            if verify_cover(g, &q3, &f) {
                return true;
            }
            let mut i = 0;
            while i < n && f[i] == 7 {
                f[i] = 0;
                i += 1;
            }
            if i == n {
                return false;
            }
            f[i] += 1;
        }
    }

    #[test]
    fn k4_and_k33_do_not_cover() {
        for g in [named::complete(4), named::k33()] {
            assert!(!any_cover_brute(&g));
            assert_eq!(covers_cube(&g), CubeCover::NoCover);
        }
    }

    #[test]
    fn double_cover_of_cube() {
        // Two copies of Q3 with the bit-0 edges at 2-3 and 6-7 crossed between
        // the copies. Projection onto the first coordinate is a cover.
        let mut edges = Vec::new();
        for s in 0..2 {
            for u in 0..8usize {
                for bit in 0..3 {
                    let w = u ^ (1 << bit);
                    if u < w {
                        let t = if bit == 0 && u & 2 != 0 { 1 - s } else { s };
                        edges.push((u + 8 * s, w + 8 * t));
                    }
                }
            }
        }
        let g = Multigraph::new(16, &edges).unwrap();
        assert!(g.is_cubic() && g.is_connected());
        let f = covers_cube(&g);
        assert!(verify_cover(&g, &named::q3(), f.mapping().unwrap()));
    }

    #[test]
    fn not_applicable() {
        assert!(matches!(
            covers_cube(&named::path(3)),
            CubeCover::NotApplicable(_)
        ));
        assert!(matches!(
            covers_cube(&named::fat_edge(3)),
            CubeCover::NotApplicable(_)
        ));
        let two = named::q3().disjoint_union(&named::q3());
        assert!(matches!(covers_cube(&two), CubeCover::NotApplicable(_)));
    }
}
