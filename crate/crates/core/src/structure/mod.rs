//! Vertex classes and the reduced graph `H`.
//!
//! Terminology, for a subcubic multigraph:
//!
//! - a `k`-vertex has degree `k`, and a `k`-neighbor is an adjacent
//!   `k`-vertex;
//! - a `3_k`-vertex is a 3-vertex incident to exactly `k` edges whose other
//!   end is a 2-vertex (parallel edges count separately);
//! - in `H`, a 2-vertex is *bad* when it has a 2-neighbor and *good*
//!   otherwise, and a `3_2`-vertex is *bad* when all of its 2-neighbors are
//!   bad.
//!
//! `H` is `G` with every 1-vertex removed, in one pass: vertices that become
//! 1-vertices after the removal stay.

mod cover;
mod lemmas;

pub use cover::{covers_cube, verify_cover, CubeCover};
pub use lemmas::{lemma_audit, LemmaAudit, PredicateResult, PredicateStatus};

use crate::error::Result;
use crate::multigraph::Multigraph;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TwoStatus {
    Good,
    Bad,
}

/// Classification of one vertex, relative to the graph it was computed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VertexProfile {
    pub degree: usize,
    /// `k` for a `3_k`-vertex.
    pub class3k: Option<usize>,
    /// Set for 2-vertices.
    pub two_status: Option<TwoStatus>,
    /// A `3_2`-vertex whose 2-neighbors are all bad.
    pub bad32: bool,
}

impl VertexProfile {
    pub fn is_bad_two(&self) -> bool {
        self.two_status == Some(TwoStatus::Bad)
    }

    pub fn is_3k(&self, k: usize) -> bool {
        self.class3k == Some(k)
    }
}

/// Numbers of vertices of degree 0 to 3.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassCounts {
    pub n0: usize,
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
}

/// Profiles every vertex of `g` (treating `g` itself as the graph in which
/// good and bad are judged) and counts degree classes.
pub fn classify(g: &Multigraph) -> Result<(Vec<VertexProfile>, ClassCounts)> {
    g.require_subcubic()?;
    let n = g.n();
    let deg = g.degrees();
    let mut counts = ClassCounts::default();
    for &d in &deg {
        match d {
            0 => counts.n0 += 1,
            1 => counts.n1 += 1,
            2 => counts.n2 += 1,
            _ => counts.n3 += 1,
        }
    }
    let two_status: Vec<Option<TwoStatus>> = (0..n)
        .map(|v| {
            (deg[v] == 2).then(|| {
                if g.neighbors(v).iter().any(|&w| deg[w] == 2) {
                    TwoStatus::Bad
                } else {
                    TwoStatus::Good
                }
            })
        })
        .collect();
    let profiles = (0..n)
        .map(|v| {
            let class3k =
                (deg[v] == 3).then(|| g.incident(v).iter().filter(|&&(w, _)| deg[w] == 2).count());
            let bad32 = class3k == Some(2)
                && g.neighbors(v)
                    .iter()
                    .filter(|&&w| deg[w] == 2)
                    .all(|&w| two_status[w] == Some(TwoStatus::Bad));
            VertexProfile {
                degree: deg[v],
                class3k,
                two_status: two_status[v],
                bad32,
            }
        })
        .collect();
    Ok((profiles, counts))
}

/// `H = G \ A_1`: deletes every vertex of degree 1. Returns `H` and, for each
/// vertex of `H`, its index in `G`.
pub fn strip_ones(g: &Multigraph) -> (Multigraph, Vec<usize>) {
    let keep: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) != 1).collect();
    g.induced_subgraph(&keep)
}

/// Whether `3 n_3 < 2 n_2 + 7 n_1`. With no isolated vertices this is
/// equivalent to `2 e(G) / |G| < 12/5`.
pub fn check_counting_inequality(g: &Multigraph) -> Result<bool> {
    let (_, c) = classify(g)?;
    Ok(3 * c.n3 < 2 * c.n2 + 7 * c.n1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::named;

    #[test]
    fn strip_small_graphs() {
        let (h, map) = strip_ones(&named::star(3));
        assert_eq!((h.n(), h.m()), (1, 0));
        assert_eq!(map, vec![0]);
        let (h, _) = strip_ones(&named::k33());
        assert_eq!(h, named::k33());
        let (h, map) = strip_ones(&named::path(3));
        assert_eq!((h.n(), h.m()), (1, 0));
        assert_eq!(map, vec![1]);
    }

    #[test]
    fn p4_interior_bad() {
        let (p, c) = classify(&named::path(4)).unwrap();
        assert_eq!(p[1].two_status, Some(TwoStatus::Bad));
        assert_eq!(p[2].two_status, Some(TwoStatus::Bad));
        assert_eq!(p[0].two_status, None);
        assert_eq!((c.n1, c.n2, c.n3), (2, 2, 0));
    }

    #[test]
    fn k4_all_30() {
        let (p, c) = classify(&named::complete(4)).unwrap();
        assert!(p.iter().all(|v| v.is_3k(0)));
        assert_eq!(c.n3, 4);
    }

    #[test]
    fn paw_center_is_32() {
        let (p, _) = classify(&named::paw()).unwrap();
        assert!(p[0].is_3k(2));
        // its 2-neighbors 1 and 2 are adjacent 2-vertices, hence bad
        assert!(p[1].is_bad_two() && p[2].is_bad_two());
        assert!(p[0].bad32);
    }

    #[test]
    fn diamond_two_vertices_good() {
        let (p, _) = classify(&named::diamond()).unwrap();
        assert_eq!(p[1].two_status, Some(TwoStatus::Good));
        assert!(p[0].is_3k(2) && !p[0].bad32);
    }

    #[test]
    fn parallel_edges_count_in_3k() {
        // 0 =2= 1, 0 - 2 - 3, 1 - 3 : vertex 0 has degree 3
        let g = Multigraph::new(4, &[(0, 1), (0, 1), (0, 2), (2, 3), (1, 3)]).unwrap();
        let (p, _) = classify(&g).unwrap();
        assert!(p[0].is_3k(1));
    }

    #[test]
    fn counting_inequality() {
        assert!(!check_counting_inequality(&named::complete(4)).unwrap());
        assert!(check_counting_inequality(&named::path(4)).unwrap());
        let g = Multigraph::new_uncapped(2, &[(0, 1); 4]).unwrap();
        assert!(matches!(classify(&g), Err(Error::NotSubcubic { .. })));
    }
}
