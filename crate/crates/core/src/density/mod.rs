//! Maximum average degree and girth.
//!
//! `mad(G)` is the maximum of `2 e(H) / |H|` over all subgraphs `H`. For a
//! fixed vertex set `S`, adding edges never lowers `2 e / |S|`, so the maximum
//! is attained by an induced subgraph `G[S]` and both [`mad`] and
//! [`mad_brute`] maximize over nonempty vertex subsets only.
//!
//! [`mad`] decides threshold questions "is there a nonempty `S` with
//! `q * e(G[S]) > p * |S|`?" with a minimum cut in the usual projection
//! network (source to each edge with capacity `q`, edge to both endpoints
//! with infinite capacity, vertex to sink with capacity `p`). The maximum
//! closure value is `q m - maxflow`, and it is positive exactly when some `S`
//! beats density `p/q`. The optimum `e(S)/|S|` lies in the finite set
//! `{a/b : 0 <= a <= m, 1 <= b <= n}`, which is binary searched exactly.

mod flow;

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::rational::Rational;
use flow::{FlowNetwork, INF};
use serde::Serialize;

/// The value of `mad(G)` with a vertex set attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mad {
    pub value: Rational,
    /// Ascending vertex indices `S` with `2 e(G[S]) / |S| = value`.
    pub witness: Vec<usize>,
}

/// Largest `n` accepted by [`mad_brute`].
pub const BRUTE_LIMIT: usize = 20;

/// Number of edges with both endpoints in `set`.
pub fn induced_edges(g: &Multigraph, set: &[usize]) -> usize {
    let mut inside = vec![false; g.n()];
    for &v in set {
        inside[v] = true;
    }
    g.edges()
        .iter()
        .filter(|&&(u, v)| inside[u] && inside[v])
        .count()
}

/// `2 e(G[S]) / |S|` for a nonempty `S`.
pub fn average_degree_of(g: &Multigraph, set: &[usize]) -> Rational {
    Rational::new(2 * induced_edges(g, set) as i64, set.len() as i64)
}

/// Returns the vertex set of a subgraph with `q e(S) - p |S| > 0`, if any.
fn denser_than(g: &Multigraph, p: i64, q: i64) -> Option<Vec<usize>> {
    let n = g.n();
    let m = g.m();
    let source = n + m;
    let sink = source + 1;
    let mut net = FlowNetwork::new(n + m + 2);
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        let node = n + id;
        net.add_arc(source, node, q);
        net.add_arc(node, u, INF);
        net.add_arc(node, v, INF);
    }
    for v in 0..n {
        net.add_arc(v, sink, p);
    }
    let flow = net.max_flow(source, sink);
    if q * m as i64 - flow <= 0 {
        return None;
    }
    let side = net.source_side(source);
    Some((0..n).filter(|&v| side[v]).collect())
}

pub fn mad(g: &Multigraph) -> Result<Mad> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let m = g.m();
    let mut candidates: Vec<(i64, i64)> = Vec::with_capacity((m + 1) * n);
    for a in 0..=m as i64 {
        for b in 1..=n as i64 {
            candidates.push((a, b));
        }
    }
    candidates.sort_by(|&(a1, b1), &(a2, b2)| (a1 * b2).cmp(&(a2 * b1)));
    candidates.dedup_by(|&mut (a1, b1), &mut (a2, b2)| a1 * b2 == a2 * b1);

    // First candidate that nothing beats; everything before it is beaten.
    let (mut lo, mut hi) = (0usize, candidates.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        let (a, b) = candidates[mid];
        if denser_than(g, a, b).is_some() {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    let (a, b) = candidates[lo];
    let value = Rational::new(2 * a, b);
    let witness = if lo == 0 {
        vec![0]
    } else {
        let (pa, pb) = candidates[lo - 1];
        denser_than(g, pa, pb).expect("predecessor candidate is beaten")
    };
    debug_assert_eq!(average_degree_of(g, &witness), value);
    Ok(Mad { value, witness })
}

/// Exhaustive scan over all `2^n - 1` nonempty subsets.
pub fn mad_brute(g: &Multigraph) -> Result<Mad> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > BRUTE_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: BRUTE_LIMIT,
        });
    }
    let edge_masks: Vec<u32> = g
        .edges()
        .iter()
        .map(|&(u, v)| (1u32 << u) | (1u32 << v))
        .collect();
    // best as (edges, size), compared by cross-multiplication
    let mut best = (0usize, 1usize, 1u32);
    for mask in 1u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        let e = edge_masks.iter().filter(|&&em| em & mask == em).count();
        if e * best.1 > best.0 * size {
            best = (e, size, mask);
        }
    }
    let witness = (0..n).filter(|&v| best.2 >> v & 1 == 1).collect();
    Ok(Mad {
        value: Rational::new(2 * best.0 as i64, best.1 as i64),
        witness,
    })
}

/// Length of a shortest cycle; `None` for forests. Parallel edges form
/// 2-cycles.
pub fn girth(g: &Multigraph) -> Option<usize> {
    let n = g.n();
    if g.edges().iter().any(|&(u, v)| g.multiplicity(u, v) > 1) {
        return Some(2);
    }
    let mut best: Option<usize> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent_edge = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(w, e) in g.incident(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent_edge[w] = e;
                    queue.push_back(w);
                } else if parent_edge[u] != e {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// `2g / (g - 2)`, the planar upper bound on `mad` for girth `g`.
pub fn mad_girth_bound(girth: usize) -> Result<Rational> {
    if girth < 3 {
        return Err(Error::GirthTooSmall(girth));
    }
    Ok(Rational::new(2 * girth as i64, girth as i64 - 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn check(g: &Multigraph, expect: Rational) {
        let flow = mad(g).unwrap();
        let brute = mad_brute(g).unwrap();
        assert_eq!(flow.value, expect);
        assert_eq!(brute.value, expect);
        assert_eq!(average_degree_of(g, &flow.witness), expect);
        assert_eq!(average_degree_of(g, &brute.witness), expect);
    }

    #[test]
    fn known_values() {
        for n in 3..9 {
            check(&named::cycle(n), Rational::from_integer(2));
        }
        check(&named::complete(4), Rational::from_integer(3));
        check(&named::fat_edge(3), Rational::from_integer(3));
        check(&named::k33(), Rational::from_integer(3));
        check(&named::path(4), Rational::new(3, 2));
        check(&Multigraph::edgeless(1), Rational::zero());
        check(&Multigraph::edgeless(3), Rational::zero());
    }

    #[test]
    fn p4_oracle_by_hand() {
        // subsets of P4: best is the whole path, 2*3/4
        let g = named::path(4);
        let mut best = Rational::zero();
        for mask in 1u32..16 {
            let set: Vec<usize> = (0..4).filter(|v| mask >> v & 1 == 1).collect();
            best = best.max(average_degree_of(&g, &set));
        }
        assert_eq!(best, Rational::new(3, 2));
    }

    #[test]
    fn dense_part_wins() {
        // K4 with a long tail: the K4 is the densest part
        let mut edges: Vec<(usize, usize)> = named::complete(4).edges().to_vec();
        edges.extend([(3, 4), (4, 5), (5, 6)]);
        let g = Multigraph::new(7, &edges).unwrap();
        let r = mad(&g).unwrap();
        assert_eq!(r.value, Rational::from_integer(3));
        assert_eq!(r.witness, vec![0, 1, 2, 3]);
    }

    #[test]
    fn empty_and_guard() {
        assert_eq!(mad(&Multigraph::empty()), Err(Error::EmptyGraph));
        assert_eq!(mad_brute(&Multigraph::empty()), Err(Error::EmptyGraph));
        assert!(matches!(
            mad_brute(&named::path(21)),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn girth_values() {
        assert_eq!(girth(&named::cycle(5)), Some(5));
        assert_eq!(girth(&named::path(7)), None);
        assert_eq!(girth(&named::petersen()), Some(5));
        assert_eq!(girth(&named::q3()), Some(4));
        assert_eq!(girth(&named::complete(4)), Some(3));
        let g = Multigraph::new(4, &[(0, 1), (0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(girth(&g), Some(2));
    }

    #[test]
    fn girth_bound() {
        assert_eq!(mad_girth_bound(12).unwrap(), Rational::new(12, 5));
        assert_eq!(mad_girth_bound(3).unwrap(), Rational::from_integer(6));
        assert_eq!(mad_girth_bound(4).unwrap(), Rational::from_integer(4));
        assert_eq!(mad_girth_bound(2), Err(Error::GirthTooSmall(2)));
    }
}
