//! Exact backtracking search for star edge-colorings.
//!
//! Components are solved independently. Within a component the edges are
//! ordered by breadth-first search from a vertex of maximum degree, so every
//! edge after the first touches an earlier one. Each four-edge structure is
//! checked once, at the position of its last edge in that order, which is
//! the moment it becomes fully colored. A new color may only be introduced
//! as `1 + (largest color used so far)`, which removes palette permutations
//! from the search without losing any solution class.

use super::{four_edge_structures, EdgeColoring};
use crate::multigraph::Multigraph;
use serde::Serialize;
use std::collections::VecDeque;

/// Upper bound on the star chromatic index of subcubic multigraphs.
pub const SUBCUBIC_BOUND: usize = 7;

struct Search {
    /// Edge ids (local to the component) in search order.
    order: Vec<usize>,
    /// For each position, earlier positions whose edge shares an endpoint.
    adjacent_before: Vec<Vec<usize>>,
    /// For each position, structures (as four positions in walk order) whose
    /// last position is this one.
    closing: Vec<Vec<[usize; 4]>>,
    colors: Vec<u16>,
    k: u16,
}

impl Search {
    fn new(g: &Multigraph) -> Search {
        let m = g.m();
        let order = bfs_edge_order(g);
        let mut pos = vec![0usize; m];
        for (p, &e) in order.iter().enumerate() {
            pos[e] = p;
        }
        let mut adjacent_before = vec![Vec::new(); m];
        for v in 0..g.n() {
            let inc = g.incident(v);
            for &(_, e1) in inc {
                for &(_, e2) in inc {
                    if pos[e2] < pos[e1] {
                        adjacent_before[pos[e1]].push(pos[e2]);
                    }
                }
            }
        }
        for list in &mut adjacent_before {
            list.sort_unstable();
            list.dedup();
        }
        let mut closing = vec![Vec::new(); m];
        for s in four_edge_structures(g) {
            let ps = s.edges.map(|e| pos[e]);
            let last = *ps.iter().max().expect("four edges");
            closing[last].push(ps);
        }
        Search {
            order,
            adjacent_before,
            closing,
            colors: vec![0; m],
            k: 0,
        }
    }

    fn allowed(&self, p: usize, c: u16) -> bool {
        if self.adjacent_before[p].iter().any(|&q| self.colors[q] == c) {
            return false;
        }
        // properness already holds, so c0 != c1 in every structure
        self.closing[p].iter().all(|s| {
            let col = |i: usize| if s[i] == p { c } else { self.colors[s[i]] };
            !(col(0) == col(2) && col(1) == col(3))
        })
    }

    fn extend(&mut self, p: usize, max_used: u16) -> bool {
        if p == self.order.len() {
            return true;
        }
        let top = self.k.min(max_used + 1);
        for c in 1..=top {
            if self.allowed(p, c) {
                self.colors[p] = c;
                if self.extend(p + 1, max_used.max(c)) {
                    return true;
                }
            }
        }
        self.colors[p] = 0;
        false
    }

    fn solve(&mut self, k: usize) -> Option<Vec<u32>> {
        self.k = k.min(u16::MAX as usize) as u16;
        self.colors.iter_mut().for_each(|c| *c = 0);
        if !self.extend(0, 0) {
            return None;
        }
        let mut by_edge = vec![0u32; self.order.len()];
        for (p, &e) in self.order.iter().enumerate() {
            by_edge[e] = self.colors[p] as u32;
        }
        Some(by_edge)
    }
}

fn bfs_edge_order(g: &Multigraph) -> Vec<usize> {
    let n = g.n();
    let mut order = Vec::with_capacity(g.m());
    if n == 0 {
        return order;
    }
    let mut placed = vec![false; g.m()];
    let mut seen = vec![false; n];
    let start = (0..n)
        .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        .unwrap();
    let mut roots = std::iter::once(start).chain(0..n);
    let mut queue = VecDeque::new();
    loop {
        if queue.is_empty() {
            match roots.find(|&r| !seen[r]) {
                Some(r) => {
                    seen[r] = true;
                    queue.push_back(r);
                }
                None => break,
            }
        }
        let u = queue.pop_front().expect("queue refilled above");
        for &(w, e) in g.incident(u) {
            if !placed[e] {
                placed[e] = true;
                order.push(e);
            }
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    order
}

/// A component as a standalone graph plus the map back to global edge ids.
fn nontrivial_components(g: &Multigraph) -> Vec<(Multigraph, Vec<usize>)> {
    g.components()
        .into_iter()
        .filter_map(|comp| {
            let (sub, _) = g.induced_subgraph(&comp);
            if sub.m() == 0 {
                return None;
            }
            let mut inside = vec![false; g.n()];
            comp.iter().for_each(|&v| inside[v] = true);
            let global: Vec<usize> = (0..g.m()).filter(|&e| inside[g.edges()[e].0]).collect();
            Some((sub, global))
        })
        .collect()
}

/// A star `k`-edge-coloring of `g` if one exists.
pub fn is_star_k_colorable(g: &Multigraph, k: usize) -> Option<EdgeColoring> {
    let mut colors = vec![0u32; g.m()];
    for (sub, global) in nontrivial_components(g) {
        let local = Search::new(&sub).solve(k)?;
        for (i, c) in local.into_iter().enumerate() {
            colors[global[i]] = c;
        }
    }
    Some(EdgeColoring::total(k as u32, &colors))
}

/// The star chromatic index with a certificate using colors `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarIndex {
    pub k: usize,
    pub certificate: EdgeColoring,
}

/// Minimal `k` together with a certificate. Components are deepened from
/// `max(Δ, 1)`; a component with `m` edges always succeeds by `k = m`.
pub fn star_chromatic_index(g: &Multigraph) -> StarIndex {
    star_chromatic_index_bounded(g, usize::MAX).expect("unbounded search always succeeds")
}

/// As [`star_chromatic_index`], giving up (with `None`) once `k` would
/// exceed `max_k`.
pub fn star_chromatic_index_bounded(g: &Multigraph, max_k: usize) -> Option<StarIndex> {
    let mut colors = vec![0u32; g.m()];
    let mut k_total = 0usize;
    for (sub, global) in nontrivial_components(g) {
        let mut search = Search::new(&sub);
        let mut k = sub.max_degree().max(1);
        let local = loop {
            if k > max_k {
                return None;
            }
            if let Some(found) = search.solve(k) {
                break found;
            }
            k += 1;
        };
        k_total = k_total.max(k);
        for (i, c) in local.into_iter().enumerate() {
            colors[global[i]] = c;
        }
    }
    Some(StarIndex {
        k: k_total,
        certificate: EdgeColoring::total(k_total as u32, &colors),
    })
}

/// Result of a criticality test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalityReport {
    pub k: usize,
    /// `χ'_s(G)`.
    pub chi: usize,
    /// `χ'_s(G - v)` for each vertex `v`.
    pub deletions: Vec<usize>,
    /// `chi > k` and every deletion is at most `k`.
    pub critical: bool,
}

/// Star `k`-criticality: `χ'_s(G) > k` but `χ'_s(G - v) <= k` for all `v`.
pub fn is_star_critical(g: &Multigraph, k: usize) -> CriticalityReport {
    let chi = star_chromatic_index(g).k;
    let deletions: Vec<usize> = (0..g.n())
        .map(|v| star_chromatic_index(&g.delete_vertex(v).expect("vertex in range")).k)
        .collect();
    let critical = chi > k && deletions.iter().all(|&d| d <= k);
    CriticalityReport {
        k,
        chi,
        deletions,
        critical,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use crate::starcolor::is_star_coloring;

    /// Plain enumeration of every coloring in `[k]^m`.
    fn brute_colorable(g: &Multigraph, k: u32) -> bool {
        let m = g.m();
        let mut colors = vec![1u32; m];
        loop {
            if is_star_coloring(g, &EdgeColoring::total(k, &colors)).unwrap() {
                return true;
            }
            let mut i = 0;
            while i < m && colors[i] == k {
                colors[i] = 1;
                i += 1;
            }
            if i == m {
                return false;
            }
            colors[i] += 1;
        }
    }

    #[test]
    fn c4_by_enumeration() {
        let g = named::cycle(4);
        assert!(!brute_colorable(&g, 2));
        assert!(brute_colorable(&g, 3));
        assert!(is_star_k_colorable(&g, 2).is_none());
        let cert = is_star_k_colorable(&g, 3).unwrap();
        assert!(is_star_coloring(&g, &cert).unwrap());
        assert_eq!(star_chromatic_index(&g).k, 3);
    }

    #[test]
    fn p5_by_enumeration() {
        let g = named::path(5);
        assert!(!brute_colorable(&g, 2));
        assert!(brute_colorable(&g, 3));
        assert_eq!(star_chromatic_index(&g).k, 3);
    }

    #[test]
    fn small_graphs_agree_with_enumeration() {
        for g in [
            named::complete(4),
            named::paw(),
            named::diamond(),
            named::star(3),
            named::cycle(5),
        ] {
            let chi = star_chromatic_index(&g).k;
            assert!(!brute_colorable(&g, chi as u32 - 1));
            assert!(brute_colorable(&g, chi as u32));
        }
    }

    #[test]
    fn k33_is_six() {
        let g = named::k33();
        assert!(is_star_k_colorable(&g, 5).is_none());
        let cert = is_star_k_colorable(&g, 6).unwrap();
        assert!(is_star_coloring(&g, &cert).unwrap());
        assert_eq!(star_chromatic_index(&g).k, 6);
    }

    #[test]
    fn edgeless_and_disconnected() {
        let r = star_chromatic_index(&Multigraph::edgeless(3));
        assert_eq!(r.k, 0);
        assert!(r.certificate.colors.is_empty());
        let g = named::k33().disjoint_union(&named::path(5));
        let r = star_chromatic_index(&g);
        assert_eq!(r.k, 6);
        assert!(is_star_coloring(&g, &r.certificate).unwrap());
        assert!(star_chromatic_index_bounded(&g, 5).is_none());
    }

    #[test]
    fn parallel_edges() {
        assert_eq!(star_chromatic_index(&named::fat_edge(3)).k, 3);
        assert_eq!(star_chromatic_index(&named::fat_edge(1)).k, 1);
    }

    #[test]
    fn criticality_small() {
        let r = is_star_critical(&named::path(2), 5);
        assert!(!r.critical);
        assert_eq!(r.chi, 1);
        let r = is_star_critical(&named::k33(), 5);
        assert_eq!(r.chi, 6);
        assert!(r.deletions.iter().all(|&d| d <= 5));
        assert!(r.critical);
    }
}
