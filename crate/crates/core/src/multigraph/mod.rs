//! Loopless multigraphs with stable edge identities.
//!
//! Vertices are `0..n`. Edges are numbered `0..m` in insertion order, and
//! parallel edges are separate entries that share an endpoint pair. Every
//! coloring in this crate is a map on edge ids, so two parallel edges can be
//! given different colors.
//!
//! A [`Multigraph`] is immutable once built; operations such as
//! [`Multigraph::delete_vertex`] return a new graph.

mod canon;
mod io;

pub use canon::{canonical_form, canonical_form_with_limit, CanonicalForm, DEFAULT_CANON_LIMIT};
pub use io::{parse_edge_list, parse_graph, parse_graph6, to_edge_list, to_graph6};

use crate::error::{Error, Result};
use serde::ser::{Serialize, SerializeStruct, Serializer};
use std::collections::VecDeque;

/// Largest multiplicity [`Multigraph::new`] accepts between two vertices.
pub const MAX_MULTIPLICITY: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
}

impl Multigraph {
    /// Builds a multigraph on `n` vertices. Edge `i` of the result is
    /// `edges[i]`. Loops, out-of-range endpoints and multiplicities above
    /// [`MAX_MULTIPLICITY`] are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::build(n, edges, Some(MAX_MULTIPLICITY))
    }

    /// Like [`Multigraph::new`] but without the multiplicity cap.
    pub fn new_uncapped(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::build(n, edges, None)
    }

    fn build(n: usize, edges: &[(usize, usize)], cap: Option<usize>) -> Result<Self> {
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        let g = Multigraph {
            n,
            edges: edges.to_vec(),
            adj,
        };
        if let Some(cap) = cap {
            for u in 0..n {
                for v in g.neighbors(u) {
                    let multiplicity = g.multiplicity(u, v);
                    if u < v && multiplicity > cap {
                        return Err(Error::MultiplicityCap {
                            u,
                            v,
                            multiplicity,
                            cap,
                        });
                    }
                }
            }
        }
        Ok(g)
    }

    /// The graph with no vertices.
    pub fn empty() -> Self {
        Multigraph {
            n: 0,
            edges: Vec::new(),
            adj: Vec::new(),
        }
    }

    /// `n` isolated vertices.
    pub fn edgeless(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Endpoint pairs indexed by edge id.
    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> Result<(usize, usize)> {
        self.edges.get(e).copied().ok_or(Error::EdgeOutOfRange {
            edge: e,
            m: self.m(),
        })
    }

    /// `(neighbor, edge id)` pairs at `v`, one per incident edge.
    #[inline]
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    /// Degree counting multiplicity.
    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Distinct neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.adj[v].iter().map(|&(w, _)| w).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.adj[u].iter().filter(|&&(w, _)| w == v).count()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].iter().any(|&(w, _)| w == v)
    }

    /// Edge ids joining `u` and `v`, ascending.
    pub fn edges_between(&self, u: usize, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.adj[u]
            .iter()
            .filter(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .collect();
        out.sort_unstable();
        out
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    /// Errors with the first vertex of degree above 3.
    pub fn require_subcubic(&self) -> Result<()> {
        match (0..self.n).find(|&v| self.degree(v) > 3) {
            Some(vertex) => Err(Error::NotSubcubic {
                vertex,
                degree: self.degree(vertex),
            }),
            None => Ok(()),
        }
    }

    pub fn is_simple(&self) -> bool {
        (0..self.n).all(|v| self.neighbors(v).len() == self.degree(v))
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == 3)
    }

    /// Connected components as ascending vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &(w, _) in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced by `keep` (any order, duplicates ignored). Returns the
    /// graph and the map from new indices to old ones. Survivors keep their
    /// relative order and surviving edges keep their relative order.
    pub fn induced_subgraph(&self, keep: &[usize]) -> (Multigraph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n];
        let mut kept: Vec<usize> = keep.to_vec();
        kept.sort_unstable();
        kept.dedup();
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        let g = Multigraph::build(kept.len(), &edges, None).expect("induced subgraph is valid");
        (g, kept)
    }

    /// `G - v`: removes `v` and its incident edges. Survivors are re-indexed in
    /// ascending order.
    pub fn delete_vertex(&self, v: usize) -> Result<Multigraph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        Ok(self.induced_subgraph(&keep).0)
    }

    /// Removes every vertex in `drop`.
    pub fn delete_vertices(&self, drop: &[usize]) -> Multigraph {
        let keep: Vec<usize> = (0..self.n).filter(|u| !drop.contains(u)).collect();
        self.induced_subgraph(&keep).0
    }

    /// `G - e`; later edge ids shift down by one.
    pub fn delete_edge(&self, e: usize) -> Result<Multigraph> {
        self.endpoints(e)?;
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(id, _)| id != e)
            .map(|(_, &p)| p)
            .collect();
        Multigraph::build(self.n, &edges, None)
    }

    /// Adds one edge, returning the new graph. Multiplicity is not capped.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Multigraph> {
        let mut edges = self.edges.clone();
        edges.push((u, v));
        Multigraph::build(self.n, &edges, None)
    }

    /// Relabels vertex `v` as `perm[v]`. Edge ids are preserved.
    pub fn permute(&self, perm: &[usize]) -> Multigraph {
        assert_eq!(perm.len(), self.n, "permutation length");
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Multigraph::build(self.n, &edges, None).expect("permutation of a valid graph")
    }

    /// Disjoint union; `other`'s vertices follow `self`'s.
    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Multigraph::build(self.n + other.n, &edges, None).expect("union of valid graphs")
    }

    /// Symmetric matrix of edge multiplicities.
    pub fn multiplicity_matrix(&self) -> Vec<Vec<u8>> {
        let mut mat = vec![vec![0u8; self.n]; self.n];
        for &(u, v) in &self.edges {
            mat[u][v] += 1;
            mat[v][u] += 1;
        }
        mat
    }

    /// Builds a graph from a multiplicity matrix (upper triangle is read).
    pub fn from_matrix(mat: &[Vec<u8>]) -> Multigraph {
        let n = mat.len();
        let mut edges = Vec::new();
        for j in 1..n {
            for i in 0..j {
                for _ in 0..mat[i][j] {
                    edges.push((i, j));
                }
            }
        }
        Multigraph::build(n, &edges, None).expect("matrix graph is valid")
    }
}

impl Serialize for Multigraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Multigraph", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("edges", &self.edges)?;
        st.end()
    }
}
