//! Canonical forms by exhaustive permutation minimization.
//!
//! The form of a graph on `n` vertices is `n` followed by the upper triangle
//! of its multiplicity matrix read column by column (`(0,1), (0,2), (1,2),
//! (0,3), ...`), minimized over all vertex orders that respect an
//! isomorphism-invariant ordered partition of the vertices.
//!
//! The partition comes from iterated degree refinement: a vertex's class is
//! refined by the multiset of `(class, multiplicity)` pairs of its neighbors
//! until the number of classes stops growing. Classes are numbered by sorting
//! their signatures, so isomorphic graphs get the same ordered partition and
//! therefore the same set of admissible matrices. Since the matrix determines
//! the graph, equal forms imply isomorphic graphs.
//!
//! The search extends vertex orders one position at a time and keeps only the
//! prefixes whose newest column is lexicographically smallest. A candidate is
//! skipped when a smaller unplaced twin (a vertex with the same row outside
//! the pair) exists, since swapping twins is an automorphism.

use super::Multigraph;
use crate::error::{Error, Result};
use serde::{Serialize, Serializer};
use std::fmt;

/// Default size guard for [`canonical_form`].
pub const DEFAULT_CANON_LIMIT: usize = 12;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Number of vertices of the graph the form describes.
    pub fn n(&self) -> usize {
        self.0[0] as usize
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Option<CanonicalForm> {
        if !s.len().is_multiple_of(2) || s.is_empty() {
            return None;
        }
        let bytes: Option<Vec<u8>> = (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(s.get(i..i + 2)?, 16).ok())
            .collect();
        let bytes = bytes?;
        let n = bytes[0] as usize;
        (bytes.len() == 1 + n * n.saturating_sub(1) / 2).then_some(CanonicalForm(bytes))
    }

    /// The canonical representative described by this form.
    pub fn to_graph(&self) -> Multigraph {
        let n = self.n();
        let mut mat = vec![vec![0u8; n]; n];
        let mut it = self.0[1..].iter();
        for j in 1..n {
            for i in 0..j {
                let x = *it.next().expect("form length checked at construction");
                mat[i][j] = x;
                mat[j][i] = x;
            }
        }
        Multigraph::from_matrix(&mat)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

pub fn canonical_form(g: &Multigraph) -> Result<CanonicalForm> {
    canonical_form_with_limit(g, DEFAULT_CANON_LIMIT)
}

pub fn canonical_form_with_limit(g: &Multigraph, limit: usize) -> Result<CanonicalForm> {
    let n = g.n();
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    let mat = g.multiplicity_matrix();
    let order = minimal_order(&mat);
    let mut bytes = Vec::with_capacity(1 + n * n.saturating_sub(1) / 2);
    bytes.push(n as u8);
    for j in 1..n {
        for i in 0..j {
            bytes.push(mat[order[i]][order[j]]);
        }
    }
    Ok(CanonicalForm(bytes))
}

/// Ordered partition classes after degree refinement, as one class id per vertex.
fn refined_classes(mat: &[Vec<u8>]) -> Vec<usize> {
    let n = mat.len();
    let relabel = |sigs: &[Vec<(usize, u8)>]| -> Vec<usize> {
        let mut distinct: Vec<&Vec<(usize, u8)>> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        sigs.iter()
            .map(|s| distinct.binary_search(&s).expect("present"))
            .collect()
    };

    let initial: Vec<Vec<(usize, u8)>> = (0..n)
        .map(|v| {
            let degree: usize = mat[v].iter().map(|&x| x as usize).sum();
            let mut sig = vec![(degree, 0u8)];
            let mut mults: Vec<u8> = mat[v].iter().copied().filter(|&x| x > 0).collect();
            mults.sort_unstable();
            sig.extend(mults.into_iter().map(|x| (0, x)));
            sig
        })
        .collect();
    let mut class = relabel(&initial);
    let mut count = class.iter().max().map_or(0, |c| c + 1);
    loop {
        let sigs: Vec<Vec<(usize, u8)>> = (0..n)
            .map(|v| {
                let mut sig: Vec<(usize, u8)> = (0..n)
                    .filter(|&w| mat[v][w] > 0)
                    .map(|w| (class[w], mat[v][w]))
                    .collect();
                sig.sort_unstable();
                sig.insert(0, (class[v], 0));
                sig
            })
            .collect();
        let next = relabel(&sigs);
        let next_count = next.iter().max().map_or(0, |c| c + 1);
        class = next;
        if next_count == count {
            return class;
        }
        count = next_count;
    }
}

fn minimal_order(mat: &[Vec<u8>]) -> Vec<usize> {
    let n = mat.len();
    if n == 0 {
        return Vec::new();
    }
    let class = refined_classes(mat);
    // class of each position
    let mut position_class: Vec<usize> = class.clone();
    position_class.sort_unstable();

    let twins = |u: usize, v: usize| (0..n).all(|w| w == u || w == v || mat[u][w] == mat[v][w]);

    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    for pos in 0..n {
        let want = position_class[pos];
        let mut best_segment: Option<Vec<u8>> = None;
        let mut next: Vec<Vec<usize>> = Vec::new();
        for prefix in &frontier {
            let mut placed = vec![false; n];
            for &v in prefix {
                placed[v] = true;
            }
            let candidates: Vec<usize> =
                (0..n).filter(|&v| !placed[v] && class[v] == want).collect();
            for (ci, &v) in candidates.iter().enumerate() {
                if candidates[..ci].iter().any(|&u| twins(u, v)) {
                    continue;
                }
                let segment: Vec<u8> = prefix.iter().map(|&u| mat[u][v]).collect();
                match &best_segment {
                    Some(best) if segment > *best => continue,
                    Some(best) if segment == *best => {}
                    _ => {
                        best_segment = Some(segment);
                        next.clear();
                    }
                }
                let mut extended = prefix.clone();
                extended.push(v);
                next.push(extended);
            }
        }
        frontier = next;
    }
    frontier.swap_remove(0)
}
