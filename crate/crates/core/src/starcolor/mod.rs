//! Star edge-colorings: verification, exact star chromatic index, criticality.
//!
//! A star `k`-edge-coloring is a proper coloring of the edges with colors
//! `1..=k` in which no path or cycle with four edges is bicolored.
//!
//! Paths and cycles are vertex-simple: a path has five distinct vertices and a
//! cycle four. Between consecutive vertices any of the parallel edges may be
//! used, and each choice is a separate structure. Walks that reuse a vertex
//! through a parallel pair are not considered; such a walk would place two
//! edges of one parallel class next to each other, and properness already
//! gives those different colors.

mod solver;

pub use solver::{
    is_star_critical, is_star_k_colorable, star_chromatic_index, star_chromatic_index_bounded,
    CriticalityReport, StarIndex, SUBCUBIC_BOUND,
};

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use serde::Serialize;
use std::fmt;

/// Colors in `1..=k` on edge ids; `None` marks an uncolored edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeColoring {
    pub k: u32,
    pub colors: Vec<Option<u32>>,
}

impl EdgeColoring {
    /// An all-uncolored assignment for `m` edges.
    pub fn uncolored(k: u32, m: usize) -> Self {
        EdgeColoring {
            k,
            colors: vec![None; m],
        }
    }

    pub fn total(k: u32, colors: &[u32]) -> Self {
        EdgeColoring {
            k,
            colors: colors.iter().map(|&c| Some(c)).collect(),
        }
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    /// Number of distinct colors in use.
    pub fn used_colors(&self) -> usize {
        let mut seen: Vec<u32> = self.colors.iter().flatten().copied().collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    fn validate(&self, g: &Multigraph) -> Result<()> {
        if self.colors.len() != g.m() {
            return Err(Error::ColoringSize {
                len: self.colors.len(),
                m: g.m(),
            });
        }
        for (edge, c) in self.colors.iter().enumerate() {
            if let Some(color) = *c {
                if color == 0 || color > self.k {
                    return Err(Error::ColorOutOfRange {
                        edge,
                        color,
                        k: self.k,
                    });
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    Improper,
    BicoloredPath,
    BicoloredCycle,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::Improper => "improper",
            ViolationKind::BicoloredPath => "bicolored-path",
            ViolationKind::BicoloredCycle => "bicolored-cycle",
        })
    }
}

/// A witness that a coloring is not a star coloring.
///
/// `edges` has length 2 for [`ViolationKind::Improper`] and 4 otherwise, in
/// walk order. `vertices` is the walk: the shared endpoint for an improper
/// pair, five vertices for a path, four for a cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub edges: Vec<usize>,
    pub vertices: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize], sep: &str| {
            xs.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(sep)
        };
        write!(
            f,
            "{} edges [{}] vertices {}",
            self.kind,
            join(&self.edges, ", "),
            join(&self.vertices, "-")
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StructureKind {
    Path,
    Cycle,
}

/// A path with four edges or a 4-cycle, with one edge chosen per step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Structure {
    pub kind: StructureKind,
    /// Five vertices for a path, four for a cycle.
    pub vertices: Vec<usize>,
    /// Edge `i` joins `vertices[i]` and `vertices[(i + 1) % len]`.
    pub edges: [usize; 4],
}

fn push_edge_choices(
    g: &Multigraph,
    kind: StructureKind,
    walk: &[usize],
    out: &mut Vec<Structure>,
) {
    let steps: Vec<Vec<usize>> = (0..4)
        .map(|i| g.edges_between(walk[i], walk[(i + 1) % walk.len()]))
        .collect();
    for &a in &steps[0] {
        for &b in &steps[1] {
            for &c in &steps[2] {
                for &d in &steps[3] {
                    out.push(Structure {
                        kind,
                        vertices: walk.to_vec(),
                        edges: [a, b, c, d],
                    });
                }
            }
        }
    }
}

/// Every vertex-simple path with four edges and every 4-cycle, each listed
/// once per choice of parallel edges.
pub fn four_edge_structures(g: &Multigraph) -> Vec<Structure> {
    let n = g.n();
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v)).collect();
    let mut out = Vec::new();
    for v0 in 0..n {
        for &v1 in &nbrs[v0] {
            for &v2 in &nbrs[v1] {
                if v2 == v0 {
                    continue;
                }
                for &v3 in &nbrs[v2] {
                    if v3 == v1 || v3 == v0 {
                        continue;
                    }
                    // 4-cycle v0 v1 v2 v3, listed from its least vertex in one direction
                    if v0 < v1.min(v2).min(v3) && v1 < v3 && g.is_adjacent(v3, v0) {
                        push_edge_choices(g, StructureKind::Cycle, &[v0, v1, v2, v3], &mut out);
                    }
                    for &v4 in &nbrs[v3] {
                        if v4 == v2 || v4 == v1 || v4 == v0 || v4 < v0 {
                            continue;
                        }
                        push_edge_choices(g, StructureKind::Path, &[v0, v1, v2, v3, v4], &mut out);
                    }
                }
            }
        }
    }
    out
}

/// Where [`find_violation`] looks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    All,
    /// Only structures and adjacent pairs containing this edge.
    ThroughEdge(usize),
}

/// Finds an improper pair, a bicolored path with four edges or a bicolored
/// 4-cycle. Uncolored edges never take part in a violation.
pub fn find_violation(g: &Multigraph, c: &EdgeColoring, scope: Scope) -> Result<Option<Violation>> {
    c.validate(g)?;
    let focus = match scope {
        Scope::All => None,
        Scope::ThroughEdge(e) => {
            g.endpoints(e)?;
            Some(e)
        }
    };
    let wanted = |edges: &[usize]| focus.is_none_or(|e| edges.contains(&e));

    for v in 0..g.n() {
        let inc = g.incident(v);
        for (i, &(_, e1)) in inc.iter().enumerate() {
            for &(_, e2) in &inc[i + 1..] {
                if e1 == e2 || !wanted(&[e1, e2]) {
                    continue;
                }
                if let (Some(a), Some(b)) = (c.colors[e1], c.colors[e2]) {
                    if a == b {
                        return Ok(Some(Violation {
                            kind: ViolationKind::Improper,
                            edges: vec![e1.min(e2), e1.max(e2)],
                            vertices: vec![v],
                        }));
                    }
                }
            }
        }
    }

    for s in four_edge_structures(g) {
        if !wanted(&s.edges) {
            continue;
        }
        let cs: Option<Vec<u32>> = s.edges.iter().map(|&e| c.colors[e]).collect();
        let Some(cs) = cs else { continue };
        if cs[0] == cs[2] && cs[1] == cs[3] && cs[0] != cs[1] {
            return Ok(Some(Violation {
                kind: match s.kind {
                    StructureKind::Path => ViolationKind::BicoloredPath,
                    StructureKind::Cycle => ViolationKind::BicoloredCycle,
                },
                edges: s.edges.to_vec(),
                vertices: s.vertices,
            }));
        }
    }
    Ok(None)
}

/// True iff the total coloring `c` is a star coloring of `g`.
pub fn is_star_coloring(g: &Multigraph, c: &EdgeColoring) -> Result<bool> {
    c.validate(g)?;
    if let Some(e) = c.colors.iter().position(Option::is_none) {
        return Err(Error::PartialColoring(e));
    }
    Ok(find_violation(g, c, Scope::All)?.is_none())
}
