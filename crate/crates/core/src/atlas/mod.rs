//! Small-graph atlas: isomorph-free enumeration of subcubic multigraphs,
//! checked sweeps over the enumerated universe, and critical-graph search.
//!
//! Connected graphs are grown one vertex at a time. Every connected graph on
//! `n + 1` vertices has a vertex whose removal leaves it connected (a leaf of
//! any spanning tree), so attaching a new vertex by one to three edges to
//! every connected graph on `n` vertices reaches every class; duplicates are
//! removed by canonical form. Disconnected graphs are multisets of connected
//! ones.

mod cache;
mod sweep;

pub use cache::{CacheEntry, CacheStats, ResultCache, CACHE_HEADER};
pub use sweep::{sweep, Check, CheckOutcome, SweepConfig, SweepOutcome, SweepRecord, SweepSummary};

use crate::discharge::{self, DischargeAudit};
use crate::error::{Error, Result};
use crate::multigraph::{canonical_form, CanonicalForm, Multigraph};
use crate::starcolor::{is_star_critical, star_chromatic_index_bounded, CriticalityReport};
use crate::structure::{lemma_audit, strip_ones, LemmaAudit};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

pub const SIMPLE_LIMIT: usize = 12;
pub const MULTI_LIMIT: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Simple,
    Multi,
}

impl Mode {
    pub fn limit(self) -> usize {
        match self {
            Mode::Simple => SIMPLE_LIMIT,
            Mode::Multi => MULTI_LIMIT,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Simple => "simple",
            Mode::Multi => "multi",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "simple" => Ok(Mode::Simple),
            "multi" | "multigraph" => Ok(Mode::Multi),
            other => Err(Error::Parse {
                line: 0,
                msg: format!("unknown mode '{other}' (expected simple or multi)"),
            }),
        }
    }
}

fn check_guard(max_n: usize, mode: Mode) -> Result<()> {
    if max_n > mode.limit() {
        return Err(Error::TooLarge {
            n: max_n,
            limit: mode.limit(),
        });
    }
    Ok(())
}

/// All ways to attach a new vertex: vectors `a` with `a[w] <= spare[w]`,
/// total between 1 and 3, and entries at most 1 in simple mode.
fn attachments(spare: &[usize], mode: Mode) -> Vec<Vec<usize>> {
    let cap = match mode {
        Mode::Simple => 1,
        Mode::Multi => 3,
    };
    let mut out = Vec::new();
    let mut cur = vec![0usize; spare.len()];
    fn rec(
        i: usize,
        left: usize,
        spare: &[usize],
        cap: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == spare.len() {
            if left < 3 {
                out.push(cur.clone());
            }
            return;
        }
        for a in 0..=spare[i].min(cap).min(left) {
            cur[i] = a;
            rec(i + 1, left - a, spare, cap, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, 3, spare, cap, &mut cur, &mut out);
    out
}

fn children(g: &Multigraph, mode: Mode) -> BTreeSet<CanonicalForm> {
    let n = g.n();
    let spare: Vec<usize> = g
        .degrees()
        .iter()
        .map(|&d| 3usize.saturating_sub(d))
        .collect();
    let mut forms = BTreeSet::new();
    for a in attachments(&spare, mode) {
        let mut edges = g.edges().to_vec();
        for (w, &k) in a.iter().enumerate() {
            edges.extend(std::iter::repeat_n((w, n), k));
        }
        let child = Multigraph::new(n + 1, &edges).expect("attachment respects degree bounds");
        forms.insert(canonical_form(&child).expect("within canonical-form limit"));
    }
    forms
}

/// Canonical forms of the connected graphs, indexed by vertex count
/// (`levels[0]` is empty).
fn connected_levels(max_n: usize, mode: Mode) -> Vec<Vec<CanonicalForm>> {
    let mut levels: Vec<Vec<CanonicalForm>> = vec![Vec::new()];
    if max_n == 0 {
        return levels;
    }
    levels.push(vec![canonical_form(&Multigraph::edgeless(1)).expect("tiny")]);
    for _ in 2..=max_n {
        let next: BTreeSet<CanonicalForm> = levels
            .last()
            .expect("nonempty")
            .par_iter()
            .map(|f| children(&f.to_graph(), mode))
            .reduce(BTreeSet::new, |mut a, b| {
                a.extend(b);
                a
            });
        levels.push(next.into_iter().collect());
    }
    levels
}

/// Multisets of connected graphs with total order exactly `total`, each
/// listed as non-increasing `(order, index)` pairs.
fn component_multisets(levels: &[Vec<CanonicalForm>], total: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(
        levels: &[Vec<CanonicalForm>],
        left: usize,
        bound: (usize, usize),
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for size in (1..=left.min(bound.0)).rev() {
            let top = if size == bound.0 {
                bound.1 + 1
            } else {
                levels[size].len()
            };
            for idx in 0..top.min(levels[size].len()) {
                cur.push((size, idx));
                rec(levels, left - size, (size, idx), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(
        levels,
        total,
        (total, usize::MAX - 1),
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// Canonical forms of every class, sorted by vertex count and then by form.
pub fn enumerate_forms(max_n: usize, mode: Mode, connected: bool) -> Result<Vec<CanonicalForm>> {
    check_guard(max_n, mode)?;
    let levels = connected_levels(max_n, mode);
    if connected {
        return Ok(levels.into_iter().flatten().collect());
    }
    let mut all = Vec::new();
    for total in 1..=max_n {
        let mut forms: Vec<CanonicalForm> = component_multisets(&levels, total)
            .into_par_iter()
            .map(|parts| {
                let g = parts.iter().fold(Multigraph::edgeless(0), |acc, &(s, i)| {
                    acc.disjoint_union(&levels[s][i].to_graph())
                });
                canonical_form(&g).expect("within canonical-form limit")
            })
            .collect();
        forms.sort_unstable();
        all.extend(forms);
    }
    Ok(all)
}

/// One representative per isomorphism class of loopless graphs with maximum
/// degree at most 3 and `1 <= n <= max_n`, connected if requested. Simple
/// mode forbids parallel edges; multigraph mode allows multiplicity up to 3.
/// Representatives are in canonical labeling.
pub fn enumerate(max_n: usize, mode: Mode, connected: bool) -> Result<Vec<Multigraph>> {
    Ok(enumerate_forms(max_n, mode, connected)?
        .iter()
        .map(CanonicalForm::to_graph)
        .collect())
}

/// A star `k`-critical graph with its structural audits. The discharge audit
/// is run on `H`, the graph with its 1-vertices removed.
#[derive(Clone, Debug, Serialize)]
pub struct CriticalGraph {
    pub form: CanonicalForm,
    pub graph: Multigraph,
    pub report: CriticalityReport,
    pub lemmas: LemmaAudit,
    pub discharge: DischargeAudit,
}

/// All connected enumerated graphs that are star `k`-critical. Critical
/// graphs without isolated vertices are always connected.
pub fn find_critical(max_n: usize, mode: Mode, k: usize) -> Result<Vec<CriticalGraph>> {
    let forms = enumerate_forms(max_n, mode, true)?;
    let found: Vec<Option<CriticalGraph>> = forms
        .into_par_iter()
        .map(|form| -> Result<Option<CriticalGraph>> {
            let graph = form.to_graph();
            if star_chromatic_index_bounded(&graph, k).is_some() {
                return Ok(None);
            }
            let report = is_star_critical(&graph, k);
            if !report.critical {
                return Ok(None);
            }
            let lemmas = lemma_audit(&graph)?;
            let (h, _) = strip_ones(&graph);
            let ledger = discharge::apply_rules(&h)?;
            let discharge = discharge::audit(&h, &ledger)?;
            Ok(Some(CriticalGraph {
                form,
                graph,
                report,
                lemmas,
                discharge,
            }))
        })
        .collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn count_n(max_n: usize, mode: Mode, connected: bool, n: usize) -> usize {
        enumerate_forms(max_n, mode, connected)
            .unwrap()
            .iter()
            .filter(|f| f.n() == n)
            .count()
    }

    #[test]
    fn small_connected_counts() {
        assert_eq!(enumerate(2, Mode::Simple, true).unwrap().len(), 2);
        assert_eq!(count_n(4, Mode::Simple, true, 3), 2);
        assert_eq!(count_n(4, Mode::Simple, true, 4), 6);
        assert_eq!(count_n(2, Mode::Multi, true, 2), 3);
    }

    #[test]
    fn four_vertex_classes() {
        let forms: BTreeSet<CanonicalForm> = enumerate_forms(4, Mode::Simple, true)
            .unwrap()
            .into_iter()
            .filter(|f| f.n() == 4)
            .collect();
        let expected: BTreeSet<CanonicalForm> = [
            named::path(4),
            named::star(3),
            named::cycle(4),
            named::paw(),
            named::diamond(),
            named::complete(4),
        ]
        .iter()
        .map(|g| canonical_form(g).unwrap())
        .collect();
        assert_eq!(forms, expected);
    }

    #[test]
    fn disconnected_small() {
        // n = 1: K1; n = 2: 2K1, K2; n = 3: 3K1, K2+K1, P3, K3
        let forms = enumerate_forms(3, Mode::Simple, false).unwrap();
        assert_eq!(forms.len(), 1 + 2 + 4);
        // multi n = 2: 2K1 plus three edge multiplicities
        assert_eq!(count_n(2, Mode::Multi, false, 2), 4);
    }

    #[test]
    fn sorted_and_distinct() {
        let forms = enumerate_forms(6, Mode::Multi, true).unwrap();
        assert!(forms.windows(2).all(|w| w[0] < w[1]));
        let graphs = enumerate(6, Mode::Multi, true).unwrap();
        assert!(graphs.iter().all(|g| g.is_connected() && g.is_subcubic()));
    }

    #[test]
    fn guards() {
        assert!(matches!(
            enumerate_forms(13, Mode::Simple, true),
            Err(Error::TooLarge { n: 13, limit: 12 })
        ));
        assert!(matches!(
            enumerate_forms(10, Mode::Multi, true),
            Err(Error::TooLarge { n: 10, limit: 9 })
        ));
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("multi".parse::<Mode>().unwrap(), Mode::Multi);
        assert_eq!(Mode::Simple.to_string(), "simple");
        assert!("dense".parse::<Mode>().is_err());
    }

    #[test]
    fn trivial_criticality() {
        assert!(find_critical(2, Mode::Simple, 1).unwrap().is_empty());
        assert!(find_critical(1, Mode::Simple, 0).unwrap().is_empty());
    }

    #[test]
    fn k33_is_found_as_critical() {
        let k33 = canonical_form(&named::k33()).unwrap();
        let found = find_critical(6, Mode::Simple, 5).unwrap();
        let hit = found
            .iter()
            .find(|c| c.form == k33)
            .expect("K33 is critical");
        assert_eq!(hit.report.chi, 6);
        assert!(hit.lemmas.all_pass());
    }
}
