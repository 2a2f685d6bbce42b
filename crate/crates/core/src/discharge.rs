//! Discharging on the reduced graph `H`.
//!
//! Every vertex starts with charge `d_H(v) - 12/5`, so the total is
//! `2 e(H) - (12/5) |H|`, which is negative exactly when the average degree
//! of `H` is below `12/5`. Charge then moves along edges by four rules,
//! applied in order and all computed from the initial classification of `H`:
//!
//! - **R1** a bad `3_2`-vertex takes `1/5` from its `3_0`-neighbor;
//! - **R2** a `3_1`-vertex gives `3/5` to its 2-neighbor;
//! - **R3** a `3_2`-vertex gives `1/5` to each good and `2/5` to each bad
//!   2-neighbor;
//! - **R4** a `3_3`-vertex gives `1/5` to each 2-neighbor.
//!
//! Rules act once per distinct neighbor. When a bad `3_2`-vertex has several
//! `3_0`-neighbors it takes from the least one; with none, R1 does nothing.
//! Both cases, and vertices of degree below 2, are recorded as anomalies.
//!
//! The audit groups maximal runs of adjacent bad 2-vertices of length 2 or 3
//! into pools, judges each pool by its total and every other vertex on its
//! own, and lists all negative residuals.

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::rational::Rational;
use crate::structure::{classify, VertexProfile};
use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Transfer {
    pub rule: Rule,
    pub from: usize,
    pub to: usize,
    pub amount: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Anomaly {
    /// A vertex of degree 0 or 1; no rule touches it.
    LowDegree { vertex: usize, degree: usize },
    /// A bad `3_2`-vertex without a `3_0`-neighbor.
    R1Inapplicable { vertex: usize },
    /// A bad `3_2`-vertex with several `3_0`-neighbors; the least one donated.
    R1NonUnique { vertex: usize, donors: Vec<usize> },
}

impl fmt::Display for Anomaly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Anomaly::LowDegree { vertex, degree } => {
                write!(f, "low-degree vertex {vertex} (degree {degree})")
            }
            Anomaly::R1Inapplicable { vertex } => write!(f, "R1-inapplicable at {vertex}"),
            Anomaly::R1NonUnique { vertex, donors } => {
                write!(f, "R1-non-unique at {vertex}: donors {donors:?}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChargeLedger {
    pub initial: Vec<Rational>,
    /// In rule order, then by giving vertex.
    pub transfers: Vec<Transfer>,
    pub final_charges: Vec<Rational>,
    pub profiles: Vec<VertexProfile>,
    pub anomalies: Vec<Anomaly>,
}

fn fifths(k: i64) -> Rational {
    Rational::new(k, 5)
}

/// `d_H(v) - 12/5` for each vertex.
pub fn initial_charges(h: &Multigraph) -> Result<Vec<Rational>> {
    h.require_subcubic()?;
    Ok((0..h.n())
        .map(|v| Rational::new(5 * h.degree(v) as i64 - 12, 5))
        .collect())
}

pub fn apply_rules(h: &Multigraph) -> Result<ChargeLedger> {
    let initial = initial_charges(h)?;
    let (profiles, _) = classify(h)?;
    let n = h.n();
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| h.neighbors(v)).collect();
    let two_nbrs = |v: usize| -> Vec<usize> {
        nbrs[v]
            .iter()
            .copied()
            .filter(|&w| profiles[w].degree == 2)
            .collect()
    };

    let mut anomalies: Vec<Anomaly> = (0..n)
        .filter(|&v| h.degree(v) < 2)
        .map(|v| Anomaly::LowDegree {
            vertex: v,
            degree: h.degree(v),
        })
        .collect();
    let mut transfers = Vec::new();

    for v in (0..n).filter(|&v| profiles[v].bad32) {
        let donors: Vec<usize> = nbrs[v]
            .iter()
            .copied()
            .filter(|&w| profiles[w].is_3k(0))
            .collect();
        match donors.first() {
            None => anomalies.push(Anomaly::R1Inapplicable { vertex: v }),
            Some(&from) => {
                if donors.len() > 1 {
                    anomalies.push(Anomaly::R1NonUnique {
                        vertex: v,
                        donors: donors.clone(),
                    });
                }
                transfers.push(Transfer {
                    rule: Rule::R1,
                    from,
                    to: v,
                    amount: fifths(1),
                });
            }
        }
    }
    for v in (0..n).filter(|&v| profiles[v].is_3k(1)) {
        for to in two_nbrs(v) {
            transfers.push(Transfer {
                rule: Rule::R2,
                from: v,
                to,
                amount: fifths(3),
            });
        }
    }
    for v in (0..n).filter(|&v| profiles[v].is_3k(2)) {
        for to in two_nbrs(v) {
            let amount = if profiles[to].is_bad_two() {
                fifths(2)
            } else {
                fifths(1)
            };
            transfers.push(Transfer {
                rule: Rule::R3,
                from: v,
                to,
                amount,
            });
        }
    }
    for v in (0..n).filter(|&v| profiles[v].is_3k(3)) {
        for to in two_nbrs(v) {
            transfers.push(Transfer {
                rule: Rule::R4,
                from: v,
                to,
                amount: fifths(1),
            });
        }
    }

    let mut final_charges = initial.clone();
    for t in &transfers {
        final_charges[t.from] -= &t.amount;
        final_charges[t.to] += &t.amount;
    }
    Ok(ChargeLedger {
        initial,
        transfers,
        final_charges,
        profiles,
        anomalies,
    })
}

/// A group judged by its total final charge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Residual {
    pub vertices: Vec<usize>,
    pub total: Rational,
    pub pooled: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DischargeAudit {
    pub initial_total: Rational,
    pub final_total: Rational,
    /// `2 e(H) - (12/5) |H|`.
    pub expected_total: Rational,
    pub conserved: bool,
    /// Runs of bad 2-vertices of length 2 or 3, in path order.
    pub pools: Vec<Vec<usize>>,
    /// Components of bad 2-vertices that are longer runs or cycles.
    pub flagged_runs: Vec<Vec<usize>>,
    /// One entry per pool and per vertex outside every pool.
    pub residuals: Vec<Residual>,
    pub negative: Vec<Residual>,
    pub all_nonnegative: bool,
    /// The total charge is negative, i.e. `2 e(H) / |H| < 12/5`.
    pub total_negative: bool,
}

/// Components of the subgraph induced by bad 2-vertices, each as a walk
/// along the run when it is a path. Returns `(component, is_path)`.
fn bad_runs(h: &Multigraph, profiles: &[VertexProfile]) -> Vec<(Vec<usize>, bool)> {
    let n = h.n();
    let bad = |v: usize| profiles[v].is_bad_two();
    let inner =
        |v: usize| -> Vec<usize> { h.neighbors(v).into_iter().filter(|&w| bad(w)).collect() };
    let mut seen = vec![false; n];
    let mut runs = Vec::new();
    for s in (0..n).filter(|&v| bad(v)) {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            for w in inner(comp[i]) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        let inner_edges: usize = comp.iter().map(|&v| inner(v).len()).sum::<usize>() / 2;
        let is_path = inner_edges + 1 == comp.len();
        if is_path {
            let start = *comp
                .iter()
                .filter(|&&v| inner(v).len() <= 1)
                .min()
                .expect("a path has an end");
            let mut walk = vec![start];
            while walk.len() < comp.len() {
                let last = *walk.last().unwrap();
                let prev = (walk.len() >= 2).then(|| walk[walk.len() - 2]);
                let next = inner(last)
                    .into_iter()
                    .find(|&w| Some(w) != prev)
                    .expect("path continues");
                walk.push(next);
            }
            runs.push((walk, true));
        } else {
            comp.sort_unstable();
            runs.push((comp, false));
        }
    }
    runs
}

pub fn audit(h: &Multigraph, ledger: &ChargeLedger) -> Result<DischargeAudit> {
    let n = h.n();
    if ledger.initial.len() != n || ledger.final_charges.len() != n || ledger.profiles.len() != n {
        return Err(Error::LedgerMismatch(format!(
            "ledger covers {} vertices, graph has {n}",
            ledger.initial.len()
        )));
    }
    if ledger.initial != initial_charges(h)? {
        return Err(Error::LedgerMismatch("initial charges differ".into()));
    }
    if let Some(t) = ledger
        .transfers
        .iter()
        .find(|t| t.from >= n || t.to >= n || !h.is_adjacent(t.from, t.to))
    {
        return Err(Error::LedgerMismatch(format!(
            "{} transfer {} -> {} is not along an edge",
            t.rule, t.from, t.to
        )));
    }

    let initial_total: Rational = ledger.initial.iter().sum();
    let final_total: Rational = ledger.final_charges.iter().sum();
    let expected_total = Rational::new(10 * h.m() as i64 - 12 * n as i64, 5);
    let conserved = initial_total == final_total && final_total == expected_total;

    let mut pools = Vec::new();
    let mut flagged_runs = Vec::new();
    let mut in_pool = vec![false; n];
    for (run, is_path) in bad_runs(h, &ledger.profiles) {
        if is_path && (2..=3).contains(&run.len()) {
            run.iter().for_each(|&v| in_pool[v] = true);
            pools.push(run);
        } else {
            flagged_runs.push(run);
        }
    }

    let mut residuals: Vec<Residual> = pools
        .iter()
        .map(|p| Residual {
            vertices: p.clone(),
            total: p.iter().map(|&v| &ledger.final_charges[v]).sum(),
            pooled: true,
        })
        .collect();
    residuals.extend((0..n).filter(|&v| !in_pool[v]).map(|v| Residual {
        vertices: vec![v],
        total: ledger.final_charges[v].clone(),
        pooled: false,
    }));
    residuals.sort_by(|a, b| a.vertices[0].cmp(&b.vertices[0]));
    let negative: Vec<Residual> = residuals
        .iter()
        .filter(|r| r.total.is_negative())
        .cloned()
        .collect();

    Ok(DischargeAudit {
        all_nonnegative: negative.is_empty(),
        total_negative: final_total.is_negative(),
        initial_total,
        final_total,
        expected_total,
        conserved,
        pools,
        flagged_runs,
        residuals,
        negative,
    })
}
