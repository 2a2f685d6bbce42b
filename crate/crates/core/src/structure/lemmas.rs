//! Executable forms of the structural properties of star 5-critical subcubic
//! multigraphs.
//!
//! Every predicate is a total function on subcubic multigraphs. On a star
//! 5-critical graph all of them are expected to pass; on other graphs they
//! simply report what they see. Each predicate counts its instances (the
//! configurations its hypothesis matches) and reports the first failing
//! instance as a witness. Clauses whose hypothesis mentions an auxiliary
//! vertex that does not exist (for example "the other neighbor" of a vertex
//! joined to `y` by a parallel pair) have no instance there.
//!
//! `N(v)` is the set of distinct neighbors, `d(v)` the degree with
//! multiplicity, and `N[v] = N(v) + v`. Witness vertices are indices of `G`.

use super::{classify, strip_ones, VertexProfile};
use crate::error::Result;
use crate::multigraph::Multigraph;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PredicateStatus {
    Pass,
    /// No configuration matched the hypothesis.
    Vacuous,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredicateResult {
    pub id: &'static str,
    pub statement: &'static str,
    pub status: PredicateStatus,
    pub instances: usize,
    /// The first failing configuration, as vertices of `G`.
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaAudit {
    pub predicates: Vec<PredicateResult>,
}

impl LemmaAudit {
    pub fn all_pass(&self) -> bool {
        self.predicates
            .iter()
            .all(|p| p.status != PredicateStatus::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PredicateResult> {
        self.predicates
            .iter()
            .filter(|p| p.status == PredicateStatus::Fail)
    }

    pub fn get(&self, id: &str) -> Option<&PredicateResult> {
        self.predicates.iter().find(|p| p.id == id)
    }
}

struct Tally {
    id: &'static str,
    statement: &'static str,
    instances: usize,
    witness: Option<Vec<usize>>,
}

impl Tally {
    fn new(id: &'static str, statement: &'static str) -> Self {
        Tally {
            id,
            statement,
            instances: 0,
            witness: None,
        }
    }

    fn record(&mut self, holds: bool, witness: impl FnOnce() -> Vec<usize>) {
        self.instances += 1;
        if !holds && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    fn finish(self) -> PredicateResult {
        let status = if self.witness.is_some() {
            PredicateStatus::Fail
        } else if self.instances == 0 {
            PredicateStatus::Vacuous
        } else {
            PredicateStatus::Pass
        };
        PredicateResult {
            id: self.id,
            statement: self.statement,
            status,
            instances: self.instances,
            witness: self.witness,
        }
    }
}

/// Neighborhood view of a graph with precomputed distinct-neighbor sets.
struct View<'a> {
    g: &'a Multigraph,
    nbrs: Vec<Vec<usize>>,
}

impl<'a> View<'a> {
    fn new(g: &'a Multigraph) -> Self {
        View {
            g,
            nbrs: (0..g.n()).map(|v| g.neighbors(v)).collect(),
        }
    }
    fn d(&self, v: usize) -> usize {
        self.g.degree(v)
    }
    fn n_count(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }
    fn adj(&self, u: usize, v: usize) -> bool {
        self.nbrs[u].binary_search(&v).is_ok()
    }
    /// `N(v) - {skip}` when that leaves exactly one vertex.
    fn other_neighbor(&self, v: usize, skip: usize) -> Option<usize> {
        let rest: Vec<usize> = self.nbrs[v]
            .iter()
            .copied()
            .filter(|&w| w != skip)
            .collect();
        (rest.len() == 1).then(|| rest[0])
    }
    fn closed(&self, v: usize) -> Vec<usize> {
        let mut out = self.nbrs[v].clone();
        out.push(v);
        out.sort_unstable();
        out
    }
}

fn audit_degree_one(g: &View) -> Vec<PredicateResult> {
    let mut a = Tally::new("L-deg1(a)", "for a 1-vertex x with N(x) = {y}: |N(y)| = 3");
    let mut b = Tally::new(
        "L-deg1(b)",
        "N(y) is independent, d(y1) = 3 and d(y2) >= 2, where N(y) = {x, y1, y2} with d(y1) >= d(y2)",
    );
    let mut c = Tally::new(
        "L-deg1(c)",
        "if d(y2) = 2: |N(v)| >= 2 for v in N(yi) - y, |N(y1)| = 3, |N(y2)| = 2, N[y1] & N[y2] = {y}",
    );
    let mut d = Tally::new(
        "L-deg1(d)",
        "if d(y2) = 2: d(w1) = 3 for the other neighbor w1 of y2",
    );
    let mut e = Tally::new(
        "L-deg1(e)",
        "if d(y2) = 3: d(v) >= 2 for all v in N(y1), or d(v) >= 2 for all v in N(y2)",
    );
    for x in (0..g.g.n()).filter(|&x| g.d(x) == 1) {
        let y = g.nbrs[x][0];
        a.record(g.n_count(y) == 3, || vec![x, y]);
        if g.n_count(y) != 3 {
            continue;
        }
        let rest: Vec<usize> = g.nbrs[y].iter().copied().filter(|&v| v != x).collect();
        for (y1, y2) in [(rest[0], rest[1]), (rest[1], rest[0])] {
            if g.d(y1) < g.d(y2) {
                continue;
            }
            let independent = !g.adj(y1, y2) && !g.adj(x, y1) && !g.adj(x, y2);
            b.record(independent && g.d(y1) == 3 && g.d(y2) >= 2, || {
                vec![x, y, y1, y2]
            });

            if g.d(y2) == 2 {
                let far_ok = [y1, y2]
                    .iter()
                    .flat_map(|&yi| g.nbrs[yi].iter().copied().filter(|&v| v != y))
                    .all(|v| g.n_count(v) >= 2);
                let common: Vec<usize> = g
                    .closed(y1)
                    .into_iter()
                    .filter(|v| g.closed(y2).contains(v))
                    .collect();
                c.record(
                    far_ok && g.n_count(y1) == 3 && g.n_count(y2) == 2 && common == vec![y],
                    || vec![x, y, y1, y2],
                );
                if let Some(w1) = g.other_neighbor(y2, y) {
                    d.record(g.d(w1) == 3, || vec![x, y, y2, w1]);
                }
            }
            if g.d(y2) == 3 {
                let all_ge2 = |yi: usize| g.nbrs[yi].iter().all(|&v| g.d(v) >= 2);
                e.record(all_ge2(y1) || all_ge2(y2), || vec![x, y, y1, y2]);
            }
        }
    }
    vec![a.finish(), b.finish(), c.finish(), d.finish(), e.finish()]
}

fn audit_degree_two(g: &View) -> Vec<PredicateResult> {
    let mut setup = Tally::new("L-deg2(setup)", "a 2-vertex x has two distinct neighbors");
    let mut a = Tally::new(
        "L-deg2(a)",
        "for N(x) = {z, w}, |N(z)| <= |N(w)|: if zw in E then |N(z)| = |N(w)| = 3 and d(v) >= 2 for v in N(z) | N(w)",
    );
    let mut b = Tally::new(
        "L-deg2(b)",
        "if zw not in E then (|N(w)| = 3 or |N(w)| = |N(z)| = 2) and d(w) = d(z) = 3",
    );
    let mut c = Tally::new(
        "L-deg2(c)",
        "if d(z) = 2 and z*w in E: |N(z*)| = |N(w)| = 3 and d(u) = 3 for u in (N[w] | N[z*]) - {x, z}",
    );
    let mut d = Tally::new(
        "L-deg2(d)",
        "if d(z) = 2: |N(z*)| = |N(w)| = 3 and |N(v)| >= 2 for v in N(w) | N(z*)",
    );
    for x in (0..g.g.n()).filter(|&x| g.d(x) == 2) {
        setup.record(g.n_count(x) == 2, || vec![x]);
        if g.n_count(x) != 2 {
            continue;
        }
        let (p, q) = (g.nbrs[x][0], g.nbrs[x][1]);
        for (z, w) in [(p, q), (q, p)] {
            if g.n_count(z) > g.n_count(w) {
                continue;
            }
            if g.adj(z, w) {
                let ok = g.n_count(z) == 3
                    && g.n_count(w) == 3
                    && g.nbrs[z].iter().chain(&g.nbrs[w]).all(|&v| g.d(v) >= 2);
                a.record(ok, || vec![x, z, w]);
            } else {
                let shape = g.n_count(w) == 3 || (g.n_count(w) == 2 && g.n_count(z) == 2);
                b.record(shape && g.d(w) == 3 && g.d(z) == 3, || vec![x, z, w]);
            }
            if g.d(z) != 2 {
                continue;
            }
            let Some(zs) = g.other_neighbor(z, x) else {
                continue;
            };
            if g.adj(zs, w) {
                let mut around: Vec<usize> = g.closed(w);
                around.extend(g.closed(zs));
                let ok = g.n_count(zs) == 3
                    && g.n_count(w) == 3
                    && around
                        .iter()
                        .filter(|&&u| u != x && u != z)
                        .all(|&u| g.d(u) == 3);
                c.record(ok, || vec![x, z, zs, w]);
            }
            let ok = g.n_count(zs) == 3
                && g.n_count(w) == 3
                && g.nbrs[w]
                    .iter()
                    .chain(&g.nbrs[zs])
                    .all(|&v| g.n_count(v) >= 2);
            d.record(ok, || vec![x, z, zs, w]);
        }
    }
    vec![
        setup.finish(),
        a.finish(),
        b.finish(),
        c.finish(),
        d.finish(),
    ]
}

fn audit_reduced(h: &View, prof: &[VertexProfile], to_g: &[usize]) -> Vec<PredicateResult> {
    let n = h.g.n();
    let lift = |vs: &[usize]| vs.iter().map(|&v| to_g[v]).collect::<Vec<_>>();
    let bad = |v: usize| prof[v].is_bad_two();

    let mut two_nbr = Tally::new("L-2nbr", "a 2-vertex x of H has |N_H(x)| = 2");
    let mut three_nbr = Tally::new("L-3nbr", "a 3_k-vertex x of H with k >= 2 has |N_H(x)| = 3");
    for x in 0..n {
        if prof[x].degree == 2 {
            two_nbr.record(h.n_count(x) == 2, || lift(&[x]));
        }
        if prof[x].class3k.is_some_and(|k| k >= 2) {
            three_nbr.record(h.n_count(x) == 3, || lift(&[x]));
        }
    }

    let mut no_c3 = Tally::new("L-noC3", "H has no 3-cycle with two bad vertices");
    for a in 0..n {
        for &b in h.nbrs[a].iter().filter(|&&b| b > a) {
            for &c in h.nbrs[b].iter().filter(|&&c| c > b) {
                if h.adj(a, c) {
                    let bad_count = [a, b, c].iter().filter(|&&v| bad(v)).count();
                    no_c3.record(bad_count < 2, || lift(&[a, b, c]));
                }
            }
        }
    }

    let mut no_c4 = Tally::new(
        "L-noC4(cycle)",
        "H has no 4-cycle x,u,v,w with u, v, w all bad",
    );
    let mut run_ends = Tally::new(
        "L-noC4(path)",
        "for a path x,u,v,w,y of H with u, v, w bad, x and y are 3_1-vertices",
    );
    for x in 0..n {
        for &u in &h.nbrs[x] {
            for &v in h.nbrs[u].iter().filter(|&&v| v != x) {
                for &w in h.nbrs[v].iter().filter(|&&w| w != x && w != u) {
                    let run = bad(u) && bad(v) && bad(w);
                    if h.adj(w, x) {
                        no_c4.record(!run, || lift(&[x, u, v, w]));
                    }
                    if !run {
                        continue;
                    }
                    for &y in h.nbrs[w].iter().filter(|&&y| y != x && y != u && y != v) {
                        run_ends.record(prof[x].is_3k(1) && prof[y].is_3k(1), || {
                            lift(&[x, u, v, w, y])
                        });
                    }
                }
            }
        }
    }

    let mut no_bad = Tally::new("L-noBad", "no neighbor of a 3_3-vertex of H is bad");
    for u in (0..n).filter(|&u| prof[u].is_3k(3)) {
        no_bad.record(!h.nbrs[u].iter().any(|&w| bad(w)), || lift(&[u]));
    }

    let mut far = Tally::new(
        "L-main(nonadjacent)",
        "for a 3-vertex u of H with N_H(u) = {x, y, z}, x and y bad: zx1, zy1 not in E(H)",
    );
    let mut third = Tally::new("L-main(3_0)", "... and z is a 3_0-vertex of H");
    for u in (0..n).filter(|&u| prof[u].degree == 3 && h.n_count(u) == 3) {
        let nu = &h.nbrs[u];
        for i in 0..3 {
            for j in i + 1..3 {
                let (x, y, z) = (nu[i], nu[j], nu[3 - i - j]);
                if !(bad(x) && bad(y)) {
                    continue;
                }
                let (Some(x1), Some(y1)) = (h.other_neighbor(x, u), h.other_neighbor(y, u)) else {
                    continue;
                };
                far.record(!h.adj(z, x1) && !h.adj(z, y1), || {
                    lift(&[u, x, y, z, x1, y1])
                });
                third.record(prof[z].is_3k(0), || lift(&[u, x, y, z]));
            }
        }
    }

    vec![
        two_nbr.finish(),
        three_nbr.finish(),
        no_c3.finish(),
        no_c4.finish(),
        run_ends.finish(),
        no_bad.finish(),
        far.finish(),
        third.finish(),
    ]
}

/// Evaluates every predicate on `g` and on `H = G \ A_1`.
pub fn lemma_audit(g: &Multigraph) -> Result<LemmaAudit> {
    g.require_subcubic()?;
    let gv = View::new(g);
    let (h, to_g) = strip_ones(g);
    let (prof, _) = classify(&h)?;
    let hv = View::new(&h);
    let mut predicates = audit_degree_one(&gv);
    predicates.extend(audit_degree_two(&gv));
    predicates.extend(audit_reduced(&hv, &prof, &to_g));
    Ok(LemmaAudit { predicates })
}
