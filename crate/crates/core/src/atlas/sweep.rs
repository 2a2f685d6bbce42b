use super::cache::{CacheEntry, ResultCache};
use super::{enumerate_forms, Mode};
use crate::density::mad;
use crate::error::{Error, Result};
use crate::multigraph::CanonicalForm;
use crate::rational::Rational;
use crate::starcolor::{is_star_coloring, is_star_critical, star_chromatic_index, SUBCUBIC_BOUND};
use crate::structure::covers_cube;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

/// Graphs solved in parallel between two cache flushes.
const CHUNK: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Check {
    /// `χ'_s <= 7` for every subcubic multigraph.
    #[serde(rename = "thm13a")]
    Thm13a,
    /// `χ'_s <= 6`, reported rather than asserted.
    #[serde(rename = "conj6")]
    Conj6,
    /// `mad < 12/5` implies `χ'_s <= 5`.
    #[serde(rename = "main5")]
    Main5,
    /// For connected cubic simple graphs, `χ'_s >= 4`, with equality exactly
    /// when the graph covers `Q_3`.
    #[serde(rename = "cube-equiv")]
    CubeEquiv,
}

impl Check {
    pub const ALL: [Check; 4] = [Check::Thm13a, Check::Conj6, Check::Main5, Check::CubeEquiv];

    pub fn name(self) -> &'static str {
        match self {
            Check::Thm13a => "thm13a",
            Check::Conj6 => "conj6",
            Check::Main5 => "main5",
            Check::CubeEquiv => "cube-equiv",
        }
    }

    /// Whether a counterexample contradicts a proven statement.
    pub fn is_asserted(self) -> bool {
        self != Check::Conj6
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Check> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("unknown check '{s}'"),
            })
    }
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub max_n: usize,
    pub mode: Mode,
    pub checks: Vec<Check>,
    pub cache: Option<PathBuf>,
    /// Worker threads; 0 picks the rayon default.
    pub jobs: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRecord {
    pub form: CanonicalForm,
    pub n: usize,
    pub m: usize,
    pub mad: Rational,
    pub chi_s: usize,
    pub is_simple: bool,
    /// Star 5-criticality; decided for every graph, trivially false when
    /// `χ'_s <= 5`.
    pub critical5: Option<bool>,
    /// Whether the solver's coloring passed the verifier; `None` when the
    /// values came from the cache.
    pub certified: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check: Check,
    pub applicable: usize,
    pub counterexamples: Vec<CanonicalForm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub mode: Mode,
    pub max_n: usize,
    pub graphs: usize,
    /// Number of graphs per value of `χ'_s`.
    pub chi_distribution: BTreeMap<usize, usize>,
    pub critical5: Vec<CanonicalForm>,
    pub uncertified: Vec<CanonicalForm>,
    pub checks: Vec<CheckOutcome>,
}

impl SweepSummary {
    pub fn counterexamples(&self) -> usize {
        self.checks.iter().map(|c| c.counterexamples.len()).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.counterexamples() == 0 && self.uncertified.is_empty()
    }
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "mode: {}  max_n: {}  graphs: {}",
            self.mode, self.max_n, self.graphs
        )?;
        let dist: Vec<String> = self
            .chi_distribution
            .iter()
            .map(|(k, c)| format!("{k}:{c}"))
            .collect();
        writeln!(f, "chi_s distribution: {}", dist.join(" "))?;
        writeln!(f, "star 5-critical: {}", self.critical5.len())?;
        for form in &self.critical5 {
            writeln!(f, "  {form}")?;
        }
        if !self.uncertified.is_empty() {
            writeln!(f, "certificates rejected: {}", self.uncertified.len())?;
        }
        for c in &self.checks {
            let note = if c.check.is_asserted() {
                ""
            } else {
                " (reported)"
            };
            writeln!(
                f,
                "check {}{note}: applicable {}, counterexamples {}",
                c.check,
                c.applicable,
                c.counterexamples.len()
            )?;
            for form in &c.counterexamples {
                writeln!(f, "  {form}")?;
            }
        }
        Ok(())
    }
}

/// Cache statistics are kept apart from the summary so that a warm rerun
/// prints the same summary.
#[derive(Clone, Debug)]
pub struct SweepOutcome {
    pub summary: SweepSummary,
    pub records: Vec<SweepRecord>,
    pub cache: Option<super::CacheStats>,
    pub corrupt_cache_lines: Vec<usize>,
}

fn solve(form: &CanonicalForm, cached: Option<&CacheEntry>) -> Result<SweepRecord> {
    let g = form.to_graph();
    let (mad_value, chi_s, certified) = match cached {
        Some(e) => (e.mad.clone(), e.chi_s, None),
        None => {
            let index = star_chromatic_index(&g);
            let ok = is_star_coloring(&g, &index.certificate)?;
            (mad(&g)?.value, index.k, Some(ok))
        }
    };
    let critical5 = Some(chi_s > 5 && is_star_critical(&g, 5).critical);
    Ok(SweepRecord {
        form: form.clone(),
        n: g.n(),
        m: g.m(),
        mad: mad_value,
        chi_s,
        is_simple: g.is_simple(),
        critical5,
        certified,
    })
}

fn violates(check: Check, r: &SweepRecord) -> Option<bool> {
    match check {
        Check::Thm13a => Some(r.chi_s > SUBCUBIC_BOUND),
        Check::Conj6 => Some(r.chi_s > 6),
        Check::Main5 => (r.mad < Rational::new(12, 5)).then_some(r.chi_s > 5),
        Check::CubeEquiv => {
            let g = r.form.to_graph();
            (g.is_simple() && g.is_cubic() && g.is_connected()).then(|| {
                let covers = covers_cube(&g).mapping().is_some();
                r.chi_s < 4 || (r.chi_s == 4) != covers
            })
        }
    }
}

/// Enumerates the connected graphs for `config`, computes `mad` and `χ'_s`
/// for each (reusing cached values), and evaluates the requested checks.
/// Results do not depend on `jobs` or on the cache contents.
pub fn sweep(config: &SweepConfig) -> Result<SweepOutcome> {
    let forms = enumerate_forms(config.max_n, config.mode, true)?;
    let mut cache = config.cache.as_ref().map(ResultCache::open).transpose()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;

    let mut records = Vec::with_capacity(forms.len());
    for chunk in forms.chunks(CHUNK) {
        let done: Vec<SweepRecord> = pool.install(|| {
            chunk
                .par_iter()
                .map(|f| solve(f, cache.as_ref().and_then(|c| c.peek(f))))
                .collect::<Result<_>>()
        })?;
        if let Some(cache) = cache.as_mut() {
            let fresh: Vec<(CanonicalForm, CacheEntry)> = done
                .iter()
                .filter(|r| r.certified.is_some())
                .map(|r| {
                    (
                        r.form.clone(),
                        CacheEntry {
                            n: r.n,
                            m: r.m,
                            simple: r.is_simple,
                            mad: r.mad.clone(),
                            chi_s: r.chi_s,
                        },
                    )
                })
                .collect();
            cache.record_hits(done.len() - fresh.len());
            cache.append(&fresh)?;
        }
        records.extend(done);
    }

    let mut checks: Vec<Check> = config.checks.clone();
    checks.sort_unstable();
    checks.dedup();
    let outcomes = checks
        .iter()
        .map(|&check| {
            let verdicts: Vec<(bool, &SweepRecord)> = pool.install(|| {
                records
                    .par_iter()
                    .filter_map(|r| violates(check, r).map(|v| (v, r)))
                    .collect()
            });
            CheckOutcome {
                check,
                applicable: verdicts.len(),
                counterexamples: verdicts
                    .into_iter()
                    .filter(|(v, _)| *v)
                    .map(|(_, r)| r.form.clone())
                    .collect(),
            }
        })
        .collect();

    let mut chi_distribution = BTreeMap::new();
    for r in &records {
        *chi_distribution.entry(r.chi_s).or_insert(0) += 1;
    }
    let summary = SweepSummary {
        mode: config.mode,
        max_n: config.max_n,
        graphs: records.len(),
        chi_distribution,
        critical5: records
            .iter()
            .filter(|r| r.critical5 == Some(true))
            .map(|r| r.form.clone())
            .collect(),
        uncertified: records
            .iter()
            .filter(|r| r.certified == Some(false))
            .map(|r| r.form.clone())
            .collect(),
        checks: outcomes,
    };
    Ok(SweepOutcome {
        summary,
        records,
        corrupt_cache_lines: cache
            .as_ref()
            .map(|c| c.corrupt_lines().to_vec())
            .unwrap_or_default(),
        cache: cache.map(|c| c.stats()),
    })
}
