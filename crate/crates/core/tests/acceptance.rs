//! Acceptance run: one line per criterion, nonzero exit if any fails.

mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use starline::atlas::{
    enumerate, enumerate_forms, find_critical, sweep, Check, Mode, SweepConfig, SweepOutcome,
};
use starline::density::{mad, mad_brute};
use starline::discharge::{apply_rules, audit};
use starline::multigraph::canonical_form;
use starline::named;
use starline::starcolor::{is_star_coloring, star_chromatic_index};
use starline::structure::check_counting_inequality;
use starline::{Multigraph, Rational};
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// Connected isomorphism classes on exactly `n` vertices, found by listing
/// every multiplicity matrix and keeping the lexicographically least
/// relabeling under all `n!` permutations.
fn brute_classes(n: usize, max_mult: u8) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let perms = permutations(n);
    let mut classes = BTreeSet::new();
    let mut mult = vec![0u8; pairs.len()];
    loop {
        let mut deg = vec![0u32; n];
        for (p, &(i, j)) in pairs.iter().enumerate() {
            deg[i] += mult[p] as u32;
            deg[j] += mult[p] as u32;
        }
        if deg.iter().all(|&d| d <= 3) && connected(n, &pairs, &mult) {
            let key = perms
                .iter()
                .map(|perm| {
                    let mut m = vec![vec![0u8; n]; n];
                    for (p, &(i, j)) in pairs.iter().enumerate() {
                        m[perm[i]][perm[j]] = mult[p];
                        m[perm[j]][perm[i]] = mult[p];
                    }
                    pairs.iter().map(|&(i, j)| m[i][j]).collect::<Vec<u8>>()
                })
                .min()
                .expect("at least one permutation");
            classes.insert(key);
        }
        let mut p = 0;
        while p < mult.len() && mult[p] == max_mult {
            mult[p] = 0;
            p += 1;
        }
        if p == mult.len() {
            break;
        }
        mult[p] += 1;
    }
    classes.len()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn connected(n: usize, pairs: &[(usize, usize)], mult: &[u8]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for (p, &(i, j)) in pairs.iter().enumerate() {
            if mult[p] == 0 {
                continue;
            }
            let w = if i == u {
                j
            } else if j == u {
                i
            } else {
                continue;
            };
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

fn known_values() -> Outcome {
    let cases: [(&str, Multigraph, usize, bool); 5] = [
        ("K3,3", named::k33(), 6, false),
        ("Q3", named::q3(), 4, false),
        ("C4", named::cycle(4), 3, true),
        ("P5", named::path(5), 3, true),
        ("K4", named::complete(4), 5, true),
    ];
    let mut slowest = Duration::ZERO;
    let mut parts = Vec::new();
    for (name, g, expected, oracle) in cases {
        let t = Instant::now();
        let index = star_chromatic_index(&g);
        let took = t.elapsed();
        slowest = slowest.max(took);
        ensure(
            index.k == expected,
            format!("{name}: solver gives {}", index.k),
        )?;
        ensure(
            took < Duration::from_secs(5),
            format!("{name}: took {took:?}"),
        )?;
        let colors: Vec<u32> = index
            .certificate
            .colors
            .iter()
            .map(|c| c.unwrap())
            .collect();
        ensure(
            common::oracle_is_star(&g, &colors),
            format!("{name}: certificate rejected"),
        )?;
        if oracle {
            ensure(
                common::oracle_chi(&g) == expected,
                format!("{name}: oracle disagrees"),
            )?;
        } else {
            ensure(
                !common::oracle_colorable(&g, expected as u32 - 1),
                format!("{name}: oracle finds {} colors", expected - 1),
            )?;
        }
        parts.push(format!("{name}={}", index.k));
    }
    Ok(format!("{} (slowest solve {slowest:.2?})", parts.join(" ")))
}

fn run_sweep(max_n: usize, mode: Mode, checks: &[Check]) -> Result<SweepOutcome, String> {
    sweep(&SweepConfig {
        max_n,
        mode,
        checks: checks.to_vec(),
        cache: None,
        jobs: 0,
    })
    .map_err(|e| e.to_string())
}

fn outcome(out: &SweepOutcome, check: Check) -> (usize, usize) {
    let c = out
        .summary
        .checks
        .iter()
        .find(|c| c.check == check)
        .expect("requested check");
    (c.applicable, c.counterexamples.len())
}

struct Sweeps {
    multi: SweepOutcome,
    simple: SweepOutcome,
    elapsed: Duration,
}

fn bound_sweeps() -> Result<Sweeps, String> {
    let t = Instant::now();
    let checks = [Check::Thm13a, Check::Conj6, Check::Main5];
    Ok(Sweeps {
        multi: run_sweep(7, Mode::Multi, &checks)?,
        simple: run_sweep(9, Mode::Simple, &checks)?,
        elapsed: t.elapsed(),
    })
}

fn check_line(s: &Sweeps, check: Check, assert: bool) -> Outcome {
    let (am, cm) = outcome(&s.multi, check);
    let (as_, cs) = outcome(&s.simple, check);
    let text =
        format!("multigraphs n<=7: {cm} of {am}; simple n<=9: {cs} of {as_} counterexamples");
    if assert {
        ensure(cm + cs == 0, text.clone())?;
    }
    Ok(text)
}

fn thm13a(s: &Sweeps) -> Outcome {
    let line = check_line(s, Check::Thm13a, true)?;
    ensure(
        s.elapsed < Duration::from_secs(600),
        format!("sweep took {:?}", s.elapsed),
    )?;
    Ok(format!("{line} ({:.2?})", s.elapsed))
}

fn cube_equivalence() -> Outcome {
    let out = run_sweep(10, Mode::Simple, &[Check::CubeEquiv])?;
    let (applicable, bad) = outcome(&out, Check::CubeEquiv);
    let cubic: Vec<_> = out
        .records
        .iter()
        .filter(|r| r.form.to_graph().is_cubic() && r.is_simple)
        .collect();
    ensure(cubic.len() == applicable, "cubic count mismatch")?;
    ensure(
        cubic.iter().all(|r| r.chi_s >= 4),
        "a cubic graph has chi_s < 4",
    )?;
    ensure(bad == 0, format!("{bad} discrepancies"))?;
    let fours = cubic.iter().filter(|r| r.chi_s == 4).count();
    Ok(format!(
        "{applicable} connected cubic simple graphs (n<=10), {fours} with chi_s = 4, 0 discrepancies"
    ))
}

fn mad_oracle() -> Outcome {
    let mut checked = 0;
    for mode in [Mode::Simple, Mode::Multi] {
        for g in enumerate(8, mode, false).map_err(|e| e.to_string())? {
            let a = mad(&g).map_err(|e| e.to_string())?.value;
            let b = mad_brute(&g).map_err(|e| e.to_string())?.value;
            ensure(a == b, format!("{:?}: flow {a} vs brute {b}", g.edges()))?;
            checked += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    for _ in 0..500 {
        let n = rng.gen_range(1..=12);
        let simple = rng.gen_bool(0.5);
        let g = common::random_subcubic(&mut rng, n, simple);
        let a = mad(&g).map_err(|e| e.to_string())?.value;
        let b = mad_brute(&g).map_err(|e| e.to_string())?.value;
        ensure(a == b, format!("{:?}: flow {a} vs brute {b}", g.edges()))?;
    }
    Ok(format!(
        "{checked} enumerated graphs (n<=8) and 500 random graphs (n<=12) agree"
    ))
}

fn conservation() -> Outcome {
    let mut hs = 0;
    let mut wholes = 0;
    for mode in [Mode::Simple, Mode::Multi] {
        for g in enumerate(8, mode, true).map_err(|e| e.to_string())? {
            if g.min_degree() >= 2 {
                let ledger = apply_rules(&g).map_err(|e| e.to_string())?;
                let report = audit(&g, &ledger).map_err(|e| e.to_string())?;
                let expected = Rational::new(10 * g.m() as i64 - 12 * g.n() as i64, 5);
                ensure(
                    report.conserved && report.final_total == expected,
                    format!(
                        "{:?}: final {} expected {expected}",
                        g.edges(),
                        report.final_total
                    ),
                )?;
                hs += 1;
            }
            if g.n() >= 2 && mad(&g).map_err(|e| e.to_string())?.value < Rational::new(12, 5) {
                ensure(
                    check_counting_inequality(&g).map_err(|e| e.to_string())?,
                    format!("{:?}: 3n3 < 2n2 + 7n1 fails", g.edges()),
                )?;
                wholes += 1;
            }
        }
    }
    Ok(format!(
        "{hs} graphs with min degree >= 2 conserve charge; counting inequality holds on {wholes} graphs with mad < 12/5"
    ))
}

fn lemma_audits() -> Outcome {
    let mut seen = BTreeSet::new();
    for mode in [Mode::Simple, Mode::Multi] {
        for c in find_critical(8, mode, 5).map_err(|e| e.to_string())? {
            let fails: Vec<&str> = c.lemmas.failures().map(|p| p.id).collect();
            ensure(
                fails.is_empty(),
                format!("{} fails {}", c.form, fails.join(",")),
            )?;
            seen.insert(c.form);
        }
    }
    Ok(format!(
        "{} star 5-critical graphs with n<=8, all predicates hold",
        seen.len()
    ))
}

fn properties(s: &Sweeps) -> Outcome {
    let mut certified = 0;
    for out in [&s.multi, &s.simple] {
        for r in &out.records {
            ensure(
                r.certified == Some(true),
                format!("{}: certificate rejected", r.form),
            )?;
            certified += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    for _ in 0..200 {
        let n = rng.gen_range(1..=9);
        let simple = rng.gen_bool(0.5);
        let g = common::random_subcubic(&mut rng, n, simple);
        let chi = star_chromatic_index(&g).k;
        let v = rng.gen_range(0..n);
        let gv = g.delete_vertex(v).map_err(|e| e.to_string())?;
        ensure(
            star_chromatic_index(&gv).k <= chi,
            format!("{:?} minus vertex {v}", g.edges()),
        )?;
        if g.m() > 0 {
            let e = rng.gen_range(0..g.m());
            let ge = g.delete_edge(e).map_err(|e| e.to_string())?;
            let index = star_chromatic_index(&ge);
            ensure(index.k <= chi, format!("{:?} minus edge {e}", g.edges()))?;
            ensure(
                is_star_coloring(&ge, &index.certificate).map_err(|e| e.to_string())?,
                "certificate rejected",
            )?;
        }
    }
    for _ in 0..1000 {
        let n = rng.gen_range(1..=12);
        let simple = rng.gen_bool(0.5);
        let g = common::random_subcubic(&mut rng, n, simple);
        let h = g.permute(&common::random_permutation(&mut rng, n));
        ensure(
            canonical_form(&g).map_err(|e| e.to_string())?
                == canonical_form(&h).map_err(|e| e.to_string())?,
            format!("{:?}: canonical form changed under relabeling", g.edges()),
        )?;
    }
    Ok(format!(
        "{certified} sweep certificates verified; deletion monotone on 200 samples; canonical form stable on 1000 relabelings"
    ))
}

fn enumeration_oracle() -> Outcome {
    let mut parts = Vec::new();
    for (mode, max_n, mult) in [(Mode::Simple, 5, 1u8), (Mode::Multi, 4, 3u8)] {
        let forms = enumerate_forms(max_n, mode, true).map_err(|e| e.to_string())?;
        for n in 1..=max_n {
            let ours = forms.iter().filter(|f| f.n() == n).count();
            let brute = brute_classes(n, mult);
            ensure(
                ours == brute,
                format!("{mode} n={n}: {ours} vs brute {brute}"),
            )?;
            parts.push(format!("{mode} n={n}: {ours}"));
        }
    }
    Ok(parts.join(", "))
}

fn main() {
    let started = Instant::now();
    let sweeps = bound_sweeps();
    let with_sweeps = |f: fn(&Sweeps) -> Outcome| match &sweeps {
        Ok(s) => f(s),
        Err(e) => Err(format!("sweep failed: {e}")),
    };
    let results: Vec<(&str, &str, Outcome)> = vec![
        ("1", "known star chromatic indices", known_values()),
        ("2", "chi_s <= 7 sweep", with_sweeps(thm13a)),
        (
            "3",
            "mad < 12/5 implies chi_s <= 5",
            with_sweeps(|s| check_line(s, Check::Main5, true)),
        ),
        (
            "4",
            "chi_s <= 6 status (reported)",
            with_sweeps(|s| check_line(s, Check::Conj6, false)),
        ),
        ("5", "cube-cover equivalence", cube_equivalence()),
        ("6", "mad flow vs brute force", mad_oracle()),
        ("7", "discharging conservation", conservation()),
        ("8", "lemma audit on critical graphs", lemma_audits()),
        ("9", "property suites", with_sweeps(properties)),
        ("E", "enumeration completeness oracle", enumeration_oracle()),
    ];
    let mut failed = 0;
    for (id, name, result) in &results {
        match result {
            Ok(detail) => println!("criterion {id} PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {id} FAIL  {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.2?}",
        results.len() - failed,
        started.elapsed()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
