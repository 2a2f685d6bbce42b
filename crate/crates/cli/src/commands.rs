use crate::report::Report;
use crate::Command;
use anyhow::{bail, Context, Result};
use serde_json::json;
use starline::atlas::{self, Check, Mode, SweepConfig};
use starline::density::{girth, mad};
use starline::discharge::{apply_rules, audit};
use starline::multigraph::{parse_graph, to_edge_list, to_graph6};
use starline::starcolor::{
    find_violation, star_chromatic_index, star_chromatic_index_bounded, EdgeColoring, Scope,
};
use starline::structure::{covers_cube, lemma_audit, strip_ones, CubeCover, VertexProfile};
use starline::Multigraph;
use std::fmt::Write as _;
use std::io::Read;

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading standard input")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn load_graph(path: &str) -> Result<Multigraph> {
    let text = read_input(path)?;
    parse_graph(&text).with_context(|| format!("parsing {path}"))
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

/// Parses "edge-id color" lines; blank lines and '#' comments are ignored.
fn parse_coloring(text: &str, m: usize) -> Result<EdgeColoring> {
    let mut colors: Vec<Option<u32>> = vec![None; m];
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [e, c] = fields.as_slice() else {
            bail!("line {}: expected 'edge-id color'", i + 1);
        };
        let e: usize = e
            .parse()
            .with_context(|| format!("line {}: edge id", i + 1))?;
        let c: u32 = c
            .parse()
            .with_context(|| format!("line {}: color", i + 1))?;
        if e >= m {
            bail!(
                "line {}: edge {e} out of range (graph has {m} edges)",
                i + 1
            );
        }
        if colors[e].replace(c).is_some() {
            bail!("line {}: edge {e} colored twice", i + 1);
        }
    }
    let k = colors.iter().flatten().copied().max().unwrap_or(0);
    Ok(EdgeColoring { k, colors })
}

fn coloring_lines(c: &EdgeColoring) -> String {
    c.colors
        .iter()
        .enumerate()
        .filter_map(|(e, c)| c.map(|c| format!("{e} {c}\n")))
        .collect()
}

fn class_label(p: &VertexProfile) -> String {
    match (p.degree, p.class3k, p.two_status) {
        (3, Some(k), _) if p.bad32 => format!("3_{k} bad"),
        (3, Some(k), _) => format!("3_{k}"),
        (2, _, Some(s)) => format!("2 {}", format!("{s:?}").to_lowercase()),
        (d, _, _) => d.to_string(),
    }
}

pub fn run(command: Command) -> Result<Report> {
    match command {
        Command::Chi { graph, max_k, cert } => chi(&graph, max_k, cert),
        Command::Verify { graph, coloring } => verify(&graph, &coloring),
        Command::Mad { graph } => {
            let g = load_graph(&graph)?;
            let d = mad(&g)?;
            let text = format!("{}\nwitness: {}\n", d.value, join(&d.witness, " "));
            Ok(Report::new(
                text,
                format!("mad = {}", d.value),
                json!({ "mad": d.value, "witness": d.witness }),
                true,
            ))
        }
        Command::Girth { graph } => {
            let g = load_graph(&graph)?;
            let value = girth(&g).map_or("inf".to_string(), |x| x.to_string());
            Ok(Report::new(
                format!("{value}\n"),
                format!("girth = {value}"),
                json!({ "girth": girth(&g) }),
                true,
            ))
        }
        Command::Audit { graph } => lemma(&graph),
        Command::Discharge { graph, from_g } => discharge(&graph, from_g),
        Command::CoversCube { graph } => cube(&graph),
        Command::Enumerate {
            max_n,
            mode,
            disconnected,
            format,
        } => enumerate(max_n, &mode, disconnected, &format),
        Command::Sweep {
            max_n,
            mode,
            check,
            cache,
            jobs,
        } => {
            let checks = check
                .iter()
                .map(|c| c.trim().parse::<Check>())
                .collect::<Result<Vec<_>, _>>()?;
            let config = SweepConfig {
                max_n,
                mode: mode.parse()?,
                checks,
                cache,
                jobs,
            };
            let out = atlas::sweep(&config)?;
            if let Some(stats) = out.cache {
                eprintln!(
                    "cache: {} loaded, {} hits, {} appended, {} corrupt lines skipped",
                    stats.loaded, stats.hits, stats.appended, stats.corrupt
                );
            }
            for line in &out.corrupt_cache_lines {
                eprintln!("cache: line {line} failed its checksum and was skipped");
            }
            let s = &out.summary;
            let result = if s.is_clean() {
                format!("{} graphs, 0 counterexamples", s.graphs)
            } else {
                format!(
                    "{} graphs, {} counterexamples, {} rejected certificates",
                    s.graphs,
                    s.counterexamples(),
                    s.uncertified.len()
                )
            };
            Ok(Report::new(s.to_string(), result, json!(s), s.is_clean()))
        }
        Command::Critical { max_n, mode, k } => critical(max_n, &mode, k),
    }
}

fn chi(path: &str, max_k: Option<usize>, cert: Option<std::path::PathBuf>) -> Result<Report> {
    let g = load_graph(path)?;
    let found = match max_k {
        Some(k) => star_chromatic_index_bounded(&g, k),
        None => Some(star_chromatic_index(&g)),
    };
    let Some(index) = found else {
        let k = max_k.expect("bounded search");
        return Ok(Report::new(
            format!("chi_s > {k}\n"),
            format!("chi_s > {k}"),
            json!({ "chi_s": null, "exceeds": k }),
            false,
        ));
    };
    if let Some(out) = cert {
        std::fs::write(&out, coloring_lines(&index.certificate))
            .with_context(|| format!("writing {}", out.display()))?;
    }
    let colors: Vec<u32> = index.certificate.colors.iter().flatten().copied().collect();
    let text = format!("chi_s = {}\ncoloring: {}\n", index.k, join(&colors, " "));
    Ok(Report::new(
        text,
        format!("chi_s = {}", index.k),
        json!({ "chi_s": index.k, "coloring": colors }),
        true,
    ))
}

fn verify(graph: &str, coloring: &str) -> Result<Report> {
    let g = load_graph(graph)?;
    let c = parse_coloring(&read_input(coloring)?, g.m())?;
    let violation = find_violation(&g, &c, Scope::All)?;
    let uncolored: Vec<usize> = (0..g.m()).filter(|&e| c.colors[e].is_none()).collect();
    match violation {
        Some(v) => Ok(Report::new(
            format!("violation: {v}\n"),
            format!("not a star coloring ({})", v.kind),
            json!({ "ok": false, "violation": v, "uncolored": uncolored }),
            false,
        )),
        None if !uncolored.is_empty() => Ok(Report::new(
            format!(
                "no violation among colored edges; uncolored: {}\n",
                join(&uncolored, " ")
            ),
            "partial coloring",
            json!({ "ok": false, "violation": null, "uncolored": uncolored }),
            false,
        )),
        None => Ok(Report::new(
            format!("OK: star {}-edge-coloring\n", c.k),
            format!("star coloring with {} colors", c.used_colors()),
            json!({ "ok": true, "k": c.k }),
            true,
        )),
    }
}

fn lemma(path: &str) -> Result<Report> {
    let g = load_graph(path)?;
    let a = lemma_audit(&g)?;
    let mut text = String::new();
    for p in &a.predicates {
        let witness = p
            .witness
            .as_deref()
            .map(|w| join(w, " "))
            .unwrap_or_default();
        let status = format!("{:?}", p.status).to_lowercase();
        let line = format!("{:<22} {status:<8} {:>4}  {witness}", p.id, p.instances);
        writeln!(text, "{}", line.trim_end())?;
    }
    let fails = a.failures().count();
    let result = if fails == 0 {
        "all predicates hold".to_string()
    } else {
        format!("{fails} predicates fail")
    };
    Ok(Report::new(text, result, json!(a), fails == 0))
}

fn discharge(path: &str, from_g: bool) -> Result<Report> {
    let g = load_graph(path)?;
    let (h, map) = if from_g {
        strip_ones(&g)
    } else {
        (g.clone(), (0..g.n()).collect())
    };
    let ledger = apply_rules(&h)?;
    let report = audit(&h, &ledger)?;
    let mut text = String::new();
    if from_g {
        writeln!(
            text,
            "H: {} vertices, {} edges; H -> G: {}",
            h.n(),
            h.m(),
            join(&map, " ")
        )?;
    }
    writeln!(text, "vertex degree class initial final")?;
    for v in 0..h.n() {
        writeln!(
            text,
            "{v} {} {} {} {}",
            h.degree(v),
            class_label(&ledger.profiles[v]),
            ledger.initial[v],
            ledger.final_charges[v]
        )?;
    }
    writeln!(text, "transfers: {}", ledger.transfers.len())?;
    for t in &ledger.transfers {
        writeln!(text, "  {} {} -> {} {}", t.rule, t.from, t.to, t.amount)?;
    }
    for a in &ledger.anomalies {
        writeln!(text, "anomaly: {a}")?;
    }
    for r in report.residuals.iter().filter(|r| r.pooled) {
        writeln!(text, "pool {} total {}", join(&r.vertices, " "), r.total)?;
    }
    for run in &report.flagged_runs {
        writeln!(text, "long run of bad 2-vertices: {}", join(run, " "))?;
    }
    writeln!(
        text,
        "total: initial {} final {} expected {} ({})",
        report.initial_total,
        report.final_total,
        report.expected_total,
        if report.conserved {
            "conserved"
        } else {
            "NOT conserved"
        }
    )?;
    for r in &report.negative {
        writeln!(
            text,
            "negative: {} total {}",
            join(&r.vertices, " "),
            r.total
        )?;
    }
    let holds = report.conserved && report.all_nonnegative;
    let result = if holds {
        "charge conserved, all residuals nonnegative".to_string()
    } else if !report.conserved {
        "charge not conserved".to_string()
    } else {
        format!("{} negative residuals", report.negative.len())
    };
    let json = json!({ "h_to_g": map, "ledger": ledger, "audit": report });
    Ok(Report::new(text, result, json, holds))
}

fn cube(path: &str) -> Result<Report> {
    let g = load_graph(path)?;
    let cover = covers_cube(&g);
    let (text, result, holds) = match &cover {
        CubeCover::Cover(f) => {
            let lines: String = f
                .iter()
                .enumerate()
                .map(|(v, x)| format!("{v} {x:03b}\n"))
                .collect();
            (lines, "covers Q3".to_string(), true)
        }
        CubeCover::NoCover => ("NONE\n".to_string(), "does not cover Q3".to_string(), false),
        CubeCover::NotApplicable(why) => (
            format!("NONE ({why})\n"),
            "not applicable".to_string(),
            false,
        ),
    };
    Ok(Report::new(text, result, json!(cover), holds))
}

fn enumerate(max_n: usize, mode: &str, disconnected: bool, format: &str) -> Result<Report> {
    let mode: Mode = mode.parse()?;
    if !matches!(format, "canon" | "edges" | "g6") {
        bail!("unknown format '{format}' (expected canon, edges or g6)");
    }
    if format == "g6" && mode == Mode::Multi {
        bail!("graph6 cannot represent multigraphs");
    }
    let forms = atlas::enumerate_forms(max_n, mode, !disconnected)?;
    let mut text = String::new();
    for f in &forms {
        match format {
            "canon" => writeln!(text, "{f}")?,
            "g6" => writeln!(text, "{}", to_graph6(&f.to_graph())?)?,
            _ => writeln!(text, "{}", to_edge_list(&f.to_graph()))?,
        }
    }
    let json = json!({ "mode": mode, "max_n": max_n, "connected": !disconnected, "forms": forms });
    Ok(Report::new(
        text,
        format!("{} graphs", forms.len()),
        json,
        true,
    ))
}

fn critical(max_n: usize, mode: &str, k: usize) -> Result<Report> {
    let found = atlas::find_critical(max_n, mode.parse()?, k)?;
    let mut text = String::new();
    let mut failing = 0;
    for c in &found {
        let fails: Vec<&str> = c.lemmas.failures().map(|p| p.id).collect();
        if !fails.is_empty() {
            failing += 1;
        }
        writeln!(
            text,
            "{} n={} m={} chi_s={} lemmas: {} discharge: {}",
            c.form,
            c.graph.n(),
            c.graph.m(),
            c.report.chi,
            if fails.is_empty() {
                "pass".to_string()
            } else {
                format!("FAIL {}", fails.join(","))
            },
            if c.discharge.all_nonnegative {
                "nonnegative"
            } else {
                "negative residuals"
            }
        )?;
    }
    let holds = k != 5 || failing == 0;
    let mut result = format!("{} star {k}-critical graphs", found.len());
    if k == 5 {
        write!(result, ", {failing} failing the lemma audit")?;
    }
    Ok(Report::new(text, result, json!(found), holds))
}
