//! Append-only, line-oriented result cache.
//!
//! ```text
//! starline-cache v1
//! # comments are allowed
//! <form-hex> <n> <m> <simple:0|1> <mad-num>/<mad-den> <chi_s> <crc32-hex>
//! ```
//!
//! The CRC-32 covers the line up to (not including) the space before it.
//! Lines that fail to parse or whose checksum does not match are counted
//! and skipped.

use crate::error::{Error, Result};
use crate::multigraph::CanonicalForm;
use crate::rational::Rational;
use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

pub const CACHE_HEADER: &str = "starline-cache v1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheEntry {
    pub n: usize,
    pub m: usize,
    pub simple: bool,
    pub mad: Rational,
    pub chi_s: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CacheStats {
    pub loaded: usize,
    /// Line numbers are available from [`ResultCache::corrupt_lines`].
    pub corrupt: usize,
    pub hits: usize,
    pub appended: usize,
}

#[derive(Debug)]
pub struct ResultCache {
    path: PathBuf,
    entries: HashMap<CanonicalForm, CacheEntry>,
    corrupt_lines: Vec<usize>,
    file: File,
    stats: CacheStats,
}

fn format_line(form: &CanonicalForm, e: &CacheEntry) -> String {
    let body = format!(
        "{} {} {} {} {} {}",
        form.to_hex(),
        e.n,
        e.m,
        u8::from(e.simple),
        e.mad,
        e.chi_s
    );
    let crc = crc32fast::hash(body.as_bytes());
    format!("{body} {crc:08x}")
}

fn parse_line(line: &str) -> Option<(CanonicalForm, CacheEntry)> {
    let (body, crc) = line.rsplit_once(' ')?;
    if u32::from_str_radix(crc, 16).ok()? != crc32fast::hash(body.as_bytes()) {
        return None;
    }
    let fields: Vec<&str> = body.split(' ').collect();
    let [hex, n, m, simple, mad, chi] = fields.as_slice() else {
        return None;
    };
    let form = CanonicalForm::from_hex(hex)?;
    let entry = CacheEntry {
        n: n.parse().ok()?,
        m: m.parse().ok()?,
        simple: match *simple {
            "0" => false,
            "1" => true,
            _ => return None,
        },
        mad: mad.parse().ok()?,
        chi_s: chi.parse().ok()?,
    };
    (form.n() == entry.n).then_some((form, entry))
}

impl ResultCache {
    /// Opens `path`, creating it with the version header if it is absent or
    /// empty, and loads every valid line.
    pub fn open(path: impl AsRef<Path>) -> Result<ResultCache> {
        let path = path.as_ref().to_path_buf();
        let mut entries = HashMap::new();
        let mut corrupt_lines = Vec::new();
        let exists = path.exists() && std::fs::metadata(&path)?.len() > 0;
        if exists {
            let reader = BufReader::new(File::open(&path)?);
            for (i, line) in reader.lines().enumerate() {
                let line = line?;
                let line = line.trim_end_matches('\r');
                if i == 0 {
                    if line != CACHE_HEADER {
                        return Err(Error::Parse {
                            line: 1,
                            msg: format!("expected cache header '{CACHE_HEADER}'"),
                        });
                    }
                    continue;
                }
                if line.trim().is_empty() || line.starts_with('#') {
                    continue;
                }
                match parse_line(line) {
                    Some((form, entry)) => {
                        entries.insert(form, entry);
                    }
                    None => corrupt_lines.push(i + 1),
                }
            }
        }
        let mut file = OpenOptions::new().create(true).append(true).open(&path)?;
        if !exists {
            writeln!(file, "{CACHE_HEADER}")?;
        }
        let stats = CacheStats {
            loaded: entries.len(),
            corrupt: corrupt_lines.len(),
            ..CacheStats::default()
        };
        Ok(ResultCache {
            path,
            entries,
            corrupt_lines,
            file,
            stats,
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn corrupt_lines(&self) -> &[usize] {
        &self.corrupt_lines
    }

    pub fn stats(&self) -> CacheStats {
        self.stats
    }

    /// Looks up `form` without touching the hit counter.
    pub fn peek(&self, form: &CanonicalForm) -> Option<&CacheEntry> {
        self.entries.get(form)
    }

    pub(crate) fn record_hits(&mut self, hits: usize) {
        self.stats.hits += hits;
    }

    /// Appends entries in the given order and flushes once.
    pub fn append(&mut self, batch: &[(CanonicalForm, CacheEntry)]) -> Result<()> {
        let mut text = String::new();
        for (form, entry) in batch {
            if self.entries.contains_key(form) {
                continue;
            }
            text.push_str(&format_line(form, entry));
            text.push('\n');
            self.entries.insert(form.clone(), entry.clone());
            self.stats.appended += 1;
        }
        self.file.write_all(text.as_bytes())?;
        self.file.flush()?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::canonical_form;
    use crate::named;

    fn k4_entry() -> (CanonicalForm, CacheEntry) {
        (
            canonical_form(&named::complete(4)).unwrap(),
            CacheEntry {
                n: 4,
                m: 6,
                simple: true,
                mad: Rational::from_integer(3),
                chi_s: 5,
            },
        )
    }

    #[test]
    fn line_roundtrip() {
        let (form, entry) = k4_entry();
        let line = format_line(&form, &entry);
        assert!(line.contains(" 4 6 1 3/1 5 "));
        assert_eq!(parse_line(&line), Some((form, entry)));
    }

    #[test]
    fn persist_and_reload() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.txt");
        let mut cache = ResultCache::open(&path).unwrap();
        assert!(cache.is_empty());
        let (form, entry) = k4_entry();
        cache.append(&[(form.clone(), entry.clone())]).unwrap();
        drop(cache);
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.starts_with(CACHE_HEADER));
        let cache = ResultCache::open(&path).unwrap();
        assert_eq!(cache.peek(&form), Some(&entry));
        assert_eq!(cache.stats().loaded, 1);
    }

    #[test]
    fn corrupt_lines_are_skipped() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.txt");
        let (form, entry) = k4_entry();
        let good = format_line(&form, &entry);
        let bad = good.replacen(" 5 ", " 4 ", 1);
        let text = format!("{CACHE_HEADER}\n# note\n{bad}\n\n{good}\ngarbage\n");
        std::fs::write(&path, text).unwrap();
        let cache = ResultCache::open(&path).unwrap();
        assert_eq!(cache.corrupt_lines(), &[3, 6]);
        assert_eq!(cache.peek(&form), Some(&entry));
    }

    #[test]
    fn wrong_header() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.txt");
        std::fs::write(&path, "something else\n").unwrap();
        assert!(matches!(
            ResultCache::open(&path),
            Err(Error::Parse { line: 1, .. })
        ));
    }
}
