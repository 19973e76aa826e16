//! Line-oriented permutation group catalogs.
//!
//! ```text
//! # comment
//!
//! group s3
//! degree 3
//! gen 1,0,2
//! gen 1,2,0
//! order 6
//! tag symmetric
//! ```
//!
//! Records are separated by blank lines. Images are 0-based. `order` and
//! `tag` are optional; unknown directives are skipped with a warning.
//! Comment lines before the first record form the file header and are kept
//! so that canonical files serialize back byte for byte.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use log::warn;

use crate::error::{Error, Result};
use crate::group::{close_permutations, is_bijection, FiniteGroup, Origin};

/// One catalog entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRecord {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
    pub expected_order: Option<usize>,
    pub tags: Vec<String>,
}

/// A parsed catalog file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Catalog {
    pub source: Option<PathBuf>,
    pub header: Vec<String>,
    pub records: Vec<GroupRecord>,
    pub warnings: Vec<String>,
}

impl Catalog {
    pub fn get(&self, name: &str) -> Option<&GroupRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    /// Canonical text: header comments, then each record after a blank
    /// line.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for line in &self.header {
            out.push_str(line);
            out.push('\n');
        }
        for (i, r) in self.records.iter().enumerate() {
            if i > 0 || !self.header.is_empty() {
                out.push('\n');
            }
            out.push_str(&r.serialize());
        }
        out
    }
}

impl GroupRecord {
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "group {}", self.name);
        let _ = writeln!(out, "degree {}", self.degree);
        for g in &self.generators {
            let images: Vec<String> = g.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "gen {}", images.join(","));
        }
        if let Some(n) = self.expected_order {
            let _ = writeln!(out, "order {n}");
        }
        for t in &self.tags {
            let _ = writeln!(out, "tag {t}");
        }
        out
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_positive(value: &str, line: usize, what: &str) -> Result<usize> {
    match value.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(parse_err(line, format!("{what} must be a positive integer, got {value:?}"))),
    }
}

struct Pending {
    record: GroupRecord,
    degree_line: Option<usize>,
    gen_lines: Vec<usize>,
}

impl Pending {
    fn finish(self, start: usize) -> Result<GroupRecord> {
        if self.degree_line.is_none() {
            return Err(parse_err(start, format!("record {} has no degree", self.record.name)));
        }
        let degree = self.record.degree;
        for (g, &line) in self.record.generators.iter().zip(&self.gen_lines) {
            if g.len() != degree {
                return Err(parse_err(
                    line,
                    format!("generator has {} images but degree is {degree}", g.len()),
                ));
            }
            if !is_bijection(g) {
                return Err(parse_err(line, "generator is not a permutation"));
            }
        }
        Ok(self.record)
    }
}

/// Parses catalog text.
pub fn parse_str(text: &str) -> Result<Catalog> {
    let mut catalog = Catalog::default();
    let mut names = BTreeSet::new();
    let mut current: Option<(usize, Pending)> = None;
    let mut seen_record = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.starts_with('#') {
            if !seen_record {
                catalog.header.push(raw.to_string());
            }
            continue;
        }
        if line.is_empty() {
            if let Some((start, p)) = current.take() {
                catalog.records.push(p.finish(start)?);
            }
            continue;
        }
        let (key, value) = match line.split_once(char::is_whitespace) {
            Some((k, v)) => (k, v.trim()),
            None => (line, ""),
        };
        if key == "group" {
            if let Some((start, p)) = current.take() {
                catalog.records.push(p.finish(start)?);
            }
            if value.is_empty() || value.contains(char::is_whitespace) {
                return Err(parse_err(line_no, "group name must be a single word"));
            }
            if !names.insert(value.to_string()) {
                return Err(parse_err(line_no, format!("duplicate group name {value}")));
            }
            seen_record = true;
            current = Some((
                line_no,
                Pending {
                    record: GroupRecord {
                        name: value.to_string(),
                        degree: 0,
                        generators: Vec::new(),
                        expected_order: None,
                        tags: Vec::new(),
                    },
                    degree_line: None,
                    gen_lines: Vec::new(),
                },
            ));
            continue;
        }
        let Some((_, p)) = current.as_mut() else {
            return Err(parse_err(line_no, format!("{key} outside of a group record")));
        };
        match key {
            "degree" => {
                if p.degree_line.is_some() {
                    return Err(parse_err(line_no, "repeated degree"));
                }
                p.record.degree = parse_positive(value, line_no, "degree")?;
                p.degree_line = Some(line_no);
            }
            "gen" => {
                let images = value
                    .split(',')
                    .map(|s| {
                        s.trim().parse::<usize>().map_err(|_| {
                            parse_err(line_no, format!("bad image {:?}", s.trim()))
                        })
                    })
                    .collect::<Result<Vec<usize>>>()?;
                p.record.generators.push(images);
                p.gen_lines.push(line_no);
            }
            "order" => {
                if p.record.expected_order.is_some() {
                    return Err(parse_err(line_no, "repeated order"));
                }
                p.record.expected_order = Some(parse_positive(value, line_no, "order")?);
            }
            "tag" => {
                if value.is_empty() || value.contains(char::is_whitespace) {
                    return Err(parse_err(line_no, "tag must be a single word"));
                }
                p.record.tags.push(value.to_string());
            }
            other => {
                let msg = format!("line {line_no}: ignoring unknown directive {other:?}");
                warn!("{msg}");
                catalog.warnings.push(msg);
            }
        }
    }
    if let Some((start, p)) = current.take() {
        catalog.records.push(p.finish(start)?);
    }
    Ok(catalog)
}

fn io_err(path: &Path, e: std::io::Error) -> Error {
    Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

/// Parses one catalog file.
pub fn parse_catalog(path: impl AsRef<Path>) -> Result<Catalog> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    let mut catalog = parse_str(&text).map_err(|e| match e {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })?;
    catalog.source = Some(path.to_path_buf());
    Ok(catalog)
}

/// Every `*.grp` file of a directory in file name order, or the single
/// file when `path` is a file.
pub fn catalog_files(path: impl AsRef<Path>) -> Result<Vec<PathBuf>> {
    let path = path.as_ref();
    if path.is_file() {
        return Ok(vec![path.to_path_buf()]);
    }
    let mut files: Vec<PathBuf> = fs::read_dir(path)
        .map_err(|e| io_err(path, e))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "grp"))
        .collect();
    files.sort();
    Ok(files)
}

/// Parses a file or every catalog file in a directory.
pub fn parse_path(path: impl AsRef<Path>) -> Result<Vec<Catalog>> {
    catalog_files(path)?.iter().map(parse_catalog).collect()
}

/// Closes the record's generators, checking the expected order.
pub fn load_group(record: &GroupRecord, file: &str, cap: usize) -> Result<FiniteGroup> {
    let group = close_permutations(record.degree, &record.generators, cap)?;
    if let Some(expected) = record.expected_order {
        if group.order() != expected {
            return Err(Error::OrderMismatch {
                name: record.name.clone(),
                expected,
                actual: group.order(),
            });
        }
    }
    Ok(group.with_name(record.name.clone()).with_origin(Origin::Catalog {
        file: file.to_string(),
        record: record.name.clone(),
    }))
}

/// One line of a catalog manifest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifestEntry {
    pub order: Option<usize>,
    pub count: usize,
    pub file: String,
}

/// Reads `order <n> count <c> file <f>` and `extra count <c> file <f>`
/// lines; `#` lines are provenance notes.
pub fn parse_manifest(text: &str) -> Result<Vec<ManifestEntry>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let words: Vec<&str> = line.split_whitespace().collect();
        let entry = match words.as_slice() {
            ["order", n, "count", c, "file", f] => ManifestEntry {
                order: Some(parse_positive(n, line_no, "order")?),
                count: parse_positive(c, line_no, "count")?,
                file: f.to_string(),
            },
            ["extra", "count", c, "file", f] => ManifestEntry {
                order: None,
                count: parse_positive(c, line_no, "count")?,
                file: f.to_string(),
            },
            _ => return Err(parse_err(line_no, format!("bad manifest line {line:?}"))),
        };
        out.push(entry);
    }
    Ok(out)
}
