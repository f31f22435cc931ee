//! Table documents: generation, CSV/JSON/Markdown rendering, parsing, and
//! comparison of fixture files against the recurrence engine.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::triangles::{Kind, Params};
use crate::{Cell, Count, Triangles};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub n: u32,
    pub k: u32,
    /// Exact decimal digits.
    pub value: String,
}

/// A rectangular slice of one triangle, rows `n_range.0 ..= n_range.1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub kind: Kind,
    pub r: u32,
    pub s: u32,
    pub n_range: (u32, u32),
    pub provenance: String,
    pub entries: Vec<Entry>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Markdown,
}

impl TableDocument {
    /// Every in-domain cell of rows `n_min ..= n_max`.
    pub fn generate(store: &Triangles, p: &Params, n_min: u32, n_max: u32) -> Self {
        let entries = (n_min..=n_max)
            .flat_map(|n| {
                store.row(p, n).into_iter().map(move |(k, v)| Entry {
                    n,
                    k,
                    value: v.to_string(),
                })
            })
            .collect();
        TableDocument {
            kind: p.kind(),
            r: p.r(),
            s: p.s(),
            n_range: (n_min, n_max),
            provenance: format!("generated by the recurrence engine: {p}"),
            entries,
        }
    }

    pub fn params(&self) -> Result<Params> {
        Params::new(self.kind, self.r, self.s)
    }

    /// Canonical fixture file name, `{kind}_r{r}_s{s}.csv`.
    pub fn file_name(&self) -> String {
        format!("{}_r{}_s{}.csv", self.kind.as_str(), self.r, self.s)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
            Format::Markdown => self.to_markdown(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# {}", self.provenance).unwrap();
        writeln!(
            out,
            "# kind={} r={} s={} n_min={} n_max={}",
            self.kind.as_str(),
            self.r,
            self.s,
            self.n_range.0,
            self.n_range.1
        )
        .unwrap();
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer
            .write_record(["n", "k", "value"])
            .expect("in-memory write");
        for e in &self.entries {
            writer
                .write_record([e.n.to_string(), e.k.to_string(), e.value.clone()])
                .expect("in-memory write");
        }
        let body = writer.into_inner().expect("in-memory flush");
        out.push_str(&String::from_utf8(body).expect("ascii"));
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data");
        s.push('\n');
        s
    }

    /// Rows `n`, columns `k`; cells outside the domain are left blank.
    pub fn to_markdown(&self) -> String {
        let mut ks: Vec<u32> = self.entries.iter().map(|e| e.k).collect();
        ks.sort_unstable();
        ks.dedup();
        let mut out = String::new();
        writeln!(out, "{}", self.provenance).unwrap();
        writeln!(out).unwrap();
        write!(out, "| n \\ k |").unwrap();
        for k in &ks {
            write!(out, " {k} |").unwrap();
        }
        writeln!(out).unwrap();
        write!(out, "|---:|").unwrap();
        for _ in &ks {
            write!(out, "---:|").unwrap();
        }
        writeln!(out).unwrap();
        for n in self.n_range.0..=self.n_range.1 {
            let row: Vec<&Entry> = self.entries.iter().filter(|e| e.n == n).collect();
            if row.is_empty() {
                continue;
            }
            write!(out, "| {n} |").unwrap();
            for k in &ks {
                match row.iter().find(|e| e.k == *k) {
                    Some(e) => write!(out, " {} |", e.value).unwrap(),
                    None => write!(out, " |").unwrap(),
                }
            }
            writeln!(out).unwrap();
        }
        out
    }

    pub fn parse_json(text: &str, origin: &Path) -> Result<Self> {
        let doc: TableDocument =
            serde_json::from_str(text).map_err(|e| malformed(origin, e.to_string()))?;
        doc.validate(origin)?;
        Ok(doc)
    }

    /// Reads the CSV layout written by [`to_csv`](Self::to_csv): a provenance
    /// comment, a `kind=.. r=.. s=.. n_min=.. n_max=..` comment, then `n,k,value`.
    pub fn parse_csv(text: &str, origin: &Path) -> Result<Self> {
        let mut lines = text.lines();
        let provenance = lines
            .next()
            .and_then(|l| l.strip_prefix('#'))
            .ok_or_else(|| malformed(origin, "first line must be a # provenance comment"))?
            .trim()
            .to_string();
        let meta = lines
            .next()
            .and_then(|l| l.strip_prefix('#'))
            .ok_or_else(|| malformed(origin, "second line must be a # kind=.. comment"))?;
        let field = |name: &str| -> Result<&str> {
            meta.split_whitespace()
                .find_map(|kv| kv.strip_prefix(name).and_then(|v| v.strip_prefix('=')))
                .ok_or_else(|| malformed(origin, format!("missing {name}= in metadata")))
        };
        let number = |name: &str| -> Result<u32> {
            field(name)?
                .parse()
                .map_err(|_| malformed(origin, format!("{name} is not a nonnegative integer")))
        };
        let kind: Kind = field("kind")?
            .parse()
            .map_err(|_| malformed(origin, "unknown kind"))?;
        let (r, s) = (number("r")?, number("s")?);
        let n_range = (number("n_min")?, number("n_max")?);

        let body: String = lines.collect::<Vec<_>>().join("\n");
        let mut reader = csv::Reader::from_reader(body.as_bytes());
        let headers = reader
            .headers()
            .map_err(|e| malformed(origin, e.to_string()))?;
        if headers.iter().collect::<Vec<_>>() != ["n", "k", "value"] {
            return Err(malformed(origin, "header must be n,k,value"));
        }
        let mut entries = Vec::new();
        for (line, record) in reader.records().enumerate() {
            let record = record.map_err(|e| malformed(origin, e.to_string()))?;
            let cell = |i: usize| record.get(i).unwrap_or("").trim();
            let at = line + 4;
            let n = cell(0)
                .parse()
                .map_err(|_| malformed(origin, format!("line {at}: bad n")))?;
            let k = cell(1)
                .parse()
                .map_err(|_| malformed(origin, format!("line {at}: bad k")))?;
            let value = cell(2).to_string();
            entries.push(Entry { n, k, value });
        }
        let doc = TableDocument {
            kind,
            r,
            s,
            n_range,
            provenance,
            entries,
        };
        doc.validate(origin)?;
        Ok(doc)
    }

    fn validate(&self, origin: &Path) -> Result<()> {
        if self.s == 0 {
            return Err(malformed(origin, "s must be at least 1"));
        }
        if self.n_range.0 > self.n_range.1 {
            return Err(malformed(origin, "n_min exceeds n_max"));
        }
        for e in &self.entries {
            if e.value.is_empty() || !e.value.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed(
                    origin,
                    format!(
                        "({}, {}): value {:?} is not a decimal integer",
                        e.n, e.k, e.value
                    ),
                ));
            }
            if e.n < self.n_range.0 || e.n > self.n_range.1 {
                return Err(malformed(
                    origin,
                    format!("row {} outside the declared range", e.n),
                ));
            }
        }
        if self
            .entries
            .windows(2)
            .any(|w| (w[0].n, w[0].k) >= (w[1].n, w[1].k))
        {
            return Err(malformed(
                origin,
                "entries must be sorted by (n, k) without repeats",
            ));
        }
        Ok(())
    }
}

fn malformed(origin: &Path, msg: impl Into<String>) -> Error {
    Error::Malformed {
        path: origin.to_path_buf(),
        msg: msg.into(),
    }
}

/// A fixture cell whose printed value differs from the engine.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellDiff {
    pub file: String,
    pub n: u32,
    pub k: u32,
    pub expected: String,
    pub computed: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixtureSummary {
    pub file: String,
    pub cells: usize,
    pub mismatches: Vec<CellDiff>,
}

/// Recomputes every cell of a fixture document.
pub fn check_document(
    store: &Triangles,
    doc: &TableDocument,
    file: &str,
) -> Result<FixtureSummary> {
    let p = doc.params()?;
    let mut mismatches = Vec::new();
    for e in &doc.entries {
        let computed: Count = store.value(&p, Cell::new(e.n, e.k));
        let computed = computed.to_string();
        if computed != e.value {
            mismatches.push(CellDiff {
                file: file.to_string(),
                n: e.n,
                k: e.k,
                expected: e.value.clone(),
                computed,
            });
        }
    }
    Ok(FixtureSummary {
        file: file.to_string(),
        cells: doc.entries.len(),
        mismatches,
    })
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Loads one fixture and checks that its name matches its metadata.
pub fn load_fixture(path: &Path) -> Result<TableDocument> {
    let doc = TableDocument::parse_csv(&read(path)?, path)?;
    let name = path
        .file_name()
        .and_then(|n| n.to_str())
        .unwrap_or_default();
    if name != doc.file_name() {
        return Err(malformed(
            path,
            format!("file name should be {}", doc.file_name()),
        ));
    }
    Ok(doc)
}

/// Checks a single fixture file, or every `*.csv` in a directory in name order.
pub fn check_fixtures(store: &Triangles, path: &Path) -> Result<Vec<FixtureSummary>> {
    let files: Vec<PathBuf> = if path.is_dir() {
        let listing = fs::read_dir(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let mut files = Vec::new();
        for item in listing {
            let item = item.map_err(|source| Error::Io {
                path: path.to_path_buf(),
                source,
            })?;
            let p = item.path();
            if p.extension().is_some_and(|e| e == "csv") {
                files.push(p);
            }
        }
        files.sort();
        files
    } else {
        vec![path.to_path_buf()]
    };
    files
        .iter()
        .map(|f| {
            let doc = load_fixture(f)?;
            let name = f.file_name().and_then(|n| n.to_str()).unwrap_or_default();
            check_document(store, &doc, name)
        })
        .collect()
}
