//! CSV artifacts: `# key=value` metadata lines in key order, a header row,
//! then data rows. Floats use 17 significant digits; lines end in LF.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::experiments::ScanResult;
use crate::exponents::RieszDiagram;

pub const SCAN_HEADER: [&str; 6] = ["param", "lhs", "rhs", "ratio", "log2_param", "log2_ratio"];
pub const DIAGRAM_HEADER: [&str; 4] = ["inv_r", "inv_q", "decision", "case"];

/// Float rendering shared by every artifact.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// A parsed artifact.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CsvTable {
    pub metadata: BTreeMap<String, String>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl CsvTable {
    pub fn new(metadata: BTreeMap<String, String>, header: &[&str]) -> Self {
        CsvTable {
            metadata,
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn write(&self, out: impl Write) -> io::Result<()> {
        let mut out = BufWriter::new(out);
        for (k, v) in &self.metadata {
            writeln!(out, "# {k}={v}")?;
        }
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(&mut out);
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        w.flush()?;
        drop(w);
        out.flush()
    }

    pub fn to_string_lossy(&self) -> String {
        let mut buf = Vec::new();
        self.write(&mut buf).expect("writing to memory");
        String::from_utf8_lossy(&buf).into_owned()
    }

    /// Inverse of [`CsvTable::write`].
    pub fn parse(text: &str) -> Result<Self> {
        let bad = |reason: &str| Error::Parse { input: "csv artifact".into(), reason: reason.into() };
        let mut metadata = BTreeMap::new();
        let mut body_start = 0;
        for line in text.split_inclusive('\n') {
            let Some(rest) = line.strip_prefix("# ") else { break };
            let (k, v) = rest
                .trim_end_matches('\n')
                .split_once('=')
                .ok_or_else(|| bad("metadata line without '='"))?;
            metadata.insert(k.to_owned(), v.to_owned());
            body_start += line.len();
        }
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(true)
            .from_reader(&text.as_bytes()[body_start..]);
        let header = reader
            .headers()
            .map_err(|e| bad(&e.to_string()))?
            .iter()
            .map(str::to_owned)
            .collect();
        let rows = reader
            .records()
            .map(|r| r.map(|rec| rec.iter().map(str::to_owned).collect()))
            .collect::<std::result::Result<Vec<Vec<String>>, _>>()
            .map_err(|e| bad(&e.to_string()))?;
        Ok(CsvTable { metadata, header, rows })
    }
}

pub fn scan_table(result: &ScanResult) -> CsvTable {
    let mut t = CsvTable::new(result.metadata.clone(), &SCAN_HEADER);
    t.rows = result
        .samples
        .iter()
        .map(|s| {
            [s.param, s.lhs, s.rhs, s.ratio, s.param.log2(), s.ratio.log2()]
                .into_iter()
                .map(fmt_f64)
                .collect()
        })
        .collect();
    t
}

pub fn diagram_table(d: &RieszDiagram) -> CsvTable {
    let mut t = CsvTable::new(d.metadata(), &DIAGRAM_HEADER);
    t.rows = d
        .rows
        .iter()
        .map(|row| {
            vec![
                row.inv_r.to_string(),
                row.inv_q.to_string(),
                row.verdict.decision().name().to_owned(),
                row.verdict.detail().to_owned(),
            ]
        })
        .collect();
    t
}

/// Writes `table` to `path`, reporting the path on failure.
pub fn write_csv(table: &CsvTable, path: &Path) -> Result<()> {
    let io_err = |source| Error::Io { path: path.to_owned(), source };
    let file = File::create(path).map_err(io_err)?;
    table.write(file).map_err(io_err)
}
