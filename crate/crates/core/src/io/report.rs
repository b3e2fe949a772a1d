//! Reports in two renderings: aligned text tables and one JSON object per
//! line. Both are produced from the same serialized records, so they carry
//! the same values.
//!
//! Record stream layout:
//!
//! ```text
//! {"kind":"command","command":"msc verify ...","config":{...}}
//! {"kind":"pair", ...}            one line per record
//! {"kind":"summary","counts":{...}}
//! ```

use std::collections::BTreeMap;
use std::io::{self, Write};

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::delta::{DeltaValue, Sign};
use crate::graph::Distance;
use crate::paths::ParityClass;
use crate::verify::{CounterexampleRecord, IdentityFailure, PairVerdict, SetVerdict, Tally};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Table,
    Records,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Record {
    Sigma {
        graph: String,
        n: usize,
        m: usize,
        sigma: String,
    },
    Delta {
        graph: String,
        a: VertexSet,
        b: VertexSet,
        delta: DeltaValue,
        sign: Sign,
        /// Only for single-vertex sets.
        distance: Option<Distance>,
        parity: ParityClass,
    },
    Path {
        graph: String,
        index: usize,
        length: usize,
        vertices: Vec<usize>,
    },
    Parity {
        graph: String,
        a: VertexSet,
        b: VertexSet,
        paths: usize,
        parity: ParityClass,
    },
    Classification {
        graph: String,
        n: usize,
        m: usize,
        bipartite: bool,
        /// `None` above the recognition cap.
        parity: Option<bool>,
    },
    Pair(PairVerdict),
    Set(SetVerdict),
    Identity {
        graph: String,
        identity: String,
        #[serde(flatten)]
        tally: Tally,
    },
    IdentityFailure(IdentityFailure),
    Counterexample(CounterexampleRecord),
    Timing {
        family: String,
        size: usize,
        n: usize,
        m: usize,
        sigma: String,
        seconds: f64,
    },
}

impl Record {
    pub fn kind(&self) -> &'static str {
        match self {
            Record::Sigma { .. } => "sigma",
            Record::Delta { .. } => "delta",
            Record::Path { .. } => "path",
            Record::Parity { .. } => "parity",
            Record::Classification { .. } => "classification",
            Record::Pair(_) => "pair",
            Record::Set(_) => "set",
            Record::Identity { .. } => "identity",
            Record::IdentityFailure(_) => "identity-failure",
            Record::Counterexample(_) => "counterexample",
            Record::Timing { .. } => "timing",
        }
    }

    /// True for verdicts that contradict their prediction.
    pub fn is_violation(&self) -> bool {
        match self {
            Record::Pair(p) => !p.conforms,
            Record::Set(s) => s.conforms == Some(false),
            Record::IdentityFailure(_) | Record::Counterexample(_) => true,
            _ => false,
        }
    }

    fn to_object(&self) -> Map<String, Value> {
        match serde_json::to_value(self).expect("records serialize") {
            Value::Object(map) => map,
            _ => unreachable!("records are objects"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub config: BTreeMap<String, Value>,
    pub records: Vec<Record>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            config: BTreeMap::new(),
            records: Vec::new(),
        }
    }

    pub fn config(&mut self, key: &str, value: impl Serialize) {
        self.config
            .insert(key.to_string(), serde_json::to_value(value).expect("config serializes"));
    }

    pub fn violations(&self) -> usize {
        self.records.iter().filter(|r| r.is_violation()).count()
    }

    /// Record counts per kind plus the violation count; always derived from
    /// the records themselves.
    pub fn summary(&self) -> BTreeMap<String, usize> {
        let mut counts = BTreeMap::new();
        for r in &self.records {
            *counts.entry(r.kind().to_string()).or_insert(0) += 1;
        }
        counts.insert("violations".to_string(), self.violations());
        counts
    }

    pub fn write(&self, format: OutputFormat, out: &mut dyn Write) -> io::Result<()> {
        match format {
            OutputFormat::Records => self.write_records(out),
            OutputFormat::Table => self.write_table(out),
        }
    }

    pub fn write_records(&self, out: &mut dyn Write) -> io::Result<()> {
        let head = json!({"kind": "command", "command": self.command, "config": self.config});
        writeln!(out, "{head}")?;
        for r in &self.records {
            writeln!(out, "{}", serde_json::to_string(r).expect("records serialize"))?;
        }
        writeln!(out, "{}", json!({"kind": "summary", "counts": self.summary()}))
    }

    pub fn write_table(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "# {}", self.command)?;
        for (k, v) in &self.config {
            writeln!(out, "#   {k} = {}", render(v))?;
        }
        let mut start = 0;
        while start < self.records.len() {
            let kind = self.records[start].kind();
            let end = self.records[start..]
                .iter()
                .position(|r| r.kind() != kind)
                .map_or(self.records.len(), |p| start + p);
            writeln!(out)?;
            writeln!(out, "[{kind}]")?;
            write_block(&self.records[start..end], out)?;
            start = end;
        }
        writeln!(out)?;
        let summary: Vec<String> = self
            .summary()
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        writeln!(out, "summary: {}", summary.join(" "))
    }
}

fn render(v: &Value) -> String {
    match v {
        Value::Null => "-".to_string(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn write_block(records: &[Record], out: &mut dyn Write) -> io::Result<()> {
    let rows: Vec<Map<String, Value>> = records.iter().map(Record::to_object).collect();
    let header: Vec<String> = rows[0].keys().filter(|k| *k != "kind").cloned().collect();
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|row| header.iter().map(|h| render(&row[h])).collect())
        .collect();
    let widths: Vec<usize> = header
        .iter()
        .enumerate()
        .map(|(i, h)| cells.iter().map(|c| c[i].len()).chain([h.len()]).max().unwrap())
        .collect();
    let line = |vals: &[String]| -> String {
        vals.iter()
            .zip(&widths)
            .map(|(v, w)| format!("{v:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    writeln!(out, "{}", line(&header))?;
    for c in &cells {
        writeln!(out, "{}", line(c))?;
    }
    Ok(())
}
