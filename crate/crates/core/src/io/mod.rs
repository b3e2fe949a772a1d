//! Graph ingestion and report emission.

pub mod edgelist;
pub mod graph6;
pub mod report;

use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFormat::Graph6 => "graph6",
            GraphFormat::EdgeList => "edgelist",
        })
    }
}

/// A parsed graph with the place it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: Graph,
    /// `<source>:<index>`, the index counting graphs within the source.
    pub source_id: String,
    pub format: GraphFormat,
}

impl GraphDocument {
    /// Serializes the graph back into its own format.
    pub fn emit(&self) -> String {
        match self.format {
            GraphFormat::Graph6 => graph6::emit(&self.graph),
            GraphFormat::EdgeList => edgelist::emit(&self.graph),
        }
    }
}

/// Guesses the format of `text`: a first content line of two integers is an
/// edge list header, anything else is graph6.
pub fn detect_format(text: &str) -> GraphFormat {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(line) if line.starts_with(graph6::HEADER) => GraphFormat::Graph6,
        Some(line) => {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() == 2 && fields.iter().all(|f| f.parse::<usize>().is_ok()) {
                GraphFormat::EdgeList
            } else {
                GraphFormat::Graph6
            }
        }
        None => GraphFormat::Graph6,
    }
}

/// Parses a whole input: one graph per line for graph6, a single graph for an
/// edge list.
pub fn parse_documents(text: &str, source: &str, format: Option<GraphFormat>) -> Result<Vec<GraphDocument>> {
    let format = format.unwrap_or_else(|| detect_format(text));
    match format {
        GraphFormat::EdgeList => Ok(vec![GraphDocument {
            graph: edgelist::parse_edgelist(text)?,
            source_id: format!("{source}:0"),
            format,
        }]),
        GraphFormat::Graph6 => {
            let mut docs = Vec::new();
            for line in text.lines() {
                let line = line.trim_end_matches('\r');
                if line.is_empty() {
                    continue;
                }
                let graph = graph6::parse_graph6(line.as_bytes())?;
                docs.push(GraphDocument {
                    graph,
                    source_id: format!("{source}:{}", docs.len()),
                    format,
                });
            }
            Ok(docs)
        }
    }
}

/// Reads a graph argument: `g6:<code>` is an inline graph6 string, anything
/// else a file path. Files ending in `.g6` or `.graph6` are always graph6.
pub fn load_graphs(arg: &str, format: Option<GraphFormat>) -> Result<Vec<GraphDocument>> {
    if let Some(code) = arg.strip_prefix("g6:") {
        return parse_documents(code, "inline", Some(GraphFormat::Graph6));
    }
    let path = Path::new(arg);
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{arg}: {e}")))?;
    let by_ext = match path.extension().and_then(|e| e.to_str()) {
        Some("g6") | Some("graph6") => Some(GraphFormat::Graph6),
        _ => None,
    };
    parse_documents(&text, arg, format.or(by_ext))
}
