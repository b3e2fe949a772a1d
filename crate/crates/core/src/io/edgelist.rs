//! Plain edge lists: a header line `n m` followed by `m` lines `u v` with
//! 0-based vertices. Blank lines and lines starting with `#` are ignored.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::EdgeList {
        line,
        message: message.into(),
    }
}

fn two_numbers(line: usize, text: &str) -> Result<(usize, usize)> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(err(line, format!("expected two integers, found {:?}", text)));
    }
    let parse = |f: &str| {
        f.parse::<usize>()
            .map_err(|_| err(line, format!("{f:?} is not a non-negative integer")))
    };
    Ok((parse(fields[0])?, parse(fields[1])?))
}

pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_line, header) = lines.next().ok_or_else(|| err(1, "missing header"))?;
    let (n, m) = two_numbers(header_line, header)?;
    let mut g = Graph::empty(n);
    let mut seen = HashSet::new();
    let mut count = 0;
    let mut last_line = header_line;
    for (line, text) in lines {
        last_line = line;
        count += 1;
        if count > m {
            return Err(err(line, format!("more than the {m} declared edges")));
        }
        let (u, v) = two_numbers(line, text)?;
        if u >= n || v >= n {
            return Err(err(line, format!("vertex {} out of range for n = {n}", u.max(v))));
        }
        if u == v {
            return Err(err(line, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(line, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v)?;
    }
    if count < m {
        return Err(err(last_line, format!("declared {m} edges, found {count}")));
    }
    Ok(g)
}

pub fn emit(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
