//! Edge-list text format and DOT export.
//!
//! Edge-list: first line `n m`, then `m` lines `u v` (0-based, one arc per
//! line). `#` starts a comment; blank lines are ignored.

use super::{Digraph, GraphError};
use std::io::{self, BufRead, Write};

pub fn read_edge_list(reader: impl BufRead) -> Result<Digraph, GraphError> {
    let mut lines = reader.lines().filter_map(|line| {
        let line = match line {
            Ok(line) => line,
            Err(e) => return Some(Err(GraphError::Parse(e.to_string()))),
        };
        let content = line.split('#').next().unwrap_or("").trim().to_string();
        if content.is_empty() {
            None
        } else {
            Some(Ok(content))
        }
    });

    let header = lines
        .next()
        .ok_or_else(|| GraphError::Parse("missing 'n m' header line".into()))??;
    let mut parts = header.split_whitespace();
    let n: usize = parse_field(parts.next(), "n")?;
    let m: usize = parse_field(parts.next(), "m")?;
    if parts.next().is_some() {
        return Err(GraphError::Parse(format!(
            "header line has trailing tokens: {header:?}"
        )));
    }

    let mut arcs = Vec::with_capacity(m);
    for _ in 0..m {
        let line = lines
            .next()
            .ok_or_else(|| GraphError::Parse(format!("expected {m} arc lines")))??;
        let mut parts = line.split_whitespace();
        let u: usize = parse_field(parts.next(), "u")?;
        let v: usize = parse_field(parts.next(), "v")?;
        if parts.next().is_some() {
            return Err(GraphError::Parse(format!(
                "arc line has trailing tokens: {line:?}"
            )));
        }
        arcs.push((u, v));
    }
    if let Some(extra) = lines.next() {
        return Err(GraphError::Parse(format!(
            "unexpected content after {m} arcs: {:?}",
            extra?
        )));
    }
    Digraph::from_arcs(n, arcs)
}

fn parse_field(token: Option<&str>, name: &str) -> Result<usize, GraphError> {
    let token = token.ok_or_else(|| GraphError::Parse(format!("missing field {name}")))?;
    token
        .parse()
        .map_err(|_| GraphError::Parse(format!("invalid {name}: {token:?}")))
}

pub fn write_edge_list(d: &Digraph, mut writer: impl Write) -> io::Result<()> {
    writeln!(writer, "{} {}", d.n(), d.arc_count())?;
    for (u, v) in d.arcs() {
        writeln!(writer, "{u} {v}")?;
    }
    Ok(())
}

pub fn write_dot(d: &Digraph, mut writer: impl Write) -> io::Result<()> {
    writeln!(writer, "digraph D {{")?;
    for v in d.vertices() {
        writeln!(writer, "    {v};")?;
    }
    for (u, v) in d.arcs() {
        writeln!(writer, "    {u} -> {v};")?;
    }
    writeln!(writer, "}}")
}
