//! Text formats for graphs, orientations and plans.
//!
//! * graph: first line `n m`, then `m` lines `u v` with `0 ≤ u < v < n`;
//!   blank lines and lines starting with `#` are skipped;
//! * orientation: one line of `m` characters over `{0,1}`, bit `i` set when
//!   edge `i` runs from its smaller to its larger label;
//! * plan: JSON object `{"steps": [[..], ..], "p": .., "provenance": ..}`.
//!
//! Parsing checks syntax and shape only. Whether a plan respects its cap is
//! the job of [`crate::verify_plan`].

use std::fs;
use std::path::Path;

use crate::bits::BitVector;
use crate::error::{Error, Result};
use crate::graph::{InversionPlan, LabelledGraph, Orientation};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn two_numbers(line: usize, s: &str) -> Result<(usize, usize)> {
    let fields: Vec<&str> = s.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(parse_err(line, format!("expected two integers, found {:?}", s)));
    }
    let num = |f: &str| f.parse::<usize>().map_err(|_| parse_err(line, format!("{f:?} is not a nonnegative integer")));
    Ok((num(fields[0])?, num(fields[1])?))
}

pub fn parse_graph(text: &str) -> Result<LabelledGraph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "empty graph file"))?;
    let (n, m) = two_numbers(hl, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = hl;
    for (line, s) in lines {
        let (u, v) = two_numbers(line, s)?;
        if u >= v {
            return Err(parse_err(line, format!("edge ({u}, {v}) must be written with u < v")));
        }
        if v >= n {
            return Err(parse_err(line, format!("vertex {v} out of range for n = {n}")));
        }
        if edges.len() == m {
            return Err(parse_err(line, format!("more than the declared {m} edges")));
        }
        edges.push((u, v));
        last_line = line;
    }
    if edges.len() != m {
        return Err(parse_err(last_line, format!("declared {m} edges, found {}", edges.len())));
    }
    LabelledGraph::new(n, &edges).map_err(|e| parse_err(last_line, e.to_string()))
}

/// Lines in canonical (sorted) edge order.
pub fn format_graph(g: &LabelledGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses an orientation; `m`, when given, is the required length.
pub fn parse_orientation(text: &str, m: Option<usize>) -> Result<Orientation> {
    let mut lines = content_lines(text);
    let (line, s) = match lines.next() {
        Some(x) => x,
        // the only orientation of an edgeless graph
        None if m.unwrap_or(0) == 0 => return Ok(Orientation::zeros(0)),
        None => return Err(parse_err(1, "empty orientation file")),
    };
    if let Some((extra, _)) = lines.next() {
        return Err(parse_err(extra, "orientation must be a single line"));
    }
    let mut bits = Vec::with_capacity(s.len());
    for (i, c) in s.chars().enumerate() {
        match c {
            '0' => bits.push(false),
            '1' => bits.push(true),
            other => return Err(parse_err(line, format!("character {} is {other:?}, expected 0 or 1", i + 1))),
        }
    }
    if let Some(m) = m {
        if bits.len() != m {
            return Err(parse_err(line, format!("orientation has {} bits, graph has {m} edges", bits.len())));
        }
    }
    Ok(Orientation::new(BitVector::from_bools(bits)))
}

pub fn format_orientation(o: &Orientation) -> String {
    format!("{}\n", o.bits())
}

pub fn parse_plan(text: &str) -> Result<InversionPlan> {
    serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))
}

/// JSON with one step per line.
pub fn format_plan(plan: &InversionPlan) -> String {
    let steps: Vec<String> = plan
        .steps
        .iter()
        .map(|s| format!("    {}", serde_json::to_string(s).expect("steps serialize")))
        .collect();
    let body = if steps.is_empty() {
        "[]".to_string()
    } else {
        format!("[\n{}\n  ]", steps.join(",\n"))
    };
    format!(
        "{{\n  \"p\": {},\n  \"provenance\": {},\n  \"steps\": {body}\n}}\n",
        plan.p,
        serde_json::Value::from(plan.provenance.as_str())
    )
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

fn with_path<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { line, msg } => Error::Parse {
            line,
            msg: format!("{}: {msg}", path.display()),
        },
        other => other,
    })
}

pub fn read_graph(path: &Path) -> Result<LabelledGraph> {
    with_path(path, parse_graph(&read(path)?))
}

pub fn read_orientation(path: &Path, m: Option<usize>) -> Result<Orientation> {
    with_path(path, parse_orientation(&read(path)?, m))
}

pub fn read_plan(path: &Path) -> Result<InversionPlan> {
    with_path(path, parse_plan(&read(path)?))
}

pub fn write_graph(path: &Path, g: &LabelledGraph) -> Result<()> {
    Ok(fs::write(path, format_graph(g))?)
}

pub fn write_orientation(path: &Path, o: &Orientation) -> Result<()> {
    Ok(fs::write(path, format_orientation(o))?)
}

pub fn write_plan(path: &Path, plan: &InversionPlan) -> Result<()> {
    Ok(fs::write(path, format_plan(plan))?)
}

/// Parses each text, serializes the value and parses it again; true when
/// both parses agree. Parse errors of the original text are returned.
pub fn roundtrip(graph: &str, orientation: Option<&str>, plan: Option<&str>) -> Result<bool> {
    let g = parse_graph(graph)?;
    let mut same = parse_graph(&format_graph(&g))? == g;
    if let Some(text) = orientation {
        let o = parse_orientation(text, Some(g.m()))?;
        same &= parse_orientation(&format_orientation(&o), Some(g.m()))? == o;
    }
    if let Some(text) = plan {
        let p = parse_plan(text)?;
        same &= parse_plan(&format_plan(&p))? == p;
    }
    Ok(same)
}
