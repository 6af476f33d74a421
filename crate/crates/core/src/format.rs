//! Colored-graph text format.
//!
//! ```text
//! p rcg <n> <r>
//! # comment
//! e <u> <v> <c>     (0 <= u < v < n, 1 <= c <= r)
//! ```
//!
//! Uncolored graphs use `r = 0` and bare `e <u> <v>` lines.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::color::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug)]
pub struct ColoredGraphFile {
    pub graph: Graph,
    /// None for `r = 0` files.
    pub coloring: Option<EdgeColoring>,
}

pub fn write_colored(g: &Graph, coloring: Option<&EdgeColoring>, comments: &[String]) -> String {
    let r = coloring.map_or(0, |c| c.r());
    let mut out = String::new();
    let _ = writeln!(out, "p rcg {} {}", g.n(), r);
    for line in comments {
        let _ = writeln!(out, "# {line}");
    }
    for (u, v) in g.edges() {
        match coloring {
            Some(col) => {
                let _ = writeln!(
                    out,
                    "e {u} {v} {}",
                    col.color(u, v).expect("coloring covers graph")
                );
            }
            None => {
                let _ = writeln!(out, "e {u} {v}");
            }
        }
    }
    out
}

pub fn write_colored_file(
    path: &Path,
    g: &Graph,
    coloring: Option<&EdgeColoring>,
    comments: &[String],
) -> Result<()> {
    fs::write(path, write_colored(g, coloring, comments)).map_err(|e| Error::io(path, e))
}

pub fn read_colored_str(text: &str, source: &str) -> Result<ColoredGraphFile> {
    let mut header: Option<(usize, u32)> = None;
    let mut edges: Vec<(usize, usize, u8)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(Error::parse(source, lineno, "duplicate p line"));
                }
                if fields.len() != 4 || fields[1] != "rcg" {
                    return Err(Error::parse(source, lineno, "expected `p rcg <n> <r>`"));
                }
                let n: usize = fields[2].parse().map_err(|_| {
                    Error::parse(source, lineno, format!("bad vertex count `{}`", fields[2]))
                })?;
                let r: u32 = fields[3].parse().map_err(|_| {
                    Error::parse(source, lineno, format!("bad color count `{}`", fields[3]))
                })?;
                header = Some((n, r));
            }
            "e" => {
                let (n, r) =
                    header.ok_or_else(|| Error::parse(source, lineno, "e line before p line"))?;
                let want = if r == 0 { 3 } else { 4 };
                if fields.len() != want {
                    return Err(Error::parse(
                        source,
                        lineno,
                        format!("expected {} fields on e line", want),
                    ));
                }
                let u: usize = fields[1].parse().map_err(|_| {
                    Error::parse(source, lineno, format!("bad vertex `{}`", fields[1]))
                })?;
                let v: usize = fields[2].parse().map_err(|_| {
                    Error::parse(source, lineno, format!("bad vertex `{}`", fields[2]))
                })?;
                if u >= v || v >= n {
                    return Err(Error::parse(
                        source,
                        lineno,
                        format!("edge needs 0 <= u < v < {n}, got {u} {v}"),
                    ));
                }
                let c: u8 = if r == 0 {
                    0
                } else {
                    let c: u8 = fields[3].parse().map_err(|_| {
                        Error::parse(source, lineno, format!("bad color `{}`", fields[3]))
                    })?;
                    if c < 1 || u32::from(c) > r {
                        return Err(Error::parse(
                            source,
                            lineno,
                            format!("color {c} outside 1..={r}"),
                        ));
                    }
                    c
                };
                edges.push((u, v, c));
            }
            other => {
                return Err(Error::parse(
                    source,
                    lineno,
                    format!("unknown line tag `{other}`"),
                ));
            }
        }
    }
    let (n, r) = header
        .ok_or_else(|| Error::parse(source, text.lines().count().max(1), "missing p line"))?;
    let mut graph = Graph::new(n);
    let mut colors = BTreeMap::new();
    for &(u, v, c) in &edges {
        if !graph.add_edge(u, v) {
            return Err(Error::parse(source, 0, format!("duplicate edge {u} {v}")));
        }
        colors.insert((u, v), c);
    }
    let coloring = if r == 0 {
        None
    } else {
        Some(EdgeColoring::from_fn(&graph, r, |u, v| colors[&(u, v)])?)
    };
    Ok(ColoredGraphFile { graph, coloring })
}

pub fn read_colored_file(path: &Path) -> Result<ColoredGraphFile> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    read_colored_str(&text, &path.display().to_string())
}
