//! DIMACS-style `.col` graph files.
//!
//! Accepted lines: `c` comments, one `p edge <n> <m>` header, and
//! `e <u> <v>` edges with 1-based endpoints. Output is canonical:
//! header first, then edges sorted with `u < v`.

use std::fmt;
use treehunt_core::graph::{build_graph, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if n.is_some() {
                    return Err(err(line_no, "duplicate problem line"));
                }
                if fields.len() != 4 || fields[1] != "edge" {
                    return Err(err(
                        line_no,
                        "malformed problem line, expected 'p edge <n> <m>'",
                    ));
                }
                let count: usize = fields[2]
                    .parse()
                    .map_err(|_| err(line_no, format!("bad vertex count '{}'", fields[2])))?;
                fields[3]
                    .parse::<usize>()
                    .map_err(|_| err(line_no, format!("bad edge count '{}'", fields[3])))?;
                n = Some(count);
            }
            "e" => {
                let n = n.ok_or_else(|| err(line_no, "edge before problem line"))?;
                if fields.len() != 3 {
                    return Err(err(line_no, "malformed edge line, expected 'e <u> <v>'"));
                }
                let endpoint = |s: &str| -> Result<usize, ParseError> {
                    let v: usize = s
                        .parse()
                        .map_err(|_| err(line_no, format!("bad vertex '{s}'")))?;
                    if v == 0 || v > n {
                        return Err(err(line_no, format!("vertex {v} out of range 1..={n}")));
                    }
                    Ok(v - 1)
                };
                let u = endpoint(fields[1])?;
                let v = endpoint(fields[2])?;
                if u == v {
                    return Err(err(line_no, format!("self-loop at vertex {}", u + 1)));
                }
                edges.push((u, v));
            }
            other => return Err(err(line_no, format!("unrecognized line kind '{other}'"))),
        }
    }

    let n = n.ok_or_else(|| err(text.lines().count() + 1, "missing problem line"))?;
    build_graph(n, &edges).map_err(|e| err(0, e.to_string()))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}
