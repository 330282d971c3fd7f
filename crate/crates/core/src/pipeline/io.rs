//! Text instance format: `p opd n m`, optional `k b`, `e u v` lines with
//! labels `1..=n`, `c` comments.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

use super::kernel::KernelResult;

/// A parsed instance file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedInstance {
    pub graph: Graph,
    pub k: Option<usize>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Parses the instance format. Labels must lie in `1..=n`; the edge count
/// must match the header.
pub fn parse_instance(text: &str) -> Result<ParsedInstance> {
    let mut header: Option<(usize, usize)> = None;
    let mut graph = Graph::new();
    let mut k = None;
    let mut edges = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let tok: Vec<&str> = raw.split_whitespace().collect();
        let num = |t: &str| t.parse::<usize>().map_err(|_| parse_err(line, format!("expected a number, got {t:?}")));
        match tok.as_slice() {
            [] => {}
            ["c", ..] => {}
            ["p", "opd", n, m] => {
                if header.is_some() {
                    return Err(parse_err(line, "duplicate header"));
                }
                let (n, m) = (num(n)?, num(m)?);
                header = Some((n, m));
                graph = Graph::with_vertices(1..=n as Vertex);
            }
            ["k", b] => {
                if k.is_some() {
                    return Err(parse_err(line, "duplicate budget line"));
                }
                k = Some(num(b)?);
            }
            ["e", u, v] => {
                let Some((n, _)) = header else {
                    return Err(parse_err(line, "edge before the header"));
                };
                let (u, v) = (num(u)?, num(v)?);
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(parse_err(line, format!("label out of range 1..={n}")));
                }
                if u == v {
                    return Err(parse_err(line, "self-loop"));
                }
                if !graph.add_edge(u as Vertex, v as Vertex)? {
                    return Err(parse_err(line, format!("duplicate edge {u} {v}")));
                }
                edges += 1;
            }
            _ => return Err(parse_err(line, format!("unrecognized line {raw:?}"))),
        }
    }
    let Some((_, m)) = header else {
        return Err(parse_err(0, "missing header `p opd n m`"));
    };
    if edges != m {
        return Err(parse_err(0, format!("header announces {m} edges, found {edges}")));
    }
    Ok(ParsedInstance { graph, k })
}

/// Writes `g` with labels compacted to `1..=n` in ascending order of the
/// original labels. Non-identity renamings are listed as `c vertex <new>
/// <old>` lines.
pub fn write_instance(g: &Graph, k: Option<usize>) -> String {
    let mut out = String::new();
    let labels: Vec<Vertex> = g.vertices().collect();
    let new = |v: Vertex| labels.binary_search(&v).expect("vertex of g") + 1;
    writeln!(out, "p opd {} {}", g.vertex_count(), g.edge_count()).unwrap();
    if let Some(k) = k {
        writeln!(out, "k {k}").unwrap();
    }
    for (i, &v) in labels.iter().enumerate() {
        if v as usize != i + 1 {
            writeln!(out, "c vertex {} {v}", i + 1).unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", new(u), new(v)).unwrap();
    }
    out
}

/// Writes a kernelization result: verdict, rule fire counts, trace steps
/// (in input labels) and the output instance.
pub fn write_kernel(result: &KernelResult) -> String {
    let mut out = String::new();
    writeln!(out, "c verdict {}", result.verdict.name()).unwrap();
    if let super::kernel::Verdict::TriviallyNo(h) = result.verdict {
        writeln!(out, "c obstruction {h}").unwrap();
    }
    for (rule, count) in &result.stats.fires.0 {
        writeln!(out, "c rule-fires {rule} {count}").unwrap();
    }
    for step in result.trace.steps() {
        writeln!(out, "c trace {step}").unwrap();
    }
    out.push_str(&write_instance(&result.g_out, Some(result.k_out)));
    out
}
