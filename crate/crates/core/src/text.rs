//! Plain-text instance and stash formats.
//!
//! ```text
//! h <d> <num_vertices> <num_edges>
//! e v1 v2 ... vd          (exactly num_edges lines)
//! ```
//!
//! Vertices are `0..num_vertices`, edges are numbered by line order. Lines
//! starting with `#` are comments and may appear anywhere. Stash files hold a
//! single `S v <vertex ids...>` or `S e <edge indices...>` line; a trailing
//! `size=...` summary line is accepted and ignored.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, VertexId};
use crate::solvers::Stash;

pub fn parse(text: &str) -> Result<Hypergraph> {
    let mut header: Option<(usize, Hypergraph, usize)> = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let tag = fields.next().unwrap_or_default();
        match (&mut header, tag) {
            (None, "h") => {
                let nums = parse_numbers(fields, line_no)?;
                let [d, n, m] = nums[..] else {
                    return Err(Error::parse(line_no, "header must be `h <d> <num_vertices> <num_edges>`"));
                };
                if d < 2 {
                    return Err(Error::parse(line_no, format!("arity must be at least 2, got {d}")));
                }
                let h = Hypergraph::with_vertices(d, n).map_err(|e| Error::parse(line_no, e.to_string()))?;
                header = Some((line_no, h, m));
            }
            (None, _) => return Err(Error::parse(line_no, "expected header line `h <d> <n> <m>`")),
            (Some(_), "h") => return Err(Error::parse(line_no, "duplicate header")),
            (Some((_, h, m)), "e") => {
                if h.edge_count() == *m {
                    return Err(Error::parse(line_no, format!("more than the declared {m} edges")));
                }
                let nums = parse_numbers(fields, line_no)?;
                if nums.len() != h.arity() {
                    return Err(Error::parse(
                        line_no,
                        format!("edge has {} vertices, expected {}", nums.len(), h.arity()),
                    ));
                }
                let n = h.vertex_bound();
                let mut vs = Vec::with_capacity(nums.len());
                for (i, &v) in nums.iter().enumerate() {
                    if v >= n {
                        return Err(Error::parse(line_no, format!("vertex {v} out of range 0..{n}")));
                    }
                    if nums[..i].contains(&v) {
                        return Err(Error::parse(line_no, format!("duplicate vertex {v} in edge")));
                    }
                    vs.push(VertexId::from(v));
                }
                h.add_edge(&vs).map_err(|e| Error::parse(line_no, e.to_string()))?;
            }
            (Some(_), other) => return Err(Error::parse(line_no, format!("unexpected line tag `{other}`"))),
        }
    }
    let Some((header_line, h, m)) = header else {
        return Err(Error::parse(last_line.max(1), "missing header line"));
    };
    if h.edge_count() != m {
        return Err(Error::parse(
            header_line,
            format!("header declares {m} edges, found {}", h.edge_count()),
        ));
    }
    Ok(h)
}

fn parse_numbers<'a>(fields: impl Iterator<Item = &'a str>, line_no: usize) -> Result<Vec<usize>> {
    fields
        .map(|f| {
            f.parse::<usize>()
                .map_err(|_| Error::parse(line_no, format!("`{f}` is not a non-negative integer")))
        })
        .collect()
}

pub fn serialize(h: &Hypergraph) -> String {
    serialize_annotated(h, &[])
}

/// Serializes `h`, inserting `comments` (each prefixed with `# `) after the header.
///
/// Live vertices and edges are renumbered densely in ascending id order. When
/// that renumbering is not the identity, `# vertex-ids:` and `# edge-ids:`
/// lines record the original ids in output order.
pub fn serialize_annotated(h: &Hypergraph, comments: &[String]) -> String {
    let mut out = String::new();
    let mut dense = vec![usize::MAX; h.vertex_bound()];
    let vertices: Vec<VertexId> = h.vertices().collect();
    for (i, v) in vertices.iter().enumerate() {
        dense[v.index()] = i;
    }
    let _ = writeln!(out, "h {} {} {}", h.arity(), h.vertex_count(), h.edge_count());
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    if !h.is_canonical() {
        let _ = writeln!(out, "# vertex-ids: {}", join(vertices.iter()));
        let _ = writeln!(out, "# edge-ids: {}", join(h.edge_ids().collect::<Vec<_>>().iter()));
    }
    for (_, vs) in h.edges() {
        out.push('e');
        for v in vs {
            let _ = write!(out, " {}", dense[v.index()]);
        }
        out.push('\n');
    }
    out
}

pub(crate) fn join<T: std::fmt::Display>(items: impl Iterator<Item = T>) -> String {
    items.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn parse_stash(text: &str) -> Result<Stash> {
    let mut found: Option<Stash> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with("size=") {
            continue;
        }
        let mut fields = line.split_whitespace();
        if fields.next() != Some("S") {
            return Err(Error::parse(line_no, "expected `S v ...` or `S e ...`"));
        }
        if found.is_some() {
            return Err(Error::parse(line_no, "more than one stash line"));
        }
        let kind = fields.next();
        let ids = parse_numbers(fields, line_no)?;
        found = Some(match kind {
            Some("v") => Stash::Vertices(ids.into_iter().map(VertexId::from).collect()),
            Some("e") => Stash::Edges(ids.into_iter().map(EdgeId::from).collect()),
            _ => return Err(Error::parse(line_no, "stash kind must be `v` or `e`")),
        });
    }
    found.ok_or_else(|| Error::parse(1, "no stash line"))
}

pub fn format_stash(stash: &Stash) -> String {
    match stash {
        Stash::Vertices(vs) => format_ids('v', vs),
        Stash::Edges(es) => format_ids('e', es),
    }
}

fn format_ids<T: std::fmt::Display>(tag: char, ids: &BTreeSet<T>) -> String {
    if ids.is_empty() {
        format!("S {tag}")
    } else {
        format!("S {tag} {}", join(ids.iter()))
    }
}
