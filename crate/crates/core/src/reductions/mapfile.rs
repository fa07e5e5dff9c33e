//! Sidecar map files.
//!
//! ```text
//! R <vc|vstash> <k> <d>
//! G h <d> <n> <m>              source instance, one `G`-prefixed line per line
//! G e v1 .. vd
//! M v <orig> <primary> <estar|->
//! E e <orig> <reduced edge ids..>
//! ```
//!
//! Reductions are deterministic, so parsing rebuilds the reduced instance
//! from the embedded source and checks every `M` and `E` line against it.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, VertexId};
use crate::reductions::{reduce_vc_to_vertex_stash, reduce_vertex_to_edge_stash, Direction, ReductionMap};
use crate::text::{join, parse, serialize};

pub fn write_map(map: &ReductionMap) -> Result<String> {
    if !map.source.is_canonical() {
        return Err(Error::Parameter("map files need a source with dense ids".into()));
    }
    let mut out = String::new();
    let _ = writeln!(out, "R {} {} {}", map.direction, map.k, map.d);
    if map.direction == Direction::VsToEs && map.k == 2 {
        let _ = writeln!(out, "# slot vertices x are shared by the primary edge and the tree port edge");
    }
    for line in serialize(&map.source).lines() {
        let _ = writeln!(out, "G {line}");
    }
    for (v, site) in &map.vertex_map {
        let pick = map.estar_pick.get(v).map_or_else(|| "-".to_string(), ToString::to_string);
        let _ = writeln!(out, "M v {v} {} {pick}", site.primary);
    }
    for (e, edges) in &map.edge_map {
        let _ = writeln!(out, "E e {e} {}", join(edges.iter()));
    }
    Ok(out)
}

/// Rebuilds the reduction recorded in a map file; returns the reduced
/// instance and its map.
pub fn parse_map(text: &str) -> Result<(Hypergraph, ReductionMap)> {
    let mut header: Option<(Direction, usize, usize)> = None;
    let mut source = String::new();
    let mut checks: Vec<(usize, Vec<&str>)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "R" => {
                if header.is_some() {
                    return Err(Error::parse(line_no, "duplicate `R` line"));
                }
                let direction = match fields.get(1).copied() {
                    Some("vc") => Direction::VcToVs,
                    Some("vstash") => Direction::VsToEs,
                    _ => return Err(Error::parse(line_no, "direction must be `vc` or `vstash`")),
                };
                let num = |i: usize| -> Result<usize> {
                    fields
                        .get(i)
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| Error::parse(line_no, "expected `R <direction> <k> <d>`"))
                };
                if fields.len() != 4 {
                    return Err(Error::parse(line_no, "expected `R <direction> <k> <d>`"));
                }
                header = Some((direction, num(2)?, num(3)?));
            }
            "G" => {
                source.push_str(line[1..].trim_start());
                source.push('\n');
            }
            "M" | "E" => checks.push((line_no, fields)),
            other => return Err(Error::parse(line_no, format!("unknown map line `{other}`"))),
        }
    }
    let (direction, k, d) = header.ok_or_else(|| Error::parse(1, "missing `R` line"))?;
    let g = parse(&source)?;
    let (reduced, map) = match direction {
        Direction::VcToVs => reduce_vc_to_vertex_stash(&g, k, d)?,
        Direction::VsToEs => reduce_vertex_to_edge_stash(&g, k, d)?,
    };
    for (line_no, fields) in checks {
        let expected = match fields[..] {
            ["M", "v", orig, ..] => {
                let v = orig.parse::<usize>().map(VertexId::from).ok();
                let site = v.and_then(|v| map.vertex_map.get(&v).map(|s| (v, s)));
                site.map(|(v, s)| {
                    let pick = map.estar_pick.get(&v).map_or_else(|| "-".to_string(), ToString::to_string);
                    format!("M v {v} {} {pick}", s.primary)
                })
            }
            ["E", "e", orig, ..] => orig
                .parse::<usize>()
                .ok()
                .and_then(|e| map.edge_map.get(&EdgeId::from(e)).map(|es| (e, es)))
                .map(|(e, es)| format!("E e {e} {}", join(es.iter()))),
            _ => None,
        };
        if expected.as_deref() != Some(fields.join(" ").as_str()) {
            return Err(Error::parse(line_no, "line does not match the rebuilt reduction"));
        }
    }
    Ok((reduced, map))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Hypergraph {
        Hypergraph::from_edges(2, 3, [[0, 1], [1, 2], [2, 0]]).unwrap()
    }

    #[test]
    fn round_trip_vstash() {
        let (fg, map) = reduce_vertex_to_edge_stash(&triangle(), 3, 2).unwrap();
        let text = write_map(&map).unwrap();
        assert!(text.starts_with("R vstash 3 2\nG h 2 3 3\n"));
        let (fg2, map2) = parse_map(&text).unwrap();
        assert_eq!(serialize(&fg), serialize(&fg2));
        assert_eq!(map.estar_pick, map2.estar_pick);
    }

    #[test]
    fn round_trip_vc() {
        let (_, map) = reduce_vc_to_vertex_stash(&triangle(), 2, 3).unwrap();
        let text = write_map(&map).unwrap();
        assert!(text.contains("M v 0 0 -\n"));
        assert_eq!(parse_map(&text).unwrap().1.direction, Direction::VcToVs);
    }

    #[test]
    fn tampered_line_is_rejected() {
        let (_, map) = reduce_vertex_to_edge_stash(&triangle(), 3, 2).unwrap();
        let text = write_map(&map).unwrap().replace("M v 1 ", "M v 1 9");
        assert!(matches!(parse_map(&text), Err(Error::Parse { .. })));
    }

    #[test]
    fn missing_header_is_rejected() {
        assert!(parse_map("G h 2 1 0\n").is_err());
    }
}
