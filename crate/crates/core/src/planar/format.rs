//! Line-oriented text format for plane bipolar orientations, and a DOT
//! emitter.
//!
//! ```text
//! MAP v1
//! vertices 2
//! edges 1
//! rot 0: +1
//! rot 1: -1
//! source 0
//! sink 1
//! outer +1@0
//! ```
//!
//! `+e` is the tail dart of edge `e` (1-based), `-e` its head dart. Parsing
//! stops at the first blank line after the header, so trailing sections can
//! follow the map.

use std::fmt::Write as _;

use thiserror::Error;

use super::{BipolarOrientation, Dart, MapError, PlaneMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `{0}` line")]
    Missing(&'static str),
    #[error("no `rot` line for vertex {0}")]
    NoRotation(usize),
    #[error("invalid rotation system: {0}")]
    Structure(#[from] MapError),
}

fn syntax(line: usize, message: impl Into<String>) -> MapParseError {
    MapParseError::Syntax { line, message: message.into() }
}

fn dart_text(d: Dart) -> String {
    let sign = if d.is_multiple_of(2) { '+' } else { '-' };
    format!("{sign}{}", d / 2 + 1)
}

fn parse_dart(tok: &str, edges: usize, line: usize) -> Result<Dart, MapParseError> {
    let (head, digits) = match tok.as_bytes().first() {
        Some(b'+') => (false, &tok[1..]),
        Some(b'-') => (true, &tok[1..]),
        _ => return Err(syntax(line, format!("`{tok}` is not a signed edge id"))),
    };
    let e: usize = digits.parse().map_err(|_| syntax(line, format!("`{tok}` is not a signed edge id")))?;
    if e == 0 || e > edges {
        return Err(syntax(line, format!("edge {e} out of range 1..={edges}")));
    }
    Ok(2 * (e - 1) + head as usize)
}

fn parse_count(rest: &str, line: usize, what: &str) -> Result<usize, MapParseError> {
    rest.trim().parse().map_err(|_| syntax(line, format!("bad {what} `{}`", rest.trim())))
}

pub fn write_map(o: &BipolarOrientation) -> String {
    let m = &o.map;
    let mut s = String::new();
    writeln!(s, "MAP v1").unwrap();
    writeln!(s, "vertices {}", m.vertex_count()).unwrap();
    writeln!(s, "edges {}", m.edge_count()).unwrap();
    for v in 0..m.vertex_count() {
        write!(s, "rot {v}:").unwrap();
        for &d in m.rotation(v) {
            write!(s, " {}", dart_text(d)).unwrap();
        }
        s.push('\n');
    }
    writeln!(s, "source {}", o.source).unwrap();
    writeln!(s, "sink {}", o.sink).unwrap();
    let outer = m.outer_dart();
    writeln!(s, "outer {}@{}", dart_text(outer), m.vertex(outer)).unwrap();
    s
}

/// Parses a map. The result is not validated as a bipolar orientation.
pub fn parse_map(text: &str) -> Result<BipolarOrientation, MapParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end()));
    let (n, first) = lines.next().ok_or(MapParseError::Missing("MAP v1"))?;
    if first.trim() != "MAP v1" {
        return Err(syntax(n, "expected `MAP v1`"));
    }
    let mut vertices = None;
    let mut edges = None;
    let mut rotations: Vec<Option<Vec<Dart>>> = Vec::new();
    let mut source = None;
    let mut sink = None;
    let mut outer = None;
    for (n, line) in lines {
        if line.trim().is_empty() {
            if outer.is_some() {
                break;
            }
            continue;
        }
        let (key, rest) = line.split_once(' ').unwrap_or((line, ""));
        match key {
            "vertices" => {
                let v = parse_count(rest, n, "vertex count")?;
                vertices = Some(v);
                rotations = vec![None; v];
            }
            "edges" => edges = Some(parse_count(rest, n, "edge count")?),
            "rot" => {
                let (Some(vc), Some(ec)) = (vertices, edges) else {
                    return Err(syntax(n, "`rot` before `vertices` and `edges`"));
                };
                let (id, darts) = rest.split_once(':').ok_or_else(|| syntax(n, "expected `rot <vertex>: ...`"))?;
                let v = parse_count(id, n, "vertex id")?;
                if v >= vc {
                    return Err(syntax(n, format!("vertex {v} out of range 0..{vc}")));
                }
                if rotations[v].is_some() {
                    return Err(syntax(n, format!("second rotation for vertex {v}")));
                }
                let r = darts.split_whitespace().map(|t| parse_dart(t, ec, n)).collect::<Result<Vec<_>, _>>()?;
                rotations[v] = Some(r);
            }
            "source" | "sink" => {
                let v = parse_count(rest, n, "vertex id")?;
                if vertices.is_none_or(|vc| v >= vc) {
                    return Err(syntax(n, format!("{key} {v} is not a vertex")));
                }
                if key == "source" {
                    source = Some(v);
                } else {
                    sink = Some(v);
                }
            }
            "outer" => {
                let ec = edges.ok_or_else(|| syntax(n, "`outer` before `edges`"))?;
                let (dart, at) = rest.trim().split_once('@').ok_or_else(|| syntax(n, "expected `outer <dart>@<vertex>`"))?;
                let d = parse_dart(dart, ec, n)?;
                let v = parse_count(at, n, "vertex id")?;
                outer = Some((d, v, n));
            }
            _ => return Err(syntax(n, format!("unknown line `{key}`"))),
        }
    }
    vertices.ok_or(MapParseError::Missing("vertices"))?;
    let edges = edges.ok_or(MapParseError::Missing("edges"))?;
    let source = source.ok_or(MapParseError::Missing("source"))?;
    let sink = sink.ok_or(MapParseError::Missing("sink"))?;
    let (outer, at, outer_line) = outer.ok_or(MapParseError::Missing("outer"))?;
    let rotations: Vec<Vec<Dart>> = rotations
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or(MapParseError::NoRotation(v)))
        .collect::<Result<_, _>>()?;
    let listed: usize = rotations.iter().map(Vec::len).sum();
    if listed != 2 * edges {
        let seen: Vec<Dart> = rotations.iter().flatten().copied().collect();
        let missing = (0..2 * edges).find(|d| !seen.contains(d)).unwrap_or(2 * edges);
        return Err(MapError::MissingDart(missing).into());
    }
    let map = PlaneMap::new(rotations, outer)?;
    if map.vertex(outer) != at {
        return Err(syntax(outer_line, format!("dart {} is not at vertex {at}", dart_text(outer))));
    }
    Ok(BipolarOrientation::new(map, source, sink))
}

/// DOT digraph. Edge attribute `rotpos` gives the clockwise positions of the
/// edge in the rotations of its tail and head.
pub fn write_dot(o: &BipolarOrientation) -> String {
    let m = &o.map;
    let mut s = String::from("digraph map {\n");
    for v in 0..m.vertex_count() {
        let role = if v == o.source {
            ", shape=doublecircle, role=source"
        } else if v == o.sink {
            ", shape=doublecircle, role=sink"
        } else {
            ""
        };
        writeln!(s, "  v{v} [label=\"{v}\"{role}];").unwrap();
    }
    for e in 0..m.edge_count() {
        let (tail, head) = m.endpoints(e);
        let tp = m.rotation(tail).iter().position(|&d| d == 2 * e).unwrap();
        let hp = m.rotation(head).iter().position(|&d| d == 2 * e + 1).unwrap();
        writeln!(s, "  v{tail} -> v{head} [label=\"{}\", rotpos=\"{tp},{hp}\"];", e + 1).unwrap();
    }
    s.push_str("}\n");
    s
}
