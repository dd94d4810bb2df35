//! Graph serialization: a small JSON schema and a DOT subset.
//!
//! Both formats are byte-stable for identical inputs: the JSON field order is
//! fixed, edges keep insertion order, and DOT lists every vertex explicitly
//! so round-trips preserve order and labels exactly.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    order: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    labels: BTreeMap<usize, String>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            order: self.order(),
            edges: self.edges().to_vec(),
            labels: self.labels().clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = GraphJson::deserialize(deserializer)?;
        let mut g = Graph::new(raw.order);
        for (u, v) in raw.edges {
            g.add_edge(u, v).map_err(D::Error::custom)?;
        }
        for (v, label) in raw.labels {
            g.set_label(v, label).map_err(D::Error::custom)?;
        }
        Ok(g)
    }
}

pub fn export_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(g).expect("graph serialization cannot fail"),
        Format::Dot => to_dot(g),
    }
}

pub fn import_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Json => serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }),
        Format::Dot => from_dot(text),
    }
}

/// Guesses the format from the first non-whitespace byte.
pub fn sniff_format(text: &str) -> Format {
    match text.trim_start().bytes().next() {
        Some(b'{') => Format::Json,
        _ => Format::Dot,
    }
}

fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph pebbling {\n");
    for v in 0..g.order() {
        match g.label(v) {
            Some(label) => writeln!(out, "  {v} [label=\"{label}\"];").unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parses the DOT subset emitted by `to_dot`: a `graph NAME {` header, one
/// statement per line (`V;`, `V [label="..."];`, `U -- V;`), closing `}`.
fn from_dot(text: &str) -> Result<Graph> {
    let mut vertices: Vec<(usize, Option<String>)> = Vec::new();
    let mut edge_list: Vec<(usize, usize)> = Vec::new();
    let mut seen_header = false;
    let mut seen_footer = false;

    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.trim();
        if line.is_empty() {
            continue;
        }
        if seen_footer {
            return Err(parse_err(line_no, 1, "content after closing brace"));
        }
        if !seen_header {
            if line.starts_with("graph") && line.ends_with('{') {
                seen_header = true;
                continue;
            }
            return Err(parse_err(line_no, 1, "expected 'graph <name> {' header"));
        }
        if line == "}" {
            seen_footer = true;
            continue;
        }
        let column = raw_line.len() - raw_line.trim_start().len() + 1;
        let stmt = line.strip_suffix(';').ok_or_else(|| {
            parse_err(line_no, raw_line.len() + 1, "statement must end with ';'")
        })?;
        if let Some((lhs, rhs)) = stmt.split_once("--") {
            let u = parse_vertex_id(lhs.trim(), line_no, column)?;
            let v = parse_vertex_id(rhs.trim(), line_no, column)?;
            edge_list.push((u, v));
        } else if let Some((id_part, attr)) = stmt.split_once('[') {
            let v = parse_vertex_id(id_part.trim(), line_no, column)?;
            let attr = attr.trim().strip_suffix(']').ok_or_else(|| {
                parse_err(line_no, column, "unterminated attribute list")
            })?;
            let label = attr
                .trim()
                .strip_prefix("label=\"")
                .and_then(|s| s.strip_suffix('"'))
                .ok_or_else(|| parse_err(line_no, column, "expected label=\"...\""))?;
            vertices.push((v, Some(label.to_string())));
        } else {
            let v = parse_vertex_id(stmt.trim(), line_no, column)?;
            vertices.push((v, None));
        }
    }
    if !seen_header {
        return Err(parse_err(1, 1, "missing 'graph' header"));
    }
    if !seen_footer {
        return Err(parse_err(text.lines().count().max(1), 1, "missing closing '}'"));
    }

    let max_id = vertices
        .iter()
        .map(|&(v, _)| v)
        .chain(edge_list.iter().flat_map(|&(u, v)| [u, v]))
        .max();
    let order = max_id.map_or(0, |m| m + 1);
    let mut g = Graph::new(order);
    for (u, v) in edge_list {
        g.add_edge(u, v)?;
    }
    for (v, label) in vertices {
        if let Some(label) = label {
            g.set_label(v, label)?;
        }
    }
    Ok(g)
}

fn parse_vertex_id(token: &str, line: usize, column: usize) -> Result<usize> {
    token
        .parse()
        .map_err(|_| parse_err(line, column, format!("expected vertex id, found '{token}'")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn triangle_json_bytes_are_stable() {
        let c3 = families::cycle(3).unwrap();
        assert_eq!(
            export_graph(&c3, Format::Json),
            r#"{"order":3,"edges":[[0,1],[1,2],[0,2]]}"#
        );
    }

    #[test]
    fn json_round_trip_with_labels() {
        let g = families::friendship(2, 3).unwrap();
        let text = export_graph(&g, Format::Json);
        let back = import_graph(&text, Format::Json).unwrap();
        assert_eq!(g, back);
        assert_eq!(export_graph(&back, Format::Json), text);
    }

    #[test]
    fn friendship_dot_has_one_line_per_edge() {
        let g = families::friendship(2, 3).unwrap();
        let dot = export_graph(&g, Format::Dot);
        assert_eq!(dot.matches("--").count(), 6);
        assert!(dot.contains("label=\"hub\""));
    }

    #[test]
    fn dot_round_trip() {
        let g = families::square_chain(2, families::SquareKind::Ortho, true, false).unwrap();
        let dot = export_graph(&g, Format::Dot);
        let back = import_graph(&dot, Format::Dot).unwrap();
        assert_eq!(g, back);
        assert_eq!(export_graph(&back, Format::Dot), dot);
    }

    #[test]
    fn malformed_inputs_report_positions() {
        match import_graph("{\"order\":2,\"edges\":[[0,", Format::Json) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        let bad = "graph g {\n  0 -- x;\n}\n";
        match import_graph(bad, Format::Dot) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn json_rejects_duplicate_edges() {
        let text = r#"{"order":2,"edges":[[0,1],[1,0]]}"#;
        assert!(import_graph(text, Format::Json).is_err());
    }

    #[test]
    fn sniffing_picks_json_for_braces() {
        assert_eq!(sniff_format("  {\"order\":1"), Format::Json);
        assert_eq!(sniff_format("graph g {"), Format::Dot);
    }
}
