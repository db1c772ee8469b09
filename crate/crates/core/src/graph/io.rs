//! Graph file formats: JSON `{"num_vertices": N, "edges": [[u, v], ...]}` and
//! a plain edge list headed by `# vertices N`.

use std::fmt::Write as _;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Graph;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    num_vertices: usize,
    edges: Vec<[usize; 2]>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr {
            num_vertices: self.num_vertices,
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(deserializer)?;
        Graph::new(
            repr.num_vertices,
            repr.edges.into_iter().map(|[u, v]| (u, v)),
        )
        .map_err(serde::de::Error::custom)
    }
}

impl Graph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("# vertices {}\n", self.num_vertices);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut num_vertices = None;
        let mut edges = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                let mut words = rest.split_whitespace();
                if words.next() == Some("vertices") {
                    let n = words
                        .next()
                        .ok_or_else(|| Error::Parse("`# vertices` without a count".into()))?;
                    num_vertices = Some(
                        n.parse::<usize>()
                            .map_err(|e| Error::Parse(format!("bad vertex count `{n}`: {e}")))?,
                    );
                }
                continue;
            }
            let parse = |tok: Option<&str>| -> Result<usize> {
                let tok = tok
                    .ok_or_else(|| Error::Parse(format!("line {}: expected `u v`", lineno + 1)))?;
                tok.parse().map_err(|e| {
                    Error::Parse(format!("line {}: bad vertex `{tok}`: {e}", lineno + 1))
                })
            };
            let mut words = line.split_whitespace();
            let u = parse(words.next())?;
            let v = parse(words.next())?;
            if words.next().is_some() {
                return Err(Error::Parse(format!(
                    "line {}: trailing tokens",
                    lineno + 1
                )));
            }
            edges.push((u, v));
        }
        let num_vertices =
            num_vertices.ok_or_else(|| Error::Parse("missing `# vertices N` header".into()))?;
        Graph::new(num_vertices, edges)
    }

    /// Parses either format, deciding by the first non-blank character.
    pub fn parse_any(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::from_json(text)
        } else {
            Self::from_edge_list(text)
        }
    }
}
