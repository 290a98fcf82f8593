//! Plain-text graph documents and graph6 strings.
//!
//! A document is a vertex count on its first content line followed by one
//! `u v` edge per line. Optional `order:` and `labels:` lines carry a unit
//! interval order and vertex names. `#` starts a comment, blank lines are
//! ignored and a `---` line separates documents in a stream.
//!
//! ```text
//! # P_4 in its natural order
//! 4
//! 0 1
//! 1 2
//! 2 3
//! order: 0 1 2 3
//! ```

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphDocument {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub order: Option<Vec<usize>>,
    pub labels: Option<Vec<String>>,
}

impl GraphDocument {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDocument { n: g.n(), edges: g.edges().collect(), order: None, labels: None }
    }

    pub fn with_order(mut self, order: &[usize]) -> Self {
        self.order = Some(order.to_vec());
        self
    }

    pub fn graph(&self) -> Result<Graph> {
        Graph::from_edges(self.n, &self.edges)
    }
}

impl fmt::Display for GraphDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for (u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        if let Some(order) = &self.order {
            let items: Vec<String> = order.iter().map(ToString::to_string).collect();
            writeln!(f, "order: {}", items.join(" "))?;
        }
        if let Some(labels) = &self.labels {
            writeln!(f, "labels: {}", labels.join(" "))?;
        }
        Ok(())
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| parse_err(line, format!("expected a vertex index, found {tok:?}")))
}

/// Parses a single document; edges are validated against the header, and the
/// order line, when present, must be a unit interval order.
pub fn parse_graph(text: &str) -> Result<GraphDocument> {
    let docs = parse_documents(text)?;
    match docs.len() {
        1 => Ok(docs.into_iter().next().unwrap()),
        0 => Err(parse_err(1, "empty document")),
        k => Err(parse_err(1, format!("expected one document, found {k}"))),
    }
}

/// Parses a `---`-separated stream of documents.
pub fn parse_documents(text: &str) -> Result<Vec<GraphDocument>> {
    let mut docs = Vec::new();
    let mut current: Option<(GraphDocument, Graph)> = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        if content == "---" {
            if let Some((doc, g)) = current.take() {
                docs.push(finish(doc, &g, line)?);
            }
            continue;
        }
        let Some((doc, g)) = current.as_mut() else {
            let n = parse_usize(content, line)?;
            current = Some((
                GraphDocument { n, edges: Vec::new(), order: None, labels: None },
                Graph::new(n),
            ));
            continue;
        };
        if let Some(rest) = content.strip_prefix("order:") {
            let order = rest.split_whitespace().map(|t| parse_usize(t, line)).collect::<Result<_>>()?;
            doc.order = Some(order);
        } else if let Some(rest) = content.strip_prefix("labels:") {
            let labels: Vec<String> = rest.split_whitespace().map(String::from).collect();
            if labels.len() != doc.n {
                return Err(parse_err(line, format!("expected {} labels, found {}", doc.n, labels.len())));
            }
            doc.labels = Some(labels);
        } else {
            let toks: Vec<&str> = content.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(parse_err(line, format!("expected an edge \"u v\", found {content:?}")));
            }
            let (u, v) = (parse_usize(toks[0], line)?, parse_usize(toks[1], line)?);
            g.add_edge(u, v).map_err(|e| parse_err(line, e.to_string()))?;
            doc.edges.push((u, v));
        }
    }
    if let Some((doc, g)) = current {
        docs.push(finish(doc, &g, last_line)?);
    }
    Ok(docs)
}

fn finish(doc: GraphDocument, g: &Graph, line: usize) -> Result<GraphDocument> {
    if let Some(order) = &doc.order {
        crate::unit_interval::UnitIntervalModel::new(g, order)
            .map_err(|e| parse_err(line, format!("order line: {e}")))?;
    }
    Ok(doc)
}

/// graph6 encoding (graphs with fewer than 63 vertices).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n < 63, "short graph6 form covers n < 63");
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut bits = Vec::with_capacity(n * (n - n.min(1)) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for k in 0..6 {
            v = (v << 1) | u8::from(chunk.get(k).copied().unwrap_or(false));
        }
        out.push((v + 63) as char);
    }
    out
}

/// Decodes the short graph6 form produced by [`to_graph6`].
pub fn from_graph6(s: &str) -> Result<Graph> {
    let bytes = s.trim().as_bytes();
    let bad = |msg: &str| parse_err(1, format!("graph6: {msg}"));
    let (&first, rest) = bytes.split_first().ok_or_else(|| bad("empty string"))?;
    if !(63..126).contains(&first) {
        return Err(bad("unsupported size byte"));
    }
    let n = usize::from(first - 63);
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if rest.len() != needed {
        return Err(bad("wrong length"));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(bad("byte out of range"));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}
