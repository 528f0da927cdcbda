//! Line-oriented text and JSON formats for the four graph kinds.
//!
//! ```text
//! digraph 3        cdigraph 2      graph 3       orientation 3
//! 0 1              0 1 b           0 1           0 1 fwd
//! 1 2              1 0 r           1 2           1 2 both
//! 2 0
//! ```
//!
//! `#` starts a comment; blank lines are ignored.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::colored::{ArcColor, ColoredDigraph};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::undirected::{EdgeDirection, Orientation, UndirectedGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphDoc {
    Digraph(Digraph),
    Colored(ColoredDigraph),
    Graph(UndirectedGraph),
    Orientation(Orientation),
}

impl GraphDoc {
    pub fn kind(&self) -> &'static str {
        match self {
            GraphDoc::Digraph(_) => "digraph",
            GraphDoc::Colored(_) => "cdigraph",
            GraphDoc::Graph(_) => "graph",
            GraphDoc::Orientation(_) => "orientation",
        }
    }

    /// The digraph a kernel question is asked about: colors are dropped,
    /// orientations are realised, undirected edges become opposite arc pairs.
    pub fn to_digraph(&self) -> Digraph {
        match self {
            GraphDoc::Digraph(d) => d.clone(),
            GraphDoc::Colored(cd) => cd.underlying().clone(),
            GraphDoc::Graph(g) => g.to_symmetric_digraph(),
            GraphDoc::Orientation(o) => o.to_digraph(),
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn at_line<T>(line: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { .. } => e,
        other => parse_err(line, other.to_string()),
    })
}

fn parse_index(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("expected a vertex index, found `{tok}`")))
}

/// Parses any of the four text formats.
pub fn parse_text(input: &str) -> Result<GraphDoc> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let mut htoks = header.split_whitespace();
    let kind = htoks.next().unwrap_or_default();
    let n = match (htoks.next(), htoks.next()) {
        (Some(tok), None) => parse_index(tok, hline)?,
        _ => return Err(parse_err(hline, format!("malformed header `{header}`"))),
    };

    match kind {
        "digraph" => {
            let mut d = Digraph::empty(n);
            for (line, text) in lines {
                let toks: Vec<&str> = text.split_whitespace().collect();
                let [u, v] = toks[..] else {
                    return Err(parse_err(line, "expected `<tail> <head>`"));
                };
                let (u, v) = (parse_index(u, line)?, parse_index(v, line)?);
                at_line(line, d.add_arc(u, v))?;
            }
            Ok(GraphDoc::Digraph(d))
        }
        "cdigraph" => {
            let mut cd = ColoredDigraph::empty(n);
            for (line, text) in lines {
                let toks: Vec<&str> = text.split_whitespace().collect();
                let (u, v, c) = match toks[..] {
                    [u, v, c] => (u, v, c),
                    [_, _] => return Err(parse_err(line, "missing arc color (b or r)")),
                    _ => return Err(parse_err(line, "expected `<tail> <head> <b|r>`")),
                };
                let color = match c {
                    "b" => ArcColor::Blue,
                    "r" => ArcColor::Red,
                    other => return Err(parse_err(line, format!("unknown color `{other}`"))),
                };
                let (u, v) = (parse_index(u, line)?, parse_index(v, line)?);
                at_line(line, cd.add_arc(u, v, color))?;
            }
            Ok(GraphDoc::Colored(cd))
        }
        "graph" => {
            let mut edges = Vec::new();
            for (line, text) in lines {
                let toks: Vec<&str> = text.split_whitespace().collect();
                let [u, v] = toks[..] else {
                    return Err(parse_err(line, "expected `<u> <v>`"));
                };
                edges.push((line, parse_index(u, line)?, parse_index(v, line)?));
            }
            build_undirected(n, &edges).map(GraphDoc::Graph)
        }
        "orientation" => {
            let mut edges = Vec::new();
            let mut dirs = Vec::new();
            for (line, text) in lines {
                let toks: Vec<&str> = text.split_whitespace().collect();
                let [u, v, dir] = toks[..] else {
                    return Err(parse_err(line, "expected `<u> <v> <fwd|bwd|both>`"));
                };
                let (u, v) = (parse_index(u, line)?, parse_index(v, line)?);
                if u >= v {
                    return Err(parse_err(line, "orientation lines need u < v"));
                }
                let dir = match dir {
                    "fwd" => EdgeDirection::Forward,
                    "bwd" => EdgeDirection::Backward,
                    "both" => EdgeDirection::Both,
                    other => return Err(parse_err(line, format!("unknown direction `{other}`"))),
                };
                edges.push((line, u, v));
                dirs.push(((u, v), dir));
            }
            let base = build_undirected(n, &edges)?;
            orientation_from_pairs(base, dirs).map(GraphDoc::Orientation)
        }
        other => Err(parse_err(hline, format!("unknown graph kind `{other}`"))),
    }
}

fn build_undirected(n: usize, edges: &[(usize, usize, usize)]) -> Result<UndirectedGraph> {
    // Validate one edge at a time so errors carry the right line.
    let mut seen = std::collections::HashSet::new();
    for &(line, u, v) in edges {
        for x in [u, v] {
            if x >= n {
                return Err(parse_err(line, format!("vertex {x} out of range for {n} vertices")));
            }
        }
        if u == v {
            return Err(parse_err(line, format!("self-edge at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(line, format!("duplicate edge {{{u}, {v}}}")));
        }
    }
    UndirectedGraph::from_edges(n, edges.iter().map(|&(_, u, v)| (u, v)))
}

fn orientation_from_pairs(
    base: UndirectedGraph,
    dirs: Vec<((usize, usize), EdgeDirection)>,
) -> Result<Orientation> {
    let mut assignment = vec![EdgeDirection::Forward; base.edge_count()];
    for ((u, v), dir) in dirs {
        let i = base.edge_index(u, v).expect("edge was just inserted");
        assignment[i] = dir;
    }
    Orientation::new(base, assignment)
}

pub fn to_text(doc: &GraphDoc) -> String {
    let mut s = String::new();
    match doc {
        GraphDoc::Digraph(d) => {
            writeln!(s, "digraph {}", d.vertex_count()).unwrap();
            for (u, v) in d.arcs() {
                writeln!(s, "{u} {v}").unwrap();
            }
        }
        GraphDoc::Colored(cd) => {
            writeln!(s, "cdigraph {}", cd.vertex_count()).unwrap();
            for (u, v, c) in cd.arcs() {
                writeln!(s, "{u} {v} {}", c.letter()).unwrap();
            }
        }
        GraphDoc::Graph(g) => {
            writeln!(s, "graph {}", g.vertex_count()).unwrap();
            for (u, v) in g.edges() {
                writeln!(s, "{u} {v}").unwrap();
            }
        }
        GraphDoc::Orientation(o) => {
            writeln!(s, "orientation {}", o.base().vertex_count()).unwrap();
            for (&(u, v), dir) in o.base().edges().iter().zip(o.assignment()) {
                writeln!(s, "{u} {v} {}", dir.keyword()).unwrap();
            }
        }
    }
    s
}

/// JSON mirror of the text formats.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GraphJson {
    Digraph {
        vertex_count: usize,
        arcs: Vec<(usize, usize)>,
    },
    Cdigraph {
        vertex_count: usize,
        arcs: Vec<(usize, usize, ArcColor)>,
    },
    Graph {
        vertex_count: usize,
        edges: Vec<(usize, usize)>,
    },
    Orientation {
        vertex_count: usize,
        edges: Vec<(usize, usize, EdgeDirection)>,
    },
}

impl From<&GraphDoc> for GraphJson {
    fn from(doc: &GraphDoc) -> Self {
        match doc {
            GraphDoc::Digraph(d) => GraphJson::Digraph {
                vertex_count: d.vertex_count(),
                arcs: d.arcs().collect(),
            },
            GraphDoc::Colored(cd) => GraphJson::Cdigraph {
                vertex_count: cd.vertex_count(),
                arcs: cd.arcs().collect(),
            },
            GraphDoc::Graph(g) => GraphJson::Graph {
                vertex_count: g.vertex_count(),
                edges: g.edges().to_vec(),
            },
            GraphDoc::Orientation(o) => GraphJson::Orientation {
                vertex_count: o.base().vertex_count(),
                edges: o
                    .base()
                    .edges()
                    .iter()
                    .zip(o.assignment())
                    .map(|(&(u, v), &d)| (u, v, d))
                    .collect(),
            },
        }
    }
}

impl TryFrom<GraphJson> for GraphDoc {
    type Error = Error;

    fn try_from(json: GraphJson) -> Result<Self> {
        Ok(match json {
            GraphJson::Digraph { vertex_count, arcs } => {
                GraphDoc::Digraph(Digraph::from_arcs(vertex_count, arcs)?)
            }
            GraphJson::Cdigraph { vertex_count, arcs } => {
                GraphDoc::Colored(ColoredDigraph::from_arcs(vertex_count, arcs)?)
            }
            GraphJson::Graph {
                vertex_count,
                edges,
            } => GraphDoc::Graph(UndirectedGraph::from_edges(vertex_count, edges)?),
            GraphJson::Orientation {
                vertex_count,
                edges,
            } => {
                if let Some(&(u, v, _)) = edges.iter().find(|(u, v, _)| u >= v) {
                    return Err(Error::InvalidGraph(format!(
                        "orientation edge ({u}, {v}) needs u < v"
                    )));
                }
                let base =
                    UndirectedGraph::from_edges(vertex_count, edges.iter().map(|&(u, v, _)| (u, v)))?;
                GraphDoc::Orientation(orientation_from_pairs(
                    base,
                    edges.into_iter().map(|(u, v, d)| ((u, v), d)).collect(),
                )?)
            }
        })
    }
}

pub fn parse_json(input: &str) -> Result<GraphDoc> {
    let json: GraphJson = serde_json::from_str(input)?;
    GraphDoc::try_from(json)
}

pub fn to_json(doc: &GraphDoc) -> String {
    serde_json::to_string(&GraphJson::from(doc)).expect("graph JSON serialises")
}

/// Graphviz rendering, for external viewers only. Blue and red arcs are
/// drawn in their colors; reversible orientation edges get two arrowheads.
pub fn to_dot(doc: &GraphDoc) -> String {
    let mut s = String::new();
    match doc {
        GraphDoc::Graph(g) => {
            s.push_str("graph G {\n");
            for v in 0..g.vertex_count() {
                writeln!(s, "  {v};").unwrap();
            }
            for (u, v) in g.edges() {
                writeln!(s, "  {u} -- {v};").unwrap();
            }
        }
        GraphDoc::Colored(cd) => {
            s.push_str("digraph G {\n");
            for v in 0..cd.vertex_count() {
                writeln!(s, "  {v};").unwrap();
            }
            for (u, v, c) in cd.arcs() {
                let color = match c {
                    ArcColor::Blue => "blue",
                    ArcColor::Red => "red",
                };
                writeln!(s, "  {u} -> {v} [color={color}];").unwrap();
            }
        }
        GraphDoc::Orientation(o) => {
            s.push_str("digraph G {\n");
            for v in 0..o.base().vertex_count() {
                writeln!(s, "  {v};").unwrap();
            }
            for (&(u, v), dir) in o.base().edges().iter().zip(o.assignment()) {
                match dir {
                    EdgeDirection::Forward => writeln!(s, "  {u} -> {v};").unwrap(),
                    EdgeDirection::Backward => writeln!(s, "  {v} -> {u};").unwrap(),
                    EdgeDirection::Both => writeln!(s, "  {u} -> {v} [dir=both];").unwrap(),
                }
            }
        }
        GraphDoc::Digraph(d) => {
            s.push_str("digraph G {\n");
            for v in 0..d.vertex_count() {
                writeln!(s, "  {v};").unwrap();
            }
            for (u, v) in d.arcs() {
                writeln!(s, "  {u} -> {v};").unwrap();
            }
        }
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::families::directed_cycle;

    #[test]
    fn parses_directed_three_cycle() {
        let doc = parse_text("digraph 3\n0 1\n1 2\n2 0\n").unwrap();
        assert_eq!(doc, GraphDoc::Digraph(directed_cycle(3)));
    }

    #[test]
    fn parses_colored_opposite_arcs() {
        let GraphDoc::Colored(cd) = parse_text("cdigraph 2\n0 1 b\n1 0 r\n").unwrap() else {
            panic!("expected a colored digraph");
        };
        assert_eq!(cd.color(0, 1), Some(ArcColor::Blue));
        assert_eq!(cd.color(1, 0), Some(ArcColor::Red));
    }

    #[test]
    fn comments_and_blank_lines() {
        let doc = parse_text("# a comment\ndigraph 2 # header\n\n0 1 # arc\n").unwrap();
        assert_eq!(doc.to_digraph().arc_count(), 1);
    }

    fn line_of(err: Error) -> usize {
        match err {
            Error::Parse { line, .. } => line,
            other => panic!("expected a parse error, got {other}"),
        }
    }

    #[test]
    fn errors_name_the_line() {
        assert_eq!(line_of(parse_text("digraph x\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_text("digraph 2 3\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_text("digraph 2\n0 1\n0 2\n").unwrap_err()), 3);
        assert_eq!(line_of(parse_text("digraph 2\n0 1\n\n0 1\n").unwrap_err()), 4);
        assert_eq!(line_of(parse_text("cdigraph 2\n0 1\n").unwrap_err()), 2);
        assert_eq!(line_of(parse_text("graph 3\n0 1\n1 0\n").unwrap_err()), 3);
        assert_eq!(line_of(parse_text("orientation 3\n1 0 fwd\n").unwrap_err()), 2);
        assert_eq!(line_of(parse_text("multigraph 3\n").unwrap_err()), 1);
    }

    #[test]
    fn json_mirror() {
        let doc = parse_text("orientation 3\n0 1 fwd\n0 2 both\n1 2 bwd\n").unwrap();
        let json = to_json(&doc);
        assert!(json.contains("\"kind\":\"orientation\""));
        assert_eq!(parse_json(&json).unwrap(), doc);
        assert!(parse_json(r#"{"kind":"digraph","vertex_count":2,"arcs":[[0,1],[0,1]]}"#).is_err());
    }

    #[test]
    fn dot_export_mentions_every_arc() {
        let dot = to_dot(&GraphDoc::Digraph(directed_cycle(3)));
        assert!(dot.contains("2 -> 0"));
    }
}
