//! Reading graphs and vertex sets from files or stdin.

use std::io::Read;

use anyhow::{bail, Context, Result};
use kernelkit::io::{parse_json, parse_text, GraphDoc};
use kernelkit::{ColoredDigraph, Digraph, UndirectedGraph};

pub fn read_source(src: &str) -> Result<String> {
    if src == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(src).with_context(|| format!("reading {src}"))
    }
}

/// Text or JSON, told apart by the first non-blank character.
pub fn parse_doc(text: &str) -> kernelkit::Result<GraphDoc> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

pub fn read_doc(src: &str) -> Result<GraphDoc> {
    let text = read_source(src)?;
    Ok(parse_doc(&text)?)
}

pub fn read_digraph(src: &str) -> Result<Digraph> {
    Ok(read_doc(src)?.to_digraph())
}

pub fn read_colored(src: &str) -> Result<ColoredDigraph> {
    match read_doc(src)? {
        GraphDoc::Colored(cd) => Ok(cd),
        other => Err(kernelkit::Error::Contract(format!(
            "expected a cdigraph, got a {}",
            other.kind()
        ))
        .into()),
    }
}

/// The undirected graph underneath any of the four kinds.
pub fn read_base_graph(src: &str) -> Result<UndirectedGraph> {
    Ok(match read_doc(src)? {
        GraphDoc::Graph(g) => g,
        GraphDoc::Orientation(o) => o.base().clone(),
        other => UndirectedGraph::underlying(&other.to_digraph()),
    })
}

/// A vertex set from a solver report (`kernel` field), a JSON list, or
/// whitespace/comma separated indices.
pub fn parse_vertex_list(text: &str) -> Result<Vec<usize>> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        let value: serde_json::Value = serde_json::from_str(trimmed).context("parsing the vertex set")?;
        let list = match &value {
            serde_json::Value::Object(map) => match map.get("kernel") {
                Some(k) => k.clone(),
                None => bail!("report has no `kernel` field"),
            },
            _ => value,
        };
        return serde_json::from_value(list).context("the kernel must be a list of vertex indices");
    }
    trimmed
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .with_context(|| format!("expected a vertex index, found `{t}`"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_lists() {
        assert_eq!(parse_vertex_list("1 2, 5\n").unwrap(), vec![1, 2, 5]);
        assert_eq!(parse_vertex_list("[0, 3]").unwrap(), vec![0, 3]);
        assert_eq!(parse_vertex_list(r#"{"kernel": [4], "result": [4]}"#).unwrap(), vec![4]);
        assert_eq!(parse_vertex_list("").unwrap(), Vec::<usize>::new());
        assert!(parse_vertex_list(r#"{"result": [4]}"#).is_err());
        assert!(parse_vertex_list("1 x").is_err());
    }

    #[test]
    fn detects_json() {
        let d = parse_doc(r#"{"kind": "digraph", "vertex_count": 2, "arcs": [[0, 1]]}"#).unwrap();
        assert_eq!(d.kind(), "digraph");
        assert_eq!(parse_doc("digraph 2\n0 1\n").unwrap(), d);
    }
}
