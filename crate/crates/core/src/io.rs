//! Graph (de)serialization: whitespace edge lists and a small json form.

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    /// One edge per line as two base-10 vertex ids. Blank lines and lines
    /// starting with '#' are ignored. The vertex count is 1 + the largest id
    /// unless a header line `n <count>` is present.
    EdgeList,
    /// `{"n": 3, "edges": [[0, 1], [1, 2]]}`
    Json,
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Json => parse_json(text),
    }
}

pub fn serialize_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => {
            let mut out = format!("n {}\n", g.n());
            for (u, v) in g.edges() {
                out.push_str(&format!("{u} {v}\n"));
            }
            out
        }
        GraphFormat::Json => {
            let jg = JsonGraph { n: g.n(), edges: g.edges().collect() };
            serde_json::to_string(&jg).expect("graph json serializes")
        }
    }
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut declared_n: Option<usize> = None;
    let mut max_id: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "n" {
            if tokens.len() != 2 {
                return Err(Error::Parse { line: line_no, message: "header must be `n <count>`".into() });
            }
            if declared_n.is_some() {
                return Err(Error::Parse { line: line_no, message: "duplicate `n` header".into() });
            }
            let count = tokens[1].parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("vertex count {:?} is not a nonnegative integer", tokens[1]),
            })?;
            declared_n = Some(count);
            continue;
        }
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected two vertex ids, found {} token(s)", tokens.len()),
            });
        }
        let parse_id = |t: &str| {
            t.parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("vertex id {t:?} is not a nonnegative integer"),
            })
        };
        let u = parse_id(tokens[0])?;
        let v = parse_id(tokens[1])?;
        if u == v {
            return Err(Error::Parse { line: line_no, message: format!("self loop at vertex {u}") });
        }
        max_id = Some(max_id.map_or(u.max(v), |m: usize| m.max(u.max(v))));
        edges.push((u, v));
    }
    let inferred = max_id.map_or(0, |m| m + 1);
    let n = match declared_n {
        Some(d) => {
            if inferred > d {
                return Err(Error::Input(format!(
                    "edge references vertex {} but header declares n = {d}",
                    inferred - 1
                )));
            }
            d
        }
        None => inferred,
    };
    Graph::from_edges(n, &edges)
}

fn parse_json(text: &str) -> Result<Graph> {
    let jg: JsonGraph = serde_json::from_str(text)
        .map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })?;
    Graph::from_edges(jg.n, &jg.edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_basics() {
        let g = parse_graph("0 1\n1 2\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn edge_list_comments_blanks_header() {
        let text = "# a path with an isolated vertex\nn 5\n\n0 1\n  1 2 \n";
        let g = parse_graph(text, GraphFormat::EdgeList).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.degree(4), 0);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        let err = parse_graph("0 1\n2\n", GraphFormat::EdgeList).unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_graph("0 a\n", GraphFormat::EdgeList).is_err());
        assert!(parse_graph("3 3\n", GraphFormat::EdgeList).is_err());
        assert!(parse_graph("n 2\nn 3\n", GraphFormat::EdgeList).is_err());
        assert!(parse_graph("n 2\n0 5\n", GraphFormat::EdgeList).is_err());
        assert!(parse_graph("n x\n", GraphFormat::EdgeList).is_err());
    }

    #[test]
    fn empty_inputs() {
        let g = parse_graph("", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.n(), 0);
        let g = parse_graph("# only a comment\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.n(), 0);
        let g = parse_graph("n 4\n", GraphFormat::EdgeList).unwrap();
        assert_eq!((g.n(), g.edge_count()), (4, 0));
    }

    #[test]
    fn json_roundtrip_and_errors() {
        let g = parse_graph(r#"{"n": 4, "edges": [[0,1],[2,3]]}"#, GraphFormat::Json).unwrap();
        assert_eq!(g.edge_count(), 2);
        let back = serialize_graph(&g, GraphFormat::Json);
        assert_eq!(back, r#"{"n":4,"edges":[[0,1],[2,3]]}"#);
        assert!(parse_graph("{", GraphFormat::Json).is_err());
        assert!(parse_graph(r#"{"n": 2, "edges": [[0,5]]}"#, GraphFormat::Json).is_err());
    }

    #[test]
    fn roundtrip_identity_both_formats() {
        let g = crate::generate::from_spec("erdos_renyi(17,2/5,5)").unwrap();
        for fmt in [GraphFormat::EdgeList, GraphFormat::Json] {
            let text = serialize_graph(&g, fmt);
            let back = parse_graph(&text, fmt).unwrap();
            assert_eq!(g, back);
        }
    }

    #[test]
    fn edge_list_preserves_isolated_vertices_via_header() {
        let mut g = Graph::empty(6);
        g.toggle_edge(1, 4);
        let text = serialize_graph(&g, GraphFormat::EdgeList);
        assert!(text.starts_with("n 6\n"));
        let back = parse_graph(&text, GraphFormat::EdgeList).unwrap();
        assert_eq!(g, back);
    }
}
