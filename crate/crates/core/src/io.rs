//! Graph file formats.
//!
//! Text: one edge per line, `u v`, `u v id`, `id: u v` or `id: u-v`. Vertex
//! labels are numbers or names; names get fresh ids in order of appearance.
//! `#` starts a comment, except `# isolated: v ...` which declares isolated
//! vertices. Edges without an id get the smallest unused ids in file order.
//! A file whose first non-blank character is `{` is read as JSON.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexId};

enum Label {
    Num(u32),
    Name(String),
}

fn label(tok: &str) -> Label {
    match tok.parse::<u32>() {
        Ok(n) => Label::Num(n),
        Err(_) => Label::Name(tok.to_string()),
    }
}

struct RawEdge {
    line: usize,
    id: Option<u32>,
    u: String,
    v: String,
}

pub fn parse_graph(text: &str) -> Result<Multigraph> {
    if text.trim_start().starts_with('{') {
        return serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        });
    }
    parse_edge_list(text)
}

fn parse_edge_list(text: &str) -> Result<Multigraph> {
    let mut raw = Vec::new();
    let mut isolated = Vec::new();
    for (i, full) in text.lines().enumerate() {
        let line = i + 1;
        let err = |msg: String| Error::Parse { line, msg };
        if let Some(rest) = full.trim().strip_prefix('#') {
            if let Some(vs) = rest.trim().strip_prefix("isolated:") {
                isolated.extend(vs.split_whitespace().map(|s| (line, s.to_string())));
            }
            continue;
        }
        let body = full.split('#').next().unwrap().trim();
        if body.is_empty() {
            continue;
        }
        let (id, rest) = match body.split_once(':') {
            Some((id, rest)) => {
                let id = id
                    .trim()
                    .parse::<u32>()
                    .map_err(|_| err(format!("bad edge id {:?}", id.trim())))?;
                (Some(id), rest.trim())
            }
            None => (None, body),
        };
        let toks: Vec<&str> = rest
            .split(|c: char| c.is_whitespace() || c == '-')
            .filter(|t| !t.is_empty())
            .collect();
        let (u, v, id) = match (toks.as_slice(), id) {
            ([u, v], id) => (u, v, id),
            ([u, v, e], None) => {
                let e = e.parse::<u32>().map_err(|_| err(format!("bad edge id {e:?}")))?;
                (u, v, Some(e))
            }
            _ => return Err(err(format!("expected `u v [id]` or `id: u v`, got {body:?}"))),
        };
        raw.push(RawEdge {
            line,
            id,
            u: u.to_string(),
            v: v.to_string(),
        });
    }

    // numeric labels keep their value; names are numbered after them
    let max_num = raw
        .iter()
        .flat_map(|r| [&r.u, &r.v])
        .chain(isolated.iter().map(|(_, s)| s))
        .filter_map(|s| s.parse::<u32>().ok())
        .max()
        .unwrap_or(0);
    let mut names: BTreeMap<String, u32> = BTreeMap::new();
    let mut resolve = |s: &str| match label(s) {
        Label::Num(n) => VertexId(n),
        Label::Name(name) => {
            let next = max_num + 1 + names.len() as u32;
            VertexId(*names.entry(name).or_insert(next))
        }
    };

    let mut g = Multigraph::new();
    let mut used: std::collections::BTreeSet<u32> = std::collections::BTreeSet::new();
    for r in &raw {
        if let Some(id) = r.id {
            if !used.insert(id) {
                return Err(Error::Parse {
                    line: r.line,
                    msg: format!("duplicate edge id {id}"),
                });
            }
        }
    }
    let mut fresh = 1u32;
    for r in &raw {
        let id = match r.id {
            Some(id) => id,
            None => {
                while used.contains(&fresh) {
                    fresh += 1;
                }
                used.insert(fresh);
                fresh
            }
        };
        let (u, v) = (resolve(&r.u), resolve(&r.v));
        g.add_edge(EdgeId(id), u, v).map_err(|e| Error::Parse {
            line: r.line,
            msg: e.to_string(),
        })?;
    }
    for (_, s) in &isolated {
        let v = resolve(s);
        g.add_vertex(v);
    }
    Ok(g)
}

/// Text form accepted by [`parse_graph`].
pub fn write_graph(g: &Multigraph) -> String {
    g.to_string()
}

pub fn to_json(g: &Multigraph) -> String {
    serde_json::to_string(g).expect("graphs always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn lettered_figure_format() {
        let text = "\
# figure 2
1:A-B
2:A-C
3:C-D
4:D-E
5:E-B
6:C-D
7:D-B
8:D-F
9:F-H
10:H-B
11:F-G
12:G-B
";
        let g = parse_graph(text).unwrap();
        let expected = fixtures::fig2();
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.degrees(), expected.degrees());
        assert_eq!(
            crate::hvector::h_poly(&g).unwrap(),
            crate::hvector::h_poly(&expected).unwrap()
        );
    }

    #[test]
    fn round_trips() {
        let mut g = fixtures::fig2();
        g.add_vertex(VertexId(42));
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        assert_eq!(parse_graph(&to_json(&g)).unwrap(), g);
    }

    #[test]
    fn auto_ids_and_comments() {
        let g = parse_graph("1 2 # first\n\n2 3 1\n3 1\n").unwrap();
        assert_eq!(g.to_triples(), vec![(1, 2, 3), (2, 1, 2), (3, 1, 3)]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            parse_graph("1 2\n1 2 3 4\n"),
            Err(Error::Parse {
                line: 2,
                msg: "expected `u v [id]` or `id: u v`, got \"1 2 3 4\"".into()
            })
        );
        assert!(matches!(parse_graph("1 2 5\n2 3 5\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("x: 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("{\"edges\": [}"), Err(Error::Parse { line: 1, .. })));
    }
}
