use super::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("missing header line \"n m\"")]
    MissingHeader,
    #[error("malformed line {0:?}")]
    Malformed(String),
    #[error("vertex {vertex} out of range 0..{n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("header announces {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
}

fn two_numbers(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_ascii_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

/// Parses the edge-list format: a header line `n m`, then `m` lines `u v`.
/// Blank lines are ignored; every error carries its 1-based line number.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines.next().ok_or(ParseError {
        line: 1,
        kind: ParseErrorKind::MissingHeader,
    })?;
    let (n, m) = two_numbers(header).ok_or_else(|| ParseError {
        line: header_line,
        kind: ParseErrorKind::Malformed(header.to_string()),
    })?;

    let mut seen = std::collections::HashSet::new();
    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, text) in lines {
        last_line = line;
        let err = |kind| ParseError { line, kind };
        let (u, v) = two_numbers(text).ok_or_else(|| err(ParseErrorKind::Malformed(text.to_string())))?;
        for x in [u, v] {
            if x >= n {
                return Err(err(ParseErrorKind::VertexOutOfRange { vertex: x, n }));
            }
        }
        if u == v {
            return Err(err(ParseErrorKind::SelfLoop(u)));
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(err(ParseErrorKind::DuplicateEdge(key.0, key.1)));
        }
        edges.push(key);
    }
    if edges.len() != m {
        return Err(ParseError {
            line: last_line,
            kind: ParseErrorKind::EdgeCount {
                expected: m,
                found: edges.len(),
            },
        });
    }
    Graph::new(n, edges).map_err(|e| ParseError {
        line: header_line,
        kind: match e {
            GraphError::VertexOutOfRange { vertex, n } => ParseErrorKind::VertexOutOfRange { vertex, n },
            GraphError::SelfLoop(v) => ParseErrorKind::SelfLoop(v),
            GraphError::DuplicateEdge(u, v) => ParseErrorKind::DuplicateEdge(u, v),
            GraphError::Empty => ParseErrorKind::MissingHeader,
        },
    })
}
