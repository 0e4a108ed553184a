//! Streaming readers for DIMACS `.col` files and SNAP-style edge lists.

use std::io::BufRead;
use std::str::SplitAsciiWhitespace;

use thiserror::Error;

use super::labels::LabelMap;
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    /// DIMACS: `p edge <n> <m>` then 1-based `e <u> <v>` lines.
    Col,
    /// One `<label> <label>` pair per line; `#` starts a comment line.
    Edges,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("edge line before the problem line")]
    MissingProblemLine,
    #[error("malformed problem line, expected `p edge <n> <m>`")]
    MalformedProblemLine,
    #[error("second problem line")]
    DuplicateProblemLine,
    #[error("malformed edge line")]
    MalformedEdge,
    #[error("vertex {vertex} outside 1..={n}")]
    EndpointOutOfRange { vertex: usize, n: usize },
    #[error("unrecognized line")]
    UnknownLine,
    #[error("read failed: {0}")]
    Io(String),
}

impl ParseError {
    fn new(line: usize, kind: ParseErrorKind) -> Self {
        ParseError { line, kind }
    }
}

#[derive(Debug, Clone)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub labels: LabelMap,
    pub format: Format,
    /// Non-fatal oddities, such as an edge count that disagrees with the
    /// problem line.
    pub warnings: Vec<String>,
}

trait LineParser {
    fn feed(&mut self, line_no: usize, line: &str) -> Result<(), ParseError>;
    fn finish(self: Box<Self>, last_line: usize) -> Result<ParsedGraph, ParseError>;
}

#[derive(Default)]
struct ColParser {
    header: Option<(usize, usize)>,
    edge_lines: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl ColParser {
    fn endpoint(
        tok: &mut SplitAsciiWhitespace<'_>,
        n: usize,
        line_no: usize,
    ) -> Result<Vertex, ParseError> {
        let v: usize = tok
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(ParseError::new(line_no, ParseErrorKind::MalformedEdge))?;
        if v == 0 || v > n {
            return Err(ParseError::new(
                line_no,
                ParseErrorKind::EndpointOutOfRange { vertex: v, n },
            ));
        }
        Ok(v - 1)
    }
}

impl LineParser for ColParser {
    fn feed(&mut self, line_no: usize, line: &str) -> Result<(), ParseError> {
        let mut tok = line.split_ascii_whitespace();
        match tok.next() {
            None | Some("c") => Ok(()),
            Some(t) if t.starts_with('c') => Ok(()),
            Some("p") => {
                if self.header.is_some() {
                    return Err(ParseError::new(
                        line_no,
                        ParseErrorKind::DuplicateProblemLine,
                    ));
                }
                let bad = || ParseError::new(line_no, ParseErrorKind::MalformedProblemLine);
                tok.next().ok_or_else(bad)?;
                let n = tok.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
                let m = tok.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
                self.header = Some((n, m));
                self.edges.reserve(m);
                Ok(())
            }
            Some("e") => {
                let (n, _) = self
                    .header
                    .ok_or(ParseError::new(line_no, ParseErrorKind::MissingProblemLine))?;
                let u = Self::endpoint(&mut tok, n, line_no)?;
                let v = Self::endpoint(&mut tok, n, line_no)?;
                self.edges.push((u, v));
                self.edge_lines += 1;
                Ok(())
            }
            // vertex weights / descriptors carry no adjacency
            Some("n") | Some("x") | Some("d") => Ok(()),
            Some(_) => Err(ParseError::new(line_no, ParseErrorKind::UnknownLine)),
        }
    }

    fn finish(self: Box<Self>, last_line: usize) -> Result<ParsedGraph, ParseError> {
        let (n, declared) = self.header.ok_or(ParseError::new(
            last_line,
            ParseErrorKind::MissingProblemLine,
        ))?;
        let graph = Graph::from_edges(n, self.edges).expect("endpoints checked while parsing");
        let mut warnings = Vec::new();
        if declared != self.edge_lines || declared != graph.num_edges() {
            warnings.push(format!(
                "problem line declares {declared} edges; read {} edge lines, {} distinct edges",
                self.edge_lines,
                graph.num_edges()
            ));
        }
        Ok(ParsedGraph {
            graph,
            labels: LabelMap::one_based(n),
            format: Format::Col,
            warnings,
        })
    }
}

#[derive(Default)]
struct EdgeListParser {
    labels: LabelMap,
    edges: Vec<(Vertex, Vertex)>,
}

impl LineParser for EdgeListParser {
    fn feed(&mut self, line_no: usize, line: &str) -> Result<(), ParseError> {
        let line = line.trim_start();
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            return Ok(());
        }
        let mut tok = line.split_ascii_whitespace();
        match (tok.next(), tok.next()) {
            (Some(a), Some(b)) => {
                let u = self.labels.intern(a);
                let v = self.labels.intern(b);
                self.edges.push((u, v));
                Ok(())
            }
            _ => Err(ParseError::new(line_no, ParseErrorKind::MalformedEdge)),
        }
    }

    fn finish(self: Box<Self>, _last_line: usize) -> Result<ParsedGraph, ParseError> {
        let graph = Graph::from_edges(self.labels.len(), self.edges).expect("ids are interned");
        Ok(ParsedGraph {
            graph,
            labels: self.labels,
            format: Format::Edges,
            warnings: Vec::new(),
        })
    }
}

fn is_comment(line: &str) -> bool {
    let t = line.trim_start();
    t.is_empty()
        || t.starts_with('#')
        || t.starts_with('%')
        || t == "c"
        || t.starts_with("c ")
        || t.starts_with("c\t")
}

/// Picks the format from the first significant line: a `p` problem line
/// means DIMACS, anything else an edge list.
fn detect(line: &str) -> Format {
    let mut tok = line.split_ascii_whitespace();
    match tok.next() {
        Some("p") | Some("e") => Format::Col,
        _ => Format::Edges,
    }
}

/// Reads a graph, detecting the format when `format` is `None`.
pub fn parse_graph<R: BufRead>(
    mut reader: R,
    format: Option<Format>,
) -> Result<ParsedGraph, ParseError> {
    let mut parser: Option<Box<dyn LineParser>> = format.map(new_parser);
    let mut pending: Vec<(usize, String)> = Vec::new();
    let mut buf = String::new();
    let mut line_no = 0;
    loop {
        buf.clear();
        let read = reader
            .read_line(&mut buf)
            .map_err(|e| ParseError::new(line_no + 1, ParseErrorKind::Io(e.to_string())))?;
        if read == 0 {
            break;
        }
        line_no += 1;
        let line = buf.trim_end_matches(['\n', '\r']);
        match parser.as_mut() {
            Some(p) => p.feed(line_no, line)?,
            None if is_comment(line) => pending.push((line_no, line.to_owned())),
            None => {
                let mut p = new_parser(detect(line));
                for (no, l) in pending.drain(..) {
                    p.feed(no, &l)?;
                }
                p.feed(line_no, line)?;
                parser = Some(p);
            }
        }
    }
    let parser = parser.unwrap_or_else(|| new_parser(Format::Edges));
    parser.finish(line_no)
}

fn new_parser(format: Format) -> Box<dyn LineParser> {
    match format {
        Format::Col => Box::<ColParser>::default(),
        Format::Edges => Box::<EdgeListParser>::default(),
    }
}

pub fn parse_dimacs_col<R: BufRead>(reader: R) -> Result<ParsedGraph, ParseError> {
    parse_graph(reader, Some(Format::Col))
}

pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<ParsedGraph, ParseError> {
    parse_graph(reader, Some(Format::Edges))
}
