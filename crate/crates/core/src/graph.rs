//! Bipartite graphs with per-vertex neighbor bitsets.
//!
//! Vertices are addressed per side: `A` vertices are `0..part_a`, `B` vertices
//! are `0..part_b`. External formats are 1-based; everything in memory is
//! 0-based. Edges always join an `A` vertex to a `B` vertex, so the graph is
//! simple and bipartite by construction.

use std::fmt;
use std::io::{BufRead, Write};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// A vertex of a bipartite graph, addressed by side and 0-based index.
///
/// Displays 1-based (`a1`, `b3`) to match the text format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexRef {
    pub side: Side,
    pub index: usize,
}

impl VertexRef {
    pub fn a(index: usize) -> Self {
        VertexRef { side: Side::A, index }
    }

    pub fn b(index: usize) -> Self {
        VertexRef { side: Side::B, index }
    }
}

impl fmt::Display for VertexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::A => write!(f, "a{}", self.index + 1),
            Side::B => write!(f, "b{}", self.index + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge (a{}, b{}) lies outside the {part_a}x{part_b} grid", .a.wrapping_add(1), .b.wrapping_add(1))]
    EdgeOutOfRange {
        a: usize,
        b: usize,
        part_a: usize,
        part_b: usize,
    },
    #[error("duplicate edge (a{}, b{})", .a + 1, .b + 1)]
    DuplicateEdge { a: usize, b: usize },
    #[error("vertex {0} does not exist")]
    InvalidVertex(VertexRef),
    #[error("(a{}, b{}) is not an edge", .0 .0 + 1, .0 .1 + 1)]
    NotAnEdge((usize, usize)),
    #[error("edges (a{}, b{}) and (a{}, b{}) share a vertex", .0 .0 + 1, .0 .1 + 1, .1 .0 + 1, .1 .1 + 1)]
    EdgesNotDisjoint((usize, usize), (usize, usize)),
}

/// Outcome of [`BipartiteGraph::is_complete_between`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Completeness {
    Complete,
    /// The first `(a, b)` pair, in ascending order, that is not an edge.
    Missing(usize, usize),
}

impl Completeness {
    pub fn is_complete(self) -> bool {
        matches!(self, Completeness::Complete)
    }
}

/// An immutable bipartite graph.
///
/// Neighborhoods are stored twice: as bitsets sized to the opposite part (for
/// subset and intersection tests) and as sorted lists (for linear-time scans).
#[derive(Clone)]
pub struct BipartiteGraph {
    part_a: usize,
    part_b: usize,
    edges: Vec<(usize, usize)>,
    bits_a: Vec<FixedBitSet>,
    bits_b: Vec<FixedBitSet>,
    list_a: Vec<Vec<usize>>,
    list_b: Vec<Vec<usize>>,
}

impl PartialEq for BipartiteGraph {
    fn eq(&self, other: &Self) -> bool {
        self.part_a == other.part_a && self.part_b == other.part_b && self.edges == other.edges
    }
}

impl Eq for BipartiteGraph {}

impl fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BipartiteGraph({}x{}, [", self.part_a, self.part_b)?;
        for (k, &(a, b)) in self.edges.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "a{}b{}", a + 1, b + 1)?;
        }
        f.write_str("])")
    }
}

impl BipartiteGraph {
    /// Builds a graph from 0-based `(a, b)` edges. Isolated vertices are kept;
    /// call [`normalize`](Self::normalize) to strip them.
    pub fn new<I>(part_a: usize, part_b: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut bits_a = vec![FixedBitSet::with_capacity(part_b); part_a];
        let mut bits_b = vec![FixedBitSet::with_capacity(part_a); part_b];
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= part_a || b >= part_b {
                return Err(GraphError::EdgeOutOfRange {
                    a,
                    b,
                    part_a,
                    part_b,
                });
            }
            if bits_a[a].put(b) {
                return Err(GraphError::DuplicateEdge { a, b });
            }
            bits_b[b].insert(a);
            list.push((a, b));
        }
        list.sort_unstable();
        let mut list_a = vec![Vec::new(); part_a];
        let mut list_b = vec![Vec::new(); part_b];
        for &(a, b) in &list {
            list_a[a].push(b);
        }
        // second pass keeps B-side lists sorted by A index
        for &(a, b) in &list {
            list_b[b].push(a);
        }
        Ok(BipartiteGraph {
            part_a,
            part_b,
            edges: list,
            bits_a,
            bits_b,
            list_a,
            list_b,
        })
    }

    pub fn empty() -> Self {
        BipartiteGraph::new(0, 0, std::iter::empty()).expect("empty graph is valid")
    }

    pub fn part_a(&self) -> usize {
        self.part_a
    }

    pub fn part_b(&self) -> usize {
        self.part_b
    }

    pub fn part_size(&self, side: Side) -> usize {
        match side {
            Side::A => self.part_a,
            Side::B => self.part_b,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.part_a + self.part_b
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as 0-based `(a, b)` pairs, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_count() == 0
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.part_a && self.bits_a[a].contains(b)
    }

    pub fn contains_vertex(&self, v: VertexRef) -> bool {
        v.index < self.part_size(v.side)
    }

    pub fn degree(&self, v: VertexRef) -> usize {
        match v.side {
            Side::A => self.list_a[v.index].len(),
            Side::B => self.list_b[v.index].len(),
        }
    }

    /// Neighbors of A vertex `a`, as ascending B indices.
    pub fn neighbors_of_a(&self, a: usize) -> &[usize] {
        &self.list_a[a]
    }

    /// Neighbors of B vertex `b`, as ascending A indices.
    pub fn neighbors_of_b(&self, b: usize) -> &[usize] {
        &self.list_b[b]
    }

    /// Neighborhood of A vertex `a` as a bitset over the B side.
    pub fn neighbor_bits_a(&self, a: usize) -> &FixedBitSet {
        &self.bits_a[a]
    }

    /// Neighborhood of B vertex `b` as a bitset over the A side.
    pub fn neighbor_bits_b(&self, b: usize) -> &FixedBitSet {
        &self.bits_b[b]
    }

    pub fn neighbors(&self, v: VertexRef) -> Result<Vec<VertexRef>, GraphError> {
        if !self.contains_vertex(v) {
            return Err(GraphError::InvalidVertex(v));
        }
        Ok(match v.side {
            Side::A => self.list_a[v.index].iter().map(|&b| VertexRef::b(b)).collect(),
            Side::B => self.list_b[v.index].iter().map(|&a| VertexRef::a(a)).collect(),
        })
    }

    /// True iff every vertex has at least one neighbor.
    pub fn is_normalized(&self) -> bool {
        self.list_a.iter().all(|n| !n.is_empty()) && self.list_b.iter().all(|n| !n.is_empty())
    }

    /// Strips isolated vertices and re-indexes the survivors in ascending order.
    pub fn normalize(&self) -> Normalized {
        let keep_a: Vec<usize> = (0..self.part_a).filter(|&a| !self.list_a[a].is_empty()).collect();
        let keep_b: Vec<usize> = (0..self.part_b).filter(|&b| !self.list_b[b].is_empty()).collect();
        let stripped = (0..self.part_a)
            .filter(|&a| self.list_a[a].is_empty())
            .map(VertexRef::a)
            .chain(
                (0..self.part_b)
                    .filter(|&b| self.list_b[b].is_empty())
                    .map(VertexRef::b),
            )
            .collect();
        let graph = self.induced(&keep_a, &keep_b);
        Normalized {
            graph,
            report: StripReport {
                stripped,
                a_origin: keep_a,
                b_origin: keep_b,
            },
        }
    }

    /// Induced subgraph on the given vertices, re-indexed in the order given.
    pub fn induced(&self, keep_a: &[usize], keep_b: &[usize]) -> BipartiteGraph {
        let mut new_b = vec![usize::MAX; self.part_b];
        for (k, &b) in keep_b.iter().enumerate() {
            new_b[b] = k;
        }
        let edges = keep_a.iter().enumerate().flat_map(|(ka, &a)| {
            let new_b = &new_b;
            self.list_a[a]
                .iter()
                .filter(move |&&b| new_b[b] != usize::MAX)
                .map(move |&b| (ka, new_b[b]))
        });
        BipartiteGraph::new(keep_a.len(), keep_b.len(), edges).expect("induced subgraph is valid")
    }

    /// Deletes A vertex `a` and B vertex `b` with their incident edges, then
    /// normalizes.
    pub fn delete_pair(&self, a: usize, b: usize) -> BipartiteGraph {
        let keep_a: Vec<usize> = (0..self.part_a).filter(|&x| x != a).collect();
        let keep_b: Vec<usize> = (0..self.part_b).filter(|&y| y != b).collect();
        self.induced(&keep_a, &keep_b).normalize().graph
    }

    /// Checks whether every `a ∈ a_set`, `b ∈ b_set` pair is an edge.
    pub fn is_complete_between(
        &self,
        a_set: &[usize],
        b_set: &[usize],
    ) -> Result<Completeness, GraphError> {
        let mut a_bits = FixedBitSet::with_capacity(self.part_a);
        let mut b_bits = FixedBitSet::with_capacity(self.part_b);
        for &a in a_set {
            if a >= self.part_a {
                return Err(GraphError::InvalidVertex(VertexRef::a(a)));
            }
            a_bits.insert(a);
        }
        for &b in b_set {
            if b >= self.part_b {
                return Err(GraphError::InvalidVertex(VertexRef::b(b)));
            }
            b_bits.insert(b);
        }
        Ok(self.completeness_bits(&a_bits, &b_bits))
    }

    pub(crate) fn completeness_bits(&self, a_bits: &FixedBitSet, b_bits: &FixedBitSet) -> Completeness {
        for a in a_bits.ones() {
            let row = &self.bits_a[a];
            if !b_bits.is_subset(row) {
                let b = b_bits
                    .difference(row)
                    .next()
                    .expect("non-subset has a difference");
                return Completeness::Missing(a, b);
            }
        }
        Completeness::Complete
    }

    /// Whether the complement of the subgraph induced on the endpoints of two
    /// disjoint edges is connected.
    pub fn complement_connected_on_pairs(
        &self,
        e1: (usize, usize),
        e2: (usize, usize),
    ) -> Result<bool, GraphError> {
        for e in [e1, e2] {
            if !self.has_edge(e.0, e.1) {
                return Err(GraphError::NotAnEdge(e));
            }
        }
        if e1.0 == e2.0 || e1.1 == e2.1 {
            return Err(GraphError::EdgesNotDisjoint(e1, e2));
        }
        // local labels: 0 = a of e1, 1 = b of e1, 2 = a of e2, 3 = b of e2
        let sides = [Side::A, Side::B, Side::A, Side::B];
        let index = [e1.0, e1.1, e2.0, e2.1];
        let adjacent = |u: usize, v: usize| -> bool {
            match (sides[u], sides[v]) {
                (Side::A, Side::B) => self.has_edge(index[u], index[v]),
                (Side::B, Side::A) => self.has_edge(index[v], index[u]),
                _ => false,
            }
        };
        let mut parent = [0usize, 1, 2, 3];
        fn root(parent: &mut [usize; 4], mut x: usize) -> usize {
            while parent[x] != x {
                x = parent[x];
            }
            x
        }
        let mut components = 4;
        for u in 0..4 {
            for v in (u + 1)..4 {
                if !adjacent(u, v) {
                    let (ru, rv) = (root(&mut parent, u), root(&mut parent, v));
                    if ru != rv {
                        parent[ru] = rv;
                        components -= 1;
                    }
                }
            }
        }
        Ok(components == 1)
    }

    pub fn to_record(&self) -> GraphRecord {
        GraphRecord {
            part_a: self.part_a,
            part_b: self.part_b,
            edges: self.edges.iter().map(|&(a, b)| [a + 1, b + 1]).collect(),
        }
    }

    pub fn from_record(record: &GraphRecord) -> Result<Self, GraphError> {
        let edges = record
            .edges
            .iter()
            .map(|&[a, b]| (a.wrapping_sub(1), b.wrapping_sub(1)));
        BipartiteGraph::new(record.part_a, record.part_b, edges)
    }

    /// Serializes to the `p bip` text format, preceded by `c` comment lines.
    pub fn write_text<W: Write>(&self, mut out: W, comments: &[String]) -> std::io::Result<()> {
        for c in comments {
            writeln!(out, "c {c}")?;
        }
        writeln!(out, "p bip {} {} {}", self.part_a, self.part_b, self.edges.len())?;
        for &(a, b) in &self.edges {
            writeln!(out, "e {} {}", a + 1, b + 1)?;
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut buf = Vec::new();
        self.write_text(&mut buf, &[]).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("text format is ASCII")
    }
}

/// Structured form used inside certificates: 1-based, lexicographically
/// sorted edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub part_a: usize,
    pub part_b: usize,
    pub edges: Vec<[usize; 2]>,
}

/// Vertices removed by [`BipartiteGraph::normalize`], with the origin map of
/// the survivors.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StripReport {
    /// Isolated vertices, in the indexing of the graph before stripping.
    pub stripped: Vec<VertexRef>,
    /// `a_origin[k]` is the pre-strip index of normalized A vertex `k`.
    pub a_origin: Vec<usize>,
    pub b_origin: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalized {
    pub graph: BipartiteGraph,
    pub report: StripReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `p bip` header")]
    MissingHeader,
    #[error("second header line")]
    DuplicateHeader,
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("edge line before header")]
    EdgeBeforeHeader,
    #[error("malformed edge line: {0}")]
    MalformedEdge(String),
    #[error("edge ({a}, {b}) out of range")]
    EdgeOutOfRange { a: usize, b: usize },
    #[error("duplicate edge ({a}, {b})")]
    DuplicateEdge { a: usize, b: usize },
    #[error("header declares {declared} edges, found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("unrecognized line: {0}")]
    UnknownLine(String),
    #[error("read error: {0}")]
    Io(String),
}

/// A parse failure. `line` is 1-based; header and count errors that are only
/// detected at end of input report the last line read.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

/// A parsed and normalized graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: BipartiteGraph,
    pub report: StripReport,
    /// Comment lines, without the leading `c`.
    pub comments: Vec<String>,
}

/// Reads one graph in the `p bip` text format and strips isolated vertices.
pub fn parse_graph<R: BufRead>(reader: R) -> Result<ParsedGraph, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut comments = Vec::new();
    let mut line_no = 0;

    for line in reader.lines() {
        line_no += 1;
        let line = line.map_err(|e| ParseError {
            line: line_no,
            kind: ParseErrorKind::Io(e.to_string()),
        })?;
        let err = |kind| ParseError {
            line: line_no,
            kind,
        };
        let trimmed = line.trim();
        let mut tokens = trimmed.split_whitespace();
        match tokens.next() {
            None => continue,
            Some("c") => {
                comments.push(trimmed[1..].trim().to_string());
            }
            Some("p") => {
                if header.is_some() {
                    return Err(err(ParseErrorKind::DuplicateHeader));
                }
                let rest: Vec<&str> = tokens.collect();
                let malformed = || err(ParseErrorKind::MalformedHeader(trimmed.to_string()));
                if rest.len() != 4 || rest[0] != "bip" {
                    return Err(malformed());
                }
                let nums: Result<Vec<usize>, _> = rest[1..].iter().map(|t| t.parse()).collect();
                let nums = nums.map_err(|_| malformed())?;
                header = Some((nums[0], nums[1], nums[2]));
            }
            Some("e") => {
                let (part_a, part_b, _) = header.ok_or_else(|| err(ParseErrorKind::EdgeBeforeHeader))?;
                let rest: Vec<&str> = tokens.collect();
                let malformed = || err(ParseErrorKind::MalformedEdge(trimmed.to_string()));
                if rest.len() != 2 {
                    return Err(malformed());
                }
                let a: usize = rest[0].parse().map_err(|_| malformed())?;
                let b: usize = rest[1].parse().map_err(|_| malformed())?;
                if a == 0 || b == 0 || a > part_a || b > part_b {
                    return Err(err(ParseErrorKind::EdgeOutOfRange { a, b }));
                }
                if !seen.insert((a, b)) {
                    return Err(err(ParseErrorKind::DuplicateEdge { a, b }));
                }
                edges.push((a - 1, b - 1));
            }
            Some(c) if c.starts_with('c') => {
                comments.push(trimmed[1..].trim().to_string());
            }
            Some(_) => return Err(err(ParseErrorKind::UnknownLine(trimmed.to_string()))),
        }
    }

    let (part_a, part_b, declared) = header.ok_or(ParseError {
        line: line_no,
        kind: ParseErrorKind::MissingHeader,
    })?;
    if declared != edges.len() {
        return Err(ParseError {
            line: line_no,
            kind: ParseErrorKind::EdgeCountMismatch {
                declared,
                found: edges.len(),
            },
        });
    }
    let raw = BipartiteGraph::new(part_a, part_b, edges).expect("edges validated while parsing");
    let Normalized { graph, report } = raw.normalize();
    Ok(ParsedGraph {
        graph,
        report,
        comments,
    })
}

pub fn parse_str(text: &str) -> Result<ParsedGraph, ParseError> {
    parse_graph(text.as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> BipartiteGraph {
        BipartiteGraph::new(2, 2, [(0, 0), (1, 0), (1, 1)]).unwrap()
    }

    fn k22() -> BipartiteGraph {
        BipartiteGraph::new(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap()
    }

    #[test]
    fn parses_single_edge() {
        let parsed = parse_str("p bip 1 1 1\ne 1 1\n").unwrap();
        assert_eq!(parsed.graph.edges(), &[(0, 0)]);
        assert!(parsed.report.stripped.is_empty());
    }

    #[test]
    fn parses_path_with_comments_and_blanks() {
        let parsed = parse_str("c a path\n\np bip 2 2 3\ne 1 1\n  e 2 1\ne 2 2\n").unwrap();
        assert_eq!(parsed.graph, p4());
        assert_eq!(parsed.comments, vec!["a path".to_string()]);
    }

    #[test]
    fn strips_isolated_vertex() {
        let parsed = parse_str("p bip 2 1 1\ne 1 1\n").unwrap();
        assert_eq!(parsed.graph.part_a(), 1);
        assert_eq!(parsed.graph.edges(), &[(0, 0)]);
        assert_eq!(parsed.report.stripped, vec![VertexRef::a(1)]);
        assert_eq!(parsed.report.stripped[0].to_string(), "a2");
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let e = parse_str("p bip x 1 1\n").unwrap_err();
        assert_eq!(e.line, 1);
        assert!(matches!(e.kind, ParseErrorKind::MalformedHeader(_)));

        let e = parse_str("c hi\np bip 1 1 1\ne 1 2\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert_eq!(e.kind, ParseErrorKind::EdgeOutOfRange { a: 1, b: 2 });

        let e = parse_str("p bip 1 1 2\ne 1 1\ne 1 1\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert_eq!(e.kind, ParseErrorKind::DuplicateEdge { a: 1, b: 1 });

        let e = parse_str("p bip 1 1 2\ne 1 1\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::EdgeCountMismatch { declared: 2, found: 1 }));

        let e = parse_str("e 1 1\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::EdgeBeforeHeader);

        let e = parse_str("").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::MissingHeader);

        let e = parse_str("p bip 1 1 0\nq\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::UnknownLine(_)));

        let e = parse_str("p bip 1 1 1\ne 0 1\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::EdgeOutOfRange { .. }));
    }

    #[test]
    fn constructor_rejects_bad_edges() {
        assert!(matches!(
            BipartiteGraph::new(1, 1, [(0, 1)]),
            Err(GraphError::EdgeOutOfRange { .. })
        ));
        assert_eq!(
            BipartiteGraph::new(1, 1, [(0, 0), (0, 0)]).unwrap_err(),
            GraphError::DuplicateEdge { a: 0, b: 0 }
        );
    }

    #[test]
    fn neighbor_queries() {
        let k2 = BipartiteGraph::new(1, 1, [(0, 0)]).unwrap();
        assert_eq!(k2.neighbors(VertexRef::a(0)).unwrap(), vec![VertexRef::b(0)]);
        let g = p4();
        assert_eq!(
            g.neighbors(VertexRef::b(0)).unwrap(),
            vec![VertexRef::a(0), VertexRef::a(1)]
        );
        assert_eq!(
            g.neighbors(VertexRef::a(1)).unwrap(),
            vec![VertexRef::b(0), VertexRef::b(1)]
        );
        assert_eq!(
            g.neighbors(VertexRef::b(2)),
            Err(GraphError::InvalidVertex(VertexRef::b(2)))
        );
    }

    #[test]
    fn completeness_between_sets() {
        assert_eq!(k22().is_complete_between(&[0, 1], &[0, 1]).unwrap(), Completeness::Complete);
        assert_eq!(p4().is_complete_between(&[0, 1], &[1]).unwrap(), Completeness::Missing(0, 1));
        assert!(p4().is_complete_between(&[], &[0, 1]).unwrap().is_complete());
        assert!(p4().is_complete_between(&[2], &[]).is_err());
    }

    #[test]
    fn complement_connectivity_examples() {
        assert!(!k22().complement_connected_on_pairs((0, 0), (1, 1)).unwrap());
        assert!(p4().complement_connected_on_pairs((0, 0), (1, 1)).unwrap());
        let two_k2 = BipartiteGraph::new(2, 2, [(0, 0), (1, 1)]).unwrap();
        assert!(two_k2.complement_connected_on_pairs((0, 0), (1, 1)).unwrap());
        assert!(matches!(
            p4().complement_connected_on_pairs((0, 0), (0, 1)),
            Err(GraphError::NotAnEdge(_))
        ));
        assert!(matches!(
            p4().complement_connected_on_pairs((1, 0), (1, 1)),
            Err(GraphError::EdgesNotDisjoint(..))
        ));
    }

    #[test]
    fn delete_pair_normalizes() {
        // deleting a2,b1 from P4 leaves a1 and b2 isolated
        let g = p4().delete_pair(1, 0);
        assert!(g.is_empty());
        let g = p4().delete_pair(0, 0);
        assert_eq!(g.edges(), &[(0, 0)]);
    }

    #[test]
    fn record_is_one_based_and_sorted() {
        let rec = p4().to_record();
        assert_eq!(rec.edges, vec![[1, 1], [2, 1], [2, 2]]);
        assert_eq!(BipartiteGraph::from_record(&rec).unwrap(), p4());
    }
}
