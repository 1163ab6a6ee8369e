//! Immutable simple-graph representation and the fixed-capacity vertex set
//! that backs every colored set, leak set, and closure in the crate.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Largest supported vertex count. Two machine words cover every family
/// instance the crate generates (Q_7 has 128 vertices).
pub const CAPACITY: usize = 128;

const WORDS: usize = CAPACITY / 64;

/// Set of vertex ids over `0..CAPACITY`, stored as a fixed pair of words so
/// the propagation inner loops stay branch-free and allocation-free.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet { words: [0; WORDS] }
    }

    /// The full set `{0..n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= CAPACITY, "vertex count {n} exceeds capacity {CAPACITY}");
        let mut s = Self::empty();
        for w in 0..WORDS {
            let lo = w * 64;
            if n > lo {
                let k = (n - lo).min(64);
                s.words[w] = if k == 64 { !0 } else { (1u64 << k) - 1 };
            }
        }
        s
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::empty();
        s.insert(v);
        s
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(ids: I) -> Self {
        let mut s = Self::empty();
        for v in ids {
            s.insert(v);
        }
        s
    }

    #[inline(always)]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < CAPACITY);
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    #[inline(always)]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < CAPACITY);
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    #[inline(always)]
    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < CAPACITY);
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    #[inline(always)]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline(always)]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline(always)]
    pub fn union(&self, other: &Self) -> Self {
        let mut out = *self;
        for w in 0..WORDS {
            out.words[w] |= other.words[w];
        }
        out
    }

    #[inline(always)]
    pub fn intersect(&self, other: &Self) -> Self {
        let mut out = *self;
        for w in 0..WORDS {
            out.words[w] &= other.words[w];
        }
        out
    }

    /// Set difference `self \ other`.
    #[inline(always)]
    pub fn minus(&self, other: &Self) -> Self {
        let mut out = *self;
        for w in 0..WORDS {
            out.words[w] &= !other.words[w];
        }
        out
    }

    /// `{0..n-1} \ self`. Requires `self ⊆ {0..n-1}`.
    pub fn complement(&self, n: usize) -> Self {
        Self::full(n).minus(self)
    }

    #[inline(always)]
    pub fn is_subset_of(&self, other: &Self) -> bool {
        (0..WORDS).all(|w| self.words[w] & !other.words[w] == 0)
    }

    #[inline(always)]
    pub fn intersects(&self, other: &Self) -> bool {
        (0..WORDS).any(|w| self.words[w] & other.words[w] != 0)
    }

    /// Smallest id in the set, if any.
    #[inline(always)]
    pub fn first(&self) -> Option<usize> {
        for w in 0..WORDS {
            if self.words[w] != 0 {
                return Some(w * 64 + self.words[w].trailing_zeros() as usize);
            }
        }
        None
    }

    /// Ascending-id iterator.
    pub fn iter(&self) -> VertexSetIter {
        VertexSetIter { words: self.words, word: 0 }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_ids(iter)
    }
}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = VertexSetIter;
    fn into_iter(self) -> VertexSetIter {
        self.iter()
    }
}

pub struct VertexSetIter {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for VertexSetIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.words[self.word];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.word] = w & (w - 1);
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
        }
        None
    }
}

/// Sets compare as their ascending id sequences, so the minimum of a family
/// of same-size sets is the lexicographically least one. A plain derive on
/// the words would order `{0,5}` after `{1}`, which is not what reports and
/// witnesses need.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

/// Immutable simple undirected graph over dense ids `0..n-1`.
///
/// Invariants enforced at construction: adjacency is symmetric, has no
/// loops, and every row stays inside `{0..n-1}`.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    label: String,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph needs at least one vertex")]
    NoVertices,
    #[error("vertex count {0} exceeds capacity {CAPACITY}")]
    TooManyVertices(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge endpoint {0} out of range for {1} vertices")]
    VertexOutOfRange(usize, usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected integer, got {token:?}")]
    BadToken { line: usize, token: String },
    #[error("line {line}: expected \"u v\", got {found} fields")]
    BadArity { line: usize, found: usize },
    #[error("line {line}: self-loop {v} {v} is not allowed")]
    SelfLoop { line: usize, v: usize },
    #[error("line {line}: vertex {v} out of range for declared count {n}")]
    OutOfHeaderRange { line: usize, v: usize, n: usize },
    #[error("line {line}: vertex count must be between 1 and {CAPACITY}")]
    BadHeaderCount { line: usize },
    #[error("line {line}: vertex id {v} exceeds capacity {CAPACITY}")]
    TooLarge { line: usize, v: usize },
    #[error("edge list defines no vertices (need a \"n <count>\" header or at least one edge)")]
    NoVertices,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse silently;
    /// self-loops are rejected.
    pub fn from_edges<I>(n: usize, edges: I, label: impl Into<String>) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if n > CAPACITY {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = vec![VertexSet::empty(); n];
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj, label: label.into() })
    }

    #[inline(always)]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline(always)]
    pub fn adj(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Number of neighbors of `v`. Panics on an out-of-range id.
    #[inline(always)]
    pub fn degree(&self, v: usize) -> usize {
        assert!(v < self.n, "vertex {v} out of range for {} vertices", self.n);
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.adj[v].len()).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.len()).sum::<usize>() / 2
    }

    /// The full vertex set `{0..n-1}`.
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }

    /// Parses the edge-list text format: one `u v` pair per line, `#`
    /// comments and blank lines ignored, and an optional leading
    /// `n <count>` header for isolated vertices.
    pub fn parse_edge_list(text: &str) -> Result<Self, ParseError> {
        let mut header: Option<usize> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut max_id: Option<usize> = None;
        let mut seen_data = false;

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            if !seen_data && fields[0] == "n" {
                if fields.len() != 2 {
                    return Err(ParseError::BadArity { line, found: fields.len() });
                }
                let count: usize = fields[1]
                    .parse()
                    .map_err(|_| ParseError::BadToken { line, token: fields[1].to_string() })?;
                if count == 0 || count > CAPACITY {
                    return Err(ParseError::BadHeaderCount { line });
                }
                header = Some(count);
                seen_data = true;
                continue;
            }
            seen_data = true;
            if fields.len() != 2 {
                return Err(ParseError::BadArity { line, found: fields.len() });
            }
            let mut pair = [0usize; 2];
            for (slot, tok) in pair.iter_mut().zip(&fields) {
                *slot = tok
                    .parse()
                    .map_err(|_| ParseError::BadToken { line, token: tok.to_string() })?;
            }
            let (u, v) = (pair[0], pair[1]);
            if u == v {
                return Err(ParseError::SelfLoop { line, v: u });
            }
            for w in [u, v] {
                if w >= CAPACITY {
                    return Err(ParseError::TooLarge { line, v: w });
                }
                if let Some(n) = header {
                    if w >= n {
                        return Err(ParseError::OutOfHeaderRange { line, v: w, n });
                    }
                }
            }
            max_id = Some(max_id.map_or(u.max(v), |m| m.max(u).max(v)));
            edges.push((u, v));
        }

        let n = match (header, max_id) {
            (Some(n), _) => n,
            (None, Some(m)) => m + 1,
            (None, None) => return Err(ParseError::NoVertices),
        };
        let label = format!("edge-list(n={n})");
        // from_edges cannot fail here: loops and ranges were checked above.
        Ok(Graph::from_edges(n, edges, label).expect("validated edge list"))
    }

    /// Renders the graph back into the edge-list format, header included.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push_str(&format!("{u} {v}\n"));
                }
            }
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, n={}, m={})", self.label, self.n, self.edge_count())
    }
}

/// `{0..n-1} \ s` as a free function, mirroring the set-algebra surface.
pub fn complement_set(s: &VertexSet, n: usize) -> VertexSet {
    s.complement(n)
}
