//! Deterministic generators for the graph families the solver and the
//! verification tables work over. Every family fixes its vertex-id layout so
//! constructions like "the inner cycle" or "the half-cube" can be written
//! down by formula from the command line.

use thiserror::Error;

use crate::graph::{Graph, VertexSet, CAPACITY};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("hypercube dimension must be between 1 and 7, got {0}")]
    DimensionOutOfRange(usize),
    #[error("generalized Petersen graph needs n >= 3, got {0}")]
    CycleTooShort(usize),
    #[error("skip k={k} out of range for n={n} (need 1 <= k <= floor((n-1)/2))")]
    SkipOutOfRange { n: usize, k: usize },
    #[error("{what} must be at least {min}, got {got}")]
    TooSmall { what: &'static str, min: usize, got: usize },
    #[error("family instance has {0} vertices, exceeding capacity {CAPACITY}")]
    TooLarge(usize),
}

fn check_size(n: usize) -> Result<usize, FamilyError> {
    if n > CAPACITY {
        Err(FamilyError::TooLarge(n))
    } else {
        Ok(n)
    }
}

/// d-dimensional hypercube Q_d.
///
/// Layout: vertex id is the integer whose binary digits are the 0/1
/// coordinate sequence, with coordinate 1 stored in bit 0. Two ids are
/// adjacent iff they differ in exactly one bit.
pub fn hypercube(d: usize) -> Result<Graph, FamilyError> {
    if !(1..=7).contains(&d) {
        return Err(FamilyError::DimensionOutOfRange(d));
    }
    let n = check_size(1usize << d)?;
    let mut edges = Vec::with_capacity(d * n / 2);
    for v in 0..n {
        for b in 0..d {
            let u = v ^ (1 << b);
            if u > v {
                edges.push((v, u));
            }
        }
    }
    Ok(Graph::from_edges(n, edges, format!("hypercube(d={d})")).expect("valid construction"))
}

/// The 2^(d-1) vertices of Q_d whose first coordinate (bit 0) is zero; they
/// span a (d-1)-dimensional subcube.
pub fn half_cube_set(d: usize) -> Result<VertexSet, FamilyError> {
    if !(1..=7).contains(&d) {
        return Err(FamilyError::DimensionOutOfRange(d));
    }
    Ok((0..1usize << d).filter(|v| v & 1 == 0).collect())
}

/// Generalized Petersen graph GP(n,k).
///
/// Layout: ids 0..n-1 form the outer cycle U (u_{i+1} is id i, edges
/// i ~ i+1 mod n); ids n..2n-1 form the inner vertices X (x_{i+1} is id
/// n+i, edges n+i ~ n+((i+k) mod n)); spokes join i ~ n+i. GP(n,1) is the
/// prism over an n-cycle.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::CycleTooShort(n));
    }
    if k < 1 || 2 * k >= n {
        return Err(FamilyError::SkipOutOfRange { n, k });
    }
    let total = check_size(2 * n)?;
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((n + i, n + (i + k) % n));
        edges.push((i, n + i));
    }
    Ok(Graph::from_edges(total, edges, format!("gp(n={n},k={k})")).expect("valid construction"))
}

/// Complete bipartite graph K_{m,n}.
///
/// Layout: ids 0..m-1 are side X, ids m..m+n-1 are side Y; every cross pair
/// is an edge.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph, FamilyError> {
    if m < 1 {
        return Err(FamilyError::TooSmall { what: "side m", min: 1, got: m });
    }
    if n < 1 {
        return Err(FamilyError::TooSmall { what: "side n", min: 1, got: n });
    }
    let total = check_size(m + n)?;
    let mut edges = Vec::with_capacity(m * n);
    for x in 0..m {
        for y in m..m + n {
            edges.push((x, y));
        }
    }
    Ok(Graph::from_edges(total, edges, format!("bipartite(m={m},n={n})"))
        .expect("valid construction"))
}

/// Wheel W_n: an n-cycle (ids 0..n-1) plus a hub (id n) adjacent to every
/// cycle vertex.
pub fn wheel(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::TooSmall { what: "cycle length", min: 3, got: n });
    }
    let total = check_size(n + 1)?;
    let mut edges = Vec::with_capacity(2 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, n));
    }
    Ok(Graph::from_edges(total, edges, format!("wheel(n={n})")).expect("valid construction"))
}

/// Path on n vertices: 0 - 1 - ... - n-1.
pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::TooSmall { what: "path length", min: 1, got: n });
    }
    check_size(n)?;
    let edges = (0..n.saturating_sub(1)).map(|i| (i, i + 1));
    Ok(Graph::from_edges(n, edges, format!("path(n={n})")).expect("valid construction"))
}

/// Cycle on n vertices: 0 - 1 - ... - n-1 - 0.
pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::TooSmall { what: "cycle length", min: 3, got: n });
    }
    check_size(n)?;
    let edges = (0..n).map(|i| (i, (i + 1) % n));
    Ok(Graph::from_edges(n, edges, format!("cycle(n={n})")).expect("valid construction"))
}

/// Uniform random labeled tree on n vertices, decoded from a random Prüfer
/// sequence.
///
/// The construction is pinned so seeds are portable: a SplitMix64 stream
/// seeded with `seed` draws the n-2 sequence entries uniformly from 0..n
/// (rejection sampling, no modulo bias), and the decode repeatedly joins the
/// smallest-id degree-one vertex to the next sequence entry.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::TooSmall { what: "tree size", min: 1, got: n });
    }
    check_size(n)?;
    let label = format!("tree(n={n},seed={seed})");
    if n == 1 {
        return Ok(Graph::from_edges(1, [], label).expect("valid construction"));
    }
    let mut rng = SplitMix64::new(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.below(n as u64) as usize).collect();

    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always remains");
        edges.push((leaf, s));
        degree[leaf] = 0;
        degree[s] -= 1;
    }
    let mut last = (0..n).filter(|&v| degree[v] == 1);
    let (a, b) = (last.next().unwrap(), last.next().unwrap());
    edges.push((a, b));
    Ok(Graph::from_edges(n, edges, label).expect("valid construction"))
}

/// SplitMix64: the fixed RNG behind seeded generators. Small enough to pin
/// exactly, which keeps seeds meaningful across reimplementations.
#[derive(Clone)]
pub struct SplitMix64(u64);

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..n` by rejection.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        let zone = u64::MAX - u64::MAX % n;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % n;
            }
        }
    }
}

/// One-line layout descriptions, surfaced through `families --describe`.
pub fn describe() -> Vec<(&'static str, &'static str, &'static str)> {
    vec![
        (
            "hypercube",
            "--d D (1..7)",
            "2^D vertices; id bits are the coordinate sequence (coordinate 1 = bit 0); ids adjacent iff they differ in one bit",
        ),
        (
            "gp",
            "--n N (>=3) --k K (1..floor((N-1)/2))",
            "2N vertices; 0..N-1 outer cycle u_1..u_N, N..2N-1 inner x_1..x_N with skip K, spokes i ~ N+i",
        ),
        (
            "bipartite",
            "--m M --n N (>=1)",
            "M+N vertices; 0..M-1 side X, M..M+N-1 side Y, all cross edges",
        ),
        ("wheel", "--n N (>=3)", "N+1 vertices; 0..N-1 cycle, id N is the hub"),
        ("path", "--n N (>=1)", "vertices 0..N-1 in a line"),
        ("cycle", "--n N (>=3)", "vertices 0..N-1 in a ring"),
        (
            "tree",
            "--n N (>=1) --seed S",
            "uniform random labeled tree; SplitMix64(S) draws a Prufer sequence, decoded smallest-leaf-first",
        ),
    ]
}
