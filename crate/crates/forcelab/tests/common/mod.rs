//! Shared test helpers: an independent reference implementation of the game
//! (plain adjacency lists, round-based sweeps, no pruning, no heuristics, no
//! bitsets) and a deterministic instance generator. The reference path
//! deliberately shares no code with the engine it checks.

#![allow(dead_code)]

use forcelab::{Graph, VertexSet};

/// xorshift64*; distinct from the library's SplitMix64 on purpose.
pub struct XorShift(u64);

impl XorShift {
    pub fn new(seed: u64) -> Self {
        XorShift(seed.wrapping_mul(2685821657736338717).max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    pub fn chance(&mut self, percent: u64) -> bool {
        self.below(100) < percent
    }
}

/// Plain adjacency lists extracted from a graph.
pub fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n()).map(|v| g.adj(v).to_vec()).collect()
}

/// Reference closure: sweep all vertices, apply every applicable force as a
/// batch, repeat until stable.
pub fn naive_closure(adj: &[Vec<usize>], initial: &[bool], leaky: &[bool]) -> Vec<bool> {
    let mut colored = initial.to_vec();
    loop {
        let mut forced = Vec::new();
        for v in 0..adj.len() {
            if colored[v] && !leaky[v] {
                let uncolored: Vec<usize> =
                    adj[v].iter().copied().filter(|&u| !colored[u]).collect();
                if uncolored.len() == 1 {
                    forced.push(uncolored[0]);
                }
            }
        }
        let mut changed = false;
        for u in forced {
            if !colored[u] {
                colored[u] = true;
                changed = true;
            }
        }
        if !changed {
            return colored;
        }
    }
}

fn mask_from_set(set: &VertexSet, n: usize) -> Vec<bool> {
    let mut mask = vec![false; n];
    for v in set.iter() {
        mask[v] = true;
    }
    mask
}

pub fn naive_closure_set(g: &Graph, initial: &VertexSet, leaky: &VertexSet) -> VertexSet {
    let adj = adjacency(g);
    let out = naive_closure(&adj, &mask_from_set(initial, g.n()), &mask_from_set(leaky, g.n()));
    (0..g.n()).filter(|&v| out[v]).collect()
}

fn all_k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(n: usize, k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in start..n {
            current.push(v);
            rec(n, k, v + 1, current, out);
            current.pop();
        }
    }
    rec(n, k, 0, &mut current, &mut out);
    out
}

/// Reference leaky-forcing decision: literally test every placement.
pub fn naive_is_leaky(adj: &[Vec<usize>], initial: &[bool], ell: usize) -> bool {
    let n = adj.len();
    let mut ok = true;
    for placement in all_k_subsets(n, ell) {
        let mut leaky = vec![false; n];
        for v in placement {
            leaky[v] = true;
        }
        let colored = naive_closure(adj, initial, &leaky);
        if colored.iter().any(|&c| !c) {
            ok = false;
        }
    }
    ok
}

/// The lexicographically first failing placement, if any.
pub fn naive_first_failing_placement(
    adj: &[Vec<usize>],
    initial: &[bool],
    ell: usize,
) -> Option<Vec<usize>> {
    let n = adj.len();
    for placement in all_k_subsets(n, ell) {
        let mut leaky = vec![false; n];
        for &v in &placement {
            leaky[v] = true;
        }
        let colored = naive_closure(adj, initial, &leaky);
        if colored.iter().any(|&c| !c) {
            return Some(placement);
        }
    }
    None
}

/// Reference solver: cardinality-ascending sweep over every subset, no
/// mandatory-vertex restriction, no fail-fast ordering.
pub fn naive_min_leaky(g: &Graph, ell: usize) -> (usize, Vec<usize>) {
    let adj = adjacency(g);
    let n = g.n();
    for size in 1..=n {
        for candidate in all_k_subsets(n, size) {
            let mut initial = vec![false; n];
            for &v in &candidate {
                initial[v] = true;
            }
            if naive_is_leaky(&adj, &initial, ell) {
                return (size, candidate);
            }
        }
    }
    unreachable!("the full vertex set always forces");
}

/// Deterministic random graph: each pair becomes an edge with the given
/// percentage chance.
pub fn random_graph(n: usize, edge_percent: u64, seed: u64) -> Graph {
    let mut rng = XorShift::new(seed ^ 0xABCD_EF01_2345_6789);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(edge_percent) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges, format!("random(n={n},p={edge_percent}%,seed={seed})")).unwrap()
}

/// Random subset with the given inclusion chance.
pub fn random_subset(n: usize, percent: u64, rng: &mut XorShift) -> VertexSet {
    (0..n).filter(|_| rng.chance(percent)).collect()
}

/// Applies forces one at a time in random order until no force applies;
/// returns the final colored set. Used to confirm the closure is
/// order-independent.
pub fn random_order_closure(
    g: &Graph,
    initial: &VertexSet,
    leaky: &VertexSet,
    rng: &mut XorShift,
) -> VertexSet {
    let adj = adjacency(g);
    let n = g.n();
    let mut colored = mask_from_set(initial, n);
    let leaky = mask_from_set(leaky, n);
    loop {
        let mut applicable = Vec::new();
        for v in 0..n {
            if colored[v] && !leaky[v] {
                let uncolored: Vec<usize> =
                    adj[v].iter().copied().filter(|&u| !colored[u]).collect();
                if uncolored.len() == 1 {
                    applicable.push((v, uncolored[0]));
                }
            }
        }
        if applicable.is_empty() {
            return (0..n).filter(|&v| colored[v]).collect();
        }
        let pick = applicable[rng.below(applicable.len() as u64) as usize];
        colored[pick.1] = true;
    }
}
