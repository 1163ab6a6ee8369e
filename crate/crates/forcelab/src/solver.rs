//! Exact computation of the l-leaky forcing number by cardinality-ascending
//! candidate search, plus the minimum-set enumeration behind the containment
//! and nested-chain questions.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::engine::{leaky_passes, mandatory_vertices};
use crate::graph::{Graph, VertexSet};
use crate::subsets::Combinations;

/// Candidates are evaluated in lexicographic blocks of this size; a block is
/// always evaluated in full, so counts do not depend on the worker count.
const CANDIDATE_CHUNK: usize = 256;

/// Caps on the total closure evaluations and wall time of one search.
/// Exceeding a cap yields an explicit unknown-with-bounds result, never a
/// wrong number.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_closures: u64,
    pub max_duration: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_closures: 1_000_000_000, max_duration: Duration::from_secs(600) }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SolverOptions {
    /// Restrict candidates to supersets of the degree-at-most-l vertices.
    /// On by default; the off switch exists so tests can confirm the
    /// restriction never changes results.
    pub mandatory_pruning: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { mandatory_pruning: true }
    }
}

/// Exact solve result: the forcing number, the lexicographically least
/// witness of that size, and the search effort.
#[derive(Clone, Debug, Serialize)]
pub struct SolveReport {
    pub status: &'static str,
    pub graph: String,
    pub leaks: usize,
    pub z_value: usize,
    pub witness: VertexSet,
    pub candidates_tested: u64,
    pub leak_sets_tested: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Budget ran out first: every cardinality below `lower` is exhausted, and
/// `upper` always passes (the whole vertex set does).
#[derive(Clone, Debug, Serialize)]
pub struct UnknownReport {
    pub status: &'static str,
    pub graph: String,
    pub leaks: usize,
    pub lower: usize,
    pub upper: usize,
    pub candidates_tested: u64,
    pub leak_sets_tested: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum SolveOutcome {
    Exact(SolveReport),
    Unknown(UnknownReport),
}

impl SolveOutcome {
    pub fn exact(&self) -> Option<&SolveReport> {
        match self {
            SolveOutcome::Exact(r) => Some(r),
            SolveOutcome::Unknown(_) => None,
        }
    }
}

#[derive(Debug, Error)]
#[error("search budget exceeded after {closures} closure evaluations ({elapsed:.1?}); known bounds [{lower}, {upper}]")]
pub struct BudgetExceeded {
    pub lower: usize,
    pub upper: usize,
    pub closures: u64,
    pub elapsed: Duration,
}

/// Computes Z_(l)(g) exactly: iterate target cardinality upward from the
/// mandatory-set size, enumerating supersets of the mandatory set in
/// lexicographic order; the first passing candidate settles the value.
/// `ell = 0` computes the plain zero-forcing number.
pub fn min_leaky_forcing(g: &Graph, ell: usize, budget: &Budget) -> SolveOutcome {
    min_leaky_forcing_with(g, ell, budget, &SolverOptions::default())
}

pub fn min_leaky_forcing_with(
    g: &Graph,
    ell: usize,
    budget: &Budget,
    options: &SolverOptions,
) -> SolveOutcome {
    let start = Instant::now();
    let n = g.n();
    let mandatory =
        if options.mandatory_pruning { mandatory_vertices(g, ell) } else { VertexSet::empty() };
    let free: Vec<usize> = g.vertices().minus(&mandatory).to_vec();
    let base = mandatory.len();

    let mut candidates_tested = 0u64;
    let mut leak_sets_tested = 0u64;
    let mut buf: Vec<VertexSet> = Vec::with_capacity(CANDIDATE_CHUNK);

    for cardinality in base.max(1)..=n {
        let mut combos = Combinations::new(free.clone(), cardinality - base);
        loop {
            if leak_sets_tested > budget.max_closures || start.elapsed() > budget.max_duration {
                return SolveOutcome::Unknown(UnknownReport {
                    status: "unknown",
                    graph: g.label().to_string(),
                    leaks: ell,
                    lower: cardinality,
                    upper: n,
                    candidates_tested,
                    leak_sets_tested,
                    elapsed: start.elapsed(),
                });
            }
            if combos.next_chunk(&mut buf, CANDIDATE_CHUNK) == 0 {
                break;
            }
            let results: Vec<(bool, u64)> = buf
                .par_iter()
                .map(|extra| leaky_passes(g, extra.union(&mandatory), ell))
                .collect();
            candidates_tested += results.len() as u64;
            leak_sets_tested += results.iter().map(|r| r.1).sum::<u64>();
            if let Some(i) = results.iter().position(|r| r.0) {
                return SolveOutcome::Exact(SolveReport {
                    status: "exact",
                    graph: g.label().to_string(),
                    leaks: ell,
                    z_value: cardinality,
                    witness: buf[i].union(&mandatory),
                    candidates_tested,
                    leak_sets_tested,
                    elapsed: start.elapsed(),
                });
            }
        }
    }
    unreachable!("the full vertex set passes at cardinality n");
}

/// All minimum `ell`-leaky forcing sets of size `z`, in lexicographic order.
/// `z` must be the value reported by `min_leaky_forcing`.
pub fn enumerate_minimum_sets(
    g: &Graph,
    ell: usize,
    z: usize,
    budget: &Budget,
) -> Result<Vec<VertexSet>, BudgetExceeded> {
    let start = Instant::now();
    let mandatory = mandatory_vertices(g, ell);
    let base = mandatory.len();
    if z < base {
        // no set of size z can contain the mandatory vertices
        return Ok(Vec::new());
    }
    let free: Vec<usize> = g.vertices().minus(&mandatory).to_vec();
    let mut combos = Combinations::new(free, z - base);
    let mut buf: Vec<VertexSet> = Vec::with_capacity(CANDIDATE_CHUNK);
    let mut out = Vec::new();
    let mut closures = 0u64;
    loop {
        if closures > budget.max_closures || start.elapsed() > budget.max_duration {
            return Err(BudgetExceeded {
                lower: z,
                upper: g.n(),
                closures,
                elapsed: start.elapsed(),
            });
        }
        if combos.next_chunk(&mut buf, CANDIDATE_CHUNK) == 0 {
            break;
        }
        let results: Vec<(bool, u64)> = buf
            .par_iter()
            .map(|extra| leaky_passes(g, extra.union(&mandatory), ell))
            .collect();
        closures += results.iter().map(|r| r.1).sum::<u64>();
        for (i, r) in results.iter().enumerate() {
            if r.0 {
                out.push(buf[i].union(&mandatory));
            }
        }
    }
    Ok(out)
}

/// Does some minimum `ell`-leaky forcing set contain a minimum zero-forcing
/// set? Returns the first witnessing pair in (lexicographic, lexicographic)
/// order when the answer is yes.
#[derive(Clone, Debug, Serialize)]
pub struct ContainmentReport {
    pub graph: String,
    pub leaks: usize,
    pub z_zero: usize,
    pub z_leaky: usize,
    pub answer: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_zero: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_leaky: Option<VertexSet>,
    pub minimum_zero_sets: usize,
    pub minimum_leaky_sets: usize,
}

fn solve_or_budget(g: &Graph, ell: usize, budget: &Budget) -> Result<SolveReport, BudgetExceeded> {
    match min_leaky_forcing(g, ell, budget) {
        SolveOutcome::Exact(r) => Ok(r),
        SolveOutcome::Unknown(u) => Err(BudgetExceeded {
            lower: u.lower,
            upper: u.upper,
            closures: u.leak_sets_tested,
            elapsed: u.elapsed,
        }),
    }
}

pub fn containment_question(
    g: &Graph,
    ell: usize,
    budget: &Budget,
) -> Result<ContainmentReport, BudgetExceeded> {
    let zero = solve_or_budget(g, 0, budget)?;
    let leaky = solve_or_budget(g, ell, budget)?;
    let zero_sets = enumerate_minimum_sets(g, 0, zero.z_value, budget)?;
    let leaky_sets = enumerate_minimum_sets(g, ell, leaky.z_value, budget)?;

    let mut witness = None;
    'outer: for b in &zero_sets {
        for bl in &leaky_sets {
            if b.is_subset_of(bl) {
                witness = Some((*b, *bl));
                break 'outer;
            }
        }
    }
    Ok(ContainmentReport {
        graph: g.label().to_string(),
        leaks: ell,
        z_zero: zero.z_value,
        z_leaky: leaky.z_value,
        answer: witness.is_some(),
        witness_zero: witness.map(|w| w.0),
        witness_leaky: witness.map(|w| w.1),
        minimum_zero_sets: zero_sets.len(),
        minimum_leaky_sets: leaky_sets.len(),
    })
}

/// Result of the nested-chain search over levels 0..=k.
///
/// A chain is a choice of one minimum set per leak count with each level
/// containing the previous. Containment is reported in the non-strict sense;
/// proper inclusion everywhere is possible exactly when consecutive minimum
/// sizes strictly increase, and `equal_size_levels` flags where the strict
/// reading is unsatisfiable.
#[derive(Clone, Debug, Serialize)]
pub struct ChainReport {
    pub graph: String,
    pub max_leaks: usize,
    pub sizes: Vec<usize>,
    pub exists: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<VertexSet>>,
    pub strict_possible: bool,
    pub equal_size_levels: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_variant: Option<Vec<ContainmentCell>>,
}

/// One pairwise cell of the quantifier-variant report: does SOME minimum
/// `leaks`-leaky set contain a minimum `lower`-leaky set, and does EVERY one?
#[derive(Clone, Debug, Serialize)]
pub struct ContainmentCell {
    pub leaks: usize,
    pub lower: usize,
    pub some: bool,
    pub every: bool,
}

pub fn nested_chain(
    g: &Graph,
    k: usize,
    budget: &Budget,
    all_variant: bool,
) -> Result<ChainReport, BudgetExceeded> {
    let mut levels: Vec<Vec<VertexSet>> = Vec::with_capacity(k + 1);
    let mut sizes = Vec::with_capacity(k + 1);
    for ell in 0..=k {
        let report = solve_or_budget(g, ell, budget)?;
        levels.push(enumerate_minimum_sets(g, ell, report.z_value, budget)?);
        sizes.push(report.z_value);
    }

    fn dfs(levels: &[Vec<VertexSet>], depth: usize, chain: &mut Vec<VertexSet>) -> bool {
        if depth == levels.len() {
            return true;
        }
        for s in &levels[depth] {
            if depth == 0 || chain[depth - 1].is_subset_of(s) {
                chain.push(*s);
                if dfs(levels, depth + 1, chain) {
                    return true;
                }
                chain.pop();
            }
        }
        false
    }

    let mut chain = Vec::with_capacity(k + 1);
    let exists = dfs(&levels, 0, &mut chain);
    let equal_size_levels: Vec<usize> = (0..k).filter(|&i| sizes[i] == sizes[i + 1]).collect();
    let strict_possible = exists && equal_size_levels.is_empty();
    let note = if exists && !equal_size_levels.is_empty() {
        Some(
            "levels with equal minimum size admit only non-strict containment \
             (equal minimum sets); a strictly nested chain is impossible there"
                .to_string(),
        )
    } else {
        None
    };

    let all_variant = all_variant.then(|| {
        let mut cells = Vec::new();
        for ell in 1..=k {
            for lower in 0..ell {
                let some = levels[ell]
                    .iter()
                    .any(|b| levels[lower].iter().any(|a| a.is_subset_of(b)));
                let every = levels[ell]
                    .iter()
                    .all(|b| levels[lower].iter().any(|a| a.is_subset_of(b)));
                cells.push(ContainmentCell { leaks: ell, lower, some, every });
            }
        }
        cells
    });

    Ok(ChainReport {
        graph: g.label().to_string(),
        max_leaks: k,
        sizes,
        exists,
        witness: exists.then_some(chain),
        strict_possible,
        equal_size_levels,
        note,
        all_variant,
    })
}
