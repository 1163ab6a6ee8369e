//! Exact computations for the leaky zero-forcing game on small graphs.
//!
//! In the zero-forcing game an initially colored vertex set grows by the
//! color change rule: a colored vertex with exactly one uncolored neighbor
//! colors it. A leak disqualifies a vertex from ever forcing (it can still
//! be colored). A set is an l-leaky forcing set when it colors the whole
//! graph under every placement of l leaks, and Z_(l) is the least size of
//! such a set.
//!
//! The crate provides the propagation engine over word-packed vertex sets,
//! generators for the graph families of interest, an exact solver built on
//! cardinality-ascending candidate search, claim-verification suites for the
//! published value tables, and the `forcelab` command-line front end.

pub mod cli;
pub mod engine;
pub mod families;
pub mod graph;
pub mod solver;
pub mod subsets;
pub mod verify;

pub use engine::{
    check_leaky_forcing, closure, closure_final, is_leaky_forcing_set, is_zero_forcing_set,
    mandatory_vertices, ForceEvent, ForcingTrace, LeakCertificate, LeakCheck, LeakSet,
};
pub use families::SplitMix64;
pub use graph::{complement_set, Graph, GraphError, ParseError, VertexSet, CAPACITY};
pub use solver::{
    containment_question, enumerate_minimum_sets, min_leaky_forcing, min_leaky_forcing_with,
    nested_chain, Budget, BudgetExceeded, ChainReport, ContainmentReport, SolveOutcome,
    SolveReport, SolverOptions,
};
pub use verify::{run_suite, ClaimResult, ClaimStatus, Suite, VerifyOptions};
