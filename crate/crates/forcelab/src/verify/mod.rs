//! One-command reproduction of the bundled claim tables: each claim runs an
//! exact computation, compares it against the published expected value, and
//! carries a machine-replayable certificate. A claim whose expected value is
//! refuted by the exact search reports `fail` together with the refuting
//! evidence; nothing is corrected silently.

pub mod claims;

use rayon::prelude::*;
use serde::Serialize;

use crate::engine::{check_leaky_forcing, is_leaky_forcing_set, LeakCertificate};
use crate::families::{
    complete_bipartite, generalized_petersen, half_cube_set, hypercube, random_tree, wheel,
};
use crate::graph::VertexSet;
use crate::solver::{containment_question, min_leaky_forcing, Budget, SolveOutcome};
use crate::subsets::binomial;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    All,
    Cubes,
    Halfcube,
    Prism,
    Bipartite,
    Wheel,
    Containment,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Also run the 128-vertex half-cube check (minutes of work).
    pub include_d7: bool,
    pub budget: Budget,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { include_d7: false, budget: Budget::default() }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum ClaimStatus {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "skipped-beyond-budget")]
    SkippedBeyondBudget,
}

/// Replayable evidence attached to a claim: a witness set (re-validated
/// through the engine), a refuting leak placement, and/or the exhaustive
/// counts of the search that produced the verdict.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Certificate {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leak_certificate: Option<LeakCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_zero: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_leaky: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidates_tested: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leak_sets_tested: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leak_placements: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<(usize, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimResult {
    pub claim: String,
    pub expected: String,
    pub computed: String,
    pub status: ClaimStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

impl ClaimResult {
    pub fn passed(&self) -> bool {
        self.status == ClaimStatus::Pass
    }
}

/// Solve a cell exactly and compare against an expected value; the witness
/// is re-validated through the engine before the claim may pass.
fn exact_value_claim(
    claim: String,
    g: &crate::graph::Graph,
    ell: usize,
    expected: usize,
    budget: &Budget,
) -> ClaimResult {
    match min_leaky_forcing(g, ell, budget) {
        SolveOutcome::Exact(r) => {
            let witness_ok = is_leaky_forcing_set(g, r.witness, ell).is_ok();
            let status = if r.z_value == expected && witness_ok {
                ClaimStatus::Pass
            } else {
                ClaimStatus::Fail
            };
            ClaimResult {
                claim,
                expected: format!("z = {expected}"),
                computed: format!("z = {}", r.z_value),
                status,
                certificate: Some(Certificate {
                    witness: Some(r.witness),
                    candidates_tested: Some(r.candidates_tested),
                    leak_sets_tested: Some(r.leak_sets_tested),
                    ..Certificate::default()
                }),
            }
        }
        SolveOutcome::Unknown(u) => ClaimResult {
            claim,
            expected: format!("z = {expected}"),
            computed: format!("unknown, bounds [{}, {}]", u.lower, u.upper),
            status: ClaimStatus::SkippedBeyondBudget,
            certificate: Some(Certificate {
                bounds: Some((u.lower, u.upper)),
                candidates_tested: Some(u.candidates_tested),
                leak_sets_tested: Some(u.leak_sets_tested),
                ..Certificate::default()
            }),
        },
    }
}

/// Check a named construction against all leak placements.
fn construction_claim(
    claim: String,
    expected: String,
    g: &crate::graph::Graph,
    set: VertexSet,
    ell: usize,
) -> ClaimResult {
    let check = check_leaky_forcing(g, set, ell);
    let computed = match &check.certificate {
        None => format!("all {} placements of {ell} leaks force", check.placements),
        Some(cert) => format!(
            "refuted: leaks {} stall {}",
            cert.leaks.vertices, cert.stalled
        ),
    };
    ClaimResult {
        claim,
        expected,
        computed,
        status: if check.passed() { ClaimStatus::Pass } else { ClaimStatus::Fail },
        certificate: Some(Certificate {
            witness: Some(set),
            leak_certificate: check.certificate,
            leak_placements: Some(check.placements),
            leak_sets_tested: Some(check.closures_run),
            ..Certificate::default()
        }),
    }
}

/// Half-cube check: the ids with bit 0 clear form a (d-2)-leaky forcing
/// set of Q_d.
pub fn verify_halfcube(d: usize) -> ClaimResult {
    assert!((2..=7).contains(&d));
    let g = hypercube(d).expect("d in range");
    let q = half_cube_set(d).expect("d in range");
    construction_claim(
        format!("thm1-d{d}"),
        format!(
            "half-cube of size {} forces Q_{d} under every placement of {} leaks",
            claims::half_cube_size(d),
            d - 2
        ),
        &g,
        q,
        d - 2,
    )
}

/// The three published hypercube values: exact solves for Q_3 and Q_4, the
/// sufficiency half plus an explicit skip for Q_5 minimality.
pub fn verify_cube_values(budget: &Budget) -> Vec<ClaimResult> {
    let mut out = Vec::new();

    let (d3, l3, v3) = claims::CUBE_VALUES[0];
    out.push(exact_value_claim(
        format!("Z{l3}-Q{d3}"),
        &hypercube(d3).unwrap(),
        l3,
        v3,
        budget,
    ));
    let (d4, l4, v4) = claims::CUBE_VALUES[1];
    out.push(exact_value_claim(
        format!("Z{l4}-Q{d4}"),
        &hypercube(d4).unwrap(),
        l4,
        v4,
        budget,
    ));

    let (d5, l5, v5) = claims::CUBE_VALUES[2];
    let g5 = hypercube(d5).unwrap();
    let q5 = half_cube_set(d5).unwrap();
    out.push(construction_claim(
        format!("Z{l5}-Q{d5}-sufficiency"),
        format!(
            "half-cube of size {v5} forces Q_{d5} under every placement of {l5} leaks"
        ),
        &g5,
        q5,
        l5,
    ));
    out.push(ClaimResult {
        claim: format!("Z{l5}-Q{d5}-minimality"),
        expected: format!("z = {v5}"),
        computed: format!(
            "not computed: the cardinality sweep over C(32,c) candidate sets for c < {v5} \
             exceeds the evaluation budget; known bounds [1, {v5}]"
        ),
        status: ClaimStatus::SkippedBeyondBudget,
        certificate: Some(Certificate { bounds: Some((1, v5)), ..Certificate::default() }),
    });
    out
}

/// The GP(n,1) table: exact solves for every published equality, named
/// constructions for the l=2 upper bounds (n up to 10), and exact l=2
/// values reported as new data, plus GP(n,2) data points.
pub fn verify_prism(n_max: usize, budget: &Budget) -> Vec<ClaimResult> {
    assert!((3..=7).contains(&n_max));
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for n in 3..=n_max {
        for ell in 0..=3 {
            cells.push((n, ell));
        }
    }
    let mut out: Vec<ClaimResult> = cells
        .par_iter()
        .flat_map(|&(n, ell)| {
            let g = generalized_petersen(n, 1).unwrap();
            match claims::prism_expected(n, ell) {
                claims::PrismExpected::Exact(v) => {
                    vec![exact_value_claim(format!("thm2-n{n:02}-l{ell}"), &g, ell, v, budget)]
                }
                claims::PrismExpected::UpperBound(ub) => {
                    let set = VertexSet::from_ids(claims::prism_bound_construction(n));
                    let bound_claim = construction_claim(
                        format!("thm2-n{n:02}-l{ell}-ub"),
                        format!(
                            "construction of size {} forces GP({n},1) under every placement \
                             of {ell} leaks (bound z <= {ub})",
                            set.len()
                        ),
                        &g,
                        set,
                        ell,
                    );
                    let exact_claim = bounded_data_claim(
                        format!("thm2-n{n:02}-l{ell}-exact"),
                        &g,
                        ell,
                        Some(ub),
                        budget,
                    );
                    vec![bound_claim, exact_claim]
                }
            }
        })
        .collect();

    // bound constructions stay cheap well past the exact-solve range
    for n in n_max + 1..=10 {
        if let claims::PrismExpected::UpperBound(ub) = claims::prism_expected(n, 2) {
            let g = generalized_petersen(n, 1).unwrap();
            let set = VertexSet::from_ids(claims::prism_bound_construction(n));
            out.push(construction_claim(
                format!("thm2-n{n:02}-l2-ub"),
                format!(
                    "construction of size {} forces GP({n},1) under every placement of 2 \
                     leaks (bound z <= {ub})",
                    set.len()
                ),
                &g,
                set,
                2,
            ));
        }
    }

    // GP(n,2) exact values: new data points for the open problem
    let gp2_cells: Vec<(usize, usize)> =
        (5..=6).flat_map(|n| (0..=3).map(move |ell| (n, ell))).collect();
    out.extend(gp2_cells.par_iter().map(|&(n, ell)| {
        let g = generalized_petersen(n, 2).unwrap();
        bounded_data_claim(format!("gp2-n{n:02}-l{ell}"), &g, ell, None, budget)
    }).collect::<Vec<_>>());
    out
}

/// Exact solve reported as a data point; passes when the solve completes,
/// the witness re-validates, and the value respects the published bound if
/// one exists.
fn bounded_data_claim(
    claim: String,
    g: &crate::graph::Graph,
    ell: usize,
    upper_bound: Option<usize>,
    budget: &Budget,
) -> ClaimResult {
    let expected = match upper_bound {
        Some(ub) => format!("z <= {ub} (exact value is new data)"),
        None => "exact value (new data point)".to_string(),
    };
    match min_leaky_forcing(g, ell, budget) {
        SolveOutcome::Exact(r) => {
            let witness_ok = is_leaky_forcing_set(g, r.witness, ell).is_ok();
            let within = upper_bound.map_or(true, |ub| r.z_value <= ub);
            ClaimResult {
                claim,
                expected,
                computed: format!("z = {}", r.z_value),
                status: if witness_ok && within { ClaimStatus::Pass } else { ClaimStatus::Fail },
                certificate: Some(Certificate {
                    witness: Some(r.witness),
                    candidates_tested: Some(r.candidates_tested),
                    leak_sets_tested: Some(r.leak_sets_tested),
                    ..Certificate::default()
                }),
            }
        }
        SolveOutcome::Unknown(u) => ClaimResult {
            claim,
            expected,
            computed: format!("unknown, bounds [{}, {}]", u.lower, u.upper),
            status: ClaimStatus::SkippedBeyondBudget,
            certificate: Some(Certificate {
                bounds: Some((u.lower, u.upper)),
                ..Certificate::default()
            }),
        },
    }
}

/// The complete bipartite table for 1 <= n <= m <= m_max, l in 0..=m+1.
pub fn verify_bipartite(m_max: usize, n_max: usize, budget: &Budget) -> Vec<ClaimResult> {
    assert!(m_max <= 5);
    let mut cells = Vec::new();
    for m in 1..=m_max {
        for n in 1..=m.min(n_max) {
            for ell in 0..=m + 1 {
                cells.push((m, n, ell));
            }
        }
    }
    cells
        .par_iter()
        .map(|&(m, n, ell)| {
            let g = complete_bipartite(m, n).unwrap();
            exact_value_claim(
                format!("kmn-m{m}-n{n}-l{ell}"),
                &g,
                ell,
                claims::bipartite_expected(m, n, ell),
                budget,
            )
        })
        .collect()
}

/// The wheel table for 3 <= n <= n_max, l in 0..=n+1, plus the containment
/// re-check at l in {1,2}.
pub fn verify_wheel(n_max: usize, budget: &Budget) -> Vec<ClaimResult> {
    assert!((3..=8).contains(&n_max));
    let mut cells = Vec::new();
    for n in 3..=n_max {
        for ell in 0..=n + 1 {
            cells.push((n, ell));
        }
    }
    let mut out: Vec<ClaimResult> = cells
        .par_iter()
        .map(|&(n, ell)| {
            let g = wheel(n).unwrap();
            exact_value_claim(
                format!("wheel-n{n}-l{ell}"),
                &g,
                ell,
                claims::wheel_expected(n, ell),
                budget,
            )
        })
        .collect();

    let contain_cells: Vec<(usize, usize)> =
        (3..=n_max).flat_map(|n| [(n, 1), (n, 2)]).collect();
    out.extend(
        contain_cells
            .par_iter()
            .map(|&(n, ell)| {
                containment_claim(format!("wheel-contain-n{n}-l{ell}"), &wheel(n).unwrap(), ell, budget)
            })
            .collect::<Vec<_>>(),
    );
    out
}

fn containment_claim(
    claim: String,
    g: &crate::graph::Graph,
    ell: usize,
    budget: &Budget,
) -> ClaimResult {
    let expected = "some minimum leaky set contains a minimum zero-forcing set".to_string();
    match containment_question(g, ell, budget) {
        Ok(report) => ClaimResult {
            claim,
            expected,
            computed: if report.answer {
                format!(
                    "yes: {} of {} minimum sets verified",
                    report.minimum_leaky_sets, report.minimum_zero_sets
                )
            } else {
                "no containing pair exists".to_string()
            },
            status: if report.answer { ClaimStatus::Pass } else { ClaimStatus::Fail },
            certificate: Some(Certificate {
                witness_zero: report.witness_zero,
                witness_leaky: report.witness_leaky,
                ..Certificate::default()
            }),
        },
        Err(e) => ClaimResult {
            claim,
            expected,
            computed: format!("unknown: {e}"),
            status: ClaimStatus::SkippedBeyondBudget,
            certificate: None,
        },
    }
}

/// Containment corollaries: random trees at l=1, complete bipartite graphs
/// at l <= m-1, wheels at l in {1,2}.
pub fn verify_containment_corollaries(seeds: &[u64], budget: &Budget) -> Vec<ClaimResult> {
    let mut out: Vec<ClaimResult> = seeds
        .par_iter()
        .enumerate()
        .map(|(i, &seed)| {
            let n = 4 + (i % 6);
            let g = random_tree(n, seed).unwrap();
            containment_claim(format!("contain-tree-s{i:02}-n{n}-l1"), &g, 1, budget)
        })
        .collect();

    let mut kmn_cells = Vec::new();
    for m in 2..=4usize {
        for n in 1..=m {
            for ell in 1..m {
                kmn_cells.push((m, n, ell));
            }
        }
    }
    out.extend(
        kmn_cells
            .par_iter()
            .map(|&(m, n, ell)| {
                containment_claim(
                    format!("contain-kmn-m{m}-n{n}-l{ell}"),
                    &complete_bipartite(m, n).unwrap(),
                    ell,
                    budget,
                )
            })
            .collect::<Vec<_>>(),
    );

    let wheel_cells: Vec<(usize, usize)> = (3..=6).flat_map(|n| [(n, 1), (n, 2)]).collect();
    out.extend(
        wheel_cells
            .par_iter()
            .map(|&(n, ell)| {
                containment_claim(
                    format!("contain-wheel-n{n}-l{ell}"),
                    &wheel(n).unwrap(),
                    ell,
                    budget,
                )
            })
            .collect::<Vec<_>>(),
    );
    out
}

/// Default seeds for the tree corpus; fixed so the whole run is
/// reproducible byte for byte.
pub fn default_tree_seeds() -> Vec<u64> {
    (0..20).collect()
}

/// Runs a suite and returns its claims ordered by claim id.
pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Vec<ClaimResult> {
    let budget = &opts.budget;
    let mut out = Vec::new();
    let halfcube_range = if opts.include_d7 { 2..=7 } else { 2..=6 };
    match suite {
        Suite::Cubes => out.extend(verify_cube_values(budget)),
        Suite::Halfcube => {
            out.extend(halfcube_range.map(verify_halfcube));
        }
        Suite::Prism => out.extend(verify_prism(6, budget)),
        Suite::Bipartite => out.extend(verify_bipartite(5, 5, budget)),
        Suite::Wheel => out.extend(verify_wheel(8, budget)),
        Suite::Containment => {
            out.extend(verify_containment_corollaries(&default_tree_seeds(), budget))
        }
        Suite::All => {
            out.extend(verify_cube_values(budget));
            out.extend(halfcube_range.map(verify_halfcube));
            out.extend(verify_prism(6, budget));
            out.extend(verify_bipartite(5, 5, budget));
            out.extend(verify_wheel(8, budget));
            out.extend(verify_containment_corollaries(&default_tree_seeds(), budget));
        }
    }
    out.sort_by(|a, b| a.claim.cmp(&b.claim));
    out
}

/// Aligned text table over the claim results.
pub fn render_table(results: &[ClaimResult]) -> String {
    let headers = ["claim", "status", "expected", "computed"];
    let rows: Vec<[String; 4]> = results
        .iter()
        .map(|r| {
            let status = match r.status {
                ClaimStatus::Pass => "pass",
                ClaimStatus::Fail => "FAIL",
                ClaimStatus::SkippedBeyondBudget => "skipped-beyond-budget",
            };
            [r.claim.clone(), status.to_string(), r.expected.clone(), r.computed.clone()]
        })
        .collect();
    let mut widths = headers.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let fmt_row = |cells: [&str; 4], widths: &[usize; 4]| -> String {
        format!(
            "{:<w0$}  {:<w1$}  {:<w2$}  {}\n",
            cells[0],
            cells[1],
            cells[2],
            cells[3],
            w0 = widths[0],
            w1 = widths[1],
            w2 = widths[2]
        )
    };
    out.push_str(&fmt_row(headers, &widths));
    out.push_str(&format!(
        "{}  {}  {}  {}\n",
        "-".repeat(widths[0]),
        "-".repeat(widths[1]),
        "-".repeat(widths[2]),
        "-".repeat(widths[3])
    ));
    for row in &rows {
        out.push_str(&fmt_row(
            [row[0].as_str(), row[1].as_str(), row[2].as_str(), row[3].as_str()],
            &widths,
        ));
    }
    let fails = results.iter().filter(|r| r.status == ClaimStatus::Fail).count();
    let skipped =
        results.iter().filter(|r| r.status == ClaimStatus::SkippedBeyondBudget).count();
    out.push_str(&format!(
        "{} claims: {} passed, {} failed, {} skipped beyond budget\n",
        results.len(),
        results.len() - fails - skipped,
        fails,
        skipped
    ));
    out
}

/// Upper bound on the leak placements a halfcube check enumerates; used by
/// callers to size expectations, and kept here so the number stays next to
/// the check it describes.
pub fn halfcube_placements(d: usize) -> u64 {
    binomial(1 << d, d - 2)
}
