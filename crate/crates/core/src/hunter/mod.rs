//! Search side: forest containment, tiny Ramsey numbers by exhaustive
//! search, candidate generators, the greedy tree embedding, and the hunt for
//! host graphs of chromatic number `R(H, ..., H)` with an `H`-free
//! `t`-edge-coloring.

mod folklore;
mod generators;
mod pattern;
mod search;

pub use folklore::{embed_tree_folklore, peel_to_min_degree, Core};
pub use generators::{
    complete_multipartite, generate_candidates, grotzsch, kneser, mycielski_iterates, mycielskian, petersen,
    random_gnp, Candidate, CandidateKind,
};
pub use pattern::{contains_forest, is_embedding, AcyclicPattern};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chromatic::chi_exact;
use crate::error::{Error, Result};
use crate::graph::io::encode_graph6;
use crate::graph::{Edge, EdgeColoring, Graph};
use search::{ColoringSearch, Outcome};

/// Default cap on `C(n, 2) * log2(t)` for [`ramsey_bruteforce`].
pub const DEFAULT_GUARD_BITS: f64 = 28.0;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamseyOutcome {
    pub arrowing: bool,
    pub avoiding_coloring: Option<EdgeColoring>,
    pub nodes: u64,
}

/// Decides whether every coloring of `K_n` with `patterns.len()` colors has
/// `patterns[i - 1]` in some color `i`. Refuses instances whose raw search
/// space exceeds `2^guard_bits` colorings.
pub fn ramsey_bruteforce(patterns: &[AcyclicPattern], n: usize, guard_bits: f64) -> Result<RamseyOutcome> {
    if patterns.is_empty() {
        return Err(Error::input("need at least one pattern"));
    }
    if patterns.iter().any(|p| p.graph().m() == 0) {
        return Err(Error::input("patterns must have at least one edge"));
    }
    let t = patterns.len();
    let bits = (n * n.saturating_sub(1) / 2) as f64 * (t as f64).log2();
    if bits > guard_bits + 1e-9 {
        return Err(Error::TooLarge(format!("{t}^C({n},2) colorings exceeds 2^{guard_bits}")));
    }
    let kn = Graph::complete(n);
    let mut search = ColoringSearch::new(&kn, patterns, u64::MAX);
    let outcome = search.run();
    let nodes = search.nodes;
    Ok(match outcome {
        Outcome::Avoiding(colors) => {
            let ec = EdgeColoring::from_pairs(&kn, t, search.edges().iter().copied().zip(colors))?;
            RamseyOutcome { arrowing: false, avoiding_coloring: Some(ec), nodes }
        }
        Outcome::Exhausted => RamseyOutcome { arrowing: true, avoiding_coloring: None, nodes },
        Outcome::BudgetHit => unreachable!("unbounded search"),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuntLimits {
    /// Partial colorings examined per candidate before giving up.
    pub coloring_budget: u64,
    /// Node budget for the exact chromatic number of each candidate.
    pub chi_budget: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CandidateStatus {
    /// Chromatic number below the Ramsey value, or not determined.
    Skipped,
    /// Every coloring was ruled out: this host has no counterexample.
    NoCounterexample,
    /// Budget ran out first; nothing is claimed.
    Inconclusive,
    Counterexample,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateReport {
    pub id: String,
    pub n: usize,
    pub m: usize,
    pub chi: Option<usize>,
    pub status: CandidateStatus,
    pub exhausted: bool,
    pub colorings_examined: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub candidate: String,
    pub graph6: String,
    pub chi: usize,
    /// `[u, v, color]` triples.
    pub coloring: Vec<(usize, usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuntReport {
    pub pattern_n: usize,
    pub pattern_edges: Vec<Edge>,
    pub t: usize,
    pub ramsey_value: usize,
    pub limits: HuntLimits,
    pub candidates_examined: usize,
    pub colorings_examined: u64,
    pub candidates: Vec<CandidateReport>,
    pub counterexample: Option<Counterexample>,
}

impl HuntReport {
    /// No counterexample and every eligible candidate searched to the end.
    pub fn conclusive(&self) -> bool {
        self.candidates.iter().all(|c| c.status != CandidateStatus::Inconclusive)
    }
}

/// Searches each candidate with `χ >= ramsey_value` for a `t`-coloring of
/// its edges with no monochromatic copy of `h`. Candidates run in parallel;
/// the report lists them in input order. A coloring is only reported after
/// it re-verifies from scratch.
pub fn hunt<I>(h: &AcyclicPattern, t: usize, ramsey_value: usize, candidates: I, limits: HuntLimits) -> Result<HuntReport>
where
    I: IntoIterator<Item = Candidate>,
{
    if t == 0 {
        return Err(Error::input("need at least one color"));
    }
    if h.graph().m() == 0 {
        return Err(Error::input("pattern must have at least one edge"));
    }
    let candidates: Vec<Candidate> = candidates.into_iter().collect();
    let patterns = vec![h.clone(); t];
    let results: Vec<Result<(CandidateReport, Option<Counterexample>)>> =
        candidates.par_iter().map(|c| hunt_one(c, &patterns, ramsey_value, limits)).collect();
    let mut reports = Vec::with_capacity(results.len());
    let mut counterexample = None;
    for r in results {
        let (report, cx) = r?;
        if counterexample.is_none() {
            counterexample = cx;
        }
        reports.push(report);
    }
    Ok(HuntReport {
        pattern_n: h.n(),
        pattern_edges: h.graph().edges().collect(),
        t,
        ramsey_value,
        limits,
        candidates_examined: reports.len(),
        colorings_examined: reports.iter().map(|r| r.colorings_examined).sum(),
        candidates: reports,
        counterexample,
    })
}

fn hunt_one(
    c: &Candidate,
    patterns: &[AcyclicPattern],
    ramsey_value: usize,
    limits: HuntLimits,
) -> Result<(CandidateReport, Option<Counterexample>)> {
    let g = &c.graph;
    let mut report = CandidateReport {
        id: c.id.clone(),
        n: g.n(),
        m: g.m(),
        chi: None,
        status: CandidateStatus::Skipped,
        exhausted: false,
        colorings_examined: 0,
        note: None,
    };
    let chi = chi_exact(g, limits.chi_budget);
    if !chi.exact {
        report.note = Some(format!("chromatic number undetermined in [{}, {}]", chi.lower, chi.upper));
        return Ok((report, None));
    }
    report.chi = Some(chi.upper);
    if chi.upper < ramsey_value {
        report.note = Some(format!("chromatic number {} < {ramsey_value}", chi.upper));
        return Ok((report, None));
    }
    let mut search = ColoringSearch::new(g, patterns, limits.coloring_budget);
    let outcome = search.run();
    report.colorings_examined = search.nodes;
    match outcome {
        Outcome::Exhausted => {
            report.status = CandidateStatus::NoCounterexample;
            report.exhausted = true;
            Ok((report, None))
        }
        Outcome::BudgetHit => {
            report.status = CandidateStatus::Inconclusive;
            Ok((report, None))
        }
        Outcome::Avoiding(colors) => {
            let ec = EdgeColoring::from_pairs(g, patterns.len(), search.edges().iter().copied().zip(colors))?;
            reverify_counterexample(g, &ec, &patterns[0], ramsey_value)?;
            report.status = CandidateStatus::Counterexample;
            report.exhausted = true;
            let cx = Counterexample {
                candidate: c.id.clone(),
                graph6: encode_graph6(g),
                chi: chi.upper,
                coloring: ec.iter().map(|(e, col)| (e.u, e.v, col)).collect(),
            };
            Ok((report, Some(cx)))
        }
    }
}

/// Independent check of a claimed counterexample: plain backtracking shows
/// `g` is not `(ramsey_value - 1)`-colorable, and a full containment search
/// finds `h` in no color class.
pub fn reverify_counterexample(g: &Graph, ec: &EdgeColoring, h: &AcyclicPattern, ramsey_value: usize) -> Result<()> {
    if ramsey_value > 0 && is_colorable(g, ramsey_value - 1) {
        return Err(Error::Inconsistency(format!("host is {}-colorable", ramsey_value - 1)));
    }
    for c in 1..=ec.t() {
        if let Some(m) = contains_forest(&g.color_subgraph(ec, c)?, h) {
            return Err(Error::Inconsistency(format!("color {c} contains the pattern at {m:?}")));
        }
    }
    Ok(())
}

/// Whether `g` has a proper coloring with `k` colors, by vertex-order
/// backtracking that opens at most one new color per step.
pub fn is_colorable(g: &Graph, k: usize) -> bool {
    fn go(g: &Graph, k: usize, v: usize, used: usize, color: &mut [usize]) -> bool {
        if v == g.n() {
            return true;
        }
        for c in 0..k.min(used + 1) {
            if g.neighbors(v).filter(|&u| u < v).all(|u| color[u] != c) {
                color[v] = c;
                if go(g, k, v + 1, used.max(c + 1), color) {
                    return true;
                }
            }
        }
        false
    }
    go(g, k, 0, 0, &mut vec![usize::MAX; g.n()])
}
