//! Saturation verdicts and minimum-degree diagnostics.

use rayon::prelude::*;
use serde::Serialize;

use crate::construct::h_edge_count;
use crate::embed::{contains, find_embedding, Witness};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::CliquePattern;
use crate::registry::lemma_threshold;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SaturationReport {
    pub pattern: CliquePattern,
    #[serde(rename = "free")]
    pub is_free: bool,
    #[serde(rename = "saturated")]
    pub is_saturated: bool,
    #[serde(rename = "witness")]
    pub containment_witness: Option<Witness>,
    pub failing_non_edge: Option<(usize, usize)>,
    pub non_edges_checked: usize,
    /// Every failing non-edge, filled only in census mode.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_non_edges: Option<Vec<(usize, usize)>>,
}

pub fn is_free(g: &Graph, pattern: &CliquePattern) -> bool {
    !contains(g, pattern)
}

/// Whether adding the non-edge `uv` to a pattern-free `g` creates the pattern.
/// Any new copy must use `uv`, so the search is restricted to copies through it.
pub fn completes_pattern(g: &Graph, pattern: &CliquePattern, u: usize, v: usize) -> bool {
    let plus = g.with_edge(u, v).expect("non-edge endpoints are valid");
    find_embedding(&plus, pattern, Some((u, v)))
        .expect("edge was just added")
        .is_some()
}

pub fn check_saturated(g: &Graph, pattern: &CliquePattern) -> SaturationReport {
    check_saturated_with(g, pattern, false)
}

/// Saturation check. Without `census` it stops at the lexicographically first
/// failing non-edge (the same one for any thread count); with `census` every
/// non-edge is probed and all failures are listed.
pub fn check_saturated_with(g: &Graph, pattern: &CliquePattern, census: bool) -> SaturationReport {
    let witness = find_embedding(g, pattern, None).expect("no required edge");
    let mut report = SaturationReport {
        pattern: pattern.clone(),
        is_free: witness.is_none(),
        is_saturated: false,
        containment_witness: witness,
        failing_non_edge: None,
        non_edges_checked: 0,
        failing_non_edges: None,
    };
    if !report.is_free {
        return report;
    }
    let non_edges = g.non_edges();
    if census {
        let failing: Vec<(usize, usize)> = non_edges
            .par_iter()
            .filter(|&&(u, v)| !completes_pattern(g, pattern, u, v))
            .copied()
            .collect();
        report.non_edges_checked = non_edges.len();
        report.failing_non_edge = failing.first().copied();
        report.is_saturated = failing.is_empty();
        report.failing_non_edges = Some(failing);
        return report;
    }
    match non_edges
        .par_iter()
        .position_first(|&(u, v)| !completes_pattern(g, pattern, u, v))
    {
        Some(pos) => {
            report.failing_non_edge = Some(non_edges[pos]);
            report.non_edges_checked = pos + 1;
        }
        None => {
            report.is_saturated = true;
            report.non_edges_checked = non_edges.len();
        }
    }
    report
}

/// Minimum-degree structure of a graph relative to a pattern: for a
/// saturated graph with at most `e(H(n; pattern))` edges on enough vertices,
/// a least-degree vertex `v` with `S = N(v)` satisfies
/// (i) `d(v) = p1 - 2`, (ii) `S ⊆ N(w)` for every `w ∉ S`, and
/// (iii) `e(G - S) <= Σ_{i>=2} C(pi+1, 2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaDiagnostics {
    pub min_degree: usize,
    pub min_degree_vertex: usize,
    pub condition_i: bool,
    pub condition_ii: bool,
    pub condition_iii: bool,
    pub edges_outside_neighborhood: usize,
    pub edges_outside_bound: usize,
    /// `t >= 2`, `e(G) <= e(H(n; pattern))` and `n` above the threshold.
    /// Saturation itself is not checked here.
    pub applicable: bool,
}

impl DeltaDiagnostics {
    pub fn all_hold(&self) -> bool {
        self.condition_i && self.condition_ii && self.condition_iii
    }
}

pub fn delta_diagnostics(g: &Graph, pattern: &CliquePattern) -> Result<DeltaDiagnostics> {
    let n = g.n();
    if n < 1 {
        return Err(Error::Argument("diagnostics need at least one vertex".into()));
    }
    let p1 = pattern.smallest();
    if p1 < 2 {
        return Err(Error::Pattern(format!("diagnostics need p1 >= 2, got {pattern}")));
    }
    let (v, min_degree) = (0..n)
        .map(|v| (v, g.degree(v)))
        .min_by_key(|&(v, d)| (d, v))
        .expect("n >= 1");
    let s = *g.neighbors(v);
    let outside = g.vertex_set().difference(&s);
    let condition_ii = outside.iter().all(|w| s.is_subset(g.neighbors(w)));
    let edges_outside = g.edges_within(&outside);
    let bound: usize = pattern.rest().iter().map(|&p| (p + 1) * p / 2).sum();
    let applicable = pattern.len() >= 2
        && h_edge_count(n, pattern).is_ok_and(|h| g.edge_count() <= h)
        && n > lemma_threshold(pattern);
    Ok(DeltaDiagnostics {
        min_degree,
        min_degree_vertex: v,
        condition_i: min_degree == p1 - 2,
        condition_ii,
        condition_iii: edges_outside <= bound,
        edges_outside_neighborhood: edges_outside,
        edges_outside_bound: bound,
        applicable,
    })
}
