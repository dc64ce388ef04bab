//! Local search for saturated graphs sparser than the construction.
//!
//! State: a pattern-saturated graph, starting from `H(n; pattern)`. A move
//! deletes a random edge, which keeps the graph pattern-free. If some non-edge
//! then fails to complete the pattern, that non-edge is added (it cannot
//! create a copy, by definition of failing); at most three such repairs are
//! made before the move is abandoned. A move that ends saturated is accepted
//! by the annealing rule on the edge-count change.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::construct::{build_h, h_edge_count};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::pattern::CliquePattern;
use crate::saturate::check_saturated;

/// Initial probability of accepting a move that adds one edge.
pub const INITIAL_UPHILL_ACCEPTANCE: f64 = 0.3;
/// Temperature ratio applied every [`COOLING_PERIOD`] iterations.
pub const COOLING_RATIO: f64 = 0.995;
pub const COOLING_PERIOD: u64 = 100;
pub const MAX_REPAIRS: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HuntResult {
    pub best_graph: String,
    pub best_edges: usize,
    pub target_edges: usize,
    pub iterations: u64,
    pub accepted_moves: u64,
    pub seed: u64,
    /// `best_edges < target_edges`: the construction was beaten.
    pub beats_construction: bool,
}

/// Applies one delete-and-repair move; `None` if the result is not saturated.
fn propose(current: &Graph, pattern: &CliquePattern, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let edges = current.edges();
    if edges.is_empty() {
        return None;
    }
    let (u, v) = edges[rng.gen_range(0..edges.len())];
    let mut cand = current.without_edge(u, v).expect("edge present");
    for _ in 0..=MAX_REPAIRS {
        let report = check_saturated(&cand, pattern);
        debug_assert!(report.is_free);
        match report.failing_non_edge {
            None => return Some(cand),
            Some((a, b)) => cand = cand.with_edge(a, b).expect("non-edge"),
        }
    }
    None
}

pub fn heuristic_hunt(n: usize, pattern: &CliquePattern, budget: u64, seed: u64) -> Result<HuntResult> {
    if budget == 0 {
        return Err(Error::Argument("budget must be at least 1".into()));
    }
    let start = build_h(n, pattern)?;
    let target = h_edge_count(n, pattern)?;
    if !check_saturated(&start, pattern).is_saturated {
        return Err(Error::Domain(format!(
            "H({n}; {pattern}) is not {pattern}-saturated; nothing to improve on"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut temperature = -1.0 / INITIAL_UPHILL_ACCEPTANCE.ln();
    let mut current = start.clone();
    let mut best = start;
    let mut accepted = 0;
    for it in 0..budget {
        if it > 0 && it % COOLING_PERIOD == 0 {
            temperature *= COOLING_RATIO;
        }
        let Some(cand) = propose(&current, pattern, &mut rng) else {
            continue;
        };
        let delta = cand.edge_count() as f64 - current.edge_count() as f64;
        if delta <= 0.0 || rng.gen::<f64>() < (-delta / temperature).exp() {
            accepted += 1;
            if cand.edge_count() < best.edge_count() {
                best = cand.clone();
            }
            current = cand;
        }
    }

    let verify = check_saturated(&best, pattern);
    if !verify.is_saturated {
        return Err(Error::Domain("hunt produced an unsaturated graph".into()));
    }
    Ok(HuntResult {
        best_graph: graph6::encode(&best),
        best_edges: best.edge_count(),
        target_edges: target,
        iterations: budget,
        accepted_moves: accepted,
        seed,
        beats_construction: best.edge_count() < target,
    })
}
