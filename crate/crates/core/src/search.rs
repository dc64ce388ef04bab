//! Exact saturation numbers at small order.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::canon::canonical_form;
use crate::construct::build_h;
use crate::enumerate::{enumerate_with_edges, MAX_ENUMERATION_N};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::pattern::CliquePattern;
use crate::saturate::{check_saturated, delta_diagnostics};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub n: usize,
    pub pattern: CliquePattern,
    pub sat_value: usize,
    /// Canonical graph6 strings of every extremal class, sorted.
    pub extremal_canonical: Vec<String>,
    /// Classes visited over all edge layers searched.
    pub graphs_enumerated: u64,
    /// False only when the search skipped classes on structural assumptions.
    pub exhaustive: bool,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Search knobs. The default is the exhaustive search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchOptions {
    /// Only test graphs whose least-degree vertex satisfies the three
    /// minimum-degree conditions. Not exhaustive: those conditions are only
    /// guaranteed for large `n`.
    pub assume_lemmas: bool,
}

fn check_inputs(n: usize, pattern: &CliquePattern) -> Result<()> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::Refused(format!(
            "n={n} beyond exhaustive range (max {MAX_ENUMERATION_N})"
        )));
    }
    if pattern.total() > n {
        return Err(Error::Domain(format!(
            "pattern {pattern} needs {} vertices, only {n} available: no graph on {n} vertices can complete it",
            pattern.total()
        )));
    }
    Ok(())
}

/// `sat(n, pattern)` by walking edge layers `m = 0, 1, ...` of the class
/// catalogue and stopping at the first layer holding a saturated graph.
pub fn sat_bruteforce(n: usize, pattern: &CliquePattern) -> Result<SearchResult> {
    sat_bruteforce_with(n, pattern, SearchOptions::default())
}

pub fn sat_bruteforce_with(n: usize, pattern: &CliquePattern, opts: SearchOptions) -> Result<SearchResult> {
    check_inputs(n, pattern)?;
    let start = Instant::now();
    let visited = AtomicU64::new(0);
    for m in 0..=n * n.saturating_sub(1) / 2 {
        let found = Mutex::new(Vec::new());
        enumerate_with_edges(n, m, |g| {
            visited.fetch_add(1, Ordering::Relaxed);
            if opts.assume_lemmas
                && pattern.smallest() >= 2
                && !delta_diagnostics(g, pattern).is_ok_and(|d| d.all_hold())
            {
                return;
            }
            if check_saturated(g, pattern).is_saturated {
                found.lock().expect("collector poisoned").push(graph6::encode(g));
            }
        })?;
        let mut found = found.into_inner().expect("collector poisoned");
        if !found.is_empty() {
            found.sort();
            found.dedup();
            return Ok(SearchResult {
                n,
                pattern: pattern.clone(),
                sat_value: m,
                extremal_canonical: found,
                graphs_enumerated: visited.load(Ordering::Relaxed),
                exhaustive: !opts.assume_lemmas,
                elapsed: start.elapsed(),
            });
        }
    }
    // K_n is vacuously saturated once the pattern fits, so this is unreachable
    // after check_inputs; keep a typed error rather than panic.
    Err(Error::Domain(format!("no saturated graph found for {pattern} on {n} vertices")))
}

pub fn extremal_graphs(n: usize, pattern: &CliquePattern) -> Result<Vec<String>> {
    Ok(sat_bruteforce(n, pattern)?.extremal_canonical)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniquenessReport {
    pub unique: bool,
    pub sat_value: usize,
    /// Canonical form of the construction.
    pub expected: String,
    /// Extremal classes other than the construction.
    pub extra: Vec<String>,
    /// The construction, if it is not extremal.
    pub missing: Vec<String>,
}

/// Compares the extremal set against the construction `H(n; pattern)`.
pub fn verify_uniqueness(n: usize, pattern: &CliquePattern) -> Result<UniquenessReport> {
    check_inputs(n, pattern)?;
    let h = build_h(n, pattern)?;
    let expected = canonical_form(&h);
    let result = sat_bruteforce(n, pattern)?;
    let extra: Vec<String> = result
        .extremal_canonical
        .iter()
        .filter(|f| **f != expected)
        .cloned()
        .collect();
    let missing = if result.extremal_canonical.contains(&expected) {
        Vec::new()
    } else {
        vec![expected.clone()]
    };
    Ok(UniquenessReport {
        unique: extra.is_empty() && missing.is_empty(),
        sat_value: result.sat_value,
        expected,
        extra,
        missing,
    })
}

/// Decodes the extremal list back into graphs.
pub fn decode_all(forms: &[String]) -> Result<Vec<Graph>> {
    forms.iter().map(|f| graph6::decode_str(f)).collect()
}
