//! The fixed grid of machine checks behind `satgraph verify-paper`.

use serde::Serialize;

use crate::construct::{build_fixture, build_h, fixture_pattern, h_edge_count, min_order};
use crate::embed::{contains, find_embedding};
use crate::pattern::CliquePattern;
use crate::registry::{lemma_threshold, predicted_sat};
use crate::saturate::{check_saturated, delta_diagnostics, is_free};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Core,
    Fixtures,
    All,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub tag: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    pub fn line(&self) -> String {
        format!(
            "{} [{}] {}: {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.tag,
            self.name,
            self.detail
        )
    }
}

/// Orders above this are never built by the dichotomy checks.
pub const DICHOTOMY_CAP: usize = 60;

/// Patterns whose constructions are checked for saturation at
/// `threshold + {1, 2, 5}`.
pub const SATURATION_GRID: [&[usize]; 4] = [&[2, 3, 3], &[3, 4, 4], &[2, 3, 3, 3], &[3, 5, 5]];

/// `(p, q, r)` triples on both sides of `r = p + q`.
pub const DICHOTOMY_GRID: [(usize, usize, usize); 6] =
    [(2, 3, 5), (2, 3, 4), (3, 4, 7), (3, 4, 6), (4, 5, 9), (4, 5, 8)];

/// Patterns with `p1 ∈ {2,3,4}`, at most four cliques, orders up to 11.
pub fn identity_patterns() -> Vec<CliquePattern> {
    fn extend(prefix: &mut Vec<usize>, out: &mut Vec<CliquePattern>) {
        out.push(CliquePattern::new(prefix.clone()).expect("valid"));
        if prefix.len() == 4 {
            return;
        }
        let last = *prefix.last().expect("non-empty");
        for next in last..=11 {
            prefix.push(next);
            extend(prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for p1 in 2..=4 {
        extend(&mut vec![p1], &mut out);
    }
    out
}

fn identity_check(max_n: usize) -> CheckOutcome {
    let mut cases = 0;
    let mut failures = Vec::new();
    for pattern in identity_patterns() {
        for n in min_order(&pattern)..=max_n.min(DICHOTOMY_CAP) {
            cases += 1;
            let built = build_h(n, &pattern).map(|g| g.edge_count());
            let formula = h_edge_count(n, &pattern);
            let registry = predicted_sat(n, &pattern).value;
            let ok = match (&built, &formula) {
                (Ok(b), Ok(f)) => b == f && registry.map_or(true, |r| r == *f),
                _ => false,
            };
            if !ok && failures.len() < 5 {
                failures.push(format!("n={n} P={pattern}: built {built:?} formula {formula:?} registry {registry:?}"));
            }
        }
    }
    CheckOutcome {
        name: "edge count of H(n;P) equals the closed form and every covered registry value".into(),
        tag: "edge-count-identity",
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("{cases} (n, P) cases")
        } else {
            failures.join("; ")
        },
    }
}

/// `(n, pattern)` pairs of the saturation grid up to `max_n`.
pub fn saturation_cases(max_n: usize) -> Vec<(usize, CliquePattern)> {
    let mut out = Vec::new();
    for sizes in SATURATION_GRID {
        let pattern = CliquePattern::new(sizes.to_vec()).expect("valid");
        let th = lemma_threshold(&pattern);
        for n in [th + 1, th + 2, th + 5] {
            if n <= max_n {
                out.push((n, pattern.clone()));
            }
        }
    }
    out
}

fn saturation_checks(max_n: usize) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for (n, pattern) in saturation_cases(max_n) {
        let g = build_h(n, &pattern).expect("n above threshold");
        let report = check_saturated(&g, &pattern);
        out.push(CheckOutcome {
            name: format!("H({n};{pattern}) is {pattern}-saturated"),
            tag: "construction-saturated",
            passed: report.is_saturated,
            detail: format!(
                "free={} saturated={} non-edges checked={}",
                report.is_free, report.is_saturated, report.non_edges_checked
            ),
        });
        let diag = delta_diagnostics(&g, &pattern).expect("p1 >= 2");
        out.push(CheckOutcome {
            name: format!("min-degree conditions on H({n};{pattern})"),
            tag: "min-degree-structure",
            passed: diag.applicable && diag.all_hold(),
            detail: format!(
                "applicable={} delta={} (i)={} (ii)={} (iii)={} ({}<={})",
                diag.applicable,
                diag.min_degree,
                diag.condition_i,
                diag.condition_ii,
                diag.condition_iii,
                diag.edges_outside_neighborhood,
                diag.edges_outside_bound
            ),
        });
    }
    out
}

/// Order used for a dichotomy triple: one above the proved threshold, capped.
/// The flag is true when the cap cut below the threshold.
pub fn dichotomy_order(pattern: &CliquePattern, cap: usize) -> (usize, bool) {
    let wanted = lemma_threshold(pattern) + 1;
    let cap = cap.min(DICHOTOMY_CAP);
    if wanted > cap {
        (cap, true)
    } else {
        (wanted, false)
    }
}

fn dichotomy_checks(max_n: usize) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for (p, q, r) in DICHOTOMY_GRID {
        let pattern = CliquePattern::new(vec![p, q, r]).expect("valid");
        let (n, capped) = dichotomy_order(&pattern, max_n);
        if n < min_order(&pattern) {
            continue;
        }
        let g = build_h(n, &pattern).expect("n >= min order");
        let wide = r >= p + q;
        let has_copy = contains(&g, &pattern);
        let saturated = !has_copy && check_saturated(&g, &pattern).is_saturated;
        out.push(CheckOutcome {
            name: format!("H({n};{pattern}) free and saturated iff r >= p+q"),
            tag: "wide-gap-dichotomy",
            passed: has_copy != wide && saturated == wide,
            detail: format!(
                "r>=p+q: {wide}, contains: {has_copy}, saturated: {saturated}{}",
                if capped { " (order capped below the proved threshold)" } else { "" }
            ),
        });
    }
    out
}

fn fixture_checks() -> Vec<CheckOutcome> {
    let pattern = fixture_pattern();
    (1..=5)
        .map(|k| {
            let f = build_fixture(k).expect("k in range");
            let g = f.padded(12).expect("fixture has at most 8 vertices");
            let free = is_free(&g, &pattern);
            let (a, b) = f.probe;
            let probe = g.with_edge(a, b).expect("probe is a non-edge");
            let blocked = find_embedding(&probe, &pattern, Some((a, b)))
                .expect("probe edge present")
                .is_none();
            CheckOutcome {
                name: format!(
                    "F{k} + I_{} is {pattern}-free and adding {}{} creates no copy",
                    12 - f.graph.n(),
                    f.name_of(a).unwrap_or("?"),
                    f.name_of(b).unwrap_or("?"),
                ),
                tag: "fixture-probe",
                passed: free && blocked && f.graph.edge_count() == 13,
                detail: format!("free={free} probe blocked={blocked} e={}", f.graph.edge_count()),
            }
        })
        .collect()
}

/// Runs a suite; graph orders above `max_n` are skipped in the core grid.
pub fn run_suite(suite: Suite, max_n: usize) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    if matches!(suite, Suite::Core | Suite::All) {
        out.push(identity_check(max_n));
        out.extend(saturation_checks(max_n));
        out.extend(dichotomy_checks(max_n));
    }
    if matches!(suite, Suite::Fixtures | Suite::All) {
        out.extend(fixture_checks());
    }
    out
}
