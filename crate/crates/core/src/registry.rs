//! Closed-form saturation numbers for clique-union patterns.
//!
//! Each entry carries the n-condition under which its formula is proved.
//! Nothing here extrapolates below that condition; callers get the
//! condition back and decide.

use serde::Serialize;

use crate::pattern::CliquePattern;

fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Which known result a value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormulaSource {
    /// `sat(n, K_r) = (r-2)(n-r+2) + C(r-2, 2)` (Erdős–Hajnal–Moon).
    ErdosHajnalMoon,
    /// `sat(n, tK_2) = 3t - 3` (Kászonyi–Tuza).
    KaszonyiTuza,
    /// `sat(n, tK_p) = (p-2)(n-p+2) + C(p-2, 2) + (t-1) C(p+1, 2)` (Faudree–Ferrara–Gould–Jacobson).
    FaudreeFerraraGouldJacobson,
    /// `K_p ∪ (t-1)K_q` with `2 <= p < q`, `t >= 3`.
    SmallPlusEqualCliques,
    /// `K_p ∪ K_q` with `p < q`, cited prior result; no n-condition recorded.
    TwoCliques,
    /// `K_p ∪ K_q ∪ K_r` with `p <= q` and `r >= p + q`.
    ThreeCliquesWideGap,
}

/// The n-condition attached to a formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "bound", rename_all = "kebab-case")]
pub enum Threshold {
    /// `n > bound`
    Greater(usize),
    /// `n >= bound`
    AtLeast(usize),
    Unknown,
}

impl Threshold {
    /// `Some(true)` when `n` meets the condition, `None` when it is unknown.
    pub fn holds(&self, n: usize) -> Option<bool> {
        match *self {
            Threshold::Greater(b) => Some(n > b),
            Threshold::AtLeast(b) => Some(n >= b),
            Threshold::Unknown => None,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Threshold::Greater(b) => format!("n > {b}"),
            Threshold::AtLeast(b) => format!("n >= {b}"),
            Threshold::Unknown => "unknown".to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaVerdict {
    /// `None` when no known formula covers the pattern.
    pub value: Option<usize>,
    pub source: Option<FormulaSource>,
    pub threshold: Option<Threshold>,
    /// The condition in symbolic form, as stated with the result.
    pub condition: Option<&'static str>,
}

impl FormulaVerdict {
    fn not_covered() -> Self {
        FormulaVerdict {
            value: None,
            source: None,
            threshold: None,
            condition: None,
        }
    }

    fn covered(value: usize, source: FormulaSource, threshold: Threshold, condition: &'static str) -> Self {
        FormulaVerdict {
            value: Some(value),
            source: Some(source),
            threshold: Some(threshold),
            condition: Some(condition),
        }
    }

    pub fn is_covered(&self) -> bool {
        self.value.is_some()
    }

    /// Whether `n` is inside the proved range; `None` if not covered or unknown.
    pub fn threshold_met(&self, n: usize) -> Option<bool> {
        self.threshold.and_then(|t| t.holds(n))
    }
}

/// `(p-2)(n-p+2) + C(p-2, 2)`: the apex part shared by every formula.
/// `None` when `n < p - 2`.
fn apex_part(n: usize, p: usize) -> Option<usize> {
    let apex = p - 2;
    Some(apex * n.checked_sub(apex)? + binom2(apex))
}

/// Looks the pattern up in the known results, in this order: single
/// clique; `tK_2`; `tK_p`; `K_p ∪ (t-1)K_q`; `K_p ∪ K_q`;
/// `K_p ∪ K_q ∪ K_r` with `r >= p + q`.
pub fn predicted_sat(n: usize, pattern: &CliquePattern) -> FormulaVerdict {
    let sizes = pattern.sizes();
    let t = sizes.len();
    let p = sizes[0];
    if p < 2 {
        return FormulaVerdict::not_covered();
    }
    let Some(apex) = apex_part(n, p) else {
        return FormulaVerdict::not_covered();
    };
    let all_equal = sizes.iter().all(|&s| s == p);

    if t == 1 {
        return FormulaVerdict::covered(
            apex,
            FormulaSource::ErdosHajnalMoon,
            Threshold::AtLeast(p),
            "n >= r",
        );
    }
    if all_equal && p == 2 {
        return FormulaVerdict::covered(
            3 * t - 3,
            FormulaSource::KaszonyiTuza,
            Threshold::AtLeast(3 * t - 3),
            "n >= 3t-3",
        );
    }
    if all_equal {
        // The stated n-condition accompanies the extremal-graph claim for 3K_p.
        return FormulaVerdict::covered(
            apex + (t - 1) * binom2(p + 1),
            FormulaSource::FaudreeFerraraGouldJacobson,
            Threshold::AtLeast((t * p * (p + 1) + 2 * p).saturating_sub(p * p + 6)),
            "n >= tp(p+1)-p^2+2p-6",
        );
    }
    let q = sizes[1];
    if t >= 3 && p < q && sizes[1..].iter().all(|&s| s == q) {
        return FormulaVerdict::covered(
            apex + (t - 1) * binom2(q + 1),
            FormulaSource::SmallPlusEqualCliques,
            Threshold::Greater(q * (q + 1) * (t - 1) + 3 * (p - 2)),
            "n > q(q+1)(t-1)+3(p-2)",
        );
    }
    if t == 2 {
        return FormulaVerdict::covered(
            apex + binom2(q + 1),
            FormulaSource::TwoCliques,
            Threshold::Unknown,
            "unknown",
        );
    }
    if t == 3 {
        let r = sizes[2];
        if r >= p + q {
            return FormulaVerdict::covered(
                apex + binom2(q + 1) + binom2(r + 1),
                FormulaSource::ThreeCliquesWideGap,
                Threshold::Greater(3 * (p - 2) + q * (q + 1) + r * (r + 1)),
                "n > 3(p-2)+q(q+1)+r(r+1)",
            );
        }
    }
    FormulaVerdict::not_covered()
}

/// Minimum `n` above which the structural lemma on minimum-degree vertices
/// applies: `3(p1-2) + Σ_{i>=2} pi(pi+1)` (strict inequality).
pub fn lemma_threshold(pattern: &CliquePattern) -> usize {
    3 * (pattern.smallest().saturating_sub(2)) + pattern.rest().iter().map(|&p| p * (p + 1)).sum::<usize>()
}
