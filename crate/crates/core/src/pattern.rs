use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::MAX_VERTICES;
use crate::error::{Error, Result};

/// The target graph `K_{p1} ∪ ... ∪ K_{pt}`, stored as its clique orders in
/// ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct CliquePattern {
    sizes: Vec<usize>,
}

impl CliquePattern {
    /// Sorts `sizes` and validates them.
    pub fn new(mut sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::Pattern("pattern needs at least one clique".into()));
        }
        if let Some(&bad) = sizes.iter().find(|&&p| p == 0 || p > MAX_VERTICES) {
            return Err(Error::Pattern(format!(
                "clique order {bad} outside 1..={MAX_VERTICES}"
            )));
        }
        let total: usize = sizes.iter().sum();
        if total > MAX_VERTICES {
            return Err(Error::Pattern(format!(
                "total order {total} exceeds {MAX_VERTICES}"
            )));
        }
        sizes.sort_unstable();
        Ok(CliquePattern { sizes })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Number of cliques `t`.
    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    /// Smallest clique order `p1`.
    pub fn smallest(&self) -> usize {
        self.sizes[0]
    }

    pub fn largest(&self) -> usize {
        *self.sizes.last().expect("non-empty")
    }

    /// Total vertex demand `Σ pi`.
    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// The clique orders after the smallest one.
    pub fn rest(&self) -> &[usize] {
        &self.sizes[1..]
    }
}

impl TryFrom<Vec<usize>> for CliquePattern {
    type Error = Error;

    fn try_from(sizes: Vec<usize>) -> Result<Self> {
        Self::new(sizes)
    }
}

impl From<CliquePattern> for Vec<usize> {
    fn from(p: CliquePattern) -> Self {
        p.sizes
    }
}

impl FromStr for CliquePattern {
    type Err = Error;

    /// Parses `"p1,p2,...,pt"`; order is irrelevant.
    fn from_str(s: &str) -> Result<Self> {
        let sizes = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::Pattern(format!("bad clique order {tok:?} in {s:?}")));
                }
                tok.parse::<usize>()
                    .map_err(|e| Error::Pattern(format!("{tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(sizes)
    }
}

impl fmt::Display for CliquePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sizes.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}
