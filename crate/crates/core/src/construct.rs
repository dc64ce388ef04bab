//! The extremal constructions `H(n; p1,...,pt)` and the fixture graphs
//! `F1`–`F5`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::CliquePattern;

fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

fn require_construction(pattern: &CliquePattern) -> Result<()> {
    if pattern.smallest() < 2 {
        return Err(Error::Pattern(format!(
            "construction needs every clique order >= 2, got {pattern}"
        )));
    }
    Ok(())
}

/// Smallest `n` for which `H(n; pattern)` exists: `Σ pi + t - 3`.
pub fn min_order(pattern: &CliquePattern) -> usize {
    (pattern.total() + pattern.len()).saturating_sub(3)
}

fn check_order(n: usize, pattern: &CliquePattern) -> Result<()> {
    require_construction(pattern)?;
    let min_n = min_order(pattern);
    if n < min_n {
        return Err(Error::TooFewVertices {
            min_n,
            pattern: pattern.to_string(),
        });
    }
    Ok(())
}

/// `K_{p1-2} ∨ (K_{p2+1} ∪ ... ∪ K_{pt+1} ∪ I_{n-t+3-Σpi})`.
///
/// Layout: apex clique at `0..p1-2`, then the `t-1` cliques in ascending
/// order of size, then the isolated part.
pub fn build_h(n: usize, pattern: &CliquePattern) -> Result<Graph> {
    check_order(n, pattern)?;
    let mut body = Graph::empty(0)?;
    for &p in pattern.rest() {
        body = Graph::disjoint_union(&body, &Graph::complete(p + 1)?)?;
    }
    body = Graph::disjoint_union(&body, &Graph::empty(n - min_order(pattern))?)?;
    Graph::join(&Graph::complete(pattern.smallest() - 2)?, &body)
}

/// Closed-form edge count of [`build_h`].
pub fn h_edge_count(n: usize, pattern: &CliquePattern) -> Result<usize> {
    check_order(n, pattern)?;
    let apex = pattern.smallest() - 2;
    Ok(apex * (n - apex) + binom2(apex) + pattern.rest().iter().map(|&p| binom2(p + 1)).sum::<usize>())
}

/// A named vertex of a fixture graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct NamedVertex {
    pub name: &'static str,
    pub index: usize,
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub index: usize,
    pub graph: Graph,
    pub names: Vec<NamedVertex>,
    /// The non-edge whose addition still leaves the graph `K2 ∪ K2 ∪ K4`-free.
    pub probe: (usize, usize),
}

impl Fixture {
    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.names.iter().find(|nv| nv.name == name).map(|nv| nv.index)
    }

    pub fn name_of(&self, v: usize) -> Option<&'static str> {
        self.names.iter().find(|nv| nv.index == v).map(|nv| nv.name)
    }

    /// The fixture followed by `n - 7` or `n - 8` isolated vertices.
    pub fn padded(&self, n: usize) -> Result<Graph> {
        let extra = n.checked_sub(self.graph.n()).ok_or_else(|| {
            Error::Argument(format!(
                "cannot pad {}-vertex fixture to {n} vertices",
                self.graph.n()
            ))
        })?;
        Graph::disjoint_union(&self.graph, &Graph::empty(extra)?)
    }
}

/// The pattern all five fixtures are near-misses for.
pub fn fixture_pattern() -> CliquePattern {
    CliquePattern::new(vec![2, 2, 4]).expect("valid")
}

/// Fixture `F_k`, `k` in `1..=5`.
///
/// Every fixture extends `K2` on `{u1,u2}` plus `K4` on `{v1,...,v4}` by six
/// edges. Vertex order is `u1,u2,v1,v2,v3,v4` followed by whichever of
/// `x`, `y` the fixture uses.
pub fn build_fixture(k: usize) -> Result<Fixture> {
    const BASE: [&str; 6] = ["u1", "u2", "v1", "v2", "v3", "v4"];
    let (extra_names, extra_edges, probe): (&[&str], [(&str, &str); 6], (&str, &str)) = match k {
        1 => (
            &["x", "y"],
            [("x", "v2"), ("u2", "v3"), ("u2", "v4"), ("y", "u2"), ("y", "v3"), ("y", "v4")],
            ("x", "v1"),
        ),
        2 => (
            &["x", "y"],
            [("u2", "v2"), ("u2", "v3"), ("x", "v1"), ("y", "u2"), ("y", "v2"), ("y", "v3")],
            ("u1", "v1"),
        ),
        3 => (
            &["x"],
            [("u1", "v3"), ("u1", "v4"), ("u2", "v2"), ("u2", "v3"), ("u2", "v4"), ("x", "v1")],
            ("u1", "v1"),
        ),
        4 => (
            &["x"],
            [("u1", "v3"), ("u2", "v1"), ("u2", "v2"), ("u2", "v3"), ("u2", "v4"), ("x", "v1")],
            ("u1", "v1"),
        ),
        5 => (
            &["y"],
            [("u2", "v1"), ("u2", "v3"), ("u2", "v4"), ("y", "v2"), ("y", "v3"), ("y", "v4")],
            ("u1", "v1"),
        ),
        _ => return Err(Error::Argument(format!("fixture index {k} outside 1..=5"))),
    };
    let names: Vec<NamedVertex> = BASE
        .iter()
        .chain(extra_names)
        .enumerate()
        .map(|(index, &name)| NamedVertex { name, index })
        .collect();
    let idx = |name: &str| names.iter().find(|nv| nv.name == name).expect("known name").index;

    let mut edges = vec![(idx("u1"), idx("u2"))];
    for a in 2..6 {
        for b in a + 1..6 {
            edges.push((a, b));
        }
    }
    edges.extend(extra_edges.iter().map(|&(a, b)| (idx(a), idx(b))));
    let graph = Graph::from_edges(names.len(), &edges)?;
    let (a, b) = (idx(probe.0), idx(probe.1));
    Ok(Fixture {
        index: k,
        graph,
        probe: (a.min(b), a.max(b)),
        names,
    })
}
