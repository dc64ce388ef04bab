//! Isomorphism-class enumeration by canonical edge augmentation.
//!
//! A graph with `m + 1` edges is accepted as a child of a graph `G` with `m`
//! edges only when deleting its canonical edge (the edge whose canonical
//! endpoint labels are lexicographically greatest) gives a graph isomorphic
//! to `G`. Children of one parent are deduplicated by canonical form. Each
//! class therefore appears exactly once, below its canonical parent.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::{canonical_form, canonical_labeling};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

/// Largest vertex count the enumerator accepts.
pub const MAX_ENUMERATION_N: usize = 10;

fn check_n(n: usize) -> Result<()> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::Refused(format!(
            "exhaustive enumeration limited to n <= {MAX_ENUMERATION_N}, got {n}"
        )));
    }
    Ok(())
}

/// Canonical representative of `g` plus its canonical deletion edge.
fn canonical_with_edge(g: &Graph) -> (Graph, Option<(usize, usize)>) {
    let lab = canonical_labeling(g).labeling;
    let canon = g.permuted(&lab);
    // in the canonical graph the chosen edge is the one maximizing (max, min)
    let edge = canon
        .edges()
        .into_iter()
        .max_by_key(|&(a, b)| (b, a));
    (canon, edge)
}

/// Children of `parent` (given in canonical form) that pass the parent test,
/// each returned as its canonical representative, in a deterministic order.
fn children(parent: &Graph, parent_form: &str) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (u, v) in parent.non_edges() {
        let child = parent.with_edge(u, v).expect("non-edge");
        let (canon, edge) = canonical_with_edge(&child);
        let (a, b) = edge.expect("child has an edge");
        let reduced = canon.without_edge(a, b).expect("edge present");
        if canonical_form(&reduced) != parent_form {
            continue;
        }
        if seen.insert(graph6::encode(&canon)) {
            out.push(canon);
        }
    }
    out
}

fn walk<F>(g: Graph, depth: usize, min_depth: usize, max_depth: usize, visitor: &F) -> u64
where
    F: Fn(&Graph) + Sync,
{
    let mut count = 0;
    if depth >= min_depth {
        visitor(&g);
        count += 1;
    }
    if depth == max_depth {
        return count;
    }
    let form = graph6::encode(&g);
    count
        + children(&g, &form)
            .into_par_iter()
            .map(|child| walk(child, depth + 1, min_depth, max_depth, visitor))
            .sum::<u64>()
}

/// Calls `visitor` once for every isomorphism class of graphs on `n` vertices
/// with at most `max_edges` edges, each as its canonical representative.
/// Calls may arrive concurrently and in any order. Returns the class count.
pub fn enumerate_nonisomorphic<F>(n: usize, max_edges: usize, visitor: F) -> Result<u64>
where
    F: Fn(&Graph) + Sync,
{
    check_n(n)?;
    let max_edges = max_edges.min(n * n.saturating_sub(1) / 2);
    Ok(walk(Graph::empty(n)?, 0, 0, max_edges, &visitor))
}

/// Like [`enumerate_nonisomorphic`] but visits only classes with exactly `edges` edges.
pub fn enumerate_with_edges<F>(n: usize, edges: usize, visitor: F) -> Result<u64>
where
    F: Fn(&Graph) + Sync,
{
    check_n(n)?;
    if edges > n * n.saturating_sub(1) / 2 {
        return Ok(0);
    }
    Ok(walk(Graph::empty(n)?, 0, edges, edges, &visitor))
}
