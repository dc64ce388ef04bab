//! Containment of disjoint clique unions.
//!
//! Backtracking over parts, largest clique first. Each partial clique keeps
//! the common neighbourhood of its chosen vertices as its candidate set and
//! only grows by vertices above its current maximum. Consecutive parts of
//! equal order must have increasing minimum vertices, so every witness is
//! produced once up to swapping equal cliques.

use serde::{Serialize, Serializer};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::CliquePattern;

/// Pairwise-disjoint cliques, `parts[i]` of order `pattern.sizes()[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub parts: Vec<VertexSet>,
}

impl Witness {
    pub fn parts_as_vecs(&self) -> Vec<Vec<usize>> {
        self.parts.iter().map(VertexSet::to_vec).collect()
    }

    /// Checks the witness against `g` and `pattern` without trusting the search.
    pub fn is_valid_for(&self, g: &Graph, pattern: &CliquePattern) -> bool {
        if self.parts.len() != pattern.len() {
            return false;
        }
        let mut used = VertexSet::EMPTY;
        for (part, &size) in self.parts.iter().zip(pattern.sizes()) {
            if part.len() != size
                || part.last().is_some_and(|v| v >= g.n())
                || !part.intersection(&used).is_empty()
                || !g.is_clique(part)
            {
                return false;
            }
            used = used.union(part);
        }
        true
    }

    pub fn contains_pair(&self, u: usize, v: usize) -> bool {
        self.parts.iter().any(|p| p.contains(u) && p.contains(v))
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts_as_vecs().serialize(s)
    }
}

struct Search<'a> {
    g: &'a Graph,
    /// Orders of the parts still to place, in placement order.
    sizes: Vec<usize>,
    /// `demand[i]` = sum of `sizes[i..]`.
    demand: Vec<usize>,
    chosen: Vec<VertexSet>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, sizes: Vec<usize>) -> Self {
        let mut demand = vec![0; sizes.len() + 1];
        for i in (0..sizes.len()).rev() {
            demand[i] = demand[i + 1] + sizes[i];
        }
        Search {
            g,
            chosen: Vec::with_capacity(sizes.len()),
            sizes,
            demand,
        }
    }

    /// Places parts `i..` inside `avail`. `floor` is the minimum vertex of the
    /// previous part when it has the same order as part `i`.
    fn place(&mut self, i: usize, avail: VertexSet, floor: Option<usize>) -> bool {
        if i == self.sizes.len() {
            return true;
        }
        let size = self.sizes[i];
        if avail.len() < self.demand[i] {
            return false;
        }
        let starts = match floor {
            Some(f) => avail.above(f),
            None => avail,
        };
        if size == 1 {
            for v in starts.iter() {
                let mut rest = avail;
                rest.remove(v);
                self.chosen.push(VertexSet::from_slice(&[v]));
                if self.place(i + 1, rest, self.next_floor(i, v)) {
                    return true;
                }
                self.chosen.pop();
            }
            return false;
        }
        // the largest remaining order is `size`; some available vertex must
        // have that many available neighbours
        let degree_ok = |v: usize| self.g.neighbors(v).intersection_len(&avail) + 1 >= size;
        if !avail.iter().any(degree_ok) {
            return false;
        }
        for v in starts.iter() {
            if !degree_ok(v) {
                continue;
            }
            let cand = self.g.neighbors(v).intersection(&avail).above(v);
            if self.grow(i, VertexSet::from_slice(&[v]), 1, cand, avail) {
                return true;
            }
        }
        false
    }

    fn next_floor(&self, i: usize, min_vertex: usize) -> Option<usize> {
        (i + 1 < self.sizes.len() && self.sizes[i + 1] == self.sizes[i]).then_some(min_vertex)
    }

    fn grow(&mut self, i: usize, clique: VertexSet, k: usize, cand: VertexSet, avail: VertexSet) -> bool {
        let size = self.sizes[i];
        if k == size {
            let min_vertex = clique.first().expect("non-empty clique");
            self.chosen.push(clique);
            if self.place(i + 1, avail.difference(&clique), self.next_floor(i, min_vertex)) {
                return true;
            }
            self.chosen.pop();
            return false;
        }
        if k + cand.len() < size {
            return false;
        }
        for w in cand.iter() {
            let mut next = clique;
            next.insert(w);
            let next_cand = cand.intersection(self.g.neighbors(w)).above(w);
            if k + 1 + next_cand.len() < size {
                continue;
            }
            if self.grow(i, next, k + 1, next_cand, avail) {
                return true;
            }
        }
        false
    }
}

/// Orders the found parts like `pattern.sizes()`: ascending order, ties by
/// minimum vertex.
fn into_witness(mut parts: Vec<VertexSet>) -> Witness {
    parts.sort_by_key(|p| (p.len(), p.first()));
    Witness { parts }
}

fn descending(sizes: &[usize]) -> Vec<usize> {
    let mut s = sizes.to_vec();
    s.sort_unstable_by(|a, b| b.cmp(a));
    s
}

/// Searches for a copy of `pattern` in `g`. With `required_edge = Some((u, v))`
/// only copies that put `u` and `v` in the same clique are considered; the
/// edge must be present in `g`.
pub fn find_embedding(
    g: &Graph,
    pattern: &CliquePattern,
    required_edge: Option<(usize, usize)>,
) -> Result<Option<Witness>> {
    let all = g.vertex_set();
    let Some((u, v)) = required_edge else {
        let mut search = Search::new(g, descending(pattern.sizes()));
        return Ok(search.place(0, all, None).then(|| into_witness(search.chosen)));
    };
    if u == v || !g.has_edge(u, v) {
        return Err(Error::Argument(format!("required edge ({u},{v}) is not an edge")));
    }
    if pattern.total() > g.n() {
        return Ok(None);
    }
    let common = g.neighbors(u).intersection(g.neighbors(v));
    let mut tried = Vec::new();
    for &size in descending(pattern.sizes()).iter() {
        if size < 2 || tried.contains(&size) {
            continue;
        }
        tried.push(size);
        let mut rest = descending(pattern.sizes());
        let pos = rest.iter().position(|&s| s == size).expect("size present");
        rest.remove(pos);
        let mut search = Search::new(g, rest);
        let forced = VertexSet::from_slice(&[u, v]);
        if let Some(w) = forced_part(&mut search, size, forced, common, all) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Extends `clique` (already containing the required pair) to `size` vertices
/// from `cand`, then places the remaining parts in what is left.
fn forced_part(
    search: &mut Search<'_>,
    size: usize,
    clique: VertexSet,
    cand: VertexSet,
    all: VertexSet,
) -> Option<Witness> {
    if clique.len() == size {
        let avail = all.difference(&clique);
        if search.place(0, avail, None) {
            let mut parts = std::mem::take(&mut search.chosen);
            parts.push(clique);
            return Some(into_witness(parts));
        }
        return None;
    }
    if clique.len() + cand.len() < size {
        return None;
    }
    for w in cand.iter() {
        let mut next = clique;
        next.insert(w);
        let next_cand = cand.intersection(search.g.neighbors(w)).above(w);
        if let Some(found) = forced_part(search, size, next, next_cand, all) {
            return Some(found);
        }
    }
    None
}

pub fn contains(g: &Graph, pattern: &CliquePattern) -> bool {
    find_embedding(g, pattern, None)
        .expect("search without a required edge cannot fail")
        .is_some()
}

/// Largest graph [`count_embeddings_small`] accepts.
pub const ORACLE_MAX_N: usize = 12;

/// Counts witnesses by plain enumeration of vertex subsets, with no pruning
/// beyond skipping non-cliques. Parts of equal order are unordered.
pub fn count_embeddings_small(g: &Graph, pattern: &CliquePattern) -> Result<u64> {
    if g.n() > ORACLE_MAX_N {
        return Err(Error::Refused(format!(
            "embedding oracle limited to n <= {ORACLE_MAX_N}, got {}",
            g.n()
        )));
    }
    let n = g.n();
    let subsets_by_size: Vec<Vec<u32>> = (0..=n)
        .map(|k| (0u32..1 << n).filter(|m| m.count_ones() as usize == k).collect())
        .collect();
    fn is_clique(g: &Graph, mask: u32) -> bool {
        (0..g.n())
            .filter(|&v| mask >> v & 1 == 1)
            .all(|v| (0..g.n()).filter(|&w| w != v && mask >> w & 1 == 1).all(|w| g.has_edge(v, w)))
    }
    fn go(g: &Graph, sizes: &[usize], subsets: &[Vec<u32>], used: u32, prev: Option<(usize, u32)>) -> u64 {
        let Some((&size, rest)) = sizes.split_first() else {
            return 1;
        };
        if size >= subsets.len() {
            return 0;
        }
        let mut total = 0;
        for &mask in &subsets[size] {
            if mask & used != 0 {
                continue;
            }
            // equal consecutive orders: count each unordered pair once
            if let Some((prev_size, prev_mask)) = prev {
                if prev_size == size && mask.trailing_zeros() <= prev_mask.trailing_zeros() {
                    continue;
                }
            }
            if is_clique(g, mask) {
                total += go(g, rest, subsets, used | mask, Some((size, mask)));
            }
        }
        total
    }
    Ok(go(g, pattern.sizes(), &subsets_by_size, 0, None))
}
