//! Canonical labeling by partition refinement and individualization.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, pick the first non-singleton cell, and branch on each of
//! its vertices. Leaves are discrete partitions, i.e. labelings; the
//! canonical labeling is the leaf whose relabelled adjacency matrix is
//! greatest. Two kinds of automorphism pruning are applied:
//!
//! * a leaf equivalent to the first leaf yields an automorphism fixing the
//!   common prefix of the two paths, so the search backs up to where the
//!   paths diverge;
//! * at every node, children in one orbit of the automorphisms found so far
//!   that fix the node's path pointwise are explored only once.

use std::collections::VecDeque;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::graph6;

/// Ordered partition of `0..n` stored nauty-style: `elems` lists vertices
/// cell by cell, `cell_end[s]` is the end of the cell starting at `s`.
#[derive(Clone)]
struct Partition {
    elems: Vec<usize>,
    cell_end: Vec<usize>,
    is_start: Vec<bool>,
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut cell_end = vec![0; n];
        let mut is_start = vec![false; n];
        if n > 0 {
            cell_end[0] = n;
            is_start[0] = true;
        }
        Partition {
            elems: (0..n).collect(),
            cell_end,
            is_start,
        }
    }

    fn starts(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.elems.len()).filter(|&i| self.is_start[i])
    }

    fn is_discrete(&self) -> bool {
        self.is_start.iter().all(|&b| b)
    }

    fn cell_set(&self, start: usize) -> VertexSet {
        self.elems[start..self.cell_end[start]].iter().copied().collect()
    }

    fn target_cell(&self) -> Option<usize> {
        self.starts().find(|&s| self.cell_end[s] - s > 1)
    }

    /// Moves `v` to the front of its cell and splits it off.
    fn individualize(&mut self, start: usize, v: usize) {
        let end = self.cell_end[start];
        let pos = (start..end).find(|&i| self.elems[i] == v).expect("vertex in cell");
        self.elems[start..=pos].rotate_right(1);
        self.cell_end[start] = start + 1;
        self.is_start[start + 1] = true;
        self.cell_end[start + 1] = end;
    }

    /// Refines to the coarsest equitable partition finer than `self`, using the
    /// cells starting at `queue` as initial splitters.
    fn refine(&mut self, g: &Graph, queue: impl IntoIterator<Item = usize>) {
        let n = self.elems.len();
        let mut in_queue = vec![false; n];
        let mut queue: VecDeque<usize> = queue
            .into_iter()
            .inspect(|&s| in_queue[s] = true)
            .collect();
        let mut counts = vec![0usize; n];
        while let Some(splitter) = queue.pop_front() {
            in_queue[splitter] = false;
            let w = self.cell_set(splitter);
            let mut start = 0;
            while start < n {
                let end = self.cell_end[start];
                if end - start > 1 {
                    let mut uniform = true;
                    for i in start..end {
                        let v = self.elems[i];
                        counts[v] = g.neighbors(v).intersection_len(&w);
                        uniform &= counts[v] == counts[self.elems[start]];
                    }
                    if !uniform {
                        self.elems[start..end].sort_by_key(|&v| counts[v]);
                        let mut frag = start;
                        for i in start + 1..=end {
                            if i == end || counts[self.elems[i]] != counts[self.elems[frag]] {
                                self.is_start[frag] = true;
                                self.cell_end[frag] = i;
                                if !in_queue[frag] {
                                    in_queue[frag] = true;
                                    queue.push_back(frag);
                                }
                                frag = i;
                            }
                        }
                    }
                }
                start = end;
            }
        }
    }

    /// `perm[v]` = position of `v`; only meaningful when discrete.
    fn labeling(&self) -> Vec<usize> {
        let mut perm = vec![0; self.elems.len()];
        for (i, &v) in self.elems.iter().enumerate() {
            perm[v] = i;
        }
        perm
    }
}

struct Leaf {
    key: Vec<VertexSet>,
    perm: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

fn relabelled_rows(g: &Graph, perm: &[usize]) -> Vec<VertexSet> {
    g.permuted(perm).rows().to_vec()
}

/// Automorphism sending the vertex at position `i` of leaf `a` to the vertex at
/// position `i` of leaf `b`.
fn automorphism(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut inv_b = vec![0; b.len()];
    for (v, &pos) in b.iter().enumerate() {
        inv_b[pos] = v;
    }
    a.iter().map(|&pos| inv_b[pos]).collect()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl Search<'_> {
    fn orbit_roots(&self, path: &[usize]) -> Vec<usize> {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        for gen in &self.generators {
            if path.iter().all(|&v| gen[v] == v) {
                for (v, &w) in gen.iter().enumerate() {
                    let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    /// Returns `Some(depth)` when the caller should abandon subtrees below `depth`.
    fn visit(&mut self, part: Partition, path: &mut Vec<usize>) -> Option<usize> {
        if part.is_discrete() {
            return self.leaf(&part, path);
        }
        let depth = path.len();
        let target = part.target_cell().expect("non-discrete partition has a target");
        let mut cell: Vec<usize> = part.elems[target..part.cell_end[target]].to_vec();
        cell.sort_unstable();
        let mut tried: Vec<usize> = Vec::new();
        let mut seen_gens = usize::MAX;
        let mut roots = Vec::new();
        for v in cell {
            if !tried.is_empty() {
                if seen_gens != self.generators.len() {
                    roots = self.orbit_roots(path);
                    seen_gens = self.generators.len();
                }
                if tried.iter().any(|&t| roots[t] == roots[v]) {
                    continue;
                }
            }
            tried.push(v);
            let mut child = part.clone();
            child.individualize(target, v);
            child.refine(self.g, [target, target + 1]);
            path.push(v);
            let jump = self.visit(child, path);
            path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, part: &Partition, path: &[usize]) -> Option<usize> {
        let perm = part.labeling();
        let key = relabelled_rows(self.g, &perm);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                key,
                perm,
                path: path.to_vec(),
            };
            self.best = Some(Leaf {
                key: leaf.key.clone(),
                perm: leaf.perm.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if key == first.key {
            self.generators.push(automorphism(&first.perm, &perm));
            let common = first
                .path
                .iter()
                .zip(path)
                .take_while(|(a, b)| a == b)
                .count();
            return Some(common);
        }
        let best = self.best.as_ref().expect("best set with first");
        match key.cmp(&best.key) {
            std::cmp::Ordering::Equal => {
                self.generators.push(automorphism(&best.perm, &perm));
            }
            std::cmp::Ordering::Greater => {
                self.best = Some(Leaf {
                    key,
                    perm,
                    path: path.to_vec(),
                });
            }
            std::cmp::Ordering::Less => {}
        }
        None
    }
}

/// Result of canonical labeling.
#[derive(Clone, Debug)]
pub struct Canonical {
    /// `labeling[v]` is the canonical index of vertex `v`.
    pub labeling: Vec<usize>,
    /// Generators of (a subgroup of) the automorphism group discovered on the way.
    pub generators: Vec<Vec<usize>>,
}

impl Canonical {
    pub fn graph(&self, g: &Graph) -> Graph {
        g.permuted(&self.labeling)
    }
}

pub fn canonical_labeling(g: &Graph) -> Canonical {
    let n = g.n();
    if n <= 1 {
        return Canonical {
            labeling: (0..n).collect(),
            generators: Vec::new(),
        };
    }
    let mut part = Partition::unit(n);
    part.refine(g, [0]);
    let mut search = Search {
        g,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    search.visit(part, &mut Vec::new());
    Canonical {
        labeling: search.best.expect("at least one leaf").perm,
        generators: search.generators,
    }
}

/// Relabelling-invariant graph6 string of the canonical representative.
pub fn canonical_form(g: &Graph) -> String {
    graph6::encode(&canonical_labeling(g).graph(g))
}

pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    let mut d1: Vec<usize> = (0..g1.n()).map(|v| g1.degree(v)).collect();
    let mut d2: Vec<usize> = (0..g2.n()).map(|v| g2.degree(v)).collect();
    d1.sort_unstable();
    d2.sort_unstable();
    d1 == d2 && canonical_labeling(g1).graph(g1) == canonical_labeling(g2).graph(g2)
}
