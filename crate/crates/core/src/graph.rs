//! Simple undirected graphs over bitset adjacency rows.

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// An immutable-by-convention simple undirected graph on `0..n`.
///
/// Row `u` of the adjacency holds the neighbourhood of `u`. Rows are always
/// symmetric and irreflexive; every constructor preserves that.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

fn check_capacity(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::Capacity {
            requested: n,
            capacity: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

impl Graph {
    /// The complete graph `K_k`.
    pub fn complete(k: usize) -> Result<Self> {
        check_capacity(k)?;
        let all = VertexSet::prefix(k);
        let adj = (0..k)
            .map(|u| {
                let mut row = all;
                row.remove(u);
                row
            })
            .collect();
        Ok(Graph { adj })
    }

    /// The edgeless graph `I_k`.
    pub fn empty(k: usize) -> Result<Self> {
        check_capacity(k)?;
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; k],
        })
    }

    /// Builds a graph from an edge list, rejecting loops and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.check_pair(u, v)?;
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Vertex count.
    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Edge count.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> &VertexSet {
        &self.adj[u]
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    /// All vertices as a set.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::prefix(self.n())
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::Argument(format!("loop at vertex {u}")));
        }
        if u >= self.n() || v >= self.n() {
            return Err(Error::Argument(format!(
                "pair ({u},{v}) out of range for n={}",
                self.n()
            )));
        }
        Ok(())
    }

    /// Copy of `g1 ∪ g2` with the vertices of `g2` shifted by `g1.n()`.
    pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Result<Self> {
        let n1 = g1.n();
        check_capacity(n1 + g2.n())?;
        let mut adj = g1.adj.clone();
        adj.extend(g2.adj.iter().map(|row| row.iter().map(|v| v + n1).collect::<VertexSet>()));
        Ok(Graph { adj })
    }

    /// The join `g1 ∨ g2`: disjoint union plus every edge between the two sides.
    pub fn join(g1: &Graph, g2: &Graph) -> Result<Self> {
        let (n1, n2) = (g1.n(), g2.n());
        let mut g = Self::disjoint_union(g1, g2)?;
        let left = VertexSet::prefix(n1);
        let right = VertexSet::prefix(n1 + n2).difference(&left);
        for u in 0..n1 {
            g.adj[u] = g.adj[u].union(&right);
        }
        for v in n1..n1 + n2 {
            g.adj[v] = g.adj[v].union(&left);
        }
        Ok(g)
    }

    /// Copy of the graph with edge `uv` present.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.adj[u].insert(v);
        g.adj[v].insert(u);
        Ok(g)
    }

    /// Copy of the graph with edge `uv` absent.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        Ok(g)
    }

    /// Unordered edges `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| self.adj[u].above(u).to_vec().into_iter().map(move |v| (u, v)))
            .collect()
    }

    /// Unordered non-adjacent pairs `u < v` in lexicographic order.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let all = self.vertex_set();
        (0..self.n())
            .flat_map(|u| {
                all.above(u)
                    .difference(&self.adj[u])
                    .iter()
                    .map(move |v| (u, v))
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n());
        let mut adj = vec![VertexSet::EMPTY; self.n()];
        for (u, row) in self.adj.iter().enumerate() {
            adj[perm[u]] = row.iter().map(|v| perm[v]).collect();
        }
        Graph { adj }
    }

    /// Subgraph induced by `keep`, relabelled in ascending order.
    pub fn induced(&self, keep: &VertexSet) -> Self {
        let verts = keep.to_vec();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| self.adj[v].intersection(keep).iter().map(|w| index[w]).collect())
            .collect();
        Graph { adj }
    }

    /// Number of edges with both endpoints in `set`.
    pub fn edges_within(&self, set: &VertexSet) -> usize {
        set.iter()
            .map(|v| self.adj[v].intersection_len(set))
            .sum::<usize>()
            / 2
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| {
            let mut rest = *set;
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    /// Checks symmetry, irreflexivity and range of every row.
    pub fn is_well_formed(&self) -> bool {
        let all = self.vertex_set();
        (0..self.n()).all(|u| {
            let row = &self.adj[u];
            !row.contains(u) && row.is_subset(&all) && row.iter().all(|v| self.adj[v].contains(u))
        })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}
