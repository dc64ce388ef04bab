//! Slow, independent reference implementations used to cross-check the
//! library. Nothing here touches bitsets or the library's search code.

#![allow(dead_code)]

use satgraph::Graph;

pub type Matrix = Vec<Vec<bool>>;

pub fn matrix(g: &Graph) -> Matrix {
    let n = g.n();
    (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect()
}

pub fn edge_count(m: &Matrix) -> usize {
    let n = m.len();
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| m[u][v]).count()
}

/// Labeled graph on `n` vertices from a bitmask over pairs in the order
/// (0,1), (0,2), ..., (1,2), ...
pub fn from_mask(n: usize, mask: u64) -> Matrix {
    let mut m = vec![vec![false; n]; n];
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                m[u][v] = true;
                m[v][u] = true;
            }
            bit += 1;
        }
    }
    m
}

pub fn to_graph(m: &Matrix) -> Graph {
    let n = m.len();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| m[u][v])
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Every clique of size `k` among `free` vertices, as increasing lists,
/// passed to `f`; stops early when `f` returns true.
fn cliques(m: &Matrix, free: &[bool], k: usize, cur: &mut Vec<usize>, from: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if cur.len() == k {
        return f(cur);
    }
    for v in from..m.len() {
        if free[v] && cur.iter().all(|&u| m[u][v]) {
            cur.push(v);
            if cliques(m, free, k, cur, v + 1, f) {
                return true;
            }
            cur.pop();
        }
    }
    false
}

fn place(m: &Matrix, free: &[bool], sizes: &[usize]) -> bool {
    let Some((&k, rest)) = sizes.split_first() else {
        return true;
    };
    let mut f = free.to_vec();
    cliques(m, free, k, &mut Vec::new(), 0, &mut |c| {
        for &v in c {
            f[v] = false;
        }
        let ok = place(m, &f, rest);
        for &v in c {
            f[v] = true;
        }
        ok
    })
}

/// Whether `m` contains vertex-disjoint cliques of the given sizes.
pub fn naive_contains(m: &Matrix, sizes: &[usize]) -> bool {
    let mut sorted = sizes.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    place(m, &vec![true; m.len()], &sorted)
}

/// Whether `m` contains such cliques with `u` and `v` in the same clique.
pub fn naive_contains_through(m: &Matrix, sizes: &[usize], u: usize, v: usize) -> bool {
    let n = m.len();
    for i in 0..sizes.len() {
        let k = sizes[i];
        if k < 2 || (i > 0 && sizes[..i].contains(&k)) {
            continue;
        }
        let mut rest = sizes.to_vec();
        rest.remove(i);
        rest.sort_unstable_by(|a, b| b.cmp(a));
        let mut free = vec![true; n];
        free[u] = false;
        free[v] = false;
        let base = free.clone();
        let found = cliques(m, &base, k - 2, &mut Vec::new(), 0, &mut |c| {
            if !c.iter().all(|&w| m[w][u] && m[w][v]) {
                return false;
            }
            let mut f = base.clone();
            for &w in c {
                f[w] = false;
            }
            place(m, &f, &rest)
        });
        if found {
            return true;
        }
    }
    false
}

pub fn naive_saturated(m: &Matrix, sizes: &[usize]) -> bool {
    if naive_contains(m, sizes) {
        return false;
    }
    let n = m.len();
    for u in 0..n {
        for v in u + 1..n {
            if !m[u][v] {
                let mut g = m.clone();
                g[u][v] = true;
                g[v][u] = true;
                if !naive_contains_through(&g, sizes, u, v) {
                    return false;
                }
            }
        }
    }
    true
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Canonical key: the largest pair-bitmask over all relabelings. n <= 8.
pub fn canon_key(m: &Matrix) -> u64 {
    let n = m.len();
    assert!(n <= 8);
    permutations(n)
        .iter()
        .map(|p| {
            let mut key = 0u64;
            for u in 0..n {
                for v in u + 1..n {
                    key = key << 1 | m[p[u]][p[v]] as u64;
                }
            }
            key
        })
        .max()
        .unwrap_or(0)
}

/// Number of isomorphism classes of graphs on `n` vertices with `m` edges,
/// by Burnside's lemma: average over all `n!` permutations of the number
/// of edge sets fixed, i.e. of the product of `(1 + x^len)` over the cycles
/// the permutation induces on unordered pairs.
pub fn burnside_counts(n: usize) -> Vec<u128> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let index = |a: usize, b: usize| {
        let (a, b) = (a.min(b), a.max(b));
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    let perms = permutations(n);
    let mut total = vec![0u128; pairs.len() + 1];
    for p in &perms {
        let mut seen = vec![false; pairs.len()];
        let mut poly = vec![0u128; pairs.len() + 1];
        poly[0] = 1;
        for start in 0..pairs.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                len += 1;
                let (a, b) = pairs[i];
                i = index(p[a], p[b]);
            }
            let mut next = poly.clone();
            for d in 0..poly.len() {
                if poly[d] != 0 && d + len < next.len() {
                    next[d + len] += poly[d];
                }
            }
            poly = next;
        }
        for (t, c) in total.iter_mut().zip(poly) {
            *t += c;
        }
    }
    let order = perms.len() as u128;
    total
        .into_iter()
        .map(|t| {
            assert_eq!(t % order, 0);
            t / order
        })
        .collect()
}

/// `(sat(n, sizes), canonical keys of the extremal classes)` by scanning
/// every labeled graph. n <= 6.
pub fn labeled_sat(n: usize, sizes: &[usize]) -> (usize, Vec<u64>) {
    assert!(n <= 6);
    let pairs = n * n.saturating_sub(1) / 2;
    let mut best = usize::MAX;
    let mut keys = Vec::new();
    for mask in 0u64..1 << pairs {
        let e = mask.count_ones() as usize;
        if e > best {
            continue;
        }
        let m = from_mask(n, mask);
        if naive_saturated(&m, sizes) {
            if e < best {
                best = e;
                keys.clear();
            }
            keys.push(canon_key(&m));
        }
    }
    keys.sort_unstable();
    keys.dedup();
    (best, keys)
}

/// Independent description of the construction: vertex classes by index,
/// then adjacency by rule.
pub fn construction_matrix(n: usize, sizes: &[usize]) -> Matrix {
    let mut sizes = sizes.to_vec();
    sizes.sort_unstable();
    let apex = sizes[0] - 2;
    // class 0 = apex, class i >= 1 = i-th clique, usize::MAX = isolated
    let mut class = vec![0usize; apex];
    for (i, &p) in sizes[1..].iter().enumerate() {
        class.extend(std::iter::repeat(i + 1).take(p + 1));
    }
    class.resize(n, usize::MAX);
    (0..n)
        .map(|u| {
            (0..n)
                .map(|v| u != v && (class[u] == 0 || class[v] == 0 || (class[u] == class[v] && class[u] != usize::MAX)))
                .collect()
        })
        .collect()
}
