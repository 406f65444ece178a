//! Immutable simple undirected graphs.
//!
//! Vertices are `0..n`. Adjacency is stored in compressed form with every
//! neighbor list sorted by vertex id, so [`Graph::has_edge`] is a binary
//! search and merge-walks over two neighbor lists are possible.

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
    max_degree: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges (in either
    /// orientation) collapse into one; self-loops are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut degree = vec![0usize; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::OutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::OutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::InvalidEdge(u));
            }
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut lists: Vec<Vec<usize>> = degree.iter().map(|&d| Vec::with_capacity(d)).collect();
        for &(u, v) in edges {
            lists[u].push(v);
            lists[v].push(u);
        }
        for list in &mut lists {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self::from_sorted_lists(lists))
    }

    /// Adjacency lists must be sorted, deduplicated, loop-free and symmetric.
    pub(crate) fn from_sorted_lists(lists: Vec<Vec<usize>>) -> Self {
        let mut offsets = Vec::with_capacity(lists.len() + 1);
        offsets.push(0);
        let mut targets = Vec::with_capacity(lists.iter().map(Vec::len).sum());
        let mut max_degree = 0;
        for list in lists {
            max_degree = max_degree.max(list.len());
            targets.extend_from_slice(&list);
            offsets.push(targets.len());
        }
        Graph { offsets, targets, max_degree }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted_lists(vec![Vec::new(); n])
    }

    pub fn complete(n: usize) -> Self {
        Self::from_sorted_lists((0..n).map(|v| (0..n).filter(|&u| u != v).collect()).collect())
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::new(n, &edges).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Self::new(n, &edges).expect("cycle edges are valid")
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Self::new(leaves + 1, &edges).expect("star edges are valid")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    #[inline]
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) { (u, v) } else { (v, u) };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.neighbors(u).iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let lists = (0..n)
            .map(|v| {
                let nb = self.neighbors(v);
                (0..n).filter(|&u| u != v && nb.binary_search(&u).is_err()).collect()
            })
            .collect();
        Self::from_sorted_lists(lists)
    }

    /// Induced subgraph on `vertices` (any order, no duplicates). Vertex `i`
    /// of the result is `vertices[i]` of `self`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let lists = vertices
            .iter()
            .map(|&v| {
                let mut l: Vec<usize> = self.neighbors(v).iter().map(|&u| local[u]).filter(|&u| u != usize::MAX).collect();
                l.sort_unstable();
                l
            })
            .collect();
        Self::from_sorted_lists(lists)
    }

    /// Removes `v` and shifts higher ids down by one.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n()).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut lists: Vec<Vec<usize>> = (0..self.n()).map(|v| self.neighbors(v).to_vec()).collect();
        lists.extend((0..other.n()).map(|v| other.neighbors(v).iter().map(|&u| u + shift).collect()));
        Self::from_sorted_lists(lists)
    }

    /// Connected components of `G[subset]`, each sorted, ordered by their
    /// smallest vertex.
    pub fn components_within(&self, subset: &[usize]) -> Vec<Vec<usize>> {
        let mut inside = vec![false; self.n()];
        for &v in subset {
            inside[v] = true;
        }
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        let mut seen = vec![false; self.n()];
        let mut comps = Vec::new();
        let mut stack = Vec::new();
        for &s in &sorted {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(x) = stack.pop() {
                comp.push(x);
                for &y in self.neighbors(x) {
                    if inside[y] && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_edgeless_within(&self, subset: &[usize]) -> bool {
        let mut inside = vec![false; self.n()];
        for &v in subset {
            inside[v] = true;
        }
        subset.iter().all(|&v| self.neighbors(v).iter().all(|&u| !inside[u]))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Builds a graph, collapsing duplicate edges and rejecting self-loops.
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::new(n, edges)
}

/// Vertices by nondecreasing degree, ties by ascending id. Counting sort,
/// `O(n + m)`.
pub fn degree_sorted_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut buckets = vec![0usize; g.max_degree() + 2];
    for v in 0..n {
        buckets[g.degree(v) + 1] += 1;
    }
    for d in 1..buckets.len() {
        buckets[d] += buckets[d - 1];
    }
    let mut order = vec![0; n];
    for v in 0..n {
        let slot = &mut buckets[g.degree(v)];
        order[*slot] = v;
        *slot += 1;
    }
    order
}
