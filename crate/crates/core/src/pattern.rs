//! Small pattern graphs and induced-occurrence search.

use crate::graph::Graph;

pub const MAX_PATTERN_ORDER: usize = 8;

/// A graph on at most eight vertices stored as adjacency bit rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PatternGraph {
    order: usize,
    adj: [u8; MAX_PATTERN_ORDER],
}

impl PatternGraph {
    pub fn new(order: usize, edges: &[(usize, usize)]) -> Self {
        assert!(order <= MAX_PATTERN_ORDER, "patterns have at most {MAX_PATTERN_ORDER} vertices");
        let mut adj = [0u8; MAX_PATTERN_ORDER];
        for &(u, v) in edges {
            assert!(u < order && v < order && u != v, "bad pattern edge ({u}, {v})");
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        PatternGraph { order, adj }
    }

    pub fn complete(order: usize) -> Self {
        let edges: Vec<_> = (0..order).flat_map(|u| (u + 1..order).map(move |v| (u, v))).collect();
        Self::new(order, &edges)
    }

    pub fn edgeless(order: usize) -> Self {
        Self::new(order, &[])
    }

    pub fn path(order: usize) -> Self {
        let edges: Vec<_> = (1..order).map(|v| (v - 1, v)).collect();
        Self::new(order, &edges)
    }

    pub fn complement(&self) -> Self {
        let full = if self.order == 8 { u8::MAX } else { (1u8 << self.order) - 1 };
        let mut adj = [0u8; MAX_PATTERN_ORDER];
        for (v, row) in adj.iter_mut().enumerate().take(self.order) {
            *row = !self.adj[v] & full & !(1 << v);
        }
        PatternGraph { order: self.order, adj }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn is_complete(&self) -> bool {
        (0..self.order).all(|v| self.adj[v].count_ones() as usize + 1 == self.order)
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj[..self.order].iter().all(|&r| r == 0)
    }

    pub fn to_graph(&self) -> Graph {
        let edges: Vec<_> = (0..self.order)
            .flat_map(|u| (u + 1..self.order).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v)))
            .collect();
        Graph::new(self.order, &edges).expect("pattern edges are valid")
    }
}

/// Lexicographically least tuple `t` of distinct vertices of `restrict`
/// such that `t[i] ~ t[j]` in `g` exactly when `i ~ j` in `h`.
pub fn find_induced_occurrence(g: &Graph, h: &PatternGraph, restrict: &[usize]) -> Option<Vec<usize>> {
    let mut allowed = vec![false; g.n()];
    for &v in restrict {
        allowed[v] = true;
    }
    find_induced_occurrence_masked(g, h, restrict, &allowed)
}

pub(crate) fn find_induced_occurrence_masked(
    g: &Graph,
    h: &PatternGraph,
    restrict: &[usize],
    allowed: &[bool],
) -> Option<Vec<usize>> {
    if h.order() == 0 {
        return Some(Vec::new());
    }
    let mut pool = restrict.to_vec();
    pool.sort_unstable();
    pool.dedup();
    // For each pattern vertex, an earlier adjacent pattern vertex, if any.
    let anchor: Vec<Option<usize>> = (0..h.order()).map(|i| (0..i).find(|&j| h.has_edge(i, j))).collect();
    let mut tuple = Vec::with_capacity(h.order());
    if extend(g, h, &pool, allowed, &anchor, &mut tuple) {
        Some(tuple)
    } else {
        None
    }
}

fn extend(g: &Graph, h: &PatternGraph, pool: &[usize], allowed: &[bool], anchor: &[Option<usize>], tuple: &mut Vec<usize>) -> bool {
    let i = tuple.len();
    if i == h.order() {
        return true;
    }
    let candidates: &[usize] = match anchor[i] {
        Some(j) => g.neighbors(tuple[j]),
        None => pool,
    };
    for &c in candidates {
        if !allowed[c] || tuple.contains(&c) {
            continue;
        }
        if (0..i).all(|j| g.has_edge(tuple[j], c) == h.has_edge(i, j)) {
            tuple.push(c);
            if extend(g, h, pool, allowed, anchor, tuple) {
                return true;
            }
            tuple.pop();
        }
    }
    false
}
