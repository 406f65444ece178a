//! The vertex-by-vertex recognition loop.
//!
//! Vertices are added in a fixed order; at each step a recognizer turns a
//! certificate for the previous prefix into one for the current prefix or
//! reports that none exists. For hereditary classes the first failure
//! settles the whole graph.

use crate::error::Result;
use crate::graph::{degree_sorted_order, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OrderMode {
    Input,
    #[default]
    DegreeSorted,
}

/// The induced subgraph on the vertices added so far. Vertex ids are those
/// of the base graph; adjacency lists only contain present vertices.
#[derive(Debug, Clone)]
pub struct PrefixGraph<'g> {
    base: &'g Graph,
    adj: Vec<Vec<usize>>,
    present: Vec<bool>,
    vertices: Vec<usize>,
    max_degree: usize,
}

impl<'g> PrefixGraph<'g> {
    pub fn new(base: &'g Graph) -> Self {
        PrefixGraph {
            base,
            adj: vec![Vec::new(); base.n()],
            present: vec![false; base.n()],
            vertices: Vec::new(),
            max_degree: 0,
        }
    }

    /// The whole of `base` as a prefix, added in id order.
    pub fn full(base: &'g Graph) -> Self {
        let mut p = Self::new(base);
        for v in 0..base.n() {
            p.push(v);
        }
        p
    }

    /// Adds `v` with its edges into the current prefix, in `O(deg(v))`.
    pub fn push(&mut self, v: usize) {
        assert!(!self.present[v], "vertex {v} added twice");
        self.present[v] = true;
        self.vertices.push(v);
        for &u in self.base.neighbors(v) {
            if self.present[u] {
                self.adj[u].push(v);
                self.adj[v].push(u);
                self.max_degree = self.max_degree.max(self.adj[u].len());
            }
        }
        self.max_degree = self.max_degree.max(self.adj[v].len());
    }

    pub fn base(&self) -> &'g Graph {
        self.base
    }

    /// Neighbors of `v` inside the prefix, in no particular order.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.present[v]
    }

    /// Adjacency between two present vertices.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.base.has_edge(u, v)
    }

    /// Present vertices in insertion order.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Materializes the prefix as a standalone graph; vertex `i` of the
    /// result is `self.vertices()[i]`.
    pub fn to_graph(&self) -> Graph {
        self.base.induced_subgraph(&self.vertices)
    }
}

/// A procedure that decides membership of `G_i` given a certificate for
/// `G_i - v`.
pub trait InductiveRecognizer {
    type Certificate;

    /// Certificate of the empty graph.
    fn empty_certificate(&mut self, g: &Graph) -> Self::Certificate;

    /// `prefix` already contains `v`. Returns a certificate for `prefix`,
    /// or `None` if the prefix is not in the class.
    fn step(&mut self, prefix: &PrefixGraph<'_>, v: usize, prev: Self::Certificate, k: usize)
        -> Result<Option<Self::Certificate>>;
}

#[derive(Debug, Clone)]
pub struct InductiveRun<C> {
    pub certificate: Option<C>,
    pub order: Vec<usize>,
    /// Index into `order` of the vertex whose step failed.
    pub failed_step: Option<usize>,
}

pub fn vertex_order(g: &Graph, mode: OrderMode) -> Vec<usize> {
    match mode {
        OrderMode::Input => (0..g.n()).collect(),
        OrderMode::DegreeSorted => degree_sorted_order(g),
    }
}

pub fn recognize_inductively<R: InductiveRecognizer>(
    g: &Graph,
    rec: &mut R,
    k: usize,
    mode: OrderMode,
) -> Result<InductiveRun<R::Certificate>> {
    let order = vertex_order(g, mode);
    let mut prefix = PrefixGraph::new(g);
    let mut cert = rec.empty_certificate(g);
    for (i, &v) in order.iter().enumerate() {
        prefix.push(v);
        if mode == OrderMode::DegreeSorted {
            assert!(
                prefix.max_degree() <= g.degree(v),
                "prefix max degree {} exceeds deg({v}) = {}",
                prefix.max_degree(),
                g.degree(v)
            );
        }
        match rec.step(&prefix, v, cert, k)? {
            Some(next) => cert = next,
            None => return Ok(InductiveRun { certificate: None, order, failed_step: Some(i) }),
        }
    }
    Ok(InductiveRun { certificate: Some(cert), order, failed_step: None })
}
