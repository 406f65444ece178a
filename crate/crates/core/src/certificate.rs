//! Partition certificates and their linear-time verification.

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Problem {
    Monopolar,
    Subcoloring,
}

/// Which clusters count against `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundMode {
    ASide,
    Total,
}

/// A vertex bipartition together with a cluster labeling of each side.
///
/// Clusters are kept normalized: members sorted, no empty clusters, and
/// clusters ordered by their smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    side: Vec<Side>,
    a_clusters: Vec<Vec<usize>>,
    b_clusters: Vec<Vec<usize>>,
}

impl Bipartition {
    /// Builds a certificate over `0..n`; sides are derived from the clusters.
    /// Vertices missing from every cluster are left on side B, so callers
    /// that need exact coverage should check [`Bipartition::covers_exactly`].
    pub fn from_clusters(n: usize, a_clusters: Vec<Vec<usize>>, b_clusters: Vec<Vec<usize>>) -> Self {
        let mut side = vec![Side::B; n];
        for c in &a_clusters {
            for &v in c {
                side[v] = Side::A;
            }
        }
        Bipartition { side, a_clusters: normalize(a_clusters), b_clusters: normalize(b_clusters) }
    }

    /// Uses the connected components of each side as its clusters.
    pub fn from_sides(g: &Graph, side: &[Side]) -> Self {
        let a: Vec<usize> = (0..g.n()).filter(|&v| side[v] == Side::A).collect();
        let b: Vec<usize> = (0..g.n()).filter(|&v| side[v] == Side::B).collect();
        Bipartition { side: side.to_vec(), a_clusters: g.components_within(&a), b_clusters: g.components_within(&b) }
    }

    pub fn empty() -> Self {
        Bipartition { side: Vec::new(), a_clusters: Vec::new(), b_clusters: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.side.len()
    }

    pub fn side(&self, v: usize) -> Side {
        self.side[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.side
    }

    pub fn a_clusters(&self) -> &[Vec<usize>] {
        &self.a_clusters
    }

    pub fn b_clusters(&self) -> &[Vec<usize>] {
        &self.b_clusters
    }

    pub fn a_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.side[v] == Side::A).collect()
    }

    pub fn b_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.side[v] == Side::B).collect()
    }

    pub fn cluster_count(&self, mode: BoundMode) -> usize {
        match mode {
            BoundMode::ASide => self.a_clusters.len(),
            BoundMode::Total => self.a_clusters.len() + self.b_clusters.len(),
        }
    }

    /// Every vertex appears in exactly one cluster, on the side it is labeled with.
    pub fn covers_exactly(&self) -> bool {
        let mut seen = vec![false; self.n()];
        for (clusters, s) in [(&self.a_clusters, Side::A), (&self.b_clusters, Side::B)] {
            for c in clusters {
                for &v in c {
                    if v >= self.n() || seen[v] || self.side[v] != s {
                        return false;
                    }
                    seen[v] = true;
                }
            }
        }
        seen.into_iter().all(|x| x)
    }
}

fn normalize(mut clusters: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    clusters.retain(|c| !c.is_empty());
    for c in &mut clusters {
        c.sort_unstable();
    }
    clusters.sort_unstable_by_key(|c| c[0]);
    clusters
}

/// Checks `p` against `g` in `O(n + m)`: both sides are cluster graphs whose
/// clusters are exactly the listed ones (side B edgeless for monopolar), and
/// the nonempty cluster count respects `k` under `mode`.
pub fn verify_certificate(g: &Graph, p: &Bipartition, problem: Problem, k: usize, mode: BoundMode) -> bool {
    let n = g.n();
    if p.n() != n || !p.covers_exactly() {
        return false;
    }
    const NONE: usize = usize::MAX;
    let mut cluster_id = vec![NONE; n];
    let mut sizes = Vec::new();
    for c in p.a_clusters.iter().chain(p.b_clusters.iter()) {
        for &v in c {
            cluster_id[v] = sizes.len();
        }
        sizes.push(c.len());
    }
    let mut internal = vec![0usize; sizes.len()];
    for (u, v) in g.edges() {
        if p.side[u] != p.side[v] {
            continue;
        }
        if problem == Problem::Monopolar && p.side[u] == Side::B {
            return false;
        }
        if cluster_id[u] != cluster_id[v] {
            return false;
        }
        internal[cluster_id[u]] += 1;
    }
    if sizes.iter().zip(&internal).any(|(&s, &e)| e != s * (s - 1) / 2) {
        return false;
    }
    p.cluster_count(mode) <= k
}
