//! Cluster graphs: disjoint unions of cliques, equivalently graphs with no
//! induced path on three vertices.

use crate::graph::Graph;

/// An induced path `ends.0 - mid - ends.1` with `ends.0 < ends.1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct P3 {
    pub mid: usize,
    pub ends: (usize, usize),
}

impl P3 {
    pub fn path(&self) -> [usize; 3] {
        [self.ends.0, self.mid, self.ends.1]
    }
}

/// Clusters of `G[subset]`, or the least induced P3 (ordered by midpoint,
/// then by endpoints) when `G[subset]` is not a cluster graph.
///
/// Clusters are sorted internally and ordered by their smallest vertex.
pub fn cluster_decomposition(g: &Graph, subset: &[usize]) -> Result<Vec<Vec<usize>>, P3> {
    let mut inside = vec![false; g.n()];
    for &v in subset {
        inside[v] = true;
    }
    let comps = g.components_within(subset);
    let mut comp_size = vec![0usize; g.n()];
    for c in &comps {
        for &v in c {
            comp_size[v] = c.len();
        }
    }
    let is_cluster = subset
        .iter()
        .all(|&v| g.neighbors(v).iter().filter(|&&u| inside[u]).count() + 1 == comp_size[v]);
    if is_cluster {
        Ok(comps)
    } else {
        Err(least_p3(g, subset, &inside).expect("a non-clique component contains an induced P3"))
    }
}

pub fn is_cluster_graph(g: &Graph) -> bool {
    let all: Vec<usize> = (0..g.n()).collect();
    cluster_decomposition(g, &all).is_ok()
}

fn least_p3(g: &Graph, subset: &[usize], inside: &[bool]) -> Option<P3> {
    let mut mids = subset.to_vec();
    mids.sort_unstable();
    let mut mark = vec![false; g.n()];
    for &x in &mids {
        let nb: Vec<usize> = g.neighbors(x).iter().copied().filter(|&u| inside[u]).collect();
        for &u in &nb {
            mark[u] = true;
        }
        let mut found = None;
        'outer: for &a in &nb {
            let adjacent = g.neighbors(a).iter().filter(|&&w| mark[w]).count();
            if adjacent + 1 < nb.len() {
                for &b in &nb {
                    if b != a && !g.has_edge(a, b) {
                        found = Some(P3 { mid: x, ends: (a.min(b), a.max(b)) });
                        break 'outer;
                    }
                }
            }
        }
        for &u in &nb {
            mark[u] = false;
        }
        if found.is_some() {
            return found;
        }
    }
    None
}
