//! Exhaustive reference recognizers.
//!
//! Assignments are enumerated as a binary counter: bit `v` of the mask is 1
//! when vertex `v` is on side B, so mask 0 puts everything on side A. The
//! first satisfying mask wins.

use crate::certificate::{Bipartition, BoundMode, Side};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::parallel::{find_first, Execution};
use crate::property::PropertySpec;

pub const DEFAULT_CLUSTER_LIMIT: usize = 24;
pub const DEFAULT_PI_LIMIT: usize = 20;
/// Masks are `u64`; the override cannot go past this.
const HARD_LIMIT: usize = 40;
/// Below this order the rayon overhead outweighs the work.
const PARALLEL_FROM: usize = 14;

/// Size guard, overridable through `GRAPHPART_ORACLE_LIMIT`.
pub fn oracle_limit(default: usize) -> usize {
    std::env::var("GRAPHPART_ORACLE_LIMIT")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(default)
        .min(HARD_LIMIT)
}

fn guard(g: &Graph, default: usize) -> Result<()> {
    let limit = oracle_limit(default);
    if g.n() > limit {
        Err(Error::OracleSizeExceeded { n: g.n(), limit })
    } else {
        Ok(())
    }
}

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u)).collect()
}

/// Cluster count of `G[set]`, or `None` if it is not a cluster graph.
fn clusters_in(adj: &[u64], set: u64) -> Option<usize> {
    let mut count = 0;
    let mut rest = set;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let closed = (adj[v] & set) | 1 << v;
        let mut nb = adj[v] & set;
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if (adj[u] & set) | 1 << u != closed {
                return None;
            }
        }
        if closed.trailing_zeros() as usize == v {
            count += 1;
        }
    }
    Some(count)
}

fn edgeless_in(adj: &[u64], set: u64) -> bool {
    let mut rest = set;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if adj[v] & set != 0 {
            return false;
        }
    }
    true
}

fn search(g: &Graph, exec: Execution, ok: impl Fn(&[u64], u64, u64) -> bool + Sync + Send) -> Option<Bipartition> {
    let n = g.n();
    let adj = masks(g);
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let exec = if n >= PARALLEL_FROM { exec } else { Execution::Sequential };
    let hit = find_first(1u64 << n, exec, |b| ok(&adj, full & !b, b))?;
    let side: Vec<Side> = (0..n).map(|v| if hit >> v & 1 == 1 { Side::B } else { Side::A }).collect();
    Some(Bipartition::from_sides(g, &side))
}

pub fn brute_monopolar(g: &Graph, k: usize) -> Result<Option<Bipartition>> {
    brute_monopolar_with(g, k, Execution::default())
}

pub fn brute_monopolar_with(g: &Graph, k: usize, exec: Execution) -> Result<Option<Bipartition>> {
    guard(g, DEFAULT_CLUSTER_LIMIT)?;
    Ok(search(g, exec, |adj, a, b| edgeless_in(adj, b) && clusters_in(adj, a).is_some_and(|c| c <= k)))
}

pub fn brute_subcoloring(g: &Graph, k: usize, mode: BoundMode) -> Result<Option<Bipartition>> {
    brute_subcoloring_with(g, k, mode, Execution::default())
}

pub fn brute_subcoloring_with(g: &Graph, k: usize, mode: BoundMode, exec: Execution) -> Result<Option<Bipartition>> {
    guard(g, DEFAULT_CLUSTER_LIMIT)?;
    Ok(search(g, exec, |adj, a, b| {
        let Some(ca) = clusters_in(adj, a) else { return false };
        if ca > k {
            return false;
        }
        match clusters_in(adj, b) {
            None => false,
            Some(cb) => mode == BoundMode::ASide || ca + cb <= k,
        }
    }))
}

pub fn brute_pi_partition(g: &Graph, spec_a: &PropertySpec, spec_b: &PropertySpec) -> Result<Option<Bipartition>> {
    brute_pi_partition_with(g, spec_a, spec_b, Execution::default())
}

pub fn brute_pi_partition_with(
    g: &Graph,
    spec_a: &PropertySpec,
    spec_b: &PropertySpec,
    exec: Execution,
) -> Result<Option<Bipartition>> {
    guard(g, DEFAULT_PI_LIMIT)?;
    let n = g.n();
    Ok(search(g, exec, |_, a, b| {
        let pick = |m: u64| (0..n).filter(|&v| m >> v & 1 == 1).collect::<Vec<_>>();
        spec_a.contains_induced(g, &pick(a)) && spec_b.contains_induced(g, &pick(b))
    }))
}

/// Smallest vertex cover size by exhaustive search.
pub fn brute_min_vertex_cover(g: &Graph) -> Result<usize> {
    guard(g, DEFAULT_CLUSTER_LIMIT)?;
    let adj = masks(g);
    let n = g.n();
    let best = (0..1u64 << n)
        .filter(|&cover| edgeless_in(&adj, ((1u64 << n) - 1) & !cover))
        .map(|c| c.count_ones() as usize)
        .min();
    Ok(best.unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::{verify_certificate, Problem};

    #[test]
    fn monopolar_examples() {
        let k3 = brute_monopolar(&Graph::complete(3), 1).unwrap().unwrap();
        assert_eq!(k3.a_vertices(), vec![0, 1, 2]);
        assert!(brute_monopolar(&Graph::cycle(4), 1).unwrap().is_none());
        let c4 = brute_monopolar(&Graph::cycle(4), 2).unwrap().unwrap();
        assert!(verify_certificate(&Graph::cycle(4), &c4, Problem::Monopolar, 2, BoundMode::ASide));
    }

    #[test]
    fn subcoloring_examples() {
        let c5 = Graph::cycle(5);
        assert!(brute_subcoloring(&c5, 1, BoundMode::ASide).unwrap().is_none());
        let p = brute_subcoloring(&c5, 2, BoundMode::ASide).unwrap().unwrap();
        assert!(verify_certificate(&c5, &p, Problem::Subcoloring, 2, BoundMode::ASide));
        let q = brute_subcoloring(&Graph::cycle(4), 2, BoundMode::Total).unwrap().unwrap();
        assert!(verify_certificate(&Graph::cycle(4), &q, Problem::Subcoloring, 2, BoundMode::Total));
    }

    #[test]
    fn split_examples() {
        let (cl, ed) = (PropertySpec::clique(), PropertySpec::edgeless());
        let edge = brute_pi_partition(&Graph::path(2), &cl, &ed).unwrap().unwrap();
        assert_eq!(edge.a_vertices(), vec![0, 1]);
        assert!(brute_pi_partition(&Graph::path(3), &cl, &ed).unwrap().is_some());
        assert!(brute_pi_partition(&Graph::cycle(5), &cl, &ed).unwrap().is_none());
    }

    #[test]
    fn size_guard() {
        let g = Graph::empty(DEFAULT_PI_LIMIT + 1);
        let err = brute_pi_partition(&g, &PropertySpec::any(), &PropertySpec::any()).unwrap_err();
        assert!(matches!(err, Error::OracleSizeExceeded { .. }));
    }

    #[test]
    fn vertex_cover() {
        assert_eq!(brute_min_vertex_cover(&Graph::complete(3)).unwrap(), 2);
        assert_eq!(brute_min_vertex_cover(&Graph::path(3)).unwrap(), 1);
    }
}
