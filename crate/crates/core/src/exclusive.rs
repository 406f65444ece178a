//! Recognizers for `(Π_A, Π_B)`-partitions with arbitrary hereditary
//! properties: the subset-enumeration step for mutually exclusive
//! properties, two forbidden-subgraph search trees, and a branching
//! algorithm for a bounded side A.

use std::collections::VecDeque;

use itertools::Itertools;

use crate::certificate::{Bipartition, Side};
use crate::cluster::cluster_decomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::inductive::{recognize_inductively, InductiveRecognizer, OrderMode, PrefixGraph};
use crate::property::PropertySpec;
use crate::stats::SearchStats;

/// Candidate pairs `(Ã, B̃)` the subset step may try before giving up.
pub const DEFAULT_XP_BUDGET: u128 = 5_000_000;

/// `C(r+s-2, r-1)`, an upper bound on the Ramsey number `R(r, s)`.
pub fn ramsey_upper_bound(r: u64, s: u64) -> Result<u64> {
    if r == 0 || s == 0 {
        return Err(Error::Config(format!("ramsey bound needs r, s >= 1, got ({r}, {s})")));
    }
    let too_large = || Error::BoundTooLarge { r, s };
    let top = (r - 1).checked_add(s - 1).ok_or_else(too_large)?;
    let pick = (r - 1).min(s - 1);
    let mut c: u128 = 1;
    for i in 1..=pick as u128 {
        // c * (top - pick + i) / i stays integral at every step.
        c = c.checked_mul(top as u128 - pick as u128 + i).ok_or_else(too_large)? / i;
    }
    u64::try_from(c).map_err(|_| too_large())
}

fn count_subsets(n: usize, below: usize) -> u128 {
    let mut total: u128 = 0;
    let mut c: u128 = 1;
    for i in 0..below.min(n + 1) {
        total = total.saturating_add(c);
        c = c.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    total
}

fn check_sides(g: &Graph, v: usize, a: &[usize], b: &[usize]) -> Result<Vec<Side>> {
    let n = g.n();
    if v >= n {
        return Err(Error::OutOfRange { vertex: v, n });
    }
    let mut side: Vec<Option<Side>> = vec![None; n];
    for (list, s) in [(a, Side::A), (b, Side::B)] {
        for &u in list {
            if u >= n {
                return Err(Error::OutOfRange { vertex: u, n });
            }
            if u == v || side[u].is_some() {
                return Err(Error::BadCertificate(format!("vertex {u} is listed twice or is the new vertex")));
            }
            side[u] = Some(s);
        }
    }
    if let Some(u) = (0..n).find(|&u| u != v && side[u].is_none()) {
        return Err(Error::BadCertificate(format!("vertex {u} is on neither side")));
    }
    Ok(side.into_iter().map(|s| s.unwrap_or(Side::A)).collect())
}

fn members(side: &[Side], want: Side, skip: usize) -> Vec<usize> {
    (0..side.len()).filter(|&u| u != skip && side[u] == want).collect()
}

/// Core of the subset step on local ids. `side[v]` is ignored.
fn xp_core(g: &Graph, v: usize, side: &[Side], spec_a: &PropertySpec, spec_b: &PropertySpec, d: usize, budget: u128) -> Result<Option<Vec<Side>>> {
    let a = members(side, Side::A, v);
    let b = members(side, Side::B, v);
    let needed = count_subsets(a.len(), d).saturating_mul(count_subsets(b.len(), d));
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut cand = side.to_vec();
    for size_a in 0..d.min(a.len() + 1) {
        for a_moved in a.iter().copied().combinations(size_a) {
            for size_b in 0..d.min(b.len() + 1) {
                for b_moved in b.iter().copied().combinations(size_b) {
                    cand.copy_from_slice(side);
                    for &u in &a_moved {
                        cand[u] = Side::B;
                    }
                    for &u in &b_moved {
                        cand[u] = Side::A;
                    }
                    for v_side in [Side::A, Side::B] {
                        cand[v] = v_side;
                        if spec_a.contains_induced(g, &members(&cand, Side::A, usize::MAX))
                            && spec_b.contains_induced(g, &members(&cand, Side::B, usize::MAX))
                        {
                            return Ok(Some(cand));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// One inductive step for mutually `d`-exclusive properties: at most
/// `d - 1` vertices change side in each direction.
pub fn xp_inductive_step(
    g: &Graph,
    v: usize,
    a_prime: &[usize],
    b_prime: &[usize],
    spec_a: &PropertySpec,
    spec_b: &PropertySpec,
    d: usize,
) -> Result<Option<Bipartition>> {
    xp_inductive_step_with_budget(g, v, a_prime, b_prime, spec_a, spec_b, d, DEFAULT_XP_BUDGET)
}

#[allow(clippy::too_many_arguments)]
pub fn xp_inductive_step_with_budget(
    g: &Graph,
    v: usize,
    a_prime: &[usize],
    b_prime: &[usize],
    spec_a: &PropertySpec,
    spec_b: &PropertySpec,
    d: usize,
    budget: u128,
) -> Result<Option<Bipartition>> {
    let side = check_sides(g, v, a_prime, b_prime)?;
    if !spec_a.contains_induced(g, a_prime) || !spec_b.contains_induced(g, b_prime) {
        return Err(Error::BadCertificate("starting partition violates a property".into()));
    }
    Ok(xp_core(g, v, &side, spec_a, spec_b, d, budget)?.map(|s| Bipartition::from_sides(g, &s)))
}

const AS: u8 = 0;
const AP: u8 = 1;
const BS: u8 = 2;
const BP: u8 = 3;

/// A constraint over local ids: movable or permanent on each side.
#[derive(Debug, Clone)]
struct Node {
    status: Vec<u8>,
    a_moves: usize,
    b_moves: usize,
    depth: usize,
}

impl Node {
    fn with(&self, u: usize, to: u8) -> Node {
        let mut c = self.clone();
        c.status[u] = to;
        match to {
            AP => c.b_moves += 1,
            _ => c.a_moves += 1,
        }
        c
    }

    fn list(&self, pred: impl Fn(u8) -> bool) -> Vec<usize> {
        (0..self.status.len()).filter(|&u| pred(self.status[u])).collect()
    }

    fn sides(&self) -> Vec<Side> {
        self.status.iter().map(|&s| if s <= AP { Side::A } else { Side::B }).collect()
    }
}

enum Out {
    Rejected,
    Children(&'static str, Vec<Node>),
    Accept,
}

fn run_tree(
    v: usize,
    side: &[Side],
    stats: &mut SearchStats,
    mut rules: impl FnMut(&Node, &mut SearchStats) -> Result<Out>,
) -> Result<Option<Vec<Side>>> {
    let root = |x: u8| {
        let status = side.iter().map(|&s| if s == Side::A { AS } else { BS }).collect::<Vec<_>>();
        let mut n = Node { status, a_moves: 0, b_moves: 0, depth: 1 };
        n.status[v] = x;
        n
    };
    let mut stack = vec![root(BP), root(AP)];
    while let Some(node) = stack.pop() {
        stats.nodes += 1;
        stats.depth(node.depth);
        match rules(&node, stats)? {
            Out::Rejected => stats.leaves += 1,
            Out::Accept => {
                stats.leaves += 1;
                stats.exhausted_leaves += 1;
                return Ok(Some(node.sides()));
            }
            Out::Children(rule, mut kids) => {
                stats.fire(rule);
                let deeper = usize::from(kids.len() > 1);
                for kid in &mut kids {
                    kid.depth = node.depth + deeper;
                }
                stack.extend(kids.into_iter().rev());
            }
        }
    }
    Ok(None)
}

/// Least occurrence of the first forbidden pattern (in list order) that
/// occurs inside `within`.
fn forbidden_occurrence(g: &Graph, spec: &PropertySpec, within: &[usize]) -> Option<Vec<usize>> {
    let pats = spec.forbidden.as_deref().unwrap_or(&[]);
    pats.iter().find_map(|p| crate::pattern::find_induced_occurrence(g, p, within))
}

/// Children that move each movable vertex of `w` to `to`, in ascending order.
fn move_each(node: &Node, w: &[usize], movable: u8, to: u8) -> Vec<Node> {
    let mut w = w.to_vec();
    w.sort_unstable();
    w.into_iter().filter(|&u| node.status[u] == movable).map(|u| node.with(u, to)).collect()
}

const RR_FSG: &str = "rr_fsg";
const RR_DOWN: &str = "rr_p3_two_permanent";
const BR_P3: &str = "br_p3_one_permanent";
const BR_FSG_A: &str = "br_fsg_a";
const BR_FSG_B: &str = "br_fsg_b";
const BR_TOO_MANY: &str = "br_too_many_clusters";

struct ClusterFsg<'s> {
    k: usize,
    s: usize,
    spec_b: &'s PropertySpec,
}

impl ClusterFsg<'_> {
    fn rules(&self, g: &Graph, node: &Node, stats: &mut SearchStats) -> Result<Out> {
        let k = self.k;
        stats.bounded("br_fsg_b_per_path", node.b_moves, (self.s - 1) * k + 1);
        stats.bounded("a_rules_per_path", node.a_moves, k + (self.s - 1) * k + 2);
        let st = &node.status;
        let ap = node.list(|s| s == AP);
        let bp = node.list(|s| s == BP);
        let ap_clusters = match cluster_decomposition(g, &ap) {
            Ok(c) if c.len() <= k => c,
            _ => {
                stats.fire(RR_FSG);
                return Ok(Out::Rejected);
            }
        };
        if !self.spec_b.contains_induced(g, &bp) {
            stats.fire(RR_FSG);
            return Ok(Out::Rejected);
        }
        let mut comp = vec![usize::MAX; g.n()];
        for (i, c) in ap_clusters.iter().enumerate() {
            for &x in c {
                comp[x] = i;
            }
        }
        // A* vertex in a P3 with two A_P vertices.
        for u in (0..g.n()).filter(|&u| st[u] == AS) {
            let touched: Vec<usize> = g.neighbors(u).iter().filter(|&&x| st[x] == AP).map(|&x| comp[x]).collect();
            if let Some(&c0) = touched.first() {
                if touched.iter().any(|&c| c != c0) || touched.len() < ap_clusters[c0].len() {
                    return Ok(Out::Children(RR_DOWN, vec![node.with(u, BP)]));
                }
            }
        }
        // P3 with one A_P vertex and two A* vertices.
        for &x in &ap {
            let l: Vec<usize> = g.neighbors(x).iter().copied().filter(|&u| st[u] == AS).collect();
            let centered = l.iter().enumerate().find_map(|(i, &u)| l[i + 1..].iter().find(|&&w| !g.has_edge(u, w)).map(|&w| (u, w)));
            let pair = centered.or_else(|| {
                l.iter().find_map(|&u| {
                    g.neighbors(u).iter().find(|&&w| st[w] == AS && w != x && !g.has_edge(x, w)).map(|&w| (u, w))
                })
            });
            if let Some((u, w)) = pair {
                return Ok(Out::Children(BR_P3, vec![node.with(u, BP), node.with(w, BP)]));
            }
        }
        let bset = node.list(|s| s >= BS);
        if let Some(w) = forbidden_occurrence(g, self.spec_b, &bset) {
            let kids = move_each(node, &w, BS, AP);
            return Ok(if kids.is_empty() { Out::Rejected } else { Out::Children(BR_FSG_B, kids) });
        }
        let aset = node.list(|s| s <= AP);
        let clusters = cluster_decomposition(g, &aset)
            .map_err(|_| Error::SpecMismatch("side A is not a cluster graph at a reduced constraint".into()))?;
        if clusters.len() > k {
            let u = clusters
                .iter()
                .find(|c| c.iter().all(|&y| st[y] == AS))
                .map(|c| c[0])
                .ok_or_else(|| Error::SpecMismatch("every cluster holds a permanent vertex".into()))?;
            return Ok(Out::Children(BR_TOO_MANY, vec![node.with(u, AP).undo_b_move(), node.with(u, BP)]));
        }
        if !self.spec_b.contains_induced(g, &bset) {
            return Err(Error::SpecMismatch(format!("{} has no listed forbidden subgraph but fails membership", self.spec_b.name)));
        }
        Ok(Out::Accept)
    }
}

impl Node {
    /// Moving an A* vertex to A_P is an A-side rule, not a B-side one.
    fn undo_b_move(mut self) -> Node {
        self.b_moves -= 1;
        self.a_moves += 1;
        self
    }
}

struct SmallFsg<'s> {
    spec_a: &'s PropertySpec,
    spec_b: &'s PropertySpec,
    cap: usize,
}

impl SmallFsg<'_> {
    fn rules(&self, g: &Graph, node: &Node, stats: &mut SearchStats) -> Result<Out> {
        stats.bounded("br_fsg_a_per_path", node.a_moves, self.cap);
        stats.bounded("br_fsg_b_per_path", node.b_moves, self.cap);
        let ap = node.list(|s| s == AP);
        let bp = node.list(|s| s == BP);
        if !self.spec_a.contains_induced(g, &ap) || !self.spec_b.contains_induced(g, &bp) {
            stats.fire(RR_FSG);
            return Ok(Out::Rejected);
        }
        let aset = node.list(|s| s <= AP);
        if let Some(w) = forbidden_occurrence(g, self.spec_a, &aset) {
            let kids = move_each(node, &w, AS, BP);
            return Ok(if kids.is_empty() { Out::Rejected } else { Out::Children(BR_FSG_A, kids) });
        }
        let bset = node.list(|s| s >= BS);
        if let Some(w) = forbidden_occurrence(g, self.spec_b, &bset) {
            let kids = move_each(node, &w, BS, AP);
            return Ok(if kids.is_empty() { Out::Rejected } else { Out::Children(BR_FSG_B, kids) });
        }
        if !self.spec_a.contains_induced(g, &aset) || !self.spec_b.contains_induced(g, &bset) {
            return Err(Error::SpecMismatch("forbidden list and membership predicate disagree".into()));
        }
        Ok(Out::Accept)
    }
}

enum Kind<'s> {
    Exclusive { spec_a: &'s PropertySpec, spec_b: &'s PropertySpec, d: usize, budget: u128 },
    ClusterFsg(ClusterFsg<'s>),
    SmallFsg(SmallFsg<'s>),
}

struct GenericRecognizer<'s> {
    kind: Kind<'s>,
    stats: SearchStats,
}

impl InductiveRecognizer for GenericRecognizer<'_> {
    /// Side of every base vertex; only present vertices are meaningful.
    type Certificate = Vec<Side>;

    fn empty_certificate(&mut self, g: &Graph) -> Vec<Side> {
        vec![Side::A; g.n()]
    }

    fn step(&mut self, prefix: &PrefixGraph<'_>, v: usize, mut prev: Vec<Side>, _k: usize) -> Result<Option<Vec<Side>>> {
        self.stats.steps += 1;
        let h = prefix.to_graph();
        let ids = prefix.vertices();
        let local_v = ids.len() - 1;
        debug_assert_eq!(ids[local_v], v);
        let side: Vec<Side> = ids.iter().map(|&u| prev[u]).collect();
        let stats = &mut self.stats;
        let found = match &self.kind {
            Kind::Exclusive { spec_a, spec_b, d, budget } => xp_core(&h, local_v, &side, spec_a, spec_b, *d, *budget)?,
            Kind::ClusterFsg(r) => run_tree(local_v, &side, stats, |n, st| r.rules(&h, n, st))?,
            Kind::SmallFsg(r) => run_tree(local_v, &side, stats, |n, st| r.rules(&h, n, st))?,
        };
        Ok(found.map(|s| {
            for (i, &u) in ids.iter().enumerate() {
                prev[u] = s[i];
            }
            prev
        }))
    }
}

fn drive(g: &Graph, kind: Kind<'_>) -> Result<(Option<Bipartition>, SearchStats)> {
    let mut rec = GenericRecognizer { kind, stats: SearchStats::default() };
    let run = recognize_inductively(g, &mut rec, 0, OrderMode::Input)?;
    Ok((run.certificate.map(|s| Bipartition::from_sides(g, &s)), rec.stats))
}

/// Inductive recognition for mutually `d`-exclusive properties.
pub fn recognize_exclusive(g: &Graph, spec_a: &PropertySpec, spec_b: &PropertySpec, d: usize) -> Result<Option<Bipartition>> {
    recognize_exclusive_with_budget(g, spec_a, spec_b, d, DEFAULT_XP_BUDGET)
}

pub fn recognize_exclusive_with_budget(
    g: &Graph,
    spec_a: &PropertySpec,
    spec_b: &PropertySpec,
    d: usize,
    budget: u128,
) -> Result<Option<Bipartition>> {
    Ok(drive(g, Kind::Exclusive { spec_a, spec_b, d, budget })?.0)
}

/// Side A a cluster graph with at most `k` clusters, side B given by a
/// forbidden list that contains a clique.
pub fn recognize_cluster_vs_fsg(g: &Graph, k: usize, spec_b: &PropertySpec) -> Result<Option<Bipartition>> {
    Ok(recognize_cluster_vs_fsg_stats(g, k, spec_b)?.0)
}

pub fn recognize_cluster_vs_fsg_stats(g: &Graph, k: usize, spec_b: &PropertySpec) -> Result<(Option<Bipartition>, SearchStats)> {
    let s = spec_b
        .forbidden
        .as_ref()
        .and_then(|f| f.iter().filter(|p| p.is_complete()).map(|p| p.order()).min())
        .ok_or_else(|| Error::SpecMismatch(format!("{} lists no forbidden clique", spec_b.name)))?;
    drive(g, Kind::ClusterFsg(ClusterFsg { k, s: s.max(1), spec_b }))
}

/// Both properties given by forbidden lists, side A excluding an edgeless
/// graph and side B a clique.
pub fn recognize_small_fsg(g: &Graph, spec_a: &PropertySpec, spec_b: &PropertySpec) -> Result<Option<Bipartition>> {
    Ok(recognize_small_fsg_stats(g, spec_a, spec_b)?.0)
}

pub fn recognize_small_fsg_stats(g: &Graph, spec_a: &PropertySpec, spec_b: &PropertySpec) -> Result<(Option<Bipartition>, SearchStats)> {
    if spec_a.forbidden.is_none() || spec_b.forbidden.is_none() {
        return Err(Error::SpecMismatch("both properties need a forbidden list".into()));
    }
    let (Some(ca), Some(cb)) = (spec_a.excluded_edgeless_order, spec_b.excluded_clique_order) else {
        return Err(Error::SpecMismatch("side A must exclude an edgeless graph and side B a clique".into()));
    };
    let cap = ramsey_upper_bound(ca as u64, cb as u64)? as usize;
    drive(g, Kind::SmallFsg(SmallFsg { spec_a, spec_b, cap }))
}

/// Branches on forbidden occurrences in side B, moving vertices to a side A
/// of at most `k` vertices.
pub fn recognize_bounded_a(g: &Graph, k: usize, spec_a: &PropertySpec, spec_b: &PropertySpec) -> Result<Option<Bipartition>> {
    if spec_b.forbidden.is_none() {
        return Err(Error::SpecMismatch(format!("{} has no forbidden list", spec_b.name)));
    }
    let n = g.n();
    // Breadth first, so the returned side A is as small as possible.
    let mut queue = VecDeque::from([vec![false; n]]);
    while let Some(in_a) = queue.pop_front() {
        let a: Vec<usize> = (0..n).filter(|&u| in_a[u]).collect();
        if a.len() > k || !spec_a.contains_induced(g, &a) {
            continue;
        }
        let b: Vec<usize> = (0..n).filter(|&u| !in_a[u]).collect();
        match forbidden_occurrence(g, spec_b, &b) {
            None => {
                if !spec_b.contains_induced(g, &b) {
                    return Err(Error::SpecMismatch(format!("{} fails membership with no forbidden occurrence", spec_b.name)));
                }
                let side: Vec<Side> = in_a.iter().map(|&x| if x { Side::A } else { Side::B }).collect();
                return Ok(Some(Bipartition::from_sides(g, &side)));
            }
            Some(w) => {
                if a.len() < k {
                    for &u in &w {
                        let mut next = in_a.clone();
                        next[u] = true;
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{brute_min_vertex_cover, brute_monopolar, brute_pi_partition};
    use crate::parallel::labeled_graph;

    #[test]
    fn ramsey_values() {
        assert_eq!(ramsey_upper_bound(3, 3).unwrap(), 6);
        assert_eq!(ramsey_upper_bound(7, 1).unwrap(), 1);
        assert_eq!(ramsey_upper_bound(2, 4).unwrap(), 4);
        assert!(matches!(ramsey_upper_bound(40, 40), Err(Error::BoundTooLarge { .. })));
        assert!(ramsey_upper_bound(0, 3).is_err());
    }

    #[test]
    fn xp_examples() {
        let (cl, ed) = (PropertySpec::clique(), PropertySpec::edgeless());
        let p3 = Graph::path(3);
        let p = xp_inductive_step(&p3, 2, &[0, 1], &[], &cl, &ed, 2).unwrap().unwrap();
        assert_eq!((p.a_vertices(), p.b_vertices()), (vec![0, 1], vec![2]));
        let k2 = Graph::path(2);
        let p = xp_inductive_step(&k2, 1, &[0], &[], &cl, &ed, 1).unwrap().unwrap();
        assert_eq!(p.a_vertices(), vec![0, 1]);
        let c5 = Graph::cycle(5);
        let start = brute_pi_partition(&c5.delete_vertex(4), &cl, &ed).unwrap().unwrap();
        let got = xp_inductive_step(&c5, 4, &start.a_vertices(), &start.b_vertices(), &cl, &ed, 2).unwrap();
        assert!(got.is_none());
    }

    #[test]
    fn budget_is_enforced() {
        let g = Graph::empty(30);
        let all: Vec<usize> = (1..30).collect();
        let err = xp_inductive_step_with_budget(&g, 0, &[], &all, &PropertySpec::any(), &PropertySpec::any(), 4, 100);
        assert!(matches!(err, Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn exclusive_examples() {
        let tf = PropertySpec::triangle_free();
        let cl = PropertySpec::clique();
        let d = ramsey_upper_bound(3, 2).unwrap() as usize;
        assert_eq!(d, 3);
        assert!(recognize_exclusive(&Graph::complete(4), &tf, &cl, d).unwrap().is_some());
        let e = recognize_exclusive(&Graph::empty(0), &cl, &PropertySpec::edgeless(), 2).unwrap().unwrap();
        assert_eq!(e.n(), 0);
    }

    #[test]
    fn split_agrees_on_five_vertices() {
        let (cl, ed) = (PropertySpec::clique(), PropertySpec::edgeless());
        for code in 0..1u64 << 10 {
            let g = labeled_graph(5, code);
            let want = brute_pi_partition(&g, &cl, &ed).unwrap().is_some();
            assert_eq!(recognize_exclusive(&g, &cl, &ed, 2).unwrap().is_some(), want);
            assert_eq!(recognize_small_fsg(&g, &cl, &ed).unwrap().is_some(), want);
        }
    }

    #[test]
    fn cluster_vs_fsg_examples() {
        let ed = PropertySpec::edgeless();
        assert!(recognize_cluster_vs_fsg(&Graph::cycle(4), 1, &ed).unwrap().is_none());
        let two_k4 = Graph::complete(4).disjoint_union(&Graph::complete(4));
        let p = recognize_cluster_vs_fsg(&two_k4, 2, &PropertySpec::triangle_free()).unwrap().unwrap();
        assert!(p.b_vertices().len() <= 4);
        assert!(matches!(recognize_cluster_vs_fsg(&two_k4, 2, &PropertySpec::any()), Err(Error::SpecMismatch(_))));
        for code in 0..1u64 << 10 {
            let g = labeled_graph(5, code);
            for k in 0..3 {
                let want = brute_monopolar(&g, k).unwrap().is_some();
                assert_eq!(recognize_cluster_vs_fsg(&g, k, &ed).unwrap().is_some(), want, "{g:?} k={k}");
            }
        }
    }

    #[test]
    fn small_fsg_needs_orders() {
        let err = recognize_small_fsg(&Graph::complete(1), &PropertySpec::triangle_free(), &PropertySpec::edgeless());
        assert!(matches!(err, Err(Error::SpecMismatch(_))));
        assert!(recognize_small_fsg(&Graph::cycle(5), &PropertySpec::clique(), &PropertySpec::edgeless()).unwrap().is_none());
    }

    #[test]
    fn bounded_a_is_vertex_cover() {
        let (any, ed) = (PropertySpec::any(), PropertySpec::edgeless());
        let p = recognize_bounded_a(&Graph::path(3), 2, &any, &ed).unwrap().unwrap();
        assert_eq!(p.a_vertices(), vec![1]);
        assert!(recognize_bounded_a(&Graph::complete(3), 1, &any, &ed).unwrap().is_none());
        assert!(recognize_bounded_a(&Graph::path(2), 0, &any, &ed).unwrap().is_none());
        for code in (0..1u64 << 10).step_by(7) {
            let g = labeled_graph(5, code);
            let vc = brute_min_vertex_cover(&g).unwrap();
            for k in 0..4 {
                assert_eq!(recognize_bounded_a(&g, k, &any, &ed).unwrap().is_some(), vc <= k);
            }
        }
    }
}
