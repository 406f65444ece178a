//! 2-subcoloring with at most `k` clusters counted over both sides.
//!
//! Branching fixes clusters for the whole graph until every unassigned
//! vertex has exactly one candidate cluster on each side; a 2-SAT formula
//! then decides the sides of the rest.

use itertools::Itertools;

use crate::certificate::{verify_certificate, Bipartition, BoundMode, Problem, Side};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::stats::SearchStats;
use crate::twosat::{solve_twosat, Lit, TwoSatFormula};

const NONE: usize = usize::MAX;

pub const RR_TOO_MANY: &str = "rr_total_too_many";
pub const RR_CONFLICT: &str = "rr_total_conflict";
pub const BR_ISOLATED: &str = "br_total_unattached";
pub const BR_NONEDGE: &str = "br_total_nonedge";
pub const BR_EDGE: &str = "br_total_edge";
pub const BR_DUMMIES: &str = "br_total_dummies";

/// Clusters on both sides plus the unassigned remainder. Dummy clusters
/// stand for a synthetic vertex adjacent to a fixed set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalConstraint {
    side: Vec<Side>,
    /// Cluster sizes, a dummy counting as one member.
    size: Vec<usize>,
    dummy: Vec<bool>,
    members: Vec<Vec<usize>>,
    /// `cnt[c][v]`: neighbors of `v` in cluster `c`.
    cnt: Vec<Vec<u32>>,
    cluster_of: Vec<usize>,
    remainder: usize,
    pub dummy_rounds: usize,
    pub depth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TotalOutcome {
    Rejected,
    Reduced(TotalConstraint),
    Branch(Vec<TotalConstraint>),
    Exhausted,
}

enum Step {
    Rejected,
    Reduced,
    Branch(&'static str, Vec<TotalConstraint>),
    Exhausted,
}

/// Candidate clusters of a remainder vertex on each side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Class {
    a: usize,
    b: usize,
}

impl TotalConstraint {
    /// Everything unassigned.
    pub fn root(g: &Graph) -> Self {
        TotalConstraint {
            side: Vec::new(),
            size: Vec::new(),
            dummy: Vec::new(),
            members: Vec::new(),
            cnt: Vec::new(),
            cluster_of: vec![NONE; g.n()],
            remainder: g.n(),
            dummy_rounds: 0,
            depth: 1,
        }
    }

    /// Starts from given clusters, which must form a valid partial
    /// 2-subcoloring.
    pub fn from_clusters(g: &Graph, a_clusters: &[Vec<usize>], b_clusters: &[Vec<usize>]) -> Result<Self> {
        let mut c = Self::root(g);
        for (side, list) in [(Side::A, a_clusters), (Side::B, b_clusters)] {
            for cl in list {
                let Some((&first, rest)) = cl.split_first() else { continue };
                if first >= g.n() || c.cluster_of[first] != NONE {
                    return Err(Error::BadCertificate(format!("vertex {first} is out of range or repeated")));
                }
                c.open(g, side, first);
                let id = c.side.len() - 1;
                for &u in rest {
                    if u >= g.n() || c.cluster_of[u] != NONE {
                        return Err(Error::BadCertificate(format!("vertex {u} is out of range or repeated")));
                    }
                    c.add(g, u, id);
                }
            }
        }
        let mut p = vec![Side::B; g.n()];
        for (id, ms) in c.members.iter().enumerate() {
            for &u in ms {
                p[u] = c.side[id];
            }
        }
        let part = Bipartition::from_clusters(g.n(), c.real_clusters(Side::A), c.real_clusters(Side::B));
        let assigned: Vec<usize> = (0..g.n()).filter(|&u| c.cluster_of[u] != NONE).collect();
        let h = g.induced_subgraph(&assigned);
        let mut index = vec![NONE; g.n()];
        for (i, &u) in assigned.iter().enumerate() {
            index[u] = i;
        }
        let local = |cs: &[Vec<usize>]| -> Vec<Vec<usize>> { cs.iter().map(|cl| cl.iter().map(|&u| index[u]).collect()).collect() };
        let q = Bipartition::from_clusters(assigned.len(), local(part.a_clusters()), local(part.b_clusters()));
        if !verify_certificate(&h, &q, Problem::Subcoloring, usize::MAX, BoundMode::Total) {
            return Err(Error::BadCertificate("given clusters are not the clusters of a 2-subcoloring".into()));
        }
        Ok(c)
    }

    pub fn k1(&self) -> usize {
        self.side.iter().filter(|&&s| s == Side::A).count()
    }

    pub fn k2(&self) -> usize {
        self.side.len() - self.k1()
    }

    pub fn remainder(&self) -> Vec<usize> {
        (0..self.cluster_of.len()).filter(|&v| self.cluster_of[v] == NONE).collect()
    }

    pub fn dummy_count(&self) -> usize {
        self.dummy.iter().filter(|&&d| d).count()
    }

    /// Real members of the clusters on `side`, including clusters that
    /// hold only a dummy (as empty lists).
    pub fn clusters(&self, side: Side) -> Vec<Vec<usize>> {
        (0..self.side.len()).filter(|&c| self.side[c] == side).map(|c| self.members[c].clone()).collect()
    }

    fn real_clusters(&self, side: Side) -> Vec<Vec<usize>> {
        self.clusters(side).into_iter().filter(|c| !c.is_empty()).collect()
    }

    fn new_cluster(&mut self, n: usize, side: Side, dummy: bool) -> usize {
        self.side.push(side);
        self.size.push(0);
        self.dummy.push(dummy);
        self.members.push(Vec::new());
        self.cnt.push(vec![0; n]);
        self.side.len() - 1
    }

    fn open(&mut self, g: &Graph, side: Side, v: usize) {
        let c = self.new_cluster(g.n(), side, false);
        self.add(g, v, c);
    }

    fn open_dummy(&mut self, g: &Graph, side: Side, adjacent: &[usize]) {
        let c = self.new_cluster(g.n(), side, true);
        self.size[c] = 1;
        for &x in adjacent {
            self.cnt[c][x] = 1;
        }
    }

    fn add(&mut self, g: &Graph, v: usize, c: usize) {
        self.cluster_of[v] = c;
        self.members[c].push(v);
        self.size[c] += 1;
        self.remainder -= 1;
        for &y in g.neighbors(v) {
            self.cnt[c][y] += 1;
        }
    }

    /// Whether `v` cannot join `side`: it sees two clusters there or only
    /// part of one. Also returns the single fully adjacent cluster, if any.
    fn conflict(&self, v: usize, side: Side) -> (bool, Option<usize>) {
        let mut seen = None;
        for c in 0..self.side.len() {
            if self.side[c] != side || self.cnt[c][v] == 0 {
                continue;
            }
            if seen.is_some() || (self.cnt[c][v] as usize) < self.size[c] {
                return (true, None);
            }
            seen = Some(c);
        }
        (false, seen)
    }

    fn child(&self) -> TotalConstraint {
        let mut c = self.clone();
        c.depth += 1;
        c
    }

    fn classify(&self) -> Vec<(usize, Class)> {
        self.remainder()
            .into_iter()
            .map(|v| {
                let a = self.conflict(v, Side::A).1.unwrap_or(NONE);
                let b = self.conflict(v, Side::B).1.unwrap_or(NONE);
                (v, Class { a, b })
            })
            .collect()
    }

    fn step(&mut self, g: &Graph, k: usize) -> Step {
        if self.side.len() > k {
            return Step::Rejected;
        }
        let rest = self.remainder();
        for &v in &rest {
            for (here, there) in [(Side::A, Side::B), (Side::B, Side::A)] {
                if !self.conflict(v, here).0 {
                    continue;
                }
                match self.conflict(v, there) {
                    (true, _) => return Step::Rejected,
                    (false, None) => self.open(g, there, v),
                    (false, Some(c)) => self.add(g, v, c),
                }
                return Step::Reduced;
            }
        }
        if let Some(&v) = rest.iter().find(|&&v| (0..self.side.len()).all(|c| self.cnt[c][v] == 0)) {
            let mut in_a = self.child();
            in_a.open(g, Side::A, v);
            let mut in_b = self.child();
            in_b.open(g, Side::B, v);
            return Step::Branch(BR_ISOLATED, vec![in_a, in_b]);
        }
        let classes = self.classify();
        // One-sided classes: N_{A_i} has b = NONE, N_{B_j} has a = NONE.
        let one_sided = |side: Side| -> Vec<(usize, usize)> {
            classes
                .iter()
                .filter_map(|&(v, c)| match side {
                    Side::A if c.b == NONE => Some((v, c.a)),
                    Side::B if c.a == NONE => Some((v, c.b)),
                    _ => None,
                })
                .collect()
        };
        let (na, nb) = (one_sided(Side::A), one_sided(Side::B));
        let opposite = |s: Side| if s == Side::A { Side::B } else { Side::A };
        for (side, list) in [(Side::A, &na), (Side::B, &nb)] {
            let pair = list
                .iter()
                .tuple_combinations()
                .find(|(&(u, cu), &(v, cv))| cu == cv && !g.has_edge(u, v));
            if let Some((&(u, _), &(v, _))) = pair {
                return Step::Branch(BR_NONEDGE, self.open_each(g, opposite(side), [u, v]));
            }
        }
        for (side, list) in [(Side::A, &na), (Side::B, &nb)] {
            let pair = list
                .iter()
                .tuple_combinations()
                .find(|(&(u, cu), &(v, cv))| cu != cv && g.has_edge(u, v));
            if let Some((&(u, _), &(v, _))) = pair {
                return Step::Branch(BR_EDGE, self.open_each(g, opposite(side), [u, v]));
            }
        }
        if na.is_empty() && nb.is_empty() {
            return Step::Exhausted;
        }
        // Group the one-sided classes by cluster, A clusters first.
        let mut groups: Vec<(Side, usize, Vec<usize>)> = Vec::new();
        for (side, list) in [(Side::A, &na), (Side::B, &nb)] {
            for (c, vs) in &list.iter().sorted_by_key(|&&(_, c)| c).chunk_by(|&&(_, c)| c) {
                groups.push((side, c, vs.map(|&(v, _)| v).collect()));
            }
        }
        let budget = k.saturating_sub(self.side.len());
        let mut kids = Vec::new();
        for size in 0..=budget.min(groups.len()) {
            for chosen in (0..groups.len()).combinations(size) {
                let mut c = self.child();
                c.dummy_rounds += 1;
                for (gi, (side, cl, vs)) in groups.iter().enumerate() {
                    if chosen.contains(&gi) {
                        c.open_dummy(g, opposite(*side), vs);
                    } else {
                        for &v in vs {
                            c.add(g, v, *cl);
                        }
                    }
                }
                kids.push(c);
            }
        }
        Step::Branch(BR_DUMMIES, kids)
    }

    fn open_each(&self, g: &Graph, side: Side, vs: [usize; 2]) -> Vec<TotalConstraint> {
        vs.iter()
            .map(|&v| {
                let mut c = self.child();
                c.open(g, side, v);
                c
            })
            .collect()
    }
}

/// Applies the first applicable rule.
pub fn apply_total_rules(g: &Graph, c: &TotalConstraint, k: usize) -> TotalOutcome {
    let mut next = c.clone();
    match next.step(g, k) {
        Step::Rejected => TotalOutcome::Rejected,
        Step::Reduced => TotalOutcome::Reduced(next),
        Step::Branch(_, kids) => TotalOutcome::Branch(kids),
        Step::Exhausted => TotalOutcome::Exhausted,
    }
}

/// One variable per remainder vertex in ascending id order; true puts the
/// vertex on side A.
pub fn build_twosat(g: &Graph, c: &TotalConstraint) -> Result<TwoSatFormula> {
    let classes = c.classify();
    if let Some(&(v, _)) = classes.iter().find(|(_, cl)| cl.a == NONE || cl.b == NONE) {
        return Err(Error::UnclassifiedRemainder(v));
    }
    let r = classes.len();
    let mut index = vec![NONE; g.n()];
    for (i, &(v, _)) in classes.iter().enumerate() {
        index[v] = i;
    }
    let words = r.div_ceil(64);
    let mut adj = vec![0u64; r * words];
    for (i, &(v, _)) in classes.iter().enumerate() {
        for &u in g.neighbors(v) {
            if index[u] != NONE {
                let j = index[u];
                adj[i * words + j / 64] |= 1 << (j % 64);
            }
        }
    }
    let mut f = TwoSatFormula::new(r);
    for i in 0..r {
        for j in i + 1..r {
            let edge = adj[i * words + j / 64] >> (j % 64) & 1 == 1;
            let (ci, cj) = (classes[i].1, classes[j].1);
            if edge != (ci.a == cj.a) {
                f.add(Lit::neg(i), Lit::neg(j));
            }
            if edge != (ci.b == cj.b) {
                f.add(Lit::pos(i), Lit::pos(j));
            }
        }
    }
    Ok(f)
}

/// Solves the formula of an exhausted constraint and drops dummies.
fn finish(g: &Graph, c: &TotalConstraint) -> Result<Option<Bipartition>> {
    let f = build_twosat(g, c)?;
    let Some(x) = solve_twosat(&f) else { return Ok(None) };
    let mut members = c.members.clone();
    for (i, (v, cl)) in c.classify().into_iter().enumerate() {
        members[if x[i] { cl.a } else { cl.b }].push(v);
    }
    let pick = |s: Side| -> Vec<Vec<usize>> {
        (0..members.len()).filter(|&i| c.side[i] == s).map(|i| members[i].clone()).collect()
    };
    Ok(Some(Bipartition::from_clusters(g.n(), pick(Side::A), pick(Side::B))))
}

pub fn recognize_subcoloring_total(g: &Graph, k: usize) -> Option<Bipartition> {
    recognize_subcoloring_total_stats(g, k).0
}

pub fn recognize_subcoloring_total_stats(g: &Graph, k: usize) -> (Option<Bipartition>, SearchStats) {
    let mut stats = SearchStats { steps: 1, ..SearchStats::default() };
    let mut stack = vec![TotalConstraint::root(g)];
    while let Some(mut c) = stack.pop() {
        stats.nodes += 1;
        loop {
            stats.depth(c.depth);
            stats.bounded("br_total_dummies_per_path", c.dummy_rounds, 1);
            match c.step(g, k) {
                Step::Rejected => {
                    stats.leaves += 1;
                    break;
                }
                Step::Reduced => stats.fire(RR_CONFLICT),
                Step::Branch(rule, kids) => {
                    stats.fire(rule);
                    stack.extend(kids.into_iter().rev());
                    break;
                }
                Step::Exhausted => {
                    stats.leaves += 1;
                    stats.exhausted_leaves += 1;
                    match finish(g, &c) {
                        Ok(Some(p)) => {
                            debug_assert!(verify_certificate(g, &p, Problem::Subcoloring, k, BoundMode::Total));
                            return (Some(p), stats);
                        }
                        Ok(None) => {}
                        Err(e) => stats.violate(format!("exhausted leaf: {e}")),
                    }
                    break;
                }
            }
        }
    }
    (None, stats)
}
