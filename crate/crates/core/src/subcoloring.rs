//! 2-subcoloring with at most `k` clusters on side A.
//!
//! A constraint assigns every vertex to a group: groups `0..k` are the A
//! groups, groups `k..` the B groups. Nonpermanent vertices still sit in
//! the cluster they had in `(A', B')`; permanent ones have been placed by
//! the search. Rules fire only when a vertex becomes permanent, so each
//! placement is followed by an `O(k · deg)` scan of its surroundings.

use std::collections::VecDeque;

use crate::certificate::{verify_certificate, Bipartition, BoundMode, Problem};
use crate::cluster::cluster_decomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::inductive::{recognize_inductively, InductiveRecognizer, OrderMode, PrefixGraph};
use crate::stats::SearchStats;

const NONE: usize = usize::MAX;

pub const RR_PER_VERTS: &str = "rr_per_verts";
pub const RR_MAKE_PER: &str = "rr_make_per_vert";
pub const SW_FORCED: &str = "switch_forced";
pub const SW_A_TO_B: &str = "switch_branch_a_to_b";
pub const SW_B_TO_A: &str = "switch_branch_b_to_a";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupConstraint {
    k: usize,
    /// Group of each vertex, `NONE` for vertices outside the prefix.
    grp: Vec<usize>,
    perm: Vec<bool>,
    members: Vec<Vec<usize>>,
    pos: Vec<usize>,
    perm_count: Vec<usize>,
    /// For nonpermanent A vertices: `(B group, neighbors in it)`.
    b_nbrs: Vec<Vec<(usize, usize)>>,
    make_per: Vec<usize>,
    switches: VecDeque<usize>,
    rejected: bool,
    /// Branching switches on this path, by direction.
    pub a_to_b: usize,
    pub b_to_a: usize,
    pub depth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubOutcome {
    Rejected,
    Reduced(GroupConstraint),
    Branch(Vec<GroupConstraint>),
    Exhausted,
}

enum Step {
    Rejected,
    Reduced(&'static str),
    Branch(&'static str, Vec<GroupConstraint>),
    Exhausted,
}

impl GroupConstraint {
    /// A constraint with the given groups, every vertex of `g` in exactly
    /// one of them. `permanent` vertices are fixed in order, each one
    /// queueing the switches it forces.
    pub fn new(g: &Graph, k: usize, a_groups: &[Vec<usize>], b_groups: &[Vec<usize>], permanent: &[usize]) -> Result<Self> {
        if a_groups.len() > k {
            return Err(Error::BadCertificate(format!("{} A groups for k = {k}", a_groups.len())));
        }
        let mut members = a_groups.to_vec();
        members.resize(k, Vec::new());
        members.extend(b_groups.iter().cloned());
        members.push(Vec::new());
        let mut seen = vec![false; g.n()];
        for &u in members.iter().flatten() {
            if u >= g.n() || std::mem::replace(&mut seen[u], true) {
                return Err(Error::BadCertificate(format!("vertex {u} is out of range or repeated")));
            }
        }
        if let Some(u) = seen.iter().position(|&x| !x) {
            return Err(Error::BadCertificate(format!("vertex {u} is in no group")));
        }
        let pg = PrefixGraph::full(g);
        let mut c = Self::with_members(&pg, k, members);
        for &u in permanent {
            let group = c.grp[u];
            c.place(&pg, u, group);
        }
        Ok(c)
    }

    fn with_members(pg: &PrefixGraph<'_>, k: usize, members: Vec<Vec<usize>>) -> Self {
        let n = pg.base().n();
        let mut grp = vec![NONE; n];
        let mut pos = vec![0; n];
        for (g, ms) in members.iter().enumerate() {
            for (p, &u) in ms.iter().enumerate() {
                grp[u] = g;
                pos[u] = p;
            }
        }
        let mut b_nbrs = vec![Vec::new(); n];
        let mut make_per = Vec::new();
        for ms in &members[..k] {
            for &y in ms {
                let list: &mut Vec<(usize, usize)> = &mut b_nbrs[y];
                for &z in pg.neighbors(y) {
                    if grp[z] >= k && grp[z] != NONE {
                        match list.iter_mut().find(|e| e.0 == grp[z]) {
                            Some(e) => e.1 += 1,
                            None => list.push((grp[z], 1)),
                        }
                    }
                }
                if list.len() > k + 1 {
                    make_per.push(y);
                }
            }
        }
        GroupConstraint {
            k,
            perm_count: vec![0; members.len()],
            grp,
            perm: vec![false; n],
            members,
            pos,
            b_nbrs,
            make_per,
            switches: VecDeque::new(),
            rejected: false,
            a_to_b: 0,
            b_to_a: 0,
            depth: 1,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_a_group(&self, group: usize) -> bool {
        group < self.k
    }

    pub fn group_of(&self, v: usize) -> usize {
        self.grp[v]
    }

    pub fn is_permanent(&self, v: usize) -> bool {
        self.perm[v]
    }

    pub fn a_groups(&self) -> &[Vec<usize>] {
        &self.members[..self.k]
    }

    pub fn b_groups(&self) -> &[Vec<usize>] {
        &self.members[self.k..]
    }

    pub fn a_perm(&self) -> Vec<usize> {
        self.perm_in(|g| g < self.k)
    }

    pub fn b_perm(&self) -> Vec<usize> {
        self.perm_in(|g| g >= self.k)
    }

    fn perm_in(&self, pick: impl Fn(usize) -> bool) -> Vec<usize> {
        (0..self.grp.len()).filter(|&v| self.perm[v] && pick(self.grp[v])).collect()
    }

    fn same_side(&self, g1: usize, g2: usize) -> bool {
        (g1 < self.k) == (g2 < self.k)
    }

    fn detach(&mut self, u: usize) {
        let g = self.grp[u];
        let p = self.pos[u];
        self.members[g].swap_remove(p);
        if let Some(&w) = self.members[g].get(p) {
            self.pos[w] = p;
        }
    }

    fn attach(&mut self, u: usize, g: usize) {
        self.grp[u] = g;
        self.pos[u] = self.members[g].len();
        self.members[g].push(u);
    }

    fn empty_b_group(&mut self) -> usize {
        match (self.k..self.members.len()).find(|&g| self.members[g].is_empty()) {
            Some(g) => g,
            None => {
                self.members.push(Vec::new());
                self.perm_count.push(0);
                self.members.len() - 1
            }
        }
    }

    fn bump(&mut self, y: usize, group: usize, delta: isize) {
        let list = &mut self.b_nbrs[y];
        match list.iter().position(|&(g, _)| g == group) {
            Some(i) => {
                let c = list[i].1 as isize + delta;
                if c <= 0 {
                    list.swap_remove(i);
                } else {
                    list[i].1 = c as usize;
                }
            }
            None if delta > 0 => list.push((group, delta as usize)),
            None => {}
        }
        if self.b_nbrs[y].len() > self.k + 1 {
            self.make_per.push(y);
        }
    }

    /// Makes `u` permanent in `group`, then looks for rules that became
    /// applicable because of it.
    fn place(&mut self, pg: &PrefixGraph<'_>, u: usize, group: usize) {
        let from = self.grp[u];
        if from != group {
            if from != NONE {
                self.detach(u);
            }
            self.attach(u, group);
        }
        self.perm[u] = true;
        self.perm_count[group] += 1;
        self.b_nbrs[u].clear();
        let to_b = group >= self.k;
        let from_b = from != NONE && from >= self.k;
        if from != group && (to_b || from_b) {
            for &y in pg.neighbors(u) {
                if self.perm[y] || self.grp[y] >= self.k {
                    continue;
                }
                if from_b {
                    self.bump(y, from, -1);
                }
                if to_b {
                    self.bump(y, group, 1);
                }
            }
        }
        // Permanent vertices of one group form a clique and have no edges
        // to permanent vertices of other groups on the same side.
        let mut inside = 0;
        for &y in pg.neighbors(u) {
            if !self.perm[y] {
                continue;
            }
            if self.grp[y] == group {
                inside += 1;
            } else if self.same_side(self.grp[y], group) {
                self.rejected = true;
                return;
            }
        }
        if inside + 1 != self.perm_count[group] {
            self.rejected = true;
            return;
        }
        // Nonpermanent group mates that miss `u`.
        for &w in &self.members[group] {
            if !self.perm[w] && !pg.has_edge(u, w) {
                self.switches.push_back(w);
            }
        }
        // Nonpermanent same-side neighbors in other groups.
        for &w in pg.neighbors(u) {
            if !self.perm[w] && self.grp[w] != group && self.same_side(self.grp[w], group) {
                self.switches.push_back(w);
            }
        }
    }

    fn child(&self, pg: &PrefixGraph<'_>, u: usize, group: usize) -> GroupConstraint {
        let mut c = self.clone();
        if group == NONE {
            let g = c.empty_b_group();
            c.place(pg, u, g);
        } else {
            c.place(pg, u, group);
        }
        c.depth += 1;
        c
    }

    /// Group of the least permanent neighbor of `u` on the given side.
    fn permanent_neighbor_group(&self, pg: &PrefixGraph<'_>, u: usize, on_b: bool) -> Option<usize> {
        pg.neighbors(u)
            .iter()
            .filter(|&&y| self.perm[y] && (self.grp[y] >= self.k) == on_b)
            .min()
            .map(|&y| self.grp[y])
    }

    fn step(&mut self, pg: &PrefixGraph<'_>) -> Step {
        if self.rejected {
            return Step::Rejected;
        }
        while let Some(u) = self.make_per.pop() {
            if !self.perm[u] && self.grp[u] < self.k && self.b_nbrs[u].len() > self.k + 1 {
                let g = self.grp[u];
                self.place(pg, u, g);
                return Step::Reduced(RR_MAKE_PER);
            }
        }
        while let Some(u) = self.switches.pop_front() {
            if self.perm[u] {
                continue;
            }
            let in_a = self.grp[u] < self.k;
            if let Some(g) = self.permanent_neighbor_group(pg, u, in_a) {
                self.place(pg, u, g);
                return Step::Reduced(SW_FORCED);
            }
            let kids: Vec<GroupConstraint> = if in_a {
                let mut targets: Vec<usize> = self.b_nbrs[u]
                    .iter()
                    .filter(|&&(g, _)| self.perm_count[g] == 0)
                    .map(|&(g, _)| g)
                    .collect();
                targets.sort_unstable();
                targets.push(NONE);
                targets
                    .into_iter()
                    .map(|g| {
                        let mut c = self.child(pg, u, g);
                        c.a_to_b += 1;
                        c
                    })
                    .collect()
            } else {
                (0..self.k)
                    .filter(|&g| self.perm_count[g] == 0)
                    .map(|g| {
                        let mut c = self.child(pg, u, g);
                        c.b_to_a += 1;
                        c
                    })
                    .collect()
            };
            if kids.is_empty() {
                return Step::Rejected;
            }
            return Step::Branch(if in_a { SW_A_TO_B } else { SW_B_TO_A }, kids);
        }
        Step::Exhausted
    }

    /// The groups as the clusters of a partition.
    fn clusters(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let keep = |gs: &[Vec<usize>]| gs.iter().filter(|g| !g.is_empty()).cloned().collect();
        (keep(self.a_groups()), keep(self.b_groups()))
    }
}

/// Builds the constraints that place `v`, after pruning B placements when
/// `v` sees more than `k + 1` clusters of `B'`.
fn initial_constraints(
    pg: &PrefixGraph<'_>,
    v: usize,
    a_clusters: &[Vec<usize>],
    b_clusters: &[Vec<usize>],
    k: usize,
) -> Vec<GroupConstraint> {
    let n = pg.base().n();
    let mut members: Vec<Vec<usize>> = Vec::with_capacity(k + b_clusters.len() + 1);
    members.extend(a_clusters.iter().cloned());
    members.resize(k, Vec::new());
    // B' clusters with a neighbor of v come first.
    let mut touched = vec![false; b_clusters.len()];
    let mut b_of = vec![NONE; n];
    for (i, c) in b_clusters.iter().enumerate() {
        for &u in c {
            b_of[u] = i;
        }
    }
    for &u in pg.neighbors(v) {
        if b_of[u] != NONE {
            touched[b_of[u]] = true;
        }
    }
    let (near, far): (Vec<usize>, Vec<usize>) = (0..b_clusters.len()).partition(|&i| touched[i]);
    let near_count = near.len();
    for &i in near.iter().chain(&far) {
        members.push(b_clusters[i].clone());
    }
    members.push(Vec::new());
    let base = GroupConstraint::with_members(pg, k, members);
    let fresh = base.members.len() - 1;
    let mut targets: Vec<usize> = (0..k).collect();
    if near_count <= k + 1 {
        targets.extend(k..k + near_count);
        targets.push(fresh);
    }
    targets
        .into_iter()
        .map(|g| {
            let mut c = base.clone();
            c.place(pg, v, g);
            c
        })
        .collect()
}

fn search(pg: &PrefixGraph<'_>, roots: Vec<GroupConstraint>, k: usize, stats: &mut SearchStats) -> Option<GroupConstraint> {
    stats.bounded("initial_constraints", roots.len(), 2 * k + 2);
    let mut stack: Vec<GroupConstraint> = roots.into_iter().rev().collect();
    while let Some(mut c) = stack.pop() {
        stats.nodes += 1;
        loop {
            stats.depth(c.depth);
            stats.bounded("switch_a_to_b_per_path", c.a_to_b, k);
            stats.bounded("switch_b_to_a_per_path", c.b_to_a, k);
            match c.step(pg) {
                Step::Rejected => {
                    stats.fire(RR_PER_VERTS);
                    stats.leaves += 1;
                    break;
                }
                Step::Reduced(rule) => stats.fire(rule),
                Step::Branch(rule, kids) => {
                    stats.fire(rule);
                    let cap = if rule == SW_A_TO_B { k + 2 } else { k };
                    stats.bounded(if rule == SW_A_TO_B { "width_a_to_b" } else { "width_b_to_a" }, kids.len(), cap);
                    stack.extend(kids.into_iter().rev());
                    break;
                }
                Step::Exhausted => {
                    stats.leaves += 1;
                    stats.exhausted_leaves += 1;
                    return Some(c);
                }
            }
        }
    }
    None
}

fn check_start(g: &Graph, v: usize, a_clusters: &[Vec<usize>], b_clusters: &[Vec<usize>], k: usize) -> Result<()> {
    let n = g.n();
    if v >= n {
        return Err(Error::OutOfRange { vertex: v, n });
    }
    if a_clusters.iter().filter(|c| !c.is_empty()).count() > k {
        return Err(Error::BadCertificate(format!("more than {k} clusters on side A")));
    }
    let mut seen = vec![false; n];
    seen[v] = true;
    for c in a_clusters.iter().chain(b_clusters) {
        for &u in c {
            if u >= n {
                return Err(Error::OutOfRange { vertex: u, n });
            }
            if seen[u] {
                return Err(Error::BadCertificate(format!("vertex {u} is listed twice or is the new vertex")));
            }
            seen[u] = true;
        }
    }
    if let Some(u) = seen.iter().position(|&x| !x) {
        return Err(Error::BadCertificate(format!("vertex {u} is on neither side")));
    }
    let p = Bipartition::from_clusters(n, a_clusters.to_vec(), b_clusters.to_vec());
    let without_v = g.delete_vertex(v);
    let local = |cs: &[Vec<usize>]| -> Vec<Vec<usize>> {
        cs.iter().map(|c| c.iter().map(|&u| if u > v { u - 1 } else { u }).collect()).collect()
    };
    let q = Bipartition::from_clusters(n - 1, local(p.a_clusters()), local(p.b_clusters()));
    if !verify_certificate(&without_v, &q, Problem::Subcoloring, k, BoundMode::ASide) {
        return Err(Error::BadCertificate("the clusters do not form a 2-subcoloring of G - v".into()));
    }
    Ok(())
}

/// The constraints of one inductive step, from the clusters of `(A', B')`.
pub fn initial_group_constraints(
    g: &Graph,
    v: usize,
    a_clusters: &[Vec<usize>],
    b_clusters: &[Vec<usize>],
    k: usize,
) -> Result<Vec<GroupConstraint>> {
    check_start(g, v, a_clusters, b_clusters, k)?;
    let a: Vec<Vec<usize>> = a_clusters.iter().filter(|c| !c.is_empty()).cloned().collect();
    let b: Vec<Vec<usize>> = b_clusters.iter().filter(|c| !c.is_empty()).cloned().collect();
    Ok(initial_constraints(&PrefixGraph::full(g), v, &a, &b, k))
}

/// Applies rules until one changes the constraint, branches, rejects, or
/// nothing applies.
pub fn apply_sub_rules(g: &Graph, c: &GroupConstraint) -> SubOutcome {
    let pg = PrefixGraph::full(g);
    let mut next = c.clone();
    match next.step(&pg) {
        Step::Rejected => SubOutcome::Rejected,
        Step::Reduced(_) => SubOutcome::Reduced(next),
        Step::Branch(_, kids) => SubOutcome::Branch(kids),
        Step::Exhausted => SubOutcome::Exhausted,
    }
}

pub fn inductive_subcoloring_step(g: &Graph, v: usize, a_prime: &[usize], b_prime: &[usize], k: usize) -> Result<Option<Bipartition>> {
    let split = |s: &[usize]| {
        cluster_decomposition(g, s).map_err(|p| Error::BadCertificate(format!("induced path {:?} on one side", p.path())))
    };
    let (a, b) = (split(a_prime)?, split(b_prime)?);
    let roots = initial_group_constraints(g, v, &a, &b, k)?;
    let pg = PrefixGraph::full(g);
    Ok(search(&pg, roots, k, &mut SearchStats::default()).map(|c| {
        let (a, b) = c.clusters();
        Bipartition::from_clusters(g.n(), a, b)
    }))
}

#[derive(Debug, Clone, Default)]
pub struct SubCert {
    pub a_clusters: Vec<Vec<usize>>,
    pub b_clusters: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Default)]
pub struct SubcoloringRecognizer {
    pub stats: SearchStats,
}

impl InductiveRecognizer for SubcoloringRecognizer {
    type Certificate = SubCert;

    fn empty_certificate(&mut self, _: &Graph) -> SubCert {
        SubCert::default()
    }

    fn step(&mut self, pg: &PrefixGraph<'_>, v: usize, prev: SubCert, k: usize) -> Result<Option<SubCert>> {
        self.stats.steps += 1;
        let roots = initial_constraints(pg, v, &prev.a_clusters, &prev.b_clusters, k);
        Ok(search(pg, roots, k, &mut self.stats).map(|c| {
            let (a_clusters, b_clusters) = c.clusters();
            SubCert { a_clusters, b_clusters }
        }))
    }
}

pub fn recognize_subcoloring_ka(g: &Graph, k: usize) -> Option<Bipartition> {
    recognize_subcoloring_ka_with(g, k, OrderMode::DegreeSorted).0
}

/// Isolated vertices are set aside first and returned as singleton B
/// clusters.
pub fn recognize_subcoloring_ka_with(g: &Graph, k: usize, mode: OrderMode) -> (Option<Bipartition>, SearchStats) {
    let (busy, idle): (Vec<usize>, Vec<usize>) = (0..g.n()).partition(|&v| g.degree(v) > 0);
    let h = g.induced_subgraph(&busy);
    let mut rec = SubcoloringRecognizer::default();
    let run = recognize_inductively(&h, &mut rec, k, mode).expect("the subcoloring step has no error path");
    let cert = run.certificate.map(|c| {
        let lift = |cs: Vec<Vec<usize>>| -> Vec<Vec<usize>> { cs.into_iter().map(|c| c.into_iter().map(|u| busy[u]).collect()).collect() };
        let mut b = lift(c.b_clusters);
        b.extend(idle.iter().map(|&u| vec![u]));
        Bipartition::from_clusters(g.n(), lift(c.a_clusters), b)
    });
    debug_assert!(cert.as_ref().is_none_or(|p| verify_certificate(g, p, Problem::Subcoloring, k, BoundMode::ASide)));
    (cert, rec.stats)
}
