//! Monopolar recognition with at most `k` clusters on side A.
//!
//! Each inductive step starts from a valid partition `(A', B')` of `G - v`
//! and searches for a repair. A constraint fixes a few permanent vertices
//! (`A_P`, `B_P`); every other vertex stays where `(A', B')` put it, so
//! `A*` and `B*` are implicit. Only the permanent lists are stored, which
//! keeps a search node at `O(k)` words.

use crate::certificate::{verify_certificate, Bipartition, BoundMode, Problem};
use crate::cluster::cluster_decomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::inductive::{recognize_inductively, InductiveRecognizer, OrderMode, PrefixGraph};
use crate::stats::SearchStats;

/// A partition of the current prefix into sides, with the clusters of side A.
#[derive(Debug, Clone)]
pub struct MonoCert {
    in_a: Vec<bool>,
    clusters: Vec<Vec<usize>>,
    cluster_of: Vec<usize>,
}

impl MonoCert {
    pub fn empty(n: usize) -> Self {
        MonoCert { in_a: vec![false; n], clusters: Vec::new(), cluster_of: vec![usize::MAX; n] }
    }

    /// `a_clusters` must be the clusters of `G[A]`.
    fn from_clusters(n: usize, a_clusters: Vec<Vec<usize>>) -> Self {
        let mut cert = Self::empty(n);
        for (i, c) in a_clusters.iter().enumerate() {
            for &u in c {
                cert.in_a[u] = true;
                cert.cluster_of[u] = i;
            }
        }
        cert.clusters = a_clusters;
        cert
    }

    pub fn clusters(&self) -> &[Vec<usize>] {
        &self.clusters
    }

    /// Side B is every vertex of `vertices` outside A, as singletons.
    pub fn to_bipartition(&self, n: usize, vertices: impl IntoIterator<Item = usize>) -> Bipartition {
        let b = vertices.into_iter().filter(|&u| !self.in_a[u]).map(|u| vec![u]).collect();
        Bipartition::from_clusters(n, self.clusters.clone(), b)
    }
}

/// Permanent vertices plus per-path rule counters. Everything else is in
/// `A*` if it lies in `A'` and in `B*` otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoConstraint {
    pub a_perm: Vec<usize>,
    pub b_perm: Vec<usize>,
    /// Applications of the B*-to-A_P rule on this path.
    pub up: usize,
    /// Applications of the rules that move an A* vertex to a permanent set.
    pub down: usize,
    /// 1 for the initial constraints, plus one per branching.
    pub depth: usize,
}

impl MonoConstraint {
    pub fn new(a_perm: Vec<usize>, b_perm: Vec<usize>) -> Self {
        MonoConstraint { a_perm, b_perm, up: 0, down: 0, depth: 1 }
    }

    fn with_a(&self, u: usize) -> Self {
        let mut c = self.clone();
        c.a_perm.push(u);
        c
    }

    fn with_b(&self, u: usize) -> Self {
        let mut c = self.clone();
        c.b_perm.push(u);
        c
    }

    fn deeper(mut self) -> Self {
        self.depth += 1;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonoOutcome {
    Rejected,
    Reduced { rule: &'static str, next: MonoConstraint },
    Branch { rule: &'static str, children: [MonoConstraint; 2] },
    Exhausted,
}

pub const RR_PERMANENT: &str = "rr_permanent";
pub const RR_UP: &str = "rr_b_star_to_a";
pub const RR_DOWN: &str = "rr_p3_two_permanent";
pub const BR_P3: &str = "br_p3_one_permanent";
pub const BR_SINGLETON: &str = "br_singleton_cluster";

const FREE: u8 = 0;
const AP: u8 = 1;
const BP: u8 = 2;

/// Per-vertex scratch reused across steps so no step pays `O(n)`.
#[derive(Debug, Clone)]
struct Scratch {
    mark: Vec<u8>,
    idx: Vec<usize>,
    stamp: Vec<u32>,
    epoch: u32,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch { mark: vec![FREE; n], idx: vec![0; n], stamp: vec![0; n], epoch: 0 }
    }

    fn next_epoch(&mut self) -> u32 {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
        self.epoch
    }
}

/// Clusters of `G[A_P]` as a small union-find over positions in `a_perm`.
struct PermClusters {
    parent: Vec<usize>,
    size: Vec<usize>,
    inner_degree: Vec<usize>,
}

impl PermClusters {
    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (big, small) = if self.size[ra] >= self.size[rb] { (ra, rb) } else { (rb, ra) };
            self.parent[small] = big;
            self.size[big] += self.size[small];
        }
    }
}

struct Engine<'a, 'g> {
    pg: &'a PrefixGraph<'g>,
    cert: &'a MonoCert,
    s: &'a mut Scratch,
    k: usize,
}

impl Engine<'_, '_> {
    #[inline]
    fn is_a_star(&self, u: usize) -> bool {
        self.s.mark[u] == FREE && self.cert.in_a[u]
    }

    #[inline]
    fn is_b_star(&self, u: usize) -> bool {
        self.s.mark[u] == FREE && !self.cert.in_a[u]
    }

    fn set_marks(&mut self, c: &MonoConstraint) {
        for (i, &x) in c.a_perm.iter().enumerate() {
            self.s.mark[x] = AP;
            self.s.idx[x] = i;
        }
        for &x in &c.b_perm {
            self.s.mark[x] = BP;
        }
    }

    fn clear_marks(&mut self, c: &MonoConstraint) {
        for &x in c.a_perm.iter().chain(&c.b_perm) {
            self.s.mark[x] = FREE;
        }
    }

    fn apply(&mut self, c: &MonoConstraint) -> MonoOutcome {
        self.set_marks(c);
        let out = self.rules(c);
        self.clear_marks(c);
        out
    }

    fn perm_clusters(&self, c: &MonoConstraint) -> PermClusters {
        let p = c.a_perm.len();
        let mut pc = PermClusters { parent: (0..p).collect(), size: vec![1; p], inner_degree: vec![0; p] };
        for (i, &x) in c.a_perm.iter().enumerate() {
            for &y in self.pg.neighbors(x) {
                if self.s.mark[y] == AP {
                    pc.inner_degree[i] += 1;
                    pc.union(i, self.s.idx[y]);
                }
            }
        }
        pc
    }

    fn rules(&mut self, c: &MonoConstraint) -> MonoOutcome {
        // B_P must be independent, A_P a cluster graph with at most k clusters.
        for &x in &c.b_perm {
            if self.pg.neighbors(x).iter().any(|&y| self.s.mark[y] == BP) {
                return MonoOutcome::Rejected;
            }
        }
        let mut pc = self.perm_clusters(c);
        let mut roots = 0;
        for i in 0..c.a_perm.len() {
            let r = pc.find(i);
            if pc.inner_degree[i] + 1 != pc.size[r] {
                return MonoOutcome::Rejected;
            }
            roots += usize::from(r == i);
        }
        if roots > self.k {
            return MonoOutcome::Rejected;
        }

        // A vertex of B* next to B_P has to go to A.
        let up = c
            .b_perm
            .iter()
            .flat_map(|&x| self.pg.neighbors(x).iter().copied())
            .filter(|&y| self.is_b_star(y))
            .min();
        if let Some(u) = up {
            let mut next = c.with_a(u);
            next.up += 1;
            return MonoOutcome::Reduced { rule: RR_UP, next };
        }

        // An A* vertex in a P3 with two A_P vertices has to go to B.
        let mut touches: Vec<(usize, usize)> = Vec::new();
        for (i, &x) in c.a_perm.iter().enumerate() {
            let r = pc.find(i);
            for &u in self.pg.neighbors(x) {
                if self.is_a_star(u) {
                    touches.push((u, r));
                }
            }
        }
        touches.sort_unstable();
        let mut i = 0;
        while i < touches.len() {
            let (u, r) = touches[i];
            let mut j = i;
            while j < touches.len() && touches[j].0 == u {
                j += 1;
            }
            let one_cluster = touches[i..j].iter().all(|&(_, r2)| r2 == r);
            if !one_cluster || j - i < pc.size[r] {
                let mut next = c.with_b(u);
                next.down += 1;
                return MonoOutcome::Reduced { rule: RR_DOWN, next };
            }
            i = j;
        }

        // Two A* vertices in a P3 with one A_P vertex: one of them goes to B.
        let mut xs = c.a_perm.clone();
        xs.sort_unstable();
        for &x in &xs {
            let mut nb: Vec<usize> = self.pg.neighbors(x).iter().copied().filter(|&u| self.is_a_star(u)).collect();
            if nb.is_empty() {
                continue;
            }
            nb.sort_unstable();
            let u = nb[0];
            let cu = self.cert.cluster_of[u];
            let mut w = nb.iter().copied().find(|&y| self.cert.cluster_of[y] != cu);
            if w.is_none() {
                let e = self.s.next_epoch();
                for &y in &nb {
                    self.s.stamp[y] = e;
                }
                w = self.cert.clusters[cu].iter().copied().filter(|&y| self.is_a_star(y) && self.s.stamp[y] != e).min();
            }
            if let Some(w) = w {
                let mut cu_ = c.with_b(u);
                let mut cw = c.with_b(w);
                cu_.down += 1;
                cw.down += 1;
                return MonoOutcome::Branch { rule: BR_P3, children: [cu_.deeper(), cw.deeper()] };
            }
        }

        // A singleton cluster of A' may go either way.
        let single = self
            .cert
            .clusters
            .iter()
            .filter(|cl| cl.len() == 1 && self.is_a_star(cl[0]))
            .map(|cl| cl[0])
            .min();
        if let Some(u) = single {
            let mut ca = c.with_a(u);
            let mut cb = c.with_b(u);
            ca.down += 1;
            cb.down += 1;
            return MonoOutcome::Branch { rule: BR_SINGLETON, children: [ca.deeper(), cb.deeper()] };
        }
        MonoOutcome::Exhausted
    }

    /// Number of clusters of `G[A* ∪ A_P]` at an exhausted constraint.
    fn leaf_clusters(&mut self, c: &MonoConstraint) -> usize {
        self.set_marks(c);
        let mut removed = vec![0usize; self.cert.clusters.len()];
        for &x in c.a_perm.iter().chain(&c.b_perm) {
            if self.cert.in_a[x] {
                removed[self.cert.cluster_of[x]] += 1;
            }
        }
        let alive = self.cert.clusters.iter().zip(&removed).filter(|(cl, &r)| cl.len() > r).count();
        let mut pc = self.perm_clusters(c);
        let mut attached = vec![false; c.a_perm.len()];
        for (i, &x) in c.a_perm.iter().enumerate() {
            if self.pg.neighbors(x).iter().any(|&y| self.is_a_star(y)) {
                let r = pc.find(i);
                attached[r] = true;
            }
        }
        let loose = (0..c.a_perm.len()).filter(|&i| pc.find(i) == i && !attached[i]).count();
        self.clear_marks(c);
        alive + loose
    }

    /// Depth-first search from the two initial constraints.
    fn search(&mut self, v: usize, stats: &mut SearchStats) -> Option<MonoConstraint> {
        let k = self.k;
        let mut stack = vec![MonoConstraint::new(vec![], vec![v]), MonoConstraint::new(vec![v], vec![])];
        while let Some(mut c) = stack.pop() {
            stats.nodes += 1;
            loop {
                stats.depth(c.depth);
                stats.bounded("rr_up_per_path", c.up, k + 1);
                stats.bounded("down_per_path", c.down, k + 1);
                stats.bounded("depth", c.depth, k + 2);
                stats.bounded("a_perm", c.a_perm.len(), 2 * k + 3);
                stats.bounded("b_perm", c.b_perm.len(), k + 2);
                match self.apply(&c) {
                    MonoOutcome::Rejected => {
                        stats.fire(RR_PERMANENT);
                        stats.leaves += 1;
                        break;
                    }
                    MonoOutcome::Reduced { rule, next } => {
                        stats.fire(rule);
                        c = next;
                    }
                    MonoOutcome::Branch { rule, children: [first, second] } => {
                        stats.fire(rule);
                        stack.push(second);
                        stack.push(first);
                        break;
                    }
                    MonoOutcome::Exhausted => {
                        stats.leaves += 1;
                        stats.exhausted_leaves += 1;
                        if self.leaf_clusters(&c) <= k {
                            return Some(c);
                        }
                        break;
                    }
                }
            }
        }
        None
    }

    /// Rewrites `cert` into the partition `(A* ∪ A_P, B* ∪ B_P)` of `c`.
    fn commit(pg: &PrefixGraph<'_>, cert: &mut MonoCert, s: &mut Scratch, c: &MonoConstraint) {
        // Take every permanent A' vertex out of its old cluster.
        for &x in c.a_perm.iter().chain(&c.b_perm) {
            if cert.in_a[x] {
                let cl = &mut cert.clusters[cert.cluster_of[x]];
                let pos = cl.iter().position(|&y| y == x).expect("cluster lists are consistent");
                cl.swap_remove(pos);
                cert.in_a[x] = false;
            }
        }
        for (i, &x) in c.a_perm.iter().enumerate() {
            s.mark[x] = AP;
            s.idx[x] = i;
        }
        // Each A_P cluster either joins the A' cluster it touches or is new.
        let mut parent: Vec<usize> = (0..c.a_perm.len()).collect();
        fn root(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        let mut target: Vec<Option<usize>> = vec![None; c.a_perm.len()];
        for (i, &x) in c.a_perm.iter().enumerate() {
            for &y in pg.neighbors(x) {
                if s.mark[y] == AP {
                    let (a, b) = (root(&mut parent, i), root(&mut parent, s.idx[y]));
                    parent[a] = b;
                } else if cert.in_a[y] {
                    target[i] = Some(cert.cluster_of[y]);
                }
            }
        }
        let mut comp_cluster: Vec<Option<usize>> = vec![None; c.a_perm.len()];
        for (i, t) in target.iter().enumerate() {
            if let Some(t) = *t {
                let r = root(&mut parent, i);
                comp_cluster[r] = Some(t);
            }
        }
        for (i, &x) in c.a_perm.iter().enumerate() {
            let r = root(&mut parent, i);
            let cl = match comp_cluster[r] {
                Some(t) => t,
                None => {
                    cert.clusters.push(Vec::new());
                    let t = cert.clusters.len() - 1;
                    comp_cluster[r] = Some(t);
                    t
                }
            };
            cert.clusters[cl].push(x);
            cert.cluster_of[x] = cl;
        }
        for &x in &c.a_perm {
            s.mark[x] = FREE;
            cert.in_a[x] = true;
        }
        let mut i = 0;
        while i < cert.clusters.len() {
            if cert.clusters[i].is_empty() {
                cert.clusters.swap_remove(i);
                if i < cert.clusters.len() {
                    for &y in &cert.clusters[i] {
                        cert.cluster_of[y] = i;
                    }
                }
            } else {
                i += 1;
            }
        }
    }
}

/// Inductive recognizer for monopolar partitions with at most `k` A-clusters.
#[derive(Debug, Clone, Default)]
pub struct MonopolarRecognizer {
    scratch: Option<Scratch>,
    pub stats: SearchStats,
}

impl MonopolarRecognizer {
    pub fn new() -> Self {
        Self::default()
    }
}

impl InductiveRecognizer for MonopolarRecognizer {
    type Certificate = MonoCert;

    fn empty_certificate(&mut self, g: &Graph) -> MonoCert {
        self.scratch = Some(Scratch::new(g.n()));
        MonoCert::empty(g.n())
    }

    fn step(&mut self, pg: &PrefixGraph<'_>, v: usize, mut prev: MonoCert, k: usize) -> Result<Option<MonoCert>> {
        let s = self.scratch.get_or_insert_with(|| Scratch::new(pg.base().n()));
        self.stats.steps += 1;
        let found = Engine { pg, cert: &prev, s, k }.search(v, &mut self.stats);
        Ok(found.map(|c| {
            Engine::commit(pg, &mut prev, s, &c);
            prev
        }))
    }
}

fn check_start(g: &Graph, v: usize, a: &[usize], b: &[usize], k: usize) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    if v >= n {
        return Err(Error::OutOfRange { vertex: v, n });
    }
    let mut seen = vec![false; n];
    seen[v] = true;
    for &u in a.iter().chain(b) {
        if u >= n {
            return Err(Error::OutOfRange { vertex: u, n });
        }
        if seen[u] {
            return Err(Error::BadCertificate(format!("vertex {u} is listed twice or is the new vertex")));
        }
        seen[u] = true;
    }
    if let Some(u) = seen.iter().position(|&x| !x) {
        return Err(Error::BadCertificate(format!("vertex {u} is on neither side")));
    }
    if !g.is_edgeless_within(b) {
        return Err(Error::BadCertificate("side B has an edge".into()));
    }
    let clusters = cluster_decomposition(g, a).map_err(|p| Error::BadCertificate(format!("side A contains the induced path {:?}", p.path())))?;
    if clusters.len() > k {
        return Err(Error::BadCertificate(format!("side A has {} clusters, more than {k}", clusters.len())));
    }
    Ok(clusters)
}

/// One inductive step with its own state, for inspecting the search tree.
pub struct MonoInstance<'g> {
    pg: PrefixGraph<'g>,
    cert: MonoCert,
    scratch: Scratch,
    v: usize,
    k: usize,
}

impl<'g> MonoInstance<'g> {
    /// `(a_prime, b_prime)` must be a valid partition of `G - v`.
    pub fn new(g: &'g Graph, v: usize, a_prime: &[usize], b_prime: &[usize], k: usize) -> Result<Self> {
        let clusters = check_start(g, v, a_prime, b_prime, k)?;
        Ok(MonoInstance {
            pg: PrefixGraph::full(g),
            cert: MonoCert::from_clusters(g.n(), clusters),
            scratch: Scratch::new(g.n()),
            v,
            k,
        })
    }

    fn engine(&mut self) -> Engine<'_, 'g> {
        Engine { pg: &self.pg, cert: &self.cert, s: &mut self.scratch, k: self.k }
    }

    /// `v` permanent in A, then `v` permanent in B.
    pub fn initial_constraints(&self) -> [MonoConstraint; 2] {
        [MonoConstraint::new(vec![self.v], vec![]), MonoConstraint::new(vec![], vec![self.v])]
    }

    pub fn apply(&mut self, c: &MonoConstraint) -> MonoOutcome {
        self.engine().apply(c)
    }

    pub fn a_star(&self, c: &MonoConstraint) -> Vec<usize> {
        (0..self.pg.len()).filter(|&u| self.cert.in_a[u] && !c.a_perm.contains(&u) && !c.b_perm.contains(&u)).collect()
    }

    pub fn b_star(&self, c: &MonoConstraint) -> Vec<usize> {
        (0..self.pg.len())
            .filter(|&u| u != self.v && !self.cert.in_a[u] && !c.a_perm.contains(&u) && !c.b_perm.contains(&u))
            .collect()
    }

    /// Runs the whole search tree of this step.
    pub fn solve(mut self, stats: &mut SearchStats) -> Option<Bipartition> {
        let v = self.v;
        let found = self.engine().search(v, stats)?;
        Engine::commit(&self.pg, &mut self.cert, &mut self.scratch, &found);
        let n = self.pg.base().n();
        Some(self.cert.to_bipartition(n, 0..n))
    }
}

/// The two starting constraints of a step, after validating `(A', B')`.
pub fn initial_mono_constraints(g: &Graph, v: usize, a_prime: &[usize], b_prime: &[usize], k: usize) -> Result<[MonoConstraint; 2]> {
    Ok(MonoInstance::new(g, v, a_prime, b_prime, k)?.initial_constraints())
}

pub fn inductive_monopolar_step(g: &Graph, v: usize, a_prime: &[usize], b_prime: &[usize], k: usize) -> Result<Option<Bipartition>> {
    Ok(MonoInstance::new(g, v, a_prime, b_prime, k)?.solve(&mut SearchStats::default()))
}

pub fn recognize_monopolar(g: &Graph, k: usize) -> Option<Bipartition> {
    recognize_monopolar_with(g, k, OrderMode::DegreeSorted).0
}

pub fn recognize_monopolar_with(g: &Graph, k: usize, mode: OrderMode) -> (Option<Bipartition>, SearchStats) {
    let mut rec = MonopolarRecognizer::new();
    let run = recognize_inductively(g, &mut rec, k, mode).expect("the monopolar step has no error path");
    let cert = run.certificate.map(|c| c.to_bipartition(g.n(), 0..g.n()));
    debug_assert!(cert.as_ref().is_none_or(|p| verify_certificate(g, p, Problem::Monopolar, k, BoundMode::ASide)));
    (cert, rec.stats)
}
