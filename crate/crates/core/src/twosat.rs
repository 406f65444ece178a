//! 2-CNF satisfiability through strongly connected components of the
//! implication graph.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lit {
    pub var: usize,
    pub positive: bool,
}

impl Lit {
    pub fn pos(var: usize) -> Self {
        Lit { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Lit { var, positive: false }
    }

    pub fn negate(self) -> Self {
        Lit { var: self.var, positive: !self.positive }
    }

    /// Node of the implication graph: `2 var` for `x`, `2 var + 1` for `¬x`.
    fn node(self) -> usize {
        2 * self.var + usize::from(!self.positive)
    }

    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }
}

impl fmt::Display for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "x{}", self.var)
        } else {
            write!(f, "!x{}", self.var)
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TwoSatFormula {
    pub var_count: usize,
    pub clauses: Vec<(Lit, Lit)>,
}

impl TwoSatFormula {
    pub fn new(var_count: usize) -> Self {
        TwoSatFormula { var_count, clauses: Vec::new() }
    }

    pub fn add(&mut self, a: Lit, b: Lit) {
        assert!(a.var < self.var_count && b.var < self.var_count, "literal out of range");
        self.clauses.push((a, b));
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.var_count && self.clauses.iter().all(|&(a, b)| a.eval(assignment) || b.eval(assignment))
    }
}

/// A satisfying assignment, or `None`. Linear in variables plus clauses.
pub fn solve_twosat(f: &TwoSatFormula) -> Option<Vec<bool>> {
    let nodes = 2 * f.var_count;
    // Implication graph in CSR form: (a ∨ b) gives ¬a → b and ¬b → a.
    let mut deg = vec![0usize; nodes + 1];
    for &(a, b) in &f.clauses {
        deg[a.negate().node()] += 1;
        deg[b.negate().node()] += 1;
    }
    let mut start = vec![0usize; nodes + 1];
    for i in 0..nodes {
        start[i + 1] = start[i] + deg[i];
    }
    let mut fill = start.clone();
    let mut succ = vec![0usize; start[nodes]];
    for &(a, b) in &f.clauses {
        for (from, to) in [(a.negate(), b), (b.negate(), a)] {
            succ[fill[from.node()]] = to.node();
            fill[from.node()] += 1;
        }
    }
    let comp = tarjan(nodes, &start, &succ);
    let mut out = vec![false; f.var_count];
    for (v, slot) in out.iter_mut().enumerate() {
        let (x, nx) = (comp[2 * v], comp[2 * v + 1]);
        if x == nx {
            return None;
        }
        // Components are numbered in reverse topological order.
        *slot = x < nx;
    }
    Some(out)
}

fn tarjan(nodes: usize, start: &[usize], succ: &[usize]) -> Vec<usize> {
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; nodes];
    let mut low = vec![0; nodes];
    let mut on_stack = vec![false; nodes];
    let mut comp = vec![UNSEEN; nodes];
    let mut stack = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let (mut counter, mut comps) = (0, 0);
    for s in 0..nodes {
        if index[s] != UNSEEN {
            continue;
        }
        index[s] = counter;
        low[s] = counter;
        counter += 1;
        stack.push(s);
        on_stack[s] = true;
        call.push((s, start[s]));
        while let Some(top) = call.last_mut() {
            let v = top.0;
            if top.1 < start[v + 1] {
                let w = succ[top.1];
                top.1 += 1;
                if index[w] == UNSEEN {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, start[w]));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().expect("v is on the stack");
                    on_stack[w] = false;
                    comp[w] = comps;
                    if w == v {
                        break;
                    }
                }
                comps += 1;
            }
            if let Some(&(p, _)) = call.last() {
                low[p] = low[p].min(low[v]);
            }
        }
    }
    comp
}

/// Exhaustive reference solver: the first satisfying assignment in binary
/// counting order.
pub fn brute_twosat(f: &TwoSatFormula) -> Option<Vec<bool>> {
    assert!(f.var_count < 32, "too many variables for exhaustive search");
    (0u64..1 << f.var_count)
        .map(|m| (0..f.var_count).map(|v| m >> v & 1 == 1).collect::<Vec<_>>())
        .find(|a| f.satisfied_by(a))
}
