use std::collections::BTreeMap;
use std::fmt;

const MAX_RECORDED_VIOLATIONS: usize = 32;

/// Search-tree instrumentation collected across all inductive steps.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub steps: u64,
    pub nodes: u64,
    pub leaves: u64,
    pub exhausted_leaves: u64,
    pub max_depth: usize,
    /// Total applications per rule name.
    pub rule_counts: BTreeMap<&'static str, u64>,
    /// Largest per-path value observed per counter name.
    pub max_per_path: BTreeMap<&'static str, usize>,
    pub violation_count: u64,
    /// The first few bound violations, as human-readable lines.
    pub violations: Vec<String>,
}

impl SearchStats {
    pub fn fire(&mut self, rule: &'static str) {
        *self.rule_counts.entry(rule).or_default() += 1;
    }

    pub fn observe(&mut self, counter: &'static str, value: usize) {
        let slot = self.max_per_path.entry(counter).or_default();
        *slot = (*slot).max(value);
    }

    /// Records `value` for `counter` and a violation if it exceeds `cap`.
    pub fn bounded(&mut self, counter: &'static str, value: usize, cap: usize) {
        self.observe(counter, value);
        if value > cap {
            self.violate(format!("{counter}={value} exceeds {cap}"));
        }
    }

    pub fn violate(&mut self, msg: String) {
        self.violation_count += 1;
        if self.violations.len() < MAX_RECORDED_VIOLATIONS {
            self.violations.push(msg);
        }
    }

    pub fn depth(&mut self, d: usize) {
        self.max_depth = self.max_depth.max(d);
    }

    pub fn merge(&mut self, other: &SearchStats) {
        self.steps += other.steps;
        self.nodes += other.nodes;
        self.leaves += other.leaves;
        self.exhausted_leaves += other.exhausted_leaves;
        self.max_depth = self.max_depth.max(other.max_depth);
        for (k, v) in &other.rule_counts {
            *self.rule_counts.entry(k).or_default() += v;
        }
        for (k, &v) in &other.max_per_path {
            self.observe(k, v);
        }
        self.violation_count += other.violation_count;
        for v in &other.violations {
            if self.violations.len() < MAX_RECORDED_VIOLATIONS {
                self.violations.push(v.clone());
            }
        }
    }

    pub fn max_of(&self, counter: &str) -> usize {
        self.max_per_path.get(counter).copied().unwrap_or(0)
    }
}

/// `key=value` lines, one per counter.
impl fmt::Display for SearchStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "steps={}", self.steps)?;
        writeln!(f, "nodes={}", self.nodes)?;
        writeln!(f, "leaves={}", self.leaves)?;
        writeln!(f, "exhausted_leaves={}", self.exhausted_leaves)?;
        writeln!(f, "max_depth={}", self.max_depth)?;
        for (k, v) in &self.rule_counts {
            writeln!(f, "rule.{k}={v}")?;
        }
        for (k, v) in &self.max_per_path {
            writeln!(f, "max_per_path.{k}={v}")?;
        }
        write!(f, "violations={}", self.violation_count)
    }
}
