//! Recognition of vertex-partition graph classes: monopolar graphs,
//! 2-subcolorable graphs with few clusters, and generic (Pi_A, Pi_B)
//! partitions for mutually exclusive hereditary properties.
//!
//! Every recognizer is inductive: vertices are inserted one at a time and
//! each insertion repairs the previous certificate with a bounded search.

pub mod certificate;
pub mod cluster;
pub mod error;
pub mod exclusive;
pub mod generate;
pub mod graph;
pub mod inductive;
pub mod io;
pub mod monopolar;
pub mod oracle;
pub mod parallel;
pub mod pattern;
pub mod property;
pub mod stats;
pub mod subcoloring;
pub mod total;
pub mod twosat;

pub use certificate::{verify_certificate, Bipartition, BoundMode, Problem, Side};
pub use error::{Error, Result};
pub use graph::Graph;
pub use inductive::OrderMode;
pub use monopolar::{recognize_monopolar, recognize_monopolar_with};
pub use parallel::Execution;
pub use property::PropertySpec;
pub use stats::SearchStats;
pub use subcoloring::{recognize_subcoloring_ka, recognize_subcoloring_ka_with};
pub use total::{recognize_subcoloring_total, recognize_subcoloring_total_stats};

/// The three parameterized recognizers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Solver {
    Monopolar,
    SubcoloringASide,
    SubcoloringTotal,
}

impl Solver {
    pub const ALL: [Solver; 3] = [Solver::Monopolar, Solver::SubcoloringASide, Solver::SubcoloringTotal];

    pub fn run(self, g: &Graph, k: usize) -> (Option<Bipartition>, SearchStats) {
        match self {
            Solver::Monopolar => recognize_monopolar_with(g, k, OrderMode::default()),
            Solver::SubcoloringASide => recognize_subcoloring_ka_with(g, k, OrderMode::default()),
            Solver::SubcoloringTotal => recognize_subcoloring_total_stats(g, k),
        }
    }

    /// The exhaustive reference answer.
    pub fn oracle(self, g: &Graph, k: usize) -> Result<Option<Bipartition>> {
        match self {
            Solver::Monopolar => oracle::brute_monopolar(g, k),
            Solver::SubcoloringASide => oracle::brute_subcoloring(g, k, BoundMode::ASide),
            Solver::SubcoloringTotal => oracle::brute_subcoloring(g, k, BoundMode::Total),
        }
    }

    pub fn problem(self) -> Problem {
        match self {
            Solver::Monopolar => Problem::Monopolar,
            _ => Problem::Subcoloring,
        }
    }

    pub fn bound_mode(self) -> BoundMode {
        match self {
            Solver::SubcoloringTotal => BoundMode::Total,
            _ => BoundMode::ASide,
        }
    }
}

/// Runs one solver over many graphs. Calls share nothing, so the parallel
/// mode just spreads graphs over the rayon pool.
pub fn recognize_batch(graphs: &[Graph], solver: Solver, k: usize, exec: Execution) -> Vec<(Option<Bipartition>, SearchStats)> {
    parallel::map_items(graphs, exec, |g| solver.run(g, k))
}
