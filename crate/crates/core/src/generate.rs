//! Seeded instance generators. Planted instances come with the hidden
//! certificate, relabeled through a random permutation.

use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::certificate::Bipartition;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    PlantedMonopolar,
    PlantedSubcoloring,
    Gnp,
}

impl std::str::FromStr for GenKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "planted-monopolar" => Ok(GenKind::PlantedMonopolar),
            "planted-subcoloring" => Ok(GenKind::PlantedSubcoloring),
            "gnp" => Ok(GenKind::Gnp),
            _ => Err(Error::Config(format!("unknown generator `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenParams {
    pub kind: GenKind,
    pub n: usize,
    /// Planted cluster count per side.
    pub k: usize,
    /// Probability of each A-B edge (planted) or of each edge (gnp).
    pub p: f64,
    /// Share of the vertices placed on side A.
    pub a_fraction: f64,
    pub seed: u64,
}

impl GenParams {
    pub fn new(kind: GenKind, n: usize, k: usize, p: f64, seed: u64) -> Self {
        GenParams { kind, n, k, p, a_fraction: 0.3, seed }
    }
}

#[derive(Debug, Clone)]
pub struct Planted {
    pub graph: Graph,
    pub certificate: Option<Bipartition>,
}

pub fn generate(params: &GenParams) -> Result<Planted> {
    if !(0.0..=1.0).contains(&params.p) {
        return Err(Error::Config(format!("edge probability {} outside [0, 1]", params.p)));
    }
    if !(0.0..=1.0).contains(&params.a_fraction) {
        return Err(Error::Config(format!("A fraction {} outside [0, 1]", params.a_fraction)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    match params.kind {
        GenKind::Gnp => Ok(Planted { graph: gnp(params.n, params.p, &mut rng), certificate: None }),
        GenKind::PlantedMonopolar => planted(params, false, &mut rng),
        GenKind::PlantedSubcoloring => planted(params, true, &mut rng),
    }
}

pub fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("pairs are in range")
}

/// Splits `total` into `parts` positive sizes.
fn composition(total: usize, parts: usize, rng: &mut impl Rng) -> Result<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { Ok(Vec::new()) } else { Err(Error::Config(format!("{total} vertices for zero clusters"))) };
    }
    if total < parts {
        return Err(Error::Config(format!("{total} vertices cannot fill {parts} nonempty clusters")));
    }
    let mut cuts: Vec<usize> = sample(rng, total - 1, parts - 1).into_iter().map(|c| c + 1).collect();
    cuts.sort_unstable();
    cuts.push(total);
    let mut prev = 0;
    Ok(cuts
        .into_iter()
        .map(|c| {
            let s = c - prev;
            prev = c;
            s
        })
        .collect())
}

fn planted(params: &GenParams, b_clusters: bool, rng: &mut impl Rng) -> Result<Planted> {
    let n = params.n;
    let a_size = (params.a_fraction * n as f64).round() as usize;
    let a_sizes = composition(a_size, params.k, rng)?;
    let b_sizes = if b_clusters { composition(n - a_size, params.k, rng)? } else { vec![1; n - a_size] };
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);

    let mut next = 0;
    let mut take = |sizes: &[usize]| -> Vec<Vec<usize>> {
        sizes
            .iter()
            .map(|&s| {
                let c: Vec<usize> = label[next..next + s].to_vec();
                next += s;
                c
            })
            .collect()
    };
    let a = take(&a_sizes);
    let b = take(&b_sizes);
    let mut edges = Vec::new();
    for c in a.iter().chain(if b_clusters { b.iter() } else { [].iter() }) {
        for (i, &u) in c.iter().enumerate() {
            edges.extend(c[i + 1..].iter().map(|&v| (u, v)));
        }
    }
    let b_all: Vec<usize> = b.iter().flatten().copied().collect();
    if params.p > 0.0 {
        for &u in a.iter().flatten() {
            for &v in &b_all {
                if rng.gen_bool(params.p) {
                    edges.push((u, v));
                }
            }
        }
    }
    let graph = Graph::new(n, &edges)?;
    Ok(Planted { graph, certificate: Some(Bipartition::from_clusters(n, a, b)) })
}
