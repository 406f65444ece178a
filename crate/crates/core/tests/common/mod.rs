#![allow(dead_code)]

use graphpart::twosat::{Lit, TwoSatFormula};
use graphpart::Graph;
use rand::Rng;

// Vertex names used in the figure fixtures.
pub const A1: usize = 0;
pub const A2: usize = 1;
pub const A3: usize = 2;
pub const B1: usize = 3;
pub const B2: usize = 4;
pub const B3: usize = 5;
pub const V: usize = 6;

/// The split graph after inserting `v`: triangle a1 a2 a3, pendant b's.
pub fn fig2_right() -> Graph {
    Graph::new(
        7,
        &[(A1, A2), (A2, A3), (A1, A3), (A1, B1), (A1, B2), (A3, B3), (A2, B2), (A3, B2), (A1, V), (B2, V), (A3, V)],
    )
    .unwrap()
}

/// Two triangles a1..a3 and a4..a6 (0..6) with independent b1..b4 (6..10).
pub fn fig3_left() -> Graph {
    Graph::new(
        10,
        &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 6), (2, 8), (8, 3), (1, 7), (7, 0), (3, 9), (9, 5)],
    )
    .unwrap()
}

/// Same as [`fig3_left`] plus b5 = 10 and the B-side edges b1b2 and
/// the triangle b3 b4 b5.
pub fn fig3_right() -> Graph {
    let mut edges: Vec<(usize, usize)> = fig3_left().edges().collect();
    edges.extend([(6, 7), (8, 9), (9, 10), (10, 8)]);
    Graph::new(11, &edges).unwrap()
}

pub fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    graphpart::generate::gnp(n, p, rng)
}

pub fn random_formula(rng: &mut impl Rng, max_vars: usize, max_clauses: usize) -> TwoSatFormula {
    let vars = rng.gen_range(1..=max_vars);
    let mut f = TwoSatFormula::new(vars);
    for _ in 0..rng.gen_range(0..=max_clauses) {
        let lit = |rng: &mut dyn rand::RngCore| {
            let v = rng.gen_range(0..vars);
            if rng.gen_bool(0.5) {
                Lit::pos(v)
            } else {
                Lit::neg(v)
            }
        };
        let a = lit(rng);
        let b = lit(rng);
        f.add(a, b);
    }
    f
}
