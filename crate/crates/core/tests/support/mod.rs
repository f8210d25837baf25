//! Test-only oracles, independent of the successive-shortest-path solver.
#![allow(dead_code)] // each test binary uses a different subset

use num::{BigInt, Integer, One};
use rand::Rng;

use ricci_core::graph::{Graph, Vertex};
use ricci_core::rational::Rational;
use ricci_core::transport::ProbMeasure;

/// Brute-force Wasserstein-1: scale both measures to a common integer
/// grid and exhaustively enumerate every feasible integer flow matrix.
pub fn brute_force_wasserstein(g: &Graph, mu1: &ProbMeasure, mu2: &ProbMeasure) -> Rational {
    let from = mu1.support();
    let to = mu2.support();
    let mut scale = BigInt::one();
    for (_, m) in mu1.iter().chain(mu2.iter()) {
        scale = scale.lcm(m.denom());
    }
    let units = |m: &Rational| -> u64 {
        (m * Rational::from_integer(scale.clone()))
            .to_integer()
            .try_into()
            .expect("oracle scale fits u64")
    };
    let supplies: Vec<u64> = from.iter().map(|&v| units(&mu1.mass(v))).collect();
    let mut demands: Vec<u64> = to.iter().map(|&v| units(&mu2.mass(v))).collect();
    let cost: Vec<Vec<u64>> = from
        .iter()
        .map(|&u| {
            let levels = g.bfs_levels(u, None).unwrap();
            to.iter().map(|&v| levels[v].unwrap() as u64).collect()
        })
        .collect();

    let mut best = u64::MAX;
    enumerate(&supplies, &mut demands, &cost, 0, 0, &mut best);
    Rational::new(BigInt::from(best), scale)
}

/// Fills the flow matrix cell by cell in row-major order, trying every
/// feasible amount, and records the cheapest total.
fn enumerate(
    supplies: &[u64],
    demands: &mut Vec<u64>,
    cost: &[Vec<u64>],
    row: usize,
    acc: u64,
    best: &mut u64,
) {
    if acc >= *best {
        return;
    }
    if row == supplies.len() {
        if demands.iter().all(|&d| d == 0) {
            *best = acc;
        }
        return;
    }
    fill_row(supplies[row], demands, cost, row, 0, acc, best, supplies);
}

#[allow(clippy::too_many_arguments)]
fn fill_row(
    row_rem: u64,
    demands: &mut Vec<u64>,
    cost: &[Vec<u64>],
    row: usize,
    col: usize,
    acc: u64,
    best: &mut u64,
    supplies: &[u64],
) {
    if acc >= *best {
        return;
    }
    if col == demands.len() {
        if row_rem == 0 {
            enumerate(supplies, demands, cost, row + 1, acc, best);
        }
        return;
    }
    let max_here = row_rem.min(demands[col]);
    for amount in 0..=max_here {
        demands[col] -= amount;
        fill_row(
            row_rem - amount,
            demands,
            cost,
            row,
            col + 1,
            acc + amount * cost[row][col],
            best,
            supplies,
        );
        demands[col] += amount;
    }
}

/// A random probability measure with the given support size and all
/// masses on a /denominator grid. Support vertices are drawn from one
/// connected component's ball to keep distances finite.
pub fn random_measure<R: Rng>(
    rng: &mut R,
    vertices: &[Vertex],
    support_size: usize,
    denominator: u64,
) -> ProbMeasure {
    assert!(support_size >= 1 && support_size <= vertices.len());
    let mut pool = vertices.to_vec();
    let mut support = Vec::with_capacity(support_size);
    for _ in 0..support_size {
        support.push(pool.swap_remove(rng.random_range(0..pool.len())));
    }
    support.sort_unstable();
    // distribute `denominator` units, at least one per support vertex
    let mut units = vec![1u64; support_size];
    for _ in 0..(denominator - support_size as u64) {
        units[rng.random_range(0..support_size)] += 1;
    }
    ProbMeasure::new(
        support
            .iter()
            .zip(&units)
            .map(|(&v, &u)| (v, Rational::new(BigInt::from(u), BigInt::from(denominator)))),
    )
    .unwrap()
}

/// A random 1-Lipschitz integer function on the vertex set: the pointwise
/// minimum of distance cones d(·, anchor) + offset, which is 1-Lipschitz
/// by construction.
pub fn random_lipschitz_fn<R: Rng>(rng: &mut R, g: &Graph) -> Vec<i64> {
    let n = g.vertex_count();
    let anchors: Vec<(Vec<Option<usize>>, i64)> = (0..rng.random_range(1..=3))
        .map(|_| {
            let anchor = rng.random_range(0..n);
            (g.bfs_levels(anchor, None).unwrap(), rng.random_range(-3..=3))
        })
        .collect();
    (0..n)
        .map(|v| {
            anchors
                .iter()
                .filter_map(|(levels, offset)| levels[v].map(|d| d as i64 + offset))
                .min()
                .unwrap_or(0)
        })
        .collect()
}
