//! Equal-degree Lin-Lu-Yau fastpath: curvature via a minimum-cost
//! bijection between the exclusive neighborhoods S1(x)\B1(y) and
//! S1(y)\B1(x).

use num::BigInt;

use crate::curvature::LLYCurvature;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::rational::Rational;

/// Square min-cost assignment instance between two vertex sets, with
/// graph distances as costs.
#[derive(Debug, Clone)]
pub struct AssignmentInstance {
    pub left: VertexSet,
    pub right: VertexSet,
    pub cost: Vec<Vec<usize>>,
}

impl AssignmentInstance {
    /// Builds the instance for an equal-degree edge x ~ y.
    pub fn for_edge(g: &Graph, x: Vertex, y: Vertex) -> Result<AssignmentInstance> {
        if !g.is_edge(x, y) {
            g.degree(x)?;
            g.degree(y)?;
            return Err(Error::NotAdjacent(x, y));
        }
        let dx = g.degree(x)?;
        let dy = g.degree(y)?;
        if dx != dy {
            return Err(Error::DegreeMismatch(dx, dy));
        }
        let exclusive = |a: Vertex, b: Vertex| -> Result<VertexSet> {
            Ok(g.neighbors(a)?
                .iter()
                .copied()
                .filter(|&z| z != b && !g.is_edge(z, b))
                .collect())
        };
        let left = exclusive(x, y)?;
        let right = exclusive(y, x)?;
        debug_assert_eq!(left.len(), right.len());
        let mut cost = Vec::with_capacity(left.len());
        for &u in &left {
            let levels = g.bfs_levels(u, Some(3))?;
            let row: Result<Vec<usize>> = right
                .iter()
                .map(|&v| levels[v].ok_or(Error::InfiniteDistance))
                .collect();
            cost.push(row?);
        }
        Ok(AssignmentInstance { left, right, cost })
    }
}

/// Minimum total cost of a perfect assignment, by successive shortest
/// augmenting paths. Exact over integer costs.
pub fn min_assignment_cost(cost: &[Vec<usize>]) -> Result<u64> {
    let n = cost.len();
    for row in cost {
        if row.len() != n {
            return Err(Error::NonSquareInstance(n, row.len()));
        }
    }
    if n == 0 {
        return Ok(0);
    }
    let mut match_r: Vec<Option<usize>> = vec![None; n]; // column -> row
    let mut total: i64 = 0;
    for s in 0..n {
        // Bellman-Ford over columns in the residual graph rooted at row s.
        let inf = i64::MAX;
        let mut dist: Vec<i64> = (0..n).map(|j| cost[s][j] as i64).collect();
        let mut back: Vec<Option<usize>> = vec![None; n]; // previous column on path
        loop {
            let mut improved = false;
            for j in 0..n {
                if dist[j] == inf {
                    continue;
                }
                if let Some(i) = match_r[j] {
                    for j2 in 0..n {
                        let nd = dist[j] - cost[i][j] as i64 + cost[i][j2] as i64;
                        if nd < dist[j2] {
                            dist[j2] = nd;
                            back[j2] = Some(j);
                            improved = true;
                        }
                    }
                }
            }
            if !improved {
                break;
            }
        }
        let end = (0..n)
            .filter(|&j| match_r[j].is_none())
            .min_by_key(|&j| (dist[j], j))
            .expect("free column exists");
        total += dist[end];
        // Flip matched edges along the augmenting path.
        let mut j = end;
        loop {
            match back[j] {
                Some(prev) => {
                    match_r[j] = match_r[prev];
                    j = prev;
                }
                None => {
                    match_r[j] = Some(s);
                    break;
                }
            }
        }
    }
    Ok(total as u64)
}

/// Exact minimum-cost perfect matching with the lexicographically least
/// matching among optima: `matching[i]` is the column assigned to row i.
pub fn solve_assignment(instance: &AssignmentInstance) -> Result<(u64, Vec<usize>)> {
    let n = instance.cost.len();
    let opt = min_assignment_cost(&instance.cost)?;
    let mut matching = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut fixed_cost: u64 = 0;
    for i in 0..n {
        let mut chosen = None;
        for j in 0..n {
            if used[j] {
                continue;
            }
            // Cost of the best completion with row i forced to column j.
            let sub: Vec<Vec<usize>> = ((i + 1)..n)
                .map(|r| {
                    (0..n)
                        .filter(|&c| !used[c] && c != j)
                        .map(|c| instance.cost[r][c])
                        .collect()
                })
                .collect();
            let completion = min_assignment_cost(&sub)?;
            if fixed_cost + instance.cost[i][j] as u64 + completion == opt {
                chosen = Some(j);
                break;
            }
        }
        let j = chosen.expect("some column completes an optimal matching");
        fixed_cost += instance.cost[i][j] as u64;
        used[j] = true;
        matching.push(j);
    }
    Ok((opt, matching))
}

/// Lin-Lu-Yau curvature of an equal-degree edge via the assignment
/// formula `κ(x,y) = (d + 1 - min_φ Σ d(z, φ(z))) / d`.
pub fn lly_equal_degree(g: &Graph, x: Vertex, y: Vertex) -> Result<LLYCurvature> {
    let instance = AssignmentInstance::for_edge(g, x, y)?;
    let d = g.degree(x)?;
    let transported = min_assignment_cost(&instance.cost)?;
    let kappa = Rational::new(
        BigInt::from(d as i64 + 1 - transported as i64),
        BigInt::from(d),
    );
    Ok(LLYCurvature { x, y, kappa })
}
