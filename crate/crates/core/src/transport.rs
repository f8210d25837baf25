//! Exact optimal transport between sparse rational measures on a graph.
//!
//! Masses are scaled to integers by the least common multiple of their
//! denominators and the resulting transportation problem is solved by
//! successive shortest paths on the bipartite support graph, so every
//! returned value is an exact rational.

use std::collections::BTreeMap;

use num::{BigInt, Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::rational::Rational;

/// Sparse probability measure: vertex -> positive rational mass, summing to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbMeasure {
    masses: BTreeMap<Vertex, Rational>,
}

impl ProbMeasure {
    pub fn new(entries: impl IntoIterator<Item = (Vertex, Rational)>) -> Result<ProbMeasure> {
        let mut masses = BTreeMap::new();
        let mut total = Rational::zero();
        for (v, m) in entries {
            if m.is_negative() {
                return Err(Error::InvalidInput(format!("negative mass {m} at vertex {v}")));
            }
            if m.is_zero() {
                continue;
            }
            total += &m;
            if masses.insert(v, m).is_some() {
                return Err(Error::InvalidInput(format!("duplicate mass entry for vertex {v}")));
            }
        }
        if !total.is_one() {
            return Err(Error::MassMismatch(total.to_string(), "1".into()));
        }
        Ok(ProbMeasure { masses })
    }

    pub fn point_mass(v: Vertex) -> ProbMeasure {
        ProbMeasure { masses: BTreeMap::from([(v, Rational::one())]) }
    }

    pub fn mass(&self, v: Vertex) -> Rational {
        self.masses.get(&v).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> Vec<Vertex> {
        self.masses.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, &Rational)> {
        self.masses.iter().map(|(&v, m)| (v, m))
    }
}

/// The lazy-random-walk measure `μ_x^α`: mass `α` at `x`, `(1-α)/d_x`
/// at each neighbor.
pub fn vertex_measure(g: &Graph, x: Vertex, alpha: &Rational) -> Result<ProbMeasure> {
    if alpha.is_negative() || alpha > &Rational::one() {
        return Err(Error::AlphaOutOfRange(alpha.to_string()));
    }
    let neighbors = g.neighbors(x)?;
    if neighbors.is_empty() {
        return Err(Error::IsolatedVertex(x));
    }
    let spread = (Rational::one() - alpha) / Rational::from_integer(BigInt::from(neighbors.len()));
    let mut entries = vec![(x, alpha.clone())];
    entries.extend(neighbors.iter().map(|&v| (v, spread.clone())));
    ProbMeasure::new(entries)
}

/// Coupling of two measures: sparse map (source vertex, target vertex) ->
/// positive mass, with exact marginals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransportPlan {
    entries: BTreeMap<(Vertex, Vertex), Rational>,
    source: ProbMeasure,
    target: ProbMeasure,
}

impl TransportPlan {
    pub fn entries(&self) -> impl Iterator<Item = (Vertex, Vertex, &Rational)> {
        self.entries.iter().map(|(&(u, v), m)| (u, v, m))
    }

    pub fn mass(&self, u: Vertex, v: Vertex) -> Rational {
        self.entries.get(&(u, v)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn source(&self) -> &ProbMeasure {
        &self.source
    }

    pub fn target(&self) -> &ProbMeasure {
        &self.target
    }

    /// Total cost `Σ d(u,v) π(u,v)` under the graph metric.
    pub fn cost(&self, g: &Graph) -> Result<Rational> {
        let dist = support_distances(g, &plan_sources(&self.entries), &plan_targets(&self.entries))?;
        let mut total = Rational::zero();
        for (u, v, m) in self.entries() {
            total += Rational::from_integer(BigInt::from(dist.get(u, v))) * m;
        }
        Ok(total)
    }

    /// Checks row and column sums against the coupled measures, exactly.
    pub fn marginals_exact(&self) -> bool {
        let mut rows: BTreeMap<Vertex, Rational> = BTreeMap::new();
        let mut cols: BTreeMap<Vertex, Rational> = BTreeMap::new();
        for (u, v, m) in self.entries() {
            *rows.entry(u).or_insert_with(Rational::zero) += m;
            *cols.entry(v).or_insert_with(Rational::zero) += m;
        }
        self.source.iter().all(|(v, m)| rows.get(&v) == Some(m))
            && self.target.iter().all(|(v, m)| cols.get(&v) == Some(m))
            && rows.len() == self.source.support().len()
            && cols.len() == self.target.support().len()
    }

    /// JSON list of {from, to, mass} records sorted by (from, to).
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.entries()
                .map(|(u, v, m)| {
                    serde_json::json!({ "from": u, "to": v, "mass": m.to_string() })
                })
                .collect(),
        )
    }
}

fn plan_sources(entries: &BTreeMap<(Vertex, Vertex), Rational>) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = entries.keys().map(|&(u, _)| u).collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn plan_targets(entries: &BTreeMap<(Vertex, Vertex), Rational>) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = entries.keys().map(|&(_, v)| v).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Pairwise distances between two support sets, as a dense matrix indexed
/// by position in the sorted supports.
struct SupportDistances {
    from_index: BTreeMap<Vertex, usize>,
    to_index: BTreeMap<Vertex, usize>,
    matrix: Vec<Vec<usize>>,
}

impl SupportDistances {
    fn get(&self, u: Vertex, v: Vertex) -> usize {
        self.matrix[self.from_index[&u]][self.to_index[&v]]
    }
}

fn support_distances(g: &Graph, from: &[Vertex], to: &[Vertex]) -> Result<SupportDistances> {
    let mut matrix = Vec::with_capacity(from.len());
    for &u in from {
        let levels = g.bfs_levels(u, None)?;
        let row: Result<Vec<usize>> = to
            .iter()
            .map(|&v| levels[v].ok_or(Error::InfiniteDistance))
            .collect();
        matrix.push(row?);
    }
    Ok(SupportDistances {
        from_index: from.iter().enumerate().map(|(i, &u)| (u, i)).collect(),
        to_index: to.iter().enumerate().map(|(j, &v)| (v, j)).collect(),
        matrix,
    })
}

/// Exact min-cost transportation between integer supplies and demands.
/// Successive shortest paths with Dijkstra over reduced costs (Johnson
/// potentials); deterministic by fixed vertex ordering and lexicographic
/// path choice. Node order: sources 0..m, sinks m..m+k.
fn min_cost_transport(
    supplies: &[BigInt],
    demands: &[BigInt],
    cost: &[Vec<usize>],
) -> Vec<Vec<BigInt>> {
    let m = supplies.len();
    let k = demands.len();
    let mut flow = vec![vec![BigInt::zero(); k]; m];
    let mut rem_supply = supplies.to_vec();
    let mut rem_demand = demands.to_vec();
    let mut potential = vec![0i64; m + k];
    let inf = i64::MAX;

    loop {
        let active: Vec<usize> = (0..m).filter(|&i| rem_supply[i].is_positive()).collect();
        if active.is_empty() {
            break;
        }
        let mut dist = vec![inf; m + k];
        let mut parent = vec![usize::MAX; m + k];
        let mut done = vec![false; m + k];
        for &i in &active {
            dist[i] = 0;
        }
        loop {
            let Some(u) = (0..m + k)
                .filter(|&u| !done[u] && dist[u] < inf)
                .min_by_key(|&u| (dist[u], u))
            else {
                break;
            };
            done[u] = true;
            if u < m {
                for j in 0..k {
                    let rc = cost[u][j] as i64 + potential[u] - potential[m + j];
                    debug_assert!(rc >= 0);
                    let nd = dist[u] + rc;
                    if nd < dist[m + j] {
                        dist[m + j] = nd;
                        parent[m + j] = u;
                    }
                }
            } else {
                let j = u - m;
                for i in 0..m {
                    if flow[i][j].is_positive() {
                        let rc = -(cost[i][j] as i64) + potential[u] - potential[i];
                        debug_assert!(rc >= 0);
                        let nd = dist[u] + rc;
                        if nd < dist[i] {
                            dist[i] = nd;
                            parent[i] = u;
                        }
                    }
                }
            }
        }
        for u in 0..m + k {
            if dist[u] < inf {
                potential[u] += dist[u];
            }
        }
        let sink = (0..k)
            .filter(|&j| rem_demand[j].is_positive() && dist[m + j] < inf)
            .min_by_key(|&j| (dist[m + j], j))
            .expect("feasible transportation problem");

        // Walk back to the root source, recording arcs.
        let mut path = Vec::new();
        let mut node = m + sink;
        while parent[node] != usize::MAX {
            path.push((parent[node], node));
            node = parent[node];
        }
        let root = node;
        let mut bottleneck = rem_supply[root].clone().min(rem_demand[sink].clone());
        for &(a, b) in &path {
            if a >= m {
                // backward arc sink a -> source b, limited by existing flow
                bottleneck = bottleneck.min(flow[b][a - m].clone());
            }
        }
        debug_assert!(bottleneck.is_positive());
        for &(a, b) in &path {
            if a < m {
                flow[a][b - m] += &bottleneck;
            } else {
                flow[b][a - m] -= &bottleneck;
            }
        }
        rem_supply[root] -= &bottleneck;
        rem_demand[sink] -= &bottleneck;
    }
    flow
}

/// Solves the transportation problem between two raw nonneg. rational
/// marginals of equal total mass. Returns the sparse optimal coupling.
fn solve_raw(
    g: &Graph,
    m1: &BTreeMap<Vertex, Rational>,
    m2: &BTreeMap<Vertex, Rational>,
) -> Result<BTreeMap<(Vertex, Vertex), Rational>> {
    let total1: Rational = m1.values().sum();
    let total2: Rational = m2.values().sum();
    if total1 != total2 {
        return Err(Error::MassMismatch(total1.to_string(), total2.to_string()));
    }
    if total1.is_zero() {
        return Ok(BTreeMap::new());
    }
    let from: Vec<Vertex> = m1.keys().copied().collect();
    let to: Vec<Vertex> = m2.keys().copied().collect();
    let dist = support_distances(g, &from, &to)?;

    let mut scale = BigInt::one();
    for mass in m1.values().chain(m2.values()) {
        scale = scale.lcm(mass.denom());
    }
    let scaled = |mass: &Rational| -> BigInt { (mass * Rational::from_integer(scale.clone())).to_integer() };
    let supplies: Vec<BigInt> = from.iter().map(|v| scaled(&m1[v])).collect();
    let demands: Vec<BigInt> = to.iter().map(|v| scaled(&m2[v])).collect();
    let cost: Vec<Vec<usize>> = (0..from.len())
        .map(|i| (0..to.len()).map(|j| dist.matrix[i][j]).collect())
        .collect();

    let flow = min_cost_transport(&supplies, &demands, &cost);
    let scale_rat = Rational::from_integer(scale);
    let mut entries = BTreeMap::new();
    for (i, &u) in from.iter().enumerate() {
        for (j, &v) in to.iter().enumerate() {
            if flow[i][j].is_positive() {
                entries.insert((u, v), Rational::from_integer(flow[i][j].clone()) / &scale_rat);
            }
        }
    }
    Ok(entries)
}

/// An optimal transport plan attaining `W_1(mu1, mu2)`.
pub fn optimal_plan(g: &Graph, mu1: &ProbMeasure, mu2: &ProbMeasure) -> Result<TransportPlan> {
    let m1: BTreeMap<Vertex, Rational> = mu1.iter().map(|(v, m)| (v, m.clone())).collect();
    let m2: BTreeMap<Vertex, Rational> = mu2.iter().map(|(v, m)| (v, m.clone())).collect();
    Ok(TransportPlan {
        entries: solve_raw(g, &m1, &m2)?,
        source: mu1.clone(),
        target: mu2.clone(),
    })
}

/// Exact Wasserstein-1 distance under the graph metric.
pub fn wasserstein(g: &Graph, mu1: &ProbMeasure, mu2: &ProbMeasure) -> Result<Rational> {
    optimal_plan(g, mu1, mu2)?.cost(g)
}

/// An optimal plan that additionally keeps all shared mass in place:
/// `π(z,z) = min(μ1(z), μ2(z))` for every vertex z. The leftover measures
/// have disjoint supports and are coupled by a fresh transportation solve.
pub fn diagonal_fixed_plan(g: &Graph, mu1: &ProbMeasure, mu2: &ProbMeasure) -> Result<TransportPlan> {
    let mut entries = BTreeMap::new();
    let mut r1: BTreeMap<Vertex, Rational> = BTreeMap::new();
    let mut r2: BTreeMap<Vertex, Rational> = BTreeMap::new();
    for (v, m) in mu1.iter() {
        let shared = m.clone().min(mu2.mass(v));
        if shared.is_positive() {
            entries.insert((v, v), shared.clone());
        }
        let left = m - &shared;
        if left.is_positive() {
            r1.insert(v, left);
        }
    }
    for (v, m) in mu2.iter() {
        let left = m - mu1.mass(v).min(m.clone());
        if left.is_positive() {
            r2.insert(v, left);
        }
    }
    entries.extend(solve_raw(g, &r1, &r2)?);
    Ok(TransportPlan { entries, source: mu1.clone(), target: mu2.clone() })
}

/// Mass of a plan bucketed by transport distance 0..3 plus an overflow
/// bucket for distance > 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MassByDistance {
    pub nu: [Rational; 4],
    pub overflow: Rational,
}

impl MassByDistance {
    /// The curvature decomposition `ν0 - ν2 - 2 ν3`.
    pub fn kappa(&self) -> Rational {
        self.nu[0].clone()
            - &self.nu[2]
            - Rational::from_integer(BigInt::from(2)) * &self.nu[3]
    }

    pub fn total(&self) -> Rational {
        self.nu.iter().sum::<Rational>() + &self.overflow
    }
}

pub fn mass_by_distance(g: &Graph, plan: &TransportPlan) -> Result<MassByDistance> {
    let sources: Vec<Vertex> = plan_sources(&plan.entries);
    let targets: Vec<Vertex> = plan_targets(&plan.entries);
    let dist = support_distances(g, &sources, &targets)?;
    let mut nu = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
    let mut overflow = Rational::zero();
    for (u, v, m) in plan.entries() {
        match dist.get(u, v) {
            d @ 0..=3 => nu[d] += m,
            _ => overflow += m,
        }
    }
    Ok(MassByDistance { nu, overflow })
}
