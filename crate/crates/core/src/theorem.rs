//! Executable checks of the degree-threshold theorem, the diameter
//! lemma, the sharpness construction, and the key proof inequality,
//! plus random and exhaustive falsification sweeps.

use num::{BigInt, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::assignment::lly_equal_degree;
use crate::curvature::{kappa_lly, ricci_lower};
use crate::error::{Error, Result};
use crate::graph::{
    generate_sharpness, random_min_degree_graph, write_edge_list, Distance, Graph, Vertex,
};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub theorem: String,
    /// False when the check's precondition does not hold (e.g. the proof
    /// bound on a graph of diameter > 2); such reports are never violations.
    pub applicable: bool,
    pub hypothesis_holds: bool,
    pub conclusion_holds: bool,
    pub witness_edge: Option<(Vertex, Vertex)>,
    pub witness_kappa: Option<Rational>,
    /// Edge-list serialization of the graph, attached on violation so the
    /// finding is replayable.
    pub witness_graph: Option<String>,
    pub details: Vec<(String, String)>,
}

impl TheoremReport {
    pub fn violation(&self) -> bool {
        self.applicable && self.hypothesis_holds && !self.conclusion_holds
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "theorem": self.theorem,
            "applicable": self.applicable,
            "hypothesis_holds": self.hypothesis_holds,
            "conclusion_holds": self.conclusion_holds,
            "violation": self.violation(),
            "witness_edge": self.witness_edge.map(|(x, y)| vec![x, y]),
            "witness_kappa": self.witness_kappa.as_ref().map(|k| k.to_string()),
            "witness_graph": self.witness_graph,
            "details": self.details.iter().cloned().collect::<std::collections::BTreeMap<_, _>>(),
        })
    }
}

/// Degree threshold: δ(G) ≥ 2n/3 - 1 (tested exactly as 3(δ+1) ≥ 2n)
/// implies Ric(G) ≥ 0.
pub fn check_degree_threshold(g: &Graph) -> Result<TheoremReport> {
    let n = g.vertex_count();
    let delta = g.min_degree()?;
    let hypothesis_holds = 3 * (delta + 1) >= 2 * n;
    let min = ricci_lower(g)?;
    let conclusion_holds = !min.kappa.is_negative();
    let violation = hypothesis_holds && !conclusion_holds;
    Ok(TheoremReport {
        theorem: "degree_threshold".into(),
        applicable: true,
        hypothesis_holds,
        conclusion_holds,
        witness_edge: Some((min.x, min.y)),
        witness_kappa: Some(min.kappa),
        witness_graph: violation.then(|| write_edge_list(g)),
        details: vec![
            ("n".into(), n.to_string()),
            ("min_degree".into(), delta.to_string()),
        ],
    })
}

/// Diameter lemma: 2δ(G) ≥ n - 1 implies diam(G) ≤ 2.
pub fn check_diameter_lemma(g: &Graph) -> Result<TheoremReport> {
    let n = g.vertex_count();
    let delta = g.min_degree()?;
    let diam = g.diameter()?;
    let hypothesis_holds = 2 * delta >= n.saturating_sub(1);
    let conclusion_holds = diam <= Distance::Finite(2);
    let violation = hypothesis_holds && !conclusion_holds;
    Ok(TheoremReport {
        theorem: "diameter_lemma".into(),
        applicable: true,
        hypothesis_holds,
        conclusion_holds,
        witness_edge: None,
        witness_kappa: None,
        witness_graph: violation.then(|| write_edge_list(g)),
        details: vec![
            ("n".into(), n.to_string()),
            ("min_degree".into(), delta.to_string()),
            ("diameter".into(), diam.to_string()),
        ],
    })
}

/// Sharpness family: for l ≥ 2 the construction has n = 3l + 3,
/// δ = 2n/3 - 2, and the designated edge has κ = -1/(2l), verified by
/// both the transport path and the assignment fastpath.
pub fn check_sharpness(l: usize) -> Result<TheoremReport> {
    let (g, ids) = generate_sharpness(l)?;
    let n = g.vertex_count();
    let delta = g.min_degree()?;
    let expected = Rational::new(BigInt::from(-1), BigInt::from(2 * l as i64));

    let transport = kappa_lly(&g, ids.x, ids.y)?.kappa;
    let fastpath = lly_equal_degree(&g, ids.x, ids.y)?.kappa;

    let mut cross_distance_two = true;
    for i in 0..=l {
        let levels = g.bfs_levels(ids.x_start + i, Some(3))?;
        for j in 0..=l {
            if levels[ids.y_start + j] != Some(2) {
                cross_distance_two = false;
            }
        }
    }

    let structure_ok = n == 3 * l + 3
        && delta == 2 * l
        && 3 * (delta + 2) == 2 * n
        && g.degree(ids.x)? == g.degree(ids.y)?
        && cross_distance_two;
    let conclusion_holds = structure_ok
        && transport == expected
        && fastpath == expected
        && transport.is_negative();

    Ok(TheoremReport {
        theorem: "sharpness".into(),
        applicable: true,
        hypothesis_holds: true,
        conclusion_holds,
        witness_edge: Some((ids.x, ids.y)),
        witness_kappa: Some(transport.clone()),
        witness_graph: (!conclusion_holds).then(|| write_edge_list(&g)),
        details: vec![
            ("l".into(), l.to_string()),
            ("n".into(), n.to_string()),
            ("min_degree".into(), delta.to_string()),
            ("kappa_transport".into(), transport.to_string()),
            ("kappa_fastpath".into(), fastpath.to_string()),
            ("kappa_expected".into(), expected.to_string()),
        ],
    })
}

/// Proof inequality: on diameter ≤ 2 graphs, every edge satisfies
/// κ(x,y) ≥ (2|N_xy| + 3)/max(d_x,d_y) - 1.
pub fn check_proof_bound(g: &Graph, x: Vertex, y: Vertex) -> Result<TheoremReport> {
    if !g.is_edge(x, y) {
        g.degree(x)?;
        g.degree(y)?;
        return Err(Error::NotAdjacent(x, y));
    }
    let applicable = g.diameter()? <= Distance::Finite(2);
    let (hypothesis_holds, conclusion_holds, kappa, bound) = if applicable {
        let nxy = g.common_neighbors(x, y)?.len();
        let dmax = g.degree(x)?.max(g.degree(y)?);
        let bound = Rational::new(BigInt::from(2 * nxy as i64 + 3), BigInt::from(dmax))
            - Rational::from_integer(BigInt::from(1));
        let kappa = kappa_lly(g, x, y)?.kappa;
        (true, kappa >= bound, Some(kappa), Some(bound))
    } else {
        (false, false, None, None)
    };
    let violation = applicable && hypothesis_holds && !conclusion_holds;
    Ok(TheoremReport {
        theorem: "proof_bound".into(),
        applicable,
        hypothesis_holds,
        conclusion_holds,
        witness_edge: Some((x, y)),
        witness_kappa: kappa,
        witness_graph: violation.then(|| write_edge_list(g)),
        details: bound
            .map(|b| vec![("bound".into(), b.to_string())])
            .unwrap_or_default(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    Threshold,
    Diameter,
    ProofBound,
}

impl SweepMode {
    fn min_degree_for(self, n: usize) -> usize {
        match self {
            // exactly the theorem hypothesis: δ ≥ 2n/3 - 1
            SweepMode::Threshold => (2 * n).saturating_sub(3).div_ceil(3),
            // the lemma hypothesis, which also makes the proof bound applicable
            SweepMode::Diameter | SweepMode::ProofBound => n.saturating_sub(1).div_ceil(2),
        }
    }
}

fn sample_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&(index as u64).to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

/// Random falsification sweep: each sample draws a size, generates a
/// graph meeting the mode's hypothesis, and runs the corresponding check.
/// Samples own independent RNG streams, so results are identical at any
/// thread count.
pub fn sweep_random(
    n_min: usize,
    n_max: usize,
    samples: usize,
    seed: u64,
    mode: SweepMode,
) -> Result<Vec<TheoremReport>> {
    if n_min > n_max || n_min < 2 || samples == 0 {
        return Err(Error::InvalidParameter(format!(
            "sweep needs 2 <= n_min <= n_max and samples >= 1, got [{n_min}, {n_max}] x {samples}"
        )));
    }
    (0..samples)
        .into_par_iter()
        .map(|idx| {
            let mut rng = sample_rng(seed, idx);
            let n = rng.random_range(n_min..=n_max);
            let delta_min = mode.min_degree_for(n);
            let g = random_min_degree_graph(n, delta_min, rng.random())?;
            let mut report = match mode {
                SweepMode::Threshold => check_degree_threshold(&g)?,
                SweepMode::Diameter => check_diameter_lemma(&g)?,
                SweepMode::ProofBound => {
                    let mut worst: Option<TheoremReport> = None;
                    for (x, y) in g.edges() {
                        let r = check_proof_bound(&g, x, y)?;
                        if r.violation() {
                            worst = Some(r);
                            break;
                        }
                        if worst.is_none() {
                            worst = Some(r);
                        }
                    }
                    worst.ok_or(Error::NoEdges)?
                }
            };
            report.details.push(("sample".into(), idx.to_string()));
            Ok(report)
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct ExhaustiveSummary {
    pub n: usize,
    pub graphs_total: u64,
    pub hypothesis_count: u64,
    pub violations: Vec<TheoremReport>,
}

/// Checks the degree threshold theorem over every labeled graph on `n`
/// vertices. Kept to n ≤ 7 (2^21 graphs) by construction.
pub fn exhaustive_threshold(n: usize) -> Result<ExhaustiveSummary> {
    if n < 2 || n > 7 {
        return Err(Error::InvalidParameter(format!(
            "exhaustive enumeration supports 2 <= n <= 7, got {n}"
        )));
    }
    let pairs: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let total: u64 = 1 << pairs.len();

    let results: Vec<(u64, Option<TheoremReport>)> = (0..total)
        .into_par_iter()
        .map(|mask| {
            let mut deg = [0usize; 8];
            for (k, &(u, v)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    deg[u] += 1;
                    deg[v] += 1;
                }
            }
            let delta = deg[..n].iter().min().copied().unwrap();
            if 3 * (delta + 1) < 2 * n {
                return Ok((0u64, None));
            }
            let edges: Vec<(Vertex, Vertex)> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::new(n, &edges)?;
            let report = check_degree_threshold(&g)?;
            Ok((1u64, report.violation().then_some(report)))
        })
        .collect::<Result<_>>()?;

    let mut summary = ExhaustiveSummary {
        n,
        graphs_total: total,
        hypothesis_count: 0,
        violations: Vec::new(),
    };
    for (counted, violation) in results {
        summary.hypothesis_count += counted;
        if let Some(v) = violation {
            summary.violations.push(v);
        }
    }
    Ok(summary)
}
