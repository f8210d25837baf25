//! Acceptance suite: one test per criterion, each printing a PASS line
//! with its measured runtime. Run with `cargo test --test acceptance`.

mod support;

use std::time::{Duration, Instant};

use num::{BigInt, One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ricci_core::assignment::lly_equal_degree;
use ricci_core::curvature::{idleness_function, kappa_alpha, kappa_lly};
use ricci_core::graph::{
    generate_sharpness, generate_standard, petersen, random_min_degree_graph, Distance, Graph,
    StandardKind, Vertex,
};
use ricci_core::rational::{rat, Rational};
use ricci_core::theorem::{exhaustive_threshold, sweep_random, SweepMode};
use ricci_core::transport::{
    diagonal_fixed_plan, mass_by_distance, optimal_plan, vertex_measure, wasserstein,
};

use support::{brute_force_wasserstein, random_measure};

/// The shared test corpus: named graphs, sharpness family members, and
/// 100 seeded random graphs on at most 20 vertices.
fn corpus() -> Vec<(String, Graph)> {
    let mut graphs: Vec<(String, Graph)> = vec![
        ("K4".into(), generate_standard(StandardKind::Complete, 4).unwrap()),
        ("K6".into(), generate_standard(StandardKind::Complete, 6).unwrap()),
        ("C5".into(), generate_standard(StandardKind::Cycle, 5).unwrap()),
        ("C6".into(), generate_standard(StandardKind::Cycle, 6).unwrap()),
        ("Q3".into(), generate_standard(StandardKind::Hypercube, 3).unwrap()),
        ("Q4".into(), generate_standard(StandardKind::Hypercube, 4).unwrap()),
        ("Petersen".into(), petersen()),
    ];
    for l in [2usize, 3, 4] {
        graphs.push((format!("sharpness_{l}"), generate_sharpness(l).unwrap().0));
    }
    for i in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE ^ i);
        let n = rng.random_range(4..=20);
        let delta = rng.random_range(1..=4.min(n - 1));
        let g = random_min_degree_graph(n, delta, rng.random()).unwrap();
        graphs.push((format!("random_{i}"), g));
    }
    graphs
}

fn report(criterion: &str, description: &str, elapsed: Duration) {
    println!("criterion {criterion}: PASS ({description}; {:.2}s)", elapsed.as_secs_f64());
}

fn alpha_star(g: &Graph, x: Vertex, y: Vertex) -> Rational {
    let d = g.degree(x).unwrap().max(g.degree(y).unwrap());
    Rational::new(BigInt::one(), BigInt::from(d + 1))
}

#[test]
fn c01_sharpness_family_exactness() {
    let start = Instant::now();
    for l in 2..=12usize {
        let (g, ids) = generate_sharpness(l).unwrap();
        assert_eq!(g.vertex_count(), 3 * l + 3, "l = {l}");
        assert_eq!(g.min_degree().unwrap(), 2 * l, "l = {l}");
        let expected = rat(-1, 2 * l as i64);
        assert_eq!(kappa_lly(&g, ids.x, ids.y).unwrap().kappa, expected, "transport, l = {l}");
        assert_eq!(lly_equal_degree(&g, ids.x, ids.y).unwrap().kappa, expected, "fastpath, l = {l}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "runtime budget: {elapsed:?}");
    report("1", "sharpness l=2..12, both routes, kappa = -1/(2l)", elapsed);
}

#[test]
fn c02_tail_linearity() {
    let start = Instant::now();
    let mut edges_checked = 0usize;
    for (name, g) in corpus() {
        for (x, y) in g.edges() {
            let a_star = alpha_star(&g, x, y);
            let lly = kappa_lly(&g, x, y).unwrap().kappa;
            let mut alphas = vec![a_star.clone()];
            alphas.extend(
                [rat(1, 2), rat(3, 4), rat(9, 10)].into_iter().filter(|a| *a >= a_star),
            );
            for a in alphas {
                let k = kappa_alpha(&g, x, y, &a).unwrap().kappa;
                assert_eq!(
                    k,
                    (Rational::one() - &a) * &lly,
                    "{name} edge ({x},{y}) alpha {a}"
                );
            }
            edges_checked += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "runtime budget: {elapsed:?}");
    report("2", &format!("tail linearity on {edges_checked} edges"), elapsed);
}

#[test]
fn c03_theorem_exhaustive_and_random() {
    let start = Instant::now();
    for n in [4usize, 5, 6] {
        let summary = exhaustive_threshold(n).unwrap();
        assert!(
            summary.violations.is_empty(),
            "violations among {} labeled graphs on {n} vertices",
            summary.graphs_total
        );
    }
    let reports = sweep_random(7, 30, 1000, 0xA11CE, SweepMode::Threshold).unwrap();
    assert_eq!(reports.len(), 1000);
    for r in &reports {
        assert!(r.hypothesis_holds, "sweep generates hypothesis-satisfying graphs");
        assert!(!r.violation(), "theorem violated: {:?}", r.details);
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(300), "runtime budget: {elapsed:?}");
    report("3", "exhaustive n=4..6 plus 1000 random samples n in [7,30], zero violations", elapsed);
}

#[test]
fn c04_nu_decomposition_identity() {
    let start = Instant::now();
    for (name, g) in corpus() {
        for (x, y) in g.edges() {
            for a in [Rational::zero(), alpha_star(&g, x, y), rat(1, 2)] {
                let mu_x = vertex_measure(&g, x, &a).unwrap();
                let mu_y = vertex_measure(&g, y, &a).unwrap();
                let plan = optimal_plan(&g, &mu_x, &mu_y).unwrap();
                let nu = mass_by_distance(&g, &plan).unwrap();
                assert_eq!(nu.total(), Rational::one(), "{name} ({x},{y}) alpha {a}");
                assert!(nu.overflow.is_zero(), "{name} ({x},{y}) alpha {a}");
                let kappa = kappa_alpha(&g, x, y, &a).unwrap().kappa;
                assert_eq!(nu.kappa(), kappa, "{name} ({x},{y}) alpha {a}");
            }
        }
    }
    let elapsed = start.elapsed();
    report("4", "nu sums to 1, no overflow, kappa = nu0 - nu2 - 2 nu3", elapsed);
}

#[test]
fn c05_dontmove_lemma() {
    let start = Instant::now();
    for i in 0..200u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(0xD017 ^ i);
        let n = rng.random_range(4..=16);
        let delta = rng.random_range(1..=3.min(n - 1));
        let g = random_min_degree_graph(n, delta, rng.random()).unwrap();
        let edges = g.edges();
        let (x, y) = edges[rng.random_range(0..edges.len())];
        let q = rng.random_range(1..=12u64);
        let p = rng.random_range(0..=q);
        let a = Rational::new(BigInt::from(p), BigInt::from(q));
        let mu_x = vertex_measure(&g, x, &a).unwrap();
        let mu_y = vertex_measure(&g, y, &a).unwrap();
        let plan = diagonal_fixed_plan(&g, &mu_x, &mu_y).unwrap();
        assert!(plan.marginals_exact(), "sample {i}");
        assert_eq!(
            plan.cost(&g).unwrap(),
            wasserstein(&g, &mu_x, &mu_y).unwrap(),
            "diagonal-fixed plan is optimal (sample {i})"
        );
        for v in 0..g.vertex_count() {
            assert_eq!(
                plan.mass(v, v),
                mu_x.mass(v).min(mu_y.mass(v)),
                "diagonal entry at {v} (sample {i})"
            );
        }
    }
    let elapsed = start.elapsed();
    report("5", "200 random triples: diagonal-fixed plan optimal, diagonal = pointwise min", elapsed);
}

#[test]
fn c06_proof_bound_property() {
    let start = Instant::now();
    let mut graphs_checked = 0usize;
    for (name, g) in corpus() {
        if g.diameter().unwrap() > Distance::Finite(2) {
            continue;
        }
        graphs_checked += 1;
        for (x, y) in g.edges() {
            let nxy = g.common_neighbors(x, y).unwrap().len() as i64;
            let dmax = g.degree(x).unwrap().max(g.degree(y).unwrap()) as i64;
            let bound = rat(2 * nxy + 3, dmax) - Rational::one();
            let kappa = kappa_lly(&g, x, y).unwrap().kappa;
            assert!(kappa >= bound, "{name} edge ({x},{y}): {kappa} < {bound}");
        }
    }
    let elapsed = start.elapsed();
    report("6", &format!("proof bound on {graphs_checked} diameter-2 corpus graphs"), elapsed);
}

#[test]
fn c07_concavity_and_h_monotonicity() {
    let start = Instant::now();
    for (name, g) in corpus() {
        for (x, y) in g.edges() {
            let values: Vec<Rational> = (0..=8)
                .map(|k| kappa_alpha(&g, x, y, &rat(k, 8)).unwrap().kappa)
                .collect();
            for k in 1..8usize {
                let two = rat(2, 1);
                assert!(
                    &values[k] * &two >= &values[k - 1] + &values[k + 1],
                    "{name} ({x},{y}): concavity fails at k={k}"
                );
            }
            let mut prev: Option<Rational> = None;
            for (k, v) in values.iter().enumerate().take(8) {
                let h = v / (Rational::one() - rat(k as i64, 8));
                if let Some(p) = &prev {
                    assert!(&h >= p, "{name} ({x},{y}): h decreases at k={k}");
                }
                prev = Some(h);
            }
        }
    }
    let elapsed = start.elapsed();
    report("7", "kappa_alpha concave and h = kappa/(1-alpha) nondecreasing on k/8 grid", elapsed);
}

#[test]
fn c08_idleness_function_fidelity() {
    let start = Instant::now();
    let mut excess_pieces = 0usize;
    let mut edges_checked = 0usize;
    for (name, g) in corpus() {
        for (x, y) in g.edges() {
            let f = idleness_function(&g, x, y).unwrap();
            if f.piece_count() > 3 {
                // structural finding, reported rather than failed
                excess_pieces += 1;
            }
            let mut rng = ChaCha8Rng::seed_from_u64((x as u64) << 32 | y as u64);
            for _ in 0..32 {
                let q = rng.random_range(1..=64u64);
                let p = rng.random_range(0..=q);
                let a = Rational::new(BigInt::from(p), BigInt::from(q));
                assert_eq!(
                    f.eval(&a).unwrap(),
                    kappa_alpha(&g, x, y, &a).unwrap().kappa,
                    "{name} ({x},{y}) probe {a}"
                );
            }
            edges_checked += 1;
        }
    }
    if excess_pieces > 0 {
        println!("criterion 8: FINDING — {excess_pieces} edges with more than 3 linear pieces");
    }
    let elapsed = start.elapsed();
    report(
        "8",
        &format!("idleness function matches 32 probes on each of {edges_checked} edges"),
        elapsed,
    );
}

#[test]
fn c09_known_value_regression() {
    let start = Instant::now();
    // golden values, fixed by the brute-force transport oracle
    for n in 3..=8i64 {
        let g = generate_standard(StandardKind::Complete, n as usize).unwrap();
        assert_eq!(kappa_lly(&g, 0, 1).unwrap().kappa, rat(n, n - 1), "K_{n}");
    }
    let c5 = generate_standard(StandardKind::Cycle, 5).unwrap();
    assert_eq!(kappa_lly(&c5, 0, 1).unwrap().kappa, rat(1, 2), "C_5");
    for n in 6..=12usize {
        let g = generate_standard(StandardKind::Cycle, n).unwrap();
        assert_eq!(kappa_lly(&g, 0, 1).unwrap().kappa, Rational::zero(), "C_{n}");
    }
    for d in 2..=6i64 {
        let g = generate_standard(StandardKind::Hypercube, d as usize).unwrap();
        assert_eq!(kappa_lly(&g, 0, 1).unwrap().kappa, rat(2, d), "Q_{d}");
    }
    let elapsed = start.elapsed();
    report("9", "K_n, C_n, Q_d golden curvature values", elapsed);
}

#[test]
fn c10_transport_oracle_equivalence() {
    let start = Instant::now();
    for i in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(0x0AC1E ^ i);
        let n = rng.random_range(4..=10);
        // min degree at least (n-1)/2 keeps the graph connected
        let g = random_min_degree_graph(n, (n - 1).div_ceil(2), rng.random()).unwrap();
        let vertices: Vec<Vertex> = (0..n).collect();
        let s1 = rng.random_range(1..=6.min(n));
        let s2 = rng.random_range(1..=6.min(n));
        let mu1 = random_measure(&mut rng, &vertices, s1, 8);
        let mu2 = random_measure(&mut rng, &vertices, s2, 8);
        assert_eq!(
            wasserstein(&g, &mu1, &mu2).unwrap(),
            brute_force_wasserstein(&g, &mu1, &mu2),
            "sample {i}"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "runtime budget: {elapsed:?}");
    report("10", "min-cost flow equals exhaustive flow enumeration on 100 measure pairs", elapsed);
}
