//! Ollivier-Ricci curvature at arbitrary idleness, Lin-Lu-Yau curvature
//! through exact tail linearity, and the full idleness function as a
//! piecewise-linear object.

use num::{BigInt, One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::rational::Rational;
use crate::transport::{vertex_measure, wasserstein};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCurvature {
    pub x: Vertex,
    pub y: Vertex,
    pub alpha: Rational,
    pub kappa: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LLYCurvature {
    pub x: Vertex,
    pub y: Vertex,
    pub kappa: Rational,
}

fn require_edge(g: &Graph, x: Vertex, y: Vertex) -> Result<()> {
    g.degree(x)?;
    g.degree(y)?;
    if !g.is_edge(x, y) {
        return Err(Error::NotAdjacent(x, y));
    }
    Ok(())
}

/// `κ_α(x,y) = 1 - W_1(μ_x^α, μ_y^α)` for an edge x ~ y.
pub fn kappa_alpha(g: &Graph, x: Vertex, y: Vertex, alpha: &Rational) -> Result<EdgeCurvature> {
    require_edge(g, x, y)?;
    let mu_x = vertex_measure(g, x, alpha)?;
    let mu_y = vertex_measure(g, y, alpha)?;
    let kappa = Rational::one() - wasserstein(g, &mu_x, &mu_y)?;
    Ok(EdgeCurvature { x, y, alpha: alpha.clone(), kappa })
}

/// Lin-Lu-Yau curvature via the tail-linearity theorem: the idleness
/// function is linear on [1/(max(d_x,d_y)+1), 1] and vanishes at 1, so
/// one exact transport solve at the left end of that interval suffices.
pub fn kappa_lly(g: &Graph, x: Vertex, y: Vertex) -> Result<LLYCurvature> {
    require_edge(g, x, y)?;
    let d = g.degree(x)?.max(g.degree(y)?);
    let alpha_star = Rational::new(BigInt::one(), BigInt::from(d + 1));
    let at_star = kappa_alpha(g, x, y, &alpha_star)?.kappa;
    let kappa = at_star / (Rational::one() - alpha_star);
    Ok(LLYCurvature { x, y, kappa })
}

/// Piecewise-linear function on [0,1] given by its breakpoints
/// ((α_i, value_i)), strictly increasing in α, spanning 0..=1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiecewiseLinearFn {
    breakpoints: Vec<(Rational, Rational)>,
}

impl PiecewiseLinearFn {
    pub fn breakpoints(&self) -> &[(Rational, Rational)] {
        &self.breakpoints
    }

    pub fn piece_count(&self) -> usize {
        self.breakpoints.len() - 1
    }

    pub fn eval(&self, alpha: &Rational) -> Result<Rational> {
        if alpha.is_negative() || alpha > &Rational::one() {
            return Err(Error::AlphaOutOfRange(alpha.to_string()));
        }
        let bps = &self.breakpoints;
        for w in bps.windows(2) {
            let ((a, fa), (b, fb)) = (&w[0], &w[1]);
            if alpha >= a && alpha <= b {
                let t = (alpha - a) / (b - a);
                return Ok(fa + (fb - fa) * t);
            }
        }
        unreachable!("breakpoints span [0, 1]");
    }

    /// CSV rows "alpha,value", one per breakpoint.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("alpha,value\n");
        for (a, v) in &self.breakpoints {
            out.push_str(&format!("{a},{v}\n"));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.breakpoints
                .iter()
                .map(|(a, v)| serde_json::json!({ "alpha": a.to_string(), "value": v.to_string() }))
                .collect(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Line {
    slope: Rational,
    intercept: Rational,
}

impl Line {
    fn through(a: &Rational, fa: &Rational, b: &Rational, fb: &Rational) -> Line {
        let slope = (fb - fa) / (b - a);
        let intercept = fa - &slope * a;
        Line { slope, intercept }
    }

    fn eval(&self, alpha: &Rational) -> Rational {
        &self.slope * alpha + &self.intercept
    }

    fn intersect(&self, other: &Line) -> Option<Rational> {
        if self.slope == other.slope {
            return None;
        }
        Some((&other.intercept - &self.intercept) / (&self.slope - &other.slope))
    }
}

#[derive(Debug)]
enum Segment {
    Linear { a: Rational, b: Rational, line: Line },
    Kink { a: Rational, b: Rational },
}

fn bisect(
    f: &mut dyn FnMut(&Rational) -> Result<Rational>,
    a: Rational,
    fa: Rational,
    b: Rational,
    fb: Rational,
    width_min: &Rational,
    out: &mut Vec<Segment>,
) -> Result<()> {
    let two = Rational::from_integer(BigInt::from(2));
    let mid = (&a + &b) / &two;
    let fmid = f(&mid)?;
    let chord = (&fa + &fb) / &two;
    // Concavity: midpoint equality certifies linearity on the whole interval.
    if fmid == chord {
        let line = Line::through(&a, &fa, &b, &fb);
        out.push(Segment::Linear { a, b, line });
        return Ok(());
    }
    if &b - &a <= *width_min {
        out.push(Segment::Kink { a, b });
        return Ok(());
    }
    bisect(f, a, fa, mid.clone(), fmid.clone(), width_min, out)?;
    bisect(f, mid, fmid, b, fb, width_min, out)
}

/// The full idleness function α ↦ κ_α(x, y) as an exact piecewise-linear
/// object. The tail [1/(max(d_x,d_y)+1), 1] is linear with value 0 at 1;
/// the head is resolved by concavity-driven bisection with breakpoints
/// recovered as intersections of adjacent fitted lines.
pub fn idleness_function(g: &Graph, x: Vertex, y: Vertex) -> Result<PiecewiseLinearFn> {
    require_edge(g, x, y)?;
    let dx = g.degree(x)?;
    let dy = g.degree(y)?;
    let d = dx.max(dy);
    let alpha_star = Rational::new(BigInt::one(), BigInt::from(d + 1));
    let lly = kappa_lly(g, x, y)?.kappa;
    let tail = Line {
        slope: -lly.clone(),
        intercept: lly.clone(),
    };

    // Breakpoint denominators are bounded by quantities built from the mass
    // denominators; exceeding the bound is reported, never approximated.
    let bound = BigInt::from(4) * dx * dy * (dx + 1) * (dy + 1);
    let width_min = Rational::new(BigInt::one(), &bound * &bound * 2);

    let mut f = |alpha: &Rational| -> Result<Rational> { Ok(kappa_alpha(g, x, y, alpha)?.kappa) };
    let f0 = f(&Rational::zero())?;
    let f_star = tail.eval(&alpha_star);

    let mut segments = Vec::new();
    bisect(&mut f, Rational::zero(), f0.clone(), alpha_star.clone(), f_star, &width_min, &mut segments)?;
    segments.push(Segment::Linear { a: alpha_star.clone(), b: Rational::one(), line: tail });

    // Merge collinear runs and resolve kink intervals via neighbor lines.
    let mut pieces: Vec<(Rational, Rational, Line)> = Vec::new();
    let mut pending_kink: Option<(Rational, Rational)> = None;
    for seg in segments {
        match seg {
            Segment::Linear { a, b, line } => {
                if let Some((ka, kb)) = pending_kink.take() {
                    let left = pieces.last_mut().ok_or_else(|| {
                        Error::IdlenessConvergence(ka.to_string(), kb.to_string())
                    })?;
                    let cross = left
                        .2
                        .intersect(&line)
                        .filter(|c| *c >= ka && *c <= kb)
                        .ok_or_else(|| Error::IdlenessConvergence(ka.to_string(), kb.to_string()))?;
                    left.1 = cross.clone();
                    pieces.push((cross, b, line));
                } else if let Some(last) = pieces.last_mut() {
                    if last.2 == line {
                        last.1 = b;
                    } else {
                        pieces.push((a, b, line));
                    }
                } else {
                    pieces.push((a, b, line));
                }
            }
            Segment::Kink { a, b } => {
                if pending_kink.is_some() {
                    return Err(Error::IdlenessConvergence(a.to_string(), b.to_string()));
                }
                pending_kink = Some((a, b));
            }
        }
    }
    if let Some((ka, kb)) = pending_kink {
        return Err(Error::IdlenessConvergence(ka.to_string(), kb.to_string()));
    }

    let mut breakpoints = Vec::with_capacity(pieces.len() + 1);
    breakpoints.push((Rational::zero(), f0));
    for (_, end, line) in &pieces {
        breakpoints.push((end.clone(), line.eval(end)));
    }
    Ok(PiecewiseLinearFn { breakpoints })
}

/// Minimum Lin-Lu-Yau curvature over all edges, with the lexicographically
/// least witnessing edge. Edges are evaluated in parallel; the reduction is
/// deterministic.
pub fn ricci_lower(g: &Graph) -> Result<LLYCurvature> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(Error::NoEdges);
    }
    let per_edge: Vec<LLYCurvature> = edges
        .par_iter()
        .map(|&(x, y)| kappa_lly(g, x, y))
        .collect::<Result<_>>()?;
    Ok(per_edge
        .into_iter()
        .min_by(|a, b| a.kappa.cmp(&b.kappa).then((a.x, a.y).cmp(&(b.x, b.y))))
        .unwrap())
}
