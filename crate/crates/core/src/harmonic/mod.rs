//! Harmonic systems: every assigned vertex sits on the segment between its two
//! arc neighbours, every other non-pole vertex at a weighted barycenter of its
//! neighbours, and the three suspensions are pinned to a triangle.

mod verify;

pub use verify::{
    geometric_convex_corners, verify, verify_drawing, CheckKind, CheckResult, Marker,
    VerificationReport, DEFAULT_TOLERANCE,
};

use std::collections::{BTreeMap, VecDeque};

use nalgebra::DMatrix;
use thiserror::Error;

use crate::faa::{arc_classes, FlatAngleAssignment, PseudosegmentFamily};
use crate::geometry::{orient, Point};
use crate::graph::SuspendedGraph;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HarmonicError {
    #[error("pole triangle is degenerate")]
    DegeneratePoleTriangle,
    #[error("assigned vertex {0} has no pair of arc neighbours in its face")]
    AssignedVertexWithoutSegmentNeighbors(usize),
    #[error("suspensions {0:?} are not three distinct outer vertices")]
    InvalidSuspensions([usize; 3]),
    #[error("invalid weight at vertex {0}")]
    InvalidWeight(usize),
    #[error("some vertex cannot reach a pole")]
    Unsolvable,
    #[error("linear system is singular")]
    SingularSystem,
    #[error("residual {0:e} exceeds the bound")]
    Residual(f64),
}

/// Largest relative equation residual accepted from the solver.
pub const RESIDUAL_BOUND: f64 = 1e-9;

/// Equilateral unit pole triangle.
pub fn default_poles() -> [Point; 3] {
    [
        Point::new(0.0, 0.0),
        Point::new(1.0, 0.0),
        Point::new(0.5, 3f64.sqrt() / 2.0),
    ]
}

/// Weights of the harmonic equations. Vertices without an entry use 1/2 on
/// the arc and uniform barycentric weights.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct HarmonicWeights {
    /// Weight of the first arc neighbour of an assigned vertex, in (0, 1).
    pub between: BTreeMap<usize, f64>,
    /// Barycentric weights of an unassigned vertex, aligned with its rotation.
    pub barycentric: BTreeMap<usize, Vec<f64>>,
}

impl HarmonicWeights {
    pub fn uniform() -> Self {
        Self::default()
    }

    pub fn between_weight(&self, v: usize) -> f64 {
        self.between.get(&v).copied().unwrap_or(0.5)
    }

    pub fn barycentric_weights(&self, v: usize, degree: usize) -> Vec<f64> {
        self.barycentric
            .get(&v)
            .cloned()
            .unwrap_or_else(|| vec![1.0 / degree as f64; degree])
    }

    pub fn validate(&self) -> Result<(), HarmonicError> {
        for (&v, &l) in &self.between {
            if !(l > 0.0 && l < 1.0) {
                return Err(HarmonicError::InvalidWeight(v));
            }
        }
        for (&v, ws) in &self.barycentric {
            let sum: f64 = ws.iter().sum();
            if ws.iter().any(|&w| w <= 0.0 || !w.is_finite()) || (sum - 1.0).abs() > 1e-12 {
                return Err(HarmonicError::InvalidWeight(v));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Equation {
    Pole(Point),
    /// `p_v = weight * p_first + (1 - weight) * p_second`.
    Between {
        first: usize,
        second: usize,
        weight: f64,
    },
    /// `p_v = sum of weight * p_u`.
    Barycenter(Vec<(usize, f64)>),
}

impl Equation {
    /// Out-neighbours of the vertex in the dependency digraph.
    pub fn dependencies(&self) -> Vec<usize> {
        match self {
            Equation::Pole(_) => Vec::new(),
            Equation::Between { first, second, .. } => vec![*first, *second],
            Equation::Barycenter(terms) => terms.iter().map(|&(u, _)| u).collect(),
        }
    }
}

/// One equation per vertex; poles are the suspensions.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicSystem {
    pub graph: SuspendedGraph,
    pub equations: Vec<Equation>,
}

impl HarmonicSystem {
    pub fn poles(&self) -> [Point; 3] {
        self.graph.suspensions().map(|s| match self.equations[s] {
            Equation::Pole(p) => p,
            _ => unreachable!("suspensions are poles"),
        })
    }
}

fn check_poles(poles: &[Point; 3]) -> Result<(), HarmonicError> {
    let scale = crate::geometry::diameter(poles);
    if scale == 0.0 || orient(poles[0], poles[1], poles[2]).abs() <= 1e-12 * scale * scale {
        return Err(HarmonicError::DegeneratePoleTriangle);
    }
    Ok(())
}

fn barycenter(
    g: &SuspendedGraph,
    v: usize,
    weights: &HarmonicWeights,
) -> Result<Equation, HarmonicError> {
    let nbrs = g.graph().neighbors(v);
    let ws = weights.barycentric_weights(v, nbrs.len());
    if ws.len() != nbrs.len() {
        return Err(HarmonicError::InvalidWeight(v));
    }
    Ok(Equation::Barycenter(nbrs.iter().copied().zip(ws).collect()))
}

/// Builds the system of an assignment: an assigned vertex lies between the
/// two neighbours that bound its assigned face at that vertex.
pub fn assemble(
    g: &SuspendedGraph,
    faa: &FlatAngleAssignment,
    weights: &HarmonicWeights,
    poles: [Point; 3],
) -> Result<HarmonicSystem, HarmonicError> {
    check_poles(&poles)?;
    weights.validate()?;
    let pg = g.graph();
    let mut equations = Vec::with_capacity(pg.vertex_count());
    for v in 0..pg.vertex_count() {
        let eq = if let Some(i) = g.suspensions().iter().position(|&s| s == v) {
            Equation::Pole(poles[i])
        } else if let Some(f) = faa.face_of(v) {
            if f >= pg.face_count() {
                return Err(HarmonicError::AssignedVertexWithoutSegmentNeighbors(v));
            }
            match pg.corners_at(v, f).as_slice() {
                &[(first, second)] => Equation::Between {
                    first,
                    second,
                    weight: weights.between_weight(v),
                },
                _ => return Err(HarmonicError::AssignedVertexWithoutSegmentNeighbors(v)),
            }
        } else {
            barycenter(g, v, weights)?
        };
        equations.push(eq);
    }
    Ok(HarmonicSystem {
        graph: g.clone(),
        equations,
    })
}

/// Builds the system of a pseudosegment family directly: interior vertices of
/// a pseudosegment lie between their path neighbours.
pub fn assemble_family(
    fam: &PseudosegmentFamily,
    suspensions: [usize; 3],
    weights: &HarmonicWeights,
    poles: [Point; 3],
) -> Result<HarmonicSystem, HarmonicError> {
    check_poles(&poles)?;
    weights.validate()?;
    let g = SuspendedGraph::new(fam.graph().clone(), suspensions)
        .map_err(|_| HarmonicError::InvalidSuspensions(suspensions))?;
    let mut between = BTreeMap::new();
    for s in fam.segments() {
        for w in s.vertices().windows(3) {
            between.insert(w[1], (w[0], w[2]));
        }
    }
    let mut equations = Vec::with_capacity(g.graph().vertex_count());
    for v in 0..g.graph().vertex_count() {
        let eq = if let Some(i) = suspensions.iter().position(|&s| s == v) {
            Equation::Pole(poles[i])
        } else if let Some(&(first, second)) = between.get(&v) {
            Equation::Between {
                first,
                second,
                weight: weights.between_weight(v),
            }
        } else {
            barycenter(&g, v, weights)?
        };
        equations.push(eq);
    }
    Ok(HarmonicSystem {
        graph: g,
        equations,
    })
}

/// Every non-pole reaches a pole in the dependency digraph.
pub fn check_solvability(sys: &HarmonicSystem) -> bool {
    let n = sys.equations.len();
    let mut reverse = vec![Vec::new(); n];
    for (v, eq) in sys.equations.iter().enumerate() {
        for u in eq.dependencies() {
            reverse[u].push(v);
        }
    }
    let mut reached = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n)
        .filter(|&v| matches!(sys.equations[v], Equation::Pole(_)))
        .collect();
    for &p in &queue {
        reached[p] = true;
    }
    while let Some(u) = queue.pop_front() {
        for &v in &reverse[u] {
            if !reached[v] {
                reached[v] = true;
                queue.push_back(v);
            }
        }
    }
    reached.iter().all(|&r| r)
}

/// A solved straight-line drawing.
#[derive(Debug, Clone, PartialEq)]
pub struct Drawing {
    pub graph: SuspendedGraph,
    pub assignment: Option<FlatAngleAssignment>,
    pub points: Vec<Point>,
    /// Largest equation residual relative to the pole triangle diameter.
    pub max_residual: f64,
}

impl Drawing {
    /// Vertex sets of the arcs the drawing has to keep straight.
    pub fn arcs(&self) -> Vec<Vec<usize>> {
        let pg = self.graph.graph();
        let faa = self.assignment.clone().unwrap_or_default();
        arc_classes(pg, &faa)
            .into_iter()
            .map(|edges| {
                let mut vs: Vec<usize> = edges
                    .iter()
                    .flat_map(|&e| {
                        let (a, b) = pg.edges()[e];
                        [a, b]
                    })
                    .collect();
                vs.sort_unstable();
                vs.dedup();
                vs
            })
            .collect()
    }
}

/// Largest residual over all equations, relative to the pole triangle diameter.
pub fn max_residual(sys: &HarmonicSystem, points: &[Point]) -> f64 {
    let scale = crate::geometry::diameter(&sys.poles());
    sys.equations
        .iter()
        .enumerate()
        .map(|(v, eq)| {
            let target = match eq {
                Equation::Pole(p) => *p,
                Equation::Between {
                    first,
                    second,
                    weight,
                } => points[*first] * *weight + points[*second] * (1.0 - weight),
                Equation::Barycenter(terms) => terms
                    .iter()
                    .fold(Point::default(), |acc, &(u, w)| acc + points[u] * w),
            };
            points[v].dist(target) / scale
        })
        .fold(0.0, f64::max)
}

/// Solves both coordinate systems with one LU factorization.
pub fn solve(sys: &HarmonicSystem) -> Result<Drawing, HarmonicError> {
    if !check_solvability(sys) {
        return Err(HarmonicError::Unsolvable);
    }
    let n = sys.equations.len();
    let mut a = DMatrix::<f64>::zeros(n, n);
    let mut rhs = DMatrix::<f64>::zeros(n, 2);
    for (v, eq) in sys.equations.iter().enumerate() {
        a[(v, v)] = 1.0;
        match eq {
            Equation::Pole(p) => {
                rhs[(v, 0)] = p.x;
                rhs[(v, 1)] = p.y;
            }
            Equation::Between {
                first,
                second,
                weight,
            } => {
                a[(v, *first)] -= weight;
                a[(v, *second)] -= 1.0 - weight;
            }
            Equation::Barycenter(terms) => {
                for &(u, w) in terms {
                    a[(v, u)] -= w;
                }
            }
        }
    }
    let sol = a.lu().solve(&rhs).ok_or(HarmonicError::SingularSystem)?;
    let mut points: Vec<Point> = (0..n)
        .map(|v| Point::new(sol[(v, 0)], sol[(v, 1)]))
        .collect();
    // pin the poles exactly
    for (v, eq) in sys.equations.iter().enumerate() {
        if let Equation::Pole(p) = eq {
            points[v] = *p;
        }
    }
    let residual = max_residual(sys, &points);
    if !(residual <= RESIDUAL_BOUND) {
        return Err(HarmonicError::Residual(residual));
    }
    Ok(Drawing {
        graph: sys.graph.clone(),
        assignment: None,
        points,
        max_residual: residual,
    })
}

/// Solves the system of an assignment with the given weights and poles and
/// verifies the result.
pub fn draw(
    g: &SuspendedGraph,
    faa: &FlatAngleAssignment,
    weights: &HarmonicWeights,
    poles: [Point; 3],
) -> Result<(Drawing, VerificationReport), HarmonicError> {
    let sys = assemble(g, faa, weights, poles)?;
    let mut drawing = solve(&sys)?;
    drawing.assignment = Some(faa.clone());
    let report = verify_drawing(&drawing, DEFAULT_TOLERANCE);
    Ok((drawing, report))
}

/// Whether the assignment yields a straight-line triangle representation
/// under default weights and poles. An unsolvable system counts as no.
pub fn is_gfaa(g: &SuspendedGraph, faa: &FlatAngleAssignment) -> Result<bool, HarmonicError> {
    let sys = assemble(g, faa, &HarmonicWeights::uniform(), default_poles())?;
    if !check_solvability(&sys) {
        return Ok(false);
    }
    let mut drawing = match solve(&sys) {
        Ok(d) => d,
        Err(HarmonicError::SingularSystem) => return Ok(false),
        Err(e) => return Err(e),
    };
    drawing.assignment = Some(faa.clone());
    Ok(verify_drawing(&drawing, DEFAULT_TOLERANCE).is_sltr())
}
