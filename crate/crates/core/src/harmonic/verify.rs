use std::f64::consts::{PI, TAU};
use std::fmt;

use super::Drawing;
use crate::faa::OutlineCycle;
use crate::geometry::{ccw_angle, corner_angle, diameter, line_distance, max_angular_gap, Point};
use crate::graph::SuspendedGraph;

/// Geometric cutoff, relative to the pole triangle diameter for lengths and
/// in radians for angles.
pub const DEFAULT_TOLERANCE: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckKind {
    SegmentsStraight,
    OuterTriangle,
    NoConcaveAngles,
    NoDegenerateVertex,
    RotationPreserved,
    NoCrossings,
    NoDegeneracy,
}

impl CheckKind {
    pub const ALL: [CheckKind; 7] = [
        CheckKind::SegmentsStraight,
        CheckKind::OuterTriangle,
        CheckKind::NoConcaveAngles,
        CheckKind::NoDegenerateVertex,
        CheckKind::RotationPreserved,
        CheckKind::NoCrossings,
        CheckKind::NoDegeneracy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::SegmentsStraight => "segments-straight",
            CheckKind::OuterTriangle => "outer-triangle",
            CheckKind::NoConcaveAngles => "no-concave-angles",
            CheckKind::NoDegenerateVertex => "no-degenerate-vertex",
            CheckKind::RotationPreserved => "rotation-preserved",
            CheckKind::NoCrossings => "no-crossings",
            CheckKind::NoDegeneracy => "no-degeneracy",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Set on a failure whose measured quantity is nonzero but inside the cutoff.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Marker {
    DegenerateWithinTolerance,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub kind: CheckKind,
    pub passed: bool,
    pub witness: Option<String>,
    pub marker: Option<Marker>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
    /// Every bounded face has exactly three corners with angle below π.
    pub faces_triangular: bool,
    /// Angle sum around every vertex over its bounded faces.
    pub vertex_angle_sums: Vec<f64>,
    /// Angle sum of every face (zero for the outer face).
    pub face_angle_sums: Vec<f64>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// All seven checks pass and every face is a triangle.
    pub fn is_sltr(&self) -> bool {
        self.all_pass() && self.faces_triangular
    }

    pub fn check(&self, kind: CheckKind) -> &CheckResult {
        self.checks.iter().find(|c| c.kind == kind).unwrap()
    }

    pub fn failed(&self) -> Vec<CheckKind> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.kind)
            .collect()
    }
}

struct Ctx<'a> {
    g: &'a SuspendedGraph,
    p: &'a [Point],
    len_tol: f64,
    ang_tol: f64,
}

fn fail(kind: CheckKind, witness: String, value: f64) -> CheckResult {
    CheckResult {
        kind,
        passed: false,
        witness: Some(witness),
        marker: (value > 0.0).then_some(Marker::DegenerateWithinTolerance),
    }
}

fn pass(kind: CheckKind) -> CheckResult {
    CheckResult {
        kind,
        passed: true,
        witness: None,
        marker: None,
    }
}

fn segments_straight(c: &Ctx, arcs: &[Vec<usize>]) -> CheckResult {
    let kind = CheckKind::SegmentsStraight;
    for (i, arc) in arcs.iter().enumerate() {
        if arc.len() < 3 {
            continue;
        }
        let mut best = (0.0, arc[0], arc[1]);
        for (x, &a) in arc.iter().enumerate() {
            for &b in &arc[x + 1..] {
                let d = c.p[a].dist(c.p[b]);
                if d > best.0 {
                    best = (d, a, b);
                }
            }
        }
        let (len, a, b) = best;
        if len <= c.len_tol {
            return fail(kind, format!("arc {i} collapses to a point"), len);
        }
        for &v in arc {
            let d = line_distance(c.p[v], c.p[a], c.p[b]);
            if d > c.len_tol {
                return fail(kind, format!("vertex {v} is {d:e} off arc {i}"), 0.0);
            }
        }
    }
    pass(kind)
}

fn on_segment(p: Point, a: Point, b: Point, tol: f64) -> bool {
    point_segment_distance(p, a, b) <= tol
}

fn point_segment_distance(p: Point, a: Point, b: Point) -> f64 {
    let ab = b - a;
    let len2 = ab.dot(ab);
    if len2 == 0.0 {
        return p.dist(a);
    }
    let t = ((p - a).dot(ab) / len2).clamp(0.0, 1.0);
    p.dist(a + ab * t)
}

fn outer_triangle(c: &Ctx) -> CheckResult {
    let kind = CheckKind::OuterTriangle;
    let pg = c.g.graph();
    let walk = pg.face_vertices(pg.outer_face());
    let n = walk.len();
    let Some(start) = walk.iter().position(|&v| c.g.is_suspension(v)) else {
        return fail(kind, "no suspension on the outer face".into(), 0.0);
    };
    let mut last = walk[start];
    for k in 1..=n {
        let v = walk[(start + k) % n];
        if c.g.is_suspension(v) {
            last = v;
            continue;
        }
        let next = (1..n)
            .map(|j| walk[(start + k + j) % n])
            .find(|&u| c.g.is_suspension(u))
            .unwrap();
        if !on_segment(c.p[v], c.p[last], c.p[next], c.len_tol) {
            let d = point_segment_distance(c.p[v], c.p[last], c.p[next]);
            return fail(
                kind,
                format!("outer vertex {v} is {d:e} off side {last}-{next}"),
                0.0,
            );
        }
    }
    pass(kind)
}

fn no_concave_angles(c: &Ctx) -> CheckResult {
    let kind = CheckKind::NoConcaveAngles;
    let pg = c.g.graph();
    for v in 0..pg.vertex_count() {
        if c.g.is_suspension(v) {
            continue;
        }
        let targets: Vec<Point> = pg
            .neighbors(v)
            .iter()
            .map(|&u| c.p[u])
            .filter(|q| q.dist(c.p[v]) > c.len_tol)
            .collect();
        let gap = max_angular_gap(c.p[v], &targets);
        if gap > PI + c.ang_tol {
            return fail(kind, format!("vertex {v} has an angular gap of {gap}"), 0.0);
        }
    }
    pass(kind)
}

fn no_degenerate_vertex(c: &Ctx) -> CheckResult {
    let kind = CheckKind::NoDegenerateVertex;
    let pg = c.g.graph();
    for v in 0..pg.vertex_count() {
        let dirs: Vec<(usize, Point)> = pg
            .neighbors(v)
            .iter()
            .map(|&u| (u, c.p[u] - c.p[v]))
            .filter(|(_, d)| d.norm() > c.len_tol)
            .collect();
        for &(_, du) in &dirs {
            let mut on_line = Vec::new();
            let mut worst: f64 = 0.0;
            for &(w, dw) in &dirs {
                let sin = (du.cross(dw) / (du.norm() * dw.norm())).abs();
                if sin <= c.ang_tol {
                    on_line.push(w);
                    worst = worst.max(sin);
                }
            }
            if on_line.len() >= 3 {
                return fail(
                    kind,
                    format!("vertex {v} is on a line with neighbours {on_line:?}"),
                    worst,
                );
            }
        }
    }
    pass(kind)
}

fn angle_sums(c: &Ctx) -> (Vec<f64>, Vec<f64>) {
    let pg = c.g.graph();
    let outer = pg.outer_face();
    let mut by_vertex = vec![0.0; pg.vertex_count()];
    for (v, sum) in by_vertex.iter_mut().enumerate() {
        for k in 0..pg.degree(v) {
            let d = pg.dart_at(v, k);
            if pg.left_face(d) == outer {
                continue;
            }
            let a = pg.neighbors(v)[k];
            let b = pg.neighbors(v)[(k + 1) % pg.degree(v)];
            *sum += corner_angle(c.p[v], c.p[a], c.p[b]);
        }
    }
    let mut by_face = vec![0.0; pg.face_count()];
    for (f, sum) in by_face.iter_mut().enumerate() {
        if f == outer {
            continue;
        }
        for &d in pg.face_darts(f) {
            let v = pg.head(d);
            let (a, b) = (pg.tail(d), pg.head(pg.next_in_face(d)));
            *sum += corner_angle(c.p[v], c.p[a], c.p[b]);
        }
    }
    (by_vertex, by_face)
}

fn rotation_preserved(c: &Ctx, theta_v: &[f64], theta_f: &[f64]) -> CheckResult {
    let kind = CheckKind::RotationPreserved;
    let pg = c.g.graph();
    let outer = pg.outer_face();
    for v in 0..pg.vertex_count() {
        if pg.is_incident(v, outer) {
            continue;
        }
        let tol = c.ang_tol * pg.degree(v).max(1) as f64;
        if (theta_v[v] - TAU).abs() > tol {
            return fail(
                kind,
                format!("angle sum at vertex {v} is {}", theta_v[v]),
                0.0,
            );
        }
    }
    for f in 0..pg.face_count() {
        if f == outer {
            continue;
        }
        let bound = (pg.face_len(f) as f64 - 2.0) * PI;
        if theta_f[f] > bound + c.ang_tol * pg.face_len(f) as f64 {
            return fail(
                kind,
                format!("angle sum of face {f} is {} > {bound}", theta_f[f]),
                0.0,
            );
        }
    }
    // neighbours appear around each vertex in rotation order, all with one orientation
    let mut orientation = 0i8;
    for v in 0..pg.vertex_count() {
        let nbrs = pg.neighbors(v);
        if nbrs.len() < 3 {
            continue;
        }
        let turn = |a: usize, b: usize| ccw_angle(c.p[v], c.p[a], c.p[b]);
        let total: f64 = (0..nbrs.len())
            .map(|k| turn(nbrs[k], nbrs[(k + 1) % nbrs.len()]))
            .sum();
        let sign = if (total - TAU).abs() <= c.ang_tol * nbrs.len() as f64 {
            1
        } else {
            let back: f64 = (0..nbrs.len())
                .map(|k| turn(nbrs[(k + 1) % nbrs.len()], nbrs[k]))
                .sum();
            if (back - TAU).abs() <= c.ang_tol * nbrs.len() as f64 {
                -1
            } else {
                return fail(kind, format!("neighbours of vertex {v} wind {total}"), 0.0);
            }
        };
        if orientation == 0 {
            orientation = sign;
        } else if orientation != sign {
            return fail(kind, format!("rotation at vertex {v} is mirrored"), 0.0);
        }
    }
    pass(kind)
}

fn segment_distance(a: Point, b: Point, c: Point, d: Point) -> f64 {
    let o1 = (b - a).cross(c - a);
    let o2 = (b - a).cross(d - a);
    let o3 = (d - c).cross(a - c);
    let o4 = (d - c).cross(b - c);
    if o1 * o2 < 0.0 && o3 * o4 < 0.0 {
        return 0.0;
    }
    point_segment_distance(a, c, d)
        .min(point_segment_distance(b, c, d))
        .min(point_segment_distance(c, a, b))
        .min(point_segment_distance(d, a, b))
}

fn no_crossings(c: &Ctx) -> CheckResult {
    let kind = CheckKind::NoCrossings;
    let edges = c.g.graph().edges();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(x, y) in &edges[i + 1..] {
            if a == x || a == y || b == x || b == y {
                continue;
            }
            let d = segment_distance(c.p[a], c.p[b], c.p[x], c.p[y]);
            if d <= c.len_tol {
                return fail(kind, format!("edges {a}-{b} and {x}-{y} meet"), d);
            }
        }
    }
    pass(kind)
}

fn no_degeneracy(c: &Ctx) -> CheckResult {
    let kind = CheckKind::NoDegeneracy;
    let pg = c.g.graph();
    for &(a, b) in pg.edges() {
        let len = c.p[a].dist(c.p[b]);
        if len <= c.len_tol {
            return fail(kind, format!("edge {a}-{b} has length {len:e}"), len);
        }
    }
    for d in 0..pg.dart_count() {
        let v = pg.head(d);
        let (a, b) = (pg.tail(d), pg.head(pg.next_in_face(d)));
        if a == b {
            continue;
        }
        let ang = corner_angle(c.p[v], c.p[a], c.p[b]);
        if ang <= c.ang_tol {
            return fail(kind, format!("angle {a}-{v}-{b} is {ang:e}"), ang);
        }
    }
    pass(kind)
}

fn faces_triangular(c: &Ctx) -> bool {
    let pg = c.g.graph();
    (0..pg.face_count())
        .filter(|&f| f != pg.outer_face())
        .all(|f| {
            let corners = pg
                .face_darts(f)
                .iter()
                .filter(|&&d| {
                    let v = pg.head(d);
                    let (a, b) = (pg.tail(d), pg.head(pg.next_in_face(d)));
                    corner_angle(c.p[v], c.p[a], c.p[b]) < PI - c.ang_tol
                })
                .count();
            corners == 3
        })
}

/// Runs the seven checks on arbitrary coordinates. `arcs` lists vertex sets
/// that must be collinear; the pole triangle is read off the suspensions.
pub fn verify(
    g: &SuspendedGraph,
    points: &[Point],
    arcs: &[Vec<usize>],
    tol: f64,
) -> VerificationReport {
    let poles: Vec<Point> = g.suspensions().iter().map(|&s| points[s]).collect();
    let c = Ctx {
        g,
        p: points,
        len_tol: tol * diameter(&poles),
        ang_tol: tol,
    };
    let (theta_v, theta_f) = angle_sums(&c);
    let checks = vec![
        segments_straight(&c, arcs),
        outer_triangle(&c),
        no_concave_angles(&c),
        no_degenerate_vertex(&c),
        rotation_preserved(&c, &theta_v, &theta_f),
        no_crossings(&c),
        no_degeneracy(&c),
    ];
    VerificationReport {
        checks,
        faces_triangular: faces_triangular(&c),
        vertex_angle_sums: theta_v,
        face_angle_sums: theta_f,
    }
}

pub fn verify_drawing(d: &Drawing, tol: f64) -> VerificationReport {
    verify(&d.graph, &d.points, &d.arcs(), tol)
}

/// Walk vertices whose angle toward the enclosed side is below π at some
/// visit, i.e. where the drawn outline turns convexly.
pub fn geometric_convex_corners(cycle: &OutlineCycle, points: &[Point], tol: f64) -> Vec<usize> {
    let n = cycle.walk.len();
    let mut out = Vec::new();
    for i in 0..n {
        let v = cycle.walk[i];
        let prev = cycle.walk[(i + n - 1) % n];
        let next = cycle.walk[(i + 1) % n];
        // the walk keeps the outside on its left
        let outside = if prev == next {
            TAU
        } else {
            ccw_angle(points[v], points[next], points[prev])
        };
        if outside > PI + tol {
            out.push(v);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::faa::{
        check_co_star_with, convex_corners, enumerate_faas, outline_cycles, CoStarMode, FaceCornerSpec,
        FlatAngleAssignment, DEFAULT_BUDGET,
    };
    use crate::harmonic::{assemble, default_poles, draw, solve, HarmonicWeights};

    fn tutte(g: &SuspendedGraph) -> Drawing {
        let sys = assemble(
            g,
            &FlatAngleAssignment::new(),
            &HarmonicWeights::uniform(),
            default_poles(),
        )
        .unwrap();
        solve(&sys).unwrap()
    }

    #[test]
    fn octahedron_tutte_passes_everything() {
        let d = tutte(&corpus::octahedron());
        let r = verify_drawing(&d, DEFAULT_TOLERANCE);
        assert!(r.is_sltr(), "{:?}", r.failed());
        let sv: f64 = r.vertex_angle_sums.iter().sum();
        let sf: f64 = r.face_angle_sums.iter().sum();
        assert!((sv - sf).abs() < 1e-9);
    }

    #[test]
    fn perturbed_outer_vertex_breaks_the_outer_triangle() {
        // W5 has two non-suspension rim vertices on the outer face
        let g = corpus::wheel5();
        let pg = g.graph();
        let faa = enumerate_faas(&g, &FaceCornerSpec::ExactTriangle, DEFAULT_BUDGET)
            .unwrap()
            .remove(0);
        let (mut d, r) = draw(&g, &faa, &HarmonicWeights::uniform(), default_poles()).unwrap();
        assert!(r.is_sltr(), "{:?}", r.failed());
        let v = pg
            .face_vertices(pg.outer_face())
            .into_iter()
            .find(|&v| !g.is_suspension(v))
            .unwrap();
        d.points[v].y -= 0.01;
        let r = verify_drawing(&d, DEFAULT_TOLERANCE);
        assert!(!r.check(CheckKind::OuterTriangle).passed);
    }

    #[test]
    fn collapsed_edge_is_degenerate() {
        let mut d = tutte(&corpus::octahedron());
        d.points[3] = d.points[4] + Point::new(1e-9, 0.0);
        let r = verify_drawing(&d, DEFAULT_TOLERANCE);
        let c = r.check(CheckKind::NoDegeneracy);
        assert!(!c.passed);
        assert_eq!(c.marker, Some(Marker::DegenerateWithinTolerance));
    }

    #[test]
    fn crossing_is_detected() {
        let mut d = tutte(&corpus::octahedron());
        // push an inner vertex far outside
        d.points[3] = Point::new(2.0, 2.0);
        let r = verify_drawing(&d, DEFAULT_TOLERANCE);
        assert!(!r.all_pass());
        assert!(
            !r.check(CheckKind::NoCrossings).passed
                || !r.check(CheckKind::RotationPreserved).passed
        );
    }

    #[test]
    fn geometric_corners_are_combinatorial() {
        for (name, g) in corpus::graphs() {
            let cycles = outline_cycles(g.graph(), CoStarMode::Full, DEFAULT_BUDGET).unwrap();
            for faa in enumerate_faas(&g, &FaceCornerSpec::ExactTriangle, DEFAULT_BUDGET).unwrap() {
                let (d, r) = draw(&g, &faa, &HarmonicWeights::uniform(), default_poles()).unwrap();
                if !r.is_sltr() {
                    continue;
                }
                for c in &cycles {
                    let geo = geometric_convex_corners(c, &d.points, DEFAULT_TOLERANCE);
                    let comb = convex_corners(&g, c, &faa);
                    assert!(
                        geo.iter().all(|v| comb.contains(v)),
                        "{name} {geo:?} {comb:?}"
                    );
                }
                assert!(check_co_star_with(&g, &faa, &cycles).ok);
            }
        }
    }
}
