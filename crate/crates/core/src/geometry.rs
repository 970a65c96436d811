//! Small 2D helpers shared by the solver, the verifier and the renderers.

use std::f64::consts::{PI, TAU};
use std::ops::{Add, Mul, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn lerp(self, other: Point, t: f64) -> Point {
        Point::new(
            self.x + (other.x - self.x) * t,
            self.y + (other.y - self.y) * t,
        )
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, other: Point) -> f64 {
        (self - other).norm()
    }

    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// Direction angle in `[0, 2π)`.
    pub fn angle(self) -> f64 {
        let a = self.y.atan2(self.x);
        if a < 0.0 {
            a + TAU
        } else {
            a
        }
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

/// Twice the signed area of triangle `abc`; positive when counterclockwise.
pub fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b - a).cross(c - a)
}

/// Signed area of a polygon given by its corner sequence.
pub fn signed_area(poly: &[Point]) -> f64 {
    let n = poly.len();
    (0..n)
        .map(|i| poly[i].cross(poly[(i + 1) % n]))
        .sum::<f64>()
        / 2.0
}

/// The smaller (unsigned) angle between directions `a - p` and `b - p`, in `[0, π]`.
pub fn corner_angle(p: Point, a: Point, b: Point) -> f64 {
    let (u, v) = (a - p, b - p);
    u.cross(v).abs().atan2(u.dot(v))
}

/// Counterclockwise angle turning from direction `a - p` to direction `b - p`, in `[0, 2π)`.
pub fn ccw_angle(p: Point, a: Point, b: Point) -> f64 {
    let d = (b - p).angle() - (a - p).angle();
    if d < 0.0 {
        d + TAU
    } else {
        d
    }
}

/// Distance from `p` to the line through `a` and `b`.
pub fn line_distance(p: Point, a: Point, b: Point) -> f64 {
    let len = a.dist(b);
    if len == 0.0 {
        return p.dist(a);
    }
    orient(a, b, p).abs() / len
}

pub fn diameter(points: &[Point]) -> f64 {
    let mut d: f64 = 0.0;
    for (i, &p) in points.iter().enumerate() {
        for &q in &points[i + 1..] {
            d = d.max(p.dist(q));
        }
    }
    d
}

/// Whether the closed segments `ab` and `cd` intersect, with `eps` as the
/// collinearity cutoff for the orientation signs.
pub fn segments_intersect(a: Point, b: Point, c: Point, d: Point, eps: f64) -> bool {
    let sign = |x: f64| {
        if x > eps {
            1
        } else if x < -eps {
            -1
        } else {
            0
        }
    };
    let d1 = sign(orient(c, d, a));
    let d2 = sign(orient(c, d, b));
    let d3 = sign(orient(a, b, c));
    let d4 = sign(orient(a, b, d));
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    let on_segment = |p: Point, q: Point, r: Point| {
        r.x >= p.x.min(q.x) - eps
            && r.x <= p.x.max(q.x) + eps
            && r.y >= p.y.min(q.y) - eps
            && r.y <= p.y.max(q.y) + eps
    };
    (d1 == 0 && on_segment(c, d, a))
        || (d2 == 0 && on_segment(c, d, b))
        || (d3 == 0 && on_segment(a, b, c))
        || (d4 == 0 && on_segment(a, b, d))
}

/// Largest counterclockwise gap between consecutive directions from `p`.
/// At most `π` exactly when `p` lies in the convex hull of the targets.
pub fn max_angular_gap(p: Point, targets: &[Point]) -> f64 {
    let mut angles: Vec<f64> = targets.iter().map(|&t| (t - p).angle()).collect();
    angles.sort_by(f64::total_cmp);
    let n = angles.len();
    if n == 0 {
        return TAU;
    }
    let mut gap = angles[0] + TAU - angles[n - 1];
    for w in angles.windows(2) {
        gap = gap.max(w[1] - w[0]);
    }
    gap
}

pub const HALF_TURN: f64 = PI;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_signs() {
        let (a, b, c) = (
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
        );
        assert!(orient(a, b, c) > 0.0);
        assert!(orient(a, c, b) < 0.0);
        assert!((signed_area(&[a, b, c]) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn crossing_and_touching_segments() {
        let p = Point::new;
        assert!(segments_intersect(
            p(0., 0.),
            p(2., 2.),
            p(0., 2.),
            p(2., 0.),
            1e-12
        ));
        assert!(segments_intersect(
            p(0., 0.),
            p(2., 0.),
            p(1., 0.),
            p(1., 1.),
            1e-12
        ));
        assert!(!segments_intersect(
            p(0., 0.),
            p(1., 0.),
            p(2., 0.),
            p(3., 0.),
            1e-12
        ));
        assert!(!segments_intersect(
            p(0., 0.),
            p(1., 0.),
            p(0., 1.),
            p(1., 1.),
            1e-12
        ));
    }

    #[test]
    fn angular_gap_detects_hull_membership() {
        let p = Point::new;
        let tri = [p(1., 0.), p(-1., 1.), p(-1., -1.)];
        assert!(max_angular_gap(p(0., 0.), &tri) < PI);
        assert!(max_angular_gap(p(2., 0.), &tri) > PI);
    }

    #[test]
    fn ccw_angle_wraps() {
        let p = Point::new;
        let a = ccw_angle(p(0., 0.), p(1., 0.), p(0., -1.));
        assert!((a - 1.5 * PI).abs() < 1e-12);
        assert!((corner_angle(p(0., 0.), p(1., 0.), p(0., -1.)) - 0.5 * PI).abs() < 1e-12);
    }
}
