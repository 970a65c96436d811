//! Harmonic stretch of the augmented arrangement and the homeomorphism check.

use super::{augment, check_stretchable, PseudosegmentArrangement, StretchError};
use crate::faa::{Contact, PseudosegmentFamily};
use crate::geometry::{diameter, line_distance, orient, segments_intersect, Point};
use crate::harmonic::{
    assemble_family, default_poles, solve, verify, Drawing, HarmonicWeights,
    DEFAULT_TOLERANCE,
};

/// A contact whose drawn side disagrees with the embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SideMismatch {
    pub contact: Contact,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StretchCertificate {
    /// Largest distance of a pseudosegment vertex from the line through the
    /// pseudosegment's endpoints, relative to the drawing's diameter.
    pub max_collinearity: f64,
    pub contacts_checked: usize,
    pub side_mismatches: Vec<SideMismatch>,
    /// Pairs of edges without a common vertex whose drawn segments meet.
    pub crossings: Vec<(usize, usize)>,
}

impl StretchCertificate {
    pub fn is_valid(&self, tol: f64) -> bool {
        self.max_collinearity <= tol && self.side_mismatches.is_empty() && self.crossings.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct SegmentContactSystem {
    pub family: PseudosegmentFamily,
    pub points: Vec<Point>,
    /// Drawing of the augmented arrangement, absent for a single pseudosegment.
    pub augmented: Option<Drawing>,
    pub certificate: StretchCertificate,
}

impl SegmentContactSystem {
    /// Endpoints of every pseudosegment, in family order.
    pub fn segments(&self) -> Vec<(Point, Point)> {
        self.family
            .segments()
            .iter()
            .map(|s| {
                let (a, b) = s.endpoints();
                (self.points[a], self.points[b])
            })
            .collect()
    }
}

/// Whether the edge `p -> u` leaves `p` to the left of the pseudosegment
/// through `p`, walked from `a` to `b`, according to the rotation at `p`.
fn combinatorial_left(fam: &PseudosegmentFamily, p: usize, a: usize, b: usize, u: usize) -> bool {
    let nb = fam.graph().neighbors(p);
    let pos = |x: usize| nb.iter().position(|&y| y == x).unwrap();
    let len = nb.len();
    let (from, to, at) = (pos(b), pos(a), pos(u));
    // counterclockwise from the forward neighbour, u comes before the backward one
    (at + len - from) % len < (to + len - from) % len
}

/// Straightness, sides of interior contacts and absence of crossings.
pub fn certify(fam: &PseudosegmentFamily, points: &[Point]) -> StretchCertificate {
    let g = fam.graph();
    let scale = diameter(points).max(f64::MIN_POSITIVE);
    let mut max_collinearity: f64 = 0.0;
    for s in fam.segments() {
        let (a, b) = s.endpoints();
        for &v in s.interior() {
            max_collinearity = max_collinearity.max(line_distance(points[v], points[a], points[b]) / scale);
        }
    }
    let contacts = fam.contacts();
    let mut side_mismatches = Vec::new();
    for c in contacts.iter().filter(|c| c.interior) {
        let touched = fam.segment(c.touched).vertices();
        let k = touched.iter().position(|&v| v == c.point).unwrap();
        let (a, b) = (touched[k - 1], touched[k + 1]);
        let s = fam.segment(c.segment).vertices();
        let u = if s[0] == c.point { s[1] } else { s[s.len() - 2] };
        let left = combinatorial_left(fam, c.point, a, b, u);
        let drawn = orient(points[a], points[b], points[u]) > 0.0;
        if left != drawn {
            side_mismatches.push(SideMismatch { contact: *c });
        }
    }
    let tol = DEFAULT_TOLERANCE * scale;
    let edges = g.edges();
    let mut crossings = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let ((a, b), (c, d)) = (edges[i], edges[j]);
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if segments_intersect(points[a], points[b], points[c], points[d], tol) {
                crossings.push((i, j));
            }
        }
    }
    StretchCertificate {
        max_collinearity,
        contacts_checked: contacts.len(),
        side_mismatches,
        crossings,
    }
}

/// Draws the arrangement with straight segments and the same contacts.
pub fn stretch(
    arr: &PseudosegmentArrangement,
    budget: u64,
) -> Result<SegmentContactSystem, StretchError> {
    let report = check_stretchable(arr, budget)?;
    if !report.ok {
        return Err(StretchError::NotStretchable {
            witness: report.witness.unwrap_or_default(),
            points: report.witness_points,
        });
    }
    let fam = arr.family().clone();
    if arr.len() <= 1 {
        // a single path drawn along the unit interval
        let mut points = vec![Point::new(0.0, 0.0); arr.graph().vertex_count()];
        if let Some(s) = fam.segments().first() {
            let last = (s.vertices().len() - 1) as f64;
            for (i, &v) in s.vertices().iter().enumerate() {
                points[v] = Point::new(i as f64 / last, 0.0);
            }
        }
        let certificate = certify(&fam, &points);
        return Ok(SegmentContactSystem {
            family: fam,
            points,
            augmented: None,
            certificate,
        });
    }
    let aug = augment(arr)?;
    let sys = assemble_family(
        &aug.family,
        aug.corners,
        &HarmonicWeights::uniform(),
        default_poles(),
    )?;
    let mut drawing = solve(&sys)?;
    drawing.assignment = aug.family.assignment();
    let arcs: Vec<Vec<usize>> = aug
        .family
        .segments()
        .iter()
        .map(|s| s.vertices().to_vec())
        .collect();
    let check = verify(&drawing.graph, &drawing.points, &arcs, DEFAULT_TOLERANCE);
    if !check.is_sltr() {
        let mut failed: Vec<String> = check.failed().iter().map(|k| format!("{k:?}")).collect();
        if !check.faces_triangular {
            failed.push("faces not triangular".into());
        }
        return Err(StretchError::NotTriangular(failed.join(", ")));
    }
    let points = aug.strip(&drawing.points);
    let certificate = certify(&fam, &points);
    Ok(SegmentContactSystem {
        family: fam,
        points,
        augmented: Some(drawing),
        certificate,
    })
}
