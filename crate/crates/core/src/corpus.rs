//! Built-in fixture graphs, defined by straight-line sketches.
//!
//! The sketch coordinates only serve to derive a rotation system; every
//! algorithm in the crate works on the combinatorial embedding.

use std::f64::consts::{FRAC_PI_2, TAU};

use crate::geometry::{signed_area, Point};
use crate::faa::PseudosegmentFamily;
use crate::graph::{GraphError, PlaneGraph, SuspendedGraph};

/// Builds the plane graph of a crossing-free straight-line drawing. Neighbors
/// are sorted counterclockwise by direction and the outer face is the face
/// whose walk has negative signed area.
pub fn plane_graph_from_points(
    points: &[(f64, f64)],
    edges: &[(usize, usize)],
) -> Result<PlaneGraph, GraphError> {
    let pts: Vec<Point> = points.iter().map(|&(x, y)| Point::new(x, y)).collect();
    let mut rotation = vec![Vec::new(); pts.len()];
    for &(a, b) in edges {
        if a >= pts.len() {
            return Err(GraphError::InvalidVertex(a));
        }
        if b >= pts.len() {
            return Err(GraphError::InvalidVertex(b));
        }
        rotation[a].push(b);
        rotation[b].push(a);
    }
    for (v, nbrs) in rotation.iter_mut().enumerate() {
        nbrs.sort_by(|&a, &b| {
            (pts[a] - pts[v])
                .angle()
                .total_cmp(&(pts[b] - pts[v]).angle())
        });
    }
    let (a, b) = *edges.first().ok_or(GraphError::Empty)?;
    let g = PlaneGraph::new(rotation, (a, b))?;
    let outer = (0..g.face_count())
        .min_by(|&f, &h| {
            let area = |f: usize| {
                let poly: Vec<Point> = g.face_vertices(f).iter().map(|&v| pts[v]).collect();
                signed_area(&poly)
            };
            area(f).total_cmp(&area(h))
        })
        .unwrap();
    Ok(g.with_outer_face(outer))
}

/// Panicking convenience wrapper for hand-written fixtures.
pub fn from_straight_line(
    points: &[(f64, f64)],
    edges: &[(usize, usize)],
    suspensions: [usize; 3],
) -> SuspendedGraph {
    let g = plane_graph_from_points(points, edges).expect("fixture sketch is a plane graph");
    SuspendedGraph::new(g, suspensions).expect("fixture suspensions lie on the outer face")
}

fn regular(k: usize, radius: f64, phase: f64) -> Vec<(f64, f64)> {
    (0..k)
        .map(|i| {
            let a = phase + i as f64 * TAU / k as f64;
            (radius * a.cos(), radius * a.sin())
        })
        .collect()
}

fn cycle(start: usize, k: usize) -> Vec<(usize, usize)> {
    (0..k).map(|i| (start + i, start + (i + 1) % k)).collect()
}

const OUTER_TRIANGLE: [(f64, f64); 3] = [(0.0, 0.0), (6.0, 0.0), (3.0, 5.2)];

pub fn k4() -> SuspendedGraph {
    let mut pts = OUTER_TRIANGLE.to_vec();
    pts.push((3.0, 1.8));
    let mut edges = cycle(0, 3);
    edges.extend([(0, 3), (1, 3), (2, 3)]);
    from_straight_line(&pts, &edges, [0, 1, 2])
}

/// K4 with the inner edge `0-3` subdivided by vertex 4.
pub fn subdivided_k4() -> SuspendedGraph {
    let mut pts = OUTER_TRIANGLE.to_vec();
    pts.extend([(3.0, 1.8), (1.5, 0.9)]);
    let mut edges = cycle(0, 3);
    edges.extend([(0, 4), (4, 3), (1, 3), (2, 3)]);
    from_straight_line(&pts, &edges, [0, 1, 2])
}

pub fn octahedron() -> SuspendedGraph {
    let mut pts = OUTER_TRIANGLE.to_vec();
    pts.extend([(3.0, 1.0), (4.0, 2.6), (2.0, 2.6)]);
    let mut edges = cycle(0, 3);
    edges.extend(cycle(3, 3));
    edges.extend([(0, 3), (0, 5), (1, 3), (1, 4), (2, 4), (2, 5)]);
    from_straight_line(&pts, &edges, [0, 1, 2])
}

/// Triangular prism: outer triangle, inner triangle, three spokes.
pub fn prism() -> SuspendedGraph {
    let mut pts = OUTER_TRIANGLE.to_vec();
    pts.extend([(3.0, 1.3), (3.9, 2.6), (2.1, 2.6)]);
    let mut edges = cycle(0, 3);
    edges.extend(cycle(3, 3));
    edges.extend([(0, 3), (1, 4), (2, 5)]);
    from_straight_line(&pts, &edges, [0, 1, 2])
}

pub fn cube() -> SuspendedGraph {
    let pts = [
        (0.0, 0.0),
        (6.0, 0.0),
        (6.0, 6.0),
        (0.0, 6.0),
        (2.0, 2.0),
        (4.0, 2.0),
        (4.0, 4.0),
        (2.0, 4.0),
    ];
    let mut edges = cycle(0, 4);
    edges.extend(cycle(4, 4));
    edges.extend((0..4).map(|i| (i, i + 4)));
    from_straight_line(&pts, &edges, [0, 1, 2])
}

pub fn pentagonal_prism() -> SuspendedGraph {
    let mut pts = regular(5, 5.0, FRAC_PI_2);
    pts.extend(regular(5, 2.0, FRAC_PI_2));
    let mut edges = cycle(0, 5);
    edges.extend(cycle(5, 5));
    edges.extend((0..5).map(|i| (i, i + 5)));
    from_straight_line(&pts, &edges, [0, 1, 2])
}

/// Wheel with five rim vertices 0..4 and hub 5.
pub fn wheel5() -> SuspendedGraph {
    let mut pts = regular(5, 3.0, FRAC_PI_2);
    pts.push((0.0, 0.0));
    let mut edges = cycle(0, 5);
    edges.extend((0..5).map(|i| (i, 5)));
    from_straight_line(&pts, &edges, [0, 1, 3])
}

const BIG_TRIANGLE: [(f64, f64); 3] = [(0.0, 0.0), (10.0, 0.0), (5.0, 8.66)];

/// Internally 3-connected graph with 12 exact assignments, 4 of them not good.
pub fn mixed_a() -> SuspendedGraph {
    let mut pts = BIG_TRIANGLE.to_vec();
    pts.extend([
        (5.56, 4.8),
        (4.65, 4.88),
        (7.62, 0.8),
        (5.82, 2.29),
        (4.22, 5.6),
    ]);
    let edges = [
        (4, 7),
        (3, 4),
        (5, 6),
        (1, 5),
        (3, 6),
        (4, 6),
        (2, 7),
        (2, 3),
        (3, 5),
        (1, 3),
        (0, 7),
        (0, 5),
        (0, 2),
        (1, 2),
        (0, 1),
    ];
    from_straight_line(&pts, &edges, [0, 1, 2])
}

/// Internally 3-connected graph with 3 exact assignments, one of them not good.
pub fn mixed_b() -> SuspendedGraph {
    let mut pts = BIG_TRIANGLE.to_vec();
    pts.extend([
        (6.61, 3.59),
        (7.13, 2.65),
        (6.52, 5.36),
        (5.72, 6.17),
        (3.76, 3.79),
    ]);
    let edges = [
        (3, 4),
        (5, 6),
        (3, 5),
        (2, 6),
        (3, 6),
        (4, 5),
        (3, 7),
        (4, 7),
        (2, 5),
        (1, 4),
        (2, 7),
        (0, 7),
        (1, 5),
        (1, 7),
        (0, 2),
        (1, 2),
        (0, 1),
    ];
    from_straight_line(&pts, &edges, [0, 1, 2])
}

/// All named fixture graphs.
pub fn graphs() -> Vec<(&'static str, SuspendedGraph)> {
    vec![
        ("k4", k4()),
        ("octahedron", octahedron()),
        ("prism", prism()),
        ("cube", cube()),
        ("pentagonal_prism", pentagonal_prism()),
        ("wheel5", wheel5()),
        ("mixed_a", mixed_a()),
        ("mixed_b", mixed_b()),
    ]
}

/// Fixtures that are triangulations (every face, including the outer one, a triangle).
pub fn triangulations() -> Vec<(&'static str, SuspendedGraph)> {
    graphs()
        .into_iter()
        .filter(|(_, g)| (0..g.graph().face_count()).all(|f| g.graph().face_len(f) == 3))
        .collect()
}

/// Fixtures on which the Schnyder pipeline is exercised.
pub fn three_connected() -> Vec<(&'static str, SuspendedGraph)> {
    vec![
        ("k4", k4()),
        ("prism", prism()),
        ("cube", cube()),
        ("pentagonal_prism", pentagonal_prism()),
        ("wheel5", wheel5()),
    ]
}

/// A family of pseudosegments laid out along straight paths.
pub fn arrangement(points: &[(f64, f64)], paths: &[&[usize]]) -> PseudosegmentFamily {
    let edges: Vec<(usize, usize)> = paths
        .iter()
        .flat_map(|p| p.windows(2).map(|w| (w[0], w[1])))
        .collect();
    let g = plane_graph_from_points(points, &edges).expect("fixture is a plane graph");
    PseudosegmentFamily::new(g, paths.iter().map(|p| p.to_vec()).collect())
        .expect("fixture is a contact family")
}

/// Two segments, one ending on the middle of the other.
pub fn l_contact() -> PseudosegmentFamily {
    arrangement(
        &[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (1.0, 1.0)],
        &[&[0, 1, 2], &[1, 3]],
    )
}

/// Four segments around a square, each starting on the previous one.
pub fn pinwheel() -> PseudosegmentFamily {
    arrangement(
        &[
            (0.0, 0.0),
            (1.0, 0.0),
            (1.0, 1.0),
            (0.0, 1.0),
            (2.0, 0.0),
            (1.0, 2.0),
            (-1.0, 1.0),
            (0.0, -1.0),
        ],
        &[&[0, 1, 4], &[1, 2, 5], &[2, 3, 6], &[3, 0, 7]],
    )
}

/// A long segment carrying the feet of three segments that rest on each
/// other; three of the four have only two extremal points together.
pub fn interlocked() -> PseudosegmentFamily {
    arrangement(
        &[
            (0.0, 0.0),
            (1.0, 0.0),
            (2.0, 0.0),
            (3.0, 0.0),
            (4.0, 0.0),
            (2.0, 1.0),
            (2.0, 2.0),
            (1.2, 1.0),
        ],
        &[&[0, 1, 2, 3, 4], &[1, 7, 5], &[2, 5, 6], &[3, 6, 7]],
    )
}

/// A segment touched at one point from both sides.
pub fn cross() -> PseudosegmentFamily {
    arrangement(
        &[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (1.0, 1.0), (1.0, -1.0)],
        &[&[0, 1, 2], &[1, 3], &[1, 4]],
    )
}
