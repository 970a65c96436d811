//! Flat angles of the medial graph and the primal-dual triangle dissection.

use std::f64::consts::PI;

use super::{check_rigidity, compute_schnyder_wood, surface_coordinates, SchnyderError, SchnyderWood};
use crate::faa::FlatAngleAssignment;
use crate::geometry::{corner_angle, line_distance, signed_area, Point};
use crate::graph::SuspendedGraph;
use crate::harmonic::{default_poles, draw, Drawing, HarmonicWeights, DEFAULT_TOLERANCE};
use crate::medial::{medial_graph, FaceOrigin, MedialGraph};

/// Flat angles read off the orthogonal surface: a medial vertex is flat in
/// the face between its two medial edges that lie on a common flat.
pub fn medial_faa(
    w: &SchnyderWood,
) -> Result<(MedialGraph, FlatAngleAssignment), SchnyderError> {
    let surface = surface_coordinates(w)?;
    if let Some(k) = check_rigidity(&surface).offending_flat {
        return Err(SchnyderError::SurfaceNotRigid(k));
    }
    let medial = surface.medial;
    let h = medial.graph.graph();
    let m = w.graph().graph().edge_count();
    let mut pairs = Vec::with_capacity(m);
    for e in 0..m {
        let nb = h.neighbors(e);
        let labels: Vec<usize> = nb
            .iter()
            .map(|&x| surface.edge_label[h.edge_id(e, x).unwrap()])
            .collect();
        let flat: Vec<usize> = (0..nb.len())
            .filter(|&k| labels[k] == labels[(k + 1) % nb.len()])
            .collect();
        match flat[..] {
            [k] => pairs.push((e, h.faces_around(e)[k])),
            _ => return Err(SchnyderError::AmbiguousFlatAngle(e)),
        }
    }
    let faa = FlatAngleAssignment::from_pairs(pairs).expect("one face per medial vertex");
    Ok((medial, faa))
}

/// Flat angles read off the wood itself: each medial vertex is flat in the
/// face that its edge points to in the primal-dual orientation.
pub fn medial_faa_from_wood(w: &SchnyderWood) -> (MedialGraph, FlatAngleAssignment) {
    let medial = medial_graph(w.graph());
    let m = w.graph().graph().edge_count();
    let pairs = (0..m).map(|e| {
        let f = medial
            .face_of_origin(w.medial_head(e))
            .expect("every origin has a medial face");
        (e, f)
    });
    let faa = FlatAngleAssignment::from_pairs(pairs).expect("one face per medial vertex");
    (medial, faa)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Tile {
    pub origin: FaceOrigin,
    /// Corners in counterclockwise order.
    pub corners: [Point; 3],
}

#[derive(Debug, Clone, PartialEq)]
pub enum Contact {
    /// Tiles of the two endpoints of an edge, or of the two faces beside it,
    /// touching at the medial point of the edge.
    Point {
        edge: usize,
        between: (FaceOrigin, FaceOrigin),
        at: Point,
    },
    /// A vertex tile and a face tile sharing a segment; a face equal to the
    /// outer face stands for the enclosing triangle.
    Side {
        vertex: usize,
        face: usize,
        from: Point,
        to: Point,
    },
}

#[derive(Debug, Clone)]
pub struct Dissection {
    pub enclosing: [Point; 3],
    pub tiles: Vec<Tile>,
    pub contacts: Vec<Contact>,
    pub medial: MedialGraph,
    pub drawing: Drawing,
    /// Set when the surface rule was ambiguous and the wood rule was used.
    pub used_wood_rule: bool,
}

fn on_segment(p: Point, a: Point, b: Point, tol: f64) -> bool {
    let len = a.dist(b);
    line_distance(p, a, b) <= tol && p.dist(a) <= len + tol && p.dist(b) <= len + tol
}

fn on_boundary(p: Point, tri: &[Point; 3], tol: f64) -> bool {
    (0..3).any(|i| on_segment(p, tri[i], tri[(i + 1) % 3], tol))
}

impl Dissection {
    fn triangle_of(&self, origin: FaceOrigin) -> [Point; 3] {
        let outer = self.medial.face_origin[self.medial.graph.graph().outer_face()];
        if origin == outer {
            return self.enclosing;
        }
        self.tiles
            .iter()
            .find(|t| t.origin == origin)
            .expect("every origin has a tile")
            .corners
    }

    /// `|sum of tile areas - enclosing area| / enclosing area`.
    pub fn area_defect(&self) -> f64 {
        let total = signed_area(&self.enclosing).abs();
        let sum: f64 = self.tiles.iter().map(|t| signed_area(&t.corners).abs()).sum();
        (sum - total).abs() / total
    }

    /// Whether every listed contact is realised by the drawn triangles.
    pub fn contacts_realised(&self, tol: f64) -> bool {
        let outer = self.medial.graph.graph().outer_face();
        let outer_origin = self.medial.face_origin[outer];
        let face_tri = |f: usize| self.triangle_of(FaceOrigin::Face(f));
        self.contacts.iter().all(|c| match *c {
            Contact::Point { between, at, .. } => {
                on_boundary(at, &self.triangle_of(between.0), tol)
                    && on_boundary(at, &self.triangle_of(between.1), tol)
            }
            Contact::Side {
                vertex,
                face,
                from,
                to,
            } => {
                let vt = self.triangle_of(FaceOrigin::Vertex(vertex));
                let ft = if FaceOrigin::Face(face) == outer_origin {
                    self.enclosing
                } else {
                    face_tri(face)
                };
                [from, to]
                    .iter()
                    .all(|&p| on_boundary(p, &vt, tol) && on_boundary(p, &ft, tol))
                    && from.dist(to) > tol
            }
        })
    }

    /// Pairs of tiles whose sides overlap in a segment of positive length.
    pub fn side_adjacency(&self, tol: f64) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.tiles.len() {
            for j in i + 1..self.tiles.len() {
                let (a, b) = (&self.tiles[i].corners, &self.tiles[j].corners);
                let shares = (0..3).any(|s| {
                    let (p, q) = (a[s], a[(s + 1) % 3]);
                    (0..3).any(|t| {
                        let (r, u) = (b[t], b[(t + 1) % 3]);
                        let on: Vec<Point> = [p, q, r, u]
                            .into_iter()
                            .filter(|&x| on_segment(x, p, q, tol) && on_segment(x, r, u, tol))
                            .collect();
                        on.iter().any(|x| on.iter().any(|y| x.dist(*y) > tol))
                    })
                });
                if shares {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// Primal-dual triangle contact representation of an internally 3-connected
/// graph, drawn as a straight-line triangle representation of its medial graph.
pub fn primal_dual_representation(g: &SuspendedGraph) -> Result<Dissection, SchnyderError> {
    let wood = compute_schnyder_wood(g)?;
    let (medial, faa, used_wood_rule) = match medial_faa(&wood) {
        Ok((medial, faa)) => (medial, faa, false),
        Err(
            SchnyderError::SurfaceNotRigid(_)
            | SchnyderError::AmbiguousFlatMembership(_)
            | SchnyderError::AmbiguousFlatAngle(_),
        ) => {
            let (medial, faa) = medial_faa_from_wood(&wood);
            (medial, faa, true)
        }
        Err(e) => return Err(e),
    };
    let poles = default_poles();
    let (drawing, report) = draw(&medial.graph, &faa, &HarmonicWeights::uniform(), poles)?;
    if !report.is_sltr() {
        return Err(SchnyderError::NotTriangular(format!("{:?}", report.failed())));
    }
    let h = medial.graph.graph();
    let p = &drawing.points;
    let mut tiles = Vec::new();
    for f in (0..h.face_count()).filter(|&f| f != h.outer_face()) {
        let corners: Vec<Point> = h
            .face_darts(f)
            .iter()
            .filter_map(|&d| {
                let v = h.head(d);
                let (a, b) = (h.tail(d), h.head(h.next_in_face(d)));
                (corner_angle(p[v], p[a], p[b]) < PI - DEFAULT_TOLERANCE).then_some(p[v])
            })
            .collect();
        let corners: [Point; 3] = corners
            .try_into()
            .map_err(|c: Vec<Point>| SchnyderError::NotTriangular(format!("face {f} has {} corners", c.len())))?;
        tiles.push(Tile {
            origin: medial.face_origin[f],
            corners,
        });
    }

    let pg = g.graph();
    let mut contacts = Vec::new();
    for (e, &(a, b)) in pg.edges().iter().enumerate() {
        let d = pg.dart(a, b).unwrap();
        let at = p[e];
        contacts.push(Contact::Point {
            edge: e,
            between: (FaceOrigin::Vertex(a), FaceOrigin::Vertex(b)),
            at,
        });
        contacts.push(Contact::Point {
            edge: e,
            between: (
                FaceOrigin::Face(pg.left_face(d)),
                FaceOrigin::Face(pg.left_face(pg.twin(d))),
            ),
            at,
        });
    }
    for (k, &(x, y)) in h.edges().iter().enumerate() {
        let (vertex, face) = medial.edge_corner[k];
        contacts.push(Contact::Side {
            vertex,
            face,
            from: p[x],
            to: p[y],
        });
    }
    Ok(Dissection {
        enclosing: poles,
        tiles,
        contacts,
        medial,
        drawing,
        used_wood_rule,
    })
}
