//! Medial graphs of suspended plane graphs and their inversion.
//!
//! The medial graph `H` of `G` has one vertex per edge of `G` plus one vertex
//! per suspension half-edge; its edges are the corners (angles) of `G`. The
//! faces of `H` are in bijection with the vertices and faces of `G`.

use std::collections::{BTreeMap, HashMap, VecDeque};

use thiserror::Error;

use crate::graph::{GraphError, PlaneGraph, SuspendedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MedialError {
    #[error("graph is not almost 4-regular")]
    NotAlmost4Regular,
    #[error("the triangle C3 is not the medial graph of any graph")]
    Triangle,
    #[error("faces of the graph are not 2-colorable")]
    FacesNotBipartite,
    #[error("white faces touch themselves at vertex {0}")]
    SelfContact(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// What a vertex of the medial graph stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MedialVertex {
    Edge(usize),
    /// Half-edge at suspension `i` (index into the suspension triple).
    HalfEdge(usize),
}

/// What a face of the medial graph stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FaceOrigin {
    Vertex(usize),
    Face(usize),
}

#[derive(Debug, Clone)]
pub struct MedialGraph {
    pub graph: SuspendedGraph,
    /// Origin of every face of `graph`, indexed by face id.
    pub face_origin: Vec<FaceOrigin>,
    /// Origin of every vertex of `graph`.
    pub vertex_origin: Vec<MedialVertex>,
    /// Corner `(vertex, face)` of the primal graph represented by each medial edge.
    pub edge_corner: Vec<(usize, usize)>,
}

impl MedialGraph {
    pub fn face_of_origin(&self, origin: FaceOrigin) -> Option<usize> {
        self.face_origin.iter().position(|&o| o == origin)
    }

    pub fn vertex_of_edge(&self, e: usize) -> usize {
        e
    }
}

/// Builds the medial graph, with the three half-edge vertices as suspensions.
pub fn medial_graph(g: &SuspendedGraph) -> MedialGraph {
    let pg = g.graph();
    let m = pg.edge_count();
    let outer = pg.outer_face();
    let half = |v: usize| g.suspensions().iter().position(|&s| s == v).map(|i| m + i);

    // neighbor of edge(d) across the corner at head(d) inside left_face(d)
    let corner_next = |d: usize| -> usize {
        let v = pg.head(d);
        match half(v) {
            Some(h) if pg.left_face(d) == outer => h,
            _ => pg.dart_edge(pg.next_in_face(d)),
        }
    };
    let corner_prev = |d: usize| -> usize {
        let v = pg.tail(d);
        match half(v) {
            Some(h) if pg.left_face(d) == outer => h,
            _ => pg.dart_edge(pg.prev_in_face(d)),
        }
    };

    let mut rotation = vec![Vec::new(); m + 3];
    for (e, &(a, b)) in pg.edges().iter().enumerate() {
        let d = pg.dart(a, b).unwrap();
        let t = pg.dart(b, a).unwrap();
        rotation[e] = vec![
            corner_next(d),
            corner_prev(d),
            corner_next(t),
            corner_prev(t),
        ];
    }
    let mut corner_of: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
    for d in 0..pg.dart_count() {
        let (v, f) = (pg.head(d), pg.left_face(d));
        let (x, y) = (pg.dart_edge(d), pg.dart_edge(pg.next_in_face(d)));
        match half(v) {
            Some(h) if f == outer => {
                rotation[h] = vec![x, y];
                corner_of.insert((x.min(h), x.max(h)), (v, f));
                corner_of.insert((y.min(h), y.max(h)), (v, f));
            }
            _ => {
                corner_of.insert((x.min(y), x.max(y)), (v, f));
            }
        }
    }

    let h = PlaneGraph::new(
        rotation,
        (
            0,
            corner_next(pg.dart(pg.edges()[0].0, pg.edges()[0].1).unwrap()),
        ),
    )
    .expect("medial rotation system of a plane graph is plane");
    let edge_corner: Vec<(usize, usize)> = h.edges().iter().map(|e| corner_of[e]).collect();
    let face_origin: Vec<FaceOrigin> = (0..h.face_count())
        .map(|f| {
            let corners: Vec<(usize, usize)> = h
                .face_darts(f)
                .iter()
                .map(|&d| edge_corner[h.dart_edge(d)])
                .collect();
            let v0 = corners[0].0;
            if corners.iter().all(|c| c.0 == v0) {
                FaceOrigin::Vertex(v0)
            } else {
                FaceOrigin::Face(corners[0].1)
            }
        })
        .collect();
    let outer_h = face_origin
        .iter()
        .position(|&o| o == FaceOrigin::Face(outer))
        .expect("outer face has a medial face");
    let h = h.with_outer_face(outer_h);
    let graph =
        SuspendedGraph::new(h, [m, m + 1, m + 2]).expect("half-edges lie on the outer face");
    let vertex_origin = (0..m)
        .map(MedialVertex::Edge)
        .chain((0..3).map(MedialVertex::HalfEdge))
        .collect();
    MedialGraph {
        graph,
        face_origin,
        vertex_origin,
        edge_corner,
    }
}

/// Three degree-2 vertices on the outer face, every other vertex of degree 4.
pub fn is_almost_4_regular(g: &PlaneGraph) -> bool {
    let mut twos = 0;
    for v in 0..g.vertex_count() {
        match g.degree(v) {
            2 if g.is_incident(v, g.outer_face()) => twos += 1,
            4 => {}
            _ => return false,
        }
    }
    twos == 3
}

/// Recovers the primal graph from a medial graph by 2-coloring its faces.
///
/// The white class is the one containing the bounded faces at the degree-2
/// vertices; white faces become vertices and degree-4 vertices become edges.
pub fn invert_medial(h: &SuspendedGraph) -> Result<SuspendedGraph, MedialError> {
    let hg = h.graph();
    if !is_almost_4_regular(hg) || !h.suspensions().iter().all(|&s| hg.degree(s) == 2) {
        return Err(MedialError::NotAlmost4Regular);
    }
    if hg.vertex_count() == 3 {
        return Err(MedialError::Triangle);
    }
    let nf = hg.face_count();
    let mut color = vec![u8::MAX; nf];
    color[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(f) = queue.pop_front() {
        for g in hg.dual_neighbors(f) {
            if color[g] == u8::MAX {
                color[g] = 1 - color[f];
                queue.push_back(g);
            } else if color[g] == color[f] {
                return Err(MedialError::FacesNotBipartite);
            }
        }
    }
    let outer = hg.outer_face();
    let white_at = |s: usize| -> usize {
        hg.faces_around(s)
            .into_iter()
            .find(|&f| f != outer)
            .unwrap()
    };
    let white = color[white_at(h.suspensions()[0])];
    if color[outer] == white || h.suspensions().iter().any(|&s| color[white_at(s)] != white) {
        return Err(MedialError::FacesNotBipartite);
    }
    let white_faces: Vec<usize> = (0..nf).filter(|&f| color[f] == white).collect();
    let index: BTreeMap<usize, usize> = white_faces
        .iter()
        .enumerate()
        .map(|(i, &f)| (f, i))
        .collect();

    let other_white = |x: usize, w: usize| -> Result<usize, MedialError> {
        let around = hg.faces_around(x);
        let k = around.iter().position(|&f| f == w).unwrap();
        let o = around[(k + 2) % 4];
        if o == w || around.iter().filter(|&&f| f == w).count() > 1 {
            return Err(MedialError::SelfContact(x));
        }
        Ok(o)
    };
    let mut rotation = Vec::with_capacity(white_faces.len());
    for &w in &white_faces {
        let mut nbrs = Vec::new();
        for x in hg.face_vertices(w) {
            if hg.degree(x) == 4 {
                nbrs.push(index[&other_white(x, w)?]);
            }
        }
        rotation.push(nbrs);
    }
    let x = hg
        .face_vertices(outer)
        .into_iter()
        .find(|&x| hg.degree(x) == 4)
        .ok_or(MedialError::NotAlmost4Regular)?;
    let around = hg.faces_around(x);
    let j = around.iter().position(|&f| f == outer).unwrap();
    let hint = (index[&around[(j + 1) % 4]], index[&around[(j + 3) % 4]]);
    let g = PlaneGraph::new(rotation, hint)?;
    let susp = h.suspensions().map(|s| index[&white_at(s)]);
    Ok(SuspendedGraph::new(g, susp)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn medial_of_k4_counts() {
        let k4 = corpus::k4();
        let h = medial_graph(&k4);
        assert_eq!(h.graph.graph().vertex_count(), 9);
        assert_eq!(h.graph.graph().face_count(), 8);
        assert!(is_almost_4_regular(h.graph.graph()));
    }

    #[test]
    fn face_origin_is_a_bijection() {
        for (name, g) in corpus::graphs() {
            let h = medial_graph(&g);
            let mut origins = h.face_origin.clone();
            origins.sort();
            origins.dedup();
            let pg = g.graph();
            assert_eq!(origins.len(), pg.vertex_count() + pg.face_count(), "{name}");
            assert_eq!(h.face_origin.len(), origins.len(), "{name}");
        }
    }

    #[test]
    fn medial_of_k4_without_half_edges_is_octahedron() {
        let h = medial_graph(&corpus::k4());
        let hg = h.graph.graph();
        let mut adj = [[false; 6]; 6];
        for &(a, b) in hg.edges() {
            if a < 6 && b < 6 {
                adj[a][b] = true;
                adj[b][a] = true;
            }
        }
        for s in 6..9 {
            let (a, b) = (hg.neighbors(s)[0], hg.neighbors(s)[1]);
            adj[a][b] = true;
            adj[b][a] = true;
        }
        let oct = corpus::octahedron();
        let og = oct.graph();
        // brute force over all vertex permutations
        let mut perm: Vec<usize> = (0..6).collect();
        let mut found = false;
        permute(&mut perm, 0, &mut |p| {
            if og.edges().iter().all(|&(a, b)| adj[p[a]][p[b]])
                && adj.iter().flatten().filter(|&&x| x).count() == 2 * og.edge_count()
            {
                found = true;
            }
        });
        assert!(found);
    }

    fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn almost_4_regular_profiles() {
        let pts = [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)];
        let c3 = corpus::from_straight_line(&pts, &[(0, 1), (1, 2), (2, 0)], [0, 1, 2]);
        assert!(is_almost_4_regular(c3.graph()));
        assert!(!is_almost_4_regular(corpus::cube().graph()));
        assert_eq!(invert_medial(&c3).unwrap_err(), MedialError::Triangle);
    }

    #[test]
    fn round_trip_on_corpus() {
        for (name, g) in corpus::graphs() {
            let h = medial_graph(&g);
            let back = invert_medial(&h.graph).unwrap();
            assert!(back.is_isomorphic(&g), "{name}");
        }
    }

    #[test]
    fn degree_six_vertex_is_rejected() {
        // wheel with six spokes: hub has degree 6
        let mut pts: Vec<(f64, f64)> = (0..6)
            .map(|i| {
                let a = i as f64 * std::f64::consts::TAU / 6.0;
                (a.cos(), a.sin())
            })
            .collect();
        pts.push((0.0, 0.0));
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend((0..6).map(|i| (i, 6)));
        let g = corpus::from_straight_line(&pts, &edges, [0, 2, 4]);
        assert_eq!(
            invert_medial(&g).unwrap_err(),
            MedialError::NotAlmost4Regular
        );
    }
}
