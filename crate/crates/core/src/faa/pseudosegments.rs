use std::collections::BTreeMap;

use thiserror::Error;

use super::FlatAngleAssignment;
use crate::graph::{PlaneGraph, SuspendedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("arc closes into a cycle: edges {0:?}")]
    ArcClosesCycle(Vec<usize>),
    #[error("arc touches itself: edges {0:?}")]
    ArcTouchesSelf(Vec<usize>),
    #[error("pseudosegment {0} has fewer than two vertices")]
    TooShort(usize),
    #[error("pseudosegment {0} repeats a vertex")]
    NotSimple(usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("edge {0} is not covered")]
    EdgeUncovered(usize),
    #[error("edge {0} is covered twice")]
    EdgeCoveredTwice(usize),
    #[error("vertex {0} is interior to two pseudosegments")]
    Crossing(usize),
    #[error("pseudosegments {0} and {1} share more than one point")]
    SharedPoints(usize, usize),
}

/// A simple path of the graph, stored as its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pseudosegment {
    vertices: Vec<usize>,
}

impl Pseudosegment {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    pub fn interior(&self) -> &[usize] {
        &self.vertices[1..self.vertices.len() - 1]
    }

    pub fn is_endpoint(&self, v: usize) -> bool {
        let (a, b) = self.endpoints();
        v == a || v == b
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }
}

/// A partition of the edges of an embedded graph into pseudosegments that
/// pairwise share at most one point.
#[derive(Debug, Clone)]
pub struct PseudosegmentFamily {
    graph: PlaneGraph,
    segments: Vec<Pseudosegment>,
    edge_segment: Vec<usize>,
    interior_of: Vec<Option<usize>>,
}

/// One endpoint of a pseudosegment lying on another pseudosegment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Contact {
    pub point: usize,
    pub segment: usize,
    pub touched: usize,
    /// Whether the point is interior to the touched pseudosegment.
    pub interior: bool,
}

impl PseudosegmentFamily {
    /// Validates the paths and sorts them into canonical order (each path
    /// oriented from its smaller endpoint, then lexicographic).
    pub fn new(graph: PlaneGraph, paths: Vec<Vec<usize>>) -> Result<Self, FamilyError> {
        let mut segments: Vec<Pseudosegment> = paths
            .into_iter()
            .map(|mut p| {
                if p.len() >= 2 && p[0] > p[p.len() - 1] {
                    p.reverse();
                }
                Pseudosegment { vertices: p }
            })
            .collect();
        segments.sort();
        let mut edge_segment = vec![usize::MAX; graph.edge_count()];
        let mut interior_of = vec![None; graph.vertex_count()];
        for (i, s) in segments.iter().enumerate() {
            if s.vertices.len() < 2 {
                return Err(FamilyError::TooShort(i));
            }
            let mut seen = s.vertices.clone();
            seen.sort_unstable();
            seen.dedup();
            if seen.len() != s.vertices.len() {
                return Err(FamilyError::NotSimple(i));
            }
            for w in s.vertices.windows(2) {
                let e = graph
                    .edge_id(w[0], w[1])
                    .ok_or(FamilyError::NotAnEdge(w[0], w[1]))?;
                if edge_segment[e] != usize::MAX {
                    return Err(FamilyError::EdgeCoveredTwice(e));
                }
                edge_segment[e] = i;
            }
            for &v in s.interior() {
                if interior_of[v].is_some() {
                    return Err(FamilyError::Crossing(v));
                }
                interior_of[v] = Some(i);
            }
        }
        if let Some(e) = edge_segment.iter().position(|&s| s == usize::MAX) {
            return Err(FamilyError::EdgeUncovered(e));
        }
        let mut at_vertex: Vec<Vec<usize>> = vec![Vec::new(); graph.vertex_count()];
        for (i, s) in segments.iter().enumerate() {
            for &v in &s.vertices {
                at_vertex[v].push(i);
            }
        }
        let mut shared: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for list in &at_vertex {
            for (x, &a) in list.iter().enumerate() {
                for &b in &list[x + 1..] {
                    let c = shared.entry((a, b)).or_default();
                    *c += 1;
                    if *c > 1 {
                        return Err(FamilyError::SharedPoints(a, b));
                    }
                }
            }
        }
        Ok(PseudosegmentFamily {
            graph,
            segments,
            edge_segment,
            interior_of,
        })
    }

    pub fn graph(&self) -> &PlaneGraph {
        &self.graph
    }

    pub fn segments(&self) -> &[Pseudosegment] {
        &self.segments
    }

    pub fn segment(&self, i: usize) -> &Pseudosegment {
        &self.segments[i]
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn segment_of_edge(&self, e: usize) -> usize {
        self.edge_segment[e]
    }

    /// The pseudosegment having `v` as an interior point, if any.
    pub fn interior_segment(&self, v: usize) -> Option<usize> {
        self.interior_of[v]
    }

    /// Pseudosegments passing through or ending at `v`, ascending.
    pub fn segments_at(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .graph
            .neighbors(v)
            .iter()
            .map(|&u| self.edge_segment[self.graph.edge_id(v, u).unwrap()])
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Edge ids of pseudosegment `i`.
    pub fn segment_edges(&self, i: usize) -> Vec<usize> {
        self.segments[i]
            .vertices
            .windows(2)
            .map(|w| self.graph.edge_id(w[0], w[1]).unwrap())
            .collect()
    }

    /// Every endpoint-on-other-pseudosegment incidence, sorted.
    pub fn contacts(&self) -> Vec<Contact> {
        let mut out = Vec::new();
        for (i, s) in self.segments.iter().enumerate() {
            let (a, b) = s.endpoints();
            for p in [a, b] {
                for j in self.segments_at(p) {
                    if j != i {
                        out.push(Contact {
                            point: p,
                            segment: i,
                            touched: j,
                            interior: self.interior_of[p] == Some(j),
                        });
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// The assignment whose arcs are these pseudosegments: every interior
    /// vertex is flat in a face where its two path edges form a corner.
    /// Returns `None` when they form no corner.
    pub fn assignment(&self) -> Option<FlatAngleAssignment> {
        let g = &self.graph;
        let mut pairs = Vec::new();
        for s in &self.segments {
            for w in s.vertices.windows(3) {
                let (a, v, b) = (w[0], w[1], w[2]);
                let d = g.dart(a, v).unwrap();
                let f = if g.head(g.next_in_face(d)) == b {
                    g.left_face(d)
                } else {
                    let t = g.dart(b, v).unwrap();
                    if g.head(g.next_in_face(t)) != a {
                        return None;
                    }
                    g.left_face(t)
                };
                pairs.push((v, f));
            }
        }
        FlatAngleAssignment::from_pairs(pairs).ok()
    }
}

/// Edge classes of the closure of "share a vertex `v` and a face `f` with
/// `v` assigned to `f`", each sorted, ordered by smallest edge.
pub fn arc_classes(pg: &PlaneGraph, faa: &FlatAngleAssignment) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..pg.edge_count()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for (v, f) in faa.pairs() {
        if v >= pg.vertex_count() || f >= pg.face_count() {
            continue;
        }
        for (p, n) in pg.corners_at(v, f) {
            let a = find(&mut parent, pg.edge_id(v, p).unwrap());
            let b = find(&mut parent, pg.edge_id(v, n).unwrap());
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for e in 0..pg.edge_count() {
        let r = find(&mut parent, e);
        classes.entry(r).or_default().push(e);
    }
    classes.into_values().collect()
}

/// Groups edges by the transitive closure of "share a vertex `v` and a face
/// `f` with `v` assigned to `f`", and turns each class into a path.
pub fn pseudosegments_of(
    g: &SuspendedGraph,
    faa: &FlatAngleAssignment,
) -> Result<PseudosegmentFamily, FamilyError> {
    let pg = g.graph();
    let classes = arc_classes(pg, faa);
    let mut paths = Vec::new();
    for edges in classes {
        let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &e in &edges {
            let (a, b) = pg.edges()[e];
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        if adj.values().any(|n| n.len() > 2) {
            return Err(FamilyError::ArcTouchesSelf(edges));
        }
        let Some(start) = adj.iter().find(|(_, n)| n.len() == 1).map(|(&v, _)| v) else {
            return Err(FamilyError::ArcClosesCycle(edges));
        };
        let mut path = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(&next) = adj[&cur].iter().find(|&&u| u != prev) {
            path.push(next);
            prev = cur;
            cur = next;
            if adj[&cur].len() == 1 {
                break;
            }
        }
        paths.push(path);
    }
    PseudosegmentFamily::new(pg.clone(), paths)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::faa::{enumerate_faas, FaceCornerSpec, DEFAULT_BUDGET};

    #[test]
    fn empty_assignment_gives_singletons() {
        let g = corpus::k4();
        let fam = pseudosegments_of(&g, &FlatAngleAssignment::new()).unwrap();
        assert_eq!(fam.len(), 6);
        assert!(fam.segments().iter().all(|s| s.edge_count() == 1));
    }

    #[test]
    fn prism_assignment_merges_three_pairs() {
        let g = corpus::prism();
        for faa in enumerate_faas(&g, &FaceCornerSpec::ExactTriangle, DEFAULT_BUDGET).unwrap() {
            let fam = pseudosegments_of(&g, &faa).unwrap();
            let mut lens: Vec<usize> = fam.segments().iter().map(|s| s.edge_count()).collect();
            lens.sort_unstable();
            assert_eq!(lens, vec![1, 1, 1, 2, 2, 2]);
            assert_eq!(lens.iter().sum::<usize>(), 9);
            // each inner vertex is interior to exactly one arc
            for v in 3..6 {
                assert!(fam.interior_segment(v).is_some());
            }
        }
    }

    #[test]
    fn assignment_round_trip() {
        let g = corpus::prism();
        for faa in enumerate_faas(&g, &FaceCornerSpec::ExactTriangle, DEFAULT_BUDGET).unwrap() {
            let fam = pseudosegments_of(&g, &faa).unwrap();
            assert_eq!(fam.assignment().unwrap(), faa);
        }
    }

    #[test]
    fn arc_closing_around_a_cycle_is_reported() {
        // cube: every inner-square vertex flat in the inner square face
        let g = corpus::cube();
        let pg = g.graph();
        let inner = (0..pg.face_count())
            .find(|&f| (4..8).all(|v| pg.is_incident(v, f)))
            .unwrap();
        let faa = FlatAngleAssignment::from_pairs((4..8).map(|v| (v, inner))).unwrap();
        assert!(matches!(
            pseudosegments_of(&g, &faa),
            Err(FamilyError::ArcClosesCycle(_))
        ));
    }

    #[test]
    fn arc_touching_itself_is_reported() {
        // cube: 4, 5, 6 flat in the inner square already close 7-4-5-6-7;
        // 7 flat toward an outer quad adds a third arc edge at 7
        let g = corpus::cube();
        let pg = g.graph();
        let inner = (0..pg.face_count())
            .find(|&f| (4..8).all(|v| pg.is_incident(v, f)))
            .unwrap();
        let quad = (0..pg.face_count())
            .find(|&f| f != inner && pg.is_incident(7, f) && pg.is_incident(4, f))
            .unwrap();
        let faa = FlatAngleAssignment::from_pairs([(4, inner), (5, inner), (6, inner), (7, quad)])
            .unwrap();
        assert!(matches!(
            pseudosegments_of(&g, &faa),
            Err(FamilyError::ArcTouchesSelf(_))
        ));
    }

    #[test]
    fn family_validation() {
        let g = corpus::k4().graph().clone();
        let singles: Vec<Vec<usize>> = g.edges().iter().map(|&(a, b)| vec![a, b]).collect();
        assert!(PseudosegmentFamily::new(g.clone(), singles.clone()).is_ok());
        assert_eq!(
            PseudosegmentFamily::new(g.clone(), singles[1..].to_vec()).unwrap_err(),
            FamilyError::EdgeUncovered(0)
        );
        // 0-3-1 and 0-1 share both endpoints
        let shared = vec![
            vec![0, 3, 1],
            vec![0, 1],
            vec![1, 2],
            vec![2, 0],
            vec![2, 3],
        ];
        assert!(matches!(
            PseudosegmentFamily::new(g.clone(), shared).unwrap_err(),
            FamilyError::SharedPoints(..)
        ));
        assert_eq!(
            PseudosegmentFamily::new(g, vec![vec![0, 1, 0]]).unwrap_err(),
            FamilyError::NotSimple(0)
        );
    }
}
