//! Enclosing triangle, protection points and triangulation points.

use std::collections::BTreeMap;

use super::{runs, PseudosegmentArrangement, StretchError};
use crate::faa::PseudosegmentFamily;
use crate::graph::{PlaneGraph, SuspendedGraph};

/// The arrangement extended so that every bounded region is bounded by three
/// pseudosegments. Vertices and pseudosegment paths of the base keep their
/// ids; everything added is numbered after them.
#[derive(Debug, Clone)]
pub struct AugmentedArrangement {
    pub base: PseudosegmentArrangement,
    pub family: PseudosegmentFamily,
    /// Corners of the enclosing triangle, in counterclockwise order.
    pub corners: [usize; 3],
    /// Sides of the enclosing triangle; each runs through one extremal point.
    pub delta: [[usize; 3]; 3],
    pub protection_points: Vec<usize>,
    pub triangulation_points: Vec<usize>,
}

impl AugmentedArrangement {
    pub fn suspended(&self) -> SuspendedGraph {
        SuspendedGraph::new(self.family.graph().clone(), self.corners)
            .expect("corners lie on the outer face")
    }

    pub fn base_vertex_count(&self) -> usize {
        self.base.graph().vertex_count()
    }

    /// Pseudosegment paths left after removing every added vertex.
    pub fn stripped_paths(&self) -> Vec<Vec<usize>> {
        let n = self.base_vertex_count();
        self.family
            .segments()
            .iter()
            .filter(|s| s.vertices().iter().all(|&v| v < n))
            .map(|s| s.vertices().to_vec())
            .collect()
    }

    /// Drops the added vertices from a list indexed by augmented vertex.
    pub fn strip<T: Clone>(&self, values: &[T]) -> Vec<T> {
        values[..self.base_vertex_count()].to_vec()
    }
}

/// Neighbours to insert counterclockwise right after a rotation position.
type Insertions = BTreeMap<usize, Vec<(usize, Vec<usize>)>>;

fn apply(rotation: &mut [Vec<usize>], ins: Insertions) {
    for (v, mut list) in ins {
        list.sort_by(|a, b| b.0.cmp(&a.0));
        for (pos, items) in list {
            let at = pos + 1;
            rotation[v].splice(at..at, items);
        }
    }
}

/// Three extremal points spread along the outer walk, each with the walk
/// position of its first visit.
fn anchors(arr: &PseudosegmentArrangement) -> Option<[(usize, usize); 3]> {
    let g = arr.graph();
    let extremal = arr.extremal_points();
    let walk = g.face_darts(g.outer_face());
    let mut seen = Vec::new();
    for (t, &d) in walk.iter().enumerate() {
        let v = g.tail(d);
        if extremal.binary_search(&v).is_ok() && !seen.iter().any(|&(u, _)| u == v) {
            seen.push((v, t));
        }
    }
    let r = seen.len();
    (r >= 3).then(|| [seen[0], seen[r / 3], seen[2 * r / 3]])
}

/// Builds the augmented arrangement. Needs at least two pseudosegments and
/// three extremal points.
pub fn augment(arr: &PseudosegmentArrangement) -> Result<AugmentedArrangement, StretchError> {
    let g = arr.graph();
    let n = g.vertex_count();
    let Some(q) = anchors(arr) else {
        return Err(StretchError::NotStretchable {
            witness: (0..arr.len()).collect(),
            points: arr.extremal_points(),
        });
    };
    let walk = g.face_darts(g.outer_face());

    // enclosing triangle: corner c_k sits between anchors k-1 and k
    let c = [n, n + 1, n + 2];
    let mut rotation: Vec<Vec<usize>> = g.rotation().to_vec();
    for k in 0..3 {
        rotation.push(vec![q[(k + 2) % 3].0, q[k].0]);
    }
    let mut ins = Insertions::new();
    for (k, &(v, t)) in q.iter().enumerate() {
        let pos = g.dart_position(walk[t]);
        ins.entry(v)
            .or_default()
            .push((pos, vec![c[(k + 1) % 3], c[k]]));
    }
    apply(&mut rotation, ins);
    let delta = [0, 1, 2].map(|k| [c[k], q[k].0, c[(k + 1) % 3]]);
    let hint = (q[0].0, c[1]);
    let mut paths: Vec<Vec<usize>> = arr
        .family()
        .segments()
        .iter()
        .map(|s| s.vertices().to_vec())
        .collect();
    paths.extend(delta.iter().map(|d| d.to_vec()));
    let enclosed = PseudosegmentFamily::new(PlaneGraph::new(rotation.clone(), hint)?, paths.clone())?;

    // protection points along every run of a region with more than three runs,
    // all joined to one triangulation point
    let eg = enclosed.graph();
    let mut ins = Insertions::new();
    let mut protection_points = Vec::new();
    let mut triangulation_points = Vec::new();
    for f in (0..eg.face_count()).filter(|&f| f != eg.outer_face()) {
        let rs = runs(&enclosed, f);
        let k = rs.len();
        if k < 3 {
            return Err(StretchError::DegenerateRegion(f));
        }
        if k == 3 {
            continue;
        }
        let first = rotation.len();
        let p: Vec<usize> = (first..first + k).collect();
        let t = first + k;
        let walk = eg.face_darts(f);
        for (i, r) in rs.iter().enumerate() {
            let (next, prev) = (p[(i + 1) % k], p[(i + k - 1) % k]);
            rotation.push(vec![r.start, r.end, next, t, prev]);
            paths.extend([vec![p[i], r.start], vec![p[i], r.end], vec![p[i], next], vec![p[i], t]]);
            let d = walk[r.first_dart];
            ins.entry(r.start)
                .or_default()
                .push((eg.dart_position(d), vec![p[i], prev]));
        }
        rotation.push(p.clone());
        protection_points.extend(&p);
        triangulation_points.push(t);
    }
    apply(&mut rotation, ins);
    // each protection cycle edge was listed from both ends
    for path in paths.iter_mut() {
        if path.len() == 2 && path[0] > path[1] {
            path.swap(0, 1);
        }
    }
    let base_paths = arr.len() + 3;
    let mut extra = paths.split_off(base_paths);
    extra.sort();
    extra.dedup();
    paths.extend(extra);
    let family = PseudosegmentFamily::new(PlaneGraph::new(rotation, hint)?, paths)?;
    Ok(AugmentedArrangement {
        base: arr.clone(),
        family,
        corners: [c[0], c[2], c[1]],
        delta,
        protection_points,
        triangulation_points,
    })
}
