//! Schnyder woods of internally 3-connected plane graphs, their orthogonal
//! surfaces, and the primal-dual triangle contact representations they induce.
//!
//! Labels are stored as `0`, `1`, `2`; label `i` is colour `i + 1` in the
//! usual numbering.

mod dissection;
mod orientation;
mod surface;

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::SuspendedGraph;
use crate::harmonic::HarmonicError;
use crate::medial::FaceOrigin;

pub use dissection::{
    medial_faa, medial_faa_from_wood, primal_dual_representation, Contact, Dissection, Tile,
};
pub use surface::{check_rigidity, surface_coordinates, Flat, OrthogonalSurface, RigidityReport};

use orientation::Head;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SchnyderError {
    #[error("graph is not internally 3-connected")]
    Not3Connected,
    #[error("orientation admits no consistent labeling")]
    Labeling,
    #[error("flat {0} is not rigid")]
    SurfaceNotRigid(usize),
    #[error("medial edge {0} does not lie on a unique flat")]
    AmbiguousFlatMembership(usize),
    #[error("medial vertex {0} has no unique flat angle")]
    AmbiguousFlatAngle(usize),
    #[error("medial drawing is not a triangle representation: {0}")]
    NotTriangular(String),
    #[error(transparent)]
    Harmonic(#[from] HarmonicError),
}

/// One position in the cyclic order around a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Item {
    Dart(usize),
    Half,
}

#[derive(Debug, Clone)]
pub struct SchnyderWood {
    graph: SuspendedGraph,
    /// Label of every dart that is outgoing at its tail.
    pub out_label: Vec<Option<usize>>,
    /// Label of the half-edge at each suspension.
    pub half_labels: [usize; 3],
    /// Set when the suspensions run clockwise around the interior; the label
    /// pattern at each vertex is then read clockwise, otherwise counterclockwise.
    pub clockwise: bool,
}

impl SchnyderWood {
    pub fn graph(&self) -> &SuspendedGraph {
        &self.graph
    }

    /// Label of the edge `u -> v` in that direction, if it is outgoing at `u`.
    pub fn label(&self, u: usize, v: usize) -> Option<usize> {
        self.graph.graph().dart(u, v).and_then(|d| self.out_label[d])
    }

    pub fn is_bidirected(&self, e: usize) -> bool {
        let (a, b) = self.graph.graph().edges()[e];
        self.label(a, b).is_some() && self.label(b, a).is_some()
    }

    /// The outgoing dart of label `i` at `v`; `None` at a suspension whose
    /// half-edge carries `i`.
    pub fn out_dart(&self, v: usize, i: usize) -> Option<usize> {
        let pg = self.graph.graph();
        (0..pg.degree(v))
            .map(|k| pg.dart_at(v, k))
            .find(|&d| self.out_label[d] == Some(i))
    }

    /// Vertices of the path that leaves `v` along label `i`.
    pub fn path(&self, v: usize, i: usize) -> Vec<usize> {
        let pg = self.graph.graph();
        let mut out = vec![v];
        let mut cur = v;
        while let Some(d) = self.out_dart(cur, i) {
            cur = pg.head(d);
            out.push(cur);
            if out.len() > pg.vertex_count() {
                break;
            }
        }
        out
    }

    /// Edge ids of the path that leaves `v` along label `i`.
    pub fn path_edges(&self, v: usize, i: usize) -> Vec<usize> {
        let pg = self.graph.graph();
        self.path(v, i)
            .windows(2)
            .map(|w| pg.edge_id(w[0], w[1]).unwrap())
            .collect()
    }

    /// Face of the medial graph that receives the medial vertex of edge `e`:
    /// the head of a one-way edge, or for a two-way edge the face that the
    /// dual edge points to.
    pub fn medial_head(&self, e: usize) -> FaceOrigin {
        let pg = self.graph.graph();
        let (a, b) = pg.edges()[e];
        let d = pg.dart(a, b).unwrap();
        match (self.out_label[d], self.out_label[pg.twin(d)]) {
            (Some(_), None) => FaceOrigin::Vertex(b),
            (None, Some(_)) => FaceOrigin::Vertex(a),
            (Some(i), Some(j)) => {
                // at a, the incoming part follows the outgoing one in pattern order
                // exactly when i = j + 1; the dual edge then points backwards
                let forward = (i == (j + 1) % 3) == self.clockwise;
                if forward {
                    FaceOrigin::Face(pg.left_face(d))
                } else {
                    FaceOrigin::Face(pg.left_face(pg.twin(d)))
                }
            }
            (None, None) => panic!("edge {e} is unlabeled"),
        }
    }

    /// Items around `v` in the sense in which the label pattern is read.
    fn pattern_order(&self, v: usize) -> Vec<Item> {
        pattern_order(&self.graph, v, self.clockwise)
    }
}

fn pattern_order(g: &SuspendedGraph, v: usize, clockwise: bool) -> Vec<Item> {
    let pg = g.graph();
    let mut items = Vec::with_capacity(pg.degree(v) + 1);
    let mut half_placed = !g.is_suspension(v);
    for k in 0..pg.degree(v) {
        let d = pg.dart_at(v, k);
        items.push(Item::Dart(d));
        if !half_placed && pg.left_face(d) == pg.outer_face() {
            items.push(Item::Half);
            half_placed = true;
        }
    }
    if clockwise {
        items.reverse();
    }
    items
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SchnyderViolation {
    /// Both directions of the edge carry the same label.
    SameLabels(usize),
    Unlabeled(usize),
    /// Half-edge at suspension `k` does not carry label `k`.
    HalfEdgeLabel(usize),
    /// The cyclic label pattern fails at the vertex.
    VertexPattern(usize),
    MonochromeCycle { label: usize, vertices: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchnyderReport {
    pub ok: bool,
    pub violations: Vec<SchnyderViolation>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Token {
    Out(usize),
    In(usize),
}

fn vertex_pattern_ok(w: &SchnyderWood, v: usize) -> bool {
    let pg = w.graph.graph();
    let mut tokens = Vec::new();
    for item in w.pattern_order(v) {
        match item {
            Item::Half => {
                let k = w.graph.suspensions().iter().position(|&s| s == v).unwrap();
                tokens.push(Token::Out(w.half_labels[k]));
            }
            Item::Dart(d) => match (w.out_label[d], w.out_label[pg.twin(d)]) {
                (Some(o), Some(i)) if o == (i + 1) % 3 => {
                    tokens.extend([Token::Out(o), Token::In(i)]);
                }
                (Some(o), Some(i)) => tokens.extend([Token::In(i), Token::Out(o)]),
                (Some(o), None) => tokens.push(Token::Out(o)),
                (None, Some(i)) => tokens.push(Token::In(i)),
                (None, None) => {}
            },
        }
    }
    for i in 0..3 {
        if tokens.iter().filter(|&&t| t == Token::Out(i)).count() != 1 {
            return false;
        }
    }
    let start = tokens.iter().position(|&t| t == Token::Out(0)).unwrap();
    tokens.rotate_left(start);
    // between out-i and out-(i+1) only in-(i+2) may appear
    let mut current = 0;
    for &t in &tokens[1..] {
        match t {
            Token::Out(o) if o == current + 1 => current = o,
            Token::In(i) if i == (current + 2) % 3 => {}
            _ => return false,
        }
    }
    true
}

fn monochrome_cycle(w: &SchnyderWood, label: usize) -> Option<Vec<usize>> {
    let pg = w.graph.graph();
    let n = pg.vertex_count();
    let succ: Vec<Option<usize>> = (0..n)
        .map(|v| w.out_dart(v, label).map(|d| pg.head(d)))
        .collect();
    // each vertex has at most one successor, so cycles are found by walking
    let mut state = vec![0u8; n];
    for s in 0..n {
        let mut trail = Vec::new();
        let mut v = s;
        while state[v] == 0 {
            state[v] = 1;
            trail.push(v);
            match succ[v] {
                Some(next) => v = next,
                None => break,
            }
        }
        if state[v] == 1 && succ[v].is_some() {
            if let Some(p) = trail.iter().position(|&x| x == v) {
                return Some(trail[p..].to_vec());
            }
        }
        for x in trail {
            state[x] = 2;
        }
    }
    None
}

/// Checks the four defining conditions of a Schnyder wood.
pub fn verify_schnyder(w: &SchnyderWood) -> SchnyderReport {
    let pg = w.graph.graph();
    let mut violations = Vec::new();
    for (e, &(a, b)) in pg.edges().iter().enumerate() {
        match (w.label(a, b), w.label(b, a)) {
            (None, None) => violations.push(SchnyderViolation::Unlabeled(e)),
            (Some(i), Some(j)) if i == j => violations.push(SchnyderViolation::SameLabels(e)),
            _ => {}
        }
    }
    for k in 0..3 {
        if w.half_labels[k] != k {
            violations.push(SchnyderViolation::HalfEdgeLabel(k));
        }
    }
    for v in 0..pg.vertex_count() {
        if !vertex_pattern_ok(w, v) {
            violations.push(SchnyderViolation::VertexPattern(v));
        }
    }
    for label in 0..3 {
        if let Some(vertices) = monochrome_cycle(w, label) {
            violations.push(SchnyderViolation::MonochromeCycle { label, vertices });
        }
    }
    SchnyderReport {
        ok: violations.is_empty(),
        violations,
    }
}

/// Index of the sector (after out-item `t`) containing `item`.
fn sector_of(order: &[Item], outs: &[usize], item: Item) -> usize {
    let pos = order.iter().position(|&x| x == item).unwrap();
    (0..outs.len())
        .rev()
        .find(|&t| outs[t] < pos)
        .unwrap_or(outs.len() - 1)
}

/// A Schnyder wood obtained from an orientation of the primal-dual
/// completion, labelled by propagating the local pattern.
pub fn compute_schnyder_wood(g: &SuspendedGraph) -> Result<SchnyderWood, SchnyderError> {
    if !g.is_internally_3connected() {
        return Err(SchnyderError::Not3Connected);
    }
    let pg = g.graph();
    let n = pg.vertex_count();
    let comp = orientation::orient(g).ok_or(SchnyderError::Not3Connected)?;
    let wo = comp.walk_order;
    // the outer walk runs clockwise around the interior
    let clockwise = (0..3).any(|r| (0..3).all(|t| wo[(r + t) % 3] == t));

    let outgoing = |d: usize| comp.edge_heads[pg.dart_edge(d)] != Head::Vertex(pg.tail(d));
    let orders: Vec<Vec<Item>> = (0..n).map(|v| pattern_order(g, v, clockwise)).collect();
    // positions of outgoing items within each order
    let outs: Vec<Vec<usize>> = orders
        .iter()
        .map(|o| {
            o.iter()
                .enumerate()
                .filter(|(_, it)| match it {
                    Item::Half => true,
                    Item::Dart(d) => outgoing(*d),
                })
                .map(|(p, _)| p)
                .collect()
        })
        .collect();
    if outs.iter().any(|o| o.len() != 3) {
        return Err(SchnyderError::Labeling);
    }
    let out_index = |v: usize, item: Item| -> usize {
        let p = orders[v].iter().position(|&x| x == item).unwrap();
        outs[v].iter().position(|&q| q == p).unwrap()
    };

    // one-way edges fix the rotation offset between their endpoints
    let mut links: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    // two-way edges forbid one offset
    let mut forbidden: Vec<(usize, usize, usize)> = Vec::new();
    for d in 0..pg.dart_count() {
        let (u, w) = (pg.tail(d), pg.head(d));
        match comp.edge_heads[pg.dart_edge(d)] {
            Head::Vertex(h) if h == w => {
                let t = sector_of(&orders[w], &outs[w], Item::Dart(pg.twin(d)));
                let delta = (out_index(u, Item::Dart(d)) + 1 + 3 - t) % 3;
                links[u].push((w, delta));
                links[w].push((u, (3 - delta) % 3));
            }
            Head::Face(_) | Head::Outer(_) if u < w => {
                let iu = out_index(u, Item::Dart(d));
                let iw = out_index(w, Item::Dart(pg.twin(d)));
                // rot_w + iw != rot_u + iu
                forbidden.push((u, w, (iu + 3 - iw) % 3));
            }
            _ => {}
        }
    }

    let mut class = vec![usize::MAX; n];
    let mut offset = vec![0usize; n];
    let mut pins: Vec<Option<usize>> = Vec::new();
    for s in 0..n {
        if class[s] != usize::MAX {
            continue;
        }
        let c = pins.len();
        pins.push(None);
        class[s] = c;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &(w, delta) in &links[u] {
                let want = (offset[u] + delta) % 3;
                if class[w] == usize::MAX {
                    class[w] = c;
                    offset[w] = want;
                    queue.push_back(w);
                } else if offset[w] != want {
                    return Err(SchnyderError::Labeling);
                }
            }
        }
    }
    for (k, &s) in g.suspensions().iter().enumerate() {
        let t = out_index(s, Item::Half);
        let base = (k + 6 - t - offset[s]) % 3;
        let c = class[s];
        match pins[c] {
            Some(b) if b != base => return Err(SchnyderError::Labeling),
            _ => pins[c] = Some(base),
        }
    }

    let build = |base: &[usize]| -> SchnyderWood {
        let mut out_label = vec![None; pg.dart_count()];
        for v in 0..n {
            let rot = (base[class[v]] + offset[v]) % 3;
            for (t, &p) in outs[v].iter().enumerate() {
                if let Item::Dart(d) = orders[v][p] {
                    out_label[d] = Some((rot + t) % 3);
                }
            }
        }
        SchnyderWood {
            graph: g.clone(),
            out_label,
            half_labels: [0, 1, 2],
            clockwise,
        }
    };

    let classes = pins.len();
    let mut base: Vec<usize> = pins.iter().map(|p| p.unwrap_or(0)).collect();
    let free: Vec<usize> = (0..classes).filter(|&c| pins[c].is_none()).collect();
    let consistent = |base: &[usize]| {
        forbidden.iter().all(|&(u, w, diff)| {
            let ru = (base[class[u]] + offset[u]) % 3;
            let rw = (base[class[w]] + offset[w]) % 3;
            (rw + 3 - ru) % 3 != diff
        })
    };
    // odometer over the unpinned classes
    loop {
        if consistent(&base) {
            let wood = build(&base);
            if verify_schnyder(&wood).ok {
                return Ok(wood);
            }
        }
        let Some(k) = free.iter().position(|&c| base[c] < 2) else {
            return Err(SchnyderError::Labeling);
        };
        for &c in &free[..k] {
            base[c] = 0;
        }
        base[free[k]] += 1;
    }
}
