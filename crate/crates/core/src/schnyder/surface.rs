//! Orthogonal surface of a Schnyder wood with face-counting coordinates.

use std::collections::{BTreeMap, VecDeque};

use super::{Item, SchnyderError, SchnyderWood};
use crate::medial::{medial_graph, MedialGraph};

/// Coordinate of a half-edge saddle in the direction of its ray.
pub const UNBOUNDED: i64 = i64::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flat {
    /// Coordinate that is constant on the flat.
    pub label: usize,
    pub level: i64,
    pub medial_edges: Vec<usize>,
    /// Medial vertices along the flat from its left end to its right end;
    /// empty when the medial edges do not form a simple path.
    pub path: Vec<usize>,
    pub bounded: bool,
}

impl Flat {
    pub fn ends(&self) -> Option<(usize, usize)> {
        Some((*self.path.first()?, *self.path.last()?))
    }
}

#[derive(Debug, Clone)]
pub struct OrthogonalSurface {
    pub medial: MedialGraph,
    /// Local minima, one per vertex of the graph.
    pub vertex_coords: Vec<[i64; 3]>,
    /// Saddle of every medial vertex; half-edge saddles are unbounded along
    /// their own label.
    pub saddle_coords: Vec<[i64; 3]>,
    /// Label of the flat carrying each medial edge.
    pub edge_label: Vec<usize>,
    pub flats: Vec<Flat>,
}

/// Face between two consecutive items of a pattern order.
fn face_between(w: &SchnyderWood, a: Item, b: Item) -> usize {
    let pg = w.graph().graph();
    let first = if w.clockwise { b } else { a };
    match first {
        Item::Half => pg.outer_face(),
        Item::Dart(d) => pg.left_face(d),
    }
}

/// Bounded faces in the region of `v` opposite to the paths of the two other
/// labels.
pub(crate) fn region(w: &SchnyderWood, v: usize, i: usize) -> Vec<usize> {
    let pg = w.graph().graph();
    let outer = pg.outer_face();
    let order = w.pattern_order(v);
    let out_pos = |label: usize| -> usize {
        match w.out_dart(v, label) {
            Some(d) => order.iter().position(|&x| x == Item::Dart(d)).unwrap(),
            None => order.iter().position(|&x| x == Item::Half).unwrap(),
        }
    };
    let (from, to) = (out_pos((i + 1) % 3), out_pos((i + 2) % 3));
    let len = order.len();
    let mut seeds = Vec::new();
    let mut p = from;
    while p != to {
        let q = (p + 1) % len;
        seeds.push(face_between(w, order[p], order[q]));
        p = q;
    }
    let mut blocked = vec![false; pg.edge_count()];
    for label in [(i + 1) % 3, (i + 2) % 3] {
        for e in w.path_edges(v, label) {
            blocked[e] = true;
        }
    }
    let mut inside = vec![false; pg.face_count()];
    let mut queue = VecDeque::new();
    for f in seeds {
        if f != outer && !inside[f] {
            inside[f] = true;
            queue.push_back(f);
        }
    }
    while let Some(f) = queue.pop_front() {
        for &d in pg.face_darts(f) {
            let g = pg.left_face(pg.twin(d));
            if !blocked[pg.dart_edge(d)] && g != outer && !inside[g] {
                inside[g] = true;
                queue.push_back(g);
            }
        }
    }
    (0..pg.face_count()).filter(|&f| inside[f]).collect()
}

fn join(a: [i64; 3], b: [i64; 3]) -> [i64; 3] {
    [a[0].max(b[0]), a[1].max(b[1]), a[2].max(b[2])]
}

/// Orders the edges of a flat along a simple path, if they form one.
fn path_of(medial: &MedialGraph, edges: &[usize]) -> Vec<usize> {
    let h = medial.graph.graph();
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &e in edges {
        let (a, b) = h.edges()[e];
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    if adj.values().any(|n| n.len() > 2) || adj.len() != edges.len() + 1 {
        return Vec::new();
    }
    let Some((&start, _)) = adj.iter().find(|(_, n)| n.len() == 1) else {
        return Vec::new();
    };
    let mut path = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = adj[&cur].iter().find(|&&x| x != prev) {
        path.push(next);
        prev = cur;
        cur = next;
    }
    path
}

/// Coordinates, saddles and flats of the wood.
pub fn surface_coordinates(w: &SchnyderWood) -> Result<OrthogonalSurface, SchnyderError> {
    let g = w.graph();
    let pg = g.graph();
    let n = pg.vertex_count();
    let m = pg.edge_count();
    let vertex_coords: Vec<[i64; 3]> = (0..n)
        .map(|v| [0, 1, 2].map(|i| region(w, v, i).len() as i64))
        .collect();
    let mut saddle_coords: Vec<[i64; 3]> = pg
        .edges()
        .iter()
        .map(|&(a, b)| join(vertex_coords[a], vertex_coords[b]))
        .collect();
    for (k, &s) in g.suspensions().iter().enumerate() {
        let mut c = vertex_coords[s];
        c[w.half_labels[k]] = UNBOUNDED;
        saddle_coords.push(c);
    }
    debug_assert_eq!(saddle_coords.len(), m + 3);

    let medial = medial_graph(g);
    let h = medial.graph.graph();
    let mut edge_label = Vec::with_capacity(h.edge_count());
    for (e, &(a, b)) in h.edges().iter().enumerate() {
        let (sa, sb) = (saddle_coords[a], saddle_coords[b]);
        let shared: Vec<usize> = (0..3).filter(|&i| sa[i] == sb[i]).collect();
        match shared[..] {
            [i] => edge_label.push(i),
            _ => return Err(SchnyderError::AmbiguousFlatMembership(e)),
        }
    }

    // flats: connected groups of medial edges with equal label and level
    let mut groups: BTreeMap<(usize, i64), Vec<usize>> = BTreeMap::new();
    for (e, &(a, _)) in h.edges().iter().enumerate() {
        let i = edge_label[e];
        groups
            .entry((i, saddle_coords[a][i]))
            .or_default()
            .push(e);
    }
    let mut flats = Vec::new();
    for ((label, level), edges) in groups {
        for part in h.edge_components(&edges) {
            let medial_edges: Vec<usize> = edges
                .iter()
                .copied()
                .filter(|&e| part.binary_search(&h.edges()[e].0).is_ok())
                .collect();
            let bounded = part
                .iter()
                .all(|&x| saddle_coords[x].iter().all(|&c| c != UNBOUNDED));
            let mut path = path_of(&medial, &medial_edges);
            let right = (label + 1) % 3;
            if path.len() > 1 && saddle_coords[path[0]][right] > saddle_coords[*path.last().unwrap()][right] {
                path.reverse();
            }
            flats.push(Flat {
                label,
                level,
                medial_edges,
                path,
                bounded,
            });
        }
    }
    Ok(OrthogonalSurface {
        medial,
        vertex_coords,
        saddle_coords,
        edge_label,
        flats,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigidityReport {
    pub ok: bool,
    pub offending_flat: Option<usize>,
}

fn monotone(values: &[i64]) -> Option<std::cmp::Ordering> {
    use std::cmp::Ordering::*;
    let mut dir = Equal;
    for w in values.windows(2) {
        match (dir, w[0].cmp(&w[1])) {
            (_, Equal) => {}
            (Equal, o) => dir = o,
            (d, o) if d != o => return None,
            _ => {}
        }
    }
    Some(dir)
}

/// Every bounded flat must run along a simple path on which the two other
/// coordinates change monotonically in opposite directions.
pub fn check_rigidity(s: &OrthogonalSurface) -> RigidityReport {
    for (k, flat) in s.flats.iter().enumerate() {
        if !flat.bounded {
            continue;
        }
        let rigid = !flat.path.is_empty() && {
            let coords = |j: usize| -> Vec<i64> {
                flat.path.iter().map(|&x| s.saddle_coords[x][j]).collect()
            };
            let a = monotone(&coords((flat.label + 1) % 3));
            let b = monotone(&coords((flat.label + 2) % 3));
            matches!((a, b), (Some(x), Some(y)) if x == std::cmp::Ordering::Equal
                || y == std::cmp::Ordering::Equal
                || x != y)
        };
        if !rigid {
            return RigidityReport {
                ok: false,
                offending_flat: Some(k),
            };
        }
    }
    RigidityReport {
        ok: true,
        offending_flat: None,
    }
}
