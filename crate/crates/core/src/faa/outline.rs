use std::collections::{HashSet, VecDeque};

use super::{FaaError, FlatAngleAssignment};
use crate::graph::{PlaneGraph, SuspendedGraph};

/// The outer boundary walk of a connected subgraph together with everything
/// it encloses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutlineCycle {
    /// Closed walk along the outer face of the source subgraph; the first
    /// vertex is not repeated at the end.
    pub walk: Vec<usize>,
    /// Sorted edge ids of the subgraph the walk bounds.
    pub source_edges: Vec<usize>,
    pub inside_edge: Vec<bool>,
    pub inside_face: Vec<bool>,
    pub inside_vertex: Vec<bool>,
    /// Distinct walk vertices, ascending, each flagged with whether it has
    /// an incident edge outside the interior.
    exposed: Vec<(usize, bool)>,
}

impl OutlineCycle {
    /// Distinct vertices of the walk, ascending.
    pub fn walk_vertices(&self) -> Vec<usize> {
        self.exposed.iter().map(|&(v, _)| v).collect()
    }

    pub fn interior_edges(&self) -> Vec<usize> {
        indices(&self.inside_edge)
    }

    pub fn interior_faces(&self) -> Vec<usize> {
        indices(&self.inside_face)
    }

    pub fn interior_vertices(&self) -> Vec<usize> {
        indices(&self.inside_vertex)
    }

    /// Whether the source subgraph is a path, whose outline is exempt.
    pub fn is_path(&self, g: &PlaneGraph) -> bool {
        is_path(g, &self.source_edges)
    }
}

fn indices(mask: &[bool]) -> Vec<usize> {
    mask.iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| i)
        .collect()
}

fn is_path(g: &PlaneGraph, edges: &[usize]) -> bool {
    let mut deg = vec![0usize; g.vertex_count()];
    for &e in edges {
        let (a, b) = g.edges()[e];
        deg[a] += 1;
        deg[b] += 1;
    }
    let verts = deg.iter().filter(|&&d| d > 0).count();
    deg.iter().all(|&d| d <= 2) && verts == edges.len() + 1
}

/// Faces not reachable from the outer face without crossing `blocked` edges.
pub(crate) fn enclosed_faces(g: &PlaneGraph, blocked: &[bool]) -> Vec<bool> {
    let mut reached = vec![false; g.face_count()];
    reached[g.outer_face()] = true;
    let mut queue = VecDeque::from([g.outer_face()]);
    while let Some(f) = queue.pop_front() {
        for &d in g.face_darts(f) {
            if blocked[g.dart_edge(d)] {
                continue;
            }
            let h = g.left_face(g.twin(d));
            if !reached[h] {
                reached[h] = true;
                queue.push_back(h);
            }
        }
    }
    reached.iter().map(|r| !r).collect()
}

/// Builds the outline cycle of the subgraph spanned by `edges`. Returns
/// `None` when the edge set is empty or disconnected.
pub fn outline_cycle_of(g: &PlaneGraph, edges: &[usize]) -> Option<OutlineCycle> {
    if edges.is_empty() || g.edge_components(edges).len() != 1 {
        return None;
    }
    let mut source = vec![false; g.edge_count()];
    for &e in edges {
        source[e] = true;
    }
    let inside_face = enclosed_faces(g, &source);
    let inside_edge: Vec<bool> = (0..g.edge_count())
        .map(|e| {
            let (a, b) = g.edges()[e];
            let d = g.dart(a, b).unwrap();
            source[e] || (inside_face[g.left_face(d)] && inside_face[g.left_face(g.twin(d))])
        })
        .collect();
    let inside_vertex: Vec<bool> = (0..g.vertex_count())
        .map(|v| {
            g.neighbors(v)
                .iter()
                .any(|&u| source[g.edge_id(v, u).unwrap()])
                || g.faces_around(v).iter().all(|&f| inside_face[f])
        })
        .collect();

    // walk the outer face of the subgraph, starting from the smallest dart
    // that has an outside face on its left
    let start = (0..g.dart_count())
        .find(|&d| source[g.dart_edge(d)] && !inside_face[g.left_face(d)])
        .unwrap();
    let step = |d: usize| -> usize {
        let v = g.head(d);
        let k = g.dart_position(g.twin(d));
        let deg = g.degree(v);
        (1..=deg)
            .map(|i| g.dart_at(v, (k + deg - i) % deg))
            .find(|&x| source[g.dart_edge(x)])
            .unwrap()
    };
    let mut walk = Vec::new();
    let mut d = start;
    loop {
        walk.push(g.tail(d));
        d = step(d);
        if d == start {
            break;
        }
    }
    let mut source_edges = edges.to_vec();
    source_edges.sort_unstable();
    source_edges.dedup();
    let mut vs = walk.clone();
    vs.sort_unstable();
    vs.dedup();
    let exposed = vs
        .into_iter()
        .map(|v| {
            let out = g
                .neighbors(v)
                .iter()
                .any(|&u| !inside_edge[g.edge_id(v, u).unwrap()]);
            (v, out)
        })
        .collect();
    Some(OutlineCycle {
        walk,
        source_edges,
        inside_edge,
        inside_face,
        inside_vertex,
        exposed,
    })
}

/// Walk vertices that are combinatorially convex: a suspension, or an
/// unassigned vertex with an edge outside, or a vertex assigned to an
/// outside face with an edge outside.
pub fn convex_corners(
    g: &SuspendedGraph,
    cycle: &OutlineCycle,
    faa: &FlatAngleAssignment,
) -> Vec<usize> {
    cycle
        .exposed
        .iter()
        .filter(|&&(v, edge_outside)| {
            g.is_suspension(v)
                || edge_outside
                    && match faa.face_of(v) {
                        None => true,
                        Some(f) => !cycle.inside_face[f],
                    }
        })
        .map(|&(v, _)| v)
        .collect()
}

fn has_three_corners(g: &SuspendedGraph, cycle: &OutlineCycle, faa: &FlatAngleAssignment) -> bool {
    let mut n = 0;
    for &(v, edge_outside) in &cycle.exposed {
        let convex = g.is_suspension(v)
            || edge_outside && faa.face_of(v).is_none_or(|f| !cycle.inside_face[f]);
        if convex {
            n += 1;
            if n == 3 {
                return true;
            }
        }
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoStarMode {
    /// Outlines of all connected subgraphs.
    Full,
    /// Only simple cycles of the graph.
    SimpleCycles,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoStarReport {
    pub ok: bool,
    pub checked: usize,
    /// Smallest outline cycle with fewer than three convex corners.
    pub witness: Option<OutlineCycle>,
    pub witness_corners: Vec<usize>,
}

/// All outline cycles that the given mode has to check, excluding outlines
/// of paths, ordered by source edge count and then lexicographically.
pub fn outline_cycles(
    g: &PlaneGraph,
    mode: CoStarMode,
    budget: u64,
) -> Result<Vec<OutlineCycle>, FaaError> {
    if g.edge_count() > 128 {
        return Err(FaaError::TooManyEdges(g.edge_count()));
    }
    let masks = match mode {
        CoStarMode::Full => closed_regions(g, budget)?,
        CoStarMode::SimpleCycles => simple_cycles(g, budget)?,
    };
    let mut cycles: Vec<OutlineCycle> = masks
        .into_iter()
        .map(|m| outline_cycle_of(g, &mask_edges(m)).unwrap())
        .filter(|c| !c.is_path(g))
        .collect();
    cycles.sort_by(|a, b| {
        (a.source_edges.len(), &a.source_edges).cmp(&(b.source_edges.len(), &b.source_edges))
    });
    Ok(cycles)
}

fn mask_edges(m: u128) -> Vec<usize> {
    (0..128).filter(|&e| m >> e & 1 == 1).collect()
}

fn edge_neighbors(g: &PlaneGraph) -> Vec<u128> {
    (0..g.edge_count())
        .map(|e| {
            let (a, b) = g.edges()[e];
            let mut m = 0u128;
            for v in [a, b] {
                for &u in g.neighbors(v) {
                    m |= 1 << g.edge_id(v, u).unwrap();
                }
            }
            m & !(1 << e)
        })
        .collect()
}

/// Connected edge sets that equal their own interior. Every outline cycle
/// is determined by such a set, so they stand in for all connected subgraphs.
fn closed_regions(g: &PlaneGraph, budget: u64) -> Result<Vec<u128>, FaaError> {
    let nbr = edge_neighbors(g);
    let mut out = Vec::new();
    let mut nodes = 0u64;
    let mut blocked = vec![false; g.edge_count()];
    let mut visit = |m: u128, nodes: &mut u64| -> Result<(), FaaError> {
        *nodes += 1;
        if *nodes > budget {
            return Err(FaaError::BudgetExceeded(budget));
        }
        for (e, b) in blocked.iter_mut().enumerate() {
            *b = m >> e & 1 == 1;
        }
        let inside = enclosed_faces(g, &blocked);
        let closed = (0..g.edge_count()).all(|e| {
            if m >> e & 1 == 1 {
                return true;
            }
            let (a, b) = g.edges()[e];
            let d = g.dart(a, b).unwrap();
            !(inside[g.left_face(d)] && inside[g.left_face(g.twin(d))])
        });
        if closed {
            out.push(m);
        }
        Ok(())
    };
    // each connected set is generated once, from its smallest edge
    fn grow(
        sub: u128,
        mut cand: u128,
        mut banned: u128,
        nbr: &[u128],
        nodes: &mut u64,
        visit: &mut impl FnMut(u128, &mut u64) -> Result<(), FaaError>,
    ) -> Result<(), FaaError> {
        visit(sub, nodes)?;
        while cand != 0 {
            let x = cand.trailing_zeros() as usize;
            cand &= !(1 << x);
            let next = sub | 1 << x;
            let next_cand = (cand | nbr[x]) & !next & !banned;
            grow(next, next_cand, banned, nbr, nodes, visit)?;
            banned |= 1 << x;
        }
        Ok(())
    }
    for start in 0..g.edge_count() {
        let below: u128 = (1u128 << start) - 1;
        let banned = below | 1 << start;
        grow(
            1 << start,
            nbr[start] & !banned,
            banned,
            &nbr,
            &mut nodes,
            &mut visit,
        )?;
    }
    Ok(out)
}

fn simple_cycles(g: &PlaneGraph, budget: u64) -> Result<Vec<u128>, FaaError> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut nodes = 0u64;
    for s in 0..g.vertex_count() {
        let mut on_path = vec![false; g.vertex_count()];
        on_path[s] = true;
        let mut path = vec![s];
        dfs_cycles(
            g,
            s,
            &mut path,
            &mut on_path,
            0,
            &mut seen,
            &mut out,
            &mut nodes,
            budget,
        )?;
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn dfs_cycles(
    g: &PlaneGraph,
    s: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    mask: u128,
    seen: &mut HashSet<u128>,
    out: &mut Vec<u128>,
    nodes: &mut u64,
    budget: u64,
) -> Result<(), FaaError> {
    *nodes += 1;
    if *nodes > budget {
        return Err(FaaError::BudgetExceeded(budget));
    }
    let v = *path.last().unwrap();
    for &u in g.neighbors(v) {
        let e = g.edge_id(v, u).unwrap();
        if u == s && path.len() >= 3 {
            let m = mask | 1 << e;
            if seen.insert(m) {
                out.push(m);
            }
        } else if u > s && !on_path[u] {
            on_path[u] = true;
            path.push(u);
            dfs_cycles(g, s, path, on_path, mask | 1 << e, seen, out, nodes, budget)?;
            path.pop();
            on_path[u] = false;
        }
    }
    Ok(())
}

/// Checks that every outline cycle in `cycles` has at least three convex
/// corners. The first failing cycle in the given order is the witness.
pub fn check_co_star_with(
    g: &SuspendedGraph,
    faa: &FlatAngleAssignment,
    cycles: &[OutlineCycle],
) -> CoStarReport {
    for (i, c) in cycles.iter().enumerate() {
        if has_three_corners(g, c, faa) {
            continue;
        }
        return CoStarReport {
            ok: false,
            checked: i + 1,
            witness: Some(c.clone()),
            witness_corners: convex_corners(g, c, faa),
        };
    }
    CoStarReport {
        ok: true,
        checked: cycles.len(),
        witness: None,
        witness_corners: Vec::new(),
    }
}

pub fn check_co_star(
    g: &SuspendedGraph,
    faa: &FlatAngleAssignment,
    mode: CoStarMode,
    budget: u64,
) -> Result<CoStarReport, FaaError> {
    let cycles = outline_cycles(g.graph(), mode, budget)?;
    Ok(check_co_star_with(g, faa, &cycles))
}
