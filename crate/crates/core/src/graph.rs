//! Combinatorial plane graphs given by rotation systems.
//!
//! A [`PlaneGraph`] stores, for every vertex, its neighbors in
//! counterclockwise order. Faces are traced with the "next edge" rule: after
//! arriving at `v` from `u`, leave along the neighbor that precedes `u` in the
//! counterclockwise order of `v`. With this rule every bounded face is walked
//! counterclockwise (face on the left) and the outer face clockwise.

use std::collections::{BTreeMap, HashMap, VecDeque};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} is out of range")]
    InvalidVertex(usize),
    #[error("rotation of {u} lists {v} but the rotation of {v} does not list {u}")]
    InconsistentRotation { u: usize, v: usize },
    #[error("self loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {u} lists neighbor {v} twice")]
    MultiEdge { u: usize, v: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("rotation system is not planar: |V| - |E| + |F| = {0}")]
    NotPlanar(i64),
    #[error("outer face hint {0}->{1} is not an edge")]
    InvalidOuterHint(usize, usize),
    #[error("suspensions must be three distinct vertices on the outer face, got {0:?}")]
    InvalidSuspensions([usize; 3]),
    #[error("suppressing vertex {vertex} would create a second edge {a}-{b}")]
    ReductionCreatesMultiEdge { vertex: usize, a: usize, b: usize },
}

/// A connected plane graph: a rotation system together with its traced faces.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneGraph {
    rotation: Vec<Vec<usize>>,
    dart_offset: Vec<usize>,
    dart_tail: Vec<usize>,
    dart_head: Vec<usize>,
    dart_edge: Vec<usize>,
    dart_index: HashMap<(usize, usize), usize>,
    edges: Vec<(usize, usize)>,
    dart_face: Vec<usize>,
    faces: Vec<Vec<usize>>,
    outer_face: usize,
}

impl PlaneGraph {
    /// Builds a plane graph from counterclockwise neighbor lists. The outer
    /// face is the face to the left of the dart `outer_hint.0 -> outer_hint.1`.
    pub fn new(rotation: Vec<Vec<usize>>, outer_hint: (usize, usize)) -> Result<Self, GraphError> {
        let n = rotation.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut dart_offset = Vec::with_capacity(n + 1);
        let mut dart_tail = Vec::new();
        let mut dart_head = Vec::new();
        let mut dart_index = HashMap::new();
        for (v, nbrs) in rotation.iter().enumerate() {
            dart_offset.push(dart_tail.len());
            for &u in nbrs {
                if u >= n {
                    return Err(GraphError::InvalidVertex(u));
                }
                if u == v {
                    return Err(GraphError::SelfLoop(v));
                }
                if dart_index.insert((v, u), dart_tail.len()).is_some() {
                    return Err(GraphError::MultiEdge { u: v, v: u });
                }
                dart_tail.push(v);
                dart_head.push(u);
            }
        }
        dart_offset.push(dart_tail.len());
        for (&(v, u), _) in dart_index.iter() {
            if !dart_index.contains_key(&(u, v)) {
                return Err(GraphError::InconsistentRotation { u: v, v: u });
            }
        }
        let mut edges: Vec<(usize, usize)> =
            dart_index.keys().filter(|(a, b)| a < b).copied().collect();
        edges.sort_unstable();
        let edge_of: HashMap<(usize, usize), usize> =
            edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let dart_edge = (0..dart_tail.len())
            .map(|d| {
                let (a, b) = (dart_tail[d], dart_head[d]);
                edge_of[&(a.min(b), a.max(b))]
            })
            .collect();

        let mut g = PlaneGraph {
            rotation,
            dart_offset,
            dart_tail,
            dart_head,
            dart_edge,
            dart_index,
            edges,
            dart_face: Vec::new(),
            faces: Vec::new(),
            outer_face: 0,
        };
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        g.trace_faces();
        let euler = n as i64 - g.edges.len() as i64 + g.faces.len() as i64;
        if euler != 2 {
            return Err(GraphError::NotPlanar(euler));
        }
        let hint = g
            .dart(outer_hint.0, outer_hint.1)
            .ok_or(GraphError::InvalidOuterHint(outer_hint.0, outer_hint.1))?;
        g.outer_face = g.dart_face[hint];
        Ok(g)
    }

    fn is_connected(&self) -> bool {
        let n = self.rotation.len();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &u in &self.rotation[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        count == n
    }

    fn trace_faces(&mut self) {
        let nd = self.dart_tail.len();
        let mut dart_face = vec![usize::MAX; nd];
        let mut faces = Vec::new();
        for start in 0..nd {
            if dart_face[start] != usize::MAX {
                continue;
            }
            let f = faces.len();
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                dart_face[d] = f;
                walk.push(d);
                d = self.next_in_face(d);
                if d == start {
                    break;
                }
            }
            faces.push(walk);
        }
        self.dart_face = dart_face;
        self.faces = faces;
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn dart_count(&self) -> usize {
        self.dart_tail.len()
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    /// Counterclockwise neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted; the index is the edge id.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.dart(u, v).map(|d| self.dart_edge[d])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.dart_index.contains_key(&(u, v))
    }

    pub fn dart(&self, u: usize, v: usize) -> Option<usize> {
        self.dart_index.get(&(u, v)).copied()
    }

    /// The dart leaving `v` towards its `k`-th counterclockwise neighbor.
    pub fn dart_at(&self, v: usize, k: usize) -> usize {
        self.dart_offset[v] + k
    }

    pub fn tail(&self, d: usize) -> usize {
        self.dart_tail[d]
    }

    pub fn head(&self, d: usize) -> usize {
        self.dart_head[d]
    }

    pub fn dart_edge(&self, d: usize) -> usize {
        self.dart_edge[d]
    }

    /// Position of `d` within the rotation of its tail.
    pub fn dart_position(&self, d: usize) -> usize {
        d - self.dart_offset[self.dart_tail[d]]
    }

    pub fn twin(&self, d: usize) -> usize {
        self.dart_index[&(self.dart_head[d], self.dart_tail[d])]
    }

    /// Face to the left of dart `d`.
    pub fn left_face(&self, d: usize) -> usize {
        self.dart_face[d]
    }

    pub fn next_in_face(&self, d: usize) -> usize {
        let (u, v) = (self.dart_tail[d], self.dart_head[d]);
        let twin = self.dart_index[&(v, u)];
        let k = twin - self.dart_offset[v];
        let deg = self.rotation[v].len();
        self.dart_offset[v] + (k + deg - 1) % deg
    }

    pub fn prev_in_face(&self, d: usize) -> usize {
        let u = self.dart_tail[d];
        let deg = self.rotation[u].len();
        let k = d - self.dart_offset[u];
        let out = self.dart_offset[u] + (k + 1) % deg;
        self.twin(out)
    }

    pub fn outer_face(&self) -> usize {
        self.outer_face
    }

    /// The same embedding with a different face designated as outer.
    pub fn with_outer_face(&self, f: usize) -> PlaneGraph {
        let mut g = self.clone();
        g.outer_face = f;
        g
    }

    /// Darts of face `f` in walk order.
    pub fn face_darts(&self, f: usize) -> &[usize] {
        &self.faces[f]
    }

    /// Vertices of face `f` in walk order (tails of its darts).
    pub fn face_vertices(&self, f: usize) -> Vec<usize> {
        self.faces[f].iter().map(|&d| self.dart_tail[d]).collect()
    }

    /// Length `|f|` of the face walk.
    pub fn face_len(&self, f: usize) -> usize {
        self.faces[f].len()
    }

    /// Lexicographically smallest rotation of the vertex sequence of `f`.
    pub fn canonical_face_walk(&self, f: usize) -> Vec<usize> {
        let walk = self.face_vertices(f);
        (0..walk.len())
            .map(|s| {
                walk[s..]
                    .iter()
                    .chain(&walk[..s])
                    .copied()
                    .collect::<Vec<_>>()
            })
            .min()
            .unwrap_or_default()
    }

    pub fn face_by_canonical_walk(&self) -> BTreeMap<Vec<usize>, usize> {
        (0..self.face_count())
            .map(|f| (self.canonical_face_walk(f), f))
            .collect()
    }

    /// Faces around `v` in counterclockwise order; entry `k` is the sector
    /// between neighbor `k` and neighbor `k + 1`.
    pub fn faces_around(&self, v: usize) -> Vec<usize> {
        (0..self.degree(v))
            .map(|k| self.dart_face[self.dart_at(v, k)])
            .collect()
    }

    pub fn is_incident(&self, v: usize, f: usize) -> bool {
        self.faces[f].iter().any(|&d| self.dart_tail[d] == v)
    }

    /// Every corner of `f` at `v`, as `(previous vertex, next vertex)` along
    /// the face walk.
    pub fn corners_at(&self, v: usize, f: usize) -> Vec<(usize, usize)> {
        self.faces[f]
            .iter()
            .filter(|&&d| self.dart_head[d] == v)
            .map(|&d| (self.dart_tail[d], self.dart_head[self.next_in_face(d)]))
            .collect()
    }

    pub fn vertices_on_face(&self, f: usize) -> Vec<usize> {
        let mut vs = self.face_vertices(f);
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// Connected components of the subgraph spanned by the given edge ids,
    /// each as a sorted vertex list.
    pub fn edge_components(&self, edge_ids: &[usize]) -> Vec<Vec<usize>> {
        let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &e in edge_ids {
            let (a, b) = self.edges[e];
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut comps = Vec::new();
        for &s in adj.keys() {
            if !seen.insert(s) {
                continue;
            }
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &u in &adj[&v] {
                    if seen.insert(u) {
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Dual adjacency: for each face, the faces across each of its darts.
    pub fn dual_neighbors(&self, f: usize) -> Vec<usize> {
        self.faces[f]
            .iter()
            .map(|&d| self.dart_face[self.twin(d)])
            .collect()
    }

    /// Checks whether `self` and `other` are isomorphic as embedded graphs via
    /// an orientation-preserving map sending `root.0 -> root.1` (darts given
    /// as vertex pairs). Returns the vertex map on success.
    pub fn isomorphism_from(
        &self,
        other: &PlaneGraph,
        root: ((usize, usize), (usize, usize)),
    ) -> Option<Vec<usize>> {
        if self.vertex_count() != other.vertex_count() || self.edge_count() != other.edge_count() {
            return None;
        }
        let d0 = self.dart(root.0 .0, root.0 .1)?;
        let e0 = other.dart(root.1 .0, root.1 .1)?;
        let mut dart_map = vec![usize::MAX; self.dart_count()];
        let mut vmap = vec![usize::MAX; self.vertex_count()];
        let mut queue = VecDeque::from([(d0, e0)]);
        while let Some((d, e)) = queue.pop_front() {
            if dart_map[d] != usize::MAX {
                if dart_map[d] != e {
                    return None;
                }
                continue;
            }
            let (v, w) = (self.tail(d), other.tail(e));
            if self.degree(v) != other.degree(w) {
                return None;
            }
            if vmap[v] != usize::MAX && vmap[v] != w {
                return None;
            }
            vmap[v] = w;
            dart_map[d] = e;
            // rotate around the tail and step across the edge
            let deg = self.degree(v);
            let (pd, pe) = (self.dart_position(d), other.dart_position(e));
            let d_next = self.dart_at(v, (pd + 1) % deg);
            let e_next = other.dart_at(w, (pe + 1) % deg);
            queue.push_back((d_next, e_next));
            queue.push_back((self.twin(d), other.twin(e)));
        }
        if dart_map.contains(&usize::MAX) {
            return None;
        }
        let mut used = vec![false; other.vertex_count()];
        for &w in &vmap {
            if used[w] {
                return None;
            }
            used[w] = true;
        }
        Some(vmap)
    }
}

/// A plane graph with three designated suspension vertices on its outer face.
#[derive(Debug, Clone, PartialEq)]
pub struct SuspendedGraph {
    graph: PlaneGraph,
    suspensions: [usize; 3],
}

impl SuspendedGraph {
    pub fn new(graph: PlaneGraph, suspensions: [usize; 3]) -> Result<Self, GraphError> {
        let [a, b, c] = suspensions;
        let n = graph.vertex_count();
        let on_outer = |v: usize| v < n && graph.is_incident(v, graph.outer_face());
        if a == b || b == c || a == c || !suspensions.iter().all(|&s| on_outer(s)) {
            return Err(GraphError::InvalidSuspensions(suspensions));
        }
        Ok(SuspendedGraph { graph, suspensions })
    }

    pub fn from_rotation(
        rotation: Vec<Vec<usize>>,
        outer_hint: (usize, usize),
        suspensions: [usize; 3],
    ) -> Result<Self, GraphError> {
        Self::new(PlaneGraph::new(rotation, outer_hint)?, suspensions)
    }

    pub fn graph(&self) -> &PlaneGraph {
        &self.graph
    }

    pub fn suspensions(&self) -> [usize; 3] {
        self.suspensions
    }

    pub fn is_suspension(&self, v: usize) -> bool {
        self.suspensions.contains(&v)
    }

    /// Embedded isomorphism that maps suspension `i` to suspension `i` and
    /// the outer face to the outer face.
    pub fn is_isomorphic(&self, other: &SuspendedGraph) -> bool {
        let (g, h) = (&self.graph, &other.graph);
        let s = self.suspensions[0];
        let t = other.suspensions[0];
        if g.degree(s) != h.degree(t) {
            return false;
        }
        let d = g.dart_at(s, 0);
        (0..h.degree(t)).any(|k| {
            let e = h.dart_at(t, k);
            let Some(vmap) = g.isomorphism_from(h, ((s, g.head(d)), (t, h.head(e)))) else {
                return false;
            };
            let susp_ok = (0..3).all(|i| vmap[self.suspensions[i]] == other.suspensions[i]);
            let od = g.face_darts(g.outer_face())[0];
            let image = h.dart(vmap[g.tail(od)], vmap[g.head(od)]);
            susp_ok && image.map(|x| h.left_face(x)) == Some(h.outer_face())
        })
    }

    /// Whether adding a vertex adjacent to the three suspensions yields a
    /// 3-connected graph. Brute force over all separating sets of size ≤ 2.
    pub fn is_internally_3connected(&self) -> bool {
        let g = &self.graph;
        let n = g.vertex_count() + 1;
        let inf = n - 1;
        let mut adj: Vec<Vec<usize>> = g.rotation().to_vec();
        adj.push(self.suspensions.to_vec());
        for &s in &self.suspensions {
            adj[s].push(inf);
        }
        if n < 4 {
            return false;
        }
        let connected_without = |removed: &[usize]| {
            let start = (0..n).find(|v| !removed.contains(v)).unwrap();
            let mut seen = vec![false; n];
            for &r in removed {
                seen[r] = true;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut count = removed.len() + 1;
            while let Some(v) = stack.pop() {
                for &u in &adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        count += 1;
                        stack.push(u);
                    }
                }
            }
            count == n
        };
        for a in 0..n {
            if !connected_without(&[a]) {
                return false;
            }
            for b in a + 1..n {
                if !connected_without(&[a, b]) {
                    return false;
                }
            }
        }
        true
    }

    /// Suppresses every non-suspension vertex of degree two.
    pub fn reduce_degree_two(&self) -> Result<Reduction, GraphError> {
        let g = &self.graph;
        let n = g.vertex_count();
        let mut rot: Vec<Vec<usize>> = g.rotation().to_vec();
        let mut alive = vec![true; n];
        // chain of suppressed vertices on each current edge, oriented min -> max
        let mut chains: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        let chain_from = |chains: &HashMap<(usize, usize), Vec<usize>>, a: usize, b: usize| {
            let mut c = chains
                .get(&(a.min(b), a.max(b)))
                .cloned()
                .unwrap_or_default();
            if a > b {
                c.reverse();
            }
            c
        };
        loop {
            let Some(v) = (0..n).find(|&v| alive[v] && rot[v].len() == 2 && !self.is_suspension(v))
            else {
                break;
            };
            let (a, b) = (rot[v][0], rot[v][1]);
            if rot[a].contains(&b) {
                return Err(GraphError::ReductionCreatesMultiEdge { vertex: v, a, b });
            }
            let mut chain = chain_from(&chains, a, v);
            chain.push(v);
            chain.extend(chain_from(&chains, v, b));
            chains.remove(&(a.min(v), a.max(v)));
            chains.remove(&(v.min(b), v.max(b)));
            if a > b {
                chain.reverse();
            }
            chains.insert((a.min(b), a.max(b)), chain);
            for (x, y) in [(a, b), (b, a)] {
                let pos = rot[x].iter().position(|&w| w == v).unwrap();
                rot[x][pos] = y;
            }
            alive[v] = false;
            rot[v].clear();
        }
        let original_ids: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
        let mut new_id = vec![usize::MAX; n];
        for (i, &v) in original_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let new_rot: Vec<Vec<usize>> = original_ids
            .iter()
            .map(|&v| rot[v].iter().map(|&u| new_id[u]).collect())
            .collect();
        let walk: Vec<usize> = g
            .face_vertices(g.outer_face())
            .into_iter()
            .filter(|&v| alive[v])
            .collect();
        let hint = (new_id[walk[0]], new_id[walk[1 % walk.len()]]);
        let graph = PlaneGraph::new(new_rot, hint)?;
        let susp = self.suspensions.map(|s| new_id[s]);
        let reduced = SuspendedGraph::new(graph, susp)?;
        let mut chain_list: Vec<((usize, usize), Vec<usize>)> = chains
            .into_iter()
            .filter(|(_, c)| !c.is_empty())
            .map(|((a, b), c)| ((new_id[a], new_id[b]), c))
            .collect();
        chain_list.sort();
        Ok(Reduction {
            graph: reduced,
            original_ids,
            chains: chain_list,
            original_vertex_count: n,
        })
    }
}

/// Result of suppressing degree-two vertices, with the data needed to place
/// suppressed vertices back onto their carrier edges.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub graph: SuspendedGraph,
    /// `original_ids[new] = old`.
    pub original_ids: Vec<usize>,
    /// For each reduced edge `(a, b)` (new ids), the suppressed original
    /// vertices along it in order from `a` to `b`.
    pub chains: Vec<((usize, usize), Vec<usize>)>,
    pub original_vertex_count: usize,
}

impl Reduction {
    pub fn is_identity(&self) -> bool {
        self.chains.is_empty()
    }

    /// Lifts coordinates of the reduced graph to the original graph, spacing
    /// suppressed vertices evenly along their carrier segment.
    pub fn back_substitute(
        &self,
        coords: &[crate::geometry::Point],
    ) -> Vec<crate::geometry::Point> {
        let mut out = vec![crate::geometry::Point::new(0.0, 0.0); self.original_vertex_count];
        for (new, &old) in self.original_ids.iter().enumerate() {
            out[old] = coords[new];
        }
        for ((a, b), chain) in &self.chains {
            let (pa, pb) = (coords[*a], coords[*b]);
            let k = chain.len() as f64 + 1.0;
            for (i, &v) in chain.iter().enumerate() {
                let t = (i as f64 + 1.0) / k;
                out[v] = pa.lerp(pb, t);
            }
        }
        out
    }
}
