//! Orientation of the primal-dual completion by a bipartite flow.
//!
//! Every edge of `G` and every suspension half-edge becomes a node that
//! points at exactly one of its neighbors (an endpoint or an incident face).
//! Vertices and bounded faces must keep out-degree three; each of the three
//! pieces of the outer face between consecutive suspensions keeps
//! out-degree one.

use petgraph::algo::ford_fulkerson;
use petgraph::graph::{DiGraph, NodeIndex};

use crate::graph::SuspendedGraph;

/// Where an edge node of the completion points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Head {
    Vertex(usize),
    Face(usize),
    /// Piece `t` of the outer face, counted along the outer walk.
    Outer(usize),
}

#[derive(Debug, Clone)]
pub struct Completion {
    /// Head of every edge of the graph.
    pub edge_heads: Vec<Head>,
    /// Suspension indices in outer-walk order.
    pub walk_order: [usize; 3],
}

/// Splits the outer face at the suspensions. Returns the piece of every
/// outer edge and the suspension indices in walk order.
fn outer_pieces(g: &SuspendedGraph) -> (Vec<Option<usize>>, [usize; 3]) {
    let pg = g.graph();
    let walk = pg.face_darts(pg.outer_face());
    let pos = |s: usize| walk.iter().position(|&d| pg.tail(d) == s).unwrap();
    let mut order = [0, 1, 2];
    order.sort_by_key(|&k| pos(g.suspensions()[k]));
    let start = pos(g.suspensions()[order[0]]);
    let mut piece = vec![None; pg.edge_count()];
    let mut t = 0;
    for i in 0..walk.len() {
        let d = walk[(start + i) % walk.len()];
        if t < 2 && pg.tail(d) == g.suspensions()[order[t + 1]] {
            t += 1;
        }
        piece[pg.dart_edge(d)] = Some(t);
    }
    (piece, order)
}

pub fn orient(g: &SuspendedGraph) -> Option<Completion> {
    let pg = g.graph();
    let (n, m, nf) = (pg.vertex_count(), pg.edge_count(), pg.face_count());
    let outer = pg.outer_face();
    let (piece_of_edge, walk_order) = outer_pieces(g);

    let mut net = DiGraph::<(), u32>::new();
    let source = net.add_node(());
    let sink = net.add_node(());
    let edge_nodes: Vec<NodeIndex> = (0..m + 3).map(|_| net.add_node(())).collect();
    let vertex_nodes: Vec<NodeIndex> = (0..n).map(|_| net.add_node(())).collect();
    let face_nodes: Vec<NodeIndex> = (0..nf).map(|_| net.add_node(())).collect();
    let piece_nodes: Vec<NodeIndex> = (0..3).map(|_| net.add_node(())).collect();

    // candidate heads per edge node, in the same order as their arcs
    let mut targets: Vec<Vec<(Head, NodeIndex)>> = Vec::with_capacity(m + 3);
    for (e, &(a, b)) in pg.edges().iter().enumerate() {
        let d = pg.dart(a, b).unwrap();
        let mut t = vec![
            (Head::Vertex(a), vertex_nodes[a]),
            (Head::Vertex(b), vertex_nodes[b]),
        ];
        for f in [pg.left_face(d), pg.left_face(pg.twin(d))] {
            if f == outer {
                let p = piece_of_edge[e].expect("outer edge has a piece");
                t.push((Head::Outer(p), piece_nodes[p]));
            } else {
                t.push((Head::Face(f), face_nodes[f]));
            }
        }
        targets.push(t);
    }
    // half-edges in walk order; the one at a suspension is always outgoing there
    for t in 0..3 {
        let before = (t + 2) % 3;
        targets.push(vec![
            (Head::Outer(before), piece_nodes[before]),
            (Head::Outer(t), piece_nodes[t]),
        ]);
    }

    let mut demand_total = 0i64;
    let mut demand = |node: NodeIndex, degree: usize, alpha: usize, net: &mut DiGraph<(), u32>| {
        let cap = degree as i64 - alpha as i64;
        demand_total += cap;
        if cap < 0 {
            return false;
        }
        net.add_edge(node, sink, cap as u32);
        true
    };
    for v in 0..n {
        let deg = pg.degree(v) + usize::from(g.is_suspension(v));
        if !demand(vertex_nodes[v], deg, 3, &mut net) {
            return None;
        }
    }
    for f in (0..nf).filter(|&f| f != outer) {
        if !demand(face_nodes[f], pg.face_len(f), 3, &mut net) {
            return None;
        }
    }
    for p in 0..3 {
        let deg = piece_of_edge.iter().filter(|&&q| q == Some(p)).count() + 2;
        if !demand(piece_nodes[p], deg, 1, &mut net) {
            return None;
        }
    }
    if demand_total != (m + 3) as i64 {
        return None;
    }

    let mut arc_ids = Vec::with_capacity(m + 3);
    for (e, t) in targets.iter().enumerate() {
        net.add_edge(source, edge_nodes[e], 1);
        arc_ids.push(
            t.iter()
                .map(|&(_, node)| net.add_edge(edge_nodes[e], node, 1))
                .collect::<Vec<_>>(),
        );
    }
    let (value, flows) = ford_fulkerson(&net, source, sink);
    if value as usize != m + 3 {
        return None;
    }
    let edge_heads = (0..m)
        .map(|e| {
            let k = arc_ids[e]
                .iter()
                .position(|a| flows[a.index()] == 1)
                .unwrap();
            targets[e][k].0
        })
        .collect();
    Some(Completion {
        edge_heads,
        walk_order,
    })
}
