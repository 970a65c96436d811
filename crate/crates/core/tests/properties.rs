//! Randomised invariants over stacked triangulations and fixture arrangements.

use proptest::prelude::*;

use sltr::corpus::{self, from_straight_line};
use sltr::faa::FlatAngleAssignment;
use sltr::geometry::{signed_area, Point};
use sltr::graph::SuspendedGraph;
use sltr::harmonic::{default_poles, draw, HarmonicWeights};
use sltr::io::{parse_graph, serialize_graph, GraphDocument};
use sltr::schnyder::{compute_schnyder_wood, primal_dual_representation, verify_schnyder};
use sltr::stretcher::{augment, stretch, PseudosegmentArrangement};

const TOL: f64 = 1e-7;

/// Repeatedly inserts a point into a chosen triangle and joins it to the
/// three corners. Each step is (triangle selector, two barycentric draws).
fn stacked(steps: &[(usize, f64, f64)]) -> SuspendedGraph {
    let mut pts = vec![(0.0, 0.0), (6.0, 0.0), (3.0, 5.2)];
    let mut edges = vec![(0, 1), (1, 2), (2, 0)];
    let mut faces = vec![[0, 1, 2]];
    for &(pick, s, t) in steps {
        let [a, b, c] = faces.swap_remove(pick % faces.len());
        let raw = [0.3 + s, 0.3 + t, 0.3 + (1.0 - s) * (1.0 - t)];
        let sum: f64 = raw.iter().sum();
        let [wa, wb, wc] = raw.map(|x| x / sum);
        let p = (
            wa * pts[a].0 + wb * pts[b].0 + wc * pts[c].0,
            wa * pts[a].1 + wb * pts[b].1 + wc * pts[c].1,
        );
        let v = pts.len();
        pts.push(p);
        edges.extend([(v, a), (v, b), (v, c)]);
        faces.extend([[a, b, v], [b, c, v], [c, a, v]]);
    }
    from_straight_line(&pts, &edges, [0, 1, 2])
}

fn steps() -> impl Strategy<Value = Vec<(usize, f64, f64)>> {
    prop::collection::vec((0usize..64, 0.0f64..1.0, 0.0f64..1.0), 1..14)
}

/// Positive barycentric weights for every interior vertex.
fn random_weights(g: &SuspendedGraph, raw: &[f64]) -> HarmonicWeights {
    let pg = g.graph();
    let mut w = HarmonicWeights::uniform();
    let mut it = raw.iter().cycle();
    for v in 0..pg.vertex_count() {
        if g.suspensions().contains(&v) {
            continue;
        }
        let ws: Vec<f64> = (0..pg.degree(v)).map(|_| 0.05 + it.next().unwrap()).collect();
        let sum: f64 = ws.iter().sum();
        w.barycentric.insert(v, ws.into_iter().map(|x| x / sum).collect());
    }
    w
}

fn inside(p: Point, tri: &[Point; 3]) -> bool {
    (0..3).all(|i| signed_area(&[tri[i], tri[(i + 1) % 3], p]) >= -TOL)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn graph_documents_round_trip(s in steps(), raw in prop::collection::vec(0.0f64..1.0, 1..20)) {
        let g = stacked(&s);
        let mut doc = GraphDocument::new(g.clone());
        doc.weights = Some(random_weights(&g, &raw));
        let back = parse_graph(&serialize_graph(&doc)).unwrap();
        prop_assert_eq!(back, doc);
    }

    #[test]
    fn weighted_tutte_drawings_are_valid(s in steps(), raw in prop::collection::vec(0.0f64..1.0, 1..20)) {
        let g = stacked(&s);
        let poles = default_poles();
        let (d, r) = draw(&g, &FlatAngleAssignment::new(), &random_weights(&g, &raw), poles).unwrap();
        prop_assert!(r.is_sltr(), "{:?}", r.failed());
        prop_assert!(d.points.iter().all(|&p| inside(p, &poles)));
        for f in 0..g.graph().face_count() {
            if f == g.graph().outer_face() {
                continue;
            }
            let poly: Vec<Point> = g.graph().face_vertices(f).iter().map(|&v| d.points[v]).collect();
            prop_assert!(signed_area(&poly) > 0.0);
        }
    }

    #[test]
    fn schnyder_woods_and_dissections(s in steps()) {
        let g = stacked(&s);
        let w = compute_schnyder_wood(&g).unwrap();
        prop_assert!(verify_schnyder(&w).ok);
        let d = primal_dual_representation(&g).unwrap();
        prop_assert!(d.area_defect() <= TOL);
        prop_assert!(d.contacts_realised(TOL));
        let pg = g.graph();
        prop_assert_eq!(d.tiles.len(), pg.vertex_count() + pg.face_count() - 1);
    }

    #[test]
    fn augmenting_then_stripping_is_the_identity(pick in 0usize..3, shear in -0.5f64..0.5, scale in 0.5f64..3.0) {
        let base = [corpus::l_contact, corpus::pinwheel, corpus::cross][pick]();
        let pts: Vec<(f64, f64)> = base
            .graph()
            .rotation()
            .iter()
            .enumerate()
            .map(|(v, _)| {
                let p = sketch(pick)[v];
                (scale * (p.0 + shear * p.1), scale * p.1)
            })
            .collect();
        let paths: Vec<&[usize]> = base.segments().iter().map(|s| s.vertices()).collect();
        let arr = PseudosegmentArrangement::new(corpus::arrangement(&pts, &paths));
        let aug = augment(&arr).unwrap();
        let paths: Vec<Vec<usize>> = arr.family().segments().iter().map(|s| s.vertices().to_vec()).collect();
        prop_assert_eq!(aug.stripped_paths(), paths);
        let sys = stretch(&arr, sltr::faa::DEFAULT_BUDGET).unwrap();
        prop_assert!(sys.certificate.is_valid(TOL));
        prop_assert_eq!(sys.points.len(), arr.graph().vertex_count());
    }
}

fn sketch(pick: usize) -> Vec<(f64, f64)> {
    match pick {
        0 => vec![(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (1.0, 1.0)],
        1 => vec![
            (0.0, 0.0),
            (1.0, 0.0),
            (1.0, 1.0),
            (0.0, 1.0),
            (2.0, 0.0),
            (1.0, 2.0),
            (-1.0, 1.0),
            (0.0, -1.0),
        ],
        _ => vec![(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (1.0, 1.0), (1.0, -1.0)],
    }
}
