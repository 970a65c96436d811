//! Builds the medial graph of a plane graph and recovers the original.
//!
//!     cargo run --example medial_graph

use sltr::corpus;
use sltr::medial::{invert_medial, medial_graph, FaceOrigin};

fn main() {
    let g = corpus::k4();
    let m = medial_graph(&g);
    let mg = m.graph.graph();
    println!("medial: {} vertices, {} edges, {} faces", mg.vertex_count(), mg.edge_count(), mg.face_count());
    for (f, origin) in m.face_origin.iter().enumerate() {
        match origin {
            FaceOrigin::Vertex(v) => println!("  face {f} <- vertex {v}"),
            FaceOrigin::Face(h) => println!("  face {f} <- face {h}"),
        }
    }
    let back = invert_medial(&m.graph).unwrap();
    println!("recovered {} vertices, {} edges", back.graph().vertex_count(), back.graph().edge_count());
}
