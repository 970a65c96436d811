//! Barycentric drawing of a triangulation, then the full verification report.
//!
//!     cargo run --example tutte_drawing

use sltr::corpus;
use sltr::faa::FlatAngleAssignment;
use sltr::harmonic::{default_poles, draw, HarmonicWeights};
use sltr::io::write_drawing;

fn main() {
    let g = corpus::octahedron();
    let (drawing, report) = draw(&g, &FlatAngleAssignment::new(), &HarmonicWeights::uniform(), default_poles())
        .expect("a triangulation always has a harmonic solution");
    for (v, p) in drawing.points.iter().enumerate() {
        println!("vertex {v}: ({:.4}, {:.4})", p.x, p.y);
    }
    print!("{}", write_drawing(&drawing, &report));
}
