//! Finds a good flat angle assignment of the prism, solves the harmonic system
//! and writes the drawing as SVG.
//!
//!     cargo run --example sltr_drawing -- prism.svg

use sltr::corpus;
use sltr::faa::{enumerate_faas, FaceCornerSpec, DEFAULT_BUDGET};
use sltr::harmonic::{default_poles, draw, is_gfaa, HarmonicWeights};
use sltr::io::{render_drawing, write_drawing, RenderSpec};

fn main() {
    let out = std::env::args().nth(1).unwrap_or_else(|| "prism.svg".into());
    let g = corpus::prism();
    let faa = enumerate_faas(&g, &FaceCornerSpec::ExactTriangle, DEFAULT_BUDGET)
        .unwrap()
        .into_iter()
        .find(|faa| is_gfaa(&g, faa).unwrap())
        .expect("the prism has a good assignment");
    println!("assignment {:?}", faa.pairs().collect::<Vec<_>>());

    // non-uniform weights move the points but keep the drawing valid
    let mut weights = HarmonicWeights::uniform();
    for (v, _) in faa.pairs() {
        weights.between.insert(v, 0.3);
    }
    let (drawing, report) = draw(&g, &faa, &weights, default_poles()).unwrap();
    print!("{}", write_drawing(&drawing, &report));
    let spec = RenderSpec { labels: true, ..RenderSpec::default() };
    std::fs::write(&out, render_drawing(&drawing, &spec)).unwrap();
    println!("wrote {out}");
}
