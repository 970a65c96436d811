//! Writes a graph with an assignment and weights to the text format, reads it
//! back, and does the same for an arrangement.
//!
//!     cargo run --example file_formats

use sltr::corpus;
use sltr::faa::{enumerate_faas, FaceCornerSpec, DEFAULT_BUDGET};
use sltr::harmonic::HarmonicWeights;
use sltr::io::{parse_arrangement, parse_graph, serialize_arrangement, serialize_graph, GraphDocument};
use sltr::stretcher::PseudosegmentArrangement;

fn main() {
    let g = corpus::prism();
    let faa = enumerate_faas(&g, &FaceCornerSpec::ExactTriangle, DEFAULT_BUDGET).unwrap().remove(0);
    let mut weights = HarmonicWeights::uniform();
    weights.between.insert(faa.pairs().next().unwrap().0, 0.25);
    let doc = GraphDocument {
        faa: Some(faa),
        weights: Some(weights),
        ..GraphDocument::new(g)
    };
    let text = serialize_graph(&doc);
    print!("{text}");
    assert_eq!(parse_graph(&text).unwrap(), doc);

    let arr = PseudosegmentArrangement::new(corpus::pinwheel());
    let text = serialize_arrangement(&arr);
    print!("\n{text}");
    let back = parse_arrangement(&text).unwrap();
    assert_eq!(back.family().segments(), arr.family().segments());

    match parse_graph("sltr-graph 1\nvertices 3\nrotation 0: 1 2\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("\nrejected: {e}"),
    }
}
