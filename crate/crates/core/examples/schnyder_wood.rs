//! Schnyder wood of a 3-connected graph with bidirected edges allowed.
//!
//!     cargo run --example schnyder_wood

use sltr::corpus;
use sltr::io::write_wood;
use sltr::schnyder::{compute_schnyder_wood, verify_schnyder};

fn main() {
    for (name, g) in corpus::three_connected() {
        let w = compute_schnyder_wood(&g).unwrap();
        let report = verify_schnyder(&w);
        println!("== {name}");
        for (e, &(u, v)) in g.graph().edges().iter().enumerate() {
            let tag = if w.is_bidirected(e) { " (bidirected)" } else { "" };
            println!("  {u}-{v}: {:?} / {:?}{tag}", w.label(u, v), w.label(v, u));
        }
        print!("{}", write_wood(&w, &report));
    }
}
