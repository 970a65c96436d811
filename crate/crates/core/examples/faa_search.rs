//! Enumerates the flat angle assignments of each fixture graph and sorts them
//! into good and bad with the outline-cycle test. For bad ones the witness
//! cycle is printed.
//!
//!     cargo run --example faa_search

use sltr::corpus;
use sltr::faa::{check_co_star_with, enumerate_faas, outline_cycles, CoStarMode, FaceCornerSpec, DEFAULT_BUDGET};

fn main() {
    for (name, g) in corpus::graphs() {
        let cycles = outline_cycles(g.graph(), CoStarMode::SimpleCycles, DEFAULT_BUDGET).unwrap();
        let all = enumerate_faas(&g, &FaceCornerSpec::ExactTriangle, DEFAULT_BUDGET).unwrap();
        let mut good = 0;
        for faa in &all {
            let r = check_co_star_with(&g, faa, &cycles);
            if r.ok {
                good += 1;
            } else if let Some(w) = r.witness {
                println!("  {name}: bad assignment, outline {:?} has convex corners {:?}", w.walk, r.witness_corners);
            }
        }
        println!("{name}: {} assignments, {good} good", all.len());
    }
}
