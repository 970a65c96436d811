//! Stretches pseudosegment arrangements into segment contact systems. The
//! interlocked arrangement has a subset with too few extremal points and is
//! rejected with that subset as witness.
//!
//!     cargo run --example stretch_segments

use sltr::corpus;
use sltr::faa::DEFAULT_BUDGET;
use sltr::io::{render_segments, write_stretch, RenderSpec};
use sltr::stretcher::{check_stretchable, stretch, PseudosegmentArrangement, StretchError};

fn main() {
    let cases = [
        ("l_contact", corpus::l_contact()),
        ("pinwheel", corpus::pinwheel()),
        ("cross", corpus::cross()),
        ("interlocked", corpus::interlocked()),
    ];
    for (name, fam) in cases {
        let arr = PseudosegmentArrangement::new(fam);
        let pre = check_stretchable(&arr, DEFAULT_BUDGET).unwrap();
        println!("== {name}: {} segments, stretchable {}", arr.len(), pre.ok);
        match stretch(&arr, DEFAULT_BUDGET) {
            Ok(sys) => {
                print!("{}", write_stretch(&sys));
                std::fs::write(format!("{name}.svg"), render_segments(&sys, &RenderSpec::default())).unwrap();
            }
            Err(StretchError::NotStretchable { witness, points }) => {
                println!("witness subset {witness:?}, extremal points {points:?}");
            }
            Err(e) => println!("error: {e}"),
        }
    }
}
