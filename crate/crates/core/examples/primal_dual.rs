//! Contact representation of a graph and its dual by triangles dissecting a
//! triangle. Writes one SVG per fixture into the given directory.
//!
//!     cargo run --example primal_dual -- out/

use std::path::PathBuf;

use sltr::corpus;
use sltr::io::{render_dissection, write_dissection, RenderSpec};
use sltr::schnyder::primal_dual_representation;

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    std::fs::create_dir_all(&dir).unwrap();
    for (name, g) in corpus::three_connected() {
        let d = primal_dual_representation(&g).unwrap();
        println!("== {name}");
        print!("{}", write_dissection(&d));
        let path = dir.join(format!("{name}_dissection.svg"));
        std::fs::write(&path, render_dissection(&d, &RenderSpec::default())).unwrap();
        println!("wrote {}", path.display());
    }
}
