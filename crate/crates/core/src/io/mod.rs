//! File formats, reports and SVG output.

mod report;
mod svg;
mod text;

pub use report::{
    write_dissection, write_drawing, write_family, write_stretch, write_verification, write_wood,
};
pub use svg::{render_dissection, render_drawing, render_segments, RenderSpec};
pub use text::{
    parse_arrangement, parse_faa, parse_graph, serialize_arrangement, serialize_faa,
    serialize_graph, GraphDocument, ParseError, FORMAT_VERSION,
};
