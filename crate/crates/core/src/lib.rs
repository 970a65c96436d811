pub mod corpus;
pub mod faa;
pub mod geometry;
pub mod graph;
pub mod harmonic;
pub mod io;
pub mod medial;
pub mod schnyder;
pub mod stretcher;
