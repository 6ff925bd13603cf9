pub mod assignment;
pub mod decomposition;
pub mod embedding;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod report;
pub mod spanning;
pub mod widths;

pub use embedding::{Dart, EmbeddedGraph, FacialWalk, Sign, SurfaceInfo};
pub use error::{Error, Result};
pub use graph::Graph;
