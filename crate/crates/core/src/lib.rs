//! Kernels of directed graphs: a brute-force oracle, constructive solvers
//! for red/blue colored digraphs and for chord conditions on odd cycles, and
//! exhaustive searches over orientations of anti-holes.

pub mod antiholes;
pub mod chords;
pub mod cliques;
pub mod colored;
pub mod cycles;
pub mod digraph;
pub mod error;
pub mod io;
pub mod oracle;
pub mod parallel;
pub mod redblue;
pub mod scc;
pub mod undirected;
pub mod vertex_set;

pub use colored::{ArcColor, ColoredDigraph};
pub use digraph::{families, Digraph};
pub use error::{Error, Result};
pub use oracle::{KernelReport, OracleConfig};
pub use undirected::{EdgeDirection, Orientation, UndirectedGraph};
pub use vertex_set::VertexSet;
