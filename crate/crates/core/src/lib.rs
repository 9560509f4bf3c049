//! Metric graph primitives, mediangle recognition and hyperplanes.
//!
//! Everything here works on finite simple graphs with dense vertex ids. The
//! recognizers are exhaustive and return replayable counterexamples.

pub mod cycles;
pub mod error;
pub mod graph;
pub mod hyperplane;
pub mod induced;
pub mod io;
pub mod par;
pub mod recognize;

pub use cycles::{convex_even_cycles, default_max_len, CornerIndex};
pub use error::{GraphError, Result};
pub use graph::{BallInfo, Cycle, Graph, Vertex, VertexSet, UNREACHABLE};
pub use hyperplane::{
    hyperplanes, separating_hyperplanes, verify_bighyp, Angle, BigHypReport, Carrier, Hyperplane,
    HyperplaneSystem, SectorDecomposition,
};
pub use induced::{find_induced, Pattern};
pub use recognize::{classify, is_mediangle, Analysis, CheckOptions, Classification, Label, Verdict, Witness};
