//! Generalised Mycielski graphs and the combinatorial topology around them.
//!
//! The crate builds the graphs `M_r(G)` and the families `M_k`, computes exact
//! chromatic numbers, constructs symmetric sphere triangulations aligned with
//! hemisphere flags whose antipodal quotient graphs are family members, refutes
//! `(k-1)`-colourings through balanced edges of Fan-type labellings, and embeds
//! family members near-antipodally into spheres to probe candidate antipodal maps.
//!
//! Runnable walkthroughs live in `examples/`; the `mycielski` binary exposes
//! the same pipelines as batch subcommands.

pub mod borsuk;
pub mod chromatic;
pub mod cli;
pub mod error;
pub mod fan;
pub mod graph;
pub mod lift;
pub mod report;
pub mod simplicial;

pub use error::{Error, Result};
pub use graph::{Graph, MycielskiSpec, VertexName};
pub use report::Report;
