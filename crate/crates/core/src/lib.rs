//! P3-convexity parameters of caterpillars and unit interval graphs.
//!
//! The crate computes the geodetic number, the hull number and the
//! percolation time (the worst-case number of 2-neighbor bootstrap rounds)
//! from closed-form formulas, and checks every formula against exhaustive
//! oracles on small instances.

pub mod caterpillar;
pub mod crossval;
pub mod error;
pub mod generate;
pub mod graph;
pub mod hereditary;
pub mod io;
pub mod oracle;
pub mod percolation;
pub mod unit_interval;

pub use error::{Error, Result};
pub use graph::{BlockDecomposition, Graph};
pub use io::{parse_graph, GraphDocument};
pub use oracle::{Oracle, OracleCaps};
pub use percolation::{hull_closure, interval, percolate, PercolationTrace};
pub use unit_interval::UnitIntervalModel;
