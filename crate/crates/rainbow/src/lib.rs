#![forbid(unsafe_code)]

//! Rainbow connectivity toolkit.
//!
//! A library (and CLI) for the six rainbow-connection parameters of simple
//! connected graphs — `rc`, `src`, `rvc`, `srvc`, `trc`, `strc`. It provides
//! exact solvers with structural lower/upper bounds, certificate verification
//! for all six parameter kinds, closed-form values and witness colourings for
//! the classic graph families, generators for the gadget graphs used to
//! separate the parameters, and exhaustive small-graph scanners.

pub mod bounds;
pub mod colouring;
pub mod constructions;
pub mod families;
pub mod files;
pub mod graph;
pub mod oracle;
pub mod report;
pub mod scan;
pub mod solver;

pub use colouring::{Colouring, ParameterKind};
pub use graph::Graph;
