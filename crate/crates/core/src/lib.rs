//! Algorithms on trapezoid graphs.
//!
//! A trapezoid diagram places `n` trapezoids between two horizontal lines;
//! its intersection graph is a trapezoid graph. This crate computes the
//! vertex connectivity of that graph straight from the diagram in
//! `O(n log n)` ([`connectivity::kappa_fast`]), alongside a quadratic sweep,
//! brute-force oracles and structural checks (bipartiteness, caterpillars).
//!
//! ```
//! use trapezoid::{kappa_fast, TrapezoidDiagram, WitnessMode};
//!
//! // A path: 1 - 2 - 3.
//! let dg = TrapezoidDiagram::validate(&[[1, 3, 1, 3], [2, 5, 2, 5], [4, 6, 4, 6]]).unwrap();
//! let result = kappa_fast(&dg, WitnessMode::Extract);
//! assert_eq!(result.kappa, 1);
//! assert_eq!(result.witness, Some(vec![2]));
//! ```

pub mod batch;
pub mod connectivity;
pub mod diagram;
pub mod error;
pub mod format;
pub mod graph;
pub mod mbit;
pub mod oracle;
pub mod structure;

pub use connectivity::{kappa_fast, kappa_quadratic, ConnectivityResult, CutLine, WitnessMode};
pub use diagram::{PointIndex, Trapezoid, TrapezoidDiagram};
pub use error::{FormatError, Line, NormalizeError, ValidationReport, Violation};
pub use graph::IntersectionGraph;
pub use mbit::MinPrefixTree;
