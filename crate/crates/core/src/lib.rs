//! Exact mod-2 homological algebra around the cobar construction of a
//! DG-bialgebra.
//!
//! Given a finitely based DG-bialgebra `A` over GF(2), this crate builds the
//! reduced cobar construction `ΩA` and the reduced bar construction `B(ΩA)`,
//! equips `ΩA` with the cup-1 product and the brace operations `E_{1,k}`,
//! assembles from them the multiplication on `B(ΩA)`, and verifies — exactly,
//! by exhaustive enumeration up to user-chosen degree and word-length bounds —
//! that the expected structure holds: the Steenrod and Hirsch identities, the
//! homotopy-G-algebra identities, the twisting-cochain condition, and the
//! DG-bialgebra axioms on the bar of the cobar.
//!
//! Everything is done in exact arithmetic: vectors over GF(2) are finite
//! support sets and addition is symmetric difference, so every verdict is a
//! theorem about the finite region checked, not a numerical approximation.
//!
//! Verification is organised as a registry of named checks (see [`checks`]);
//! the `cobar` CLI selects and runs them by name.

pub mod bar;
pub mod bar_bialgebra;
pub mod bounds;
pub mod builtins;
pub mod checks;
pub mod cobar;
pub mod dg;
pub mod error;
pub mod extend;
pub mod gf2;
pub mod hga;
pub mod homology;
pub mod matrix;
pub mod report;
pub mod specfile;
pub mod twisting;

pub use bounds::TruncationBounds;
pub use error::{Error, Result};
pub use gf2::{BasisId, Gf2Vector, Graded, LinearMap, Tensor};

/// Tool name reported in machine-readable output.
pub const TOOL_NAME: &str = "cobar";
/// Tool version reported in machine-readable output.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
/// Version of the machine-readable report schema.
pub const REPORT_SCHEMA: &str = "cobar-report/1";
