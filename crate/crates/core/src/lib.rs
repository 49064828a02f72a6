//! Exact norm theory of the hyperbolic (-2,3,n) pretzel knots.
//!
//! Everything is computed over the integers and rationals: slope distances,
//! the Culler-Shalen seminorms of the character-variety curves, the Alexander
//! polynomial and its cyclotomic roots, triangle-group character counts, the
//! fundamental and Newton polygons, and the cyclic/finite Dehn surgery
//! classification.
//!
//! - [`slopes`]: reduced slopes p/q and the intersection distance |ad - bc|.
//! - [`alexander`]: Laurent arithmetic, the closed-form Alexander polynomial,
//!   dihedral counts, cyclotomic divisibility.
//! - [`triangle`]: PSL2(C) character counts of triangle groups and the SL2
//!   jumping-point census.
//! - [`seminorm`]: boundary slopes, per-curve seminorms, total norms.
//! - [`polygon`]: the fundamental polygon, the Newton polygon as a zonotope,
//!   widths, and SVG/CSV/JSON serialization.
//! - [`surgery`]: the lattice search for cyclic/finite surgery candidates.

pub mod alexander;
pub mod polygon;
pub mod seminorm;
pub mod slopes;
pub mod surgery;
pub mod triangle;

mod error;
pub use error::{Error, Result};
