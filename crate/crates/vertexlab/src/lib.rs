//! vertexlab: an exact-computation laboratory for the six-vertex and
//! twenty-vertex models under domain-wall boundary conditions.
//!
//! The crate enumerates configurations, evaluates determinantal and
//! contour-integral representations of partition functions and nonlocal
//! correlations (including the emptiness formation probability), and
//! numerically verifies the 2D and truncated-3D Yang–Baxter-algebra
//! identities those representations rest on.

pub mod numeric;
pub mod rational;
pub mod records;
pub mod caps;
pub mod correlations;
pub mod determinants;
pub mod sixv;
pub mod suite;
pub mod twentyv;
pub mod yba;
