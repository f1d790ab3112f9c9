//! Exact invariants of plumbed 3-manifolds and the regular-homotopy classes of
//! immersions attached to links of simple (A-D-E) surface singularities.
//!
//! The crate is layered bottom-up:
//!
//! * [`linalg`]: big-integer matrices, Smith normal form, cokernels, exact signatures.
//! * [`plumbing`]: plumbing graphs, Dynkin diagrams, homology of `M(G)` and `X(G)`.
//! * [`catalog`]: reference data for simple singularities.
//! * [`wu`]: second cohomology classes, the Bockstein map and switching of Wu invariants.
//! * [`smale`]: Smale invariants of sphere immersions and quaternionic generators of `π₃(SO(4))`.
//! * [`classify`]: the complete (Wu, Smale-type) invariant of the two immersion families.

pub mod catalog;
pub mod classify;
pub mod error;
pub mod json;
pub mod linalg;
pub mod plumbing;
pub mod smale;
pub mod wu;

pub use error::{Error, Result};
