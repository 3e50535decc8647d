//! Face-convex drawings of complete graphs and their pseudoline extensions.
//!
//! The crate models good drawings of `K_n` as planarized sphere maps and
//! provides convexity checks, a constructive pseudolinearization of
//! face-convex drawings, Levi extension of pseudoline arrangements, and
//! empty-triangle censuses.

pub mod arrangement;
pub mod convexity;
pub mod drawing;
pub mod generators;
pub mod io;
pub mod planar_map;
pub mod pseudolinearize;
pub mod render;
pub mod triangles;

pub use drawing::{Drawing, ExactPoint};
pub use planar_map::PlanarMap;
