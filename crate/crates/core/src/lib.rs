//! Mixed-volume quasi-metrics on convex bodies.

pub mod caps;
pub mod error;
pub mod estimator;
pub mod geometry;
pub mod harness;
pub mod io;
pub mod lp;
pub mod metrics;
pub mod mixed_volume;
pub mod quadrature;
pub mod scalar;

pub use error::{Error, Result};
pub use geometry::{convex_hull, Halfspace, Point, VPolytope};
pub use scalar::{Scalar, Surd};
