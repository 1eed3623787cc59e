//! Gauge theory on the trivial quantum principal bundle over the two-point
//! space with structure group `S₂`, in exact Gaussian-rational arithmetic.
//!
//! The layers build on each other: [`base_calculus`] and [`group_hopf`] are
//! the two calculi, [`algebra`] forms their graded tensor product,
//! [`bundle_calculus`] adds connections and covariant derivatives,
//! [`associated_qvb`] the associated line bundles, [`gauge_group`] the
//! convolution gauge group and [`field_theory`] the Lagrangians and field
//! equations. [`solver`] searches for critical points numerically and
//! certifies them exactly.

pub mod algebra;
pub mod associated_qvb;
pub mod base_calculus;
pub mod bundle_calculus;
pub mod calibration;
pub mod error;
pub mod field_theory;
pub mod gauge_group;
pub mod group_hopf;
pub mod linalg;
pub mod sample;
pub mod scalar;
pub mod replicate;
pub mod solver;
pub mod verify;

pub use calibration::Calibration;
pub use error::{Error, Result};
pub use scalar::{ApproxC, ExactC, Scalar};
