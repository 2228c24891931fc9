//! Exact arithmetic for geometric R-matrices of affine type A.
//!
//! Points of the positive Grassmannian crystals are handled over any
//! [`Field`](exactfield::Field); running the same code over
//! [`EpsRational`](exactfield::EpsRational) and reading off valuations gives the
//! tropical (combinatorial) shadow of every map.

pub mod error;
pub mod exactfield;
pub mod matrix;
pub mod tableaux;
pub mod grassmann;
pub mod loopgroup;
pub mod geomcrystal;
pub mod rmatrix;
pub mod sampling;
pub mod tropical;

pub use error::{GeomError, Result};
pub use exactfield::{EpsRational, Field, Laurent, Rational, Ring};
