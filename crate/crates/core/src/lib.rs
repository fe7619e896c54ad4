//! Divides in planar surfaces, their doubled oriented divides, shadowed
//! polyhedra with gleams, LF-structures, and the monodromy of the induced
//! Lefschetz fibrations, all computed with exact integer arithmetic.

pub mod catalog;
pub mod cli;
pub mod divide;
pub mod doubling;
pub mod error;
pub mod fibration;
pub mod geometry;
pub mod io;
pub mod lf;
pub mod linalg;
pub mod map;
pub mod shadow;
pub mod surface;
pub mod svg;

pub use error::{Error, Result};
