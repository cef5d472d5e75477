//! Exact representation theory of finite-dimensional quiver algebras.

pub mod error;
pub mod functors;
pub mod homological;
pub mod linalg;
pub mod q2;
pub mod quiver;
pub mod rep;

pub use error::{Error, Result};
pub use linalg::{Matrix, Rational};
