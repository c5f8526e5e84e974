//! Constructive blowup solutions of the 1D focusing nonlinear wave equation
//! `u_tt - u_xx - (2(p+2)/p^2) |u|^p u = 0` on a prescribed uniformly
//! space-like surface `t = sigma(x)`.
//!
//! The pipeline straightens the surface with a Minkowski-conformal change of
//! variables, builds a high-order singular parametrix in the straightened
//! coordinates, corrects it to a solution by Picard iteration against the
//! causal kernel of the critically singular wave equation, and pushes the
//! result back to `(t, x)`, where independent oracles verify the blowup law.

pub mod bessel;
pub mod conformal;
pub mod error;
pub mod expr;
pub mod grid;
pub mod interp;
pub mod jet;
pub mod kernel;
pub mod odefamily;
pub mod series;
pub mod solver;
pub mod surface;
pub mod verify;

pub use error::{Error, Result};
