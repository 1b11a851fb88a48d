//! Exact Coxeter polynomials of finite-dimensional algebras of finite global
//! dimension, built from quivers and one-point extensions.
//!
//! The crate covers:
//!
//! * [`linalg`] and [`poly`]: big-integer matrices and polynomials;
//! * [`quiver`]: quivers, Cartan matrices of path algebras, stars, canonical
//!   algebras and tree enumeration;
//! * [`coxeter`]: Coxeter matrices, Euler forms, and the one-point-extension
//!   recursion for Coxeter polynomials;
//! * [`closed_forms`]: closed formulas for linear and three-branch star
//!   quivers and the predicted coefficients of canonical algebras;
//! * [`classify`]: trace and coefficient tests separating tree type from
//!   canonical type;
//! * [`homological`]: traces of Coxeter powers via Euler forms of the
//!   enveloping algebra, and Newton/Waring reconstruction;
//! * [`cli`]: the `coxpoly` command line.
//!
//! ```
//! use coxpoly::{coxeter::coxeter_polynomial, quiver::{build_star, cartan_matrix}};
//!
//! let d4 = build_star(&[1, 1, 1]).unwrap();
//! let chi = coxeter_polynomial(&cartan_matrix(&d4).unwrap()).unwrap();
//! assert_eq!(chi.to_string(), "x^4 + x^3 + x + 1");
//! ```

pub mod classify;
pub mod cli;
pub mod closed_forms;
pub mod coxeter;
pub mod error;
pub mod homological;
pub mod linalg;
pub mod poly;
pub mod quiver;

pub use error::{Error, Result};
pub use linalg::IntMatrix;
pub use poly::Poly;
