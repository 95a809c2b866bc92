//! Exact-arithmetic toolkit for the quadratic family
//! `g(x) = (x - gamma)^2 + m + gamma` over the rationals.
//!
//! The crate is `no_std` (it needs `alloc`). It covers:
//!
//! * [`arith`]: rationals, p-adic valuations and perfect-square tests;
//! * [`poly`]: dense univariate polynomials over the rationals;
//! * [`factor`]: complete factorization over the rationals (Zassenhaus);
//! * [`dynamics`]: iterates, critical-orbit polynomials and detection of
//!   newly reducible iterates;
//! * [`newton`]: Newton polygons and the 2-adic separability criterion;
//! * [`curves`]: genus of hyperelliptic models and bounded rational point search;
//! * [`systems`]: the explicit algebraic systems for the second and third
//!   iterates, backed by the polynomials bundled in [`data`].
//!
//! IO, JSON and the command line live in the `quadit` crate.

#![no_std]

extern crate alloc;

pub mod arith;
pub mod curves;
pub mod data;
pub mod dynamics;
mod error;
pub mod factor;
pub mod fp;
pub mod mvpoly;
pub mod newton;
pub mod poly;
pub mod systems;
mod zpoly;

pub use arith::{Int, Rat, ValP};
pub use error::{Error, Result};
pub use factor::FactorList;
pub use mvpoly::MvPoly;
pub use poly::QPoly;
