//! Exact computation of quantum sl2 invariants of links and 3-manifolds.
//!
//! The crate is `no_std` (it only needs `alloc`) and contains no IO. Everything
//! is exact: integers are arbitrary precision, cyclotomic numbers live in the
//! power basis of `Q(zeta_m)`, and no floating point appears anywhere.
//!
//! Layout:
//! - [`qcalc`]: Laurent polynomials in `v = q^{1/4}`, bivariate polynomials in
//!   `(v, z = q^n)`, truncated power series, q-integers and cyclotomic polynomials.
//! - [`cyclo`]: cyclotomic fields, evaluation at roots of unity, Gauss sums.
//! - [`links`]: framed braid closures, linking matrices, homology, catalog.
//! - [`jones`]: colored Jones polynomial by an R-matrix state sum and the
//!   cyclotomic expansion `C_L(k)`.
//! - [`laplace`]: the discrete Laplace transform and q-series identity checks.
//! - [`wrt`]: SO(3) and SU(2) WRT invariants at roots of unity.
//! - [`habiro`]: truncated Habiro-ring elements, unified invariants, Taylor
//!   expansions and Ohtsuki coefficients.
#![no_std]
#![allow(clippy::needless_range_loop, clippy::type_complexity)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;

pub mod cyclo;
pub mod habiro;
pub mod jones;
pub mod laplace;
pub mod links;
pub mod qcalc;
pub mod wrt;

pub use error::{Error, Result};

/// Arbitrary precision rational used for every coefficient.
pub type Rational = num_rational::BigRational;
pub use num_bigint::BigInt;
