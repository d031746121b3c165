//! Algebra toolkit built around the AKS deterministic primality test.
//!
//! The crate is organized by the kind of object each module works on:
//!
//! - [`numtheory`] — integer primitives: extended Euclid, p-adic valuations,
//!   factorial valuations, range lcm, totient, multiplicative order,
//!   perfect-power detection, trial factorization, and the search for the
//!   order witness `r` that drives the AKS congruence loop.
//! - [`polyring`] — dense polynomials over `Z/m`, polynomial Euclid,
//!   modular exponentiation, cyclotomic polynomials, irreducible-factor
//!   extraction, quotient-field arithmetic, and canonical root indexing.
//! - [`fastdiv`] — polynomial division via coefficient reversal and
//!   truncated power-series inversion, differentially tested against long
//!   division, plus the benchmark harness comparing the two.
//! - [`combinat`] — exact binomial coefficients, the binomial theorem
//!   expander, rank/subset conversions for fixed-popcount bitmasks, and the
//!   grid ranking used by the root-counting instruments.
//! - [`aks`] — the primality test end to end with a structured trace, and
//!   the verification instruments the property harness runs against it.

pub mod aks;
pub mod combinat;
pub mod error;
pub mod fastdiv;
pub mod numtheory;
pub mod polyring;

pub use error::Error;
