//! Exact arithmetic in the endomorphism algebras of two-part Young
//! permutation modules in characteristic 2.
//!
//! For a two-part partition `lambda = (lambda1, lambda2)` the permutation
//! module `M^lambda` of the symmetric group has endomorphism algebra
//! `S_K(lambda)` with basis `b(0), ..., b(lambda2)` and structure
//! constants given by binomial parities ([`algebra`]). Its primitive
//! idempotents `e_{m,g}` are products read off the binary digits of
//! `m + 2g` over `g` ([`idempotents`]); the surviving ones cut out the
//! endomorphism algebras of the Young module summands `Y^mu`
//! ([`young`]), each isomorphic to a canonical truncated polynomial
//! quotient determined by its dimension alone ([`presentation`]).
//!
//! Everything is exact: GF(2) coefficient vectors are bit-packed,
//! binomial parities come from the binary digit rule, and every claim the
//! library exposes can be re-derived by the verification battery
//! ([`verify`]) or cross-checked against an independently constructed
//! subset model of the same algebra ([`oracle`]).
//!
//! ```
//! use yendo::{AlgebraContext, report};
//!
//! let ctx = AlgebraContext::for_lambda(4, 2).unwrap();
//! let endo = report::endo_report(&ctx, 0).unwrap();
//! assert_eq!(endo.dimension, 2);
//! assert_eq!(endo.presentation.text, "K[x1]/<x1^2>");
//! ```

pub mod algebra;
pub mod error;
pub mod gf2;
pub mod idempotents;
pub mod oracle;
pub mod padic;
pub mod presentation;
pub mod report;
pub mod verify;
pub mod young;

pub use algebra::{AlgebraContext, Element, Lambda};
pub use error::{Error, Result};
