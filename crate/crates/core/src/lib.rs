//! Exact computer algebra for differential polynomial rings `K[t;δ]` over
//! `K = F_p(x)` and the (generally nonassociative) algebras
//! `S_f = K[t;δ]/K[t;δ]f` built from `f = g(t) − d`.
//!
//! The crate is organised bottom-up:
//!
//! - [`scalars`]: `F_p`, `F_p[x]`, `F_p(x)`.
//! - [`linalg`]: exact elimination, kernels and solves.
//! - [`towers`]: the differential field, its constants and minimum p-polynomial.
//! - [`diffpoly`]: the ring `A[t;δ]`, right division and the `V` operators.
//! - [`dext`]: the algebra `S_f`, its nuclei, center and centralizers.
//! - [`autos`]: automorphisms `t ↦ εt + c`.
//! - [`frontend`]: expression parser, instance files and verification suites.

pub mod autos;
pub mod dext;
pub mod diffpoly;
pub mod error;
pub mod frontend;
pub mod linalg;
pub mod sample;
pub mod scalars;
pub mod towers;

pub use error::{Condition, Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/fields.md")]
    mod fields {}
    #[doc = include_str!("../../../book/src/diffpoly.md")]
    mod diffpoly {}
    #[doc = include_str!("../../../book/src/algebras.md")]
    mod algebras {}
    #[doc = include_str!("../../../book/src/automorphisms.md")]
    mod automorphisms {}
    #[doc = include_str!("../../../book/src/division.md")]
    mod division {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
