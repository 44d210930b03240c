//! Manifold-aligning dual GAN toolkit.
//!
//! Two unpaired data domains, two generator directions with a shared core,
//! two discriminators, and a correspondence loss that turns "the mapped
//! batch looks right in aggregate" into "each point lands next to its true
//! counterpart". The crate bundles:
//!
//! - [`autodiff`]: a small reverse-mode tape over dense `f64` tensors and
//!   the ADAM optimizer;
//! - [`nn`]: dense layers, the weight-tied generator pair, and
//!   batch-aware discriminators;
//! - [`model`]: the full objective (reconstruction, adversarial and
//!   correspondence terms) and the alternating training loop;
//! - [`data`]: synthetic domain generators, IDX digit loading, CSV
//!   ingestion, and feature bookkeeping;
//! - [`eval`]: nearest-neighbor correspondence, repeated-run stability
//!   simulation, correspondence error, and held-out-feature
//!   cross-validation;
//! - [`cli`]: the `magan` command-line entry points.
//!
//! The guide in `book/` walks through each piece with runnable examples;
//! its code blocks are compiled and executed as doc-tests (see the hidden
//! `book_doctests` module).

pub mod autodiff;
pub mod cli;
pub mod data;
pub mod error;
pub mod eval;
pub mod model;
pub mod nn;

pub use error::{MaganError, Result};

/// Compiles and runs every fenced Rust block in the guide as a doc-test,
/// keeping the book in sync with the crate.
#[cfg(doctest)]
mod book_doctests {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/autodiff.md")]
    mod autodiff {}
    #[doc = include_str!("../../../book/src/networks.md")]
    mod networks {}
    #[doc = include_str!("../../../book/src/training.md")]
    mod training {}
    #[doc = include_str!("../../../book/src/data.md")]
    mod data {}
    #[doc = include_str!("../../../book/src/evaluation.md")]
    mod evaluation {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
