//! Schur squares, block decompositions and counts of self-dual codes.
//!
//! A self-dual code of dimension `k` with `nb` indecomposable blocks has a
//! Schur square of dimension `2k − nb`. The library computes both sides of
//! that identity independently: [`code::schur_square`] by rank, and
//! [`decomp::count_blocks`] from the block graph of a systematic generator.
//!
//! ```
//! use gorenstein::code::schur_square;
//! use gorenstein::corpus;
//! use gorenstein::decomp::count_blocks;
//!
//! let c = corpus::hamming8_doubled();
//! assert_eq!(count_blocks(&c), 2);
//! assert_eq!(schur_square(&c).unwrap().dimension(), 2 * 8 - 2);
//! ```
//!
//! The guide in `book/` covers each module; its code listings run as
//! doc-tests of this crate.

pub mod census;
pub mod code;
pub mod corpus;
pub mod decomp;
pub mod field;
pub mod matrix;
pub mod report;
pub mod text;

// The book's listings, compiled and run by `cargo test --doc`.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/fields.md")]
    mod fields {}
    #[doc = include_str!("../../../book/src/matrices.md")]
    mod matrices {}
    #[doc = include_str!("../../../book/src/codes.md")]
    mod codes {}
    #[doc = include_str!("../../../book/src/blocks.md")]
    mod blocks {}
    #[doc = include_str!("../../../book/src/census.md")]
    mod census {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
