//! Combinatorial models of complete exceptional sequences for the linearly
//! ordered type A quiver.
//!
//! The crate connects several pictures of the same objects and checks them
//! against each other: quiver mutation and c-matrices ([`exchange`]),
//! interval representations with their Hom and Ext spaces ([`reptheory`]),
//! labeled chord diagrams on a disk ([`chords`]), oriented diagrams drawn
//! from c-matrix rows ([`cmatdiag`]), posets of chords whose linear
//! extensions index exceptional sequences ([`posets`]), chains of
//! noncrossing partitions ([`ncpart`]), and leaf counts of labeled trees
//! ([`trees`]).

pub mod chords;
pub mod cmatdiag;
pub mod error;
pub mod exchange;
pub mod ncpart;
pub mod posets;
pub mod reptheory;
pub mod trees;
pub mod util;

pub use error::{Error, Result};
pub use exchange::{CMatrix, ExchangeMatrix, Seed, Sign, DEFAULT_BOUND};
