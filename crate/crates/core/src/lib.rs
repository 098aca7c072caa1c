//! Finite groups given by Cayley tables, skew braces on them, and the
//! Hopf–Galois structures they describe.
//!
//! Groups are stored as tables over the labels `0..n` with the identity at
//! `0`. A skew brace is a pair of such tables on the same labels.

pub mod bits;
pub mod brace;
pub mod catalog;
pub mod constructions;
pub mod error;
pub mod group;
pub mod hg;
mod hom;
pub mod io;
pub mod perm;
pub mod suites;

pub use brace::{GammaTable, SkewBrace};
pub use error::{Error, Result};
pub use group::{FiniteGroup, GroupMap, SubgroupSet};
pub use hg::{EnumConfig, HgsReport};
