//! Exact character tables and character-value analysis for finite groups.
//!
//! Groups are fully enumerated ([`group::FiniteGroup`]); character tables
//! are computed with the Dixon–Schneider method over a prime field and
//! lifted to exact cyclotomic integers ([`cyclotomic::Cyclotomic`]). The
//! [`analysis`] module evaluates structural statements about the set of
//! character values on single groups and on whole catalogs.

pub mod analysis;
pub mod catalog;
pub mod chartab;
pub mod constructions;
pub mod cyclotomic;
pub mod error;
pub mod family;
pub mod fleet;
pub mod group;
pub mod modp;

pub use error::{Error, Result};
