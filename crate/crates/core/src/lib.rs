//! Polarized categories over explicitly finite categories.
//!
//! A [`fincat::FiniteCategory`] stores every arrow and its full composition
//! table. On top of it the crate provides monopoles and polarities, hulls
//! (completions), capacitors and the voltages they induce, and three instance
//! universes (posets, finite Boolean algebras and finite rings) whose hulls
//! are checked by exhaustive computation.

pub mod boolean;
pub mod capacitor;
pub mod error;
pub mod fincat;
pub mod hulls;
pub mod polarity;
pub mod posets;
pub mod rings;
pub mod run;

pub use error::{Error, Result};
