//! Normal forms and decision procedures for preGarside monoids of FC type
//! and their groups of fractions.

pub mod amalgam;
pub mod coset;
pub mod error;
pub mod frontend;
pub mod garside;
pub mod oracle;
pub mod parabolic;
pub mod presentation;
pub mod presets;
pub mod word;

pub use error::{Error, Result};
