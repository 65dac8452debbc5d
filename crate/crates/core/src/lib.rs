//! DNA cyclic codes over the chain ring `F2[u]/(u^6)` and skew cyclic codes
//! over `F2 + vF2`: exact arithmetic, enumeration, and verification.

pub mod binpoly;
pub mod bits;
pub mod cli;
pub mod codon;
pub mod config;
pub mod cyclic;
pub mod error;
pub mod metrics;
pub mod printed;
pub mod reproduce;
pub mod ring;
pub mod skew;

pub use error::{Error, Result};
