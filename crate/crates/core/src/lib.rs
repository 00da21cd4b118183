//! Exact constructions and checks around the commuting variety of a simple Lie
//! algebra: invariant polynomials and their polarizations, the characteristic
//! module, the commuting ideal, Koszul-type complexes, and the argument-shift
//! combinatorics.

pub mod error;
pub mod exact;
pub mod lie;

pub use error::{Error, Result};
pub mod invariants;
pub mod report;
pub mod charmod;
pub mod combinatorics;
pub mod groebner;
pub mod scheme;
pub mod complexes;
pub mod config;
pub mod suites;
pub mod acceptance;
