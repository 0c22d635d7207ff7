//! Root-system combinatorics for semisimple and nilpotent Hessenberg varieties.
//!
//! Everything here works with the combinatorial shadow of the geometry: roots
//! are integer vectors over the simple roots, Weyl group elements are
//! permutations of root ids, and a Hessenberg space is the set of negative
//! roots it contains.
//!
//! * [`rootsys`] builds irreducible root systems of types A through G.
//! * [`weyl`] enumerates Weyl groups and handles inversion sets, parabolic
//!   coset decompositions and the inversion-set to element correspondence.
//! * [`hessenberg`] validates and enumerates Hessenberg spaces.
//! * [`semisimple`] computes cell dimensions, Betti numbers, connectedness and
//!   disconnection witnesses for semisimple Hessenberg varieties.
//! * [`nilpotent`] builds the rational-curve descent chains for nilpotent
//!   Hessenberg varieties.
//! * [`catalog`] and [`report`] materialize results as CSV/JSON.

pub mod catalog;
pub mod error;
pub mod hessenberg;
pub mod nilpotent;
pub mod notation;
pub mod report;
pub mod rootset;
pub mod rootsys;
pub mod semisimple;
pub mod weyl;

pub use error::{Error, Result};
pub use hessenberg::HessenbergSpace;
pub use nilpotent::{Chain, ChainStep, NilpotentSupport};
pub use rootset::RootSet;
pub use rootsys::{CartanDatum, Family, Root, RootSystem};
pub use semisimple::{BettiTable, CellReport, Witness};
pub use weyl::{LeviDatum, WeylElement, WeylGroup};
