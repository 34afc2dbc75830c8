//! Exact verification primitives for character-degree bounds of finite groups.
//!
//! Everything here is pure computation over exact integers and rationals:
//! partitions and hook lengths for symmetric and alternating groups, order
//! formulas for simple groups of Lie type, small matrix groups over prime
//! fields, and enumerated finite groups (classes, Fitting subgroup,
//! character degrees). The crate is `no_std` and only needs `alloc`; file
//! formats, reporting and the command line live in the `degbound` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod alt_bounds;
pub mod error;
pub mod exact;
pub mod group;
pub mod group_stats;
pub mod matgroups;
pub mod matrix;
pub mod partitions;
pub mod report;
pub mod simple_orders;

pub use error::{Error, Result};
pub use exact::{BigNat, ExactRational, RootDegree, RootInterval};
pub use partitions::Partition;
pub use report::{CheckReport, Status};
