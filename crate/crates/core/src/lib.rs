//! Maximum-entropy "particles in boxes" statistics.
//!
//! * [`entropy`] closed-form microstate counting, entropies, the occupancy law
//!   `phi(n) = ln(1 + 1/n) / beta` and its rank, Benford, Pareto and bell-curve
//!   specialisations.
//! * [`oracle`] exact enumeration, exact rational occupancy probabilities and
//!   a reproducible uniform sampler over bosonic microstates.
//! * [`statfit`] the empirical side: first-digit histograms and Benford tests,
//!   token rank-frequency tables and log-log slope fits.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod entropy;
mod error;
pub mod numeric;
pub mod oracle;
pub mod statfit;

pub use error::{Error, Result};
