use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::entropy::omega;
use crate::{Error, Result};

/// Largest microstate count the enumerator will walk.
pub const ENUMERATION_LIMIT: u64 = 100_000_000;

/// Particles per box for one configuration. Entries sum to `P`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Microstate(pub Vec<u64>);

impl Microstate {
    pub fn occupancies(&self) -> &[u64] {
        &self.0
    }

    pub fn particles(&self) -> u64 {
        self.0.iter().sum()
    }
}

/// Iterator over all weak compositions of `P` into `N` parts in ascending
/// lexicographic order, from `(0, .., 0, P)` to `(P, 0, .., 0)`.
#[derive(Debug, Clone)]
pub struct Microstates {
    current: Option<Vec<u64>>,
    remaining: u64,
}

impl Iterator for Microstates {
    type Item = Microstate;

    fn next(&mut self) -> Option<Microstate> {
        let current = self.current.as_mut()?;
        let out = Microstate(current.clone());
        self.remaining -= 1;
        // Successor: move one particle from the last non-empty box j >= 1
        // into box j - 1 and sweep the rest of box j to the end.
        match (1..current.len()).rev().find(|&j| current[j] > 0) {
            Some(j) => {
                let rest = current[j] - 1;
                current[j] = 0;
                current[j - 1] += 1;
                let last = current.len() - 1;
                current[last] += rest;
            }
            None => self.current = None,
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.remaining as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Microstates {}

pub(crate) fn guarded_omega(particles: u64, boxes: u64) -> Result<u64> {
    let count: BigUint = omega(particles, boxes)?;
    match count.to_u64() {
        Some(c) if c <= ENUMERATION_LIMIT => Ok(c),
        _ => Err(Error::TooManyMicrostates {
            count,
            limit: ENUMERATION_LIMIT,
        }),
    }
}

/// Streams every microstate of `P` particles in `N` boxes exactly once.
pub fn enumerate_microstates(particles: u64, boxes: u64) -> Result<Microstates> {
    let remaining = guarded_omega(particles, boxes)?;
    let mut start = vec![0u64; boxes as usize];
    start[boxes as usize - 1] = particles;
    Ok(Microstates {
        current: Some(start),
        remaining,
    })
}
