use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::{BigRational, Ratio};
use num_traits::{ToPrimitive, Zero};

use super::enumerate::{enumerate_microstates, guarded_omega};
use crate::entropy::{omega, OccupancySpectrum, SpectrumSource};
use crate::{Error, Result};

/// Occupied (microstate, box) incidences per occupancy, over every
/// microstate of a system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    particles: u64,
    boxes: u64,
    microstates: u64,
    // counts[n - 1] for n = 1..=P
    counts: Vec<u64>,
}

impl Census {
    pub fn particles(&self) -> u64 {
        self.particles
    }

    pub fn boxes(&self) -> u64 {
        self.boxes
    }

    pub fn microstates(&self) -> u64 {
        self.microstates
    }

    /// Incidences with exactly `n` particles; zero for `n = 0` or `n > P`.
    pub fn count(&self, n: u64) -> u64 {
        if n == 0 {
            return 0;
        }
        self.counts.get((n - 1) as usize).copied().unwrap_or(0)
    }

    /// `(n, count)` for `n = 1..=P`.
    pub fn counts(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &c)| (i as u64 + 1, c))
    }

    pub fn occupied_incidences(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Exact relative frequencies over occupied incidences.
    pub fn frequencies_exact(&self) -> Vec<(u64, Ratio<u64>)> {
        let total = self.occupied_incidences();
        if total == 0 {
            return Vec::new();
        }
        self.counts()
            .map(|(n, c)| (n, Ratio::new(c, total)))
            .collect()
    }

    pub fn spectrum(&self) -> Result<OccupancySpectrum> {
        let total = self.occupied_incidences();
        if total == 0 {
            return Err(Error::Empty);
        }
        let entries = self
            .counts()
            .filter(|&(_, c)| c > 0)
            .map(|(n, c)| (n, c as f64))
            .collect();
        OccupancySpectrum::new(SpectrumSource::ExactCensus, entries, total as f64)
    }
}

/// Tallies box occupancies over every enumerated microstate.
pub fn occupancy_census(particles: u64, boxes: u64) -> Result<Census> {
    let mut counts = vec![0u64; particles as usize];
    let mut microstates = 0u64;
    for state in enumerate_microstates(particles, boxes)? {
        microstates += 1;
        for &n in state.occupancies() {
            if n > 0 {
                counts[(n - 1) as usize] += 1;
            }
        }
    }
    debug_assert_eq!(microstates, guarded_omega(particles, boxes)?);
    Ok(Census {
        particles,
        boxes,
        microstates,
        counts,
    })
}

// Omega with the empty-system convention Omega(k, 0) = [k == 0].
fn omega_or_empty(particles: u64, boxes: u64) -> BigUint {
    if boxes == 0 {
        if particles == 0 {
            BigUint::from(1u32)
        } else {
            BigUint::zero()
        }
    } else {
        omega(particles, boxes).expect("boxes >= 1")
    }
}

/// Probability that a given box holds exactly `n` particles under the
/// uniform measure on microstates: `Omega(P - n, N - 1) / Omega(P, N)`.
pub fn exact_box_occupancy_probability(n: u64, particles: u64, boxes: u64) -> Result<BigRational> {
    if boxes == 0 {
        return Err(Error::NoBoxes);
    }
    if n > particles {
        return Err(Error::Invalid(alloc::format!(
            "occupancy {n} outside 0..={particles}"
        )));
    }
    let favourable = omega_or_empty(particles - n, boxes - 1);
    let total = omega(particles, boxes)?;
    Ok(BigRational::new(
        BigInt::from(favourable),
        BigInt::from(total),
    ))
}

/// Closed-form occupied spectrum: `P(box holds n) / P(box occupied)` for
/// `n = 1..=P`, with no enumeration.
pub fn exact_occupied_spectrum(particles: u64, boxes: u64) -> Result<OccupancySpectrum> {
    if boxes == 0 {
        return Err(Error::NoBoxes);
    }
    if particles == 0 {
        return Err(Error::Empty);
    }
    let total = omega(particles, boxes)?;
    let empty = omega_or_empty(particles, boxes - 1);
    let occupied = &total - &empty;
    let mut entries = Vec::new();
    for_each_favourable(particles, boxes, |n, favourable| {
        if n > 0 {
            let w = ratio_to_f64(favourable, &occupied);
            if w > 0.0 {
                entries.push((n, w));
            }
        }
    });
    OccupancySpectrum::new(SpectrumSource::ExactCensus, entries, 1.0)
}

/// `P(box holds n)` for `n = 0..=P`, each correctly rounded from the exact
/// ratio.
pub fn exact_box_occupancy_distribution(particles: u64, boxes: u64) -> Result<Vec<f64>> {
    if boxes == 0 {
        return Err(Error::NoBoxes);
    }
    let total = omega(particles, boxes)?;
    let mut out = Vec::with_capacity(particles as usize + 1);
    for_each_favourable(particles, boxes, |_, favourable| {
        out.push(ratio_to_f64(favourable, &total));
    });
    Ok(out)
}

// Calls `f(n, Omega(P - n, N - 1))` for n = 0..=P, stepping with
// Omega(k - 1, M) = Omega(k, M) * k / (k + M - 1), an exact division.
fn for_each_favourable<F: FnMut(u64, &BigUint)>(particles: u64, boxes: u64, mut f: F) {
    let rest = boxes - 1;
    if rest == 0 {
        let (zero, one) = (BigUint::zero(), BigUint::from(1u32));
        for n in 0..=particles {
            f(n, if n == particles { &one } else { &zero });
        }
        return;
    }
    let mut favourable = omega_or_empty(particles, rest);
    for n in 0..=particles {
        f(n, &favourable);
        let k = particles - n;
        if k > 0 {
            favourable *= BigUint::from(k);
            favourable /= BigUint::from(k + rest - 1);
        }
    }
}

pub(crate) fn ratio_to_f64(num: &BigUint, den: &BigUint) -> f64 {
    if num.is_zero() {
        return 0.0;
    }
    let shift = den.bits() as i64 - num.bits() as i64 + 64;
    let q = if shift >= 0 {
        (num << shift as u64) / den
    } else {
        num / (den << (-shift) as u64)
    };
    let mantissa = q.to_f64().unwrap_or(f64::INFINITY);
    libm::ldexp(mantissa, -(shift as i32))
}
