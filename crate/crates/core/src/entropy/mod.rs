//! Closed-form occupancy statistics for `P` indistinguishable particles in
//! `N` distinguishable boxes.
//!
//! Everything here is a pure function. Distribution-valued results
//! ([`OccupancySpectrum`], [`RankDistribution`]) never depend on the Lagrange
//! multiplier; only the unnormalized occupancy law and the bell-regime
//! helpers take [`LagrangeParams`].

mod bell;
mod counting;
mod occupancy;

use alloc::vec::Vec;

pub use bell::{bell_curve, bell_mode, bell_weight, loglog_curve, BellCurvePoint};
pub use counting::{
    boltzmann_entropy_exact, boltzmann_entropy_stirling, gibbs_shannon_entropy, omega,
};
pub use occupancy::{
    benford_frequency, occupancy_frequency, occupied_normalizer, pareto_split, phi_unnormalized,
    planck_occupancy, rank_distribution, rank_frequencies, zipf_ratio, ParetoSplit,
    MAX_MATERIALIZED_RANK,
};

use crate::numeric::compensated_sum;
use crate::{Error, Result};

/// Number of boxes `N` and particles `P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SystemShape {
    particles: u64,
    boxes: u64,
}

impl SystemShape {
    pub fn new(particles: u64, boxes: u64) -> Result<Self> {
        if boxes == 0 {
            return Err(Error::NoBoxes);
        }
        Ok(Self { particles, boxes })
    }

    pub fn particles(&self) -> u64 {
        self.particles
    }

    pub fn boxes(&self) -> u64 {
        self.boxes
    }

    /// `P / N`.
    pub fn mean_occupancy(&self) -> f64 {
        self.particles as f64 / self.boxes as f64
    }
}

/// The Lagrange multiplier `beta` of the particle-number constraint, with
/// temperature `T = 1 / beta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LagrangeParams {
    beta: f64,
}

impl LagrangeParams {
    pub fn new(beta: f64) -> Result<Self> {
        if !(beta > 0.0 && beta.is_finite()) {
            return Err(Error::domain("beta", "positive and finite", beta));
        }
        Ok(Self { beta })
    }

    pub fn from_temperature(temperature: f64) -> Result<Self> {
        if !(temperature > 0.0 && temperature.is_finite()) {
            return Err(Error::domain(
                "temperature",
                "positive and finite",
                temperature,
            ));
        }
        Self::new(1.0 / temperature)
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn temperature(&self) -> f64 {
        1.0 / self.beta
    }
}

impl Default for LagrangeParams {
    fn default() -> Self {
        Self { beta: 1.0 }
    }
}

/// Where the weights of an [`OccupancySpectrum`] came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpectrumSource {
    ExactCensus,
    MonteCarlo,
    TheoryEq10,
}

/// Weights of occupied boxes per occupancy `n >= 1`.
///
/// Invariants: occupancies strictly increasing and at least 1, and the
/// weights divided by `normalizer` sum to 1 within `1e-12`.
#[derive(Debug, Clone, PartialEq)]
pub struct OccupancySpectrum {
    source: SpectrumSource,
    entries: Vec<(u64, f64)>,
    normalizer: f64,
}

impl OccupancySpectrum {
    pub const NORMALIZATION_TOLERANCE: f64 = 1e-12;

    pub fn new(source: SpectrumSource, entries: Vec<(u64, f64)>, normalizer: f64) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Empty);
        }
        if !(normalizer > 0.0 && normalizer.is_finite()) {
            return Err(Error::domain(
                "normalizer",
                "positive and finite",
                normalizer,
            ));
        }
        let mut previous = 0u64;
        for &(n, w) in &entries {
            if n <= previous {
                return Err(Error::Invalid(alloc::format!(
                    "occupancies must be strictly increasing and at least 1 (saw {n} after {previous})"
                )));
            }
            if !(w >= 0.0 && w.is_finite()) {
                return Err(Error::domain("weight", "non-negative and finite", w));
            }
            previous = n;
        }
        let total = compensated_sum(entries.iter().map(|&(_, w)| w / normalizer));
        if (total - 1.0).abs() > Self::NORMALIZATION_TOLERANCE {
            return Err(Error::NotNormalized(total));
        }
        Ok(Self {
            source,
            entries,
            normalizer,
        })
    }

    /// The occupancy law normalized over occupancies `1..=max_occupancy`:
    /// weights `ln(1 + 1/n)` with normalizer `ln(M + 1)`.
    pub fn theory_eq10(max_occupancy: u64) -> Result<Self> {
        if max_occupancy == 0 {
            return Err(Error::domain("occupied-box count", "at least 1", 0.0));
        }
        let entries = (1..=max_occupancy)
            .map(|n| (n, libm::log1p(1.0 / n as f64)))
            .collect();
        let normalizer = occupied_normalizer(max_occupancy, LagrangeParams::default())?;
        Self::new(SpectrumSource::TheoryEq10, entries, normalizer)
    }

    pub fn source(&self) -> SpectrumSource {
        self.source
    }

    pub fn entries(&self) -> &[(u64, f64)] {
        &self.entries
    }

    pub fn normalizer(&self) -> f64 {
        self.normalizer
    }

    /// Normalized frequency of occupancy `n`, zero outside the support.
    pub fn frequency(&self, n: u64) -> f64 {
        self.entries
            .binary_search_by_key(&n, |&(k, _)| k)
            .map(|i| self.entries[i].1 / self.normalizer)
            .unwrap_or(0.0)
    }

    pub fn frequencies(&self) -> impl Iterator<Item = (u64, f64)> + '_ {
        self.entries
            .iter()
            .map(move |&(n, w)| (n, w / self.normalizer))
    }
}

/// Whether a rank distribution comes from the closed form or from counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RankSource {
    Theoretical,
    Empirical,
}

/// Frequencies `f(r)` for ranks `r = 1..=R`.
///
/// Theoretical distributions are strictly decreasing; empirical ones are
/// non-increasing (ties are allowed). Both sum to 1 within `1e-12`.
#[derive(Debug, Clone, PartialEq)]
pub struct RankDistribution {
    source: RankSource,
    frequencies: Vec<f64>,
}

impl RankDistribution {
    pub const NORMALIZATION_TOLERANCE: f64 = 1e-12;

    /// Validates and wraps frequencies listed from rank 1 upwards.
    pub fn new(source: RankSource, frequencies: Vec<f64>) -> Result<Self> {
        if frequencies.is_empty() {
            return Err(Error::Empty);
        }
        for w in frequencies.windows(2) {
            let ordered = match source {
                RankSource::Theoretical => w[1] < w[0],
                RankSource::Empirical => w[1] <= w[0],
            };
            if !ordered {
                return Err(Error::Invalid(alloc::format!(
                    "rank frequencies must decrease with rank ({} followed by {})",
                    w[0],
                    w[1]
                )));
            }
        }
        if let Some(&f) = frequencies.iter().find(|f| !(**f > 0.0 && **f <= 1.0)) {
            return Err(Error::domain("rank frequency", "in (0, 1]", f));
        }
        let total = compensated_sum(frequencies.iter().copied());
        if (total - 1.0).abs() > Self::NORMALIZATION_TOLERANCE {
            return Err(Error::NotNormalized(total));
        }
        Ok(Self {
            source,
            frequencies,
        })
    }

    pub fn source(&self) -> RankSource {
        self.source
    }

    /// `R`.
    pub fn max_rank(&self) -> u64 {
        self.frequencies.len() as u64
    }

    /// `f(r)`, or `None` outside `1..=R`.
    pub fn frequency(&self, rank: u64) -> Option<f64> {
        if rank == 0 {
            return None;
        }
        self.frequencies.get((rank - 1) as usize).copied()
    }

    /// Frequencies indexed from rank 1.
    pub fn as_slice(&self) -> &[f64] {
        &self.frequencies
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, f64)> + '_ {
        self.frequencies
            .iter()
            .enumerate()
            .map(|(i, &f)| (i as u64 + 1, f))
    }
}
