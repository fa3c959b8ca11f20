use alloc::vec::Vec;

use num_rational::Ratio;

use super::{LagrangeParams, RankDistribution, RankSource};
use crate::numeric::CompensatedSum;
use crate::{Error, Result};

/// Largest `R` that [`rank_distribution`] will materialize. Use
/// [`rank_frequencies`] to stream beyond it.
pub const MAX_MATERIALIZED_RANK: u64 = 1_000_000_000;

/// Number of boxes holding `n` particles, `ln(1 + 1/n) / beta`.
///
/// Real `n > 0` is accepted so curves can be traced between integers.
pub fn phi_unnormalized(n: f64, params: LagrangeParams) -> Result<f64> {
    if !(n > 0.0) {
        return Err(Error::domain("occupancy", "positive", n));
    }
    Ok(libm::log1p(1.0 / n) / params.beta())
}

/// Inverse of [`phi_unnormalized`]: `n = 1 / (exp(beta phi) - 1)`.
pub fn planck_occupancy(phi: f64, params: LagrangeParams) -> Result<f64> {
    let x = params.beta() * phi;
    if !(x > 0.0) {
        return Err(Error::domain("beta * phi", "positive", x));
    }
    Ok(1.0 / libm::expm1(x))
}

/// `phi(n) / phi(2n)`. The multiplier cancels, so no [`LagrangeParams`].
pub fn zipf_ratio(n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("occupancy", "at least 1", 0.0));
    }
    let n = n as f64;
    Ok(libm::log1p(1.0 / n) / libm::log1p(1.0 / (2.0 * n)))
}

/// `sum_{n=1..M} phi(n) = ln(M + 1) / beta` (the sum telescopes).
pub fn occupied_normalizer(occupied: u64, params: LagrangeParams) -> Result<f64> {
    if occupied == 0 {
        return Err(Error::domain("occupied-box count", "at least 1", 0.0));
    }
    Ok(ln_succ(occupied) / params.beta())
}

/// Relative frequency `ln(1 + 1/n) / ln(M + 1)` of occupancy `n` among
/// occupancies `1..=M`.
pub fn occupancy_frequency(n: u64, occupied: u64) -> Result<f64> {
    if n == 0 || n > occupied {
        return Err(Error::Invalid(alloc::format!(
            "occupancy {n} outside 1..={occupied}"
        )));
    }
    Ok(libm::log1p(1.0 / n as f64) / ln_succ(occupied))
}

/// Cluster-rank frequencies `f(r) = ln(1 + 1/r) / ln(R + 1)` for
/// `r = 1..=R`.
pub fn rank_distribution(max_rank: u64) -> Result<RankDistribution> {
    if max_rank > MAX_MATERIALIZED_RANK {
        return Err(Error::Invalid(alloc::format!(
            "max rank {max_rank} exceeds {MAX_MATERIALIZED_RANK}; stream it with rank_frequencies"
        )));
    }
    let frequencies: Vec<f64> = rank_frequencies(max_rank)?.map(|(_, f)| f).collect();
    RankDistribution::new(RankSource::Theoretical, frequencies)
}

/// Streaming form of [`rank_distribution`] with no size limit.
pub fn rank_frequencies(max_rank: u64) -> Result<impl Iterator<Item = (u64, f64)>> {
    if max_rank == 0 {
        return Err(Error::domain("max rank", "at least 1", 0.0));
    }
    let norm = ln_succ(max_rank);
    Ok((1..=max_rank).map(move |r| (r, libm::log1p(1.0 / r as f64) / norm)))
}

/// First-digit frequency `log10(1 + 1/d)`.
pub fn benford_frequency(digit: u8) -> Result<f64> {
    if !(1..=9).contains(&digit) {
        return Err(Error::domain("digit", "in 1..=9", f64::from(digit)));
    }
    Ok(libm::log1p(1.0 / f64::from(digit)) / core::f64::consts::LN_10)
}

/// Mass held by the richest ranks of a rank distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParetoSplit {
    /// Frequency mass of the top ranks.
    pub population_share: f64,
    /// Particle groups held by the top ranks over all groups,
    /// `sum_{top} r / sum_{1..R} r`.
    pub particle_share: Ratio<u128>,
}

impl ParetoSplit {
    pub fn particle_share_f64(&self) -> f64 {
        *self.particle_share.numer() as f64 / *self.particle_share.denom() as f64
    }
}

/// Shares held by the `top_k` highest ranks of `rank_distribution(R)`.
pub fn pareto_split(max_rank: u64, top_k: u64) -> Result<ParetoSplit> {
    if max_rank == 0 {
        return Err(Error::domain("max rank", "at least 1", 0.0));
    }
    if top_k == 0 || top_k > max_rank {
        return Err(Error::Invalid(alloc::format!(
            "top_k {top_k} outside 1..={max_rank}"
        )));
    }
    let norm = ln_succ(max_rank);
    let first = max_rank - top_k + 1;
    let mut mass = CompensatedSum::new();
    for r in first..=max_rank {
        mass.add(libm::log1p(1.0 / r as f64) / norm);
    }
    let r_max = u128::from(max_rank);
    let r_first = u128::from(first);
    let total = r_max * (r_max + 1) / 2;
    let top = total - (r_first - 1) * r_first / 2;
    Ok(ParetoSplit {
        population_share: mass.value(),
        particle_share: Ratio::new(top, total),
    })
}

// ln(m + 1) for integer m, exact argument up to 2^53.
fn ln_succ(m: u64) -> f64 {
    if m < (1u64 << 53) {
        libm::log((m + 1) as f64)
    } else {
        libm::log(m as f64) + libm::log1p(1.0 / m as f64)
    }
}
