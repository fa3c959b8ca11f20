use num_bigint::BigUint;
use num_traits::One;

use super::SystemShape;
use crate::numeric::CompensatedSum;
use crate::{Error, Result};

/// Number of ways to place `particles` indistinguishable particles in
/// `boxes` distinguishable boxes, `(N + P - 1)! / (P! (N - 1)!)`, computed
/// exactly.
pub fn omega(particles: u64, boxes: u64) -> Result<BigUint> {
    if boxes == 0 {
        return Err(Error::NoBoxes);
    }
    // C(N + P - 1, k) with k = min(P, N - 1); every partial product
    // acc * (top - k + i) / i is itself a binomial coefficient, so the
    // division is exact.
    let top = (boxes - 1) as u128 + particles as u128;
    let k = particles.min(boxes - 1) as u128;
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc *= BigUint::from(top - k + i);
        acc /= BigUint::from(i);
    }
    Ok(acc)
}

/// `ln Omega(P, N)` via log-gamma.
pub fn boltzmann_entropy_exact(particles: u64, boxes: u64) -> Result<f64> {
    if boxes == 0 {
        return Err(Error::NoBoxes);
    }
    if particles == 0 || boxes == 1 {
        return Ok(0.0);
    }
    let p = particles as f64;
    let n = boxes as f64;
    Ok(libm::lgamma(n + p) - libm::lgamma(p + 1.0) - libm::lgamma(n))
}

/// Stirling approximation `N [(1 + n) ln(1 + n) - n ln n]` with `n = P / N`.
/// The `n ln n` term is taken as 0 when `P = 0`.
pub fn boltzmann_entropy_stirling(shape: SystemShape) -> f64 {
    if shape.particles() == 0 {
        return 0.0;
    }
    let n = shape.mean_occupancy();
    shape.boxes() as f64 * ((1.0 + n) * libm::log1p(n) - n * libm::log(n))
}

/// Gibbs-Shannon entropy `-sum p ln p` of a probability vector. Zero entries
/// contribute nothing.
pub fn gibbs_shannon_entropy(probabilities: &[f64]) -> Result<f64> {
    if probabilities.is_empty() {
        return Err(Error::Empty);
    }
    let mut total = CompensatedSum::new();
    let mut entropy = CompensatedSum::new();
    for &p in probabilities {
        if !(p >= 0.0 && p.is_finite()) {
            return Err(Error::domain("probability", "non-negative and finite", p));
        }
        total.add(p);
        if p > 0.0 {
            entropy.add(-p * libm::log(p));
        }
    }
    let total = total.value();
    if (total - 1.0).abs() > 1e-9 {
        return Err(Error::NotNormalized(total));
    }
    Ok(entropy.value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn omega_small_cases() {
        assert_eq!(omega(3, 3).unwrap(), BigUint::from(10u32));
        assert_eq!(omega(5, 4).unwrap(), BigUint::from(56u32));
        for n in 1..20 {
            assert_eq!(omega(0, n).unwrap(), BigUint::one());
        }
        assert_eq!(omega(17, 1).unwrap(), BigUint::one());
        assert_eq!(omega(1, 9).unwrap(), BigUint::from(9u32));
        assert_eq!(omega(3, 0), Err(Error::NoBoxes));
    }

    #[test]
    fn omega_exceeds_u64_at_modest_sizes() {
        let big = omega(100, 100).unwrap();
        assert!(big.bits() > 64);
        // C(199, 100) = 4.5274e58
        let digits = big.to_str_radix(10);
        assert_eq!(digits.len(), 59);
        assert!(digits.starts_with("45274257328051640582702088538742081937252294837706668420660"));
    }

    #[test]
    fn exact_entropy_small_cases() {
        assert!((boltzmann_entropy_exact(3, 3).unwrap() - libm::log(10.0)).abs() < 1e-12);
        assert_eq!(boltzmann_entropy_exact(0, 7).unwrap(), 0.0);
        assert!(boltzmann_entropy_exact(1, 0).is_err());
    }

    #[test]
    fn exact_entropy_is_finite_at_billion_scale() {
        let s = boltzmann_entropy_exact(1_000_000_000, 1_000_000_000).unwrap();
        assert!(s.is_finite());
        // Leading order 2N ln 2 minus the half-log correction.
        let approx = 2e9 * core::f64::consts::LN_2;
        assert!(((s - approx) / approx).abs() < 1e-7);
    }

    #[test]
    fn stirling_values() {
        let s = boltzmann_entropy_stirling(SystemShape::new(3, 3).unwrap());
        assert!((s - 6.0 * core::f64::consts::LN_2).abs() < 1e-12);
        assert!((s - 4.158_883).abs() < 1e-6);
        let s = boltzmann_entropy_stirling(SystemShape::new(1000, 1000).unwrap());
        assert!((s - 2000.0 * core::f64::consts::LN_2).abs() < 1e-9);
        assert_eq!(
            boltzmann_entropy_stirling(SystemShape::new(0, 12).unwrap()),
            0.0
        );
    }

    #[test]
    fn gibbs_shannon_values() {
        let uniform = vec![0.1; 10];
        assert!((gibbs_shannon_entropy(&uniform).unwrap() - libm::log(10.0)).abs() < 1e-12);
        assert_eq!(gibbs_shannon_entropy(&[1.0]).unwrap(), 0.0);
        let h = gibbs_shannon_entropy(&[0.5, 0.25, 0.25]).unwrap();
        assert!((h - 1.5 * core::f64::consts::LN_2).abs() < 1e-12);
        assert!((h - 1.039_721).abs() < 1e-6);
        assert_eq!(gibbs_shannon_entropy(&[0.0, 1.0, 0.0]).unwrap(), 0.0);
    }

    #[test]
    fn gibbs_shannon_rejects_bad_input() {
        assert!(gibbs_shannon_entropy(&[-0.1, 1.1]).is_err());
        assert!(matches!(
            gibbs_shannon_entropy(&[0.5, 0.4]),
            Err(Error::NotNormalized(_))
        ));
        assert_eq!(gibbs_shannon_entropy(&[]), Err(Error::Empty));
    }
}
