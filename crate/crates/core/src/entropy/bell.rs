use alloc::vec::Vec;

use super::{phi_unnormalized, LagrangeParams};
use crate::{Error, Result};

/// One sample of the low-occupancy (bell) regime.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellCurvePoint {
    pub frequency_phi: f64,
    /// `exp(-beta phi)`.
    pub particle_fraction: f64,
    /// `phi * exp(-beta phi)`, or `beta^2 phi exp(-beta phi)` on a
    /// normalized curve.
    pub weight: f64,
}

/// Per-box weight `phi exp(-beta phi)`.
pub fn bell_weight(phi: f64, params: LagrangeParams) -> Result<f64> {
    if !(phi >= 0.0) {
        return Err(Error::domain("phi", "non-negative", phi));
    }
    Ok(phi * libm::exp(-params.beta() * phi))
}

/// Location of the maximum of [`bell_weight`], `1 / beta`.
pub fn bell_mode(params: LagrangeParams) -> f64 {
    1.0 / params.beta()
}

/// Evaluates the bell regime on the given grid of `phi` values, in the order
/// supplied.
///
/// With `normalize` the weights are scaled by `beta^2`, turning the curve
/// into the Gamma(2, beta) density that integrates to one over `phi >= 0`.
pub fn bell_curve(
    params: LagrangeParams,
    phis: &[f64],
    normalize: bool,
) -> Result<Vec<BellCurvePoint>> {
    let scale = if normalize {
        params.beta() * params.beta()
    } else {
        1.0
    };
    phis.iter()
        .map(|&phi| {
            if !(phi >= 0.0) {
                return Err(Error::domain("phi", "non-negative", phi));
            }
            let particle_fraction = libm::exp(-params.beta() * phi);
            Ok(BellCurvePoint {
                frequency_phi: phi,
                particle_fraction,
                weight: scale * phi * particle_fraction,
            })
        })
        .collect()
}

/// `(ln n, ln phi(n))` pairs for plotting the occupancy law on log-log axes.
pub fn loglog_curve(params: LagrangeParams, n_values: &[f64]) -> Result<Vec<(f64, f64)>> {
    n_values
        .iter()
        .map(|&n| Ok((libm::log(n), libm::log(phi_unnormalized(n, params)?))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::least_squares;
    use alloc::vec;
    use core::f64::consts::{E, LN_2};

    fn beta(b: f64) -> LagrangeParams {
        LagrangeParams::new(b).unwrap()
    }

    #[test]
    fn bell_weight_values() {
        let p = beta(1.0 / 50.0);
        assert_eq!(bell_weight(0.0, p).unwrap(), 0.0);
        assert!((bell_weight(50.0, p).unwrap() - 50.0 / E).abs() < 1e-12);
        assert!((bell_weight(50.0, p).unwrap() - 18.394).abs() < 1e-3);
        assert!(bell_weight(-1.0, p).is_err());
    }

    #[test]
    fn bell_weight_is_unimodal_about_the_mode() {
        let p = beta(0.2);
        let mode = bell_mode(p);
        assert_eq!(mode, 5.0);
        let grid: Vec<f64> = (0..=2000).map(|i| i as f64 * 0.01).collect();
        let w: Vec<f64> = grid.iter().map(|&x| bell_weight(x, p).unwrap()).collect();
        for (i, pair) in w.windows(2).enumerate() {
            if grid[i + 1] <= mode {
                assert!(pair[1] > pair[0]);
            } else if grid[i] >= mode {
                assert!(pair[1] < pair[0]);
            }
        }
    }

    #[test]
    fn bell_curve_points() {
        let pts = bell_curve(beta(0.02), &[0.0, 50.0, 100.0], false).unwrap();
        let weights: Vec<f64> = pts.iter().map(|p| p.weight).collect();
        assert_eq!(weights[0], 0.0);
        assert!((weights[1] - 18.394).abs() < 1e-3);
        assert!((weights[2] - 13.534).abs() < 1e-3);
        for p in &pts {
            assert!((p.particle_fraction - libm::exp(-0.02 * p.frequency_phi)).abs() < 1e-12);
            assert!((p.weight - p.frequency_phi * p.particle_fraction).abs() < 1e-12);
        }
        assert!(bell_curve(beta(1.0), &[1.0, -0.5], false).is_err());
    }

    #[test]
    fn normalized_bell_curve_integrates_to_one() {
        for b in [0.02, 1.0, 3.0] {
            let upper = 50.0 / b;
            let steps = 200_000;
            let h = upper / steps as f64;
            let grid: Vec<f64> = (0..=steps).map(|i| i as f64 * h).collect();
            let pts = bell_curve(beta(b), &grid, true).unwrap();
            // trapezoid rule
            let mut total = 0.0;
            for w in pts.windows(2) {
                total += 0.5 * (w[0].weight + w[1].weight) * h;
            }
            assert!((total - 1.0).abs() < 1e-3, "beta={b}: {total}");
        }
    }

    #[test]
    fn tiny_beta_flattens_the_particle_fraction() {
        let pts = bell_curve(beta(1e-9), &[0.0, 1.0, 10.0, 100.0], false).unwrap();
        for p in pts {
            assert!((p.particle_fraction - 1.0).abs() < 1e-6);
            assert!((p.weight - p.frequency_phi).abs() <= 1e-6 * p.frequency_phi.max(1.0));
        }
    }

    #[test]
    fn loglog_curve_values() {
        let pts = loglog_curve(beta(1.0), &[1.0]).unwrap();
        assert_eq!(pts[0].0, 0.0);
        assert!((pts[0].1 - libm::log(LN_2)).abs() < 1e-15);
        assert!(loglog_curve(beta(1.0), &[0.0]).is_err());

        let ns = vec![1.0, 10.0, 1e3, 1e6];
        let a = loglog_curve(beta(1.0), &ns).unwrap();
        let b = loglog_curve(beta(2.0), &ns).unwrap();
        for (p, q) in a.iter().zip(&b) {
            assert_eq!(p.0, q.0);
            assert!((q.1 - (p.1 - LN_2)).abs() < 1e-12);
        }
    }

    #[test]
    fn loglog_tail_has_unit_slope() {
        let ns: Vec<f64> = (0..=300)
            .map(|i| libm::pow(10.0, 3.0 + 3.0 * i as f64 / 300.0))
            .collect();
        let pts = loglog_curve(beta(1.0), &ns).unwrap();
        let fit = least_squares(&pts).unwrap();
        assert!((fit.slope + 1.0).abs() < 5e-3, "{}", fit.slope);
    }
}
