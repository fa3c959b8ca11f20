use maxent_core::entropy::{
    bell_curve, bell_mode, benford_frequency, loglog_curve, phi_unnormalized, rank_frequencies,
    LagrangeParams,
};

use super::emitter;
use crate::cli::{Cli, DistKind};
use crate::error::{CliError, ExitStatus};
use crate::output::Manifest;

pub(super) fn run(cli: &Cli, kind: &DistKind) -> Result<ExitStatus, CliError> {
    match *kind {
        DistKind::Rank { max_rank } => {
            let rows = rank_frequencies(max_rank)?;
            let mut out = emitter(cli)?;
            out.table("rank_distribution", &["rank", "frequency"])?;
            for (r, f) in rows {
                out.row(&[r.into(), f.into()])?;
            }
            out.finish(&Manifest::new("dist rank").param("max_rank", max_rank))?;
        }
        DistKind::Benford => {
            let mut out = emitter(cli)?;
            out.table("benford", &["digit", "frequency"])?;
            for d in 1..=9u8 {
                out.row(&[u64::from(d).into(), benford_frequency(d)?.into()])?;
            }
            out.finish(&Manifest::new("dist benford"))?;
        }
        DistKind::Bell {
            beta,
            phi_max,
            steps,
            normalize,
        } => {
            let params = LagrangeParams::new(beta)?;
            if !(phi_max > 0.0 && phi_max.is_finite()) {
                return Err(CliError::usage("--phi-max must be positive and finite"));
            }
            if steps == 0 {
                return Err(CliError::usage("--steps must be at least 1"));
            }
            let phis: Vec<f64> = (0..=steps)
                .map(|i| phi_max * i as f64 / steps as f64)
                .collect();
            let curve = bell_curve(params, &phis, normalize)?;
            let peak = curve
                .iter()
                .max_by(|a, b| a.weight.total_cmp(&b.weight))
                .expect("grid has at least two points");

            let mut out = emitter(cli)?;
            out.table("bell_curve", &["phi", "particle_fraction", "weight"])?;
            for p in &curve {
                out.row(&[
                    p.frequency_phi.into(),
                    p.particle_fraction.into(),
                    p.weight.into(),
                ])?;
            }
            out.table(
                "bell_summary",
                &[
                    "beta",
                    "temperature",
                    "mode",
                    "grid_peak_phi",
                    "grid_peak_weight",
                    "normalized",
                ],
            )?;
            out.row(&[
                beta.into(),
                params.temperature().into(),
                bell_mode(params).into(),
                peak.frequency_phi.into(),
                peak.weight.into(),
                normalize.into(),
            ])?;
            out.finish(
                &Manifest::new("dist bell")
                    .param("beta", beta)
                    .param("phi_max", phi_max)
                    .param("steps", steps)
                    .param("normalize", normalize),
            )?;
        }
        DistKind::Loglog {
            beta,
            n_min,
            n_max,
            points,
        } => {
            let params = LagrangeParams::new(beta)?;
            if !(n_min > 0.0 && n_max > n_min && n_max.is_finite()) {
                return Err(CliError::usage("need 0 < --n-min < --n-max"));
            }
            if points < 2 {
                return Err(CliError::usage("--points must be at least 2"));
            }
            let (lo, hi) = (n_min.ln(), n_max.ln());
            let mut ns: Vec<f64> = (0..points)
                .map(|i| (lo + (hi - lo) * i as f64 / (points - 1) as f64).exp())
                .collect();
            ns[0] = n_min;
            ns[points - 1] = n_max;
            let logs = loglog_curve(params, &ns)?;
            let mut out = emitter(cli)?;
            out.table("loglog_curve", &["n", "phi", "ln_n", "ln_phi"])?;
            for (&n, &(ln_n, ln_phi)) in ns.iter().zip(&logs) {
                out.row(&[
                    n.into(),
                    phi_unnormalized(n, params)?.into(),
                    ln_n.into(),
                    ln_phi.into(),
                ])?;
            }
            out.finish(
                &Manifest::new("dist loglog")
                    .param("beta", beta)
                    .param("n_min", n_min)
                    .param("n_max", n_max)
                    .param("points", points),
            )?;
        }
    }
    Ok(ExitStatus::Success)
}
