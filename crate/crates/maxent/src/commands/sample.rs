use maxent_core::entropy::OccupancySpectrum;
use maxent_core::oracle::{
    compare_to_theory, exact_box_occupancy_distribution, exact_occupied_spectrum, SamplerConfig,
};

use super::{emitter, require_seed};
use crate::cli::{Cli, Compare, SampleArgs};
use crate::error::{CliError, ExitStatus};
use crate::output::Manifest;
use crate::parallel::par_sample_uniform_microstates;

pub(super) fn run(cli: &Cli, args: &SampleArgs) -> Result<ExitStatus, CliError> {
    let seed = require_seed(cli, "sample")?;
    let (p, n) = (args.particles, args.boxes);
    let config = SamplerConfig::new(args.draws, seed).with_chunk_size(args.chunk_size);
    let tally = par_sample_uniform_microstates(p, n, &config, args.threads)?;
    let spectrum = tally.spectrum()?;
    let (theory, per_box_exact) = match args.compare {
        Compare::None => (None, None),
        Compare::Exact => (
            Some(exact_occupied_spectrum(p, n)?),
            Some(exact_box_occupancy_distribution(p, n)?),
        ),
        Compare::Eq10 => (Some(OccupancySpectrum::theory_eq10(p)?), None),
    };
    let report = theory
        .as_ref()
        .map(|t| compare_to_theory(&spectrum, t))
        .transpose()?;

    let mut out = emitter(cli)?;
    out.table("spectrum", &["occupancy", "count", "frequency"])?;
    for (k, f) in spectrum.frequencies() {
        out.row(&[k.into(), tally.incidences()[k as usize].into(), f.into()])?;
    }

    let per_box = tally.per_box_distribution();
    match &per_box_exact {
        Some(exact) => {
            out.table(
                "per_box",
                &["occupancy", "count", "probability", "exact_probability"],
            )?;
            for (k, (&c, (&pr, &ex))) in tally
                .incidences()
                .iter()
                .zip(per_box.iter().zip(exact))
                .enumerate()
            {
                if c > 0 || ex > 0.0 {
                    out.row(&[k.into(), c.into(), pr.into(), ex.into()])?;
                }
            }
        }
        None => {
            out.table("per_box", &["occupancy", "count", "probability"])?;
            for (k, (&c, &pr)) in tally.incidences().iter().zip(&per_box).enumerate() {
                if c > 0 {
                    out.row(&[k.into(), c.into(), pr.into()])?;
                }
            }
        }
    }

    if let Some(report) = &report {
        out.table(
            "comparison",
            &["occupancy", "empirical", "expected", "deviation"],
        )?;
        for d in &report.deviations {
            out.row(&[
                d.occupancy.into(),
                d.empirical.into(),
                d.expected.into(),
                d.deviation.into(),
            ])?;
        }
    }

    out.table(
        "summary",
        &[
            "particles",
            "boxes",
            "draws",
            "occupied_incidences",
            "reference",
            "max_abs_deviation",
            "chi_square",
        ],
    )?;
    out.row(&[
        p.into(),
        n.into(),
        tally.draws().into(),
        (spectrum.normalizer() as u64).into(),
        compare_name(args.compare).into(),
        report.as_ref().map(|r| r.max_abs_deviation).into(),
        report.as_ref().map(|r| r.chi_square).into(),
    ])?;
    out.finish(
        &Manifest::new("sample")
            .param("particles", p)
            .param("boxes", n)
            .param("draws", args.draws)
            .param("seed", seed)
            .param("chunk_size", args.chunk_size)
            .param("compare", compare_name(args.compare)),
    )?;
    Ok(ExitStatus::Success)
}

fn compare_name(c: Compare) -> &'static str {
    match c {
        Compare::None => "none",
        Compare::Exact => "exact",
        Compare::Eq10 => "eq10",
    }
}
