use maxent_core::statfit::{
    log_spaced_subsample, loglog_curvature, loglog_fit_points, SUBSAMPLE_POINTS,
    SUBSAMPLE_THRESHOLD,
};

use super::emitter;
use crate::cli::{Cli, FitArgs};
use crate::error::{CliError, ExitStatus};
use crate::input::{read_input, read_xy_table, ColumnSelector};
use crate::output::{InputDigest, Manifest};

/// Half-range slope difference above which a log-log curve is reported as
/// not yet in its straight-line regime.
pub const CURVATURE_TOLERANCE: f64 = 0.05;

pub(super) fn run(cli: &Cli, args: &FitArgs) -> Result<ExitStatus, CliError> {
    let bytes = read_input(&args.input)?;
    let x_col = args.x_column.clone().map(ColumnSelector);
    let y_col = args.y_column.clone().map(ColumnSelector);
    let mut points = read_xy_table(&bytes, x_col.as_ref(), y_col.as_ref(), &args.input)?;
    points.retain(|&(x, _)| args.min.is_none_or(|lo| x >= lo) && args.max.is_none_or(|hi| x <= hi));
    points.sort_by(|a, b| a.0.total_cmp(&b.0));
    let used = if points.len() as u64 >= SUBSAMPLE_THRESHOLD {
        log_spaced_subsample(&points, SUBSAMPLE_POINTS)
    } else {
        points.clone()
    };
    let line = loglog_fit_points(&used)?;
    let curvature = loglog_curvature(&used);
    let regime = match curvature {
        Some(c) if c.abs() > CURVATURE_TOLERANCE => "non_asymptotic",
        Some(_) => "asymptotic",
        None => "undetermined",
    };

    let mut out = emitter(cli)?;
    out.table(
        "fit",
        &[
            "min_x",
            "max_x",
            "rows",
            "points",
            "slope",
            "intercept",
            "r_squared",
            "curvature",
            "regime",
        ],
    )?;
    out.row(&[
        used[0].0.into(),
        used[used.len() - 1].0.into(),
        points.len().into(),
        used.len().into(),
        line.slope.into(),
        line.intercept.into(),
        line.r_squared.into(),
        curvature.into(),
        regime.into(),
    ])?;
    let mut manifest = Manifest::new("fit")
        .param("input", args.input.display().to_string())
        .param("x_column", args.x_column.clone())
        .param("y_column", args.y_column.clone())
        .param("min", args.min)
        .param("max", args.max);
    let mut digest = InputDigest::new();
    digest.update(&bytes);
    manifest.input_sha256 = Some(digest.finish());
    out.finish(&manifest)?;
    Ok(ExitStatus::Success)
}
