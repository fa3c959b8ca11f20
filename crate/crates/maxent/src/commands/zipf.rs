use maxent_core::entropy::{rank_frequencies, zipf_ratio};
use maxent_core::statfit::{loglog_slope_fit, zipf_check, FitRange, TokenCounts};

use super::emitter;
use crate::cli::{Cli, ZipfArgs};
use crate::error::{CliError, ExitStatus};
use crate::input::{read_input, utf8};
use crate::output::{InputDigest, Manifest};

pub(super) fn run(cli: &Cli, args: &ZipfArgs) -> Result<ExitStatus, CliError> {
    let bytes = read_input(&args.input)?;
    let text = utf8(&bytes, &args.input)?;
    let mut counts = TokenCounts::new();
    if args.lowercase {
        counts.extend(text.split_whitespace().map(str::to_lowercase));
    } else {
        counts.extend(text.split_whitespace());
    }
    if counts.total() == 0 {
        return Err(CliError::usage(format!(
            "{} contains no tokens",
            args.input.display()
        )));
    }
    let ranking = counts.rank()?;
    let dist = ranking.distribution()?;
    let max_rank = ranking.max_rank();

    let range = match (args.fit_min, args.fit_max) {
        (None, None) if max_rank < 3 => None,
        (lo, hi) => Some(FitRange::new(lo.unwrap_or(1), hi.unwrap_or(max_rank))),
    };
    let fit = range.map(|r| loglog_slope_fit(&dist, r)).transpose()?;

    let mut out = emitter(cli)?;
    out.table(
        "ranks",
        &["rank", "token", "count", "frequency", "law_frequency"],
    )?;
    let shown = args.top.map_or(max_rank, |t| (t as u64).min(max_rank));
    let theory = rank_frequencies(max_rank)?;
    for ((rank, law), (token, count)) in theory.zip(ranking.entries()).take(shown as usize) {
        out.row(&[
            rank.into(),
            token.as_str().into(),
            (*count).into(),
            dist.frequency(rank).into(),
            law.into(),
        ])?;
    }

    out.table("ratios", &["n", "observed_ratio", "law_ratio"])?;
    let mut n = 1u64;
    while n.checked_mul(2).is_some_and(|d| d <= max_rank) {
        out.row(&[
            n.into(),
            zipf_check(&dist, n)?.into(),
            zipf_ratio(n)?.into(),
        ])?;
        n *= 2;
    }

    out.table(
        "fit",
        &[
            "tokens",
            "distinct",
            "min_rank",
            "max_rank",
            "points",
            "slope",
            "intercept",
            "r_squared",
        ],
    )?;
    out.row(&[
        ranking.total().into(),
        max_rank.into(),
        fit.map(|f| f.fit_range.min_rank).into(),
        fit.map(|f| f.fit_range.max_rank).into(),
        fit.map(|f| f.points).into(),
        fit.map(|f| f.slope).into(),
        fit.map(|f| f.intercept).into(),
        fit.map(|f| f.r_squared).into(),
    ])?;

    let mut manifest = Manifest::new("zipf")
        .param("input", args.input.display().to_string())
        .param("lowercase", args.lowercase)
        .param("fit_min", args.fit_min)
        .param("fit_max", args.fit_max)
        .param("top", args.top);
    let mut digest = InputDigest::new();
    digest.update(&bytes);
    manifest.input_sha256 = Some(digest.finish());
    out.finish(&manifest)?;
    Ok(ExitStatus::Success)
}
