use maxent_core::statfit::{
    benford_expected, benford_test, parse_number, BenfordCriterion, DigitHistogram, ParsedNumber,
    StatisticKind, MIN_BENFORD_SAMPLE,
};

use super::emitter;
use crate::cli::{BenfordArgs, Cli, Statistic};
use crate::error::{CliError, ExitStatus};
use crate::input::{numeric_fields, read_input, ColumnSelector};
use crate::output::{InputDigest, Manifest};

/// Runs are refused when more than this share of fields fails to parse.
const MAX_UNPARSEABLE_SHARE: f64 = 0.5;

#[derive(Debug, Default)]
struct Ingest {
    fields: u64,
    unparseable: u64,
    zero_or_nonfinite: u64,
    min_abs: Option<f64>,
    max_abs: Option<f64>,
}

pub(super) fn run(cli: &Cli, args: &BenfordArgs) -> Result<ExitStatus, CliError> {
    let column = args.column.clone().map(ColumnSelector);
    let mut digest = InputDigest::new();
    let mut hist = DigitHistogram::new();
    let mut ingest = Ingest::default();
    for path in &args.inputs {
        let bytes = read_input(path)?;
        digest.update(&bytes);
        for field in numeric_fields(&bytes, column.as_ref(), !args.no_header, path)? {
            ingest.fields += 1;
            match parse_number(&field) {
                None => ingest.unparseable += 1,
                Some(ParsedNumber::Significant { digit, value }) => {
                    hist.record_digit(Some(digit));
                    let a = value.abs();
                    ingest.min_abs = Some(ingest.min_abs.map_or(a, |m| m.min(a)));
                    ingest.max_abs = Some(ingest.max_abs.map_or(a, |m| m.max(a)));
                }
                Some(_) => {
                    hist.record_digit(None);
                    ingest.zero_or_nonfinite += 1;
                }
            }
        }
    }

    if ingest.fields > 0 && ingest.unparseable as f64 > MAX_UNPARSEABLE_SHARE * ingest.fields as f64
    {
        return Err(CliError::usage(format!(
            "{} of {} fields are not numbers; check --column / --no-header",
            ingest.unparseable, ingest.fields
        )));
    }
    if hist.total() < MIN_BENFORD_SAMPLE {
        return Err(CliError::usage(format!(
            "only {} usable values; at least {MIN_BENFORD_SAMPLE} are needed",
            hist.total()
        )));
    }
    let decades = match (ingest.min_abs, ingest.max_abs) {
        (Some(lo), Some(hi)) => (hi / lo).log10(),
        _ => 0.0,
    };
    if decades < args.min_decades {
        return Err(CliError::usage(format!(
            "values span {decades:.3} decades, fewer than --min-decades {}",
            args.min_decades
        )));
    }

    let criterion = match args.statistic {
        Statistic::ChiSquare => BenfordCriterion::ChiSquare {
            significance: args.significance,
        },
        Statistic::Mad => BenfordCriterion::Mad {
            threshold: args.threshold,
        },
    };
    let report = benford_test(&hist, criterion)?;

    let mut out = emitter(cli)?;
    out.table(
        "digits",
        &["digit", "count", "observed_frequency", "expected_frequency"],
    )?;
    let observed = hist.frequencies();
    for (i, expected) in benford_expected().into_iter().enumerate() {
        out.row(&[
            (i as u64 + 1).into(),
            hist.counts()[i].into(),
            observed[i].into(),
            expected.into(),
        ])?;
    }
    out.table(
        "ingest",
        &[
            "fields",
            "usable",
            "unparseable",
            "zero_or_nonfinite",
            "decades",
        ],
    )?;
    out.row(&[
        ingest.fields.into(),
        hist.total().into(),
        ingest.unparseable.into(),
        ingest.zero_or_nonfinite.into(),
        decades.into(),
    ])?;
    out.table(
        "test",
        &[
            "statistic",
            "value",
            "degrees_of_freedom",
            "threshold",
            "significance",
            "p_value",
            "conforms",
        ],
    )?;
    out.row(&[
        match report.statistic_kind {
            StatisticKind::ChiSquare => "chi_square",
            StatisticKind::Mad => "mad",
        }
        .into(),
        report.statistic.into(),
        report.degrees_of_freedom.map(u64::from).into(),
        report.threshold.into(),
        report.significance.into(),
        report.p_value.into(),
        report.conforms.into(),
    ])?;

    let mut manifest = Manifest::new("benford")
        .param(
            "inputs",
            args.inputs
                .iter()
                .map(|p| p.display().to_string())
                .collect::<Vec<_>>()
                .join(","),
        )
        .param("column", args.column.clone())
        .param("no_header", args.no_header)
        .param(
            "statistic",
            match args.statistic {
                Statistic::ChiSquare => "chi-square",
                Statistic::Mad => "mad",
            },
        );
    manifest = match args.statistic {
        Statistic::ChiSquare => manifest.param("significance", args.significance),
        Statistic::Mad => manifest.param("threshold", args.threshold),
    }
    .param("min_decades", args.min_decades);
    manifest.input_sha256 = Some(digest.finish());
    out.finish(&manifest)?;

    Ok(if report.conforms {
        ExitStatus::Success
    } else {
        ExitStatus::NonConforming
    })
}
