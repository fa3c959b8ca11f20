use std::fs::File;
use std::io::{self, BufWriter, Write};

use maxent_core::entropy::rank_frequencies;
use rand::distributions::WeightedIndex;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use super::require_seed;
use crate::cli::{Cli, CorpusLaw, GenKind};
use crate::error::{CliError, ExitStatus};

pub(super) fn run(cli: &Cli, kind: &GenKind) -> Result<ExitStatus, CliError> {
    let seed = require_seed(cli, "gen")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Box<dyn Write> = match &cli.output {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match *kind {
        GenKind::LogUniform { count, decades } => {
            if decades == 0 {
                return Err(CliError::usage("--decades must be at least 1"));
            }
            for _ in 0..count {
                let u: f64 = rng.gen::<f64>() * f64::from(decades);
                writeln!(out, "{}", 10f64.powf(u))?;
            }
        }
        GenKind::UniformDigits { count } => {
            for i in 0..count {
                let digit = i % 9 + 1;
                let tail: u32 = rng.gen_range(0..1000);
                let exponent: i32 = rng.gen_range(-3..=6);
                writeln!(out, "{digit}.{tail:03}e{exponent}")?;
            }
        }
        GenKind::RankCorpus {
            max_rank,
            draws,
            law,
        } => {
            let weights: Vec<f64> = match law {
                CorpusLaw::RankLaw => rank_frequencies(max_rank)?.map(|(_, f)| f).collect(),
                CorpusLaw::InverseRank => (1..=max_rank).map(|r| 1.0 / r as f64).collect(),
            };
            let index = WeightedIndex::new(&weights)
                .map_err(|e| CliError::usage(format!("rank weights: {e}")))?;
            let width = max_rank.to_string().len();
            for _ in 0..draws {
                let r = index.sample(&mut rng) + 1;
                writeln!(out, "w{r:0width$}")?;
            }
        }
    }
    out.flush()?;
    Ok(ExitStatus::Success)
}
