//! Multi-threaded driver for the uniform microstate sampler.

use maxent_core::oracle::{sample_block, SampleTally, SamplerConfig};
use maxent_core::{Error, Result};
use rayon::prelude::*;

/// Runs every block of `config` on a pool of `threads` workers (0 picks
/// the default) and merges the block tallies.
///
/// Each block owns its random substream, so the tally is identical to the
/// sequential `sample_uniform_microstates` for any thread count.
pub fn par_sample_uniform_microstates(
    particles: u64,
    boxes: u64,
    config: &SamplerConfig,
    threads: usize,
) -> Result<SampleTally> {
    config.validate()?;
    if particles == 0 {
        return Err(Error::OutOfDomain {
            name: "particles",
            requirement: "at least 1",
            value: 0.0,
        });
    }
    if boxes == 0 {
        return Err(Error::NoBoxes);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Invalid(format!("thread pool: {e}")))?;
    let blocks: Vec<(u64, u64)> = config.blocks().collect();
    let tallies = pool.install(|| {
        blocks
            .par_iter()
            .map(|&(index, len)| sample_block(particles, boxes, config.seed, index, len))
            .collect::<Result<Vec<_>>>()
    })?;
    let mut total = SampleTally::empty(particles, boxes);
    for t in &tallies {
        total.merge(t)?;
    }
    Ok(total)
}
