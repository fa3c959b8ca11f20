use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::entropy::{OccupancySpectrum, SpectrumSource};
use crate::{Error, Result};

/// Draw count, seed and the block size that fixes how draws map onto
/// random substreams.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplerConfig {
    pub draws: u64,
    pub seed: u64,
    pub chunk_size: u64,
}

impl SamplerConfig {
    pub const DEFAULT_CHUNK_SIZE: u64 = 1 << 16;

    pub fn new(draws: u64, seed: u64) -> Self {
        Self {
            draws,
            seed,
            chunk_size: Self::DEFAULT_CHUNK_SIZE,
        }
    }

    pub fn with_chunk_size(mut self, chunk_size: u64) -> Self {
        self.chunk_size = chunk_size;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.draws == 0 {
            return Err(Error::domain("draws", "at least 1", 0.0));
        }
        if self.chunk_size == 0 {
            return Err(Error::domain("chunk size", "at least 1", 0.0));
        }
        Ok(())
    }

    /// `(block index, draws in block)` in block order.
    pub fn blocks(&self) -> impl Iterator<Item = (u64, u64)> {
        let draws = self.draws;
        let size = self.chunk_size.max(1);
        let count = draws.div_ceil(size);
        (0..count).map(move |b| (b, size.min(draws - b * size)))
    }
}

/// Exactly uniform sampler over the weak compositions of `P` into `N`
/// parts, via stars and bars: a uniform subset of the `N + P - 1` slots
/// (Floyd's algorithm) is read off as bar or star positions, whichever set
/// is smaller.
#[derive(Debug, Clone)]
pub struct MicrostateSampler {
    particles: u64,
    boxes: u64,
    slots: u64,
    chosen: BTreeSet<u64>,
}

impl MicrostateSampler {
    pub fn new(particles: u64, boxes: u64) -> Result<Self> {
        if boxes == 0 {
            return Err(Error::NoBoxes);
        }
        let slots = particles
            .checked_add(boxes - 1)
            .ok_or_else(|| Error::Invalid("N + P - 1 overflows the slot index range".into()))?;
        if usize::try_from(boxes).is_err() {
            return Err(Error::Invalid(
                "box count exceeds addressable memory".into(),
            ));
        }
        Ok(Self {
            particles,
            boxes,
            slots,
            chosen: BTreeSet::new(),
        })
    }

    pub fn particles(&self) -> u64 {
        self.particles
    }

    pub fn boxes(&self) -> u64 {
        self.boxes
    }

    /// Writes one uniformly drawn microstate into `out` (length `N`).
    pub fn draw_into<R: Rng + ?Sized>(&mut self, rng: &mut R, out: &mut [u64]) {
        assert_eq!(
            out.len() as u64,
            self.boxes,
            "output length must equal box count"
        );
        let bars = self.boxes - 1;
        if bars <= self.particles {
            self.choose(rng, bars);
            let mut previous: Option<u64> = None;
            for (slot, &bar) in out.iter_mut().zip(self.chosen.iter()) {
                *slot = match previous {
                    None => bar,
                    Some(p) => bar - p - 1,
                };
                previous = Some(bar);
            }
            let last = out.len() - 1;
            out[last] = match previous {
                None => self.particles,
                Some(p) => self.slots - 1 - p,
            };
        } else {
            self.choose(rng, self.particles);
            out.fill(0);
            // A star at slot s with j stars before it has s - j bars before it.
            for (j, &star) in self.chosen.iter().enumerate() {
                out[(star - j as u64) as usize] += 1;
            }
        }
    }

    pub fn draw<R: Rng + ?Sized>(&mut self, rng: &mut R) -> super::Microstate {
        let mut out = vec![0u64; self.boxes as usize];
        self.draw_into(rng, &mut out);
        super::Microstate(out)
    }

    // Floyd's uniform k-subset of 0..slots.
    fn choose<R: Rng + ?Sized>(&mut self, rng: &mut R, k: u64) {
        self.chosen.clear();
        for j in (self.slots - k)..self.slots {
            let t = rng.gen_range(0..=j);
            if !self.chosen.insert(t) {
                self.chosen.insert(j);
            }
        }
    }
}

/// Per-box occupancy incidences accumulated over a run of draws.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleTally {
    particles: u64,
    boxes: u64,
    draws: u64,
    // incidences[n] for n = 0..=P
    incidences: Vec<u64>,
}

impl SampleTally {
    pub fn empty(particles: u64, boxes: u64) -> Self {
        Self {
            particles,
            boxes,
            draws: 0,
            incidences: vec![0; particles as usize + 1],
        }
    }

    pub fn particles(&self) -> u64 {
        self.particles
    }

    pub fn boxes(&self) -> u64 {
        self.boxes
    }

    pub fn draws(&self) -> u64 {
        self.draws
    }

    /// (draw, box) incidences with exactly `n` particles, `n = 0..=P`.
    pub fn incidences(&self) -> &[u64] {
        &self.incidences
    }

    pub fn record(&mut self, state: &[u64]) {
        for &n in state {
            self.incidences[n as usize] += 1;
        }
        self.draws += 1;
    }

    /// Adds another tally of the same system. Addition is associative and
    /// commutative, so merge order never changes the result.
    pub fn merge(&mut self, other: &SampleTally) -> Result<()> {
        if (self.particles, self.boxes) != (other.particles, other.boxes) {
            return Err(Error::Invalid(
                "cannot merge tallies of different systems".into(),
            ));
        }
        for (a, b) in self.incidences.iter_mut().zip(&other.incidences) {
            *a += b;
        }
        self.draws += other.draws;
        Ok(())
    }

    /// Empirical probability that a box holds `n` particles, `n = 0..=P`.
    pub fn per_box_distribution(&self) -> Vec<f64> {
        let denom = (self.draws * self.boxes) as f64;
        self.incidences.iter().map(|&c| c as f64 / denom).collect()
    }

    /// Occupied-incidence spectrum (`n >= 1`).
    pub fn spectrum(&self) -> Result<OccupancySpectrum> {
        let total: u64 = self.incidences[1..].iter().sum();
        if total == 0 {
            return Err(Error::Empty);
        }
        let entries = self
            .incidences
            .iter()
            .enumerate()
            .skip(1)
            .filter(|&(_, &c)| c > 0)
            .map(|(n, &c)| (n as u64, c as f64))
            .collect();
        OccupancySpectrum::new(SpectrumSource::MonteCarlo, entries, total as f64)
    }
}

/// Draws one block. Block `b` reads ChaCha8 stream `b` of the run seed, so
/// any partition of blocks across workers reproduces the same tally.
pub fn sample_block(
    particles: u64,
    boxes: u64,
    seed: u64,
    block_index: u64,
    draws: u64,
) -> Result<SampleTally> {
    let mut sampler = MicrostateSampler::new(particles, boxes)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(block_index);
    let mut tally = SampleTally::empty(particles, boxes);
    let mut state = vec![0u64; boxes as usize];
    for _ in 0..draws {
        sampler.draw_into(&mut rng, &mut state);
        tally.record(&state);
    }
    Ok(tally)
}

/// Sequential sampling run over every block of `config`.
pub fn sample_uniform_microstates(
    particles: u64,
    boxes: u64,
    config: &SamplerConfig,
) -> Result<SampleTally> {
    config.validate()?;
    if particles == 0 {
        return Err(Error::domain("particles", "at least 1", 0.0));
    }
    MicrostateSampler::new(particles, boxes)?;
    let mut tally = SampleTally::empty(particles, boxes);
    for (block, len) in config.blocks() {
        tally.merge(&sample_block(particles, boxes, config.seed, block, len)?)?;
    }
    Ok(tally)
}
