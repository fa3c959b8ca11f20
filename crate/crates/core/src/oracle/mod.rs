//! Brute-force and exact references for the closed forms in
//! [`crate::entropy`]: microstate enumeration, the occupancy census, exact
//! rational single-box probabilities and a uniform microstate sampler.

mod census;
mod compare;
mod enumerate;
mod sampler;

pub use census::{
    exact_box_occupancy_distribution, exact_box_occupancy_probability, exact_occupied_spectrum,
    occupancy_census, Census,
};
pub use compare::{compare_to_theory, DivergenceReport, OccupancyDeviation};
pub use enumerate::{enumerate_microstates, Microstate, Microstates, ENUMERATION_LIMIT};
pub use sampler::{
    sample_block, sample_uniform_microstates, MicrostateSampler, SampleTally, SamplerConfig,
};
