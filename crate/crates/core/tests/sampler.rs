//! Monte Carlo sampler against the exact census and the closed-form rational
//! probabilities.

use std::collections::HashMap;

use maxent_core::oracle::{
    compare_to_theory, exact_box_occupancy_probability, occupancy_census,
    sample_uniform_microstates, MicrostateSampler, SamplerConfig,
};
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn three_in_three_matches_census() {
    let tally = sample_uniform_microstates(3, 3, &SamplerConfig::new(1_000_000, 42)).unwrap();
    let empirical = tally.spectrum().unwrap();
    let census = occupancy_census(3, 3).unwrap().spectrum().unwrap();
    let report = compare_to_theory(&empirical, &census).unwrap();
    assert!(report.max_abs_deviation < 0.002, "{report:?}");
    for (n, target) in [(1, 0.5), (2, 1.0 / 3.0), (3, 1.0 / 6.0)] {
        assert!((empirical.frequency(n) - target).abs() < 0.002);
    }
}

#[test]
fn fifteen_in_five_matches_exact_probabilities() {
    let tally = sample_uniform_microstates(15, 5, &SamplerConfig::new(1_000_000, 7)).unwrap();
    let observed = tally.per_box_distribution();
    for (n, &o) in observed.iter().enumerate() {
        let exact = exact_box_occupancy_probability(n as u64, 15, 5)
            .unwrap()
            .to_f64()
            .unwrap();
        assert!((o - exact).abs() < 0.002, "n={n}: {o} vs {exact}");
    }
}

#[test]
fn every_microstate_is_equally_likely() {
    let mut sampler = MicrostateSampler::new(3, 3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let draws = 10_000_000u32;
    let mut seen: HashMap<Vec<u64>, u32> = HashMap::new();
    let mut state = vec![0u64; 3];
    for _ in 0..draws {
        sampler.draw_into(&mut rng, &mut state);
        *seen.entry(state.clone()).or_insert(0) += 1;
    }
    assert_eq!(seen.len(), 10);
    for (state, count) in seen {
        let f = f64::from(count) / f64::from(draws);
        assert!((f - 0.1).abs() < 0.001, "{state:?}: {f}");
    }
}

#[test]
fn identical_configs_reproduce_bit_for_bit() {
    let cfg = SamplerConfig::new(200_000, 99).with_chunk_size(30_000);
    let a = sample_uniform_microstates(15, 5, &cfg).unwrap();
    let b = sample_uniform_microstates(15, 5, &cfg).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.spectrum().unwrap(), b.spectrum().unwrap());
}
