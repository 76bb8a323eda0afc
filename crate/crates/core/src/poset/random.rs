use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::MeasuredPoset;

/// Seeded random poset with lengths in `1..=max_length`.
///
/// Relations are only drawn between elements of strictly increasing length,
/// so the result is always valid. Names are `e00`, `e01`, ... zero-padded so
/// that name order matches index order.
pub fn random_poset(seed: u64, size: usize, max_length: u32) -> MeasuredPoset {
    assert!(size >= 1, "size must be positive");
    assert!(max_length >= 1, "max_length must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let width = (size - 1).to_string().len().max(2);
    let names = (0..size).map(|i| format!("e{i:0width$}")).collect();
    let lengths: Vec<u32> = (0..size).map(|_| rng.gen_range(1..=max_length)).collect();
    let density: f64 = rng.gen_range(0.1..0.6);
    let mut relations = Vec::new();
    for a in 0..size {
        for b in 0..size {
            if lengths[a] < lengths[b] && rng.gen_bool(density) {
                relations.push((a, b));
            }
        }
    }
    MeasuredPoset::new(names, lengths, relations).expect("generated names are distinct")
}
