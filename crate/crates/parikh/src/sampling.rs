//! Seeded random words and letter-count vectors for property sweeps.
//! Everything here is deterministic in the seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::vector::AlphabeticVector;

pub type SampleRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn letter(i: usize) -> char {
    // a..z then A..Z; alphabets at desk scale stay well inside
    if i < 26 {
        (b'a' + i as u8) as char
    } else {
        (b'A' + (i - 26) as u8) as char
    }
}

/// A word over `1..=max_alphabet` letters with per-letter counts below
/// `max_count`, letters shuffled together.
pub fn random_word(rng: &mut SampleRng, max_alphabet: usize, max_count: usize) -> String {
    let letters = rng.gen_range(1..=max_alphabet.max(1));
    let mut chars: Vec<char> = Vec::new();
    for i in 0..letters {
        let count = rng.gen_range(0..max_count.max(1));
        chars.extend(std::iter::repeat_n(letter(i), count));
    }
    // Fisher-Yates
    for i in (1..chars.len()).rev() {
        let j = rng.gen_range(0..=i);
        chars.swap(i, j);
    }
    chars.into_iter().collect()
}

/// A letter-count vector with at least one count at or above `basis_size`,
/// for exploring the ignore-out-of-range mapping.
pub fn random_overflowing_counts(
    rng: &mut SampleRng,
    basis_size: usize,
    max_alphabet: usize,
) -> AlphabeticVector {
    let letters = rng.gen_range(1..=max_alphabet.max(1));
    let mut counts: Vec<usize> = (0..letters)
        .map(|_| rng.gen_range(0..2 * basis_size))
        .collect();
    let spike = rng.gen_range(0..letters);
    counts[spike] = rng.gen_range(basis_size..2 * basis_size);
    let alphabet: Vec<char> = (0..letters).map(letter).collect();
    AlphabeticVector::new(alphabet, counts).expect("distinct letters")
}
