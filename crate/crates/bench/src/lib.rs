//! Deterministic inputs shared by the benchmarks.

use standardize_core::{ArtinGroup, AtomSet, DynnikovCoords, ParabolicPresentation, Word};

/// A signed word over `rank` atoms from a fixed linear congruential stream.
pub fn pseudo_random_word(rank: usize, len: usize, seed: u64) -> Word {
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    (0..len)
        .map(|_| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let atom = ((state >> 33) % rank as u64) as i32 + 1;
            if (state >> 63) == 1 {
                -atom
            } else {
                atom
            }
        })
        .collect()
}

/// The spiral with `k` twists on 5 punctures.
pub fn spiral(k: usize) -> DynnikovCoords {
    DynnikovCoords::spiral(k, 5).expect("5 is odd")
}

/// `(X, α)` with `X` the first half of the atoms and `α` a pseudo-random word.
pub fn presentation(group: &ArtinGroup, alpha_len: usize, seed: u64) -> ParabolicPresentation {
    let x = AtomSet::from_indices(0..group.rank().div_ceil(2));
    let alpha = group.normalize(&pseudo_random_word(group.rank(), alpha_len, seed)).expect("atoms in range");
    ParabolicPresentation::new(x, alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_are_reproducible_and_in_range() {
        let w = pseudo_random_word(4, 50, 7);
        assert_eq!(w, pseudo_random_word(4, 50, 7));
        assert!(w.iter().all(|&l| l != 0 && l.abs() <= 4));
        assert!(w.iter().any(|&l| l < 0) && w.iter().any(|&l| l > 0));
    }
}
