//! Type A fast path: permutation braids and the braids `s(i,j,k)`.

use thiserror::Error;

use crate::atoms::Word;
use crate::coxeter::{CoxeterMatrix, CoxeterType};
use crate::garside::{ArtinGroup, GarsideError, Simple};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("group is not of type A")]
    WrongType,
    #[error("strand index {index} out of range for {n} strands")]
    BadIndex { index: usize, n: usize },
    #[error("need 0 <= i < j < k <= n, got i={i}, j={j}, k={k}, n={n}")]
    BadRange { i: usize, j: usize, k: usize, n: usize },
    #[error("not a permutation of 1..{0}")]
    NotPermutation(usize),
    #[error(transparent)]
    Garside(#[from] GarsideError),
}

/// A positive braid in which every pair of strands crosses at most once,
/// recorded by where each strand ends up.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermutationBraid {
    // ends[i] = final position of the strand starting at position i (0-based)
    ends: Vec<usize>,
}

impl PermutationBraid {
    pub fn identity(n: usize) -> Self {
        PermutationBraid { ends: (0..n).collect() }
    }

    /// The half twist `Δ_n`: every pair of strands crosses.
    pub fn half_twist(n: usize) -> Self {
        PermutationBraid { ends: (0..n).rev().collect() }
    }

    /// From one-based images `π(1), …, π(n)`.
    pub fn from_images(images: &[usize]) -> Result<Self, BraidError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &p in images {
            if p == 0 || p > n || seen[p - 1] {
                return Err(BraidError::NotPermutation(n));
            }
            seen[p - 1] = true;
        }
        Ok(PermutationBraid { ends: images.iter().map(|p| p - 1).collect() })
    }

    /// Permutation of a positive word in which no two strands cross twice.
    /// Letters are one-based; `σ_i` exchanges the strands at positions
    /// `i, i+1`.
    pub fn from_positive_word(n: usize, word: &[usize]) -> Result<Self, BraidError> {
        let mut at: Vec<usize> = (0..n).collect(); // at[position] = strand
        for &i in word {
            if i == 0 || i >= n {
                return Err(BraidError::BadIndex { index: i, n });
            }
            at.swap(i - 1, i);
        }
        let mut ends = vec![0; n];
        for (pos, &strand) in at.iter().enumerate() {
            ends[strand] = pos;
        }
        Ok(PermutationBraid { ends })
    }

    pub fn strands(&self) -> usize {
        self.ends.len()
    }

    /// One-based images `π(1), …, π(n)`.
    pub fn images(&self) -> Vec<usize> {
        self.ends.iter().map(|p| p + 1).collect()
    }

    /// Whether strands `j` and `j+1` (one-based) cross, equivalently
    /// whether `σ_j` is a prefix.
    pub fn atom_prefix_test(&self, j: usize) -> Result<bool, BraidError> {
        let n = self.strands();
        if j == 0 || j >= n {
            return Err(BraidError::BadIndex { index: j, n });
        }
        Ok(self.ends[j - 1] > self.ends[j])
    }

    /// A reduced word (one-based letters), peeling the leftmost crossing
    /// pair each time.
    pub fn word(&self) -> Vec<usize> {
        let mut ends = self.ends.clone();
        let mut word = Vec::new();
        while let Some(j) = (0..ends.len().saturating_sub(1)).find(|&j| ends[j] > ends[j + 1]) {
            word.push(j + 1);
            ends.swap(j, j + 1);
        }
        word
    }

    /// The corresponding simple of `A_{n-1}`.
    pub fn to_simple(&self, group: &ArtinGroup) -> Result<Simple, BraidError> {
        require_type_a(group, self.strands())?;
        let word: Vec<usize> = self.word().iter().map(|j| j - 1).collect();
        Ok(group.simple_from_word(&word)?)
    }

    pub fn from_simple(group: &ArtinGroup, s: Simple) -> Result<Self, BraidError> {
        let n = group.rank() + 1;
        require_type_a(group, n)?;
        let word: Vec<usize> = group.simple_word(s).iter().map(|j| j + 1).collect();
        Self::from_positive_word(n, &word)
    }
}

fn require_type_a(group: &ArtinGroup, strands: usize) -> Result<(), BraidError> {
    let rank = group.rank();
    let expected: CoxeterMatrix = CoxeterType::A(rank).matrix();
    if rank + 1 != strands || *group.table().matrix() != expected {
        return Err(BraidError::WrongType);
    }
    Ok(())
}

/// `s(i,j,k) = (σ_j ⋯ σ_{i+1})(σ_{j+1} ⋯ σ_{i+2}) ⋯ (σ_{k-1} ⋯ σ_{i+k-j})`,
/// which moves the punctures `i+1..j` past `j+1..k`.
pub fn s_braid(i: usize, j: usize, k: usize, n: usize) -> Result<Word, BraidError> {
    if !(i < j && j < k && k <= n) {
        return Err(BraidError::BadRange { i, j, k, n });
    }
    let mut word = Vec::with_capacity((k - j) * (j - i));
    for m in 0..k - j {
        word.extend((i + 1 + m..=j + m).rev().map(|l| l as i32));
    }
    Ok(word)
}
