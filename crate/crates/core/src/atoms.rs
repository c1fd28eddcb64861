//! Atom subsets and signed atom words.
//!
//! Atoms are numbered from 1 in every textual format (`"1 2 -1"`, `"1,3"`)
//! and from 0 inside the library.

use std::fmt;

use thiserror::Error;

/// Largest supported rank; atom sets are stored as a 64-bit mask.
pub const MAX_RANK: usize = 64;

/// A subset of the generating atoms, stored as a bit mask (bit `i` is atom `i`,
/// zero-based).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AtomSet(u64);

impl AtomSet {
    pub const EMPTY: AtomSet = AtomSet(0);

    pub fn from_bits(bits: u64) -> Self {
        AtomSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// All atoms `0..rank`.
    pub fn full(rank: usize) -> Self {
        if rank >= 64 {
            AtomSet(u64::MAX)
        } else {
            AtomSet((1u64 << rank) - 1)
        }
    }

    pub fn singleton(atom: usize) -> Self {
        AtomSet(1 << atom)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(atoms: I) -> Self {
        AtomSet(atoms.into_iter().fold(0, |m, a| m | (1 << a)))
    }

    pub fn contains(self, atom: usize) -> bool {
        atom < 64 && self.0 >> atom & 1 == 1
    }

    pub fn insert(&mut self, atom: usize) {
        self.0 |= 1 << atom;
    }

    pub fn with(self, atom: usize) -> Self {
        AtomSet(self.0 | 1 << atom)
    }

    pub fn union(self, other: AtomSet) -> Self {
        AtomSet(self.0 | other.0)
    }

    pub fn intersection(self, other: AtomSet) -> Self {
        AtomSet(self.0 & other.0)
    }

    pub fn is_subset(self, other: AtomSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest atom in the set.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// One-based atom labels, ascending.
    pub fn to_labels(self) -> Vec<usize> {
        self.iter().map(|a| a + 1).collect()
    }

    /// Parses `"1,3"` (one-based, comma separated). The empty string is the
    /// empty set.
    pub fn parse(text: &str, rank: usize) -> Result<Self, ParseError> {
        let mut set = AtomSet::EMPTY;
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let label: usize = part
                .parse()
                .map_err(|_| ParseError::BadToken(part.to_string()))?;
            if label == 0 || label > rank {
                return Err(ParseError::AtomOutOfRange { label: label as i64, rank });
            }
            set.insert(label - 1);
        }
        Ok(set)
    }
}

impl fmt::Debug for AtomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.to_labels()).finish()
    }
}

impl fmt::Display for AtomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.to_labels().iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", labels.join(","))
    }
}

/// Errors raised by the textual grammars (words, subsets, coordinates).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("cannot parse token {0:?}")]
    BadToken(String),
    #[error("atom {label} out of range for rank {rank}")]
    AtomOutOfRange { label: i64, rank: usize },
    #[error("{0}")]
    Malformed(String),
}

/// A word in the atoms and their inverses: `+i` is the atom with label `i`,
/// `-i` its inverse.
pub type Word = Vec<i32>;

/// Parses whitespace-separated nonzero integers. Bounds are checked against
/// `rank` when given.
pub fn parse_word(text: &str, rank: Option<usize>) -> Result<Word, ParseError> {
    text.split_whitespace()
        .map(|tok| {
            let letter: i32 = tok.parse().map_err(|_| ParseError::BadToken(tok.to_string()))?;
            if letter == 0 {
                return Err(ParseError::BadToken(tok.to_string()));
            }
            if let Some(rank) = rank {
                if letter.unsigned_abs() as usize > rank {
                    return Err(ParseError::AtomOutOfRange { label: letter as i64, rank });
                }
            }
            Ok(letter)
        })
        .collect()
}

pub fn format_word(word: &[i32]) -> String {
    word.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// Formal inverse: reverse the letters and flip their signs.
pub fn inverse_word(word: &[i32]) -> Word {
    word.iter().rev().map(|l| -l).collect()
}
