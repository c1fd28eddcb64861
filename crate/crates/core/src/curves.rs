//! Curve systems on the punctured disk in reduced Dynnikov coordinates.
//!
//! A system on `D_n` is stored as `(a_0, b_0, …, a_{n-1}, b_{n-1})` with
//! `a_0 = a_{n-1} = 0`. Braids act on the right, one letter at a time.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::atoms::{ParseError, Word};
use crate::braid;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("expected {expected} values, got {got}")]
    BadLength { expected: usize, got: usize },
    #[error("x_{i} - x_{j} is odd")]
    OddDifference { i: usize, j: usize },
    #[error("intersection counts must be nonnegative")]
    NegativeCount,
    #[error("a_0 and a_(n-1) must vanish")]
    BoundaryNonzero,
    #[error("letter {letter} is not a generator on {n} punctures")]
    BadIndex { letter: i64, n: usize },
    #[error("interval [{p},{q}] does not bound a non-degenerate curve on {n} punctures")]
    DegenerateCurve { p: usize, q: usize, n: usize },
    #[error("interval [{p},{q}] given twice")]
    DuplicateCurve { p: usize, q: usize },
    #[error("intervals [{0},{1}] and [{2},{3}] cross")]
    CrossingIntervals(usize, usize, usize, usize),
    #[error("spiral needs an odd number of punctures >= 3, got {0}")]
    BadN(usize),
    #[error("coordinates do not describe a curve system: rounding did not terminate within the length bound")]
    NotACurveSystem,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Reduced Dynnikov coordinates of a curve system on `D_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DynnikovCoords {
    a: Vec<BigInt>,
    b: Vec<BigInt>,
}

/// Bending points and hairpins read off the coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    /// `R_j = a_{j-1} - a_j` for `j = 1..n-1`: positive values count bending
    /// points at `j`, negative ones reversed bending points.
    pub bending: Vec<BigInt>,
    /// `b_{j-1}` for `j = 1..n`: negative values count left hairpins at `j`,
    /// positive ones right hairpins.
    pub hairpins: Vec<BigInt>,
}

impl Census {
    pub fn bending_points(&self, j: usize) -> BigInt {
        self.bending[j - 1].clone().max(BigInt::zero())
    }

    pub fn reversed_bending_points(&self, j: usize) -> BigInt {
        (-&self.bending[j - 1]).max(BigInt::zero())
    }

    pub fn left_hairpins(&self, j: usize) -> BigInt {
        (-&self.hairpins[j - 1]).max(BigInt::zero())
    }

    pub fn right_hairpins(&self, j: usize) -> BigInt {
        self.hairpins[j - 1].clone().max(BigInt::zero())
    }

    /// Smallest `j` with a bending point, if any.
    pub fn first_bending(&self) -> Option<usize> {
        self.bending.iter().position(|r| r.is_positive()).map(|i| i + 1)
    }
}

fn pos(x: BigInt) -> BigInt {
    if x.is_negative() {
        BigInt::zero()
    } else {
        x
    }
}

impl DynnikovCoords {
    /// The empty system on `n` punctures.
    pub fn empty(n: usize) -> Self {
        DynnikovCoords { a: vec![BigInt::zero(); n], b: vec![BigInt::zero(); n] }
    }

    pub fn new(a: Vec<BigInt>, b: Vec<BigInt>) -> Result<Self, CurveError> {
        if a.len() != b.len() || a.len() < 2 {
            return Err(CurveError::BadLength { expected: 2 * a.len().max(2), got: a.len() + b.len() });
        }
        if !a[0].is_zero() || !a[a.len() - 1].is_zero() {
            return Err(CurveError::BoundaryNonzero);
        }
        Ok(DynnikovCoords { a, b })
    }

    /// From the interleaved vector `(a_0, b_0, …, a_{n-1}, b_{n-1})`.
    pub fn from_interleaved(values: &[BigInt]) -> Result<Self, CurveError> {
        if values.len() % 2 != 0 || values.len() < 4 {
            return Err(CurveError::BadLength { expected: values.len() + values.len() % 2, got: values.len() });
        }
        let a = values.iter().step_by(2).cloned().collect();
        let b = values.iter().skip(1).step_by(2).cloned().collect();
        Self::new(a, b)
    }

    pub fn from_i64(values: &[i64]) -> Result<Self, CurveError> {
        Self::from_interleaved(&values.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>())
    }

    /// Parses `"a0,b0,a1,b1,…"`.
    pub fn parse(text: &str) -> Result<Self, CurveError> {
        let values = text
            .split(',')
            .map(str::trim)
            .map(|t| t.parse::<BigInt>().map_err(|_| ParseError::BadToken(t.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_interleaved(&values)
    }

    /// Reduced coordinates from the `3n - 3` edge intersection counts
    /// `x_0, …, x_{3n-4}` of the standard triangulation.
    pub fn reduce(x: &[BigInt], n: usize) -> Result<Self, CurveError> {
        if n < 2 || x.len() != 3 * n - 3 {
            return Err(CurveError::BadLength { expected: (3 * n).saturating_sub(3), got: x.len() });
        }
        if x.iter().any(Signed::is_negative) {
            return Err(CurveError::NegativeCount);
        }
        let half = |i: usize, j: usize| -> Result<BigInt, CurveError> {
            let d = &x[i] - &x[j];
            if (&d % 2u32).is_zero() {
                Ok(d / 2)
            } else {
                Err(CurveError::OddDifference { i, j })
            }
        };
        let mut c = Self::empty(n);
        c.b[0] = -&x[0];
        c.b[n - 1] = x[3 * n - 4].clone();
        for i in 1..n - 1 {
            c.a[i] = half(3 * i - 1, 3 * i)?;
            c.b[i] = half(3 * i - 2, 3 * i + 1)?;
        }
        Ok(c)
    }

    pub fn reduce_u64(x: &[u64], n: usize) -> Result<Self, CurveError> {
        Self::reduce(&x.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>(), n)
    }

    /// The system of round curves, `[p, q]` enclosing punctures `p..=q`
    /// (one-based). Coordinates add over curves: each contributes a left
    /// hairpin at `p` and a right hairpin at `q`.
    pub fn round_system(intervals: &[(usize, usize)], n: usize) -> Result<Self, CurveError> {
        for (i, &(p, q)) in intervals.iter().enumerate() {
            if p == 0 || q > n || q <= p || (p == 1 && q == n) {
                return Err(CurveError::DegenerateCurve { p, q, n });
            }
            for &(r, s) in &intervals[..i] {
                if (r, s) == (p, q) {
                    return Err(CurveError::DuplicateCurve { p, q });
                }
                let disjoint = q < r || s < p;
                let nested = (r <= p && q <= s) || (p <= r && s <= q);
                if !disjoint && !nested {
                    return Err(CurveError::CrossingIntervals(r, s, p, q));
                }
            }
        }
        let mut c = Self::empty(n);
        for &(p, q) in intervals {
            c.b[p - 1] -= 1;
            c.b[q - 1] += 1;
        }
        Ok(c)
    }

    /// Parses the shorthand `"p-q,p-q,…"`.
    pub fn parse_round(text: &str, n: usize) -> Result<Self, CurveError> {
        let intervals = text
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                let bad = || ParseError::BadToken(t.to_string());
                let (p, q) = t.split_once('-').ok_or_else(bad)?;
                Ok((p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?))
            })
            .collect::<Result<Vec<_>, ParseError>>()?;
        Self::round_system(&intervals, n)
    }

    pub fn punctures(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[BigInt] {
        &self.a
    }

    pub fn b(&self) -> &[BigInt] {
        &self.b
    }

    pub fn interleaved(&self) -> Vec<BigInt> {
        self.a.iter().zip(&self.b).flat_map(|(a, b)| [a.clone(), b.clone()]).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.a.iter().chain(&self.b).all(Zero::is_zero)
    }

    fn negate_a(&mut self) {
        for a in self.a.iter_mut() {
            *a = -&*a;
        }
    }

    /// `c^{σ_k^{-1}}`, changing only indices `k-1` and `k`.
    fn apply_inverse_generator(&mut self, k: usize) {
        let (i, j) = (k - 1, k);
        let delta = &self.a[j] - &self.a[i];
        let dp = pos(delta);
        let ai = &self.a[i] + pos(&dp + &self.b[i]);
        let aj = &self.a[j] - pos(&dp - &self.b[j]);
        let neg_delta2 = pos(&ai - &aj);
        self.b[i] = &self.b[i] - &neg_delta2 + &dp;
        self.b[j] = &self.b[j] + &neg_delta2 - &dp;
        self.a[i] = ai;
        self.a[j] = aj;
    }

    fn apply_letter(&mut self, letter: i32) {
        let k = letter.unsigned_abs() as usize;
        if letter < 0 {
            self.apply_inverse_generator(k);
        } else {
            self.negate_a();
            self.apply_inverse_generator(k);
            self.negate_a();
        }
    }

    fn check_word(&self, word: &[i32]) -> Result<(), CurveError> {
        let n = self.punctures();
        match word.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize >= n) {
            Some(&l) => Err(CurveError::BadIndex { letter: l as i64, n }),
            None => Ok(()),
        }
    }

    /// `c^w`, applying the letters of `w` from left to right.
    pub fn apply_braid(&self, word: &[i32]) -> Result<Self, CurveError> {
        self.check_word(word)?;
        let mut c = self.clone();
        for &l in word {
            c.apply_letter(l);
        }
        Ok(c)
    }

    pub fn census(&self) -> Census {
        let n = self.punctures();
        Census {
            bending: (1..n).map(|j| &self.a[j - 1] - &self.a[j]).collect(),
            hairpins: self.b.clone(),
        }
    }

    /// Standard (every curve round) iff all `a_i` vanish.
    pub fn is_standard(&self) -> bool {
        self.a.iter().all(Zero::is_zero)
    }

    /// `ℓ(S) = Σ|a_{i-1} - a_i| + Σ|b_j|`, the number of intersections with
    /// the real axis.
    pub fn curve_length(&self) -> BigInt {
        let bends: BigInt = self.a.windows(2).map(|w| (&w[0] - &w[1]).abs()).sum();
        bends + self.b.iter().map(Signed::abs).sum::<BigInt>()
    }

    /// `Σ(2|a_i| + |b_i|)`, an upper bound for the curve length.
    pub fn coordinate_weight(&self) -> BigInt {
        self.a.iter().zip(&self.b).map(|(a, b)| a.abs() * 2 + b.abs()).sum()
    }

    /// Bound `½ Σ(2|a_i| + |b_i|)(n-1)²` on the length of the minimal
    /// standardizer.
    pub fn standardizer_bound(&self) -> BigInt {
        let n1 = BigInt::from(self.punctures() - 1);
        self.coordinate_weight() * &n1 * &n1 / 2
    }

    /// The minimal positive standardizer: repeatedly apply `σ_j` at the
    /// leftmost bending point until none is left.
    pub fn standardize(&self) -> Result<Word, CurveError> {
        let bound = self.standardizer_bound();
        let mut c = self.clone();
        let mut beta = Word::new();
        let mut j = 1;
        let n = self.punctures();
        while j < n {
            if c.a[j] < c.a[j - 1] {
                if BigInt::from(beta.len()) > bound {
                    return Err(CurveError::NotACurveSystem);
                }
                c.apply_letter(j as i32);
                beta.push(j as i32);
                j = 1;
            } else {
                j += 1;
            }
        }
        Ok(beta)
    }

    /// The spiral with `k` twists on `n = 2t + 1` punctures: the round curve
    /// around `t+1..n` acted on by `s(0,t,n-1)^{-k}`.
    pub fn spiral(k: usize, n: usize) -> Result<Self, CurveError> {
        if n < 3 || n % 2 == 0 {
            return Err(CurveError::BadN(n));
        }
        let t = (n - 1) / 2;
        let alpha_inv = crate::atoms::inverse_word(&spiral_twist(n)?);
        let mut c = Self::round_system(&[(t + 1, n)], n)?;
        for _ in 0..k {
            c = c.apply_braid(&alpha_inv)?;
        }
        Ok(c)
    }
}

/// `α = s(0, t, n-1)` for `n = 2t + 1`.
pub fn spiral_twist(n: usize) -> Result<Word, CurveError> {
    if n < 3 || n % 2 == 0 {
        return Err(CurveError::BadN(n));
    }
    let t = (n - 1) / 2;
    braid::s_braid(0, t, n - 1, n).map_err(|_| CurveError::BadN(n))
}

impl fmt::Display for DynnikovCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.interleaved().iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Convenience for tests and callers holding small integers.
pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}
