//! The Garside structure of a spherical Artin–Tits group.
//!
//! Simple elements are stored by their image in the Coxeter group; prefix
//! divisibility of simples is length-additivity in `W`. A [`GarsideElement`]
//! is the left normal form `Δ^k x_1 ⋯ x_r`.

mod conjugacy;
mod lattice;
mod normal_form;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::atoms::{AtomSet, ParseError, Word};
use crate::coxeter::{CoxeterElement, CoxeterError, CoxeterMatrix, CoxeterTable, Side, TableId};

pub use normal_form::RightNormalForm;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GarsideError {
    #[error("letter {letter} is not an atom of a rank {rank} group")]
    BadIndex { letter: i64, rank: usize },
    #[error("elements belong to different groups")]
    GroupMismatch,
    #[error("element is not positive")]
    NotPositive,
    #[error("word {0:?} is not a reduced word of a simple element")]
    NotSimple(Vec<usize>),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Divisibility order used by lattice operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Order {
    /// `a ≼ b` iff `a⁻¹b` is positive.
    Prefix,
    /// `b ≽ a` iff `ba⁻¹` is positive.
    Suffix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LatticeOp {
    Meet,
    Join,
}

/// A simple element, i.e. a divisor of `Δ`, identified with its image in `W`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simple(CoxeterElement);

impl Simple {
    pub fn element(self) -> CoxeterElement {
        self.0
    }

    fn idx(self) -> u32 {
        self.0.index() as u32
    }
}

/// `Δ^k x_1 ⋯ x_r` in left normal form: no factor is `1` or `Δ` and every
/// consecutive pair satisfies `∂(x_i) ∧ x_{i+1} = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GarsideElement {
    group: TableId,
    delta_power: i64,
    factors: Vec<u32>,
}

impl GarsideElement {
    pub fn group_id(&self) -> TableId {
        self.group
    }

    /// `inf(x) = k`.
    pub fn inf(&self) -> i64 {
        self.delta_power
    }

    /// `sup(x) = k + r`.
    pub fn sup(&self) -> i64 {
        self.delta_power + self.factors.len() as i64
    }

    /// Canonical length `r`.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.delta_power >= 0
    }
}

/// `(inf, sup, canonical length)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Stats {
    pub inf: i64,
    pub sup: i64,
    pub length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct ElementDoc {
    inf: i64,
    factors: Vec<Vec<usize>>,
}

/// An Artin–Tits group of spherical type with its classical Garside
/// structure. Cheap to clone; the Coxeter table is shared.
#[derive(Clone)]
pub struct ArtinGroup {
    inner: Arc<Inner>,
}

struct Inner {
    table: CoxeterTable,
    // ∂(a) = a⁻¹Δ, ∂⁻¹(a) = Δa⁻¹, τ(a) = Δ⁻¹aΔ, indexed by element
    right_complement: Vec<u32>,
    left_complement: Vec<u32>,
    tau: Vec<u32>,
}

impl fmt::Debug for ArtinGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ArtinGroup").field("table", &self.inner.table).finish()
    }
}

impl ArtinGroup {
    pub fn new(table: CoxeterTable) -> Self {
        let order = table.order();
        let w0 = table.longest_idx();
        let right_complement: Vec<u32> = (0..order as u32).map(|w| table.mul_idx(table.inv_idx(w), w0)).collect();
        let tau: Vec<u32> = (0..order).map(|w| right_complement[right_complement[w] as usize]).collect();
        let left_complement: Vec<u32> = (0..order).map(|w| right_complement[tau[w] as usize]).collect();
        ArtinGroup { inner: Arc::new(Inner { table, right_complement, left_complement, tau }) }
    }

    pub fn from_matrix(matrix: &CoxeterMatrix) -> Result<Self, CoxeterError> {
        Ok(Self::new(CoxeterTable::build(matrix)?))
    }

    /// Convenience constructor from a named type such as `"A3"` or `"I2(5)"`.
    pub fn named(name: &str) -> Result<Self, CoxeterError> {
        Self::from_matrix(&CoxeterMatrix::named(name)?)
    }

    pub fn table(&self) -> &CoxeterTable {
        &self.inner.table
    }

    pub fn id(&self) -> TableId {
        self.inner.table.id()
    }

    pub fn rank(&self) -> usize {
        self.inner.table.rank()
    }

    pub fn atoms(&self) -> AtomSet {
        AtomSet::full(self.rank())
    }

    /// Whether `Δ` itself is central, i.e. `τ` is trivial.
    pub fn delta_is_central(&self) -> bool {
        (0..self.rank()).all(|s| self.table().longest_conjugate(s) == s)
    }

    // ---- simples ----

    fn simple(&self, idx: u32) -> Simple {
        Simple(self.table().wrap(idx))
    }

    pub fn simple_from_element(&self, w: CoxeterElement) -> Result<Simple, GarsideError> {
        if w.table() != self.id() {
            return Err(GarsideError::GroupMismatch);
        }
        Ok(Simple(w))
    }

    /// The simple element spelled by a reduced positive word (zero-based).
    pub fn simple_from_word(&self, word: &[usize]) -> Result<Simple, GarsideError> {
        if let Some(&s) = word.iter().find(|&&s| s >= self.rank()) {
            return Err(GarsideError::BadIndex { letter: s as i64 + 1, rank: self.rank() });
        }
        let w = self.table().element_from_word(word);
        if self.table().length(w)? != word.len() {
            return Err(GarsideError::NotSimple(word.to_vec()));
        }
        Ok(Simple(w))
    }

    pub fn atom(&self, s: usize) -> Simple {
        self.simple(self.table().gen_idx(s))
    }

    pub fn delta(&self) -> Simple {
        self.simple(self.table().longest_idx())
    }

    pub fn trivial_simple(&self) -> Simple {
        self.simple(0)
    }

    fn check_simple(&self, a: Simple) -> Result<u32, GarsideError> {
        if a.0.table() == self.id() {
            Ok(a.idx())
        } else {
            Err(GarsideError::GroupMismatch)
        }
    }

    /// Shortlex-minimal reduced word of a simple (zero-based atoms).
    pub fn simple_word(&self, a: Simple) -> Vec<usize> {
        self.table().word_idx(a.idx())
    }

    /// `Δ_X`, the lcm of the atoms in `X`.
    pub fn delta_of(&self, subset: AtomSet) -> Simple {
        self.simple(self.table().parabolic_longest_idx(subset))
    }

    /// `∂(a) = a⁻¹Δ` (`Side::Right`) or `∂⁻¹(a) = Δa⁻¹` (`Side::Left`).
    pub fn complement(&self, a: Simple, side: Side) -> Simple {
        let i = a.idx() as usize;
        self.simple(match side {
            Side::Right => self.inner.right_complement[i],
            Side::Left => self.inner.left_complement[i],
        })
    }

    /// `∂^m(a)` for any integer `m`, using `∂² = τ`.
    pub fn complement_power(&self, a: Simple, m: i64) -> Simple {
        self.simple(self.complement_pow_idx(a.idx(), m))
    }

    /// `τ^m(a)`.
    pub fn tau_simple(&self, a: Simple, m: i64) -> Simple {
        self.simple(self.tau_pow_idx(a.idx(), m))
    }

    /// Lattice operations in `[1, Δ]`.
    pub fn simple_meet_join(&self, a: Simple, b: Simple, order: Order, op: LatticeOp) -> Result<Simple, GarsideError> {
        let (a, b) = (self.check_simple(a)?, self.check_simple(b)?);
        Ok(self.simple(match (order, op) {
            (Order::Prefix, LatticeOp::Meet) => self.meet_prefix_idx(a, b),
            (Order::Suffix, LatticeOp::Meet) => self.meet_suffix_idx(a, b),
            (Order::Prefix, LatticeOp::Join) => self.join_prefix_idx(a, b),
            (Order::Suffix, LatticeOp::Join) => self.join_suffix_idx(a, b),
        }))
    }

    /// `a ≼ b` for simples: `ℓ(a) + ℓ(a⁻¹b) = ℓ(b)`.
    pub fn simple_divides(&self, a: Simple, b: Simple, order: Order) -> bool {
        let t = self.table();
        let (a, b) = (a.idx(), b.idx());
        let quotient = match order {
            Order::Prefix => t.mul_idx(t.inv_idx(a), b),
            Order::Suffix => t.mul_idx(b, t.inv_idx(a)),
        };
        t.len_idx(a) + t.len_idx(quotient) == t.len_idx(b)
    }

    pub(crate) fn tau_pow_idx(&self, a: u32, m: i64) -> u32 {
        // τ has order at most two on simples: conjugation by w0 is an involution of W
        if m.rem_euclid(2) == 0 {
            a
        } else {
            self.inner.tau[a as usize]
        }
    }

    pub(crate) fn complement_pow_idx(&self, a: u32, m: i64) -> u32 {
        let q = m.div_euclid(2);
        let t = self.tau_pow_idx(a, q);
        if m.rem_euclid(2) == 1 {
            self.inner.right_complement[t as usize]
        } else {
            t
        }
    }

    pub(crate) fn rc(&self, a: u32) -> u32 {
        self.inner.right_complement[a as usize]
    }

    pub(crate) fn lc(&self, a: u32) -> u32 {
        self.inner.left_complement[a as usize]
    }

    pub(crate) fn w0(&self) -> u32 {
        self.table().longest_idx()
    }

    // ---- elements ----

    pub fn identity(&self) -> GarsideElement {
        GarsideElement { group: self.id(), delta_power: 0, factors: Vec::new() }
    }

    /// `Δ^k`.
    pub fn delta_power(&self, k: i64) -> GarsideElement {
        GarsideElement { group: self.id(), delta_power: k, factors: Vec::new() }
    }

    pub fn from_simple(&self, a: Simple) -> GarsideElement {
        let mut x = self.identity();
        self.push_simple(&mut x, a.idx());
        x
    }

    /// Product of a sequence of simples.
    pub fn from_simples(&self, simples: &[Simple]) -> GarsideElement {
        let mut x = self.identity();
        for s in simples {
            self.push_simple(&mut x, s.idx());
        }
        x
    }

    pub fn atom_element(&self, s: usize) -> GarsideElement {
        self.from_simple(self.atom(s))
    }

    /// Factors of the left normal form.
    pub fn factors(&self, x: &GarsideElement) -> Vec<Simple> {
        x.factors.iter().map(|&f| self.simple(f)).collect()
    }

    pub fn stats(&self, x: &GarsideElement) -> Stats {
        Stats { inf: x.inf(), sup: x.sup(), length: x.canonical_length() }
    }

    pub(crate) fn check(&self, x: &GarsideElement) -> Result<(), GarsideError> {
        if x.group == self.id() {
            Ok(())
        } else {
            Err(GarsideError::GroupMismatch)
        }
    }

    /// Set of atoms occurring in the normal form (all atoms if `inf > 0`).
    pub fn support(&self, x: &GarsideElement) -> AtomSet {
        let base = if x.delta_power != 0 { self.atoms() } else { AtomSet::EMPTY };
        x.factors.iter().fold(base, |acc, &f| acc.union(self.table().support_idx(f)))
    }

    /// Signed word (one-based) spelling the normal form: `Δ^k` first, then
    /// the shortlex word of each factor.
    pub fn to_word(&self, x: &GarsideElement) -> Word {
        let delta_word: Vec<i32> = self.table().word_idx(self.w0()).iter().map(|&s| s as i32 + 1).collect();
        let mut word = Vec::new();
        if x.delta_power >= 0 {
            for _ in 0..x.delta_power {
                word.extend_from_slice(&delta_word);
            }
        } else {
            let inverse = crate::atoms::inverse_word(&delta_word);
            for _ in 0..-x.delta_power {
                word.extend_from_slice(&inverse);
            }
        }
        for &f in &x.factors {
            word.extend(self.table().word_idx(f).iter().map(|&s| s as i32 + 1));
        }
        word
    }

    /// Human-readable form: `D^k` followed by bracketed factor words.
    pub fn display(&self, x: &GarsideElement) -> String {
        let mut out = format!("D^{}", x.delta_power);
        for &f in &x.factors {
            let word: Vec<String> = self.table().word_idx(f).iter().map(|s| (s + 1).to_string()).collect();
            out.push_str(&format!(" [{}]", word.join(" ")));
        }
        out
    }

    /// `{"inf": k, "factors": [[atoms...], ...]}` with one-based atoms.
    pub fn to_json(&self, x: &GarsideElement) -> serde_json::Value {
        let doc = ElementDoc {
            inf: x.delta_power,
            factors: x.factors.iter().map(|&f| self.table().word_idx(f).iter().map(|s| s + 1).collect()).collect(),
        };
        serde_json::to_value(doc).expect("element documents serialize")
    }

    pub fn from_json(&self, value: &serde_json::Value) -> Result<GarsideElement, GarsideError> {
        let doc: ElementDoc = serde_json::from_value(value.clone())
            .map_err(|e| ParseError::Malformed(format!("bad element document: {e}")))?;
        let mut x = self.delta_power(doc.inf);
        for factor in doc.factors {
            if factor.iter().any(|&s| s == 0 || s > self.rank()) {
                return Err(GarsideError::BadIndex { letter: 0, rank: self.rank() });
            }
            let zero_based: Vec<usize> = factor.iter().map(|s| s - 1).collect();
            let a = self.simple_from_word(&zero_based)?;
            self.push_simple(&mut x, a.idx());
        }
        Ok(x)
    }
}
