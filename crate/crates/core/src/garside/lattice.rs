//! Lattice operations: meets and joins of simples (by descents in `W`) and
//! of arbitrary group elements (by head recursion and mirroring).

use super::{ArtinGroup, GarsideElement, GarsideError, LatticeOp, Order};
use crate::coxeter::Side;

impl ArtinGroup {
    /// Greatest common prefix of two simples: peel common left descents.
    pub(crate) fn meet_prefix_idx(&self, mut u: u32, mut v: u32) -> u32 {
        let t = self.table();
        let mut m = 0;
        loop {
            let common = t.descents_idx(u, Side::Left).intersection(t.descents_idx(v, Side::Left));
            let Some(s) = common.first() else { return m };
            m = t.right_mul(m, s);
            u = t.left_mul(u, s);
            v = t.left_mul(v, s);
        }
    }

    pub(crate) fn meet_suffix_idx(&self, mut u: u32, mut v: u32) -> u32 {
        let t = self.table();
        let mut m = 0;
        loop {
            let common = t.descents_idx(u, Side::Right).intersection(t.descents_idx(v, Side::Right));
            let Some(s) = common.first() else { return m };
            m = t.left_mul(m, s);
            u = t.right_mul(u, s);
            v = t.right_mul(v, s);
        }
    }

    /// `a ∨ b = ∂⁻¹(∂a ∧^↰ ∂b)`: `∂` reverses prefix order into suffix order.
    pub(crate) fn join_prefix_idx(&self, a: u32, b: u32) -> u32 {
        self.lc(self.meet_suffix_idx(self.rc(a), self.rc(b)))
    }

    pub(crate) fn join_suffix_idx(&self, a: u32, b: u32) -> u32 {
        self.rc(self.meet_prefix_idx(self.lc(a), self.lc(b)))
    }

    /// `Δ ∧ x` for positive `x`.
    fn head_idx(&self, x: &GarsideElement) -> u32 {
        if x.delta_power > 0 {
            self.w0()
        } else {
            x.factors.first().copied().unwrap_or(0)
        }
    }

    /// Left division by a simple: `s⁻¹x`.
    fn strip_prefix(&self, x: &GarsideElement, s: u32) -> GarsideElement {
        let mut inv = self.identity();
        self.shift_delta(&mut inv, -1);
        self.push_simple(&mut inv, self.lc(s));
        self.mul(&inv, x)
    }

    /// gcd of positive elements: `s = ι(x) ∧ ι(y)`, then recurse on
    /// `s⁻¹x, s⁻¹y`.
    fn positive_gcd(&self, x: &GarsideElement, y: &GarsideElement) -> GarsideElement {
        let (mut x, mut y) = (x.clone(), y.clone());
        let mut acc = self.identity();
        loop {
            let s = self.meet_prefix_idx(self.head_idx(&x), self.head_idx(&y));
            if s == 0 {
                return acc;
            }
            self.push_simple(&mut acc, s);
            x = self.strip_prefix(&x, s);
            y = self.strip_prefix(&y, s);
        }
    }

    /// Prefix gcd of arbitrary elements: shift both by a common `Δ^m` into
    /// the positive monoid, where left multiplication by `Δ` is a lattice
    /// automorphism.
    fn prefix_meet(&self, x: &GarsideElement, y: &GarsideElement) -> GarsideElement {
        let m = x.delta_power.min(y.delta_power);
        let shift = |g: &GarsideElement| GarsideElement { delta_power: g.delta_power - m, ..g.clone() };
        let mut g = self.positive_gcd(&shift(x), &shift(y));
        g.delta_power += m;
        g
    }

    fn suffix_meet(&self, x: &GarsideElement, y: &GarsideElement) -> GarsideElement {
        self.reverse(&self.prefix_meet(&self.reverse(x), &self.reverse(y)))
    }

    /// Meet in the given divisibility order, for arbitrary elements.
    pub fn meet(&self, x: &GarsideElement, y: &GarsideElement, order: Order) -> Result<GarsideElement, GarsideError> {
        self.check(x)?;
        self.check(y)?;
        Ok(match order {
            Order::Prefix => self.prefix_meet(x, y),
            Order::Suffix => self.suffix_meet(x, y),
        })
    }

    /// Join in the given divisibility order: `x ∨ y = (x⁻¹ ∧^↰ y⁻¹)⁻¹` and
    /// `x ∨^↰ y = (x⁻¹ ∧ y⁻¹)⁻¹`.
    pub fn join(&self, x: &GarsideElement, y: &GarsideElement, order: Order) -> Result<GarsideElement, GarsideError> {
        self.check(x)?;
        self.check(y)?;
        let (xi, yi) = (self.invert(x), self.invert(y));
        Ok(self.invert(&match order {
            Order::Prefix => self.suffix_meet(&xi, &yi),
            Order::Suffix => self.prefix_meet(&xi, &yi),
        }))
    }

    /// Lattice operation restricted to the positive monoid.
    pub fn positive_meet_join(
        &self,
        x: &GarsideElement,
        y: &GarsideElement,
        order: Order,
        op: LatticeOp,
    ) -> Result<GarsideElement, GarsideError> {
        if !x.is_positive() || !y.is_positive() {
            return Err(GarsideError::NotPositive);
        }
        match op {
            LatticeOp::Meet => self.meet(x, y, order),
            LatticeOp::Join => self.join(x, y, order),
        }
    }

    /// `a ≼ b` (`Order::Prefix`, `a⁻¹b` positive) or `b ≽ a`
    /// (`Order::Suffix`, `ba⁻¹` positive).
    pub fn divides(&self, a: &GarsideElement, b: &GarsideElement, order: Order) -> Result<bool, GarsideError> {
        self.check(a)?;
        self.check(b)?;
        let quotient = match order {
            Order::Prefix => self.mul(&self.invert(a), b),
            Order::Suffix => self.mul(b, &self.invert(a)),
        };
        Ok(quotient.is_positive())
    }

    /// Whether the atom `s` left-divides `x`.
    pub fn atom_is_prefix(&self, s: usize, x: &GarsideElement) -> bool {
        if x.delta_power > 0 {
            return true;
        }
        if x.delta_power < 0 {
            return self.divides(&self.atom_element(s), x, Order::Prefix).unwrap_or(false);
        }
        x.factors.first().is_some_and(|&f| self.table().descents_idx(f, Side::Left).contains(s))
    }

    /// Whether the atom `s` right-divides `x`.
    pub fn atom_is_suffix(&self, s: usize, x: &GarsideElement) -> bool {
        self.atom_is_prefix(s, &self.reverse(x))
    }
}
