//! Cycling, decycling, cyclic sliding and rigidity.

use std::collections::HashMap;

use super::{ArtinGroup, GarsideElement, Simple};

impl ArtinGroup {
    /// `ι(x) = τ^{-k}(x_1)`, so that `x = ι(x) Δ^k x_2 ⋯ x_r`. Trivial when
    /// `r = 0`.
    pub fn initial_factor(&self, x: &GarsideElement) -> Simple {
        self.simple(x.factors.first().map_or(0, |&f| self.tau_pow_idx(f, -x.delta_power)))
    }

    /// `φ(x) = x_r`. Trivial when `r = 0`.
    pub fn final_factor(&self, x: &GarsideElement) -> Simple {
        self.simple(x.factors.last().copied().unwrap_or(0))
    }

    /// `𝐜(x) = ι(x)⁻¹ x ι(x)`; `x` itself when `r = 0`.
    pub fn cycling(&self, x: &GarsideElement) -> GarsideElement {
        let i = self.from_simple(self.initial_factor(x));
        self.conj(x, &i)
    }

    /// `𝐝(x) = φ(x) x φ(x)⁻¹`; `x` itself when `r = 0`.
    pub fn decycling(&self, x: &GarsideElement) -> GarsideElement {
        let f = self.from_simple(self.final_factor(x));
        self.mul(&self.mul(&f, x), &self.invert(&f))
    }

    /// `𝔭(x) = ι(x) ∧ ι(x⁻¹)`.
    pub fn preferred_prefix(&self, x: &GarsideElement) -> Simple {
        let a = self.initial_factor(x).idx();
        let b = self.initial_factor(&self.invert(x)).idx();
        self.simple(self.meet_prefix_idx(a, b))
    }

    /// `(𝔭(x), 𝔰(x))` with `𝔰(x) = 𝔭(x)⁻¹ x 𝔭(x)`.
    pub fn cyclic_sliding(&self, x: &GarsideElement) -> (Simple, GarsideElement) {
        let p = self.preferred_prefix(x);
        let slid = self.conj(x, &self.from_simple(p));
        (p, slid)
    }

    /// Iterates cyclic sliding until an element repeats and returns the
    /// periodic orbit reached, starting from its first visited element.
    pub fn sliding_circuit(&self, x: &GarsideElement) -> Vec<GarsideElement> {
        let mut seen: HashMap<GarsideElement, usize> = HashMap::new();
        let mut trail = Vec::new();
        let mut current = x.clone();
        loop {
            if let Some(&start) = seen.get(&current) {
                return trail.split_off(start);
            }
            seen.insert(current.clone(), trail.len());
            trail.push(current.clone());
            current = self.cyclic_sliding(&current).1;
        }
    }

    /// `r = 0`, or `φ(x) ι(x)` is left-weighted: `∂(φ(x)) ∧ ι(x) = 1`.
    pub fn is_rigid(&self, x: &GarsideElement) -> bool {
        if x.factors.is_empty() {
            return true;
        }
        let phi = self.final_factor(x).idx();
        let iota = self.initial_factor(x).idx();
        self.meet_prefix_idx(self.rc(phi), iota) == 0
    }
}
