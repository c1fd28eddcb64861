//! Left normal forms, products, inversion, right normal forms and the
//! `pn`/`np` splittings.

use super::{ArtinGroup, GarsideElement, GarsideError, Simple};

/// `x_1 ⋯ x_r Δ^k` with every pair `x_i x_{i+1}` right-weighted
/// (`x_i ∧^↰ ∂⁻¹(x_{i+1}) = 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightNormalForm {
    pub factors: Vec<Simple>,
    pub delta_power: i64,
}

impl ArtinGroup {
    /// Right-multiplies `x` by the simple with index `y`, restoring the left
    /// normal form with one right-to-left sweep.
    pub(crate) fn push_simple(&self, x: &mut GarsideElement, y: u32) {
        let t = self.table();
        if y == 0 {
            return;
        }
        if y == self.w0() {
            // x Δ = Δ τ(x)
            self.shift_delta(x, 1);
            return;
        }
        let f = &mut x.factors;
        f.push(y);
        let mut i = f.len() - 1;
        while i > 0 {
            let (a, b) = (f[i - 1], f[i]);
            let m = self.meet_prefix_idx(self.rc(a), b);
            if m == 0 {
                break;
            }
            f[i - 1] = t.mul_idx(a, m);
            f[i] = t.mul_idx(t.inv_idx(m), b);
            i -= 1;
        }
        let w0 = self.w0();
        let leading = f.iter().take_while(|&&a| a == w0).count();
        if leading > 0 {
            f.drain(..leading);
            x.delta_power += leading as i64;
        }
        while f.last() == Some(&0) {
            f.pop();
        }
    }

    /// Right-multiplies by `Δ^m`: `x Δ^m = Δ^m τ^m(x)`.
    pub(crate) fn shift_delta(&self, x: &mut GarsideElement, m: i64) {
        x.delta_power += m;
        if m.rem_euclid(2) == 1 {
            for f in x.factors.iter_mut() {
                *f = self.tau_pow_idx(*f, 1);
            }
        }
    }

    /// Left normal form of the group element spelled by a signed word
    /// (one-based atoms, negative letters are inverses).
    pub fn normalize(&self, word: &[i32]) -> Result<GarsideElement, GarsideError> {
        let rank = self.rank();
        let mut x = self.identity();
        for &letter in word {
            let s = letter.unsigned_abs() as usize;
            if letter == 0 || s > rank {
                return Err(GarsideError::BadIndex { letter: letter as i64, rank });
            }
            let atom = self.table().gen_idx(s - 1);
            if letter > 0 {
                self.push_simple(&mut x, atom);
            } else {
                // σ⁻¹ = Δ⁻¹ ∂⁻¹(σ)
                self.shift_delta(&mut x, -1);
                self.push_simple(&mut x, self.lc(atom));
            }
        }
        Ok(x)
    }

    pub fn multiply(&self, x: &GarsideElement, y: &GarsideElement) -> Result<GarsideElement, GarsideError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul(x, y))
    }

    pub(crate) fn mul(&self, x: &GarsideElement, y: &GarsideElement) -> GarsideElement {
        let mut z = x.clone();
        self.shift_delta(&mut z, y.delta_power);
        for &f in &y.factors {
            self.push_simple(&mut z, f);
        }
        z
    }

    /// Product of several elements, left to right.
    pub fn product<'a, I>(&self, items: I) -> Result<GarsideElement, GarsideError>
    where
        I: IntoIterator<Item = &'a GarsideElement>,
    {
        let mut acc = self.identity();
        for x in items {
            self.check(x)?;
            acc = self.mul(&acc, x);
        }
        Ok(acc)
    }

    /// Inverse in left normal form, written down directly:
    /// `x⁻¹ = Δ^{-(k+r)} ∂^{-2(k+r-1)-1}(x_r) ⋯ ∂^{-2k-1}(x_1)`.
    pub fn invert(&self, x: &GarsideElement) -> GarsideElement {
        let k = x.delta_power;
        let r = x.factors.len() as i64;
        let factors = x
            .factors
            .iter()
            .enumerate()
            .rev()
            .map(|(i, &f)| self.complement_pow_idx(f, -2 * (k + i as i64) - 1))
            .collect();
        GarsideElement { group: x.group, delta_power: -(k + r), factors }
    }

    /// Conjugation by `Δ^m`: `Δ^{-m} x Δ^m`.
    pub fn tau(&self, x: &GarsideElement, m: i64) -> GarsideElement {
        GarsideElement {
            group: x.group,
            delta_power: x.delta_power,
            factors: x.factors.iter().map(|&f| self.tau_pow_idx(f, m)).collect(),
        }
    }

    /// `y⁻¹ x y`.
    pub fn conjugate(&self, x: &GarsideElement, y: &GarsideElement) -> Result<GarsideElement, GarsideError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.conj(x, y))
    }

    pub(crate) fn conj(&self, x: &GarsideElement, y: &GarsideElement) -> GarsideElement {
        self.mul(&self.mul(&self.invert(y), x), y)
    }

    /// The anti-automorphism fixing every atom (reverses positive words).
    pub fn reverse(&self, x: &GarsideElement) -> GarsideElement {
        let t = self.table();
        let mut z = self.identity();
        for &f in x.factors.iter().rev() {
            self.push_simple(&mut z, t.inv_idx(f));
        }
        self.shift_delta(&mut z, x.delta_power);
        z
    }

    /// Right normal form, obtained by mirroring: the left normal form of the
    /// reversed element, read backwards.
    pub fn right_normal_form(&self, x: &GarsideElement) -> RightNormalForm {
        let t = self.table();
        let k = x.delta_power;
        // Δ^k y = τ^{-k}(y) Δ^k
        let mut mirrored = self.identity();
        for &f in x.factors.iter().rev() {
            self.push_simple(&mut mirrored, t.inv_idx(self.tau_pow_idx(f, -k)));
        }
        RightNormalForm {
            factors: mirrored.factors.iter().rev().map(|&z| self.simple(t.inv_idx(z))).collect(),
            delta_power: mirrored.delta_power + k,
        }
    }

    pub fn from_right_normal_form(&self, nf: &RightNormalForm) -> GarsideElement {
        let mut x = self.from_simples(&nf.factors);
        self.shift_delta(&mut x, nf.delta_power);
        x
    }

    /// Checks the right-weighting condition on every consecutive pair.
    pub fn is_right_normal(&self, nf: &RightNormalForm) -> bool {
        let (w0, e) = (self.w0(), 0);
        nf.factors.iter().all(|s| s.idx() != w0 && s.idx() != e)
            && nf
                .factors
                .windows(2)
                .all(|p| self.meet_suffix_idx(p[0].idx(), self.lc(p[1].idx())) == 0)
    }

    /// Inverse of a right normal form `x_1 ⋯ x_r Δ^k`:
    /// `∂^{2k+1}(x_r) ∂^{2(k+1)+1}(x_{r-1}) ⋯ ∂^{2(k+r-1)+1}(x_1) Δ^{-(k+r)}`.
    pub fn invert_right_normal_form(&self, nf: &RightNormalForm) -> RightNormalForm {
        let k = nf.delta_power;
        let r = nf.factors.len() as i64;
        let factors = nf
            .factors
            .iter()
            .enumerate()
            .rev()
            .map(|(i, s)| self.simple(self.complement_pow_idx(s.idx(), 2 * (k + r - 1 - i as i64) + 1)))
            .collect();
        RightNormalForm { factors, delta_power: -(k + r) }
    }

    /// `x = a b⁻¹` with `a, b` positive and `a ∧^↰ b = 1`, split off the right
    /// normal form `x_1 ⋯ x_r Δ^{-p}` at position `r - p`.
    pub fn pn_normal_form(&self, x: &GarsideElement) -> (GarsideElement, GarsideElement) {
        if x.inf() >= 0 {
            return (x.clone(), self.identity());
        }
        if x.sup() <= 0 {
            return (self.identity(), self.invert(x));
        }
        let nf = self.right_normal_form(x);
        let p = (-nf.delta_power) as usize;
        let split = nf.factors.len() - p;
        let a = self.from_simples(&nf.factors[..split]);
        let mut tail = self.from_simples(&nf.factors[split..]);
        self.shift_delta(&mut tail, nf.delta_power);
        (a, self.invert(&tail))
    }

    /// `x = a⁻¹ b` with `a, b` positive and `a ∧ b = 1`, split off the left
    /// normal form `Δ^{-p} x_1 ⋯ x_r` after `x_p`.
    pub fn np_normal_form(&self, x: &GarsideElement) -> (GarsideElement, GarsideElement) {
        if x.inf() >= 0 {
            return (self.identity(), x.clone());
        }
        if x.sup() <= 0 {
            return (self.invert(x), self.identity());
        }
        let p = (-x.delta_power) as usize;
        let head = GarsideElement { group: x.group, delta_power: x.delta_power, factors: x.factors[..p].to_vec() };
        let b = GarsideElement { group: x.group, delta_power: 0, factors: x.factors[p..].to_vec() };
        (self.invert(&head), b)
    }

    /// Checks the left normal form invariants of a stored element.
    pub fn is_left_normal(&self, x: &GarsideElement) -> bool {
        let w0 = self.w0();
        x.factors.iter().all(|&f| f != 0 && f != w0)
            && x.factors.windows(2).all(|p| self.meet_prefix_idx(self.rc(p[0]), p[1]) == 0)
    }
}
