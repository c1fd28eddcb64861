//! Parabolic subgroups `P = α A_X α⁻¹`, their central elements and minimal
//! standardizers.

use std::collections::{HashSet, VecDeque};

use thiserror::Error;

use crate::atoms::{parse_word, AtomSet};
use crate::garside::{ArtinGroup, GarsideElement, GarsideError, Order};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParabolicError {
    #[error("atom {0} out of range")]
    BadAtom(usize),
    #[error("conjugate of c_P by its pn denominator is not of the form c_Y")]
    InternalInconsistency,
    #[error("positive conjugate with support {0} is not a central element c_Y")]
    NotClosed(AtomSet),
    #[error(transparent)]
    Garside(#[from] GarsideError),
}

/// `(X, α)`, presenting `α A_X α⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicPresentation {
    pub x: AtomSet,
    pub alpha: GarsideElement,
}

impl ParabolicPresentation {
    pub fn new(x: AtomSet, alpha: GarsideElement) -> Self {
        ParabolicPresentation { x, alpha }
    }

    /// The standard parabolic subgroup `A_X`.
    pub fn standard(group: &ArtinGroup, x: AtomSet) -> Self {
        ParabolicPresentation { x, alpha: group.identity() }
    }

    /// From a subset `"1,3"` and a signed word `"2 -1"`.
    pub fn parse(group: &ArtinGroup, subset: &str, alpha: &str) -> Result<Self, ParabolicError> {
        let x = AtomSet::parse(subset, group.rank()).map_err(GarsideError::from)?;
        let word = parse_word(alpha, Some(group.rank())).map_err(GarsideError::from)?;
        Ok(ParabolicPresentation { x, alpha: group.normalize(&word)? })
    }
}

/// `c_X = Δ_X^e` with `e ∈ {1, 2}` minimal such that it is central in `A_X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralElement {
    pub base: AtomSet,
    pub e: u8,
    pub value: GarsideElement,
}

fn check_subset(group: &ArtinGroup, x: AtomSet) -> Result<(), ParabolicError> {
    match x.iter().find(|&s| s >= group.rank()) {
        Some(s) => Err(ParabolicError::BadAtom(s + 1)),
        None => Ok(()),
    }
}

pub fn central_element(group: &ArtinGroup, x: AtomSet) -> CentralElement {
    let t = group.table();
    let w0 = t.parabolic_longest(x);
    // conjugation by Δ_X acts on the atoms of X as w0_X does on reflections
    let fixes = x.iter().all(|s| {
        let g = t.generator(s);
        t.multiply(t.multiply(w0, g).unwrap(), w0).unwrap() == g
    });
    let e = if fixes { 1 } else { 2 };
    let d = group.from_simple(group.delta_of(x));
    let value = if e == 1 { d } else { group.multiply(&d, &d).unwrap() };
    CentralElement { base: x, e, value }
}

/// `c_P = α c_X α⁻¹`.
pub fn c_of_presentation(group: &ArtinGroup, p: &ParabolicPresentation) -> Result<GarsideElement, ParabolicError> {
    check_subset(group, p.x)?;
    let c = central_element(group, p.x).value;
    let ac = group.multiply(&p.alpha, &c)?;
    Ok(group.multiply(&ac, &group.invert(&p.alpha))?)
}

/// If `u⁻¹ c u` equals some `c_Y`, returns `Y`.
pub fn standard_target(group: &ArtinGroup, c: &GarsideElement, u: &GarsideElement) -> Result<Option<AtomSet>, ParabolicError> {
    let conj = group.conjugate(c, u)?;
    if !conj.is_positive() {
        return Ok(None);
    }
    let y = group.support(&conj);
    Ok((central_element(group, y).value == conj).then_some(y))
}

/// Minimal positive standardizer from the pn-normal form `c_P = a b⁻¹`:
/// returns `b` and the `Y` with `b⁻¹ c_P b = c_Y`.
pub fn minimal_standardizer(group: &ArtinGroup, p: &ParabolicPresentation) -> Result<(GarsideElement, AtomSet), ParabolicError> {
    let c = c_of_presentation(group, p)?;
    let (_, b) = group.pn_normal_form(&c);
    let y = standard_target(group, &c, &b)?.ok_or(ParabolicError::InternalInconsistency)?;
    Ok((b, y))
}

/// `r_{X,t} = Δ_{X∪{t}} Δ_X⁻¹` and the `Y` with `r X r⁻¹ = Y`.
pub fn ribbon(group: &ArtinGroup, x: AtomSet, t: usize) -> Result<(GarsideElement, AtomSet), ParabolicError> {
    check_subset(group, x.with(t))?;
    if x.contains(t) {
        return Ok((group.identity(), x));
    }
    let table = group.table();
    let big = table.parabolic_longest(x.with(t));
    let small = table.parabolic_longest(x);
    let r = table.multiply(big, small).unwrap();
    let r = group.from_simple(group.simple_from_element(r)?);
    let y = AtomSet::from_indices(x.iter().map(|s| {
        let g = table.generator(s);
        let image = table.multiply(table.multiply(big, g).unwrap(), big).unwrap();
        (0..group.rank()).find(|&u| table.generator(u) == image).expect("w0 permutes its simple reflections")
    }));
    Ok((r, y))
}

/// The constructive route: make `α` positive with a central `Δ^{2m}`, then
/// repeatedly cancel the smallest common atom suffix `t` of `α c_X` and `α`,
/// removing a ribbon when `t ∉ X` and the letter `t` otherwise.
pub fn strip_standardizer(group: &ArtinGroup, p: &ParabolicPresentation) -> Result<(GarsideElement, AtomSet), ParabolicError> {
    check_subset(group, p.x)?;
    group.check(&p.alpha)?;
    let m = ((-p.alpha.inf()).max(0) + 1) / 2;
    let mut alpha = group.multiply(&group.delta_power(2 * m), &p.alpha)?;
    let mut x = p.x;
    loop {
        let c = central_element(group, x).value;
        let ac = group.multiply(&alpha, &c)?;
        let Some(t) = (0..group.rank()).find(|&t| group.atom_is_suffix(t, &alpha) && group.atom_is_suffix(t, &ac)) else {
            return Ok((alpha, x));
        };
        if x.contains(t) {
            alpha = group.multiply(&alpha, &group.invert(&group.atom_element(t)))?;
        } else {
            let (r, y) = ribbon(group, x, t)?;
            alpha = group.multiply(&alpha, &group.invert(&r))?;
            x = y;
        }
    }
}

/// Supports `Y` of all positive conjugates of `c_X`, found by conjugating
/// with simples; every conjugate found must itself be a `c_Y`. Sorted by
/// label sequence.
pub fn positive_conjugates(group: &ArtinGroup, x: AtomSet) -> Result<Vec<AtomSet>, ParabolicError> {
    check_subset(group, x)?;
    let start = central_element(group, x).value;
    let simples: Vec<GarsideElement> = group
        .table()
        .elements()
        .skip(1)
        .map(|w| group.from_simple(group.simple_from_element(w).unwrap()))
        .collect();
    let mut seen: HashSet<GarsideElement> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut found = vec![x];
    while let Some(z) = queue.pop_front() {
        for s in &simples {
            let w = group.conjugate(&z, s)?;
            if !w.is_positive() || seen.contains(&w) {
                continue;
            }
            let y = group.support(&w);
            if central_element(group, y).value != w {
                return Err(ParabolicError::NotClosed(y));
            }
            found.push(y);
            seen.insert(w.clone());
            queue.push_back(w);
        }
    }
    found.sort_by_key(|s| s.to_labels());
    found.dedup();
    Ok(found)
}

/// Whether two presentations describe the same subgroup.
pub fn equal_parabolic(group: &ArtinGroup, p: &ParabolicPresentation, q: &ParabolicPresentation) -> Result<bool, ParabolicError> {
    Ok(c_of_presentation(group, p)? == c_of_presentation(group, q)?)
}

/// `b ≼ u` check used by minimality tests: `b⁻¹u` positive.
pub fn is_prefix(group: &ArtinGroup, b: &GarsideElement, u: &GarsideElement) -> Result<bool, ParabolicError> {
    Ok(group.divides(b, u, Order::Prefix)?)
}
