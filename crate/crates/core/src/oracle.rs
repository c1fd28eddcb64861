//! Brute-force referees: breadth-first search over the positive monoid,
//! stratified by atom length and deduplicated by normal form.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::hash::Hash;

use thiserror::Error;

use crate::atoms::AtomSet;
use crate::curves::{CurveError, DynnikovCoords};
use crate::garside::{ArtinGroup, GarsideElement};
use crate::parabolic::{c_of_presentation, central_element, standard_target, ParabolicError, ParabolicPresentation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("budget limits must be positive")]
    InvalidBudget,
    #[error("curve on {punctures} punctures does not match a group of rank {rank}")]
    RankMismatch { punctures: usize, rank: usize },
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Parabolic(#[from] ParabolicError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_length: usize,
    pub max_nodes: usize,
}

impl EnumerationBudget {
    pub fn new(max_length: usize, max_nodes: usize) -> Result<Self, OracleError> {
        if max_length == 0 || max_nodes == 0 {
            return Err(OracleError::InvalidBudget);
        }
        Ok(EnumerationBudget { max_length, max_nodes })
    }
}

/// Positive elements of each atom length `0..=max_length`, each stratum
/// sorted.
pub fn enumerate_positive(group: &ArtinGroup, budget: EnumerationBudget) -> Result<Vec<Vec<GarsideElement>>, OracleError> {
    let tree = PositiveMonoid::build(group, budget)?;
    Ok((0..=budget.max_length).map(|k| tree.stratum(k).to_vec()).collect())
}

/// Closed-form stratum sizes of the positive monoid from its growth series
/// `1 / Σ_{T ⊆ S} (-1)^{|T|} t^{ℓ(w0_T)}`.
pub fn positive_growth(group: &ArtinGroup, max_length: usize) -> Vec<i128> {
    let rank = group.rank();
    let mut denom = vec![0i128; max_length + 1];
    for bits in 0..(1u64 << rank) {
        let t = AtomSet::from_bits(bits);
        let len = group.table().length(group.table().parabolic_longest(t)).unwrap();
        if len <= max_length {
            denom[len] += if t.len() % 2 == 0 { 1 } else { -1 };
        }
    }
    let mut series = vec![0i128; max_length + 1];
    series[0] = 1;
    for k in 1..=max_length {
        series[k] = -(1..=k).map(|j| denom[j] * series[k - j]).sum::<i128>();
    }
    series
}

/// The unique shortest qualifying element, with the number of qualifying
/// elements found at that length (1 whenever minimality holds).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleMinimum {
    pub element: GarsideElement,
    pub ties: usize,
}

/// The positive monoid up to a given atom length, as a breadth-first tree:
/// every element records one parent and the atom leading to it, so payloads
/// such as curve coordinates can be pushed along the tree edge by edge.
pub struct PositiveMonoid {
    group: ArtinGroup,
    elements: Vec<GarsideElement>,
    parent: Vec<(usize, usize)>,
    starts: Vec<usize>,
}

impl PositiveMonoid {
    pub fn build(group: &ArtinGroup, budget: EnumerationBudget) -> Result<Self, OracleError> {
        let mut elements = vec![group.identity()];
        let mut parent = vec![(0, 0)];
        let mut starts = vec![0, 1];
        let atoms: Vec<GarsideElement> = (0..group.rank()).map(|s| group.atom_element(s)).collect();
        for _ in 0..budget.max_length {
            let (lo, hi) = (starts[starts.len() - 2], starts[starts.len() - 1]);
            let mut next: BTreeMap<GarsideElement, (usize, usize)> = BTreeMap::new();
            for i in lo..hi {
                for (s, atom) in atoms.iter().enumerate() {
                    let y = group.multiply(&elements[i], atom).expect("same group");
                    next.entry(y).or_insert((i, s));
                }
            }
            if elements.len() + next.len() > budget.max_nodes {
                return Err(OracleError::BudgetExceeded(format!("more than {} elements", budget.max_nodes)));
            }
            for (y, edge) in next {
                elements.push(y);
                parent.push(edge);
            }
            starts.push(elements.len());
        }
        Ok(PositiveMonoid { group: group.clone(), elements, parent, starts })
    }

    pub fn max_length(&self) -> usize {
        self.starts.len() - 2
    }

    /// Elements of atom length `k`, sorted.
    pub fn stratum(&self, k: usize) -> &[GarsideElement] {
        &self.elements[self.starts[k]..self.starts[k + 1]]
    }

    fn curve_walk(&self, c: &DynnikovCoords, mut visit: impl FnMut(usize, &DynnikovCoords) -> bool) -> Result<(), OracleError> {
        if c.punctures() != self.group.rank() + 1 {
            return Err(OracleError::RankMismatch { punctures: c.punctures(), rank: self.group.rank() });
        }
        let mut coords: Vec<DynnikovCoords> = Vec::with_capacity(self.elements.len());
        for (i, &(p, s)) in self.parent.iter().enumerate() {
            let d = if i == 0 { c.clone() } else { coords[p].apply_braid(&[s as i32 + 1])? };
            if !visit(i, &d) {
                return Ok(());
            }
            coords.push(d);
        }
        Ok(())
    }

    fn length_of(&self, i: usize) -> usize {
        self.starts.partition_point(|&s| s <= i) - 1
    }

    /// Shortest positive braid carrying `c` to a standard system.
    pub fn min_curve_standardizer(&self, c: &DynnikovCoords) -> Result<OracleMinimum, OracleError> {
        let mut hits: Vec<usize> = Vec::new();
        self.curve_walk(c, |i, d| {
            if hits.first().is_some_and(|&h| self.length_of(h) < self.length_of(i)) {
                return false;
            }
            if d.is_standard() {
                hits.push(i);
            }
            true
        })?;
        self.minimum(hits)
    }

    /// Every positive standardizer of `c` in the tree.
    pub fn curve_standardizers(&self, c: &DynnikovCoords) -> Result<Vec<GarsideElement>, OracleError> {
        let mut found = Vec::new();
        self.curve_walk(c, |i, d| {
            if d.is_standard() {
                found.push(self.elements[i].clone());
            }
            true
        })?;
        Ok(found)
    }

    /// Shortest positive `ρ` with `ρ⁻¹ c_P ρ = c_Y` for some `Y`.
    pub fn min_parabolic_standardizer(&self, p: &ParabolicPresentation) -> Result<(OracleMinimum, AtomSet), OracleError> {
        let c = c_of_presentation(&self.group, p)?;
        for k in 0..=self.max_length() {
            let mut hits = Vec::new();
            for i in self.starts[k]..self.starts[k + 1] {
                if let Some(y) = standard_target(&self.group, &c, &self.elements[i])? {
                    hits.push((i, y));
                }
            }
            if let Some(&(_, y)) = hits.first() {
                let min = self.minimum(hits.iter().map(|h| h.0).collect())?;
                return Ok((min, y));
            }
        }
        Err(self.exhausted())
    }

    /// Every positive standardizer of `P` in the tree.
    pub fn parabolic_standardizers(&self, p: &ParabolicPresentation) -> Result<Vec<GarsideElement>, OracleError> {
        let c = c_of_presentation(&self.group, p)?;
        let mut found = Vec::new();
        for x in &self.elements {
            if standard_target(&self.group, &c, x)?.is_some() {
                found.push(x.clone());
            }
        }
        Ok(found)
    }

    fn minimum(&self, hits: Vec<usize>) -> Result<OracleMinimum, OracleError> {
        match hits.first() {
            Some(&i) => Ok(OracleMinimum { element: self.elements[i].clone(), ties: hits.len() }),
            None => Err(self.exhausted()),
        }
    }

    fn exhausted(&self) -> OracleError {
        OracleError::BudgetExceeded(format!("no standardizer of length <= {}", self.max_length()))
    }
}

/// Breadth-first search over the states `start · u` for positive `u`, layered
/// by atom length. A state first met at length `k` is not expanded again at
/// a greater length: every continuation from it was already available `k`
/// steps in, so no shortest qualifying word passes through it twice. Once the
/// shortest length is known, the positive elements spelled along surviving
/// paths are collected (deduplicated by normal form).
fn shortest_by_state<S: Clone + Eq + Hash>(
    group: &ArtinGroup,
    start: S,
    budget: EnumerationBudget,
    mut step: impl FnMut(&S, usize) -> Result<S, OracleError>,
    mut done: impl FnMut(&S) -> Result<bool, OracleError>,
) -> Result<(OracleMinimum, S), OracleError> {
    let mut seen: HashSet<S> = HashSet::new();
    seen.insert(start.clone());
    let mut layers: Vec<Vec<S>> = vec![vec![start]];
    let mut edges: Vec<Vec<(usize, usize, usize)>> = Vec::new();
    let mut total = 1usize;
    let hits: Vec<usize> = loop {
        let current = layers.last().expect("nonempty");
        let mut hits = Vec::new();
        for (i, s) in current.iter().enumerate() {
            if done(s)? {
                hits.push(i);
            }
        }
        if !hits.is_empty() {
            break hits;
        }
        if layers.len() > budget.max_length {
            return Err(OracleError::BudgetExceeded(format!("no standardizer of length <= {}", budget.max_length)));
        }
        let mut next: Vec<S> = Vec::new();
        let mut index: HashMap<S, usize> = HashMap::new();
        let mut layer_edges = Vec::new();
        for (i, s) in current.iter().enumerate() {
            for a in 0..group.rank() {
                let t = step(s, a)?;
                let j = match index.get(&t) {
                    Some(&j) => j,
                    None if seen.contains(&t) => continue,
                    None => {
                        index.insert(t.clone(), next.len());
                        seen.insert(t.clone());
                        next.push(t);
                        next.len() - 1
                    }
                };
                layer_edges.push((i, a, j));
            }
        }
        total += next.len();
        if total > budget.max_nodes {
            return Err(OracleError::BudgetExceeded(format!("more than {} states", budget.max_nodes)));
        }
        layers.push(next);
        edges.push(layer_edges);
    };

    let depth = edges.len();
    let mut good: Vec<Vec<bool>> = layers.iter().map(|l| vec![false; l.len()]).collect();
    for &h in &hits {
        good[depth][h] = true;
    }
    for k in (0..depth).rev() {
        for &(i, _, j) in &edges[k] {
            if good[k + 1][j] {
                good[k][i] = true;
            }
        }
    }
    let mut reach: Vec<BTreeSet<GarsideElement>> = vec![BTreeSet::from([group.identity()])];
    for k in 0..depth {
        let mut next = vec![BTreeSet::new(); layers[k + 1].len()];
        for &(i, a, j) in &edges[k] {
            if good[k][i] && good[k + 1][j] {
                for x in &reach[i] {
                    next[j].insert(group.multiply(x, &group.atom_element(a)).expect("same group"));
                }
            }
        }
        reach = next;
    }
    let mut found: BTreeMap<GarsideElement, usize> = BTreeMap::new();
    for &h in &hits {
        for x in &reach[h] {
            found.entry(x.clone()).or_insert(h);
        }
    }
    let ties = found.len();
    let (element, h) = found.into_iter().next().expect("a surviving path");
    Ok((OracleMinimum { element, ties }, layers[depth][h].clone()))
}

/// Shortest positive braid carrying `c` to a standard system.
pub fn brute_min_standardizer_curve(
    group: &ArtinGroup,
    c: &DynnikovCoords,
    budget: EnumerationBudget,
) -> Result<OracleMinimum, OracleError> {
    if c.punctures() != group.rank() + 1 {
        return Err(OracleError::RankMismatch { punctures: c.punctures(), rank: group.rank() });
    }
    let (min, _) = shortest_by_state(
        group,
        c.clone(),
        budget,
        |d, a| Ok(d.apply_braid(&[a as i32 + 1])?),
        |d| Ok(d.is_standard()),
    )?;
    Ok(min)
}

/// Shortest positive `ρ` with `ρ⁻¹ c_P ρ = c_Y` for some `Y`, and that `Y`.
pub fn brute_min_standardizer_parabolic(
    group: &ArtinGroup,
    p: &ParabolicPresentation,
    budget: EnumerationBudget,
) -> Result<(OracleMinimum, AtomSet), OracleError> {
    let c = c_of_presentation(group, p)?;
    let atoms: Vec<GarsideElement> = (0..group.rank()).map(|s| group.atom_element(s)).collect();
    let (min, _) = shortest_by_state(
        group,
        c.clone(),
        budget,
        |x, a| Ok(group.conjugate(x, &atoms[a]).expect("same group")),
        |x| Ok(x.is_positive() && central_element(group, group.support(x)).value == *x),
    )?;
    let y = standard_target(group, &c, &min.element)?.ok_or(ParabolicError::InternalInconsistency)?;
    Ok((min, y))
}
