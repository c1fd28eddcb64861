//! Finite Coxeter groups: matrices, the finite-type classification and fully
//! enumerated multiplication tables.
//!
//! A [`CoxeterTable`] stores every element of `W` together with left and right
//! multiplication by generators, lengths, inverses and descent sets. Elements
//! are numbered breadth-first by length, so index 0 is the identity.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use thiserror::Error;

use crate::atoms::{AtomSet, ParseError, MAX_RANK};

/// Default bound on `|W|` accepted by [`CoxeterTable::build`].
pub const DEFAULT_CAP: usize = 1_200_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxeterError {
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("Coxeter group is not spherical (infinite)")]
    NotSpherical,
    #[error("group order {order} exceeds the table cap {cap}")]
    CapExceeded { order: u128, cap: usize },
    #[error("elements belong to different Coxeter tables")]
    TableMismatch,
    #[error("unknown group type {0:?}")]
    UnknownType(String),
    #[error("root system enumeration failed: {0}")]
    RootSystem(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Symmetric matrix `m[i][j]` with ones on the diagonal; `None` stands for an
/// infinite entry.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    rank: usize,
    entries: Vec<Option<u32>>,
}

impl CoxeterMatrix {
    /// Builds a matrix from rows, with `0` encoding `∞`.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self, CoxeterError> {
        let rank = rows.len();
        if rank == 0 {
            return Err(CoxeterError::InvalidMatrix("empty matrix".into()));
        }
        if rank > MAX_RANK {
            return Err(CoxeterError::InvalidMatrix(format!("rank {rank} exceeds {MAX_RANK}")));
        }
        let mut entries = Vec::with_capacity(rank * rank);
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, row)| row.len() != rank) {
            return Err(CoxeterError::InvalidMatrix(format!("row {i} has length {}", row.len())));
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                if i == j && m != 1 {
                    return Err(CoxeterError::InvalidMatrix(format!("diagonal entry ({i},{i}) is {m}")));
                }
                if i != j && m == 1 {
                    return Err(CoxeterError::InvalidMatrix(format!("off-diagonal entry ({i},{j}) is 1")));
                }
                if rows[j][i] != m {
                    return Err(CoxeterError::InvalidMatrix(format!("entries ({i},{j}) and ({j},{i}) differ")));
                }
                entries.push(if m == 0 { None } else { Some(m) });
            }
        }
        Ok(CoxeterMatrix { rank, entries })
    }

    /// Parses a JSON array of arrays of integers (`0` is `∞`).
    pub fn from_json(text: &str) -> Result<Self, CoxeterError> {
        let rows: Vec<Vec<u32>> = serde_json::from_str(text)
            .map_err(|e| CoxeterError::InvalidMatrix(format!("bad matrix document: {e}")))?;
        Self::from_rows(&rows)
    }

    /// Parses a named type: `A<n>`, `B<n>`, `D<n>`, `E6`, `E7`, `E8`, `F4`,
    /// `H3`, `H4` or `I2(<m>)`.
    pub fn named(name: &str) -> Result<Self, CoxeterError> {
        let unknown = || CoxeterError::UnknownType(name.to_string());
        let name = name.trim();
        if let Some(rest) = name.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            let m: u32 = match rest.trim() {
                "inf" | "∞" => 0,
                t => t.parse().map_err(|_| unknown())?,
            };
            if m == 1 {
                return Err(unknown());
            }
            return Self::from_rows(&[vec![1, m], vec![m, 1]]);
        }
        let (letter, digits) = name.split_at(name.chars().next().map_or(0, char::len_utf8));
        let n: usize = digits.parse().map_err(|_| unknown())?;
        let kind = match (letter, n) {
            ("A", n) if n >= 1 => CoxeterType::A(n),
            ("B", n) if n >= 2 => CoxeterType::B(n),
            ("D", n) if n >= 4 => CoxeterType::D(n),
            ("E", 6..=8) => CoxeterType::E(n),
            ("F", 4) => CoxeterType::F4,
            ("H", 3 | 4) => CoxeterType::H(n),
            _ => return Err(unknown()),
        };
        Ok(kind.matrix())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `m[i][j]`, or `None` when infinite.
    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        self.entries[i * self.rank + j]
    }

    /// Rows with `0` encoding `∞`.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.get(i, j).unwrap_or(0)).collect())
            .collect()
    }

    /// Coxeter-graph adjacency: an edge whenever `m ≥ 3` or `m = ∞`.
    fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.get(i, j).map_or(true, |m| m >= 3)
    }

    /// Connected components of the Coxeter graph, each sorted, ordered by
    /// smallest atom.
    pub fn components(&self) -> Vec<AtomSet> {
        let mut seen = AtomSet::EMPTY;
        let mut out = Vec::new();
        for start in 0..self.rank {
            if seen.contains(start) {
                continue;
            }
            let mut comp = AtomSet::singleton(start);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in 0..self.rank {
                    if !comp.contains(w) && self.adjacent(v, w) {
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    /// Restriction to the atoms of `subset`, in increasing order.
    pub fn restrict(&self, subset: AtomSet) -> CoxeterMatrix {
        let atoms: Vec<usize> = subset.iter().collect();
        let entries = atoms
            .iter()
            .flat_map(|&i| atoms.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.get(i, j))
            .collect();
        CoxeterMatrix { rank: atoms.len(), entries }
    }
}

impl fmt::Debug for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoxeterMatrix{:?}", self.rows())
    }
}

/// Irreducible finite Coxeter types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    I2(u32),
}

impl CoxeterType {
    pub fn rank(self) -> usize {
        match self {
            CoxeterType::A(n) | CoxeterType::B(n) | CoxeterType::D(n) | CoxeterType::E(n) | CoxeterType::H(n) => n,
            CoxeterType::F4 => 4,
            CoxeterType::I2(_) => 2,
        }
    }

    /// Standard matrix for this type (Bourbaki numbering for `D` and `E`; the
    /// multiple bond of `B`, `H` sits between atoms 1 and 2).
    pub fn matrix(self) -> CoxeterMatrix {
        let n = self.rank();
        let mut rows = vec![vec![2u32; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 1;
        }
        let mut bond = |i: usize, j: usize, m: u32| {
            rows[i][j] = m;
            rows[j][i] = m;
        };
        match self {
            CoxeterType::A(_) | CoxeterType::B(_) | CoxeterType::H(_) | CoxeterType::F4 => {
                for i in 0..n.saturating_sub(1) {
                    bond(i, i + 1, 3);
                }
                match self {
                    CoxeterType::B(_) => bond(0, 1, 4),
                    CoxeterType::H(_) => bond(0, 1, 5),
                    CoxeterType::F4 => bond(1, 2, 4),
                    _ => {}
                }
            }
            CoxeterType::D(_) => {
                for i in 0..n - 2 {
                    bond(i, i + 1, 3);
                }
                bond(n - 3, n - 1, 3);
            }
            CoxeterType::E(_) => {
                bond(0, 2, 3);
                bond(1, 3, 3);
                for i in 2..n - 1 {
                    bond(i, i + 1, 3);
                }
            }
            CoxeterType::I2(m) => bond(0, 1, m),
        }
        CoxeterMatrix::from_rows(&rows).expect("standard matrices are valid")
    }

    /// `|W|`.
    pub fn order(self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        match self {
            CoxeterType::A(n) => fact(n + 1),
            CoxeterType::B(n) => (1u128 << n) * fact(n),
            CoxeterType::D(n) => (1u128 << (n - 1)) * fact(n),
            CoxeterType::E(6) => 51_840,
            CoxeterType::E(7) => 2_903_040,
            CoxeterType::E(_) => 696_729_600,
            CoxeterType::F4 => 1152,
            CoxeterType::H(3) => 120,
            CoxeterType::H(_) => 14_400,
            CoxeterType::I2(m) => 2 * m as u128,
        }
    }

    /// Number of reflections, i.e. positive roots.
    pub fn reflections(self) -> u128 {
        match self {
            CoxeterType::A(n) => (n * (n + 1) / 2) as u128,
            CoxeterType::B(n) => (n * n) as u128,
            CoxeterType::D(n) => (n * (n - 1)) as u128,
            CoxeterType::E(6) => 36,
            CoxeterType::E(7) => 63,
            CoxeterType::E(_) => 120,
            CoxeterType::F4 => 24,
            CoxeterType::H(3) => 15,
            CoxeterType::H(_) => 60,
            CoxeterType::I2(m) => m as u128,
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::E(n) => write!(f, "E{n}"),
            CoxeterType::F4 => write!(f, "F4"),
            CoxeterType::H(n) => write!(f, "H{n}"),
            CoxeterType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// A connected component of the Coxeter graph and its finite type, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub atoms: AtomSet,
    pub kind: Option<CoxeterType>,
}

/// Classifies every connected component of the Coxeter graph.
pub fn classify(matrix: &CoxeterMatrix) -> Vec<Component> {
    matrix
        .components()
        .into_iter()
        .map(|atoms| Component { atoms, kind: classify_connected(matrix, atoms) })
        .collect()
}

/// Whether `W` is finite, with the partition of the atoms into components.
pub fn is_spherical(matrix: &CoxeterMatrix) -> (bool, Vec<AtomSet>) {
    let comps = classify(matrix);
    let finite = comps.iter().all(|c| c.kind.is_some());
    (finite, comps.into_iter().map(|c| c.atoms).collect())
}

fn classify_connected(matrix: &CoxeterMatrix, atoms: AtomSet) -> Option<CoxeterType> {
    let verts: Vec<usize> = atoms.iter().collect();
    let k = verts.len();
    let neighbours = |v: usize| -> Vec<usize> { verts.iter().copied().filter(|&w| matrix.adjacent(v, w)).collect() };
    let mut edges = 0;
    for (a, &v) in verts.iter().enumerate() {
        for &w in &verts[a + 1..] {
            if matrix.adjacent(v, w) {
                matrix.get(v, w)?;
                edges += 1;
            }
        }
    }
    if edges + 1 != k {
        return None;
    }
    let degree = |v: usize| neighbours(v).len();
    if verts.iter().any(|&v| degree(v) > 3) {
        return None;
    }
    let branch: Vec<usize> = verts.iter().copied().filter(|&v| degree(v) == 3).collect();
    if branch.len() > 1 {
        return None;
    }
    if let Some(&centre) = branch.first() {
        if verts.iter().any(|&v| verts.iter().any(|&w| matrix.adjacent(v, w) && matrix.get(v, w) != Some(3))) {
            return None;
        }
        let mut arms: Vec<usize> = neighbours(centre)
            .into_iter()
            .map(|start| {
                let (mut prev, mut cur, mut len) = (centre, start, 1);
                loop {
                    let next: Vec<usize> = neighbours(cur).into_iter().filter(|&w| w != prev).collect();
                    match next.as_slice() {
                        [w] => {
                            prev = cur;
                            cur = *w;
                            len += 1;
                        }
                        _ => break len,
                    }
                }
            })
            .collect();
        arms.sort_unstable();
        return match arms.as_slice() {
            [1, 1, _] => Some(CoxeterType::D(k)),
            [1, 2, r] if (2..=4).contains(r) => Some(CoxeterType::E(k)),
            _ => None,
        };
    }
    if k == 1 {
        return Some(CoxeterType::A(1));
    }
    // a path: walk it from one end
    let start = verts.iter().copied().find(|&v| degree(v) == 1)?;
    let mut order = vec![start];
    while order.len() < k {
        let cur = *order.last().unwrap();
        let next = neighbours(cur).into_iter().find(|w| !order.contains(w))?;
        order.push(next);
    }
    let labels: Vec<u32> = order.windows(2).map(|p| matrix.get(p[0], p[1]).unwrap()).collect();
    let big: Vec<(usize, u32)> = labels.iter().copied().enumerate().filter(|&(_, m)| m > 3).collect();
    match big.as_slice() {
        [] => Some(CoxeterType::A(k)),
        [(_, m)] if k == 2 => Some(if *m == 4 { CoxeterType::B(2) } else { CoxeterType::I2(*m) }),
        [(pos, 4)] if *pos == 0 || *pos == k - 2 => Some(CoxeterType::B(k)),
        [(1, 4)] if k == 4 => Some(CoxeterType::F4),
        [(pos, 5)] if (*pos == 0 || *pos == k - 2) && (k == 3 || k == 4) => Some(CoxeterType::H(k)),
        _ => None,
    }
}

/// Identifies the table that produced an element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TableId(u64);

static NEXT_TABLE_ID: AtomicU64 = AtomicU64::new(1);

/// Left or right, for descents and divisibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// An element of an enumerated Coxeter group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoxeterElement {
    table: TableId,
    index: u32,
}

impl CoxeterElement {
    pub fn index(self) -> usize {
        self.index as usize
    }

    pub fn table(self) -> TableId {
        self.table
    }
}

/// A fully enumerated finite Coxeter group. Immutable once built.
pub struct CoxeterTable {
    id: TableId,
    matrix: CoxeterMatrix,
    rank: usize,
    order: usize,
    // row-major `order × rank`
    left: Vec<u32>,
    right: Vec<u32>,
    inverse: Vec<u32>,
    lengths: Vec<u32>,
    left_desc: Vec<u64>,
    right_desc: Vec<u64>,
    // `w = gen[w] · parent[w]`, giving a reduced word by walking to the identity
    parent: Vec<u32>,
    parent_gen: Vec<u8>,
    longest: u32,
    longest_conj: Vec<usize>,
}

impl fmt::Debug for CoxeterTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterTable")
            .field("matrix", &self.matrix)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

impl CoxeterTable {
    /// Enumerates `W` with the default cap.
    pub fn build(matrix: &CoxeterMatrix) -> Result<Self, CoxeterError> {
        Self::build_with_cap(matrix, DEFAULT_CAP)
    }

    pub fn build_with_cap(matrix: &CoxeterMatrix, cap: usize) -> Result<Self, CoxeterError> {
        let comps = classify(matrix);
        let mut predicted: u128 = 1;
        let mut reflections: u128 = 0;
        for c in &comps {
            let kind = c.kind.ok_or(CoxeterError::NotSpherical)?;
            predicted = predicted.saturating_mul(kind.order());
            reflections += kind.reflections();
        }
        if predicted > cap as u128 {
            return Err(CoxeterError::CapExceeded { order: predicted, cap });
        }
        let rank = matrix.rank();
        let roots = RootSystem::new(matrix, reflections as usize)?;

        // Breadth-first closure; an element is keyed by the images of the
        // simple roots, and left multiplication by `s` applies `s` to them.
        let order = predicted as usize;
        let mut keys: HashMap<Vec<u32>, u32> = HashMap::with_capacity(order);
        let mut key_store: Vec<u32> = Vec::with_capacity(order * rank);
        let mut left = Vec::with_capacity(order * rank);
        let mut lengths = Vec::with_capacity(order);
        let mut parent = Vec::with_capacity(order);
        let mut parent_gen = Vec::with_capacity(order);
        let identity: Vec<u32> = (0..rank as u32).collect();
        keys.insert(identity.clone(), 0);
        key_store.extend_from_slice(&identity);
        lengths.push(0u32);
        parent.push(0u32);
        parent_gen.push(u8::MAX);
        let mut next = 0usize;
        while next < lengths.len() {
            for s in 0..rank {
                let key: Vec<u32> = key_store[next * rank..(next + 1) * rank]
                    .iter()
                    .map(|&r| roots.reflect[s][r as usize])
                    .collect();
                let idx = match keys.get(&key) {
                    Some(&idx) => idx,
                    None => {
                        let idx = lengths.len() as u32;
                        if lengths.len() >= cap {
                            return Err(CoxeterError::CapExceeded { order: predicted, cap });
                        }
                        key_store.extend_from_slice(&key);
                        keys.insert(key, idx);
                        lengths.push(lengths[next] + 1);
                        parent.push(next as u32);
                        parent_gen.push(s as u8);
                        idx
                    }
                };
                left.push(idx);
            }
            next += 1;
        }
        drop(keys);
        drop(key_store);
        if lengths.len() != order {
            return Err(CoxeterError::RootSystem(format!(
                "enumerated {} elements, expected {order}",
                lengths.len()
            )));
        }

        let mut inverse = vec![0u32; order];
        for w in 0..order {
            let mut x = 0u32;
            let mut cur = w;
            while cur != 0 {
                x = left[x as usize * rank + parent_gen[cur] as usize];
                cur = parent[cur] as usize;
            }
            inverse[w] = x;
        }
        let mut right = vec![0u32; order * rank];
        for w in 0..order {
            let wi = inverse[w] as usize;
            for s in 0..rank {
                right[w * rank + s] = inverse[left[wi * rank + s] as usize];
            }
        }
        let desc = |table: &[u32], w: usize| -> u64 {
            (0..rank).filter(|&s| lengths[table[w * rank + s] as usize] < lengths[w]).fold(0, |m, s| m | 1 << s)
        };
        let left_desc: Vec<u64> = (0..order).map(|w| desc(&left, w)).collect();
        let right_desc: Vec<u64> = (0..order).map(|w| desc(&right, w)).collect();
        let max_len = *lengths.iter().max().unwrap();
        let longest: Vec<usize> = (0..order).filter(|&w| lengths[w] == max_len).collect();
        if longest.len() != 1 {
            return Err(CoxeterError::RootSystem("longest element is not unique".into()));
        }
        let mut table = CoxeterTable {
            id: TableId(NEXT_TABLE_ID.fetch_add(1, Ordering::Relaxed)),
            matrix: matrix.clone(),
            rank,
            order,
            left,
            right,
            inverse,
            lengths,
            left_desc,
            right_desc,
            parent,
            parent_gen,
            longest: longest[0] as u32,
            longest_conj: Vec::new(),
        };
        let w0 = table.longest;
        table.longest_conj = (0..rank)
            .map(|s| {
                let c = table.mul_idx(table.mul_idx(w0, table.gen_idx(s)), w0);
                (0..rank).find(|&t| table.gen_idx(t) == c).expect("w0 conjugates generators to generators")
            })
            .collect();
        Ok(table)
    }

    pub fn id(&self) -> TableId {
        self.id
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `|W|`.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn element(&self, index: usize) -> CoxeterElement {
        assert!(index < self.order, "element index out of range");
        CoxeterElement { table: self.id, index: index as u32 }
    }

    pub fn elements(&self) -> impl Iterator<Item = CoxeterElement> + '_ {
        (0..self.order).map(|i| self.element(i))
    }

    pub fn identity(&self) -> CoxeterElement {
        self.element(0)
    }

    pub fn generator(&self, s: usize) -> CoxeterElement {
        self.element(self.gen_idx(s) as usize)
    }

    /// The longest element `w0`.
    pub fn longest(&self) -> CoxeterElement {
        self.element(self.longest as usize)
    }

    /// The generator `w0 s w0`.
    pub fn longest_conjugate(&self, s: usize) -> usize {
        self.longest_conj[s]
    }

    fn check(&self, u: CoxeterElement) -> Result<u32, CoxeterError> {
        if u.table == self.id {
            Ok(u.index)
        } else {
            Err(CoxeterError::TableMismatch)
        }
    }

    pub fn multiply(&self, u: CoxeterElement, v: CoxeterElement) -> Result<CoxeterElement, CoxeterError> {
        let (a, b) = (self.check(u)?, self.check(v)?);
        Ok(self.element(self.mul_idx(a, b) as usize))
    }

    pub fn invert(&self, u: CoxeterElement) -> Result<CoxeterElement, CoxeterError> {
        let a = self.check(u)?;
        Ok(self.element(self.inverse[a as usize] as usize))
    }

    pub fn length(&self, u: CoxeterElement) -> Result<usize, CoxeterError> {
        Ok(self.lengths[self.check(u)? as usize] as usize)
    }

    /// Length and the left (`{s : ℓ(su) < ℓ(u)}`) or right descent set.
    pub fn length_and_descents(&self, u: CoxeterElement, side: Side) -> Result<(usize, AtomSet), CoxeterError> {
        let a = self.check(u)?;
        Ok((self.len_idx(a) as usize, self.descents_idx(a, side)))
    }

    /// Longest element of the standard parabolic subgroup `W_X`.
    pub fn parabolic_longest(&self, subset: AtomSet) -> CoxeterElement {
        self.element(self.parabolic_longest_idx(subset) as usize)
    }

    /// The lexicographically smallest reduced word (zero-based generators).
    pub fn reduced_word(&self, u: CoxeterElement) -> Result<Vec<usize>, CoxeterError> {
        Ok(self.word_idx(self.check(u)?))
    }

    /// Set of generators occurring in a reduced word.
    pub fn support(&self, u: CoxeterElement) -> Result<AtomSet, CoxeterError> {
        Ok(self.support_idx(self.check(u)?))
    }

    /// Evaluates a word in the generators (zero-based).
    pub fn element_from_word(&self, word: &[usize]) -> CoxeterElement {
        let idx = word.iter().fold(0u32, |x, &s| self.right_mul(x, s));
        self.element(idx as usize)
    }

    // Index-level primitives used by the Garside engine.

    pub(crate) fn wrap(&self, index: u32) -> CoxeterElement {
        CoxeterElement { table: self.id, index }
    }

    pub(crate) fn gen_idx(&self, s: usize) -> u32 {
        self.left[s]
    }

    pub(crate) fn longest_idx(&self) -> u32 {
        self.longest
    }

    pub(crate) fn left_mul(&self, w: u32, s: usize) -> u32 {
        self.left[w as usize * self.rank + s]
    }

    pub(crate) fn right_mul(&self, w: u32, s: usize) -> u32 {
        self.right[w as usize * self.rank + s]
    }

    pub(crate) fn inv_idx(&self, w: u32) -> u32 {
        self.inverse[w as usize]
    }

    pub(crate) fn len_idx(&self, w: u32) -> u32 {
        self.lengths[w as usize]
    }

    pub(crate) fn descents_idx(&self, w: u32, side: Side) -> AtomSet {
        AtomSet::from_bits(match side {
            Side::Left => self.left_desc[w as usize],
            Side::Right => self.right_desc[w as usize],
        })
    }

    pub(crate) fn mul_idx(&self, u: u32, v: u32) -> u32 {
        let mut x = u;
        let mut cur = v as usize;
        while cur != 0 {
            x = self.right_mul(x, self.parent_gen[cur] as usize);
            cur = self.parent[cur] as usize;
        }
        x
    }

    pub(crate) fn word_idx(&self, w: u32) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.len_idx(w) as usize);
        let mut cur = w;
        while cur != 0 {
            let s = self.descents_idx(cur, Side::Left).first().unwrap();
            word.push(s);
            cur = self.left_mul(cur, s);
        }
        word
    }

    pub(crate) fn support_idx(&self, w: u32) -> AtomSet {
        let mut set = AtomSet::EMPTY;
        let mut cur = w as usize;
        while cur != 0 {
            set.insert(self.parent_gen[cur] as usize);
            cur = self.parent[cur] as usize;
        }
        set
    }

    pub(crate) fn parabolic_longest_idx(&self, subset: AtomSet) -> u32 {
        let mut w = 0u32;
        loop {
            let ascent = subset.intersection(AtomSet::from_bits(!self.right_desc[w as usize])).first();
            match ascent {
                Some(s) => w = self.right_mul(w, s),
                None => return w,
            }
        }
    }
}

/// Roots of the geometric representation, identified up to floating-point
/// tolerance and then used purely combinatorially.
struct RootSystem {
    // reflect[s][r] = index of s(r)
    reflect: Vec<Vec<u32>>,
}

impl RootSystem {
    const GRID: f64 = 1e-6;

    fn new(matrix: &CoxeterMatrix, positive: usize) -> Result<Self, CoxeterError> {
        let rank = matrix.rank();
        let form: Vec<Vec<f64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| match matrix.get(i, j) {
                        Some(1) => 1.0,
                        Some(m) => -(std::f64::consts::PI / m as f64).cos(),
                        None => -1.0,
                    })
                    .collect()
            })
            .collect();
        let mut roots: Vec<Vec<f64>> = (0..rank)
            .map(|i| (0..rank).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
            .collect();
        let mut index: HashMap<Vec<i64>, u32> = HashMap::new();
        for (i, r) in roots.iter().enumerate() {
            index.insert(Self::key(r), i as u32);
        }
        let mut reflect: Vec<Vec<u32>> = vec![Vec::new(); rank];
        let mut next = 0;
        while next < roots.len() {
            for s in 0..rank {
                let mut image = roots[next].clone();
                let pairing: f64 = (0..rank).map(|j| form[s][j] * image[j]).sum();
                image[s] -= 2.0 * pairing;
                let idx = match Self::lookup(&index, &image) {
                    Some(idx) => idx,
                    None => {
                        let idx = roots.len() as u32;
                        if roots.len() > 2 * positive {
                            return Err(CoxeterError::RootSystem("too many roots".into()));
                        }
                        index.insert(Self::key(&image), idx);
                        roots.push(image);
                        idx
                    }
                };
                reflect[s].push(idx);
            }
            next += 1;
        }
        if roots.len() != 2 * positive {
            return Err(CoxeterError::RootSystem(format!(
                "found {} roots, expected {}",
                roots.len(),
                2 * positive
            )));
        }
        // each reflection must be an involution on the roots
        for perm in &reflect {
            if (0..perm.len()).any(|r| perm[perm[r] as usize] as usize != r) {
                return Err(CoxeterError::RootSystem("reflection is not an involution".into()));
            }
        }
        Ok(RootSystem { reflect })
    }

    fn key(v: &[f64]) -> Vec<i64> {
        v.iter().map(|x| (x / Self::GRID).round() as i64).collect()
    }

    // Coordinates lying near a rounding boundary are tried both ways.
    fn lookup(index: &HashMap<Vec<i64>, u32>, v: &[f64]) -> Option<u32> {
        let base = Self::key(v);
        if let Some(&i) = index.get(&base) {
            return Some(i);
        }
        let ambiguous: Vec<usize> = (0..v.len())
            .filter(|&j| ((v[j] / Self::GRID).fract().abs() - 0.5).abs() < 1e-3)
            .collect();
        if ambiguous.is_empty() || ambiguous.len() > 8 {
            return None;
        }
        for mask in 1u32..(1 << ambiguous.len()) {
            let mut k = base.clone();
            for (bit, &j) in ambiguous.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    let scaled = v[j] / Self::GRID;
                    k[j] = if scaled.round() == scaled.floor() { scaled.ceil() } else { scaled.floor() } as i64;
                }
            }
            if let Some(&i) = index.get(&k) {
                return Some(i);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(name: &str) -> CoxeterTable {
        CoxeterTable::build(&CoxeterMatrix::named(name).unwrap()).unwrap()
    }

    #[test]
    fn classification_examples() {
        let (ok, comps) = is_spherical(&CoxeterMatrix::named("A3").unwrap());
        assert!(ok);
        assert_eq!(comps.len(), 1);
        let (ok, _) = is_spherical(&CoxeterMatrix::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap());
        assert!(!ok);
        let (ok, comps) = is_spherical(&CoxeterMatrix::from_rows(&[vec![1, 2], vec![2, 1]]).unwrap());
        assert!(ok);
        assert_eq!(comps, vec![AtomSet::singleton(0), AtomSet::singleton(1)]);
    }

    #[test]
    fn named_types_classify_as_themselves() {
        for name in ["A1", "A4", "B2", "B5", "D4", "D6", "E6", "E7", "E8", "F4", "H3", "H4", "I2(5)", "I2(7)"] {
            let m = CoxeterMatrix::named(name).unwrap();
            let comps = classify(&m);
            assert_eq!(comps.len(), 1, "{name}");
            let kind = comps[0].kind.unwrap();
            assert_eq!(kind.matrix(), m, "{name}");
        }
    }

    #[test]
    fn infinite_graphs_rejected() {
        // affine A2 (triangle), affine C2 (4,4), hyperbolic 3-5-... and a 5 in the middle of A4
        let cases: Vec<Vec<Vec<u32>>> = vec![
            vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]],
            vec![vec![1, 4, 2], vec![4, 1, 4], vec![2, 4, 1]],
            vec![vec![1, 5, 2, 2], vec![5, 1, 3, 2], vec![2, 3, 1, 5], vec![2, 2, 5, 1]],
            vec![vec![1, 3, 2, 2], vec![3, 1, 5, 2], vec![2, 5, 1, 3], vec![2, 2, 3, 1]],
            vec![vec![1, 6, 2], vec![6, 1, 3], vec![2, 3, 1]],
        ];
        for rows in cases {
            let m = CoxeterMatrix::from_rows(&rows).unwrap();
            assert!(!is_spherical(&m).0, "{rows:?}");
            assert_eq!(CoxeterTable::build(&m).unwrap_err(), CoxeterError::NotSpherical);
        }
    }

    #[test]
    fn invalid_matrices() {
        assert!(CoxeterMatrix::from_rows(&[vec![1, 3], vec![2, 1]]).is_err());
        assert!(CoxeterMatrix::from_rows(&[vec![2, 3], vec![3, 1]]).is_err());
        assert!(CoxeterMatrix::from_rows(&[vec![1, 1], vec![1, 1]]).is_err());
        assert!(CoxeterMatrix::named("Q7").is_err());
        assert!(CoxeterMatrix::named("D3").is_err());
        assert_eq!(CoxeterMatrix::from_json("[[1,0],[0,1]]").unwrap().get(0, 1), None);
    }

    #[test]
    fn classical_orders() {
        let cases = [
            ("A2", 6),
            ("A3", 24),
            ("A4", 120),
            ("B3", 48),
            ("B4", 384),
            ("D4", 192),
            ("I2(5)", 10),
            ("I2(8)", 16),
            ("H3", 120),
            ("F4", 1152),
            ("H4", 14400),
        ];
        for (name, order) in cases {
            assert_eq!(table(name).order(), order, "{name}");
        }
        let reducible = CoxeterMatrix::from_rows(&[vec![1, 3, 2], vec![3, 1, 2], vec![2, 2, 1]]).unwrap();
        assert_eq!(CoxeterTable::build(&reducible).unwrap().order(), 12);
    }

    #[test]
    fn cap_is_enforced() {
        let e8 = CoxeterMatrix::named("E8").unwrap();
        assert!(matches!(CoxeterTable::build(&e8), Err(CoxeterError::CapExceeded { .. })));
        let a3 = CoxeterMatrix::named("A3").unwrap();
        assert!(matches!(CoxeterTable::build_with_cap(&a3, 10), Err(CoxeterError::CapExceeded { .. })));
    }

    #[test]
    fn multiplication_examples() {
        let t = table("A2");
        let (s1, s2) = (t.generator(0), t.generator(1));
        let e = t.identity();
        assert_eq!(t.multiply(s1, e).unwrap(), s1);
        assert_eq!(t.multiply(s1, s1).unwrap(), e);
        let m = |a, b| t.multiply(a, b).unwrap();
        assert_eq!(m(m(s1, s2), s1), m(m(s2, s1), s2));
        assert_eq!(t.invert(m(s1, s2)).unwrap(), m(s2, s1));
        assert_eq!(t.invert(e).unwrap(), e);
        assert_eq!(t.invert(s2).unwrap(), s2);
        let other = table("A2");
        assert_eq!(t.multiply(s1, other.generator(0)), Err(CoxeterError::TableMismatch));
    }

    #[test]
    fn descent_examples() {
        let t = table("A2");
        assert_eq!(t.length_and_descents(t.identity(), Side::Left).unwrap(), (0, AtomSet::EMPTY));
        let w0 = t.longest();
        for side in [Side::Left, Side::Right] {
            assert_eq!(t.length_and_descents(w0, side).unwrap(), (3, AtomSet::full(2)));
        }
        let s2s1 = t.element_from_word(&[1, 0]);
        assert_eq!(t.length_and_descents(s2s1, Side::Right).unwrap(), (2, AtomSet::singleton(0)));
        assert_eq!(t.length_and_descents(s2s1, Side::Left).unwrap(), (2, AtomSet::singleton(1)));
    }

    #[test]
    fn parabolic_longest_examples() {
        let t = table("A3");
        assert_eq!(t.parabolic_longest(AtomSet::EMPTY), t.identity());
        assert_eq!(t.parabolic_longest(AtomSet::singleton(2)), t.generator(2));
        let w = t.parabolic_longest(AtomSet::from_indices([0, 1]));
        assert_eq!(w, t.element_from_word(&[0, 1, 0]));
        assert_eq!(t.length(w).unwrap(), 3);
        for side in [Side::Left, Side::Right] {
            assert_eq!(t.length_and_descents(w, side).unwrap().1, AtomSet::from_indices([0, 1]));
        }
    }

    #[test]
    fn table_invariants() {
        for name in ["A3", "B3", "H3", "I2(5)", "D4"] {
            let t = table(name);
            assert_eq!(t.length(t.identity()).unwrap(), 0);
            for u in t.elements() {
                let lu = t.length(u).unwrap() as i64;
                assert_eq!(t.length(t.invert(u).unwrap()).unwrap() as i64, lu);
                assert_eq!(t.multiply(u, t.invert(u).unwrap()).unwrap(), t.identity());
                for s in 0..t.rank() {
                    let us = t.multiply(u, t.generator(s)).unwrap();
                    assert_eq!((t.length(us).unwrap() as i64 - lu).abs(), 1);
                    assert_eq!(t.multiply(us, t.generator(s)).unwrap(), u);
                }
                let word = t.reduced_word(u).unwrap();
                assert_eq!(word.len() as i64, lu);
                assert_eq!(t.element_from_word(&word), u);
            }
            // w0 conjugation permutes the generators
            let mut image: Vec<usize> = (0..t.rank()).map(|s| t.longest_conjugate(s)).collect();
            image.sort_unstable();
            assert_eq!(image, (0..t.rank()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn associativity_on_samples() {
        let t = table("B3");
        let n = t.order();
        for i in 0..300 {
            let (a, b, c) = (t.element(i * 7 % n), t.element(i * 13 % n), t.element(i * 29 % n));
            let m = |x, y| t.multiply(x, y).unwrap();
            assert_eq!(m(m(a, b), c), m(a, m(b, c)));
            let (la, lb, lab) = (t.length(a).unwrap(), t.length(b).unwrap(), t.length(m(a, b)).unwrap());
            assert!(lab <= la + lb && (la + lb - lab) % 2 == 0);
        }
    }

    #[test]
    fn parabolic_longest_conjugation_permutes_subset() {
        let t = table("B3");
        for bits in 0u64..8 {
            let x = AtomSet::from_bits(bits);
            let w = t.parabolic_longest(x);
            for s in x.iter() {
                let c = t.multiply(t.multiply(w, t.generator(s)).unwrap(), w).unwrap();
                assert!(x.iter().any(|r| t.generator(r) == c));
            }
        }
    }
}
