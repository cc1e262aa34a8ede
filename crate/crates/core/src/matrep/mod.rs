//! Projective matrix groups over `Q(ζ13)`: the printed generators, exact
//! products and inverses, projective equality and canonical hashing,
//! breadth-first closure of the order-1092 group, triangle-group
//! presentation checks, conjugacy-class identification, and the word
//! correspondence with `SL(2,13)`.

pub mod catalog;
pub mod sl2;
pub mod tables;

use crate::cyclo::{CycloError, CycloNum};
use crate::linalg::{self, LinalgError};
use crate::par::{self, Mode};
use std::collections::{BTreeSet, HashMap};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrepError {
    DimensionMismatch { a: usize, b: usize },
    Singular,
    OrderBoundExceeded { bound: u32 },
    ClosureBoundExceeded { bound: usize },
    NotInGroup,
    UnknownName(String),
    Linalg(LinalgError),
    Cyclo(CycloError),
}

impl fmt::Display for MatrepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrepError::DimensionMismatch { a, b } => write!(f, "dimension mismatch {a} vs {b}"),
            MatrepError::Singular => write!(f, "singular matrix"),
            MatrepError::OrderBoundExceeded { bound } => {
                write!(f, "no power within bound {bound} is scalar: not in the expected group")
            }
            MatrepError::ClosureBoundExceeded { bound } => {
                write!(f, "closure exceeded bound {bound}: a generator entry is wrong")
            }
            MatrepError::NotInGroup => write!(f, "element not in the enumerated group"),
            MatrepError::UnknownName(s) => write!(f, "unknown matrix name: {s}"),
            MatrepError::Linalg(e) => write!(f, "{e}"),
            MatrepError::Cyclo(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for MatrepError {}

impl From<LinalgError> for MatrepError {
    fn from(e: LinalgError) -> Self {
        match e {
            LinalgError::Singular => MatrepError::Singular,
            other => MatrepError::Linalg(other),
        }
    }
}

impl From<CycloError> for MatrepError {
    fn from(e: CycloError) -> Self {
        MatrepError::Cyclo(e)
    }
}

/// A square matrix over `Q(ζ13)` regarded up to nonzero scalar. The stored
/// entries are the lift as built (products of catalogued lifts keep their
/// exact scalars, so strict identities like `X = −I` stay checkable);
/// projective equality and hashing go through the canonical rescaling that
/// makes the first nonzero row-major entry 1.
#[derive(Clone, PartialEq, Eq)]
pub struct ProjMatrix {
    dim: usize,
    entries: Vec<CycloNum>,
}

impl fmt::Debug for ProjMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProjMatrix(dim={})", self.dim)
    }
}

impl ProjMatrix {
    pub fn new(dim: usize, entries: Vec<CycloNum>) -> ProjMatrix {
        assert_eq!(entries.len(), dim * dim);
        ProjMatrix { dim, entries }
    }

    pub fn identity(dim: usize) -> ProjMatrix {
        let mut entries = vec![CycloNum::zero(13); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = CycloNum::one(13);
        }
        ProjMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &CycloNum {
        &self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[CycloNum] {
        &self.entries
    }

    pub fn mul(&self, o: &ProjMatrix) -> ProjMatrix {
        assert_eq!(self.dim, o.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = CycloNum::zero(13);
                for k in 0..n {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    acc = acc + (a * b);
                }
                out.push(acc);
            }
        }
        ProjMatrix { dim: n, entries: out }
    }

    pub fn inv(&self) -> Result<ProjMatrix, MatrepError> {
        let entries = linalg::invert(self.dim, &self.entries)?;
        Ok(ProjMatrix { dim: self.dim, entries })
    }

    pub fn pow(&self, k: u64) -> ProjMatrix {
        let mut acc = ProjMatrix::identity(self.dim);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    pub fn neg(&self) -> ProjMatrix {
        ProjMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    pub fn transpose(&self) -> ProjMatrix {
        let n = self.dim;
        let mut out = Vec::with_capacity(n * n);
        for j in 0..n {
            for i in 0..n {
                out.push(self.get(i, j).clone());
            }
        }
        ProjMatrix { dim: n, entries: out }
    }

    /// Exact trace of the stored lift.
    pub fn trace(&self) -> CycloNum {
        let mut acc = CycloNum::zero(13);
        for i in 0..self.dim {
            acc = acc + self.get(i, i).clone();
        }
        acc
    }

    pub fn eq_strict(&self, o: &ProjMatrix) -> bool {
        self.dim == o.dim && self.entries == o.entries
    }

    pub fn is_identity_strict(&self) -> bool {
        self.eq_strict(&ProjMatrix::identity(self.dim))
    }

    pub fn is_neg_identity_strict(&self) -> bool {
        self.eq_strict(&ProjMatrix::identity(self.dim).neg())
    }

    /// The scalar λ with `self = λ·o`, when the two lifts are proportional.
    pub fn scalar_multiple_of(&self, o: &ProjMatrix) -> Option<CycloNum> {
        if self.dim != o.dim {
            return None;
        }
        let k = o.entries.iter().position(|e| !e.is_zero())?;
        if self.entries[k].is_zero() {
            return None;
        }
        let lambda = self.entries[k].checked_div(&o.entries[k]).ok()?;
        for (a, b) in self.entries.iter().zip(&o.entries) {
            if *a != (b * &lambda) {
                return None;
            }
        }
        Some(lambda)
    }

    pub fn proj_eq(&self, o: &ProjMatrix) -> bool {
        self.scalar_multiple_of(o).is_some()
    }

    /// Canonical projective representative: first nonzero row-major entry
    /// rescaled to 1.
    pub fn normalized(&self) -> ProjMatrix {
        let k = self
            .entries
            .iter()
            .position(|e| !e.is_zero())
            .expect("zero matrix has no projective normalization");
        let inv = self.entries[k].inv().expect("nonzero entry");
        ProjMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * &inv).collect(),
        }
    }

    /// Stable byte key of the canonical representative; equal keys iff
    /// projectively equal.
    pub fn canonical_key(&self) -> Vec<u8> {
        let n = self.normalized();
        let mut out = Vec::with_capacity(n.entries.len() * 16);
        out.extend_from_slice(&(n.dim as u32).to_le_bytes());
        for e in &n.entries {
            e.key_bytes(&mut out);
        }
        out
    }

    /// Least `k ≥ 1` with `self^k` projectively the identity, searched up
    /// to `bound`. Exceeding the bound signals a transcription error in a
    /// table and is reported, not panicked.
    pub fn proj_order(&self, bound: u32) -> Result<u32, MatrepError> {
        let id = ProjMatrix::identity(self.dim);
        let base = self.normalized();
        let mut acc = base.clone();
        for k in 1..=bound {
            if acc.proj_eq(&id) {
                return Ok(k);
            }
            acc = acc.mul(&base).normalized();
        }
        Err(MatrepError::OrderBoundExceeded { bound })
    }
}

/// Result of a `(2,3,n;p)` presentation check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PresentationCheck {
    pub holds: bool,
    /// True when a generator is projectively trivial, so the relations hold
    /// vacuously.
    pub degenerate: bool,
}

/// Check the relations `u³ = v² = (uv)^n = ([u,v])^p = 1` projectively,
/// with `[u,v] = u⁻¹v⁻¹uv`.
pub fn check_presentation(
    u: &ProjMatrix,
    v: &ProjMatrix,
    n: u32,
    p: u32,
) -> Result<PresentationCheck, MatrepError> {
    let id = ProjMatrix::identity(u.dim());
    let u3 = u.pow(3).proj_eq(&id);
    let v2 = v.pow(2).proj_eq(&id);
    let uv = u.mul(v);
    let uvn = uv.pow(n as u64).proj_eq(&id);
    let comm = u.inv()?.mul(&v.inv()?).mul(u).mul(v);
    let commp = comm.pow(p as u64).proj_eq(&id);
    let degenerate = u.proj_eq(&id) || v.proj_eq(&id);
    Ok(PresentationCheck { holds: u3 && v2 && uvn && commp, degenerate })
}

/// The closed set of projective elements generated by a list of matrices,
/// together with a shortest generator word for each element.
pub struct GroupClosure {
    elements: Vec<ProjMatrix>,
    words: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
}

impl GroupClosure {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[ProjMatrix] {
        &self.elements
    }

    pub fn contains(&self, m: &ProjMatrix) -> bool {
        self.index.contains_key(&m.canonical_key())
    }

    pub fn index_of(&self, m: &ProjMatrix) -> Option<usize> {
        self.index.get(&m.canonical_key()).copied()
    }

    /// Shortest found word (generator indices) for the element.
    pub fn word_of(&self, m: &ProjMatrix) -> Option<&[u8]> {
        self.index_of(m).map(|i| self.words[i].as_slice())
    }

    /// The set of canonical keys, for exact set comparisons of closures.
    pub fn key_set(&self) -> BTreeSet<Vec<u8>> {
        self.index.keys().cloned().collect()
    }

    /// Distribution of projective element orders.
    pub fn order_profile(&self, mode: Mode) -> Result<Vec<(u32, usize)>, MatrepError> {
        let orders = par::map_vec(mode, &self.elements, |m| m.proj_order(26));
        let mut counts: HashMap<u32, usize> = HashMap::new();
        for o in orders {
            *counts.entry(o?).or_insert(0) += 1;
        }
        let mut profile: Vec<(u32, usize)> = counts.into_iter().collect();
        profile.sort_unstable();
        Ok(profile)
    }
}

/// Breadth-first closure under multiplication by the generators. The
/// frontier products are computed in parallel; insertion order is the
/// deterministic (element, generator) order, so the enumeration is
/// schedule-independent.
pub fn closure(
    gens: &[ProjMatrix],
    bound: usize,
    mode: Mode,
) -> Result<GroupClosure, MatrepError> {
    let dim = gens.first().map(|g| g.dim()).unwrap_or(6);
    let id = ProjMatrix::identity(dim).normalized();
    let mut elements = vec![id.clone()];
    let mut words: Vec<Vec<u8>> = vec![Vec::new()];
    let mut index = HashMap::new();
    index.insert(id.canonical_key(), 0usize);
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let tasks: Vec<(usize, u8)> = frontier
            .iter()
            .flat_map(|&e| (0..gens.len() as u8).map(move |g| (e, g)))
            .collect();
        let products = par::map_vec(mode, &tasks, |&(e, g)| {
            let m = elements[e].mul(&gens[g as usize]).normalized();
            let key = m.canonical_key();
            (m, key)
        });
        let mut next = Vec::new();
        for ((e, g), (m, key)) in tasks.into_iter().zip(products) {
            if index.contains_key(&key) {
                continue;
            }
            let idx = elements.len();
            index.insert(key, idx);
            let mut w = words[e].clone();
            w.push(g);
            words.push(w);
            elements.push(m);
            next.push(idx);
            if elements.len() > bound {
                return Err(MatrepError::ClosureBoundExceeded { bound });
            }
        }
        frontier = next;
    }
    Ok(GroupClosure { elements, words, index })
}

/// Conjugacy-class labels of `PSL(2,13)` in Atlas notation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassLabel {
    C1A,
    C2A,
    C3A,
    C6A,
    C7A,
    C7B,
    C7C,
    C13A,
    C13B,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClassLabel::C1A => "1A",
            ClassLabel::C2A => "2A",
            ClassLabel::C3A => "3A",
            ClassLabel::C6A => "6A",
            ClassLabel::C7A => "7A",
            ClassLabel::C7B => "7B",
            ClassLabel::C7C => "7C",
            ClassLabel::C13A => "13A",
            ClassLabel::C13B => "13B",
        };
        write!(f, "{s}")
    }
}

/// Is `a` conjugate to `b` inside the enumerated group? Brute-force sweep
/// `g·a = b·g`, parallelized; the group order (1092) keeps this tractable.
pub fn is_conjugate(a: &ProjMatrix, b: &ProjMatrix, group: &GroupClosure, mode: Mode) -> bool {
    let elems = group.elements();
    par::find_index(mode, elems.len(), |i| {
        let g = &elems[i];
        g.mul(a).proj_eq(&b.mul(g))
    })
    .is_some()
}

/// Identify the conjugacy class of an element of the order-1092 closure.
/// Order determines the class except for orders 7 and 13, which are split
/// by conjugacy against the reference representatives.
pub fn conj_class(
    a: &ProjMatrix,
    group: &GroupClosure,
    q_ref: &ProjMatrix,
    t_ref: &ProjMatrix,
    mode: Mode,
) -> Result<ClassLabel, MatrepError> {
    if !group.contains(a) {
        return Err(MatrepError::NotInGroup);
    }
    let label = match a.proj_order(26)? {
        1 => ClassLabel::C1A,
        2 => ClassLabel::C2A,
        3 => ClassLabel::C3A,
        6 => ClassLabel::C6A,
        7 => {
            if is_conjugate(a, q_ref, group, mode) {
                ClassLabel::C7A
            } else if is_conjugate(a, &q_ref.pow(2), group, mode) {
                ClassLabel::C7B
            } else if is_conjugate(a, &q_ref.pow(4), group, mode) {
                ClassLabel::C7C
            } else {
                return Err(MatrepError::NotInGroup);
            }
        }
        13 => {
            if is_conjugate(a, t_ref, group, mode) {
                ClassLabel::C13A
            } else if is_conjugate(a, &t_ref.pow(2), group, mode) {
                ClassLabel::C13B
            } else {
                return Err(MatrepError::NotInGroup);
            }
        }
        _ => return Err(MatrepError::NotInGroup),
    };
    Ok(label)
}

/// Outcome of comparing a derived matrix against a printed table (or two
/// printings of the same table): exact equality, equality up to a scalar,
/// or a list of differing positions.
#[derive(Clone, Debug)]
pub enum TableComparison {
    Identical,
    Proportional { lambda: String },
    Differs { positions: Vec<(usize, usize)> },
}

impl TableComparison {
    pub fn agrees_projectively(&self) -> bool {
        !matches!(self, TableComparison::Differs { .. })
    }
}

/// Entrywise comparison with a projective fallback.
pub fn compare_matrices(derived: &ProjMatrix, printed: &ProjMatrix) -> TableComparison {
    if derived.eq_strict(printed) {
        return TableComparison::Identical;
    }
    if let Some(lambda) = derived.scalar_multiple_of(printed) {
        return TableComparison::Proportional { lambda: lambda.to_text() };
    }
    let mut positions = Vec::new();
    for i in 0..derived.dim() {
        for j in 0..derived.dim() {
            if derived.get(i, j) != printed.get(i, j) {
                positions.push((i, j));
            }
        }
    }
    TableComparison::Differs { positions }
}

#[cfg(test)]
mod tests;
