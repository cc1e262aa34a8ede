//! Codes over the 13-element field and their Lee weight enumerators,
//! with the enumerator transform induced by the 7-dimensional matrix.

use super::forms::a_basis;
use super::induced_matrix;
use crate::cyclo::{CycloNum, Rat};
use crate::matrep::catalog::Catalog;
use crate::par::Mode;
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;

const P: u8 = 13;
/// Lee weight classes: 0 and ±1 … ±6.
const CLASSES: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodeError {
    BadEntry(u8),
    RankDeficient,
    NotSelfOrthogonal,
}

impl fmt::Display for CodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeError::BadEntry(e) => write!(f, "entry {e} out of range for the 13-element field"),
            CodeError::RankDeficient => write!(f, "generator matrix is rank deficient"),
            CodeError::NotSelfOrthogonal => {
                write!(f, "the transform identity needs a self-orthogonal code")
            }
        }
    }
}

impl std::error::Error for CodeError {}

/// A linear code over `F13` given by a full-rank generator matrix.
#[derive(Clone, Debug)]
pub struct Code13 {
    pub n: usize,
    pub k: usize,
    /// `k × n` generator rows with entries in `0..13`.
    pub gens: Vec<Vec<u8>>,
}

impl Code13 {
    pub fn new(n: usize, gens: Vec<Vec<u8>>) -> Result<Code13, CodeError> {
        for row in &gens {
            assert_eq!(row.len(), n);
            for &e in row {
                if e >= P {
                    return Err(CodeError::BadEntry(e));
                }
            }
        }
        let k = gens.len();
        if rank_mod13(&gens, n) != k {
            return Err(CodeError::RankDeficient);
        }
        Ok(Code13 { n, k, gens })
    }

    /// The zero code of length `n`.
    pub fn zero(n: usize) -> Code13 {
        Code13 { n, k: 0, gens: Vec::new() }
    }

    /// All `13^k` codewords.
    pub fn codewords(&self) -> Vec<Vec<u8>> {
        let mut words = vec![vec![0u8; self.n]];
        for row in &self.gens {
            let mut next = Vec::with_capacity(words.len() * P as usize);
            for w in &words {
                for c in 0..P {
                    let mut v = w.clone();
                    for (vi, ri) in v.iter_mut().zip(row) {
                        *vi = (*vi + c * ri) % P;
                    }
                    next.push(v);
                }
            }
            words = next;
        }
        words
    }

    /// `C ⊆ C⊥`: all pairs of generator rows are orthogonal.
    pub fn is_self_orthogonal(&self) -> bool {
        self.gens.iter().all(|a| {
            self.gens.iter().all(|b| {
                a.iter().zip(b).map(|(&x, &y)| (x as u32) * (y as u32)).sum::<u32>() % 13 == 0
            })
        })
    }

    /// The dual code, via a nullspace basis of the generator matrix.
    pub fn dual(&self) -> Code13 {
        let rows = nullspace_mod13(&self.gens, self.n);
        Code13 { n: self.n, k: rows.len(), gens: rows }
    }
}

fn rank_mod13(gens: &[Vec<u8>], n: usize) -> usize {
    let mut m: Vec<Vec<u8>> = gens.to_vec();
    let rows = m.len();
    let mut rank = 0;
    for col in 0..n {
        let Some(r) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, r);
        let inv = (1..P).find(|&x| (m[rank][col] * x) % P == 1).unwrap();
        for j in 0..n {
            m[rank][j] = (m[rank][j] * inv) % P;
        }
        for rr in 0..rows {
            if rr != rank && m[rr][col] != 0 {
                let f = m[rr][col];
                for j in 0..n {
                    m[rr][j] = (m[rr][j] + (P - f) * m[rank][j]) % P;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn nullspace_mod13(gens: &[Vec<u8>], n: usize) -> Vec<Vec<u8>> {
    // Row-reduce, then read off the free-variable basis.
    let mut m: Vec<Vec<u8>> = gens.to_vec();
    let rows = m.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let Some(r) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, r);
        let inv = (1..P).find(|&x| (m[rank][col] * x) % P == 1).unwrap();
        for j in 0..n {
            m[rank][j] = (m[rank][j] * inv) % P;
        }
        for rr in 0..rows {
            if rr != rank && m[rr][col] != 0 {
                let f = m[rr][col];
                for j in 0..n {
                    m[rr][j] = (m[rr][j] + (P - f) * m[rank][j]) % P;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut v = vec![0u8; n];
        v[f] = 1;
        for (i, &p) in pivots.iter().enumerate() {
            // pivot row i: x_p + Σ m[i][free]·x_free = 0
            v[p] = (P - m[i][f] % P) % P;
        }
        basis.push(v);
    }
    basis
}

/// A sparse polynomial in the seven enumerator variables `X0 … X6` with
/// exact cyclotomic coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct LeePoly {
    pub terms: BTreeMap<[u8; CLASSES], CycloNum>,
}

impl fmt::Debug for LeePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LeePoly({} terms)", self.terms.len())
    }
}

impl LeePoly {
    pub fn zero() -> LeePoly {
        LeePoly { terms: BTreeMap::new() }
    }

    pub fn one() -> LeePoly {
        let mut p = LeePoly::zero();
        p.add_term([0; CLASSES], CycloNum::one(13));
        p
    }

    pub fn add_term(&mut self, m: [u8; CLASSES], c: CycloNum) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(|| CycloNum::zero(13));
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, o: &LeePoly) -> LeePoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn mul(&self, o: &LeePoly) -> LeePoly {
        let mut out = LeePoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let mut m = *ma;
                for (x, y) in m.iter_mut().zip(mb) {
                    *x += y;
                }
                out.add_term(m, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &CycloNum) -> LeePoly {
        if c.is_zero() {
            return LeePoly::zero();
        }
        LeePoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Value at `X0 = … = X6 = 1`.
    pub fn eval_all_ones(&self) -> CycloNum {
        self.terms
            .values()
            .fold(CycloNum::zero(13), |acc, c| acc + c.clone())
    }
}

fn lee_class(e: u8) -> usize {
    (e.min(P - e)) as usize
}

/// The Lee weight enumerator `W_C = Σ_u ∏ X_i^{l_i(u)}`.
pub fn lee_enumerator(code: &Code13) -> LeePoly {
    let mut w = LeePoly::zero();
    for u in code.codewords() {
        let mut m = [0u8; CLASSES];
        for &e in &u {
            m[lee_class(e)] += 1;
        }
        w.add_term(m, CycloNum::one(13));
    }
    w
}

/// Substitute `X ← X·M` (row vector times the 7×7 grid) into the
/// enumerator: each variable maps to the linear form
/// `(X·M)_k = Σ_i X_i·M[i][k]`.
pub fn transform(w: &LeePoly, grid: &[CycloNum]) -> LeePoly {
    let linear: Vec<LeePoly> = (0..CLASSES)
        .map(|k| {
            let mut f = LeePoly::zero();
            for i in 0..CLASSES {
                let mut m = [0u8; CLASSES];
                m[i] = 1;
                f.add_term(m, grid[i * CLASSES + k].clone());
            }
            f
        })
        .collect();
    let mut out = LeePoly::zero();
    for (m, c) in &w.terms {
        let mut prod = LeePoly::one();
        for (k, &e) in m.iter().enumerate() {
            for _ in 0..e {
                prod = prod.mul(&linear[k]);
            }
        }
        out = out.add(&prod.scale(c));
    }
    out
}

/// Result of the duality identity check.
pub struct MacWilliamsReport {
    pub constant: CycloNum,
    pub identity_holds: bool,
    pub double_transform_is_original: bool,
    pub enumerator_terms: usize,
    pub dual_terms: usize,
}

/// Verify `W_{C⊥}(X) = const · W_C(X·S̃)` with the induced 7-dimensional
/// matrix, determine the constant exactly, and check that applying the
/// transform twice returns the original enumerator.
pub fn macwilliams_check(code: &Code13, cat: &Catalog, mode: Mode) -> Result<MacWilliamsReport, CodeError> {
    if !code.is_self_orthogonal() {
        return Err(CodeError::NotSelfOrthogonal);
    }
    let s7 = induced_matrix(&cat.s, &a_basis(), mode).expect("induced 7-dimensional matrix");
    let w = lee_enumerator(code);
    let dual = code.dual();
    let w_dual = lee_enumerator(&dual);
    let transformed = transform(&w, &s7);
    // Determine the constant from the values at the all-ones point (both
    // sides count codewords there), then verify the full identity.
    let lhs_val = w_dual.eval_all_ones();
    let rhs_val = transformed.eval_all_ones();
    let constant = lhs_val
        .checked_div(&rhs_val)
        .expect("transform of a nonzero enumerator is nonzero at the all-ones point");
    let identity_holds = transformed.scale(&constant) == w_dual;
    let double = transform(&transformed, &s7);
    let double_transform_is_original = double == w;
    Ok(MacWilliamsReport {
        constant,
        identity_holds,
        double_transform_is_original,
        enumerator_terms: w.terms.len(),
        dual_terms: w_dual.terms.len(),
    })
}

/// `13^{n/2−k}` as the predicted magnitude of the constant (exact when
/// `n` is even; `√13`-valued for odd `n`).
pub fn predicted_constant(n: usize, k: usize) -> CycloNum {
    use crate::cyclo::constants::sqrt13;
    let twice = n as i64 - 2 * k as i64; // exponent of √13
    let mut acc = CycloNum::one(13);
    let s = sqrt13();
    if twice >= 0 {
        for _ in 0..twice {
            acc = acc * s.clone();
        }
    } else {
        let inv = s.inv().unwrap();
        for _ in 0..(-twice) {
            acc = acc * inv.clone();
        }
    }
    acc
}

#[allow(dead_code)]
fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}
