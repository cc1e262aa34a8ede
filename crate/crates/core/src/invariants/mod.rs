//! Exact multivariate polynomial algebra in `z1, …, z6` over `Q(ζ13)`,
//! the invariant-form families it houses (the quadratic, cubic and sextic
//! bases and the degree-14 root systems built from them), the induced 7-
//! and 14-dimensional matrices, and the identity certifications that rest
//! on them.

pub mod forms;
pub mod lee;
pub mod verify;

use crate::cyclo::{CycloNum, Rat};
use crate::linalg::{self, LinalgError};
use crate::matrep::ProjMatrix;
use crate::par::{self, Mode};
use num_bigint::BigInt;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub const NVARS: usize = 6;

/// Exponent vector in graded-lexicographic order (total degree first).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Monomial(pub [u8; NVARS]);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial([0; NVARS])
    }

    pub fn var(i: usize) -> Monomial {
        let mut e = [0; NVARS];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut e = [0; NVARS];
        for i in 0..NVARS {
            e[i] = self.0[i] + o.0[i];
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse exact polynomial: no zero coefficients are stored, iteration
/// order is the fixed monomial order, so serialization is canonical.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, CycloNum>,
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({} terms, degree {})", self.terms.len(), self.total_degree())
    }
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: CycloNum) -> MultiPoly {
        let mut p = MultiPoly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(CycloNum::one(13))
    }

    /// The variable `z_{i+1}`.
    pub fn var(i: usize) -> MultiPoly {
        let mut p = MultiPoly::zero();
        p.add_term(Monomial::var(i), CycloNum::one(13));
        p
    }

    /// A single monomial `c·z1^e1···z6^e6`.
    pub fn term(c: CycloNum, exps: [u8; NVARS]) -> MultiPoly {
        let mut p = MultiPoly::zero();
        p.add_term(Monomial(exps), c);
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: CycloNum) {
        if c.is_zero() {
            return;
        }
        // Coefficients are kept at conductor 13 so serialization is
        // canonical regardless of how a form was assembled.
        let c = if 13 % c.conductor() == 0 {
            c.lift_to(13).unwrap()
        } else {
            c
        };
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + &c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CycloNum)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> CycloNum {
        self.terms.get(m).cloned().unwrap_or_else(|| CycloNum::zero(13))
    }

    pub fn add(&self, o: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, -c);
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &CycloNum) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn scale_rat(&self, r: &Rat) -> MultiPoly {
        self.scale(&CycloNum::rational(r.clone()))
    }

    pub fn mul(&self, o: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn square(&self) -> MultiPoly {
        self.mul(self)
    }

    pub fn pow(&self, k: u8) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Canonical serialization: one term per line,
    /// `e1 e2 e3 e4 e5 e6 : coeff` in the fixed monomial order.
    pub fn to_dump(&self) -> String {
        let mut out = String::new();
        for (m, c) in &self.terms {
            let exps: Vec<String> = m.0.iter().map(|e| e.to_string()).collect();
            out.push_str(&format!("{} : {}\n", exps.join(" "), c.to_text()));
        }
        out
    }

    /// Numeric evaluation at a complex point (for spot checks only).
    pub fn eval_complex(
        &self,
        point: &[crate::cyclo::CFixed; NVARS],
        embedder: &crate::cyclo::Embedder,
    ) -> crate::cyclo::CFixed {
        let bits = embedder.bits();
        let mut acc = crate::cyclo::CFixed::zero(bits);
        for (m, c) in &self.terms {
            let mut t = embedder.embed(c);
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&point[i]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }
}

/// Substitute `z_i ← Σ_j g[i][j]·z_j` into `f`; that is, return
/// `f(g·z)`. Distinct monomials are substituted in parallel and shared
/// through the per-call cache.
pub fn act(g: &ProjMatrix, f: &MultiPoly, mode: Mode) -> MultiPoly {
    act_many(g, std::slice::from_ref(f), mode).pop().unwrap()
}

/// Substitute one matrix into many polynomials, computing each distinct
/// monomial image once.
pub fn act_many(g: &ProjMatrix, fs: &[MultiPoly], mode: Mode) -> Vec<MultiPoly> {
    assert_eq!(g.dim(), NVARS);
    let rows: Vec<MultiPoly> = (0..NVARS)
        .map(|i| {
            let mut row = MultiPoly::zero();
            for j in 0..NVARS {
                let c = g.get(i, j);
                if !c.is_zero() {
                    row.add_term(Monomial::var(j), c.clone());
                }
            }
            row
        })
        .collect();
    // distinct monomials across all inputs
    let monos: Vec<Monomial> = fs
        .iter()
        .flat_map(|f| f.terms.keys().copied())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let images = par::map_vec(mode, &monos, |m| {
        let mut acc = MultiPoly::one();
        for (i, &e) in m.0.iter().enumerate() {
            if e > 0 {
                acc = acc.mul(&rows[i].pow(e));
            }
        }
        acc
    });
    let index: BTreeMap<Monomial, usize> =
        monos.iter().enumerate().map(|(k, m)| (*m, k)).collect();
    fs.iter()
        .map(|f| {
            let mut out = MultiPoly::zero();
            for (m, c) in &f.terms {
                let img = &images[index[m]];
                for (mm, cc) in &img.terms {
                    out.add_term(*mm, cc * c);
                }
            }
            out
        })
        .collect()
}

/// Express each `act(g, basis_i)` in the given basis: returns the `k×k`
/// matrix `M` with `act(g, b_i) = Σ_j M[i][j]·b_j`. Fails loudly
/// (`Inconsistent`) when a transformed form leaves the span.
pub fn induced_matrix(
    g: &ProjMatrix,
    basis: &[MultiPoly],
    mode: Mode,
) -> Result<Vec<CycloNum>, LinalgError> {
    let k = basis.len();
    let transformed = act_many(g, basis, mode);
    // Shared monomial index over basis and images.
    let monos: Vec<Monomial> = basis
        .iter()
        .chain(transformed.iter())
        .flat_map(|f| f.terms.keys().copied())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let rows = monos.len();
    let mut bmat = vec![CycloNum::zero(13); rows * k];
    for (j, b) in basis.iter().enumerate() {
        for (m, c) in &b.terms {
            let r = monos.binary_search(m).unwrap();
            bmat[r * k + j] = c.clone();
        }
    }
    let solved = par::map_vec(mode, &transformed, |tf| {
        let mut v = vec![CycloNum::zero(13); rows];
        for (m, c) in &tf.terms {
            let r = monos.binary_search(m).unwrap();
            v[r] = c.clone();
        }
        linalg::solve_tall(rows, k, &bmat, &v)
    });
    let mut out = Vec::with_capacity(k * k);
    for row in solved {
        out.extend(row?);
    }
    Ok(out)
}

/// Exact matrix equality helper for induced matrices (plain grids, not
/// projective).
pub fn grids_equal(a: &[CycloNum], b: &[CycloNum]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x == y)
}

/// Positions where two induced grids differ.
pub fn grid_diff(dim: usize, a: &[CycloNum], b: &[CycloNum]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            if a[i * dim + j] != b[i * dim + j] {
                out.push((i, j));
            }
        }
    }
    out
}

/// Scale every entry of a grid.
pub fn grid_scale(a: &[CycloNum], c: &CycloNum) -> Vec<CycloNum> {
    a.iter().map(|x| x * c).collect()
}

/// Matrix product of square grids.
pub fn grid_mul(dim: usize, a: &[CycloNum], b: &[CycloNum]) -> Vec<CycloNum> {
    let mut out = vec![CycloNum::zero(13); dim * dim];
    for i in 0..dim {
        for k in 0..dim {
            if a[i * dim + k].is_zero() {
                continue;
            }
            for j in 0..dim {
                if b[k * dim + j].is_zero() {
                    continue;
                }
                let t = &a[i * dim + k] * &b[k * dim + j];
                out[i * dim + j] = &out[i * dim + j] + &t;
            }
        }
    }
    out
}

/// Trace of a square grid.
pub fn grid_trace(dim: usize, a: &[CycloNum]) -> CycloNum {
    let mut acc = CycloNum::zero(13);
    for i in 0..dim {
        acc = acc + a[i * dim + i].clone();
    }
    acc
}

/// Convenience: `c·f` for integer `c`.
pub fn int_scale(f: &MultiPoly, c: i64) -> MultiPoly {
    f.scale_rat(&Rat::from(BigInt::from(c)))
}
