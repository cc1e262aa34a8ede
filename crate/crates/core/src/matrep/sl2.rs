//! Words in the abstract generators `s`, `t` of the modular group and
//! their evaluation: in `SL(2,13)` for self-checks and in the
//! six-dimensional representation via `s ↦ S`, `t ↦ T`.
//!
//! The decomposition is the standard Euclidean one over the prime field:
//! a left `t`-shear clears the lower-left entry, one `s` swap brings the
//! matrix to upper-triangular form, and `diag(u, u⁻¹)` unwinds through the
//! shear word `w(u)·s` with `w(u) = e(u)·f(−u⁻¹)·e(u)`. Images are exact
//! up to the central `±1`, which is all projective evaluation can see.

use super::{MatrepError, ProjMatrix};
use crate::matrep::catalog::Catalog;

const P: i64 = 13;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    S,
    /// `t^k` with k reduced mod 13.
    TPow(i64),
}

/// A word over `{s, t, t⁻¹}`, stored with collapsed `t`-runs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Sl2Word {
    pub letters: Vec<Letter>,
}

impl Sl2Word {
    fn push_t(&mut self, k: i64) {
        let k = k.rem_euclid(P);
        if k == 0 {
            return;
        }
        if let Some(Letter::TPow(prev)) = self.letters.last_mut() {
            *prev = (*prev + k).rem_euclid(P);
            if *prev == 0 {
                self.letters.pop();
            }
            return;
        }
        self.letters.push(Letter::TPow(k));
    }

    fn push_s(&mut self) {
        self.letters.push(Letter::S);
    }

    /// Evaluate in `SL(2,13)` (entries reduced to `0..13`).
    pub fn eval_mod13(&self) -> [[i64; 2]; 2] {
        let mut m = [[1, 0], [0, 1]];
        for l in &self.letters {
            let g = match l {
                Letter::S => [[0, P - 1], [1, 0]],
                Letter::TPow(k) => [[1, k.rem_euclid(P)], [0, 1]],
            };
            m = mat_mul(m, g);
        }
        m
    }

    /// Evaluate in the six-dimensional representation.
    pub fn eval_rep(&self, c: &Catalog) -> ProjMatrix {
        let mut acc = ProjMatrix::identity(6);
        for l in &self.letters {
            match l {
                Letter::S => acc = acc.mul(&c.s),
                Letter::TPow(k) => acc = acc.mul(&c.t.pow(*k as u64)),
            }
        }
        acc
    }
}

impl std::fmt::Display for Sl2Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| match l {
                Letter::S => "s".to_string(),
                Letter::TPow(1) => "t".to_string(),
                Letter::TPow(k) => format!("t^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join("·"))
    }
}

fn mat_mul(a: [[i64; 2]; 2], b: [[i64; 2]; 2]) -> [[i64; 2]; 2] {
    let mut out = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = (a[i][0] * b[0][j] + a[i][1] * b[1][j]).rem_euclid(P);
        }
    }
    out
}

fn inv_mod(a: i64) -> i64 {
    let a = a.rem_euclid(P);
    (1..P).find(|&x| (a * x) % P == 1).expect("nonzero mod 13")
}

fn det_mod(m: [[i64; 2]; 2]) -> i64 {
    (m[0][0] * m[1][1] - m[0][1] * m[1][0]).rem_euclid(P)
}

/// `e(x) = t^x`.
fn word_e(w: &mut Sl2Word, x: i64) {
    w.push_t(x);
}

/// `f(y) = s·t^{−y}·s` (projectively `s⁻¹·t^{−y}·s`).
fn word_f(w: &mut Sl2Word, y: i64) {
    w.push_s();
    w.push_t(-y);
    w.push_s();
}

/// `w(u) = e(u)·f(−u⁻¹)·e(u)`, then `h(u) = w(u)·s = diag(u, u⁻¹)`.
fn word_h(w: &mut Sl2Word, u: i64) {
    if u.rem_euclid(P) == 1 {
        return;
    }
    word_e(w, u);
    word_f(w, -inv_mod(u));
    word_e(w, u);
    w.push_s();
}

/// Decompose a determinant-1 matrix mod 13 into a word whose `SL(2,13)`
/// image is `±m`. Rejects non-unimodular input.
pub fn sl2_word(m: [[i64; 2]; 2]) -> Result<Sl2Word, MatrepError> {
    let m = [
        [m[0][0].rem_euclid(P), m[0][1].rem_euclid(P)],
        [m[1][0].rem_euclid(P), m[1][1].rem_euclid(P)],
    ];
    if det_mod(m) != 1 {
        return Err(MatrepError::NotInGroup);
    }
    let mut w = Sl2Word::default();
    let upper = if m[1][0] == 0 {
        m
    } else {
        // t^{-q} clears the (1,1) slot with q = a·c⁻¹, then s⁻¹ swaps:
        // m = t^q · s · upper.
        let qx = (m[0][0] * inv_mod(m[1][0])).rem_euclid(P);
        w.push_t(qx);
        w.push_s();
        let sheared = mat_mul([[1, (-qx).rem_euclid(P)], [0, 1]], m);
        // s⁻¹ = [[0,1],[-1,0]]
        mat_mul([[0, 1], [P - 1, 0]], sheared)
    };
    debug_assert_eq!(upper[1][0], 0);
    let u = upper[0][0];
    let v = upper[0][1];
    // upper = t^{v·u} · diag(u, u⁻¹), since t^x·h(u) has (1,2) entry x·u⁻¹
    word_e(&mut w, v * u);
    word_h(&mut w, u);
    // Self-check: the image must be ±m.
    let got = w.eval_mod13();
    let neg = [
        [(P - m[0][0]) % P, (P - m[0][1]) % P],
        [(P - m[1][0]) % P, (P - m[1][1]) % P],
    ];
    debug_assert!(got == m || got == neg, "sl2 decomposition broke");
    Ok(w)
}

/// One claimed correspondence between an `SL(2,13)` matrix and a
/// six-dimensional element.
pub struct WeilClaim {
    pub mat: [[i64; 2]; 2],
    pub target: &'static str,
    pub claim: String,
}

/// The claimed matrix ↔ representation pairs for the three models, plus
/// the diagonal element mapping to `H`.
pub fn weil_claims() -> Vec<WeilClaim> {
    let mk = |mat: [[i64; 2]; 2], target: &'static str| WeilClaim {
        mat,
        target,
        claim: format!(
            "ρ([[{}, {}], [{}, {}]]) is projectively {}",
            mat[0][0], mat[0][1], mat[1][0], mat[1][1], target
        ),
    };
    vec![
        mk([[-5, -3], [0, 5]], "y1"),
        mk([[-3, -1], [1, 0]], "Q6"),
        mk([[-2, -1], [5, 2]], "PQP2"),
        mk([[0, -7], [2, 0]], "y2"),
        mk([[5, 10], [3, 1]], "Q5"),
        mk([[-1, 10], [5, 1]], "y3"),
        mk([[-3, 5], [8, 8]], "Q3"),
        mk([[7, 0], [0, 2]], "H"),
        mk([[1, 0], [0, 1]], "identity"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_hit_every_claimed_matrix() {
        for claim in weil_claims() {
            let w = sl2_word(claim.mat).unwrap();
            let got = w.eval_mod13();
            let m = [
                [claim.mat[0][0].rem_euclid(P), claim.mat[0][1].rem_euclid(P)],
                [claim.mat[1][0].rem_euclid(P), claim.mat[1][1].rem_euclid(P)],
            ];
            let neg = [
                [(P - m[0][0]) % P, (P - m[0][1]) % P],
                [(P - m[1][0]) % P, (P - m[1][1]) % P],
            ];
            assert!(got == m || got == neg, "word missed {:?}", claim.mat);
        }
    }

    #[test]
    fn rejects_non_unimodular() {
        assert!(sl2_word([[2, 0], [0, 3]]).is_err());
    }

    #[test]
    fn identity_gives_empty_word() {
        let w = sl2_word([[1, 0], [0, 1]]).unwrap();
        assert!(w.letters.is_empty());
    }

    #[test]
    fn exhaustive_decomposition_over_sl2_f13() {
        // Every determinant-1 matrix mod 13 decomposes to ±itself.
        let mut count = 0u32;
        for a in 0..P {
            for b in 0..P {
                for cc in 0..P {
                    for d in 0..P {
                        if (a * d - b * cc).rem_euclid(P) != 1 {
                            continue;
                        }
                        count += 1;
                        let w = sl2_word([[a, b], [cc, d]]).unwrap();
                        let got = w.eval_mod13();
                        let m = [[a, b], [cc, d]];
                        let neg = [
                            [(P - a) % P, (P - b) % P],
                            [(P - cc) % P, (P - d) % P],
                        ];
                        assert!(got == m || got == neg);
                    }
                }
            }
        }
        assert_eq!(count, 2184); // |SL(2,13)|
    }
}
