//! The printed generator tables, transcribed verbatim into a tiny entry
//! language and parsed into exact matrices.
//!
//! Entry grammar: a signed sum of terms, each an optional integer
//! multiplier times an optional symbol. Symbols: `z<k>` for `ζ13^k`,
//! `q<k>` for the fourteen-dimensional table coefficients, `r0`, `r1`,
//! `r2`, `r3`, `r4`, `rinf` for the radical constants. A bare integer is a
//! rational term. Whole-matrix prefactors (like `−1/√13`) are applied by
//! the parser, so the strings below match the printed tables character for
//! character as closely as the grammar allows.
//!
//! Several matrices are printed twice in the source tables; both copies are
//! transcribed and cross-compared, and every matrix that is also a word in
//! other generators is recomputed and compared entry by entry.

use crate::cyclo::constants::{q, r0, r1, r2, r3, r4, r_inf, sqrt13};
use crate::cyclo::{CycloError, CycloNum, Rat};
use num_bigint::BigInt;

use super::ProjMatrix;

/// Whole-matrix scalar prefactor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scale {
    One,
    /// `−1/√13`
    NegInvSqrt13,
    /// `+1/√13`
    InvSqrt13,
    /// `−1/(13·√13)`
    NegInv13Sqrt13,
}

impl Scale {
    fn factor(self) -> CycloNum {
        let s = sqrt13();
        let inv13 = Rat::new(BigInt::from(1), BigInt::from(13));
        match self {
            Scale::One => CycloNum::one(13),
            Scale::NegInvSqrt13 => s.scale(&-&inv13),
            Scale::InvSqrt13 => s.scale(&inv13),
            Scale::NegInv13Sqrt13 => {
                s.scale(&Rat::new(BigInt::from(-1), BigInt::from(169)))
            }
        }
    }
}

fn symbol_value(sym: &str) -> Result<CycloNum, CycloError> {
    if let Some(k) = sym.strip_prefix('z') {
        let k: i64 = k
            .parse()
            .map_err(|_| CycloError::Parse(format!("bad power {sym:?}")))?;
        return Ok(CycloNum::root(13, k));
    }
    if let Some(k) = sym.strip_prefix('q') {
        let k: usize = k
            .parse()
            .map_err(|_| CycloError::Parse(format!("bad index {sym:?}")))?;
        return Ok(q(k));
    }
    Ok(match sym {
        "r0" => r0(),
        "r1" => r1(),
        "r2" => r2(),
        "r3" => r3(),
        "r4" => r4(),
        "rinf" => r_inf(),
        _ => return Err(CycloError::Parse(format!("unknown symbol {sym:?}"))),
    })
}

/// Parse one signed-sum entry like `z12-z1`, `1-z9`, `-2q5`, `26r2`, `0`.
pub fn parse_entry(s: &str) -> Result<CycloNum, CycloError> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(CycloError::Parse("empty entry".into()));
    }
    let mut acc = CycloNum::zero(13);
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = 1i64;
        while i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
            if bytes[i] == b'-' {
                sign = -sign;
            }
            i += 1;
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let mult: i64 = if i > start {
            s[start..i].parse().unwrap()
        } else {
            1
        };
        let sym_start = i;
        if i < bytes.len() && bytes[i].is_ascii_alphabetic() {
            i += 1;
            while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                i += 1;
            }
        }
        let term = if sym_start == i {
            // bare integer
            CycloNum::integer(mult)
        } else {
            symbol_value(&s[sym_start..i])?.scale(&Rat::from(BigInt::from(mult)))
        };
        acc = acc + term.scale(&Rat::from(BigInt::from(sign)));
        if i == sym_start && mult == 1 && i < bytes.len() && !matches!(bytes[i], b'+' | b'-') {
            return Err(CycloError::Parse(format!("cannot parse entry {s:?}")));
        }
    }
    Ok(acc)
}

/// Parse a full matrix: rows separated by `;` or newlines, entries by `,`.
pub fn parse_matrix(dim: usize, scale: Scale, body: &str) -> ProjMatrix {
    let factor = scale.factor();
    let entries: Vec<CycloNum> = body
        .split([';', '\n'])
        .flat_map(|row| row.split(','))
        .map(|e| e.trim())
        .filter(|e| !e.is_empty())
        .map(|e| {
            let v = parse_entry(e).unwrap_or_else(|err| panic!("entry {e:?}: {err}"));
            &v * &factor
        })
        .collect();
    assert_eq!(entries.len(), dim * dim, "table has wrong entry count");
    ProjMatrix::new(dim, entries)
}

/// Parse a diagonal table into a plain entry grid.
pub fn parse_diag_grid(dim: usize, body: &str) -> Vec<CycloNum> {
    parse_diag(dim, body).entries().to_vec()
}

/// Parse a diagonal matrix from its diagonal entries.
pub fn parse_diag(dim: usize, body: &str) -> ProjMatrix {
    let diag: Vec<CycloNum> = body
        .split(',')
        .map(|e| parse_entry(e.trim()).unwrap())
        .collect();
    assert_eq!(diag.len(), dim);
    let mut entries = vec![CycloNum::zero(13); dim * dim];
    for (i, d) in diag.into_iter().enumerate() {
        entries[i * dim + i] = d;
    }
    ProjMatrix::new(dim, entries)
}

// ── six-dimensional generator tables ────────────────────────────────────

pub const S_BODY: &str = "
z12-z1,  z10-z3, z4-z9,  z5-z8,  z2-z11, z6-z7;
z10-z3,  z4-z9,  z12-z1, z2-z11, z6-z7,  z5-z8;
z4-z9,   z12-z1, z10-z3, z6-z7,  z5-z8,  z2-z11;
z5-z8,   z2-z11, z6-z7,  z1-z12, z3-z10, z9-z4;
z2-z11,  z6-z7,  z5-z8,  z3-z10, z9-z4,  z1-z12;
z6-z7,   z5-z8,  z2-z11, z9-z4,  z1-z12, z3-z10";

pub const T_DIAG: &str = "z7, z11, z8, z6, z2, z5";

pub const X1_BODY: &str = "
z9-z12, z11-z7, z8-z9,  z7-z5,  z4-z11,  z4-z12;
z7-z3,  z3-z4,  z8-z11, z10-z4, z11-z6,  z10-z8;
z7-z8,  z11-z1, z1-z10, z12-z7, z12-z10, z8-z2;
z8-z6,  z2-z9,  z1-z9,  z4-z1,  z2-z6,   z5-z4;
z9-z3,  z7-z2,  z5-z3,  z6-z10, z10-z9,  z5-z2;
z6-z1,  z3-z1,  z11-z5, z6-z5,  z2-z12,  z12-z3";

pub const Y1_BODY: &str = "
0,   0,  0,   -z1, 0,   0;
0,   0,  0,   0,   -z9, 0;
0,   0,  0,   0,   0,   -z3;
z12, 0,  0,   0,   0,   0;
0,   z4, 0,   0,   0,   0;
0,   0,  z10, 0,   0,   0";

pub const X2_BODY: &str = "
z9-z10, z5-z8,  z1-z10, z3-z11, z11-z9,  z1-z8;
z9-z12, z3-z12, z6-z7,  z9-z7,  z1-z8,   z8-z3;
z2-z11, z3-z4,  z1-z4,  z7-z1,  z3-z11,  z9-z7;
z2-z10, z4-z2,  z5-z12, z4-z3,  z8-z5,   z12-z3;
z6-z4,  z5-z12, z10-z5, z4-z1,  z10-z1,  z7-z6;
z12-z6, z2-z10, z6-z4,  z11-z2, z10-z9,  z12-z9";

pub const Y2_BODY: &str = "
z7-z6,  z8-z5,  z11-z2, z4-z9,  z12-z1, z10-z3;
z8-z5,  z11-z2, z7-z6,  z12-z1, z10-z3, z4-z9;
z11-z2, z7-z6,  z8-z5,  z10-z3, z4-z9,  z12-z1;
z4-z9,  z12-z1, z10-z3, z6-z7,  z5-z8,  z2-z11;
z12-z1, z10-z3, z4-z9,  z5-z8,  z2-z11, z6-z7;
z10-z3, z4-z9,  z12-z1, z2-z11, z6-z7,  z5-z8";

pub const X3_BODY: &str = "
z12-z3, z6-z5,  z2-z12,  z5-z11, z1-z6,  z1-z3;
z5-z4,  z4-z1,  z2-z6,   z9-z1,  z6-z8,  z9-z2;
z5-z2,  z6-z10, z10-z9,  z3-z5,  z3-z9,  z2-z7;
z2-z8,  z7-z12, z10-z12, z1-z10, z7-z8,  z11-z1;
z12-z4, z5-z7,  z11-z4,  z8-z9,  z9-z12, z11-z7;
z8-z10, z4-z10, z6-z11,  z8-z11, z7-z3,  z3-z4";

pub const Y3_BODY: &str = "
z8-z5,   z4-z8,   z2-z1,   z4-z6,  z9-z2,  z1-z6;
z5-z9,   z7-z6,   z10-z7,  z9-z2,  z10-z2, z3-z5;
z12-z11, z6-z3,   z11-z2,  z1-z6,  z3-z5,  z12-z5;
z7-z9,   z11-z4,  z7-z12,  z5-z8,  z9-z5,  z11-z12;
z11-z4,  z11-z3,  z8-z10,  z8-z4,  z6-z7,  z3-z6;
z7-z12,  z8-z10,  z8-z1,   z1-z2,  z7-z10, z2-z11";

pub const Q_BODY: &str = "
z7-z9,   z4-z10,  z2-z7,   z10-1,   z8-z4,  z8-z9;
z5-z11,  z11-z3,  z10-z12, z7-z3,   z12-1,  z7-z10;
z12-z4,  z6-z8,   z8-z1,   z11-z12, z11-z1, z4-1;
1-z3,    z9-z5,   z4-z5,   z6-z4,   z9-z3,  z11-z6;
z10-z6,  1-z1,    z3-z6,   z8-z2,   z2-z10, z3-z1;
z1-z2,   z12-z2,  1-z9,    z1-z9,   z7-z5,  z5-z12";

// second printing of Q
pub const Q_BODY_ALT: &str = "
z7-z9,   z4-z10,  z2-z7,   z10-1,   z8-z4,  z8-z9;
z5-z11,  z11-z3,  z10-z12, z7-z3,   z12-1,  z7-z10;
z12-z4,  z6-z8,   z8-z1,   z11-z12, z11-z1, z4-1;
1-z3,    z9-z5,   z4-z5,   z6-z4,   z9-z3,  z11-z6;
z10-z6,  1-z1,    z3-z6,   z8-z2,   z2-z10, z3-z1;
z1-z2,   z12-z2,  1-z9,    z1-z9,   z7-z5,  z5-z12";

pub const ST_BODY: &str = "
z6-z8,   z8-z1,   z12-z4,  z11-z1, z4-1,   z11-z12;
z4-z10,  z2-z7,   z7-z9,   z8-z4,  z8-z9,  z10-1;
z11-z3,  z10-z12, z5-z11,  z12-1,  z7-z10, z7-z3;
z12-z2,  1-z9,    z1-z2,   z7-z5,  z5-z12, z1-z9;
z9-z5,   z4-z5,   1-z3,    z9-z3,  z11-z6, z6-z4;
1-z1,    z3-z6,   z10-z6,  z2-z10, z3-z1,  z8-z2";

pub const TINV_S_BODY: &str = "
z5-z7,   z3-z9,  z10-z2, z11-z1,  z8-z4,   z12-1;
z12-z5,  z6-z11, z1-z3,  z4-1,    z8-z9,   z7-z10;
z9-z1,   z4-z6,  z2-z8,  z11-z12, z10-1,   z7-z3;
z12-z2,  z9-z5,  1-z1,   z8-z6,   z10-z4,  z3-z11;
1-z9,    z4-z5,  z3-z6,  z1-z8,   z7-z2,   z12-z10;
z1-z2,   1-z3,   z10-z6, z4-z12,  z9-z7,   z11-z5";

pub const Q2_BODY: &str = "
z3-z8,  1-z2,   z3-z9,  z11-z12, z8-z11,  1-z9;
z1-z3,  z1-z7,  1-z5,   1-z3,    z8-z4,   z7-z8;
1-z6,   z9-z1,  z9-z11, z11-z7,  1-z1,    z7-z10;
z1-z2,  z2-z5,  z4-1,   z10-z5,  1-z11,   z10-z4;
z10-1,  z9-z5,  z5-z6,  z12-z10, z12-z6,  1-z8;
z6-z2,  z12-1,  z3-z6,  1-z7,    z4-z12,  z4-z2";

pub const Q3_BODY: &str = "
z11-z1,  z12-z8, 1-z1,   z6-z4,  z4-z11,  1-z8;
1-z9,    z8-z9,  z4-z7,  1-z7,   z2-z10,  z10-z8;
z10-z11, 1-z3,   z7-z3,  z12-z7, 1-z11,   z5-z12;
z9-z7,   z2-z9,  z5-1,   z2-z12, z1-z5,   1-z12;
z6-1,    z3-z11, z5-z3,  1-z4,   z5-z4,   z9-z6;
z6-z1,   z2-1,   z1-z8,  z3-z2,  1-z10,   z6-z10";

pub const Q4_BODY: &str = "
z12-z2,  z4-1,   z2-z3,  z6-z4,  1-z7,    z12-z7;
z5-z1,   z4-z5,  z10-1,  z4-z11, z2-z10,  1-z11;
z12-1,   z6-z9,  z10-z6, 1-z8,   z10-z8,  z5-z12;
z9-z7,   z6-1,   z6-z1,  z1-z11, z9-1,    z11-z10;
z2-z9,   z3-z11, z2-1,   z8-z12, z9-z8,   z3-1;
z5-1,    z5-z3,  z1-z8,  z1-1,   z7-z4,   z3-z7";

pub const Q5_BODY: &str = "
z5-z10,  z10-z12, z7-1,   z11-z12, 1-z3,   z11-z7;
z11-1,   z6-z12,  z12-z4, z8-z11,  z8-z4,  1-z1;
z4-z10,  z8-1,    z2-z4,  1-z9,    z7-z8,  z7-z10;
z1-z2,   z10-1,   z6-z2,  z8-z3,   z3-z1,  z6-1;
z2-z5,   z9-z5,   z12-1,  z2-1,    z7-z1,  z1-z9;
z4-1,    z5-z6,   z3-z6,  z9-z3,   z5-1,   z11-z9";

pub const Q6_BODY: &str = "
z4-z6,   z2-z8,  z9-z1,  z10-1,  z7-z3,   z11-z12;
z3-z9,   z10-z2, z5-z7,  z8-z4,  z12-1,   z11-z1;
z6-z11,  z1-z3,  z12-z5, z8-z9,  z7-z10,  z4-1;
1-z3,    z10-z6, z1-z2,  z9-z7,  z11-z5,  z4-z12;
z9-z5,   1-z1,   z12-z2, z10-z4, z3-z11,  z8-z6;
z4-z5,   z3-z6,  1-z9,   z7-z2,  z12-z10, z1-z8";

pub const P4_BODY: &str = "
z7-1,    z2-z7,  z6-z8,  z2-z11, z5-z6,  z8-z11;
z2-z7,   z11-1,  z5-z11, z7-z8,  z5-z8,  z6-z2;
z6-z8,   z5-z11, z8-1,   z2-z5,  z11-z7, z6-z7;
z2-z11,  z7-z8,  z2-z5,  z6-1,   z11-z6, z7-z5;
z5-z6,   z5-z8,  z11-z7, z11-z6, z2-1,   z8-z2;
z8-z11,  z6-z2,  z6-z7,  z7-z5,  z8-z2,  z5-1";

pub const Q3P4_BODY: &str = "
z7-z5,   z2-z9,   z10-z5, z6-z3,   z3-z7,  z10-z9;
z12-z6,  z11-z6,  z5-z3,  z12-z3,  z2-z1,  z1-z11;
z6-z1,   z4-z2,   z8-z2,  z9-z8,   z4-z1,  z5-z9;
z10-z7,  z6-z10,  z4-z3,  z6-z8,   z11-z4, z3-z8;
z10-z1,  z12-z11, z2-z12, z1-z7,   z2-z7,  z8-z10;
z5-z4,   z12-z9,  z4-z8,  z7-z12,  z9-z11, z5-z11";

pub const Q3P4_SQ_BODY: &str = "
z8-z6,   z7-z1,   z12-z7, z6-z3,   z12-z3, z9-z8;
z4-z11,  z7-z2,   z11-z9, z3-z7,   z2-z1,  z4-z1;
z8-z3,   z10-z8,  z11-z5, z10-z9,  z1-z11, z5-z9;
z10-z7,  z10-z1,  z5-z4,  z5-z7,   z6-z12, z1-z6;
z6-z10,  z12-z11, z12-z9, z9-z2,   z6-z11, z2-z4;
z4-z3,   z2-z12,  z4-z8,  z5-z10,  z3-z5,  z2-z8";

pub const P2_BODY: &str = "
1-z1,    z1-z4,   z3-z12, z9-z4,  z12-z10, z9-z3;
z1-z4,   1-z9,    z9-z10, z3-z1,  z3-z10,  z4-z12;
z3-z12,  z9-z10,  1-z3,   z10-z4, z1-z9,   z1-z12;
z9-z4,   z3-z1,   z10-z4, 1-z12,  z12-z9,  z10-z1;
z12-z10, z3-z10,  z1-z9,  z12-z9, 1-z4,    z4-z3;
z9-z3,   z4-z12,  z1-z12, z10-z1, z4-z3,   1-z10";

// QP² = x3 (second printing)
pub const QP2_BODY: &str = "
z12-z3, z6-z5,  z2-z12,  z5-z11, z1-z6,  z1-z3;
z5-z4,  z4-z1,  z2-z6,   z9-z1,  z6-z8,  z9-z2;
z5-z2,  z6-z10, z10-z9,  z3-z5,  z3-z9,  z2-z7;
z2-z8,  z7-z12, z10-z12, z1-z10, z7-z8,  z11-z1;
z12-z4, z5-z7,  z11-z4,  z8-z9,  z9-z12, z11-z7;
z8-z10, z4-z10, z6-z11,  z8-z11, z7-z3,  z3-z4";

pub const QP2_SQ_BODY: &str = "
z1-z10,  z8-z9,  z8-z11, z11-z5, z1-z9,  z5-z3;
z7-z8,   z9-z12, z7-z3,  z6-z1,  z8-z6,  z9-z3;
z11-z1,  z11-z7, z3-z4,  z3-z1,  z2-z9,  z7-z2;
z8-z2,   z4-z12, z10-z8, z12-z3, z5-z4,  z5-z2;
z12-z7,  z7-z5,  z10-z4, z6-z5,  z4-z1,  z6-z10;
z12-z10, z4-z11, z11-z6, z2-z12, z2-z6,  z10-z9";

// Q⁵P² = y3 (second printing)
pub const Q5P2_BODY: &str = "
z8-z5,   z4-z8,   z2-z1,   z4-z6,  z9-z2,  z1-z6;
z5-z9,   z7-z6,   z10-z7,  z9-z2,  z10-z2, z3-z5;
z12-z11, z6-z3,   z11-z2,  z1-z6,  z3-z5,  z12-z5;
z7-z9,   z11-z4,  z7-z12,  z5-z8,  z9-z5,  z11-z12;
z11-z4,  z11-z3,  z8-z10,  z8-z4,  z6-z7,  z3-z6;
z7-z12,  z8-z10,  z8-z1,   z1-z2,  z7-z10, z2-z11";

// PQ²P¹⁰ = y1 (second printing)
pub const Y1_BODY_ALT: &str = "
0,   0,  0,   -z1, 0,   0;
0,   0,  0,   0,   -z9, 0;
0,   0,  0,   0,   0,   -z3;
z12, 0,  0,   0,   0,   0;
0,   z4, 0,   0,   0,   0;
0,   0,  z10, 0,   0,   0";

// Q⁶·PQ²P¹⁰ = x1 (second printing)
pub const X1_BODY_ALT: &str = "
z9-z12, z11-z7, z8-z9,  z7-z5,  z4-z11,  z4-z12;
z7-z3,  z3-z4,  z8-z11, z10-z4, z11-z6,  z10-z8;
z7-z8,  z11-z1, z1-z10, z12-z7, z12-z10, z8-z2;
z8-z6,  z2-z9,  z1-z9,  z4-z1,  z2-z6,   z5-z4;
z9-z3,  z7-z2,  z5-z3,  z6-z10, z10-z9,  z5-z2;
z6-z1,  z3-z1,  z11-z5, z6-z5,  z2-z12,  z12-z3";

pub const P2Q6P8_BODY: &str = "
z8-z5,   z12-z3, z4-z3,  z2-z4,   z12-z5, z10-z2;
z10-z1,  z7-z6,  z4-z1,  z12-z5,  z5-z10, z4-z6;
z10-z9,  z12-z9, z11-z2, z10-z2,  z4-z6,  z6-z12;
z9-z11,  z8-z1,  z11-z3, z5-z8,   z1-z10, z9-z10;
z8-z1,   z3-z8,  z7-z9,  z3-z12,  z6-z7,  z9-z12;
z11-z3,  z7-z9,  z1-z7,  z3-z4,   z1-z4,  z2-z11";

// y2 word (second printing)
pub const Y2_BODY_ALT: &str = "
z7-z6,  z8-z5,  z11-z2, z4-z9,  z12-z1, z10-z3;
z8-z5,  z11-z2, z7-z6,  z12-z1, z10-z3, z4-z9;
z11-z2, z7-z6,  z8-z5,  z10-z3, z4-z9,  z12-z1;
z4-z9,  z12-z1, z10-z3, z6-z7,  z5-z8,  z2-z11;
z12-z1, z10-z3, z4-z9,  z5-z8,  z2-z11, z6-z7;
z10-z3, z4-z9,  z12-z1, z2-z11, z6-z7,  z5-z8";

// x2 word (second printing)
pub const X2_BODY_ALT: &str = "
z9-z10, z5-z8,  z1-z10, z3-z11, z11-z9,  z1-z8;
z9-z12, z3-z12, z6-z7,  z9-z7,  z1-z8,   z8-z3;
z2-z11, z3-z4,  z1-z4,  z7-z1,  z3-z11,  z9-z7;
z2-z10, z4-z2,  z5-z12, z4-z3,  z8-z5,   z12-z3;
z6-z4,  z5-z12, z10-z5, z4-z1,  z10-z1,  z7-z6;
z12-z6, z2-z10, z6-z4,  z11-z2, z10-z9,  z12-z9";

pub const S1_BODY: &str = "
z4-z9,   z12-z1, z10-z3, z5-z8,   z2-z11, z6-z7;
z12-z1,  z10-z3, z4-z9,  z2-z11,  z6-z7,  z5-z8;
z10-z3,  z4-z9,  z12-z1, z6-z7,   z5-z8,  z2-z11;
z5-z8,   z2-z11, z6-z7,  z3-z10,  z9-z4,  z1-z12;
z2-z11,  z6-z7,  z5-z8,  z9-z4,   z1-z12, z3-z10;
z6-z7,   z5-z8,  z2-z11, z1-z12,  z3-z10, z9-z4";

pub const T1_DIAG: &str = "z11, z8, z7, z5, z6, z2";

pub const S2_BODY: &str = "
z10-z3,  z4-z9,  z12-z1, z5-z8,   z2-z11, z6-z7;
z4-z9,   z12-z1, z10-z3, z2-z11,  z6-z7,  z5-z8;
z12-z1,  z10-z3, z4-z9,  z6-z7,   z5-z8,  z2-z11;
z5-z8,   z2-z11, z6-z7,  z9-z4,   z1-z12, z3-z10;
z2-z11,  z6-z7,  z5-z8,  z1-z12,  z3-z10, z9-z4;
z6-z7,   z5-z8,  z2-z11, z3-z10,  z9-z4,  z1-z12";

pub const T2_DIAG: &str = "z8, z7, z11, z2, z5, z6";

pub const R_BODY: &str = "
0, 0, 1, 0, 0, 0;
1, 0, 0, 0, 0, 0;
0, 1, 0, 0, 0, 0;
0, 0, 0, 0, 1, 0;
0, 0, 0, 0, 0, 1;
0, 0, 0, 1, 0, 0";

pub const H_BODY: &str = "
0,  0,  0,  0, 0, 1;
0,  0,  0,  1, 0, 0;
0,  0,  0,  0, 1, 0;
0,  0,  -1, 0, 0, 0;
-1, 0,  0,  0, 0, 0;
0,  -1, 0,  0, 0, 0";

pub const H2_BODY: &str = "
0,  -1, 0,  0,  0,  0;
0,  0,  -1, 0,  0,  0;
-1, 0,  0,  0,  0,  0;
0,  0,  0,  0,  -1, 0;
0,  0,  0,  0,  0,  -1;
0,  0,  0,  -1, 0,  0";

pub const H3_BODY: &str = "
0, 0, 0, -1, 0,  0;
0, 0, 0, 0,  -1, 0;
0, 0, 0, 0,  0,  -1;
1, 0, 0, 0,  0,  0;
0, 1, 0, 0,  0,  0;
0, 0, 1, 0,  0,  0";

pub const PQP2_BODY: &str = "
z8-z5,   z10-z1,  z10-z9, z9-z11,  z8-z1,  z11-z3;
z12-z3,  z7-z6,   z12-z9, z8-z1,   z3-z8,  z7-z9;
z4-z3,   z4-z1,   z11-z2, z11-z3,  z7-z9,  z1-z7;
z2-z4,   z12-z5,  z10-z2, z5-z8,   z3-z12, z3-z4;
z12-z5,  z5-z10,  z4-z6,  z1-z10,  z6-z7,  z1-z4;
z10-z2,  z4-z6,   z6-z12, z9-z10,  z9-z12, z2-z11";

// 3×3 blocks that assemble into S
pub const M3_BODY: &str = "
z1-z12, z3-z10, z9-z4;
z3-z10, z9-z4,  z1-z12;
z9-z4,  z1-z12, z3-z10";

pub const N3_BODY: &str = "
z5-z8,  z2-z11, z6-z7;
z2-z11, z6-z7,  z5-z8;
z6-z7,  z5-z8,  z2-z11";

// row-one entries of 13·(ST)², written the long way and the reduced way
pub const ST2_ROW1_LONG: [&str; 6] = [
    "-2z1-2z2+2z3-2z9+2z10+2z11-z5+z7",
    "-2z2-2z4+2z5-2z7+2z8+2z10-z3+z9",
    "-2+2z3+2z5-2z7-2z9+2z12+z2-z10",
    "2+2z4+2z5-2z7-2z8-2z12+z11-z1",
    "2+2z1+2z3-2z9-2z11-2z12+z8-z4",
    "2z1-2z2+2z4-2z8+2z10-2z11+z12-1",
];

pub const ST2_ROW1_REDUCED: [&str; 6] =
    ["z5-z7", "z3-z9", "z10-z2", "z11-z1", "z8-z4", "z12-1"];

// ── seven-dimensional table ─────────────────────────────────────────────

pub const S7_BODY: &str = "
1, 1,       1,       1,       1,       1,       1;
2, z2+z11,  z9+z4,   z6+z7,   z5+z8,   z3+z10,  z1+z12;
2, z9+z4,   z5+z8,   z1+z12,  z3+z10,  z6+z7,   z2+z11;
2, z6+z7,   z1+z12,  z5+z8,   z2+z11,  z9+z4,   z3+z10;
2, z5+z8,   z3+z10,  z2+z11,  z6+z7,   z1+z12,  z9+z4;
2, z3+z10,  z6+z7,   z9+z4,   z1+z12,  z2+z11,  z5+z8;
2, z1+z12,  z2+z11,  z3+z10,  z9+z4,   z5+z8,   z6+z7";

pub const T7_DIAG: &str = "1, z1, z4, z9, z3, z12, z10";

// ── fourteen-dimensional table (four 7×7 blocks) ────────────────────────

pub const S14_BLOCK1: &str = "
r0,    r1,   r2,    r1,   r3,    r2,    r2;
13r1,  q1,   q2,    q3,   q4,    q5,    q6;
26r2,  2q2,  -q4,   2q6,  2q8,   -q10,  -q12;
13r1,  q3,   q6,    q9,   q12,   q2,    q5;
13r3,  q4,   q8,    q12,  -q3,   q7,    q11;
26r2,  2q5,  -q10,  2q2,  2q7,   -q12,  -q4;
26r2,  2q6,  -q12,  2q5,  2q11,  -q4,   -q10";

pub const S14_BLOCK2: &str = "
r4,   r4,   r1,   r3,    r4,   r3,    rinf;
q7,   q8,   q9,   q10,   q11,  q12,   -13r3;
q1,   q3,   2q5,  2q7,   q9,   2q11,  -26r4;
q8,   q11,  q1,   q4,    q7,   q10,   -13r3;
-q2,  -q6,  q10,  -q1,   -q5,  -q9,   13r1;
q9,   q1,   2q6,  2q11,  q3,   2q8,   -26r4;
q3,   q9,   2q2,  2q8,   q1,   2q7,   -26r4";

pub const S14_BLOCK3: &str = "
26r4,  2q7,   q1,   2q8,   -2q2,  q9,   q3;
26r4,  2q8,   q3,   2q11,  -2q6,  q1,   q9;
13r1,  q9,    q5,   q1,    q10,   q6,   q2;
13r3,  q10,   q7,   q4,    -q1,   q11,  q8;
26r4,  2q11,  q9,   2q7,   -2q5,  q3,   q1;
13r3,  q12,   q11,  q10,   -q9,   q8,   q7;
rinf,  -r3,   -r4,  -r3,   r1,    -r4,  -r4";

pub const S14_BLOCK4: &str = "
q10,  q4,   2q11,  -2q5,  q12,  -2q6,  26r2;
q4,   q12,  2q7,   -2q2,  q10,  -2q5,  26r2;
q11,  q7,   q3,    q12,   q8,   q4,    -13r3;
-q5,  -q2,  q12,   -q9,   -q6,  -q3,   13r1;
q12,  q10,  2q8,   -2q6,  q4,   -2q2,  26r2;
-q6,  -q5,  q4,    -q3,   -q2,  -q1,   13r1;
r2,   r2,   -r3,   r1,    r2,   r1,    -r0";

pub const T14_DIAG: &str = "1, z1, z2, z3, z4, z5, z6, z7, z8, z9, z10, z11, z12, 1";

/// The printed 14×14 matrix for the action on the cubic-form basis,
/// assembled from its four blocks with the `−1/(13√13)` prefactor.
pub fn s14_printed() -> ProjMatrix {
    let b1 = parse_matrix(7, Scale::One, S14_BLOCK1);
    let b2 = parse_matrix(7, Scale::One, S14_BLOCK2);
    let b3 = parse_matrix(7, Scale::One, S14_BLOCK3);
    let b4 = parse_matrix(7, Scale::One, S14_BLOCK4);
    let f = Scale::NegInv13Sqrt13.factor();
    let mut entries = Vec::with_capacity(14 * 14);
    for i in 0..14 {
        for j in 0..14 {
            let v = match (i < 7, j < 7) {
                (true, true) => b1.get(i, j),
                (true, false) => b2.get(i, j - 7),
                (false, true) => b3.get(i - 7, j),
                (false, false) => b4.get(i - 7, j - 7),
            };
            entries.push(v * &f);
        }
    }
    ProjMatrix::new(14, entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entry_parser_handles_all_forms() {
        assert_eq!(parse_entry("0").unwrap(), CycloNum::zero(13));
        assert_eq!(parse_entry("2").unwrap(), CycloNum::integer(2));
        assert_eq!(parse_entry("-1").unwrap(), CycloNum::integer(-1));
        assert_eq!(
            parse_entry("z12-z1").unwrap(),
            CycloNum::root(13, 12) - CycloNum::root(13, 1)
        );
        assert_eq!(
            parse_entry("1-z9").unwrap(),
            CycloNum::one(13) - CycloNum::root(13, 9)
        );
        assert_eq!(parse_entry("-z1").unwrap(), -CycloNum::zeta(13));
        assert_eq!(
            parse_entry("26r2").unwrap(),
            r2().scale(&Rat::from(BigInt::from(26)))
        );
        assert_eq!(
            parse_entry("-2q5").unwrap(),
            q(5).scale(&Rat::from(BigInt::from(-2)))
        );
        assert_eq!(parse_entry("rinf").unwrap(), r_inf());
        assert!(parse_entry("zilch").is_err());
    }
}
