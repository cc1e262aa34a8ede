//! The invariant-form families: the three triality-related families of
//! senary quadratics, the fourteen senary cubics, the senary sextics built
//! from them, the invariant quartic, the degree-14 root systems, and the
//! degree-12 invariant.

use super::{act, int_scale, Monomial, MultiPoly, NVARS};
use crate::cyclo::constants::sqrt13;
use crate::cyclo::CycloNum;
use crate::matrep::catalog::Catalog;
use crate::par::Mode;

fn mono(c: i64, exps: [u8; NVARS]) -> MultiPoly {
    MultiPoly::term(CycloNum::integer(c), exps)
}

/// `A0 … A6`: the quadratic family attached to `(S, T)`.
pub fn a_form(i: usize) -> MultiPoly {
    match i {
        0 => mono(1, [1, 0, 0, 1, 0, 0])
            .add(&mono(1, [0, 1, 0, 0, 1, 0]))
            .add(&mono(1, [0, 0, 1, 0, 0, 1])),
        1 => mono(1, [2, 0, 0, 0, 0, 0]).add(&mono(-2, [0, 0, 1, 1, 0, 0])),
        2 => mono(-1, [0, 0, 0, 0, 2, 0]).add(&mono(-2, [0, 1, 0, 1, 0, 0])),
        3 => mono(1, [0, 2, 0, 0, 0, 0]).add(&mono(-2, [1, 0, 0, 0, 1, 0])),
        4 => mono(1, [0, 0, 2, 0, 0, 0]).add(&mono(-2, [0, 1, 0, 0, 0, 1])),
        5 => mono(-1, [0, 0, 0, 2, 0, 0]).add(&mono(-2, [1, 0, 0, 0, 0, 1])),
        6 => mono(-1, [0, 0, 0, 0, 0, 2]).add(&mono(-2, [0, 0, 1, 0, 1, 0])),
        _ => panic!("A index must be 0..=6"),
    }
}

/// `B0 … B6`: the quadratic family attached to `(S1, T1)`.
pub fn b_form(i: usize) -> MultiPoly {
    match i {
        0 => mono(1, [1, 0, 0, 0, 0, 1])
            .add(&mono(1, [0, 1, 0, 1, 0, 0]))
            .add(&mono(1, [0, 0, 1, 0, 1, 0])),
        1 => mono(1, [0, 0, 2, 0, 0, 0]).add(&mono(-2, [0, 1, 0, 0, 1, 0])),
        2 => mono(-1, [0, 0, 0, 0, 0, 2]).add(&mono(-2, [1, 0, 0, 0, 1, 0])),
        3 => mono(1, [2, 0, 0, 0, 0, 0]).add(&mono(-2, [0, 0, 1, 0, 0, 1])),
        4 => mono(1, [0, 2, 0, 0, 0, 0]).add(&mono(-2, [1, 0, 0, 1, 0, 0])),
        5 => mono(-1, [0, 0, 0, 0, 2, 0]).add(&mono(-2, [0, 0, 1, 1, 0, 0])),
        6 => mono(-1, [0, 0, 0, 2, 0, 0]).add(&mono(-2, [0, 1, 0, 0, 0, 1])),
        _ => panic!("B index must be 0..=6"),
    }
}

/// `C0 … C6`: the quadratic family attached to `(S2, T2)`.
pub fn c_form(i: usize) -> MultiPoly {
    match i {
        0 => mono(1, [1, 0, 0, 0, 1, 0])
            .add(&mono(1, [0, 1, 0, 0, 0, 1]))
            .add(&mono(1, [0, 0, 1, 1, 0, 0])),
        1 => mono(1, [0, 2, 0, 0, 0, 0]).add(&mono(-2, [1, 0, 0, 0, 0, 1])),
        2 => mono(-1, [0, 0, 0, 2, 0, 0]).add(&mono(-2, [0, 0, 1, 0, 0, 1])),
        3 => mono(1, [0, 0, 2, 0, 0, 0]).add(&mono(-2, [0, 1, 0, 1, 0, 0])),
        4 => mono(1, [2, 0, 0, 0, 0, 0]).add(&mono(-2, [0, 0, 1, 0, 1, 0])),
        5 => mono(-1, [0, 0, 0, 0, 0, 2]).add(&mono(-2, [0, 1, 0, 0, 1, 0])),
        6 => mono(-1, [0, 0, 0, 0, 2, 0]).add(&mono(-2, [1, 0, 0, 1, 0, 0])),
        _ => panic!("C index must be 0..=6"),
    }
}

/// `D0 … D12, D∞` (index 13 = ∞): the cubic family carrying the
/// 14-dimensional representation.
pub fn d_form(i: usize) -> MultiPoly {
    match i {
        0 => mono(1, [1, 1, 1, 0, 0, 0]),
        1 => mono(2, [0, 1, 2, 0, 0, 0])
            .add(&mono(1, [0, 2, 0, 0, 0, 1]))
            .add(&mono(-1, [0, 0, 0, 2, 1, 0]))
            .add(&mono(1, [1, 0, 0, 0, 1, 1])),
        2 => mono(-1, [0, 0, 0, 0, 0, 3])
            .add(&mono(1, [0, 2, 0, 1, 0, 0]))
            .add(&mono(-2, [0, 1, 0, 0, 2, 0]))
            .add(&mono(1, [1, 0, 0, 1, 1, 0]))
            .add(&mono(3, [0, 0, 1, 0, 1, 1])),
        3 => mono(2, [1, 2, 0, 0, 0, 0])
            .add(&mono(1, [2, 0, 0, 0, 1, 0]))
            .add(&mono(-1, [0, 0, 0, 1, 0, 2]))
            .add(&mono(1, [0, 0, 1, 1, 1, 0])),
        4 => mono(-1, [0, 2, 1, 0, 0, 0])
            .add(&mono(1, [1, 0, 0, 0, 0, 2]))
            .add(&mono(-2, [0, 0, 0, 2, 0, 1]))
            .add(&mono(-1, [1, 0, 1, 0, 1, 0])),
        5 => mono(-1, [0, 0, 0, 3, 0, 0])
            .add(&mono(1, [0, 0, 2, 0, 1, 0]))
            .add(&mono(-2, [0, 0, 1, 0, 0, 2]))
            .add(&mono(1, [0, 1, 0, 0, 1, 1]))
            .add(&mono(3, [1, 0, 0, 1, 0, 1])),
        6 => mono(-1, [0, 0, 0, 0, 3, 0])
            .add(&mono(1, [2, 0, 0, 0, 0, 1]))
            .add(&mono(-2, [1, 0, 0, 2, 0, 0]))
            .add(&mono(1, [0, 0, 1, 1, 0, 1]))
            .add(&mono(3, [0, 1, 0, 1, 1, 0])),
        7 => mono(-1, [0, 3, 0, 0, 0, 0])
            .add(&mono(1, [0, 0, 1, 2, 0, 0]))
            .add(&mono(-1, [1, 0, 1, 0, 0, 1]))
            .add(&mono(-3, [1, 1, 0, 0, 1, 0]))
            .add(&mono(2, [2, 0, 0, 1, 0, 0])),
        8 => mono(-1, [3, 0, 0, 0, 0, 0])
            .add(&mono(1, [0, 1, 0, 0, 0, 2]))
            .add(&mono(-1, [0, 1, 1, 0, 1, 0]))
            .add(&mono(-3, [1, 0, 1, 1, 0, 0]))
            .add(&mono(2, [0, 0, 2, 0, 0, 1])),
        9 => mono(2, [2, 0, 1, 0, 0, 0])
            .add(&mono(1, [0, 0, 2, 1, 0, 0]))
            .add(&mono(-1, [0, 0, 0, 0, 2, 1]))
            .add(&mono(1, [0, 1, 0, 1, 0, 1])),
        10 => mono(-1, [1, 0, 2, 0, 0, 0])
            .add(&mono(1, [0, 1, 0, 2, 0, 0]))
            .add(&mono(-2, [0, 0, 0, 1, 2, 0]))
            .add(&mono(-1, [1, 1, 0, 0, 0, 1])),
        11 => mono(-1, [0, 0, 3, 0, 0, 0])
            .add(&mono(1, [1, 0, 0, 0, 2, 0]))
            .add(&mono(-1, [1, 1, 0, 1, 0, 0]))
            .add(&mono(-3, [0, 1, 1, 0, 0, 1]))
            .add(&mono(2, [0, 2, 0, 0, 1, 0])),
        12 => mono(-1, [2, 1, 0, 0, 0, 0])
            .add(&mono(1, [0, 0, 1, 0, 2, 0]))
            .add(&mono(-2, [0, 0, 0, 0, 1, 2]))
            .add(&mono(-1, [0, 1, 1, 1, 0, 0])),
        13 => mono(1, [0, 0, 0, 1, 1, 1]),
        _ => panic!("D index must be 0..=13 (13 = ∞)"),
    }
}

pub fn d_basis() -> Vec<MultiPoly> {
    (0..14).map(d_form).collect()
}

pub fn a_basis() -> Vec<MultiPoly> {
    (0..7).map(a_form).collect()
}

/// `G0 … G12`: the printed sextic quadratic expressions in the cubics,
/// expanded into monomials in `z`.
pub fn g_form(i: usize) -> MultiPoly {
    let d = d_basis();
    let dd = |a: usize, b: usize, c: i64| int_scale(&d[a].mul(&d[b]), c);
    let sq = |a: usize, c: i64| int_scale(&d[a].square(), c);
    match i {
        0 => d[0].square().add(&d[13].square()),
        1 => sq(7, -1)
            .add(&dd(0, 1, 2))
            .add(&dd(13, 1, 10))
            .add(&dd(2, 12, 2))
            .add(&dd(3, 11, -2))
            .add(&dd(4, 10, -4))
            .add(&dd(9, 5, -2)),
        2 => sq(1, -2)
            .add(&dd(0, 2, -4))
            .add(&dd(13, 2, 6))
            .add(&dd(4, 11, -2))
            .add(&dd(5, 10, 2))
            .add(&dd(6, 9, -2))
            .add(&dd(7, 8, -2)),
        3 => sq(8, -1)
            .add(&dd(0, 3, 2))
            .add(&dd(13, 3, 10))
            .add(&dd(6, 10, 2))
            .add(&dd(9, 7, -2))
            .add(&dd(12, 4, -4))
            .add(&dd(1, 2, -2)),
        4 => sq(2, -1)
            .add(&dd(0, 4, 10))
            .add(&dd(13, 4, -2))
            .add(&dd(5, 12, 2))
            .add(&dd(9, 8, -2))
            .add(&dd(1, 3, -4))
            .add(&dd(10, 7, -2)),
        5 => sq(9, -2)
            .add(&dd(0, 5, -4))
            .add(&dd(13, 5, 6))
            .add(&dd(10, 8, -2))
            .add(&dd(6, 12, 2))
            .add(&dd(2, 3, -2))
            .add(&dd(11, 7, -2)),
        6 => sq(3, -2)
            .add(&dd(0, 6, -4))
            .add(&dd(13, 6, 6))
            .add(&dd(12, 7, -2))
            .add(&dd(2, 4, 2))
            .add(&dd(5, 1, -2))
            .add(&dd(8, 11, -2)),
        7 => sq(10, -2)
            .add(&dd(0, 7, 6))
            .add(&dd(13, 7, 4))
            .add(&dd(1, 6, -2))
            .add(&dd(2, 5, -2))
            .add(&dd(8, 12, -2))
            .add(&dd(9, 11, -2)),
        8 => sq(4, -2)
            .add(&dd(0, 8, 6))
            .add(&dd(13, 8, 4))
            .add(&dd(3, 5, -2))
            .add(&dd(6, 2, -2))
            .add(&dd(11, 10, -2))
            .add(&dd(1, 7, -2)),
        9 => sq(11, -1)
            .add(&dd(0, 9, 2))
            .add(&dd(13, 9, 10))
            .add(&dd(5, 4, 2))
            .add(&dd(1, 8, -2))
            .add(&dd(10, 12, -4))
            .add(&dd(3, 6, -2)),
        10 => sq(5, -1)
            .add(&dd(0, 10, 10))
            .add(&dd(13, 10, -2))
            .add(&dd(6, 4, 2))
            .add(&dd(3, 7, -2))
            .add(&dd(9, 1, -4))
            .add(&dd(12, 11, -2)),
        11 => sq(12, -2)
            .add(&dd(0, 11, 6))
            .add(&dd(13, 11, 4))
            .add(&dd(9, 2, -2))
            .add(&dd(5, 6, -2))
            .add(&dd(7, 4, -2))
            .add(&dd(3, 8, -2)),
        12 => sq(6, -1)
            .add(&dd(0, 12, 10))
            .add(&dd(13, 12, -2))
            .add(&dd(2, 10, 2))
            .add(&dd(1, 11, -2))
            .add(&dd(3, 9, -4))
            .add(&dd(4, 8, -2)),
        _ => panic!("G index must be 0..=12"),
    }
}

pub fn g_basis() -> Vec<MultiPoly> {
    (0..13).map(g_form).collect()
}

/// The invariant quadric-in-A (a quartic in `z`):
/// `L = A0² + A1·A5 + A2·A3 + A4·A6`.
pub fn l_form() -> MultiPoly {
    let a: Vec<MultiPoly> = a_basis();
    a[0].square()
        .add(&a[1].mul(&a[5]))
        .add(&a[2].mul(&a[3]))
        .add(&a[4].mul(&a[6]))
}

/// The printed quartic expansion of `L`:
/// `2[(z3z4³ + z1z5³ + z2z6³) − (z6z1³ + z4z2³ + z5z3³)
///   + 3(z1z2z4z5 + z2z3z5z6 + z3z1z6z4)]`.
pub fn l_quartic_printed() -> MultiPoly {
    let plus = mono(1, [0, 0, 1, 3, 0, 0])
        .add(&mono(1, [1, 0, 0, 0, 3, 0]))
        .add(&mono(1, [0, 1, 0, 0, 0, 3]));
    let minus = mono(1, [3, 0, 0, 0, 0, 1])
        .add(&mono(1, [0, 3, 0, 1, 0, 0]))
        .add(&mono(1, [0, 0, 3, 0, 1, 0]));
    let triple = mono(1, [1, 1, 0, 1, 1, 0])
        .add(&mono(1, [0, 1, 1, 0, 1, 1]))
        .add(&mono(1, [1, 0, 1, 1, 0, 1]));
    int_scale(&plus.sub(&minus).add(&int_scale(&triple, 3)), 2)
}

/// `φ_∞ = √13·A0`.
pub fn phi_inf() -> MultiPoly {
    a_form(0).scale(&sqrt13())
}

/// The quadratic-residue exponent pattern of the degree-7 expansions:
/// `k² mod 13` for `k = 1..6`.
pub const NU_EXPONENTS: [i64; 6] = [1, 4, 9, 3, 12, 10];

/// `φ_ν = A0 + Σ_k ζ^{k²·ν}·A_k` (the expansion the action produces).
pub fn phi_nu(nu: i64) -> MultiPoly {
    family_nu(&a_basis(), nu)
}

/// The same expansion shape over any 7-form family.
pub fn family_nu(family: &[MultiPoly], nu: i64) -> MultiPoly {
    let mut acc = family[0].clone();
    for (k, &e) in NU_EXPONENTS.iter().enumerate() {
        acc = acc.add(&family[k + 1].scale(&CycloNum::root(13, e * nu)));
    }
    acc
}

/// `δ_∞ = 13²·(z1²z2²z3² + z4²z5²z6²)`.
pub fn delta_inf() -> MultiPoly {
    int_scale(
        &mono(1, [2, 2, 2, 0, 0, 0]).add(&mono(1, [0, 0, 0, 2, 2, 2])),
        169,
    )
}

/// `δ_ν = δ_∞ ∘ (S·T^ν)`.
pub fn delta_nu(cat: &Catalog, nu: i64, mode: Mode) -> MultiPoly {
    let stnu = cat.s.mul(&cat.t.pow(nu.rem_euclid(13) as u64));
    act(&stnu, &delta_inf(), mode)
}

/// The degree-12 invariant
/// `M = 7·13²·G0² + G1·G12 + G2·G11 + … + G6·G7`.
pub fn m_form() -> MultiPoly {
    let g = g_basis();
    let mut acc = int_scale(&g[0].square(), 7 * 169);
    for k in 1..=6 {
        acc = acc.add(&g[k].mul(&g[13 - k]));
    }
    acc
}

/// Named lookup for the dump interface.
pub fn form_by_name(name: &str) -> Option<MultiPoly> {
    let idx = |prefix: &str| -> Option<usize> {
        name.strip_prefix(prefix).and_then(|s| s.parse().ok())
    };
    match name {
        "L" => return Some(l_form()),
        "M" => return Some(m_form()),
        "phi_inf" => return Some(phi_inf()),
        "delta_inf" => return Some(delta_inf()),
        "Dinf" => return Some(d_form(13)),
        _ => {}
    }
    if let Some(i) = idx("A") {
        if i <= 6 {
            return Some(a_form(i));
        }
    }
    if let Some(i) = idx("B") {
        if i <= 6 {
            return Some(b_form(i));
        }
    }
    if let Some(i) = idx("C") {
        if i <= 6 {
            return Some(c_form(i));
        }
    }
    if let Some(i) = idx("D") {
        if i <= 12 {
            return Some(d_form(i));
        }
    }
    if let Some(i) = idx("G") {
        if i <= 12 {
            return Some(g_form(i));
        }
    }
    None
}

pub fn form_names() -> Vec<String> {
    let mut names = Vec::new();
    for i in 0..7 {
        names.push(format!("A{i}"));
    }
    for i in 0..7 {
        names.push(format!("B{i}"));
    }
    for i in 0..7 {
        names.push(format!("C{i}"));
    }
    for i in 0..13 {
        names.push(format!("D{i}"));
    }
    names.push("Dinf".into());
    for i in 0..13 {
        names.push(format!("G{i}"));
    }
    names.extend(["L".into(), "M".into(), "phi_inf".into(), "delta_inf".into()]);
    names
}

/// The reordered 7-basis used by the modular-data comparison:
/// `(A0, A6, A1, A5, A2, A4, A3)`.
pub fn a_basis_haagerup_order() -> Vec<MultiPoly> {
    [0usize, 6, 1, 5, 2, 4, 3].iter().map(|&i| a_form(i)).collect()
}

/// Convenience monomial builder shared with tests.
pub fn z_mono(c: i64, exps: [u8; NVARS]) -> MultiPoly {
    mono(c, exps)
}

/// Assert-free accessor used by `verify`: the coefficient pattern of the
/// cubic-family expansion `−13√13·ST^ν(D0) = r0·D0 + Σ r_{type(k)}·ζ^{kν}·D_k
/// + r∞·D∞`, as the list of radical tags for `D1..D12`.
pub const D_ROW_RADICALS: [usize; 12] = [1, 2, 1, 3, 2, 2, 4, 4, 1, 3, 4, 3];

/// Monomial count of the full degree-12 space in six variables.
pub const DEGREE12_MONOMIALS: usize = 6188;

#[allow(unused_imports)]
use Monomial as _MonomialUsed;
