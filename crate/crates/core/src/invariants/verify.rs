//! The identity certifications over the form families: structure of the
//! quadratic family under the group action, triality of the induced
//! 7-dimensional matrices, the degree-14 duality of squared forms, the
//! degree-14 root-system coefficients, the sextic expansion identities, the
//! degree-12 invariant, the modular-data comparison, and the degree-14
//! factorizations over `Q(√13)`.

use super::forms::{
    a_basis, a_basis_haagerup_order, a_form, b_form, c_form, d_basis, delta_inf, delta_nu,
    family_nu, g_basis, l_form, l_quartic_printed, m_form, phi_inf, D_ROW_RADICALS,
    DEGREE12_MONOMIALS, NU_EXPONENTS,
};
use super::{act, act_many, grid_diff, grid_mul, grid_trace, grids_equal, induced_matrix, int_scale, MultiPoly};
use crate::cyclo::constants::{p as p_const, r0, r1, r2, r3, r4, r_inf, sqrt13};
use crate::cyclo::{CFixed, CycloNum, Embedder, Rat};
use crate::matrep::catalog::Catalog;
use crate::matrep::tables;
use crate::par::{self, Mode};
use crate::rng::SplitMix64;
use num_bigint::BigInt;
use std::collections::BTreeSet;

/// Outcome of one verified statement.
#[derive(Clone, Debug)]
pub enum Finding {
    Pass,
    Fail(String),
    /// The derived value disagrees with a printed claim; the derivation is
    /// sound and the difference is preserved.
    Documented(String),
}

#[derive(Clone, Debug)]
pub struct Item {
    pub claim: String,
    pub finding: Finding,
}

impl Item {
    pub fn pass(claim: impl Into<String>) -> Item {
        Item { claim: claim.into(), finding: Finding::Pass }
    }

    pub fn verify(claim: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Item {
        Item {
            claim: claim.into(),
            finding: if ok { Finding::Pass } else { Finding::Fail(witness()) },
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self.finding, Finding::Pass)
    }
}

fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Probe the action convention: under `act(g, f)(z) = f(g·z)` the
/// seven-term expansion of `√13·(S·T^ν)(A0)` must hold; if it did not, the
/// transpose convention would be reported instead.
pub fn action_convention(cat: &Catalog, mode: Mode) -> Item {
    let a0 = a_form(0);
    let direct = act(&cat.s, &a0, mode).scale(&sqrt13());
    let expected = family_nu(&a_basis(), 0);
    if direct == expected {
        return Item::pass("action convention: act(g, f)(z) = f(g·z) reproduces the printed expansions");
    }
    let transposed = act(&cat.s.transpose(), &a0, mode).scale(&sqrt13());
    if transposed == expected {
        Item {
            claim: "action convention probe".into(),
            finding: Finding::Documented(
                "the transpose convention f(gᵀ·z) reproduces the printed expansions".into(),
            ),
        }
    } else {
        Item::verify("action convention probe", false, || {
            "neither f(g·z) nor f(gᵀ·z) reproduces the expansion of √13·S(A0)".into()
        })
    }
}

/// The structure of the quadratic family: the `ν`-expansions, the six
/// printed rows of `13·S(A_k)`, and the invariance of `A0²` under the
/// index-14 maximal subgroup.
pub fn verify_a_structure(cat: &Catalog, mode: Mode) -> Vec<Item> {
    let mut out = vec![action_convention(cat, mode)];
    let basis = a_basis();
    // √13·(S·T^ν)(A0) = A0 + Σ ζ^{k²ν} A_k for every ν mod 13.
    let nu_items = par::map_range(mode, 0..13, |nu| {
        let stnu = cat.s.mul(&cat.t.pow(nu as u64));
        let lhs = act(&stnu, &a_form(0), Mode::Sequential).scale(&sqrt13());
        let rhs = family_nu(&basis, nu as i64);
        Item::verify(
            format!("√13·(S·T^{nu})(A0) expands over the quadratic family"),
            lhs == rhs,
            || "expansion mismatch".into(),
        )
    });
    out.extend(nu_items);
    // ν and ν+13 give identical right-hand sides.
    out.push(Item::verify(
        "the expansion at ν and ν+13 coincide",
        family_nu(&basis, 3) == family_nu(&basis, 16),
        || "ζ^13 ≠ 1?".into(),
    ));
    // The six rows 13·S(A_k) = 2√13·A0 + Σ p_σ(k,j)·A_j.
    let p_rows: [[usize; 6]; 6] = [
        [1, 2, 3, 4, 5, 6],
        [2, 4, 6, 5, 3, 1],
        [3, 6, 4, 1, 2, 5],
        [4, 5, 1, 3, 6, 2],
        [5, 3, 2, 6, 1, 4],
        [6, 1, 5, 2, 4, 3],
    ];
    let transformed = act_many(&cat.s, &basis, mode);
    for k in 1..=6 {
        let lhs = int_scale(&transformed[k], 13);
        let mut rhs = basis[0].scale(&sqrt13()).scale_rat(&rat(2, 1));
        for (j, &pi) in p_rows[k - 1].iter().enumerate() {
            rhs = rhs.add(&basis[j + 1].scale(&p_const(pi)));
        }
        out.push(Item::verify(
            format!("13·S(A{k}) = 2√13·A0 + Σ p·A row"),
            lhs == rhs,
            || "row mismatch".into(),
        ));
    }
    // A0² is fixed by the maximal subgroup generators H and T.
    let a0sq = a_form(0).square();
    out.push(Item::verify(
        "A0² is invariant under H",
        act(&cat.h, &a0sq, mode) == a0sq,
        || "H moves A0²".into(),
    ));
    out.push(Item::verify(
        "A0² is invariant under T",
        act(&cat.t, &a0sq, mode) == a0sq,
        || "T moves A0²".into(),
    ));
    out
}

/// Induced 7-dimensional matrices on the quadratic family, compared with
/// the printed tables, plus trace values and exact multiplicativity.
pub fn verify_induced7(cat: &Catalog, mode: Mode) -> Vec<Item> {
    let basis = a_basis();
    let mut out = Vec::new();
    let s7 = match induced_matrix(&cat.s, &basis, mode) {
        Ok(m) => m,
        Err(e) => {
            return vec![Item::verify("the quadratic family spans an S-invariant space", false, || e.to_string())];
        }
    };
    let t7 = induced_matrix(&cat.t, &basis, mode).expect("diagonal action");
    let s7_printed = tables::parse_matrix(7, tables::Scale::InvSqrt13, tables::S7_BODY);
    let t7_printed = tables::parse_diag_grid(7, tables::T7_DIAG);
    out.push(Item::verify(
        "the derived 7-dimensional S-matrix equals its printed table",
        grids_equal(&s7, s7_printed.entries()),
        || format!("differs at {:?}", grid_diff(7, &s7, s7_printed.entries())),
    ));
    out.push(Item::verify(
        "the derived 7-dimensional T-matrix is diag(1, ζ, ζ⁴, ζ⁹, ζ³, ζ¹², ζ¹⁰)",
        grids_equal(&t7, &t7_printed),
        || format!("differs at {:?}", grid_diff(7, &t7, &t7_printed)),
    ));
    out.push(Item::verify(
        "identity induces the identity on the cubic family",
        {
            let id14 = induced_matrix(&crate::matrep::ProjMatrix::identity(6), &d_basis(), mode).unwrap();
            grids_equal(&id14, crate::matrep::ProjMatrix::identity(14).entries())
        },
        || "identity action failed".into(),
    ));
    // Traces: (−1, (1+√13)/2, 1).
    let st7 = induced_matrix(&cat.s.mul(&cat.t), &basis, mode).unwrap();
    let half = rat(1, 2);
    out.push(Item::verify(
        "induced traces are (−1, (1+√13)/2, 1)",
        grid_trace(7, &s7) == CycloNum::integer(-1)
            && grid_trace(7, &t7) == (CycloNum::one(13) + sqrt13()).scale(&half)
            && grid_trace(7, &st7) == CycloNum::one(13),
        || format!(
            "got ({}, {}, {})",
            grid_trace(7, &s7).to_text(),
            grid_trace(7, &t7).to_text(),
            grid_trace(7, &st7).to_text()
        ),
    ));
    // Exact multiplicativity: induced(g)·induced(h) = induced(g·h) on the
    // generators and on seeded random words; S̃² is the identity.
    out.push(Item::verify(
        "induced(S)·induced(T) = induced(S·T) exactly",
        grids_equal(&grid_mul(7, &s7, &t7), &st7),
        || "induced multiplication mismatch".into(),
    ));
    let id7: Vec<CycloNum> = crate::matrep::ProjMatrix::identity(7).entries().to_vec();
    out.push(Item::verify(
        "induced(S)² is the identity",
        grids_equal(&grid_mul(7, &s7, &s7), &id7),
        || "S̃² ≠ 1".into(),
    ));
    let mut rng = SplitMix64::derive(0, "induced7/words");
    for w in 0..3 {
        let len = 3 + (rng.below(3) as usize);
        let mut mat = crate::matrep::ProjMatrix::identity(6);
        let mut grid = id7.clone();
        for _ in 0..len {
            let (g, ig) = if rng.below(2) == 0 {
                (cat.s.clone(), s7.clone())
            } else {
                (cat.t.clone(), t7.clone())
            };
            mat = mat.mul(&g);
            grid = grid_mul(7, &grid, &ig);
        }
        let direct = induced_matrix(&mat, &basis, mode).unwrap();
        out.push(Item::verify(
            format!("induced multiplicativity on random word #{w}"),
            grids_equal(&grid, &direct),
            || "word mismatch".into(),
        ));
    }
    out
}

/// Triality: the second and third quadratic families are the first with
/// variables permuted, their `ν`-expansions hold, and all three induce the
/// same 7-dimensional matrices.
pub fn verify_triality(cat: &Catalog, mode: Mode) -> Vec<Item> {
    let mut out = Vec::new();
    for i in 0..7 {
        out.push(Item::verify(
            format!("B{i} = A{i} with variables permuted by R"),
            act(&cat.r, &a_form(i), mode) == b_form(i),
            || "R-permutation mismatch".into(),
        ));
        out.push(Item::verify(
            format!("C{i} = A{i} with variables permuted by R²"),
            act(&cat.r.pow(2), &a_form(i), mode) == c_form(i),
            || "R²-permutation mismatch".into(),
        ));
    }
    let b: Vec<MultiPoly> = (0..7).map(b_form).collect();
    let c: Vec<MultiPoly> = (0..7).map(c_form).collect();
    let nu_items = par::map_range(mode, 0..13, |nu| {
        let s1t1 = cat.s1.mul(&cat.t1.pow(nu as u64));
        let lhs = act(&s1t1, &b_form(0), Mode::Sequential).scale(&sqrt13());
        let ok_b = lhs == family_nu(&b, nu as i64);
        let s2t2 = cat.s2.mul(&cat.t2.pow(nu as u64));
        let lhs2 = act(&s2t2, &c_form(0), Mode::Sequential).scale(&sqrt13());
        let ok_c = lhs2 == family_nu(&c, nu as i64);
        Item::verify(
            format!("the ν = {nu} expansions of the second and third families"),
            ok_b && ok_c,
            || "family expansion mismatch".into(),
        )
    });
    out.extend(nu_items);
    // Same induced matrices for all three pairs.
    let a = a_basis();
    let s7 = induced_matrix(&cat.s, &a, mode).unwrap();
    let t7 = induced_matrix(&cat.t, &a, mode).unwrap();
    let s7_b = induced_matrix(&cat.s1, &b, mode).unwrap();
    let t7_b = induced_matrix(&cat.t1, &b, mode).unwrap();
    let s7_c = induced_matrix(&cat.s2, &c, mode).unwrap();
    let t7_c = induced_matrix(&cat.t2, &c, mode).unwrap();
    out.push(Item::verify(
        "the second pair induces the same 7-dimensional matrices",
        grids_equal(&s7_b, &s7) && grids_equal(&t7_b, &t7),
        || "triality mismatch on the second family".into(),
    ));
    out.push(Item::verify(
        "the third pair induces the same 7-dimensional matrices",
        grids_equal(&s7_c, &s7) && grids_equal(&t7_c, &t7),
        || "triality mismatch on the third family".into(),
    ));
    out
}

/// The seven-row expansion tables of `√13·Q^ν(A0)` and `√13·y·Q^ν(A0)`.
/// Row data: overall sign then the seven ζ-exponents (A0 carries ζ⁰).
type ExpansionRow = (i64, [i64; 6]);

const Q_ROWS: [ExpansionRow; 7] = [
    (1, [0, 0, 0, 0, 0, 0]), // ν=0: √13·A0? no — handled specially below
    (1, [3, 12, 1, 9, 10, 4]),
    (1, [7, 2, 11, 8, 6, 5]),
    (-1, [1, 4, 9, 3, 12, 10]),
    (-1, [2, 8, 5, 6, 11, 7]),
    (1, [9, 10, 3, 1, 4, 12]),
    (1, [0, 0, 0, 0, 0, 0]),
];

const Y3Q_ROWS: [ExpansionRow; 7] = [
    (-1, [8, 6, 7, 11, 5, 2]),
    (1, [11, 5, 8, 7, 2, 6]),
    (-1, [10, 1, 12, 4, 3, 9]),
    (-1, [12, 9, 4, 10, 1, 3]),
    (-1, [4, 3, 10, 12, 9, 1]),
    (-1, [6, 11, 2, 5, 7, 8]),
    (1, [5, 7, 6, 2, 8, 11]),
];

const Y1Q_ROWS: [ExpansionRow; 7] = [
    (-1, [0, 0, 0, 0, 0, 0]), // y1(A0) = −A0 exactly (no √13)
    (-1, [3, 12, 1, 9, 10, 4]),
    (-1, [7, 2, 11, 8, 6, 5]),
    (1, [1, 4, 9, 3, 12, 10]),
    (1, [2, 8, 5, 6, 11, 7]),
    (-1, [9, 10, 3, 1, 4, 12]),
    (-1, [0, 0, 0, 0, 0, 0]),
];

const Y2Q_ROWS: [ExpansionRow; 7] = [
    (-1, [0, 0, 0, 0, 0, 0]),
    (-1, [0, 0, 0, 0, 0, 0]), // y2·Q(A0) = −A0 exactly (no √13)
    (-1, [3, 12, 1, 9, 10, 4]),
    (-1, [7, 2, 11, 8, 6, 5]),
    (1, [1, 4, 9, 3, 12, 10]),
    (1, [2, 8, 5, 6, 11, 7]),
    (-1, [9, 10, 3, 1, 4, 12]),
];

fn expansion_from_row(row: &ExpansionRow) -> MultiPoly {
    let (sign, exps) = row;
    let mut acc = a_form(0);
    for (k, &e) in exps.iter().enumerate() {
        acc = acc.add(&a_form(k + 1).scale(&CycloNum::root(13, e)));
    }
    acc.scale(&CycloNum::integer(*sign))
}

/// The exact `Q`-orbit expansions, the pairing of squared forms between
/// the seven-fold and thirteen-fold orbits, the set-level equality of the
/// two degree-14 root systems, and the halving for the first two models.
pub fn verify_duality(cat: &Catalog, mode: Mode) -> Vec<Item> {
    let mut out = Vec::new();
    let a0 = a_form(0);
    let s13 = sqrt13();

    // Printed expansion rows of √13·Q^ν(A0) for ν = 1..6 (ν = 0 is A0).
    for nu in 1..=6usize {
        let lhs = act(&cat.q.pow(nu as u64), &a0, mode).scale(&s13);
        out.push(Item::verify(
            format!("√13·Q^{nu}(A0) matches its printed expansion"),
            lhs == expansion_from_row(&Q_ROWS[nu]),
            || "expansion mismatch".into(),
        ));
    }
    out.push(Item::verify(
        "Q⁰(A0) = A0",
        act(&cat.q.pow(0), &a0, mode) == a0,
        || "trivial power failed".into(),
    ));
    // y3·Q^ν rows.
    for nu in 0..=6usize {
        let m = cat.y3.mul(&cat.q.pow(nu as u64));
        let lhs = act(&m, &a0, mode).scale(&s13);
        out.push(Item::verify(
            format!("√13·y3·Q^{nu}(A0) matches its printed expansion"),
            lhs == expansion_from_row(&Y3Q_ROWS[nu]),
            || "expansion mismatch".into(),
        ));
    }
    // y1 rows: the ν = 0 row is exact without √13.
    for nu in 0..=6usize {
        let m = cat.y1.mul(&cat.q.pow(nu as u64));
        let lhs = act(&m, &a0, mode);
        let (scaled, expected) = if Y1Q_ROWS[nu].1 == [0, 0, 0, 0, 0, 0] && nu == 0 {
            (lhs.clone(), a0.scale(&CycloNum::integer(-1)))
        } else {
            (lhs.scale(&s13), expansion_from_row(&Y1Q_ROWS[nu]))
        };
        out.push(Item::verify(
            format!("y1·Q^{nu}(A0) matches its printed expansion"),
            scaled == expected,
            || "expansion mismatch".into(),
        ));
    }
    // y2 rows: the ν = 1 row is exact without √13.
    for nu in 0..=6usize {
        let m = cat.y2.mul(&cat.q.pow(nu as u64));
        let lhs = act(&m, &a0, mode);
        let (scaled, expected) = if nu == 1 {
            (lhs.clone(), a0.scale(&CycloNum::integer(-1)))
        } else {
            (lhs.scale(&s13), expansion_from_row(&Y2Q_ROWS[nu]))
        };
        out.push(Item::verify(
            format!("y2·Q^{nu}(A0) matches its printed expansion"),
            scaled == expected,
            || "expansion mismatch".into(),
        ));
    }

    // T fixes A0.
    out.push(Item::verify(
        "T^ν(A0) = A0 for all ν",
        (0..13).all(|nu| act(&cat.t.pow(nu), &a0, Mode::Sequential) == a0),
        || "T moves A0".into(),
    ));

    // Row-by-row pairing of the squared forms.
    let pairing_q: [(usize, u64); 6] = [(1, 3), (2, 7), (3, 1), (4, 2), (5, 9), (6, 0)];
    for (qpow, tpow) in pairing_q {
        let lhs = act(&cat.q.pow(qpow as u64), &a0, mode).square();
        let rhs = act(&cat.s.mul(&cat.t.pow(tpow)), &a0, mode).square();
        out.push(Item::verify(
            format!("Q^{qpow}(A0)² = S·T^{tpow}(A0)²"),
            lhs == rhs,
            || "pairing mismatch".into(),
        ));
    }
    let pairing_y3: [(usize, u64); 7] =
        [(0, 8), (1, 11), (2, 10), (3, 12), (4, 4), (5, 6), (6, 5)];
    for (qpow, tpow) in pairing_y3 {
        let m = cat.y3.mul(&cat.q.pow(qpow as u64));
        let lhs = act(&m, &a0, mode).square();
        let rhs = act(&cat.s.mul(&cat.t.pow(tpow)), &a0, mode).square();
        out.push(Item::verify(
            format!("y3·Q^{qpow}(A0)² = S·T^{tpow}(A0)²"),
            lhs == rhs,
            || "pairing mismatch".into(),
        ));
    }

    // Set-level equality of the two 14-element systems.
    let seven_fold: BTreeSet<String> = (0..7)
        .flat_map(|nu| {
            let q = act(&cat.q.pow(nu), &a0, Mode::Sequential).square();
            let yq = act(&cat.y3.mul(&cat.q.pow(nu)), &a0, Mode::Sequential).square();
            [q.to_dump(), yq.to_dump()]
        })
        .collect();
    let thirteen_fold: BTreeSet<String> = (0..13)
        .flat_map(|nu| {
            let t = act(&cat.t.pow(nu), &a0, Mode::Sequential).square();
            let st = act(&cat.s.mul(&cat.t.pow(nu)), &a0, Mode::Sequential).square();
            [t.to_dump(), st.to_dump()]
        })
        .collect();
    out.push(Item::verify(
        "the seven-fold and thirteen-fold orbit sets of squared forms are equal (14 elements)",
        seven_fold == thirteen_fold && seven_fold.len() == 14,
        || format!("sizes {} vs {}", seven_fold.len(), thirteen_fold.len()),
    ));

    // Models 1 and 2 only reach half of the system.
    for (name, y) in [("first", &cat.y1), ("second", &cat.y2)] {
        let half_set: BTreeSet<String> = (0..7)
            .flat_map(|nu| {
                let q = act(&cat.q.pow(nu), &a0, Mode::Sequential).square();
                let yq = act(&y.mul(&cat.q.pow(nu)), &a0, Mode::Sequential).square();
                [q.to_dump(), yq.to_dump()]
            })
            .collect();
        out.push(Item::verify(
            format!("the {name} model yields only half of the invariants (7 of 14)"),
            half_set.len() == 7 && half_set.is_subset(&thirteen_fold),
            || format!("got {} distinct forms", half_set.len()),
        ));
    }
    // The halving identities hold row by row: y1·Q^ν(A0)² = Q^ν(A0)² and
    // y2·Q^ν(A0)² = Q^{ν−1}(A0)².
    let all_match = (0..7u64).all(|nu| {
        let q = act(&cat.q.pow(nu), &a0, Mode::Sequential).square();
        act(&cat.y1.mul(&cat.q.pow(nu)), &a0, Mode::Sequential).square() == q
    }) && (0..7u64).all(|nu| {
        let prev = act(&cat.q.pow((nu + 6) % 7), &a0, Mode::Sequential).square();
        act(&cat.y2.mul(&cat.q.pow(nu)), &a0, Mode::Sequential).square() == prev
    });
    out.push(Item::verify(
        "the half-system pairings match row by row for models 1 and 2",
        all_match,
        || "halving rows mismatch".into(),
    ));
    out
}

/// The coefficients of the degree-14 root system: the linear coefficient
/// identity, the printed quartic expansion of the invariant `L`, its
/// invariance, and the numeric spot check of the degree-56 constant term.
pub fn verify_jacobian(cat: &Catalog, mode: Mode, embedder: &Embedder, seed: u64) -> Vec<Item> {
    let mut out = Vec::new();
    let l = l_form();
    // 13·A0² + Σ_ν φ_ν² = 26·L.
    let squares = par::map_range(mode, 0..13, |nu| phi_nu_poly(nu as i64).square());
    let mut sum = int_scale(&a_form(0).square(), 13);
    for s in squares {
        sum = sum.add(&s);
    }
    out.push(Item::verify(
        "φ∞² + Σ φ_ν² = 26·(A0² + A1·A5 + A2·A3 + A4·A6)",
        sum == int_scale(&l, 26),
        || "linear coefficient identity failed".into(),
    ));
    out.push(Item::verify(
        "L equals its printed quartic expansion",
        l == l_quartic_printed(),
        || "quartic expansion mismatch".into(),
    ));
    out.push(Item::verify(
        "L is invariant under S and T",
        act(&cat.s, &l, mode) == l && act(&cat.t, &l, mode) == l,
        || "L moves under the action".into(),
    ));
    out.push(Item::verify(
        "L vanishes at z = 0",
        l.coeff(&super::Monomial::one()).is_zero(),
        || "constant term nonzero".into(),
    ));
    // Numeric spot check of the constant term of the degree-14 system:
    // 13·A0(P)²·Π_ν φ_ν(P)² computed through the A-values must match the
    // substitution route φ∞(P)²·Π φ∞((S·T^ν)·P)² at random points.
    let bits = embedder.bits();
    let mut rng = SplitMix64::derive(seed, "jacobian/a14");
    let mut worst: Option<String> = None;
    let mut ok = true;
    let phi_inf_poly = phi_inf();
    for _ in 0..20 {
        let point: [CFixed; 6] = std::array::from_fn(|_| CFixed {
            re: crate::cyclo::Fixed::from_rat(&rat(rng.small_int(8), 8), bits),
            im: crate::cyclo::Fixed::from_rat(&rat(rng.small_int(8), 8), bits),
        });
        // Route 1: through the A-family values.
        let a_vals: Vec<CFixed> = (0..7).map(|k| a_form(k).eval_complex(&point, embedder)).collect();
        let mut route1 = a_vals[0].mul(&a_vals[0]).scale_rat(&rat(13, 1));
        for nu in 0..13 {
            let mut phi = a_vals[0].clone();
            for (k, &e) in NU_EXPONENTS.iter().enumerate() {
                phi = phi.add(&embedder.embed(&CycloNum::root(13, e * nu)).mul(&a_vals[k + 1]));
            }
            route1 = route1.mul(&phi.mul(&phi));
        }
        // Route 2: numeric matrix substitution.
        let mut route2 = {
            let v = phi_inf_poly.eval_complex(&point, embedder);
            v.mul(&v)
        };
        for nu in 0..13u64 {
            let stnu = cat.s.mul(&cat.t.pow(nu));
            let moved = numeric_apply(&stnu, &point, embedder);
            let v = phi_inf_poly.eval_complex(&moved, embedder);
            route2 = route2.mul(&v.mul(&v));
        }
        let dist = route1.dist(&route2);
        let scale = route1.modulus().add(&crate::cyclo::Fixed::from_int(1, bits));
        // |r1 − r2| ≤ 10⁻⁴⁰·max(1, |r1|)
        let tolerated = {
            let bound = crate::cyclo::Fixed {
                mantissa: scale.mantissa.clone() / BigInt::from(10u64).pow(40),
                bits,
            };
            dist.mantissa <= bound.mantissa
        };
        if !tolerated {
            ok = false;
            worst = Some(format!(
                "|Δ| = {} at |value| = {}",
                dist.to_decimal(50),
                scale.to_decimal(10)
            ));
        }
    }
    out.push(Item::verify(
        "the degree-56 constant term agrees numerically along both routes at 20 seeded points",
        ok,
        || worst.unwrap_or_default(),
    ));
    out
}

fn phi_nu_poly(nu: i64) -> MultiPoly {
    family_nu(&a_basis(), nu)
}

/// Apply a matrix numerically to a complex point.
fn numeric_apply(g: &crate::matrep::ProjMatrix, point: &[CFixed; 6], e: &Embedder) -> [CFixed; 6] {
    std::array::from_fn(|i| {
        let mut acc = CFixed::zero(e.bits());
        for (j, p) in point.iter().enumerate() {
            let c = g.get(i, j);
            if !c.is_zero() {
                acc = acc.add(&e.embed(c).mul(p));
            }
        }
        acc
    })
}

/// The 14-dimensional representation on the cubic family: derived versus
/// printed matrices, traces, the `ν`-expansions of the cubic rows, and
/// exact multiplicativity (up to the central sign of the lifts).
pub fn verify_induced14(cat: &Catalog, mode: Mode) -> Vec<Item> {
    let mut out = Vec::new();
    let basis = d_basis();
    let s14 = match induced_matrix(&cat.s, &basis, mode) {
        Ok(m) => m,
        Err(e) => {
            return vec![Item::verify(
                "the cubic family spans an S-invariant space",
                false,
                || e.to_string(),
            )]
        }
    };
    out.push(Item::pass(
        "act(S, D_k) lies in the span of the cubic family for every k",
    ));
    let t14 = induced_matrix(&cat.t, &basis, mode).expect("diagonal action");
    let t14_printed = tables::parse_diag_grid(14, tables::T14_DIAG);
    out.push(Item::verify(
        "the derived 14-dimensional T-matrix equals diag(1, ζ, …, ζ¹², 1)",
        grids_equal(&t14, &t14_printed),
        || format!("differs at {:?}", grid_diff(14, &t14, &t14_printed)),
    ));
    // Entrywise comparison with the printed block table; mismatches are
    // documented with their positions (the derivation is ground truth).
    let s14_printed = tables::s14_printed();
    let diff = grid_diff(14, &s14, s14_printed.entries());
    if diff.is_empty() {
        out.push(Item::pass("the derived 14-dimensional S-matrix equals its printed table"));
    } else {
        let mut detail = String::new();
        for &(i, j) in diff.iter().take(8) {
            detail.push_str(&format!(
                "entry ({}, {}): derived {} vs printed {}; ",
                i + 1,
                j + 1,
                s14[i * 14 + j].to_text(),
                s14_printed.get(i, j).to_text()
            ));
        }
        out.push(Item {
            claim: format!(
                "the printed 14-dimensional S-table differs from the derivation at {} entries",
                diff.len()
            ),
            finding: Finding::Documented(detail),
        });
    }
    // Traces (0, 1, −2).
    let st14 = induced_matrix(&cat.s.mul(&cat.t), &basis, mode).unwrap();
    out.push(Item::verify(
        "induced traces are (0, 1, −2)",
        grid_trace(14, &s14).is_zero()
            && grid_trace(14, &t14).is_one()
            && grid_trace(14, &st14) == CycloNum::integer(-2),
        || format!(
            "got ({}, {}, {})",
            grid_trace(14, &s14).to_text(),
            grid_trace(14, &t14).to_text(),
            grid_trace(14, &st14).to_text()
        ),
    ));
    // The ν-expansion of the first cubic row for every ν, and the final row.
    let radicals = [r0(), r1(), r2(), r3(), r4(), r_inf()];
    let nu_items = par::map_range(mode, 0..13, |nu| {
        let stnu = cat.s.mul(&cat.t.pow(nu as u64));
        let lhs = act(&stnu, &basis[0], Mode::Sequential)
            .scale(&sqrt13())
            .scale_rat(&rat(-13, 1));
        let mut rhs = basis[0].scale(&radicals[0]);
        for (k, &rad) in D_ROW_RADICALS.iter().enumerate() {
            let c = &radicals[rad] * &CycloNum::root(13, (k as i64 + 1) * nu as i64);
            rhs = rhs.add(&basis[k + 1].scale(&c));
        }
        rhs = rhs.add(&basis[13].scale(&r_inf()));
        Item::verify(
            format!("−13√13·(S·T^{nu})(D0) expands with the radical coefficients"),
            lhs == rhs,
            || "cubic row expansion mismatch".into(),
        )
    });
    out.extend(nu_items);
    // −13√13·S(D∞) row.
    {
        let lhs = act(&cat.s, &basis[13], mode).scale(&sqrt13()).scale_rat(&rat(-13, 1));
        let signs: [(usize, i64); 12] = [
            (3, -1), (4, -1), (3, -1), (1, 1), (4, -1), (4, -1),
            (2, 1), (2, 1), (3, -1), (1, 1), (2, 1), (1, 1),
        ];
        let mut rhs = basis[0].scale(&r_inf());
        for (k, (rad, sign)) in signs.iter().enumerate() {
            let c = radicals[*rad].scale(&rat(*sign, 1));
            rhs = rhs.add(&basis[k + 1].scale(&c));
        }
        rhs = rhs.add(&basis[13].scale(&r0()).neg());
        out.push(Item::verify(
            "−13√13·S(D∞) expands with the mirrored radical coefficients",
            lhs == rhs,
            || "final cubic row mismatch".into(),
        ));
    }
    // Multiplicativity: the lifts satisfy induced(g)·induced(h) =
    // induced(g·h) exactly; across lifts only a central ±1 can appear.
    out.push(Item::verify(
        "induced(S)·induced(T) = induced(S·T) exactly on the cubic family",
        grids_equal(&grid_mul(14, &s14, &t14), &st14),
        || "induced multiplication mismatch".into(),
    ));
    let id14: Vec<CycloNum> = crate::matrep::ProjMatrix::identity(14).entries().to_vec();
    let s14_sq = grid_mul(14, &s14, &s14);
    let neg_id: Vec<CycloNum> = id14.iter().map(|x| -x).collect();
    out.push(Item::verify(
        "induced(S)² = −identity (the central sign of the lift, odd degree)",
        grids_equal(&s14_sq, &neg_id),
        || "S14² is not ±1".into(),
    ));
    out
}

/// The sextic family: the expansion of every `δ_ν` over the printed
/// sextics, the solved-versus-printed comparison, the vanishing sum, the
/// degree-12 identity, and the invariance statements.
pub fn verify_sextic_system(cat: &Catalog, mode: Mode, skip_heavy: bool) -> Vec<Item> {
    let mut out = Vec::new();
    let g = g_basis();
    let dinf = delta_inf();
    let deltas: Vec<MultiPoly> = par::map_range(mode, 0..13, |nu| delta_nu(cat, nu as i64, Mode::Sequential));

    // Σδ = 0.
    let mut total = dinf.clone();
    for d in &deltas {
        total = total.add(d);
    }
    out.push(Item::verify("δ∞ + Σ δ_ν = 0", total.is_zero(), || {
        format!("{} terms survive", total.num_terms())
    }));
    out.push(Item::verify(
        "every δ vanishes at z = 0",
        deltas.iter().all(|d| d.coeff(&super::Monomial::one()).is_zero()),
        || "constant term nonzero".into(),
    ));

    // 6.12-style expansion: δ_ν = −13·G0 + Σ ζ^{kν}·G_k for all ν.
    let expansion_ok = (0..13).all(|nu| {
        let mut rhs = int_scale(&g[0], -13);
        for k in 1..=12 {
            rhs = rhs.add(&g[k].scale(&CycloNum::root(13, k as i64 * nu as i64)));
        }
        deltas[nu as usize] == rhs
    });
    out.push(Item::verify(
        "δ_ν = −13·G0 + Σ ζ^{kν}·G_k for all 13 values of ν",
        expansion_ok,
        || "sextic expansion mismatch".into(),
    ));

    // The 13 linear conditions determine the sextics uniquely; the printed
    // expressions must equal the solved ones (discrete Fourier inversion).
    let inv13 = rat(1, 13);
    let solved_ok = (0..13).all(|k| {
        let mut acc = MultiPoly::zero();
        for (nu, d) in deltas.iter().enumerate() {
            acc = acc.add(&d.scale(&CycloNum::root(13, -(k as i64) * nu as i64)));
        }
        let acc = acc.scale_rat(&inv13);
        if k == 0 {
            acc == int_scale(&g[0], -13)
        } else {
            acc == g[k]
        }
    });
    out.push(Item::verify(
        "the printed sextics match the Fourier-solved ones",
        solved_ok,
        || "solved sextics differ from the printed expressions".into(),
    ));

    // G0 is invariant under H and T.
    out.push(Item::verify(
        "G0 is invariant under H and T",
        act(&cat.h, &g[0], mode) == g[0] && act(&cat.t, &g[0], mode) == g[0],
        || "G0 moves under the maximal subgroup".into(),
    ));

    if skip_heavy {
        return out;
    }

    // Degree-12 identity: δ∞² + Σ δ_ν² = 26·M.
    let m = m_form();
    let squares = par::map_vec(mode, &deltas, |d| d.square());
    let mut lhs = dinf.square();
    for s in squares {
        lhs = lhs.add(&s);
    }
    out.push(Item::verify(
        "δ∞² + Σ δ_ν² = 26·(7·13²·G0² + G1·G12 + … + G6·G7)",
        lhs == int_scale(&m, 26),
        || "degree-12 identity failed".into(),
    ));
    out.push(Item::verify(
        format!("the identity lives in the full {DEGREE12_MONOMIALS}-monomial degree-12 space"),
        lhs.num_terms() <= DEGREE12_MONOMIALS && lhs.total_degree() == 12,
        || "unexpected degree".into(),
    ));

    // M is invariant under T (monomial rescale) and S (through the
    // substituted sextics, using that substitution is a ring map).
    out.push(Item::verify(
        "M is invariant under T",
        act(&cat.t, &m, mode) == m,
        || "T moves M".into(),
    ));
    let sg = act_many(&cat.s, &g, mode);
    let mut m_s = int_scale(&sg[0].square(), 7 * 169);
    for k in 1..=6 {
        m_s = m_s.add(&sg[k].mul(&sg[13 - k]));
    }
    out.push(Item::verify(
        "M is invariant under S (as a degree-12 polynomial in z)",
        m_s == m,
        || "S moves M".into(),
    ));
    out
}

/// Build the printed modular-data matrix under a choice of `c(j)`.
fn modular_s_matrix(c: &dyn Fn(i64) -> CycloNum) -> Vec<CycloNum> {
    let rows: [[i64; 6]; 6] = [
        [1, 2, 3, 4, 5, 6],
        [2, 4, 6, 5, 3, 1],
        [3, 6, 4, 1, 2, 5],
        [4, 5, 1, 3, 6, 2],
        [5, 3, 2, 6, 1, 4],
        [6, 1, 5, 2, 4, 3],
    ];
    let inv_s13 = sqrt13().inv().unwrap();
    let mut out = Vec::with_capacity(49);
    out.push(&CycloNum::one(13) * &inv_s13);
    for _ in 0..6 {
        out.push(&CycloNum::one(13) * &inv_s13);
    }
    for row in rows {
        out.push(&CycloNum::integer(2) * &inv_s13);
        for j in row {
            out.push(&c(j) * &inv_s13);
        }
    }
    out
}

/// The modular-data comparison: the reordered induced matrices against the
/// printed table under both readings of `c(j)`, the coefficient
/// correspondence, and the quadric identification.
pub fn verify_haagerup(cat: &Catalog, mode: Mode) -> Vec<Item> {
    let mut out = Vec::new();
    let basis = a_basis_haagerup_order();
    let t_h = induced_matrix(&cat.t, &basis, mode).unwrap();
    let expected_diag: Vec<i64> = vec![0, 10, 1, 12, 4, 3, 9];
    let mut diag_ok = true;
    for (i, &e) in expected_diag.iter().enumerate() {
        if t_h[i * 7 + i] != CycloNum::root(13, e) {
            diag_ok = false;
        }
    }
    out.push(Item::verify(
        "the reordered induced T is diag(1, ζ¹⁰, ζ, ζ¹², ζ⁴, ζ³, ζ⁹)",
        diag_ok,
        || "diagonal mismatch".into(),
    ));
    // The printed matrix pairs the original basis rows with the reordered
    // columns (the fully reordered matrix has the same rows in a different
    // order); compare under both basis conventions and both readings of
    // c(j), and record which combination validates.
    let s_reordered = induced_matrix(&cat.s, &basis, mode).unwrap();
    let s_mixed = {
        // rows over the original family, columns over the reordered one
        let original = a_basis();
        let full = induced_matrix(&cat.s, &original, mode).unwrap();
        let sigma = [0usize, 6, 1, 5, 2, 4, 3];
        let mut out = vec![CycloNum::zero(13); 49];
        for i in 0..7 {
            for j in 0..7 {
                out[i * 7 + j] = full[i * 7 + sigma[j]].clone();
            }
        }
        out
    };
    let pair = |j: i64| CycloNum::root(13, j) + CycloNum::root(13, -j);
    let cos_norm = |j: i64| {
        let base = CycloNum::root(13, j) + CycloNum::root(13, -j);
        base.scale(&rat(-3, 1)).checked_div(&sqrt13()).unwrap()
    };
    let printed_pair = modular_s_matrix(&pair);
    let printed_cos = modular_s_matrix(&cos_norm);
    let reading_pair =
        grids_equal(&s_reordered, &printed_pair) || grids_equal(&s_mixed, &printed_pair);
    let reading_cos =
        grids_equal(&s_reordered, &printed_cos) || grids_equal(&s_mixed, &printed_cos);
    out.push(Item::verify(
        "exactly one reading of c(j) validates the printed modular-data matrix",
        reading_pair ^ reading_cos,
        || format!("pair-sum reading: {reading_pair}, cosine reading: {reading_cos}"),
    ));
    out.push(Item {
        claim: "which c(j) reading validates the table".into(),
        finding: Finding::Documented(format!(
            "c(j) = ζ^j + ζ^(13−j) validates: {reading_pair} (as the induced matrix with rows \
             over the original basis order and columns over the reordered one: {}); the literal \
             c(j) = −(3/√13)·(ζ^j + ζ^(13−j)) validates: {reading_cos}",
            grids_equal(&s_mixed, &printed_pair)
        )),
    });
    out.push(Item {
        claim: "row convention of the printed modular-data matrix".into(),
        finding: Finding::Documented(format!(
            "fully reordered rows match the printed table: {}; original-order rows with \
             reordered columns match: {}",
            grids_equal(&s_reordered, &printed_pair),
            grids_equal(&s_mixed, &printed_pair)
        )),
    });
    // The coefficient correspondence p_k = √13·c(σ(k)) under the pair-sum
    // reading: σ = (2, 4, 6, 5, 3, 1).
    let sigma = [2i64, 4, 6, 5, 3, 1];
    let p_ok = (1..=6).all(|k| p_const(k) == sqrt13() * pair(sigma[k - 1]));
    out.push(Item::verify(
        "p_k = √13·c(σ(k)) with σ = (2,4,6,5,3,1) under the validating reading",
        p_ok,
        || "coefficient correspondence fails".into(),
    ));
    // The quadric A0² + A1A5 + A2A3 + A4A6 is the invariant quartic L.
    let quadric = a_form(0)
        .square()
        .add(&a_form(1).mul(&a_form(5)))
        .add(&a_form(2).mul(&a_form(3)))
        .add(&a_form(4).mul(&a_form(6)));
    out.push(Item::verify(
        "the null-quadric in the A-coordinates equals the invariant quartic L",
        quadric == l_form(),
        || "quadric mismatch".into(),
    ));
    out
}

/// Degree-14 factorizations over `Q(√13)`: multiply the printed quadratic
/// and cubic factors back together and compare; conjugating `√13 ↦ −√13`
/// swaps the factors.
pub fn verify_klein_factorizations() -> Vec<Item> {
    type UPoly = Vec<CycloNum>;
    fn umul(a: &UPoly, b: &UPoly) -> UPoly {
        let mut out = vec![CycloNum::zero(13); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
        out
    }
    fn conj2(p: &UPoly) -> UPoly {
        p.iter().map(|c| c.galois(2).unwrap()).collect()
    }
    let s = sqrt13();
    let half = |a: i64, b: i64| {
        (CycloNum::integer(a) + s.scale(&rat(b, 1))).scale(&rat(1, 2))
    };
    let mut out = Vec::new();
    // quartic: coefficients ascending
    let quartic: UPoly = vec![
        CycloNum::integer(1),
        CycloNum::integer(19),
        CycloNum::integer(20),
        CycloNum::integer(7),
        CycloNum::integer(1),
    ];
    let qf1: UPoly = vec![half(11, 3), half(7, 1), CycloNum::one(13)];
    let qf2 = conj2(&qf1);
    out.push(Item::verify(
        "the printed quadratic factors multiply to the degree-4 factor",
        umul(&qf1, &qf2) == quartic,
        || "quartic factorization mismatch".into(),
    ));
    // sextic
    let sextic: UPoly = vec![
        CycloNum::integer(-1),
        CycloNum::integer(38),
        CycloNum::integer(122),
        CycloNum::integer(108),
        CycloNum::integer(46),
        CycloNum::integer(10),
        CycloNum::integer(1),
    ];
    let cf1: UPoly = vec![half(3, 1), half(21, -1), CycloNum::integer(5), CycloNum::one(13)];
    let cf2 = conj2(&cf1);
    out.push(Item::verify(
        "the printed cubic factors multiply to the degree-6 factor",
        umul(&cf1, &cf2) == sextic,
        || "sextic factorization mismatch".into(),
    ));
    out.push(Item::verify(
        "conjugating √13 ↦ −√13 swaps the factors",
        conj2(&qf2) == qf1 && conj2(&cf2) == cf1,
        || "conjugation does not swap".into(),
    ));
    out
}

/// Numeric check that the second elementary symmetric function of the 14
/// squared forms is fixed by the action (the first is checked exactly in
/// [`verify_jacobian`]).
pub fn verify_symmetric_function_numeric(
    cat: &Catalog,
    embedder: &Embedder,
    seed: u64,
) -> Item {
    let bits = embedder.bits();
    let mut rng = SplitMix64::derive(seed, "duality/e2");
    let a0 = a_form(0);
    let roots: Vec<MultiPoly> = {
        let mut v = Vec::with_capacity(14);
        for nu in 0..13u64 {
            v.push(act(&cat.s.mul(&cat.t.pow(nu)), &a0, Mode::Sequential).square());
        }
        v.push(a0.square());
        v
    };
    let e2_at = |pt: &[CFixed; 6]| {
        let vals: Vec<CFixed> = roots.iter().map(|r| r.eval_complex(pt, embedder)).collect();
        let mut acc = CFixed::zero(bits);
        for i in 0..vals.len() {
            for j in (i + 1)..vals.len() {
                acc = acc.add(&vals[i].mul(&vals[j]));
            }
        }
        acc
    };
    for trial in 0..3 {
        let point: [CFixed; 6] = std::array::from_fn(|_| CFixed {
            re: crate::cyclo::Fixed::from_rat(&rat(rng.small_int(8), 8), bits),
            im: crate::cyclo::Fixed::from_rat(&rat(rng.small_int(8), 8), bits),
        });
        let base = e2_at(&point);
        for g in [&cat.s, &cat.t] {
            let moved = numeric_apply(g, &point, embedder);
            let v = e2_at(&moved);
            let dist = base.dist(&v);
            let scale = base.modulus().add(&crate::cyclo::Fixed::from_int(1, bits));
            let bound = crate::cyclo::Fixed {
                mantissa: scale.mantissa.clone() / BigInt::from(10u64).pow(40),
                bits,
            };
            if dist.mantissa > bound.mantissa {
                return Item::verify(
                    "the degree-2 symmetric function of the root system is numerically invariant",
                    false,
                    || format!("trial {trial}: |Δ| = {}", dist.to_decimal(45)),
                );
            }
        }
    }
    Item::pass("the degree-2 symmetric function of the root system is numerically invariant")
}

/// Tiny helper kept for tests: the quadratic family expansion with an
/// explicit family.
pub fn family_expansion(family: &[MultiPoly], nu: i64) -> MultiPoly {
    family_nu(family, nu)
}
