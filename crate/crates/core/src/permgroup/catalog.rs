//! The printed degree-14 permutation data: the distinguished involution,
//! the sixteen order-three class representatives with the orders of their
//! products with it, the two conjugating substitutions, and the cycle forms
//! of the derived generators.

use super::{PermError, Permutation14};

pub const S_CYCLES: &str = "(1, 12)(2, 11)(3, 10)(4, 9)(5, 8)(6, 7)";

/// Generators of the dihedral group of order 12 normalizing the involution.
pub const DIHEDRAL_A: &str = "(1, 4, 3, 12, 9, 10)(2, 8, 6, 11, 5, 7)";
pub const DIHEDRAL_B: &str = "(1, 12)(2, 6)(3, 4)(7, 11)(9, 10)(13, 14)";

/// The order-three representatives `p1, …, p16` (squares are derived) with
/// the printed order of `p_i·s`. `None` marks the squares `p2 = p1²` etc.
pub const P_TABLE: [(Option<&str>, u32); 16] = [
    (Some("(1, 13, 10)(2, 3, 6)(4, 9, 11)(5, 12, 7)"), 6),
    (None, 6), // p2 = p1²
    (Some("(2, 10, 4)(11, 13, 5)(3, 6, 7)(8, 12, 9)"), 6),
    (None, 6), // p4 = p3²
    (Some("(3, 10, 12)(4, 6, 13)(5, 11, 8)(14, 9, 7)"), 3),
    (None, 3), // p6 = p5²
    (Some("(2, 11, 14)(3, 4, 8)(5, 9, 10)(6, 13, 7)"), 2),
    (Some("(1, 13, 12)(9, 4, 14)(3, 8, 6)(5, 10, 7)"), 2),
    (Some("(2, 8, 9)(4, 14, 13)(5, 10, 6)(7, 12, 11)"), 7),
    (Some("(2, 7, 8)(3, 10, 11)(5, 13, 9)(6, 12, 14)"), 13),
    (Some("(2, 3, 4)(6, 9, 11)(7, 12, 14)(8, 10, 13)"), 7),
    (None, 7), // p12 = p11²
    (Some("(2, 14, 5)(3, 9, 13)(4, 7, 11)(8, 10, 12)"), 7),
    (None, 7), // p14 = p13²
    (Some("(1, 10, 6)(3, 8, 9)(4, 11, 12)(7, 13, 14)"), 7),
    (Some("(1, 10, 4)(3, 6, 14)(5, 12, 8)(9, 13, 11)"), 13),
];

/// Carries `p9` to `p15` and commutes with `s`.
pub const CONJ_A: &str = "(1, 2)(3, 5)(4, 7)(6, 9)(8, 10)(11, 12)(13, 14)";
/// Carries `p10` to `p16` and commutes with `s`.
pub const CONJ_B: &str = "(1, 7, 10, 5, 9, 11, 12, 6, 3, 8, 4, 2)";

// Printed products and commutators.
pub const P11_S: &str = "(1, 12, 14, 6, 4, 11, 7)(2, 10, 13, 5, 8, 3, 9)";
pub const COMM_P11_S: &str = "(1, 14, 12, 4, 13, 9)(3, 7, 6, 10, 8, 5)";
pub const P13_S: &str = "(1, 12, 5, 11, 9, 13, 10)(2, 14, 8, 3, 4, 6, 7)";
pub const COMM_P13_S: &str = "(1, 5, 8, 12, 4, 14, 9)(2, 3, 10, 11, 7, 13, 6)";
pub const P9_S: &str = "(1, 12, 2, 5, 3, 10, 7)(4, 14, 13, 9, 11, 6, 8)";
pub const COMM_P9_S: &str = "(1, 2, 14, 11, 12, 8, 6, 10, 4, 9, 3, 7, 5)";
pub const P10_S: &str = "(1, 12, 14, 7, 5, 13, 4, 9, 8, 11, 10, 2, 6)";
pub const COMM_P10_S: &str = "(1, 14, 12, 5, 9, 4, 8)(2, 13, 11, 3, 6, 7, 10)";

/// `Q = (p9·s)⁵` and `P = ((p9·s)⁻⁵·p9)⁷`.
pub const Q_CYCLES: &str = "(1, 10, 5, 12, 7, 3, 2)(4, 6, 9, 14, 8, 11, 13)";
pub const P_CYCLES: &str = "(1, 6, 8, 14, 13, 2, 7, 3, 11, 12, 9, 10, 5)";

pub const Y1_CYCLES: &str = "(2, 8)(3, 4)(5, 12)(7, 9)(10, 14)(11, 13)";
pub const X1_CYCLES: &str = "(1, 8, 10)(2, 4, 11)(3, 9, 6)(5, 14, 7)";
pub const COMM_X1_Y1: &str = "(1, 9, 13, 8, 2, 11, 7)(3, 4, 14, 5, 6, 12, 10)";
pub const P2Q6P8_CYCLES: &str = "(1, 10)(2, 6)(4, 5)(7, 9)(8, 14)(11, 12)";
pub const Y2_CYCLES: &str = "(1, 2)(3, 12)(4, 6)(5, 14)(7, 11)(8, 9)";
pub const X2_CYCLES: &str = "(1, 12, 10)(2, 11, 5)(4, 7, 14)(6, 13, 9)";
pub const COMM_X2_Y2: &str = "(1, 2, 6, 9, 8, 4)(3, 10, 12, 7, 13, 11)";

/// The catalogued permutations, fully expanded.
pub struct PermCatalog {
    pub s: Permutation14,
    /// `p[i]` is `p_{i+1}`; squares filled in.
    pub p: [Permutation14; 16],
    pub conj_a: Permutation14,
    pub conj_b: Permutation14,
    pub q: Permutation14,
    pub big_p: Permutation14,
    pub x1: Permutation14,
    pub y1: Permutation14,
    pub x2: Permutation14,
    pub y2: Permutation14,
}

impl PermCatalog {
    pub fn new() -> Result<PermCatalog, PermError> {
        let s = Permutation14::parse_cycles(S_CYCLES)?;
        let mut p = [Permutation14::identity(); 16];
        for (i, (text, _)) in P_TABLE.iter().enumerate() {
            p[i] = match text {
                Some(t) => Permutation14::parse_cycles(t)?,
                None => p[i - 1].pow(2),
            };
        }
        let p9s = p[8].compose(&s);
        let q = p9s.pow(5);
        let big_p = p9s.inverse().pow(5).compose(&p[8]).pow(7);
        let y1 = big_p.compose(&q.pow(2)).compose(&big_p.pow(10));
        let x1 = q.pow(6).compose(&y1);
        let p2q6p8 = big_p.pow(2).compose(&q.pow(6)).compose(&big_p.pow(8));
        let y3 = q.pow(5).compose(&big_p.pow(2));
        let y2 = y3.compose(&p2q6p8).compose(&y3);
        let x2 = q.pow(5).compose(&y2);
        Ok(PermCatalog { s, p, conj_a: Permutation14::parse_cycles(CONJ_A)?, conj_b: Permutation14::parse_cycles(CONJ_B)?, q, big_p, x1, y1, x2, y2 })
    }
}

/// One verified claim about the catalog.
pub struct PermCheck {
    pub claim: String,
    pub ok: bool,
    pub witness: Option<String>,
}

fn check(claim: impl Into<String>, ok: bool, witness: Option<String>) -> PermCheck {
    PermCheck { claim: claim.into(), ok, witness }
}

fn expect_cycles(claim: &str, got: &Permutation14, printed: &str) -> PermCheck {
    let expected = Permutation14::parse_cycles(printed).expect("printed cycles parse");
    let ok = *got == expected;
    check(
        claim,
        ok,
        if ok { None } else { Some(format!("computed {}", got.to_cycles())) },
    )
}

/// Verify everything printed about the degree-14 model. Composition is
/// apply-left-first throughout; as a guard, the first check recomputes one
/// printed product under both conventions and records which one matches.
pub fn verify_catalog(c: &PermCatalog) -> Vec<PermCheck> {
    let mut out = Vec::new();

    // Convention probe on p11·s.
    let left_first = c.p[10].compose(&c.s);
    let right_first = c.s.compose(&c.p[10]);
    let printed = Permutation14::parse_cycles(P11_S).unwrap();
    out.push(check(
        "composition convention: the printed p11·s means apply p11 first",
        left_first == printed,
        if left_first == printed {
            None
        } else if right_first == printed {
            Some("printed product matches the opposite (apply-right-first) convention".into())
        } else {
            Some(format!("neither convention matches; computed {}", left_first.to_cycles()))
        },
    ));

    out.push(check("s is an involution (six 2-cycles)", c.s.order() == 2, None));

    for (i, (_, ord)) in P_TABLE.iter().enumerate() {
        let pi = &c.p[i];
        out.push(check(
            format!("p{} has order 3 and ord(p{}·s) = {ord}", i + 1, i + 1),
            pi.order() == 3 && pi.compose(&c.s).order() == *ord,
            Some(format!("ord(p{}·s) = {}", i + 1, pi.compose(&c.s).order())),
        ));
    }

    // Dihedral normalizer of s.
    let da = Permutation14::parse_cycles(DIHEDRAL_A).unwrap();
    let db = Permutation14::parse_cycles(DIHEDRAL_B).unwrap();
    let dihedral_order = super::group_order(&[da, db]);
    let normalizes = da.inverse().compose(&c.s).compose(&da) == c.s
        && db.inverse().compose(&c.s).compose(&db) == c.s;
    out.push(check(
        "the two printed elements generate a dihedral group of order 12 normalizing s",
        dihedral_order == 12 && normalizes,
        Some(format!("order {dihedral_order}")),
    ));

    // Conjugating substitutions.
    let carries_a = c.conj_a.inverse().compose(&c.p[8]).compose(&c.conj_a) == c.p[14];
    let comm_a = c.conj_a.compose(&c.s) == c.s.compose(&c.conj_a);
    out.push(check(
        "the first substitution carries p9 to p15 and commutes with s",
        carries_a && comm_a,
        None,
    ));
    let carries_b = c.conj_b.inverse().compose(&c.p[9]).compose(&c.conj_b) == c.p[15];
    let comm_b = c.conj_b.compose(&c.s) == c.s.compose(&c.conj_b);
    out.push(check(
        "the second substitution carries p10 to p16 and commutes with s",
        carries_b && comm_b,
        None,
    ));

    // Printed products and commutators.
    out.push(expect_cycles("p11·s printed cycle form", &c.p[10].compose(&c.s), P11_S));
    out.push(expect_cycles("[p11, s] printed cycle form", &c.p[10].commutator(&c.s), COMM_P11_S));
    out.push(expect_cycles("p13·s printed cycle form", &c.p[12].compose(&c.s), P13_S));
    out.push(expect_cycles("[p13, s] printed cycle form", &c.p[12].commutator(&c.s), COMM_P13_S));
    out.push(expect_cycles("p9·s printed cycle form", &c.p[8].compose(&c.s), P9_S));
    out.push(expect_cycles("[p9, s] printed 13-cycle", &c.p[8].commutator(&c.s), COMM_P9_S));
    out.push(expect_cycles("p10·s printed 13-cycle", &c.p[9].compose(&c.s), P10_S));
    out.push(expect_cycles("[p10, s] printed cycle form", &c.p[9].commutator(&c.s), COMM_P10_S));

    // Q and P rebuilt from p9 and s.
    out.push(expect_cycles("Q = (p9·s)⁵ printed cycle form", &c.q, Q_CYCLES));
    out.push(expect_cycles("P = ((p9·s)⁻⁵·p9)⁷ printed 13-cycle", &c.big_p, P_CYCLES));

    // The two generator pairs as words in P and Q.
    out.push(expect_cycles("y1 = P·Q²·P¹⁰ printed cycle form", &c.y1, Y1_CYCLES));
    out.push(expect_cycles("x1 = Q⁶·P·Q²·P¹⁰ printed cycle form", &c.x1, X1_CYCLES));
    out.push(check(
        "x1·y1 = Q⁶ with order 7",
        c.x1.compose(&c.y1) == c.q.pow(6) && c.q.pow(6).order() == 7,
        None,
    ));
    out.push(expect_cycles("[x1, y1] printed cycle form (order 7)", &c.x1.commutator(&c.y1), COMM_X1_Y1));
    out.push(check("[x1, y1] has order 7", c.x1.commutator(&c.y1).order() == 7, None));
    let p2q6p8 = c.big_p.pow(2).compose(&c.q.pow(6)).compose(&c.big_p.pow(8));
    out.push(expect_cycles("P²·Q⁶·P⁸ printed cycle form", &p2q6p8, P2Q6P8_CYCLES));
    out.push(expect_cycles("y2 printed cycle form", &c.y2, Y2_CYCLES));
    out.push(expect_cycles("x2 printed cycle form", &c.x2, X2_CYCLES));
    out.push(check(
        "x2·y2 = Q⁵ with order 7",
        c.x2.compose(&c.y2) == c.q.pow(5) && c.q.pow(5).order() == 7,
        None,
    ));
    out.push(expect_cycles("[x2, y2] printed cycle form (order 6)", &c.x2.commutator(&c.y2), COMM_X2_Y2));
    out.push(check("[x2, y2] has order 6", c.x2.commutator(&c.y2).order() == 6, None));

    out
}
