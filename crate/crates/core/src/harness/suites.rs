//! The ten verification suites. Each suite converts the library's
//! verification primitives into report checks with stable ids.

use super::Harness;
use crate::cyclo::constants::{catalogued_names, constant, sqrt13, theta};
use crate::cyclo::{arith, ArithKind, CycloNum, Rat};
use crate::invariants::lee::{lee_enumerator, macwilliams_check, predicted_constant, Code13};
use crate::invariants::verify::{self, Finding, Item};
use crate::invariants::{forms, act};
use crate::matrep::catalog::{class_representatives, st_squared_row_checks, table_cross_checks};
use crate::matrep::sl2::{sl2_word, weil_claims};
use crate::matrep::{check_presentation, closure, conj_class, ClassLabel, ProjMatrix, TableComparison};

use crate::permgroup::{
    self, asd_stats, catalog as permcat, congruence_test, genus_from_signature, group_order,
    is_transitive, primitivity, rh_genus, wohlfahrt_characteristic, CongruenceVerdict,
};
use crate::report::{Check, Status, SuiteReport};
use crate::rng::SplitMix64;
use num_bigint::BigInt;
use std::time::Instant;

struct Builder {
    suite: &'static str,
    checks: Vec<Check>,
    group_started: Instant,
    group_elapsed: u64,
}

fn slug(claim: &str) -> String {
    let mut s = String::new();
    for ch in claim.chars() {
        if ch.is_ascii_alphanumeric() {
            s.push(ch.to_ascii_lowercase());
        } else if !s.ends_with('-') && !s.is_empty() {
            s.push('-');
        }
        if s.len() >= 36 {
            break;
        }
    }
    s.trim_matches('-').to_string()
}

impl Builder {
    fn new(suite: &'static str) -> Builder {
        Builder { suite, checks: Vec::new(), group_started: Instant::now(), group_elapsed: 0 }
    }

    /// Close the current timing group; checks pushed afterwards report the
    /// next group's duration.
    fn group(&mut self) {
        self.group_elapsed = self.group_started.elapsed().as_micros() as u64;
        self.group_started = Instant::now();
    }

    fn push(&mut self, claim: impl Into<String>, status: Status, witness: Option<String>) {
        let claim = claim.into();
        let id = format!("{}.{:02}-{}", self.suite, self.checks.len() + 1, slug(&claim));
        self.checks.push(Check { id, claim, status, witness, elapsed_us: self.group_elapsed });
    }

    fn ok(&mut self, claim: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) {
        self.push(
            claim,
            if ok { Status::Pass } else { Status::Fail },
            if ok { None } else { Some(witness()) },
        )
    }

    fn items(&mut self, items: Vec<Item>) {
        self.group();
        for item in items {
            match item.finding {
                Finding::Pass => self.push(item.claim, Status::Pass, None),
                Finding::Fail(w) => self.push(item.claim, Status::Fail, Some(w)),
                Finding::Documented(w) => {
                    self.push(item.claim, Status::DiscrepancyDocumented, Some(w))
                }
            }
        }
    }

    fn skipped(&mut self, claim: impl Into<String>) {
        self.push(claim, Status::Skipped, Some("skipped by configuration".into()));
    }

    fn finish(mut self) -> SuiteReport {
        self.group();
        SuiteReport { suite: self.suite.to_string(), checks: self.checks }
    }
}

fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn cyclo(h: &Harness) -> SuiteReport {
    let mut b = Builder::new("cyclo");
    // Catalogued constants verify their defining identities at lookup.
    for name in catalogued_names() {
        let ok = constant(&name).is_ok();
        b.ok(format!("constant {name} satisfies its defining identity"), ok, || {
            "construction failed".into()
        });
    }
    b.group();
    // Canonical-form and arithmetic spot identities.
    let power_sum = (0..13).fold(CycloNum::zero(13), |acc, k| acc + CycloNum::root(13, k));
    b.ok("the sum of all 13th roots of unity is 0", power_sum.is_zero(), || power_sum.to_text());
    b.ok("ζ¹³ = 1", CycloNum::root(13, 13).is_one(), || "reduction failed".into());
    let s13 = sqrt13();
    b.ok(
        "sqrt13² = 13",
        arith(&s13, &s13, ArithKind::Mul).unwrap() == CycloNum::integer(13),
        || "square mismatch".into(),
    );
    b.ok(
        "θ1 + (θ2 + θ3 + θ4) = −1",
        theta(1) + theta(2) + theta(3) + theta(4) == CycloNum::integer(-1),
        || "period sum mismatch".into(),
    );
    b.ok(
        "division by zero is a reported error",
        arith(&s13, &CycloNum::zero(13), ArithKind::Div).is_err(),
        || "no error raised".into(),
    );
    b.ok(
        "σ2(√13) = −√13",
        s13.galois(2).unwrap() == -s13.clone(),
        || "wrong sign".into(),
    );
    b.ok(
        "σ3 fixes θ1",
        theta(1).galois(3).unwrap() == theta(1),
        || "orbit sum moved".into(),
    );
    b.group();
    // Sign branches fixed by the embedding.
    let e = &h.embedder;
    let t1 = e.embed(&theta(1));
    b.ok(
        "Re(θ1) > 0 and Im(θ1) > 0",
        t1.re.is_positive() && t1.im.is_positive(),
        || t1.to_string_digits(20),
    );
    let r1v = crate::cyclo::constants::r1();
    b.ok(
        "the branch of √(−13−2√13) has positive imaginary part",
        e.embed(&r1v).im.is_positive(),
        || "wrong branch".into(),
    );
    let m26 = (CycloNum::integer(-13) - s13.scale(&rat(2, 1))) - r1v.pow(2);
    b.ok("r1² = −13 − 2√13 exactly", m26.is_zero(), || m26.to_text());
    b.group();
    // The sine-product unit in the conductor-52 field.
    let diff = |k: i64| CycloNum::root(52, 2 * k) - CycloNum::root(52, -2 * k);
    let num = &(&diff(2) * &diff(5)) * &diff(6);
    let den = &(&diff(1) * &diff(3)) * &diff(4);
    let ratio = num.checked_div(&den).unwrap();
    let unit = (CycloNum::integer(3) + s13.clone()).scale(&rat(1, 2));
    b.ok(
        "the sine-product ratio equals the fundamental unit (3+√13)/2",
        ratio == unit.lift_to(52).unwrap(),
        || ratio.to_text(),
    );
    // Serialization round trip on a seeded value.
    let mut rng = SplitMix64::derive(h.seed, "cyclo/roundtrip");
    let raw: Vec<Rat> = (0..12).map(|_| rat(rng.small_int(9), 1 + rng.below(7) as i64)).collect();
    let v = CycloNum::canon(13, &raw).unwrap();
    b.ok(
        "text serialization round-trips",
        CycloNum::parse_text(&v.to_text()).unwrap() == v,
        || v.to_text(),
    );
    b.finish()
}

pub fn group(h: &Harness) -> SuiteReport {
    let mut b = Builder::new("group");
    let c = &h.cat;
    let id = ProjMatrix::identity(6);

    // Printed-table comparisons against the defining words.
    b.group();
    for cc in table_cross_checks(c) {
        match cc.comparison {
            TableComparison::Identical => b.push(cc.claim, Status::Pass, None),
            TableComparison::Proportional { lambda } => b.push(
                cc.claim,
                Status::DiscrepancyDocumented,
                Some(format!("printed lift differs by the central scalar {lambda}")),
            ),
            TableComparison::Differs { positions } => {
                b.push(cc.claim, Status::Fail, Some(format!("differs at {positions:?}")))
            }
        }
    }
    b.group();
    for (claim, ok) in st_squared_row_checks(c) {
        b.ok(claim, ok, || "entry reduction failed".into());
    }
    b.group();

    // Relations (projective where the source states them projectively,
    // strict where a |sign| is printed).
    let st = c.s.mul(&c.t);
    b.ok("S² = 1 projectively (strictly S² = −1)", c.s.pow(2).proj_eq(&id) && c.s.pow(2).is_neg_identity_strict(), || "relation failed".into());
    b.ok("T¹³ = 1 strictly", c.t.pow(13).is_identity_strict(), || "relation failed".into());
    b.ok("(S·T)³ = 1 projectively", st.pow(3).proj_eq(&id), || "relation failed".into());
    b.ok("(S·T)² = T⁻¹·S entrywise", st.pow(2).eq_strict(&c.t.inv().unwrap().mul(&c.s)), || "lift mismatch".into());
    b.ok("Q⁷ = 1 strictly (chosen lift)", c.q.pow(7).is_identity_strict(), || "relation failed".into());
    b.ok("(Q³·P⁴)³ = −1 strictly", c.q.pow(3).mul(&c.p.pow(4)).pow(3).is_neg_identity_strict(), || "relation failed".into());
    b.ok("(Q·P²)³ = 1 strictly", c.q.mul(&c.p.pow(2)).pow(3).is_identity_strict(), || "relation failed".into());
    b.ok("(Q⁵·P²)² = −1 strictly", c.q.pow(5).mul(&c.p.pow(2)).pow(2).is_neg_identity_strict(), || "relation failed".into());
    b.ok("x3·y3 = Q³ strictly", c.x3.mul(&c.y3).eq_strict(&c.q.pow(3)), || "lift mismatch".into());
    b.ok("H⁶ = −1 strictly", c.h.pow(6).is_neg_identity_strict(), || "relation failed".into());
    {
        let conj = c.h.inv().unwrap().mul(&c.t).mul(&c.h);
        let strict_plus = conj.eq_strict(&c.t.pow(4));
        let proj = conj.proj_eq(&c.t.pow(4));
        if strict_plus && proj {
            b.push(
                "H⁻¹·T·H = −T⁴ as printed; the strict value is +T⁴ (conjugation cannot see the central sign)",
                Status::DiscrepancyDocumented,
                Some("derived H⁻¹·T·H equals +T⁴ entrywise; −T⁴ is the same projective element".into()),
            );
        } else {
            b.ok("H⁻¹·T·H = T⁴ projectively", proj, || "conjugation failed".into());
        }
    }
    let sinkov_extra = {
        let qt = c.p.pow(2);
        let pt = c.q.pow(4);
        let lhs = qt.pow(2).mul(&pt.pow(6)).pow(3);
        lhs.proj_eq(&id) && lhs.eq_strict(&c.p.pow(4).mul(&c.q.pow(3)).pow(3))
    };
    b.ok("(Q̃²·P̃⁶)³ = (P⁴·Q³)³ = 1 projectively with Q̃ = P², P̃ = Q⁴", sinkov_extra, || "extra relation failed".into());
    // P and Q rebuild the generating pair: u = P²·Q and v = P³·Q.
    b.ok(
        "P²·Q = S·T and P³·Q = S projectively",
        c.p.pow(2).mul(&c.q).proj_eq(&st) && c.p.pow(3).mul(&c.q).proj_eq(&c.s),
        || "definitional words do not rebuild the generators".into(),
    );
    b.group();

    // Presentations.
    let pres = [
        ("(x1, y1) satisfies the (2,3,7;7) relations", &c.x1, &c.y1, 7u32, 7u32),
        ("(x2, y2) satisfies the (2,3,7;6) relations", &c.x2, &c.y2, 7, 6),
        ("(x3, y3) satisfies the (2,3,7;13) relations", &c.x3, &c.y3, 7, 13),
    ];
    for (claim, x, y, n, p) in pres {
        let pc = check_presentation(x, y, n, p).unwrap();
        b.ok(claim, pc.holds && !pc.degenerate, || "presentation failed".into());
    }
    let u = c.s.mul(&c.t);
    let pc = check_presentation(&u, &c.s, 13, 7).unwrap();
    b.ok("(ST, S) satisfies the (2,3,13) relations", pc.holds && !pc.degenerate, || "presentation failed".into());
    let degen = check_presentation(&id, &id, 7, 7).unwrap();
    b.ok(
        "a degenerate generator pair is flagged",
        degen.holds && degen.degenerate,
        || "degeneracy not detected".into(),
    );
    b.group();

    // Word correspondence with SL(2,13).
    for claim in weil_claims() {
        let ok = match sl2_word(claim.mat) {
            Ok(w) => w.eval_rep(c).proj_eq(&c.lookup(claim.target).unwrap()),
            Err(_) => false,
        };
        b.ok(claim.claim, ok, || "word image mismatch".into());
    }
    b.ok(
        "non-unimodular input is rejected",
        sl2_word([[2, 0], [0, 3]]).is_err(),
        || "no error".into(),
    );
    b.group();

    // Traces of the catalogued lifts.
    let half = rat(-1, 2);
    b.ok(
        "six-dimensional traces are (0, (−1−√13)/2, 0)",
        c.s.trace().is_zero()
            && c.t.trace() == (CycloNum::one(13) + sqrt13()).scale(&half)
            && c.s.mul(&c.t).trace().is_zero(),
        || format!("got ({}, {}, {})", c.s.trace().to_text(), c.t.trace().to_text(), c.s.mul(&c.t).trace().to_text()),
    );
    b.group();

    // Small subgroups.
    let mode = h.mode;
    let t_cyclic = closure(&[c.t.clone()], 64, mode).unwrap();
    b.ok("the closure of {T} has 13 elements", t_cyclic.len() == 13, || t_cyclic.len().to_string());
    let ht = closure(&[c.h.clone(), c.t.clone()], 256, mode).unwrap();
    b.ok("the closure of {H, T} has 78 elements (the index-14 maximal subgroup)", ht.len() == 78, || ht.len().to_string());
    let d14 = closure(&[c.pqp2.clone(), c.q.clone()], 64, mode).unwrap();
    b.ok(
        "⟨PQP², Q⟩ is dihedral of order 14 and PQP²·Q·PQP² = Q⁻¹",
        d14.len() == 14 && c.pqp2.mul(&c.q).mul(&c.pqp2).proj_eq(&c.q.inv().unwrap()),
        || d14.len().to_string(),
    );
    let r_ok = {
        let rinv = c.r.inv().unwrap();
        c.r.pow(3).proj_eq(&id)
            && c.r.mul(&c.t1).mul(&rinv).proj_eq(&c.t)
            && c.r.mul(&c.s1).mul(&rinv).proj_eq(&c.s)
            && rinv.mul(&c.t2).mul(&c.r).proj_eq(&c.t)
            && rinv.mul(&c.s2).mul(&c.r).proj_eq(&c.s)
    };
    b.ok("R³ = 1 and R conjugates the triality generator pairs into (S, T)", r_ok, || "conjugation failed".into());
    // z_i built from the models, with their conjugating involutions.
    let z1 = c.x1.inv().unwrap().mul(&c.y1.inv().unwrap());
    let z2 = c.x2.inv().unwrap().mul(&c.y2.inv().unwrap());
    let z3 = c.x3.inv().unwrap().mul(&c.y3.inv().unwrap());
    let w1 = c.p.mul(&c.q.pow(2)).mul(&c.p.pow(10));
    let w3 = c.q.pow(5).mul(&c.p.pow(2));
    b.ok(
        "z1 = w·Q·w, z2 = w′·Q²·w′, z3 = w″·Q⁴·w″ for the stated involutions",
        z1.proj_eq(&w1.mul(&c.q).mul(&w1))
            && z2.proj_eq(&c.y2.mul(&c.q.pow(2)).mul(&c.y2))
            && z3.proj_eq(&w3.mul(&c.q.pow(4)).mul(&w3)),
        || "conjugation identities failed".into(),
    );
    b.group();

    // Heavy: the order-1092 closure and everything that needs it.
    if h.skip_heavy {
        for claim in [
            "the closure of {S, T} has exactly 1092 elements",
            "the closure contains 91 involutions",
            "the order profile matches the class equation",
            "the four generator-pair closures coincide as sets",
            "z1, z2, z3 lie in the classes 7A, 7B, 7C",
            "the class representatives have the reference orders",
        ] {
            b.skipped(claim);
        }
        return b.finish();
    }
    let g = closure(&[c.s.clone(), c.t.clone()], 1200, mode).expect("closure within bound");
    b.ok("the closure of {S, T} has exactly 1092 elements", g.len() == 1092, || g.len().to_string());
    let profile = g.order_profile(mode).unwrap();
    let involutions = profile.iter().find(|(o, _)| *o == 2).map(|(_, n)| *n).unwrap_or(0);
    b.ok("the closure contains 91 involutions", involutions == 91, || involutions.to_string());
    let expected_profile: Vec<(u32, usize)> =
        vec![(1, 1), (2, 91), (3, 182), (6, 182), (7, 468), (13, 168)];
    b.ok(
        "the order profile matches the class equation 1+91+182+182+468+168",
        profile == expected_profile,
        || format!("{profile:?}"),
    );
    b.group();
    let keys = g.key_set();
    let mut same_sets = true;
    for (x, y) in [(&c.x1, &c.y1), (&c.x2, &c.y2), (&c.x3, &c.y3)] {
        let gi = closure(&[x.clone(), y.clone()], 1200, mode).unwrap();
        same_sets &= gi.key_set() == keys;
    }
    b.ok(
        "the closures of (x1,y1), (x2,y2), (x3,y3) equal the closure of (S,T) as sets",
        same_sets,
        || "some generator pair spans a different set".into(),
    );
    b.group();
    let classes = [
        ("z1 lies in class 7A", &z1, ClassLabel::C7A),
        ("z2 lies in class 7B", &z2, ClassLabel::C7B),
        ("z3 lies in class 7C", &z3, ClassLabel::C7C),
    ];
    for (claim, z, expect) in classes {
        let got = conj_class(z, &g, &c.q, &c.t, mode);
        b.ok(claim, got == Ok(expect), || format!("{got:?}"));
    }
    b.ok(
        "the identity lies in class 1A",
        conj_class(&id, &g, &c.q, &c.t, mode) == Ok(ClassLabel::C1A),
        || "identity misclassified".into(),
    );
    b.group();
    let reps = class_representatives(c);
    let orders_ok = [
        ("1A", 1u32), ("2A", 2), ("3A", 3), ("6A", 6),
        ("7A", 7), ("7B", 7), ("7C", 7), ("13A", 13), ("13B", 13),
    ]
    .iter()
    .all(|(label, ord)| reps[*label].proj_order(26) == Ok(*ord));
    b.ok("the class representatives have the reference orders", orders_ok, || "order mismatch".into());
    let sevens_ok = crate::matrep::is_conjugate(&reps["7A"], &c.q, &g, mode)
        && crate::matrep::is_conjugate(&reps["7B"], &c.q.pow(2), &g, mode)
        && crate::matrep::is_conjugate(&reps["7C"], &c.q.pow(4), &g, mode);
    b.ok(
        "the order-7 representatives are conjugate to Q, Q², Q⁴",
        sevens_ok,
        || "conjugacy sweep failed".into(),
    );
    b.finish()
}

pub fn perm(h: &Harness) -> SuiteReport {
    let mut b = Builder::new("perm");
    let pc = &h.perm;
    b.group();
    for check in permcat::verify_catalog(pc) {
        b.push(
            check.claim,
            if check.ok { Status::Pass } else { Status::Fail },
            check.witness.filter(|_| !check.ok),
        );
    }
    b.group();
    // Presentation labels and subgroup orders.
    let labels = [(10usize, 7u32, 6u32), (12, 7, 7), (8, 7, 13), (9, 13, 7)];
    for (i, n, p) in labels {
        let u = &pc.p[i];
        let v = &pc.s;
        let ok = u.pow(3).is_identity()
            && v.pow(2).is_identity()
            && u.compose(v).order() == n
            && u.commutator(v).order() == p;
        b.ok(
            format!("(p{}, s) satisfies the (2,3,{n};{p}) relations", i + 1),
            ok,
            || "presentation failed".into(),
        );
    }
    for i in [8usize, 9, 10, 12] {
        let gens = [pc.s, pc.p[i]];
        let order = group_order(&gens);
        b.ok(
            format!("⟨s, p{}⟩ is transitive of order 1092", i + 1),
            is_transitive(&gens) && order == 1092,
            || order.to_string(),
        );
    }
    b.group();
    // Cusp statistics of the four cases.
    let cases: [(usize, Vec<usize>, u64); 4] = [
        (9, vec![13, 1], 13),
        (10, vec![7, 7], 7),
        (12, vec![7, 7], 7),
        (8, vec![7, 7], 7),
    ];
    for (i, widths, level) in cases {
        match asd_stats(&pc.s, &pc.p[i]) {
            Ok(st) => b.ok(
                format!(
                    "the pair (s, p{}) has cusp widths {widths:?}, level {level}, genus 0",
                    i + 1
                ),
                st.cusp_widths == widths
                    && st.level == level
                    && st.genus == 0
                    && st.e2 == 2
                    && st.e3 == 2
                    && st.h == 2,
                || format!("{st:?}"),
            ),
            Err(e) => b.ok(format!("the pair (s, p{}) is legitimate", i + 1), false, || e.to_string()),
        }
    }
    b.ok(
        "an illegitimate pair is rejected with a diagnostic",
        asd_stats(&pc.s, &pc.s).is_err(),
        || "no diagnostic".into(),
    );
    b.group();
    // Genus formulas.
    b.ok(
        "genus(μ=14, h=2, e2=2, e3=2) = 0",
        genus_from_signature(14, 2, 2, 2) == Ok(0),
        || "formula mismatch".into(),
    );
    b.ok("the (2,3,7) quotient genus of an order-1092 group is 14", rh_genus(1092, 7) == Ok(14), || {
        format!("{:?}", rh_genus(1092, 7))
    });
    b.ok("the (2,3,13) quotient genus of an order-1092 group is 50", rh_genus(1092, 13) == Ok(50), || {
        format!("{:?}", rh_genus(1092, 13))
    });
    b.ok(
        "the index-1092 characteristic with 156 cusps is χ = 26, g = 14",
        wohlfahrt_characteristic(1092, 156, 0, 0) == Ok((26, 14)),
        || "characteristic mismatch".into(),
    );
    b.group();
    // Primitivity.
    b.ok(
        "⟨s, p9⟩ is primitive on 14 points",
        primitivity(&[pc.s, pc.p[8]]) == Ok(true),
        || "block system found".into(),
    );
    let cyc = permgroup::Permutation14::parse_cycles(
        "(1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14)",
    )
    .unwrap();
    b.ok(
        "a 14-cycle alone is imprimitive",
        primitivity(&[cyc]) == Ok(false),
        || "no block system found".into(),
    );
    let transposition = permgroup::Permutation14::parse_cycles("(1, 2)").unwrap();
    b.ok(
        "the full symmetric group is primitive",
        primitivity(&[cyc, transposition]) == Ok(true),
        || "block system found".into(),
    );
    b.group();
    // Congruence obstruction.
    b.ok(
        "level 7 with index 1092 triggers the non-congruence obstruction (1092 ∤ 168)",
        matches!(congruence_test(7, 1092), CongruenceVerdict::ObstructionTriggered { gamma_index: 168 }),
        || "obstruction not triggered".into(),
    );
    b.ok(
        "level 13 with index 1092 is consistent with congruence (index of the principal subgroup is 1092)",
        matches!(congruence_test(13, 1092), CongruenceVerdict::Consistent { gamma_index: 1092 }),
        || "unexpected obstruction".into(),
    );
    b.ok(
        "level 1 with index 1 is always congruence-consistent",
        matches!(congruence_test(1, 1), CongruenceVerdict::Consistent { .. }),
        || "unexpected obstruction".into(),
    );
    b.finish()
}

pub fn quaternion(h: &Harness) -> SuiteReport {
    use crate::quaternion::{verify_elkies_generators, verify_order_membership, verify_prime_split, FieldK, QuatElem};
    let mut b = Builder::new("quaternion");
    b.group();
    let eta = QuatElem::scalar(FieldK::eta());
    b.ok(
        "i² = j² = η and ji = −ij",
        QuatElem::i().mul(&QuatElem::i()) == eta
            && QuatElem::j().mul(&QuatElem::j()) == eta
            && QuatElem::j().mul(&QuatElem::i()) == QuatElem::i().mul(&QuatElem::j()).neg(),
        || "structure constants failed".into(),
    );
    b.ok("N(1) = 1", QuatElem::one().norm() == FieldK::one(), || "norm of one".into());
    // Norm multiplicativity on seeded random elements.
    let mut rng = SplitMix64::derive(h.seed, "quaternion/norm");
    let rand_field = |rng: &mut SplitMix64| {
        let e = FieldK::eta();
        let e2 = e.mul(&e);
        FieldK::integer(rng.small_int(4))
            .add(&e.scale(&Rat::from(BigInt::from(rng.small_int(4)))))
            .add(&e2.scale(&Rat::from(BigInt::from(rng.small_int(4)))))
    };
    let mut mult_ok = true;
    for _ in 0..12 {
        let x = QuatElem::new(
            rand_field(&mut rng),
            rand_field(&mut rng),
            rand_field(&mut rng),
            rand_field(&mut rng),
        );
        let y = QuatElem::new(
            rand_field(&mut rng),
            rand_field(&mut rng),
            rand_field(&mut rng),
            rand_field(&mut rng),
        );
        mult_ok &= x.mul(&y).norm() == x.norm().mul(&y.norm());
    }
    b.ok("the reduced norm is multiplicative on seeded random elements", mult_ok, || {
        "multiplicativity failed".into()
    });
    b.group();
    match verify_elkies_generators() {
        Ok(checks) => {
            for c in checks {
                b.push(c.claim, if c.ok { Status::Pass } else { Status::Fail }, c.witness.filter(|_| !c.ok));
            }
        }
        Err(e) => b.ok("the explicit norm-one generators construct", false, || e.to_string()),
    }
    b.group();
    match verify_prime_split() {
        Ok(checks) => {
            for c in checks {
                b.push(c.claim, if c.ok { Status::Pass } else { Status::Fail }, c.witness.filter(|_| !c.ok));
            }
        }
        Err(e) => b.ok("the rational prime 13 factors as printed", false, || e.to_string()),
    }
    b.group();
    // Real embeddings of η.
    let e = &h.embedder;
    let signs: Vec<bool> = FieldK::eta()
        .conjugates()
        .iter()
        .map(|c| e.embed(c.value()).re.is_positive())
        .collect();
    b.ok(
        "the real embeddings send η to one positive and two negative values",
        signs == vec![true, false, false],
        || format!("{signs:?}"),
    );
    b.group();
    match verify_order_membership() {
        Ok(checks) => {
            for c in checks {
                // The literal span misses the generators: that outcome is a
                // documented reading of the order data, not a failure.
                let expected_miss = c.claim.contains("literal");
                let status = if c.ok {
                    Status::Pass
                } else if expected_miss {
                    Status::DiscrepancyDocumented
                } else {
                    Status::Fail
                };
                let witness = match status {
                    Status::Pass => None,
                    _ => c.witness.or(Some("membership fails".into())),
                };
                b.push(c.claim, status, witness);
            }
        }
        Err(e) => b.ok("order membership checks run", false, || e.to_string()),
    }
    b.finish()
}

pub fn forms_suite(h: &Harness) -> SuiteReport {
    let mut b = Builder::new("forms");
    b.items(verify::verify_a_structure(&h.cat, h.mode));
    b.items(verify::verify_jacobian(&h.cat, h.mode, &h.embedder, h.seed));
    b.items(vec![verify::verify_symmetric_function_numeric(&h.cat, &h.embedder, h.seed)]);
    // Spot example: act(T, A0) = A0 and the build examples.
    let a0 = forms::a_form(0);
    b.ok("T fixes the quadratic A0", act(&h.cat.t, &a0, h.mode) == a0, || "moved".into());
    b.ok(
        "A1 = z1² − 2·z3·z4 as built",
        forms::a_form(1) == forms::z_mono(1, [2, 0, 0, 0, 0, 0]).add(&forms::z_mono(-2, [0, 0, 1, 1, 0, 0])),
        || "builder mismatch".into(),
    );
    b.ok(
        "D∞ = z4·z5·z6 as built",
        forms::d_form(13) == forms::z_mono(1, [0, 0, 0, 1, 1, 1]),
        || "builder mismatch".into(),
    );
    b.finish()
}

pub fn duality(h: &Harness) -> SuiteReport {
    let mut b = Builder::new("duality");
    b.items(verify::verify_duality(&h.cat, h.mode));
    b.finish()
}

pub fn rep14(h: &Harness) -> SuiteReport {
    let mut b = Builder::new("rep14");
    b.items(verify::verify_induced7(&h.cat, h.mode));
    b.items(verify::verify_triality(&h.cat, h.mode));
    b.items(verify::verify_induced14(&h.cat, h.mode));
    b.finish()
}

pub fn modular_eq(h: &Harness) -> SuiteReport {
    let mut b = Builder::new("modular-eq");
    b.items(verify::verify_sextic_system(&h.cat, h.mode, h.skip_heavy));
    if h.skip_heavy {
        for claim in [
            "δ∞² + Σ δ_ν² = 26·(7·13²·G0² + …) (degree-12 expansion)",
            "M is invariant under S and T",
        ] {
            b.skipped(claim);
        }
    }
    b.items(verify::verify_klein_factorizations());
    b.finish()
}

pub fn haagerup(h: &Harness) -> SuiteReport {
    let mut b = Builder::new("haagerup");
    b.items(verify::verify_haagerup(&h.cat, h.mode));
    b.finish()
}

pub fn macwilliams(h: &Harness) -> SuiteReport {
    let mut b = Builder::new("macwilliams");
    b.group();
    let code = Code13::new(2, vec![vec![1, 5]]).unwrap();
    match macwilliams_check(&code, &h.cat, h.mode) {
        Ok(report) => {
            b.ok(
                "the enumerator transform identity holds for the self-dual code spanned by (1, 5)",
                report.identity_holds,
                || "identity failed".into(),
            );
            b.push(
                "the transform constant for the self-dual code",
                Status::Pass,
                Some(format!("constant = {}", report.constant.to_text())),
            );
            b.ok(
                "the constant matches the predicted 13^(n/2−k) = 1",
                report.constant == predicted_constant(2, 1) && report.constant.is_one(),
                || report.constant.to_text(),
            );
            b.ok(
                "applying the transform twice returns the original enumerator",
                report.double_transform_is_original,
                || "double transform drifted".into(),
            );
        }
        Err(e) => b.ok("the self-dual length-2 code verifies", false, || e.to_string()),
    }
    b.group();
    let zero = Code13::zero(1);
    match macwilliams_check(&zero, &h.cat, h.mode) {
        Ok(report) => {
            b.ok(
                "the zero code of length 1 transforms onto the full line with constant √13",
                report.identity_holds && report.constant == sqrt13(),
                || report.constant.to_text(),
            );
        }
        Err(e) => b.ok("the zero code verifies", false, || e.to_string()),
    }
    let w = lee_enumerator(&code);
    b.ok(
        "the enumerator value at the all-ones point counts the codewords",
        w.eval_all_ones() == CycloNum::integer(13),
        || w.eval_all_ones().to_text(),
    );
    b.ok(
        "a non-self-orthogonal code is rejected for the identity check",
        macwilliams_check(&Code13::new(2, vec![vec![1, 1]]).unwrap(), &h.cat, h.mode).is_err(),
        || "no error".into(),
    );
    b.finish()
}
