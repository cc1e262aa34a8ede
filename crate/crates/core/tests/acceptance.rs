//! Acceptance suite: every criterion is pinned here with its stated
//! tolerance and runtime bound, and prints one pass/fail line.
//!
//! Timed criteria serialize on a mutex so that wall-clock limits are
//! measured without contention from the other tests in this binary.

use psl213::cyclo::constants::{r1, r2, r3, r4, sqrt13, theta};
use psl213::cyclo::{CycloNum, Embedder, Rat};
use psl213::harness;
use psl213::invariants::forms::{
    a_basis, a_form, d_basis, delta_inf, delta_nu, family_nu, g_basis, l_form, l_quartic_printed,
    m_form,
};
use psl213::invariants::lee::{macwilliams_check, predicted_constant, Code13};
use psl213::invariants::verify::{self, Finding};
use psl213::invariants::{act, act_many, grid_mul, grid_trace, grids_equal, induced_matrix, int_scale};
use psl213::matrep::catalog::Catalog;
use psl213::matrep::{check_presentation, closure, tables, ProjMatrix};
use psl213::par::Mode;
use psl213::permgroup::{
    asd_stats, catalog::PermCatalog, catalog::P_TABLE, congruence_test, rh_genus,
    wohlfahrt_characteristic, CongruenceVerdict,
};
use psl213::report::{RunConfig, Status, Suite};
use num_bigint::BigInt;
use std::sync::{Mutex, OnceLock};
use std::time::{Duration, Instant};

static TIMED: Mutex<()> = Mutex::new(());

fn cat() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(Catalog::new)
}

fn report_line(criterion: u32, ok: bool, detail: &str) {
    println!(
        "criterion {criterion:>2}: {} — {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {criterion} failed: {detail}");
}

fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

#[test]
fn criterion_01_group_order_and_involutions() {
    let _guard = TIMED.lock().unwrap();
    let c = cat();
    let start = Instant::now();
    let g = closure(&[c.s.clone(), c.t.clone()], 1200, Mode::auto()).expect("closure in bound");
    let profile = g.order_profile(Mode::auto()).unwrap();
    let elapsed = start.elapsed();
    let involutions = profile.iter().find(|(o, _)| *o == 2).map(|(_, n)| *n).unwrap_or(0);
    let ok = g.len() == 1092 && involutions == 91 && elapsed <= Duration::from_secs(120);
    report_line(
        1,
        ok,
        &format!(
            "closure of {{S, T}} has {} projective elements with {} involutions in {:.1?} (limit 120s)",
            g.len(),
            involutions,
            elapsed
        ),
    );
}

#[test]
fn criterion_02_relations_exact() {
    let c = cat();
    let id = ProjMatrix::identity(6);
    let st = c.s.mul(&c.t);
    let mut ok = true;
    let mut notes = Vec::new();
    ok &= c.s.pow(2).proj_eq(&id) && c.t.pow(13).is_identity_strict() && st.pow(3).proj_eq(&id);
    ok &= c.q.pow(7).is_identity_strict();
    ok &= c.q.pow(3).mul(&c.p.pow(4)).pow(3).is_neg_identity_strict();
    ok &= c.q.mul(&c.p.pow(2)).pow(3).is_identity_strict();
    ok &= c.q.pow(5).mul(&c.p.pow(2)).pow(2).is_neg_identity_strict();
    ok &= c.x3.mul(&c.y3).eq_strict(&c.q.pow(3));
    ok &= c.h.pow(6).is_neg_identity_strict();
    // Conjugation is blind to the central sign, so the exact value of
    // H⁻¹·T·H is +T⁴; the printed −T⁴ names the same projective element
    // and is recorded as a documented discrepancy.
    let conj = c.h.inv().unwrap().mul(&c.t).mul(&c.h);
    ok &= conj.eq_strict(&c.t.pow(4)) && conj.proj_eq(&c.t.pow(4).neg());
    notes.push("H⁻¹TH = +T⁴ exactly (printed sign documented)");
    report_line(
        2,
        ok,
        &format!(
            "S²=T¹³=(ST)³=1, Q⁷=1, (Q³P⁴)³=−I, (QP²)³=I, (Q⁵P²)²=−I, x₃y₃=Q³, H⁶=−I all exact; {}",
            notes.join("; ")
        ),
    );
}

#[test]
fn criterion_03_presentations_and_closures() {
    let _guard = TIMED.lock().unwrap();
    let c = cat();
    let p1 = check_presentation(&c.x1, &c.y1, 7, 7).unwrap();
    let p2 = check_presentation(&c.x2, &c.y2, 7, 6).unwrap();
    let u = c.s.mul(&c.t);
    let p3 = check_presentation(&u, &c.s, 13, 7).unwrap();
    let extra = c.q.pow(3).mul(&c.p.pow(4)).pow(3).proj_eq(&ProjMatrix::identity(6));
    let mut ok = p1.holds && !p1.degenerate && p2.holds && !p2.degenerate && p3.holds && extra;
    let g = closure(&[c.s.clone(), c.t.clone()], 1200, Mode::auto()).unwrap();
    let keys = g.key_set();
    for (x, y) in [(&c.x1, &c.y1), (&c.x2, &c.y2), (&c.x3, &c.y3)] {
        let gi = closure(&[x.clone(), y.clone()], 1200, Mode::auto()).unwrap();
        ok &= gi.key_set() == keys;
    }
    report_line(
        3,
        ok,
        "(x1,y1) is (2,3,7;7), (x2,y2) is (2,3,7;6), (ST,S) is (2,3,13) with (Q³P⁴)³=1; all three pair closures equal the closure of (S,T) as sets",
    );
}

#[test]
fn criterion_04_trace_columns() {
    let c = cat();
    let half_neg = rat(-1, 2);
    let half_pos = rat(1, 2);
    let six_ok = c.s.trace().is_zero()
        && c.t.trace() == (CycloNum::one(13) + sqrt13()).scale(&half_neg)
        && c.s.mul(&c.t).trace().is_zero();
    let a = a_basis();
    let s7 = induced_matrix(&c.s, &a, Mode::auto()).unwrap();
    let t7 = induced_matrix(&c.t, &a, Mode::auto()).unwrap();
    let st7 = induced_matrix(&c.s.mul(&c.t), &a, Mode::auto()).unwrap();
    let seven_ok = grid_trace(7, &s7) == CycloNum::integer(-1)
        && grid_trace(7, &t7) == (CycloNum::one(13) + sqrt13()).scale(&half_pos)
        && grid_trace(7, &st7) == CycloNum::one(13);
    let d = d_basis();
    let s14 = induced_matrix(&c.s, &d, Mode::auto()).unwrap();
    let t14 = induced_matrix(&c.t, &d, Mode::auto()).unwrap();
    let st14 = induced_matrix(&c.s.mul(&c.t), &d, Mode::auto()).unwrap();
    let fourteen_ok = grid_trace(14, &s14).is_zero()
        && grid_trace(14, &t14).is_one()
        && grid_trace(14, &st14) == CycloNum::integer(-2);
    report_line(
        4,
        six_ok && seven_ok && fourteen_ok,
        "traces are (0, (−1−√13)/2, 0) in dimension 6, (−1, (1+√13)/2, 1) in dimension 7, (0, 1, −2) in dimension 14 — exact",
    );
}

#[test]
fn criterion_05_permutation_model() {
    let _guard = TIMED.lock().unwrap();
    let start = Instant::now();
    let pc = PermCatalog::new().unwrap();
    let mut ok = true;
    for (i, (_, ord)) in P_TABLE.iter().enumerate() {
        ok &= pc.p[i].compose(&pc.s).order() == *ord;
    }
    let st9 = asd_stats(&pc.s, &pc.p[9]).unwrap();
    ok &= st9.cusp_widths == vec![13, 1] && st9.level == 13 && st9.genus == 0;
    for i in [8usize, 10, 12] {
        let st = asd_stats(&pc.s, &pc.p[i]).unwrap();
        ok &= st.cusp_widths == vec![7, 7] && st.level == 7 && st.genus == 0;
    }
    ok &= rh_genus(1092, 7) == Ok(14);
    ok &= rh_genus(1092, 13) == Ok(50);
    ok &= wohlfahrt_characteristic(1092, 156, 0, 0) == Ok((26, 14));
    ok &= matches!(
        congruence_test(7, 1092),
        CongruenceVerdict::ObstructionTriggered { gamma_index: 168 }
    );
    let elapsed = start.elapsed();
    ok &= elapsed <= Duration::from_secs(1);
    report_line(
        5,
        ok,
        &format!(
            "all sixteen ord(p·s) values, the four cusp cases, genera 0/14/50, χ = 26, and the 1092 ∤ 168 obstruction in {:.1?} (limit 1s)",
            elapsed
        ),
    );
}

#[test]
fn criterion_06_quaternion_order() {
    use psl213::quaternion::{verify_elkies_generators, verify_prime_split};
    let mut ok = true;
    for check in verify_elkies_generators().unwrap() {
        ok &= check.ok;
    }
    for check in verify_prime_split().unwrap() {
        ok &= check.ok;
    }
    report_line(
        6,
        ok,
        "g2² = g3³ = g7⁷ = −1, g2 = g7·g3, 13 = η(η+2)(2η−1)(3−2η)(η+3) with η(η+2) a unit — exact",
    );
}

#[test]
fn criterion_07_quadratic_family() {
    let _guard = TIMED.lock().unwrap();
    let c = cat();
    let start = Instant::now();
    let mut ok = true;
    for item in verify::verify_a_structure(c, Mode::auto()) {
        ok &= item.is_pass();
    }
    // the linear coefficient identity and the quartic expansion
    let l = l_form();
    let mut sum = int_scale(&a_form(0).square(), 13);
    for nu in 0..13 {
        sum = sum.add(&family_nu(&a_basis(), nu).square());
    }
    ok &= sum == int_scale(&l, 26);
    ok &= l == l_quartic_printed();
    ok &= act(&c.s, &l, Mode::auto()) == l && act(&c.t, &l, Mode::auto()) == l;
    let elapsed = start.elapsed();
    ok &= elapsed <= Duration::from_secs(30);
    report_line(
        7,
        ok,
        &format!(
            "the 13 ν-expansions, the six S-rows with exact coefficients, ⟨H,T⟩-invariance of A0², L-invariance, the linear-coefficient identity, and the quartic expansion in {:.1?} (limit 30s)",
            elapsed
        ),
    );
}

#[test]
fn criterion_08_duality() {
    let c = cat();
    let mut ok = true;
    for item in verify::verify_duality(c, Mode::auto()) {
        ok &= item.is_pass();
    }
    report_line(
        8,
        ok,
        "the two 14-element squared-form systems agree as sets with the row-by-row pairing, and models 1 and 2 reach exactly half",
    );
}

#[test]
fn criterion_09_induced_representations() {
    let _guard = TIMED.lock().unwrap();
    let c = cat();
    let start = Instant::now();
    let mut ok = true;
    let mut documented = 0;
    for item in verify::verify_induced7(c, Mode::auto())
        .into_iter()
        .chain(verify::verify_triality(c, Mode::auto()))
        .chain(verify::verify_induced14(c, Mode::auto()))
    {
        match item.finding {
            Finding::Pass => {}
            Finding::Documented(_) => documented += 1,
            Finding::Fail(w) => {
                println!("  failed: {} — {w}", item.claim);
                ok = false;
            }
        }
    }
    let elapsed = start.elapsed();
    ok &= elapsed <= Duration::from_secs(300);
    report_line(
        9,
        ok,
        &format!(
            "derived 7- and 14-dimensional matrices match the printed tables (triality included), {documented} entry discrepancies documented, in {:.1?} (limit 300s)",
            elapsed
        ),
    );
}

#[test]
fn criterion_10_degree12_identities() {
    let _guard = TIMED.lock().unwrap();
    let c = cat();
    let start = Instant::now();
    // Σδ = 0
    let mut total = delta_inf();
    let deltas: Vec<_> = (0..13).map(|nu| delta_nu(c, nu, Mode::auto())).collect();
    for d in &deltas {
        total = total.add(d);
    }
    let mut ok = total.is_zero();
    // δ∞² + Σδ_ν² = 26·M in the degree-12 space
    let m = m_form();
    let mut lhs = delta_inf().square();
    for d in &deltas {
        lhs = lhs.add(&d.square());
    }
    ok &= lhs == int_scale(&m, 26);
    ok &= lhs.total_degree() == 12 && lhs.num_terms() <= 6188;
    // G0 fixed by ⟨H, T⟩; M invariant under S and T
    let g = g_basis();
    ok &= act(&c.h, &g[0], Mode::auto()) == g[0] && act(&c.t, &g[0], Mode::auto()) == g[0];
    ok &= act(&c.t, &m, Mode::auto()) == m;
    let sg = act_many(&c.s, &g, Mode::auto());
    let mut m_s = int_scale(&sg[0].square(), 7 * 169);
    for k in 1..=6 {
        m_s = m_s.add(&sg[k].mul(&sg[13 - k]));
    }
    ok &= m_s == m;
    let elapsed = start.elapsed();
    ok &= elapsed <= Duration::from_secs(300);
    report_line(
        10,
        ok,
        &format!(
            "Σδ = 0 and the degree-12 expansion hold exactly ({} monomials), G0 is ⟨H,T⟩-fixed, M is S- and T-invariant, in {:.1?} (limit 300s)",
            lhs.num_terms(),
            elapsed
        ),
    );
}

#[test]
fn criterion_11_enumerator_transform() {
    let c = cat();
    let code = Code13::new(2, vec![vec![1, 5]]).unwrap();
    let report = macwilliams_check(&code, c, Mode::auto()).unwrap();
    let ok = report.identity_holds
        && report.constant == predicted_constant(2, 1)
        && report.constant.is_one()
        && report.double_transform_is_original;
    report_line(
        11,
        ok,
        &format!(
            "the transform identity holds for the self-dual code spanned by (1,5) with constant {} and the double transform is the identity",
            report.constant.to_text()
        ),
    );
}

#[test]
fn criterion_12_modular_data() {
    let c = cat();
    let mut ok = true;
    let mut documented = Vec::new();
    for item in verify::verify_haagerup(c, Mode::auto()) {
        match item.finding {
            Finding::Pass => {}
            Finding::Documented(w) => documented.push(w),
            Finding::Fail(w) => {
                println!("  failed: {} — {w}", item.claim);
                ok = false;
            }
        }
    }
    report_line(
        12,
        ok,
        &format!(
            "exactly one reading of c(j) validates the printed matrix and the null-quadric equals the invariant quartic; {} normalization notes documented",
            documented.len()
        ),
    );
}

#[test]
fn criterion_13_deterministic_reports() {
    let _guard = TIMED.lock().unwrap();
    let config = RunConfig {
        suites: Suite::all(),
        seed: 42,
        precision: 60,
        skip_heavy: true,
    };
    let a = harness::run(&config).unwrap();
    let b = harness::run(&config).unwrap();
    let ok = a.to_json(false) == b.to_json(false) && !a.has_failures() && a.ids_unique();
    report_line(
        13,
        ok,
        &format!(
            "two runs with seed 42 produce byte-identical structured reports over {} checks (timing excluded), no failures",
            a.total()
        ),
    );
}

#[test]
fn full_report_has_expected_shape() {
    // Sanity on the light full run: at least 60 checks, all pass or
    // documented, statuses consistent with the exit code.
    let config = RunConfig {
        suites: Suite::all(),
        seed: 0,
        precision: 60,
        skip_heavy: true,
    };
    let report = harness::run(&config).unwrap();
    assert!(report.total() >= 60, "only {} checks", report.total());
    assert_eq!(report.count(Status::Fail), 0, "{}", report.to_text());
    assert_eq!(harness::exit_code(&report), 0);
}

#[test]
fn theta_radicals_are_the_pinned_combinations() {
    // The radical constants referenced throughout the acceptance criteria
    // are the fixed period combinations; their squares are pinned here.
    let two = rat(2, 1);
    let three_half = rat(3, 2);
    assert_eq!(r1(), theta(1) - theta(3) + theta(2) - theta(4));
    assert_eq!(&r1() * &r1(), CycloNum::integer(-13) - sqrt13().scale(&two));
    assert_eq!(&r2() * &r2(), CycloNum::ratio(-13, 2) + sqrt13().scale(&three_half));
    assert_eq!(&r3() * &r3(), CycloNum::integer(-13) + sqrt13().scale(&two));
    assert_eq!(&r4() * &r4(), CycloNum::ratio(-13, 2) - sqrt13().scale(&three_half));
}

#[test]
fn printed_fourteen_dim_table_matches_derivation_entrywise() {
    // The block table of the 14-dimensional S-matrix is confirmed entry
    // for entry by the linear solve (no misprints found).
    let c = cat();
    let derived = induced_matrix(&c.s, &d_basis(), Mode::auto()).unwrap();
    let printed = tables::s14_printed();
    assert!(grids_equal(&derived, printed.entries()));
    // and the grid really multiplies: Ŝ² = −1 on the cubic family
    let sq = grid_mul(14, &derived, &derived);
    let neg_id: Vec<CycloNum> = ProjMatrix::identity(14).entries().iter().map(|x| -x).collect();
    assert!(grids_equal(&sq, &neg_id));
}

#[test]
fn embedding_precision_is_configurable() {
    let e40 = Embedder::new(40);
    let e80 = Embedder::new(80);
    let v40 = e40.embed(&sqrt13());
    let v80 = e80.embed(&sqrt13());
    assert!(v40.re.to_decimal(20).starts_with("3.60555127546398929311"));
    assert!(v80.re.to_decimal(20).starts_with("3.60555127546398929311"));
    assert!(e80.bits() > e40.bits());
}
