use super::catalog::{class_representatives, st_squared_row_checks, table_cross_checks, Catalog};
use super::sl2::{sl2_word, weil_claims};
use super::*;
use crate::cyclo::constants::sqrt13;
use crate::cyclo::Rat;
use crate::par::Mode;
use num_bigint::BigInt;

fn cat() -> Catalog {
    Catalog::new()
}

#[test]
fn t_is_the_printed_diagonal() {
    let c = cat();
    for (i, exp) in [7i64, 11, 8, 6, 2, 5].iter().enumerate() {
        assert_eq!(c.t.get(i, i), &CycloNum::root(13, *exp));
    }
    assert_eq!(c.t.get(0, 1), &CycloNum::zero(13));
}

#[test]
fn s_entry_1_1_matches() {
    let c = cat();
    let expected = (CycloNum::root(13, 12) - CycloNum::zeta(13))
        .checked_div(&sqrt13())
        .unwrap()
        .neg();
    assert_eq!(c.s.get(0, 0), &expected);
}

#[test]
fn identity_builders() {
    let id = ProjMatrix::identity(6);
    assert!(id.is_identity_strict());
    assert!(id.inv().unwrap().eq_strict(&id));
}

#[test]
fn s_squared_is_minus_identity_strictly() {
    // The printed lift satisfies S² = −I (projectively the identity); this
    // is forced by the block identities M·N = −√13·I, M² + N² = −13·I.
    let c = cat();
    assert!(c.s.mul(&c.s).is_neg_identity_strict());
    assert_eq!(c.s.proj_order(26).unwrap(), 2);
}

#[test]
fn t_thirteen_is_strict_identity() {
    let c = cat();
    assert!(c.t.pow(13).is_identity_strict());
}

#[test]
fn st_cubed_is_identity() {
    let c = cat();
    let st = c.s.mul(&c.t);
    assert!(st.pow(3).proj_eq(&ProjMatrix::identity(6)));
    // strictly (ST)³ = −I, consistent with (ST)² = T⁻¹·S entrywise and
    // S² = −I
    assert!(st.pow(3).is_neg_identity_strict());
    assert!(st.pow(2).eq_strict(&c.t.inv().unwrap().mul(&c.s)));
}

#[test]
fn st_squared_row_identities() {
    let c = cat();
    for (claim, ok) in st_squared_row_checks(&c) {
        assert!(ok, "{claim}");
    }
}

#[test]
fn projective_orders() {
    let c = cat();
    assert_eq!(c.t.proj_order(26).unwrap(), 13);
    assert_eq!(c.q.proj_order(26).unwrap(), 7);
    assert_eq!(ProjMatrix::identity(6).proj_order(26).unwrap(), 1);
    assert_eq!(c.s.proj_order(26).unwrap(), 2);
    assert_eq!(c.h.proj_order(26).unwrap(), 6);
}

#[test]
fn q7_is_strict_identity() {
    let c = cat();
    assert!(c.q.pow(7).is_identity_strict());
}

#[test]
fn strict_negative_identity_relations() {
    let c = cat();
    assert!(c.q.pow(3).mul(&c.p.pow(4)).pow(3).is_neg_identity_strict());
    assert!(c.q.pow(5).mul(&c.p.pow(2)).pow(2).is_neg_identity_strict());
    assert!(c.q.mul(&c.p.pow(2)).pow(3).is_identity_strict());
    assert!(c.h.pow(6).is_neg_identity_strict());
}

#[test]
fn h_conjugates_t_into_t4() {
    // Conjugation cannot see the central sign, so H⁻¹·T·H = +T⁴ exactly;
    // the printed claim carries −T⁴, which is the same projective element.
    let c = cat();
    let lhs = c.h.inv().unwrap().mul(&c.t).mul(&c.h);
    assert!(lhs.eq_strict(&c.t.pow(4)));
    assert!(lhs.proj_eq(&c.t.pow(4).neg()));
}

#[test]
fn x3y3_is_q3_strictly() {
    let c = cat();
    assert!(c.x3.mul(&c.y3).eq_strict(&c.q.pow(3)));
}

#[test]
fn sinkov_extra_relation() {
    // With P̃ = Q⁴ and Q̃ = P²: (Q̃²·P̃⁶)³ = (P⁴·Q³)³, both the identity.
    let c = cat();
    let qt = c.p.pow(2);
    let pt = c.q.pow(4);
    let lhs = qt.pow(2).mul(&pt.pow(6)).pow(3);
    let rhs = c.p.pow(4).mul(&c.q.pow(3)).pow(3);
    assert!(lhs.proj_eq(&ProjMatrix::identity(6)));
    assert!(lhs.eq_strict(&rhs));
}

#[test]
fn all_printed_tables_match_their_words() {
    let c = cat();
    for check in table_cross_checks(&c) {
        match &check.comparison {
            TableComparison::Identical => {}
            // Central signs are lift bookkeeping, anything else would be a
            // transcription problem.
            TableComparison::Proportional { lambda } => {
                assert!(
                    lambda == "13; -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0",
                    "table check {}: unexpected scalar {lambda}",
                    check.name
                );
            }
            TableComparison::Differs { positions } => {
                panic!(
                    "table check {} failed at {positions:?}: {}",
                    check.name, check.claim
                );
            }
        }
    }
}

#[test]
fn presentations_hold() {
    let c = cat();
    // (u, v) = (ST, S) satisfies u³ = v² = (uv)¹³ = 1
    let u = c.s.mul(&c.t);
    let pc = check_presentation(&u, &c.s, 13, 7).unwrap();
    assert!(pc.holds && !pc.degenerate);
    let pc1 = check_presentation(&c.x1, &c.y1, 7, 7).unwrap();
    assert!(pc1.holds && !pc1.degenerate);
    let pc2 = check_presentation(&c.x2, &c.y2, 7, 6).unwrap();
    assert!(pc2.holds && !pc2.degenerate);
    let id = ProjMatrix::identity(6);
    let degen = check_presentation(&id, &id, 7, 7).unwrap();
    assert!(degen.holds && degen.degenerate);
}

#[test]
fn closure_of_t_is_cyclic_13() {
    let c = cat();
    let g = closure(&[c.t.clone()], 64, Mode::auto()).unwrap();
    assert_eq!(g.len(), 13);
}

#[test]
fn closure_of_h_t_has_order_78() {
    let c = cat();
    let g = closure(&[c.h.clone(), c.t.clone()], 256, Mode::auto()).unwrap();
    assert_eq!(g.len(), 78);
}

#[test]
fn dihedral_subgroup_of_order_14() {
    let c = cat();
    let g = closure(&[c.pqp2.clone(), c.q.clone()], 64, Mode::auto()).unwrap();
    assert_eq!(g.len(), 14);
    // the involution inverts Q
    let conj = c.pqp2.mul(&c.q).mul(&c.pqp2);
    assert!(conj.proj_eq(&c.q.inv().unwrap()));
}

#[test]
fn closure_bound_is_reported() {
    let c = cat();
    assert!(matches!(
        closure(&[c.t.clone()], 5, Mode::auto()),
        Err(MatrepError::ClosureBoundExceeded { bound: 5 })
    ));
}

#[test]
fn traces_of_the_catalogued_lifts() {
    let c = cat();
    assert!(c.s.trace().is_zero());
    let half = Rat::new(BigInt::from(-1), BigInt::from(2));
    let expected_t = (CycloNum::one(13) + sqrt13()).scale(&half);
    assert_eq!(c.t.trace(), expected_t);
    assert!(c.s.mul(&c.t).trace().is_zero());
    assert_eq!(ProjMatrix::identity(6).trace(), CycloNum::integer(6));
}

#[test]
fn triality_conjugations() {
    let c = cat();
    assert!(c.r.pow(3).proj_eq(&ProjMatrix::identity(6)));
    let rinv = c.r.inv().unwrap();
    assert!(c.r.mul(&c.t1).mul(&rinv).proj_eq(&c.t));
    assert!(c.r.mul(&c.s1).mul(&rinv).proj_eq(&c.s));
    assert!(rinv.mul(&c.t2).mul(&c.r).proj_eq(&c.t));
    assert!(rinv.mul(&c.s2).mul(&c.r).proj_eq(&c.s));
}

#[test]
fn model_relations_of_eq_three_pairs() {
    // y_i² = x_i³ = z_i⁷ = y_i·x_i·z_i = 1 projectively for all models.
    let c = cat();
    let id = ProjMatrix::identity(6);
    for (x, y) in [(&c.x1, &c.y1), (&c.x2, &c.y2), (&c.x3, &c.y3)] {
        let z = x.inv().unwrap().mul(&y.inv().unwrap());
        assert!(y.pow(2).proj_eq(&id));
        assert!(x.pow(3).proj_eq(&id));
        assert!(z.pow(7).proj_eq(&id));
        assert!(y.mul(x).mul(&z).proj_eq(&id));
    }
}

#[test]
fn z_i_conjugation_identities() {
    // z1 = w1·Q·w1, z2 = w2·Q²·w2, z3 = w3·Q⁴·w3 with the stated involutions.
    let c = cat();
    let z1 = c.x1.inv().unwrap().mul(&c.y1.inv().unwrap());
    let z2 = c.x2.inv().unwrap().mul(&c.y2.inv().unwrap());
    let z3 = c.x3.inv().unwrap().mul(&c.y3.inv().unwrap());
    let w1 = c.p.mul(&c.q.pow(2)).mul(&c.p.pow(10));
    let w2 = &c.y2; // = Q⁵P²·P²Q⁶P⁸·Q⁵P²
    let w3 = c.q.pow(5).mul(&c.p.pow(2));
    assert!(z1.proj_eq(&w1.mul(&c.q).mul(&w1)));
    assert!(z2.proj_eq(&w2.mul(&c.q.pow(2)).mul(w2)));
    assert!(z3.proj_eq(&w3.mul(&c.q.pow(4)).mul(&w3)));
}

#[test]
fn class_representative_orders() {
    let c = cat();
    let reps = class_representatives(&c);
    let expect = [
        ("1A", 1u32),
        ("2A", 2),
        ("3A", 3),
        ("6A", 6),
        ("7A", 7),
        ("7B", 7),
        ("7C", 7),
        ("13A", 13),
        ("13B", 13),
    ];
    for (label, ord) in expect {
        assert_eq!(reps[label].proj_order(26).unwrap(), ord, "order of {label}");
    }
}

#[test]
fn weil_correspondence_words_match_representation() {
    let c = cat();
    for claim in weil_claims() {
        let w = sl2_word(claim.mat).unwrap();
        let image = w.eval_rep(&c);
        let target = c.lookup(claim.target).unwrap();
        assert!(image.proj_eq(&target), "{}", claim.claim);
    }
}

#[test]
fn lookup_rejects_unknown_names() {
    let c = cat();
    assert!(matches!(
        c.lookup("nonsense"),
        Err(MatrepError::UnknownName(_))
    ));
}

#[test]
fn inverse_of_singular_fails() {
    let z = CycloNum::zero(13);
    let m = ProjMatrix::new(2, vec![z.clone(), z.clone(), z.clone(), z]);
    assert!(matches!(m.inv(), Err(MatrepError::Singular)));
}

mod properties {
    use super::*;
    use proptest::prelude::*;

    fn arb_word() -> impl Strategy<Value = Vec<u8>> {
        prop::collection::vec(0u8..2, 1..5)
    }

    fn word_matrix(c: &Catalog, w: &[u8]) -> ProjMatrix {
        let mut m = ProjMatrix::identity(6);
        for &l in w {
            m = m.mul(if l == 0 { &c.s } else { &c.t });
        }
        m
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        #[test]
        fn projective_equality_ignores_scalars(w in arb_word(), num in 1i64..9, den in 1i64..9) {
            let c = cat();
            let m = word_matrix(&c, &w);
            let lambda = CycloNum::ratio(num, den) * CycloNum::zeta(13);
            let scaled = ProjMatrix::new(
                6,
                m.entries().iter().map(|e| e * &lambda).collect(),
            );
            prop_assert!(m.proj_eq(&scaled));
            prop_assert_eq!(m.canonical_key(), scaled.canonical_key());
            prop_assert_eq!(scaled.scalar_multiple_of(&m), Some(lambda));
        }

        #[test]
        fn inverse_and_product_are_consistent(w in arb_word(), v in arb_word()) {
            let c = cat();
            let a = word_matrix(&c, &w);
            let b2 = word_matrix(&c, &v);
            prop_assert!(a.mul(&a.inv().unwrap()).is_identity_strict());
            let prod_inv = a.mul(&b2).inv().unwrap();
            prop_assert!(prod_inv.eq_strict(&b2.inv().unwrap().mul(&a.inv().unwrap())));
        }
    }
}

#[test]
fn order_bound_exceeded_is_diagnosed() {
    // diag(2, 1, …) has infinite projective order: the bounded search must
    // report instead of looping.
    let mut entries = ProjMatrix::identity(6).entries().to_vec();
    entries[0] = CycloNum::integer(2);
    let m = ProjMatrix::new(6, entries);
    assert_eq!(m.proj_order(26), Err(MatrepError::OrderBoundExceeded { bound: 26 }));
}
