use super::catalog::{verify_catalog, PermCatalog};
use super::*;

fn cat() -> PermCatalog {
    PermCatalog::new().unwrap()
}

#[test]
fn parse_and_print_round_trip() {
    let s = Permutation14::parse_cycles(catalog::S_CYCLES).unwrap();
    assert_eq!(s.to_cycles(), "(1, 12)(2, 11)(3, 10)(4, 9)(5, 8)(6, 7)");
    assert_eq!(s.order(), 2);
    assert_eq!(s.fixed_points(), 2);
}

#[test]
fn parse_rejects_malformed_input() {
    assert!(Permutation14::parse_cycles("(1, 2").is_err());
    assert!(Permutation14::parse_cycles("(1, 1)").is_err());
    assert!(Permutation14::parse_cycles("(1, 15)").is_err());
    assert!(Permutation14::parse_cycles("(2, 3)(3, 4)").is_err());
    assert!(Permutation14::parse_cycles("1, 2)").is_err());
}

#[test]
fn identity_round_trips_through_cycle_text() {
    let id = Permutation14::identity();
    assert_eq!(id.to_cycles(), "()");
    assert_eq!(Permutation14::parse_cycles("()").unwrap(), id);
    assert_eq!(Permutation14::parse_cycles("").unwrap(), id);
}

#[test]
fn compose_is_left_to_right() {
    // With s and p11 as printed, applying p11 first then s sends 1 to 12.
    let c = cat();
    let prod = c.p[10].compose(&c.s);
    assert_eq!(prod.apply(0), 11);
    assert_eq!(prod.to_cycles(), catalog::P11_S);
}

#[test]
fn inverse_composes_to_identity() {
    let c = cat();
    assert!(c.q.compose(&c.q.inverse()).is_identity());
    assert!(c.big_p.inverse().compose(&c.big_p).is_identity());
}

#[test]
fn printed_orders_hold() {
    let c = cat();
    assert_eq!(c.p[8].compose(&c.s).order(), 7);
    assert_eq!(c.p[8].commutator(&c.s).order(), 13);
    assert_eq!(c.q.order(), 7);
    assert_eq!(c.big_p.order(), 13);
}

#[test]
fn whole_catalog_verifies() {
    let c = cat();
    for check in verify_catalog(&c) {
        assert!(check.ok, "{} ({:?})", check.claim, check.witness);
    }
}

#[test]
fn four_pairs_generate_order_1092_transitively() {
    let c = cat();
    for i in [8usize, 9, 10, 12] {
        let gens = [c.s, c.p[i]];
        assert!(is_transitive(&gens), "pair with p{}", i + 1);
        assert_eq!(group_order(&gens), 1092, "pair with p{}", i + 1);
    }
    // full enumeration as a cross-check on one pair
    assert_eq!(enumerate_order(&[c.s, c.p[8]], 2000), Some(1092));
}

#[test]
fn presentation_labels_at_the_permutation_level() {
    let c = cat();
    // (u, v) = (p, s): u³ = v² = (uv)^n = [u,v]^p = 1
    let cases = [
        (10usize, 7u32, 6u32),  // p11: (2,3,7;6)
        (12, 7, 7),             // p13: (2,3,7;7)
        (8, 7, 13),             // p9:  (2,3,7;13)
        (9, 13, 7),             // p10: (2,3,13;7)
    ];
    for (i, n, p) in cases {
        let u = &c.p[i];
        let v = &c.s;
        assert!(u.pow(3).is_identity());
        assert!(v.pow(2).is_identity());
        assert_eq!(u.compose(v).order(), n, "uv order for p{}", i + 1);
        assert_eq!(u.commutator(v).order(), p, "commutator order for p{}", i + 1);
    }
}

#[test]
fn asd_statistics_of_the_four_cases() {
    let c = cat();
    // (2,3,13;7): widths {13,1}, level 13, genus 0
    let st = asd_stats(&c.s, &c.p[9]).unwrap();
    assert_eq!(st.cusp_widths, vec![13, 1]);
    assert_eq!((st.e2, st.e3, st.h), (2, 2, 2));
    assert_eq!(st.level, 13);
    assert_eq!(st.genus, 0);
    // (2,3,7;13) and friends: widths {7,7}, level 7, genus 0
    for i in [8usize, 10, 12] {
        let st = asd_stats(&c.s, &c.p[i]).unwrap();
        assert_eq!(st.cusp_widths, vec![7, 7], "widths for p{}", i + 1);
        assert_eq!((st.e2, st.e3, st.h), (2, 2, 2));
        assert_eq!(st.level, 7);
        assert_eq!(st.genus, 0);
    }
    assert_eq!(asd_stats(&c.s, &c.s), Err(PermError::NotOrderThree));
    let three_cycle = Permutation14::parse_cycles("(1, 2, 3)").unwrap();
    assert_eq!(asd_stats(&c.s, &three_cycle), Err(PermError::NotTransitive));
}

#[test]
fn genus_formula_values() {
    assert_eq!(genus_from_signature(14, 2, 2, 2).unwrap(), 0);
    assert_eq!(rh_genus(1092, 7).unwrap(), 14);
    assert_eq!(rh_genus(1092, 13).unwrap(), 50);
    assert_eq!(wohlfahrt_characteristic(1092, 156, 0, 0).unwrap(), (26, 14));
    assert!(rh_genus(1000, 7).is_err());
}

#[test]
fn primitivity_of_the_model() {
    let c = cat();
    assert!(primitivity(&[c.s, c.p[8]]).unwrap());

    // A full 14-cycle generates an imprimitive cyclic group: the pair
    // {1, 8} closes into the even/odd-step block system. Oracle: check a
    // block explicitly before asking the search.
    let cyc = Permutation14::parse_cycles(
        "(1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14)",
    )
    .unwrap();
    let block: Vec<usize> = (0..14).filter(|x| x % 7 == 0).collect(); // {1, 8} 0-indexed: {0, 7}
    let image: Vec<usize> = block.iter().map(|&x| cyc.apply(x)).collect();
    let disjoint = block.iter().all(|b| !image.contains(b));
    assert!(disjoint && image.len() == block.len());
    assert!(!primitivity(&[cyc]).unwrap());

    // Symmetric group generators: primitive.
    let transposition = Permutation14::parse_cycles("(1, 2)").unwrap();
    assert!(primitivity(&[cyc, transposition]).unwrap());

    // Intransitive input is an error.
    let small = Permutation14::parse_cycles("(1, 2, 3)").unwrap();
    assert_eq!(primitivity(&[small]), Err(PermError::NotTransitive));
}

#[test]
fn congruence_obstruction() {
    assert_eq!(gamma_index(7), 168);
    assert_eq!(gamma_index(13), 1092);
    assert_eq!(gamma_index(1), 1);
    assert_eq!(gamma_index(2), 6);
    // |PSL(2,13)| = 13·(13²−1)/2 = 1092 computed independently
    assert_eq!(13 * (13 * 13 - 1) / 2, 1092);
    assert!(matches!(
        congruence_test(7, 1092),
        CongruenceVerdict::ObstructionTriggered { gamma_index: 168 }
    ));
    assert!(matches!(
        congruence_test(13, 1092),
        CongruenceVerdict::Consistent { gamma_index: 1092 }
    ));
    assert!(matches!(
        congruence_test(1, 1),
        CongruenceVerdict::Consistent { gamma_index: 1 }
    ));
}

mod properties {
    use super::*;
    use proptest::prelude::*;

    fn arb_perm() -> impl Strategy<Value = Permutation14> {
        // Fisher–Yates from a seed vector.
        prop::collection::vec(0usize..14, 14).prop_map(|swaps| {
            let mut images: [u8; 14] = std::array::from_fn(|i| i as u8);
            for (i, &s) in swaps.iter().enumerate() {
                images.swap(i, s % 14);
            }
            Permutation14::from_images_1(images.map(|x| x + 1)).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn compose_associates_and_inverts(a in arb_perm(), b in arb_perm(), c in arb_perm()) {
            prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
            prop_assert_eq!(a.compose(&b).inverse(), b.inverse().compose(&a.inverse()));
            prop_assert!(a.compose(&a.inverse()).is_identity());
        }

        #[test]
        fn cycle_text_round_trips(a in arb_perm()) {
            prop_assert_eq!(Permutation14::parse_cycles(&a.to_cycles()).unwrap(), a);
        }
    }
}

#[test]
fn group_order_agrees_with_enumeration_on_small_groups() {
    let c = cat();
    let da = Permutation14::parse_cycles(catalog::DIHEDRAL_A).unwrap();
    let db = Permutation14::parse_cycles(catalog::DIHEDRAL_B).unwrap();
    assert_eq!(group_order(&[da, db]), enumerate_order(&[da, db], 100).unwrap() as u64);
    assert_eq!(group_order(&[c.s]), 2);
    assert_eq!(group_order(&[Permutation14::identity()]), 1);
}
