use super::constants::{
    alpha, beta, catalogued_names, constant, eta, gamma, p, p_long, r1, r2, r3, r4, sqrt13, theta,
};
use super::*;
use proptest::prelude::*;

fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

#[test]
fn canon_power_sum_is_zero() {
    // 1 + ζ + … + ζ^12 = Φ13(ζ) = 0
    let raw = vec![Rat::one(); 13];
    let v = CycloNum::canon(13, &raw).unwrap();
    assert!(v.is_zero());
}

#[test]
fn canon_rejects_bad_input() {
    assert_eq!(CycloNum::canon(0, &[]), Err(CycloError::ZeroConductor));
    let raw = vec![Rat::one(); 14];
    assert!(matches!(
        CycloNum::canon(13, &raw),
        Err(CycloError::RawTooLong { .. })
    ));
}

#[test]
fn zeta_to_the_13_is_one() {
    assert!(CycloNum::root(13, 13).is_one());
    assert_eq!(CycloNum::root(13, 14), CycloNum::zeta(13));
    assert_eq!(CycloNum::root(13, -1), CycloNum::root(13, 12));
}

#[test]
fn sqrt13_squares_to_13() {
    let s = sqrt13();
    assert_eq!(&s * &s, CycloNum::integer(13));
}

#[test]
fn theta_sum_is_minus_one() {
    let sum = theta(1) + (theta(2) + theta(3) + theta(4));
    assert_eq!(sum, CycloNum::integer(-1));
}

#[test]
fn sub_self_is_zero() {
    let x = theta(2) * sqrt13() + CycloNum::ratio(3, 7);
    assert!((&x - &x).is_zero());
}

#[test]
fn division_by_zero_is_reported() {
    let x = CycloNum::one(13);
    assert_eq!(
        x.checked_div(&CycloNum::zero(13)),
        Err(CycloError::DivisionByZero)
    );
}

#[test]
fn division_roundtrips() {
    let a = theta(1) + sqrt13().scale(&rat(2, 3));
    let b = theta(4) - CycloNum::ratio(1, 5);
    let q = a.checked_div(&b).unwrap();
    assert_eq!(&q * &b, a);
}

#[test]
fn galois_identity_automorphism() {
    let z = CycloNum::zeta(13);
    assert_eq!(z.galois(1).unwrap(), z);
}

#[test]
fn galois_of_sqrt13_by_nonresidue_flips_sign() {
    // Termwise oracle: apply ζ ↦ ζ² to the defining exponent list of √13
    // and canonicalize, independently of the galois() code path.
    let plus = [1i64, 12, 3, 10, 9, 4];
    let minus = [5i64, 8, 2, 11, 6, 7];
    let mut expected = CycloNum::zero(13);
    for e in plus {
        expected = expected + CycloNum::root(13, 2 * e);
    }
    for e in minus {
        expected = expected - CycloNum::root(13, 2 * e);
    }
    let got = sqrt13().galois(2).unwrap();
    assert_eq!(got, expected);
    assert_eq!(got, -sqrt13());
}

#[test]
fn galois_fixes_theta1_under_sigma3() {
    // θ1 = ζ + ζ³ + ζ⁹ is the orbit sum of ⟨3⟩ ⊂ (Z/13)^×; direct
    // substitution oracle: exponents {1,3,9} ↦ {3,9,27 mod 13} = {3,9,1}.
    let substituted = CycloNum::root(13, 3) + CycloNum::root(13, 9) + CycloNum::root(13, 27);
    assert_eq!(substituted, theta(1));
    assert_eq!(theta(1).galois(3).unwrap(), theta(1));
}

#[test]
fn galois_rejects_non_coprime() {
    assert!(matches!(
        CycloNum::zeta(26).galois(13),
        Err(CycloError::GaloisNotCoprime { .. })
    ));
}

#[test]
fn embed_sqrt13_matches_integer_newton_oracle() {
    // Oracle: floor(sqrt(13 · 10^116)) via pure integer arithmetic.
    let digits = 58u32;
    let scaled = BigInt::from(13) * BigInt::from(10u32).pow(2 * digits);
    let isqrt = scaled.sqrt(); // 36055512754639892931…
    let e = Embedder::new(60);
    let v = e.embed(&sqrt13());
    let oracle = Fixed {
        mantissa: (&isqrt << e.bits()) / BigInt::from(10u32).pow(digits),
        bits: e.bits(),
    };
    assert!(v.re.sub(&oracle).below_pow10(55), "re = {}", v.re.to_decimal(60));
    assert!(v.im.below_pow10(55));
    assert!(v.re.to_decimal(20).starts_with("3.6055512754639892931"));
}

#[test]
fn embed_theta1_is_in_first_quadrant() {
    let e = Embedder::new(60);
    let v = e.embed(&theta(1));
    assert!(v.re.is_positive() && v.im.is_positive());
    let v2 = e.embed(&theta(2));
    assert!(v2.re.is_negative() && v2.im.is_positive());
    let v3 = e.embed(&theta(3));
    assert!(v3.re.is_positive() && v3.im.is_negative());
    let v4 = e.embed(&theta(4));
    assert!(v4.re.is_negative() && v4.im.is_negative());
}

#[test]
fn embed_zero_is_zero() {
    let e = Embedder::new(60);
    let v = e.embed(&CycloNum::zero(13));
    assert!(v.re.mantissa.is_zero() && v.im.mantissa.is_zero());
}

#[test]
fn theta_elementary_symmetric_functions() {
    let t = [theta(1), theta(2), theta(3), theta(4)];
    let e1 = t.iter().fold(CycloNum::zero(13), |a, x| a + x.clone());
    let mut e2 = CycloNum::zero(13);
    let mut e3 = CycloNum::zero(13);
    for i in 0..4 {
        for j in (i + 1)..4 {
            e2 = e2 + &t[i] * &t[j];
            for k in (j + 1)..4 {
                e3 = e3 + &(&t[i] * &t[j]) * &t[k];
            }
        }
    }
    let e4 = t.iter().fold(CycloNum::one(13), |a, x| a * x.clone());
    assert_eq!(e1, CycloNum::integer(-1));
    assert_eq!(e2, CycloNum::integer(2));
    assert_eq!(e3, CycloNum::integer(4));
    assert_eq!(e4, CycloNum::integer(3));
}

#[test]
fn theta_combination_identities_with_sign_branches() {
    // Sum and alternating sums of the periods, with the branch of each
    // radical pinned by the complex embedding.
    assert_eq!(
        theta(1) + theta(3) + theta(2) + theta(4),
        CycloNum::integer(-1)
    );
    assert_eq!(theta(1) + theta(3) - theta(2) - theta(4), sqrt13());
    // (θ1−θ3−θ2+θ4)² = −13+2√13 with negative-imaginary branch
    let lhs = theta(1) - theta(3) - theta(2) + theta(4);
    assert_eq!(&lhs * &lhs, CycloNum::integer(-13) + sqrt13().scale(&rat(2, 1)));
    assert_eq!(lhs, -r3());
    // (θ1−θ3+θ2−θ4)² = −13−2√13 with positive-imaginary branch
    let lhs2 = r1();
    assert_eq!(
        &lhs2 * &lhs2,
        CycloNum::integer(-13) - sqrt13().scale(&rat(2, 1))
    );
    let e = Embedder::new(60);
    assert!(e.embed(&lhs2).im.is_positive());
    assert!(e.embed(&lhs).im.is_negative());
    assert!(e.embed(&r2()).im.is_positive());
    assert!(e.embed(&r4()).im.is_positive());
    // r2·r4 = −√13 ties the two half-discriminant branches together.
    assert_eq!(r2() * r4(), -sqrt13());
}

#[test]
fn sine_product_ratio_is_fundamental_unit() {
    // sin(kπ/13) = (ζ52^{2k} − ζ52^{−2k}) / (2i); in the ratio of two
    // triple products the (2i)³ factors cancel.
    let diff = |k: i64| CycloNum::root(52, 2 * k) - CycloNum::root(52, -2 * k);
    let num = &(&diff(2) * &diff(5)) * &diff(6);
    let den = &(&diff(1) * &diff(3)) * &diff(4);
    let ratio = num.checked_div(&den).unwrap();
    let expected = (CycloNum::integer(3) + sqrt13())
        .scale(&rat(1, 2))
        .lift_to(52)
        .unwrap();
    assert_eq!(ratio, expected);
}

#[test]
fn p_constants_agree_with_expanded_forms() {
    for i in 1..=6 {
        assert_eq!(p(i), p_long(i), "p{i} mismatch");
    }
    let expected = sqrt13() * (CycloNum::root(13, 2) + CycloNum::root(13, 11));
    assert_eq!(constant("p1").unwrap().value, expected);
}

#[test]
fn eta_satisfies_cubic() {
    let e = eta();
    let val = e.pow(3) + e.pow(2) - e.scale(&rat(2, 1)) - CycloNum::one(7);
    assert!(val.is_zero());
}

#[test]
fn alpha_beta_gamma_sum_to_sqrt13() {
    assert_eq!(alpha() + beta() + gamma(), sqrt13());
}

#[test]
fn all_catalogued_constants_construct() {
    for name in catalogued_names() {
        let c = constant(&name).unwrap();
        assert_eq!(c.name, name);
    }
    assert!(matches!(
        constant("nonsense"),
        Err(CycloError::UnknownName(_))
    ));
}

#[test]
fn r_constants_square_correctly() {
    assert_eq!(&r1() * &r1(), CycloNum::integer(-13) - sqrt13().scale(&rat(2, 1)));
    assert_eq!(&r2() * &r2(), CycloNum::ratio(-13, 2) + sqrt13().scale(&rat(3, 2)));
    assert_eq!(&r3() * &r3(), CycloNum::integer(-13) + sqrt13().scale(&rat(2, 1)));
    assert_eq!(&r4() * &r4(), CycloNum::ratio(-13, 2) - sqrt13().scale(&rat(3, 2)));
}

#[test]
fn cross_conductor_comparison_lifts() {
    let one13 = CycloNum::one(13);
    let one7 = CycloNum::one(7);
    assert_eq!(one13, one7);
    let s13 = sqrt13();
    let s26 = s13.lift_to(26).unwrap();
    assert_eq!(s13, s26);
    assert_eq!(&s26 * &s26, CycloNum::integer(13));
}

#[test]
fn text_serialization_round_trip() {
    let x = theta(1).scale(&rat(-7, 3)) + sqrt13();
    let s = x.to_text();
    assert_eq!(CycloNum::parse_text(&s).unwrap(), x);
    assert!(CycloNum::parse_text("13; 1, 2").is_err());
    assert!(CycloNum::parse_text("garbage").is_err());
}

fn arb_cyclo() -> impl Strategy<Value = CycloNum> {
    let conductor = prop::sample::select(vec![1u32, 7, 13, 26]);
    conductor.prop_flat_map(|n| {
        let len = phi(n) as usize;
        prop::collection::vec((-6i64..=6, 1i64..=4), len).prop_map(move |cs| {
            let raw: Vec<Rat> = cs
                .into_iter()
                .map(|(p, q)| Rat::new(BigInt::from(p), BigInt::from(q)))
                .collect();
            CycloNum::canon(n, &raw).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn field_axioms(a in arb_cyclo(), b in arb_cyclo(), c in arb_cyclo()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn galois_composes(a in arb_cyclo(), k in 0usize..4, l in 0usize..4) {
        let n = a.conductor();
        let units: Vec<i64> = (1..=n as i64).filter(|x| (*x as u32).gcd(&n) == 1).collect();
        let k = units[k % units.len()];
        let l = units[l % units.len()];
        let lhs = a.galois(k).unwrap().galois(l).unwrap();
        let rhs = a.galois(k * l % n as i64).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn embed_is_multiplicative(a in arb_cyclo(), b in arb_cyclo()) {
        let e = Embedder::new(60);
        let (a, b) = CycloNum::common(&a, &b);
        let lhs = e.embed(&(&a * &b));
        let rhs = e.embed(&a).mul(&e.embed(&b));
        prop_assert!(lhs.dist(&rhs).below_pow10(50));
    }

    #[test]
    fn serialization_round_trips(a in arb_cyclo()) {
        prop_assert_eq!(CycloNum::parse_text(&a.to_text()).unwrap(), a);
    }
}
