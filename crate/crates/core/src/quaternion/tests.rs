use super::*;
use crate::cyclo::Embedder;
use crate::rng::SplitMix64;

fn rand_field(rng: &mut SplitMix64) -> FieldK {
    let e = FieldK::eta();
    let e2 = e.mul(&e);
    FieldK::integer(rng.small_int(4))
        .add(&e.scale(&Rat::from(BigInt::from(rng.small_int(4)))))
        .add(&e2.scale(&Rat::from(BigInt::from(rng.small_int(4)))))
}

fn rand_quat(rng: &mut SplitMix64) -> QuatElem {
    QuatElem::new(
        rand_field(rng),
        rand_field(rng),
        rand_field(rng),
        rand_field(rng),
    )
}

#[test]
fn structure_constants() {
    let eta = QuatElem::scalar(FieldK::eta());
    assert_eq!(QuatElem::i().mul(&QuatElem::i()), eta);
    assert_eq!(QuatElem::j().mul(&QuatElem::j()), eta);
    let ij = QuatElem::i().mul(&QuatElem::j());
    let ji = QuatElem::j().mul(&QuatElem::i());
    assert_eq!(ij, QuatElem::ij());
    assert_eq!(ji, ij.neg());
}

#[test]
fn norm_of_one_is_one() {
    assert_eq!(QuatElem::one().norm(), FieldK::one());
}

#[test]
fn norm_is_multiplicative_on_random_inputs() {
    let mut rng = SplitMix64::new(7);
    for _ in 0..25 {
        let x = rand_quat(&mut rng);
        let y = rand_quat(&mut rng);
        assert_eq!(x.mul(&y).norm(), x.norm().mul(&y.norm()));
    }
}

#[test]
fn quaternion_multiplication_is_associative() {
    let mut rng = SplitMix64::new(11);
    for _ in 0..10 {
        let x = rand_quat(&mut rng);
        let y = rand_quat(&mut rng);
        let z = rand_quat(&mut rng);
        assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }
}

#[test]
fn field_k_rejects_non_real_values() {
    assert!(FieldK::new(CycloNum::zeta(7)).is_err());
    assert!(FieldK::new(eta()).is_ok());
}

#[test]
fn elkies_generator_relations() {
    for check in verify_elkies_generators().unwrap() {
        assert!(check.ok, "{} ({:?})", check.claim, check.witness);
    }
}

#[test]
fn g3_norm_oracle_by_regular_representation() {
    // Independent route: N_{K/Q} as the determinant of multiplication by
    // the element on the basis 1, η, η², using η³ = −η² + 2η + 1.
    fn mult_matrix(coords: &[Rat; 3]) -> [[Rat; 3]; 3] {
        // columns: x·1, x·η, x·η² expressed over 1, η, η²
        let (a, b, c) = (coords[0].clone(), coords[1].clone(), coords[2].clone());
        // x·η = aη + bη² + c·η³ = c·1 + (a+2c)·η + (b−c)·η²
        // x·η² = cη·... compute via shifting twice
        let col0 = [a.clone(), b.clone(), c.clone()];
        let col1 = [c.clone(), &a + &(&c + &c), &b - &c];
        // x·η² = (x·η)·η: shift col1 the same way
        let (a1, b1, c1) = (col1[0].clone(), col1[1].clone(), col1[2].clone());
        let col2 = [c1.clone(), &a1 + &(&c1 + &c1), &b1 - &c1];
        [col0, col1, col2]
    }
    fn det3(m: [[Rat; 3]; 3]) -> Rat {
        let [a, b, c] = m;
        &a[0] * &(&b[1] * &c[2] - &b[2] * &c[1]) - &b[0] * &(&a[1] * &c[2] - &a[2] * &c[1])
            + &c[0] * &(&a[1] * &b[2] - &a[2] * &b[1])
    }
    let checks: [(FieldK, i64); 5] = [
        (FieldK::eta(), 1),
        (FieldK::eta().add(&FieldK::integer(2)), 1),
        (
            FieldK::eta().scale(&Rat::from(BigInt::from(2))).sub(&FieldK::one()),
            13,
        ),
        (
            FieldK::integer(3).sub(&FieldK::eta().scale(&Rat::from(BigInt::from(2)))),
            13,
        ),
        (FieldK::eta().add(&FieldK::integer(3)), 13),
    ];
    for (x, expected) in checks {
        let coords = x.basis_coordinates();
        let det = det3(mult_matrix(&coords));
        let galois_norm = x.norm().unwrap();
        assert_eq!(det, galois_norm);
        assert_eq!(galois_norm, Rat::from(BigInt::from(expected)));
    }
}

#[test]
fn prime_split_checks() {
    for check in verify_prime_split().unwrap() {
        assert!(check.ok, "{} ({:?})", check.claim, check.witness);
    }
}

#[test]
fn real_embeddings_have_the_stated_signs() {
    // η ↦ 2cos(2π/7) > 0, the other two conjugates negative.
    let e = Embedder::new(60);
    let signs: Vec<bool> = FieldK::eta()
        .conjugates()
        .iter()
        .map(|c| e.embed(c.value()).re.is_positive())
        .collect();
    assert_eq!(signs, vec![true, false, false]);
}

#[test]
fn order_membership_reports() {
    let checks = verify_order_membership().unwrap();
    assert!(checks[0].ok, "{}", checks[0].claim);
    // Per generator: the literal {1,i,j,j′} span always misses (every
    // generator carries an ij term) — that outcome is reported, not
    // asserted; the membership-pattern checks must hold.
    let expected = [
        false, true, // g2: literal miss, expected pattern holds
        false, true, // g3
        false, true, // g7
    ];
    assert_eq!(checks.len(), 1 + expected.len());
    for (check, expect) in checks[1..].iter().zip(expected) {
        assert_eq!(check.ok, expect, "{}", check.claim);
    }
}
