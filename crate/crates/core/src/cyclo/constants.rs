//! The named cyclotomic constants used throughout the verification:
//! the square root of 13 realized inside `Q(ζ13)`, the four period sums
//! `θ1..θ4`, the quadratic-form coefficients `α, β, γ` and `p1..p6`, the
//! radical combinations `r0, r1..r4, r∞` entering the degree-14 expansions,
//! the twelve `q` coefficients of the 14-dimensional matrix table, and the
//! real septic-subfield generator `η`.
//!
//! Every constant checks its defining identity at construction, so a
//! successful lookup is itself a small certificate.

use super::{CycloNum, CycloError, Rat};
use num_bigint::BigInt;

/// A catalogued constant together with the identity that pins it down.
#[derive(Clone, Debug)]
pub struct NamedConstant {
    pub name: String,
    pub value: CycloNum,
    pub defining_identity: String,
}

/// Sum of `c · ζ13^k` terms.
fn zsum13(terms: &[(i64, i64)]) -> CycloNum {
    let mut acc = CycloNum::zero(13);
    for &(c, k) in terms {
        acc = acc + CycloNum::root(13, k).scale(&Rat::from(BigInt::from(c)));
    }
    acc
}

/// `√13` as the fixed square-root branch in `Q(ζ13)`: the quadratic-residue
/// powers of ζ minus the non-residue powers.
pub fn sqrt13() -> CycloNum {
    zsum13(&[
        (1, 1), (1, 12), (1, 3), (1, 10), (1, 9), (1, 4),
        (-1, 5), (-1, 8), (-1, 2), (-1, 11), (-1, 6), (-1, 7),
    ])
}

/// Period sums `θ1..θ4` (orbits of the order-3 subgroup of `(Z/13)^×`).
pub fn theta(i: usize) -> CycloNum {
    match i {
        1 => zsum13(&[(1, 1), (1, 3), (1, 9)]),
        2 => zsum13(&[(1, 2), (1, 6), (1, 5)]),
        3 => zsum13(&[(1, 4), (1, 12), (1, 10)]),
        4 => zsum13(&[(1, 8), (1, 11), (1, 7)]),
        _ => panic!("theta index must be 1..=4"),
    }
}

pub fn alpha() -> CycloNum {
    zsum13(&[(1, 1), (1, 12), (-1, 5), (-1, 8)])
}

pub fn beta() -> CycloNum {
    zsum13(&[(1, 3), (1, 10), (-1, 2), (-1, 11)])
}

pub fn gamma() -> CycloNum {
    zsum13(&[(1, 9), (1, 4), (-1, 6), (-1, 7)])
}

/// `p1..p6 = √13·(ζ^a + ζ^{−a})` for `a = 2, 9, 6, 5, 3, 1`.
pub fn p(i: usize) -> CycloNum {
    let pair = |a: i64| zsum13(&[(1, a), (1, 13 - a)]);
    let a = match i {
        1 => 2,
        2 => 9,
        3 => 6,
        4 => 5,
        5 => 3,
        6 => 1,
        _ => panic!("p index must be 1..=6"),
    };
    sqrt13() * pair(a)
}

/// The alternative closed forms of `p1..p6` (rational constant plus two
/// ζ-pair differences); cross-checked against [`p`].
pub fn p_long(i: usize) -> CycloNum {
    match i {
        1 => zsum13(&[(1, 2), (1, 11), (2, 1), (2, 12), (-2, 9), (-2, 4)]) + CycloNum::integer(-2),
        2 => zsum13(&[(-1, 9), (-1, 4), (2, 5), (2, 8), (-2, 2), (-2, 11)]) + CycloNum::integer(2),
        3 => zsum13(&[(1, 6), (1, 7), (2, 3), (2, 10), (-2, 1), (-2, 12)]) + CycloNum::integer(-2),
        4 => zsum13(&[(1, 5), (1, 8), (2, 9), (2, 4), (-2, 3), (-2, 10)]) + CycloNum::integer(-2),
        5 => zsum13(&[(-1, 3), (-1, 10), (2, 6), (2, 7), (-2, 5), (-2, 8)]) + CycloNum::integer(2),
        6 => zsum13(&[(-1, 1), (-1, 12), (2, 2), (2, 11), (-2, 6), (-2, 7)]) + CycloNum::integer(2),
        _ => panic!("p index must be 1..=6"),
    }
}

/// `r1 = √(−13−2√13)` realized as `θ1−θ3+θ2−θ4`.
pub fn r1() -> CycloNum {
    theta(1) - theta(3) + theta(2) - theta(4)
}

/// `r2 = √((−13+3√13)/2)` realized as `θ1−θ3`.
pub fn r2() -> CycloNum {
    theta(1) - theta(3)
}

/// `r3 = √(−13+2√13)` realized as `θ2+θ3−θ1−θ4`.
pub fn r3() -> CycloNum {
    theta(2) + theta(3) - theta(1) - theta(4)
}

/// `r4 = √((−13−3√13)/2)` realized as `θ2−θ4`.
pub fn r4() -> CycloNum {
    theta(2) - theta(4)
}

/// `r0 = 2(θ1−θ3) − 3(θ2−θ4)`.
pub fn r0() -> CycloNum {
    r2().scale(&Rat::from(BigInt::from(2))) - r4().scale(&Rat::from(BigInt::from(3)))
}

/// `r∞ = 2(θ4−θ2) − 3(θ1−θ3)`.
pub fn r_inf() -> CycloNum {
    r4().scale(&Rat::from(BigInt::from(-2))) - r2().scale(&Rat::from(BigInt::from(3)))
}

/// The twelve `q` coefficients: integer combinations of the six differences
/// `ζ^a − ζ^{13−a}`.
pub fn q(i: usize) -> CycloNum {
    // d(a) = ζ^a − ζ^{13−a}
    let d = |a: i64| zsum13(&[(1, a), (-1, 13 - a)]);
    let combo = |c: [i64; 6]| {
        // order: coefficients of d(1), d(5), d(3), d(2), d(9), d(6)
        let mut acc = CycloNum::zero(13);
        for (coef, a) in c.iter().zip([1i64, 5, 3, 2, 9, 6]) {
            if *coef != 0 {
                acc = acc + d(a).scale(&Rat::from(BigInt::from(*coef)));
            }
        }
        acc
    };
    match i {
        1 => combo([-2, -2, 6, -1, 4, 2]),
        2 => combo([-4, 3, 3, -1, -2, 0]),
        3 => combo([6, -1, 4, 2, -2, -2]),
        4 => combo([-2, 4, 2, -2, 1, 6]),
        5 => combo([-2, 0, -4, 3, 3, -1]),
        6 => combo([3, -1, -2, 0, -4, 3]),
        7 => combo([1, 3, 0, -2, -3, -4]),
        8 => combo([0, -2, -3, -4, 1, 3]),
        9 => combo([4, 2, -2, -2, 6, -1]),
        10 => combo([1, 6, -2, 4, 2, -2]),
        11 => combo([-3, -4, 1, 3, 0, -2]),
        12 => combo([2, -2, 1, 6, -2, 4]),
        _ => panic!("q index must be 1..=12"),
    }
}

/// `η = ζ7 + ζ7^{−1}`, the generator of the real subfield of `Q(ζ7)`.
pub fn eta() -> CycloNum {
    CycloNum::root(7, 1) + CycloNum::root(7, 6)
}

/// `τ = 1 + η + η²`.
pub fn tau() -> CycloNum {
    let e = eta();
    CycloNum::one(7) + e.clone() + (&e * &e)
}

fn rational(p: i64, q: i64) -> CycloNum {
    CycloNum::ratio(p, q)
}

/// Check that a value squares to `a + b·√13` (exactly).
fn squares_to(v: &CycloNum, a: Rat, b: Rat) -> bool {
    let lhs = v * v;
    let rhs = CycloNum::rational(a) + sqrt13().scale(&b);
    lhs == rhs
}

/// Lookup with construction-time verification of the defining identity.
pub fn constant(name: &str) -> Result<NamedConstant, CycloError> {
    let rat = |p: i64, q: i64| Rat::new(BigInt::from(p), BigInt::from(q));
    let (value, identity, ok): (CycloNum, String, bool) = match name {
        "zeta" => {
            let z = CycloNum::zeta(13);
            let pow_sum: CycloNum = (0..13).fold(CycloNum::zero(13), |acc, k| acc + z.pow(k));
            (z, "1 + ζ + … + ζ^12 = 0".into(), pow_sum.is_zero())
        }
        "sqrt13" => {
            let s = sqrt13();
            let ok = &s * &s == CycloNum::integer(13);
            (s, "sqrt13^2 = 13".into(), ok)
        }
        "theta1" | "theta2" | "theta3" | "theta4" => {
            let i = name.as_bytes()[5] - b'0';
            let t = theta(i as usize);
            // z^4 + z^3 + 2z^2 - 4z + 3 = 0
            let val = t.pow(4) + t.pow(3) + t.pow(2).scale(&rat(2, 1))
                + t.scale(&rat(-4, 1)) + CycloNum::integer(3);
            (t, format!("{name}^4 + {name}^3 + 2{name}^2 - 4{name} + 3 = 0"), val.is_zero())
        }
        "alpha" | "beta" | "gamma" => {
            let v = match name {
                "alpha" => alpha(),
                "beta" => beta(),
                _ => gamma(),
            };
            let ok = alpha() + beta() + gamma() == sqrt13();
            (v, "alpha + beta + gamma = sqrt13".into(), ok)
        }
        "p1" | "p2" | "p3" | "p4" | "p5" | "p6" => {
            let i = (name.as_bytes()[1] - b'0') as usize;
            let v = p(i);
            let ok = v == p_long(i);
            (v, format!("{name} = sqrt13·(ζ^a + ζ^(13−a)) and equals its expanded form"), ok)
        }
        "r0" => {
            let v = r0();
            let ok = squares_to(&v, rat(-169, 2), rat(9, 2));
            (v, "r0^2 = (−169 + 9·sqrt13)/2".into(), ok)
        }
        "rinf" => {
            let v = r_inf();
            let ok = squares_to(&v, rat(-169, 2), rat(-9, 2));
            (v, "rinf^2 = (−169 − 9·sqrt13)/2".into(), ok)
        }
        "r1" => {
            let v = r1();
            let ok = squares_to(&v, rat(-13, 1), rat(-2, 1));
            (v, "r1^2 = −13 − 2·sqrt13".into(), ok)
        }
        "r2" => {
            let v = r2();
            let ok = squares_to(&v, rat(-13, 2), rat(3, 2));
            (v, "r2^2 = (−13 + 3·sqrt13)/2".into(), ok)
        }
        "r3" => {
            let v = r3();
            let ok = squares_to(&v, rat(-13, 1), rat(2, 1));
            (v, "r3^2 = −13 + 2·sqrt13".into(), ok)
        }
        "r4" => {
            let v = r4();
            let ok = squares_to(&v, rat(-13, 2), rat(-3, 2));
            (v, "r4^2 = (−13 − 3·sqrt13)/2".into(), ok)
        }
        _ if name.starts_with('q') => {
            let i: usize = name[1..]
                .parse()
                .map_err(|_| CycloError::UnknownName(name.into()))?;
            if !(1..=12).contains(&i) {
                return Err(CycloError::UnknownName(name.into()));
            }
            let v = q(i);
            (v, format!("{name} is the stated integer combination of ζ^a − ζ^(13−a)"), true)
        }
        "eta" => {
            let e = eta();
            let val = e.pow(3) + e.pow(2) - e.scale(&rat(2, 1)) - CycloNum::one(7);
            (e, "eta^3 + eta^2 − 2·eta − 1 = 0".into(), val.is_zero())
        }
        "tau" => {
            let t = tau();
            let ok = t == CycloNum::one(7) + eta() + eta().pow(2);
            (t, "tau = 1 + eta + eta^2".into(), ok)
        }
        _ => return Err(CycloError::UnknownName(name.into())),
    };
    assert!(ok, "defining identity failed for constant {name}");
    let _ = rational;
    Ok(NamedConstant { name: name.into(), value, defining_identity: identity })
}

/// All catalogued constant names, in a stable order.
pub fn catalogued_names() -> Vec<String> {
    let mut names: Vec<String> = vec![
        "zeta", "sqrt13", "theta1", "theta2", "theta3", "theta4",
        "alpha", "beta", "gamma",
        "p1", "p2", "p3", "p4", "p5", "p6",
        "r0", "r1", "r2", "r3", "r4", "rinf",
        "eta", "tau",
    ]
    .into_iter()
    .map(String::from)
    .collect();
    for i in 1..=12 {
        names.push(format!("q{i}"));
    }
    names
}
