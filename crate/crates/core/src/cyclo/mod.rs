//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! An element is stored on the power basis `ζ^0, …, ζ^{φ(n)−1}` with
//! arbitrary-precision rational coordinates, reduced modulo the n-th
//! cyclotomic polynomial. The representation is canonical for a fixed
//! conductor, so equality at equal conductors is coefficient equality;
//! mixed-conductor comparisons and arithmetic lift both operands to the
//! least common conductor. Conductors are never minimized: an element
//! constructed in `Q(ζ26)` stays there even if it happens to lie in a
//! subfield.
//!
//! The primary conductor in this crate is 13; conductors 7, 26 and 52 are
//! used for the real-subfield and sine-product checks.

mod embed;
pub mod constants;

pub use embed::{CFixed, Embedder, Fixed};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

/// Exact rational scalar.
pub type Rat = BigRational;

/// Errors from cyclotomic operations. Everything is reported, nothing
/// panics on user input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycloError {
    ZeroConductor,
    RawTooLong { len: usize, conductor: u32 },
    DivisionByZero,
    GaloisNotCoprime { k: i64, conductor: u32 },
    IncompatibleConductors { a: u32, b: u32 },
    Parse(String),
    UnknownName(String),
}

impl fmt::Display for CycloError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycloError::ZeroConductor => write!(f, "conductor must be positive"),
            CycloError::RawTooLong { len, conductor } => {
                write!(f, "raw vector of length {len} exceeds conductor {conductor}")
            }
            CycloError::DivisionByZero => write!(f, "division by zero"),
            CycloError::GaloisNotCoprime { k, conductor } => {
                write!(f, "galois exponent {k} not coprime to conductor {conductor}")
            }
            CycloError::IncompatibleConductors { a, b } => {
                write!(f, "incompatible conductors {a} and {b}")
            }
            CycloError::Parse(s) => write!(f, "parse error: {s}"),
            CycloError::UnknownName(s) => write!(f, "unknown constant name: {s}"),
        }
    }
}

impl std::error::Error for CycloError {}

/// Euler totient, by trial division (conductors here are tiny).
pub fn phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn divisors(n: u32) -> Vec<u32> {
    let mut d: Vec<u32> = (1..=n).filter(|k| n % k == 0).collect();
    d.sort_unstable();
    d
}

/// Exact division of integer polynomials (assumes divisibility; remainder
/// is asserted zero). Coefficient index = degree.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(dn >= dd);
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        // den is monic in every use here via x^d - 1 factor chains, but a
        // general exact step costs nothing extra.
        let c = &rem[k + dd] / &den[dd];
        quot[k] = c.clone();
        if !c.is_zero() {
            for j in 0..=dd {
                let t = &c * &den[j];
                rem[k + j] -= t;
            }
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    quot
}

/// The n-th cyclotomic polynomial as a monic integer coefficient vector of
/// length `φ(n)+1`, computed by dividing `x^n − 1` by all proper cyclotomic
/// factors. Cached per conductor.
pub fn cyclotomic_poly(n: u32) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let poly = if n == 1 {
        vec![-BigInt::one(), BigInt::one()]
    } else {
        let mut f = vec![BigInt::zero(); n as usize + 1];
        f[0] = -BigInt::one();
        f[n as usize] = BigInt::one();
        for d in divisors(n) {
            if d < n {
                let phi_d = cyclotomic_poly(d);
                f = poly_div_exact(&f, &phi_d);
            }
        }
        f
    };
    debug_assert_eq!(poly.len() as u32, phi(n) + 1);
    debug_assert!(poly.last().unwrap().is_one());
    let arc = Arc::new(poly);
    cache.lock().unwrap().insert(n, arc.clone());
    arc
}

/// An exact element of `Q(ζ_n)`.
#[derive(Clone)]
pub struct CycloNum {
    conductor: u32,
    coeffs: Vec<Rat>,
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum({})", self.to_text())
    }
}

/// Reduce rational coefficients (indexed by power of ζ, any length) modulo
/// the n-th cyclotomic polynomial, returning exactly `φ(n)` coordinates.
fn reduce_rat(n: u32, mut v: Vec<Rat>) -> Vec<Rat> {
    let deg = phi(n) as usize;
    let cp = cyclotomic_poly(n);
    if v.len() < deg {
        v.resize(deg, Rat::zero());
        return v;
    }
    for i in (deg..v.len()).rev() {
        if v[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut v[i], Rat::zero());
        for j in 0..deg {
            if !cp[j].is_zero() {
                let t = &c * Rat::from(cp[j].clone());
                v[i - deg + j] -= t;
            }
        }
    }
    v.truncate(deg);
    v
}

/// Integer variant of [`reduce_rat`], used on the fast multiplication path.
fn reduce_int(n: u32, mut v: Vec<BigInt>) -> Vec<BigInt> {
    let deg = phi(n) as usize;
    let cp = cyclotomic_poly(n);
    if v.len() < deg {
        v.resize(deg, BigInt::zero());
        return v;
    }
    for i in (deg..v.len()).rev() {
        if v[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut v[i], BigInt::zero());
        for j in 0..deg {
            if !cp[j].is_zero() {
                let t = &c * &cp[j];
                v[i - deg + j] -= t;
            }
        }
    }
    v.truncate(deg);
    v
}

fn clear_denominators(coeffs: &[Rat]) -> (Vec<BigInt>, BigInt) {
    let mut den = BigInt::one();
    for c in coeffs {
        den = den.lcm(c.denom());
    }
    let nums = coeffs
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    (nums, den)
}

impl CycloNum {
    /// The unique reduced representative of a raw coefficient vector over
    /// `ζ^0, …, ζ^{len−1}`. Rejects conductor 0 and vectors longer than the
    /// conductor.
    pub fn canon(n: u32, raw: &[Rat]) -> Result<CycloNum, CycloError> {
        if n == 0 {
            return Err(CycloError::ZeroConductor);
        }
        if raw.len() > n as usize {
            return Err(CycloError::RawTooLong { len: raw.len(), conductor: n });
        }
        Ok(CycloNum { conductor: n, coeffs: reduce_rat(n, raw.to_vec()) })
    }

    pub fn zero(n: u32) -> CycloNum {
        CycloNum { conductor: n, coeffs: vec![Rat::zero(); phi(n) as usize] }
    }

    pub fn one(n: u32) -> CycloNum {
        let mut z = CycloNum::zero(n);
        z.coeffs[0] = Rat::one();
        z
    }

    /// A rational number, embedded at conductor 1.
    pub fn rational(r: Rat) -> CycloNum {
        CycloNum { conductor: 1, coeffs: vec![r] }
    }

    pub fn integer(k: i64) -> CycloNum {
        CycloNum::rational(Rat::from(BigInt::from(k)))
    }

    pub fn ratio(p: i64, q: i64) -> CycloNum {
        CycloNum::rational(Rat::new(BigInt::from(p), BigInt::from(q)))
    }

    /// `ζ_n^k` (k may be any integer; it is reduced mod n).
    pub fn root(n: u32, k: i64) -> CycloNum {
        let k = k.rem_euclid(n as i64) as usize;
        let mut raw = vec![Rat::zero(); k + 1];
        raw[k] = Rat::one();
        CycloNum { conductor: n, coeffs: reduce_rat(n, raw) }
    }

    /// `ζ_n`.
    pub fn zeta(n: u32) -> CycloNum {
        CycloNum::root(n, 1)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value of this element, when it lies in `Q`.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Lift to a larger conductor `m` (requires `n | m`), via
    /// `ζ_n = ζ_m^{m/n}`.
    pub fn lift_to(&self, m: u32) -> Result<CycloNum, CycloError> {
        if m % self.conductor != 0 {
            return Err(CycloError::IncompatibleConductors { a: self.conductor, b: m });
        }
        if m == self.conductor {
            return Ok(self.clone());
        }
        let step = (m / self.conductor) as usize;
        let mut raw = vec![Rat::zero(); m as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[(i * step) % m as usize] += c;
            }
        }
        Ok(CycloNum { conductor: m, coeffs: reduce_rat(m, raw) })
    }

    /// Bring two elements to a common conductor (their lcm).
    pub fn common(a: &CycloNum, b: &CycloNum) -> (CycloNum, CycloNum) {
        if a.conductor == b.conductor {
            return (a.clone(), b.clone());
        }
        let l = a.conductor.lcm(&b.conductor);
        (a.lift_to(l).unwrap(), b.lift_to(l).unwrap())
    }

    fn add_same(&self, o: &CycloNum) -> CycloNum {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&o.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CycloNum { conductor: self.conductor, coeffs }
    }

    fn sub_same(&self, o: &CycloNum) -> CycloNum {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&o.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CycloNum { conductor: self.conductor, coeffs }
    }

    /// Product at a common conductor. Denominators are cleared so the
    /// convolution and reduction run over integers; the two gcd
    /// normalizations per coordinate happen once at the end.
    fn mul_same(&self, o: &CycloNum) -> CycloNum {
        let n = self.conductor;
        if self.is_zero() || o.is_zero() {
            return CycloNum::zero(n);
        }
        let (na, da) = clear_denominators(&self.coeffs);
        let (nb, db) = clear_denominators(&o.coeffs);
        let mut conv = vec![BigInt::zero(); na.len() + nb.len() - 1];
        for (i, a) in na.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in nb.iter().enumerate() {
                if !b.is_zero() {
                    conv[i + j] += a * b;
                }
            }
        }
        let red = reduce_int(n, conv);
        let den = da * db;
        let coeffs = red
            .into_iter()
            .map(|c| Rat::new(c, den.clone()))
            .collect();
        CycloNum { conductor: n, coeffs }
    }

    pub fn neg(&self) -> CycloNum {
        CycloNum {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, r: &Rat) -> CycloNum {
        CycloNum {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in
    /// `Q[x]` against the (irreducible) cyclotomic polynomial.
    pub fn inv(&self) -> Result<CycloNum, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            let mut z = CycloNum::zero(self.conductor);
            z.coeffs[0] = Rat::one() / r;
            return Ok(z);
        }
        let n = self.conductor;
        let cp = cyclotomic_poly(n);
        let modulus: Vec<Rat> = cp.iter().map(|c| Rat::from(c.clone())).collect();

        fn deg(p: &[Rat]) -> Option<usize> {
            p.iter().rposition(|c| !c.is_zero())
        }
        fn poly_divmod(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
            let dd = deg(den).expect("division by zero polynomial");
            let lead = den[dd].clone();
            let mut rem = num.to_vec();
            let mut quot = vec![Rat::zero(); num.len()];
            while let Some(dn) = deg(&rem) {
                if dn < dd {
                    break;
                }
                let c = &rem[dn] / &lead;
                quot[dn - dd] = c.clone();
                for j in 0..=dd {
                    let t = &c * &den[j];
                    rem[dn - dd + j] -= t;
                }
            }
            (quot, rem)
        }
        fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
            let (da, db) = match (deg(a), deg(b)) {
                (Some(da), Some(db)) => (da, db),
                _ => return vec![Rat::zero()],
            };
            let mut out = vec![Rat::zero(); da + db + 1];
            for i in 0..=da {
                if a[i].is_zero() {
                    continue;
                }
                for j in 0..=db {
                    if !b[j].is_zero() {
                        let t = &a[i] * &b[j];
                        out[i + j] += t;
                    }
                }
            }
            out
        }
        fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
            let len = a.len().max(b.len());
            let mut out = vec![Rat::zero(); len];
            for (i, c) in a.iter().enumerate() {
                out[i] += c;
            }
            for (i, c) in b.iter().enumerate() {
                out[i] -= c;
            }
            out
        }

        let mut r0 = modulus;
        let mut r1 = self.coeffs.clone();
        let mut t0 = vec![Rat::zero()];
        let mut t1 = vec![Rat::one()];
        while let Some(d1) = deg(&r1) {
            if d1 == 0 {
                // r1 is the (nonzero) gcd scalar: inverse = t1 / r1.
                let s = Rat::one() / r1[0].clone();
                let coeffs = reduce_rat(n, t1.iter().map(|c| c * &s).collect());
                return Ok(CycloNum { conductor: n, coeffs });
            }
            let (q, rem) = poly_divmod(&r0, &r1);
            let t2 = poly_sub(&t0, &poly_mul(&q, &t1));
            r0 = r1;
            r1 = rem;
            t0 = t1;
            t1 = t2;
        }
        // Unreachable for nonzero input: the cyclotomic polynomial is
        // irreducible over Q.
        Err(CycloError::DivisionByZero)
    }

    pub fn checked_div(&self, o: &CycloNum) -> Result<CycloNum, CycloError> {
        let (a, b) = CycloNum::common(self, o);
        Ok(a.mul_same(&b.inv()?))
    }

    /// Nonnegative integer power.
    pub fn pow(&self, mut k: u64) -> CycloNum {
        let mut base = self.clone();
        let mut acc = CycloNum::one(self.conductor);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_same(&base);
            }
            base = base.mul_same(&base);
            k >>= 1;
        }
        acc
    }

    /// Image under the Galois automorphism `σ_k : ζ ↦ ζ^k`, defined for
    /// `gcd(k, n) = 1`.
    pub fn galois(&self, k: i64) -> Result<CycloNum, CycloError> {
        let n = self.conductor;
        let kk = k.rem_euclid(n as i64) as u32;
        if n > 1 && kk.gcd(&n) != 1 {
            return Err(CycloError::GaloisNotCoprime { k, conductor: n });
        }
        let mut raw = vec![Rat::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[(i * kk as usize) % n as usize] += c;
            }
        }
        Ok(CycloNum { conductor: n, coeffs: reduce_rat(n, raw) })
    }

    /// Complex conjugation (`σ_{−1}`).
    pub fn conj(&self) -> CycloNum {
        self.galois(-1).expect("-1 is always coprime to the conductor")
    }

    /// Text serialization `n; c0, c1, …` with exact rationals `p/q`.
    pub fn to_text(&self) -> String {
        let body: Vec<String> = self
            .coeffs
            .iter()
            .map(|c| {
                if c.denom().is_one() {
                    format!("{}", c.numer())
                } else {
                    format!("{}/{}", c.numer(), c.denom())
                }
            })
            .collect();
        format!("{}; {}", self.conductor, body.join(", "))
    }

    /// Inverse of [`CycloNum::to_text`].
    pub fn parse_text(s: &str) -> Result<CycloNum, CycloError> {
        let (head, body) = s
            .split_once(';')
            .ok_or_else(|| CycloError::Parse(format!("missing ';' in {s:?}")))?;
        let n: u32 = head
            .trim()
            .parse()
            .map_err(|_| CycloError::Parse(format!("bad conductor in {s:?}")))?;
        if n == 0 {
            return Err(CycloError::ZeroConductor);
        }
        let mut coeffs = Vec::new();
        for part in body.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let r = match part.split_once('/') {
                Some((p, q)) => {
                    let p: BigInt = p.trim().parse().map_err(|_| {
                        CycloError::Parse(format!("bad numerator {part:?}"))
                    })?;
                    let q: BigInt = q.trim().parse().map_err(|_| {
                        CycloError::Parse(format!("bad denominator {part:?}"))
                    })?;
                    if q.is_zero() {
                        return Err(CycloError::Parse("zero denominator".into()));
                    }
                    Rat::new(p, q)
                }
                None => Rat::from(part.parse::<BigInt>().map_err(|_| {
                    CycloError::Parse(format!("bad integer {part:?}"))
                })?),
            };
            coeffs.push(r);
        }
        if coeffs.len() != phi(n) as usize {
            return Err(CycloError::Parse(format!(
                "expected {} coefficients for conductor {n}, got {}",
                phi(n),
                coeffs.len()
            )));
        }
        Ok(CycloNum { conductor: n, coeffs })
    }

    /// Stable byte encoding of the canonical form, used for hashing grids
    /// of entries. Equal elements at equal conductors encode equally.
    pub fn key_bytes(&self, out: &mut Vec<u8>) {
        out.extend_from_slice(&self.conductor.to_le_bytes());
        for c in &self.coeffs {
            let (sign, mag) = (c.numer().sign(), c.numer().magnitude());
            out.push(match sign {
                num_bigint::Sign::Minus => 0,
                num_bigint::Sign::NoSign => 1,
                num_bigint::Sign::Plus => 2,
            });
            let nb = mag.to_bytes_le();
            out.extend_from_slice(&(nb.len() as u32).to_le_bytes());
            out.extend_from_slice(&nb);
            let db = c.denom().magnitude().to_bytes_le();
            out.extend_from_slice(&(db.len() as u32).to_le_bytes());
            out.extend_from_slice(&db);
        }
    }
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = CycloNum::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloNum {}

macro_rules! binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl std::ops::$trait<&CycloNum> for &CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: &CycloNum) -> CycloNum {
                if self.conductor == rhs.conductor {
                    self.$inner(rhs)
                } else {
                    let (a, b) = CycloNum::common(self, rhs);
                    a.$inner(&b)
                }
            }
        }
        impl std::ops::$trait for CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: CycloNum) -> CycloNum {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, add_same);
binop!(Sub, sub, sub_same);
binop!(Mul, mul, mul_same);

impl std::ops::Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum::neg(self)
    }
}

impl std::ops::Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum::neg(&self)
    }
}

/// The four arithmetic kinds exposed to the harness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
    Div,
}

/// Field arithmetic with reported (never panicking) errors.
pub fn arith(a: &CycloNum, b: &CycloNum, kind: ArithKind) -> Result<CycloNum, CycloError> {
    match kind {
        ArithKind::Add => Ok(a + b),
        ArithKind::Sub => Ok(a - b),
        ArithKind::Mul => Ok(a * b),
        ArithKind::Div => a.checked_div(b),
    }
}

#[cfg(test)]
mod tests;
