//! High-precision complex embedding `ζ ↦ exp(2πi/n)`.
//!
//! Implemented as binary fixed point on `BigInt` mantissas: π comes from a
//! Machin formula, sines and cosines from their Taylor series, all in
//! integer arithmetic. Precision (in decimal digits) is configurable; the
//! embedding is used for sign determinations and numeric spot checks only —
//! equality of exact values is never decided here.

use super::{CycloNum, Rat};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// Fixed-point real number: `value = mantissa / 2^bits`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixed {
    pub mantissa: BigInt,
    pub bits: u32,
}

impl Fixed {
    pub fn zero(bits: u32) -> Fixed {
        Fixed { mantissa: BigInt::zero(), bits }
    }

    pub fn from_int(v: i64, bits: u32) -> Fixed {
        Fixed { mantissa: BigInt::from(v) << bits, bits }
    }

    pub fn from_rat(r: &Rat, bits: u32) -> Fixed {
        Fixed { mantissa: (r.numer() << bits) / r.denom(), bits }
    }

    pub fn add(&self, o: &Fixed) -> Fixed {
        debug_assert_eq!(self.bits, o.bits);
        Fixed { mantissa: &self.mantissa + &o.mantissa, bits: self.bits }
    }

    pub fn sub(&self, o: &Fixed) -> Fixed {
        debug_assert_eq!(self.bits, o.bits);
        Fixed { mantissa: &self.mantissa - &o.mantissa, bits: self.bits }
    }

    pub fn neg(&self) -> Fixed {
        Fixed { mantissa: -&self.mantissa, bits: self.bits }
    }

    pub fn mul(&self, o: &Fixed) -> Fixed {
        debug_assert_eq!(self.bits, o.bits);
        Fixed { mantissa: (&self.mantissa * &o.mantissa) >> self.bits, bits: self.bits }
    }

    pub fn div_int(&self, d: i64) -> Fixed {
        Fixed { mantissa: &self.mantissa / BigInt::from(d), bits: self.bits }
    }

    pub fn abs(&self) -> Fixed {
        Fixed { mantissa: self.mantissa.abs(), bits: self.bits }
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mantissa.is_positive()
    }

    /// `|self| < 10^{-digits}`.
    pub fn below_pow10(&self, digits: u32) -> bool {
        let threshold = (BigInt::from(1) << self.bits) / BigInt::from(10u32).pow(digits);
        self.mantissa.abs() < threshold
    }

    /// Approximate f64 value (saturating; used only in diagnostics).
    pub fn to_f64(&self) -> f64 {
        let num = self.mantissa.to_f64().unwrap_or(f64::NAN);
        num / 2f64.powi(self.bits as i32)
    }

    /// Decimal rendering with the given number of fractional digits.
    pub fn to_decimal(&self, digits: u32) -> String {
        let scale = BigInt::from(10u32).pow(digits);
        let scaled = (&self.mantissa * &scale) >> self.bits;
        let neg = scaled.is_negative();
        let mag = scaled.abs();
        let s = mag.to_string();
        let s = if s.len() <= digits as usize {
            format!("0.{}{}", "0".repeat(digits as usize - s.len()), s)
        } else {
            let (int, frac) = s.split_at(s.len() - digits as usize);
            format!("{int}.{frac}")
        };
        if neg { format!("-{s}") } else { s }
    }
}

/// Fixed-point complex number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CFixed {
    pub re: Fixed,
    pub im: Fixed,
}

impl CFixed {
    pub fn zero(bits: u32) -> CFixed {
        CFixed { re: Fixed::zero(bits), im: Fixed::zero(bits) }
    }

    pub fn from_int(v: i64, bits: u32) -> CFixed {
        CFixed { re: Fixed::from_int(v, bits), im: Fixed::zero(bits) }
    }

    pub fn add(&self, o: &CFixed) -> CFixed {
        CFixed { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &CFixed) -> CFixed {
        CFixed { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn mul(&self, o: &CFixed) -> CFixed {
        CFixed {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn scale_rat(&self, r: &Rat) -> CFixed {
        let f = Fixed::from_rat(r, self.re.bits);
        CFixed { re: self.re.mul(&f), im: self.im.mul(&f) }
    }

    /// `|self|`, via an integer square root of the squared modulus.
    pub fn modulus(&self) -> Fixed {
        let bits = self.re.bits;
        let m2 = &self.re.mantissa * &self.re.mantissa + &self.im.mantissa * &self.im.mantissa;
        Fixed { mantissa: m2.sqrt(), bits }
    }

    pub fn dist(&self, o: &CFixed) -> Fixed {
        self.sub(o).modulus()
    }

    pub fn to_string_digits(&self, digits: u32) -> String {
        format!("{} + {}i", self.re.to_decimal(digits), self.im.to_decimal(digits))
    }
}

/// π at the given mantissa width, by Machin's formula
/// `π = 16 atan(1/5) − 4 atan(1/239)` evaluated in integer arithmetic.
fn pi(bits: u32) -> Fixed {
    // Work with guard bits, truncate at the end.
    let wb = bits + 32;
    let atan_inv = |x: i64| -> BigInt {
        let x2 = BigInt::from(x) * BigInt::from(x);
        let mut term = (BigInt::from(1) << wb) / BigInt::from(x);
        let mut sum = term.clone();
        let mut k: u64 = 1;
        while !term.is_zero() {
            term = &term / &x2;
            if term.is_zero() {
                break;
            }
            let contrib = &term / BigInt::from(2 * k + 1);
            if k % 2 == 1 {
                sum -= contrib;
            } else {
                sum += contrib;
            }
            k += 1;
        }
        sum
    };
    let val = atan_inv(5) * 16 - atan_inv(239) * 4;
    Fixed { mantissa: val >> 32, bits }
}

/// cos θ and sin θ by Taylor series (θ given in fixed point, |θ| ≤ 2π).
fn cos_sin(theta: &Fixed) -> (Fixed, Fixed) {
    let bits = theta.bits;
    let theta2 = theta.mul(theta);
    // cos: t_0 = 1, t_{k} = -t_{k-1} θ² / ((2k-1)(2k))
    let mut cos = Fixed::from_int(1, bits);
    let mut term = Fixed::from_int(1, bits);
    let mut k: i64 = 1;
    while !term.mantissa.is_zero() {
        term = term.mul(&theta2).div_int((2 * k - 1) * (2 * k)).neg();
        cos = cos.add(&term);
        k += 1;
    }
    // sin: t_0 = θ, t_k = -t_{k-1} θ² / ((2k)(2k+1))
    let mut sin = theta.clone();
    let mut term = theta.clone();
    let mut k: i64 = 1;
    while !term.mantissa.is_zero() {
        term = term.mul(&theta2).div_int((2 * k) * (2 * k + 1)).neg();
        sin = sin.add(&term);
        k += 1;
    }
    (cos, sin)
}

/// Embedding context: decimal precision plus a per-conductor cache of the
/// powers of `exp(2πi/n)`.
pub struct Embedder {
    digits: u32,
    bits: u32,
    powers: Mutex<HashMap<u32, Arc<Vec<CFixed>>>>,
}

impl Embedder {
    /// `digits` decimal digits of working precision (default 60 in the
    /// harness). The mantissa carries 64 guard bits.
    pub fn new(digits: u32) -> Embedder {
        let bits = (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 64;
        Embedder { digits, bits, powers: Mutex::new(HashMap::new()) }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// `exp(2πik/n)` for `k = 0, …, n−1`.
    pub fn roots(&self, n: u32) -> Arc<Vec<CFixed>> {
        if let Some(v) = self.powers.lock().unwrap().get(&n) {
            return v.clone();
        }
        let two_pi = {
            let p = pi(self.bits);
            p.add(&p)
        };
        let mut v = Vec::with_capacity(n as usize);
        for k in 0..n {
            let theta = Fixed {
                mantissa: (&two_pi.mantissa * BigInt::from(k)) / BigInt::from(n),
                bits: self.bits,
            };
            let (c, s) = cos_sin(&theta);
            v.push(CFixed { re: c, im: s });
        }
        let arc = Arc::new(v);
        self.powers.lock().unwrap().insert(n, arc.clone());
        arc
    }

    /// Numeric value of an exact cyclotomic element under `ζ ↦ exp(2πi/n)`.
    pub fn embed(&self, x: &CycloNum) -> CFixed {
        let n = x.conductor();
        let roots = self.roots(n);
        let mut acc = CFixed::zero(self.bits);
        for (i, c) in x.coeffs().iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&roots[i % n as usize].scale_rat(c));
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_circle() {
        let e = Embedder::new(60);
        let roots = e.roots(13);
        for r in roots.iter() {
            let m = r.modulus();
            let one = Fixed::from_int(1, e.bits());
            assert!(m.sub(&one).below_pow10(55), "|ζ^k| must be 1");
        }
        // 13 equally spaced roots: their sum vanishes.
        let mut sum = CFixed::zero(e.bits());
        for r in roots.iter() {
            sum = sum.add(r);
        }
        assert!(sum.re.below_pow10(55) && sum.im.below_pow10(55));
    }

    #[test]
    fn pi_matches_known_prefix() {
        let p = pi(220);
        // 3.14159265358979323846... (independent well-known prefix)
        assert!(p.to_decimal(20).starts_with("3.14159265358979323846"));
    }
}
