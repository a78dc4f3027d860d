//! Exact arithmetic in the cyclotomic field Q(zeta24).
//!
//! Elements are represented by their coordinates in the power basis
//! 1, z, ..., z^7 where z = zeta24 is a primitive 24th root of unity with
//! minimal polynomial x^8 - x^4 + 1. Every number the verification needs
//! (i, the eighth root theta, sqrt(2), the cube root zeta3, and all matrix
//! entries built from them) lives in this field.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use thiserror::Error;

/// Degree of Q(zeta24) over Q.
pub const DEGREE: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("division by zero in Q(zeta24)")]
    DivisionByZero,
}

/// An element of Q(zeta24), stored as 8 rational coordinates in the power
/// basis and kept fully reduced modulo x^8 - x^4 + 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CycNum {
    coeffs: [BigRational; DEGREE],
}

fn zero_coeffs() -> [BigRational; DEGREE] {
    std::array::from_fn(|_| BigRational::zero())
}

impl CycNum {
    pub fn zero() -> Self {
        CycNum { coeffs: zero_coeffs() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// n/d as a field element. Panics if d = 0.
    pub fn from_ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Self::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut c = zero_coeffs();
        c[0] = r;
        CycNum { coeffs: c }
    }

    /// zeta24^k for any integer k (negative exponents allowed).
    pub fn zeta_pow(k: i64) -> Self {
        let e = k.rem_euclid(24) as usize;
        let mut raw = vec![BigRational::zero(); e + 1];
        raw[e] = BigRational::one();
        Self::from_poly_coeffs(raw)
    }

    /// i = zeta24^6.
    pub fn i() -> Self {
        Self::zeta_pow(6)
    }

    /// theta = exp(2*pi*i/8) = zeta24^3.
    pub fn theta() -> Self {
        Self::zeta_pow(3)
    }

    /// sqrt(2) = zeta24^3 + zeta24^-3.
    pub fn sqrt2() -> Self {
        Self::zeta_pow(3) + Self::zeta_pow(-3)
    }

    /// zeta3 = exp(2*pi*i/3) = zeta24^8.
    pub fn zeta3() -> Self {
        Self::zeta_pow(8)
    }

    /// Reduce an arbitrary-degree polynomial in zeta24 to the power basis,
    /// applying x^8 = x^4 - 1 from the top degree down.
    pub fn from_poly_coeffs(mut raw: Vec<BigRational>) -> Self {
        let mut k = raw.len();
        while k > DEGREE {
            k -= 1;
            let c = std::mem::replace(&mut raw[k], BigRational::zero());
            if !c.is_zero() {
                raw[k - 4] += &c;
                raw[k - 8] -= &c;
            }
        }
        let mut coeffs = zero_coeffs();
        for (i, c) in raw.into_iter().take(DEGREE).enumerate() {
            coeffs[i] = c;
        }
        CycNum { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational; DEGREE] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one()
    }

    /// The rational value if the element lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// The integer value if the element lies in Z.
    pub fn as_integer(&self) -> Option<BigInt> {
        let r = self.as_rational()?;
        if r.is_integer() {
            Some(r.to_integer())
        } else {
            None
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x]
    /// against x^8 - x^4 + 1.
    pub fn inv(&self) -> Result<CycNum, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let a: Vec<BigRational> = self.coeffs.to_vec();
        let (g, s) = poly_half_egcd(&a, &modulus_poly());
        // g is a nonzero constant because the modulus is irreducible over Q.
        debug_assert!(g.len() == 1 && !g[0].is_zero());
        let ginv = BigRational::one() / &g[0];
        let scaled: Vec<BigRational> = s.iter().map(|c| c * &ginv).collect();
        Ok(CycNum::from_poly_coeffs(scaled))
    }

    pub fn pow(&self, mut e: u32) -> CycNum {
        let mut base = self.clone();
        let mut acc = CycNum::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Structural size used for pivot selection: count of nonzero basis
    /// coordinates, then total bit length of all numerators and denominators.
    pub fn complexity(&self) -> (u32, u64) {
        let mut nonzero = 0u32;
        let mut bits = 0u64;
        for c in &self.coeffs {
            if !c.is_zero() {
                nonzero += 1;
                bits += c.numer().bits() + c.denom().bits();
            }
        }
        (nonzero, bits)
    }

    /// The 8 coordinates as "numerator/denominator" strings, report format.
    pub fn fraction_strings(&self) -> Vec<String> {
        self.coeffs
            .iter()
            .map(|c| format!("{}/{}", c.numer(), c.denom()))
            .collect()
    }
}

/// x^8 - x^4 + 1 as a little-endian coefficient vector.
fn modulus_poly() -> Vec<BigRational> {
    let mut m = vec![BigRational::zero(); 9];
    m[0] = BigRational::one();
    m[4] = -BigRational::one();
    m[8] = BigRational::one();
    m
}

fn poly_trim(v: &mut Vec<BigRational>) {
    while v.len() > 1 && v.last().unwrap().is_zero() {
        v.pop();
    }
}

fn poly_is_zero(v: &[BigRational]) -> bool {
    v.iter().all(|c| c.is_zero())
}

fn poly_sub_scaled_shifted(a: &mut Vec<BigRational>, b: &[BigRational], c: &BigRational, shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigRational::zero());
    }
    for (i, bc) in b.iter().enumerate() {
        a[i + shift] -= bc * c;
    }
    poly_trim(a);
}

fn poly_divmod(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = num.to_vec();
    poly_trim(&mut rem);
    let mut den = den.to_vec();
    poly_trim(&mut den);
    assert!(!poly_is_zero(&den), "polynomial division by zero");
    let dlead = den.last().unwrap().clone();
    let dlen = den.len();
    if rem.len() < dlen {
        return (vec![BigRational::zero()], rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - dlen + 1];
    while !poly_is_zero(&rem) && rem.len() >= dlen {
        let shift = rem.len() - dlen;
        let q = rem.last().unwrap() / &dlead;
        quot[shift] = q.clone();
        poly_sub_scaled_shifted(&mut rem, &den, &q, shift);
        if rem.len() == 1 && rem[0].is_zero() {
            break;
        }
    }
    poly_trim(&mut quot);
    (quot, rem)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ac) in a.iter().enumerate() {
        if ac.is_zero() {
            continue;
        }
        for (j, bc) in b.iter().enumerate() {
            if !bc.is_zero() {
                out[i + j] += ac * bc;
            }
        }
    }
    poly_trim(&mut out);
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), BigRational::zero());
    }
    for (i, bc) in b.iter().enumerate() {
        out[i] -= bc;
    }
    poly_trim(&mut out);
    out
}

/// Returns (gcd, s) with s*a = gcd modulo m.
fn poly_half_egcd(a: &[BigRational], m: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r0 = a.to_vec();
    poly_trim(&mut r0);
    let mut r1 = m.to_vec();
    let mut s0 = vec![BigRational::one()];
    let mut s1 = vec![BigRational::zero()];
    while !poly_is_zero(&r1) {
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    (r0, s0)
}

impl Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        let coeffs = std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]);
        CycNum { coeffs }
    }
}

impl Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        let coeffs = std::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]);
        CycNum { coeffs }
    }
}

impl Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        let mut raw = vec![BigRational::zero(); 2 * DEGREE - 1];
        for i in 0..DEGREE {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..DEGREE {
                if !rhs.coeffs[j].is_zero() {
                    raw[i + j] += &self.coeffs[i] * &rhs.coeffs[j];
                }
            }
        }
        CycNum::from_poly_coeffs(raw)
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        let coeffs = std::array::from_fn(|i| -self.coeffs[i].clone());
        CycNum { coeffs }
    }
}

/// Division panics on a zero divisor; use `inv` for a checked inverse.
impl Div for &CycNum {
    type Output = CycNum;
    fn div(self, rhs: &CycNum) -> CycNum {
        self * &rhs.inv().expect("division by zero in Q(zeta24)")
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        for i in 0..DEGREE {
            self.coeffs[i] += &rhs.coeffs[i];
        }
    }
}

impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        for i in 0..DEGREE {
            self.coeffs[i] -= &rhs.coeffs[i];
        }
    }
}

impl MulAssign<&CycNum> for CycNum {
    fn mul_assign(&mut self, rhs: &CycNum) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            match k {
                0 => write!(f, "{}", abs)?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{}*", abs)?;
                    }
                    if k == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{}", k)?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Numerical evaluation used only as a test oracle.
    fn to_complex(x: &CycNum) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in x.coeffs().iter().enumerate() {
            let v = c.numer().to_string().parse::<f64>().unwrap()
                / c.denom().to_string().parse::<f64>().unwrap();
            let angle = 2.0 * std::f64::consts::PI * (k as f64) / 24.0;
            re += v * angle.cos();
            im += v * angle.sin();
        }
        (re, im)
    }

    #[test]
    fn zeta8_reduces_to_zeta4_minus_one() {
        let z4 = CycNum::zeta_pow(4);
        let prod = &z4 * &z4;
        let expected = &z4 - &CycNum::one();
        assert_eq!(prod, expected);
        assert_eq!(CycNum::zeta_pow(8), expected);
    }

    #[test]
    fn i_squares_to_minus_one() {
        // zeta^6 * zeta^6 = zeta^12, and x^12 reduces to -1.
        let i = CycNum::i();
        assert_eq!(&i * &i, CycNum::from_int(-1));
        assert_eq!(CycNum::zeta_pow(12), CycNum::from_int(-1));
    }

    #[test]
    fn sqrt2_squares_to_two() {
        let s = CycNum::sqrt2();
        assert_eq!(&s * &s, CycNum::from_int(2));
        // Float oracle: the representation really is the positive square root.
        let (re, im) = to_complex(&s);
        assert!((re - std::f64::consts::SQRT_2).abs() < 1e-12);
        assert!(im.abs() < 1e-12);
    }

    #[test]
    fn zeta3_is_a_primitive_cube_root() {
        let w = CycNum::zeta3();
        assert_eq!(w.pow(3), CycNum::one());
        assert_ne!(w, CycNum::one());
        let (re, im) = to_complex(&w);
        assert!((re + 0.5).abs() < 1e-12);
        assert!((im - (3.0f64).sqrt() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn multiplicative_orders() {
        let orders = [(CycNum::zeta_pow(1), 24u32), (CycNum::i(), 4), (CycNum::theta(), 8)];
        for (x, n) in orders {
            assert_eq!(x.pow(n), CycNum::one());
            for k in 1..n {
                assert_ne!(x.pow(k), CycNum::one(), "order smaller than {}", n);
            }
        }
    }

    #[test]
    fn inverse_of_one_plus_i() {
        let one_plus_i = &CycNum::one() + &CycNum::i();
        let inv = one_plus_i.inv().unwrap();
        let half = CycNum::from_ratio(1, 2);
        let expected = &half - &(&half * &CycNum::i());
        assert_eq!(inv, expected);
        assert_eq!(&inv * &one_plus_i, CycNum::one());
    }

    #[test]
    fn inverse_of_zeta_powers() {
        for k in 0..24 {
            let z = CycNum::zeta_pow(k);
            let inv = z.inv().unwrap();
            assert_eq!(&inv * &z, CycNum::one());
            assert_eq!(inv, CycNum::zeta_pow(-k));
        }
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(CycNum::zero().inv(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn reduction_is_idempotent() {
        let x = &CycNum::zeta_pow(21) + &CycNum::from_ratio(-7, 3);
        let again = CycNum::from_poly_coeffs(x.coeffs().to_vec());
        assert_eq!(x, again);
    }

    #[test]
    fn fraction_strings_format() {
        let x = &CycNum::from_ratio(-1, 2) + &CycNum::zeta_pow(6);
        let s = x.fraction_strings();
        assert_eq!(s[0], "-1/2");
        assert_eq!(s[6], "1/1");
        assert_eq!(s.len(), 8);
    }
}
