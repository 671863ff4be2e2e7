//! Exact field elements over the rationals and prime fields.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// The ground field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldSpec {
    Rationals,
    PrimeField { p: u64 },
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self, Error> {
        if !is_prime(p) {
            return Err(Error::Field(format!("{p} is not prime")));
        }
        Ok(FieldSpec::PrimeField { p })
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField { p } => *p,
        }
    }

    /// Validates a deserialized field description (the modulus must be prime).
    pub fn validate(&self) -> Result<(), Error> {
        if let FieldSpec::PrimeField { p } = self {
            FieldSpec::prime(*p)?;
        }
        Ok(())
    }

    /// True when `n` is invertible in the field.
    pub fn is_unit_integer(&self, n: i64) -> bool {
        match self {
            FieldSpec::Rationals => n != 0,
            FieldSpec::PrimeField { p } => n.rem_euclid(*p as i64) != 0,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField { p } => write!(f, "GF({p})"),
        }
    }
}

/// Exact element of a field described by a runtime [`FieldSpec`].
///
/// Constants need the field because a prime-field element carries its modulus.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    /// Whether this representation can hold elements of `field`.
    fn supports(field: FieldSpec) -> bool;
    fn zero_in(field: FieldSpec) -> Self;
    fn one_in(field: FieldSpec) -> Self;
    fn from_i64(field: FieldSpec, n: i64) -> Self;
    fn field(&self) -> FieldSpec;
    fn is_zero(&self) -> bool;
    fn mul_ref(&self, rhs: &Self) -> Self;
    /// `self += a * b`
    fn add_mul(&mut self, a: &Self, b: &Self);
    fn try_inv(&self) -> Option<Self>;
    /// Parses `"n"` or `"n/d"`.
    fn parse_in(field: FieldSpec, s: &str) -> Result<Self, Error>;

    fn is_one(&self) -> bool {
        *self == Self::one_in(self.field())
    }

    fn from_ratio(field: FieldSpec, n: i64, d: i64) -> Result<Self, Error> {
        let d = Self::from_i64(field, d)
            .try_inv()
            .ok_or_else(|| Error::Field(format!("denominator {d} is not invertible in {field}")))?;
        Ok(Self::from_i64(field, n).mul_ref(&d))
    }
}

fn split_ratio(s: &str) -> Result<(BigInt, BigInt), Error> {
    let bad = || Error::Parse(format!("invalid scalar {s:?}"));
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let ok = |t: &str| {
        let t = t.strip_prefix(['-', '+']).unwrap_or(t);
        !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit())
    };
    if !ok(n) || !ok(d) {
        return Err(bad());
    }
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok((n, d))
}

impl Scalar for BigRational {
    fn supports(field: FieldSpec) -> bool {
        field == FieldSpec::Rationals
    }
    fn zero_in(_: FieldSpec) -> Self {
        Zero::zero()
    }
    fn one_in(_: FieldSpec) -> Self {
        One::one()
    }
    fn from_i64(_: FieldSpec, n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn field(&self) -> FieldSpec {
        FieldSpec::Rationals
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if Zero::is_zero(a) || Zero::is_zero(b) {
            return;
        }
        *self += a * b;
    }
    fn try_inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn parse_in(field: FieldSpec, s: &str) -> Result<Self, Error> {
        if field != FieldSpec::Rationals {
            return Err(Error::Field(format!("rational scalar requested over {field}")));
        }
        let (n, d) = split_ratio(s)?;
        Ok(BigRational::new(n, d))
    }
}

/// Residue class modulo a runtime prime, stored in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Zp {
    v: u64,
    p: u64,
}

impl Zp {
    pub fn new(v: i128, p: u64) -> Self {
        Zp {
            v: v.rem_euclid(p as i128) as u64,
            p,
        }
    }
    pub fn value(&self) -> u64 {
        self.v
    }
    pub fn modulus(&self) -> u64 {
        self.p
    }
    fn check(&self, other: &Zp) {
        assert_eq!(self.p, other.p, "mixed prime fields");
    }
    fn pow(self, mut e: u64) -> Zp {
        let mut base = self;
        let mut acc = Zp::new(1, self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            e >>= 1;
        }
        acc
    }
}

impl fmt::Debug for Zp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.v, self.p)
    }
}

impl fmt::Display for Zp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Add for Zp {
    type Output = Zp;
    fn add(mut self, rhs: Zp) -> Zp {
        self += &rhs;
        self
    }
}

impl Sub for Zp {
    type Output = Zp;
    fn sub(mut self, rhs: Zp) -> Zp {
        self -= &rhs;
        self
    }
}

impl Mul for Zp {
    type Output = Zp;
    fn mul(self, rhs: Zp) -> Zp {
        self.mul_ref(&rhs)
    }
}

impl Neg for Zp {
    type Output = Zp;
    fn neg(self) -> Zp {
        Zp::new(-(self.v as i128), self.p)
    }
}

impl<'a> AddAssign<&'a Zp> for Zp {
    fn add_assign(&mut self, rhs: &'a Zp) {
        self.check(rhs);
        self.v = ((self.v as u128 + rhs.v as u128) % self.p as u128) as u64;
    }
}

impl<'a> SubAssign<&'a Zp> for Zp {
    fn sub_assign(&mut self, rhs: &'a Zp) {
        self.check(rhs);
        self.v = ((self.v as u128 + (self.p - rhs.v) as u128) % self.p as u128) as u64;
    }
}

impl Scalar for Zp {
    fn supports(field: FieldSpec) -> bool {
        matches!(field, FieldSpec::PrimeField { .. })
    }
    fn zero_in(field: FieldSpec) -> Self {
        Zp::new(0, prime_of(field))
    }
    fn one_in(field: FieldSpec) -> Self {
        Zp::new(1, prime_of(field))
    }
    fn from_i64(field: FieldSpec, n: i64) -> Self {
        Zp::new(n as i128, prime_of(field))
    }
    fn field(&self) -> FieldSpec {
        FieldSpec::PrimeField { p: self.p }
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.check(rhs);
        Zp {
            v: ((self.v as u128 * rhs.v as u128) % self.p as u128) as u64,
            p: self.p,
        }
    }
    fn add_mul(&mut self, a: &Self, b: &Self) {
        let t = a.mul_ref(b);
        *self += &t;
    }
    fn try_inv(&self) -> Option<Self> {
        if self.v == 0 {
            None
        } else {
            Some(self.pow(self.p - 2))
        }
    }
    fn parse_in(field: FieldSpec, s: &str) -> Result<Self, Error> {
        let FieldSpec::PrimeField { p } = field else {
            return Err(Error::Field(format!("prime-field scalar requested over {field}")));
        };
        let (n, d) = split_ratio(s)?;
        let red = |x: &BigInt| {
            let r = x.mod_floor(&BigInt::from(p));
            Zp::new(r.to_i128().expect("residue fits"), p)
        };
        let d = red(&d)
            .try_inv()
            .ok_or_else(|| Error::Field(format!("denominator of {s:?} vanishes mod {p}")))?;
        Ok(red(&n).mul_ref(&d))
    }
}

fn prime_of(field: FieldSpec) -> u64 {
    match field {
        FieldSpec::PrimeField { p } => p,
        FieldSpec::Rationals => panic!("prime-field scalar requested over Q"),
    }
}

/// Canonical text form: `"n"` or `"n/d"` with `d > 0`; residues in `[0, p)`.
pub fn format_scalar<F: Scalar>(x: &F) -> String {
    x.to_string()
}

/// Deterministic Miller-Rabin, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_rationals() {
        let q = FieldSpec::Rationals;
        let x = BigRational::parse_in(q, "6/-4").unwrap();
        assert_eq!(x.to_string(), "-3/2");
        assert_eq!(BigRational::parse_in(q, "-7").unwrap().to_string(), "-7");
        assert!(BigRational::parse_in(q, "1.5").is_err());
        assert!(BigRational::parse_in(q, "1/0").is_err());
        assert!(BigRational::parse_in(q, "").is_err());
    }

    #[test]
    fn prime_field_parse_reduces() {
        let f = FieldSpec::prime(5).unwrap();
        assert_eq!(Zp::parse_in(f, "-1").unwrap().to_string(), "4");
        assert_eq!(Zp::parse_in(f, "1/2").unwrap().to_string(), "3");
        assert!(Zp::parse_in(f, "1/5").is_err());
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..50).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]);
        assert!(is_prime(2_305_843_009_213_693_951));
        assert!(!is_prime(3_215_031_751));
        assert!(FieldSpec::prime(9).is_err());
    }

    #[test]
    fn inverse_mod_p() {
        let f = FieldSpec::prime(7).unwrap();
        for n in 1..7 {
            let x = Zp::from_i64(f, n);
            assert!(x.mul_ref(&x.try_inv().unwrap()).is_one());
        }
        assert!(Zp::zero_in(f).try_inv().is_none());
    }
}
