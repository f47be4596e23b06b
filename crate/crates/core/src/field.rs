//! Coefficient fields: the rationals and the prime fields `F_p`.
//!
//! Every computation in the crate is exact. Code that is generic over the
//! coefficients takes a `F: Field` value; [`FieldSpec`] is the runtime name of
//! a field and [`with_field!`](crate::with_field) dispatches from a spec to the
//! concrete implementation.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monoid::FiniteCommMonoid;

/// Runtime description of a coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    /// `F_p`, rejecting non-primes.
    pub fn prime(p: u32) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }

    /// The multiplicative monoid `k_mu` of a finite field: carrier `0..p`,
    /// operation multiplication mod `p`, neutral element `1`.
    pub fn multiplicative_monoid(&self) -> Result<FiniteCommMonoid> {
        let FieldSpec::Prime(p) = *self else {
            return Err(Error::NotFiniteField);
        };
        let n = p as usize;
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                table[x * n + y] = ((x * y) % n) as u32;
            }
        }
        FiniteCommMonoid::new(n, table, 1 % n)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "f:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Parses `q` or `f:p`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(rest) = s.strip_prefix("f:") {
            let p: u32 = rest
                .parse()
                .map_err(|_| Error::Parse(format!("bad prime in field spec {s:?}")))?;
            return FieldSpec::prime(p);
        }
        Err(Error::Parse(format!("field spec must be `q` or `f:p`, got {s:?}")))
    }
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Arithmetic of an exact field.
pub trait Field: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `y += a * x`, entrywise.
    fn axpy(&self, y: &mut [Self::Elem], a: &Self::Elem, x: &[Self::Elem]) {
        debug_assert_eq!(y.len(), x.len());
        if self.is_zero(a) {
            return;
        }
        for (yi, xi) in y.iter_mut().zip(x) {
            if !self.is_zero(xi) {
                *yi = self.add(yi, &self.mul(a, xi));
            }
        }
    }

    fn scale(&self, v: &mut [Self::Elem], a: &Self::Elem) {
        for x in v.iter_mut() {
            if !self.is_zero(x) {
                *x = self.mul(a, x);
            }
        }
    }
}

/// The prime field `F_p`, elements stored as canonical residues in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        FieldSpec::prime(p)?;
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn pow(&self, base: u32, mut exp: u32) -> u32 {
        let p = self.p as u64;
        let mut acc = 1u64 % p;
        let mut b = base as u64 % p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            exp >>= 1;
        }
        acc as u32
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.p
    }
    fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        (s % self.p as u64) as u32
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + self.p as u64 - *b as u64;
        (s % self.p as u64) as u32
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn axpy(&self, y: &mut [u32], a: &u32, x: &[u32]) {
        if *a == 0 {
            return;
        }
        let p = self.p as u64;
        let a = *a as u64;
        for (yi, xi) in y.iter_mut().zip(x) {
            if *xi != 0 {
                *yi = ((*yi as u64 + a * *xi as u64) % p) as u32;
            }
        }
    }
}

/// The rationals with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
}

impl Rationals {
    /// Whether the rational is an integer of absolute value at most `bound`.
    pub fn is_small_integer(a: &BigRational, bound: i64) -> bool {
        a.is_integer() && a.numer().abs() <= BigInt::from(bound)
    }
}

/// Runs `$body` with `$k` bound to the concrete field named by a [`FieldSpec`].
///
/// ```
/// use semiadd::{with_field, field::{Field, FieldSpec}};
/// let spec: FieldSpec = "f:5".parse().unwrap();
/// let c = with_field!(spec, |k| k.spec().characteristic());
/// assert_eq!(c, 5);
/// ```
#[macro_export]
macro_rules! with_field {
    ($spec:expr, |$k:ident| $body:expr) => {
        match $spec {
            $crate::field::FieldSpec::Rationals => {
                let $k = $crate::field::Rationals;
                $body
            }
            $crate::field::FieldSpec::Prime(p) => {
                let $k = $crate::field::PrimeField::new(p).expect("FieldSpec holds a prime");
                $body
            }
        }
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u32> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(FieldSpec::prime(4).is_err());
        assert_eq!(FieldSpec::prime(7).unwrap().characteristic(), 7);
        assert_eq!(FieldSpec::Rationals.characteristic(), 0);
    }

    #[test]
    fn parse_and_display() {
        for s in ["q", "f:2", "f:3", "f:101"] {
            let spec: FieldSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("f:9".parse::<FieldSpec>().is_err());
        assert!("z".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn prime_field_inverses() {
        let k = PrimeField::new(7).unwrap();
        for a in 1..7u32 {
            let b = k.inv(&a).unwrap();
            assert_eq!(k.mul(&a, &b), 1);
        }
        assert_eq!(k.inv(&0), None);
        assert_eq!(k.from_i64(-1), 6);
        assert_eq!(k.sub(&2, &5), 4);
    }

    #[test]
    fn multiplicative_monoid_of_f3() {
        let m = FieldSpec::Prime(3).multiplicative_monoid().unwrap();
        assert_eq!(m.order(), 3);
        assert_eq!(m.zero(), 1);
        assert_eq!(m.add(2, 2), 1);
        assert_eq!(m.add(0, 2), 0);
        assert!(FieldSpec::Rationals.multiplicative_monoid().is_err());
    }
}
