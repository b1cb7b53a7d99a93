//! Exact scalar fields: the rationals, prime fields GF(p) and quadratic
//! extensions GF(p²).
//!
//! Every field type implements [`Field`], which owns the arithmetic so that
//! element types can stay plain data (`u32` residues, residue pairs, or the
//! canonical [`Rat`]). Algorithms are written once against the trait; the
//! runtime choice of field is made through [`FieldSpec`] and a
//! [`FieldVisitor`].

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Runtime description of a supported field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    /// 0 for the rationals, otherwise a prime.
    pub characteristic: u32,
    /// 1 or 2.
    pub degree: u8,
    /// For degree 2, the `r` with `x² = r`.
    pub nonresidue: Option<u32>,
}

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec {
        characteristic: 0,
        degree: 1,
        nonresidue: None,
    };

    pub fn prime(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(FieldSpec {
            characteristic: p,
            degree: 1,
            nonresidue: None,
        })
    }

    pub fn quadratic(p: u32) -> Result<Self> {
        let r = quadratic_nonresidue(p)?;
        Ok(FieldSpec {
            characteristic: p,
            degree: 2,
            nonresidue: Some(r),
        })
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        if self.characteristic == 0 {
            None
        } else {
            Some((self.characteristic as u64).pow(self.degree as u32))
        }
    }

    pub fn is_finite(&self) -> bool {
        self.characteristic != 0
    }

    /// Calls `visitor` with the concrete field this spec describes.
    pub fn visit<V: FieldVisitor>(&self, visitor: V) -> Result<V::Output> {
        match (self.characteristic, self.degree) {
            (0, _) => Ok(visitor.visit(Rationals)),
            (p, 1) => Ok(visitor.visit(PrimeField::new(p)?)),
            (p, 2) => Ok(visitor.visit(QuadraticField::new(p)?)),
            (_, d) => Err(Error::InvalidField(format!("extension degree {d}"))),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.characteristic, self.degree) {
            (0, _) => write!(f, "Q"),
            (p, 1) => write!(f, "{p}"),
            (p, d) => write!(f, "{p}^{d}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `Q`, `p` or `p^2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" || s == "q" {
            return Ok(FieldSpec::RATIONALS);
        }
        let bad = || Error::InvalidField(format!("cannot parse field `{s}`"));
        match s.split_once('^') {
            None => FieldSpec::prime(s.parse().map_err(|_| bad())?),
            Some((p, d)) => {
                let p: u32 = p.parse().map_err(|_| bad())?;
                match d {
                    "1" => FieldSpec::prime(p),
                    "2" => FieldSpec::quadratic(p),
                    _ => Err(Error::InvalidField(format!(
                        "only degree 1 and 2 fields are supported, got `{s}`"
                    ))),
                }
            }
        }
    }
}

/// Generic entry point used to dispatch on a runtime [`FieldSpec`].
pub trait FieldVisitor {
    type Output;
    fn visit<F: Field>(self, field: F) -> Self::Output;
}

/// An exact field. Elements are canonical: equality of elements is equality
/// of field values.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// The `i`-th element in a fixed enumeration of a finite field, with
    /// index 0 the zero element and index 1 the identity.
    fn element(&self, i: u64) -> Self::Elem;
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem>;
    fn is_square(&self, a: &Self::Elem) -> bool;
    fn sqrt(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn characteristic(&self) -> u32 {
        self.spec().characteristic
    }

    /// Image of `a` in GF(p) for characteristic-0 fields, `None` when the
    /// reduction is undefined or the field is finite.
    fn reduce_mod(&self, _a: &Self::Elem, _p: u32) -> Option<u32> {
        None
    }

    /// Approximate magnitude, used only for eigenvalue search bounds.
    fn magnitude(&self, _a: &Self::Elem) -> f64 {
        1.0
    }

    fn order(&self) -> Option<u64> {
        self.spec().order()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// `dst += c * src`, the elimination kernel.
    fn add_scaled(&self, dst: &mut [Self::Elem], src: &[Self::Elem], c: &Self::Elem) {
        for (d, s) in dst.iter_mut().zip(src) {
            if !self.is_zero(s) {
                *d = self.add(d, &self.mul(c, s));
            }
        }
    }

    fn scale_in_place(&self, v: &mut [Self::Elem], c: &Self::Elem) {
        for x in v.iter_mut() {
            *x = self.mul(x, c);
        }
    }

    fn dot(&self, a: &[Self::Elem], b: &[Self::Elem]) -> Self::Elem {
        let mut acc = self.zero();
        for (x, y) in a.iter().zip(b) {
            if !self.is_zero(x) && !self.is_zero(y) {
                acc = self.add(&acc, &self.mul(x, y));
            }
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

/// A reduced rational with positive denominator.
///
/// Values whose numerator and denominator fit in `i64` are always stored as
/// `Small`; `Big` is used only beyond that range, so derived equality and
/// hashing agree with numeric equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rat {
    Small(i64, i64),
    Big(BigRational),
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

impl Rat {
    pub fn zero() -> Rat {
        Rat::Small(0, 1)
    }

    pub fn one() -> Rat {
        Rat::Small(1, 1)
    }

    pub fn from_int(n: i64) -> Rat {
        if n == i64::MIN {
            return Rat::from_big(BigRational::from_integer(BigInt::from(n)));
        }
        Rat::Small(n, 1)
    }

    /// Builds `n/d` from an i128 pair, reducing and choosing the canonical
    /// representation.
    fn from_i128(n: i128, d: i128) -> Rat {
        debug_assert!(d != 0);
        let (n, d) = if d < 0 { (-n, -d) } else { (n, d) };
        if n == 0 {
            return Rat::zero();
        }
        let g = gcd_u128(n.unsigned_abs(), d as u128) as i128;
        let (n, d) = (n / g, d / g);
        if n > i64::MIN as i128 && n <= i64::MAX as i128 && d <= i64::MAX as i128 {
            Rat::Small(n as i64, d as i64)
        } else {
            Rat::Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))
        }
    }

    pub fn new(n: i64, d: i64) -> Option<Rat> {
        if d == 0 {
            None
        } else {
            Some(Rat::from_i128(n as i128, d as i128))
        }
    }

    pub fn from_big(r: BigRational) -> Rat {
        // BigRational::new reduces and normalizes the sign of the denominator.
        let r = BigRational::new(r.numer().clone(), r.denom().clone());
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN => Rat::Small(n, d),
            _ => Rat::Big(r),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rat::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rat::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rat::Small(0, _))
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rat::Small(n, _) => BigInt::from(*n),
            Rat::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rat::Small(_, d) => BigInt::from(*d),
            Rat::Big(r) => r.denom().clone(),
        }
    }

    pub fn add(&self, other: &Rat) -> Rat {
        match (self, other) {
            (Rat::Small(a, 1), Rat::Small(b, 1)) => match a.checked_add(*b) {
                Some(s) if s != i64::MIN => Rat::Small(s, 1),
                _ => Rat::from_i128(*a as i128 + *b as i128, 1),
            },
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Rat::from_i128(a * d + c * b, b * d)
            }
            _ => Rat::from_big(self.to_big() + other.to_big()),
        }
    }

    pub fn neg(&self) -> Rat {
        match self {
            Rat::Small(n, d) => Rat::Small(-n, *d),
            Rat::Big(r) => Rat::from_big(-r.clone()),
        }
    }

    pub fn sub(&self, other: &Rat) -> Rat {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Rat) -> Rat {
        match (self, other) {
            (Rat::Small(0, _), _) | (_, Rat::Small(0, _)) => Rat::zero(),
            (Rat::Small(a, 1), Rat::Small(b, 1)) => match a.checked_mul(*b) {
                Some(p) if p != i64::MIN => Rat::Small(p, 1),
                _ => Rat::from_i128(*a as i128 * *b as i128, 1),
            },
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                Rat::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rat::from_big(self.to_big() * other.to_big()),
        }
    }

    pub fn inv(&self) -> Option<Rat> {
        match self {
            Rat::Small(0, _) => None,
            Rat::Small(n, d) => Some(if *n < 0 {
                Rat::Small(-d, -n)
            } else {
                Rat::Small(*d, *n)
            }),
            Rat::Big(r) => Some(Rat::from_big(r.recip())),
        }
    }

    /// Image in GF(p), or `None` when p divides the denominator.
    pub fn reduce_mod(&self, p: u32) -> Option<u32> {
        let p64 = p as i64;
        let (n, d) = match self {
            Rat::Small(n, d) => (n.rem_euclid(p64) as u64, d.rem_euclid(p64) as u64),
            Rat::Big(r) => {
                let pb = BigInt::from(p);
                let n = r.numer().mod_floor(&pb).to_u64().unwrap_or(0);
                let d = r.denom().mod_floor(&pb).to_u64().unwrap_or(0);
                (n, d)
            }
        };
        if d == 0 {
            return None;
        }
        let f = PrimeField { p };
        f.inv(&(d as u32)).map(|di| f.mul(&(n as u32), &di))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small(n, 1) => write!(f, "{n}"),
            Rat::Small(n, d) => write!(f, "{n}/{d}"),
            Rat::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Rat::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

/// The field ℚ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Rationals;

fn big_is_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

impl Field for Rationals {
    type Elem = Rat;

    fn spec(&self) -> FieldSpec {
        FieldSpec::RATIONALS
    }
    fn zero(&self) -> Rat {
        Rat::zero()
    }
    fn one(&self) -> Rat {
        Rat::one()
    }
    fn from_i64(&self, v: i64) -> Rat {
        Rat::from_int(v)
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a.add(b)
    }
    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a.sub(b)
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a.mul(b)
    }
    fn neg(&self, a: &Rat) -> Rat {
        a.neg()
    }
    fn inv(&self, a: &Rat) -> Option<Rat> {
        a.inv()
    }
    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }

    /// Enumerates 0, 1, −1, 2, −2, … (integers only).
    fn element(&self, i: u64) -> Rat {
        let k = i.div_ceil(2) as i64;
        if i % 2 == 1 {
            Rat::from_int(k)
        } else {
            Rat::from_int(-k)
        }
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Rat {
        let n = rng.random_range(-6i64..=6);
        let d = if rng.random_bool(0.25) {
            rng.random_range(2i64..=3)
        } else {
            1
        };
        Rat::from_i128(n as i128, d as i128)
    }

    fn format(&self, a: &Rat) -> String {
        a.to_string()
    }

    fn parse(&self, s: &str) -> Result<Rat> {
        let bad = || Error::Parse(format!("bad rational `{s}`"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Rat::from_big(BigRational::new(n, d)))
    }

    fn is_square(&self, a: &Rat) -> bool {
        self.sqrt(a).is_some()
    }

    fn reduce_mod(&self, a: &Rat, p: u32) -> Option<u32> {
        a.reduce_mod(p)
    }

    fn magnitude(&self, a: &Rat) -> f64 {
        match a {
            Rat::Small(n, d) => (*n as f64 / *d as f64).abs(),
            Rat::Big(r) => r.to_f64().map_or(f64::INFINITY, f64::abs),
        }
    }

    fn sqrt(&self, a: &Rat) -> Option<Rat> {
        let r = a.to_big();
        let n = big_is_square(r.numer())?;
        let d = big_is_square(r.denom())?;
        Some(Rat::from_big(BigRational::new(n, d)))
    }
}

// ---------------------------------------------------------------------------
// Prime fields
// ---------------------------------------------------------------------------

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest positive non-square modulo an odd prime `p`.
pub fn quadratic_nonresidue(p: u32) -> Result<u32> {
    if p == 2 {
        return Err(Error::InvalidField(
            "GF(4) is not supported; p must be odd".into(),
        ));
    }
    if !is_prime(p) {
        return Err(Error::InvalidField(format!("{p} is not prime")));
    }
    let f = PrimeField { p };
    (2..p)
        .find(|&r| !f.is_square(&r))
        .ok_or_else(|| Error::InvalidField(format!("no nonresidue mod {p}")))
}

/// GF(p) with residues in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) || p >= (1 << 31) {
            return Err(Error::InvalidField(format!("{p} is not a supported prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    fn reduce_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn spec(&self) -> FieldSpec {
        FieldSpec {
            characteristic: self.p,
            degree: 1,
            nonresidue: None,
        }
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u32 {
        self.reduce_i64(v)
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        (s % self.p as u64) as u32
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + (self.p - *b) as u64;
        (s % self.p as u64) as u32
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        let (mut t, mut new_t) = (0i64, 1i64);
        let (mut r, mut new_r) = (self.p as i64, *a as i64);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        Some(self.reduce_i64(t))
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn element(&self, i: u64) -> u32 {
        (i % self.p as u64) as u32
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.random_range(0..self.p)
    }
    fn format(&self, a: &u32) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<u32> {
        let v: i64 = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad residue `{s}`")))?;
        Ok(self.reduce_i64(v))
    }
    fn is_square(&self, a: &u32) -> bool {
        if *a == 0 || self.p == 2 {
            return true;
        }
        self.pow(a, ((self.p - 1) / 2) as u64) == 1
    }
    fn sqrt(&self, a: &u32) -> Option<u32> {
        if !self.is_square(a) {
            return None;
        }
        (0..self.p).find(|x| self.mul(x, x) == *a)
    }

    fn add_scaled(&self, dst: &mut [u32], src: &[u32], c: &u32) {
        if *c == 0 {
            return;
        }
        let p = self.p as u64;
        let c = *c as u64;
        for (d, s) in dst.iter_mut().zip(src) {
            if *s != 0 {
                *d = ((*d as u64 + c * *s as u64) % p) as u32;
            }
        }
    }

    fn dot(&self, a: &[u32], b: &[u32]) -> u32 {
        let p = self.p as u64;
        // each product < 2^62; accumulate with periodic reduction
        let mut acc: u64 = 0;
        for (x, y) in a.iter().zip(b) {
            acc += (*x as u64 * *y as u64) % p;
            if acc >= 1 << 62 {
                acc %= p;
            }
        }
        (acc % p) as u32
    }
}

// ---------------------------------------------------------------------------
// Quadratic extensions
// ---------------------------------------------------------------------------

/// GF(p²) = GF(p)[x]/(x² − r) with `r` the smallest nonresidue. Elements are
/// pairs `(a, b)` meaning `a + b·x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadraticField {
    base: PrimeField,
    r: u32,
}

impl QuadraticField {
    pub fn new(p: u32) -> Result<Self> {
        let r = quadratic_nonresidue(p)?;
        Ok(QuadraticField {
            base: PrimeField::new(p)?,
            r,
        })
    }

    pub fn nonresidue(&self) -> u32 {
        self.r
    }

    /// The generator `x` with `x² = r`.
    pub fn gen(&self) -> (u32, u32) {
        (0, 1)
    }

    pub fn base(&self) -> PrimeField {
        self.base
    }
}

impl Field for QuadraticField {
    type Elem = (u32, u32);

    fn spec(&self) -> FieldSpec {
        FieldSpec {
            characteristic: self.base.p,
            degree: 2,
            nonresidue: Some(self.r),
        }
    }
    fn zero(&self) -> (u32, u32) {
        (0, 0)
    }
    fn one(&self) -> (u32, u32) {
        (1, 0)
    }
    fn from_i64(&self, v: i64) -> (u32, u32) {
        (self.base.from_i64(v), 0)
    }
    fn add(&self, a: &(u32, u32), b: &(u32, u32)) -> (u32, u32) {
        (self.base.add(&a.0, &b.0), self.base.add(&a.1, &b.1))
    }
    fn sub(&self, a: &(u32, u32), b: &(u32, u32)) -> (u32, u32) {
        (self.base.sub(&a.0, &b.0), self.base.sub(&a.1, &b.1))
    }
    fn mul(&self, a: &(u32, u32), b: &(u32, u32)) -> (u32, u32) {
        let f = &self.base;
        let re = f.add(&f.mul(&a.0, &b.0), &f.mul(&f.mul(&a.1, &b.1), &self.r));
        let im = f.add(&f.mul(&a.0, &b.1), &f.mul(&a.1, &b.0));
        (re, im)
    }
    fn neg(&self, a: &(u32, u32)) -> (u32, u32) {
        (self.base.neg(&a.0), self.base.neg(&a.1))
    }
    fn inv(&self, a: &(u32, u32)) -> Option<(u32, u32)> {
        let f = &self.base;
        // (a + bx)(a − bx) = a² − r b²
        let norm = f.sub(&f.mul(&a.0, &a.0), &f.mul(&self.r, &f.mul(&a.1, &a.1)));
        let ni = f.inv(&norm)?;
        Some((f.mul(&a.0, &ni), f.neg(&f.mul(&a.1, &ni))))
    }
    fn is_zero(&self, a: &(u32, u32)) -> bool {
        *a == (0, 0)
    }
    /// Index `i = a + b·p`; so indices below `p` enumerate the prime subfield.
    fn element(&self, i: u64) -> (u32, u32) {
        let p = self.base.p as u64;
        let i = i % (p * p);
        ((i % p) as u32, (i / p) as u32)
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> (u32, u32) {
        (self.base.random(rng), self.base.random(rng))
    }
    fn format(&self, a: &(u32, u32)) -> String {
        format!("{}+{}*x", a.0, a.1)
    }
    fn parse(&self, s: &str) -> Result<(u32, u32)> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad GF(p^2) element `{s}`"));
        // canonical form is `a+b*x`; plain residues are accepted as well
        if let Some(rest) = s.strip_suffix("*x") {
            let (a, b) = rest.rsplit_once('+').ok_or_else(bad)?;
            let a = self.base.parse(a).map_err(|_| bad())?;
            let b = self.base.parse(b).map_err(|_| bad())?;
            Ok((a, b))
        } else {
            Ok((self.base.parse(s).map_err(|_| bad())?, 0))
        }
    }
    fn is_square(&self, a: &(u32, u32)) -> bool {
        if self.is_zero(a) {
            return true;
        }
        let q = self.order().unwrap_or(0);
        self.pow(a, (q - 1) / 2) == self.one()
    }
    fn sqrt(&self, a: &(u32, u32)) -> Option<(u32, u32)> {
        let q = self.order()?;
        (0..q).map(|i| self.element(i)).find(|x| self.mul(x, x) == *a)
    }
}
