//! Exact scalars: integers, rationals and residues mod a prime.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// Which coefficient ring a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingKind {
    Integers,
    Rationals,
    Prime(u64),
}

impl RingKind {
    pub fn is_field(self) -> bool {
        !matches!(self, RingKind::Integers)
    }

    /// Parses "Z", "Q", "F2", "GF(3)", "F_5".
    pub fn parse(s: &str) -> Option<RingKind> {
        let t = s.trim();
        match t {
            "Z" | "z" => return Some(RingKind::Integers),
            "Q" | "q" => return Some(RingKind::Rationals),
            _ => {}
        }
        let digits = t
            .trim_start_matches("GF")
            .trim_start_matches(['F', 'f'])
            .trim_start_matches(['_', '('])
            .trim_end_matches(')');
        let p: u64 = digits.parse().ok()?;
        is_prime(p).then_some(RingKind::Prime(p))
    }
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingKind::Integers => write!(f, "Z"),
            RingKind::Rationals => write!(f, "Q"),
            RingKind::Prime(p) => write!(f, "F{p}"),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Ring element usable by the generic linear algebra.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Runtime data needed to build elements (the modulus for GF(p)).
    type Ctx: Clone + fmt::Debug + Send + Sync;

    fn embed(v: i64, ctx: &Self::Ctx) -> Self;
    fn embed_integer(v: &Integer, ctx: &Self::Ctx) -> Self;
    fn ring_kind(ctx: &Self::Ctx) -> RingKind;
}

/// Euclidean-domain operations driving Smith/Hermite reduction.
///
/// Fields are Euclidean with every nonzero element a unit, so one
/// elimination routine serves Z, Q and GF(p).
pub trait Ring: Scalar {
    /// Compare Euclidean sizes; used for smallest-pivot selection.
    fn size_cmp(&self, other: &Self) -> Ordering;
    /// `self = q*d + r` with `r` zero or strictly smaller than `d`.
    fn quo_rem(&self, d: &Self) -> (Self, Self);
    fn is_unit(&self) -> bool;
    /// A unit `u` making `u*self` the canonical associate.
    fn normalizing_unit(&self) -> Self;
    /// Inverse of a unit.
    fn unit_inverse(&self) -> Self;
    /// Canonical representative of `self` modulo `d` (for d nonzero).
    fn reduce_mod(&self, d: &Self) -> Self {
        self.quo_rem(d).1
    }
    /// Integer value when the ring is Z.
    fn as_integer(&self) -> Option<Integer>;
}

// ---------- integers ----------

impl Scalar for Integer {
    type Ctx = ();
    fn embed(v: i64, _: &()) -> Self {
        BigInt::from(v)
    }
    fn embed_integer(v: &Integer, _: &()) -> Self {
        v.clone()
    }
    fn ring_kind(_: &()) -> RingKind {
        RingKind::Integers
    }
}

impl Ring for Integer {
    fn size_cmp(&self, other: &Self) -> Ordering {
        self.magnitude().cmp(other.magnitude())
    }
    fn quo_rem(&self, d: &Self) -> (Self, Self) {
        let (q, r) = self.div_mod_floor(d);
        if r.is_negative() {
            // d negative: floor remainder has sign of d
            (q + 1, r - d)
        } else {
            (q, r)
        }
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn normalizing_unit(&self) -> Self {
        if self.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }
    fn unit_inverse(&self) -> Self {
        self.clone()
    }
    fn as_integer(&self) -> Option<Integer> {
        Some(self.clone())
    }
}

// ---------- rationals ----------

impl Scalar for Rational {
    type Ctx = ();
    fn embed(v: i64, _: &()) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn embed_integer(v: &Integer, _: &()) -> Self {
        BigRational::from_integer(v.clone())
    }
    fn ring_kind(_: &()) -> RingKind {
        RingKind::Rationals
    }
}

impl Ring for Rational {
    fn size_cmp(&self, other: &Self) -> Ordering {
        self.is_zero().cmp(&other.is_zero()).reverse()
    }
    fn quo_rem(&self, d: &Self) -> (Self, Self) {
        (self / d, Rational::zero())
    }
    fn is_unit(&self) -> bool {
        !self.is_zero()
    }
    fn normalizing_unit(&self) -> Self {
        self.recip()
    }
    fn unit_inverse(&self) -> Self {
        self.recip()
    }
    fn as_integer(&self) -> Option<Integer> {
        None
    }
}

// ---------- GF(p) ----------

/// Residue modulo a prime. `p == 0` marks a modulus-free constant
/// (from `zero()`/`one()`), which adopts the modulus of whatever bound
/// element it meets.
#[derive(Clone, Copy)]
pub struct Fp {
    v: i64,
    p: u64,
}

impl Fp {
    pub fn new(v: i64, p: u64) -> Fp {
        assert!(p >= 2, "modulus must be at least 2");
        Fp { v: v.rem_euclid(p as i64), p }
    }

    pub fn value(&self) -> u64 {
        if self.p == 0 {
            self.v as u64
        } else {
            self.v as u64 % self.p
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        (self.p != 0).then_some(self.p)
    }

    fn unify(a: Fp, b: Fp) -> (i64, i64, u64) {
        match (a.p, b.p) {
            (0, 0) => (a.v, b.v, 0),
            (0, p) => (a.v.rem_euclid(p as i64), b.v, p),
            (p, 0) => (a.v, b.v.rem_euclid(p as i64), p),
            (p, q) => {
                assert_eq!(p, q, "mixed GF(p) moduli");
                (a.v, b.v, p)
            }
        }
    }

    fn finish(v: i128, p: u64) -> Fp {
        if p == 0 {
            Fp { v: v as i64, p }
        } else {
            Fp { v: v.rem_euclid(p as i128) as i64, p }
        }
    }

    pub fn inverse(&self) -> Option<Fp> {
        if self.is_zero() {
            return None;
        }
        if self.p == 0 {
            return match self.v {
                1 => Some(*self),
                -1 => Some(*self),
                _ => panic!("inverse of modulus-free residue {}", self.v),
            };
        }
        let p = self.p as i128;
        let (mut r0, mut r1) = (p, self.v as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(Fp::finish(t0, self.p))
    }
}

impl PartialEq for Fp {
    fn eq(&self, other: &Fp) -> bool {
        let (a, b, p) = Fp::unify(*self, *other);
        if p == 0 {
            a == b
        } else {
            (a - b).rem_euclid(p as i64) == 0
        }
    }
}

impl Eq for Fp {}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p == 0 {
            write!(f, "{}", self.v)
        } else {
            write!(f, "{} (mod {})", self.v, self.p)
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let (a, b, p) = Fp::unify(self, rhs);
        Fp::finish(a as i128 + b as i128, p)
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        let (a, b, p) = Fp::unify(self, rhs);
        Fp::finish(a as i128 - b as i128, p)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        let (a, b, p) = Fp::unify(self, rhs);
        Fp::finish(a as i128 * b as i128, p)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp::finish(-(self.v as i128), self.p)
    }
}

impl Zero for Fp {
    fn zero() -> Fp {
        Fp { v: 0, p: 0 }
    }
    fn is_zero(&self) -> bool {
        if self.p == 0 {
            self.v == 0
        } else {
            self.v.rem_euclid(self.p as i64) == 0
        }
    }
}

impl One for Fp {
    fn one() -> Fp {
        Fp { v: 1, p: 0 }
    }
}

impl Scalar for Fp {
    type Ctx = u64;
    fn embed(v: i64, p: &u64) -> Self {
        Fp::new(v, *p)
    }
    fn embed_integer(v: &Integer, p: &u64) -> Self {
        let r = v.mod_floor(&BigInt::from(*p));
        Fp::new(r.to_i64().expect("reduced residue fits"), *p)
    }
    fn ring_kind(p: &u64) -> RingKind {
        RingKind::Prime(*p)
    }
}

impl Ring for Fp {
    fn size_cmp(&self, other: &Self) -> Ordering {
        self.is_zero().cmp(&other.is_zero()).reverse()
    }
    fn quo_rem(&self, d: &Self) -> (Self, Self) {
        let inv = d.inverse().expect("division by zero residue");
        (*self * inv, Fp::zero())
    }
    fn is_unit(&self) -> bool {
        !self.is_zero()
    }
    fn normalizing_unit(&self) -> Self {
        self.inverse().expect("zero has no normalizing unit")
    }
    fn unit_inverse(&self) -> Self {
        self.inverse().expect("not a unit")
    }
    fn as_integer(&self) -> Option<Integer> {
        None
    }
}

/// Parses "p/q" or "p" as a rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_arithmetic_wraps() {
        let a = Fp::new(3, 5);
        let b = Fp::new(4, 5);
        assert_eq!((a + b).value(), 2);
        assert_eq!((a * b).value(), 2);
        assert_eq!((a - b).value(), 4);
        assert_eq!(a.inverse().unwrap().value(), 2);
    }

    #[test]
    fn free_constants_adopt_modulus() {
        let two = Fp::one() + Fp::one();
        let x = Fp::new(1, 2);
        assert!((two * x).is_zero());
        assert_eq!(Fp::one() + x, Fp::zero());
        assert_eq!(-Fp::one(), Fp::new(1, 2));
    }

    #[test]
    fn integer_euclid_remainder_nonnegative() {
        let (q, r) = BigInt::from(-7).quo_rem(&BigInt::from(3));
        assert_eq!((q, r), (BigInt::from(-3), BigInt::from(2)));
        let (q, r) = BigInt::from(7).quo_rem(&BigInt::from(-3));
        assert_eq!(BigInt::from(-3) * &q + &r, BigInt::from(7));
        assert!(!r.is_negative() && r < BigInt::from(3));
    }

    #[test]
    fn ring_kind_parsing() {
        assert_eq!(RingKind::parse("Z"), Some(RingKind::Integers));
        assert_eq!(RingKind::parse("F2"), Some(RingKind::Prime(2)));
        assert_eq!(RingKind::parse("GF(3)"), Some(RingKind::Prime(3)));
        assert_eq!(RingKind::parse("F4"), None);
    }

    #[test]
    fn rationals_round_trip() {
        let q = parse_rational("6/-4").unwrap();
        assert_eq!(format_rational(&q), "-3/2");
        assert!(parse_rational("1/0").is_none());
    }
}
