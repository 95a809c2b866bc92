//! Arbitrary-precision rationals, p-adic valuations and square tests.
//!
//! Integers are [`num_bigint::BigInt`]; [`Rat`] is always kept reduced with a
//! positive denominator, so derived equality is structural equality.

use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::iter::{Product, Sum};
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;

/// A p-adic valuation: an integer, or `Infinite` for the valuation of zero.
///
/// `Finite(_) < Infinite` for every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ValP {
    Finite(i64),
    Infinite,
}

impl ValP {
    pub fn finite(self) -> Option<i64> {
        match self {
            ValP::Finite(v) => Some(v),
            ValP::Infinite => None,
        }
    }
}

impl Add for ValP {
    type Output = ValP;
    fn add(self, rhs: ValP) -> ValP {
        match (self, rhs) {
            (ValP::Finite(a), ValP::Finite(b)) => ValP::Finite(a + b),
            _ => ValP::Infinite,
        }
    }
}

impl fmt::Display for ValP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValP::Finite(v) => write!(f, "{v}"),
            ValP::Infinite => f.write_str("inf"),
        }
    }
}

/// Exact rational number in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rat {
    num: BigInt,
    den: BigInt,
}

impl Rat {
    pub fn zero() -> Rat {
        Rat { num: BigInt::zero(), den: BigInt::one() }
    }

    pub fn one() -> Rat {
        Rat::from_int(BigInt::one())
    }

    pub fn from_int(n: BigInt) -> Rat {
        Rat { num: n, den: BigInt::one() }
    }

    pub fn from_i64(n: i64) -> Rat {
        Rat::from_int(BigInt::from(n))
    }

    /// `n / d`, reduced. Errors when `d` is zero.
    pub fn new(num: BigInt, den: BigInt) -> Result<Rat> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat::new_unchecked(num, den))
    }

    /// Convenience constructor for literals; panics on a zero denominator.
    pub fn frac(num: i64, den: i64) -> Rat {
        Rat::new(BigInt::from(num), BigInt::from(den)).expect("zero denominator")
    }

    fn new_unchecked(mut num: BigInt, mut den: BigInt) -> Rat {
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num /= &g;
            den /= &g;
        }
        if num.is_zero() {
            den = BigInt::one();
        }
        Rat { num, den }
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn abs(&self) -> Rat {
        Rat { num: self.num.abs(), den: self.den.clone() }
    }

    pub fn recip(&self) -> Result<Rat> {
        Rat::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Rat) -> Result<Rat> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat::new_unchecked(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn pow(&self, e: u32) -> Rat {
        Rat { num: num_traits::pow(self.num.clone(), e as usize), den: num_traits::pow(self.den.clone(), e as usize) }
    }

    /// Height `max(|num|, den)` of the reduced fraction.
    pub fn height(&self) -> BigInt {
        let a = self.num.abs();
        if a > self.den {
            a
        } else {
            self.den.clone()
        }
    }

    /// p-adic valuation `v_p(num) - v_p(den)`; `Infinite` for zero.
    pub fn vp(&self, p: &BigInt) -> Result<ValP> {
        if !is_prime(p) {
            return Err(Error::NotPrime);
        }
        if self.is_zero() {
            return Ok(ValP::Infinite);
        }
        let up = vp_int(&self.num, p) as i64;
        let down = vp_int(&self.den, p) as i64;
        Ok(ValP::Finite(up - down))
    }

    /// Returns the nonnegative square root when `self` is the square of a rational.
    pub fn sqrt(&self) -> Option<Rat> {
        if self.is_negative() {
            return None;
        }
        let n = int_sqrt(&self.num).ok()??;
        let d = int_sqrt(&self.den).ok()??;
        Some(Rat { num: n, den: d })
    }

    pub fn is_square(&self) -> bool {
        self.sqrt().is_some()
    }
}

/// Square test: `Some(r)` with `r >= 0` and `r * r == x` when `x` is a rational square.
pub fn is_square(x: &Rat) -> Option<Rat> {
    x.sqrt()
}

/// Number of times `p` divides the nonzero integer `n`.
pub(crate) fn vp_int(n: &BigInt, p: &BigInt) -> u64 {
    debug_assert!(!n.is_zero());
    let mut n = n.abs();
    let mut count = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return count;
        }
        n = q;
        count += 1;
    }
}

/// Exact integer square root: `Some(r)` iff `n = r^2`.
///
/// Newton iteration on the magnitude, followed by an exact check.
pub fn int_sqrt(n: &BigInt) -> Result<Option<BigInt>> {
    if n.is_negative() {
        return Err(Error::NegativeSquareRoot);
    }
    let r = floor_sqrt(n);
    Ok(if &(&r * &r) == n { Some(r) } else { None })
}

/// `floor(sqrt(n))` for `n >= 0`.
pub(crate) fn floor_sqrt(n: &BigInt) -> BigInt {
    if n.is_zero() {
        return BigInt::zero();
    }
    // Start above the root: 2^ceil(bits/2).
    let bits = n.bits();
    let mut x = BigInt::one() << bits.div_ceil(2);
    loop {
        let y = (&x + n / &x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}

const SMALL_PRIMES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Primality by Miller–Rabin with the first twelve prime bases.
///
/// Deterministic below 3.3 * 10^24, which covers every prime used here.
pub fn is_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    for &p in SMALL_PRIMES.iter() {
        let p = BigInt::from(p);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let one = BigInt::one();
    let n_minus_one = n - &one;
    let mut d = n_minus_one.clone();
    let mut s = 0;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'bases: for &a in SMALL_PRIMES.iter() {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

impl Default for Rat {
    fn default() -> Rat {
        Rat::zero()
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::from_i64(n)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Rat {
        Rat::from_int(n)
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Rat) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Rat) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_int(s: &str, allow_sign: bool) -> Option<BigInt> {
    let digits = if allow_sign { s.strip_prefix(['-', '+']).unwrap_or(s) } else { s };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(s).ok()
}

/// Parses `[+-]digits[/digits]`. Zero denominators and stray characters are rejected.
impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rat> {
        let bad = || Error::ParseRat(s.to_string());
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (parse_int(n, true).ok_or_else(bad)?, parse_int(d, false).ok_or_else(bad)?),
            None => (parse_int(s, true).ok_or_else(bad)?, BigInt::one()),
        };
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Rat::new_unchecked(n, d))
    }
}

impl Rat {
    /// Canonical text form (`"num/den"`, bare integer when `den = 1`).
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Best-effort conversion used for pretty printing only.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.num.to_i64()
        } else {
            None
        }
    }

    pub fn signum(&self) -> i32 {
        match self.num.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }
}

impl<'a> Add<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn add(self, rhs: &Rat) -> Rat {
        if self.den == rhs.den {
            return Rat::new_unchecked(&self.num + &rhs.num, self.den.clone());
        }
        Rat::new_unchecked(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn sub(self, rhs: &Rat) -> Rat {
        if self.den == rhs.den {
            return Rat::new_unchecked(&self.num - &rhs.num, self.den.clone());
        }
        Rat::new_unchecked(&self.num * &rhs.den - &rhs.num * &self.den, &self.den * &rhs.den)
    }
}

impl<'a> Mul<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn mul(self, rhs: &Rat) -> Rat {
        if self.is_zero() || rhs.is_zero() {
            return Rat::zero();
        }
        // Cross-reduce first to keep the operands small.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        Rat {
            num: (&self.num / &g1) * (&rhs.num / &g2),
            den: (&self.den / &g2) * (&rhs.den / &g1),
        }
    }
}

/// Panics on division by zero; use [`Rat::checked_div`] for fallible division.
impl<'a> Div<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat { num: -self.num, den: self.den }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        *self = &*self * rhs;
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl Product for Rat {
    fn product<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::one(), |acc, x| acc * x)
    }
}

#[cfg(feature = "serde")]
mod serde_impls {
    use super::{Rat, ValP};
    use alloc::string::String;
    use serde::de::{self, Deserializer, Visitor};
    use serde::{Deserialize, Serialize, Serializer};

    impl Serialize for Rat {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            s.collect_str(self)
        }
    }

    impl<'de> Deserialize<'de> for Rat {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
            let s = String::deserialize(d)?;
            s.parse().map_err(de::Error::custom)
        }
    }

    impl Serialize for ValP {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            match self {
                ValP::Finite(v) => s.serialize_i64(*v),
                ValP::Infinite => s.serialize_str("inf"),
            }
        }
    }

    struct ValPVisitor;

    impl<'de> Visitor<'de> for ValPVisitor {
        type Value = ValP;
        fn expecting(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
            f.write_str("an integer or \"inf\"")
        }
        fn visit_i64<E: de::Error>(self, v: i64) -> Result<ValP, E> {
            Ok(ValP::Finite(v))
        }
        fn visit_u64<E: de::Error>(self, v: u64) -> Result<ValP, E> {
            i64::try_from(v).map(ValP::Finite).map_err(E::custom)
        }
        fn visit_str<E: de::Error>(self, v: &str) -> Result<ValP, E> {
            if v == "inf" {
                Ok(ValP::Infinite)
            } else {
                Err(E::invalid_value(de::Unexpected::Str(v), &self))
            }
        }
    }

    impl<'de> Deserialize<'de> for ValP {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<ValP, D::Error> {
            d.deserialize_any(ValPVisitor)
        }
    }
}
