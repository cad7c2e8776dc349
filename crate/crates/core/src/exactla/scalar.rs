//! Exact rationals with a machine-word fast path.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ParseScalarError;

/// A rational number in lowest terms with positive denominator.
///
/// Values whose numerator and denominator fit in `i64` are always stored in
/// the small form, so structural equality and hashing agree with numeric
/// equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactScalar(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64, i64),
    Big(Box<BigRational>),
}

impl ExactScalar {
    pub const ZERO: ExactScalar = ExactScalar(Repr::Small(0, 1));
    pub const ONE: ExactScalar = ExactScalar(Repr::Small(1, 1));

    pub fn zero() -> Self {
        Self::ZERO
    }

    pub fn one() -> Self {
        Self::ONE
    }

    pub fn from_int(n: i64) -> Self {
        ExactScalar(Repr::Small(n, 1))
    }

    /// `num / den`, or `None` when `den == 0`.
    pub fn new(num: i64, den: i64) -> Option<Self> {
        if den == 0 {
            return None;
        }
        Some(Self::from_i128(num as i128, den as i128))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::from_ratio(BigRational::new(num, den)))
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => ExactScalar(Repr::Small(n, d)),
            _ => ExactScalar(Repr::Big(Box::new(BigRational::new_raw(n.into(), d.into())))),
        }
    }

    fn from_ratio(r: BigRational) -> Self {
        // BigRational keeps itself reduced with a positive denominator.
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            return ExactScalar(Repr::Small(n, d));
        }
        ExactScalar(Repr::Big(Box::new(r)))
    }

    fn to_ratio(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw((*n).into(), (*d).into()),
            Repr::Big(r) => (**r).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => (*n).into(),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => (*d).into(),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Small(n, d) => Self::from_i128(*d as i128, *n as i128),
            Repr::Big(r) => Self::from_ratio(r.recip()),
        })
    }

    fn add_ref(&self, other: &Self) -> Self {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &other.0) {
            if *b == 1 && *d == 1 {
                if let Some(s) = a.checked_add(*c) {
                    return ExactScalar(Repr::Small(s, 1));
                }
            }
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            if b == d {
                return Self::from_i128(a + c, b);
            }
            if let (Some(x), Some(y), Some(z)) = (a.checked_mul(d), c.checked_mul(b), b.checked_mul(d)) {
                if let Some(s) = x.checked_add(y) {
                    return Self::from_i128(s, z);
                }
            }
        }
        Self::from_ratio(self.to_ratio() + other.to_ratio())
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &other.0) {
            if *b == 1 && *d == 1 {
                if let Some(p) = a.checked_mul(*c) {
                    return ExactScalar(Repr::Small(p, 1));
                }
            }
            return Self::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128);
        }
        Self::from_ratio(self.to_ratio() * other.to_ratio())
    }

    fn neg_ref(&self) -> Self {
        match &self.0 {
            Repr::Small(n, d) => match n.checked_neg() {
                Some(m) => ExactScalar(Repr::Small(m, *d)),
                None => Self::from_ratio(-self.to_ratio()),
            },
            Repr::Big(r) => Self::from_ratio(-(**r).clone()),
        }
    }
}

impl Default for ExactScalar {
    fn default() -> Self {
        Self::ZERO
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<i32> for ExactScalar {
    fn from(n: i32) -> Self {
        Self::from_int(n as i64)
    }
}

impl From<BigRational> for ExactScalar {
    fn from(r: BigRational) -> Self {
        Self::from_ratio(r)
    }
}

impl From<&ExactScalar> for BigRational {
    fn from(s: &ExactScalar) -> Self {
        s.to_ratio()
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $m(self, rhs: &ExactScalar) -> ExactScalar {
                $body(self, rhs)
            }
        }
        impl $tr<ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, rhs: ExactScalar) -> ExactScalar {
                $body(&self, &rhs)
            }
        }
        impl $tr<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, rhs: &ExactScalar) -> ExactScalar {
                $body(&self, rhs)
            }
        }
        impl $tr<ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $m(self, rhs: ExactScalar) -> ExactScalar {
                $body(self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a: &ExactScalar, b: &ExactScalar| a.add_ref(b));
binop!(Sub, sub, |a: &ExactScalar, b: &ExactScalar| a.add_ref(&b.neg_ref()));
binop!(Mul, mul, |a: &ExactScalar, b: &ExactScalar| a.mul_ref(b));
binop!(Div, div, |a: &ExactScalar, b: &ExactScalar| a
    .mul_ref(&b.recip().expect("division by zero")));

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        self.neg_ref()
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        self.neg_ref()
    }
}

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, rhs: &ExactScalar) {
        *self = self.add_ref(rhs);
    }
}

impl SubAssign<&ExactScalar> for ExactScalar {
    fn sub_assign(&mut self, rhs: &ExactScalar) {
        *self = self.add_ref(&rhs.neg_ref());
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExactScalar {
    type Err = ParseScalarError;

    /// Accepts `p` or `p/q`, with an optional leading `-` or U+2212.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let (neg, body) = if let Some(rest) = t.strip_prefix('-') {
            (true, rest)
        } else if let Some(rest) = t.strip_prefix('\u{2212}') {
            (true, rest)
        } else {
            (false, t)
        };
        let bad = || ParseScalarError::Syntax(s.to_string());
        let digits = |x: &str| -> Result<BigInt, ParseScalarError> {
            if x.is_empty() || !x.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            x.parse::<BigInt>().map_err(|_| bad())
        };
        let (num, den) = match body.split_once('/') {
            Some((p, q)) => (digits(p)?, digits(q)?),
            None => (digits(body)?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(ParseScalarError::ZeroDenominator(s.to_string()));
        }
        let num = if neg { -num } else { num };
        Ok(Self::from_ratio(BigRational::new(num, den)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExactScalar {
        ExactScalar::new(n, d).unwrap()
    }

    #[test]
    fn canonical_form() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(3, -6), q(-1, 2));
        assert_eq!(q(0, -5), ExactScalar::zero());
        assert!(ExactScalar::new(1, 0).is_none());
    }

    #[test]
    fn arithmetic() {
        assert_eq!(q(1, 2) + q(1, 3), q(5, 6));
        assert_eq!(q(1, 2) - q(1, 2), ExactScalar::zero());
        assert_eq!(q(2, 3) * q(3, 4), q(1, 2));
        assert_eq!(q(2, 3) / q(4, 9), q(3, 2));
        assert_eq!(-q(1, 7), q(-1, 7));
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = ExactScalar::from_int(i64::MAX);
        let sum = &big + &big;
        assert_eq!(sum.to_string(), "18446744073709551614");
        let back = &sum - &big;
        assert_eq!(back, big);
        let m = ExactScalar::from_int(i64::MIN);
        assert_eq!((-&m).to_string(), "9223372036854775808");
        let p = &sum * &sum;
        assert_eq!((&p / &sum), sum);
    }

    #[test]
    fn parse_and_display() {
        for (s, want) in [("3", "3"), ("-4/6", "-2/3"), ("\u{2212}1/2", "-1/2"), ("10/5", "2")] {
            assert_eq!(s.parse::<ExactScalar>().unwrap().to_string(), want);
        }
        assert!(matches!("1/0".parse::<ExactScalar>(), Err(ParseScalarError::ZeroDenominator(_))));
        assert!("1.5".parse::<ExactScalar>().is_err());
        assert!("".parse::<ExactScalar>().is_err());
        assert!("--1".parse::<ExactScalar>().is_err());
    }
}
