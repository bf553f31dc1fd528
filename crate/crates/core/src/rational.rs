//! Exact rational scalar.
//!
//! [`Rational`] wraps an arbitrary-precision fraction kept in lowest terms
//! with a positive denominator. Every quantity the kernel produces is one of
//! these; floats only show up when a caller asks for [`Rational::to_f64`].

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use malachite_base::num::arithmetic::traits::{Abs, Reciprocal, Square};
use malachite_base::num::basic::traits::{One, Zero};
use malachite_base::num::conversion::traits::{IsInteger, RoundingFrom};
use malachite_base::rounding_modes::RoundingMode;
use malachite_nz::integer::Integer;
use malachite_nz::natural::Natural;
use serde::{Serialize, Serializer};

use crate::error::ParseRationalError;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(malachite_q::Rational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(malachite_q::Rational::from_signeds(numer, denom))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(malachite_q::Rational::from(n))
    }

    pub fn from_integers(numer: Integer, denom: Integer) -> Self {
        assert!(denom != 0u32, "zero denominator");
        Rational(malachite_q::Rational::from_integers(numer, denom))
    }

    pub fn zero() -> Self {
        Rational(malachite_q::Rational::ZERO)
    }

    pub fn one() -> Self {
        Rational(malachite_q::Rational::ONE)
    }

    /// Signed numerator in lowest terms.
    pub fn numer(&self) -> Integer {
        Integer::from_sign_and_abs_ref(self.0 >= 0u32, self.0.numerator_ref())
    }

    /// Positive denominator in lowest terms.
    pub fn denom(&self) -> &Natural {
        self.0.denominator_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.0 == 0u32
    }

    pub fn is_positive(&self) -> bool {
        self.0 > 0u32
    }

    pub fn is_negative(&self) -> bool {
        self.0 < 0u32
    }

    pub fn is_integer(&self) -> bool {
        (&self.0).is_integer()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        match self.0.partial_cmp(&0u32) {
            Some(Ordering::Greater) => 1,
            Some(Ordering::Less) => -1,
            _ => 0,
        }
    }

    pub fn abs(&self) -> Self {
        Rational((&self.0).abs())
    }

    pub fn square(&self) -> Self {
        Rational((&self.0).square())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational((&self.0).reciprocal())
    }

    pub fn half(&self) -> Self {
        Rational(&self.0 >> 1u64)
    }

    /// Nearest `f64`. Large numerators and denominators are handled without
    /// overflowing to infinity.
    pub fn to_f64(&self) -> f64 {
        f64::rounding_from(&self.0, RoundingMode::Nearest).0
    }

    /// Best rational approximation of `x` with denominator at most `max_denom`
    /// (continued-fraction convergents and semiconvergents).
    pub fn approximate(x: f64, max_denom: u64) -> Option<Self> {
        if !x.is_finite() || max_denom == 0 {
            return None;
        }
        let negative = x < 0.0;
        let target = x.abs();
        // Convergent recurrence h_k = a_k h_{k-1} + h_{k-2}, same for k.
        let (mut h_prev, mut h) = (0u128, 1u128);
        let (mut k_prev, mut k) = (1u128, 0u128);
        let mut rest = target;
        let max_denom = max_denom as u128;
        loop {
            let a = rest.floor();
            if a > 1e30 {
                break;
            }
            let a = a as u128;
            let k_next = a.checked_mul(k).and_then(|v| v.checked_add(k_prev));
            let h_next = a.checked_mul(h).and_then(|v| v.checked_add(h_prev));
            let (Some(h_next), Some(k_next)) = (h_next, k_next) else {
                break;
            };
            if k_next > max_denom {
                // Largest admissible semiconvergent, kept only if it beats
                // the last convergent.
                let t = (max_denom - k_prev).checked_div(k).unwrap_or(0);
                if t > 0 {
                    let hs = t * h + h_prev;
                    let ks = t * k + k_prev;
                    let err_semi = (hs as f64 / ks as f64 - target).abs();
                    let err_conv = (h as f64 / k as f64 - target).abs();
                    if err_semi < err_conv {
                        h = hs;
                        k = ks;
                    }
                }
                break;
            }
            h_prev = h;
            h = h_next;
            k_prev = k;
            k = k_next;
            let frac = rest - rest.floor();
            if frac < 1e-18 {
                break;
            }
            rest = 1.0 / frac;
        }
        if k == 0 {
            return None;
        }
        let r = malachite_q::Rational::from_naturals(Natural::from(h), Natural::from(k));
        Some(Rational(if negative { -r } else { r }))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

/// Accepts `"p/q"` or a plain integer `"p"`, with an optional leading sign.
impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ParseRationalError(s.to_string());
        let (numer, denom) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let numer = parse_integer(numer).ok_or_else(bad)?;
        let denom = parse_integer(denom).ok_or_else(bad)?;
        if denom == 0u32 {
            return Err(bad());
        }
        Ok(Rational::from_integers(numer, denom))
    }
}

fn parse_integer(s: &str) -> Option<Integer> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let n: Integer = digits.parse().ok()?;
    Some(if s.starts_with('-') { -n } else { n })
}

/// `p/q` in lowest terms, or just `p` for integers.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

/// Shorthand for `Rational::new(n, d)`.
pub fn q(numer: i64, denom: i64) -> Rational {
    Rational::new(numer, denom)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let r = q(6, -8);
        assert_eq!(r.numer(), Integer::from(-3));
        assert_eq!(r.denom(), &Natural::from(4u32));
        assert_eq!(r.to_string(), "-3/4");
    }

    #[test]
    fn parse_forms() {
        assert_eq!("5".parse::<Rational>().unwrap(), q(5, 1));
        assert_eq!("-10/4".parse::<Rational>().unwrap(), q(-5, 2));
        assert_eq!(" 3/ 9 ".parse::<Rational>().unwrap(), q(1, 3));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("abc".parse::<Rational>().is_err());
        assert!("1.5".parse::<Rational>().is_err());
    }

    #[test]
    fn display_integers_without_denominator() {
        assert_eq!(q(4, 2).to_string(), "2");
        assert_eq!(Rational::zero().to_string(), "0");
    }

    #[test]
    fn field_operations_exact() {
        let a = q(1, 3);
        let b = q(1, 6);
        assert_eq!(&a + &b, q(1, 2));
        assert_eq!(&a - &b, q(1, 6));
        assert_eq!(&a * &b, q(1, 18));
        assert_eq!(&a / &b, q(2, 1));
        assert!(q(1, 3) > q(1, 4));
    }

    #[test]
    fn approximate_recovers_simple_fractions() {
        assert_eq!(Rational::approximate(0.75, 100).unwrap(), q(3, 4));
        assert_eq!(Rational::approximate(-2.5, 10).unwrap(), q(-5, 2));
        assert_eq!(Rational::approximate(3.0, 1).unwrap(), q(3, 1));
        let pi = Rational::approximate(std::f64::consts::PI, 1000).unwrap();
        assert_eq!(pi, q(355, 113));
        assert!(Rational::approximate(f64::NAN, 10).is_none());
    }

    #[test]
    fn approximate_respects_denominator_bound() {
        let x = 2f64.sqrt();
        let r = Rational::approximate(x, 1_000_000).unwrap();
        assert!(r.denom() <= &1_000_000u32);
        assert!((r.to_f64() - x).abs() < 1e-11);
    }

    #[test]
    fn to_f64_large_values() {
        use malachite_base::num::arithmetic::traits::Pow;
        let big = Rational::from_integers(Integer::from(10).pow(400), Integer::from(10).pow(399));
        assert!((big.to_f64() - 10.0).abs() < 1e-12);
    }
}
