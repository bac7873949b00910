//! Exact rationals with power-of-two denominators.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `numerator / 2^exponent`, kept canonical: the numerator is odd, or zero
/// with exponent zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    numerator: BigInt,
    exponent: u32,
}

impl Dyadic {
    pub fn new(numerator: impl Into<BigInt>, exponent: u32) -> Dyadic {
        let mut d = Dyadic {
            numerator: numerator.into(),
            exponent,
        };
        d.normalize();
        d
    }

    fn normalize(&mut self) {
        if self.numerator.is_zero() {
            self.exponent = 0;
            return;
        }
        let twos = self
            .numerator
            .trailing_zeros()
            .map_or(0, |t| t.min(u64::from(self.exponent)) as u32);
        self.numerator >>= twos;
        self.exponent -= twos;
    }

    pub fn zero() -> Dyadic {
        Dyadic::new(0, 0)
    }

    pub fn one() -> Dyadic {
        Dyadic::new(1, 0)
    }

    pub fn from_int(v: impl Into<BigInt>) -> Dyadic {
        Dyadic::new(v, 0)
    }

    /// `2^-k`.
    pub fn half_pow(k: u32) -> Dyadic {
        Dyadic::new(1, k)
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.numerator.is_negative()
    }

    pub fn denominator(&self) -> BigInt {
        BigInt::one() << self.exponent
    }

    pub fn to_ratio(&self) -> BigRational {
        BigRational::new(self.numerator.clone(), self.denominator())
    }

    pub fn to_f64(&self) -> f64 {
        self.to_ratio().to_f64().unwrap_or(f64::NAN)
    }

    pub fn floor(&self) -> BigInt {
        self.numerator.div_floor(&self.denominator())
    }

    /// Exact comparison against an arbitrary rational.
    pub fn cmp_ratio(&self, other: &BigRational) -> Ordering {
        self.to_ratio().cmp(other)
    }

    fn aligned(&self, other: &Dyadic) -> (BigInt, BigInt, u32) {
        let e = self.exponent.max(other.exponent);
        (
            &self.numerator << (e - self.exponent),
            &other.numerator << (e - other.exponent),
            e,
        )
    }
}

impl Default for Dyadic {
    fn default() -> Self {
        Dyadic::zero()
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(rhs);
        Dyadic::new(a + b, e)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(rhs);
        Dyadic::new(a - b, e)
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(
            &self.numerator * &rhs.numerator,
            self.exponent + rhs.exponent,
        )
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: Dyadic) -> Dyadic {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            numerator: -self.numerator,
            exponent: self.exponent,
        }
    }
}

impl Sum for Dyadic {
    fn sum<I: Iterator<Item = Dyadic>>(iter: I) -> Dyadic {
        iter.fold(Dyadic::zero(), |acc, d| &acc + &d)
    }
}

impl<'a> Sum<&'a Dyadic> for Dyadic {
    fn sum<I: Iterator<Item = &'a Dyadic>>(iter: I) -> Dyadic {
        iter.fold(Dyadic::zero(), |acc, d| &acc + d)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator())
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for Dyadic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
