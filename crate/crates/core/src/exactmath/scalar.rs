//! Exact scalars: arbitrary-precision rationals and residues modulo a prime.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The base field: either the rationals or a prime field `F_p` with `2 <= p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    /// Checked constructor for `F_p`.
    pub fn prime(p: u64) -> Result<Self> {
        if !(2..(1u64 << 31)).contains(&p) {
            return Err(Error::InvalidField(format!("{p} is outside 2 <= p < 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    /// Image of an integer under the canonical map `Z -> k`.
    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Q(Rational::from_i64(n)),
            FieldSpec::Prime(p) => Scalar::Fp {
                value: n.rem_euclid(p as i64) as u32,
                p,
            },
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Q(Rational::from_big(BigRational::from_integer(n.clone()))),
            FieldSpec::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Scalar::Fp {
                    value: r.to_u32().expect("residue fits"),
                    p,
                }
            }
        }
    }

    /// `num/den` in the field; fails when `den` vanishes in the field.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        let d = self.from_bigint(den);
        if d.is_zero() {
            return Err(Error::Parse(format!("denominator {den} vanishes in {self}")));
        }
        Ok(&self.from_bigint(num) * &d.inv().expect("nonzero"))
    }

    /// Parses `Q`, `F<p>` or `Fp<p>` (case-insensitive).
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        let digits = t
            .strip_prefix("Fp")
            .or_else(|| t.strip_prefix("fp"))
            .or_else(|| t.strip_prefix('F'))
            .or_else(|| t.strip_prefix('f'))
            .ok_or_else(|| Error::InvalidField(format!("unrecognised field `{t}`")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidField(format!("unrecognised field `{t}`")))?;
        FieldSpec::prime(p)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Reduced rational number. Values that fit in `i64` stay on the small path;
/// everything else spills into a boxed `BigRational`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rational {
    /// numerator, denominator; denominator positive, gcd 1.
    Small(i64, i64),
    Big(Box<BigRational>),
}

impl Rational {
    pub fn from_i64(n: i64) -> Self {
        Rational::Small(n, 1)
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        let (mut n, mut d) = (num, den);
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = n.gcd(&d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(a), Ok(b)) => Rational::Small(a, b),
            _ => Rational::Big(Box::new(BigRational::new(BigInt::from(n), BigInt::from(d)))),
        }
    }

    pub fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(a), Some(b)) => Rational::Small(a, b),
            _ => Rational::Big(Box::new(r)),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(a, b) => BigRational::new_raw(BigInt::from(*a), BigInt::from(*b)),
            Rational::Big(r) => (**r).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rational::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rational::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rational::Small(_, d) => *d == 1,
            Rational::Big(r) => r.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rational::Small(a, _) => *a < 0,
            Rational::Big(r) => r.is_negative(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Rational::from_i128(a * d + c * b, b * d)
            }
            _ => Rational::from_big(self.to_big() + other.to_big()),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                Rational::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rational::from_big(self.to_big() * other.to_big()),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            Rational::Small(a, b) if *a != i64::MIN => Rational::Small(-a, *b),
            _ => Rational::from_big(-self.to_big()),
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Rational::Small(a, b) => Rational::from_i128(*b as i128, *a as i128),
            Rational::Big(r) => Rational::from_big(r.recip()),
        })
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(a, 1) => write!(f, "{a}"),
            Rational::Small(a, b) => write!(f, "{a}/{b}"),
            Rational::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Rational::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

/// An element of the base field. Mixing scalars of different fields is a
/// programming error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Rational),
    Fp { value: u32, p: u32 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::Rationals,
            Scalar::Fp { p, .. } => FieldSpec::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Q(r) => r.inv().map(Scalar::Q),
            Scalar::Fp { value, p } => {
                if *value == 0 {
                    None
                } else {
                    Some(Scalar::Fp {
                        value: pow_mod(*value as u64, *p as u64 - 2, *p as u64) as u32,
                        p: *p,
                    })
                }
            }
        }
    }

    /// Whether the display form needs a leading minus sign.
    pub fn is_negative_display(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_negative(),
            Scalar::Fp { .. } => false,
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.add(b)),
            (Scalar::Fp { value: a, p }, Scalar::Fp { value: b, p: q }) if p == q => {
                let s = *a as u64 + *b as u64;
                let m = *p as u64;
                Scalar::Fp {
                    value: if s >= m { (s - m) as u32 } else { s as u32 },
                    p: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.mul(b)),
            (Scalar::Fp { value: a, p }, Scalar::Fp { value: b, p: q }) if p == q => Scalar::Fp {
                value: (*a as u64 * *b as u64 % *p as u64) as u32,
                p: *p,
            },
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(a.neg()),
            Scalar::Fp { value, p } => Scalar::Fp {
                value: if *value == 0 { 0 } else { p - value },
                p: *p,
            },
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => write!(f, "{r}"),
            Scalar::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}
