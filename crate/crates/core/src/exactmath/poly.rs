//! Dense univariate polynomials over a [`FieldSpec`].

use std::fmt;

use num_bigint::BigInt;

use super::scalar::{FieldSpec, Scalar};
use crate::error::{Error, Result};

/// Polynomial in `X`; `coeffs[i]` is the coefficient of `X^i`, with no
/// trailing zeros. The zero polynomial has an empty coefficient list and
/// degree `None`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Scalar>,
    field: FieldSpec,
}

impl Poly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.field() == field));
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs, field }
    }

    pub fn from_i64s(field: FieldSpec, coeffs: &[i64]) -> Self {
        Poly::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: FieldSpec) -> Self {
        Poly { coeffs: Vec::new(), field }
    }

    pub fn constant(c: Scalar) -> Self {
        let field = c.field();
        Poly::new(field, vec![c])
    }

    pub fn one(field: FieldSpec) -> Self {
        Poly::constant(field.one())
    }

    /// `c * X^n`.
    pub fn monomial(c: Scalar, n: usize) -> Self {
        let field = c.field();
        let mut coeffs = vec![field.zero(); n + 1];
        coeffs[n] = c;
        Poly::new(field, coeffs)
    }

    pub fn x(field: FieldSpec) -> Self {
        Poly::monomial(field.one(), 1)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Scalar::is_one)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(self.field, (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(self.field, (0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(self.field, out)
    }

    pub fn pow(&self, e: usize) -> Poly {
        (0..e).fold(Poly::one(self.field), |acc, _| acc.mul(self))
    }

    /// Euclidean division: `self = quot * divisor + rem` with `rem = 0` or
    /// `deg rem < deg divisor`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::ZeroDivisor)?;
        let lead_inv = divisor.leading().and_then(Scalar::inv).ok_or(Error::ZeroDivisor)?;
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return Ok((Poly::zero(self.field), Poly::zero(self.field)));
        };
        if sd < dd {
            return Ok((Poly::zero(self.field), self.clone()));
        }
        let mut quot = vec![self.field.zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * b);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(self.field, quot), Poly::new(self.field, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        self.divmod(divisor).map(|(_, r)| r)
    }

    pub fn quot(&self, divisor: &Poly) -> Result<Poly> {
        self.divmod(divisor).map(|(q, _)| q)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &self.field.from_i64(i as i64))
                .collect(),
        )
    }

    /// Scales to leading coefficient one; `None` for the zero polynomial.
    pub fn monic(&self) -> Option<Poly> {
        let inv = self.leading()?.inv()?;
        Some(self.scale(&inv))
    }

    /// Monic gcd by the Euclidean algorithm; `gcd(f, 0)` is `f` made monic.
    pub fn gcd_monic(f: &Poly, g: &Poly) -> Result<Poly> {
        if f.is_zero() && g.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut a, mut b) = (f.clone(), g.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic().expect("nonzero"))
    }

    /// Evaluation at a field element (Horner).
    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    /// Parses the CLI syntax: terms such as `3*X^2`, `-X`, `1/2*X^4`, `7`
    /// joined by `+`/`-`. Over `F_p` integers are reduced mod `p`.
    pub fn parse(s: &str, field: FieldSpec) -> Result<Poly> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && !(i > 0 && cur.ends_with('^')) {
                if !cur.is_empty() {
                    terms.push((neg, std::mem::take(&mut cur)));
                } else if i != 0 {
                    return Err(Error::Parse(format!("dangling sign in `{s}`")));
                }
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(Error::Parse(format!("trailing sign in `{s}`")));
        }
        terms.push((neg, cur));

        let mut acc = Poly::zero(field);
        for (neg, t) in terms {
            let (coef, exp) = parse_term(&t, field)?;
            let c = if neg { -&coef } else { coef };
            acc = acc.add(&Poly::monomial(c, exp));
        }
        Ok(acc)
    }
}

fn parse_term(t: &str, field: FieldSpec) -> Result<(Scalar, usize)> {
    let bad = || Error::Parse(format!("malformed term `{t}`"));
    let (coef_part, var_part) = match t.find(['X', 'x']) {
        Some(pos) => (&t[..pos], Some(&t[pos + 1..])),
        None => (t, None),
    };
    let coef_part = coef_part.strip_suffix('*').unwrap_or(coef_part);
    let coef = if coef_part.is_empty() {
        if var_part.is_none() {
            return Err(bad());
        }
        field.one()
    } else {
        let (num, den) = match coef_part.split_once('/') {
            Some((n, d)) => (n, d),
            None => (coef_part, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        field.from_fraction(&num, &den)?
    };
    let exp = match var_part {
        None => 0,
        Some("") => 1,
        Some(rest) => {
            let e = rest.strip_prefix('^').ok_or_else(bad)?;
            e.parse::<usize>().map_err(|_| bad())?
        }
    };
    Ok((coef, exp))
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative_display();
            let mag = if negative { -c } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "X".to_string(),
                _ => format!("X^{i}"),
            };
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Poly {
        Poly::parse(s, FieldSpec::Rationals).unwrap()
    }

    #[test]
    fn divmod_examples() {
        let (qt, r) = q("X^2 + 1").divmod(&q("X")).unwrap();
        assert_eq!((qt, r), (q("X"), q("1")));
        let f = q("X^3 - X^2");
        let (qt, r) = f.divmod(&f).unwrap();
        assert_eq!((qt, r), (q("1"), Poly::zero(FieldSpec::Rationals)));
        let (qt, r) = q("2*X^3 - 2*X^2").divmod(&f).unwrap();
        assert_eq!((qt, r), (q("2"), Poly::zero(FieldSpec::Rationals)));
    }

    #[test]
    fn divide_by_zero_fails() {
        assert_eq!(q("X").divmod(&Poly::zero(FieldSpec::Rationals)), Err(Error::ZeroDivisor));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(Poly::gcd_monic(&q("X^3 - 1"), &q("3*X^2")).unwrap(), q("1"));
        let f2 = FieldSpec::Prime(2);
        let x2 = Poly::parse("X^2", f2).unwrap();
        assert_eq!(Poly::gcd_monic(&x2, &Poly::zero(f2)).unwrap(), x2);
        // X^3 - X^2 = X^2 (X - 1), derivative X (3X - 2): gcd is X.
        let g = Poly::gcd_monic(&q("X^3 - X^2"), &q("3*X^2 - 2*X")).unwrap();
        assert_eq!(g, q("X"));
        assert!(q("X^3 - X^2").rem(&g).unwrap().is_zero());
        assert!(q("3*X^2 - 2*X").rem(&g).unwrap().is_zero());
        let z = Poly::zero(FieldSpec::Rationals);
        assert_eq!(Poly::gcd_monic(&z, &z), Err(Error::BothZero));
    }

    #[test]
    fn parse_and_display() {
        let p = q("1/2*X^4 - X + 7");
        assert_eq!(p.degree(), Some(4));
        assert_eq!(p.to_string(), "1/2*X^4 - X + 7");
        assert_eq!(q("-X^3 + 2X").to_string(), "-X^3 + 2*X");
        let f3 = FieldSpec::Prime(3);
        assert_eq!(Poly::parse("X^3 - 1", f3).unwrap().to_string(), "X^3 + 2");
        assert!(Poly::parse("X^", FieldSpec::Rationals).is_err());
        assert!(Poly::parse("3*Y", FieldSpec::Rationals).is_err());
        assert!(Poly::parse("X +", FieldSpec::Rationals).is_err());
        assert!(Poly::parse("1/3 X", f3).is_err());
    }

    #[test]
    fn derivative_in_char_p() {
        let f2 = FieldSpec::Prime(2);
        assert!(Poly::parse("X^2", f2).unwrap().derivative().is_zero());
        assert_eq!(q("X^3 - X^2").derivative(), q("3*X^2 - 2*X"));
    }
}
