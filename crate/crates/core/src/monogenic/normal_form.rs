//! Normal forms in `k[x, τ, ζ]/(f(x), τ d(x), ζ f'(x), τ² - u(x) ζ)`.
//!
//! A degree-`n` element is `a` (n = 0), `b τ ζ^{(n-1)/2}` (n odd) or
//! `b ζ^{n/2}` (n even); only its coefficient polynomial is stored.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactmath::Poly;

use super::presentation::MonogenicPresentation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HHElement<'a> {
    pub degree: usize,
    pub coeff: Poly,
    presentation: &'a MonogenicPresentation,
}

impl<'a> HHElement<'a> {
    pub fn presentation(&self) -> &'a MonogenicPresentation {
        self.presentation
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn add(&self, other: &HHElement<'a>) -> Result<HHElement<'a>> {
        same(self, other)?;
        if self.degree != other.degree {
            return Err(Error::DimensionMismatch(format!("degrees {} and {}", self.degree, other.degree)));
        }
        Ok(self.presentation.element(self.degree, self.coeff.add(&other.coeff)))
    }

    pub fn neg(&self) -> HHElement<'a> {
        self.presentation.element(self.degree, self.coeff.neg())
    }
}

impl fmt::Display for HHElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gen = match self.degree {
            0 => String::new(),
            1 => "τ".to_string(),
            2 => "ζ".to_string(),
            n if n % 2 == 1 => format!("τζ^{}", n / 2),
            n => format!("ζ^{}", n / 2),
        };
        let c = self.coeff.to_string().replace('X', "x");
        if gen.is_empty() || self.coeff.is_zero() {
            write!(f, "{c}")
        } else if self.coeff == Poly::one(self.coeff.field()) {
            write!(f, "{gen}")
        } else {
            write!(f, "({c})·{gen}")
        }
    }
}

fn same(a: &HHElement, b: &HHElement) -> Result<()> {
    if a.presentation == b.presentation {
        Ok(())
    } else {
        Err(Error::PresentationMismatch)
    }
}

impl MonogenicPresentation {
    /// The element of degree `n` with coefficient `coeff`, reduced.
    pub fn element(&self, degree: usize, coeff: Poly) -> HHElement<'_> {
        let modulus = if degree == 0 { &self.f } else { &self.d };
        let coeff = coeff.rem(modulus).expect("modulus is monic");
        HHElement { degree, coeff, presentation: self }
    }

    pub fn zero_element(&self, degree: usize) -> HHElement<'_> {
        self.element(degree, Poly::zero(self.field))
    }

    pub fn one(&self) -> HHElement<'_> {
        self.element(0, Poly::one(self.field))
    }

    pub fn x(&self) -> HHElement<'_> {
        self.element(0, Poly::x(self.field))
    }

    pub fn tau(&self) -> HHElement<'_> {
        self.element(1, Poly::one(self.field))
    }

    pub fn zeta(&self) -> HHElement<'_> {
        self.element(2, Poly::one(self.field))
    }

    /// Brackets of the generators `x, τ, ζ` with each other.
    pub fn bracket_table(&self) -> Vec<(&'static str, &'static str, HHElement<'_>)> {
        let gens = [("x", self.x()), ("τ", self.tau()), ("ζ", self.zeta())];
        let mut out = Vec::new();
        for (na, a) in &gens {
            for (nb, b) in &gens {
                out.push((*na, *nb, bracket_normal_form(a, b).expect("same presentation")));
            }
        }
        out
    }
}

pub fn cup_normal_form<'a>(a: &HHElement<'a>, b: &HHElement<'a>) -> Result<HHElement<'a>> {
    same(a, b)?;
    let p = a.presentation;
    let mut c = a.coeff.mul(&b.coeff);
    if a.degree % 2 == 1 && b.degree % 2 == 1 {
        c = c.mul(&p.u);
    }
    Ok(p.element(a.degree + b.degree, c))
}

#[derive(Clone, Copy)]
enum Gen {
    X,
    Tau,
    Zeta,
}

impl Gen {
    fn degree(self) -> usize {
        match self {
            Gen::X => 0,
            Gen::Tau => 1,
            Gen::Zeta => 2,
        }
    }
}

/// A homogeneous value that may sit in degree `-1`, where everything is zero.
type Term<'a> = Option<HHElement<'a>>;

fn mul<'a>(a: &Term<'a>, b: &HHElement<'a>) -> Term<'a> {
    a.as_ref().map(|a| cup_normal_form(a, b).expect("same presentation"))
}

fn sum<'a>(a: Term<'a>, b: Term<'a>) -> Term<'a> {
    match (a, b) {
        (Some(a), Some(b)) => Some(a.add(&b).expect("same degree")),
        (a, None) => a,
        (None, b) => b,
    }
}

fn sign<'a>(negative: bool, t: Term<'a>) -> Term<'a> {
    if negative {
        t.map(|e| e.neg())
    } else {
        t
    }
}

/// `[g, x], [g, τ], [g, ζ]` for a generator `g`.
fn generator_table(p: &MonogenicPresentation, g: Gen) -> [Term<'_>; 3] {
    match g {
        Gen::X => [None, Some(p.element(0, p.q.neg())), Some(p.zero_element(1))],
        Gen::Tau => [Some(p.element(0, p.q.clone())), Some(p.zero_element(1)), Some(p.element(2, p.w.neg()))],
        Gen::Zeta => [Some(p.zero_element(1)), Some(p.element(2, p.w.clone())), Some(p.zero_element(3))],
    }
}

/// `[a, b]` where `[a, -]` is the derivation of degree `deg_a - 1` taking
/// the values `table` on `x, τ, ζ`.
fn derive<'a>(p: &'a MonogenicPresentation, deg_a: usize, table: &[Term<'a>; 3], b: &HHElement<'a>) -> Term<'a> {
    let odd_a = deg_a % 2 == 1;
    // [a, c(x)] = c'(x) [a, x]
    let dc = mul(&table[0], &p.element(0, b.coeff.derivative()));
    if b.degree == 0 {
        return dc;
    }
    let (eps, i) = (b.degree % 2, b.degree / 2);
    let zeta_pow = |k: usize| p.element(2 * k, Poly::one(p.field));
    // [a, ζ^i] = i [a, ζ] ζ^{i-1}
    let d_zeta_i = if i == 0 {
        None
    } else {
        let scaled = table[2].as_ref().map(|t| p.element(t.degree, t.coeff.scale(&p.field.from_i64(i as i64))));
        mul(&scaled, &zeta_pow(i - 1))
    };
    // [a, τ^eps ζ^i]
    let d_mono = if eps == 0 {
        d_zeta_i
    } else {
        let first = mul(&table[1], &zeta_pow(i));
        let second = mul(&d_zeta_i, &p.tau());
        sum(first, sign(!odd_a, second))
    };
    let mono = p.element(b.degree, Poly::one(p.field));
    let c = p.element(0, b.coeff.clone());
    sum(mul(&dc, &mono), mul(&d_mono, &c))
}

fn bracket_term<'a>(a: &HHElement<'a>, b: &HHElement<'a>) -> Term<'a> {
    let p = a.presentation;
    let gens = [Gen::X, Gen::Tau, Gen::Zeta];
    let table_a: [Term<'a>; 3] = gens.map(|h| {
        // [a, h] = -(-1)^{(|a|-1)(|h|-1)} [h, a]
        let ha = derive(p, h.degree(), &generator_table(p, h), a);
        let odd = (a.degree + 1) * (h.degree() + 1) % 2 == 1;
        sign(!odd, ha)
    });
    derive(p, a.degree, &table_a, b)
}

/// `[a, b]`, extended from the generator brackets by antisymmetry and the
/// biderivation rule. A bracket of two degree-0 elements is the zero
/// element of degree 0.
pub fn bracket_normal_form<'a>(a: &HHElement<'a>, b: &HHElement<'a>) -> Result<HHElement<'a>> {
    same(a, b)?;
    let degree = (a.degree + b.degree).saturating_sub(1);
    Ok(bracket_term(a, b).unwrap_or_else(|| a.presentation.zero_element(degree)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::FieldSpec;
    use crate::monogenic::presentation;

    fn pres(field: FieldSpec, c: &[i64]) -> MonogenicPresentation {
        presentation(&Poly::from_i64s(field, c)).unwrap()
    }

    #[test]
    fn unit_and_tau_squared() {
        let f2 = FieldSpec::prime(2).unwrap();
        let p = pres(f2, &[0, 0, 1]);
        let t = p.tau();
        assert_eq!(cup_normal_form(&p.one(), &t).unwrap(), t);
        assert_eq!(cup_normal_form(&t, &t).unwrap(), p.zeta());
    }

    #[test]
    fn odd_squares_vanish_in_characteristic_zero() {
        let p = pres(FieldSpec::Rationals, &[0, 0, 0, 1]);
        let xt = cup_normal_form(&p.x(), &p.tau()).unwrap();
        assert!(cup_normal_form(&xt, &xt).unwrap().is_zero());
    }

    #[test]
    fn generator_brackets() {
        let p = pres(FieldSpec::Rationals, &[0, 0, -1, 1]);
        assert_eq!(bracket_normal_form(&p.tau(), &p.x()).unwrap(), p.element(0, p.q.clone()));
        assert!(bracket_normal_form(&p.zeta(), &p.zeta()).unwrap().is_zero());
        let zt = bracket_normal_form(&p.zeta(), &p.tau()).unwrap();
        assert_eq!(zt, p.element(2, Poly::from_i64s(FieldSpec::Rationals, &[-2])));
        assert!(bracket_normal_form(&p.x(), &p.one()).unwrap().is_zero());
    }

    #[test]
    fn tau_acts_as_derivative_times_q() {
        let p = pres(FieldSpec::Rationals, &[1, 0, 0, 0, 1]);
        let a = p.element(0, Poly::from_i64s(FieldSpec::Rationals, &[2, 1, 3]));
        let expected = p.element(0, a.coeff.derivative().mul(&p.q));
        assert_eq!(bracket_normal_form(&p.tau(), &a).unwrap(), expected);
    }

    #[test]
    fn mismatched_presentations() {
        let p = pres(FieldSpec::Rationals, &[0, 0, 1]);
        let r = pres(FieldSpec::Rationals, &[0, 0, 0, 1]);
        assert_eq!(cup_normal_form(&p.tau(), &r.tau()), Err(Error::PresentationMismatch));
        assert_eq!(bracket_normal_form(&p.tau(), &r.tau()), Err(Error::PresentationMismatch));
    }

    fn basis(p: &MonogenicPresentation, max_degree: usize) -> Vec<HHElement<'_>> {
        let mut out = Vec::new();
        for n in 0..=max_degree {
            for k in 0..p.hh_dim(n) {
                out.push(p.element(n, Poly::monomial(p.field.one(), k)));
            }
        }
        out
    }

    fn equal(a: &HHElement, b: &HHElement) -> bool {
        (a.is_zero() && b.is_zero()) || a == b
    }

    fn signed<'a>(negative: bool, e: HHElement<'a>) -> HHElement<'a> {
        if negative {
            e.neg()
        } else {
            e
        }
    }

    #[test]
    fn antisymmetry_and_biderivation_are_exact() {
        let f2 = FieldSpec::prime(2).unwrap();
        let f3 = FieldSpec::prime(3).unwrap();
        let cases = [
            (FieldSpec::Rationals, vec![0, 0, -1, 1]),
            (FieldSpec::Rationals, vec![0, 0, 0, 1]),
            (FieldSpec::Rationals, vec![0, 0, 1, -1, 1]),
            (f2, vec![0, 0, 1]),
            (f2, vec![1, 0, 1, 1]),
            (f3, vec![-1, 0, 0, 1]),
            (f3, vec![0, 0, 0, 1]),
        ];
        for (field, c) in cases {
            let p = pres(field, &c);
            let els = basis(&p, 5);
            for a in &els {
                for b in &els {
                    let ab = bracket_normal_form(a, b).unwrap();
                    let ba = bracket_normal_form(b, a).unwrap();
                    let odd = (a.degree + 1) * (b.degree + 1) % 2 == 1;
                    let rhs = signed(!odd, ba);
                    assert!(equal(&ab, &rhs), "antisymmetry fails for {a}, {b} over {c:?}");
                    for cc in &els {
                        if a.degree + b.degree + cc.degree > 5 {
                            continue;
                        }
                        let lhs = bracket_normal_form(a, &cup_normal_form(b, cc).unwrap()).unwrap();
                        let t1 = cup_normal_form(&ab, cc).unwrap();
                        let sgn = (a.degree + 1) * b.degree % 2 == 1;
                        let t2 = signed(sgn, cup_normal_form(b, &bracket_normal_form(a, cc).unwrap()).unwrap());
                        let both_zero_degree = t1.is_zero() && t2.is_zero();
                        let rhs = if both_zero_degree { t1 } else if t1.is_zero() { t2 } else if t2.is_zero() { t1 } else { t1.add(&t2).unwrap() };
                        assert!(equal(&lhs, &rhs), "biderivation fails for {a}, {b}, {cc} over {c:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn cup_is_graded_commutative() {
        for (field, c) in [(FieldSpec::Rationals, vec![0, 0, 0, 1]), (FieldSpec::prime(2).unwrap(), vec![0, 0, 1])] {
            let p = pres(field, &c);
            let els = basis(&p, 5);
            for a in &els {
                for b in &els {
                    let ab = cup_normal_form(a, b).unwrap();
                    let ba = cup_normal_form(b, a).unwrap();
                    assert!(equal(&ab, &signed(a.degree * b.degree % 2 == 1, ba)));
                }
            }
        }
    }
}
