use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{FieldSpec, Poly};

/// The data describing `HH^*(k[X]/(f))` as a Gerstenhaber algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonogenicPresentation {
    pub f: Poly,
    /// `gcd(f, f')`, monic.
    pub d: Poly,
    /// `f = q d`.
    pub q: Poly,
    /// `τ² = u ζ`, reduced mod `d`.
    pub u: Poly,
    /// `[ζ, τ] = w ζ`: `w = f'/d` reduced mod `d`.
    pub w: Poly,
    /// `Σ α_i quot_f((s+1) x^s q) x^t` over `s + t + 1 = i`, reduced mod `d`.
    /// Equal to `w` for many `f` but not all, e.g. not for `(X-1)²(X+1)`.
    pub w_sum: Poly,
    pub field: FieldSpec,
}

/// Plain-string form used in reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationSummary {
    pub f: String,
    pub d: String,
    pub q: String,
    pub u: String,
    pub w: String,
    pub w_sum: String,
}

pub fn presentation(f: &Poly) -> Result<MonogenicPresentation> {
    let n = match f.degree() {
        Some(n) if n >= 1 && f.is_monic() => n,
        _ => return Err(Error::NotMonic(f.to_string())),
    };
    let field = f.field();
    let d = Poly::gcd_monic(f, &f.derivative())?;
    let q = f.quot(&d)?;

    let mut sum = Poly::zero(field);
    for i in 2..=n {
        let binom = field.from_i64((i * (i - 1) / 2) as i64);
        sum = sum.add(&Poly::monomial(&f.coeff(i) * &binom, i - 2));
    }
    let u = q.mul(&q).mul(&sum).rem(&d)?;

    let mut closed = Poly::zero(field);
    for i in 1..=n {
        let alpha = f.coeff(i);
        if alpha.is_zero() {
            continue;
        }
        for s in 0..i {
            let t = i - 1 - s;
            let inner = Poly::monomial(field.from_i64(s as i64 + 1), s).mul(&q);
            let term = inner.quot(f)?.mul(&Poly::monomial(alpha.clone(), t));
            closed = closed.add(&term);
        }
    }
    let w_sum = closed.rem(&d)?;
    let w = f.derivative().quot(&d)?.rem(&d)?;
    Ok(MonogenicPresentation { f: f.clone(), d, q, u, w, w_sum, field })
}

impl MonogenicPresentation {
    pub fn n(&self) -> usize {
        self.f.degree().unwrap_or(0)
    }

    /// `dim HH^n`: `deg f` in degree 0, `deg d` above.
    pub fn hh_dim(&self, n: usize) -> usize {
        if n == 0 {
            self.n()
        } else {
            self.d.degree().unwrap_or(0)
        }
    }

    pub fn summary(&self) -> PresentationSummary {
        PresentationSummary {
            f: self.f.to_string(),
            d: self.d.to_string(),
            q: self.q.to_string(),
            u: self.u.to_string(),
            w: self.w.to_string(),
            w_sum: self.w_sum.to_string(),
        }
    }
}

pub fn hh_dims(p: &MonogenicPresentation, p_max: usize) -> Vec<usize> {
    (0..=p_max).map(|n| p.hh_dim(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(field: FieldSpec, c: &[i64]) -> MonogenicPresentation {
        presentation(&Poly::from_i64s(field, c)).unwrap()
    }

    #[test]
    fn ground_field() {
        let p = pres(FieldSpec::Rationals, &[0, 1]);
        assert_eq!(p.d, Poly::one(FieldSpec::Rationals));
        assert_eq!(p.q, Poly::x(FieldSpec::Rationals));
        assert!(p.u.is_zero() && p.w.is_zero());
    }

    #[test]
    fn dual_numbers_in_characteristic_two() {
        let f2 = FieldSpec::prime(2).unwrap();
        let p = pres(f2, &[0, 0, 1]);
        assert_eq!(p.d, Poly::from_i64s(f2, &[0, 0, 1]));
        assert_eq!(p.q, Poly::one(f2));
        assert_eq!(p.u, Poly::one(f2));
        assert!(p.w.is_zero());
        assert_eq!(hh_dims(&p, 3), vec![2, 2, 2, 2]);
    }

    #[test]
    fn cubic_with_double_root() {
        let q = FieldSpec::Rationals;
        let p = pres(q, &[0, 0, -1, 1]);
        assert_eq!(p.d, Poly::x(q));
        assert_eq!(p.q, Poly::from_i64s(q, &[0, -1, 1]));
        assert!(p.u.is_zero());
        assert_eq!(p.w, Poly::from_i64s(q, &[-2]));
        assert_eq!(p.d.mul(&p.q), p.f);
    }

    #[test]
    fn w_is_the_derivative_quotient() {
        let q = FieldSpec::Rationals;
        let p = pres(q, &[1, -1, -1, 1]);
        assert_eq!(p.d, Poly::from_i64s(q, &[-1, 1]));
        assert_eq!(p.w, Poly::from_i64s(q, &[4]));
        assert_eq!(p.w_sum, Poly::from_i64s(q, &[6]));
        let p = pres(q, &[1, 0, -2, 0, 1]);
        assert_eq!(p.w, Poly::from_i64s(q, &[0, 4]));
        let p = pres(q, &[0, 0, 0, 1]);
        assert_eq!(p.w, p.w_sum);
    }

    #[test]
    fn closed_form_dims() {
        let q = FieldSpec::Rationals;
        assert_eq!(hh_dims(&pres(q, &[-1, 0, 0, 1]), 3), vec![3, 0, 0, 0]);
        assert_eq!(hh_dims(&pres(q, &[0, 0, 0, 1]), 3), vec![3, 2, 2, 2]);
    }

    #[test]
    fn cube_root_of_unity_in_characteristic_three() {
        let f3 = FieldSpec::prime(3).unwrap();
        let p = pres(f3, &[-1, 0, 0, 1]);
        assert_eq!(p.d, p.f);
        assert!(p.u.is_zero());
    }

    #[test]
    fn rejects_non_monic() {
        let f = Poly::from_i64s(FieldSpec::Rationals, &[1, 2]);
        assert!(matches!(presentation(&f), Err(Error::NotMonic(_))));
    }
}
