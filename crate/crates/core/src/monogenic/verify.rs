//! Cross-checks of the closed form against the cochain oracle.

use serde::Serialize;

use crate::algebra::{make_monogenic, Bimodule, FinDimAlgebra};
use crate::cochain::{cup, element_cochain, gerstenhaber_bracket, hh_dims as oracle_dims, left_multiply, Cochain, HochschildComplex};
use crate::error::Result;
use crate::exactmath::{dense_to_sparse, Poly, SparseVec};

use super::coefficients::{companion, periodic_complex_dims};
use super::presentation::{hh_dims, presentation, MonogenicPresentation, PresentationSummary};

/// Which sign of a generator relation the cochain oracle realizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    /// Both signs hold (the two candidates agree up to coboundary).
    Both,
    /// The relation holds as stated.
    AsStated,
    /// The relation holds with the opposite sign.
    Opposite,
    Neither,
}

impl Orientation {
    fn from_checks(as_stated: bool, opposite: bool) -> Self {
        match (as_stated, opposite) {
            (true, true) => Orientation::Both,
            (true, false) => Orientation::AsStated,
            (false, true) => Orientation::Opposite,
            (false, false) => Orientation::Neither,
        }
    }

    pub fn holds(self) -> bool {
        self != Orientation::Neither
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub presentation: PresentationSummary,
    pub closed_form: Vec<usize>,
    pub oracle: Vec<usize>,
    pub periodic: Vec<usize>,
    pub dims_agree: bool,
    /// `t ⌣ t - u z` is a coboundary.
    pub ring_relation: bool,
    /// `u ≡ 0 mod d`, asserted only away from characteristic two.
    pub u_vanishes: Option<bool>,
    /// `[t, x] = q` against `[t, x] = -q`.
    pub tau_x: Orientation,
    /// `[z, t] - w z` against `[z, t] + w z` up to coboundary.
    pub zeta_tau: Orientation,
    pub zeta_zeta_vanishes: bool,
    pub tau_tau_vanishes: bool,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.dims_agree
            && self.ring_relation
            && self.u_vanishes != Some(false)
            && self.tau_x.holds()
            && self.zeta_tau.holds()
            && self.zeta_zeta_vanishes
            && self.tau_tau_vanishes
    }
}

fn poly_vec(p: &Poly) -> SparseVec {
    dense_to_sparse(p.coeffs())
}

/// `x^i` for the basis element behind an index of the relative complex.
fn exponent(cx: &HochschildComplex, r: u32) -> usize {
    cx.shape().element(r as usize)[0].0
}

/// The derivation with `t(x) = q`.
pub fn tau_cochain(pres: &MonogenicPresentation, cx: &HochschildComplex) -> Cochain {
    let f = &pres.f;
    let field = pres.field;
    cx.cochain_from_fn(1, |chain| {
        let i = exponent(cx, chain[0]);
        let v = Poly::monomial(field.from_i64(i as i64), i - 1).mul(&pres.q);
        poly_vec(&v.rem(f).expect("monic"))
    })
}

/// The periodicity cocycle `z(x^i, x^j) = quot_f(X^{i+j})`.
pub fn zeta_cochain(pres: &MonogenicPresentation, cx: &HochschildComplex) -> Cochain {
    let field = pres.field;
    cx.cochain_from_fn(2, |chain| {
        let s = exponent(cx, chain[0]) + exponent(cx, chain[1]);
        poly_vec(&Poly::monomial(field.one(), s).quot(&pres.f).expect("monic"))
    })
}

fn cobounds(cx: &HochschildComplex, c: &Cochain) -> Result<bool> {
    cx.is_coboundary(c)
}

pub fn verify_presentation_in_oracle(f: &Poly, p_max: usize) -> Result<OracleReport> {
    let pres = presentation(f)?;
    let alg: FinDimAlgebra = make_monogenic(f)?;
    let closed_form = hh_dims(&pres, p_max);
    let oracle = oracle_dims(&alg, p_max)?;
    let x = companion(f);
    let periodic = periodic_complex_dims(f, &x, &x, p_max)?;
    let dims_agree = closed_form == oracle && oracle == periodic;

    let cx = HochschildComplex::new(&alg, &Bimodule::regular(&alg), 3)?;
    let t = tau_cochain(&pres, &cx);
    let z = zeta_cochain(&pres, &cx);
    let uz = left_multiply(&alg, &cx, &poly_vec(&pres.u), &z);
    let ring_relation = cobounds(&cx, &cup(&alg, &cx, &t, &t).sub(&uz))?;
    let u_vanishes = (pres.field.characteristic() != 2).then(|| pres.u.is_zero());

    let x_el = element_cochain(&cx, &poly_vec(&Poly::x(pres.field).rem(f)?));
    let q = element_cochain(&cx, &poly_vec(&pres.q.rem(f)?));
    let tx = gerstenhaber_bracket(&cx, &t, &x_el);
    let tau_x = Orientation::from_checks(tx.sub(&q).is_zero(), tx.add(&q).is_zero());

    let wz = left_multiply(&alg, &cx, &poly_vec(&pres.w), &z);
    let zt = gerstenhaber_bracket(&cx, &z, &t);
    let zeta_tau = Orientation::from_checks(cobounds(&cx, &zt.sub(&wz))?, cobounds(&cx, &zt.add(&wz))?);
    let zeta_zeta_vanishes = cobounds(&cx, &gerstenhaber_bracket(&cx, &z, &z))?;
    let tau_tau_vanishes = cobounds(&cx, &gerstenhaber_bracket(&cx, &t, &t))?;

    Ok(OracleReport {
        presentation: pres.summary(),
        closed_form,
        oracle,
        periodic,
        dims_agree,
        ring_relation,
        u_vanishes,
        tau_x,
        zeta_tau,
        zeta_zeta_vanishes,
        tau_tau_vanishes,
    })
}
