//! `H^*(k[X]/(f), M)` for a bimodule given by the actions `XL`, `XR` of `x`.

use crate::algebra::Bimodule;
use crate::error::{Error, Result};
use crate::exactmath::{FieldSpec, Poly, SparseMatrix};

fn eval_matrix(f: &Poly, m: &SparseMatrix) -> SparseMatrix {
    let n = m.rows();
    let field = f.field();
    let mut acc = SparseMatrix::zeros(field, n, n);
    for c in f.coeffs().iter().rev() {
        acc = acc.mul(m).add(&SparseMatrix::identity(field, n).scale(c));
    }
    acc
}

fn check(f: &Poly, xl: &SparseMatrix, xr: &SparseMatrix) -> Result<()> {
    let n = xl.rows();
    if xl.cols() != n || xr.rows() != n || xr.cols() != n {
        return Err(Error::BadBimodule("action matrices must be square of equal size".into()));
    }
    if xl.field() != f.field() || xr.field() != f.field() {
        return Err(Error::FieldMismatch("actions and polynomial".into()));
    }
    if !xl.mul(xr).sub(&xr.mul(xl)).is_zero() {
        return Err(Error::BadBimodule("left and right actions of x do not commute".into()));
    }
    if !eval_matrix(f, xl).is_zero() || !eval_matrix(f, xr).is_zero() {
        return Err(Error::BadBimodule("f(x) does not act by zero".into()));
    }
    Ok(())
}

/// `Δ = XL - XR` and `Ē = Σ_i α_i Σ_{s+t+1=i} XL^s XR^t`.
fn delta_and_e(f: &Poly, xl: &SparseMatrix, xr: &SparseMatrix) -> (SparseMatrix, SparseMatrix) {
    let field = f.field();
    let n = xl.rows();
    let deg = f.degree().unwrap_or(0);
    let powers = |m: &SparseMatrix| {
        let mut out = vec![SparseMatrix::identity(field, n)];
        for k in 1..deg {
            out.push(out[k - 1].mul(m));
        }
        out
    };
    let (pl, pr) = (powers(xl), powers(xr));
    let mut e = SparseMatrix::zeros(field, n, n);
    for i in 1..=deg {
        let alpha = f.coeff(i);
        if alpha.is_zero() {
            continue;
        }
        for s in 0..i {
            e = e.axpy(&alpha, &pl[s].mul(&pr[i - 1 - s]));
        }
    }
    (xl.sub(xr), e)
}

/// Dimensions via the two-column collapse: `H^0 = ker Δ`, then `ē` on
/// `coker Δ -> ker Δ` gives `H^1 = ker ē`, `H^2 = coker ē`, and the rest
/// repeats with period two.
pub fn hh_with_coefficients(f: &Poly, xl: &SparseMatrix, xr: &SparseMatrix, p_max: usize) -> Result<Vec<usize>> {
    check(f, xl, xr)?;
    let n = xl.rows();
    let (delta, e) = delta_and_e(f, xl, xr);
    let rank_delta = delta.rank();
    let ker_delta = n - rank_delta;
    let coker_delta = n - rank_delta;
    let rank_e = e.rank();
    let h1 = coker_delta - rank_e;
    let h2 = ker_delta - rank_e;
    Ok((0..=p_max)
        .map(|p| match p {
            0 => ker_delta,
            p if p % 2 == 1 => h1,
            _ => h2,
        })
        .collect())
}

/// Cohomology of `M -Δ-> M -Ē-> M -Δ-> ...`, computed degree by degree.
pub fn periodic_complex_dims(f: &Poly, xl: &SparseMatrix, xr: &SparseMatrix, p_max: usize) -> Result<Vec<usize>> {
    check(f, xl, xr)?;
    let (delta, e) = delta_and_e(f, xl, xr);
    if !e.mul(&delta).is_zero() || !delta.mul(&e).is_zero() {
        return Err(Error::BadBimodule("periodic complex is not a complex".into()));
    }
    let d = |p: usize| if p % 2 == 0 { &delta } else { &e };
    Ok((0..=p_max)
        .map(|p| {
            let kernel = d(p).kernel().len();
            let image = if p == 0 { 0 } else { d(p - 1).column_space().dim() };
            kernel - image
        })
        .collect())
}

/// The actions of `x` on a bimodule over `make_monogenic(f)`.
pub fn x_actions(f: &Poly, m: &Bimodule) -> (SparseMatrix, SparseMatrix) {
    if m.left().len() >= 2 {
        (m.left()[1].clone(), m.right()[1].clone())
    } else {
        let c = -f.coeff(0);
        (m.left()[0].scale(&c), m.right()[0].scale(&c))
    }
}

/// The companion matrix of `f`, i.e. multiplication by `x` on `k[X]/(f)`.
pub fn companion(f: &Poly) -> SparseMatrix {
    let field: FieldSpec = f.field();
    let n = f.degree().unwrap_or(0);
    let mut triplets = Vec::new();
    for i in 0..n {
        if i + 1 < n {
            triplets.push((i + 1, i, field.one()));
        } else {
            for (r, c) in f.coeffs()[..n].iter().enumerate() {
                if !c.is_zero() {
                    triplets.push((r, i, -c));
                }
            }
        }
    }
    SparseMatrix::from_triplets(field, n, n, triplets)
}
