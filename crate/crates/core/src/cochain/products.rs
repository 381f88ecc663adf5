//! Cup product and Gerstenhaber bracket on relative cochains with
//! coefficients in the algebra itself.
//!
//! Relative cochains are the normalized cochains that are `E`-linear and
//! vanish on `E`; both operations preserve that subcomplex, so they are
//! evaluated there directly.

use crate::algebra::FinDimAlgebra;
use crate::exactmath::{sparse_axpy, SparseVec};

use super::complex::{Cochain, HochschildComplex};

/// Value of `f` on `chain`, where an empty chain stands for the vertex `v`.
fn eval(cx: &HochschildComplex, f: &Cochain, chain: &[u32], v: usize) -> SparseVec {
    if f.degree == 0 {
        cx.value(f, &[v as u32])
    } else {
        cx.value(f, chain)
    }
}

fn left_vertex(cx: &HochschildComplex, chain: &[u32], p: usize) -> usize {
    cx.corner_of(p, chain).0
}

fn right_vertex(cx: &HochschildComplex, chain: &[u32], p: usize) -> usize {
    cx.corner_of(p, chain).1
}

/// `(f ⌣ g)(a_1, ..., a_{p+q}) = f(a_1, ..., a_p) g(a_{p+1}, ..., a_{p+q})`.
pub fn cup(alg: &FinDimAlgebra, cx: &HochschildComplex, f: &Cochain, g: &Cochain) -> Cochain {
    let (p, q) = (f.degree, g.degree);
    cx.cochain_from_fn(p + q, |chain| {
        let (head, tail) = if p + q == 0 { (chain, chain) } else { chain.split_at(p) };
        let (hv, tv) = if p + q == 0 {
            (chain[0] as usize, chain[0] as usize)
        } else if p == 0 {
            let v = left_vertex(cx, chain, p + q);
            (v, v)
        } else {
            let v = right_vertex(cx, head, p);
            (v, v)
        };
        let a = eval(cx, f, head, hv);
        if a.is_empty() {
            return Vec::new();
        }
        let b = eval(cx, g, tail, tv);
        alg.mul(&a, &b)
    })
}

/// `f ∘_i g` for `1 <= i <= |f|`.
pub fn compose_at(cx: &HochschildComplex, f: &Cochain, g: &Cochain, i: usize) -> Cochain {
    let (p, q) = (f.degree, g.degree);
    assert!(i >= 1 && i <= p, "insertion slot out of range");
    let n = p + q - 1;
    let shape = cx.shape();
    cx.cochain_from_fn(n, |chain| {
        let pos = i - 1;
        let inner: SparseVec = if q == 0 {
            let v = if n == 0 {
                chain[0] as usize
            } else if pos < chain.len() {
                shape.corner(chain[pos] as usize).0
            } else {
                shape.corner(chain[pos - 1] as usize).1
            };
            cx.value(g, &[v as u32])
        } else {
            cx.value(g, &chain[pos..pos + q])
        };
        let mut out: SparseVec = Vec::new();
        let rest_start = if q == 0 { pos } else { pos + q };
        for (r, c) in shape.project(&inner) {
            let mut args: Vec<u32> = Vec::with_capacity(p);
            if n > 0 {
                args.extend_from_slice(&chain[..pos]);
            }
            args.push(r as u32);
            if n > 0 {
                args.extend_from_slice(&chain[rest_start..]);
            }
            out = sparse_axpy(&out, &c, &cx.value(f, &args));
        }
        out
    })
}

/// `f ∘ g = Σ_i (-1)^{(i-1)(|g|-1)} f ∘_i g`.
pub fn compose(cx: &HochschildComplex, f: &Cochain, g: &Cochain) -> Cochain {
    let field = cx.field();
    let degree = (f.degree + g.degree).saturating_sub(1);
    let mut acc = Cochain::zero(field, degree, cx.dim(degree));
    if f.degree == 0 {
        return acc;
    }
    for i in 1..=f.degree {
        let term = compose_at(cx, f, g, i);
        let odd = (i - 1) * (g.degree + 1) % 2 == 1;
        acc = if odd { acc.sub(&term) } else { acc.add(&term) };
    }
    acc
}

/// `[f, g] = f ∘ g - (-1)^{(|f|-1)(|g|-1)} g ∘ f`.
pub fn gerstenhaber_bracket(cx: &HochschildComplex, f: &Cochain, g: &Cochain) -> Cochain {
    let degree = (f.degree + g.degree).saturating_sub(1);
    if f.degree + g.degree == 0 {
        return Cochain::zero(cx.field(), 0, cx.dim(0));
    }
    let fg = compose(cx, f, g);
    let gf = compose(cx, g, f);
    let sign_odd = f.degree % 2 == 0 && g.degree % 2 == 0;
    let out = if sign_odd { fg.add(&gf) } else { fg.sub(&gf) };
    debug_assert_eq!(out.degree, degree);
    out
}

/// The 0-cochain given by an element of the algebra, kept on the diagonal
/// corners.
pub fn element_cochain(cx: &HochschildComplex, a: &SparseVec) -> Cochain {
    cx.cochain_from_fn(0, |_| a.clone())
}

/// Scales a cochain pointwise by an algebra element on the left.
pub fn left_multiply(alg: &FinDimAlgebra, cx: &HochschildComplex, a: &SparseVec, f: &Cochain) -> Cochain {
    cup(alg, cx, &element_cochain(cx, a), f)
}
