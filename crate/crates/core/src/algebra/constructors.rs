use std::collections::HashMap;

use crate::combinat::{Poset, QuiverPresentation};
use crate::error::{Error, Result};
use crate::exactmath::{dense_to_sparse, FieldSpec, Poly, Scalar, SparseVec};

use super::bimodule::LeftModule;
use super::structure::FinDimAlgebra;

/// Default bound on the number of surviving paths.
pub const PATH_CAP: usize = 10_000;

/// `k[X]/(f)` on the basis `1, x, ..., x^{N-1}`.
pub fn make_monogenic(f: &Poly) -> Result<FinDimAlgebra> {
    let n = match f.degree() {
        Some(d) if d >= 1 && f.is_monic() => d,
        _ => return Err(Error::NotMonic(f.to_string())),
    };
    let field = f.field();
    let labels = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    let mut powers: Vec<SparseVec> = Vec::with_capacity(2 * n - 1);
    for k in 0..2 * n - 1 {
        let r = Poly::monomial(field.one(), k).rem(f)?;
        powers.push(dense_to_sparse(r.coeffs()));
    }
    let mult = (0..n).map(|i| (0..n).map(|j| powers[i + j].clone()).collect()).collect();
    let alg = FinDimAlgebra::from_parts(field, labels, mult, vec![(0, field.one())]);
    let alg = alg.try_idempotents(Some(vec![0]));
    let homogeneous = f.coeffs()[..n].iter().all(Scalar::is_zero);
    Ok(alg.try_grading(homogeneous.then(|| (0..n as i64).collect())))
}

/// The path algebra of the quiver modulo the monomial relations. Paths are
/// composed right to left: `p * q` is "first `q`, then `p`".
pub fn make_path_algebra_quotient(pres: &QuiverPresentation) -> Result<FinDimAlgebra> {
    make_path_algebra_quotient_capped(pres, PATH_CAP)
}

pub fn make_path_algebra_quotient_capped(pres: &QuiverPresentation, cap: usize) -> Result<FinDimAlgebra> {
    let q = pres.quiver();
    let field = pres.field();
    let relations = pres.minimal_relations();
    let nv = q.vertices().len();
    let na = q.arrows().len();
    // paths[k] for k >= nv: arrow sequence in traversal order
    let mut paths: Vec<Vec<usize>> = (0..nv).map(|_| Vec::new()).collect();
    let ends_with_relation =
        |p: &[usize]| relations.iter().any(|r| r.len() <= p.len() && p.ends_with(r));
    let mut frontier: Vec<Vec<usize>> = (0..na).map(|a| vec![a]).collect();
    while !frontier.is_empty() {
        if paths.len() + frontier.len() > cap {
            return Err(Error::InfiniteDimensional { cap });
        }
        paths.extend(frontier.iter().cloned());
        let mut next = Vec::new();
        for p in &frontier {
            let end = q.target(*p.last().expect("nonempty path"));
            for a in 0..na {
                if q.source(a) == end {
                    let mut ext = p.clone();
                    ext.push(a);
                    if !ends_with_relation(&ext) {
                        next.push(ext);
                    }
                }
            }
        }
        frontier = next;
    }
    let n = paths.len();
    let index: HashMap<Vec<usize>, usize> =
        paths.iter().enumerate().skip(nv).map(|(i, p)| (p.clone(), i)).collect();
    let src = |i: usize| if i < nv { i } else { q.source(paths[i][0]) };
    let tgt = |i: usize| if i < nv { i } else { q.target(*paths[i].last().expect("arrow")) };
    let one = field.one();
    let mut mult = vec![vec![Vec::new(); n]; n];
    for (i, row) in mult.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            // b_i * b_j: traverse b_j, then b_i
            if tgt(j) != src(i) {
                continue;
            }
            let k = if i < nv {
                Some(j)
            } else if j < nv {
                Some(i)
            } else {
                let mut cat = paths[j].clone();
                cat.extend_from_slice(&paths[i]);
                index.get(&cat).copied()
            };
            if let Some(k) = k {
                *slot = vec![(k, one.clone())];
            }
        }
    }
    let labels = (0..n)
        .map(|i| if i < nv { format!("e{}", q.vertices()[i]) } else { q.path_label(&paths[i]) })
        .collect();
    let unit = (0..nv).map(|v| (v, one.clone())).collect();
    let alg = FinDimAlgebra::from_parts(field, labels, mult, unit);
    let weights = paths.iter().map(|p| p.len() as i64).collect();
    Ok(alg.try_idempotents(Some((0..nv).collect())).try_grading(Some(weights)))
}

/// The incidence algebra: basis `f[x,y]` for `x <= y`, with
/// `f[x,y] f[y,w] = f[x,w]`.
pub fn make_incidence(poset: &Poset, field: FieldSpec) -> FinDimAlgebra {
    let pairs = poset.intervals();
    let index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(k, p)| (*p, k)).collect();
    let one = field.one();
    let n = pairs.len();
    let mut mult = vec![vec![Vec::new(); n]; n];
    for (i, &(x, y)) in pairs.iter().enumerate() {
        for (j, &(z, w)) in pairs.iter().enumerate() {
            if y == z {
                mult[i][j] = vec![(index[&(x, w)], one.clone())];
            }
        }
    }
    let labels = pairs
        .iter()
        .map(|&(x, y)| format!("f[{},{}]", poset.elements()[x], poset.elements()[y]))
        .collect();
    let idem: Vec<usize> = (0..poset.len()).map(|x| index[&(x, x)]).collect();
    let unit = {
        let mut u: SparseVec = idem.iter().map(|&i| (i, one.clone())).collect();
        u.sort_by_key(|e| e.0);
        u
    };
    FinDimAlgebra::from_parts(field, labels, mult, unit).try_idempotents(Some(idem))
}

/// The truncated cycle algebra: crown quiver on `n` vertices modulo all paths
/// of length `l = nm - 1`.
pub fn make_truncated_cycle(n: usize, m: usize, field: FieldSpec) -> Result<FinDimAlgebra> {
    if n < 2 || m < 1 || n * m < 2 {
        return Err(Error::BadParameters(format!("truncated cycle with n = {n}, m = {m}")));
    }
    let l = n * m - 1;
    if l == 1 {
        let quiver = crate::combinat::Quiver::new((1..=n).map(|i| i.to_string()).collect(), Vec::new())?;
        return make_path_algebra_quotient(&QuiverPresentation::new(quiver, Vec::new(), field)?);
    }
    make_path_algebra_quotient(&QuiverPresentation::truncated_crown(n, l, field)?)
}

/// The one-point extension `(B M; 0 k)`. Basis: that of `B`, then `M`, then
/// the corner idempotent `e`, whose index is returned.
pub fn make_one_point_extension(b: &FinDimAlgebra, m: &LeftModule) -> (FinDimAlgebra, usize) {
    let field = b.field();
    let (nb, nm) = (b.dim(), m.dim());
    let n = nb + nm + 1;
    let e = nb + nm;
    let one = field.one();
    let mut mult = vec![vec![Vec::new(); n]; n];
    for i in 0..nb {
        for j in 0..nb {
            mult[i][j] = b.basis_product(i, j).clone();
        }
        for k in 0..nm {
            let v = m.act(i, &vec![(k, one.clone())]);
            mult[i][nb + k] = v.into_iter().map(|(p, c)| (nb + p, c)).collect();
        }
    }
    for k in 0..nm {
        mult[nb + k][e] = vec![(nb + k, one.clone())];
    }
    mult[e][e] = vec![(e, one.clone())];
    let mut labels: Vec<String> = b.labels().to_vec();
    labels.extend((0..nm).map(|k| format!("m{k}")));
    labels.push("e".into());
    let mut unit = b.unit_sparse().clone();
    unit.push((e, one));
    let alg = FinDimAlgebra::from_parts(field, labels, mult, unit);
    let idem = b.idempotents().map(|idem| {
        let mut v = idem.to_vec();
        v.push(e);
        v
    });
    (alg.try_idempotents(idem), e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{Arrow, Quiver};

    fn triangle() -> QuiverPresentation {
        let arrow = |n: &str, s: &str, t: &str| Arrow { name: n.into(), src: s.into(), tgt: t.into() };
        let q = Quiver::new(
            vec!["1".into(), "2".into(), "3".into()],
            vec![arrow("α", "1", "2"), arrow("β", "2", "3"), arrow("γ", "3", "1")],
        )
        .unwrap();
        QuiverPresentation::new(q, vec![vec!["α".into(), "β".into()]], FieldSpec::Rationals).unwrap()
    }

    #[test]
    fn monogenic_examples() {
        let f = FieldSpec::Rationals;
        assert_eq!(make_monogenic(&Poly::x(f)).unwrap().dim(), 1);
        let a = make_monogenic(&Poly::from_i64s(f, &[0, 0, 1])).unwrap();
        assert!(a.basis_product(1, 1).is_empty());
        let c = make_monogenic(&Poly::from_i64s(f, &[-1, 0, 0, 1])).unwrap();
        assert_eq!(c.basis_product(2, 2), &vec![(1, f.one())]);
        c.check_axioms().unwrap();
        assert!(make_monogenic(&Poly::from_i64s(f, &[0, 2])).is_err());
    }

    #[test]
    fn triangle_basis() {
        let a = make_path_algebra_quotient(&triangle()).unwrap();
        a.check_axioms().unwrap();
        let mut labels: Vec<&str> = a.labels().iter().map(String::as_str).collect();
        labels.sort_unstable();
        let mut expected = vec!["e1", "e2", "e3", "α", "β", "γ", "γβ", "αγ", "αγβ"];
        expected.sort_unstable();
        assert_eq!(labels, expected);
        assert_eq!(a.idempotents(), Some(&[0, 1, 2][..]));
    }

    #[test]
    fn cap_is_enforced() {
        let q = Quiver::crown(1);
        let pres = QuiverPresentation::new(q, Vec::new(), FieldSpec::Rationals).unwrap();
        assert_eq!(
            make_path_algebra_quotient_capped(&pres, 50),
            Err(Error::InfiniteDimensional { cap: 50 })
        );
    }

    #[test]
    fn crown_dimensions() {
        let f = FieldSpec::Rationals;
        assert_eq!(make_truncated_cycle(2, 2, f).unwrap().dim(), 6);
        assert_eq!(make_truncated_cycle(3, 1, f).unwrap().dim(), 6);
        assert_eq!(make_truncated_cycle(2, 1, f).unwrap().dim(), 2);
        assert!(make_truncated_cycle(1, 1, f).is_err());
    }

    #[test]
    fn incidence_examples() {
        let f = FieldSpec::Rationals;
        assert_eq!(make_incidence(&Poset::antichain(2), f).dim(), 2);
        let chain = make_incidence(&Poset::chain(2), f);
        assert_eq!(chain.dim(), 3);
        chain.check_axioms().unwrap();
    }

    #[test]
    fn one_point_extensions() {
        let f = FieldSpec::Rationals;
        let k = make_monogenic(&Poly::x(f)).unwrap();
        let simple = LeftModule::regular(&k);
        let (a, e) = make_one_point_extension(&k, &simple);
        assert_eq!((a.dim(), e), (3, 2));
        a.check_axioms().unwrap();
        assert!(a.idempotents().is_some());
    }
}
