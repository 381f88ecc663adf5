//! Maps on cohomology: change of coefficients, pullback along algebra maps,
//! and connecting homomorphisms of short exact coefficient sequences.

use rayon::prelude::*;

use crate::algebra::{Bimodule, FinDimAlgebra};
use crate::error::{Error, Result};
use crate::exactmath::{sparse_axpy, Echelon, Scalar, SparseMatrix, SparseVec};

use super::complex::{Cochain, CohomologySpace, HochschildComplex};

/// A cochain complex together with chosen cohomology bases up to `p_max`.
#[derive(Clone, Debug)]
pub struct Cohomology {
    complex: HochschildComplex,
    spaces: Vec<CohomologySpace>,
}

impl Cohomology {
    pub fn new(alg: &FinDimAlgebra, m: &Bimodule, p_max: usize) -> Result<Self> {
        let complex = HochschildComplex::new(alg, m, p_max)?;
        let spaces = (0..=p_max).into_par_iter().map(|p| CohomologySpace::new(&complex, p)).collect();
        Ok(Cohomology { complex, spaces })
    }

    pub fn complex(&self) -> &HochschildComplex {
        &self.complex
    }

    pub fn p_max(&self) -> usize {
        self.spaces.len() - 1
    }

    pub fn space(&self, p: usize) -> &CohomologySpace {
        &self.spaces[p]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(CohomologySpace::dim).collect()
    }

    /// Matrix whose columns are the class coordinates of the given cocycles.
    pub fn classes(&self, p: usize, cocycles: &[Cochain]) -> Result<SparseMatrix> {
        let space = &self.spaces[p];
        let cols = cocycles.iter().map(|c| space.class_coordinates(c)).collect::<Result<Vec<_>>>()?;
        Ok(SparseMatrix::from_columns(self.complex.field(), space.dim(), &cols))
    }
}

/// A matrix `L` with `L m = 1` for a matrix of full column rank.
pub fn left_inverse(m: &SparseMatrix) -> Result<SparseMatrix> {
    let field = m.field();
    let n = m.cols();
    let mut ech = Echelon::new(field, n);
    let mut chosen = Vec::with_capacity(n);
    for (r, row) in m.row_data().iter().enumerate() {
        if ech.insert(row.clone()) {
            chosen.push(r);
        }
    }
    if chosen.len() != n {
        return Err(Error::DimensionMismatch("map is not injective".into()));
    }
    let square = SparseMatrix::from_sparse_rows(field, n, chosen.iter().map(|&r| m.row(r).clone()).collect());
    let mut inv_cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![field.zero(); n];
        e[j] = field.one();
        inv_cols.push(square.solve(&e).expect("chosen rows are independent"));
    }
    // L = S^{-1} P, with P selecting the chosen rows
    let mut triplets = Vec::new();
    for (j, col) in inv_cols.iter().enumerate() {
        for (i, c) in col.iter().enumerate() {
            if !c.is_zero() {
                triplets.push((i, chosen[j], c.clone()));
            }
        }
    }
    Ok(SparseMatrix::from_triplets(field, n, m.rows(), triplets))
}

/// Applies a linear map to every value of a cochain.
pub fn push_values(source: &HochschildComplex, target: &HochschildComplex, f: &Cochain, theta: &SparseMatrix) -> Cochain {
    target.cochain_from_fn(f.degree, |chain| theta.mul_sparse_vec(&source.value(f, chain)))
}

/// `H^p(A, M) -> H^p(A, M')` induced by a bimodule map `θ`, in the chosen bases.
pub fn induced_coefficient_map(
    alg: &FinDimAlgebra,
    m: &Bimodule,
    m2: &Bimodule,
    theta: &SparseMatrix,
    p: usize,
) -> Result<SparseMatrix> {
    if !m.is_bimodule_map(m2, theta) {
        return Err(Error::NotABimoduleMap);
    }
    let src = Cohomology::new(alg, m, p)?;
    let tgt = Cohomology::new(alg, m2, p)?;
    coefficient_map(&src, &tgt, theta, p)
}

/// Same as `induced_coefficient_map`, on prepared cohomology contexts.
pub fn coefficient_map(src: &Cohomology, tgt: &Cohomology, theta: &SparseMatrix, p: usize) -> Result<SparseMatrix> {
    let images: Vec<Cochain> = src
        .space(p)
        .representatives()
        .iter()
        .map(|f| push_values(src.complex(), tgt.complex(), f, theta))
        .collect();
    tgt.classes(p, &images)
}

/// Pulls back a cochain over `B` along `φ: A -> B`, into the complex of
/// `A` with coefficients restricted along `φ`.
pub fn pullback_cochain(
    source: &HochschildComplex,
    target: &HochschildComplex,
    phi: &SparseMatrix,
    f: &Cochain,
) -> Cochain {
    let sshape = source.shape();
    let tshape = target.shape();
    // image of each R-element of A, in R-coordinates of B
    let images: Vec<SparseVec> =
        (0..tshape.len()).map(|r| sshape.project(&phi.mul_sparse_vec(tshape.element(r)))).collect();
    let p = f.degree;
    target.cochain_from_fn(p, |chain| {
        if p == 0 {
            // the corner of the result picks out e_v m e_v
            return sum_vertex_values(source, f);
        }
        let mut partial: Vec<(Vec<u32>, Scalar)> = vec![(Vec::new(), source.field().one())];
        for &a in chain {
            let mut next = Vec::new();
            for (prefix, c) in &partial {
                for (r, k) in &images[a as usize] {
                    let mut ext = prefix.clone();
                    ext.push(*r as u32);
                    next.push((ext, c * k));
                }
            }
            partial = next;
            if partial.is_empty() {
                return Vec::new();
            }
        }
        let mut out: SparseVec = Vec::new();
        for (args, c) in partial {
            out = sparse_axpy(&out, &c, &source.value(f, &args));
        }
        out
    })
}

fn sum_vertex_values(source: &HochschildComplex, f: &Cochain) -> SparseVec {
    let mut out: SparseVec = Vec::new();
    for w in 0..source.shape().vertices() {
        out = sparse_axpy(&out, &source.field().one(), &source.value(f, &[w as u32]));
    }
    out
}

/// Checks that `φ` sends the marked subalgebra of `A` into that of `B`,
/// which the relative pullback needs.
pub fn check_pullback_compatible(a: &FinDimAlgebra, b: &FinDimAlgebra, phi: &SparseMatrix) -> Result<()> {
    let bshape = super::complex::BarShape::new(b);
    let units: Vec<SparseVec> = match a.idempotents() {
        Some(idem) => idem.iter().map(|&i| a.basis_vector(i)).collect(),
        None => vec![a.unit_sparse().clone()],
    };
    for e in units {
        if !bshape.project(&phi.mul_sparse_vec(&e)).is_empty() {
            return Err(Error::BadParameters("algebra map does not preserve the marked idempotents".into()));
        }
    }
    Ok(())
}

/// `H^p(B, M) -> H^p(A, φ^* M)` for an algebra map `φ: A -> B`.
pub fn pullback_map(a: &FinDimAlgebra, b: &FinDimAlgebra, phi: &SparseMatrix, m: &Bimodule, p: usize) -> Result<SparseMatrix> {
    if !a.is_algebra_map(b, phi) {
        return Err(Error::BadParameters("not an algebra map".into()));
    }
    check_pullback_compatible(a, b, phi)?;
    let src = Cohomology::new(b, m, p)?;
    let tgt = Cohomology::new(a, &m.pullback(phi), p)?;
    pullback_on(&src, &tgt, phi, p)
}

/// Same as `pullback_map`, on prepared contexts.
pub fn pullback_on(src: &Cohomology, tgt: &Cohomology, phi: &SparseMatrix, p: usize) -> Result<SparseMatrix> {
    let images: Vec<Cochain> = src
        .space(p)
        .representatives()
        .iter()
        .map(|f| pullback_cochain(src.complex(), tgt.complex(), phi, f))
        .collect();
    tgt.classes(p, &images)
}

/// Section of a surjective bimodule map `π: M -> M''`, chosen corner by
/// corner so that composing with it keeps cochains relative.
fn corner_section(cx_m: &HochschildComplex, m: &Bimodule, pi: &SparseMatrix, cx_q: &HochschildComplex) -> Result<Vec<SparseVec>> {
    let field = pi.field();
    let qdim = pi.rows();
    let shape = cx_m.shape();
    let mut out = Vec::with_capacity(qdim);
    for j in 0..qdim {
        let mut e = vec![field.zero(); qdim];
        e[j] = field.one();
        let pre = pi.solve(&e).ok_or_else(|| Error::DimensionMismatch("coefficient map is not onto".into()))?;
        let pre = crate::exactmath::dense_to_sparse(&pre);
        out.push(pre);
    }
    if !shape.is_marked() {
        return Ok(out);
    }
    // project each preimage of an adapted basis vector of M'' to its corner
    let nv = shape.vertices();
    let mut adapted = vec![Vec::new(); qdim];
    for u in 0..nv {
        for v in 0..nv {
            let (off, d) = cx_q.module().block(u, v);
            let lu = &m.left()[shape.idempotent(u).expect("marked")];
            let rv = &m.right()[shape.idempotent(v).expect("marked")];
            for k in 0..d {
                let target_new = vec![(off + k, field.one())];
                let target = cx_q.module().to_old(&target_new);
                let mut pre: SparseVec = Vec::new();
                for (i, c) in &target {
                    pre = sparse_axpy(&pre, c, &out[*i]);
                }
                adapted[off + k] = lu.mul(rv).mul_sparse_vec(&pre);
            }
        }
    }
    // back to the original basis of M''
    let mut section = Vec::with_capacity(qdim);
    for j in 0..qdim {
        let new = cx_q.module().to_new(&vec![(j, field.one())]);
        let mut v: SparseVec = Vec::new();
        for (k, c) in new {
            v = sparse_axpy(&v, &c, &adapted[k]);
        }
        section.push(v);
    }
    Ok(section)
}

/// The connecting map `H^p(A, M'') -> H^{p+1}(A, M')` of
/// `0 -> M' -ι-> M -π-> M'' -> 0`.
pub struct ConnectingMap<'a> {
    pub sub: &'a Cohomology,
    pub mid: &'a Cohomology,
    pub quotient: &'a Cohomology,
    pub mid_module: &'a Bimodule,
    pub iota: &'a SparseMatrix,
    pub pi: &'a SparseMatrix,
}

impl ConnectingMap<'_> {
    pub fn matrix(&self, p: usize) -> Result<SparseMatrix> {
        let section = corner_section(self.mid.complex(), self.mid_module, self.pi, self.quotient.complex())?;
        let field = self.pi.field();
        let s = {
            let cols: Vec<Vec<Scalar>> = section
                .iter()
                .map(|v| crate::exactmath::sparse_to_dense(field, v, self.pi.cols()))
                .collect();
            SparseMatrix::from_columns(field, self.pi.cols(), &cols)
        };
        let back = left_inverse(self.iota)?;
        let qcx = self.quotient.complex();
        let mcx = self.mid.complex();
        let images: Vec<Cochain> = self
            .quotient
            .space(p)
            .representatives()
            .iter()
            .map(|f| {
                let lifted = push_values(qcx, mcx, f, &s);
                let d = mcx.apply_differential(&lifted);
                push_values(mcx, self.sub.complex(), &d, &back)
            })
            .collect();
        self.sub.classes(p + 1, &images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_monogenic, quotient_algebra};
    use crate::exactmath::{FieldSpec, Poly};

    #[test]
    fn identity_and_zero_maps() {
        let q = FieldSpec::Rationals;
        let a = make_monogenic(&Poly::from_i64s(q, &[0, 0, 0, 1])).unwrap();
        let m = Bimodule::regular(&a);
        let id = SparseMatrix::identity(q, 3);
        let one = induced_coefficient_map(&a, &m, &m, &id, 1).unwrap();
        assert_eq!(one, SparseMatrix::identity(q, 2));
        let zero = induced_coefficient_map(&a, &m, &m, &SparseMatrix::zeros(q, 3, 3), 1).unwrap();
        assert!(zero.is_zero());
        let bad = SparseMatrix::from_i64(q, &[vec![0, 1, 0], vec![0, 0, 0], vec![0, 0, 0]]);
        assert_eq!(induced_coefficient_map(&a, &m, &m, &bad, 0), Err(Error::NotABimoduleMap));
    }

    #[test]
    fn left_inverse_of_injection() {
        let q = FieldSpec::Prime(3);
        let m = SparseMatrix::from_i64(q, &[vec![1, 0], vec![1, 1], vec![0, 2]]);
        let l = left_inverse(&m).unwrap();
        assert_eq!(l.mul(&m), SparseMatrix::identity(q, 2));
    }

    #[test]
    fn pullback_to_dual_numbers_from_truncation() {
        let q = FieldSpec::Rationals;
        let a = make_monogenic(&Poly::from_i64s(q, &[0, 0, 0, 1])).unwrap();
        let x2 = vec![(2usize, q.one())];
        let ideal = crate::algebra::ideal_generated_by(&a, &[x2]);
        let (b, phi) = quotient_algebra(&a, &ideal).unwrap();
        assert_eq!(b.dim(), 2);
        let m = Bimodule::regular(&b);
        // H^0(B, B) -> H^0(A, B) is an isomorphism for a surjection
        let h0 = pullback_map(&a, &b, &phi, &m, 0).unwrap();
        assert_eq!(h0.rank(), 2);
    }
}
