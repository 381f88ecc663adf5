use crate::error::{Error, Result};
use crate::exactmath::{
    dense_to_sparse, sparse_axpy, sparse_from_entries, FieldSpec, SparseMatrix, SparseVec, Subspace,
};

use super::bimodule::{columns_to_matrix, Bimodule, LeftModule, SubBimodule};
use super::structure::FinDimAlgebra;

/// The center `{z : z a = a z}` as a subspace of the algebra.
pub fn center(alg: &FinDimAlgebra) -> SubBimodule {
    let n = alg.dim();
    let field = alg.field();
    let mut triplets = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let diff = sparse_axpy(alg.basis_product(j, i), &-field.one(), alg.basis_product(i, j));
            for (k, c) in diff {
                triplets.push((i * n + k, j, c));
            }
        }
    }
    let m = SparseMatrix::from_triplets(field, n * n, n, triplets);
    SubBimodule::from_space(Subspace::from_dense(field, n, &m.kernel()))
}

/// The two-sided ideal generated by the given elements.
pub fn ideal_generated_by(alg: &FinDimAlgebra, gens: &[SparseVec]) -> SubBimodule {
    let n = alg.dim();
    let mut vectors = Vec::new();
    for g in gens {
        for i in 0..n {
            let left = alg.mul(&alg.basis_vector(i), g);
            for j in 0..n {
                vectors.push(alg.mul(&left, &alg.basis_vector(j)));
            }
        }
    }
    SubBimodule::from_space(Subspace::from_sparse(alg.field(), n, vectors))
}

/// `A e A` for an idempotent `e`.
pub fn idempotent_ideal(alg: &FinDimAlgebra, e: &SparseVec) -> Result<SubBimodule> {
    if alg.mul(e, e) != *e {
        return Err(Error::NotIdempotent);
    }
    Ok(ideal_generated_by(alg, std::slice::from_ref(e)))
}

/// Checks that a subspace is a two-sided ideal.
pub fn as_ideal(alg: &FinDimAlgebra, space: Subspace) -> Result<SubBimodule> {
    SubBimodule::new(&Bimodule::regular(alg), space).map_err(|_| Error::NotAnIdeal)
}

/// `I^2` as a subspace of the algebra.
pub fn ideal_square(alg: &FinDimAlgebra, ideal: &SubBimodule) -> Subspace {
    let basis = ideal.space().basis_sparse();
    let products = basis.iter().flat_map(|x| basis.iter().map(move |y| alg.mul(x, y))).collect();
    Subspace::from_sparse(alg.field(), alg.dim(), products)
}

/// `B = A / I` on the classes of the non-pivot basis elements, and the
/// projection `phi` (rows: B basis, cols: A basis).
pub fn quotient_algebra(alg: &FinDimAlgebra, ideal: &SubBimodule) -> Result<(FinDimAlgebra, SparseMatrix)> {
    let space = ideal.space();
    as_ideal(alg, space.clone())?;
    let field = alg.field();
    let comp = space.complement_columns();
    let m = comp.len();
    let cols: Vec<SparseVec> = (0..alg.dim()).map(|i| space.quotient_coords(&alg.basis_vector(i))).collect();
    let phi = columns_to_matrix(field, m, &cols);
    let mult = comp
        .iter()
        .map(|&i| comp.iter().map(|&j| space.quotient_coords(alg.basis_product(i, j))).collect())
        .collect();
    let labels = comp.iter().map(|&i| alg.label(i).to_string()).collect();
    let unit = space.quotient_coords(alg.unit_sparse());
    let quotient = FinDimAlgebra::from_parts(field, labels, mult, unit);
    let idem = alg.idempotents().and_then(|idem| {
        let mut out = Vec::new();
        for &e in idem {
            match cols[e].as_slice() {
                [] => {}
                [(k, c)] if c.is_one() => out.push(*k),
                _ => return None,
            }
        }
        Some(out)
    });
    let monomial = space.basis_sparse().iter().all(|b| b.len() == 1);
    let weights = alg
        .grading()
        .filter(|_| monomial)
        .map(|w| comp.iter().map(|&c| w[c]).collect());
    Ok((quotient.try_idempotents(idem).try_grading(weights), phi))
}

/// `M ⊗_A N` presented as `M ⊗_k N` modulo the balancing relations.
#[derive(Clone, Debug)]
pub struct TensorOverA {
    dim_left: usize,
    dim_right: usize,
    relations: Subspace,
}

impl TensorOverA {
    /// `right_action[a]` is `m -> m b_a` on `M`, `left_action[a]` is
    /// `n -> b_a n` on `N`. The pure tensor `m_i ⊗ n_j` sits at `i * dim N + j`.
    pub fn new(field: FieldSpec, right_action: &[SparseMatrix], left_action: &[SparseMatrix], dm: usize, dn: usize) -> Self {
        let mut rels = Vec::new();
        for (ra, la) in right_action.iter().zip(left_action) {
            let ra_t = ra.transpose();
            let la_t = la.transpose();
            for i in 0..dm {
                for j in 0..dn {
                    let entries = ra_t
                        .row(i)
                        .iter()
                        .map(|(p, c)| (p * dn + j, c.clone()))
                        .chain(la_t.row(j).iter().map(|(q, c)| (i * dn + q, -c)));
                    let r = sparse_from_entries(entries);
                    if !r.is_empty() {
                        rels.push(r);
                    }
                }
            }
        }
        TensorOverA { dim_left: dm, dim_right: dn, relations: Subspace::from_sparse(field, dm * dn, rels) }
    }

    pub fn dim(&self) -> usize {
        self.dim_left * self.dim_right - self.relations.dim()
    }

    /// Coordinates of the class of `m_i ⊗ n_j`.
    pub fn class_of(&self, i: usize, j: usize) -> SparseVec {
        let field = self.relations.field();
        self.relations.quotient_coords(&vec![(i * self.dim_right + j, field.one())])
    }

    /// Pure tensors `(i, j)` whose classes form the chosen basis.
    pub fn basis_pairs(&self) -> Vec<(usize, usize)> {
        self.relations
            .complement_columns()
            .into_iter()
            .map(|c| (c / self.dim_right, c % self.dim_right))
            .collect()
    }

    /// Matrix of the map induced by a balanced bilinear `f(i, j)` with values
    /// in a space of dimension `target_dim`.
    pub fn induced_map(&self, field: FieldSpec, target_dim: usize, f: impl Fn(usize, usize) -> SparseVec) -> SparseMatrix {
        let cols: Vec<SparseVec> = self.basis_pairs().into_iter().map(|(i, j)| f(i, j)).collect();
        columns_to_matrix(field, target_dim, &cols)
    }
}

/// `M ⊗_A N` for a bimodule `M` (used on the right) and `N` (used on the left).
pub fn tensor_over_a(m: &Bimodule, n: &Bimodule) -> TensorOverA {
    TensorOverA::new(m.field(), m.right(), n.left(), m.dim(), n.dim())
}

/// `I ⊗_A I` and the multiplication map `mu: I ⊗_A I -> I` (rows: the echelon
/// basis of `I`).
pub fn multiplication_map(alg: &FinDimAlgebra, ideal: &SubBimodule) -> Result<(TensorOverA, SparseMatrix)> {
    let bimod = Bimodule::regular(alg).sub(ideal.space())?;
    let t = tensor_over_a(&bimod, &bimod);
    let basis = ideal.space().basis_sparse();
    let mu = t.induced_map(alg.field(), ideal.dim(), |i, j| {
        let prod = alg.mul(&basis[i], &basis[j]);
        ideal.space().coords_sparse(&prod).expect("ideal is closed under products")
    });
    Ok((t, mu))
}

/// `Ae` and `D(eA)` as left modules, and `eA` as a subspace.
#[derive(Clone, Debug)]
pub struct CornerModules {
    pub ae_space: Subspace,
    pub ea_space: Subspace,
    pub ae: LeftModule,
    pub d_ea: LeftModule,
}

pub fn corner_modules(alg: &FinDimAlgebra, e: &SparseVec) -> Result<CornerModules> {
    if alg.mul(e, e) != *e {
        return Err(Error::NotIdempotent);
    }
    let n = alg.dim();
    let field = alg.field();
    let ae_space = Subspace::from_sparse(field, n, (0..n).map(|i| alg.mul(&alg.basis_vector(i), e)).collect());
    let ea_space = Subspace::from_sparse(field, n, (0..n).map(|i| alg.mul(e, &alg.basis_vector(i))).collect());
    let ae = LeftModule::regular(alg).sub(&ae_space)?;
    let right_on_ea: Vec<SparseMatrix> = (0..n)
        .map(|a| {
            let cols: Vec<SparseVec> = ea_space
                .basis_sparse()
                .iter()
                .map(|x| ea_space.coords_sparse(&alg.mul(x, &alg.basis_vector(a))).expect("eA is a right ideal"))
                .collect();
            columns_to_matrix(field, ea_space.dim(), &cols)
        })
        .collect();
    let d_ea = LeftModule::from_parts(field, ea_space.dim(), right_on_ea.iter().map(SparseMatrix::transpose).collect());
    Ok(CornerModules { ae_space, ea_space, ae, d_ea })
}

/// The class of `0 -> I/I^2 -> A/I^2 -> B -> 0`.
#[derive(Clone, Debug)]
pub struct SingularExtension {
    /// `I/I^2` as a B-bimodule.
    pub module: Bimodule,
    /// `sigma(b_k)` in the basis of `A`.
    pub section: Vec<SparseVec>,
    /// `alpha(b_i, b_j) = sigma(b_i b_j) - sigma(b_i) sigma(b_j)` in `I/I^2`.
    pub values: Vec<Vec<SparseVec>>,
}

impl SingularExtension {
    pub fn is_cocycle(&self, b: &FinDimAlgebra) -> bool {
        let n = b.dim();
        let alpha = |x: &SparseVec, j: usize| -> SparseVec {
            let mut acc = Vec::new();
            for (i, c) in x {
                acc = sparse_axpy(&acc, c, &self.values[*i][j]);
            }
            acc
        };
        let alpha_r = |i: usize, y: &SparseVec| -> SparseVec {
            let mut acc = Vec::new();
            for (j, c) in y {
                acc = sparse_axpy(&acc, c, &self.values[i][*j]);
            }
            acc
        };
        let neg = -b.field().one();
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    let t1 = self.module.act_left(i, &self.values[j][k]);
                    let t2 = alpha(b.basis_product(i, j), k);
                    let t3 = alpha_r(i, b.basis_product(j, k));
                    let t4 = self.module.act_right(&self.values[i][j], k);
                    let s = sparse_axpy(&sparse_axpy(&sparse_axpy(&t1, &neg, &t2), &b.field().one(), &t3), &neg, &t4);
                    s.is_empty()
                })
            })
        })
    }
}

/// Lifts each B-basis vector along `phi`, preferring a single A-basis
/// element mapping onto it.
pub fn basis_section(phi: &SparseMatrix) -> Option<Vec<SparseVec>> {
    let field = phi.field();
    let t = phi.transpose();
    (0..phi.rows())
        .map(|k| {
            let target = vec![(k, field.one())];
            if let Some(c) = (0..phi.cols()).find(|&c| *t.row(c) == target) {
                return Some(vec![(c, field.one())]);
            }
            let mut b = vec![field.zero(); phi.rows()];
            b[k] = field.one();
            phi.solve(&b).map(|x| dense_to_sparse(&x))
        })
        .collect()
}

pub fn singular_extension_cocycle(
    alg: &FinDimAlgebra,
    ideal: &SubBimodule,
    quotient: &FinDimAlgebra,
    phi: &SparseMatrix,
) -> Result<SingularExtension> {
    let field = alg.field();
    let space = ideal.space();
    let section = basis_section(phi).ok_or_else(|| Error::BadParameters("projection is not surjective".into()))?;
    let in_ideal = |v: &SparseVec| space.coords_sparse(v).ok_or(Error::NotAnIdeal);
    let square: Vec<SparseVec> = ideal_square(alg, ideal)
        .basis_sparse()
        .iter()
        .map(in_ideal)
        .collect::<Result<_>>()?;
    let square_in_i = Subspace::from_sparse(field, space.dim(), square);
    let module_a = Bimodule::regular(alg).sub(space)?.quotient(&square_in_i)?;
    let lift = |x: &SparseVec| -> SparseVec {
        let mut acc = Vec::new();
        for (k, c) in x {
            acc = sparse_axpy(&acc, c, &section[*k]);
        }
        acc
    };
    let left = section.iter().map(|s| module_a.left_by(s)).collect();
    let right = section.iter().map(|s| module_a.right_by(s)).collect();
    let module = Bimodule::new(quotient, left, right)?;
    let n = quotient.dim();
    let mut values = vec![vec![Vec::new(); n]; n];
    for (i, row) in values.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            let lifted = lift(quotient.basis_product(i, j));
            let prod = alg.mul(&section[i], &section[j]);
            let diff = sparse_axpy(&lifted, &-field.one(), &prod);
            *slot = square_in_i.quotient_coords(&in_ideal(&diff)?);
        }
    }
    Ok(SingularExtension { module, section, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::constructors::{make_monogenic, make_path_algebra_quotient};
    use crate::combinat::{Arrow, Quiver, QuiverPresentation};
    use crate::exactmath::Poly;

    fn a2() -> FinDimAlgebra {
        let q = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![Arrow { name: "a".into(), src: "1".into(), tgt: "2".into() }],
        )
        .unwrap();
        make_path_algebra_quotient(&QuiverPresentation::new(q, vec![], FieldSpec::Rationals).unwrap()).unwrap()
    }

    #[test]
    fn center_of_a2_is_scalars() {
        assert_eq!(center(&a2()).dim(), 1);
    }

    #[test]
    fn ideal_of_dual_numbers() {
        let f = FieldSpec::Rationals;
        let a = make_monogenic(&Poly::from_i64s(f, &[0, 0, 1])).unwrap();
        let i = ideal_generated_by(&a, &[vec![(1, f.one())]]);
        assert_eq!(i.dim(), 1);
        let (b, phi) = quotient_algebra(&a, &i).unwrap();
        assert_eq!(b.dim(), 1);
        assert!(a.is_algebra_map(&b, &phi));
        let (t, mu) = multiplication_map(&a, &i).unwrap();
        assert_eq!(t.dim(), 1);
        assert!(mu.is_zero());
    }

    #[test]
    fn unit_ideal_gives_zero_quotient() {
        let a = a2();
        let i = idempotent_ideal(&a, a.unit_sparse()).unwrap();
        assert_eq!(i.dim(), 3);
        let (b, _) = quotient_algebra(&a, &i).unwrap();
        assert_eq!(b.dim(), 0);
    }

    #[test]
    fn non_idempotent_rejected() {
        let a = a2();
        assert_eq!(idempotent_ideal(&a, &vec![(2, FieldSpec::Rationals.one())]), Err(Error::NotIdempotent));
    }

    #[test]
    fn tensor_with_the_algebra_is_trivial() {
        let f = FieldSpec::Prime(3);
        let a = make_monogenic(&Poly::from_i64s(f, &[1, 1, 0, 1])).unwrap();
        let reg = Bimodule::regular(&a);
        assert_eq!(tensor_over_a(&reg, &reg).dim(), a.dim());
    }

    #[test]
    fn singular_extension_of_truncated_polynomials() {
        let f = FieldSpec::Rationals;
        let a = make_monogenic(&Poly::from_i64s(f, &[0, 0, 0, 0, 1])).unwrap();
        let i = ideal_generated_by(&a, &[vec![(2, f.one())]]);
        let (b, phi) = quotient_algebra(&a, &i).unwrap();
        let ext = singular_extension_cocycle(&a, &i, &b, &phi).unwrap();
        assert!(ext.is_cocycle(&b));
        assert_eq!(ext.module.dim(), 2);
        assert!(ext.values[0][0].is_empty() && ext.values[0][1].is_empty());
        // sigma(x * x) - sigma(x) sigma(x) = 0 - x^2
        assert_eq!(ext.values[1][1], vec![(0, f.from_i64(-1))]);
    }
}
