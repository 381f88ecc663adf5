use crate::error::{Error, Result};
use crate::exactmath::{
    sparse_axpy, sparse_from_entries, FieldSpec, Scalar, SparseMatrix, SparseVec, Subspace,
};

use super::structure::FinDimAlgebra;

/// A finite-dimensional bimodule: one left and one right action matrix per
/// basis element of the algebra. `left[i] * m = b_i m`, `right[i] * m = m b_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    field: FieldSpec,
    dim: usize,
    left: Vec<SparseMatrix>,
    right: Vec<SparseMatrix>,
    grading: Option<Vec<i64>>,
}

/// A finite-dimensional left module: `action[i] * m = b_i m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftModule {
    field: FieldSpec,
    dim: usize,
    action: Vec<SparseMatrix>,
}

/// A subspace of a bimodule closed under both actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubBimodule {
    space: Subspace,
}

fn combine_actions(field: FieldSpec, dim: usize, mats: &[SparseMatrix], a: &SparseVec) -> SparseMatrix {
    let mut acc = SparseMatrix::zeros(field, dim, dim);
    for (i, c) in a {
        acc = acc.axpy(c, &mats[*i]);
    }
    acc
}

fn check_module_law(
    alg: &FinDimAlgebra,
    dim: usize,
    mats: &[SparseMatrix],
    opposite: bool,
    side: &str,
) -> Result<()> {
    let field = alg.field();
    if mats.len() != alg.dim() || mats.iter().any(|m| m.rows() != dim || m.cols() != dim) {
        return Err(Error::BadBimodule(format!("{side} action has the wrong shape")));
    }
    if combine_actions(field, dim, mats, alg.unit_sparse()) != SparseMatrix::identity(field, dim) {
        return Err(Error::BadBimodule(format!("unit does not act as the identity on the {side}")));
    }
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let prod = combine_actions(field, dim, mats, alg.basis_product(i, j));
            let composed = if opposite { mats[j].mul(&mats[i]) } else { mats[i].mul(&mats[j]) };
            if prod != composed {
                return Err(Error::BadBimodule(format!(
                    "{side} action fails on ({}, {})",
                    alg.label(i),
                    alg.label(j)
                )));
            }
        }
    }
    Ok(())
}

impl Bimodule {
    pub fn new(alg: &FinDimAlgebra, left: Vec<SparseMatrix>, right: Vec<SparseMatrix>) -> Result<Self> {
        let dim = left.first().map_or(0, SparseMatrix::rows);
        check_module_law(alg, dim, &left, false, "left")?;
        check_module_law(alg, dim, &right, true, "right")?;
        for l in &left {
            for r in &right {
                if l.mul(r) != r.mul(l) {
                    return Err(Error::BadBimodule("left and right actions do not commute".into()));
                }
            }
        }
        Ok(Bimodule { field: alg.field(), dim, left, right, grading: None })
    }

    pub fn check(&self, alg: &FinDimAlgebra) -> Result<()> {
        Bimodule::new(alg, self.left.clone(), self.right.clone()).map(|_| ())
    }

    /// The algebra as a bimodule over itself.
    pub fn regular(alg: &FinDimAlgebra) -> Self {
        let n = alg.dim();
        Bimodule {
            field: alg.field(),
            dim: n,
            left: (0..n).map(|i| alg.left_mult_matrix(i)).collect(),
            right: (0..n).map(|i| alg.right_mult_matrix(i)).collect(),
            grading: alg.grading().map(<[i64]>::to_vec),
        }
    }

    /// The zero bimodule.
    pub fn zero(alg: &FinDimAlgebra) -> Self {
        let f = alg.field();
        let z = SparseMatrix::zeros(f, 0, 0);
        Bimodule { field: f, dim: 0, left: vec![z.clone(); alg.dim()], right: vec![z; alg.dim()], grading: None }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left(&self) -> &[SparseMatrix] {
        &self.left
    }

    pub fn right(&self) -> &[SparseMatrix] {
        &self.right
    }

    pub fn grading(&self) -> Option<&[i64]> {
        self.grading.as_deref()
    }

    pub fn with_grading(mut self, weights: Option<Vec<i64>>) -> Self {
        self.grading = weights;
        self
    }

    pub fn act_left(&self, i: usize, m: &SparseVec) -> SparseVec {
        self.left[i].mul_sparse_vec(m)
    }

    pub fn act_right(&self, m: &SparseVec, i: usize) -> SparseVec {
        self.right[i].mul_sparse_vec(m)
    }

    pub fn left_by(&self, a: &SparseVec) -> SparseMatrix {
        combine_actions(self.field, self.dim, &self.left, a)
    }

    pub fn right_by(&self, a: &SparseVec) -> SparseMatrix {
        combine_actions(self.field, self.dim, &self.right, a)
    }

    /// Restriction of scalars along `phi: A -> B` (rows: B basis, cols: A basis).
    pub fn pullback(&self, phi: &SparseMatrix) -> Bimodule {
        let t = phi.transpose();
        let left = (0..phi.cols()).map(|i| self.left_by(t.row(i))).collect();
        let right = (0..phi.cols()).map(|i| self.right_by(t.row(i))).collect();
        Bimodule { field: self.field, dim: self.dim, left, right, grading: None }
    }

    /// The bimodule structure on a closed subspace, in its echelon basis.
    pub fn sub(&self, space: &Subspace) -> Result<Bimodule> {
        let restrict = |m: &SparseMatrix| -> Result<SparseMatrix> {
            let cols: Vec<SparseVec> = space
                .basis_sparse()
                .iter()
                .map(|b| space.coords_sparse(&m.mul_sparse_vec(b)).ok_or(Error::NotASubBimodule))
                .collect::<Result<_>>()?;
            Ok(columns_to_matrix(self.field, space.dim(), &cols))
        };
        let left = self.left.iter().map(restrict).collect::<Result<_>>()?;
        let right = self.right.iter().map(restrict).collect::<Result<_>>()?;
        let grading = self.grading.as_ref().and_then(|w| {
            space
                .basis_sparse()
                .iter()
                .map(|b| homogeneous_weight(w, b))
                .collect::<Option<Vec<i64>>>()
        });
        Ok(Bimodule { field: self.field, dim: space.dim(), left, right, grading })
    }

    /// The quotient by a closed subspace, in the complement-column basis.
    pub fn quotient(&self, space: &Subspace) -> Result<Bimodule> {
        let comp = space.complement_columns();
        let unit = |c: usize| vec![(c, self.field.one())];
        for m in self.left.iter().chain(&self.right) {
            for b in space.basis_sparse() {
                if !space.contains_sparse(&m.mul_sparse_vec(b)) {
                    return Err(Error::NotASubBimodule);
                }
            }
        }
        let project = |m: &SparseMatrix| -> SparseMatrix {
            let cols: Vec<SparseVec> =
                comp.iter().map(|&c| space.quotient_coords(&m.mul_sparse_vec(&unit(c)))).collect();
            columns_to_matrix(self.field, comp.len(), &cols)
        };
        let left = self.left.iter().map(project).collect();
        let right = self.right.iter().map(project).collect();
        let grading = self.grading.as_ref().and_then(|w| {
            let all_basis = space.basis_sparse().iter().all(|b| b.len() == 1);
            all_basis.then(|| comp.iter().map(|&c| w[c]).collect())
        });
        Ok(Bimodule { field: self.field, dim: comp.len(), left, right, grading })
    }

    /// `D(M) = hom_k(M, k)` with `(a f)(m) = f(m a)` and `(f a)(m) = f(a m)`.
    pub fn dual(&self) -> Bimodule {
        Bimodule {
            field: self.field,
            dim: self.dim,
            left: self.right.iter().map(SparseMatrix::transpose).collect(),
            right: self.left.iter().map(SparseMatrix::transpose).collect(),
            grading: self.grading.as_ref().map(|w| w.iter().map(|x| -x).collect()),
        }
    }

    /// `hom_k(M, N)` for left modules, with `(a f b)(m) = a f(b m)`. The map
    /// `m_k -> n_j` sits at index `j * dim M + k`.
    pub fn hom_k(m: &LeftModule, n: &LeftModule) -> Bimodule {
        let (dm, dn) = (m.dim, n.dim);
        let field = m.field;
        let left = n
            .action
            .iter()
            .map(|l| {
                SparseMatrix::from_triplets(
                    field,
                    dn * dm,
                    dn * dm,
                    l.entries().flat_map(|(j2, j, c)| (0..dm).map(move |k| (j2 * dm + k, j * dm + k, c.clone()))),
                )
            })
            .collect();
        let right = m
            .action
            .iter()
            .map(|l| {
                SparseMatrix::from_triplets(
                    field,
                    dn * dm,
                    dn * dm,
                    l.entries().flat_map(|(k, k2, c)| (0..dn).map(move |j| (j * dm + k2, j * dm + k, c.clone()))),
                )
            })
            .collect();
        Bimodule { field, dim: dn * dm, left, right, grading: None }
    }

    /// `B ⊗_k B'` with `a (x ⊗ y) = x ⊗ a y` and `(x ⊗ y) a = x a ⊗ y`; the
    /// coefficients whose Hochschild homology is `Tor^A(B, B')`.
    pub fn tor_coefficients(b_right: &Bimodule, b_left: &Bimodule) -> Bimodule {
        let (d1, d2) = (b_right.dim, b_left.dim);
        let field = b_right.field;
        let left = b_left
            .left
            .iter()
            .map(|l| {
                SparseMatrix::from_triplets(
                    field,
                    d1 * d2,
                    d1 * d2,
                    l.entries().flat_map(|(j2, j, c)| (0..d1).map(move |i| (i * d2 + j2, i * d2 + j, c.clone()))),
                )
            })
            .collect();
        let right = b_right
            .right
            .iter()
            .map(|r| {
                SparseMatrix::from_triplets(
                    field,
                    d1 * d2,
                    d1 * d2,
                    r.entries().flat_map(|(i2, i, c)| (0..d2).map(move |j| (i2 * d2 + j, i * d2 + j, c.clone()))),
                )
            })
            .collect();
        Bimodule { field, dim: d1 * d2, left, right, grading: None }
    }

    /// The left module over `A ⊗ A^op` (basis order of [`FinDimAlgebra::tensor`]).
    pub fn as_enveloping_module(&self) -> LeftModule {
        let n = self.left.len();
        let mut action = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                action.push(self.left[i].mul(&self.right[j]));
            }
        }
        LeftModule { field: self.field, dim: self.dim, action }
    }

    pub fn left_module(&self) -> LeftModule {
        LeftModule { field: self.field, dim: self.dim, action: self.left.clone() }
    }

    /// Checks that `theta` (rows: target, cols: source) commutes with both actions.
    pub fn is_bimodule_map(&self, target: &Bimodule, theta: &SparseMatrix) -> bool {
        theta.rows() == target.dim
            && theta.cols() == self.dim
            && self.left.iter().zip(&target.left).all(|(a, b)| theta.mul(a) == b.mul(theta))
            && self.right.iter().zip(&target.right).all(|(a, b)| theta.mul(a) == b.mul(theta))
    }

    /// Basis of bimodule maps `self -> target`, each flattened row-major:
    /// entry `(r, c)` of the map sits at `r * dim(self) + c`.
    pub fn bimodule_homs(&self, target: &Bimodule) -> Subspace {
        let (dm, dn) = (self.dim, target.dim);
        let field = self.field;
        let mut rows: Vec<SparseVec> = Vec::new();
        let pairs = self.left.iter().zip(&target.left).chain(self.right.iter().zip(&target.right));
        for (src, tgt) in pairs {
            // (theta src - tgt theta)[r][c] = 0
            let src_t = src.transpose();
            for r in 0..dn {
                for c in 0..dm {
                    let entries = src_t
                        .row(c)
                        .iter()
                        .map(|(k, v)| (r * dm + k, v.clone()))
                        .chain(tgt.row(r).iter().map(|(k, v)| (k * dm + c, -v)));
                    let row = sparse_from_entries(entries);
                    if !row.is_empty() {
                        rows.push(row);
                    }
                }
            }
        }
        let m = SparseMatrix::from_sparse_rows(field, dm * dn, rows);
        let kernel = m.kernel();
        Subspace::from_dense(field, dm * dn, &kernel)
    }
}

pub(crate) fn columns_to_matrix(field: FieldSpec, rows: usize, cols: &[SparseVec]) -> SparseMatrix {
    SparseMatrix::from_triplets(
        field,
        rows,
        cols.len(),
        cols.iter()
            .enumerate()
            .flat_map(|(j, c)| c.iter().map(move |(i, v)| (*i, j, v.clone()))),
    )
}

pub(crate) fn homogeneous_weight(weights: &[i64], v: &SparseVec) -> Option<i64> {
    let w = weights[v.first()?.0];
    v.iter().all(|(i, _)| weights[*i] == w).then_some(w)
}

/// Reshapes a vector of length `rows * cols` (row-major) into a matrix.
pub(crate) fn vector_to_matrix(field: FieldSpec, rows: usize, cols: usize, v: &[Scalar]) -> SparseMatrix {
    SparseMatrix::from_triplets(
        field,
        rows,
        cols,
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k / cols, k % cols, c.clone())),
    )
}

impl LeftModule {
    pub fn new(alg: &FinDimAlgebra, action: Vec<SparseMatrix>) -> Result<Self> {
        let dim = action.first().map_or(0, SparseMatrix::rows);
        check_module_law(alg, dim, &action, false, "left")?;
        Ok(LeftModule { field: alg.field(), dim, action })
    }

    pub(crate) fn from_parts(field: FieldSpec, dim: usize, action: Vec<SparseMatrix>) -> Self {
        LeftModule { field, dim, action }
    }

    pub fn regular(alg: &FinDimAlgebra) -> Self {
        LeftModule {
            field: alg.field(),
            dim: alg.dim(),
            action: (0..alg.dim()).map(|i| alg.left_mult_matrix(i)).collect(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[SparseMatrix] {
        &self.action
    }

    pub fn act(&self, i: usize, m: &SparseVec) -> SparseVec {
        self.action[i].mul_sparse_vec(m)
    }

    /// Restriction of scalars along `phi: A -> B`.
    pub fn pullback(&self, phi: &SparseMatrix) -> LeftModule {
        let t = phi.transpose();
        let action = (0..phi.cols())
            .map(|i| combine_actions(self.field, self.dim, &self.action, t.row(i)))
            .collect();
        LeftModule { field: self.field, dim: self.dim, action }
    }

    /// The submodule on a closed subspace, in its echelon basis.
    pub fn sub(&self, space: &Subspace) -> Result<LeftModule> {
        let action = self
            .action
            .iter()
            .map(|m| {
                let cols: Vec<SparseVec> = space
                    .basis_sparse()
                    .iter()
                    .map(|b| space.coords_sparse(&m.mul_sparse_vec(b)).ok_or(Error::NotASubBimodule))
                    .collect::<Result<_>>()?;
                Ok(columns_to_matrix(self.field, space.dim(), &cols))
            })
            .collect::<Result<_>>()?;
        Ok(LeftModule { field: self.field, dim: space.dim(), action })
    }

    /// Basis of `hom_A(self, target)`, maps stored row-major as in
    /// [`Bimodule::bimodule_homs`].
    pub fn homs(&self, target: &LeftModule) -> Subspace {
        let as_bimodule = |m: &LeftModule| {
            Bimodule { field: m.field, dim: m.dim, left: m.action.clone(), right: Vec::new(), grading: None }
        };
        as_bimodule(self).bimodule_homs(&as_bimodule(target))
    }
}

impl SubBimodule {
    /// Checks closure of `space` under both actions of `m`.
    pub fn new(m: &Bimodule, space: Subspace) -> Result<Self> {
        for b in space.basis_sparse() {
            for mat in m.left.iter().chain(&m.right) {
                if !space.contains_sparse(&mat.mul_sparse_vec(b)) {
                    return Err(Error::NotASubBimodule);
                }
            }
        }
        Ok(SubBimodule { space })
    }

    pub(crate) fn from_space(space: Subspace) -> Self {
        SubBimodule { space }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn basis(&self) -> Vec<Vec<Scalar>> {
        self.space.basis_dense()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.space.contains(v)
    }

    pub fn intersect(&self, other: &SubBimodule) -> SubBimodule {
        let field = self.space.field();
        let n = self.space.ambient();
        // solve sum x_i u_i = sum y_j v_j
        let mut cols: Vec<Vec<Scalar>> = self.space.basis_dense();
        cols.extend(other.space.basis_dense().into_iter().map(|v| v.iter().map(|c| -c).collect()));
        let m = SparseMatrix::from_columns(field, n, &cols);
        let vectors: Vec<SparseVec> = m
            .kernel()
            .iter()
            .map(|k| {
                let mut acc: SparseVec = Vec::new();
                for (b, c) in self.space.basis_sparse().iter().zip(k) {
                    acc = sparse_axpy(&acc, c, b);
                }
                acc
            })
            .collect();
        SubBimodule { space: Subspace::from_sparse(field, n, vectors) }
    }
}
