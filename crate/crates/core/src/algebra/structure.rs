use std::fmt;

use crate::error::{Error, Result};
use crate::exactmath::{
    dense_to_sparse, sparse_axpy, sparse_from_entries, sparse_to_dense, FieldSpec, Scalar,
    SparseMatrix, SparseVec,
};

/// A finite-dimensional unital associative algebra given by structure
/// constants on a fixed basis.
///
/// Optionally carries a marking of orthogonal idempotent basis elements
/// summing to one (the separable subalgebra `E`) and an integer grading of
/// the basis compatible with the multiplication.
#[derive(Clone, PartialEq, Eq)]
pub struct FinDimAlgebra {
    field: FieldSpec,
    labels: Vec<String>,
    mult: Vec<Vec<SparseVec>>,
    unit: SparseVec,
    idempotents: Option<Vec<usize>>,
    corners: Option<Vec<(usize, usize)>>,
    grading: Option<Vec<i64>>,
}

impl fmt::Debug for FinDimAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinDimAlgebra")
            .field("field", &self.field)
            .field("dim", &self.dim())
            .field("labels", &self.labels)
            .field("idempotents", &self.idempotents)
            .finish()
    }
}

impl FinDimAlgebra {
    /// Builds an algebra and checks associativity and the unit law on every
    /// basis triple.
    pub fn new(
        field: FieldSpec,
        labels: Vec<String>,
        mult: Vec<Vec<SparseVec>>,
        unit: Vec<Scalar>,
    ) -> Result<Self> {
        let n = labels.len();
        if mult.len() != n || mult.iter().any(|row| row.len() != n) || unit.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "structure constants for a basis of size {n}"
            )));
        }
        if mult.iter().flatten().flatten().any(|(k, c)| *k >= n || c.field() != field) {
            return Err(Error::NotAnAlgebra("product outside the basis or field".into()));
        }
        let alg = FinDimAlgebra::from_parts(field, labels, mult, dense_to_sparse(&unit));
        alg.check_axioms()?;
        Ok(alg)
    }

    pub(crate) fn from_parts(
        field: FieldSpec,
        labels: Vec<String>,
        mult: Vec<Vec<SparseVec>>,
        unit: SparseVec,
    ) -> Self {
        FinDimAlgebra { field, labels, mult, unit, idempotents: None, corners: None, grading: None }
    }

    pub fn check_axioms(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            let e = vec![(i, self.field.one())];
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(Error::NotAnAlgebra(format!("unit law fails on {}", self.labels[i])));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = &self.mult[i][j];
                for k in 0..n {
                    let left = self.mul(ij, &vec![(k, self.field.one())]);
                    let right = self.mul(&vec![(i, self.field.one())], &self.mult[j][k]);
                    if left != right {
                        return Err(Error::NotAnAlgebra(format!(
                            "associativity fails on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Marks orthogonal idempotent basis elements summing to one. Every other
    /// basis element must lie in a single corner `e_a A e_b`.
    pub fn with_idempotents(mut self, idempotents: Vec<usize>) -> Result<Self> {
        let one = self.field.one();
        for &a in &idempotents {
            if a >= self.dim() {
                return Err(Error::NotAnAlgebra(format!("idempotent index {a} out of range")));
            }
            for &b in &idempotents {
                let expected = if a == b { vec![(a, one.clone())] } else { Vec::new() };
                if self.mult[a][b] != expected {
                    return Err(Error::NotAnAlgebra("marked idempotents are not orthogonal".into()));
                }
            }
        }
        let sum = sparse_from_entries(idempotents.iter().map(|&a| (a, one.clone())));
        if sum != self.unit {
            return Err(Error::NotAnAlgebra("marked idempotents do not sum to one".into()));
        }
        let mut corners = Vec::with_capacity(self.dim());
        for i in 0..self.dim() {
            let e = vec![(i, one.clone())];
            let left = idempotents.iter().position(|&a| self.mult[a][i] == e);
            let right = idempotents.iter().position(|&b| self.mult[i][b] == e);
            match (left, right) {
                (Some(l), Some(r)) => corners.push((l, r)),
                _ => {
                    return Err(Error::NotAnAlgebra(format!(
                        "basis element {} is not in a single corner",
                        self.labels[i]
                    )))
                }
            }
        }
        self.idempotents = Some(idempotents);
        self.corners = Some(corners);
        Ok(self)
    }

    /// Attaches basis weights; every structure constant must be homogeneous.
    pub fn with_grading(mut self, weights: Vec<i64>) -> Result<Self> {
        if weights.len() != self.dim() {
            return Err(Error::DimensionMismatch("one weight per basis element".into()));
        }
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                if self.mult[i][j].iter().any(|(k, _)| weights[*k] != weights[i] + weights[j]) {
                    return Err(Error::NotAnAlgebra("grading is not multiplicative".into()));
                }
            }
        }
        self.grading = Some(weights);
        Ok(self)
    }

    pub fn without_grading(mut self) -> Self {
        self.grading = None;
        self
    }

    pub(crate) fn try_grading(self, weights: Option<Vec<i64>>) -> Self {
        match weights {
            Some(w) => {
                let fallback = self.clone();
                self.with_grading(w).unwrap_or(fallback)
            }
            None => self,
        }
    }

    pub(crate) fn try_idempotents(self, idempotents: Option<Vec<usize>>) -> Self {
        match idempotents {
            Some(idem) => {
                let fallback = self.clone();
                self.with_idempotents(idem).unwrap_or(fallback)
            }
            None => self,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn unit(&self) -> Vec<Scalar> {
        sparse_to_dense(self.field, &self.unit, self.dim())
    }

    pub fn unit_sparse(&self) -> &SparseVec {
        &self.unit
    }

    pub fn idempotents(&self) -> Option<&[usize]> {
        self.idempotents.as_deref()
    }

    /// Positions (in the idempotent list) of the left and right idempotents
    /// of a basis element.
    pub fn corner(&self, i: usize) -> Option<(usize, usize)> {
        self.corners.as_ref().map(|c| c[i])
    }

    pub fn grading(&self) -> Option<&[i64]> {
        self.grading.as_deref()
    }

    pub fn basis_vector(&self, i: usize) -> SparseVec {
        vec![(i, self.field.one())]
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i][j]
    }

    pub fn structure_constants(&self) -> &[Vec<SparseVec>] {
        &self.mult
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut acc: SparseVec = Vec::new();
        for (i, x) in a {
            for (j, y) in b {
                let c = x * y;
                acc = sparse_axpy(&acc, &c, &self.mult[*i][*j]);
            }
        }
        acc
    }

    pub fn mul_dense(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let p = self.mul(&dense_to_sparse(a), &dense_to_sparse(b));
        sparse_to_dense(self.field, &p, self.dim())
    }

    /// Matrix of `x -> b_i x`.
    pub fn left_mult_matrix(&self, i: usize) -> SparseMatrix {
        let n = self.dim();
        SparseMatrix::from_triplets(
            self.field,
            n,
            n,
            (0..n).flat_map(|j| self.mult[i][j].iter().map(move |(k, c)| (*k, j, c.clone()))),
        )
    }

    /// Matrix of `x -> x b_i`.
    pub fn right_mult_matrix(&self, i: usize) -> SparseMatrix {
        let n = self.dim();
        SparseMatrix::from_triplets(
            self.field,
            n,
            n,
            (0..n).flat_map(|j| self.mult[j][i].iter().map(move |(k, c)| (*k, j, c.clone()))),
        )
    }

    /// Matrix of left multiplication by an arbitrary element.
    pub fn left_mult_by(&self, a: &SparseVec) -> SparseMatrix {
        let n = self.dim();
        let cols: Vec<SparseVec> = (0..n).map(|j| self.mul(a, &self.basis_vector(j))).collect();
        SparseMatrix::from_triplets(
            self.field,
            n,
            n,
            cols.iter()
                .enumerate()
                .flat_map(|(j, c)| c.iter().map(move |(k, v)| (*k, j, v.clone()))),
        )
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim()).all(|i| (0..i).all(|j| self.mult[i][j] == self.mult[j][i]))
    }

    pub fn opposite(&self) -> FinDimAlgebra {
        let n = self.dim();
        let mult = (0..n)
            .map(|i| (0..n).map(|j| self.mult[j][i].clone()).collect())
            .collect();
        let mut out = FinDimAlgebra::from_parts(
            self.field,
            self.labels.iter().map(|l| format!("{l}°")).collect(),
            mult,
            self.unit.clone(),
        );
        if let Some(idem) = &self.idempotents {
            out = out.try_idempotents(Some(idem.clone()));
        }
        out.try_grading(self.grading.clone())
    }

    /// Tensor product over the base field; basis `(i, j)` at index `i * dim B + j`.
    pub fn tensor(&self, other: &FinDimAlgebra) -> FinDimAlgebra {
        let (n, m) = (self.dim(), other.dim());
        let idx = |i: usize, j: usize| i * m + j;
        let mut labels = Vec::with_capacity(n * m);
        for i in 0..n {
            for j in 0..m {
                labels.push(format!("{}⊗{}", self.labels[i], other.labels[j]));
            }
        }
        let mut mult = vec![vec![Vec::new(); n * m]; n * m];
        for i in 0..n {
            for j in 0..m {
                for k in 0..n {
                    for l in 0..m {
                        let a = &self.mult[i][k];
                        let b = &other.mult[j][l];
                        mult[idx(i, j)][idx(k, l)] = sparse_from_entries(a.iter().flat_map(|(p, x)| {
                            b.iter().map(move |(q, y)| (idx(*p, *q), x * y))
                        }));
                    }
                }
            }
        }
        let unit = sparse_from_entries(self.unit.iter().flat_map(|(p, x)| {
            other.unit.iter().map(move |(q, y)| (idx(*p, *q), x * y))
        }));
        let mut out = FinDimAlgebra::from_parts(self.field, labels, mult, unit);
        if let (Some(a), Some(b)) = (&self.idempotents, &other.idempotents) {
            let idem = a.iter().flat_map(|&p| b.iter().map(move |&q| idx(p, q))).collect();
            out = out.try_idempotents(Some(idem));
        }
        if let (Some(a), Some(b)) = (&self.grading, &other.grading) {
            let w = (0..n).flat_map(|i| (0..m).map(move |j| a[i] + b[j])).collect();
            out = out.try_grading(Some(w));
        }
        out
    }

    /// The enveloping algebra `A ⊗ A^op`; a bimodule is a left module over it
    /// via `(a ⊗ b) · m = a m b`.
    pub fn enveloping(&self) -> FinDimAlgebra {
        self.tensor(&self.opposite())
    }

    /// Checks that `phi` (rows: target basis, cols: this basis) is a unital
    /// algebra map into `target`.
    pub fn is_algebra_map(&self, target: &FinDimAlgebra, phi: &SparseMatrix) -> bool {
        if phi.rows() != target.dim() || phi.cols() != self.dim() {
            return false;
        }
        if phi.mul_sparse_vec(&self.unit) != *target.unit_sparse() {
            return false;
        }
        let images: Vec<SparseVec> =
            (0..self.dim()).map(|i| phi.mul_sparse_vec(&self.basis_vector(i))).collect();
        (0..self.dim()).all(|i| {
            (0..self.dim()).all(|j| {
                phi.mul_sparse_vec(&self.mult[i][j]) == target.mul(&images[i], &images[j])
            })
        })
    }

    /// Displays an element as a combination of basis labels.
    pub fn format_element(&self, v: &SparseVec) -> String {
        if v.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (i, c)) in v.iter().enumerate() {
            let neg = c.is_negative_display();
            let mag = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(&self.labels[*i]);
        }
        out
    }
}
