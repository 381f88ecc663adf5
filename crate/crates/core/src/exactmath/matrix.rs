//! Sparse exact linear algebra: matrices, echelon forms, kernels, subspaces.
//!
//! Pivoting is deterministic: a row's pivot is its first nonzero column, and
//! rows are processed in the order they are supplied.

use std::collections::BTreeMap;

use super::scalar::{FieldSpec, Scalar};

/// Sorted `(index, value)` pairs with no stored zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

pub fn dense_to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn sparse_to_dense(field: FieldSpec, v: &SparseVec, len: usize) -> Vec<Scalar> {
    let mut out = vec![field.zero(); len];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

/// `a + c * b` for sorted sparse vectors.
pub fn sparse_axpy(a: &SparseVec, c: &Scalar, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ai = a.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let bj = b.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ai < bj {
            out.push(a[i].clone());
            i += 1;
        } else if bj < ai {
            let v = c * &b[j].1;
            if !v.is_zero() {
                out.push((bj, v));
            }
            j += 1;
        } else {
            let v = &a[i].1 + &(c * &b[j].1);
            if !v.is_zero() {
                out.push((ai, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn sparse_scale(a: &SparseVec, c: &Scalar) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|(i, v)| (*i, v * c)).collect()
}

/// Builds a sorted sparse vector from unsorted entries, summing duplicates.
pub fn sparse_from_entries(entries: impl IntoIterator<Item = (usize, Scalar)>) -> SparseVec {
    let mut map: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (i, c) in entries {
        match map.get_mut(&i) {
            Some(v) => *v = &*v + &c,
            None => {
                map.insert(i, c);
            }
        }
    }
    map.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Row-major sparse matrix over a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, field, data: vec![Vec::new(); rows] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            field,
            data: (0..n).map(|i| vec![(i, field.one())]).collect(),
        }
    }

    pub fn from_triplets(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Self {
        let mut buckets: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); rows];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "triplet ({r},{c}) outside {rows}x{cols}");
            buckets[r].push((c, v));
        }
        let data = buckets.into_iter().map(sparse_from_entries).collect();
        SparseMatrix { rows, cols, field, data }
    }

    pub fn from_sparse_rows(field: FieldSpec, cols: usize, data: Vec<SparseVec>) -> Self {
        debug_assert!(data.iter().all(|r| r.iter().all(|(c, v)| *c < cols && !v.is_zero())));
        SparseMatrix { rows: data.len(), cols, field, data }
    }

    pub fn from_dense(field: FieldSpec, rows: &[Vec<Scalar>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        SparseMatrix {
            rows: rows.len(),
            cols,
            field,
            data: rows.iter().map(|r| dense_to_sparse(r)).collect(),
        }
    }

    pub fn from_i64(field: FieldSpec, rows: &[Vec<i64>]) -> Self {
        let dense: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        SparseMatrix::from_dense(field, &dense)
    }

    /// Matrix whose columns are the given dense vectors.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let triplets = columns.iter().enumerate().flat_map(|(j, col)| {
            col.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(move |(i, v)| (i, j, v.clone()))
        });
        SparseMatrix::from_triplets(field, rows, columns.len(), triplets)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn row(&self, r: usize) -> &SparseVec {
        &self.data[r]
    }

    pub fn row_data(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        match self.data[r].binary_search_by_key(&c, |e| e.0) {
            Ok(k) => self.data[r][k].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        self.data
            .iter()
            .map(|r| sparse_to_dense(self.field, r, self.cols))
            .collect()
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut data: Vec<SparseVec> = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                data[*c].push((r, v.clone()));
            }
        }
        SparseMatrix { rows: self.cols, cols: self.rows, field: self.field, data }
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "mul_vec dimension mismatch");
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .fold(self.field.zero(), |acc, (c, a)| &acc + &(a * &v[*c]))
            })
            .collect()
    }

    pub fn mul_sparse_vec(&self, v: &SparseVec) -> SparseVec {
        let dense = sparse_to_dense(self.field, v, self.cols);
        dense_to_sparse(&self.mul_vec(&dense))
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "mul dimension mismatch");
        let data = self
            .data
            .iter()
            .map(|row| {
                sparse_from_entries(row.iter().flat_map(|(k, a)| {
                    other.data[*k].iter().map(move |(c, b)| (*c, a * b))
                }))
            })
            .collect();
        SparseMatrix { rows: self.rows, cols: other.cols, field: self.field, data }
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        self.axpy(&self.field.one(), other)
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        self.axpy(&-self.field.one(), other)
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &Scalar, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| sparse_axpy(a, c, b))
            .collect();
        SparseMatrix { rows: self.rows, cols: self.cols, field: self.field, data }
    }

    pub fn scale(&self, c: &Scalar) -> SparseMatrix {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().map(|r| sparse_scale(r, c)).collect(),
        }
    }

    /// Columns `start..start+len` only.
    pub fn column_block(&self, start: usize, len: usize) -> SparseMatrix {
        let data = self
            .data
            .iter()
            .map(|r| {
                r.iter()
                    .filter(|(c, _)| *c >= start && *c < start + len)
                    .map(|(c, v)| (c - start, v.clone()))
                    .collect()
            })
            .collect();
        SparseMatrix { rows: self.rows, cols: len, field: self.field, data }
    }

    /// Exact rank, by minimum-degree sparse elimination.
    pub fn rank(&self) -> usize {
        super::markowitz::sparse_rank(self.cols, self.data.clone())
    }

    /// Rank and a kernel basis in reduced echelon form: one vector per free
    /// column (ascending), with a 1 in that column.
    pub fn kernel_rank(&self) -> (usize, Vec<Vec<Scalar>>) {
        let mut ech = Echelon::new(self.field, self.cols);
        for row in &self.data {
            ech.insert(row.clone());
        }
        ech.reduce_to_rref();
        let rank = ech.rank();
        let pivot_cols: Vec<usize> = ech.pivot_columns();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivot_cols {
            is_pivot[c] = true;
        }
        let mut kernel = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for row in ech.rows() {
                let lead = row[0].0;
                if let Ok(k) = row.binary_search_by_key(&free, |e| e.0) {
                    v[lead] = -&row[k].1;
                }
            }
            kernel.push(v);
        }
        (rank, kernel)
    }

    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        self.kernel_rank().1
    }

    /// Some `x` with `self * x = b`, or `None` when `b` is not in the image.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "solve dimension mismatch");
        let t = self.transpose();
        let mut ech = Echelon::with_tracking(self.field, self.rows);
        for (j, col) in t.data.iter().enumerate() {
            ech.insert_tracked(col.clone(), vec![(j, self.field.one())]);
        }
        let (rest, combo) = ech.reduce_tracked(dense_to_sparse(b), Vec::new());
        if !rest.is_empty() {
            return None;
        }
        // b - sum(c_k row_k) = 0 with row_k = M * tag_k.
        Some(sparse_to_dense(self.field, &sparse_scale(&combo, &-self.field.one()), self.cols))
    }

    /// Basis of the column space in reduced echelon form.
    pub fn column_space(&self) -> Subspace {
        let t = self.transpose();
        Subspace::from_sparse(self.field, self.rows, t.data)
    }
}

/// Rank of the span of the given sparse rows of the given width.
pub fn rank_of_rows(field: FieldSpec, width: usize, rows: impl Iterator<Item = SparseVec>) -> usize {
    let mut ech = Echelon::new(field, width);
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}

/// Incremental row echelon form with distinct leading columns and leading
/// coefficient one. Optionally tracks, for each stored row, the combination
/// of inserted vectors that produced it.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: FieldSpec,
    width: usize,
    rows: Vec<SparseVec>,
    tags: Option<Vec<SparseVec>>,
    pivots: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new(field: FieldSpec, width: usize) -> Self {
        Echelon { field, width, rows: Vec::new(), tags: None, pivots: BTreeMap::new() }
    }

    pub fn with_tracking(field: FieldSpec, width: usize) -> Self {
        Echelon { field, width, rows: Vec::new(), tags: Some(Vec::new()), pivots: BTreeMap::new() }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    /// Reduces away leading terms; the result is zero iff `v` is in the span.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut start = 0;
        while start < v.len() {
            let (lead, c) = (v[start].0, v[start].1.clone());
            match self.pivots.get(&lead) {
                Some(&r) => v = sparse_axpy(&v, &-&c, &self.rows[r]),
                None => start += 1,
            }
        }
        v
    }

    fn reduce_leading(&self, mut v: SparseVec) -> SparseVec {
        while let Some((lead, c)) = v.first().cloned() {
            match self.pivots.get(&lead) {
                Some(&r) => v = sparse_axpy(&v, &-&c, &self.rows[r]),
                None => break,
            }
        }
        v
    }

    /// Inserts `v`; returns whether it enlarged the span.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        debug_assert!(self.tags.is_none());
        let v = self.reduce_leading(v);
        self.push_reduced(v, None)
    }

    fn push_reduced(&mut self, v: SparseVec, tag: Option<SparseVec>) -> bool {
        let Some((lead, c)) = v.first().cloned() else {
            return false;
        };
        let inv = c.inv().expect("nonzero lead");
        let idx = self.rows.len();
        self.rows.push(sparse_scale(&v, &inv));
        if let (Some(tags), Some(t)) = (self.tags.as_mut(), tag) {
            tags.push(sparse_scale(&t, &inv));
        }
        self.pivots.insert(lead, idx);
        true
    }

    pub fn insert_tracked(&mut self, v: SparseVec, tag: SparseVec) -> bool {
        let (v, tag) = self.reduce_tracked_leading(v, tag);
        self.push_reduced(v, Some(tag))
    }

    fn reduce_tracked_leading(&self, mut v: SparseVec, mut tag: SparseVec) -> (SparseVec, SparseVec) {
        let tags = self.tags.as_ref().expect("tracking enabled");
        while let Some((lead, c)) = v.first().cloned() {
            match self.pivots.get(&lead) {
                Some(&r) => {
                    let m = -&c;
                    v = sparse_axpy(&v, &m, &self.rows[r]);
                    tag = sparse_axpy(&tag, &m, &tags[r]);
                }
                None => break,
            }
        }
        (v, tag)
    }

    /// Full leading reduction of `v` with tracking; returns the remainder and
    /// `tag - sum(c_k tag_k)` where the `c_k` are the subtracted multiples.
    pub fn reduce_tracked(&self, v: SparseVec, tag: SparseVec) -> (SparseVec, SparseVec) {
        self.reduce_tracked_leading(v, tag)
    }

    /// Turns the stored rows into reduced row echelon form.
    pub fn reduce_to_rref(&mut self) {
        let pivots: Vec<(usize, usize)> = self.pivots.iter().rev().map(|(c, r)| (*c, *r)).collect();
        for (col, prow) in pivots {
            let pivot_row = self.rows[prow].clone();
            let pivot_tag = self.tags.as_ref().map(|t| t[prow].clone());
            for r in 0..self.rows.len() {
                if r == prow || self.rows[r][0].0 >= col {
                    continue;
                }
                if let Ok(k) = self.rows[r].binary_search_by_key(&col, |e| e.0) {
                    let m = -&self.rows[r][k].1;
                    self.rows[r] = sparse_axpy(&self.rows[r], &m, &pivot_row);
                    if let (Some(tags), Some(pt)) = (self.tags.as_mut(), pivot_tag.as_ref()) {
                        tags[r] = sparse_axpy(&tags[r], &m, pt);
                    }
                }
            }
        }
    }

    /// Rows sorted by pivot column.
    pub fn sorted_rows(&self) -> Vec<SparseVec> {
        self.pivots.values().map(|&r| self.rows[r].clone()).collect()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
}

/// A subspace of `k^n` held by its reduced echelon basis. Coordinates of a
/// member are its entries at the pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    basis: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_dense(field: FieldSpec, ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        Subspace::from_sparse(field, ambient, vectors.iter().map(|v| dense_to_sparse(v)).collect())
    }

    pub fn from_sparse(field: FieldSpec, ambient: usize, vectors: Vec<SparseVec>) -> Self {
        let mut ech = Echelon::new(field, ambient);
        for v in vectors {
            ech.insert(v);
        }
        ech.reduce_to_rref();
        let basis = ech.sorted_rows();
        let pivots = basis.iter().map(|r| r[0].0).collect();
        Subspace { field, ambient, basis, pivots }
    }

    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace { field, ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: (0..ambient).map(|i| vec![(i, field.one())]).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_sparse(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn basis_dense(&self) -> Vec<Vec<Scalar>> {
        self.basis
            .iter()
            .map(|b| sparse_to_dense(self.field, b, self.ambient))
            .collect()
    }

    /// Removes the pivot-column components: the canonical representative of
    /// `v` modulo the subspace.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if let Ok(k) = out.binary_search_by_key(&p, |e| e.0) {
                let m = -&out[k].1;
                out = sparse_axpy(&out, &m, b);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(&dense_to_sparse(v)).is_empty()
    }

    pub fn contains_sparse(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Coordinates with respect to the echelon basis, if `v` is a member.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn coords_sparse(&self, v: &SparseVec) -> Option<SparseVec> {
        if !self.contains_sparse(v) {
            return None;
        }
        let mut out = Vec::new();
        for (i, &p) in self.pivots.iter().enumerate() {
            if let Ok(k) = v.binary_search_by_key(&p, |e| e.0) {
                out.push((i, v[k].1.clone()));
            }
        }
        Some(out)
    }

    /// Combination of basis vectors with the given coordinates.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let mut acc: SparseVec = Vec::new();
        for (b, c) in self.basis.iter().zip(coords) {
            if !c.is_zero() {
                acc = sparse_axpy(&acc, c, b);
            }
        }
        sparse_to_dense(self.field, &acc, self.ambient)
    }

    /// Non-pivot columns, ascending: the standard complement used for quotients.
    pub fn complement_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Coordinates of the class of `v` in the quotient, relative to the
    /// complement columns.
    pub fn quotient_coords(&self, v: &SparseVec) -> SparseVec {
        let reduced = self.reduce(v);
        let comp = self.complement_columns();
        let mut index = vec![usize::MAX; self.ambient];
        for (i, &c) in comp.iter().enumerate() {
            index[c] = i;
        }
        reduced
            .into_iter()
            .map(|(c, v)| {
                debug_assert!(index[c] != usize::MAX);
                (index[c], v)
            })
            .collect()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|b| other.contains_sparse(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::from_sparse(
            self.field,
            self.ambient,
            self.basis.iter().chain(&other.basis).cloned().collect(),
        )
    }
}
