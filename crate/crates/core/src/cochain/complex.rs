//! The normalized bar complex relative to the marked separable subalgebra.
//!
//! With `E` spanned by the marked idempotents `e_1..e_n` and `R` spanned by
//! the remaining basis elements (each lying in a single corner), a
//! `p`-cochain assigns to every composable chain `(r_1, ..., r_p)` of
//! `R`-basis elements a value in the corner `e_left(r_1) M e_right(r_p)`. For
//! algebras without a marking `E = k·1` and `R` is the span of all basis
//! vectors but one.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::algebra::{Bimodule, FinDimAlgebra};
use crate::error::{Error, Result};
use crate::exactmath::{
    eliminate, sparse_axpy, sparse_scale, Elimination, FieldSpec, Scalar, SparseMatrix, SparseVec, Subspace,
};

/// Default bound on cochain coordinates per degree.
pub const DEFAULT_CAP: usize = 2_000_000;

/// The decomposition `A = E ⊕ R` and the induced multiplication on chains.
#[derive(Clone, Debug)]
pub struct BarShape {
    field: FieldSpec,
    vertices: usize,
    /// `R`-basis elements as vectors in `A`.
    elements: Vec<SparseVec>,
    corners: Vec<(usize, usize)>,
    weights: Option<Vec<i64>>,
    /// Position of each `A`-basis element in `R`, when it is one.
    position: Vec<Option<usize>>,
    /// Unit coordinate dropped in the unmarked case, with the unit itself.
    dropped: Option<(usize, SparseVec)>,
    products: Vec<Vec<SparseVec>>,
    idempotent_basis: Vec<usize>,
}

impl BarShape {
    pub fn new(alg: &FinDimAlgebra) -> Self {
        let field = alg.field();
        let n = alg.dim();
        let (vertices, elements, corners, position, dropped, idempotent_basis) = match alg.idempotents() {
            Some(idem) => {
                let mut elements = Vec::new();
                let mut corners = Vec::new();
                let mut position = vec![None; n];
                for i in 0..n {
                    if !idem.contains(&i) {
                        position[i] = Some(elements.len());
                        elements.push(alg.basis_vector(i));
                        corners.push(alg.corner(i).expect("marked algebra has corners"));
                    }
                }
                (idem.len(), elements, corners, position, None, idem.to_vec())
            }
            None => {
                let unit = alg.unit_sparse().clone();
                let j0 = unit.first().map(|e| e.0);
                let mut elements = Vec::new();
                let mut position = vec![None; n];
                for i in 0..n {
                    if Some(i) != j0 {
                        position[i] = Some(elements.len());
                        elements.push(alg.basis_vector(i));
                    }
                }
                let corners = vec![(0, 0); elements.len()];
                (1, elements, corners, position, j0.map(|j| (j, unit)), Vec::new())
            }
        };
        let weights = alg.grading().map(|w| {
            elements.iter().map(|e| w[e[0].0]).collect::<Vec<i64>>()
        });
        let mut shape = BarShape {
            field,
            vertices,
            elements,
            corners,
            weights,
            position,
            dropped,
            products: Vec::new(),
            idempotent_basis,
        };
        let m = shape.elements.len();
        let mut products = vec![vec![Vec::new(); m]; m];
        for r in 0..m {
            for s in 0..m {
                if shape.corners[r].1 == shape.corners[s].0 {
                    products[r][s] = shape.project(&alg.mul(&shape.elements[r], &shape.elements[s]));
                }
            }
        }
        shape.products = products;
        shape
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, r: usize) -> &SparseVec {
        &self.elements[r]
    }

    pub fn corner(&self, r: usize) -> (usize, usize) {
        self.corners[r]
    }

    pub fn product(&self, r: usize, s: usize) -> &SparseVec {
        &self.products[r][s]
    }

    /// Whether the marked idempotents are in use.
    pub fn is_marked(&self) -> bool {
        self.dropped.is_none() && !self.idempotent_basis.is_empty()
    }

    /// Basis index of the idempotent of vertex `v`, in the marked case.
    pub fn idempotent(&self, v: usize) -> Option<usize> {
        self.idempotent_basis.get(v).copied()
    }

    /// Coordinates in `R` of the image of `v` in `A / E`.
    pub fn project(&self, v: &SparseVec) -> SparseVec {
        let adjusted = match &self.dropped {
            Some((j, unit)) => match v.binary_search_by_key(j, |e| e.0) {
                Ok(k) => {
                    let u = &unit[0].1;
                    let c = &v[k].1 * &u.inv().expect("unit coordinate is nonzero");
                    sparse_axpy(v, &-c, unit)
                }
                Err(_) => v.clone(),
            },
            None => v.clone(),
        };
        adjusted
            .into_iter()
            .filter_map(|(i, c)| self.position[i].map(|r| (r, c)))
            .collect()
    }
}

/// A bimodule re-based so that each corner `e_u M e_v` is a contiguous block.
#[derive(Clone, Debug)]
pub struct AdaptedModule {
    field: FieldSpec,
    dim: usize,
    vertices: usize,
    offsets: Vec<usize>,
    to_new: SparseMatrix,
    to_old: SparseMatrix,
    /// Transposed actions of the `R`-basis elements in the new basis: row `j`
    /// of `left_t[r]` is `r * m_j`.
    left_t: Vec<SparseMatrix>,
    right_t: Vec<SparseMatrix>,
    weights: Option<Vec<i64>>,
}

impl AdaptedModule {
    pub fn new(alg: &FinDimAlgebra, shape: &BarShape, m: &Bimodule) -> Self {
        let field = alg.field();
        let dim = m.dim();
        let nv = shape.vertices();
        let (offsets, to_new, to_old, weights) = if shape.is_marked() {
            let mut spaces = Vec::with_capacity(nv * nv);
            for u in 0..nv {
                for v in 0..nv {
                    let pu = &m.left()[shape.idempotent(u).expect("marked")];
                    let pv = &m.right()[shape.idempotent(v).expect("marked")];
                    let proj = pu.mul(pv);
                    spaces.push((proj.clone(), proj.column_space()));
                }
            }
            let mut offsets = vec![0];
            for (_, s) in &spaces {
                offsets.push(offsets.last().expect("nonempty") + s.dim());
            }
            let mut old_cols: Vec<SparseVec> = Vec::with_capacity(dim);
            for (_, s) in &spaces {
                old_cols.extend(s.basis_sparse().iter().cloned());
            }
            let to_old = crate::algebra::bimodule::columns_to_matrix(field, dim, &old_cols);
            let new_cols: Vec<SparseVec> = (0..dim)
                .map(|j| {
                    let e = vec![(j, field.one())];
                    let mut out = Vec::new();
                    for (b, (proj, s)) in spaces.iter().enumerate() {
                        let part = proj.mul_sparse_vec(&e);
                        let coords = s.coords_sparse(&part).expect("projection lands in its image");
                        out.extend(coords.into_iter().map(|(k, c)| (offsets[b] + k, c)));
                    }
                    out
                })
                .collect();
            let to_new = crate::algebra::bimodule::columns_to_matrix(field, dim, &new_cols);
            let weights = m.grading().and_then(|w| {
                old_cols
                    .iter()
                    .map(|c| crate::algebra::bimodule::homogeneous_weight(w, c))
                    .collect::<Option<Vec<i64>>>()
            });
            (offsets, to_new, to_old, weights)
        } else {
            let id = SparseMatrix::identity(field, dim);
            (vec![0, dim], id.clone(), id, m.grading().map(<[i64]>::to_vec))
        };
        let conj = |a: &SparseMatrix| to_new.mul(a).mul(&to_old).transpose();
        let left_t = (0..shape.len()).map(|r| conj(&m.left_by(shape.element(r)))).collect();
        let right_t = (0..shape.len()).map(|r| conj(&m.right_by(shape.element(r)))).collect();
        AdaptedModule { field, dim, vertices: nv, offsets, to_new, to_old, left_t, right_t, weights }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn block(&self, u: usize, v: usize) -> (usize, usize) {
        let b = u * self.vertices + v;
        (self.offsets[b], self.offsets[b + 1] - self.offsets[b])
    }

    pub fn to_new(&self, m: &SparseVec) -> SparseVec {
        self.to_new.mul_sparse_vec(m)
    }

    pub fn to_old(&self, m: &SparseVec) -> SparseVec {
        self.to_old.mul_sparse_vec(m)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
}

#[derive(Clone, Debug, Default)]
struct Level {
    /// All composable chains of this length (vertices for length zero).
    chains: Vec<Vec<u32>>,
    /// Coordinate offset of each chain, `None` when its corner is zero.
    offsets: Vec<Option<usize>>,
    index: HashMap<Vec<u32>, usize>,
    dim: usize,
}

/// The cochain complex `C^*(A, M)` relative to the marked idempotents.
#[derive(Clone, Debug)]
pub struct HochschildComplex {
    shape: BarShape,
    module: AdaptedModule,
    levels: Vec<Level>,
    cap: usize,
}

/// A cochain in a specific complex, in its coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub degree: usize,
    pub values: Vec<Scalar>,
}

impl Cochain {
    pub fn zero(field: FieldSpec, degree: usize, dim: usize) -> Self {
        Cochain { degree, values: vec![field.zero(); dim] }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert_eq!(self.degree, other.degree);
        Cochain { degree: self.degree, values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        assert_eq!(self.degree, other.degree);
        Cochain { degree: self.degree, values: self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Cochain {
        Cochain { degree: self.degree, values: self.values.iter().map(|a| a * c).collect() }
    }
}

impl HochschildComplex {
    /// Builds the chain index up to degree `max_degree + 1`.
    pub fn new(alg: &FinDimAlgebra, m: &Bimodule, max_degree: usize) -> Result<Self> {
        HochschildComplex::with_cap(alg, m, max_degree, DEFAULT_CAP)
    }

    pub fn with_cap(alg: &FinDimAlgebra, m: &Bimodule, max_degree: usize, cap: usize) -> Result<Self> {
        let shape = BarShape::new(alg);
        let module = AdaptedModule::new(alg, &shape, m);
        let mut cx = HochschildComplex { shape, module, levels: Vec::new(), cap };
        let nv = cx.shape.vertices();
        let zero = Level {
            chains: (0..nv as u32).map(|v| vec![v]).collect(),
            ..Level::default()
        };
        cx.levels.push(cx.finish_level(zero, 0)?);
        for p in 1..=max_degree + 1 {
            cx.extend_level(p)?;
        }
        Ok(cx)
    }

    fn chain_corner(&self, chain: &[u32], p: usize) -> (usize, usize) {
        if p == 0 {
            (chain[0] as usize, chain[0] as usize)
        } else {
            (self.shape.corner(chain[0] as usize).0, self.shape.corner(*chain.last().expect("chain") as usize).1)
        }
    }

    fn finish_level(&self, mut level: Level, p: usize) -> Result<Level> {
        let mut dim = 0usize;
        level.offsets = Vec::with_capacity(level.chains.len());
        for c in &level.chains {
            let (u, v) = self.chain_corner(c, p);
            let (_, d) = self.module.block(u, v);
            if d == 0 {
                level.offsets.push(None);
            } else {
                level.offsets.push(Some(dim));
                dim += d;
            }
            if dim > self.cap {
                return Err(Error::DimensionCap { degree: p, size: dim, cap: self.cap });
            }
        }
        level.index = level.chains.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        level.dim = dim;
        Ok(level)
    }

    fn extend_level(&mut self, p: usize) -> Result<()> {
        let mut chains = Vec::new();
        if p == 1 {
            chains.extend((0..self.shape.len() as u32).map(|r| vec![r]));
        } else {
            let mut by_left: Vec<Vec<u32>> = vec![Vec::new(); self.shape.vertices()];
            for r in 0..self.shape.len() {
                by_left[self.shape.corner(r).0].push(r as u32);
            }
            for c in &self.levels[p - 1].chains {
                let right = self.shape.corner(*c.last().expect("chain") as usize).1;
                for &r in &by_left[right] {
                    let mut d = c.clone();
                    d.push(r);
                    chains.push(d);
                }
            }
        }
        let level = self.finish_level(Level { chains, ..Level::default() }, p)?;
        self.levels.push(level);
        Ok(())
    }

    /// Makes sure the index reaches `degree + 1`.
    pub fn ensure_degree(&mut self, degree: usize) -> Result<()> {
        while self.levels.len() < degree + 2 {
            let p = self.levels.len();
            self.extend_level(p)?;
        }
        Ok(())
    }

    pub fn max_degree(&self) -> usize {
        self.levels.len() - 2
    }

    pub fn field(&self) -> FieldSpec {
        self.shape.field()
    }

    pub fn shape(&self) -> &BarShape {
        &self.shape
    }

    pub fn module(&self) -> &AdaptedModule {
        &self.module
    }

    pub fn dim(&self, p: usize) -> usize {
        self.levels[p].dim
    }

    /// Coordinate offset and block size of a chain, if its corner is nonzero.
    pub fn locate(&self, p: usize, chain: &[u32]) -> Option<(usize, usize)> {
        let level = &self.levels[p];
        let i = *level.index.get(chain)?;
        let off = level.offsets[i]?;
        let (u, v) = self.chain_corner(chain, p);
        Some((off, self.module.block(u, v).1))
    }

    /// Chains of degree `p` with nonzero corners, with their offsets.
    pub fn chains(&self, p: usize) -> impl Iterator<Item = (&[u32], usize)> {
        let level = &self.levels[p];
        level
            .chains
            .iter()
            .zip(&level.offsets)
            .filter_map(|(c, o)| o.map(|o| (c.as_slice(), o)))
    }

    /// All composable chains of degree `p`.
    pub fn all_chains(&self, p: usize) -> &[Vec<u32>] {
        &self.levels[p].chains
    }

    pub fn corner_of(&self, p: usize, chain: &[u32]) -> (usize, usize) {
        self.chain_corner(chain, p)
    }

    /// Value of a cochain on a chain, in the original basis of `M`.
    pub fn value(&self, f: &Cochain, chain: &[u32]) -> SparseVec {
        let p = f.degree;
        match self.locate(p, chain) {
            None => Vec::new(),
            Some((off, d)) => {
                let (u, v) = self.chain_corner(chain, p);
                let (boff, _) = self.module.block(u, v);
                let new: SparseVec = (0..d)
                    .filter(|&k| !f.values[off + k].is_zero())
                    .map(|k| (boff + k, f.values[off + k].clone()))
                    .collect();
                self.module.to_old(&new)
            }
        }
    }

    /// Builds a cochain from its values (in the original basis of `M`),
    /// keeping only the component in each chain's corner.
    pub fn cochain_from_fn(&self, p: usize, f: impl Fn(&[u32]) -> SparseVec) -> Cochain {
        let mut values = vec![self.field().zero(); self.dim(p)];
        for (chain, off) in self.chains(p) {
            let v = f(chain);
            if v.is_empty() {
                continue;
            }
            let (u, w) = self.chain_corner(chain, p);
            let (boff, d) = self.module.block(u, w);
            for (k, c) in self.module.to_new(&v) {
                if k >= boff && k < boff + d {
                    values[off + k - boff] = c;
                }
            }
        }
        Cochain { degree: p, values }
    }

    /// The differential `C^p -> C^{p+1}`.
    pub fn differential(&self, p: usize) -> SparseMatrix {
        let field = self.field();
        let rows_dim = self.dim(p + 1);
        let cols_dim = self.dim(p);
        let one = field.one();
        let sign = |i: usize| if i % 2 == 0 { one.clone() } else { -&one };
        let rows: Vec<SparseVec> = self.levels[p + 1]
            .chains
            .par_iter()
            .zip(&self.levels[p + 1].offsets)
            .filter_map(|(c, o)| o.map(|o| (c, o)))
            .flat_map_iter(|(chain, _)| {
                let (u, w) = self.chain_corner(chain, p + 1);
                let (boff, d) = self.module.block(u, w);
                let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); d];
                // first term: r_1 f(r_2, ..., r_{p+1})
                let tail = if p == 0 {
                    vec![self.shape.corner(chain[0] as usize).1 as u32]
                } else {
                    chain[1..].to_vec()
                };
                if let Some((ioff, id)) = self.locate(p, &tail) {
                    let (iu, iw) = self.chain_corner(&tail, p);
                    let (ib, _) = self.module.block(iu, iw);
                    let act = &self.module.left_t[chain[0] as usize];
                    for k in 0..id {
                        for (j, c) in act.row(ib + k) {
                            if *j >= boff && *j < boff + d {
                                rows[j - boff].push((ioff + k, c.clone()));
                            }
                        }
                    }
                }
                // inner terms
                for i in 0..p {
                    let s = sign(i + 1);
                    let prod = self.shape.product(chain[i] as usize, chain[i + 1] as usize);
                    for (r, c) in prod {
                        let mut input = Vec::with_capacity(p);
                        input.extend_from_slice(&chain[..i]);
                        input.push(*r as u32);
                        input.extend_from_slice(&chain[i + 2..]);
                        if let Some((ioff, _)) = self.locate(p, &input) {
                            let coef = &s * c;
                            for (k, row) in rows.iter_mut().enumerate() {
                                row.push((ioff + k, coef.clone()));
                            }
                        }
                    }
                }
                // last term: f(r_1, ..., r_p) r_{p+1}
                let head = if p == 0 {
                    vec![self.shape.corner(chain[0] as usize).0 as u32]
                } else {
                    chain[..p].to_vec()
                };
                if let Some((ioff, id)) = self.locate(p, &head) {
                    let (iu, iw) = self.chain_corner(&head, p);
                    let (ib, _) = self.module.block(iu, iw);
                    let act = &self.module.right_t[chain[p] as usize];
                    let s = sign(p + 1);
                    for k in 0..id {
                        for (j, c) in act.row(ib + k) {
                            if *j >= boff && *j < boff + d {
                                rows[j - boff].push((ioff + k, &s * c));
                            }
                        }
                    }
                }
                rows.into_iter().map(crate::exactmath::sparse_from_entries)
            })
            .collect();
        debug_assert_eq!(rows.len(), rows_dim);
        SparseMatrix::from_sparse_rows(field, cols_dim, rows)
    }

    /// Weight of each coordinate of `C^p`, when both the algebra and the
    /// module are graded.
    pub fn weights(&self, p: usize) -> Option<Vec<i64>> {
        let rw = self.shape.weights.as_ref()?;
        let mw = self.module.weights.as_ref()?;
        let mut out = Vec::with_capacity(self.dim(p));
        for (chain, _) in self.chains(p) {
            let (u, v) = self.chain_corner(chain, p);
            let (b, d) = self.module.block(u, v);
            let shift: i64 = if p == 0 { 0 } else { chain.iter().map(|&r| rw[r as usize]).sum() };
            out.extend((0..d).map(|k| mw[b + k] - shift));
        }
        Some(out)
    }

    /// Rank of `d^p`, split by weight when a grading is available.
    pub fn rank(&self, p: usize) -> usize {
        self.eliminate(p, &[]).rank
    }

    /// Eliminates `d^p` with the columns in `cancelled` dropped.
    fn eliminate(&self, p: usize, cancelled: &[bool]) -> Elimination {
        let d = self.differential(p);
        let keep = |c: usize| !cancelled.get(c).copied().unwrap_or(false);
        let rows: Vec<SparseVec> =
            d.row_data().iter().map(|r| r.iter().filter(|e| keep(e.0)).cloned().collect()).collect();
        match (self.weights(p + 1), self.weights(p)) {
            (Some(rw), Some(cw)) => graded_elimination(&rows, &rw, &cw),
            _ => eliminate(d.cols(), rows),
        }
    }

    /// Ranks of `d^0, ..., d^{p_max}`. Each pivot of `d^p` pairs a column of
    /// `d^p` with a row; that row is dropped as a column of `d^{p+1}`, which
    /// leaves the rank of `d^{p+1}` unchanged since `d^{p+1} d^p = 0`.
    pub fn ranks(&self, p_max: usize) -> Vec<usize> {
        let mut cancelled: Vec<bool> = Vec::new();
        let mut out = Vec::with_capacity(p_max + 1);
        for p in 0..=p_max {
            let e = self.eliminate(p, &cancelled);
            cancelled = vec![false; self.dim(p + 1)];
            for r in e.pivot_rows {
                cancelled[r] = true;
            }
            out.push(e.rank);
        }
        out
    }

    /// Dimensions of `H^p` for `p = 0..=p_max`.
    pub fn cohomology_dims(&self, p_max: usize) -> Vec<usize> {
        let ranks = self.ranks(p_max);
        (0..=p_max)
            .map(|p| self.dim(p) - ranks[p] - if p == 0 { 0 } else { ranks[p - 1] })
            .collect()
    }

    pub fn apply_differential(&self, f: &Cochain) -> Cochain {
        Cochain { degree: f.degree + 1, values: self.differential(f.degree).mul_vec(&f.values) }
    }

    /// A witness `b` with `d b = c`, or `None` when `c` is not a coboundary.
    /// Fails when `c` is not a cocycle.
    pub fn coboundary_witness(&self, c: &Cochain) -> Result<Option<Cochain>> {
        if !self.apply_differential(c).is_zero() {
            return Err(Error::NotACocycle);
        }
        if c.degree == 0 {
            return Ok(c.is_zero().then(|| Cochain { degree: 0, values: c.values.clone() }));
        }
        let d = self.differential(c.degree - 1);
        Ok(d.solve(&c.values).map(|values| Cochain { degree: c.degree - 1, values }))
    }

    pub fn is_coboundary(&self, c: &Cochain) -> Result<bool> {
        Ok(self.coboundary_witness(c)?.is_some())
    }
}

/// Elimination of rows whose entries all share the weight of their row,
/// one weight at a time. Pivot rows are reported in the original numbering.
pub fn graded_elimination(rows: &[SparseVec], row_weights: &[i64], col_weights: &[i64]) -> Elimination {
    let mut groups: HashMap<i64, Vec<usize>> = HashMap::new();
    for (r, w) in row_weights.iter().enumerate() {
        if !rows[r].is_empty() {
            groups.entry(*w).or_default().push(r);
        }
    }
    let mut col_local = vec![0usize; col_weights.len()];
    let mut counts: HashMap<i64, usize> = HashMap::new();
    for (c, w) in col_weights.iter().enumerate() {
        let n = counts.entry(*w).or_default();
        col_local[c] = *n;
        *n += 1;
    }
    let mut groups: Vec<(i64, Vec<usize>)> = groups.into_iter().collect();
    groups.sort_by_key(|g| g.0);
    let parts: Vec<Vec<usize>> = groups
        .par_iter()
        .map(|(w, members)| {
            let width = counts.get(w).copied().unwrap_or(0);
            let local: Vec<SparseVec> = members
                .iter()
                .map(|&r| {
                    rows[r]
                        .iter()
                        .map(|(c, v)| {
                            debug_assert_eq!(col_weights[*c], *w);
                            (col_local[*c], v.clone())
                        })
                        .collect()
                })
                .collect();
            eliminate(width, local).pivot_rows.into_iter().map(|i| members[i]).collect()
        })
        .collect();
    let mut pivot_rows: Vec<usize> = parts.into_iter().flatten().collect();
    pivot_rows.sort_unstable();
    Elimination { rank: pivot_rows.len(), pivot_rows }
}

/// Cohomology in one degree: chosen representative cocycles and a way to
/// read off class coordinates.
#[derive(Clone, Debug)]
pub struct CohomologySpace {
    degree: usize,
    representatives: Vec<Cochain>,
    coordinates: crate::exactmath::Echelon,
}

impl CohomologySpace {
    pub fn new(cx: &HochschildComplex, p: usize) -> CohomologySpace {
        let field = cx.field();
        let n = cx.dim(p);
        let (_, kernel) = cx.differential(p).kernel_rank();
        let mut tracker = crate::exactmath::Echelon::with_tracking(field, n);
        if p > 0 {
            let image = cx.differential(p - 1).transpose();
            for col in image.row_data() {
                tracker.insert_tracked(col.clone(), Vec::new());
            }
        }
        let mut representatives = Vec::new();
        for k in kernel {
            let v = crate::exactmath::dense_to_sparse(&k);
            let tag = vec![(representatives.len(), field.one())];
            if tracker.insert_tracked(v, tag) {
                representatives.push(Cochain { degree: p, values: k });
            }
        }
        CohomologySpace { degree: p, representatives, coordinates: tracker }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn representatives(&self) -> &[Cochain] {
        &self.representatives
    }

    /// Coordinates of the class of a cocycle in the representative basis.
    pub fn class_coordinates(&self, c: &Cochain) -> Result<Vec<Scalar>> {
        let v = crate::exactmath::dense_to_sparse(&c.values);
        let (rest, tag) = self.coordinates.reduce_tracked(v, Vec::new());
        if !rest.is_empty() {
            return Err(Error::NotACocycle);
        }
        let field = self.coordinates.field();
        let coords = sparse_scale(&tag, &-field.one());
        Ok(crate::exactmath::sparse_to_dense(field, &coords, self.dim()))
    }
}

/// Dimensions and representative cocycles of `H^p(A, M)`.
#[derive(Clone, Debug)]
pub struct CohomologyResult {
    pub dims: Vec<usize>,
    pub representatives: Vec<Vec<Cochain>>,
}

/// `H^p(A, M)` for `p = 0..=p_max`, with representatives.
pub fn hochschild_cohomology(alg: &FinDimAlgebra, m: &Bimodule, p_max: usize) -> Result<CohomologyResult> {
    let cx = HochschildComplex::new(alg, m, p_max)?;
    let spaces: Vec<CohomologySpace> = (0..=p_max).into_par_iter().map(|p| CohomologySpace::new(&cx, p)).collect();
    Ok(CohomologyResult {
        dims: spaces.iter().map(CohomologySpace::dim).collect(),
        representatives: spaces.into_iter().map(|s| s.representatives).collect(),
    })
}

/// Dimensions only, via ranks.
pub fn hochschild_dims(alg: &FinDimAlgebra, m: &Bimodule, p_max: usize) -> Result<Vec<usize>> {
    let cx = HochschildComplex::new(alg, m, p_max)?;
    Ok(cx.cohomology_dims(p_max))
}

/// `HH^p(A) = H^p(A, A)`.
pub fn hh_dims(alg: &FinDimAlgebra, p_max: usize) -> Result<Vec<usize>> {
    hochschild_dims(alg, &Bimodule::regular(alg), p_max)
}

/// Checks `d^{p+1} d^p = 0` for `p < max_degree`.
pub fn differential_squares_to_zero(cx: &HochschildComplex) -> bool {
    (0..cx.max_degree()).all(|p| cx.differential(p + 1).mul(&cx.differential(p)).is_zero())
}

/// The kernel of `d^0` as a subspace of `M` (original basis).
pub fn invariants(cx: &HochschildComplex) -> Subspace {
    let field = cx.field();
    let kernel = cx.differential(0).kernel();
    let n = cx.module().dim();
    let vectors = kernel
        .iter()
        .map(|k| {
            let c = Cochain { degree: 0, values: k.clone() };
            let mut acc: SparseVec = Vec::new();
            for (chain, _) in cx.chains(0) {
                acc = sparse_axpy(&acc, &field.one(), &cx.value(&c, chain));
            }
            acc
        })
        .collect();
    Subspace::from_sparse(field, n, vectors)
}
