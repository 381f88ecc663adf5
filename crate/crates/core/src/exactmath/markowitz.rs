//! Rank by sparse elimination with Markowitz pivoting.
//!
//! The rank does not depend on pivot order, so this path is free to pick
//! pivots that keep fill-in and coefficient growth small. Anything that needs
//! reproducible bases goes through `Echelon` instead.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use super::matrix::{sparse_axpy, SparseVec};
use super::scalar::Scalar;

/// How many cheapest columns and rows are inspected per pivot.
const CANDIDATES: usize = 4;

/// Outcome of an elimination: the rank and the rows that carried pivots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elimination {
    pub rank: usize,
    pub pivot_rows: Vec<usize>,
}

struct State {
    rows: Vec<SparseVec>,
    cols: Vec<HashSet<usize>>,
    row_alive: Vec<bool>,
    col_alive: Vec<bool>,
    col_heap: BinaryHeap<Reverse<(usize, usize)>>,
    row_heap: BinaryHeap<Reverse<(usize, usize)>>,
}

fn entry(row: &SparseVec, col: usize) -> Option<&Scalar> {
    row.binary_search_by_key(&col, |e| e.0).ok().map(|k| &row[k].1)
}

fn is_unit(c: &Scalar) -> bool {
    c.is_one() || (-c).is_one()
}

impl State {
    fn new(width: usize, rows: Vec<SparseVec>) -> Self {
        let mut cols: Vec<HashSet<usize>> = vec![HashSet::new(); width];
        for (i, r) in rows.iter().enumerate() {
            for (c, _) in r {
                cols[*c].insert(i);
            }
        }
        let col_heap = (0..width).filter(|&c| !cols[c].is_empty()).map(|c| Reverse((cols[c].len(), c))).collect();
        let row_heap = rows
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.is_empty())
            .map(|(i, r)| Reverse((r.len(), i)))
            .collect();
        let row_alive = rows.iter().map(|r| !r.is_empty()).collect();
        State { rows, cols, row_alive, col_alive: vec![true; width], col_heap, row_heap }
    }

    /// Cost of pivoting at `(i, j)`; unit pivots are preferred on ties.
    fn cost(&self, i: usize, j: usize) -> (usize, bool) {
        let r = self.rows[i].len() - 1;
        let c = self.cols[j].len() - 1;
        let unit = entry(&self.rows[i], j).map(is_unit).unwrap_or(false);
        (r * c, !unit)
    }

    fn pop_cols(&mut self) -> Vec<usize> {
        let mut out = Vec::new();
        while out.len() < CANDIDATES {
            let Some(Reverse((count, j))) = self.col_heap.pop() else { break };
            if self.col_alive[j] && self.cols[j].len() == count && count > 0 && !out.contains(&j) {
                out.push(j);
            }
        }
        out
    }

    fn pop_rows(&mut self) -> Vec<usize> {
        let mut out = Vec::new();
        while out.len() < CANDIDATES {
            let Some(Reverse((len, i))) = self.row_heap.pop() else { break };
            if self.row_alive[i] && self.rows[i].len() == len && len > 0 && !out.contains(&i) {
                out.push(i);
            }
        }
        out
    }

    fn choose(&mut self) -> Option<(usize, usize)> {
        let cand_cols = self.pop_cols();
        let cand_rows = self.pop_rows();
        let mut best: Option<((usize, bool), usize, usize)> = None;
        let consider = |key: (usize, bool), i: usize, j: usize, best: &mut Option<((usize, bool), usize, usize)>| {
            if best.as_ref().map_or(true, |b| (key, i, j) < (b.0, b.1, b.2)) {
                *best = Some((key, i, j));
            }
        };
        for &j in &cand_cols {
            for &i in &self.cols[j] {
                consider(self.cost(i, j), i, j, &mut best);
            }
        }
        for &i in &cand_rows {
            for (j, _) in &self.rows[i] {
                consider(self.cost(i, *j), i, *j, &mut best);
            }
        }
        for j in cand_cols {
            self.col_heap.push(Reverse((self.cols[j].len(), j)));
        }
        for i in cand_rows {
            self.row_heap.push(Reverse((self.rows[i].len(), i)));
        }
        best.map(|(_, i, j)| (i, j))
    }

    fn pivot(&mut self, p: usize, j: usize) {
        let prow = std::mem::take(&mut self.rows[p]);
        self.row_alive[p] = false;
        for (c, _) in &prow {
            self.cols[*c].remove(&p);
        }
        let inv = entry(&prow, j).expect("pivot entry").inv().expect("nonzero pivot");
        let mut targets: Vec<usize> = self.cols[j].iter().copied().collect();
        targets.sort_unstable();
        let mut touched: HashSet<usize> = prow.iter().map(|e| e.0).collect();
        for i in targets {
            let old = std::mem::take(&mut self.rows[i]);
            let a = entry(&old, j).expect("column entry").clone();
            let new = sparse_axpy(&old, &-&(&a * &inv), &prow);
            for (c, _) in &old {
                self.cols[*c].remove(&i);
                touched.insert(*c);
            }
            for (c, _) in &new {
                self.cols[*c].insert(i);
            }
            self.row_alive[i] = !new.is_empty();
            if !new.is_empty() {
                self.row_heap.push(Reverse((new.len(), i)));
            }
            self.rows[i] = new;
        }
        self.col_alive[j] = false;
        for c in touched {
            if self.col_alive[c] && !self.cols[c].is_empty() {
                self.col_heap.push(Reverse((self.cols[c].len(), c)));
            }
        }
    }
}

/// Full elimination of `rows` (each a sparse vector of length `width`).
pub fn eliminate(width: usize, rows: Vec<SparseVec>) -> Elimination {
    let mut st = State::new(width, rows);
    let mut pivot_rows = Vec::new();
    while let Some((i, j)) = st.choose() {
        st.pivot(i, j);
        pivot_rows.push(i);
    }
    pivot_rows.sort_unstable();
    Elimination { rank: pivot_rows.len(), pivot_rows }
}

/// Rank of the span of `rows`, all of width `width`.
pub fn sparse_rank(width: usize, rows: Vec<SparseVec>) -> usize {
    eliminate(width, rows).rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rank_of_rows, FieldSpec, SparseMatrix};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn agrees_with_echelon_rank() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for field in [FieldSpec::Rationals, FieldSpec::Prime(2), FieldSpec::Prime(5)] {
            for _ in 0..80 {
                let (r, c) = (rng.gen_range(1..14), rng.gen_range(1..14));
                let dense: Vec<Vec<i64>> = (0..r)
                    .map(|_| (0..c).map(|_| if rng.gen_bool(0.3) { rng.gen_range(-2..3) } else { 0 }).collect())
                    .collect();
                let m = SparseMatrix::from_i64(field, &dense);
                let expected = rank_of_rows(field, c, m.row_data().iter().cloned());
                let e = eliminate(c, m.row_data().to_vec());
                assert_eq!(e.rank, expected);
                let pivots: Vec<SparseVec> = e.pivot_rows.iter().map(|&i| m.row(i).clone()).collect();
                assert_eq!(rank_of_rows(field, c, pivots.into_iter()), expected);
            }
        }
    }
}
