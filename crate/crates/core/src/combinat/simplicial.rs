use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::exactmath::{FieldSpec, SparseMatrix};

use super::poset::Poset;

/// A finite simplicial complex, closed under faces. Simplices are sorted
/// vertex lists, ordered by dimension and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    simplices: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// The smallest complex containing `faces`.
    pub fn new(vertices: Vec<String>, faces: &[Vec<usize>]) -> Result<Self> {
        let n = vertices.len();
        let mut all: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
        for f in faces {
            let mut f = f.clone();
            f.sort_unstable();
            f.dedup();
            if let Some(&v) = f.iter().find(|&&v| v >= n) {
                return Err(Error::UnknownVertex(v.to_string()));
            }
            if f.is_empty() {
                continue;
            }
            let k = f.len();
            for mask in 1u64..(1u64 << k) {
                let face: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                all.insert((face.len(), face));
            }
        }
        Ok(SimplicialComplex { vertices, simplices: all.into_iter().map(|(_, s)| s).collect() })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn simplices(&self) -> &[Vec<usize>] {
        &self.simplices
    }

    /// Simplices of dimension `p` (with `p + 1` vertices).
    pub fn of_dim(&self, p: usize) -> Vec<&Vec<usize>> {
        self.simplices.iter().filter(|s| s.len() == p + 1).collect()
    }

    pub fn dimension(&self) -> Option<usize> {
        self.simplices.iter().map(|s| s.len() - 1).max()
    }

    /// `Σ (-1)^p #(p-simplices)`.
    pub fn euler_characteristic(&self) -> i64 {
        self.simplices.iter().map(|s| if s.len() % 2 == 1 { 1 } else { -1 }).sum()
    }

    fn labelled(&self, s: &[usize]) -> BTreeSet<&str> {
        s.iter().map(|&v| self.vertices[v].as_str()).collect()
    }

    /// Whether every simplex of `sub`, read through vertex labels, is a
    /// simplex here.
    pub fn contains_complex(&self, sub: &SimplicialComplex) -> bool {
        let own: BTreeSet<BTreeSet<&str>> = self.simplices.iter().map(|s| self.labelled(s)).collect();
        sub.simplices.iter().all(|s| own.contains(&sub.labelled(s)))
    }
}

/// The complex of nonempty chains of `x`.
pub fn order_complex(x: &Poset) -> SimplicialComplex {
    SimplicialComplex::new(x.elements().to_vec(), &x.chains()).expect("chains use poset indices")
}

/// Dimensions of `H^p(|K|)` or, when `l` is given, `H^p(|K|, |L|)`, for
/// `0 <= p <= p_max`.
pub fn simplicial_cohomology(
    k: &SimplicialComplex,
    l: Option<&SimplicialComplex>,
    p_max: usize,
    field: FieldSpec,
) -> Result<Vec<usize>> {
    let excluded: BTreeSet<BTreeSet<&str>> = match l {
        Some(l) => {
            if !k.contains_complex(l) {
                return Err(Error::NotASubcomplex);
            }
            l.simplices.iter().map(|s| l.labelled(s)).collect()
        }
        None => BTreeSet::new(),
    };
    let cells: Vec<Vec<&Vec<usize>>> = (0..=p_max + 1)
        .map(|p| k.of_dim(p).into_iter().filter(|s| !excluded.contains(&k.labelled(s))).collect())
        .collect();
    let rank = |p: usize| -> usize {
        let index: HashMap<&Vec<usize>, usize> = cells[p].iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let mut triplets = Vec::new();
        for (row, s) in cells[p + 1].iter().enumerate() {
            for drop in 0..s.len() {
                let face: Vec<usize> = s.iter().enumerate().filter(|(i, _)| *i != drop).map(|(_, &v)| v).collect();
                if let Some(&col) = index.get(&face) {
                    let c = if drop % 2 == 0 { field.one() } else { -field.one() };
                    triplets.push((row, col, c));
                }
            }
        }
        SparseMatrix::from_triplets(field, cells[p + 1].len(), cells[p].len(), triplets).rank()
    };
    let ranks: Vec<usize> = (0..=p_max).map(rank).collect();
    Ok((0..=p_max)
        .map(|p| cells[p].len() - ranks[p] - if p == 0 { 0 } else { ranks[p - 1] })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle() -> Poset {
        let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        let covers: Vec<(String, String)> = [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        Poset::from_covers(s(&["a", "b", "c", "d"]), &covers).unwrap()
    }

    #[test]
    fn chain_is_contractible() {
        let k = order_complex(&Poset::chain(4));
        assert_eq!(simplicial_cohomology(&k, None, 3, FieldSpec::Rationals).unwrap(), vec![1, 0, 0, 0]);
    }

    #[test]
    fn circle_poset() {
        let k = order_complex(&circle());
        assert_eq!(k.euler_characteristic(), 0);
        assert_eq!(simplicial_cohomology(&k, None, 2, FieldSpec::Rationals).unwrap(), vec![1, 1, 0]);
        let y = order_complex(&circle().restrict(&[0, 1]));
        assert_eq!(simplicial_cohomology(&k, Some(&y), 2, FieldSpec::Rationals).unwrap(), vec![0, 2, 0]);
    }

    #[test]
    fn rejects_foreign_subcomplex() {
        let k = order_complex(&Poset::chain(2));
        let l = SimplicialComplex::new(vec!["z".into()], &[vec![0]]).unwrap();
        assert_eq!(simplicial_cohomology(&k, Some(&l), 1, FieldSpec::Rationals), Err(Error::NotASubcomplex));
    }

    #[test]
    fn faces_are_closed() {
        let k = SimplicialComplex::new(vec!["0".into(), "1".into(), "2".into()], &[vec![2, 0, 1]]).unwrap();
        assert_eq!(k.simplices().len(), 7);
        assert_eq!(k.dimension(), Some(2));
    }
}
