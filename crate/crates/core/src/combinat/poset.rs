use crate::error::{Error, Result};

/// A finite poset stored as its reflexive-transitive order relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    elements: Vec<String>,
    leq: Vec<Vec<bool>>,
}

impl Poset {
    /// Builds the order generated by cover pairs `(a, b)` meaning `a < b`.
    pub fn from_covers(elements: Vec<String>, covers: &[(String, String)]) -> Result<Self> {
        for (i, e) in elements.iter().enumerate() {
            if elements[..i].contains(e) {
                return Err(Error::BadParameters(format!("duplicate element {e}")));
            }
        }
        let n = elements.len();
        let find = |v: &str| {
            elements
                .iter()
                .position(|w| w == v)
                .ok_or_else(|| Error::UnknownVertex(v.to_string()))
        };
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (a, b) in covers {
            let (i, j) = (find(a)?, find(b)?);
            if i == j {
                return Err(Error::CyclicPoset(a.clone()));
            }
            leq[i][j] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..i {
                if leq[i][j] && leq[j][i] {
                    return Err(Error::CyclicPoset(elements[i].clone()));
                }
            }
        }
        Ok(Poset { elements, leq })
    }

    pub(crate) fn from_relation(elements: Vec<String>, leq: Vec<Vec<bool>>) -> Self {
        Poset { elements, leq }
    }

    /// The chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Self {
        let elements = (0..n).map(|i| i.to_string()).collect();
        let leq = (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect();
        Poset { elements, leq }
    }

    pub fn antichain(n: usize) -> Self {
        let elements = (0..n).map(|i| i.to_string()).collect();
        let leq = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
        Poset { elements, leq }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.elements
            .iter()
            .position(|e| e == label)
            .ok_or_else(|| Error::NotASubset(label.to_string()))
    }

    pub fn indices_of(&self, labels: &[String]) -> Result<Vec<usize>> {
        let mut out: Vec<usize> = labels.iter().map(|l| self.index_of(l)).collect::<Result<_>>()?;
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq[i][j]
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq[i][j] || self.leq[j][i]
    }

    /// Cover pairs of the Hasse diagram.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt(i, j) && !(0..n).any(|k| self.lt(i, k) && self.lt(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Comparable pairs `x <= y`, ordered by `x` then `y`.
    pub fn intervals(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|i| (0..n).filter(move |&j| self.leq[i][j]).map(move |j| (i, j)))
            .collect()
    }

    /// The subposet on the given indices.
    pub fn restrict(&self, subset: &[usize]) -> Poset {
        Poset {
            elements: subset.iter().map(|&i| self.elements[i].clone()).collect(),
            leq: subset
                .iter()
                .map(|&i| subset.iter().map(|&j| self.leq[i][j]).collect())
                .collect(),
        }
    }

    /// Whether `subset` is downward closed.
    pub fn is_order_ideal(&self, subset: &[String]) -> Result<bool> {
        let idx = self.indices_of(subset)?;
        let inside = |i: usize| idx.binary_search(&i).is_ok();
        Ok(idx.iter().all(|&y| (0..self.len()).all(|x| !self.leq(x, y) || inside(x))))
    }

    /// Nonempty chains ordered by inclusion, labelled `{a,b,...}`.
    pub fn chain_poset(&self) -> Poset {
        let chains = self.chains();
        let label = |c: &[usize]| {
            let names: Vec<&str> = c.iter().map(|&i| self.elements[i].as_str()).collect();
            format!("{{{}}}", names.join(","))
        };
        let contains = |big: &[usize], small: &[usize]| small.iter().all(|x| big.contains(x));
        let leq = chains
            .iter()
            .map(|c| chains.iter().map(|d| contains(d, c)).collect())
            .collect();
        Poset::from_relation(chains.iter().map(|c| label(c)).collect(), leq)
    }

    /// Strictly increasing chains (nonempty), each listed bottom to top,
    /// ordered by length and then lexicographically.
    pub fn chains(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut out: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
        let mut frontier = out.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for c in &frontier {
                let top = *c.last().expect("nonempty chain");
                for j in 0..n {
                    if self.lt(top, j) {
                        let mut d = c.clone();
                        d.push(j);
                        next.push(d);
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[&str]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    fn pairs(v: &[(&str, &str)]) -> Vec<(String, String)> {
        v.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
    }

    #[test]
    fn closure_and_covers() {
        let p = Poset::from_covers(s(&["a", "b", "c"]), &pairs(&[("a", "b"), ("b", "c")])).unwrap();
        assert!(p.leq(0, 2));
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
        assert_eq!(p.intervals().len(), 6);
    }

    #[test]
    fn cycles_are_rejected() {
        let err = Poset::from_covers(s(&["a", "b"]), &pairs(&[("a", "b"), ("b", "a")]));
        assert!(matches!(err, Err(Error::CyclicPoset(_))));
    }

    #[test]
    fn circle_has_eight_chains() {
        let p = Poset::from_covers(
            s(&["a", "b", "c", "d"]),
            &pairs(&[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]),
        )
        .unwrap();
        assert_eq!(p.chains().len(), 8);
    }

    #[test]
    fn order_ideals() {
        let p = Poset::from_covers(
            s(&["a", "b", "c", "d"]),
            &pairs(&[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]),
        )
        .unwrap();
        assert!(p.is_order_ideal(&[]).unwrap());
        assert!(p.is_order_ideal(&s(&["a", "b", "c", "d"])).unwrap());
        assert!(p.is_order_ideal(&s(&["a", "b"])).unwrap());
        assert!(!p.is_order_ideal(&s(&["a", "c"])).unwrap());
        assert!(matches!(p.is_order_ideal(&s(&["z"])), Err(Error::NotASubset(_))));
    }

    #[test]
    fn chain_posets() {
        let anti = Poset::antichain(2).chain_poset();
        assert_eq!(anti.len(), 2);
        assert!(!anti.comparable(0, 1));
        let two = Poset::chain(2).chain_poset();
        assert_eq!(two.len(), 3);
        assert_eq!(two.covers().len(), 2);
        let circle = Poset::from_covers(
            s(&["a", "b", "c", "d"]),
            &pairs(&[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]),
        )
        .unwrap();
        assert_eq!(circle.chain_poset().len(), 8);
    }
}
