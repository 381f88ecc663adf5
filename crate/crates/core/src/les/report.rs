use std::fmt;

use serde::Serialize;

use crate::exactmath::SparseMatrix;

/// A computed map between two consecutive terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapData {
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    /// Dense entries, row by row.
    pub entries: Vec<Vec<String>>,
}

impl MapData {
    pub fn new(m: &SparseMatrix) -> Self {
        MapData {
            rows: m.rows(),
            cols: m.cols(),
            rank: m.rank(),
            entries: m.to_dense().iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect(),
        }
    }
}

/// Rank vector forced by exactness when only the dimensions are known.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Consistency {
    pub consistent: bool,
    /// `ranks[i]` is the rank of the map out of term `i`.
    pub ranks: Vec<usize>,
}

/// Whether `0 -> T_0 -> T_1 -> ... -> T_n (-> 0)` can be exact with the
/// given dimensions: ranks `r_i` with `r_{i-1} + r_i = dim T_i` and `r_{-1} = 0`
/// are forced, and must be nonnegative. With `zero_end` the last rank must
/// also vanish.
pub fn exactness_consistency(dims: &[usize], zero_end: bool) -> Consistency {
    let mut ranks = Vec::with_capacity(dims.len());
    let mut prev: i64 = 0;
    let mut consistent = true;
    for &d in dims {
        let r = d as i64 - prev;
        if r < 0 {
            consistent = false;
            break;
        }
        ranks.push(r as usize);
        prev = r;
    }
    if consistent && zero_end {
        consistent = ranks.last().map_or(true, |&r| r == 0);
        ranks.pop();
    }
    Consistency { consistent, ranks }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// Every asserted spot was checked with computed maps.
    Exact,
    /// Maps are missing; the dimensions admit an exact sequence.
    Consistent,
    Failed,
}

/// Two dimension vectors that should agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SideCheck {
    pub name: String,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub agree: bool,
}

impl SideCheck {
    pub fn new(name: &str, left: Vec<usize>, right: Vec<usize>) -> Self {
        let agree = left == right;
        SideCheck { name: name.to_string(), left, right, agree }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactSequenceReport {
    pub title: String,
    pub term_names: Vec<String>,
    pub term_dims: Vec<usize>,
    /// `maps[i]`: term `i` to term `i + 1`, when computed.
    pub maps: Vec<Option<MapData>>,
    /// Exactness at each term; `None` where it cannot be decided.
    pub exact_at: Vec<Option<bool>>,
    /// Consecutive computed maps compose to zero.
    pub composites_zero: bool,
    pub consistency: Option<Consistency>,
    /// Computed ranks agree with the ranks forced by the dimensions.
    pub ranks_match: bool,
    /// The sequence continues past the last term.
    pub truncated: bool,
    pub side_checks: Vec<SideCheck>,
    pub notes: Vec<String>,
    pub status: Status,
}

impl ExactSequenceReport {
    /// Builds a report from terms and the maps between consecutive terms.
    /// The sequence starts with `0`; it ends with `0` unless `truncated`.
    pub fn from_maps(title: &str, terms: Vec<(String, usize)>, maps: Vec<Option<SparseMatrix>>, truncated: bool) -> Self {
        let n = terms.len();
        assert_eq!(maps.len() + 1, n.max(1), "one map between each pair of terms");
        let (term_names, term_dims): (Vec<String>, Vec<usize>) = terms.into_iter().unzip();
        let ranks: Vec<Option<usize>> = maps.iter().map(|m| m.as_ref().map(SparseMatrix::rank)).collect();
        let mut composites_zero = true;
        for k in 1..maps.len() {
            if let (Some(a), Some(b)) = (&maps[k - 1], &maps[k]) {
                if !b.mul(a).is_zero() {
                    composites_zero = false;
                }
            }
        }
        let exact_at: Vec<Option<bool>> = (0..n)
            .map(|k| {
                let incoming = if k == 0 { Some(0) } else { ranks[k - 1] };
                let outgoing = if k + 1 == n {
                    (!truncated).then_some(0)
                } else {
                    ranks[k]
                };
                match (incoming, outgoing) {
                    (Some(i), Some(o)) => Some(i + o == term_dims[k]),
                    _ => None,
                }
            })
            .collect();
        let all_maps = maps.iter().all(Option::is_some);
        let consistency = (!all_maps).then(|| exactness_consistency(&term_dims, !truncated));
        // exactness forces every rank, so computed maps must match
        let ranks_match = consistency.as_ref().map_or(true, |c| {
            !c.consistent || ranks.iter().zip(&c.ranks).all(|(r, f)| r.map_or(true, |r| r == *f))
        });
        let decided_ok = exact_at.iter().all(|e| *e != Some(false)) && composites_zero && ranks_match;
        let status = if !decided_ok || consistency.as_ref().is_some_and(|c| !c.consistent) {
            Status::Failed
        } else if all_maps {
            Status::Exact
        } else {
            Status::Consistent
        };
        ExactSequenceReport {
            title: title.to_string(),
            term_names,
            term_dims,
            maps: maps.iter().map(|m| m.as_ref().map(MapData::new)).collect(),
            exact_at,
            composites_zero,
            consistency,
            ranks_match,
            truncated,
            side_checks: Vec::new(),
            notes: Vec::new(),
            status,
        }
    }

    /// A report with no computed maps, judged on dimensions alone.
    pub fn from_dims(title: &str, terms: Vec<(String, usize)>, truncated: bool) -> Self {
        let k = terms.len().saturating_sub(1);
        Self::from_maps(title, terms, vec![None; k], truncated)
    }

    pub fn with_side_check(mut self, check: SideCheck) -> Self {
        if !check.agree {
            self.status = Status::Failed;
        }
        self.side_checks.push(check);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Marks the report failed when `ok` is false.
    pub fn require(mut self, ok: bool, note: &str) -> Self {
        if !ok {
            self.status = Status::Failed;
            self.notes.push(format!("failed: {note}"));
        }
        self
    }

    /// Exact at every spot that can be decided, with all maps present.
    pub fn is_exact(&self) -> bool {
        self.status == Status::Exact
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Failed
    }

    /// The first term where exactness fails, if any.
    pub fn first_failure(&self) -> Option<String> {
        if let Some(k) = self.exact_at.iter().position(|e| *e == Some(false)) {
            return Some(format!("not exact at {} (dim {})", self.term_names[k], self.term_dims[k]));
        }
        if !self.composites_zero {
            return Some("two consecutive maps do not compose to zero".into());
        }
        if !self.ranks_match {
            return Some("a computed map has a rank other than the one exactness forces".into());
        }
        if let Some(c) = self.consistency.as_ref().filter(|c| !c.consistent) {
            return Some(format!("dimensions admit no exact sequence (forced ranks {:?})", c.ranks));
        }
        if let Some(s) = self.side_checks.iter().find(|s| !s.agree) {
            return Some(format!("{}: {:?} vs {:?}", s.name, s.left, s.right));
        }
        self.notes.iter().find(|n| n.starts_with("failed")).cloned()
    }
}

impl fmt::Display for ExactSequenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        let width = self.term_names.iter().map(|s| s.chars().count()).max().unwrap_or(0);
        for (k, name) in self.term_names.iter().enumerate() {
            let exact = match self.exact_at[k] {
                Some(true) => "exact",
                Some(false) => "NOT EXACT",
                None => "-",
            };
            let map = match self.maps.get(k) {
                Some(Some(m)) => format!("rank {}", m.rank),
                Some(None) => "not computed".to_string(),
                None if self.truncated => "truncated".to_string(),
                None => String::new(),
            };
            let pad = width - name.chars().count();
            writeln!(f, "  {name}{} {:>4}  {exact:<9}  {map}", " ".repeat(pad), self.term_dims[k])?;
        }
        if let Some(c) = &self.consistency {
            writeln!(f, "  dimension consistency: {} (ranks {:?})", if c.consistent { "yes" } else { "no" }, c.ranks)?;
        }
        for s in &self.side_checks {
            writeln!(f, "  {}: {:?} vs {:?} {}", s.name, s.left, s.right, if s.agree { "ok" } else { "MISMATCH" })?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        let status = match self.status {
            Status::Exact => "exact",
            Status::Consistent => "consistent",
            Status::Failed => "FAILED",
        };
        write!(f, "  status: {status}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::FieldSpec;

    #[test]
    fn consistency_examples() {
        assert_eq!(exactness_consistency(&[0, 1, 1, 0], true), Consistency { consistent: true, ranks: vec![0, 1, 0] });
        assert!(!exactness_consistency(&[0, 1, 0, 1, 0], true).consistent);
        assert_eq!(exactness_consistency(&[0, 2, 3, 1, 0], true).ranks, vec![0, 2, 1, 0]);
        assert!(exactness_consistency(&[1, 2], false).consistent);
        assert!(!exactness_consistency(&[1, 2], true).consistent);
    }

    #[test]
    fn short_exact_sequence_of_matrices() {
        let q = FieldSpec::Rationals;
        let inc = SparseMatrix::from_i64(q, &[vec![1], vec![0]]);
        let proj = SparseMatrix::from_i64(q, &[vec![0, 1]]);
        let terms = vec![("A".to_string(), 1), ("B".to_string(), 2), ("C".to_string(), 1)];
        let r = ExactSequenceReport::from_maps("ses", terms.clone(), vec![Some(inc.clone()), Some(proj)], false);
        assert!(r.is_exact());
        assert_eq!(r.exact_at, vec![Some(true); 3]);
        let bad = SparseMatrix::from_i64(q, &[vec![1, 0]]);
        let r = ExactSequenceReport::from_maps("bad", terms, vec![Some(inc), Some(bad)], false);
        assert_eq!(r.status, Status::Failed);
        assert!(!r.composites_zero);
        assert!(r.first_failure().is_some());
    }
}
