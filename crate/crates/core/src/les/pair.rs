//! Incidence algebras of a poset and an order ideal, against the cohomology
//! of the pair of order complexes.

use std::collections::BTreeSet;

use crate::algebra::{as_ideal, make_incidence};
use crate::cochain::hh_dims;
use crate::combinat::{order_complex, simplicial_cohomology, Poset};
use crate::error::{Error, Result};
use crate::exactmath::{FieldSpec, Subspace};

use super::happel::coefficient_sequence;
use super::report::{exactness_consistency, ExactSequenceReport, SideCheck};

/// The sequence `H^p(kX, I_Y) -> HH^p(kX) -> HH^p(kY) -> H^{p+1}(kX, I_Y)`
/// of `0 -> I_Y -> kX -> kY -> 0`, compared term by term with the sequence of
/// the pair `(|X|, |Y|)`.
pub fn pair_report(x: &Poset, y: &[String], p_max: usize, field: FieldSpec) -> Result<ExactSequenceReport> {
    if !x.is_order_ideal(y)? {
        return Err(Error::NotAnOrderIdeal(y.join(",")));
    }
    let y_idx: BTreeSet<usize> = x.indices_of(y)?.into_iter().collect();
    let y_sorted: Vec<usize> = y_idx.iter().copied().collect();
    let kx = make_incidence(x, field);
    let outside: Vec<_> = x
        .intervals()
        .iter()
        .enumerate()
        .filter(|(_, (_, top))| !y_idx.contains(top))
        .map(|(k, _)| vec![(k, field.one())])
        .collect();
    let ideal = as_ideal(&kx, Subspace::from_sparse(field, kx.dim(), outside))?;
    let (report, [h_rel, h_x, h_y]) =
        coefficient_sequence(&kx, &ideal, p_max, "incidence pair sequence", ["H(kX,I_Y)", "HH(kX)", "H(kX,kY)"])?;

    let sub = x.restrict(&y_sorted);
    let hh_y = if sub.is_empty() { vec![0; p_max + 1] } else { hh_dims(&make_incidence(&sub, field), p_max)? };
    let kc = order_complex(x);
    let lc = order_complex(&sub);
    let top_x = simplicial_cohomology(&kc, None, p_max, field)?;
    let top_y = simplicial_cohomology(&lc, None, p_max, field)?;
    let top_rel = simplicial_cohomology(&kc, Some(&lc), p_max, field)?;

    let topological: Vec<usize> = (0..=p_max).flat_map(|p| [top_rel[p], top_x[p], top_y[p]]).collect();
    let topo_consistent = exactness_consistency(&topological, false).consistent;
    let terminates = kc.dimension().map_or(true, |d| d <= p_max);
    let alternating: i64 = (0..=p_max)
        .map(|p| {
            let s = h_x[p] as i64 - hh_y[p] as i64 - top_rel[p] as i64;
            if p % 2 == 0 { s } else { -s }
        })
        .sum();
    let mut report = report
        .with_side_check(SideCheck::new("HH(kX) = H(|X|)", h_x, top_x))
        .with_side_check(SideCheck::new("HH(kY) = H(|Y|)", hh_y.clone(), top_y))
        .with_side_check(SideCheck::new("H(kX,kY) = HH(kY)", h_y, hh_y))
        .with_side_check(SideCheck::new("H(kX,I_Y) = H(|X|,|Y|)", h_rel, top_rel))
        .require(topo_consistent, "the pair sequence of (|X|,|Y|) admits exactness");
    if terminates {
        report = report.require(alternating == 0, "alternating sum vanishes");
    } else {
        report = report.with_note("alternating sum not checked: |X| has cells above p_max");
    }
    Ok(report)
}
