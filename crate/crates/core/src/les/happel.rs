//! Happel's sequence: the coefficient sequence of `0 -> AeA -> A -> B -> 0`,
//! and its one-point-extension form.

use crate::algebra::{
    center, corner_modules, idempotent_ideal, make_one_point_extension, quotient_algebra, Bimodule, FinDimAlgebra,
    LeftModule, SubBimodule,
};
use crate::cochain::{coefficient_map, hh_dims, onesided_ext, tor_via_relative_bar, Cohomology, ConnectingMap};
use crate::combinat::{homological_ideal_report, QuiverPresentation, Verdict};
use crate::error::{Error, Result};
use crate::exactmath::{SparseMatrix, SparseVec};

use super::report::{ExactSequenceReport, SideCheck};

/// Dimensions and maps of `H^*(A, I) -> HH^*(A) -> H^*(A, A/I)` with the
/// connecting maps, for `p <= p_max`.
pub(crate) fn coefficient_sequence(
    alg: &FinDimAlgebra,
    ideal: &SubBimodule,
    p_max: usize,
    title: &str,
    names: [&str; 3],
) -> Result<(ExactSequenceReport, [Vec<usize>; 3])> {
    let field = alg.field();
    let space = ideal.space();
    let regular = Bimodule::regular(alg);
    let sub = regular.sub(space)?;
    let quot = regular.quotient(space)?;
    let iota = SparseMatrix::from_columns(field, alg.dim(), &space.basis_dense());
    let pi = {
        let cols: Vec<_> = (0..alg.dim())
            .map(|i| crate::exactmath::sparse_to_dense(field, &space.quotient_coords(&alg.basis_vector(i)), quot.dim()))
            .collect();
        SparseMatrix::from_columns(field, quot.dim(), &cols)
    };
    let h_sub = Cohomology::new(alg, &sub, p_max)?;
    let h_mid = Cohomology::new(alg, &regular, p_max)?;
    let h_quot = Cohomology::new(alg, &quot, p_max)?;
    let delta = ConnectingMap { sub: &h_sub, mid: &h_mid, quotient: &h_quot, mid_module: &regular, iota: &iota, pi: &pi };
    let dims = [h_sub.dims(), h_mid.dims(), h_quot.dims()];
    let mut terms = Vec::new();
    let mut maps = Vec::new();
    for p in 0..=p_max {
        for (k, name) in names.iter().enumerate() {
            terms.push((format!("{name}^{p}"), dims[k][p]));
        }
        maps.push(Some(coefficient_map(&h_sub, &h_mid, &iota, p)?));
        maps.push(Some(coefficient_map(&h_mid, &h_quot, &pi, p)?));
        if p < p_max {
            maps.push(Some(delta.matrix(p)?));
        }
    }
    Ok((ExactSequenceReport::from_maps(title, terms, maps, true), dims))
}

fn happel_with_tor(alg: &FinDimAlgebra, e: &SparseVec, p_max: usize, tor: Option<Vec<usize>>) -> Result<ExactSequenceReport> {
    let ideal = idempotent_ideal(alg, e)?;
    let tor = match tor {
        Some(t) => t,
        None => tor_via_relative_bar(alg, &ideal, p_max)?,
    };
    if let Some(q) = (1..tor.len()).find(|&q| tor[q] != 0) {
        return Err(Error::NotHomological(format!("Tor_{q}(B, B) has dimension {}", tor[q])));
    }
    let (report, [h_i, _, h_b]) =
        coefficient_sequence(alg, &ideal, p_max, "Happel sequence", ["H(A,I)", "HH(A)", "H(A,B)"])?;
    let hh_b = if ideal.dim() == alg.dim() {
        vec![0; p_max + 1]
    } else {
        hh_dims(&quotient_algebra(alg, &ideal)?.0, p_max)?
    };
    let corners = corner_modules(alg, e)?;
    let z_cap_i = center(alg).intersect(&ideal).dim();
    let mut report = report
        .with_side_check(SideCheck::new("H(A,B) = HH(B)", h_b, hh_b))
        .with_side_check(SideCheck::new("H^0(A,I) = Z(A)∩I", vec![h_i[0]], vec![z_cap_i]));
    // H(A, Ae ⊗ eA) = Ext_A(D(eA), Ae) needs I to be that projective bimodule
    if corners.ae_space.dim() * corners.ea_space.dim() == ideal.dim() {
        let ext = onesided_ext(alg, &corners.d_ea, &corners.ae, p_max)?;
        report = report.with_side_check(SideCheck::new("H(A,I) = Ext_A(D(eA),Ae)", h_i.clone(), ext));
    } else {
        report = report.with_note("AeA is not Ae ⊗ eA; the Ext_A(D(eA),Ae) comparison does not apply");
    }
    if ideal.dim() == alg.dim() {
        report = report.with_note("I = A: B = 0 and H(A,I) = HH(A)");
    }
    Ok(report)
}

/// The Happel sequence for `I = AeA`, refused when some `Tor_q(B, B)`
/// with `1 <= q <= p_max` is nonzero.
pub fn happel_report(alg: &FinDimAlgebra, e: &SparseVec, p_max: usize) -> Result<ExactSequenceReport> {
    happel_with_tor(alg, e, p_max, None)
}

/// The Happel sequence at a vertex of a quiver presentation, gated on the
/// homological-ideal verdict.
pub fn happel_report_at_vertex(pres: &QuiverPresentation, vertex: &str, p_max: usize, q_max: usize) -> Result<ExactSequenceReport> {
    let verdict = homological_ideal_report(pres, vertex, q_max)?;
    if let Verdict::NotHomological { degree } = verdict.verdict {
        return Err(Error::NotHomological(format!("Tor_{degree}(B, B) = {}", verdict.tor[degree])));
    }
    let alg = crate::algebra::make_path_algebra_quotient(pres)?;
    let e = alg.basis_vector(pres.quiver().vertex_index(vertex)?);
    let mut tor = verdict.tor.clone();
    tor.resize(p_max + 1, 0);
    let tor = if q_max >= p_max { Some(tor) } else { None };
    let report = happel_with_tor(&alg, &e, p_max, tor)?;
    Ok(match verdict.verdict {
        Verdict::Proved { criterion } => report.with_note(format!("homological: {criterion}")),
        _ => report.with_note(format!("bounded: Tor vanishes up to degree {q_max}")),
    })
}

/// Happel's sequence for the one-point extension `A = (B M; 0 k)`:
/// `0 -> HH^0(A) -> HH^0(B) -> End_B(M)/k -> HH^1(A) -> HH^1(B) -> Ext^1_B(M,M) -> HH^2(A) -> ...`,
/// judged on dimensions, together with the corner identifications.
pub fn one_point_happel(b: &FinDimAlgebra, m: &LeftModule, p_max: usize) -> Result<ExactSequenceReport> {
    if m.dim() == 0 {
        return Err(Error::BadParameters("the module of a one-point extension must be nonzero".into()));
    }
    let (a, e_index) = make_one_point_extension(b, m);
    let nb = b.dim();
    let field = b.field();
    let phi = SparseMatrix::from_triplets(field, nb, a.dim(), (0..nb).map(|i| (i, i, field.one())));
    let m_over_a = m.pullback(&phi);
    let corners = corner_modules(&a, &a.basis_vector(e_index))?;

    let hh_a = hh_dims(&a, p_max)?;
    let hh_b = hh_dims(b, p_max)?;
    let ext_b = onesided_ext(b, m, m, p_max)?;
    let ext_corner = onesided_ext(&a, &corners.d_ea, &corners.ae, p_max)?;
    let ext_m_ae = onesided_ext(&a, &m_over_a, &corners.ae, p_max)?;

    let mut terms = Vec::new();
    for p in 0..=p_max {
        terms.push((format!("HH(A)^{p}"), hh_a[p]));
        terms.push((format!("HH(B)^{p}"), hh_b[p]));
        if p == 0 {
            terms.push(("End_B(M)/k".to_string(), ext_b[0] - 1));
        } else {
            terms.push((format!("Ext_B(M,M)^{p}"), ext_b[p]));
        }
    }
    let shifted: Vec<usize> = (1..=p_max)
        .map(|p| if p == 1 { ext_m_ae[0] - 1 } else { ext_m_ae[p - 1] })
        .collect();
    Ok(ExactSequenceReport::from_dims("one-point Happel sequence", terms, true)
        .with_side_check(SideCheck::new("hom_A(D(eA),Ae) = 0", vec![ext_corner[0]], vec![0]))
        .with_side_check(SideCheck::new(
            "Ext^p_A(D(eA),Ae) = Ext^{p-1}_A(M,Ae), with hom_A(M,Ae)/k at p = 1",
            ext_corner[1..].to_vec(),
            shifted,
        ))
        .with_side_check(SideCheck::new("Ext_A(M,Ae) = Ext_B(M,M)", ext_m_ae, ext_b)))
}
