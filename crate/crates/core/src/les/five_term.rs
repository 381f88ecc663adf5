//! The five-term sequence of a surjection `A -> B = A/I`, and the long
//! sequence for an ideal that is flat on one side.

use crate::algebra::bimodule::vector_to_matrix;
use crate::algebra::{
    as_ideal, corner_modules, ideal_square, idempotent_ideal, quotient_algebra, singular_extension_cocycle, Bimodule,
    FinDimAlgebra, SubBimodule,
};
use crate::cochain::{bimodule_ext, pullback_on, Cochain, Cohomology};
use crate::error::{Error, Result};
use crate::exactmath::{sparse_axpy, sparse_to_dense, SparseMatrix, SparseVec, Subspace};

use super::report::{ExactSequenceReport, SideCheck};

/// `I^2` inside `I`, in the echelon coordinates of `I`.
fn square_in_ideal(alg: &FinDimAlgebra, ideal: &SubBimodule) -> Subspace {
    let space = ideal.space();
    let sq = ideal_square(alg, ideal)
        .basis_sparse()
        .iter()
        .map(|v| space.coords_sparse(v).expect("I^2 lies in I"))
        .collect();
    Subspace::from_sparse(alg.field(), space.dim(), sq)
}

/// `0 -> H^1(B,M) -> H^1(A,M) -> hom_{B^e}(I/I^2, M) -> H^2(B,M) -> H^2(A,M)`
/// for a `B`-bimodule `M`, where `B` is [`quotient_algebra`]`(A, I)`.
pub fn five_term_report(alg: &FinDimAlgebra, ideal: &SubBimodule, m: &Bimodule) -> Result<ExactSequenceReport> {
    let field = alg.field();
    let (b, phi) = quotient_algebra(alg, ideal)?;
    m.check(&b)?;
    let m_a = m.pullback(&phi);
    let hb = Cohomology::new(&b, m, 2)?;
    let ha = Cohomology::new(alg, &m_a, 2)?;
    let inf1 = pullback_on(&hb, &ha, &phi, 1)?;
    let inf2 = pullback_on(&hb, &ha, &phi, 2)?;

    let sing = singular_extension_cocycle(alg, ideal, &b, &phi)?;
    let quotient_module = &sing.module;
    let homs = quotient_module.bimodule_homs(m);
    let nq = quotient_module.dim();
    let dm = m.dim();

    // representatives in A of the basis of I/I^2
    let sq = square_in_ideal(alg, ideal);
    let reps: Vec<SparseVec> = sq
        .complement_columns()
        .iter()
        .map(|&c| ideal.space().basis_sparse()[c].clone())
        .collect();
    let acx = ha.complex();
    let shape = acx.shape();
    let evaluate = |f: &Cochain, x: &SparseVec| -> SparseVec {
        let mut out = Vec::new();
        for (r, c) in shape.project(x) {
            out = sparse_axpy(&out, &c, &acx.value(f, &[r as u32]));
        }
        out
    };
    let res_cols = ha
        .space(1)
        .representatives()
        .iter()
        .map(|f| {
            let mut flat = Vec::new();
            for (k, x) in reps.iter().enumerate() {
                for (row, c) in evaluate(f, x) {
                    flat.push((row * nq + k, c));
                }
            }
            flat.sort_by_key(|e| e.0);
            homs.coords_sparse(&flat).map(|v| sparse_to_dense(field, &v, homs.dim()))
        })
        .collect::<Option<Vec<_>>>()
        .ok_or(Error::NotABimoduleMap)?;
    let res = SparseMatrix::from_columns(field, homs.dim(), &res_cols);

    // g -> g ∘ α
    let bcx = hb.complex();
    let bshape = bcx.shape();
    let mut cocycles_ok = true;
    let conn_cochains: Vec<Cochain> = homs
        .basis_dense()
        .iter()
        .map(|g| {
            let g = vector_to_matrix(field, dm, nq, g);
            let c = bcx.cochain_from_fn(2, |chain| {
                let (x, y) = (bshape.element(chain[0] as usize), bshape.element(chain[1] as usize));
                let mut alpha = Vec::new();
                for (i, ci) in x {
                    for (j, cj) in y {
                        alpha = sparse_axpy(&alpha, &(ci * cj), &sing.values[*i][*j]);
                    }
                }
                g.mul_sparse_vec(&alpha)
            });
            cocycles_ok &= bcx.apply_differential(&c).is_zero();
            c
        })
        .collect();
    let conn = hb.classes(2, &conn_cochains)?;

    // inner derivations [m, -] vanish on I, since I acts by zero on M
    let inner_ok = ideal.space().basis_sparse().iter().all(|x| {
        let image = phi.mul_sparse_vec(x);
        (0..dm).all(|k| {
            let v = vec![(k, field.one())];
            m.left_by(&image).mul_sparse_vec(&v) == m.right_by(&image).mul_sparse_vec(&v)
        })
    });

    let terms = vec![
        ("H^1(B,M)".to_string(), hb.space(1).dim()),
        ("H^1(A,M)".to_string(), ha.space(1).dim()),
        ("hom(I/I^2,M)".to_string(), homs.dim()),
        ("H^2(B,M)".to_string(), hb.space(2).dim()),
        ("H^2(A,M)".to_string(), ha.space(2).dim()),
    ];
    Ok(ExactSequenceReport::from_maps(
        "five-term sequence",
        terms,
        vec![Some(inf1), Some(res), Some(conn), Some(inf2)],
        true,
    )
    .require(cocycles_ok, "g ∘ α is a cocycle")
    .require(inner_ok, "inner derivations vanish on I")
    .require(sing.is_cocycle(&b), "α is a Hochschild cocycle"))
}

/// The five-term sequence with `M = B`.
pub fn five_term_regular(alg: &FinDimAlgebra, ideal: &SubBimodule) -> Result<ExactSequenceReport> {
    let (b, _) = quotient_algebra(alg, ideal)?;
    five_term_report(alg, ideal, &Bimodule::regular(&b))
}

/// `... -> H^p(B,M) -> H^p(A,M) -> Ext^{p-1}_{B^e}(I/I^2,M) -> H^{p+1}(B,M) -> ...`
/// for `I = AeA` flat as a left module (certified by `AeA ≅ Ae ⊗ eA`) or
/// `I = 0` (`e = None`). `M` defaults to `B`.
pub fn flat_ideal_report(alg: &FinDimAlgebra, e: Option<&SparseVec>, m: Option<&Bimodule>, p_max: usize) -> Result<ExactSequenceReport> {
    if p_max == 0 {
        return Err(Error::BadParameters("the flat-ideal sequence starts in degree 1".into()));
    }
    let field = alg.field();
    let (ideal, note) = match e {
        None => (as_ideal(alg, Subspace::zero(field, alg.dim()))?, "I = 0"),
        Some(e) => {
            let ideal = idempotent_ideal(alg, e)?;
            let c = corner_modules(alg, e)?;
            if c.ae_space.dim() * c.ea_space.dim() != ideal.dim() {
                return Err(Error::FlatnessNotEstablished);
            }
            (ideal, "AeA ≅ Ae ⊗ eA is projective on the left")
        }
    };
    if ideal.dim() == alg.dim() {
        return Err(Error::BadParameters("I = A leaves B = 0".into()));
    }
    let (b, phi) = quotient_algebra(alg, &ideal)?;
    let regular_b = Bimodule::regular(&b);
    let m = m.unwrap_or(&regular_b);
    m.check(&b)?;
    let hb = Cohomology::new(&b, m, p_max)?;
    let ha = Cohomology::new(alg, &m.pullback(&phi), p_max)?;
    let sing = singular_extension_cocycle(alg, &ideal, &b, &phi)?;
    let ext = bimodule_ext(&b, &sing.module, m, p_max.saturating_sub(1))?;
    let (db, da) = (hb.dims(), ha.dims());

    let mut terms = Vec::new();
    let mut maps = Vec::new();
    for p in 1..=p_max {
        terms.push((format!("H^{p}(B,M)"), db[p]));
        terms.push((format!("H^{p}(A,M)"), da[p]));
        maps.push(Some(pullback_on(&hb, &ha, &phi, p)?));
        if p < p_max {
            terms.push((format!("Ext^{}(I/I^2,M)", p - 1), ext[p - 1]));
            maps.push(None);
            maps.push(None);
        }
    }
    Ok(ExactSequenceReport::from_maps("flat-ideal sequence", terms, maps, true)
        .with_side_check(SideCheck::new("H^0(B,M) = H^0(A,M)", vec![db[0]], vec![da[0]]))
        .with_note(note))
}
