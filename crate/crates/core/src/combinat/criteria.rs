//! Combinatorial and dimension criteria for `I = AeA` to be homological.

use serde::Serialize;

use crate::algebra::{corner_modules, ideal_square, idempotent_ideal, make_path_algebra_quotient, multiplication_map};
use crate::cochain::tor_via_relative_bar;
use crate::error::Result;

use super::quiver::{Quiver, QuiverPresentation};

/// True iff no minimal relation passes through `e` strictly inside.
pub fn internal_vertex_criterion(pres: &QuiverPresentation, e: &str) -> Result<bool> {
    let q = pres.quiver();
    let v = q.vertex_index(e)?;
    Ok(pres
        .minimal_relations()
        .iter()
        .all(|r| r[..r.len() - 1].iter().all(|&a| q.target(a) != v)))
}

/// True iff no oriented cycle passes through `e`.
pub fn circuit_free_at(q: &Quiver, e: &str) -> Result<bool> {
    let v = q.vertex_index(e)?;
    let n = q.vertices().len();
    let mut seen = vec![false; n];
    let mut stack: Vec<usize> = q.arrows().iter().enumerate().filter(|(i, _)| q.source(*i) == v).map(|(i, _)| q.target(i)).collect();
    while let Some(u) = stack.pop() {
        if u == v {
            return Ok(false);
        }
        if std::mem::replace(&mut seen[u], true) {
            continue;
        }
        stack.extend((0..q.arrows().len()).filter(|&i| q.source(i) == u).map(|i| q.target(i)));
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    /// One of the sufficient criteria holds.
    Proved { criterion: String },
    /// No criterion applies but `Tor_q(B, B)` vanishes for `1 <= q <= q_max`.
    TorVanishesUpTo { q_max: usize },
    /// Some `Tor_q(B, B)` with `q >= 1` is nonzero.
    NotHomological { degree: usize },
}

impl Verdict {
    pub fn is_positive(&self) -> bool {
        !matches!(self, Verdict::NotHomological { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologicalIdealReport {
    pub vertex: String,
    pub internal_vertex: bool,
    pub circuit_free: bool,
    pub dim_ae: usize,
    pub dim_ea: usize,
    pub dim_aea: usize,
    /// `dim Ae · dim eA = dim AeA`, so `Ae ⊗ eA -> AeA` is bijective.
    pub projective: bool,
    pub dim_ideal: usize,
    pub dim_i_tensor_i: usize,
    pub mu_rank: usize,
    pub mu_iso: bool,
    /// `dim I/I²`.
    pub dim_i_mod_i2: usize,
    /// `dim Tor_q^A(B, B)` for `0 <= q <= q_max`.
    pub tor: Vec<usize>,
    pub verdict: Verdict,
}

pub fn homological_ideal_report(pres: &QuiverPresentation, e: &str, q_max: usize) -> Result<HomologicalIdealReport> {
    let q = pres.quiver();
    let v = q.vertex_index(e)?;
    let internal_vertex = internal_vertex_criterion(pres, e)?;
    let circuit_free = circuit_free_at(q, e)?;
    let alg = make_path_algebra_quotient(pres)?;
    let ev = alg.basis_vector(v);
    let corners = corner_modules(&alg, &ev)?;
    let ideal = idempotent_ideal(&alg, &ev)?;
    let (dim_ae, dim_ea, dim_aea) = (corners.ae_space.dim(), corners.ea_space.dim(), ideal.dim());
    let projective = dim_ae * dim_ea == dim_aea;
    let (tensor, mu) = multiplication_map(&alg, &ideal)?;
    let mu_rank = mu.rank();
    let mu_iso = tensor.dim() == ideal.dim() && mu_rank == ideal.dim();
    let dim_i_mod_i2 = ideal.dim() - ideal_square(&alg, &ideal).dim();
    let tor = tor_via_relative_bar(&alg, &ideal, q_max)?;

    let criterion = if internal_vertex {
        Some("internal vertex")
    } else if projective {
        Some("Ae ⊗ eA ≅ AeA")
    } else if circuit_free && mu_iso {
        Some("circuit free and I ⊗_A I ≅ I")
    } else {
        None
    };
    let verdict = match (criterion, (1..tor.len()).find(|&k| tor[k] != 0)) {
        (Some(c), _) => Verdict::Proved { criterion: c.to_string() },
        (None, Some(k)) => Verdict::NotHomological { degree: k },
        (None, None) => Verdict::TorVanishesUpTo { q_max },
    };
    Ok(HomologicalIdealReport {
        vertex: e.to_string(),
        internal_vertex,
        circuit_free,
        dim_ae,
        dim_ea,
        dim_aea,
        projective,
        dim_ideal: ideal.dim(),
        dim_i_tensor_i: tensor.dim(),
        mu_rank,
        mu_iso,
        dim_i_mod_i2,
        tor,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::Arrow;
    use crate::error::Error;
    use crate::exactmath::FieldSpec;

    fn arrow(n: &str, s: &str, t: &str) -> Arrow {
        Arrow { name: n.into(), src: s.into(), tgt: t.into() }
    }

    fn triangle() -> QuiverPresentation {
        let q = Quiver::new(
            vec!["1".into(), "2".into(), "3".into()],
            vec![arrow("α", "1", "2"), arrow("β", "2", "3"), arrow("γ", "3", "1")],
        )
        .unwrap();
        QuiverPresentation::new(q, vec![vec!["α".into(), "β".into()]], FieldSpec::Rationals).unwrap()
    }

    fn a2() -> QuiverPresentation {
        let q = Quiver::new(vec!["1".into(), "2".into()], vec![arrow("a", "1", "2")]).unwrap();
        QuiverPresentation::new(q, vec![], FieldSpec::Rationals).unwrap()
    }

    #[test]
    fn internal_vertices() {
        let t = triangle();
        assert!(internal_vertex_criterion(&t, "1").unwrap());
        assert!(!internal_vertex_criterion(&t, "2").unwrap());
        assert!(internal_vertex_criterion(&a2(), "2").unwrap());
        assert_eq!(internal_vertex_criterion(&t, "9"), Err(Error::UnknownVertex("9".into())));
    }

    #[test]
    fn circuits() {
        assert!(!circuit_free_at(triangle().quiver(), "2").unwrap());
        assert!(circuit_free_at(a2().quiver(), "1").unwrap());
        assert!(circuit_free_at(a2().quiver(), "2").unwrap());
        assert!(!circuit_free_at(&Quiver::crown(2), "1").unwrap());
    }

    #[test]
    fn triangle_reports() {
        let r1 = homological_ideal_report(&triangle(), "1", 4).unwrap();
        assert!(matches!(r1.verdict, Verdict::Proved { .. }));
        assert_eq!(&r1.tor[1..], &[0, 0, 0, 0]);
        let r2 = homological_ideal_report(&triangle(), "2", 2).unwrap();
        assert!(!r2.internal_vertex);
        assert_eq!(r2.dim_i_mod_i2, 0);
        assert_eq!(r2.tor[1], 0);
        assert!(!r2.mu_iso);
        assert_eq!(r2.tor[2], r2.dim_i_tensor_i - r2.mu_rank);
        assert!(matches!(r2.verdict, Verdict::NotHomological { degree: 2 }));
    }

    #[test]
    fn path_algebra_source_is_projective() {
        let r = homological_ideal_report(&a2(), "1", 3).unwrap();
        assert!(r.projective);
        assert!(r.verdict.is_positive());
        assert_eq!(&r.tor[1..], &[0, 0, 0]);
    }
}
