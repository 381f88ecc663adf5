//! Tor and one-sided Ext through the same relative complexes.

use crate::algebra::{Bimodule, FinDimAlgebra, LeftModule, SubBimodule};
use crate::error::Result;

use super::complex::hochschild_dims;

/// Dimensions of `Tor_q^A(B, B)` for `B = A/I` and `0 <= q <= q_max`.
///
/// `Tor^A(B, B)` is the Hochschild homology of `A` with coefficients in
/// `B ⊗_k B`; its dual is computed as cohomology with coefficients in the
/// dual bimodule.
pub fn tor_via_relative_bar(alg: &FinDimAlgebra, ideal: &SubBimodule, q_max: usize) -> Result<Vec<usize>> {
    let b = Bimodule::regular(alg).quotient(ideal.space())?;
    if b.dim() == 0 {
        return Ok(vec![0; q_max + 1]);
    }
    let coeffs = Bimodule::tor_coefficients(&b, &b).dual();
    hochschild_dims(alg, &coeffs, q_max)
}

/// Dimensions of `Ext_A^p(M, N) = H^p(A, hom_k(M, N))` for left modules.
pub fn onesided_ext(alg: &FinDimAlgebra, m: &LeftModule, n: &LeftModule, p_max: usize) -> Result<Vec<usize>> {
    if m.dim() == 0 || n.dim() == 0 {
        return Ok(vec![0; p_max + 1]);
    }
    hochschild_dims(alg, &Bimodule::hom_k(m, n), p_max)
}

/// Dimensions of `Ext_{B^e}^p(X, M)` for `B`-bimodules `X` and `M`.
pub fn bimodule_ext(b: &FinDimAlgebra, x: &Bimodule, m: &Bimodule, p_max: usize) -> Result<Vec<usize>> {
    if x.dim() == 0 || m.dim() == 0 {
        return Ok(vec![0; p_max + 1]);
    }
    onesided_ext(&b.enveloping(), &x.as_enveloping_module(), &m.as_enveloping_module(), p_max)
}
