//! Structure checks for the truncated cycle algebras.

use std::fmt;

use serde::Serialize;

use crate::algebra::{make_path_algebra_quotient, make_truncated_cycle, Bimodule};
use crate::cochain::{cup, hh_dims, Cohomology};
use crate::combinat::QuiverPresentation;
use crate::error::{Error, Result};
use crate::exactmath::FieldSpec;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrownReport {
    pub n: usize,
    pub m: usize,
    /// Length of the relations, `nm`: the length at which `t^l` commutes
    /// with every arrow, so the twisting automorphism is the identity.
    pub l: usize,
    pub dim: usize,
    pub dims: Vec<usize>,
    /// `dim HH^{p+2} = dim HH^p` for `1 <= p <= p_max - 2`.
    pub periodic: bool,
    pub hh0_equals_hh2: bool,
    /// Pairs of degree-one representatives whose cup product was tested.
    pub odd_pairs: usize,
    pub odd_products_cobound: bool,
    /// `HH` dims of the truncated cycle algebra with relations of length
    /// `nm - 1`, where the twist is a rotation; informational only.
    pub shifted_dims: Vec<usize>,
}

impl CrownReport {
    pub fn passed(&self) -> bool {
        self.periodic && self.hh0_equals_hh2 && self.odd_products_cobound
    }

    pub fn first_failure(&self) -> Option<String> {
        if !self.periodic {
            return Some(format!("dimensions {:?} are not 2-periodic from degree 1", self.dims));
        }
        if !self.hh0_equals_hh2 {
            return Some(format!("HH^0 = {} but HH^2 = {}", self.dims[0], self.dims[2]));
        }
        if !self.odd_products_cobound {
            return Some("a product of two degree-one classes is nonzero".into());
        }
        None
    }
}

impl fmt::Display for CrownReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yes = |b: bool| if b { "yes" } else { "NO" };
        writeln!(f, "truncated cycle algebra n = {}, m = {}, l = {}, dim = {}", self.n, self.m, self.l, self.dim)?;
        writeln!(f, "  HH dims: {:?}", self.dims)?;
        writeln!(f, "  periodic from degree 1: {}", yes(self.periodic))?;
        writeln!(f, "  HH^0 = HH^2: {}", yes(self.hh0_equals_hh2))?;
        writeln!(f, "  odd products vanish ({} pairs): {}", self.odd_pairs, yes(self.odd_products_cobound))?;
        write!(f, "  relations of length nm - 1 (twisted): HH dims {:?}", self.shifted_dims)
    }
}

pub fn crown_check(n: usize, m: usize, p_max: usize, field: FieldSpec) -> Result<CrownReport> {
    if n < 2 || m < 1 || n * m < 3 {
        return Err(Error::BadParameters(format!("need n >= 2, m >= 1 and nm - 1 >= 2, got n = {n}, m = {m}")));
    }
    if p_max < 2 {
        return Err(Error::BadParameters("crown checks need p_max >= 2".into()));
    }
    let l = n * m;
    let b = make_path_algebra_quotient(&QuiverPresentation::truncated_crown(n, l, field)?)?;
    let h = Cohomology::new(&b, &Bimodule::regular(&b), p_max)?;
    let dims = h.dims();
    let periodic = (1..=p_max - 2).all(|p| dims[p + 2] == dims[p]);
    let reps = h.space(1).representatives();
    let cx = h.complex();
    let mut odd_products_cobound = true;
    let mut odd_pairs = 0;
    for f in reps {
        for g in reps {
            odd_pairs += 1;
            if !cx.is_coboundary(&cup(&b, cx, f, g))? {
                odd_products_cobound = false;
            }
        }
    }
    Ok(CrownReport {
        n,
        m,
        l,
        dim: b.dim(),
        hh0_equals_hh2: dims[0] == dims[2],
        dims,
        periodic,
        odd_pairs,
        odd_products_cobound,
        shifted_dims: hh_dims(&make_truncated_cycle(n, m, field)?, p_max)?,
    })
}
