//! Finite-dimensional algebras by structure constants, their modules and
//! bimodules, and the standard constructions on them.

pub mod bimodule;
pub mod constructors;
pub mod ops;
pub mod structure;

pub use bimodule::{Bimodule, LeftModule, SubBimodule};
pub use constructors::{
    make_incidence, make_monogenic, make_one_point_extension, make_path_algebra_quotient,
    make_path_algebra_quotient_capped, make_truncated_cycle, PATH_CAP,
};
pub use ops::{
    as_ideal, basis_section, center, corner_modules, ideal_generated_by, ideal_square,
    idempotent_ideal, multiplication_map, quotient_algebra, singular_extension_cocycle,
    tensor_over_a, CornerModules, SingularExtension, TensorOverA,
};
pub use structure::FinDimAlgebra;
