//! Relative bar cochain complexes and the operations computed on them.

pub mod complex;
pub mod derived;
pub mod maps;
pub mod products;

pub use complex::{
    differential_squares_to_zero, graded_elimination, hh_dims, hochschild_cohomology, hochschild_dims,
    invariants, AdaptedModule, BarShape, Cochain, CohomologyResult, CohomologySpace,
    HochschildComplex, DEFAULT_CAP,
};
pub use derived::{bimodule_ext, onesided_ext, tor_via_relative_bar};
pub use maps::{
    check_pullback_compatible, coefficient_map, induced_coefficient_map, left_inverse, pullback_cochain,
    pullback_map, pullback_on, push_values, Cohomology, ConnectingMap,
};
pub use products::{compose, compose_at, cup, element_cochain, gerstenhaber_bracket, left_multiply};
