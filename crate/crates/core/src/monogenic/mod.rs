//! Closed-form Hochschild theory of `k[X]/(f)`.

pub mod coefficients;
pub mod normal_form;
pub mod presentation;
pub mod verify;

pub use coefficients::{companion, hh_with_coefficients, periodic_complex_dims, x_actions};
pub use normal_form::{bracket_normal_form, cup_normal_form, HHElement};
pub use presentation::{hh_dims, presentation, MonogenicPresentation, PresentationSummary};
pub use verify::{tau_cochain, verify_presentation_in_oracle, zeta_cochain, OracleReport, Orientation};
