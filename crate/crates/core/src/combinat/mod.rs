//! Quivers, posets, simplicial complexes and the combinatorial criteria for
//! homological ideals.

pub mod criteria;
pub mod poset;
pub mod quiver;
pub mod simplicial;

pub use criteria::{circuit_free_at, homological_ideal_report, internal_vertex_criterion, HomologicalIdealReport, Verdict};
pub use poset::Poset;
pub use quiver::{Arrow, Quiver, QuiverPresentation};
pub use simplicial::{order_complex, simplicial_cohomology, SimplicialComplex};
