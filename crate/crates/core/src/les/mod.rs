//! Long exact sequences assembled from computed cohomology and checked
//! for exactness.

pub mod crown;
pub mod five_term;
pub mod happel;
pub mod pair;
pub mod report;

pub use crown::{crown_check, CrownReport};
pub use five_term::{five_term_regular, five_term_report, flat_ideal_report};
pub use happel::{happel_report, happel_report_at_vertex, one_point_happel};
pub use pair::pair_report;
pub use report::{exactness_consistency, Consistency, ExactSequenceReport, MapData, SideCheck, Status};
