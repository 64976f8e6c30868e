//! Decision procedures and constructions of Morse matchings.
//!
//! * [`collapse`]: greedy and exhaustive collapsibility, relative collapses.
//! * [`nonevasive`]: exact non-evasiveness search with certificates.
//! * [`planar`]: collapse routines for 2-complexes that embed in the plane.
//! * [`sweep`]: perfect matchings on tight complexes from a height sweep.
//! * [`recognition`]: combinatorial surface and 3-manifold tests.

pub mod collapse;
pub mod nonevasive;
pub mod planar;
pub mod recognition;
pub mod sweep;

pub use collapse::{
    collapse_onto, collapsible, relative_collapse, CollapseError, CollapseSequence, CollapsibilityResult,
    NotCollapsibleReason, Strategy,
};
pub use nonevasive::{nonevasive, EvasiveReason, NonEvasiveResult, NonEvasivenessCertificate};
pub use planar::{planar_acyclic_nonevasive, planar_perfect_morse, PlanarError};
pub use sweep::{sweep_nonevasive, sweep_perfect_morse, SweepError, SweepOptions, SweepResult, SweepStep};
