//! Explicit finite categories, functors between them, arrow-class detectors
//! and brute-force (co)limits.

mod category;
mod concrete;
mod functor;
mod json;
pub mod props;
mod set;
pub mod small;
pub mod universal;

pub use category::{Arrow, ArrowId, BuildOptions, FiniteCategory, ObjId, ValidationReport, Violation, DEFAULT_ARROW_BUDGET};
pub use concrete::{ConcreteCategory, MapArrow};
pub use functor::{compose_functors, Functor, FunctorViolation};
pub use json::{validate_category, ArrowEntry, CategoryData, ComposeEntry};
pub use props::{
    is_epic, is_iso, is_left_orthogonal, is_monic, is_regular_epic, is_regular_monic, is_split_epic, is_split_monic,
    is_strong_epic, is_strong_monic,
};
pub use set::ArrowSet;
pub use universal::{
    cokernel_pair, coimage, find_universal, image, is_regular, kernel_pair, regular_comparison, Cone, Diagram,
    UniversalData, UniversalKind, UniversalResult,
};
