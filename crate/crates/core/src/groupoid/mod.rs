//! Explicit finite groupoids: cardinality, functors, weak pullbacks, spans
//! and degroupoidification to rational matrices.

pub mod core;
pub mod equivalence;
pub mod functor;
pub mod json;
pub mod random;
pub mod span;

pub use self::core::{cyclic_table, permutations, Groupoid, IsoClassInfo};
pub use equivalence::{equivalent, equivalent_strict, groups_isomorphic, skeleton_orders, GROUP_ISO_LIMIT};
pub use functor::Functor;
pub use json::{
    functor_from_json, functor_to_json, groupoid_from_json, groupoid_to_json, span_from_json, span_to_json, GroupoidDoc,
};
pub use span::{degroupoidify_span, degroupoidify_vector, scale_over, sum_over, weak_pullback, Span, WeakPullback};
