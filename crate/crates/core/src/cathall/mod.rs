//! Groupoids of short exact sequences over the truncated representation
//! groupoid `A₀`, the `EXT` spans and the checks that compare them with the
//! Hall algebra and with each other.

pub mod base;
pub mod checks;
pub mod hexagon;
pub mod ses;
pub mod spans;
pub mod split;

pub use base::{build_a0, direct_sum, invert, AutGroup, RepGroupoid};
pub use ses::{
    act_on_cocycle, build_ext, cocycle_of, exact_pairs_direct, ext_class, pair_orbits, ExtGroupoid, ExtPiece,
    ExtSkeleton, SesObject,
};
pub use split::{glue_quot, glue_sub, pullback_along, pushout_quotient, split_quot, split_sub};
