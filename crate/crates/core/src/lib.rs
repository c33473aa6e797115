//! Exact Hall algebras of quiver representations over prime fields, and the
//! groupoid machinery that categorifies them.
//!
//! The crate is layered bottom-up:
//!
//! - [`exactmath`]: `F_p`, exact rationals, dense Gaussian elimination.
//! - [`quiver`]: quivers, representations, Hom/Ext, classification.
//! - [`hall`]: the Hall algebra as a braided bialgebra in K-graded spaces.
//! - [`groupoid`]: finite groupoids, spans, weak pullbacks, degroupoidification.
//! - [`cathall`]: short exact sequence groupoids, `EXT`, braiding spans and
//!   the coherence checks built on them.
//! - [`cli`]: the verification harness behind the `hallgpd` binary.

pub mod cathall;
pub mod cli;
pub mod error;
pub mod exactmath;
pub mod groupoid;
pub mod hall;
pub mod quiver;
pub mod report;

pub use error::{Error, Result};
