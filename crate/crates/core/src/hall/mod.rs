//! The Hall algebra of a quiver over `F_q` as a braided bialgebra in
//! K-graded vector spaces.

pub mod algebra;
pub mod antipode;
pub mod braided;
pub mod linear;

pub use algebra::{Factorization, HallAlgebra};
pub use antipode::{antipode_negation, AntipodeComparison, CanonicalAntipode, Divergence};
pub use linear::{HallTensor, HallTriple, HallVector, LinComb};
