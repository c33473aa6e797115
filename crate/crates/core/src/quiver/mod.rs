//! Quivers, their representations over `F_p`, Hom and Ext¹, isomorphism
//! classes and extension counts.

pub mod classify;
pub mod extension;
pub mod hom;
#[allow(clippy::module_inception)]
pub mod quiver;
pub mod rep;
pub mod roots;

pub use classify::{classify, ClassId, ClassTable, IsoClass};
pub use extension::{
    count_exact_pairs, count_exact_pairs_slow, middle_term, preimage, quotient, quotient_by_spans, subrepresentation,
    subrepresentations, zero_cocycle, Quotient, ShortExact,
};
pub use hom::{aut_order, euler_form_of, ext1_dim, hom_basis, hom_dim, is_isomorphic, ExtSpace, HomSpace};
pub use quiver::{DimVector, DynkinType, Quiver};
pub use rep::{summand_injection, summand_projection, RepMorphism, Representation};
pub use roots::{indecomposable_counts, is_indecomposable, positive_roots};

#[cfg(test)]
mod properties {
    use std::sync::Arc;

    use proptest::prelude::*;

    use super::*;
    use crate::exactmath::{Budget, PrimeField};

    fn dims(n: usize) -> impl Strategy<Value = DimVector> {
        proptest::collection::vec(0usize..=5, n).prop_map(DimVector)
    }

    proptest! {
        #[test]
        fn euler_form_is_bilinear(m1 in dims(3), m2 in dims(3), n in dims(3)) {
            for q in [Quiver::linear_a(3), Quiver::new(3, vec![(1, 0), (1, 2)]).unwrap()] {
                let sum = &m1 + &m2;
                prop_assert_eq!(
                    q.euler_form(&sum, &n).unwrap(),
                    q.euler_form(&m1, &n).unwrap() + q.euler_form(&m2, &n).unwrap()
                );
                prop_assert_eq!(
                    q.euler_form(&n, &sum).unwrap(),
                    q.euler_form(&n, &m1).unwrap() + q.euler_form(&n, &m2).unwrap()
                );
            }
        }
    }

    #[test]
    fn euler_form_matches_hom_minus_ext() {
        let b = Budget::default();
        for (quiver, p) in [
            (Quiver::linear_a(2), 2u64),
            (Quiver::linear_a(2), 3),
            (Quiver::linear_a(3), 2),
            (Quiver::linear_a(3), 3),
        ] {
            let q = Arc::new(quiver);
            let f = PrimeField::new(p).unwrap();
            let witnesses: Vec<IsoClass> = q
                .dims_up_to(4)
                .iter()
                .flat_map(|d| classify(&q, f, d, b).unwrap())
                .collect();
            for m in &witnesses {
                for n in &witnesses {
                    if m.id.dim.total() + n.id.dim.total() > 4 {
                        continue;
                    }
                    let expected = q.euler_form(&m.id.dim, &n.id.dim).unwrap();
                    assert_eq!(euler_form_of(&m.rep, &n.rep).unwrap(), expected, "{} {}", m.id, n.id);
                    for phi in hom_basis(&m.rep, &n.rep).unwrap() {
                        assert!(phi.commutes());
                    }
                }
            }
        }
    }
}
