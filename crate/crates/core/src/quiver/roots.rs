use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactmath::{Budget, PrimeField};
use crate::quiver::classify::ClassTable;
use crate::quiver::hom::HomSpace;
use crate::quiver::quiver::{DimVector, Quiver};
use crate::quiver::rep::Representation;

/// Positive roots of a Dynkin quiver: nonzero `d` with Tits form `⟨d,d⟩ = 1`.
///
/// Ordered by total dimension, then lexicographically descending as in
/// [`Quiver::dims_with_total`].
pub fn positive_roots(quiver: &Quiver) -> Result<Vec<DimVector>> {
    if !quiver.is_dynkin() {
        return Err(Error::NotDynkin);
    }
    let bound = quiver.root_coefficient_bound();
    let mut roots = Vec::new();
    for total in 1..=bound * quiver.vertex_count() {
        for d in quiver.dims_with_total(total) {
            if d.0.iter().all(|&x| x <= bound) && quiver.euler_form(&d, &d)? == 1 {
                roots.push(d);
            }
        }
    }
    Ok(roots)
}

/// Nonzero and `End(M)` has no idempotents besides `0` and `1`.
pub fn is_indecomposable(m: &Representation, budget: Budget) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    let end = HomSpace::new(m, m)?;
    for e in end.elements(budget)? {
        if e.is_zero() || e.is_iso() {
            continue;
        }
        if e.then(&e)? == e {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Indecomposable classes of every dimension vector with entries at most
/// `bound`, as `(dimension vector, class count)` pairs.
pub fn indecomposable_counts(
    quiver: &Arc<Quiver>,
    field: PrimeField,
    bound: usize,
    budget: Budget,
) -> Result<Vec<(DimVector, usize)>> {
    let mut out = Vec::new();
    for total in 1..=bound * quiver.vertex_count() {
        for d in quiver.dims_with_total(total) {
            if d.0.iter().any(|&x| x > bound) {
                continue;
            }
            let table = ClassTable::classify(quiver, field, &d, budget)?;
            let mut count = 0;
            for class in table.classes() {
                if is_indecomposable(&class.rep, budget)? {
                    count += 1;
                }
            }
            if count > 0 {
                out.push((d, count));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_small_types() {
        let a2 = Quiver::linear_a(2);
        let r: Vec<String> = positive_roots(&a2).unwrap().iter().map(ToString::to_string).collect();
        assert_eq!(r, ["(1,0)", "(0,1)", "(1,1)"]);
        assert_eq!(positive_roots(&Quiver::linear_a(1)).unwrap(), vec![DimVector(vec![1])]);
        assert_eq!(positive_roots(&Quiver::linear_a(3)).unwrap().len(), 6);
        let d4 = Quiver::new(4, vec![(1, 0), (2, 0), (3, 0)]).unwrap();
        assert_eq!(positive_roots(&d4).unwrap().len(), 12);
        let kronecker = Quiver::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert!(matches!(positive_roots(&kronecker), Err(Error::NotDynkin)));
    }

    #[test]
    fn gabriel_on_a3_orientations() {
        let f = PrimeField::new(2).unwrap();
        for arrows in [vec![(0, 1), (1, 2)], vec![(1, 0), (1, 2)]] {
            let q = Arc::new(Quiver::new(3, arrows).unwrap());
            let counts = indecomposable_counts(&q, f, 1, Budget::default()).unwrap();
            let roots = positive_roots(&q).unwrap();
            assert_eq!(counts.iter().map(|(_, c)| c).sum::<usize>(), roots.len());
            assert!(counts.iter().all(|(d, c)| *c == 1 && roots.contains(d)));
        }
    }

    #[test]
    fn split_sum_is_decomposable() {
        let q = Arc::new(Quiver::linear_a(2));
        let f = PrimeField::new(3).unwrap();
        let s1 = Representation::simple(q.clone(), f, 0);
        let s2 = Representation::simple(q, f, 1);
        assert!(is_indecomposable(&s1, Budget::default()).unwrap());
        assert!(!is_indecomposable(&s1.direct_sum(&s2).unwrap(), Budget::default()).unwrap());
    }
}
