//! The truncated groupoid `A₀` of representations, with hom-sets enumerated
//! on demand, and automorphism groups as explicit element lists.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::linalg::inverse;
use crate::exactmath::{Budget, Rational};
use crate::hall::HallAlgebra;
use crate::quiver::{ClassId, HomSpace, RepMorphism, Representation};

/// One witness per isomorphism class of total dimension at most `bound`.
#[derive(Clone, Debug)]
pub struct RepGroupoid {
    bound: usize,
    classes: Vec<ClassId>,
    witnesses: Vec<Representation>,
    auts: Vec<BigInt>,
}

pub fn build_a0(h: &HallAlgebra, bound: usize) -> Result<RepGroupoid> {
    let classes = h.classes_up_to(bound)?;
    let mut witnesses = Vec::with_capacity(classes.len());
    let mut auts = Vec::with_capacity(classes.len());
    for c in &classes {
        let class = h.class(c)?;
        witnesses.push(class.rep);
        auts.push(class.aut);
    }
    Ok(RepGroupoid {
        bound,
        classes,
        witnesses,
        auts,
    })
}

impl RepGroupoid {
    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[ClassId] {
        &self.classes
    }

    pub fn witness(&self, i: usize) -> &Representation {
        &self.witnesses[i]
    }

    pub fn aut(&self, i: usize) -> &BigInt {
        &self.auts[i]
    }

    pub fn position(&self, id: &ClassId) -> Option<usize> {
        self.classes.iter().position(|c| c == id)
    }

    /// `|Iso(a, b)|` by enumerating `Hom(a, b)`.
    pub fn iso_count(&self, a: usize, b: usize, budget: Budget) -> Result<BigInt> {
        let hom = HomSpace::new(&self.witnesses[a], &self.witnesses[b])?;
        let mut n = 0u64;
        for m in hom.elements(budget)? {
            if m.is_iso() {
                n += 1;
            }
        }
        Ok(BigInt::from(n))
    }

    /// Every on-demand hom-set has `|Aut|` isomorphisms on the diagonal and none off it.
    pub fn check_hom_sets(&self, budget: Budget) -> Result<bool> {
        for a in 0..self.len() {
            for b in 0..self.len() {
                if self.witnesses[a].dim() != self.witnesses[b].dim() {
                    continue;
                }
                let expected = if a == b { self.auts[a].clone() } else { BigInt::zero() };
                if self.iso_count(a, b, budget)? != expected {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn cardinality(&self) -> Rational {
        self.auts
            .iter()
            .fold(Rational::zero(), |acc, a| acc + Rational::new(BigInt::one(), a.clone()))
    }
}

/// A finite group of representation automorphisms with inverses.
#[derive(Clone, Debug)]
pub struct AutGroup {
    pub elements: Vec<RepMorphism>,
    pub inverses: Vec<RepMorphism>,
}

impl AutGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// `Aut(M)` by filtering `End(M)`.
    pub fn of(m: &Representation, budget: Budget) -> Result<Self> {
        let end = HomSpace::new(m, m)?;
        let elements: Vec<RepMorphism> = end.elements(budget)?.filter(RepMorphism::is_iso).collect();
        let inverses = elements.iter().map(invert).collect::<Result<_>>()?;
        Ok(AutGroup { elements, inverses })
    }

    pub fn trivial(m: &Representation) -> Self {
        AutGroup {
            elements: vec![RepMorphism::identity(m)],
            inverses: vec![RepMorphism::identity(m)],
        }
    }

    /// `G × H` acting block-diagonally on the chosen direct sum.
    pub fn product(&self, other: &AutGroup) -> Result<Self> {
        let mut elements = Vec::with_capacity(self.order() * other.order());
        let mut inverses = Vec::with_capacity(self.order() * other.order());
        for (a, ai) in self.elements.iter().zip(&self.inverses) {
            for (b, bi) in other.elements.iter().zip(&other.inverses) {
                elements.push(a.direct_sum(b)?);
                inverses.push(ai.direct_sum(bi)?);
            }
        }
        Ok(AutGroup { elements, inverses })
    }

    /// `Aut(m₁) × ... × Aut(m_k)` inside `Aut(m₁ ⊕ ... ⊕ m_k)`.
    pub fn of_members(members: &[&Representation], budget: Budget) -> Result<Self> {
        let (first, rest) = members
            .split_first()
            .ok_or_else(|| Error::Input("a block needs at least one member".into()))?;
        let mut g = AutGroup::of(first, budget)?;
        for m in rest {
            g = g.product(&AutGroup::of(m, budget)?)?;
        }
        Ok(g)
    }
}

pub fn invert(m: &RepMorphism) -> Result<RepMorphism> {
    let f = *m.source().field();
    let maps = m
        .maps()
        .iter()
        .map(|a| inverse(&f, a).ok_or_else(|| Error::InvalidMorphism("not invertible".into())))
        .collect::<Result<Vec<_>>>()?;
    RepMorphism::new(m.target().clone(), m.source().clone(), maps)
}

/// The chosen direct sum `m₁ ⊕ ... ⊕ m_k`, block-diagonal in the given order.
pub fn direct_sum(members: &[&Representation]) -> Result<Representation> {
    let (first, rest) = members
        .split_first()
        .ok_or_else(|| Error::Input("an empty direct sum needs a base".into()))?;
    let mut acc = (*first).clone();
    for m in rest {
        acc = acc.direct_sum(m)?;
    }
    Ok(acc)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::hall::algebra::tests::a2;

    #[test]
    fn truncations_of_a0() {
        let h = a2(2);
        assert_eq!(build_a0(&h, 0).unwrap().len(), 1);
        assert_eq!(build_a0(&h, 1).unwrap().len(), 3);
        let a = build_a0(&h, 2).unwrap();
        assert_eq!(a.len(), 7);
        assert!(a.check_hom_sets(h.budget()).unwrap());
    }

    #[test]
    fn automorphism_groups() {
        let h = a2(3);
        let s1 = h.rep(&h.simple_class(0)).unwrap();
        let g = AutGroup::of(&s1, h.budget()).unwrap();
        assert_eq!(g.order(), 2);
        let gg = AutGroup::of_members(&[&s1, &s1], h.budget()).unwrap();
        assert_eq!(gg.order(), 4);
        let full = AutGroup::of(&direct_sum(&[&s1, &s1]).unwrap(), h.budget()).unwrap();
        assert_eq!(full.order(), 48);
        for (a, ai) in full.elements.iter().zip(&full.inverses) {
            assert_eq!(a.then(ai).unwrap(), RepMorphism::identity(a.source()));
        }
    }
}
