//! Antipodes: basis-wise negation, and the unique antipode of the connected
//! graded bialgebra obtained by recursion on the grade.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::exactmath::rat;
use crate::hall::algebra::HallAlgebra;
use crate::hall::linear::{HallTensor, HallVector};
use crate::quiver::ClassId;

/// `S([M]) = −[M]` on every nonzero class, fixing the unit `[0]`.
pub fn antipode_negation(x: &HallVector) -> HallVector {
    x.iter()
        .map(|(e, c)| {
            let c = if e.dim.is_zero() { c.clone() } else { -c };
            (e.clone(), c)
        })
        .collect()
}

/// The canonical antipode on every class up to a grade bound.
#[derive(Clone, Debug)]
pub struct CanonicalAntipode {
    bound: usize,
    values: BTreeMap<ClassId, HallVector>,
}

/// Outcome of comparing basis-wise negation with the canonical antipode.
#[derive(Clone, Debug)]
pub struct AntipodeComparison {
    pub classes_checked: usize,
    /// Classes where both maps agree.
    pub agreeing: Vec<ClassId>,
    /// Classes where they differ.
    pub divergent: Vec<ClassId>,
    /// First class, by grade then index, where they differ.
    pub first_divergence: Option<Divergence>,
    /// The two maps agree on every simple.
    pub agree_on_simples: bool,
}

#[derive(Clone, Debug)]
pub struct Divergence {
    pub class: ClassId,
    pub canonical: HallVector,
    pub negation: HallVector,
    /// `m(S⊗1)Δ − ε` for negation at this class; nonzero means negation is not an antipode.
    pub negation_residual: HallVector,
}

impl CanonicalAntipode {
    /// `S([0]) = [0]` and `S([E]) = −[E] − Σ c S([N])·[M]` over the terms
    /// `c [N]⊗[M]` of `Δ([E])` with `N, M ≠ 0`.
    pub fn compute(h: &HallAlgebra, bound: usize) -> Result<Self> {
        let zero = h.zero_class();
        let mut values: BTreeMap<ClassId, HallVector> = BTreeMap::new();
        let mut classes = h.classes_up_to(bound)?;
        classes.sort_by_key(|c| c.dim.total());
        for e in classes {
            if e == zero {
                values.insert(e, h.unit());
                continue;
            }
            let mut s = HallVector::term(e.clone(), rat(-1, 1));
            for ((n, m), c) in h.coproduct_basis(&e)?.iter() {
                if *n == zero || *m == zero {
                    continue;
                }
                let sn = &values[n];
                let term = h.product(sn, &HallVector::basis(m.clone()), bound)?;
                s.add_scaled(&term, &-c);
            }
            values.insert(e, s);
        }
        Ok(CanonicalAntipode { bound, values })
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn on_basis(&self, e: &ClassId) -> Option<&HallVector> {
        self.values.get(e)
    }

    pub fn apply(&self, x: &HallVector) -> HallVector {
        let mut out = HallVector::new();
        for (e, c) in x.iter() {
            out.add_scaled(&self.values[e], c);
        }
        out
    }
}

impl HallAlgebra {
    pub fn antipode_canonical(&self, x: &HallVector, bound: usize) -> Result<HallVector> {
        Ok(CanonicalAntipode::compute(self, bound)?.apply(x))
    }

    /// `m(S⊗1)Δ(x) − ε(x)·1` and `m(1⊗S)Δ(x) − ε(x)·1` for a map `S`.
    pub fn antipode_residuals(
        &self,
        x: &HallVector,
        bound: usize,
        s: impl Fn(&HallVector) -> HallVector,
    ) -> Result<(HallVector, HallVector)> {
        let delta: HallTensor = self.coproduct(x, bound)?;
        let unit = self.unit().scaled(&self.counit(x));
        let mut left = HallVector::new();
        let mut right = HallVector::new();
        for ((a, b), c) in delta.iter() {
            let sa = s(&HallVector::basis(a.clone()));
            let sb = s(&HallVector::basis(b.clone()));
            left.add_scaled(&self.product(&sa, &HallVector::basis(b.clone()), bound)?, c);
            right.add_scaled(&self.product(&HallVector::basis(a.clone()), &sb, bound)?, c);
        }
        Ok((left.minus(&unit), right.minus(&unit)))
    }

    pub fn compare_antipodes(&self, bound: usize) -> Result<AntipodeComparison> {
        let canonical = CanonicalAntipode::compute(self, bound)?;
        let classes = self.classes_up_to(bound)?;
        let mut agreeing = Vec::new();
        let mut divergent = Vec::new();
        let mut first_divergence = None;
        for e in &classes {
            let x = HallVector::basis(e.clone());
            let neg = antipode_negation(&x);
            let can = canonical.apply(&x);
            if neg == can {
                agreeing.push(e.clone());
                continue;
            }
            divergent.push(e.clone());
            if first_divergence.is_none() {
                let (negation_residual, _) = self.antipode_residuals(&x, bound, antipode_negation)?;
                first_divergence = Some(Divergence {
                    class: e.clone(),
                    canonical: can,
                    negation: neg,
                    negation_residual,
                });
            }
        }
        let agree_on_simples =
            bound == 0 || (0..self.quiver().vertex_count()).all(|i| agreeing.contains(&self.simple_class(i)));
        Ok(AntipodeComparison {
            classes_checked: classes.len(),
            agreeing,
            divergent,
            first_divergence,
            agree_on_simples,
        })
    }
}
