//! Weak pullbacks, spans of groupoids and degroupoidification.
//!
//! Conventions: a groupoid over `X` is a functor `v: Ψ → X` and
//! `Ψ̃([x]) = |Aut x| · Σ 1/|Aut ψ|` over classes `[ψ]` with `v(ψ) ≅ x`.
//! A span `X ← S → Y` has right leg `p: S → X` and left leg `q: S → Y`;
//! its matrix is `S̃[y][x] = Σ |Aut y|/|Aut s|` over classes `[s]` with
//! `p(s) ≅ x` and `q(s) ≅ y`.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{Matrix, Rational};
use crate::groupoid::core::Groupoid;
use crate::groupoid::functor::{same_shape, Functor};

/// The weak pullback `S ×_X T` of `f: S → X` and `g: T → X`.
#[derive(Clone, Debug)]
pub struct WeakPullback {
    pub apex: Arc<Groupoid>,
    /// Projection to `S`.
    pub first: Functor,
    /// Projection to `T`.
    pub second: Functor,
    /// Object `i` is the triple `(s, t, α)` with `α: f(s) → g(t)`.
    pub triples: Vec<(usize, usize, usize)>,
}

/// Objects are triples `(s, t, α: f(s) → g(t))` in lexicographic order; a
/// morphism `(σ, τ)` goes from `(s, t, α)` to `(s', t', g(τ)∘α∘f(σ)⁻¹)`.
pub fn weak_pullback(f: &Functor, g: &Functor) -> Result<WeakPullback> {
    let x = f.target();
    if !Arc::ptr_eq(x, g.target()) && !same_shape(x, g.target()) {
        return Err(Error::CodomainMismatch);
    }
    let (s_gpd, t_gpd) = (f.source().clone(), g.source().clone());
    let mut triples = Vec::new();
    for s in 0..s_gpd.object_count() {
        for t in 0..t_gpd.object_count() {
            for alpha in x.hom(f.on_object(s), g.on_object(t)) {
                triples.push((s, t, alpha));
            }
        }
    }
    let index: HashMap<(usize, usize, usize), usize> = triples.iter().enumerate().map(|(i, &k)| (k, i)).collect();
    let mut morphisms = Vec::new();
    let (mut first_m, mut second_m) = (Vec::new(), Vec::new());
    for (i, &(s, t, alpha)) in triples.iter().enumerate() {
        for &sigma in s_gpd.outgoing(s) {
            let back = x.inverse(f.on_morphism(sigma));
            let a_back = x.compose(alpha, back).expect("composable");
            for &tau in t_gpd.outgoing(t) {
                let alpha2 = x.compose(g.on_morphism(tau), a_back).expect("composable");
                let j = index[&(s_gpd.target(sigma), t_gpd.target(tau), alpha2)];
                morphisms.push((i, j, [sigma, tau]));
                first_m.push(sigma);
                second_m.push(tau);
            }
        }
    }
    let apex = Arc::new(Groupoid::from_pairs(
        triples.len(),
        morphisms,
        [s_gpd.clone(), t_gpd.clone()],
    ));
    let first = Functor::new_unchecked(apex.clone(), s_gpd, triples.iter().map(|k| k.0).collect(), first_m)?;
    let second = Functor::new_unchecked(apex.clone(), t_gpd, triples.iter().map(|k| k.1).collect(), second_m)?;
    Ok(WeakPullback {
        apex,
        first,
        second,
        triples,
    })
}

/// A span from `X` to `Y`: `X ←p− S −q→ Y`.
#[derive(Clone, Debug)]
pub struct Span {
    apex: Arc<Groupoid>,
    left: Functor,
    right: Functor,
}

impl Span {
    /// `left = q: S → Y`, `right = p: S → X`.
    pub fn new(left: Functor, right: Functor) -> Result<Self> {
        if !Arc::ptr_eq(left.source(), right.source()) {
            return Err(Error::InvalidFunctor("span legs must share the apex".into()));
        }
        Ok(Span {
            apex: left.source().clone(),
            left,
            right,
        })
    }

    pub fn identity(x: Arc<Groupoid>) -> Self {
        Span::new(Functor::identity(x.clone()), Functor::identity(x)).expect("shared apex")
    }

    pub fn apex(&self) -> &Arc<Groupoid> {
        &self.apex
    }

    pub fn left(&self) -> &Functor {
        &self.left
    }

    pub fn right(&self) -> &Functor {
        &self.right
    }

    /// The foot `X`.
    pub fn domain(&self) -> &Arc<Groupoid> {
        self.right.target()
    }

    /// The foot `Y`.
    pub fn codomain(&self) -> &Arc<Groupoid> {
        self.left.target()
    }

    /// `self ∘ s` for `s: X → Y` and `self: Y → Z`, by weak pullback over `Y`.
    pub fn compose(&self, s: &Span) -> Result<Span> {
        let pb = weak_pullback(&s.left, &self.right)
            .map_err(|_| Error::NotComposable("the middle feet of the spans differ".into()))?;
        let left = pb.second.then(&self.left)?;
        let right = pb.first.then(&s.right)?;
        Span::new(left, right)
    }

    /// Disjoint union of apexes over the same feet.
    pub fn add(&self, other: &Span) -> Result<Span> {
        let feet_match = same_shape(self.domain(), other.domain()) && same_shape(self.codomain(), other.codomain());
        if !feet_match {
            return Err(Error::NotComposable("spans with different feet cannot be added".into()));
        }
        let apex = Arc::new(Groupoid::coproduct_of(&self.apex, &other.apex));
        let glue = |a: &Functor, b: &Functor| {
            let objects = a.object_map().iter().chain(b.object_map()).copied().collect();
            let morphisms = a.morphism_map().iter().chain(b.morphism_map()).copied().collect();
            Functor::new_unchecked(apex.clone(), a.target().clone(), objects, morphisms)
        };
        Span::new(glue(&self.left, &other.left)?, glue(&self.right, &other.right)?)
    }

    /// `Λ × S`, with both legs ignoring the `Λ` factor.
    pub fn scale(&self, lambda: &Arc<Groupoid>) -> Result<Span> {
        let apex = Arc::new(Groupoid::product_of(lambda, &self.apex));
        let left = after_projection(&apex, lambda, &self.apex, &self.left)?;
        let right = after_projection(&apex, lambda, &self.apex, &self.right)?;
        Span::new(left, right)
    }

    /// The groupoid `SΨ` over `Y` for `v: Ψ → X`.
    pub fn apply(&self, v: &Functor) -> Result<Functor> {
        let pb = weak_pullback(v, &self.right)?;
        pb.second.then(&self.left)
    }

    pub fn matrix(&self) -> Matrix<Rational> {
        degroupoidify_span(self)
    }
}

/// `leg ∘ π₂` on `Λ × S`.
fn after_projection(apex: &Arc<Groupoid>, lambda: &Groupoid, s: &Groupoid, leg: &Functor) -> Result<Functor> {
    let objects = (0..lambda.object_count())
        .flat_map(|_| leg.object_map().iter().copied())
        .collect();
    let morphisms = (0..lambda.morphism_count())
        .flat_map(|_| (0..s.morphism_count()).map(|m| leg.on_morphism(m)))
        .collect();
    Functor::new_unchecked(apex.clone(), leg.target().clone(), objects, morphisms)
}

/// `Ψ + Φ` over the same base.
pub fn sum_over(v: &Functor, w: &Functor) -> Result<Functor> {
    if !same_shape(v.target(), w.target()) {
        return Err(Error::CodomainMismatch);
    }
    let apex = Arc::new(Groupoid::coproduct_of(v.source(), w.source()));
    let objects = v.object_map().iter().chain(w.object_map()).copied().collect();
    let morphisms = v.morphism_map().iter().chain(w.morphism_map()).copied().collect();
    Functor::new_unchecked(apex, v.target().clone(), objects, morphisms)
}

/// `Λ × Ψ` over the base of `Ψ`.
pub fn scale_over(lambda: &Arc<Groupoid>, v: &Functor) -> Result<Functor> {
    let apex = Arc::new(Groupoid::product_of(lambda, v.source()));
    after_projection(&apex, lambda, v.source(), v)
}

fn inv(n: usize) -> Rational {
    Rational::new(1.into(), BigInt::from(n))
}

/// Entries indexed by the isomorphism classes of the base, in class order.
pub fn degroupoidify_vector(v: &Functor) -> Vec<Rational> {
    let x = v.target();
    let class = x.class_of_objects();
    let classes = x.iso_classes();
    let mut out = vec![Rational::zero(); classes.len()];
    for c in v.source().iso_classes() {
        let k = class[v.on_object(c.representative)];
        out[k] += Rational::from_integer(BigInt::from(classes[k].aut_order)) * inv(c.aut_order);
    }
    out
}

/// Rows are classes of `Y`, columns classes of `X`.
pub fn degroupoidify_span(s: &Span) -> Matrix<Rational> {
    let (x, y) = (s.domain(), s.codomain());
    let (cx, cy) = (x.class_of_objects(), y.class_of_objects());
    let ycls = y.iso_classes();
    let mut m = Matrix::filled(ycls.len(), x.iso_classes().len(), Rational::zero());
    for c in s.apex.iso_classes() {
        let (i, j) = (
            cy[s.left.on_object(c.representative)],
            cx[s.right.on_object(c.representative)],
        );
        let v = m.get(i, j) + Rational::from_integer(BigInt::from(ycls[i].aut_order)) * inv(c.aut_order);
        m.set(i, j, v);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, MatrixOps, RationalField};

    fn discrete_map(n: usize, values: Vec<usize>, base: &Arc<Groupoid>) -> Functor {
        let src = Arc::new(Groupoid::discrete(n));
        let morphisms = values.iter().map(|&y| base.identity(y)).collect();
        Functor::new(src, base.clone(), values, morphisms).unwrap()
    }

    #[test]
    fn pullback_of_sets_is_fibered_product() {
        let base = Arc::new(Groupoid::discrete(3));
        let f = discrete_map(4, vec![0, 1, 1, 2], &base);
        let g = discrete_map(3, vec![1, 1, 2], &base);
        let pb = weak_pullback(&f, &g).unwrap();
        // fibers: over 1 it is 2x2, over 2 it is 1x1
        assert_eq!(pb.apex.object_count(), 5);
        assert!(pb.apex.is_discrete());
        pb.apex.check_laws().unwrap();
        pb.first.check_laws().unwrap();
        pb.second.check_laws().unwrap();
    }

    #[test]
    fn pullback_of_groups() {
        // Z/a and Z/b mapped trivially to Z/n: n triples, cardinality n/(ab)
        let (a, b, n) = (2, 3, 4);
        let za = Arc::new(Groupoid::cyclic_group(a));
        let zb = Arc::new(Groupoid::cyclic_group(b));
        let zn = Arc::new(Groupoid::cyclic_group(n));
        let f = Functor::new(za, zn.clone(), vec![0], vec![0; a]).unwrap();
        let g = Functor::new(zb, zn, vec![0], vec![0; b]).unwrap();
        let pb = weak_pullback(&f, &g).unwrap();
        assert_eq!(pb.apex.object_count(), n);
        pb.apex.check_laws().unwrap();
        assert_eq!(pb.apex.cardinality(), rat(n as i64, (a * b) as i64));
        assert_eq!(pb.apex.cardinality_alt(), pb.apex.cardinality());
    }

    #[test]
    fn pullback_along_identities() {
        let g = Arc::new(Groupoid::connected_cyclic(2, 2));
        let id = Functor::identity(g.clone());
        let pb = weak_pullback(&id, &id).unwrap();
        assert_eq!(pb.apex.cardinality(), g.cardinality());
        assert_eq!(pb.apex.iso_classes().len(), g.iso_classes().len());
    }

    #[test]
    fn vectors() {
        let x = Arc::new(Groupoid::coproduct_of(
            &Arc::new(Groupoid::cyclic_group(2)),
            &Arc::new(Groupoid::discrete(1)),
        ));
        assert_eq!(
            degroupoidify_vector(&Functor::identity(x.clone())),
            vec![rat(1, 1), rat(1, 1)]
        );
        let empty = Functor::new(Arc::new(Groupoid::empty()), x.clone(), vec![], vec![]).unwrap();
        assert_eq!(degroupoidify_vector(&empty), vec![rat(0, 1), rat(0, 1)]);
        let pt = Arc::new(Groupoid::discrete(1));
        // two non-isomorphic points over a point
        let two = Functor::to_point(Arc::new(Groupoid::discrete(2)));
        assert_eq!(degroupoidify_vector(&two), vec![rat(2, 1)]);
        // two isomorphic points form a groupoid equivalent to one point
        let connected = Functor::to_point(Arc::new(Groupoid::codiscrete(2)));
        assert_eq!(degroupoidify_vector(&connected), vec![rat(1, 1)]);
        let v = Functor::identity(x.clone());
        let w = Functor::to_point(Arc::new(Groupoid::cyclic_group(3)))
            .then(&Functor::identity(pt))
            .unwrap();
        let sum = sum_over(&v, &v).unwrap();
        assert_eq!(degroupoidify_vector(&sum), vec![rat(2, 1), rat(2, 1)]);
        let lambda = Arc::new(Groupoid::cyclic_group(2));
        assert_eq!(degroupoidify_vector(&scale_over(&lambda, &w).unwrap()), vec![rat(1, 6)]);
    }

    #[test]
    fn span_matrices() {
        let x = Arc::new(Groupoid::connected_cyclic(2, 2));
        let id = Span::identity(x.clone());
        assert_eq!(id.matrix(), Matrix::filled(1, 1, rat(1, 1)));
        let z2 = Arc::new(Groupoid::cyclic_group(2));
        let pt = Arc::new(Groupoid::discrete(1));
        let legs = Functor::new(z2.clone(), pt.clone(), vec![0], vec![0, 0]).unwrap();
        let s = Span::new(legs.clone(), legs).unwrap();
        assert_eq!(s.matrix(), Matrix::filled(1, 1, rat(1, 2)));
        let scaled = Span::identity(pt.clone()).scale(&z2).unwrap();
        assert_eq!(scaled.matrix(), Matrix::filled(1, 1, rat(1, 2)));
        let sum = s.add(&Span::identity(pt)).unwrap();
        assert_eq!(sum.matrix(), Matrix::filled(1, 1, rat(3, 2)));
    }

    #[test]
    fn discrete_spans_multiply_count_matrices() {
        let x = Arc::new(Groupoid::discrete(2));
        let y = Arc::new(Groupoid::discrete(3));
        let z = Arc::new(Groupoid::discrete(2));
        assert!(Span::new(
            discrete_map(4, vec![0, 1, 2, 2], &y),
            discrete_map(4, vec![0, 0, 1, 1], &x)
        )
        .is_err());
        let apex = Arc::new(Groupoid::discrete(4));
        let leg = |vals: Vec<usize>, base: &Arc<Groupoid>| {
            let ms = vals.iter().map(|&v| base.identity(v)).collect();
            Functor::new(apex.clone(), base.clone(), vals, ms).unwrap()
        };
        let s = Span::new(leg(vec![0, 1, 2, 2], &y), leg(vec![0, 0, 1, 1], &x)).unwrap();
        let t_apex = Arc::new(Groupoid::discrete(3));
        let tleg = |vals: Vec<usize>, base: &Arc<Groupoid>| {
            let ms = vals.iter().map(|&v| base.identity(v)).collect();
            Functor::new(t_apex.clone(), base.clone(), vals, ms).unwrap()
        };
        let t = Span::new(tleg(vec![1, 0, 1], &z), tleg(vec![2, 2, 0], &y)).unwrap();
        let ts = t.compose(&s).unwrap();
        let expected = RationalField.matmul(&t.matrix(), &s.matrix());
        assert_eq!(ts.matrix(), expected);
        assert_eq!(*expected.get(1, 1), rat(2, 1));
        let vec_x = Functor::identity(x.clone());
        let applied = degroupoidify_vector(&s.apply(&vec_x).unwrap());
        assert_eq!(applied, vec![rat(1, 1), rat(1, 1), rat(2, 1)]);
        assert!(t.compose(&t).is_err());
    }
}
