//! Seeded random groupoids and spans for property checks.
//!
//! Feet are disjoint unions of connected groupoids with cyclic vertex groups;
//! apexes are disjoint unions of cyclic groups, so a leg is a choice of
//! object and of an automorphism whose order divides the component's order.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exactmath::{MatrixOps, RationalField};
use crate::groupoid::core::Groupoid;
use crate::groupoid::equivalence::equivalent;
use crate::groupoid::functor::Functor;
use crate::groupoid::span::{degroupoidify_vector, Span};

pub const DEFAULT_SEED: u64 = 0x5eed;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn disjoint_union(parts: Vec<Groupoid>) -> Groupoid {
    parts
        .into_iter()
        .map(Arc::new)
        .reduce(|a, b| Arc::new(Groupoid::coproduct_of(&a, &b)))
        .map_or_else(Groupoid::empty, |g| (*g).clone())
}

/// One to three components, each `k ≤ 2` isomorphic objects with vertex group `Z/m`, `m ≤ 3`.
pub fn random_foot(rng: &mut impl Rng) -> Groupoid {
    let parts = (0..rng.gen_range(1..=3))
        .map(|_| Groupoid::connected_cyclic(rng.gen_range(1..=2), rng.gen_range(1..=3)))
        .collect();
    disjoint_union(parts)
}

/// Orders of the cyclic components of a random apex; all ones gives a discrete apex.
pub fn random_apex_orders(rng: &mut impl Rng, discrete: bool) -> Vec<usize> {
    (0..rng.gen_range(1..=4))
        .map(|_| if discrete { 1 } else { rng.gen_range(1..=4) })
        .collect()
}

pub fn cyclic_union(orders: &[usize]) -> Groupoid {
    disjoint_union(orders.iter().map(|&m| Groupoid::cyclic_group(m)).collect())
}

fn power(g: &Groupoid, a: usize, k: usize) -> usize {
    (0..k).fold(g.identity(g.source(a)), |acc, _| {
        g.compose(a, acc).expect("endomorphism")
    })
}

/// A random functor from `cyclic_union(orders)` to `target`.
pub fn random_leg(
    rng: &mut impl Rng,
    apex: &Arc<Groupoid>,
    orders: &[usize],
    target: &Arc<Groupoid>,
) -> Result<Functor> {
    let mut objects = Vec::new();
    let mut morphisms = Vec::new();
    for &m in orders {
        let x = rng.gen_range(0..target.object_count());
        let admissible: Vec<usize> = target
            .automorphisms(x)
            .into_iter()
            .filter(|&a| power(target, a, m) == target.identity(x))
            .collect();
        let a = *admissible.choose(rng).expect("the identity is admissible");
        objects.push(x);
        morphisms.extend((0..m).map(|k| power(target, a, k)));
    }
    Functor::new(apex.clone(), target.clone(), objects, morphisms)
}

pub fn random_span(rng: &mut impl Rng, from: &Arc<Groupoid>, to: &Arc<Groupoid>, discrete: bool) -> Result<Span> {
    let orders = random_apex_orders(rng, discrete);
    let apex = Arc::new(cyclic_union(&orders));
    let left = random_leg(rng, &apex, &orders, to)?;
    let right = random_leg(rng, &apex, &orders, from)?;
    Span::new(left, right)
}

/// `(T∘S)~ = T̃·S̃` and `S̃·Ψ̃ = (SΨ)~` on one random composable pair.
#[derive(Clone, Debug)]
pub struct FunctorialityInstance {
    pub index: usize,
    pub discrete_apexes: bool,
    pub composite_apex_objects: usize,
    pub matrices_agree: bool,
    pub vectors_agree: bool,
    pub cardinalities_agree: bool,
}

impl FunctorialityInstance {
    pub fn passed(&self) -> bool {
        self.matrices_agree && self.vectors_agree && self.cardinalities_agree
    }
}

/// Runs `count` instances from one seeded stream; every third pair uses discrete apexes.
pub fn functoriality_instances(seed: u64, count: usize) -> Result<Vec<FunctorialityInstance>> {
    let mut r = rng(seed);
    let mut out = Vec::with_capacity(count);
    for index in 0..count {
        let discrete = index % 3 == 0;
        let x = Arc::new(random_foot(&mut r));
        let y = Arc::new(random_foot(&mut r));
        let z = Arc::new(random_foot(&mut r));
        let s = random_span(&mut r, &x, &y, discrete)?;
        let t = random_span(&mut r, &y, &z, discrete)?;
        let ts = t.compose(&s)?;
        let field = RationalField;
        let matrices_agree = ts.matrix() == field.matmul(&t.matrix(), &s.matrix());
        let psi = Functor::identity(x.clone());
        let applied = degroupoidify_vector(&s.apply(&psi)?);
        let vectors_agree = applied == field.mat_vec(&s.matrix(), &degroupoidify_vector(&psi));
        let apex = ts.apex();
        let cardinalities_agree = apex.cardinality() == apex.cardinality_alt();
        out.push(FunctorialityInstance {
            index,
            discrete_apexes: discrete,
            composite_apex_objects: apex.object_count(),
            matrices_agree,
            vectors_agree,
            cardinalities_agree,
        });
    }
    Ok(out)
}

/// A random groupoid `G` paired with `G × C`, `C` codiscrete on one to three objects.
#[derive(Clone, Debug)]
pub struct EquivalenceInstance {
    pub index: usize,
    pub judged_equivalent: bool,
    pub cardinalities_equal: bool,
    pub alt_formula_agrees: bool,
}

pub fn equivalence_instances(seed: u64, count: usize) -> Vec<EquivalenceInstance> {
    let mut r = rng(seed ^ 0xe9);
    (0..count)
        .map(|index| {
            let g = Arc::new(random_foot(&mut r));
            let c = Arc::new(Groupoid::codiscrete(r.gen_range(1..=3)));
            let h = Groupoid::product_of(&g, &c);
            EquivalenceInstance {
                index,
                judged_equivalent: equivalent(&g, &h),
                cardinalities_equal: g.cardinality() == h.cardinality(),
                alt_formula_agrees: g.cardinality() == g.cardinality_alt() && h.cardinality() == h.cardinality_alt(),
            }
        })
        .collect()
}
