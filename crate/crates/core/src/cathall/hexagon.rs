//! Hexagonators and the coherence polytopes, at the level of objects and
//! cardinalities.
//!
//! Tensor blocks over `A₀` are chosen direct sums with automorphisms from
//! the members, so a sequence with sub `ȳ ⊕ z̄` splits into one with sub `ȳ`
//! and one with sub `z̄` (R), and a sequence with quotient `x̄ ⊕ ȳ` splits by
//! preimages into extensions of `x̄` and of `ȳ` (S). Every polytope compares
//! two such composites on every extension class.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_traits::One;

use crate::cathall::base::{direct_sum, AutGroup};
use crate::cathall::checks::{instance_id, Sides, CARDINALITY_SCOPE};
use crate::cathall::ses::{build_ext, ext_class, ExtSkeleton};
use crate::cathall::split::{split_quot, split_sub};
use crate::error::{Error, Result};
use crate::exactmath::{q_power, Budget, Rational};
use crate::hall::HallAlgebra;
use crate::quiver::{is_isomorphic, ClassId, ExtSpace, RepMorphism, Representation, ShortExact};
use crate::report::{CheckReport, Failure};

/// `(E/z̄, E/ȳ)` for `0 → ȳ⊕z̄ → E → x̄ → 0`: extensions of `x̄` by `ȳ` and by `z̄`.
pub fn hexagonator_r(s: &ShortExact, y: &Representation, z: &Representation) -> Result<(ShortExact, ShortExact)> {
    split_sub(s, y, z)
}

/// `(g⁻¹(x̄), g⁻¹(ȳ))` for `0 → z̄ → E → x̄⊕ȳ → 0`: extensions of `x̄` by `z̄`
/// and of `ȳ` by `z̄`, matching the vertices `B_{X,Z}` and `B_{Y,Z}`.
pub fn hexagonator_s(s: &ShortExact, x: &Representation, y: &Representation) -> Result<(ShortExact, ShortExact)> {
    split_quot(s, x, y)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hexagonator {
    R,
    S,
}

#[derive(Clone, Debug)]
pub struct HexagonOutcome {
    pub classes: usize,
    /// Outer terms of every output are literally the stated members.
    pub outer_terms: bool,
    /// The induced map on iso classes is a bijection onto the composite apex.
    pub bijection: bool,
    /// Matched classes have automorphism groups of equal order.
    pub aut_orders: bool,
    /// Apex cardinality of the block against the composite.
    pub apex: Sides,
    /// The block against `|EXT| · |EXT| · |Aut|` of the shared member.
    pub bilinear: Sides,
}

impl HexagonOutcome {
    pub fn passed(&self) -> bool {
        self.outer_terms && self.bijection && self.aut_orders && self.apex.equal() && self.bilinear.equal()
    }
}

/// Automorphism groups of `A₀` witnesses, computed once per class.
#[derive(Debug, Default)]
pub struct AutCache {
    groups: BTreeMap<ClassId, AutGroup>,
}

impl AutCache {
    pub fn get(&mut self, h: &HallAlgebra, c: &ClassId) -> Result<AutGroup> {
        if let Some(g) = self.groups.get(c) {
            return Ok(g.clone());
        }
        let g = AutGroup::of(&h.rep(c)?, h.budget())?;
        self.groups.insert(c.clone(), g.clone());
        Ok(g)
    }

    fn members(&mut self, h: &HallAlgebra, cs: &[&ClassId]) -> Result<(Vec<Representation>, Vec<AutGroup>)> {
        let reps = cs.iter().map(|c| h.rep(c)).collect::<Result<Vec<_>>>()?;
        let groups = cs.iter().map(|c| self.get(h, c)).collect::<Result<Vec<_>>>()?;
        Ok((reps, groups))
    }
}

/// R on `(x, y, z)` splits `B_{X, Y⊗Z}`; S on `(x, y, z)` splits `B_{X⊗Y, Z}`.
pub fn hexagonator_check(
    h: &HallAlgebra,
    cache: &mut AutCache,
    kind: Hexagonator,
    x: &ClassId,
    y: &ClassId,
    z: &ClassId,
) -> Result<HexagonOutcome> {
    let budget = h.budget();
    let (reps, groups) = cache.members(h, &[x, y, z])?;
    let (block, pair) = match kind {
        Hexagonator::R => (
            vec![(vec![0], vec![1, 2])],
            vec![(vec![0], vec![1]), (vec![0], vec![2])],
        ),
        Hexagonator::S => (
            vec![(vec![0, 1], vec![2])],
            vec![(vec![0], vec![2]), (vec![1], vec![2])],
        ),
    };
    let big = ExtSkeleton::new(reps.clone(), groups.clone(), &block, budget)?;
    let composite = ExtSkeleton::new(reps.clone(), groups, &pair, budget)?;
    let mut outer_terms = true;
    let mut aut_orders = true;
    let mut targets = HashSet::new();
    for (o, orbit) in big.orbits.iter().enumerate() {
        let s = big.sequence(0, &orbit.representative[0])?;
        let (a, b) = match kind {
            Hexagonator::R => hexagonator_r(&s, &reps[1], &reps[2])?,
            Hexagonator::S => hexagonator_s(&s, &reps[0], &reps[1])?,
        };
        let expected = match kind {
            Hexagonator::R => [(&reps[0], &reps[1]), (&reps[0], &reps[2])],
            Hexagonator::S => [(&reps[0], &reps[2]), (&reps[1], &reps[2])],
        };
        let terms = [(a.quotient(), a.sub()), (b.quotient(), b.sub())];
        if terms != expected {
            outer_terms = false;
            continue;
        }
        let key = vec![ext_class(&a)?, ext_class(&b)?];
        let t = *composite
            .orbit_of
            .get(&key)
            .ok_or_else(|| Error::InvalidSequence("split classes outside the composite apex".into()))?;
        targets.insert(t);
        if big.aut_order(o) != composite.aut_order(t) {
            aut_orders = false;
        }
    }
    let bijection = targets.len() == big.orbits.len() && targets.len() == composite.orbits.len();
    let ((m1, n1), (m2, n2), shared) = match kind {
        Hexagonator::R => ((x, y), (x, z), x),
        Hexagonator::S => ((x, z), (y, z), z),
    };
    let rhs = build_ext(h, m1, n1)?.cardinality()
        * build_ext(h, m2, n2)?.cardinality()
        * Rational::from_integer(h.aut(shared)?);
    Ok(HexagonOutcome {
        classes: big.orbits.len(),
        outer_terms,
        bijection,
        aut_orders,
        apex: Sides {
            lhs: big.cardinality(),
            rhs: composite.cardinality(),
        },
        bilinear: Sides {
            lhs: big.cardinality(),
            rhs,
        },
    })
}

fn tuples(classes: &[ClassId], len: usize, bound: usize) -> Vec<Vec<ClassId>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for t in &out {
            let used: usize = t.iter().map(|c: &ClassId| c.dim.total()).sum();
            for c in classes {
                if used + c.dim.total() <= bound {
                    let mut t2 = t.clone();
                    t2.push(c.clone());
                    next.push(t2);
                }
            }
        }
        out = next;
    }
    out
}

pub fn hexagonator_suite(h: &HallAlgebra, bound: usize, only: Option<&str>) -> Result<CheckReport> {
    let mut report = CheckReport::new(
        "hexagonators",
        "object/cardinality level; S uses g^-1 of the first and second quotient summands; \
         automorphism groups compared by order only",
    );
    let classes = h.classes_up_to(bound)?;
    let mut cache = AutCache::default();
    for t in tuples(&classes, 3, bound) {
        for (kind, tag) in [(Hexagonator::R, "R"), (Hexagonator::S, "S")] {
            let id = format!("{tag}:{}", instance_id(&[&t[0], &t[1], &t[2]]));
            if only.is_some_and(|o| o != id) {
                continue;
            }
            let r = hexagonator_check(h, &mut cache, kind, &t[0], &t[1], &t[2])?;
            let fail = if !r.outer_terms {
                Some(Failure::new(&id, "outer terms differ from the hexagon vertices"))
            } else if !r.bijection {
                Some(Failure::new(&id, "no bijection on iso classes"))
            } else if !r.aut_orders {
                Some(Failure::new(&id, "automorphism orders differ on matched classes"))
            } else if !r.apex.equal() {
                Some(Failure::unequal(&id, &r.apex.lhs, &r.apex.rhs, "apex cardinalities"))
            } else if !r.bilinear.equal() {
                Some(Failure::unequal(
                    &id,
                    &r.bilinear.lhs,
                    &r.bilinear.rhs,
                    "EXT bilinearity over A0",
                ))
            } else {
                None
            };
            report.record(fail);
        }
    }
    Ok(report)
}

/// The coherence polytopes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Polytope {
    PentagonStrict,
    Unitor,
    Shuffle13,
    Shuffle31,
    Shuffle22,
}

impl Polytope {
    pub const ALL: [Polytope; 5] = [
        Polytope::PentagonStrict,
        Polytope::Unitor,
        Polytope::Shuffle13,
        Polytope::Shuffle31,
        Polytope::Shuffle22,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Polytope::PentagonStrict => "pentagon-strict",
            Polytope::Unitor => "unitor",
            Polytope::Shuffle13 => "shuffle-1-3",
            Polytope::Shuffle31 => "shuffle-3-1",
            Polytope::Shuffle22 => "shuffle-2-2",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        Polytope::ALL.into_iter().find(|p| p.name() == name)
    }

    fn arity(self) -> usize {
        match self {
            Polytope::Unitor => 1,
            _ => 4,
        }
    }

    /// One composite per route around the polytope, as lists of steps
    /// `(quotient members, sub members)`.
    pub fn paths(self) -> Vec<Vec<(Vec<usize>, Vec<usize>)>> {
        let step = |u: &[usize], v: &[usize]| (u.to_vec(), v.to_vec());
        match self {
            Polytope::Shuffle13 => vec![
                vec![step(&[0], &[1, 2, 3])],
                vec![step(&[0], &[1]), step(&[0], &[2, 3])],
                vec![step(&[0], &[1, 2]), step(&[0], &[3])],
                vec![step(&[0], &[1]), step(&[0], &[2]), step(&[0], &[3])],
            ],
            Polytope::Shuffle31 => vec![
                vec![step(&[0, 1, 2], &[3])],
                vec![step(&[0], &[3]), step(&[1, 2], &[3])],
                vec![step(&[0, 1], &[3]), step(&[2], &[3])],
                vec![step(&[0], &[3]), step(&[1], &[3]), step(&[2], &[3])],
            ],
            Polytope::Shuffle22 => vec![
                vec![step(&[0, 1], &[2, 3])],
                vec![step(&[0, 1], &[2]), step(&[0, 1], &[3])],
                vec![step(&[1], &[2, 3]), step(&[0], &[2, 3])],
                vec![step(&[1], &[2]), step(&[1], &[3]), step(&[0], &[2]), step(&[0], &[3])],
                vec![step(&[1], &[2]), step(&[0], &[2]), step(&[1], &[3]), step(&[0], &[3])],
                vec![step(&[0, 1], &[2]), step(&[1], &[3]), step(&[0], &[3])],
            ],
            Polytope::PentagonStrict | Polytope::Unitor => Vec::new(),
        }
    }

    /// The full block split by every route.
    fn block(self) -> (Vec<usize>, Vec<usize>) {
        match self {
            Polytope::Shuffle13 => (vec![0], vec![1, 2, 3]),
            Polytope::Shuffle31 => (vec![0, 1, 2], vec![3]),
            _ => (vec![0, 1], vec![2, 3]),
        }
    }
}

/// Cardinality of a route: each step `B_{U,V} × id` has
/// `|B_{U,V}| / Π_{others} aut`, and each of the `k − 1` weak pullbacks over
/// the one-object groupoid of the tuple contributes `Π aut`.
pub fn path_cardinality(
    reps: &[Representation],
    groups: &[AutGroup],
    path: &[(Vec<usize>, Vec<usize>)],
    budget: Budget,
) -> Result<Rational> {
    let auts: Vec<Rational> = groups
        .iter()
        .map(|g| Rational::from_integer(BigInt::from(g.order())))
        .collect();
    let all = auts.iter().fold(Rational::one(), |acc, a| acc * a);
    let mut total = Rational::one();
    for (k, (u, v)) in path.iter().enumerate() {
        let members: Vec<usize> = u.iter().chain(v).copied().collect();
        let local = |idx: &[usize]| {
            idx.iter()
                .map(|i| members.iter().position(|m| m == i).unwrap_or(0))
                .collect::<Vec<_>>()
        };
        let sk = ExtSkeleton::new(
            members.iter().map(|&i| reps[i].clone()).collect(),
            members.iter().map(|&i| groups[i].clone()).collect(),
            &[(local(u), local(v))],
            budget,
        )?;
        let others = (0..reps.len())
            .filter(|i| !members.contains(i))
            .fold(Rational::one(), |acc, i| acc * &auts[i]);
        total = total * sk.cardinality() / others;
        if k > 0 {
            total *= &all;
        }
    }
    Ok(total)
}

/// Literal outer terms, isomorphic middles and equal classes, componentwise.
fn same_sequences(a: &[ShortExact], b: &[ShortExact], budget: Budget) -> Result<bool> {
    for (s, t) in a.iter().zip(b) {
        if s.sub() != t.sub() || s.quotient() != t.quotient() {
            return Ok(false);
        }
        if !is_isomorphic(s.middle(), t.middle(), budget)? || ext_class(s)? != ext_class(t)? {
            return Ok(false);
        }
    }
    Ok(a.len() == b.len())
}

/// The two routes of a shuffle on one sequence of the full block.
fn routes(p: Polytope, s: &ShortExact, r: &[Representation]) -> Result<(Vec<ShortExact>, Vec<ShortExact>)> {
    let sum = |a: &Representation, b: &Representation| a.direct_sum(b);
    Ok(match p {
        Polytope::Shuffle13 => {
            let (sb, scd) = split_sub(s, &r[1], &sum(&r[2], &r[3])?)?;
            let (sc, sd) = split_sub(&scd, &r[2], &r[3])?;
            let (sbc, sd2) = split_sub(s, &sum(&r[1], &r[2])?, &r[3])?;
            let (sb2, sc2) = split_sub(&sbc, &r[1], &r[2])?;
            (vec![sb, sc, sd], vec![sb2, sc2, sd2])
        }
        Polytope::Shuffle31 => {
            let (sa, sbc) = split_quot(s, &r[0], &sum(&r[1], &r[2])?)?;
            let (sb, sc) = split_quot(&sbc, &r[1], &r[2])?;
            let (sab, sc2) = split_quot(s, &sum(&r[0], &r[1])?, &r[2])?;
            let (sa2, sb2) = split_quot(&sab, &r[0], &r[1])?;
            (vec![sa, sb, sc], vec![sa2, sb2, sc2])
        }
        _ => {
            let (to_c, to_d) = split_sub(s, &r[2], &r[3])?;
            let (ac, bc) = split_quot(&to_c, &r[0], &r[1])?;
            let (ad, bd) = split_quot(&to_d, &r[0], &r[1])?;
            let (from_a, from_b) = split_quot(s, &r[0], &r[1])?;
            let (ac2, ad2) = split_sub(&from_a, &r[2], &r[3])?;
            let (bc2, bd2) = split_sub(&from_b, &r[2], &r[3])?;
            (vec![ac, bc, ad, bd], vec![ac2, bc2, ad2, bd2])
        }
    })
}

fn morphism_sum(parts: &[&RepMorphism]) -> Result<RepMorphism> {
    let (first, rest) = parts.split_first().ok_or_else(|| Error::Input("empty sum".into()))?;
    rest.iter().try_fold((*first).clone(), |acc, m| acc.direct_sum(m))
}

const STRICT_ELEMENT_LIMIT: usize = 4096;

fn pentagon_strict(reps: &[Representation], groups: &[AutGroup]) -> Result<Option<String>> {
    let r: Vec<&Representation> = reps.iter().collect();
    let left = direct_sum(&r)?;
    let right = r[0].direct_sum(&r[1].direct_sum(&r[2].direct_sum(r[3])?)?)?;
    let middle = r[0].direct_sum(r[1])?.direct_sum(&r[2].direct_sum(r[3])?)?;
    let inner = r[0].direct_sum(&r[1].direct_sum(r[2])?)?.direct_sum(r[3])?;
    if left != right || left != middle || left != inner {
        return Ok(Some("bracketings of the chosen direct sum differ".into()));
    }
    let count: usize = groups.iter().map(AutGroup::order).product();
    let elements = if count <= STRICT_ELEMENT_LIMIT { count } else { 1 };
    for mut code in 0..elements {
        let pick: Vec<&RepMorphism> = groups
            .iter()
            .map(|g| {
                let e = &g.elements[code % g.order()];
                code /= g.order();
                e
            })
            .collect();
        let a = morphism_sum(&pick)?;
        let b = pick[0].direct_sum(&pick[1].direct_sum(&pick[2].direct_sum(pick[3])?)?)?;
        let c = pick[0].direct_sum(pick[1])?.direct_sum(&pick[2].direct_sum(pick[3])?)?;
        if a != b || a != c {
            return Ok(Some("bracketings of a direct sum of automorphisms differ".into()));
        }
    }
    Ok(None)
}

fn unitor(h: &HallAlgebra, rep: &Representation, group: &AutGroup) -> Result<Option<String>> {
    let zero = h.rep(&h.zero_class())?;
    if &zero.direct_sum(rep)? != rep || &rep.direct_sum(&zero)? != rep {
        return Ok(Some("the zero object is not a strict unit".into()));
    }
    let id0 = RepMorphism::identity(&zero);
    for g in &group.elements {
        if &id0.direct_sum(g)? != g || &g.direct_sum(&id0)? != g {
            return Ok(Some(
                "the identity of zero is not a strict unit on automorphisms".into(),
            ));
        }
    }
    Ok(None)
}

/// One shuffle instance: both routes on every class of the full block, and
/// every route cardinality against `q^{-Σ⟨U,V⟩} / Π aut`.
pub fn shuffle_instance(
    h: &HallAlgebra,
    cache: &mut AutCache,
    polytope: Polytope,
    tuple: &[ClassId],
) -> Result<Option<String>> {
    let budget = h.budget();
    let refs: Vec<&ClassId> = tuple.iter().collect();
    let (reps, groups) = cache.members(h, &refs)?;
    let (u, v) = polytope.block();
    let m = direct_sum(&u.iter().map(|&i| &reps[i]).collect::<Vec<_>>())?;
    let n = direct_sum(&v.iter().map(|&i| &reps[i]).collect::<Vec<_>>())?;
    let space = ExtSpace::new(&m, &n)?;
    for class in space.classes(budget)? {
        let s = crate::quiver::middle_term(&m, &n, &space.representative(&class))?;
        let (first, second) = routes(polytope, &s, &reps)?;
        if !same_sequences(&first, &second, budget)? {
            return Ok(Some(format!("routes differ on the class {class:?}")));
        }
    }
    let euler: i64 = u
        .iter()
        .flat_map(|&i| v.iter().map(move |&j| (i, j)))
        .map(|(i, j)| h.euler(&tuple[i].dim, &tuple[j].dim))
        .sum::<Result<i64>>()?;
    let auts = groups
        .iter()
        .fold(BigInt::one(), |acc, g| acc * BigInt::from(g.order()));
    let expected = q_power(h.q(), -euler) / Rational::from_integer(auts);
    for (k, path) in polytope.paths().iter().enumerate() {
        let value = path_cardinality(&reps, &groups, path, budget)?;
        if value != expected {
            return Ok(Some(format!("route {k} has cardinality {value}, expected {expected}")));
        }
    }
    Ok(None)
}

pub fn coherence_check(h: &HallAlgebra, polytope: Polytope, bound: usize, only: Option<&str>) -> Result<CheckReport> {
    let scope = match polytope {
        Polytope::PentagonStrict | Polytope::Unitor => "literal equality of chosen direct sums",
        _ => CARDINALITY_SCOPE,
    };
    let mut report = CheckReport::new(polytope.name(), scope);
    let classes = h.classes_up_to(bound)?;
    let mut cache = AutCache::default();
    for t in tuples(&classes, polytope.arity(), bound) {
        let id = instance_id(&t.iter().collect::<Vec<_>>());
        if only.is_some_and(|o| o != id) {
            continue;
        }
        let detail = match polytope {
            Polytope::PentagonStrict => {
                let refs: Vec<&ClassId> = t.iter().collect();
                let (reps, groups) = cache.members(h, &refs)?;
                pentagon_strict(&reps, &groups)?
            }
            Polytope::Unitor => unitor(h, &h.rep(&t[0])?, &cache.get(h, &t[0])?)?,
            _ => shuffle_instance(h, &mut cache, polytope, &t)?,
        };
        report.record(detail.map(|d| Failure::new(&id, d)));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::hall::algebra::tests::{a2, named};
    use crate::quiver::middle_term;

    #[test]
    fn hexagonators_on_split_sequences() {
        let h = a2(2);
        let (s1, s2, _, _) = named(&h);
        let (x, y) = (h.rep(&s1).unwrap(), h.rep(&s2).unwrap());
        let yy = y.direct_sum(&y).unwrap();
        let split = ShortExact::split(&x, &yy).unwrap();
        let (a, b) = hexagonator_r(&split, &y, &y).unwrap();
        assert!(ext_class(&a).unwrap().iter().all(|&c| c == 0));
        assert!(ext_class(&b).unwrap().iter().all(|&c| c == 0));
        let xx = x.direct_sum(&x).unwrap();
        let split = ShortExact::split(&xx, &y).unwrap();
        let (a, b) = hexagonator_s(&split, &x, &x).unwrap();
        assert_eq!((a.quotient(), a.sub(), b.quotient()), (&x, &y, &x));
        assert!(ext_class(&a)
            .unwrap()
            .iter()
            .chain(&ext_class(&b).unwrap())
            .all(|&c| c == 0));
        let bad = middle_term(&x, &y, &ExtSpace::new(&x, &y).unwrap().representative(&[1])).unwrap();
        assert!(hexagonator_r(&bad, &y, &y).is_err());
    }

    #[test]
    fn hexagonator_examples() {
        for p in [2, 3] {
            let h = a2(p);
            let (s1, s2, _, _) = named(&h);
            let r = hexagonator_check(&h, &mut AutCache::default(), Hexagonator::R, &s1, &s2, &s2).unwrap();
            assert!(r.passed(), "{r:?}");
            let s = hexagonator_check(&h, &mut AutCache::default(), Hexagonator::S, &s1, &s1, &s2).unwrap();
            assert!(s.passed(), "{s:?}");
            if p == 2 {
                assert_eq!(r.apex.lhs, rat(4, 1));
                assert_eq!(s.apex.lhs, rat(4, 1));
            }
        }
        let h = a2(2);
        assert!(hexagonator_suite(&h, 2, None).unwrap().passed());
    }

    #[test]
    fn polytopes_at_bound_two() {
        let h = a2(2);
        for p in Polytope::ALL {
            let r = coherence_check(&h, p, 2, None).unwrap();
            assert!(r.passed(), "{}: {:?}", p.name(), r.failures);
            assert!(r.instances > 0);
        }
    }

    #[test]
    fn shuffle_examples_at_total_four() {
        let h = a2(2);
        let (s1, s2, _, _) = named(&h);
        let mut cache = AutCache::default();
        let t = [s1.clone(), s2.clone(), s2.clone(), s2.clone()];
        assert_eq!(shuffle_instance(&h, &mut cache, Polytope::Shuffle13, &t).unwrap(), None);
        let x = h.rep(&s1).unwrap();
        let y3 = direct_sum(&[&h.rep(&s2).unwrap(); 3]).unwrap();
        assert_eq!(ExtSpace::new(&x, &y3).unwrap().dim(), 3);

        let t = [s1.clone(), s1.clone(), s2.clone(), s2.clone()];
        assert_eq!(shuffle_instance(&h, &mut cache, Polytope::Shuffle22, &t).unwrap(), None);
        let (reps, groups) = cache.members(&h, &t.iter().collect::<Vec<_>>()).unwrap();
        let ext = build_ext(&h, &s1, &s2).unwrap().cardinality();
        let four = &ext * &ext * &ext * &ext;
        for path in Polytope::Shuffle22.paths() {
            let card = path_cardinality(&reps, &groups, &path, h.budget()).unwrap();
            assert_eq!(card, rat(16, 1));
            assert_eq!(card, four);
        }
    }

    #[test]
    fn polytope_names_round_trip() {
        for p in Polytope::ALL {
            assert_eq!(Polytope::parse(p.name()), Some(p));
        }
        assert_eq!(Polytope::parse("hexagon"), None);
    }
}
