//! Short exact sequences as objects, the groupoids `EXT(M, N)`, and orbit
//! bookkeeping for their skeletons.
//!
//! An object of `EXT(M, N)` is an exact pair `0 → N −f→ E −g→ M → 0` whose
//! outer terms are literally `M` and `N`. A morphism is a triple
//! `(α, β, γ) ∈ Aut N × Aut E × Aut M` acting by
//! `(f, g) ↦ (β f α⁻¹, γ g β⁻¹)`; middle terms range over the witnesses of `A₀`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cathall::base::{direct_sum, AutGroup};
use crate::error::{Error, Result};
use crate::exactmath::linalg::solve_matrix;
use crate::exactmath::{Budget, FpMatrix, MatrixOps, Rational, VectorOdometer};
use crate::hall::HallAlgebra;
use crate::quiver::{middle_term, quotient, ClassId, ExtSpace, HomSpace, RepMorphism, Representation, ShortExact};

pub type SesObject = ShortExact;

/// A cocycle for `s`: with a vertexwise section `σ` of `g`, `c_a` solves
/// `f_t c_a = E_a σ_s − σ_t M_a`.
pub fn cocycle_of(s: &ShortExact) -> Result<Vec<FpMatrix>> {
    let field = *s.middle().field();
    let q = s.middle().quiver().clone();
    let sections = (0..q.vertex_count())
        .map(|i| {
            let g = s.projection().at(i);
            solve_matrix(&field, g, &field.identity(g.rows()))
                .ok_or_else(|| Error::InvalidSequence(format!("no section at vertex {i}")))
        })
        .collect::<Result<Vec<_>>>()?;
    q.arrows()
        .iter()
        .enumerate()
        .map(|(a, &(src, tgt))| {
            let defect = field.mat_sub(
                &field.matmul(s.middle().edge(a), &sections[src]),
                &field.matmul(&sections[tgt], s.quotient().edge(a)),
            );
            solve_matrix(&field, s.inclusion().at(tgt), &defect)
                .ok_or_else(|| Error::InvalidSequence(format!("defect at arrow {a} leaves im f")))
        })
        .collect()
}

/// Class coordinates of `s` in `Ext¹(quotient, sub)`.
pub fn ext_class(s: &ShortExact) -> Result<Vec<u32>> {
    let space = ExtSpace::new(s.quotient(), s.sub())?;
    Ok(space.class_of(&cocycle_of(s)?))
}

/// `c_a ↦ α_t c_a γ⁻¹_s` for `α ∈ Aut N`, `γ ∈ Aut M`.
pub fn act_on_cocycle(c: &[FpMatrix], alpha: &RepMorphism, gamma_inv: &RepMorphism) -> Vec<FpMatrix> {
    let field = *alpha.source().field();
    let q = alpha.source().quiver().clone();
    q.arrows()
        .iter()
        .zip(c)
        .map(|(&(s, t), ca)| field.matmul(&field.matmul(alpha.at(t), ca), gamma_inv.at(s)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassOrbit {
    pub representative: Vec<u32>,
    pub size: usize,
    pub stabilizer: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleOrbit {
    /// One class per space.
    pub representative: Vec<Vec<u32>>,
    pub size: usize,
    pub stabilizer: usize,
}

#[derive(Clone, Debug)]
struct SpaceSpec {
    space: ExtSpace,
    quotient: Vec<usize>,
    sub: Vec<usize>,
}

/// Orbits of a product of extension spaces `Π_k Ext¹(⊕U_k, ⊕V_k)` under
/// `Π_i H_i`, where each `H_i` acts on member `i` and a member shared by
/// several spaces acts diagonally.
///
/// An orbit is one isomorphism class of tuples of sequences whose outer
/// automorphisms come from the members; such a class has
/// `|Stab| · Π_k |Hom(⊕U_k, ⊕V_k)|` automorphisms.
#[derive(Clone, Debug)]
pub struct ExtSkeleton {
    members: Vec<Representation>,
    groups: Vec<AutGroup>,
    spaces: Vec<SpaceSpec>,
    pub orbits: Vec<TupleOrbit>,
    pub orbit_of: HashMap<Vec<Vec<u32>>, usize>,
    pub group_order: usize,
    pub hom_order: BigInt,
}

impl ExtSkeleton {
    /// `spaces[k] = (quotient members, sub members)`, each summed in the given order.
    pub fn new(
        members: Vec<Representation>,
        groups: Vec<AutGroup>,
        spaces: &[(Vec<usize>, Vec<usize>)],
        budget: Budget,
    ) -> Result<Self> {
        if members.len() != groups.len() {
            return Err(Error::Input("one automorphism group per member".into()));
        }
        let mut specs = Vec::with_capacity(spaces.len());
        let mut hom_order = BigInt::one();
        let mut class_count: u128 = 1;
        for (quot, sub) in spaces {
            let m = direct_sum(&quot.iter().map(|&i| &members[i]).collect::<Vec<_>>())?;
            let n = direct_sum(&sub.iter().map(|&i| &members[i]).collect::<Vec<_>>())?;
            let space = ExtSpace::new(&m, &n)?;
            hom_order *= BigInt::from(m.field().order()).pow(HomSpace::new(&m, &n)?.dim() as u32);
            class_count = class_count.saturating_mul(budget.check_power("Ext¹ classes", m.field().p(), space.dim())?);
            specs.push(SpaceSpec {
                space,
                quotient: quot.clone(),
                sub: sub.clone(),
            });
        }
        budget.check("tuples of Ext¹ classes", class_count)?;
        let group_order = groups.iter().map(AutGroup::order).product();
        budget.check("member automorphism group", group_order as u128)?;
        let mut sk = ExtSkeleton {
            members,
            groups,
            spaces: specs,
            orbits: Vec::new(),
            orbit_of: HashMap::new(),
            group_order,
            hom_order,
        };
        sk.sweep()?;
        Ok(sk)
    }

    /// `Ext¹(M, N)` under `H_M × H_N`.
    pub fn single(m: &Representation, n: &Representation, hm: AutGroup, hn: AutGroup, budget: Budget) -> Result<Self> {
        ExtSkeleton::new(vec![m.clone(), n.clone()], vec![hm, hn], &[(vec![0], vec![1])], budget)
    }

    /// `Ext¹(⊕U, ⊕V)` under `Π Aut(u) × Π Aut(v)`.
    pub fn blocks(u: &[&Representation], v: &[&Representation], budget: Budget) -> Result<Self> {
        let members: Vec<Representation> = u.iter().chain(v).map(|r| (*r).clone()).collect();
        let groups = members
            .iter()
            .map(|m| AutGroup::of(m, budget))
            .collect::<Result<Vec<_>>>()?;
        let quot = (0..u.len()).collect();
        let sub = (u.len()..u.len() + v.len()).collect();
        ExtSkeleton::new(members, groups, &[(quot, sub)], budget)
    }

    pub fn space(&self, k: usize) -> &ExtSpace {
        &self.spaces[k].space
    }

    pub fn members(&self) -> &[Representation] {
        &self.members
    }

    fn element(&self, mut code: usize) -> Vec<usize> {
        self.groups
            .iter()
            .map(|g| {
                let e = code % g.order();
                code /= g.order();
                e
            })
            .collect()
    }

    /// The action of the group element with member indices `elem` on a tuple of classes.
    pub fn act(&self, elem: &[usize], classes: &[Vec<u32>]) -> Result<Vec<Vec<u32>>> {
        self.spaces
            .iter()
            .zip(classes)
            .map(|(spec, class)| {
                let alpha = sum_of(spec.sub.iter().map(|&i| &self.groups[i].elements[elem[i]]))?;
                let gamma_inv = sum_of(spec.quotient.iter().map(|&i| &self.groups[i].inverses[elem[i]]))?;
                let c = spec.space.representative(class);
                Ok(spec.space.class_of(&act_on_cocycle(&c, &alpha, &gamma_inv)))
            })
            .collect()
    }

    fn sweep(&mut self) -> Result<()> {
        let p = self.members[0].field().p();
        let dims: Vec<usize> = self.spaces.iter().map(|s| s.space.dim()).collect();
        let total: usize = dims.iter().sum();
        for flat in VectorOdometer::new(p, total) {
            let mut tuple = Vec::with_capacity(dims.len());
            let mut at = 0;
            for &d in &dims {
                tuple.push(flat[at..at + d].to_vec());
                at += d;
            }
            if self.orbit_of.contains_key(&tuple) {
                continue;
            }
            let index = self.orbits.len();
            let (mut size, mut stabilizer) = (0, 0);
            for code in 0..self.group_order {
                let image = self.act(&self.element(code), &tuple)?;
                if image == tuple {
                    stabilizer += 1;
                }
                if self.orbit_of.insert(image, index).is_none() {
                    size += 1;
                }
            }
            self.orbits.push(TupleOrbit {
                representative: tuple,
                size,
                stabilizer,
            });
        }
        Ok(())
    }

    pub fn aut_order(&self, orbit: usize) -> BigInt {
        &self.hom_order * self.orbits[orbit].stabilizer
    }

    /// `Σ 1/|Aut|` over the orbits.
    pub fn cardinality(&self) -> Rational {
        (0..self.orbits.len()).fold(Rational::zero(), |acc, o| {
            acc + Rational::new(BigInt::one(), self.aut_order(o))
        })
    }

    /// Sorted automorphism orders, one per class.
    pub fn skeleton(&self) -> Vec<BigInt> {
        let mut v: Vec<BigInt> = (0..self.orbits.len()).map(|o| self.aut_order(o)).collect();
        v.sort();
        v
    }

    /// The sequence `0 → ⊕V_k → E → ⊕U_k → 0` for class coordinates in space `k`.
    pub fn sequence(&self, k: usize, class: &[u32]) -> Result<ShortExact> {
        let spec = &self.spaces[k];
        middle_term(
            spec.space.quotient_rep(),
            spec.space.sub_rep(),
            &spec.space.representative(class),
        )
    }
}

fn sum_of<'a>(mut parts: impl Iterator<Item = &'a RepMorphism>) -> Result<RepMorphism> {
    let first = parts.next().ok_or_else(|| Error::Input("empty block".into()))?.clone();
    parts.try_fold(first, |acc, m| acc.direct_sum(m))
}

/// The exact pairs of `EXT(M, N)` with middle term one witness.
#[derive(Clone, Debug)]
pub struct ExtPiece {
    pub middle: ClassId,
    pub aut_middle: BigInt,
    pub objects: Vec<ShortExact>,
}

#[derive(Clone, Debug)]
pub struct ExtGroupoid {
    pub m: ClassId,
    pub n: ClassId,
    pub aut_m: BigInt,
    pub aut_n: BigInt,
    pub pieces: Vec<ExtPiece>,
}

/// Every exact pair with outer terms the witnesses of `m` and `n`: for each
/// injective `f: N → E` with `E/im f ≅ M`, fix one isomorphism `φ` and take
/// `g = γ φ π` for every `γ ∈ Aut M`.
pub fn build_ext(h: &HallAlgebra, m: &ClassId, n: &ClassId) -> Result<ExtGroupoid> {
    let budget = h.budget();
    let (mr, nr) = (h.rep(m)?, h.rep(n)?);
    let aut_m_group = AutGroup::of(&mr, budget)?;
    let grade = &m.dim + &n.dim;
    let mut pieces = Vec::new();
    for e in h.table(&grade)?.classes() {
        let mut objects = Vec::new();
        for f in HomSpace::new(&nr, &e.rep)?.elements(budget)? {
            if !f.is_injective() {
                continue;
            }
            let quot = quotient(&f)?;
            let phi = HomSpace::new(&quot.rep, &mr)?
                .elements(budget)?
                .find(RepMorphism::is_iso);
            let Some(phi) = phi else { continue };
            let to_m = quot.projection.then(&phi)?;
            for gamma in &aut_m_group.elements {
                objects.push(ShortExact::new(f.clone(), to_m.then(gamma)?)?);
            }
        }
        pieces.push(ExtPiece {
            middle: e.id.clone(),
            aut_middle: e.aut.clone(),
            objects,
        });
    }
    Ok(ExtGroupoid {
        m: m.clone(),
        n: n.clone(),
        aut_m: BigInt::from(aut_m_group.order()),
        aut_n: h.aut(n)?,
        pieces,
    })
}

impl ExtGroupoid {
    pub fn object_count(&self, middle: &ClassId) -> usize {
        self.pieces
            .iter()
            .find(|p| &p.middle == middle)
            .map_or(0, |p| p.objects.len())
    }

    pub fn total_objects(&self) -> usize {
        self.pieces.iter().map(|p| p.objects.len()).sum()
    }

    /// `Σ_E |pairs_E| / (|Aut N| |Aut E| |Aut M|)`.
    pub fn cardinality(&self) -> Rational {
        self.pieces.iter().fold(Rational::zero(), |acc, p| {
            acc + Rational::new(BigInt::from(p.objects.len()), &self.aut_n * &p.aut_middle * &self.aut_m)
        })
    }
}

/// Every pair `(f, g)` with `f: N → E` injective, `g: E → M` surjective and
/// `g f = 0`, by direct enumeration of both hom-spaces.
pub fn exact_pairs_direct(
    m: &Representation,
    n: &Representation,
    e: &Representation,
    budget: Budget,
) -> Result<Vec<ShortExact>> {
    if &(m.dim() + n.dim()) != e.dim() {
        return Ok(Vec::new());
    }
    let field = *m.field();
    let onto: Vec<RepMorphism> = HomSpace::new(e, m)?
        .elements(budget)?
        .filter(RepMorphism::is_surjective)
        .collect();
    let mut out = Vec::new();
    for f in HomSpace::new(n, e)?.elements(budget)? {
        if !f.is_injective() {
            continue;
        }
        for g in &onto {
            if (0..f.maps().len()).all(|i| field.is_zero_matrix(&field.matmul(g.at(i), f.at(i)))) {
                out.push(ShortExact::new(f.clone(), g.clone())?);
            }
        }
    }
    Ok(out)
}

fn pair_key(s: &ShortExact) -> Vec<u32> {
    s.inclusion()
        .maps()
        .iter()
        .chain(s.projection().maps())
        .flat_map(|m| m.entries().iter().copied())
        .collect()
}

/// Orbit sizes and stabilizer orders of exact pairs (all with the same
/// outer terms and middle) under `H_N × Aut E × H_M`, by applying every
/// group element to one member per orbit.
pub fn pair_orbits(objects: &[ShortExact], hn: &AutGroup, he: &AutGroup, hm: &AutGroup) -> Result<Vec<ClassOrbit>> {
    let index: HashMap<Vec<u32>, usize> = objects.iter().enumerate().map(|(i, s)| (pair_key(s), i)).collect();
    let mut seen = vec![false; objects.len()];
    let mut out = Vec::new();
    for start in 0..objects.len() {
        if seen[start] {
            continue;
        }
        let s = &objects[start];
        let mut stabilizer = 0;
        let mut size = 0;
        for (beta, beta_inv) in he.elements.iter().zip(&he.inverses) {
            let bf = s.inclusion().then(beta)?;
            let gb = beta_inv.then(s.projection())?;
            for alpha_inv in &hn.inverses {
                let f2 = alpha_inv.then(&bf)?;
                for gamma in &hm.elements {
                    let g2 = gb.then(gamma)?;
                    let key: Vec<u32> = f2
                        .maps()
                        .iter()
                        .chain(g2.maps())
                        .flat_map(|m| m.entries().iter().copied())
                        .collect();
                    let j = *index
                        .get(&key)
                        .ok_or_else(|| Error::InvalidSequence("group action leaves the object set".into()))?;
                    if j == start {
                        stabilizer += 1;
                    }
                    if !seen[j] {
                        seen[j] = true;
                        size += 1;
                    }
                }
            }
        }
        out.push(ClassOrbit {
            representative: pair_key(s),
            size,
            stabilizer,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::hall::algebra::tests::{a2, named};

    #[test]
    fn cocycles_round_trip() {
        let h = a2(3);
        let (s1, s2, _, _) = named(&h);
        let (m, n) = (h.rep(&s1).unwrap(), h.rep(&s2).unwrap());
        let space = ExtSpace::new(&m, &n).unwrap();
        for class in space.classes(h.budget()).unwrap() {
            let s = middle_term(&m, &n, &space.representative(&class)).unwrap();
            assert_eq!(ext_class(&s).unwrap(), class);
        }
    }

    #[test]
    fn ext_objects_by_middle_term() {
        for (p, expected) in [(2u64, 1usize), (3, 4)] {
            let h = a2(p);
            let (s1, s2, split, p1) = named(&h);
            let ext = build_ext(&h, &s1, &s2).unwrap();
            assert_eq!(ext.object_count(&split), expected);
            assert_eq!(ext.object_count(&p1), expected);
            let direct = exact_pairs_direct(
                &h.rep(&s1).unwrap(),
                &h.rep(&s2).unwrap(),
                &h.rep(&p1).unwrap(),
                h.budget(),
            );
            assert_eq!(direct.unwrap().len(), expected);
        }
        let h = a2(2);
        let (_, s2, _, _) = named(&h);
        let z = h.zero_class();
        let trivial = build_ext(&h, &z, &s2).unwrap();
        assert_eq!(trivial.total_objects(), 1);
    }

    #[test]
    fn orbits_and_stabilizers() {
        let h = a2(3);
        let (s1, s2, split, p1) = named(&h);
        let (m, n) = (h.rep(&s1).unwrap(), h.rep(&s2).unwrap());
        let b = h.budget();
        let (hm, hn) = (AutGroup::of(&m, b).unwrap(), AutGroup::of(&n, b).unwrap());
        let orbits = ExtSkeleton::single(&m, &n, hm.clone(), hn.clone(), b).unwrap();
        // split class and one orbit of the two nonzero classes
        assert_eq!(orbits.orbits.len(), 2);
        assert_eq!(orbits.cardinality(), rat(3, 4));
        let ext = build_ext(&h, &s1, &s2).unwrap();
        assert_eq!(ext.cardinality(), rat(3, 4));
        for e in [split, p1] {
            let piece = ext.pieces.iter().find(|p| p.middle == e).unwrap();
            let he = AutGroup::of(&h.rep(&e).unwrap(), b).unwrap();
            let o = pair_orbits(&piece.objects, &hn, &he, &hm).unwrap();
            assert_eq!(o.len(), 1);
            assert_eq!(o[0].size, piece.objects.len());
        }
    }
}
