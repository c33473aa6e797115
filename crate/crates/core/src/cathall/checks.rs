//! Cardinality identities for `EXT`: the closed form, Riedtmann's count of
//! exact pairs by extension classes, and bilinearity in both arguments.

use std::collections::HashSet;

use num_bigint::BigInt;

use crate::cathall::base::{build_a0, direct_sum, RepGroupoid};
use crate::cathall::ses::{build_ext, ext_class, ExtSkeleton};
use crate::cathall::split::{glue_quot, glue_sub, split_quot, split_sub};
use crate::error::Result;
use crate::exactmath::{q_power, Rational};
use crate::hall::HallAlgebra;
use crate::quiver::{is_isomorphic, middle_term, ClassId, ExtSpace, HomSpace, Representation};
use crate::report::{CheckReport, Failure};

pub const CARDINALITY_SCOPE: &str = "object/cardinality level";

/// Two sides of an exact identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sides {
    pub lhs: Rational,
    pub rhs: Rational,
}

impl Sides {
    pub fn equal(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn instance_id(classes: &[&ClassId]) -> String {
    classes.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("|")
}

/// `Σ_E P^E_{MN}/(aut N aut E aut M)` from the objects of `EXT(M, N)`,
/// against `q^{-⟨m,n⟩}/(aut M aut N)`.
pub fn ext_cardinality_check(h: &HallAlgebra, m: &ClassId, n: &ClassId) -> Result<Sides> {
    let lhs = build_ext(h, m, n)?.cardinality();
    let rhs = q_power(h.q(), -h.euler(&m.dim, &n.dim)?) / Rational::from_integer(h.aut(m)? * h.aut(n)?);
    Ok(Sides { lhs, rhs })
}

/// `P^E_{MN}` against `|Ext¹(M,N)_E| · |Aut E| / |Hom(M,N)|`, where the
/// classes realizing `E` are counted by building every middle term.
pub fn riedtmann_check(h: &HallAlgebra, m: &ClassId, n: &ClassId, e: &ClassId) -> Result<Sides> {
    let lhs = Rational::from_integer(h.exact_pairs(m, n, e)?);
    if &m.dim + &n.dim != e.dim {
        return Ok(Sides {
            lhs,
            rhs: Rational::from_integer(BigInt::from(0)),
        });
    }
    let (mr, nr, er) = (h.rep(m)?, h.rep(n)?, h.rep(e)?);
    let space = ExtSpace::new(&mr, &nr)?;
    let mut realizing = 0u64;
    for class in space.classes(h.budget())? {
        let s = middle_term(&mr, &nr, &space.representative(&class))?;
        if is_isomorphic(s.middle(), &er, h.budget())? {
            realizing += 1;
        }
    }
    let hom = BigInt::from(h.q()).pow(HomSpace::new(&mr, &nr)?.dim() as u32);
    let rhs = Rational::new(BigInt::from(realizing) * h.aut(e)?, hom);
    Ok(Sides { lhs, rhs })
}

pub fn ext_cardinality_suite(h: &HallAlgebra, bound: usize, only: Option<&str>) -> Result<CheckReport> {
    let mut report = CheckReport::new("ext-cardinality", CARDINALITY_SCOPE);
    let classes = h.classes_up_to(bound)?;
    for m in &classes {
        for n in &classes {
            let id = instance_id(&[m, n]);
            if m.dim.total() + n.dim.total() > bound || only.is_some_and(|o| o != id) {
                continue;
            }
            let s = ext_cardinality_check(h, m, n)?;
            report.compare(&id, &s.lhs, &s.rhs, "|EXT(M,N)| against q^{-<m,n>}/(aut M aut N)");
        }
    }
    Ok(report)
}

pub fn riedtmann_suite(h: &HallAlgebra, bound: usize, only: Option<&str>) -> Result<CheckReport> {
    let mut report = CheckReport::new("riedtmann", "exact pair counts against cocycle classes");
    let classes = h.classes_up_to(bound)?;
    for m in &classes {
        for n in &classes {
            if m.dim.total() + n.dim.total() > bound {
                continue;
            }
            for e in h.table(&(&m.dim + &n.dim))?.classes() {
                let id = instance_id(&[m, n, &e.id]);
                if only.is_some_and(|o| o != id) {
                    continue;
                }
                let s = riedtmann_check(h, m, n, &e.id)?;
                report.compare(&id, &s.lhs, &s.rhs, "P^E_{MN} against |Ext¹_E| aut E / |Hom(M,N)|");
            }
        }
    }
    Ok(report)
}

/// Which argument of `EXT` is split as a direct sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `EXT(M₁ ⊕ M₂, N)`.
    Quotient,
    /// `EXT(M, N₁ ⊕ N₂)`.
    Sub,
}

/// The pieces of one bilinearity instance.
#[derive(Clone, Debug)]
pub struct Bilinearity {
    /// Splitting then gluing is the identity on classes, and the split
    /// pairs of classes are distinct and exhaust the product.
    pub class_bijection: bool,
    pub classes: usize,
    /// Over `A₀`: the tensor block against the fibered product over the
    /// shared argument, `|EXT(M₁,N)| |EXT(M₂,N)| |Aut N|`.
    pub over_a0: Sides,
    /// With `Aut(M₁ ⊕ M₂)` in place of `Aut M₁ × Aut M₂`, against the bare product.
    pub literal: Sides,
}

/// Bilinearity for `(a, b, c)`: `EXT(a ⊕ b, c)` when `side` is
/// [`Side::Quotient`], `EXT(a, b ⊕ c)` when it is [`Side::Sub`].
pub fn ext_bilinearity_check(
    h: &HallAlgebra,
    side: Side,
    a: &ClassId,
    b: &ClassId,
    c: &ClassId,
) -> Result<Bilinearity> {
    let budget = h.budget();
    let (ar, br, cr) = (h.rep(a)?, h.rep(b)?, h.rep(c)?);
    let (quot, sub, first, second): (Representation, Representation, &Representation, &Representation) = match side {
        Side::Quotient => (ar.direct_sum(&br)?, cr.clone(), &ar, &br),
        Side::Sub => (ar.clone(), br.direct_sum(&cr)?, &br, &cr),
    };
    let space = ExtSpace::new(&quot, &sub)?;
    let mut seen = HashSet::new();
    let mut class_bijection = true;
    let mut classes = 0usize;
    for class in space.classes(budget)? {
        classes += 1;
        let s = middle_term(&quot, &sub, &space.representative(&class))?;
        let (s1, s2) = match side {
            Side::Quotient => split_quot(&s, first, second)?,
            Side::Sub => split_sub(&s, first, second)?,
        };
        let glued = match side {
            Side::Quotient => glue_quot(&s1, &s2)?,
            Side::Sub => glue_sub(&s1, &s2)?,
        };
        if ext_class(&glued)? != class || !seen.insert((ext_class(&s1)?, ext_class(&s2)?)) {
            class_bijection = false;
        }
    }
    let (left, right, shared) = match side {
        Side::Quotient => (build_ext(h, a, c)?, build_ext(h, b, c)?, h.aut(c)?),
        Side::Sub => (build_ext(h, a, b)?, build_ext(h, a, c)?, h.aut(a)?),
    };
    let blocks = match side {
        Side::Quotient => ExtSkeleton::blocks(&[&ar, &br], &[&cr], budget)?,
        Side::Sub => ExtSkeleton::blocks(&[&ar], &[&br, &cr], budget)?,
    };
    let product = left.cardinality() * right.cardinality();
    let over_a0 = Sides {
        lhs: blocks.cardinality(),
        rhs: &product * Rational::from_integer(shared),
    };
    let summed = h.class_of(&direct_sum(&[first, second])?)?;
    let whole = match side {
        Side::Quotient => build_ext(h, &summed, c)?,
        Side::Sub => build_ext(h, a, &summed)?,
    };
    let literal = Sides {
        lhs: whole.cardinality(),
        rhs: product,
    };
    let pairs = ExtSpace::new(&h.rep(&left.m)?, &h.rep(&left.n)?)?.dim()
        + ExtSpace::new(&h.rep(&right.m)?, &h.rep(&right.n)?)?.dim();
    let covered = seen.len() == classes && classes as u128 == (h.q() as u128).pow(pairs as u32);
    Ok(Bilinearity {
        class_bijection: class_bijection && covered,
        classes,
        over_a0,
        literal,
    })
}

pub fn ext_bilinearity_suite(h: &HallAlgebra, bound: usize, only: Option<&str>) -> Result<CheckReport> {
    let mut report = CheckReport::new(
        "ext-bilinearity",
        "class-level bijection through the split and glue maps; cardinalities over A0 with \
         automorphisms of the tensor members; the literal form with Aut of the chosen direct sum",
    );
    let classes = h.classes_up_to(bound)?;
    for a in &classes {
        for b in &classes {
            for c in &classes {
                if a.dim.total() + b.dim.total() + c.dim.total() > bound {
                    continue;
                }
                for (side, tag) in [(Side::Quotient, "quot"), (Side::Sub, "sub")] {
                    let id = format!("{tag}:{}", instance_id(&[a, b, c]));
                    if only.is_some_and(|o| o != id) {
                        continue;
                    }
                    let r = ext_bilinearity_check(h, side, a, b, c)?;
                    let mut fails = Vec::new();
                    if !r.class_bijection {
                        fails.push(Failure::new(
                            &id,
                            "split and glue are not inverse bijections on classes",
                        ));
                    }
                    if !r.over_a0.equal() {
                        fails.push(Failure::unequal(
                            &id,
                            &r.over_a0.lhs,
                            &r.over_a0.rhs,
                            "tensor block over A0",
                        ));
                    }
                    if !r.literal.equal() {
                        fails.push(Failure::unequal(
                            &id,
                            &r.literal.lhs,
                            &r.literal.rhs,
                            "literal identity with Aut of the direct sum",
                        ));
                    }
                    report.instances += 1;
                    report.failures.extend(fails);
                }
            }
        }
    }
    Ok(report)
}

/// `A₀(bound)` hom-set sizes against automorphism orders.
pub fn a0_check(h: &HallAlgebra, bound: usize) -> Result<(RepGroupoid, bool)> {
    let a0 = build_a0(h, bound)?;
    let ok = a0.check_hom_sets(h.budget())?;
    Ok((a0, ok))
}
