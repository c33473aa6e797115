//! Isomorphism classes of representations with a fixed dimension vector.
//!
//! Edge-map tuples are walked in lexicographic order; the first tuple not yet
//! seen starts a new class, and its orbit under `∏_i GL(d_i)` is swept by a
//! breadth-first search over elementary generators. Every tuple therefore
//! carries the index of its class, and canonical representatives are the
//! lexicographically least members of their orbits.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::field::gl_order;
use crate::exactmath::{Budget, Field, FpMatrix, MatrixOps, PrimeField};
use crate::quiver::quiver::{DimVector, Quiver};
use crate::quiver::rep::Representation;

/// Stable key of an isomorphism class: dimension vector plus the index of its
/// representative in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassId {
    pub dim: DimVector,
    pub index: usize,
}

impl ClassId {
    pub fn zero(quiver: &Quiver) -> Self {
        ClassId {
            dim: quiver.zero_dim(),
            index: 0,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::UnknownClass(text.to_string());
        let (dim, index) = text.rsplit_once('#').ok_or_else(bad)?;
        let inner = dim
            .strip_prefix('(')
            .and_then(|d| d.strip_suffix(')'))
            .ok_or_else(bad)?;
        let dims = if inner.is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?
        };
        Ok(ClassId {
            dim: DimVector(dims),
            index: index.parse().map_err(|_| bad())?,
        })
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.dim, self.index)
    }
}

#[derive(Clone, Debug)]
pub struct IsoClass {
    pub id: ClassId,
    /// Lexicographically least edge-map tuple in the class.
    pub rep: Representation,
    /// Number of edge-map tuples isomorphic to `rep`.
    pub orbit_size: u64,
    /// `|Aut(rep)| = |∏ GL(d_i)| / orbit_size`.
    pub aut: BigInt,
}

impl IsoClass {
    /// Label qualified by the quiver, unique across quivers.
    pub fn label(&self) -> String {
        format!("{}:{}", self.rep.quiver().id(), self.id)
    }
}

/// All isomorphism classes of one dimension vector.
#[derive(Clone, Debug)]
pub struct ClassTable {
    dim: DimVector,
    field: PrimeField,
    classes: Vec<IsoClass>,
    /// Class index of every tuple, indexed by its base-p code.
    assignment: Vec<u32>,
    group_order: BigInt,
}

const UNSEEN: u32 = u32::MAX;

fn tuple_len(quiver: &Quiver, dim: &DimVector) -> usize {
    quiver.arrows().iter().map(|&(s, t)| dim[s] * dim[t]).sum()
}

fn encode(p: u32, entries: &[u32]) -> usize {
    entries.iter().fold(0usize, |acc, &e| acc * p as usize + e as usize)
}

fn decode(p: u32, len: usize, mut code: usize) -> Vec<u32> {
    let mut out = vec![0u32; len];
    for slot in out.iter_mut().rev() {
        *slot = (code % p as usize) as u32;
        code /= p as usize;
    }
    out
}

fn primitive_root(f: &PrimeField) -> u32 {
    let p = f.p();
    (1..p)
        .find(|&g| {
            let mut x = 1u32;
            (1..p - 1).all(|_| {
                x = f.mul(&x, &g);
                x != 1
            })
        })
        .unwrap_or(1)
}

/// Generator `g` of the vertex group together with `g^{-1}`.
struct Generator {
    vertex: usize,
    forward: FpMatrix,
    inverse: FpMatrix,
}

fn generators(f: &PrimeField, dim: &DimVector) -> Vec<Generator> {
    let omega = primitive_root(f);
    let omega_inv = f.inv(&omega).expect("unit");
    let mut out = Vec::new();
    for (vertex, &d) in dim.0.iter().enumerate() {
        for r in 0..d {
            for c in 0..d {
                if r == c {
                    continue;
                }
                let mut forward = f.identity(d);
                forward.set(r, c, 1 % f.p());
                let mut inverse = f.identity(d);
                inverse.set(r, c, f.neg(&1));
                out.push(Generator {
                    vertex,
                    forward,
                    inverse,
                });
            }
        }
        if omega != 1 && d > 0 {
            let mut forward = f.identity(d);
            forward.set(0, 0, omega);
            let mut inverse = f.identity(d);
            inverse.set(0, 0, omega_inv);
            out.push(Generator {
                vertex,
                forward,
                inverse,
            });
        }
    }
    out
}

/// Apply a vertex base change: `M_a ↦ g_t M_a g_s^{-1}` at the generator's vertex.
fn act(f: &PrimeField, quiver: &Quiver, maps: &[FpMatrix], g: &Generator) -> Vec<FpMatrix> {
    quiver
        .arrows()
        .iter()
        .zip(maps)
        .map(|(&(s, t), m)| {
            let mut out = m.clone();
            if t == g.vertex {
                out = f.matmul(&g.forward, &out);
            }
            if s == g.vertex {
                out = f.matmul(&out, &g.inverse);
            }
            out
        })
        .collect()
}

impl ClassTable {
    pub fn classify(quiver: &Arc<Quiver>, field: PrimeField, dim: &DimVector, budget: Budget) -> Result<Self> {
        if dim.len() != quiver.vertex_count() {
            return Err(Error::Shape(format!(
                "dimension vector {dim} on {} vertices",
                quiver.vertex_count()
            )));
        }
        let p = field.p();
        let len = tuple_len(quiver, dim);
        let total = budget.check_power(format!("edge-map tuples of dimension {dim} over F_{p}"), p, len)?;
        let total = usize::try_from(total).map_err(|_| Error::BudgetExceeded {
            what: "edge-map tuples".into(),
            count: total,
            budget: budget.0,
        })?;
        let group_order: BigInt = dim.0.iter().map(|&d| gl_order(d, u64::from(p))).product();
        let gens = generators(&field, dim);
        let mut assignment = vec![UNSEEN; total];
        let mut classes = Vec::new();
        let mut queue = VecDeque::new();
        for code in 0..total {
            if assignment[code] != UNSEEN {
                continue;
            }
            let index = classes.len() as u32;
            let rep = Representation::from_entries(quiver.clone(), field, dim.clone(), &decode(p, len, code))?;
            assignment[code] = index;
            queue.push_back(rep.maps().to_vec());
            let mut orbit_size = 1u64;
            while let Some(maps) = queue.pop_front() {
                for g in &gens {
                    let next = act(&field, quiver, &maps, g);
                    let entries: Vec<u32> = next.iter().flat_map(|m| m.entries().iter().copied()).collect();
                    let c = encode(p, &entries);
                    if assignment[c] == UNSEEN {
                        assignment[c] = index;
                        orbit_size += 1;
                        queue.push_back(next);
                    }
                }
            }
            let (aut, rem) = group_order.div_rem(&BigInt::from(orbit_size));
            debug_assert!(rem.is_zero(), "orbit size divides the group order");
            classes.push(IsoClass {
                id: ClassId {
                    dim: dim.clone(),
                    index: index as usize,
                },
                rep,
                orbit_size,
                aut,
            });
        }
        Ok(ClassTable {
            dim: dim.clone(),
            field,
            classes,
            assignment,
            group_order,
        })
    }

    pub fn dim(&self) -> &DimVector {
        &self.dim
    }

    pub fn classes(&self) -> &[IsoClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&IsoClass> {
        self.classes.get(index)
    }

    /// `|∏_i GL(d_i)|`.
    pub fn group_order(&self) -> &BigInt {
        &self.group_order
    }

    /// The class of an arbitrary representation of this dimension vector.
    pub fn lookup(&self, rep: &Representation) -> Result<&IsoClass> {
        if rep.dim() != &self.dim || rep.field() != &self.field {
            return Err(Error::UnknownClass(format!(
                "{:?} is not in the table for {}",
                rep, self.dim
            )));
        }
        let code = encode(self.field.p(), &rep.entries());
        Ok(&self.classes[self.assignment[code] as usize])
    }
}

/// Classes of dimension `dim`, canonical representatives first in enumeration order.
pub fn classify(quiver: &Arc<Quiver>, field: PrimeField, dim: &DimVector, budget: Budget) -> Result<Vec<IsoClass>> {
    Ok(ClassTable::classify(quiver, field, dim, budget)?.classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::hom::{aut_order, is_isomorphic};

    fn a2(p: u64) -> (Arc<Quiver>, PrimeField) {
        (Arc::new(Quiver::linear_a(2)), PrimeField::new(p).unwrap())
    }

    #[test]
    fn a2_classes_over_f2() {
        let (q, f) = a2(2);
        let b = Budget::default();
        assert_eq!(classify(&q, f, &DimVector(vec![1, 0]), b).unwrap().len(), 1);
        let c11 = classify(&q, f, &DimVector(vec![1, 1]), b).unwrap();
        assert_eq!(c11.len(), 2);
        assert_eq!(c11[0].rep.entries(), vec![0]);
        assert_eq!(c11[1].rep.entries(), vec![1]);
        let c21 = classify(&q, f, &DimVector(vec![2, 1]), b).unwrap();
        // zero map gives S1²⊕S2; the three nonzero 1x2 maps give S1⊕P1
        assert_eq!(c21.len(), 2);
        assert_eq!(c21[0].orbit_size, 1);
        assert_eq!(c21[1].orbit_size, 3);
    }

    #[test]
    fn labels_agree_with_isomorphism() {
        let (q, f) = a2(3);
        let b = Budget::default();
        for dim in q.dims_up_to(3) {
            let table = ClassTable::classify(&q, f, &dim, b).unwrap();
            let all: Vec<Representation> = (0..table.assignment.len())
                .map(|c| {
                    Representation::from_entries(q.clone(), f, dim.clone(), &decode(3, tuple_len(&q, &dim), c)).unwrap()
                })
                .collect();
            for x in all.iter().step_by(3) {
                for y in all.iter().step_by(2) {
                    let same = table.lookup(x).unwrap().id == table.lookup(y).unwrap().id;
                    assert_eq!(same, is_isomorphic(x, y, b).unwrap(), "{x:?} {y:?}");
                }
            }
        }
    }

    #[test]
    fn orbit_stabilizer_and_direct_aut_agree() {
        for p in [2u64, 3] {
            let (q, f) = a2(p);
            let b = Budget::default();
            for dim in q.dims_up_to(3) {
                let table = ClassTable::classify(&q, f, &dim, b).unwrap();
                let tuples: u64 = table.classes().iter().map(|c| c.orbit_size).sum();
                assert_eq!(tuples as usize, table.assignment.len());
                for class in table.classes() {
                    assert_eq!(class.aut, aut_order(&class.rep, b).unwrap(), "{}", class.id);
                }
            }
        }
    }

    #[test]
    fn class_ids_round_trip() {
        let id = ClassId {
            dim: DimVector(vec![2, 1]),
            index: 1,
        };
        assert_eq!(id.to_string(), "(2,1)#1");
        assert_eq!(ClassId::parse("(2,1)#1").unwrap(), id);
        assert!(ClassId::parse("2,1#1").is_err());
    }
}
