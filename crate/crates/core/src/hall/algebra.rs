//! Structure constants and the product and coproduct of the Hall algebra.
//!
//! Everything derives from one table per class `E`: the number `P^E_{MN}`
//! of exact pairs `0 -> N -> E -> M -> 0` for every sub class `N` and
//! quotient class `M`. Tables are memoized behind mutexes, so a shared
//! `HallAlgebra` can serve concurrent readers.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactmath::{q_power, Budget, PrimeField, Rational};
use crate::hall::linear::{HallTensor, HallTriple, HallVector};
use crate::quiver::{
    quotient_by_spans, subrepresentation, subrepresentations, ClassId, ClassTable, DimVector, IsoClass, Quiver,
    Representation,
};

/// `P^E_{MN}` for one middle term `E`, keyed by `(sub N, quotient M)`.
#[derive(Clone, Debug, Default)]
pub struct Factorization {
    pub counts: BTreeMap<(ClassId, ClassId), BigInt>,
}

impl Factorization {
    pub fn get(&self, sub: &ClassId, quot: &ClassId) -> BigInt {
        self.counts
            .get(&(sub.clone(), quot.clone()))
            .cloned()
            .unwrap_or_default()
    }
}

struct Memo<K, V> {
    inner: Mutex<HashMap<K, Arc<V>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    fn new() -> Self {
        Memo {
            inner: Mutex::new(HashMap::new()),
        }
    }

    /// Computed outside the lock; concurrent first calls may both compute,
    /// and the first stored value wins.
    fn get_or(&self, key: &K, compute: impl FnOnce() -> Result<V>) -> Result<Arc<V>> {
        if let Some(v) = self.inner.lock().expect("memo lock").get(key) {
            return Ok(v.clone());
        }
        let value = Arc::new(compute()?);
        let mut guard = self.inner.lock().expect("memo lock");
        Ok(guard.entry(key.clone()).or_insert(value).clone())
    }
}

/// The Hall algebra of a quiver over `F_q`, computed on demand.
pub struct HallAlgebra {
    quiver: Arc<Quiver>,
    field: PrimeField,
    budget: Budget,
    tables: Memo<DimVector, ClassTable>,
    factors: Memo<ClassId, Factorization>,
    products: Memo<(ClassId, ClassId), HallVector>,
    coproducts: Memo<ClassId, HallTensor>,
}

impl HallAlgebra {
    pub fn new(quiver: Arc<Quiver>, field: PrimeField, budget: Budget) -> Self {
        HallAlgebra {
            quiver,
            field,
            budget,
            tables: Memo::new(),
            factors: Memo::new(),
            products: Memo::new(),
            coproducts: Memo::new(),
        }
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    /// The `q` of the formulas: the field size.
    pub fn q(&self) -> u64 {
        self.field.order()
    }

    pub fn table(&self, dim: &DimVector) -> Result<Arc<ClassTable>> {
        self.tables
            .get_or(dim, || ClassTable::classify(&self.quiver, self.field, dim, self.budget))
    }

    pub fn class(&self, id: &ClassId) -> Result<IsoClass> {
        let table = self.table(&id.dim)?;
        table
            .get(id.index)
            .cloned()
            .ok_or_else(|| Error::UnknownClass(id.to_string()))
    }

    pub fn rep(&self, id: &ClassId) -> Result<Representation> {
        Ok(self.class(id)?.rep)
    }

    pub fn aut(&self, id: &ClassId) -> Result<BigInt> {
        Ok(self.class(id)?.aut)
    }

    pub fn class_of(&self, rep: &Representation) -> Result<ClassId> {
        Ok(self.table(rep.dim())?.lookup(rep)?.id.clone())
    }

    pub fn zero_class(&self) -> ClassId {
        ClassId::zero(&self.quiver)
    }

    pub fn simple_class(&self, vertex: usize) -> ClassId {
        ClassId {
            dim: self.quiver.simple_dim(vertex),
            index: 0,
        }
    }

    /// Every class of total dimension at most `bound`, by grade then index.
    pub fn classes_up_to(&self, bound: usize) -> Result<Vec<ClassId>> {
        let mut out = Vec::new();
        for d in self.quiver.dims_up_to(bound) {
            let table = self.table(&d)?;
            out.extend(table.classes().iter().map(|c| c.id.clone()));
        }
        Ok(out)
    }

    pub fn euler(&self, a: &DimVector, b: &DimVector) -> Result<i64> {
        self.quiver.euler_form(a, b)
    }

    /// `q^{-⟨a,b⟩}`.
    pub fn braid_factor(&self, a: &DimVector, b: &DimVector) -> Result<Rational> {
        Ok(q_power(self.q(), -self.euler(a, b)?))
    }

    /// Every `(N, M)` with `P^E_{MN} > 0`.
    pub fn factorization(&self, e: &ClassId) -> Result<Arc<Factorization>> {
        self.factors.get_or(e, || self.compute_factorization(e))
    }

    /// `P^E_{MN} = |Aut M| |Aut N| · #{U ≤ E : U ≅ N, E/U ≅ M}`.
    fn compute_factorization(&self, e: &ClassId) -> Result<Factorization> {
        let middle = self.rep(e)?;
        let mut counts: BTreeMap<(ClassId, ClassId), BigInt> = BTreeMap::new();
        for n_dim in e.dim.sub_vectors() {
            let m_dim = e.dim.checked_sub(&n_dim).expect("sub vector");
            let subs = self.table(&n_dim)?;
            let quots = self.table(&m_dim)?;
            for bases in subrepresentations(&middle, &n_dim, self.budget)? {
                let quot = quots.lookup(&quotient_by_spans(&middle, &bases)?.rep)?;
                let (sub_rep, _) = subrepresentation(&middle, bases)?;
                let sub = subs.lookup(&sub_rep)?;
                *counts.entry((sub.id.clone(), quot.id.clone())).or_default() += &sub.aut * &quot.aut;
            }
        }
        Ok(Factorization { counts })
    }

    /// `P^E_{MN}`: exact pairs `0 -> N -> E -> M -> 0`.
    pub fn exact_pairs(&self, m: &ClassId, n: &ClassId, e: &ClassId) -> Result<BigInt> {
        if &m.dim + &n.dim != e.dim {
            return Ok(BigInt::from(0));
        }
        Ok(self.factorization(e)?.get(n, m))
    }

    fn check_bound(&self, grade: &DimVector, bound: usize) -> Result<()> {
        if grade.total() > bound {
            return Err(Error::BoundExceeded {
                found: grade.total(),
                bound,
            });
        }
        Ok(())
    }

    pub fn unit(&self) -> HallVector {
        HallVector::basis(self.zero_class())
    }

    /// `ε([E]) = 1` iff `E = 0`.
    pub fn counit(&self, x: &HallVector) -> Rational {
        x.coeff(&self.zero_class())
    }

    /// `[M]·[N] = Σ_E P^E_{MN} / (aut M · aut N) [E]`.
    pub fn product_basis(&self, m: &ClassId, n: &ClassId) -> Result<Arc<HallVector>> {
        self.products.get_or(&(m.clone(), n.clone()), || {
            let grade = &m.dim + &n.dim;
            let denom = self.aut(m)? * self.aut(n)?;
            let mut out = HallVector::new();
            for e in self.table(&grade)?.classes() {
                let p = self.factorization(&e.id)?.get(n, m);
                if p != BigInt::from(0) {
                    out.add_term(e.id.clone(), Rational::new(p, denom.clone()));
                }
            }
            Ok(out)
        })
    }

    pub fn product(&self, x: &HallVector, y: &HallVector, bound: usize) -> Result<HallVector> {
        let mut out = HallVector::new();
        for (m, a) in x.iter() {
            for (n, b) in y.iter() {
                self.check_bound(&(&m.dim + &n.dim), bound)?;
                out.add_scaled(&*self.product_basis(m, n)?, &(a * b));
            }
        }
        Ok(out)
    }

    /// `Δ([E]) = Σ P^E_{MN} / aut E [N]⊗[M]`.
    pub fn coproduct_basis(&self, e: &ClassId) -> Result<Arc<HallTensor>> {
        self.coproducts.get_or(e, || {
            let aut = self.aut(e)?;
            Ok(self
                .factorization(e)?
                .counts
                .iter()
                .map(|((n, m), p)| ((n.clone(), m.clone()), Rational::new(p.clone(), aut.clone())))
                .collect())
        })
    }

    pub fn coproduct(&self, x: &HallVector, bound: usize) -> Result<HallTensor> {
        let mut out = HallTensor::new();
        for (e, c) in x.iter() {
            self.check_bound(&e.dim, bound)?;
            out.add_scaled(&*self.coproduct_basis(e)?, c);
        }
        Ok(out)
    }

    /// `(ε⊗1)Δ` and `(1⊗ε)Δ`.
    pub fn counit_sides(&self, t: &HallTensor) -> (HallVector, HallVector) {
        let zero = self.zero_class();
        let mut left = HallVector::new();
        let mut right = HallVector::new();
        for ((a, b), c) in t.iter() {
            if *a == zero {
                left.add_term(b.clone(), c.clone());
            }
            if *b == zero {
                right.add_term(a.clone(), c.clone());
            }
        }
        (left, right)
    }

    /// `(x·y)·z − x·(y·z)`.
    pub fn associator(&self, x: &HallVector, y: &HallVector, z: &HallVector, bound: usize) -> Result<HallVector> {
        let left = self.product(&self.product(x, y, bound)?, z, bound)?;
        let right = self.product(x, &self.product(y, z, bound)?, bound)?;
        Ok(left.minus(&right))
    }

    /// `(Δ⊗1)Δ(x) − (1⊗Δ)Δ(x)`.
    pub fn coassociator(&self, x: &HallVector, bound: usize) -> Result<HallTriple> {
        let once = self.coproduct(x, bound)?;
        let mut left = HallTriple::new();
        let mut right = HallTriple::new();
        for ((a, b), c) in once.iter() {
            for ((a1, a2), c1) in self.coproduct_basis(a)?.iter() {
                left.add_term((a1.clone(), a2.clone(), b.clone()), c * c1);
            }
            for ((b1, b2), c2) in self.coproduct_basis(b)?.iter() {
                right.add_term((a.clone(), b1.clone(), b2.clone()), c * c2);
            }
        }
        Ok(left.minus(&right))
    }

    /// Coefficient check of the orbit-stabilizer identity
    /// `Σ_[E] |∏GL(d_i)| / aut(E) = p^{#entries}` for one grade.
    pub fn orbit_sum(&self, dim: &DimVector) -> Result<(BigInt, BigInt)> {
        let table = self.table(dim)?;
        let sum: BigInt = table.classes().iter().map(|c| table.group_order() / &c.aut).sum();
        let entries: usize = self.quiver.arrows().iter().map(|&(s, t)| dim[s] * dim[t]).sum();
        let total = (0..entries).fold(BigInt::one(), |acc, _| acc * self.field.p());
        Ok((sum, total))
    }
}
