//! Subrepresentations, quotients, extensions and the counts `P^E_{MN}`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactmath::linalg::{adapted_basis, rank, rank_kernel, solve_matrix};
use crate::exactmath::{subspaces, Budget, FpMatrix, Matrix, MatrixOps};
use crate::quiver::hom::{aut_order, is_isomorphic, HomSpace};
use crate::quiver::quiver::DimVector;
use crate::quiver::rep::{RepMorphism, Representation};

/// A short exact sequence `0 -> sub -f-> middle -g-> quotient -> 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShortExact {
    inclusion: RepMorphism,
    projection: RepMorphism,
}

impl ShortExact {
    /// Checks `f` injective, `g` surjective, `g∘f = 0` and
    /// `dim middle = dim sub + dim quotient`, which together give exactness.
    pub fn new(inclusion: RepMorphism, projection: RepMorphism) -> Result<Self> {
        if inclusion.target() != projection.source() {
            return Err(Error::InvalidSequence("middle terms differ".into()));
        }
        if !inclusion.commutes() || !projection.commutes() {
            return Err(Error::InvalidSequence("a map is not a morphism".into()));
        }
        if &(inclusion.source().dim() + projection.target().dim()) != inclusion.target().dim() {
            return Err(Error::InvalidSequence("dimension vectors do not add up".into()));
        }
        if !inclusion.is_injective() || !projection.is_surjective() {
            return Err(Error::InvalidSequence("not injective / surjective".into()));
        }
        if !inclusion.then(&projection)?.is_zero() {
            return Err(Error::InvalidSequence("composite is nonzero".into()));
        }
        Ok(ShortExact { inclusion, projection })
    }

    pub fn sub(&self) -> &Representation {
        self.inclusion.source()
    }

    pub fn middle(&self) -> &Representation {
        self.inclusion.target()
    }

    pub fn quotient(&self) -> &Representation {
        self.projection.target()
    }

    pub fn inclusion(&self) -> &RepMorphism {
        &self.inclusion
    }

    pub fn projection(&self) -> &RepMorphism {
        &self.projection
    }

    /// The split sequence `0 -> N -> N⊕M -> M -> 0`.
    pub fn split(m: &Representation, n: &Representation) -> Result<Self> {
        middle_term(m, n, &zero_cocycle(m, n))
    }

    /// Equivalent as extensions: there is `β: E -> E'` with `β f = f'` and `g' β = g`.
    pub fn equivalent(&self, other: &ShortExact, budget: Budget) -> Result<bool> {
        if self.sub() != other.sub() || self.quotient() != other.quotient() {
            return Ok(false);
        }
        let hom = HomSpace::new(self.middle(), other.middle())?;
        for beta in hom.elements(budget)? {
            if self.inclusion.then(&beta)? == other.inclusion && beta.then(&other.projection)? == self.projection {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// `E / U` for a subrepresentation `U`, with its projection and a vertexwise section.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub rep: Representation,
    pub projection: RepMorphism,
    pub section: Vec<FpMatrix>,
}

/// Quotient by the span of the given columns at each vertex.
pub fn quotient_by_spans(e: &Representation, spans: &[FpMatrix]) -> Result<Quotient> {
    let f = *e.field();
    let q = e.quiver().clone();
    if spans.len() != q.vertex_count() || spans.iter().enumerate().any(|(i, s)| s.rows() != e.dim()[i]) {
        return Err(Error::Shape("one spanning matrix per vertex, rows = dim".into()));
    }
    let splits: Vec<_> = spans.iter().map(|s| adapted_basis(&f, s)).collect();
    let proj: Vec<FpMatrix> = splits.iter().map(|s| s.quotient_map()).collect();
    let section: Vec<FpMatrix> = splits.iter().map(|s| s.section()).collect();
    let mut maps = Vec::with_capacity(q.arrows().len());
    for (a, &(s, t)) in q.arrows().iter().enumerate() {
        if !f.is_zero_matrix(&f.matmul(&proj[t], &f.matmul(e.edge(a), &spans[s]))) {
            return Err(Error::InvalidMorphism("subspaces are not a subrepresentation".into()));
        }
        maps.push(f.matmul(&proj[t], &f.matmul(e.edge(a), &section[s])));
    }
    let dim = DimVector(proj.iter().map(Matrix::rows).collect());
    let rep = Representation::new(q, f, dim, maps)?;
    let projection = RepMorphism::new(e.clone(), rep.clone(), proj)?;
    Ok(Quotient {
        rep,
        projection,
        section,
    })
}

/// `E / im(f)` for an injective `f: U -> E`.
pub fn quotient(f: &RepMorphism) -> Result<Quotient> {
    if !f.is_injective() {
        return Err(Error::NotInjective {
            vertex: (0..f.maps().len())
                .find(|&i| rank(f.source().field(), f.at(i)) < f.at(i).cols())
                .unwrap_or(0),
        });
    }
    quotient_by_spans(f.target(), f.maps())
}

/// The subrepresentation spanned by independent columns `bases[i]` at each
/// vertex, with its inclusion.
pub fn subrepresentation(e: &Representation, bases: Vec<FpMatrix>) -> Result<(Representation, RepMorphism)> {
    let f = *e.field();
    let q = e.quiver().clone();
    for (i, b) in bases.iter().enumerate() {
        if b.rows() != e.dim()[i] || rank(&f, b) != b.cols() {
            return Err(Error::Shape(format!("basis at vertex {i} is not independent")));
        }
    }
    let mut maps = Vec::with_capacity(q.arrows().len());
    for (a, &(s, t)) in q.arrows().iter().enumerate() {
        let image = f.matmul(e.edge(a), &bases[s]);
        let m = solve_matrix(&f, &bases[t], &image)
            .ok_or_else(|| Error::InvalidMorphism("subspaces are not a subrepresentation".into()))?;
        maps.push(m);
    }
    let dim = DimVector(bases.iter().map(Matrix::cols).collect());
    let sub = Representation::new(q, f, dim, maps)?;
    let incl = RepMorphism::new(sub.clone(), e.clone(), bases)?;
    Ok((sub, incl))
}

/// Every subrepresentation of `e` with dimension vector `dim`, as one
/// column basis per vertex in reduced echelon form.
pub fn subrepresentations(e: &Representation, dim: &DimVector, budget: Budget) -> Result<Vec<Vec<FpMatrix>>> {
    let f = *e.field();
    let q = e.quiver().clone();
    if dim.len() != e.dim().len() || (0..dim.len()).any(|i| dim[i] > e.dim()[i]) {
        return Ok(Vec::new());
    }
    let choices: Vec<Vec<FpMatrix>> = (0..dim.len())
        .map(|i| subspaces(&f, e.dim()[i], dim[i], budget))
        .collect::<Result<_>>()?;
    let total = choices.iter().fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128));
    budget.check(format!("vertexwise subspaces of dimension {dim}"), total)?;
    let closed = |pick: &[&FpMatrix]| {
        q.arrows().iter().enumerate().all(|(a, &(s, t))| {
            let image = f.matmul(e.edge(a), pick[s]);
            rank(&f, &f.hstack(pick[t], &image)) == pick[t].cols()
        })
    };
    let mut out = Vec::new();
    if total == 0 {
        return Ok(out);
    }
    let mut index = vec![0usize; choices.len()];
    loop {
        let pick: Vec<&FpMatrix> = index.iter().enumerate().map(|(v, &i)| &choices[v][i]).collect();
        if closed(&pick) {
            out.push(pick.into_iter().cloned().collect());
        }
        let mut v = index.len();
        loop {
            if v == 0 {
                return Ok(out);
            }
            v -= 1;
            index[v] += 1;
            if index[v] < choices[v].len() {
                break;
            }
            index[v] = 0;
        }
    }
}

/// `g⁻¹(im h)` as a subrepresentation of `g`'s source, for injective `h`
/// into `g`'s target.
pub fn preimage(g: &RepMorphism, h: &RepMorphism) -> Result<(Representation, RepMorphism)> {
    if g.target() != h.target() {
        return Err(Error::InvalidMorphism("preimage along different targets".into()));
    }
    let f = *g.source().field();
    let image_quotient = quotient(h)?;
    let bases = (0..g.maps().len())
        .map(|i| {
            let test = f.matmul(image_quotient.projection.at(i), g.at(i));
            let (_, kernel) = rank_kernel(&f, &test);
            Matrix::from_columns(g.source().dim()[i], &kernel)
        })
        .collect::<Result<Vec<_>>>()?;
    subrepresentation(g.source(), bases)
}

/// The zero cocycle for extensions of `m` by `n`.
pub fn zero_cocycle(m: &Representation, n: &Representation) -> Vec<FpMatrix> {
    m.quiver()
        .arrows()
        .iter()
        .map(|&(s, t)| m.field().zeros(n.dim()[t], m.dim()[s]))
        .collect()
}

/// The extension `0 -> N -> E -> M -> 0` with `E_i = N_i ⊕ M_i` and
/// `E_a = [[N_a, c_a], [0, M_a]]`.
pub fn middle_term(m: &Representation, n: &Representation, cocycle: &[FpMatrix]) -> Result<ShortExact> {
    m.same_category(n)?;
    let f = *m.field();
    let q = m.quiver().clone();
    if cocycle.len() != q.arrows().len() {
        return Err(Error::Shape(format!(
            "{} cocycle blocks for {} arrows",
            cocycle.len(),
            q.arrows().len()
        )));
    }
    let mut maps = Vec::with_capacity(q.arrows().len());
    for (a, &(s, t)) in q.arrows().iter().enumerate() {
        if cocycle[a].shape() != (n.dim()[t], m.dim()[s]) {
            return Err(Error::Shape(format!(
                "cocycle block {a} has shape {:?}",
                cocycle[a].shape()
            )));
        }
        let lower = f.zeros(m.dim()[t], n.dim()[s]);
        maps.push(f.block2x2(n.edge(a), &cocycle[a], &lower, m.edge(a)));
    }
    let e = Representation::new(q, f, n.dim() + m.dim(), maps)?;
    let incl = (0..m.dim().len())
        .map(|i| f.vstack(&f.identity(n.dim()[i]), &f.zeros(m.dim()[i], n.dim()[i])))
        .collect();
    let proj = (0..m.dim().len())
        .map(|i| f.hstack(&f.zeros(m.dim()[i], n.dim()[i]), &f.identity(m.dim()[i])))
        .collect();
    let inclusion = RepMorphism::new(n.clone(), e.clone(), incl)?;
    let projection = RepMorphism::new(e, m.clone(), proj)?;
    ShortExact::new(inclusion, projection)
}

/// `P^E_{MN} = |Aut(M)| · #{f: N -> E injective with E/im f ≅ M}`.
pub fn count_exact_pairs(m: &Representation, n: &Representation, e: &Representation, budget: Budget) -> Result<BigInt> {
    m.same_category(n)?;
    m.same_category(e)?;
    if &(m.dim() + n.dim()) != e.dim() {
        return Ok(BigInt::from(0));
    }
    let hom = HomSpace::new(n, e)?;
    let mut embeddings: u64 = 0;
    for f in hom.elements(budget)? {
        if f.is_injective() && is_isomorphic(&quotient(&f)?.rep, m, budget)? {
            embeddings += 1;
        }
    }
    if embeddings == 0 {
        return Ok(BigInt::from(0));
    }
    Ok(aut_order(m, budget)? * embeddings)
}

/// `P^E_{MN}` by enumerating every pair `(f, g)` and testing exactness.
pub fn count_exact_pairs_slow(
    m: &Representation,
    n: &Representation,
    e: &Representation,
    budget: Budget,
) -> Result<BigInt> {
    m.same_category(n)?;
    m.same_category(e)?;
    if &(m.dim() + n.dim()) != e.dim() {
        return Ok(BigInt::from(0));
    }
    let into = HomSpace::new(n, e)?;
    let onto = HomSpace::new(e, m)?;
    let f = *m.field();
    let vertices = m.dim().len();
    let surjections: Vec<RepMorphism> = onto.elements(budget)?.filter(RepMorphism::is_surjective).collect();
    let mut count: u64 = 0;
    for incl in into.elements(budget)? {
        if !incl.is_injective() {
            continue;
        }
        for proj in &surjections {
            if (0..vertices).all(|i| f.is_zero_matrix(&f.matmul(proj.at(i), incl.at(i)))) {
                count += 1;
            }
        }
    }
    Ok(BigInt::from(count))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::exactmath::PrimeField;
    use crate::quiver::hom::ExtSpace;
    use crate::quiver::quiver::Quiver;
    use crate::quiver::rep::summand_injection;

    fn reps(p: u64) -> (Representation, Representation, Representation) {
        let q = Arc::new(Quiver::linear_a(2));
        let f = PrimeField::new(p).unwrap();
        let s1 = Representation::simple(q.clone(), f, 0);
        let s2 = Representation::simple(q.clone(), f, 1);
        let p1 = Representation::from_entries(q, f, DimVector(vec![1, 1]), &[1]).unwrap();
        (s1, s2, p1)
    }

    #[test]
    fn exact_pair_counts_on_a2() {
        let b = Budget::default();
        for (p, expected) in [(2u64, 1), (3, 4)] {
            let (s1, s2, p1) = reps(p);
            let split = s1.direct_sum(&s2).unwrap();
            for (m, n, e) in [(&s1, &s2, &p1), (&s2, &s1, &split), (&s1, &s2, &split)] {
                let fast = count_exact_pairs(m, n, e, b).unwrap();
                assert_eq!(fast, count_exact_pairs_slow(m, n, e, b).unwrap());
                assert_eq!(fast, BigInt::from(expected));
            }
            assert_eq!(count_exact_pairs(&s2, &s1, &p1, b).unwrap(), BigInt::from(0));
            assert_eq!(count_exact_pairs(&s1, &s1, &p1, b).unwrap(), BigInt::from(0));
        }
    }

    #[test]
    fn subrepresentations_of_small_modules() {
        let b = Budget::default();
        let (s1, s2, p1) = reps(3);
        let count = |e: &Representation, d: Vec<usize>| subrepresentations(e, &DimVector(d), b).unwrap().len();
        assert_eq!(count(&p1, vec![0, 1]), 1);
        assert_eq!(count(&p1, vec![1, 0]), 0);
        assert_eq!(count(&s1.direct_sum(&s2).unwrap(), vec![1, 0]), 1);
        let s1s1 = s1.direct_sum(&s1).unwrap();
        assert_eq!(count(&s1s1, vec![1, 0]), 4);
        assert_eq!(count(&s1s1.direct_sum(&p1).unwrap(), vec![1, 1]), 13);
        assert_eq!(count(&p1, vec![3, 0]), 0);
    }

    #[test]
    fn quotients() {
        let (s1, s2, p1) = reps(2);
        let zero = Representation::zero(p1.quiver().clone(), *p1.field());
        let q0 = quotient(&RepMorphism::zero(&zero, &p1).unwrap()).unwrap();
        assert_eq!(q0.rep, p1);
        let hom = HomSpace::new(&s2, &p1).unwrap();
        let incl = hom.basis().remove(0);
        assert_eq!(quotient(&incl).unwrap().rep, s1);
        let sum = p1.direct_sum(&s2).unwrap();
        let inj = summand_injection(&s2, &sum, &p1.dim().clone()).unwrap();
        assert!(is_isomorphic(&quotient(&inj).unwrap().rep, &p1, Budget::default()).unwrap());
        assert!(quotient(&RepMorphism::zero(&s2, &p1).unwrap()).is_err());
    }

    #[test]
    fn middle_terms() {
        let b = Budget::default();
        let (s1, s2, p1) = reps(3);
        let ext = ExtSpace::new(&s1, &s2).unwrap();
        let split = middle_term(&s1, &s2, &ext.representative(&[0])).unwrap();
        assert_eq!(split.middle(), &s2.direct_sum(&s1).unwrap());
        let e1 = middle_term(&s1, &s2, &ext.representative(&[1])).unwrap();
        let e2 = middle_term(&s1, &s2, &ext.representative(&[2])).unwrap();
        assert!(is_isomorphic(e1.middle(), &p1, b).unwrap());
        assert!(is_isomorphic(e1.middle(), e2.middle(), b).unwrap());
        assert!(!e1.equivalent(&e2, b).unwrap());
        assert!(e1.equivalent(&e1, b).unwrap());
    }

    #[test]
    fn preimage_of_a_summand() {
        let (s1, s2, _) = reps(2);
        let m = s1.direct_sum(&s2).unwrap();
        let ses = ShortExact::split(&m, &s2).unwrap();
        let first = summand_injection(&s1, &m, &m.quiver().zero_dim()).unwrap();
        let (sub, incl) = preimage(ses.projection(), &first).unwrap();
        assert_eq!(sub.dim(), &DimVector(vec![1, 1]));
        assert!(incl.is_injective());
    }
}
