use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactmath::linalg::rank;
use crate::exactmath::{FpMatrix, MatrixOps, PrimeField};
use crate::quiver::quiver::{DimVector, Quiver};

/// A representation of a quiver over `F_p`: a space `F_p^{d_i}` at each
/// vertex and a `d_tgt x d_src` matrix per arrow.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Representation {
    quiver: Arc<Quiver>,
    field: PrimeField,
    dim: DimVector,
    maps: Vec<FpMatrix>,
}

impl Representation {
    pub fn new(quiver: Arc<Quiver>, field: PrimeField, dim: DimVector, maps: Vec<FpMatrix>) -> Result<Self> {
        if dim.len() != quiver.vertex_count() {
            return Err(Error::Shape(format!(
                "dimension vector {dim} on {} vertices",
                quiver.vertex_count()
            )));
        }
        if maps.len() != quiver.arrows().len() {
            return Err(Error::Shape(format!(
                "{} edge maps for {} arrows",
                maps.len(),
                quiver.arrows().len()
            )));
        }
        for (a, (&(s, t), m)) in quiver.arrows().iter().zip(&maps).enumerate() {
            if m.shape() != (dim[t], dim[s]) {
                return Err(Error::Shape(format!(
                    "arrow {a} needs a {}x{} matrix, got {:?}",
                    dim[t],
                    dim[s],
                    m.shape()
                )));
            }
            if m.entries().iter().any(|&x| x >= field.p()) {
                return Err(Error::Shape(format!("arrow {a} has entries outside F_{}", field.p())));
            }
        }
        Ok(Representation {
            quiver,
            field,
            dim,
            maps,
        })
    }

    /// Build from a flat entry sequence: arrow by arrow, each row-major.
    pub fn from_entries(quiver: Arc<Quiver>, field: PrimeField, dim: DimVector, entries: &[u32]) -> Result<Self> {
        let mut maps = Vec::with_capacity(quiver.arrows().len());
        let mut at = 0;
        for &(s, t) in quiver.arrows() {
            let len = dim[t] * dim[s];
            let chunk = entries
                .get(at..at + len)
                .ok_or_else(|| Error::Shape("too few edge-map entries".into()))?;
            maps.push(FpMatrix::new(dim[t], dim[s], chunk.to_vec())?);
            at += len;
        }
        if at != entries.len() {
            return Err(Error::Shape("too many edge-map entries".into()));
        }
        Representation::new(quiver, field, dim, maps)
    }

    pub fn zero(quiver: Arc<Quiver>, field: PrimeField) -> Self {
        let dim = quiver.zero_dim();
        Representation::with_zero_maps(quiver, field, dim)
    }

    /// All edge maps zero; for a simple this is the only choice.
    pub fn with_zero_maps(quiver: Arc<Quiver>, field: PrimeField, dim: DimVector) -> Self {
        let maps = quiver
            .arrows()
            .iter()
            .map(|&(s, t)| field.zeros(dim[t], dim[s]))
            .collect();
        Representation {
            quiver,
            field,
            dim,
            maps,
        }
    }

    pub fn simple(quiver: Arc<Quiver>, field: PrimeField, vertex: usize) -> Self {
        let dim = quiver.simple_dim(vertex);
        Representation::with_zero_maps(quiver, field, dim)
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn dim(&self) -> &DimVector {
        &self.dim
    }

    pub fn maps(&self) -> &[FpMatrix] {
        &self.maps
    }

    pub fn edge(&self, arrow: usize) -> &FpMatrix {
        &self.maps[arrow]
    }

    pub fn is_zero(&self) -> bool {
        self.dim.is_zero()
    }

    /// Concatenated edge-map entries, the enumeration key.
    pub fn entries(&self) -> Vec<u32> {
        self.maps.iter().flat_map(|m| m.entries().iter().copied()).collect()
    }

    pub fn same_category(&self, other: &Representation) -> Result<()> {
        if (self.quiver == other.quiver || *self.quiver == *other.quiver) && self.field == other.field {
            return Ok(());
        }
        Err(Error::QuiverMismatch)
    }

    /// Block-diagonal direct sum `self ⊕ other`, `self` in the leading block.
    ///
    /// Strictly associative as an equality of representations: `(a⊕b)⊕c == a⊕(b⊕c)`.
    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        self.same_category(other)?;
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| self.field.block_diag(a, b))
            .collect();
        Ok(Representation {
            quiver: self.quiver.clone(),
            field: self.field,
            dim: &self.dim + &other.dim,
            maps,
        })
    }

    /// `⊕` of a list, as left-nested sums; the empty sum is the zero representation.
    pub fn sum_all<'a>(
        quiver: Arc<Quiver>,
        field: PrimeField,
        parts: impl IntoIterator<Item = &'a Representation>,
    ) -> Result<Representation> {
        let mut acc = Representation::zero(quiver, field);
        for p in parts {
            acc = acc.direct_sum(p)?;
        }
        Ok(acc)
    }

    /// Rank of the composite map along a path of arrow indices.
    pub fn path_rank(&self, path: &[usize]) -> usize {
        let (s0, _) = self.quiver.arrows()[path[0]];
        let mut acc = self.field.identity(self.dim[s0]);
        for &a in path {
            acc = self.field.matmul(&self.maps[a], &acc);
        }
        rank(&self.field, &acc)
    }
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rep{}/F{} {:?}", self.dim, self.field.p(), self.maps)
    }
}

/// A morphism of representations, one matrix per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RepMorphism {
    source: Representation,
    target: Representation,
    maps: Vec<FpMatrix>,
}

impl RepMorphism {
    /// Checks shapes and every commuting square.
    pub fn new(source: Representation, target: Representation, maps: Vec<FpMatrix>) -> Result<Self> {
        let m = RepMorphism::new_unchecked(source, target, maps)?;
        if !m.commutes() {
            return Err(Error::InvalidMorphism("a square does not commute".into()));
        }
        Ok(m)
    }

    /// Checks shapes only.
    pub(crate) fn new_unchecked(source: Representation, target: Representation, maps: Vec<FpMatrix>) -> Result<Self> {
        source.same_category(&target)?;
        let n = source.quiver.vertex_count();
        if maps.len() != n {
            return Err(Error::InvalidMorphism(format!(
                "{} vertex maps for {n} vertices",
                maps.len()
            )));
        }
        for (i, m) in maps.iter().enumerate() {
            if m.shape() != (target.dim[i], source.dim[i]) {
                return Err(Error::InvalidMorphism(format!(
                    "vertex {i} needs a {}x{} matrix, got {:?}",
                    target.dim[i],
                    source.dim[i],
                    m.shape()
                )));
            }
        }
        Ok(RepMorphism { source, target, maps })
    }

    pub fn identity(rep: &Representation) -> Self {
        let maps = rep.dim.0.iter().map(|&d| rep.field.identity(d)).collect();
        RepMorphism {
            source: rep.clone(),
            target: rep.clone(),
            maps,
        }
    }

    pub fn zero(source: &Representation, target: &Representation) -> Result<Self> {
        source.same_category(target)?;
        let maps = (0..source.dim.len())
            .map(|i| source.field.zeros(target.dim[i], source.dim[i]))
            .collect();
        Ok(RepMorphism {
            source: source.clone(),
            target: target.clone(),
            maps,
        })
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn maps(&self) -> &[FpMatrix] {
        &self.maps
    }

    pub fn at(&self, vertex: usize) -> &FpMatrix {
        &self.maps[vertex]
    }

    /// `target.edge(a) * phi_src == phi_tgt * source.edge(a)` for every arrow.
    pub fn commutes(&self) -> bool {
        let f = &self.source.field;
        self.source.quiver.arrows().iter().enumerate().all(|(a, &(s, t))| {
            f.matmul(self.target.edge(a), &self.maps[s]) == f.matmul(&self.maps[t], self.source.edge(a))
        })
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &RepMorphism) -> Result<RepMorphism> {
        if self.target != other.source {
            return Err(Error::InvalidMorphism("composition of non-matching morphisms".into()));
        }
        let f = &self.source.field;
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| f.matmul(b, a)).collect();
        Ok(RepMorphism {
            source: self.source.clone(),
            target: other.target.clone(),
            maps,
        })
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|m| rank(&self.source.field, m) == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|m| rank(&self.source.field, m) == m.rows())
    }

    pub fn is_iso(&self) -> bool {
        self.maps
            .iter()
            .all(|m| m.is_square() && rank(&self.source.field, m) == m.rows())
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(|m| self.source.field.is_zero_matrix(m))
    }

    /// `f ⊕ g : A⊕C -> B⊕D`.
    pub fn direct_sum(&self, other: &RepMorphism) -> Result<RepMorphism> {
        let source = self.source.direct_sum(&other.source)?;
        let target = self.target.direct_sum(&other.target)?;
        let f = &self.source.field;
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| f.block_diag(a, b))
            .collect();
        Ok(RepMorphism { source, target, maps })
    }
}

impl fmt::Debug for RepMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mor{}->{} {:?}", self.source.dim, self.target.dim, self.maps)
    }
}

/// Canonical injection `b -> a⊕b⊕...` of the summand starting at `offset`
/// inside `total`.
pub fn summand_injection(part: &Representation, total: &Representation, offset: &DimVector) -> Result<RepMorphism> {
    let f = part.field;
    let maps = (0..part.dim.len())
        .map(|i| {
            let mut m = f.zeros(total.dim[i], part.dim[i]);
            for k in 0..part.dim[i] {
                m.set(offset[i] + k, k, 1);
            }
            m
        })
        .collect();
    RepMorphism::new(part.clone(), total.clone(), maps)
}

/// Canonical projection `a⊕b⊕... -> b` onto the summand starting at `offset`.
pub fn summand_projection(total: &Representation, part: &Representation, offset: &DimVector) -> Result<RepMorphism> {
    let f = part.field;
    let maps = (0..part.dim.len())
        .map(|i| {
            let mut m = f.zeros(part.dim[i], total.dim[i]);
            for k in 0..part.dim[i] {
                m.set(k, offset[i] + k, 1);
            }
            m
        })
        .collect();
    RepMorphism::new(total.clone(), part.clone(), maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Matrix;

    pub(crate) fn a2(p: u64) -> (Arc<Quiver>, PrimeField) {
        (Arc::new(Quiver::linear_a(2)), PrimeField::new(p).unwrap())
    }

    #[test]
    fn shapes_are_validated() {
        let (q, f) = a2(2);
        let bad = Representation::new(q.clone(), f, DimVector(vec![1, 1]), vec![f.zeros(2, 1)]);
        assert!(bad.is_err());
        let p1 = Representation::from_entries(q, f, DimVector(vec![1, 1]), &[1]).unwrap();
        assert_eq!(p1.edge(0).entries(), &[1]);
    }

    #[test]
    fn identity_commutes_and_sum_is_strict() {
        let (q, f) = a2(3);
        let s1 = Representation::simple(q.clone(), f, 0);
        let p1 = Representation::from_entries(q.clone(), f, DimVector(vec![1, 1]), &[1]).unwrap();
        assert!(RepMorphism::identity(&p1).commutes());
        let left = s1.direct_sum(&p1).unwrap().direct_sum(&s1).unwrap();
        let right = s1.direct_sum(&p1.direct_sum(&s1).unwrap()).unwrap();
        assert_eq!(left, right);
        let z = Representation::zero(q, f);
        assert_eq!(z.direct_sum(&p1).unwrap(), p1);
        assert_eq!(p1.direct_sum(&z).unwrap(), p1);
    }

    #[test]
    fn non_commuting_square_rejected() {
        let (q, f) = a2(2);
        let s2 = Representation::simple(q.clone(), f, 1);
        let p1 = Representation::from_entries(q, f, DimVector(vec![1, 1]), &[1]).unwrap();
        // S2 embeds in P1, but P1 -> S2 that is nonzero at the sink fails the square.
        let ok = RepMorphism::new(
            s2.clone(),
            p1.clone(),
            vec![Matrix::new(1, 0, vec![]).unwrap(), Matrix::new(1, 1, vec![1]).unwrap()],
        );
        assert!(ok.is_ok());
        let bad = RepMorphism::new(
            p1,
            s2,
            vec![Matrix::new(0, 1, vec![]).unwrap(), Matrix::new(1, 1, vec![1]).unwrap()],
        );
        assert!(bad.is_err());
    }
}
