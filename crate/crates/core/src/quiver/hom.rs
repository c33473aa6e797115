//! Hom and Ext¹ between representations, both read off the linear map
//! `⊕_i Hom(M_i, N_i) -> ⊕_{a: i->j} Hom(M_i, N_j)`, `φ ↦ φ_j M_a − N_a φ_i`.
//! Its kernel is `Hom(M, N)` and its cokernel is `Ext¹(M, N)`.

use num_bigint::BigInt;

use crate::error::Result;
use crate::exactmath::linalg::{adapted_basis, rank_kernel, AdaptedBasis};
use crate::exactmath::{Budget, Field, FpMatrix, MatrixOps, VectorOdometer};
use crate::quiver::rep::{RepMorphism, Representation};

/// Coordinates for `⊕_i Hom(M_i, N_i)` (vertex blocks) and
/// `⊕_a Hom(M_src, N_tgt)` (arrow blocks), each block row-major.
#[derive(Clone, Debug)]
pub(crate) struct Layout {
    vertex_offsets: Vec<usize>,
    arrow_offsets: Vec<usize>,
    vertex_len: usize,
    arrow_len: usize,
}

impl Layout {
    pub(crate) fn new(m: &Representation, n: &Representation) -> Self {
        let q = m.quiver();
        let mut vertex_offsets = Vec::with_capacity(q.vertex_count());
        let mut acc = 0;
        for i in 0..q.vertex_count() {
            vertex_offsets.push(acc);
            acc += n.dim()[i] * m.dim()[i];
        }
        let vertex_len = acc;
        let mut arrow_offsets = Vec::with_capacity(q.arrows().len());
        acc = 0;
        for &(s, t) in q.arrows() {
            arrow_offsets.push(acc);
            acc += n.dim()[t] * m.dim()[s];
        }
        Layout {
            vertex_offsets,
            arrow_offsets,
            vertex_len,
            arrow_len: acc,
        }
    }
}

/// The coboundary map from vertex blocks to arrow blocks.
pub(crate) fn presentation(m: &Representation, n: &Representation, layout: &Layout) -> FpMatrix {
    let f = m.field();
    let mut p = f.zeros(layout.arrow_len, layout.vertex_len);
    for (a, &(s, t)) in m.quiver().arrows().iter().enumerate() {
        let (ms, mt, ns) = (m.dim()[s], m.dim()[t], n.dim()[s]);
        let nt = n.dim()[t];
        let (ma, na) = (m.edge(a), n.edge(a));
        for r in 0..nt {
            for c in 0..ms {
                let row = layout.arrow_offsets[a] + r * ms + c;
                for k in 0..mt {
                    let col = layout.vertex_offsets[t] + r * mt + k;
                    let v = f.add(p.get(row, col), ma.get(k, c));
                    p.set(row, col, v);
                }
                for k in 0..ns {
                    let col = layout.vertex_offsets[s] + k * ms + c;
                    let v = f.sub(p.get(row, col), na.get(r, k));
                    p.set(row, col, v);
                }
            }
        }
    }
    p
}

fn vertex_maps_from_flat(m: &Representation, n: &Representation, layout: &Layout, flat: &[u32]) -> Vec<FpMatrix> {
    (0..m.quiver().vertex_count())
        .map(|i| {
            let (rows, cols) = (n.dim()[i], m.dim()[i]);
            let at = layout.vertex_offsets[i];
            FpMatrix::new(rows, cols, flat[at..at + rows * cols].to_vec()).expect("block length")
        })
        .collect()
}

/// `Hom(M, N)` with a fixed basis.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source: Representation,
    target: Representation,
    layout: Layout,
    basis: Vec<Vec<u32>>,
}

impl HomSpace {
    pub fn new(m: &Representation, n: &Representation) -> Result<Self> {
        m.same_category(n)?;
        let layout = Layout::new(m, n);
        let p = presentation(m, n, &layout);
        let (_, basis) = rank_kernel(m.field(), &p);
        Ok(HomSpace {
            source: m.clone(),
            target: n.clone(),
            layout,
            basis,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> Vec<RepMorphism> {
        self.basis.iter().map(|v| self.morphism(v)).collect()
    }

    fn morphism(&self, flat: &[u32]) -> RepMorphism {
        let maps = vertex_maps_from_flat(&self.source, &self.target, &self.layout, flat);
        RepMorphism::new_unchecked(self.source.clone(), self.target.clone(), maps).expect("layout shapes")
    }

    /// The morphism `Σ c_k b_k`.
    pub fn combination(&self, coeffs: &[u32]) -> RepMorphism {
        let f = self.source.field();
        let mut flat = vec![0u32; self.layout.vertex_len];
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if *c == 0 {
                continue;
            }
            for (x, y) in flat.iter_mut().zip(b) {
                *x = f.add(x, &f.mul(c, y));
            }
        }
        self.morphism(&flat)
    }

    /// Every element, in lexicographic order of basis coordinates.
    pub fn elements(&self, budget: Budget) -> Result<impl Iterator<Item = RepMorphism> + '_> {
        let p = self.source.field().p();
        budget.check_power(
            format!("Hom space of dimension {} over F_{p}", self.dim()),
            p,
            self.dim(),
        )?;
        Ok(VectorOdometer::new(p, self.dim()).map(move |c| self.combination(&c)))
    }
}

pub fn hom_basis(m: &Representation, n: &Representation) -> Result<Vec<RepMorphism>> {
    Ok(HomSpace::new(m, n)?.basis())
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    Ok(HomSpace::new(m, n)?.dim())
}

/// `Ext¹(M, N)` as cocycles modulo coboundaries, with chosen class coordinates.
#[derive(Clone, Debug)]
pub struct ExtSpace {
    source: Representation,
    target: Representation,
    layout: Layout,
    split: AdaptedBasis<u32>,
}

impl ExtSpace {
    /// Extensions `0 -> N -> E -> M -> 0`; `m` is the quotient, `n` the sub.
    pub fn new(m: &Representation, n: &Representation) -> Result<Self> {
        m.same_category(n)?;
        let layout = Layout::new(m, n);
        let p = presentation(m, n, &layout);
        let split = adapted_basis(m.field(), &p);
        Ok(ExtSpace {
            source: m.clone(),
            target: n.clone(),
            layout,
            split,
        })
    }

    pub fn dim(&self) -> usize {
        self.layout.arrow_len - self.split.rank
    }

    pub fn cocycle_dim(&self) -> usize {
        self.layout.arrow_len
    }

    pub fn quotient_rep(&self) -> &Representation {
        &self.source
    }

    pub fn sub_rep(&self) -> &Representation {
        &self.target
    }

    /// Cocycle `c_a : M_src -> N_tgt` per arrow, from flat coordinates.
    pub fn cocycle(&self, flat: &[u32]) -> Vec<FpMatrix> {
        let q = self.source.quiver();
        q.arrows()
            .iter()
            .enumerate()
            .map(|(a, &(s, t))| {
                let (rows, cols) = (self.target.dim()[t], self.source.dim()[s]);
                let at = self.layout.arrow_offsets[a];
                FpMatrix::new(rows, cols, flat[at..at + rows * cols].to_vec()).expect("block length")
            })
            .collect()
    }

    pub fn flatten(&self, cocycle: &[FpMatrix]) -> Vec<u32> {
        cocycle.iter().flat_map(|m| m.entries().iter().copied()).collect()
    }

    /// Class coordinates of a cocycle; cohomologous cocycles agree.
    pub fn class_of(&self, cocycle: &[FpMatrix]) -> Vec<u32> {
        let flat = self.flatten(cocycle);
        self.source.field().mat_vec(&self.split.quotient_map(), &flat)
    }

    /// A cocycle representing the given class coordinates.
    pub fn representative(&self, class: &[u32]) -> Vec<FpMatrix> {
        let flat = self.source.field().mat_vec(&self.split.section(), class);
        self.cocycle(&flat)
    }

    /// Every class coordinate vector, lexicographic.
    pub fn classes(&self, budget: Budget) -> Result<VectorOdometer> {
        let p = self.source.field().p();
        budget.check_power(format!("Ext¹ of dimension {} over F_{p}", self.dim()), p, self.dim())?;
        Ok(VectorOdometer::new(p, self.dim()))
    }
}

pub fn ext1_dim(m: &Representation, n: &Representation) -> Result<usize> {
    Ok(ExtSpace::new(m, n)?.dim())
}

/// `dim Hom(M,N) - dim Ext¹(M,N)` computed from the representations.
pub fn euler_form_of(m: &Representation, n: &Representation) -> Result<i64> {
    Ok(hom_dim(m, n)? as i64 - ext1_dim(m, n)? as i64)
}

/// `|Aut(M)|` by enumerating `End(M)` and keeping the vertexwise invertible maps.
pub fn aut_order(m: &Representation, budget: Budget) -> Result<BigInt> {
    let end = HomSpace::new(m, m)?;
    let mut count: u64 = 0;
    for phi in end.elements(budget)? {
        if phi.is_iso() {
            count += 1;
        }
    }
    Ok(BigInt::from(count))
}

/// True iff some element of `Hom(M, N)` is invertible at every vertex.
pub fn is_isomorphic(m: &Representation, n: &Representation, budget: Budget) -> Result<bool> {
    m.same_category(n)?;
    if m.dim() != n.dim() {
        return Ok(false);
    }
    if invariants(m)? != invariants(n)? {
        return Ok(false);
    }
    let hom = HomSpace::new(m, n)?;
    for phi in hom.elements(budget)? {
        if phi.is_iso() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Isomorphism invariants: ranks along every path and `dim End`.
pub(crate) fn invariants(m: &Representation) -> Result<(Vec<usize>, usize)> {
    let ranks = m.quiver().paths().iter().map(|p| m.path_rank(p)).collect();
    Ok((ranks, hom_dim(m, m)?))
}
