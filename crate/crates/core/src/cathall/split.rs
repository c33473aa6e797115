//! Splitting and gluing sequences along chosen direct sums.
//!
//! For `0 → N₁⊕N₂ → E → M → 0`, quotienting `E` by the image of one summand
//! leaves an extension of `M` by the other. For `0 → N → E → M₁⊕M₂ → 0`,
//! the preimage `g⁻¹(M_i)` is an extension of `M_i` by `N`. The gluing maps
//! invert these: a fibered product over the diagonal of `M⊕M`, and the
//! quotient of `E₁⊕E₂` by the antidiagonal copy of `N`.

use crate::error::{Error, Result};
use crate::exactmath::linalg::solve_matrix;
use crate::exactmath::{FpMatrix, MatrixOps};
use crate::quiver::{
    preimage, quotient_by_spans, summand_injection, summand_projection, DimVector, RepMorphism, Representation,
    ShortExact,
};

fn solve_each(a: &RepMorphism, b: &[FpMatrix]) -> Result<Vec<FpMatrix>> {
    let field = *a.source().field();
    a.maps()
        .iter()
        .zip(b)
        .map(|(ai, bi)| {
            solve_matrix(&field, ai, bi).ok_or_else(|| Error::InvalidMorphism("map does not factor".into()))
        })
        .collect()
}

/// `0 → N → g⁻¹(im j) → M' → 0` for an injective `j: M' → M`.
pub fn pullback_along(s: &ShortExact, j: &RepMorphism) -> Result<ShortExact> {
    let (p, incl) = preimage(s.projection(), j)?;
    let f = RepMorphism::new(s.sub().clone(), p.clone(), solve_each(&incl, s.inclusion().maps())?)?;
    let down = incl.then(s.projection())?;
    let g = RepMorphism::new(p, j.source().clone(), solve_each(j, down.maps())?)?;
    ShortExact::new(f, g)
}

/// `0 → N'' → E/f(k(K)) → M → 0` for `k: K → N` injective and `p: N → N''`
/// surjective with kernel `im k`.
pub fn pushout_quotient(s: &ShortExact, k: &RepMorphism, p: &RepMorphism) -> Result<ShortExact> {
    let field = *s.middle().field();
    let killed = k.then(s.inclusion())?;
    let q = quotient_by_spans(s.middle(), killed.maps())?;
    let f = (0..p.maps().len())
        .map(|i| {
            let section = solve_matrix(&field, p.at(i), &field.identity(p.at(i).rows()))
                .ok_or_else(|| Error::InvalidMorphism("projection is not surjective".into()))?;
            Ok(field.matmul(q.projection.at(i), &field.matmul(s.inclusion().at(i), &section)))
        })
        .collect::<Result<Vec<_>>>()?;
    let f = RepMorphism::new(p.target().clone(), q.rep.clone(), f)?;
    let g = (0..q.section.len())
        .map(|i| field.matmul(s.projection().at(i), &q.section[i]))
        .collect();
    let g = RepMorphism::new(q.rep, s.quotient().clone(), g)?;
    ShortExact::new(f, g)
}

fn offset_of(r: &Representation) -> DimVector {
    r.dim().clone()
}

fn zero_offset(r: &Representation) -> DimVector {
    DimVector(vec![0; r.dim().len()])
}

/// `(E/second, E/first)` for `s.sub() = first ⊕ second`.
pub fn split_sub(s: &ShortExact, first: &Representation, second: &Representation) -> Result<(ShortExact, ShortExact)> {
    let total = first.direct_sum(second)?;
    if &total != s.sub() {
        return Err(Error::InvalidSequence("sub is not the chosen direct sum".into()));
    }
    let i1 = summand_injection(first, &total, &zero_offset(first))?;
    let i2 = summand_injection(second, &total, &offset_of(first))?;
    let p1 = summand_projection(&total, first, &zero_offset(first))?;
    let p2 = summand_projection(&total, second, &offset_of(first))?;
    Ok((pushout_quotient(s, &i2, &p1)?, pushout_quotient(s, &i1, &p2)?))
}

/// `(g⁻¹(first), g⁻¹(second))` for `s.quotient() = first ⊕ second`.
pub fn split_quot(s: &ShortExact, first: &Representation, second: &Representation) -> Result<(ShortExact, ShortExact)> {
    let total = first.direct_sum(second)?;
    if &total != s.quotient() {
        return Err(Error::InvalidSequence("quotient is not the chosen direct sum".into()));
    }
    let i1 = summand_injection(first, &total, &zero_offset(first))?;
    let i2 = summand_injection(second, &total, &offset_of(first))?;
    Ok((pullback_along(s, &i1)?, pullback_along(s, &i2)?))
}

/// Inverse of [`split_sub`]: the fibered product `E₁ ×_M E₂` over the diagonal.
pub fn glue_sub(s1: &ShortExact, s2: &ShortExact) -> Result<ShortExact> {
    if s1.quotient() != s2.quotient() {
        return Err(Error::InvalidSequence("gluing needs a common quotient".into()));
    }
    let field = *s1.middle().field();
    let m = s1.quotient();
    let f = s1.inclusion().direct_sum(s2.inclusion())?;
    let g = s1.projection().direct_sum(s2.projection())?;
    let diag = (0..m.dim().len())
        .map(|i| field.vstack(&field.identity(m.dim()[i]), &field.identity(m.dim()[i])))
        .collect();
    let diag = RepMorphism::new(m.clone(), m.direct_sum(m)?, diag)?;
    let (p, incl) = preimage(&g, &diag)?;
    let f2 = RepMorphism::new(f.source().clone(), p.clone(), solve_each(&incl, f.maps())?)?;
    let down = incl.then(&g)?;
    let g2 = RepMorphism::new(p, m.clone(), solve_each(&diag, down.maps())?)?;
    ShortExact::new(f2, g2)
}

/// Inverse of [`split_quot`]: `(E₁ ⊕ E₂) / {(f₁n, −f₂n)}`.
pub fn glue_quot(s1: &ShortExact, s2: &ShortExact) -> Result<ShortExact> {
    if s1.sub() != s2.sub() {
        return Err(Error::InvalidSequence("gluing needs a common sub".into()));
    }
    let field = *s1.middle().field();
    let minus_one = field.p() - 1;
    let n = s1.sub();
    let middle = s1.middle().direct_sum(s2.middle())?;
    let anti: Vec<FpMatrix> = (0..n.dim().len())
        .map(|i| field.vstack(s1.inclusion().at(i), &field.mat_scale(&minus_one, s2.inclusion().at(i))))
        .collect();
    let q = quotient_by_spans(&middle, &anti)?;
    let f = (0..n.dim().len())
        .map(|i| {
            let upper = field.vstack(s1.inclusion().at(i), &field.zeros(s2.middle().dim()[i], n.dim()[i]));
            field.matmul(q.projection.at(i), &upper)
        })
        .collect();
    let f = RepMorphism::new(n.clone(), q.rep.clone(), f)?;
    let g_sum = s1.projection().direct_sum(s2.projection())?;
    let g = (0..q.section.len())
        .map(|i| field.matmul(g_sum.at(i), &q.section[i]))
        .collect();
    let g = RepMorphism::new(q.rep, g_sum.target().clone(), g)?;
    ShortExact::new(f, g)
}
