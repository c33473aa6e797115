//! The multiplication, comultiplication and braiding spans over `A₀`,
//! degroupoidified to exact matrices.
//!
//! The multiplication span has apex the exact pairs, right leg
//! `(f, g) ↦ (M, N)` and left leg `(f, g) ↦ E`. An iso class of pairs has
//! its stabilizer in `Aut N × Aut E × Aut M` as automorphisms, so the entry
//! `Σ aut E / |Stab|` over the classes equals `|pairs_E| / (aut N aut M)`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::cathall::base::AutGroup;
use crate::cathall::checks::{instance_id, CARDINALITY_SCOPE};
use crate::cathall::ses::{build_ext, exact_pairs_direct, pair_orbits, ClassOrbit, ExtGroupoid};
use crate::error::Result;
use crate::exactmath::{Matrix, Rational};
use crate::hall::HallAlgebra;
use crate::quiver::{ClassId, ShortExact};
use crate::report::{CheckReport, Failure};

/// A degroupoidified span with labelled rows and columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanMatrix<R, C> {
    pub rows: Vec<R>,
    pub cols: Vec<C>,
    pub entries: Matrix<Rational>,
}

impl<R: PartialEq, C: PartialEq> SpanMatrix<R, C> {
    pub fn entry(&self, row: &R, col: &C) -> Rational {
        match (
            self.rows.iter().position(|r| r == row),
            self.cols.iter().position(|c| c == col),
        ) {
            (Some(i), Some(j)) => self.entries.get(i, j).clone(),
            _ => Rational::zero(),
        }
    }
}

fn pairs_within(h: &HallAlgebra, bound: usize) -> Result<Vec<(ClassId, ClassId)>> {
    let classes = h.classes_up_to(bound)?;
    let mut out = Vec::new();
    for m in &classes {
        for n in &classes {
            if m.dim.total() + n.dim.total() <= bound {
                out.push((m.clone(), n.clone()));
            }
        }
    }
    Ok(out)
}

fn ratio(num: usize, den: BigInt) -> Rational {
    Rational::new(BigInt::from(num), den)
}

/// Rows `E`, columns `(M, N)`: `|pairs_E| / (aut N aut M)`.
pub fn mult_span_matrix(h: &HallAlgebra, bound: usize) -> Result<SpanMatrix<ClassId, (ClassId, ClassId)>> {
    let rows = h.classes_up_to(bound)?;
    let cols = pairs_within(h, bound)?;
    let mut entries = Matrix::filled(rows.len(), cols.len(), Rational::zero());
    for (j, (m, n)) in cols.iter().enumerate() {
        let ext = build_ext(h, m, n)?;
        for (i, e) in rows.iter().enumerate() {
            entries.set(i, j, ratio(ext.object_count(e), &ext.aut_n * &ext.aut_m));
        }
    }
    Ok(SpanMatrix { rows, cols, entries })
}

/// The adjoint span: rows `(N, M)`, columns `E`, entry `|pairs_E| / aut E`.
pub fn comult_span_matrix(h: &HallAlgebra, bound: usize) -> Result<SpanMatrix<(ClassId, ClassId), ClassId>> {
    let cols = h.classes_up_to(bound)?;
    let pairs = pairs_within(h, bound)?;
    let rows: Vec<(ClassId, ClassId)> = pairs.iter().map(|(m, n)| (n.clone(), m.clone())).collect();
    let mut entries = Matrix::filled(rows.len(), cols.len(), Rational::zero());
    for (i, (m, n)) in pairs.iter().enumerate() {
        let ext = build_ext(h, m, n)?;
        for (j, e) in cols.iter().enumerate() {
            entries.set(i, j, ratio(ext.object_count(e), h.aut(e)?));
        }
    }
    Ok(SpanMatrix { rows, cols, entries })
}

/// `Σ aut E / |Stab|` over the classes of exact pairs, one entry per middle term.
pub fn mult_entries_by_orbits(h: &HallAlgebra, ext: &ExtGroupoid) -> Result<Vec<(ClassId, Rational)>> {
    let budget = h.budget();
    let (hm, hn) = (
        AutGroup::of(&h.rep(&ext.m)?, budget)?,
        AutGroup::of(&h.rep(&ext.n)?, budget)?,
    );
    let mut out = Vec::new();
    for piece in &ext.pieces {
        let he = AutGroup::of(&h.rep(&piece.middle)?, budget)?;
        let entry = pair_orbits(&piece.objects, &hn, &he, &hm)?
            .iter()
            .fold(Rational::zero(), |acc, o| {
                acc + Rational::new(piece.aut_middle.clone(), BigInt::from(o.stabilizer))
            });
        out.push((piece.middle.clone(), entry));
    }
    Ok(out)
}

/// Both span matrices against the algebraic product and coproduct, and the
/// orbit form of each multiplication entry up to `orbit_bound`.
pub fn span_matrix_suite(h: &HallAlgebra, bound: usize, orbit_bound: usize, only: Option<&str>) -> Result<CheckReport> {
    let mut report = CheckReport::new("span-matrices", CARDINALITY_SCOPE);
    let mult = mult_span_matrix(h, bound)?;
    let comult = comult_span_matrix(h, bound)?;
    for (m, n) in &mult.cols {
        let id = format!("mult:{}", instance_id(&[m, n]));
        if only.is_some_and(|o| o != id) {
            continue;
        }
        let product = h.product_basis(m, n)?;
        let mut fail = None;
        for e in &mult.rows {
            let (lhs, rhs) = (mult.entry(e, &(m.clone(), n.clone())), product.coeff(e));
            if lhs != rhs && fail.is_none() {
                fail = Some(Failure::unequal(&id, &lhs, &rhs, format!("coefficient of {e}")));
            }
        }
        if fail.is_none() && m.dim.total() + n.dim.total() <= orbit_bound {
            for (e, entry) in mult_entries_by_orbits(h, &build_ext(h, m, n)?)? {
                let direct = mult.entry(&e, &(m.clone(), n.clone()));
                if entry != direct {
                    fail = Some(Failure::unequal(&id, &entry, &direct, format!("orbit sum at {e}")));
                    break;
                }
            }
        }
        report.record(fail);
    }
    for e in &comult.cols {
        let id = format!("comult:{e}");
        if only.is_some_and(|o| o != id) {
            continue;
        }
        let coproduct = h.coproduct_basis(e)?;
        let mut fail = None;
        for slot in &comult.rows {
            let (lhs, rhs) = (comult.entry(slot, e), coproduct.coeff(slot));
            if lhs != rhs {
                fail = Some(Failure::unequal(
                    &id,
                    &lhs,
                    &rhs,
                    format!("coefficient of {}⊗{}", slot.0, slot.1),
                ));
                break;
            }
        }
        report.record(fail);
    }
    Ok(report)
}

/// The part of `B_{X,Y}` over one pair `(x, y)`: exact pairs
/// `0 → ȳ → E → x̄ → 0` for every middle witness, with their orbits.
#[derive(Clone, Debug)]
pub struct BraidingPiece {
    pub x: ClassId,
    pub y: ClassId,
    pub by_middle: Vec<(ClassId, Vec<ShortExact>, Vec<ClassOrbit>)>,
}

impl BraidingPiece {
    /// `Σ 1/|Stab|`, stabilizers in `Aut x × Aut E × Aut y`.
    pub fn cardinality(&self) -> Rational {
        self.by_middle
            .iter()
            .flat_map(|(_, _, orbits)| orbits)
            .fold(Rational::zero(), |acc, o| {
                acc + Rational::new(BigInt::from(1), BigInt::from(o.stabilizer))
            })
    }

    fn stabilizers(&self) -> Vec<(ClassId, usize, Vec<usize>)> {
        self.by_middle
            .iter()
            .map(|(e, objects, orbits)| {
                let mut s: Vec<usize> = orbits.iter().map(|o| o.stabilizer).collect();
                s.sort_unstable();
                (e.clone(), objects.len(), s)
            })
            .collect()
    }
}

/// `B_{X,Y}` for `X`, `Y` given by lists of `A₀` classes. The right leg sends
/// a piece to `(x, y)` in `X × Y`, the left leg to `(y, x)` in `Y × X`.
#[derive(Clone, Debug)]
pub struct BraidingSpan {
    pub pieces: Vec<BraidingPiece>,
}

pub fn braiding_piece(h: &HallAlgebra, x: &ClassId, y: &ClassId) -> Result<BraidingPiece> {
    let budget = h.budget();
    let (xr, yr) = (h.rep(x)?, h.rep(y)?);
    let (hx, hy) = (AutGroup::of(&xr, budget)?, AutGroup::of(&yr, budget)?);
    let mut by_middle = Vec::new();
    for e in h.table(&(&x.dim + &y.dim))?.classes() {
        let objects = exact_pairs_direct(&xr, &yr, &e.rep, budget)?;
        let orbits = pair_orbits(&objects, &hy, &AutGroup::of(&e.rep, budget)?, &hx)?;
        by_middle.push((e.id.clone(), objects, orbits));
    }
    Ok(BraidingPiece {
        x: x.clone(),
        y: y.clone(),
        by_middle,
    })
}

pub fn braiding_span(h: &HallAlgebra, xs: &[ClassId], ys: &[ClassId]) -> Result<BraidingSpan> {
    let mut pieces = Vec::new();
    for x in xs {
        for y in ys {
            pieces.push(braiding_piece(h, x, y)?);
        }
    }
    Ok(BraidingSpan { pieces })
}

impl BraidingSpan {
    pub fn cardinality(&self) -> Rational {
        self.pieces
            .iter()
            .fold(Rational::zero(), |acc, p| acc + p.cardinality())
    }

    /// Rows `(y, x)`, columns `(x, y)`; the only nonzero entries swap the
    /// pair, with value `aut x · aut y · |piece|`.
    pub fn matrix(&self, h: &HallAlgebra) -> Result<SpanMatrix<(ClassId, ClassId), (ClassId, ClassId)>> {
        let cols: Vec<(ClassId, ClassId)> = self.pieces.iter().map(|p| (p.x.clone(), p.y.clone())).collect();
        let rows: Vec<(ClassId, ClassId)> = cols.iter().map(|(x, y)| (y.clone(), x.clone())).collect();
        let mut entries = Matrix::filled(rows.len(), cols.len(), Rational::zero());
        for (j, p) in self.pieces.iter().enumerate() {
            let scale = Rational::from_integer(h.aut(&p.x)? * h.aut(&p.y)?);
            entries.set(j, j, scale * p.cardinality());
        }
        Ok(SpanMatrix { rows, cols, entries })
    }
}

/// The piece of `B` over `(x, y)` against `EXT(x̄, ȳ)` as built from
/// injections: object counts per middle term, sorted stabilizer orders and
/// cardinality. `None` when they agree.
pub fn bsim_ext_check(h: &HallAlgebra, x: &ClassId, y: &ClassId) -> Result<Option<String>> {
    let piece = braiding_piece(h, x, y)?;
    let ext = build_ext(h, x, y)?;
    let budget = h.budget();
    let (hx, hy) = (AutGroup::of(&h.rep(x)?, budget)?, AutGroup::of(&h.rep(y)?, budget)?);
    for ((e, count, stabs), ext_piece) in piece.stabilizers().into_iter().zip(&ext.pieces) {
        if count != ext_piece.objects.len() {
            return Ok(Some(format!(
                "{e}: {count} pairs against {} in EXT",
                ext_piece.objects.len()
            )));
        }
        let he = AutGroup::of(&h.rep(&e)?, budget)?;
        let mut ext_stabs: Vec<usize> = pair_orbits(&ext_piece.objects, &hy, &he, &hx)?
            .iter()
            .map(|o| o.stabilizer)
            .collect();
        ext_stabs.sort_unstable();
        if stabs != ext_stabs {
            return Ok(Some(format!("{e}: stabilizers {stabs:?} against {ext_stabs:?}")));
        }
    }
    let expected = ext.cardinality();
    if piece.cardinality() != expected {
        return Ok(Some(format!(
            "cardinality {} against {}",
            piece.cardinality(),
            expected
        )));
    }
    Ok(None)
}

pub fn braiding_suite(h: &HallAlgebra, bound: usize, only: Option<&str>) -> Result<CheckReport> {
    let mut report = CheckReport::new(
        "braiding",
        "object/cardinality level; automorphism groups compared by order only",
    );
    let classes = h.classes_up_to(bound)?;
    for x in &classes {
        for y in &classes {
            let id = instance_id(&[x, y]);
            if only.is_some_and(|o| o != id) {
                continue;
            }
            if let Some(detail) = bsim_ext_check(h, x, y)? {
                report.record(Some(Failure::new(&id, detail)));
                continue;
            }
            let span = braiding_span(h, std::slice::from_ref(x), std::slice::from_ref(y))?;
            let entry = span.matrix(h)?.entry(&(y.clone(), x.clone()), &(x.clone(), y.clone()));
            let expected = h.braid_factor(&x.dim, &y.dim)?;
            report.compare(&id, &entry, &expected, "braiding matrix entry against q^{-<x,y>}");
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::hall::algebra::tests::{a2, named};

    #[test]
    fn span_matrix_examples() {
        let h = a2(2);
        let (s1, s2, split, p1) = named(&h);
        let mult = mult_span_matrix(&h, 2).unwrap();
        assert_eq!(mult.entry(&p1, &(s1.clone(), s2.clone())), rat(1, 1));
        assert_eq!(mult.entry(&split, &(s2.clone(), s1.clone())), rat(1, 1));
        assert_eq!(mult.entry(&p1, &(s1.clone(), s1.clone())), rat(0, 1));
        let comult = comult_span_matrix(&h, 2).unwrap();
        assert_eq!(comult.entry(&(s2.clone(), s1.clone()), &p1), rat(1, 1));
        let h3 = a2(3);
        let comult = comult_span_matrix(&h3, 2).unwrap();
        assert_eq!(comult.entry(&(s2, s1), &p1), rat(2, 1));
    }

    #[test]
    fn orbit_sums_agree_with_substitution() {
        let h = a2(2);
        let report = span_matrix_suite(&h, 2, 2, None).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        assert_eq!(report.instances, 17 + 7);
    }

    #[test]
    fn braiding_examples() {
        let h = a2(2);
        let (s1, s2, _, _) = named(&h);
        let z = h.zero_class();
        let trivial = braiding_span(&h, std::slice::from_ref(&z), std::slice::from_ref(&z)).unwrap();
        assert_eq!(trivial.cardinality(), rat(1, 1));
        let b = braiding_span(&h, std::slice::from_ref(&s1), std::slice::from_ref(&s2)).unwrap();
        assert_eq!(b.cardinality(), rat(2, 1));
        let m = b.matrix(&h).unwrap();
        assert_eq!(m.entry(&(s2.clone(), s1.clone()), &(s1.clone(), s2.clone())), rat(2, 1));
        assert_eq!(m.entry(&(s1.clone(), s2.clone()), &(s1.clone(), s2.clone())), rat(0, 1));
        assert_eq!(bsim_ext_check(&h, &s1, &s2).unwrap(), None);
    }

    #[test]
    fn braiding_suite_at_bound_one() {
        for p in [2, 3] {
            let h = a2(p);
            let r = braiding_suite(&h, 1, None).unwrap();
            assert!(r.passed(), "{:?}", r.failures);
            assert_eq!(r.instances, 9);
        }
    }
}
