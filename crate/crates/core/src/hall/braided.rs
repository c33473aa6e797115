//! The braiding of K-graded spaces and the braided compatibility of product
//! and coproduct.

use num_bigint::BigInt;

use crate::error::Result;
use crate::exactmath::{q_power, Rational};
use crate::hall::algebra::HallAlgebra;
use crate::hall::linear::{HallTensor, HallVector};
use crate::quiver::{ClassId, DimVector};

impl HallAlgebra {
    /// `[A]⊗[D] ↦ q^{-⟨A,D⟩} [D]⊗[A]`.
    pub fn braid(&self, t: &HallTensor) -> Result<HallTensor> {
        let mut out = HallTensor::new();
        for ((a, d), c) in t.iter() {
            let f = self.braid_factor(&a.dim, &d.dim)?;
            out.add_term((d.clone(), a.clone()), c * f);
        }
        Ok(out)
    }

    /// Inverse of [`Self::braid`]: `[D]⊗[A] ↦ q^{⟨A,D⟩} [A]⊗[D]`.
    pub fn unbraid(&self, t: &HallTensor) -> Result<HallTensor> {
        let mut out = HallTensor::new();
        for ((d, a), c) in t.iter() {
            let f = q_power(self.q(), self.euler(&a.dim, &d.dim)?);
            out.add_term((a.clone(), d.clone()), c * f);
        }
        Ok(out)
    }

    /// `([B]⊗[A])·([D]⊗[C]) = q^{-⟨A,D⟩} [B]·[D] ⊗ [A]·[C]`.
    pub fn tensor_product(&self, s: &HallTensor, t: &HallTensor, bound: usize) -> Result<HallTensor> {
        let mut out = HallTensor::new();
        for ((b, a), x) in s.iter() {
            for ((d, c), y) in t.iter() {
                let f = self.braid_factor(&a.dim, &d.dim)? * x * y;
                let left = self.product(&HallVector::basis(b.clone()), &HallVector::basis(d.clone()), bound)?;
                let right = self.product(&HallVector::basis(a.clone()), &HallVector::basis(c.clone()), bound)?;
                for (l, lc) in left.iter() {
                    for (r, rc) in right.iter() {
                        out.add_term((l.clone(), r.clone()), &f * lc * rc);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Left side minus right side of Green's formula for `(M, N, X, Y)`:
    /// `Σ_E P^E_{MN} P^E_{XY} / aut E` against
    /// `Σ q^{-⟨A,D⟩} P^M_{AB} P^N_{CD} P^X_{AC} P^Y_{BD} / (aut A aut B aut C aut D)`.
    pub fn green_residual(&self, m: &ClassId, n: &ClassId, x: &ClassId, y: &ClassId) -> Result<Rational> {
        let (lhs, rhs) = self.green_sides(m, n, x, y)?;
        Ok(lhs - rhs)
    }

    pub fn green_sides(&self, m: &ClassId, n: &ClassId, x: &ClassId, y: &ClassId) -> Result<(Rational, Rational)> {
        let grade = &m.dim + &n.dim;
        let mut lhs = Rational::from_integer(0.into());
        let mut rhs = Rational::from_integer(0.into());
        if grade != &x.dim + &y.dim {
            return Ok((lhs, rhs));
        }
        for e in self.table(&grade)?.classes() {
            let fact = self.factorization(&e.id)?;
            let p = fact.get(n, m) * fact.get(y, x);
            if p != BigInt::from(0) {
                lhs += Rational::new(p, e.aut.clone());
            }
        }
        let fx = self.factorization(x)?;
        let fy = self.factorization(y)?;
        // M has sub B and quotient A; N has sub D and quotient C.
        for ((b, a), p_m) in self.factorization(m)?.counts.iter() {
            for ((d, c), p_n) in self.factorization(n)?.counts.iter() {
                let p_x = fx.get(c, a);
                if p_x == BigInt::from(0) {
                    continue;
                }
                let p_y = fy.get(d, b);
                if p_y == BigInt::from(0) {
                    continue;
                }
                let num = p_m * p_n * p_x * p_y;
                let den = self.aut(a)? * self.aut(b)? * self.aut(c)? * self.aut(d)?;
                rhs += self.braid_factor(&a.dim, &d.dim)? * Rational::new(num, den);
            }
        }
        Ok((lhs, rhs))
    }

    /// `Δ([M]·[N]) − Δ([M])·Δ([N])` with the braided product on `H⊗H`.
    pub fn bialgebra_residual(&self, m: &ClassId, n: &ClassId, bound: usize) -> Result<HallTensor> {
        let x = HallVector::basis(m.clone());
        let y = HallVector::basis(n.clone());
        let left = self.coproduct(&self.product(&x, &y, bound)?, bound)?;
        let right = self.tensor_product(&self.coproduct(&x, bound)?, &self.coproduct(&y, bound)?, bound)?;
        Ok(left.minus(&right))
    }

    /// Hexagon for homogeneous grades: braiding `u` past `v⊗w` in one step
    /// against two steps, as the pair of coefficients.
    pub fn hexagon_coefficients(&self, u: &DimVector, v: &DimVector, w: &DimVector) -> Result<(Rational, Rational)> {
        let one_step = self.braid_factor(u, &(v + w))?;
        let two_steps = self.braid_factor(u, v)? * self.braid_factor(u, w)?;
        Ok((one_step, two_steps))
    }

    /// The mirrored hexagon: `u⊗v` past `w`.
    pub fn hexagon_coefficients_mirror(
        &self,
        u: &DimVector,
        v: &DimVector,
        w: &DimVector,
    ) -> Result<(Rational, Rational)> {
        let one_step = self.braid_factor(&(u + v), w)?;
        let two_steps = self.braid_factor(u, w)? * self.braid_factor(v, w)?;
        Ok((one_step, two_steps))
    }
}
