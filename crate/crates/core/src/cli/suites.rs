//! Verification suites: each runs one family of checks over every instance
//! within its bound and returns a [`CheckReport`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::json;

use crate::cathall::checks::{ext_bilinearity_suite, ext_cardinality_suite, instance_id, riedtmann_suite};
use crate::cathall::hexagon::{coherence_check, hexagonator_suite, Polytope};
use crate::cathall::spans::{braiding_suite, span_matrix_suite};
use crate::error::{Error, Result};
use crate::exactmath::{format_rational, Rational};
use crate::groupoid::random::{equivalence_instances, functoriality_instances};
use crate::groupoid::Groupoid;
use crate::hall::{CanonicalAntipode, HallAlgebra, HallVector};
use crate::quiver::{indecomposable_counts, positive_roots};
use crate::report::{CheckReport, Failure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Suite {
    Assoc,
    Green,
    Bialgebra,
    Antipode,
    Hexagon,
    Gabriel,
    ExtCardinality,
    Riedtmann,
    ExtBilinearity,
    Spans,
    Braiding,
    Hexagonators,
    Coherence,
    Engine,
    FiniteSets,
    All,
}

impl Suite {
    pub const EACH: [Suite; 15] = [
        Suite::Assoc,
        Suite::Green,
        Suite::Bialgebra,
        Suite::Antipode,
        Suite::Hexagon,
        Suite::Gabriel,
        Suite::ExtCardinality,
        Suite::Riedtmann,
        Suite::ExtBilinearity,
        Suite::Spans,
        Suite::Braiding,
        Suite::Hexagonators,
        Suite::Coherence,
        Suite::Engine,
        Suite::FiniteSets,
    ];

    pub fn expand(self) -> Vec<Suite> {
        if self == Suite::All {
            Suite::EACH.to_vec()
        } else {
            vec![self]
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(name: &str) -> Result<Self> {
        <Suite as clap::ValueEnum>::from_str(name, false).map_err(|_| Error::Input(format!("unknown suite {name}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use clap::ValueEnum;
        let v = self.to_possible_value().expect("every suite has a name");
        f.write_str(v.get_name())
    }
}

/// Bounds and seeds shared by every suite.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub max_dim: usize,
    /// Bound for the groupoid-level suites that enumerate tuples of objects.
    pub object_dim: usize,
    pub seed: u64,
    pub engine_instances: usize,
    pub equivalence_instances: usize,
    pub finite_sets_max: usize,
}

impl SuiteConfig {
    fn object_bound(&self) -> usize {
        self.max_dim.min(self.object_dim)
    }
}

/// One or more reports per suite.
pub fn run_suite(h: &HallAlgebra, suite: Suite, cfg: &SuiteConfig, only: Option<&str>) -> Result<Vec<CheckReport>> {
    let d = cfg.max_dim;
    Ok(match suite {
        Suite::Assoc => vec![associativity(h, d, only)?, coassociativity(h, d, only)?],
        Suite::Green => vec![green(h, d, only)?],
        Suite::Bialgebra => vec![bialgebra(h, d, only)?],
        Suite::Antipode => vec![antipode(h, d, only)?],
        Suite::Hexagon => vec![hexagon(h, d, only)?],
        Suite::Gabriel => vec![gabriel(h)?],
        Suite::ExtCardinality => vec![ext_cardinality_suite(h, d, only)?],
        Suite::Riedtmann => vec![riedtmann_suite(h, d, only)?],
        Suite::ExtBilinearity => vec![ext_bilinearity_suite(h, d, only)?],
        Suite::Spans => vec![span_matrix_suite(h, d, cfg.object_bound(), only)?],
        Suite::Braiding => vec![braiding_suite(h, cfg.object_bound(), only)?],
        Suite::Hexagonators => vec![hexagonator_suite(h, cfg.object_bound(), only)?],
        Suite::Coherence => Polytope::ALL
            .iter()
            .map(|&p| coherence_check(h, p, cfg.object_bound(), only))
            .collect::<Result<_>>()?,
        Suite::Engine => vec![engine(cfg, only)?],
        Suite::FiniteSets => vec![finite_sets(cfg.finite_sets_max)],
        Suite::All => {
            let mut out = Vec::new();
            for s in Suite::EACH {
                out.extend(run_suite(h, s, cfg, only)?);
            }
            out
        }
    })
}

fn skip(only: Option<&str>, id: &str) -> bool {
    only.is_some_and(|o| o != id)
}

fn associativity(h: &HallAlgebra, bound: usize, only: Option<&str>) -> Result<CheckReport> {
    let mut r = CheckReport::new("associativity", "basis triples, exact coefficients");
    let classes = h.classes_up_to(bound)?;
    for x in &classes {
        for y in &classes {
            for z in &classes {
                let id = instance_id(&[x, y, z]);
                if x.dim.total() + y.dim.total() + z.dim.total() > bound || skip(only, &id) {
                    continue;
                }
                let (bx, by, bz) = (
                    HallVector::basis(x.clone()),
                    HallVector::basis(y.clone()),
                    HallVector::basis(z.clone()),
                );
                let a = h.associator(&bx, &by, &bz, bound)?;
                r.require(&id, a.is_zero(), || {
                    format!("(xy)z - x(yz) has {} nonzero terms", a.len())
                });
            }
        }
    }
    Ok(r)
}

fn coassociativity(h: &HallAlgebra, bound: usize, only: Option<&str>) -> Result<CheckReport> {
    let mut r = CheckReport::new("coassociativity", "basis classes, exact coefficients");
    for e in h.classes_up_to(bound)? {
        let id = e.to_string();
        if skip(only, &id) {
            continue;
        }
        let a = h.coassociator(&HallVector::basis(e.clone()), bound)?;
        r.require(&id, a.is_zero(), || {
            format!("coassociator has {} nonzero terms", a.len())
        });
    }
    Ok(r)
}

fn green(h: &HallAlgebra, bound: usize, only: Option<&str>) -> Result<CheckReport> {
    let mut r = CheckReport::new("green", "every quadruple with dim M + dim N = dim X + dim Y");
    let classes = h.classes_up_to(bound)?;
    for m in &classes {
        for n in &classes {
            let grade = &m.dim + &n.dim;
            if grade.total() > bound {
                continue;
            }
            for x in &classes {
                for y in &classes {
                    let id = instance_id(&[m, n, x, y]);
                    if &x.dim + &y.dim != grade || skip(only, &id) {
                        continue;
                    }
                    let (lhs, rhs) = h.green_sides(m, n, x, y)?;
                    r.compare(&id, &lhs, &rhs, "Green's formula sides");
                }
            }
        }
    }
    Ok(r)
}

fn bialgebra(h: &HallAlgebra, bound: usize, only: Option<&str>) -> Result<CheckReport> {
    let mut r = CheckReport::new("bialgebra", "braided compatibility on basis pairs");
    let classes = h.classes_up_to(bound)?;
    for m in &classes {
        for n in &classes {
            let id = instance_id(&[m, n]);
            if m.dim.total() + n.dim.total() > bound || skip(only, &id) {
                continue;
            }
            let res = h.bialgebra_residual(m, n, bound)?;
            r.require(&id, res.is_zero(), || {
                format!("residual has {} nonzero terms", res.len())
            });
        }
    }
    Ok(r)
}

fn vector_json(v: &HallVector) -> serde_json::Value {
    v.iter()
        .map(|(c, x)| json!({"class": c.to_string(), "coeff": format_rational(x)}))
        .collect()
}

fn antipode(h: &HallAlgebra, bound: usize, only: Option<&str>) -> Result<CheckReport> {
    let mut r = CheckReport::new(
        "antipode",
        "canonical antipode satisfies both axioms; the comparison with basis-wise negation is informational",
    );
    let s = CanonicalAntipode::compute(h, bound)?;
    for e in h.classes_up_to(bound)? {
        let id = e.to_string();
        if skip(only, &id) {
            continue;
        }
        let (left, right) = h.antipode_residuals(&HallVector::basis(e.clone()), bound, |v| s.apply(v))?;
        r.require(&id, left.is_zero() && right.is_zero(), || {
            "an antipode axiom fails".into()
        });
    }
    let cmp = h.compare_antipodes(bound)?;
    let first = cmp.first_divergence.as_ref().map(|d| {
        json!({
            "class": d.class.to_string(),
            "canonical": vector_json(&d.canonical),
            "negation": vector_json(&d.negation),
            "negation_residual": vector_json(&d.negation_residual),
        })
    });
    r.notes = Some(json!({
        "negation_matches_canonical": cmp.divergent.is_empty(),
        "classes_checked": cmp.classes_checked,
        "agree_on_simples": cmp.agree_on_simples,
        "divergent": cmp.divergent.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "first_divergence": first,
    }));
    Ok(r)
}

fn hexagon(h: &HallAlgebra, bound: usize, only: Option<&str>) -> Result<CheckReport> {
    let mut r = CheckReport::new("hexagon", "braiding coefficients on homogeneous grades, both hexagons");
    let dims = h.quiver().dims_up_to(bound);
    for u in &dims {
        for v in &dims {
            for w in &dims {
                let id = format!("{u}|{v}|{w}");
                if u.total() + v.total() + w.total() > bound || skip(only, &id) {
                    continue;
                }
                let (a, b) = h.hexagon_coefficients(u, v, w)?;
                let (c, d) = h.hexagon_coefficients_mirror(u, v, w)?;
                let fail = if a != b {
                    Some(Failure::unequal(&id, &a, &b, "u past v⊗w"))
                } else if c != d {
                    Some(Failure::unequal(&id, &c, &d, "u⊗v past w"))
                } else {
                    None
                };
                r.record(fail);
            }
        }
    }
    Ok(r)
}

/// Indecomposable classes over `F_q` against positive roots, dimension by dimension.
fn gabriel(h: &HallAlgebra) -> Result<CheckReport> {
    let mut r = CheckReport::new("gabriel", "one indecomposable class per positive root");
    let q = h.quiver();
    let mut roots = positive_roots(q)?;
    roots.sort();
    let counts = indecomposable_counts(q, h.field(), q.root_coefficient_bound(), h.budget())?;
    let mut found: Vec<_> = counts.iter().filter(|(_, n)| *n == 1).map(|(d, _)| d.clone()).collect();
    found.sort();
    let total: usize = counts.iter().map(|(_, n)| n).sum();
    r.require(&q.id(), found == roots && total == roots.len(), || {
        format!(
            "{} indecomposable classes against {} positive roots",
            total,
            roots.len()
        )
    });
    r.notes = Some(json!({"positive_roots": roots.len(), "indecomposable_classes": total}));
    Ok(r)
}

fn engine(cfg: &SuiteConfig, only: Option<&str>) -> Result<CheckReport> {
    let mut r = CheckReport::new(
        "engine",
        "seeded random spans; equivalence judged by automorphism orders of skeletons",
    );
    for inst in functoriality_instances(cfg.seed, cfg.engine_instances)? {
        let id = format!("functorial#{}", inst.index);
        if skip(only, &id) {
            continue;
        }
        r.require(&id, inst.passed(), || {
            format!(
                "matrices {} vectors {} cardinalities {}",
                inst.matrices_agree, inst.vectors_agree, inst.cardinalities_agree
            )
        });
    }
    for inst in equivalence_instances(cfg.seed, cfg.equivalence_instances) {
        let id = format!("equivalent#{}", inst.index);
        if skip(only, &id) {
            continue;
        }
        let ok = inst.judged_equivalent && inst.cardinalities_equal && inst.alt_formula_agrees;
        r.require(&id, ok, || "equivalent pair with unequal cardinalities".into());
    }
    Ok(r)
}

/// `Σ_{n ≤ max} 1/n!` against the groupoid of finite sets of size at most `max`.
fn finite_sets(max: usize) -> CheckReport {
    let mut r = CheckReport::new("finite-sets", "partial sums of the cardinality of finite sets");
    let g = Groupoid::finite_sets(max);
    let mut expected = Rational::from_integer(BigInt::from(0));
    let mut factorial = BigInt::from(1);
    for n in 0..=max {
        if n > 0 {
            factorial *= n;
        }
        expected += Rational::new(BigInt::from(1), factorial.clone());
    }
    r.compare(&format!("n<={max}"), &g.cardinality(), &expected, "Σ 1/n!");
    r.compare(
        &format!("alt:n<={max}"),
        &g.cardinality_alt(),
        &expected,
        "Σ 1/n! by the alternate formula",
    );
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hall::algebra::tests::a2;

    #[test]
    fn names_round_trip() {
        for s in Suite::EACH {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("ext-bilinearity".parse::<Suite>().unwrap(), Suite::ExtBilinearity);
        assert!("Green".parse::<Suite>().is_err());
        assert_eq!(Suite::All.expand().len(), Suite::EACH.len());
    }

    #[test]
    fn only_selects_one_instance() {
        let cfg = SuiteConfig {
            max_dim: 2,
            object_dim: 2,
            seed: 1,
            engine_instances: 3,
            equivalence_instances: 2,
            finite_sets_max: 4,
        };
        let h = a2(2);
        let all = run_suite(&h, Suite::Green, &cfg, None).unwrap();
        let one = run_suite(&h, Suite::Green, &cfg, Some("(1,0)#0|(0,1)#0|(0,1)#0|(1,0)#0")).unwrap();
        assert!(all[0].instances > 1);
        assert_eq!(one[0].instances, 1);
        assert!(one[0].passed());
        let fs = run_suite(&h, Suite::FiniteSets, &cfg, None).unwrap();
        assert_eq!(fs[0].instances, 2);
        assert!(fs[0].passed());
    }
}
