//! Product and coproduct structure constants for every basis class within a bound.

use serde::Serialize;

use crate::error::Result;
use crate::exactmath::format_rational;
use crate::hall::HallAlgebra;

#[derive(Clone, Debug, Serialize)]
pub struct ProductTerm {
    pub class: String,
    pub coeff: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProductRow {
    pub left: String,
    pub right: String,
    pub terms: Vec<ProductTerm>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoproductTerm {
    pub left: String,
    pub right: String,
    pub coeff: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoproductRow {
    pub class: String,
    pub terms: Vec<CoproductTerm>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Tables {
    pub quiver: String,
    pub q: u64,
    pub max_dim: usize,
    pub product: Vec<ProductRow>,
    pub coproduct: Vec<CoproductRow>,
}

/// Rows ordered by class label; `[M]·[N]` for every pair with total dimension
/// within the bound, `Δ([E])` with terms `[N]⊗[M]` for every class.
pub fn tables(h: &HallAlgebra, max_dim: usize) -> Result<Tables> {
    let mut classes = h.classes_up_to(max_dim)?;
    classes.sort_by_key(|c| c.to_string());
    let mut product = Vec::new();
    for m in &classes {
        for n in &classes {
            if m.dim.total() + n.dim.total() > max_dim {
                continue;
            }
            let mut terms: Vec<ProductTerm> = h
                .product_basis(m, n)?
                .iter()
                .map(|(e, c)| ProductTerm {
                    class: e.to_string(),
                    coeff: format_rational(c),
                })
                .collect();
            terms.sort_by(|a, b| a.class.cmp(&b.class));
            product.push(ProductRow {
                left: m.to_string(),
                right: n.to_string(),
                terms,
            });
        }
    }
    let mut coproduct = Vec::new();
    for e in &classes {
        let mut terms: Vec<CoproductTerm> = h
            .coproduct_basis(e)?
            .iter()
            .map(|((n, m), c)| CoproductTerm {
                left: n.to_string(),
                right: m.to_string(),
                coeff: format_rational(c),
            })
            .collect();
        terms.sort_by(|a, b| (&a.left, &a.right).cmp(&(&b.left, &b.right)));
        coproduct.push(CoproductRow {
            class: e.to_string(),
            terms,
        });
    }
    Ok(Tables {
        quiver: h.quiver().id(),
        q: h.q(),
        max_dim,
        product,
        coproduct,
    })
}

impl Tables {
    /// One line per nonzero coefficient; `kind,a,b,c,coeff`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("kind,left,right,class,coeff\n");
        for row in &self.product {
            for t in &row.terms {
                out.push_str(&format!("product,{},{},{},{}\n", row.left, row.right, t.class, t.coeff));
            }
        }
        for row in &self.coproduct {
            for t in &row.terms {
                out.push_str(&format!("coproduct,{},{},{},{}\n", t.left, t.right, row.class, t.coeff));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hall::algebra::tests::a2;

    #[test]
    fn product_and_coproduct_rows() {
        let h = a2(2);
        let t = tables(&h, 2).unwrap();
        let row = t
            .product
            .iter()
            .find(|r| r.left == "(1,0)#0" && r.right == "(0,1)#0")
            .unwrap();
        let labels: Vec<(&str, &str)> = row.terms.iter().map(|t| (t.class.as_str(), t.coeff.as_str())).collect();
        assert_eq!(labels, vec![("(1,1)#0", "1/1"), ("(1,1)#1", "1/1")]);

        let t0 = tables(&h, 0).unwrap();
        assert_eq!(t0.product.len(), 1);
        assert_eq!(t0.product[0].terms.len(), 1);
        assert_eq!(t0.product[0].terms[0].coeff, "1/1");

        let t3 = tables(&a2(3), 2).unwrap();
        let p1 = t3.coproduct.iter().find(|r| r.class == "(1,1)#1").unwrap();
        assert!(p1
            .terms
            .iter()
            .any(|t| t.left == "(0,1)#0" && t.right == "(1,0)#0" && t.coeff == "2/1"));
        assert!(t.to_csv().contains("product,(1,0)#0,(0,1)#0,(1,1)#1,1/1\n"));
    }
}
