//! `hallgpd groupoid ...`: cardinalities, weak pullbacks, span composition
//! and degroupoidification on JSON documents.

use clap::{Subcommand, ValueEnum};
use serde_json::json;

use crate::cli::bundled;
use crate::error::Result;
use crate::exactmath::format_rational;
use crate::groupoid::{
    degroupoidify_vector, functor_from_json, functor_to_json, groupoid_from_json, groupoid_to_json, span_from_json,
    span_to_json, weak_pullback, Groupoid,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    FiniteSets,
    Discrete,
    Codiscrete,
    Cyclic,
}

#[derive(Debug, Subcommand)]
pub enum GroupoidOp {
    /// Cardinality `Σ 1/|Aut x|` over iso classes.
    Card { file: String },
    /// Cardinality as `Σ_x 1/|{morphisms out of x}|`.
    CardAlt { file: String },
    /// Iso classes with sizes and automorphism orders.
    Classes { file: String },
    /// Weak pullback of two functor files with a common target.
    Pullback { f: String, g: String },
    /// `second ∘ first` for two span files.
    Compose { first: String, second: String },
    /// The matrix of a span, rows indexed by codomain classes.
    Degroupoidify { span: String },
    /// Push a groupoid over the domain through a span.
    Apply { span: String, vector: String },
    /// A member of a standard family, as a groupoid document.
    Build { family: Family, n: usize },
    /// Validates a groupoid document and re-emits it canonically.
    Check { file: String },
}

fn load_groupoid(name: &str) -> Result<Groupoid> {
    groupoid_from_json(&bundled::read(name)?)
}

fn lines(v: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

pub fn run(op: &GroupoidOp) -> Result<String> {
    Ok(match op {
        GroupoidOp::Card { file } => format!("{}\n", format_rational(&load_groupoid(file)?.cardinality())),
        GroupoidOp::CardAlt { file } => format!("{}\n", format_rational(&load_groupoid(file)?.cardinality_alt())),
        GroupoidOp::Classes { file } => {
            let g = load_groupoid(file)?;
            let classes: Vec<_> = g
                .iso_classes()
                .iter()
                .map(|c| json!({"representative": c.representative, "size": c.size, "aut_order": c.aut_order}))
                .collect();
            lines(json!({"cardinality": format_rational(&g.cardinality()), "classes": classes}))
        }
        GroupoidOp::Pullback { f, g } => {
            let f = functor_from_json(&bundled::read(f)?)?;
            let g = functor_from_json(&bundled::read(g)?)?;
            let pb = weak_pullback(&f, &g)?;
            let apex: serde_json::Value = serde_json::from_str(&groupoid_to_json(&pb.apex)).expect("valid document");
            lines(json!({
                "objects": pb.apex.object_count(),
                "cardinality": format_rational(&pb.apex.cardinality()),
                "triples": pb.triples,
                "apex": apex,
            }))
        }
        GroupoidOp::Compose { first, second } => {
            let s = span_from_json(&bundled::read(first)?)?;
            let t = span_from_json(&bundled::read(second)?)?;
            format!("{}\n", span_to_json(&t.compose(&s)?))
        }
        GroupoidOp::Degroupoidify { span } => {
            let m = span_from_json(&bundled::read(span)?)?.matrix();
            let rows: Vec<Vec<String>> = (0..m.rows())
                .map(|i| m.row(i).iter().map(format_rational).collect())
                .collect();
            lines(json!({"rows": m.rows(), "cols": m.cols(), "entries": rows}))
        }
        GroupoidOp::Apply { span, vector } => {
            let s = span_from_json(&bundled::read(span)?)?;
            let v = functor_from_json(&bundled::read(vector)?)?;
            let out = s.apply(&v)?;
            let coords: Vec<String> = degroupoidify_vector(&out).iter().map(format_rational).collect();
            let functor: serde_json::Value = serde_json::from_str(&functor_to_json(&out)).expect("valid document");
            lines(json!({"vector": coords, "functor": functor}))
        }
        GroupoidOp::Build { family, n } => {
            let g = match family {
                Family::FiniteSets => Groupoid::finite_sets(*n),
                Family::Discrete => Groupoid::discrete(*n),
                Family::Codiscrete => Groupoid::codiscrete(*n),
                Family::Cyclic => Groupoid::cyclic_group(*n),
            };
            format!("{}\n", groupoid_to_json(&g))
        }
        GroupoidOp::Check { file } => format!("{}\n", groupoid_to_json(&load_groupoid(file)?)),
    })
}
