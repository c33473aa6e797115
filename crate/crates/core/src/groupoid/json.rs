//! JSON documents for groupoids, functors and spans.
//!
//! A groupoid is `{"objects": n, "morphisms": [{"src": i, "tgt": j}, ...],
//! "compose": [[k | null, ...], ...]}` with `compose[g][f] = g∘f`.
//! A functor is `{"source": G, "target": H, "objects": [...], "morphisms": [...]}`.
//! A span is `{"apex": S, "left": leg, "right": leg}` where a leg is
//! `{"target": G, "objects": [...], "morphisms": [...]}`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groupoid::core::Groupoid;
use crate::groupoid::functor::Functor;
use crate::groupoid::span::Span;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub src: usize,
    pub tgt: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupoidDoc {
    pub objects: usize,
    pub morphisms: Vec<MorphismDoc>,
    pub compose: Vec<Vec<Option<usize>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDoc {
    pub source: GroupoidDoc,
    pub target: GroupoidDoc,
    pub objects: Vec<usize>,
    pub morphisms: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LegDoc {
    pub target: GroupoidDoc,
    pub objects: Vec<usize>,
    pub morphisms: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpanDoc {
    pub apex: GroupoidDoc,
    pub left: LegDoc,
    pub right: LegDoc,
}

impl GroupoidDoc {
    pub fn from_groupoid(g: &Groupoid) -> Self {
        GroupoidDoc {
            objects: g.object_count(),
            morphisms: (0..g.morphism_count())
                .map(|m| MorphismDoc {
                    src: g.source(m),
                    tgt: g.target(m),
                })
                .collect(),
            compose: g.composition_table(),
        }
    }

    pub fn to_groupoid(&self) -> Result<Groupoid> {
        let ends = self.morphisms.iter().map(|m| (m.src, m.tgt)).collect();
        Groupoid::from_table(self.objects, ends, self.compose.clone())
    }
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Input(format!("{what}: {e}")))
}

pub fn groupoid_from_json(text: &str) -> Result<Groupoid> {
    parse::<GroupoidDoc>(text, "groupoid")?.to_groupoid()
}

pub fn groupoid_to_json(g: &Groupoid) -> String {
    serde_json::to_string(&GroupoidDoc::from_groupoid(g)).expect("groupoid documents serialize")
}

pub fn functor_from_json(text: &str) -> Result<Functor> {
    let doc: FunctorDoc = parse(text, "functor")?;
    let source = Arc::new(doc.source.to_groupoid()?);
    let target = Arc::new(doc.target.to_groupoid()?);
    Functor::new(source, target, doc.objects, doc.morphisms)
}

pub fn functor_to_json(f: &Functor) -> String {
    let doc = FunctorDoc {
        source: GroupoidDoc::from_groupoid(f.source()),
        target: GroupoidDoc::from_groupoid(f.target()),
        objects: f.object_map().to_vec(),
        morphisms: f.morphism_map().to_vec(),
    };
    serde_json::to_string(&doc).expect("functor documents serialize")
}

pub fn span_from_json(text: &str) -> Result<Span> {
    let doc: SpanDoc = parse(text, "span")?;
    let apex = Arc::new(doc.apex.to_groupoid()?);
    let leg = |l: LegDoc| -> Result<Functor> {
        Functor::new(apex.clone(), Arc::new(l.target.to_groupoid()?), l.objects, l.morphisms)
    };
    let left = leg(doc.left)?;
    let right = leg(doc.right)?;
    Span::new(left, right)
}

pub fn span_to_json(s: &Span) -> String {
    let leg = |f: &Functor| LegDoc {
        target: GroupoidDoc::from_groupoid(f.target()),
        objects: f.object_map().to_vec(),
        morphisms: f.morphism_map().to_vec(),
    };
    let doc = SpanDoc {
        apex: GroupoidDoc::from_groupoid(s.apex()),
        left: leg(s.left()),
        right: leg(s.right()),
    };
    serde_json::to_string(&doc).expect("span documents serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn round_trips() {
        let g = Groupoid::finite_sets(3);
        let text = groupoid_to_json(&g);
        let back = groupoid_from_json(&text).unwrap();
        assert_eq!(groupoid_to_json(&back), text);
        assert_eq!(back.cardinality(), rat(8, 3));
        let f = Functor::to_point(Arc::new(Groupoid::connected_cyclic(2, 2)));
        let ft = functor_to_json(&f);
        assert_eq!(functor_to_json(&functor_from_json(&ft).unwrap()), ft);
        let s = Span::identity(Arc::new(Groupoid::cyclic_group(3)));
        let st = span_to_json(&s);
        let s2 = span_from_json(&st).unwrap();
        assert_eq!(span_to_json(&s2), st);
        assert_eq!(s2.matrix(), s.matrix());
    }

    #[test]
    fn diagnostics() {
        let err =
            groupoid_from_json("{\"objects\": 1,\n \"morphisms\": [{\"src\": 0}], \"compose\": [[0]]}").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("tgt") && msg.contains("line 2"), "{msg}");
        assert!(
            groupoid_from_json(r#"{"objects": 1, "morphisms": [{"src":0,"tgt":0}], "compose": [[null]]}"#).is_err()
        );
        let ok = groupoid_from_json(r#"{"objects": 1, "morphisms": [{"src":0,"tgt":0}], "compose": [[0]]}"#).unwrap();
        assert_eq!(ok.cardinality(), rat(1, 1));
    }
}
