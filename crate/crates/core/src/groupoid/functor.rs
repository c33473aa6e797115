//! Functors between finite groupoids, given by object and morphism maps.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groupoid::core::Groupoid;

#[derive(Clone, Debug)]
pub struct Functor {
    source: Arc<Groupoid>,
    target: Arc<Groupoid>,
    objects: Vec<usize>,
    morphisms: Vec<usize>,
}

impl Functor {
    /// Checks endpoints, identities and every composable pair.
    pub fn new(
        source: Arc<Groupoid>,
        target: Arc<Groupoid>,
        objects: Vec<usize>,
        morphisms: Vec<usize>,
    ) -> Result<Self> {
        let f = Functor::new_unchecked(source, target, objects, morphisms)?;
        f.check_laws()?;
        Ok(f)
    }

    /// Checks only table shapes and ranges.
    pub(crate) fn new_unchecked(
        source: Arc<Groupoid>,
        target: Arc<Groupoid>,
        objects: Vec<usize>,
        morphisms: Vec<usize>,
    ) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidFunctor(m));
        if objects.len() != source.object_count() || morphisms.len() != source.morphism_count() {
            return bad("object or morphism map has the wrong length".into());
        }
        if objects.iter().any(|&y| y >= target.object_count())
            || morphisms.iter().any(|&m| m >= target.morphism_count())
        {
            return bad("map value out of range".into());
        }
        Ok(Functor {
            source,
            target,
            objects,
            morphisms,
        })
    }

    pub fn check_laws(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidFunctor(m));
        let (g, h) = (&*self.source, &*self.target);
        for m in 0..g.morphism_count() {
            let fm = self.morphisms[m];
            if h.source(fm) != self.objects[g.source(m)] || h.target(fm) != self.objects[g.target(m)] {
                return bad(format!("morphism {m} is sent to a morphism with the wrong endpoints"));
            }
        }
        for x in 0..g.object_count() {
            if self.morphisms[g.identity(x)] != h.identity(self.objects[x]) {
                return bad(format!("identity of object {x} is not preserved"));
            }
        }
        for f in 0..g.morphism_count() {
            for &k in g.outgoing(g.target(f)) {
                let kf = g.compose(k, f).expect("composable");
                if h.compose(self.morphisms[k], self.morphisms[f]) != Some(self.morphisms[kf]) {
                    return bad(format!("composite {k}∘{f} is not preserved"));
                }
            }
        }
        Ok(())
    }

    pub fn identity(g: Arc<Groupoid>) -> Self {
        let objects = (0..g.object_count()).collect();
        let morphisms = (0..g.morphism_count()).collect();
        Functor {
            source: g.clone(),
            target: g,
            objects,
            morphisms,
        }
    }

    /// The unique functor to the one-object trivial groupoid.
    pub fn to_point(g: Arc<Groupoid>) -> Self {
        let objects = vec![0; g.object_count()];
        let morphisms = vec![0; g.morphism_count()];
        Functor {
            source: g,
            target: Arc::new(Groupoid::discrete(1)),
            objects,
            morphisms,
        }
    }

    pub fn source(&self) -> &Arc<Groupoid> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Groupoid> {
        &self.target
    }

    pub fn on_object(&self, x: usize) -> usize {
        self.objects[x]
    }

    pub fn on_morphism(&self, m: usize) -> usize {
        self.morphisms[m]
    }

    pub fn object_map(&self) -> &[usize] {
        &self.objects
    }

    pub fn morphism_map(&self) -> &[usize] {
        &self.morphisms
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Functor) -> Result<Functor> {
        if !Arc::ptr_eq(&self.target, &other.source) && !same_shape(&self.target, &other.source) {
            return Err(Error::NotComposable(
                "functor target differs from the next source".into(),
            ));
        }
        Ok(Functor {
            source: self.source.clone(),
            target: other.target.clone(),
            objects: self.objects.iter().map(|&y| other.objects[y]).collect(),
            morphisms: self.morphisms.iter().map(|&m| other.morphisms[m]).collect(),
        })
    }
}

/// Structural equality of two groupoids on the same index sets.
pub(crate) fn same_shape(a: &Groupoid, b: &Groupoid) -> bool {
    a.object_count() == b.object_count()
        && a.morphism_count() == b.morphism_count()
        && (0..a.morphism_count()).all(|m| a.source(m) == b.source(m) && a.target(m) == b.target(m))
        && (0..a.morphism_count()).all(|g| {
            a.outgoing(a.target(g))
                .iter()
                .all(|&f| a.compose(f, g) == b.compose(f, g))
        })
}
