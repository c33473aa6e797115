//! Finite groupoids with explicit morphisms.
//!
//! Composition is either a dense table or a rule on morphism labels
//! (permutations, group elements, componentwise pairs, tagged summands),
//! so large automorphism groups such as `S_8` never need a table.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::Rational;

#[derive(Clone, Debug)]
pub(crate) enum Law {
    /// `table[g][f] = g∘f` when defined.
    Table(Vec<Vec<Option<usize>>>),
    Labeled {
        labels: Vec<Vec<u32>>,
        /// `(source object, label) -> morphism`.
        index: HashMap<(usize, Vec<u32>), usize>,
        kind: LabelKind,
    },
}

#[derive(Clone, Debug)]
pub(crate) enum LabelKind {
    /// Label is a permutation `i ↦ label[i]`; `g∘f` is `i ↦ g[f[i]]`.
    Permutation,
    /// Label `[g]` for a group with multiplication table `mult[h][g] = hg`.
    Group(Arc<Vec<Vec<u32>>>),
    /// Label lists one morphism index per factor; composition is componentwise.
    Product(Vec<Arc<Groupoid>>),
    /// Label `[summand, morphism]`.
    Sum(Vec<Arc<Groupoid>>),
}

/// A finite groupoid. Morphisms are `0..morphism_count()`, each with a
/// source and target object.
#[derive(Clone, Debug)]
pub struct Groupoid {
    objects: usize,
    src: Vec<usize>,
    tgt: Vec<usize>,
    law: Law,
    identity: Vec<usize>,
    inverse: Vec<usize>,
    outgoing: Vec<Vec<usize>>,
}

/// One isomorphism class: least object, number of objects, `|Aut|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoClassInfo {
    pub representative: usize,
    pub size: usize,
    pub aut_order: usize,
}

impl Groupoid {
    fn assemble(
        objects: usize,
        src: Vec<usize>,
        tgt: Vec<usize>,
        law: Law,
        identity: Vec<usize>,
        inverse: Vec<usize>,
    ) -> Self {
        let mut outgoing = vec![Vec::new(); objects];
        for (m, &s) in src.iter().enumerate() {
            outgoing[s].push(m);
        }
        Groupoid {
            objects,
            src,
            tgt,
            law,
            identity,
            inverse,
            outgoing,
        }
    }

    /// From a composition table `compose[g][f] = g∘f`, validating every law.
    pub fn from_table(objects: usize, ends: Vec<(usize, usize)>, compose: Vec<Vec<Option<usize>>>) -> Result<Self> {
        let n = ends.len();
        let bad = |msg: String| Err(Error::InvalidGroupoid(msg));
        if ends.iter().any(|&(s, t)| s >= objects || t >= objects) {
            return bad("morphism endpoint out of range".into());
        }
        if compose.len() != n || compose.iter().any(|row| row.len() != n) {
            return bad(format!("composition table must be {n}x{n}"));
        }
        for g in 0..n {
            for f in 0..n {
                let composable = ends[f].1 == ends[g].0;
                match compose[g][f] {
                    Some(_) if !composable => return bad(format!("{g}∘{f} defined but not composable")),
                    None if composable => return bad(format!("{g}∘{f} composable but undefined")),
                    Some(k) if k >= n || ends[k] != (ends[f].0, ends[g].1) => {
                        return bad(format!("{g}∘{f} = {k} has the wrong endpoints"));
                    }
                    _ => {}
                }
            }
        }
        let mut identity = Vec::with_capacity(objects);
        for x in 0..objects {
            let id = (0..n).find(|&e| {
                ends[e] == (x, x)
                    && (0..n).all(|f| {
                        (ends[f].1 != x || compose[e][f] == Some(f)) && (ends[f].0 != x || compose[f][e] == Some(f))
                    })
            });
            match id {
                Some(e) => identity.push(e),
                None => return bad(format!("object {x} has no identity")),
            }
        }
        let mut inverse = Vec::with_capacity(n);
        for f in 0..n {
            let (s, t) = ends[f];
            let inv = (0..n).find(|&g| {
                ends[g] == (t, s) && compose[g][f] == Some(identity[s]) && compose[f][g] == Some(identity[t])
            });
            match inv {
                Some(g) => inverse.push(g),
                None => return bad(format!("morphism {f} has no inverse")),
            }
        }
        for f in 0..n {
            for g in (0..n).filter(|&g| ends[g].0 == ends[f].1) {
                for h in (0..n).filter(|&h| ends[h].0 == ends[g].1) {
                    let left = compose[h][g].and_then(|hg| compose[hg][f]);
                    let right = compose[g][f].and_then(|gf| compose[h][gf]);
                    if left != right {
                        return bad(format!("composition is not associative at ({h},{g},{f})"));
                    }
                }
            }
        }
        let (src, tgt) = ends.into_iter().unzip();
        Ok(Groupoid::assemble(
            objects,
            src,
            tgt,
            Law::Table(compose),
            identity,
            inverse,
        ))
    }

    fn labeled(objects: usize, morphisms: Vec<(usize, usize, Vec<u32>)>, kind: LabelKind) -> Self {
        let mut src = Vec::with_capacity(morphisms.len());
        let mut tgt = Vec::with_capacity(morphisms.len());
        let mut labels = Vec::with_capacity(morphisms.len());
        let mut index = HashMap::with_capacity(morphisms.len());
        for (m, (s, t, label)) in morphisms.into_iter().enumerate() {
            index.insert((s, label.clone()), m);
            src.push(s);
            tgt.push(t);
            labels.push(label);
        }
        let mut g = Groupoid::assemble(
            objects,
            src,
            tgt,
            Law::Labeled { labels, index, kind },
            Vec::new(),
            Vec::new(),
        );
        g.identity = (0..objects).map(|x| g.lookup(x, &g.identity_label(x))).collect();
        g.inverse = (0..g.src.len())
            .map(|m| g.lookup(g.tgt[m], &g.inverse_label(m)))
            .collect();
        g
    }

    fn lookup(&self, source: usize, label: &[u32]) -> usize {
        match &self.law {
            Law::Labeled { index, .. } => *index
                .get(&(source, label.to_vec()))
                .unwrap_or_else(|| panic!("label {label:?} at object {source} is closed under the law")),
            Law::Table(_) => unreachable!("lookup on a table law"),
        }
    }

    fn label(&self, m: usize) -> &[u32] {
        match &self.law {
            Law::Labeled { labels, .. } => &labels[m],
            Law::Table(_) => unreachable!("label on a table law"),
        }
    }

    fn identity_label(&self, x: usize) -> Vec<u32> {
        let Law::Labeled { kind, labels, .. } = &self.law else {
            unreachable!()
        };
        match kind {
            LabelKind::Permutation => {
                let len = self.outgoing[x].first().map_or(0, |&m| labels[m].len());
                (0..len as u32).collect()
            }
            LabelKind::Group(mult) => {
                let e = (0..mult.len()).find(|&e| (0..mult.len()).all(|g| mult[e][g] as usize == g));
                vec![e.expect("group has an identity") as u32]
            }
            LabelKind::Product(_) | LabelKind::Sum(_) => {
                // recovered from any outgoing morphism composed with its own inverse
                let m = self.outgoing[x][0];
                self.compose_labels(&self.inverse_label(m), labels[m].as_slice())
            }
        }
    }

    fn inverse_label(&self, m: usize) -> Vec<u32> {
        let Law::Labeled { kind, labels, .. } = &self.law else {
            unreachable!()
        };
        let label = &labels[m];
        match kind {
            LabelKind::Permutation => {
                let mut inv = vec![0u32; label.len()];
                for (i, &j) in label.iter().enumerate() {
                    inv[j as usize] = i as u32;
                }
                inv
            }
            LabelKind::Group(mult) => {
                let g = label[0] as usize;
                let e = (0..mult.len())
                    .find(|&e| (0..mult.len()).all(|h| mult[e][h] as usize == h))
                    .expect("identity");
                let inv = (0..mult.len())
                    .find(|&h| mult[h][g] as usize == e)
                    .expect("group inverse");
                vec![inv as u32]
            }
            LabelKind::Product(factors) => label
                .iter()
                .zip(factors)
                .map(|(&k, g)| g.inverse(k as usize) as u32)
                .collect(),
            LabelKind::Sum(parts) => vec![label[0], parts[label[0] as usize].inverse(label[1] as usize) as u32],
        }
    }

    /// Label of `g∘f` from the labels of `g` and `f`.
    fn compose_labels(&self, g: &[u32], f: &[u32]) -> Vec<u32> {
        let Law::Labeled { kind, .. } = &self.law else {
            unreachable!()
        };
        match kind {
            LabelKind::Permutation => f.iter().map(|&i| g[i as usize]).collect(),
            LabelKind::Group(mult) => vec![mult[g[0] as usize][f[0] as usize]],
            LabelKind::Product(factors) => g
                .iter()
                .zip(f)
                .zip(factors)
                .map(|((&a, &b), h)| h.compose(a as usize, b as usize).expect("componentwise composable") as u32)
                .collect(),
            LabelKind::Sum(parts) => {
                let p = &parts[f[0] as usize];
                vec![
                    f[0],
                    p.compose(g[1] as usize, f[1] as usize).expect("composable in summand") as u32,
                ]
            }
        }
    }

    pub fn object_count(&self) -> usize {
        self.objects
    }

    pub fn morphism_count(&self) -> usize {
        self.src.len()
    }

    pub fn source(&self, m: usize) -> usize {
        self.src[m]
    }

    pub fn target(&self, m: usize) -> usize {
        self.tgt[m]
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identity[x]
    }

    pub fn inverse(&self, m: usize) -> usize {
        self.inverse[m]
    }

    /// Morphisms whose source is `x`.
    pub fn outgoing(&self, x: usize) -> &[usize] {
        &self.outgoing[x]
    }

    pub fn hom(&self, x: usize, y: usize) -> impl Iterator<Item = usize> + '_ {
        self.outgoing[x].iter().copied().filter(move |&m| self.tgt[m] == y)
    }

    pub fn automorphisms(&self, x: usize) -> Vec<usize> {
        self.hom(x, x).collect()
    }

    /// `g∘f`, defined when `target(f) = source(g)`.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        if self.tgt[f] != self.src[g] {
            return None;
        }
        match &self.law {
            Law::Table(t) => t[g][f],
            Law::Labeled { .. } => {
                let label = self.compose_labels(self.label(g), self.label(f));
                Some(self.lookup(self.src[f], &label))
            }
        }
    }

    /// Exhaustive check of identity, inverse and associativity laws.
    pub fn check_laws(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidGroupoid(msg));
        for f in 0..self.morphism_count() {
            let (s, t) = (self.src[f], self.tgt[f]);
            if self.compose(self.identity[t], f) != Some(f) || self.compose(f, self.identity[s]) != Some(f) {
                return bad(format!("identity law fails at {f}"));
            }
            let inv = self.inverse[f];
            if self.compose(inv, f) != Some(self.identity[s]) || self.compose(f, inv) != Some(self.identity[t]) {
                return bad(format!("inverse law fails at {f}"));
            }
            for &g in &self.outgoing[t] {
                let gf = self.compose(g, f).expect("composable");
                if self.src[gf] != s || self.tgt[gf] != self.tgt[g] {
                    return bad(format!("{g}∘{f} has the wrong endpoints"));
                }
                for &h in &self.outgoing[self.tgt[g]] {
                    let hg = self.compose(h, g).expect("composable");
                    if self.compose(hg, f) != self.compose(h, gf) {
                        return bad(format!("associativity fails at ({h},{g},{f})"));
                    }
                }
            }
        }
        Ok(())
    }

    /// The class index of every object; classes are numbered by least object.
    pub fn class_of_objects(&self) -> Vec<usize> {
        let mut class = vec![usize::MAX; self.objects];
        let mut next = 0;
        for x in 0..self.objects {
            if class[x] != usize::MAX {
                continue;
            }
            for &m in &self.outgoing[x] {
                class[self.tgt[m]] = next;
            }
            class[x] = next;
            next += 1;
        }
        class
    }

    pub fn iso_classes(&self) -> Vec<IsoClassInfo> {
        let class = self.class_of_objects();
        let count = class.iter().copied().max().map_or(0, |c| c + 1);
        let mut out: Vec<Option<IsoClassInfo>> = vec![None; count];
        for x in 0..self.objects {
            match &mut out[class[x]] {
                Some(info) => info.size += 1,
                slot @ None => {
                    *slot = Some(IsoClassInfo {
                        representative: x,
                        size: 1,
                        aut_order: self.hom(x, x).count(),
                    })
                }
            }
        }
        out.into_iter().map(|c| c.expect("every class has an object")).collect()
    }

    /// `Σ_[x] 1/|Aut(x)|`.
    pub fn cardinality(&self) -> Rational {
        self.iso_classes().iter().fold(Rational::zero(), |acc, c| {
            acc + Rational::new(1.into(), BigInt::from(c.aut_order))
        })
    }

    /// `Σ_x 1/|Mor(x, −)|`.
    pub fn cardinality_alt(&self) -> Rational {
        (0..self.objects).fold(Rational::zero(), |acc, x| {
            acc + Rational::new(1.into(), BigInt::from(self.outgoing[x].len()))
        })
    }

    pub fn is_discrete(&self) -> bool {
        self.morphism_count() == self.objects
    }

    // ---- constructors ----

    pub fn discrete(n: usize) -> Self {
        Groupoid::labeled(
            n,
            (0..n).map(|x| (x, x, vec![0])).collect(),
            LabelKind::Group(Arc::new(vec![vec![0]])),
        )
    }

    pub fn empty() -> Self {
        Groupoid::discrete(0)
    }

    /// One object whose automorphisms form the group with table `mult[h][g] = hg`.
    pub fn one_object_group(mult: Vec<Vec<u32>>) -> Result<Self> {
        let n = mult.len();
        validate_group(&mult)?;
        Ok(Groupoid::labeled(
            1,
            (0..n as u32).map(|g| (0, 0, vec![g])).collect(),
            LabelKind::Group(Arc::new(mult)),
        ))
    }

    pub fn cyclic_group(n: usize) -> Self {
        Groupoid::one_object_group(cyclic_table(n)).expect("cyclic table is a group")
    }

    /// `k` mutually isomorphic objects with vertex group `Z/m`, built as the
    /// codiscrete groupoid on `k` objects times `Z/m`.
    pub fn connected_cyclic(k: usize, m: usize) -> Self {
        Groupoid::product_of(&Arc::new(Groupoid::codiscrete(k)), &Arc::new(Groupoid::cyclic_group(m)))
    }

    /// `n` objects with exactly one morphism between any two.
    pub fn codiscrete(n: usize) -> Self {
        let mut ends = Vec::new();
        for x in 0..n {
            for y in 0..n {
                ends.push((x, y));
            }
        }
        let idx = |x: usize, y: usize| x * n + y;
        let mut compose = vec![vec![None; n * n]; n * n];
        for (f, &(x, y)) in ends.iter().enumerate() {
            for z in 0..n {
                compose[idx(y, z)][f] = Some(idx(x, z));
            }
        }
        Groupoid::from_table_unchecked(n, ends, compose)
    }

    fn from_table_unchecked(objects: usize, ends: Vec<(usize, usize)>, compose: Vec<Vec<Option<usize>>>) -> Self {
        let n = ends.len();
        let identity = (0..objects)
            .map(|x| {
                (0..n)
                    .find(|&e| ends[e] == (x, x) && (0..n).all(|f| ends[f].1 != x || compose[e][f] == Some(f)))
                    .expect("identity")
            })
            .collect::<Vec<_>>();
        let inverse = (0..n)
            .map(|f| {
                let (s, t) = ends[f];
                (0..n)
                    .find(|&g| ends[g] == (t, s) && compose[g][f] == Some(identity[s]))
                    .expect("inverse")
            })
            .collect();
        let (src, tgt) = ends.into_iter().unzip();
        Groupoid::assemble(objects, src, tgt, Law::Table(compose), identity, inverse)
    }

    /// Finite sets `{0..n}` for `n = 0..=max` with all bijections.
    pub fn finite_sets(max: usize) -> Self {
        let mut morphisms = Vec::new();
        for n in 0..=max {
            for perm in permutations(n) {
                morphisms.push((n, n, perm));
            }
        }
        Groupoid::labeled(max + 1, morphisms, LabelKind::Permutation)
    }

    /// Action groupoid `X//G` for `action[g][x] = g·x` and a group table.
    pub fn action_groupoid(set_size: usize, mult: Vec<Vec<u32>>, action: Vec<Vec<usize>>) -> Result<Self> {
        validate_group(&mult)?;
        let n = mult.len();
        if action.len() != n
            || action
                .iter()
                .any(|row| row.len() != set_size || row.iter().any(|&y| y >= set_size))
        {
            return Err(Error::InvalidAction(
                "action table must be |G| x |X| with values in X".into(),
            ));
        }
        let e = group_identity(&mult).expect("validated");
        for x in 0..set_size {
            if action[e][x] != x {
                return Err(Error::InvalidAction(format!("identity moves {x}")));
            }
            for h in 0..n {
                for g in 0..n {
                    if action[mult[h][g] as usize][x] != action[h][action[g][x]] {
                        return Err(Error::InvalidAction(format!("(hg)·{x} ≠ h·(g·{x}) for h={h}, g={g}")));
                    }
                }
            }
        }
        let morphisms = (0..set_size)
            .flat_map(|x| {
                action
                    .iter()
                    .enumerate()
                    .map(move |(g, row)| (x, row[x], vec![g as u32]))
            })
            .collect();
        Ok(Groupoid::labeled(set_size, morphisms, LabelKind::Group(Arc::new(mult))))
    }

    /// `G × H`; object `(x, y)` is `x * |H| + y`.
    pub fn product_of(g: &Arc<Groupoid>, h: &Arc<Groupoid>) -> Self {
        let ho = h.object_count();
        let mut morphisms = Vec::with_capacity(g.morphism_count() * h.morphism_count());
        for a in 0..g.morphism_count() {
            for b in 0..h.morphism_count() {
                morphisms.push((
                    g.source(a) * ho + h.source(b),
                    g.target(a) * ho + h.target(b),
                    vec![a as u32, b as u32],
                ));
            }
        }
        Groupoid::labeled(
            g.object_count() * ho,
            morphisms,
            LabelKind::Product(vec![g.clone(), h.clone()]),
        )
    }

    /// `G + H`; objects of `H` follow those of `G`.
    pub fn coproduct_of(g: &Arc<Groupoid>, h: &Arc<Groupoid>) -> Self {
        let go = g.object_count();
        let mut morphisms = Vec::with_capacity(g.morphism_count() + h.morphism_count());
        for a in 0..g.morphism_count() {
            morphisms.push((g.source(a), g.target(a), vec![0, a as u32]));
        }
        for b in 0..h.morphism_count() {
            morphisms.push((go + h.source(b), go + h.target(b), vec![1, b as u32]));
        }
        Groupoid::labeled(
            go + h.object_count(),
            morphisms,
            LabelKind::Sum(vec![g.clone(), h.clone()]),
        )
    }

    /// Subgroupoid on objects given as triples, with pair-labeled morphisms;
    /// used by weak pullbacks.
    pub(crate) fn from_pairs(
        objects: usize,
        morphisms: Vec<(usize, usize, [usize; 2])>,
        factors: [Arc<Groupoid>; 2],
    ) -> Self {
        let morphisms = morphisms
            .into_iter()
            .map(|(s, t, [a, b])| (s, t, vec![a as u32, b as u32]))
            .collect();
        Groupoid::labeled(objects, morphisms, LabelKind::Product(factors.to_vec()))
    }

    /// Dense composition table, for serialization.
    pub fn composition_table(&self) -> Vec<Vec<Option<usize>>> {
        if let Law::Table(t) = &self.law {
            return t.clone();
        }
        let n = self.morphism_count();
        (0..n).map(|g| (0..n).map(|f| self.compose(g, f)).collect()).collect()
    }

    /// The automorphism group of `x` as a multiplication table on `0..|Aut x|`.
    pub fn automorphism_table(&self, x: usize) -> Vec<Vec<u32>> {
        let auts = self.automorphisms(x);
        let pos: HashMap<usize, u32> = auts.iter().enumerate().map(|(i, &m)| (m, i as u32)).collect();
        auts.iter()
            .map(|&h| {
                auts.iter()
                    .map(|&g| pos[&self.compose(h, g).expect("endomorphisms compose")])
                    .collect()
            })
            .collect()
    }
}

pub fn cyclic_table(n: usize) -> Vec<Vec<u32>> {
    (0..n).map(|h| (0..n).map(|g| ((h + g) % n) as u32).collect()).collect()
}

fn group_identity(mult: &[Vec<u32>]) -> Option<usize> {
    (0..mult.len()).find(|&e| (0..mult.len()).all(|g| mult[e][g] as usize == g && mult[g][e] as usize == g))
}

pub(crate) fn validate_group(mult: &[Vec<u32>]) -> Result<()> {
    let n = mult.len();
    let bad = |m: &str| Err(Error::InvalidAction(format!("not a group table: {m}")));
    if n == 0 || mult.iter().any(|r| r.len() != n || r.iter().any(|&x| x as usize >= n)) {
        return bad("shape");
    }
    let Some(e) = group_identity(mult) else {
        return bad("no identity");
    };
    if !(0..n).all(|g| mult.iter().any(|row| row[g] as usize == e)) {
        return bad("missing inverse");
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mult[mult[a][b] as usize][c] != mult[a][mult[b][c] as usize] {
                    return bad("not associative");
                }
            }
        }
    }
    Ok(())
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = (0..n as u32).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn discrete_and_groups() {
        let d = Groupoid::discrete(3);
        d.check_laws().unwrap();
        assert_eq!(d.cardinality(), rat(3, 1));
        let z2 = Groupoid::cyclic_group(2);
        z2.check_laws().unwrap();
        assert_eq!(z2.cardinality(), rat(1, 2));
        assert_eq!(z2.cardinality_alt(), rat(1, 2));
    }

    #[test]
    fn finite_sets_partial_sums() {
        let e5 = Groupoid::finite_sets(5);
        e5.check_laws().unwrap();
        assert_eq!(e5.cardinality(), rat(163, 60));
        assert_eq!(e5.cardinality_alt(), rat(163, 60));
        assert_eq!(Groupoid::finite_sets(8).cardinality(), rat(109601, 40320));
    }

    #[test]
    fn connected_groupoid_is_a_group_up_to_equivalence() {
        let g = Groupoid::connected_cyclic(2, 3);
        g.check_laws().unwrap();
        assert_eq!(
            g.iso_classes(),
            vec![IsoClassInfo {
                representative: 0,
                size: 2,
                aut_order: 3
            }]
        );
        assert_eq!(g.cardinality(), rat(1, 3));
        assert_eq!(g.cardinality_alt(), rat(1, 3));
    }

    #[test]
    fn action_groupoids() {
        let trivial = Groupoid::action_groupoid(4, vec![vec![0]], vec![vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(trivial.cardinality(), rat(4, 1));
        let free = Groupoid::action_groupoid(2, cyclic_table(2), vec![vec![0, 1], vec![1, 0]]).unwrap();
        free.check_laws().unwrap();
        assert_eq!(free.cardinality(), rat(1, 1));
        let fixed = Groupoid::action_groupoid(1, cyclic_table(2), vec![vec![0], vec![0]]).unwrap();
        assert_eq!(fixed.cardinality(), rat(1, 2));
        assert!(Groupoid::action_groupoid(2, cyclic_table(2), vec![vec![0, 1], vec![0, 0]]).is_err());
    }

    #[test]
    fn table_validation() {
        // Z/2 as a table
        let ok = Groupoid::from_table(
            1,
            vec![(0, 0), (0, 0)],
            vec![vec![Some(0), Some(1)], vec![Some(1), Some(0)]],
        )
        .unwrap();
        assert_eq!(ok.cardinality(), rat(1, 2));
        let no_inverse = Groupoid::from_table(
            1,
            vec![(0, 0), (0, 0)],
            vec![vec![Some(0), Some(1)], vec![Some(1), Some(1)]],
        );
        assert!(no_inverse.is_err());
        let wrong_shape = Groupoid::from_table(2, vec![(0, 1)], vec![vec![None]]);
        assert!(wrong_shape.is_err());
    }

    #[test]
    fn products_and_sums() {
        let a = Arc::new(Groupoid::cyclic_group(2));
        let b = Arc::new(Groupoid::discrete(3));
        let p = Groupoid::product_of(&a, &b);
        p.check_laws().unwrap();
        assert_eq!(p.cardinality(), rat(3, 2));
        let s = Groupoid::coproduct_of(&a, &b);
        s.check_laws().unwrap();
        assert_eq!(s.cardinality(), rat(7, 2));
        assert!(Groupoid::empty().cardinality() == rat(0, 1));
    }

    #[test]
    fn permutation_order() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(0), vec![Vec::<u32>::new()]);
        assert_eq!(permutations(3)[1], vec![0, 2, 1]);
    }
}
