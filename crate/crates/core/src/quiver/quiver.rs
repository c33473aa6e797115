use std::fmt;
use std::ops::{Add, Index};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite acyclic quiver with a fixed arrow order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<(usize, usize)>,
    dynkin: Option<DynkinType>,
    root_bound: usize,
}

/// Simply-laced Dynkin types, one per connected component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
}

impl DynkinType {
    /// Largest coefficient of the highest root.
    pub fn max_root_coefficient(&self) -> usize {
        match *self {
            DynkinType::A(_) => 1,
            DynkinType::D(_) => 2,
            DynkinType::E(6) => 3,
            DynkinType::E(7) => 4,
            DynkinType::E(_) => 6,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct QuiverDoc {
    vertices: usize,
    arrows: Vec<[usize; 2]>,
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        for &(s, t) in &arrows {
            if s >= vertex_count || t >= vertex_count {
                return Err(Error::InvalidQuiver(format!(
                    "arrow {s}->{t} out of range for {vertex_count} vertices"
                )));
            }
        }
        if !is_acyclic(vertex_count, &arrows) {
            return Err(Error::InvalidQuiver("quiver has an oriented cycle".into()));
        }
        let (dynkin, root_bound) = match dynkin_components(vertex_count, &arrows) {
            Some((ty, bound)) => (Some(ty), bound),
            None => (None, 0),
        };
        Ok(Quiver {
            vertex_count,
            arrows,
            dynkin,
            root_bound,
        })
    }

    /// `{"vertices": n, "arrows": [[src, tgt], ...]}` with 0-based indices.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: QuiverDoc = serde_json::from_str(text)?;
        Quiver::new(doc.vertices, doc.arrows.into_iter().map(|[s, t]| (s, t)).collect())
    }

    pub fn to_json(&self) -> String {
        let doc = QuiverDoc {
            vertices: self.vertex_count,
            arrows: self.arrows.iter().map(|&(s, t)| [s, t]).collect(),
        };
        serde_json::to_string(&doc).expect("quiver serializes")
    }

    /// Linear orientation `0 -> 1 -> ... -> n-1`.
    pub fn linear_a(n: usize) -> Self {
        Quiver::new(n, (1..n).map(|i| (i - 1, i)).collect()).expect("A_n is acyclic")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// Stable identifier built from the arrow list.
    pub fn id(&self) -> String {
        let arrows: Vec<String> = self.arrows.iter().map(|(s, t)| format!("{s}>{t}")).collect();
        format!("Q{}[{}]", self.vertex_count, arrows.join(","))
    }

    pub fn is_dynkin(&self) -> bool {
        self.dynkin.is_some()
    }

    pub fn dynkin_type(&self) -> Option<DynkinType> {
        self.dynkin
    }

    /// Largest coefficient of any positive root; zero when not Dynkin.
    pub fn root_coefficient_bound(&self) -> usize {
        self.root_bound
    }

    pub fn zero_dim(&self) -> DimVector {
        DimVector(vec![0; self.vertex_count])
    }

    pub fn simple_dim(&self, vertex: usize) -> DimVector {
        let mut d = vec![0; self.vertex_count];
        d[vertex] = 1;
        DimVector(d)
    }

    /// Euler form `sum_i m_i n_i - sum_{a: i->j} m_i n_j`.
    pub fn euler_form(&self, m: &DimVector, n: &DimVector) -> Result<i64> {
        if m.len() != self.vertex_count || n.len() != self.vertex_count {
            return Err(Error::Shape(format!(
                "dimension vectors {m} and {n} on a quiver with {} vertices",
                self.vertex_count
            )));
        }
        let diag: i64 = (0..self.vertex_count).map(|i| (m[i] * n[i]) as i64).sum();
        let off: i64 = self.arrows.iter().map(|&(s, t)| (m[s] * n[t]) as i64).sum();
        Ok(diag - off)
    }

    /// Every dimension vector with the given total dimension, lexicographic.
    pub fn dims_with_total(&self, total: usize) -> Vec<DimVector> {
        let mut out = Vec::new();
        let mut cur = vec![0; self.vertex_count];
        compositions(total, 0, &mut cur, &mut out);
        out.into_iter().map(DimVector).collect()
    }

    /// Every dimension vector with total dimension at most `bound`, by total then lexicographic.
    pub fn dims_up_to(&self, bound: usize) -> Vec<DimVector> {
        (0..=bound).flat_map(|t| self.dims_with_total(t)).collect()
    }

    /// Directed paths of length at least one, as lists of arrow indices.
    pub fn paths(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack: Vec<Vec<usize>> = (0..self.arrows.len()).map(|a| vec![a]).collect();
        while let Some(path) = stack.pop() {
            let end = self.arrows[*path.last().expect("nonempty")].1;
            for (a, &(s, _)) in self.arrows.iter().enumerate() {
                if s == end {
                    let mut next = path.clone();
                    next.push(a);
                    stack.push(next);
                }
            }
            out.push(path);
        }
        out.sort();
        out
    }
}

fn compositions(remaining: usize, idx: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if idx + 1 == cur.len() {
        cur[idx] = remaining;
        out.push(cur.clone());
        return;
    }
    if cur.is_empty() {
        if remaining == 0 {
            out.push(Vec::new());
        }
        return;
    }
    for v in (0..=remaining).rev() {
        cur[idx] = v;
        compositions(remaining - v, idx + 1, cur, out);
    }
}

fn is_acyclic(n: usize, arrows: &[(usize, usize)]) -> bool {
    let mut indeg = vec![0usize; n];
    for &(_, t) in arrows {
        indeg[t] += 1;
    }
    let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = ready.pop() {
        seen += 1;
        for &(s, t) in arrows {
            if s == v {
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    ready.push(t);
                }
            }
        }
    }
    seen == n
}

/// Dynkin type of the underlying graph when every component is ADE, with
/// the largest highest-root coefficient over all components.
///
/// Disconnected quivers report the type of their largest component.
fn dynkin_components(n: usize, arrows: &[(usize, usize)]) -> Option<(DynkinType, usize)> {
    let mut adj = vec![Vec::new(); n];
    for &(s, t) in arrows {
        if s == t || adj[s].contains(&t) {
            return None;
        }
        adj[s].push(t);
        adj[t].push(s);
    }
    let mut comp = vec![usize::MAX; n];
    let mut best: Option<DynkinType> = None;
    let mut best_size = 0;
    let mut bound = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut members = vec![start];
        comp[start] = start;
        let mut i = 0;
        while i < members.len() {
            let v = members[i];
            for &w in &adj[v] {
                if comp[w] == usize::MAX {
                    comp[w] = start;
                    members.push(w);
                }
            }
            i += 1;
        }
        let edges: usize = members.iter().map(|&v| adj[v].len()).sum::<usize>() / 2;
        if edges + 1 != members.len() {
            return None;
        }
        let ty = tree_type(&members, &adj)?;
        bound = bound.max(ty.max_root_coefficient());
        if members.len() > best_size {
            best_size = members.len();
            best = Some(ty);
        }
    }
    if n == 0 {
        return None;
    }
    best.map(|ty| (ty, bound))
}

fn tree_type(members: &[usize], adj: &[Vec<usize>]) -> Option<DynkinType> {
    let k = members.len();
    let branches: Vec<usize> = members.iter().copied().filter(|&v| adj[v].len() >= 3).collect();
    match branches.as_slice() {
        [] => Some(DynkinType::A(k)),
        [center] => {
            if adj[*center].len() != 3 {
                return None;
            }
            let mut arms: Vec<usize> = adj[*center].iter().map(|&w| arm_length(*center, w, adj)).collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Some(DynkinType::D(k)),
                [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => Some(DynkinType::E(k)),
                _ => None,
            }
        }
        _ => None,
    }
}

fn arm_length(from: usize, mut at: usize, adj: &[Vec<usize>]) -> usize {
    let mut prev = from;
    let mut len = 1;
    loop {
        let next: Vec<usize> = adj[at].iter().copied().filter(|&w| w != prev).collect();
        match next.as_slice() {
            [w] => {
                prev = at;
                at = *w;
                len += 1;
            }
            _ => return len,
        }
    }
}

/// Dimension vector: the class of a representation in `K_0 = Z^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DimVector(pub Vec<usize>);

impl DimVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &DimVector) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_sub(&self, other: &DimVector) -> Option<DimVector> {
        if !other.le(self) {
            return None;
        }
        Some(DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    /// Every `d' <= self` componentwise, lexicographic.
    pub fn sub_vectors(&self) -> Vec<DimVector> {
        let mut out = vec![Vec::new()];
        for &bound in &self.0 {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<usize>| {
                    (0..=bound).map(move |v| {
                        let mut p = prefix.clone();
                        p.push(v);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(DimVector).collect()
    }
}

impl Index<usize> for DimVector {
    type Output = usize;

    fn index(&self, i: usize) -> &usize {
        &self.0[i]
    }
}

impl Add for &DimVector {
    type Output = DimVector;

    fn add(self, other: &DimVector) -> DimVector {
        assert_eq!(self.len(), other.len(), "dimension vector lengths");
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}
