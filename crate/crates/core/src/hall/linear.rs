use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::exactmath::{format_rational, Rational};
use crate::quiver::ClassId;

/// Finite rational linear combination of basis keys with no stored zeros.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Rational>,
}

/// Element of the Hall algebra: combination of isomorphism classes.
pub type HallVector = LinComb<ClassId>;
/// Element of `H ⊗ H`.
pub type HallTensor = LinComb<(ClassId, ClassId)>;
/// Element of `H ⊗ H ⊗ H`.
pub type HallTriple = LinComb<(ClassId, ClassId, ClassId)>;

impl<K: Ord + Clone> LinComb<K> {
    pub fn new() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, Rational::from_integer(1.into()))
    }

    pub fn term(key: K, coeff: Rational) -> Self {
        let mut out = Self::new();
        out.add_term(key, coeff);
        out
    }

    pub fn add_term(&mut self, key: K, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, scale: &Rational) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * scale);
        }
    }

    pub fn scaled(&self, scale: &Rational) -> Self {
        let mut out = Self::new();
        out.add_scaled(self, scale);
        out
    }

    pub fn coeff(&self, key: &K) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// `self - other`.
    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::from_integer((-1).into()));
        out
    }

    pub fn map_keys<L: Ord + Clone>(&self, f: impl Fn(&K) -> L) -> LinComb<L> {
        let mut out = LinComb::new();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }
}

impl<K: Ord + Clone> std::ops::Add for &LinComb<K> {
    type Output = LinComb<K>;

    fn add(self, other: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::from_integer(1.into()));
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, Rational)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Rational)>>(iter: I) -> Self {
        let mut out = LinComb::new();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

/// Renders one basis key in `[..]` brackets.
pub trait KeyDisplay {
    fn key_string(&self) -> String;
}

impl KeyDisplay for ClassId {
    fn key_string(&self) -> String {
        format!("[{self}]")
    }
}

impl KeyDisplay for (ClassId, ClassId) {
    fn key_string(&self) -> String {
        format!("[{}]⊗[{}]", self.0, self.1)
    }
}

impl KeyDisplay for (ClassId, ClassId, ClassId) {
    fn key_string(&self) -> String {
        format!("[{}]⊗[{}]⊗[{}]", self.0, self.1, self.2)
    }
}

impl<K: Ord + KeyDisplay> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| format!("{} {}", format_rational(c), k.key_string()))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<K: Ord + KeyDisplay> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::quiver::DimVector;

    fn id(d: Vec<usize>, i: usize) -> ClassId {
        ClassId {
            dim: DimVector(d),
            index: i,
        }
    }

    #[test]
    fn zeros_are_never_stored() {
        let mut v = HallVector::basis(id(vec![1, 0], 0));
        v.add_term(id(vec![1, 0], 0), rat(-1, 1));
        assert!(v.is_zero());
        v.add_term(id(vec![0, 1], 0), rat(0, 1));
        assert_eq!(v.len(), 0);
    }

    #[test]
    fn display_is_exact() {
        let v = HallVector::term(id(vec![1, 1], 1), rat(2, 4));
        assert_eq!(v.to_string(), "1/2 [(1,1)#1]");
        assert_eq!(HallVector::new().to_string(), "0");
    }
}
