//! Differential polynomial rings over ℚ with commuting derivations.

mod poly;
mod ranking;

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub use poly::{DiffPoly, Monomial};
pub use ranking::Ranking;

/// Names of the derivations and differential indeterminates of a ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingSpec {
    derivation_names: Vec<String>,
    indeterminate_names: Vec<String>,
}

impl RingSpec {
    pub fn new(derivation_names: Vec<String>, indeterminate_names: Vec<String>) -> Result<Self> {
        if derivation_names.is_empty() {
            return Err(Error::InvalidRing("at least one derivation is required".into()));
        }
        if indeterminate_names.is_empty() {
            return Err(Error::InvalidRing(
                "at least one differential indeterminate is required".into(),
            ));
        }
        let mut seen = HashSet::new();
        for name in derivation_names.iter().chain(&indeterminate_names) {
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidRing(format!("name `{name}` declared twice")));
            }
        }
        Ok(RingSpec {
            derivation_names,
            indeterminate_names,
        })
    }

    /// Ring with derivations `d1..dn` and indeterminates `u1..um`.
    pub fn generic(n: usize, m: usize) -> Self {
        let derivations = (1..=n).map(|i| format!("d{i}")).collect();
        let indeterminates = (1..=m).map(|j| format!("u{j}")).collect();
        RingSpec::new(derivations, indeterminates).expect("generic names are distinct")
    }

    /// Number of derivations.
    pub fn n(&self) -> usize {
        self.derivation_names.len()
    }

    /// Number of differential indeterminates.
    pub fn m(&self) -> usize {
        self.indeterminate_names.len()
    }

    pub fn derivation_names(&self) -> &[String] {
        &self.derivation_names
    }

    pub fn indeterminate_names(&self) -> &[String] {
        &self.indeterminate_names
    }

    pub fn indeterminate_index(&self, name: &str) -> Option<usize> {
        self.indeterminate_names.iter().position(|s| s == name)
    }

    pub fn derivation_index(&self, name: &str) -> Option<usize> {
        self.derivation_names.iter().position(|s| s == name)
    }

    /// Checks that `d` names a derivative of this ring.
    pub fn check(&self, d: &Derivative) -> Result<()> {
        if d.indeterminate >= self.m() {
            return Err(Error::IndeterminateOutOfRange {
                index: d.indeterminate,
                m: self.m(),
            });
        }
        if d.index.len() != self.n() {
            return Err(Error::MultiIndexLength {
                expected: self.n(),
                found: d.index.len(),
            });
        }
        Ok(())
    }

    pub fn derivative_name(&self, d: &Derivative) -> String {
        let name = self
            .indeterminate_names
            .get(d.indeterminate)
            .map_or("?", String::as_str);
        format!("{name}{}", d.index)
    }
}

/// Exponent vector `μ` of `∂^μ = ∂_1^{μ_1}⋯∂_n^{μ_n}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        MultiIndex(exponents)
    }

    pub fn zero(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    /// The unit vector `e_i`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        MultiIndex(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// `|μ| = μ_1 + … + μ_n`.
    pub fn order(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Componentwise `self <= other`, i.e. `∂^other` is a derivative of `∂^self`.
    pub fn divides(&self, other: &MultiIndex) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// `other − self` when `self` divides `other`.
    pub fn quotient(&self, other: &MultiIndex) -> Option<MultiIndex> {
        self.divides(other)
            .then(|| MultiIndex(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
    }

    pub fn plus(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn plus_unit(&self, i: usize) -> MultiIndex {
        let mut e = self.0.clone();
        e[i] += 1;
        MultiIndex(e)
    }

    /// Reorders axes: entry `i` of the result is `self[perm_inverse[i]]`,
    /// i.e. axis `k` of `self` moves to position `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> MultiIndex {
        let mut out = vec![0; self.0.len()];
        for (k, &target) in perm.iter().enumerate() {
            out[target] = self.0[k];
        }
        MultiIndex(out)
    }

    /// All multi-indices of length `n` and order at most `max_order`.
    pub fn all_up_to(n: usize, max_order: u32) -> Vec<MultiIndex> {
        fn rec(prefix: &mut Vec<u32>, n: usize, budget: u32, out: &mut Vec<MultiIndex>) {
            if prefix.len() == n {
                out.push(MultiIndex(prefix.clone()));
                return;
            }
            for e in 0..=budget {
                prefix.push(e);
                rec(prefix, n, budget - e, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::with_capacity(n), n, max_order, &mut out);
        out
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")
    }
}

/// The derivative `u^{(j)}_μ`; `indeterminate` is the 0-based index `j`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Derivative {
    pub indeterminate: usize,
    pub index: MultiIndex,
}

impl Derivative {
    pub fn new(indeterminate: usize, index: MultiIndex) -> Self {
        Derivative {
            indeterminate,
            index,
        }
    }

    pub fn order(&self) -> u32 {
        self.index.order()
    }

    /// `θ` with `other = ∂^θ self`, if `other` is a derivative of `self`.
    pub fn derivation_to(&self, other: &Derivative) -> Option<MultiIndex> {
        if self.indeterminate != other.indeterminate {
            return None;
        }
        self.index.quotient(&other.index)
    }

    pub fn derive(&self, i: usize) -> Derivative {
        Derivative {
            indeterminate: self.indeterminate,
            index: self.index.plus_unit(i),
        }
    }

    pub fn derive_multi(&self, theta: &MultiIndex) -> Derivative {
        Derivative {
            indeterminate: self.indeterminate,
            index: self.index.plus(theta),
        }
    }
}

impl fmt::Display for Derivative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u{}{}", self.indeterminate + 1, self.index)
    }
}
