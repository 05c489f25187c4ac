use std::cmp::Ordering;

use serde::Serialize;

use super::{Derivative, Monomial};
use crate::error::{Error, Result};

/// An orderly ranking on the derivatives of a ring with `m` indeterminates.
///
/// Derivatives are compared by order `|μ|` first. Within one order level the
/// indeterminate position in the tiebreak list decides, then degree
/// reverse-lexicographic comparison of `μ`: the derivative whose multi-index
/// has the smaller exponent at the last differing position ranks higher.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ranking {
    /// Indeterminate indices from lowest to highest.
    tiebreak: Vec<usize>,
    #[serde(skip)]
    position: Vec<usize>,
}

impl Ranking {
    /// Orderly ranking with `u1 < u2 < … < um` as tiebreak.
    pub fn orderly(m: usize) -> Self {
        Ranking::with_tiebreak((0..m).collect()).expect("identity is a permutation")
    }

    /// `tiebreak` lists every indeterminate index once, lowest first.
    pub fn with_tiebreak(tiebreak: Vec<usize>) -> Result<Self> {
        let m = tiebreak.len();
        let mut position = vec![usize::MAX; m];
        for (pos, &j) in tiebreak.iter().enumerate() {
            if j >= m || position[j] != usize::MAX {
                return Err(Error::InvalidRing(format!(
                    "tiebreak {tiebreak:?} is not a permutation of 0..{m}"
                )));
            }
            position[j] = pos;
        }
        Ok(Ranking { tiebreak, position })
    }

    pub fn tiebreak(&self) -> &[usize] {
        &self.tiebreak
    }

    pub fn m(&self) -> usize {
        self.tiebreak.len()
    }

    pub fn cmp(&self, a: &Derivative, b: &Derivative) -> Ordering {
        a.order()
            .cmp(&b.order())
            .then_with(|| self.position[a.indeterminate].cmp(&self.position[b.indeterminate]))
            .then_with(|| {
                let (x, y) = (a.index.exponents(), b.index.exponents());
                x.iter()
                    .zip(y)
                    .rev()
                    .map(|(p, q)| q.cmp(p))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            })
    }

    pub fn max<'a>(&self, a: &'a Derivative, b: &'a Derivative) -> &'a Derivative {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }

    /// Lexicographic monomial order induced by the ranking: factors are
    /// compared from the highest-ranked derivative down, then by exponent.
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let sa = self.sorted_factors(a);
        let sb = self.sorted_factors(b);
        for ((da, ea), (db, eb)) in sa.iter().zip(&sb) {
            let o = self.cmp(da, db).then(ea.cmp(eb));
            if o.is_ne() {
                return o;
            }
        }
        sa.len().cmp(&sb.len())
    }

    /// Factors of a monomial, highest-ranked derivative first.
    pub fn sorted_factors<'a>(&self, mono: &'a Monomial) -> Vec<(&'a Derivative, u32)> {
        let mut v: Vec<_> = mono.factors().collect();
        v.sort_by(|a, b| self.cmp(b.0, a.0));
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffpoly::MultiIndex;

    fn d(j: usize, mu: &[u32]) -> Derivative {
        Derivative::new(j, MultiIndex::new(mu.to_vec()))
    }

    #[test]
    fn orderly_examples() {
        let r = Ranking::orderly(2);
        assert_eq!(r.cmp(&d(0, &[1]), &d(1, &[0])), Ordering::Greater);
        assert_eq!(r.cmp(&d(1, &[3]), &d(1, &[3])), Ordering::Equal);
        assert_eq!(r.cmp(&d(0, &[1, 0]), &d(1, &[1, 0])), Ordering::Less);
    }

    #[test]
    fn revlex_within_level() {
        let r = Ranking::orderly(1);
        assert_eq!(r.cmp(&d(0, &[2, 0]), &d(0, &[1, 1])), Ordering::Greater);
        assert_eq!(r.cmp(&d(0, &[1, 1]), &d(0, &[0, 2])), Ordering::Greater);
    }

    #[test]
    fn tiebreak_reorders_indeterminates() {
        let r = Ranking::with_tiebreak(vec![1, 0]).unwrap();
        assert_eq!(r.cmp(&d(0, &[1, 0]), &d(1, &[1, 0])), Ordering::Greater);
        assert!(Ranking::with_tiebreak(vec![0, 0]).is_err());
        assert!(Ranking::with_tiebreak(vec![0, 2]).is_err());
    }
}
