//! Janet division and involutive completion of monomial sets.

use serde::Serialize;

use crate::diffpoly::MultiIndex;

/// The cone `generator + Σ_{i ∈ multiplicative} ℕ·e_i` of one indeterminate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JanetCone {
    pub generator: MultiIndex,
    pub indeterminate: usize,
    /// 0-based derivation indices, increasing.
    pub multiplicative: Vec<usize>,
}

impl JanetCone {
    pub fn contains(&self, mu: &MultiIndex) -> bool {
        in_cone(mu, &self.generator, &self.multiplicative)
    }

    /// Number of lattice points of the cone with order at most `max_order`.
    pub fn count_up_to(&self, max_order: u32) -> u128 {
        let g = self.generator.order();
        if max_order < g {
            return 0;
        }
        let k = self.multiplicative.len();
        crate::numpoly::binomial((max_order - g) as i128 + k as i128, k) as u128
    }
}

fn in_cone(mu: &MultiIndex, generator: &MultiIndex, multiplicative: &[usize]) -> bool {
    generator
        .exponents()
        .iter()
        .zip(mu.exponents())
        .enumerate()
        .all(|(i, (g, x))| {
            if multiplicative.contains(&i) {
                x >= g
            } else {
                x == g
            }
        })
}

/// Janet-multiplicative derivations of every element of `set`.
///
/// Derivation `i` is multiplicative for `g` iff `g` has the largest `i`-th
/// exponent among the elements that agree with `g` in exponents `0..i`.
pub fn multiplicative_sets(set: &[MultiIndex]) -> Vec<Vec<usize>> {
    set.iter()
        .map(|g| {
            let ge = g.exponents();
            (0..ge.len())
                .filter(|&i| {
                    set.iter()
                        .filter(|h| h.exponents()[..i] == ge[..i])
                        .all(|h| h.exponents()[i] <= ge[i])
                })
                .collect()
        })
        .collect()
}

/// Completes `generators` to a Janet-complete set and returns its cones.
///
/// Repeatedly adds the lowest-order non-multiplicative prolongation that no
/// current cone contains. The resulting cones are pairwise disjoint and their
/// union is the union of the ordinary cones `g + ℕ^n`.
pub fn janet_complete(generators: &[MultiIndex], n: usize, indeterminate: usize) -> Vec<JanetCone> {
    let mut set: Vec<MultiIndex> = Vec::new();
    for g in generators {
        assert_eq!(g.len(), n, "generator length differs from n");
        if !set.contains(g) {
            set.push(g.clone());
        }
    }
    loop {
        let mult = multiplicative_sets(&set);
        let missing = set
            .iter()
            .zip(&mult)
            .flat_map(|(g, m)| (0..n).filter(|i| !m.contains(i)).map(move |i| g.plus_unit(i)))
            .filter(|p| !set.iter().zip(&mult).any(|(h, mh)| in_cone(p, h, mh)))
            .min_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.cmp(b)));
        match missing {
            Some(p) => set.push(p),
            None => {
                return set
                    .into_iter()
                    .zip(mult)
                    .map(|(generator, multiplicative)| JanetCone {
                        generator,
                        indeterminate,
                        multiplicative,
                    })
                    .collect();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(e: &[u32]) -> MultiIndex {
        MultiIndex::new(e.to_vec())
    }

    #[test]
    fn two_generator_example() {
        let cones = janet_complete(&[mi(&[2, 0]), mi(&[1, 1])], 2, 0);
        assert_eq!(
            cones,
            vec![
                JanetCone {
                    generator: mi(&[2, 0]),
                    indeterminate: 0,
                    multiplicative: vec![0, 1]
                },
                JanetCone {
                    generator: mi(&[1, 1]),
                    indeterminate: 0,
                    multiplicative: vec![1]
                },
            ]
        );
    }

    #[test]
    fn origin_is_whole_lattice() {
        let cones = janet_complete(&[mi(&[0, 0, 0])], 3, 0);
        assert_eq!(cones.len(), 1);
        assert_eq!(cones[0].multiplicative, vec![0, 1, 2]);
    }

    #[test]
    fn single_derivation_is_complete() {
        let cones = janet_complete(&[mi(&[4])], 1, 2);
        assert_eq!(cones.len(), 1);
        assert_eq!(cones[0].multiplicative, vec![0]);
        assert_eq!(cones[0].indeterminate, 2);
    }

    #[test]
    fn completion_adds_prolongations() {
        // (1,0) and (0,1): (0,1) is non-multiplicative in direction 0 and
        // (1,1) is not covered by the cone of (1,0) with direction 1 removed.
        let cones = janet_complete(&[mi(&[0, 1]), mi(&[1, 0])], 2, 0);
        let gens: Vec<_> = cones.iter().map(|c| c.generator.clone()).collect();
        assert!(gens.contains(&mi(&[1, 1])) || cones.iter().any(|c| c.contains(&mi(&[1, 1]))));
        assert_disjoint_cover(&[mi(&[0, 1]), mi(&[1, 0])], &cones, 6);
    }

    fn assert_disjoint_cover(gens: &[MultiIndex], cones: &[JanetCone], max: u32) {
        let n = gens[0].len();
        for mu in MultiIndex::all_up_to(n, max) {
            let hits = cones.iter().filter(|c| c.contains(&mu)).count();
            let covered = gens.iter().any(|g| g.divides(&mu));
            assert_eq!(hits, usize::from(covered), "point {mu}");
        }
    }

    #[test]
    fn disjoint_cover_three_dims() {
        let gens = [mi(&[2, 0, 1]), mi(&[0, 2, 0]), mi(&[1, 1, 1]), mi(&[0, 0, 3])];
        let cones = janet_complete(&gens, 3, 0);
        assert_disjoint_cover(&gens, &cones, 8);
    }

    #[test]
    fn cone_counts() {
        let cone = JanetCone {
            generator: mi(&[1, 1]),
            indeterminate: 0,
            multiplicative: vec![1],
        };
        assert_eq!(cone.count_up_to(1), 0);
        assert_eq!(cone.count_up_to(2), 1);
        assert_eq!(cone.count_up_to(5), 4);
    }
}
