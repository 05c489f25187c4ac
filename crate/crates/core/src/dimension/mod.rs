//! Differential dimension polynomials.
//!
//! `Ω(ℓ)`, the Krull dimension of the order-`ℓ` truncation of `F{U}/I(S)`,
//! only depends on the leaders of `S`: it equals `m·C(ℓ+n,n)` minus the number
//! of derivatives of leaders with order at most `ℓ`. This module computes the
//! polynomial `ω` that agrees with `Ω` for large `ℓ` by two independent routes
//! and keeps the direct count as an oracle.

mod janet;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::chains::DiffChain;
use crate::diffpoly::MultiIndex;
use crate::error::{Error, Result};
use crate::numpoly::{binomial, NumericalPolynomial};

pub use janet::{janet_complete, multiplicative_sets, JanetCone};

/// Default bound on generators per indeterminate for inclusion–exclusion.
pub const DEFAULT_SUBSET_LIMIT: usize = 20;

/// Leaders of a chain as monomial generators, one antichain per indeterminate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeaderSpec {
    n: usize,
    generators: Vec<Vec<MultiIndex>>,
}

impl LeaderSpec {
    /// Builds a spec over `n` derivations with one generator list per
    /// indeterminate, discarding duplicates and dominated generators.
    pub fn new(n: usize, generators: Vec<Vec<MultiIndex>>) -> Self {
        let generators = generators
            .into_iter()
            .map(|gens| {
                for g in &gens {
                    assert_eq!(g.len(), n, "generator {g} does not have length {n}");
                }
                minimalize(gens)
            })
            .collect();
        LeaderSpec { n, generators }
    }

    /// No generators at all: the zero ideal.
    pub fn empty(n: usize, m: usize) -> Self {
        LeaderSpec {
            n,
            generators: vec![Vec::new(); m],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Vec<MultiIndex>] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.iter().map(Vec::len).sum()
    }

    /// True if `mu` is a derivative of some generator of indeterminate `j`.
    pub fn covers(&self, j: usize, mu: &MultiIndex) -> bool {
        self.generators[j].iter().any(|g| g.divides(mu))
    }

    /// The spec with one more generator for indeterminate `j`.
    pub fn with_generator(&self, j: usize, g: MultiIndex) -> LeaderSpec {
        let mut generators = self.generators.clone();
        generators[j].push(g);
        LeaderSpec::new(self.n, generators)
    }

    /// Image under permuting derivation axes (`axis k → axis_perm[k]`) and
    /// indeterminates (`j → indet_perm[j]`).
    pub fn permuted(&self, axis_perm: &[usize], indet_perm: &[usize]) -> LeaderSpec {
        let mut generators = vec![Vec::new(); self.m()];
        for (j, gens) in self.generators.iter().enumerate() {
            generators[indet_perm[j]] = gens.iter().map(|g| g.permuted(axis_perm)).collect();
        }
        LeaderSpec::new(self.n, generators)
    }
}

fn minimalize(mut gens: Vec<MultiIndex>) -> Vec<MultiIndex> {
    gens.sort();
    gens.dedup();
    let keep: Vec<bool> = gens
        .iter()
        .enumerate()
        .map(|(a, g)| {
            !gens
                .iter()
                .enumerate()
                .any(|(b, h)| a != b && h.divides(g))
        })
        .collect();
    gens.into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect()
}

/// Extracts `ld(S)` grouped by indeterminate.
pub fn normalize_leaders(chain: &DiffChain) -> Result<LeaderSpec> {
    chain.ensure_valid()?;
    let mut generators = vec![Vec::new(); chain.ring().m()];
    for x in chain.leaders()? {
        generators[x.indeterminate].push(x.index);
    }
    let raw = generators.iter().map(Vec::len).sum::<usize>();
    let spec = LeaderSpec::new(chain.ring().n(), generators);
    assert_eq!(
        spec.generator_count(),
        raw,
        "leaders of a triangular chain form an antichain"
    );
    Ok(spec)
}

/// Number of derivatives of leaders with order at most `max_order`,
/// by enumerating every multi-index of that order.
pub fn count_derivatives(spec: &LeaderSpec, max_order: u32) -> u128 {
    let points = MultiIndex::all_up_to(spec.n, max_order);
    (0..spec.m())
        .map(|j| points.iter().filter(|mu| spec.covers(j, mu)).count() as u128)
        .sum()
}

/// `Ω(ℓ) = m·C(ℓ+n,n) − #{derivatives of leaders of order ≤ ℓ}`.
pub fn krull_oracle(spec: &LeaderSpec, max_order: u32) -> i128 {
    spec.m() as i128 * binomial(max_order as i128 + spec.n as i128, spec.n)
        - count_derivatives(spec, max_order) as i128
}

/// Which computation produced an [`OmegaResult`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OmegaMethod {
    InclusionExclusion,
    Janet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaResult {
    pub omega: NumericalPolynomial,
    /// `Ω(ℓ) = ω(ℓ)` for every `ℓ` at or above this bound.
    pub stabilization_bound: u32,
    pub method: OmegaMethod,
    /// Cones of the Janet decomposition; empty for inclusion–exclusion.
    pub janet_cones: Vec<JanetCone>,
    m: usize,
}

impl OmegaResult {
    /// Degree `d_I`, `-1` for `ω = 0`.
    pub fn degree(&self) -> isize {
        self.omega.degree()
    }

    /// Coefficients `a_0..a_n` in the basis `C(ℓ+i, i)`.
    pub fn coefficients(&self) -> &[i64] {
        self.omega.coeffs()
    }

    /// `a_n`, the differential dimension of `F{U}/I`.
    pub fn differential_dimension(&self) -> i64 {
        self.omega.coeff(self.omega.n_max())
    }

    pub fn m(&self) -> usize {
        self.m
    }
}

impl Serialize for OmegaResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let standard: Vec<String> = self
            .omega
            .to_standard_basis()
            .iter()
            .map(ToString::to_string)
            .collect();
        let mut s = serializer.serialize_struct("OmegaResult", 6)?;
        s.serialize_field("binomial_coeffs", self.omega.coeffs())?;
        s.serialize_field("standard_coeffs", &standard)?;
        s.serialize_field("degree", &self.degree())?;
        s.serialize_field("differential_dimension", &self.differential_dimension())?;
        s.serialize_field("stabilization_bound", &self.stabilization_bound)?;
        s.serialize_field("janet_cones", &self.janet_cones)?;
        s.end()
    }
}

fn full_space(spec: &LeaderSpec) -> NumericalPolynomial {
    let mut coeffs = vec![0; spec.n + 1];
    coeffs[spec.n] = spec.m() as i64;
    NumericalPolynomial::new(coeffs)
}

/// `ω` by inclusion–exclusion over the cones `g + ℕ^n` of every generator.
///
/// The points of `∩_{g∈T} (g + ℕ^n)` with order `≤ ℓ` number
/// `C(ℓ − |join T| + n, n)` once `ℓ ≥ |join T|`, so the result is exact from
/// the largest join order on.
pub fn omega_incl_excl(spec: &LeaderSpec, subset_limit: usize) -> Result<OmegaResult> {
    let n = spec.n;
    let mut omega = full_space(spec);
    let mut bound = 0;
    for (j, gens) in spec.generators.iter().enumerate() {
        if gens.len() > subset_limit {
            return Err(Error::SubsetBlowup {
                indeterminate: j,
                generators: gens.len(),
                limit: subset_limit,
            });
        }
        for mask in 1u64..(1u64 << gens.len()) {
            let join = gens
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, g)| g.clone())
                .reduce(|a, b| a.join(&b))
                .expect("mask is nonempty");
            let order = join.order();
            bound = bound.max(order);
            let term = NumericalPolynomial::shifted_binomial(order as i64, n, n);
            // |T| odd: the term counts positively in the union, so subtract it.
            omega = if mask.count_ones() % 2 == 1 {
                &omega - &term
            } else {
                &omega + &term
            };
        }
    }
    Ok(OmegaResult {
        omega,
        stabilization_bound: bound,
        method: OmegaMethod::InclusionExclusion,
        janet_cones: Vec::new(),
        m: spec.m(),
    })
}

/// `ω(ℓ) = m·C(n+ℓ, n) − Σ_cones C(ζ + ℓ − |g|, ζ)` over a Janet
/// decomposition of every indeterminate's cone union, where `g` is the cone
/// generator and `ζ` its number of multiplicative derivations.
pub fn omega_janet(spec: &LeaderSpec) -> OmegaResult {
    let n = spec.n;
    let mut omega = full_space(spec);
    let mut bound = 0;
    let mut cones = Vec::new();
    for (j, gens) in spec.generators.iter().enumerate() {
        if gens.is_empty() {
            continue;
        }
        for cone in janet_complete(gens, n, j) {
            let order = cone.generator.order();
            bound = bound.max(order);
            let zeta = cone.multiplicative.len();
            omega = &omega - &NumericalPolynomial::shifted_binomial(order as i64, zeta, n);
            cones.push(cone);
        }
    }
    OmegaResult {
        omega,
        stabilization_bound: bound,
        method: OmegaMethod::Janet,
        janet_cones: cones,
        m: spec.m(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OmegaOptions {
    pub subset_limit: usize,
}

impl Default for OmegaOptions {
    fn default() -> Self {
        OmegaOptions {
            subset_limit: DEFAULT_SUBSET_LIMIT,
        }
    }
}

/// `ω` of the characterizable ideal `I(S)`.
pub fn omega(chain: &DiffChain) -> Result<OmegaResult> {
    omega_with(chain, OmegaOptions::default())
}

pub fn omega_with(chain: &DiffChain, options: OmegaOptions) -> Result<OmegaResult> {
    let spec = normalize_leaders(chain)?;
    omega_of_spec(&spec, options)
}

/// Runs the Janet route and, when every generator list fits the subset
/// limit, cross-checks it against inclusion–exclusion.
pub fn omega_of_spec(spec: &LeaderSpec, options: OmegaOptions) -> Result<OmegaResult> {
    let janet = omega_janet(spec);
    if spec.generators.iter().all(|g| g.len() <= options.subset_limit) {
        let ie = omega_incl_excl(spec, options.subset_limit)?;
        if ie.omega != janet.omega {
            return Err(Error::InternalDisagreement {
                janet: janet.omega.binomial_form(),
                incl_excl: ie.omega.binomial_form(),
            });
        }
    }
    Ok(janet)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffpoly::{Derivative, DiffPoly, Ranking, RingSpec};

    fn mi(e: &[u32]) -> MultiIndex {
        MultiIndex::new(e.to_vec())
    }

    fn spec(n: usize, gens: &[&[&[u32]]]) -> LeaderSpec {
        LeaderSpec::new(
            n,
            gens.iter().map(|g| g.iter().map(|e| mi(e)).collect()).collect(),
        )
    }

    fn v(j: usize, mu: &[u32]) -> DiffPoly {
        DiffPoly::var(Derivative::new(j, mi(mu)))
    }

    fn chain(n: usize, m: usize, elements: Vec<DiffPoly>) -> DiffChain {
        DiffChain::new(RingSpec::generic(n, m), Ranking::orderly(m), elements).unwrap()
    }

    fn burgers() -> DiffChain {
        let b = &(&v(0, &[0, 2]) - &v(0, &[1, 0]))
            - &(&(&DiffPoly::integer(2) * &v(0, &[0, 1])) * &v(0, &[0, 0]));
        chain(2, 1, vec![b])
    }

    fn np(c: &[i64]) -> NumericalPolynomial {
        NumericalPolynomial::new(c.to_vec())
    }

    #[test]
    fn normalize_examples() {
        let nonprime = chain(
            1,
            2,
            vec![
                &v(0, &[1]).pow(2) - &v(1, &[0]),
                &v(1, &[1]).pow(2) - &v(1, &[0]),
            ],
        );
        assert_eq!(normalize_leaders(&nonprime).unwrap(), spec(1, &[&[&[1]], &[&[1]]]));

        let s2 = chain(2, 1, vec![v(0, &[2, 0]), v(0, &[1, 1])]);
        assert_eq!(
            normalize_leaders(&s2).unwrap(),
            spec(2, &[&[&[2, 0], &[1, 1]]])
        );
        assert_eq!(normalize_leaders(&burgers()).unwrap(), spec(2, &[&[&[0, 2]]]));
    }

    #[test]
    fn normalize_rejects_invalid_chain() {
        let bad = chain(1, 1, vec![v(0, &[0]), v(0, &[1])]);
        assert!(matches!(normalize_leaders(&bad), Err(Error::InvalidChain(_))));
    }

    #[test]
    fn minimalize_drops_dominated() {
        let s = spec(2, &[&[&[1, 1], &[1, 0], &[1, 0], &[3, 0]]]);
        assert_eq!(s.generators()[0], vec![mi(&[1, 0])]);
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_derivatives(&spec(2, &[&[&[1, 0]]]), 3), 6);
        assert_eq!(count_derivatives(&LeaderSpec::empty(2, 3), 7), 0);
        assert_eq!(count_derivatives(&spec(2, &[&[&[0, 0]]]), 2), 6);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(krull_oracle(&spec(2, &[&[&[1, 0]]]), 3), 4);
        assert_eq!(krull_oracle(&LeaderSpec::empty(1, 2), 4), 10);
        assert_eq!(krull_oracle(&spec(2, &[&[&[0, 2]]]), 4), 9);
    }

    #[test]
    fn incl_excl_examples() {
        let r = omega_incl_excl(&spec(2, &[&[&[1, 0]]]), 20).unwrap();
        assert_eq!(r.omega, np(&[0, 1, 0]));
        assert_eq!(r.stabilization_bound, 1);

        let r = omega_incl_excl(&spec(2, &[&[&[2, 0], &[1, 1]]]), 20).unwrap();
        assert_eq!(r.omega, np(&[1, 1, 0]));
        assert_eq!(r.stabilization_bound, 3);

        let r = omega_incl_excl(&spec(1, &[&[&[1]], &[&[1]]]), 20).unwrap();
        assert_eq!(r.omega, np(&[2, 0]));
    }

    #[test]
    fn incl_excl_subset_limit() {
        let s = spec(2, &[&[&[2, 0], &[1, 1], &[0, 2]]]);
        assert_eq!(
            omega_incl_excl(&s, 2),
            Err(Error::SubsetBlowup {
                indeterminate: 0,
                generators: 3,
                limit: 2
            })
        );
        // omega_of_spec falls back to Janet alone.
        let r = omega_of_spec(&s, OmegaOptions { subset_limit: 2 }).unwrap();
        assert_eq!(r.omega, np(&[3, 0, 0]));
    }

    #[test]
    fn janet_examples() {
        let r = omega_janet(&spec(2, &[&[&[0, 2]]]));
        assert_eq!(r.omega, np(&[-1, 2, 0]));
        assert_eq!(r.stabilization_bound, 2);

        let r = omega_janet(&spec(2, &[&[&[2, 0], &[1, 1]]]));
        assert_eq!(r.omega, np(&[1, 1, 0]));

        let r = omega_janet(&LeaderSpec::empty(3, 1));
        assert_eq!(r.omega, np(&[0, 0, 0, 1]));
        assert_eq!(r.stabilization_bound, 0);
    }

    #[test]
    fn omega_of_chains() {
        let r = omega(&burgers()).unwrap();
        assert_eq!(r.omega, np(&[-1, 2, 0]));
        assert_eq!(r.degree(), 1);
        assert_eq!(r.coefficients()[1], 2);
        assert_eq!(r.differential_dimension(), 0);

        let idem = chain(1, 1, vec![&v(0, &[0]).pow(2) - &v(0, &[0])]);
        assert!(omega(&idem).unwrap().omega.is_zero());

        let nonprime = chain(
            1,
            2,
            vec![
                &v(0, &[1]).pow(2) - &v(1, &[0]),
                &v(1, &[1]).pow(2) - &v(1, &[0]),
            ],
        );
        let r = omega(&nonprime).unwrap();
        assert_eq!(r.omega, np(&[2, 0]));
        assert_eq!(r.differential_dimension(), 0);
    }

    #[test]
    fn json_fields() {
        let r = omega(&burgers()).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["binomial_coeffs"], serde_json::json!([-1, 2, 0]));
        assert_eq!(v["standard_coeffs"], serde_json::json!(["1", "2", "0"]));
        assert_eq!(v["degree"], 1);
        assert_eq!(v["differential_dimension"], 0);
        assert_eq!(v["stabilization_bound"], 2);
        assert_eq!(
            v["janet_cones"],
            serde_json::json!([{"generator": [0, 2], "indeterminate": 0, "multiplicative": [0, 1]}])
        );
    }
}
