//! Triangular sets, differential regular chains and Ritt reduction.

use std::collections::HashMap;

use serde::Serialize;

use crate::diffpoly::{Derivative, DiffPoly, Monomial, MultiIndex, Ranking, RingSpec};
use crate::error::{Error, Result};

/// A finite set of differential polynomials over a ring with a fixed ranking.
///
/// Construction only checks that every polynomial lives in the ring;
/// triangularity and coherence are established by [`DiffChain::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffChain {
    ring: RingSpec,
    ranking: Ranking,
    elements: Vec<DiffPoly>,
}

/// Leader data cached for one chain element.
#[derive(Clone, Debug)]
struct ElementInfo {
    leader: Derivative,
    degree: u32,
    initial: DiffPoly,
    separant: DiffPoly,
}

impl DiffChain {
    pub fn new(ring: RingSpec, ranking: Ranking, elements: Vec<DiffPoly>) -> Result<Self> {
        if ranking.m() != ring.m() {
            return Err(Error::InvalidRing(format!(
                "ranking orders {} indeterminates, ring has {}",
                ranking.m(),
                ring.m()
            )));
        }
        for p in &elements {
            for d in p.derivatives() {
                ring.check(&d)?;
            }
        }
        Ok(DiffChain {
            ring,
            ranking,
            elements,
        })
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn ranking(&self) -> &Ranking {
        &self.ranking
    }

    pub fn elements(&self) -> &[DiffPoly] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Leaders of all elements, in element order.
    pub fn leaders(&self) -> Result<Vec<Derivative>> {
        self.elements
            .iter()
            .map(|p| p.leader(&self.ranking))
            .collect()
    }

    /// `(ld(p), deg_{ld(p)} p)` for every element.
    pub fn leader_degrees(&self) -> Result<Vec<(Derivative, u32)>> {
        self.elements
            .iter()
            .map(|p| p.leader_degree(&self.ranking))
            .collect()
    }

    /// The element `S_x` with leader `x`, if any.
    pub fn element_with_leader(&self, x: &Derivative) -> Option<&DiffPoly> {
        self.elements
            .iter()
            .find(|p| p.leader(&self.ranking).ok().as_ref() == Some(x))
    }

    fn infos(&self) -> Result<Vec<ElementInfo>> {
        self.elements
            .iter()
            .map(|p| {
                let (leader, degree) = p.leader_degree(&self.ranking)?;
                Ok(ElementInfo {
                    initial: p.coeff_of_power(&leader, degree),
                    separant: p.partial(&leader),
                    leader,
                    degree,
                })
            })
            .collect()
    }

    /// Reasons the set fails weak triangularity; empty when triangular.
    fn triangularity_violations(&self, infos: &[ElementInfo]) -> Vec<String> {
        let mut out = Vec::new();
        for (a, ia) in infos.iter().enumerate() {
            for (b, ib) in infos.iter().enumerate() {
                if a == b {
                    continue;
                }
                if ia.leader == ib.leader {
                    if a < b {
                        out.push(format!(
                            "elements {a} and {b} share the leader {}",
                            self.ring.derivative_name(&ia.leader)
                        ));
                    }
                } else if ia.leader.derivation_to(&ib.leader).is_some() {
                    out.push(format!(
                        "leader {} of element {b} is a derivative of leader {} of element {a}",
                        self.ring.derivative_name(&ib.leader),
                        self.ring.derivative_name(&ia.leader)
                    ));
                }
            }
        }
        out
    }

    pub fn is_triangular(&self) -> Result<bool> {
        let infos = self.infos()?;
        Ok(self.triangularity_violations(&infos).is_empty())
    }

    /// Checks weak triangularity and coherence.
    ///
    /// Regularity of initials and separants modulo the lower part of the
    /// chain is not decided; the report marks it as assumed.
    pub fn validate(&self) -> Result<ValidationReport> {
        let infos = self.infos()?;
        let violations = self.triangularity_violations(&infos);
        let triangular = violations.is_empty();
        let mut messages = violations;
        let mut delta_checks = Vec::new();
        let coherent = if triangular {
            let mut ok = true;
            for a in 0..infos.len() {
                for b in a + 1..infos.len() {
                    let Some(delta) = delta_from_infos(&self.elements, &infos, a, b) else {
                        continue;
                    };
                    let trace = reduce_with(&delta, self, &infos, false).0;
                    if !trace.remainder.is_zero() {
                        ok = false;
                        messages.push(format!(
                            "Δ-polynomial of elements {a} and {b} reduces to {}",
                            trace.remainder.display(&self.ring, &self.ranking)
                        ));
                    }
                    delta_checks.push(DeltaCheck {
                        pair: (a, b),
                        delta_polynomial: delta.display(&self.ring, &self.ranking).to_string(),
                        reduction: trace.explain(&self.ring, &self.ranking),
                    });
                }
            }
            ok
        } else {
            messages.push("coherence not checked: set is not triangular".into());
            false
        };
        messages.push(
            "regularity of initials and separants modulo the lower chain is assumed, not verified"
                .into(),
        );
        Ok(ValidationReport {
            triangular,
            coherent,
            regularity_of_initials_and_separants: Regularity::UnverifiedAssumed,
            messages,
            delta_checks,
        })
    }

    /// Validates and fails with [`Error::InvalidChain`] unless the chain is
    /// triangular and coherent.
    pub fn ensure_valid(&self) -> Result<ValidationReport> {
        let report = self.validate()?;
        if !report.is_accepted() {
            return Err(Error::InvalidChain(report.messages.join("; ")));
        }
        Ok(report)
    }

    /// The chain with every polynomial rewritten through a ring automorphism
    /// that maps derivatives to derivatives.
    pub fn map_derivatives(
        &self,
        ranking: Ranking,
        f: impl Fn(&Derivative) -> Derivative,
    ) -> Result<DiffChain> {
        let elements = self.elements.iter().map(|p| p.map_derivatives(&f)).collect();
        DiffChain::new(self.ring.clone(), ranking, elements)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Regularity {
    #[serde(rename = "unverified-assumed")]
    UnverifiedAssumed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaCheck {
    pub pair: (usize, usize),
    pub delta_polynomial: String,
    pub reduction: TraceExplanation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub triangular: bool,
    pub coherent: bool,
    pub regularity_of_initials_and_separants: Regularity,
    pub messages: Vec<String>,
    #[serde(skip)]
    pub delta_checks: Vec<DeltaCheck>,
}

impl ValidationReport {
    /// Downstream operations require triangular and coherent chains.
    pub fn is_accepted(&self) -> bool {
        self.triangular && self.coherent
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MultiplierKind {
    Initial,
    Separant,
}

/// One pseudo-division step: the current polynomial was multiplied by
/// `factor^exponent`, the initial or separant of chain element `element`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiplier {
    pub factor: DiffPoly,
    pub exponent: u32,
    pub kind: MultiplierKind,
    pub element: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub remainder: DiffPoly,
    pub multipliers: Vec<Multiplier>,
}

/// `cofactor · ∂^theta S[element]`, one summand of a reduction certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateTerm {
    pub cofactor: DiffPoly,
    pub element: usize,
    pub theta: MultiIndex,
}

impl ReductionTrace {
    /// Expands `Π factor^exponent`.
    pub fn multiplier_product(&self) -> DiffPoly {
        self.multipliers
            .iter()
            .fold(DiffPoly::one(), |acc, m| &acc * &m.factor.pow(m.exponent))
    }

    pub fn explain(&self, ring: &RingSpec, ranking: &Ranking) -> TraceExplanation {
        TraceExplanation {
            remainder: self.remainder.display(ring, ranking).to_string(),
            multipliers: self
                .multipliers
                .iter()
                .map(|m| MultiplierExplanation {
                    factor: m.factor.display(ring, ranking).to_string(),
                    exponent: m.exponent,
                    kind: m.kind,
                    element: m.element,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceExplanation {
    pub remainder: String,
    pub multipliers: Vec<MultiplierExplanation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplierExplanation {
    pub factor: String,
    pub exponent: u32,
    pub kind: MultiplierKind,
    pub element: usize,
}

/// The Δ-polynomial of two polynomials whose leaders lie on the same
/// indeterminate; `None` when they lie on distinct indeterminates.
pub fn delta_polynomial(p: &DiffPoly, q: &DiffPoly, ranking: &Ranking) -> Result<Option<DiffPoly>> {
    let lp = p.leader(ranking)?;
    let lq = q.leader(ranking)?;
    if lp.indeterminate != lq.indeterminate {
        return Ok(None);
    }
    Ok(Some(delta_raw(
        p,
        &p.partial(&lp),
        &lp,
        q,
        &q.partial(&lq),
        &lq,
    )))
}

fn delta_from_infos(elements: &[DiffPoly], infos: &[ElementInfo], a: usize, b: usize) -> Option<DiffPoly> {
    let (ia, ib) = (&infos[a], &infos[b]);
    (ia.leader.indeterminate == ib.leader.indeterminate).then(|| {
        delta_raw(
            &elements[a],
            &ia.separant,
            &ia.leader,
            &elements[b],
            &ib.separant,
            &ib.leader,
        )
    })
}

fn delta_raw(
    p: &DiffPoly,
    sep_p: &DiffPoly,
    lp: &Derivative,
    q: &DiffPoly,
    sep_q: &DiffPoly,
    lq: &Derivative,
) -> DiffPoly {
    let theta = lp.index.join(&lq.index);
    let dp = p.derive_multi(&lp.index.quotient(&theta).expect("join dominates"));
    let dq = q.derive_multi(&lq.index.quotient(&theta).expect("join dominates"));
    &(sep_q * &dp) - &(sep_p * &dq)
}

/// Full Ritt reduction of `p` by a weakly triangular set.
///
/// The highest-ranking reducible derivative is eliminated first. A proper
/// derivative `∂^θ ld(s)` is removed by pseudo-division through `∂^θ s`
/// (multiplier: separant of `s`); an occurrence of `ld(s)` with degree at least
/// `deg(s)` is lowered by pseudo-division through `s` (multiplier: initial).
pub fn full_pseudo_reduce(p: &DiffPoly, chain: &DiffChain) -> Result<ReductionTrace> {
    let infos = chain.infos()?;
    if !chain.triangularity_violations(&infos).is_empty() {
        return Err(Error::NotTriangular(
            chain.triangularity_violations(&infos).join("; "),
        ));
    }
    Ok(reduce_with(p, chain, &infos, false).0)
}

/// Like [`full_pseudo_reduce`], additionally returning cofactors with
/// `Π multipliers · p − remainder = Σ cofactor · ∂^θ S[element]`.
pub fn full_pseudo_reduce_certified(
    p: &DiffPoly,
    chain: &DiffChain,
) -> Result<(ReductionTrace, Vec<CertificateTerm>)> {
    let infos = chain.infos()?;
    if !chain.triangularity_violations(&infos).is_empty() {
        return Err(Error::NotTriangular(
            chain.triangularity_violations(&infos).join("; "),
        ));
    }
    let (trace, cert) = reduce_with(p, chain, &infos, true);
    Ok((trace, cert.expect("certificate was requested")))
}

/// Index and `θ` of the reducer for `v`: the element whose leader has `v` as
/// a derivative, choosing the ranking-minimal leader, then the lowest index.
fn reducer_for(v: &Derivative, infos: &[ElementInfo], ranking: &Ranking) -> Option<(usize, MultiIndex)> {
    infos
        .iter()
        .enumerate()
        .filter_map(|(k, info)| info.leader.derivation_to(v).map(|theta| (k, theta)))
        .min_by(|(a, _), (b, _)| ranking.cmp(&infos[*a].leader, &infos[*b].leader).then(a.cmp(b)))
}

fn reduce_with(
    p: &DiffPoly,
    chain: &DiffChain,
    infos: &[ElementInfo],
    certify: bool,
) -> (ReductionTrace, Option<Vec<CertificateTerm>>) {
    let ranking = &chain.ranking;
    let mut current = p.clone();
    let mut multipliers = Vec::new();
    let mut cert: Vec<CertificateTerm> = Vec::new();
    let mut prolonged: HashMap<(usize, MultiIndex), DiffPoly> = HashMap::new();

    loop {
        let mut vars: Vec<Derivative> = current.derivatives().into_iter().collect();
        vars.sort_by(|a, b| ranking.cmp(b, a));
        let step = vars.iter().find_map(|v| {
            let (k, theta) = reducer_for(v, infos, ranking)?;
            let proper = theta.order() > 0;
            (proper || current.degree_in(v) >= infos[k].degree).then(|| (v.clone(), k, theta))
        });
        let Some((v, k, theta)) = step else {
            break;
        };
        let (divisor, kind) = if theta.order() > 0 {
            let t = prolonged
                .entry((k, theta.clone()))
                .or_insert_with(|| chain.elements[k].derive_multi(&theta))
                .clone();
            (t, MultiplierKind::Separant)
        } else {
            (chain.elements[k].clone(), MultiplierKind::Initial)
        };
        let d = divisor.degree_in(&v);
        let init = divisor.coeff_of_power(&v, d);
        let mut steps = 0;
        while !current.is_zero() && current.degree_in(&v) >= d {
            let deg = current.degree_in(&v);
            let lc = current.coeff_of_power(&v, deg);
            let shift = lc.mul_monomial(&Monomial::var(v.clone(), deg - d));
            current = &(&init * &current) - &(&shift * &divisor);
            if certify {
                for term in &mut cert {
                    term.cofactor = &init * &term.cofactor;
                }
                match cert.iter_mut().find(|t| t.element == k && t.theta == theta) {
                    Some(term) => term.cofactor = &term.cofactor + &shift,
                    None => cert.push(CertificateTerm {
                        cofactor: shift,
                        element: k,
                        theta: theta.clone(),
                    }),
                }
            }
            steps += 1;
        }
        debug_assert!(steps > 0);
        let factor = match kind {
            MultiplierKind::Initial => infos[k].initial.clone(),
            MultiplierKind::Separant => infos[k].separant.clone(),
        };
        debug_assert_eq!(factor, init);
        if factor != DiffPoly::one() {
            multipliers.push(Multiplier {
                factor,
                exponent: steps,
                kind,
                element: k,
            });
        }
    }
    cert.retain(|t| !t.cofactor.is_zero());
    (
        ReductionTrace {
            remainder: current,
            multipliers,
        },
        certify.then_some(cert),
    )
}

/// `p ∈ I(S)`, decided by full reduction to zero. Exact for differential
/// regular chains; the regularity part of that hypothesis is assumed.
pub fn membership(p: &DiffPoly, chain: &DiffChain) -> Result<bool> {
    chain.ensure_valid()?;
    if p.is_zero() {
        return Ok(true);
    }
    Ok(full_pseudo_reduce(p, chain)?.remainder.is_zero())
}

/// One element of the algebraic triangular set `S_{≤ℓ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prolongation {
    pub leader: Derivative,
    pub element: usize,
    pub theta: MultiIndex,
    pub poly: DiffPoly,
}

/// The algebraic triangular set `S_{≤ℓ}`: for each derivative `x` of a leader
/// with order at most `ℓ`, one polynomial `∂^θ p` with leader `x`.
///
/// For each `x` the source `p` is the element with the ranking-minimal leader
/// among those whose leader divides `x`. Output is sorted by leader, lowest
/// first.
pub fn prolong(chain: &DiffChain, max_order: u32) -> Result<Vec<Prolongation>> {
    chain.ensure_valid()?;
    let infos = chain.infos()?;
    let ranking = &chain.ranking;
    let n = chain.ring.n();
    let mut cache: HashMap<(usize, MultiIndex), DiffPoly> = HashMap::new();
    let mut out = Vec::new();
    for j in 0..chain.ring.m() {
        for mu in MultiIndex::all_up_to(n, max_order) {
            let x = Derivative::new(j, mu);
            let Some((k, theta)) = reducer_for(&x, &infos, ranking) else {
                continue;
            };
            let poly = derive_cached(&chain.elements[k], k, &theta, &mut cache);
            debug_assert_eq!(poly.leader(ranking).as_ref(), Ok(&x));
            out.push(Prolongation {
                leader: x,
                element: k,
                theta,
                poly,
            });
        }
    }
    out.sort_by(|a, b| ranking.cmp(&a.leader, &b.leader));
    Ok(out)
}

fn derive_cached(
    p: &DiffPoly,
    k: usize,
    theta: &MultiIndex,
    cache: &mut HashMap<(usize, MultiIndex), DiffPoly>,
) -> DiffPoly {
    if let Some(hit) = cache.get(&(k, theta.clone())) {
        return hit.clone();
    }
    let result = match theta.exponents().iter().position(|&e| e > 0) {
        None => p.clone(),
        Some(i) => {
            let mut lower = theta.exponents().to_vec();
            lower[i] -= 1;
            derive_cached(p, k, &MultiIndex::new(lower), cache).derive_unchecked(i)
        }
    };
    cache.insert((k, theta.clone()), result.clone());
    result
}
