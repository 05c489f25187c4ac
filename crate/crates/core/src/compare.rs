//! Deciding equality of characterizable ideals `I(S) ⊆ I(S')`.
//!
//! Throughout, the first chain `S` describes the smaller ideal `I` and the
//! second chain `S'` the larger ideal `J`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::chains::{membership, DiffChain};
use crate::diffpoly::Derivative;
use crate::dimension::{omega_with, OmegaOptions};
use crate::error::{Error, Result};
use crate::numpoly::NumericalPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    Equal,
    ProperlyContained,
    #[serde(rename = "OmegaDistinct-ProperlyContained")]
    OmegaDistinctProperlyContained,
    InputContradiction,
    ContainmentUnknown,
}

impl Relation {
    /// 0 for equality, 1 for proper containment, 2 otherwise.
    pub fn exit_code(self) -> i32 {
        match self {
            Relation::Equal => 0,
            Relation::ProperlyContained | Relation::OmegaDistinctProperlyContained => 1,
            Relation::InputContradiction | Relation::ContainmentUnknown => 2,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Equal => "Equal",
            Relation::ProperlyContained => "ProperlyContained",
            Relation::OmegaDistinctProperlyContained => "OmegaDistinct-ProperlyContained",
            Relation::InputContradiction => "InputContradiction",
            Relation::ContainmentUnknown => "ContainmentUnknown",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Containment {
    /// Every element of `S` reduces to zero modulo `S'`.
    Established,
    /// No reduction witness, but the caller asserted `I ⊆ J`.
    Asserted,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeaderDegrees {
    pub leader: String,
    /// `deg_x(S_x)`, absent if `x` is not a leader of `S`.
    pub smaller: Option<u32>,
    /// `deg_x(S'_x)`, absent if `x` is not a leader of `S'`.
    pub larger: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompareVerdict {
    pub relation: Relation,
    pub containment: Containment,
    /// The verdict if `I ⊆ J` were assumed; set when containment is unknown.
    pub assumed_relation: Option<Relation>,
    #[serde(rename = "omega_I")]
    pub omega_smaller: NumericalPolynomial,
    #[serde(rename = "omega_J")]
    pub omega_larger: NumericalPolynomial,
    pub leader_report: Vec<LeaderDegrees>,
    pub degree_products: (u128, u128),
    pub messages: Vec<String>,
}

impl CompareVerdict {
    pub fn exit_code(&self) -> i32 {
        self.relation.exit_code()
    }
}

/// Sufficient test for `I(S) ⊆ I(S')`: every element of `S` lies in `I(S')`.
pub fn containment_check(smaller: &DiffChain, larger: &DiffChain) -> Result<Containment> {
    smaller.ensure_valid()?;
    larger.ensure_valid()?;
    for p in smaller.elements() {
        if !membership(p, larger)? {
            return Ok(Containment::Unknown);
        }
    }
    Ok(Containment::Established)
}

/// `Π_{x ∈ ld(S)} deg_x(S_x)`.
pub fn degree_product(chain: &DiffChain) -> Result<u128> {
    chain.ensure_valid()?;
    Ok(chain
        .leader_degrees()?
        .into_iter()
        .map(|(_, d)| u128::from(d))
        .product())
}

pub fn compare_ideals(
    smaller: &DiffChain,
    larger: &DiffChain,
    containment_asserted: bool,
) -> Result<CompareVerdict> {
    compare_ideals_with(smaller, larger, containment_asserted, OmegaOptions::default())
}

pub fn compare_ideals_with(
    smaller: &DiffChain,
    larger: &DiffChain,
    containment_asserted: bool,
    options: OmegaOptions,
) -> Result<CompareVerdict> {
    if smaller.ranking() != larger.ranking() {
        return Err(Error::RankingMismatch);
    }
    if smaller.ring() != larger.ring() {
        return Err(Error::InvalidRing("chains live in different rings".into()));
    }
    let omega_i = omega_with(smaller, options)?.omega;
    let omega_j = omega_with(larger, options)?.omega;

    let containment = match containment_check(smaller, larger)? {
        Containment::Established => Containment::Established,
        _ if containment_asserted => Containment::Asserted,
        _ => Containment::Unknown,
    };

    let degrees_i: BTreeMap<Derivative, u32> = smaller.leader_degrees()?.into_iter().collect();
    let degrees_j: BTreeMap<Derivative, u32> = larger.leader_degrees()?.into_iter().collect();
    let mut leaders: Vec<Derivative> = degrees_i.keys().chain(degrees_j.keys()).cloned().collect();
    leaders.sort_by(|a, b| smaller.ranking().cmp(a, b));
    leaders.dedup();
    let leader_report = leaders
        .iter()
        .map(|x| LeaderDegrees {
            leader: smaller.ring().derivative_name(x),
            smaller: degrees_i.get(x).copied(),
            larger: degrees_j.get(x).copied(),
        })
        .collect();
    let degree_products = (
        degrees_i.values().map(|&d| u128::from(d)).product(),
        degrees_j.values().map(|&d| u128::from(d)).product(),
    );

    let mut messages = Vec::new();
    let verdict = relation_under_containment(&omega_i, &omega_j, &degrees_i, &degrees_j, &mut messages);
    if containment == Containment::Established && verdict == Relation::InputContradiction {
        messages.push(
            "containment was witnessed by reduction yet contradicts the dimension polynomial; \
             an initial or separant is probably a zero divisor"
                .into(),
        );
    }
    let (relation, assumed_relation) = match containment {
        Containment::Unknown => {
            messages.push("containment I ⊆ J neither witnessed nor asserted".into());
            (Relation::ContainmentUnknown, Some(verdict))
        }
        _ => (verdict, None),
    };
    Ok(CompareVerdict {
        relation,
        containment,
        assumed_relation,
        omega_smaller: omega_i,
        omega_larger: omega_j,
        leader_report,
        degree_products,
        messages,
    })
}

/// The verdict for `I ⊆ J` given both polynomials and leader degrees.
///
/// Containment forces `ω_J ≤ ω_I`. With equal polynomials the leader sets
/// coincide and each `S_x ∈ J` forces `deg_x(S'_x) ≤ deg_x(S_x)`; equality of
/// the ideals is then equality of all these degrees.
fn relation_under_containment(
    omega_i: &NumericalPolynomial,
    omega_j: &NumericalPolynomial,
    degrees_i: &BTreeMap<Derivative, u32>,
    degrees_j: &BTreeMap<Derivative, u32>,
    messages: &mut Vec<String>,
) -> Relation {
    match omega_j.cmp(omega_i) {
        Ordering::Greater => {
            messages.push(format!(
                "ω_J = {omega_j} exceeds ω_I = {omega_i}, impossible for I ⊆ J"
            ));
            return Relation::InputContradiction;
        }
        Ordering::Less => return Relation::OmegaDistinctProperlyContained,
        Ordering::Equal => {}
    }
    if degrees_i.keys().ne(degrees_j.keys()) {
        messages.push("equal ω but different leader sets, impossible for I ⊆ J".into());
        return Relation::InputContradiction;
    }
    let mut all_equal = true;
    for (x, &di) in degrees_i {
        let dj = degrees_j[x];
        if di < dj {
            messages.push(format!(
                "leader {x}: degree {di} in the smaller chain is below degree {dj} in the larger, \
                 impossible for I ⊆ J"
            ));
            return Relation::InputContradiction;
        }
        all_equal &= di == dj;
    }
    if all_equal {
        Relation::Equal
    } else {
        Relation::ProperlyContained
    }
}
