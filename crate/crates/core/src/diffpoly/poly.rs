use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Derivative, MultiIndex, Ranking, RingSpec};
use crate::error::{Error, Result};

/// A power product of derivatives. The empty monomial is `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(BTreeMap<Derivative, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn var(d: Derivative, exp: u32) -> Self {
        let mut m = BTreeMap::new();
        if exp > 0 {
            m.insert(d, exp);
        }
        Monomial(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree_in(&self, d: &Derivative) -> u32 {
        self.0.get(d).copied().unwrap_or(0)
    }

    pub fn factors(&self) -> impl Iterator<Item = (&Derivative, u32)> {
        self.0.iter().map(|(d, &e)| (d, e))
    }

    pub fn total_degree(&self) -> u32 {
        self.0.values().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (d, e) in &other.0 {
            *out.entry(d.clone()).or_insert(0) += e;
        }
        Monomial(out)
    }

    /// Same monomial with `d` raised to `exp` (removed when `exp == 0`).
    fn with_exponent(&self, d: &Derivative, exp: u32) -> Monomial {
        let mut out = self.0.clone();
        if exp == 0 {
            out.remove(d);
        } else {
            out.insert(d.clone(), exp);
        }
        Monomial(out)
    }

    fn map_derivatives(&self, f: impl Fn(&Derivative) -> Derivative) -> Monomial {
        let mut out = BTreeMap::new();
        for (d, e) in &self.0 {
            *out.entry(f(d)).or_insert(0) += e;
        }
        Monomial(out)
    }
}

/// A differential polynomial with rational coefficients.
///
/// Stored as a sparse map from monomials to nonzero coefficients, so two equal
/// polynomials have identical representations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DiffPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl DiffPoly {
    pub fn zero() -> Self {
        DiffPoly::default()
    }

    pub fn one() -> Self {
        DiffPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        DiffPoly::from_term(Monomial::one(), c)
    }

    pub fn integer(c: i64) -> Self {
        DiffPoly::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn var(d: Derivative) -> Self {
        DiffPoly::from_term(Monomial::var(d, 1), BigRational::one())
    }

    pub fn from_term(mono: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        DiffPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut p = DiffPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, mono: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for elements of the coefficient field, including zero.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_term(&self) -> BigRational {
        self.terms
            .get(&Monomial::one())
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn derivatives(&self) -> BTreeSet<Derivative> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().map(|(d, _)| d.clone()))
            .collect()
    }

    pub fn degree_in(&self, d: &Derivative) -> u32 {
        self.terms.keys().map(|m| m.degree_in(d)).max().unwrap_or(0)
    }

    /// Coefficient of `d^k` when `self` is viewed as a polynomial in `d`.
    pub fn coeff_of_power(&self, d: &Derivative, k: u32) -> DiffPoly {
        DiffPoly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.degree_in(d) == k)
                .map(|(m, c)| (m.with_exponent(d, 0), c.clone())),
        )
    }

    /// Formal partial derivative with respect to the variable `d`.
    pub fn partial(&self, d: &Derivative) -> DiffPoly {
        DiffPoly::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let e = m.degree_in(d);
            (e > 0).then(|| {
                (
                    m.with_exponent(d, e - 1),
                    c * BigRational::from_integer(BigInt::from(e)),
                )
            })
        }))
    }

    pub fn scale(&self, c: &BigRational) -> DiffPoly {
        if c.is_zero() {
            return DiffPoly::zero();
        }
        DiffPoly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> DiffPoly {
        DiffPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(mono), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> DiffPoly {
        let mut base = self.clone();
        let mut acc = DiffPoly::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `∂_i p` for a derivation index checked against `ring`.
    pub fn derive(&self, ring: &RingSpec, i: usize) -> Result<DiffPoly> {
        if i >= ring.n() {
            return Err(Error::DerivationOutOfRange {
                index: i,
                n: ring.n(),
            });
        }
        Ok(self.derive_unchecked(i))
    }

    /// `∂_i p` by the Leibniz rule; `i` must be a valid derivation index for
    /// every derivative occurring in `self`.
    pub fn derive_unchecked(&self, i: usize) -> DiffPoly {
        let mut out = DiffPoly::zero();
        for (m, c) in &self.terms {
            for (d, e) in m.factors() {
                let lowered = m.with_exponent(d, e - 1);
                let raised = Monomial::var(d.derive(i), 1);
                out.add_term(
                    lowered.mul(&raised),
                    c * BigRational::from_integer(BigInt::from(e)),
                );
            }
        }
        out
    }

    /// `∂^θ p`.
    pub fn derive_multi(&self, theta: &MultiIndex) -> DiffPoly {
        let mut p = self.clone();
        for (i, &k) in theta.exponents().iter().enumerate() {
            for _ in 0..k {
                p = p.derive_unchecked(i);
            }
        }
        p
    }

    /// Renames derivatives through `f`; used for ring automorphisms.
    pub fn map_derivatives(&self, f: impl Fn(&Derivative) -> Derivative) -> DiffPoly {
        DiffPoly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.map_derivatives(&f), c.clone())),
        )
    }

    pub fn leader(&self, ranking: &Ranking) -> Result<Derivative> {
        self.terms
            .keys()
            .flat_map(Monomial::factors)
            .map(|(d, _)| d)
            .reduce(|a, b| ranking.max(a, b))
            .cloned()
            .ok_or(Error::ConstantPolynomial)
    }

    /// `(ld(p), deg_{ld(p)} p)`.
    pub fn leader_degree(&self, ranking: &Ranking) -> Result<(Derivative, u32)> {
        let x = self.leader(ranking)?;
        let d = self.degree_in(&x);
        Ok((x, d))
    }

    pub fn initial(&self, ranking: &Ranking) -> Result<DiffPoly> {
        let (x, d) = self.leader_degree(ranking)?;
        Ok(self.coeff_of_power(&x, d))
    }

    pub fn separant(&self, ranking: &Ranking) -> Result<DiffPoly> {
        let x = self.leader(ranking)?;
        Ok(self.partial(&x))
    }

    /// Text form in the system-file syntax, terms in decreasing ranking order.
    pub fn display<'a>(&'a self, ring: &'a RingSpec, ranking: &'a Ranking) -> DisplayPoly<'a> {
        DisplayPoly {
            poly: self,
            ring,
            ranking,
        }
    }
}

pub struct DisplayPoly<'a> {
    poly: &'a DiffPoly,
    ring: &'a RingSpec,
    ranking: &'a Ranking,
}

impl fmt::Display for DisplayPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.poly.terms().collect();
        terms.sort_by(|a, b| self.ranking.cmp_monomials(b.0, a.0));
        for (k, (mono, c)) in terms.into_iter().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let factors = self.ranking.sorted_factors(mono);
            let mut parts = Vec::new();
            if !abs.is_one() || factors.is_empty() {
                parts.push(abs.to_string());
            }
            for (d, e) in factors {
                let name = self.ring.derivative_name(d);
                parts.push(if e == 1 { name } else { format!("{name}^{e}") });
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

impl Add for &DiffPoly {
    type Output = DiffPoly;

    fn add(self, rhs: &DiffPoly) -> DiffPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &DiffPoly {
    type Output = DiffPoly;

    fn sub(self, rhs: &DiffPoly) -> DiffPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &DiffPoly {
    type Output = DiffPoly;

    fn mul(self, rhs: &DiffPoly) -> DiffPoly {
        let mut out = DiffPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &DiffPoly {
    type Output = DiffPoly;

    fn neg(self) -> DiffPoly {
        DiffPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for DiffPoly {
            type Output = DiffPoly;

            fn $method(self, rhs: DiffPoly) -> DiffPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
