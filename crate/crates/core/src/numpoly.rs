//! Numerical polynomials written in the binomial basis `C(ℓ+i, i)`.
//!
//! A numerical polynomial maps integers to integers. Every such polynomial of
//! degree at most `n` has a unique integer expansion
//!
//! ```text
//! p(ℓ) = a_0·C(ℓ,0) + a_1·C(ℓ+1,1) + … + a_n·C(ℓ+n,n)
//! ```
//!
//! and the coefficient vector `a` is the stored representation. Powers of `ℓ`
//! are derived output only.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Generalized binomial coefficient `C(x, k)` for any integer `x`.
///
/// Uses the falling-factorial definition, so `C(x, k)` is a polynomial in `x`
/// and the value agrees with the counting binomial for `x >= 0`.
pub fn binomial(x: i128, k: usize) -> i128 {
    let mut acc: i128 = 1;
    for j in 0..k as i128 {
        // acc == C(x, j) here; C(x, j+1) = C(x, j)·(x−j)/(j+1) is exact.
        acc = acc
            .checked_mul(x - j)
            .expect("binomial coefficient overflows i128")
            / (j + 1);
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalPolynomial {
    coeffs: Vec<i64>,
}

impl NumericalPolynomial {
    /// Builds `Σ coeffs[i]·C(ℓ+i, i)`. `n_max` is `coeffs.len() - 1`.
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        NumericalPolynomial { coeffs }
    }

    pub fn zero(n_max: usize) -> Self {
        NumericalPolynomial {
            coeffs: vec![0; n_max + 1],
        }
    }

    /// The basis element `C(ℓ+k, k)` inside an ambient space of bound `n_max`.
    pub fn basis(k: usize, n_max: usize) -> Self {
        assert!(k <= n_max, "basis index {k} exceeds n_max {n_max}");
        let mut p = Self::zero(n_max);
        p.coeffs[k] = 1;
        p
    }

    /// The polynomial `C(ℓ − shift + k, k)`, re-expanded in the binomial basis.
    pub fn shifted_binomial(shift: i64, k: usize, n_max: usize) -> Self {
        assert!(k <= n_max, "binomial degree {k} exceeds n_max {n_max}");
        Self::interpolate(n_max, |l| binomial(l - shift as i128 + k as i128, k))
    }

    /// Recovers the binomial-basis coefficients of a polynomial of degree at
    /// most `n_max` from its values.
    ///
    /// Samples at `ℓ = −1, −2, …, −(n_max+1)`. There `C(ℓ+i, i)` vanishes for
    /// `i ≥ −ℓ`, so the system is lower triangular with diagonal `±1`.
    pub fn interpolate(n_max: usize, f: impl Fn(i128) -> i128) -> Self {
        let mut coeffs = Vec::with_capacity(n_max + 1);
        for k in 1..=n_max + 1 {
            let l = -(k as i128);
            let mut rest = f(l);
            for (i, &a) in coeffs.iter().enumerate() {
                rest -= a as i128 * binomial(l + i as i128, i);
            }
            let diag = binomial(l + (k - 1) as i128, k - 1);
            debug_assert!(diag == 1 || diag == -1);
            let a = rest * diag;
            coeffs.push(i64::try_from(a).expect("binomial coefficient does not fit i64"));
        }
        NumericalPolynomial { coeffs }
    }

    pub fn n_max(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `C(ℓ+i, i)`; zero beyond `n_max`.
    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// Largest `i` with `a_i != 0`, or `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs
            .iter()
            .rposition(|&a| a != 0)
            .map_or(-1, |d| d as isize)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&a| a == 0)
    }

    /// Pads with zero coefficients up to `n_max`. Never truncates.
    pub fn padded(&self, n_max: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < n_max + 1 {
            coeffs.resize(n_max + 1, 0);
        }
        NumericalPolynomial { coeffs }
    }

    pub fn eval(&self, l: u64) -> i128 {
        self.eval_at(l as i128)
    }

    /// Evaluates the polynomial at any integer, including negative ones.
    pub fn eval_at(&self, l: i128) -> i128 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, &a)| a as i128 * binomial(l + i as i128, i))
            .sum()
    }

    /// Coefficients `c_0..c_{n_max}` with `p(ℓ) = Σ c_k ℓ^k`.
    pub fn to_standard_basis(&self) -> Vec<BigRational> {
        let n = self.n_max();
        let mut out = vec![BigRational::zero(); n + 1];
        // basis holds C(ℓ+i, i) in powers of ℓ, built as Π_{j=1..i} (ℓ+j)/j.
        let mut basis = vec![BigRational::one()];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                let j = BigRational::from_integer(BigInt::from(i));
                let mut next = vec![BigRational::zero(); basis.len() + 1];
                // (ℓ + i)/i = ℓ/i + 1
                for (k, c) in basis.iter().enumerate() {
                    next[k] += c;
                    next[k + 1] += c / &j;
                }
                basis = next;
            }
            let a = BigRational::from_integer(BigInt::from(a));
            for (k, c) in basis.iter().enumerate() {
                out[k] += &a * c;
            }
        }
        for l in 0..=n as i64 {
            let mut value = BigRational::zero();
            for c in out.iter().rev() {
                value = value * BigRational::from_integer(BigInt::from(l)) + c;
            }
            assert_eq!(
                value,
                BigRational::from_integer(BigInt::from(self.eval(l as u64))),
                "standard basis expansion disagrees with evaluation at ℓ={l}"
            );
        }
        out
    }

    /// Renders the binomial-basis form, e.g. `2·C(ℓ+1,1) − 1`.
    pub fn binomial_form(&self) -> String {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &a)| a != 0)
            .map(|(i, &a)| {
                let body = if i == 0 {
                    String::new()
                } else {
                    format!("C(ℓ+{i},{i})")
                };
                (a < 0, magnitude_times(a.unsigned_abs().to_string(), body))
            });
        join_signed(terms)
    }
}

fn magnitude_times(magnitude: String, body: String) -> String {
    match (magnitude.as_str(), body.is_empty()) {
        (_, true) => magnitude,
        ("1", false) => body,
        (_, false) => format!("{magnitude}·{body}"),
    }
}

fn join_signed(terms: impl Iterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (negative, text) in terms {
        match (out.is_empty(), negative) {
            (true, false) => {}
            (true, true) => out.push('−'),
            (false, false) => out.push_str(" + "),
            (false, true) => out.push_str(" − "),
        }
        out.push_str(&text);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Powers-of-ℓ form, e.g. `2ℓ + 1` or `(1/2)ℓ^2 + (3/2)ℓ + 1`.
impl fmt::Display for NumericalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let std = self.to_standard_basis();
        let terms = std
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let abs = c.abs();
                let magnitude = if abs.is_integer() {
                    abs.to_string()
                } else {
                    format!("({abs})")
                };
                let body = match k {
                    0 => String::new(),
                    1 => "ℓ".to_string(),
                    _ => format!("ℓ^{k}"),
                };
                let text = match (magnitude.as_str(), body.is_empty()) {
                    (_, true) => magnitude,
                    ("1", false) => body,
                    (_, false) => format!("{magnitude}{body}"),
                };
                (c.is_negative(), text)
            });
        f.write_str(&join_signed(terms))
    }
}

impl PartialOrd for NumericalPolynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Eventual pointwise order: the highest differing binomial coefficient decides.
impl Ord for NumericalPolynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len)
            .rev()
            .map(|i| self.coeff(i).cmp(&other.coeff(i)))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }
}

impl Add for &NumericalPolynomial {
    type Output = NumericalPolynomial;

    fn add(self, rhs: &NumericalPolynomial) -> NumericalPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        NumericalPolynomial {
            coeffs: (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect(),
        }
    }
}

impl Sub for &NumericalPolynomial {
    type Output = NumericalPolynomial;

    fn sub(self, rhs: &NumericalPolynomial) -> NumericalPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        NumericalPolynomial {
            coeffs: (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect(),
        }
    }
}

impl Add for NumericalPolynomial {
    type Output = NumericalPolynomial;

    fn add(self, rhs: NumericalPolynomial) -> NumericalPolynomial {
        &self + &rhs
    }
}

impl Sub for NumericalPolynomial {
    type Output = NumericalPolynomial;

    fn sub(self, rhs: NumericalPolynomial) -> NumericalPolynomial {
        &self - &rhs
    }
}

impl Neg for &NumericalPolynomial {
    type Output = NumericalPolynomial;

    fn neg(self) -> NumericalPolynomial {
        NumericalPolynomial {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Serialize for NumericalPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let standard: Vec<String> = self
            .to_standard_basis()
            .iter()
            .map(ToString::to_string)
            .collect();
        let mut s = serializer.serialize_struct("NumericalPolynomial", 3)?;
        s.serialize_field("binomial_coeffs", &self.coeffs)?;
        s.serialize_field("standard_coeffs", &standard)?;
        s.serialize_field("degree", &self.degree())?;
        s.end()
    }
}
