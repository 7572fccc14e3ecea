//! Exact polynomial arithmetic over unbounded integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Sub};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("cannot parse polynomial from {0:?}")]
    Parse(String),
}

/// A polynomial with exact integer coefficients, stored densely in ascending
/// powers. When attached to a graph of order `n`, `coeff(i)` is `d(G, i)`.
///
/// The representation is kept normalized: no trailing zero coefficients, and
/// the zero polynomial is the empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DomPolynomial {
    coeffs: Vec<BigInt>,
}

impl DomPolynomial {
    pub fn zero() -> Self {
        DomPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        DomPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn x() -> Self {
        DomPolynomial {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = DomPolynomial { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c * x^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::from_coeffs(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the highest nonzero term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Index of the lowest nonzero term; `None` for the zero polynomial.
    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &DomPolynomial) -> DomPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); len];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = self.coeff(i) + other.coeff(i);
        }
        Self::from_coeffs(coeffs)
    }

    pub fn subtract(&self, other: &DomPolynomial) -> DomPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); len];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = self.coeff(i) - other.coeff(i);
        }
        Self::from_coeffs(coeffs)
    }

    pub fn multiply(&self, other: &DomPolynomial) -> DomPolynomial {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    /// Multiplication by `x`.
    pub fn scale_by_x(&self) -> DomPolynomial {
        self.shift(1)
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> DomPolynomial {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        DomPolynomial { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> DomPolynomial {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.multiply(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.multiply(&base);
            }
        }
        acc
    }

    /// `(1 + x)^n`; coefficients are the binomial row `C(n, i)`.
    pub fn binomial_power(n: u32) -> DomPolynomial {
        let mut coeffs = Vec::with_capacity(n as usize + 1);
        let mut c = BigInt::one();
        coeffs.push(c.clone());
        for i in 0..n as u64 {
            c = c * BigInt::from(n as u64 - i) / BigInt::from(i + 1);
            coeffs.push(c.clone());
        }
        DomPolynomial { coeffs }
    }

    /// Deterministic ascending-power display, e.g. `9x^2 + 18x^3 + x^6`.
    pub fn to_display(&self) -> String {
        self.display_impl(false)
    }

    pub fn to_display_descending(&self) -> String {
        self.display_impl(true)
    }

    fn display_impl(&self, descending: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<(usize, &BigInt)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        if descending {
            terms.reverse();
        }
        let mut out = String::new();
        for (idx, (k, c)) in terms.iter().enumerate() {
            let neg = c.sign() == num_bigint::Sign::Minus;
            let mag = c.magnitude();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_part = if mag.is_one() && *k > 0 {
                String::new()
            } else {
                mag.to_string()
            };
            out.push_str(&coeff_part);
            match k {
                0 => {}
                1 => out.push('x'),
                _ => out.push_str(&format!("x^{}", k)),
            }
        }
        out
    }

    /// Parses the output of [`to_display`](Self::to_display) (either order).
    pub fn from_display(text: &str) -> Result<Self, PolyError> {
        let text = text.trim();
        if text.is_empty() {
            return Err(PolyError::Parse(text.to_string()));
        }
        if text == "0" {
            return Ok(Self::zero());
        }
        let err = || PolyError::Parse(text.to_string());
        // split into signed terms
        let normalized = text.replace(" - ", " + -");
        let mut acc = Self::zero();
        for term in normalized.split(" + ") {
            let term = term.trim();
            if term.is_empty() {
                return Err(err());
            }
            let (coeff_str, power) = match term.find('x') {
                None => (term, 0usize),
                Some(pos) => {
                    let rest = &term[pos + 1..];
                    let power = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .ok_or_else(err)?
                            .parse::<usize>()
                            .map_err(|_| err())?
                    };
                    (&term[..pos], power)
                }
            };
            let coeff: BigInt = match coeff_str {
                "" => BigInt::one(),
                "-" => -BigInt::one(),
                s => s.parse().map_err(|_| err())?,
            };
            acc = acc.add(&Self::monomial(coeff, power));
        }
        Ok(acc)
    }

    /// Canonical serialization: comma-separated coefficients in ascending
    /// order, e.g. `0,0,9,18,15,6,1`. Used as the exact grouping key by the
    /// equivalence machinery. The zero polynomial serializes as `0`.
    pub fn to_coeff_csv(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn from_coeff_csv(text: &str) -> Result<Self, PolyError> {
        let coeffs: Result<Vec<BigInt>, _> = text
            .trim()
            .split(',')
            .map(|t| t.trim().parse::<BigInt>())
            .collect();
        coeffs
            .map(Self::from_coeffs)
            .map_err(|_| PolyError::Parse(text.to_string()))
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl fmt::Display for DomPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_display())
    }
}

impl Add for &DomPolynomial {
    type Output = DomPolynomial;
    fn add(self, rhs: &DomPolynomial) -> DomPolynomial {
        DomPolynomial::add(self, rhs)
    }
}

impl Sub for &DomPolynomial {
    type Output = DomPolynomial;
    fn sub(self, rhs: &DomPolynomial) -> DomPolynomial {
        self.subtract(rhs)
    }
}

impl Mul for &DomPolynomial {
    type Output = DomPolynomial;
    fn mul(self, rhs: &DomPolynomial) -> DomPolynomial {
        self.multiply(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn one_plus_x_cubed_minus_one() -> DomPolynomial {
        DomPolynomial::binomial_power(3).subtract(&DomPolynomial::one())
    }

    #[test]
    fn multiply_matches_barbell3_expansion() {
        let p = one_plus_x_cubed_minus_one();
        let sq = p.multiply(&p);
        assert_eq!(sq, DomPolynomial::from_i64_coeffs(&[0, 0, 9, 18, 15, 6, 1]));
    }

    #[test]
    fn ring_identities() {
        let p = DomPolynomial::from_i64_coeffs(&[0, 3, 3, 1]);
        assert_eq!(p.multiply(&DomPolynomial::one()), p);
        assert_eq!(p.subtract(&p), DomPolynomial::zero());
        assert_eq!(p.multiply(&DomPolynomial::zero()), DomPolynomial::zero());
        let q = DomPolynomial::from_i64_coeffs(&[1, -2, 1]);
        assert_eq!(p.multiply(&q), q.multiply(&p));
    }

    #[test]
    fn binomial_power_rows() {
        assert_eq!(DomPolynomial::binomial_power(0), DomPolynomial::one());
        assert_eq!(
            DomPolynomial::binomial_power(4),
            DomPolynomial::from_i64_coeffs(&[1, 4, 6, 4, 1])
        );
    }

    #[test]
    fn binomial_power_middle_coefficient() {
        // independent oracle: factorial-ratio binomial
        fn binom(n: u64, k: u64) -> BigInt {
            let fact = |m: u64| (1..=m).map(BigInt::from).product::<BigInt>();
            fact(n) / (fact(k) * fact(n - k))
        }
        let p = DomPolynomial::binomial_power(40);
        assert_eq!(p.coeff(20), binom(40, 20));
        assert_eq!(p.coeff(20).to_u64(), Some(137846528820));
    }

    #[test]
    fn binomial_coefficients_sum_to_power_of_two() {
        for n in [0u32, 1, 5, 17, 40] {
            let sum: BigInt = DomPolynomial::binomial_power(n).coeffs().iter().sum();
            assert_eq!(sum, BigInt::from(2u8).pow(n));
        }
    }

    #[test]
    fn display_examples() {
        assert_eq!(DomPolynomial::zero().to_display(), "0");
        assert_eq!(DomPolynomial::x().to_display(), "x");
        assert_eq!(
            DomPolynomial::from_i64_coeffs(&[0, 3, 3, 1]).to_display(),
            "3x + 3x^2 + x^3"
        );
        assert_eq!(
            DomPolynomial::from_i64_coeffs(&[0, 0, 9, 18, 15, 6, 1]).to_display(),
            "9x^2 + 18x^3 + 15x^4 + 6x^5 + x^6"
        );
        assert_eq!(
            DomPolynomial::from_i64_coeffs(&[0, 0, 9, 18, 15, 6, 1]).to_display_descending(),
            "x^6 + 6x^5 + 15x^4 + 18x^3 + 9x^2"
        );
        assert_eq!(
            DomPolynomial::from_i64_coeffs(&[-1, 2, -3]).to_display(),
            "-1 + 2x - 3x^2"
        );
    }

    #[test]
    fn display_round_trips() {
        for p in [
            DomPolynomial::zero(),
            DomPolynomial::x(),
            DomPolynomial::from_i64_coeffs(&[0, 3, 3, 1]),
            DomPolynomial::from_i64_coeffs(&[-1, 2, -3]),
            DomPolynomial::from_i64_coeffs(&[5]),
            DomPolynomial::binomial_power(12),
        ] {
            assert_eq!(DomPolynomial::from_display(&p.to_display()).unwrap(), p);
            assert_eq!(
                DomPolynomial::from_display(&p.to_display_descending()).unwrap(),
                p
            );
        }
    }

    #[test]
    fn coeff_csv_round_trips() {
        let p = DomPolynomial::from_i64_coeffs(&[0, 0, 9, 18, 15, 6, 1]);
        assert_eq!(p.to_coeff_csv(), "0,0,9,18,15,6,1");
        assert_eq!(DomPolynomial::from_coeff_csv("0,0,9,18,15,6,1").unwrap(), p);
        assert_eq!(DomPolynomial::zero().to_coeff_csv(), "0");
        assert!(DomPolynomial::from_coeff_csv("1,a").is_err());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(DomPolynomial::from_display("").is_err());
        assert!(DomPolynomial::from_display("x^").is_err());
        assert!(DomPolynomial::from_display("3y").is_err());
    }
}
