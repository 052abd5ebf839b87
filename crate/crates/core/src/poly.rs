//! Sparse multivariate polynomials over `Q` in `x_1..x_n`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub const MAX_VARS: usize = 8;

/// Exponent vector, index 0 is `x_1`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial([u8; MAX_VARS]);

impl Monomial {
    pub fn new(exponents: &[u8]) -> Self {
        assert!(exponents.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        let mut e = [0; MAX_VARS];
        e[..exponents.len()].copy_from_slice(exponents);
        Monomial(e)
    }

    pub fn exponent(&self, var: usize) -> u8 {
        self.0[var]
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    fn mul(&self, other: &Self) -> Self {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a = a.checked_add(b).expect("exponent overflow");
        }
        Monomial(e)
    }

    fn with_exponent(&self, var: usize, exp: u8) -> Self {
        let mut e = self.0;
        e[var] = exp;
        Monomial(e)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl RationalPolynomial {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::default(), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    /// `x_{var+1}` (0-based `var`).
    pub fn variable(nvars: usize, var: usize) -> Self {
        let mut e = [0u8; MAX_VARS];
        e[var] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(Monomial(e), BigRational::one());
        p
    }

    /// `sum_k coeffs[k] x_{k+1}`.
    pub fn linear(coeffs: &[i64]) -> Self {
        let mut p = Self::zero(coeffs.len());
        for (k, &c) in coeffs.iter().enumerate() {
            let mut e = [0u8; MAX_VARS];
            e[k] = 1;
            p.add_term(Monomial(e), BigRational::from_integer(c.into()));
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            Some(d) => degrees.all(|e| e == d),
            None => true,
        }
    }

    /// The constant term if the polynomial has degree at most zero.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Monomial::default()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// Applies `x_i -> signs[i] x_{targets[i]}` (0-based targets).
    pub fn substitute_signed(&self, targets: &[usize], signs: &[bool]) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut e = [0u8; MAX_VARS];
            let mut negative = false;
            for i in 0..self.nvars {
                let exp = m.0[i];
                e[targets[i]] = exp;
                negative ^= signs[i] && exp % 2 == 1;
            }
            out.add_term(Monomial(e), if negative { -c.clone() } else { c.clone() });
        }
        out
    }

    /// Exact quotient by a nonzero linear form, or `None` if it does not
    /// divide.
    pub fn div_exact_linear(&self, coeffs: &[i64]) -> Option<Self> {
        let k = coeffs.iter().rposition(|&c| c != 0)?;
        let lead = BigRational::from_integer(coeffs[k].into());
        let rest: Vec<(usize, BigRational)> = coeffs[..k]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| (j, BigRational::from_integer(c.into())))
            .collect();
        let mut remainder = self.terms.clone();
        let mut quotient = Self::zero(self.nvars);
        // Eliminate x_k from the top degree down.
        while let Some(top) = remainder.keys().map(|m| m.0[k]).max() {
            if top == 0 {
                return None;
            }
            let layer: Vec<(Monomial, BigRational)> = remainder
                .iter()
                .filter(|(m, _)| m.0[k] == top)
                .map(|(m, c)| (*m, c.clone()))
                .collect();
            for (m, c) in layer {
                remainder.remove(&m);
                let qm = m.with_exponent(k, top - 1);
                let qc = c / &lead;
                for (j, b) in &rest {
                    let mut e = qm.0;
                    e[*j] += 1;
                    let entry = remainder.entry(Monomial(e)).or_insert_with(BigRational::zero);
                    *entry -= &qc * b;
                    if entry.is_zero() {
                        remainder.remove(&Monomial(e));
                    }
                }
                quotient.add_term(qm, qc);
            }
        }
        Some(quotient)
    }

    /// Evaluates at an integer point.
    pub fn evaluate(&self, point: &[i64]) -> BigRational {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = BigInt::one();
            for (i, &x) in point.iter().enumerate() {
                v *= BigInt::from(x).pow(m.0[i] as u32);
            }
            total += c * BigRational::from_integer(v);
        }
        total
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn neg(self) -> RationalPolynomial {
        self.scale(&-BigRational::one())
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let mut acc: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(BigRational::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        RationalPolynomial {
            nvars: self.nvars.max(rhs.nvars),
            terms: acc,
        }
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if k == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            let abs = c.abs();
            let is_unit = abs.is_one();
            if !is_unit || m.degree() == 0 {
                write!(f, "{abs}")?;
            }
            let mut first = is_unit;
            for i in 0..self.nvars {
                let e = m.0[i];
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                write!(f, "x{}", i + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn arithmetic() {
        let x = RationalPolynomial::variable(2, 0);
        let y = RationalPolynomial::variable(2, 1);
        let s = &x + &y;
        let d = &x - &y;
        let p = &s * &d;
        assert_eq!(p, &(&x * &x) - &(&y * &y));
        assert_eq!(p.degree(), Some(2));
        assert!(p.is_homogeneous());
        assert!((&p - &p).is_zero());
        assert_eq!(p.to_string(), "x1^2 - x2^2");
        assert_eq!(RationalPolynomial::one(2).as_constant(), Some(q(1)));
        assert_eq!(p.evaluate(&[3, 1]), q(8));
    }

    #[test]
    fn exact_division() {
        let x = RationalPolynomial::variable(3, 0);
        let z = RationalPolynomial::variable(3, 2);
        let alpha = RationalPolynomial::linear(&[1, 0, 1]);
        let f = &(&alpha * &x) * &z;
        assert_eq!(f.div_exact_linear(&[1, 0, 1]), Some(&x * &z));
        assert_eq!(f.div_exact_linear(&[2, 0, 2]), Some((&x * &z).scale(&BigRational::new(1.into(), 2.into()))));
        assert_eq!(x.div_exact_linear(&[0, 1, 0]), None);
        assert_eq!((&x + &RationalPolynomial::one(3)).div_exact_linear(&[1, 0, 0]), None);
        assert_eq!(RationalPolynomial::zero(3).div_exact_linear(&[1, 1, 0]), Some(RationalPolynomial::zero(3)));
    }

    #[test]
    fn signed_substitution() {
        let p = &(&RationalPolynomial::variable(2, 0) * &RationalPolynomial::variable(2, 0))
            * &RationalPolynomial::variable(2, 1);
        // x1 -> -x2, x2 -> x1
        let s = p.substitute_signed(&[1, 0], &[true, false]);
        assert_eq!(s.to_string(), "x1*x2^2");
        let s = p.substitute_signed(&[0, 1], &[false, true]);
        assert_eq!(s.to_string(), "-x1^2*x2");
    }
}
