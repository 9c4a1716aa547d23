use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::series::{int, Rational};

/// Polynomial in the degree-2 classes `theta` and `omega`, truncated at total
/// degree `maxdeg`; the key `(i, j)` holds the coefficient of `theta^i omega^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TautPolynomial {
    coeffs: BTreeMap<(u32, u32), Rational>,
    maxdeg: u32,
}

impl TautPolynomial {
    pub fn from_terms<I>(terms: I, maxdeg: u32) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), Rational)>,
    {
        let mut coeffs: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
        for ((i, j), c) in terms {
            if i + j < maxdeg && !c.is_zero() {
                *coeffs.entry((i, j)).or_insert_with(Rational::zero) += c;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        TautPolynomial { coeffs, maxdeg }
    }

    pub fn zero(maxdeg: u32) -> Self {
        Self::from_terms([], maxdeg)
    }

    pub fn constant(c: Rational, maxdeg: u32) -> Self {
        Self::from_terms([((0, 0), c)], maxdeg)
    }

    pub fn one(maxdeg: u32) -> Self {
        Self::constant(Rational::one(), maxdeg)
    }

    pub fn omega(maxdeg: u32) -> Self {
        Self::from_terms([((0, 1), Rational::one())], maxdeg)
    }

    pub fn theta(maxdeg: u32) -> Self {
        Self::from_terms([((1, 0), Rational::one())], maxdeg)
    }

    pub fn maxdeg(&self) -> u32 {
        self.maxdeg
    }

    /// Coefficient of `theta^i omega^j`.
    pub fn coefficient(&self, i: u32, j: u32) -> Rational {
        self.coeffs
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> + '_ {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(0, 0)
    }

    /// Part of total degree exactly `d`.
    pub fn homogeneous(&self, d: u32) -> Self {
        Self::from_terms(
            self.terms()
                .filter(|((i, j), _)| i + j == d)
                .map(|(k, c)| (k, c.clone())),
            self.maxdeg,
        )
    }

    /// Terms with no `theta`, as coefficients of `omega^0, omega^1, ...`.
    pub fn omega_part(&self) -> Vec<Rational> {
        (0..self.maxdeg).map(|j| self.coefficient(0, j)).collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms().map(|(k, v)| (k, v * c)), self.maxdeg)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Inverse of a polynomial with nonzero constant term.
    pub fn inverse(&self) -> Option<Self> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return None;
        }
        let inv_c0 = c0.recip();
        // P^{-1} = c0^{-1} sum_k (-(P - c0)/c0)^k, nilpotent beyond maxdeg
        let step = (self - &Self::constant(c0, self.maxdeg)).scale(&-inv_c0.clone());
        let mut acc = Self::one(self.maxdeg);
        let mut power = Self::one(self.maxdeg);
        for _ in 1..self.maxdeg {
            power = &power * &step;
            if power.is_zero() {
                break;
            }
            acc = &acc + &power;
        }
        Some(acc.scale(&inv_c0))
    }

    /// Integer power; negative powers need an invertible constant term.
    pub fn pow_int(&self, k: i64) -> Option<Self> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one(self.maxdeg);
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Some(acc)
    }

    /// `exp(P)` for `P` without constant term.
    pub fn exp(&self) -> Option<Self> {
        if !self.constant_term().is_zero() {
            return None;
        }
        let mut acc = Self::one(self.maxdeg);
        let mut power = Self::one(self.maxdeg);
        for k in 1..self.maxdeg {
            power = (&power * self).scale(&int(k as i64).recip());
            if power.is_zero() {
                break;
            }
            acc = &acc + &power;
        }
        Some(acc)
    }
}

impl Add for &TautPolynomial {
    type Output = TautPolynomial;

    fn add(self, rhs: &TautPolynomial) -> TautPolynomial {
        TautPolynomial::from_terms(
            self.terms().chain(rhs.terms()).map(|(k, c)| (k, c.clone())),
            self.maxdeg.min(rhs.maxdeg),
        )
    }
}

impl Neg for &TautPolynomial {
    type Output = TautPolynomial;

    fn neg(self) -> TautPolynomial {
        self.scale(&-Rational::one())
    }
}

impl Sub for &TautPolynomial {
    type Output = TautPolynomial;

    fn sub(self, rhs: &TautPolynomial) -> TautPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &TautPolynomial {
    type Output = TautPolynomial;

    fn mul(self, rhs: &TautPolynomial) -> TautPolynomial {
        let maxdeg = self.maxdeg.min(rhs.maxdeg);
        let mut out: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
        for ((i1, j1), a) in self.terms() {
            for ((i2, j2), b) in rhs.terms() {
                if i1 + j1 + i2 + j2 < maxdeg {
                    *out.entry((i1 + i2, j1 + j2)).or_insert_with(Rational::zero) += a * b;
                }
            }
        }
        TautPolynomial::from_terms(out, maxdeg)
    }
}
