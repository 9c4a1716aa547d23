//! Exact arithmetic in `Q(zeta_m)`, in the power basis modulo the `m`-th
//! cyclotomic polynomial.

use std::ops::{Add, Mul, Neg};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::NumberTheoryError;
use crate::series::Rational;

fn mobius(mut n: u64) -> i8 {
    let mut result = 1i8;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact quotient by a monic divisor.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "division was not exact");
    quot
}

/// Coefficients (ascending) of the `m`-th cyclotomic polynomial, from
/// `Phi_m = prod_{d | m} (x^d - 1)^{mu(m/d)}`.
pub fn cyclotomic_polynomial(m: u64) -> Vec<BigInt> {
    assert!(m > 0);
    let x_d_minus_1 = |d: u64| {
        let mut p = vec![BigInt::zero(); d as usize + 1];
        p[0] = -BigInt::one();
        p[d as usize] = BigInt::one();
        p
    };
    let mut num = vec![BigInt::one()];
    let mut den = vec![BigInt::one()];
    for d in (1..=m).filter(|d| m.is_multiple_of(*d)) {
        match mobius(m / d) {
            1 => num = poly_mul(&num, &x_d_minus_1(d)),
            -1 => den = poly_mul(&den, &x_d_minus_1(d)),
            _ => {}
        }
    }
    poly_div_exact(&num, &den)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycNumber {
    order: u64,
    coeffs: Vec<Rational>,
}

impl CycNumber {
    fn reduce(order: u64, mut raw: Vec<Rational>) -> CycNumber {
        let phi = cyclotomic_polynomial(order);
        let deg = phi.len() - 1;
        for i in (deg..raw.len()).rev() {
            let c = std::mem::replace(&mut raw[i], Rational::zero());
            if c.is_zero() {
                continue;
            }
            for (j, pj) in phi.iter().enumerate().take(deg) {
                raw[i - deg + j] -= &c * Rational::from_integer(pj.clone());
            }
        }
        raw.resize(deg, Rational::zero());
        CycNumber { order, coeffs: raw }
    }

    pub fn from_rational(order: u64, r: Rational) -> Result<CycNumber, NumberTheoryError> {
        if order == 0 {
            return Err(NumberTheoryError::Domain(
                "cyclotomic order must be positive".into(),
            ));
        }
        Ok(CycNumber::reduce(order, vec![r]))
    }

    /// `zeta_m^a`, reduced to the power basis.
    pub fn root(m: u64, a: i64) -> Result<CycNumber, NumberTheoryError> {
        if m == 0 {
            return Err(NumberTheoryError::Domain(
                "cyclotomic order must be positive".into(),
            ));
        }
        let e = a.rem_euclid(m as i64) as usize;
        let mut raw = vec![Rational::zero(); e + 1];
        raw[e] = Rational::one();
        Ok(CycNumber::reduce(m, raw))
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Power-basis coefficients, length `phi(m)`.
    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value as a rational when every non-constant coordinate vanishes.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Rational) -> CycNumber {
        CycNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }
}

impl Add for &CycNumber {
    type Output = CycNumber;

    fn add(self, rhs: &CycNumber) -> CycNumber {
        assert_eq!(
            self.order, rhs.order,
            "adding elements of different cyclotomic fields"
        );
        CycNumber {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;

    fn neg(self) -> CycNumber {
        CycNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &CycNumber {
    type Output = CycNumber;

    fn mul(self, rhs: &CycNumber) -> CycNumber {
        assert_eq!(
            self.order, rhs.order,
            "multiplying elements of different cyclotomic fields"
        );
        let mut raw = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                raw[i + j] += a * b;
            }
        }
        CycNumber::reduce(self.order, raw)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::int;

    fn coeffs(m: u64) -> Vec<i64> {
        cyclotomic_polynomial(m)
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn known_cyclotomic_polynomials() {
        assert_eq!(coeffs(1), vec![-1, 1]);
        assert_eq!(coeffs(2), vec![1, 1]);
        assert_eq!(coeffs(3), vec![1, 1, 1]);
        assert_eq!(coeffs(4), vec![1, 0, 1]);
        assert_eq!(coeffs(6), vec![1, -1, 1]);
        assert_eq!(coeffs(12), vec![1, 0, -1, 0, 1]);
        // first polynomial with a coefficient outside {-1, 0, 1}
        assert!(coeffs(105).contains(&-2));
    }

    #[test]
    fn root_sums() {
        let i = CycNumber::root(4, 1).unwrap();
        let minus_i = CycNumber::root(4, -1).unwrap();
        assert!((&i + &minus_i).is_zero());

        let w = CycNumber::root(3, 1).unwrap();
        let w2 = CycNumber::root(3, 2).unwrap();
        assert_eq!((&w + &w2).to_rational(), Some(int(-1)));

        for m in 1..12 {
            assert_eq!(CycNumber::root(m, 0).unwrap().to_rational(), Some(int(1)));
        }
    }

    #[test]
    fn rationality_detection() {
        assert_eq!(CycNumber::root(4, 1).unwrap().to_rational(), None);
        assert_eq!(
            CycNumber::from_rational(5, int(1)).unwrap().to_rational(),
            Some(int(1))
        );
    }

    #[test]
    fn roots_multiply_by_adding_exponents() {
        for m in [3u64, 5, 6, 8, 12] {
            for a in 0..m as i64 {
                for b in 0..m as i64 {
                    let lhs = &CycNumber::root(m, a).unwrap() * &CycNumber::root(m, b).unwrap();
                    assert_eq!(lhs, CycNumber::root(m, a + b).unwrap());
                }
            }
        }
    }

    #[test]
    fn sum_of_all_roots_vanishes() {
        for m in 2..20u64 {
            let mut acc = CycNumber::from_rational(m, int(0)).unwrap();
            for a in 0..m as i64 {
                acc = &acc + &CycNumber::root(m, a).unwrap();
            }
            assert!(acc.is_zero(), "m = {m}");
        }
    }

    #[test]
    fn zero_order_is_rejected() {
        assert!(CycNumber::root(0, 1).is_err());
    }
}
