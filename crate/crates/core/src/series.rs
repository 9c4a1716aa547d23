//! Truncated Laurent series in `q` with rational exponents and exact rational
//! coefficients.
//!
//! A [`FracExpSeries`] stores the coefficient of `q^{k/D}` under the integer
//! key `k`, together with an explicit truncation `T`: every coefficient at an
//! exponent `>= T` is unknown, and reading one is an error rather than a zero.
//! Binary operations rebase to the lcm of the two denominators and propagate
//! the tightest truncation that is still exact.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Builds the rational `num/den` from machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("empty window: exponent {exponent} is not below the truncation {truncation}")]
    EmptyWindow {
        exponent: Box<Rational>,
        truncation: Box<Rational>,
    },
    #[error("coefficient of q^({exponent}) is unknown: series is truncated at {truncation}")]
    OutsideWindow {
        exponent: Box<Rational>,
        truncation: Box<Rational>,
    },
    #[error("coefficient of q^({exponent}) is unknown: series is exact only from q^({floor})")]
    BelowFloor {
        exponent: Box<Rational>,
        floor: Box<Rational>,
    },
    #[error("series is not invertible: no nonzero term below the truncation")]
    NotInvertible,
    #[error("no square root: {0}")]
    NoRoot(String),
    #[error("rescale factor must be positive, got {0}")]
    NonPositiveScale(Box<Rational>),
}

#[derive(Clone, Debug)]
pub struct FracExpSeries {
    denom: u64,
    terms: BTreeMap<i64, Rational>,
    trunc: Rational,
}

/// Smallest integer `L` with `k < L  <=>  k/d < trunc` for every integer `k`.
fn grid_limit(trunc: &Rational, denom: u64) -> i64 {
    (trunc * Rational::from_integer(BigInt::from(denom)))
        .ceil()
        .to_integer()
        .to_i64()
        .expect("truncation window exceeds i64 grid")
}

/// Returns `k` with `e = k/denom`, if `e` lies on the grid.
fn grid_index(e: &Rational, denom: u64) -> Option<i64> {
    let scaled = e * Rational::from_integer(BigInt::from(denom));
    if scaled.is_integer() {
        scaled.to_integer().to_i64()
    } else {
        None
    }
}

fn rational_sqrt(c: &Rational) -> Option<Rational> {
    if c.is_negative() {
        return None;
    }
    let n = c.numer().sqrt();
    let d = c.denom().sqrt();
    if &(&n * &n) == c.numer() && &(&d * &d) == c.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

impl FracExpSeries {
    /// The zero series, known to vanish below `trunc`.
    pub fn zero(trunc: Rational) -> Self {
        FracExpSeries {
            denom: 1,
            terms: BTreeMap::new(),
            trunc,
        }
    }

    /// The constant `c`, truncated at `trunc` (stored only when `0 < trunc`).
    pub fn constant(c: Rational, trunc: Rational) -> Self {
        Self::from_terms(1, [(0, c)], trunc)
    }

    pub fn one(trunc: Rational) -> Self {
        Self::constant(Rational::one(), trunc)
    }

    /// The single term `c q^e` truncated at `trunc`.
    pub fn monomial(c: Rational, e: Rational, trunc: Rational) -> Result<Self, SeriesError> {
        if e >= trunc {
            return Err(SeriesError::EmptyWindow {
                exponent: Box::new(e),
                truncation: Box::new(trunc),
            });
        }
        let denom = e
            .denom()
            .to_u64()
            .expect("exponent denominator exceeds u64");
        let k = e.numer().to_i64().expect("exponent numerator exceeds i64");
        Ok(Self::from_terms(denom, [(k, c)], trunc))
    }

    /// Builds a series from `(k, c)` pairs meaning `c q^{k/denom}`. Zero
    /// coefficients and exponents at or beyond `trunc` are dropped; repeated
    /// keys accumulate.
    pub fn from_terms<I>(denom: u64, terms: I, trunc: Rational) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        assert!(denom > 0, "exponent denominator must be positive");
        let limit = grid_limit(&trunc, denom);
        let mut map: BTreeMap<i64, Rational> = BTreeMap::new();
        for (k, c) in terms {
            if k < limit && !c.is_zero() {
                let slot = map.entry(k).or_insert_with(Rational::zero);
                *slot += c;
            }
        }
        map.retain(|_, c| !c.is_zero());
        FracExpSeries {
            denom,
            terms: map,
            trunc,
        }
    }

    pub fn denominator(&self) -> u64 {
        self.denom
    }

    pub fn truncation(&self) -> &Rational {
        &self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Least stored exponent, if any.
    pub fn valuation(&self) -> Option<Rational> {
        self.terms.keys().next().map(|&k| rat(k, self.denom as i64))
    }

    /// Greatest stored exponent, if any.
    pub fn top_exponent(&self) -> Option<Rational> {
        self.terms
            .keys()
            .next_back()
            .map(|&k| rat(k, self.denom as i64))
    }

    /// Valuation, or the truncation for the zero series (which is `O(q^T)`).
    fn effective_valuation(&self) -> Rational {
        self.valuation().unwrap_or_else(|| self.trunc.clone())
    }

    /// Stored terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (Rational, &Rational)> + '_ {
        let d = self.denom as i64;
        self.terms.iter().map(move |(&k, c)| (rat(k, d), c))
    }

    /// Stored terms as `(k, coefficient)` on the `1/D` grid, ascending.
    pub fn grid_terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    /// Coefficient of `q^e`; reading at or beyond the truncation is an error.
    pub fn coefficient(&self, e: &Rational) -> Result<Rational, SeriesError> {
        if e >= &self.trunc {
            return Err(SeriesError::OutsideWindow {
                exponent: Box::new(e.clone()),
                truncation: Box::new(self.trunc.clone()),
            });
        }
        Ok(grid_index(e, self.denom)
            .and_then(|k| self.terms.get(&k).cloned())
            .unwrap_or_else(Rational::zero))
    }

    /// Same series on the finer grid `1/denom`; `denom` must be a multiple of
    /// the current denominator.
    pub fn rebased(&self, denom: u64) -> Self {
        assert!(
            denom.is_multiple_of(self.denom),
            "rebase target {denom} is not a multiple of {}",
            self.denom
        );
        let factor = (denom / self.denom) as i64;
        FracExpSeries {
            denom,
            terms: self
                .terms
                .iter()
                .map(|(&k, c)| (k * factor, c.clone()))
                .collect(),
            trunc: self.trunc.clone(),
        }
    }

    /// Same series with the smallest denominator that represents its exponents.
    pub fn normalized(&self) -> Self {
        let g = self
            .terms
            .keys()
            .fold(self.denom as i64, |acc, &k| acc.gcd(&k));
        let g = g.max(1);
        FracExpSeries {
            denom: self.denom / g as u64,
            terms: self
                .terms
                .iter()
                .map(|(&k, c)| (k / g, c.clone()))
                .collect(),
            trunc: self.trunc.clone(),
        }
    }

    /// Lowers the truncation to `min(trunc, t)`, dropping terms beyond it.
    pub fn truncated_at(&self, t: &Rational) -> Self {
        let trunc = if t < &self.trunc {
            t.clone()
        } else {
            self.trunc.clone()
        };
        Self::from_terms(
            self.denom,
            self.terms.iter().map(|(&k, c)| (k, c.clone())),
            trunc,
        )
    }

    /// Drops every stored term with exponent below `e`.
    pub fn dropped_below(&self, e: &Rational) -> Self {
        let d = self.denom as i64;
        FracExpSeries {
            denom: self.denom,
            terms: self
                .terms
                .iter()
                .filter(|(&k, _)| &rat(k, d) >= e)
                .map(|(&k, c)| (k, c.clone()))
                .collect(),
            trunc: self.trunc.clone(),
        }
    }

    /// Multiplies by the scalar `c`.
    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(
            self.denom,
            self.terms.iter().map(|(&k, v)| (k, v * c)),
            self.trunc.clone(),
        )
    }

    /// Multiplies by `q^e` exactly; the truncation moves with the terms.
    pub fn shift(&self, e: &Rational) -> Self {
        let e_den = e.denom().to_u64().expect("shift denominator exceeds u64");
        let denom = self.denom.lcm(&e_den);
        let base = self.rebased(denom);
        let offset = grid_index(e, denom).expect("shift lies on the lcm grid");
        FracExpSeries {
            denom,
            terms: base
                .terms
                .into_iter()
                .map(|(k, c)| (k + offset, c))
                .collect(),
            trunc: &self.trunc + e,
        }
    }

    fn common_grid(a: &Self, b: &Self) -> (Self, Self) {
        let d = a.denom.lcm(&b.denom);
        (a.rebased(d), b.rebased(d))
    }

    /// Multiplicative inverse within the inherited window.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let (&k0, c0) = self.terms.iter().next().ok_or(SeriesError::NotInvertible)?;
        let d = self.denom;
        let window = grid_limit(&self.trunc, d) - k0;
        let rel: Vec<(usize, Rational)> = self
            .terms
            .iter()
            .skip(1)
            .map(|(&k, c)| ((k - k0) as usize, c.clone()))
            .collect();
        let inv_c0 = c0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(window.max(0) as usize);
        for m in 0..window.max(0) as usize {
            if m == 0 {
                out.push(inv_c0.clone());
                continue;
            }
            let mut acc = Rational::zero();
            for (j, a) in rel.iter() {
                if *j > m {
                    break;
                }
                let b = &out[m - j];
                if !b.is_zero() {
                    acc += a * b;
                }
            }
            out.push(-acc * &inv_c0);
        }
        let v = rat(k0, d as i64);
        let trunc = &self.trunc - &v - &v;
        Ok(Self::from_terms(
            d,
            out.into_iter().enumerate().map(|(m, c)| (m as i64 - k0, c)),
            trunc,
        ))
    }

    /// Square root with positive leading coefficient, within the inherited window.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        let (&k0, c0) = self
            .terms
            .iter()
            .next()
            .ok_or_else(|| SeriesError::NoRoot("series has no nonzero term".into()))?;
        if k0 % 2 != 0 {
            return Err(SeriesError::NoRoot(format!(
                "leading exponent {k0}/{} is not twice a grid exponent",
                self.denom
            )));
        }
        let b0 = rational_sqrt(c0).ok_or_else(|| {
            SeriesError::NoRoot(format!("leading coefficient {c0} is not a rational square"))
        })?;
        let d = self.denom;
        let window = (grid_limit(&self.trunc, d) - k0).max(0) as usize;
        let mut rel = vec![Rational::zero(); window];
        for (&k, c) in self.terms.iter() {
            let j = (k - k0) as usize;
            if j < window {
                rel[j] = c.clone();
            }
        }
        let two_b0 = &b0 + &b0;
        let mut out: Vec<Rational> = Vec::with_capacity(window);
        for m in 0..window {
            if m == 0 {
                out.push(b0.clone());
                continue;
            }
            let mut acc = rel[m].clone();
            for j in 1..m {
                if !out[j].is_zero() && !out[m - j].is_zero() {
                    acc -= &out[j] * &out[m - j];
                }
            }
            out.push(acc / &two_b0);
        }
        let half = k0 / 2;
        let trunc = &self.trunc - rat(half, d as i64);
        Ok(Self::from_terms(
            d,
            out.into_iter()
                .enumerate()
                .map(|(m, c)| (m as i64 + half, c)),
            trunc,
        ))
    }

    /// Integer power by repeated squaring; negative powers go through [`invert`].
    ///
    /// [`invert`]: FracExpSeries::invert
    pub fn pow_int(&self, k: i64) -> Result<Self, SeriesError> {
        if k == 0 {
            let rel = &self.trunc - self.effective_valuation();
            return Ok(Self::one(rel));
        }
        let mut base = if k < 0 { self.invert()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc: Option<Self> = None;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => &a * &base,
                });
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc.expect("nonzero exponent"))
    }

    /// Substitutes `q -> q^s` for a positive rational `s`.
    pub fn rescale(&self, s: &Rational) -> Result<Self, SeriesError> {
        if !s.is_positive() {
            return Err(SeriesError::NonPositiveScale(Box::new(s.clone())));
        }
        let p = s.numer().to_i64().expect("scale numerator exceeds i64");
        let q = s.denom().to_u64().expect("scale denominator exceeds u64");
        Ok(FracExpSeries {
            denom: self.denom * q,
            terms: self
                .terms
                .iter()
                .map(|(&k, c)| (k * p, c.clone()))
                .collect(),
            trunc: &self.trunc * s,
        })
    }
}

impl PartialEq for FracExpSeries {
    fn eq(&self, other: &Self) -> bool {
        let a = self.normalized();
        let b = other.normalized();
        a.trunc == b.trunc && a.denom == b.denom && a.terms == b.terms
    }
}

impl Eq for FracExpSeries {}

impl Add for &FracExpSeries {
    type Output = FracExpSeries;

    fn add(self, rhs: &FracExpSeries) -> FracExpSeries {
        let (a, b) = FracExpSeries::common_grid(self, rhs);
        let trunc = if a.trunc < b.trunc {
            a.trunc.clone()
        } else {
            b.trunc.clone()
        };
        FracExpSeries::from_terms(a.denom, a.terms.into_iter().chain(b.terms), trunc)
    }
}

impl Neg for &FracExpSeries {
    type Output = FracExpSeries;

    fn neg(self) -> FracExpSeries {
        FracExpSeries {
            denom: self.denom,
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
            trunc: self.trunc.clone(),
        }
    }
}

impl Sub for &FracExpSeries {
    type Output = FracExpSeries;

    fn sub(self, rhs: &FracExpSeries) -> FracExpSeries {
        self + &(-rhs)
    }
}

impl Mul for &FracExpSeries {
    type Output = FracExpSeries;

    /// Cauchy product; exact below `min(Ta + val(b), Tb + val(a))`.
    fn mul(self, rhs: &FracExpSeries) -> FracExpSeries {
        let ta = &self.trunc + rhs.effective_valuation();
        let tb = &rhs.trunc + self.effective_valuation();
        let trunc = if ta < tb { ta } else { tb };
        let (a, b) = FracExpSeries::common_grid(self, rhs);
        let limit = grid_limit(&trunc, a.denom);
        let mut out: BTreeMap<i64, Rational> = BTreeMap::new();
        for (&ka, ca) in a.terms.iter() {
            for (&kb, cb) in b.terms.iter() {
                if ka + kb >= limit {
                    break;
                }
                *out.entry(ka + kb).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        FracExpSeries::from_terms(a.denom, out, trunc)
    }
}

impl Add for FracExpSeries {
    type Output = FracExpSeries;
    fn add(self, rhs: FracExpSeries) -> FracExpSeries {
        &self + &rhs
    }
}

impl Sub for FracExpSeries {
    type Output = FracExpSeries;
    fn sub(self, rhs: FracExpSeries) -> FracExpSeries {
        &self - &rhs
    }
}

impl Mul for FracExpSeries {
    type Output = FracExpSeries;
    fn mul(self, rhs: FracExpSeries) -> FracExpSeries {
        &self * &rhs
    }
}

impl fmt::Display for FracExpSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let unit = mag.is_one();
            if e.is_zero() {
                write!(f, "{mag}")?;
                continue;
            }
            if !unit {
                write!(f, "{mag}*")?;
            }
            if e.is_one() {
                write!(f, "q")?;
            } else if e.is_integer() {
                write!(f, "q^{e}")?;
            } else {
                write!(f, "q^({e})")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.trunc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64], trunc: i64) -> FracExpSeries {
        FracExpSeries::from_terms(
            1,
            coeffs.iter().enumerate().map(|(k, &c)| (k as i64, int(c))),
            int(trunc),
        )
    }

    #[test]
    fn monomial_examples() {
        let one = FracExpSeries::monomial(int(1), int(0), int(10)).unwrap();
        assert_eq!(one, FracExpSeries::one(int(10)));
        let s = FracExpSeries::monomial(int(3), rat(1, 4), int(5)).unwrap();
        assert_eq!(s.coefficient(&rat(1, 4)).unwrap(), int(3));
        assert_eq!(s.denominator(), 4);
        let c = FracExpSeries::monomial(rat(-1, 12), int(0), int(2)).unwrap();
        assert_eq!(c.coefficient(&int(0)).unwrap(), rat(-1, 12));
    }

    #[test]
    fn monomial_rejects_empty_window() {
        let err = FracExpSeries::monomial(int(1), int(3), int(3)).unwrap_err();
        assert!(matches!(err, SeriesError::EmptyWindow { .. }));
    }

    #[test]
    fn add_cancels_and_takes_min_truncation() {
        let q = FracExpSeries::monomial(int(1), int(1), int(5)).unwrap();
        let z = &q + &(-&q);
        assert!(z.is_zero());

        let a = poly(&[1, 1], 5);
        let b = FracExpSeries::monomial(int(1), int(2), int(3)).unwrap();
        let s = &a + &b;
        assert_eq!(s.truncation(), &int(3));
        assert_eq!(s, poly(&[1, 1, 1], 3));
    }

    #[test]
    fn add_rebases_to_lcm() {
        let a = FracExpSeries::monomial(int(1), rat(1, 2), int(2)).unwrap();
        let b = FracExpSeries::monomial(int(1), rat(1, 3), int(2)).unwrap();
        let s = &a + &b;
        assert_eq!(s.denominator(), 6);
        let keys: Vec<i64> = s.grid_terms().map(|(k, _)| k).collect();
        assert_eq!(keys, vec![2, 3]);
    }

    #[test]
    fn mul_examples() {
        let n = 12;
        let one_minus_q = poly(&[1, -1], n);
        let geo = poly(&vec![1; n as usize], n);
        assert_eq!(&one_minus_q * &geo, FracExpSeries::one(int(n)));

        let a = FracExpSeries::monomial(int(1), rat(1, 4), int(5)).unwrap();
        let sq = &a * &a;
        assert_eq!(sq.terms().next().unwrap().0, rat(1, 2));

        let p = poly(&[1, 1], 10);
        assert_eq!(&p * &p, poly(&[1, 2, 1], 10));
    }

    #[test]
    fn mul_window_follows_valuations() {
        // q^2 (T=5) times 1 + q (T=4): known below min(5 + 0, 4 + 2) = 5
        let a = FracExpSeries::monomial(int(1), int(2), int(5)).unwrap();
        let b = poly(&[1, 1], 4);
        assert_eq!((&a * &b).truncation(), &int(5));
    }

    #[test]
    fn invert_examples() {
        let inv = poly(&[1, -1], 8).invert().unwrap();
        assert_eq!(inv, poly(&[1; 8], 8));

        let two = FracExpSeries::constant(int(2), int(4));
        assert_eq!(
            two.invert().unwrap(),
            FracExpSeries::constant(rat(1, 2), int(4))
        );

        let a = FracExpSeries::from_terms(1, [(2, int(1)), (3, int(-1))], int(8));
        let inv = a.invert().unwrap();
        assert_eq!(inv.valuation(), Some(int(-2)));
        assert_eq!(inv.truncation(), &int(4));
        for e in -2..4 {
            assert_eq!(inv.coefficient(&int(e)).unwrap(), int(1));
        }
    }

    #[test]
    fn invert_zero_fails() {
        let z = FracExpSeries::zero(int(3));
        assert_eq!(z.invert().unwrap_err(), SeriesError::NotInvertible);
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(poly(&[1, -2, 1], 6).sqrt().unwrap(), poly(&[1, -1], 6));
        assert_eq!(
            FracExpSeries::constant(int(4), int(3)).sqrt().unwrap(),
            FracExpSeries::constant(int(2), int(3))
        );
        let n = 10;
        let target = poly(&[1, -10, 9], n);
        let root = target.sqrt().unwrap();
        assert_eq!(root.coefficient(&int(1)).unwrap(), int(-5));
        assert_eq!(root.coefficient(&int(2)).unwrap(), int(-8));
        assert_eq!(&root * &root, target);
    }

    #[test]
    fn sqrt_rejects_non_squares() {
        assert!(matches!(
            FracExpSeries::constant(int(2), int(3)).sqrt(),
            Err(SeriesError::NoRoot(_))
        ));
        assert!(matches!(
            FracExpSeries::constant(int(-1), int(3)).sqrt(),
            Err(SeriesError::NoRoot(_))
        ));
        let q = FracExpSeries::monomial(int(1), int(1), int(4)).unwrap();
        assert!(matches!(q.sqrt(), Err(SeriesError::NoRoot(_))));
    }

    #[test]
    fn pow_examples() {
        let p = poly(&[1, 1], 6);
        assert_eq!(p.pow_int(0).unwrap(), FracExpSeries::one(int(6)));
        let m = poly(&[1, -1], 6);
        assert_eq!(m.pow_int(-1).unwrap(), m.invert().unwrap());
        let w2 = poly(&[-2, 1], 6);
        assert_eq!(w2.pow_int(3).unwrap(), poly(&[-8, 12, -6, 1], 6));
    }

    #[test]
    fn rescale_examples() {
        let q3 = FracExpSeries::monomial(int(1), int(3), int(6)).unwrap();
        let r = q3.rescale(&rat(1, 2)).unwrap();
        assert_eq!(r.terms().next().unwrap().0, rat(3, 2));
        assert_eq!(r.truncation(), &int(3));

        let p = poly(&[1, 1, 1], 3);
        let r = p.rescale(&int(2)).unwrap();
        assert_eq!(
            r,
            FracExpSeries::from_terms(1, [(0, int(1)), (2, int(1)), (4, int(1))], int(6))
        );

        let e = FracExpSeries::monomial(int(1), rat(1, 8), int(1)).unwrap();
        assert_eq!(e.rescale(&int(2)).unwrap().valuation(), Some(rat(1, 4)));
        assert!(matches!(
            p.rescale(&int(0)),
            Err(SeriesError::NonPositiveScale(_))
        ));
    }

    #[test]
    fn coefficient_window_guard() {
        let p = FracExpSeries::from_terms(1, [(0, int(1)), (2, int(3))], int(3));
        assert_eq!(p.coefficient(&int(2)).unwrap(), int(3));
        assert_eq!(p.coefficient(&int(1)).unwrap(), int(0));
        assert!(matches!(
            p.coefficient(&int(5)),
            Err(SeriesError::OutsideWindow { .. })
        ));
        assert!(p.coefficient(&int(3)).is_err());
    }

    #[test]
    fn shift_moves_truncation() {
        let p = poly(&[1, 1], 4);
        let s = p.shift(&rat(15, 4));
        assert_eq!(s.valuation(), Some(rat(15, 4)));
        assert_eq!(s.truncation(), &rat(31, 4));
    }

    #[test]
    fn display_is_readable() {
        let p = FracExpSeries::from_terms(4, [(0, int(1)), (1, int(-3)), (8, rat(1, 2))], int(5));
        assert_eq!(p.to_string(), "1 - 3*q^(1/4) + 1/2*q^2 + O(q^5)");
    }
}
