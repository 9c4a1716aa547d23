//! Vector-bundle partition functions of `P^2`, `P(1,2,2)` and `P(2,2,2)`,
//! the `SU(2)/Z_2` combination, and generating functions of ADE surfaces.
//!
//! The rank-2 partition functions are expansions around `q = infinity`: the
//! exponents decrease without bound as `n` grows. A finite sum over
//! `n = 1..=order` is exact only above the lowest exponent it reaches, so
//! every such series carries a `floor` next to its truncation.

use std::collections::BTreeSet;

use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::number_theory::{divisor_count, eta_power, hurwitz, theta_block, NumberTheoryError};
use crate::series::{int, rat, FracExpSeries, Rational, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    NumberTheory(#[from] NumberTheoryError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Whether the `-sigma_0(n)/2` term of the even-type sums is kept.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DivisorTerm {
    #[default]
    Keep,
    Drop,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Surface {
    P2,
    P122,
    P222,
}

impl std::str::FromStr for Surface {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "p2" => Ok(Surface::P2),
            "p122" => Ok(Surface::P122),
            "p222" => Ok(Surface::P222),
            other => Err(PartitionError::Domain(format!("unknown surface {other:?}"))),
        }
    }
}

/// A series known exactly on `[floor, truncation)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionSeries {
    pub series: FracExpSeries,
    pub floor: Rational,
}

impl PartitionSeries {
    fn new(series: FracExpSeries, floor: Rational) -> Self {
        PartitionSeries {
            series: series.dropped_below(&floor),
            floor,
        }
    }

    pub fn truncation(&self) -> &Rational {
        self.series.truncation()
    }

    /// Coefficient of `q^e`; exponents outside the exact window are errors.
    pub fn coefficient(&self, e: &Rational) -> Result<Rational, SeriesError> {
        if e < &self.floor {
            return Err(SeriesError::BelowFloor {
                exponent: Box::new(e.clone()),
                floor: Box::new(self.floor.clone()),
            });
        }
        self.series.coefficient(e)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn leading_exponent(&self) -> Option<Rational> {
        self.series.top_exponent()
    }

    pub fn shift(&self, e: &Rational) -> Self {
        PartitionSeries::new(self.series.shift(e), &self.floor + e)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PartitionSeries::new(self.series.scale(c), self.floor.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        let floor = (&self.floor).max(&other.floor).clone();
        PartitionSeries::new(&self.series + &other.series, floor)
    }

    pub fn rescale(&self, s: &Rational) -> Result<Self, SeriesError> {
        if s <= &Rational::zero() {
            return Err(SeriesError::NonPositiveScale(Box::new(s.clone())));
        }
        Ok(PartitionSeries::new(
            self.series.rescale(s)?,
            &self.floor * s,
        ))
    }
}

/// One coefficient that differs between the two sides of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: Rational,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl Mismatch {
    pub fn diff(&self) -> Rational {
        &self.lhs - &self.rhs
    }
}

/// Coefficientwise comparison of two series on their common exact window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: String,
    pub floor: Rational,
    pub truncation: Rational,
    /// Number of exponents with a nonzero coefficient on either side.
    pub compared: usize,
    pub mismatches: Vec<Mismatch>,
}

impl IdentityReport {
    pub fn pass(&self) -> bool {
        self.mismatches.is_empty() && self.floor < self.truncation
    }

    /// Merge several reports into one that passes iff all of them do.
    pub fn combine(name: &str, parts: &[IdentityReport]) -> IdentityReport {
        let floor = parts
            .iter()
            .map(|p| &p.floor)
            .max()
            .cloned()
            .unwrap_or_else(Rational::zero);
        let truncation = parts
            .iter()
            .map(|p| &p.truncation)
            .min()
            .cloned()
            .unwrap_or_else(Rational::zero);
        IdentityReport {
            name: name.to_string(),
            floor,
            truncation,
            compared: parts.iter().map(|p| p.compared).sum(),
            mismatches: parts.iter().flat_map(|p| p.mismatches.clone()).collect(),
        }
    }
}

pub fn compare(name: &str, lhs: &PartitionSeries, rhs: &PartitionSeries) -> IdentityReport {
    let floor = (&lhs.floor).max(&rhs.floor).clone();
    let truncation = lhs.truncation().min(rhs.truncation()).clone();
    let exponents: BTreeSet<Rational> = lhs
        .series
        .terms()
        .chain(rhs.series.terms())
        .map(|(e, _)| e)
        .filter(|e| e >= &floor && e < &truncation)
        .collect();
    let mismatches = exponents
        .iter()
        .filter_map(|e| {
            let a = lhs.series.coefficient(e).ok()?;
            let b = rhs.series.coefficient(e).ok()?;
            (a != b).then(|| Mismatch {
                exponent: e.clone(),
                lhs: a,
                rhs: b,
            })
        })
        .collect();
    IdentityReport {
        name: name.to_string(),
        floor,
        truncation,
        compared: exponents.len(),
        mismatches,
    }
}

fn check_order(order: u32) -> Result<(), PartitionError> {
    if order == 0 {
        return Err(PartitionError::Domain("order must be at least 1".into()));
    }
    Ok(())
}

/// `3 H(4n - 1)`, the odd-type coefficient.
fn odd_coefficient(n: u64) -> Rational {
    int(3) * hurwitz(4 * n - 1)
}

/// `3 (H(4n) - sigma_0(n) / 2)`, or `3 H(4n)` when the divisor term is dropped.
fn even_coefficient(n: u64, divisor: DivisorTerm) -> Result<Rational, PartitionError> {
    let mut c = hurwitz(4 * n);
    if divisor == DivisorTerm::Keep {
        c -= rat(divisor_count(n as i64)? as i64, 2);
    }
    Ok(int(3) * c)
}

/// `sum_{n=1}^{order} coeff(n) q^{offset - step n}`, exact on
/// `[offset - step order, offset - step + 1)`; `trunc` closes the window above.
fn descending_sum<F>(
    offset: Rational,
    step: i64,
    order: u32,
    trunc: Rational,
    coeff: F,
) -> Result<PartitionSeries, PartitionError>
where
    F: Fn(u64) -> Result<Rational, PartitionError>,
{
    let mut terms = Vec::with_capacity(order as usize);
    for n in 1..=order as u64 {
        terms.push((&offset - int(step * n as i64), coeff(n)?));
    }
    let denom = terms
        .iter()
        .map(|(e, _)| e.denom().to_u64().expect("small exponent denominator"))
        .fold(1u64, num_integer::lcm);
    let grid = terms
        .into_iter()
        .map(|(e, c)| {
            let k = &e * int(denom as i64);
            (k.to_integer().to_i64().expect("grid exponent"), c)
        })
        .collect::<Vec<_>>();
    let floor = &offset - int(step * order as i64);
    Ok(PartitionSeries::new(
        FracExpSeries::from_terms(denom, grid, trunc),
        floor,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum SumType {
    /// `sum 3 H(4n - 1) q^{1/4 - n}`
    Odd,
    /// `sum 3 (H(4n) - sigma_0(n)/2) q^{-n}`
    Even,
}

/// `q^prefactor` times the odd- or even-type sum; truncated at `prefactor + 1`.
fn p2_type(
    prefactor: &Rational,
    kind: SumType,
    order: u32,
    divisor: DivisorTerm,
) -> Result<PartitionSeries, PartitionError> {
    let trunc = prefactor + int(1);
    match kind {
        SumType::Odd => descending_sum(prefactor + rat(1, 4), 1, order, trunc, |n| {
            Ok(odd_coefficient(n))
        }),
        SumType::Even => descending_sum(prefactor.clone(), 1, order, trunc, |n| {
            even_coefficient(n, divisor)
        }),
    }
}

/// Exponent of the `P^2` prefactor, `c1^2/4 + 3 c1/2 + 2`.
pub fn p2_prefactor(c1: i64) -> Rational {
    rat(c1 * c1, 4) + rat(3 * c1, 2) + int(2)
}

/// `Z^vb_{c1}(P^2)` summed over `n = 1..=order`.
pub fn z_vb_p2(c1: i64, order: u32) -> Result<PartitionSeries, PartitionError> {
    z_vb_p2_with(c1, order, DivisorTerm::Keep)
}

pub fn z_vb_p2_with(
    c1: i64,
    order: u32,
    divisor: DivisorTerm,
) -> Result<PartitionSeries, PartitionError> {
    check_order(order)?;
    let kind = if c1.rem_euclid(2) == 1 {
        SumType::Odd
    } else {
        SumType::Even
    };
    p2_type(&p2_prefactor(c1), kind, order, divisor)
}

/// The odd-type part of the `P^2` series with the prefactor of `c1`, whatever its parity.
pub fn z_p2_odd_part(c1: i64, order: u32) -> Result<PartitionSeries, PartitionError> {
    check_order(order)?;
    p2_type(&p2_prefactor(c1), SumType::Odd, order, DivisorTerm::Keep)
}

/// The even-type part of the `P^2` series with the prefactor of `c1`, whatever its parity.
pub fn z_p2_even_part(
    c1: i64,
    order: u32,
    divisor: DivisorTerm,
) -> Result<PartitionSeries, PartitionError> {
    check_order(order)?;
    p2_type(&p2_prefactor(c1), SumType::Even, order, divisor)
}

/// `q^{1/8} eta(q)^{-3} Z^vb_{c1}(P^2)` for the partial sum over `n = 1..=order`.
///
/// The partial sum is a finite Laurent polynomial, so the product is exact;
/// `eta^{-3}` is expanded far enough to cover the whole window.
pub fn z_hat_p2(c1: i64, order: u32) -> Result<PartitionSeries, PartitionError> {
    let z = z_vb_p2(c1, order)?;
    let span = z.truncation() - &z.floor;
    let eta = eta_power(-3, &(&span - rat(1, 8)))?.shift(&rat(1, 8));
    let product = &z.series * &eta;
    Ok(PartitionSeries::new(product, z.floor))
}

/// `Z^vb_{c1}(P(1,2,2))`, with the branch chosen by `c1` mod 4.
pub fn z_vb_p122(c1: i64, order: u32) -> Result<PartitionSeries, PartitionError> {
    z_vb_p122_with(c1, order, DivisorTerm::Keep)
}

pub fn z_vb_p122_with(
    c1: i64,
    order: u32,
    divisor: DivisorTerm,
) -> Result<PartitionSeries, PartitionError> {
    check_order(order)?;
    let base = rat(c1 * c1, 8) + rat(3 * c1, 2);
    match c1.rem_euclid(4) {
        1 | 3 => {
            let p = base + rat(17, 4);
            let trunc = &p + int(1);
            descending_sum(p + rat(1, 8), 1, order, trunc, |n| Ok(hurwitz(8 * n - 1)))
        }
        r => {
            let p = base + int(4);
            let trunc = &p + int(1);
            // q^p (a q^{1/2} sum 3H(4n-1) q^{1/2-2n} + b sum 3(H(4n) - s/2) q^{-2n}),
            // the q^{1/2} sitting on the odd sum for c1 = 0 mod 4 and on the even sum otherwise
            let (odd_shift, even_shift) = if r == 0 {
                (rat(1, 2), int(0))
            } else {
                (int(0), rat(1, 2))
            };
            let odd = descending_sum(&p + rat(1, 2) + odd_shift, 2, order, trunc.clone(), |n| {
                Ok(odd_coefficient(n))
            })?;
            let even = descending_sum(&p + even_shift, 2, order, trunc, |n| {
                even_coefficient(n, divisor)
            })?;
            Ok(odd.add(&even))
        }
    }
}

/// `Z^vb_{c1,lambda}(P(2,2,2))` with the prefactors and branches as printed.
pub fn z_vb_p222(c1: i64, lambda: u8, order: u32) -> Result<PartitionSeries, PartitionError> {
    z_vb_p222_with(c1, lambda, order, DivisorTerm::Keep)
}

pub fn z_vb_p222_with(
    c1: i64,
    lambda: u8,
    order: u32,
    divisor: DivisorTerm,
) -> Result<PartitionSeries, PartitionError> {
    check_order(order)?;
    if c1.rem_euclid(2) != 0 {
        return Err(PartitionError::Domain(format!(
            "P(2,2,2) needs an even first Chern class, got {c1}"
        )));
    }
    let zero_mod_4 = c1.rem_euclid(4) == 0;
    let (prefactor, kind) = match lambda {
        0 => {
            let p = rat(c1 * c1, 16) + rat(3 * c1, 4) + int(2);
            (
                p,
                if zero_mod_4 {
                    SumType::Even
                } else {
                    SumType::Odd
                },
            )
        }
        1 => {
            let m = rat(c1, 2) + int(1);
            let p = &m * &m / int(4) + &m * rat(3, 2) + int(2);
            (
                p,
                if zero_mod_4 {
                    SumType::Odd
                } else {
                    SumType::Even
                },
            )
        }
        other => {
            return Err(PartitionError::Domain(format!(
                "lambda must be 0 or 1, got {other}"
            )));
        }
    };
    p2_type(&prefactor, kind, order, divisor)
}

/// Both sides of the rescaling identity between `P(1,2,2)` and `P^2` for `c1 = 0 mod 4`.
pub fn verify_p122_identity(c1: i64, order: u32) -> Result<IdentityReport, PartitionError> {
    if c1.rem_euclid(4) != 0 {
        return Err(PartitionError::Precondition(format!(
            "the P(1,2,2) rescaling identity needs c1 = 0 mod 4, got {c1}"
        )));
    }
    let lhs = z_vb_p122(c1, order)?.rescale(&rat(1, 2))?;
    let a = rat(-3 * c1 * c1, 16) - rat(3 * c1, 4);
    let rhs = z_p2_odd_part(c1, order)?
        .shift(&(&a + rat(1, 4)))
        .add(&z_p2_even_part(c1, order, DivisorTerm::Keep)?.shift(&a));
    Ok(compare(&format!("p122-p2 c1={c1}"), &lhs, &rhs))
}

/// `Z^vb_{c1,lambda}(P(2,2,2)) = Z^vb_{c1/2 + lambda}(P^2)` over the given `c1` values.
pub fn verify_p222_shift(c1_values: &[i64], order: u32) -> Result<IdentityReport, PartitionError> {
    let mut parts = Vec::new();
    for &c1 in c1_values {
        for lambda in [0u8, 1] {
            let lhs = z_vb_p222(c1, lambda, order)?;
            let rhs = z_vb_p2(c1 / 2 + lambda as i64, order)?;
            parts.push(compare(
                &format!("p222 c1={c1} lambda={lambda}"),
                &lhs,
                &rhs,
            ));
        }
    }
    Ok(IdentityReport::combine("p222-shift", &parts))
}

/// `(1/2)(q^{-2} Z_{0,0} + q^{-15/4} Z_{0,1})` of `P(2,2,2)`.
pub fn z_so3_p2(order: u32) -> Result<PartitionSeries, PartitionError> {
    z_so3_p2_with(order, DivisorTerm::Keep)
}

pub fn z_so3_p2_with(order: u32, divisor: DivisorTerm) -> Result<PartitionSeries, PartitionError> {
    let untwisted = z_vb_p222_with(0, 0, order, divisor)?.shift(&int(-2));
    let twisted = z_vb_p222_with(0, 1, order, divisor)?.shift(&rat(-15, 4));
    Ok(untwisted.add(&twisted).scale(&rat(1, 2)))
}

/// Checks the `SU(2)/Z_2` combination against
/// `(1/2)(sum 3(H(4n) - sigma_0(n)/2) q^{-n} + sum 3H(4n-1) q^{1/4-n})` built directly.
pub fn verify_so3_assembly(order: u32) -> Result<IdentityReport, PartitionError> {
    check_order(order)?;
    let mut terms = Vec::new();
    for n in 1..=order as u64 {
        let e = n as i64;
        terms.push((-4 * e, even_coefficient(n, DivisorTerm::Keep)? / int(2)));
        terms.push((1 - 4 * e, odd_coefficient(n) / int(2)));
    }
    let direct = PartitionSeries::new(
        FracExpSeries::from_terms(4, terms, int(1)),
        rat(1, 4) - int(order as i64),
    );
    let assembled = z_so3_p2(order)?;
    Ok(compare("so3-assembly", &assembled, &direct))
}

/// Resolved Euler characteristic and `A_n` singularity types of an ADE surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdeSurface {
    pub chi_resolved: i64,
    pub singularities: Vec<usize>,
}

/// `eta(q)^{-chi} prod_i Theta_{n_i}(q)`, truncated at `q^order`.
pub fn toda_series(s: &AdeSurface, order: u32) -> Result<FracExpSeries, PartitionError> {
    check_order(order)?;
    let trunc = int(order as i64);
    let mut acc = eta_power(-s.chi_resolved, &trunc)?;
    // the eta factor has valuation -chi/24, so theta blocks need q^{order + chi/24}
    let theta_trunc = (&trunc + rat(s.chi_resolved, 24)).ceil();
    let max_norm = theta_trunc.to_integer().to_i64().expect("small order") - 1;
    for &n in &s.singularities {
        if max_norm < 0 {
            break;
        }
        acc = &acc * &theta_block(n, max_norm as u64)?;
    }
    Ok(acc.truncated_at(&trunc))
}

/// `int_{pt} 1`, the degree-one contribution of an `A_1` singularity.
pub fn ade_point_integral() -> Rational {
    Rational::one()
}

/// `c~_2 + 14 c~_1 c_1 + 4 c~_1^2`, the degree-two contribution.
pub fn ade_chern_integral(ct2: &Rational, ct1_c1: &Rational, ct1_sq: &Rational) -> Rational {
    ct2 + int(14) * ct1_c1 + int(4) * ct1_sq
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuinticInvariants {
    pub g_c: i64,
    pub p_g: i64,
    pub h0_k2: i64,
}

/// Genus of the canonical curve, geometric genus and `h^0(K^2)` of a quintic
/// surface, from `c_1^2 = 5` and `c_2 = 55`.
pub fn quintic_invariants() -> QuinticInvariants {
    let (c1_sq, c2) = (5, 55);
    let g_c = 1 + c1_sq;
    let p_g = (c1_sq + c2) / 12 - 1;
    QuinticInvariants {
        g_c,
        p_g,
        h0_k2: p_g + g_c,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p2_odd_leading_term() {
        let z = z_vb_p2(1, 12).unwrap();
        assert_eq!(p2_prefactor(1), rat(15, 4));
        assert_eq!(z.leading_exponent(), Some(int(3)));
        assert_eq!(z.coefficient(&int(3)).unwrap(), int(1));
        assert_eq!(z.floor, rat(15, 4) + rat(1, 4) - int(12));
    }

    #[test]
    fn p2_even_first_coefficients() {
        let z = z_vb_p2(0, 12).unwrap();
        assert_eq!(z.coefficient(&int(1)).unwrap(), int(0));
        assert_eq!(z.coefficient(&int(0)).unwrap(), int(0));
        assert_eq!(z.coefficient(&int(-1)).unwrap(), int(1));
        assert_eq!(p2_prefactor(2), int(6));
    }

    #[test]
    fn below_floor_is_an_error() {
        let z = z_vb_p2(0, 5).unwrap();
        assert!(z.coefficient(&int(-3)).is_ok());
        assert!(z.coefficient(&int(-4)).is_err());
        assert!(z.coefficient(&int(3)).is_err());
    }

    #[test]
    fn p2_coefficients_are_integers() {
        for c1 in -3..=4 {
            let z = z_vb_p2(c1, 50).unwrap();
            for (_, c) in z.series.terms() {
                assert!(c.is_integer(), "c1={c1}: {c}");
                if c1 % 2 != 0 {
                    assert!(c >= &Rational::zero());
                }
            }
        }
    }

    #[test]
    fn drop_divisor_term_gives_pure_class_numbers() {
        let z = z_vb_p2_with(0, 6, DivisorTerm::Drop).unwrap();
        assert_eq!(z.coefficient(&int(1)).unwrap(), int(3) * hurwitz(4));
        assert_eq!(z.coefficient(&int(-1)).unwrap(), int(4));
    }

    #[test]
    fn z_hat_is_eta_normalized() {
        let z = z_vb_p2(1, 8).unwrap();
        let hat = z_hat_p2(1, 8).unwrap();
        // q^{1/8} eta^{-3} = 1 + 3q + 9q^2 + ...
        let eta = [1, 3, 9, 22, 51, 108, 221, 429];
        let expected: Rational = eta
            .iter()
            .enumerate()
            .map(|(k, &a)| int(a) * z.coefficient(&int(3 - k as i64)).unwrap())
            .sum();
        assert_eq!(hat.floor, z.floor);
        assert_eq!(hat.coefficient(&int(3)).unwrap(), expected);
    }

    #[test]
    fn p122_branches() {
        let odd = z_vb_p122(1, 10).unwrap();
        assert_eq!(odd.leading_exponent(), Some(int(5)));
        assert_eq!(odd.coefficient(&int(5)).unwrap(), int(1));

        // c1 = 0: q^4 (q^{1/2} sum 3H(4n-1) q^{1/2-2n} + sum ... q^{-2n})
        let zero = z_vb_p122(0, 10).unwrap();
        assert_eq!(zero.coefficient(&int(3)).unwrap(), int(1));
        assert_eq!(zero.coefficient(&int(2)).unwrap(), int(0));
        assert_eq!(zero.coefficient(&int(-2)).unwrap(), int(1));

        // c1 = 2: prefactor 1/2 + 3 + 4, both sums on q^{p + 1/2 - 2n}
        let two = z_vb_p122(2, 10).unwrap();
        let p = rat(15, 2);
        assert_eq!(two.coefficient(&(&p + rat(1, 2) - int(2))).unwrap(), int(1));
        assert_eq!(
            two.coefficient(&(&p + rat(1, 2) - int(6))).unwrap(),
            int(3) * hurwitz(11) + int(1)
        );
    }

    #[test]
    fn p122_identity() {
        for c1 in [0, 4, 8, -4] {
            let report = verify_p122_identity(c1, 15).unwrap();
            assert!(report.pass(), "{report:?}");
            assert!(report.compared > 20);
        }
        assert!(matches!(
            verify_p122_identity(2, 12),
            Err(PartitionError::Precondition(_))
        ));
    }

    #[test]
    fn p222_block() {
        assert_eq!(z_vb_p222(0, 0, 15).unwrap(), z_vb_p2(0, 15).unwrap());
        let z20 = z_vb_p222(2, 0, 15).unwrap();
        assert_eq!(z20, z_vb_p2(1, 15).unwrap());
        assert_eq!(z20.truncation() - int(1), rat(15, 4));
        assert_eq!(z_vb_p222(0, 1, 15).unwrap(), z_vb_p2(1, 15).unwrap());
        assert_eq!(z_vb_p222(2, 1, 15).unwrap(), z_vb_p2(2, 15).unwrap());
        assert!(verify_p222_shift(&[0, 2, 4, 6], 15).unwrap().pass());
        assert!(z_vb_p222(1, 0, 5).is_err());
        assert!(z_vb_p222(0, 2, 5).is_err());
    }

    #[test]
    fn so3_combination() {
        let z = z_so3_p2(10).unwrap();
        // (1/2) 3H(3) at q^{-3/4}, (1/2) * 1 at q^{-3}
        assert_eq!(z.coefficient(&rat(-3, 4)).unwrap(), rat(1, 2));
        assert_eq!(z.coefficient(&int(-3)).unwrap(), rat(1, 2));
        assert!(verify_so3_assembly(10).unwrap().pass());
    }

    #[test]
    fn mismatch_is_reported() {
        let a = z_vb_p2(0, 10).unwrap();
        let b = a.add(&PartitionSeries::new(
            FracExpSeries::from_terms(1, [(-2, int(1))], int(3)),
            int(-20),
        ));
        let r = compare("perturbed", &a, &b);
        assert!(!r.pass());
        assert_eq!(r.mismatches.len(), 1);
        assert_eq!(r.mismatches[0].diff(), int(-1));
    }

    #[test]
    fn toda_without_singularities_is_goettsche() {
        let s = AdeSurface {
            chi_resolved: 56,
            singularities: vec![],
        };
        assert_eq!(
            toda_series(&s, 20).unwrap(),
            eta_power(-56, &int(20)).unwrap()
        );
    }

    #[test]
    fn toda_with_one_node() {
        for chi in [3i64, 24, 56] {
            let s = AdeSurface {
                chi_resolved: chi,
                singularities: vec![1],
            };
            let t = toda_series(&s, 6).unwrap();
            assert_eq!(t.coefficient(&rat(-chi, 24)).unwrap(), int(1));
            assert_eq!(
                t.coefficient(&(int(1) - rat(chi, 24))).unwrap(),
                int(chi - 1)
            );
            assert_eq!(t.truncation(), &int(6));
        }
    }

    #[test]
    fn chern_integrals_and_quintic() {
        assert_eq!(ade_chern_integral(&int(56), &int(5), &int(5)), int(146));
        assert_eq!(ade_chern_integral(&int(0), &int(0), &int(0)), int(0));
        assert_eq!(ade_chern_integral(&int(1), &int(0), &int(0)), int(1));
        assert_eq!(ade_point_integral(), int(1));
        assert_eq!(
            quintic_invariants(),
            QuinticInvariants {
                g_c: 6,
                p_g: 4,
                h0_k2: 10
            }
        );
    }
}
