//! Localization integrals on the Hilbert scheme of points `C^[n]` of a
//! (possibly gerby) curve, evaluated two ways, and the closed-form kernel of
//! their generating series.

mod polynomial;

pub use polynomial::TautPolynomial;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::series::{int, FracExpSeries, Rational, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TautError {
    #[error("integrand truncated at total degree {maxdeg}, but C^[{n}] needs degree {n}")]
    InsufficientWindow { maxdeg: u32, n: u32 },
    #[error("domain error: {0}")]
    Domain(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Genus `g` curve with a `mu_r` gerbe structure, and the degrees of the
/// restrictions of `K_S` and `K_S^2` (`g - 1` and `2g - 2`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurveModel {
    genus: u32,
    gerbe: u32,
}

impl CurveModel {
    pub fn new(genus: u32, gerbe: u32) -> Result<Self, TautError> {
        if gerbe == 0 {
            return Err(TautError::Domain("gerbe order must be positive".into()));
        }
        Ok(CurveModel { genus, gerbe })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn gerbe(&self) -> u32 {
        self.gerbe
    }

    pub fn deg_k(&self) -> i64 {
        self.genus as i64 - 1
    }

    pub fn deg_k2(&self) -> i64 {
        2 * self.deg_k()
    }

    /// `r^n`, the pullback factor of `omega` and `theta` to the gerby Hilbert scheme.
    fn gerbe_scale(&self, n: u32) -> Rational {
        num_traits::pow(int(self.gerbe as i64), n as usize)
    }
}

fn factorial(n: u32) -> Rational {
    (1..=n as i64).map(int).product()
}

fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `int_{C^[n]} P` using `int theta^i omega^{n-i} = i! C(g, i)`.
pub fn integrate(p: &TautPolynomial, n: u32, g: u32) -> Result<Rational, TautError> {
    if p.maxdeg() <= n {
        return Err(TautError::InsufficientWindow {
            maxdeg: p.maxdeg(),
            n,
        });
    }
    Ok((0..=n)
        .map(|i| p.coefficient(i, n - i) * factorial(i) * binomial(g, i))
        .sum())
}

/// Integral over the Hilbert scheme of the gerby curve: the classes pulled
/// back from `C^[n]` are `r^n omega` and `r^n theta`, so every degree-`n`
/// monomial integrates to `1 / r^{n^2}` times its value on `C^[n]`.
pub fn integrate_gerby(p: &TautPolynomial, n: u32, cm: &CurveModel) -> Result<Rational, TautError> {
    let value = integrate(p, n, cm.genus)?;
    Ok(value / num_traits::pow(cm.gerbe_scale(n), n as usize))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChernKind {
    Tangent,
    /// Tautological bundle `L^[n]` of a line bundle of the given degree.
    Bundle {
        degree: i64,
    },
}

/// Chern polynomial `c_s` of `T_{C^[n]}` or `L^[n]`, truncated beyond degree `n`:
///
/// - `c_s(T) = (1 + r^n omega s)^{n+1-g} exp(-s r^n theta / (1 + r^n omega s))`
/// - `c_s(L^[n]) = (1 - r^n omega s)^{n+g-1-deg L} exp(s r^n theta / (1 - r^n omega s))`
pub fn chern_series(kind: ChernKind, cm: &CurveModel, n: u32, s: &Rational) -> TautPolynomial {
    let maxdeg = n + 1;
    let rs = cm.gerbe_scale(n) * s;
    let one = TautPolynomial::one(maxdeg);
    let omega = TautPolynomial::omega(maxdeg);
    let theta = TautPolynomial::theta(maxdeg);
    let g = cm.genus as i64;
    let (base, exponent, theta_sign) = match kind {
        ChernKind::Tangent => (&one + &omega.scale(&rs), n as i64 + 1 - g, -Rational::one()),
        ChernKind::Bundle { degree } => (
            &one - &omega.scale(&rs),
            n as i64 + g - 1 - degree,
            Rational::one(),
        ),
    };
    // base has constant term 1, so both calls succeed
    let inv = base.inverse().expect("constant term 1");
    let arg = &theta.scale(&(rs * theta_sign)) * &inv;
    let power = base.pow_int(exponent).expect("constant term 1");
    &power * &arg.exp().expect("no constant term")
}

/// `int c_{1/2}((K^2)^[n]) c_{-1}(T) c_{-1}(K^[n]) / (c_1(K^[n]) c_1((K^2)^[n]))`
/// over the gerby `C^[n]`, with no prefactor.
pub fn monopole_direct_raw(cm: &CurveModel, n: u32) -> Result<Rational, TautError> {
    let k = ChernKind::Bundle { degree: cm.deg_k() };
    let k2 = ChernKind::Bundle {
        degree: cm.deg_k2(),
    };
    let half = Rational::new(1.into(), 2.into());
    let minus_one = -Rational::one();
    let num = &(&chern_series(k2, cm, n, &half)
        * &chern_series(ChernKind::Tangent, cm, n, &minus_one))
        * &chern_series(k, cm, n, &minus_one);
    let den =
        &chern_series(k, cm, n, &Rational::one()) * &chern_series(k2, cm, n, &Rational::one());
    let ratio = &num * &den.inverse().expect("constant term 1");
    integrate_gerby(&ratio, n, cm)
}

/// The direct integral rescaled by `(-2)^{1-2g} (-1)^n 2^n`, the scalar that
/// separates it from the reduced integrand (see [`monopole_reduced`]).
pub fn monopole_direct(cm: &CurveModel, n: u32) -> Result<Rational, TautError> {
    let scalar = int(-2).pow(1 - 2 * cm.genus as i32) * int(-2).pow(n as i32);
    Ok(monopole_direct_raw(cm, n)? * scalar)
}

/// `int (omega-2)^{n+1-2g} (1+omega)^{n-g} (1-omega)^{-(n+g)} (1-2omega)^g`
/// over the gerby `C^[n]`, after `theta` has been eliminated.
pub fn monopole_reduced(cm: &CurveModel, n: u32) -> Result<Rational, TautError> {
    let trunc = int(n as i64 + 1);
    let g = cm.genus as i64;
    let n_i = n as i64;
    let x = FracExpSeries::from_terms(1, [(1, cm.gerbe_scale(n))], trunc.clone());
    let c = |v: i64| FracExpSeries::constant(int(v), trunc.clone());
    let integrand = &(&(&x - &c(2)).pow_int(n_i + 1 - 2 * g)? * &(&c(1) + &x).pow_int(n_i - g)?)
        * &(&(&c(1) - &x).pow_int(-(n_i + g))? * &(&c(1) - &(&x * &c(2))).pow_int(g)?);
    let top = integrand.coefficient(&int(n_i))?;
    Ok(top / num_traits::pow(cm.gerbe_scale(n), n as usize))
}

/// `sum_{n < order} (-1)^{n+1} I_n q^n` with `I_n` the reduced integral.
pub fn monopole_series(cm: &CurveModel, order: u32) -> Result<FracExpSeries, TautError> {
    if order == 0 {
        return Err(TautError::Domain("series order must be at least 1".into()));
    }
    let terms = (0..order)
        .map(|n| {
            let sign = if n % 2 == 0 { -1 } else { 1 };
            Ok((n as i64, monopole_reduced(cm, n)? * int(sign)))
        })
        .collect::<Result<Vec<_>, TautError>>()?;
    Ok(FracExpSeries::from_terms(1, terms, int(order as i64)))
}

/// `(1-q)^{g-1} (1 + (1-3q) / sqrt((1-q)(1-9q)))^{1-g}` through `q^{order-1}`.
pub fn closed_form(genus: u32, order: u32) -> Result<FracExpSeries, TautError> {
    if order == 0 {
        return Err(TautError::Domain("series order must be at least 1".into()));
    }
    let t = int(order as i64);
    let lin = |a: i64| FracExpSeries::from_terms(1, [(0, int(1)), (1, int(a))], t.clone());
    let root = (&lin(-1) * &lin(-9)).sqrt()?;
    let bracket = &FracExpSeries::one(t.clone()) + &(&lin(-3) * &root.invert()?);
    let g = genus as i64;
    Ok(&lin(-1).pow_int(g - 1)? * &bracket.pow_int(1 - g)?)
}

/// The constant `c` with `a = c * b` coefficientwise, if there is one.
pub fn uniform_ratio(a: &FracExpSeries, b: &FracExpSeries) -> Option<Rational> {
    let window = a.truncation().min(b.truncation()).clone();
    let a = a.truncated_at(&window);
    let b = b.truncated_at(&window);
    let mut ratio: Option<Rational> = None;
    for (e, cb) in b.terms() {
        let ca = a.coefficient(&e).ok()?;
        let r = ca / cb;
        match &ratio {
            Some(prev) if *prev != r => return None,
            _ => ratio = Some(r),
        }
    }
    let ratio = ratio?;
    // every term of a must be accounted for by b
    (a == b.scale(&ratio)).then_some(ratio)
}

/// Both sides of the generating-series identity at one genus and gerbe order.
#[derive(Clone, Debug, PartialEq)]
pub struct MonopoleComparison {
    pub genus: u32,
    pub gerbe: u32,
    pub order: u32,
    pub computed: FracExpSeries,
    pub closed_form: FracExpSeries,
    pub identical: bool,
    /// `computed / closed_form` when the two are proportional.
    pub ratio: Option<Rational>,
}

impl MonopoleComparison {
    pub fn proportional(&self) -> bool {
        self.ratio.as_ref().is_some_and(|r| !r.is_zero())
    }
}

pub fn compare_monopole(cm: &CurveModel, order: u32) -> Result<MonopoleComparison, TautError> {
    let computed = monopole_series(cm, order)?;
    let closed = closed_form(cm.genus, order)?;
    let ratio = uniform_ratio(&computed, &closed);
    Ok(MonopoleComparison {
        genus: cm.genus,
        gerbe: cm.gerbe,
        order,
        identical: computed == closed,
        computed,
        closed_form: closed,
        ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    fn cm(g: u32, r: u32) -> CurveModel {
        CurveModel::new(g, r).unwrap()
    }

    #[test]
    fn basic_integrals() {
        let w2 = TautPolynomial::from_terms([((0, 2), int(1))], 3);
        let tw = TautPolynomial::from_terms([((1, 1), int(1))], 3);
        let t2 = TautPolynomial::from_terms([((2, 0), rat(1, 2))], 3);
        assert_eq!(integrate(&w2, 2, 6).unwrap(), int(1));
        assert_eq!(integrate(&tw, 2, 6).unwrap(), int(6));
        assert_eq!(integrate(&t2, 2, 6).unwrap(), int(15));
    }

    #[test]
    fn integrate_ignores_other_degrees_and_checks_window() {
        let p = TautPolynomial::from_terms([((0, 1), int(5)), ((3, 0), int(2))], 4);
        assert_eq!(integrate(&p, 2, 6).unwrap(), int(0));
        assert_eq!(integrate(&p, 3, 6).unwrap(), int(2 * 6 * 20));
        assert!(matches!(
            integrate(&p, 4, 6),
            Err(TautError::InsufficientWindow { maxdeg: 4, n: 4 })
        ));
    }

    #[test]
    fn tangent_series_at_n_zero_is_one() {
        let t = chern_series(ChernKind::Tangent, &cm(6, 1), 0, &int(1));
        assert_eq!(t, TautPolynomial::one(1));
    }

    #[test]
    fn bundle_series_omega_parts() {
        for r in [1, 2] {
            let c = cm(6, r);
            for n in 0..6u32 {
                let rn = c.gerbe_scale(n);
                let k = chern_series(ChernKind::Bundle { degree: c.deg_k() }, &c, n, &int(1));
                let expected = FracExpSeries::from_terms(
                    1,
                    [(0, int(1)), (1, -rn.clone())],
                    int(n as i64 + 1),
                )
                .pow_int(n as i64)
                .unwrap();
                let got: Vec<_> = k.omega_part();
                for (j, v) in got.iter().enumerate() {
                    assert_eq!(v, &expected.coefficient(&int(j as i64)).unwrap());
                }

                let k2 = chern_series(ChernKind::Bundle { degree: c.deg_k2() }, &c, n, &rat(1, 2));
                let expected = FracExpSeries::from_terms(
                    1,
                    [(0, int(1)), (1, -rn / int(2))],
                    int(n as i64 + 1),
                )
                .pow_int(n as i64 + 1 - 6)
                .unwrap();
                for (j, v) in k2.omega_part().iter().enumerate() {
                    assert_eq!(v, &expected.coefficient(&int(j as i64)).unwrap());
                }
            }
        }
    }

    #[test]
    fn bundle_series_at_zero_is_one() {
        let c = cm(3, 2);
        for n in 0..5 {
            let p = chern_series(ChernKind::Bundle { degree: 7 }, &c, n, &int(0));
            assert_eq!(p, TautPolynomial::one(n + 1));
        }
    }

    #[test]
    fn reduced_values() {
        assert_eq!(monopole_reduced(&cm(0, 1), 0).unwrap(), int(-2));
        assert_eq!(monopole_reduced(&cm(0, 1), 1).unwrap(), int(4));
        assert_eq!(monopole_reduced(&cm(0, 1), 2).unwrap(), int(-22));
        assert_eq!(monopole_reduced(&cm(6, 1), 0).unwrap(), rat(-1, 2048));
    }

    #[test]
    fn direct_values() {
        assert_eq!(monopole_direct(&cm(0, 1), 0).unwrap(), int(-2));
        assert_eq!(monopole_direct(&cm(0, 1), 2).unwrap(), int(-22));
        for g in 0..4 {
            let expected = Rational::from_integer((-2).into()).pow(1 - 2 * g as i32);
            assert_eq!(monopole_direct(&cm(g, 1), 0).unwrap(), expected);
        }
    }

    #[test]
    fn raw_direct_differs_by_a_power_of_two() {
        for g in [0u32, 1, 2] {
            for n in 0..5u32 {
                let raw = monopole_direct_raw(&cm(g, 1), n).unwrap();
                let reduced = monopole_reduced(&cm(g, 1), n).unwrap();
                let sign = if n % 2 == 0 { -1 } else { 1 };
                let factor =
                    Rational::from_integer(2.into()).pow(2 * g as i32 - n as i32 - 1) * int(sign);
                assert_eq!(raw, reduced * factor, "g={g} n={n}");
            }
        }
    }

    #[test]
    fn two_paths_agree_for_small_cases() {
        for g in [0u32, 1, 2] {
            for r in [1u32, 2] {
                for n in 0..5u32 {
                    assert_eq!(
                        monopole_direct(&cm(g, r), n).unwrap(),
                        monopole_reduced(&cm(g, r), n).unwrap(),
                        "g={g} r={r} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn genus_zero_series_matches_closed_form() {
        let s = monopole_series(&cm(0, 1), 7).unwrap();
        let expected = FracExpSeries::from_terms(
            1,
            [2, 4, 22, 168, 1354, 11116, 92446]
                .iter()
                .enumerate()
                .map(|(e, &c)| (e as i64, int(c))),
            int(7),
        );
        assert_eq!(s, expected);
        assert_eq!(closed_form(0, 7).unwrap(), expected);
    }

    #[test]
    fn closed_form_constant_terms() {
        for g in 0..7u32 {
            let c = closed_form(g, 4).unwrap();
            let expected = Rational::from_integer(2.into()).pow(1 - g as i32);
            assert_eq!(c.coefficient(&int(0)).unwrap(), expected);
        }
        assert_eq!(closed_form(1, 9).unwrap(), FracExpSeries::one(int(9)));
    }

    #[test]
    fn higher_genus_is_proportional() {
        for g in [1u32, 2, 6] {
            let cmp = compare_monopole(&cm(g, 1), 8).unwrap();
            let expected = Rational::from_integer(2.into()).pow(-(g as i32));
            assert_eq!(cmp.ratio, Some(expected), "g={g}");
            assert!(!cmp.identical);
        }
        assert!(compare_monopole(&cm(0, 1), 8).unwrap().identical);
    }

    #[test]
    fn uniform_ratio_rejects_non_proportional() {
        let a = FracExpSeries::from_terms(1, [(0, int(2)), (1, int(4))], int(3));
        let b = FracExpSeries::from_terms(1, [(0, int(1)), (1, int(3))], int(3));
        assert_eq!(uniform_ratio(&a, &b), None);
        assert_eq!(uniform_ratio(&a, &a.scale(&rat(1, 3))), Some(int(3)));
    }

    #[test]
    fn zero_order_is_rejected() {
        assert!(monopole_series(&cm(0, 1), 0).is_err());
        assert!(closed_form(0, 0).is_err());
        assert!(CurveModel::new(1, 0).is_err());
    }
}
