//! Numerical evaluation of Zagier's completed weight-3/2 functions `f_0`,
//! `f_1` and checks of their `S` and `T` transformation laws.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::number_theory::hurwitz;

/// Below this imaginary part the expansions are not trusted.
pub const IM_FLOOR: f64 = 0.1;

/// Sums stop once the bound on the next term falls below this.
pub const TERM_EPS: f64 = 1e-18;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MockError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("Im(tau) = {im} is below the accuracy floor {floor}")]
    Accuracy { im: f64, floor: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct UpperHalfPoint {
    pub re: f64,
    pub im: f64,
}

impl UpperHalfPoint {
    pub fn new(re: f64, im: f64) -> Result<Self, MockError> {
        if im <= 0.0 || !re.is_finite() || !im.is_finite() {
            return Err(MockError::Domain(format!(
                "tau = {re} + {im}i is not in the upper half plane"
            )));
        }
        Ok(UpperHalfPoint { re, im })
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    fn from_complex(z: Complex64) -> Result<Self, MockError> {
        UpperHalfPoint::new(z.re, z.im)
    }

    /// `-1 / tau`
    pub fn s(self) -> Self {
        let z = -self.to_complex().inv();
        UpperHalfPoint { re: z.re, im: z.im }
    }

    /// `tau + 1`
    pub fn t(self) -> Self {
        UpperHalfPoint {
            re: self.re + 1.0,
            im: self.im,
        }
    }

    fn check_floor(self) -> Result<(), MockError> {
        if self.im < IM_FLOOR {
            return Err(MockError::Accuracy {
                im: self.im,
                floor: IM_FLOOR,
            });
        }
        Ok(())
    }
}

impl std::str::FromStr for UpperHalfPoint {
    type Err = MockError;

    /// Parses `RE,IM`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (re, im) = s
            .split_once(',')
            .ok_or_else(|| MockError::Domain(format!("expected RE,IM, got {s:?}")))?;
        let parse = |x: &str| {
            x.trim()
                .parse::<f64>()
                .map_err(|e| MockError::Domain(format!("bad number {x:?}: {e}")))
        };
        UpperHalfPoint::new(parse(re)?, parse(im)?)
    }
}

/// Upper incomplete gamma `Gamma(a, x) e^x x^{-a}` by Lentz's method on the
/// Legendre continued fraction; good for `x > 1`.
fn gamma_cf_scaled(a: f64, x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut b = x + 1.0 - a;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..500 {
        let an = -(i as f64) * (i as f64 - a);
        b += 2.0;
        d = an * d + b;
        if d.abs() < TINY {
            d = TINY;
        }
        c = b + an / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < 1e-16 {
            break;
        }
    }
    h
}

/// `e^t beta(t)`, bounded by `1/(8 pi)` and free of cancellation.
pub fn beta_scaled(t: f64) -> Result<f64, MockError> {
    if t.is_nan() || t < 0.0 {
        return Err(MockError::Domain(format!("beta needs t >= 0, got {t}")));
    }
    if t == 0.0 {
        return Ok(1.0 / (8.0 * PI));
    }
    if t <= 2.0 {
        let closed = (-t).exp() - (PI * t).sqrt() * libm::erfc(t.sqrt());
        return Ok(t.exp() * closed / (8.0 * PI));
    }
    // int_1^inf u^{-3/2} e^{-ut} du = t^{1/2} Gamma(-1/2, t)
    Ok(gamma_cf_scaled(-0.5, t) / (16.0 * PI))
}

/// `beta(t) = (1/16pi) int_1^inf u^{-3/2} e^{-ut} du
///          = (e^{-t} - sqrt(pi t) erfc(sqrt t)) / (8 pi)`.
pub fn beta(t: f64) -> Result<f64, MockError> {
    Ok(beta_scaled(t)? * (-t).exp())
}

/// `q^x = exp(2 pi i x tau)`.
fn q_pow(tau: Complex64, x: f64) -> Complex64 {
    (Complex64::new(0.0, 2.0 * PI * x) * tau).exp()
}

/// `beta(4 pi x tau_2) q^{-x}`, written as `e^t beta(t) conj(q)^x`.
fn completion_term(tau: Complex64, x: f64) -> Result<Complex64, MockError> {
    let t = 4.0 * PI * x * tau.im;
    Ok(q_pow(tau, x).conj() * beta_scaled(t)?)
}

fn h_f64(d: u64) -> f64 {
    hurwitz(d).to_f64().expect("finite class number")
}

/// Values of one of the two functions with the number of terms used.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Evaluation {
    pub holomorphic: Complex64,
    pub completion: Complex64,
    pub holomorphic_terms: u32,
    pub completion_terms: u32,
}

impl Evaluation {
    pub fn value(&self) -> Complex64 {
        self.holomorphic + self.completion
    }
}

/// Term counts needed so the tail bounds drop below [`TERM_EPS`].
fn adaptive_cutoffs(tau: UpperHalfPoint) -> (u32, u32) {
    let aq = (-2.0 * PI * tau.im).exp();
    // H(N) < N, so 3H(4n) |q|^n < 12 n |q|^n
    let mut holo = 1u32;
    while 12.0 * holo as f64 * aq.powi(holo as i32) >= TERM_EPS {
        holo += 1;
    }
    let scale = 12.0 / (8.0 * PI * tau.im.sqrt());
    let mut comp = 1u32;
    while scale * (-2.0 * PI * (comp as f64 - 0.5).powi(2) * tau.im).exp() >= TERM_EPS {
        comp += 1;
    }
    (holo, comp)
}

/// `f_0 = sum_{n>=0} 3H(4n) q^n + 6 tau_2^{-1/2} sum_{n in Z} beta(4 pi n^2 tau_2) q^{-n^2}`
/// with explicit term counts (`n < holo` and `|n| < comp`).
pub fn f0_truncated(tau: UpperHalfPoint, holo: u32, comp: u32) -> Result<Evaluation, MockError> {
    tau.check_floor()?;
    let z = tau.to_complex();
    let mut holomorphic = Complex64::new(0.0, 0.0);
    for n in 0..holo {
        holomorphic += q_pow(z, n as f64) * (3.0 * h_f64(4 * n as u64));
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for n in 0..comp {
        let mult = if n == 0 { 1.0 } else { 2.0 };
        sum += completion_term(z, (n as f64).powi(2))? * mult;
    }
    Ok(Evaluation {
        holomorphic,
        completion: sum * (6.0 / tau.im.sqrt()),
        holomorphic_terms: holo,
        completion_terms: comp,
    })
}

/// `f_1 = sum_{n>0} 3H(4n-1) q^{n-1/4}
///      + 6 tau_2^{-1/2} sum_{n in Z} beta(4 pi (n+1/2)^2 tau_2) q^{-(n+1/2)^2}`.
pub fn f1_truncated(tau: UpperHalfPoint, holo: u32, comp: u32) -> Result<Evaluation, MockError> {
    tau.check_floor()?;
    let z = tau.to_complex();
    let mut holomorphic = Complex64::new(0.0, 0.0);
    for n in 1..=holo {
        holomorphic += q_pow(z, n as f64 - 0.25) * (3.0 * h_f64(4 * n as u64 - 1));
    }
    let mut sum = Complex64::new(0.0, 0.0);
    // n and -1-n give the same term
    for n in 0..comp {
        sum += completion_term(z, (n as f64 + 0.5).powi(2))? * 2.0;
    }
    Ok(Evaluation {
        holomorphic,
        completion: sum * (6.0 / tau.im.sqrt()),
        holomorphic_terms: holo,
        completion_terms: comp,
    })
}

pub fn f0_eval(tau: UpperHalfPoint) -> Result<Evaluation, MockError> {
    let (h, c) = adaptive_cutoffs(tau);
    f0_truncated(tau, h, c)
}

pub fn f1_eval(tau: UpperHalfPoint) -> Result<Evaluation, MockError> {
    let (h, c) = adaptive_cutoffs(tau);
    f1_truncated(tau, h, c)
}

pub fn f0(tau: UpperHalfPoint) -> Result<Complex64, MockError> {
    Ok(f0_eval(tau)?.value())
}

pub fn f1(tau: UpperHalfPoint) -> Result<Complex64, MockError> {
    Ok(f1_eval(tau)?.value())
}

/// `(tau / i)^{3/2}` on the principal branch.
pub fn automorphy_factor(tau: UpperHalfPoint) -> Complex64 {
    (tau.to_complex() / Complex64::i()).powf(1.5)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TransformReport {
    pub check: String,
    pub tau: UpperHalfPoint,
    pub lhs: [Complex64; 2],
    pub rhs: [Complex64; 2],
    pub residual: f64,
    /// Holomorphic and completion term counts of every evaluation, in order.
    pub cutoffs: Vec<u32>,
    pub tol: f64,
    pub pass: bool,
    /// The sign that fits best, when the law holds only up to sign.
    pub sign: Option<i8>,
    /// `lhs / rhs` of the first component, when the law is a scalar identity.
    pub ratio: Option<Complex64>,
}

fn check_tol(tol: f64) -> Result<(), MockError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(MockError::Domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    Ok(())
}

fn residual(lhs: &[Complex64; 2], rhs: &[Complex64; 2]) -> f64 {
    (lhs[0] - rhs[0]).norm().max((lhs[1] - rhs[1]).norm())
}

fn cutoffs_of(evals: &[&Evaluation]) -> Vec<u32> {
    evals
        .iter()
        .flat_map(|e| [e.holomorphic_terms, e.completion_terms])
        .collect()
}

fn report(
    check: &str,
    tau: UpperHalfPoint,
    lhs: [Complex64; 2],
    rhs: [Complex64; 2],
    evals: &[&Evaluation],
    tol: f64,
) -> TransformReport {
    let r = residual(&lhs, &rhs);
    TransformReport {
        check: check.to_string(),
        tau,
        lhs,
        rhs,
        residual: r,
        cutoffs: cutoffs_of(evals),
        tol,
        pass: r < tol,
        sign: None,
        ratio: None,
    }
}

/// The vector `(tau/i)^{3/2} (-1/sqrt 2) [[1, 1], [1, -1]] (f_0, f_1)(tau)`.
fn s_image(tau: UpperHalfPoint, v: [Complex64; 2]) -> [Complex64; 2] {
    let k = automorphy_factor(tau) * (-1.0 / 2f64.sqrt());
    [k * (v[0] + v[1]), k * (v[0] - v[1])]
}

/// `(f_0, f_1)(-1/tau)` against the S-matrix image of `(f_0, f_1)(tau)`.
pub fn check_s_matrix(tau: UpperHalfPoint, tol: f64) -> Result<TransformReport, MockError> {
    check_tol(tol)?;
    let s = tau.s();
    let (a0, a1) = (f0_eval(s)?, f1_eval(s)?);
    let (b0, b1) = (f0_eval(tau)?, f1_eval(tau)?);
    let lhs = [a0.value(), a1.value()];
    let rhs = s_image(tau, [b0.value(), b1.value()]);
    Ok(report(
        "s-matrix",
        tau,
        lhs,
        rhs,
        &[&a0, &a1, &b0, &b1],
        tol,
    ))
}

/// Applies the S-matrix law twice, from `tau` to `-1/tau` and back; the
/// automorphy factors must multiply to 1 on the principal branch.
pub fn check_double_s(tau: UpperHalfPoint, tol: f64) -> Result<TransformReport, MockError> {
    check_tol(tol)?;
    let s = UpperHalfPoint::from_complex(-tau.to_complex().inv())?;
    let (b0, b1) = (f0_eval(tau)?, f1_eval(tau)?);
    let once = s_image(tau, [b0.value(), b1.value()]);
    let twice = s_image(s, once);
    Ok(report(
        "double-s",
        tau,
        [b0.value(), b1.value()],
        twice,
        &[&b0, &b1],
        tol,
    ))
}

/// `f_0(tau + 1) = f_0(tau)` and `f_1(tau + 1) = e^{-i pi/2} f_1(tau)`.
pub fn check_t_periodicity(tau: UpperHalfPoint, tol: f64) -> Result<TransformReport, MockError> {
    check_tol(tol)?;
    let t = tau.t();
    let (a0, a1) = (f0_eval(t)?, f1_eval(t)?);
    let (b0, b1) = (f0_eval(tau)?, f1_eval(tau)?);
    let phase = Complex64::from_polar(1.0, -PI / 2.0);
    let lhs = [a0.value(), a1.value()];
    let rhs = [b0.value(), phase * b1.value()];
    Ok(report(
        "t-periodicity",
        tau,
        lhs,
        rhs,
        &[&a0, &a1, &b0, &b1],
        tol,
    ))
}

/// `Z_0(-1/tau, SU(2))` against `2^{-3/2} (tau/i)^{3/2} Z_0(tau, SU(2)/Z_2)` up to sign.
///
/// The completed counterparts are `f_0` for the `SU(2)` side and
/// `(f_0 + f_1)/2` for the `SU(2)/Z_2` side: `q^{-2} Z_{0,0}` and
/// `q^{-15/4} Z_{0,1}` carry the even- and odd-type class-number sums, and
/// the divisor term is dropped. The second components carry the same data
/// for the pair `(f_1, (f_0 - f_1)/2)`.
pub fn check_sduality_p2(tau: UpperHalfPoint, tol: f64) -> Result<TransformReport, MockError> {
    check_tol(tol)?;
    let s = tau.s();
    let (a0, a1) = (f0_eval(s)?, f1_eval(s)?);
    let (b0, b1) = (f0_eval(tau)?, f1_eval(tau)?);
    let k = automorphy_factor(tau) * 2f64.powf(-1.5);
    let lhs = [a0.value(), a1.value()];
    let plus = [
        k * (b0.value() + b1.value()) / 2.0,
        k * (b0.value() - b1.value()) / 2.0,
    ];
    let minus = [-plus[0], -plus[1]];
    let (sign, rhs) = if residual(&lhs, &plus) <= residual(&lhs, &minus) {
        (1, plus)
    } else {
        (-1, minus)
    };
    let mut rep = report("sduality-p2", tau, lhs, rhs, &[&a0, &a1, &b0, &b1], tol);
    rep.sign = Some(sign);
    rep.ratio = Some(lhs[0] / plus[0]);
    Ok(rep)
}
