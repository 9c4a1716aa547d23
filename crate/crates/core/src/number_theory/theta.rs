use num_traits::Zero;

use super::{CycNumber, NumberTheoryError};
use crate::series::{int, FracExpSeries, Rational};

/// For every `e <= max_norm` and phase `a mod (n + 2)`, the number of
/// `k in Z^n` with `sum_{i <= j} k_i k_j = e` and `k_1 + 2 k_2 + ... + n k_n = a`.
///
/// The form equals `(|k|^2 + (sum k)^2) / 2 >= |k|^2 / 2`, so the box
/// `|k_i| <= ceil(sqrt(2 max_norm))` contains every vector of norm `<= max_norm`.
pub fn theta_lattice_counts(n: usize, max_norm: u64) -> Vec<Vec<u64>> {
    let m = n as i64 + 2;
    let bound = ((2 * max_norm) as f64).sqrt().ceil() as i64;
    let mut counts = vec![vec![0u64; m as usize]; max_norm as usize + 1];
    if n == 0 {
        counts[0][0] = 1;
        return counts;
    }
    let mut k = vec![-bound; n];
    loop {
        let sq: i64 = k.iter().map(|x| x * x).sum();
        let s: i64 = k.iter().sum();
        let norm = (sq + s * s) / 2;
        if norm <= max_norm as i64 {
            let phase: i64 = k
                .iter()
                .enumerate()
                .map(|(i, x)| (i as i64 + 1) * x)
                .sum::<i64>()
                .rem_euclid(m);
            counts[norm as usize][phase as usize] += 1;
        }
        // odometer step
        let mut i = 0;
        loop {
            if i == n {
                return counts;
            }
            if k[i] < bound {
                k[i] += 1;
                break;
            }
            k[i] = -bound;
            i += 1;
        }
    }
}

/// `Theta_n(q) = sum_{k in Z^n} q^{sum_{i <= j} k_i k_j} zeta_{n+2}^{k_1 + 2 k_2 + ... + n k_n}`
/// through `q^max_norm` (truncated at `max_norm + 1`).
///
/// Each coefficient is summed exactly in `Q(zeta_{n+2})`; a coefficient that
/// does not reduce to a rational is reported with its exponent.
pub fn theta_block(n: usize, max_norm: u64) -> Result<FracExpSeries, NumberTheoryError> {
    if n == 0 {
        return Err(NumberTheoryError::Domain("theta block needs n >= 1".into()));
    }
    let m = n as u64 + 2;
    let roots: Vec<CycNumber> = (0..m as i64)
        .map(|a| CycNumber::root(m, a))
        .collect::<Result<_, _>>()?;
    let counts = theta_lattice_counts(n, max_norm);
    let mut terms = Vec::with_capacity(counts.len());
    for (e, per_phase) in counts.iter().enumerate() {
        let mut acc = CycNumber::from_rational(m, Rational::zero())?;
        for (a, &c) in per_phase.iter().enumerate() {
            if c > 0 {
                acc = &acc + &roots[a].scale(&int(c as i64));
            }
        }
        let value = acc.to_rational().ok_or(NumberTheoryError::Irrational {
            n,
            exponent: e as u64,
        })?;
        terms.push((e as i64, value));
    }
    Ok(FracExpSeries::from_terms(
        1,
        terms,
        int(max_norm as i64 + 1),
    ))
}
