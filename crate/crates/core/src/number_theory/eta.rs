use crate::series::{int, rat, FracExpSeries, Rational, SeriesError};

/// `prod_{n >= 1} (1 - q^n)` below `trunc`, from the pentagonal number theorem.
pub fn euler_product(trunc: &Rational) -> FracExpSeries {
    let mut terms = Vec::new();
    let mut j: i64 = 0;
    loop {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let p_plus = j * (3 * j - 1) / 2;
        let p_minus = j * (3 * j + 1) / 2;
        if &int(p_plus) >= trunc && &int(p_minus) >= trunc {
            break;
        }
        terms.push((p_plus, int(sign)));
        if j > 0 {
            terms.push((p_minus, int(sign)));
        }
        j += 1;
    }
    FracExpSeries::from_terms(1, terms, trunc.clone())
}

/// `eta(q)^k = q^{k/24} prod (1 - q^n)^k`, truncated at exponent `trunc`.
pub fn eta_power(k: i64, trunc: &Rational) -> Result<FracExpSeries, SeriesError> {
    let lead = rat(k, 24);
    if trunc <= &lead {
        return Err(SeriesError::EmptyWindow {
            exponent: Box::new(lead),
            truncation: Box::new(trunc.clone()),
        });
    }
    let relative = trunc - &lead;
    let product = euler_product(&relative).pow_int(k)?;
    Ok(product.shift(&lead))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    /// Naive expansion of prod_{n < N} (1 - q^n) by repeated polynomial products.
    fn product_oracle(n: usize) -> Vec<i64> {
        let mut p = vec![0i64; n];
        p[0] = 1;
        for m in 1..n {
            for e in (m..n).rev() {
                p[e] -= p[e - m];
            }
        }
        p
    }

    /// Partition numbers by the standard dynamic program over part sizes.
    fn partitions(n: usize) -> Vec<i64> {
        let mut p = vec![0i64; n];
        p[0] = 1;
        for part in 1..n {
            for e in part..n {
                p[e] += p[e - part];
            }
        }
        p
    }

    #[test]
    fn eta_matches_product_expansion() {
        let n = 40;
        let oracle = product_oracle(n);
        let eta = eta_power(1, &(int(n as i64) + rat(1, 24))).unwrap();
        for (e, &c) in oracle.iter().enumerate() {
            let got = eta.coefficient(&(int(e as i64) + rat(1, 24))).unwrap();
            assert_eq!(got, int(c), "q^{e}");
        }
        // 1 - q - q^2 + q^5 + q^7 - ...
        assert_eq!(&oracle[..8], &[1, -1, -1, 0, 0, 1, 0, 1]);
    }

    #[test]
    fn eta_zero_is_one() {
        assert_eq!(eta_power(0, &int(5)).unwrap(), FracExpSeries::one(int(5)));
    }

    #[test]
    fn inverse_eta_gives_partition_numbers() {
        let n = 30;
        let s = eta_power(-1, &(int(n as i64) - rat(1, 24))).unwrap();
        for (e, &c) in partitions(n).iter().enumerate() {
            let got = s.coefficient(&(int(e as i64) - rat(1, 24))).unwrap();
            assert_eq!(got, int(c), "p({e})");
        }
    }

    #[test]
    fn eta_power_times_inverse_is_one() {
        for k in [1, 3, 7, 24, 56] {
            let t = int(15);
            let a = eta_power(k, &t).unwrap();
            let b = eta_power(-k, &t).unwrap();
            let prod = &a * &b;
            assert_eq!(prod.coefficient(&int(0)).unwrap(), int(1));
            for (e, c) in prod.terms() {
                assert!(e.is_zero() || c.is_zero(), "k={k}: stray q^{e}");
            }
        }
    }

    #[test]
    fn empty_window_is_an_error() {
        assert!(eta_power(24, &int(1)).is_err());
        assert!(eta_power(1, &rat(1, 24)).is_err());
    }
}
