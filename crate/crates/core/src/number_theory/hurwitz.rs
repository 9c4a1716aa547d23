use num_traits::Zero;

use super::NumberTheoryError;
use crate::series::{rat, Rational};

/// Hurwitz class number `H(D)`.
///
/// Counts reduced positive definite forms `AX^2 + BXY + CY^2` with
/// `B^2 - 4AC = -D` (primitive or not), weighting the class of
/// `a(X^2 + Y^2)` by 1/2 and of `a(X^2 + XY + Y^2)` by 1/3. `H(0) = -1/12`.
pub fn hurwitz(disc: u64) -> Rational {
    if disc == 0 {
        return rat(-1, 12);
    }
    if matches!(disc % 4, 1 | 2) {
        return Rational::zero();
    }
    let d = disc as i128;
    // sixths, so the 1/2 and 1/3 weights stay integral
    let mut sixths: i128 = 0;
    let mut b = d % 2;
    while 3 * b * b <= d {
        let mut a = b.max(1);
        while 4 * a * a <= b * b + d {
            let ac4 = b * b + d;
            if ac4 % (4 * a) == 0 {
                let c = ac4 / (4 * a);
                if c >= a {
                    sixths += if a == b && b == c {
                        2
                    } else if b == 0 && a == c {
                        3
                    } else if b == 0 || a == b || a == c {
                        6
                    } else {
                        12
                    };
                }
            }
            a += 1;
        }
        b += 2;
    }
    rat(sixths as i64, 6)
}

/// `H(0), H(1), ..., H(max)`.
pub fn hurwitz_table(max: u64) -> Vec<Rational> {
    (0..=max).map(hurwitz).collect()
}

/// Number of positive divisors of `n`.
pub fn divisor_count(n: i64) -> Result<u64, NumberTheoryError> {
    if n < 1 {
        return Err(NumberTheoryError::Domain(format!(
            "divisor count needs n >= 1, got {n}"
        )));
    }
    let mut count = 0;
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            count += if d * d == n { 1 } else { 2 };
        }
        d += 1;
    }
    Ok(count)
}
