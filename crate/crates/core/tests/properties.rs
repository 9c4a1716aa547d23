use proptest::prelude::*;

use vwq_core::format::{from_json, to_json};
use vwq_core::number_theory::eta_power;
use vwq_core::tautological::{integrate, TautPolynomial};
use vwq_core::{int, rat, FracExpSeries, Rational};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

/// Series on a grid of 1/1, 1/2 or 1/4 with a few terms and a window a little
/// past the last term.
fn series() -> impl Strategy<Value = FracExpSeries> {
    (
        prop::sample::select(vec![1u64, 2, 4]),
        prop::collection::vec((-4i64..12, small_rational()), 1..6),
        1i64..6,
    )
        .prop_map(|(d, terms, extra)| {
            let top = terms.iter().map(|(k, _)| *k).max().unwrap();
            FracExpSeries::from_terms(d, terms, rat(top + extra, d as i64))
        })
}

fn nonzero_series() -> impl Strategy<Value = FracExpSeries> {
    series().prop_filter("needs a term", |s| !s.is_zero())
}

/// Restrict both to the smaller window before comparing.
fn same_window(a: &FracExpSeries, b: &FracExpSeries) -> (FracExpSeries, FracExpSeries) {
    let t = a.truncation().min(b.truncation()).clone();
    (a.truncated_at(&t), b.truncated_at(&t))
}

proptest! {
    #[test]
    fn addition_commutes_and_associates(a in series(), b in series(), c in series()) {
        prop_assert_eq!(&a + &b, &b + &a);
        let (l, r) = same_window(&(&(&a + &b) + &c), &(&a + &(&b + &c)));
        prop_assert_eq!(l, r);
    }

    #[test]
    fn multiplication_commutes_and_associates(a in series(), b in series(), c in series()) {
        prop_assert_eq!(&a * &b, &b * &a);
        let (l, r) = same_window(&(&(&a * &b) * &c), &(&a * &(&b * &c)));
        prop_assert_eq!(l, r);
    }

    #[test]
    fn multiplication_distributes(a in series(), b in series(), c in series()) {
        let (l, r) = same_window(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c)));
        prop_assert_eq!(l, r);
    }

    #[test]
    fn inverse_is_inverse(a in nonzero_series()) {
        let prod = &a * &a.invert().unwrap();
        prop_assert_eq!(prod.clone(), FracExpSeries::one(prod.truncation().clone()));
    }

    #[test]
    fn square_root_of_a_square(b in nonzero_series()) {
        let a = &b * &b;
        let root = a.sqrt().unwrap();
        let back = &root * &root;
        let (l, r) = same_window(&back, &a);
        prop_assert_eq!(l, r);
        // positive branch
        let lead = root.valuation().unwrap();
        prop_assert!(root.coefficient(&lead).unwrap() > int(0));
    }

    #[test]
    fn rescale_round_trip(a in series(), s in prop::sample::select(vec![rat(1, 2), rat(2, 1), rat(3, 4), rat(5, 1)])) {
        let back = a.rescale(&s).unwrap().rescale(&s.recip()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn reads_beyond_window_fail(a in series(), k in 0i64..8) {
        let e = a.truncation() + int(k);
        prop_assert!(a.coefficient(&e).is_err());
    }

    #[test]
    fn json_round_trip_is_stable(a in series()) {
        let text = to_json(&a);
        let parsed = from_json(&text).unwrap();
        prop_assert_eq!(to_json(&parsed), text);
        prop_assert_eq!(parsed, a);
    }

    #[test]
    fn integration_is_linear(
        xs in prop::collection::vec(((0u32..4, 0u32..4), small_rational()), 0..8),
        ys in prop::collection::vec(((0u32..4, 0u32..4), small_rational()), 0..8),
        c in small_rational(),
        g in 0u32..7,
    ) {
        let p = TautPolynomial::from_terms(xs, 5);
        let q = TautPolynomial::from_terms(ys, 5);
        for n in 0..5 {
            let lhs = integrate(&(&p + &q.scale(&c)), n, g).unwrap();
            let rhs = integrate(&p, n, g).unwrap() + c.clone() * integrate(&q, n, g).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn eta_powers_cancel(k in -30i64..30, t in 1i64..12) {
        let prod = &eta_power(k, &int(t + 2)).unwrap() * &eta_power(-k, &int(t + 2)).unwrap();
        prop_assert_eq!(prod.clone(), FracExpSeries::one(prod.truncation().clone()));
    }
}
