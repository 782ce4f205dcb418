use vortspin::special::{bessel_j, bessel_j_prime};

const TABLE: &str = include_str!("data/bessel_reference.csv");

fn rows() -> impl Iterator<Item = (i32, f64, f64, f64)> {
    TABLE.lines().filter(|l| !l.starts_with('#')).map(|l| {
        let f: Vec<&str> = l.split(',').collect();
        (f[0].parse().unwrap(), f[1].parse().unwrap(), f[2].parse().unwrap(), f[3].parse().unwrap())
    })
}

#[test]
fn matches_high_precision_table() {
    let mut worst = 0.0f64;
    for (n, x, value, deriv) in rows() {
        for order in [n, -n] {
            let sign = if order < 0 && n % 2 == 1 { -1.0 } else { 1.0 };
            let err = (bessel_j(order, x).unwrap() - sign * value).abs();
            worst = worst.max(err);
            assert!(err <= 1e-12, "J_{order}({x}) off by {err}");
        }
        if n < 200 {
            let err = (bessel_j_prime(n, x).unwrap() - deriv).abs();
            assert!(err <= 1e-12, "J'_{n}({x}) off by {err}");
        }
    }
    // the budget is 1e-12; the implementation sits near rounding level
    assert!(worst < 1e-14, "worst abs error {worst}");
}

#[test]
fn relative_accuracy_far_below_turning_point() {
    for (n, x, value, _) in rows() {
        if value.abs() > 1e-290 && (x < f64::from(n) / 2.0) {
            let rel = ((bessel_j(n, x).unwrap() - value) / value).abs();
            assert!(rel < 1e-13, "J_{n}({x}) rel {rel}");
        }
    }
}

/// d/dx [x^{n+1} J_{n+1}(x)] = x^{n+1} J_n(x), checked by centered differences.
#[test]
fn raising_identity_by_finite_differences() {
    for n in 0..8 {
        for &x in &[0.3f64, 1.7, 4.0, 12.5, 33.0] {
            let g = |y: f64| y.powi(n + 1) * bessel_j(n + 1, y).unwrap();
            let want = x.powi(n + 1) * bessel_j(n, x).unwrap();
            let scale = want.abs().max(x.powi(n + 1) * 1e-3);
            let err = |h: f64| ((g(x + h) - g(x - h)) / (2.0 * h) - want).abs();
            let h = 1e-2 * x.min(1.0);
            let (e1, e2) = (err(h), err(h / 2.0));
            assert!(e1 / scale < 1e-3, "n={n} x={x}");
            // second order: halving h quarters the error
            if e1 / scale > 1e-9 {
                let ratio = e1 / e2;
                assert!((ratio - 4.0).abs() < 0.2, "n={n} x={x} ratio={ratio}");
            }
        }
    }
}

mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn derivative_identity(n in -30i32..30, x in 0.0f64..50.0) {
            let d = bessel_j_prime(n, x).unwrap();
            let want = (bessel_j(n - 1, x).unwrap() - bessel_j(n + 1, x).unwrap()) / 2.0;
            prop_assert!((d - want).abs() <= 1e-12);
        }

        #[test]
        fn bounded_by_one(n in -200i32..=200, x in 0.0f64..50.0) {
            prop_assert!(bessel_j(n, x).unwrap().abs() <= 1.0 + 1e-15);
        }
    }
}
