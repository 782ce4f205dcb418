//! Cylindrical Bessel functions of the first kind for integer order.
//!
//! Small arguments use the ascending power series. Everything else goes
//! through Miller's backward recurrence normalized with the Neumann sum
//! `J_0 + 2 (J_2 + J_4 + ...) = 1`, which is stable for every order because
//! `J_n` is the minimal solution of the three-term recurrence.

use crate::error::{to_f64, Error, Result};
use crate::scalar::Real;

/// Largest supported `|order|`.
pub const MAX_ORDER: i32 = 200;

fn check_args<T: Real>(order: i32, x: T) -> Result<()> {
    if order.abs() > MAX_ORDER {
        return Err(Error::OrderOutOfRange(order));
    }
    if !(x >= T::zero()) || !x.is_finite() {
        return Err(Error::NegativeArgument(to_f64(x)));
    }
    Ok(())
}

#[inline]
fn reflect<T: Real>(order: i32, value: T) -> T {
    if order < 0 && order % 2 != 0 {
        -value
    } else {
        value
    }
}

/// Series is used while the cancellation factor `~exp(x^2 / (2 (n + 1)))` stays below ~1.7.
#[inline]
fn series_ok<T: Real>(order: u32, x: T) -> bool {
    x * x <= T::from_u32(order + 1).unwrap()
}

fn series<T: Real>(order: u32, x: T) -> T {
    let half = x / T::lit(2.0);
    let mut lead = T::one();
    for i in 1..=order {
        lead = lead * half / T::from_u32(i).unwrap();
    }
    if lead == T::zero() {
        return T::zero();
    }
    let q = half * half;
    let mut term = T::one();
    let mut sum = T::one();
    for k in 1..400u32 {
        term = -term * q / (T::from_u32(k).unwrap() * T::from_u32(order + k).unwrap());
        sum = sum + term;
        if term.abs() <= T::epsilon() * T::lit(0.5) * sum.abs() {
            break;
        }
    }
    lead * sum
}

/// `J_0(x) ..= J_nmax(x)` by Miller's algorithm, `x > 0`.
fn miller<T: Real>(nmax: u32, x: T) -> Vec<T> {
    let reach = nmax.max(x.ceil().to_u32().unwrap_or(u32::MAX));
    let extra = 20 + (40.0 * f64::from(reach)).sqrt() as u32;
    let start = 2 * ((reach + extra) / 2 + 1);

    let big = T::max_value().sqrt();
    let two_over_x = T::lit(2.0) / x;
    let mut out = vec![T::zero(); nmax as usize + 1];
    let mut above = T::zero();
    let mut current = T::min_positive_value().sqrt();
    let mut norm = T::zero();
    // Walk n = start down to 1; `current` holds the unnormalized J_n.
    for n in (1..=start).rev() {
        if n <= nmax {
            out[n as usize] = current;
        }
        if n % 2 == 0 {
            norm = norm + current;
        }
        let below = T::from_u32(n).unwrap() * two_over_x * current - above;
        above = current;
        current = below;
        if current.abs() > big {
            let s = big.recip();
            current = current * s;
            above = above * s;
            norm = norm * s;
            for v in out.iter_mut() {
                *v = *v * s;
            }
        }
    }
    // current is now J_0.
    out[0] = current;
    let scale = (current + T::lit(2.0) * norm).recip();
    for v in out.iter_mut() {
        *v = *v * scale;
    }
    out
}

/// `J_order(x)` for `x >= 0`, `|order| <= 200`.
pub fn bessel_j<T: Real>(order: i32, x: T) -> Result<T> {
    check_args(order, x)?;
    let n = order.unsigned_abs();
    if x == T::zero() {
        return Ok(if n == 0 { T::one() } else { T::zero() });
    }
    let v = if series_ok(n, x) {
        series(n, x)
    } else {
        miller(n, x)[n as usize]
    };
    Ok(reflect(order, v))
}

/// `J_lo(x) ..= J_hi(x)` in one sweep. Orders may be negative.
pub fn bessel_j_span<T: Real>(lo: i32, hi: i32, x: T) -> Result<Vec<T>> {
    assert!(lo <= hi, "empty order span");
    check_args(lo, x)?;
    check_args(hi, x)?;
    let nmax = lo.unsigned_abs().max(hi.unsigned_abs());
    let table: Vec<T> = if x == T::zero() {
        let mut t = vec![T::zero(); nmax as usize + 1];
        t[0] = T::one();
        t
    } else if series_ok(0, x) {
        (0..=nmax).map(|n| series(n, x)).collect()
    } else {
        miller(nmax, x)
    };
    Ok((lo..=hi)
        .map(|n| reflect(n, table[n.unsigned_abs() as usize]))
        .collect())
}

/// `J_order'(x) = (J_{order-1}(x) - J_{order+1}(x)) / 2`.
pub fn bessel_j_prime<T: Real>(order: i32, x: T) -> Result<T> {
    check_args(order, x)?;
    if order.abs() >= MAX_ORDER {
        return Err(Error::OrderOutOfRange(order));
    }
    let v = bessel_j_span(order - 1, order + 1, x)?;
    Ok((v[0] - v[2]) / T::lit(2.0))
}

/// Leading small-argument term `(x/2)^n / n!`.
pub fn bessel_small_arg<T: Real>(order: i32, x: T) -> Result<T> {
    if order < 0 {
        return Err(Error::InvalidParameter {
            name: "order",
            reason: format!("small-argument form needs order >= 0, got {order}"),
        });
    }
    check_args(order, x)?;
    let half = x / T::lit(2.0);
    Ok((1..=order).fold(T::one(), |acc, i| acc * half / T::from_int(i)))
}

/// A Bessel value together with its derivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselEval<T> {
    pub order: i32,
    pub argument: T,
    pub value: T,
    pub derivative: T,
}

impl<T: Real> BesselEval<T> {
    pub fn new(order: i32, x: T) -> Result<Self> {
        check_args(order, x)?;
        if order.abs() >= MAX_ORDER {
            return Err(Error::OrderOutOfRange(order));
        }
        let v = bessel_j_span(order - 1, order + 1, x)?;
        Ok(Self {
            order,
            argument: x,
            value: v[1],
            derivative: (v[0] - v[2]) / T::lit(2.0),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// Independent ascending series with a fixed 40 terms.
    fn series_oracle(n: u32, x: f64) -> f64 {
        let mut fact_n = 1.0;
        for i in 1..=n {
            fact_n *= f64::from(i);
        }
        let mut sum = 0.0;
        let mut kf = 1.0;
        let mut nkf = fact_n;
        for k in 0..40u32 {
            if k > 0 {
                kf *= f64::from(k);
                nkf *= f64::from(n + k);
            }
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sum += sign * (x / 2.0).powi((2 * k + n) as i32) / (kf * nkf);
        }
        sum
    }

    #[test]
    fn values_at_origin() {
        assert_eq!(bessel_j(0, 0.0).unwrap(), 1.0);
        assert_eq!(bessel_j(3, 0.0).unwrap(), 0.0);
        assert_eq!(bessel_j(-2, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn order_two_small_argument() {
        let v = bessel_j(2, 0.1).unwrap();
        assert_relative_eq!(v, series_oracle(2, 0.1), max_relative = 1e-15);
        assert_relative_eq!(v, 1.248_958_658_799_919e-3, max_relative = 1e-14);
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(bessel_j_prime(0, 0.0).unwrap(), 0.0);
        assert_eq!(bessel_j_prime(1, 0.0).unwrap(), 0.5);
        // d/dx of the series oracle, term by term
        let x: f64 = 1.0;
        let mut d = 0.0;
        let mut kf = 1.0;
        let mut nkf = 2.0;
        for k in 0..30u32 {
            if k > 0 {
                kf *= f64::from(k);
                nkf *= f64::from(2 + k);
            }
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let p = (2 * k + 2) as i32;
            d += sign * f64::from(p) / 2.0 * (x / 2.0).powi(p - 1) / (kf * nkf);
        }
        assert_relative_eq!(bessel_j_prime(2, x).unwrap(), d, epsilon = 1e-15);
    }

    #[test]
    fn small_argument_form() {
        assert_relative_eq!(bessel_small_arg(1, 0.01).unwrap(), 0.005, max_relative = 1e-15);
        assert_relative_eq!(bessel_small_arg(3, 0.2).unwrap(), 1.0e-3 / 6.0, max_relative = 1e-14);
        assert_eq!(bessel_small_arg(0, 0.0).unwrap(), 1.0);
        assert!(bessel_small_arg(-1, 0.1).is_err());
        for &(n, x) in &[(1, 0.3f64), (3, 1.0), (5, 2.0), (2, 0.05)] {
            // alternating series: the error is bounded by the first omitted term
            let exact = bessel_j(n, x).unwrap();
            let lead = bessel_small_arg(n, x).unwrap();
            let rel = ((lead - exact) / lead).abs();
            assert!(rel <= x * x / (4.0 * f64::from(n + 1)), "n={n} x={x} rel={rel}");
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert_eq!(bessel_j(1, -0.5), Err(Error::NegativeArgument(-0.5)));
        assert!(bessel_j(201, 1.0).is_err());
        assert!(bessel_j(-201, 1.0).is_err());
        assert!(bessel_j(0, f64::NAN).is_err());
        assert!(bessel_j_prime(200, 1.0).is_err());
    }

    #[test]
    fn reflection_grid() {
        for n in 0..=50 {
            for &x in &[0.1, 1.0, 10.0, 40.0] {
                let pos = bessel_j(n, x).unwrap();
                let neg = bessel_j(-n, x).unwrap();
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                assert_eq!(neg, sign * pos);
            }
        }
    }

    #[test]
    fn recurrence_residual() {
        for i in 0..=60 {
            let x = 1e-4 * 10f64.powf(f64::from(i) * (50f64 / 1e-4).log10() / 60.0);
            for n in 1..=30 {
                let v = bessel_j_span(n - 1, n + 1, x).unwrap();
                let res = (v[0] + v[2] - 2.0 * f64::from(n) / x * v[1]).abs();
                assert!(res <= 1e-12 * v[1].abs().max(1.0), "n={n} x={x} res={res}");
            }
        }
    }

    #[test]
    fn span_matches_single_evaluations() {
        for &x in &[0.0f64, 0.5, 3.0, 27.5, 50.0] {
            let span = bessel_j_span(-4, 12, x).unwrap();
            for (i, n) in (-4..=12).enumerate() {
                let single = bessel_j(n, x).unwrap();
                assert!((span[i] - single).abs() <= 1e-15, "n={n} x={x}");
            }
        }
    }

    #[test]
    fn eval_bundle() {
        let e = BesselEval::new(3, 2.5).unwrap();
        assert_relative_eq!(e.value, bessel_j(3, 2.5).unwrap(), max_relative = 1e-15);
        assert_relative_eq!(e.derivative, bessel_j_prime(3, 2.5).unwrap(), epsilon = 1e-16);
    }

    #[test]
    fn single_precision_matches_double() {
        for &x in &[0.3f32, 2.0, 9.0] {
            let a = bessel_j(2, x).unwrap();
            let b = bessel_j(2, f64::from(x)).unwrap();
            assert!((f64::from(a) - b).abs() < 1e-6);
        }
    }
}
