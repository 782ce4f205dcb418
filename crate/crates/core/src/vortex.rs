//! Vorticity of velocity fields about the z axis.
//!
//! The z-component of the curl is measured two ways: as circulation divided by
//! enclosed area on circles about the axis (no derivatives, so it also sees a
//! singular line at `rho = 0`), and by centered finite differences off-axis.
//! Radial regimes are identified from log-log slopes of `v_phi(rho)`:
//! `+1` is rigid ("bucket") rotation, `-1` a classical whirlpool.

use crate::bilinear::{velocity, VelocityDefinition};
use crate::error::{to_f64, Error, Result};
use crate::scalar::Real;
use crate::spinor::{Field, SpacetimePoint};

/// Quadrature size used when none is given.
pub const DEFAULT_CIRCULATION_POINTS: usize = 256;
/// Minimum quadrature size accepted by [`circulation`].
pub const MIN_CIRCULATION_POINTS: usize = 64;
/// Slope tolerance for labelling a window as bucket or whirlpool.
pub const REGIME_SLOPE_TOLERANCE: f64 = 0.15;
/// Minimum coefficient of determination for a regime label.
pub const REGIME_MIN_R2: f64 = 0.99;
/// Minimum log-spaced samples per decade for a fit window.
pub const MIN_SAMPLES_PER_DECADE: f64 = 12.0;
/// Relative radius shift applied when a sample lands on a density zero.
pub const ZERO_JITTER: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CirculationSample<T> {
    pub radius: T,
    /// `oint v . dt` around the circle of this radius.
    pub circulation: T,
    /// circulation / (pi radius^2)
    pub flux_density: T,
    pub n_points: usize,
}

/// Trapezoidal line integral of `v_phi` around the circle `rho = radius`.
///
/// `sampler(rho, phi)` returns `v_phi` or `None` where it is undefined; the
/// azimuthal grid is then shifted by a fraction of its spacing and retried.
pub fn circulation<T, F>(mut sampler: F, radius: T, n_points: usize) -> Result<CirculationSample<T>>
where
    T: Real,
    F: FnMut(T, T) -> Option<T>,
{
    if !(radius > T::zero()) {
        return Err(Error::InvalidParameter { name: "radius", reason: format!("must be > 0, got {radius}") });
    }
    if n_points < MIN_CIRCULATION_POINTS {
        return Err(Error::InvalidParameter {
            name: "n_points",
            reason: format!("need at least {MIN_CIRCULATION_POINTS}, got {n_points}"),
        });
    }
    let n = T::from_usize(n_points).unwrap();
    let dphi = T::TAU() / n;
    'offsets: for frac in [0.0, 0.5, 0.25, 0.75] {
        let offset = T::lit(frac) * dphi;
        let mut sum = T::zero();
        for i in 0..n_points {
            let phi = offset + T::from_usize(i).unwrap() * dphi;
            match sampler(radius, phi) {
                Some(v) if v.is_finite() => sum = sum + v,
                _ => continue 'offsets,
            }
        }
        let circ = sum * radius * dphi;
        return Ok(CirculationSample {
            radius,
            circulation: circ,
            flux_density: circ / (T::PI() * radius * radius),
            n_points,
        });
    }
    Err(Error::UndefinedVelocity { rho: to_f64(radius) })
}

/// z-component of the curl, `(1/rho) d(rho v_phi)/drho - (1/rho) dv_rho/dphi`,
/// by second-order centered differences. `sampler` returns `(v_rho, v_phi)`.
pub fn curl_fd<T, F>(mut sampler: F, rho: T, phi: T, step: T) -> Result<T>
where
    T: Real,
    F: FnMut(T, T) -> Option<(T, T)>,
{
    if !(step > T::zero()) {
        return Err(Error::InvalidParameter { name: "step", reason: format!("must be > 0, got {step}") });
    }
    if rho < T::lit(4.0) * step {
        return Err(Error::StencilCrossesAxis { rho: to_f64(rho), step: to_f64(step) });
    }
    let undefined = || Error::UndefinedVelocity { rho: to_f64(rho) };
    let two = T::lit(2.0);
    let (_, v_out) = sampler(rho + step, phi).ok_or_else(undefined)?;
    let (_, v_in) = sampler(rho - step, phi).ok_or_else(undefined)?;
    let dphi = step / rho;
    let (vr_plus, _) = sampler(rho, phi + dphi).ok_or_else(undefined)?;
    let (vr_minus, _) = sampler(rho, phi - dphi).ok_or_else(undefined)?;
    let d_rho_vphi = ((rho + step) * v_out - (rho - step) * v_in) / (two * step);
    let d_phi_vrho = (vr_plus - vr_minus) / (two * dphi);
    Ok((d_rho_vphi - d_phi_vrho) / rho)
}

/// Velocity components of a field at `(rho, phi)` in the `z = t = 0` plane.
pub fn field_velocity<T: Real>(
    field: &Field<T>,
    definition: VelocityDefinition,
    rho: T,
    phi: T,
) -> Option<(T, T)> {
    let pt = SpacetimePoint::transverse(rho, phi).ok()?;
    velocity(field, &pt, definition).ok().map(|v| (v.v_rho, v.v_phi))
}

/// Circulation of a field's velocity, nudging the radius off density zeros.
pub fn field_circulation<T: Real>(
    field: &Field<T>,
    definition: VelocityDefinition,
    radius: T,
    n_points: usize,
) -> Result<CirculationSample<T>> {
    let sampler = |r: T, p: T| field_velocity(field, definition, r, p).map(|v| v.1);
    match circulation(sampler, radius, n_points) {
        Err(Error::UndefinedVelocity { .. }) => {
            let nudged = radius * (T::one() + T::lit(ZERO_JITTER));
            circulation(|r: T, p: T| field_velocity(field, definition, r, p).map(|v| v.1), nudged, n_points)
        }
        other => other,
    }
}

/// Azimuthally averaged `v_phi`, i.e. circulation / (2 pi rho).
pub fn mean_v_phi<T: Real>(
    field: &Field<T>,
    definition: VelocityDefinition,
    radius: T,
    n_points: usize,
) -> Result<T> {
    let c = field_circulation(field, definition, radius, n_points)?;
    Ok(c.circulation / (T::TAU() * c.radius))
}

/// `per_decade` log-spaced radii per decade covering `[min, max]`, endpoints included.
pub fn log_radii<T: Real>(min: T, max: T, per_decade: usize) -> Result<Vec<T>> {
    if !(min > T::zero() && max > min) || per_decade == 0 {
        return Err(Error::InvalidParameter {
            name: "radii",
            reason: format!("need 0 < min < max and per_decade >= 1, got [{min}, {max}] / {per_decade}"),
        });
    }
    let decades = (max / min).log10();
    let steps = (decades * T::from_usize(per_decade).unwrap()).ceil().to_usize().unwrap().max(1);
    let ratio = (max / min).ln() / T::from_usize(steps).unwrap();
    Ok((0..=steps)
        .map(|i| if i == steps { max } else { min * (ratio * T::from_usize(i).unwrap()).exp() })
        .collect())
}

/// Least-squares fit `ln y = slope ln x + intercept`; returns `(slope, intercept, r2)`.
pub fn fit_power_law<T: Real>(xs: &[T], ys: &[T]) -> Option<(T, T, T)> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return None;
    }
    let pts: Vec<(T, T)> = xs.iter().zip(ys).map(|(x, y)| (x.ln(), y.abs().ln())).collect();
    if pts.iter().any(|(a, b)| !a.is_finite() || !b.is_finite()) {
        return None;
    }
    let n = T::from_usize(pts.len()).unwrap();
    let mx = pts.iter().fold(T::zero(), |s, p| s + p.0) / n;
    let my = pts.iter().fold(T::zero(), |s, p| s + p.1) / n;
    let (sxx, sxy, syy) = pts.iter().fold((T::zero(), T::zero(), T::zero()), |(a, b, c), &(x, y)| {
        let (dx, dy) = (x - mx, y - my);
        (a + dx * dx, b + dx * dy, c + dy * dy)
    });
    if sxx == T::zero() {
        return None;
    }
    let slope = sxy / sxx;
    let r2 = if syy == T::zero() { T::one() } else { sxy * sxy / (sxx * syy) };
    Some((slope, my - slope * mx, r2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegimeKind {
    /// `v_phi ~ rho`
    Bucket,
    /// `v_phi ~ 1 / rho`
    Whirlpool,
    Transitional,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegimeReport<T> {
    pub window: (T, T),
    pub fitted_slope: T,
    pub regime: RegimeKind,
    pub r2: T,
    pub n_samples: usize,
}

/// Fits the log-log slope of `|v_phi|` inside each window of a radial profile
/// `(rho, v_phi)` and labels the regime.
pub fn classify_profile<T: Real>(profile: &[(T, T)], windows: &[(T, T)]) -> Result<Vec<RegimeReport<T>>> {
    windows
        .iter()
        .map(|&(lo, hi)| {
            let slack = T::lit(1e-9);
            let inside: Vec<(T, T)> = profile
                .iter()
                .copied()
                .filter(|&(r, v)| r >= lo * (T::one() - slack) && r <= hi * (T::one() + slack) && v != T::zero())
                .collect();
            let span = match (inside.first(), inside.last()) {
                (Some(a), Some(b)) if b.0 > a.0 => (b.0 / a.0).log10(),
                _ => T::zero(),
            };
            // a window must itself span the requested range at the required density
            let want_span = if lo > T::zero() { (hi / lo).log10() } else { span };
            let need = ((want_span * T::lit(MIN_SAMPLES_PER_DECADE)).floor().to_usize().unwrap_or(0)).max(3);
            if inside.len() < need {
                return Err(Error::InsufficientSamples {
                    lo: to_f64(lo),
                    hi: to_f64(hi),
                    got: inside.len(),
                    need,
                });
            }
            let xs: Vec<T> = inside.iter().map(|p| p.0).collect();
            let ys: Vec<T> = inside.iter().map(|p| p.1).collect();
            let (slope, _, r2) = fit_power_law(&xs, &ys).ok_or(Error::InsufficientSamples {
                lo: to_f64(lo),
                hi: to_f64(hi),
                got: inside.len(),
                need,
            })?;
            Ok(RegimeReport { window: (lo, hi), fitted_slope: slope, regime: label(slope, r2), r2, n_samples: inside.len() })
        })
        .collect()
}

fn label<T: Real>(slope: T, r2: T) -> RegimeKind {
    let tol = T::lit(REGIME_SLOPE_TOLERANCE);
    if r2 < T::lit(REGIME_MIN_R2) {
        RegimeKind::Transitional
    } else if (slope - T::one()).abs() <= tol {
        RegimeKind::Bucket
    } else if (slope + T::one()).abs() <= tol {
        RegimeKind::Whirlpool
    } else {
        RegimeKind::Transitional
    }
}

/// Local log-log slopes between neighbouring samples, at geometric-mean radii.
pub fn local_slopes<T: Real>(profile: &[(T, T)]) -> Vec<(T, T)> {
    profile
        .windows(2)
        .filter_map(|w| {
            let (r0, v0) = w[0];
            let (r1, v1) = w[1];
            let s = (v1.abs().ln() - v0.abs().ln()) / (r1.ln() - r0.ln());
            s.is_finite().then(|| ((r0 * r1).sqrt(), s))
        })
        .collect()
}

/// Radii where the local slope changes sign from positive to negative going outward.
pub fn slope_crossovers<T: Real>(profile: &[(T, T)]) -> Vec<T> {
    local_slopes(profile)
        .windows(2)
        .filter(|w| w[0].1 > T::zero() && w[1].1 <= T::zero())
        .map(|w| {
            let (r0, s0) = w[0];
            let (r1, s1) = w[1];
            let t = s0 / (s0 - s1);
            (r0.ln() + t * (r1.ln() - r0.ln())).exp()
        })
        .collect()
}

/// Ideal reference flows.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SyntheticVortex<T> {
    /// `v_phi = omega rho`
    Rigid { omega: T },
    /// `v_phi = strength / rho`
    Whirlpool { strength: T },
    /// rigid inside `core`, whirlpool outside, continuous at `core`
    Rankine { omega: T, core: T },
}

impl<T: Real> SyntheticVortex<T> {
    pub fn v_phi(&self, rho: T) -> T {
        match *self {
            SyntheticVortex::Rigid { omega } => omega * rho,
            SyntheticVortex::Whirlpool { strength } => strength / rho,
            SyntheticVortex::Rankine { omega, core } => {
                if rho <= core {
                    omega * rho
                } else {
                    omega * core * core / rho
                }
            }
        }
    }

    /// `(v_rho, v_phi)` sampler for [`curl_fd`].
    pub fn sampler(self) -> impl FnMut(T, T) -> Option<(T, T)> {
        move |rho, _| Some((T::zero(), self.v_phi(rho)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerdictKind {
    /// circulation tends to a nonzero constant: delta-like vorticity on the axis
    Singular,
    /// circulation vanishes like `rho^2`: finite vorticity on the axis
    Regular,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VortexVerdict<T> {
    pub definition: VelocityDefinition,
    pub kind: VerdictKind,
    /// Fitted exponent `p` of `circulation ~ rho^p` over the whole probe range.
    pub circulation_power: T,
    /// Fitted exponent per decade, innermost first.
    pub decade_powers: Vec<T>,
    /// Circulation at the innermost probe radius.
    pub limiting_circulation: T,
    /// Max relative deviation of the circulation from its innermost value.
    pub circulation_spread: T,
    /// Largest contiguous radial range labelled whirlpool by local slope, if any.
    pub whirlpool_window: Option<(T, T)>,
    pub samples: Vec<CirculationSample<T>>,
}

/// Innermost probe radius in units of the inverse mass.
pub const VERDICT_MIN_RADIUS: f64 = 1e-4;
/// Decades probed above [`VERDICT_MIN_RADIUS`].
pub const VERDICT_DECADES: i32 = 3;

/// Extrapolates the circulation toward the axis and decides whether the vortex
/// line is singular for this velocity definition.
pub fn vortex_line_verdict<T: Real>(field: &Field<T>, definition: VelocityDefinition) -> Result<VortexVerdict<T>> {
    let per_decade = 12;
    let r0 = T::lit(VERDICT_MIN_RADIUS) / field.params().mass();
    let decade = T::lit(10.0);
    let r1 = r0 * decade.powi(VERDICT_DECADES);
    let radii = log_radii(r0, r1, per_decade)?;
    let samples = radii
        .iter()
        .map(|&r| field_circulation(field, definition, r, DEFAULT_CIRCULATION_POINTS))
        .collect::<Result<Vec<_>>>()?;

    let fit = |lo: T, hi: T| -> Option<T> {
        let sel: Vec<&CirculationSample<T>> = samples
            .iter()
            .filter(|s| s.radius >= lo * T::lit(0.999_999) && s.radius <= hi * T::lit(1.000_001))
            .collect();
        let xs: Vec<T> = sel.iter().map(|s| s.radius).collect();
        let ys: Vec<T> = sel.iter().map(|s| s.circulation).collect();
        fit_power_law(&xs, &ys).map(|f| f.0)
    };
    let power = fit(r0, r1).unwrap_or(T::nan());
    let decade_powers: Vec<T> = (0..VERDICT_DECADES)
        .map(|d| {
            let lo = r0 * decade.powi(d);
            fit(lo, lo * decade).unwrap_or(T::nan())
        })
        .collect();
    let limiting = samples[0].circulation;
    let spread = samples.iter().fold(T::zero(), |m, s| {
        let d = if limiting == T::zero() { T::infinity() } else { ((s.circulation - limiting) / limiting).abs() };
        m.max(d)
    });

    let agree = decade_powers.iter().all(|p| (*p - power).abs() <= T::lit(0.1));
    let kind = if !power.is_finite() || !agree {
        VerdictKind::Inconclusive
    } else if (power - T::lit(2.0)).abs() <= T::lit(0.1) {
        VerdictKind::Regular
    } else if power.abs() <= T::lit(0.05) && limiting != T::zero() {
        VerdictKind::Singular
    } else {
        VerdictKind::Inconclusive
    };

    Ok(VortexVerdict {
        definition,
        kind,
        circulation_power: power,
        decade_powers,
        limiting_circulation: limiting,
        circulation_spread: spread,
        whirlpool_window: whirlpool_window(field, definition, r0).ok().flatten(),
        samples,
    })
}

fn scan_limit<T: Real>(field: &Field<T>) -> Result<T> {
    let kappa = field.params().kappa();
    let l = field.spec().ell().abs().max(1);
    if kappa == T::zero() {
        return Err(Error::InvalidParameter { name: "kappa", reason: "radial scan needs kappa > 0".into() });
    }
    Ok(T::lit(0.5) * T::from_int(l) / kappa)
}

/// Azimuthally averaged `v_phi` on a log grid from `r_min` to half the Bessel radius.
pub fn mean_velocity_profile<T: Real>(
    field: &Field<T>,
    definition: VelocityDefinition,
    r_min: T,
    per_decade: usize,
) -> Result<Vec<(T, T)>> {
    let r_max = scan_limit(field)?;
    log_radii(r_min, r_max, per_decade)?
        .into_iter()
        .map(|r| mean_v_phi(field, definition, r, MIN_CIRCULATION_POINTS).map(|v| (r, v)))
        .collect()
}

fn whirlpool_window<T: Real>(field: &Field<T>, definition: VelocityDefinition, r_min: T) -> Result<Option<(T, T)>> {
    let profile = mean_velocity_profile(field, definition, r_min, 12)?;
    let tol = T::lit(REGIME_SLOPE_TOLERANCE);
    let mut best: Option<(T, T)> = None;
    let mut run: Option<(T, T)> = None;
    for (r, s) in local_slopes(&profile) {
        if (s + T::one()).abs() <= tol {
            run = Some(run.map_or((r, r), |(a, _)| (a, r)));
            let cur = run.unwrap();
            if best.map_or(true, |(a, b)| cur.1 / cur.0 > b / a) {
                best = Some(cur);
            }
        } else {
            run = None;
        }
    }
    Ok(best.filter(|(a, b)| b > a))
}

/// Radius where the Dirac-current `v_phi` (azimuthal mean) turns over from
/// rigid rotation to whirlpool, located by maximizing `v_phi` between the
/// bracketing grid samples.
pub fn transition_radius_measured<T: Real>(field: &Field<T>) -> Result<T> {
    let def = VelocityDefinition::DiracCurrent;
    let r_min = T::lit(VERDICT_MIN_RADIUS) / field.params().mass();
    let profile = mean_velocity_profile(field, def, r_min, 24)?;
    let slopes = local_slopes(&profile);
    let idx = slopes
        .windows(2)
        .position(|w| w[0].1 > T::zero() && w[1].1 <= T::zero())
        .ok_or(Error::NoCrossover)?;
    // bracket [profile[idx], profile[idx + 2]] contains the maximum
    let mut lo = profile[idx].0.ln();
    let mut hi = profile[idx + 2].0.ln();
    let g = |lr: T| mean_v_phi(field, def, lr.exp(), MIN_CIRCULATION_POINTS).map(|v| v.abs());
    let inv_phi = T::lit(0.618_033_988_749_894_9);
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = g(x1)?;
    let mut f2 = g(x2)?;
    while hi - lo > T::lit(1e-7) {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = g(x2)?;
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = g(x1)?;
        }
    }
    Ok(((lo + hi) / T::lit(2.0)).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn synth(v: SyntheticVortex<f64>) -> impl FnMut(f64, f64) -> Option<f64> {
        move |r, _| Some(v.v_phi(r))
    }

    #[test]
    fn rigid_rotation_circulation() {
        let c = circulation(synth(SyntheticVortex::Rigid { omega: 0.1 }), 2.0, 256).unwrap();
        assert_relative_eq!(c.circulation, 2.0 * PI * 0.1 * 4.0, epsilon = 1e-12);
        assert_relative_eq!(c.circulation, 2.513_274_122_871_834_6, epsilon = 1e-12);
        assert_relative_eq!(c.flux_density, 0.2, epsilon = 1e-12);
    }

    #[test]
    fn whirlpool_circulation_is_radius_independent() {
        for &r in &[1e-3, 0.5, 7.0] {
            let c = circulation(synth(SyntheticVortex::Whirlpool { strength: 0.5 }), r, 64).unwrap();
            assert_relative_eq!(c.circulation, PI, epsilon = 1e-12);
        }
    }

    #[test]
    fn circulation_rejects_bad_input() {
        let s = synth(SyntheticVortex::Rigid { omega: 1.0 });
        assert!(circulation(s, 0.0, 256).is_err());
        let s = synth(SyntheticVortex::Rigid { omega: 1.0 });
        assert!(circulation(s, 1.0, 16).is_err());
        assert!(matches!(circulation(|_, _| None::<f64>, 1.0, 64), Err(Error::UndefinedVelocity { .. })));
    }

    #[test]
    fn circulation_shifts_grid_around_isolated_hole() {
        // undefined exactly at phi = 0
        let c = circulation(|r: f64, p: f64| if p == 0.0 { None } else { Some(0.3 * r) }, 1.0, 64).unwrap();
        assert_relative_eq!(c.circulation, 2.0 * PI * 0.3, epsilon = 1e-12);
    }

    #[test]
    fn curl_of_reference_flows() {
        let rigid = SyntheticVortex::Rigid { omega: 0.7f64 };
        assert_relative_eq!(curl_fd(rigid.sampler(), 3.0, 0.2, 1e-3).unwrap(), 1.4, epsilon = 1e-10);
        let whirl = SyntheticVortex::Whirlpool { strength: 2.0f64 };
        assert!(curl_fd(whirl.sampler(), 3.0, 0.2, 1e-3).unwrap().abs() < 1e-8);
        assert!(matches!(
            curl_fd(rigid.sampler(), 0.003, 0.0, 1e-3),
            Err(Error::StencilCrossesAxis { .. })
        ));
    }

    #[test]
    fn log_grid_density() {
        let r = log_radii(1e-3, 1.0, 12).unwrap();
        assert_eq!(r.len(), 37);
        assert_eq!(r[0], 1e-3);
        assert_eq!(*r.last().unwrap(), 1.0);
        assert!(log_radii(0.0, 1.0, 12).is_err());
    }

    #[test]
    fn rankine_profile() {
        let v = SyntheticVortex::Rankine { omega: 1.0, core: 2.0 };
        let profile: Vec<(f64, f64)> = log_radii(0.01, 100.0, 12).unwrap().into_iter().map(|r| (r, v.v_phi(r))).collect();
        let cross = slope_crossovers(&profile);
        assert_eq!(cross.len(), 1);
        assert!((cross[0] / 2.0 - 1.0).abs() < 0.25);
        let rep = classify_profile(&profile, &[(0.01, 1.0), (4.0, 100.0)]).unwrap();
        assert_eq!(rep[0].regime, RegimeKind::Bucket);
        assert_eq!(rep[1].regime, RegimeKind::Whirlpool);
        assert_relative_eq!(rep[0].fitted_slope, 1.0, epsilon = 1e-12);
        assert_relative_eq!(rep[1].fitted_slope, -1.0, epsilon = 1e-12);
    }

    #[test]
    fn classify_needs_samples() {
        let profile: Vec<(f64, f64)> = log_radii(0.01, 1.0, 4).unwrap().into_iter().map(|r| (r, r)).collect();
        assert!(matches!(classify_profile(&profile, &[(0.01, 1.0)]), Err(Error::InsufficientSamples { .. })));
    }

    #[test]
    fn power_law_fit() {
        let xs = [1.0, 2.0, 4.0, 8.0];
        let ys: Vec<f64> = xs.iter().map(|x: &f64| 3.0 * x.powf(-1.5)).collect();
        let (s, i, r2) = fit_power_law(&xs, &ys).unwrap();
        assert_relative_eq!(s, -1.5, epsilon = 1e-12);
        assert_relative_eq!(i, 3f64.ln(), epsilon = 1e-12);
        assert_relative_eq!(r2, 1.0, epsilon = 1e-12);
        assert!(fit_power_law(&[1.0], &[1.0]).is_none());
    }
}
