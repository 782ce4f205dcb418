//! Pointwise checks of the scenario's field against exact identities.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use vortspin::bilinear::{densities, densities_of, VelocityDefinition};
use vortspin::spinor::{dirac_residual_of, to_weyl, weyl_null_coefficient, Family};
use vortspin::{Beam, Complex, Point, Solution, WaveField};

use crate::error::{CliError, CliResult};
use crate::format::{json_text, num, obj};
use crate::scenario::{Format, Scenario};

pub const DIRAC_RESIDUAL_MAX: f64 = 1e-12;
pub const CONSERVATION_MAX: f64 = 1e-8;
pub const MIDPOINT_MAX: f64 = 1e-12;
pub const CAUSALITY_SLACK: f64 = 1e-12;
pub const CANONICAL_VZ_MAX: f64 = 1e-13;
pub const WEYL_ZERO_MAX: f64 = 1e-13;
pub const PLANE_WAVE_MAX: f64 = 1e-13;
pub const DEFAULT_POINTS: usize = 200;
/// Random points are drawn with `rho` log-uniform in this range, clipped to the scenario grid.
pub const RHO_RANGE: (f64, f64) = (1e-3, 50.0);

#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    pub seed: Option<u64>,
    /// Scale bispinor component `.0` by `.1` before the residual check.
    pub corrupt: Option<(usize, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub value: f64,
    pub threshold: f64,
    pub informational: bool,
    pub note: Option<&'static str>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.value.is_finite() && self.value <= self.threshold
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub scenario: String,
    pub family: &'static str,
    pub seed: u64,
    pub points: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.informational || c.passed())
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| !c.informational && !c.passed()).map(|c| c.name).collect()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                obj([
                    ("name", Value::String(c.name.into())),
                    ("value", num(c.value)),
                    ("threshold", num(c.threshold)),
                    ("pass", Value::Bool(c.passed())),
                    ("informational", Value::Bool(c.informational)),
                    ("note", c.note.map_or(Value::Null, |n| Value::String(n.into()))),
                ])
            })
            .collect();
        json_text(&obj([
            ("scenario", Value::String(self.scenario.clone())),
            ("family", Value::String(self.family.into())),
            ("seed", Value::from(self.seed)),
            ("points", Value::from(self.points)),
            ("checks", Value::Array(checks)),
            ("pass", Value::Bool(self.passed())),
        ]))
    }
}

fn random_points(r: &mut ChaCha8Rng, n: usize, s: &Scenario) -> Vec<Point> {
    let lo = RHO_RANGE.0.max(s.radii.min);
    let hi = RHO_RANGE.1.min(s.radii.max).max(lo * 10.0);
    (0..n)
        .map(|_| {
            let rho = r.gen_range(lo.ln()..hi.ln()).exp();
            let phi = r.gen_range(0.0..std::f64::consts::TAU);
            Point::new(rho, phi, r.gen_range(-10.0..10.0), r.gen_range(-10.0..10.0)).expect("finite point")
        })
        .collect()
}

/// Relative divergence of the Dirac current by a fourth-order stencil in `rho` and `phi`.
pub fn conservation_residual(field: &WaveField, pt: &Point) -> vortspin::Result<f64> {
    let rho = pt.rho;
    let h = 1e-3 * rho;
    let j = |r: f64, p: f64| -> vortspin::Result<_> {
        Ok(densities(field, &Point::new(r, p, pt.z, pt.t)?)?.current)
    };
    let stencil = |g: &dyn Fn(f64) -> vortspin::Result<f64>, x: f64, h: f64| -> vortspin::Result<f64> {
        Ok((-g(x + 2.0 * h)? + 8.0 * g(x + h)? - 8.0 * g(x - h)? + g(x - 2.0 * h)?) / (12.0 * h))
    };
    let radial = stencil(&|r| Ok(r * j(r, pt.phi)?.rho), rho, h)? / rho;
    let azimuthal = stencil(&|p| Ok(j(rho, p)?.phi), pt.phi, h / rho)? / rho;
    let here = j(rho, pt.phi)?;
    let scale = (here.t + here.spatial_norm()) * (1.0 / rho + field.params().kappa());
    Ok((radial + azimuthal).abs() / scale)
}

fn weyl_probe(spec: &Solution) -> (f64, Complex) {
    let j_z = spec.j_z().unwrap_or(f64::from(spec.ell()) + 0.5);
    let a = if spec.family() == Family::BialynickiBirula && spec.a().norm() > 0.0 { spec.a() } else { Complex::new(1.0, 0.0) };
    (j_z, a)
}

fn weyl_second_component(beam: &Beam, j_z: f64, a: Complex, b: Complex, pts: &[Point]) -> CliResult<f64> {
    let f = WaveField::new(Solution::bialynicki_birula(j_z, a, b, Complex::new(1.0, 0.0))?, *beam)?;
    let mut worst = 0.0f64;
    for pt in pts {
        let w = to_weyl(&f.value(pt)?)?;
        if w.norm() > 0.0 {
            worst = worst.max(w.c[1].norm() / w.norm());
        }
    }
    Ok(worst)
}

fn plane_wave_degeneracy(beam: &Beam) -> CliResult<f64> {
    let k = if beam.k() > 0.0 { beam.k() } else { 1.0 };
    let pw = Beam::new(0.0, k, beam.mass())?;
    let f = WaveField::new(Solution::plane_wave(), pw)?;
    let want = pw.k() / pw.energy();
    let mut worst = 0.0f64;
    for rho in [0.0, 0.1, 1.0, 10.0] {
        let d = densities(&f, &Point::transverse(rho, 0.7)?)?;
        for def in VelocityDefinition::ALL {
            let v = d.velocity(def, rho)?;
            worst = worst.max(v.v_rho.abs()).max(v.v_phi.abs()).max((v.v_z - want).abs());
        }
    }
    Ok(worst)
}

pub fn report(s: &Scenario, opts: Options) -> CliResult<Report> {
    let field = s.field()?;
    let beam = *field.params();
    let spec = *field.spec();
    let exact = spec.is_exact();
    let n = s.validation.map_or(DEFAULT_POINTS, |v| v.points);
    let seed = opts.seed.or(s.validation.and_then(|v| v.seed)).unwrap_or(0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts = random_points(&mut rng, n, s);
    let e = beam.energy();

    let mut residual = 0.0f64;
    let mut conservation = 0.0f64;
    let mut midpoint = 0.0f64;
    let mut speed = 0.0f64;
    let mut vz = 0.0f64;
    for (i, pt) in pts.iter().enumerate() {
        let (mut psi, grad) = field.sample(pt)?;
        let d = densities_of(&psi, &grad, pt.phi);
        if d.scalar <= f64::MIN_POSITIVE {
            continue;
        }
        if let Some((comp, factor)) = opts.corrupt {
            psi.c[comp] *= factor;
        }
        residual = residual.max(dirac_residual_of(&beam, &psi, &grad)?);
        let scale = e * d.scalar;
        for (bel, can, j) in [
            (d.p_belinfante.rho, d.p_canonical.rho, d.current.rho),
            (d.p_belinfante.phi, d.p_canonical.phi, d.current.phi),
            (d.p_belinfante.z, d.p_canonical.z, d.current.z),
        ] {
            midpoint = midpoint.max((bel - 0.5 * (can + e * j)).abs() / scale);
        }
        speed = speed.max(d.velocity(VelocityDefinition::DiracCurrent, pt.rho)?.speed());
        vz = vz.max((d.velocity(VelocityDefinition::Canonical, pt.rho)?.v_z - beam.k_z() / e).abs());
        // the stencil is costlier; a quarter of the points is plenty
        if i % 4 == 0 {
            conservation = conservation.max(conservation_residual(&field, pt)?);
        }
    }

    let (j_z, a) = weyl_probe(&spec);
    let weyl_pts = &pts[..pts.len().min(50)];
    let denom = e + beam.mass() - beam.k_z();
    let weyl = weyl_second_component(&beam, j_z, a, weyl_null_coefficient(&beam, a), weyl_pts)?;
    let printed_b = Complex::new(0.0, 1.0) * a * beam.kappa() / denom;
    let weyl_printed = weyl_second_component(&beam, j_z, a, printed_b, weyl_pts)?;

    let approx_note = (!exact).then_some("approximate family; not an exact solution");
    let checks = vec![
        Check { name: "dirac_residual", value: residual, threshold: DIRAC_RESIDUAL_MAX, informational: !exact, note: approx_note },
        Check {
            name: "current_conservation",
            value: conservation,
            threshold: CONSERVATION_MAX,
            informational: !exact,
            note: approx_note,
        },
        Check { name: "belinfante_midpoint", value: midpoint, threshold: MIDPOINT_MAX, informational: false, note: None },
        Check {
            name: "dirac_speed_excess",
            value: (speed - 1.0).max(0.0),
            threshold: CAUSALITY_SLACK,
            informational: false,
            note: None,
        },
        Check { name: "canonical_vz", value: vz, threshold: CANONICAL_VZ_MAX, informational: false, note: None },
        Check {
            name: "weyl_zero_component",
            value: weyl,
            threshold: WEYL_ZERO_MAX,
            informational: false,
            note: Some("b (E + m - k_z) + i a kappa = 0"),
        },
        Check {
            name: "weyl_zero_component_opposite_sign",
            value: weyl_printed,
            threshold: WEYL_ZERO_MAX,
            informational: true,
            note: Some("b (E + m - k_z) - i a kappa = 0; does not zero the component"),
        },
        Check {
            name: "plane_wave_degeneracy",
            value: plane_wave_degeneracy(&beam)?,
            threshold: PLANE_WAVE_MAX,
            informational: false,
            note: None,
        },
    ];
    Ok(Report { scenario: s.name.clone(), family: spec.family().name(), seed, points: pts.len(), checks })
}

/// Runs the checks; the report text is returned even when a check fails.
pub fn run(s: &Scenario, format: Format, opts: Options) -> CliResult<(String, Report)> {
    if format != Format::Json {
        return Err(CliError::config("validate writes a JSON report; use --format json"));
    }
    let r = report(s, opts)?;
    Ok((r.to_json(), r))
}
