//! Regime table, transition radius and vortex-line verdicts.

use serde_json::Value;
use vortspin::spinor::Family;
use vortspin::vortex::{
    classify_profile, log_radii, mean_v_phi, transition_radius_measured, vortex_line_verdict, RegimeKind,
    VerdictKind, MIN_CIRCULATION_POINTS,
};
use vortspin::{Error, Radii, Regime, WaveField};

use crate::error::CliResult;
use crate::format::{json_text, num, num_opt, obj, sci, Csv};
use crate::scenario::{Format, Scenario};

fn regime_name(k: RegimeKind) -> &'static str {
    match k {
        RegimeKind::Bucket => "bucket",
        RegimeKind::Whirlpool => "whirlpool",
        RegimeKind::Transitional => "transitional",
    }
}

fn verdict_name(k: VerdictKind) -> &'static str {
    match k {
        VerdictKind::Singular => "singular",
        VerdictKind::Regular => "regular",
        VerdictKind::Inconclusive => "inconclusive",
    }
}

fn analytic_radii(field: &WaveField) -> Result<Radii, Error> {
    let spec = field.spec();
    match spec.family() {
        Family::Barnett | Family::BarnettSmallRho => {
            Radii::new(field.params(), spec.ell())?.with_barnett_mixing(field.params(), spec.ell(), spec.a(), spec.b())
        }
        _ => Radii::new(field.params(), spec.ell()),
    }
}

/// Inner (rigid) and outer (whirlpool) windows around the characteristic radius.
pub fn default_windows(s: &Scenario, radii: &Radii) -> Vec<[f64; 2]> {
    let inner = radii.r_crossing.unwrap_or(radii.r_bucket);
    let candidates = [[s.radii.min, 0.1 * inner], [5.0 * inner, 0.5 * radii.r_bessel]];
    candidates
        .into_iter()
        .map(|[lo, hi]| [lo.max(s.radii.min), hi.min(s.radii.max)])
        .filter(|[lo, hi]| hi > lo)
        .collect()
}

struct DefinitionResult {
    name: &'static str,
    regimes: Vec<([f64; 2], Result<Regime, Error>)>,
    verdict: Result<vortspin::Verdict, Error>,
}

pub fn run(s: &Scenario, format: Format) -> CliResult<String> {
    let field = s.field()?;
    let beam = *field.params();
    let radii = analytic_radii(&field);
    let windows = match (&s.windows, &radii) {
        (Some(w), _) => w.clone(),
        (None, Ok(r)) => default_windows(s, r),
        (None, Err(_)) => vec![[s.radii.min, s.radii.max]],
    };
    let grid = log_radii(s.radii.min, s.radii.max, s.radii.per_decade)?;

    let mut results = Vec::new();
    for def in s.definitions() {
        let mut profile = Vec::with_capacity(grid.len());
        for &rho in &grid {
            match mean_v_phi(&field, def, rho, MIN_CIRCULATION_POINTS) {
                Ok(v) => profile.push((rho, v)),
                Err(Error::UndefinedVelocity { .. }) => {}
                Err(e) => return Err(e.into()),
            }
        }
        let regimes = windows
            .iter()
            .map(|w| (*w, classify_profile(&profile, &[(w[0], w[1])]).map(|mut r| r.remove(0))))
            .collect();
        results.push(DefinitionResult { name: def.name(), regimes, verdict: vortex_line_verdict(&field, def) });
    }
    let transition = transition_radius_measured(&field);

    Ok(match format {
        Format::Csv => {
            let header: Vec<String> = ["definition", "window_lo", "window_hi", "fitted_slope", "r2", "n_samples", "regime"]
                .iter()
                .map(|h| h.to_string())
                .collect();
            let mut csv = Csv::new(&header);
            for d in &results {
                for (w, r) in &d.regimes {
                    let fields = match r {
                        Ok(r) => vec![
                            sci(r.fitted_slope),
                            sci(r.r2),
                            r.n_samples.to_string(),
                            regime_name(r.regime).to_string(),
                        ],
                        Err(_) => vec![String::new(), String::new(), "0".into(), "undetermined".into()],
                    };
                    let mut row = vec![d.name.to_string(), sci(w[0]), sci(w[1])];
                    row.extend(fields);
                    csv.row(row);
                }
            }
            csv.finish()
        }
        Format::Json => {
            let m = beam.mass();
            let radii_json = match &radii {
                Ok(r) => {
                    let both = |x: f64| obj([("natural", num(x)), ("pm", num(s.to_pm(x, m)))]);
                    obj([
                        ("r_bucket", both(r.r_bucket)),
                        ("r_bessel", both(r.r_bessel)),
                        ("r_compton_scale", both(r.r_compton_scale)),
                        ("r_crossing", r.r_crossing.map_or(Value::Null, both)),
                    ])
                }
                Err(e) => obj([("error", Value::String(e.to_string()))]),
            };
            let defs: serde_json::Map<String, Value> = results
                .iter()
                .map(|d| {
                    let regimes: Vec<Value> = d
                        .regimes
                        .iter()
                        .map(|(w, r)| match r {
                            Ok(r) => obj([
                                ("window", Value::Array(vec![num(w[0]), num(w[1])])),
                                ("fitted_slope", num(r.fitted_slope)),
                                ("r2", num(r.r2)),
                                ("n_samples", Value::from(r.n_samples)),
                                ("regime", Value::String(regime_name(r.regime).into())),
                            ]),
                            Err(e) => obj([
                                ("window", Value::Array(vec![num(w[0]), num(w[1])])),
                                ("error", Value::String(e.to_string())),
                            ]),
                        })
                        .collect();
                    let verdict = match &d.verdict {
                        Ok(v) => obj([
                            ("kind", Value::String(verdict_name(v.kind).into())),
                            ("circulation_power", num(v.circulation_power)),
                            ("decade_powers", Value::Array(v.decade_powers.iter().map(|p| num(*p)).collect())),
                            ("limiting_circulation", num(v.limiting_circulation)),
                            ("circulation_spread", num(v.circulation_spread)),
                            (
                                "whirlpool_window",
                                v.whirlpool_window.map_or(Value::Null, |(a, b)| Value::Array(vec![num(a), num(b)])),
                            ),
                        ]),
                        Err(e) => obj([("error", Value::String(e.to_string()))]),
                    };
                    (d.name.to_string(), obj([("regimes", Value::Array(regimes)), ("verdict", verdict)]))
                })
                .collect();
            json_text(&obj([
                ("scenario", Value::String(s.name.clone())),
                ("family", Value::String(field.spec().family().name().into())),
                (
                    "beam",
                    obj([
                        ("kappa", num(beam.kappa())),
                        ("k_z", num(beam.k_z())),
                        ("energy", num(beam.energy())),
                        ("energy_kev", num(s.to_kev(beam.energy(), m))),
                        ("theta", num(beam.theta())),
                    ]),
                ),
                ("analytic_radii", radii_json),
                (
                    "transition_radius",
                    match &transition {
                        Ok(r) => obj([("natural", num(*r)), ("pm", num(s.to_pm(*r, m)))]),
                        Err(e) => obj([("natural", num_opt(None)), ("error", Value::String(e.to_string()))]),
                    },
                ),
                ("definitions", Value::Object(defs)),
            ]))
        }
    })
}
