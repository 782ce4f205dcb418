//! Radial velocity profile at fixed azimuth.

use serde_json::Value;
use vortspin::bilinear::densities;
use vortspin::vortex::log_radii;
use vortspin::{Error, Point};

use crate::error::CliResult;
use crate::format::{json_text, num, num_opt, obj, sci, sci_opt, Csv};
use crate::scenario::{Format, Scenario};

struct Row {
    rho: f64,
    v_phi: Vec<Option<f64>>,
    v_z: Vec<Option<f64>>,
    density: f64,
}

impl Row {
    fn undefined(&self) -> bool {
        self.v_phi.iter().chain(&self.v_z).any(Option::is_none)
    }
}

fn rows(s: &Scenario) -> CliResult<Vec<Row>> {
    let field = s.field()?;
    let defs = s.definitions();
    let grid = log_radii(s.radii.min, s.radii.max, s.radii.per_decade)?;
    grid.into_iter()
        .map(|rho| {
            let d = densities(&field, &Point::transverse(rho, s.phi())?)?;
            let mut v_phi = Vec::with_capacity(defs.len());
            let mut v_z = Vec::with_capacity(defs.len());
            for &def in &defs {
                match d.velocity(def, rho) {
                    Ok(v) => {
                        v_phi.push(Some(v.v_phi));
                        v_z.push(Some(v.v_z));
                    }
                    Err(Error::ZeroDensity { .. }) => {
                        v_phi.push(None);
                        v_z.push(None);
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            Ok(Row { rho, v_phi, v_z, density: d.scalar })
        })
        .collect()
}

pub fn run(s: &Scenario, format: Format) -> CliResult<String> {
    let rows = rows(s)?;
    let names: Vec<&str> = s.definitions().iter().map(|d| d.name()).collect();
    Ok(match format {
        Format::Csv => {
            let mut header = vec!["rho".to_string()];
            header.extend(names.iter().map(|n| format!("v_phi_{n}")));
            header.extend(names.iter().map(|n| format!("v_z_{n}")));
            header.push("density".into());
            header.push("undefined_flag".into());
            let mut csv = Csv::new(&header);
            for r in &rows {
                let mut f = vec![sci(r.rho)];
                f.extend(r.v_phi.iter().map(|v| sci_opt(*v)));
                f.extend(r.v_z.iter().map(|v| sci_opt(*v)));
                f.push(sci(r.density));
                f.push(u8::from(r.undefined()).to_string());
                csv.row(f);
            }
            csv.finish()
        }
        Format::Json => {
            let per_def = |vals: &[Option<f64>]| {
                Value::Object(names.iter().zip(vals).map(|(n, v)| (n.to_string(), num_opt(*v))).collect())
            };
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    obj([
                        ("rho", num(r.rho)),
                        ("v_phi", per_def(&r.v_phi)),
                        ("v_z", per_def(&r.v_z)),
                        ("density", num(r.density)),
                        ("undefined_flag", Value::Bool(r.undefined())),
                    ])
                })
                .collect();
            json_text(&obj([
                ("scenario", Value::String(s.name.clone())),
                ("family", Value::String(s.solution()?.family().name().into())),
                ("phi", num(s.phi())),
                ("rows", Value::Array(rows)),
            ]))
        }
    })
}
