//! Circulation, enclosed flux and finite-difference curl on the radial grid.

use serde_json::Value;
use vortspin::vortex::{curl_fd, field_circulation, field_velocity, log_radii, DEFAULT_CIRCULATION_POINTS};
use vortspin::Error;

use crate::error::CliResult;
use crate::format::{json_text, num, num_opt, obj, sci, sci_opt, Csv};
use crate::scenario::{Format, Scenario};

/// Finite-difference step as a fraction of the innermost radius, when none is configured.
pub const DEFAULT_STEP_FRACTION: f64 = 1e-2;

#[derive(Clone, Copy)]
struct Cell {
    circulation: Option<f64>,
    flux_density: Option<f64>,
    curl: Option<f64>,
}

pub fn run(s: &Scenario, format: Format) -> CliResult<String> {
    let field = s.field()?;
    let defs = s.definitions();
    let step = s.fd_step.unwrap_or(DEFAULT_STEP_FRACTION * s.radii.min);
    let grid = log_radii(s.radii.min, s.radii.max, s.radii.per_decade)?;
    let mut table: Vec<(f64, Vec<Cell>)> = Vec::with_capacity(grid.len());
    for rho in grid {
        let mut cells = Vec::with_capacity(defs.len());
        for &def in &defs {
            let (circulation, flux_density) = match field_circulation(&field, def, rho, DEFAULT_CIRCULATION_POINTS) {
                Ok(c) => (Some(c.circulation), Some(c.flux_density)),
                Err(Error::UndefinedVelocity { .. }) => (None, None),
                Err(e) => return Err(e.into()),
            };
            let curl = match curl_fd(|r, p| field_velocity(&field, def, r, p), rho, s.phi(), step) {
                Ok(v) => Some(v),
                Err(Error::StencilCrossesAxis { .. } | Error::UndefinedVelocity { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            cells.push(Cell { circulation, flux_density, curl });
        }
        table.push((rho, cells));
    }

    let names: Vec<&str> = defs.iter().map(|d| d.name()).collect();
    Ok(match format {
        Format::Csv => {
            let mut header = vec!["rho".to_string()];
            for n in &names {
                header.push(format!("circulation_{n}"));
                header.push(format!("flux_density_{n}"));
                header.push(format!("curl_fd_{n}"));
            }
            header.push("undefined_flag".into());
            let mut csv = Csv::new(&header);
            for (rho, cells) in &table {
                let mut f = vec![sci(*rho)];
                for c in cells {
                    f.push(sci_opt(c.circulation));
                    f.push(sci_opt(c.flux_density));
                    f.push(sci_opt(c.curl));
                }
                let undefined = cells.iter().any(|c| c.circulation.is_none());
                f.push(u8::from(undefined).to_string());
                csv.row(f);
            }
            csv.finish()
        }
        Format::Json => {
            let rows: Vec<Value> = table
                .iter()
                .map(|(rho, cells)| {
                    let per: serde_json::Map<String, Value> = names
                        .iter()
                        .zip(cells)
                        .map(|(n, c)| {
                            (
                                n.to_string(),
                                obj([
                                    ("circulation", num_opt(c.circulation)),
                                    ("flux_density", num_opt(c.flux_density)),
                                    ("curl_fd", num_opt(c.curl)),
                                ]),
                            )
                        })
                        .collect();
                    obj([("rho", num(*rho)), ("definitions", Value::Object(per))])
                })
                .collect();
            json_text(&obj([
                ("scenario", Value::String(s.name.clone())),
                ("fd_step", num(step)),
                ("phi", num(s.phi())),
                ("rows", Value::Array(rows)),
            ]))
        }
    })
}
