use maxent_core::entropy::{
    boltzmann_entropy_exact, boltzmann_entropy_stirling, omega, SystemShape,
};
use maxent_core::oracle::{enumerate_microstates, occupancy_census};

use super::emitter;
use crate::cli::{Cli, Emit, EnumerateArgs};
use crate::error::{CliError, ExitStatus};
use crate::output::{Manifest, Value};

pub(super) fn run(cli: &Cli, args: &EnumerateArgs) -> Result<ExitStatus, CliError> {
    let (p, n) = (args.particles, args.boxes);
    let shape = SystemShape::new(p, n)?;
    // Fails with the resource guard before anything is written.
    let states = enumerate_microstates(p, n)?;
    let count = omega(p, n)?;
    let mut out = emitter(cli)?;
    match args.emit {
        Emit::States => {
            let mut columns = vec!["state".to_owned()];
            columns.extend((1..=n).map(|b| format!("box_{b}")));
            let columns: Vec<&str> = columns.iter().map(String::as_str).collect();
            out.table("microstates", &columns)?;
            let mut row = Vec::with_capacity(columns.len());
            for (i, s) in states.enumerate() {
                row.clear();
                row.push(Value::from(i as u64 + 1));
                row.extend(s.occupancies().iter().map(|&k| Value::from(k)));
                out.row(&row)?;
            }
        }
        Emit::Census => {
            drop(states);
            let census = occupancy_census(p, n)?;
            let total = census.occupied_incidences();
            out.table(
                "census",
                &["occupancy", "count", "frequency", "exact_frequency"],
            )?;
            for (k, ratio) in census.frequencies_exact() {
                let c = census.count(k);
                out.row(&[
                    k.into(),
                    c.into(),
                    (c as f64 / total as f64).into(),
                    format!("{}/{}", ratio.numer(), ratio.denom()).into(),
                ])?;
            }
        }
    }
    out.table(
        "summary",
        &[
            "particles",
            "boxes",
            "microstates",
            "entropy_exact",
            "entropy_stirling",
        ],
    )?;
    out.row(&[
        p.into(),
        n.into(),
        count.to_string().into(),
        boltzmann_entropy_exact(p, n)?.into(),
        boltzmann_entropy_stirling(shape).into(),
    ])?;
    out.finish(
        &Manifest::new("enumerate")
            .param("particles", p)
            .param("boxes", n)
            .param(
                "emit",
                match args.emit {
                    Emit::Census => "census",
                    Emit::States => "states",
                },
            ),
    )?;
    Ok(ExitStatus::Success)
}
