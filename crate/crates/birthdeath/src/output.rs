//! CSV renderings of distributions and trajectories.

use std::io::Write;

use crate::TrajectoryEnsemble;

/// Rows `(t, N, P_N)`.
pub fn write_distribution_csv<W: Write>(w: W, t: f64, p: &[f64]) -> csv::Result<()> {
    let mut wr = csv::Writer::from_writer(w);
    wr.write_record(["t", "N", "P_N"])?;
    for (n, v) in p.iter().enumerate() {
        wr.write_record([format!("{t}"), n.to_string(), format!("{v:.17e}")])?;
    }
    wr.flush()?;
    Ok(())
}

/// Rows `(path, t_event, N)`; an ensemble without events yields terminal
/// states at `t_end`.
pub fn write_trajectories_csv<W: Write>(w: W, ens: &TrajectoryEnsemble) -> csv::Result<()> {
    let mut wr = csv::Writer::from_writer(w);
    wr.write_record(["path", "t_event", "N"])?;
    match &ens.events {
        Some(paths) => {
            for (i, ev) in paths.iter().enumerate() {
                for (t, n) in ev {
                    wr.write_record([i.to_string(), format!("{t:.17e}"), n.to_string()])?;
                }
            }
        }
        None => {
            for (i, n) in ens.terminal.iter().enumerate() {
                wr.write_record([i.to_string(), format!("{}", ens.t_end), n.to_string()])?;
            }
        }
    }
    wr.flush()?;
    Ok(())
}
