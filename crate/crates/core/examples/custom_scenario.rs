//! A sweep over a user-defined trajectory written in the config syntax.

use cavity_entanglement::sweep::{parse_config, run_sweep, to_csv, SweepSpec};

const CONFIG: &str = "
scenario = custom
segments = accel+:u, coast:0.5, accel-:u, coast:v, accel+:0.25
mode = general
n_max = 128
k = 1,2
axis = u = 0 : 2pi : 5
axis = v = 0 : 1 : 2
";

fn main() -> cavity_entanglement::Result<()> {
    let spec = SweepSpec::from_pairs(&parse_config(CONFIG)?)?;
    let rows = run_sweep(&spec)?;
    print!("{}", to_csv(&rows, spec.mode));
    Ok(())
}
