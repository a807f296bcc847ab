//! Large-mass waveform of a single accelerated segment, and its period 4Mδ/π.

use cavity_entanglement::closed_forms::{massive_limit_period, negativity_massive_limit};
use cavity_entanglement::verify::large_mass_autocorrelation;

fn main() -> cavity_entanglement::Result<()> {
    let mass = 1e3;
    let period = massive_limit_period(mass, 1.0);
    for k in [1, 2, 3, 4, 30] {
        let mut peak: f64 = 0.0;
        for i in 0..2000 {
            let tau = 2.0 * period * i as f64 / 2000.0;
            let r = negativity_massive_limit(k, 1e-6, mass, tau, 1.0, 400)?;
            peak = peak.max(r.mass_scaled_deficit);
        }
        println!("k = {k:>2}: max (½ − N)/(h²M⁴) over two periods = {peak:.6e}");
    }
    let e = large_mass_autocorrelation(1, mass, 1.0)?;
    println!(
        "k = 1: autocorrelation {:.6} at lag {:.2} (4Mδ/π = {:.2}); first peak at {:.2}",
        e.peak_value, e.peak_lag, e.expected, e.first_peak_lag
    );
    Ok(())
}
