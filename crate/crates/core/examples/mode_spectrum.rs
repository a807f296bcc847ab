//! Inertial and Rindler spectra of a cavity, and the acceleration period.

use cavity_entanglement::units::{
    acceleration_period, inertial_spectrum, rindler_spectrum, CavityConfig,
};

fn main() -> cavity_entanglement::Result<()> {
    for h in [0.0, 0.01, 0.5, 1.0, 1.9] {
        let cfg = CavityConfig::massless(h, 1, 4)?;
        let rindler = rindler_spectrum(&cfg)?;
        println!(
            "h = {h:<5} Ω̃ = {:?}  period = {:.6}",
            rindler.iter().map(|w| format!("{w:.5}")).collect::<Vec<_>>(),
            acceleration_period(&cfg)?
        );
    }

    let heavy = CavityConfig::new(1.0, 1e3, 1e-6, 1, 4)?;
    println!("M = 1000, ω = {:?}", inertial_spectrum(&heavy));
    Ok(())
}
