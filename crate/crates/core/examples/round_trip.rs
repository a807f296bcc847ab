//! Out and back again, at the three rest durations of the destination stop.

use std::f64::consts::PI;

use cavity_entanglement::closed_forms::{negativity_round_trip, PhaseTuple};
use cavity_entanglement::scenario::Scenario;
use cavity_entanglement::units::{rindler_frequency, CavityConfig};

fn main() -> cavity_entanglement::Result<()> {
    let cfg = CavityConfig::massless(0.01, 1, 512)?;
    let omega = rindler_frequency(1, &cfg)?;
    for rest in [0.0, 2.0 / 3.0, 4.0 / 3.0] {
        let w = PI * rest;
        let mut peak: (f64, f64, f64) = (0.0, 0.0, 0.0);
        for i in 0..64 {
            for j in 0..64 {
                let (u, v) = (2.0 * PI * i as f64 / 64.0, 2.0 * PI * j as f64 / 64.0);
                let d = negativity_round_trip(1, 0.01, &PhaseTuple::from_angles(u, v, w))?.deficit_scaled;
                if d > peak.0 {
                    peak = (d, u, v);
                }
            }
        }
        let (d, u, v) = peak;
        let general = Scenario::round_trip(cfg, u / omega, v / PI, rest).negativity()?;
        println!(
            "τ̄″ = {rest:.4}δ: max (½ − N)/h² = {d:.8} at u = {u:.3}, v = {v:.3} (pipeline {:.8})",
            general.deficit_scaled
        );
    }
    Ok(())
}
