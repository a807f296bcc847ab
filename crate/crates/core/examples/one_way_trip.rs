//! One accelerated segment: closed form against the general pipeline over a period.

use std::f64::consts::PI;

use cavity_entanglement::closed_forms::{negativity_one_way, PhaseTuple};
use cavity_entanglement::scenario::Scenario;
use cavity_entanglement::units::{rindler_frequency, CavityConfig};

fn main() -> cavity_entanglement::Result<()> {
    let (h, k) = (0.01, 1);
    let cfg = CavityConfig::massless(h, k, 1000)?;
    let omega = rindler_frequency(1, &cfg)?;
    println!("{:>8} {:>14} {:>14} {:>10}", "u", "closed", "general", "|diff|");
    for j in 0..=8 {
        let u = 2.0 * PI * j as f64 / 8.0;
        let closed = negativity_one_way(k, h, &PhaseTuple::from_angles(u, 0.0, 0.0))?;
        let general = Scenario::one_way(cfg, u / omega).negativity()?;
        println!(
            "{u:8.4} {:14.10} {:14.10} {:10.2e}",
            closed.deficit_scaled,
            general.deficit_scaled,
            (closed.deficit_scaled - general.deficit_scaled).abs()
        );
    }
    Ok(())
}
