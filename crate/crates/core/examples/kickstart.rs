//! Acceleration that never stops: the degradation no longer depends on the duration.

use cavity_entanglement::closed_forms::{negativity_kickstart, q_sum_term_share};
use cavity_entanglement::scenario::Scenario;
use cavity_entanglement::units::CavityConfig;

fn main() -> cavity_entanglement::Result<()> {
    for k in 1..=4 {
        let closed = negativity_kickstart(k, 0.01)?;
        let cfg = CavityConfig::massless(0.01, k, 256)?;
        let spread: Vec<String> = [0.0, 0.7, 3.1]
            .iter()
            .map(|&tau| Scenario::kickstart(cfg, tau).negativity().map(|r| format!("{:.10}", r.deficit_scaled)))
            .collect::<Result<_, _>>()?;
        println!(
            "k = {k}: Q(k,1) = {:.10}  pipeline {}  sum-term share {:.3}%",
            closed.deficit_scaled,
            spread.join(" "),
            100.0 * q_sum_term_share(k)?
        );
    }
    Ok(())
}
