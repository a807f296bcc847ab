//! Order-by-order Bogoliubov identities for the massless and massive boosts.

use cavity_entanglement::transform::{boost_columns, check_identities, BoostKind};

fn main() -> cavity_entanglement::Result<()> {
    let cols: Vec<usize> = (1..=4).collect();
    for kind in [BoostKind::Massless, BoostKind::Massive(0.0), BoostKind::Massive(10.0)] {
        let t = boost_columns(kind, 2000, &cols, false)?;
        let id = check_identities(&t);
        println!("{kind:?}: order0 {:.1e}, order1 {:.1e}", id.order0_residual, id.order1_residual);
        for d in &id.diagonal {
            println!(
                "  n = {}  Σ'(|α|²−|β|²) = {:.10}  −2α⁽²⁾ = {:.10}  residual {:.3e}  within tail: {}",
                d.n,
                d.pair_sum,
                d.expected,
                d.residual,
                d.within_tolerance()
            );
        }
    }
    Ok(())
}
