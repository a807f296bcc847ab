//! Text dump of a composed transform for diffing against other implementations.

use cavity_entanglement::scenario::{effective_transform, Scenario};
use cavity_entanglement::transform::{read_dump, write_dump};
use cavity_entanglement::units::CavityConfig;

fn main() -> cavity_entanglement::Result<()> {
    let cfg = CavityConfig::massless(0.01, 1, 4)?;
    let t = effective_transform(&Scenario::alpha_centauri(cfg, 0.8, 0.3))?;
    let text = write_dump(&t);
    print!("{text}");
    assert_eq!(read_dump(&text)?, t);
    Ok(())
}
