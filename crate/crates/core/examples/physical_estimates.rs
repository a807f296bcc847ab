//! Dimensionless parameters and peak degradation for laboratory numbers.

use cavity_entanglement::estimate::estimate_physical;
use cavity_entanglement::units::Quanta;

fn main() -> cavity_entanglement::Result<()> {
    let cases = [
        ("optical, 10 m, 10 m/s²", 10.0, 10.0, Quanta::TransverseWavelength(500e-9)),
        ("kaon, 10 cm, 1e-10 m/s²", 1e-10, 0.1, Quanta::Mass(1e-27)),
        ("longitudinal, 1 m, 1 g", 9.81, 1.0, Quanta::Longitudinal),
    ];
    for (label, accel, delta, quanta) in cases {
        println!("== {label}");
        println!("{}\n", estimate_physical(accel, delta, quanta, 1)?);
    }
    Ok(())
}
