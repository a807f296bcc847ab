//! Keeping only the lowest 2×2 block of the one-way degradation.

use std::f64::consts::PI;

use num_complex::Complex64;

use cavity_entanglement::closed_forms::{q_coefficients, q_function, q_two_by_two};

fn main() -> cavity_entanglement::Result<()> {
    let c = q_coefficients(1, 3)?;
    println!("a10 = {:.10}  a11 = {:.10}  a12 = {:.3e}", c.a[0], c.a[1], c.a[2]);
    let one = Complex64::new(1.0, 0.0);
    let (q1, t1) = (q_function(1, one)?, q_two_by_two(one)?);
    let mut worst: f64 = 0.0;
    for j in 0..256 {
        let z = Complex64::from_polar(1.0, 2.0 * PI * j as f64 / 256.0);
        let exact = 2.0 * (q1 - q_function(1, z)?);
        let approx = 2.0 * (t1 - q_two_by_two(z)?);
        worst = worst.max((exact - approx).abs());
    }
    println!("max one-way error {:.3e} = {:.3}% of 4Q(1,1)", worst, 100.0 * worst / (4.0 * q1));
    Ok(())
}
