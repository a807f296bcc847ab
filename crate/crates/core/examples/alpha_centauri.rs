//! Accelerate, coast, decelerate: zeros of the degradation on u ≡ 0 and u + v ≡ 0.

use std::f64::consts::PI;

use cavity_entanglement::closed_forms::{negativity_two_way, PhaseTuple};

fn main() -> cavity_entanglement::Result<()> {
    let n = 9;
    let step = 2.0 * PI / (n - 1) as f64;
    println!("rows u, columns v; (½ − N)/h²");
    for i in 0..n {
        let row: Vec<String> = (0..n)
            .map(|j| {
                let p = PhaseTuple::from_angles(step * i as f64, step * j as f64, 0.0);
                negativity_two_way(1, 0.01, &p).map(|r| format!("{:7.4}", r.deficit_scaled))
            })
            .collect::<Result<_, _>>()?;
        println!("{}", row.join(" "));
    }
    Ok(())
}
