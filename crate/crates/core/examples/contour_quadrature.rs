//! Trapezoidal quadrature on a circle reproduces divided differences and the
//! residue-sum pairing for F(z) = e^{hz} in double precision.

use lagrange_biortho::contour::{contour_biortho_check, hermite_divided_difference, Circle};

fn main() -> lagrange_biortho::Result<()> {
    let h = std::f64::consts::LN_2;
    for k in 0..=5 {
        let circle = Circle::enclosing(0.0, k as f64, Circle::DEFAULT_SAMPLES)?;
        let est = hermite_divided_difference(h, k, &circle)?;
        let exact = 1.0 / (1..=k).map(|i| i as f64).product::<f64>();
        println!("[0..{k}] e^(hz): {:.15} (exact {exact:.15}, error {:.1e})", est.re, est.distance_to(exact));
    }

    println!("\ncontour <P̂_n, V_m> for q = 2 (diagonal should be -n!/2):");
    for n in 0..=3 {
        let row: Vec<String> = (0..=3)
            .map(|m| {
                let circle = Circle::enclosing(0.0, n.max(m + 1) as f64, Circle::DEFAULT_SAMPLES)?;
                Ok(format!("{:>10.6}", contour_biortho_check(h, n, m, &circle)?.re))
            })
            .collect::<lagrange_biortho::Result<_>>()?;
        println!("  {}", row.join(" "));
    }
    Ok(())
}
