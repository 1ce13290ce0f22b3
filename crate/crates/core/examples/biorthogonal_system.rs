//! The rational functions V_m = T̂_m / omega_{m+2} and their pairing matrix
//! with the monic interpolants.
//!
//! The diagonal comes out as -1/(nu_n alpha_n), not 1/alpha_n.

use lagrange_biortho::{biorthogonality_matrix, build_system, monic_family, Rational, Samples, Scalar};

fn main() -> lagrange_biortho::Result<()> {
    let nodes: Vec<Rational> = (0..5).map(Rational::from).collect();
    let values: Vec<Rational> = [1, 2, 5, 11, 7].map(Rational::from).to_vec();
    let samples = Samples::from_pairs(nodes, values)?;

    let family = monic_family(&samples, 4)?;
    let system = build_system(&family, 3)?;
    for m in 0..=3 {
        println!("nu_{m} = {:>6}   T̂_{m}(z) = {}", system.nus()[m].to_string(), system.ts()[m]);
    }

    let matrix = biorthogonality_matrix(&system, &samples, 3)?;
    println!("\n<P̂_n, V_m>:");
    for row in &matrix {
        let cells: Vec<String> = row.iter().map(|x| format!("{:>8}", x.to_string())).collect();
        println!("  {}", cells.join(" "));
    }
    for n in 0..=3 {
        println!(
            "n={n}: diagonal {}  -1/(nu alpha) {}  1/alpha {}",
            matrix[n][n],
            system.diagonal_formula(n)?,
            family.alphas()[n].recip()?
        );
    }
    Ok(())
}
