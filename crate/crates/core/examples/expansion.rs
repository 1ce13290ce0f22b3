//! Coefficients of a polynomial in the monic interpolant basis, read off
//! from the pairing with V_k and divided by the diagonal.

use lagrange_biortho::biortho::unweighted_expansion;
use lagrange_biortho::{build_system, expand_in_interpolants, monic_family, reconstruct, Polynomial, Rational, Samples};

fn main() -> lagrange_biortho::Result<()> {
    let nodes: Vec<Rational> = (0..5).map(Rational::from).collect();
    let values: Vec<Rational> = [1, 2, 5, 11, 7].map(Rational::from).to_vec();
    let samples = Samples::from_pairs(nodes, values)?;
    let family = monic_family(&samples, 4)?;
    let system = build_system(&family, 3)?;

    let q = Polynomial::new(
        ["3", "-1/2", "0", "2"].iter().map(|s| s.parse::<Rational>()).collect::<Result<Vec<_>, _>>()?,
    );
    let xi = expand_in_interpolants(&q, &system, &samples)?;
    let rebuilt = reconstruct(&xi, &family)?;
    println!("q(z) = {q}");
    for (k, x) in xi.iter().enumerate() {
        println!("  xi_{k} = {x}");
    }
    println!("sum xi_k P̂_k = {rebuilt}");
    assert_eq!(rebuilt, q);

    // Dropping the 1/F weight from the pairing does not give the coefficients.
    let unweighted = unweighted_expansion(&q, &system)?;
    println!("unweighted formula rebuilds {}", reconstruct(&unweighted, &family)?);
    Ok(())
}
