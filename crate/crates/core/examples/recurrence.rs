//! Monic interpolants P̂_n = P_n / alpha_n obey a three-term recurrence; the
//! alphas alone rebuild both the family and the data.

use lagrange_biortho::{family_from_recurrence, monic_family, Grid, Rational, Samples};

fn main() -> lagrange_biortho::Result<()> {
    let nodes: Vec<Rational> = [-2, 0, 1, 3, 4].map(Rational::from).to_vec();
    let values: Vec<Rational> = [3, -1, 4, 1, 5].map(Rational::from).to_vec();
    let samples = Samples::from_pairs(nodes.clone(), values)?;

    let family = monic_family(&samples, 4)?;
    for n in 0..=4 {
        println!("alpha_{n} = {:>8}   P̂_{n}(z) = {}", family.alphas()[n].to_string(), family.phats()[n]);
    }

    let rebuilt = family_from_recurrence(&Grid::new(nodes)?, family.alphas(), 4)?;
    let recovered: Vec<String> = rebuilt.values().iter().map(ToString::to_string).collect();
    println!("values recovered from alphas: {}", recovered.join(", "));
    assert_eq!(rebuilt.phats(), family.phats());
    Ok(())
}
