//! Newton and Lagrange interpolants of the same data, and the divided
//! differences behind them.

use lagrange_biortho::{
    divided_difference_sum, divided_differences_recursive, lagrange_interpolant, newton_interpolant, Grid, Rational,
    Samples,
};

fn main() -> lagrange_biortho::Result<()> {
    // 2^z at 0..=3
    let samples = Samples::new(Grid::integers(4), [1, 2, 4, 8].map(Rational::from).to_vec())?;

    let table = divided_differences_recursive(&samples)?;
    for k in 0..samples.len() {
        println!("[a_0..a_{k}] = {} (sum route {})", table.as_slice()[k], divided_difference_sum(&samples, k)?);
    }

    for n in 0..samples.len() {
        let newton = newton_interpolant(&samples, n)?;
        let lagrange = lagrange_interpolant(&samples, n)?;
        assert_eq!(newton, lagrange);
        println!("P_{n}(z) = {newton}");
    }
    Ok(())
}
