//! F(z) = e^{hz} on the nodes 0, 1, 2, ... with q = e^h kept exact: closed
//! forms for alpha_n, nu_n, T̂_n and V_n against the generic construction.

use lagrange_biortho::exponential::{exp_alpha_closed, exp_nu_closed, exp_t_closed, exp_v_alt_eval, ExpGridProblem};
use lagrange_biortho::{build_system, monic_family, Rational};

fn main() -> lagrange_biortho::Result<()> {
    let q: Rational = std::env::args().nth(1).as_deref().unwrap_or("5/3").parse()?;
    let n_max = 4;
    let problem = ExpGridProblem::new(q.clone(), n_max)?;
    let family = monic_family(problem.samples(), n_max + 1)?;
    let system = build_system(&family, n_max)?;

    println!("q = {q}, nu_n = q/(q-1) = {}", exp_nu_closed(&problem)?);
    let z: Rational = "7/3".parse()?;
    for n in 0..=n_max {
        let alpha = exp_alpha_closed(&problem, n)?;
        let t = exp_t_closed(&problem, n)?;
        assert_eq!(alpha, family.alphas()[n]);
        assert_eq!(t, system.ts()[n]);
        let v = exp_v_alt_eval(&problem, n, &z)?;
        assert_eq!(v, system.vs()[n].eval(&z)?);
        println!("n={n}: alpha = {alpha}, T̂ = {t}, V({z}) = {v}");
    }
    Ok(())
}
