// Gamma function, ratios at large arguments and fractional hyperbolic series.
//
// ```text
// cargo run --example special_functions
// ```

use ara_rpsm::special::{frac_cosh_series, gamma, gamma_ratio, ln_gamma, ml_term};

pub fn run_example() -> ara_rpsm::Result<()> {
    for x in [0.5, 1.5, 4.25, 10.0] {
        println!("Gamma({x}) = {:.15e}, ln Gamma = {:.15}", gamma(x)?, ln_gamma(x)?);
    }
    println!("Gamma(300.5)/Gamma(299.5) = {}", gamma_ratio(300.5, 299.5)?);
    println!("z^m/Gamma(m*a+1) at z=2, m=2, a=0.5: {}", ml_term(2.0, 2, 0.5)?);
    for alpha in [0.5, 1.0] {
        println!("fractional cosh, alpha={alpha}, a=1, t=1: {:.12}", frac_cosh_series(alpha, 1.0, 1.0, 40)?);
    }
    println!("cosh(1) = {:.12}", 1f64.cosh());
    Ok(())
}

fn main() {
    run_example().expect("special functions evaluate");
}
