// Quadrature-based Caputo derivative and Riemann–Liouville integral checked
// against the closed-form monomial law and a series solution.
//
// ```text
// cargo run --example caputo_oracle
// ```

use ara_rpsm::caputo::{caputo_numeric, rl_integral_numeric, CaputoConfig};
use ara_rpsm::solver::{builtin_example, solve, ExampleParams};
use ara_rpsm::special::gamma;

pub fn run_example() -> ara_rpsm::Result<()> {
    let cfg = CaputoConfig::default();
    let (alpha, t) = (0.5, 0.8f64);

    let num = caputo_numeric(|s: f64| s * s, alpha, t, &cfg)?;
    let exact = 2.0 / gamma(3.0 - alpha)? * t.powf(2.0 - alpha);
    println!("D^0.5 t^2 at {t}: {num:.10} vs {exact:.10}");

    let j = rl_integral_numeric(f64::exp, alpha, t, &cfg)?;
    println!("J^0.5 exp at {t}: {:.12} (est. error {:.1e}, {} panels)", j.value, j.error, j.panels);

    let series = solve(&builtin_example(3, &ExampleParams::None, 0.75)?, 6)?.series;
    let d = series.caputo()?;
    let x = 0.4;
    let num = caputo_numeric(|s: f64| series.eval(x, s).unwrap_or(f64::NAN), 0.75, t, &cfg)?;
    println!("series Caputo {:.10} vs quadrature {num:.10}", d.eval(x, t)?);
    Ok(())
}

fn main() {
    run_example().expect("Caputo oracle evaluates");
}
