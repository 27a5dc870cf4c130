// Solve the four builtin problems at several fractional orders and print the
// first coefficients with their residual check.
//
// ```text
// cargo run --example solve_builtin
// ```

use ara_rpsm::solver::{builtin_example, solve, ExampleParams, DEFAULT_ORDER};

pub fn run_example() -> ara_rpsm::Result<()> {
    for id in 1..=4u8 {
        let params = ExampleParams::default_for(id)?;
        for alpha in [0.5, 1.0] {
            let spec = builtin_example(id, &params, alpha)?;
            let result = solve(&spec, DEFAULT_ORDER)?;
            println!("example {id}, alpha = {alpha}, residual {:.1e}", result.max_residual());
            for (n, c) in result.series.coeffs().iter().enumerate().take(4) {
                println!("  c{n}(x) = {c}");
            }
            println!("  y(1, 0.5) = {:.10}", result.series.eval(1.0, 0.5)?);
        }
    }
    Ok(())
}

fn main() {
    run_example().expect("builtin examples solve");
}
