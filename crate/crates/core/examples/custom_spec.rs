// Solve a user-defined problem read from JSON and check its residual.
//
// ```text
// cargo run --example custom_spec
// ```

use ara_rpsm::solver::{residual_check, solve, PdeSpec};

const SPEC: &str = include_str!("specs/fractional_kdv_like.json");

pub fn run_example() -> ara_rpsm::Result<()> {
    let spec = PdeSpec::from_json(SPEC)?;
    let result = solve(&spec, 5)?;
    for (n, c) in result.series.coeffs().iter().enumerate() {
        println!("c{n}(x) = {c}");
    }
    let r3 = residual_check(&spec, &result.series, 3)?;
    println!("residual coefficient at n = 3: {:.1e}", r3.max_abs_coeff());
    for t in [0.0, 0.1, 0.2] {
        println!("y(0, {t}) = {:.8}", result.series.eval(0.0, t)?);
    }
    Ok(())
}

fn main() {
    run_example().expect("custom spec solves");
}
