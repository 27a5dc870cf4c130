// Closed-form arithmetic on sums of constants, cosh and sinh terms.
//
// ```text
// cargo run --example hyperbolic_algebra
// ```

use ara_rpsm::HypExpr;

pub fn run_example() -> ara_rpsm::Result<()> {
    let a = HypExpr::cosh(1.0, 1.0) - HypExpr::constant(1.0);
    let b = HypExpr::sinh(2.0, 0.5);
    let prod = &a * &b;
    println!("a = {a}");
    println!("b = {b}");
    println!("a*b = {prod}");
    println!("(a*b)' = {}", prod.diff(1));
    println!("a^2 = {}", &a * &a);
    let x = 0.7;
    println!("a*b at {x}: {:.12} = {:.12}", prod.eval(x), a.eval(x) * b.eval(x));
    let json = serde_json::to_string(&prod)?;
    println!("json: {json}");
    Ok(())
}

fn main() {
    run_example().expect("algebra evaluates");
}
