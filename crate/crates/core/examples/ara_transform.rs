// Numerical ARA transforms against closed forms, and the operational rules.
//
// ```text
// cargo run --example ara_transform
// ```

use ara_rpsm::ara::{ara_monomial, ara_numeric, verify_property, AraConfig, PropertyInput};
use ara_rpsm::special::pow_frac;

pub fn run_example() -> ara_rpsm::Result<()> {
    let cfg = AraConfig::default();
    for p in [0.0, 0.5, 1.5] {
        for s in [1.0, 4.0] {
            let num = ara_numeric(|t| pow_frac(t, p), 2, s, &cfg)?;
            let exact = ara_monomial(p, 2, s)?;
            println!("G2[t^{p}]({s}) = {:.12} (exact {exact:.12}, est. error {:.1e})", num.value, num.error);
        }
    }

    let alpha = 0.5;
    let f = |t: f64| 1.0 + pow_frac(t, alpha);
    let input = PropertyInput::new(&f, alpha);
    for id in 1..=7 {
        let r = verify_property(id, &input, &[1.0, 3.0])?;
        println!("property {id}: max discrepancy {:.2e}", r.max_discrepancy);
    }
    Ok(())
}

fn main() {
    run_example().expect("transforms evaluate");
}
