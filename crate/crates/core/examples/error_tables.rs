// Regenerate the five error tables (series vs closed form at α = 1) as CSV.
//
// ```text
// cargo run --release --example error_tables -- out/
// ```

use std::path::PathBuf;

use ara_rpsm::bench::{emit_csv, make_table, Grid};
use ara_rpsm::solver::{ExampleParams, DEFAULT_ORDER};

pub fn tables() -> Vec<(&'static str, u8, ExampleParams)> {
    vec![
        ("table1", 1, ExampleParams::KleinGordon { v: 1.0, w: 1.0, lambda: 1.0 }),
        ("table2", 2, ExampleParams::Boussinesq { gamma: 2.0 }),
        ("table3", 2, ExampleParams::Boussinesq { gamma: 0.5 }),
        ("table4", 3, ExampleParams::None),
        ("table5", 4, ExampleParams::None),
    ]
}

pub fn run_example_in(dir: Option<PathBuf>) -> ara_rpsm::Result<()> {
    for (name, id, params) in tables() {
        let rows = make_table(id, &params, 1.0, DEFAULT_ORDER, &Grid::reference_table())?;
        let worst = rows.iter().map(|r| r.abs_error()).fold(0.0, f64::max);
        let corner = rows.last().expect("24 rows");
        println!(
            "{name}: exact(10, 1) = {:.6}, numeric = {:.6}, max abs error {worst:.3e}",
            corner.exact, corner.numeric
        );
        if let Some(dir) = &dir {
            emit_csv(&rows, dir.join(format!("{name}.csv")))?;
        }
    }
    Ok(())
}

pub fn run_example() -> ara_rpsm::Result<()> {
    run_example_in(None)
}

fn main() {
    let dir = std::env::args_os().nth(1).map(PathBuf::from);
    run_example_in(dir).expect("tables regenerate");
}
