// Write `x t y` surface files for each example at α ∈ {0.25, 0.5, 0.75, 1}
// plus the exact solution, ready for gnuplot's `splot`.
//
// ```text
// cargo run --release --example surface_data -- surfaces/
// ```

use std::path::{Path, PathBuf};

use ara_rpsm::bench::{emit_surface, Grid};
use ara_rpsm::solver::{ExampleParams, DEFAULT_ORDER};

pub fn run_example_in(dir: &Path, grid: &Grid) -> ara_rpsm::Result<()> {
    for id in 1..=4u8 {
        let files =
            emit_surface(id, &ExampleParams::default_for(id)?, &[0.25, 0.5, 0.75, 1.0], DEFAULT_ORDER, grid, dir)?;
        for f in files {
            println!("wrote {}", f.display());
        }
    }
    Ok(())
}

pub fn run_example() -> ara_rpsm::Result<()> {
    let dir = std::env::temp_dir().join(format!("ara-rpsm-surfaces-{}", std::process::id()));
    let grid = Grid::uniform((-1.0, 1.0), (0.0, 1.0), 5)?;
    let out = run_example_in(&dir, &grid);
    let _ = std::fs::remove_dir_all(&dir);
    out
}

fn main() {
    let dir = std::env::args_os().nth(1).map_or_else(|| PathBuf::from("surfaces"), PathBuf::from);
    run_example_in(&dir, &Grid::surface()).expect("surfaces written");
}
