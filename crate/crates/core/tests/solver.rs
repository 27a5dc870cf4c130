use ara_rpsm::bench::{make_table, parse_csv, render_csv, validate_suite, Grid, TableRow};
use ara_rpsm::caputo::{caputo_numeric, rl_integral_numeric, CaputoConfig};
use ara_rpsm::solver::{builtin_example, exact_solution, residual_check, solve, ExampleParams, OperatorAst, PdeSpec};
use ara_rpsm::special::gamma;
use ara_rpsm::{Error, HypExpr};
use proptest::prelude::*;

const ALPHAS: [f64; 4] = [0.25, 0.5, 0.75, 1.0];

fn params(id: u8) -> ExampleParams {
    ExampleParams::default_for(id).unwrap()
}

#[test]
fn caputo_left_inverse() {
    let cfg = CaputoConfig::default();
    for alpha in [0.2, 0.5, 0.8] {
        let f = |t: f64| 2.0 + (t).sin() + t * t;
        let jf = |t: f64| {
            if t <= 0.0 {
                0.0
            } else {
                rl_integral_numeric(f, alpha, t, &cfg).unwrap().value
            }
        };
        for t in [0.1, 0.5, 1.0] {
            let got = caputo_numeric(jf, alpha, t, &cfg).unwrap();
            assert!((got - f(t)).abs() <= 1e-5, "α={alpha} t={t}: {got} vs {}", f(t));
        }
    }
}

#[test]
fn caputo_monomial_law() {
    let cfg = CaputoConfig::default();
    for alpha in [0.3, 0.5, 0.9] {
        for m in 1..=3 {
            let p = m as f64 * alpha;
            for t in [0.3f64, 1.0] {
                let want = gamma(p + 1.0).unwrap() / gamma(p - alpha + 1.0).unwrap() * t.powf(p - alpha);
                let got = caputo_numeric(|s: f64| s.powf(p), alpha, t, &cfg).unwrap();
                assert!(((got - want) / want).abs() <= 1e-5, "α={alpha} p={p} t={t}");
            }
        }
    }
}

#[test]
fn caputo_matches_series_on_solutions() {
    let cfg = CaputoConfig::default();
    for id in 1..=4u8 {
        for alpha in [0.5, 0.75] {
            let series = solve(&builtin_example(id, &params(id), alpha).unwrap(), 6).unwrap().series;
            let d = series.caputo().unwrap();
            for (x, t) in [(0.5, 0.3), (-1.0, 0.8)] {
                let num = caputo_numeric(|tau: f64| series.eval(x, tau).unwrap(), alpha, t, &cfg).unwrap();
                let exact = d.eval(x, t).unwrap();
                assert!((num - exact).abs() <= 1e-5, "ex{id} α={alpha} ({x},{t}): {num} vs {exact}");
            }
        }
    }
}

#[test]
fn residuals_vanish_on_every_builtin() {
    for id in 1..=4u8 {
        let mut ps = vec![params(id)];
        if id == 2 {
            ps.push(ExampleParams::Boussinesq { gamma: 0.5 });
        }
        if id == 1 {
            ps.push(ExampleParams::KleinGordon { v: 2.0, w: 0.5, lambda: 1.3 });
        }
        for p in &ps {
            for alpha in ALPHAS {
                let spec = builtin_example(id, p, alpha).unwrap();
                let r = solve(&spec, 6).unwrap();
                for n in 0..=6 {
                    let m = residual_check(&spec, &r.series, n).unwrap().max_abs_coeff();
                    assert!(m <= 1e-12, "ex{id} {p:?} α={alpha} n={n}: {m:e}");
                }
            }
        }
    }
}

#[test]
fn initial_conditions_are_reproduced() {
    for id in 1..=4u8 {
        for alpha in ALPHAS {
            let spec = builtin_example(id, &params(id), alpha).unwrap();
            let series = solve(&spec, 6).unwrap().series;
            for x in [-2.0, 0.0, 1.5] {
                assert_eq!(series.eval(x, 0.0).unwrap(), spec.ic_a.eval(x));
                if let Some(b) = &spec.ic_b {
                    assert_eq!(series.caputo().unwrap().eval(x, 0.0).unwrap(), b.eval(x));
                }
            }
        }
    }
}

// The truncated series inherits the symmetry only up to its own truncation
// error, so each pair is allowed the sum of the two pointwise errors.
#[test]
fn travelling_wave_symmetry() {
    let cases = [
        (2u8, ExampleParams::Boussinesq { gamma: 2.0 }, 2.0),
        (3, ExampleParams::None, 1.0),
        (4, ExampleParams::None, 1.0),
    ];
    for (id, p, speed) in cases {
        let rows = make_table(id, &p, 1.0, 6, &Grid::reference_table()).unwrap();
        let mut pairs = 0;
        for a in &rows {
            for b in &rows {
                let (za, zb) = (a.x - speed * a.t, b.x - speed * b.t);
                if (a.x, a.t) == (b.x, b.t) || (za.abs() - zb.abs()).abs() > 1e-12 {
                    continue;
                }
                pairs += 1;
                let odd = id == 4 && za * zb < 0.0;
                let (ea, eb) = if odd { (a.exact, -b.exact) } else { (a.exact, b.exact) };
                assert!((ea - eb).abs() <= 1e-9 * ea.abs().max(1.0), "ex{id}: exact not symmetric");
                let (na, nb) = if odd { (a.numeric, -b.numeric) } else { (a.numeric, b.numeric) };
                let slack = a.abs_error() + b.abs_error() + 1e-12;
                assert!((na - nb).abs() <= slack, "ex{id} ({},{}) vs ({},{})", a.x, a.t, b.x, b.t);
            }
        }
        assert!(pairs > 0, "ex{id}: no symmetric pairs on the grid");
    }
}

#[test]
fn order_refinement_shrinks_geometrically() {
    let grid = Grid::uniform((-10.0, 10.0), (0.0, 1.0), 11).unwrap();
    for id in 1..=4u8 {
        let spec = builtin_example(id, &params(id), 1.0).unwrap();
        let full = solve(&spec, 6).unwrap().series;
        let diffs: Vec<f64> = (2..=6)
            .map(|k| {
                let (hi, lo) = (full.with_order(k), full.with_order(k - 1));
                grid.points()
                    .iter()
                    .map(|&(x, t)| (hi.eval(x, t).unwrap() - lo.eval(x, t).unwrap()).abs())
                    .fold(0.0, f64::max)
            })
            .collect();
        for w in diffs[1..].windows(2) {
            assert!(w[1] < w[0], "ex{id}: {diffs:?}");
        }
    }
}

#[test]
fn closed_forms_agree_with_travelling_waves() {
    let none = ExampleParams::None;
    for (x, t) in [(0.0, 0.25), (4.0, 1.0), (-3.0, 0.6)] {
        let y3 = exact_solution(3, &none, 1.0, x, t, None).unwrap();
        assert!((y3 - ((x - t).cosh() - 1.0)).abs() <= 1e-12 * y3.abs().max(1.0));
        let y4 = exact_solution(4, &none, 1.0, x, t, None).unwrap();
        assert!((y4 - 1.5f64.sqrt() * ((x - t) / 3.0).sinh()).abs() <= 1e-13);
    }
    assert!(matches!(exact_solution(3, &none, 1.0, 10.0, 1.0, Some(1)), Err(Error::SeriesTail { .. })));
}

#[test]
fn json_spec_round_trip() {
    let text = r#"{
        "time_order": 1,
        "alpha": 0.5,
        "rhs": {"op": "dx", "order": 2, "child": {"op": "solution"}},
        "ic_a": [{"kind": "cosh", "freq": 1.0, "coeff": 1.0}]
    }"#;
    let spec = PdeSpec::from_json(text).unwrap();
    assert_eq!(spec.rhs, OperatorAst::dx(2, OperatorAst::solution()));
    assert_eq!(PdeSpec::from_json(&spec.to_json().unwrap()).unwrap(), spec);
    let r = solve(&spec, 4).unwrap();
    assert!(r.series.coeffs().iter().all(|c| c.max_diff(&HypExpr::cosh(1.0, 1.0)) < 1e-15));

    let heat = spec.with_alpha(1.0).unwrap();
    let y = solve(&heat, 20).unwrap().series.eval(0.3, 0.5).unwrap();
    assert!((y - 0.5f64.exp() * 0.3f64.cosh()).abs() < 1e-12);

    assert!(PdeSpec::from_json(&text.replace("\"time_order\": 1", "\"time_order\": 2")).is_err());
    assert!(PdeSpec::from_json(&text.replace("\"alpha\": 0.5", "\"alpha\": 1.5")).is_err());
    assert!(PdeSpec::from_json(&text.replace("solution", "velocity")).is_err());
}

#[test]
fn reference_grid_has_24_rows() {
    let rows = make_table(3, &ExampleParams::None, 1.0, 6, &Grid::reference_table()).unwrap();
    assert_eq!(rows.len(), 24);
    let xs: Vec<f64> = rows.iter().take(6).map(|r| r.x).collect();
    assert_eq!(xs, [0.0, 2.0, 4.0, 6.0, 8.0, 10.0]);
    let ts: Vec<f64> = rows.iter().step_by(6).map(|r| r.t).collect();
    assert_eq!(ts, [0.25, 0.5, 0.75, 1.0]);
}

#[test]
fn validate_suite_is_green_and_fast() {
    let report = validate_suite();
    for c in &report.checks {
        assert!(c.passed, "{}: {}", c.name, c.detail);
    }
    assert!(report.seconds < 60.0, "{}s", report.seconds);
}

fn row() -> impl Strategy<Value = TableRow> {
    (-1e4..1e4f64, 0.0..1.0f64, -1e5..1e5f64, -1e-3..1e-3f64).prop_map(|(x, t, exact, d)| TableRow {
        x,
        t,
        exact,
        numeric: exact + d,
    })
}

fn same_to_15_digits(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-14 * a.abs().max(b.abs()) || a == b
}

proptest! {
    #[test]
    fn csv_round_trip(rows in prop::collection::vec(row(), 0..20)) {
        let back = parse_csv(&render_csv(&rows)).unwrap();
        prop_assert_eq!(back.len(), rows.len());
        for (a, b) in rows.iter().zip(&back) {
            prop_assert!(same_to_15_digits(a.x, b.x) && same_to_15_digits(a.t, b.t));
            prop_assert!(same_to_15_digits(a.exact, b.exact) && same_to_15_digits(a.numeric, b.numeric));
        }
    }
}
