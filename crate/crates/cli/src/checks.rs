//! Self-verification: a battery of named checks with pinned tolerances,
//! spanning exact reference solutions, operator identities, dual-route
//! comparisons, and (at the full level) convergence and asymptotics studies.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stokes_tension::curve::{build_curve, perturbed_circle, ClosedCurve, PerturbationSpec};
use stokes_tension::oracles::{circle_sigma, split_q_check, toland_check, FrameFourierForce};
use stokes_tension::potentials::{
    double_layer_identity, single_layer_on_interface, stress_at, stress_jump_probe, velocity_at,
    EvalPoint,
};
use stokes_tension::spectra::{eigenvalue_sweep, lambda2, spectrum};
use stokes_tension::spectral::{
    fourier_derivative, hilbert_transform, GridFunction, PeriodicGrid, VectorGridFunction,
};
use stokes_tension::tension::{apply_l, apply_q, solve_tension, ForceDensity, SolveMode};

use crate::config::{Settings, VerifyLevel};
use crate::output::{fmt, write_csv, Summary};
use crate::Failure;

pub struct Check {
    pub name: &'static str,
    pub residual: f64,
    pub tolerance: f64,
}

impl Check {
    fn passes(&self) -> bool {
        self.residual.is_finite() && self.residual <= self.tolerance
    }
}

fn grid(n: usize) -> PeriodicGrid {
    PeriodicGrid::new(n).expect("fixed grid size is valid")
}

fn unit_circle(n: usize) -> ClosedCurve<f64> {
    perturbed_circle(&PerturbationSpec::circle(), grid(n)).expect("circle is valid")
}

fn ellipse(n: usize) -> ClosedCurve<f64> {
    build_curve(&VectorGridFunction::from_fn(grid(n), |t: f64| {
        [1.3 * t.cos(), 0.8 * t.sin()]
    }))
    .expect("ellipse is valid")
}

fn wavy(n: usize) -> ClosedCurve<f64> {
    let spec = PerturbationSpec::new(0.0, vec![[0.3, 0.0], [0.0, 0.15]], 0.25);
    perturbed_circle(&spec, grid(n)).expect("perturbed curve is valid")
}

fn benchmark_force() -> ForceDensity<f64> {
    ForceDensity::Frame {
        radial_cos: vec![4.0],
        radial_sin: vec![0.0, 1.0],
        tangential_cos: vec![4.0, -1.0],
        tangential_sin: vec![],
    }
}

fn random_band_limited(rng: &mut ChaCha8Rng, g: PeriodicGrid) -> VectorGridFunction<f64> {
    let c: Vec<f64> = (0..8).map(|_| rng.gen_range(-1.0..1.0)).collect();
    VectorGridFunction::from_fn(g, |t: f64| {
        [
            c[0] + c[1] * t.cos() + c[2] * (2.0 * t).sin() + c[3] * (4.0 * t).cos(),
            c[4] + c[5] * t.sin() + c[6] * (3.0 * t).cos() + c[7] * (2.0 * t).cos(),
        ]
    })
}

fn matrix_sup_diff(a: [[f64; 2]; 2], b: [[f64; 2]; 2]) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            worst = worst.max((a[i][j] - b[i][j]).abs());
        }
    }
    worst
}

fn quick_checks(seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    let n = 64;
    let g = grid(n);
    let circle = unit_circle(n);

    // Exact benchmark solution on the circle.
    let solution = solve_tension(&circle, &benchmark_force(), SolveMode::MeanZero)
        .expect("benchmark solve succeeds");
    let mut sigma_err: f64 = 0.0;
    let mut velocity_err: f64 = 0.0;
    for j in 0..n {
        let t = g.node::<f64>(j);
        sigma_err = sigma_err.max((solution.sigma.value(j) - t.sin()).abs());
        let [u1, u2] = solution.interface_velocity.value(j);
        velocity_err =
            velocity_err.max((u1 + 2.0 * t.sin()).abs()).max((u2 - 2.0 * t.cos()).abs());
    }
    checks.push(Check { name: "benchmark_sigma", residual: sigma_err, tolerance: 1e-10 });
    checks.push(Check { name: "benchmark_velocity", residual: velocity_err, tolerance: 1e-10 });

    // Known spectrum on the circle: one zero mode plus paired eigenvalues
    // −n/4.
    let report = spectrum(&circle).expect("circle spectrum");
    let zero = report.eigenvalues.iter().map(|v| v.abs()).fold(f64::INFINITY, f64::min);
    checks.push(Check { name: "spectrum_zero_mode", residual: zero, tolerance: 1e-9 });
    let mut worst_pair: f64 = 0.0;
    for mode in 1..=20 {
        let target = -(mode as f64) / 4.0;
        let mut errs: Vec<f64> = report.eigenvalues.iter().map(|v| (v - target).abs()).collect();
        errs.sort_by(f64::total_cmp);
        worst_pair = worst_pair.max(errs[1]);
    }
    checks.push(Check { name: "spectrum_mode_pairs", residual: worst_pair, tolerance: 1e-8 });

    // Closed-form transforms of frame products.  A sign error in the
    // periodic Hilbert transform moves these residuals to ≈ 2.
    let radial = VectorGridFunction::from_fn(g, |t: f64| {
        let m = (2.0 * t).cos();
        [m * t.cos(), m * t.sin()]
    });
    let hx = hilbert_transform(radial.x());
    let hy = hilbert_transform(radial.y());
    let mut err: f64 = 0.0;
    for j in 0..n {
        let t = g.node::<f64>(j);
        let m = (2.0 * t).sin();
        err = err.max((hx.value(j) - m * t.cos()).abs()).max((hy.value(j) - m * t.sin()).abs());
    }
    checks.push(Check { name: "hilbert_01", residual: err, tolerance: 1e-10 });
    let tangential = VectorGridFunction::from_fn(g, |t: f64| {
        let m = (2.0 * t).cos();
        [-m * t.sin(), m * t.cos()]
    });
    let hx = hilbert_transform(tangential.x());
    let hy = hilbert_transform(tangential.y());
    let mut err: f64 = 0.0;
    for j in 0..n {
        let t = g.node::<f64>(j);
        let m = (2.0 * t).sin();
        err = err.max((hx.value(j) + m * t.sin()).abs()).max((hy.value(j) - m * t.cos()).abs());
    }
    checks.push(Check { name: "hilbert_02", residual: err, tolerance: 1e-10 });

    // Pointwise quadratic identity for the Hilbert derivative.
    let f = GridFunction::from_fn(g, |t: f64| t.cos() + 0.5 * (3.0 * t).sin());
    let (lhs, rhs) = toland_check(&f);
    checks.push(Check {
        name: "quadratic_identity",
        residual: lhs.zip_with(&rhs, |a, b| a - b).sup_norm(),
        tolerance: 1e-10,
    });

    // Single-layer structure: symmetric in the dθ pairing, no net flux,
    // annihilates the radial frame field on circles.
    let curved = ellipse(n);
    let f = random_band_limited(&mut rng, g);
    let h = random_band_limited(&mut rng, g);
    let lhs = f.dot(&single_layer_on_interface(&curved, &h).unwrap()).trapezoid_integral();
    let rhs = single_layer_on_interface(&curved, &f).unwrap().dot(&h).trapezoid_integral();
    checks.push(Check { name: "layer_symmetry", residual: (lhs - rhs).abs(), tolerance: 1e-10 });

    let bumpy = wavy(n);
    let density = random_band_limited(&mut rng, g);
    let u = single_layer_on_interface(&bumpy, &density).unwrap();
    let flux = u
        .dot(bumpy.normal())
        .zip_with(bumpy.speed(), |a, s| a * s)
        .trapezoid_integral();
    checks.push(Check { name: "layer_flux", residual: flux.abs(), tolerance: 1e-10 });

    let force = random_band_limited(&mut rng, g);
    let mean = apply_q(&circle, &ForceDensity::Raw(force)).unwrap().trapezoid_integral();
    checks.push(Check { name: "stretch_mean_circle", residual: mean.abs(), tolerance: 1e-10 });

    let dtau = VectorGridFunction::from_components(
        fourier_derivative(circle.tangent().x()),
        fourier_derivative(circle.tangent().y()),
    )
    .unwrap();
    checks.push(Check {
        name: "radial_layer_zero",
        residual: single_layer_on_interface(&circle, &dtau).unwrap().sup_norm(),
        tolerance: 1e-10,
    });

    // Dissipativity and the circle eigenrelation of the tension operator.
    let coeff: Vec<f64> = (0..5).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let sigma = GridFunction::from_fn(g, |t: f64| {
        coeff[0]
            + coeff[1] * t.cos()
            + coeff[2] * (2.0 * t).sin()
            + coeff[3] * (4.0 * t).cos()
            + coeff[4] * (5.0 * t).sin()
    });
    let quad = sigma
        .zip_with(&apply_l(&bumpy, &sigma).unwrap(), |a, b| a * b)
        .trapezoid_integral();
    checks.push(Check { name: "operator_nsd", residual: quad.max(0.0), tolerance: 1e-10 });

    let sin3 = GridFunction::from_fn(g, |t: f64| (3.0 * t).sin());
    let damped = apply_l(&circle, &sin3).unwrap();
    checks.push(Check {
        name: "mode_damping",
        residual: damped.zip_with(&sin3, |a, b| a + 0.75 * b).sup_norm(),
        tolerance: 1e-10,
    });

    // A purely radial cos 2θ force induces no tension on the circle.
    let inert = ForceDensity::Frame {
        radial_cos: vec![0.0, 0.0, 1.0],
        radial_sin: vec![],
        tangential_cos: vec![],
        tangential_sin: vec![],
    };
    let inert_sigma = solve_tension(&circle, &inert, SolveMode::MeanZero).unwrap().sigma;
    checks.push(Check { name: "inert_modes", residual: inert_sigma.sup_norm(), tolerance: 1e-10 });

    // Solver vs the closed-form circle tension for a random frame force.
    let draw: Vec<Vec<f64>> =
        (0..4).map(|_| (0..9).map(|_| rng.gen_range(-1.0..1.0)).collect()).collect();
    let oracle = FrameFourierForce {
        radial_cos: draw[0].clone(),
        radial_sin: draw[1].clone(),
        tangential_cos: draw[2].clone(),
        tangential_sin: draw[3].clone(),
    };
    let force = ForceDensity::Frame {
        radial_cos: draw[0].clone(),
        radial_sin: draw[1].clone(),
        tangential_cos: draw[2].clone(),
        tangential_sin: draw[3].clone(),
    };
    let solved = solve_tension(&circle, &force, SolveMode::MeanZero).unwrap();
    let exact = circle_sigma(&oracle, g);
    checks.push(Check {
        name: "closed_form_tension",
        residual: solved.sigma.zip_with(&exact, |a, b| a - b).sup_norm(),
        tolerance: 1e-10,
    });

    // Split-kernel route vs the direct route for the stretching functional.
    let f = random_band_limited(&mut rng, g);
    let split = split_q_check(&circle, &f).unwrap();
    let direct = apply_q(&circle, &ForceDensity::Raw(f)).unwrap();
    checks.push(Check {
        name: "split_route_circle",
        residual: split.zip_with(&direct, |a, b| a - b).sup_norm(),
        tolerance: 1e-9,
    });
    let fine = ellipse(128);
    let f = random_band_limited(&mut rng, grid(128));
    let split = split_q_check(&fine, &f).unwrap();
    let direct = apply_q(&fine, &ForceDensity::Raw(f)).unwrap();
    checks.push(Check {
        name: "split_route_curved",
        residual: split.zip_with(&direct, |a, b| a - b).sup_norm(),
        tolerance: 1e-8,
    });

    // Double-layer watermark integrals inside, outside, and on the curve.
    let interior = double_layer_identity(&circle, EvalPoint::Point([0.05, -0.02])).unwrap();
    checks.push(Check {
        name: "double_layer_interior",
        residual: matrix_sup_diff(interior, [[-1.0, 0.0], [0.0, -1.0]]),
        tolerance: 1e-8,
    });
    let exterior = double_layer_identity(&circle, EvalPoint::Point([3.0, 0.5])).unwrap();
    checks.push(Check {
        name: "double_layer_exterior",
        residual: matrix_sup_diff(exterior, [[0.0; 2]; 2]),
        tolerance: 1e-10,
    });
    let on_curve = double_layer_identity(&circle, EvalPoint::OnCurve(5)).unwrap();
    checks.push(Check {
        name: "double_layer_on_curve",
        residual: matrix_sup_diff(on_curve, [[-0.5, 0.0], [0.0, -0.5]]),
        tolerance: 1e-6,
    });

    checks
}

fn full_checks(seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
    let mut checks = Vec::new();

    // Grid-doubling stability of the tension solve on a non-circular curve.
    let force = |n: usize| {
        ForceDensity::Raw(VectorGridFunction::from_fn(grid(n), |t: f64| {
            [t.cos() + 0.4 * (3.0 * t).sin(), 0.3 + (2.0 * t).cos()]
        }))
    };
    let coarse = solve_tension(&wavy(64), &force(64), SolveMode::Plain).unwrap();
    let fine = solve_tension(&wavy(128), &force(128), SolveMode::Plain).unwrap();
    let mut err: f64 = 0.0;
    for j in 0..64 {
        err = err.max((coarse.sigma.value(j) - fine.sigma.value(2 * j)).abs());
    }
    checks.push(Check { name: "tension_grid_stability", residual: err, tolerance: 1e-8 });

    // Layer velocity against a twice-finer reference on a six-lobed curve.
    let lobed = |n: usize| {
        let spec = PerturbationSpec::new(
            0.0,
            vec![[0.2, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.5, 0.0]],
            0.25,
        );
        perturbed_circle(&spec, grid(n)).unwrap()
    };
    let density = |n: usize| {
        VectorGridFunction::from_fn(grid(n), |t: f64| {
            [t.cos() + 0.4 * (3.0 * t).sin(), 0.3 + (2.0 * t).cos()]
        })
    };
    let reference = single_layer_on_interface(&lobed(256), &density(256)).unwrap();
    let u = single_layer_on_interface(&lobed(128), &density(128)).unwrap();
    let mut err: f64 = 0.0;
    for j in 0..128 {
        let [ux, uy] = u.value(j);
        let [rx, ry] = reference.value(2 * j);
        err = err.max((ux - rx).abs()).max((uy - ry).abs());
    }
    checks.push(Check { name: "layer_grid_decay", residual: err, tolerance: 1e-9 });

    // Eigenvalue asymptotics for the two reference shape families.
    let two_lobe = PerturbationSpec::<f64>::new(0.5, vec![[0.0, 0.0], [0.5, 0.0]], 0.0);
    let report = eigenvalue_sweep(&two_lobe, &[0.005, 0.01, 0.02], grid(128)).unwrap();
    let fitted2 = report.fitted_lambda2.unwrap_or(f64::NAN);
    let fitted3 = report.fitted_lambda3.unwrap_or(f64::NAN);
    checks.push(Check {
        name: "sweep_quadratic_coefficient",
        residual: ((fitted2 + 3.0 / 16.0) / (3.0 / 16.0)).abs(),
        tolerance: 0.05,
    });
    checks.push(Check {
        name: "sweep_cubic_coefficient",
        residual: ((fitted3 - 3.0 / 16.0) / (3.0 / 16.0)).abs(),
        tolerance: 0.25,
    });
    let one_lobe = PerturbationSpec::<f64>::new(0.0, vec![[1.0, 0.0]], 0.0);
    let report = eigenvalue_sweep(&one_lobe, &[0.005, 0.01, 0.02], grid(128)).unwrap();
    let quartic = report.rows[0].lambda_over_eps4;
    checks.push(Check {
        name: "sweep_quartic_ratio",
        residual: ((quartic + 0.046875) / 0.046875).abs(),
        tolerance: 0.15,
    });

    // Fitted second-order coefficient vs its closed form for a random shape.
    let spec = loop {
        let modes: Vec<[f64; 2]> = (1..=5)
            .map(|_| [rng.gen_range(-0.5..0.5), rng.gen_range(-0.5..0.5)])
            .collect();
        let candidate = PerturbationSpec::<f64>::new(0.0, modes, 0.0);
        if lambda2(&candidate) != 0.0 {
            break candidate;
        }
    };
    let exact = lambda2(&spec);
    let report = eigenvalue_sweep(&spec, &[0.005, 0.01, 0.02], grid(64)).unwrap();
    let fitted = report.fitted_lambda2.unwrap_or(f64::NAN);
    checks.push(Check {
        name: "second_order_formula",
        residual: ((fitted - exact) / exact).abs(),
        tolerance: 0.05,
    });

    // Far-field behavior: decay for force-free densities, logarithmic
    // growth for net-force densities.
    let circle = unit_circle(64);
    let dipole =
        VectorGridFunction::from_fn(grid(64), |t: f64| [(2.0 * t).cos(), (2.0 * t).sin()]);
    let u100 = velocity_at(&circle, &dipole, [100.0, 0.0]).unwrap();
    let u200 = velocity_at(&circle, &dipole, [200.0, 0.0]).unwrap();
    checks.push(Check {
        name: "far_field_decay",
        residual: f64::hypot(u200[0], u200[1]) / f64::hypot(u100[0], u100[1]),
        tolerance: 0.5,
    });
    let loaded = VectorGridFunction::from_fn(grid(64), |_t: f64| [1.0, 0.0]);
    let v100 = velocity_at(&circle, &loaded, [100.0, 0.0]).unwrap();
    let v200 = velocity_at(&circle, &loaded, [200.0, 0.0]).unwrap();
    let v400 = velocity_at(&circle, &loaded, [400.0, 0.0]).unwrap();
    let ratio = (v100[0] - v200[0]) / (v200[0] - v400[0]);
    checks.push(Check {
        name: "far_field_log_growth",
        residual: (ratio - 1.0).abs(),
        tolerance: 0.05,
    });

    // Near-interface traction jump recovers the layer density magnitude.
    let n = 256;
    let circle_fine = unit_circle(n);
    let g = grid(n);
    let force = benchmark_force().realize(g).unwrap();
    let sig_tau =
        VectorGridFunction::from_fn(g, |t: f64| [-t.sin() * t.sin(), t.sin() * t.cos()]);
    let combined = VectorGridFunction::from_components(
        force.x().zip_with(&fourier_derivative(sig_tau.x()), |a, b| a + b),
        force.y().zip_with(&fourier_derivative(sig_tau.y()), |a, b| a + b),
    )
    .unwrap();
    let table = stress_jump_probe(&circle_fine, &combined, 0, &[0.4, 0.3, 0.2]).unwrap();
    let reference_mag = f64::hypot(table.reference[0], table.reference[1]);
    let closest = table.rows.last().unwrap();
    let jump_mag = f64::hypot(closest.difference[0], closest.difference[1]);
    checks.push(Check {
        name: "stress_jump_recovery",
        residual: (jump_mag - reference_mag).abs() / reference_mag,
        tolerance: 0.15,
    });

    // Stress field vs finite differences of the velocity field.
    let curved = ellipse(64);
    let density = density(64);
    let x = [2.2, 0.6];
    let h = 1e-5;
    let mut grad = [[0.0_f64; 2]; 2];
    for dim in 0..2 {
        let mut plus = x;
        let mut minus = x;
        plus[dim] += h;
        minus[dim] -= h;
        let up = velocity_at(&curved, &density, plus).unwrap();
        let um = velocity_at(&curved, &density, minus).unwrap();
        for comp in 0..2 {
            grad[comp][dim] = (up[comp] - um[comp]) / (2.0 * h);
        }
    }
    let p = stokes_tension::potentials::pressure_at(&curved, &density, x).unwrap();
    let stress = stress_at(&curved, &density, x).unwrap();
    let mut err: f64 = 0.0;
    for a in 0..2 {
        for b in 0..2 {
            let expected = grad[a][b] + grad[b][a] - if a == b { p } else { 0.0 };
            err = err.max((stress[a][b] - expected).abs());
        }
    }
    checks.push(Check { name: "stress_consistency", residual: err, tolerance: 1e-6 });

    checks
}

pub fn run(level: VerifyLevel, seed: u64) -> Vec<Check> {
    let mut checks = quick_checks(seed);
    if level == VerifyLevel::Full {
        checks.extend(full_checks(seed));
    }
    checks
}

/// Runs the verification battery, reports each check, and returns the number
/// of failures.
pub fn cmd_verify(settings: &Settings) -> Result<usize, Failure> {
    let start = Instant::now();
    let checks = run(settings.verify_level, settings.seed);
    let elapsed = start.elapsed();
    let failed = checks.iter().filter(|c| !c.passes()).count();

    for check in &checks {
        let status = if check.passes() { "ok" } else { "FAIL" };
        println!(
            "check {:<28} {:>4}   residual {:.3e}   tolerance {:.0e}",
            check.name, status, check.residual, check.tolerance
        );
    }
    println!(
        "verify: {} checks, {} failed ({:?})",
        checks.len(),
        failed,
        elapsed
    );

    if settings.formats.csv {
        let rows: Vec<Vec<String>> = checks
            .iter()
            .map(|c| {
                vec![
                    c.name.to_string(),
                    fmt(c.residual),
                    fmt(c.tolerance),
                    c.passes().to_string(),
                ]
            })
            .collect();
        write_csv(&settings.out, "checks.csv", "name,residual,tolerance,pass", &rows)?;
    }
    if settings.formats.json {
        let mut summary = Summary::new("verify");
        summary.set_str(
            "level",
            match settings.verify_level {
                VerifyLevel::Quick => "quick",
                VerifyLevel::Full => "full",
            },
        );
        summary.set_int("checks_total", checks.len() as u64);
        summary.set_int("checks_failed", failed as u64);
        summary.set_bool("pass", failed == 0);
        summary.set_int("elapsed_ms", elapsed.as_millis() as u64);
        summary.write(&settings.out)?;
    }
    Ok(failed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_battery_passes_and_is_fast() {
        let start = Instant::now();
        let checks = run(VerifyLevel::Quick, 12345);
        assert!(checks.len() >= 20, "only {} checks", checks.len());
        for check in &checks {
            assert!(check.residual.is_finite(), "{} residual not finite", check.name);
            assert!(
                check.passes(),
                "{} failed: residual {:.3e} > tolerance {:.0e}",
                check.name,
                check.residual,
                check.tolerance
            );
        }
        assert!(start.elapsed() < std::time::Duration::from_secs(10));
    }

    #[test]
    fn full_battery_passes_within_budget() {
        let start = Instant::now();
        let checks = run(VerifyLevel::Full, 12345);
        assert!(checks.len() >= 20, "only {} checks", checks.len());
        for check in &checks {
            assert!(
                check.passes(),
                "{} failed: residual {:.3e} > tolerance {:.0e}",
                check.name,
                check.residual,
                check.tolerance
            );
        }
        assert!(start.elapsed() < std::time::Duration::from_secs(300));
    }

    #[test]
    fn check_names_are_unique() {
        let checks = run(VerifyLevel::Full, 12345);
        let mut names: Vec<_> = checks.iter().map(|c| c.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), checks.len());
    }
}
