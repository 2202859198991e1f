//! The solve, eig, and sweep runners: build the problem from settings, call
//! the library, and emit tables plus a summary.

use std::time::Instant;

use stokes_tension::spectra::{eigenvalue_sweep, spectrum};
use stokes_tension::spectral::PeriodicGrid;
use stokes_tension::tension::solve_tension;

use crate::config::Settings;
use crate::output::{fmt, write_csv, Summary};
use crate::Failure;

fn require_curve(settings: &Settings) -> Result<&crate::config::CurveSpec, Failure> {
    settings
        .curve
        .as_ref()
        .ok_or_else(|| Failure::Config("no curve specified (set [curve] or a preset)".into()))
}

pub fn cmd_solve(settings: &Settings) -> Result<(), Failure> {
    let start = Instant::now();
    let curve = require_curve(settings)?.build(settings.n)?;
    let force = settings
        .force
        .as_ref()
        .ok_or_else(|| Failure::Config("no force specified (set [force] or a preset)".into()))?
        .density(settings.n)?;
    let solution = solve_tension(&curve, &force, settings.mode)?;
    let elapsed = start.elapsed();

    let grid = curve.grid();
    if settings.formats.csv {
        let sigma_rows: Vec<Vec<String>> = (0..settings.n)
            .map(|j| vec![fmt(grid.node(j)), fmt(solution.sigma.value(j))])
            .collect();
        write_csv(&settings.out, "sigma.csv", "theta,sigma", &sigma_rows)?;
        let velocity_rows: Vec<Vec<String>> = (0..settings.n)
            .map(|j| {
                let [u1, u2] = solution.interface_velocity.value(j);
                vec![fmt(grid.node(j)), fmt(u1), fmt(u2)]
            })
            .collect();
        write_csv(&settings.out, "velocity.csv", "theta,u1,u2", &velocity_rows)?;
    }

    if settings.formats.json {
        let mut summary = Summary::new("solve");
        summary.set_int("n", settings.n as u64);
        summary.set_str("mode", &solution.mode.to_string());
        summary.set_num("sigma_sup", solution.sigma.sup_norm());
        summary.set_num("sigma_mean", solution.sigma.mean());
        summary.set_num("velocity_sup", solution.interface_velocity.sup_norm());
        summary.set_num("residual_inext", solution.residual_inext);
        summary.set_opt_num("condition_estimate", solution.condition_estimate);
        if settings.benchmark {
            // Errors against the exactly known benchmark solution
            // σ = sin θ, u = (−2 sin θ, 2 cos θ).
            let mut sigma_err: f64 = 0.0;
            let mut velocity_err: f64 = 0.0;
            for j in 0..settings.n {
                let t: f64 = grid.node(j);
                sigma_err = sigma_err.max((solution.sigma.value(j) - t.sin()).abs());
                let [u1, u2] = solution.interface_velocity.value(j);
                velocity_err = velocity_err
                    .max((u1 + 2.0 * t.sin()).abs())
                    .max((u2 - 2.0 * t.cos()).abs());
            }
            summary.set_num("sigma_error_sup", sigma_err);
            summary.set_num("velocity_error_sup", velocity_err);
        }
        summary.set_int("elapsed_ms", elapsed.as_millis() as u64);
        summary.write(&settings.out)?;
    }

    println!(
        "solve: n = {}, mode = {}, inextensibility residual = {:.3e}",
        settings.n, solution.mode, solution.residual_inext
    );
    Ok(())
}

pub fn cmd_eig(settings: &Settings) -> Result<(), Failure> {
    let start = Instant::now();
    let curve = require_curve(settings)?.build(settings.n)?;
    let report = spectrum(&curve)?;
    let elapsed = start.elapsed();

    if settings.formats.csv {
        let rows: Vec<Vec<String>> = report
            .eigenvalues
            .iter()
            .enumerate()
            .map(|(i, &lambda)| vec![i.to_string(), fmt(lambda)])
            .collect();
        write_csv(&settings.out, "spectrum.csv", "index,eigenvalue", &rows)?;
    }

    if settings.formats.json {
        let mut summary = Summary::new("eig");
        summary.set_int("n", settings.n as u64);
        summary.set_num("leading_eigenvalue", report.leading);
        summary.set_num("matrix_asymmetry", report.asymmetry);
        summary.set_num_array("eigenvalues", &report.eigenvalues);
        summary.set_int("elapsed_ms", elapsed.as_millis() as u64);
        summary.write(&settings.out)?;
    }

    println!(
        "eig: n = {}, leading eigenvalue = {:.6e}, asymmetry = {:.3e}",
        settings.n, report.leading, report.asymmetry
    );
    Ok(())
}

pub fn cmd_sweep(settings: &Settings) -> Result<(), Failure> {
    let start = Instant::now();
    let spec = require_curve(settings)?.perturbation()?;
    let epsilons = settings
        .epsilons
        .clone()
        .ok_or_else(|| Failure::Config("no sweep amplitudes (set [sweep] epsilons)".into()))?;
    if epsilons.is_empty() {
        return Err(Failure::Config("sweep epsilons list is empty".into()));
    }
    let grid = PeriodicGrid::new(settings.n)?;
    let report = eigenvalue_sweep(&spec, &epsilons, grid)?;
    let elapsed = start.elapsed();

    let fitted2 = report.fitted_lambda2.unwrap_or(f64::NAN);
    let fitted3 = report.fitted_lambda3.unwrap_or(f64::NAN);
    if settings.formats.csv {
        let rows: Vec<Vec<String>> = report
            .rows
            .iter()
            .map(|row| {
                vec![
                    fmt(row.epsilon),
                    fmt(row.lambda),
                    fmt(row.lambda_over_eps2),
                    fmt(row.lambda_over_eps4),
                    fmt(fitted2),
                    fmt(fitted3),
                ]
            })
            .collect();
        write_csv(
            &settings.out,
            "lambda.csv",
            "eps,lambda,lambda_over_eps2,lambda_over_eps4,fitted_lambda2,fitted_lambda3",
            &rows,
        )?;
    }

    if settings.formats.json {
        let mut summary = Summary::new("sweep");
        summary.set_int("n", settings.n as u64);
        summary.set_int("n_amplitudes", report.rows.len() as u64);
        summary.set_opt_num("fitted_lambda2", report.fitted_lambda2);
        summary.set_opt_num("fitted_lambda3", report.fitted_lambda3);
        summary.set_int("elapsed_ms", elapsed.as_millis() as u64);
        summary.write(&settings.out)?;
    }

    println!(
        "sweep: n = {}, {} amplitudes, fitted second-order coefficient = {:.6}",
        settings.n,
        report.rows.len(),
        fitted2
    );
    Ok(())
}
