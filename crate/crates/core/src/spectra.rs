//! Eigen-analysis of the tension operator.
//!
//! The continuous operator is symmetric and negative semidefinite with
//! nullspace exactly the constants on circles; on any non-circular curve the
//! whole spectrum is strictly negative. As a radially perturbed circle
//! (1 + εg)(cos θ, sin θ) departs from roundness, the leading (algebraically
//! largest) eigenvalue λ_ε leaves zero like
//!
//! ```text
//!     λ_ε = λ₂ ε² + λ₃ ε³ + …,
//!     λ₂ = −(1/8) Σ_{n≥2} n (n² − 1)(g_{n,1}² + g_{n,2}²),
//! ```
//!
//! so the g₀ and n = 1 coefficients — which only translate or rescale the
//! circle to leading order — contribute nothing. [`eigenvalue_sweep`] tracks
//! λ_ε over a list of amplitudes and extracts λ₂, λ₃ by least squares on
//! λ_ε/ε², mirroring how the expansion is verified numerically.
//!
//! All spectra are of the **symmetrized** collocation matrix (M + Mᵀ)/2; the
//! recorded asymmetry of M is pure discretization error and doubles as a
//! quality metric for the eigenvalues.

use nalgebra::RealField;
use num_traits::Float;

use crate::curve::{perturbed_circle, ClosedCurve, PerturbationSpec};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::spectral::{GridFunction, PeriodicGrid};
use crate::tension::{assemble_l, rank_data};

/// Spectrum of the symmetrized tension operator on one curve.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumReport<T> {
    /// Eigenvalues sorted descending (the first is closest to zero).
    pub eigenvalues: Vec<T>,
    /// The algebraically largest eigenvalue.
    pub leading: T,
    /// Relative asymmetry of the unsymmetrized matrix.
    pub asymmetry: T,
    /// Perturbation amplitude the curve was built with, when known.
    pub epsilon: Option<T>,
    /// Grid size used for assembly.
    pub n_points: usize,
}

/// Computes the spectrum of (M + Mᵀ)/2 for the tension operator on `curve`.
pub fn spectrum<T: Real + RealField>(curve: &ClosedCurve<T>) -> Result<SpectrumReport<T>> {
    let op = assemble_l(curve)?;
    let half = <T as Real>::lit(0.5);
    let n = op.n_points();
    let sym = nalgebra::DMatrix::from_fn(n, n, |i, j| {
        (op.matrix()[(i, j)] + op.matrix()[(j, i)]) * half
    });
    let mut eigenvalues: Vec<T> =
        nalgebra::SymmetricEigen::new(sym).eigenvalues.iter().copied().collect();
    eigenvalues.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));
    let leading = eigenvalues[0];
    Ok(SpectrumReport {
        eigenvalues,
        leading,
        asymmetry: op.asymmetry(),
        epsilon: None,
        n_points: n,
    })
}

/// The analytic second-order coefficient of the leading eigenvalue:
/// λ₂ = −(1/8) Σ_{n≥2} n(n² − 1)(g_{n,1}² + g_{n,2}²).
pub fn lambda2<T: Real>(spec: &PerturbationSpec<T>) -> T {
    let mut acc = T::zero();
    for (i, [c, s]) in spec.modes().iter().enumerate() {
        let n = i + 1;
        if n < 2 {
            continue;
        }
        let nf = T::from_usize(n).expect("frequency fits scalar");
        acc += nf * (nf * nf - T::one()) * (*c * *c + *s * *s);
    }
    -acc / T::lit(8.0)
}

/// One amplitude of an eigenvalue sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow<T> {
    /// Perturbation amplitude ε.
    pub epsilon: T,
    /// Leading eigenvalue λ_ε.
    pub lambda: T,
    /// λ_ε/ε² (NaN at ε = 0).
    pub lambda_over_eps2: T,
    /// λ_ε/ε⁴ (NaN at ε = 0).
    pub lambda_over_eps4: T,
}

/// Sweep of the leading eigenvalue over perturbation amplitudes, with the
/// least-squares extraction of λ₂ and λ₃.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepReport<T> {
    /// One row per amplitude, sorted by ε ascending.
    pub rows: Vec<SweepRow<T>>,
    /// Intercept of the fit λ_ε/ε² ≈ λ₂ + λ₃ε over the smallest three
    /// positive amplitudes; `None` with fewer than two usable points.
    pub fitted_lambda2: Option<T>,
    /// Slope of the same fit.
    pub fitted_lambda3: Option<T>,
    /// Grid size used for every spectrum in the sweep.
    pub n_points: usize,
}

/// Tracks the leading eigenvalue of the perturbed-circle family over the
/// given amplitudes and fits λ_ε/ε² ≈ λ₂ + λ₃ε on the smallest three
/// positive amplitudes.
///
/// The shape function comes from `spec`; its own ε is ignored in favor of
/// each sweep value. Amplitudes for which the perturbed circle is invalid
/// (self-intersecting, misoriented) propagate their construction error.
pub fn eigenvalue_sweep<T: Real + RealField>(
    spec: &PerturbationSpec<T>,
    epsilons: &[T],
    grid: PeriodicGrid,
) -> Result<SweepReport<T>> {
    if epsilons.is_empty() {
        return Err(Error::InvalidSweep("no amplitudes given".into()));
    }
    if let Some(bad) = epsilons.iter().find(|e| !e.is_finite()) {
        return Err(Error::InvalidSweep(format!(
            "non-finite amplitude {:?}",
            bad.to_f64_lossy()
        )));
    }
    let mut rows = Vec::with_capacity(epsilons.len());
    for &eps in epsilons {
        let curve = perturbed_circle(&spec.with_epsilon(eps), grid)?;
        let report = spectrum(&curve)?;
        let lambda = report.leading;
        let (r2, r4) = if eps == T::zero() {
            (Float::nan(), Float::nan())
        } else {
            let e2 = eps * eps;
            (lambda / e2, lambda / (e2 * e2))
        };
        rows.push(SweepRow { epsilon: eps, lambda, lambda_over_eps2: r2, lambda_over_eps4: r4 });
    }
    rows.sort_by(|a, b| a.epsilon.partial_cmp(&b.epsilon).expect("amplitudes are finite"));

    // Ordinary least squares of λ/ε² against ε on the three smallest
    // positive amplitudes: intercept ≈ λ₂, slope ≈ λ₃.
    let fit_points: Vec<(T, T)> = rows
        .iter()
        .filter(|r| r.epsilon > T::zero())
        .take(3)
        .map(|r| (r.epsilon, r.lambda_over_eps2))
        .collect();
    let (fitted_lambda2, fitted_lambda3) = if fit_points.len() < 2 {
        (None, None)
    } else {
        let m = T::from_usize(fit_points.len()).expect("count fits scalar");
        let sx = fit_points.iter().fold(T::zero(), |s, p| s + p.0);
        let sxx = fit_points.iter().fold(T::zero(), |s, p| s + p.0 * p.0);
        let sy = fit_points.iter().fold(T::zero(), |s, p| s + p.1);
        let sxy = fit_points.iter().fold(T::zero(), |s, p| s + p.0 * p.1);
        let det = m * sxx - sx * sx;
        let slope = (m * sxy - sx * sy) / det;
        let intercept = (sy - slope * sx) / m;
        (Some(intercept), Some(slope))
    };

    Ok(SweepReport { rows, fitted_lambda2, fitted_lambda3, n_points: grid.n_points() })
}

/// The normalized nullspace vector of the tension operator on a circle:
/// the eigenvector of the leading eigenvalue, scaled to ∫σ² dθ = 2π with
/// positive mean. Fails with [`Error::NotSingular`] when the leading
/// eigenvalue is not within the rank tolerance of zero — i.e. on any curve
/// that is not a circle.
pub fn nullspace_vector<T: Real + RealField>(curve: &ClosedCurve<T>) -> Result<GridFunction<T>> {
    let op = assemble_l(curve)?;
    let half = <T as Real>::lit(0.5);
    let n = op.n_points();
    let sym = nalgebra::DMatrix::from_fn(n, n, |i, j| {
        (op.matrix()[(i, j)] + op.matrix()[(j, i)]) * half
    });
    let eig = nalgebra::SymmetricEigen::new(sym);
    let eigenvalues: Vec<T> = eig.eigenvalues.iter().copied().collect();
    let (_, _, rank_tol) = rank_data(&eigenvalues);
    let mut lead_idx = 0;
    for (i, &v) in eigenvalues.iter().enumerate() {
        if v > eigenvalues[lead_idx] {
            lead_idx = i;
        }
    }
    let leading_abs = Float::abs(eigenvalues[lead_idx]);
    if leading_abs > rank_tol {
        return Err(Error::NotSingular {
            leading: leading_abs.to_f64_lossy(),
            tolerance: rank_tol.to_f64_lossy(),
        });
    }
    let column = eig.eigenvectors.column(lead_idx);
    let h = curve.grid().spacing::<T>();
    let sum_sq = column.iter().fold(T::zero(), |s, &v| s + v * v);
    let scale = Float::sqrt(<T as Real>::two_pi() / (h * sum_sq));
    let mean = column.iter().fold(T::zero(), |s, &v| s + v);
    let signed_scale = if mean < T::zero() { -scale } else { scale };
    GridFunction::new(curve.grid(), column.iter().map(|&v| v * signed_scale).collect())
}
