//! The tension operators and the linear solve for σ.
//!
//! An inextensible interface cannot stretch: the single-layer velocity
//! u = 𝒮[F + ∂θ(στ)] must satisfy τ·∂θu = 0. Writing 𝒬[g] = τ·∂θ𝒮[g] and
//! 𝓛σ = 𝒬[∂θ(στ)], the tension solves
//!
//! ```text
//!     𝓛σ = −𝒬[F].
//! ```
//!
//! 𝓛 is symmetric and negative semidefinite in the dθ inner product. On a
//! circle its nullspace is exactly the constants (a constant tension on a
//! circle induces no flow), so the dense collocation matrix is singular
//! there and the solve offers two formulations:
//!
//! * **plain** — direct LU on the N×N system; rejected with
//!   [`Error::SingularOperator`] when the symmetrized matrix has an
//!   eigenvalue within `1e−8 · (spectral radius)` of zero;
//! * **mean-zero** — the bordered system `[[M, 1], [1ᵀ, 0]]` that selects the
//!   unique solution with ∫σ dθ = 0, the natural normalization on a circle;
//! * **auto** — plain unless the singularity test trips, then mean-zero.
//!
//! 𝒬 is computed along one authoritative path — a spectral derivative of the
//! on-grid single-layer values. The independent split form that separates
//! the Hilbert-transform part is deliberately kept in
//! [`crate::oracles::split_q_check`], never here, so the two routes stay
//! cross-checkable.

use nalgebra::{DMatrix, DVector, RealField};

use crate::curve::ClosedCurve;
use crate::error::{Error, Result};
use crate::potentials::single_layer_on_interface;
use crate::scalar::Real;
use crate::spectral::{fourier_derivative, GridFunction, PeriodicGrid, VectorGridFunction};

/// Relative threshold under which the smallest-magnitude eigenvalue marks
/// the operator as singular (the circle nullspace is exact; everything else
/// gets a conditioning warning instead).
const RANK_TOL_RATIO: f64 = 1e-8;

/// Relative threshold under which a solve records a near-singularity
/// condition estimate.
const CONDITION_WARN_RATIO: f64 = 1e-6;

/// An interfacial force density, either as raw samples or as Fourier
/// coefficients in the polar frame of the unit circle.
#[derive(Clone, Debug, PartialEq)]
pub enum ForceDensity<T> {
    /// Arbitrary per-node force samples (per unit θ).
    Raw(VectorGridFunction<T>),
    /// F(θ) = f_r(θ)·(cos θ, sin θ) + f_t(θ)·(−sin θ, cos θ) with
    /// f_r = Σ_n `radial_cos[n]` cos nθ + `radial_sin[n]` sin nθ and
    /// likewise f_t from the tangential coefficients. Vector index is the
    /// frequency n (index 0 = constant term; a sine entry at index 0 is
    /// inert); missing entries are zero.
    Frame {
        radial_cos: Vec<T>,
        radial_sin: Vec<T>,
        tangential_cos: Vec<T>,
        tangential_sin: Vec<T>,
    },
}

fn fourier_series<T: Real>(cos_coeffs: &[T], sin_coeffs: &[T], theta: T) -> T {
    let mut acc = T::zero();
    for (n, &c) in cos_coeffs.iter().enumerate() {
        acc += c * (T::from_usize(n).expect("frequency fits scalar") * theta).cos();
    }
    for (n, &s) in sin_coeffs.iter().enumerate() {
        acc += s * (T::from_usize(n).expect("frequency fits scalar") * theta).sin();
    }
    acc
}

impl<T: Real> ForceDensity<T> {
    /// Samples the density on `grid`. A [`ForceDensity::Raw`] value must
    /// already live on that grid.
    pub fn realize(&self, grid: PeriodicGrid) -> Result<VectorGridFunction<T>> {
        match self {
            Self::Raw(samples) => {
                if samples.grid() != grid {
                    return Err(Error::GridMismatch(grid.n_points(), samples.n_points()));
                }
                Ok(samples.clone())
            }
            Self::Frame { radial_cos, radial_sin, tangential_cos, tangential_sin } => {
                Ok(VectorGridFunction::from_fn(grid, |theta| {
                    let fr = fourier_series(radial_cos, radial_sin, theta);
                    let ft = fourier_series(tangential_cos, tangential_sin, theta);
                    let (s, c) = theta.sin_cos();
                    [fr * c - ft * s, fr * s + ft * c]
                }))
            }
        }
    }
}

/// τ·∂θv for a vector field v on the curve's grid.
fn tangential_dtheta<T: Real>(
    curve: &ClosedCurve<T>,
    v: &VectorGridFunction<T>,
) -> GridFunction<T> {
    let dvx = fourier_derivative(v.x());
    let dvy = fourier_derivative(v.y());
    let tx = curve.tangent().x();
    let ty = curve.tangent().y();
    tx.zip_with(&dvx, |a, b| a * b)
        .zip_with(&ty.zip_with(&dvy, |a, b| a * b), |a, b| a + b)
}

/// ∂θ(στ) as a vector field on the curve's grid.
fn sigma_tau_derivative<T: Real>(
    curve: &ClosedCurve<T>,
    sigma: &GridFunction<T>,
) -> VectorGridFunction<T> {
    let sx = sigma.zip_with(curve.tangent().x(), |s, t| s * t);
    let sy = sigma.zip_with(curve.tangent().y(), |s, t| s * t);
    VectorGridFunction::from_components(fourier_derivative(&sx), fourier_derivative(&sy))
        .expect("components share the tension grid")
}

fn apply_q_raw<T: Real>(
    curve: &ClosedCurve<T>,
    density: &VectorGridFunction<T>,
) -> Result<GridFunction<T>> {
    let u = single_layer_on_interface(curve, density)?;
    Ok(tangential_dtheta(curve, &u))
}

/// The stretching functional 𝒬[F] = τ·∂θ𝒮[F].
///
/// On the unit circle this annihilates the position field and maps
/// cos(nθ)·∂θX to −¼ sin(nθ); its integral over θ vanishes there, which is
/// what makes the mean-zero normalization consistent.
pub fn apply_q<T: Real>(curve: &ClosedCurve<T>, force: &ForceDensity<T>) -> Result<GridFunction<T>> {
    let density = force.realize(curve.grid())?;
    apply_q_raw(curve, &density)
}

/// The tension operator 𝓛σ = 𝒬[∂θ(στ)].
pub fn apply_l<T: Real>(curve: &ClosedCurve<T>, sigma: &GridFunction<T>) -> Result<GridFunction<T>> {
    if sigma.grid() != curve.grid() {
        return Err(Error::GridMismatch(curve.n_points(), sigma.n_points()));
    }
    apply_q_raw(curve, &sigma_tau_derivative(curve, sigma))
}

/// Dense collocation matrix of 𝓛 together with its measured asymmetry.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix<T: nalgebra::Scalar> {
    matrix: DMatrix<T>,
    asymmetry: T,
}

impl<T: Real> OperatorMatrix<T> {
    /// The N×N matrix: column j is 𝓛 applied to the cardinal function of
    /// node j.
    pub fn matrix(&self) -> &DMatrix<T> {
        &self.matrix
    }

    /// Relative asymmetry ‖M − Mᵀ‖_F / ‖M‖_F. The continuous operator is
    /// symmetric, so this measures pure discretization error.
    pub fn asymmetry(&self) -> T {
        self.asymmetry
    }

    /// Matrix dimension N.
    pub fn n_points(&self) -> usize {
        self.matrix.nrows()
    }
}

/// Assembles the dense collocation matrix of 𝓛 column by column on the
/// trigonometric cardinal basis (discrete delta at each node).
pub fn assemble_l<T: Real>(curve: &ClosedCurve<T>) -> Result<OperatorMatrix<T>> {
    let grid = curve.grid();
    let n = grid.n_points();
    let mut matrix = DMatrix::<T>::zeros(n, n);
    for j in 0..n {
        let mut delta = vec![T::zero(); n];
        delta[j] = T::one();
        let column = apply_l(curve, &GridFunction::new(grid, delta)?)?;
        for i in 0..n {
            matrix[(i, j)] = column.value(i);
        }
    }
    let mut skew = T::zero();
    let mut norm = T::zero();
    for i in 0..n {
        for j in 0..n {
            let d = matrix[(i, j)] - matrix[(j, i)];
            skew += d * d;
            norm += matrix[(i, j)] * matrix[(i, j)];
        }
    }
    let asymmetry = (skew / norm).sqrt();
    Ok(OperatorMatrix { matrix, asymmetry })
}

/// Eigenvalues of the symmetrized matrix (M + Mᵀ)/2, unordered.
pub(crate) fn symmetrized_eigenvalues<T: Real + RealField>(matrix: &DMatrix<T>) -> Vec<T> {
    let n = matrix.nrows();
    let half = <T as Real>::lit(0.5);
    let sym = DMatrix::from_fn(n, n, |i, j| (matrix[(i, j)] + matrix[(j, i)]) * half);
    nalgebra::SymmetricEigen::new(sym).eigenvalues.iter().copied().collect()
}

/// (spectral radius, smallest |λ|, rank tolerance) for a set of eigenvalues.
pub(crate) fn rank_data<T: Real>(eigenvalues: &[T]) -> (T, T, T) {
    let radius = eigenvalues.iter().fold(T::zero(), |m, &v| m.max(v.abs()));
    let smallest = eigenvalues.iter().fold(T::infinity(), |m, &v| m.min(v.abs()));
    (radius, smallest, T::lit(RANK_TOL_RATIO) * radius)
}

/// How [`solve_tension`] should treat the circle nullspace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveMode {
    /// Plain solve unless the operator is singular at the rank tolerance,
    /// then mean-zero.
    Auto,
    /// Direct N×N solve; fails on a circle.
    Plain,
    /// Bordered solve enforcing ∫σ dθ = 0.
    MeanZero,
}

/// The formulation a solve actually used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveKind {
    /// Direct N×N LU solve.
    Plain,
    /// Bordered (N+1) solve with the zero-mean constraint.
    MeanZero,
}

impl std::fmt::Display for SolveKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SolveKind::Plain => "plain",
            SolveKind::MeanZero => "mean_zero",
        })
    }
}

/// Result of a tension solve.
#[derive(Clone, Debug)]
pub struct TensionSolution<T> {
    /// The tension σ at the nodes.
    pub sigma: GridFunction<T>,
    /// Interface velocity u(X(θ)) = 𝒮[F + ∂θ(στ)] in the dθ convention.
    pub interface_velocity: VectorGridFunction<T>,
    /// Sup norm of τ·∂θu — how well the solved motion preserves arclength.
    pub residual_inext: T,
    /// Formulation actually used.
    pub mode: SolveKind,
    /// Near-singularity warning: spectral radius over smallest |eigenvalue|,
    /// recorded when the smallest eigenvalue is within 10⁻⁶ of singular in
    /// relative terms (always the case on and near circles), `None` for
    /// comfortably invertible operators.
    pub condition_estimate: Option<T>,
}

/// Solves 𝓛σ = −𝒬[F] on the curve and reports σ, the induced interface
/// velocity, and the inextensibility residual.
pub fn solve_tension<T: Real + RealField>(
    curve: &ClosedCurve<T>,
    force: &ForceDensity<T>,
    mode: SolveMode,
) -> Result<TensionSolution<T>> {
    let grid = curve.grid();
    let n = grid.n_points();
    let density = force.realize(grid)?;
    let op = assemble_l(curve)?;
    let eigenvalues = symmetrized_eigenvalues(op.matrix());
    let (radius, smallest, rank_tol) = rank_data(&eigenvalues);
    let singular = smallest <= rank_tol;

    let kind = match mode {
        SolveMode::Plain => {
            if singular {
                return Err(Error::SingularOperator { leading: smallest.to_f64_lossy() });
            }
            SolveKind::Plain
        }
        SolveMode::MeanZero => SolveKind::MeanZero,
        SolveMode::Auto => {
            if singular {
                SolveKind::MeanZero
            } else {
                SolveKind::Plain
            }
        }
    };

    let q = apply_q_raw(curve, &density)?;
    let sigma_values: Vec<T> = match kind {
        SolveKind::Plain => {
            let b = DVector::from_fn(n, |i, _| -q.value(i));
            let sol = op
                .matrix()
                .clone()
                .lu()
                .solve(&b)
                .ok_or_else(|| Error::SolveFailed("dense LU factorization broke down".into()))?;
            sol.iter().copied().collect()
        }
        SolveKind::MeanZero => {
            let mut bordered = DMatrix::<T>::zeros(n + 1, n + 1);
            bordered.view_mut((0, 0), (n, n)).copy_from(op.matrix());
            for i in 0..n {
                bordered[(i, n)] = T::one();
                bordered[(n, i)] = T::one();
            }
            let mut rhs = DVector::<T>::zeros(n + 1);
            for i in 0..n {
                rhs[i] = -q.value(i);
            }
            let sol = bordered
                .lu()
                .solve(&rhs)
                .ok_or_else(|| Error::SolveFailed("bordered LU factorization broke down".into()))?;
            (0..n).map(|i| sol[i]).collect()
        }
    };
    let sigma = GridFunction::new(grid, sigma_values)?;

    let tension_part = sigma_tau_derivative(curve, &sigma);
    let combined = VectorGridFunction::from_components(
        density.x().zip_with(tension_part.x(), |a, b| a + b),
        density.y().zip_with(tension_part.y(), |a, b| a + b),
    )
    .expect("densities share the solve grid");
    let interface_velocity = single_layer_on_interface(curve, &combined)?;
    let residual_inext = tangential_dtheta(curve, &interface_velocity).sup_norm();

    let condition_estimate = if smallest <= <T as Real>::lit(CONDITION_WARN_RATIO) * radius {
        Some(radius / smallest)
    } else {
        None
    };

    Ok(TensionSolution { sigma, interface_velocity, residual_inext, mode: kind, condition_estimate })
}

/// Splits a force into its frame components: f₁ = F·τ and f₂ = F·n.
pub fn decompose_rhs<T: Real>(
    curve: &ClosedCurve<T>,
    force: &ForceDensity<T>,
) -> Result<(GridFunction<T>, GridFunction<T>)> {
    let density = force.realize(curve.grid())?;
    Ok((density.dot(curve.tangent()), density.dot(curve.normal())))
}
