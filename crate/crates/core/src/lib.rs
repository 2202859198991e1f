//! Spectrally accurate boundary-integral solver for the tension of an
//! inextensible closed interface in two-dimensional Stokes flow.
//!
//! Given a smooth closed curve Γ and an interfacial force density **F**, the
//! motion of the surrounding Stokes fluid is represented by a single-layer
//! potential over Γ. The interface is inextensible: the induced surface
//! velocity must not stretch the curve, which pins down a line tension σ as
//! the solution of the singular integral equation
//!
//! ```text
//!     𝓛σ = −𝒬[F],      𝒬[F] = τ·∂θ𝒮[F],      𝓛σ = 𝒬[∂θ(στ)],
//! ```
//!
//! where 𝒮 is the single-layer operator restricted to the interface and τ the
//! unit tangent. This crate provides:
//!
//! - [`spectral`] — the uniform periodic grid and exact Fourier calculus
//!   (differentiation, Hilbert transform, the log-kernel multiplier);
//! - [`curve`] — closed-curve geometry: frames, curvature, arclength map,
//!   a simplicity measure, and the radially perturbed circle family;
//! - [`kernels`] — pointwise Stokes kernels (stokeslet, pressure kernel,
//!   stresslet) and the regularized cotangent kernel;
//! - [`potentials`] — on-interface single-layer evaluation with spectrally
//!   accurate log-singular quadrature, off-interface velocity / pressure /
//!   stress fields, and layer-potential identity probes;
//! - [`tension`] — the operators 𝒬 and 𝓛, dense collocation assembly, and
//!   the plain / mean-zero linear solves for σ;
//! - [`spectra`] — eigen-analysis of 𝓛: full spectra, the leading-eigenvalue
//!   perturbation sweep, and the analytic second-order coefficient λ₂;
//! - [`oracles`] — independent closed-form circle solutions and exact
//!   identities used to cross-check the numerical paths.
//!
//! Everything is generic over the floating scalar through the [`scalar::Real`]
//! trait; `f64` is the intended production type and `f32` is available for
//! storage- or speed-constrained experiments. Concrete aliases for the common
//! types live at the crate root ([`GridFunctionF64`], [`ClosedCurveF64`], …).
//!
//! # Example
//!
//! Solve for the tension on the unit circle under a force whose exact tension
//! is σ(θ) = sin θ:
//!
//! ```
//! use stokes_tension::curve::{perturbed_circle, PerturbationSpec};
//! use stokes_tension::spectral::PeriodicGrid;
//! use stokes_tension::tension::{solve_tension, ForceDensity, SolveMode};
//!
//! let grid = PeriodicGrid::new(64).unwrap();
//! let circle = perturbed_circle(&PerturbationSpec::<f64>::circle(), grid).unwrap();
//! // F·(radial) = 4 + sin θ, F·(tangential) = 4 − cos θ
//! let force = ForceDensity::Frame {
//!     radial_cos: vec![4.0],
//!     radial_sin: vec![0.0, 1.0],
//!     tangential_cos: vec![4.0, -1.0],
//!     tangential_sin: vec![],
//! };
//! let sol = solve_tension(&circle, &force, SolveMode::MeanZero).unwrap();
//! for (j, &s) in sol.sigma.values().iter().enumerate() {
//!     let theta = grid.node::<f64>(j);
//!     assert!((s - theta.sin()).abs() < 1e-10);
//! }
//! ```

pub mod curve;
pub mod error;
pub mod kernels;
pub mod oracles;
pub mod potentials;
pub mod scalar;
pub mod spectra;
pub mod spectral;
pub mod tension;

pub use error::{Error, Result};
pub use scalar::Real;

/// `f64` grid function: scalar samples on the uniform periodic grid.
pub type GridFunctionF64 = spectral::GridFunction<f64>;
/// `f64` vector grid function: 2-vector samples on the uniform periodic grid.
pub type VectorGridFunctionF64 = spectral::VectorGridFunction<f64>;
/// `f64` closed interface curve.
pub type ClosedCurveF64 = curve::ClosedCurve<f64>;
/// `f64` radial perturbation of the unit circle.
pub type PerturbationSpecF64 = curve::PerturbationSpec<f64>;
/// `f64` interfacial force density.
pub type ForceDensityF64 = tension::ForceDensity<f64>;
/// `f64` dense collocation matrix of the tension operator.
pub type OperatorMatrixF64 = tension::OperatorMatrix<f64>;
/// `f64` tension solve result.
pub type TensionSolutionF64 = tension::TensionSolution<f64>;
/// `f64` spectrum report.
pub type SpectrumReportF64 = spectra::SpectrumReport<f64>;

/// `f32` grid function.
pub type GridFunctionF32 = spectral::GridFunction<f32>;
/// `f32` vector grid function.
pub type VectorGridFunctionF32 = spectral::VectorGridFunction<f32>;
/// `f32` closed interface curve.
pub type ClosedCurveF32 = curve::ClosedCurve<f32>;
/// `f32` radial perturbation of the unit circle.
pub type PerturbationSpecF32 = curve::PerturbationSpec<f32>;
