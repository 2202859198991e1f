//! Uniform periodic grid and exact spectral calculus.
//!
//! All fields live on the grid θ_j = 2πj/N, j = 0..N−1, with N even. The
//! four operators exported here are Fourier multipliers applied through the
//! FFT:
//!
//! | operator                 | multiplier on mode k           | Nyquist (k = N/2) |
//! |--------------------------|--------------------------------|-------------------|
//! | [`fourier_derivative`]   | ik                             | 0                 |
//! | [`hilbert_transform`]    | −i·sign(k), 0 at k = 0         | 0                 |
//! | [`hilbert_dtheta`]       | \|k\|                          | 0                 |
//! | [`log_kernel_multiplier`]| 1/(2\|k\|), 0 at k = 0         | 1/N               |
//!
//! `log_kernel_multiplier` is the exact action of the periodic log kernel:
//! (1/2π) ∫ −log|2 sin((θ−θ′)/2)| f(θ′) dθ′.
//!
//! **FFT convention.** The forward transform is unnormalized and the inverse
//! carries the 1/N factor, so a multiplier m(k) acts as
//! `f ↦ ifft(m(k)·fft(f))/N`. Zeroing the derivative and Hilbert multipliers
//! at the Nyquist mode keeps real input exactly real and spectra symmetric.
//!
//! All operations are pure: inputs are never mutated.

use rustfft::num_complex::Complex;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// The uniform discretization of the periodic parameter circle.
///
/// Only the point count is stored; nodes are generated on demand in the
/// requested precision. The count must be even (the spectral operators need a
/// well-defined Nyquist mode) and at least [`PeriodicGrid::MIN_POINTS`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PeriodicGrid {
    n_points: usize,
}

impl PeriodicGrid {
    /// Smallest supported grid.
    pub const MIN_POINTS: usize = 8;

    /// Creates a grid with `n_points` uniform nodes starting at θ = 0.
    pub fn new(n_points: usize) -> Result<Self> {
        if n_points < Self::MIN_POINTS || n_points % 2 != 0 {
            return Err(Error::InvalidGrid(n_points));
        }
        Ok(Self { n_points })
    }

    /// Number of nodes N.
    pub fn n_points(self) -> usize {
        self.n_points
    }

    /// Node spacing h = 2π/N.
    pub fn spacing<T: Real>(self) -> T {
        T::two_pi() / T::from_usize(self.n_points).expect("grid size fits scalar")
    }

    /// The j-th node θ_j = 2πj/N.
    pub fn node<T: Real>(self, j: usize) -> T {
        debug_assert!(j < self.n_points);
        self.spacing::<T>() * T::from_usize(j).expect("node index fits scalar")
    }

    /// All nodes in order.
    pub fn nodes<T: Real>(self) -> Vec<T> {
        (0..self.n_points).map(|j| self.node(j)).collect()
    }

    /// Signed Fourier mode number for storage index `j`:
    /// 0, 1, …, N/2, −N/2+1, …, −1. Index N/2 is the Nyquist mode.
    fn mode_number(self, j: usize) -> i64 {
        let n = self.n_points as i64;
        let j = j as i64;
        if j <= n / 2 {
            j
        } else {
            j - n
        }
    }
}

/// Real scalar samples on a [`PeriodicGrid`].
#[derive(Clone, Debug, PartialEq)]
pub struct GridFunction<T> {
    grid: PeriodicGrid,
    values: Vec<T>,
}

impl<T: Real> GridFunction<T> {
    /// Wraps sample values, checking length and finiteness.
    pub fn new(grid: PeriodicGrid, values: Vec<T>) -> Result<Self> {
        if values.len() != grid.n_points() {
            return Err(Error::LengthMismatch { len: values.len(), expected: grid.n_points() });
        }
        if let Some(j) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(j));
        }
        Ok(Self { grid, values })
    }

    /// Samples `f` at every node.
    pub fn from_fn(grid: PeriodicGrid, f: impl Fn(T) -> T) -> Self {
        let values = (0..grid.n_points()).map(|j| f(grid.node(j))).collect();
        Self { grid, values }
    }

    /// The zero function.
    pub fn zeros(grid: PeriodicGrid) -> Self {
        Self { grid, values: vec![T::zero(); grid.n_points()] }
    }

    /// The constant function `c`.
    pub fn constant(grid: PeriodicGrid, c: T) -> Self {
        Self { grid, values: vec![c; grid.n_points()] }
    }

    /// The grid this function lives on.
    pub fn grid(&self) -> PeriodicGrid {
        self.grid
    }

    /// Sample values in node order.
    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// Value at node `j`.
    pub fn value(&self, j: usize) -> T {
        self.values[j]
    }

    /// Number of nodes.
    pub fn n_points(&self) -> usize {
        self.grid.n_points()
    }

    /// Sup norm max_j |f_j|.
    pub fn sup_norm(&self) -> T {
        self.values.iter().fold(T::zero(), |m, &v| m.max(v.abs()))
    }

    /// Trapezoid quadrature (2π/N)·Σ_j f_j — exact for the zero mode.
    pub fn trapezoid_integral(&self) -> T {
        let h = self.grid.spacing::<T>();
        self.values.iter().fold(T::zero(), |s, &v| s + v) * h
    }

    /// Mean value (1/2π)·∫f dθ.
    pub fn mean(&self) -> T {
        self.trapezoid_integral() / T::two_pi()
    }

    /// Trapezoid L² norm √(∫f² dθ).
    pub fn l2_norm(&self) -> T {
        let h = self.grid.spacing::<T>();
        (self.values.iter().fold(T::zero(), |s, &v| s + v * v) * h).sqrt()
    }

    /// Applies `f` to every sample.
    pub fn map(&self, f: impl Fn(T) -> T) -> Self {
        Self { grid: self.grid, values: self.values.iter().map(|&v| f(v)).collect() }
    }

    /// Combines two functions node by node.
    ///
    /// # Panics
    /// Panics if the grids differ; callers pair functions from one grid.
    pub fn zip_with(&self, other: &Self, f: impl Fn(T, T) -> T) -> Self {
        assert_eq!(
            self.grid, other.grid,
            "zip_with requires both functions on the same grid"
        );
        let values =
            self.values.iter().zip(&other.values).map(|(&a, &b)| f(a, b)).collect();
        Self { grid: self.grid, values }
    }

    /// Evaluates the trigonometric interpolant at an arbitrary angle.
    ///
    /// The interpolant is the band-limited function matching the samples:
    /// Σ_{|k|<N/2} c_k e^{ikθ} + c_{N/2} cos(Nθ/2). Cost is O(N) per point.
    pub fn evaluate_at(&self, theta: T) -> T {
        let n = self.n_points();
        let spectrum = forward(&self.values);
        let scale = T::from_usize(n).expect("grid size fits scalar");
        let mut acc = T::zero();
        for (j, c) in spectrum.iter().enumerate() {
            let k = self.grid.mode_number(j);
            let kt = T::from_i64(k).expect("mode fits scalar") * theta;
            if j == n / 2 {
                // Real interpolant: the Nyquist coefficient contributes a pure
                // cosine (its imaginary part is zero for real samples).
                acc += c.re * kt.cos();
            } else {
                acc += c.re * kt.cos() - c.im * kt.sin();
            }
        }
        acc / scale
    }
}

/// 2-vector samples on a [`PeriodicGrid`], stored as two component
/// [`GridFunction`]s on the same grid.
#[derive(Clone, Debug, PartialEq)]
pub struct VectorGridFunction<T> {
    x: GridFunction<T>,
    y: GridFunction<T>,
}

impl<T: Real> VectorGridFunction<T> {
    /// Wraps per-node 2-vectors, checking length and finiteness.
    pub fn new(grid: PeriodicGrid, values: Vec<[T; 2]>) -> Result<Self> {
        if values.len() != grid.n_points() {
            return Err(Error::LengthMismatch { len: values.len(), expected: grid.n_points() });
        }
        let x = GridFunction::new(grid, values.iter().map(|v| v[0]).collect())?;
        let y = GridFunction::new(grid, values.iter().map(|v| v[1]).collect())?;
        Ok(Self { x, y })
    }

    /// Builds from two scalar components on the same grid.
    pub fn from_components(x: GridFunction<T>, y: GridFunction<T>) -> Result<Self> {
        if x.grid() != y.grid() {
            return Err(Error::GridMismatch(x.n_points(), y.n_points()));
        }
        Ok(Self { x, y })
    }

    /// Samples a vector field at every node.
    pub fn from_fn(grid: PeriodicGrid, f: impl Fn(T) -> [T; 2]) -> Self {
        let mut xs = Vec::with_capacity(grid.n_points());
        let mut ys = Vec::with_capacity(grid.n_points());
        for j in 0..grid.n_points() {
            let [x, y] = f(grid.node(j));
            xs.push(x);
            ys.push(y);
        }
        Self {
            x: GridFunction { grid, values: xs },
            y: GridFunction { grid, values: ys },
        }
    }

    /// The grid this field lives on.
    pub fn grid(&self) -> PeriodicGrid {
        self.x.grid()
    }

    /// Number of nodes.
    pub fn n_points(&self) -> usize {
        self.x.n_points()
    }

    /// First component.
    pub fn x(&self) -> &GridFunction<T> {
        &self.x
    }

    /// Second component.
    pub fn y(&self) -> &GridFunction<T> {
        &self.y
    }

    /// Vector value at node `j`.
    pub fn value(&self, j: usize) -> [T; 2] {
        [self.x.value(j), self.y.value(j)]
    }

    /// Sup norm of the Euclidean vector magnitude.
    pub fn sup_norm(&self) -> T {
        (0..self.n_points()).fold(T::zero(), |m, j| {
            let [vx, vy] = self.value(j);
            m.max(vx.hypot(vy))
        })
    }

    /// Pointwise dot product with another vector field on the same grid.
    ///
    /// # Panics
    /// Panics if the grids differ.
    pub fn dot(&self, other: &Self) -> GridFunction<T> {
        let xx = self.x.zip_with(&other.x, |a, b| a * b);
        let yy = self.y.zip_with(&other.y, |a, b| a * b);
        xx.zip_with(&yy, |a, b| a + b)
    }
}

/// Forward FFT (unnormalized).
fn forward<T: Real>(values: &[T]) -> Vec<Complex<T>> {
    let mut buffer: Vec<Complex<T>> =
        values.iter().map(|&v| Complex::new(v, T::zero())).collect();
    FftPlanner::new().plan_fft_forward(values.len()).process(&mut buffer);
    buffer
}

/// Inverse FFT with the 1/N normalization, returning the real part.
fn inverse_real<T: Real>(mut spectrum: Vec<Complex<T>>) -> Vec<T> {
    let n = spectrum.len();
    FftPlanner::new().plan_fft_inverse(n).process(&mut spectrum);
    let scale = T::from_usize(n).expect("grid size fits scalar");
    spectrum.into_iter().map(|c| c.re / scale).collect()
}

/// Applies a diagonal Fourier multiplier `m(k)`; `m` receives the signed mode
/// number and whether this is the Nyquist mode.
fn apply_multiplier<T: Real>(
    f: &GridFunction<T>,
    m: impl Fn(i64, bool) -> Complex<T>,
) -> GridFunction<T> {
    let grid = f.grid();
    let n = grid.n_points();
    let mut spectrum = forward(f.values());
    for (j, c) in spectrum.iter_mut().enumerate() {
        *c *= m(grid.mode_number(j), j == n / 2);
    }
    GridFunction { grid, values: inverse_real(spectrum) }
}

/// Spectral derivative ∂θf: multiplier ik, Nyquist mode zeroed.
///
/// Exact (to rounding) for trigonometric polynomials of degree < N/2.
pub fn fourier_derivative<T: Real>(f: &GridFunction<T>) -> GridFunction<T> {
    apply_multiplier(f, |k, nyquist| {
        if nyquist {
            Complex::new(T::zero(), T::zero())
        } else {
            Complex::new(T::zero(), T::from_i64(k).expect("mode fits scalar"))
        }
    })
}

/// Periodic Hilbert transform 𝓗f: multiplier −i·sign(k), zero mode and
/// Nyquist mode mapped to 0.
///
/// Equals the principal-value cotangent-kernel integral for band-limited
/// input: cos nθ ↦ sin nθ and sin nθ ↦ −cos nθ for 1 ≤ n < N/2.
pub fn hilbert_transform<T: Real>(f: &GridFunction<T>) -> GridFunction<T> {
    apply_multiplier(f, |k, nyquist| {
        if nyquist || k == 0 {
            Complex::new(T::zero(), T::zero())
        } else if k > 0 {
            Complex::new(T::zero(), -T::one())
        } else {
            Complex::new(T::zero(), T::one())
        }
    })
}

/// The composition 𝓗∂θ: multiplier |k|, Nyquist mode zeroed.
///
/// cos nθ ↦ n cos nθ, sin nθ ↦ n sin nθ; constants map to 0. Used for
/// preconditioning diagnostics of the first-kind operator.
pub fn hilbert_dtheta<T: Real>(f: &GridFunction<T>) -> GridFunction<T> {
    apply_multiplier(f, |k, nyquist| {
        if nyquist {
            Complex::new(T::zero(), T::zero())
        } else {
            Complex::new(T::from_i64(k.abs()).expect("mode fits scalar"), T::zero())
        }
    })
}

/// Exact action of the periodic logarithmic kernel:
/// (1/2π) ∫ −log|2 sin((θ−θ′)/2)| f(θ′) dθ′.
///
/// Mode k ≠ 0 (Nyquist included) is scaled by 1/(2|k|); the zero mode maps to
/// 0 because the kernel's mean vanishes. Eigenfunction examples:
/// cos θ ↦ ½ cos θ, cos 4θ ↦ ⅛ cos 4θ.
pub fn log_kernel_multiplier<T: Real>(f: &GridFunction<T>) -> GridFunction<T> {
    let half = T::lit(0.5);
    apply_multiplier(f, |k, _| {
        if k == 0 {
            Complex::new(T::zero(), T::zero())
        } else {
            let kabs = T::from_i64(k.abs()).expect("mode fits scalar");
            Complex::new(half / kabs, T::zero())
        }
    })
}

/// Mean-free spectral antiderivative: the unique zero-mean A with
/// ∂θA = f − mean(f). Used to accumulate arclength along the curve.
pub(crate) fn oscillatory_antiderivative<T: Real>(f: &GridFunction<T>) -> GridFunction<T> {
    apply_multiplier(f, |k, nyquist| {
        if nyquist || k == 0 {
            Complex::new(T::zero(), T::zero())
        } else {
            // 1/(ik) = -i/k
            let kk = T::from_i64(k).expect("mode fits scalar");
            Complex::new(T::zero(), -T::one() / kk)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn grid(n: usize) -> PeriodicGrid {
        PeriodicGrid::new(n).unwrap()
    }

    #[test]
    fn grid_rejects_odd_and_tiny_sizes() {
        assert!(matches!(PeriodicGrid::new(7), Err(Error::InvalidGrid(7))));
        assert!(matches!(PeriodicGrid::new(6), Err(Error::InvalidGrid(6))));
        assert!(matches!(PeriodicGrid::new(33), Err(Error::InvalidGrid(33))));
        assert!(PeriodicGrid::new(8).is_ok());
    }

    #[test]
    fn nodes_are_uniform_from_zero() {
        let g = grid(8);
        let nodes = g.nodes::<f64>();
        assert_eq!(nodes[0], 0.0);
        for (j, &t) in nodes.iter().enumerate() {
            assert_abs_diff_eq!(t, std::f64::consts::PI * (j as f64) / 4.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn grid_function_validates_input() {
        let g = grid(8);
        assert!(matches!(
            GridFunction::new(g, vec![0.0; 7]),
            Err(Error::LengthMismatch { len: 7, expected: 8 })
        ));
        let mut vals = vec![0.0; 8];
        vals[3] = f64::NAN;
        assert!(matches!(GridFunction::new(g, vals), Err(Error::NonFinite(3))));
    }

    #[test]
    fn derivative_of_constant_vanishes() {
        let f = GridFunction::constant(grid(16), 1.0_f64);
        assert!(fourier_derivative(&f).sup_norm() < 1e-15);
    }

    #[test]
    fn derivative_of_sine_is_cosine() {
        let g = grid(32);
        let f = GridFunction::from_fn(g, |t: f64| t.sin());
        let df = fourier_derivative(&f);
        let exact = GridFunction::from_fn(g, |t: f64| t.cos());
        assert!(df.zip_with(&exact, |a, b| a - b).sup_norm() < 1e-14);
    }

    #[test]
    fn derivative_of_cos3_is_minus3sin3() {
        let g = grid(32);
        let f = GridFunction::from_fn(g, |t: f64| (3.0 * t).cos());
        let df = fourier_derivative(&f);
        let exact = GridFunction::from_fn(g, |t: f64| -3.0 * (3.0 * t).sin());
        assert!(df.zip_with(&exact, |a, b| a - b).sup_norm() < 1e-13);
    }

    #[test]
    fn second_derivative_matches_analytic() {
        let g = grid(64);
        // trig polynomial of degree < N/2
        let f = GridFunction::from_fn(g, |t: f64| (5.0 * t).cos() + 0.3 * (11.0 * t).sin());
        let ddf = fourier_derivative(&fourier_derivative(&f));
        let exact = GridFunction::from_fn(g, |t: f64| {
            -25.0 * (5.0 * t).cos() - 0.3 * 121.0 * (11.0 * t).sin()
        });
        let rel = ddf.zip_with(&exact, |a, b| a - b).sup_norm() / exact.sup_norm();
        assert!(rel < 1e-12, "relative error {rel}");
    }

    #[test]
    fn hilbert_maps_cos_to_sin() {
        let g = grid(32);
        for n in 1..8_i32 {
            let f = GridFunction::from_fn(g, |t: f64| (n as f64 * t).cos());
            let hf = hilbert_transform(&f);
            let exact = GridFunction::from_fn(g, |t: f64| (n as f64 * t).sin());
            assert!(hf.zip_with(&exact, |a, b| a - b).sup_norm() < 1e-13);
            let f = GridFunction::from_fn(g, |t: f64| (n as f64 * t).sin());
            let hf = hilbert_transform(&f);
            let exact = GridFunction::from_fn(g, |t: f64| -(n as f64 * t).cos());
            assert!(hf.zip_with(&exact, |a, b| a - b).sup_norm() < 1e-13);
        }
    }

    #[test]
    fn hilbert_annihilates_constants() {
        let f = GridFunction::constant(grid(16), 4.2_f64);
        assert!(hilbert_transform(&f).sup_norm() < 1e-15);
    }

    #[test]
    fn hilbert_is_isometry_on_mean_zero_band_limited() {
        let g = grid(64);
        let f = GridFunction::from_fn(g, |t: f64| {
            (2.0 * t).cos() - 0.7 * (9.0 * t).sin() + 0.1 * (15.0 * t).cos()
        });
        let hf = hilbert_transform(&f);
        let rel = (hf.l2_norm() - f.l2_norm()).abs() / f.l2_norm();
        assert!(rel < 1e-12, "relative error {rel}");
    }

    #[test]
    fn hilbert_applied_twice_negates_mean_free_part() {
        let g = grid(64);
        let f = GridFunction::from_fn(g, |t: f64| 1.5 + (3.0 * t).cos() - 0.4 * (7.0 * t).sin());
        let hhf = hilbert_transform(&hilbert_transform(&f));
        let mean = f.mean();
        let expect = f.map(|v| -(v - mean));
        assert!(hhf.zip_with(&expect, |a, b| a - b).sup_norm() < 1e-12);
    }

    #[test]
    fn hilbert_dtheta_scales_modes_by_frequency() {
        let g = grid(32);
        for n in [1_i32, 2, 5] {
            let f = GridFunction::from_fn(g, |t: f64| (n as f64 * t).cos());
            let out = hilbert_dtheta(&f);
            let exact = GridFunction::from_fn(g, |t: f64| n as f64 * (n as f64 * t).cos());
            assert!(out.zip_with(&exact, |a, b| a - b).sup_norm() < 1e-12);
        }
        let c = GridFunction::constant(g, 3.0_f64);
        assert!(hilbert_dtheta(&c).sup_norm() < 1e-14);
        let f = GridFunction::from_fn(g, |t: f64| (2.0 * t).sin());
        let out = hilbert_dtheta(&f);
        let exact = GridFunction::from_fn(g, |t: f64| 2.0 * (2.0 * t).sin());
        assert!(out.zip_with(&exact, |a, b| a - b).sup_norm() < 1e-13);
    }

    #[test]
    fn log_kernel_eigenfunctions() {
        // Frozen against adaptive principal-value quadrature of the kernel:
        // cos θ ↦ (1/2) cos θ, cos 4θ ↦ (1/8) cos 4θ.
        let g = grid(32);
        let f = GridFunction::from_fn(g, |t: f64| t.cos());
        let out = log_kernel_multiplier(&f);
        let exact = GridFunction::from_fn(g, |t: f64| 0.5 * t.cos());
        assert!(out.zip_with(&exact, |a, b| a - b).sup_norm() < 1e-14);

        let f = GridFunction::from_fn(g, |t: f64| (4.0 * t).cos());
        let out = log_kernel_multiplier(&f);
        let exact = GridFunction::from_fn(g, |t: f64| 0.125 * (4.0 * t).cos());
        assert!(out.zip_with(&exact, |a, b| a - b).sup_norm() < 1e-14);

        let c = GridFunction::constant(g, 2.5_f64);
        assert!(log_kernel_multiplier(&c).sup_norm() < 1e-15);
    }

    #[test]
    fn antiderivative_inverts_derivative_on_mean_free_input() {
        let g = grid(64);
        let f = GridFunction::from_fn(g, |t: f64| (3.0 * t).cos() - 2.0 * (8.0 * t).sin());
        let a = oscillatory_antiderivative(&f);
        let da = fourier_derivative(&a);
        assert!(da.zip_with(&f, |x, y| x - y).sup_norm() < 1e-12);
        assert!(a.mean().abs() < 1e-14);
    }

    #[test]
    fn interpolation_matches_samples_and_midpoints() {
        let g = grid(32);
        let f = GridFunction::from_fn(g, |t: f64| (2.0 * t).sin() + 0.25 * (5.0 * t).cos());
        for j in 0..g.n_points() {
            let t = g.node::<f64>(j);
            assert_abs_diff_eq!(f.evaluate_at(t), f.value(j), epsilon = 1e-12);
            let tm = t + g.spacing::<f64>() / 2.0;
            let exact = (2.0 * tm).sin() + 0.25 * (5.0 * tm).cos();
            assert_abs_diff_eq!(f.evaluate_at(tm), exact, epsilon = 1e-12);
        }
    }

    #[test]
    fn vector_grid_function_accessors() {
        let g = grid(8);
        let v = VectorGridFunction::from_fn(g, |t: f64| [t.cos(), t.sin()]);
        assert_eq!(v.n_points(), 8);
        let [x0, y0] = v.value(0);
        assert_eq!([x0, y0], [1.0, 0.0]);
        let w = VectorGridFunction::from_fn(g, |t: f64| [-t.sin(), t.cos()]);
        assert!(v.dot(&w).sup_norm() < 1e-15);
    }

    #[test]
    fn vector_grid_function_rejects_mismatched_components() {
        let a = GridFunction::<f64>::zeros(grid(8));
        let b = GridFunction::<f64>::zeros(grid(16));
        assert!(matches!(
            VectorGridFunction::from_components(a, b),
            Err(Error::GridMismatch(8, 16))
        ));
    }

    proptest! {
        /// All three multiplier operators are linear.
        #[test]
        fn multiplier_operators_are_linear(
            a in -3.0_f64..3.0,
            b in -3.0_f64..3.0,
            c1 in -1.0_f64..1.0,
            s1 in -1.0_f64..1.0,
            c2 in -1.0_f64..1.0,
            s2 in -1.0_f64..1.0,
        ) {
            let g = PeriodicGrid::new(32).unwrap();
            let f = GridFunction::from_fn(g, |t: f64| c1 * (2.0 * t).cos() + s1 * (5.0 * t).sin());
            let h = GridFunction::from_fn(g, |t: f64| c2 * (3.0 * t).cos() + s2 * t.sin());
            let combo = f.zip_with(&h, |x, y| a * x + b * y);
            for op in [fourier_derivative::<f64>, hilbert_transform, log_kernel_multiplier] {
                let lhs = op(&combo);
                let rhs = op(&f).zip_with(&op(&h), |x, y| a * x + b * y);
                prop_assert!(lhs.zip_with(&rhs, |x, y| x - y).sup_norm() < 1e-12);
            }
        }
    }
}
