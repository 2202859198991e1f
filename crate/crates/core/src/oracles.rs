//! Independent closed-form solutions and exact identities for cross-checks.
//!
//! Everything here is written against the *unit circle* X_c = (cos θ, sin θ)
//! or as a self-contained identity, along code paths deliberately disjoint
//! from [`crate::potentials`] and [`crate::tension`]: no layer quadrature,
//! no operator assembly. Agreement between these formulas and the numerical
//! path is evidence; shared code would make that evidence circular. Only the
//! spectral primitives (FFT multipliers) and the pointwise cotangent
//! regularization are shared, as common substrate.
//!
//! The checks:
//!
//! * [`circle_sigma`] — the exact mean-zero tension on the unit circle for a
//!   force given by Fourier coefficients in the circle frame;
//! * [`q0_closed_form`] — the circle stretching functional
//!   𝒬₀[F] = −∂θX_c · ¼𝓗F − (1/8π)∫X_c·F dθ;
//! * [`toland_check`] — both sides of the quadratic-form identity
//!   g𝓗∂θg − ½𝓗∂θ(g²) = (1/8π)∫(g(θ) − g(θ′))²/sin²((θ−θ′)/2) dθ′;
//! * [`split_q_check`] — 𝒬[F] recomputed through the split
//!   −¼τ·𝓗F + (1/4π)τ·(F_C[F] + ∂θ F_T[F]) with explicitly regularized
//!   kernels, valid on any curve.

use crate::curve::ClosedCurve;
use crate::error::{Error, Result};
use crate::kernels::{cot_regularization, wrap_angle};
use crate::scalar::Real;
use crate::spectral::{
    fourier_derivative, hilbert_dtheta, hilbert_transform, GridFunction, PeriodicGrid,
    VectorGridFunction,
};

/// A force on the unit circle in the frame expansion
/// F = (Σ a_n cos nθ + b_n sin nθ)·X_c + (Σ c_n cos nθ + d_n sin nθ)·∂θX_c.
///
/// Vector index is the frequency n; missing entries are zero. This
/// intentionally duplicates the layout of
/// [`crate::tension::ForceDensity::Frame`] with its own realization code so
/// the oracle does not lean on the implementation under test.
#[derive(Clone, Debug, PartialEq)]
pub struct FrameFourierForce<T> {
    /// a_n: cosine coefficients on the radial direction X_c.
    pub radial_cos: Vec<T>,
    /// b_n: sine coefficients on X_c.
    pub radial_sin: Vec<T>,
    /// c_n: cosine coefficients on the tangential direction ∂θX_c.
    pub tangential_cos: Vec<T>,
    /// d_n: sine coefficients on ∂θX_c.
    pub tangential_sin: Vec<T>,
}

impl<T: Real> FrameFourierForce<T> {
    /// Highest frequency carried by any coefficient list.
    pub fn n_max(&self) -> usize {
        [&self.radial_cos, &self.radial_sin, &self.tangential_cos, &self.tangential_sin]
            .iter()
            .map(|v| v.len().saturating_sub(1))
            .max()
            .unwrap_or(0)
    }

    /// Samples the force on `grid`.
    ///
    /// # Panics
    /// Panics if the highest frequency is not resolvable (n_max ≥ N/2).
    pub fn realize(&self, grid: PeriodicGrid) -> VectorGridFunction<T> {
        assert!(
            self.n_max() < grid.n_points() / 2,
            "force frequency {} not resolvable on a {}-point grid",
            self.n_max(),
            grid.n_points()
        );
        let series = |cos_c: &[T], sin_c: &[T], theta: T| {
            let mut acc = T::zero();
            for (n, &v) in cos_c.iter().enumerate() {
                acc += v * (T::from_usize(n).expect("frequency fits scalar") * theta).cos();
            }
            for (n, &v) in sin_c.iter().enumerate() {
                acc += v * (T::from_usize(n).expect("frequency fits scalar") * theta).sin();
            }
            acc
        };
        VectorGridFunction::from_fn(grid, |theta| {
            let fr = series(&self.radial_cos, &self.radial_sin, theta);
            let ft = series(&self.tangential_cos, &self.tangential_sin, theta);
            let (s, c) = theta.sin_cos();
            [fr * c - ft * s, fr * s + ft * c]
        })
    }

    fn coeff(v: &[T], n: usize) -> T {
        v.get(n).copied().unwrap_or_else(T::zero)
    }
}

/// Exact mean-zero tension on the unit circle:
/// σ = ((a₁+d₁)/2)cos θ + ((b₁−c₁)/2)sin θ
///   + Σ_{n≥2} ((d_n/n)cos nθ − (c_n/n)sin nθ).
///
/// Radial coefficients with n ≠ 1 and the constant tangential coefficient
/// drop out — those force components induce no tension on a circle.
pub fn circle_sigma<T: Real>(force: &FrameFourierForce<T>, grid: PeriodicGrid) -> GridFunction<T> {
    let half = T::lit(0.5);
    let a1 = FrameFourierForce::coeff(&force.radial_cos, 1);
    let b1 = FrameFourierForce::coeff(&force.radial_sin, 1);
    let c1 = FrameFourierForce::coeff(&force.tangential_cos, 1);
    let d1 = FrameFourierForce::coeff(&force.tangential_sin, 1);
    let n_max = force.n_max();
    GridFunction::from_fn(grid, |theta: T| {
        let mut acc = half * (a1 + d1) * theta.cos() + half * (b1 - c1) * theta.sin();
        for n in 2..=n_max {
            let nf = T::from_usize(n).expect("frequency fits scalar");
            let cn = FrameFourierForce::coeff(&force.tangential_cos, n);
            let dn = FrameFourierForce::coeff(&force.tangential_sin, n);
            acc += (dn * (nf * theta).cos() - cn * (nf * theta).sin()) / nf;
        }
        acc
    })
}

/// Closed form of the stretching functional on the unit circle:
/// 𝒬₀[F](θ) = −∂θX_c(θ) · ¼(𝓗F)(θ) − (1/8π) ∫ X_c·F dθ′.
pub fn q0_closed_form<T: Real>(force: &VectorGridFunction<T>) -> GridFunction<T> {
    let grid = force.grid();
    let h1 = hilbert_transform(force.x());
    let h2 = hilbert_transform(force.y());
    let radial_moment = VectorGridFunction::from_fn(grid, |theta: T| [theta.cos(), theta.sin()])
        .dot(force)
        .trapezoid_integral();
    let quarter = T::lit(0.25);
    let shift = radial_moment / (T::lit(8.0) * T::PI());
    let values = (0..grid.n_points())
        .map(|j| {
            let t = grid.node::<T>(j);
            -quarter * (-t.sin() * h1.value(j) + t.cos() * h2.value(j)) - shift
        })
        .collect();
    GridFunction::new(grid, values).expect("finite closed-form samples")
}

/// Both sides of the circle identity
/// g𝓗∂θg − ½𝓗∂θ(g²) = (1/8π)∫(g(θ) − g(θ′))²/sin²((θ−θ′)/2) dθ′.
///
/// The left side is built from spectral multipliers; the right side is a
/// trapezoid sum whose diagonal is fixed by the limit
/// (g(θ) − g(θ′))²/sin²((θ−θ′)/2) → 4(∂θg(θ))².
pub fn toland_check<T: Real>(g: &GridFunction<T>) -> (GridFunction<T>, GridFunction<T>) {
    let grid = g.grid();
    let n = grid.n_points();
    let h = grid.spacing::<T>();
    let half = T::lit(0.5);

    let hg = hilbert_dtheta(g);
    let g2 = g.map(|v| v * v);
    let lhs = g
        .zip_with(&hg, |a, b| a * b)
        .zip_with(&hilbert_dtheta(&g2), |a, b| a - half * b);

    let dg = fourier_derivative(g);
    let scale = (T::lit(8.0) * T::PI()).recip();
    let mut rhs_values = Vec::with_capacity(n);
    for j in 0..n {
        let tj = grid.node::<T>(j);
        let gj = g.value(j);
        let mut acc = T::zero();
        for k in 0..n {
            if k == j {
                let d = dg.value(j);
                acc += T::lit(4.0) * d * d;
            } else {
                let diff = gj - g.value(k);
                let s = (half * (tj - grid.node::<T>(k))).sin();
                acc += diff * diff / (s * s);
            }
        }
        rhs_values.push(scale * h * acc);
    }
    let rhs = GridFunction::new(grid, rhs_values).expect("trapezoid sum of finite samples");
    (lhs, rhs)
}

/// 𝒬[F] recomputed through the singularity split
/// −¼τ·𝓗F + (1/4π)τ·(F_C[F] + ∂θF_T[F]):
/// F_C integrates F against the regularized cotangent kernel
/// (½cot − 1/Δθ) + (1/Δθ − ΔX·∂θX/|ΔX|²) with the analytic diagonal
/// −∂θ|∂θX|/(2|∂θX|), and F_T is the trapezoid sum of the transverse kernel
/// r⊗r/|r|² with diagonal τ⊗τ.
///
/// This is the independent route for validating
/// [`crate::tension::apply_q`]; the two share no quadrature code.
pub fn split_q_check<T: Real>(
    curve: &ClosedCurve<T>,
    force: &VectorGridFunction<T>,
) -> Result<GridFunction<T>> {
    if force.grid() != curve.grid() {
        return Err(Error::GridMismatch(curve.n_points(), force.n_points()));
    }
    let grid = curve.grid();
    let n = grid.n_points();
    let h = grid.spacing::<T>();
    let quarter = T::lit(0.25);
    let inv_4pi = (T::lit(4.0) * T::PI()).recip();
    let f1 = force.x().values();
    let f2 = force.y().values();
    let dspeed = fourier_derivative(curve.speed());

    // −¼ τ·𝓗F
    let h1 = hilbert_transform(force.x());
    let h2 = hilbert_transform(force.y());
    let mut q: Vec<T> = (0..n)
        .map(|j| {
            let [tx, ty] = curve.tangent().value(j);
            -quarter * (tx * h1.value(j) + ty * h2.value(j))
        })
        .collect();

    // (1/4π) τ·F_C with F_C the regularized-cotangent part.
    for i in 0..n {
        let ti = grid.node::<T>(i);
        let [xi, yi] = curve.position().value(i);
        let [dxi, dyi] = curve.dposition().value(i);
        let mut acc1 = T::zero();
        let mut acc2 = T::zero();
        for k in 0..n {
            let kc = if k == i {
                -dspeed.value(i) / (T::lit(2.0) * curve.speed().value(i))
            } else {
                let tk = grid.node::<T>(k);
                let dw = wrap_angle(ti - tk);
                let [xk, yk] = curve.position().value(k);
                let rx = xi - xk;
                let ry = yi - yk;
                let rr = rx * rx + ry * ry;
                cot_regularization(ti, tk) + dw.recip() - (rx * dxi + ry * dyi) / rr
            };
            acc1 += kc * f1[k];
            acc2 += kc * f2[k];
        }
        let [tx, ty] = curve.tangent().value(i);
        q[i] += inv_4pi * h * (tx * acc1 + ty * acc2);
    }

    // (1/4π) τ·∂θF_T with F_T the trapezoid sum of the transverse kernel.
    let mut t1 = Vec::with_capacity(n);
    let mut t2 = Vec::with_capacity(n);
    for i in 0..n {
        let [xi, yi] = curve.position().value(i);
        let mut acc1 = T::zero();
        let mut acc2 = T::zero();
        for k in 0..n {
            let (g11, g12, g22) = if k == i {
                let [tx, ty] = curve.tangent().value(i);
                (tx * tx, tx * ty, ty * ty)
            } else {
                let [xk, yk] = curve.position().value(k);
                let rx = xi - xk;
                let ry = yi - yk;
                let rr = rx * rx + ry * ry;
                (rx * rx / rr, rx * ry / rr, ry * ry / rr)
            };
            acc1 += g11 * f1[k] + g12 * f2[k];
            acc2 += g12 * f1[k] + g22 * f2[k];
        }
        t1.push(h * acc1);
        t2.push(h * acc2);
    }
    let dt1 = fourier_derivative(&GridFunction::new(grid, t1)?);
    let dt2 = fourier_derivative(&GridFunction::new(grid, t2)?);
    for j in 0..n {
        let [tx, ty] = curve.tangent().value(j);
        q[j] += inv_4pi * (tx * dt1.value(j) + ty * dt2.value(j));
    }

    GridFunction::new(grid, q)
}
