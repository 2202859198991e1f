//! Single- and double-layer potentials of the interface.
//!
//! # Measure conventions
//!
//! Two conventions coexist and are kept strictly apart:
//!
//! * **On the interface** ([`single_layer_on_interface`]) the layer integral
//!   is taken in the parameter measure dθ:
//!   u(θ) = ∫ G(X(θ) − X(θ′)) g(θ′) dθ′. This is the operator the tension
//!   equation is built from, and its density g is a force per unit θ.
//! * **Off the interface** ([`velocity_at`], [`pressure_at`], [`stress_at`],
//!   [`double_layer_identity`]) integrals are taken in arclength ds, the
//!   physical convention: u(x) = ∫ G(x − y) g(y) ds(y). Densities passed here
//!   are forces per unit arclength. On a unit-speed parametrization the two
//!   conventions coincide.
//!
//! # Quadrature
//!
//! The on-interface single layer splits the log singularity exactly:
//! −log|ΔX| = −log|2 sin(Δθ/2)| − log(|ΔX|/|2 sin(Δθ/2)|). The first part is
//! applied spectrally ([`log_kernel_multiplier`]); the second is smooth with
//! diagonal value −log|∂θX| and is integrated by the trapezoid rule, as is
//! the transverse part r⊗r/|r|² whose diagonal limit is τ⊗τ. The composite
//! rule converges spectrally for smooth curves and densities.
//!
//! Off-interface evaluation is plain trapezoid quadrature of a smooth
//! integrand, accurate only while the target keeps its distance; points
//! closer than [`h_safe`] are rejected ([`Error::TooCloseToInterface`])
//! rather than silently evaluated with O(1) error.

use crate::curve::ClosedCurve;
use crate::error::{Error, Result};
use crate::kernels::{pressure_kernel, singular_threshold, stokeslet, stresslet};
use crate::scalar::Real;
use crate::spectral::{log_kernel_multiplier, GridFunction, VectorGridFunction};

/// Closest approach allowed for off-interface evaluation:
/// 5 · (2π/N) · max|∂θX|, five local node spacings in physical units.
pub fn h_safe<T: Real>(curve: &ClosedCurve<T>) -> T {
    T::lit(5.0) * curve.grid().spacing::<T>() * curve.speed().sup_norm()
}

fn check_density_grid<T: Real>(
    curve: &ClosedCurve<T>,
    density: &VectorGridFunction<T>,
) -> Result<()> {
    if density.grid() != curve.grid() {
        return Err(Error::GridMismatch(curve.n_points(), density.n_points()));
    }
    Ok(())
}

fn nearest_node_distance<T: Real>(curve: &ClosedCurve<T>, x: [T; 2]) -> T {
    (0..curve.n_points()).fold(T::infinity(), |m, j| {
        let [px, py] = curve.position().value(j);
        m.min((x[0] - px).hypot(x[1] - py))
    })
}

fn check_standoff<T: Real>(curve: &ClosedCurve<T>, x: [T; 2]) -> Result<()> {
    let distance = nearest_node_distance(curve, x);
    let safe = h_safe(curve);
    if distance <= safe {
        return Err(Error::TooCloseToInterface {
            distance: distance.to_f64_lossy(),
            h_safe: safe.to_f64_lossy(),
        });
    }
    Ok(())
}

/// Single-layer velocity on the interface in the dθ convention:
/// u(θ_j) = ∫ G(X(θ_j) − X(θ′)) g(θ′) dθ′, with the log singularity handled
/// by the exact spectral split.
pub fn single_layer_on_interface<T: Real>(
    curve: &ClosedCurve<T>,
    density: &VectorGridFunction<T>,
) -> Result<VectorGridFunction<T>> {
    check_density_grid(curve, density)?;
    let grid = curve.grid();
    let n = grid.n_points();
    let h = grid.spacing::<T>();
    let half = T::lit(0.5);
    let quarter_pi = (T::lit(4.0) * T::PI()).recip();

    let base1 = log_kernel_multiplier(density.x());
    let base2 = log_kernel_multiplier(density.y());
    let f1 = density.x().values();
    let f2 = density.y().values();

    let mut out1 = Vec::with_capacity(n);
    let mut out2 = Vec::with_capacity(n);
    for j in 0..n {
        let tj = grid.node::<T>(j);
        let [xj, yj] = curve.position().value(j);
        let mut w1 = T::zero();
        let mut w2 = T::zero();
        let mut t1 = T::zero();
        let mut t2 = T::zero();
        for k in 0..n {
            let (w, g11, g12, g22) = if k == j {
                let [tx, ty] = curve.tangent().value(j);
                (-curve.speed().value(j).ln(), tx * tx, tx * ty, ty * ty)
            } else {
                let tk = grid.node::<T>(k);
                let [xk, yk] = curve.position().value(k);
                let rx = xj - xk;
                let ry = yj - yk;
                let r2 = rx * rx + ry * ry;
                let s = (T::lit(2.0) * (half * (tj - tk)).sin()).abs();
                (-(r2.sqrt() / s).ln(), rx * rx / r2, rx * ry / r2, ry * ry / r2)
            };
            w1 += w * f1[k];
            w2 += w * f2[k];
            t1 += g11 * f1[k] + g12 * f2[k];
            t2 += g12 * f1[k] + g22 * f2[k];
        }
        out1.push(half * base1.value(j) + h * quarter_pi * (w1 + t1));
        out2.push(half * base2.value(j) + h * quarter_pi * (w2 + t2));
    }

    let x = GridFunction::new(grid, out1)?;
    let y = GridFunction::new(grid, out2)?;
    VectorGridFunction::from_components(x, y)
}

/// Velocity u(x) = ∫ G(x − y) g(y) ds(y) at a point off the interface.
///
/// The density is a force per unit arclength. Points within [`h_safe`] of
/// the interface are rejected.
pub fn velocity_at<T: Real>(
    curve: &ClosedCurve<T>,
    density: &VectorGridFunction<T>,
    x: [T; 2],
) -> Result<[T; 2]> {
    check_density_grid(curve, density)?;
    check_standoff(curve, x)?;
    let h = curve.grid().spacing::<T>();
    let tol = singular_threshold(curve.total_length());
    let mut u = [T::zero(); 2];
    for j in 0..curve.n_points() {
        let [px, py] = curve.position().value(j);
        let g = stokeslet([x[0] - px, x[1] - py], tol)?;
        let [f1, f2] = density.value(j);
        let w = curve.speed().value(j) * h;
        u[0] += (g[0][0] * f1 + g[0][1] * f2) * w;
        u[1] += (g[1][0] * f1 + g[1][1] * f2) * w;
    }
    Ok(u)
}

/// Pressure p(x) = ∫ Π(x − y) · g(y) ds(y) at a point off the interface.
pub fn pressure_at<T: Real>(
    curve: &ClosedCurve<T>,
    density: &VectorGridFunction<T>,
    x: [T; 2],
) -> Result<T> {
    check_density_grid(curve, density)?;
    check_standoff(curve, x)?;
    let h = curve.grid().spacing::<T>();
    let tol = singular_threshold(curve.total_length());
    let mut p = T::zero();
    for j in 0..curve.n_points() {
        let [px, py] = curve.position().value(j);
        let pi = pressure_kernel([x[0] - px, x[1] - py], tol)?;
        let [f1, f2] = density.value(j);
        p += (pi[0] * f1 + pi[1] * f2) * curve.speed().value(j) * h;
    }
    Ok(p)
}

/// Stress Σ(x) = ∫ Θ(x − y) · g(y) ds(y) at a point off the interface
/// (row-major 2×2; symmetric).
pub fn stress_at<T: Real>(
    curve: &ClosedCurve<T>,
    density: &VectorGridFunction<T>,
    x: [T; 2],
) -> Result<[[T; 2]; 2]> {
    check_density_grid(curve, density)?;
    check_standoff(curve, x)?;
    let h = curve.grid().spacing::<T>();
    let tol = singular_threshold(curve.total_length());
    let mut sigma = [[T::zero(); 2]; 2];
    for j in 0..curve.n_points() {
        let [px, py] = curve.position().value(j);
        let theta = stresslet([x[0] - px, x[1] - py], tol)?;
        let g = density.value(j);
        let w = curve.speed().value(j) * h;
        for (a, row) in sigma.iter_mut().enumerate() {
            for (b, entry) in row.iter_mut().enumerate() {
                *entry += (theta[a][b][0] * g[0] + theta[a][b][1] * g[1]) * w;
            }
        }
    }
    Ok(sigma)
}

/// Where to evaluate the double-layer identity integral.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EvalPoint<T> {
    /// A point strictly off the interface.
    Point([T; 2]),
    /// The interface node with this index; the singular diagonal is replaced
    /// by its finite curvature limit.
    OnCurve(usize),
}

/// Trapezoid value of the double-layer identity integral
/// ∫ K(y, x) ds(y) with K_ij(y, x) = Θ_ijk(y − x) n_k(y).
///
/// Exactly −I for x inside, 0 for x outside, and −I/2 for x on the
/// interface; the discrete value converges to these at spectral rate. For an
/// on-curve node the diagonal entry uses the smooth limit
/// K(X(θ), X(θ)) = −κ(θ)/(2π) · τ⊗τ.
///
/// # Panics
/// Panics if an [`EvalPoint::OnCurve`] index is out of range.
pub fn double_layer_identity<T: Real>(
    curve: &ClosedCurve<T>,
    at: EvalPoint<T>,
) -> Result<[[T; 2]; 2]> {
    let h = curve.grid().spacing::<T>();
    let tol = singular_threshold(curve.total_length());
    let n = curve.n_points();
    let mut acc = [[T::zero(); 2]; 2];
    let (target, skip): ([T; 2], Option<usize>) = match at {
        EvalPoint::Point(x) => (x, None),
        EvalPoint::OnCurve(idx) => {
            assert!(idx < n, "on-curve index {idx} out of range for {n} nodes");
            (curve.position().value(idx), Some(idx))
        }
    };
    for j in 0..n {
        let w = curve.speed().value(j) * h;
        if skip == Some(j) {
            let kappa = curve.curvature().value(j);
            let [tx, ty] = curve.tangent().value(j);
            let c = -kappa / T::two_pi() * w;
            acc[0][0] += c * tx * tx;
            acc[0][1] += c * tx * ty;
            acc[1][0] += c * ty * tx;
            acc[1][1] += c * ty * ty;
            continue;
        }
        let [px, py] = curve.position().value(j);
        let theta = stresslet([px - target[0], py - target[1]], tol)?;
        let [nx, ny] = curve.normal().value(j);
        for (a, row) in acc.iter_mut().enumerate() {
            for (b, entry) in row.iter_mut().enumerate() {
                *entry += (theta[a][b][0] * nx + theta[a][b][1] * ny) * w;
            }
        }
    }
    Ok(acc)
}

/// One standoff distance of a traction-jump probe.
#[derive(Clone, Debug, PartialEq)]
pub struct JumpProbeRow<T> {
    /// Standoff distance along the normal.
    pub distance: T,
    /// Traction Σ·n at the interior point X − d·n.
    pub inner: [T; 2],
    /// Traction Σ·n at the exterior point X + d·n.
    pub outer: [T; 2],
    /// Inner minus outer traction; converges to the force density as the
    /// standoff shrinks (while staying resolvable).
    pub difference: [T; 2],
}

/// Traction-jump probe at one node over several standoff distances.
#[derive(Clone, Debug, PartialEq)]
pub struct JumpProbeTable<T> {
    /// Node the probe line passes through.
    pub node_index: usize,
    /// Force density at the node (per unit arclength) — the value the
    /// traction jump should recover.
    pub reference: [T; 2],
    /// One row per requested distance, in input order.
    pub rows: Vec<JumpProbeRow<T>>,
}

/// Probes the traction jump across the interface at a node: evaluates the
/// stress at X ± d·n for each standoff d and forms the inner-minus-outer
/// traction, which recovers the density as d decreases.
///
/// Every probe point must clear the [`h_safe`] standoff, so small distances
/// require correspondingly fine grids.
///
/// # Panics
/// Panics if `node_index` is out of range.
pub fn stress_jump_probe<T: Real>(
    curve: &ClosedCurve<T>,
    density: &VectorGridFunction<T>,
    node_index: usize,
    distances: &[T],
) -> Result<JumpProbeTable<T>> {
    let n = curve.n_points();
    assert!(node_index < n, "node index {node_index} out of range for {n} nodes");
    check_density_grid(curve, density)?;
    let [px, py] = curve.position().value(node_index);
    let [nx, ny] = curve.normal().value(node_index);
    let mut rows = Vec::with_capacity(distances.len());
    for &d in distances {
        let x_in = [px - d * nx, py - d * ny];
        let x_out = [px + d * nx, py + d * ny];
        let s_in = stress_at(curve, density, x_in)?;
        let s_out = stress_at(curve, density, x_out)?;
        let inner = [s_in[0][0] * nx + s_in[0][1] * ny, s_in[1][0] * nx + s_in[1][1] * ny];
        let outer = [s_out[0][0] * nx + s_out[0][1] * ny, s_out[1][0] * nx + s_out[1][1] * ny];
        rows.push(JumpProbeRow {
            distance: d,
            inner,
            outer,
            difference: [inner[0] - outer[0], inner[1] - outer[1]],
        });
    }
    Ok(JumpProbeTable { node_index, reference: density.value(node_index), rows })
}
