//! Free-space kernels of 2D Stokes flow and the periodic cotangent
//! regularization used by the singularity-split quadrature.
//!
//! With r = y − x and ρ = |r|:
//!
//! * velocity (stokeslet): G(r) = (1/4π)(−log ρ · I + r⊗r/ρ²),
//! * pressure: Π(r) = (1/2π) r/ρ²,
//! * stress (stresslet): Θ_ijk(r) = −(1/π) r_i r_j r_k / ρ⁴.
//!
//! The kernels are singular at r = 0; each evaluator rejects points closer
//! than an explicit tolerance ([`Error::SingularPoint`]) instead of returning
//! infinities. [`singular_threshold`] derives that tolerance from a length
//! scale so callers stay unit-consistent.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Distance below which a kernel evaluation point counts as singular:
/// 10⁻¹³ times the supplied length scale (typically the curve length).
pub fn singular_threshold<T: Real>(length_scale: T) -> T {
    T::lit(1e-13) * length_scale
}

fn check_distance<T: Real>(r: [T; 2], tol_r: T) -> Result<T> {
    let rho = r[0].hypot(r[1]);
    if rho <= tol_r {
        return Err(Error::SingularPoint {
            distance: rho.to_f64_lossy(),
            tolerance: tol_r.to_f64_lossy(),
        });
    }
    Ok(rho)
}

/// Velocity kernel G(r) = (1/4π)(−log|r|·I + r⊗r/|r|²), row-major.
pub fn stokeslet<T: Real>(r: [T; 2], tol_r: T) -> Result<[[T; 2]; 2]> {
    let rho = check_distance(r, tol_r)?;
    let scale = (T::lit(4.0) * T::PI()).recip();
    let log_term = -rho.ln();
    let rr = rho * rho;
    Ok([
        [scale * (log_term + r[0] * r[0] / rr), scale * (r[0] * r[1] / rr)],
        [scale * (r[1] * r[0] / rr), scale * (log_term + r[1] * r[1] / rr)],
    ])
}

/// Pressure kernel Π(r) = (1/2π) r/|r|².
pub fn pressure_kernel<T: Real>(r: [T; 2], tol_r: T) -> Result<[T; 2]> {
    let rho = check_distance(r, tol_r)?;
    let scale = (T::lit(2.0) * T::PI()).recip();
    let rr = rho * rho;
    Ok([scale * r[0] / rr, scale * r[1] / rr])
}

/// Stress kernel Θ_ijk(r) = −(1/π) r_i r_j r_k / |r|⁴, indexed `[i][j][k]`.
pub fn stresslet<T: Real>(r: [T; 2], tol_r: T) -> Result<[[[T; 2]; 2]; 2]> {
    let rho = check_distance(r, tol_r)?;
    let scale = -(T::PI().recip());
    let r4 = rho * rho * rho * rho;
    let mut out = [[[T::zero(); 2]; 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, col) in row.iter_mut().enumerate() {
            for (k, entry) in col.iter_mut().enumerate() {
                *entry = scale * r[i] * r[j] * r[k] / r4;
            }
        }
    }
    Ok(out)
}

/// Wraps an angle difference into (−π, π].
pub(crate) fn wrap_angle<T: Real>(d: T) -> T {
    let two_pi = T::two_pi();
    let mut w = (d + T::PI()) % two_pi;
    if w <= T::zero() {
        w += two_pi;
    }
    w - T::PI()
}

/// Smooth part of the periodic cotangent kernel:
/// R(x) = ½ cot(x/2) − 1/x evaluated at the wrapped difference x = s − s′.
///
/// R is odd and smooth through x = 0 (R(0) = 0, R′(0) = −1/12); near zero it
/// is evaluated by its Taylor series −x/12 − x³/720 − x⁵/30240 to avoid the
/// cancellation between the cotangent and the pole. On the wrapped interval
/// |R(x)| ≤ 0.12 |x|, with R(π) = −1/π at the far point.
pub fn cot_regularization<T: Real>(s: T, s_prime: T) -> T {
    let x = wrap_angle(s - s_prime);
    if x.abs() <= T::lit(0.1) {
        let x2 = x * x;
        // R(x) = −x/12 − x³/720 − x⁵/30240 + O(x⁷); the next term is below
        // rounding for |x| ≤ 0.1.
        return -x * (T::lit(1.0 / 12.0)
            + x2 * (T::lit(1.0 / 720.0) + x2 * T::lit(1.0 / 30240.0)));
    }
    let half = T::lit(0.5);
    half * (half * x).tan().recip() - x.recip()
}
