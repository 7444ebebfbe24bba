//! Unit vectors on the Bloch sphere and the sampling grids used to search it.

use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};
use core::ops::Neg;

use crate::error::{Error, Result};

pub const UNIT_TOL: f64 = 1e-12;

/// A unit vector `z ∈ S²` naming the measurement axis `½(I ± z·σ)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlochVector {
    pub z: [f64; 3],
}

impl BlochVector {
    pub const X: Self = Self { z: [1.0, 0.0, 0.0] };
    pub const Y: Self = Self { z: [0.0, 1.0, 0.0] };
    pub const Z: Self = Self { z: [0.0, 0.0, 1.0] };

    pub fn new(z: [f64; 3]) -> Result<Self> {
        let n = norm(&z);
        if (n - 1.0).abs() > UNIT_TOL {
            return Err(Error::NotUnitVector(n));
        }
        Ok(Self { z })
    }

    /// Rescales a nonzero vector onto the sphere.
    pub fn normalize(z: [f64; 3]) -> Result<Self> {
        let n = norm(&z);
        if !n.is_finite() || n <= 0.0 {
            return Err(Error::NotUnitVector(n));
        }
        Ok(Self { z: [z[0] / n, z[1] / n, z[2] / n] })
    }

    /// Polar angle θ from `+z`, azimuth φ from `+x`.
    pub fn from_angles(theta: f64, phi: f64) -> Self {
        let (st, ct) = (libm::sin(theta), libm::cos(theta));
        Self { z: [st * libm::cos(phi), st * libm::sin(phi), ct] }
    }

    pub fn angles(&self) -> (f64, f64) {
        let theta = libm::acos(self.z[2].clamp(-1.0, 1.0));
        let phi = libm::atan2(self.z[1], self.z[0]);
        (theta, if phi < 0.0 { phi + TAU } else { phi })
    }

    pub fn dot(&self, other: &Self) -> f64 {
        dot(&self.z, &other.z)
    }

    /// Angle between the measurement axes, ignoring orientation (in `[0, π/2]`).
    pub fn axis_angle(&self, other: &Self) -> f64 {
        libm::acos(self.dot(other).abs().min(1.0))
    }

    /// Flips to the `z₃ ≥ 0` hemisphere (ties broken on `z₂`, then `z₁`).
    pub fn canonical(self) -> Self {
        let [x, y, z] = self.z;
        let flip = z < 0.0 || (z == 0.0 && (y < 0.0 || (y == 0.0 && x < 0.0)));
        if flip {
            -self
        } else {
            self
        }
    }

    /// Two unit vectors orthogonal to `self` and to each other.
    pub fn tangent_basis(&self) -> ([f64; 3], [f64; 3]) {
        let z = self.z;
        let helper = if z[0].abs() < 0.9 { [1.0, 0.0, 0.0] } else { [0.0, 1.0, 0.0] };
        let u = cross(&z, &helper);
        let nu = norm(&u);
        let u = [u[0] / nu, u[1] / nu, u[2] / nu];
        (u, cross(&z, &u))
    }

    /// The point reached by moving `(x, y)` in the tangent plane and projecting back.
    pub fn chart(&self, basis: &([f64; 3], [f64; 3]), x: f64, y: f64) -> Self {
        let (u, w) = basis;
        let p = [self.z[0] + x * u[0] + y * w[0], self.z[1] + x * u[1] + y * w[1], self.z[2] + x * u[2] + y * w[2]];
        let n = norm(&p);
        Self { z: [p[0] / n, p[1] / n, p[2] / n] }
    }
}

impl Neg for BlochVector {
    type Output = Self;

    fn neg(self) -> Self {
        Self { z: [-self.z[0], -self.z[1], -self.z[2]] }
    }
}

/// Upper-hemisphere grid: θ in `n_theta + 1` equal steps over `[0, π/2]`,
/// φ in `n_phi` steps over `[0, 2π)`, with the pole listed once.
///
/// Measurement outcomes are symmetric under `z → −z`, so the hemisphere covers
/// every projective measurement.
pub fn hemisphere_grid(n_theta: usize, n_phi: usize) -> Vec<BlochVector> {
    let n_theta = n_theta.max(1);
    let n_phi = n_phi.max(1);
    let mut out = Vec::with_capacity(1 + n_theta * n_phi);
    out.push(BlochVector::Z);
    for i in 1..=n_theta {
        let theta = (PI / 2.0) * i as f64 / n_theta as f64;
        for j in 0..n_phi {
            out.push(BlochVector::from_angles(theta, TAU * j as f64 / n_phi as f64));
        }
    }
    out
}

/// `n` roughly equidistributed points on the whole sphere.
pub fn fibonacci_sphere(n: usize) -> Vec<BlochVector> {
    let golden = PI * (3.0 - libm::sqrt(5.0));
    (0..n)
        .map(|i| {
            let z = 1.0 - 2.0 * (i as f64 + 0.5) / n as f64;
            let rho = libm::sqrt((1.0 - z * z).max(0.0));
            let phi = golden * i as f64;
            BlochVector { z: [rho * libm::cos(phi), rho * libm::sin(phi), z] }
        })
        .collect()
}

pub(crate) fn dot(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn norm(a: &[f64; 3]) -> f64 {
    libm::sqrt(dot(a, a))
}

pub(crate) fn cross(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn rejects_non_unit_vectors() {
        assert!(BlochVector::new([1.0, 0.0, 0.0]).is_ok());
        assert!(matches!(BlochVector::new([1.0, 1.0, 0.0]), Err(Error::NotUnitVector(_))));
        assert!(BlochVector::normalize([0.0; 3]).is_err());
        let n = BlochVector::normalize([3.0, 0.0, 4.0]).unwrap();
        assert_eq!(n.z, [0.6, 0.0, 0.8]);
    }

    #[test]
    fn angles_round_trip() {
        for &(t, p) in &[(0.3, 1.2), (1.5, 5.9), (2.8, 0.01)] {
            let v = BlochVector::from_angles(t, p);
            let (t2, p2) = v.angles();
            assert_abs_diff_eq!(t, t2, epsilon = 1e-12);
            assert_abs_diff_eq!(p, p2, epsilon = 1e-12);
        }
    }

    #[test]
    fn hemisphere_grid_shape() {
        let g = hemisphere_grid(4, 8);
        assert_eq!(g.len(), 1 + 4 * 8);
        assert_eq!(g[0], BlochVector::Z);
        assert!(g.iter().all(|v| v.z[2] >= -1e-15));
        assert!(g.iter().all(|v| (norm(&v.z) - 1.0).abs() < 1e-14));
        assert!(g.contains(&BlochVector::from_angles(PI / 2.0, 0.0)));
    }

    #[test]
    fn fibonacci_points_are_unit_and_balanced() {
        let pts = fibonacci_sphere(500);
        assert_eq!(pts.len(), 500);
        let mut mean = [0.0; 3];
        for p in &pts {
            assert_abs_diff_eq!(norm(&p.z), 1.0, epsilon = 1e-12);
            for (m, x) in mean.iter_mut().zip(p.z) {
                *m += x / 500.0;
            }
        }
        assert!(norm(&mean) < 0.01);
    }

    #[test]
    fn chart_origin_and_basis() {
        let v = BlochVector::from_angles(0.7, 2.0);
        let b = v.tangent_basis();
        assert_abs_diff_eq!(dot(&b.0, &v.z), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(dot(&b.1, &v.z), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(dot(&b.0, &b.1), 0.0, epsilon = 1e-14);
        assert!(v.chart(&b, 0.0, 0.0).dot(&v) > 1.0 - 1e-15);
    }

    #[test]
    fn canonical_picks_upper_hemisphere() {
        let v = BlochVector { z: [0.0, 0.6, -0.8] };
        assert_eq!(v.canonical().z, [-0.0, -0.6, 0.8]);
        assert_eq!(BlochVector { z: [-1.0, 0.0, 0.0] }.canonical().z, [1.0, -0.0, -0.0]);
    }
}
