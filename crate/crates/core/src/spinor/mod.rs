//! Coordinate-space Bessel-mode bispinors and their analytic gradients.

mod field;
mod gamma;
mod solution;

pub use field::{analytic_gradient, dirac_residual, dirac_residual_of, mode_function, Field, ModeTerm};
pub use gamma::{DiracMatrices, Mat4};
pub use solution::{weyl_null_coefficient, Family, SolutionSpec};

use crate::error::{Error, Result};
use crate::scalar::{Cplx, Real};

/// Representation of the Dirac matrices a bispinor is expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    Dirac,
    Weyl,
}

/// Cylindrical spacetime point; the vortex line is `rho = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpacetimePoint<T> {
    pub rho: T,
    pub phi: T,
    pub z: T,
    pub t: T,
}

impl<T: Real> SpacetimePoint<T> {
    pub fn new(rho: T, phi: T, z: T, t: T) -> Result<Self> {
        if !(rho >= T::zero()) || !rho.is_finite() {
            return Err(Error::InvalidParameter {
                name: "rho",
                reason: format!("must be finite and >= 0, got {rho}"),
            });
        }
        if !(phi.is_finite() && z.is_finite() && t.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "point",
                reason: "coordinates must be finite".into(),
            });
        }
        // azimuth is meaningless on the axis
        let phi = if rho == T::zero() { T::zero() } else { phi };
        Ok(Self { rho, phi, z, t })
    }

    /// Point in the `z = t = 0` plane.
    pub fn transverse(rho: T, phi: T) -> Result<Self> {
        Self::new(rho, phi, T::zero(), T::zero())
    }
}

/// Four complex components tagged with their basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bispinor<T> {
    pub c: [Cplx<T>; 4],
    pub basis: Basis,
}

impl<T: Real> Bispinor<T> {
    pub fn zero(basis: Basis) -> Self {
        Self { c: [Cplx::new(T::zero(), T::zero()); 4], basis }
    }

    /// `psi^dagger psi`.
    pub fn norm_sqr(&self) -> T {
        self.c.iter().fold(T::zero(), |acc, v| acc + v.norm_sqr())
    }

    pub fn norm(&self) -> T {
        self.norm_sqr().sqrt()
    }

    /// `self^dagger M other`.
    pub fn sandwich(&self, m: &Mat4<T>, other: &Self) -> Cplx<T> {
        let mv = gamma::mat_vec(m, &other.c);
        self.c
            .iter()
            .zip(mv.iter())
            .fold(Cplx::new(T::zero(), T::zero()), |acc, (a, b)| acc + a.conj() * b)
    }

    /// `self^dagger other`.
    pub fn inner(&self, other: &Self) -> Cplx<T> {
        self.c
            .iter()
            .zip(other.c.iter())
            .fold(Cplx::new(T::zero(), T::zero()), |acc, (a, b)| acc + a.conj() * b)
    }

    pub fn apply(&self, m: &Mat4<T>) -> Self {
        Self { c: gamma::mat_vec(m, &self.c), basis: self.basis }
    }

    pub fn scale(&self, s: Cplx<T>) -> Self {
        Self { c: self.c.map(|v| v * s), basis: self.basis }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.basis, other.basis);
        let mut c = self.c;
        for (a, b) in c.iter_mut().zip(other.c.iter()) {
            *a = *a + b;
        }
        Self { c, basis: self.basis }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Cplx::new(-T::one(), T::zero())))
    }

    pub fn is_finite(&self) -> bool {
        self.c.iter().all(|v| v.re.is_finite() && v.im.is_finite())
    }
}

/// Converts a Dirac-basis bispinor to the Weyl basis described in [`DiracMatrices`].
pub fn to_weyl<T: Real>(psi: &Bispinor<T>) -> Result<Bispinor<T>> {
    if psi.basis != Basis::Dirac {
        return Err(Error::BasisMismatch { expected: "Dirac" });
    }
    let mut out = psi.apply(&gamma::weyl_transform());
    out.basis = Basis::Weyl;
    Ok(out)
}

/// Inverse of [`to_weyl`]; the transform is its own inverse.
pub fn to_dirac<T: Real>(psi: &Bispinor<T>) -> Result<Bispinor<T>> {
    if psi.basis != Basis::Weyl {
        return Err(Error::BasisMismatch { expected: "Weyl" });
    }
    let mut out = psi.apply(&gamma::weyl_transform());
    out.basis = Basis::Dirac;
    Ok(out)
}

/// Spacetime derivatives of a bispinor.
///
/// `d_phi_over_rho` holds `(1/rho) d/dphi`, kept finite on the axis through
/// `(n / x) J_n(x) = (J_{n-1}(x) + J_{n+1}(x)) / 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BispinorGradient<T> {
    pub d_t: Bispinor<T>,
    pub d_z: Bispinor<T>,
    pub d_rho: Bispinor<T>,
    pub d_phi_over_rho: Bispinor<T>,
    /// `d_x + i d_y`
    pub d_plus: Bispinor<T>,
    /// `d_x - i d_y`
    pub d_minus: Bispinor<T>,
}

impl<T: Real> BispinorGradient<T> {
    /// Cartesian `(d_x, d_y)` at azimuth `phi`.
    pub fn cartesian(&self, phi: T) -> (Bispinor<T>, Bispinor<T>) {
        let (s, c) = phi.sin_cos();
        let cs = |v: T| Cplx::new(v, T::zero());
        let dx = self.d_rho.scale(cs(c)).sub(&self.d_phi_over_rho.scale(cs(s)));
        let dy = self.d_rho.scale(cs(s)).add(&self.d_phi_over_rho.scale(cs(c)));
        (dx, dy)
    }
}
