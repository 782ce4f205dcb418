//! Local densities of a Bessel-mode field and the velocity fields built from them.
//!
//! * Dirac current `j^mu = psibar gamma^mu psi`.
//! * Canonical momentum density `(i/2) psibar gamma^0 <->d^mu psi`.
//! * Belinfante momentum density `(i/4) psibar (gamma^0 <->d^mu + gamma^mu <->d^0) psi`.
//!
//! Spatial components are reported in the cylindrical frame `(rho, phi, z)` of the
//! evaluation point. Derivatives come from the analytic gradient only.

use crate::error::{to_f64, Error, Result};
use crate::kinematics::BeamParameters;
use crate::scalar::{Cplx, Real};
use crate::special::bessel_j_span;
use crate::spinor::{Bispinor, BispinorGradient, DiracMatrices, Field, SolutionSpec, SpacetimePoint};

/// Time component plus cylindrical spatial components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CylFourVector<T> {
    pub t: T,
    pub rho: T,
    pub phi: T,
    pub z: T,
}

impl<T: Real> CylFourVector<T> {
    fn from_cartesian(t: T, x: T, y: T, z: T, phi: T) -> Self {
        let (s, c) = phi.sin_cos();
        Self { t, rho: c * x + s * y, phi: -s * x + c * y, z }
    }

    pub fn spatial_norm(&self) -> T {
        (self.rho * self.rho + self.phi * self.phi + self.z * self.z).sqrt()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensitySet<T> {
    /// `psi^dagger psi`
    pub scalar: T,
    pub current: CylFourVector<T>,
    pub p_canonical: CylFourVector<T>,
    pub p_belinfante: CylFourVector<T>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VelocityDefinition {
    DiracCurrent,
    Canonical,
    Belinfante,
}

impl VelocityDefinition {
    pub const ALL: [VelocityDefinition; 3] =
        [VelocityDefinition::DiracCurrent, VelocityDefinition::Canonical, VelocityDefinition::Belinfante];

    pub fn name(self) -> &'static str {
        match self {
            VelocityDefinition::DiracCurrent => "dirac",
            VelocityDefinition::Canonical => "canonical",
            VelocityDefinition::Belinfante => "belinfante",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VelocityVector<T> {
    pub v_rho: T,
    pub v_phi: T,
    pub v_z: T,
    pub definition: VelocityDefinition,
}

impl<T: Real> VelocityVector<T> {
    pub fn speed(&self) -> T {
        (self.v_rho * self.v_rho + self.v_phi * self.v_phi + self.v_z * self.v_z).sqrt()
    }
}

/// Densities from a Dirac-basis value and gradient at azimuth `phi`.
pub fn densities_of<T: Real>(psi: &Bispinor<T>, grad: &BispinorGradient<T>, phi: T) -> DensitySet<T> {
    let g = DiracMatrices::<T>::dirac();
    let half = T::lit(0.5);
    let scalar = psi.norm_sqr();
    let jx = psi.sandwich(&g.alpha[0], psi).re;
    let jy = psi.sandwich(&g.alpha[1], psi).re;
    let jz = psi.sandwich(&g.alpha[2], psi).re;
    let current = CylFourVector::from_cartesian(scalar, jx, jy, jz, phi);

    // canonical: P^0 = -Im(psi^dag d_t psi), P^i = Im(psi^dag d_i psi)
    let dt = psi.inner(&grad.d_t).im;
    let p_canonical = CylFourVector {
        t: -dt,
        rho: psi.inner(&grad.d_rho).im,
        phi: psi.inner(&grad.d_phi_over_rho).im,
        z: psi.inner(&grad.d_z).im,
    };

    // Belinfante: half the canonical part plus -1/2 Im(psi^dag gamma^0 gamma^mu d_t psi)
    let ax = psi.sandwich(&g.alpha[0], &grad.d_t).im;
    let ay = psi.sandwich(&g.alpha[1], &grad.d_t).im;
    let az = psi.sandwich(&g.alpha[2], &grad.d_t).im;
    let extra = CylFourVector::from_cartesian(dt, ax, ay, az, phi);
    let p_belinfante = CylFourVector {
        t: half * p_canonical.t - half * extra.t,
        rho: half * p_canonical.rho - half * extra.rho,
        phi: half * p_canonical.phi - half * extra.phi,
        z: half * p_canonical.z - half * extra.z,
    };
    DensitySet { scalar, current, p_canonical, p_belinfante }
}

pub fn densities<T: Real>(field: &Field<T>, point: &SpacetimePoint<T>) -> Result<DensitySet<T>> {
    let (psi, grad) = field.sample(point)?;
    Ok(densities_of(&psi, &grad, point.phi))
}

fn ratio<T: Real>(v: &CylFourVector<T>, definition: VelocityDefinition) -> VelocityVector<T> {
    VelocityVector { v_rho: v.rho / v.t, v_phi: v.phi / v.t, v_z: v.z / v.t, definition }
}

impl<T: Real> DensitySet<T> {
    /// Velocity for `definition`; `ZeroDensity` where `psi^dagger psi` vanishes.
    pub fn velocity(&self, definition: VelocityDefinition, rho: T) -> Result<VelocityVector<T>> {
        if !(self.scalar > T::min_positive_value()) {
            return Err(Error::ZeroDensity { rho: to_f64(rho) });
        }
        Ok(match definition {
            VelocityDefinition::DiracCurrent => ratio(&self.current, definition),
            VelocityDefinition::Canonical => ratio(&self.p_canonical, definition),
            VelocityDefinition::Belinfante => ratio(&self.p_belinfante, definition),
        })
    }
}

pub fn velocity<T: Real>(
    field: &Field<T>,
    point: &SpacetimePoint<T>,
    definition: VelocityDefinition,
) -> Result<VelocityVector<T>> {
    densities(field, point)?.velocity(definition, point.rho)
}

/// Printed closed-form transverse velocities used as comparison targets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClosedForm<T> {
    /// `l / (rho E)`
    Canonical,
    /// `l / (2 rho E) + (kappa / 2E) J_{l+1} / J_l`
    Belinfante,
    /// `(kappa/E) J_l J_{l+1} / (sin^2(theta/2) J_l^2 + cos^2(theta/2) J_{l+1}^2)`
    Antiparallel,
    /// `(2 l / E) |b|^2 / (|a|^2 + |b|^2) / rho`
    BarnettModerate { a: Cplx<T>, b: Cplx<T> },
    /// `(E + m) rho / l`
    BarnettSmall,
}

pub fn velocity_closed_form<T: Real>(
    params: &BeamParameters<T>,
    ell: i32,
    rho: T,
    which: ClosedForm<T>,
) -> Result<T> {
    if !(rho > T::zero()) {
        return Err(Error::InvalidParameter { name: "rho", reason: format!("must be > 0, got {rho}") });
    }
    let l = T::from_int(ell);
    let e = params.energy();
    let kappa = params.kappa();
    let two = T::lit(2.0);
    let bessel = || -> Result<(T, T, T)> {
        let v = bessel_j_span(ell - 1, ell + 1, kappa * rho)?;
        Ok((v[0], v[1], v[2]))
    };
    match which {
        ClosedForm::Canonical => Ok(l / (rho * e)),
        ClosedForm::Belinfante => {
            let (jm, jl, jp) = bessel()?;
            if jl.abs() <= T::epsilon() * (jm.abs() + jp.abs()) {
                return Err(Error::BesselZero { rho: to_f64(rho) });
            }
            Ok(l / (two * rho * e) + kappa / (two * e) * jp / jl)
        }
        ClosedForm::Antiparallel => {
            let (_, jl, jp) = bessel()?;
            let (s, c) = params.half_angle();
            Ok(kappa / e * jl * jp / (s * s * jl * jl + c * c * jp * jp))
        }
        ClosedForm::BarnettModerate { a, b } => {
            let total = a.norm_sqr() + b.norm_sqr();
            if total == T::zero() {
                return Err(Error::ZeroMixing);
            }
            Ok(two * l / e * b.norm_sqr() / total / rho)
        }
        ClosedForm::BarnettSmall => Ok((e + params.mass()) / l * rho),
    }
}

/// Exact-pipeline versus printed near-axis bilinears of the mixed-`j_z` solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BarnettBilinearCheck<T> {
    /// `psi^dag alpha_phi psi` of the exact field, and the printed `4 l |b|^2 J_l^2 / rho`.
    pub transverse_current: (T, T),
    /// `psi^dag psi` of the exact field, and the printed paraxial expression.
    pub density: (T, T),
}

impl<T: Real> BarnettBilinearCheck<T> {
    pub fn current_deviation(&self) -> T {
        rel_dev(self.transverse_current)
    }
    pub fn density_deviation(&self) -> T {
        rel_dev(self.density)
    }
}

fn rel_dev<T: Real>((exact, approx): (T, T)) -> T {
    let scale = exact.abs().max(approx.abs());
    if scale == T::zero() {
        T::zero()
    } else {
        (exact - approx).abs() / scale
    }
}

/// Compares the unit-normalized (`A0 = 1`) exact mixed solution against the printed
/// paraxial bilinears. Meaningful for small pitch and `kappa rho` well below `l`.
pub fn bilinear_barnett_check<T: Real>(
    params: &BeamParameters<T>,
    ell: i32,
    a: Cplx<T>,
    b: Cplx<T>,
    point: &SpacetimePoint<T>,
) -> Result<BarnettBilinearCheck<T>> {
    if !(point.rho > T::zero()) {
        return Err(Error::SingularOnAxis);
    }
    let spec = SolutionSpec::barnett(ell, a, b, Cplx::new(T::one(), T::zero()))?;
    let field = Field::new(spec, *params)?;
    let d = densities(&field, point)?;

    let rho = point.rho;
    let l = T::from_int(ell);
    let e = params.energy();
    let e_m = e + params.mass();
    let jl = crate::special::bessel_j(ell, params.kappa() * rho)?;
    let j2 = jl * jl;
    let four = T::lit(4.0);
    let current_closed = four * l * j2 * b.norm_sqr() / rho;
    let interference = (a.conj() * b * Cplx::from_polar(T::one(), -point.phi)).im;
    let density_closed = j2
        * (T::lit(2.0) * e * (a.norm_sqr() + b.norm_sqr())
            + four * l * l * b.norm_sqr() / (e_m * rho * rho)
            + four * l * params.k_z() / (e_m * rho) * interference);
    Ok(BarnettBilinearCheck {
        transverse_current: (d.current.phi, current_closed),
        density: (d.scalar, density_closed),
    })
}
