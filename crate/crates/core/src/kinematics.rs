//! Beam kinematics and the characteristic radii of a Bessel mode.
//!
//! Natural units throughout: hbar = c = 1, momenta in units of the rest mass,
//! lengths in inverse mass (the reduced Compton wavelength).

use crate::error::{to_f64, Error, Result};
use crate::scalar::{Cplx, Real};

/// Kinematic inputs of a Bessel mode together with the derived quantities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeamParameters<T> {
    kappa: T,
    k_z: T,
    mass: T,
    k: T,
    energy: T,
    theta: T,
}

impl<T: Real> BeamParameters<T> {
    /// Builds the parameter set from transverse and longitudinal wave numbers.
    pub fn new(kappa: T, k_z: T, mass: T) -> Result<Self> {
        if !(kappa >= T::zero()) || !kappa.is_finite() {
            return Err(Error::InvalidParameter {
                name: "kappa",
                reason: format!("must be finite and >= 0, got {kappa}"),
            });
        }
        if !(mass > T::zero()) || !mass.is_finite() {
            return Err(Error::InvalidParameter {
                name: "mass",
                reason: format!("must be finite and > 0, got {mass}"),
            });
        }
        if !k_z.is_finite() {
            return Err(Error::InvalidParameter {
                name: "k_z",
                reason: format!("must be finite, got {k_z}"),
            });
        }
        if kappa == T::zero() && k_z == T::zero() {
            return Err(Error::InvalidParameter {
                name: "kappa",
                reason: "kappa and k_z must not both vanish".into(),
            });
        }
        let k = kappa.hypot(k_z);
        let energy = k.hypot(mass);
        let theta = kappa.atan2(k_z);
        Ok(Self { kappa, k_z, mass, k, energy, theta })
    }

    /// Builds the parameter set from total momentum and pitch angle.
    pub fn from_momentum_and_pitch(k: T, theta: T, mass: T) -> Result<Self> {
        if !(k > T::zero()) {
            return Err(Error::InvalidParameter {
                name: "k",
                reason: format!("must be > 0, got {k}"),
            });
        }
        if !(theta >= T::zero() && theta < T::PI()) {
            return Err(Error::InvalidParameter {
                name: "theta",
                reason: format!("must lie in [0, pi), got {theta}"),
            });
        }
        Self::new(k * theta.sin(), k * theta.cos(), mass)
    }

    pub fn kappa(&self) -> T {
        self.kappa
    }
    pub fn k_z(&self) -> T {
        self.k_z
    }
    pub fn mass(&self) -> T {
        self.mass
    }
    /// Total wave number `sqrt(kappa^2 + k_z^2)`.
    pub fn k(&self) -> T {
        self.k
    }
    pub fn energy(&self) -> T {
        self.energy
    }
    /// Pitch angle, `atan2(kappa, k_z)`.
    pub fn theta(&self) -> T {
        self.theta
    }

    /// `(sin(theta/2), cos(theta/2))`.
    pub fn half_angle(&self) -> (T, T) {
        (self.theta / T::lit(2.0)).sin_cos()
    }

    /// `E^2 - k_z^2 - kappa^2 - m^2`; zero up to rounding.
    pub fn mass_shell_defect(&self) -> T {
        self.energy * self.energy
            - self.k_z * self.k_z
            - self.kappa * self.kappa
            - self.mass * self.mass
    }
}

/// Length scales that delimit the velocity regimes of a mode with orbital index `ell`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharacteristicRadii<T> {
    /// `ell tan(theta) / kappa`: inner edge of the whirlpool window.
    pub r_bucket: T,
    /// `ell / kappa`: outer edge of the small-argument Bessel regime.
    pub r_bessel: T,
    /// `ell / E`: Compton-scale radius.
    pub r_compton_scale: T,
    /// Radius where the two branches of the Barnett piecewise velocity meet.
    /// Only populated through [`CharacteristicRadii::with_barnett_mixing`].
    pub r_crossing: Option<T>,
}

impl<T: Real> CharacteristicRadii<T> {
    pub fn new(params: &BeamParameters<T>, ell: i32) -> Result<Self> {
        if ell < 1 {
            return Err(Error::InvalidParameter {
                name: "ell",
                reason: format!("characteristic radii need ell >= 1, got {ell}"),
            });
        }
        if params.kappa() == T::zero() {
            return Err(Error::InvalidParameter {
                name: "kappa",
                reason: "characteristic radii are undefined for a plane wave".into(),
            });
        }
        let l = T::from_int(ell);
        Ok(Self {
            r_bucket: l * params.theta().tan() / params.kappa(),
            r_bessel: l / params.kappa(),
            r_compton_scale: l / params.energy(),
            r_crossing: None,
        })
    }

    pub fn with_barnett_mixing(
        mut self,
        params: &BeamParameters<T>,
        ell: i32,
        a: Cplx<T>,
        b: Cplx<T>,
    ) -> Result<Self> {
        self.r_crossing = Some(barnett_crossing_radius(params, ell, a, b)?);
        Ok(self)
    }
}

/// Shorthand for [`CharacteristicRadii::new`].
pub fn characteristic_radii<T: Real>(
    params: &BeamParameters<T>,
    ell: i32,
) -> Result<CharacteristicRadii<T>> {
    CharacteristicRadii::new(params, ell)
}

/// Radius at which `2 ell w / (E rho)` (moderate radii) equals `(E + m) rho / ell`
/// (small radii), with `w = |b|^2 / (|a|^2 + |b|^2)`:
/// `rho* = ell sqrt(2 w / (E (E + m)))`.
pub fn barnett_crossing_radius<T: Real>(
    params: &BeamParameters<T>,
    ell: i32,
    a: Cplx<T>,
    b: Cplx<T>,
) -> Result<T> {
    let total = a.norm_sqr() + b.norm_sqr();
    if total == T::zero() {
        return Err(Error::ZeroMixing);
    }
    if ell < 1 {
        return Err(Error::InvalidParameter {
            name: "ell",
            reason: format!("crossing radius needs ell >= 1, got {}", to_f64(ell)),
        });
    }
    let e = params.energy();
    let w = b.norm_sqr() / total;
    Ok(T::from_int(ell) * (T::lit(2.0) * w / (e * (e + params.mass()))).sqrt())
}
