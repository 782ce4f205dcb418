//! Which twisted-electron solution is being evaluated.

use crate::error::{to_f64, Error, Result};
use crate::kinematics::BeamParameters;
use crate::scalar::{Cplx, Real};
use crate::special::MAX_ORDER;

/// Solution families.
///
/// * `HelicityPlus` / `HelicityMinus`: every plane-wave component has helicity +-1/2.
/// * `BialynickiBirula`: definite-`j_z` superposition of the two helicities with
///   mixing `(a, b)`, carrying `f^l` in the first and `f^{l+1}` in the second row.
/// * `Barnett`: `a`-branch at orbital index `l` plus `b`-branch at `l - 1`, which
///   mixes two values of `j_z`.
/// * `BarnettSmallRho`: the near-axis form of `Barnett` with the `f^{l+1}` term
///   dropped and `J_{l-1}` replaced by its leading ratio to `J_l`. Approximate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    HelicityPlus,
    HelicityMinus,
    BialynickiBirula,
    Barnett,
    BarnettSmallRho,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::HelicityPlus => "helicity_plus",
            Family::HelicityMinus => "helicity_minus",
            Family::BialynickiBirula => "bialynicki_birula",
            Family::Barnett => "barnett",
            Family::BarnettSmallRho => "barnett_small_rho",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolutionSpec<T> {
    family: Family,
    ell: i32,
    a: Cplx<T>,
    b: Cplx<T>,
    a0: Cplx<T>,
}

fn half_integer_offset<T: Real>(j_z: T) -> Result<i32> {
    let l = j_z - T::lit(0.5);
    if !l.is_finite() || l.round() != l {
        return Err(Error::NonIntegerOrbital(to_f64(l)));
    }
    let l = l.to_i32().ok_or(Error::NonIntegerOrbital(to_f64(l)))?;
    check_ell(l)?;
    Ok(l)
}

fn check_ell(ell: i32) -> Result<()> {
    // neighbouring orders l - 1 .. l + 2 enter the gradients
    if ell.abs() + 2 >= MAX_ORDER {
        return Err(Error::OrderOutOfRange(ell));
    }
    Ok(())
}

fn check_mixing<T: Real>(a: Cplx<T>, b: Cplx<T>) -> Result<()> {
    if a.norm_sqr() + b.norm_sqr() == T::zero() {
        return Err(Error::ZeroMixing);
    }
    if !(a.re.is_finite() && a.im.is_finite() && b.re.is_finite() && b.im.is_finite()) {
        return Err(Error::InvalidParameter { name: "a, b", reason: "must be finite".into() });
    }
    Ok(())
}

impl<T: Real> SolutionSpec<T> {
    /// Single-helicity mode with total angular momentum `j_z` and helicity `lambda = +-1/2`.
    /// `j_z - lambda` must be an integer.
    pub fn helicity(j_z: T, lambda: T, a0: Cplx<T>) -> Result<Self> {
        let half = T::lit(0.5);
        let family = if lambda == half {
            Family::HelicityPlus
        } else if lambda == -half {
            Family::HelicityMinus
        } else {
            return Err(Error::InvalidParameter {
                name: "lambda",
                reason: format!("helicity must be +1/2 or -1/2, got {lambda}"),
            });
        };
        let orbital = j_z - lambda;
        if !orbital.is_finite() || orbital.round() != orbital {
            return Err(Error::NonIntegerOrbital(to_f64(orbital)));
        }
        let ell = half_integer_offset(j_z)?;
        Ok(Self { family, ell, a: Cplx::new(T::one(), T::zero()), b: Cplx::new(T::zero(), T::zero()), a0 })
    }

    /// Definite-`j_z` mixture of both helicities.
    pub fn bialynicki_birula(j_z: T, a: Cplx<T>, b: Cplx<T>, a0: Cplx<T>) -> Result<Self> {
        check_mixing(a, b)?;
        let ell = half_integer_offset(j_z)?;
        Ok(Self { family: Family::BialynickiBirula, ell, a, b, a0 })
    }

    /// Exact mixed-`j_z` solution with orbital index `ell` on the upper components.
    pub fn barnett(ell: i32, a: Cplx<T>, b: Cplx<T>, a0: Cplx<T>) -> Result<Self> {
        check_mixing(a, b)?;
        check_ell(ell)?;
        Ok(Self { family: Family::Barnett, ell, a, b, a0 })
    }

    /// Near-axis approximation of [`SolutionSpec::barnett`]; singular at `rho = 0` when `b != 0`.
    pub fn barnett_small_rho(ell: i32, a: Cplx<T>, b: Cplx<T>, a0: Cplx<T>) -> Result<Self> {
        check_mixing(a, b)?;
        check_ell(ell)?;
        Ok(Self { family: Family::BarnettSmallRho, ell, a, b, a0 })
    }

    /// Positive-helicity plane wave along z (`j_z = 1/2`, unit amplitude).
    pub fn plane_wave() -> Self {
        Self::helicity(T::lit(0.5), T::lit(0.5), Cplx::new(T::one(), T::zero())).expect("valid")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Orbital index of the leading (`f^l`) components, `l = j_z - 1/2` for
    /// the definite-`j_z` families.
    pub fn ell(&self) -> i32 {
        self.ell
    }

    pub fn j_z(&self) -> Option<T> {
        match self.family {
            Family::Barnett | Family::BarnettSmallRho => None,
            _ => Some(T::from_int(self.ell) + T::lit(0.5)),
        }
    }

    pub fn lambda(&self) -> Option<T> {
        match self.family {
            Family::HelicityPlus => Some(T::lit(0.5)),
            Family::HelicityMinus => Some(T::lit(-0.5)),
            _ => None,
        }
    }

    pub fn a(&self) -> Cplx<T> {
        self.a
    }
    pub fn b(&self) -> Cplx<T> {
        self.b
    }
    pub fn a0(&self) -> Cplx<T> {
        self.a0
    }

    pub fn with_a0(mut self, a0: Cplx<T>) -> Self {
        self.a0 = a0;
        self
    }

    pub fn has_definite_jz(&self) -> bool {
        !matches!(self.family, Family::Barnett | Family::BarnettSmallRho)
    }

    /// True for families that solve the free Dirac equation exactly.
    pub fn is_exact(&self) -> bool {
        self.family != Family::BarnettSmallRho
    }

    /// Helicity-mode coefficients `(alpha, beta)` such that the BB solution equals
    /// `alpha psi_+ + beta psi_-` at the same `j_z`.
    pub fn helicity_weights(&self, params: &BeamParameters<T>) -> Option<(Cplx<T>, Cplx<T>)> {
        if self.family != Family::BialynickiBirula {
            return None;
        }
        let (s, c) = params.half_angle();
        let i = Cplx::new(T::zero(), T::one());
        let alpha = self.a * c - i * self.b * s;
        let beta = -i * self.a * s + self.b * c;
        Some((alpha, beta))
    }
}

/// The `b` that makes the second Weyl-basis component of the BB solution vanish
/// for given `a`: `b (E + m - k_z) + i a kappa = 0`.
pub fn weyl_null_coefficient<T: Real>(params: &BeamParameters<T>, a: Cplx<T>) -> Cplx<T> {
    let d = params.energy() + params.mass() - params.k_z();
    -Cplx::new(T::zero(), T::one()) * a * params.kappa() / d
}
