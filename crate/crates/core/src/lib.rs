//! Relativistic twisted-electron (Bessel-mode Dirac) fields and the vorticity of
//! their local velocity fields.
//!
//! Three velocity definitions are compared: the Dirac current `psi^dag alpha psi / psi^dag psi`,
//! and the momentum densities of the canonical and Belinfante energy-momentum tensors
//! divided by the energy density. Every numerical type is generic over [`Real`]
//! (`f32` or `f64`); the aliases below fix `f64`, which the accuracy targets assume.

pub mod bilinear;
pub mod error;
pub mod kinematics;
pub mod scalar;
pub mod special;
pub mod spinor;
pub mod vortex;

pub use error::{Error, Result};
pub use scalar::{Cplx, Real};

pub type Complex = scalar::Cplx<f64>;
pub type Beam = kinematics::BeamParameters<f64>;
pub type Radii = kinematics::CharacteristicRadii<f64>;
pub type Solution = spinor::SolutionSpec<f64>;
pub type Point = spinor::SpacetimePoint<f64>;
pub type Spinor = spinor::Bispinor<f64>;
pub type SpinorGradient = spinor::BispinorGradient<f64>;
pub type WaveField = spinor::Field<f64>;
pub type Densities = bilinear::DensitySet<f64>;
pub type Velocity = bilinear::VelocityVector<f64>;
pub type Circulation = vortex::CirculationSample<f64>;
pub type Regime = vortex::RegimeReport<f64>;
pub type Verdict = vortex::VortexVerdict<f64>;
