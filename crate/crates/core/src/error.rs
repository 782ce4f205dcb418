use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
    #[error("Bessel argument must be non-negative, got {0}")]
    NegativeArgument(f64),
    #[error("Bessel order {0} outside supported range |n| <= {max}", max = crate::special::MAX_ORDER)]
    OrderOutOfRange(i32),
    #[error("orbital index j_z - lambda = {0} is not an integer")]
    NonIntegerOrbital(f64),
    #[error("mixing coefficients (a, b) must not both vanish")]
    ZeroMixing,
    #[error("expected a {expected} basis spinor")]
    BasisMismatch { expected: &'static str },
    #[error("field is singular at rho = 0 for this solution family")]
    SingularOnAxis,
    #[error("spinor norm vanishes at the evaluation point")]
    ZeroNorm,
    #[error("density vanishes at rho = {rho}; velocity undefined")]
    ZeroDensity { rho: f64 },
    #[error("J_l(kappa rho) vanishes at rho = {rho}; closed form has a pole")]
    BesselZero { rho: f64 },
    #[error("finite-difference stencil of width {step} crosses the axis at rho = {rho}")]
    StencilCrossesAxis { rho: f64, step: f64 },
    #[error("window [{lo}, {hi}] holds {got} samples, need at least {need}")]
    InsufficientSamples { lo: f64, hi: f64, got: usize, need: usize },
    #[error("no slope crossover found in the scanned range")]
    NoCrossover,
    #[error("velocity undefined on every tried azimuth at rho = {rho}")]
    UndefinedVelocity { rho: f64 },
    #[error("operation not supported for this solution family: {0}")]
    UnsupportedFamily(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn to_f64<T: num_traits::ToPrimitive>(x: T) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
