use crate::error::{Error, Result};
use crate::kinematics::BeamParameters;
use crate::scalar::{Cplx, Real};
use crate::special::{bessel_j, bessel_j_span};

use super::{Basis, Bispinor, BispinorGradient, Family, SolutionSpec, SpacetimePoint};

/// One term `coef * rho^rho_power * exp(i winding phi) * J_order(kappa rho)` of a
/// bispinor component. The common factor `exp(i (k_z z - E t))` is implicit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeTerm<T> {
    pub coef: Cplx<T>,
    pub order: i32,
    pub winding: i32,
    pub rho_power: i32,
}

impl<T: Real> ModeTerm<T> {
    fn bessel(coef: Cplx<T>, order: i32) -> Self {
        Self { coef, order, winding: order, rho_power: 0 }
    }
}

/// A solution family bound to beam parameters, expanded into [`ModeTerm`]s.
#[derive(Debug, Clone)]
pub struct Field<T> {
    params: BeamParameters<T>,
    spec: SolutionSpec<T>,
    terms: [Vec<ModeTerm<T>>; 4],
    order_lo: i32,
    order_hi: i32,
}

fn c<T: Real>(re: T, im: T) -> Cplx<T> {
    Cplx::new(re, im)
}

fn expand<T: Real>(spec: &SolutionSpec<T>, p: &BeamParameters<T>) -> [Vec<ModeTerm<T>>; 4] {
    let l = spec.ell();
    let e_m = p.energy() + p.mass();
    let k = p.k();
    let kz = p.k_z();
    let kappa = p.kappa();
    let (s, co) = p.half_angle();
    let zero = T::zero();
    let i = c(zero, T::one());
    let (a, b) = (spec.a(), spec.b());
    let pre = spec.a0() / e_m.sqrt();
    let t = |coef: Cplx<T>, order: i32| ModeTerm::bessel(coef * pre, order);

    match spec.family() {
        Family::HelicityPlus => [
            vec![t(c(e_m * co, zero), l)],
            vec![t(c(zero, e_m * s), l + 1)],
            vec![t(c(k * co, zero), l)],
            vec![t(c(zero, k * s), l + 1)],
        ],
        Family::HelicityMinus => [
            vec![t(c(zero, e_m * s), l)],
            vec![t(c(e_m * co, zero), l + 1)],
            vec![t(c(zero, -k * s), l)],
            vec![t(c(-k * co, zero), l + 1)],
        ],
        Family::BialynickiBirula => [
            vec![t(a * e_m, l)],
            vec![t(b * e_m, l + 1)],
            vec![t(a * kz - i * b * kappa, l)],
            vec![t(i * a * kappa - b * kz, l + 1)],
        ],
        Family::Barnett => [
            vec![t(a * e_m, l)],
            vec![t(b * e_m, l)],
            vec![t(a * kz, l), t(-i * b * kappa, l - 1)],
            vec![t(-b * kz, l), t(i * a * kappa, l + 1)],
        ],
        Family::BarnettSmallRho => {
            let mut c3 = vec![t(a * kz, l)];
            if b.norm_sqr() > zero {
                c3.push(ModeTerm {
                    coef: -i * b * T::from_int(2 * l) * pre,
                    order: l,
                    winding: l - 1,
                    rho_power: -1,
                });
            }
            [vec![t(a * e_m, l)], vec![t(b * e_m, l)], c3, vec![t(-b * kz, l)]]
        }
    }
}

impl<T: Real> Field<T> {
    pub fn new(spec: SolutionSpec<T>, params: BeamParameters<T>) -> Result<Self> {
        let terms = expand(&spec, &params);
        let orders = terms.iter().flatten().map(|t| t.order);
        let order_lo = orders.clone().min().unwrap_or(0) - 1;
        let order_hi = orders.max().unwrap_or(0) + 1;
        Ok(Self { params, spec, terms, order_lo, order_hi })
    }

    pub fn params(&self) -> &BeamParameters<T> {
        &self.params
    }

    pub fn spec(&self) -> &SolutionSpec<T> {
        &self.spec
    }

    pub fn terms(&self) -> &[Vec<ModeTerm<T>>; 4] {
        &self.terms
    }

    fn singular_on_axis(&self) -> bool {
        self.terms.iter().flatten().any(|t| t.rho_power < 0)
    }

    pub fn value(&self, point: &SpacetimePoint<T>) -> Result<Bispinor<T>> {
        Ok(self.sample(point)?.0)
    }

    /// Field value and its analytic gradient.
    pub fn sample(&self, point: &SpacetimePoint<T>) -> Result<(Bispinor<T>, BispinorGradient<T>)> {
        let rho = point.rho;
        if rho == T::zero() && self.singular_on_axis() {
            return Err(Error::SingularOnAxis);
        }
        let kappa = self.params.kappa();
        let x = kappa * rho;
        let table = bessel_j_span(self.order_lo, self.order_hi, x)?;
        let j = |n: i32| table[(n - self.order_lo) as usize];
        let plane = self.params.k_z() * point.z - self.params.energy() * point.t;
        let half = T::lit(0.5);
        let i = c(T::zero(), T::one());

        let mut psi = Bispinor::zero(Basis::Dirac);
        let mut d_rho = Bispinor::zero(Basis::Dirac);
        let mut d_phi = Bispinor::zero(Basis::Dirac);
        let mut d_plus = Bispinor::zero(Basis::Dirac);
        let mut d_minus = Bispinor::zero(Basis::Dirac);
        let up = Cplx::from_polar(T::one(), point.phi);
        for (comp, terms) in self.terms.iter().enumerate() {
            for term in terms {
                let n = term.order;
                let phase = Cplx::from_polar(T::one(), T::from_int(term.winding) * point.phi + plane);
                let amp = term.coef * phase;
                let jn = j(n);
                let jprime = (j(n - 1) - j(n + 1)) * half;
                let rp = if term.rho_power == 0 { T::one() } else { rho.powi(term.rho_power) };
                // J_n(kappa rho) / rho, regular whenever n != 0
                let j_over_rho = if n != 0 {
                    kappa * (j(n - 1) + j(n + 1)) * half / T::from_int(n)
                } else if term.winding == 0 && term.rho_power == 0 {
                    T::zero()
                } else {
                    jn / rho
                };
                psi.c[comp] = psi.c[comp] + amp * (rp * jn);
                let radial = if term.rho_power == 0 {
                    kappa * jprime
                } else {
                    T::from_int(term.rho_power) * rp / rho * jn + rp * kappa * jprime
                };
                let azimuthal = i * (T::from_int(term.winding) * rp * j_over_rho);
                d_rho.c[comp] = d_rho.c[comp] + amp * radial;
                d_phi.c[comp] = d_phi.c[comp] + amp * azimuthal;
                if term.rho_power == 0 && term.winding == n {
                    d_plus.c[comp] = d_plus.c[comp] - amp * up * (kappa * j(n + 1));
                    d_minus.c[comp] = d_minus.c[comp] + amp * up.conj() * (kappa * j(n - 1));
                } else {
                    d_plus.c[comp] = d_plus.c[comp] + amp * up * (c(radial, T::zero()) + i * azimuthal);
                    d_minus.c[comp] = d_minus.c[comp] + amp * up.conj() * (c(radial, T::zero()) - i * azimuthal);
                }
            }
        }
        let grad = BispinorGradient {
            d_t: psi.scale(c(T::zero(), -self.params.energy())),
            d_z: psi.scale(c(T::zero(), self.params.k_z())),
            d_rho,
            d_phi_over_rho: d_phi,
            d_plus,
            d_minus,
        };
        Ok((psi, grad))
    }
}

/// `exp(i (k_z z - E t) + i ell phi) J_ell(kappa rho)`.
pub fn mode_function<T: Real>(
    params: &BeamParameters<T>,
    ell: i32,
    point: &SpacetimePoint<T>,
) -> Result<Cplx<T>> {
    let jl = bessel_j(ell, params.kappa() * point.rho)?;
    let arg = params.k_z() * point.z - params.energy() * point.t + T::from_int(ell) * point.phi;
    Ok(Cplx::from_polar(jl, arg))
}

/// Analytic spacetime gradient of the field described by `spec`.
pub fn analytic_gradient<T: Real>(
    spec: &SolutionSpec<T>,
    params: &BeamParameters<T>,
    point: &SpacetimePoint<T>,
) -> Result<BispinorGradient<T>> {
    Ok(Field::new(*spec, *params)?.sample(point)?.1)
}

/// `|| (i gamma^mu d_mu - m) psi || / (m || psi ||)` for a Dirac-basis value and gradient.
pub fn dirac_residual_of<T: Real>(
    params: &BeamParameters<T>,
    psi: &Bispinor<T>,
    grad: &BispinorGradient<T>,
) -> Result<T> {
    if psi.basis != Basis::Dirac {
        return Err(Error::BasisMismatch { expected: "Dirac" });
    }
    let norm = psi.norm();
    if norm == T::zero() {
        return Err(Error::ZeroNorm);
    }
    // sigma.grad on a two-spinor, with the transverse part in the helical form
    // [[d_z, d_-], [d_+, -d_z]] so no cancellation between d_x and d_y occurs
    let sigma_grad = |u: usize| {
        [
            grad.d_z.c[u] + grad.d_minus.c[u + 1],
            grad.d_plus.c[u] - grad.d_z.c[u + 1],
        ]
    };
    let upper = sigma_grad(2);
    let lower = sigma_grad(0);
    let i = c(T::zero(), T::one());
    let m = params.mass();
    let mut r = Bispinor::zero(Basis::Dirac);
    for s in 0..2 {
        r.c[s] = i * (grad.d_t.c[s] + upper[s]) - psi.c[s] * m;
        r.c[s + 2] = -i * (grad.d_t.c[s + 2] + lower[s]) - psi.c[s + 2] * m;
    }
    Ok(r.norm() / (m * norm))
}

/// Dirac-equation residual of the field at `point`.
pub fn dirac_residual<T: Real>(
    spec: &SolutionSpec<T>,
    params: &BeamParameters<T>,
    point: &SpacetimePoint<T>,
) -> Result<T> {
    let (psi, grad) = Field::new(*spec, *params)?.sample(point)?;
    dirac_residual_of(params, &psi, &grad)
}
