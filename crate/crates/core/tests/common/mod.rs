#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vortspin::{Beam, Complex, Point, Solution, Spinor};
use vortspin::spinor::{Basis, Family};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

pub fn random_beam(r: &mut ChaCha8Rng) -> Beam {
    Beam::new(r.gen_range(0.01..1.0), r.gen_range(-1.0..2.0), 1.0).unwrap()
}

pub fn random_point(r: &mut ChaCha8Rng, rho_lo: f64, rho_hi: f64) -> Point {
    let rho = (r.gen_range(rho_lo.ln()..rho_hi.ln())).exp();
    Point::new(rho, r.gen_range(0.0..std::f64::consts::TAU), r.gen_range(-10.0..10.0), r.gen_range(-10.0..10.0)).unwrap()
}

pub fn random_complex(r: &mut ChaCha8Rng) -> Complex {
    c(r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0))
}

/// Coordinate-space helicity mode by direct quadrature of the superposition of
/// plane waves on the cone `theta_k`, 512-point trapezoid in the azimuth `phi_k`.
///
/// `psi = A0 e^{i(k_z z - E t)} int dphi_k/2pi (-i)^L e^{i L phi_k + i k_perp.rho} u(k, lambda)`,
/// with `L = j_z - lambda` and Jacob-Wick helicity spinors.
pub fn helicity_by_quadrature(beam: &Beam, two_jz: i32, plus: bool, a0: Complex, pt: &Point) -> [Complex; 4] {
    const N: usize = 512;
    let orbital = if plus { (two_jz - 1) / 2 } else { (two_jz + 1) / 2 };
    let e = beam.energy();
    let m = beam.mass();
    let up = (e + m).sqrt();
    let down = (e - m).sqrt() * if plus { 1.0 } else { -1.0 };
    let (st, ct) = (beam.theta() / 2.0).sin_cos();
    let minus_i_pow = c(0.0, -1.0).powi(orbital);
    let mut acc = [c(0.0, 0.0); 4];
    for j in 0..N {
        let pk = std::f64::consts::TAU * j as f64 / N as f64;
        let chi = if plus {
            [c(ct, 0.0), Complex::from_polar(st, pk)]
        } else {
            [-Complex::from_polar(st, -pk), c(ct, 0.0)]
        };
        let w = minus_i_pow * Complex::from_polar(1.0, orbital as f64 * pk + beam.kappa() * pt.rho * (pk - pt.phi).cos());
        acc[0] += w * chi[0] * up;
        acc[1] += w * chi[1] * up;
        acc[2] += w * chi[0] * down;
        acc[3] += w * chi[1] * down;
    }
    let plane = Complex::from_polar(1.0, beam.k_z() * pt.z - e * pt.t);
    acc.map(|v| v * a0 * plane / N as f64)
}

/// Size of the quadrature integrand, `|A0| sqrt(2E)`. The trapezoid sum cannot
/// resolve values much below `1e-16` of this, so oracle comparisons are scaled by it.
pub fn integrand_scale(beam: &Beam, a0: Complex) -> f64 {
    a0.norm() * (2.0 * beam.energy()).sqrt()
}

pub fn as_spinor(c: [Complex; 4]) -> Spinor {
    Spinor { c, basis: Basis::Dirac }
}

pub fn rel_diff(a: &Spinor, b: &Spinor) -> f64 {
    a.sub(b).norm() / a.norm().max(b.norm())
}

pub fn family_of(s: &Solution) -> Family {
    s.family()
}
