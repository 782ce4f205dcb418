#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vortspin::{Beam, Complex, Point};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

pub fn random_beam(r: &mut ChaCha8Rng) -> Beam {
    Beam::new(r.gen_range(0.01..1.0), r.gen_range(-1.0..2.0), 1.0).unwrap()
}

pub fn random_point(r: &mut ChaCha8Rng, lo: f64, hi: f64) -> Point {
    let rho = r.gen_range(lo.ln()..hi.ln()).exp();
    Point::new(rho, r.gen_range(0.0..std::f64::consts::TAU), r.gen_range(-10.0..10.0), r.gen_range(-10.0..10.0)).unwrap()
}

pub fn random_complex(r: &mut ChaCha8Rng) -> Complex {
    c(r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0))
}

/// Helicity mode by 512-point trapezoid quadrature over the cone of plane waves,
/// `A0 e^{i(k_z z - E t)} int dphi_k/2pi (-i)^L e^{i L phi_k + i k_perp.rho} u(k, lambda)`
/// with `L = j_z - lambda`.
pub fn helicity_by_quadrature(beam: &Beam, two_jz: i32, plus: bool, a0: Complex, pt: &Point) -> [Complex; 4] {
    const N: usize = 512;
    let orbital = if plus { (two_jz - 1) / 2 } else { (two_jz + 1) / 2 };
    let e = beam.energy();
    let m = beam.mass();
    let up = (e + m).sqrt();
    let down = (e - m).sqrt() * if plus { 1.0 } else { -1.0 };
    let (st, ct) = (beam.theta() / 2.0).sin_cos();
    let phase0 = c(0.0, -1.0).powi(orbital);
    let mut acc = [c(0.0, 0.0); 4];
    for j in 0..N {
        let pk = std::f64::consts::TAU * j as f64 / N as f64;
        let chi = if plus {
            [c(ct, 0.0), Complex::from_polar(st, pk)]
        } else {
            [-Complex::from_polar(st, -pk), c(ct, 0.0)]
        };
        let w = phase0 * Complex::from_polar(1.0, orbital as f64 * pk + beam.kappa() * pt.rho * (pk - pt.phi).cos());
        acc[0] += w * chi[0] * up;
        acc[1] += w * chi[1] * up;
        acc[2] += w * chi[0] * down;
        acc[3] += w * chi[1] * down;
    }
    let plane = Complex::from_polar(1.0, beam.k_z() * pt.z - e * pt.t);
    acc.map(|v| v * a0 * plane / N as f64)
}
