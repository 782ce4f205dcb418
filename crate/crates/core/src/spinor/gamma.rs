//! Dirac matrices in the Dirac (standard) and Weyl (chiral) representations.
//!
//! The Weyl representation used here is reached with the Hermitian unitary
//! `U = [[1, 1], [1, -1]] / sqrt(2)` (blocks of 2x2 identities), giving
//! `gamma^0 = [[0, 1], [1, 0]]` and `gamma^i = [[0, -sigma_i], [sigma_i, 0]]`.

use crate::scalar::{Cplx, Real};

use super::Basis;

pub type Mat4<T> = [[Cplx<T>; 4]; 4];

fn zero<T: Real>() -> Mat4<T> {
    [[Cplx::new(T::zero(), T::zero()); 4]; 4]
}

pub(crate) fn mat_mul<T: Real>(a: &Mat4<T>, b: &Mat4<T>) -> Mat4<T> {
    let mut out = zero();
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = Cplx::new(T::zero(), T::zero());
            for k in 0..4 {
                acc = acc + a[i][k] * b[k][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

pub(crate) fn mat_vec<T: Real>(a: &Mat4<T>, v: &[Cplx<T>; 4]) -> [Cplx<T>; 4] {
    let mut out = [Cplx::new(T::zero(), T::zero()); 4];
    for (i, row) in a.iter().enumerate() {
        out[i] = row.iter().zip(v).fold(Cplx::new(T::zero(), T::zero()), |acc, (m, x)| acc + m * x);
    }
    out
}

fn adjoint<T: Real>(a: &Mat4<T>) -> Mat4<T> {
    let mut out = zero();
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[j][i].conj();
        }
    }
    out
}

fn pauli<T: Real>(i: usize) -> [[Cplx<T>; 2]; 2] {
    let o = Cplx::new(T::zero(), T::zero());
    let one = Cplx::new(T::one(), T::zero());
    let im = Cplx::new(T::zero(), T::one());
    match i {
        0 => [[o, one], [one, o]],
        1 => [[o, -im], [im, o]],
        2 => [[one, o], [o, -one]],
        _ => unreachable!(),
    }
}

/// Dirac-basis -> Weyl-basis change of basis matrix.
pub(crate) fn weyl_transform<T: Real>() -> Mat4<T> {
    let h = Cplx::new(T::FRAC_1_SQRT_2(), T::zero());
    let mut u = zero();
    for i in 0..2 {
        u[i][i] = h;
        u[i][i + 2] = h;
        u[i + 2][i] = h;
        u[i + 2][i + 2] = -h;
    }
    u
}

/// `gamma^0..gamma^3` and `alpha_x, alpha_y, alpha_z = gamma^0 gamma^i`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiracMatrices<T> {
    pub basis: Basis,
    pub gamma: [Mat4<T>; 4],
    pub alpha: [Mat4<T>; 3],
}

impl<T: Real> DiracMatrices<T> {
    pub fn dirac() -> Self {
        let one = Cplx::new(T::one(), T::zero());
        let mut g0 = zero();
        for i in 0..4 {
            g0[i][i] = if i < 2 { one } else { -one };
        }
        let mut gamma = [g0, zero(), zero(), zero()];
        let mut alpha = [zero(), zero(), zero()];
        for k in 0..3 {
            let s = pauli::<T>(k);
            for i in 0..2 {
                for j in 0..2 {
                    gamma[k + 1][i][j + 2] = s[i][j];
                    gamma[k + 1][i + 2][j] = -s[i][j];
                    alpha[k][i][j + 2] = s[i][j];
                    alpha[k][i + 2][j] = s[i][j];
                }
            }
        }
        Self { basis: Basis::Dirac, gamma, alpha }
    }

    pub fn weyl() -> Self {
        let d = Self::dirac();
        let u = weyl_transform::<T>();
        let ud = adjoint(&u);
        let conj = |m: &Mat4<T>| mat_mul(&mat_mul(&u, m), &ud);
        Self {
            basis: Basis::Weyl,
            gamma: [conj(&d.gamma[0]), conj(&d.gamma[1]), conj(&d.gamma[2]), conj(&d.gamma[3])],
            alpha: [conj(&d.alpha[0]), conj(&d.alpha[1]), conj(&d.alpha[2])],
        }
    }

    pub fn for_basis(basis: Basis) -> Self {
        match basis {
            Basis::Dirac => Self::dirac(),
            Basis::Weyl => Self::weyl(),
        }
    }

    /// `gamma^5 = i gamma^0 gamma^1 gamma^2 gamma^3`.
    pub fn gamma5(&self) -> Mat4<T> {
        let g = &self.gamma;
        let p = mat_mul(&mat_mul(&g[0], &g[1]), &mat_mul(&g[2], &g[3]));
        let i = Cplx::new(T::zero(), T::one());
        let mut out = p;
        for row in out.iter_mut() {
            for v in row.iter_mut() {
                *v = *v * i;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn anticommutator_ok(m: &DiracMatrices<f64>) {
        let metric = [1.0, -1.0, -1.0, -1.0];
        for mu in 0..4 {
            for nu in 0..4 {
                let ab = mat_mul(&m.gamma[mu], &m.gamma[nu]);
                let ba = mat_mul(&m.gamma[nu], &m.gamma[mu]);
                for i in 0..4 {
                    for j in 0..4 {
                        let want = if mu == nu && i == j { 2.0 * metric[mu] } else { 0.0 };
                        let got = ab[i][j] + ba[i][j];
                        assert!((got.re - want).abs() < 1e-15 && got.im.abs() < 1e-15);
                    }
                }
            }
        }
    }

    #[test]
    fn clifford_algebra_both_bases() {
        anticommutator_ok(&DiracMatrices::dirac());
        anticommutator_ok(&DiracMatrices::weyl());
    }

    #[test]
    fn alpha_is_gamma0_gamma_i() {
        for m in [DiracMatrices::<f64>::dirac(), DiracMatrices::weyl()] {
            for k in 0..3 {
                let p = mat_mul(&m.gamma[0], &m.gamma[k + 1]);
                for i in 0..4 {
                    for j in 0..4 {
                        assert!((p[i][j] - m.alpha[k][i][j]).norm() < 1e-15);
                    }
                }
            }
        }
    }

    #[test]
    fn dirac_alpha_block_form() {
        let m = DiracMatrices::<f64>::dirac();
        let s = pauli::<f64>(1);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(m.alpha[1][i][j].norm(), 0.0);
                assert_eq!(m.alpha[1][i + 2][j + 2].norm(), 0.0);
                assert_eq!(m.alpha[1][i][j + 2], s[i][j]);
                assert_eq!(m.alpha[1][i + 2][j], s[i][j]);
            }
        }
    }

    #[test]
    fn weyl_gamma5_is_block_diagonal() {
        let g5 = DiracMatrices::<f64>::weyl().gamma5();
        for i in 0..2 {
            for j in 2..4 {
                assert!(g5[i][j].norm() < 1e-15 && g5[j][i].norm() < 1e-15);
            }
        }
        let g0 = &DiracMatrices::<f64>::weyl().gamma[0];
        assert!((g0[0][2].re - 1.0).abs() < 1e-15 && (g0[2][0].re - 1.0).abs() < 1e-15);
    }
}
