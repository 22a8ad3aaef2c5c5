//! Small dense matrices, symmetric eigenvalues, and the linear solvers used
//! by the implicit time stepper.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{Error, Result};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

/// Dense n×n matrix, row-major.  Coefficient matrices here are tiny
/// (spatial dimension by spatial dimension), so no blocking or pivoted
/// factorizations are needed.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    pub n: usize,
    pub data: Vec<f64>,
}

impl Mat {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![0.0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn diag(d: &[f64]) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, &v) in d.iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    pub fn max_asymmetry(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                worst = worst.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        worst
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }

    /// Quadratic form (A ξ | ξ).
    pub fn quad_form(&self, xi: &[f64]) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                acc += self.get(i, j) * xi[i] * xi[j];
            }
        }
        acc
    }

    /// Congruence scaling D A D for a diagonal D.
    pub fn scale_congruent(&self, d: &[f64]) -> Mat {
        let mut out = Mat::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(i, j, d[i] * self.get(i, j) * d[j]);
            }
        }
        out
    }
}

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations,
/// returned in ascending order.
pub fn sym_eigenvalues(a: &Mat) -> Vec<f64> {
    let n = a.n;
    if n == 1 {
        return vec![a.get(0, 0)];
    }
    let mut m = a.clone();
    let tol = 1e-15 * m.max_abs().max(1.0);
    for _sweep in 0..64 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(m.get(p, q).abs());
            }
        }
        if off <= tol {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m.get(p, q);
                if apq.abs() <= tol * 1e-2 {
                    continue;
                }
                let app = m.get(p, p);
                let aqq = m.get(q, q);
                let theta = 0.5 * (aqq - app) / apq;
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = m.get(k, p);
                    let akq = m.get(k, q);
                    m.set(k, p, c * akp - s * akq);
                    m.set(k, q, s * akp + c * akq);
                }
                for k in 0..n {
                    let apk = m.get(p, k);
                    let aqk = m.get(q, k);
                    m.set(p, k, c * apk - s * aqk);
                    m.set(q, k, s * apk + c * aqk);
                }
            }
        }
    }
    let mut eigs: Vec<f64> = (0..n).map(|i| m.get(i, i)).collect();
    eigs.sort_by(|x, y| x.partial_cmp(y).unwrap());
    eigs
}

/// Thomas algorithm for a tridiagonal system.
///
/// `lower[i]` couples row `i` to `i-1` (so `lower[0]` is unused) and
/// `upper[i]` couples row `i` to `i+1` (`upper[n-1]` unused).
pub fn solve_tridiagonal(
    lower: &[f64],
    diag: &[f64],
    upper: &[f64],
    rhs: &[f64],
) -> Result<Vec<f64>> {
    let n = diag.len();
    let mut c = vec![0.0; n];
    let mut d = vec![0.0; n];
    let mut piv = diag[0];
    if piv == 0.0 {
        return Err(Error::SolveFailed("zero pivot in tridiagonal solve".into()));
    }
    c[0] = upper[0] / piv;
    d[0] = rhs[0] / piv;
    for i in 1..n {
        piv = diag[i] - lower[i] * c[i - 1];
        if piv == 0.0 {
            return Err(Error::SolveFailed(format!("zero pivot at row {i}")));
        }
        if i + 1 < n {
            c[i] = upper[i] / piv;
        }
        d[i] = (rhs[i] - lower[i] * d[i - 1]) / piv;
    }
    let mut x = d;
    for i in (0..n - 1).rev() {
        let next = x[i + 1];
        x[i] -= c[i] * next;
    }
    Ok(x)
}

/// Matrix-free BiCGStab with diagonal (Jacobi) preconditioning.
///
/// `apply` must write `A x` into its second argument.  Deterministic: the
/// shadow vector is the initial residual and all reductions are in index
/// order.
pub fn bicgstab<F>(
    apply: F,
    diag: &[f64],
    b: &[f64],
    x0: &[f64],
    rel_tol: f64,
    max_iters: usize,
) -> Result<(Vec<f64>, usize)>
where
    F: Fn(&[f64], &mut [f64]),
{
    let n = b.len();
    let inv_diag: Vec<f64> = diag
        .iter()
        .map(|&d| if d.abs() > 1e-300 { 1.0 / d } else { 1.0 })
        .collect();
    let b_norm = norm2(b);
    if b_norm == 0.0 {
        return Ok((vec![0.0; n], 0));
    }
    let tol = rel_tol * b_norm;

    let mut x = x0.to_vec();
    let mut ax = vec![0.0; n];
    apply(&x, &mut ax);
    let mut r: Vec<f64> = b.iter().zip(&ax).map(|(bi, axi)| bi - axi).collect();
    if norm2(&r) <= tol {
        return Ok((x, 0));
    }
    let r0 = r.clone();
    let mut rho = 1.0;
    let mut alpha = 1.0;
    let mut omega = 1.0;
    let mut v = vec![0.0; n];
    let mut p = vec![0.0; n];
    let mut phat = vec![0.0; n];
    let mut shat = vec![0.0; n];
    let mut t = vec![0.0; n];

    for it in 1..=max_iters {
        let rho_new = dot(&r0, &r);
        if rho_new.abs() < 1e-300 {
            return Err(Error::SolveFailed(format!(
                "BiCGStab breakdown (rho) at iteration {it}"
            )));
        }
        let beta = (rho_new / rho) * (alpha / omega);
        rho = rho_new;
        for i in 0..n {
            p[i] = r[i] + beta * (p[i] - omega * v[i]);
        }
        for i in 0..n {
            phat[i] = p[i] * inv_diag[i];
        }
        apply(&phat, &mut v);
        let denom = dot(&r0, &v);
        if denom.abs() < 1e-300 {
            return Err(Error::SolveFailed(format!(
                "BiCGStab breakdown (r0·v) at iteration {it}"
            )));
        }
        alpha = rho / denom;
        let s: Vec<f64> = r.iter().zip(&v).map(|(ri, vi)| ri - alpha * vi).collect();
        if norm2(&s) <= tol {
            for i in 0..n {
                x[i] += alpha * phat[i];
            }
            return Ok((x, it));
        }
        for i in 0..n {
            shat[i] = s[i] * inv_diag[i];
        }
        apply(&shat, &mut t);
        let tt = dot(&t, &t);
        if tt.abs() < 1e-300 {
            return Err(Error::SolveFailed(format!(
                "BiCGStab breakdown (t·t) at iteration {it}"
            )));
        }
        omega = dot(&t, &s) / tt;
        for i in 0..n {
            x[i] += alpha * phat[i] + omega * shat[i];
            r[i] = s[i] - omega * t[i];
        }
        if norm2(&r) <= tol {
            return Ok((x, it));
        }
        if omega.abs() < 1e-300 {
            return Err(Error::SolveFailed(format!(
                "BiCGStab breakdown (omega) at iteration {it}"
            )));
        }
    }
    Err(Error::SolveFailed(format!(
        "BiCGStab did not converge in {max_iters} iterations \
         (residual {:.3e}, target {:.3e})",
        norm2(&r),
        tol
    )))
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_eigenvalues_2x2() {
        let mut a = Mat::zeros(2);
        a.set(0, 0, 2.0);
        a.set(1, 1, 3.0);
        a.set(0, 1, 1.0);
        a.set(1, 0, 1.0);
        let e = sym_eigenvalues(&a);
        // Exact: (5 ± √5)/2.
        let lo = (5.0 - 5.0f64.sqrt()) / 2.0;
        let hi = (5.0 + 5.0f64.sqrt()) / 2.0;
        assert!((e[0] - lo).abs() < 1e-12);
        assert!((e[1] - hi).abs() < 1e-12);
    }

    #[test]
    fn jacobi_eigenvalues_3x3_diagonal() {
        let a = Mat::diag(&[3.0, -1.0, 0.5]);
        let e = sym_eigenvalues(&a);
        assert_eq!(e, vec![-1.0, 0.5, 3.0]);
    }

    #[test]
    fn tridiagonal_matches_dense() {
        let n = 12;
        let lower = vec![-1.0; n];
        let diag = vec![3.0; n];
        let upper = vec![-0.5; n];
        let x_true: Vec<f64> = (0..n).map(|i| (i as f64 * 0.7).sin()).collect();
        let mut rhs = vec![0.0; n];
        for i in 0..n {
            rhs[i] = diag[i] * x_true[i];
            if i > 0 {
                rhs[i] += lower[i] * x_true[i - 1];
            }
            if i + 1 < n {
                rhs[i] += upper[i] * x_true[i + 1];
            }
        }
        let x = solve_tridiagonal(&lower, &diag, &upper, &rhs).unwrap();
        for i in 0..n {
            assert!((x[i] - x_true[i]).abs() < 1e-12);
        }
    }

    #[test]
    fn bicgstab_laplacian() {
        // 1D Dirichlet Laplacian, shifted: (I + L) x = b.
        let n = 64;
        let apply = |x: &[f64], out: &mut [f64]| {
            for i in 0..n {
                let left = if i > 0 { x[i - 1] } else { 0.0 };
                let right = if i + 1 < n { x[i + 1] } else { 0.0 };
                out[i] = x[i] + 2.0 * x[i] - left - right;
            }
        };
        let diag = vec![3.0; n];
        let x_true: Vec<f64> = (0..n).map(|i| ((i + 1) as f64 * 0.1).cos()).collect();
        let mut b = vec![0.0; n];
        apply(&x_true, &mut b);
        let (x, iters) = bicgstab(apply, &diag, &b, &vec![0.0; n], 1e-12, 1000).unwrap();
        assert!(iters > 0);
        for i in 0..n {
            assert!((x[i] - x_true[i]).abs() < 1e-9);
        }
    }
}
