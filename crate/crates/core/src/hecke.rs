//! The cyclotomic Hecke algebra `C[T]/⟨∏_j (T − q^{−j} q_j^{−1})⟩` and its
//! action on the standard module through `η = s·exp((2πi/n)·eu)`, where
//! `q = exp(2πi/n)` and `q_j = exp((2πi/n)·c_j)`.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::criteria::is_semisimple;
use crate::error::{Error, Result};
use crate::expm::{expm, CMatrix};
use crate::matrix::GradedMatrix;
use crate::modules::{eu_matrix, generator_matrix, Generator, ModuleTag};
use crate::params::CyclicParams;
use crate::scalars::{ComplexF, FromParam, ParamScalar, Scalar};

/// Generator convention recorded alongside every Hecke computation.
pub const CONVENTION: &str = "T acts as s·exp(2πi/n·eu); relation ∏_{j=1}^n (T − q^{-j} q_j^{-1}) = 0 with \
                              q = exp(2πi/n), q_j = exp(2πi c_j/n); the inverse generator is not used";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HeckePoly {
    /// `q^{−j} q_j^{−1}` for `j = 1, …, n`.
    pub roots: Vec<ComplexF>,
    /// Monic coefficients, constant term first.
    pub coeffs: Vec<ComplexF>,
    pub convention: String,
}

impl HeckePoly {
    pub fn eval(&self, z: ComplexF) -> ComplexF {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z.0 + c.0;
        }
        ComplexF(acc)
    }
}

/// `q^{−j} q_j^{−1} = exp(−2πi (j + c_j)/n)`.
pub fn hecke_root<P: ParamScalar>(params: &CyclicParams<P>, j: i64) -> ComplexF {
    let n = params.n() as f64;
    let cj = params.c(j).to_complex().0;
    let arg = (Complex64::new(j as f64, 0.0) + cj) * Complex64::new(0.0, -2.0 * PI / n);
    ComplexF(arg.exp())
}

pub fn hecke_poly<P: ParamScalar>(params: &CyclicParams<P>) -> HeckePoly {
    let n = params.n();
    let roots: Vec<ComplexF> = (1..=n as i64).map(|j| hecke_root(params, j)).collect();
    let mut coeffs = vec![Complex64::new(1.0, 0.0)];
    for r in &roots {
        let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
        for (k, a) in coeffs.iter().enumerate() {
            next[k + 1] += a;
            next[k] -= a * r.0;
        }
        coeffs = next;
    }
    HeckePoly { roots, coeffs: coeffs.into_iter().map(ComplexF).collect(), convention: CONVENTION.to_string() }
}

fn to_cmatrix(m: &GradedMatrix<ComplexF>) -> CMatrix {
    let rows: Vec<Vec<Complex64>> = m.entries().iter().map(|r| r.iter().map(|z| z.0).collect()).collect();
    CMatrix::from_rows(&rows).expect("square matrix")
}

/// Frobenius norm, an upper bound for the operator norm.
pub fn frobenius(m: &GradedMatrix<ComplexF>) -> f64 {
    m.entries().iter().flatten().map(|z| z.0.norm_sqr()).sum::<f64>().sqrt()
}

/// `η_k = q^{−k}·exp((2πi/n)·Eu_k)` on the degree `k` piece, in the basis of
/// [`crate::modules::graded_basis`].
pub fn eta_matrix<P: ParamScalar>(params: &CyclicParams<P>, k: i64) -> Result<GradedMatrix<ComplexF>> {
    let n = params.n();
    if k < 1 - n as i64 {
        return Err(Error::Precondition(format!("no degree {k} piece below 1 − n")));
    }
    let eu = eu_matrix(params, k).map(|v| v.to_complex());
    let factor = Complex64::new(0.0, 2.0 * PI / n as f64);
    let e = expm(&to_cmatrix(&eu).scale(factor))?;
    let q_k = ComplexF::turn(-(k as f64) / n as f64).0;
    let eta = e.scale(q_k);
    if !eta.is_finite() {
        return Err(Error::Numeric(format!("η_{k} has non-finite entries")));
    }
    GradedMatrix::from_entries(eu.row_labels().to_vec(), eu.col_labels().to_vec(), eta.rows())
}

/// `η_k` for `1 − n ≤ k ≤ max_degree`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EtaMatrices {
    pub n: usize,
    pub by_degree: BTreeMap<i64, GradedMatrix<ComplexF>>,
}

impl EtaMatrices {
    pub fn compute<P: ParamScalar>(params: &CyclicParams<P>, max_degree: i64) -> Result<Self> {
        let n = params.n();
        let by_degree = (1 - n as i64..=max_degree)
            .map(|k| eta_matrix(params, k).map(|m| (k, m)))
            .collect::<Result<_>>()?;
        Ok(EtaMatrices { n, by_degree })
    }

    /// Largest Frobenius norm of `∏_j (η_k − root_j)` over the stored degrees.
    pub fn annihilation_residual(&self, poly: &HeckePoly) -> f64 {
        let mut worst: f64 = 0.0;
        for eta in self.by_degree.values() {
            let a = to_cmatrix(eta);
            let id = CMatrix::identity(a.dim());
            let mut prod = id.clone();
            for r in &poly.roots {
                prod = prod.matmul(&a.sub(&id.scale(r.0)));
            }
            worst = worst.max(prod.frobenius());
        }
        worst
    }

    /// Largest Frobenius norm of `η g − g η` over the generators `g` and the
    /// stored degrees where both sides are available.
    pub fn commutation_residual<P: ParamScalar>(&self, params: &CyclicParams<P>) -> f64
    where
        ComplexF: FromParam<P>,
    {
        let n = self.n;
        let mut worst: f64 = 0.0;
        for (&k, eta_k) in &self.by_degree {
            for g in Generator::ALL {
                let target = k + g.degree();
                let Some(eta_t) = self.by_degree.get(&target) else {
                    continue;
                };
                let gm: GradedMatrix<ComplexF> = generator_matrix(ModuleTag::Delta, g, k, params);
                if gm.nrows() == 0 || gm.ncols() == 0 {
                    continue;
                }
                let lhs = eta_t.compose(&gm, n).expect("matching bases");
                let rhs = gm.compose(eta_k, n).expect("matching bases");
                let diff = GradedMatrix::from_entries(
                    lhs.row_labels().to_vec(),
                    lhs.col_labels().to_vec(),
                    lhs.entries()
                        .iter()
                        .zip(rhs.entries())
                        .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.minus(y)).collect())
                        .collect(),
                )
                .expect("same shape");
                worst = worst.max(frobenius(&diff));
            }
        }
        worst
    }
}

/// Largest residual of the Hecke relation on `η_k`, `1 − n ≤ k ≤ max_degree`.
pub fn check_annihilation<P: ParamScalar>(params: &CyclicParams<P>, max_degree: i64) -> Result<f64> {
    let etas = EtaMatrices::compute(params, max_degree)?;
    Ok(etas.annihilation_residual(&hecke_poly(params)))
}

/// Largest residual of `η` commuting with `x`, `ξ` and `s` up to
/// `max_degree`.
pub fn check_commutation<P: ParamScalar>(params: &CyclicParams<P>, max_degree: i64) -> Result<f64>
where
    ComplexF: FromParam<P>,
{
    let etas = EtaMatrices::compute(params, max_degree)?;
    Ok(etas.commutation_residual(params))
}

/// The eigenvalue of `η` on the standard module of the character `E_j`.
///
/// In the semisimple case the standard module splits, and the summand of
/// `E_j` has its lowest weight vector in degree `j − n`: the `eu`-eigenvector
/// with eigenvalue `−c_j`, found by back substitution in the bidiagonal
/// `Eu_{j−n}`.
pub fn eigenvalue_on_standard<P: ParamScalar>(params: &CyclicParams<P>, j: usize, tol: f64) -> Result<ComplexF> {
    let n = params.n();
    if j == 0 || j > n {
        return Err(Error::Precondition(format!("character index must be in 1..={n}, got {j}")));
    }
    if !is_semisimple(params, tol) {
        return Err(Error::Precondition("eigenvalues on standard modules need semisimple parameters".into()));
    }
    let d = j as i64 - n as i64;
    let eu = eu_matrix(params, d).map(|v| v.to_complex());
    let dim = eu.nrows();
    debug_assert_eq!(dim, j);
    let lambda = params.c(j as i64).to_complex().0 * -1.0;
    let mut v = vec![Complex64::new(0.0, 0.0); dim];
    v[dim - 1] = Complex64::new(1.0, 0.0);
    for m in (0..dim - 1).rev() {
        let pivot = eu.get(m, m).0 - lambda;
        v[m] = -eu.get(m, m + 1).0 * v[m + 1] / pivot;
    }
    let eta = eta_matrix(params, d)?;
    let ev: Vec<Complex64> = (0..dim).map(|r| (0..dim).map(|c| eta.get(r, c).0 * v[c]).sum()).collect();
    let mu = ev[dim - 1];
    let scale = v.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let residual = ev.iter().zip(&v).map(|(a, b)| (a - mu * b).norm()).fold(0.0, f64::max);
    if residual > 1e-8 * scale {
        return Err(Error::Inconsistent(format!(
            "η does not act by a scalar on the lowest weight vector of E_{j} (residual {residual:e})"
        )));
    }
    Ok(ComplexF(mu))
}
