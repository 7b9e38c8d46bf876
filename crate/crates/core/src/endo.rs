//! Endomorphisms of the standard module via the maps
//! `ξ^n: Δ_{kn} → Δ_{(k−1)n}`.
//!
//! An endomorphism is determined by the image of the generator, which must
//! be killed by `ξ^n` and fixed by `s`. Such vectors live in degrees
//! divisible by `n`; degree 0 contributes `n` dimensions and degree `kn`,
//! `k ≥ 1`, contributes the kernel of `ξ^n`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{GradedMatrix, Label};
use crate::modules::{act_xi, action_matrix, graded_basis, s_weight, ModVector, ModuleTag};
use crate::params::{CyclicParams, ExactParams};
use crate::scalars::{ParamScalar, Rational};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EndReport {
    pub dim_end: usize,
    /// `(k, dim ker ξ^n on Δ_{kn})` for every `k ≥ 1` where the kernel is
    /// nonzero.
    pub critical_ks: Vec<(i64, usize)>,
    /// `det(ξ^n)_k` for `1 ≤ k ≤ max critical k`.
    pub det_values: BTreeMap<i64, Rational>,
}

/// Matrix of `ξ^n` from `Δ_{kn}` to `Δ_{(k−1)n}` in the bases
/// `{v_{kn+i,i}}` and `{v_{(k−1)n+i,i}}`, `i = 0, …, n−1`.
pub fn xi_n_matrix<P: ParamScalar>(params: &CyclicParams<P>, k: i64) -> Result<GradedMatrix<P>> {
    if k < 1 {
        return Err(Error::Precondition(format!("ξ^n matrices need k ≥ 1, got {k}")));
    }
    let n = params.n();
    let kn = (k * n as i64) as usize;
    let cols: Vec<Label> = (0..n).map(|i| (kn + i, i)).collect();
    let rows: Vec<Label> = (0..n).map(|i| (kn - n + i, i)).collect();
    let mut m = GradedMatrix::zeros(rows.clone(), cols.clone(), n);
    for (c, &l) in cols.iter().enumerate() {
        let mut v: ModVector<P> = ModVector::basis(ModuleTag::Delta, n, l);
        for _ in 0..n {
            v = act_xi(&v, params);
        }
        for (r, &lr) in rows.iter().enumerate() {
            m.set(r, c, v.get(lr));
        }
    }
    Ok(m)
}

/// `∏_{1 ≤ i,j ≤ n} (kn + (i − j) − (c_j − c_i))`.
pub fn det_formula<P: ParamScalar>(params: &CyclicParams<P>, k: i64) -> P {
    let n = params.n();
    let mut acc = P::one(n);
    for i in 1..=n as i64 {
        for j in 1..=n as i64 {
            let f = P::from_i64(k * n as i64 + i - j, n).minus(&params.delta(j, i));
            acc = acc.times(&f);
        }
    }
    acc
}

/// All `k ≥ 1` where [`det_formula`] vanishes: `k = ((j − i) + c_j − c_i)/n`
/// whenever that is a positive integer.
pub fn critical_ks<P: ParamScalar>(params: &CyclicParams<P>, tol: f64) -> Vec<i64> {
    let n = params.n();
    let mut ks = Vec::new();
    for i in 1..=n as i64 {
        for j in 1..=n as i64 {
            let v = P::from_i64(j - i, n).plus(&params.delta(j, i));
            if let Some(k) = v.integer_multiple_of(n as i64, tol) {
                if k > 0 {
                    ks.push(k);
                }
            }
        }
    }
    ks.sort_unstable();
    ks.dedup();
    ks
}

/// `dim End(Δ) = n + Σ_k dim ker (ξ^n)_k` over the critical `k`.
pub fn end_dim(params: &ExactParams) -> Result<EndReport> {
    let n = params.n();
    let ks = critical_ks(params, 0.0);
    let mut critical = Vec::with_capacity(ks.len());
    let mut dim = n;
    for &k in &ks {
        let m = xi_n_matrix(params, k)?;
        let nullity = m.nullity();
        if nullity == 0 {
            return Err(Error::Inconsistent(format!(
                "det formula vanishes at k = {k} but ξ^n is injective there"
            )));
        }
        log::debug!("ξ^n on Δ_{{{}}} has kernel of dimension {nullity}", k * n as i64);
        dim += nullity;
        critical.push((k, nullity));
    }
    let top = ks.last().copied().unwrap_or(0);
    let det_values = (1..=top).map(|k| (k, det_formula(params, k))).collect();
    Ok(EndReport { dim_end: dim, critical_ks: critical, det_values })
}

/// Dimension of `{v ∈ Δ_d : ξ^n v = 0, s v = v}`, computed on the `s`-fixed
/// basis vectors of `Δ_d` without using the scalar form of the `s`-action.
pub fn fixed_kernel_dim(params: &ExactParams, d: i64) -> usize {
    let n = params.n();
    let fixed: Vec<Label> = graded_basis(ModuleTag::Delta, d, n)
        .into_iter()
        .filter(|l| s_weight(ModuleTag::Delta, *l).rem_euclid(n as i64) == 0)
        .collect();
    if fixed.is_empty() {
        return 0;
    }
    let full = action_matrix(ModuleTag::Delta, n, d, d - n as i64, |v: &ModVector<Rational>| {
        let mut w = v.clone();
        for _ in 0..n {
            w = act_xi(&w, params);
        }
        w
    });
    let cols: Vec<usize> = full
        .col_labels()
        .iter()
        .enumerate()
        .filter(|(_, l)| fixed.contains(l))
        .map(|(c, _)| c)
        .collect();
    let entries: Vec<Vec<Rational>> = full
        .entries()
        .iter()
        .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
        .collect();
    let restricted = GradedMatrix::from_entries(full.row_labels().to_vec(), fixed, entries)
        .expect("restricted columns keep their labels");
    restricted.nullity()
}

/// `Σ_d dim{v ∈ Δ_d : ξ^n v = 0, s v = v}` over `1 − n ≤ d ≤ kmax·n`.
pub fn end_dim_by_scan(params: &ExactParams, kmax: i64) -> usize {
    let n = params.n() as i64;
    (1 - n..=kmax * n).map(|d| fixed_kernel_dim(params, d)).sum()
}

/// Every basis vector of `Δ_{kn}` has trivial `s`-weight.
pub fn delta_kn_is_s_fixed(n: usize, k: i64) -> bool {
    graded_basis(ModuleTag::Delta, k * n as i64, n)
        .iter()
        .all(|l| s_weight(ModuleTag::Delta, *l).rem_euclid(n as i64) == 0)
}
