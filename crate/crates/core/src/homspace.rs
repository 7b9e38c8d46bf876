//! Singular vectors `ψ^M_{c,t}` in `M` and the homomorphism from the standard
//! module sending its generator `v_{0,0}` to `ψ^M_{c,t}`.

use serde::{Deserialize, Serialize};

use crate::criteria::generation_check;
use crate::error::{Error, Result};
use crate::matrix::{GradedMatrix, Label};
use crate::modules::{act, act_s, act_x, act_xi, action_matrix, graded_basis, s_weight, Generator, ModVector, ModuleTag};
use crate::params::{factorial, CyclicParams, ExactParams};
use crate::scalars::{FromParam, HasRoots, ParamScalar, Rational, Scalar};

/// `ψ^M_i = (1/(n−1)!)·v_{i, n−1−i}`.
pub fn lift_psi(i: usize, n: usize) -> Result<ModVector<Rational>> {
    if i >= n {
        return Err(Error::Precondition(format!("ψ_i needs 0 ≤ i < n, got i = {i}")));
    }
    let coeff = factorial(n - 1).recip().expect("factorial is nonzero");
    Ok(ModVector::term(ModuleTag::NablaM, n, (i, n - 1 - i), coeff))
}

/// `ψ^M_{c,t} = Σ_i t_i ψ^M_i`.
pub fn psi_m<S: Scalar>(t: &[S], n: usize) -> Result<ModVector<S>> {
    if t.len() != n {
        return Err(Error::Structural(format!("t needs {n} entries, got {}", t.len())));
    }
    let inv = S::from_rational(&factorial(n - 1).recip().expect("factorial is nonzero"), n);
    let mut v = ModVector::zero(ModuleTag::NablaM, n);
    for (i, ti) in t.iter().enumerate() {
        v.add_term((i, n - 1 - i), ti.times(&inv));
    }
    Ok(v)
}

/// Whether `v ∈ M` is killed by `ξ^n` and fixed by `s`.
pub fn verify_singular<S, P>(v: &ModVector<S>, params: &CyclicParams<P>, tol: f64) -> bool
where
    S: HasRoots + FromParam<P>,
    P: ParamScalar,
{
    if v.tag() != ModuleTag::NablaM {
        return false;
    }
    let mut w = v.clone();
    for _ in 0..params.n() {
        w = act_xi(&w, params);
    }
    w.entries().values().all(|c| c.vanishes(tol)) && act_s(v).field_eq(v, tol)
}

/// Dimension of `{v ∈ M_d : ξ^n v = 0, s v = v}`.
pub fn singular_space_dim(params: &ExactParams, d: i64) -> usize {
    let n = params.n();
    let basis = graded_basis(ModuleTag::NablaM, d, n);
    let Some(first) = basis.first() else {
        return 0;
    };
    // s acts on M_d by the single scalar q^{−(d+n)}.
    if s_weight(ModuleTag::NablaM, *first).rem_euclid(n as i64) != 0 {
        return 0;
    }
    let m = action_matrix(ModuleTag::NablaM, n, d, d - n as i64, |v: &ModVector<Rational>| {
        let mut w = v.clone();
        for _ in 0..n {
            w = act_xi(&w, params);
        }
        w
    });
    basis.len() - m.rank()
}

/// Per-degree matrices of `Δ → M`, `v_{a,b} ↦ x^a ξ^b ψ^M_{c,t}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HomReport {
    /// `(k, matrix from Δ_k to M_k)` for `1 − n ≤ k ≤ window`.
    pub degrees: Vec<(i64, GradedMatrix<Rational>)>,
    pub window: i64,
    /// Every degree-`k` matrix up to `window` is invertible.
    pub iso_up_to_window: bool,
    pub first_singular_degree: Option<i64>,
    /// `ψ^M_{c,t}` generates all of `M`, so the map is an isomorphism.
    pub iso: bool,
}

impl HomReport {
    /// Image of `v_label` under the map, when its degree is within the window.
    pub fn image(&self, label: Label, n: usize) -> Option<ModVector<Rational>> {
        let k = label.0 as i64 - label.1 as i64;
        let (_, m) = self.degrees.iter().find(|(d, _)| *d == k)?;
        let col = m.col_labels().iter().position(|l| *l == label)?;
        let mut v = ModVector::zero(ModuleTag::NablaM, n);
        for (r, lab) in m.row_labels().iter().enumerate() {
            v.add_term(*lab, m.get(r, col).clone());
        }
        Some(v)
    }

    /// Linear extension of [`HomReport::image`].
    pub fn apply<S: Scalar>(&self, v: &ModVector<S>) -> Option<ModVector<S>> {
        let n = v.n();
        let mut out = ModVector::zero(ModuleTag::NablaM, n);
        for (l, c) in v.entries() {
            let img = self.image(*l, n)?;
            for (lab, r) in img.entries() {
                out.add_term(*lab, S::from_rational(r, n).times(c));
            }
        }
        Some(out)
    }
}

/// Builds the homomorphism up to degree `window` and checks its verdict
/// against [`generation_check`].
pub fn delta_to_nabla_hom(params: &ExactParams, t: &[Rational], window: i64) -> Result<HomReport> {
    let n = params.n();
    let lo = 1 - n as i64;
    let psi = psi_m(t, n)?;
    let mut degrees: Vec<(i64, GradedMatrix<Rational>)> = (lo..=window)
        .map(|k| {
            let rows = graded_basis(ModuleTag::NablaM, k, n);
            let cols = graded_basis(ModuleTag::Delta, k, n);
            (k, GradedMatrix::zeros(rows, cols, n))
        })
        .collect();
    // Column v_{a,b} of degree a − b is x^a ξ^b ψ.
    let mut w = psi;
    for b in 0..n {
        let mut v = w.clone();
        let mut a = 0usize;
        loop {
            let k = a as i64 - b as i64;
            if k > window {
                break;
            }
            let (_, m) = &mut degrees[(k - lo) as usize];
            let col = m
                .col_labels()
                .iter()
                .position(|l| *l == (a, b))
                .expect("v_{a,b} lies in Δ_{a−b}");
            let rows = m.row_labels().to_vec();
            for (r, lab) in rows.iter().enumerate() {
                m.set(r, col, v.get(*lab));
            }
            v = act_x(&v, params);
            a += 1;
        }
        w = act_xi(&w, params);
    }
    let first_singular = degrees.iter().find(|(_, m)| !m.is_nonsingular()).map(|(k, _)| *k);
    let generation = generation_check(params, t, window)?;
    let iso_up_to_window = first_singular.is_none();
    if iso_up_to_window != generation.fills_window {
        return Err(Error::Inconsistent(format!(
            "Δ → M up to degree {window}: hom matrices say {iso_up_to_window}, span says {}",
            generation.fills_window
        )));
    }
    Ok(HomReport {
        degrees,
        window,
        iso_up_to_window,
        first_singular_degree: first_singular,
        iso: generation.generates,
    })
}

/// Whether the map commutes with `x`, `s` and `ξ` on every basis vector of
/// degree below the window.
pub fn is_module_map<S>(hom: &HomReport, params: &ExactParams, tol: f64) -> bool
where
    S: HasRoots + FromParam<Rational>,
{
    let n = params.n();
    for k in 1 - n as i64..hom.window {
        for l in graded_basis(ModuleTag::Delta, k, n) {
            let v: ModVector<S> = ModVector::basis(ModuleTag::Delta, n, l);
            for g in Generator::ALL {
                let (Some(lhs), Some(fv)) = (hom.apply(&act(g, &v, params)), hom.apply(&v)) else {
                    return false;
                };
                if !lhs.field_eq(&act(g, &fv, params), tol) {
                    return false;
                }
            }
        }
    }
    true
}
