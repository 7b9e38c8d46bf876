//! The good parameter set, semisimplicity, and the `D_k`, `F_k` matrices
//! deciding whether `ψ^M_{c,t}` generates `M`.
//!
//! Throughout, `c` is good when `c_i − c_j = j − i` holds whenever
//! `c_i − c_j ≡ j − i (mod n)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homspace::psi_m;
use crate::matrix::GradedMatrix;
use crate::modules::{act_x, act_xi, action_matrix, graded_basis, ModVector, ModuleTag};
use crate::params::{CyclicParams, ExactParams};
use crate::scalars::{ParamScalar, Rational, Scalar};

/// Verdicts on a parameter vector.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub in_f: bool,
    pub semisimple: bool,
    /// `(i, j, m)` with `c_i − c_j − (j − i) = n·m`, `m ≠ 0`.
    pub failing_pairs: Vec<(usize, usize, i64)>,
    /// Every `k ≥ 0` with `D_k` singular.
    pub singular_degrees: Vec<i64>,
}

/// `m` with `c_i − c_j − (j − i) = n·m`, if the congruence holds.
fn congruence<P: ParamScalar>(params: &CyclicParams<P>, i: usize, j: usize, tol: f64) -> Option<i64> {
    let n = params.n();
    let v = params
        .delta(i as i64, j as i64)
        .minus(&P::from_i64(j as i64 - i as i64, n));
    v.integer_multiple_of(n as i64, tol)
}

/// Whether `c` is good, with the failing congruences and the degrees `k`
/// where `D_k` is singular. `tol` is only used for complex parameters.
pub fn in_f<P: ParamScalar>(params: &CyclicParams<P>, tol: f64) -> CriterionReport {
    let n = params.n();
    let mut failing = Vec::new();
    let mut congruent_off_diagonal = false;
    for i in 1..=n {
        for j in 1..=n {
            if let Some(m) = congruence(params, i, j, tol) {
                if i != j {
                    congruent_off_diagonal = true;
                }
                if m != 0 {
                    failing.push((i, j, m));
                }
            }
        }
    }
    // A pair with m < 0 makes the diagonal entry of D_k vanish for exactly
    // one k, namely k + 1 = i + n(−1 − m).
    let mut singular: Vec<i64> = failing
        .iter()
        .filter(|(_, _, m)| *m < 0)
        .map(|&(i, _, m)| i as i64 - 1 + n as i64 * (-1 - m))
        .collect();
    singular.sort_unstable();
    singular.dedup();
    CriterionReport {
        in_f: failing.is_empty(),
        semisimple: !congruent_off_diagonal,
        failing_pairs: failing,
        singular_degrees: singular,
    }
}

/// No congruence `c_i − c_j ≡ j − i (mod n)` holds for `i ≠ j`.
pub fn is_semisimple<P: ParamScalar>(params: &CyclicParams<P>, tol: f64) -> bool {
    in_f(params, tol).semisimple
}

/// A good parameter vector congruent to `c` modulo `nZ^n`.
///
/// With `d_i = c_i + i`, the relation `d_i − d_j ∈ nZ` partitions
/// `{1, …, n}`; every index is moved to `c'_j = d_r − j` for the
/// representative `r` of its class (`n` for the class of `n`, otherwise the
/// smallest member).
pub fn good_translate(params: &ExactParams) -> Result<ExactParams> {
    let n = params.n();
    let d = |i: usize| params.c(i as i64) + &Rational::from(i);
    let same = |i: usize, j: usize| (d(i) - d(j)).integer_quotient(n as i64).is_some();
    let mut c = Vec::with_capacity(n);
    for j in 1..=n {
        let rep = if same(j, n) { n } else { (1..=j).find(|&i| same(i, j)).unwrap_or(j) };
        c.push(d(rep) - Rational::from(j));
    }
    CyclicParams::new(n, c)
}

/// `D_k` (`k ≥ 0`): the matrix of `x: M_k → M_{k+1}`, lower bidiagonal with
/// diagonal `n + k + 1 − m + Δ_{k+1,m}` and ones below it.
pub fn build_dk<P: ParamScalar>(params: &CyclicParams<P>, k: i64) -> Result<GradedMatrix<P>> {
    if k < 0 {
        return Err(Error::Precondition(format!("D_k needs k ≥ 0, got {k}")));
    }
    let n = params.n();
    let cols = graded_basis(ModuleTag::NablaM, k, n);
    let rows = graded_basis(ModuleTag::NablaM, k + 1, n);
    let mut m = GradedMatrix::zeros(rows, cols, n);
    for idx in 0..n {
        let mm = idx as i64 + 1;
        let diag = P::from_i64(n as i64 + k + 1 - mm, n).plus(&params.delta(k + 1, mm));
        m.set(idx, idx, diag);
        if idx + 1 < n {
            m.set(idx + 1, idx, P::one(n));
        }
    }
    Ok(m)
}

fn check_fk_args<P: ParamScalar>(params: &CyclicParams<P>, t: &[P], k: i64) -> Result<()> {
    let n = params.n();
    if t.len() != n {
        return Err(Error::Structural(format!("t needs {n} entries, got {}", t.len())));
    }
    if !(1 - n as i64..0).contains(&k) {
        return Err(Error::Precondition(format!("F_k needs 1 − n ≤ k < 0, got {k}")));
    }
    if t[n - 1].is_exact_zero() {
        return Err(Error::Precondition("t_{n−1} = 0: ψ does not generate".into()));
    }
    Ok(())
}

/// `F_k` (`1 − n ≤ k < 0`): multiplication by `x` from `M_k` to `M_{k+1}`
/// followed by the projection killing `ξ^{−(k+1)}·ψ^M_{c,t}`. Rows are
/// labelled by the basis vectors of `M_{k+1}` other than the first.
pub fn build_fk<P: ParamScalar>(params: &CyclicParams<P>, t: &[P], k: i64) -> Result<GradedMatrix<P>> {
    check_fk_args(params, t, k)?;
    let n = params.n();
    let size = (n as i64 + k) as usize;
    let cols = graded_basis(ModuleTag::NablaM, k, n);
    let rows = graded_basis(ModuleTag::NablaM, k + 1, n)[1..].to_vec();
    let mut m = GradedMatrix::zeros(rows, cols, n);
    let lead = P::from_i64(n as i64 + k, n).plus(&params.delta(k + 1, 1));
    let t_top = &t[n - 1];
    for r in 1..=size {
        let ratio = t[n - 1 - r].divide(t_top).expect("t_{n−1} ≠ 0");
        let mut v = lead.times(&ratio).negate();
        if r == 1 {
            v = v.plus(&P::one(n));
        }
        m.set(r - 1, 0, v);
    }
    for mm in 2..=size {
        let col = mm - 1;
        m.set(col, col, P::one(n));
        let mi = mm as i64;
        let above = P::from_i64(n as i64 + k + 1 - mi, n).plus(&params.delta(k + 1, mi));
        m.set(col - 1, col, above);
    }
    Ok(m)
}

/// `D_k` computed from the action of `x` on `M`.
pub fn dk_by_action<P: ParamScalar>(params: &CyclicParams<P>, k: i64) -> GradedMatrix<P> {
    action_matrix(ModuleTag::NablaM, params.n(), k, k + 1, |v| act_x(v, params))
}

/// `F_k` computed from the actions of `x` and `ξ` on `M`: the image of each
/// basis vector under `x` is reduced modulo the line through
/// `ξ^{−(k+1)}·ψ^M_{c,t}` by clearing its first coordinate.
pub fn fk_by_action<P: ParamScalar>(params: &CyclicParams<P>, t: &[P], k: i64) -> Result<GradedMatrix<P>> {
    check_fk_args(params, t, k)?;
    let n = params.n();
    let mut w = psi_m(t, n)?;
    for _ in 0..-(k + 1) {
        w = act_xi(&w, params);
    }
    let target = graded_basis(ModuleTag::NablaM, k + 1, n);
    let w_first = w.get(target[0]);
    let full = action_matrix(ModuleTag::NablaM, n, k, k + 1, |v: &ModVector<P>| {
        let u = act_x(v, params);
        let alpha = u.get(target[0]).divide(&w_first).expect("t_{n−1} ≠ 0");
        u.minus(&w.scale(&alpha))
    });
    let rows = target[1..].to_vec();
    let entries = full.entries()[1..].to_vec();
    debug_assert!(full.entries()[0].iter().all(Scalar::is_exact_zero));
    GradedMatrix::from_entries(rows, full.col_labels().to_vec(), entries)
}

/// Finite criterion for all `D_k`, cross-checked against determinants.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DkReport {
    /// Every `D_k`, `k ≥ 0`, is nonsingular.
    pub all_nonsingular: bool,
    /// All `k ≥ 0` with `D_k` singular, from the congruence criterion.
    pub singular_degrees: Vec<i64>,
    /// `k ∈ [0, scan_bound]` with `det D_k = 0`.
    pub scan_singular: Vec<i64>,
    pub scan_bound: i64,
    pub failing_pairs: Vec<(usize, usize, i64)>,
}

/// Decides nonsingularity of every `D_k` from the congruence criterion and
/// confirms it on `0 ≤ k ≤ scan_bound` by determinants.
pub fn dk_all_nonsingular(params: &ExactParams, scan_bound: i64) -> Result<DkReport> {
    let report = in_f(params, 0.0);
    let mut scan = Vec::new();
    for k in 0..=scan_bound {
        if build_dk(params, k)?.det(params.n())?.is_zero() {
            scan.push(k);
        }
    }
    let predicted: Vec<i64> = report.singular_degrees.iter().copied().filter(|&k| k <= scan_bound).collect();
    log::debug!("D_k determinant scan on [0, {scan_bound}]: singular at {scan:?}");
    if predicted != scan {
        return Err(Error::Inconsistent(format!(
            "singular D_k: criterion predicts {predicted:?} on [0, {scan_bound}], determinants give {scan:?}"
        )));
    }
    Ok(DkReport {
        all_nonsingular: report.singular_degrees.is_empty(),
        singular_degrees: report.singular_degrees,
        scan_singular: scan,
        scan_bound,
        failing_pairs: report.failing_pairs,
    })
}

/// Outcome of the generation test for `ψ^M_{c,t}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenerationReport {
    /// `ψ^M_{c,t}` generates all of `M`.
    pub generates: bool,
    /// The brute-force span fills `M_d` for every `d ≤ window`.
    pub fills_window: bool,
    pub window: i64,
    /// `k ∈ [1 − n, −1]` with `F_k` singular.
    pub singular_f: Vec<i64>,
    /// All `k ≥ 0` with `D_k` singular.
    pub singular_d: Vec<i64>,
    /// Lowest degree where the span is smaller than `M_d`.
    pub first_deficit_degree: Option<i64>,
}

/// Ranks of `Span{x^a ξ^b ψ : a − b = d}` against `dim M_d` for
/// `1 − n ≤ d ≤ window`.
pub fn span_ranks(params: &ExactParams, t: &[Rational], window: i64) -> Result<Vec<(i64, usize, usize)>> {
    let n = params.n();
    let lo = 1 - n as i64;
    let mut per_degree: Vec<Vec<ModVector<Rational>>> = vec![Vec::new(); (window - lo + 1).max(0) as usize];
    let mut w = psi_m(t, n)?;
    for b in 0..n as i64 {
        let mut v = w.clone();
        let mut d = -b;
        while d <= window {
            if d >= lo && !v.is_zero() {
                per_degree[(d - lo) as usize].push(v.clone());
            }
            v = act_x(&v, params);
            d += 1;
        }
        w = act_xi(&w, params);
    }
    let mut out = Vec::with_capacity(per_degree.len());
    for (idx, vecs) in per_degree.iter().enumerate() {
        let d = lo + idx as i64;
        let basis = graded_basis(ModuleTag::NablaM, d, n);
        let rank = if vecs.is_empty() {
            0
        } else {
            let entries: Vec<Vec<Rational>> = vecs.iter().map(|v| v.coords(&basis)).collect();
            let cols = (0..basis.len()).map(|k| (k, 0)).collect();
            let rows = (0..vecs.len()).map(|k| (k, 0)).collect();
            GradedMatrix::from_entries(rows, cols, entries)?.rank()
        };
        out.push((d, rank, basis.len()));
    }
    Ok(out)
}

/// Whether `ψ^M_{c,t}` generates `M`, decided by the matrices `F_k`, `D_k`
/// and confirmed by a brute-force span computation up to degree `window`.
pub fn generation_check(params: &ExactParams, t: &[Rational], window: i64) -> Result<GenerationReport> {
    let n = params.n();
    if t.len() != n {
        return Err(Error::Structural(format!("t needs {n} entries, got {}", t.len())));
    }
    let ranks = span_ranks(params, t, window)?;
    let first_deficit = ranks.iter().find(|(_, r, dim)| r < dim).map(|(d, _, _)| *d);
    log::debug!("span ranks up to degree {window}: first deficit at {first_deficit:?}");
    let fills_window = first_deficit.is_none();

    let dk = dk_all_nonsingular(params, window.max(0))?;
    let top_nonzero = !t[n - 1].is_zero();
    let mut singular_f = Vec::new();
    if top_nonzero {
        for k in 1 - n as i64..0 {
            if !build_fk(params, t, k)?.is_nonsingular() {
                singular_f.push(k);
            }
        }
    }
    // Degrees up to `window` only see D_k with k < window.
    let window_verdict =
        top_nonzero && singular_f.is_empty() && dk.singular_degrees.iter().all(|&k| k >= window);
    if window_verdict != fills_window {
        return Err(Error::Inconsistent(format!(
            "generation up to degree {window}: matrices say {window_verdict}, span says {fills_window}"
        )));
    }
    Ok(GenerationReport {
        generates: top_nonzero && singular_f.is_empty() && dk.all_nonsingular,
        fills_window,
        window,
        singular_f,
        singular_d: dk.singular_degrees,
        first_deficit_degree: first_deficit,
    })
}

/// `t = (0, …, 0, 1)`.
pub fn default_t<P: ParamScalar>(n: usize) -> Vec<P> {
    let mut t = vec![P::zero(n); n];
    t[n - 1] = P::one(n);
    t
}
