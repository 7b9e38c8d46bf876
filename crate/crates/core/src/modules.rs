//! The two graded modules with explicit bases `v_{i,j}` (`i ≥ 0`,
//! `0 ≤ j ≤ n−1`):
//!
//! * `Delta`: the standard module induced from the coinvariant algebra,
//!   `v_{i,j} = x^i ⊗ ξ̄^j` of degree `i − j`;
//! * `NablaM`: the module `M`, `v_{i,j} = (ξ^i)^∨ ⊗ x̄^j ⊗ 1` of degree
//!   `i + j − (n−1)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{Cherednik, PBWElement};
use crate::error::{Error, Result};
use crate::matrix::{GradedMatrix, Label};
use crate::params::CyclicParams;
use crate::scalars::{FromParam, HasRoots, ParamScalar, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModuleTag {
    Delta,
    NablaM,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Generator {
    X,
    S,
    Xi,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::X, Generator::S, Generator::Xi];

    pub fn degree(self) -> i64 {
        match self {
            Generator::X => 1,
            Generator::S => 0,
            Generator::Xi => -1,
        }
    }
}

/// Degree of `v_{i,j}`.
pub fn degree(tag: ModuleTag, (i, j): Label, n: usize) -> i64 {
    match tag {
        ModuleTag::Delta => i as i64 - j as i64,
        ModuleTag::NablaM => i as i64 + j as i64 - (n as i64 - 1),
    }
}

/// Ordered basis of the degree `k` piece; empty below degree `1 − n`.
///
/// `NablaM` lists `j = 0, 1, …`; `Delta` lists `j = n−1, n−2, …`.
pub fn graded_basis(tag: ModuleTag, k: i64, n: usize) -> Vec<Label> {
    let n_i = n as i64;
    if k < 1 - n_i {
        return Vec::new();
    }
    match tag {
        ModuleTag::NablaM => (0..n_i)
            .filter_map(|j| {
                let i = k + n_i - 1 - j;
                (i >= 0).then_some((i as usize, j as usize))
            })
            .collect(),
        ModuleTag::Delta => (0..n_i)
            .rev()
            .filter_map(|j| {
                let i = k + j;
                (i >= 0).then_some((i as usize, j as usize))
            })
            .collect(),
    }
}

/// Vector in one of the two modules.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModVector<S> {
    tag: ModuleTag,
    n: usize,
    entries: BTreeMap<Label, S>,
}

impl<S: Scalar> ModVector<S> {
    pub fn zero(tag: ModuleTag, n: usize) -> Self {
        ModVector { tag, n, entries: BTreeMap::new() }
    }

    pub fn basis(tag: ModuleTag, n: usize, label: Label) -> Self {
        Self::term(tag, n, label, S::one(n))
    }

    pub fn term(tag: ModuleTag, n: usize, label: Label, coeff: S) -> Self {
        let mut v = Self::zero(tag, n);
        v.add_term(label, coeff);
        v
    }

    /// `Σ coords[k] · v_{basis[k]}`.
    pub fn from_coords(tag: ModuleTag, n: usize, basis: &[Label], coords: &[S]) -> Self {
        let mut v = Self::zero(tag, n);
        for (l, c) in basis.iter().zip(coords) {
            v.add_term(*l, c.clone());
        }
        v
    }

    pub fn tag(&self) -> ModuleTag {
        self.tag
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &BTreeMap<Label, S> {
        &self.entries
    }

    pub fn get(&self, label: Label) -> S {
        self.entries.get(&label).cloned().unwrap_or_else(|| S::zero(self.n))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Adds `coeff · v_label`, discarding labels outside the basis
    /// (`j ≥ n`).
    pub fn add_term(&mut self, label: Label, coeff: S) {
        if label.1 >= self.n || coeff.is_exact_zero() {
            return;
        }
        match self.entries.get_mut(&label) {
            Some(c) => {
                *c = c.plus(&coeff);
                if c.is_exact_zero() {
                    self.entries.remove(&label);
                }
            }
            None => {
                self.entries.insert(label, coeff);
            }
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in &other.entries {
            out.add_term(*l, c.clone());
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in &other.entries {
            out.add_term(*l, c.negate());
        }
        out
    }

    pub fn scale(&self, f: &S) -> Self {
        let mut out = Self::zero(self.tag, self.n);
        for (l, c) in &self.entries {
            out.add_term(*l, c.times(f));
        }
        out
    }

    /// Coordinates in `basis`; entries outside it are ignored.
    pub fn coords(&self, basis: &[Label]) -> Vec<S> {
        basis.iter().map(|l| self.get(*l)).collect()
    }

    /// Equality after mapping scalars to the field.
    pub fn field_eq(&self, other: &Self, tol: f64) -> bool {
        self.tag == other.tag && self.minus(other).entries.values().all(|c| c.vanishes(tol))
    }

    /// The degree of each stored basis vector, if they all agree.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degs = self.entries.keys().map(|l| degree(self.tag, *l, self.n));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }
}

fn param<S: Scalar + FromParam<P>, P: ParamScalar>(params: &CyclicParams<P>, i: i64) -> S {
    S::from_param(params.c(i), params.n())
}

/// Action of `x`.
pub fn act_x<S, P>(v: &ModVector<S>, params: &CyclicParams<P>) -> ModVector<S>
where
    S: Scalar + FromParam<P>,
    P: ParamScalar,
{
    let n = v.n;
    let mut out = ModVector::zero(v.tag, n);
    for (&(i, j), c) in &v.entries {
        match v.tag {
            ModuleTag::Delta => out.add_term((i + 1, j), c.clone()),
            ModuleTag::NablaM => {
                out.add_term((i, j + 1), c.clone());
                let (ii, jj) = (i as i64, j as i64);
                let k = S::from_i64(ii + 1, n)
                    .plus(&param::<S, P>(params, ii + jj + 2))
                    .minus(&param::<S, P>(params, jj + 1));
                out.add_term((i + 1, j), c.times(&k));
            }
        }
    }
    out
}

/// Action of `ξ`.
pub fn act_xi<S, P>(v: &ModVector<S>, params: &CyclicParams<P>) -> ModVector<S>
where
    S: Scalar + FromParam<P>,
    P: ParamScalar,
{
    let n = v.n;
    let mut out = ModVector::zero(v.tag, n);
    for (&(i, j), c) in &v.entries {
        match v.tag {
            ModuleTag::Delta => {
                out.add_term((i, j + 1), c.clone());
                if i >= 1 {
                    let (ii, jj) = (i as i64, j as i64);
                    let k = S::from_i64(ii, n)
                        .plus(&param::<S, P>(params, ii - jj))
                        .minus(&param::<S, P>(params, -jj));
                    out.add_term((i - 1, j), c.times(&k));
                }
            }
            ModuleTag::NablaM => {
                if i >= 1 {
                    out.add_term((i - 1, j), c.clone());
                }
            }
        }
    }
    out
}

/// Exponent `e` with `s·v_{i,j} = q^e v_{i,j}`.
pub fn s_weight(tag: ModuleTag, (i, j): Label) -> i64 {
    match tag {
        ModuleTag::Delta => -(i as i64 - j as i64),
        ModuleTag::NablaM => -(i as i64 + j as i64 + 1),
    }
}

/// Action of `s`.
pub fn act_s<S: HasRoots>(v: &ModVector<S>) -> ModVector<S> {
    let mut out = ModVector::zero(v.tag, v.n);
    for (&l, c) in &v.entries {
        out.add_term(l, c.times(&S::root_of_unity(v.n, s_weight(v.tag, l))));
    }
    out
}

/// Action of a generator on either module.
pub fn act<S, P>(g: Generator, v: &ModVector<S>, params: &CyclicParams<P>) -> ModVector<S>
where
    S: HasRoots + FromParam<P>,
    P: ParamScalar,
{
    match g {
        Generator::X => act_x(v, params),
        Generator::S => act_s(v),
        Generator::Xi => act_xi(v, params),
    }
}

fn check_tag<S>(v: &ModVector<S>, tag: ModuleTag) -> Result<()> {
    if v.tag != tag {
        return Err(Error::Structural(format!("expected a {tag:?} vector, got {:?}", v.tag)));
    }
    Ok(())
}

/// Generator action on the standard module.
pub fn act_delta<S, P>(g: Generator, v: &ModVector<S>, params: &CyclicParams<P>) -> Result<ModVector<S>>
where
    S: HasRoots + FromParam<P>,
    P: ParamScalar,
{
    check_tag(v, ModuleTag::Delta)?;
    Ok(act(g, v, params))
}

/// Generator action on `M`.
pub fn act_nabla<S, P>(g: Generator, v: &ModVector<S>, params: &CyclicParams<P>) -> Result<ModVector<S>>
where
    S: HasRoots + FromParam<P>,
    P: ParamScalar,
{
    check_tag(v, ModuleTag::NablaM)?;
    Ok(act(g, v, params))
}

/// Action of an algebra element, term by term as `x^a (s^b (ξ^d v))`.
pub fn act_pbw<S, P>(e: &PBWElement<S>, v: &ModVector<S>, params: &CyclicParams<P>) -> ModVector<S>
where
    S: HasRoots + FromParam<P>,
    P: ParamScalar,
{
    let mut out = ModVector::zero(v.tag, v.n);
    // Share the ξ-powers between terms.
    let mut xi_pows = vec![v.clone()];
    for (&(a, b, d), coeff) in e.terms() {
        while xi_pows.len() <= d {
            let next = act_xi(xi_pows.last().expect("nonempty"), params);
            xi_pows.push(next);
        }
        let mut w = xi_pows[d].clone();
        for _ in 0..b {
            w = act_s(&w);
        }
        for _ in 0..a {
            w = act_x(&w, params);
        }
        out = out.plus(&w.scale(coeff));
    }
    out
}

/// Matrix of `op` from the degree `k` piece to the degree `target` piece.
pub fn action_matrix<S: Scalar>(
    tag: ModuleTag,
    n: usize,
    k: i64,
    target: i64,
    op: impl Fn(&ModVector<S>) -> ModVector<S>,
) -> GradedMatrix<S> {
    let cols = graded_basis(tag, k, n);
    let rows = graded_basis(tag, target, n);
    let mut m = GradedMatrix::zeros(rows.clone(), cols.clone(), n);
    for (c, &l) in cols.iter().enumerate() {
        let image = op(&ModVector::basis(tag, n, l));
        debug_assert!(image.entries.keys().all(|lab| degree(tag, *lab, n) == target));
        for (r, &lr) in rows.iter().enumerate() {
            m.set(r, c, image.get(lr));
        }
    }
    m
}

/// Matrix of a generator from degree `k` to degree `k + deg(g)`.
pub fn generator_matrix<S, P>(tag: ModuleTag, g: Generator, k: i64, params: &CyclicParams<P>) -> GradedMatrix<S>
where
    S: HasRoots + FromParam<P>,
    P: ParamScalar,
{
    action_matrix(tag, params.n(), k, k + g.degree(), |v| act(g, v, params))
}

/// Matrix of `eu` on the degree `k` piece of the standard module, in the
/// basis of [`graded_basis`]: upper bidiagonal with diagonal entries
/// `k + n − m − c_m` and ones above the diagonal.
pub fn eu_matrix<P: ParamScalar>(params: &CyclicParams<P>, k: i64) -> GradedMatrix<P> {
    let n = params.n();
    let basis = graded_basis(ModuleTag::Delta, k, n);
    let mut m = GradedMatrix::zeros(basis.clone(), basis.clone(), n);
    for idx in 0..basis.len() {
        let mm = idx as i64 + 1;
        m.set(idx, idx, P::from_i64(k + n as i64 - mm, n).minus(params.c(mm)));
        if idx >= 1 {
            m.set(idx - 1, idx, P::one(n));
        }
    }
    m
}

/// Matrix of `eu` obtained by letting its normal form act on basis vectors.
pub fn eu_matrix_by_action<S, P>(alg: &Cherednik<S>, params: &CyclicParams<P>, k: i64) -> GradedMatrix<S>
where
    S: HasRoots + FromParam<P>,
    P: ParamScalar,
{
    let eu = alg.eu_element();
    action_matrix(ModuleTag::Delta, params.n(), k, k, |v| act_pbw(&eu, v, params))
}
