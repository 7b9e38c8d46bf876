//! Normal ordering in the rational Cherednik algebra of `Z/n`, generated by
//! `x`, `s` and `ξ` with
//!
//! ```text
//! s x = q^{-1} x s,    ξ s = q^{-1} s ξ,    ξ x = x ξ + 1 + Σ_k (c_{k+1} − c_k) ε_k
//! ```
//!
//! where `q = exp(2πi/n)` and `ε_k = (1/n) Σ_m q^{km} s^m`. Normal-ordered
//! monomials are `x^a s^b ξ^d`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::params::CyclicParams;
use crate::scalars::{FromParam, HasRoots, ParamScalar, Rational, Scalar, DEFAULT_TOL};

/// A generator occurrence in a word. `S(p)` stands for `s^p`, `p` mod `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Letter {
    X,
    S(usize),
    Xi,
}

/// Exponents `(a, b, d)` of `x^a s^b ξ^d`, with `b` reduced mod `n`.
pub type Monomial = (usize, usize, usize);

/// Finite linear combination of normal-ordered monomials.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PBWElement<S> {
    n: usize,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> PBWElement<S> {
    pub fn zero(n: usize) -> Self {
        PBWElement { n, terms: BTreeMap::new() }
    }

    pub fn monomial(n: usize, key: Monomial, coeff: S) -> Self {
        let mut e = Self::zero(n);
        e.add_term((key.0, key.1 % n, key.2), coeff);
        e
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, (0, 0, 0), S::one(n))
    }

    pub fn x(n: usize) -> Self {
        Self::monomial(n, (1, 0, 0), S::one(n))
    }

    pub fn s(n: usize) -> Self {
        Self::monomial(n, (0, 1, 0), S::one(n))
    }

    pub fn xi(n: usize) -> Self {
        Self::monomial(n, (0, 0, 1), S::one(n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, S> {
        &self.terms
    }

    pub fn coeff(&self, key: Monomial) -> Option<&S> {
        self.terms.get(&key)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: Monomial, coeff: S) {
        if coeff.is_exact_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(c) => {
                *c = c.plus(&coeff);
                if c.is_exact_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scale(&S::from_i64(-1, self.n)))
    }

    pub fn scale(&self, f: &S) -> Self {
        let mut out = Self::zero(self.n);
        for (k, c) in &self.terms {
            out.add_term(*k, c.times(f));
        }
        out
    }

    /// Equality after mapping coefficients to the field; see
    /// [`Scalar::vanishes`].
    pub fn field_eq(&self, other: &Self, tol: f64) -> bool {
        self.minus(other).terms.values().all(|c| c.vanishes(tol))
    }
}

/// The word `x^a s^b ξ^d` of a monomial.
pub fn monomial_word(key: Monomial) -> Vec<Letter> {
    let (a, b, d) = key;
    let mut w = vec![Letter::X; a];
    if b != 0 {
        w.push(Letter::S(b));
    }
    w.extend(std::iter::repeat_n(Letter::Xi, d));
    w
}

/// The algebra at fixed parameters, with the idempotents `ε_i` and the
/// commutator `[ξ, x]` precomputed.
#[derive(Clone, Debug)]
pub struct Cherednik<S> {
    n: usize,
    /// `c_1, …, c_n` coerced into the coefficient ring.
    c: Vec<S>,
    /// Coefficient of `s^m` in `[ξ, x]`.
    bracket: Vec<S>,
    eps: Vec<PBWElement<S>>,
}

impl<S: HasRoots> Cherednik<S> {
    pub fn new<P: ParamScalar>(params: &CyclicParams<P>) -> Self
    where
        S: FromParam<P>,
    {
        let n = params.n();
        let c: Vec<S> = params.values().iter().map(|v| S::from_param(v, n)).collect();
        let inv_n = S::from_rational(&Rational::new(1, n as i64), n);
        let eps: Vec<PBWElement<S>> = (0..n)
            .map(|i| {
                let mut e = PBWElement::zero(n);
                for m in 0..n {
                    let coeff = S::root_of_unity(n, (i * m) as i64).times(&inv_n);
                    e.add_term((0, m, 0), coeff);
                }
                e
            })
            .collect();
        let cc = |k: i64| c[(k - 1).rem_euclid(n as i64) as usize].clone();
        let mut bracket = vec![S::zero(n); n];
        bracket[0] = S::one(n);
        for k in 0..n as i64 {
            let gamma = cc(k + 1).minus(&cc(k));
            if gamma.is_exact_zero() {
                continue;
            }
            for (key, coeff) in &eps[k as usize].terms {
                bracket[key.1] = bracket[key.1].plus(&coeff.times(&gamma));
            }
        }
        Cherednik { n, c, bracket, eps }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `c_i` with `i` reduced mod `n` into `1..=n`.
    pub fn c(&self, i: i64) -> &S {
        &self.c[(i - 1).rem_euclid(self.n as i64) as usize]
    }

    /// `ε_i = (1/n) Σ_m q^{im} s^m`, `i` mod `n`.
    pub fn epsilon(&self, i: i64) -> &PBWElement<S> {
        &self.eps[i.rem_euclid(self.n as i64) as usize]
    }

    fn q_pow(&self, k: i64) -> S {
        S::root_of_unity(self.n, k)
    }

    /// Positions `p` where `word[p], word[p+1]` is not in normal order.
    fn redexes(word: &[Letter]) -> Vec<usize> {
        word.windows(2)
            .enumerate()
            .filter(|(_, w)| {
                matches!(
                    (w[0], w[1]),
                    (Letter::S(_), Letter::S(_))
                        | (Letter::S(_), Letter::X)
                        | (Letter::Xi, Letter::S(_))
                        | (Letter::Xi, Letter::X)
                )
            })
            .map(|(p, _)| p)
            .collect()
    }

    /// One rewrite at position `p`.
    fn rewrite(&self, word: &[Letter], p: usize, coeff: &S) -> Vec<(Vec<Letter>, S)> {
        let n = self.n;
        let splice = |mid: &[Letter]| {
            let mut w = Vec::with_capacity(word.len() + 1);
            w.extend_from_slice(&word[..p]);
            w.extend(mid.iter().copied().filter(|l| *l != Letter::S(0)));
            w.extend_from_slice(&word[p + 2..]);
            w
        };
        match (word[p], word[p + 1]) {
            (Letter::S(a), Letter::S(b)) => vec![(splice(&[Letter::S((a + b) % n)]), coeff.clone())],
            (Letter::S(a), Letter::X) => {
                vec![(splice(&[Letter::X, Letter::S(a)]), coeff.times(&self.q_pow(-(a as i64))))]
            }
            (Letter::Xi, Letter::S(a)) => {
                vec![(splice(&[Letter::S(a), Letter::Xi]), coeff.times(&self.q_pow(-(a as i64))))]
            }
            (Letter::Xi, Letter::X) => {
                let mut out = vec![(splice(&[Letter::X, Letter::Xi]), coeff.clone())];
                for (m, g) in self.bracket.iter().enumerate() {
                    if !g.is_exact_zero() {
                        out.push((splice(&[Letter::S(m)]), coeff.times(g)));
                    }
                }
                out
            }
            _ => unreachable!("not a redex"),
        }
    }

    fn key_of(word: &[Letter]) -> Monomial {
        let a = word.iter().filter(|l| **l == Letter::X).count();
        let d = word.iter().filter(|l| **l == Letter::Xi).count();
        let b = word
            .iter()
            .find_map(|l| if let Letter::S(p) = l { Some(*p) } else { None })
            .unwrap_or(0);
        (a, b, d)
    }

    /// Normal-orders a combination of words. `choose(k)` picks which of the
    /// `k` available redexes of a word to rewrite next; the result does not
    /// depend on the choice.
    pub fn normal_order_with(
        &self,
        words: Vec<(Vec<Letter>, S)>,
        choose: &mut dyn FnMut(usize) -> usize,
    ) -> PBWElement<S> {
        let n = self.n;
        let mut pending: BTreeMap<Vec<Letter>, S> = BTreeMap::new();
        let push = |pending: &mut BTreeMap<Vec<Letter>, S>, w: Vec<Letter>, c: S| {
            if c.is_exact_zero() {
                return;
            }
            let w: Vec<Letter> = w
                .into_iter()
                .map(|l| if let Letter::S(p) = l { Letter::S(p % n) } else { l })
                .filter(|l| *l != Letter::S(0))
                .collect();
            match pending.get_mut(&w) {
                Some(old) => {
                    *old = old.plus(&c);
                    if old.is_exact_zero() {
                        pending.remove(&w);
                    }
                }
                None => {
                    pending.insert(w, c);
                }
            }
        };
        for (w, c) in words {
            push(&mut pending, w, c);
        }
        let mut out = PBWElement::zero(n);
        while let Some((word, coeff)) = pending.pop_last() {
            let redexes = Self::redexes(&word);
            if redexes.is_empty() {
                out.add_term(Self::key_of(&word), coeff);
                continue;
            }
            let p = redexes[choose(redexes.len()) % redexes.len()];
            for (w, c) in self.rewrite(&word, p, &coeff) {
                push(&mut pending, w, c);
            }
        }
        out
    }

    /// Normal form of `coeff · word`, always rewriting the leftmost redex.
    pub fn normal_order(&self, word: &[Letter], coeff: S) -> PBWElement<S> {
        self.normal_order_with(vec![(word.to_vec(), coeff)], &mut |_| 0)
    }

    /// Product `a·b` in normal form.
    pub fn mul(&self, a: &PBWElement<S>, b: &PBWElement<S>) -> PBWElement<S> {
        let mut words = Vec::with_capacity(a.terms.len() * b.terms.len());
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                let mut w = monomial_word(*ka);
                w.extend(monomial_word(*kb));
                words.push((w, ca.times(cb)));
            }
        }
        self.normal_order_with(words, &mut |_| 0)
    }

    /// `[a, b] = ab − ba`.
    pub fn commutator(&self, a: &PBWElement<S>, b: &PBWElement<S>) -> PBWElement<S> {
        self.mul(a, b).minus(&self.mul(b, a))
    }

    /// The right-hand side `x ξ^j + j ξ^{j−1} + [Σ_i (c_{i+j} − c_i) ε_i] ξ^{j−1}`
    /// of the commutation rule for `ξ^j x`; `j = 0` gives `x`.
    pub fn xi_pow_x_identity(&self, j: usize) -> PBWElement<S> {
        let n = self.n;
        let mut out = PBWElement::monomial(n, (1, 0, j), S::one(n));
        if j == 0 {
            return out;
        }
        out.add_term((0, 0, j - 1), S::from_i64(j as i64, n));
        for i in 0..n as i64 {
            let beta = self.c(i + j as i64).minus(self.c(i));
            if beta.is_exact_zero() {
                continue;
            }
            for ((_, m, _), e) in &self.epsilon(i).terms {
                out.add_term((0, *m, j - 1), e.times(&beta));
            }
        }
        out
    }

    /// `eu = x ξ − Σ_{i=1}^{n−1} c_i ε_i`.
    pub fn eu_element(&self) -> PBWElement<S> {
        let n = self.n;
        let mut out = PBWElement::monomial(n, (1, 0, 1), S::one(n));
        for i in 1..n as i64 {
            let ci = self.c(i).negate();
            if ci.is_exact_zero() {
                continue;
            }
            out = out.plus(&self.epsilon(i).scale(&ci));
        }
        out
    }

    /// Whether `[e, x] = x`, `[e, ξ] = −ξ` and `[e, s] = 0`.
    pub fn grades_by(&self, e: &PBWElement<S>, tol: f64) -> bool {
        let n = self.n;
        let x = PBWElement::x(n);
        let xi = PBWElement::xi(n);
        let s = PBWElement::s(n);
        self.commutator(e, &x).field_eq(&x, tol)
            && self.commutator(e, &xi).field_eq(&xi.scale(&S::from_i64(-1, n)), tol)
            && self.commutator(e, &s).field_eq(&PBWElement::zero(n), tol)
    }

    /// Whether `eu` acts as the degree on the generators.
    pub fn check_inner_grading(&self) -> bool {
        self.grades_by(&self.eu_element(), DEFAULT_TOL)
    }
}
