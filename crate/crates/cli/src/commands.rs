//! One function per subcommand, each filling a [`Report`].

use std::time::Instant;

use cherednik::algebra::{Cherednik, Letter};
use cherednik::criteria::{
    build_dk, build_fk, default_t, dk_all_nonsingular, dk_by_action, fk_by_action, generation_check, good_translate,
    in_f, CriterionReport,
};
use cherednik::endo::{end_dim, end_dim_by_scan};
use cherednik::hecke::{eigenvalue_on_standard, hecke_poly, hecke_root, EtaMatrices};
use cherednik::homspace::{delta_to_nabla_hom, is_module_map};
use cherednik::modules::{act, act_pbw, eu_matrix, Generator, ModVector, ModuleTag};
use cherednik::{
    ComplexF, CycloElem, CyclicParams, Error, ExactParams, FromParam, HasRoots, ParamScalar, Rational, Result,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::config::{CommandKind, Inputs, RunConfig};
use crate::report::{Check, Report};

const GOOD: &str = "c_i − c_j = j − i whenever c_i − c_j ≡ j − i (mod n)";
const DK: &str = "D_k: M_k → M_{k+1} is nonsingular for every k ≥ 0";
const DK_SCAN: &str = "singular degrees of D_k predicted by the congruences match a determinant scan";
const RELATIONS: &str =
    "s ξ = q ξ s, s x = q^{-1} x s and ξ x − x ξ = 1 + Σ_k (c_{k+1} − c_k) ε_k on random vectors of Δ and ∇M";
const IDENTITY: &str = "ξ^j x normal-orders to the closed form for ξ^j x, 0 ≤ j ≤ 2n";
const FK_TRIANGULAR: &str = "F_k is unit upper triangular for t = e_{n−1}, 1 − n ≤ k < 0";
const DK_ACTION: &str = "closed-form D_k equals the matrix of x composed from the module action";
const FK_ACTION: &str = "closed-form F_k equals the matrix composed from the module action";
const GENERATION: &str = "ψ^M_{c,t} generates ∇M";
const HOM: &str = "v_{0,0} ↦ ψ^M_{c,t} extends to an isomorphism Δ → ∇M";
const HOM_MAP: &str = "the map Δ → ∇M commutes with x, s and ξ up to the maximum degree";
const END: &str = "dim End(Δ) = n";
const END_SCAN: &str = "the kernel-sum dimension of End(Δ) equals a count of s-fixed vectors killed by ξ^n, degree by degree";
const EQUIVALENCE: &str = "ψ^M_{c,e_{n−1}} generates ∇M ⟺ c is good ⟺ dim End(Δ) = n";
const ANNIHILATION: &str = "∏_{j=1}^n (η − q^{−j} q_j^{−1}) vanishes on Δ_k for 1 − n ≤ k ≤ max degree";
const COMMUTATION: &str = "η commutes with x, s and ξ on Δ";
const EIGENVALUES: &str = "η acts on the lowest weight space of the j-th standard module by q^{−j} q_j^{−1}";
const NORMALIZE: &str = "the translate is good and differs from c by an element of nZ^n";

pub fn run(cfg: &RunConfig) -> Result<Report> {
    let start = Instant::now();
    let mut report = Report::new(cfg);
    log::info!("running {} with n = {}", cfg.command.name(), cfg.n());
    match cfg.command {
        CommandKind::Check => check(cfg, &mut report)?,
        CommandKind::Normalize => normalize(cfg, &mut report)?,
        CommandKind::Matrices => match &cfg.inputs {
            Inputs::Exact { params, t } => matrices(params, t, cfg, &mut report)?,
            Inputs::Float { params, t } => matrices(params, t, cfg, &mut report)?,
        },
        CommandKind::EndDim => end(exact(cfg)?.0, cfg, &mut report)?,
        CommandKind::Hecke => match &cfg.inputs {
            Inputs::Exact { params, .. } => hecke(params, cfg, &mut report)?,
            Inputs::Float { params, .. } => hecke(params, cfg, &mut report)?,
        },
        CommandKind::Hom => {
            let (params, t) = exact(cfg)?;
            hom(params, t, cfg, &mut report)?;
        }
        CommandKind::VerifyAll => verify_all(cfg, &mut report)?,
    }
    report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(report)
}

fn exact(cfg: &RunConfig) -> Result<(&ExactParams, &[Rational])> {
    match &cfg.inputs {
        Inputs::Exact { params, t } => Ok((params, t)),
        Inputs::Float { .. } => Err(Error::Mode(format!(
            "`{}` needs exact rational parameters; rerun with --mode exact",
            cfg.command.name()
        ))),
    }
}

fn good_check(report: &CriterionReport) -> Check {
    let detail = if report.in_f {
        "c is good".to_string()
    } else {
        let pairs: Vec<String> = report.failing_pairs.iter().map(|(i, j, m)| format!("({i},{j}) m={m}")).collect();
        format!("c is not good; failing pairs with c_i − c_j − (j − i) = n·m: {}", pairs.join(", "))
    };
    let mut check = Check::verdict("good-parameters", GOOD, report.in_f, detail);
    if let Some(&(i, j, m)) = report.failing_pairs.first() {
        check = check.with_witness(json!({ "i": i, "j": j, "m": m }));
    }
    check
}

/// Turns an internal disagreement into a report line; other errors propagate.
fn agreement_or<T>(
    report: &mut Report,
    name: &str,
    statement: &str,
    result: Result<T>,
) -> Result<Option<T>> {
    match result {
        Ok(v) => Ok(Some(v)),
        Err(Error::Inconsistent(msg)) => {
            report.push(Check::agreement(name, statement, false, msg));
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

fn check(cfg: &RunConfig, report: &mut Report) -> Result<()> {
    let criterion = match &cfg.inputs {
        Inputs::Exact { params, .. } => in_f(params, 0.0),
        Inputs::Float { params, .. } => in_f(params, cfg.tol),
    };
    report.push(good_check(&criterion));
    report.put("in_f", criterion.in_f);
    report.put("semisimple", criterion.semisimple);
    report.put("failing_pairs", &criterion.failing_pairs);
    report.put("singular_degrees", &criterion.singular_degrees);
    match &cfg.inputs {
        Inputs::Exact { params, .. } => dk_checks(params, cfg.max_degree, report)?,
        Inputs::Float { .. } => {
            let ok = criterion.singular_degrees.is_empty();
            report.push(Check::verdict("dk-nonsingular", DK, ok, format!("singular at k ∈ {:?}", criterion.singular_degrees)));
            report.push(Check::skipped("dk-scan", DK_SCAN, "determinant scan needs exact parameters"));
        }
    }
    Ok(())
}

fn dk_checks(params: &ExactParams, max_degree: i64, report: &mut Report) -> Result<()> {
    let Some(dk) = agreement_or(report, "dk-scan", DK_SCAN, dk_all_nonsingular(params, max_degree))? else {
        return Ok(());
    };
    let detail = if dk.all_nonsingular {
        "no D_k is singular".to_string()
    } else {
        format!("D_k singular at k ∈ {:?}", dk.singular_degrees)
    };
    let mut c = Check::verdict("dk-nonsingular", DK, dk.all_nonsingular, detail);
    if let Some(k) = dk.singular_degrees.first() {
        c = c.with_witness(json!({ "k": k }));
    }
    report.push(c);
    report.push(Check::agreement(
        "dk-scan",
        DK_SCAN,
        true,
        format!("determinants vanish on [0, {}] exactly at {:?}", dk.scan_bound, dk.scan_singular),
    ));
    Ok(())
}

fn normalize(cfg: &RunConfig, report: &mut Report) -> Result<()> {
    let (params, _) = exact(cfg)?;
    let n = params.n() as i64;
    let out = good_translate(params)?;
    let shifts: Vec<Option<i64>> =
        (1..=n).map(|i| (out.c(i) - params.c(i)).integer_quotient(n)).collect();
    let good = in_f(&out, 0.0).in_f;
    let congruent = shifts.iter().all(Option::is_some);
    let values: Vec<String> = out.values().iter().map(ToString::to_string).collect();
    report.push(Check::agreement(
        "translate",
        NORMALIZE,
        good && congruent,
        format!("c' = ({})", values.join(", ")),
    ));
    report.put("normalized", &values);
    report.put("shift_over_n", shifts.iter().map(|s| s.unwrap_or_default()).collect::<Vec<_>>());
    Ok(())
}

fn matrices<P>(params: &CyclicParams<P>, t: &[P], cfg: &RunConfig, report: &mut Report) -> Result<()>
where
    P: ParamScalar,
    ComplexF: FromParam<P>,
{
    let n = params.n() as i64;
    let k_max = cfg.max_degree;
    let mut d = Vec::new();
    let mut d_agree = true;
    for k in 0..=k_max {
        let m = build_dk(params, k)?;
        d_agree &= m.field_eq(&dk_by_action(params, k), cfg.tol);
        d.push(json!({ "k": k, "matrix": m }));
    }
    report.push(Check::agreement("dk-action", DK_ACTION, d_agree, format!("0 ≤ k ≤ {k_max}")));
    let mut f = Vec::new();
    let mut f_agree = true;
    for k in 1 - n..0 {
        let m = build_fk(params, t, k)?;
        f_agree &= m.field_eq(&fk_by_action(params, t, k)?, cfg.tol);
        f.push(json!({ "k": k, "matrix": m }));
    }
    report.push(Check::agreement("fk-action", FK_ACTION, f_agree, format!("{} ≤ k < 0", 1 - n)));
    let eu: Vec<_> = (1 - n..=k_max).map(|k| json!({ "k": k, "matrix": eu_matrix(params, k) })).collect();
    let etas = EtaMatrices::compute(params, k_max)?;
    let eta: Vec<_> = etas.by_degree.iter().map(|(k, m)| json!({ "k": k, "matrix": m })).collect();
    report.put("D", d);
    report.put("F", f);
    report.put("eu", eu);
    report.put("eta", eta);
    Ok(())
}

fn end(params: &ExactParams, cfg: &RunConfig, report: &mut Report) -> Result<()> {
    let n = params.n();
    let Some(rep) = agreement_or(report, "end-scan", END_SCAN, end_dim(params))? else {
        return Ok(());
    };
    let top = rep.critical_ks.last().map(|(k, _)| *k).unwrap_or(1).max(cfg.max_degree / n as i64);
    let scanned = end_dim_by_scan(params, top);
    let mut c = Check::verdict("end-dim", END, rep.dim_end == n, format!("dim End(Δ) = {}", rep.dim_end));
    if let Some((k, dim)) = rep.critical_ks.first() {
        c = c.with_witness(json!({ "k": k, "kernel_dim": dim }));
    }
    report.push(c);
    report.push(Check::agreement(
        "end-scan",
        END_SCAN,
        scanned == rep.dim_end,
        format!("scan over degrees up to {} gives {scanned}", top * n as i64),
    ));
    report.put("dim_end", rep.dim_end);
    report.put("critical_ks", &rep.critical_ks);
    report.put("det_values", &rep.det_values);
    Ok(())
}

fn hecke<P>(params: &CyclicParams<P>, cfg: &RunConfig, report: &mut Report) -> Result<()>
where
    P: ParamScalar,
    ComplexF: FromParam<P>,
{
    let poly = hecke_poly(params);
    let etas = EtaMatrices::compute(params, cfg.max_degree)?;
    let ann = etas.annihilation_residual(&poly);
    let com = etas.commutation_residual(params);
    report.push(
        Check::verdict("hecke-annihilation", ANNIHILATION, ann <= cfg.tol, format!("tolerance {:e}", cfg.tol))
            .with_residual(ann),
    );
    report.push(
        Check::verdict("hecke-commutation", COMMUTATION, com <= cfg.tol, format!("tolerance {:e}", cfg.tol))
            .with_residual(com),
    );
    if in_f(params, cfg.tol).semisimple {
        let mut worst: f64 = 0.0;
        let mut values = Vec::new();
        for j in 1..=params.n() {
            let ev = eigenvalue_on_standard(params, j, cfg.tol)?;
            worst = worst.max((ev.0 - hecke_root(params, j as i64).0).norm());
            values.push(ev);
        }
        report.push(
            Check::verdict("hecke-eigenvalues", EIGENVALUES, worst <= cfg.tol, "all j = 1, …, n").with_residual(worst),
        );
        report.put("eigenvalues", values);
    } else {
        report.push(Check::skipped("hecke-eigenvalues", EIGENVALUES, "parameters are not semisimple"));
    }
    report.put("roots", &poly.roots);
    report.put("coefficients", &poly.coeffs);
    report.put("convention", &poly.convention);
    Ok(())
}

fn hom(params: &ExactParams, t: &[Rational], cfg: &RunConfig, report: &mut Report) -> Result<()> {
    let window = cfg.max_degree;
    let gen = agreement_or(report, "generation-window", GENERATION, generation_check(params, t, window))?;
    if let Some(gen) = &gen {
        let mut c = Check::verdict(
            "generation",
            GENERATION,
            gen.generates,
            if gen.generates {
                "every F_k and D_k is nonsingular".to_string()
            } else {
                format!("singular F_k at k ∈ {:?}, singular D_k at k ∈ {:?}", gen.singular_f, gen.singular_d)
            },
        );
        if let Some(d) = gen.first_deficit_degree {
            c = c.with_witness(json!({ "first_unspanned_degree": d }));
        }
        report.push(c);
        report.put("generation", gen);
    }
    let Some(map) = agreement_or(report, "hom-window", HOM, delta_to_nabla_hom(params, t, window))? else {
        return Ok(());
    };
    let mut c = Check::verdict(
        "hom-iso",
        HOM,
        map.iso,
        match map.first_singular_degree {
            None => format!("invertible in every degree up to {window}"),
            Some(k) => format!("first singular degree {k}"),
        },
    );
    if let Some(k) = map.first_singular_degree {
        c = c.with_witness(json!({ "degree": k }));
    }
    report.push(c);
    let is_map = is_module_map::<CycloElem>(&map, params, 0.0);
    report.push(Check::agreement("hom-module-map", HOM_MAP, is_map, ""));
    report.put("iso", map.iso);
    report.put("iso_up_to_max_degree", map.iso_up_to_window);
    report.put("first_singular_degree", map.first_singular_degree);
    Ok(())
}

fn random_vector<S: HasRoots>(rng: &mut ChaCha8Rng, tag: ModuleTag, n: usize) -> ModVector<S> {
    let mut v = ModVector::zero(tag, n);
    for _ in 0..rng.gen_range(1..=5) {
        let label = (rng.gen_range(0..3 * n), rng.gen_range(0..n));
        let r = Rational::new(rng.gen_range(-20..=20), rng.gen_range(1..=20));
        v.add_term(label, S::from_rational(&r, n));
    }
    v
}

/// Checks the three defining relations on random vectors, returning the
/// first failure.
fn relations<S, P>(params: &CyclicParams<P>, seed: u64, tol: f64) -> std::result::Result<usize, String>
where
    S: HasRoots + FromParam<P>,
    P: ParamScalar,
{
    let n = params.n();
    let alg: Cherednik<S> = Cherednik::new(params);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = S::root_of_unity(n, 1);
    let q_inv = S::root_of_unity(n, -1);
    let mut count = 0;
    for tag in [ModuleTag::Delta, ModuleTag::NablaM] {
        for _ in 0..20 {
            let v: ModVector<S> = random_vector(&mut rng, tag, n);
            let s = |w: &ModVector<S>| act(Generator::S, w, params);
            let x = |w: &ModVector<S>| act(Generator::X, w, params);
            let xi = |w: &ModVector<S>| act(Generator::Xi, w, params);
            if !s(&xi(&v)).field_eq(&xi(&s(&v)).scale(&q), tol) {
                return Err(format!("s ξ = q ξ s fails in {tag:?}"));
            }
            if !s(&x(&v)).field_eq(&x(&s(&v)).scale(&q_inv), tol) {
                return Err(format!("s x = q^{{-1}} x s fails in {tag:?}"));
            }
            let mut rhs = v.clone();
            for k in 0..n as i64 {
                let gamma = S::from_param(params.c(k + 1), n).minus(&S::from_param(params.c(k), n));
                rhs = rhs.plus(&act_pbw(alg.epsilon(k), &v, params).scale(&gamma));
            }
            if !xi(&x(&v)).minus(&x(&xi(&v))).field_eq(&rhs, tol) {
                return Err(format!("the ξ x commutator fails in {tag:?}"));
            }
            count += 3;
        }
    }
    Ok(count)
}

fn identity<S, P>(params: &CyclicParams<P>, tol: f64) -> Option<usize>
where
    S: HasRoots + FromParam<P>,
    P: ParamScalar,
{
    let n = params.n();
    let alg: Cherednik<S> = Cherednik::new(params);
    (0..=2 * n).find(|&j| {
        let mut word = vec![Letter::Xi; j];
        word.push(Letter::X);
        !alg.normal_order(&word, S::one(n)).field_eq(&alg.xi_pow_x_identity(j), tol)
    })
}

fn generic_checks<S, P>(params: &CyclicParams<P>, cfg: &RunConfig, report: &mut Report) -> Result<()>
where
    S: HasRoots + FromParam<P>,
    P: ParamScalar,
    ComplexF: FromParam<P>,
{
    let n = params.n();
    report.push(match relations::<S, P>(params, cfg.seed, cfg.tol) {
        Ok(count) => Check::agreement("relations", RELATIONS, true, format!("{count} relation instances")),
        Err(msg) => Check::agreement("relations", RELATIONS, false, msg),
    });
    report.push(match identity::<S, P>(params, cfg.tol) {
        None => Check::agreement("commutation-identity", IDENTITY, true, ""),
        Some(j) => Check::agreement("commutation-identity", IDENTITY, false, format!("differs at j = {j}"))
            .with_witness(json!({ "j": j })),
    });
    let criterion = in_f(params, cfg.tol);
    report.push(good_check(&criterion));
    report.put("in_f", criterion.in_f);
    report.put("semisimple", criterion.semisimple);
    let mut triangular = true;
    for k in 1 - n as i64..0 {
        let m = build_fk(params, &default_t::<P>(n), k)?;
        triangular &= m.is_upper_triangular() && m.diagonal().iter().all(|d| d.minus(&P::one(n)).vanishes(cfg.tol));
    }
    report.push(Check::agreement("fk-triangular", FK_TRIANGULAR, triangular, ""));
    Ok(())
}

fn verify_all(cfg: &RunConfig, report: &mut Report) -> Result<()> {
    match &cfg.inputs {
        Inputs::Exact { params, t } => {
            generic_checks::<CycloElem, Rational>(params, cfg, report)?;
            dk_checks(params, cfg.max_degree, report)?;
            hom(params, t, cfg, report)?;
            end(params, cfg, report)?;
            let default = default_t::<Rational>(params.n());
            let generates = if t == default.as_slice() {
                report.data.get("generation").and_then(|g| g.get("generates")).and_then(|g| g.as_bool())
            } else {
                generation_check(params, &default, cfg.max_degree).ok().map(|g| g.generates)
            };
            let good = in_f(params, 0.0).in_f;
            let end_is_n = report.data.get("dim_end").and_then(|d| d.as_u64()) == Some(params.n() as u64);
            if let Some(generates) = generates {
                report.push(Check::agreement(
                    "equivalence",
                    EQUIVALENCE,
                    generates == good && good == end_is_n,
                    format!("generates = {generates}, good = {good}, dim End(Δ) = n: {end_is_n}"),
                ));
            }
            hecke(params, cfg, report)?;
        }
        Inputs::Float { params, .. } => {
            generic_checks::<ComplexF, ComplexF>(params, cfg, report)?;
            for (name, statement) in [
                ("dk-nonsingular", DK),
                ("generation", GENERATION),
                ("hom-iso", HOM),
                ("end-dim", END),
                ("equivalence", EQUIVALENCE),
            ] {
                report.push(Check::skipped(name, statement, "needs exact parameters"));
            }
            hecke(params, cfg, report)?;
        }
    }
    Ok(())
}
