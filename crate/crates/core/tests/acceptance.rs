//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status
//! if any criterion fails.

use std::time::Instant;

use cherednik::algebra::{Cherednik, Letter};
use cherednik::criteria::{
    build_dk, build_fk, default_t, dk_all_nonsingular, dk_by_action, fk_by_action, generation_check, good_translate,
    in_f,
};
use cherednik::endo::{critical_ks, det_formula, end_dim, fixed_kernel_dim, xi_n_matrix};
use cherednik::hecke::{check_annihilation, check_commutation, eigenvalue_on_standard, hecke_root};
use cherednik::modules::{act, act_pbw, graded_basis, Generator, ModVector, ModuleTag};
use cherednik::{CycloElem, ExactParams, HasRoots, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn random_rational(rng: &mut impl Rng, height: i64) -> Rational {
    Rational::new(rng.gen_range(-height..=height), rng.gen_range(1..=height))
}

/// Parameters with `c_n = 0`; integers in `[−6, 6]` or rationals of height
/// at most 50, chosen per vector.
fn random_params(rng: &mut impl Rng, n: usize) -> ExactParams {
    let integer = rng.gen_bool(0.5);
    let mut c: Vec<Rational> = (0..n - 1)
        .map(|_| if integer { Rational::from(rng.gen_range(-6..=6i64)) } else { random_rational(rng, 50) })
        .collect();
    c.push(Rational::zero());
    ExactParams::new(n, c).expect("valid parameters")
}

fn integer_params(rng: &mut impl Rng, n: usize, bound: i64) -> ExactParams {
    let mut c: Vec<Rational> = (0..n - 1).map(|_| Rational::from(rng.gen_range(-bound..=bound))).collect();
    c.push(Rational::zero());
    ExactParams::new(n, c).expect("valid parameters")
}

fn grid(n: usize) -> Vec<ExactParams> {
    let side = 13usize;
    let count = side.pow(n as u32 - 1);
    (0..count)
        .map(|mut idx| {
            let mut c = Vec::with_capacity(n);
            for _ in 0..n - 1 {
                c.push(Rational::from((idx % side) as i64 - 6));
                idx /= side;
            }
            c.push(Rational::zero());
            ExactParams::new(n, c).expect("valid parameters")
        })
        .collect()
}

/// Everything the grid criteria need for one parameter vector.
struct GridPoint {
    label: String,
    generates: bool,
    in_f: bool,
    semisimple: bool,
    end_is_n: bool,
    error: Option<String>,
}

fn evaluate_grid_point(params: &ExactParams) -> GridPoint {
    let n = params.n();
    let k_max = 3 * n as i64;
    let label = format!("{:?}", params.values());
    let gen = generation_check(params, &default_t(n), k_max);
    let report = in_f(params, 0.0);
    let end = end_dim(params);
    let error = gen.as_ref().err().or(end.as_ref().err()).map(|e| e.to_string());
    GridPoint {
        label,
        generates: gen.map(|g| g.generates).unwrap_or(false),
        in_f: report.in_f,
        semisimple: report.semisimple,
        end_is_n: end.map(|e| e.dim_end == n).unwrap_or(false),
        error,
    }
}

/// The `D_k` criterion against the determinant scan, and the kernel-sum
/// dimension of `End` against a degree-by-degree direct computation.
fn scan_agreement(params: &ExactParams) -> Result<(), String> {
    let n = params.n();
    let k_max = 3 * n as i64;
    let member = in_f(params, 0.0).in_f;
    match dk_all_nonsingular(params, k_max) {
        Ok(r) if r.all_nonsingular == member => {}
        Ok(r) => return Err(format!("D_k criterion {} vs in_F {member}", r.all_nonsingular)),
        Err(e) => return Err(e.to_string()),
    }
    let end = end_dim(params).map_err(|e| e.to_string())?;
    let top = critical_ks(params, 0.0).last().copied().unwrap_or(0).max(k_max);
    let mut total = n;
    for k in 1..=top {
        let direct = fixed_kernel_dim(params, k * n as i64);
        let formula = end.critical_ks.iter().find(|(kk, _)| *kk == k).map(|(_, d)| *d).unwrap_or(0);
        if direct != formula {
            return Err(format!("k={k}: kernel sum gives {formula}, direct gives {direct}"));
        }
        total += direct;
    }
    if total != end.dim_end {
        return Err(format!("total {total} vs dim_end {}", end.dim_end));
    }
    Ok(())
}

fn criterion_grid_equivalence(points: &[GridPoint]) -> Outcome {
    if let Some(p) = points.iter().find(|p| p.error.is_some()) {
        return outcome(false, format!("c={}: {}", p.label, p.error.as_deref().unwrap_or_default()));
    }
    let bad: Vec<&GridPoint> =
        points.iter().filter(|p| !(p.generates == p.in_f && p.in_f == p.end_is_n)).collect();
    let members = points.iter().filter(|p| p.in_f).count();
    match bad.first() {
        None => outcome(true, format!("{} parameter vectors, {} in F", points.len(), members)),
        Some(p) => outcome(
            false,
            format!(
                "{} mismatches, first c={} generates={} in_F={} end=n:{}",
                bad.len(),
                p.label,
                p.generates,
                p.in_f,
                p.end_is_n
            ),
        ),
    }
}

fn criterion_commutation_identity(rng: &mut ChaCha8Rng) -> Outcome {
    let mut checked = 0;
    for n in 2..=5usize {
        for _ in 0..5 {
            let mut c: Vec<Rational> = (0..n - 1).map(|_| random_rational(rng, 50)).collect();
            c.push(Rational::zero());
            let params = ExactParams::new(n, c).expect("valid parameters");
            let alg: Cherednik<CycloElem> = Cherednik::new(&params);
            for j in 0..=2 * n {
                let mut word = vec![Letter::Xi; j];
                word.push(Letter::X);
                let lhs = alg.normal_order(&word, CycloElem::one(n));
                if lhs != alg.xi_pow_x_identity(j) {
                    return outcome(false, format!("n={n} c={:?} j={j}", params.values()));
                }
                checked += 1;
            }
        }
    }
    outcome(true, format!("{checked} identities"))
}

fn criterion_determinant(rng: &mut ChaCha8Rng) -> Outcome {
    let mut checked = 0;
    let mut zeros = 0;
    for n in 2..=5usize {
        for _ in 0..100 {
            let params = random_params(rng, n);
            for k in 1..=3 * n as i64 {
                let det = xi_n_matrix(&params, k).and_then(|m| m.det(n));
                let formula = det_formula(&params, k);
                match det {
                    Ok(d) if d == formula => {
                        checked += 1;
                        zeros += usize::from(d.is_zero());
                    }
                    _ => return outcome(false, format!("n={n} c={:?} k={k}", params.values())),
                }
            }
        }
    }
    outcome(true, format!("{checked} determinants, {zeros} vanishing"))
}

fn criterion_unit_triangular(samples: &[ExactParams]) -> Outcome {
    let mut checked = 0;
    for params in samples {
        let n = params.n();
        for k in 1 - n as i64..0 {
            let Ok(m) = build_fk(params, &default_t(n), k) else {
                return outcome(false, format!("F_{k} failed for c={:?}", params.values()));
            };
            let unit = m.diagonal().iter().all(Rational::is_one);
            if !(m.is_upper_triangular() && unit) {
                return outcome(false, format!("F_{k} for c={:?}", params.values()));
            }
            checked += 1;
        }
    }
    outcome(true, format!("{checked} matrices"))
}

fn criterion_transcription(samples: &[ExactParams], rng: &mut ChaCha8Rng) -> Outcome {
    let mut checked = 0;
    for params in samples {
        let n = params.n();
        // Both the distinguished t and a random one with t_{n−1} ≠ 0.
        let mut t: Vec<Rational> = (0..n).map(|_| random_rational(rng, 20)).collect();
        if t[n - 1].is_zero() {
            t[n - 1] = Rational::one();
        }
        for tt in [default_t(n), t] {
            for k in 1 - n as i64..0 {
                if build_fk(params, &tt, k).ok() != fk_by_action(params, &tt, k).ok() {
                    return outcome(false, format!("F_{k} c={:?} t={tt:?}", params.values()));
                }
                checked += 1;
            }
        }
        for k in 0..=3 * n as i64 {
            if build_dk(params, k).ok() != Some(dk_by_action(params, k)) {
                return outcome(false, format!("D_{k} c={:?}", params.values()));
            }
            checked += 1;
        }
    }
    outcome(true, format!("{checked} matrices"))
}

fn criterion_translate(rng: &mut ChaCha8Rng) -> Outcome {
    for _ in 0..200 {
        let n = rng.gen_range(2..=6usize);
        let params = integer_params(rng, n, 20);
        let Ok(out) = good_translate(&params) else {
            return outcome(false, format!("failed on {:?}", params.values()));
        };
        let congruent = (1..=n as i64).all(|i| (params.c(i) - out.c(i)).integer_quotient(n as i64).is_some());
        if !(in_f(&out, 0.0).in_f && congruent) {
            return outcome(false, format!("{:?} -> {:?}", params.values(), out.values()));
        }
    }
    outcome(true, "200 parameter vectors")
}

fn criterion_hecke_residuals(rng: &mut ChaCha8Rng) -> Outcome {
    let mut samples = Vec::new();
    for n in 2..=5usize {
        let (mut good, mut bad) = (0, 0);
        while good < 7 || bad < 7 {
            let p = integer_params(rng, n, 6);
            let member = in_f(&p, 0.0).in_f;
            if member && good < 7 {
                good += 1;
                samples.push(p);
            } else if !member && bad < 7 {
                bad += 1;
                samples.push(p);
            }
        }
        for _ in 0..6 {
            samples.push(random_params(rng, n));
        }
    }
    let worst = samples
        .par_iter()
        .map(|p| {
            let k_max = 3 * p.n() as i64;
            let a = check_annihilation(p, k_max).unwrap_or(f64::INFINITY);
            let c = check_commutation(p, k_max).unwrap_or(f64::INFINITY);
            a.max(c)
        })
        .reduce(|| 0.0, f64::max);
    outcome(worst < 1e-8, format!("{} parameter vectors, max residual {worst:.2e}", samples.len()))
}

fn criterion_eigenvalues(rng: &mut ChaCha8Rng) -> Outcome {
    let mut found = 0;
    let mut worst: f64 = 0.0;
    while found < 20 {
        let n = rng.gen_range(2..=5usize);
        let mut c: Vec<Rational> = (0..n - 1).map(|_| random_rational(rng, 50)).collect();
        c.push(Rational::zero());
        let params = ExactParams::new(n, c).expect("valid parameters");
        if !in_f(&params, 0.0).semisimple {
            continue;
        }
        found += 1;
        for j in 1..=n {
            match eigenvalue_on_standard(&params, j, 1e-9) {
                Ok(ev) => worst = worst.max((ev.0 - hecke_root(&params, j as i64).0).norm()),
                Err(e) => return outcome(false, format!("c={:?} j={j}: {e}", params.values())),
            }
        }
    }
    outcome(worst < 1e-10, format!("20 semisimple parameter vectors, max error {worst:.2e}"))
}

fn random_vector(rng: &mut ChaCha8Rng, tag: ModuleTag, n: usize) -> ModVector<CycloElem> {
    let mut v = ModVector::zero(tag, n);
    for _ in 0..rng.gen_range(1..=6) {
        let label = (rng.gen_range(0..3 * n), rng.gen_range(0..n));
        v.add_term(label, CycloElem::from_rational(random_rational(rng, 20), n));
    }
    v
}

fn criterion_relations(rng: &mut ChaCha8Rng, points: &[GridPoint]) -> Outcome {
    let mut checked = 0;
    for tag in [ModuleTag::Delta, ModuleTag::NablaM] {
        for _ in 0..50 {
            let n = rng.gen_range(2..=5usize);
            let params = random_params(rng, n);
            let alg: Cherednik<CycloElem> = Cherednik::new(&params);
            let v = random_vector(rng, tag, n);
            let q = CycloElem::root_of_unity(n, 1);
            let q_inv = CycloElem::root_of_unity(n, -1);
            let s = |w: &ModVector<CycloElem>| act(Generator::S, w, &params);
            let x = |w: &ModVector<CycloElem>| act(Generator::X, w, &params);
            let xi = |w: &ModVector<CycloElem>| act(Generator::Xi, w, &params);
            let rel1 = s(&xi(&v)).field_eq(&xi(&s(&v)).scale(&q), 0.0);
            let rel2 = s(&x(&v)).field_eq(&x(&s(&v)).scale(&q_inv), 0.0);
            let mut rhs = v.clone();
            for k in 0..n as i64 {
                let gamma = CycloElem::from_rational(params.c(k + 1) - params.c(k), n);
                rhs = rhs.plus(&act_pbw(alg.epsilon(k), &v, &params).scale(&gamma));
            }
            let rel3 = xi(&x(&v)).minus(&x(&xi(&v))).field_eq(&rhs, 0.0);
            if !(rel1 && rel2 && rel3) {
                return outcome(
                    false,
                    format!("{tag:?} n={n} c={:?}: relations {rel1} {rel2} {rel3}", params.values()),
                );
            }
            checked += 3;
        }
    }
    if let Some(p) = points.iter().find(|p| p.semisimple && !p.in_f) {
        return outcome(false, format!("semisimple but not in F: {}", p.label));
    }
    let semisimple = points.iter().filter(|p| p.semisimple).count();
    outcome(true, format!("{checked} relation checks; {semisimple} semisimple grid points all in F"))
}

fn criterion_scan_agreement(grid_params: &[ExactParams]) -> Outcome {
    let failures: Vec<(String, String)> = grid_params
        .par_iter()
        .filter_map(|p| scan_agreement(p).err().map(|e| (format!("{:?}", p.values()), e)))
        .collect();
    match failures.first() {
        None => outcome(true, format!("{} parameter vectors", grid_params.len())),
        Some((c, e)) => outcome(false, format!("{} failures, first c={c}: {e}", failures.len())),
    }
}

/// Checks that each generated grid basis is where the suite expects.
fn sanity() {
    assert_eq!(graded_basis(ModuleTag::Delta, 0, 2), vec![(1, 1), (0, 0)]);
}

fn main() {
    sanity();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut results: Vec<(usize, &str, Outcome, f64)> = Vec::new();
    let run = |id: usize, name: &'static str, f: &mut dyn FnMut() -> Outcome, results: &mut Vec<_>| {
        let start = Instant::now();
        let o = f();
        let secs = start.elapsed().as_secs_f64();
        println!(
            "{} [{id:>2}] {name}: {} ({secs:.1}s)",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        results.push((id, name, o, secs));
    };

    let grid_params: Vec<ExactParams> = (2..=5usize).flat_map(grid).collect();
    let mut points = Vec::new();

    let samples: Vec<ExactParams> = (2..=5usize)
        .flat_map(|n| (0..100).map(move |_| n))
        .map(|n| random_params(&mut rng, n))
        .collect();

    run(1, "generation by psi <=> c in F <=> dim End = n", &mut || {
        points = grid_params.par_iter().map(evaluate_grid_point).collect();
        criterion_grid_equivalence(&points)
    }, &mut results);
    run(2, "xi^j x commutation identity", &mut || criterion_commutation_identity(&mut rng), &mut results);
    run(3, "determinant of xi^n maps", &mut || criterion_determinant(&mut rng), &mut results);
    run(4, "F_k unit upper triangular for t = e_(n-1)", &mut || criterion_unit_triangular(&samples), &mut results);
    let mut rng5 = ChaCha8Rng::seed_from_u64(5);
    run(5, "F_k, D_k closed forms equal action matrices", &mut || criterion_transcription(&samples, &mut rng5), &mut results);
    run(6, "translation into F", &mut || criterion_translate(&mut rng), &mut results);
    run(7, "Hecke annihilation and commutation residuals", &mut || criterion_hecke_residuals(&mut rng), &mut results);
    run(8, "eta eigenvalues on standard modules", &mut || criterion_eigenvalues(&mut rng), &mut results);
    run(9, "defining relations; semisimple => in F", &mut || criterion_relations(&mut rng, &points), &mut results);
    run(10, "D_k criterion vs determinants; End kernel sum vs direct", &mut || criterion_scan_agreement(&grid_params), &mut results);

    let failed = results.iter().filter(|(_, _, o, _)| !o.pass).count();
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
