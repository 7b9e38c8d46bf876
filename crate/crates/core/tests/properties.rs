use cherednik::algebra::{Cherednik, Letter, PBWElement};
use cherednik::criteria::{build_fk, default_t, good_translate, in_f, is_semisimple};
use cherednik::endo::{end_dim, end_dim_by_scan};
use cherednik::homspace::{delta_to_nabla_hom, is_module_map};
use cherednik::modules::{act, act_pbw, Generator, ModVector, ModuleTag};
use cherednik::scalars::cyclotomic_polynomial;
use cherednik::{ComplexF, CycloElem, ExactParams, Rational};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(p, q)| Rational::new(p, q))
}

fn params_with(n: usize, entry: impl Strategy<Value = Rational>) -> impl Strategy<Value = ExactParams> {
    proptest::collection::vec(entry, n - 1).prop_map(move |mut c| {
        c.push(Rational::zero());
        ExactParams::new(n, c).unwrap()
    })
}

fn any_params(max_n: usize) -> impl Strategy<Value = ExactParams> {
    (2..=max_n).prop_flat_map(|n| {
        prop_oneof![params_with(n, rational()), params_with(n, (-5i64..=5).prop_map(Rational::from))]
    })
}

fn integer_params(max_n: usize) -> impl Strategy<Value = ExactParams> {
    (2..=max_n).prop_flat_map(|n| params_with(n, (-5i64..=5).prop_map(Rational::from)))
}

fn cyclo(n: usize) -> impl Strategy<Value = CycloElem> {
    proptest::collection::vec(rational(), n).prop_map(|c| CycloElem::from_coeffs(c).unwrap())
}

fn close(a: ComplexF, b: ComplexF) -> bool {
    (a.0 - b.0).norm() <= 1e-9 * (1.0 + b.0.norm())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cyclotomic_ring_laws((a, b, c) in (1usize..7).prop_flat_map(|n| (cyclo(n), cyclo(n), cyclo(n)))) {
        let ab = a.checked_mul(&b).unwrap();
        prop_assert_eq!(&ab, &b.checked_mul(&a).unwrap());
        prop_assert_eq!(ab.checked_mul(&c).unwrap(), a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap());
        let distributed = a.checked_mul(&b).unwrap().checked_add(&a.checked_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(a.checked_mul(&b.checked_add(&c).unwrap()).unwrap(), distributed);
        prop_assert!(close(ab.embed(), ComplexF(a.embed().0 * b.embed().0)));
        prop_assert!(close(a.checked_add(&b).unwrap().embed(), ComplexF(a.embed().0 + b.embed().0)));
    }

    #[test]
    fn vanishing_matches_embedding(n in 1usize..9, k in 0i64..9, coeffs in proptest::collection::vec(-3i64..=3, 0..9)) {
        // Multiples of Φ_n vanish; vanishing elements embed to zero.
        let phi = cyclotomic_polynomial(n);
        let mut acc = CycloElem::zero(n);
        for (e, a) in phi.iter().enumerate() {
            let term = CycloElem::zeta_pow(n, k + e as i64).scale(&Rational::from(a.clone()));
            acc = acc.checked_add(&term).unwrap();
        }
        prop_assert!(acc.vanishes());
        let mut v = CycloElem::zero(n);
        for (e, a) in coeffs.iter().enumerate() {
            v = v.checked_add(&CycloElem::zeta_pow(n, e as i64).scale(&Rational::from(*a))).unwrap();
        }
        prop_assert_eq!(v.vanishes(), v.embed().0.norm() < 1e-9);
    }

    #[test]
    fn normal_form_is_independent_of_rewrite_order(
        params in any_params(4),
        word_seed in proptest::collection::vec(0usize..1000, 1..7),
        choices in proptest::collection::vec(0usize..1000, 64),
    ) {
        let n = params.n();
        let alg: Cherednik<CycloElem> = Cherednik::new(&params);
        let word: Vec<Letter> = word_seed
            .iter()
            .map(|&r| match r % 3 {
                0 => Letter::X,
                1 => Letter::Xi,
                _ if n > 1 => Letter::S(1 + r % (n - 1)),
                _ => Letter::X,
            })
            .collect();
        let leftmost = alg.normal_order(&word, CycloElem::one(n));
        let mut i = 0;
        let other = alg.normal_order_with(vec![(word.clone(), CycloElem::one(n))], &mut |k| {
            i += 1;
            choices[i % choices.len()] % k
        });
        prop_assert!(leftmost.field_eq(&other, 0.0));
        let last = alg.normal_order_with(vec![(word, CycloElem::one(n))], &mut |k| k - 1);
        prop_assert!(leftmost.field_eq(&last, 0.0));
    }

    #[test]
    fn multiplication_is_associative(
        params in any_params(3),
        words in proptest::collection::vec(proptest::collection::vec(0usize..100, 1..4), 3),
    ) {
        let n = params.n();
        let alg: Cherednik<CycloElem> = Cherednik::new(&params);
        let elems: Vec<PBWElement<CycloElem>> = words
            .iter()
            .map(|w| {
                let letters: Vec<Letter> = w.iter().map(|&r| match r % 3 {
                    0 => Letter::X,
                    1 => Letter::Xi,
                    _ => Letter::S(1 + r % (n - 1)),
                }).collect();
                alg.normal_order(&letters, CycloElem::one(n))
            })
            .collect();
        let left = alg.mul(&alg.mul(&elems[0], &elems[1]), &elems[2]);
        let right = alg.mul(&elems[0], &alg.mul(&elems[1], &elems[2]));
        prop_assert!(left.field_eq(&right, 0.0));
    }

    #[test]
    fn module_action_respects_products(
        params in any_params(4),
        nabla in any::<bool>(),
        a_word in proptest::collection::vec(0usize..100, 1..4),
        b_word in proptest::collection::vec(0usize..100, 1..4),
        label in (0usize..8, 0usize..4),
    ) {
        let n = params.n();
        let tag = if nabla { ModuleTag::NablaM } else { ModuleTag::Delta };
        let alg: Cherednik<CycloElem> = Cherednik::new(&params);
        let to_letters = |w: &[usize]| -> Vec<Letter> {
            w.iter().map(|&r| match r % 3 {
                0 => Letter::X,
                1 => Letter::Xi,
                _ => Letter::S(1 + r % (n - 1)),
            }).collect()
        };
        let a = alg.normal_order(&to_letters(&a_word), CycloElem::one(n));
        let b = alg.normal_order(&to_letters(&b_word), CycloElem::one(n));
        let v: ModVector<CycloElem> = ModVector::basis(tag, n, (label.0, label.1 % n));
        let lhs = act_pbw(&alg.mul(&a, &b), &v, &params);
        let rhs = act_pbw(&a, &act_pbw(&b, &v, &params), &params);
        prop_assert!(lhs.field_eq(&rhs, 0.0));
    }

    #[test]
    fn generators_shift_degree(params in any_params(4), label in (0usize..8, 0usize..4), nabla in any::<bool>()) {
        let n = params.n();
        let tag = if nabla { ModuleTag::NablaM } else { ModuleTag::Delta };
        let v: ModVector<CycloElem> = ModVector::basis(tag, n, (label.0, label.1 % n));
        let d = v.homogeneous_degree().unwrap();
        for g in Generator::ALL {
            let w = act(g, &v, &params);
            if !w.is_zero() {
                prop_assert_eq!(w.homogeneous_degree(), Some(d + g.degree()));
            }
        }
    }

    #[test]
    fn translation_lands_in_f_and_fixes_members(params in integer_params(6)) {
        let out = good_translate(&params).unwrap();
        prop_assert!(in_f(&out, 0.0).in_f);
        prop_assert_eq!(good_translate(&out).unwrap(), out);
    }

    #[test]
    fn semisimple_parameters_are_good(params in any_params(5)) {
        if is_semisimple(&params, 0.0) {
            prop_assert!(in_f(&params, 0.0).in_f);
        }
    }

    #[test]
    fn fk_is_unit_upper_triangular(params in any_params(5)) {
        let n = params.n();
        for k in 1 - n as i64..0 {
            let m = build_fk(&params, &default_t(n), k).unwrap();
            prop_assert!(m.is_upper_triangular());
            prop_assert!(m.diagonal().iter().all(Rational::is_one));
        }
    }

    #[test]
    fn endomorphisms_detect_membership(params in integer_params(4)) {
        let n = params.n();
        let end = end_dim(&params).unwrap();
        prop_assert_eq!(end.dim_end == n, in_f(&params, 0.0).in_f);
        let top = end.critical_ks.last().map(|(k, _)| *k).unwrap_or(1);
        prop_assert_eq!(end.dim_end, end_dim_by_scan(&params, top));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn hom_is_a_module_map_and_matches_membership(params in integer_params(4)) {
        let n = params.n();
        let hom = delta_to_nabla_hom(&params, &default_t(n), 2 * n as i64).unwrap();
        prop_assert_eq!(hom.iso, in_f(&params, 0.0).in_f);
        prop_assert!(is_module_map::<CycloElem>(&hom, &params, 0.0));
    }
}
