use crystal_sieve::cartan::{gl_weight, CartanDatum, CartanType, PairingKind, Weight};
use crystal_sieve::csp::{aa_criterion, csp_check};
use crystal_sieve::qdim::{congruence, principal_specialization, qdim, weyl_dim};
use crystal_sieve::qpoly::{
    cyclotomic, divisors, eval_root_of_unity, mobius, orbit_basis_decompose, Evaluation, IntPoly,
};
use crystal_sieve::tableaux::{enumerate_ssyt, Action, Tableau};
use crystal_sieve::Partition;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn poly_strategy(max_len: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-20i64..=20, 0..max_len).prop_map(|c| IntPoly::from_i64(&c))
}

fn partition_strategy(max_len: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn float_eval(f: &IntPoly, n: u64, j: i64) -> (f64, f64) {
    let theta = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
    f.coeffs().iter().enumerate().fold((0.0, 0.0), |(re, im), (k, c)| {
        let c = c.to_f64().unwrap();
        let a = theta * k as f64;
        (re + c * a.cos(), im + c * a.sin())
    })
}

proptest! {
    #[test]
    fn ring_axioms(f in poly_strategy(8), g in poly_strategy(8), h in poly_strategy(8)) {
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f - &g) + &g, f.clone());
        prop_assert_eq!(&f * &IntPoly::one(), f);
    }

    #[test]
    fn remainder_is_congruent(f in poly_strategy(30), d in 1u64..=24) {
        let phi = cyclotomic(d);
        let r = f.rem_mod(&phi).unwrap();
        prop_assert!(r.degree().is_none_or(|k| k < phi.degree().unwrap()));
        let (q, r2) = f.div_rem_monic(&phi).unwrap();
        prop_assert_eq!(&r, &r2);
        prop_assert_eq!(&(&q * &phi) + &r, f);
    }

    #[test]
    fn fold_matches_cyclotomic_remainders(f in poly_strategy(40), n in 1usize..=12) {
        // q^n - 1 = Π_{d|n} Φ_d, so both sides agree modulo each factor
        let folded = f.rem_q_pow_minus_one(n);
        for d in divisors(n as u64) {
            let phi = cyclotomic(d);
            prop_assert_eq!(folded.rem_mod(&phi).unwrap(), f.rem_mod(&phi).unwrap());
        }
    }

    #[test]
    fn root_of_unity_values_match_floats(f in poly_strategy(20), n in 1u64..=12, j in -30i64..30) {
        let (re, im) = float_eval(&f, n, j);
        match eval_root_of_unity(&f, n, j) {
            Evaluation::Integer(v) => {
                prop_assert!((re - v.to_f64().unwrap()).abs() < 1e-6);
                prop_assert!(im.abs() < 1e-6);
            }
            Evaluation::NonRational => {
                let rounded = re.round();
                prop_assert!(im.abs() > 1e-6 || (re - rounded).abs() > 1e-6);
            }
        }
    }

    #[test]
    fn decomposition_reconstructs(coeffs in prop::collection::btree_map(1u64..=12, -5i64..=5, 0..6), n in 1u64..=12) {
        let mut expected = IntPoly::zero();
        let mut kept = std::collections::BTreeMap::new();
        for (d, c) in coeffs {
            if n % d == 0 && c != 0 {
                expected = &expected + &(&IntPoly::orbit_basis(n, d) * &IntPoly::from_i64(&[c]));
                kept.insert(d, BigInt::from(c));
            }
        }
        let dec = orbit_basis_decompose(&expected, n).unwrap();
        prop_assert_eq!(dec.reconstruct(), expected);
        prop_assert_eq!(dec.coeffs.into_iter().filter(|(_, v)| *v != BigInt::from(0)).collect::<std::collections::BTreeMap<_, _>>(), kept);
    }

    #[test]
    fn aa_certificate_from_orbits(counts in prop::collection::vec(0i64..=4, 6)) {
        // a residue built from nonnegative orbit counts is always certified
        let n = 12u64;
        let divs = divisors(n);
        let mut f = IntPoly::zero();
        for (d, &c) in divs.iter().zip(&counts) {
            f = &f + &(&IntPoly::orbit_basis(n, *d) * &IntPoly::from_i64(&[c]));
        }
        let cert = aa_criterion(&f, n);
        prop_assert!(cert.exists);
        for (d, &c) in divs.iter().zip(&counts) {
            prop_assert_eq!(&cert.orbit_weights[d], &BigInt::from(c * *d as i64));
        }
    }

    #[test]
    fn gcd_one_regime(lambda in partition_strategy(2, 4), m in 2usize..=4) {
        prop_assume!(lambda.len() < m);
        prop_assume!(num_integer::gcd(lambda.size(), m as u64) == 1);
        let r = csp_check(&lambda, m, Action::C, None, None).unwrap();
        prop_assert!(r.verdict);
        prop_assert!(r.census.by_size.keys().all(|&d| d == m as u64));
    }

    #[test]
    fn stretched_congruence(lambda in partition_strategy(3, 3), m in 2usize..=4, n in 1u64..=4) {
        prop_assume!(lambda.len() <= m);
        let stretched = Partition::new(lambda.parts().iter().map(|&p| p * n as u32).collect()).unwrap();
        let datum = CartanDatum::gl(m).unwrap();
        let weight = gl_weight(&stretched, m).unwrap();
        let r = congruence(&datum, &weight, n, PairingKind::Form).unwrap();
        let f = principal_specialization(&stretched, m).unwrap();
        prop_assert_eq!(&f.rem_q_pow_minus_one(n as usize), &r.residue);
        prop_assert!(aa_criterion(&f, n).exists);
    }

    #[test]
    fn weyl_dimension_is_qdim_at_one(idx in 0usize..11, coords in prop::collection::vec(0i64..=3, 4)) {
        let t = CartanType::all_up_to_rank(4)[idx];
        let datum = CartanDatum::new(t);
        let w = Weight::new(coords[..t.rank].to_vec());
        let q = qdim(&datum, &w).unwrap();
        prop_assert_eq!(q.eval_one(), weyl_dim(&datum, &w).unwrap());
        prop_assert!(q.is_palindromic());
        prop_assert!(q.has_nonnegative_coeffs());
    }
}

#[test]
fn mobius_sums_vanish() {
    for n in 2..200u64 {
        let s: i32 = divisors(n).into_iter().map(mobius).sum();
        assert_eq!(s, 0, "n = {n}");
    }
}

fn all_tableaux(max_size: u32, m: usize) -> Vec<Tableau> {
    (0..=max_size)
        .flat_map(|n| Partition::all_of_size(n, m))
        .flat_map(|l| enumerate_ssyt(&l, m).unwrap())
        .collect()
}

#[test]
fn promotion_and_c_orders() {
    for m in 2..=4 {
        for t in all_tableaux(5, m) {
            let c = (0..m).try_fold(t.clone(), |u, _| u.c_action()).unwrap();
            assert_eq!(c, t);
            for i in 1..m {
                assert_eq!(t.bender_knuth(i).bender_knuth(i), t);
            }
        }
    }
}

#[test]
fn c_rotates_content() {
    for m in 2..=4 {
        for t in all_tableaux(6, m) {
            let c = t.c_action().unwrap();
            let mut rotated = t.content();
            rotated.rotate_right(1);
            assert_eq!(c.content(), rotated, "{t}");
        }
    }
}
