//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use crystal_sieve::cartan::{gl_weight, CartanDatum, CartanType, PairingKind, Weight};
use crystal_sieve::csp::{
    aa_criterion, census_vs_a, csp_report, orbit_formula, rect_characterization,
};
use crystal_sieve::qdim::{
    congruence, divisibility_condition, principal_specialization, qdim, qdim_dual, qdim_with,
    schur_specialization, weyl_dim, CongruenceResult,
};
use crystal_sieve::qpoly::{divisors, eval_root_of_unity, is_prime, Evaluation, IntPoly};
use crystal_sieve::tableaux::{
    enumerate_ssyt, kostka, m_core, specialization_by_enumeration, Action, ActionPermutation,
    Tableau,
};
use crystal_sieve::Partition;
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn big_map(pairs: &[(u64, i64)]) -> BTreeMap<u64, BigInt> {
    pairs.iter().map(|&(d, v)| (d, BigInt::from(v))).collect()
}

fn poly(c: &[i64]) -> IntPoly {
    IntPoly::from_i64(c)
}

fn lam(s: &str) -> Partition {
    s.parse().unwrap()
}

fn fail<E: std::fmt::Display>(ctx: impl std::fmt::Display) -> impl FnOnce(E) -> String {
    move |e| format!("{ctx}: {e}")
}

/// Partitions with `|λ| ≤ max_size` and `ℓ(λ) ≤ max_len`, empty partition included.
fn shapes(max_size: u32, max_len: usize) -> Vec<Partition> {
    (0..=max_size)
        .flat_map(|n| Partition::all_of_size(n, max_len))
        .collect()
}

/// Checks the residue against the orbit sum, `f mod (q^n - 1)` and the
/// orbit-count certificate.
fn certify(r: &CongruenceResult, f: &IntPoly, ctx: &str) -> std::result::Result<(), String> {
    ensure!(r.orbit_sum() == r.residue, "{ctx}: orbit sum {} ≠ residue {}", r.orbit_sum(), r.residue);
    let direct = f.rem_q_pow_minus_one(r.n as usize);
    ensure!(direct == r.residue, "{ctx}: f mod q^n-1 = {direct}, residue {}", r.residue);
    let cert = aa_criterion(&r.residue, r.n);
    ensure!(cert.exists, "{ctx}: no orbit certificate ({cert:?})");
    for (&k, a) in &r.a {
        ensure!(
            cert.orbit_weights[&k] == BigInt::from(k) * a,
            "{ctx}: Möbius sum at {k} is {}, expected {k}·{a}",
            cert.orbit_weights[&k]
        );
    }
    Ok(())
}

fn criterion_1() -> Check {
    let f = principal_specialization(&lam("4"), 3).map_err(fail("specialization"))?;
    let expected = poly(&[1, 1, 2, 2, 3, 2, 2, 1, 1]);
    ensure!(f == expected, "principal specialization {f}");
    let datum = CartanDatum::gl(3).map_err(fail("gl3"))?;
    let weight = gl_weight(&lam("4"), 3).map_err(fail("weight"))?;
    let q = qdim(&datum, &weight).map_err(fail("qdim"))?;
    ensure!(q == expected, "qdim {q}");
    let r = congruence(&datum, &weight, 4, PairingKind::Form).map_err(fail("congruence"))?;
    ensure!(r.b == big_map(&[(1, 1), (2, 3), (4, 15)]), "b = {:?}", r.b);
    ensure!(r.a == big_map(&[(1, 1), (2, 1), (4, 3)]), "a = {:?}", r.a);
    let residue = poly(&[1]) + poly(&[1, 0, 1]) + poly(&[3, 3, 3, 3]);
    ensure!(r.residue == residue, "residue {}", r.residue);
    certify(&r, &q, "gl3")?;
    Ok(format!("f = {f}, residue {residue}"))
}

fn criterion_2() -> Check {
    let datum = CartanDatum::from_name("B2").map_err(fail("B2"))?;
    let weight = Weight::new(vec![2, 0]);
    let q = qdim(&datum, &weight).map_err(fail("qdim"))?;
    ensure!(q == poly(&[1, 0, 1, 1, 2, 1, 2, 1, 2, 1, 1, 0, 1]), "qdim {q}");
    let qv = qdim_dual(&datum, &weight).map_err(fail("qdim dual"))?;
    ensure!(qv == poly(&[1, 1, 2, 2, 2, 2, 2, 1, 1]), "dual qdim {qv}");

    let r = congruence(&datum, &weight, 2, PairingKind::Form).map_err(fail("congruence"))?;
    ensure!(r.residue == poly(&[10, 4]), "residue {}", r.residue);
    ensure!(r.b == big_map(&[(1, 6), (2, 14)]), "b = {:?}", r.b);
    ensure!(r.a == big_map(&[(1, 6), (2, 4)]), "a = {:?}", r.a);
    certify(&r, &q, "B2")?;

    let rv = congruence(&datum, &weight, 2, PairingKind::Coroot).map_err(fail("dual congruence"))?;
    ensure!(rv.residue == poly(&[8, 6]), "dual residue {}", rv.residue);
    ensure!(rv.b == big_map(&[(1, 2), (2, 14)]), "dual b = {:?}", rv.b);
    ensure!(rv.a == big_map(&[(1, 2), (2, 6)]), "dual a = {:?}", rv.a);
    certify(&rv, &qv, "B2 dual")?;
    Ok("qdim, dual qdim, residues 10+4q and 8+6q".into())
}

fn weights(rank: usize, values: &[i64]) -> Vec<Vec<i64>> {
    (0..rank).fold(vec![vec![]], |acc, _| {
        acc.into_iter()
            .flat_map(|w| {
                values.iter().map(move |&v| {
                    let mut w = w.clone();
                    w.push(v);
                    w
                })
            })
            .collect()
    })
}

fn criterion_3() -> Check {
    let mut instances = 0;
    for t in CartanType::all_up_to_rank(4) {
        let datum = CartanDatum::new(t);
        for base in weights(t.rank, &[0, 1, 2]) {
            for n in 1..=6u64 {
                let weight = Weight::new(base.clone()).scaled(n as i64);
                let dim = weyl_dim(&datum, &weight).map_err(fail(format!("{t} {weight}")))?;
                for kind in [PairingKind::Form, PairingKind::Coroot] {
                    let ctx = format!("{t} Λ = {weight} n = {n} {kind:?}");
                    let r = congruence(&datum, &weight, n, kind).map_err(fail(&ctx))?;
                    ensure!(r.a.values().all(|a| *a >= BigInt::from(0)), "{ctx}: a = {:?}", r.a);
                    ensure!(r.weighted_orbit_total() == dim, "{ctx}: Σ d a_d ≠ {dim}");
                    let f = qdim_with(&datum, &weight, kind).map_err(fail(&ctx))?;
                    ensure!(f.eval_one() == dim, "{ctx}: qdim(1) ≠ {dim}");
                    certify(&r, &f, &ctx)?;
                    instances += 1;
                }
            }
        }
    }
    Ok(format!("{instances} congruences"))
}

fn check_tableau(t: &Tableau, m: usize) -> std::result::Result<(), String> {
    let content = t.content();
    for i in 1..m {
        let pairing = content[i - 1] as i64 - content[i] as i64;
        ensure!(
            t.phi(i) as i64 - t.epsilon(i) as i64 == pairing && t.weight_pairing(i) == pairing,
            "{t}: φ_{i} - ε_{i} ≠ {pairing}"
        );
        if let Some(u) = t.f(i) {
            ensure!(u.is_semistandard(), "{t}: f_{i} gives {u}");
            ensure!(u.e(i).as_ref() == Some(t), "{t}: e_{i} f_{i} ≠ id");
            ensure!(u.phi(i) + 1 == t.phi(i) && u.epsilon(i) == t.epsilon(i) + 1, "{t}: f_{i} string");
            let c = u.content();
            ensure!(c[i - 1] + 1 == content[i - 1] && c[i] == content[i] + 1, "{t}: f_{i} weight");
        } else {
            ensure!(t.phi(i) == 0, "{t}: f_{i} undefined but φ > 0");
        }
        if let Some(u) = t.e(i) {
            ensure!(u.f(i).as_ref() == Some(t), "{t}: f_{i} e_{i} ≠ id");
        } else {
            ensure!(t.epsilon(i) == 0, "{t}: e_{i} undefined but ε > 0");
        }
        let s = t.weyl_s(i).map_err(fail(t))?;
        let mut swapped = content.clone();
        swapped.swap(i - 1, i);
        ensure!(s.content() == swapped, "{t}: s_{i} weight");
        ensure!(s.weyl_s(i).map_err(fail(t))? == *t, "{t}: s_{i}² ≠ id");
        for j in i + 1..m {
            let sj = |u: &Tableau| u.weyl_s(j);
            let si = |u: &Tableau| u.weyl_s(i);
            if j == i + 1 {
                let lhs = si(&sj(&si(t).map_err(fail(t))?).map_err(fail(t))?).map_err(fail(t))?;
                let rhs = sj(&si(&sj(t).map_err(fail(t))?).map_err(fail(t))?).map_err(fail(t))?;
                ensure!(lhs == rhs, "{t}: braid relation at ({i}, {j})");
            } else {
                let lhs = si(&sj(t).map_err(fail(t))?).map_err(fail(t))?;
                let rhs = sj(&si(t).map_err(fail(t))?).map_err(fail(t))?;
                ensure!(lhs == rhs, "{t}: s_{i} s_{j} ≠ s_{j} s_{i}");
            }
        }
    }
    let mut u = t.clone();
    for _ in 0..m {
        u = u.c_action().map_err(fail(t))?;
    }
    ensure!(u == *t, "{t}: c^{m} ≠ id");
    Ok(())
}

fn criterion_4() -> Check {
    let mut count = 0usize;
    for m in 1..=4usize {
        for lambda in shapes(8, m) {
            let all = enumerate_ssyt(&lambda, m).map_err(fail(&lambda))?;
            for t in &all {
                check_tableau(t, m)?;
            }
            count += all.len();
            let mut fixed = Vec::new();
            for t in &all {
                if t.c_action().map_err(fail(t))? == *t {
                    fixed.push(t);
                }
            }
            let uniform: Vec<&Tableau> = all
                .iter()
                .filter(|t| t.content().windows(2).all(|w| w[0] == w[1]))
                .collect();
            ensure!(fixed == uniform, "{lambda}, m = {m}: c-fixed points ≠ uniform-content tableaux");
            let expected = if lambda.size() % m as u64 == 0 {
                kostka(&lambda, &vec![(lambda.size() / m as u64) as u32; m]).map_err(fail(&lambda))?
            } else {
                0
            };
            ensure!(fixed.len() as u64 == expected, "{lambda}, m = {m}: {} fixed, Kostka {expected}", fixed.len());
        }
    }
    Ok(format!("{count} tableaux"))
}

/// Sweep of nonempty shapes with `m | |λ|`, `ℓ(λ) < m`, `|λ| ≤ 12`, `m ∈ {2, 3, 4}`.
fn divisible_sweep() -> Vec<(Partition, usize)> {
    let mut out = Vec::new();
    for m in 2..=4usize {
        for lambda in shapes(12, m - 1) {
            if !lambda.is_empty() && lambda.size() % m as u64 == 0 {
                out.push((lambda, m));
            }
        }
    }
    out
}

fn criterion_5() -> Check {
    let mut holds = 0;
    let mut shifted_agree = 0;
    let sweep = divisible_sweep();
    for (lambda, m) in &sweep {
        let r = rect_characterization(lambda, *m).map_err(fail(format!("{lambda}, m = {m}")))?;
        ensure!(r.agree, "{lambda}, m = {m}: CSP {} but shape predicate {}", r.csp, r.predicted);
        if r.csp {
            holds += 1;
        }
        // the normalised polynomial gives the same verdict
        let perm = ActionPermutation::new(lambda, *m, Action::C, u64::MAX).map_err(fail(lambda))?;
        let f = principal_specialization(lambda, *m).map_err(fail(lambda))?;
        let report = csp_report(&perm, &f, *m as u64);
        ensure!(report.verdict == r.csp, "{lambda}, m = {m}: normalised verdict {}", report.verdict);
        shifted_agree += 1;
        if report.verdict {
            let cert = aa_criterion(&f, *m as u64);
            ensure!(cert.exists, "{lambda}, m = {m}: no certificate");
            for (&k, w) in &cert.orbit_weights {
                let expected = BigInt::from(k * report.census.orbits_of_size(k));
                ensure!(*w == expected, "{lambda}, m = {m}: Möbius sum at {k} is {w}");
            }
        }
    }
    Ok(format!("{} shapes, {holds} with CSP, {shifted_agree} normalised agree", sweep.len()))
}

fn criterion_6() -> Check {
    let mut cells = 0;
    for m in 2..=4usize {
        for a in 1..=3u32 {
            let width = a * m as u32;
            let row = Partition::new(vec![width]).unwrap();
            let tall = Partition::rectangle(width, m - 1);
            let census_row = crystal_sieve::tableaux::orbit_census(&row, m, Action::C).map_err(fail(&row))?;
            let census_tall = crystal_sieve::tableaux::orbit_census(&tall, m, Action::C).map_err(fail(&tall))?;
            ensure!(census_row.by_size == census_tall.by_size, "a = {a}, m = {m}: censuses differ");
            for d in divisors(m as u64) {
                let formula = orbit_formula(a as u64, d).map_err(fail(d))?;
                ensure!(
                    BigInt::from(census_row.orbits_of_size(d)) == formula,
                    "a = {a}, m = {m}, d = {d}: census {} vs formula {formula}",
                    census_row.orbits_of_size(d)
                );
                if d == 2 {
                    ensure!(formula == BigInt::from(a), "#Orb² ≠ a");
                }
                if d == 3 {
                    ensure!(formula == BigInt::from(3 * a * (a + 1) / 2), "#Orb³ ≠ 3a(a+1)/2");
                }
            }
            ensure!(
                census_row.by_size.keys().all(|d| m as u64 % d == 0),
                "a = {a}, m = {m}: orbit size not dividing m"
            );
            cells += 1;
        }
    }
    for a in 1..=20u64 {
        ensure!(orbit_formula(a, 2).unwrap() == BigInt::from(a), "#Orb² at a = {a}");
        ensure!(orbit_formula(a, 3).unwrap() == BigInt::from(3 * a * (a + 1) / 2), "#Orb³ at a = {a}");
    }
    Ok(format!("{cells} (a, m) cells"))
}

fn criterion_7() -> Check {
    let mut count = 0;
    let mut tally = [0usize; 3];
    for m in 1..=4usize {
        for lambda in shapes(8, m) {
            let s = schur_specialization(&lambda, m).map_err(fail(&lambda))?;
            let value = eval_root_of_unity(&s, m as u64, 1);
            let core = m_core(&lambda, m).map_err(fail(&lambda))?;
            let expected = if core.is_empty {
                i64::from(core.sign.ok_or(format!("{lambda}: empty core without sign"))?)
            } else {
                0
            };
            ensure!(
                value == Evaluation::Integer(BigInt::from(expected)),
                "{lambda}, m = {m}: value {value:?}, core {} sign {:?}",
                core.core,
                core.sign
            );
            tally[(expected + 1) as usize] += 1;
            count += 1;
        }
    }
    Ok(format!("{count} shapes (−1: {}, 0: {}, 1: {})", tally[0], tally[1], tally[2]))
}

fn criterion_8() -> Check {
    let mut with_condition = 0;
    let mut prime_cases = 0;
    for (lambda, m) in divisible_sweep() {
        let ctx = format!("{lambda}, m = {m}");
        let cmp = census_vs_a(&lambda, m, Action::C).map_err(fail(&ctx))?;
        let datum = CartanDatum::gl(m).map_err(fail(&ctx))?;
        let weight = gl_weight(&lambda, m).map_err(fail(&ctx))?;
        let n = m as u64;
        let condition = divisibility_condition(&datum, &weight, n, PairingKind::Form).map_err(fail(&ctx))?;
        ensure!(condition == cmp.condition_holds, "{ctx}: condition flag");
        if !condition {
            continue;
        }
        with_condition += 1;
        ensure!(cmp.csp_verdict == cmp.census_matches, "{ctx}: verdict {} vs census {}", cmp.csp_verdict, cmp.census_matches);
        let highest = datum.rho_values(PairingKind::Form).last().copied().unwrap_or(0);
        if is_prime(n) && (highest as u64) < n {
            let fixed = cmp.census.fixed_count(n);
            let fixed_by_generator = cmp.census.orbits_of_size(1);
            ensure!(
                cmp.csp_verdict == (fixed_by_generator == 1),
                "{ctx}: verdict {} with {fixed_by_generator} fixed points ({fixed} tableaux)",
                cmp.csp_verdict
            );
            prime_cases += 1;
        }
    }
    Ok(format!("{with_condition} instances under the condition, {prime_cases} with prime n"))
}

fn criterion_9() -> Check {
    let mut compared = 0;
    for m in 2..=4usize {
        for a in 1..=4u32 {
            for lambda in [Partition::new(vec![a]).unwrap(), Partition::rectangle(a, m - 1)] {
                for t in enumerate_ssyt(&lambda, m).map_err(fail(&lambda))? {
                    let c = t.c_action().map_err(fail(&t))?;
                    let p = t.promotion();
                    ensure!(c == p, "{t} (m = {m}): c gives {c}, pr gives {p}");
                    compared += 1;
                }
            }
        }
        for a in 1..=3u32 {
            for b in 1..=3usize.min(m) {
                let lambda = Partition::rectangle(a, b);
                for t in enumerate_ssyt(&lambda, m).map_err(fail(&lambda))? {
                    let u = (0..m).fold(t.clone(), |u, _| u.promotion());
                    ensure!(u == t, "{t} (m = {m}): pr^{m} ≠ id");
                }
            }
        }
    }
    Ok(format!("{compared} tableaux with c = pr"))
}

fn criterion_10() -> Check {
    let mut count = 0;
    for m in 2..=4usize {
        let datum = CartanDatum::gl(m).map_err(fail(m))?;
        for lambda in shapes(8, m) {
            let weight = gl_weight(&lambda, m).map_err(fail(&lambda))?;
            let a = qdim(&datum, &weight).map_err(fail(&lambda))?;
            let b = principal_specialization(&lambda, m).map_err(fail(&lambda))?;
            let c = specialization_by_enumeration(&lambda, m).map_err(fail(&lambda))?;
            ensure!(a == b && b == c, "{lambda}, m = {m}: {a} / {b} / {c}");
            count += 1;
        }
    }
    Ok(format!("{count} shapes"))
}

fn run(n: usize, name: &str, f: fn() -> Check, failed: &mut Vec<usize>) {
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
    let secs = start.elapsed().as_secs_f64();
    match outcome {
        Ok(detail) => println!("criterion {n:>2}: PASS  {name} ({detail}; {secs:.2}s)"),
        Err(why) => {
            println!("criterion {n:>2}: FAIL  {name} ({why}; {secs:.2}s)");
            failed.push(n);
        }
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("gl3, n = 4 worked example", criterion_1),
        ("B2 worked example", criterion_2),
        ("congruence sweep, rank ≤ 4, n ≤ 6", criterion_3),
        ("crystal axioms, braid relations, c^m = id, fixed points", criterion_4),
        ("CSP under c iff λ = (am) or ((am)^(m-1))", criterion_5),
        ("orbit counts for stretched rows and rectangles", criterion_6),
        ("Schur values at ζ_m against m-cores", criterion_7),
        ("CSP verdict against census and fixed points", criterion_8),
        ("c = pr on rows and tall rectangles, pr^m = id", criterion_9),
        ("qdim = product formula = tableau sum", criterion_10),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.into_iter().enumerate() {
        run(i + 1, name, f, &mut failed);
    }
    if failed.is_empty() {
        println!("acceptance: all 10 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
