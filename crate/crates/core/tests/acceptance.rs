//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs as a plain binary (`harness = false`) so the report is always
//! printed. The process fails if any criterion outside [`DOCUMENTED_FAILURES`]
//! fails, or if a documented failure starts passing.

mod common;

use std::collections::BTreeSet;
use std::path::Path;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use natbound_core::analytic::{independence_margin, load_zeros, zeta_eval};
use natbound_core::anchors;
use natbound_core::classify::{beta, classify, ghost, local_zeros, zero_census};
use natbound_core::cyclotomic::{
    cyclotomic_factor_uni, CyclotomicFactorization, CyclotomicVerdict, Witness,
};
use natbound_core::explicit::{
    gsp6_coeffs, gsp6_smoothed, gsp6_term_structure, smoothed_min_bound,
};
use natbound_core::goldbach::{
    convolve_gr, residual_report, summatory_hyperbola, Method, VonMangoldtTable,
};
use natbound_core::newton::{
    brute_count_toric, domain_v, domain_v_full, toric_degree, toric_local_series,
};
use natbound_core::polycore::{BivariateLocalFactor, MultiPoly, UniPoly};
use natbound_core::zetafact::factorize_bivariate;

/// Criteria known not to hold at the stated tolerance; see the README.
const DOCUMENTED_FAILURES: &[u8] = &[6];

struct Checks(Vec<(String, bool)>);

impl Checks {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        self.0.push((what.into(), ok));
    }
}

struct Outcome {
    id: u8,
    passed: bool,
}

fn run(id: u8, title: &str, limit: Option<Duration>, body: impl FnOnce(&mut Checks)) -> Outcome {
    let mut checks = Checks(Vec::new());
    let start = Instant::now();
    let caught = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| body(&mut checks)));
    let elapsed = start.elapsed();
    if let Err(e) = caught {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        checks.check(false, format!("panicked: {msg}"));
    }
    match limit {
        Some(limit) => checks.check(
            elapsed < limit,
            format!(
                "runtime {:.2} s < {} s",
                elapsed.as_secs_f64(),
                limit.as_secs()
            ),
        ),
        None => checks.check(true, format!("runtime {:.2} s", elapsed.as_secs_f64())),
    }
    let passed = checks.0.iter().all(|(_, ok)| *ok);
    println!(
        "criterion {id:>2} {}: {title}",
        if passed { "PASS" } else { "FAIL" }
    );
    for (what, ok) in &checks.0 {
        println!("    [{}] {what}", if *ok { " ok " } else { "FAIL" });
    }
    Outcome { id, passed }
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

// ---------------------------------------------------------------- 1

fn estermann_corpus(c: &mut Checks) {
    let phi = common::cyclotomic_rev;
    let mul_all = |fs: &[Vec<i64>]| {
        fs.iter()
            .fold(vec![1i64], |acc, f| common::poly_mul(&acc, f))
    };
    let cyclotomic: Vec<Vec<i64>> = vec![
        phi(1),
        phi(2),
        phi(6),
        mul_all(&[phi(1), phi(2), phi(6)]),
        mul_all(&[phi(1), phi(1), phi(6)]),
        mul_all(&[phi(2), phi(6), phi(6)]),
        mul_all(&[phi(1), phi(2), phi(3), phi(6)]),
        mul_all(&[phi(3), phi(4)]),
        phi(12),
        mul_all(&[phi(5), phi(10), phi(1)]),
    ];
    let non_cyclotomic: Vec<Vec<i64>> = vec![
        vec![1, -1, -1],
        vec![1, -2],
        vec![1, 1, 2],
        vec![1, -1, 0, 1],
        vec![1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1],
        vec![1, -3, 2],
        vec![1, 0, 0, 0, -1, -1],
        mul_all(&[phi(6), vec![1, -1, -1]]),
        vec![1, 3],
        mul_all(&[phi(1), phi(2), vec![1, 0, 2]]),
    ];
    let mut mismatches = 0;
    for (expected, polys) in [(true, &cyclotomic), (false, &non_cyclotomic)] {
        for coeffs in polys {
            // numeric oracle: every root on the unit circle
            let roots = common::dk_roots(&coeffs.iter().map(|&x| x as f64).collect::<Vec<_>>());
            let numeric = roots.iter().all(|z| (z.norm() - 1.0).abs() < 1e-4);
            let verdict = cyclotomic_factor_uni(&UniPoly::from_i64(coeffs)).expect("valid input");
            let consistent = match &verdict {
                CyclotomicVerdict::Cyclotomic(CyclotomicFactorization::Indices(ix)) => {
                    let rebuilt = ix.iter().fold(vec![1i64], |acc, &(d, k)| {
                        (0..k).fold(acc, |a, _| common::poly_mul(&a, &phi(d)))
                    });
                    &rebuilt == coeffs
                }
                CyclotomicVerdict::NotCyclotomic(Witness::Root { root, .. }) => {
                    let value: Complex64 = coeffs
                        .iter()
                        .rev()
                        .fold(Complex64::zero(), |acc, &x| acc * root + x as f64);
                    (root.norm() - 1.0).abs() >= 1e-8 && value.norm() < 1e-8
                }
                _ => false,
            };
            let agrees = verdict.is_cyclotomic() == expected && numeric == expected && consistent;
            if !agrees {
                mismatches += 1;
                println!("    mismatch on {coeffs:?}: verdict {}", verdict.to_json());
            }
        }
    }
    c.check(
        mismatches == 0,
        format!("20 polynomials, {mismatches} mismatches against numeric roots and exact reconstruction"),
    );
}

// ---------------------------------------------------------------- 2

fn random_w(rng: &mut ChaCha8Rng) -> BivariateLocalFactor {
    loop {
        let w = draw_w(rng);
        // duplicate monomials may cancel down to the constant 1
        if w.depends_on_y() {
            return w;
        }
    }
}

fn draw_w(rng: &mut ChaCha8Rng) -> BivariateLocalFactor {
    let mut terms = vec![(0i64, 0i64, 1i64)];
    let count = rng.random_range(1..=6);
    for _ in 0..count {
        let c = loop {
            let c = rng.random_range(-3..=3i64);
            if c != 0 {
                break c;
            }
        };
        terms.push((rng.random_range(0..=4), rng.random_range(1..=3), c));
    }
    BivariateLocalFactor::from_int_terms(&terms)
}

fn factor_triples(f: &natbound_core::zetafact::ZetaFactorization) -> Vec<(i64, i64, BigInt)> {
    f.factors()
        .iter()
        .map(|t| {
            assert!(t.a.is_integer() && t.b.is_integer());
            (t.a.to_integer(), t.b.to_integer(), t.e.clone())
        })
        .collect()
}

fn round_trip(c: &mut Checks) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    let (mut exact, mut stable) = (0, 0);
    for _ in 0..100 {
        let w = random_w(&mut rng);
        let f8 = factorize_bivariate(&w, 8).expect("factorizes");
        let f9 = factorize_bivariate(&w, 9).expect("factorizes");
        let mut target = common::Series::new();
        for (u, v, coef) in w.terms() {
            let coef = coef.to_integer();
            if !coef.is_zero() {
                *target.entry((u.to_integer(), v.to_integer())).or_default() += coef;
            }
        }
        target.retain(|_, x| !x.is_zero());
        if common::expand_factors(&factor_triples(&f8), 8) == target {
            exact += 1;
        }
        let low = |f: &natbound_core::zetafact::ZetaFactorization| {
            f.factors()
                .iter()
                .filter(|t| t.b <= Rational64::from_integer(8))
                .cloned()
                .collect::<Vec<_>>()
        };
        if low(&f8) == low(&f9) {
            stable += 1;
        }
    }
    c.check(
        exact == 100,
        format!("exact reconstruction to order 8: {exact}/100"),
    );
    c.check(
        stable == 100,
        format!("factors stable between orders 8 and 9: {stable}/100"),
    );
}

// ---------------------------------------------------------------- 3

fn gsp6_anchors(c: &mut Checks) {
    let w = anchors::gsp6();
    let b = beta(&w).unwrap();
    c.check(b == Rational64::from_integer(4), format!("beta = {b}"));
    let g = ghost(&w).unwrap();
    c.check(
        g == BivariateLocalFactor::from_int_terms(&[(0, 0, 1), (4, 1, 1)]),
        "ghost = 1 + x^4 y",
    );
    let cls = classify(&w, 12, 10_000).unwrap();
    c.check(cls.ghost_verdict.is_cyclotomic(), "ghost cyclotomic");
    c.check(
        cls.case_label == 4,
        format!("case label {}", cls.case_label),
    );
    let f = factorize_bivariate(&w, 2).unwrap();
    let e = |a: i64, b: i64| f.exponent(Rational64::from_integer(a), Rational64::from_integer(b));
    c.check(e(1, 1) == BigInt::from(-1), format!("e(1,1) = {}", e(1, 1)));
    c.check(e(8, 2) == BigInt::from(1), format!("e(8,2) = {}", e(8, 2)));
    // the local quadratic has one root near Re s = 1 (its product with the
    // boundary root is p^-5); the boundary zeros are those within 1 of beta
    for p in [101u64, 1009, 10007] {
        let set = local_zeros(&w, p, Some((3.0, 5.0))).unwrap();
        let pf = p as f64;
        let predicted = 4.0 - (1.0 - 1.0 / pf).ln() / pf.ln();
        let ok = !set.zeros.is_empty()
            && set
                .zeros
                .iter()
                .all(|z| z.re > 4.0 && (z.re - predicted).abs() < 50.0 / (pf * pf));
        let res: Vec<String> = set.zeros.iter().map(|z| format!("{:.12}", z.re)).collect();
        c.check(
            ok,
            format!(
                "p = {p}: zeros with Re s in (3, 5) at Re s = [{}], predicted {predicted:.12}",
                res.join(", ")
            ),
        );
    }
}

// ---------------------------------------------------------------- 4

fn five_cases(c: &mut Checks) {
    let table: [(&str, BivariateLocalFactor, u8); 5] = [
        ("1 - x y", anchors::shifted_zeta_inverse(), 1),
        ("1 + 2 x y", anchors::non_cyclotomic_ghost(), 2),
        ("1 + y + x y^2", anchors::crossing_example(), 3),
        ("GSp6", anchors::gsp6(), 4),
        ("1 - x^2 y + y", anchors::zero_free_example(), 5),
    ];
    for (name, w, expected) in &table {
        let first = classify(w, 12, 10_000).unwrap();
        let second = classify(w, 12, 10_000).unwrap();
        c.check(
            first.case_label == *expected,
            format!("{name}: case {} (expected {expected})", first.case_label),
        );
        c.check(
            first.to_json() == second.to_json(),
            format!("{name}: deterministic"),
        );
        if *expected == 3 {
            let two_five =
                first.evidence.crossing.iter().any(|f| {
                    f.a == Rational64::from_integer(2) && f.b == Rational64::from_integer(5)
                });
            c.check(
                two_five,
                format!("{name}: crossing factor (2,5) present at depth 12"),
            );
        }
        if *expected == 5 {
            let census = zero_census(w, 2.0, 10_000).unwrap();
            c.check(
                census.primes_with_zero == 0 && census.degenerate.is_empty(),
                format!(
                    "{name}: {} of {} primes <= 10^4 with a local zero beyond Re s = 2",
                    census.primes_with_zero, census.primes_tested
                ),
            );
            // the only local zero is u = 1/(p^2 - 1), at Re s = ln(p^2 - 1)/ln p
            let oracle = natbound_core::primes::primes_up_to(10_000)
                .iter()
                .all(|&p| ((p * p - 1) as f64).ln() / (p as f64).ln() < 2.0);
            c.check(
                oracle,
                format!("{name}: closed-form local zeros left of Re s = 2"),
            );
        }
    }
}

// ---------------------------------------------------------------- 5

fn cubic_clustering(c: &mut Checks) {
    let w = anchors::cubic_surface();
    let b = beta(&w).unwrap();
    let line = b.to_f64().unwrap();
    c.check(b == Rational64::new(3, 4), format!("beta = {b}"));
    let mut offsets = Vec::new();
    for p in [1009u64, 10007, 100003] {
        let set = local_zeros(&w, p, None).unwrap();
        let offset = set
            .zeros
            .iter()
            .filter(|z| z.re > line)
            .map(|z| z.re - line)
            .fold(f64::INFINITY, f64::min);
        let pf = p as f64;
        let predicted = 1.0 / (4.0 * 2f64.sqrt() * pf.powf(0.25) * pf.ln());
        let rel = (offset - predicted).abs() / predicted;
        c.check(
            rel < 0.2,
            format!(
                "p = {p}: offset {offset:.6e} vs predicted {predicted:.6e} (relative {rel:.3})"
            ),
        );
        offsets.push(offset);
    }
    c.check(
        offsets.windows(2).all(|w| w[1] < w[0]),
        "offsets strictly decreasing in p",
    );
}

// ---------------------------------------------------------------- 6

fn goldbach_residuals(c: &mut Checks) {
    let lam = VonMangoldtTable::new(200_000).unwrap();
    let naive = convolve_gr(&lam, 2, Method::Naive).unwrap();
    let fast = convolve_gr(&lam, 2, Method::Fast).unwrap();
    let mut worst = 0.0f64;
    let mut zero_mismatch = 0;
    for k in 0..naive.g.len() {
        let (a, b) = (naive.g[k], fast.g[k]);
        if a == 0.0 {
            if b != 0.0 {
                zero_mismatch += 1;
            }
        } else {
            worst = worst.max((a - b).abs() / a.abs());
        }
    }
    c.check(
        worst <= 1e-9 && zero_mismatch == 0,
        format!("naive vs fast G_2: max relative difference {worst:.3e}, {zero_mismatch} zero mismatches"),
    );
    for x in [1_000usize, 10_000] {
        let s = fast.summatory(x).unwrap();
        let h = summatory_hyperbola(&lam, x).unwrap();
        let rel = (s - h).abs() / h.abs();
        c.check(
            rel <= 1e-6,
            format!("x = {x}: summatory vs hyperbola relative {rel:.3e}"),
        );
    }
    let zeros =
        load_zeros(&Path::new(env!("CARGO_MANIFEST_DIR")).join("data/zeros100.txt")).unwrap();
    let xs: Vec<usize> = (0..8).map(|k| 1000usize << k).collect();
    let rows = residual_report(&fast, &xs, &zeros, 100).unwrap();
    let mut within = 0;
    let mut reduced = 0;
    for r in &rows {
        if r.minus_main_minus_h2.abs() < 10.0 * r.fujii_bound {
            within += 1;
        }
        if r.minus_main_minus_h2.abs() < r.minus_main.abs() {
            reduced += 1;
        }
        println!(
            "      x = {:>6}: S - x^2/2 = {:>14.3}, minus H_2 = {:>14.3}, (x ln x)^(4/3) = {:.3}",
            r.x, r.minus_main, r.minus_main_minus_h2, r.fujii_bound
        );
    }
    c.check(
        within == rows.len(),
        format!(
            "|S - x^2/2 - H_2| < 10 (x ln x)^(4/3) at {within}/{} samples",
            rows.len()
        ),
    );
    let share = reduced as f64 / rows.len() as f64;
    c.check(
        share >= 0.7,
        format!(
            "subtracting H_2 reduces the residual at {reduced}/{} = {:.1}% of samples (need >= 70%)",
            rows.len(),
            100.0 * share
        ),
    );
}

// ---------------------------------------------------------------- 7

fn analytic_layer(c: &mut Checks) {
    let z2 = zeta_eval(Complex64::new(2.0, 0.0)).unwrap();
    let err = (z2 - std::f64::consts::PI.powi(2) / 6.0).norm();
    c.check(err < 1e-10, format!("|zeta(2) - pi^2/6| = {err:.3e}"));
    let zeros =
        load_zeros(&Path::new(env!("CARGO_MANIFEST_DIR")).join("data/zeros100.txt")).unwrap();
    let g1 = zeros.gammas()[0];
    c.check(
        zeros.len() == 100 && format!("{g1:.4}") == "14.1347",
        format!("{} zeros loaded, first ordinate {g1}", zeros.len()),
    );
    let at = zeta_eval(Complex64::new(0.5, g1)).unwrap().norm();
    c.check(at < 1e-5, format!("|zeta(1/2 + i gamma_1)| = {at:.3e}"));
    let rep = independence_margin(&zeros, 30, 1.5).unwrap();
    c.check(
        rep.min_margin > 0.0 && rep.log_ratio > 1e10f64.ln(),
        format!(
            "30 zeros, alpha = 1.5: min margin {:.6e}, margin/bound = 10^{:.1}",
            rep.min_margin,
            rep.log_ratio / std::f64::consts::LN_10
        ),
    );
}

// ---------------------------------------------------------------- 8

fn toric_suite(c: &mut Checks) {
    let series = toric_local_series(3, 4).unwrap();
    let mut mismatches = 0;
    let mut ones = 0;
    for a in 0..=4i64 {
        for b in 0..=4i64 {
            for d in 0..=4i64 {
                for e in 0..=4i64 {
                    let expected = i64::from(a + b + d == 3 * e && a.min(b).min(d) == 0);
                    ones += expected;
                    if series.coeff(&[a, b, d, e]) != expected {
                        mismatches += 1;
                    }
                }
            }
        }
    }
    let stray = series
        .terms()
        .filter(|(alpha, _)| alpha.iter().any(|&x| !(0..=4).contains(&x)))
        .count();
    c.check(
        mismatches == 0 && stray == 0,
        format!("625 exponents in [0,4]^4: {ones} in F_A3, {mismatches} mismatches, {stray} stray terms"),
    );
    let d3 = toric_degree(3).unwrap();
    let binom = 5 * 4 * 3 / 6;
    c.check(d3 == 6 && d3 == binom - 4, format!("d_3 = {d3}"));
    let counts = (
        brute_count_toric(3, 1).unwrap(),
        brute_count_toric(3, 2).unwrap(),
    );
    c.check(counts == (1, 1), format!("counts at t = 1, 2: {counts:?}"));
}

// ---------------------------------------------------------------- 9

fn local_oracle(p: u64, kmax: usize) -> Vec<i128> {
    let p = p as i128;
    let mut series = vec![0i128; kmax + 1];
    series[0] = 1;
    if kmax >= 1 {
        series[1] = p + p * p + p.pow(3) + p.pow(4);
    }
    if kmax >= 2 {
        series[2] = p.pow(5);
    }
    for q in [1, p.pow(3), p.pow(5), p.pow(6)] {
        // multiply by 1/(1 - q t)
        for k in 1..=kmax {
            series[k] += q * series[k - 1];
        }
    }
    series
}

fn gsp6_coefficients(c: &mut Checks) {
    let bound = smoothed_min_bound(1e4).max(100_000);
    let coeffs = gsp6_coeffs(bound).unwrap();
    c.check(coeffs.get(1) == 1, "a_1 = 1");
    let a8 = local_oracle(2, 1)[1];
    c.check(
        coeffs.get(8) == 135 && a8 == 135,
        format!("a_8 = {} (local expansion {a8})", coeffs.get(8)),
    );
    let mut bad_support = 0;
    let mut bad_mult = 0;
    for n in 1..=100_000u64 {
        let f = natbound_core::primes::factorize(n);
        let cube = f.iter().all(|&(_, e)| e % 3 == 0);
        let got = coeffs.get(n);
        if !cube {
            if got != 0 {
                bad_support += 1;
            }
            continue;
        }
        let expected: i128 = f
            .iter()
            .map(|&(p, e)| local_oracle(p, e as usize / 3)[e as usize / 3])
            .product();
        if got as i128 != expected {
            bad_mult += 1;
        }
    }
    c.check(
        bad_support == 0,
        format!("a_n = 0 off cubes for n <= 10^5: {bad_support} violations"),
    );
    c.check(
        bad_mult == 0,
        format!("a_n equals the product of local expansions for n <= 10^5: {bad_mult} violations"),
    );
    let ts = gsp6_term_structure().unwrap();
    let exps: BTreeSet<Rational64> = ts.exponents().into_iter().collect();
    let want: BTreeSet<Rational64> = [
        Rational64::new(7, 3),
        Rational64::from_integer(2),
        Rational64::new(5, 3),
    ]
    .into();
    let shown: Vec<String> = exps.iter().map(|r| r.to_string()).collect();
    c.check(
        exps == want,
        format!("pole exponents {{{}}}", shown.join(", ")),
    );
    let affine = ts.zero_families.len() == 1
        && [
            Complex64::new(0.5, 14.134725),
            Complex64::new(0.5, 21.02204),
            Complex64::new(0.3, -2.0),
        ]
        .iter()
        .all(|&rho| (ts.zero_exponent(0, rho) - (rho + 8.0) / 6.0).norm() < 1e-12);
    c.check(affine, "one zero family with exponent (rho + 8)/6");
    let lo = gsp6_smoothed(1e3, &coeffs).unwrap().value;
    let hi = gsp6_smoothed(1e4, &coeffs).unwrap().value;
    let slope = (hi / lo).ln() / std::f64::consts::LN_10;
    c.check(
        (2.2..=2.45).contains(&slope),
        format!("log-slope of A between 10^3 and 10^4: {slope:.4}"),
    );
}

// ---------------------------------------------------------------- 10

fn random_h(rng: &mut ChaCha8Rng, n: usize) -> MultiPoly {
    let mut terms: Vec<(Vec<i64>, BigInt)> = vec![(vec![0; n + 1], BigInt::from(1))];
    let count = rng.random_range(1..=6);
    for _ in 0..count {
        let mut e: Vec<i64> = (0..n).map(|_| rng.random_range(0..=3)).collect();
        e.push(rng.random_range(0..=2));
        if e.iter().all(|&x| x == 0) {
            e[0] = 1;
        }
        let c = [-2i64, -1, 1, 2][rng.random_range(0..4)];
        terms.push((e, BigInt::from(c)));
    }
    MultiPoly::new(n, terms)
}

fn domain_property(c: &mut Checks) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0010);
    let mut agree = 0;
    let mut inside = 0;
    let deltas = [
        Rational64::from_integer(0),
        Rational64::new(1, 2),
        Rational64::from_integer(1),
    ];
    for i in 0..100 {
        let n = 1 + i % 3;
        let h = random_h(&mut rng, n);
        let delta = deltas[rng.random_range(0..3)];
        let s: Vec<Complex64> = (0..n)
            .map(|_| Complex64::new(rng.random_range(-0.5..4.0), rng.random_range(-10.0..10.0)))
            .collect();
        let ext = domain_v(&h, delta).unwrap().contains(&s).unwrap();
        let full = domain_v_full(&h, delta).unwrap().contains(&s).unwrap();
        if ext == full {
            agree += 1;
        }
        inside += usize::from(full);
    }
    c.check(
        agree == 100,
        format!(
            "Ext-based and full-support membership agree on {agree}/100 pairs ({inside} inside)"
        ),
    );
}

fn main() {
    println!("acceptance suite");
    let outcomes = [
        run(1, "Estermann dichotomy corpus", secs(1), estermann_corpus),
        run(2, "zeta-factorization round trip", secs(10), round_trip),
        run(3, "GSp6 anchors", secs(5), gsp6_anchors),
        run(4, "five-case anchor table", None, five_cases),
        run(5, "cubic-surface clustering", secs(5), cubic_clustering),
        run(6, "Goldbach residuals", secs(60), goldbach_residuals),
        run(7, "analytic layer", secs(5), analytic_layer),
        run(8, "toric suite", secs(10), toric_suite),
        run(9, "GSp6 coefficients", secs(30), gsp6_coefficients),
        run(10, "domain/Ext property", secs(5), domain_property),
    ];
    let failed: Vec<u8> = outcomes
        .iter()
        .filter(|o| !o.passed)
        .map(|o| o.id)
        .collect();
    let passed = outcomes.len() - failed.len();
    println!(
        "summary: {passed}/{} PASS, failing: {failed:?}",
        outcomes.len()
    );
    if failed != DOCUMENTED_FAILURES {
        println!("failing set differs from the documented set {DOCUMENTED_FAILURES:?}");
        std::process::exit(1);
    }
}
