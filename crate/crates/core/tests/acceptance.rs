//! Acceptance criteria 1–8. Runs without the libtest harness so every criterion
//! prints exactly one PASS/FAIL line; exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use enriques_core::moduli::{dominating_coefficients, enumerate_hat_components};
use enriques_core::oracle::{box_search_until_stable, enumerate_isotropics_with_slack};
use enriques_core::{
    classical_bounds_audit, dominating_component_check, enumerate_components, enumerate_components_by_phi,
    enumerate_isotropics, phi_vector_oracle, phivector_from_coefficients, rewrite_on, rho_fiber_structure,
    Eps, FundamentalCoefficients, IsotropicSequence, NumClass, OracleOptions,
};
use proptest::prelude::Rng;
use proptest::test_runner::{RngAlgorithm, TestRng};
use rayon::prelude::*;

struct Outcome {
    passed: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { passed: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { passed: false, detail: detail.into() }
}

fn e(i: usize) -> NumClass {
    NumClass::e(i).unwrap()
}

fn ep(i: usize, j: usize) -> NumClass {
    NumClass::e_pair(i, j).unwrap()
}

/// All `(a0, [a1..a7], a9, a10)` with both coefficient chains and total at most `max_sum`.
fn coefficient_sweep(max_sum: i64) -> Vec<(i64, [i64; 7], i64, i64)> {
    fn heads(k: usize, prev: i64, budget: i64, cur: &mut [i64; 7], out: &mut Vec<[i64; 7]>) {
        if k == 7 {
            out.push(*cur);
            return;
        }
        for x in 0..=prev.min(budget) {
            cur[k] = x;
            heads(k + 1, x, budget - x, cur, out);
        }
    }
    let mut out = Vec::new();
    for a0 in 0..=max_sum {
        for a9 in 0..=a0 {
            for a10 in 0..=a9 {
                if a9 + a10 < a0 || a0 + a9 + a10 > max_sum {
                    continue;
                }
                let mut hs = Vec::new();
                heads(0, max_sum, max_sum - a0 - a9 - a10, &mut [0; 7], &mut hs);
                out.extend(hs.into_iter().map(|h| (a0, h, a9, a10)));
            }
        }
    }
    out
}

/// The class `Σ a_i E_i + a_0 E_{9,10}` assembled directly from generators.
fn assemble(a0: i64, a: &[i64; 7], a9: i64, a10: i64) -> NumClass {
    let mut l = a9 * e(9) + a10 * e(10) + a0 * ep(9, 10);
    for (i, x) in a.iter().enumerate() {
        l = l + *x * e(i + 1);
    }
    l
}

/// φ-vector read off the fundamental presentation (no validation, no sorting).
fn raw_phi(a0: i64, a: &[i64; 7], a9: i64, a10: i64) -> [i64; 10] {
    let total = a0 + a.iter().sum::<i64>() + a9 + a10;
    let mut p = [0; 10];
    for i in 0..7 {
        p[i] = total - a[i];
    }
    p[7] = total;
    p[8] = total + a0 - a9;
    p[9] = total + a0 - a10;
    p
}

fn criterion_1() -> Outcome {
    let d = NumClass::d();
    let mut classes: Vec<(String, NumClass)> = (1..=10).map(|i| (format!("E_{i}"), e(i))).collect();
    let mut pairs = Vec::new();
    for i in 1..=10 {
        for j in i + 1..=10 {
            classes.push((format!("E_{{{i},{j}}}"), ep(i, j)));
            pairs.push((i, j));
        }
    }
    classes.push(("D".into(), d));
    // expected values from the intersection relations
    let expected = |x: usize, y: usize| -> i64 {
        let kind = |k: usize| -> (u8, usize, usize) {
            if k < 10 {
                (0, k + 1, 0)
            } else if k < 55 {
                (1, pairs[k - 10].0, pairs[k - 10].1)
            } else {
                (2, 0, 0)
            }
        };
        match (kind(x), kind(y)) {
            ((0, i, _), (0, j, _)) => i64::from(i != j),
            ((0, k, _), (1, i, j)) | ((1, i, j), (0, k, _)) => {
                if k == i || k == j {
                    2
                } else {
                    1
                }
            }
            ((1, i, j), (1, k, l)) => match [k, l].iter().filter(|v| **v == i || **v == j).count() {
                2 => 0,
                1 => 1,
                _ => 2,
            },
            ((2, ..), (0, ..)) | ((0, ..), (2, ..)) => 3,
            ((2, ..), (1, ..)) | ((1, ..), (2, ..)) => 4,
            _ => 10,
        }
    };
    let mut wrong = Vec::new();
    for x in 0..classes.len() {
        for y in 0..classes.len() {
            let got = classes[x].1.pair(&classes[y].1);
            if got != expected(x, y) {
                wrong.push(format!("{}.{} = {got}", classes[x].0, classes[y].0));
            }
        }
    }
    if wrong.is_empty() {
        pass(format!("{} pairings among 56 classes exact", classes.len() * classes.len()))
    } else {
        fail(format!("{} wrong, e.g. {}", wrong.len(), wrong[0]))
    }
}

fn criterion_2() -> Outcome {
    let sweep = coefficient_sweep(12);
    let mut checked = 0usize;
    for (a0, a, a9, a10) in &sweep {
        let l = assemble(*a0, a, *a9, *a10);
        let p = raw_phi(*a0, a, *a9, *a10);
        let s: i64 = p.iter().sum();
        let sq: i64 = p.iter().map(|x| x * x).sum();
        if 9 * l.self_int() != s * s - 9 * sq {
            return fail(format!("identity fails at ({a0};{a:?};{a9},{a10})"));
        }
        if l.self_int() > 0 {
            let c = FundamentalCoefficients::new(*a0, *a, *a9, *a10, Eps::ZERO).unwrap();
            let mut sorted = p;
            sorted.sort();
            if phivector_from_coefficients(&c).map(|v| *v.values()) != Ok(sorted) || sorted != p {
                return fail(format!("closed form disagrees at ({a0};{a:?};{a9},{a10})"));
            }
        }
        checked += 1;
    }
    pass(format!("{checked} coefficient tuples with a <= 12"))
}

fn criterion_3() -> Outcome {
    let big: Vec<_> = coefficient_sweep(8)
        .into_iter()
        .filter(|(a0, a, a9, a10)| assemble(*a0, a, *a9, *a10).self_int() > 0)
        .collect();
    let mismatches: Vec<String> = big
        .par_iter()
        .filter_map(|(a0, a, a9, a10)| {
            let c = FundamentalCoefficients::new(*a0, *a, *a9, *a10, Eps::ZERO).unwrap();
            let l = assemble(*a0, a, *a9, *a10);
            let oracle = phi_vector_oracle(&l, &OracleOptions { hint: None, max_sequences: 0 }).unwrap();
            let formula = phivector_from_coefficients(&c).unwrap();
            (oracle.phi != formula).then(|| format!("{c}: oracle {} vs formula {formula}", oracle.phi))
        })
        .collect();
    if mismatches.is_empty() {
        pass(format!("{} big classes with a <= 8", big.len()))
    } else {
        fail(format!("{} mismatches, e.g. {}", mismatches.len(), mismatches[0]))
    }
}

/// Expected `(φ-vector, component count)` for `φ_1 = k`, transcribed from the
/// worked examples.
fn golden(g: i64, k: i64) -> Vec<([i64; 10], usize)> {
    let v = |parts: &[(i64, usize)]| {
        let mut out = Vec::new();
        for &(x, n) in parts {
            out.extend(std::iter::repeat_n(x, n));
        }
        <[i64; 10]>::try_from(out).unwrap()
    };
    let mut rows = Vec::new();
    match k {
        1 => rows.push((v(&[(1, 1), (g - 1, 1), (g, 8)]), 1)),
        2 => {
            if g % 2 == 0 && g >= 4 {
                rows.push((v(&[(2, 1), (g / 2, 2), ((g + 2) / 2, 7)]), 1));
            }
            if g % 2 == 1 && g >= 3 {
                rows.push((v(&[(2, 1), ((g + 1) / 2, 8), ((g + 3) / 2, 1)]), 1));
            }
            if g % 4 == 3 && g >= 7 {
                rows.push((v(&[(2, 1), ((g - 1) / 2, 1), ((g + 3) / 2, 8)]), 1));
            }
            if g % 4 == 1 && g >= 5 {
                rows.push((v(&[(2, 1), ((g - 1) / 2, 1), ((g + 3) / 2, 8)]), 2));
            }
        }
        3 => {
            if g % 3 == 0 && g >= 6 {
                rows.push((v(&[(3, 1), ((g + 3) / 3, 9)]), 1));
            }
            if g % 3 == 0 && g >= 9 {
                rows.push((v(&[(3, 1), (g / 3, 1), ((g + 3) / 3, 1), ((g + 6) / 3, 7)]), 1));
            }
            if g % 3 == 1 && g >= 7 {
                rows.push((v(&[(3, 1), ((g + 2) / 3, 3), ((g + 5) / 3, 6)]), 1));
            }
            if g % 3 == 1 && g >= 10 {
                rows.push((v(&[(3, 1), ((g - 1) / 3, 1), ((g + 8) / 3, 8)]), 1));
            }
            if g % 3 == 2 && g >= 8 {
                rows.push((v(&[(3, 1), ((g + 1) / 3, 1), ((g + 4) / 3, 7), ((g + 7) / 3, 1)]), 1));
            }
        }
        _ => unreachable!(),
    }
    rows.sort();
    rows
}

fn criterion_4() -> Outcome {
    let mut rows = 0;
    for g in 2..=30 {
        for k in 1..=3 {
            let comps = enumerate_components_by_phi(g, k).unwrap();
            let mut got: Vec<([i64; 10], usize)> = Vec::new();
            for c in &comps {
                match got.iter_mut().find(|(v, _)| v == c.phi.values()) {
                    Some((_, n)) => *n += 1,
                    None => got.push((*c.phi.values(), 1)),
                }
                let split = comps.iter().filter(|o| o.phi == c.phi).count() == 2;
                let sign_ok = if split {
                    c.name.starts_with(if c.eps.is_one() { "E^-_" } else { "E^+_" })
                } else {
                    c.name.starts_with("E_") && !c.eps.is_one()
                };
                if !sign_ok {
                    return fail(format!("g = {g}: bad name {}", c.name));
                }
            }
            got.sort();
            let want = golden(g, k);
            if got != want {
                return fail(format!("g = {g}, phi = {k}: got {got:?}, expected {want:?}"));
            }
            rows += got.len();
        }
    }
    let g5: Vec<String> = enumerate_components(5).unwrap().into_iter().map(|c| c.name).collect();
    let want5 = [
        "E_{5;2,3,3,3,3,3,3,3,3,4}",
        "E^+_{5;2,2,4,4,4,4,4,4,4,4}",
        "E^-_{5;2,2,4,4,4,4,4,4,4,4}",
        "E_{5;1,4,5,5,5,5,5,5,5,5}",
    ];
    if g5 != want5 {
        return fail(format!("g = 5 gives {g5:?}"));
    }
    pass(format!("{rows} phi-vectors with phi_1 <= 3 over 2 <= g <= 30"))
}

fn criterion_5() -> Outcome {
    let c = dominating_coefficients();
    let l = assemble(c.a0(), c.a(), c.a9(), c.a10());
    if l.genus() != Ok(621) {
        return fail(format!("genus {:?}", l.genus()));
    }
    let oracle = phi_vector_oracle(&l, &OracleOptions { hint: None, max_sequences: 16 }).unwrap();
    if oracle.phi.values() != &[30, 31, 32, 33, 34, 35, 36, 37, 38, 39] {
        return fail(format!("phi-vector {}", oracle.phi));
    }
    // everything with pairing at most 40
    let found = enumerate_isotropics(&l, 40).unwrap();
    if found != enumerate_isotropics_with_slack(&l, 40, 2).unwrap() {
        return fail("enumeration changes when bounds widen by 2");
    }
    match box_search_until_stable(&l, 39, 3).unwrap() {
        Some((boxed, _)) if boxed == enumerate_isotropics(&l, 39).unwrap() => {}
        _ => return fail("coordinate-box search disagrees or never stabilizes"),
    }
    let standard: Vec<NumClass> = (1..=10).map(e).collect();
    let others: Vec<(NumClass, i64)> =
        found.iter().filter(|f| !standard.contains(f)).map(|f| (*f, f.pair(&l))).collect();
    let at = |v: i64| others.iter().filter(|(_, p)| *p == v).map(|(f, _)| *f).collect::<Vec<_>>();
    if others.iter().any(|(_, p)| *p < 38) || at(38) != [ep(9, 10)] || at(39) != [ep(8, 10)] {
        return fail(format!("low classes {others:?}"));
    }
    if oracle.sequences.len() != 1 || !oracle.complete {
        return fail(format!("{} computing sequences (complete = {})", oracle.sequences.len(), oracle.complete));
    }
    let report = dominating_component_check().unwrap();
    if !report.holds() {
        return fail(format!("library report disagrees: {report:?}"));
    }
    pass(format!(
        "g = 621, phi = {}, 38 only E_{{9,10}}, 39 only E_{{8,10}}, {} classes at 40, one computing sequence",
        oracle.phi,
        at(40).len()
    ))
}

fn criterion_6() -> Outcome {
    let results: Vec<Result<(), String>> = (2..=40)
        .into_par_iter()
        .map(|g| {
            let comps = enumerate_components(g).map_err(|x| x.to_string())?;
            let hats = enumerate_hat_components(g).map_err(|x| x.to_string())?;
            let two_div = hats.iter().filter(|h| h.two_divisible).count();
            if comps.len() != hats.len() - two_div + 2 * two_div {
                return Err(format!("g = {g}: {} vs {} + 2 * {}", comps.len(), hats.len() - two_div, two_div));
            }
            for c in &comps {
                let num = assemble(c.coefficients.a0(), c.coefficients.a(), c.coefficients.a9(), c.coefficients.a10());
                let all_even = c.phi.values().iter().all(|p| p % 2 == 0);
                if num.is_two_divisible() != all_even || c.two_divisible != all_even {
                    return Err(format!("g = {g}: parity law fails for {}", c.name));
                }
            }
            let rho = rho_fiber_structure(g).map_err(|x| x.to_string())?;
            if rho.n_components != comps.len() || rho.n_hat_components != hats.len() || rho.n_two_divisible != two_div {
                return Err(format!("g = {g}: summary {rho:?}"));
            }
            Ok(())
        })
        .collect();
    match results.into_iter().find_map(Result::err) {
        None => pass("2 <= g <= 40"),
        Some(msg) => fail(msg),
    }
}

fn criterion_7() -> Outcome {
    let mut rng = TestRng::from_seed(RngAlgorithm::ChaCha, &[7; 32]);
    let mut below = |n: u64| (rng.next_u64() % n) as usize;
    let mut inputs = Vec::new();
    while inputs.len() < 1000 {
        let total = 1 + below(15) as i64;
        let mut coeffs = [0i64; 11];
        for _ in 0..total {
            coeffs[below(11)] += 1;
        }
        let a: [i64; 10] = coeffs[..10].try_into().unwrap();
        let a0 = coeffs[10];
        let mut order: [usize; 10] = std::array::from_fn(|i| i);
        // Fisher–Yates over all ten slots when no E_{9,10} term is present,
        // otherwise over the first eight with an optional swap of the last two
        let span = if a0 == 0 { 10 } else { 8 };
        for i in (1..span).rev() {
            order.swap(i, below(i as u64 + 1));
        }
        if a0 > 0 && below(2) == 1 {
            order.swap(8, 9);
        }
        inputs.push((a, a0, order));
    }
    let standard = IsotropicSequence::standard();
    let failures: Vec<String> = inputs
        .par_iter()
        .filter_map(|(a, a0, order)| {
            let mut l = *a0 * ep(9, 10);
            for (i, x) in a.iter().enumerate() {
                l = l + *x * e(i + 1);
            }
            if l.self_int() <= 0 {
                return None;
            }
            let out = rewrite_on(&standard, *a, *a0, Eps::ZERO).ok()?;
            let c = out.coefficients;
            let h = c.a();
            let chains = h.windows(2).all(|w| w[0] >= w[1])
                && c.a9() + c.a10() >= c.a0()
                && c.a0() >= c.a9()
                && c.a9() >= c.a10();
            if !chains {
                return Some(format!("{a:?};{a0}: chains fail in {c}"));
            }
            if c.class_on(&out.sequence) != l {
                return Some(format!("{a:?};{a0}: class changed"));
            }
            // same class written on the relabelled sequence
            let relabeled = standard.reordered(*order);
            let permuted: [i64; 10] = order.map(|k| a[k]);
            let again = rewrite_on(&relabeled, permuted, *a0, Eps::ZERO).ok()?;
            if again.coefficients != c || again.coefficients.class_on(&again.sequence) != l {
                return Some(format!("{a:?};{a0}: permutation {order:?} gives {}", again.coefficients));
            }
            // the same coefficients, placed on the standard sequence, give the same phi-vector
            let oracle = phi_vector_oracle(&l, &OracleOptions { hint: None, max_sequences: 0 }).unwrap();
            if phivector_from_coefficients(&c).ok()? != oracle.phi {
                return Some(format!("{a:?};{a0}: oracle phi {} vs {c}", oracle.phi));
            }
            None
        })
        .collect();
    let big = inputs
        .iter()
        .filter(|(a, a0, _)| {
            let mut l = *a0 * ep(9, 10);
            for (i, x) in a.iter().enumerate() {
                l = l + *x * e(i + 1);
            }
            l.self_int() > 0
        })
        .count();
    if failures.is_empty() {
        pass(format!("1000 random inputs with a <= 15 ({big} big, rest rejected as non-big)"))
    } else {
        fail(format!("{} failures, e.g. {}", failures.len(), failures[0]))
    }
}

fn criterion_8() -> Outcome {
    let violations = classical_bounds_audit(40).unwrap();
    if !violations.is_empty() {
        return fail(format!("{} violations, e.g. {:?}", violations.len(), violations[0]));
    }
    for g in 2..=40 {
        let t = 2 * g - 2;
        for h in enumerate_hat_components(g).unwrap() {
            let f = h.phi.get(1);
            if f * f > t || (f * f < t && t < f * f + f - 2) {
                return fail(format!("g = {g}: {}", h.name));
            }
        }
    }
    pass("2 <= g <= 40")
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Option<Duration>); 8] = [
        ("1 lattice table", criterion_1, Some(Duration::from_secs(1))),
        ("2 genus identity", criterion_2, Some(Duration::from_secs(10))),
        ("3 oracle vs closed form", criterion_3, None),
        ("4 small-phi tables", criterion_4, Some(Duration::from_secs(30))),
        ("5 dominating component", criterion_5, None),
        ("6 double cover counts", criterion_6, None),
        ("7 rewriting", criterion_7, None),
        ("8 classical bounds", criterion_8, None),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if let Some(limit) = limit {
            if elapsed > limit {
                outcome = fail(format!("{} (took {elapsed:.2?}, limit {limit:?})", outcome.detail));
            }
        }
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        println!("{status} criterion {name}: {} [{elapsed:.2?}]", outcome.detail);
        failed += usize::from(!outcome.passed);
    }
    if failed > 0 {
        println!("{failed} of 8 acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 8 acceptance criteria passed");
}
