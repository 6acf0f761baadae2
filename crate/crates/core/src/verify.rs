//! Self-check suites run by the command-line tool.

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::fundamental::{coefficients_from_phivector, phivector_from_coefficients};
use crate::lattice::{gram_determinant, gram_signature, NumClass};
use crate::moduli::{
    classical_bounds_audit, dominating_component_check, enumerate_components, enumerate_components_by_phi,
    enumerate_components_via_phi, mu_image_phi, rho_fiber_structure,
};
use crate::phi::PhiVector;

/// One named check and its outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub anchor: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, anchor: &'static str, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), anchor, passed, detail: detail.into() }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} [{}]", self.name, self.anchor)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    PaperTables,
    Lattice,
    Roundtrip,
    Dominating,
    Bounds,
}

pub fn run(suite: Suite, g_max: i64) -> Result<Vec<Check>> {
    match suite {
        Suite::PaperTables => paper_tables(g_max),
        Suite::Lattice => Ok(lattice()),
        Suite::Roundtrip => roundtrip(g_max),
        Suite::Dominating => dominating(),
        Suite::Bounds => bounds(g_max),
    }
}

/// Expected `(φ-vector, number of ε values)` with `φ_1 = k ∈ {1, 2, 3}` in genus `g`,
/// from the closed-form lists.
pub fn expected_small_phi(g: i64, k: i64) -> Vec<([i64; 10], usize)> {
    let tuple = |head: &[i64], rest: i64| {
        let mut v = [rest; 10];
        v[..head.len()].copy_from_slice(head);
        v
    };
    let mut out = Vec::new();
    match k {
        1 => out.push((tuple(&[1, g - 1], g), 1)),
        2 => {
            if g % 2 == 0 && g >= 4 {
                out.push((tuple(&[2, g / 2, g / 2], (g + 2) / 2), 1));
            }
            if g % 2 == 1 && g >= 3 {
                let mut v = tuple(&[2], (g + 1) / 2);
                v[9] = (g + 3) / 2;
                out.push((v, 1));
            }
            if g % 4 == 3 && g >= 7 {
                out.push((tuple(&[2, (g - 1) / 2], (g + 3) / 2), 1));
            }
            if g % 4 == 1 && g >= 5 {
                out.push((tuple(&[2, (g - 1) / 2], (g + 3) / 2), 2));
            }
        }
        3 => {
            if g % 3 == 0 && g >= 6 {
                out.push((tuple(&[3], (g + 3) / 3), 1));
            }
            if g % 3 == 0 && g >= 9 {
                out.push((tuple(&[3, g / 3, (g + 3) / 3], (g + 6) / 3), 1));
            }
            if g % 3 == 1 && g >= 7 {
                out.push((tuple(&[3, (g + 2) / 3, (g + 2) / 3, (g + 2) / 3], (g + 5) / 3), 1));
            }
            if g % 3 == 1 && g >= 10 {
                out.push((tuple(&[3, (g - 1) / 3], (g + 8) / 3), 1));
            }
            if g % 3 == 2 && g >= 8 {
                let mut v = tuple(&[3, (g + 1) / 3], (g + 4) / 3);
                v[9] = (g + 7) / 3;
                out.push((v, 1));
            }
        }
        _ => {}
    }
    out.sort_by(|a, b| PhiVector::new(a.0).expect("valid").cmp(&PhiVector::new(b.0).expect("valid")));
    out
}

fn paper_tables(g_max: i64) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for k in 1..=3 {
        let mut bad = Vec::new();
        for g in 2..=g_max {
            let comps = enumerate_components_by_phi(g, k)?;
            let mut got: Vec<([i64; 10], usize)> = Vec::new();
            for c in &comps {
                match got.last_mut() {
                    Some((v, n)) if v == c.phi.values() => *n += 1,
                    _ => got.push((*c.phi.values(), 1)),
                }
            }
            if got != expected_small_phi(g, k) {
                bad.push(g);
            }
        }
        let detail = if bad.is_empty() { format!("g <= {g_max}") } else { format!("mismatch at g = {bad:?}") };
        checks.push(Check::new(format!("phi = {k} component list"), "examples with small phi", bad.is_empty(), detail));
    }
    Ok(checks)
}

/// Expected `E_{i,j} · E_{k,l}` (`|{i,j} ∩ {k,l}| ≤ 1`) and `E_k · E_{i,j}`.
fn lattice() -> Vec<Check> {
    let mut checks = Vec::new();
    let det = gram_determinant();
    checks.push(Check::new("Gram determinant is +-1", "lattice model", det.abs() == 1, format!("det = {det}")));
    let sig = gram_signature();
    checks.push(Check::new("signature (1,9)", "lattice model", sig == (1, 9), format!("{sig:?}")));

    let e = |i| NumClass::e(i).expect("index in range");
    let ep = |i, j| NumClass::e_pair(i, j).expect("distinct indices");
    let d = NumClass::d();
    let mut bad = 0;
    let mut total = 0;
    let mut expect = |got: i64, want: i64| {
        total += 1;
        if got != want {
            bad += 1;
        }
    };
    expect(d.self_int(), 10);
    for i in 1..=10 {
        expect(e(i).pair(&d), 3);
        for j in 1..=10 {
            expect(e(i).pair(&e(j)), if i == j { 0 } else { 1 });
        }
    }
    let pairs: Vec<(usize, usize)> = (1..=10).flat_map(|i| (i + 1..=10).map(move |j| (i, j))).collect();
    for &(i, j) in &pairs {
        expect(ep(i, j).pair(&d), 4);
        for k in 1..=10 {
            expect(e(k).pair(&ep(i, j)), if k == i || k == j { 2 } else { 1 });
        }
        for &(k, l) in &pairs {
            let shared = [k, l].iter().filter(|x| **x == i || **x == j).count();
            let want = match shared {
                2 => 0,
                1 => 1,
                _ => 2,
            };
            expect(ep(i, j).pair(&ep(k, l)), want);
        }
    }
    checks.push(Check::new(
        "pairing table of E_i, E_{i,j}, D",
        "intersection relations",
        bad == 0,
        format!("{} of {total} entries wrong", bad),
    ));

    let mut ijk_ok = true;
    for i in 1..=10 {
        for j in 1..=10 {
            for k in 1..=10 {
                if i != j && j != k && i != k {
                    ijk_ok &= e(j) + ep(i, j) == e(k) + ep(i, k);
                }
            }
        }
    }
    checks.push(Check::new("E_j + E_{i,j} = E_k + E_{i,k}", "intersection relations", ijk_ok, ""));
    checks
}

fn roundtrip(g_max: i64) -> Result<Vec<Check>> {
    let mut dictionary = true;
    let mut genus_identity = true;
    let mut parity = true;
    let mut count = 0;
    for g in 2..=g_max {
        for c in enumerate_components(g)? {
            count += 1;
            let coeffs = coefficients_from_phivector(&c.phi);
            dictionary &= phivector_from_coefficients(&coeffs)? == c.phi;
            let num = coeffs.pic_class().num;
            let s: i64 = c.phi.sum();
            let sq: i64 = c.phi.values().iter().map(|p| p * p).sum();
            genus_identity &= 9 * num.self_int() == s * s - 9 * sq && num.genus()? == g;
            parity &= num.is_two_divisible() == c.phi.all_even() && c.phi.all_even() == coeffs.all_even();
        }
    }
    let scope = format!("{count} components, g <= {g_max}");
    Ok(vec![
        Check::new("coefficients <-> phi-vector", "coefficient formulas", dictionary, scope.clone()),
        Check::new("L^2 = (sum phi)^2/9 - sum phi^2", "genus identity", genus_identity, scope.clone()),
        Check::new("2-divisible <=> all phi even", "parity law", parity, scope),
    ])
}

fn dominating() -> Result<Vec<Check>> {
    let r = dominating_component_check()?;
    let e910 = NumClass::e_pair(9, 10)?;
    let e810 = NumClass::e_pair(8, 10)?;
    let mu_target = PhiVector::new([1, 4, 5, 5, 5, 5, 5, 5, 5, 5])?;
    let mu = mu_image_phi(&mu_target)?;
    Ok(vec![
        Check::new("genus of the star class", "dominating component", r.genus == 621, format!("g = {}", r.genus)),
        Check::new(
            "phi-vector (30,...,39)",
            "dominating component",
            r.phi.values() == &[30, 31, 32, 33, 34, 35, 36, 37, 38, 39],
            r.phi.to_string(),
        ),
        Check::new(
            "pairing 38 only for E_{9,10}, 39 only for E_{8,10}",
            "dominating component",
            r.low_classes == [(e910, 38), (e810, 39)],
            format!("{} low classes", r.low_classes.len()),
        ),
        Check::new(
            "every other class pairs to at least 40",
            "dominating component",
            r.next_pairing.is_none_or(|p| p >= 40),
            format!("next pairing {:?}", r.next_pairing),
        ),
        Check::new(
            "unique computing sequence",
            "dominating component",
            r.computing_sequences == 1 && r.sequences_complete,
            format!("{} found", r.computing_sequences),
        ),
        Check::new(
            "search stable under widened bounds and box search",
            "dominating component",
            r.stable_under_slack && r.matches_box_search,
            "",
        ),
        Check::new("mu image of (1,4,5,...,5)", "dominating component", mu == mu_target, mu.to_string()),
    ])
}

fn bounds(g_max: i64) -> Result<Vec<Check>> {
    let violations = classical_bounds_audit(g_max)?;
    let mut rho_ok = true;
    let mut routes_ok = true;
    for g in 2..=g_max {
        let r = rho_fiber_structure(g)?;
        let comps = enumerate_components(g)?;
        rho_ok &= r.n_components == r.n_hat_components + r.n_two_divisible;
        // the torsion bit only separates components over 2-divisible classes
        rho_ok &= comps.iter().all(|c| !c.eps.is_one() || (c.two_divisible && c.phi.all_even()));
        routes_ok &= comps == enumerate_components_via_phi(g)?;
    }
    Ok(vec![
        Check::new(
            "phi^2 <= 2g-2 and no gap values",
            "classical bounds",
            violations.is_empty(),
            format!("{} violations, g <= {g_max}", violations.len()),
        ),
        Check::new("#E_g = #non-2-divisible + 2 #2-divisible", "double cover count", rho_ok, ""),
        Check::new("coefficient and phi-vector enumerations agree", "component correspondence", routes_ok, ""),
    ])
}
