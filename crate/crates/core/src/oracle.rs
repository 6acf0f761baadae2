//! Brute-force reference engine for isotropic classes and φ-vectors.
//!
//! Everything here works from the definitions alone: it enumerates effective
//! primitive isotropic classes of bounded degree against a polarization `L` and
//! searches isotropic 10-sequences among them. Nothing in this module uses the
//! closed-form coefficient formulas, although [`phi_vector_oracle`] accepts an
//! externally computed φ-vector as a search bound (and verifies it).
//!
//! # Search kernel
//!
//! A positive isotropic class `F` is encoded by its pairing tuple
//! `m_i = F · E_i ≥ 0` against the standard sequence together with `s = F · D`.
//! Because the Gram matrix is unimodular the map `F ↦ (m_1, …, m_9, s)` is a
//! bijection onto integer vectors, and with `m_10 = 3s − (m_1 + … + m_9)`:
//!
//! * `F² = s² − Σ m_i²`, so `F` is isotropic iff `Σ m_i = 3s` and `Σ m_i² = s²`;
//! * `3 F · L = Σ (3c_i) m_i` with `3c_i = L · D − 3 L · E_i` the (integral) tripled
//!   coordinates of `L` in the `E_i`;
//! * for `L` with `L² > 0` and any two classes `X`, `Y` in the closed positive cone,
//!   the reverse Cauchy–Schwarz inequality gives `X · Y ≤ 2 (X · L)(Y · L) / L²`.
//!   This bounds every `m_i` and `s` once `F · L ≤ cap`, so the search box is finite
//!   and provably complete.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::NumClass;
use crate::phi::{compare_tuples, PhiVector};
use crate::sequence::IsotropicSequence;

/// Rejects classes outside the positive cone.
pub fn check_big(l: &NumClass) -> Result<()> {
    let sq = l.self_int();
    if sq <= 0 {
        return Err(Error::NotBig(sq));
    }
    let dl = l.pair(&NumClass::d());
    if dl <= 0 {
        return Err(Error::NotPositive(dl));
    }
    Ok(())
}

fn isqrt(n: i64) -> i64 {
    if n <= 0 {
        return 0;
    }
    let mut r = (n as f64).sqrt() as i64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

fn sorted_by_pairing(l: &NumClass, mut v: Vec<NumClass>) -> Vec<NumClass> {
    v.sort_by_cached_key(|f| (f.pair(l), *f));
    v
}

/// Per-index bounds and weights of the pairing-tuple search.
struct Kernel {
    /// Processing order of the indices `0..10`.
    order: [usize; 10],
    /// Upper bound on `m_i`, in processing order.
    ub: [i64; 10],
    /// Shifted nonnegative weights of `3 F · L`, in processing order.
    w: [i64; 10],
    w_min: i64,
    suffix_ub_sum: [i64; 11],
    suffix_ub_max: [i64; 11],
    suffix_w_min: [i64; 11],
    s_max: i64,
    cap: i64,
}

impl Kernel {
    fn new(l: &NumClass, cap: i64, slack: i64) -> Self {
        let n = l.self_int() as i128;
        let p = l.standard_pairings();
        let dl = l.pair(&NumClass::d());
        let hodge = |x: i64| ((2 * cap as i128 * x as i128) / n) as i64 + slack;

        let raw_w: [i64; 10] = p.map(|pi| dl - 3 * pi);
        let w_min = *raw_w.iter().min().expect("nonempty");
        let mut order: [usize; 10] = std::array::from_fn(|i| i);
        order.sort_by_key(|&i| (std::cmp::Reverse(raw_w[i]), i));

        let ub = order.map(|i| hodge(p[i]));
        let w = order.map(|i| raw_w[i] - w_min);
        let mut suffix_ub_sum = [0; 11];
        let mut suffix_ub_max = [0; 11];
        let mut suffix_w_min = [i64::MAX; 11];
        for k in (0..10).rev() {
            suffix_ub_sum[k] = suffix_ub_sum[k + 1] + ub[k];
            suffix_ub_max[k] = suffix_ub_max[k + 1].max(ub[k]);
            suffix_w_min[k] = suffix_w_min[k + 1].min(w[k]);
        }
        Kernel {
            order,
            ub,
            w,
            w_min,
            suffix_ub_sum,
            suffix_ub_max,
            suffix_w_min,
            s_max: hodge(dl),
            cap,
        }
    }

    /// All positive primitive isotropic classes with `F · D = s` and `F · L ≤ cap`.
    fn search_level(&self, s: i64) -> Vec<NumClass> {
        let budget = 3 * self.cap - 3 * s * self.w_min;
        let mut out = Vec::new();
        if budget < 0 {
            return out;
        }
        let mut m = [0i64; 10];
        self.descend(0, s, 3 * s, s * s, budget, &mut m, &mut out);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn descend(
        &self,
        pos: usize,
        s: i64,
        rem_sum: i64,
        rem_sq: i64,
        budget: i64,
        m: &mut [i64; 10],
        out: &mut Vec<NumClass>,
    ) {
        let idx = self.order[pos];
        let ub = self.ub[pos].min(s);
        if pos == 9 {
            let v = rem_sum;
            if v <= ub && v * v == rem_sq && self.w[pos] * v <= budget {
                m[idx] = v;
                if let Some(f) = reconstruct(m, s) {
                    out.push(f);
                }
            }
            return;
        }
        let left = (9 - pos) as i64;
        let mut hi = ub.min(rem_sum).min(isqrt(rem_sq));
        if self.w[pos] > 0 {
            hi = hi.min(budget / self.w[pos]);
        }
        let rest_max = self.suffix_ub_max[pos + 1].min(s);
        for v in 0..=hi {
            let r = rem_sum - v;
            let q = rem_sq - v * v;
            let b = budget - self.w[pos] * v;
            if r > self.suffix_ub_sum[pos + 1] {
                continue;
            }
            // Cauchy–Schwarz: r² ≤ left·q; and q ≤ r·max(m) for the remaining entries
            if r * r > left * q || q > r * rest_max {
                continue;
            }
            if r * self.suffix_w_min[pos + 1] > b {
                continue;
            }
            m[idx] = v;
            self.descend(pos + 1, s, r, q, b, m, out);
        }
    }
}

/// Rebuilds `F` from its pairings: `F_i = m_10 − m_i` for `i ≤ 9`, `F_D = s − 3m_10`.
fn reconstruct(m: &[i64; 10], s: i64) -> Option<NumClass> {
    let mut c = [0i64; 10];
    for i in 0..9 {
        c[i] = m[9] - m[i];
    }
    c[9] = s - 3 * m[9];
    let f = NumClass::from_coords(c);
    debug_assert_eq!(f.self_int(), 0);
    (f.content() == 1).then_some(f)
}

/// All effective primitive isotropic `F` with `F · L ≤ cap`, sorted by `(F · L, coords)`.
///
/// Requires `L² > 0` and `L · D > 0`. A cap below `φ(L)` yields an empty list.
pub fn enumerate_isotropics(l: &NumClass, cap: i64) -> Result<Vec<NumClass>> {
    enumerate_isotropics_with_slack(l, cap, 0)
}

/// As [`enumerate_isotropics`], with every search bound widened by `slack`.
///
/// The result must not depend on `slack`; comparing slack 0 with slack 2 guards
/// the bound derivation.
pub fn enumerate_isotropics_with_slack(l: &NumClass, cap: i64, slack: i64) -> Result<Vec<NumClass>> {
    check_big(l)?;
    if cap < 1 {
        return Ok(Vec::new());
    }
    let kernel = Kernel::new(l, cap, slack.max(0));
    let found: Vec<NumClass> =
        (1..=kernel.s_max).into_par_iter().flat_map_iter(|s| kernel.search_level(s)).collect();
    Ok(sorted_by_pairing(l, found))
}

/// Naive reference search: every class whose first nine coordinates lie in
/// `[-radius, radius]`, with the `D`-coordinate solved from `F² = 0`.
pub fn box_search_isotropics(l: &NumClass, cap: i64, radius: i64) -> Result<Vec<NumClass>> {
    check_big(l)?;
    let side = 2 * radius + 1;
    let total = (side as u64).pow(9);
    let d = NumClass::d();
    let mut found: Vec<NumClass> = (0..side)
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut out = Vec::new();
            let mut x = [-radius; 9];
            x[0] = first - radius;
            for _ in 0..total / side as u64 {
                let sum: i64 = x.iter().sum();
                let sq: i64 = x.iter().map(|v| v * v).sum();
                // 10d² + 6·sum·d + (sum² − sq) = 0
                let disc = 10 * sq - sum * sum;
                if disc >= 0 {
                    let t = isqrt(disc);
                    if t * t == disc {
                        for num in [-3 * sum + t, -3 * sum - t] {
                            if num % 10 != 0 {
                                continue;
                            }
                            let mut c = [0i64; 10];
                            c[..9].copy_from_slice(&x);
                            c[9] = num / 10;
                            let f = NumClass::from_coords(c);
                            if f.is_zero() || f.content() != 1 || f.pair(&d) <= 0 {
                                continue;
                            }
                            if f.pair(l) <= cap {
                                out.push(f);
                            }
                        }
                    }
                }
                // odometer over x[1..9]
                for k in 1..9 {
                    if x[k] < radius {
                        x[k] += 1;
                        break;
                    }
                    x[k] = -radius;
                }
            }
            out
        })
        .collect();
    found.sort();
    found.dedup();
    Ok(sorted_by_pairing(l, found))
}

/// Grows the box radius from 1 until two consecutive radii give the same list.
/// Returns the list and the first stable radius, or `None` if `max_radius` is hit.
pub fn box_search_until_stable(
    l: &NumClass,
    cap: i64,
    max_radius: i64,
) -> Result<Option<(Vec<NumClass>, i64)>> {
    let mut prev = box_search_isotropics(l, cap, 1)?;
    for r in 2..=max_radius {
        let next = box_search_isotropics(l, cap, r)?;
        if next == prev {
            return Ok(Some((next, r - 1)));
        }
        prev = next;
    }
    Ok(None)
}

fn sorted_standard_tuple(l: &NumClass) -> [i64; 10] {
    let mut t = l.standard_pairings();
    t.sort_unstable();
    t
}

/// `φ(L) = min { F · L : F² = 0, F > 0 }`.
pub fn phi(l: &NumClass) -> Result<i64> {
    check_big(l)?;
    let cap = sorted_standard_tuple(l)[0];
    let found = enumerate_isotropics(l, cap)?;
    Ok(found[0].pair(l))
}

/// The eight smallest values of `F · L` over numerically distinct effective
/// primitive isotropic classes `F`.
pub fn eight_lowest(l: &NumClass) -> Result<[i64; 8]> {
    check_big(l)?;
    let cap = sorted_standard_tuple(l)[7];
    let found = enumerate_isotropics(l, cap)?;
    Ok(std::array::from_fn(|i| found[i].pair(l)))
}

/// Options for [`phi_vector_oracle`].
#[derive(Clone, Debug)]
pub struct OracleOptions {
    /// A candidate φ-vector, typically from the closed-form layer. Only used to
    /// tighten the search; the result never depends on it.
    pub hint: Option<PhiVector>,
    /// Maximum number of computing sequences to collect.
    pub max_sequences: usize,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { hint: None, max_sequences: 64 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub phi: PhiVector,
    /// One isotropic 10-sequence computing `phi`, ordered by pairing with `L`.
    pub witness: IsotropicSequence,
    /// Computing sequences (as sets, members ordered by pairing then coordinates),
    /// sorted lexicographically by member coordinates.
    pub sequences: Vec<IsotropicSequence>,
    /// False when `max_sequences` truncated the list.
    pub complete: bool,
}

/// Candidate classes with their pairings and a bitset adjacency for `F · F' = 1`.
struct Candidates {
    classes: Vec<NumClass>,
    degree: Vec<i64>,
    adjacency: Vec<Vec<u64>>,
    words: usize,
}

impl Candidates {
    fn new(l: &NumClass, classes: Vec<NumClass>) -> Self {
        let n = classes.len();
        let words = n.div_ceil(64);
        let degree = classes.iter().map(|f| f.pair(l)).collect();
        let adjacency = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut row = vec![0u64; words];
                for j in 0..n {
                    if j != i && classes[i].pair(&classes[j]) == 1 {
                        row[j / 64] |= 1 << (j % 64);
                    }
                }
                row
            })
            .collect();
        Candidates { classes, degree, adjacency, words }
    }

    /// Indices `> i` adjacent to `i`, intersected with `allowed`.
    fn narrow(&self, allowed: &[u64], i: usize) -> Vec<u64> {
        let mut out: Vec<u64> = allowed.iter().zip(&self.adjacency[i]).map(|(a, b)| a & b).collect();
        // clear indices ≤ i
        for (w, word) in out.iter_mut().enumerate() {
            let lo = w * 64;
            if lo + 64 <= i + 1 {
                *word = 0;
            } else if lo <= i {
                let keep = i + 1 - lo;
                *word &= !((1u64 << keep) - 1);
            }
        }
        out
    }

    fn all(&self) -> Vec<u64> {
        let n = self.classes.len();
        let mut v = vec![u64::MAX; self.words];
        if n % 64 != 0 {
            v[self.words - 1] = (1u64 << (n % 64)) - 1;
        }
        v
    }
}

fn bits(set: &[u64]) -> impl Iterator<Item = usize> + '_ {
    set.iter().enumerate().flat_map(|(w, &word)| {
        let mut word = word;
        std::iter::from_fn(move || {
            if word == 0 {
                return None;
            }
            let t = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(w * 64 + t)
        })
    })
}


struct MinSearch<'a> {
    cands: &'a Candidates,
    bound: [i64; 10],
    best: Option<([i64; 10], [usize; 10])>,
}

impl MinSearch<'_> {
    fn acceptable(&self, t: &[i64; 10]) -> bool {
        compare_tuples(t, &self.bound) != Ordering::Greater
            && self.best.as_ref().is_none_or(|(b, _)| compare_tuples(t, b) == Ordering::Less)
    }

    fn run(&mut self, depth: usize, allowed: &[u64], tuple: &mut [i64; 10], chosen: &mut [usize; 10]) {
        if depth == 10 {
            if self.acceptable(tuple) {
                self.best = Some((*tuple, *chosen));
            }
            return;
        }
        let need = 10 - depth;
        // completing with the cheapest remaining candidates is a lower bound in the order
        let mut lower = *tuple;
        let mut filled = depth;
        for i in bits(allowed).take(need) {
            lower[filled] = self.cands.degree[i];
            filled += 1;
        }
        if filled < 10 || !self.acceptable(&lower) {
            return;
        }
        for i in bits(allowed) {
            let v = self.cands.degree[i];
            let mut lower = *tuple;
            lower[depth..].fill(v);
            // this bound only grows along `allowed`
            if !self.acceptable(&lower) {
                break;
            }
            tuple[depth] = v;
            chosen[depth] = i;
            let next = self.cands.narrow(allowed, i);
            self.run(depth + 1, &next, tuple, chosen);
        }
    }
}

/// The ten smallest pairings over distinct classes.
fn lowest_ten(l: &NumClass, standard: &[i64; 10]) -> Result<[i64; 10]> {
    // the standard sequence supplies ten classes at or below its last entry
    let low = enumerate_isotropics(l, standard[9])?;
    Ok(std::array::from_fn(|i| low[i].pair(l)))
}

/// Minimum tuple among sequences whose tuple is at most `bound`.
///
/// Candidates are enumerated up to a growing cap, starting from the tenth
/// smallest pairing. Each round tightens the bound to the best tuple found so
/// far; the search stops once the cap reaches `Σ bound − low9`, where `low9` sums
/// the nine smallest pairings: no member of a competing sequence can lie beyond.
fn search_minimum(l: &NumClass, bound: &[i64; 10], lowest: &[i64; 10]) -> Result<Option<([i64; 10], IsotropicSequence)>> {
    let low9: i64 = lowest[..9].iter().sum();
    let mut bound = *bound;
    let mut best = None;
    let mut cap = lowest[9];
    loop {
        let needed = bound.iter().sum::<i64>() - low9;
        let cap_now = cap.min(needed).max(1);
        let cands = Candidates::new(l, enumerate_isotropics(l, cap_now)?);
        let mut search = MinSearch { cands: &cands, bound, best: None };
        search.run(0, &cands.all(), &mut [0; 10], &mut [0; 10]);
        if let Some((t, idx)) = search.best {
            let seq = IsotropicSequence::new(idx.map(|i| cands.classes[i]))
                .expect("clique of pairwise-1 isotropic classes is a 10-sequence");
            bound = t;
            best = Some((t, seq));
        }
        if cap_now >= bound.iter().sum::<i64>() - low9 {
            return Ok(best);
        }
        cap = cap_now.saturating_mul(2);
    }
}

/// All isotropic 10-sequences `S` with `(S_1 · L, …, S_10 · L) = target`, up to `limit`.
/// Returns the sequences and whether the list is complete.
pub fn computing_sequences(l: &NumClass, target: &[i64; 10], limit: usize) -> Result<(Vec<IsotropicSequence>, bool)> {
    check_big(l)?;
    let cands = Candidates::new(l, enumerate_isotropics(l, target[9])?);
    let mut found: Vec<[usize; 10]> = Vec::new();
    let mut chosen = [0usize; 10];
    let all = cands.all();
    collect(&cands, target, 0, &all, &mut chosen, &mut found, limit + 1);
    let complete = found.len() <= limit;
    found.truncate(limit);
    let mut seqs: Vec<IsotropicSequence> = found
        .into_iter()
        .map(|idx| {
            IsotropicSequence::new(idx.map(|i| cands.classes[i]))
                .expect("clique of pairwise-1 isotropic classes is a 10-sequence")
        })
        .collect();
    seqs.sort();
    Ok((seqs, complete))
}

fn collect(
    cands: &Candidates,
    target: &[i64; 10],
    depth: usize,
    allowed: &[u64],
    chosen: &mut [usize; 10],
    found: &mut Vec<[usize; 10]>,
    limit: usize,
) {
    if found.len() >= limit {
        return;
    }
    if depth == 10 {
        found.push(*chosen);
        return;
    }
    for i in bits(allowed) {
        match cands.degree[i].cmp(&target[depth]) {
            Ordering::Less => continue,
            Ordering::Greater => break,
            Ordering::Equal => {}
        }
        chosen[depth] = i;
        let next = cands.narrow(allowed, i);
        collect(cands, target, depth + 1, &next, chosen, found, limit);
        if found.len() >= limit {
            return;
        }
    }
}

/// The φ-vector of `L` straight from its definition: the minimum, under
/// [`compare_tuples`], of `(E_1 · L, …, E_10 · L)` over isotropic 10-sequences
/// ordered by degree, together with the sequences attaining it.
pub fn phi_vector_oracle(l: &NumClass, opts: &OracleOptions) -> Result<OracleResult> {
    check_big(l)?;
    // the standard sequence is itself a candidate, so its sorted tuple is attained
    let standard = sorted_standard_tuple(l);
    let mut bound = standard;
    if let Some(h) = &opts.hint {
        if compare_tuples(h.values(), &bound) == Ordering::Less {
            bound = *h.values();
        }
    }
    let lowest = lowest_ten(l, &standard)?;
    let found = match search_minimum(l, &bound, &lowest)? {
        Some(x) => Some(x),
        None if bound != standard => search_minimum(l, &standard, &lowest)?,
        None => None,
    };
    let (tuple, witness) = found.expect("the standard sequence attains its own tuple");
    let phi = PhiVector::new(tuple).expect("a minimal tuple satisfies the phi-vector conditions");
    let (sequences, complete) = if opts.max_sequences == 0 {
        (Vec::new(), false)
    } else {
        computing_sequences(l, &tuple, opts.max_sequences)?
    };
    Ok(OracleResult { phi, witness, sequences, complete })
}
