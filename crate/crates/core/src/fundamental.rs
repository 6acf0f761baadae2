//! Fundamental presentations: validation of simple isotropic decompositions,
//! the rewriting algorithm, and the coefficient/φ-vector dictionary.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::{Error, Result};
use crate::lattice::{from_decomposition, Eps, NumClass, PicClass};
use crate::oracle::{phi_vector_oracle, OracleOptions};
use crate::phi::PhiVector;
use crate::sequence::IsotropicSequence;

/// Coefficients of `L ~ a_1E_1 + … + a_7E_7 + a_9E_9 + a_10E_10 + a_0E_{9,10} + εK`
/// with `a_1 ≥ … ≥ a_7 ≥ 0`, `a_9 + a_10 ≥ a_0 ≥ a_9 ≥ a_10 ≥ 0`, and `ε = 1`
/// only when every coefficient is even.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawCoefficients", into = "RawCoefficients")]
pub struct FundamentalCoefficients {
    a0: i64,
    a: [i64; 7],
    a9: i64,
    a10: i64,
    eps: Eps,
}

#[derive(Serialize, Deserialize)]
struct RawCoefficients {
    a0: i64,
    a: [i64; 7],
    a9: i64,
    a10: i64,
    eps: Eps,
}

impl TryFrom<RawCoefficients> for FundamentalCoefficients {
    type Error = Error;
    fn try_from(r: RawCoefficients) -> Result<Self> {
        FundamentalCoefficients::new(r.a0, r.a, r.a9, r.a10, r.eps)
    }
}

impl From<FundamentalCoefficients> for RawCoefficients {
    fn from(c: FundamentalCoefficients) -> Self {
        RawCoefficients { a0: c.a0, a: c.a, a9: c.a9, a10: c.a10, eps: c.eps }
    }
}

impl FundamentalCoefficients {
    pub fn new(a0: i64, a: [i64; 7], a9: i64, a10: i64, eps: Eps) -> Result<Self> {
        if a0 < 0 || a9 < 0 || a10 < 0 || a.iter().any(|&x| x < 0) {
            return Err(Error::InvalidCoefficients("coefficients must be nonnegative"));
        }
        if a.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidCoefficients("a1 >= ... >= a7 fails"));
        }
        if !(a9 + a10 >= a0 && a0 >= a9 && a9 >= a10) {
            return Err(Error::InvalidCoefficients("a9 + a10 >= a0 >= a9 >= a10 fails"));
        }
        let c = FundamentalCoefficients { a0, a, a9, a10, eps };
        if eps.is_one() && !c.all_even() {
            return Err(Error::InvalidCoefficients("eps = 1 needs all coefficients even"));
        }
        Ok(c)
    }

    pub fn a0(&self) -> i64 {
        self.a0
    }

    /// `(a_1, …, a_7)`.
    pub fn a(&self) -> &[i64; 7] {
        &self.a
    }

    pub fn a9(&self) -> i64 {
        self.a9
    }

    pub fn a10(&self) -> i64 {
        self.a10
    }

    pub fn eps(&self) -> Eps {
        self.eps
    }

    pub fn with_eps(self, eps: Eps) -> Result<Self> {
        Self::new(self.a0, self.a, self.a9, self.a10, eps)
    }

    /// All ten coefficients: `a_0, a_1, …, a_7, a_9, a_10`.
    pub fn all(&self) -> [i64; 10] {
        let a = &self.a;
        [self.a0, a[0], a[1], a[2], a[3], a[4], a[5], a[6], self.a9, self.a10]
    }

    /// `a = a_0 + a_1 + … + a_7 + a_9 + a_10`.
    pub fn sum(&self) -> i64 {
        self.all().iter().sum()
    }

    pub fn all_even(&self) -> bool {
        self.all().iter().all(|x| x % 2 == 0)
    }

    /// `L² = a² − Σ a_i² + 2a_0(a_9 + a_10)`.
    pub fn self_int(&self) -> i64 {
        let a = self.sum();
        let sq: i64 = self.all().iter().map(|x| x * x).sum();
        a * a - sq + 2 * self.a0 * (self.a9 + self.a10)
    }

    pub fn genus(&self) -> i64 {
        self.self_int() / 2 + 1
    }

    /// The class on the standard sequence.
    pub fn pic_class(&self) -> PicClass {
        from_decomposition(self.a, self.a9, self.a10, self.a0, self.eps)
            .expect("validated coefficients are nonnegative")
    }

    /// The class on an arbitrary isotropic 10-sequence.
    pub fn class_on(&self, seq: &IsotropicSequence) -> NumClass {
        let mut num = NumClass::ZERO;
        for (i, &c) in self.a.iter().enumerate() {
            num = num + c * seq.e(i + 1);
        }
        num + self.a9 * seq.e(9) + self.a10 * seq.e(10) + self.a0 * seq.pair_class(9, 10)
    }
}

/// Prints the `a0;a1,…,a7;a9,a10` shape.
impl fmt::Display for FundamentalCoefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head: Vec<String> = self.a.iter().map(i64::to_string).collect();
        write!(f, "{};{};{},{}", self.a0, head.join(","), self.a9, self.a10)
    }
}

/// `a_i = φ_8 − φ_i` (`i ≤ 7`), `a_i = s − 2φ_8 − φ_i` (`i = 9, 10`), `a_0 = s − 3φ_8`.
/// The result carries `ε = 0`.
pub fn coefficients_from_phivector(p: &PhiVector) -> FundamentalCoefficients {
    let s = p.s();
    let f8 = p.get(8);
    let a = std::array::from_fn(|i| f8 - p.get(i + 1));
    FundamentalCoefficients::new(s - 3 * f8, a, s - 2 * f8 - p.get(9), s - 2 * f8 - p.get(10), Eps::ZERO)
        .expect("a valid phi-vector yields valid coefficients")
}

/// Inverse of [`coefficients_from_phivector`]: with `a` the coefficient sum,
/// `φ_i = a − a_i` (`i ≤ 7`), `φ_8 = a`, `φ_i = a + a_0 − a_i` (`i = 9, 10`).
///
/// Fails when every coefficient vanishes, or on a zero-square class.
pub fn phivector_from_coefficients(c: &FundamentalCoefficients) -> Result<PhiVector> {
    let a = c.sum();
    let mut phi = [0i64; 10];
    for i in 0..7 {
        phi[i] = a - c.a[i];
    }
    phi[7] = a;
    phi[8] = a + c.a0 - c.a9;
    phi[9] = a + c.a0 - c.a10;
    PhiVector::new(phi)
}

/// Forces `ε = 0` as soon as some coefficient is odd.
pub fn epsilon_normalize(c: FundamentalCoefficients) -> FundamentalCoefficients {
    if c.all_even() {
        c
    } else {
        FundamentalCoefficients { eps: Eps::ZERO, ..c }
    }
}

/// `ε_L`: the torsion bit survives only on 2-divisible classes.
pub fn normalized_eps(num: &NumClass, eps: Eps) -> Eps {
    if num.is_two_divisible() {
        eps
    } else {
        Eps::ZERO
    }
}

/// A fundamental presentation with the isotropic 10-sequence it lives on.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Presentation {
    pub coefficients: FundamentalCoefficients,
    pub sequence: IsotropicSequence,
}

/// Working state of the rewriting algorithm: coefficients `c[i]` on `seq[i]`
/// and `a0` on `D − seq[8] − seq[9]`.
#[derive(Clone, Copy, Debug)]
struct Rewrite {
    seq: [NumClass; 10],
    c: [i64; 10],
    a0: i64,
}

impl Rewrite {
    fn d(&self) -> NumClass {
        let total: NumClass = self.seq.iter().copied().sum();
        total.div_exact(3).expect("sequence sum is divisible by 3")
    }

    fn class(&self) -> NumClass {
        let mut num = NumClass::ZERO;
        for (c, e) in self.c.iter().zip(&self.seq) {
            num = num + *c * *e;
        }
        num + self.a0 * (self.d() - self.seq[8] - self.seq[9])
    }

    /// Stable descending sort of the first `k` slots.
    fn sort_front(&mut self, k: usize) {
        let mut idx: Vec<usize> = (0..k).collect();
        idx.sort_by_key(|&i| std::cmp::Reverse(self.c[i]));
        let (seq, c) = (self.seq, self.c);
        for (dst, &src) in idx.iter().enumerate() {
            self.seq[dst] = seq[src];
            self.c[dst] = c[src];
        }
    }

    /// `E_1 + … + E_8 = 2E_9 + 2E_10 + 3E_{9,10}` applied `c[7]` times.
    fn absorb_eighth(&mut self) {
        let t = self.c[7];
        if t > 0 {
            for x in &mut self.c[..8] {
                *x -= t;
            }
            self.c[8] += 2 * t;
            self.c[9] += 2 * t;
            self.a0 += 3 * t;
        }
    }

    fn order_last_pair(&mut self) {
        if self.c[8] < self.c[9] {
            self.seq.swap(8, 9);
            self.c.swap(8, 9);
        }
    }

    /// Brings the state to `c[7] = 0`, `c[0..7]` descending, `c[8] ≥ c[9]`.
    fn normalize_front(&mut self) {
        if self.a0 == 0 {
            // no E_{9,10} term: the whole sequence may be relabeled
            self.sort_front(10);
        } else {
            self.sort_front(8);
        }
        self.absorb_eighth();
        self.sort_front(8);
        self.order_last_pair();
    }

    /// Case `a_0 < a_9`: move `a_0 (E_9 + E_{9,10}) = a_0 (E_8 + E_{8,10})` and absorb
    /// over `{E_1, …, E_7, E_9}`; `E_{8,10}` becomes the new `E_{9,10}`.
    fn lower_ninth(&mut self) {
        let (c, a0, seq) = (self.c, self.a0, self.seq);
        let b = (c[8] - a0).min(c[6]);
        let mut front = [(NumClass::ZERO, 0i64); 8];
        for i in 0..7 {
            front[i] = (seq[i], c[i] - b);
        }
        front[7] = (seq[8], c[8] - a0 - b);
        for (i, (e, x)) in front.into_iter().enumerate() {
            self.seq[i] = e;
            self.c[i] = x;
        }
        self.seq[8] = seq[7];
        self.c[8] = a0 + 2 * b;
        self.seq[9] = seq[9];
        self.c[9] = c[9] + 2 * b;
        self.a0 = a0 + 3 * b;
        self.sort_front(8);
        debug_assert_eq!(self.c[7], 0);
        self.order_last_pair();
    }

    /// Case `a_9 + a_10 < a_0`: pass to `{E_1, …, E_7, E_{9,10}, E_{8,10}, E_{8,9}}`,
    /// whose own `E_{9,10}` is the old `E_8`, then absorb over its first eight.
    fn swap_sequence(&mut self) {
        let (c, a0, seq) = (self.c, self.a0, self.seq);
        let d = self.d();
        let excess = a0 - c[8] - c[9];
        let b = excess.min(c[6]);
        for i in 0..7 {
            self.c[i] = c[i] - b;
        }
        self.seq[7] = d - seq[8] - seq[9];
        self.c[7] = excess - b;
        self.seq[8] = d - seq[7] - seq[9];
        self.c[8] = c[8] + 2 * b;
        self.seq[9] = d - seq[7] - seq[8];
        self.c[9] = c[9] + 2 * b;
        self.a0 = c[8] + c[9] + 3 * b;
        self.sort_front(8);
        debug_assert_eq!(self.c[7], 0);
    }

    fn is_fundamental(&self) -> bool {
        self.c[7] == 0
            && self.c[..7].windows(2).all(|w| w[0] >= w[1])
            && self.c[8] + self.c[9] >= self.a0
            && self.a0 >= self.c[8]
            && self.c[8] >= self.c[9]
    }
}

/// Rewrites `a_1E_1 + … + a_10E_10 + a_0E_{9,10} + εK` on `seq` into fundamental form.
///
/// `a` holds the coefficients of `E_1, …, E_10`. The returned sequence carries the
/// presentation: its eighth member has coefficient zero.
pub fn rewrite_on(seq: &IsotropicSequence, a: [i64; 10], a0: i64, eps: Eps) -> Result<Presentation> {
    const NAMES: [&str; 10] = ["a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9", "a10"];
    for (name, &v) in NAMES.iter().zip(&a) {
        if v < 0 {
            return Err(Error::NegativeCoefficient { name, value: v });
        }
    }
    if a0 < 0 {
        return Err(Error::NegativeCoefficient { name: "a0", value: a0 });
    }
    let mut st = Rewrite { seq: *seq.members(), c: a, a0 };
    let target = st.class();
    if target.is_zero() {
        return Err(Error::ZeroClass);
    }
    let sq = target.self_int();
    if sq <= 0 {
        return Err(Error::NotBig(sq));
    }

    st.normalize_front();
    let mut passes = 0;
    while st.a0 < st.c[8] {
        assert!(passes < 2, "the a0 < a9 step settles within two passes");
        st.lower_ninth();
        passes += 1;
    }
    if st.c[8] + st.c[9] < st.a0 {
        st.swap_sequence();
    }
    assert!(st.is_fundamental(), "rewriting ended outside the fundamental chamber: {st:?}");
    debug_assert_eq!(st.class(), target);

    let c = &st.c;
    let coefficients = FundamentalCoefficients::new(
        st.a0,
        std::array::from_fn(|i| c[i]),
        c[8],
        c[9],
        normalized_eps(&target, eps),
    )?;
    let sequence = IsotropicSequence::new(st.seq).expect("rewriting preserves isotropic 10-sequences");
    Ok(Presentation { coefficients, sequence })
}

/// [`rewrite_on`] for the standard sequence.
pub fn rewrite_to_fundamental(a: [i64; 10], a0: i64, eps: Eps) -> Result<Presentation> {
    rewrite_on(&IsotropicSequence::standard(), a, a0, eps)
}

/// Fundamental presentation of an arbitrary big positive class, via the oracle.
pub fn fundamental_presentation(l: &PicClass) -> Result<Presentation> {
    let result = phi_vector_oracle(&l.num, &OracleOptions { hint: None, max_sequences: 0 })?;
    let coefficients = coefficients_from_phivector(&result.phi)
        .with_eps(normalized_eps(&l.num, l.eps))?;
    assert_eq!(
        coefficients.class_on(&result.witness),
        l.num,
        "a computing sequence carries the fundamental presentation"
    );
    Ok(Presentation { coefficients, sequence: result.witness })
}

/// A formal sum `Σ c_i F_i + εK` with positive integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub terms: Vec<(i64, NumClass)>,
    pub eps: Eps,
}

impl Decomposition {
    pub fn class(&self) -> PicClass {
        let num = self.terms.iter().map(|(c, f)| *c * *f).sum();
        PicClass::new(num, self.eps)
    }
}

/// Why a decomposition is not simple.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DecompositionDefect {
    #[error("no terms")]
    Empty,
    #[error("{0} terms, at most 10 allowed")]
    TooManyTerms(usize),
    #[error("term {0} has a nonpositive coefficient")]
    NonPositiveCoefficient(usize),
    #[error("term {0} is not isotropic")]
    NotIsotropic(usize),
    #[error("term {0} is zero or not primitive")]
    NotPrimitive(usize),
    #[error("term {0} is not effective")]
    NotEffective(usize),
    #[error("terms {0} and {1} intersect in {2}")]
    ForbiddenPairing(usize, usize, i64),
    #[error("nine terms with all pairings 1")]
    NineMutuallyUnit,
    #[error("ten terms with one pairing 2")]
    TenWithOneDouble,
    #[error("two pairings 2 without a shared term")]
    DisjointDoubles,
    #[error("more than two pairings 2")]
    TooManyDoubles,
}

/// Checks that `d` is a simple isotropic decomposition: at most ten primitive
/// effective isotropic terms whose pairings are all 1, except for either one
/// pairing 2 (then fewer than ten terms) or two pairings 2 sharing a term; with
/// no pairing 2 the number of terms is not nine.
pub fn validate_simple_decomposition(d: &Decomposition) -> std::result::Result<(), DecompositionDefect> {
    use DecompositionDefect as D;
    let n = d.terms.len();
    if n == 0 {
        return Err(D::Empty);
    }
    if n > 10 {
        return Err(D::TooManyTerms(n));
    }
    let origin = NumClass::d();
    for (i, (c, f)) in d.terms.iter().enumerate() {
        if *c <= 0 {
            return Err(D::NonPositiveCoefficient(i + 1));
        }
        if f.is_zero() || f.content() != 1 {
            return Err(D::NotPrimitive(i + 1));
        }
        if f.self_int() != 0 {
            return Err(D::NotIsotropic(i + 1));
        }
        if f.pair(&origin) <= 0 {
            return Err(D::NotEffective(i + 1));
        }
    }
    let mut doubles = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            match d.terms[i].1.pair(&d.terms[j].1) {
                1 => {}
                2 => doubles.push((i, j)),
                v => return Err(D::ForbiddenPairing(i + 1, j + 1, v)),
            }
        }
    }
    match doubles.as_slice() {
        [] if n == 9 => Err(D::NineMutuallyUnit),
        [] => Ok(()),
        [_] if n == 10 => Err(D::TenWithOneDouble),
        [_] => Ok(()),
        [(a, b), (c, e)] if a == c || a == e || b == c || b == e => Ok(()),
        [_, _] => Err(D::DisjointDoubles),
        _ => Err(D::TooManyDoubles),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize) -> NumClass {
        NumClass::e(i).unwrap()
    }

    fn ep(i: usize, j: usize) -> NumClass {
        NumClass::e_pair(i, j).unwrap()
    }

    fn coeffs(a0: i64, a: [i64; 7], a9: i64, a10: i64) -> FundamentalCoefficients {
        FundamentalCoefficients::new(a0, a, a9, a10, Eps::ZERO).unwrap()
    }

    fn star() -> FundamentalCoefficients {
        coeffs(4, [7, 6, 5, 4, 3, 2, 1], 3, 2)
    }

    #[test]
    fn coefficient_validation() {
        assert!(FundamentalCoefficients::new(1, [0; 7], 2, 0, Eps::ZERO).is_err());
        assert!(FundamentalCoefficients::new(3, [0; 7], 1, 1, Eps::ZERO).is_err());
        assert!(FundamentalCoefficients::new(0, [1, 2, 0, 0, 0, 0, 0], 0, 0, Eps::ZERO).is_err());
        assert!(FundamentalCoefficients::new(0, [1, 1, 0, 0, 0, 0, 0], 0, 0, Eps::ONE).is_err());
        assert!(FundamentalCoefficients::new(0, [2, 2, 0, 0, 0, 0, 0], 0, 0, Eps::ONE).is_ok());
    }

    #[test]
    fn star_dictionary() {
        let p = PhiVector::new([30, 31, 32, 33, 34, 35, 36, 37, 38, 39]).unwrap();
        assert_eq!(coefficients_from_phivector(&p), star());
        assert_eq!(phivector_from_coefficients(&star()), Ok(p));
        assert_eq!(star().genus(), 621);
        assert_eq!(star().to_string(), "4;7,6,5,4,3,2,1;3,2");
    }

    #[test]
    fn phi_one_dictionary() {
        for g in 2..20 {
            let mut phi = [g; 10];
            phi[0] = 1;
            phi[1] = g - 1;
            let c = coefficients_from_phivector(&PhiVector::new(phi).unwrap());
            assert_eq!(c, coeffs(0, [g - 1, 1, 0, 0, 0, 0, 0], 0, 0));
        }
    }

    #[test]
    fn small_dictionary_examples() {
        let nines = PhiVector::new([9; 10]).unwrap();
        assert_eq!(coefficients_from_phivector(&nines), coeffs(3, [0; 7], 3, 3));
        let c = coeffs(0, [1, 1, 0, 0, 0, 0, 0], 0, 0);
        assert_eq!(phivector_from_coefficients(&c).unwrap().values(), &[1, 1, 2, 2, 2, 2, 2, 2, 2, 2]);
        assert_eq!(c.genus(), 2);
    }

    #[test]
    fn closed_form_square_matches_lattice() {
        for c in [star(), coeffs(3, [0; 7], 3, 3), coeffs(2, [5, 3, 3, 1, 0, 0, 0], 2, 1)] {
            assert_eq!(c.self_int(), c.pic_class().num.self_int());
        }
    }

    #[test]
    fn epsilon_rules() {
        let even = FundamentalCoefficients::new(0, [2, 2, 0, 0, 0, 0, 0], 0, 0, Eps::ONE).unwrap();
        assert_eq!(epsilon_normalize(even), even);
        let zero = even.with_eps(Eps::ZERO).unwrap();
        assert_eq!(epsilon_normalize(zero), zero);
        assert_eq!(normalized_eps(&(e(1) + e(2)), Eps::ONE), Eps::ZERO);
        assert_eq!(normalized_eps(&(2 * e(1) + 2 * e(2)), Eps::ONE), Eps::ONE);
    }

    #[test]
    fn rewrite_absorbs_full_sequence_into_three_d() {
        let p = rewrite_to_fundamental([1; 10], 0, Eps::ZERO).unwrap();
        assert_eq!(p.coefficients, coeffs(3, [0; 7], 3, 3));
        assert_eq!(p.coefficients.class_on(&p.sequence), 3 * NumClass::d());
    }

    #[test]
    fn rewrite_keeps_fundamental_input() {
        let p = rewrite_to_fundamental([7, 6, 5, 4, 3, 2, 1, 0, 3, 2], 4, Eps::ZERO).unwrap();
        assert_eq!(p.coefficients, star());
        assert_eq!(p.sequence, IsotropicSequence::standard());
    }

    #[test]
    fn rewrite_low_a0_case() {
        let mut a = [0; 10];
        a[8] = 5;
        let p = rewrite_to_fundamental(a, 1, Eps::ZERO).unwrap();
        let target = 5 * e(9) + ep(9, 10);
        assert_eq!(p.coefficients.class_on(&p.sequence), target);
        assert_eq!(p.sequence.e(8).pair(&target), p.coefficients.sum());
    }

    #[test]
    fn rewrite_high_a0_case() {
        let mut a = [0; 10];
        a[0] = 2;
        a[8] = 1;
        let p = rewrite_to_fundamental(a, 5, Eps::ZERO).unwrap();
        assert_eq!(p.coefficients.class_on(&p.sequence), 2 * e(1) + e(9) + 5 * ep(9, 10));
    }

    #[test]
    fn rewrite_rejects_bad_input() {
        let mut a = [0; 10];
        a[0] = 1;
        assert_eq!(rewrite_to_fundamental(a, 0, Eps::ZERO), Err(Error::NotBig(0)));
        assert_eq!(rewrite_to_fundamental([0; 10], 0, Eps::ZERO), Err(Error::ZeroClass));
        a[3] = -1;
        assert!(matches!(rewrite_to_fundamental(a, 0, Eps::ZERO), Err(Error::NegativeCoefficient { .. })));
    }

    #[test]
    fn presentation_examples() {
        let three_d = PicClass::new(3 * NumClass::d(), Eps::ZERO);
        let p = fundamental_presentation(&three_d).unwrap();
        assert_eq!(p.coefficients, coeffs(3, [0; 7], 3, 3));

        let l = 2 * e(1) + 2 * e(2);
        let plus = fundamental_presentation(&PicClass::new(l, Eps::ZERO)).unwrap();
        assert_eq!(plus.coefficients, coeffs(0, [2, 2, 0, 0, 0, 0, 0], 0, 0));
        let minus = fundamental_presentation(&PicClass::new(l, Eps::ONE)).unwrap();
        assert_eq!(minus.coefficients.eps(), Eps::ONE);
        assert_eq!(minus.coefficients.a(), plus.coefficients.a());
    }

    #[test]
    fn simple_decompositions() {
        let dec = |terms: Vec<(i64, NumClass)>| Decomposition { terms, eps: Eps::ZERO };
        assert_eq!(validate_simple_decomposition(&dec(vec![(2, e(1)), (1, ep(1, 2))])), Ok(()));
        assert_eq!(validate_simple_decomposition(&dec(vec![(1, e(1)), (1, e(2))])), Ok(()));
        let nine = dec((1..=9).map(|i| (1, e(i))).collect());
        assert_eq!(validate_simple_decomposition(&nine), Err(DecompositionDefect::NineMutuallyUnit));
        let ten = dec((1..=10).map(|i| (1, e(i))).collect());
        assert_eq!(validate_simple_decomposition(&ten), Ok(()));
        // E_{1,2} meets E_1 and E_2 in 2
        let shared = dec(vec![(1, ep(1, 2)), (1, e(1)), (1, e(2)), (1, e(3))]);
        assert_eq!(validate_simple_decomposition(&shared), Ok(()));
        let disjoint = dec(vec![(1, ep(1, 2)), (1, e(1)), (1, ep(3, 4)), (1, e(3))]);
        assert!(validate_simple_decomposition(&disjoint).is_err());
        let mut ten_double: Vec<(i64, NumClass)> = (1..=9).map(|i| (1, e(i))).collect();
        ten_double.push((1, ep(1, 10)));
        assert!(validate_simple_decomposition(&dec(ten_double)).is_err());
        assert_eq!(validate_simple_decomposition(&dec(vec![(1, e(1)), (1, e(1))])), Err(DecompositionDefect::ForbiddenPairing(1, 2, 0)));
        assert_eq!(validate_simple_decomposition(&dec(vec![(0, e(1))])), Err(DecompositionDefect::NonPositiveCoefficient(1)));
    }
}
