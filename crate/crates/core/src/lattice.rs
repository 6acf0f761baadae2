//! The Enriques lattice `Num S ≅ U ⊕ E8(-1)` with a distinguished isotropic 10-sequence.
//!
//! Classes are stored as ten integers in the basis `(E_1, …, E_9, D)`, where
//! `E_1, …, E_10` is a fixed isotropic 10-sequence (`E_i · E_j = 1` for `i ≠ j`)
//! and `D` satisfies `3D = E_1 + … + E_10`. In this basis `E_10 = 3D − (E_1 + … + E_9)`
//! and every `E_{i,j} = D − E_i − E_j` is an integer vector, so no rational
//! arithmetic is ever needed. The Gram matrix is unimodular of signature `(1, 9)`;
//! [`gram_determinant`] and [`gram_signature`] verify this rather than assume it.
//!
//! The canonical class `K` is numerically trivial 2-torsion. It is carried as a
//! single bit on [`PicClass`] and never enters the intersection form.
//!
//! All arithmetic is checked: an overflow panics instead of wrapping.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;

/// Rank of the lattice.
pub const RANK: usize = 10;

/// Index of the `D` coordinate.
const D_INDEX: usize = 9;

/// Gram matrix of the basis `(E_1, …, E_9, D)`.
pub const GRAM: [[i64; RANK]; RANK] = build_gram();

const fn build_gram() -> [[i64; RANK]; RANK] {
    let mut g = [[0i64; RANK]; RANK];
    let mut i = 0;
    while i < D_INDEX {
        let mut j = 0;
        while j < D_INDEX {
            g[i][j] = if i == j { 0 } else { 1 };
            j += 1;
        }
        g[i][D_INDEX] = 3;
        g[D_INDEX][i] = 3;
        i += 1;
    }
    g[D_INDEX][D_INDEX] = 10;
    g
}

/// Exact determinant of [`GRAM`].
pub fn gram_determinant() -> i128 {
    linalg::determinant(&GRAM)
}

/// Numbers of positive and negative eigenvalues of [`GRAM`], counted exactly
/// from the signs of its characteristic polynomial.
pub fn gram_signature() -> (usize, usize) {
    linalg::signature(&GRAM)
}

#[inline]
fn checked(v: Option<i64>) -> i64 {
    v.expect("lattice arithmetic overflowed i64")
}

#[inline]
fn narrow(v: i128) -> i64 {
    i64::try_from(v).expect("lattice arithmetic overflowed i64")
}

/// Greatest common divisor of absolute values; `gcd(0, 0) = 0`.
pub fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A numerical class, an element of `Num S`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NumClass([i64; RANK]);

impl NumClass {
    pub const ZERO: NumClass = NumClass([0; RANK]);

    pub const fn from_coords(coords: [i64; RANK]) -> Self {
        NumClass(coords)
    }

    pub fn coords(&self) -> &[i64; RANK] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// The class `D` with `3D = E_1 + … + E_10`.
    pub const fn d() -> Self {
        let mut c = [0; RANK];
        c[D_INDEX] = 1;
        NumClass(c)
    }

    /// `E_i` of the standard sequence, `1 ≤ i ≤ 10`.
    pub fn e(i: usize) -> Result<Self> {
        match i {
            1..=9 => {
                let mut c = [0; RANK];
                c[i - 1] = 1;
                Ok(NumClass(c))
            }
            10 => {
                let mut c = [-1; RANK];
                c[D_INDEX] = 3;
                Ok(NumClass(c))
            }
            _ => Err(Error::IndexOutOfRange(i)),
        }
    }

    /// `E_{i,j} = D − E_i − E_j` of the standard sequence.
    pub fn e_pair(i: usize, j: usize) -> Result<Self> {
        if i == j {
            if !(1..=10).contains(&i) {
                return Err(Error::IndexOutOfRange(i));
            }
            return Err(Error::EqualIndices(i));
        }
        Ok(Self::d() - Self::e(i)? - Self::e(j)?)
    }

    /// The intersection pairing.
    pub fn pair(&self, other: &NumClass) -> i64 {
        let (x, y) = (&self.0, &other.0);
        let mut sx: i128 = 0;
        let mut sy: i128 = 0;
        let mut diag: i128 = 0;
        for k in 0..D_INDEX {
            sx += x[k] as i128;
            sy += y[k] as i128;
            diag += x[k] as i128 * y[k] as i128;
        }
        let (dx, dy) = (x[D_INDEX] as i128, y[D_INDEX] as i128);
        narrow(sx * sy - diag + 3 * (dx * sy + dy * sx) + 10 * dx * dy)
    }

    pub fn self_int(&self) -> i64 {
        self.pair(self)
    }

    /// Arithmetic genus `L²/2 + 1` of a class of nonnegative square.
    pub fn genus(&self) -> Result<i64> {
        let sq = self.self_int();
        if sq < 0 {
            return Err(Error::NegativeSquare(sq));
        }
        debug_assert!(sq % 2 == 0, "the Enriques lattice is even");
        Ok(sq / 2 + 1)
    }

    /// Gcd of the coordinates.
    pub fn content(&self) -> i64 {
        self.0.iter().fold(0, |acc, &c| gcd(acc, c))
    }

    /// Whether the class is indivisible in `Num S`.
    pub fn is_primitive(&self) -> Result<bool> {
        match self.content() {
            0 => Err(Error::ZeroClass),
            c => Ok(c == 1),
        }
    }

    /// Whether a nonzero class of nonnegative square lies on the effective side,
    /// i.e. pairs positively with the ample class `D`.
    pub fn is_positive(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroClass);
        }
        let sq = self.self_int();
        if sq < 0 {
            return Err(Error::NegativeSquare(sq));
        }
        Ok(self.pair(&Self::d()) > 0)
    }

    pub fn is_two_divisible(&self) -> bool {
        self.0.iter().all(|c| c % 2 == 0)
    }

    /// `self / k` when every coordinate is divisible by `k`.
    pub fn div_exact(&self, k: i64) -> Option<NumClass> {
        if k == 0 || self.0.iter().any(|c| c % k != 0) {
            return None;
        }
        Some(NumClass(self.0.map(|c| c / k)))
    }

    /// Pairings `(self · E_1, …, self · E_10)` with the standard sequence.
    pub fn standard_pairings(&self) -> [i64; RANK] {
        let x = &self.0;
        let total: i128 = x[..D_INDEX].iter().map(|&c| c as i128).sum();
        let d = x[D_INDEX] as i128;
        let mut out = [0; RANK];
        for (i, o) in out.iter_mut().enumerate().take(D_INDEX) {
            *o = narrow(total - x[i] as i128 + 3 * d);
        }
        // E_10 · L = 3 D·L − Σ_{i≤9} E_i·L
        let dl = 3 * total + 10 * d;
        let rest: i128 = out[..D_INDEX].iter().map(|&c| c as i128).sum();
        out[D_INDEX] = narrow(3 * dl - rest);
        out
    }
}

impl fmt::Debug for NumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumClass{:?}", self.0)
    }
}

impl fmt::Display for NumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl Add for NumClass {
    type Output = NumClass;
    fn add(self, rhs: NumClass) -> NumClass {
        let mut out = self.0;
        for (o, r) in out.iter_mut().zip(rhs.0) {
            *o = checked(o.checked_add(r));
        }
        NumClass(out)
    }
}

impl Sub for NumClass {
    type Output = NumClass;
    fn sub(self, rhs: NumClass) -> NumClass {
        let mut out = self.0;
        for (o, r) in out.iter_mut().zip(rhs.0) {
            *o = checked(o.checked_sub(r));
        }
        NumClass(out)
    }
}

impl Neg for NumClass {
    type Output = NumClass;
    fn neg(self) -> NumClass {
        NumClass(self.0.map(|c| checked(c.checked_neg())))
    }
}

impl Mul<NumClass> for i64 {
    type Output = NumClass;
    fn mul(self, rhs: NumClass) -> NumClass {
        NumClass(rhs.0.map(|c| checked(c.checked_mul(self))))
    }
}

impl std::iter::Sum for NumClass {
    fn sum<I: Iterator<Item = NumClass>>(iter: I) -> NumClass {
        iter.fold(NumClass::ZERO, |a, b| a + b)
    }
}

/// The torsion bit `ε`: coefficient of the canonical class `K`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct Eps(bool);

impl Eps {
    pub const ZERO: Eps = Eps(false);
    pub const ONE: Eps = Eps(true);

    pub fn as_u8(self) -> u8 {
        self.0 as u8
    }

    pub fn is_one(self) -> bool {
        self.0
    }
}

impl TryFrom<u8> for Eps {
    type Error = Error;
    fn try_from(v: u8) -> Result<Eps> {
        match v {
            0 => Ok(Eps::ZERO),
            1 => Ok(Eps::ONE),
            other => Err(Error::InvalidEpsilon(other)),
        }
    }
}

impl From<Eps> for u8 {
    fn from(e: Eps) -> u8 {
        e.as_u8()
    }
}

impl fmt::Display for Eps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

/// A class in `Pic S`: a numerical class plus a multiple of `K`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct PicClass {
    #[serde(rename = "coords")]
    pub num: NumClass,
    pub eps: Eps,
}

impl PicClass {
    pub fn new(num: NumClass, eps: Eps) -> Self {
        PicClass { num, eps }
    }

    /// The canonical class.
    pub fn canonical() -> Self {
        PicClass::new(NumClass::ZERO, Eps::ONE)
    }
}

/// `E_i` of the standard sequence.
pub fn generator_e(i: usize) -> Result<NumClass> {
    NumClass::e(i)
}

/// `E_{i,j} = D − E_i − E_j` of the standard sequence.
pub fn generator_e_pair(i: usize, j: usize) -> Result<NumClass> {
    NumClass::e_pair(i, j)
}

/// `a · b`.
pub fn pair(a: &NumClass, b: &NumClass) -> i64 {
    a.pair(b)
}

/// `a_1E_1 + … + a_7E_7 + a_9E_9 + a_10E_10 + a_0E_{9,10} + εK` on the standard sequence.
pub fn from_decomposition(a: [i64; 7], a9: i64, a10: i64, a0: i64, eps: Eps) -> Result<PicClass> {
    const NAMES: [&str; 7] = ["a1", "a2", "a3", "a4", "a5", "a6", "a7"];
    for (name, &v) in NAMES.iter().zip(&a) {
        if v < 0 {
            return Err(Error::NegativeCoefficient { name, value: v });
        }
    }
    for (name, v) in [("a9", a9), ("a10", a10), ("a0", a0)] {
        if v < 0 {
            return Err(Error::NegativeCoefficient { name, value: v });
        }
    }
    let mut num = NumClass::ZERO;
    for (i, &c) in a.iter().enumerate() {
        num = num + c * NumClass::e(i + 1)?;
    }
    num = num + a9 * NumClass::e(9)? + a10 * NumClass::e(10)? + a0 * NumClass::e_pair(9, 10)?;
    Ok(PicClass::new(num, eps))
}
