//! The φ-vector and the order relation on 10-tuples used to define it.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Order on 10-tuples: first by sum, then lexicographically on the first nine entries.
///
/// Tuples with equal sums and equal first nine entries also agree in the tenth,
/// so `Equal` means the tuples are identical.
pub fn compare_tuples(a: &[i64; 10], b: &[i64; 10]) -> Ordering {
    let sa: i64 = a.iter().sum();
    let sb: i64 = b.iter().sum();
    sa.cmp(&sb).then_with(|| a[..9].cmp(&b[..9]))
}

/// A sorted 10-tuple `(φ_1, …, φ_10)` satisfying the admissibility conditions:
/// positive and nondecreasing, sum divisible by 3, and
/// `φ_1 + … + φ_7 ≥ 2(φ_8 + φ_9 + φ_10)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "[i64; 10]", into = "[i64; 10]")]
pub struct PhiVector([i64; 10]);

impl PhiVector {
    pub fn new(phi: [i64; 10]) -> Result<Self> {
        let err = |reason| Err(Error::InvalidPhiVector { phi, reason });
        if phi[0] <= 0 {
            return err("entries must be positive");
        }
        if phi.windows(2).any(|w| w[0] > w[1]) {
            return err("entries must be nondecreasing");
        }
        let sum: i64 = phi.iter().sum();
        if sum % 3 != 0 {
            return err("sum must be divisible by 3");
        }
        let low: i64 = phi[..7].iter().sum();
        let high: i64 = phi[7..].iter().sum();
        if low < 2 * high {
            return err("phi_1+...+phi_7 must be at least 2(phi_8+phi_9+phi_10)");
        }
        Ok(PhiVector(phi))
    }

    pub fn values(&self) -> &[i64; 10] {
        &self.0
    }

    /// `φ_i`, `1 ≤ i ≤ 10`.
    pub fn get(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `s = (φ_1 + … + φ_10) / 3`.
    pub fn s(&self) -> i64 {
        self.sum() / 3
    }

    /// `L² = (Σφ_i)²/9 − Σφ_i²`.
    pub fn self_int(&self) -> i64 {
        let s = self.s();
        s * s - self.0.iter().map(|p| p * p).sum::<i64>()
    }

    pub fn genus(&self) -> i64 {
        self.self_int() / 2 + 1
    }

    pub fn all_even(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }
}

impl TryFrom<[i64; 10]> for PhiVector {
    type Error = Error;
    fn try_from(v: [i64; 10]) -> Result<Self> {
        PhiVector::new(v)
    }
}

impl From<PhiVector> for [i64; 10] {
    fn from(p: PhiVector) -> Self {
        p.0
    }
}

impl PartialOrd for PhiVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PhiVector {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_tuples(&self.0, &other.0)
    }
}

impl fmt::Display for PhiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}
