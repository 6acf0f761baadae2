use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::NumClass;

/// Ten effective primitive isotropic classes with `E_i · E_j = 1` for `i ≠ j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "[NumClass; 10]", into = "[NumClass; 10]")]
pub struct IsotropicSequence {
    members: [NumClass; 10],
}

impl IsotropicSequence {
    pub fn new(members: [NumClass; 10]) -> Result<Self> {
        for (i, m) in members.iter().enumerate() {
            let bad = |what: &str| Error::InvalidSequence(format!("member {} {what}", i + 1));
            if m.is_zero() {
                return Err(bad("is zero"));
            }
            if m.self_int() != 0 {
                return Err(bad("is not isotropic"));
            }
            if !m.is_primitive()? {
                return Err(bad("is not primitive"));
            }
            if !m.is_positive()? {
                return Err(bad("is not effective"));
            }
        }
        for i in 0..10 {
            for j in i + 1..10 {
                let p = members[i].pair(&members[j]);
                if p != 1 {
                    return Err(Error::InvalidSequence(format!(
                        "members {} and {} intersect in {p}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(IsotropicSequence { members })
    }

    /// The sequence `E_1, …, E_10` underlying the lattice coordinates.
    pub fn standard() -> Self {
        let members = std::array::from_fn(|i| NumClass::e(i + 1).expect("index in range"));
        IsotropicSequence { members }
    }

    pub fn members(&self) -> &[NumClass; 10] {
        &self.members
    }

    /// Member `E_i`, `1 ≤ i ≤ 10`.
    pub fn e(&self, i: usize) -> NumClass {
        self.members[i - 1]
    }

    /// `D = (E_1 + … + E_10) / 3`.
    pub fn d(&self) -> NumClass {
        let total: NumClass = self.members.iter().copied().sum();
        total.div_exact(3).expect("sum of an isotropic 10-sequence is divisible by 3")
    }

    /// `E_{i,j} = D − E_i − E_j`.
    pub fn pair_class(&self, i: usize, j: usize) -> NumClass {
        assert!(i != j, "E_{{i,j}} needs distinct indices");
        self.d() - self.e(i) - self.e(j)
    }

    /// `(E_1 · L, …, E_10 · L)`.
    pub fn pairings(&self, l: &NumClass) -> [i64; 10] {
        self.members.map(|m| m.pair(l))
    }

    /// Relabel: member `i` of the result is member `order[i]` (0-based) of `self`.
    pub fn reordered(&self, order: [usize; 10]) -> Self {
        IsotropicSequence { members: order.map(|k| self.members[k]) }
    }
}

impl TryFrom<[NumClass; 10]> for IsotropicSequence {
    type Error = Error;
    fn try_from(m: [NumClass; 10]) -> Result<Self> {
        Self::new(m)
    }
}

impl From<IsotropicSequence> for [NumClass; 10] {
    fn from(s: IsotropicSequence) -> Self {
        s.members
    }
}
