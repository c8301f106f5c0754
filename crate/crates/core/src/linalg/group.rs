//! Finitely generated abelian groups in invariant-factor form.

use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::Matrix;
use super::scalar::Integer;
use super::snf::invariant_factors;

/// `Z^rank ⊕ Z/d_1 ⊕ … ⊕ Z/d_t` with `2 ≤ d_1 | d_2 | … | d_t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct FgAbGroup {
    pub rank: usize,
    #[serde(with = "bigint_strings")]
    pub torsion: Vec<Integer>,
}

impl FgAbGroup {
    pub fn zero() -> Self {
        FgAbGroup::default()
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup { rank, torsion: Vec::new() }
    }

    pub fn cyclic(order: u64) -> Self {
        Self::from_cyclic(0, vec![Integer::from(order)])
    }

    /// `Z^free ⊕ ⊕ Z/o` for arbitrary orders (zero orders count as free,
    /// orders ±1 vanish), normalized to invariant factors.
    pub fn from_cyclic(free: usize, orders: Vec<Integer>) -> Self {
        let mut rank = free;
        let mut finite = Vec::new();
        for o in orders {
            if o.is_zero() {
                rank += 1;
            } else if !o.abs().is_one() {
                finite.push(o.abs());
            }
        }
        let n = finite.len();
        let diag = Matrix::from_triplets(n, n, finite.into_iter().enumerate().map(|(i, o)| (i, i, o)).collect());
        let (_, torsion) = invariant_factors(&diag);
        FgAbGroup { rank, torsion }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &FgAbGroup) -> FgAbGroup {
        let mut orders = self.torsion.clone();
        orders.extend(other.torsion.iter().cloned());
        FgAbGroup::from_cyclic(self.rank + other.rank, orders)
    }

    pub fn sum_all<'a>(groups: impl IntoIterator<Item = &'a FgAbGroup>) -> FgAbGroup {
        groups.into_iter().fold(FgAbGroup::zero(), |acc, g| acc.direct_sum(g))
    }

    /// Number of cyclic factors whose order is divisible by `p`.
    pub fn p_torsion_count(&self, p: u64) -> usize {
        let p = Integer::from(p);
        self.torsion.iter().filter(|d| d.is_multiple_of(&p)).count()
    }
}

pub fn tensor_fgab(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    let mut orders = Vec::new();
    for d in &a.torsion {
        orders.extend(std::iter::repeat_n(d.clone(), b.rank));
    }
    for e in &b.torsion {
        orders.extend(std::iter::repeat_n(e.clone(), a.rank));
    }
    for d in &a.torsion {
        for e in &b.torsion {
            orders.push(d.gcd(e));
        }
    }
    FgAbGroup::from_cyclic(a.rank * b.rank, orders)
}

pub fn tor_fgab(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    let mut orders = Vec::new();
    for d in &a.torsion {
        for e in &b.torsion {
            orders.push(d.gcd(e));
        }
    }
    FgAbGroup::from_cyclic(0, orders)
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

pub(crate) mod bigint_strings {
    use super::Integer;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Integer], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Integer>, D::Error> {
        let raw: Vec<String> = Vec::deserialize(d)?;
        raw.iter()
            .map(|s| s.parse().map_err(serde::de::Error::custom))
            .collect()
    }
}
