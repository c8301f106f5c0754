//! Directed versus underlying homology for Σ-invariant complexes, and the
//! universal coefficient spot check.

use serde::Serialize;

use super::chain::SimplicialChains;
use super::embedded::{embedded_homology, DegreeGroup};
use crate::error::{Error, Result};
use crate::hyper::{factorial, Hyperdigraph};
use crate::linalg::{FgAbGroup, Fp, Integer};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SigmaLevel {
    /// Number of vertices per simplex.
    pub k: usize,
    pub directed_rank: usize,
    pub underlying_rank: usize,
    pub chain_identity: bool,
    pub directed_homology: FgAbGroup,
    pub underlying_power: FgAbGroup,
    pub homology_agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SigmaComparison {
    pub embedded: bool,
    pub levels: Vec<SigmaLevel>,
    pub chain_identity: bool,
    /// `"AGREE"` or `"MISMATCH"`.
    pub homology_verdict: String,
}

fn power(g: &FgAbGroup, times: u64) -> FgAbGroup {
    FgAbGroup::sum_all(std::iter::repeat_n(g, times as usize))
}

/// Compares `rank C_{k−1}` against `k!` times the underlying rank, and
/// `H_{k−1}(K⃗)` against `H_{k−1}(K)^{⊕k!}`; the homology side is reported,
/// never asserted. With `embedded`, the input may be any Σ-invariant
/// hyperdigraph and embedded homology is compared.
pub fn sigma_invariant_comparison(kd: &Hyperdigraph, embedded: bool) -> Result<SigmaComparison> {
    if !kd.is_sigma_invariant() {
        return Err(Error::NotSigmaInvariant);
    }
    let ku = kd.underlying();
    let (hd, hu): (Vec<DegreeGroup>, Vec<DegreeGroup>) = if embedded {
        (embedded_homology::<_, Integer>(kd, false, &())?.degrees, embedded_homology::<_, Integer>(&ku, false, &())?.degrees)
    } else {
        let cd = SimplicialChains::<Integer>::new(kd, false, &())?;
        let cu = SimplicialChains::<Integer>::new(&ku, false, &())?;
        let t = |c: &SimplicialChains<Integer>| {
            c.complex.homology().into_iter().map(|(n, group)| DegreeGroup { n, group }).collect()
        };
        (t(&cd), t(&cu))
    };
    let find = |v: &[DegreeGroup], n: i64| v.iter().find(|d| d.n == n).map(|d| d.group.clone()).unwrap_or_default();
    let levels: Vec<SigmaLevel> = (1..=kd.max_len())
        .map(|k| {
            let n = k as i64 - 1;
            let f = factorial(k);
            let directed_rank = kd.level_len(k);
            let underlying_rank = ku.level_len(k);
            let directed_homology = find(&hd, n);
            let underlying_power = power(&find(&hu, n), f);
            SigmaLevel {
                k,
                directed_rank,
                underlying_rank,
                chain_identity: directed_rank as u64 == f * underlying_rank as u64,
                homology_agrees: directed_homology == underlying_power,
                directed_homology,
                underlying_power,
            }
        })
        .collect();
    let chain_identity = levels.iter().all(|l| l.chain_identity);
    let agree = levels.iter().all(|l| l.homology_agrees);
    Ok(SigmaComparison {
        embedded,
        chain_identity,
        homology_verdict: if agree { "AGREE" } else { "MISMATCH" }.into(),
        levels,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UctDegree {
    pub n: i64,
    pub field_dim: usize,
    pub predicted: usize,
    pub holds: bool,
}

/// `dim_{GF(p)} H_n = rank H_n + #{p | torsion of H_n} + #{p | torsion of H_{n−1}}`.
pub fn universal_coefficients_check(chains_z: &SimplicialChains<Integer>, chains_p: &SimplicialChains<Fp>, p: u64) -> Vec<UctDegree> {
    let hz = chains_z.complex.homology();
    let hp = chains_p.complex.homology();
    let at = |n: i64| hz.iter().find(|(m, _)| *m == n).map(|(_, g)| g.clone()).unwrap_or_default();
    hp.iter()
        .map(|(n, g)| {
            let predicted = at(*n).rank + at(*n).p_torsion_count(p) + at(n - 1).p_torsion_count(p);
            UctDegree { n: *n, field_dim: g.rank, predicted, holds: g.rank == predicted }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyper::Hypergraph;

    #[test]
    fn two_vertex_full_complex_is_a_mismatch() {
        let k = Hyperdigraph::from_lists(&[vec![0, 1], vec![1, 0], vec![0], vec![1]]).unwrap();
        let r = sigma_invariant_comparison(&k, false).unwrap();
        assert!(r.chain_identity);
        assert_eq!(r.levels[1].directed_rank, 2);
        assert_eq!(r.levels[1].directed_homology, FgAbGroup::free(1));
        assert!(r.levels[1].underlying_power.is_trivial());
        assert_eq!(r.homology_verdict, "MISMATCH");
    }

    #[test]
    fn single_vertex_agrees() {
        let k = Hyperdigraph::from_lists(&[vec![0]]).unwrap();
        assert_eq!(sigma_invariant_comparison(&k, false).unwrap().homology_verdict, "AGREE");
    }

    #[test]
    fn rejects_non_invariant() {
        let k = Hyperdigraph::from_lists(&[vec![0, 1], vec![0], vec![1]]).unwrap();
        assert!(matches!(sigma_invariant_comparison(&k, false), Err(Error::NotSigmaInvariant)));
    }

    #[test]
    fn uct_on_projective_plane() {
        let f = [[1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 6, 2], [2, 3, 5], [3, 4, 6], [4, 5, 2], [5, 6, 3], [6, 2, 4]];
        let k = Hypergraph::from_lists(&f.iter().map(|t| t.to_vec()).collect::<Vec<_>>()).unwrap().delta_closure();
        let z = SimplicialChains::<Integer>::new(&k, false, &()).unwrap();
        for p in [2, 3] {
            let c = SimplicialChains::<Fp>::new(&k, false, &p).unwrap();
            assert!(universal_coefficients_check(&z, &c, p).iter().all(|d| d.holds));
        }
    }
}
