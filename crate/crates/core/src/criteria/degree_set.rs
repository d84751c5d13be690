use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{CoxRing, Monomial, MultiDegree};
use crate::error::{invalid, Error, Result};
use crate::groebner::{minimalize_monomials, Ideal};

/// An upward-closed set of nonnegative degrees, stored by its minimal
/// elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeSet {
    rank: usize,
    #[serde(rename = "minimalGenerators")]
    generators: Vec<MultiDegree>,
}

impl DegreeSet {
    pub fn new(rank: usize, gens: Vec<MultiDegree>) -> Result<Self> {
        for g in &gens {
            if g.rank() != rank {
                return Err(Error::DimensionMismatch { expected: rank, found: g.rank() });
            }
            if !g.is_nonnegative() {
                return invalid(format!("degree set generator {g} is not effective"));
            }
        }
        let mut sorted = gens;
        sorted.sort_by(|a, b| {
            let sa: i64 = a.coords().iter().sum();
            let sb: i64 = b.coords().iter().sum();
            sa.cmp(&sb).then(a.lex_cmp(b))
        });
        sorted.dedup();
        let mut min: Vec<MultiDegree> = Vec::new();
        for g in sorted {
            if !min.iter().any(|m| m.le(&g).expect("same rank")) {
                min.push(g);
            }
        }
        Ok(DegreeSet { rank, generators: min })
    }

    pub fn empty(rank: usize) -> Self {
        DegreeSet { rank, generators: Vec::new() }
    }

    /// All of `N^rank`.
    pub fn everything(rank: usize) -> Self {
        DegreeSet { rank, generators: vec![MultiDegree::zero(rank)] }
    }

    /// `{u : u_i >= k}`.
    pub fn coordinate_at_least(rank: usize, i: usize, k: i64) -> Self {
        let mut v = vec![0; rank];
        v[i] = k;
        DegreeSet { rank, generators: vec![MultiDegree::new(v)] }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[MultiDegree] {
        &self.generators
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, d: &MultiDegree) -> bool {
        d.rank() == self.rank && self.generators.iter().any(|g| g.le(d).unwrap_or(false))
    }

    pub fn is_subset_of(&self, other: &DegreeSet) -> bool {
        self.rank == other.rank && self.generators.iter().all(|g| other.contains(g))
    }

    /// The monomial ideal spanned by all monomials whose degree lies in the set.
    pub fn monomial_ideal(&self, ring: &Arc<CoxRing>) -> Result<Ideal> {
        if self.rank != ring.pic_rank() {
            return Err(Error::DimensionMismatch { expected: ring.pic_rank(), found: self.rank });
        }
        let mut gens = Vec::new();
        for u in &self.generators {
            gens.extend(monomials_at_least(ring, u));
        }
        Ok(Ideal::from_monomials(ring.clone(), gens))
    }
}

/// Minimal monomials `m` with `deg(m) >= u` componentwise: the lcm-products
/// of the minimal monomials for each coordinate separately.
fn monomials_at_least(ring: &CoxRing, u: &MultiDegree) -> Vec<Monomial> {
    let n = ring.nvars();
    let mut acc = vec![Monomial::one(n)];
    for (c, &target) in u.coords().iter().enumerate() {
        if target <= 0 {
            continue;
        }
        let vars: Vec<(usize, i64)> =
            (0..n).map(|v| (v, ring.var_degree(v).coords()[c])).filter(|(_, w)| *w > 0).collect();
        let mut coord = Vec::new();
        let mut exps = vec![0u32; n];
        collect_minimal(&vars, 0, 0, target, &mut exps, &mut coord);
        let next: Vec<Monomial> = acc.iter().flat_map(|a| coord.iter().map(move |b: &Monomial| a.lcm(b))).collect();
        acc = minimalize_monomials(next);
    }
    acc
}

fn collect_minimal(
    vars: &[(usize, i64)],
    k: usize,
    weight: i64,
    target: i64,
    exps: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    if weight >= target {
        let min_w = vars.iter().filter(|(v, _)| exps[*v] > 0).map(|(_, w)| *w).min().unwrap_or(0);
        if weight - min_w < target {
            out.push(Monomial::from_exponents(exps.clone()));
        }
        return;
    }
    if k == vars.len() {
        return;
    }
    let (v, w) = vars[k];
    let max = (target - weight + w - 1) / w;
    for e in 0..=max {
        exps[v] = e as u32;
        collect_minimal(vars, k + 1, weight + w * e, target, exps, out);
    }
    exps[v] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antichain_and_membership() {
        let s = DegreeSet::new(
            2,
            vec![MultiDegree::new(vec![1, 1]), MultiDegree::new(vec![2, 2]), MultiDegree::new(vec![0, 3])],
        )
        .unwrap();
        assert_eq!(s.generators().len(), 2);
        assert!(s.contains(&MultiDegree::new(vec![5, 1])));
        assert!(!s.contains(&MultiDegree::new(vec![5, 0])));
        assert!(DegreeSet::coordinate_at_least(2, 0, 2).is_subset_of(&DegreeSet::everything(2)));
        assert!(!DegreeSet::everything(2).is_subset_of(&s));
    }

    #[test]
    fn hirzebruch_second_row_ideal() {
        for a in 1..4 {
            let ring = Arc::new(CoxRing::hirzebruch(a));
            let ideal = DegreeSet::coordinate_at_least(2, 1, 2).monomial_ideal(&ring).unwrap();
            let mut gens: Vec<Vec<u32>> =
                ideal.monomial_generators().unwrap().iter().map(|m| m.exponents().to_vec()).collect();
            gens.sort();
            assert_eq!(gens, vec![vec![0, 0, 0, 2], vec![0, 1, 0, 1], vec![0, 2, 0, 0]]);
        }
    }

    #[test]
    fn product_factor_square() {
        let ring = Arc::new(CoxRing::product_projective(&[1, 2]));
        let ideal = DegreeSet::coordinate_at_least(2, 1, 2).monomial_ideal(&ring).unwrap();
        assert_eq!(ideal.generators().len(), 6);
        let all = DegreeSet::everything(2).monomial_ideal(&ring).unwrap();
        assert!(all.is_unit());
    }
}
