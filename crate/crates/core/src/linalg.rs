//! Exact linear algebra over the rationals.
//!
//! `RowReducer` keeps an echelon basis of sparse rows and is what the Hom
//! and Ext computations feed their equations into. The dense helpers are
//! used for small subspaces and in test oracles.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::algebra::Rational;

pub type SparseRow = Vec<(usize, Rational)>;

/// Incremental Gaussian elimination on sparse rows.
#[derive(Clone, Debug, Default)]
pub struct RowReducer {
    rows: Vec<SparseRow>,
    pivot_row: HashMap<usize, usize>,
}

impl RowReducer {
    pub fn new() -> Self {
        RowReducer::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the current pivots.
    pub fn reduce(&self, row: impl IntoIterator<Item = (usize, Rational)>) -> SparseRow {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (c, v) in row {
            if !v.is_zero() {
                *acc.entry(c).or_insert_with(Rational::zero) += v;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        let mut cursor = 0;
        loop {
            let next = acc.range(cursor..).find(|(c, _)| self.pivot_row.contains_key(c)).map(|(c, v)| (*c, v.clone()));
            let Some((c, v)) = next else { break };
            for (pc, pv) in &self.rows[self.pivot_row[&c]] {
                let e = acc.entry(*pc).or_insert_with(Rational::zero);
                *e -= &v * pv;
                if e.is_zero() {
                    acc.remove(pc);
                }
            }
            cursor = c + 1;
        }
        acc.into_iter().collect()
    }

    /// Adds a row; returns whether it was independent of the previous ones.
    pub fn insert(&mut self, row: impl IntoIterator<Item = (usize, Rational)>) -> bool {
        let r = self.reduce(row);
        let Some((pc, pv)) = r.first().cloned() else {
            return false;
        };
        let inv = pv.recip();
        let r: SparseRow = r.into_iter().map(|(c, v)| (c, v * &inv)).collect();
        self.pivot_row.insert(pc, self.rows.len());
        self.rows.push(r);
        true
    }

    pub fn contains(&self, row: impl IntoIterator<Item = (usize, Rational)>) -> bool {
        self.reduce(row).is_empty()
    }
}

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let nrows = m.len();
    let ncols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Rational>]) -> usize {
    let mut a = m.to_vec();
    rref(&mut a).len()
}

/// Basis of `{x : m x = 0}` for a matrix with `ncols` columns.
pub fn nullspace(m: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -a[i][f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn row(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn dense_rank_and_nullspace() {
        let m = vec![row(&[1, 2, 3]), row(&[2, 4, 6]), row(&[1, 0, 1])];
        assert_eq!(rank(&m), 2);
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 1);
        for r in &m {
            let dot: Rational = r.iter().zip(&ns[0]).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn sparse_matches_dense() {
        let m = vec![row(&[0, 1, 1, 0]), row(&[1, 1, 0, 0]), row(&[1, 0, -1, 0]), row(&[0, 0, 0, 5])];
        let mut red = RowReducer::new();
        for r in &m {
            red.insert(r.iter().cloned().enumerate());
        }
        assert_eq!(red.rank(), rank(&m));
        assert!(red.contains(vec![(0, rat(2)), (1, rat(3)), (2, rat(1))]));
    }
}
