use num_traits::Zero;

use crate::algebra::{CoxRing, Monomial, MonomialOrder, MultiDegree, Polynomial, Rational};
use crate::error::{invalid, Result};
use crate::groebner::Ideal;
use crate::hilbert::ideal_piece_basis;
use crate::linalg::{nullspace, rref};

/// `alpha_i` contracted into `x^u`: `x^(u - e_i)`, or `None` when `u_i = 0`.
pub fn contract(i: usize, u: &Monomial) -> Option<Monomial> {
    if u.exp(i) == 0 {
        return None;
    }
    let mut e = u.exponents().to_vec();
    e[i] -= 1;
    Some(Monomial::from_exponents(e))
}

/// A subspace of the degree-`k` part of the dual ring, stored as a matrix in
/// reduced row echelon form over the monomials of that degree.
///
/// Monomials are listed from largest to smallest, so pivots sit on the
/// largest monomial of each row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualSpaceBasis {
    degree: MultiDegree,
    monomials: Vec<Monomial>,
    rows: Vec<Vec<Rational>>,
}

impl DualSpaceBasis {
    pub fn new(degree: MultiDegree, monomials: Vec<Monomial>, mut rows: Vec<Vec<Rational>>) -> Result<Self> {
        if rows.iter().any(|r| r.len() != monomials.len()) {
            return invalid("row length differs from the number of monomials");
        }
        let pivots = rref(&mut rows);
        rows.truncate(pivots.len());
        Ok(DualSpaceBasis { degree, monomials, rows })
    }

    pub fn zero(degree: MultiDegree, monomials: Vec<Monomial>) -> Self {
        DualSpaceBasis { degree, monomials, rows: Vec::new() }
    }

    pub fn degree(&self) -> &MultiDegree {
        &self.degree
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    fn coordinates(&self, terms: &[(Monomial, Rational)]) -> Option<Vec<Rational>> {
        let mut v = vec![Rational::zero(); self.monomials.len()];
        for (m, c) in terms {
            let i = self.monomials.iter().position(|b| b == m)?;
            v[i] += c;
        }
        Some(v)
    }

    /// Membership of a dual polynomial given by its terms.
    pub fn contains(&self, terms: &[(Monomial, Rational)]) -> bool {
        let Some(v) = self.coordinates(terms) else { return false };
        let mut rows = self.rows.clone();
        rows.push(v);
        rref(&mut rows).len() == self.dim()
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.contains(&[(m.clone(), Rational::from_integer(1.into()))])
    }

    /// `self + <m>`.
    pub fn with_monomial(&self, m: &Monomial) -> Self {
        let mut rows = self.rows.clone();
        let mut v = vec![Rational::zero(); self.monomials.len()];
        if let Some(i) = self.monomials.iter().position(|b| b == m) {
            v[i] = Rational::from_integer(1.into());
        }
        rows.push(v);
        DualSpaceBasis::new(self.degree.clone(), self.monomials.clone(), rows).expect("same width")
    }

    /// The largest monomial outside the subspace.
    pub fn largest_missing_monomial(&self) -> Option<&Monomial> {
        self.monomials.iter().find(|m| !self.contains_monomial(m))
    }

    /// Elements of `S_k` that pair to zero with every row, as polynomials.
    pub fn annihilator(&self) -> Vec<Polynomial> {
        let nvars = self.monomials.first().map_or(0, |m| m.nvars());
        nullspace(&self.rows, self.monomials.len())
            .into_iter()
            .map(|v| Polynomial::from_terms(nvars, self.monomials.iter().cloned().zip(v)))
            .collect()
    }

    /// `S_1 -| V` inside degree `k - 1`, with `lower` listing that degree's
    /// monomials from largest to smallest.
    pub fn contract_by_linear_forms(&self, lower_degree: MultiDegree, lower: Vec<Monomial>) -> Self {
        let nvars = self.monomials.first().map_or(0, |m| m.nvars());
        let mut out = Vec::new();
        for row in &self.rows {
            for i in 0..nvars {
                let mut v = vec![Rational::zero(); lower.len()];
                for (m, c) in self.monomials.iter().zip(row) {
                    if c.is_zero() {
                        continue;
                    }
                    if let Some(q) = contract(i, m) {
                        if let Some(j) = lower.iter().position(|b| *b == q) {
                            v[j] += c;
                        }
                    }
                }
                out.push(v);
            }
        }
        DualSpaceBasis::new(lower_degree, lower, out).expect("same width")
    }
}

/// `I^perp` in degree `d` under the monomial pairing, with monomials sorted
/// by `order`.
pub fn perp(ideal: &Ideal, d: &MultiDegree, order: &MonomialOrder) -> Result<DualSpaceBasis> {
    let monomials = dual_monomials(ideal.ring(), d, order)?;
    let rows: Vec<Vec<Rational>> =
        ideal_piece_basis(ideal, d)?.iter().map(|g| monomials.iter().map(|m| g.coefficient(m)).collect()).collect();
    let ns = nullspace(&rows, monomials.len());
    DualSpaceBasis::new(d.clone(), monomials, ns)
}

/// Monomials of degree `d`, largest first.
pub fn dual_monomials(ring: &CoxRing, d: &MultiDegree, order: &MonomialOrder) -> Result<Vec<Monomial>> {
    ring.monomials_of_degree(d, order)
}
