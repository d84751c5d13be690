use std::cmp::Ordering;

use super::engine::{Engine, Reducers, Term, Vector};
use crate::algebra::{Monomial, MonomialOrder, Polynomial};
use crate::error::{Error, Result};

/// Monomial orders on a free module with basis `e_0, e_1, ...`.
///
/// In every variant a smaller component index ranks higher on ties.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ModuleOrder {
    /// Term first, then position.
    Top(MonomialOrder),
    /// Position first, then term.
    Pot(MonomialOrder),
    /// Order induced on syzygies by the leading terms of a generating set:
    /// `m e_i` is compared as `m * leads[i]` in `base`.
    Schreyer { base: Box<ModuleOrder>, leads: Vec<(Monomial, usize)> },
}

impl ModuleOrder {
    pub fn compare(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        match self {
            ModuleOrder::Top(o) => o.compare(a.0, b.0).then(b.1.cmp(&a.1)),
            ModuleOrder::Pot(o) => b.1.cmp(&a.1).then_with(|| o.compare(a.0, b.0)),
            ModuleOrder::Schreyer { base, leads } => {
                let (la, ca) = &leads[a.1];
                let (lb, cb) = &leads[b.1];
                base.compare((&a.0.mul(la), *ca), (&b.0.mul(lb), *cb)).then(b.1.cmp(&a.1))
            }
        }
    }
}

/// An element of `S^k`, one polynomial per component.
pub type ModuleElement = Vec<Polynomial>;

pub(crate) fn to_vector(v: &[Polynomial], order: &ModuleOrder) -> Vector {
    let terms: Vec<Term> =
        v.iter().enumerate().flat_map(|(k, p)| p.terms().iter().map(move |(m, c)| (m.clone(), k, c.clone()))).collect();
    Vector::from_terms(terms, order)
}

pub(crate) fn from_vector(v: &Vector, nvars: usize, rank: usize) -> ModuleElement {
    let mut parts: Vec<Vec<(Monomial, crate::algebra::Rational)>> = vec![Vec::new(); rank];
    for (m, k, c) in &v.terms {
        parts[*k].push((m.clone(), c.clone()));
    }
    parts.into_iter().map(|t| Polynomial::from_terms(nvars, t)).collect()
}

/// A submodule of `S^rank` given by generators.
#[derive(Clone, Debug)]
pub struct Submodule {
    nvars: usize,
    rank: usize,
    gens: Vec<ModuleElement>,
}

impl Submodule {
    pub fn new(nvars: usize, rank: usize, gens: Vec<ModuleElement>) -> Result<Self> {
        for g in &gens {
            if g.len() != rank {
                return Err(Error::DimensionMismatch { expected: rank, found: g.len() });
            }
            if g.iter().any(|p| p.nvars() != nvars) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Submodule { nvars, rank, gens })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[ModuleElement] {
        &self.gens
    }

    pub fn groebner_basis(&self, order: &ModuleOrder) -> Vec<ModuleElement> {
        let eng = Engine::new(order);
        let gb = eng.groebner(self.gens.iter().map(|g| to_vector(g, order)).collect());
        gb.iter().map(|v| from_vector(v, self.nvars, self.rank)).collect()
    }

    pub fn contains(&self, v: &[Polynomial], order: &ModuleOrder) -> Result<bool> {
        if v.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, found: v.len() });
        }
        let eng = Engine::new(order);
        let gb = eng.groebner(self.gens.iter().map(|g| to_vector(g, order)).collect());
        let reducers = Reducers::new(gb);
        Ok(eng.reduce(&to_vector(v, order), &reducers).is_zero())
    }

    /// Generators of the module of relations among the generators.
    pub fn syzygies(&self, order: &MonomialOrder) -> Vec<ModuleElement> {
        let s = self.gens.len();
        let rows: Vec<ModuleElement> = self
            .gens
            .iter()
            .enumerate()
            .map(|(j, g)| {
                let mut row = g.clone();
                for k in 0..s {
                    row.push(if k == j { Polynomial::one(self.nvars) } else { Polynomial::zero(self.nvars) });
                }
                row
            })
            .collect();
        let big = ModuleOrder::Pot(order.clone());
        let eng = Engine::new(&big);
        let gb = eng.groebner(rows.iter().map(|g| to_vector(g, &big)).collect());
        gb.iter()
            .filter(|v| v.lead().is_some_and(|t| t.1 >= self.rank))
            .map(|v| from_vector(v, self.nvars, self.rank + s).split_off(self.rank))
            .collect()
    }
}
