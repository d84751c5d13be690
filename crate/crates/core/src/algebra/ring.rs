use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{Monomial, MonomialOrder, MultiDegree};
use crate::error::{invalid, Error, Result};

/// The toric varieties supported by the crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Projective { n: usize },
    ProductProjective { ns: Vec<usize> },
    Hirzebruch { a: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub alias: String,
    pub degree: MultiDegree,
    /// Projective factor the variable belongs to (always 0 off products).
    pub block: usize,
}

/// Cox ring of a supported toric variety, with its Picard grading and
/// irrelevant ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxRing {
    family: Family,
    vars: Vec<Variable>,
    pic_rank: usize,
    dim_x: usize,
    irrelevant: Vec<Monomial>,
    lookup: HashMap<String, usize>,
}

fn block_letter(i: usize) -> char {
    (b'a' + (i % 26) as u8) as char
}

impl CoxRing {
    pub fn from_family(family: Family) -> Result<CoxRing> {
        let (vars, pic_rank, dim_x): (Vec<Variable>, usize, usize) = match &family {
            Family::Projective { n } => {
                if *n == 0 {
                    return invalid("projective space needs n >= 1");
                }
                let vars = (0..=*n)
                    .map(|j| Variable {
                        name: format!("x0_{j}"),
                        alias: format!("a{j}"),
                        degree: MultiDegree::new(vec![1]),
                        block: 0,
                    })
                    .collect();
                (vars, 1, *n)
            }
            Family::ProductProjective { ns } => {
                if ns.is_empty() || ns.contains(&0) {
                    return invalid("product of projective spaces needs factors of dimension >= 1");
                }
                let d = ns.len();
                let mut vars = Vec::new();
                for (i, &n) in ns.iter().enumerate() {
                    for j in 0..=n {
                        vars.push(Variable {
                            name: format!("x{i}_{j}"),
                            alias: format!("{}{j}", block_letter(i)),
                            degree: MultiDegree::unit(d, i),
                            block: i,
                        });
                    }
                }
                (vars, d, ns.iter().sum())
            }
            Family::Hirzebruch { a } => {
                let a = *a as i64;
                let degs = [[1, 0], [a, 1], [1, 0], [0, 1]];
                let vars = degs
                    .iter()
                    .enumerate()
                    .map(|(j, d)| Variable {
                        name: format!("x0_{j}"),
                        alias: format!("a{}", j + 1),
                        degree: MultiDegree::new(d.to_vec()),
                        block: 0,
                    })
                    .collect();
                (vars, 2, 2)
            }
        };
        let nv = vars.len();
        let irrelevant = match &family {
            Family::Projective { n } => (0..=*n).map(|j| Monomial::var(nv, j)).collect(),
            Family::ProductProjective { ns } => {
                let mut gens = vec![Monomial::one(nv)];
                let mut offset = 0;
                for &n in ns {
                    let mut next = Vec::new();
                    for g in &gens {
                        for j in 0..=n {
                            next.push(g.mul(&Monomial::var(nv, offset + j)));
                        }
                    }
                    gens = next;
                    offset += n + 1;
                }
                gens
            }
            Family::Hirzebruch { .. } => [(0, 1), (1, 2), (2, 3), (3, 0)]
                .iter()
                .map(|&(i, j)| Monomial::var(nv, i).mul(&Monomial::var(nv, j)))
                .collect(),
        };
        let mut ring = CoxRing { family, vars, pic_rank, dim_x, irrelevant, lookup: HashMap::new() };
        ring.rebuild_lookup();
        Ok(ring)
    }

    pub fn projective(n: usize) -> CoxRing {
        CoxRing::from_family(Family::Projective { n }).expect("n >= 1")
    }

    pub fn product_projective(ns: &[usize]) -> CoxRing {
        CoxRing::from_family(Family::ProductProjective { ns: ns.to_vec() }).expect("factors of dimension >= 1")
    }

    pub fn hirzebruch(a: u32) -> CoxRing {
        CoxRing::from_family(Family::Hirzebruch { a }).expect("valid Hirzebruch surface")
    }

    fn rebuild_lookup(&mut self) {
        self.lookup.clear();
        for (i, v) in self.vars.iter().enumerate() {
            self.lookup.insert(v.alias.clone(), i);
        }
        for (i, v) in self.vars.iter().enumerate() {
            self.lookup.insert(v.name.clone(), i);
        }
    }

    /// Replaces the short aliases, e.g. `t1, t2, ...` for a Segre target.
    pub fn with_aliases(mut self, alias: impl Fn(usize) -> String) -> CoxRing {
        for (i, v) in self.vars.iter_mut().enumerate() {
            v.alias = alias(i);
        }
        self.rebuild_lookup();
        self
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn variables(&self) -> &[Variable] {
        &self.vars
    }

    pub fn pic_rank(&self) -> usize {
        self.pic_rank
    }

    /// Dimension of the toric variety.
    pub fn dim_x(&self) -> usize {
        self.dim_x
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.lookup.get(name).copied().ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn var_degree(&self, i: usize) -> &MultiDegree {
        &self.vars[i].degree
    }

    pub fn degree_of_exponents(&self, exps: &[u32]) -> MultiDegree {
        let mut d = vec![0i64; self.pic_rank];
        for (v, &e) in self.vars.iter().zip(exps) {
            if e > 0 {
                for (dc, vc) in d.iter_mut().zip(v.degree.coords()) {
                    *dc += vc * e as i64;
                }
            }
        }
        MultiDegree::new(d)
    }

    pub fn degree(&self, m: &Monomial) -> MultiDegree {
        self.degree_of_exponents(m.exponents())
    }

    /// Minimal monomial generators of the irrelevant ideal.
    pub fn irrelevant_generators(&self) -> &[Monomial] {
        &self.irrelevant
    }

    /// Factor sizes for products (a single factor for projective space).
    pub fn factor_dims(&self) -> Option<Vec<usize>> {
        match &self.family {
            Family::Projective { n } => Some(vec![*n]),
            Family::ProductProjective { ns } => Some(ns.clone()),
            Family::Hirzebruch { .. } => None,
        }
    }

    /// Variable indices of each projective factor.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let nb = self.vars.iter().map(|v| v.block + 1).max().unwrap_or(0);
        let mut out = vec![Vec::new(); nb];
        for (i, v) in self.vars.iter().enumerate() {
            out[v.block].push(i);
        }
        out
    }

    pub fn is_effective(&self, d: &MultiDegree) -> bool {
        d.rank() == self.pic_rank && d.is_nonnegative()
    }

    pub fn is_nef(&self, d: &MultiDegree) -> bool {
        if d.rank() != self.pic_rank {
            return false;
        }
        match &self.family {
            Family::Hirzebruch { a } => {
                let c = d.coords();
                c[1] >= 0 && c[0] >= *a as i64 * c[1]
            }
            _ => d.is_nonnegative(),
        }
    }

    /// Generators of the nef cone.
    pub fn nef_generators(&self) -> Vec<MultiDegree> {
        match &self.family {
            Family::Hirzebruch { a } => vec![MultiDegree::new(vec![1, 0]), MultiDegree::new(vec![*a as i64, 1])],
            _ => (0..self.pic_rank).map(|i| MultiDegree::unit(self.pic_rank, i)).collect(),
        }
    }

    fn check_degree(&self, d: &MultiDegree) -> Result<()> {
        if d.rank() != self.pic_rank {
            return Err(Error::DimensionMismatch { expected: self.pic_rank, found: d.rank() });
        }
        Ok(())
    }

    /// Dimension of the graded piece `S_D`.
    pub fn dim_graded_piece(&self, d: &MultiDegree) -> Result<u64> {
        self.check_degree(d)?;
        if !d.is_nonnegative() {
            return Ok(0);
        }
        let c = d.coords();
        Ok(match &self.family {
            Family::Projective { n } => binomial(*n as u64 + c[0] as u64, *n as u64),
            Family::ProductProjective { ns } => {
                ns.iter().zip(c).map(|(&n, &u)| binomial(n as u64 + u as u64, n as u64)).product()
            }
            Family::Hirzebruch { a } => {
                let a = *a as i64;
                (0..=c[1]).map(|e2| (c[0] - a * e2 + 1).max(0) as u64).sum()
            }
        })
    }

    /// All monomials of degree `d`, sorted from largest to smallest in `order`.
    pub fn monomials_of_degree(&self, d: &MultiDegree, order: &MonomialOrder) -> Result<Vec<Monomial>> {
        self.check_degree(d)?;
        let mut out = Vec::new();
        if d.is_nonnegative() {
            let mut exps = vec![0u32; self.nvars()];
            let mut rem = d.coords().to_vec();
            self.enumerate(0, &mut rem, &mut exps, &mut out);
        }
        out.sort_by(|a, b| order.compare(b, a));
        Ok(out)
    }

    fn enumerate(&self, v: usize, rem: &mut Vec<i64>, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if v == self.nvars() {
            if rem.iter().all(|&r| r == 0) {
                out.push(Monomial::from_exponents(exps.clone()));
            }
            return;
        }
        let deg = self.vars[v].degree.coords();
        let max =
            deg.iter().zip(rem.iter()).filter(|(&dv, _)| dv > 0).map(|(&dv, &r)| r / dv).min().unwrap_or(0).max(0);
        for e in 0..=max {
            exps[v] = e as u32;
            for (r, &dv) in rem.iter_mut().zip(deg) {
                *r -= dv * e;
            }
            self.enumerate(v + 1, rem, exps, out);
            for (r, &dv) in rem.iter_mut().zip(deg) {
                *r += dv * e;
            }
        }
        exps[v] = 0;
    }

    /// Default order for the ring: grevlex, or for products a block order in
    /// which later factors dominate and each factor is ordered by grevlex.
    pub fn default_product_order(&self) -> MonomialOrder {
        match &self.family {
            Family::ProductProjective { .. } => {
                MonomialOrder::Block(self.blocks().into_iter().rev().map(MonomialOrder::Grevlex).collect())
            }
            _ => MonomialOrder::grevlex(self.nvars()),
        }
    }

    /// Cox ring of the product of the listed factors, with the variable
    /// indices of those factors inside `self`.
    pub fn factor_ring(&self, factors: &[usize]) -> Result<(CoxRing, Vec<usize>)> {
        let ns = match self.factor_dims() {
            Some(ns) => ns,
            None => return invalid("factor rings exist only for products of projective spaces"),
        };
        if factors.is_empty() || factors.iter().any(|&f| f >= ns.len()) {
            return invalid("factor index out of range");
        }
        let mut seen = factors.to_vec();
        seen.sort();
        seen.dedup();
        if seen.len() != factors.len() {
            return invalid("repeated factor index");
        }
        let blocks = self.blocks();
        let sub_ns: Vec<usize> = factors.iter().map(|&f| ns[f]).collect();
        let vars: Vec<usize> = factors.iter().flat_map(|&f| blocks[f].clone()).collect();
        let ring =
            if sub_ns.len() == 1 { CoxRing::projective(sub_ns[0]) } else { CoxRing::product_projective(&sub_ns) };
        Ok((ring, vars))
    }

    /// Cox ring of `self x other` for products of projective spaces; the
    /// variables of `self` come first.
    pub fn product(&self, other: &CoxRing) -> Result<CoxRing> {
        match (self.factor_dims(), other.factor_dims()) {
            (Some(mut a), Some(b)) => {
                a.extend(b);
                Ok(CoxRing::product_projective(&a))
            }
            _ => invalid("products are supported only between products of projective spaces"),
        }
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k.min(n));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}
