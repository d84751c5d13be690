use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::algebra::{CoxRing, Monomial, MonomialOrder, MultiDegree, Rational};
use crate::error::{Error, Result};

/// A polynomial with rational coefficients.
///
/// Terms are kept merged, nonzero and sorted by descending exponent vector,
/// so structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Polynomial::term(Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::constant(nvars, Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let nvars = m.nvars();
        if c.is_zero() {
            return Polynomial::zero(nvars);
        }
        Polynomial { nvars, terms: vec![(m, c)] }
    }

    pub fn monomial(m: Monomial) -> Self {
        Polynomial::term(m, Rational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Polynomial::monomial(Monomial::var(nvars, i))
    }

    /// Builds a polynomial from arbitrary terms, merging repeated monomials.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial has the wrong number of variables");
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// A single term with coefficient one.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.as_slice() {
            [(m, c)] if c.is_one() => Some(m),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.iter().find(|(t, _)| t == m).map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| order.compare(&a.0, &b.0)).map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self, order: &MonomialOrder) -> Self {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(t, a)| (t.mul(m), a.clone())).collect() }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match a.0.cmp(&b.0) {
                std::cmp::Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &a.1 + &b.1;
                    if !c.is_zero() {
                        out.push((a.0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Polynomial { nvars: self.nvars, terms: out })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let terms = self.terms.iter().flat_map(|(m, a)| other.terms.iter().map(move |(n, b)| (m.mul(n), a * b)));
        Ok(Polynomial::from_terms(self.nvars, terms.collect::<Vec<_>>()))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The multidegree, `None` for zero; errors when terms disagree.
    pub fn degree(&self, ring: &CoxRing) -> Result<Option<MultiDegree>> {
        if self.nvars != ring.nvars() {
            return Err(Error::RingMismatch);
        }
        let mut deg: Option<MultiDegree> = None;
        for (m, _) in &self.terms {
            let d = ring.degree(m);
            match &deg {
                None => deg = Some(d),
                Some(e) if *e != d => return Err(Error::NotHomogeneous),
                _ => {}
            }
        }
        Ok(deg)
    }

    pub fn is_homogeneous(&self, ring: &CoxRing) -> bool {
        self.degree(ring).is_ok()
    }

    /// Substitutes `images[v]` for variable `v`.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: images.len() });
        }
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut acc = Polynomial::zero(target);
        let mut powers: Vec<Vec<Polynomial>> =
            images.iter().map(|p| vec![Polynomial::one(p.nvars), p.clone()]).collect();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[v].len() <= e as usize {
                    let next = &powers[v][powers[v].len() - 1] * &images[v];
                    powers[v].push(next);
                }
                t = t.try_mul(&powers[v][e as usize])?;
            }
            acc = acc.try_add(&t)?;
        }
        Ok(acc)
    }

    /// Re-expresses the polynomial with variable `v` renamed to `map[v]` in a
    /// ring of `nvars` variables.
    pub fn rename(&self, map: &[usize], nvars: usize) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; nvars];
            for (v, &x) in m.exponents().iter().enumerate() {
                e[map[v]] += x;
            }
            (Monomial::from_exponents(e), c.clone())
        });
        Polynomial::from_terms(nvars, terms.collect::<Vec<_>>())
    }

    /// Only succeeds when every term avoids the variables outside `vars`.
    pub fn restrict_to(&self, vars: &[usize]) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let kept = m.select(vars);
            if kept.total_degree() != m.total_degree() {
                return None;
            }
            terms.push((kept, c.clone()));
        }
        Some(Polynomial::from_terms(vars.len(), terms))
    }

    pub fn display(&self, ring: &CoxRing) -> String {
        self.render(|i| ring.variables()[i].name.clone())
    }

    pub fn display_aliases(&self, ring: &CoxRing) -> String {
        self.render(|i| ring.variables()[i].alias.clone())
    }

    fn render(&self, name: impl Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let mut factors = Vec::new();
            if !a.is_one() || m.is_one() {
                factors.push(a.to_string());
            }
            for v in m.support() {
                let e = m.exp(v);
                if e == 1 {
                    factors.push(name(v));
                } else {
                    factors.push(format!("{}^{}", name(v), e));
                }
            }
            let _ = write!(s, "{}", factors.join("*"));
        }
        s
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomials from different rings")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomials from different rings")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomials from different rings")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn arithmetic() {
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        let s = &x + &y;
        let d = &x - &y;
        let p = &s * &d;
        assert_eq!(p, &(&x * &x) - &(&y * &y));
        assert!((&s - &s).is_zero());
        assert_eq!(s.pow(2).terms().len(), 3);
        assert!(x.try_add(&Polynomial::var(3, 0)).is_err());
    }

    #[test]
    fn homogeneity_and_display() {
        let ring = CoxRing::hirzebruch(1);
        let a2 = Polynomial::var(4, 1);
        let a1a4 = &Polynomial::var(4, 0) * &Polynomial::var(4, 3);
        let f = &a2 - &a1a4.scale(&rat(3));
        assert_eq!(f.degree(&ring).unwrap(), Some(MultiDegree::new(vec![1, 1])));
        let g = &a2 + &Polynomial::var(4, 0);
        assert_eq!(g.degree(&ring), Err(Error::NotHomogeneous));
        assert_eq!(f.display_aliases(&ring), "-3*a1*a4 + a2");
    }

    #[test]
    fn substitution() {
        // x -> a*b, y -> b^2
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        let f = &(&x * &x) - &y;
        let a = Polynomial::var(2, 0);
        let b = Polynomial::var(2, 1);
        let g = f.substitute(&[&a * &b, &b * &b]).unwrap();
        assert_eq!(g, &(&(&a * &a) * &(&b * &b)) - &(&b * &b));
    }
}
