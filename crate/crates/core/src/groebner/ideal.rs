use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use super::engine::{Engine, Reducers, Vector};
use super::module::{from_vector, to_vector, ModuleElement, ModuleOrder, Submodule};
use crate::algebra::{parse_ideal_expr, CoxRing, Monomial, MonomialOrder, Polynomial};
use crate::error::{invalid, Error, Result};

/// Reduced Groebner basis of arbitrary polynomials in `nvars` variables.
pub fn groebner_basis_of(nvars: usize, gens: &[Polynomial], order: &MonomialOrder) -> Vec<Polynomial> {
    let mo = ModuleOrder::Top(order.clone());
    let eng = Engine::new(&mo);
    let gb = eng.groebner(gens.iter().map(|g| to_vector(std::slice::from_ref(g), &mo)).collect());
    gb.iter().map(|v| from_vector(v, nvars, 1).remove(0)).collect()
}

/// Remainder of `f` modulo a list of divisors (a Groebner basis for a
/// canonical answer).
pub fn normal_form_of(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let mo = ModuleOrder::Top(order.clone());
    let eng = Engine::new(&mo);
    let reducers =
        Reducers::new(basis.iter().filter(|g| !g.is_zero()).map(|g| to_vector(std::slice::from_ref(g), &mo)).collect());
    let r = eng.reduce(&to_vector(std::slice::from_ref(f), &mo), &reducers);
    from_vector(&r, f.nvars(), 1).remove(0)
}

/// Minimal generators of the monomial ideal generated by `gens`, sorted by
/// degree and then descending exponent vector.
pub fn minimalize_monomials(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.total_degree().cmp(&b.total_degree()).then(b.cmp(a)));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn with_extra_var(p: &Polynomial, extra: usize) -> Polynomial {
    let n = p.nvars();
    let map: Vec<usize> = (0..n).collect();
    p.rename(&map, n + extra)
}

/// Intersects with the subring of the first `n` variables after computing a
/// Groebner basis for an order that eliminates all later variables.
pub(crate) fn eliminate_tail(gens: &[Polynomial], n: usize) -> Vec<Polynomial> {
    let total = gens.first().map(|g| g.nvars()).unwrap_or(n);
    let order = MonomialOrder::elimination(&(n..total).collect::<Vec<_>>(), MonomialOrder::grevlex_on(0..n));
    let keep: Vec<usize> = (0..n).collect();
    groebner_basis_of(total, gens, &order).into_iter().filter_map(|g| g.restrict_to(&keep)).collect()
}

/// A homogeneous ideal of a Cox ring, with cached Groebner bases.
pub struct Ideal {
    ring: Arc<CoxRing>,
    gens: Vec<Polynomial>,
    cache: RwLock<HashMap<MonomialOrder, Arc<Vec<Polynomial>>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            cache: RwLock::new(self.cache.read().expect("cache lock").clone()),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.display_aliases(&self.ring)).collect();
        write!(f, "Ideal({})", gens.join(", "))
    }
}

impl Ideal {
    pub fn new(ring: Arc<CoxRing>, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            if g.nvars() != ring.nvars() {
                return Err(Error::RingMismatch);
            }
            g.degree(&ring)?;
        }
        Ok(Ideal::trusted(ring, gens))
    }

    pub(crate) fn trusted(ring: Arc<CoxRing>, gens: Vec<Polynomial>) -> Ideal {
        let mut out: Vec<Polynomial> = Vec::new();
        for g in gens {
            if !g.is_zero() && !out.contains(&g) {
                out.push(g);
            }
        }
        Ideal { ring, gens: out, cache: RwLock::new(HashMap::new()) }
    }

    pub fn parse(ring: Arc<CoxRing>, src: &str) -> Result<Ideal> {
        let gens = parse_ideal_expr(&ring, src)?;
        Ideal::new(ring, gens)
    }

    pub fn from_monomials(ring: Arc<CoxRing>, gens: Vec<Monomial>) -> Ideal {
        let gens = minimalize_monomials(gens).into_iter().map(Polynomial::monomial).collect();
        Ideal::trusted(ring, gens)
    }

    pub fn zero(ring: Arc<CoxRing>) -> Ideal {
        Ideal::trusted(ring, Vec::new())
    }

    pub fn unit(ring: Arc<CoxRing>) -> Ideal {
        let n = ring.nvars();
        Ideal::trusted(ring, vec![Polynomial::one(n)])
    }

    pub fn ring(&self) -> &Arc<CoxRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn check_poly(&self, f: &Polynomial) -> Result<()> {
        if f.nvars() != self.nvars() {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// Reduced Groebner basis for `order`, computed once per order.
    pub fn groebner_basis(&self, order: &MonomialOrder) -> Result<Arc<Vec<Polynomial>>> {
        if !order.is_total_on(self.nvars()) {
            return invalid("the monomial order must rank every variable exactly once");
        }
        if let Some(gb) = self.cache.read().expect("cache lock").get(order) {
            return Ok(gb.clone());
        }
        let gb = match self.monomial_generators_direct() {
            Some(ms) => {
                let mut ms = ms;
                ms.sort_by(|a, b| order.compare(a, b));
                ms.into_iter().map(Polynomial::monomial).collect()
            }
            None => groebner_basis_of(self.nvars(), &self.gens, order),
        };
        let gb = Arc::new(gb);
        self.cache.write().expect("cache lock").entry(order.clone()).or_insert_with(|| gb.clone());
        Ok(gb)
    }

    pub fn default_order(&self) -> MonomialOrder {
        MonomialOrder::grevlex(self.nvars())
    }

    /// Reduced Groebner basis under grevlex.
    pub fn gb(&self) -> Arc<Vec<Polynomial>> {
        self.groebner_basis(&self.default_order()).expect("grevlex is total")
    }

    fn monomial_generators_direct(&self) -> Option<Vec<Monomial>> {
        let mut ms = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            match g.terms() {
                [(m, _)] => ms.push(m.clone()),
                _ => return None,
            }
        }
        Some(minimalize_monomials(ms))
    }

    /// Minimal monomial generators, if the ideal is generated by monomials.
    pub fn monomial_generators(&self) -> Option<Vec<Monomial>> {
        if let Some(ms) = self.monomial_generators_direct() {
            return Some(ms);
        }
        let gb = self.gb();
        let mut ms = Vec::new();
        for g in gb.iter() {
            match g.terms() {
                [(m, _)] => ms.push(m.clone()),
                _ => return None,
            }
        }
        Some(minimalize_monomials(ms))
    }

    pub fn is_monomial(&self) -> bool {
        self.monomial_generators().is_some()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb().iter().any(|g| g.is_constant())
    }

    pub fn normal_form(&self, f: &Polynomial, order: &MonomialOrder) -> Result<Polynomial> {
        self.check_poly(f)?;
        let gb = self.groebner_basis(order)?;
        Ok(normal_form_of(f, &gb, order))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f, &self.default_order())?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals, via reduced Groebner bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        Ok(self.gb() == other.gb())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Ideal::trusted(self.ring.clone(), gens))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut gens = Vec::new();
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f * g);
            }
        }
        Ok(Ideal::trusted(self.ring.clone(), gens))
    }

    pub fn power(&self, k: u32) -> Ideal {
        let mut acc = Ideal::unit(self.ring.clone());
        for _ in 0..k {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        if let (Some(a), Some(b)) = (self.monomial_generators_direct(), other.monomial_generators_direct()) {
            let lcms = a.iter().flat_map(|x| b.iter().map(move |y| x.lcm(y))).collect();
            return Ok(Ideal::from_monomials(self.ring.clone(), lcms));
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(self.ring.clone()));
        }
        let n = self.nvars();
        let t = Polynomial::var(n + 1, n);
        let one_minus_t = &Polynomial::one(n + 1) - &t;
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|f| &with_extra_var(f, 1) * &t).collect();
        gens.extend(other.gens.iter().map(|g| &with_extra_var(g, 1) * &one_minus_t));
        Ok(Ideal::trusted(self.ring.clone(), eliminate_tail(&gens, n)))
    }

    /// `I : f`.
    pub fn colon(&self, f: &Polynomial) -> Result<Ideal> {
        self.check_poly(f)?;
        if f.is_zero() {
            return invalid("colon by the zero polynomial");
        }
        if let (Some(ms), [(fm, _)]) = (self.monomial_generators_direct(), f.terms()) {
            let gens = ms.iter().map(|m| fm.gcd(m).quotient_of(m).expect("gcd divides")).collect();
            return Ok(Ideal::from_monomials(self.ring.clone(), gens));
        }
        let fi = Ideal::trusted(self.ring.clone(), vec![f.clone()]);
        let meet = self.intersect(&fi)?;
        let order = self.default_order();
        let fv = [f.clone()];
        let gens = meet.gens.iter().map(|g| exact_quotient(g, &fv[0], &order)).collect::<Result<Vec<_>>>()?;
        Ok(Ideal::trusted(self.ring.clone(), gens))
    }

    /// `I : J = intersection of I : g over generators g of J`.
    pub fn colon_ideal(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut acc = Ideal::unit(self.ring.clone());
        for g in &other.gens {
            acc = acc.intersect(&self.colon(g)?)?;
        }
        Ok(acc)
    }

    /// `I : x_i^infinity`.
    pub fn saturate_by_variable(&self, i: usize) -> Result<Ideal> {
        if i >= self.nvars() {
            return invalid("variable index out of range");
        }
        if let Some(ms) = self.monomial_generators_direct() {
            let gens = ms
                .into_iter()
                .map(|m| {
                    let mut e = m.exponents().to_vec();
                    e[i] = 0;
                    Monomial::from_exponents(e)
                })
                .collect();
            return Ok(Ideal::from_monomials(self.ring.clone(), gens));
        }
        let standard = self.gens.iter().all(|g| {
            let d = g.terms()[0].0.total_degree();
            g.terms().iter().all(|(m, _)| m.total_degree() == d)
        });
        if standard {
            // x_i last in grevlex: divide the basis elements by their x_i content.
            let mut prio: Vec<usize> = (0..self.nvars()).filter(|&v| v != i).collect();
            prio.push(i);
            let order = MonomialOrder::Grevlex(prio);
            let gb = self.groebner_basis(&order)?;
            let gens = gb
                .iter()
                .map(|g| {
                    let k = g.terms().iter().map(|(m, _)| m.exp(i)).min().unwrap_or(0);
                    let mut e = vec![0; self.nvars()];
                    e[i] = k;
                    let d = Monomial::from_exponents(e);
                    Polynomial::from_terms(
                        self.nvars(),
                        g.terms()
                            .iter()
                            .map(|(m, c)| (d.quotient_of(m).expect("content"), c.clone()))
                            .collect::<Vec<_>>(),
                    )
                })
                .collect();
            return Ok(Ideal::trusted(self.ring.clone(), gens));
        }
        self.saturate_general(&Polynomial::var(self.nvars(), i))
    }

    fn saturate_general(&self, f: &Polynomial) -> Result<Ideal> {
        let n = self.nvars();
        let t = Polynomial::var(n + 1, n);
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| with_extra_var(g, 1)).collect();
        gens.push(&Polynomial::one(n + 1) - &(&t * &with_extra_var(f, 1)));
        Ok(Ideal::trusted(self.ring.clone(), eliminate_tail(&gens, n)))
    }

    /// `I : f^infinity`.
    pub fn saturate_by_poly(&self, f: &Polynomial) -> Result<Ideal> {
        self.check_poly(f)?;
        if f.is_zero() {
            return invalid("saturation by the zero polynomial");
        }
        if let [(m, _)] = f.terms() {
            let mut acc = self.clone();
            for v in m.support() {
                acc = acc.saturate_by_variable(v)?;
            }
            return Ok(acc);
        }
        self.saturate_general(f)
    }

    /// `I : J^infinity`.
    pub fn saturate_by_ideal(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut acc: Option<Ideal> = None;
        let mut seen: Vec<Arc<Vec<Polynomial>>> = Vec::new();
        for g in &other.gens {
            let s = self.saturate_by_poly(g)?;
            let gb = s.gb();
            if seen.contains(&gb) {
                continue;
            }
            seen.push(gb);
            acc = Some(match acc {
                None => s,
                Some(a) => a.intersect(&s)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(self.ring.clone())))
    }

    pub fn irrelevant_ideal(ring: &Arc<CoxRing>) -> Ideal {
        Ideal::from_monomials(ring.clone(), ring.irrelevant_generators().to_vec())
    }

    /// Saturation by the irrelevant ideal of the ring.
    pub fn saturate_irrelevant(&self) -> Result<Ideal> {
        let b = Ideal::irrelevant_ideal(&self.ring);
        let sat = self.saturate_by_ideal(&b)?;
        Ok(Ideal::trusted(self.ring.clone(), sat.gb().to_vec()))
    }

    pub fn is_saturated(&self) -> Result<bool> {
        self.saturate_irrelevant()?.equals(self)
    }

    /// Generators of `I` intersected with the subring of the variables not in
    /// `vars`, written in the full ring.
    pub fn eliminate(&self, vars: &[usize]) -> Result<Vec<Polynomial>> {
        if vars.iter().any(|&v| v >= self.nvars()) {
            return invalid("variable index out of range");
        }
        if let Some(ms) = self.monomial_generators_direct() {
            return Ok(ms
                .into_iter()
                .filter(|m| vars.iter().all(|&v| m.exp(v) == 0))
                .map(Polynomial::monomial)
                .collect());
        }
        let rest: Vec<usize> = (0..self.nvars()).filter(|v| !vars.contains(v)).collect();
        let order = MonomialOrder::elimination(vars, MonomialOrder::Grevlex(rest));
        let gb = self.groebner_basis(&order)?;
        Ok(gb.iter().filter(|g| g.terms().iter().all(|(m, _)| vars.iter().all(|&v| m.exp(v) == 0))).cloned().collect())
    }

    /// Whether `f` lies in the radical of `I`.
    pub fn radical_contains(&self, f: &Polynomial) -> Result<bool> {
        self.check_poly(f)?;
        if f.is_zero() {
            return Ok(true);
        }
        let n = self.nvars();
        let t = Polynomial::var(n + 1, n);
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| with_extra_var(g, 1)).collect();
        gens.push(&(&t * &with_extra_var(f, 1)) - &Polynomial::one(n + 1));
        let gb = groebner_basis_of(n + 1, &gens, &MonomialOrder::grevlex(n + 1));
        Ok(gb.iter().any(|g| g.is_constant()))
    }

    /// Generators of the relations among the ideal's generators.
    pub fn syzygies(&self, order: &MonomialOrder) -> Result<Vec<ModuleElement>> {
        let sub = Submodule::new(self.nvars(), 1, self.gens.iter().map(|g| vec![g.clone()]).collect())?;
        Ok(sub.syzygies(order))
    }

    /// Syzygies of the reduced grevlex basis, in the same order as `gb()`.
    pub fn gb_syzygies(&self) -> Vec<ModuleElement> {
        let order = ModuleOrder::Top(self.default_order());
        let gb = self.gb();
        let vecs: Vec<Vector> = gb.iter().map(|g| to_vector(std::slice::from_ref(g), &order)).collect();
        let eng = Engine::new(&order);
        eng.schreyer_syzygies(&vecs).iter().map(|v| from_vector(v, self.nvars(), gb.len())).collect()
    }
}

/// `g / f` when `f` divides `g` exactly.
fn exact_quotient(g: &Polynomial, f: &Polynomial, order: &MonomialOrder) -> Result<Polynomial> {
    let mo = ModuleOrder::Top(order.clone());
    let eng = Engine::new(&mo);
    let reducers = Reducers::new(vec![to_vector(std::slice::from_ref(f), &mo)]);
    let (q, r) = eng.divide(&to_vector(std::slice::from_ref(g), &mo), &reducers);
    if !r.is_zero() {
        return Err(Error::NotDivisible);
    }
    Ok(Polynomial::from_terms(g.nvars(), q.into_iter().next().unwrap_or_default()))
}
