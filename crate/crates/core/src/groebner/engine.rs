//! Buchberger's algorithm on elements of a free module `S^k`.
//!
//! An ideal is the rank-one case. Elements are sparse term lists sorted by
//! the module order; pairs are processed by (sugar, insertion index) and
//! pruned with the Gebauer-Moeller criteria, plus the coprime-leads
//! criterion in the rank-one case.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::ModuleOrder;
use crate::algebra::{Monomial, Rational};

pub(crate) type Term = (Monomial, usize, Rational);

/// A module element as a descending term list.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct Vector {
    pub terms: Vec<Term>,
}

impl Vector {
    pub fn from_terms(mut terms: Vec<Term>, order: &ModuleOrder) -> Self {
        terms.sort_by(|a, b| order.compare((&b.0, b.1), (&a.0, a.1)));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.0 == t.0 && last.1 == t.1 => last.2 += t.2,
                _ => {
                    if out.last().is_some_and(|l| l.2.is_zero()) {
                        out.pop();
                    }
                    out.push(t);
                }
            }
        }
        if out.last().is_some_and(|l| l.2.is_zero()) {
            out.pop();
        }
        Vector { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn monic(mut self) -> Self {
        if let Some(c) = self.terms.first().map(|t| t.2.clone()) {
            if !c.is_one() {
                let inv = c.recip();
                for t in &mut self.terms {
                    t.2 *= &inv;
                }
            }
        }
        self
    }

    pub fn sugar(&self) -> u64 {
        self.terms.iter().map(|t| t.0.total_degree()).max().unwrap_or(0)
    }
}

/// `f - c * m * g`, where every product term keeps its relative position.
pub(crate) fn mul_sub(f: &[Term], c: &Rational, m: &Monomial, g: &[Term], order: &ModuleOrder) -> Vec<Term> {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut i = 0;
    let mut gi = g.iter().map(|(gm, gc, gk)| (gm.mul(m), *gc, gk * c)).peekable();
    while i < f.len() {
        let Some(h) = gi.peek() else { break };
        match order.compare((&f[i].0, f[i].1), (&h.0, h.1)) {
            Ordering::Greater => {
                out.push(f[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (hm, hc, hk) = gi.next().expect("peeked");
                out.push((hm, hc, -hk));
            }
            Ordering::Equal => {
                let (hm, hc, hk) = gi.next().expect("peeked");
                let s = &f[i].2 - hk;
                if !s.is_zero() {
                    out.push((hm, hc, s));
                }
                i += 1;
            }
        }
    }
    out.extend_from_slice(&f[i..]);
    out.extend(gi.map(|(hm, hc, hk)| (hm, hc, -hk)));
    out
}

fn mask(m: &Monomial) -> u64 {
    let mut b = 0u64;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e > 0 {
            b |= 1u64 << (i % 64);
        }
    }
    b
}

/// Elements used as reducers, with cached leads.
#[derive(Default)]
pub(crate) struct Reducers {
    pub elems: Vec<Vector>,
    leads: Vec<(Monomial, usize, u64)>,
}

impl Reducers {
    pub fn new(elems: Vec<Vector>) -> Self {
        let mut r = Reducers::default();
        for e in elems {
            r.push(e);
        }
        r
    }

    pub fn push(&mut self, v: Vector) {
        let (m, c, _) = v.lead().expect("reducers are nonzero").clone();
        let b = mask(&m);
        self.leads.push((m, c, b));
        self.elems.push(v);
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn lead(&self, k: usize) -> (&Monomial, usize) {
        (&self.leads[k].0, self.leads[k].1)
    }

    fn find(&self, m: &Monomial, comp: usize) -> Option<usize> {
        let mb = mask(m);
        self.leads.iter().position(|(l, c, b)| *c == comp && b & !mb == 0 && l.divides(m))
    }
}

pub(crate) struct Engine<'a> {
    pub order: &'a ModuleOrder,
}

enum Job {
    Input(usize),
    Pair(usize, usize),
}

struct Entry {
    job: Job,
    sugar: u64,
    seq: u64,
    lcm: Monomial,
    comp: usize,
}

impl<'a> Engine<'a> {
    pub fn new(order: &'a ModuleOrder) -> Self {
        Engine { order }
    }

    /// Full reduction; returns the remainder and its sugar.
    pub fn reduce_with_sugar(&self, f: &Vector, basis: &Reducers, sugar: u64) -> (Vector, u64) {
        let mut p = f.terms.clone();
        let mut start = 0;
        let mut rem: Vec<Term> = Vec::new();
        let mut s = sugar;
        while start < p.len() {
            let (m, comp, c) = &p[start];
            match basis.find(m, *comp) {
                Some(k) => {
                    let g = &basis.elems[k];
                    let (lm, _, lc) = g.lead().expect("nonzero");
                    let q = lm.quotient_of(m).expect("divisor");
                    let coef = c / lc;
                    s = s.max(q.total_degree() + g.sugar());
                    p = mul_sub(&p[start..], &coef, &q, &g.terms, self.order);
                    start = 0;
                }
                None => {
                    rem.push(p[start].clone());
                    start += 1;
                }
            }
        }
        (Vector { terms: rem }, s)
    }

    pub fn reduce(&self, f: &Vector, basis: &Reducers) -> Vector {
        self.reduce_with_sugar(f, basis, 0).0
    }

    /// Division with quotients: `f = sum q_k * basis_k + remainder`.
    pub fn divide(&self, f: &Vector, basis: &Reducers) -> (Vec<Vec<(Monomial, Rational)>>, Vector) {
        let mut quots: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); basis.len()];
        let mut p = f.terms.clone();
        let mut start = 0;
        let mut rem: Vec<Term> = Vec::new();
        while start < p.len() {
            let (m, comp, c) = &p[start];
            match basis.find(m, *comp) {
                Some(k) => {
                    let g = &basis.elems[k];
                    let (lm, _, lc) = g.lead().expect("nonzero");
                    let q = lm.quotient_of(m).expect("divisor");
                    let coef = c / lc;
                    p = mul_sub(&p[start..], &coef, &q, &g.terms, self.order);
                    quots[k].push((q, coef));
                    start = 0;
                }
                None => {
                    rem.push(p[start].clone());
                    start += 1;
                }
            }
        }
        (quots, Vector { terms: rem })
    }

    fn spoly(&self, f: &Vector, g: &Vector, lcm: &Monomial) -> Vector {
        let (fm, _, fc) = f.lead().expect("nonzero");
        let (gm, _, gc) = g.lead().expect("nonzero");
        let qf = fm.quotient_of(lcm).expect("lcm");
        let qg = gm.quotient_of(lcm).expect("lcm");
        let zero: Vec<Term> = Vec::new();
        let left = mul_sub(&zero, &-fc.recip(), &qf, &f.terms, self.order);
        Vector { terms: mul_sub(&left, &gc.recip(), &qg, &g.terms, self.order) }
    }

    /// Reduced Groebner basis, sorted by increasing leading term.
    pub fn groebner(&self, gens: Vec<Vector>) -> Vec<Vector> {
        let gens: Vec<Vector> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let rank_one = gens.iter().all(|g| g.terms.iter().all(|t| t.1 == 0));
        let mut basis = Reducers::default();
        let mut sugars: Vec<u64> = Vec::new();
        let mut active: Vec<bool> = Vec::new();
        let mut queue: Vec<Entry> = Vec::new();
        let mut seq = 0u64;
        for (k, g) in gens.iter().enumerate() {
            queue.push(Entry { job: Job::Input(k), sugar: g.sugar(), seq, lcm: Monomial::one(0), comp: 0 });
            seq += 1;
        }
        while !queue.is_empty() {
            let best = (0..queue.len()).min_by_key(|&k| (queue[k].sugar, queue[k].seq)).expect("nonempty");
            let entry = queue.swap_remove(best);
            let (h, s) = match entry.job {
                Job::Input(k) => (gens[k].clone(), entry.sugar),
                Job::Pair(i, j) => (self.spoly(&basis.elems[i], &basis.elems[j], &entry.lcm), entry.sugar),
            };
            let (r, s) = self.reduce_with_sugar(&h, &basis, s);
            if r.is_zero() {
                continue;
            }
            let r = r.monic();
            let (hm, hc, _) = r.lead().expect("nonzero").clone();
            let t = basis.len();
            queue.retain(|e| match e.job {
                Job::Pair(i, j) if e.comp == hc && hm.divides(&e.lcm) => {
                    let li = basis.lead(i).0.lcm(&hm);
                    let lj = basis.lead(j).0.lcm(&hm);
                    li == e.lcm || lj == e.lcm
                }
                _ => true,
            });
            let cands: Vec<(usize, Monomial)> =
                (0..t).filter(|&k| active[k] && basis.lead(k).1 == hc).map(|k| (k, basis.lead(k).0.lcm(&hm))).collect();
            let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
            for (idx, (k, l)) in cands.iter().enumerate() {
                let coprime = rank_one && basis.lead(*k).0.is_coprime(&hm);
                let dominated =
                    cands[idx + 1..].iter().any(|(_, l2)| l2.divides(l)) || kept.iter().any(|(_, l2, _)| l2.divides(l));
                if coprime || !dominated {
                    kept.push((*k, l.clone(), coprime));
                }
            }
            for (k, l, coprime) in kept {
                if coprime {
                    continue;
                }
                let dl = l.total_degree();
                let sk = sugars[k] + dl - basis.lead(k).0.total_degree();
                let st = s + dl - hm.total_degree();
                queue.push(Entry { job: Job::Pair(k, t), sugar: sk.max(st), seq, lcm: l, comp: hc });
                seq += 1;
            }
            for (k, live) in active.iter_mut().enumerate().take(t) {
                if *live && basis.lead(k).1 == hc && hm.divides(basis.lead(k).0) {
                    *live = false;
                }
            }
            basis.push(r);
            sugars.push(s);
            active.push(true);
        }
        let minimal: Vec<Vector> = basis.elems.into_iter().zip(active).filter(|(_, a)| *a).map(|(v, _)| v).collect();
        let reducers = Reducers::new(minimal.clone());
        let mut out: Vec<Vector> = minimal
            .into_iter()
            .map(|g| {
                let lead = g.terms[0].clone();
                let tail = Vector { terms: g.terms[1..].to_vec() };
                let mut terms = vec![lead];
                terms.extend(self.reduce(&tail, &reducers).terms);
                Vector { terms }
            })
            .collect();
        out.sort_by(|a, b| {
            let (am, ac, _) = a.lead().expect("nonzero");
            let (bm, bc, _) = b.lead().expect("nonzero");
            self.order.compare((am, *ac), (bm, *bc))
        });
        out
    }

    /// Syzygies of a Groebner basis from its S-pairs, with redundant pairs
    /// dropped by the chain criterion. Component `k` of a syzygy is the
    /// coefficient of `gb[k]`.
    pub fn schreyer_syzygies(&self, gb: &[Vector]) -> Vec<Vector> {
        let n = gb.len();
        let leads: Vec<(Monomial, usize)> = gb
            .iter()
            .map(|g| {
                let (m, c, _) = g.lead().expect("nonzero");
                (m.clone(), *c)
            })
            .collect();
        let mut pairs: Vec<(usize, usize, Monomial)> = Vec::new();
        for j in 0..n {
            for i in 0..j {
                if leads[i].1 == leads[j].1 {
                    pairs.push((i, j, leads[i].0.lcm(&leads[j].0)));
                }
            }
        }
        let mut present = vec![vec![false; n]; n];
        for (i, j, _) in &pairs {
            present[*i][*j] = true;
            present[*j][*i] = true;
        }
        let mut order_idx: Vec<usize> = (0..pairs.len()).collect();
        order_idx.sort_by_key(|&p| std::cmp::Reverse(pairs[p].2.total_degree()));
        let mut keep = vec![true; pairs.len()];
        for &p in &order_idx {
            let (i, j, ref l) = pairs[p];
            let redundant = (0..n).any(|k| {
                k != i && k != j && leads[k].1 == leads[i].1 && present[i][k] && present[j][k] && leads[k].0.divides(l)
            });
            if redundant {
                keep[p] = false;
                present[i][j] = false;
                present[j][i] = false;
            }
        }
        let reducers = Reducers::new(gb.to_vec());
        let syz_order = ModuleOrder::Schreyer { base: Box::new(self.order.clone()), leads: leads.clone() };
        let mut out = Vec::new();
        for (p, (i, j, l)) in pairs.into_iter().enumerate() {
            if !keep[p] {
                continue;
            }
            let s = self.spoly(&gb[i], &gb[j], &l);
            let (quots, rem) = self.divide(&s, &reducers);
            debug_assert!(rem.is_zero(), "input is not a Groebner basis");
            let (_, _, ci) = gb[i].lead().expect("nonzero");
            let (_, _, cj) = gb[j].lead().expect("nonzero");
            let mut terms: Vec<Term> = vec![
                (leads[i].0.quotient_of(&l).expect("lcm"), i, ci.recip()),
                (leads[j].0.quotient_of(&l).expect("lcm"), j, -cj.recip()),
            ];
            for (k, q) in quots.into_iter().enumerate() {
                for (m, c) in q {
                    terms.push((m, k, -c));
                }
            }
            out.push(Vector::from_terms(terms, &syz_order));
        }
        out
    }
}
