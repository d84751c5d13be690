//! Degree-zero pieces of `Hom_S(J, S/J)` and `Ext^1_S(J/I, S/J)`.
//!
//! Both are computed from a presentation built out of Groebner bases: the
//! reduced basis of `J` generates `F0`, its S-pair syzygies (or, for Ext, a
//! basis of the relation module relative to `I`) give `F1`, and Schreyer
//! syzygies of that basis give `F2`. Homomorphisms into `N = S/J` are then
//! linear conditions on images in the finitely many graded pieces of `N`
//! named by generator degrees.

use std::collections::HashMap;

use num_traits::Zero;

use crate::algebra::{CoxRing, Monomial, MonomialOrder, MultiDegree, Polynomial, Rational};
use crate::error::{precondition, Result};
use crate::groebner::{normal_form_of, Engine, Ideal, ModuleOrder, Vector};
use crate::linalg::RowReducer;

/// Graded pieces of `S/J` in the standard-monomial basis, with cached
/// normal forms.
struct Quotient<'a> {
    ring: &'a CoxRing,
    order: MonomialOrder,
    gb: Vec<Polynomial>,
    leads: Vec<Monomial>,
    monomial: bool,
    pieces: HashMap<MultiDegree, (Vec<Monomial>, HashMap<Monomial, usize>)>,
    nf: HashMap<Monomial, Vec<(Monomial, Rational)>>,
}

impl<'a> Quotient<'a> {
    fn new(j: &'a Ideal) -> Self {
        let order = j.default_order();
        let gb = j.gb().to_vec();
        let leads = gb.iter().map(|g| g.leading_monomial(&order).expect("nonzero").clone()).collect();
        let monomial = gb.iter().all(|g| g.is_monomial());
        Quotient { ring: j.ring(), order, gb, leads, monomial, pieces: HashMap::new(), nf: HashMap::new() }
    }

    fn standard(&self, m: &Monomial) -> bool {
        !self.leads.iter().any(|l| l.divides(m))
    }

    fn piece(&mut self, d: &MultiDegree) -> &(Vec<Monomial>, HashMap<Monomial, usize>) {
        if !self.pieces.contains_key(d) {
            let mons: Vec<Monomial> = self
                .ring
                .monomials_of_degree(d, &self.order)
                .expect("degree of the ring")
                .into_iter()
                .filter(|m| self.standard(m))
                .collect();
            let index = mons.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
            self.pieces.insert(d.clone(), (mons, index));
        }
        &self.pieces[d]
    }

    fn dim(&mut self, d: &MultiDegree) -> usize {
        self.piece(d).0.len()
    }

    /// Normal form of a monomial as standard-monomial coordinates.
    fn normal_form(&mut self, m: &Monomial) -> Vec<(Monomial, Rational)> {
        if self.monomial {
            return if self.standard(m) { vec![(m.clone(), Rational::from_integer(1.into()))] } else { Vec::new() };
        }
        if let Some(v) = self.nf.get(m) {
            return v.clone();
        }
        let r = normal_form_of(&Polynomial::monomial(m.clone()), &self.gb, &self.order);
        let v: Vec<(Monomial, Rational)> = r.into_terms();
        self.nf.insert(m.clone(), v.clone());
        v
    }

    /// Coordinates of `c * m * (standard monomial)` in the piece of degree `d`.
    fn image(&mut self, c: &Rational, m: &Monomial, mu: &Monomial, d: &MultiDegree) -> Vec<(usize, Rational)> {
        let prod = m.mul(mu);
        let nf = self.normal_form(&prod);
        let (_, index) = self.piece(d);
        nf.into_iter().map(|(nu, k)| (index[&nu], k * c)).collect()
    }
}

/// Free module with a degree per basis element and one unknown per
/// (basis element, standard monomial of `N` in that degree).
struct HomSpace {
    degrees: Vec<MultiDegree>,
    offsets: Vec<usize>,
    total: usize,
}

impl HomSpace {
    fn new(degrees: Vec<MultiDegree>, n: &mut Quotient) -> Self {
        let mut offsets = Vec::with_capacity(degrees.len());
        let mut total = 0;
        for d in &degrees {
            offsets.push(total);
            total += n.dim(d);
        }
        HomSpace { degrees, offsets, total }
    }
}

/// A module element `sum c * m * e_k`, tagged with its degree.
type Relation = (MultiDegree, Vec<(Monomial, usize, Rational)>);

/// Rank of the equations `sum_k rel_k * chi_k = 0` in `N`, one relation per
/// element of `relations`, where `chi` ranges over `Hom(F, N)_0`.
fn relation_rank(relations: &[Relation], space: &HomSpace, n: &mut Quotient) -> usize {
    let mut red = RowReducer::new();
    for (deg, terms) in relations {
        let width = n.dim(deg);
        if width == 0 {
            continue;
        }
        let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); width];
        for (m, k, c) in terms {
            let basis = n.piece(&space.degrees[*k]).0.clone();
            for (idx, mu) in basis.iter().enumerate() {
                for (row, v) in n.image(c, m, mu, deg) {
                    rows[row].push((space.offsets[*k] + idx, v));
                }
            }
        }
        for row in rows {
            red.insert(row);
        }
    }
    red.rank()
}

fn vector_degree(ring: &CoxRing, v: &Vector, basis_degrees: &[MultiDegree]) -> MultiDegree {
    let (m, k, _) = v.lead().expect("nonzero");
    ring.degree(m).checked_add(&basis_degrees[*k]).expect("same rank")
}

fn as_relations(ring: &CoxRing, vs: &[Vector], basis_degrees: &[MultiDegree]) -> Vec<Relation> {
    vs.iter().map(|v| (vector_degree(ring, v, basis_degrees), v.terms.clone())).collect()
}

fn gb_vectors(j: &Ideal, order: &ModuleOrder) -> Vec<Vector> {
    j.gb()
        .iter()
        .map(|g| {
            let terms = g.terms().iter().map(|(m, c)| (m.clone(), 0, c.clone())).collect();
            Vector::from_terms(terms, order)
        })
        .collect()
}

fn degrees_of(j: &Ideal) -> Vec<MultiDegree> {
    j.gb().iter().map(|g| g.degree(j.ring()).expect("homogeneous").expect("nonzero")).collect()
}

/// `dim Hom_S(J, S/J)_0`.
pub fn hom_dim_degree_zero(j: &Ideal) -> Result<u64> {
    if j.is_zero() || j.is_unit() {
        return Ok(0);
    }
    let ring = j.ring().clone();
    let mut n = Quotient::new(j);
    let top = ModuleOrder::Top(j.default_order());
    let gens = gb_vectors(j, &top);
    let degrees = degrees_of(j);
    let syz = Engine::new(&top).schreyer_syzygies(&gens);
    let space = HomSpace::new(degrees.clone(), &mut n);
    let rank = relation_rank(&as_relations(&ring, &syz, &degrees), &space, &mut n);
    Ok((space.total - rank) as u64)
}

/// `dim Ext^1_S(J/I, S/J)_0` for ideals `I` contained in `J`.
pub fn ext1_dim_degree_zero(i: &Ideal, j: &Ideal) -> Result<u64> {
    if !j.contains_ideal(i)? {
        return precondition("the first ideal must be contained in the second");
    }
    if j.is_unit() || i.equals(j)? {
        return Ok(0);
    }
    let ring = j.ring().clone();
    let mut n = Quotient::new(j);
    let top = ModuleOrder::Top(j.default_order());
    let f = gb_vectors(j, &top);
    let f_degrees = degrees_of(j);
    let leads: Vec<(Monomial, usize)> = f
        .iter()
        .map(|v| {
            let (m, k, _) = v.lead().expect("nonzero");
            (m.clone(), *k)
        })
        .collect();
    let schreyer = ModuleOrder::Schreyer { base: Box::new(top.clone()), leads };

    // Relations of F0 -> J/I: syzygies of f, plus expressions of I's basis in f.
    let eng = Engine::new(&top);
    let mut rel_gens = eng.schreyer_syzygies(&f);
    let reducers = crate::groebner::engine_reducers(f.clone());
    for g in gb_vectors(i, &top) {
        let (quots, rem) = eng.divide(&g, &reducers);
        debug_assert!(rem.is_zero());
        let terms =
            quots.into_iter().enumerate().flat_map(|(k, q)| q.into_iter().map(move |(m, c)| (m, k, c))).collect();
        rel_gens.push(Vector::from_terms(terms, &schreyer));
    }
    let rel_gens: Vec<Vector> = rel_gens.into_iter().map(|v| Vector::from_terms(v.terms, &schreyer)).collect();
    let seng = Engine::new(&schreyer);
    let r = seng.groebner(rel_gens);
    let r_degrees: Vec<MultiDegree> = r.iter().map(|v| vector_degree(&ring, v, &f_degrees)).collect();
    let second = seng.schreyer_syzygies(&r);

    let hom0 = HomSpace::new(f_degrees.clone(), &mut n);
    let hom1 = HomSpace::new(r_degrees.clone(), &mut n);

    // Image of Hom(F0, N)_0 in Hom(F1, N)_0.
    let mut image = RowReducer::new();
    for (k, d) in f_degrees.iter().enumerate() {
        let basis = n.piece(d).0.clone();
        for mu in &basis {
            let mut row: Vec<(usize, Rational)> = Vec::new();
            for (l, rl) in r.iter().enumerate() {
                for (m, comp, c) in &rl.terms {
                    if *comp != k {
                        continue;
                    }
                    for (idx, v) in n.image(c, m, mu, &r_degrees[l]) {
                        row.push((hom1.offsets[l] + idx, v));
                    }
                }
            }
            row.retain(|(_, v)| !v.is_zero());
            image.insert(row);
        }
    }
    let _ = &hom0;
    let kernel_rank = relation_rank(&as_relations(&ring, &second, &r_degrees), &hom1, &mut n);
    let kernel_dim = hom1.total - kernel_rank;
    Ok((kernel_dim - image.rank()) as u64)
}
