//! Hom and Ext^1 in degree zero against a dense brute-force computation.
//!
//! The oracle only handles monomial ideals. It builds a free presentation of
//! `J/I` degree by degree from kernels of explicit matrices (no Groebner
//! bases, no syzygy algorithms) and takes ranks of the Hom complex into `S/J`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use toricslip::algebra::{CoxRing, Monomial, MonomialOrder, MultiDegree, Polynomial};
use toricslip::criteria::{ext1_dim_degree_zero, hom_dim_degree_zero};
use toricslip::hilbert::DegreeBox;
use toricslip::Ideal;

type Q = BigRational;
type Vector = BTreeMap<(Monomial, usize), Q>;

fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        let (top, rest) = rows.split_at_mut(r + 1);
        for row in rest.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot;
            for (x, p) in row[c..].iter_mut().zip(&top[r][c..]) {
                *x -= p * &f;
            }
        }
        r += 1;
    }
    r
}

/// Basis of `{c : c * rows = 0}`.
fn left_kernel(rows: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = rows.len();
    let m = rows.first().map_or(0, |r| r.len());
    // Augment with the identity and row reduce on the first m columns.
    let mut aug: Vec<Vec<Q>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = r.clone();
            v.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            v
        })
        .collect();
    let mut r = 0;
    for c in 0..m {
        let Some(p) = (r..n).find(|&i| !aug[i][c].is_zero()) else { continue };
        aug.swap(r, p);
        let pivot = aug[r][c].clone();
        let (top, rest) = aug.split_at_mut(r + 1);
        for row in rest.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot;
            for (x, p) in row[c..].iter_mut().zip(&top[r][c..]) {
                *x -= p * &f;
            }
        }
        r += 1;
    }
    aug[r..].iter().map(|row| row[m..].to_vec()).collect()
}

struct Oracle<'a> {
    ring: &'a CoxRing,
    order: MonomialOrder,
    upper: MultiDegree,
}

impl Oracle<'_> {
    fn monomials(&self, d: &MultiDegree) -> Vec<Monomial> {
        if d.coords().iter().any(|&c| c < 0) {
            return Vec::new();
        }
        self.ring.monomials_of_degree(d, &self.order).unwrap()
    }

    fn degrees(&self) -> Vec<MultiDegree> {
        DegreeBox::up_to(self.upper.clone()).unwrap().iter().collect()
    }

    fn diff(&self, a: &MultiDegree, b: &MultiDegree) -> MultiDegree {
        MultiDegree::new(a.coords().iter().zip(b.coords()).map(|(x, y)| x - y).collect())
    }

    /// Basis `(m, j)` of the degree-`t` piece of the free module with generator degrees `gens`.
    fn free_basis(&self, gens: &[MultiDegree], t: &MultiDegree) -> Vec<(Monomial, usize)> {
        let mut out = Vec::new();
        for (j, d) in gens.iter().enumerate() {
            for m in self.monomials(&self.diff(t, d)) {
                out.push((m, j));
            }
        }
        out
    }

    /// Minimal generators, inside the box, of the kernel of a map from the
    /// free module with generator degrees `gens`. `image` sends a basis
    /// element to coordinates in the target.
    fn kernel_generators<K: Ord + Clone>(
        &self,
        gens: &[MultiDegree],
        image: impl Fn(&Monomial, usize) -> Vec<(K, Q)>,
    ) -> Vec<(MultiDegree, Vector)> {
        let mut found: Vec<(MultiDegree, Vector)> = Vec::new();
        for t in self.degrees() {
            let basis = self.free_basis(gens, &t);
            if basis.is_empty() {
                continue;
            }
            let index: HashMap<&(Monomial, usize), usize> = basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
            let images: Vec<Vec<(K, Q)>> = basis.iter().map(|(m, j)| image(m, *j)).collect();
            let mut keys: Vec<K> = images.iter().flatten().map(|(k, _)| k.clone()).collect();
            keys.sort();
            keys.dedup();
            let rows: Vec<Vec<Q>> = images
                .iter()
                .map(|img| {
                    let mut row = vec![Q::zero(); keys.len()];
                    for (k, c) in img {
                        row[keys.binary_search(k).unwrap()] += c;
                    }
                    row
                })
                .collect();
            let kernel = left_kernel(&rows);
            let mut span: Vec<Vec<Q>> = Vec::new();
            for (d, v) in &found {
                for m in self.monomials(&self.diff(&t, d)) {
                    let mut row = vec![Q::zero(); basis.len()];
                    for ((n, j), c) in v {
                        row[index[&(m.mul(n), *j)]] += c;
                    }
                    span.push(row);
                }
            }
            let mut current = rank(span.clone());
            for k in kernel {
                span.push(k.clone());
                let next = rank(span.clone());
                if next > current {
                    current = next;
                    let v: Vector =
                        basis.iter().zip(k).filter(|(_, c)| !c.is_zero()).map(|(b, c)| (b.clone(), c)).collect();
                    found.push((t.clone(), v));
                } else {
                    span.pop();
                }
            }
        }
        found
    }
}

fn in_monomial_ideal(m: &Monomial, gens: &[Monomial]) -> bool {
    gens.iter().any(|g| g.divides(m))
}

/// `(dim Hom(J/I, S/J)_0, dim Ext^1(J/I, S/J)_0)` for monomial `I` inside `J`.
fn oracle(ring: &CoxRing, i_gens: &[Monomial], j_gens: &[Monomial], upper: MultiDegree) -> (usize, usize) {
    let o = Oracle { ring, order: MonomialOrder::grevlex(ring.nvars()), upper };
    let f0: Vec<MultiDegree> = j_gens.iter().map(|g| ring.degree(g)).collect();
    let k1 = o.kernel_generators(&f0, |m, j| {
        let p = m.mul(&j_gens[j]);
        if in_monomial_ideal(&p, i_gens) {
            Vec::new()
        } else {
            vec![(p, Q::one())]
        }
    });
    let f1: Vec<MultiDegree> = k1.iter().map(|(d, _)| d.clone()).collect();
    let k2 = o.kernel_generators(&f1, |m, j| k1[j].1.iter().map(|((n, e), c)| ((m.mul(n), *e), c.clone())).collect());

    let n_basis = |t: &MultiDegree| -> Vec<Monomial> {
        o.monomials(t).into_iter().filter(|m| !in_monomial_ideal(m, j_gens)).collect()
    };
    // Matrix of psi -> psi o d from Hom(F_src, N)_0 to Hom(F_dst, N)_0.
    let dual = |src: &[MultiDegree], dst: &[(MultiDegree, Vector)]| -> (usize, usize) {
        let dom: Vec<(usize, Monomial)> =
            src.iter().enumerate().flat_map(|(e, d)| n_basis(d).into_iter().map(move |n| (e, n))).collect();
        let cod: Vec<(usize, Monomial)> =
            dst.iter().enumerate().flat_map(|(f, (d, _))| n_basis(d).into_iter().map(move |n| (f, n))).collect();
        let idx: HashMap<&(usize, Monomial), usize> = cod.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let rows: Vec<Vec<Q>> = dom
            .iter()
            .map(|(e, n)| {
                let mut row = vec![Q::zero(); cod.len()];
                for (f, (_, v)) in dst.iter().enumerate() {
                    for ((m, e2), c) in v {
                        if e2 == e {
                            let p = m.mul(n);
                            if !in_monomial_ideal(&p, j_gens) {
                                row[idx[&(f, p)]] += c;
                            }
                        }
                    }
                }
                row
            })
            .collect();
        (dom.len(), rank(rows))
    };
    let (hom0, d0) = dual(&f0, &k1);
    let (hom1, d1) = dual(&f1, &k2);
    (hom0 - d0, hom1 - d1 - d0)
}

fn monomial_ideal(ring: &Arc<CoxRing>, gens: &[Monomial]) -> Ideal {
    Ideal::from_monomials(ring.clone(), gens.to_vec())
}

fn mono(e: &[u32]) -> Monomial {
    Monomial::from_exponents(e.to_vec())
}

#[test]
fn ext_of_square_in_line() {
    let ring = Arc::new(CoxRing::projective(1));
    let i = [mono(&[2, 0])];
    let j = [mono(&[1, 0])];
    let (hom, ext) = oracle(&ring, &i, &j, MultiDegree::new(vec![3]));
    assert_eq!(ext, 1);
    let got = ext1_dim_degree_zero(&monomial_ideal(&ring, &i), &monomial_ideal(&ring, &j)).unwrap();
    assert_eq!(got, ext as u64);
    assert_eq!(hom, 1);
}

#[test]
fn ext_of_equal_ideals_vanishes() {
    let ring = Arc::new(CoxRing::projective(2));
    let j = [mono(&[2, 0, 0]), mono(&[1, 1, 0])];
    let (hom, ext) = oracle(&ring, &j, &j, MultiDegree::new(vec![6]));
    assert_eq!((hom, ext), (0, 0));
    let jj = monomial_ideal(&ring, &j);
    assert_eq!(ext1_dim_degree_zero(&jj, &jj).unwrap(), 0);
}

/// Small rings with at most four variables.
fn rings() -> Vec<Arc<CoxRing>> {
    vec![
        Arc::new(CoxRing::projective(1)),
        Arc::new(CoxRing::projective(2)),
        Arc::new(CoxRing::projective(3)),
        Arc::new(CoxRing::product_projective(&[1, 1])),
        Arc::new(CoxRing::hirzebruch(1)),
    ]
}

fn random_monomials(ring: &CoxRing, seeds: &[Vec<u32>], max_total: u32) -> Vec<Monomial> {
    let n = ring.nvars();
    seeds
        .iter()
        .map(|e| {
            let mut exps = e[..n].to_vec();
            while exps.iter().sum::<u32>() > max_total {
                let k = (0..n).max_by_key(|&k| exps[k]).unwrap();
                exps[k] -= 1;
            }
            if exps.iter().all(|&x| x == 0) {
                exps[e[n % e.len()] as usize % n] = 1;
            }
            Monomial::from_exponents(exps)
        })
        .collect()
}

fn seeds() -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0u32..4, 5), 1..5)
}

fn exponent_vectors(n: usize, total: u32) -> Vec<Monomial> {
    if n == 1 {
        return vec![mono(&[total])];
    }
    (0..=total)
        .flat_map(|e| {
            exponent_vectors(n - 1, total - e).into_iter().map(move |rest| {
                let mut v = vec![e];
                v.extend_from_slice(rest.exponents());
                Monomial::from_exponents(v)
            })
        })
        .collect()
}

/// Pairwise-lcm oracle for `Hom(J, S/J)_0`: unknowns are the images of the
/// generators, equations come from every common multiple of two generators
/// up to the largest pairwise lcm.
fn hom_by_lcm(ring: &CoxRing, gens: &[Monomial]) -> usize {
    let order = MonomialOrder::grevlex(ring.nvars());
    let pieces = |d: &MultiDegree| -> Vec<Monomial> {
        ring.monomials_of_degree(d, &order).unwrap().into_iter().filter(|m| !in_monomial_ideal(m, gens)).collect()
    };
    let unknowns: Vec<(usize, Monomial)> =
        gens.iter().enumerate().flat_map(|(j, g)| pieces(&ring.degree(g)).into_iter().map(move |n| (j, n))).collect();
    let top = gens.iter().flat_map(|a| gens.iter().map(move |b| a.lcm(b).total_degree())).max().unwrap_or(0);
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for (j, gj) in gens.iter().enumerate() {
        for (k, gk) in gens.iter().enumerate().skip(j + 1) {
            let l = gj.lcm(gk);
            let extra = top - l.total_degree();
            for t in 0..=extra {
                for c in exponent_vectors(ring.nvars(), t as u32) {
                    let big = l.mul(&c);
                    let target = pieces(&ring.degree(&big));
                    let mj = gj.quotient_of(&big).unwrap();
                    let mk = gk.quotient_of(&big).unwrap();
                    let mut block = vec![vec![Q::zero(); unknowns.len()]; target.len()];
                    for (u, (e, n)) in unknowns.iter().enumerate() {
                        let (cof, sign) = if *e == j {
                            (&mj, Q::one())
                        } else if *e == k {
                            (&mk, -Q::one())
                        } else {
                            continue;
                        };
                        let p = cof.mul(n);
                        if let Some(pos) = target.iter().position(|m| *m == p) {
                            block[pos][u] += sign;
                        }
                    }
                    rows.extend(block);
                }
            }
        }
    }
    unknowns.len() - rank(rows)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 25, ..ProptestConfig::default() })]

    #[test]
    fn hom_matches_lcm_oracle(which in 0usize..5, seeds in seeds()) {
        let ring = rings()[which].clone();
        let gens = random_monomials(&ring, &seeds, 3);
        let j = monomial_ideal(&ring, &gens);
        let gens = j.monomial_generators().unwrap();
        prop_assert_eq!(hom_dim_degree_zero(&j).unwrap() as usize, hom_by_lcm(&ring, &gens));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, ..ProptestConfig::default() })]

    #[test]
    fn ext_matches_dense_oracle(which in 0usize..2, seeds in seeds(), extra in seeds()) {
        let ring = rings()[which].clone();
        let max = if which == 0 { 3 } else { 2 };
        let jg = monomial_ideal(&ring, &random_monomials(&ring, &seeds, max)).monomial_generators().unwrap();
        // I: multiples of generators of J.
        let mults = random_monomials(&ring, &extra, 1);
        let ig: Vec<Monomial> = mults.iter().enumerate().map(|(k, m)| jg[k % jg.len()].mul(m)).collect();
        let ig = monomial_ideal(&ring, &ig).monomial_generators().unwrap();
        let top = 3 * ig.iter().chain(&jg).map(|m| m.total_degree()).max().unwrap() as i64;
        let (_, ext) = oracle(&ring, &ig, &jg, MultiDegree::new(vec![top]));
        let got = ext1_dim_degree_zero(&monomial_ideal(&ring, &ig), &monomial_ideal(&ring, &jg)).unwrap();
        prop_assert_eq!(got as usize, ext);
    }

    #[test]
    fn hom_matches_presentation_oracle(which in 0usize..2, seeds in seeds()) {
        let ring = rings()[which].clone();
        let max = if which == 0 { 3 } else { 2 };
        let jg = monomial_ideal(&ring, &random_monomials(&ring, &seeds, max)).monomial_generators().unwrap();
        let top = 2 * jg.iter().map(|m| m.total_degree()).max().unwrap() as i64;
        let (hom, _) = oracle(&ring, &[], &jg, MultiDegree::new(vec![top]));
        prop_assert_eq!(hom_dim_degree_zero(&monomial_ideal(&ring, &jg)).unwrap() as usize, hom);
    }
}

#[test]
fn hom_is_invariant_under_linear_change_of_variables() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let ring = Arc::new(CoxRing::product_projective(&[1, 1]));
    let n = ring.nvars();
    for _ in 0..6 {
        let gens: Vec<Monomial> = (0..rng.gen_range(2..5))
            .map(|_| {
                let a = rng.gen_range(0..3u32);
                let b = rng.gen_range(0..3u32);
                let (x, y) = (rng.gen_range(0..=a), rng.gen_range(0..=b));
                mono(&[x, a - x, y, b - y])
            })
            .filter(|m| !m.is_one())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let j = monomial_ideal(&ring, &gens);
        // Invertible change inside each block.
        let images: Vec<Polynomial> = (0..n)
            .map(|v| {
                let block = v / 2 * 2;
                let c = Q::from_integer(((rng.gen_range(1..4) * if v % 2 == 0 { 1 } else { -1 }) as i64).into());
                let other = block + (1 - v % 2);
                &Polynomial::var(n, v) + &Polynomial::var(n, other).scale(&c)
            })
            .collect();
        let moved: Vec<Polynomial> = j.generators().iter().map(|g| g.substitute(&images).unwrap()).collect();
        let moved = Ideal::new(ring.clone(), moved).unwrap();
        assert_eq!(hom_dim_degree_zero(&j).unwrap(), hom_dim_degree_zero(&moved).unwrap());
        let mut reversed = j.generators().to_vec();
        reversed.reverse();
        let reversed = Ideal::new(ring.clone(), reversed).unwrap();
        assert_eq!(hom_dim_degree_zero(&j).unwrap(), hom_dim_degree_zero(&reversed).unwrap());
        let gb = Ideal::new(ring.clone(), j.gb().to_vec()).unwrap();
        assert_eq!(hom_dim_degree_zero(&j).unwrap(), hom_dim_degree_zero(&gb).unwrap());
    }
}

/// Frozen values for the point configurations on products used by the CLI
/// example registry, recomputed here with the lcm oracle.
#[test]
fn product_examples_by_lcm_oracle() {
    use toricslip::criteria::{truncation_ideal, DegreeSet};
    let d = |c: &[i64]| MultiDegree::new(c.to_vec());
    let cases: [(&[usize], &str, usize); 4] = [
        (&[1, 1], "b0*b1, b0*a0, b0*a1, a0^2", 2),
        (&[1, 1], "b0^2*b1, a0*b0, a0^3, a1^2*b0, a1*b0^2", 4),
        (&[2, 1], "b0*b1^2, a0*b0, a1*b0, a2*b0, a0^2, a0*a1, a1^2", 3),
        (&[2, 2], "b1*b2^2, b0^2, b0*b1, b0*b2, a0*b0, a0*b1, a1*b0, a1*b1, a2*b0, a2*b1, a0^2, a0*a1, a1^2", 6),
    ];
    for (ns, src, expected) in cases {
        let ring = Arc::new(CoxRing::product_projective(ns));
        let i = Ideal::parse(ring.clone(), src).unwrap();
        let j = truncation_ideal(&i, &DegreeSet::everything(2), &DegreeSet::coordinate_at_least(2, 0, 2)).unwrap();
        let gens = j.monomial_generators().unwrap();
        assert_eq!(hom_by_lcm(&ring, &gens), expected, "{ns:?}");
        assert_eq!(hom_dim_degree_zero(&j).unwrap() as usize, expected);
    }

    // Four truncations of the two-point ideal on P1 x P1.
    let ring = Arc::new(CoxRing::product_projective(&[1, 1]));
    let i = Ideal::parse(ring.clone(), "b0*b1, b0*a0, b0*a1, a0^2").unwrap();
    let set = |gens: &[&[i64]]| DegreeSet::new(2, gens.iter().map(|g| d(g)).collect()).unwrap();
    let truncations = [
        (DegreeSet::everything(2), set(&[&[2, 0]]), 2),
        (set(&[&[2, 1]]), DegreeSet::empty(2), 4),
        (DegreeSet::everything(2), set(&[&[3, 0], &[0, 3]]), 4),
        (set(&[&[1, 1]]), set(&[&[3, 1], &[1, 3]]), 4),
    ];
    for (b, a, expected) in truncations {
        let j = truncation_ideal(&i, &b, &a).unwrap();
        assert_eq!(hom_by_lcm(&ring, &j.monomial_generators().unwrap()), expected, "{b:?} {a:?}");
    }
}
