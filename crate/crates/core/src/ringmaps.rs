//! Graded homomorphisms between Cox rings.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{CoxRing, Monomial, MonomialOrder, MultiDegree, Polynomial};
use crate::error::{invalid, Error, Result};
use crate::groebner::{eliminate_tail, Ideal};
use crate::linalg::RowReducer;

/// A ring map `S[source] -> S[target]`, graded along `degree_map`.
///
/// `degree_map` has one row per target degree coordinate and one column per
/// source degree coordinate.
#[derive(Clone, Debug)]
pub struct GradedRingMap {
    source: Arc<CoxRing>,
    target: Arc<CoxRing>,
    images: Vec<Polynomial>,
    degree_map: Vec<Vec<i64>>,
}

impl GradedRingMap {
    pub fn new(
        source: Arc<CoxRing>,
        target: Arc<CoxRing>,
        images: Vec<Polynomial>,
        degree_map: Vec<Vec<i64>>,
    ) -> Result<Self> {
        if images.len() != source.nvars() {
            return Err(Error::DimensionMismatch { expected: source.nvars(), found: images.len() });
        }
        if degree_map.len() != target.pic_rank() || degree_map.iter().any(|row| row.len() != source.pic_rank()) {
            return invalid("degree map has the wrong shape");
        }
        let map = GradedRingMap { source, target, images, degree_map };
        for (v, img) in map.images.iter().enumerate() {
            if img.nvars() != map.target.nvars() {
                return Err(Error::RingMismatch);
            }
            let expected = map.map_degree(map.source.var_degree(v));
            match img.degree(&map.target)? {
                Some(d) if d != expected => {
                    return invalid(format!(
                        "image of {} has degree {d}, expected {expected}",
                        map.source.variables()[v].alias
                    ))
                }
                _ => {}
            }
        }
        Ok(map)
    }

    /// Identity map of a ring.
    pub fn identity(ring: Arc<CoxRing>) -> Self {
        let n = ring.nvars();
        let p = ring.pic_rank();
        let images = (0..n).map(|i| Polynomial::var(n, i)).collect();
        let degree_map = (0..p).map(|i| (0..p).map(|j| i64::from(i == j)).collect()).collect();
        GradedRingMap { source: ring.clone(), target: ring, images, degree_map }
    }

    /// Inclusion of the Cox ring of the listed factors into the product.
    pub fn factor_inclusion(product: Arc<CoxRing>, factors: &[usize]) -> Result<Self> {
        let (factor, vars) = product.factor_ring(factors)?;
        let n = product.nvars();
        let images = vars.iter().map(|&v| Polynomial::var(n, v)).collect();
        let degree_map =
            (0..product.pic_rank()).map(|i| factors.iter().map(|&f| i64::from(f == i)).collect()).collect();
        GradedRingMap::new(Arc::new(factor), product, images, degree_map)
    }

    /// The lift `b0 -> a3*a4, b1 -> a1*a4, b2 -> a2` of the blow-down of the
    /// first Hirzebruch surface to the projective plane.
    pub fn hirzebruch_blowdown() -> (Self, ToricLiftData) {
        let source = Arc::new(CoxRing::projective(2).with_aliases(|i| format!("b{i}")));
        let target = Arc::new(CoxRing::hirzebruch(1));
        let n = target.nvars();
        let m = |e: [u32; 4]| Polynomial::monomial(Monomial::from_exponents(e.to_vec()));
        let images = vec![m([0, 0, 1, 1]), m([1, 0, 0, 1]), m([0, 1, 0, 0])];
        debug_assert!(images.iter().all(|p| p.nvars() == n));
        let map = GradedRingMap::new(source, target, images, vec![vec![1], vec![1]]).expect("graded lift");
        let data = ToricLiftData {
            source_rays: vec![vec![-1, 1], vec![1, 0], vec![0, -1]],
            target_rays: vec![vec![1, 0], vec![0, -1], vec![-1, 1], vec![0, 1]],
            delta: vec![vec![1, 0], vec![0, 1]],
        };
        (map, data)
    }

    pub fn source(&self) -> &Arc<CoxRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<CoxRing> {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn degree_map(&self) -> &[Vec<i64>] {
        &self.degree_map
    }

    pub fn map_degree(&self, d: &MultiDegree) -> MultiDegree {
        MultiDegree::new(
            self.degree_map.iter().map(|row| row.iter().zip(d.coords()).map(|(a, b)| a * b).sum()).collect(),
        )
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.nvars() != self.source.nvars() {
            return Err(Error::RingMismatch);
        }
        f.substitute(&self.images)
    }

    /// `phi(I) * S[target]`.
    pub fn extend(&self, ideal: &Ideal) -> Result<Ideal> {
        self.check_source(ideal)?;
        let gens = ideal.generators().iter().map(|g| self.apply(g)).collect::<Result<Vec<_>>>()?;
        Ideal::new(self.target.clone(), gens)
    }

    /// Whether `S_a -> T_{phi(a)}` is onto.
    pub fn is_surjective_in_degree(&self, d: &MultiDegree) -> Result<bool> {
        let order = MonomialOrder::grevlex(self.target.nvars());
        let target_basis = self.target.monomials_of_degree(&self.map_degree(d), &order)?;
        let mut red = RowReducer::new();
        for m in self.source.monomials_of_degree(d, &MonomialOrder::grevlex(self.source.nvars()))? {
            let img = self.apply(&Polynomial::monomial(m))?;
            red.insert(img.terms().iter().filter_map(|(t, c)| {
                target_basis.binary_search_by(|b| order.compare(t, b)).ok().map(|i| (i, c.clone()))
            }));
        }
        Ok(red.rank() == target_basis.len())
    }

    fn check_source(&self, ideal: &Ideal) -> Result<()> {
        if **ideal.ring() != *self.source {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    fn check_target(&self, ideal: &Ideal) -> Result<()> {
        if **ideal.ring() != *self.target {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn to_json(&self) -> MapJson {
        MapJson {
            source: self.source.family().clone(),
            target: self.target.family().clone(),
            degree_map: self.degree_map.clone(),
            images: self.images.iter().map(|p| p.display(&self.target)).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MapJson {
    pub source: crate::algebra::Family,
    pub target: crate::algebra::Family,
    #[serde(rename = "degreeMap")]
    pub degree_map: Vec<Vec<i64>>,
    pub images: Vec<String>,
}

/// Ray generators of the two fans and the dual lattice map `M_source -> M_target`.
///
/// `delta` has one row per target lattice coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ToricLiftData {
    pub source_rays: Vec<Vec<i64>>,
    pub target_rays: Vec<Vec<i64>>,
    pub delta: Vec<Vec<i64>>,
}

/// `phi^{-1}(I)`, by eliminating the target variables from the graph ideal.
pub fn preimage(map: &GradedRingMap, ideal: &Ideal) -> Result<Ideal> {
    map.check_target(ideal)?;
    let ns = map.source.nvars();
    let nt = map.target.nvars();
    let total = ns + nt;
    let shift: Vec<usize> = (ns..total).collect();
    let mut gens: Vec<Polynomial> = ideal.generators().iter().map(|g| g.rename(&shift, total)).collect();
    for (v, img) in map.images.iter().enumerate() {
        gens.push(&Polynomial::var(total, v) - &img.rename(&shift, total));
    }
    Ideal::new(map.source.clone(), eliminate_tail(&gens, ns))
}

/// `I` intersected with the Cox ring of the listed factors (0-based), as an
/// ideal of that ring.
pub fn restrict_to_factor(ideal: &Ideal, factors: &[usize]) -> Result<Ideal> {
    let ring = ideal.ring();
    let (factor, vars) = ring.factor_ring(factors)?;
    let others: Vec<usize> = (0..ring.nvars()).filter(|v| !vars.contains(v)).collect();
    let gens = ideal
        .eliminate(&others)?
        .into_iter()
        .map(|g| g.restrict_to(&vars).expect("eliminated polynomial lives on the factor"))
        .collect();
    Ideal::new(Arc::new(factor), gens)
}

/// The map `t_i -> g_i` from the Cox ring of `P^k` onto the monomial basis
/// `g_1 > ... > g_{k+1}` of `S_u`.
pub fn segre_map(ring: Arc<CoxRing>, u: &MultiDegree, r: u64, order: &MonomialOrder) -> Result<GradedRingMap> {
    if !ring.is_effective(u) || u.coords().iter().all(|&c| c == 0) {
        return invalid(format!("degree {u} must be effective and nonzero"));
    }
    let basis = ring.monomials_of_degree(u, order)?;
    if (basis.len() as u64) < r || basis.len() < 2 {
        return invalid(format!("dim S_{u} = {} is smaller than r = {r}", basis.len()));
    }
    let source = Arc::new(CoxRing::projective(basis.len() - 1).with_aliases(|i| format!("t{}", i + 1)));
    let images = basis.into_iter().map(Polynomial::monomial).collect();
    let degree_map = u.coords().iter().map(|&c| vec![c]).collect();
    GradedRingMap::new(source, ring, images, degree_map)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EmbeddingReport {
    /// `dim S_u - 1`.
    pub k: usize,
    /// `S^L` generated in degree one, checked for `d <= window`.
    pub generated: bool,
    /// Small pieces have the dimensions of those of `P^k`.
    pub small_pieces: bool,
    /// `B(X)` lies in the radical of `(S_u)`.
    pub irrelevant_in_radical: bool,
    pub window: i64,
}

impl EmbeddingReport {
    pub fn holds(&self) -> bool {
        self.generated && self.small_pieces && self.irrelevant_in_radical
    }
}

pub fn check_embedding_conditions(ring: Arc<CoxRing>, u: &MultiDegree, r: u64, window: i64) -> Result<EmbeddingReport> {
    let order = MonomialOrder::grevlex(ring.nvars());
    let basis = ring.monomials_of_degree(u, &order)?;
    if basis.is_empty() {
        return invalid(format!("S_{u} is zero"));
    }
    let k = basis.len() - 1;

    let mut generated = true;
    let mut products: Vec<Monomial> = basis.clone();
    for d in 2..=window {
        let mut next: Vec<Monomial> = products.iter().flat_map(|p| basis.iter().map(move |b| p.mul(b))).collect();
        next.sort();
        next.dedup();
        let full = ring.monomials_of_degree(&u.scale(d), &order)?.len();
        if next.len() != full {
            generated = false;
            break;
        }
        products = next;
    }

    let mut small_pieces = true;
    for d in 0..=window.max(r as i64) {
        let dim = ring.dim_graded_piece(&u.scale(d))?;
        if dim >= r {
            break;
        }
        if dim != crate::algebra::binomial(k as u64 + d as u64, d as u64) {
            small_pieces = false;
            break;
        }
    }

    let su = Ideal::from_monomials(ring.clone(), basis);
    let mut irrelevant_in_radical = true;
    for g in ring.irrelevant_generators() {
        if !su.radical_contains(&Polynomial::monomial(g.clone()))? {
            irrelevant_in_radical = false;
            break;
        }
    }
    Ok(EmbeddingReport { k, generated, small_pieces, irrelevant_in_radical, window })
}

/// Whether `B(target)` lies in the radical of `phi(B(source))`.
pub fn check_lift_b_condition(map: &GradedRingMap) -> Result<bool> {
    let gens = map
        .source
        .irrelevant_generators()
        .iter()
        .map(|g| map.apply(&Polynomial::monomial(g.clone())))
        .collect::<Result<Vec<_>>>()?;
    let image = Ideal::new(map.target.clone(), gens)?;
    for g in map.target.irrelevant_generators() {
        if !image.radical_contains(&Polynomial::monomial(g.clone()))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks `prod (phi(b_rho))^<m, u_rho> = prod a_rho^<delta(m), u_rho>` on a
/// basis of `M_source`, comparing exponent vectors.
pub fn toric_lift_identity_check(map: &GradedRingMap, data: &ToricLiftData) -> Result<bool> {
    if data.source_rays.len() != map.source.nvars() || data.target_rays.len() != map.target.nvars() {
        return invalid("one ray per Cox variable is required");
    }
    let rank = data.source_rays.first().map_or(0, |r| r.len());
    let target_rank = data.target_rays.first().map_or(0, |r| r.len());
    if data.source_rays.iter().any(|r| r.len() != rank)
        || data.target_rays.iter().any(|r| r.len() != target_rank)
        || data.delta.len() != target_rank
        || data.delta.iter().any(|row| row.len() != rank)
    {
        return invalid("lattice ranks do not match");
    }
    let mut image_exps = Vec::new();
    for img in &map.images {
        match img.as_monomial() {
            Some(m) if img.terms()[0].1 == num_traits::One::one() => image_exps.push(m.clone()),
            _ => return invalid("every variable image must be a monomial"),
        }
    }
    let dot = |a: &[i64], b: &[i64]| -> i64 { a.iter().zip(b).map(|(x, y)| x * y).sum() };
    for i in 0..rank {
        let m: Vec<i64> = (0..rank).map(|j| i64::from(i == j)).collect();
        let mut lhs = vec![0i64; map.target.nvars()];
        for (ray, img) in data.source_rays.iter().zip(&image_exps) {
            let w = dot(&m, ray);
            for (slot, &e) in lhs.iter_mut().zip(img.exponents()) {
                *slot += w * i64::from(e);
            }
        }
        let dm: Vec<i64> = data.delta.iter().map(|row| dot(row, &m)).collect();
        let rhs: Vec<i64> = data.target_rays.iter().map(|ray| dot(&dm, ray)).collect();
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
