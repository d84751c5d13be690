use std::sync::Arc;

use toricslip::algebra::{parse_polynomial, CoxRing, MonomialOrder, Polynomial};
use toricslip::hilbert::{hf_quotient, ideal_dim, ideal_piece_basis, DegreeBox};
use toricslip::linalg::rank;
use toricslip::ringmaps::{
    check_embedding_conditions, check_lift_b_condition, preimage, restrict_to_factor, segre_map,
    toric_lift_identity_check, GradedRingMap,
};
use toricslip::{Ideal, MultiDegree, Rational};

fn ideal(ring: &Arc<CoxRing>, src: &str) -> Ideal {
    Ideal::parse(ring.clone(), src).unwrap()
}

fn deg(c: &[i64]) -> MultiDegree {
    MultiDegree::new(c.to_vec())
}

/// `dim {f in S_a : phi(f) in I}` by a rank computation on `S_a -> T/I`.
fn preimage_dim_oracle(map: &GradedRingMap, i: &Ideal, a: &MultiDegree) -> u64 {
    let src = map.source();
    let order = MonomialOrder::grevlex(map.target().nvars());
    let monos = src.monomials_of_degree(a, &MonomialOrder::grevlex(src.nvars())).unwrap();
    let target = map.target().monomials_of_degree(&map.map_degree(a), &order).unwrap();
    let rows: Vec<Vec<Rational>> = monos
        .iter()
        .map(|m| {
            let img = map.apply(&Polynomial::monomial(m.clone())).unwrap();
            let nf = i.normal_form(&img, &order).unwrap();
            target.iter().map(|t| nf.coefficient(t)).collect()
        })
        .collect();
    monos.len() as u64 - rank(&rows) as u64
}

#[test]
fn blowdown_lift_of_first_hirzebruch_surface() {
    let (map, data) = GradedRingMap::hirzebruch_blowdown();
    assert!(toric_lift_identity_check(&map, &data).unwrap());
    assert!(check_lift_b_condition(&map).unwrap());

    let k = ideal(map.target(), "a3^2, a2");
    let pre = preimage(&map, &k).unwrap();
    assert!(pre.equals(&ideal(map.source(), "b0^2, b2")).unwrap());

    // K_(2,2) is fixed by phi(I); multiplication by a4^2 then pins K_(2,0).
    let extended = map.extend(&ideal(map.source(), "b0^2, b2")).unwrap();
    let h = map.target().clone();
    let a4sq = parse_polynomial(&h, "a4^2").unwrap();
    let candidates = h.monomials_of_degree(&deg(&[2, 0]), &MonomialOrder::grevlex(4)).unwrap();
    let inside: Vec<String> = candidates
        .iter()
        .filter(|m| extended.contains(&Polynomial::monomial((*m).clone()).try_mul(&a4sq).unwrap()).unwrap())
        .map(|m| Polynomial::monomial(m.clone()).display_aliases(&h))
        .collect();
    assert_eq!(inside, vec!["a3^2"]);
    let basis: Vec<String> =
        ideal_piece_basis(&k, &deg(&[2, 0])).unwrap().iter().map(|p| p.display_aliases(&h)).collect();
    assert_eq!(basis, vec!["a3^2"]);
}

#[test]
fn swapped_lift_fails_identity() {
    let (map, data) = GradedRingMap::hirzebruch_blowdown();
    let mut images = map.images().to_vec();
    images.swap(0, 1);
    let swapped =
        GradedRingMap::new(map.source().clone(), map.target().clone(), images, map.degree_map().to_vec()).unwrap();
    assert!(!toric_lift_identity_check(&swapped, &data).unwrap());
}

#[test]
fn identity_map() {
    let ring = Arc::new(CoxRing::projective(2));
    let map = GradedRingMap::identity(ring.clone());
    let i = ideal(&ring, "a0^2 - a1*a2, a1^3");
    assert!(preimage(&map, &i).unwrap().equals(&i).unwrap());
    let data = toricslip::ringmaps::ToricLiftData {
        source_rays: vec![vec![-1, -1], vec![1, 0], vec![0, 1]],
        target_rays: vec![vec![-1, -1], vec![1, 0], vec![0, 1]],
        delta: vec![vec![1, 0], vec![0, 1]],
    };
    assert!(toric_lift_identity_check(&map, &data).unwrap());
}

#[test]
fn zero_map_fails_b_condition() {
    let src = Arc::new(CoxRing::projective(1));
    let tgt = Arc::new(CoxRing::projective(1));
    let zero = vec![Polynomial::zero(2), Polynomial::zero(2)];
    let map = GradedRingMap::new(src, tgt, zero, vec![vec![1]]).unwrap();
    assert!(!check_lift_b_condition(&map).unwrap());
}

#[test]
fn factor_inclusion_satisfies_b_condition() {
    let ring = Arc::new(CoxRing::product_projective(&[1, 2]));
    let map = GradedRingMap::factor_inclusion(ring, &[0]).unwrap();
    assert!(check_lift_b_condition(&map).unwrap());
}

#[test]
fn ungraded_images_are_rejected() {
    let src = Arc::new(CoxRing::projective(1));
    let tgt = Arc::new(CoxRing::projective(1));
    let images = vec![parse_polynomial(&tgt, "a0^2").unwrap(), parse_polynomial(&tgt, "a1").unwrap()];
    assert!(GradedRingMap::new(src, tgt, images, vec![vec![1]]).is_err());
}

#[test]
fn segre_of_two_points() {
    let ring = Arc::new(CoxRing::product_projective(&[1, 1]));
    let p = ideal(&ring, "a0 - a1, b0 - 2*b1");
    let q = ideal(&ring, "a1, b0");
    let two = p.intersect(&q).unwrap();
    let map = segre_map(ring.clone(), &deg(&[1, 1]), 2, &ring.default_product_order()).unwrap();
    assert_eq!(map.source().nvars(), 4);
    let k = preimage(&map, &two).unwrap();
    for d in 0..6 {
        let expected = if d == 0 { 1 } else { 2 };
        assert_eq!(hf_quotient(&k, &deg(&[d])).unwrap(), expected);
        assert_eq!(ideal_dim(&k, &deg(&[d])).unwrap(), preimage_dim_oracle(&map, &two, &deg(&[d])));
    }
    assert!(k.is_saturated().unwrap());
}

#[test]
fn segre_shapes() {
    let ring = Arc::new(CoxRing::product_projective(&[1, 1]));
    let lex = MonomialOrder::Lex(vec![2, 3, 0, 1]);
    let map = segre_map(ring.clone(), &deg(&[1, 4]), 4, &lex).unwrap();
    assert_eq!(map.source().nvars(), 10);
    let first = map.images()[0].display_aliases(&ring);
    assert_eq!(first, "a0*b0^4");
    assert_eq!(map.images()[9].display_aliases(&ring), "a1*b1^4");

    let ring = Arc::new(CoxRing::product_projective(&[1, 2, 1]));
    let map = segre_map(ring.clone(), &deg(&[1, 1, 1]), 4, &ring.default_product_order()).unwrap();
    assert_eq!(map.source().nvars(), 12);
    assert!(map.images().iter().all(|g| g.is_monomial()));
    assert_eq!(serde_json::to_value(map.to_json()).unwrap()["degreeMap"], serde_json::json!([[1], [1], [1]]));

    let line = Arc::new(CoxRing::projective(1));
    let map = segre_map(line.clone(), &deg(&[1]), 2, &MonomialOrder::grevlex(2)).unwrap();
    assert_eq!(map.source().nvars(), 2);
    assert!(segre_map(line, &deg(&[1]), 3, &MonomialOrder::grevlex(2)).is_err());
}

#[test]
fn embedding_conditions() {
    let ring = Arc::new(CoxRing::product_projective(&[1, 1]));
    for r in 4..=5 {
        let rep = check_embedding_conditions(ring.clone(), &deg(&[1, r]), r as u64, 4).unwrap();
        assert!(rep.holds(), "{rep:?}");
        assert_eq!(rep.k, 2 * r as usize + 1);
    }
    // The first-factor projection: B = (a_i b_j) lies in (a0, a1).
    let rep = check_embedding_conditions(ring.clone(), &deg(&[1, 0]), 2, 4).unwrap();
    assert!(rep.irrelevant_in_radical && rep.generated && rep.small_pieces);

    let plane = Arc::new(CoxRing::projective(2));
    assert!(check_embedding_conditions(plane, &deg(&[1]), 4, 4).unwrap().holds());

    // On the Hirzebruch surface the fiber class is not ample: a1*a2 is not in rad(a4).
    let h = Arc::new(CoxRing::hirzebruch(1));
    let rep = check_embedding_conditions(h, &deg(&[0, 1]), 1, 3).unwrap();
    assert!(!rep.irrelevant_in_radical);
}

#[test]
fn restriction_of_products() {
    let ring = Arc::new(CoxRing::product_projective(&[1, 1]));
    let i = ideal(&ring, "b0*b1, b0*a0, b0*a1, a0^2");
    let first = restrict_to_factor(&i, &[0]).unwrap();
    assert!(first.equals(&ideal(first.ring(), "a0^2")).unwrap());
    let second = restrict_to_factor(&i, &[1]).unwrap();
    assert!(second.equals(&ideal(second.ring(), "a0*a1")).unwrap());

    // Generated in degree (1,1), so nothing survives in degree (d,0).
    let nonmono = ideal(&ring, "a0*b0 - a1*b1, a0*b1 - a1*b0");
    assert!(restrict_to_factor(&nonmono, &[0]).unwrap().is_zero());
    let mixed = ideal(&ring, "a0^2 - a1^2, a0*b0 - a1*b0 + a0*b1");
    let r = restrict_to_factor(&mixed, &[0]).unwrap();
    assert!(r.equals(&ideal(r.ring(), "a0^2 - a1^2")).unwrap());
}

#[test]
fn preimage_is_monotone_and_saturated() {
    let (map, _) = GradedRingMap::hirzebruch_blowdown();
    let h = map.target().clone();
    let small = ideal(&h, "a3^2, a2, a1*a3");
    let big = ideal(&h, "a3, a2");
    let ps = preimage(&map, &small).unwrap();
    let pb = preimage(&map, &big).unwrap();
    assert!(pb.contains_ideal(&ps).unwrap());
    for i in [&small, &big] {
        let sat = i.saturate_irrelevant().unwrap();
        let pre = preimage(&map, &sat).unwrap();
        assert!(pre.is_saturated().unwrap());
    }
    let window = DegreeBox::up_to(deg(&[4])).unwrap();
    for a in window.iter() {
        assert_eq!(ideal_dim(&ps, &a).unwrap(), preimage_dim_oracle(&map, &small, &a));
    }
}
