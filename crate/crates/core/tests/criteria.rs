use std::sync::Arc;

use toricslip::algebra::CoxRing;
use toricslip::criteria::{
    hom_dim_degree_zero, slip_dim, sufficiency_witness_check, tangent_criterion_custom, tangent_criterion_factor,
    truncation_ideal, CertificateGrade, DegreeSet, Sufficiency, SufficiencyStatus, Verdict, WitnessFamily,
};
use toricslip::hilbert::{hf_quotient, DegreeBox};
use toricslip::{Error, Ideal, MultiDegree};

const TSEX11: &str = "a0^3, a0*a1^2, a0^2*a2, a0*a1*a2, a0*a2^4, a1^6";

fn ideal(ring: &Arc<CoxRing>, src: &str) -> Ideal {
    Ideal::parse(ring.clone(), src).unwrap()
}

fn deg(c: &[i64]) -> MultiDegree {
    MultiDegree::new(c.to_vec())
}

fn at_least(k: i64) -> DegreeSet {
    DegreeSet::new(1, vec![deg(&[k])]).unwrap()
}

fn hf_row(j: &Ideal, upto: i64) -> Vec<u64> {
    (0..=upto).map(|t| hf_quotient(j, &deg(&[t])).unwrap()).collect()
}

#[test]
fn tsex11_truncations_match_table() {
    let ring = Arc::new(CoxRing::projective(2));
    let i = ideal(&ring, TSEX11);
    assert_eq!(hf_row(&i, 9), vec![1, 3, 6, 6, 6, 6, 6, 6, 6, 6]);

    let row1 = truncation_ideal(&i, &at_least(4), &DegreeSet::empty(1)).unwrap();
    assert_eq!(hf_row(&row1, 9), vec![1, 3, 6, 10, 6, 6, 6, 6, 6, 6]);
    let b4 = ideal(&ring, "(a0, a1, a2)^4");
    assert!(row1.equals(&i.intersect(&b4).unwrap()).unwrap());

    let row2 = truncation_ideal(&i, &DegreeSet::everything(1), &at_least(5)).unwrap();
    assert_eq!(hf_row(&row2, 8), vec![1, 3, 6, 6, 6, 0, 0, 0, 0]);

    let row3 = truncation_ideal(&i, &at_least(4), &at_least(6)).unwrap();
    assert_eq!(hf_row(&row3, 8), vec![1, 3, 6, 10, 6, 6, 0, 0, 0]);

    assert_eq!(hom_dim_degree_zero(&row2).unwrap(), 8);
    assert_eq!(slip_dim(&ring, 6), 12);
}

#[test]
fn truncation_rejects_a_outside_b() {
    let ring = Arc::new(CoxRing::projective(2));
    let i = ideal(&ring, TSEX11);
    assert!(matches!(truncation_ideal(&i, &at_least(4), &at_least(2)), Err(Error::InvalidArgument(_))));
}

#[test]
fn truncation_with_everything_and_nothing() {
    let ring = Arc::new(CoxRing::projective(2));
    let i = ideal(&ring, TSEX11);
    let j = truncation_ideal(&i, &DegreeSet::everything(1), &DegreeSet::empty(1)).unwrap();
    assert!(j.equals(&i).unwrap());
    let z = truncation_ideal(&i, &DegreeSet::empty(1), &DegreeSet::empty(1)).unwrap();
    assert!(z.is_zero());
}

#[test]
fn tsex11_sufficiency_witnesses() {
    let ring = CoxRing::projective(2);
    let window = DegreeBox::up_to(deg(&[15])).unwrap();
    for (e, set) in [(3, [3, 4]), (4, [4, 5])] {
        let member = |d: &MultiDegree| set.contains(&d.coords()[0]);
        let check =
            sufficiency_witness_check(&ring, 6, &member, &WitnessFamily::ProjectiveShift { e }, &window, 0).unwrap();
        assert_eq!(check.status, SufficiencyStatus::Certified, "{check:?}");
        assert_eq!(check.degrees_checked, 14);
    }
    let member = |d: &MultiDegree| d.coords()[0] == 3;
    let check =
        sufficiency_witness_check(&ring, 6, &member, &WitnessFamily::ProjectiveShift { e: 3 }, &window, 0).unwrap();
    assert_eq!(check.status, SufficiencyStatus::Refuted);
}

#[test]
fn tsex11_custom_criterion_with_witness() {
    let ring = Arc::new(CoxRing::projective(2));
    let i = ideal(&ring, TSEX11);
    let sufficiency = Sufficiency::Witness {
        family: WitnessFamily::ProjectiveShift { e: 4 },
        window: DegreeBox::up_to(deg(&[12])).unwrap(),
        l_bound: 0,
    };
    let report = tangent_criterion_custom(&i, 6, &at_least(6), &at_least(4), &sufficiency).unwrap();
    assert_eq!(report.threshold, 12);
    assert_eq!(report.certificate, CertificateGrade::Witness);
    assert_eq!(report.verdict == Verdict::Excluded, report.dim < 12);

    let bad = Sufficiency::Witness {
        family: WitnessFamily::ProjectiveShift { e: 1 },
        window: DegreeBox::up_to(deg(&[12])).unwrap(),
        l_bound: 0,
    };
    assert!(matches!(tangent_criterion_custom(&i, 6, &at_least(6), &at_least(4), &bad), Err(Error::Precondition(_))));
}

#[test]
fn user_asserted_certificate_is_conditional() {
    let ring = Arc::new(CoxRing::projective(2));
    let i = ideal(&ring, TSEX11);
    let report =
        tangent_criterion_custom(&i, 6, &at_least(5), &DegreeSet::everything(1), &Sufficiency::UserAsserted).unwrap();
    assert_eq!(report.dim, 8);
    assert_eq!(report.verdict, Verdict::ExcludedConditional);
    assert_eq!(report.certificate, CertificateGrade::UserAsserted);
}

#[test]
fn empty_a_gives_plain_tangent_space() {
    let ring = Arc::new(CoxRing::projective(2));
    let i = ideal(&ring, TSEX11);
    let report =
        tangent_criterion_custom(&i, 6, &DegreeSet::empty(1), &DegreeSet::everything(1), &Sufficiency::UserAsserted)
            .unwrap();
    assert_eq!(report.dim, hom_dim_degree_zero(&i).unwrap());
}

#[test]
fn hirzebruch_example() {
    for a in 1..=3u32 {
        let ring = Arc::new(CoxRing::hirzebruch(a));
        let src = format!("a1*a3, a1*a2, a1^{a}*a4, a2^2");
        let i = ideal(&ring, &src);
        let a_set = DegreeSet::coordinate_at_least(2, 1, 2);
        let b_set = DegreeSet::everything(2);
        let sufficiency = Sufficiency::Witness {
            family: WitnessFamily::HirzebruchFiber,
            window: DegreeBox::up_to(deg(&[6, 4])).unwrap(),
            l_bound: 10,
        };
        let report = tangent_criterion_custom(&i, 2, &a_set, &b_set, &sufficiency).unwrap();
        assert_eq!(report.dim, 2, "a = {a}");
        assert_eq!(report.threshold, 4);
        assert_eq!(report.verdict, Verdict::Excluded);
        assert_eq!(report.sufficiency.unwrap().status, SufficiencyStatus::CertifiedUpToL);
    }
}

#[test]
fn two_points_on_p1_p1() {
    let ring = Arc::new(CoxRing::product_projective(&[1, 1]));
    let i = ideal(&ring, "b0*b1, b0*a0, b0*a1, a0^2");
    let report = tangent_criterion_factor(&i, 2, 0).unwrap();
    assert_eq!((report.dim, report.threshold, report.verdict), (2, 4, Verdict::Excluded));
    assert_eq!(report.i, Some(1));
}

#[test]
fn three_points_on_products() {
    let cases: [(&[usize], &str); 3] = [
        (&[1, 1], "b0^2*b1, a0*b0, a0^3, a1^2*b0, a1*b0^2"),
        (&[2, 1], "b0*b1^2, a0*b0, a1*b0, a2*b0, a0^2, a0*a1, a1^2"),
        (&[2, 2], "b1*b2^2, b0^2, b0*b1, b0*b2, a0*b0, a0*b1, a1*b0, a1*b1, a2*b0, a2*b1, a0^2, a0*a1, a1^2"),
    ];
    for (ns, src) in cases {
        let ring = Arc::new(CoxRing::product_projective(ns));
        let i = ideal(&ring, src);
        let report = tangent_criterion_factor(&i, 3, 0).unwrap();
        assert_eq!(report.threshold, 3 * (ns[0] + ns[1]) as u64);
        assert_eq!(report.verdict, Verdict::Excluded, "{ns:?}: {}", report.dim);
    }
}

#[test]
fn factor_witnesses_are_certified() {
    for ns in [vec![1, 1], vec![2, 1], vec![1, 2, 1]] {
        let ring = CoxRing::product_projective(&ns);
        let p = ns.len();
        for i in 0..p {
            for r in 2..=4 {
                let member = |d: &MultiDegree| d.coords()[i] < 2;
                let window = DegreeBox::up_to(MultiDegree::new(vec![5; p])).unwrap();
                let check =
                    sufficiency_witness_check(&ring, r, &member, &WitnessFamily::FactorSquare { i }, &window, 0)
                        .unwrap();
                assert_eq!(check.status, SufficiencyStatus::Certified, "{ns:?} i={i} r={r}: {check:?}");
            }
        }
    }
}

#[test]
fn factor_criterion_rejects_other_families() {
    let ring = Arc::new(CoxRing::projective(2));
    let i = ideal(&ring, TSEX11);
    assert!(tangent_criterion_factor(&i, 6, 0).is_err());
    let ring = Arc::new(CoxRing::product_projective(&[1, 1]));
    let i = ideal(&ring, "b0*b1, b0*a0, b0*a1, a0^2");
    assert!(tangent_criterion_factor(&i, 2, 2).is_err());
}

#[test]
fn report_json_shape() {
    let ring = Arc::new(CoxRing::product_projective(&[1, 1]));
    let i = ideal(&ring, "b0*b1, b0*a0, b0*a1, a0^2");
    let report = tangent_criterion_factor(&i, 2, 0).unwrap();
    let json = serde_json::to_string(&report).unwrap();
    assert_eq!(
        json,
        r#"{"criterion":"ts-factor","i":1,"dim":2,"threshold":4,"verdict":"excluded","certificate":"builtin"}"#
    );
}
