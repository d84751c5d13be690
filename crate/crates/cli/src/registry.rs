//! Worked examples with frozen expectations.
//!
//! Each expectation carries a provenance tag: `paper` values are quoted
//! results, `trivial` ones follow by hand, and `derived` ones were computed
//! once by an independent dense oracle (see the core crate's oracle tests)
//! and frozen here.

use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};
use toricslip::algebra::{parse_polynomial, MonomialOrder, Polynomial};
use toricslip::constructions::construct_p1p1_ideal;
use toricslip::criteria::{
    ext1_dim_degree_zero, hom_dim_degree_zero, slip_dim, tangent_criterion_custom, tangent_criterion_factor,
    truncation_ideal, CriterionReport, DegreeSet, Sufficiency, WitnessFamily,
};
use toricslip::hilbert::{h_target, hf_matches_target, hf_quotient, ideal_piece_basis, DegreeBox};
use toricslip::ringmaps::{preimage, restrict_to_factor, toric_lift_identity_check, GradedRingMap};
use toricslip::{CoxRing, Ideal, MultiDegree, Result};

pub const EXPLICIT_I: &str = include_str!("../fixtures/explicit_i.txt");
pub const EXPLICIT_J: &str = include_str!("../fixtures/explicit_j.txt");
pub const TSEX11_I: &str = "a0^3, a0*a1^2, a0^2*a2, a0*a1*a2, a0*a2^4, a1^6";
pub const TWO_POINTS: &str = "b0*b1, b0*a0, b0*a1, a0^2";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    Paper,
    Trivial,
    Derived,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub tag: Tag,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
}

fn check(name: impl Into<String>, tag: Tag, expected: impl Serialize, actual: impl Serialize) -> Check {
    let expected = json!(expected);
    let actual = json!(actual);
    Check { name: name.into(), tag, pass: expected == actual, expected, actual }
}

pub struct ExampleCase {
    pub id: &'static str,
    pub title: &'static str,
    run: fn() -> Result<Vec<Check>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub id: String,
    pub title: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub checks: Vec<Check>,
}

impl ExampleCase {
    pub fn run(&self) -> CaseReport {
        let (checks, error) = match (self.run)() {
            Ok(checks) => (checks, None),
            Err(e) => (Vec::new(), Some(e.to_string())),
        };
        CaseReport {
            id: self.id.into(),
            title: self.title.into(),
            pass: error.is_none() && checks.iter().all(|c| c.pass),
            error,
            checks,
        }
    }
}

/// All cases, sorted by id.
pub fn registry() -> Vec<ExampleCase> {
    let mut cases = vec![
        ExampleCase { id: "2pts", title: "two points on P1 x P1", run: two_points },
        ExampleCase { id: "3pts", title: "three points on products of two projective spaces", run: three_points },
        ExampleCase { id: "explicit", title: "four points on P3 x P3 x P3", run: explicit },
        ExampleCase { id: "figure-p1p1", title: "four truncations on P1 x P1 with r = 2", run: figure_p1p1 },
        ExampleCase { id: "h1", title: "lift along the blow-down of the first Hirzebruch surface", run: h1 },
        ExampleCase { id: "h1c", title: "saturation and Hilbert function on the first Hirzebruch surface", run: h1c },
        ExampleCase { id: "hr", title: "two points on Hirzebruch surfaces", run: hr },
        ExampleCase { id: "p1_p1", title: "non-saturated lift on P1 x P1", run: p1_p1 },
        ExampleCase { id: "tsex11", title: "six points in the plane", run: tsex11 },
    ];
    cases.sort_by_key(|c| c.id);
    cases
}

pub fn find(id: &str) -> Option<ExampleCase> {
    registry().into_iter().find(|c| c.id == id)
}

/// Runs every case on its own thread; the result keeps registry order.
pub fn run_all() -> Vec<CaseReport> {
    let cases = registry();
    std::thread::scope(|s| {
        let handles: Vec<_> = cases.iter().map(|c| s.spawn(move || c.run())).collect();
        handles.into_iter().map(|h| h.join().expect("example case panicked")).collect()
    })
}

fn deg(c: &[i64]) -> MultiDegree {
    MultiDegree::new(c.to_vec())
}

fn ring(ns: &[usize]) -> Arc<CoxRing> {
    Arc::new(if ns.len() == 1 { CoxRing::projective(ns[0]) } else { CoxRing::product_projective(ns) })
}

fn factor_checks(
    prefix: &str,
    report: &CriterionReport,
    tag: Tag,
    dim: u64,
    threshold: u64,
    verdict: &str,
) -> Vec<Check> {
    vec![
        check(format!("{prefix} dim"), tag, dim, report.dim),
        check(format!("{prefix} threshold"), Tag::Trivial, threshold, report.threshold),
        check(format!("{prefix} verdict"), Tag::Paper, verdict, report.verdict),
    ]
}

fn two_points() -> Result<Vec<Check>> {
    let p1p1 = ring(&[1, 1]);
    let i = Ideal::parse(p1p1, TWO_POINTS)?;
    let hf = hf_matches_target(&i, 2, Some(&DegreeBox::up_to(deg(&[4, 4]))?))?;
    let report = tangent_criterion_factor(&i, 2, 0)?;
    let mut checks = vec![check("Hilbert function of 2 points on (0,0)..(4,4)", Tag::Trivial, true, hf.ok)];
    checks.extend(factor_checks("ts-factor i=1", &report, Tag::Paper, 2, 4, "excluded"));
    Ok(checks)
}

fn three_points() -> Result<Vec<Check>> {
    let cases: [(&[usize], &str, u64); 3] = [
        (&[1, 1], "b0^2*b1, a0*b0, a0^3, a1^2*b0, a1*b0^2", 4),
        (&[2, 1], "b0*b1^2, a0*b0, a1*b0, a2*b0, a0^2, a0*a1, a1^2", 3),
        (&[2, 2], "b1*b2^2, b0^2, b0*b1, b0*b2, a0*b0, a0*b1, a1*b0, a1*b1, a2*b0, a2*b1, a0^2, a0*a1, a1^2", 6),
    ];
    let mut checks = Vec::new();
    for (ns, src, dim) in cases {
        let i = Ideal::parse(ring(ns), src)?;
        let report = tangent_criterion_factor(&i, 3, 0)?;
        let threshold = 3 * (ns[0] + ns[1]) as u64;
        checks.extend(factor_checks(
            &format!("P{}xP{} ts-factor i=1", ns[0], ns[1]),
            &report,
            Tag::Derived,
            dim,
            threshold,
            "excluded",
        ));
    }
    Ok(checks)
}

fn explicit() -> Result<Vec<Check>> {
    let x = ring(&[3, 3, 3]);
    let i = Ideal::parse(x.clone(), EXPLICIT_I)?;
    let mut checks = Vec::new();
    for (f, dim) in [48u64, 53, 56].into_iter().enumerate() {
        let report = tangent_criterion_factor(&i, 4, f)?;
        checks.extend(factor_checks(&format!("ts-factor i={}", f + 1), &report, Tag::Paper, dim, 36, "inconclusive"));
    }
    let sat = i.saturate_irrelevant()?;
    checks.push(check("ext1(I, sat I)", Tag::Paper, 3, ext1_dim_degree_zero(&i, &sat)?));

    let restricted = restrict_to_factor(&i, &[0, 1])?;
    let j = Ideal::parse(restricted.ring().clone(), EXPLICIT_J)?;
    checks.push(check("restriction to the first two factors", Tag::Paper, true, restricted.equals(&j)?));
    let report = tangent_criterion_factor(&j, 4, 0)?;
    checks.extend(factor_checks("restriction ts-factor i=1", &report, Tag::Paper, 23, 24, "excluded"));
    Ok(checks)
}

fn figure_p1p1() -> Result<Vec<Check>> {
    let p1p1 = ring(&[1, 1]);
    let i = Ideal::parse(p1p1, TWO_POINTS)?;
    let set = |gens: &[&[i64]]| DegreeSet::new(2, gens.iter().map(|g| deg(g)).collect());
    let truncations = [
        ("I + a^2", DegreeSet::everything(2), set(&[&[2, 0]])?, 2u64),
        ("I cap a^2 b", set(&[&[2, 1]])?, DegreeSet::empty(2), 4),
        ("I + a^3 + b^3", DegreeSet::everything(2), set(&[&[3, 0], &[0, 3]])?, 4),
        ("(I + a^3 + b^3) cap B", set(&[&[1, 1]])?, set(&[&[3, 1], &[1, 3]])?, 4),
    ];
    let mut checks = Vec::new();
    for (name, b, a, dim) in truncations {
        let j = truncation_ideal(&i, &b, &a)?;
        checks.push(check(format!("hom dim of {name}"), Tag::Derived, dim, hom_dim_degree_zero(&j)?));
    }
    Ok(checks)
}

fn h1() -> Result<Vec<Check>> {
    let (map, data) = GradedRingMap::hirzebruch_blowdown();
    let h = map.target().clone();
    let k = Ideal::parse(h.clone(), "a3^2, a2")?;
    let pre = preimage(&map, &k)?;
    let expected = Ideal::parse(map.source().clone(), "b0^2, b2")?;
    let piece: Vec<String> = ideal_piece_basis(&k, &deg(&[2, 0]))?.iter().map(|p| p.display_aliases(&h)).collect();

    // K_(2,0) is pinned by which f satisfy f * a4^2 in phi(pre).
    let extended = map.extend(&pre)?;
    let a4sq = parse_polynomial(&h, "a4^2")?;
    let mut pinned = Vec::new();
    for m in h.monomials_of_degree(&deg(&[2, 0]), &MonomialOrder::grevlex(4))? {
        let f = Polynomial::monomial(m);
        if extended.contains(&f.try_mul(&a4sq)?)? {
            pinned.push(f.display_aliases(&h));
        }
    }
    Ok(vec![
        check("toric lift identity", Tag::Paper, true, toric_lift_identity_check(&map, &data)?),
        check("preimage of (a3^2, a2) is (b0^2, b2)", Tag::Paper, true, pre.equals(&expected)?),
        check("K_(2,0)", Tag::Paper, ["a3^2"], piece),
        check("K_(2,0) forced by the lift", Tag::Paper, ["a3^2"], pinned),
    ])
}

fn h1c() -> Result<Vec<Check>> {
    let h = Arc::new(CoxRing::hirzebruch(1));
    let i = Ideal::parse(h.clone(), "a1*a4, a2^2")?;
    let sat = i.saturate_irrelevant()?;
    let expected = Ideal::parse(h.clone(), "a1, a2^2")?;
    let mut fails = Vec::new();
    for d in DegreeBox::up_to(deg(&[5, 5]))?.iter() {
        let want = if d.coords()[1] == 0 { 1 } else { h_target(&h, 2, &d)? };
        if hf_quotient(&sat, &d)? != want {
            fails.push(d);
        }
    }
    Ok(vec![
        check("saturation is (a1, a2^2)", Tag::Paper, true, sat.equals(&expected)?),
        check("degrees in (0,0)..(5,5) with the wrong Hilbert function", Tag::Paper, Vec::<MultiDegree>::new(), fails),
    ])
}

fn hr() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for a in 1..=2u32 {
        let h = Arc::new(CoxRing::hirzebruch(a));
        let i = Ideal::parse(h.clone(), &format!("a1*a3, a1*a2, a1^{a}*a4, a2^2"))?;
        let sufficiency = Sufficiency::Witness {
            family: WitnessFamily::HirzebruchFiber,
            window: DegreeBox::up_to(deg(&[6, 4]))?,
            l_bound: 10,
        };
        let report = tangent_criterion_custom(
            &i,
            2,
            &DegreeSet::coordinate_at_least(2, 1, 2),
            &DegreeSet::everything(2),
            &sufficiency,
        )?;
        checks.extend(factor_checks(&format!("H{a} ts-custom"), &report, Tag::Paper, 2, 4, "excluded"));
        checks.push(check(format!("H{a} certificate"), Tag::Trivial, "witness", report.certificate));
    }
    Ok(checks)
}

fn p1_p1() -> Result<Vec<Check>> {
    let c = construct_p1p1_ideal(4)?;
    let hf = hf_matches_target(&c.ideal, 4, Some(&DegreeBox::up_to(deg(&[6, 6]))?))?;
    let k = preimage(&c.map, &c.ideal)?;
    let t = c.map.source().clone();
    let expected = Ideal::parse(t.clone(), "t1, t2, t3, t4, t5, t6, t7, t8, t9^4")?;
    let t1sq = parse_polynomial(&t, "t1^2")?;
    Ok(vec![
        check("Hilbert function of 4 points on (0,0)..(6,6)", Tag::Paper, true, hf.ok),
        check("saturation of the preimage", Tag::Paper, true, k.saturate_irrelevant()?.equals(&expected)?),
        check("t1^2 in the preimage", Tag::Paper, false, k.contains(&t1sq)?),
    ])
}

fn tsex11() -> Result<Vec<Check>> {
    let p2 = ring(&[2]);
    let i = Ideal::parse(p2.clone(), TSEX11_I)?;
    let at_least = |k: i64| DegreeSet::new(1, vec![deg(&[k])]);
    let rows = [
        ("I cap B^4", at_least(4)?, DegreeSet::empty(1), vec![1u64, 3, 6, 10, 6, 6, 6, 6]),
        ("I + B^5", DegreeSet::everything(1), at_least(5)?, vec![1, 3, 6, 6, 6, 0, 0, 0]),
        ("I cap B^4 + B^6", at_least(4)?, at_least(6)?, vec![1, 3, 6, 10, 6, 6, 0, 0]),
    ];
    let mut checks = Vec::new();
    for (name, b, a, row) in rows {
        let j = truncation_ideal(&i, &b, &a)?;
        let got = (0..8).map(|t| hf_quotient(&j, &deg(&[t]))).collect::<Result<Vec<_>>>()?;
        checks.push(check(format!("Hilbert function of {name} in degrees 0..7"), Tag::Paper, row, got));
    }
    let sufficiency = Sufficiency::Witness {
        family: WitnessFamily::ProjectiveShift { e: 3 },
        window: DegreeBox::up_to(deg(&[15]))?,
        l_bound: 0,
    };
    let report = tangent_criterion_custom(&i, 6, &at_least(5)?, &DegreeSet::everything(1), &sufficiency)?;
    checks.extend(factor_checks("I + B^5 ts-custom", &report, Tag::Paper, 8, 12, "excluded"));
    checks.push(check("slip dimension", Tag::Paper, 12, slip_dim(&p2, 6)));
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_sorted() {
        let ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(ids, sorted);
    }
}
