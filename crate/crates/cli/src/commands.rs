use serde_json::{json, Value};
use toricslip::algebra::parse_polynomial;
use toricslip::constructions::{apolarity_lift, construct_p1p1_ideal, ProductLiftPlan};
use toricslip::criteria::{
    classify_products, ext1_dim_degree_zero, hom_dim_degree_zero, tangent_criterion_custom, tangent_criterion_factor,
    Classification, CriterionReport, Sufficiency, Verdict,
};
use toricslip::hilbert::{hf_matches_target, hf_quotient, DegreeBox};
use toricslip::ringmaps::{
    check_embedding_conditions, check_lift_b_condition, preimage, restrict_to_factor, segre_map,
    toric_lift_identity_check,
};
use toricslip::{CoxRing, Ideal, MonomialOrder, MultiDegree, Polynomial};

use crate::input::{
    fail, parse_degree, parse_degree_set, parse_ideal, parse_indices, parse_map, parse_order, parse_ring, parse_window,
    parse_witness, Result,
};

/// A computed JSON document and whether a requested gate failed.
pub struct Report {
    pub body: Value,
    pub gate_failed: bool,
}

impl Report {
    fn ok(body: Value) -> Self {
        Report { body, gate_failed: false }
    }
}

pub fn generators(ideal: &Ideal, order: &MonomialOrder) -> Result<Vec<String>> {
    Ok(ideal.groebner_basis(order)?.iter().map(|g| g.display(ideal.ring())).collect())
}

fn polys(ps: &[Polynomial], ring: &CoxRing) -> Vec<String> {
    ps.iter().map(|g| g.display(ring)).collect()
}

fn need<'a>(value: &'a Option<String>, flag: &str) -> Result<&'a str> {
    value.as_deref().ok_or_else(|| crate::input::InputError(format!("--{flag} is required")))
}

pub fn hf(ring: &str, ideal: &str, window: &str, r: Option<u64>) -> Result<Report> {
    let ring = parse_ring(ring)?;
    let ideal = parse_ideal(&ring, ideal)?;
    let window = parse_window(window, ring.pic_rank())?;
    let mut values = Vec::new();
    let mut row = Vec::new();
    for d in window.iter() {
        let h = hf_quotient(&ideal, &d)?;
        row.push(h);
        values.push(json!({ "degree": d, "hf": h }));
    }
    let mut body = json!({ "command": "hf", "ring": ring.family(), "window": window, "values": values, "row": row });
    if let Some(r) = r {
        let report = hf_matches_target(&ideal, r, Some(&window))?;
        body["matchesTarget"] = json!(report.ok);
        body["firstFailure"] = json!(report.first_failure);
    }
    Ok(Report::ok(body))
}

pub fn saturate(ring: &str, ideal: &str, order: Option<&str>) -> Result<Report> {
    let ring = parse_ring(ring)?;
    let ideal = parse_ideal(&ring, ideal)?;
    let order = parse_order(order, &ring)?;
    let sat = ideal.saturate_irrelevant()?;
    Ok(Report::ok(json!({
        "command": "saturate",
        "ring": ring.family(),
        "inputSaturated": sat.equals(&ideal)?,
        "generators": generators(&sat, &order)?,
    })))
}

pub fn restrict(ring: &str, ideal: &str, factors: &str, order: Option<&str>) -> Result<Report> {
    let ring = parse_ring(ring)?;
    let ideal = parse_ideal(&ring, ideal)?;
    let restricted = restrict_to_factor(&ideal, &parse_indices(factors)?)?;
    let order = parse_order(order, restricted.ring())?;
    Ok(Report::ok(json!({
        "command": "restrict",
        "ring": restricted.ring().family(),
        "generators": generators(&restricted, &order)?,
    })))
}

pub fn preimage_cmd(map: &str, ideal: &str, saturate: bool) -> Result<Report> {
    let (map, _) = parse_map(map)?;
    let ideal = parse_ideal(map.target(), ideal)?;
    let k = preimage(&map, &ideal)?;
    let order = k.default_order();
    let mut body = json!({
        "command": "preimage",
        "map": map.to_json(),
        "generators": generators(&k, &order)?,
    });
    if saturate {
        body["saturation"] = json!(generators(&k.saturate_irrelevant()?, &order)?);
    }
    // Surjectivity of the map in the degrees of the returned generators.
    let mut degrees: Vec<MultiDegree> = Vec::new();
    for g in k.generators() {
        if let Some(d) = g.degree(map.source())? {
            if !degrees.contains(&d) {
                degrees.push(d);
            }
        }
    }
    degrees.sort_by(|a, b| a.coords().cmp(b.coords()));
    let mut surjective = Vec::new();
    for d in &degrees {
        surjective.push(json!({ "degree": d, "surjective": map.is_surjective_in_degree(d)? }));
    }
    body["surjectivity"] = json!(surjective);
    Ok(Report::ok(body))
}

pub fn segre_check(ring: &str, u: &str, r: u64, window: Option<i64>) -> Result<Report> {
    let ring = parse_ring(ring)?;
    let u = parse_degree(u, ring.pic_rank())?;
    let window = window.unwrap_or(r as i64 + 1);
    let conditions = check_embedding_conditions(ring.clone(), &u, r, window)?;
    let map = segre_map(ring.clone(), &u, r, &MonomialOrder::lex(ring.nvars()))?;
    Ok(Report::ok(json!({
        "command": "segre-check",
        "map": map.to_json(),
        "conditions": conditions,
        "holds": conditions.holds(),
    })))
}

pub fn hom_dim(ring: &str, ideal: &str) -> Result<Report> {
    let ring = parse_ring(ring)?;
    let ideal = parse_ideal(&ring, ideal)?;
    Ok(Report::ok(json!({ "command": "hom-dim", "dim": hom_dim_degree_zero(&ideal)? })))
}

pub fn ext1_dim(ring: &str, ideal: &str, over: Option<&str>) -> Result<Report> {
    let ring = parse_ring(ring)?;
    let i = parse_ideal(&ring, ideal)?;
    let j = match over {
        Some(src) => parse_ideal(&ring, src)?,
        None => i.saturate_irrelevant()?,
    };
    Ok(Report::ok(json!({ "command": "ext1-dim", "dim": ext1_dim_degree_zero(&i, &j)? })))
}

fn criterion_report(command: &str, reports: Vec<CriterionReport>, gate: bool) -> Report {
    let excluded = reports.iter().any(|r| r.verdict == Verdict::Excluded);
    Report {
        body: json!({ "command": command, "excluded": excluded, "reports": reports }),
        gate_failed: gate && !excluded,
    }
}

pub fn tangent(ring: &str, ideal: &str, r: u64, factors: Option<&str>, gate: bool) -> Result<Report> {
    let ring = parse_ring(ring)?;
    let ideal = parse_ideal(&ring, ideal)?;
    let factors = match factors {
        Some(list) => parse_indices(list)?,
        None => (0..ring.factor_dims().map_or(0, |ns| ns.len())).collect(),
    };
    let reports =
        factors.into_iter().map(|i| tangent_criterion_factor(&ideal, r, i)).collect::<toricslip::Result<Vec<_>>>()?;
    Ok(criterion_report("tangent", reports, gate))
}

pub struct CustomArgs {
    pub ring: String,
    pub ideal: String,
    pub r: u64,
    pub a: String,
    pub b: String,
    pub sufficiency: String,
    pub witness: Option<String>,
    pub window: Option<String>,
    pub l_bound: u32,
    pub gate: bool,
}

pub fn tangent_custom(args: &CustomArgs) -> Result<Report> {
    let ring = parse_ring(&args.ring)?;
    let ideal = parse_ideal(&ring, &args.ideal)?;
    let p = ring.pic_rank();
    let a = parse_degree_set(&args.a, p)?;
    let b = parse_degree_set(&args.b, p)?;
    let sufficiency = match args.sufficiency.split_once(':').unwrap_or((&args.sufficiency, "")) {
        ("builtin", i) => Sufficiency::BuiltinFactorSquare { i: parse_indices(i)?[0] },
        ("user-asserted", _) => Sufficiency::UserAsserted,
        ("witness", _) => {
            let family = parse_witness(need(&args.witness, "witness")?)?;
            let window = match &args.window {
                Some(w) => parse_window(w, p)?,
                None => DegreeBox::up_to(MultiDegree::new(vec![2 * args.r as i64 + 2; p]))?,
            };
            Sufficiency::Witness { family, window, l_bound: args.l_bound }
        }
        _ => return fail(format!("unknown sufficiency `{}`", args.sufficiency)),
    };
    let report = tangent_criterion_custom(&ideal, args.r, &a, &b, &sufficiency)?;
    Ok(criterion_report("tangent-custom", vec![report], args.gate))
}

pub fn lift3(ring: &str, ideal: &str, y: &str, r: u64, window: Option<&str>, order: Option<&str>) -> Result<Report> {
    let x = parse_ring(ring)?;
    let ix = parse_ideal(&x, ideal)?;
    let y = parse_ring(y)?;
    let x_window = DegreeBox::up_to(MultiDegree::new(vec![r as i64 + 2; x.pic_rank()]))?;
    let x_order = order.map(|o| parse_order(Some(o), &x)).transpose()?;
    let y_order = order.map(|o| parse_order(Some(o), &y)).transpose()?;
    let plan = ProductLiftPlan::new(ix, y, r, x_order, y_order, &x_window)?;
    let product = plan.product_ring().clone();
    let window = match window {
        Some(w) => parse_window(w, product.pic_rank())?,
        None => DegreeBox::up_to(MultiDegree::new(vec![r as i64 + 1; product.pic_rank()]))?,
    };
    let j = plan.ideal(&window)?;
    let check = plan.check(&j, &window)?;
    let factors: Vec<usize> = (0..x.factor_dims().map_or(1, |ns| ns.len())).collect();
    let restricted = restrict_to_factor(&j, &factors)?;
    Ok(Report::ok(json!({
        "command": "lift3",
        "ring": product.family(),
        "order": plan.order().name(),
        "generators": generators(&j, &j.default_order())?,
        "check": check,
        "ok": check.ok(),
        "restriction": generators(&restricted, &restricted.default_order())?,
    })))
}

pub fn lift4(ring: &str, ideal: &str, r: u64) -> Result<Report> {
    let ring = parse_ring(ring)?;
    let j = parse_ideal(&ring, ideal)?;
    let lift = apolarity_lift(&j, r, None)?;
    Ok(Report::ok(json!({
        "command": "lift4",
        "a": lift.a,
        "b": lift.b,
        "added": lift.added,
        "generators": generators(&lift.ideal, &lift.ideal.default_order())?,
        "check": lift.check,
        "ok": lift.check.ok(),
    })))
}

pub fn p1p1(r: u64, window: Option<&str>) -> Result<Report> {
    let c = construct_p1p1_ideal(r)?;
    let window = match window {
        Some(w) => parse_window(w, 2)?,
        None => DegreeBox::up_to(MultiDegree::new(vec![r as i64 + 2; 2]))?,
    };
    let hf = hf_matches_target(&c.ideal, r, Some(&window))?;
    let k = preimage(&c.map, &c.ideal)?;
    let source = c.map.source().clone();
    let power = parse_polynomial(&source, &format!("x0_0^{}", r - 2))?;
    let korder = k.default_order();
    Ok(Report::ok(json!({
        "command": "p1p1",
        "r": r,
        "order": c.order.name(),
        "generators": polys(c.ideal.generators(), c.ideal.ring()),
        "saturation": generators(&c.saturation, &c.saturation.default_order())?,
        "hf": { "ok": hf.ok, "window": hf.window, "firstFailure": hf.first_failure },
        "map": c.map.to_json(),
        "preimage": {
            "generators": generators(&k, &korder)?,
            "saturation": generators(&k.saturate_irrelevant()?, &korder)?,
            "firstVariablePowerInK": k.contains(&power)?,
        },
    })))
}

pub fn map_check(map: &str, degrees: Option<&str>) -> Result<Report> {
    let (map, data) = parse_map(map)?;
    let mut body = json!({
        "command": "map-check",
        "map": map.to_json(),
        "bCondition": check_lift_b_condition(&map)?,
    });
    if let Some(data) = &data {
        body["toricIdentity"] = json!(toric_lift_identity_check(&map, data)?);
    }
    if let Some(w) = degrees {
        let window = parse_window(w, map.source().pic_rank())?;
        let mut surjective = Vec::new();
        for d in window.iter() {
            surjective.push(json!({ "degree": d, "surjective": map.is_surjective_in_degree(&d)? }));
        }
        body["surjectivity"] = json!(surjective);
    }
    Ok(Report::ok(body))
}

pub fn classify(r: u64, ns: &str) -> Result<Report> {
    let ns = ns
        .split(',')
        .map(|c| c.trim().parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| crate::input::InputError(format!("bad factor list `{ns}`")))?;
    if ns.is_empty() || ns.contains(&0) || r == 0 {
        return fail("need r >= 1 and positive factor dimensions");
    }
    let irreducible = classify_products(r, &ns) == Classification::Irreducible;
    Ok(Report::ok(json!({ "irreducible": irreducible })))
}
