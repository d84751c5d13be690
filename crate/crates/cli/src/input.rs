//! Parsing of rings, ideals, windows, degree sets and maps from flags.

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;
use toricslip::algebra::{parse_polynomial, Family};
use toricslip::criteria::{DegreeSet, WitnessFamily};
use toricslip::hilbert::DegreeBox;
use toricslip::ringmaps::{GradedRingMap, ToricLiftData};
use toricslip::{CoxRing, Ideal, MonomialOrder, MultiDegree};

/// Anything that makes a command exit with status 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<toricslip::Error> for InputError {
    fn from(e: toricslip::Error) -> Self {
        InputError(e.to_string())
    }
}

impl From<serde_json::Error> for InputError {
    fn from(e: serde_json::Error) -> Self {
        InputError(format!("bad JSON: {e}"))
    }
}

impl From<std::io::Error> for InputError {
    fn from(e: std::io::Error) -> Self {
        InputError(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, InputError>;

pub fn fail<T>(msg: impl Into<String>) -> Result<T> {
    Err(InputError(msg.into()))
}

/// Contents of `arg` if it names an existing file, else `arg` itself.
fn file_or_inline(arg: &str) -> Result<String> {
    if Path::new(arg).is_file() {
        Ok(std::fs::read_to_string(arg)?)
    } else {
        Ok(arg.to_string())
    }
}

/// A ring descriptor: JSON (`{"family":"projective","n":2}`), a file holding
/// JSON, or one of the shorthands `P2`, `P1xP1`, `P3x3x3`, `H1`.
pub fn parse_ring(arg: &str) -> Result<Arc<CoxRing>> {
    let text = file_or_inline(arg)?;
    let text = text.trim();
    let family = if text.starts_with('{') { serde_json::from_str::<Family>(text)? } else { shorthand_family(text)? };
    Ok(Arc::new(CoxRing::from_family(family)?))
}

fn shorthand_family(s: &str) -> Result<Family> {
    let bad = || InputError(format!("unrecognised ring `{s}`"));
    if let Some(a) = s.strip_prefix('H') {
        return Ok(Family::Hirzebruch { a: a.parse().map_err(|_| bad())? });
    }
    let body = s.strip_prefix('P').ok_or_else(bad)?;
    let ns = body
        .split('x')
        .map(|part| part.trim_start_matches('P').parse::<usize>().map_err(|_| bad()))
        .collect::<Result<Vec<_>>>()?;
    Ok(if ns.len() == 1 { Family::Projective { n: ns[0] } } else { Family::ProductProjective { ns } })
}

pub fn parse_ideal(ring: &Arc<CoxRing>, arg: &str) -> Result<Ideal> {
    Ok(Ideal::parse(ring.clone(), &file_or_inline(arg)?)?)
}

fn parse_coords(s: &str) -> Result<Vec<i64>> {
    s.split(',').map(|c| c.trim().parse::<i64>().map_err(|_| InputError(format!("bad degree `{s}`")))).collect()
}

/// A degree such as `1,4`; a single number is repeated to the Picard rank.
pub fn parse_degree(s: &str, rank: usize) -> Result<MultiDegree> {
    let mut coords = parse_coords(s)?;
    if coords.len() == 1 && rank > 1 {
        coords = vec![coords[0]; rank];
    }
    if coords.len() != rank {
        return fail(format!("degree `{s}` needs {rank} coordinates"));
    }
    Ok(MultiDegree::new(coords))
}

/// `lo..hi` with each end a degree as in [`parse_degree`].
pub fn parse_window(s: &str, rank: usize) -> Result<DegreeBox> {
    let (lo, hi) = s.split_once("..").ok_or_else(|| InputError(format!("window `{s}` is not of the form a..b")))?;
    Ok(DegreeBox::new(parse_degree(lo, rank)?, parse_degree(hi, rank)?)?)
}

/// `all`, `none`, or minimal generators separated by `;` (e.g. `2,0;0,3`).
pub fn parse_degree_set(s: &str, rank: usize) -> Result<DegreeSet> {
    match s.trim() {
        "all" => Ok(DegreeSet::everything(rank)),
        "none" => Ok(DegreeSet::empty(rank)),
        gens => {
            let gens = gens.split(';').map(|g| parse_degree(g, rank)).collect::<Result<Vec<_>>>()?;
            Ok(DegreeSet::new(rank, gens)?)
        }
    }
}

/// A comma list of 1-based indices, returned 0-based.
pub fn parse_indices(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|c| match c.trim().parse::<usize>() {
            Ok(i) if i >= 1 => Ok(i - 1),
            _ => fail(format!("bad index list `{s}`")),
        })
        .collect()
}

pub fn parse_order(name: Option<&str>, ring: &CoxRing) -> Result<MonomialOrder> {
    let n = ring.nvars();
    match name {
        None | Some("grevlex") => Ok(MonomialOrder::grevlex(n)),
        Some("lex") => Ok(MonomialOrder::lex(n)),
        Some("product") => Ok(ring.default_product_order()),
        Some(other) => fail(format!("unknown order `{other}`")),
    }
}

/// `projective-shift:E`, `hirzebruch-fiber`, `factor-square:I` (1-based), or
/// a JSON family such as a `table`.
pub fn parse_witness(s: &str) -> Result<WitnessFamily> {
    let text = file_or_inline(s)?;
    let text = text.trim();
    if text.starts_with('{') {
        return Ok(serde_json::from_str(text)?);
    }
    let (kind, arg) = text.split_once(':').unwrap_or((text, ""));
    match kind {
        "hirzebruch-fiber" => Ok(WitnessFamily::HirzebruchFiber),
        "projective-shift" => match arg.parse() {
            Ok(e) => Ok(WitnessFamily::ProjectiveShift { e }),
            Err(_) => fail("projective-shift needs an integer, e.g. projective-shift:4"),
        },
        "factor-square" => Ok(WitnessFamily::FactorSquare { i: parse_indices(arg)?[0] }),
        _ => fail(format!("unknown witness family `{text}`")),
    }
}

#[derive(Deserialize)]
#[serde(rename_all = "camelCase")]
struct MapFile {
    source: Family,
    target: Family,
    degree_map: Vec<Vec<i64>>,
    images: Vec<String>,
    source_rays: Option<Vec<Vec<i64>>>,
    target_rays: Option<Vec<Vec<i64>>>,
    delta: Option<Vec<Vec<i64>>>,
}

/// A map file, inline JSON, or the built-in `h1-blowdown`.
pub fn parse_map(arg: &str) -> Result<(GradedRingMap, Option<ToricLiftData>)> {
    if arg == "h1-blowdown" {
        let (map, data) = GradedRingMap::hirzebruch_blowdown();
        return Ok((map, Some(data)));
    }
    let file: MapFile = serde_json::from_str(&file_or_inline(arg)?)?;
    let source = Arc::new(CoxRing::from_family(file.source)?);
    let target = Arc::new(CoxRing::from_family(file.target)?);
    let images = file.images.iter().map(|s| parse_polynomial(&target, s)).collect::<toricslip::Result<Vec<_>>>()?;
    let map = GradedRingMap::new(source, target, images, file.degree_map)?;
    let data = match (file.source_rays, file.target_rays, file.delta) {
        (Some(source_rays), Some(target_rays), Some(delta)) => Some(ToricLiftData { source_rays, target_rays, delta }),
        (None, None, None) => None,
        _ => return fail("sourceRays, targetRays and delta must be given together"),
    };
    Ok((map, data))
}
