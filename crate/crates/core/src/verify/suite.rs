//! Structural checks run on one pencil, in a fixed order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::oracles::{noether_intersection, resultant_intersection};
use crate::blowup::resolve_local;
use crate::error::{Error, Result};
use crate::pencil::points::localize;
use crate::pencil::{analyze, Chart, Pencil, PencilReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn new(name: &str, ok: bool, detail: String) -> Check {
        Check { name: name.into(), status: if ok { Status::Pass } else { Status::Fail }, detail }
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

fn existence(r: &PencilReport) -> Check {
    let counts: Vec<usize> = (0..r.base_points.len()).map(|i| r.dicriticals_at(i).count()).collect();
    Check::new("existence", counts.iter().all(|&c| c >= 1), format!("dicriticals per base point: {counts:?}"))
}

fn zero_valuation(r: &PencilReport) -> Check {
    let bad = r.dicriticals.iter().filter(|d| d.v_f != d.v_g || d.degree == 0).count();
    Check::new("zero-valuation", bad == 0, format!("{} dicriticals, {bad} with v_f != v_g", r.dicriticals.len()))
}

fn finiteness(r: &PencilReport, cap: usize) -> Check {
    let depth = r.trees.iter().flat_map(|t| t.nodes.iter().map(|n| n.depth + 1)).max().unwrap_or(0);
    let sizes: Vec<usize> = r.trees.iter().map(|t| t.nodes.len()).collect();
    Check::new("finiteness", depth <= cap, format!("tree sizes {sizes:?}, max depth {depth} (cap {cap})"))
}

/// Random points of the plane off the base locus carry no resolution.
fn locality(r: &PencilReport, seed: u64) -> Result<Check> {
    let p = &r.pencil;
    let k = r.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x10ca1);
    let mut sampled = 0;
    let mut attempts = 0;
    let mut ok = true;
    while sampled < 5 && attempts < 200 {
        attempts += 1;
        let coords = std::array::from_fn(|_| {
            if k.is_finite() {
                k.random(&mut rng)
            } else {
                k.from_i64(rng.gen_range(-9..=9))
            }
        });
        if coords.iter().all(|c| k.is_zero(c)) {
            continue;
        }
        if k.is_zero(&p.big_f.eval(&coords)) && k.is_zero(&p.big_g.eval(&coords)) {
            continue;
        }
        sampled += 1;
        let b = localize(p, coords);
        ok &= matches!(resolve_local(&b.f_local, &b.g_local, k, 64), Err(Error::NotABasePoint));
    }
    Ok(Check::new("locality", ok, format!("{sampled} points off the base locus")))
}

fn intersection_agreement(r: &PencilReport, seed: u64) -> Result<Check> {
    let mut pairs = vec![];
    for b in r.base_points.iter().filter(|b| b.chart == Chart::Z) {
        let n = noether_intersection(&b.f_local, &b.g_local)?;
        let m = resultant_intersection(&b.f_local, &b.g_local, seed)?;
        pairs.push((n, m));
    }
    if pairs.is_empty() {
        return Ok(Check {
            name: "intersection".into(),
            status: Status::Skip,
            detail: "no base point in the chart Z != 0".into(),
        });
    }
    let ok = pairs.iter().all(|(n, m)| n == m);
    Ok(Check::new("intersection", ok, format!("(noether, resultant) per affine base point: {pairs:?}")))
}

/// Analyzes the pencil and runs [`run_checks`] on the result.
pub fn property_suite(pencil: &Pencil, seed: u64, cap: usize) -> Result<Vec<Check>> {
    run_checks(&analyze(pencil, cap)?, seed, cap)
}

/// Existence, zero valuation, finiteness, locality and intersection-oracle
/// agreement, in that order.
pub fn run_checks(report: &PencilReport, seed: u64, cap: usize) -> Result<Vec<Check>> {
    Ok(vec![
        existence(report),
        zero_valuation(report),
        finiteness(report, cap),
        locality(report, seed)?,
        intersection_agreement(report, seed)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::pencil::parse_pencil;

    fn suite(f: &str, g: &str) -> Vec<Check> {
        property_suite(&parse_pencil(f, g, &Field::rationals()).unwrap(), 0, 64).unwrap()
    }

    #[test]
    fn suite_passes_on_examples() {
        for (f, g) in [("x", "y"), ("x^2", "y^2"), ("y - x^2", "1"), ("y^2", "x^3")] {
            let checks = suite(f, g);
            assert_eq!(checks.len(), 5);
            assert!(checks.iter().all(|c| !c.failed()), "{f}, {g}: {checks:?}");
        }
        let checks = suite("y - x^2", "1");
        assert_eq!(checks[4].status, Status::Skip);
    }
}
