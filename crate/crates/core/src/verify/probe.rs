//! Resolution invariance: extra blowups at ordinary points of exceptional
//! curves must leave the dicritical divisors unchanged.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::MultiPoly;
use crate::blowup::{ExtraBlowup, Position, ResolutionTree};
use crate::error::Result;
use crate::pencil::{analyze, analyze_with, DicriticalRecord, Pencil, PencilReport};

/// Finite invariants identifying a dicritical divisor across resolutions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ValuationFingerprint {
    pub v_x: u32,
    pub v_y: u32,
    pub v_f: u32,
    pub v_g: u32,
    pub degree: usize,
    pub poles: usize,
}

impl From<&DicriticalRecord> for ValuationFingerprint {
    fn from(d: &DicriticalRecord) -> Self {
        ValuationFingerprint { v_x: d.v_x, v_y: d.v_y, v_f: d.v_f, v_g: d.v_g, degree: d.degree, poles: d.poles }
    }
}

/// Sorted fingerprints of all dicriticals of a report.
pub fn fingerprints(r: &PencilReport) -> Vec<ValuationFingerprint> {
    let mut v: Vec<_> = r.dicriticals.iter().map(ValuationFingerprint::from).collect();
    v.sort();
    v
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeRound {
    pub extra_blowups: usize,
    pub fingerprints_equal: bool,
    pub values_preserved: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeVerdict {
    pub baseline: Vec<ValuationFingerprint>,
    pub rounds: Vec<ProbeRound>,
}

impl ProbeVerdict {
    pub fn equal(&self) -> bool {
        self.rounds.iter().all(|r| r.fingerprints_equal && r.values_preserved)
    }
}

/// Random points of exceptional curves that are not centers of later blowups.
fn pick_extra(tree: &ResolutionTree, rng: &mut ChaCha8Rng) -> Vec<ExtraBlowup> {
    let k = &tree.field;
    let want = 1 + rng.gen_range(0..2usize);
    let mut out: Vec<ExtraBlowup> = vec![];
    for _ in 0..want {
        let node = &tree.nodes[rng.gen_range(0..tree.nodes.len())];
        let taken: Vec<&Position> = node.children.iter().filter_map(|&c| tree.nodes[c].position.as_ref()).collect();
        for _ in 0..8 {
            let at = if rng.gen_range(0..6) == 0 {
                Position::Infinity
            } else if k.is_finite() {
                Position::Finite(k.random(rng))
            } else {
                Position::Finite(k.from_i64(rng.gen_range(-9..=9)))
            };
            let path = tree.position_path(node.id);
            let extra = ExtraBlowup { path, at };
            if !taken.contains(&&extra.at) && !out.contains(&extra) {
                out.push(extra);
                break;
            }
        }
    }
    out
}

/// The local generators and root coordinates of base point `i`.
fn local_tests(r: &PencilReport, i: usize) -> Vec<MultiPoly> {
    let b = &r.base_points[i];
    let u = b.f_local.var_like(0);
    let v = b.f_local.var_like(1);
    vec![u, v, b.f_local.clone(), b.g_local.clone()]
}

fn values_preserved(base: &PencilReport, other: &PencilReport) -> Result<bool> {
    for d in &base.dicriticals {
        let t0 = &base.trees[d.base_point];
        let t1 = &other.trees[d.base_point];
        let path = t0.position_path(*d.center_path.last().unwrap());
        let Some(n1) = t1.nodes.iter().find(|n| t1.position_path(n.id) == path) else {
            return Ok(false);
        };
        let e1 = t1.divisor(n1.divisor);
        let expected = [d.v_x, d.v_y, d.v_f, d.v_g];
        if [e1.v_x, e1.v_y, e1.v_f, e1.v_g] != expected {
            return Ok(false);
        }
        for (h, want) in local_tests(base, d.base_point).iter().zip(expected) {
            if t1.valuation_of(n1.divisor, h)? != want {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Re-runs the analysis `rounds` times with seeded extra blowups and compares
/// dicritical fingerprints against the plain resolution.
pub fn invariance_probe(pencil: &Pencil, seed: u64, rounds: usize) -> Result<ProbeVerdict> {
    let base = analyze(pencil, 64)?;
    let baseline = fingerprints(&base);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![];
    for _ in 0..rounds {
        let extras: Vec<Vec<ExtraBlowup>> = base.trees.iter().map(|t| pick_extra(t, &mut rng)).collect();
        let count = extras.iter().map(Vec::len).sum();
        let other = analyze_with(&base.pencil, 64, |i| extras[i].clone())?;
        out.push(ProbeRound {
            extra_blowups: count,
            fingerprints_equal: fingerprints(&other) == baseline,
            values_preserved: values_preserved(&base, &other)?,
        });
    }
    Ok(ProbeVerdict { baseline, rounds: out })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::pencil::parse_pencil;

    #[test]
    fn probe_examples() {
        let q = Field::rationals();
        let v = invariance_probe(&parse_pencil("x", "y", &q).unwrap(), 1, 3).unwrap();
        assert!(v.equal());
        assert_eq!(v.baseline[0], ValuationFingerprint { v_x: 1, v_y: 1, v_f: 1, v_g: 1, degree: 1, poles: 1 });
        assert!(v.rounds.iter().all(|r| r.extra_blowups >= 1));

        let v = invariance_probe(&parse_pencil("y^2", "x^3", &q).unwrap(), 2, 3).unwrap();
        assert!(v.equal());
        assert!(v.baseline.iter().any(|f| (f.v_x, f.v_y, f.v_f, f.v_g) == (2, 3, 6, 6)));

        let v = invariance_probe(&parse_pencil("x", "y", &q).unwrap(), 1, 0).unwrap();
        assert!(v.equal() && v.rounds.is_empty());
    }

    #[test]
    fn extra_blowups_appear_in_the_tree() {
        let q = Field::rationals();
        let p = parse_pencil("x", "y", &q).unwrap();
        let extra = ExtraBlowup { path: vec![], at: Position::Finite(q.from_i64(5)) };
        let r = analyze_with(&p, 64, |_| vec![extra.clone()]).unwrap();
        assert_eq!(r.trees[0].nodes.len(), 2);
        assert!(r.trees[0].nodes[1].forced);
        assert_eq!(r.dicriticals.len(), 1);
    }
}
