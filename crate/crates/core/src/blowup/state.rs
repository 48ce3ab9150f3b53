//! Local model of the pencil at an infinitely near point and the point blowup.
//!
//! Every state lives in the local ring `k[u, v]` centered at the point under
//! study. Exceptional curves through that point are coordinate axes: `u_div` is
//! the line `u = 0` and `v_div` the line `v = 0`.

use std::collections::BTreeMap;

use crate::algebra::{Elem, MultiPoly};
use crate::error::{Error, Result};

pub type DivisorId = usize;

/// Local coordinate names shared by every chart.
pub const LOCAL: [&str; 2] = ["u", "v"];

/// The two generators of the pencil near one infinitely near point.
///
/// `f_weak = strict_f · u^(exc_f[u_div] - M[u_div]) · v^(exc_f[v_div] - M[v_div])`
/// where `M[E] = min(exc_f[E], exc_g[E])` is the exponent of `E` in the common
/// exceptional monomial divided out of both generators.
#[derive(Clone, Debug, PartialEq)]
pub struct PairState {
    pub f_weak: MultiPoly,
    pub g_weak: MultiPoly,
    pub strict_f: MultiPoly,
    pub strict_g: MultiPoly,
    /// Multiplicity of the total transform of f along each exceptional curve
    /// through the current point.
    pub exc_f: BTreeMap<DivisorId, u32>,
    pub exc_g: BTreeMap<DivisorId, u32>,
    pub u_div: Option<DivisorId>,
    pub v_div: Option<DivisorId>,
    /// Root-chart coordinates expressed in the local coordinates.
    pub to_root: [MultiPoly; 2],
}

/// An exceptional curve and the values of its divisorial valuation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalDivisor {
    pub id: DivisorId,
    pub birth_node: usize,
    pub v_x: u32,
    pub v_y: u32,
    pub v_f: u32,
    pub v_g: u32,
}

impl PairState {
    /// State at the base point itself: weak and strict transforms coincide and
    /// no exceptional curve exists yet.
    pub fn at_root(f: &MultiPoly, g: &MultiPoly) -> PairState {
        let f = f.with_vars(&LOCAL);
        let g = g.with_vars(&LOCAL);
        let field = f.field().clone();
        PairState {
            to_root: [
                MultiPoly::var(&field, &LOCAL, 0),
                MultiPoly::var(&field, &LOCAL, 1),
            ],
            f_weak: f.clone(),
            g_weak: g.clone(),
            strict_f: f,
            strict_g: g,
            exc_f: BTreeMap::new(),
            exc_g: BTreeMap::new(),
            u_div: None,
            v_div: None,
        }
    }

    pub fn m_f(&self) -> u32 {
        self.f_weak.order_at_origin().expect("weak transforms are nonzero")
    }

    pub fn m_g(&self) -> u32 {
        self.g_weak.order_at_origin().expect("weak transforms are nonzero")
    }

    pub fn s_f(&self) -> u32 {
        self.strict_f.order_at_origin().expect("strict transforms are nonzero")
    }

    pub fn s_g(&self) -> u32 {
        self.strict_g.order_at_origin().expect("strict transforms are nonzero")
    }

    /// Both weak transforms vanish at the origin.
    pub fn is_base_point(&self) -> bool {
        self.f_weak.vanishes_at_origin() && self.g_weak.vanishes_at_origin()
    }

    /// Exceptional curves through the current point.
    pub fn divisors_here(&self) -> Vec<DivisorId> {
        self.u_div.into_iter().chain(self.v_div).collect()
    }

    /// Exponent of `E` in the common exceptional monomial.
    pub fn common_exponent(&self, e: DivisorId) -> u32 {
        self.exc_f[&e].min(self.exc_g[&e])
    }
}

/// Moves `point` to the origin. Exceptional axes survive only when the point
/// lies on them.
pub fn translate_to_origin(state: &PairState, point: &[Elem; 2]) -> PairState {
    let k = state.f_weak.field();
    let keep_u = k.is_zero(&point[0]);
    let keep_v = k.is_zero(&point[1]);
    let u_div = state.u_div.filter(|_| keep_u);
    let v_div = state.v_div.filter(|_| keep_v);
    let keep = |m: &BTreeMap<DivisorId, u32>| -> BTreeMap<DivisorId, u32> {
        m.iter()
            .filter(|(d, _)| Some(**d) == u_div || Some(**d) == v_div)
            .map(|(d, e)| (*d, *e))
            .collect()
    };
    PairState {
        f_weak: state.f_weak.translate(point),
        g_weak: state.g_weak.translate(point),
        strict_f: state.strict_f.translate(point),
        strict_g: state.strict_g.translate(point),
        exc_f: keep(&state.exc_f),
        exc_g: keep(&state.exc_g),
        u_div,
        v_div,
        to_root: [state.to_root[0].translate(point), state.to_root[1].translate(point)],
    }
}

/// Which affine chart of the blowup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChartKind {
    /// `(u, v) -> (u, u·v)`; the exceptional curve is `u = 0`.
    A,
    /// `(u, v) -> (u·v, v)`; the exceptional curve is `v = 0`.
    B,
}

/// Pullback of `p` to a chart, divided by the `k`-th power of the exceptional equation.
pub fn pull_back(p: &MultiPoly, chart: ChartKind, k: u32) -> MultiPoly {
    let u = p.var_like(0);
    let v = p.var_like(1);
    let uv = u.mul(&v);
    match chart {
        ChartKind::A => p.substitute(&[u, uv]).divide_by_var_power(0, k),
        ChartKind::B => p.substitute(&[uv, v]).divide_by_var_power(1, k),
    }
}

/// Pullback divided by the full exceptional power: the strict transform.
pub fn strict_pull_back(p: &MultiPoly, chart: ChartKind) -> MultiPoly {
    let s = p.order_at_origin().expect("nonzero");
    pull_back(p, chart, s)
}

fn chart_state(state: &PairState, chart: ChartKind, c: u32, new: DivisorId, v_f: u32, v_g: u32) -> PairState {
    let (u_div, v_div) = match chart {
        ChartKind::A => (Some(new), state.v_div),
        ChartKind::B => (state.u_div, Some(new)),
    };
    let old = match chart {
        ChartKind::A => state.v_div,
        ChartKind::B => state.u_div,
    };
    let mut exc_f = BTreeMap::from([(new, v_f)]);
    let mut exc_g = BTreeMap::from([(new, v_g)]);
    if let Some(d) = old {
        exc_f.insert(d, state.exc_f[&d]);
        exc_g.insert(d, state.exc_g[&d]);
    }
    let to_root = [pull_back(&state.to_root[0], chart, 0), pull_back(&state.to_root[1], chart, 0)];
    PairState {
        f_weak: pull_back(&state.f_weak, chart, c),
        g_weak: pull_back(&state.g_weak, chart, c),
        strict_f: strict_pull_back(&state.strict_f, chart),
        strict_g: strict_pull_back(&state.strict_g, chart),
        exc_f,
        exc_g,
        u_div,
        v_div,
        to_root,
    }
}

/// Blows up the origin. Returns the two chart states and the new divisor, whose
/// id is `new_id` and whose birth node is `birth_node`.
pub fn blow_up(state: &PairState, new_id: DivisorId, birth_node: usize) -> Result<(PairState, PairState, ExceptionalDivisor)> {
    if !state.is_base_point() {
        return Err(Error::NotABasePoint);
    }
    Ok(blow_up_any(state, new_id, birth_node))
}

/// Blowup without the base-point precondition; used to insert extra blowups at
/// ordinary points.
pub fn blow_up_any(state: &PairState, new_id: DivisorId, birth_node: usize) -> (PairState, PairState, ExceptionalDivisor) {
    let m_f = state.m_f();
    let m_g = state.m_g();
    let c = m_f.min(m_g);
    let common: u32 = state.divisors_here().iter().map(|&d| state.common_exponent(d)).sum();
    let v_f = m_f + common;
    let v_g = m_g + common;
    let divisor = ExceptionalDivisor {
        id: new_id,
        birth_node,
        v_x: state.to_root[0].order_at_origin().expect("coordinate pullback is nonzero"),
        v_y: state.to_root[1].order_at_origin().expect("coordinate pullback is nonzero"),
        v_f,
        v_g,
    };
    let a = chart_state(state, ChartKind::A, c, new_id, v_f, v_g);
    let b = chart_state(state, ChartKind::B, c, new_id, v_f, v_g);
    (a, b, divisor)
}
