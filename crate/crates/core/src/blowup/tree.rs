//! Full principalization of `(f, g)` above one base point.

use std::collections::BTreeSet;
use std::fmt;

use super::dicritical::{detect_dicritical, ResidualMap};
use super::state::{blow_up, blow_up_any, translate_to_origin, DivisorId, ExceptionalDivisor, PairState};
use crate::algebra::{coprime, univariate_roots, Elem, Field, MultiPoly, UniPoly};
use crate::error::{Error, Result};

/// A point of a freshly created exceptional curve: `t = v/u` in chart A, or
/// the chart-B origin.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Position {
    Finite(Elem),
    Infinity,
}

impl Position {
    pub fn format(&self, k: &Field) -> String {
        match self {
            Position::Finite(t) => k.format(t),
            Position::Infinity => "inf".to_string(),
        }
    }
}

/// Restriction of a chart-A polynomial to the exceptional curve `u = 0`.
fn restrict_to_exceptional(p: &MultiPoly) -> UniPoly {
    let k = p.field().clone();
    p.specialize(0, &k.zero()).to_uni(1).expect("only v remains").with_var("t")
}

/// Base points on the exceptional curve just created: common zeros of the two
/// weak transforms, chart A owning every finite parameter.
pub fn next_base_points(a: &PairState, b: &PairState) -> Result<Vec<Position>> {
    let rf = restrict_to_exceptional(&a.f_weak);
    let rg = restrict_to_exceptional(&a.g_weak);
    let common = rf.gcd(&rg);
    let mut out = vec![];
    if !common.is_constant() {
        let report = univariate_roots(&common)?;
        if let Some(d) = report.extension_degree {
            return Err(Error::NonRationalPoint { field: common.field().to_string(), degree: d });
        }
        out.extend(report.roots.into_iter().map(|(r, _)| Position::Finite(r)));
    }
    if b.is_base_point() {
        out.push(Position::Infinity);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResolutionNode {
    pub id: usize,
    pub parent: Option<usize>,
    /// Position on the parent's divisor; `None` at the root.
    pub position: Option<Position>,
    pub depth: usize,
    /// State at the center, translated to the origin, before blowing up.
    pub state: PairState,
    pub m_f: u32,
    pub m_g: u32,
    pub s_f: u32,
    pub s_g: u32,
    pub divisor: DivisorId,
    pub dicritical: Option<ResidualMap>,
    pub children: Vec<usize>,
    /// Blown up although it is not a base point.
    pub forced: bool,
}

/// All blowups above one base point, nodes in depth-first creation order. The
/// divisor created at node `i` has id `i`.
#[derive(Clone, Debug, PartialEq)]
pub struct ResolutionTree {
    pub label: String,
    pub field: Field,
    pub nodes: Vec<ResolutionNode>,
    pub divisors: Vec<ExceptionalDivisor>,
}

/// Extra blowup at a non-base point: `path` locates the node whose divisor
/// carries the point (positions from the root), `at` the point on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtraBlowup {
    pub path: Vec<Position>,
    pub at: Position,
}

#[derive(Clone, Debug)]
pub struct ResolveOptions {
    pub cap: usize,
    pub extra: Vec<ExtraBlowup>,
    pub label: String,
}

impl Default for ResolveOptions {
    fn default() -> Self {
        ResolveOptions { cap: 64, extra: vec![], label: "origin".into() }
    }
}

/// Resolves the pencil `(f, g)` at the origin of the affine plane.
pub fn resolve_local(f: &MultiPoly, g: &MultiPoly, field: &Field, cap: usize) -> Result<ResolutionTree> {
    resolve_with(f, g, field, &ResolveOptions { cap, ..Default::default() })
}

pub fn resolve_with(f: &MultiPoly, g: &MultiPoly, field: &Field, opts: &ResolveOptions) -> Result<ResolutionTree> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.field() != field || g.field() != field {
        return Err(Error::Mismatch(format!("generators are not over {field}")));
    }
    if !f.vanishes_at_origin() || !g.vanishes_at_origin() {
        return Err(Error::NotABasePoint);
    }
    if !coprime(f, g)? {
        return Err(Error::NotCoprime(crate::algebra::gcd_poly(f, g)?.to_string()));
    }
    let mut k = field.clone();
    loop {
        let f_k = f.change_field(&k)?;
        let g_k = g.change_field(&k)?;
        match Builder::new(&k, opts).run(&f_k, &g_k) {
            // coefficients outside the prime field would need a true embedding;
            // the caller restarts from prime-field data instead
            Err(Error::NonRationalPoint { degree, .. }) if k.is_finite() && over_prime(f) && over_prime(g) => {
                k = Field::finite(k.characteristic(), k.degree() * degree)?;
            }
            other => return other,
        }
    }
}

fn over_prime(p: &MultiPoly) -> bool {
    p.terms().all(|(_, c)| p.field().is_in_prime_field(c))
}

struct Builder<'a> {
    field: Field,
    opts: &'a ResolveOptions,
    nodes: Vec<ResolutionNode>,
    divisors: Vec<ExceptionalDivisor>,
}

impl<'a> Builder<'a> {
    fn new(field: &Field, opts: &'a ResolveOptions) -> Self {
        Builder { field: field.clone(), opts, nodes: vec![], divisors: vec![] }
    }

    fn run(mut self, f: &MultiPoly, g: &MultiPoly) -> Result<ResolutionTree> {
        let root = PairState::at_root(f, g);
        self.visit(root, None, None, vec![], false)?;
        Ok(ResolutionTree {
            label: self.opts.label.clone(),
            field: self.field,
            nodes: self.nodes,
            divisors: self.divisors,
        })
    }

    fn visit(
        &mut self,
        state: PairState,
        parent: Option<usize>,
        position: Option<Position>,
        path: Vec<Position>,
        forced: bool,
    ) -> Result<()> {
        let depth = path.len();
        if depth >= self.opts.cap {
            return Err(Error::CapExceeded(self.opts.cap));
        }
        debug_assert!(coprime(&state.f_weak, &state.g_weak).unwrap_or(false));
        let id = self.nodes.len();
        let (a, b, divisor) = if forced { blow_up_any(&state, id, id) } else { blow_up(&state, id, id)? };
        let dicritical = detect_dicritical(&state);
        self.nodes.push(ResolutionNode {
            id,
            parent,
            position,
            depth,
            m_f: state.m_f(),
            m_g: state.m_g(),
            s_f: state.s_f(),
            s_g: state.s_g(),
            state,
            divisor: id,
            dicritical,
            children: vec![],
            forced,
        });
        self.divisors.push(divisor);
        if let Some(p) = parent {
            self.nodes[p].children.push(id);
        }

        let base: BTreeSet<Position> = next_base_points(&a, &b)?.into_iter().collect();
        let extra: BTreeSet<Position> = self
            .opts
            .extra
            .iter()
            .filter(|e| e.path == path && !base.contains(&e.at))
            .map(|e| e.at.clone())
            .collect();
        let mut all: Vec<(Position, bool)> = base.into_iter().map(|p| (p, false)).collect();
        all.extend(extra.into_iter().map(|p| (p, true)));
        all.sort();
        for (p, forced) in all {
            let child = match &p {
                Position::Finite(t) => translate_to_origin(&a, &[self.field.zero(), t.clone()]),
                Position::Infinity => b.clone(),
            };
            let mut child_path = path.clone();
            child_path.push(p.clone());
            self.visit(child, Some(id), Some(p), child_path, forced)?;
        }
        Ok(())
    }
}

impl ResolutionTree {
    pub fn dicritical_nodes(&self) -> impl Iterator<Item = &ResolutionNode> {
        self.nodes.iter().filter(|n| n.dicritical.is_some())
    }

    pub fn divisor(&self, id: DivisorId) -> &ExceptionalDivisor {
        &self.divisors[id]
    }

    /// Node ids from the root down to `id`.
    pub fn path_to(&self, id: usize) -> Vec<usize> {
        let mut out = vec![id];
        let mut cur = id;
        while let Some(p) = self.nodes[cur].parent {
            out.push(p);
            cur = p;
        }
        out.reverse();
        out
    }

    /// Positions from the root down to `id`.
    pub fn position_path(&self, id: usize) -> Vec<Position> {
        self.path_to(id).iter().filter_map(|&n| self.nodes[n].position.clone()).collect()
    }

    /// Incidences between exceptional curves on the final surface. Blowing up
    /// a point on `D1` (and `D2`) separates `D1` from `D2` and makes the new
    /// curve meet each of them.
    pub fn exceptional_edges(&self) -> BTreeSet<(DivisorId, DivisorId)> {
        let mut edges = BTreeSet::new();
        for n in &self.nodes {
            let here = n.state.divisors_here();
            if let [d1, d2] = here[..] {
                edges.remove(&(d1.min(d2), d1.max(d2)));
            }
            for d in here {
                edges.insert((d.min(n.divisor), d.max(n.divisor)));
            }
        }
        edges
    }

    /// Value of the divisorial valuation of `div` on a root-chart polynomial.
    pub fn valuation_of(&self, div: DivisorId, h: &MultiPoly) -> Result<u32> {
        let node = &self.nodes[self.divisors[div].birth_node];
        let h = if h.field() == &self.field { h.clone() } else { h.change_field(&self.field)? };
        let pulled = h.with_vars(&super::state::LOCAL).substitute(&node.state.to_root);
        pulled.order_at_origin()
    }
}

impl fmt::Display for ResolutionTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "tree at {} over {}", self.label, self.field)?;
        for n in &self.nodes {
            let d = &self.divisors[n.divisor];
            write!(
                f,
                "{}E{} at {} m=({},{}) s=({},{}) v=({},{},{},{})",
                "  ".repeat(n.depth + 1),
                n.id,
                n.position.as_ref().map_or("center".to_string(), |p| p.format(&self.field)),
                n.m_f,
                n.m_g,
                n.s_f,
                n.s_g,
                d.v_x,
                d.v_y,
                d.v_f,
                d.v_g
            )?;
            if let Some(r) = &n.dicritical {
                write!(f, " dicritical phi=({})/({})", r.numerator, r.denominator)?;
            }
            if n.forced {
                write!(f, " extra")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    const XY: [&str; 2] = ["x", "y"];

    fn tree(f: &str, g: &str, k: &Field) -> Result<ResolutionTree> {
        resolve_local(&parse_poly(f, k, &XY)?, &parse_poly(g, k, &XY)?, k, 64)
    }

    fn values(t: &ResolutionTree, id: usize) -> (u32, u32, u32, u32) {
        let d = t.divisor(id);
        (d.v_x, d.v_y, d.v_f, d.v_g)
    }

    #[test]
    fn transverse_lines() {
        let q = Field::rationals();
        let t = tree("x", "y", &q).unwrap();
        assert_eq!(t.nodes.len(), 1);
        assert_eq!(values(&t, 0), (1, 1, 1, 1));
        let r = t.nodes[0].dicritical.as_ref().unwrap();
        assert_eq!(r.numerator, UniPoly::from_i64(&q, "t", &[1]));
        assert_eq!(r.denominator, UniPoly::from_i64(&q, "t", &[0, 1]));
    }

    #[test]
    fn cusp_pencil_chain() {
        let q = Field::rationals();
        let t = tree("y^2", "x^3", &q).unwrap();
        assert_eq!(t.nodes.len(), 3);
        assert_eq!(t.nodes[1].parent, Some(0));
        assert_eq!(t.nodes[2].parent, Some(1));
        let dic: Vec<_> = t.dicritical_nodes().map(|n| n.id).collect();
        assert_eq!(dic, vec![2]);
        assert_eq!(values(&t, 2), (2, 3, 6, 6));
        let y = parse_poly("y", &q, &XY).unwrap();
        assert_eq!(t.valuation_of(2, &y).unwrap(), 3);
        let noether: u32 = t.nodes.iter().map(|n| n.s_f * n.s_g).sum();
        assert_eq!(noether, 6);
    }

    #[test]
    fn double_lines() {
        let q = Field::rationals();
        let t = tree("x^2", "y^2", &q).unwrap();
        assert_eq!(t.nodes.len(), 1);
        let r = t.nodes[0].dicritical.as_ref().unwrap();
        assert_eq!(r.degree, 2);
        assert_eq!(r.denominator, UniPoly::from_i64(&q, "t", &[0, 0, 1]));
    }

    #[test]
    fn input_errors() {
        let q = Field::rationals();
        assert_eq!(tree("x + 1", "y", &q).unwrap_err(), Error::NotABasePoint);
        assert!(matches!(tree("x*y", "x*(x+y)", &q).unwrap_err(), Error::NotCoprime(_)));
        // base points at t^2 + 1 = 0 on the first divisor
        assert!(matches!(
            tree("y^2 + x^2", "x^3", &q).unwrap_err(),
            Error::NonRationalPoint { degree: 2, .. }
        ));
    }

    #[test]
    fn extension_points_enlarge_finite_fields() {
        let f3 = Field::prime(3).unwrap();
        let t = tree("y^2 + x^2", "x^3", &f3).unwrap();
        assert_eq!(t.field.degree(), 2);
        assert!(t.dicritical_nodes().count() >= 1);
    }

    #[test]
    fn non_base_points() {
        let q = Field::rationals();
        let (a, b, _) = blow_up(&PairState::at_root(&parse_poly("x", &q, &XY).unwrap(), &parse_poly("y", &q, &XY).unwrap()), 0, 0).unwrap();
        assert!(next_base_points(&a, &b).unwrap().is_empty());
        let (a, b, _) = blow_up(&PairState::at_root(&parse_poly("y^2", &q, &XY).unwrap(), &parse_poly("x^3", &q, &XY).unwrap()), 0, 0).unwrap();
        assert_eq!(next_base_points(&a, &b).unwrap(), vec![Position::Finite(q.zero())]);
    }

    #[test]
    fn chain_edges() {
        let q = Field::rationals();
        let t = tree("y^2", "x^3", &q).unwrap();
        // E0 - E2 - E1 after the last blowup separates E0 from E1
        assert_eq!(t.exceptional_edges(), BTreeSet::from([(0, 2), (1, 2)]));
    }

    #[test]
    fn long_chain_over_rationals() {
        let q = Field::rationals();
        let t = tree("x^4*y - x^5 - 2*x^2*y^2 + y^3", "y^4", &q).unwrap();
        assert_eq!(t.nodes.len(), 9);
        let d: Vec<_> = t.dicritical_nodes().map(|n| values(&t, n.id)).collect();
        assert_eq!(d, [(3, 5, 20, 20)]);
    }

    #[test]
    fn generators_outside_the_prime_field() {
        let f9 = Field::finite(3, 2).unwrap();
        let nonsquare = (0..9).map(|i| f9.element_at(i)).find(|e| f9.pow(e, 4) == f9.neg(&f9.one())).unwrap();
        let x = MultiPoly::var(&f9, &XY, 0);
        let y = MultiPoly::var(&f9, &XY, 1);
        let line = y.sub(&x.scale(&nonsquare));
        let t = resolve_local(&line, &x.pow(2), &f9, 64).unwrap();
        assert_eq!(t.field, f9);
        assert_eq!(t.nodes.len(), 2);
        // tangents y^2 = c x^2 with c not a square need F81; that restart is the caller's job
        let cone = y.pow(2).sub(&x.pow(2).scale(&nonsquare));
        let e = resolve_local(&cone, &x.pow(3), &f9, 64).unwrap_err();
        assert!(matches!(e, Error::NonRationalPoint { degree: 2, .. }), "{e:?}");
    }
}
