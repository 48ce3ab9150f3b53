//! Dual graph of the resolved surface and the fiber of the pencil map over `O`.
//!
//! Curve nodes are the coordinate lines contained in `{F = 0}` or `{G = 0}`
//! plus one node for the rest of the reduced curve. Any two plane curves
//! meet, so merging components this way never changes which exceptional
//! curves a component node touches nor whether a subgraph is connected.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use super::PencilReport;
use crate::algebra::{dehomogenize, squarefree_part, MultiPoly, UniPoly};
use crate::blowup::state::{strict_pull_back, ChartKind};
use crate::blowup::{DivisorId, Position, ResolutionTree, LOCAL};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Side {
    F,
    G,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphNode {
    Exceptional { tree: usize, divisor: DivisorId, dicritical: bool, v_f: u32, v_g: u32 },
    Curve { side: Side, equation: String },
}

impl GraphNode {
    pub fn name(&self) -> String {
        match self {
            GraphNode::Exceptional { tree, divisor, .. } => format!("E{tree}_{divisor}"),
            GraphNode::Curve { side, equation } => format!("{side:?}:{equation}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGraph {
    pub nodes: Vec<GraphNode>,
    /// Pairs `(i, j)` with `i < j`.
    pub edges: BTreeSet<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberGraph {
    pub graph: DualGraph,
    pub connected: bool,
}

/// Coordinate lines dividing the reduced form, then the remaining factor.
pub fn curve_components(h: &MultiPoly) -> Result<Vec<MultiPoly>> {
    let mut rest = squarefree_part(h)?;
    let mut out = vec![];
    for i in 0..3 {
        let line = rest.var_like(i);
        if let Some(q) = rest.div_exact(&line) {
            out.push(line);
            rest = q;
        }
    }
    if !rest.is_constant() {
        out.push(rest);
    }
    Ok(out)
}

impl DualGraph {
    fn add_edge(&mut self, a: usize, b: usize) {
        if a != b {
            self.edges.insert((a.min(b), a.max(b)));
        }
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(move |&(a, b)| {
            if a == i {
                Some(b)
            } else if b == i {
                Some(a)
            } else {
                None
            }
        })
    }

    /// Whether the subgraph induced on `keep` is connected (empty counts as connected).
    pub fn is_connected_on(&self, keep: &BTreeSet<usize>) -> bool {
        let Some(&start) = keep.iter().next() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in self.neighbors(i) {
                if keep.contains(&j) && seen.insert(j) {
                    stack.push(j);
                }
            }
        }
        seen.len() == keep.len()
    }

    pub fn induced(&self, keep: &BTreeSet<usize>) -> DualGraph {
        let index: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(n, &o)| (o, n)).collect();
        DualGraph {
            nodes: keep.iter().map(|&i| self.nodes[i].clone()).collect(),
            edges: self
                .edges
                .iter()
                .filter_map(|(a, b)| Some((*index.get(a)?, *index.get(b)?)))
                .collect(),
        }
    }

    /// DOT rendering: dicritical curves double-circled, exceptional curves
    /// circled, strict transforms boxed.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("graph {name} {{\n");
        for (i, n) in self.nodes.iter().enumerate() {
            let (shape, label) = match n {
                GraphNode::Exceptional { dicritical, v_f, v_g, .. } => (
                    if *dicritical { "doublecircle" } else { "circle" },
                    format!("{}\\nv_f={v_f} v_g={v_g}", n.name()),
                ),
                GraphNode::Curve { .. } => ("box", n.name()),
            };
            writeln!(s, "  n{i} [shape={shape}, label=\"{label}\"];").unwrap();
        }
        for (a, b) in &self.edges {
            writeln!(s, "  n{a} -- n{b};").unwrap();
        }
        s.push_str("}\n");
        s
    }
}

/// Divisors met by the strict transform of the local curve `c` (through the
/// center of `node`).
fn trace(tree: &ResolutionTree, node: usize, c: &MultiPoly, out: &mut BTreeSet<DivisorId>) {
    let n = &tree.nodes[node];
    let k = &tree.field;
    let in_a = strict_pull_back(c, ChartKind::A);
    let in_b = strict_pull_back(c, ChartKind::B);
    let mut rest: UniPoly = in_a.specialize(0, &k.zero()).to_uni(1).expect("only v remains");
    let mut finite_children = BTreeMap::new();
    let mut infinity_child = None;
    for &ch in &n.children {
        match tree.nodes[ch].position.as_ref().expect("children have positions") {
            Position::Finite(t) => {
                finite_children.insert(t.clone(), ch);
            }
            Position::Infinity => infinity_child = Some(ch),
        }
    }
    for t in finite_children.keys() {
        let m = rest.root_multiplicity(t);
        rest = rest.div_exact(&UniPoly::linear_root(k, rest.var(), t).pow(m as u64)).unwrap();
    }
    if !rest.is_constant() {
        out.insert(n.divisor);
        if k.is_zero(&rest.eval(&k.zero())) {
            out.extend(n.state.v_div);
        }
    }
    if in_b.vanishes_at_origin() {
        match infinity_child {
            Some(ch) => trace(tree, ch, &in_b, out),
            None => {
                out.insert(n.divisor);
                out.extend(n.state.u_div);
            }
        }
    }
    for (t, &ch) in &finite_children {
        let moved = in_a.translate(&[k.zero(), t.clone()]);
        if moved.vanishes_at_origin() {
            trace(tree, ch, &moved, out);
        }
    }
}

/// Exceptional curves of `tree` met by the strict transform of the local curve `c`.
pub fn divisors_met(tree: &ResolutionTree, c: &MultiPoly) -> BTreeSet<DivisorId> {
    let mut out = BTreeSet::new();
    let c = c.with_vars(&LOCAL);
    if c.vanishes_at_origin() {
        trace(tree, 0, &c, &mut out);
    }
    out
}

fn local_equation(report: &PencilReport, bp: usize, comp: &MultiPoly) -> MultiPoly {
    let b = &report.base_points[bp];
    let chart = b.chart;
    dehomogenize(comp, chart.index(), chart.coordinates()).translate(&b.affine(report.field()))
}

pub fn dual_graph(report: &PencilReport) -> Result<DualGraph> {
    let mut g = DualGraph { nodes: vec![], edges: BTreeSet::new() };
    let mut exc_index = BTreeMap::new();
    for (ti, tree) in report.trees.iter().enumerate() {
        for n in &tree.nodes {
            let d = tree.divisor(n.divisor);
            exc_index.insert((ti, n.divisor), g.nodes.len());
            g.nodes.push(GraphNode::Exceptional {
                tree: ti,
                divisor: n.divisor,
                dicritical: n.dicritical.is_some(),
                v_f: d.v_f,
                v_g: d.v_g,
            });
        }
        for (a, b) in tree.exceptional_edges() {
            g.add_edge(exc_index[&(ti, a)], exc_index[&(ti, b)]);
        }
    }
    let p = &report.pencil;
    for (side, form) in [(Side::F, &p.big_f), (Side::G, &p.big_g)] {
        if form.is_constant() {
            continue;
        }
        for comp in curve_components(form)? {
            let id = g.nodes.len();
            g.nodes.push(GraphNode::Curve { side, equation: comp.to_string() });
            for (ti, tree) in report.trees.iter().enumerate() {
                let local = local_equation(report, ti, &comp);
                for d in divisors_met(tree, &local) {
                    g.add_edge(id, exc_index[&(ti, d)]);
                }
            }
        }
    }
    Ok(g)
}

/// Components over `O`, the value of `F/G` along `{G = 0}`: components of
/// `{G = 0}` and exceptional curves with `v_f < v_g`. Components of `{G = 0}`
/// are joined pairwise since plane curves always meet.
pub fn fiber_over_o(report: &PencilReport) -> Result<FiberGraph> {
    let mut dual = dual_graph(report)?;
    let keep: BTreeSet<usize> = dual
        .nodes
        .iter()
        .enumerate()
        .filter(|(_, n)| match n {
            GraphNode::Exceptional { v_f, v_g, .. } => v_f < v_g,
            GraphNode::Curve { side, .. } => *side == Side::G,
        })
        .map(|(i, _)| i)
        .collect();
    let curves: Vec<usize> = keep
        .iter()
        .copied()
        .filter(|&i| matches!(dual.nodes[i], GraphNode::Curve { .. }))
        .collect();
    for (n, &a) in curves.iter().enumerate() {
        for &b in &curves[n + 1..] {
            dual.add_edge(a, b);
        }
    }
    let connected = dual.is_connected_on(&keep);
    Ok(FiberGraph { graph: dual.induced(&keep), connected })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, Field, XYZ};
    use crate::pencil::{analyze, parse_pencil};

    fn report(f: &str, g: &str) -> PencilReport {
        analyze(&parse_pencil(f, g, &Field::rationals()).unwrap(), 64).unwrap()
    }

    #[test]
    fn components_split_coordinate_lines() {
        let q = Field::rationals();
        let h = parse_poly("Y*Z^2*(X^2 + Y*Z)", &q, &XYZ).unwrap();
        let c = curve_components(&h).unwrap();
        assert_eq!(c.len(), 3);
    }

    #[test]
    fn cusp_tree_is_a_chain_and_curves_attach() {
        let r = report("y^2", "x^3");
        let g = dual_graph(&r).unwrap();
        // exceptional part of the first tree: E0 - E2 - E1
        assert!(g.edges.contains(&(0, 2)) && g.edges.contains(&(1, 2)));
        // the line {Y = 0} through (0:0:1) reaches the resolution
        let y_node = g.nodes.iter().position(|n| n.name() == "F:Y").unwrap();
        assert!(g.neighbors(y_node).count() >= 1);
    }

    #[test]
    fn fibers_over_o() {
        let r = report("y - x^2", "1");
        let fiber = fiber_over_o(&r).unwrap();
        assert!(fiber.connected);
        assert_eq!(fiber.graph.nodes.iter().filter(|n| matches!(n, GraphNode::Curve { .. })).count(), 1);
        assert!(fiber_over_o(&report("x", "y")).unwrap().connected);
    }

    #[test]
    fn strict_transform_tracing() {
        let q = Field::rationals();
        let r = report("x", "y");
        let t = &r.trees[0];
        let line = |s: &str| parse_poly(s, &q, &LOCAL).unwrap();
        assert_eq!(divisors_met(t, &line("u")), BTreeSet::from([0]));
        assert_eq!(divisors_met(t, &line("u + 1")), BTreeSet::new());
    }

    #[test]
    fn dot_output_is_stable() {
        let r = report("x^2", "y^2");
        let g = dual_graph(&r).unwrap();
        let dot = g.to_dot("dual");
        assert!(dot.starts_with("graph dual {"));
        assert!(dot.contains("doublecircle"));
        assert_eq!(dot, dual_graph(&r).unwrap().to_dot("dual"));
    }
}
