//! Global analysis of a pencil over the projective plane.

pub mod al;
pub mod graph;
pub mod points;
pub mod report;

pub use al::{check_abhyankar_luengo, AlReport, DicriticalPoles};
pub use graph::{dual_graph, fiber_over_o, DualGraph, FiberGraph, GraphNode};
pub use points::{base_points, make_pencil, BasePoint, Chart, Pencil, XY};
pub use report::{report_json, REPORT_SCHEMA};

use crate::algebra::{parse_poly, Field};
use crate::blowup::{resolve_with, ResidualMap, ResolutionTree, ResolveOptions};
use crate::error::{Error, Result};

/// A dicritical divisor above one base point.
#[derive(Clone, Debug, PartialEq)]
pub struct DicriticalRecord {
    /// Index into the report's base points.
    pub base_point: usize,
    pub divisor: usize,
    pub v_x: u32,
    pub v_y: u32,
    pub v_f: u32,
    pub v_g: u32,
    pub residual: ResidualMap,
    pub degree: usize,
    pub poles: usize,
    /// Node ids from the tree root to the birth node.
    pub center_path: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PencilReport {
    pub pencil: Pencil,
    pub base_points: Vec<BasePoint>,
    pub trees: Vec<ResolutionTree>,
    pub dicriticals: Vec<DicriticalRecord>,
}

impl PencilReport {
    pub fn field(&self) -> &Field {
        self.pencil.field()
    }

    pub fn dicriticals_at(&self, bp: usize) -> impl Iterator<Item = &DicriticalRecord> {
        self.dicriticals.iter().filter(move |d| d.base_point == bp)
    }
}

/// Pencil from two polynomial strings in `x, y`.
pub fn parse_pencil(f: &str, g: &str, field: &Field) -> Result<Pencil> {
    make_pencil(&parse_poly(f, field, &XY)?, &parse_poly(g, field, &XY)?)
}

pub fn analyze(pencil: &Pencil, cap: usize) -> Result<PencilReport> {
    analyze_with(pencil, cap, |_| vec![])
}

/// Runs the analysis; `extra` supplies additional blowups per base point index.
/// Over a finite field the whole analysis restarts over an extension whenever
/// a base point or infinitely near point needs one.
pub fn analyze_with(
    pencil: &Pencil,
    cap: usize,
    extra: impl Fn(usize) -> Vec<crate::blowup::ExtraBlowup>,
) -> Result<PencilReport> {
    let mut p = pencil.clone();
    loop {
        match analyze_over(&p, cap, &extra) {
            Err(Error::NonRationalPoint { degree, .. }) if p.field().is_finite() => {
                let k = p.field();
                p = pencil.over(&Field::finite(k.characteristic(), k.degree() * degree)?)?;
            }
            Ok(Err(bigger)) => p = pencil.over(&bigger)?,
            Ok(Ok(r)) => return Ok(r),
            Err(e) => return Err(e),
        }
    }
}

/// `Ok(Err(k))` asks for a restart over `k`.
fn analyze_over(
    pencil: &Pencil,
    cap: usize,
    extra: &impl Fn(usize) -> Vec<crate::blowup::ExtraBlowup>,
) -> Result<std::result::Result<PencilReport, Field>> {
    let k = pencil.field().clone();
    let pts = base_points(pencil)?;
    let mut trees = vec![];
    let mut dicriticals = vec![];
    for (i, bp) in pts.iter().enumerate() {
        let opts = ResolveOptions { cap, extra: extra(i), label: bp.label(&k) };
        let tree = resolve_with(&bp.f_local, &bp.g_local, &k, &opts)?;
        if tree.field != k {
            return Ok(Err(tree.field));
        }
        for n in tree.dicritical_nodes() {
            let d = tree.divisor(n.divisor);
            let r = n.dicritical.clone().unwrap();
            dicriticals.push(DicriticalRecord {
                base_point: i,
                divisor: d.id,
                v_x: d.v_x,
                v_y: d.v_y,
                v_f: d.v_f,
                v_g: d.v_g,
                degree: r.degree,
                poles: r.pole_count(),
                residual: r,
                center_path: tree.path_to(n.id),
            });
        }
        trees.push(tree);
    }
    Ok(Ok(PencilReport { pencil: pencil.clone(), base_points: pts, trees, dicriticals }))
}
