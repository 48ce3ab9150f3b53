//! Pencils `λF + μG` on the projective plane and their base points.

use std::fmt;

use crate::algebra::{
    coprime, dehomogenize, gcd_poly, homogenize, resultant, univariate_roots, Elem, Field, MultiPoly, UniPoly,
};
use crate::error::{Error, Result};

pub const XY: [&str; 2] = ["x", "y"];

#[derive(Clone, Debug, PartialEq)]
pub struct Pencil {
    pub f: MultiPoly,
    pub g: MultiPoly,
    pub big_f: MultiPoly,
    pub big_g: MultiPoly,
    pub degree: u32,
}

impl Pencil {
    pub fn field(&self) -> &Field {
        self.f.field()
    }

    /// The same pencil over a larger field of the same characteristic.
    pub fn over(&self, k: &Field) -> Result<Pencil> {
        make_pencil(&self.f.change_field(k)?, &self.g.change_field(k)?)
    }
}

/// Homogenizes `f, g` to their common degree and checks coprimality.
pub fn make_pencil(f: &MultiPoly, g: &MultiPoly) -> Result<Pencil> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.nvars() != 2 || g.nvars() != 2 || !f.same_ring(g) {
        return Err(Error::Mismatch("a pencil needs two polynomials in the same two variables".into()));
    }
    if f.is_constant() && g.is_constant() {
        return Err(Error::BothConstant);
    }
    if !coprime(f, g)? {
        return Err(Error::NotCoprime(gcd_poly(f, g)?.to_string()));
    }
    let degree = f.total_degree().max(g.total_degree());
    Ok(Pencil {
        big_f: homogenize(f, degree)?,
        big_g: homogenize(g, degree)?,
        f: f.clone(),
        g: g.clone(),
        degree,
    })
}

/// Affine chart of the plane: the coordinate set to one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Chart {
    X,
    Y,
    Z,
}

impl Chart {
    pub fn index(self) -> usize {
        match self {
            Chart::X => 0,
            Chart::Y => 1,
            Chart::Z => 2,
        }
    }

    /// Names of the two affine coordinates of the chart, in `X, Y, Z` order.
    pub fn coordinates(self) -> [&'static str; 2] {
        match self {
            Chart::X => ["y", "z"],
            Chart::Y => ["x", "z"],
            Chart::Z => ["x", "y"],
        }
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Chart::X => "X",
            Chart::Y => "Y",
            Chart::Z => "Z",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BasePoint {
    /// Homogeneous coordinates, first nonzero entry equal to one.
    pub coords: [Elem; 3],
    pub chart: Chart,
    /// Local generators in the chart coordinates, translated to the origin.
    pub f_local: MultiPoly,
    pub g_local: MultiPoly,
}

impl BasePoint {
    pub fn label(&self, k: &Field) -> String {
        let c: Vec<String> = self.coords.iter().map(|a| k.format(a)).collect();
        format!("({}:{}:{})", c[0], c[1], c[2])
    }

    /// Affine coordinates of the point in its chart.
    pub fn affine(&self, k: &Field) -> [Elem; 2] {
        affine_in(&self.coords, self.chart, k)
    }
}

fn affine_in(p: &[Elem; 3], chart: Chart, k: &Field) -> [Elem; 2] {
    let i = chart.index();
    let inv = k.inv(&p[i]).expect("chart coordinate is nonzero");
    let rest: Vec<Elem> = (0..3).filter(|&j| j != i).map(|j| k.mul(&p[j], &inv)).collect();
    [rest[0].clone(), rest[1].clone()]
}

fn normalize(p: [Elem; 3], k: &Field) -> [Elem; 3] {
    let lead = p.iter().find(|a| !k.is_zero(a)).expect("not all coordinates vanish").clone();
    let inv = k.inv(&lead).unwrap();
    p.map(|a| k.mul(&a, &inv))
}

/// The chart owning a point: `Z` when possible, then `Y`, then `X`.
pub fn owning_chart(p: &[Elem; 3], k: &Field) -> Chart {
    if !k.is_zero(&p[2]) {
        Chart::Z
    } else if !k.is_zero(&p[1]) {
        Chart::Y
    } else {
        Chart::X
    }
}

/// The pencil's generators dehomogenized in `chart`.
pub fn chart_pair(pencil: &Pencil, chart: Chart) -> (MultiPoly, MultiPoly) {
    let names = chart.coordinates();
    (
        dehomogenize(&pencil.big_f, chart.index(), names),
        dehomogenize(&pencil.big_g, chart.index(), names),
    )
}

/// Builds the base point record for projective coordinates `p`.
pub fn localize(pencil: &Pencil, p: [Elem; 3]) -> BasePoint {
    let k = pencil.field().clone();
    let coords = normalize(p, &k);
    let chart = owning_chart(&coords, &k);
    let (f, g) = chart_pair(pencil, chart);
    let at = affine_in(&coords, chart, &k);
    BasePoint { f_local: f.translate(&at), g_local: g.translate(&at), coords, chart }
}

fn rational_roots_or_fail(u: &UniPoly) -> Result<Vec<Elem>> {
    if u.is_zero() {
        return Err(Error::DegenerateInput("unexpected zero polynomial while solving".into()));
    }
    if u.is_constant() {
        return Ok(vec![]);
    }
    let r = univariate_roots(u)?;
    if let Some(d) = r.extension_degree {
        return Err(Error::NonRationalPoint { field: u.field().to_string(), degree: d });
    }
    Ok(r.roots.into_iter().map(|(a, _)| a).collect())
}

/// `p(x + λy, y)`.
fn shear(p: &MultiPoly, lambda: &Elem) -> MultiPoly {
    let x = p.var_like(0);
    let y = p.var_like(1);
    p.substitute(&[x.add(&y.scale(lambda)), y])
}

/// A shear making the `y`-leading coefficient of `p` a nonzero constant.
fn leading_shear(p: &MultiPoly) -> Option<Elem> {
    let k = p.field();
    let limit = k.order().map_or(64, |q| q.min(64));
    (0..limit).map(|i| k.element_at(i)).find(|l| {
        let s = shear(p, l);
        s.degree_in(1) == s.total_degree()
    })
}

/// Common zeros of two coprime affine polynomials in `x, y`.
pub fn affine_common_zeros(f: &MultiPoly, g: &MultiPoly) -> Result<Vec<[Elem; 2]>> {
    let k = f.field().clone();
    if f.is_constant() || g.is_constant() {
        return Ok(vec![]);
    }
    let (lambda, f_s, g_s) = if let Some(l) = leading_shear(f) {
        (l.clone(), shear(f, &l), shear(g, &l))
    } else if let Some(l) = leading_shear(g) {
        (l.clone(), shear(g, &l), shear(f, &l))
    } else {
        // every shear over this small field is degenerate; a quadratic
        // extension has enough elements
        return Err(Error::NonRationalPoint { field: k.to_string(), degree: 2 });
    };
    let r = resultant(&f_s, &g_s, 1)?;
    let mut out = vec![];
    for x0 in rational_roots_or_fail(&r)? {
        let a = f_s.specialize(0, &x0).to_uni(1).expect("univariate in y");
        let b = g_s.specialize(0, &x0).to_uni(1).expect("univariate in y");
        for y0 in rational_roots_or_fail(&a.gcd(&b))? {
            out.push([k.add(&x0, &k.mul(&lambda, &y0)), y0]);
        }
    }
    Ok(out)
}

/// All base points, ordered: affine points of the chart `Z ≠ 0` first (by
/// coordinates), then points on the line at infinity.
pub fn base_points(pencil: &Pencil) -> Result<Vec<BasePoint>> {
    let k = pencil.field().clone();
    let mut pts: Vec<[Elem; 3]> = affine_common_zeros(&pencil.f, &pencil.g)?
        .into_iter()
        .map(|[x, y]| [x, y, k.one()])
        .collect();
    pts.sort();

    // line at infinity: binary forms F(X, Y, 0), G(X, Y, 0)
    let at_infinity = |h: &MultiPoly| -> UniPoly {
        let inf = h.specialize(2, &k.zero());
        inf.specialize(0, &k.one()).to_uni(1).expect("univariate in Y").with_var("t")
    };
    let a = at_infinity(&pencil.big_f);
    let b = at_infinity(&pencil.big_g);
    let common = a.gcd(&b);
    if !common.is_zero() {
        for t in rational_roots_or_fail(&common)? {
            pts.push([k.one(), t, k.zero()]);
        }
    }
    let corner = [k.zero(), k.one(), k.zero()];
    if k.is_zero(&pencil.big_f.eval(&corner)) && k.is_zero(&pencil.big_g.eval(&corner)) {
        pts.push(corner);
    }
    Ok(pts.into_iter().map(|p| localize(pencil, p)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, XYZ};

    fn pencil(f: &str, g: &str, k: &Field) -> Result<Pencil> {
        make_pencil(&parse_poly(f, k, &XY)?, &parse_poly(g, k, &XY)?)
    }

    fn labels(p: &Pencil) -> Vec<String> {
        base_points(p).unwrap().iter().map(|b| b.label(p.field())).collect()
    }

    #[test]
    fn homogenized_pencils() {
        let q = Field::rationals();
        let p = pencil("x", "y", &q).unwrap();
        assert_eq!(p.degree, 1);
        assert_eq!(p.big_f, parse_poly("X", &q, &XYZ).unwrap());
        let p = pencil("y - x^2", "1", &q).unwrap();
        assert_eq!(p.big_f, parse_poly("Y*Z - X^2", &q, &XYZ).unwrap());
        assert_eq!(p.big_g, parse_poly("Z^2", &q, &XYZ).unwrap());
        assert!(matches!(pencil("x*(x+y+1)", "y*(x+y+1)", &q), Err(Error::NotCoprime(_))));
        assert_eq!(pencil("2", "3", &q).unwrap_err(), Error::BothConstant);
    }

    #[test]
    fn base_point_examples() {
        let q = Field::rationals();
        assert_eq!(labels(&pencil("x", "y", &q).unwrap()), vec!["(0:0:1)"]);
        assert_eq!(labels(&pencil("x^2", "y^2", &q).unwrap()), vec!["(0:0:1)"]);
        assert_eq!(labels(&pencil("y^2", "x^3", &q).unwrap()), vec!["(0:0:1)", "(0:1:0)"]);
        assert_eq!(labels(&pencil("y^2 - x^3", "x^3", &q).unwrap()), vec!["(0:0:1)", "(0:1:0)"]);
        assert_eq!(labels(&pencil("y - x^2", "1", &q).unwrap()), vec!["(0:1:0)"]);
    }

    #[test]
    fn affine_points_are_found_off_the_origin() {
        let q = Field::rationals();
        // parabola and line meet at (1, 1) and (-2, 4); G = (X + Y - 2Z)Z adds (0:1:0)
        let p = pencil("x^2 - y", "x + y - 2", &q).unwrap();
        let pts = base_points(&p).unwrap();
        assert_eq!(labels(&p), vec!["(1:-2:-1/2)", "(1:1:1)", "(0:1:0)"]);
        for b in &pts {
            assert!(q.is_zero(&p.big_f.eval(&b.coords)));
            assert!(q.is_zero(&p.big_g.eval(&b.coords)));
            assert!(b.f_local.vanishes_at_origin() && b.g_local.vanishes_at_origin());
        }
        assert!(matches!(
            base_points(&pencil("x^2 - 2", "y", &q).unwrap()),
            Err(Error::NonRationalPoint { degree: 2, .. })
        ));
    }

    #[test]
    fn local_pair_at_a_point_at_infinity() {
        let q = Field::rationals();
        let p = pencil("y^2", "x^3", &q).unwrap();
        let b = &base_points(&p).unwrap()[1];
        assert_eq!(b.chart, Chart::Y);
        assert_eq!(b.f_local, parse_poly("z", &q, &["x", "z"]).unwrap());
        assert_eq!(b.g_local, parse_poly("x^3", &q, &["x", "z"]).unwrap());
    }
}
