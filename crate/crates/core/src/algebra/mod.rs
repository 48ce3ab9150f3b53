//! Exact field arithmetic and polynomial kernels.

pub mod field;
pub mod gcd;
pub mod multipoly;
pub mod parse;
pub mod resultant;
pub mod roots;
pub mod unipoly;

pub use field::{Elem, Field, FieldDescriptor};
pub use gcd::{coprime, gcd_poly, squarefree_part};
pub use multipoly::{Monomial, MultiPoly};
pub use parse::parse_poly;
pub use resultant::resultant;
pub use roots::{univariate_roots, RootReport};
pub use unipoly::UniPoly;

use crate::error::{Error, Result};

/// Projective coordinate names.
pub const XYZ: [&str; 3] = ["X", "Y", "Z"];

/// `Z^d · f(X/Z, Y/Z)` for a bivariate `f`; homogeneous of degree `d`.
pub fn homogenize(f: &MultiPoly, d: u32) -> Result<MultiPoly> {
    assert_eq!(f.nvars(), 2, "homogenize expects a bivariate polynomial");
    let deg = f.total_degree();
    if deg > d {
        return Err(Error::DegreeTooSmall { degree: deg, target: d });
    }
    let terms = f
        .terms()
        .map(|(m, c)| (vec![m.0[0], m.0[1], d - m.degree()], c.clone()))
        .collect();
    Ok(MultiPoly::from_terms(f.field(), &XYZ, terms))
}

/// Sets coordinate `chart` (0, 1 or 2) of a ternary form to one, keeping the
/// other two coordinates in their original order.
pub fn dehomogenize(h: &MultiPoly, chart: usize, names: [&str; 2]) -> MultiPoly {
    let keep: Vec<usize> = (0..3).filter(|&i| i != chart).collect();
    let terms = h
        .terms()
        .map(|(m, c)| (vec![m.0[keep[0]], m.0[keep[1]]], c.clone()))
        .collect();
    MultiPoly::from_terms(h.field(), &names, terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> MultiPoly {
        parse_poly(s, &Field::rationals(), &["x", "y"]).unwrap()
    }

    fn big(s: &str) -> MultiPoly {
        parse_poly(s, &Field::rationals(), &XYZ).unwrap()
    }

    #[test]
    fn homogenization_examples() {
        assert_eq!(homogenize(&q("y - x^2"), 2).unwrap(), big("Y*Z - X^2"));
        assert_eq!(homogenize(&q("x"), 1).unwrap(), big("X"));
        assert_eq!(homogenize(&q("x"), 2).unwrap(), big("X*Z"));
        assert!(matches!(homogenize(&q("x^3"), 2), Err(Error::DegreeTooSmall { .. })));
        let f = q("y^2 - x^3 + 7*x - 1");
        assert_eq!(dehomogenize(&homogenize(&f, 5).unwrap(), 2, ["x", "y"]), f);
    }
}
