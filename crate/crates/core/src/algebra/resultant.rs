//! Sylvester resultants of bivariate polynomials, evaluated by fraction-free
//! (Bareiss) elimination over the univariate polynomial ring of the remaining
//! variable.

use super::multipoly::MultiPoly;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Coefficients of `p` in `var` as univariate polynomials in `other`
/// (`other = None` when `p` lives in a one-variable ring).
fn coeffs_in(p: &MultiPoly, var: usize, other: Option<usize>, other_name: &str) -> Vec<UniPoly> {
    p.coefficients_in(var)
        .iter()
        .map(|c| match other {
            Some(o) => c.to_uni(o).expect("bivariate input"),
            None => UniPoly::constant(p.field(), other_name, c.constant_term()),
        })
        .collect()
}

/// Determinant of a square matrix with univariate entries (Bareiss).
pub fn bareiss_determinant(mut m: Vec<Vec<UniPoly>>, zero: &UniPoly) -> UniPoly {
    let n = m.len();
    if n == 0 {
        return UniPoly::constant(zero.field(), zero.var(), zero.field().one());
    }
    let mut negate = false;
    let mut prev = UniPoly::constant(zero.field(), zero.var(), zero.field().one());
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return zero.clone(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = zero.clone();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

/// Sylvester matrix of two coefficient lists (ascending), highest coefficient first in each row.
pub fn sylvester_matrix(a: &[UniPoly], b: &[UniPoly], zero: &UniPoly) -> Vec<Vec<UniPoly>> {
    let m = a.len() - 1;
    let l = b.len() - 1;
    let n = m + l;
    let mut rows = vec![];
    for i in 0..l {
        let mut row = vec![zero.clone(); n];
        for (j, c) in a.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![zero.clone(); n];
        for (j, c) in b.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// `Res_var(f, g)` as a polynomial in the other variable of a (at most)
/// bivariate ring.
///
/// When exactly one input has degree 0 in `var`, the usual convention
/// `Res(f, c) = c^deg(f)` applies; both of degree 0 is `DegenerateInput`.
pub fn resultant(f: &MultiPoly, g: &MultiPoly, var: usize) -> Result<UniPoly> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.same_ring(g) || f.nvars() > 2 || var >= f.nvars() {
        return Err(Error::Mismatch("resultant expects two polynomials in one ring of at most two variables".into()));
    }
    let other = (0..f.nvars()).find(|&i| i != var);
    let other_name = other.map(|o| f.vars()[o].clone()).unwrap_or_else(|| "_".into());
    let a = coeffs_in(f, var, other, &other_name);
    let b = coeffs_in(g, var, other, &other_name);
    let zero = UniPoly::zero(f.field(), &other_name);
    let (m, l) = (a.len() - 1, b.len() - 1);
    match (m, l) {
        (0, 0) => Err(Error::DegenerateInput(format!(
            "neither polynomial involves {}",
            f.vars()[var]
        ))),
        (_, 0) => Ok(b[0].pow(m as u64)),
        (0, _) => Ok(a[0].pow(l as u64)),
        _ => Ok(bareiss_determinant(sylvester_matrix(&a, &b, &zero), &zero)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::Field;
    use crate::algebra::parse::parse_poly;

    fn q(s: &str) -> MultiPoly {
        parse_poly(s, &Field::rationals(), &["x", "y"]).unwrap()
    }

    fn uq(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_i64(&Field::rationals(), "x", coeffs)
    }

    /// Cofactor expansion along the first row; independent of Bareiss.
    fn laplace(m: &[Vec<UniPoly>], zero: &UniPoly) -> UniPoly {
        if m.len() == 1 {
            return m[0][0].clone();
        }
        let mut acc = zero.clone();
        for j in 0..m.len() {
            if m[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<UniPoly>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, e)| e.clone()).collect())
                .collect();
            let t = m[0][j].mul(&laplace(&minor, zero));
            acc = if j % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
        }
        acc
    }

    #[test]
    fn worked_examples() {
        assert_eq!(resultant(&q("y^2"), &q("x^3"), 1).unwrap(), uq(&[0, 0, 0, 0, 0, 0, 1]));
        assert_eq!(resultant(&q("y - x^2"), &q("y"), 1).unwrap(), uq(&[0, 0, 1]));
        assert_eq!(resultant(&q("y"), &q("y + 1"), 1).unwrap(), uq(&[1]));
        assert!(matches!(resultant(&q("x"), &q("x^2"), 1), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let pairs = [
            ("y^3 - x*y + x^2", "x*y^2 + y - 3*x"),
            ("y^2 - x^3", "x^2*y^2 + 2*y + x"),
            ("(y - x)^2*(y + 1)", "y^2 + x^2*y - 1"),
            ("x*y^4 + y", "y^3 - x^5"),
        ];
        for (f, g) in pairs {
            let (f, g) = (q(f), q(g));
            let zero = UniPoly::zero(f.field(), "x");
            let a = coeffs_in(&f, 1, Some(0), "x");
            let b = coeffs_in(&g, 1, Some(0), "x");
            let s = sylvester_matrix(&a, &b, &zero);
            assert_eq!(resultant(&f, &g, 1).unwrap(), laplace(&s, &zero));
        }
    }
}
