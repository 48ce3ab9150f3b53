//! Multivariate gcd by recursive content / primitive-part decomposition with
//! primitive pseudo-remainder sequences in the most significant variable.

use super::multipoly::MultiPoly;
use crate::error::{Error, Result};

/// Normalized gcd: monic with respect to the graded-lex leading term.
pub fn gcd_poly(f: &MultiPoly, g: &MultiPoly) -> Result<MultiPoly> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(gcd_rec(f, g).monic())
}

/// Whether `gcd(f, g)` is a unit.
pub fn coprime(f: &MultiPoly, g: &MultiPoly) -> Result<bool> {
    Ok(gcd_poly(f, g)?.is_constant())
}

/// Product of the distinct irreducible factors, monic. In characteristic `p`
/// factors whose multiplicity is a multiple of `p` are recovered through
/// `p`-th roots.
pub fn squarefree_part(f: &MultiPoly) -> Result<MultiPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Ok(f.one_like());
    }
    let derivs: Vec<MultiPoly> = (0..f.nvars()).map(|i| f.derivative(i)).filter(|d| !d.is_zero()).collect();
    if derivs.is_empty() {
        return squarefree_part(&pth_root(f));
    }
    let d = derivs.iter().fold(f.clone(), |acc, dv| gcd_rec(&acc, dv));
    let once = f.div_exact(&d).expect("gcd divides").monic();
    if d.is_constant() {
        return Ok(once);
    }
    let rest = squarefree_part(&d)?;
    let shared = gcd_rec(&once, &rest);
    Ok(once.mul(&rest).div_exact(&shared).expect("gcd divides").monic())
}

/// `f = h(x^p, y^p, ...)` in characteristic `p`; returns `h` with coefficients
/// replaced by their `p`-th roots, so that the result raised to `p` is `f`.
fn pth_root(f: &MultiPoly) -> MultiPoly {
    let k = f.field();
    let p = k.characteristic() as u32;
    let terms = f
        .terms()
        .map(|(m, c)| (m.0.iter().map(|e| e / p).collect(), k.pth_root(c)))
        .collect();
    MultiPoly::from_terms(k, &f.var_names(), terms)
}

fn main_var(f: &MultiPoly, g: &MultiPoly) -> Option<usize> {
    (0..f.nvars()).rev().find(|&i| f.degree_in(i) > 0 || g.degree_in(i) > 0)
}

fn gcd_rec(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() {
        return f.monic();
    }
    let Some(v) = main_var(f, g) else {
        return f.one_like();
    };
    let cf = content(f, v);
    let cg = content(g, v);
    let c = gcd_rec(&cf, &cg);
    let pf = f.div_exact(&cf).expect("content divides");
    let pg = g.div_exact(&cg).expect("content divides");
    if pf.degree_in(v) == 0 || pg.degree_in(v) == 0 {
        return c;
    }
    let (mut a, mut b) = if pf.degree_in(v) >= pg.degree_in(v) { (pf, pg) } else { (pg, pf) };
    loop {
        let r = pseudo_remainder(&a, &b, v);
        if r.is_zero() {
            return c.mul(&primitive_part(&b, v));
        }
        if r.degree_in(v) == 0 {
            return c;
        }
        a = b;
        b = primitive_part(&r, v).monic();
    }
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
pub(crate) fn content(p: &MultiPoly, v: usize) -> MultiPoly {
    let mut acc: Option<MultiPoly> = None;
    for c in p.coefficients_in(v).into_iter().filter(|c| !c.is_zero()) {
        acc = Some(match acc {
            None => c.monic(),
            Some(a) => gcd_rec(&a, &c),
        });
        if acc.as_ref().is_some_and(|a| a.is_constant()) {
            return p.one_like();
        }
    }
    acc.unwrap_or_else(|| p.one_like())
}

fn primitive_part(p: &MultiPoly, v: usize) -> MultiPoly {
    p.div_exact(&content(p, v)).expect("content divides")
}

fn pseudo_remainder(a: &MultiPoly, b: &MultiPoly, v: usize) -> MultiPoly {
    let db = b.degree_in(v);
    let lc_b = b.coefficients_in(v).pop().unwrap();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lc_r = r.coefficients_in(v).pop().unwrap();
        let mut e = vec![0; r.nvars()];
        e[v] = dr - db;
        let shift = r.monomial_like(&e, r.field().one());
        r = r.mul(&lc_b).sub(&lc_r.mul(&shift).mul(b));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::Field;
    use crate::algebra::parse::parse_poly;

    fn q(s: &str) -> MultiPoly {
        parse_poly(s, &Field::rationals(), &["x", "y"]).unwrap()
    }

    #[test]
    fn worked_examples() {
        let f0 = q("y^2 + x");
        let g0 = q("x^3 - y");
        let g = gcd_poly(&q("x").mul(&f0), &q("x").mul(&g0)).unwrap();
        assert_eq!(g, q("x"));
        assert_eq!(gcd_poly(&q("x"), &q("y")).unwrap(), q("1"));
        assert_eq!(gcd_poly(&q("y^2 - x^3"), &q("x^3")).unwrap(), q("1"));
        assert_eq!(gcd_poly(&q("0"), &q("x")), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn squarefree_parts() {
        let f = q("x^3*(y - x^2)^2*(x + y + 1)");
        assert_eq!(squarefree_part(&f).unwrap(), q("x*(y - x^2)*(x + y + 1)").monic());
        let f3 = Field::prime(3).unwrap();
        let p = |s: &str| parse_poly(s, &f3, &["x", "y"]).unwrap();
        assert_eq!(squarefree_part(&p("(x + y)^3*y^2")).unwrap(), p("(x + y)*y").monic());
        assert_eq!(squarefree_part(&p("x^9 + y^3")).unwrap(), p("x^3 + y").monic());
    }

    #[test]
    fn recovers_planted_common_factor() {
        let h = q("x*y - y^2 + 3");
        let a = q("x^2 + y + 1").mul(&h);
        let b = q("y^3 - x").mul(&h).mul(&h);
        assert_eq!(gcd_poly(&a, &b).unwrap(), h.monic());
        let t = parse_poly("x*y + z^2", &Field::rationals(), &["x", "y", "z"]).unwrap();
        let u = parse_poly("x - z", &Field::rationals(), &["x", "y", "z"]).unwrap();
        let v = parse_poly("y + z", &Field::rationals(), &["x", "y", "z"]).unwrap();
        assert_eq!(gcd_poly(&t.mul(&u), &t.mul(&v)).unwrap(), t.monic());
    }
}
